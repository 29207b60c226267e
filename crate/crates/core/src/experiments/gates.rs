//! Pass thresholds for the Monte Carlo checks, read from `key = value` text.

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Gates {
    /// Width of the binomial band, in standard errors.
    pub sigma_band: f64,
    /// Minimum fraction of sampled triples meeting the triple-product bound.
    pub triple_fraction_min: f64,
    /// Minimum coverage fraction, applied only when `k == coverage_k`.
    pub coverage_min: f64,
    pub coverage_k: usize,
    /// Lower bound used for the minimal representation degree.
    pub rep_bound: u64,
    pub work_cap: u128,
    pub enum_cap: u128,
    /// Threshold q0 for the asymptotic representation-degree formulas.
    pub lie_q0: u64,
}

impl Default for Gates {
    fn default() -> Self {
        Gates {
            sigma_band: 3.0,
            triple_fraction_min: 0.9,
            coverage_min: 0.95,
            coverage_k: 11,
            rep_bound: 2,
            work_cap: crate::setprod::DEFAULT_WORK_CAP,
            enum_cap: crate::matgroup::DEFAULT_ENUM_CAP,
            lie_q0: 11,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Gates(format!("bad value {value:?} for {key}")))
}

/// Integers may be written as `1e9`.
fn parse_count(key: &str, value: &str) -> Result<u128> {
    if let Ok(v) = value.parse::<u128>() {
        return Ok(v);
    }
    let f: f64 = parse(key, value)?;
    if f < 0.0 || f.fract() != 0.0 {
        return Err(Error::Gates(format!("{key} must be a nonnegative integer")));
    }
    Ok(f as u128)
}

impl Gates {
    /// Applies overrides from `key = value` lines; `#` starts a comment.
    pub fn apply(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Gates(format!("line {}: expected key = value", lineno + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "sigma_band" => self.sigma_band = parse(key, value)?,
            "triple_fraction_min" => self.triple_fraction_min = parse(key, value)?,
            "coverage_min" => self.coverage_min = parse(key, value)?,
            "coverage_k" => self.coverage_k = parse(key, value)?,
            "rep_bound" => self.rep_bound = parse(key, value)?,
            "work_cap" => self.work_cap = parse_count(key, value)?,
            "enum_cap" => self.enum_cap = parse_count(key, value)?,
            "lie_q0" => self.lie_q0 = parse(key, value)?,
            other => return Err(Error::Gates(format!("unknown gate {other:?}"))),
        }
        if self.rep_bound == 0 {
            return Err(Error::Gates("rep_bound must be at least 1".into()));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Gates> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Gates(format!("{}: {e}", path.display())))?;
        let mut g = Gates::default();
        g.apply(&text)?;
        Ok(g)
    }
}

impl FromStr for Gates {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gates> {
        let mut g = Gates::default();
        g.apply(s)?;
        Ok(g)
    }
}
