//! The product-covering criterion: if `∏ |A_i| >= |G|^t / k^(t-2)`, where
//! `k` bounds the minimal degree of a nontrivial representation from
//! below, then `A_1 ⋯ A_t = G`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lietype::{block_exponent_gap_doubled, Family, LieParams};

fn as_string<T: ToString, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BnpCheck {
    #[serde(serialize_with = "as_string")]
    pub lhs: BigUint,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigRational,
    pub holds: bool,
}

pub fn bnp_criterion(sizes: &[u64], group_order: u128, rep_bound: u64, t: usize) -> Result<BnpCheck> {
    if t == 0 || t != sizes.len() {
        return Err(Error::Degenerate(format!(
            "t = {t} but {} sizes given",
            sizes.len()
        )));
    }
    if rep_bound == 0 {
        return Err(Error::Degenerate("rep_bound must be at least 1".into()));
    }
    let lhs: BigUint = sizes.iter().map(|&s| BigUint::from(s)).product();
    let g = BigInt::from(group_order).pow(t as u32);
    let k = BigInt::from(rep_bound);
    let rhs = if t >= 2 {
        BigRational::new(g, k.pow(t as u32 - 2))
    } else {
        BigRational::from_integer(g * k)
    };
    let holds = BigRational::from_integer(BigInt::from(lhs.clone())) >= rhs;
    Ok(BnpCheck { lhs, rhs, holds })
}

/// `(2M + l/2) t` against `(2M + l) t - l (t - 2)`: the exponents of `q`
/// on the two sides of the criterion when every block has the typical
/// triple-product size and the degree bound is about `q^l`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentCheck {
    pub family: Family,
    pub rank: u32,
    pub t: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub fn exponent_check(params: &LieParams, t: u32) -> ExponentCheck {
    let (m, l, tf) = (params.positive_roots as f64, params.rank as f64, t as f64);
    ExponentCheck {
        family: params.family,
        rank: params.rank,
        t,
        lhs: (2.0 * m + l / 2.0) * tf,
        rhs: (2.0 * m + l) * tf - l * (tf - 2.0),
        holds: block_exponent_gap_doubled(params, t) > 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lietype::{all_rows, params_for};

    #[test]
    fn full_blocks_always_hold() {
        // t = 1 is the exception: it asks for |A| >= k |G|
        for t in 2..=6 {
            for k in 1..=4 {
                assert!(bnp_criterion(&vec![60; t], 60, k, t).unwrap().holds);
            }
        }
        let c = bnp_criterion(&[60; 5], 60, 1, 5).unwrap();
        assert_eq!(BigRational::from_integer(BigInt::from(c.lhs)), c.rhs);
    }

    #[test]
    fn rep_bound_one_needs_full_blocks() {
        assert!(!bnp_criterion(&[60, 60, 60, 60, 59], 60, 1, 5).unwrap().holds);
    }

    #[test]
    fn exact_boundary() {
        // 168^5 / 2^3 = 168^4 * 21
        let exact = [168, 168, 168, 168, 21];
        assert!(bnp_criterion(&exact, 168, 2, 5).unwrap().holds);
        assert!(!bnp_criterion(&[168, 168, 168, 168, 20], 168, 2, 5).unwrap().holds);
        // t = 1 reads |A| >= k |G|
        assert!(!bnp_criterion(&[60], 60, 2, 1).unwrap().holds);
        assert!(bnp_criterion(&[60], 60, 1, 1).unwrap().holds);
    }

    #[test]
    fn bad_arguments() {
        assert!(bnp_criterion(&[1, 2], 60, 2, 3).is_err());
        assert!(bnp_criterion(&[], 60, 2, 0).is_err());
        assert!(bnp_criterion(&[60], 60, 0, 1).is_err());
    }

    #[test]
    fn exponent_threshold_is_four() {
        for p in all_rows().iter().filter(|p| !p.is_twisted()) {
            for t in 1..=12 {
                let c = exponent_check(p, t);
                assert_eq!(c.holds, t > 4, "{:?} {} t={t}", p.family, p.rank);
                assert_eq!(c.holds, c.lhs > c.rhs);
            }
        }
        let c = exponent_check(&params_for(Family::A, 1).unwrap(), 5);
        assert_eq!((c.lhs, c.rhs), (12.5, 12.0));
    }
}
