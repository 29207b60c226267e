//! Parameters of the finite simple groups of Lie type and the closed-form
//! order formulas built on them.
//!
//! Every family is stored with its positive-root count `M`, the divisor `d(q)`
//! and the leading term of the minimal nontrivial representation degree.
//! Untwisted families also carry the degrees of the basic Weyl invariants and
//! the Weyl group order; those two are cross-checked on construction
//! (`sum(degrees) = M + l`, `product(degrees) = |W|`) and a row failing either
//! check panics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedE6,
    TrialityD4,
    SuzukiB2,
    ReeG2,
    ReeF4,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::A,
        Family::TwistedA,
        Family::B,
        Family::C,
        Family::D,
        Family::TwistedD,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::TwistedE6,
        Family::TrialityD4,
        Family::SuzukiB2,
        Family::ReeG2,
        Family::ReeF4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::TwistedA => "2A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::TwistedD => "2D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::TwistedE6 => "2E6",
            Family::TrialityD4 => "3D4",
            Family::SuzukiB2 => "2B2",
            Family::ReeG2 => "2G2",
            Family::ReeF4 => "2F4",
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(
            self,
            Family::TwistedA
                | Family::TwistedD
                | Family::TwistedE6
                | Family::TrialityD4
                | Family::SuzukiB2
                | Family::ReeG2
                | Family::ReeF4
        )
    }

    /// Ranks admitted by the table. Twisted rows are indexed by the rank of
    /// the untwisted root system they are built from.
    fn admits_rank(self, l: u32) -> bool {
        match self {
            Family::A => l >= 1,
            Family::TwistedA | Family::C => l >= 2,
            Family::B => l >= 3,
            Family::D | Family::TwistedD => l >= 4,
            Family::G2 | Family::SuzukiB2 | Family::ReeG2 => l == 2,
            Family::F4 | Family::TrialityD4 | Family::ReeF4 => l == 4,
            Family::E6 | Family::TwistedE6 => l == 6,
            Family::E7 => l == 7,
            Family::E8 => l == 8,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let t = s.trim().to_ascii_uppercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == t)
            .ok_or_else(|| Error::InvalidLieRow {
                family: s.to_string(),
                rank: 0,
            })
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One row of the parameter table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieParams {
    pub family: Family,
    pub rank: u32,
    pub positive_roots: u32,
    /// Degrees of the basic polynomial invariants of the Weyl group; `None`
    /// for twisted families.
    pub degrees: Option<Vec<u32>>,
    pub weyl_order: Option<BigUint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVariant {
    /// The simple group `G/Z(G)`.
    Simple,
    /// The simply connected cover (for family A, `SL_{l+1}(q)`).
    Universal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderBreakdown {
    #[serde(serialize_with = "ser_big")]
    pub group_order: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub sylow_order: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub torus_order: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub borel_order: BigUint,
}

/// Serializes a big integer as a JSON number when it fits in `u64`, as a
/// decimal string otherwise.
pub fn ser_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticRatios {
    pub group: BigRational,
    pub torus: BigRational,
    pub borel: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EBoundMode {
    Asymptotic,
    Safe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EBound {
    Value(BigUint),
    /// `q` is below the configured threshold for the asymptotic formula.
    BelowThreshold {
        q: u64,
        q0: u64,
    },
}

/// Per-family thresholds above which the asymptotic `e(G)` formula is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thresholds {
    pub default_q0: u64,
    pub per_family: BTreeMap<Family, u64>,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            default_q0: 11,
            per_family: BTreeMap::new(),
        }
    }
}

impl Thresholds {
    pub fn q0(&self, family: Family) -> u64 {
        self.per_family.get(&family).copied().unwrap_or(self.default_q0)
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn big(q: u64) -> BigUint {
    BigUint::from(q)
}

pub fn params_for(family: Family, l: u32) -> Result<LieParams> {
    if !family.admits_rank(l) {
        return Err(Error::InvalidLieRow {
            family: family.name().to_string(),
            rank: l,
        });
    }
    let positive_roots = match family {
        Family::A | Family::TwistedA => l * (l + 1) / 2,
        Family::B | Family::C => l * l,
        Family::D | Family::TwistedD => l * (l - 1),
        Family::G2 => 6,
        Family::F4 => 24,
        Family::E6 | Family::TwistedE6 => 36,
        Family::E7 => 63,
        Family::E8 => 120,
        Family::TrialityD4 => 12,
        Family::SuzukiB2 => 4,
        Family::ReeG2 => 6,
        Family::ReeF4 => 24,
    };
    let (degrees, weyl_order): (Option<Vec<u32>>, Option<BigUint>) = match family {
        Family::A => (Some((2..=l + 1).collect()), Some(factorial(l + 1))),
        Family::B | Family::C => (
            Some((1..=l).map(|i| 2 * i).collect()),
            Some(BigUint::from(2u32).pow(l) * factorial(l)),
        ),
        Family::D => {
            let mut d: Vec<u32> = (1..l).map(|i| 2 * i).collect();
            d.push(l);
            (Some(d), Some(BigUint::from(2u32).pow(l - 1) * factorial(l)))
        }
        Family::G2 => (Some(vec![2, 6]), Some(big(12))),
        Family::F4 => (Some(vec![2, 6, 8, 12]), Some(big(1152))),
        Family::E6 => (Some(vec![2, 5, 6, 8, 9, 12]), Some(big(51_840))),
        Family::E7 => (Some(vec![2, 6, 8, 10, 12, 14, 18]), Some(big(2_903_040))),
        Family::E8 => (Some(vec![2, 8, 12, 14, 18, 20, 24, 30]), Some(big(696_729_600))),
        _ => (None, None),
    };
    let params = LieParams {
        family,
        rank: l,
        positive_roots,
        degrees,
        weyl_order,
    };
    if let (Some(degs), Some(w)) = (&params.degrees, &params.weyl_order) {
        let sum: u32 = degs.iter().sum();
        assert_eq!(
            sum,
            positive_roots + l,
            "degree sum check failed for {family}_{l}"
        );
        let prod: BigUint = degs.iter().map(|&x| BigUint::from(x)).product();
        assert_eq!(&prod, w, "degree product check failed for {family}_{l}");
    }
    Ok(params)
}

/// All rows of the table at their smallest admissible rank, plus `A_2`, `A_3`.
pub fn all_rows() -> Vec<LieParams> {
    let mut rows: Vec<LieParams> = Family::ALL
        .into_iter()
        .map(|f| {
            let l = (1..=8).find(|&l| f.admits_rank(l)).unwrap();
            params_for(f, l).unwrap()
        })
        .collect();
    rows.insert(1, params_for(Family::A, 2).unwrap());
    rows.insert(2, params_for(Family::A, 3).unwrap());
    rows
}

impl LieParams {
    pub fn is_twisted(&self) -> bool {
        self.family.is_twisted()
    }

    /// Human readable formula for `d`.
    pub fn d_formula(&self) -> &'static str {
        match self.family {
            Family::A => "(l+1, q-1)",
            Family::TwistedA => "(l+1, q+1)",
            Family::B | Family::C | Family::E7 => "(2, q-1)",
            Family::D => "(4, q^l-1)",
            Family::TwistedD => "(4, q^l+1)",
            Family::E6 => "(3, q-1)",
            Family::TwistedE6 => "(3, q+1)",
            _ => "1",
        }
    }

    pub fn d(&self, q: u64) -> u64 {
        let l = self.rank as u64;
        let q_pow_l_mod4 = |q: u64| (0..l).fold(1u64, |acc, _| acc * (q % 4) % 4);
        match self.family {
            Family::A => (l + 1).gcd(&(q - 1)),
            Family::TwistedA => (l + 1).gcd(&(q + 1)),
            Family::B | Family::C | Family::E7 => 2u64.gcd(&(q - 1)),
            Family::D => 4u64.gcd(&((q_pow_l_mod4(q) + 3) % 4)),
            Family::TwistedD => 4u64.gcd(&((q_pow_l_mod4(q) + 1) % 4)),
            Family::E6 => 3u64.gcd(&(q - 1)),
            Family::TwistedE6 => 3u64.gcd(&(q + 1)),
            _ => 1,
        }
    }

    pub fn weyl_order_u64(&self) -> Option<u64> {
        self.weyl_order.as_ref().and_then(|w| w.to_u64())
    }

    /// Leading term of the minimal degree of a nontrivial representation.
    pub fn e_formula(&self) -> &'static str {
        match self.family {
            Family::A if self.rank == 1 => "q/(2, q-1)",
            Family::A | Family::TwistedA => "q^l",
            Family::B => "q^(2l-2)",
            Family::C => "q^l/2 (q odd); q^(2l-1)/2 (q even)",
            Family::D | Family::TwistedD => "q^(2l-3)",
            Family::G2 => "q^3",
            Family::F4 => "q^8 (q odd); q^11/2 (q even)",
            Family::E6 | Family::TwistedE6 => "q^11",
            Family::E7 => "q^17",
            Family::E8 => "q^29",
            Family::TrialityD4 => "q^5",
            Family::SuzukiB2 => "q^3/sqrt(2)",
            Family::ReeG2 => "q^4",
            Family::ReeF4 => "q^11/sqrt(2)",
        }
    }

    /// Floor of the asymptotic `e(G)` formula at `q`.
    pub fn e_asymptotic(&self, q: u64) -> BigUint {
        let l = self.rank;
        let qq = big(q);
        let odd = q % 2 == 1;
        let over_sqrt2 = |e: u32| (qq.pow(2 * e) / 2u32).sqrt();
        match self.family {
            Family::A if l == 1 => qq / big(2u64.gcd(&(q - 1))),
            Family::A | Family::TwistedA => qq.pow(l),
            Family::B => qq.pow(2 * l - 2),
            Family::C if odd => qq.pow(l) / 2u32,
            Family::C => qq.pow(2 * l - 1) / 2u32,
            Family::D | Family::TwistedD => qq.pow(2 * l - 3),
            Family::G2 => qq.pow(3),
            Family::F4 if odd => qq.pow(8),
            Family::F4 => qq.pow(11) / 2u32,
            Family::E6 | Family::TwistedE6 => qq.pow(11),
            Family::E7 => qq.pow(17),
            Family::E8 => qq.pow(29),
            Family::TrialityD4 => qq.pow(5),
            Family::SuzukiB2 => over_sqrt2(3),
            Family::ReeG2 => qq.pow(4),
            Family::ReeF4 => over_sqrt2(11),
        }
    }

    fn check_untwisted(&self, q: u64) -> Result<()> {
        if self.is_twisted() {
            return Err(Error::TwistedUnsupported(self.family.name().to_string()));
        }
        prime_power(q)?;
        if self.family == Family::B && q.is_multiple_of(2) {
            return Err(Error::FieldRestriction {
                family: "B_l".into(),
                requirement: "q odd",
            });
        }
        Ok(())
    }

    pub fn order_exact(&self, q: u64, variant: OrderVariant) -> Result<OrderBreakdown> {
        self.check_untwisted(q)?;
        let degs = self.degrees.as_ref().expect("untwisted rows carry degrees");
        let qq = big(q);
        let d = match variant {
            OrderVariant::Simple => big(self.d(q)),
            OrderVariant::Universal => BigUint::one(),
        };
        let sylow = qq.pow(self.positive_roots);
        let mut group = sylow.clone();
        for &di in degs {
            group *= qq.pow(di) - 1u32;
        }
        let group = group / &d;
        let torus = big(q - 1).pow(self.rank) / &d;
        let borel = &sylow * &torus;
        Ok(OrderBreakdown {
            group_order: group,
            sylow_order: sylow,
            torus_order: torus,
            borel_order: borel,
        })
    }

    /// Ratios of the simple-group orders to their leading terms
    /// `q^(2M+l)/d`, `q^l/d`, `q^(M+l)/d`.
    pub fn asym_check(&self, q: u64) -> Result<AsymptoticRatios> {
        let o = self.order_exact(q, OrderVariant::Simple)?;
        let d = big(self.d(q));
        let qq = big(q);
        let (m, l) = (self.positive_roots, self.rank);
        let ratio = |num: &BigUint, lead: BigUint| BigRational::new((num * &d).into(), lead.into());
        Ok(AsymptoticRatios {
            group: ratio(&o.group_order, qq.pow(2 * m + l)),
            torus: ratio(&o.torus_order, qq.pow(l)),
            borel: ratio(&o.borel_order, qq.pow(m + l)),
        })
    }

    /// Density of the big Bruhat cell, `|B|^2 / (|G| |H|)`.
    pub fn big_cell_fraction(&self, q: u64) -> Result<BigRational> {
        let o = self.order_exact(q, OrderVariant::Simple)?;
        let num = &o.borel_order * &o.borel_order;
        let den = &o.group_order * &o.torus_order;
        Ok(BigRational::new(num.into(), den.into()))
    }

    pub fn e_lower_bound(&self, q: u64, mode: EBoundMode, thresholds: &Thresholds) -> Result<EBound> {
        match mode {
            EBoundMode::Safe => Ok(EBound::Value(big(2))),
            EBoundMode::Asymptotic => {
                if q < 2 {
                    return Err(Error::NotPrimePower(q));
                }
                let q0 = thresholds.q0(self.family);
                if q < q0 {
                    return Ok(EBound::BelowThreshold { q, q0 });
                }
                Ok(EBound::Value(self.e_asymptotic(q)))
            }
        }
    }
}

/// Serializable view of a table row, optionally evaluated at `q`.
#[derive(Debug, Clone, Serialize)]
pub struct ParamsRow {
    pub family: Family,
    pub rank: u32,
    pub positive_roots: u32,
    pub d: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_value: Option<u64>,
    pub degrees: Option<Vec<u32>>,
    pub weyl_order: Option<String>,
    pub e_asymptotic: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_asymptotic_value: Option<String>,
    pub twisted: bool,
}

impl ParamsRow {
    pub fn new(p: &LieParams, q: Option<u64>) -> ParamsRow {
        ParamsRow {
            family: p.family,
            rank: p.rank,
            positive_roots: p.positive_roots,
            d: p.d_formula(),
            d_value: q.map(|q| p.d(q)),
            degrees: p.degrees.clone(),
            weyl_order: p.weyl_order.as_ref().map(|w| w.to_string()),
            e_asymptotic: p.e_formula(),
            e_asymptotic_value: q.map(|q| p.e_asymptotic(q).to_string()),
            twisted: p.is_twisted(),
        }
    }
}

/// Exponent gap `(2M + l/2) t - ((2M + l) t - l (t - 2))`, doubled so it
/// stays integral. Positive exactly when the five-block argument closes.
pub fn block_exponent_gap_doubled(params: &LieParams, t: u32) -> i64 {
    let (m, l, t) = (params.positive_roots as i64, params.rank as i64, t as i64);
    let lhs = (4 * m + l) * t;
    let rhs = 2 * ((2 * m + l) * t - l * (t - 2));
    lhs - rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn table_rows() {
        let a1 = params_for(Family::A, 1).unwrap();
        assert_eq!(a1.positive_roots, 1);
        assert_eq!(a1.weyl_order_u64(), Some(2));
        assert_eq!(a1.d(5), 2);
        assert_eq!(a1.d(4), 1);
        let g2 = params_for(Family::G2, 2).unwrap();
        assert_eq!((g2.positive_roots, g2.d(7)), (6, 1));
        let e8 = params_for(Family::E8, 8).unwrap();
        assert_eq!((e8.positive_roots, e8.d(5)), (120, 1));
        assert_eq!(params_for(Family::D, 4).unwrap().d(3), 4);
        assert_eq!(params_for(Family::D, 5).unwrap().d(3), 2);
        assert_eq!(params_for(Family::TwistedD, 5).unwrap().d(3), 4);
    }

    #[test]
    fn invalid_rows() {
        assert!(params_for(Family::B, 2).is_err());
        assert!(params_for(Family::D, 3).is_err());
        assert!(params_for(Family::G2, 3).is_err());
        assert!(params_for(Family::A, 0).is_err());
        assert!("X7".parse::<Family>().is_err());
        assert_eq!("2e6".parse::<Family>().unwrap(), Family::TwistedE6);
    }

    #[test]
    fn all_sixteen_families_stored() {
        let rows = all_rows();
        assert_eq!(rows.len(), 18);
        for f in Family::ALL {
            let r = rows.iter().find(|r| r.family == f).unwrap();
            assert_eq!(r.degrees.is_some(), !f.is_twisted());
        }
    }

    #[test]
    fn degree_invariants_hold_for_a_range_of_ranks() {
        for l in 1..12 {
            params_for(Family::A, l).unwrap();
        }
        for l in 2..12 {
            params_for(Family::C, l).unwrap();
        }
        for l in 4..12 {
            params_for(Family::D, l).unwrap();
        }
    }

    #[test]
    fn small_orders() {
        let a1 = params_for(Family::A, 1).unwrap();
        assert_eq!(
            a1.order_exact(5, OrderVariant::Simple).unwrap().group_order,
            big(60)
        );
        assert_eq!(
            a1.order_exact(3, OrderVariant::Universal).unwrap().group_order,
            big(24)
        );
        let a2 = params_for(Family::A, 2).unwrap();
        let o = a2.order_exact(2, OrderVariant::Simple).unwrap();
        assert_eq!(
            (o.group_order, o.sylow_order, o.torus_order),
            (big(168), big(8), big(1))
        );
        let a1u = a1.order_exact(5, OrderVariant::Universal).unwrap();
        assert_eq!(a1u.torus_order, big(4));
    }

    #[test]
    fn simple_times_center_is_universal() {
        for l in 1..=3 {
            let p = params_for(Family::A, l).unwrap();
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 64] {
                let s = p.order_exact(q, OrderVariant::Simple).unwrap();
                let u = p.order_exact(q, OrderVariant::Universal).unwrap();
                assert_eq!(s.group_order * big(p.d(q)), u.group_order);
                assert_eq!(&s.borel_order, &(&s.sylow_order * &s.torus_order));
            }
        }
    }

    #[test]
    fn order_errors() {
        let t = params_for(Family::TwistedA, 2).unwrap();
        assert!(matches!(
            t.order_exact(4, OrderVariant::Simple),
            Err(Error::TwistedUnsupported(_))
        ));
        let a = params_for(Family::A, 1).unwrap();
        assert!(matches!(
            a.order_exact(6, OrderVariant::Simple),
            Err(Error::NotPrimePower(6))
        ));
        let b = params_for(Family::B, 3).unwrap();
        assert!(b.order_exact(4, OrderVariant::Simple).is_err());
        assert!(b.order_exact(3, OrderVariant::Simple).is_ok());
    }

    #[test]
    fn asymptotic_ratios() {
        let a1 = params_for(Family::A, 1).unwrap();
        let r = a1.asym_check(3).unwrap();
        assert_eq!(r.group, rat(8, 9));
        assert_eq!(r.borel, r.torus);
        // |B| ratio = |H| ratio since |U| = q^M exactly.
        let mut prev = rat(0, 1);
        for q in [3u64, 5, 7, 9, 11, 13] {
            let g = a1.asym_check(q).unwrap().group;
            assert!(g > prev && g < rat(1, 1));
            prev = g;
        }
    }

    #[test]
    fn big_cell_fractions() {
        let a1 = params_for(Family::A, 1).unwrap();
        assert_eq!(a1.big_cell_fraction(3).unwrap(), rat(3, 4));
        assert_eq!(a1.big_cell_fraction(7).unwrap(), rat(7, 8));
        let a2 = params_for(Family::A, 2).unwrap();
        // |B| = 8, |G| = 168, |H| = 1.
        assert_eq!(a2.big_cell_fraction(2).unwrap(), rat(64, 168));
        for l in 1..=3 {
            let p = params_for(Family::A, l).unwrap();
            let mut prev = rat(0, 1);
            for q in [3u64, 4, 5, 7, 9, 11, 13, 16] {
                let f = p.big_cell_fraction(q).unwrap();
                assert!(f > prev && f < rat(1, 1), "l={l} q={q}");
                prev = f;
            }
        }
    }

    #[test]
    fn e_bounds() {
        let th = Thresholds::default();
        let a1 = params_for(Family::A, 1).unwrap();
        assert_eq!(
            a1.e_lower_bound(13, EBoundMode::Asymptotic, &th).unwrap(),
            EBound::Value(big(6))
        );
        assert_eq!(
            a1.e_lower_bound(5, EBoundMode::Safe, &th).unwrap(),
            EBound::Value(big(2))
        );
        let a2 = params_for(Family::A, 2).unwrap();
        assert_eq!(
            a2.e_lower_bound(4, EBoundMode::Asymptotic, &th).unwrap(),
            EBound::BelowThreshold { q: 4, q0: 11 }
        );
        let mut low = Thresholds::default();
        low.per_family.insert(Family::A, 2);
        assert_eq!(
            a2.e_lower_bound(4, EBoundMode::Asymptotic, &low).unwrap(),
            EBound::Value(big(16))
        );
        let sz = params_for(Family::SuzukiB2, 2).unwrap();
        // floor(8^3 / sqrt 2) = floor(362.03..)
        assert_eq!(sz.e_asymptotic(8), big(362));
    }

    #[test]
    fn asymptotic_e_exceeds_q_to_the_l_over_3() {
        let rows = all_rows();
        for q in [11u64, 13, 16, 25, 27, 32, 49, 64] {
            for p in &rows {
                let lhs = p.e_asymptotic(q) * 3u32;
                assert!(lhs > big(q).pow(p.rank), "{}_{} at q={q}", p.family, p.rank);
            }
        }
    }

    #[test]
    fn five_blocks_is_the_first_that_works() {
        for p in all_rows().iter().filter(|p| !p.is_twisted()) {
            for t in 1..=20 {
                assert_eq!(block_exponent_gap_doubled(p, t) > 0, t > 4);
            }
        }
    }
}
