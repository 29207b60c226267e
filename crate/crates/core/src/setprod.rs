//! Exact product sets over packed group elements.
//!
//! An [`ElemSet`] is a hash set of canonical packed codes tied to one
//! [`GroupSpec`]. Products decode both operands once, multiply every pair and
//! insert the canonical code of the result. The left operand is split into
//! chunks that may be processed in parallel; partial sets are merged by
//! union, so the result does not depend on scheduling.

use std::fmt;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matgroup::{GroupSpec, Mat};

/// Default cap on pair multiplications for one product chain.
pub const DEFAULT_WORK_CAP: u128 = 1_000_000_000;

#[derive(Clone)]
pub struct ElemSet {
    spec: GroupSpec,
    elems: FxHashSet<u128>,
}

impl PartialEq for ElemSet {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.elems == other.elems
    }
}

impl Eq for ElemSet {}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElemSet({}, {} elements)", self.spec.name(), self.elems.len())
    }
}

impl ElemSet {
    pub fn empty(spec: &GroupSpec) -> ElemSet {
        ElemSet {
            spec: spec.clone(),
            elems: FxHashSet::default(),
        }
    }

    pub fn singleton(spec: &GroupSpec, m: &Mat) -> ElemSet {
        ElemSet::from_mats(spec, std::iter::once(m))
    }

    /// Canonicalizes each matrix on insertion.
    pub fn from_mats<'a>(spec: &GroupSpec, mats: impl IntoIterator<Item = &'a Mat>) -> ElemSet {
        let elems = mats.into_iter().map(|m| spec.canonical_pack(m)).collect();
        ElemSet {
            spec: spec.clone(),
            elems,
        }
    }

    /// Codes must already be canonical.
    pub fn from_packed(spec: &GroupSpec, codes: impl IntoIterator<Item = u128>) -> ElemSet {
        ElemSet {
            spec: spec.clone(),
            elems: codes.into_iter().collect(),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.elems.contains(&self.spec.canonical_pack(m))
    }

    pub fn contains_packed(&self, code: u128) -> bool {
        self.elems.contains(&code)
    }

    pub fn insert(&mut self, m: &Mat) -> bool {
        self.elems.insert(self.spec.canonical_pack(m))
    }

    pub fn packed(&self) -> impl Iterator<Item = u128> + '_ {
        self.elems.iter().copied()
    }

    pub fn sorted_packed(&self) -> Vec<u128> {
        let mut v: Vec<u128> = self.packed().collect();
        v.sort_unstable();
        v
    }

    /// Members as matrices, in packed-code order.
    pub fn mats(&self) -> Vec<Mat> {
        self.sorted_packed()
            .into_iter()
            .map(|c| self.spec.unpack(c))
            .collect()
    }

    /// Whether the set has reached the predicted group order.
    pub fn is_full_group(&self) -> bool {
        self.len() as u128 == self.spec.order()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.elems.is_subset(&other.elems)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let elems = self.elems.intersection(&other.elems).copied().collect();
        ElemSet {
            spec: self.spec.clone(),
            elems,
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut elems = self.elems.clone();
        elems.extend(other.elems.iter().copied());
        ElemSet {
            spec: self.spec.clone(),
            elems,
        }
    }

    /// `{g^-1 a g}`.
    pub fn conjugate(&self, g: &Mat) -> ElemSet {
        let gi = self.spec.inv_raw(g).expect("invertible conjugator");
        let elems = self
            .packed()
            .map(|c| {
                let a = self.spec.unpack(c);
                self.spec
                    .canonical_pack(&self.spec.mul_raw(&self.spec.mul_raw(&gi, &a), g))
            })
            .collect();
        ElemSet {
            spec: self.spec.clone(),
            elems,
        }
    }
}

pub fn inverse_set(a: &ElemSet) -> ElemSet {
    let spec = a.spec();
    ElemSet::from_packed(
        spec,
        a.packed()
            .map(|c| spec.canonical_pack(&spec.inv(&spec.unpack(c)))),
    )
}

/// `{a g : a in A}`.
pub fn times_element(a: &ElemSet, g: &Mat) -> ElemSet {
    let spec = a.spec();
    ElemSet::from_packed(
        spec,
        a.packed()
            .map(|c| spec.canonical_pack(&spec.mul_raw(&spec.unpack(c), g))),
    )
}

/// Product-set engine with a cap on pair multiplications.
#[derive(Debug, Clone, Copy)]
pub struct Engine {
    pub work_cap: u128,
    pub exec: Exec,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            work_cap: DEFAULT_WORK_CAP,
            exec: Exec::default(),
        }
    }
}

impl Engine {
    pub fn new(work_cap: u128, exec: Exec) -> Engine {
        Engine { work_cap, exec }
    }

    pub fn with_exec(self, exec: Exec) -> Engine {
        Engine { exec, ..self }
    }

    pub fn product(&self, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
        let mut budget = self.work_cap;
        self.product_within(a, b, &mut budget)
    }

    fn product_within(&self, a: &ElemSet, b: &ElemSet, budget: &mut u128) -> Result<ElemSet> {
        if a.spec != b.spec {
            return Err(Error::SpecMismatch);
        }
        let needed = a.len() as u128 * b.len() as u128;
        if needed > *budget {
            return Err(Error::WorkCap {
                needed,
                cap: self.work_cap,
            });
        }
        *budget -= needed;
        let spec = &a.spec;
        let left = a.mats();
        let right = b.mats();
        let chunk = (left.len() / 64).max(8);
        let elems = self
            .exec
            .fold_chunks(
                &left,
                chunk,
                |part| {
                    let mut out = FxHashSet::default();
                    out.reserve(part.len() * right.len());
                    for x in part {
                        for y in &right {
                            out.insert(spec.canonical_pack(&spec.mul_raw(x, y)));
                        }
                    }
                    out
                },
                |mut s, mut t| {
                    if s.len() < t.len() {
                        std::mem::swap(&mut s, &mut t);
                    }
                    s.extend(t);
                    s
                },
            )
            .unwrap_or_default();
        Ok(ElemSet {
            spec: spec.clone(),
            elems,
        })
    }

    /// Left fold of [`product`](Self::product) over `factors`, stopping as
    /// soon as the running product is the whole group. The work cap applies
    /// to the chain as a whole.
    pub fn iterated_product(&self, factors: &[ElemSet]) -> Result<ElemSet> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::Degenerate("empty factor list".into()))?;
        let mut budget = self.work_cap;
        let mut acc = first.clone();
        for f in rest {
            if acc.is_full_group() {
                if f.spec != acc.spec {
                    return Err(Error::SpecMismatch);
                }
                if f.is_empty() {
                    return Ok(ElemSet::empty(&acc.spec));
                }
                continue;
            }
            acc = self.product_within(&acc, f, &mut budget)?;
        }
        Ok(acc)
    }

    pub fn ruzsa_verify(&self, a: &ElemSet, b: &ElemSet, c: &ElemSet) -> Result<RuzsaCheck> {
        if a.is_empty() || b.is_empty() || c.is_empty() {
            return Err(Error::Degenerate("Ruzsa check needs nonempty sets".into()));
        }
        let ab = self.product(a, b)?.len() as u128;
        let ac = self.product(a, c)?.len() as u128;
        let cinv_b = self.product(&inverse_set(c), b)?.len() as u128;
        let c_len = c.len() as u128;
        let lhs = ab * c_len;
        let rhs = ac * cinv_b;
        Ok(RuzsaCheck {
            ab,
            c: c_len,
            ac,
            cinv_b,
            lhs,
            rhs,
            holds: lhs <= rhs,
        })
    }

    pub fn growth_verify(&self, a: &ElemSet, b: &ElemSet) -> Result<GrowthCheck> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::Degenerate("growth check needs nonempty sets".into()));
        }
        let aainv = self.product(a, &inverse_set(a))?.len() as u128;
        let ab = self.product(a, b)?.len() as u128;
        let b_len = b.len() as u128;
        Ok(GrowthCheck {
            aainv,
            b: b_len,
            ab,
            lhs: ((aainv * b_len) as f64).sqrt(),
            rhs: ab,
            holds: aainv * b_len <= ab * ab,
        })
    }
}

/// `|AB| |C| <= |AC| |C^-1 B|`, both sides exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuzsaCheck {
    pub ab: u128,
    pub c: u128,
    pub ac: u128,
    pub cinv_b: u128,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

/// `sqrt(|A A^-1| |B|) <= |AB|`; `holds` is decided on the squared integers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthCheck {
    pub aainv: u128,
    pub b: u128,
    pub ab: u128,
    pub lhs: f64,
    pub rhs: u128,
    pub holds: bool,
}

pub fn product(a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    Engine::default().product(a, b)
}

pub fn iterated_product(factors: &[ElemSet]) -> Result<ElemSet> {
    Engine::default().iterated_product(factors)
}

pub fn ruzsa_verify(a: &ElemSet, b: &ElemSet, c: &ElemSet) -> Result<RuzsaCheck> {
    Engine::default().ruzsa_verify(a, b, c)
}

pub fn growth_verify(a: &ElemSet, b: &ElemSet) -> Result<GrowthCheck> {
    Engine::default().growth_verify(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::{Perm, SubgroupBase, SubgroupId, DEFAULT_ENUM_CAP};
    use crate::rng::TrialRng;
    use rand::seq::index::sample;

    fn sub(spec: &GroupSpec, base: SubgroupBase) -> ElemSet {
        spec.enumerate_subgroup(&SubgroupId::of(base))
    }

    fn random_subset(all: &[Mat], spec: &GroupSpec, k: usize, rng: &mut impl rand::Rng) -> ElemSet {
        ElemSet::from_mats(spec, sample(rng, all.len(), k).iter().map(|i| &all[i]))
    }

    #[test]
    fn subgroup_products() {
        let g = GroupSpec::sl(5, 2).unwrap();
        let u = sub(&g, SubgroupBase::U);
        let v = sub(&g, SubgroupBase::V);
        let b = sub(&g, SubgroupBase::B);
        assert_eq!(product(&u, &u).unwrap(), u);
        assert_eq!(product(&u, &v).unwrap().len(), 25);
        let id = ElemSet::singleton(&g, &g.identity());
        assert_eq!(product(&id, &b).unwrap(), b);
        assert_eq!(inverse_set(&u), u);
        let w0 = g.weyl_rep(&Perm::reversal(2));
        assert_eq!(times_element(&b, &w0).len(), b.len());
    }

    #[test]
    fn iterated_products() {
        let psl = GroupSpec::psl(5, 2).unwrap();
        let (u, v) = (sub(&psl, SubgroupBase::U), sub(&psl, SubgroupBase::V));
        assert_eq!(iterated_product(std::slice::from_ref(&u)).unwrap(), u);
        let full = iterated_product(&[u.clone(), v.clone(), u.clone(), v.clone()]).unwrap();
        assert_eq!(full.len(), 60);
        assert!(full.is_full_group());

        let sl = GroupSpec::sl(3, 2).unwrap();
        let uv = iterated_product(&[sub(&sl, SubgroupBase::U), sub(&sl, SubgroupBase::V)]).unwrap();
        assert_eq!(uv.len(), 9);
        assert!(iterated_product(&[]).is_err());
    }

    #[test]
    fn absorption_and_mismatch() {
        let g = GroupSpec::psl(7, 2).unwrap();
        let all = g.enumerate_group(DEFAULT_ENUM_CAP).unwrap();
        let b = sub(&g, SubgroupBase::B);
        assert_eq!(product(&all, &b).unwrap(), all);
        assert_eq!(product(&b, &all).unwrap(), all);
        let other = sub(&GroupSpec::sl(7, 2).unwrap(), SubgroupBase::U);
        assert_eq!(product(&b, &other), Err(Error::SpecMismatch));
    }

    #[test]
    fn work_cap_is_enforced() {
        let g = GroupSpec::sl(5, 2).unwrap();
        let u = sub(&g, SubgroupBase::U);
        let v = sub(&g, SubgroupBase::V);
        let engine = Engine::new(30, Exec::Sequential);
        assert!(engine.product(&u, &v).is_ok());
        // 25 + 25 * 5 exceeds the budget on the second step.
        assert!(matches!(
            engine.iterated_product(&[u.clone(), v.clone(), u]),
            Err(Error::WorkCap { .. })
        ));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let g = GroupSpec::psl(9, 2).unwrap();
        let mut rng = TrialRng::new(3, 0).stream();
        let u = sub(&g, SubgroupBase::U);
        let a = u.conjugate(&g.random_element(&mut rng));
        let b = u.conjugate(&g.random_element(&mut rng));
        let ab = Engine::default().product(&a, &b).unwrap();
        let seq = Engine::default().with_exec(Exec::Sequential);
        assert_eq!(seq.product(&a, &b).unwrap(), ab);
        let abu = Engine::default().product(&ab, &u).unwrap();
        assert_eq!(seq.product(&ab, &u).unwrap(), abu);
    }

    #[test]
    fn ruzsa_and_growth_simple_cases() {
        let g = GroupSpec::psl(5, 2).unwrap();
        let all = g.enumerate_group(DEFAULT_ENUM_CAP).unwrap();
        let r = ruzsa_verify(&all, &all, &all).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (3600, 3600, true));
        let u = sub(&g, SubgroupBase::U);
        let v = sub(&g, SubgroupBase::V);
        let id = ElemSet::singleton(&g, &g.identity());
        let r = ruzsa_verify(&u, &v, &id).unwrap();
        assert_eq!((r.lhs, r.rhs), (25, 25));
        let gr = growth_verify(&u, &u).unwrap();
        assert_eq!((gr.aainv, gr.ab, gr.holds), (5, 5, true));
        let gr = growth_verify(&id, &v).unwrap();
        assert!(gr.holds && gr.lhs < gr.rhs as f64);
        assert!(ruzsa_verify(&ElemSet::empty(&g), &u, &u).is_err());
    }

    #[test]
    fn ruzsa_on_random_subsets_of_psl2_7() {
        let g = GroupSpec::psl(7, 2).unwrap();
        let all = g.enumerate_group(DEFAULT_ENUM_CAP).unwrap().mats();
        let engine = Engine::default().with_exec(Exec::Sequential);
        for t in 0..300 {
            let mut rng = TrialRng::new(11, t).stream();
            let a = random_subset(&all, &g, 10, &mut rng);
            let b = random_subset(&all, &g, 10, &mut rng);
            let c = random_subset(&all, &g, 10, &mut rng);
            assert!(engine.ruzsa_verify(&a, &b, &c).unwrap().holds);
            assert!(engine.growth_verify(&a, &b).unwrap().holds);
        }
    }

    #[test]
    fn set_level_associativity() {
        let g = GroupSpec::sl(3, 2).unwrap();
        let all = g.enumerate_group(DEFAULT_ENUM_CAP).unwrap().mats();
        for t in 0..50 {
            let mut rng = TrialRng::new(12, t).stream();
            let a = random_subset(&all, &g, 4, &mut rng);
            let b = random_subset(&all, &g, 5, &mut rng);
            let c = random_subset(&all, &g, 3, &mut rng);
            let left = product(&product(&a, &b).unwrap(), &c).unwrap();
            let right = product(&a, &product(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
            assert_eq!(inverse_set(&inverse_set(&a)), a);
        }
    }
}
