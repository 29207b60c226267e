//! Exact checks over whole groups or canonical subgroups.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde_json::json;

use super::{fraction, require_simple, require_trials, subgroup, ExperimentReport, Runner};
use crate::bruhat::{cell_of, decompose, in_big_cell, recompose};
use crate::error::Result;
use crate::matgroup::{GroupSpec, Perm, SubgroupBase, SubgroupId};
use crate::rng::TrialRng;
use crate::setprod::{times_element, ElemSet};

impl Runner {
    /// Enumerated size against the closed-form order.
    pub fn order_check(&self, spec: &GroupSpec) -> Result<ExperimentReport> {
        let started = Instant::now();
        self.require_enumerable(spec)?;
        let mut r = ExperimentReport::new("order_check", spec, 0, 0);
        let predicted = spec.order();
        let counted = spec.enumerate_group_with(self.gates.enum_cap, self.exec)?.len() as u128;
        r.exact_value = Some(predicted as f64);
        r.detail("predicted_order", predicted as u64);
        r.detail("enumerated_order", counted as u64);
        r.pass = predicted == counted;
        Ok(r.finish(started))
    }

    /// `U ∩ V = 1` and `B ∩ B^{w0} = H`.
    pub fn opposite_structure(&self, spec: &GroupSpec) -> Result<ExperimentReport> {
        let started = Instant::now();
        let mut r = ExperimentReport::new("opposite_structure", spec, 0, 0);
        let u = subgroup(spec, SubgroupBase::U);
        let v = subgroup(spec, SubgroupBase::V);
        let b = subgroup(spec, SubgroupBase::B);
        let h = subgroup(spec, SubgroupBase::H);
        let w0 = spec.weyl_rep(&Perm::reversal(spec.n()));
        let bw0 = spec.enumerate_subgroup(&SubgroupId::conjugated(SubgroupBase::B, w0));
        let uv = u.intersection(&v);
        let bb = b.intersection(&bw0);
        r.detail("u_cap_v", uv.len());
        r.detail("b_cap_bw0", bb.len());
        r.detail("h", h.len());
        r.pass = uv.len() == 1 && uv.contains(&spec.identity()) && bb == h;
        Ok(r.finish(started))
    }

    /// Exhaustive count of the big cell against `|B|^2 / (|G| |H|)`.
    pub fn big_cell_census(&self, spec: &GroupSpec) -> Result<ExperimentReport> {
        let started = Instant::now();
        self.require_enumerable(spec)?;
        let mut r = ExperimentReport::new("big_cell_census", spec, 0, 0);
        let all = spec.enumerate_group_with(self.gates.enum_cap, self.exec)?.mats();
        let big = self
            .exec
            .fold_chunks(
                &all,
                4096,
                |part| part.iter().filter(|g| in_big_cell(spec, g)).count() as u64,
                |a, b| a + b,
            )
            .unwrap_or(0);
        let exact = spec.params().big_cell_fraction(spec.q())?;
        let counted = num_rational::BigRational::new(big.into(), (all.len() as u64).into());
        r.exact_value = exact.to_f64();
        r.empirical_value = Some(big as f64 / all.len() as f64);
        r.detail("exact_fraction", exact.to_string());
        r.detail("big_cell_count", big);
        r.detail("group_order", all.len());
        r.pass = counted == exact;
        Ok(r.finish(started))
    }

    /// Decompose and recompose every element; cell sizes must sum to `|G|`
    /// with one nonempty cell per Weyl group element.
    pub fn bruhat_roundtrip(&self, spec: &GroupSpec) -> Result<ExperimentReport> {
        let started = Instant::now();
        self.require_enumerable(spec)?;
        let mut r = ExperimentReport::new("bruhat_roundtrip", spec, 0, 0);
        let all = spec.enumerate_group_with(self.gates.enum_cap, self.exec)?.mats();
        let (failures, cells) = self
            .exec
            .fold_chunks(
                &all,
                2048,
                |part| {
                    let mut failures = 0u64;
                    let mut cells = BTreeMap::new();
                    for g in part {
                        let form = decompose(spec, g);
                        if !roundtrip_ok(spec, g, &form) {
                            failures += 1;
                        }
                        *cells.entry(form.w).or_insert(0u64) += 1;
                    }
                    (failures, cells)
                },
                |(fa, mut ca), (fb, cb)| {
                    for (k, v) in cb {
                        *ca.entry(k).or_insert(0) += v;
                    }
                    (fa + fb, ca)
                },
            )
            .unwrap_or_default();
        let total: u64 = cells.values().sum();
        r.detail("elements", all.len());
        r.detail("failures", failures);
        r.detail("nonempty_cells", cells.len());
        r.detail("weyl_order", spec.weyl_order());
        r.detail(
            "cell_sizes",
            cells
                .iter()
                .map(|(w, c)| (w.to_string(), json!(c)))
                .collect::<serde_json::Map<_, _>>(),
        );
        r.pass = failures == 0 && total as u128 == spec.order() && cells.len() as u64 == spec.weyl_order();
        Ok(r.finish(started))
    }

    /// Roundtrip on `trials` uniform random elements.
    pub fn bruhat_roundtrip_sampled(
        &self,
        spec: &GroupSpec,
        trials: u64,
        seed: u64,
    ) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_trials(trials)?;
        let mut r = ExperimentReport::new("bruhat_roundtrip_sampled", spec, seed, trials);
        let ok = self.exec.map(trials as usize, |i| {
            let g = spec.random_element(&mut TrialRng::new(seed, i as u64).stream());
            roundtrip_ok(spec, &g, &decompose(spec, &g))
        });
        let failures = ok.iter().filter(|x| !**x).count();
        r.detail("failures", failures);
        r.pass = failures == 0;
        Ok(r.finish(started))
    }

    /// `G = UVUV`, with the intermediate sizes recorded.
    pub fn verify_uuuv(&self, spec: &GroupSpec) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_simple(spec)?;
        self.require_enumerable(spec)?;
        let mut r = ExperimentReport::new("verify_uuuv", spec, 0, 0);
        let engine = self.engine();
        let u = subgroup(spec, SubgroupBase::U);
        let v = subgroup(spec, SubgroupBase::V);
        let uv = engine.product(&u, &v)?;
        let uvu = engine.product(&uv, &u)?;
        let uvuv = engine.product(&uvu, &v)?;
        r.exact_value = Some(spec.order() as f64);
        r.detail("uv", uv.len());
        r.detail("uvu", uvu.len());
        r.detail("uvuv", uvuv.len());
        r.detail("group_order", spec.order() as u64);
        r.pass = uvuv.is_full_group();
        Ok(r.finish(started))
    }

    /// `G = ⋃_w UVU n_w` and `|UVU| >= |G| / |W|`.
    pub fn verify_toffoli(&self, spec: &GroupSpec) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_simple(spec)?;
        self.require_enumerable(spec)?;
        let mut r = ExperimentReport::new("verify_toffoli", spec, 0, 0);
        let engine = self.engine();
        let u = subgroup(spec, SubgroupBase::U);
        let v = subgroup(spec, SubgroupBase::V);
        let uvu = engine.product(&engine.product(&u, &v)?, &u)?;
        let mut union = ElemSet::empty(spec);
        for w in Perm::all(spec.n()) {
            union = union.union(&times_element(&uvu, &spec.weyl_rep(&w)));
        }
        let order = spec.order();
        let weyl = spec.weyl_order() as u128;
        let size_ok = uvu.len() as u128 * weyl >= order;
        r.exact_value = Some(uvu.len() as f64);
        r.bound_value = Some(order as f64 / weyl as f64);
        r.detail("uvu", uvu.len());
        r.detail("union", union.len());
        r.detail("group_order", order as u64);
        r.detail("weyl_order", weyl as u64);
        r.detail("bound_fraction", fraction(order as u64, weyl as u64));
        r.pass = union.is_full_group() && size_ok;
        Ok(r.finish(started))
    }
}

fn roundtrip_ok(spec: &GroupSpec, g: &crate::matgroup::Mat, form: &crate::bruhat::BruhatForm) -> bool {
    recompose(spec, form) == *g
        && spec.is_upper_unitriangular(&form.u1)
        && spec.is_upper_unitriangular(&form.u2)
        && spec.is_diagonal(&form.h)
        && form.w == cell_of(spec, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn runner() -> Runner {
        Runner::default()
    }

    #[test]
    fn uuuv_examples() {
        let r = runner().verify_uuuv(&GroupSpec::psl(5, 2).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["uvuv"], 60);
        let r = runner().verify_uuuv(&GroupSpec::psl(7, 2).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["uvuv"], 168);
        assert!(r.details["uvu"].as_u64().unwrap() < 168);
    }

    #[test]
    fn simple_variant_required() {
        let e = runner().verify_uuuv(&GroupSpec::sl(5, 2).unwrap()).unwrap_err();
        assert!(matches!(e, crate::Error::SimpleRequired(_)));
        assert!(runner().verify_toffoli(&GroupSpec::sl(7, 2).unwrap()).is_err());
        // SL_3(2) has trivial center, so it counts as simple
        assert!(runner().verify_uuuv(&GroupSpec::sl(2, 3).unwrap()).unwrap().pass);
    }

    #[test]
    fn toffoli_examples() {
        let r = runner().verify_toffoli(&GroupSpec::psl(5, 2).unwrap()).unwrap();
        assert!(r.pass);
        assert!(r.details["uvu"].as_u64().unwrap() >= 30);
        let r = runner().verify_toffoli(&GroupSpec::psl(7, 2).unwrap()).unwrap();
        assert!(r.pass);
        assert!(r.details["uvu"].as_u64().unwrap() >= 84);
        let r = runner().verify_toffoli(&GroupSpec::psl(2, 3).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["union"], 168);
    }

    #[test]
    fn census_and_structure() {
        let r = runner().big_cell_census(&GroupSpec::sl(3, 2).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["exact_fraction"], "3/4");
        assert!(
            runner()
                .opposite_structure(&GroupSpec::sl(4, 3).unwrap())
                .unwrap()
                .pass
        );
        assert!(
            runner()
                .bruhat_roundtrip(&GroupSpec::psl(4, 2).unwrap())
                .unwrap()
                .pass
        );
    }

    #[test]
    fn enumeration_cap_is_reported() {
        let mut r = runner();
        r.gates.enum_cap = 100;
        let e = r.order_check(&GroupSpec::psl(7, 2).unwrap()).unwrap_err();
        assert!(e.is_resource_cap());
    }
}
