//! Seeded Monte Carlo verifiers. Every trial draws from its own stream and
//! the aggregates are plain counts, so reports are schedule independent.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;
use serde_json::json;

use super::{
    bnp_criterion, fraction, random_elements, require_trials, subgroup, ExperimentReport, Runner, TrialRecord,
};
use crate::bruhat::in_big_cell;
use crate::error::{Error, Result};
use crate::matgroup::{GroupSpec, Mat, SubgroupBase};
use crate::rng::TrialRng;
use crate::setprod::{ElemSet, Engine};

/// `U^{g_1} ⋯ U^{g_k}` for the subgroup `u`.
pub fn sylow_product(engine: &Engine, u: &ElemSet, gs: &[Mat]) -> Result<ElemSet> {
    let factors: Vec<ElemSet> = gs.iter().map(|g| u.conjugate(g)).collect();
    engine.iterated_product(&factors)
}

/// Overlapping blocks `U^{g_{2i-1}} U^{g_{2i}} U^{g_{2i+1}}`; eleven
/// conjugators give five blocks whose product is the full eleven-fold
/// product.
pub fn triple_blocks(engine: &Engine, u: &ElemSet, gs: &[Mat]) -> Result<Vec<ElemSet>> {
    gs.windows(3)
        .step_by(2)
        .map(|w| sylow_product(engine, u, w))
        .collect()
}

fn record(trial: u64, outcome: bool, metrics: Vec<u64>) -> TrialRecord {
    TrialRecord {
        trial_index: trial,
        seed_stream: trial,
        outcome,
        metrics,
    }
}

fn collect<T>(results: Vec<Result<T>>) -> Result<Vec<T>> {
    results.into_iter().collect()
}

fn histogram(values: impl Iterator<Item = u64>) -> serde_json::Value {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0u64) += 1;
    }
    json!(h
        .into_iter()
        .map(|(size, count)| [size, count])
        .collect::<Vec<_>>())
}

impl Runner {
    /// Frequency of the big Bruhat cell, with the trivial-intersection
    /// frequency `U ∩ U^g = 1` alongside.
    pub fn opposite_pair_prob(&self, spec: &GroupSpec, trials: u64, seed: u64) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_trials(trials)?;
        let mut r = ExperimentReport::new("opposite_pair_prob", spec, seed, trials);
        let u = subgroup(spec, SubgroupBase::U);
        let id = spec.identity();
        let nontrivial: Vec<Mat> = u.mats().into_iter().filter(|x| *x != id).collect();
        let exact = spec.params().big_cell_fraction(spec.q())?;
        let p = exact.to_f64().unwrap();

        let outcomes = self.exec.map(trials as usize, |i| {
            let g = random_elements(spec, seed, i as u64, 1)[0];
            let big = in_big_cell(spec, &g);
            let trivial = nontrivial.iter().all(|x| !u.contains(&spec.conjugate(x, &g)));
            (big, trivial)
        });
        let big = outcomes.iter().filter(|o| o.0).count() as u64;
        let trivial = outcomes.iter().filter(|o| o.1).count() as u64;
        let implication_failures = outcomes.iter().filter(|o| o.0 && !o.1).count() as u64;

        let empirical = big as f64 / trials as f64;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        let band = self.gates.sigma_band * sigma;
        r.exact_value = Some(p);
        r.empirical_value = Some(empirical);
        r.detail("exact_fraction", exact.to_string());
        r.detail("big_cell_count", big);
        r.detail("trivial_intersection_count", trivial);
        r.detail("trivial_intersection_fraction", trivial as f64 / trials as f64);
        r.detail("big_cell_without_trivial_intersection", implication_failures);
        r.detail("sigma", sigma);
        r.detail("band", band);
        r.metric_names = vec!["in_big_cell", "trivial_intersection"];
        r.per_trial = outcomes
            .iter()
            .enumerate()
            .map(|(i, &(b, t))| record(i as u64, b, vec![b as u64, t as u64]))
            .collect();
        r.pass = (empirical - p).abs() <= band && trivial >= big && implication_failures == 0;
        Ok(r.finish(started))
    }

    /// Sizes of `U^{g1} U^{g2} U^{g3}` against `q^(2M + l/2) / sqrt(d |W|)`.
    ///
    /// Each trial also checks `|AA^-1| |B| <= |AB|^2` for `A = U^{g1} U^{g2}`
    /// and `B = U^{g2} U^{g3}`. Since the factors are subgroups,
    /// `AA^-1 = U^{g1} U^{g2} U^{g1}`, which is much cheaper to form.
    pub fn triple_product_stats(&self, spec: &GroupSpec, trials: u64, seed: u64) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_trials(trials)?;
        let u = subgroup(spec, SubgroupBase::U);
        let needed = (u.len() as u128).pow(3);
        if needed > self.gates.work_cap {
            return Err(Error::WorkCap {
                needed,
                cap: self.gates.work_cap,
            });
        }
        let mut r = ExperimentReport::new("triple_product_stats", spec, seed, trials);
        let params = spec.params();
        let (m, l) = (params.positive_roots, params.rank);
        let q = spec.q();
        let d = params.d(q);
        let w = spec.weyl_order();
        let bound = (q as f64).powf(2.0 * m as f64 + l as f64 / 2.0) / ((d * w) as f64).sqrt();
        // size >= bound  <=>  size^2 d |W| >= q^(4M + l)
        let target = BigUint::from(q).pow(4 * m + l);
        let meets = |size: u64| BigUint::from(size).pow(2) * d * w >= target;

        let engine = self.trial_engine();
        let rows = collect(self.exec.map(trials as usize, |i| {
            let gs = random_elements(spec, seed, i as u64, 3);
            let us: Vec<ElemSet> = gs.iter().map(|g| u.conjugate(g)).collect();
            let a = engine.product(&us[0], &us[1])?;
            let b = engine.product(&us[1], &us[2])?;
            let aainv = engine.product(&a, &us[0])?;
            let ab = engine.product(&a, &us[2])?;
            let (aainv, b_len, ab) = (aainv.len() as u128, b.len() as u128, ab.len() as u128);
            let growth_holds = aainv * b_len <= ab * ab;
            Ok((
                a.len() as u64,
                b_len as u64,
                aainv as u64,
                ab as u64,
                growth_holds,
            ))
        }))?;

        let hits = rows.iter().filter(|t| meets(t.3)).count() as u64;
        let growth_failures = rows.iter().filter(|t| !t.4).count() as u64;
        let frac = hits as f64 / trials as f64;
        r.bound_value = Some(bound);
        r.empirical_value = Some(frac);
        r.detail("meets_bound", hits);
        r.detail("meets_fraction", fraction(hits, trials));
        r.detail("growth_violations", growth_failures);
        r.detail("d", d);
        r.detail("weyl_order", w);
        r.detail("threshold", self.gates.triple_fraction_min);
        r.detail("size_histogram", histogram(rows.iter().map(|t| t.3)));
        r.metric_names = vec!["ab", "bc", "aba", "abc", "growth_holds"];
        r.per_trial = rows
            .iter()
            .enumerate()
            .map(|(i, t)| record(i as u64, meets(t.3), vec![t.0, t.1, t.2, t.3, t.4 as u64]))
            .collect();
        r.pass = frac >= self.gates.triple_fraction_min && growth_failures == 0;
        Ok(r.finish(started))
    }

    /// Fraction of trials where `k` random conjugates of `U` multiply to `G`.
    /// The gate applies only when `k` is the configured `coverage_k`; other
    /// values are reported without a pass condition.
    pub fn coverage_prob(
        &self,
        spec: &GroupSpec,
        k: usize,
        trials: u64,
        seed: u64,
    ) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_trials(trials)?;
        if k == 0 {
            return Err(Error::Degenerate("k must be at least 1".into()));
        }
        let mut r = ExperimentReport::new("coverage_prob", spec, seed, trials);
        let u = subgroup(spec, SubgroupBase::U);
        let order = spec.order();
        let diagnose = k == 11;
        let engine = self.trial_engine();
        let rep_bound = self.gates.rep_bound;

        let rows = collect(self.exec.map(trials as usize, |i| {
            let gs = random_elements(spec, seed, i as u64, k);
            let size = sylow_product(&engine, &u, &gs)?.len() as u64;
            let mut metrics = vec![size];
            let mut holds = false;
            if diagnose {
                let sizes: Vec<u64> = triple_blocks(&engine, &u, &gs)?
                    .iter()
                    .map(|b| b.len() as u64)
                    .collect();
                holds = bnp_criterion(&sizes, order, rep_bound, sizes.len())?.holds;
                metrics.extend(&sizes);
                metrics.push(holds as u64);
            }
            Ok((size as u128 == order, holds, metrics))
        }))?;

        let covered = rows.iter().filter(|t| t.0).count() as u64;
        let frac = covered as f64 / trials as f64;
        let gated = k == self.gates.coverage_k;
        r.empirical_value = Some(frac);
        r.detail("k", k);
        r.detail("covered", covered);
        r.detail("gated", gated);
        if gated {
            r.detail("threshold", self.gates.coverage_min);
        }
        r.metric_names = vec!["product_size"];
        if diagnose {
            let holds = rows.iter().filter(|t| t.1).count() as u64;
            r.detail("bnp_holds", holds);
            r.detail("bnp_holds_fraction", holds as f64 / trials as f64);
            r.detail("rep_bound", rep_bound);
            r.metric_names
                .extend(["block_1", "block_2", "block_3", "block_4", "block_5", "bnp_holds"]);
        }
        r.per_trial = rows
            .into_iter()
            .enumerate()
            .map(|(i, (c, _, m))| record(i as u64, c, m))
            .collect();
        r.pass = !gated || frac >= self.gates.coverage_min;
        Ok(r.finish(started))
    }

    /// Whenever the five block sizes satisfy the criterion, the exact
    /// eleven-fold product must be `G`.
    pub fn criterion_soundness_test(
        &self,
        spec: &GroupSpec,
        trials: u64,
        seed: u64,
    ) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_trials(trials)?;
        self.require_enumerable(spec)?;
        let mut r = ExperimentReport::new("criterion_soundness_test", spec, seed, trials);
        let u = subgroup(spec, SubgroupBase::U);
        let order = spec.order();
        let engine = self.trial_engine();
        let rep_bound = self.gates.rep_bound;

        let rows = collect(self.exec.map(trials as usize, |i| {
            let gs = random_elements(spec, seed, i as u64, 11);
            let sizes: Vec<u64> = triple_blocks(&engine, &u, &gs)?
                .iter()
                .map(|b| b.len() as u64)
                .collect();
            let holds = bnp_criterion(&sizes, order, rep_bound, 5)?.holds;
            let covered = sylow_product(&engine, &u, &gs)?.is_full_group();
            Ok((holds, covered, sizes))
        }))?;

        let holds = rows.iter().filter(|t| t.0).count() as u64;
        let covered = rows.iter().filter(|t| t.1).count() as u64;
        let violations = rows.iter().filter(|t| t.0 && !t.1).count() as u64;
        r.empirical_value = Some(holds as f64 / trials as f64);
        r.detail("criterion_holds", holds);
        r.detail("covered", covered);
        r.detail("violations", violations);
        r.detail("rep_bound", rep_bound);
        r.metric_names = vec![
            "block_1",
            "block_2",
            "block_3",
            "block_4",
            "block_5",
            "criterion_holds",
            "covered",
        ];
        r.per_trial = rows
            .into_iter()
            .enumerate()
            .map(|(i, (h, c, mut m))| {
                m.extend([h as u64, c as u64]);
                record(i as u64, !(h && !c), m)
            })
            .collect();
        r.pass = violations == 0;
        Ok(r.finish(started))
    }

    /// Ruzsa triangle and growth inequalities on random subsets of size
    /// 1 to 10. Both hold for all finite subsets of a group.
    pub fn ruzsa_selfcheck(&self, spec: &GroupSpec, trials: u64, seed: u64) -> Result<ExperimentReport> {
        let started = Instant::now();
        require_trials(trials)?;
        let mut r = ExperimentReport::new("ruzsa_selfcheck", spec, seed, trials);
        let engine = self.trial_engine();
        let rows = collect(self.exec.map(trials as usize, |i| {
            let mut rng = TrialRng::new(seed, i as u64).stream();
            let mut subset = || {
                let size = rng.gen_range(1..=10);
                let mats: Vec<Mat> = (0..size).map(|_| spec.random_element(&mut rng)).collect();
                ElemSet::from_mats(spec, mats.iter())
            };
            let (a, b, c) = (subset(), subset(), subset());
            let ruzsa = engine.ruzsa_verify(&a, &b, &c)?;
            let growth = engine.growth_verify(&a, &b)?;
            Ok((
                ruzsa.holds,
                growth.holds,
                vec![a.len() as u64, b.len() as u64, c.len() as u64],
            ))
        }))?;
        let ruzsa_failures = rows.iter().filter(|t| !t.0).count() as u64;
        let growth_failures = rows.iter().filter(|t| !t.1).count() as u64;
        r.detail("ruzsa_violations", ruzsa_failures);
        r.detail("growth_violations", growth_failures);
        r.metric_names = vec!["a", "b", "c"];
        r.per_trial = rows
            .into_iter()
            .enumerate()
            .map(|(i, (x, y, m))| record(i as u64, x && y, m))
            .collect();
        r.pass = ruzsa_failures == 0 && growth_failures == 0;
        Ok(r.finish(started))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::Gates;

    fn runner() -> Runner {
        Runner::default()
    }

    #[test]
    fn zero_trials_is_degenerate() {
        let g = GroupSpec::psl(7, 2).unwrap();
        assert!(matches!(
            runner().opposite_pair_prob(&g, 0, 1),
            Err(Error::Degenerate(_))
        ));
        assert!(runner().coverage_prob(&g, 0, 5, 1).is_err());
    }

    #[test]
    fn opposite_pair_exact_values() {
        let r = runner()
            .opposite_pair_prob(&GroupSpec::sl(3, 2).unwrap(), 2000, 5)
            .unwrap();
        assert_eq!(r.details["exact_fraction"], "3/4");
        let r = runner()
            .opposite_pair_prob(&GroupSpec::psl(7, 2).unwrap(), 20_000, 42)
            .unwrap();
        assert_eq!(r.exact_value, Some(0.875));
        assert!(r.pass);
        let e = r.empirical_value.unwrap();
        assert!((0.0..=1.0).contains(&e));
    }

    #[test]
    fn degenerate_triple_is_one_sylow() {
        let spec = GroupSpec::psl(9, 2).unwrap();
        let u = subgroup(&spec, SubgroupBase::U);
        let id = spec.identity();
        let p = sylow_product(&Engine::default(), &u, &[id, id, id]).unwrap();
        assert_eq!(p.len(), 9);
        let r = runner().triple_product_stats(&spec, 20, 3).unwrap();
        assert_eq!(r.bound_value, Some(121.5));
        assert!((p.len() as f64) < 121.5);
    }

    #[test]
    fn cheap_growth_matches_engine() {
        let spec = GroupSpec::psl(7, 2).unwrap();
        let u = subgroup(&spec, SubgroupBase::U);
        let engine = Engine::default();
        for i in 0..20 {
            let gs = random_elements(&spec, 9, i, 3);
            let us: Vec<ElemSet> = gs.iter().map(|g| u.conjugate(g)).collect();
            let a = engine.product(&us[0], &us[1]).unwrap();
            let b = engine.product(&us[1], &us[2]).unwrap();
            let full = engine.growth_verify(&a, &b).unwrap();
            assert_eq!(engine.product(&a, &us[0]).unwrap().len() as u128, full.aainv);
        }
    }

    #[test]
    fn coverage_k1_is_zero_and_informational() {
        let r = runner()
            .coverage_prob(&GroupSpec::psl(5, 2).unwrap(), 1, 30, 1)
            .unwrap();
        assert_eq!(r.empirical_value, Some(0.0));
        assert!(r.pass);
        assert_eq!(r.details["gated"], false);
    }

    #[test]
    fn soundness_small() {
        let r = runner()
            .criterion_soundness_test(&GroupSpec::psl(5, 2).unwrap(), 20, 11)
            .unwrap();
        assert!(r.pass);
        assert_eq!(r.per_trial.len(), 20);
        // with rep_bound 1 the criterion needs every block to be the whole group
        let strict = Runner::new(
            Gates {
                rep_bound: 1,
                ..Gates::default()
            },
            Default::default(),
        );
        let r = strict
            .criterion_soundness_test(&GroupSpec::psl(5, 2).unwrap(), 20, 11)
            .unwrap();
        assert!(r.pass);
    }

    #[test]
    fn deterministic_across_exec() {
        use crate::exec::Exec;
        let spec = GroupSpec::psl(7, 2).unwrap();
        let seq = Runner::new(Gates::default(), Exec::Sequential);
        let par = Runner::new(Gates::default(), Exec::Parallel);
        let a = seq.coverage_prob(&spec, 11, 12, 8).unwrap().without_timing();
        let b = par.coverage_prob(&spec, 11, 12, 8).unwrap().without_timing();
        assert_eq!(a, b);
        let a = seq.triple_product_stats(&spec, 30, 8).unwrap().without_timing();
        let b = par.triple_product_stats(&spec, 30, 8).unwrap().without_timing();
        assert_eq!(a, b);
    }

    #[test]
    fn ruzsa_selfcheck_holds() {
        assert!(
            runner()
                .ruzsa_selfcheck(&GroupSpec::psl(7, 2).unwrap(), 50, 2)
                .unwrap()
                .pass
        );
    }
}
