use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::{CheckKind, CheckStatus, Report};
use crate::artin::quotient_algebra;
use crate::error::{Error, Result};
use crate::fiber::{fiber_present, fiber_profile, monomial_staircases, FiberSpec, RingProfile, SeriesBudget};
use crate::field::FieldSpec;
use crate::groebner::IdealSpec;
use crate::poly::{Monomial, PolyRing};

const LEFT_VARS: [&str; 3] = ["x", "y", "z"];
const RIGHT_VARS: [&str; 3] = ["u", "v", "w"];

/// Monomial generators of two artinian factors, in `x, y, z` and `u, v, w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusPair {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl CorpusPair {
    pub fn ideals(&self) -> Result<(IdealSpec, IdealSpec)> {
        let l = PolyRing::new(&LEFT_VARS, FieldSpec::Rationals)?;
        let r = PolyRing::new(&RIGHT_VARS, FieldSpec::Rationals)?;
        Ok((IdealSpec::parse(&l, &self.left)?, IdealSpec::parse(&r, &self.right)?))
    }
}

fn staircase_pool(max_len: usize) -> Vec<Vec<Monomial>> {
    monomial_staircases(3, max_len)
        .into_iter()
        .map(|g| g.into_iter().map(Monomial).collect::<Vec<_>>())
        // drop the residue field itself
        .filter(|g| !(g.len() == 3 && g.iter().all(|m| m.degree() == 1)))
        .collect()
}

fn render(gens: &[Monomial], vars: &[&str]) -> Vec<String> {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    gens.iter().map(|m| m.fmt_with(&vars)).collect()
}

/// `count` seeded random pairs of monomial artinian algebras of length at most 8.
pub fn corpus_pairs(seed: u64, count: usize) -> Vec<CorpusPair> {
    let pool = staircase_pool(8);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = pool.choose(&mut rng).unwrap();
            let b = pool.choose(&mut rng).unwrap();
            CorpusPair { left: render(a, &LEFT_VARS), right: render(b, &RIGHT_VARS) }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusOutcome {
    pub report: Report,
    pub accepted: usize,
    /// Pairs skipped because the predicted resolution exceeded the ceiling.
    pub rejected_heavy: usize,
    pub tallies: BTreeMap<String, usize>,
}

fn artinian_profile(name: &str, ideal: &IdealSpec, budget: SeriesBudget) -> Result<RingProfile> {
    let alg = Arc::new(quotient_algebra(ideal, &FieldSpec::Rationals)?);
    Ok(RingProfile::from_artinian(name, &alg, budget))
}

/// Compares the fiber-product formulas with direct computation on the
/// glued presentation for `count` accepted random pairs, through degree
/// `trunc`. The fixed pair of dual-number rings is always included first.
pub fn verify_corpus_formulas(seed: u64, count: usize, trunc: usize, ceiling: usize) -> Result<CorpusOutcome> {
    let mut report = Report::new(format!("fiber-product formulas against direct computation, seed {seed}"));
    let budget = SeriesBudget { trunc, ceiling };
    let mut tallies: BTreeMap<String, usize> = BTreeMap::new();
    let (mut accepted, mut rejected_heavy) = (0, 0);
    let fixed = CorpusPair {
        left: vec!["x^2".into(), "y".into(), "z".into()],
        right: vec!["u^2".into(), "v".into(), "w".into()],
    };
    let mut candidates = vec![fixed];
    candidates.extend(corpus_pairs(seed, count * 400));
    // the pool is small, so factor profiles repeat
    let mut cache: BTreeMap<Vec<String>, RingProfile> = BTreeMap::new();
    let mut factor = |name: &str, gens: &[String], ideal: &IdealSpec| -> Result<RingProfile> {
        if let Some(p) = cache.get(gens) {
            return Ok(RingProfile { name: name.to_string(), ..p.clone() });
        }
        let p = artinian_profile(name, ideal, budget)?;
        cache.insert(gens.to_vec(), p.clone());
        Ok(p)
    };
    for (idx, pair) in candidates.iter().enumerate() {
        if accepted > count {
            break;
        }
        let (is, it) = pair.ideals()?;
        let f = FiberSpec::new(factor("S", &pair.left, &is)?, factor("T", &pair.right, &it)?)?;
        if f.left.poincare_k.as_ref().unwrap().trunc() < trunc || f.right.poincare_k.as_ref().unwrap().trunc() < trunc {
            rejected_heavy += 1;
            continue;
        }
        let formula = fiber_profile(&f, trunc)?;
        let len = formula.length.unwrap();
        let (p, b) = (formula.poincare_k.as_ref().unwrap(), formula.bass.as_ref().unwrap());
        let peak = (0..=trunc)
            .map(|i| p.coeff(i).to_i64().unwrap_or(i64::MAX).max(b.coeff(i).to_i64().unwrap_or(i64::MAX)))
            .max()
            .unwrap_or(0) as u128;
        if peak * len as u128 > ceiling as u128 {
            rejected_heavy += 1;
            continue;
        }
        let joined = fiber_present(&is, &it)?;
        let direct = artinian_profile("R", &joined, budget)?;
        let label = format!("pair_{idx}");
        let shown = format!("S = ({}), T = ({})", pair.left.join(", "), pair.right.join(", "));
        let mut sub = Report::new(String::new());
        sub.expect(&format!("{label}.length"), "length(S) + length(T) - 1", direct.length.unwrap(), len);
        sub.expect(
            &format!("{label}.multiplicity"),
            "e(S) + e(T) - 1 for artinian factors",
            direct.multiplicity,
            formula.multiplicity,
        );
        sub.expect(&format!("{label}.type"), "type table", direct.ring_type, formula.ring_type);
        sub.expect(&format!("{label}.edim"), "edim adds", direct.edim, formula.edim);
        let (dp, db) = (direct.poincare_k.as_ref().unwrap(), direct.bass.as_ref().unwrap());
        if dp.trunc() < trunc || db.trunc() < trunc {
            sub.push(
                &format!("{label}.series"),
                CheckKind::Computed,
                CheckStatus::Inconclusive,
                "direct series reach the degree",
                trunc.to_string(),
                dp.trunc().min(db.trunc()).to_string(),
            );
        }
        sub.expect(
            &format!("{label}.poincare_k"),
            "Poincaré series of k",
            dp.truncate(trunc).to_string(),
            p.truncate(trunc).to_string(),
        );
        sub.expect(
            &format!("{label}.bass"),
            "Bass series",
            db.truncate(trunc).to_string(),
            b.truncate(trunc).to_string(),
        );
        let failed = sub.first_failure().map(|c| c.id.clone());
        if let Some(id) = failed {
            report.push(&id, CheckKind::Computed, CheckStatus::Fail, "counterexample", "agreement".into(), shown);
            report.extend(sub);
            return Ok(CorpusOutcome { report, accepted, rejected_heavy, tallies });
        }
        report.extend(sub);
        accepted += 1;
        *tallies.entry("type_row.both_depth_zero".into()).or_default() += 1;
        *tallies.entry("multiplicity_case.both_artinian".into()).or_default() += 1;
        *tallies
            .entry(format!("edim_pair.{}_{}", f.left.edim.min(f.right.edim), f.left.edim.max(f.right.edim)))
            .or_default() += 1;
    }
    report.expect("corpus.accepted", "number of pairs compared, the fixed pair included", count + 1, accepted);
    Ok(CorpusOutcome { report, accepted, rejected_heavy, tallies })
}

/// Rejects a factor that is the residue field.
pub fn reject_trivial_factor() -> Result<()> {
    let ring = PolyRing::new(&LEFT_VARS, FieldSpec::Rationals)?;
    let k = IdealSpec::parse(&ring, &["x", "y", "z"])?;
    let p = artinian_profile("k", &k, SeriesBudget { trunc: 2, ceiling: 100 })?;
    match FiberSpec::new(p.clone(), p) {
        Err(Error::InvalidFiber(_)) => Ok(()),
        _ => Err(Error::Inconsistent("the residue field was accepted as a factor".into())),
    }
}
