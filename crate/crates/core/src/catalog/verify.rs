use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::examples::{build, ExampleId, MAX_POWER};
use super::report::{CheckKind, CheckStatus, Report};
use crate::artin::{is_isomorphic, quotient_algebra, ArtinAlgebra, ModRep};
use crate::error::{Error, Result};
use crate::fiber::{fiber_profile, small_mult_semidualizing_flag, DeclaredFlags, FiberSpec, RingProfile, SeriesBudget};
use crate::field::{is_root_of_unity_or_zero, FieldSpec};
use crate::groebner::{hilbert_function, HilbertSeries, IdealSpec};
use crate::homalg::is_semidualizing;
use crate::rat::Rat;

/// Bounds shared by every harness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Degree through which series are compared.
    pub trunc: usize,
    /// Largest `i` with `Ext^i(C, C)` computed.
    pub ext_bound: usize,
    /// Largest `n` in `length(R / m^(n+1))`.
    pub hilbert_max: usize,
    pub alpha: Rat,
    pub seed: u64,
    /// Largest free module dimension built while expanding series.
    pub ceiling: usize,
    /// Largest `n` for which the semidualizing family is checked.
    pub semidualizing_max_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trunc: 10,
            ext_bound: 12,
            hilbert_max: 12,
            alpha: Rat::from_i64(2),
            seed: 0,
            ceiling: 150_000,
            semidualizing_max_n: 2,
        }
    }
}

impl VerifyConfig {
    pub fn budget(&self) -> SeriesBudget {
        SeriesBudget { trunc: self.trunc, ceiling: self.ceiling }
    }
}

fn check_profile(report: &mut Report, prefix: &str, p: &RingProfile, expected: &[(&str, u64, &str)]) {
    for (field, value, claim) in expected {
        let actual = match *field {
            "dim" => p.dim as u64,
            "depth" => p.depth as u64,
            "edim" => p.edim as u64,
            "ecodepth" => p.ecodepth() as u64,
            "type" => p.ring_type as u64,
            "multiplicity" => p.multiplicity,
            "length" => p.length.unwrap_or(0) as u64,
            other => unreachable!("unknown field {other}"),
        };
        report.expect(&format!("{prefix}.{field}"), claim, *value, actual);
    }
}

fn check_expected(
    report: &mut Report,
    prefix: &str,
    p: &RingProfile,
    id: ExampleId,
    n: Option<usize>,
    alpha: &Rat,
) -> Result<()> {
    let b = build(id, n, alpha)?;
    let fields: Vec<(&str, u64, &str)> =
        b.expected.iter().map(|e| (e.field.as_str(), e.value, e.claim.as_str())).collect();
    check_profile(report, prefix, p, &fields);
    Ok(())
}

/// Multiplicity read off the Hilbert-Samuel function: the first differences
/// must be constant over the last three degrees, all of them past the
/// regularity index.
fn hilbert_multiplicity_check(report: &mut Report, id: &str, ideal: &IdealSpec, expected: u64, n_max: usize) {
    let claim = "multiplicity from the Hilbert-Samuel function of the presentation";
    let (h, hs) = match (hilbert_function(ideal, n_max), HilbertSeries::of_ideal(ideal)) {
        (Ok(h), Ok(hs)) => (h, hs),
        (Err(e), _) | (_, Err(e)) => return report.errored(id, claim, expected, e),
    };
    let diffs: Vec<u64> = (1..h.len()).map(|i| h[i] - h[i - 1]).collect();
    let tail: Vec<u64> = diffs.iter().rev().take(3).copied().collect();
    let shown = format!("{:?}", diffs);
    let stable = tail.len() == 3 && tail.iter().all(|&d| d == tail[0]);
    let past_regularity = n_max >= hs.regularity_index() + 2;
    let status = if !stable || !past_regularity {
        CheckStatus::Inconclusive
    } else if tail[0] == expected {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    report.push(id, CheckKind::Computed, status, claim, format!("{expected} (stable)"), shown);
}

fn factor_profiles(b: &super::examples::Built, cfg: &VerifyConfig, names: (&str, &str)) -> Result<FiberSpec> {
    let (s, t) = b.factors.as_ref().ok_or_else(|| Error::Structural("example is not a fiber product".into()))?;
    let core = |i: &IdealSpec, name: &str| -> Result<RingProfile> {
        // factors are presented with their cone variable, which is set aside here
        let cone = i.ring().vars.iter().filter(|v| *v == "Y").count();
        if cone == 1 && i.ring().nvars() > 1 {
            let vars: Vec<&String> = i.ring().vars.iter().filter(|v| *v != "Y").collect();
            let ring = crate::poly::PolyRing::new(&vars, i.ring().field.clone())?;
            let gens: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
            let alg = Arc::new(quotient_algebra(&IdealSpec::parse(&ring, &gens)?, &FieldSpec::Rationals)?);
            Ok(RingProfile::from_artinian(name, &alg, cfg.budget()).cone(1))
        } else {
            RingProfile::from_presentation(name, i, 0, &DeclaredFlags::default(), cfg.budget())
        }
    };
    FiberSpec::new(core(s, names.0)?, core(t, names.1)?)
}

fn compare_series(
    report: &mut Report,
    id: &str,
    claim: &str,
    formula: &Option<crate::homalg::SeriesTrunc>,
    direct: &Option<crate::homalg::SeriesTrunc>,
) {
    match (formula, direct) {
        (Some(a), Some(b)) => {
            let n = a.trunc().min(b.trunc());
            report.expect(id, claim, a.truncate(n).to_string(), b.truncate(n).to_string());
        }
        _ => report.push(
            id,
            CheckKind::Computed,
            CheckStatus::Inconclusive,
            claim,
            "series".into(),
            "unavailable".into(),
        ),
    }
}

/// Rebuilds the type two, multiplicity 13 curve glued from a length 12
/// Gorenstein algebra and a discrete valuation ring, and its localization.
pub fn verify_type_two_example(cfg: &VerifyConfig) -> Result<Report> {
    let mut r = Report::new("type two curve with a Gorenstein localization");
    if is_root_of_unity_or_zero(&cfg.alpha) {
        r.push(
            "alpha.infinite_order",
            CheckKind::PaperAsserted,
            CheckStatus::Unverified,
            "the construction needs alpha of infinite multiplicative order",
            "infinite order".into(),
            cfg.alpha.to_string(),
        );
    } else {
        r.expect("alpha.infinite_order", "alpha is neither zero nor a root of unity", true, true);
    }
    let core = build(ExampleId::GorensteinCore, None, &cfg.alpha)?;
    let a = core.algebra.clone().unwrap();
    let core_profile = RingProfile::from_artinian("A", &a, cfg.budget());
    check_expected(&mut r, "core", &core_profile, ExampleId::GorensteinCore, None, &cfg.alpha)?;

    let glued = build(ExampleId::GluedTypeTwo, None, &cfg.alpha)?;
    let f = factor_profiles(&glued, cfg, ("S", "T"))?;
    let formula = fiber_profile(&f, cfg.trunc)?;
    r.expect("glued.cm", "Cohen-Macaulay", true, formula.cm);
    check_expected(&mut r, "glued", &formula, ExampleId::GluedTypeTwo, None, &cfg.alpha)?;
    hilbert_multiplicity_check(&mut r, "glued.hilbert_multiplicity", &glued.ideal, 13, cfg.hilbert_max);
    match RingProfile::from_presentation("R", &glued.ideal, 0, &DeclaredFlags::default(), cfg.budget()) {
        Ok(direct) => {
            r.expect(
                "glued.direct.type",
                "type from a regular linear form on the presentation",
                formula.ring_type,
                direct.ring_type,
            );
            r.expect("glued.direct.depth", "depth from a regular linear form", formula.depth, direct.depth);
            r.expect("glued.direct.edim", "edim of the presentation", formula.edim, direct.edim);
            r.expect(
                "glued.direct.multiplicity",
                "Hilbert multiplicity agrees with the case formula",
                formula.multiplicity,
                direct.multiplicity,
            );
            compare_series(
                &mut r,
                "glued.direct.bass",
                "Bass series by formula and directly",
                &formula.bass,
                &direct.bass,
            );
            compare_series(
                &mut r,
                "glued.direct.poincare_k",
                "Poincaré series by formula and directly",
                &formula.poincare_k,
                &direct.poincare_k,
            );
        }
        Err(e) => r.errored("glued.direct", "direct profile of the presentation", "profile", e),
    }

    let local = build(ExampleId::GluedTypeTwoLocal, None, &cfg.alpha)?;
    let lp =
        RingProfile::from_artinian("R_p", local.algebra.as_ref().unwrap(), SeriesBudget { trunc: 2, ..cfg.budget() });
    r.expect(
        "local.base_field",
        "localization is the core over k((Y))",
        "Q((Y))".to_string(),
        local.algebra.as_ref().unwrap().base().to_string(),
    );
    r.expect("local.gorenstein", "Gorenstein", true, lp.gorenstein);
    check_expected(&mut r, "local", &lp, ExampleId::GluedTypeTwoLocal, None, &cfg.alpha)?;

    r.asserted("glued.uac", "the glued ring satisfies (UAC) with b = depth R");
    r.asserted("core.not_ac", "the Gorenstein core does not satisfy (AC)");
    r.asserted("local.not_ac", "the localization does not satisfy (AC)");
    Ok(r)
}

/// Tensor-choice modules `C_1 ⊗ ... ⊗ C_n` with each `C_i` free or dualizing
/// over the `i`-th copy of `k[a, b]/(a, b)^2` over `k((Y))`, and their algebra.
pub fn semidualizing_family(n: usize) -> Result<(Arc<ArtinAlgebra>, Vec<ModRep>)> {
    let one = build(ExampleId::GluedSquarePowerLocal, Some(1), &Rat::from_i64(2))?.algebra.unwrap();
    let mut algebras = vec![one.clone()];
    for _ in 1..n {
        let next = Arc::new(algebras.last().unwrap().tensor(&one)?);
        algebras.push(next);
    }
    let choice = |bit: bool| if bit { ModRep::dualizing_module(&one) } else { ModRep::free(&one, 1) };
    let mut modules = Vec::new();
    for mask in 0..(1usize << n) {
        let mut m = choice(mask & 1 != 0);
        for (j, alg) in algebras.iter().enumerate().skip(1) {
            m = m.tensor_over(&choice(mask >> j & 1 != 0), alg)?;
        }
        modules.push(m);
    }
    Ok((algebras.last().unwrap().clone(), modules))
}

/// Checks every tensor-choice module is semidualizing through `ext_bound`
/// and no two are isomorphic.
pub fn verify_semidualizing_family(n: usize, ext_bound: usize) -> Result<Report> {
    let mut r = Report::new(format!("semidualizing tensor family, n = {n}"));
    let (alg, mods) = semidualizing_family(n)?;
    r.expect("family.algebra_length", "the family lives over S0(n) over k((Y))", 3usize.pow(n as u32), alg.len());
    let mut ok = 0;
    for (i, m) in mods.iter().enumerate() {
        let rep = is_semidualizing(m, ext_bound)?;
        let id = format!("family.module_{i}.semidualizing");
        r.expect(&id, "Hom(C, C) = R and Ext^i(C, C) = 0 through the bound", true, rep.verdict);
        ok += rep.verdict as usize;
    }
    let mut distinct = true;
    for i in 0..mods.len() {
        for j in i + 1..mods.len() {
            match is_isomorphic(&mods[i], &mods[j]) {
                Ok(false) => {}
                Ok(true) => distinct = false,
                Err(Error::Inconclusive(msg)) => {
                    r.push(
                        &format!("family.pair_{i}_{j}"),
                        CheckKind::Computed,
                        CheckStatus::Inconclusive,
                        "non-isomorphic",
                        "false".into(),
                        msg,
                    );
                }
                Err(e) => return Err(e),
            }
        }
    }
    r.expect("family.pairwise_non_isomorphic", "the 2^n modules are pairwise non-isomorphic", true, distinct);
    r.expect("family.count_lower_bound", "at least 2^n semidualizing modules", 1usize << n, ok);
    r.asserted("family.exact_count", "there are exactly 2^n semidualizing modules up to isomorphism");
    Ok(r)
}

/// Rebuilds the glued tensor power curve for `n`, its localization, and
/// (for small `n`) the semidualizing family of the localization.
pub fn verify_square_power_example(n: usize, cfg: &VerifyConfig) -> Result<Report> {
    if !(1..=MAX_POWER).contains(&n) {
        return Err(Error::OutOfRange(format!("n must lie in 1..={MAX_POWER}, got {n}")));
    }
    let mut r = Report::new(format!("glued tensor power curve, n = {n}"));
    let alpha = &cfg.alpha;
    let s0 = build(ExampleId::SquareTensorPower, Some(n), alpha)?;
    let s0p = RingProfile::from_artinian("S0", s0.algebra.as_ref().unwrap(), SeriesBudget { trunc: 4, ..cfg.budget() });
    check_expected(&mut r, "core", &s0p, ExampleId::SquareTensorPower, Some(n), alpha)?;

    let glued = build(ExampleId::GluedSquarePower, Some(n), alpha)?;
    let f = factor_profiles(&glued, cfg, ("S", "T"))?;
    let formula = fiber_profile(&f, cfg.trunc)?;
    r.expect("glued.cm", "Cohen-Macaulay", true, formula.cm);
    check_expected(&mut r, "glued", &formula, ExampleId::GluedSquarePower, Some(n), alpha)?;
    hilbert_multiplicity_check(
        &mut r,
        "glued.hilbert_multiplicity",
        &glued.ideal,
        1 + 3u64.pow(n as u32),
        cfg.hilbert_max,
    );
    match RingProfile::from_presentation("R", &glued.ideal, 0, &DeclaredFlags::default(), cfg.budget()) {
        Ok(direct) => {
            r.expect(
                "glued.direct.type",
                "type from a regular linear form on the presentation",
                formula.ring_type,
                direct.ring_type,
            );
            r.expect(
                "glued.direct.multiplicity",
                "Hilbert multiplicity agrees with the case formula",
                formula.multiplicity,
                direct.multiplicity,
            );
            r.expect("glued.direct.edim", "edim of the presentation", formula.edim, direct.edim);
            compare_series(
                &mut r,
                "glued.direct.bass",
                "Bass series by formula and directly",
                &formula.bass,
                &direct.bass,
            );
        }
        Err(e) => r.errored("glued.direct", "direct profile of the presentation", "profile", e),
    }
    r.expect(
        "glued.small_multiplicity_bound",
        "e(R) = 1 + 3^n is at most 8 exactly when n = 1",
        n == 1,
        small_mult_semidualizing_flag(&formula)?,
    );

    let local = build(ExampleId::GluedSquarePowerLocal, Some(n), alpha)?;
    let lp =
        RingProfile::from_artinian("R_p", local.algebra.as_ref().unwrap(), SeriesBudget { trunc: 2, ..cfg.budget() });
    check_expected(&mut r, "local", &lp, ExampleId::GluedSquarePowerLocal, Some(n), alpha)?;
    r.expect(
        "local.small_multiplicity_bound",
        "e(R_p) <= 8 exactly when n = 1",
        n == 1,
        small_mult_semidualizing_flag(&lp)?,
    );

    r.asserted(
        "glued.two_semidualizing",
        "the glued ring has exactly two semidualizing modules: R and its dualizing module",
    );
    if n <= cfg.semidualizing_max_n {
        r.extend(verify_semidualizing_family(n, cfg.ext_bound)?);
    } else {
        r.asserted("family.not_run", "the semidualizing family check is skipped above the configured n");
    }
    Ok(r)
}
