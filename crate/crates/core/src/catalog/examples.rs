use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::artin::{quotient_algebra, ArtinAlgebra};
use crate::error::{Error, Result};
use crate::fiber::fiber_present;
use crate::field::FieldSpec;
use crate::groebner::IdealSpec;
use crate::poly::{Poly, PolyRing};
use crate::rat::Rat;

/// Rings with published invariants that the harness rebuilds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExampleId {
    /// Length 12 Gorenstein algebra on five quadrics-related variables.
    GorensteinCore,
    /// `A[[Y]] ×_k k[[Z]]`, type 2 and multiplicity 13.
    GluedTypeTwo,
    /// Its localization at `(X, Z)`, the core over `k((Y))`.
    GluedTypeTwoLocal,
    /// `⊗^n k[a, b]/(a, b)^2`.
    SquareTensorPower,
    /// `S0(n)[[Y]] ×_k k[[Z]]`.
    GluedSquarePower,
    /// Its localization at `(X, Z)`, `S0(n)` over `k((Y))`.
    GluedSquarePowerLocal,
    /// `k[[x, z]]/(xz)`.
    Node,
    /// `k[[x, y]]/(x^2 - y^n)`.
    PlaneCurve,
    /// `k[[x, y]]/(x^2 - y^n) ×_k k[[z]]`.
    PlaneCurveFiber,
}

impl ExampleId {
    pub const ALL: [ExampleId; 9] = [
        ExampleId::GorensteinCore,
        ExampleId::GluedTypeTwo,
        ExampleId::GluedTypeTwoLocal,
        ExampleId::SquareTensorPower,
        ExampleId::GluedSquarePower,
        ExampleId::GluedSquarePowerLocal,
        ExampleId::Node,
        ExampleId::PlaneCurve,
        ExampleId::PlaneCurveFiber,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::GorensteinCore => "gorenstein_core",
            ExampleId::GluedTypeTwo => "glued_type_two",
            ExampleId::GluedTypeTwoLocal => "glued_type_two_local",
            ExampleId::SquareTensorPower => "square_tensor_power",
            ExampleId::GluedSquarePower => "glued_square_power",
            ExampleId::GluedSquarePowerLocal => "glued_square_power_local",
            ExampleId::Node => "node",
            ExampleId::PlaneCurve => "plane_curve",
            ExampleId::PlaneCurveFiber => "plane_curve_fiber",
        }
    }

    /// Whether the example takes the parameter `n`.
    pub fn takes_n(self) -> bool {
        matches!(
            self,
            ExampleId::SquareTensorPower
                | ExampleId::GluedSquarePower
                | ExampleId::GluedSquarePowerLocal
                | ExampleId::PlaneCurve
                | ExampleId::PlaneCurveFiber
        )
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown example {s}")))
    }
}

/// An expected invariant and the published statement it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub field: String,
    pub value: u64,
    pub claim: String,
}

/// An example assembled over the rationals.
#[derive(Clone, Debug)]
pub struct Built {
    pub id: ExampleId,
    pub n: Option<usize>,
    /// Presentation of the ring, or of its artinian core for localized examples.
    pub ideal: IdealSpec,
    /// Power series variables adjoined to `ideal`.
    pub cone_vars: usize,
    /// The artinian core, base changed for localized examples.
    pub algebra: Option<Arc<ArtinAlgebra>>,
    /// Presentations of the two factors for fiber products.
    pub factors: Option<(IdealSpec, IdealSpec)>,
    pub expected: Vec<Expected>,
}

/// Largest `n` for the tensor power family.
pub const MAX_POWER: usize = 3;

fn exp(field: &str, value: u64, claim: &str) -> Expected {
    Expected { field: field.to_string(), value, claim: claim.to_string() }
}

/// The ten quadrics cutting out the length 12 Gorenstein core, with the
/// parameter `alpha` in two of them.
pub fn gorenstein_core_ideal(alpha: &Rat, vars: &[&str]) -> Result<IdealSpec> {
    let ring = PolyRing::new(vars, FieldSpec::Rationals)?;
    let x = |i: usize| ring.var_named(&format!("X{i}"));
    let q = |i: usize, j: usize| -> Result<Poly> { x(i)?.try_mul(&x(j)?) };
    let gens = vec![
        q(1, 3)?.scale(alpha).try_add(&q(2, 3)?)?,
        q(1, 4)?.try_add(&q(2, 4)?)?,
        q(3, 3)?.try_add(&q(1, 5)?.scale(alpha))?.try_sub(&q(2, 5)?)?,
        q(4, 4)?.try_add(&q(1, 5)?)?.try_sub(&q(2, 5)?)?,
        q(1, 1)?,
        q(2, 2)?,
        q(3, 4)?,
        q(3, 5)?,
        q(4, 5)?,
        q(5, 5)?,
    ];
    IdealSpec::new(&ring, gens)
}

/// `(a_1, b_1)^2 + ... + (a_n, b_n)^2`, optionally in a ring with extra variables.
pub fn square_power_ideal(n: usize, extra: &[&str]) -> Result<IdealSpec> {
    let mut vars: Vec<String> = (1..=n).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    vars.extend(extra.iter().map(|s| s.to_string()));
    let ring = PolyRing::new(&vars, FieldSpec::Rationals)?;
    let gens: Vec<String> =
        (1..=n).flat_map(|i| [format!("a{i}^2"), format!("a{i}*b{i}"), format!("b{i}^2")]).collect();
    IdealSpec::parse(&ring, &gens)
}

fn line(var: &str) -> Result<IdealSpec> {
    Ok(IdealSpec::zero(&PolyRing::new(&[var], FieldSpec::Rationals)?))
}

fn plane_curve_ideal(n: usize) -> Result<IdealSpec> {
    let ring = PolyRing::new(&["x", "y"], FieldSpec::Rationals)?;
    IdealSpec::parse(&ring, &[format!("x^2 - y^{n}")])
}

fn artinian(ideal: &IdealSpec) -> Result<Arc<ArtinAlgebra>> {
    Ok(Arc::new(quotient_algebra(ideal, &FieldSpec::Rationals)?))
}

const CORE_VARS: [&str; 5] = ["X1", "X2", "X3", "X4", "X5"];
const CONED_CORE_VARS: [&str; 6] = ["Y", "X1", "X2", "X3", "X4", "X5"];

/// Assembles an example; `n` is required by the parametrized families.
pub fn build(id: ExampleId, n: Option<usize>, alpha: &Rat) -> Result<Built> {
    let need_n = |lo: usize, hi: usize| -> Result<usize> {
        match n {
            Some(v) if (lo..=hi).contains(&v) => Ok(v),
            Some(v) => Err(Error::OutOfRange(format!("{id} needs {lo} <= n <= {hi}, got {v}"))),
            None => Err(Error::OutOfRange(format!("{id} needs a parameter n"))),
        }
    };
    let mut b = Built {
        id,
        n: None,
        ideal: IdealSpec::zero(&PolyRing::new(&["x"], FieldSpec::Rationals)?),
        cone_vars: 0,
        algebra: None,
        factors: None,
        expected: Vec::new(),
    };
    match id {
        ExampleId::GorensteinCore => {
            b.ideal = gorenstein_core_ideal(alpha, &CORE_VARS)?;
            b.algebra = Some(artinian(&b.ideal)?);
            b.expected = vec![
                exp("length", 12, "finite dimensional Gorenstein algebra of length 12"),
                exp("edim", 5, "embedding dimension 5"),
                exp("type", 1, "Gorenstein"),
            ];
        }
        ExampleId::GluedTypeTwo => {
            let s = gorenstein_core_ideal(alpha, &CONED_CORE_VARS)?;
            let t = line("Z")?;
            b.ideal = fiber_present(&s, &t)?;
            b.factors = Some((s, t));
            b.expected = vec![
                exp("dim", 1, "Cohen-Macaulay of Krull dimension 1"),
                exp("depth", 1, "Cohen-Macaulay of Krull dimension 1"),
                exp("type", 2, "type 2"),
                exp("multiplicity", 13, "multiplicity 13"),
                exp("edim", 7, "edim(R) = 7"),
                exp("ecodepth", 6, "embedding codepth 6"),
            ];
        }
        ExampleId::GluedTypeTwoLocal => {
            b.ideal = gorenstein_core_ideal(alpha, &CORE_VARS)?;
            b.algebra = Some(Arc::new(artinian(&b.ideal)?.base_change_fraction_field("Y")));
            b.expected = vec![
                exp("length", 12, "Gorenstein of multiplicity 12"),
                exp("multiplicity", 12, "Gorenstein of multiplicity 12"),
                exp("edim", 5, "embedding dimension 5"),
                exp("ecodepth", 5, "embedding codepth 5"),
                exp("type", 1, "Gorenstein"),
            ];
        }
        ExampleId::SquareTensorPower => {
            let n = need_n(1, MAX_POWER)?;
            b.n = Some(n);
            b.ideal = square_power_ideal(n, &[])?;
            b.algebra = Some(artinian(&b.ideal)?);
            b.expected = vec![
                exp("length", 3u64.pow(n as u32), "length 3^n"),
                exp("type", 1 << n, "type 2^n"),
                exp("edim", 2 * n as u64, "embedding dimension 2n"),
            ];
        }
        ExampleId::GluedSquarePower => {
            let n = need_n(1, MAX_POWER)?;
            b.n = Some(n);
            let s = square_power_ideal(n, &["Y"])?;
            let t = line("Z")?;
            b.ideal = fiber_present(&s, &t)?;
            b.factors = Some((s, t));
            b.expected = vec![
                exp("dim", 1, "Cohen-Macaulay of dimension 1"),
                exp("depth", 1, "Cohen-Macaulay of dimension 1"),
                exp("type", 1 + (1 << n), "type 1 + 2^n"),
                exp("multiplicity", 1 + 3u64.pow(n as u32), "multiplicity 1 + 3^n"),
                exp("edim", 2 * n as u64 + 2, "edim(R) = 2n + 2"),
                exp("ecodepth", 2 * n as u64 + 1, "embedding codepth 2n + 1"),
            ];
        }
        ExampleId::GluedSquarePowerLocal => {
            let n = need_n(1, MAX_POWER)?;
            b.n = Some(n);
            b.ideal = square_power_ideal(n, &[])?;
            b.algebra = Some(Arc::new(artinian(&b.ideal)?.base_change_fraction_field("Y")));
            b.expected = vec![
                exp("type", 1 << n, "type 2^n"),
                exp("multiplicity", 3u64.pow(n as u32), "multiplicity 3^n"),
                exp("ecodepth", 2 * n as u64, "embedding codepth 2n"),
            ];
        }
        ExampleId::Node => {
            let ring = PolyRing::new(&["x", "z"], FieldSpec::Rationals)?;
            b.ideal = IdealSpec::parse(&ring, &["x*z"])?;
            b.factors = Some((line("x")?, line("z")?));
            b.expected = vec![
                exp("dim", 1, "fiber product of two discrete valuation rings"),
                exp("multiplicity", 2, "e(S) + e(T) for two curves"),
                exp("type", 1, "a dimension-1 hypersurface"),
            ];
        }
        ExampleId::PlaneCurve => {
            let n = need_n(2, 64)?;
            b.n = Some(n);
            b.ideal = plane_curve_ideal(n)?;
            b.expected = vec![exp("dim", 1, "a curve"), exp("multiplicity", 2, "multiplicity 2 when n >= 2")];
        }
        ExampleId::PlaneCurveFiber => {
            let n = need_n(2, 64)?;
            b.n = Some(n);
            let s = plane_curve_ideal(n)?;
            let t = line("z")?;
            b.ideal = fiber_present(&s, &t)?;
            b.factors = Some((s, t));
            b.expected = vec![
                exp("dim", 1, "a curve"),
                exp("multiplicity", 3, "e(S) + e(T) = 2 + 1"),
                exp("type", 2, "r(S) + 1 for a depth one singular factor glued to a DVR"),
            ];
        }
    }
    Ok(b)
}
