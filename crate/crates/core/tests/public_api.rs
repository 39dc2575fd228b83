use std::sync::Arc;

use fiberlab::artin::quotient_algebra;
use fiberlab::catalog::{build, ExampleId};
use fiberlab::fiber::{fiber_present, fiber_profile, DeclaredFlags, FiberSpec, RingProfile, SeriesBudget};
use fiberlab::groebner::IdealSpec;
use fiberlab::{Error, FieldSpec, PolyRing, Rat};

fn ideal(vars: &[&str], gens: &[&str]) -> IdealSpec {
    IdealSpec::parse(&PolyRing::new(vars, FieldSpec::Rationals).unwrap(), gens).unwrap()
}

fn budget() -> SeriesBudget {
    SeriesBudget { trunc: 6, ceiling: 50_000 }
}

#[test]
fn core_algebra_is_gorenstein_of_length_12() {
    let b = build(ExampleId::GorensteinCore, None, &Rat::from_i64(3)).unwrap();
    let a = b.algebra.unwrap();
    assert_eq!(a.len(), 12);
    let p = RingProfile::from_artinian("A", &a, budget());
    assert!(p.gorenstein);
    assert_eq!((p.edim, p.ring_type, p.length), (5, 1, Some(12)));
}

#[test]
fn coned_factor_glued_to_a_line_matches_the_presentation() {
    let s = RingProfile::from_presentation(
        "S",
        &ideal(&["x", "y"], &["x^2", "x*y", "y^2"]),
        1,
        &DeclaredFlags::default(),
        budget(),
    )
    .unwrap();
    let t = RingProfile::regular("T", 1, 6);
    let formula = fiber_profile(&FiberSpec::new(s, t).unwrap(), 6).unwrap();
    let glued = fiber_present(&ideal(&["x", "y", "Y"], &["x^2", "x*y", "y^2"]), &ideal(&["z"], &[])).unwrap();
    let direct = RingProfile::from_presentation("R", &glued, 0, &DeclaredFlags::default(), budget()).unwrap();
    assert_eq!((formula.ring_type, formula.multiplicity, formula.edim), (3, 4, 4));
    assert_eq!((direct.ring_type, direct.multiplicity, direct.edim, direct.depth), (3, 4, 4, 1));
    let n = direct.bass.as_ref().unwrap().trunc().min(6);
    assert_eq!(formula.bass.unwrap().truncate(n), direct.bass.unwrap().truncate(n));
}

#[test]
fn errors_are_typed() {
    let line = ideal(&["x", "y"], &["x"]);
    assert!(matches!(quotient_algebra(&line, &FieldSpec::Rationals), Err(Error::NotCofinite(_))));
    let field =
        RingProfile::from_presentation("k", &ideal(&["x"], &["x"]), 0, &DeclaredFlags::default(), budget()).unwrap();
    assert!(matches!(FiberSpec::new(field, RingProfile::regular("T", 1, 4)), Err(Error::InvalidFiber(_))));
    let declared = DeclaredFlags { regular: Some(true), ..DeclaredFlags::default() };
    let r = RingProfile::from_presentation("D", &ideal(&["x"], &["x^2"]), 0, &declared, budget());
    assert!(matches!(r, Err(Error::Inconsistent(_))));
    assert!(matches!(build(ExampleId::SquareTensorPower, Some(9), &Rat::from_i64(2)), Err(Error::OutOfRange(_))));
}

#[test]
fn prime_field_presentations() {
    let r = PolyRing::new(&["x", "y"], FieldSpec::prime(3).unwrap()).unwrap();
    let i = IdealSpec::parse(&r, &["x^3", "y^3", "x*y"]).unwrap();
    let a = Arc::new(quotient_algebra(&i, &FieldSpec::prime(3).unwrap()).unwrap());
    let p = RingProfile::from_artinian("A", &a, budget());
    assert_eq!((p.length, p.ring_type, p.edim), (Some(5), 2, 2));
}

#[test]
fn rationals_leave_the_fast_path_exactly() {
    let big = Rat::from_i64(i64::MAX) + Rat::from_i64(1);
    assert_eq!(big.to_string(), "9223372036854775808");
    assert_eq!(big.clone() - Rat::from_i64(1), Rat::from_i64(i64::MAX));
    assert_eq!("-6/4".parse::<Rat>().unwrap(), Rat::new(-3, 2));
}
