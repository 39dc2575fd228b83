use fiberlab_bench::{algebra, core_ideal};

#[test]
fn bench_inputs_build() {
    assert_eq!(core_ideal().generators().len(), 10);
    assert_eq!(algebra(&["x", "y"], &["x^2", "x*y", "y^2"]).len(), 3);
}
