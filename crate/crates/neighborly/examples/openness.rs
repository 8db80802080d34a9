//! Realization-space openness probe: perturb every coordinate of a realized
//! neighborly polytope by small rational noise and check that the chirotope
//! never changes, then confirm the dimension bookkeeping
//! (d+1)(n-d-1) = n*r - r^2 for the dual rank r.

use neighborly::constructions::{gale_sewn_pipeline, openness_probe, DEFAULT_PROBE_SEED};
use neighborly::linalg::rational;

fn main() -> neighborly::Result<()> {
    let result = gale_sewn_pipeline(6, 1, &[])?;
    println!(
        "probing a Gale sewn ({}, {}) instance",
        result.chirotope.polytope_dim(),
        result.chirotope.ground_size()
    );

    let delta = rational(1, 1_000_000);
    let report = openness_probe(&result.configuration, 100, &delta, DEFAULT_PROBE_SEED)?;
    print!("{}", report.to_text());
    assert!(report.all_preserved());
    assert!(report.dimension_identity_holds());
    println!(
        "all {} perturbations at delta = {delta} preserved the chirotope",
        report.trials
    );
    println!(
        "expected realization-space dimension: ({} + 1) * ({} - {} - 1) = {}",
        report.dim, report.n, report.dim, report.expected_dimension
    );

    // A large delta destroys signs, as it should.
    let rough = openness_probe(&result.configuration, 50, &rational(1000, 1), 9)?;
    println!(
        "at delta = 1000 only {}/{} perturbations preserve the chirotope",
        rough.preserved, rough.trials
    );
    Ok(())
}
