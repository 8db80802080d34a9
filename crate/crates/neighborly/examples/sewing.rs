//! The sewing construction: find the universal flags of an even-dimensional
//! neighborly polytope and sew a new vertex through one. Sewing through a
//! universal flag preserves neighborliness; starting from a simplex it
//! reproduces cyclic polytopes.

use neighborly::constructions::{cyclic, default_params, sew, sewing_program};
use neighborly::polytope::{find_universal_flags, is_neighborly, DEFAULT_SEARCH_BUDGET};
use neighborly::Chirotope;

fn main() -> neighborly::Result<()> {
    let v = cyclic(4, 6, &default_params(6))?;
    let c = Chirotope::from_configuration(&v)?;

    let search = find_universal_flags(&c, DEFAULT_SEARCH_BUDGET)?;
    println!(
        "C(4,6) has {} universal flags (odd dimensions 1 and 3){}",
        search.flags.len(),
        if search.truncated { " [truncated]" } else { "" }
    );
    for flag in search.flags.iter().take(4) {
        println!("  {flag}");
    }

    let flag = &search.flags[0];
    let prog = sewing_program(v.len(), flag)?;
    println!("sewing through {{{flag}}} uses the program [{prog}]");

    let (sewn, epsilon) = sew(&v, flag)?;
    println!("sewn at epsilon = {epsilon}; now {} vertices", sewn.len());
    let sc = Chirotope::from_configuration(&sewn)?;
    assert!(is_neighborly(&sc)?);
    println!("the sewn polytope is a neighborly 4-polytope on 7 vertices");

    // Sewing again keeps going.
    let search = find_universal_flags(&sc, DEFAULT_SEARCH_BUDGET)?;
    let (again, _) = sew(&sewn, &search.flags[0])?;
    let ac = Chirotope::from_configuration(&again)?;
    assert!(is_neighborly(&ac)?);
    println!(
        "sewing again: neighborly {}-polytope on {} vertices",
        ac.polytope_dim(),
        ac.ground_size()
    );
    Ok(())
}
