//! Neighborly completion: extend a uniform rank-3 oriented matroid on n
//! elements by n lexicographic extensions so the result is the Gale dual of
//! a neighborly (2n-4)-polytope on 2n vertices. The witness sequence is
//! found by a depth-first search over signed triples and sewing pairs.

use neighborly::constructions::{neighborly_completion, polygon, DEFAULT_COMPLETION_BUDGET};
use neighborly::polytope::is_neighborly;

fn main() -> neighborly::Result<()> {
    let quad = polygon(4)?;
    println!("input: quadrilateral, rank 3 on 4 elements");

    let search = neighborly_completion(&quad, DEFAULT_COMPLETION_BUDGET)?;
    println!("search explored {} nodes", search.nodes);
    let result = search.found.expect("the quadrilateral completes in budget");

    println!("witness extension sequence:");
    for line in result.log.to_text().lines().skip(1) {
        println!("  {line}");
    }
    println!(
        "completed chirotope: rank {} on {} elements",
        result.chirotope.rank(),
        result.chirotope.ground_size()
    );
    println!(
        "its dual is a neighborly {}-polytope on {} vertices: {}",
        result.polytope.polytope_dim(),
        result.polytope.ground_size(),
        is_neighborly(&result.polytope)?
    );

    // Replaying the log reproduces the same chirotope bit for bit.
    let replayed = result.log.replay_chirotope()?;
    assert_eq!(replayed.to_text(), result.chirotope.to_text());
    println!("log replay is bit-exact");
    Ok(())
}
