//! Gale sewing: extend the dual by a general-position program p and then by
//! the derived program [p^-, a1^-, ..., a_(r-1)^-]; the new dual is again
//! the Gale dual of a neighborly polytope, two dimensions up. Pipelines
//! iterate this from a polygon.

use neighborly::constructions::{gale_sew, gale_sewn_pipeline, polygon};
use neighborly::polytope::is_neighborly;
use neighborly::{Chirotope, LexProgram};

fn main() -> neighborly::Result<()> {
    // One step by hand: hexagon -> dual (rank 3 on 6) -> two extensions.
    let hexagon = polygon(6)?;
    let dual = Chirotope::from_configuration(&hexagon.gale_transform()?)?;
    println!("hexagon dual: rank {} on {}", dual.rank(), dual.ground_size());

    let p = LexProgram::parse("1+,2+,3+")?;
    let extended = gale_sew(&dual, &p)?;
    let polytope_side = extended.dual();
    println!(
        "after Gale sewing by [{p}]: neighborly {}-polytope on {} vertices: {}",
        polytope_side.polytope_dim(),
        polytope_side.ground_size(),
        is_neighborly(&polytope_side)?
    );

    // The pipeline drives the same step repeatedly and carries a realization.
    for (m, steps) in [(6, 1), (6, 2), (4, 1)] {
        let result = gale_sewn_pipeline(m, steps, &[])?;
        println!(
            "pipeline m={m}, k={steps}: ({}, {}) neighborly = {}",
            result.chirotope.polytope_dim(),
            result.chirotope.ground_size(),
            is_neighborly(&result.chirotope)?
        );
        print!("{}", result.log.to_text());
    }
    Ok(())
}
