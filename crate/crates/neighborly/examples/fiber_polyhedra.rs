//! Fibers of the deletion projection: over a fixed base realization, the
//! positions the extension point may take form an open polyhedron cut out by
//! one linear constraint per hyperplane of the base. Its dimension is the
//! rank of the program's elements.

use neighborly::constructions::{cyclic, default_params};
use neighborly::extension::fiber_polyhedron;
use neighborly::LexProgram;

fn main() -> neighborly::Result<()> {
    // A uniform rank-3 configuration of 6 points.
    let v = cyclic(2, 6, &default_params(6))?;

    for prog_text in ["3+", "1+,4-", "2+,4-,6+"] {
        let prog = LexProgram::parse(prog_text)?;
        let fiber = fiber_polyhedron(&v, &prog)?;
        println!(
            "program [{prog_text}]: dimension {}, {} equalities, {} strict inequalities",
            fiber.dimension,
            fiber.equalities.len(),
            fiber.strict_inequalities.len()
        );
        let w: Vec<String> = fiber.witness.iter().map(|s| s.to_string()).collect();
        println!("  witness point ({})", w.join(", "));
        assert!(fiber.witness_satisfies());
        assert_eq!(fiber.dimension, prog.len());
    }
    println!("fiber dimension equals the rank of the program elements");
    Ok(())
}
