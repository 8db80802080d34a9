//! Lexicographic extensions two ways: the symbolic first-nonzero sign rule
//! and the geometric point `s1*a1 + eps*s2*a2 + ...` with a certified
//! epsilon, plus what goes wrong when epsilon is not small enough.

use neighborly::extension::{certify_epsilon, lex_extend_geometric, lex_extend_symbolic};
use neighborly::linalg::integer;
use neighborly::{Chirotope, LexProgram, VectorConfiguration};

fn main() -> neighborly::Result<()> {
    // Three vectors in rank 2.
    let v = VectorConfiguration::new(
        vec![
            vec![integer(1), integer(0)],
            vec![integer(0), integer(1)],
            vec![integer(1), integer(1)],
        ],
        2,
    )?;
    let c = Chirotope::from_configuration(&v)?;
    println!("base chirotope: {}", c.signs_string());

    let prog = LexProgram::parse("2+,1-")?;
    let symbolic = lex_extend_symbolic(&c, &prog)?;
    println!("after [{prog}], signs: {}", symbolic.signs_string());

    let (extended, epsilon) = lex_extend_geometric(&v, &prog)?;
    println!("geometric extension point at epsilon = {epsilon}:");
    let p = &extended.vectors()[3];
    println!("  p = ({}, {})", p[0], p[1]);
    assert_eq!(Chirotope::from_configuration(&extended)?, symbolic);
    println!("geometric chirotope matches the symbolic rule (certified)");

    // "Small enough" is a real condition: a huge epsilon lets a later term
    // dominate and flips a sign.
    let prog = LexProgram::parse("3+,1-")?;
    for eps in [integer(1_000_000), integer(1)] {
        println!(
            "certify at epsilon = {eps}: {}",
            certify_epsilon(&v, &prog, &eps)?
        );
    }

    // Extension then deletion is the identity on the chirotope.
    let ext = lex_extend_symbolic(&c, &prog)?;
    assert_eq!(ext.delete(4)?, c);
    println!("deleting the new element restores the base chirotope");
    Ok(())
}
