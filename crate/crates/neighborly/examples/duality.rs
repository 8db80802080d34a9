//! Oriented matroid duality: the dual chirotope via complement signs and
//! permutation parities, double duality, and agreement with the Gale
//! transform (a nullspace basis of the realization).

use neighborly::constructions::{cyclic, default_params};
use neighborly::Chirotope;

fn main() -> neighborly::Result<()> {
    // Rank-2 triangle: all bases positive.
    let triangle = cyclic(2, 3, &default_params(3))?;
    let c = Chirotope::from_configuration(&triangle)?;
    // The triangle is rank 3; use its Gale dual to get a rank-2 view too.
    println!("triangle chirotope: {}", c.signs_string());
    let d = c.dual();
    println!("dual (rank {}): {}", d.rank(), d.signs_string());
    assert_eq!(d.dual(), c.canonicalize());
    println!("dual of dual is the canonicalized original");

    // Gale-transform consistency on the cyclic polytope C(4,6): dualizing
    // the chirotope equals taking the chirotope of the Gale transform.
    let v = cyclic(4, 6, &default_params(6))?;
    let c = Chirotope::from_configuration(&v)?;
    let via_signs = c.dual();
    let gale = v.gale_transform()?;
    let via_nullspace = Chirotope::from_configuration(&gale)?.canonicalize();
    assert_eq!(via_signs, via_nullspace);
    println!(
        "C(4,6): dual via permutation signs == chirotope of the Gale transform ({})",
        via_signs.signs_string()
    );

    // Deletion and contraction are dual operations.
    let lhs = c.delete(3)?.dual();
    let rhs = c.dual().contract(3)?.canonicalize();
    assert_eq!(lhs, rhs);
    println!("delete then dualize == dualize then contract");
    Ok(())
}
