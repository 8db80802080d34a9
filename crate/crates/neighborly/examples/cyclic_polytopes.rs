//! Cyclic polytopes from the moment curve: the canonical neighborly
//! polytopes. Builds C(4, 8), shows that every basis sign is positive, and
//! cross-checks the facet list against Gale's evenness condition.

use neighborly::constructions::{cyclic, default_params};
use neighborly::polytope::{face_lattice, facets, is_neighborly};
use neighborly::Chirotope;

fn main() -> neighborly::Result<()> {
    let v = cyclic(4, 8, &default_params(8))?;
    println!("C(4,8) configuration:\n{}", v.to_text());

    let c = Chirotope::from_configuration(&v)?;
    println!("chirotope ({} bases): {}", c.signs().len(), c.signs_string());
    assert!(c.is_uniform());

    let facet_list = facets(&c)?;
    println!("{} facets:", facet_list.len());
    for f in &facet_list {
        println!("  {f:?}");
    }

    // Gale evenness: a d-subset is a facet iff between any two non-members
    // there is an even number of members.
    for f in &facet_list {
        let outside: Vec<usize> = (1..=8).filter(|x| !f.contains(x)).collect();
        for (i, &x) in outside.iter().enumerate() {
            for &y in &outside[i + 1..] {
                let between = f.iter().filter(|&&k| x < k && k < y).count();
                assert_eq!(between % 2, 0, "evenness fails for {f:?}");
            }
        }
    }
    println!("all facets satisfy Gale evenness");

    assert!(is_neighborly(&c)?);
    println!("C(4,8) is neighborly: every pair of vertices is an edge");

    let lattice = face_lattice(&c)?;
    println!("face lattice has {} faces", lattice.faces().len());
    Ok(())
}
