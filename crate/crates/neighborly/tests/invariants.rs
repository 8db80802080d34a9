//! Cross-module invariants that exercise whole construction chains rather
//! than single operations.

use neighborly::constructions::{
    cyclic, default_params, neighborly_completion, sew, DEFAULT_COMPLETION_BUDGET,
};
use neighborly::linalg::integer;
use neighborly::polytope::{facets, find_universal_flags, is_neighborly, DEFAULT_SEARCH_BUDGET};
use neighborly::{Chirotope, VectorConfiguration};

struct Lcg(u64);

impl Lcg {
    fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }

    fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() as usize) % (hi - lo + 1)
    }
}

fn facet_sets_isomorphic(a: &[Vec<usize>], b: &[Vec<usize>], n: usize) -> bool {
    use std::collections::BTreeSet;
    let bset: BTreeSet<Vec<usize>> = b.iter().cloned().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mapped: BTreeSet<Vec<usize>> = a
            .iter()
            .map(|f| {
                let mut g: Vec<usize> = f.iter().map(|&x| perm[x - 1] + 1).collect();
                g.sort_unstable();
                g
            })
            .collect();
        if mapped == bset {
            return true;
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Repeated sewing from the 4-simplex reproduces polytopes combinatorially
/// equivalent to cyclic polytopes, step by step up to 7 vertices.
#[test]
fn repeated_sewing_from_simplex_is_cyclic() {
    let mut v = cyclic(4, 5, &default_params(5)).unwrap();
    for n in 6..=7 {
        let c = Chirotope::from_configuration(&v).unwrap();
        let search = find_universal_flags(&c, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(!search.flags.is_empty());
        let (sewn, _) = sew(&v, &search.flags[0]).unwrap();
        let sc = Chirotope::from_configuration(&sewn).unwrap();
        let reference =
            Chirotope::from_configuration(&cyclic(4, n, &default_params(n)).unwrap()).unwrap();
        assert!(
            facet_sets_isomorphic(
                &facets(&sc).unwrap(),
                &facets(&reference).unwrap(),
                n
            ),
            "sewn polytope on {n} vertices is not combinatorially C(4,{n})"
        );
        v = sewn;
    }
}

/// Completion of the two 5-element corpus instances: points in convex
/// position and one point inside the quadrilateral of the others. Both reach
/// a 10-element chirotope whose dual is a neighborly 6-polytope, within the
/// default budget.
#[test]
fn completion_of_five_element_instances() {
    let convex = cyclic(2, 5, &default_params(5)).unwrap();
    let inner = VectorConfiguration::new(
        vec![
            vec![integer(1), integer(0), integer(0)],
            vec![integer(1), integer(4), integer(0)],
            vec![integer(1), integer(4), integer(4)],
            vec![integer(1), integer(0), integer(4)],
            vec![integer(1), integer(1), integer(2)],
        ],
        3,
    )
    .unwrap();

    for (name, v) in [("convex", convex), ("inner", inner)] {
        let search = neighborly_completion(&v, DEFAULT_COMPLETION_BUDGET).unwrap();
        let result = search
            .found
            .unwrap_or_else(|| panic!("{name}: completion not found within default budget"));
        assert_eq!(result.chirotope.ground_size(), 10);
        assert_eq!(result.polytope.polytope_dim(), 6);
        assert!(is_neighborly(&result.polytope).unwrap(), "{name}");
        let replayed = result.log.replay_chirotope().unwrap();
        assert_eq!(replayed.to_text(), result.chirotope.to_text(), "{name}");
    }
}

/// Every chirotope computed from an actual configuration satisfies the
/// three-term Grassmann-Pluecker relations (100 random instances).
#[test]
fn gp_relations_hold_on_realizable_chirotopes() {
    let mut rng = Lcg(0x6a11ab);
    for _ in 0..100 {
        let r = rng.usize_in(2, 4);
        let n = rng.usize_in(r + 1, 8);
        let v = loop {
            let vectors: Vec<Vec<_>> = (0..n)
                .map(|_| (0..r).map(|_| integer(rng.int_in(-5, 5))).collect())
                .collect();
            let candidate = VectorConfiguration::new(vectors, r).unwrap();
            if candidate.rank() == r {
                break candidate;
            }
        };
        let c = Chirotope::from_configuration(&v).unwrap();
        assert!(c.check_gp_relations().unwrap());
    }
}

/// Sewing on a universal flag always adds exactly one vertex and keeps the
/// polytope dimension; spot-check on two chained sews from C(4,7).
#[test]
fn chained_sewing_counts() {
    let mut v = cyclic(4, 7, &default_params(7)).unwrap();
    for expected_n in 8..=9 {
        let c = Chirotope::from_configuration(&v).unwrap();
        let search = find_universal_flags(&c, DEFAULT_SEARCH_BUDGET).unwrap();
        let (sewn, epsilon) = sew(&v, &search.flags[0]).unwrap();
        assert_eq!(neighborly::linalg::scalar_sign(&epsilon), 1);
        let sc = Chirotope::from_configuration(&sewn).unwrap();
        assert_eq!(sc.ground_size(), expected_n);
        assert_eq!(sc.polytope_dim(), 4);
        assert!(is_neighborly(&sc).unwrap());
        v = sewn;
    }
}

/// Malformed flags are rejected before any extension happens.
#[test]
fn sew_guards_reject_malformed_flags() {
    let v = cyclic(4, 6, &default_params(6)).unwrap();
    // A pair that is an edge but whose tower is missing.
    let half_flag = neighborly::Flag::new(vec![vec![1, 2]]).unwrap();
    assert!(sew(&v, &half_flag).is_err());
    // Faces in the wrong order.
    assert!(neighborly::Flag::new(vec![vec![1, 2, 3, 4], vec![1, 2]]).is_err());
}

/// The openness dimension identity holds for every constructed instance in
/// this suite's corpus.
#[test]
fn dimension_identity_bookkeeping() {
    for (d, n) in [(4usize, 8usize), (6, 10), (4, 6)] {
        let r = n - d - 1;
        assert_eq!((d + 1) * (n - d - 1), n * r - r * r);
    }
}
