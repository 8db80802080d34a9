//! The polytopal layer over acyclic chirotopes: facets and face lattices
//! from positive cocircuits, neighborliness, face figures (quotients) and
//! universal flag search.
//!
//! Inputs are vertex sets: before any polytopal operation the chirotope must
//! pass the all-points-extreme check (every singleton is a face); anything
//! else is rejected as not-a-polytope.

use std::collections::{BTreeMap, BTreeSet};

use crate::chirotope::Chirotope;
use crate::combinat::combinations;
use crate::error::{Error, Result};

/// Default node budget for the universal flag search.
pub const DEFAULT_SEARCH_BUDGET: usize = 100_000;

/// Facets plus the intersection-closed face family of a polytope's vertex
/// set. Faces are sorted label sets; the family always contains the empty
/// face and the full vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    vertices: Vec<usize>,
    facets: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// All faces, including the empty face and the full vertex set.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// True iff the intersection of all facets containing `s` equals `s`
    /// (the empty set and the full vertex set count as faces).
    pub fn is_face(&self, s: &[usize]) -> bool {
        let s = sorted_dedup(s);
        if s.is_empty() || s == self.vertices {
            return true;
        }
        smallest_face(&self.facets, &self.vertices, &s) == s
    }

    /// One face per line (sorted labels, space separated), facets marked
    /// with a leading `F `, lines sorted lexicographically as strings.
    pub fn to_text(&self) -> String {
        let facet_set: BTreeSet<&Vec<usize>> = self.facets.iter().collect();
        let mut lines: Vec<String> = self
            .faces
            .iter()
            .map(|f| {
                let body = f
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                if facet_set.contains(f) {
                    format!("F {body}")
                } else {
                    body
                }
            })
            .collect();
        lines.sort();
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// An ascending chain of proper faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    faces: Vec<Vec<usize>>,
}

impl Flag {
    /// Builds a flag from face vertex sets; they must be strictly
    /// increasing.
    pub fn new(faces: Vec<Vec<usize>>) -> Result<Self> {
        let faces: Vec<Vec<usize>> = faces.iter().map(|f| sorted_dedup(f)).collect();
        for w in faces.windows(2) {
            if !is_strict_subset(&w[0], &w[1]) {
                return Err(Error::NonUniversalFlag(format!(
                    "faces {:?} and {:?} are not strictly nested",
                    w[0], w[1]
                )));
            }
        }
        Ok(Flag { faces })
    }

    /// The empty chain (the only flag of a polygon).
    pub fn empty() -> Self {
        Flag { faces: Vec::new() }
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Parses the `SEW` argument syntax: faces separated by `;`, labels by
    /// spaces, e.g. `1 2;1 2 4 5`. An empty string is the empty flag.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Flag::empty());
        }
        let mut faces = Vec::new();
        for part in text.split(';') {
            let face: Vec<usize> = part
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(1, format!("invalid label '{t}' in flag")))
                })
                .collect::<Result<_>>()?;
            if face.is_empty() {
                return Err(Error::parse(1, "empty face in flag"));
            }
            faces.push(face);
        }
        Flag::new(faces)
    }
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .faces
            .iter()
            .map(|face| {
                face.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Result of the universal flag search: flags found, plus a truncation
/// marker set when the node budget ran out before the search space was
/// exhausted.
#[derive(Debug, Clone)]
pub struct FlagSearch {
    pub flags: Vec<Flag>,
    pub truncated: bool,
}

fn sorted_dedup(s: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    set.into_iter().collect()
}

fn is_strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.contains(x))
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| b.contains(x)).copied().collect()
}

/// Smallest face containing `s`: the intersection of all facets containing
/// it, or the full vertex set if no facet does.
fn smallest_face(facets: &[Vec<usize>], vertices: &[usize], s: &[usize]) -> Vec<usize> {
    let mut acc: Option<Vec<usize>> = None;
    for f in facets {
        if s.iter().all(|x| f.contains(x)) {
            acc = Some(match acc {
                None => f.clone(),
                Some(prev) => intersect_sorted(&prev, f),
            });
        }
    }
    acc.unwrap_or_else(|| vertices.to_vec())
}

/// Facets of the polytope spanned by an acyclic chirotope: the zero sets of
/// its nonnegative cocircuits, as sorted label sets in deterministic order.
///
/// Errors with not-a-polytope if some point is not a vertex of the hull.
pub fn facets(c: &Chirotope) -> Result<Vec<Vec<usize>>> {
    let labels = c.labels();
    let mut facet_set: BTreeSet<Vec<usize>> = BTreeSet::new();
    for cocircuit in c.cocircuits() {
        if cocircuit.is_positive_covector() {
            let zero_labels: Vec<usize> =
                cocircuit.zero_set().into_iter().map(|p| labels[p]).collect();
            facet_set.insert(zero_labels);
        }
    }
    let facets: Vec<Vec<usize>> = facet_set.into_iter().collect();
    for &v in labels {
        if smallest_face(&facets, labels, &[v]) != vec![v] {
            return Err(Error::NotAPolytope { witness: v });
        }
    }
    Ok(facets)
}

/// The full face lattice: the intersection closure of the facets, plus the
/// empty face and the full vertex set.
pub fn face_lattice(c: &Chirotope) -> Result<FaceLattice> {
    let facets = facets(c)?;
    let vertices = c.labels().to_vec();
    let mut faces: BTreeSet<Vec<usize>> = facets.iter().cloned().collect();
    faces.insert(vertices.clone());
    faces.insert(Vec::new());
    let mut queue: Vec<Vec<usize>> = faces.iter().cloned().collect();
    while let Some(f) = queue.pop() {
        let additions: Vec<Vec<usize>> = faces
            .iter()
            .map(|g| intersect_sorted(&f, g))
            .filter(|i| !faces.contains(i))
            .collect();
        for i in additions {
            faces.insert(i.clone());
            queue.push(i);
        }
    }
    Ok(FaceLattice {
        vertices,
        facets,
        faces: faces.into_iter().collect(),
    })
}

/// First subset of size at most `floor(d/2)` that fails to be a face, if
/// any; `None` means the polytope is neighborly.
pub fn neighborliness_witness(c: &Chirotope) -> Result<Option<Vec<usize>>> {
    let facets = facets(c)?;
    let labels = c.labels();
    let n = labels.len();
    let d = c.polytope_dim();
    for k in 1..=d / 2 {
        for subset in combinations(n, k) {
            let s: Vec<usize> = subset.iter().map(|&p| labels[p]).collect();
            if smallest_face(&facets, labels, &s) != s {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// True iff every vertex subset of size at most `floor(d/2)` is a face,
/// where `d = rank - 1`. Checks all sizes from 1 up rather than relying on
/// downward closure.
pub fn is_neighborly(c: &Chirotope) -> Result<bool> {
    Ok(neighborliness_witness(c)?.is_none())
}

/// Matroid rank of a label subset (size of a maximal independent subset).
pub fn rank_of_subset(c: &Chirotope, subset_labels: &[usize]) -> Result<usize> {
    let mut independent: Vec<usize> = Vec::new();
    for &label in &sorted_dedup(subset_labels) {
        let pos = c.position_of(label)?;
        let mut candidate = independent.clone();
        candidate.push(pos);
        candidate.sort_unstable();
        if is_independent(c, &candidate) {
            independent = candidate;
        }
    }
    Ok(independent.len())
}

/// True iff the sorted position set extends to a basis with nonzero sign.
fn is_independent(c: &Chirotope, positions: &[usize]) -> bool {
    let n = c.ground_size();
    let r = c.rank();
    if positions.len() > r {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|p| !positions.contains(p)).collect();
    let need = r - positions.len();
    combinations(rest.len(), need).any(|idx| {
        let mut basis: Vec<usize> = positions.to_vec();
        basis.extend(idx.iter().map(|&i| rest[i]));
        basis.sort_unstable();
        !c.sign(&basis).is_zero()
    })
}

/// Quotient of the polytope by a face: the iterated contraction of the
/// face's elements (in ascending label order). The quotient of a polytope by
/// the empty face is the polytope itself.
pub fn face_figure(c: &Chirotope, face: &[usize]) -> Result<Chirotope> {
    let face = sorted_dedup(face);
    let facets = facets(c)?;
    if !face.is_empty() && smallest_face(&facets, c.labels(), &face) != face {
        return Err(Error::NotAFace(face));
    }
    let mut quotient = c.clone();
    for &label in &face {
        quotient = quotient.contract(label)?;
    }
    Ok(quotient)
}

/// True when the quotient by this face is neighborly (the universal-flag
/// condition). Quotients of dimension 0 (rank 1) are points and carry no
/// constraint; they arise from the top face of every flag.
fn quotient_is_neighborly(c: &Chirotope, face: &[usize]) -> bool {
    match face_figure(c, face) {
        Ok(q) if q.rank() <= 1 => true,
        Ok(q) => is_neighborly(&q).unwrap_or(false),
        Err(_) => false,
    }
}

/// All universal flags of an even-dimensional neighborly polytope: chains
/// with one face in each odd dimension `1, 3, ..., d-1` such that every
/// quotient is neighborly (the top quotient is a point and is always
/// accepted). A polygon's universal flags are its edges.
///
/// The search enumerates candidate faces per dimension in lexicographic
/// order, depth first, spending at most `budget` nodes; if the budget runs
/// out the result is marked truncated.
pub fn find_universal_flags(c: &Chirotope, budget: usize) -> Result<FlagSearch> {
    let d = c.polytope_dim();
    if !d.is_multiple_of(2) || d == 0 {
        return Err(Error::OddDimension(d));
    }
    if !is_neighborly(c)? {
        return Err(Error::NotNeighborly);
    }

    let required_dims: Vec<usize> = (1..=d - 1).step_by(2).collect();
    let lattice = face_lattice(c)?;
    let mut faces_by_dim: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for face in lattice.faces() {
        if face.is_empty() || face.len() == lattice.vertices().len() {
            continue;
        }
        let dim = rank_of_subset(c, face)? - 1;
        if required_dims.contains(&dim) {
            faces_by_dim.entry(dim).or_default().push(face.clone());
        }
    }

    let mut search = ChainSearch {
        required_dims,
        faces_by_dim,
        quotient_cache: BTreeMap::new(),
        chain: Vec::new(),
        flags: Vec::new(),
        budget,
        nodes: 0,
        truncated: false,
    };
    search.dfs(c, 0)?;
    Ok(FlagSearch {
        flags: search.flags,
        truncated: search.truncated,
    })
}

/// Depth-first enumeration state for the universal flag search.
struct ChainSearch {
    required_dims: Vec<usize>,
    faces_by_dim: BTreeMap<usize, Vec<Vec<usize>>>,
    quotient_cache: BTreeMap<Vec<usize>, bool>,
    chain: Vec<Vec<usize>>,
    flags: Vec<Flag>,
    budget: usize,
    nodes: usize,
    truncated: bool,
}

impl ChainSearch {
    fn quotient_ok(&mut self, c: &Chirotope, face: &[usize]) -> bool {
        if let Some(&cached) = self.quotient_cache.get(face) {
            return cached;
        }
        let ok = quotient_is_neighborly(c, face);
        self.quotient_cache.insert(face.to_vec(), ok);
        ok
    }

    fn dfs(&mut self, c: &Chirotope, level: usize) -> Result<()> {
        if self.truncated {
            return Ok(());
        }
        if level == self.required_dims.len() {
            self.flags.push(Flag::new(self.chain.clone())?);
            return Ok(());
        }
        let dim = self.required_dims[level];
        let candidates = self.faces_by_dim.get(&dim).cloned().unwrap_or_default();
        for face in candidates {
            if self.nodes >= self.budget {
                self.truncated = true;
                return Ok(());
            }
            self.nodes += 1;
            if let Some(prev) = self.chain.last() {
                if !is_strict_subset(prev, &face) {
                    continue;
                }
            }
            if !self.quotient_ok(c, &face) {
                continue;
            }
            self.chain.push(face);
            self.dfs(c, level + 1)?;
            self.chain.pop();
        }
        Ok(())
    }
}

/// Checks that a flag is universal for `c`: even dimension, neighborly base,
/// one face per odd dimension `1, 3, ..., d-1` in ascending order, and every
/// quotient neighborly (the top quotient is a point, which always passes).
pub fn verify_universal_flag(c: &Chirotope, flag: &Flag) -> Result<()> {
    let d = c.polytope_dim();
    if !d.is_multiple_of(2) || d == 0 {
        return Err(Error::OddDimension(d));
    }
    if !is_neighborly(c)? {
        return Err(Error::NotNeighborly);
    }
    let required_dims: Vec<usize> = (1..=d - 1).step_by(2).collect();
    if flag.faces().len() != required_dims.len() {
        return Err(Error::NonUniversalFlag(format!(
            "expected {} faces (odd dimensions {:?}), got {}",
            required_dims.len(),
            required_dims,
            flag.faces().len()
        )));
    }
    let facet_list = facets(c)?;
    for (face, &dim) in flag.faces().iter().zip(&required_dims) {
        if smallest_face(&facet_list, c.labels(), face) != *face {
            return Err(Error::NonUniversalFlag(format!("{face:?} is not a face")));
        }
        let face_dim = rank_of_subset(c, face)? - 1;
        if face_dim != dim {
            return Err(Error::NonUniversalFlag(format!(
                "face {face:?} has dimension {face_dim}, expected {dim}"
            )));
        }
        if !quotient_is_neighborly(c, face) {
            return Err(Error::NonUniversalFlag(format!(
                "quotient by {face:?} is not neighborly"
            )));
        }
    }
    for w in flag.faces().windows(2) {
        if !is_strict_subset(&w[0], &w[1]) {
            return Err(Error::NonUniversalFlag(format!(
                "faces {:?} and {:?} are not strictly nested",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}
