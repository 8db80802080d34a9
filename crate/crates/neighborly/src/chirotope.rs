//! Chirotopes (oriented matroids given by basis signs) and sign vectors.
//!
//! A rank-`r` chirotope on `n` elements stores one sign per sorted `r`-subset
//! of the ground set, in lexicographic order of the subsets. Signs of
//! arbitrary (unsorted, possibly repeating) tuples follow from the
//! alternating rule. Chirotopes are immutable; every operation returns a new
//! value.
//!
//! Element labels: positions `0..n` are internal; the public face of an
//! element is its original label (1-based), kept through deletions and
//! contractions so multi-step constructions can keep referring to the
//! elements they started from.
//!
//! Text format: line 1 is `r n`, line 2 a string of length C(n, r) over
//! `+ - 0` in lexicographic basis order.

use std::collections::BTreeSet;

use crate::combinat::{binomial, combinations, permutation_sign, subset_rank};
use crate::config::VectorConfiguration;
use crate::error::{Error, Result};
use crate::linalg::{scalar_sign, Matrix};

/// Default cost ceiling for the Grassmann-Pluecker scan, measured as
/// C(n, r) * n^2.
pub const DEFAULT_GP_BUDGET: u128 = 100_000_000;

/// A sign in `{-, 0, +}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of_i8(v: i8) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

/// A signed support over the ground set, aligned with chirotope positions.
/// Cocircuits are the minimal-support covectors; they come in opposite pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Positions carrying a nonzero sign.
    pub fn support(&self) -> Vec<usize> {
        (0..self.signs.len())
            .filter(|&i| !self.signs[i].is_zero())
            .collect()
    }

    /// Positions carrying a zero sign.
    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.signs.len())
            .filter(|&i| self.signs[i].is_zero())
            .collect()
    }

    /// True if no entry is negative and at least one is positive.
    pub fn is_positive_covector(&self) -> bool {
        !self.signs.contains(&Sign::Minus) && self.signs.contains(&Sign::Plus)
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            signs: self.signs.iter().map(|s| s.negate()).collect(),
        }
    }
}

impl std::fmt::Display for SignVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Details of a failed Grassmann-Pluecker three-term check.
#[derive(Debug, Clone)]
pub struct GpViolation {
    /// Labels of the common (r-2)-subset.
    pub subset: Vec<usize>,
    /// Labels of the violating 4-tuple.
    pub quad: [usize; 4],
}

impl std::fmt::Display for GpViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GP violation at subset {:?} with quadruple {:?}",
            self.subset, self.quad
        )
    }
}

/// Rank-`r` sign map on the sorted `r`-subsets of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chirotope {
    rank: usize,
    labels: Vec<usize>,
    signs: Vec<Sign>,
}

impl Chirotope {
    /// Builds a chirotope directly from its parts. `signs` must have length
    /// C(labels.len(), rank) and follow lexicographic basis order.
    pub fn from_parts(rank: usize, labels: Vec<usize>, signs: Vec<Sign>) -> Result<Self> {
        let expected = binomial(labels.len(), rank);
        if signs.len() != expected {
            return Err(Error::Dimension(format!(
                "chirotope of rank {rank} on {} elements needs {expected} signs, got {}",
                labels.len(),
                signs.len()
            )));
        }
        Ok(Chirotope {
            rank,
            labels,
            signs,
        })
    }

    /// The chirotope of a configuration: `signs[S] = sign det(rows of S)` for
    /// every sorted `r`-subset `S` in ascending label order.
    ///
    /// Fails with a degenerate-configuration error if the configuration does
    /// not have full rank.
    pub fn from_configuration(v: &VectorConfiguration) -> Result<Self> {
        let n = v.len();
        let r = v.rank_dim();
        let actual = v.rank();
        if n < r || actual < r {
            return Err(Error::DegenerateConfiguration {
                expected: r,
                found: actual,
            });
        }
        let mut signs = Vec::with_capacity(binomial(n, r));
        for subset in combinations(n, r) {
            let rows: Vec<Vec<_>> = subset
                .iter()
                .map(|&i| v.vectors()[i].to_vec())
                .collect();
            let det = Matrix::from_rows(rows)?.det()?;
            signs.push(Sign::of_i8(scalar_sign(&det)));
        }
        Ok(Chirotope {
            rank: r,
            labels: (1..=n).collect(),
            signs,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of ground elements.
    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    /// Original labels, by position.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Polytope dimension `rank - 1` under the homogenized convention.
    pub fn polytope_dim(&self) -> usize {
        self.rank.saturating_sub(1)
    }

    pub fn position_of(&self, label: usize) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownLabel { label })
    }

    /// Sign of the sorted position subset `subset` (must have length `rank`).
    pub fn sign(&self, subset: &[usize]) -> Sign {
        debug_assert_eq!(subset.len(), self.rank);
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        self.signs[subset_rank(self.ground_size(), subset)]
    }

    /// Sign of an arbitrary position sequence of length `rank`: zero on
    /// repeats, otherwise the stored sign adjusted by sort parity.
    pub fn sign_of_sequence(&self, seq: &[usize]) -> Sign {
        debug_assert_eq!(seq.len(), self.rank);
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Sign::Zero;
        }
        let base = self.sign(&sorted);
        if permutation_sign(seq) == 1 {
            base
        } else {
            base.negate()
        }
    }

    /// Sign of `(base..., last)` where `base` is sorted and does not have to
    /// contain `last`; zero if it does.
    pub(crate) fn sign_appended(&self, base: &[usize], last: usize) -> Sign {
        if base.contains(&last) {
            return Sign::Zero;
        }
        let mut sorted = Vec::with_capacity(base.len() + 1);
        let mut inserted_at = base.len();
        for (i, &b) in base.iter().enumerate() {
            if last < b && inserted_at == base.len() {
                inserted_at = i;
                sorted.push(last);
            }
            sorted.push(b);
        }
        if inserted_at == base.len() {
            sorted.push(last);
        }
        let swaps = base.len() - inserted_at;
        let s = self.sign(&sorted);
        if swaps.is_multiple_of(2) {
            s
        } else {
            s.negate()
        }
    }

    /// Raw sign storage in lexicographic basis order.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// The basis signs as a `+ - 0` string in lexicographic basis order.
    pub fn signs_string(&self) -> String {
        self.signs.iter().map(|s| s.to_char()).collect()
    }

    /// Same sign data with the audit labels reset to `1..=n`.
    pub fn with_fresh_labels(&self) -> Chirotope {
        Chirotope {
            rank: self.rank,
            labels: (1..=self.ground_size()).collect(),
            signs: self.signs.clone(),
        }
    }

    /// Negates every sign (the same oriented matroid, opposite chirotope).
    pub fn negated(&self) -> Chirotope {
        Chirotope {
            rank: self.rank,
            labels: self.labels.clone(),
            signs: self.signs.iter().map(|s| s.negate()).collect(),
        }
    }

    /// Canonical form modulo global sign: the first nonzero sign in
    /// lexicographic basis order becomes `+`.
    pub fn canonicalize(&self) -> Chirotope {
        match self.signs.iter().find(|s| !s.is_zero()) {
            Some(Sign::Minus) => self.negated(),
            _ => self.clone(),
        }
    }

    /// True iff no basis sign is zero.
    pub fn is_uniform(&self) -> bool {
        self.signs.iter().all(|s| !s.is_zero())
    }

    /// Labels of the first zero basis in lexicographic order, if any (a
    /// witness against uniformity).
    pub fn first_zero_basis(&self) -> Option<Vec<usize>> {
        combinations(self.ground_size(), self.rank)
            .find(|s| self.sign(s).is_zero())
            .map(|s| s.iter().map(|&p| self.labels[p]).collect())
    }

    /// Three-term Grassmann-Pluecker check (a necessary condition for
    /// realizability) with the default budget. See
    /// [`Chirotope::gp_violation`].
    pub fn check_gp_relations(&self) -> Result<bool> {
        Ok(self.gp_violation(DEFAULT_GP_BUDGET)?.is_none())
    }

    /// Scans all (r-2)-subsets `S` and disjoint 4-tuples `{a,b,c,d}` for a
    /// violated three-term relation: the nonzero part of
    /// `{X(Sab)X(Scd), -X(Sac)X(Sbd), X(Sad)X(Sbc)}` must not consist of a
    /// single repeated sign. Returns the first violation in lexicographic
    /// order, or `None`.
    ///
    /// Refuses to run if `C(n, r) * n^2` exceeds `budget`.
    pub fn gp_violation(&self, budget: u128) -> Result<Option<GpViolation>> {
        let n = self.ground_size();
        let r = self.rank;
        let cost = binomial(n, r) as u128 * (n as u128).pow(2);
        if cost > budget {
            return Err(Error::GpBudgetExceeded { cost, budget });
        }
        if r < 2 {
            return Ok(None);
        }
        for s in combinations(n, r - 2) {
            let rest: Vec<usize> = (0..n).filter(|p| !s.contains(p)).collect();
            if rest.len() < 4 {
                continue;
            }
            for quad_idx in combinations(rest.len(), 4) {
                let [a, b, c, d] = [
                    rest[quad_idx[0]],
                    rest[quad_idx[1]],
                    rest[quad_idx[2]],
                    rest[quad_idx[3]],
                ];
                let pair_sign = |x: usize, y: usize| {
                    let mut seq = s.clone();
                    seq.push(x);
                    seq.push(y);
                    self.sign_of_sequence(&seq)
                };
                let t1 = pair_sign(a, b) * pair_sign(c, d);
                let t2 = (pair_sign(a, c) * pair_sign(b, d)).negate();
                let t3 = pair_sign(a, d) * pair_sign(b, c);
                let nonzero: Vec<Sign> =
                    [t1, t2, t3].into_iter().filter(|t| !t.is_zero()).collect();
                if !nonzero.is_empty() && nonzero.iter().all(|&t| t == nonzero[0]) {
                    return Ok(Some(GpViolation {
                        subset: s.iter().map(|&p| self.labels[p]).collect(),
                        quad: [
                            self.labels[a],
                            self.labels[b],
                            self.labels[c],
                            self.labels[d],
                        ],
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Dual chirotope of rank `n - r` on the same labels:
    /// `dual(X) = sign(complement(X)) * parity` where `parity` is the sign of
    /// the permutation `(complement ascending, X ascending)` of the ground
    /// set. The result is canonicalized.
    pub fn dual(&self) -> Chirotope {
        let n = self.ground_size();
        let dual_rank = n - self.rank;
        let mut signs = Vec::with_capacity(binomial(n, dual_rank));
        for x in combinations(n, dual_rank) {
            let comp: Vec<usize> = (0..n).filter(|p| !x.contains(p)).collect();
            let mut perm = comp.clone();
            perm.extend_from_slice(&x);
            let parity = permutation_sign(&perm);
            let base = self.sign(&comp);
            signs.push(if parity == 1 { base } else { base.negate() });
        }
        Chirotope {
            rank: dual_rank,
            labels: self.labels.clone(),
            signs,
        }
        .canonicalize()
    }

    /// Deletes the element with original label `label`; the restriction of
    /// the sign map to bases avoiding it. Remaining elements keep their
    /// original labels.
    pub fn delete(&self, label: usize) -> Result<Chirotope> {
        let pos = self.position_of(label)?;
        let n = self.ground_size();
        if n - 1 < self.rank {
            return Err(Error::RankDeficient {
                remaining: n - 1,
                rank: self.rank,
            });
        }
        let mut labels = self.labels.clone();
        labels.remove(pos);
        let old_of_new = |p: usize| if p < pos { p } else { p + 1 };
        let mut signs = Vec::with_capacity(binomial(n - 1, self.rank));
        for subset in combinations(n - 1, self.rank) {
            let old: Vec<usize> = subset.iter().map(|&p| old_of_new(p)).collect();
            signs.push(self.sign(&old));
        }
        Ok(Chirotope {
            rank: self.rank,
            labels,
            signs,
        })
    }

    /// Contracts the element with original label `label`: rank drops by one
    /// and `sign'(S) = sign(S, e)` with `e` in the last slot.
    ///
    /// Fails if the element is a loop (in no basis).
    pub fn contract(&self, label: usize) -> Result<Chirotope> {
        let pos = self.position_of(label)?;
        let n = self.ground_size();
        let in_some_basis = combinations(n, self.rank)
            .any(|s| s.contains(&pos) && !self.sign(&s).is_zero());
        if !in_some_basis {
            return Err(Error::LoopContraction { label });
        }
        let mut labels = self.labels.clone();
        labels.remove(pos);
        let old_of_new = |p: usize| if p < pos { p } else { p + 1 };
        let mut signs = Vec::with_capacity(binomial(n - 1, self.rank - 1));
        for subset in combinations(n - 1, self.rank - 1) {
            let old: Vec<usize> = subset.iter().map(|&p| old_of_new(p)).collect();
            signs.push(self.sign_appended(&old, pos));
        }
        Ok(Chirotope {
            rank: self.rank - 1,
            labels,
            signs,
        })
    }

    /// All cocircuits: for every (r-1)-subset spanning a hyperplane, the sign
    /// vector `f -> sign(S, f)` together with its negation, deduplicated and
    /// in a deterministic sorted order.
    pub fn cocircuits(&self) -> Vec<SignVector> {
        let n = self.ground_size();
        if self.rank == 0 {
            return Vec::new();
        }
        let mut set: BTreeSet<SignVector> = BTreeSet::new();
        for s in combinations(n, self.rank - 1) {
            let signs: Vec<Sign> = (0..n).map(|f| self.sign_appended(&s, f)).collect();
            if signs.iter().all(|x| x.is_zero()) {
                continue;
            }
            let v = SignVector::new(signs);
            set.insert(v.negated());
            set.insert(v);
        }
        set.into_iter().collect()
    }

    /// Parses the `r n` + sign-string format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let mut parts = header.split_whitespace();
        let r: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(1, "expected header 'r n'"))?;
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(1, "expected header 'r n'"))?;
        if parts.next().is_some() {
            return Err(Error::parse(1, "expected header 'r n'"));
        }
        if r > n {
            return Err(Error::parse(1, format!("rank {r} exceeds ground size {n}")));
        }
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(2, "expected sign string"))?
            .trim();
        let expected = binomial(n, r);
        if line.chars().count() != expected {
            return Err(Error::parse(
                2,
                format!("expected {expected} signs, got {}", line.chars().count()),
            ));
        }
        let signs: Vec<Sign> = line
            .chars()
            .map(|c| {
                Sign::from_char(c).ok_or_else(|| Error::parse(2, format!("invalid sign '{c}'")))
            })
            .collect::<Result<_>>()?;
        if signs.iter().all(|s| s.is_zero()) {
            return Err(Error::parse(2, "chirotope must not be identically zero"));
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(Error::parse(
                3,
                format!("unexpected trailing content '{extra}'"),
            ));
        }
        Chirotope::from_parts(r, (1..=n).collect(), signs)
    }

    /// Serializes to the text format, with a trailing newline.
    pub fn to_text(&self) -> String {
        format!(
            "{} {}\n{}\n",
            self.rank,
            self.ground_size(),
            self.signs_string()
        )
    }
}
