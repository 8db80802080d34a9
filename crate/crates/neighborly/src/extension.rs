//! Lexicographic extensions: the symbolic first-nonzero sign rule, the
//! geometric epsilon-vector realization with an unconditional certificate,
//! and the fiber polyhedron of the deletion projection.
//!
//! A program `[a1^s1, ..., ak^sk]` extends a configuration by the point
//! `s1*a1 + eps*s2*a2 + ... + eps^(k-1)*sk*ak` for small `eps > 0`; on the
//! chirotope the new element's sign against an old hyperplane is the first
//! nonzero term of that sum. `certify_epsilon` makes "small enough" a
//! checkable property of a concrete rational epsilon, by comparing the full
//! chirotope of the realized extension against the symbolic rule.
//!
//! Program text syntax: comma-separated `label sign` tokens, e.g. `4+,1-,6+`.

use num_traits::Zero;

use crate::chirotope::{Chirotope, Sign};
use crate::combinat::combinations;
use crate::config::VectorConfiguration;
use crate::error::{Error, Result};
use crate::linalg::{integer, rational, scalar_sign, Matrix, Scalar};

/// Halving steps after which the epsilon search gives up; the sign of every
/// basis determinant stabilizes long before this on desk-scale inputs.
const MAX_HALVINGS: usize = 256;

/// An ordered list of signed elements defining a lexicographic extension.
/// Elements may repeat and may reference previously added extension points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexProgram {
    steps: Vec<(usize, Sign)>,
}

impl LexProgram {
    /// Builds a program from `(label, sign)` steps; must be non-empty and
    /// all signs nonzero.
    pub fn new(steps: Vec<(usize, Sign)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyProgram);
        }
        if steps.iter().any(|(_, s)| s.is_zero()) {
            return Err(Error::Parse {
                line: 1,
                message: "program signs must be + or -".into(),
            });
        }
        Ok(LexProgram { steps })
    }

    /// Convenience constructor from `(label, positive?)` pairs.
    pub fn from_signed_labels(steps: &[(usize, bool)]) -> Result<Self> {
        LexProgram::new(
            steps
                .iter()
                .map(|&(l, pos)| (l, if pos { Sign::Plus } else { Sign::Minus }))
                .collect(),
        )
    }

    pub fn steps(&self) -> &[(usize, Sign)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Parses the `4+,1-,6+` syntax.
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::parse(1, "empty program token"));
            }
            let (label_part, sign_char) = token.split_at(token.len() - 1);
            let sign = match sign_char {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                _ => {
                    return Err(Error::parse(
                        1,
                        format!("program token '{token}' must end in + or -"),
                    ))
                }
            };
            let label: usize = label_part
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, format!("invalid element label '{label_part}'")))?;
            steps.push((label, sign));
        }
        LexProgram::new(steps)
    }
}

impl std::fmt::Display for LexProgram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|(l, s)| format!("{l}{}", s.to_char()))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The fiber of the deletion projection over a fixed base realization: the
/// set of positions the new point may take, cut out by linear equalities and
/// strict inequalities in the new point's coordinates.
#[derive(Debug, Clone)]
pub struct FiberDescription {
    /// Linear forms that must vanish at the new point.
    pub equalities: Vec<Vec<Scalar>>,
    /// Linear forms with their required strict sign.
    pub strict_inequalities: Vec<(Vec<Scalar>, Sign)>,
    /// A point of the fiber (the certified geometric extension point).
    pub witness: Vec<Scalar>,
    /// Dimension of the fiber: the rank of the program elements' vectors.
    pub dimension: usize,
}

impl FiberDescription {
    /// Re-checks that the witness satisfies every equality exactly and every
    /// strict inequality strictly.
    pub fn witness_satisfies(&self) -> bool {
        let dot = |form: &[Scalar]| -> Scalar {
            form.iter()
                .zip(&self.witness)
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        };
        self.equalities.iter().all(|f| dot(f) == Scalar::zero())
            && self
                .strict_inequalities
                .iter()
                .all(|(f, s)| Sign::of_i8(scalar_sign(&dot(f))) == *s)
    }

    /// Plain-text rendering: dimension, witness, then one line per
    /// constraint in deterministic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("dimension {}\n", self.dimension);
        let row = |v: &[Scalar]| {
            v.iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!("witness {}\n", row(&self.witness)));
        for eq in &self.equalities {
            out.push_str(&format!("EQ {}\n", row(eq)));
        }
        for (form, sign) in &self.strict_inequalities {
            out.push_str(&format!("INEQ {} {}\n", sign.to_char(), row(form)));
        }
        out
    }
}

fn program_positions(c: &Chirotope, prog: &LexProgram) -> Result<Vec<(usize, Sign)>> {
    prog.steps()
        .iter()
        .map(|&(label, sign)| Ok((c.position_of(label)?, sign)))
        .collect()
}

/// Symbolic lexicographic extension. The ground set gains a fresh label (one
/// past the largest existing); for every old (r-1)-subset `S` the new basis
/// `(S, p)` takes the sign of the first program step not spanned by `S`:
/// `sign(S, p) = s_i * sign(S, a_i)` for the minimal `i` with a nonzero
/// value, else zero. Old bases are unchanged.
pub fn lex_extend_symbolic(c: &Chirotope, prog: &LexProgram) -> Result<Chirotope> {
    let steps = program_positions(c, prog)?;
    let n = c.ground_size();
    let r = c.rank();
    let fresh = c.labels().iter().copied().max().unwrap_or(0) + 1;
    let mut labels = c.labels().to_vec();
    labels.push(fresh);

    let mut signs = Vec::new();
    for subset in combinations(n + 1, r) {
        if subset.last() != Some(&n) {
            signs.push(c.sign(&subset));
            continue;
        }
        let base = &subset[..r - 1];
        let mut sign = Sign::Zero;
        for &(pos, step_sign) in &steps {
            let s = c.sign_appended(base, pos);
            if !s.is_zero() {
                sign = step_sign * s;
                break;
            }
        }
        signs.push(sign);
    }
    Chirotope::from_parts(r, labels, signs)
}

/// The extension point `s1*a1 + eps*s2*a2 + ... + eps^(k-1)*sk*ak`.
pub fn extension_point(
    v: &VectorConfiguration,
    prog: &LexProgram,
    epsilon: &Scalar,
) -> Result<Vec<Scalar>> {
    let r = v.rank_dim();
    let mut point = vec![Scalar::zero(); r];
    let mut weight = integer(1);
    for (label, sign) in prog.steps() {
        let a = v.vector(*label)?;
        let factor = match sign {
            Sign::Minus => -weight.clone(),
            _ => weight.clone(),
        };
        for (acc, coord) in point.iter_mut().zip(a) {
            *acc += &factor * coord;
        }
        weight *= epsilon;
    }
    Ok(point)
}

/// Checks that adjoining `point` to `v` realizes `target` (the symbolic
/// extension of `v`'s chirotope). Bases among the old elements are shared
/// rows and cannot differ, so only the bases through the new point are
/// evaluated.
fn point_realizes_target(
    v: &VectorConfiguration,
    point: &[Scalar],
    target: &Chirotope,
) -> Result<bool> {
    let n = v.len();
    let r = v.rank_dim();
    for subset in combinations(n, r - 1) {
        let mut rows: Vec<Vec<Scalar>> = subset
            .iter()
            .map(|&i| v.vectors()[i].to_vec())
            .collect();
        rows.push(point.to_vec());
        let det = Matrix::from_rows(rows)?.det()?;
        let mut basis = subset.clone();
        basis.push(n);
        if Sign::of_i8(scalar_sign(&det)) != target.sign(&basis) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff extending `v` by the program's point at this `epsilon` realizes
/// exactly the symbolic extension of `v`'s chirotope.
pub fn certify_epsilon(
    v: &VectorConfiguration,
    prog: &LexProgram,
    epsilon: &Scalar,
) -> Result<bool> {
    if scalar_sign(epsilon) <= 0 {
        return Err(Error::NonPositiveEpsilon(epsilon.to_string()));
    }
    let base = Chirotope::from_configuration(v)?;
    let target = lex_extend_symbolic(&base, prog)?;
    let point = extension_point(v, prog, epsilon)?;
    point_realizes_target(v, &point, &target)
}

/// Geometric lexicographic extension: returns the extended configuration
/// together with a certified rational `epsilon > 0`, found by halving from 1
/// until the realized chirotope matches the symbolic rule. Termination is
/// guaranteed: every basis determinant is a polynomial in epsilon whose sign
/// stabilizes to its lowest-order nonzero coefficient.
pub fn lex_extend_geometric(
    v: &VectorConfiguration,
    prog: &LexProgram,
) -> Result<(VectorConfiguration, Scalar)> {
    let base = Chirotope::from_configuration(v)?;
    let target = lex_extend_symbolic(&base, prog)?;
    let mut epsilon = integer(1);
    for _ in 0..MAX_HALVINGS {
        let point = extension_point(v, prog, &epsilon)?;
        if point_realizes_target(v, &point, &target)? {
            return Ok((v.extended(point)?, epsilon));
        }
        epsilon *= rational(1, 2);
    }
    Err(Error::InternalConsistency(format!(
        "epsilon certification did not stabilize after {MAX_HALVINGS} halvings"
    )))
}

/// Fiber of the deletion projection over `v` for the given program: one
/// linear constraint per old (r-1)-subset `S`, an equality where the target
/// sign of `(S, p)` is zero and a strict inequality with that sign
/// otherwise. The fiber's dimension is the rank of the program elements'
/// vectors, which must agree with the ambient rank minus the rank of the
/// equality system.
pub fn fiber_polyhedron(v: &VectorConfiguration, prog: &LexProgram) -> Result<FiberDescription> {
    let n = v.len();
    let r = v.rank_dim();
    let base = Chirotope::from_configuration(v)?;
    let target = lex_extend_symbolic(&base, prog)?;
    let (extended, _epsilon) = lex_extend_geometric(v, prog)?;
    let witness = extended.vectors()[n].clone();

    let mut equalities = Vec::new();
    let mut strict_inequalities = Vec::new();
    for subset in combinations(n, r - 1) {
        let form = hyperplane_form(v, &subset)?;
        let mut target_subset = subset.clone();
        target_subset.push(n);
        match target.sign(&target_subset) {
            Sign::Zero => equalities.push(form),
            sign => strict_inequalities.push((form, sign)),
        }
    }

    let program_vectors: Vec<Vec<Scalar>> = prog
        .steps()
        .iter()
        .map(|&(label, _)| v.vector(label).map(<[Scalar]>::to_vec))
        .collect::<Result<_>>()?;
    let dimension = Matrix::from_rows(program_vectors)?.rank();

    let equality_rank = if equalities.is_empty() {
        0
    } else {
        Matrix::from_rows(equalities.clone())?.rank()
    };
    if dimension != r - equality_rank {
        return Err(Error::InternalConsistency(format!(
            "fiber dimension {dimension} disagrees with ambient {r} minus equality rank {equality_rank}"
        )));
    }

    let fiber = FiberDescription {
        equalities,
        strict_inequalities,
        witness,
        dimension,
    };
    if !fiber.witness_satisfies() {
        return Err(Error::InternalConsistency(
            "fiber witness violates its own constraints".into(),
        ));
    }
    Ok(fiber)
}

/// Coefficients of `x -> det(rows S, x)` by cofactor expansion along the
/// last row.
fn hyperplane_form(v: &VectorConfiguration, subset: &[usize]) -> Result<Vec<Scalar>> {
    let r = v.rank_dim();
    debug_assert_eq!(subset.len(), r - 1);
    let mut coeffs = Vec::with_capacity(r);
    for j in 0..r {
        let minor_rows: Vec<Vec<Scalar>> = subset
            .iter()
            .map(|&i| {
                v.vectors()[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let minor = Matrix::from_rows(minor_rows)?.det()?;
        coeffs.push(if (r - 1 + j).is_multiple_of(2) { minor } else { -minor });
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer;

    fn config(rows: &[&[i64]]) -> VectorConfiguration {
        let rank = rows[0].len();
        VectorConfiguration::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| integer(x)).collect())
                .collect(),
            rank,
        )
        .unwrap()
    }

    fn moment_curve(d: usize, n: usize) -> VectorConfiguration {
        let vectors = (0..n)
            .map(|t| {
                (0..=d)
                    .map(|k| integer((t as i64).pow(k as u32)))
                    .collect()
            })
            .collect();
        VectorConfiguration::new(vectors, d + 1).unwrap()
    }

    #[test]
    fn program_parse_and_display() {
        let p = LexProgram::parse("4+,1-,6+").unwrap();
        assert_eq!(p.steps().len(), 3);
        assert_eq!(p.to_string(), "4+,1-,6+");
        assert!(LexProgram::parse("").is_err());
        assert!(LexProgram::parse("4").is_err());
        assert!(LexProgram::parse("x+").is_err());
        assert!(LexProgram::new(vec![]).is_err());
    }

    #[test]
    fn parallel_element_copies_signs() {
        let v = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        let c = Chirotope::from_configuration(&v).unwrap();
        let ext = lex_extend_symbolic(&c, &LexProgram::parse("1+").unwrap()).unwrap();
        // Substituting p for element 1 in the same slot leaves every basis
        // sign unchanged.
        assert_eq!(ext.sign_of_sequence(&[1, 3]), c.sign_of_sequence(&[1, 0]));
        assert_eq!(ext.sign_of_sequence(&[2, 3]), c.sign_of_sequence(&[2, 0]));
        assert_eq!(ext.sign(&[0, 3]), Sign::Zero);
    }

    #[test]
    fn rank_two_example_signs() {
        // Program [2+, 1-]: the first term vanishes for S = {2}, the second
        // gives (-)(-) = +; all three new bases come out positive.
        let v = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        let c = Chirotope::from_configuration(&v).unwrap();
        let ext = lex_extend_symbolic(&c, &LexProgram::parse("2+,1-").unwrap()).unwrap();
        assert_eq!(ext.sign(&[0, 3]), Sign::Plus);
        assert_eq!(ext.sign(&[1, 3]), Sign::Plus);
        assert_eq!(ext.sign(&[2, 3]), Sign::Plus);
        // Old bases unchanged.
        assert_eq!(ext.sign(&[0, 1]), Sign::Plus);
        assert_eq!(ext.sign(&[0, 2]), Sign::Plus);
        assert_eq!(ext.sign(&[1, 2]), Sign::Minus);
    }

    #[test]
    fn uniform_extension_stays_uniform_with_full_program() {
        let v = moment_curve(2, 5);
        let c = Chirotope::from_configuration(&v).unwrap();
        let ext = lex_extend_symbolic(&c, &LexProgram::parse("1+,3-,5+").unwrap()).unwrap();
        assert!(ext.is_uniform());
    }

    #[test]
    fn extension_then_deletion_is_identity() {
        let v = moment_curve(2, 5);
        let c = Chirotope::from_configuration(&v).unwrap();
        for prog in ["1+", "2+,4-", "5-,1+,3+"] {
            let ext = lex_extend_symbolic(&c, &LexProgram::parse(prog).unwrap()).unwrap();
            assert_eq!(ext.delete(6).unwrap(), c);
        }
    }

    #[test]
    fn geometric_extension_point_and_epsilon() {
        // p = a2 - eps*a1 = (-1/2, 1) at eps = 1/2.
        let v = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        let prog = LexProgram::parse("2+,1-").unwrap();
        assert!(certify_epsilon(&v, &prog, &rational(1, 2)).unwrap());
        let p = extension_point(&v, &prog, &rational(1, 2)).unwrap();
        assert_eq!(p, vec![rational(-1, 2), integer(1)]);
        let (ext, eps) = lex_extend_geometric(&v, &prog).unwrap();
        assert!(scalar_sign(&eps) > 0);
        assert_eq!(ext.len(), 4);
    }

    #[test]
    fn huge_epsilon_can_flip_a_sign() {
        // With p = a3 + M*a1 for huge M, the second term dominates the basis
        // {2, p} and flips it relative to the lexicographic rule.
        let v = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        let prog = LexProgram::parse("3+,1-").unwrap();
        assert!(certify_epsilon(&v, &prog, &rational(1, 4)).unwrap());
        assert!(!certify_epsilon(&v, &prog, &integer(1_000_000)).unwrap());
    }

    #[test]
    fn single_step_program_ignores_epsilon() {
        let v = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        let prog = LexProgram::parse("2-").unwrap();
        for eps in [rational(1, 7), integer(1), integer(1_000_000)] {
            assert!(certify_epsilon(&v, &prog, &eps).unwrap());
        }
    }

    #[test]
    fn non_positive_epsilon_rejected() {
        let v = config(&[&[1, 0], &[0, 1], &[1, 1]]);
        let prog = LexProgram::parse("1+").unwrap();
        assert!(matches!(
            certify_epsilon(&v, &prog, &integer(0)),
            Err(Error::NonPositiveEpsilon(_))
        ));
        assert!(matches!(
            certify_epsilon(&v, &prog, &integer(-1)),
            Err(Error::NonPositiveEpsilon(_))
        ));
    }

    #[test]
    fn halving_terminates_quickly_on_corpus() {
        // The returned epsilon is 1/2^k for the number of halvings k; the
        // search stays far below the 64-step mark on corpus instances.
        let floor = rational(1, 2).pow(64);
        for (v, prog) in [
            (moment_curve(2, 4), "4+,3+"),
            (moment_curve(2, 6), "2+,4-,6+"),
            (config(&[&[1, 0], &[0, 1], &[1, 1]]), "2+,1-"),
        ] {
            let (_, eps) = lex_extend_geometric(&v, &LexProgram::parse(prog).unwrap()).unwrap();
            assert!(eps > floor, "epsilon {eps} needed more than 64 halvings");
        }
    }

    #[test]
    fn epsilon_monotonicity_on_samples() {
        // Once a program certifies at eps0, it keeps certifying along the
        // halving sequence below it.
        let v = moment_curve(2, 5);
        for prog in ["4+,1-", "5+,2-,3+", "2-,5+"] {
            let prog = LexProgram::parse(prog).unwrap();
            let (_, eps0) = lex_extend_geometric(&v, &prog).unwrap();
            let mut eps = eps0;
            for _ in 0..20 {
                assert!(certify_epsilon(&v, &prog, &eps).unwrap());
                eps *= rational(1, 2);
            }
        }
    }

    #[test]
    fn fiber_dimension_matches_program_rank() {
        let v = moment_curve(2, 6);
        for (prog, dim) in [("1+", 1), ("1+,4-", 2), ("2+,4-,6+", 3)] {
            let fiber = fiber_polyhedron(&v, &LexProgram::parse(prog).unwrap()).unwrap();
            assert_eq!(fiber.dimension, dim);
            assert!(fiber.witness_satisfies());
        }
    }

    #[test]
    fn full_rank_program_has_no_equalities() {
        let v = moment_curve(2, 6);
        let fiber = fiber_polyhedron(&v, &LexProgram::parse("1+,2-,3+").unwrap()).unwrap();
        assert_eq!(fiber.dimension, 3);
        assert!(fiber.equalities.is_empty());
    }

    #[test]
    fn rank_one_program_fiber_is_a_ray() {
        // All old hyperplanes through a1 stay equalities; the rest are
        // strict. Dimension 1 = rank{a1}.
        let v = moment_curve(2, 6);
        let fiber = fiber_polyhedron(&v, &LexProgram::parse("3+").unwrap()).unwrap();
        assert_eq!(fiber.dimension, 1);
        // In a uniform rank-3 configuration on 6 points, 5 of the C(6,2)=15
        // hyperplane subsets contain the program element.
        assert_eq!(fiber.equalities.len(), 5);
        assert_eq!(fiber.strict_inequalities.len(), 10);
    }

    #[test]
    fn repeated_program_elements_are_allowed() {
        let v = moment_curve(2, 5);
        let prog = LexProgram::parse("2+,2-,3+").unwrap();
        let (ext, _) = lex_extend_geometric(&v, &prog).unwrap();
        assert_eq!(ext.len(), 6);
    }
}
