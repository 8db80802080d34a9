//! Generators for neighborly polytopes: cyclic polytopes, sewing through a
//! universal flag, Gale sewing, multi-step pipelines, the search-based
//! neighborly completion of rank-3 oriented matroids, and the
//! realization-space openness probe.
//!
//! Every construction carries a geometric realization through each step (not
//! just a chirotope), so realization-space probes and fiber computations
//! always have a concrete witness, and records a replayable
//! [`ConstructionLog`]: rebuilding from the log reproduces the final
//! chirotope bit for bit.

use crate::chirotope::{Chirotope, Sign};
use crate::config::VectorConfiguration;
use crate::error::{Error, Result};
use crate::extension::{lex_extend_geometric, lex_extend_symbolic, LexProgram};
use crate::linalg::{integer, parse_scalar, rational, Scalar};
use crate::polytope::{is_neighborly, verify_universal_flag, Flag};

/// Default node budget for the neighborly completion search.
pub const DEFAULT_COMPLETION_BUDGET: usize = 100_000;

/// Deterministic seed used by the CLI's openness probe when none is given.
pub const DEFAULT_PROBE_SEED: u64 = 1;

/// Moment-curve points `(1, t, t^2, ..., t^d)` for strictly increasing
/// rational parameters; the canonical realization of the cyclic polytope
/// C(d, n). Its chirotope is all `+` (Vandermonde).
pub fn cyclic(d: usize, n: usize, params: &[Scalar]) -> Result<VectorConfiguration> {
    if d < 2 || !d.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "cyclic dimension must be even and at least 2, got {d}"
        )));
    }
    build_moment_curve(d, n, params)
}

/// Moment-curve polygon on `m` vertices with parameters `0..m` (the `d = 2`
/// case, also the canonical seed for Gale sewing pipelines).
pub fn polygon(m: usize) -> Result<VectorConfiguration> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!(
            "polygon needs at least 3 vertices, got {m}"
        )));
    }
    build_moment_curve(2, m, &default_params(m))
}

/// Integer parameters `0, 1, ..., n-1`.
pub fn default_params(n: usize) -> Vec<Scalar> {
    (0..n as i64).map(integer).collect()
}

fn build_moment_curve(d: usize, n: usize, params: &[Scalar]) -> Result<VectorConfiguration> {
    if n < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "need at least {} points for dimension {d}, got {n}",
            d + 1
        )));
    }
    if params.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} parameters, got {}",
            params.len()
        )));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "moment curve parameters must be strictly increasing".into(),
        ));
    }
    let vectors = params
        .iter()
        .map(|t| {
            let mut row = Vec::with_capacity(d + 1);
            let mut power = integer(1);
            for _ in 0..=d {
                row.push(power.clone());
                power *= t;
            }
            row
        })
        .collect();
    VectorConfiguration::new(vectors, d + 1)
}

/// Sews a new point onto an even-dimensional neighborly polytope through a
/// verified universal flag: the lexicographic program concatenates the
/// blocks `U_i = V(F_i) \ V(F_{i-1})` (ascending labels within a block, the
/// last block holding all remaining vertices) with alternating block signs
/// starting `+`. Returns the extended realization and the certified epsilon.
///
/// The result is asserted to be neighborly; the assertion must not fire on
/// universal flags.
pub fn sew(v: &VectorConfiguration, flag: &Flag) -> Result<(VectorConfiguration, Scalar)> {
    let c = Chirotope::from_configuration(v)?;
    verify_universal_flag(&c, flag)?;
    let prog = sewing_program(v.len(), flag)?;
    let (extended, epsilon) = lex_extend_geometric(v, &prog)?;
    let sewn = Chirotope::from_configuration(&extended)?;
    match is_neighborly(&sewn) {
        Ok(true) => Ok((extended, epsilon)),
        Ok(false) => Err(Error::ConstructionFailed(
            "sewn polytope is not neighborly".into(),
        )),
        Err(e) => Err(Error::ConstructionFailed(format!(
            "sewn configuration is not a polytope ({e})"
        ))),
    }
}

/// The block program `[U_1^+, U_2^-, ..., U_(k+1)^((-1)^k)]` for a flag on a
/// polytope with vertex labels `1..=n`.
pub fn sewing_program(n: usize, flag: &Flag) -> Result<LexProgram> {
    let mut steps: Vec<(usize, Sign)> = Vec::with_capacity(n);
    let mut covered: Vec<usize> = Vec::new();
    let mut sign = Sign::Plus;
    for face in flag.faces() {
        for &label in face {
            if !covered.contains(&label) {
                steps.push((label, sign));
                covered.push(label);
            }
        }
        sign = sign.negate();
    }
    for label in 1..=n {
        if !covered.contains(&label) {
            steps.push((label, sign));
        }
    }
    LexProgram::new(steps)
}

/// Gale sewing at the chirotope level. `c_dual` is the dual of a neighborly
/// polytope's oriented matroid, uniform of rank `r`; `p_prog` must name `r`
/// distinct independent elements (a general-position extension). Applies the
/// extension by `p_prog` followed by the derived extension
/// `[p^-, a_1^-, ..., a_(r-1)^-]` and returns the extended dual; the caller
/// dualizes. The dual of the result is asserted to be neighborly of
/// dimension `d + 2`.
pub fn gale_sew(c_dual: &Chirotope, p_prog: &LexProgram) -> Result<Chirotope> {
    check_general_position(c_dual, p_prog)?;
    let first = lex_extend_symbolic(c_dual, p_prog)?;
    let p_label = *first.labels().last().expect("extension added an element");
    let q_prog = derived_program(p_prog, p_label, c_dual.rank())?;
    let second = lex_extend_symbolic(&first, &q_prog)?;
    if !is_neighborly(&second.dual())? {
        return Err(Error::ConstructionFailed(
            "Gale sewing produced a non-neighborly dual".into(),
        ));
    }
    Ok(second)
}

/// `[p^-, a_1^-, ..., a_(r-1)^-]`: the second extension of a Gale sewing
/// step, built from the first program and the label of its new element.
fn derived_program(p_prog: &LexProgram, p_label: usize, rank: usize) -> Result<LexProgram> {
    let mut steps = vec![(p_label, Sign::Minus)];
    for &(label, _) in &p_prog.steps()[..rank - 1] {
        steps.push((label, Sign::Minus));
    }
    LexProgram::new(steps)
}

fn check_general_position(c_dual: &Chirotope, p_prog: &LexProgram) -> Result<()> {
    if !c_dual.is_uniform() {
        return Err(Error::NotUniform);
    }
    let r = c_dual.rank();
    if p_prog.len() != r {
        return Err(Error::GeneralPosition(format!(
            "program has {} steps, dual rank is {r}",
            p_prog.len()
        )));
    }
    let mut positions: Vec<usize> = p_prog
        .steps()
        .iter()
        .map(|&(label, _)| c_dual.position_of(label))
        .collect::<Result<_>>()?;
    positions.sort_unstable();
    positions.dedup();
    if positions.len() != r {
        return Err(Error::GeneralPosition(
            "program elements are not distinct".into(),
        ));
    }
    if c_dual.sign(&positions).is_zero() {
        return Err(Error::GeneralPosition(
            "program elements are dependent".into(),
        ));
    }
    Ok(())
}

/// Gale sewing on a realized dual configuration: both extensions are
/// performed geometrically with certified epsilons. Returns the extended
/// dual realization and the two epsilons.
pub fn gale_sew_configuration(
    w_dual: &VectorConfiguration,
    p_prog: &LexProgram,
) -> Result<(VectorConfiguration, Scalar, Scalar)> {
    let c_dual = Chirotope::from_configuration(w_dual)?;
    let expected = gale_sew(&c_dual, p_prog)?;
    let (w1, eps1) = lex_extend_geometric(w_dual, p_prog)?;
    let q_prog = derived_program(p_prog, w_dual.len() + 1, c_dual.rank())?;
    let (w2, eps2) = lex_extend_geometric(&w1, &q_prog)?;
    if Chirotope::from_configuration(&w2)? != expected {
        return Err(Error::InternalConsistency(
            "geometric Gale sewing diverged from the symbolic extension".into(),
        ));
    }
    Ok((w2, eps1, eps2))
}

/// One Gale sewing step on a realized polytope: dualize via the Gale
/// transform, extend twice in the dual, transform back. Takes a neighborly
/// `d`-polytope realization on `n` points to one with `(n + 2, d + 2)`.
pub fn gale_sew_polytope(
    v: &VectorConfiguration,
    p_prog: &LexProgram,
) -> Result<VectorConfiguration> {
    let dual = v.gale_transform()?;
    let (extended_dual, _, _) = gale_sew_configuration(&dual, p_prog)?;
    let sewn = extended_dual.gale_transform()?;
    if !is_neighborly(&Chirotope::from_configuration(&sewn)?)? {
        return Err(Error::ConstructionFailed(
            "Gale sewing step produced a non-neighborly polytope".into(),
        ));
    }
    Ok(sewn)
}

/// Output of [`gale_sewn_pipeline`]: the realized polytope, its chirotope
/// and the replayable log.
#[derive(Debug, Clone)]
pub struct PipelineResult {
    pub configuration: VectorConfiguration,
    pub chirotope: Chirotope,
    pub log: ConstructionLog,
}

/// Repeated Gale sewing from a polygon seed: `steps` sewing steps take the
/// `m`-gon to a neighborly polytope of dimension `d = 2 + 2k` on
/// `n = m + 2k` vertices. `p_choices` overrides the extension program per
/// step; by default each step extends by the `r` lexicographically smallest
/// labels with all `+` signs (`r` is the dual rank `m - 3`, constant through
/// the pipeline).
pub fn gale_sewn_pipeline(
    m: usize,
    steps: usize,
    p_choices: &[LexProgram],
) -> Result<PipelineResult> {
    if m < 4 {
        return Err(Error::InvalidArgument(format!(
            "pipeline seed polygon needs at least 4 vertices, got {m}"
        )));
    }
    if steps < 1 {
        return Err(Error::InvalidArgument("pipeline needs at least 1 step".into()));
    }
    if !p_choices.is_empty() && p_choices.len() != steps {
        return Err(Error::InvalidArgument(format!(
            "expected {steps} program choices, got {}",
            p_choices.len()
        )));
    }
    let dual_rank = m - 3;
    let mut v = polygon(m)?;
    let mut log = ConstructionLog::new(Seed::Polygon { m });
    for i in 0..steps {
        let prog = if p_choices.is_empty() {
            LexProgram::new((1..=dual_rank).map(|l| (l, Sign::Plus)).collect())?
        } else {
            p_choices[i].clone()
        };
        v = gale_sew_polytope(&v, &prog)?;
        log.push(Step::GaleSew(prog));
    }
    let chirotope = Chirotope::from_configuration(&v)?;
    let (d, n) = (chirotope.polytope_dim(), chirotope.ground_size());
    if d != 2 + 2 * steps || n != m + 2 * steps {
        return Err(Error::InternalConsistency(format!(
            "pipeline produced (d, n) = ({d}, {n}), expected ({}, {})",
            2 + 2 * steps,
            m + 2 * steps
        )));
    }
    Ok(PipelineResult {
        configuration: v,
        chirotope,
        log,
    })
}

/// A successful neighborly completion: the extended rank-3 chirotope on `2n`
/// elements, its dual (a neighborly polytope of dimension `2n - 4` on `2n`
/// vertices), the realized extension and the replayable log.
#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub chirotope: Chirotope,
    pub polytope: Chirotope,
    pub configuration: VectorConfiguration,
    pub log: ConstructionLog,
}

/// Outcome of the completion search. `found: None` with
/// `budget_exhausted: true` says nothing about existence; the search was cut
/// off.
#[derive(Debug, Clone)]
pub struct CompletionSearch {
    pub found: Option<CompletionResult>,
    pub nodes: usize,
    pub budget_exhausted: bool,
}

#[derive(Clone)]
enum CompletionMove {
    /// One general-position extension by a signed triple.
    Single(LexProgram),
    /// A Gale-sewing pair: the `p` program followed by the derived
    /// `[p^-, a_1^-, a_2^-]`.
    Pair(LexProgram),
}

/// Extends a uniform rank-3 realized oriented matroid on `n` elements by `n`
/// lexicographic extensions so that the dual of the result is a neighborly
/// polytope of dimension `2n - 4` on `2n` vertices.
///
/// Candidate extensions are general-position signed triples and Gale-sewing
/// pairs, enumerated in lexicographic order (all single triples first, then
/// pairs; element tuples ascending, `-` before `+` per slot), searched depth
/// first. Subtrees that provably cannot reach a balanced Gale diagram are
/// skipped. `budget` caps the number of candidate extensions applied; an
/// exhausted budget is reported as not-found, never as a refutation.
pub fn neighborly_completion(v: &VectorConfiguration, budget: usize) -> Result<CompletionSearch> {
    if v.rank_dim() != 3 {
        return Err(Error::InvalidArgument(format!(
            "completion input must have rank 3, got {}",
            v.rank_dim()
        )));
    }
    let root = Chirotope::from_configuration(v)?;
    if !root.is_uniform() {
        return Err(Error::NotUniform);
    }
    let n = v.len();
    let target = 2 * n;
    let mut ctx = CompletionCtx {
        target,
        needed_side: n - 1,
        budget,
        nodes: 0,
        budget_exhausted: false,
    };
    let witness = completion_dfs(&root, &mut ctx);

    let Some(moves) = witness else {
        return Ok(CompletionSearch {
            found: None,
            nodes: ctx.nodes,
            budget_exhausted: ctx.budget_exhausted,
        });
    };

    // Realize the witness geometrically and record the log.
    let mut config = v.clone();
    let mut log = ConstructionLog::new(Seed::Points(v.clone()));
    for mv in moves {
        match mv {
            CompletionMove::Single(prog) => {
                config = lex_extend_geometric(&config, &prog)?.0;
                log.push(Step::Extend(prog));
            }
            CompletionMove::Pair(p_prog) => {
                let q_prog = derived_program(&p_prog, config.len() + 1, 3)?;
                config = lex_extend_geometric(&config, &p_prog)?.0;
                log.push(Step::Extend(p_prog));
                config = lex_extend_geometric(&config, &q_prog)?.0;
                log.push(Step::Extend(q_prog));
            }
        }
    }
    let chirotope = Chirotope::from_configuration(&config)?;
    let polytope = chirotope.dual();
    if chirotope.ground_size() != target || !is_neighborly(&polytope)? {
        return Err(Error::InternalConsistency(
            "completion witness failed re-verification".into(),
        ));
    }
    Ok(CompletionSearch {
        found: Some(CompletionResult {
            chirotope,
            polytope,
            configuration: config,
            log,
        }),
        nodes: ctx.nodes,
        budget_exhausted: ctx.budget_exhausted,
    })
}

struct CompletionCtx {
    target: usize,
    needed_side: usize,
    budget: usize,
    nodes: usize,
    budget_exhausted: bool,
}

fn completion_dfs(c: &Chirotope, ctx: &mut CompletionCtx) -> Option<Vec<CompletionMove>> {
    let ground = c.ground_size();
    if ground == ctx.target {
        let neighborly = is_neighborly(&c.dual()).unwrap_or(false);
        return neighborly.then(Vec::new);
    }
    let remaining = ctx.target - ground;
    for mv in completion_moves(c, remaining) {
        if ctx.nodes >= ctx.budget {
            ctx.budget_exhausted = true;
            return None;
        }
        let (next, cost) = match &mv {
            CompletionMove::Single(prog) => {
                let ext = lex_extend_symbolic(c, prog).expect("candidate program is valid");
                (ext, 1)
            }
            CompletionMove::Pair(p_prog) => {
                let first = lex_extend_symbolic(c, p_prog).expect("candidate program is valid");
                let p_label = *first.labels().last().expect("fresh label");
                let q_prog =
                    derived_program(p_prog, p_label, 3).expect("derived program is valid");
                let second =
                    lex_extend_symbolic(&first, &q_prog).expect("derived program is valid");
                (second, 2)
            }
        };
        ctx.nodes += cost;
        if !balance_reachable(&next, ctx.target, ctx.needed_side) {
            continue;
        }
        if let Some(mut path) = completion_dfs(&next, ctx) {
            path.insert(0, mv);
            return Some(path);
        }
        if ctx.budget_exhausted {
            return None;
        }
    }
    None
}

/// Candidate moves at a node: every signed ascending triple as a single
/// extension, then (when two slots remain) as a Gale-sewing pair.
fn completion_moves(c: &Chirotope, remaining: usize) -> Vec<CompletionMove> {
    let labels = c.labels();
    let n = labels.len();
    let mut triples: Vec<LexProgram> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for s1 in [Sign::Minus, Sign::Plus] {
                    for s2 in [Sign::Minus, Sign::Plus] {
                        for s3 in [Sign::Minus, Sign::Plus] {
                            let steps =
                                vec![(labels[i], s1), (labels[j], s2), (labels[k], s3)];
                            triples.push(LexProgram::new(steps).expect("nonempty"));
                        }
                    }
                }
            }
        }
    }
    let mut moves: Vec<CompletionMove> = triples
        .iter()
        .cloned()
        .map(CompletionMove::Single)
        .collect();
    if remaining >= 2 {
        moves.extend(triples.into_iter().map(CompletionMove::Pair));
    }
    moves
}

/// Sound pruning bound for the completion search. The dual of a uniform
/// rank-3 chirotope on `target` elements is neighborly exactly when every
/// open halfspace through the origin contains at least `needed` of the
/// vectors; each future extension adds at most one vector to any fixed
/// halfspace, so a side count that cannot reach `needed` kills the subtree.
fn balance_reachable(c: &Chirotope, target: usize, needed: usize) -> bool {
    let n = c.ground_size();
    let slack = target - n;
    for i in 0..n {
        for j in i + 1..n {
            let mut plus = 0usize;
            let mut minus = 0usize;
            for e in 0..n {
                if e == i || e == j {
                    continue;
                }
                match c.sign_of_sequence(&[i, j, e]) {
                    Sign::Plus => plus += 1,
                    Sign::Minus => minus += 1,
                    Sign::Zero => {}
                }
            }
            if plus + slack < needed || minus + slack < needed {
                return false;
            }
        }
    }
    true
}

/// Report of the realization-space openness probe: how many random
/// perturbations of all coordinates preserved the chirotope, plus the
/// dimension bookkeeping `(d+1)(n-d-1) = n*r - r^2` for the dual rank `r`.
#[derive(Debug, Clone)]
pub struct OpennessReport {
    pub trials: usize,
    pub preserved: usize,
    pub n: usize,
    pub dim: usize,
    pub dual_rank: usize,
    pub expected_dimension: usize,
}

impl OpennessReport {
    pub fn all_preserved(&self) -> bool {
        self.preserved == self.trials
    }

    /// The arithmetic identity `(d+1)(n-d-1) = n*r - r^2` with `r = n-d-1`.
    pub fn dimension_identity_holds(&self) -> bool {
        let r = self.dual_rank;
        self.expected_dimension == self.n * r - r * r
    }

    pub fn to_text(&self) -> String {
        format!(
            "trials {}\npreserved {}\nn {}\ndim {}\ndual_rank {}\nexpected_dimension {}\n",
            self.trials, self.preserved, self.n, self.dim, self.dual_rank, self.expected_dimension
        )
    }
}

/// Perturbs every coordinate of `v` independently by uniform rational noise
/// in `[-delta, delta]` for `trials` samples and reports how many
/// perturbations preserve the chirotope, together with the expected
/// realization-space dimension `(d+1)(n-d-1)`. Requires a uniform chirotope
/// (simple zero-free openness; a zero determinant has no sign to preserve).
/// The noise stream is deterministic in `seed`.
pub fn openness_probe(
    v: &VectorConfiguration,
    trials: usize,
    delta: &Scalar,
    seed: u64,
) -> Result<OpennessReport> {
    let c = Chirotope::from_configuration(v)?;
    if !c.is_uniform() {
        return Err(Error::NotUniform);
    }
    let n = v.len();
    let dim = c.polytope_dim();
    let dual_rank = n - dim - 1;
    let expected_dimension = (dim + 1) * dual_rank;

    let mut rng = SplitMix64(seed);
    let denominator = 1 << 20;
    let mut preserved = 0;
    for _ in 0..trials {
        let vectors: Vec<Vec<Scalar>> = v
            .vectors()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let k = (rng.next_u64() % (2 * denominator + 1)) as i64 - denominator as i64;
                        x + delta * rational(k, denominator as i64)
                    })
                    .collect()
            })
            .collect();
        let perturbed = VectorConfiguration::new(vectors, v.rank_dim())?;
        if Chirotope::from_configuration(&perturbed).map(|p| p == c).unwrap_or(false) {
            preserved += 1;
        }
    }
    Ok(OpennessReport {
        trials,
        preserved,
        n,
        dim,
        dual_rank,
        expected_dimension,
    })
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

/// Starting configuration of a construction log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Seed {
    /// `cyclic d n t1 ... tn`: moment curve with explicit parameters.
    Cyclic { d: usize, params: Vec<Scalar> },
    /// `polygon m`: the canonical m-gon (parameters `0..m`).
    Polygon { m: usize },
    /// `points n r ...`: an explicit configuration, row-major.
    Points(VectorConfiguration),
}

impl Seed {
    pub fn build(&self) -> Result<VectorConfiguration> {
        match self {
            Seed::Cyclic { d, params } => cyclic(*d, params.len(), params),
            Seed::Polygon { m } => polygon(*m),
            Seed::Points(v) => Ok(v.clone()),
        }
    }
}

/// One recorded construction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// `EXT <prog>`: a geometric lexicographic extension.
    Extend(LexProgram),
    /// `GALESEW <p_prog>`: one Gale sewing step on the current polytope.
    GaleSew(LexProgram),
    /// `SEW <flag>`: sewing through a universal flag.
    Sew(Flag),
}

/// A replayable record of a construction: a seed plus an ordered list of
/// steps. Replaying applies each step to the realized configuration, so the
/// final chirotope is reproduced exactly.
///
/// Text format, one item per line:
/// `SEED cyclic d n t1 ... tn` | `SEED polygon m` | `SEED points n r <entries>`
/// then `EXT <prog>` | `GALESEW <prog>` | `SEW <flag>` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionLog {
    seed: Seed,
    steps: Vec<Step>,
}

impl ConstructionLog {
    pub fn new(seed: Seed) -> Self {
        ConstructionLog {
            seed,
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Rebuilds the realized configuration from the seed.
    pub fn replay(&self) -> Result<VectorConfiguration> {
        let mut v = self.seed.build()?;
        for step in &self.steps {
            v = match step {
                Step::Extend(prog) => lex_extend_geometric(&v, prog)?.0,
                Step::GaleSew(prog) => gale_sew_polytope(&v, prog)?,
                Step::Sew(flag) => sew(&v, flag)?.0,
            };
        }
        Ok(v)
    }

    /// Rebuilds and returns the final chirotope.
    pub fn replay_chirotope(&self) -> Result<Chirotope> {
        Chirotope::from_configuration(&self.replay()?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.seed {
            Seed::Cyclic { d, params } => {
                let ts: Vec<String> = params.iter().map(Scalar::to_string).collect();
                out.push_str(&format!("SEED cyclic {d} {} {}\n", params.len(), ts.join(" ")));
            }
            Seed::Polygon { m } => out.push_str(&format!("SEED polygon {m}\n")),
            Seed::Points(v) => {
                let entries: Vec<String> = v
                    .vectors()
                    .iter()
                    .flat_map(|row| row.iter().map(Scalar::to_string))
                    .collect();
                out.push_str(&format!(
                    "SEED points {} {} {}\n",
                    v.len(),
                    v.rank_dim(),
                    entries.join(" ")
                ));
            }
        }
        for step in &self.steps {
            match step {
                Step::Extend(prog) => out.push_str(&format!("EXT {prog}\n")),
                Step::GaleSew(prog) => out.push_str(&format!("GALESEW {prog}\n")),
                Step::Sew(flag) if flag.is_empty() => out.push_str("SEW\n"),
                Step::Sew(flag) => out.push_str(&format!("SEW {flag}\n")),
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut seed: Option<Seed> = None;
        let mut steps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let (verb, rest) = match line.split_once(char::is_whitespace) {
                Some((v, r)) => (v, r.trim()),
                None => (line, ""),
            };
            match verb {
                "SEED" => {
                    if seed.is_some() {
                        return Err(Error::parse(lineno, "duplicate SEED line"));
                    }
                    seed = Some(parse_seed(rest, lineno)?);
                }
                "EXT" | "GALESEW" => {
                    if seed.is_none() {
                        return Err(Error::parse(lineno, "step before SEED"));
                    }
                    let prog = LexProgram::parse(rest)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                    steps.push(if verb == "EXT" {
                        Step::Extend(prog)
                    } else {
                        Step::GaleSew(prog)
                    });
                }
                "SEW" => {
                    if seed.is_none() {
                        return Err(Error::parse(lineno, "step before SEED"));
                    }
                    let flag =
                        Flag::parse(rest).map_err(|e| Error::parse(lineno, e.to_string()))?;
                    steps.push(Step::Sew(flag));
                }
                other => {
                    return Err(Error::parse(lineno, format!("unknown log verb '{other}'")));
                }
            }
        }
        let seed = seed.ok_or_else(|| Error::parse(1, "missing SEED line"))?;
        Ok(ConstructionLog { seed, steps })
    }
}

fn parse_seed(rest: &str, lineno: usize) -> Result<Seed> {
    let mut tokens = rest.split_whitespace();
    match tokens.next() {
        Some("cyclic") => {
            let d: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "SEED cyclic needs 'd n t1 ... tn'"))?;
            let n: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "SEED cyclic needs 'd n t1 ... tn'"))?;
            let params: Vec<Scalar> = tokens
                .map(|t| parse_scalar(t).map_err(|m| Error::parse(lineno, m)))
                .collect::<Result<_>>()?;
            if params.len() != n {
                return Err(Error::parse(
                    lineno,
                    format!("expected {n} parameters, got {}", params.len()),
                ));
            }
            Ok(Seed::Cyclic { d, params })
        }
        Some("polygon") => {
            let m: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "SEED polygon needs 'm'"))?;
            if tokens.next().is_some() {
                return Err(Error::parse(lineno, "SEED polygon takes a single count"));
            }
            Ok(Seed::Polygon { m })
        }
        Some("points") => {
            let n: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "SEED points needs 'n r <entries>'"))?;
            let r: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "SEED points needs 'n r <entries>'"))?;
            let entries: Vec<Scalar> = tokens
                .map(|t| parse_scalar(t).map_err(|m| Error::parse(lineno, m)))
                .collect::<Result<_>>()?;
            if entries.len() != n * r {
                return Err(Error::parse(
                    lineno,
                    format!("expected {} entries, got {}", n * r, entries.len()),
                ));
            }
            let vectors = entries.chunks(r).map(<[Scalar]>::to_vec).collect();
            Ok(Seed::Points(VectorConfiguration::new(vectors, r)?))
        }
        _ => Err(Error::parse(lineno, "unknown seed kind")),
    }
}
