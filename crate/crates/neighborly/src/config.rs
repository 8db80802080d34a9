//! Vector configurations: labeled lists of exact rational vectors of a fixed
//! rank. These are the realization data behind every chirotope in the crate.
//!
//! Text format (used by all CLI verbs): line 1 is `n r`, followed by `n`
//! lines of `r` rationals separated by single spaces.

use crate::error::{Error, Result};
use crate::linalg::{parse_scalar, Matrix, Scalar};

/// A configuration of `n` vectors in rank `r`, i.e. an `n x r` grid of exact
/// rationals. Element labels are implicitly `1..=n` in row order; extensions
/// append fresh labels at the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorConfiguration {
    vectors: Vec<Vec<Scalar>>,
    rank: usize,
}

impl VectorConfiguration {
    /// Builds a configuration from vectors that must all have length `rank`.
    pub fn new(vectors: Vec<Vec<Scalar>>, rank: usize) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != rank) {
            return Err(Error::Dimension(format!(
                "all vectors must have length {rank}"
            )));
        }
        Ok(VectorConfiguration { vectors, rank })
    }

    /// Number of vectors.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Ambient rank (length of every vector).
    pub fn rank_dim(&self) -> usize {
        self.rank
    }

    /// Vector of the element with 1-based label `label`.
    pub fn vector(&self, label: usize) -> Result<&[Scalar]> {
        if label == 0 || label > self.vectors.len() {
            return Err(Error::UnknownLabel { label });
        }
        Ok(&self.vectors[label - 1])
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// The configuration as an `n x r` matrix (rows are vectors).
    pub fn as_matrix(&self) -> Matrix {
        Matrix::from_rows(self.vectors.clone()).expect("vectors share a length")
    }

    /// Rank of the configuration as a matrix.
    pub fn rank(&self) -> usize {
        self.as_matrix().rank()
    }

    /// Returns a copy with `vector` appended (the fresh element takes the
    /// next label, `n + 1`).
    pub fn extended(&self, vector: Vec<Scalar>) -> Result<Self> {
        if vector.len() != self.rank {
            return Err(Error::Dimension(format!(
                "extension vector must have length {}",
                self.rank
            )));
        }
        let mut vectors = self.vectors.clone();
        vectors.push(vector);
        Ok(VectorConfiguration {
            vectors,
            rank: self.rank,
        })
    }

    /// Gale transform: the configuration of the `n` columns of a nullspace
    /// basis of the transposed matrix. Its chirotope is the dual oriented
    /// matroid (up to global sign), with rank `n - rank`.
    ///
    /// Requires the configuration to have full rank `r`.
    pub fn gale_transform(&self) -> Result<VectorConfiguration> {
        let n = self.len();
        let r = self.rank;
        if self.rank() < r {
            return Err(Error::DegenerateConfiguration {
                expected: r,
                found: self.rank(),
            });
        }
        let basis = self.as_matrix().transpose().nullspace_basis();
        let dual_rank = basis.rows();
        debug_assert_eq!(dual_rank, n - r);
        let dual = basis.transpose();
        let vectors = (0..n).map(|i| dual.row(i).to_vec()).collect();
        VectorConfiguration::new(vectors, dual_rank)
    }

    /// Parses the `n r` + rows text format. Errors carry 1-based line numbers.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(1, "expected header 'n r'"))?;
        let r: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(1, "expected header 'n r'"))?;
        if parts.next().is_some() {
            return Err(Error::parse(1, "expected header 'n r'"));
        }
        let mut vectors = Vec::with_capacity(n);
        for i in 0..n {
            let lineno = i + 2;
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(lineno, format!("expected {n} vector rows")))?;
            let row: Vec<Scalar> = line
                .split_whitespace()
                .map(|tok| parse_scalar(tok).map_err(|m| Error::parse(lineno, m)))
                .collect::<Result<_>>()?;
            if row.len() != r {
                return Err(Error::parse(
                    lineno,
                    format!("expected {r} entries, got {}", row.len()),
                ));
            }
            vectors.push(row);
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(Error::parse(
                n + 2,
                format!("unexpected trailing content '{extra}'"),
            ));
        }
        VectorConfiguration::new(vectors, r)
    }

    /// Serializes to the text format, with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.len(), self.rank);
        for v in &self.vectors {
            let row: Vec<String> = v.iter().map(|s| s.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer;

    fn square() -> VectorConfiguration {
        VectorConfiguration::new(
            vec![
                vec![integer(1), integer(0), integer(0)],
                vec![integer(1), integer(1), integer(0)],
                vec![integer(1), integer(0), integer(1)],
                vec![integer(1), integer(1), integer(1)],
            ],
            3,
        )
        .unwrap()
    }

    #[test]
    fn text_round_trip() {
        let v = square();
        let text = v.to_text();
        assert!(text.ends_with('\n'));
        assert_eq!(VectorConfiguration::from_text(&text).unwrap(), v);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = VectorConfiguration::from_text("2 2\n1 2\n1 x").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other}"),
        }
        assert!(VectorConfiguration::from_text("").is_err());
        assert!(VectorConfiguration::from_text("2 2\n1 2\n").is_err());
        assert!(VectorConfiguration::from_text("1 2\n1 2\njunk\n").is_err());
    }

    #[test]
    fn gale_transform_dimensions() {
        let g = square().gale_transform().unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.rank_dim(), 1);
    }

    #[test]
    fn labels_are_one_based() {
        let v = square();
        assert_eq!(v.vector(1).unwrap()[1], integer(0));
        assert!(v.vector(0).is_err());
        assert!(v.vector(5).is_err());
    }
}
