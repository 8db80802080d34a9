//! Small combinatorial helpers: binomial coefficients, lexicographic
//! enumeration and ranking of sorted subsets, permutation parities.
//!
//! Chirotope storage relies on the bijection between sorted `r`-subsets of
//! `0..n` and their lexicographic rank, so enumeration order and ranking must
//! agree exactly; both live here.

/// Binomial coefficient C(n, k) as a usize. Desk-scale inputs only; panics on
/// overflow rather than silently wrapping.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

/// Iterator over the sorted k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    let current = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    Combinations { n, k, current }
}

/// See [`combinations`].
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.as_mut()?;
        let out = current.clone();
        // Advance to the lexicographic successor.
        let k = self.k;
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if current[i] < self.n - k + i {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Lexicographic rank of a sorted k-subset of `0..n` among all C(n, k)
/// subsets; inverse of the enumeration order of [`combinations`].
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut next = 0;
    for (i, &s) in subset.iter().enumerate() {
        for e in next..s {
            rank += binomial(n - 1 - e, k - 1 - i);
        }
        next = s + 1;
    }
    rank
}

/// Parity of the permutation given as a sequence of distinct values:
/// +1 for even, -1 for odd (counted by inversions).
pub fn permutation_sign(seq: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(8, 0), 1);
        assert_eq!(binomial(8, 8), 1);
        assert_eq!(binomial(4, 6), 0);
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn combinations_lex_order_and_rank_agree() {
        for (n, k) in [(5, 2), (6, 3), (4, 4), (7, 1), (3, 0)] {
            let all: Vec<_> = combinations(n, k).collect();
            assert_eq!(all.len(), binomial(n, k));
            for (i, s) in all.iter().enumerate() {
                assert_eq!(subset_rank(n, s), i, "rank mismatch for {s:?}");
                if i > 0 {
                    assert!(all[i - 1] < *s, "not lexicographically increasing");
                }
            }
        }
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
        assert_eq!(permutation_sign(&[2, 1, 0]), -1);
    }
}
