use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::repr::{Block, BlockString, DigitString};
use crate::ring::{Digit, System};

use super::matrix::{matrices, Matrix};

/// Default limit on consecutive `0` blocks between nonzero blocks.
pub const DEFAULT_GAP_BOUND: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSearch {
    pub n: usize,
    pub gap_bound: usize,
    pub max: BigUint,
    /// Normalized W-NAFs attaining `max`, sorted by text.
    pub attainers: Vec<DigitString>,
}

type Vector = Vec<u128>;
type Mat = Vec<Vec<u128>>;

fn row_times(v: &[u128], m: &Mat) -> Option<Vector> {
    let n = v.len();
    let mut out = vec![0u128; n];
    for (i, &vi) in v.iter().enumerate() {
        if vi == 0 {
            continue;
        }
        for j in 0..n {
            out[j] = out[j].checked_add(vi.checked_mul(m[i][j])?)?;
        }
    }
    Some(out)
}

fn times_col(m: &Mat, u: &[u128]) -> Option<Vector> {
    m.iter()
        .map(|row| row.iter().zip(u).try_fold(0u128, |acc, (&a, &b)| acc.checked_add(a.checked_mul(b)?)))
        .collect()
}

fn dot(v: &[u128], u: &[u128]) -> Option<u128> {
    v.iter().zip(u).try_fold(0u128, |acc, (&a, &b)| acc.checked_add(a.checked_mul(b)?))
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

struct Step {
    gap: usize,
    digit: Digit,
    m: Mat,
}

struct Search<'a> {
    steps: &'a [Step],
    /// `bounds[k]`: componentwise bound on `M₁ ⋯ M_k eᵀ` over all step choices.
    bounds: &'a [Option<Vector>],
    best: u128,
    found: Vec<Vec<(usize, Digit)>>,
    path: Vec<(usize, Digit)>,
}

impl Search<'_> {
    fn run(&mut self, v: &[u128], remaining: usize) -> Result<()> {
        if remaining == 0 {
            let value = v[0];
            if value > self.best {
                self.best = value;
                self.found.clear();
            }
            if value == self.best {
                self.found.push(self.path.clone());
            }
            return Ok(());
        }
        for step in self.steps {
            let next = row_times(v, &step.m).ok_or(Error::Overflow)?;
            let bound = self.bounds[remaining - 1].as_ref().and_then(|u| dot(&next, u));
            if matches!(bound, Some(b) if b < self.best) {
                continue;
            }
            self.path.push((step.gap, step.digit));
            self.run(&next, remaining - 1)?;
            self.path.pop();
        }
        Ok(())
    }
}

/// Maximal optimal count over normalized W-NAFs with exactly `n` nonzero
/// digits, nonzero last digit, and at most `gap_bound` extra `0` blocks
/// between consecutive nonzero blocks, with every string attaining it.
///
/// Exhaustive branch-and-bound: a partial product is abandoned only when an
/// upper bound on every completion is strictly below the best count seen,
/// so all attainers are kept.
pub fn max_optimal_bounded(sys: System, n: usize, gap_bound: usize) -> Result<MaxSearch> {
    if n == 0 {
        return Err(Error::OutOfRange { what: "N", detail: "need at least one nonzero digit".into() });
    }
    let fam = matrices(sys);
    let a: Vec<Mat> = sys.digits().map(|d| fam.a(d).to_u128()).collect();
    let dim = fam.dim();
    let mut steps = Vec::new();
    let mut zeros = Matrix::identity(dim).to_u128();
    for gap in 0..=gap_bound {
        for d in sys.nonzero_digits() {
            steps.push(Step { gap, digit: d, m: mat_mul(&zeros, &a[d.index()]) });
        }
        zeros = mat_mul(&zeros, &a[0]);
    }

    let mut e_col = vec![0u128; dim];
    e_col[0] = 1;
    let mut bounds: Vec<Option<Vector>> = vec![Some(e_col)];
    for k in 1..n {
        let prev = bounds[k - 1].clone();
        let next = prev.and_then(|u| {
            let mut best = vec![0u128; dim];
            for s in &steps {
                let col = times_col(&s.m, &u)?;
                for (b, c) in best.iter_mut().zip(col) {
                    *b = (*b).max(c);
                }
            }
            Some(best)
        });
        bounds.push(next);
    }

    let mut search = Search { steps: &steps, bounds: &bounds, best: 0, found: Vec::new(), path: Vec::new() };
    let mut e = vec![0u128; dim];
    e[0] = 1;
    for d1 in sys.nonzero_digits() {
        let v = row_times(&e, &a[d1.index()]).ok_or(Error::Overflow)?;
        search.path.push((0, d1));
        search.run(&v, n - 1)?;
        search.path.pop();
    }

    let mut attainers: Vec<DigitString> = search
        .found
        .iter()
        .map(|path| {
            let mut blocks = Vec::new();
            for &(gap, d) in path {
                blocks.extend(std::iter::repeat(Block::Zero).take(gap));
                blocks.push(Block::Digit(d));
            }
            BlockString::new(sys, blocks).to_digit_string().normalize()
        })
        .collect();
    attainers.sort_by_cached_key(|s| s.to_string());
    Ok(MaxSearch { n, gap_bound, max: BigUint::from(search.best), attainers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{optimal_count, r_count, r_seq, s_seq};

    #[test]
    fn small_gauss_maxima() {
        for n in 1..=5 {
            let res = max_optimal_bounded(System::Gauss, n, DEFAULT_GAP_BOUND).unwrap();
            assert_eq!(res.max, r_seq(n), "N = {n}");
        }
    }

    #[test]
    fn small_eisenstein_maxima() {
        for n in 1..=5 {
            let res = max_optimal_bounded(System::Eisenstein, n, DEFAULT_GAP_BOUND).unwrap();
            assert_eq!(res.max, s_seq(n as i64), "N = {n}");
        }
    }

    #[test]
    fn attainers_are_consistent() {
        for sys in System::ALL {
            let res = max_optimal_bounded(sys, 3, 2).unwrap();
            for s in &res.attainers {
                assert!(s.is_wnaf() && s.is_normalized());
                assert_eq!(s.hamming_weight(), 3);
                assert!(!s.digits().last().unwrap().is_zero());
                let x = s.eval();
                assert_eq!(optimal_count(&x), res.max);
                assert_eq!(r_count(&x, 3), res.max);
            }
        }
    }

    #[test]
    fn gauss_pair_census() {
        let res = max_optimal_bounded(System::Gauss, 2, 2).unwrap();
        assert_eq!(res.max, 3u32.into());
        assert_eq!(res.attainers.len(), 8);
    }

    #[test]
    fn rejects_zero_weight() {
        assert!(max_optimal_bounded(System::Gauss, 0, 2).is_err());
    }

    /// Brute-force maximum over all bounded W-NAFs via the recursion only.
    #[test]
    fn agrees_with_recursion_oracle() {
        use crate::ring::RingElem;
        for sys in System::ALL {
            for n in 1..=3usize {
                let mut best = BigUint::from(0u32);
                let mut rc = crate::count::RCounter::new();
                let mut strings: Vec<Vec<Block>> = sys.nonzero_digits().map(|d| vec![Block::Digit(d)]).collect();
                for _ in 1..n {
                    let mut next = Vec::new();
                    for s in &strings {
                        for gap in 0..=2 {
                            for d in sys.nonzero_digits() {
                                let mut t = s.clone();
                                t.extend(std::iter::repeat(Block::Zero).take(gap));
                                t.push(Block::Digit(d));
                                next.push(t);
                            }
                        }
                    }
                    strings = next;
                }
                for s in strings {
                    let x: RingElem = BlockString::new(sys, s).to_digit_string().eval();
                    best = best.max(rc.count(&x, n));
                }
                assert_eq!(max_optimal_bounded(sys, n, 2).unwrap().max, best);
            }
        }
    }
}
