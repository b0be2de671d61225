//! Smith normal form over the integers.
//!
//! Pivoting always takes the nonzero entry of smallest absolute value in the
//! active submatrix, scanning row-major, so `U` and `V` are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1, …, d_min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero diagonal entries that are not units.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        move_pivot(&mut d, &mut u, &mut v, t, pi, pj);

        loop {
            if let Some((i, j)) = clear_pivot_cross(&mut d, &mut u, &mut v, t) {
                // a remainder survived; it is smaller than the pivot
                move_pivot(&mut d, &mut u, &mut v, t, i, j);
                continue;
            }
            match non_divisible_entry(&d, t) {
                Some(i) => {
                    // pull row i into the pivot row, then reduce again
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm { u, d, v }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn move_pivot(
    d: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
}

/// Reduces row `t` and column `t` modulo the pivot. Returns the position of
/// the smallest nonzero remainder if the cross could not be cleared.
fn clear_pivot_cross(
    d: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    t: usize,
) -> Option<(usize, usize)> {
    let p = d[(t, t)].clone();
    let mut leftover: Option<(usize, usize, BigInt)> = None;
    let mut note = |i: usize, j: usize, r: &BigInt| {
        if !r.is_zero() {
            let ar = r.abs();
            if leftover.as_ref().is_none_or(|(_, _, b)| ar < *b) {
                leftover = Some((i, j, ar));
            }
        }
    };

    for i in t + 1..d.rows() {
        if d[(i, t)].is_zero() {
            continue;
        }
        let q = d[(i, t)].div_floor(&p);
        let neg = -q;
        d.add_row_multiple(i, t, &neg);
        u.add_row_multiple(i, t, &neg);
        note(i, t, &d[(i, t)]);
    }
    for j in t + 1..d.cols() {
        if d[(t, j)].is_zero() {
            continue;
        }
        let q = d[(t, j)].div_floor(&p);
        let neg = -q;
        d.add_col_multiple(j, t, &neg);
        v.add_col_multiple(j, t, &neg);
        note(t, j, &d[(t, j)]);
    }
    leftover.map(|(i, j, _)| (i, j))
}

fn non_divisible_entry(d: &IntMatrix, t: usize) -> Option<usize> {
    let p = &d[(t, t)];
    for i in t + 1..d.rows() {
        for j in t + 1..d.cols() {
            if !d[(i, j)].is_multiple_of(p) {
                return Some(i);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail");
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn zero_matrix_is_fixed() {
        let a = IntMatrix::zeros(2, 2);
        let s = check(&a);
        assert_eq!(s.d, a);
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.d, IntMatrix::diagonal(2, 2, &[2, 4]));
    }

    #[test]
    fn already_normal() {
        let a = IntMatrix::diagonal(2, 2, &[1, 6]);
        assert_eq!(check(&a).d, a);
    }

    #[test]
    fn coprime_diagonal_recombines() {
        let s = check(&IntMatrix::diagonal(2, 2, &[2, 3]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular_and_empty() {
        check(&IntMatrix::from_rows(&[vec![4, 6, 10]]));
        check(&IntMatrix::from_rows(&[vec![4], vec![6], vec![-10]]));
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
        let s = check(&IntMatrix::from_rows(&[vec![-3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(3)]);
    }
}
