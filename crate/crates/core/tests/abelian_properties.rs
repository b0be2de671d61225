use homsum::{cokernel, smith_normal_form, FgAbGroup, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = if c == 0 {
                vec![Vec::new(); r]
            } else {
                v.chunks(c).map(<[i64]>::to_vec).collect()
            };
            let mut m = IntMatrix::zeros(r, c);
            for (i, row) in rows.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m[(i, j)] = x.into();
                }
            }
            m
        })
    })
}

/// Determinant by cofactor expansion; independent of the library's Bareiss routine.
fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}` where
/// `D_k` is the gcd of all `k × k` minors.
fn invariant_factors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&det_cofactor(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

#[test]
fn two_by_two_oracle() {
    let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
    assert_eq!(
        invariant_factors_by_minors(&a),
        vec![BigInt::from(2), BigInt::from(4)]
    );
    let s = smith_normal_form(&a);
    assert_eq!(s.d, IntMatrix::diagonal(2, 2, &[2, 4]));
    let det = s.diagonal().iter().product::<BigInt>();
    assert_eq!(det, a.determinant().unwrap().abs());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn snf_diagonal_matches_determinantal_divisors(a in matrix(4, 10)) {
        let s = smith_normal_form(&a);
        let nonzero: Vec<BigInt> = s.diagonal().into_iter().filter(|x| !x.is_zero()).collect();
        prop_assert_eq!(nonzero, invariant_factors_by_minors(&a));
    }

    #[test]
    fn snf_postconditions(a in matrix(8, 10)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn bareiss_matches_cofactor(a in matrix(5, 10)) {
        if a.is_square() {
            let rows: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
            prop_assert_eq!(a.determinant().unwrap(), det_cofactor(&rows));
        }
    }

    #[test]
    fn cokernel_invariant_under_row_and_column_moves(a in matrix(5, 10), seed in any::<u64>()) {
        let g = cokernel(&a);
        let (r, c) = a.shape();
        let mut b = a.clone();
        if r >= 2 {
            let i = (seed as usize) % r;
            let j = (seed as usize / 7) % r;
            b = permuted_rows(&b, i, j);
        }
        if c >= 2 {
            let i = (seed as usize / 13) % c;
            let j = (seed as usize / 29) % c;
            b = permuted_rows(&b.transpose(), i, j).transpose();
        }
        if r >= 1 {
            let i = (seed as usize / 31) % r;
            for j in 0..c {
                b[(i, j)] = -b[(i, j)].clone();
            }
        }
        prop_assert_eq!(cokernel(&b), g.clone());
        // rank + #torsion + #units = rows
        let units = smith_normal_form(&a).diagonal().iter().filter(|x| x.is_one()).count();
        prop_assert_eq!(g.rank() + g.torsion().len() + units, r);
    }

    #[test]
    fn canonicalization_agrees_with_snf(orders in prop::collection::vec(1i64..40, 0..6), rank in 0usize..3) {
        let g = FgAbGroup::from_cyclic(rank, orders.iter().copied());
        let n = orders.len();
        let mut diag = IntMatrix::diagonal(n + rank, n, &orders);
        if n == 0 {
            diag = IntMatrix::zeros(rank, 0);
        }
        prop_assert_eq!(cokernel(&diag), g.clone());
        prop_assert_eq!(g.torsion_order(), orders.iter().map(|&o| BigInt::from(o)).product::<BigInt>());
    }

    #[test]
    fn direct_sum_laws(
        a in (0usize..3, prop::collection::vec(1i64..20, 0..3)),
        b in (0usize..3, prop::collection::vec(1i64..20, 0..3)),
        c in (0usize..3, prop::collection::vec(1i64..20, 0..3)),
    ) {
        let g = |(r, t): (usize, Vec<i64>)| FgAbGroup::from_cyclic(r, t);
        let (a, b, c) = (g(a), g(b), g(c));
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.direct_sum(&FgAbGroup::trivial()), a.clone());
        prop_assert_eq!(FgAbGroup::trivial().direct_sum(&a), a.clone());
        prop_assert!(a.is_isomorphic(&a));
        prop_assert_eq!(a.is_isomorphic(&b), b.is_isomorphic(&a));
        if a.is_isomorphic(&b) && b.is_isomorphic(&c) {
            prop_assert!(a.is_isomorphic(&c));
        }
    }
}

fn permuted_rows(m: &IntMatrix, i: usize, j: usize) -> IntMatrix {
    let mut out = m.clone();
    for c in 0..m.cols() {
        out[(i, c)] = m[(j, c)].clone();
        out[(j, c)] = m[(i, c)].clone();
    }
    out
}
