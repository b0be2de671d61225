//! Cellular chain complexes over ℤ.
//!
//! Complexes describing pointed spaces carry a single degree-0 generator (the
//! basepoint) with `∂_1 = 0`. The reduced operations ([`ChainComplex::reduced`],
//! [`shift`], [`smash`], [`wedge`]) drop that generator, work on what remains
//! and put it back with [`ChainComplex::pointed`].

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{smith_normal_form, FgAbGroup, IntMatrix};
use crate::graded::GradedGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("boundary ∂_{degree} has shape {found:?}, expected {expected:?}")]
    BoundaryShape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("∂_{lower} ∘ ∂_{} is not zero", lower + 1)]
    NotAComplex { lower: usize },
    #[error("complex has top degree {top} but {found} chain groups")]
    GroupCount { top: usize, found: usize },
    #[error("complex needs {expected} boundary maps, found {found}")]
    BoundaryCount { expected: usize, found: usize },
}

/// `C_0 ← C_1 ← … ← C_top`, with `∂_q : C_q → C_{q-1}` stored as a
/// `rank(C_{q-1}) × rank(C_q)` matrix.
///
/// `boundaries[i]` is `∂_{i+1}`; `∂_0` is implicitly zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct ChainComplex {
    groups: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    top: usize,
    groups: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl TryFrom<RawComplex> for ChainComplex {
    type Error = ChainError;

    fn try_from(raw: RawComplex) -> Result<Self, ChainError> {
        if raw.groups.len() != raw.top + 1 {
            return Err(ChainError::GroupCount {
                top: raw.top,
                found: raw.groups.len(),
            });
        }
        ChainComplex::new(raw.groups, raw.boundaries)
    }
}

impl From<ChainComplex> for RawComplex {
    fn from(c: ChainComplex) -> Self {
        RawComplex {
            top: c.top(),
            groups: c.groups,
            boundaries: c.boundaries,
        }
    }
}

impl ChainComplex {
    /// Accepts any boundary matrices as long as there is one per positive
    /// degree; shapes and `∂∘∂ = 0` are checked by [`ChainComplex::validate`].
    pub fn new(groups: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, ChainError> {
        let groups = if groups.is_empty() { vec![0] } else { groups };
        if boundaries.len() != groups.len() - 1 {
            return Err(ChainError::BoundaryCount {
                expected: groups.len() - 1,
                found: boundaries.len(),
            });
        }
        Ok(ChainComplex { groups, boundaries })
    }

    /// Complex with the given ranks and every boundary zero.
    pub fn with_zero_boundaries(groups: Vec<usize>) -> Self {
        let groups = if groups.is_empty() { vec![0] } else { groups };
        let boundaries = (1..groups.len())
            .map(|q| IntMatrix::zeros(groups[q - 1], groups[q]))
            .collect();
        ChainComplex { groups, boundaries }
    }

    /// One generator in degree 0.
    pub fn point() -> Self {
        Self::with_zero_boundaries(vec![1])
    }

    /// Minimal cell model of `S^n`.
    pub fn sphere(n: usize) -> Self {
        let mut g = vec![0; n + 1];
        g[0] = 1;
        g[n] += 1;
        Self::with_zero_boundaries(g)
    }

    pub fn top(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn groups(&self) -> &[usize] {
        &self.groups
    }

    pub fn rank_at(&self, q: usize) -> usize {
        self.groups.get(q).copied().unwrap_or(0)
    }

    /// `∂_q`; a zero matrix of the right shape outside `1..=top`.
    pub fn boundary(&self, q: usize) -> IntMatrix {
        if q >= 1 && q <= self.top() {
            self.boundaries[q - 1].clone()
        } else {
            let lower = if q == 0 { 0 } else { self.rank_at(q - 1) };
            IntMatrix::zeros(lower, self.rank_at(q))
        }
    }

    fn boundary_ref(&self, q: usize) -> Option<&IntMatrix> {
        (q >= 1 && q <= self.top()).then(|| &self.boundaries[q - 1])
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    pub fn check(&self) -> Result<(), ChainError> {
        for q in 1..=self.top() {
            let expected = (self.groups[q - 1], self.groups[q]);
            let found = self.boundaries[q - 1].shape();
            if expected != found {
                return Err(ChainError::BoundaryShape {
                    degree: q,
                    expected,
                    found,
                });
            }
        }
        for q in 1..self.top() {
            let composite = &self.boundaries[q - 1] * &self.boundaries[q];
            if !composite.is_zero() {
                return Err(ChainError::NotAComplex { lower: q });
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// `H_q = ker ∂_q / im ∂_{q+1}` for `0 ≤ q ≤ top`.
    pub fn homology(&self) -> Result<GradedGroup, ChainError> {
        self.check()?;
        let top = self.top();
        // smith[q] is the normal form of ∂_q for q in 1..=top
        let smith: Vec<Option<_>> = (0..=top)
            .map(|q| self.boundary_ref(q).map(smith_normal_form))
            .collect();
        let mut out = GradedGroup::new();
        for q in 0..=top {
            let out_rank = smith[q].as_ref().map_or(0, |s| s.rank());
            let (in_rank, torsion) = match smith.get(q + 1).and_then(Option::as_ref) {
                Some(s) => (s.rank(), s.invariant_factors()),
                None => (0, Vec::new()),
            };
            let free = self.groups[q] - out_rank - in_rank;
            out.set(q, FgAbGroup::from_cyclic(free, torsion));
        }
        Ok(out)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(q, &r)| if q % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Same complex with the degree-0 group removed and `∂_1` dropped.
    pub fn reduced(&self) -> Self {
        let mut out = self.clone();
        out.groups[0] = 0;
        if out.top() >= 1 {
            out.boundaries[0] = IntMatrix::zeros(0, out.groups[1]);
        }
        out
    }

    /// Same complex with a single basepoint generator in degree 0 and `∂_1 = 0`.
    pub fn pointed(&self) -> Self {
        let mut out = self.clone();
        out.groups[0] = 1;
        if out.top() >= 1 {
            out.boundaries[0] = IntMatrix::zeros(1, out.groups[1]);
        }
        out
    }

    /// Removes trailing zero-rank degrees (keeping degree 0).
    pub fn trimmed(&self) -> Self {
        let mut top = self.top();
        while top > 0 && self.groups[top] == 0 {
            top -= 1;
        }
        ChainComplex {
            groups: self.groups[..=top].to_vec(),
            boundaries: self.boundaries[..top].to_vec(),
        }
    }

    /// Truncation to degrees `0..=top`.
    pub fn truncated(&self, top: usize) -> Self {
        let top = top.min(self.top());
        ChainComplex {
            groups: self.groups[..=top].to_vec(),
            boundaries: self.boundaries[..top].to_vec(),
        }
    }

    /// Appends a degree `top + 1` with the given rank and boundary.
    pub fn extended(&self, rank: usize, boundary: IntMatrix) -> Result<Self, ChainError> {
        let mut groups = self.groups.clone();
        groups.push(rank);
        let mut boundaries = self.boundaries.clone();
        boundaries.push(boundary);
        let out = ChainComplex { groups, boundaries };
        out.check()?;
        Ok(out)
    }

    /// Pads with zero groups up to degree `top`.
    fn padded(&self, top: usize) -> Self {
        let mut out = self.clone();
        while out.top() < top {
            let below = *out.groups.last().unwrap();
            out.groups.push(0);
            out.boundaries.push(IntMatrix::zeros(below, 0));
        }
        out
    }
}

/// `C ⊗ D` with `∂(c ⊗ d) = ∂c ⊗ d + (-1)^{deg c} c ⊗ ∂d`.
///
/// Degree-`n` basis elements are ordered by the degree `i` of the left factor,
/// then by the left generator, then by the right generator.
pub fn tensor(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    let top = c.top() + d.top();

    let blocks = |n: usize| -> Vec<(usize, usize)> {
        // (left degree, offset of the block)
        let mut out = Vec::new();
        let mut offset = 0;
        for i in n.saturating_sub(d.top())..=n.min(c.top()) {
            out.push((i, offset));
            offset += c.rank_at(i) * d.rank_at(n - i);
        }
        out
    };
    let offset_of = |n: usize, i: usize| -> Option<usize> {
        blocks(n)
            .into_iter()
            .find(|&(li, _)| li == i)
            .map(|(_, o)| o)
    };
    let rank = |n: usize| -> usize {
        (n.saturating_sub(d.top())..=n.min(c.top()))
            .map(|i| c.rank_at(i) * d.rank_at(n - i))
            .sum()
    };

    let groups: Vec<usize> = (0..=top).map(rank).collect();
    let mut boundaries = Vec::with_capacity(top);
    for n in 1..=top {
        let mut m = IntMatrix::zeros(groups[n - 1], groups[n]);
        for (i, src_off) in blocks(n) {
            let j = n - i;
            let (ci, dj) = (c.rank_at(i), d.rank_at(j));
            // ∂c ⊗ d lands in block (i-1, j)
            if i >= 1 {
                if let (Some(dst_off), Some(dc)) = (offset_of(n - 1, i - 1), c.boundary_ref(i)) {
                    let dj_lower = d.rank_at(j);
                    for a in 0..ci {
                        for a2 in 0..c.rank_at(i - 1) {
                            let coef = &dc[(a2, a)];
                            if coef.is_zero() {
                                continue;
                            }
                            for b in 0..dj {
                                let row = dst_off + a2 * dj_lower + b;
                                let col = src_off + a * dj + b;
                                m[(row, col)] += coef;
                            }
                        }
                    }
                }
            }
            // (-1)^i c ⊗ ∂d lands in block (i, j-1)
            if j >= 1 {
                if let (Some(dst_off), Some(dd)) = (offset_of(n - 1, i), d.boundary_ref(j)) {
                    let dj_lower = d.rank_at(j - 1);
                    for a in 0..ci {
                        for b in 0..dj {
                            for b2 in 0..dj_lower {
                                let coef = &dd[(b2, b)];
                                if coef.is_zero() {
                                    continue;
                                }
                                let row = dst_off + a * dj_lower + b2;
                                let col = src_off + a * dj + b;
                                if i % 2 == 0 {
                                    m[(row, col)] += coef;
                                } else {
                                    m[(row, col)] -= coef;
                                }
                            }
                        }
                    }
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex { groups, boundaries }
}

/// Block-diagonal sum of two complexes.
pub fn direct_sum(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    let top = c.top().max(d.top());
    let (c, d) = (c.padded(top), d.padded(top));
    let groups = (0..=top).map(|q| c.groups[q] + d.groups[q]).collect();
    let boundaries = (0..top)
        .map(|i| c.boundaries[i].block_diagonal(&d.boundaries[i]))
        .collect();
    ChainComplex { groups, boundaries }
}

/// Moves every positive-degree group up by `s`; degree 0 stays in place.
pub fn shift(c: &ChainComplex, s: usize) -> ChainComplex {
    if s == 0 {
        return c.clone();
    }
    let top = c.top() + s;
    let mut groups = vec![0; top + 1];
    groups[0] = c.groups[0];
    groups[1 + s..].copy_from_slice(&c.groups[1..]);
    let boundaries = (1..=top)
        .map(|q| {
            if q >= s + 2 {
                c.boundaries[q - s - 1].clone()
            } else {
                IntMatrix::zeros(groups[q - 1], groups[q])
            }
        })
        .collect();
    ChainComplex { groups, boundaries }
}

pub fn wedge(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    direct_sum(&c.reduced(), &d.reduced()).pointed()
}

pub fn smash(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    tensor(&c.reduced(), &d.reduced()).pointed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moore(n: usize, k: i64) -> ChainComplex {
        let mut g = vec![0; n + 1];
        g[0] = 1;
        g[n - 1] = 1;
        g[n] = 1;
        let mut c = ChainComplex::with_zero_boundaries(g);
        c.boundaries[n - 1] = IntMatrix::from_rows(&[vec![k]]);
        c
    }

    fn z(qs: &[usize]) -> GradedGroup {
        GradedGroup::integers_at(qs)
    }

    #[test]
    fn validate_examples() {
        assert!(ChainComplex::with_zero_boundaries(vec![1, 2, 3]).validate());
        let mut c = ChainComplex::with_zero_boundaries(vec![0, 0, 0, 1, 1]);
        c.boundaries[3] = IntMatrix::from_rows(&[vec![5]]);
        assert!(c.validate());
        let ids = ChainComplex::new(
            vec![1, 1, 1],
            vec![IntMatrix::identity(1), IntMatrix::identity(1)],
        )
        .unwrap();
        assert!(!ids.validate());
        assert!(matches!(
            ids.homology(),
            Err(ChainError::NotAComplex { lower: 1 })
        ));
        let bad_shape = ChainComplex::new(vec![1, 2], vec![IntMatrix::zeros(2, 1)]).unwrap();
        assert!(!bad_shape.validate());
    }

    #[test]
    fn homology_examples() {
        let cp2 = ChainComplex::with_zero_boundaries(vec![1, 0, 1, 0, 1]);
        assert_eq!(cp2.homology().unwrap(), z(&[0, 2, 4]));
        for k in [2, 3, 12] {
            let h = moore(4, k).homology().unwrap();
            assert_eq!(h, z(&[0]).with(3, FgAbGroup::cyclic(k)));
        }
        assert_eq!(ChainComplex::sphere(5).homology().unwrap(), z(&[0, 5]));
        assert_eq!(ChainComplex::sphere(1).homology().unwrap(), z(&[0, 1]));
    }

    #[test]
    fn tensor_examples() {
        let s3s4 = tensor(&ChainComplex::sphere(3), &ChainComplex::sphere(4));
        assert!(s3s4.validate());
        assert_eq!(s3s4.homology().unwrap(), z(&[0, 3, 4, 7]));

        let m = moore(4, 3);
        assert_eq!(
            tensor(&m, &ChainComplex::point()).homology().unwrap(),
            m.homology().unwrap()
        );

        let t = tensor(&moore(4, 2), &ChainComplex::sphere(1));
        assert!(t.validate());
        let expected = z(&[0, 1])
            .with(3, FgAbGroup::cyclic(2))
            .with(4, FgAbGroup::cyclic(2));
        assert_eq!(t.homology().unwrap(), expected);
    }

    #[test]
    fn tensor_of_two_moore_spaces_has_tor() {
        let t = tensor(&moore(3, 4), &moore(3, 6));
        assert!(t.validate());
        let h = t.homology().unwrap();
        let expected = GradedGroup::point()
            .kunneth(&GradedGroup::point())
            .direct_sum(&GradedGroup::new().with(2, FgAbGroup::cyclic(4)))
            .direct_sum(&GradedGroup::new().with(2, FgAbGroup::cyclic(6)))
            .with(4, FgAbGroup::cyclic(2))
            .with(5, FgAbGroup::cyclic(2));
        assert_eq!(h, expected);
    }

    #[test]
    fn shift_examples() {
        let h = shift(&ChainComplex::sphere(1), 3).homology().unwrap();
        assert_eq!(h.reduced(), z(&[4]));
        let c = moore(4, 5);
        assert_eq!(shift(&c, 0), c);
        let h = shift(&c, 1).homology().unwrap();
        assert_eq!(
            h.reduced(),
            GradedGroup::new().with(4, FgAbGroup::cyclic(5))
        );
    }

    #[test]
    fn wedge_and_smash() {
        let w = wedge(&ChainComplex::sphere(2), &moore(4, 3));
        assert_eq!(
            w.homology().unwrap(),
            z(&[0, 2]).with(3, FgAbGroup::cyclic(3))
        );
        let s = smash(&ChainComplex::sphere(2), &ChainComplex::sphere(5));
        assert_eq!(s.homology().unwrap(), z(&[0, 7]));
    }

    #[test]
    fn json_round_trip() {
        let c = moore(3, 7);
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.starts_with(r#"{"top":3,"groups":[1,0,1,1],"boundaries":["#));
        let back: ChainComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"top":2,"groups":[1,1],"boundaries":[]}"#;
        assert!(serde_json::from_str::<ChainComplex>(bad).is_err());
    }
}
