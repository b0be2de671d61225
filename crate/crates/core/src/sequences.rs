//! Homology of pullbacks over connected sums, and cohomology of circle
//! bundles from the Gysin sequence.
//!
//! For `A = B # C` and a bundle `F → L → C` pulled back to `F → M → A`, the
//! cofibration `X' → M → L` has zero connecting map, so for `0 < q < m`
//!
//! ```text
//! H_q(M) ≅ H_q(X') ⊕ H_q(L),   X' = (B' × F)/(* × F)
//! ```
//!
//! where `B'` is `B` with a disk removed and `m = dim C + dim F`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{cokernel, smith_normal_form, FgAbGroup, IntMatrix};
use crate::graded::GradedGroup;
use crate::spaces::{check_connected_sum, evaluate, SpaceError, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("fiber `{0}` is not a closed manifold")]
    FiberNotManifold(String),
    #[error("supplied H_*(L) is nonzero in degree {degree}, above the total dimension {dim}")]
    TotalSpaceTooBig { degree: usize, dim: usize },
    #[error(
        "cohomology of the base has torsion in degree {0}; only torsion-free bases are supported"
    )]
    TorsionInBase(usize),
    #[error("cup-with-x map in degree {degree} has shape {found:?}, expected {expected:?}")]
    EulerShape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("base dimension must be at least 2, got {0}")]
    BaseDimension(usize),
    #[error("base cohomology is nonzero in degree {degree}, above the dimension {dim}")]
    BaseTooBig { degree: usize, dim: usize },
    #[error("cube coefficient k must be positive, got {0}")]
    NonPositiveK(i64),
}

/// Homology of the total space `L` over the summand `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TotalSpace {
    /// `L = C × F`; its homology is always computed.
    Trivial,
    /// Caller-supplied `H_*(L)`.
    Supplied(GradedGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleData {
    pub fiber: SpaceExpr,
    pub base_summand: SpaceExpr,
    pub total: TotalSpace,
}

impl BundleData {
    pub fn trivial(base_summand: SpaceExpr, fiber: SpaceExpr) -> Self {
        BundleData {
            fiber,
            base_summand,
            total: TotalSpace::Trivial,
        }
    }

    pub fn with_total(
        base_summand: SpaceExpr,
        fiber: SpaceExpr,
        homology_of_l: GradedGroup,
    ) -> Self {
        BundleData {
            fiber,
            base_summand,
            total: TotalSpace::Supplied(homology_of_l),
        }
    }

    /// `m = dim C + dim F`.
    pub fn total_dim(&self) -> Result<usize, SequenceError> {
        let c = self
            .base_summand
            .manifold()
            .ok_or_else(|| SpaceError::NotManifold(self.base_summand.to_string()))?;
        let f = self
            .fiber
            .manifold()
            .ok_or_else(|| SequenceError::FiberNotManifold(self.fiber.to_string()))?;
        Ok(c.dim + f.dim)
    }

    /// `H_*(L)`, computed by Künneth for the trivial tag.
    pub fn homology_of_total(&self) -> Result<GradedGroup, SequenceError> {
        let m = self.total_dim()?;
        let h = match &self.total {
            TotalSpace::Trivial => evaluate(&SpaceExpr::product(
                self.base_summand.clone(),
                self.fiber.clone(),
            ))?,
            TotalSpace::Supplied(h) => h.clone(),
        };
        if let Some(top) = h.top_degree().filter(|&t| t > m) {
            return Err(SequenceError::TotalSpaceTooBig {
                degree: top,
                dim: m,
            });
        }
        Ok(h)
    }
}

/// Everything computed for one pullback: the three graded groups and the
/// split check relating them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pullback {
    pub total_dim: usize,
    pub homology_m: GradedGroup,
    pub homology_x_prime: GradedGroup,
    pub homology_l: GradedGroup,
    pub report: DecompositionReport,
}

/// `X' = (B' × F)/(* × F)` as an expression.
pub fn x_prime(b: &SpaceExpr, fiber: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::half_smash(SpaceExpr::punctured(b.clone()), fiber.clone())
}

pub fn pullback(b: &SpaceExpr, bundle: &BundleData) -> Result<Pullback, SequenceError> {
    b.validate()?;
    bundle.base_summand.validate()?;
    bundle.fiber.validate()?;
    check_connected_sum(b, &bundle.base_summand)?;
    let m = bundle.total_dim()?;

    let h_l = bundle.homology_of_total()?;
    let h_xp = evaluate(&x_prime(b, &bundle.fiber))?;

    let mut h_m = h_xp.restricted(1..m).direct_sum(&h_l.restricted(1..m));
    h_m.set(0, FgAbGroup::integers());
    h_m.set(m, FgAbGroup::integers());

    let report = verify_split(&h_m, &h_xp, &h_l, m);
    Ok(Pullback {
        total_dim: m,
        homology_m: h_m,
        homology_x_prime: h_xp,
        homology_l: h_l,
        report,
    })
}

/// `H_*(M)` for the pullback of `bundle` along `B # C → C`.
pub fn pullback_homology(b: &SpaceExpr, bundle: &BundleData) -> Result<GradedGroup, SequenceError> {
    pullback(b, bundle).map(|p| p.homology_m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub homology_m: FgAbGroup,
    pub homology_x_prime: FgAbGroup,
    pub homology_l: FgAbGroup,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub total_dim: usize,
    pub degrees: Vec<DegreeCheck>,
    pub holds: bool,
}

impl DecompositionReport {
    pub fn failing_degrees(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .filter(|d| !d.holds)
            .map(|d| d.degree)
            .collect()
    }
}

/// Checks `H_q(M) ≅ H_q(X') ⊕ H_q(L)` for `0 < q < m`. At `q = 0` and
/// `q = m` the projection `M → L` is an isomorphism, so there `H_q(M)` is
/// compared with `H_q(L)`.
pub fn verify_split(
    h_m: &GradedGroup,
    h_xp: &GradedGroup,
    h_l: &GradedGroup,
    m: usize,
) -> DecompositionReport {
    let degrees: Vec<DegreeCheck> = (0..=m)
        .map(|q| {
            let (gm, gx, gl) = (h_m.get(q), h_xp.get(q), h_l.get(q));
            let holds = if q == 0 || q == m {
                gm.is_isomorphic(&gl)
            } else {
                gm.is_isomorphic(&gx.direct_sum(&gl))
            };
            DegreeCheck {
                degree: q,
                homology_m: gm,
                homology_x_prime: gx,
                homology_l: gl,
                holds,
            }
        })
        .collect();
    let above = h_m.top_degree().is_none_or(|t| t <= m);
    DecompositionReport {
        total_dim: m,
        holds: above && degrees.iter().all(|d| d.holds),
        degrees,
    }
}

/// Matrices of `x ∪ - : H^q(A) → H^{q+2}(A)` in given bases; a missing
/// degree means the zero map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerAction {
    pub maps: BTreeMap<usize, IntMatrix>,
}

impl EulerAction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, q: usize, m: IntMatrix) -> Self {
        self.maps.insert(q, m);
        self
    }

    /// The map out of degree `q`, zero-filled if absent.
    fn map(&self, q: usize, ranks: &impl Fn(usize) -> usize) -> IntMatrix {
        self.maps
            .get(&q)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(ranks(q + 2), ranks(q)))
    }
}

/// Cohomology of the total space of a circle bundle over a closed `n`-manifold
/// `A` with torsion-free cohomology, given the action of the Euler class:
///
/// ```text
/// H^q(M) ≅ coker(x: H^{q-2} → H^q) ⊕ ker(x: H^{q-1} → H^{q+1})
/// ```
///
/// The kernel term is free, so the extension always splits.
pub fn gysin_circle_bundle(
    cohomology: &GradedGroup,
    n: usize,
    euler: &EulerAction,
) -> Result<GradedGroup, SequenceError> {
    if n < 2 {
        return Err(SequenceError::BaseDimension(n));
    }
    for (q, g) in cohomology.iter() {
        if !g.is_free() {
            return Err(SequenceError::TorsionInBase(q));
        }
        if q > n {
            return Err(SequenceError::BaseTooBig { degree: q, dim: n });
        }
    }
    let ranks = |q: usize| cohomology.get(q).rank();
    for (&q, m) in &euler.maps {
        let expected = (ranks(q + 2), ranks(q));
        if m.shape() != expected {
            return Err(SequenceError::EulerShape {
                degree: q,
                expected,
                found: m.shape(),
            });
        }
    }

    let mut out = GradedGroup::new();
    for q in 0..=n + 1 {
        let sub = if q >= 2 {
            cokernel(&euler.map(q - 2, &ranks))
        } else {
            FgAbGroup::free(ranks(q))
        };
        let quotient = if q >= 1 {
            let x = euler.map(q - 1, &ranks);
            FgAbGroup::free(x.cols() - smith_normal_form(&x).rank())
        } else {
            FgAbGroup::trivial()
        };
        out.set(q, sub.direct_sum(&quotient));
    }
    Ok(out)
}

/// Cohomology ring data of `A = (S^3 × S^3)^{#r} # C` where `H^*(C)` has
/// generators `1, x, y, V` in degrees 0, 2, 4, 6 with `x² = k·y` and `x·y = V`.
pub fn wall_ring(r: u32, k: i64) -> Result<(GradedGroup, EulerAction), SequenceError> {
    if k <= 0 {
        return Err(SequenceError::NonPositiveK(k));
    }
    let two_r = 2 * r as usize;
    let cohomology = GradedGroup::from_ranks(&[1, 0, 1, two_r, 1, 0, 1]);
    let euler = EulerAction::new()
        .with(0, IntMatrix::from_rows(&[vec![1]]))
        .with(2, IntMatrix::from_rows(&[vec![k]]))
        .with(4, IntMatrix::from_rows(&[vec![1]]))
        .with(1, IntMatrix::zeros(two_r, 0))
        .with(3, IntMatrix::zeros(0, two_r));
    Ok((cohomology, euler))
}

/// `H^*(M)` for the circle bundle over `(S^3 × S^3)^{#r} # C` with Euler
/// class the generator `x`, where `x³ = k·V`.
pub fn wall_bundle_cohomology(r: u32, k: i64) -> Result<GradedGroup, SequenceError> {
    let (cohomology, euler) = wall_ring(r, k)?;
    gysin_circle_bundle(&cohomology, 6, &euler)
}
