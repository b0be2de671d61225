//! Space expressions, their integral homology, and chain models for the
//! fragment where a cell structure is known.
//!
//! [`evaluate`] works purely at the level of graded groups (catalog tables,
//! the Künneth formula, connected-sum and puncture rules). [`chain_model`]
//! builds cellular chain complexes structurally and is used as an
//! independent check on `evaluate`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{FgAbGroup, IntMatrix};
use crate::chains::{self, ChainComplex, ChainError};
pub use crate::graded::GradedGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("connected sum of manifolds of dimensions {left} and {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("`{0}` is not a closed manifold")]
    NotManifold(String),
    #[error("`{0}` is not simply connected")]
    NotSimplyConnected(String),
    #[error("{0}")]
    Domain(String),
    #[error("no chain model for `{0}` (evaluated by formula only)")]
    Unsupported(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceExpr {
    /// `S^n`, `n ≥ 1`.
    Sphere(u32),
    /// `ℂP^n`, `n ≥ 1`.
    ComplexProjective(u32),
    /// Moore space `P^n(k) = S^{n-1} ∪_k e^n`, `n ≥ 3`, `k ≥ 1`.
    Moore {
        n: u32,
        k: u64,
    },
    /// Connected sum of `r` copies of `S^3 × S^3`; `S^6` when `r = 0`.
    SigmaSigma(u32),
    Product(Box<SpaceExpr>, Box<SpaceExpr>),
    Wedge(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    Suspension(Box<SpaceExpr>),
    ConnectedSum(Box<SpaceExpr>, Box<SpaceExpr>),
    /// A closed manifold with an open disk removed.
    Punctured(Box<SpaceExpr>),
    /// `(B × F)/(* × F)`.
    HalfSmash(Box<SpaceExpr>, Box<SpaceExpr>),
}

/// Dimension and simple-connectivity of a closed-manifold node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ManifoldInfo {
    pub dim: usize,
    pub simply_connected: bool,
}

impl SpaceExpr {
    pub fn sphere(n: u32) -> Self {
        SpaceExpr::Sphere(n)
    }

    pub fn cp(n: u32) -> Self {
        SpaceExpr::ComplexProjective(n)
    }

    pub fn moore(n: u32, k: u64) -> Self {
        SpaceExpr::Moore { n, k }
    }

    pub fn sigma_sigma(r: u32) -> Self {
        SpaceExpr::SigmaSigma(r)
    }

    pub fn product(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn wedge(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Wedge(Box::new(a), Box::new(b))
    }

    pub fn smash(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Smash(Box::new(a), Box::new(b))
    }

    pub fn suspension(a: SpaceExpr) -> Self {
        SpaceExpr::Suspension(Box::new(a))
    }

    pub fn connected_sum(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::ConnectedSum(Box::new(a), Box::new(b))
    }

    pub fn punctured(a: SpaceExpr) -> Self {
        SpaceExpr::Punctured(Box::new(a))
    }

    pub fn half_smash(b: SpaceExpr, f: SpaceExpr) -> Self {
        SpaceExpr::HalfSmash(Box::new(b), Box::new(f))
    }

    /// `Some` for closed-manifold nodes: catalog manifolds, and products and
    /// connected sums of closed manifolds.
    pub fn manifold(&self) -> Option<ManifoldInfo> {
        match self {
            SpaceExpr::Sphere(n) => Some(ManifoldInfo {
                dim: *n as usize,
                simply_connected: *n >= 2,
            }),
            SpaceExpr::ComplexProjective(n) => Some(ManifoldInfo {
                dim: 2 * *n as usize,
                simply_connected: true,
            }),
            SpaceExpr::SigmaSigma(_) => Some(ManifoldInfo {
                dim: 6,
                simply_connected: true,
            }),
            SpaceExpr::Product(a, b) => {
                let (a, b) = (a.manifold()?, b.manifold()?);
                Some(ManifoldInfo {
                    dim: a.dim + b.dim,
                    simply_connected: a.simply_connected && b.simply_connected,
                })
            }
            SpaceExpr::ConnectedSum(a, _) => a.manifold(),
            _ => None,
        }
    }

    pub fn is_closed_manifold(&self) -> bool {
        self.manifold().is_some()
    }

    /// Checks the node-local invariants of every node in the tree.
    pub fn validate(&self) -> Result<(), SpaceError> {
        match self {
            SpaceExpr::Sphere(n) if *n < 1 => Err(SpaceError::Domain(format!(
                "sphere dimension must be ≥ 1, got {n}"
            ))),
            SpaceExpr::ComplexProjective(n) if *n < 1 => Err(SpaceError::Domain(format!(
                "projective dimension must be ≥ 1, got {n}"
            ))),
            SpaceExpr::Moore { n, .. } if *n < 3 => Err(SpaceError::Domain(format!(
                "Moore space needs n ≥ 3, got {n}"
            ))),
            SpaceExpr::Moore { k, .. } if *k < 1 => Err(SpaceError::Domain(format!(
                "Moore space needs k ≥ 1, got {k}"
            ))),
            SpaceExpr::Sphere(_)
            | SpaceExpr::ComplexProjective(_)
            | SpaceExpr::Moore { .. }
            | SpaceExpr::SigmaSigma(_) => Ok(()),
            SpaceExpr::Product(a, b)
            | SpaceExpr::Wedge(a, b)
            | SpaceExpr::Smash(a, b)
            | SpaceExpr::HalfSmash(a, b) => {
                a.validate()?;
                b.validate()
            }
            SpaceExpr::Suspension(a) => a.validate(),
            SpaceExpr::ConnectedSum(a, b) => {
                a.validate()?;
                b.validate()?;
                check_connected_sum(a, b)
            }
            SpaceExpr::Punctured(a) => {
                a.validate()?;
                if a.is_closed_manifold() {
                    Ok(())
                } else {
                    Err(SpaceError::NotManifold(a.to_string()))
                }
            }
        }
    }
}

/// The rule shared by [`SpaceExpr::validate`] and the parser.
pub(crate) fn check_connected_sum(a: &SpaceExpr, b: &SpaceExpr) -> Result<(), SpaceError> {
    let ma = a
        .manifold()
        .ok_or_else(|| SpaceError::NotManifold(a.to_string()))?;
    let mb = b
        .manifold()
        .ok_or_else(|| SpaceError::NotManifold(b.to_string()))?;
    if ma.dim != mb.dim {
        return Err(SpaceError::DimensionMismatch {
            left: ma.dim,
            right: mb.dim,
        });
    }
    if !ma.simply_connected {
        return Err(SpaceError::NotSimplyConnected(a.to_string()));
    }
    if !mb.simply_connected {
        return Err(SpaceError::NotSimplyConnected(b.to_string()));
    }
    Ok(())
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::print(self))
    }
}

/// Unreduced integral homology of the space denoted by `e`.
pub fn evaluate(e: &SpaceExpr) -> Result<GradedGroup, SpaceError> {
    e.validate()?;
    Ok(eval(e))
}

fn eval(e: &SpaceExpr) -> GradedGroup {
    match e {
        SpaceExpr::Sphere(n) => GradedGroup::integers_at(&[0, *n as usize]),
        SpaceExpr::ComplexProjective(n) => {
            let degrees: Vec<usize> = (0..=*n as usize).map(|i| 2 * i).collect();
            GradedGroup::integers_at(&degrees)
        }
        SpaceExpr::Moore { n, k } => {
            GradedGroup::point().with(*n as usize - 1, FgAbGroup::cyclic(*k))
        }
        SpaceExpr::SigmaSigma(r) => {
            GradedGroup::integers_at(&[0, 6]).with(3, FgAbGroup::free(2 * *r as usize))
        }
        SpaceExpr::Product(a, b) => eval(a).kunneth(&eval(b)),
        SpaceExpr::Wedge(a, b) => eval(a).reduced().direct_sum(&eval(b).reduced()).unreduced(),
        SpaceExpr::Smash(a, b) => reduced_smash(&eval(a), &eval(b)).unreduced(),
        SpaceExpr::Suspension(a) => eval(a).reduced().shifted(1).unreduced(),
        SpaceExpr::ConnectedSum(a, b) => {
            let n = e.manifold().expect("validated connected sum").dim;
            let middle = eval(a)
                .restricted(1..n)
                .direct_sum(&eval(b).restricted(1..n));
            let mut out = middle.with(0, FgAbGroup::integers());
            out.add(n, &FgAbGroup::integers());
            out
        }
        SpaceExpr::Punctured(a) => {
            let n = a.manifold().expect("validated puncture").dim;
            eval(a).restricted(..n)
        }
        SpaceExpr::HalfSmash(b, f) => {
            let hb = eval(b);
            hb.reduced()
                .direct_sum(&reduced_smash(&hb, &eval(f)))
                .unreduced()
        }
    }
}

/// Reduced homology of `X ∧ Y` from unreduced homologies of `X` and `Y`.
fn reduced_smash(x: &GradedGroup, y: &GradedGroup) -> GradedGroup {
    x.reduced().kunneth(&y.reduced())
}

/// Cellular chain model of `e`, for nodes with a known cell structure.
pub fn chain_model(e: &SpaceExpr) -> Result<ChainComplex, SpaceError> {
    e.validate()?;
    model(e)
}

fn model(e: &SpaceExpr) -> Result<ChainComplex, SpaceError> {
    Ok(match e {
        SpaceExpr::Sphere(n) => ChainComplex::sphere(*n as usize),
        SpaceExpr::ComplexProjective(n) => {
            let top = 2 * *n as usize;
            ChainComplex::with_zero_boundaries((0..=top).map(|q| usize::from(q % 2 == 0)).collect())
        }
        SpaceExpr::Moore { n, k } => {
            let n = *n as usize;
            let mut groups = vec![0; n + 1];
            groups[0] = 1;
            groups[n - 1] = 1;
            let base = ChainComplex::with_zero_boundaries(groups[..n].to_vec());
            base.extended(1, IntMatrix::from_rows(&[vec![*k]]))?
        }
        SpaceExpr::SigmaSigma(r) => {
            let s3s3 = chains::tensor(&ChainComplex::sphere(3), &ChainComplex::sphere(3));
            let mut acc = if *r == 0 {
                ChainComplex::sphere(6)
            } else {
                s3s3.clone()
            };
            for _ in 1..*r {
                acc = connected_sum_model(&acc, &s3s3, 6, e)?;
            }
            acc
        }
        SpaceExpr::Product(a, b) => chains::tensor(&model(a)?, &model(b)?),
        SpaceExpr::Wedge(a, b) => chains::wedge(&model(a)?, &model(b)?).trimmed(),
        SpaceExpr::Smash(a, b) => chains::smash(&model(a)?, &model(b)?).trimmed(),
        SpaceExpr::Suspension(a) => chains::shift(&model(a)?.pointed(), 1),
        SpaceExpr::ConnectedSum(a, b) => {
            let n = e.manifold().expect("validated connected sum").dim;
            connected_sum_model(&model(a)?, &model(b)?, n, e)?
        }
        SpaceExpr::Punctured(_) | SpaceExpr::HalfSmash(..) => {
            return Err(SpaceError::Unsupported(e.to_string()))
        }
    })
}

/// Both summands must have a single top cell with zero boundary; the
/// `(n-1)`-skeleta are wedged and one `n`-cell is attached with zero boundary.
fn connected_sum_model(
    a: &ChainComplex,
    b: &ChainComplex,
    n: usize,
    e: &SpaceExpr,
) -> Result<ChainComplex, SpaceError> {
    for c in [a, b] {
        if c.top() != n || c.rank_at(n) != 1 || !c.boundary(n).is_zero() {
            return Err(SpaceError::Unsupported(e.to_string()));
        }
    }
    let skeleton = chains::wedge(&a.truncated(n - 1), &b.truncated(n - 1));
    let lower = skeleton.rank_at(n - 1);
    Ok(skeleton.extended(1, IntMatrix::zeros(lower, 1))?)
}
