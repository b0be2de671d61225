//! Universal coefficients, Poincaré duality checks, the degree relation
//! `f_* ∘ D_X ∘ f^* = λ·D_Y`, and the connected-sum description of the
//! circle bundles over `(S^3 × S^3)^{#r} # C`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{FgAbGroup, IntMatrix};
use crate::graded::GradedGroup;
use crate::sequences::{wall_bundle_cohomology, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("map set for dimension {dim} needs {expected} matrices in `{field}`, found {found}")]
    DegreeCount {
        field: &'static str,
        dim: usize,
        expected: usize,
        found: usize,
    },
    #[error("in cohomological degree {degree}: {what}")]
    Shape { degree: usize, what: String },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Integral cohomology from homology: `H^q = Free(H_q) ⊕ Tors(H_{q-1})`.
pub fn cohomology_profile(homology: &GradedGroup) -> GradedGroup {
    let mut out = GradedGroup::new();
    for (q, g) in homology.iter() {
        out.add(q, &g.free_part());
        out.add(q + 1, &g.torsion_part());
    }
    out
}

/// Integral homology from cohomology: `H_q = Free(H^q) ⊕ Tors(H^{q+1})`.
pub fn homology_profile(cohomology: &GradedGroup) -> GradedGroup {
    let mut out = GradedGroup::new();
    for (q, g) in cohomology.iter() {
        out.add(q, &g.free_part());
        if q > 0 {
            out.add(q - 1, &g.torsion_part());
        }
    }
    out
}

/// Whether `H^q ≅ H_{n-q}` for every `q`, with `H^*` from universal coefficients.
pub fn check_poincare(homology: &GradedGroup, n: usize) -> bool {
    let cohomology = cohomology_profile(homology);
    if homology.top_degree().is_some_and(|t| t > n)
        || cohomology.top_degree().is_some_and(|t| t > n)
    {
        return false;
    }
    (0..=n).all(|q| cohomology.get(q) == homology.get(n - q))
}

/// Induced maps and duality isomorphisms for `f: X → Y` between closed
/// oriented `dim`-manifolds.
///
/// `fupper[k]`, `dx[k]`, `dy[k]` act on cohomological degree `k`;
/// `fstar[q]` acts on homological degree `q`. The relation in degree `k` reads
/// `fstar[dim-k] · dx[k] · fupper[k] = lambda · dy[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityMapSet {
    pub dim: usize,
    pub fstar: Vec<IntMatrix>,
    pub fupper: Vec<IntMatrix>,
    pub dx: Vec<IntMatrix>,
    pub dy: Vec<IntMatrix>,
    pub lambda: BigInt,
}

impl DualityMapSet {
    /// `f = id` on a manifold with the given Betti numbers, with identity
    /// duality matrices and `λ = 1`.
    pub fn identity(betti: &[usize]) -> Self {
        let dim = betti.len().saturating_sub(1);
        let ids: Vec<IntMatrix> = betti.iter().map(|&b| IntMatrix::identity(b)).collect();
        let dual: Vec<IntMatrix> = (0..=dim)
            .map(|k| IntMatrix::identity(betti[dim - k]))
            .collect();
        DualityMapSet {
            dim,
            fstar: ids.clone(),
            fupper: ids,
            dx: dual.clone(),
            dy: dual,
            lambda: BigInt::from(1),
        }
    }

    /// A degree-`d` self-map of `S^n` with identity duality matrices.
    pub fn sphere_self_map(n: usize, d: i64) -> Self {
        let mut maps = vec![IntMatrix::zeros(0, 0); n + 1];
        maps[0] = IntMatrix::identity(1);
        maps[n] = IntMatrix::from_rows(&[vec![d]]);
        let mut ids = vec![IntMatrix::zeros(0, 0); n + 1];
        ids[0] = IntMatrix::identity(1);
        ids[n] = IntMatrix::identity(1);
        DualityMapSet {
            dim: n,
            fstar: maps.clone(),
            fupper: maps,
            dx: ids.clone(),
            dy: ids,
            lambda: BigInt::from(d),
        }
    }

    fn check_counts(&self) -> Result<(), DualityError> {
        let expected = self.dim + 1;
        for (field, v) in [
            ("fstar", &self.fstar),
            ("fupper", &self.fupper),
            ("dx", &self.dx),
            ("dy", &self.dy),
        ] {
            if v.len() != expected {
                return Err(DualityError::DegreeCount {
                    field,
                    dim: self.dim,
                    expected,
                    found: v.len(),
                });
            }
        }
        Ok(())
    }
}

/// Whether `f_* ∘ D_X ∘ f^* = λ·D_Y` holds exactly in every degree.
pub fn check_degree_relation(maps: &DualityMapSet) -> Result<bool, DualityError> {
    maps.check_counts()?;
    let mut holds = true;
    for k in 0..=maps.dim {
        let shape_err = |what: String| DualityError::Shape { degree: k, what };
        let (fs, dx, fu, dy) = (
            &maps.fstar[maps.dim - k],
            &maps.dx[k],
            &maps.fupper[k],
            &maps.dy[k],
        );
        let left = dx
            .checked_mul(fu)
            .and_then(|m| fs.checked_mul(&m))
            .map_err(|e| shape_err(e.to_string()))?;
        if left.shape() != dy.shape() {
            return Err(shape_err(format!(
                "f_*·D_X·f^* is {}x{} but D_Y is {}x{}",
                left.rows(),
                left.cols(),
                dy.rows(),
                dy.cols()
            )));
        }
        holds &= left == dy.scaled(&maps.lambda);
    }
    Ok(holds)
}

/// `M ≃ #^{2r}(S³×S⁴) # L_k` for the circle bundle over `(S³×S³)^{#r} # C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDescriptor {
    pub r: u32,
    pub k: i64,
    pub summand_count: u32,
    pub text: String,
    /// `H^*(L_k)`: `ℤ` in degrees 0 and 7, `ℤ/k` in degree 4.
    pub cohomology_l: GradedGroup,
    /// `H^*(M)` from the Gysin solver.
    pub predicted: GradedGroup,
}

pub fn wall_descriptor(r: u32, k: i64) -> Result<WallDescriptor, DualityError> {
    let predicted = wall_bundle_cohomology(r, k)?;
    let cohomology_l = wall_bundle_cohomology(0, k)?;
    let summand_count = 2 * r;
    let text = if summand_count == 0 {
        format!("L_{k}")
    } else {
        format!("#^{{{summand_count}}}(S³×S⁴) # L_{k}")
    };
    Ok(WallDescriptor {
        r,
        k,
        summand_count,
        text,
        cohomology_l,
        predicted,
    })
}

impl WallDescriptor {
    /// `H^*` of the connected sum named by `text`, assembled from its summands:
    /// each `S³×S⁴` adds `ℤ` in degrees 3 and 4.
    pub fn summand_cohomology(&self) -> GradedGroup {
        let mut out = self.cohomology_l.clone();
        let n = self.summand_count as usize;
        out.add(3, &FgAbGroup::free(n));
        out.add(4, &FgAbGroup::free(n));
        out
    }
}
