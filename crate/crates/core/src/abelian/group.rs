use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{AbelianError, DecimalInt, IntMatrix};

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_t` in
/// invariant-factor form: every `d_i ≥ 2` and `d_i | d_{i+1}`.
///
/// The representation is canonical, so structural equality is isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    rank: usize,
    torsion: Vec<DecimalInt>,
}

impl TryFrom<RawGroup> for FgAbGroup {
    type Error = AbelianError;

    fn try_from(raw: RawGroup) -> Result<Self, Self::Error> {
        FgAbGroup::new(raw.rank, raw.torsion.into_iter().map(|d| d.0).collect())
    }
}

impl From<FgAbGroup> for RawGroup {
    fn from(g: FgAbGroup) -> Self {
        RawGroup {
            rank: g.rank,
            torsion: g.torsion.into_iter().map(DecimalInt).collect(),
        }
    }
}

impl FgAbGroup {
    /// Strict constructor: the torsion list must already be an invariant-factor chain.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self, AbelianError> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < BigInt::from(2) {
                return Err(AbelianError::TorsionTooSmall(d.clone()));
            }
            if let Some(next) = torsion.get(i + 1) {
                if !next.is_multiple_of(d) {
                    return Err(AbelianError::DivisibilityChain {
                        lower: d.clone(),
                        upper: next.clone(),
                    });
                }
            }
        }
        Ok(FgAbGroup { rank, torsion })
    }

    /// `ℤ^rank ⊕ ⊕ ℤ/order` for arbitrary cyclic orders, renormalized.
    ///
    /// Orders are taken up to sign; `1` contributes nothing and `0` contributes
    /// a free summand.
    pub fn from_cyclic<I, T>(rank: usize, orders: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut rank = rank;
        let mut list: Vec<BigInt> = Vec::new();
        for o in orders {
            let o = o.into().abs();
            if o.is_zero() {
                rank += 1;
            } else if !o.is_one() {
                list.push(o);
            }
        }
        // pairwise (gcd, lcm) sweep leaves a divisibility chain
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let g = list[i].gcd(&list[j]);
                let l = list[i].lcm(&list[j]);
                list[i] = g;
                list[j] = l;
            }
        }
        list.retain(|d| !d.is_one());
        FgAbGroup {
            rank,
            torsion: list,
        }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// `ℤ/k`; trivial for `k = ±1`, `ℤ` for `k = 0`.
    pub fn cyclic(k: impl Into<BigInt>) -> Self {
        Self::from_cyclic(0, [k.into()])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn free_part(&self) -> Self {
        Self::free(self.rank)
    }

    pub fn torsion_part(&self) -> Self {
        FgAbGroup {
            rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self == other
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        Self::from_cyclic(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// `self ⊗ other` over ℤ.
    pub fn tensor(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders: Vec<BigInt> = Vec::new();
        for _ in 0..other.rank {
            orders.extend(self.torsion.iter().cloned());
        }
        for _ in 0..self.rank {
            orders.extend(other.torsion.iter().cloned());
        }
        orders.extend(self.torsion_gcds(other));
        Self::from_cyclic(self.rank * other.rank, orders)
    }

    /// `Tor(self, other)` over ℤ.
    pub fn tor(&self, other: &FgAbGroup) -> FgAbGroup {
        Self::from_cyclic(0, self.torsion_gcds(other))
    }

    fn torsion_gcds(&self, other: &FgAbGroup) -> Vec<BigInt> {
        let mut out = Vec::new();
        for a in &self.torsion {
            for b in &other.torsion {
                out.push(a.gcd(b));
            }
        }
        out
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

/// The group presented by `A`: `ℤ^rows / im(A)`.
pub fn cokernel(a: &IntMatrix) -> FgAbGroup {
    let s = super::smith_normal_form(a);
    let rank = a.rows() - s.rank();
    FgAbGroup {
        rank,
        torsion: s.invariant_factors(),
    }
}

pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    g.direct_sum(h)
}

pub fn is_isomorphic(g: &FgAbGroup, h: &FgAbGroup) -> bool {
    g.is_isomorphic(h)
}

impl fmt::Display for FgAbGroup {
    /// `Z^r (+) Z/d1 (+) …`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" (+) "))
    }
}
