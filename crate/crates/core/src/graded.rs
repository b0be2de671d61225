use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbGroup;

/// Degree-indexed family of groups, stored sparsely: absent degrees are
/// trivial and no trivial group is ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    from = "BTreeMap<usize, FgAbGroup>",
    into = "BTreeMap<usize, FgAbGroup>"
)]
pub struct GradedGroup {
    groups: BTreeMap<usize, FgAbGroup>,
}

impl From<BTreeMap<usize, FgAbGroup>> for GradedGroup {
    fn from(map: BTreeMap<usize, FgAbGroup>) -> Self {
        map.into_iter().collect()
    }
}

impl From<GradedGroup> for BTreeMap<usize, FgAbGroup> {
    fn from(g: GradedGroup) -> Self {
        g.groups
    }
}

impl FromIterator<(usize, FgAbGroup)> for GradedGroup {
    fn from_iter<I: IntoIterator<Item = (usize, FgAbGroup)>>(iter: I) -> Self {
        let mut out = GradedGroup::new();
        for (q, g) in iter {
            out.add(q, &g);
        }
        out
    }
}

impl GradedGroup {
    pub fn new() -> Self {
        Self::default()
    }

    /// Free groups of the given ranks in degrees `0, 1, 2, …`.
    pub fn from_ranks(ranks: &[usize]) -> Self {
        ranks
            .iter()
            .enumerate()
            .map(|(q, &r)| (q, FgAbGroup::free(r)))
            .collect()
    }

    /// Homology of a point.
    pub fn point() -> Self {
        Self::new().with(0, FgAbGroup::integers())
    }

    /// `ℤ` in each listed degree.
    pub fn integers_at(degrees: &[usize]) -> Self {
        let mut g = Self::new();
        for &q in degrees {
            g.add(q, &FgAbGroup::integers());
        }
        g
    }

    pub fn with(mut self, q: usize, g: FgAbGroup) -> Self {
        self.set(q, g);
        self
    }

    pub fn get(&self, q: usize) -> FgAbGroup {
        self.groups.get(&q).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, q: usize, g: FgAbGroup) {
        if g.is_trivial() {
            self.groups.remove(&q);
        } else {
            self.groups.insert(q, g);
        }
    }

    /// Replaces degree `q` by its direct sum with `g`.
    pub fn add(&mut self, q: usize, g: &FgAbGroup) {
        let sum = self.get(q).direct_sum(g);
        self.set(q, sum);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &FgAbGroup)> {
        self.groups.iter().map(|(&q, g)| (q, g))
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.groups.keys().next_back().copied()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(FgAbGroup::is_free)
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(FgAbGroup::rank).sum()
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(q, g)| {
                let r = g.rank() as i64;
                if q % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Reduced homology: one `ℤ` removed from degree 0 when present.
    pub fn reduced(&self) -> Self {
        let mut out = self.clone();
        let h0 = self.get(0);
        if h0.rank() > 0 {
            let lowered = FgAbGroup::from_cyclic(h0.rank() - 1, h0.torsion().iter().cloned());
            out.set(0, lowered);
        }
        out
    }

    /// Adds a `ℤ` in degree 0; inverse of [`GradedGroup::reduced`] for connected spaces.
    pub fn unreduced(&self) -> Self {
        let mut out = self.clone();
        out.add(0, &FgAbGroup::integers());
        out
    }

    pub fn shifted(&self, s: usize) -> Self {
        self.iter().map(|(q, g)| (q + s, g.clone())).collect()
    }

    pub fn direct_sum(&self, other: &GradedGroup) -> Self {
        let mut out = self.clone();
        for (q, g) in other.iter() {
            out.add(q, g);
        }
        out
    }

    /// Restriction to degrees in `range`.
    pub fn restricted(&self, range: impl std::ops::RangeBounds<usize>) -> Self {
        self.groups
            .range(range)
            .map(|(&q, g)| (q, g.clone()))
            .collect()
    }

    /// Künneth formula: `⊕_{i+j=n} H_i ⊗ K_j ⊕ ⊕_{i+j=n-1} Tor(H_i, K_j)`.
    pub fn kunneth(&self, other: &GradedGroup) -> Self {
        let mut out = GradedGroup::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add(i + j, &a.tensor(b));
                out.add(i + j + 1, &a.tor(b));
            }
        }
        out
    }

    /// Renders one line per degree from 0 to the top degree, trivial degrees left blank.
    pub fn table(&self, label: &str) -> String {
        let Some(top) = self.top_degree() else {
            return format!("{label}_*  all trivial\n");
        };
        let width = top.to_string().len();
        let mut s = String::new();
        for q in 0..=top {
            let g = self.get(q);
            if g.is_trivial() {
                s.push_str(&format!("{label}{q:<width$} |\n"));
            } else {
                s.push_str(&format!("{label}{q:<width$} | {g}\n"));
            }
        }
        s
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(q, g)| format!("{g}@{q}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}
