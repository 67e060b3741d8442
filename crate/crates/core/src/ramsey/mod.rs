//! Red/blue colorings of complete graphs and Ramsey numbers.
//!
//! Convention: `r(m, n)` is the least `N` such that every coloring of `K_N`
//! has a blue `K_m` or a red `K_n`.

mod bounds;

pub use bounds::{
    best_probabilistic_r, bound_values, coin_tail, coin_tail_proof_bound_holds, counting_m,
    expected_mono, expected_mono_hamiltonian, known_r, lower_condition, markov_bound_check,
    qn_far_set_search, s_table, s_value, BoundValues, FarSet,
};

use std::fmt;

use crate::error::{guard, Error, Result};
use crate::graph::Pseudograph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A color on every pair of `K_n`. Pair `{i, j}` with `i < j` is stored at
/// `j (j - 1) / 2 + i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring2 {
    n: usize,
    colors: Vec<Color>,
}

fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

impl EdgeColoring2 {
    pub fn uniform(n: usize, color: Color) -> Self {
        EdgeColoring2 {
            n,
            colors: vec![color; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let mut colors = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 0..n {
            for i in 0..j {
                colors.push(f(i, j));
            }
        }
        EdgeColoring2 { n, colors }
    }

    /// Bit `pair_index(i, j)` of `mask` set means red. Needs `C(n, 2) <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "mask too short");
        Self::from_fn(n, |i, j| {
            if mask >> pair_index(i, j) & 1 == 1 {
                Color::Red
            } else {
                Color::Blue
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Color {
        assert!(i != j && i < self.n && j < self.n, "pair out of range");
        self.colors[pair_index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, color: Color) {
        assert!(i != j && i < self.n && j < self.n, "pair out of range");
        self.colors[pair_index(i, j)] = color;
    }

    pub fn swapped(&self) -> Self {
        EdgeColoring2 {
            n: self.n,
            colors: self.colors.iter().map(|c| c.other()).collect(),
        }
    }

    /// Relabels vertex `i` as `i + shift (mod n)`.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.get((i + n - shift % n) % n, (j + n - shift % n) % n))
    }

    /// Edges of one color class as a simple graph on `n` vertices.
    pub fn class_graph(&self, color: Color) -> Result<Pseudograph> {
        let mut edges = Vec::new();
        for j in 0..self.n {
            for i in 0..j {
                if self.get(i, j) == color {
                    edges.push((i, j));
                }
            }
        }
        Pseudograph::new(self.n.max(1), edges)
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }
}

/// Pair `{i, j}` is red iff its circular distance lies in `red_chords`.
pub fn circulant_coloring(n: usize, red_chords: &[usize]) -> Result<EdgeColoring2> {
    if let Some(&bad) = red_chords.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(Error::InvalidParameter(format!(
            "chord {bad} not in 1..={}",
            n / 2
        )));
    }
    Ok(EdgeColoring2::from_fn(n, |i, j| {
        let d = j - i;
        if red_chords.contains(&d.min(n - d)) {
            Color::Red
        } else {
            Color::Blue
        }
    }))
}

fn extend_clique(
    c: &EdgeColoring2,
    k: usize,
    color: Color,
    clique: &mut Vec<usize>,
    candidates: &[usize],
) -> bool {
    if clique.len() == k {
        return true;
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if clique.len() + candidates.len() - idx < k {
            return false;
        }
        let next: Vec<usize> = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&u| c.get(v, u) == color)
            .collect();
        clique.push(v);
        if extend_clique(c, k, color, clique, &next) {
            return true;
        }
        clique.pop();
    }
    false
}

/// A `k`-set of vertices whose pairs all have `color`, if one exists.
pub fn has_mono_clique(c: &EdgeColoring2, k: usize, color: Color) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..c.n()).collect();
    let mut clique = Vec::with_capacity(k);
    extend_clique(c, k, color, &mut clique, &all).then_some(clique)
}

/// Same search restricted to cliques containing `v`.
pub fn has_mono_clique_through(
    c: &EdgeColoring2,
    k: usize,
    color: Color,
    v: usize,
) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let nbrs: Vec<usize> = (0..c.n()).filter(|&u| u != v && c.get(v, u) == color).collect();
    let mut clique = vec![v];
    extend_clique(c, k, color, &mut clique, &nbrs).then(|| {
        clique.sort_unstable();
        clique
    })
}

/// Result of the exhaustive `r(3, 3) = 6` check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R33Report {
    pub colorings_checked: u64,
    pub every_k6_coloring_has_triangle: bool,
    pub pentagon_is_triangle_free: bool,
}

impl R33Report {
    pub fn holds(&self) -> bool {
        self.every_k6_coloring_has_triangle && self.pentagon_is_triangle_free
    }
}

pub fn verify_r33() -> R33Report {
    let mut all = true;
    for mask in 0u64..1 << 15 {
        let c = EdgeColoring2::from_mask(6, mask);
        if has_mono_clique(&c, 3, Color::Red).is_none() && has_mono_clique(&c, 3, Color::Blue).is_none() {
            all = false;
            break;
        }
    }
    let pentagon = circulant_coloring(5, &[1]).expect("valid chord");
    R33Report {
        colorings_checked: 1 << 15,
        every_k6_coloring_has_triangle: all,
        pentagon_is_triangle_free: has_mono_clique(&pentagon, 3, Color::Red).is_none()
            && has_mono_clique(&pentagon, 3, Color::Blue).is_none(),
    }
}

/// No blue `K_m` and no red `K_n`.
pub fn avoids(c: &EdgeColoring2, m: usize, n: usize) -> bool {
    has_mono_clique(c, m, Color::Blue).is_none() && has_mono_clique(c, n, Color::Red).is_none()
}

/// Explicit colorings of `K_(r-1)` certifying `r(m, n) >= r`.
fn lower_witness(m: usize, n: usize) -> Option<EdgeColoring2> {
    let (a, b) = (m.min(n), m.max(n));
    let base = match (a, b) {
        (2, b) => EdgeColoring2::uniform(b - 1, Color::Red),
        (3, 3) => circulant_coloring(5, &[1]).ok()?,
        (3, 4) => circulant_coloring(8, &[1, 4]).ok()?,
        (3, 5) => circulant_coloring(13, &[1, 5]).ok()?,
        (4, 4) => circulant_coloring(17, &[1, 2, 4, 8]).ok()?,
        _ => return None,
    };
    [base.clone(), base.swapped()].into_iter().find(|c| avoids(c, m, n))
}

/// Largest `C(N, 2)` for which every coloring of `K_N` is enumerated.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyCheck {
    pub m: usize,
    pub n: usize,
    pub value: usize,
    /// Coloring of `K_(value-1)` with no blue `K_m` and no red `K_n`.
    pub lower_witness: EdgeColoring2,
    /// `Some` when every coloring of `K_value` was enumerated.
    pub upper_exhaustive: Option<bool>,
}

impl RamseyCheck {
    pub fn holds(&self) -> bool {
        self.upper_exhaustive != Some(false)
    }
}

/// Certifies `r(m, n) >= value` with an explicit coloring and, when
/// `C(value, 2) <= 21`, certifies `r(m, n) <= value` by enumeration.
pub fn verify_ramsey_value(m: usize, n: usize, value: usize) -> Result<RamseyCheck> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter("clique sizes must be at least 2".into()));
    }
    let witness = lower_witness(m, n)
        .filter(|w| w.n() + 1 == value)
        .ok_or_else(|| Error::InvalidParameter(format!("no coloring of K_{} known for r({m},{n})", value.saturating_sub(1))))?;
    let pairs = value * (value - 1) / 2;
    let upper = if pairs <= EXHAUSTIVE_PAIR_LIMIT {
        Some((0u64..1 << pairs).all(|mask| !avoids(&EdgeColoring2::from_mask(value, mask), m, n)))
    } else {
        None
    };
    Ok(RamseyCheck {
        m,
        n,
        value,
        lower_witness: witness,
        upper_exhaustive: upper,
    })
}

/// Enumerates all colorings of `K_n`; guard on `C(n, 2)`.
pub fn every_coloring_has(n: usize, m_blue: usize, n_red: usize, limit: usize) -> Result<bool> {
    let pairs = n * n.saturating_sub(1) / 2;
    guard("pairs to color", pairs, limit.min(EXHAUSTIVE_PAIR_LIMIT))?;
    Ok((0u64..1 << pairs).all(|mask| !avoids(&EdgeColoring2::from_mask(n, mask), m_blue, n_red)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_and_masks() {
        let c = EdgeColoring2::from_mask(4, 0b000001);
        assert_eq!(c.get(0, 1), Color::Red);
        assert_eq!(c.get(1, 0), Color::Red);
        assert_eq!(c.count(Color::Red), 1);
        assert_eq!(c.swapped().count(Color::Red), 5);
    }

    #[test]
    fn circulants() {
        let k17 = circulant_coloring(17, &[1, 2, 4, 8]).unwrap();
        assert_eq!(k17.get(0, 3), Color::Blue);
        assert_eq!(k17.get(0, 9), Color::Red);
        assert!(has_mono_clique(&k17, 4, Color::Red).is_none());
        assert!(has_mono_clique(&k17, 4, Color::Blue).is_none());
        assert!(has_mono_clique(&k17, 3, Color::Red).is_some());
        assert!(circulant_coloring(5, &[3]).is_err());
        assert!(circulant_coloring(5, &[0]).is_err());
        assert_eq!(k17.rotated(5), k17);
    }

    #[test]
    fn witnesses_are_cliques() {
        let red = EdgeColoring2::uniform(4, Color::Red);
        let w = has_mono_clique(&red, 4, Color::Red).unwrap();
        assert_eq!(w, vec![0, 1, 2, 3]);
        assert!(has_mono_clique(&red, 1, Color::Blue).is_some());
        assert!(has_mono_clique(&red, 2, Color::Blue).is_none());
        assert_eq!(has_mono_clique_through(&red, 3, Color::Red, 2), Some(vec![0, 1, 2]));
    }

    #[test]
    fn r33() {
        let report = verify_r33();
        assert!(report.holds());
        assert_eq!(report.colorings_checked, 32768);
    }

    #[test]
    fn small_values() {
        assert!(verify_ramsey_value(3, 3, 6).unwrap().upper_exhaustive == Some(true));
        let r34 = verify_ramsey_value(3, 4, 9).unwrap();
        assert_eq!(r34.upper_exhaustive, None);
        assert!(avoids(&r34.lower_witness, 3, 4));
        assert!(verify_ramsey_value(4, 3, 9).is_ok());
        assert!(verify_ramsey_value(2, 5, 5).unwrap().upper_exhaustive == Some(true));
        assert!(verify_ramsey_value(4, 4, 18).is_ok());
        assert!(verify_ramsey_value(3, 5, 14).is_ok());
        assert!(verify_ramsey_value(3, 3, 7).is_err());
        assert!(verify_ramsey_value(5, 5, 43).is_err());
    }
}
