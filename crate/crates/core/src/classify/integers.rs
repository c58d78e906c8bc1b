//! The integer setting: avoidability and saturation of finite subsets of Z,
//! plus windowed partition construction and refutation.
//!
//! The saturated sets in Z are the odd integers; {a, a+x, a+2x} with a even
//! and x odd; and {a, a+4x} with a even and x nonzero. A finite set is
//! avoidable exactly when it fits inside one of those families.

use crate::coloring::{two_color, Color};
use crate::error::{Error, Result};
use serde::Serialize;

/// A finite subset of Z in strictly sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntSet {
    members: Vec<i64>,
}

impl IntSet {
    pub fn new(mut members: Vec<i64>) -> IntSet {
        members.sort_unstable();
        members.dedup();
        IntSet { members }
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// max(|min|, |max|), the natural scale of the set.
    pub fn magnitude(&self) -> i64 {
        self.members.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

pub fn integers_is_avoidable(u: &IntSet) -> bool {
    let m = u.members();
    if m.len() <= 1 || m.iter().all(|v| v.rem_euclid(2) == 1) {
        return true;
    }
    match m.len() {
        // Every two-element set fits in a family: an odd gap {a, a+x} sits
        // inside {a-x, a, a+x} anchored at the even endpoint shifted by x; a
        // gap divisible by 4 is a pair family member; a gap of 2 mod 4 is the
        // outer pair of {a, a+x, a+2x}.
        2 => true,
        3 => {
            // Must be exactly an arithmetic progression with odd step and
            // even endpoints, unless all members are odd (handled above).
            let (a, b, c) = (m[0], m[1], m[2]);
            b - a == c - b && (b - a).rem_euclid(2) == 1 && a % 2 == 0
        }
        _ => false,
    }
}

pub fn integers_is_saturated(u: &IntSet) -> bool {
    let m = u.members();
    match m.len() {
        3 => {
            let (a, b, c) = (m[0], m[1], m[2]);
            b - a == c - b && (b - a).rem_euclid(2) == 1 && a % 2 == 0
        }
        2 => {
            let (a, b) = (m[0], m[1]);
            a % 2 == 0 && (b - a) % 4 == 0
        }
        _ => false,
    }
}

/// A 2-coloring of the window [-radius, radius].
#[derive(Clone, Debug, Serialize)]
pub struct WindowColoring {
    pub radius: i64,
    /// colors[i] is the color of i - radius.
    pub colors: Vec<Color>,
}

impl WindowColoring {
    pub fn color(&self, v: i64) -> Option<Color> {
        let idx = v + self.radius;
        if (0..self.colors.len() as i64).contains(&idx) {
            Some(self.colors[idx as usize])
        } else {
            None
        }
    }

    /// Quadratic re-check: no two distinct same-colored integers in the
    /// window sum into u.
    pub fn verify(&self, u: &IntSet) -> bool {
        let lo = -self.radius;
        let hi = self.radius;
        for x in lo..=hi {
            for y in x + 1..=hi {
                if u.contains(x + y) && self.color(x) == self.color(y) {
                    return false;
                }
            }
        }
        true
    }
}

pub enum WindowOutcome {
    Colored(WindowColoring),
    /// Odd cycle in the windowed graph; a sound refutation for all of Z.
    OddCycle(Vec<i64>),
}

/// Decides 2-colorability of the windowed associated graph on
/// [-radius, radius] with edges x + y in u (x != y).
pub fn window_decide(u: &IntSet, radius: i64) -> WindowOutcome {
    let size = (2 * radius + 1) as usize;
    let mut adjacency = vec![Vec::new(); size];
    for x in -radius..=radius {
        for y in x + 1..=radius {
            if u.contains(x + y) {
                adjacency[(x + radius) as usize].push((y + radius) as u32);
                adjacency[(y + radius) as usize].push((x + radius) as u32);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    match two_color(&adjacency) {
        Ok(colors) => WindowOutcome::Colored(WindowColoring { radius, colors }),
        Err(cycle) => {
            WindowOutcome::OddCycle(cycle.into_iter().map(|i| i as i64 - radius).collect())
        }
    }
}

/// A verified coloring of the window for an avoidable set.
///
/// The windowed graph is a finite subgraph of the bipartite graph on all of
/// Z that the classification guarantees, so the 2-coloring always succeeds;
/// the result is re-verified by quadratic scan before it is returned.
pub fn integers_partition_window(u: &IntSet, radius: i64) -> Result<WindowColoring> {
    if !integers_is_avoidable(u) {
        return Err(Error::NotAvoidable);
    }
    if radius < 2 * u.magnitude() {
        return Err(Error::InvalidInput(format!(
            "window radius {radius} below 2*max|u| = {}",
            2 * u.magnitude()
        )));
    }
    match window_decide(u, radius) {
        WindowOutcome::Colored(w) => {
            debug_assert!(w.verify(u));
            Ok(w)
        }
        WindowOutcome::OddCycle(_) => Err(Error::NotAvoidable),
    }
}

/// Parity coloring for the set of all odd integers: evens A, odds B.
pub fn odd_coset_window_coloring(radius: i64) -> WindowColoring {
    let colors = (-radius..=radius)
        .map(|v| if v.rem_euclid(2) == 0 { Color::A } else { Color::B })
        .collect();
    WindowColoring { radius, colors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn avoidable_examples() {
        assert!(integers_is_avoidable(&IntSet::new(vec![0, 1, 2])));
        assert!(!integers_is_avoidable(&IntSet::new(vec![0, 2, 4])));
        assert!(integers_is_avoidable(&IntSet::new(vec![7, 13, 101])));
        assert!(integers_is_avoidable(&IntSet::new(vec![-4, 0])));
        assert!(integers_is_avoidable(&IntSet::new(vec![])));
        assert!(!integers_is_avoidable(&IntSet::new(vec![1, 2, 3, 5])));
    }

    #[test]
    fn saturated_examples() {
        assert!(integers_is_saturated(&IntSet::new(vec![0, 1, 2])));
        assert!(integers_is_saturated(&IntSet::new(vec![0, 4])));
        assert!(!integers_is_saturated(&IntSet::new(vec![0, 2])));
        assert!(!integers_is_saturated(&IntSet::new(vec![1, 3])));
        // Negative parameters are fine: a = -6, x = 3.
        assert!(integers_is_saturated(&IntSet::new(vec![-6, -3, 0])));
    }

    #[test]
    fn window_partition_verifies() {
        for set in [vec![0, 1, 2], vec![0, 4], vec![-2, 3, 8]] {
            let u = IntSet::new(set);
            let radius = 2 * u.magnitude().max(2);
            let w = integers_partition_window(&u, radius).unwrap();
            assert!(w.verify(&u));
        }
    }

    #[test]
    fn window_refutes_three_evens() {
        let u = IntSet::new(vec![0, 2, 4]);
        match window_decide(&u, 8) {
            WindowOutcome::OddCycle(cycle) => {
                assert_eq!(cycle.len() % 2, 1);
                for i in 0..cycle.len() {
                    let s = cycle[i] + cycle[(i + 1) % cycle.len()];
                    assert!(u.contains(s));
                }
            }
            _ => panic!("expected refutation"),
        }
    }

    #[test]
    fn window_too_small_is_rejected() {
        let u = IntSet::new(vec![0, 4]);
        assert!(integers_partition_window(&u, 3).is_err());
    }

    #[test]
    fn odd_coset_coloring_avoids_odd_sums() {
        let w = odd_coset_window_coloring(10);
        let odds = IntSet::new((-20..=20).filter(|v: &i64| v.rem_euclid(2) == 1).collect());
        assert!(w.verify(&odds));
    }
}
