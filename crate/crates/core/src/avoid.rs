//! Associated graphs, avoidability decisions with verifiable certificates,
//! saturation tests, and exhaustive enumeration of saturated sets.

use crate::coloring::{two_color, Color};
use crate::error::{Error, Result};
use crate::group::{Element, Group, SubsetU};
use serde::Serialize;
use std::time::Instant;

/// Graph on the group elements with an edge between distinct g, h whenever
/// g*h or h*g lands in the target set. The two orders coincide for abelian
/// groups; both are required in general.
pub struct AssociatedGraph {
    adjacency: Vec<Vec<u32>>,
    target: SubsetU,
}

impl AssociatedGraph {
    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn target(&self) -> &SubsetU {
        &self.target
    }

    pub fn has_edge(&self, x: u32, y: u32) -> bool {
        self.adjacency[x as usize].binary_search(&y).is_ok()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoColoring {
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn new(colors: Vec<Color>) -> TwoColoring {
        TwoColoring { colors }
    }

    pub fn color(&self, e: Element) -> Color {
        self.colors[e.0 as usize]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Element indices on each side, (A, B).
    pub fn sides(&self) -> (Vec<u32>, Vec<u32>) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &c) in self.colors.iter().enumerate() {
            match c {
                Color::A => a.push(i as u32),
                Color::B => b.push(i as u32),
            }
        }
        (a, b)
    }
}

/// Odd-length cyclic sequence of distinct elements; every consecutive pair
/// (cyclically) is an edge of the associated graph.
#[derive(Clone, Debug, Serialize)]
pub struct OddCycle(pub Vec<u32>);

#[derive(Clone, Debug, Serialize)]
pub enum AvoidabilityOutcome {
    Avoidable(TwoColoring),
    Unavoidable(OddCycle),
}

impl AvoidabilityOutcome {
    pub fn is_avoidable(&self) -> bool {
        matches!(self, AvoidabilityOutcome::Avoidable(_))
    }
}

pub fn build_associated_graph(g: &Group, u: &SubsetU) -> AssociatedGraph {
    let n = g.order();
    let mask = u.mask(n);
    let mut adjacency = vec![Vec::new(); n as usize];
    for x in 0..n {
        for y in x + 1..n {
            if mask[g.op_idx(x, y) as usize] || mask[g.op_idx(y, x) as usize] {
                adjacency[x as usize].push(y);
                adjacency[y as usize].push(x);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    AssociatedGraph { adjacency, target: u.clone() }
}

/// Decides avoidability by 2-coloring the associated graph. Deterministic:
/// components are processed in ascending order of least vertex and each
/// component root receives color A.
pub fn decide_avoidable(g: &Group, u: &SubsetU) -> AvoidabilityOutcome {
    let graph = build_associated_graph(g, u);
    match two_color(graph.adjacency()) {
        Ok(colors) => AvoidabilityOutcome::Avoidable(TwoColoring::new(colors)),
        Err(cycle) => AvoidabilityOutcome::Unavoidable(OddCycle(cycle)),
    }
}

/// The trusted checker: true iff no two distinct same-colored elements
/// multiply (in either order) into the target set. Quadratic scan over all
/// ordered pairs.
pub fn verify_avoiding_partition(g: &Group, u: &SubsetU, c: &TwoColoring) -> bool {
    let n = g.order();
    if c.colors().len() != n as usize {
        return false;
    }
    let mask = u.mask(n);
    for x in 0..n {
        for y in 0..n {
            if x != y
                && c.color(Element(x)) == c.color(Element(y))
                && mask[g.op_idx(x, y) as usize]
            {
                return false;
            }
        }
    }
    true
}

/// Checks an odd-cycle certificate against the edge rule.
pub fn verify_odd_cycle(g: &Group, u: &SubsetU, cycle: &OddCycle) -> bool {
    let verts = &cycle.0;
    if verts.len() < 3 || verts.len().is_multiple_of(2) {
        return false;
    }
    let mut sorted = verts.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != verts.len() {
        return false;
    }
    let mask = u.mask(g.order());
    verts.iter().enumerate().all(|(i, &x)| {
        let y = verts[(i + 1) % verts.len()];
        mask[g.op_idx(x, y) as usize] || mask[g.op_idx(y, x) as usize]
    })
}

pub fn is_saturated(g: &Group, u: &SubsetU) -> bool {
    if !decide_avoidable(g, u).is_avoidable() {
        return false;
    }
    (0..g.order()).all(|z| u.contains(z) || !decide_avoidable(g, &u.with(z)).is_avoidable())
}

/// Greedy completion: repeatedly adds the smallest-index element that keeps
/// the set avoidable.
pub fn saturate(g: &Group, u: &SubsetU) -> Result<SubsetU> {
    if !decide_avoidable(g, u).is_avoidable() {
        return Err(Error::NotAvoidable);
    }
    let mut cur = u.clone();
    loop {
        let next = (0..g.order())
            .find(|&z| !cur.contains(z) && decide_avoidable(g, &cur.with(z)).is_avoidable());
        match next {
            Some(z) => cur = cur.with(z),
            None => return Ok(cur),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Enumeration refuses groups above this order.
    pub max_order: u32,
    /// Upper bound on avoidability checks performed during a search.
    pub max_expansions: u64,
    pub max_seconds: Option<f64>,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget { max_order: 32, max_expansions: 50_000_000, max_seconds: None }
    }
}

impl SearchBudget {
    pub fn with_max_order(order: u32) -> SearchBudget {
        SearchBudget { max_order: order, ..SearchBudget::default() }
    }
}

struct SearchState<'a> {
    group: &'a Group,
    budget: &'a SearchBudget,
    expansions: u64,
    started: Instant,
    found: Vec<SubsetU>,
}

impl SearchState<'_> {
    fn tick(&mut self) -> Result<()> {
        self.expansions += 1;
        if self.expansions > self.budget.max_expansions {
            return Err(Error::BudgetExceeded(format!(
                "{} expansions performed, {} sets found so far",
                self.expansions,
                self.found.len()
            )));
        }
        if let Some(limit) = self.budget.max_seconds {
            if self.expansions.is_multiple_of(1024) && self.started.elapsed().as_secs_f64() > limit {
                return Err(Error::BudgetExceeded(format!(
                    "wall clock over {limit}s, {} sets found so far",
                    self.found.len()
                )));
            }
        }
        Ok(())
    }
}

/// The complete list of saturated sets, computed without reference to any
/// classification theorem.
///
/// Depth-first search over avoidable sets: a set is extended only by
/// elements above its maximum, so every avoidable set is visited exactly
/// once (avoidability is closed under subsets, hence every avoidable set is
/// reachable along its own sorted chain). A set is recorded when no element
/// of the whole group extends it.
pub fn enumerate_saturated_sets(g: &Group, budget: &SearchBudget) -> Result<Vec<SubsetU>> {
    if g.order() > budget.max_order {
        return Err(Error::BudgetExceeded(format!(
            "group order {} exceeds the enumeration bound {}",
            g.order(),
            budget.max_order
        )));
    }
    let mut state = SearchState { group: g, budget, expansions: 0, started: Instant::now(), found: Vec::new() };
    dfs_enumerate(&SubsetU::empty(), &mut state)?;
    state.found.sort();
    Ok(state.found)
}

fn dfs_enumerate(u: &SubsetU, state: &mut SearchState) -> Result<()> {
    let order = state.group.order();
    let lower = u.max().map_or(0, |m| m + 1);
    let mut maximal = true;
    for z in 0..order {
        if u.contains(z) {
            continue;
        }
        state.tick()?;
        if decide_avoidable(state.group, &u.with(z)).is_avoidable() {
            maximal = false;
            if z >= lower {
                dfs_enumerate(&u.with(z), state)?;
            }
        }
    }
    if maximal && !u.is_empty() {
        state.found.push(u.clone());
    }
    Ok(())
}

/// Exact maximum size of an avoidable set containing at least one even
/// element, by branch-and-bound over the same lexicographic search tree.
pub fn max_avoidable_containing_even(g: &Group, budget: &SearchBudget) -> Result<u32> {
    if g.order() > budget.max_order {
        return Err(Error::BudgetExceeded(format!(
            "group order {} exceeds the search bound {}",
            g.order(),
            budget.max_order
        )));
    }
    let evens: Vec<bool> = g.elements().map(|e| g.is_even_element(e)).collect();
    let mut state = SearchState { group: g, budget, expansions: 0, started: Instant::now(), found: Vec::new() };
    let mut best = 0u32;
    dfs_max(&SubsetU::empty(), false, &evens, &mut best, &mut state)?;
    Ok(best)
}

fn dfs_max(
    u: &SubsetU,
    has_even: bool,
    evens: &[bool],
    best: &mut u32,
    state: &mut SearchState,
) -> Result<()> {
    let order = state.group.order();
    if has_even && u.len() as u32 > *best {
        *best = u.len() as u32;
    }
    let lower = u.max().map_or(0, |m| m + 1);
    // Even with every remaining element added this branch cannot win.
    if u.len() as u32 + (order - lower) <= *best {
        return Ok(());
    }
    for z in lower..order {
        state.tick()?;
        if decide_avoidable(state.group, &u.with(z)).is_avoidable() {
            dfs_max(&u.with(z), has_even || evens[z as usize], evens, best, state)?;
        }
    }
    Ok(())
}
