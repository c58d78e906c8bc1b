//! Deterministic two-coloring of an undirected graph given by adjacency
//! lists, returning either a proper coloring or an odd cycle.

use serde::Serialize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Color {
    A,
    B,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::A => Color::B,
            Color::B => Color::A,
        }
    }
}

/// BFS two-coloring. Components are processed in ascending order of their
/// least vertex and the component root is always colored `A`, so the result
/// is reproducible. On failure returns the vertices of an odd cycle in
/// traversal order (consecutive entries, cyclically, are edges).
pub fn two_color(adjacency: &[Vec<u32>]) -> Result<Vec<Color>, Vec<u32>> {
    let n = adjacency.len();
    let mut color: Vec<Option<Color>> = vec![None; n];
    let mut parent: Vec<u32> = vec![u32::MAX; n];
    let mut depth: Vec<u32> = vec![0; n];
    let mut queue = std::collections::VecDeque::new();

    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(Color::A);
        queue.push_back(root as u32);
        while let Some(v) = queue.pop_front() {
            let cv = color[v as usize].unwrap();
            for &w in &adjacency[v as usize] {
                match color[w as usize] {
                    None => {
                        color[w as usize] = Some(cv.flip());
                        parent[w as usize] = v;
                        depth[w as usize] = depth[v as usize] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return Err(extract_odd_cycle(&parent, &depth, v, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

/// Walk the BFS tree up from the endpoints of a conflict edge to their
/// lowest common ancestor. Both endpoints have the same color, hence the
/// same depth parity, and the resulting cycle has odd length.
fn extract_odd_cycle(parent: &[u32], depth: &[u32], u: u32, v: u32) -> Vec<u32> {
    let mut left = vec![u];
    let mut right = vec![v];
    let (mut a, mut b) = (u, v);
    while depth[a as usize] > depth[b as usize] {
        a = parent[a as usize];
        left.push(a);
    }
    while depth[b as usize] > depth[a as usize] {
        b = parent[b as usize];
        right.push(b);
    }
    while a != b {
        a = parent[a as usize];
        left.push(a);
        b = parent[b as usize];
        right.push(b);
    }
    // left ends at the LCA; right's last element is the same vertex.
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
