//! Augmenting-path bipartite matching and Hall violators.
//!
//! The left side is small in every use here (pattern edges), so plain
//! Kuhn-style augmentation is enough.

use serde::{Deserialize, Serialize};

/// Maximum matching of a bipartite graph given as left-side adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `left[i]` is the right vertex matched to left vertex `i`.
    pub left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().filter(|m| m.is_some()).count()
    }

    pub fn is_left_saturating(&self) -> bool {
        self.left.iter().all(Option::is_some)
    }

    pub fn right_partner(&self, j: usize) -> Option<usize> {
        self.right.get(j).copied().flatten()
    }
}

/// Computes a maximum matching. Left vertices are processed in index order and
/// adjacency lists in the given order, so the result is deterministic.
pub fn maximum_matching(right_count: usize, adjacency: &[Vec<usize>]) -> Matching {
    let mut m = Matching {
        left: vec![None; adjacency.len()],
        right: vec![None; right_count],
    };
    let mut seen = vec![false; right_count];
    for i in 0..adjacency.len() {
        seen.iter_mut().for_each(|s| *s = false);
        augment(i, adjacency, &mut m, &mut seen);
    }
    m
}

fn augment(i: usize, adjacency: &[Vec<usize>], m: &mut Matching, seen: &mut [bool]) -> bool {
    for &j in &adjacency[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        let free = match m.right[j] {
            None => true,
            Some(k) => augment(k, adjacency, m, seen),
        };
        if free {
            m.left[i] = Some(j);
            m.right[j] = Some(i);
            return true;
        }
    }
    false
}

/// A Hall violator: left set `x` whose neighbourhood `neighbors` is smaller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadSet {
    pub x: Vec<usize>,
    pub neighbors: Vec<usize>,
}

/// Returns a set `X` of left vertices with `|N(X)| < |X|` when no matching
/// saturates the left side, otherwise `None`.
///
/// `X` is everything reachable by alternating paths from an unmatched left
/// vertex of a maximum matching; then every vertex of `N(X)` is matched into
/// `X`, which gives `|N(X)| = |X| - 1`.
pub fn find_bad_set(right_count: usize, adjacency: &[Vec<usize>]) -> Option<BadSet> {
    let m = maximum_matching(right_count, adjacency);
    let root = m.left.iter().position(Option::is_none)?;
    let mut in_x = vec![false; adjacency.len()];
    let mut in_n = vec![false; right_count];
    let mut stack = vec![root];
    in_x[root] = true;
    while let Some(i) = stack.pop() {
        for &j in &adjacency[i] {
            if in_n[j] {
                continue;
            }
            in_n[j] = true;
            let k = m.right[j].expect("neighbour of an alternating tree is matched");
            if !in_x[k] {
                in_x[k] = true;
                stack.push(k);
            }
        }
    }
    Some(BadSet {
        x: (0..adjacency.len()).filter(|&i| in_x[i]).collect(),
        neighbors: (0..right_count).filter(|&j| in_n[j]).collect(),
    })
}
