//! The tree of set partitions.
//!
//! The children of a partition `λ` of `[n]` with blocks `B_1, ..., B_k` are
//! the partitions of `[n + 1]` whose restriction to `{2, ..., n + 1}` is
//! order-isomorphic to `λ`: child `0` adds `{1}` as a new block, child `i`
//! puts the new vertex `1` into the shifted block `B_i + 1`.

use crate::group_seq::GroupVec;
use crate::multiset::MultiSet;
use crate::partition::SetPartition;

/// Depth and block count selecting `T(λ, l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelKey {
    pub l: usize,
    pub m: usize,
}

impl LevelKey {
    /// Whether `T(λ, l, m)` can be nonempty for a root with `k` blocks.
    pub fn is_feasible(&self, k: usize) -> bool {
        k <= self.m && self.m <= k + self.l
    }
}

fn shifted(lam: &SetPartition) -> Vec<Vec<usize>> {
    lam.blocks()
        .iter()
        .map(|b| b.iter().map(|x| x + 1).collect())
        .collect()
}

/// Child `i` of `lam` (`0 <= i <= k`).
pub fn child(lam: &SetPartition, i: usize) -> SetPartition {
    assert!(i <= lam.k(), "child index {i} exceeds block count {}", lam.k());
    let mut blocks = shifted(lam);
    if i == 0 {
        blocks.insert(0, vec![1]);
    } else {
        let mut merged = blocks.remove(i - 1);
        merged.insert(0, 1);
        blocks.insert(0, merged);
    }
    SetPartition::from_blocks(blocks).expect("children of a valid partition are valid")
}

/// `λ^0, λ^1, ..., λ^k`.
pub fn children(lam: &SetPartition) -> Vec<SetPartition> {
    (0..=lam.k()).map(|i| child(lam, i)).collect()
}

/// Restriction to `{2, ..., n}` relabelled onto `[n - 1]`.
///
/// # Panics
/// If `p` is the empty partition.
pub fn parent(p: &SetPartition) -> SetPartition {
    assert!(!p.is_empty(), "the empty partition is the root");
    let blocks = p.blocks().iter().filter_map(|b| {
        let rest: Vec<usize> = b.iter().filter(|&&x| x != 1).map(|x| x - 1).collect();
        (!rest.is_empty()).then_some(rest)
    });
    SetPartition::from_blocks(blocks).expect("restriction of a valid partition is valid")
}

/// All descendants of `lam` at depth `l`, generated breadth first.
pub fn level(lam: &SetPartition, l: usize) -> Vec<SetPartition> {
    let mut frontier = vec![lam.clone()];
    for _ in 0..l {
        frontier = frontier.iter().flat_map(children).collect();
    }
    frontier
}

/// Descendants at depth `l` having exactly `m` blocks.
pub fn level_m(lam: &SetPartition, l: usize, m: usize) -> Vec<SetPartition> {
    if !(LevelKey { l, m }).is_feasible(lam.k()) {
        return Vec::new();
    }
    let mut frontier = vec![lam.clone()];
    for depth in 0..l {
        let remaining = l - depth - 1;
        frontier = frontier
            .iter()
            .flat_map(children)
            // block counts never decrease and grow by at most one per level
            .filter(|c| c.k() <= m && c.k() + remaining >= m)
            .collect();
    }
    frontier
}

/// Multiset `{cr(μ)·α + ne(μ)·β : μ ∈ T(lam, l, m)}`; `m = None` takes the
/// whole level.
pub fn stat_distribution(
    lam: &SetPartition,
    l: usize,
    m: Option<usize>,
    alpha: GroupVec,
    beta: GroupVec,
) -> MultiSet<GroupVec> {
    let nodes = match m {
        Some(m) => level_m(lam, l, m),
        None => level(lam, l),
    };
    nodes
        .iter()
        .map(|mu| GroupVec::stat(mu, alpha, beta))
        .collect()
}

/// `(cr, ne)` pairs over a level, i.e. the distribution with `α = (1, 0)`
/// and `β = (0, 1)`.
pub fn cr_ne_distribution(lam: &SetPartition, l: usize, m: Option<usize>) -> MultiSet<GroupVec> {
    stat_distribution(lam, l, m, GroupVec::ALPHA, GroupVec::BETA)
}
