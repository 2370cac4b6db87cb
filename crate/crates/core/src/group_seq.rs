//! Statistic sequences over `Z ⊕ Z` and the operators that transport them
//! down the partition tree.
//!
//! For a partition `λ` with `k >= 1` blocks, `seq(λ)` lists the statistic
//! `s(λ^j) = cr(λ^j)·α + ne(λ^j)·β` of the children `λ^1, ..., λ^k`. The
//! sequence of any child is obtained from the parent's by the operator `M`
//! (child 0) or `R_i` (child `i`), which gives a level recurrence for the
//! multiset of sequences at depth `l` below `λ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::MultiSet;
use crate::partition::SetPartition;
use crate::tree;

/// Element `a·e1 + b·e2` of `Z ⊕ Z`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct GroupVec {
    pub a: i64,
    pub b: i64,
}

impl GroupVec {
    pub const ZERO: GroupVec = GroupVec { a: 0, b: 0 };
    /// Weight of one crossing in the `(cr, ne)` statistic.
    pub const ALPHA: GroupVec = GroupVec { a: 1, b: 0 };
    /// Weight of one nesting in the `(cr, ne)` statistic.
    pub const BETA: GroupVec = GroupVec { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GroupVec { a, b }
    }

    /// `cr(mu)·alpha + ne(mu)·beta`.
    pub fn stat(mu: &SetPartition, alpha: GroupVec, beta: GroupVec) -> GroupVec {
        let (cr, ne, _) = mu.pair_stats();
        alpha * cr as i64 + beta * ne as i64
    }

    pub fn swap(self) -> GroupVec {
        GroupVec::new(self.b, self.a)
    }
}

impl Add for GroupVec {
    type Output = GroupVec;
    fn add(self, rhs: GroupVec) -> GroupVec {
        GroupVec::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for GroupVec {
    fn add_assign(&mut self, rhs: GroupVec) {
        *self = *self + rhs;
    }
}

impl Sub for GroupVec {
    type Output = GroupVec;
    fn sub(self, rhs: GroupVec) -> GroupVec {
        GroupVec::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GroupVec {
    type Output = GroupVec;
    fn neg(self) -> GroupVec {
        GroupVec::new(-self.a, -self.b)
    }
}

impl Mul<i64> for GroupVec {
    type Output = GroupVec;
    fn mul(self, rhs: i64) -> GroupVec {
        GroupVec::new(self.a * rhs, self.b * rhs)
    }
}

impl std::iter::Sum for GroupVec {
    fn sum<I: Iterator<Item = GroupVec>>(iter: I) -> GroupVec {
        iter.fold(GroupVec::ZERO, Add::add)
    }
}

impl fmt::Display for GroupVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Nonempty finite sequence over `Z ⊕ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GSeq(Vec<GroupVec>);

impl GSeq {
    pub fn new(items: Vec<GroupVec>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::IndexOutOfRange { index: 1, len: 0 });
        }
        Ok(GSeq(items))
    }

    pub fn items(&self) -> &[GroupVec] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> GroupVec {
        self.0[0]
    }

    /// The sequence with `shift` added to every term.
    pub fn shifted(&self, shift: GroupVec) -> GSeq {
        GSeq(self.0.iter().map(|&x| x + shift).collect())
    }
}

impl fmt::Display for GSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(""))
    }
}

/// `(u, v)` where, for the minimum `b_i` of the `i`-th block, `u_i` counts
/// arcs `(p, q)` with `p < b_i < q` and `v_i` counts arcs with `q < b_i`.
pub fn uv_seq(lam: &SetPartition) -> Result<(Vec<usize>, Vec<usize>)> {
    if lam.k() == 0 {
        return Err(Error::EmptyPartition);
    }
    let arcs = lam.arcs();
    let (u, v) = lam
        .block_minima()
        .into_iter()
        .map(|b| {
            let u = arcs.iter().filter(|e| e.i < b && b < e.j).count();
            let v = arcs.iter().filter(|e| e.j < b).count();
            (u, v)
        })
        .unzip();
    Ok((u, v))
}

/// `seq_{α,β}(λ)`: term `j` is `s(λ) + u_j·α + v_j·β = s(λ^j)`.
pub fn seq_stat(lam: &SetPartition, alpha: GroupVec, beta: GroupVec) -> Result<GSeq> {
    let (u, v) = uv_seq(lam)?;
    let base = GroupVec::stat(lam, alpha, beta);
    Ok(GSeq(
        u.iter()
            .zip(&v)
            .map(|(&ui, &vi)| base + alpha * ui as i64 + beta * vi as i64)
            .collect(),
    ))
}

/// `M(x_1 x_2 ... x_l) = x_1 x_1 x_2 ... x_l`.
pub fn op_m(s: &GSeq) -> GSeq {
    let mut items = Vec::with_capacity(s.len() + 1);
    items.push(s.first());
    items.extend_from_slice(s.items());
    GSeq(items)
}

/// `R_{α,β,i}` with `i` 1-based:
/// `x_i (x_1 ... x_{i-1} + (x_i - x_1 + α)) (x_{i+1} ... x_l + (x_i - x_1 + β))`.
pub fn op_r(s: &GSeq, alpha: GroupVec, beta: GroupVec, i: usize) -> Result<GSeq> {
    let xs = s.items();
    if i == 0 || i > xs.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: xs.len(),
        });
    }
    let xi = xs[i - 1];
    let delta = xi - xs[0];
    let mut out = Vec::with_capacity(xs.len());
    out.push(xi);
    out.extend(xs[..i - 1].iter().map(|&x| x + delta + alpha));
    out.extend(xs[i..].iter().map(|&x| x + delta + beta));
    Ok(GSeq(out))
}

/// `R_{α,β}(s) = {R_{α,β,i}(s) : 1 <= i <= l}`.
pub fn op_r_all(s: &GSeq, alpha: GroupVec, beta: GroupVec) -> MultiSet<GSeq> {
    (1..=s.len())
        .map(|i| op_r(s, alpha, beta, i).expect("index in range"))
        .collect()
}

/// `f_γ^r(x_1 ... x_l) = {x_{a_1} + ... + x_{a_r} - (r-1)x_1 + γ : 1 < a_1 < ... < a_r <= l}`.
///
/// Has `C(l - 1, r)` elements, so it is empty when `r > l - 1`.
pub fn f_gamma_r(s: &GSeq, gamma: GroupVec, r: usize) -> MultiSet<GroupVec> {
    let xs = s.items();
    let offset = gamma - xs[0] * (r as i64 - 1);
    xs[1..]
        .iter()
        .copied()
        .combinations(r)
        .map(|pick| pick.into_iter().sum::<GroupVec>() + offset)
        .collect()
}

/// `f_γ^r` extended to a multiset of sequences.
pub fn f_gamma_r_multi(xs: &MultiSet<GSeq>, gamma: GroupVec, r: usize) -> MultiSet<GroupVec> {
    xs.flat_map(|s| f_gamma_r(s, gamma, r))
}

/// `{seq(μ) : μ ∈ T(lam, l, m)}` evaluated directly on the tree nodes
/// (`m = None` takes the whole level).
pub fn level_seq_direct(
    lam: &SetPartition,
    l: usize,
    m: Option<usize>,
    alpha: GroupVec,
    beta: GroupVec,
) -> Result<MultiSet<GSeq>> {
    if lam.k() == 0 {
        return Err(Error::EmptyPartition);
    }
    let nodes = match m {
        Some(m) => tree::level_m(lam, l, m),
        None => tree::level(lam, l),
    };
    nodes.iter().map(|mu| seq_stat(mu, alpha, beta)).collect()
}

/// The same multiset through the level recurrence
/// `E(l, m) = R_{α,β}(E(l - 1, m)) ∪ M(E(l - 1, m - 1))`, starting from
/// `E(0, k) = {seq(lam)}`.
pub fn level_seq_recurrence(
    lam: &SetPartition,
    l: usize,
    m: Option<usize>,
    alpha: GroupVec,
    beta: GroupVec,
) -> Result<MultiSet<GSeq>> {
    let k = lam.k();
    let root = seq_stat(lam, alpha, beta)?;
    let step = |prev: &MultiSet<GSeq>| prev.flat_map(|s| op_r_all(s, alpha, beta));
    match m {
        None => {
            let mut cur = MultiSet::singleton(root);
            for _ in 0..l {
                cur = step(&cur).union(cur.map(op_m));
            }
            Ok(cur)
        }
        Some(m) => {
            // by_blocks[j] holds E(depth, k + j)
            let mut by_blocks = vec![MultiSet::singleton(root)];
            for _ in 0..l {
                let mut next: Vec<MultiSet<GSeq>> = by_blocks.iter().map(step).collect();
                next.push(MultiSet::new());
                for (j, prev) in by_blocks.iter().enumerate() {
                    next[j + 1].union_with(prev.map(op_m));
                }
                by_blocks = next;
            }
            Ok(m.checked_sub(k)
                .and_then(|j| by_blocks.into_iter().nth(j))
                .unwrap_or_default())
        }
    }
}

/// Level multiset of statistic sequences, computed both directly and by the
/// recurrence; the two must agree.
pub fn level_seq_multiset(
    lam: &SetPartition,
    l: usize,
    m: Option<usize>,
    alpha: GroupVec,
    beta: GroupVec,
) -> Result<MultiSet<GSeq>> {
    let direct = level_seq_direct(lam, l, m, alpha, beta)?;
    let rec = level_seq_recurrence(lam, l, m, alpha, beta)?;
    if direct != rec {
        return Err(Error::RouteMismatch(format!(
            "sequence multisets for {lam} at depth {l}, blocks {m:?}"
        )));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use crate::tree::{child, children, stat_distribution};

    const A: GroupVec = GroupVec::ALPHA;
    const B: GroupVec = GroupVec::BETA;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn gv(a: i64, b: i64) -> GroupVec {
        GroupVec::new(a, b)
    }

    fn seq(items: &[(i64, i64)]) -> GSeq {
        GSeq::new(items.iter().map(|&(a, b)| gv(a, b)).collect()).unwrap()
    }

    #[test]
    fn uv_examples() {
        // arcs (1,2),(2,5),(3,4); b_2 = 3 is covered by (2,5) and preceded by (1,2)
        assert_eq!(uv_seq(&p("1,2,5/3,4")).unwrap(), (vec![0, 1], vec![0, 1]));
        assert_eq!(uv_seq(&p("1")).unwrap(), (vec![0], vec![0]));
        assert_eq!(uv_seq(&SetPartition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn uv_recurrences_along_children() {
        for n in 1..=7 {
            for lam in enumerate_partitions(n) {
                let k = lam.k();
                let (u, v) = uv_seq(&lam).unwrap();
                let (u0, v0) = uv_seq(&child(&lam, 0)).unwrap();
                assert_eq!((u0[0], v0[0]), (0, 0));
                for i in 2..=k + 1 {
                    assert_eq!(u0[i - 1], u[i - 2]);
                    assert_eq!(v0[i - 1], v[i - 2]);
                }
                for j in 1..=k {
                    let (uj, vj) = uv_seq(&child(&lam, j)).unwrap();
                    assert_eq!((uj[0], vj[0]), (0, 0));
                    for i in 2..=k {
                        if i <= j {
                            assert_eq!(uj[i - 1], u[i - 2] + 1);
                            assert_eq!(vj[i - 1], v[i - 2]);
                        } else {
                            assert_eq!(uj[i - 1], u[i - 1]);
                            assert_eq!(vj[i - 1], v[i - 1] + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn seq_stat_examples() {
        assert_eq!(seq_stat(&p("1,2,5/3,4"), A, B).unwrap(), seq(&[(0, 1), (1, 2)]));
        assert_eq!(seq_stat(&p("1"), A, B).unwrap(), seq(&[(0, 0)]));
        assert!(seq_stat(&SetPartition::empty(), A, B).is_err());
    }

    #[test]
    fn seq_terms_are_child_statistics() {
        for n in 1..=6 {
            for lam in enumerate_partitions(n) {
                let s = seq_stat(&lam, A, B).unwrap();
                let kids = children(&lam);
                for (j, x) in s.items().iter().enumerate() {
                    assert_eq!(*x, GroupVec::stat(&kids[j + 1], A, B));
                }
            }
        }
    }

    #[test]
    fn op_m_examples() {
        assert_eq!(op_m(&seq(&[(3, 4)])), seq(&[(3, 4), (3, 4)]));
        assert_eq!(
            op_m(&seq(&[(0, 1), (1, 2)])),
            seq(&[(0, 1), (0, 1), (1, 2)])
        );
    }

    #[test]
    fn op_r_examples() {
        let s = seq(&[(0, 0), (1, 0), (2, 5)]);
        // i = 1: no shift, tail gets +β
        assert_eq!(op_r(&s, A, B, 1).unwrap(), seq(&[(0, 0), (1, 1), (2, 6)]));
        // hand-evaluated: x_2 = (1,0), shift (1,0); head +α, tail +β
        let r2 = op_r(&seq(&[(0, 0), (1, 0)]), A, B, 2).unwrap();
        assert_eq!(r2, seq(&[(1, 0), (2, 0)]));
        assert!(matches!(
            op_r(&s, A, B, 4),
            Err(Error::IndexOutOfRange { index: 4, len: 3 })
        ));
        assert!(op_r(&s, A, B, 0).is_err());
    }

    #[test]
    fn child_sequences_follow_operators() {
        let weights = [(A, B), (B, A), (gv(1, 1), gv(2, -1))];
        for n in 1..=6 {
            for lam in enumerate_partitions(n) {
                for &(alpha, beta) in &weights {
                    let s = seq_stat(&lam, alpha, beta).unwrap();
                    let kids = children(&lam);
                    assert_eq!(seq_stat(&kids[0], alpha, beta).unwrap(), op_m(&s));
                    for i in 1..=lam.k() {
                        assert_eq!(
                            seq_stat(&kids[i], alpha, beta).unwrap(),
                            op_r(&s, alpha, beta, i).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn f_examples() {
        let s = seq(&[(1, 2), (3, 4), (5, 6), (0, 7)]);
        assert_eq!(f_gamma_r(&s, gv(1, 1), 0), MultiSet::singleton(gv(2, 3)));
        let f1: MultiSet<_> = [gv(3, 4), gv(5, 6), gv(0, 7)].into_iter().collect();
        assert_eq!(f_gamma_r(&s, GroupVec::ZERO, 1), f1);
        assert!(f_gamma_r(&s, GroupVec::ZERO, 4).is_empty());
        // r = 2: pair sums minus x_1
        let f2 = f_gamma_r(&s, GroupVec::ZERO, 2);
        assert_eq!(f2.len(), 3);
        assert_eq!(f2.multiplicity(&gv(7, 8)), 1);
    }

    #[test]
    fn level_seq_examples() {
        let lam = p("1,2,5/3,4");
        let s = seq_stat(&lam, A, B).unwrap();
        assert_eq!(
            level_seq_multiset(&lam, 0, Some(2), A, B).unwrap(),
            MultiSet::singleton(s)
        );
        for l in 0..=4 {
            for m in 0..=7 {
                let e = level_seq_multiset(&lam, l, Some(m), A, B).unwrap();
                assert_eq!(
                    f_gamma_r_multi(&e, GroupVec::ZERO, 0),
                    stat_distribution(&lam, l, Some(m), A, B)
                );
            }
            let all = level_seq_multiset(&lam, l, None, A, B).unwrap();
            assert_eq!(all.len(), tree::level(&lam, l).len());
        }
    }
}
