//! Set partitions of `[n]`, their standard arc diagrams and the pairwise arc
//! statistics.
//!
//! Vertices are 1-based everywhere in the public API. A partition is stored
//! as its blocks, each sorted increasingly, with blocks ordered by their
//! minima.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `{1, ..., n}` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        let p = SetPartition::from_blocks(raw.blocks)?;
        if p.n != raw.n {
            return Err(Error::parse(
                raw.n.to_string(),
                format!("declared n does not match blocks covering [{}]", p.n),
            ));
        }
        Ok(p)
    }
}

/// An arc `(i, j)`, `i < j`, joining consecutive elements of a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
}

/// Role of a vertex determined by whether it is the minimum and/or maximum
/// of its block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    /// Minimum but not maximum.
    Opener,
    /// Maximum but not minimum.
    Closer,
    /// Both minimum and maximum.
    Singleton,
    /// Neither.
    Transient,
}

impl SetPartition {
    /// The partition of the empty set.
    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// Builds a partition from arbitrary blocks, validating that they cover
    /// `[n]` exactly once. Blocks and their elements are canonicalised.
    pub fn from_blocks<I, B>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for block in blocks {
            let mut b: Vec<usize> = block.into_iter().collect();
            if b.is_empty() {
                return Err(Error::parse("", "empty block"));
            }
            for &x in &b {
                if x == 0 {
                    return Err(Error::parse("0", "elements are 1-based"));
                }
                if !seen.insert(x) {
                    return Err(Error::parse(x.to_string(), "duplicate element"));
                }
            }
            b.sort_unstable();
            out.push(b);
        }
        let n = seen.len();
        if let Some(missing) = (1..=n).find(|x| !seen.contains(x)) {
            return Err(Error::parse(
                missing.to_string(),
                format!("gap: element {missing} missing from 1..{}", seen.last().unwrap()),
            ));
        }
        out.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks: out })
    }

    /// Builds a partition from a restricted growth string (0-based labels,
    /// `rgs[0] == 0`, each label at most one more than the running maximum).
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (pos, &label) in rgs.iter().enumerate() {
            if label == blocks.len() {
                blocks.push(vec![pos + 1]);
            } else if label < blocks.len() {
                blocks[label].push(pos + 1);
            } else {
                return Err(Error::parse(
                    label.to_string(),
                    "not a restricted growth string",
                ));
            }
        }
        Ok(SetPartition {
            n: rgs.len(),
            blocks,
        })
    }

    /// Restricted growth string: entry `v - 1` is the index of the block
    /// containing `v`.
    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (idx, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x - 1] = idx;
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Minima `b_1 < ... < b_k` of the blocks.
    pub fn block_minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Arcs of the standard diagram, block by block. There are `n - k` of them.
    pub fn arcs(&self) -> Vec<Arc> {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Arc { i: w[0], j: w[1] }))
            .collect()
    }

    /// `(cr, ne, al)` counted over unordered pairs of arcs.
    pub fn pair_stats(&self) -> (usize, usize, usize) {
        let arcs = self.arcs();
        let (mut cr, mut ne, mut al) = (0, 0, 0);
        for (x, a) in arcs.iter().enumerate() {
            for b in &arcs[x + 1..] {
                let (first, second) = if a.i < b.i { (a, b) } else { (b, a) };
                if second.i < first.j && first.j < second.j {
                    cr += 1;
                } else if second.j < first.j {
                    ne += 1;
                } else {
                    al += 1;
                }
            }
        }
        (cr, ne, al)
    }

    /// Number of crossings `i1 < i2 < j1 < j2`.
    pub fn cr(&self) -> usize {
        self.pair_stats().0
    }

    /// Number of nestings `i1 < i2 < j2 < j1`.
    pub fn ne(&self) -> usize {
        self.pair_stats().1
    }

    /// Number of arc pairs forming neither a crossing nor a nesting.
    pub fn al(&self) -> usize {
        self.pair_stats().2
    }

    pub fn vertex_roles(&self) -> Vec<VertexRole> {
        let mut roles = vec![VertexRole::Transient; self.n];
        for b in &self.blocks {
            let (first, last) = (b[0], b[b.len() - 1]);
            if first == last {
                roles[first - 1] = VertexRole::Singleton;
            } else {
                roles[first - 1] = VertexRole::Opener;
                roles[last - 1] = VertexRole::Closer;
            }
        }
        roles
    }

    /// For each vertex, its predecessor in its block (if any).
    pub(crate) fn predecessors(&self) -> Vec<Option<usize>> {
        let mut prev = vec![None; self.n];
        for b in &self.blocks {
            for w in b.windows(2) {
                prev[w[1] - 1] = Some(w[0]);
            }
        }
        prev
    }

    /// Canonical `1,2,5/3,4` rendering. The empty partition renders as `""`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "blocks": self.blocks })
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, b) in self.blocks.iter().enumerate() {
            if idx > 0 {
                f.write_str("/")?;
            }
            for (pos, x) in b.iter().enumerate() {
                if pos > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses the canonical string form: blocks separated by `/`, elements by `,`.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SetPartition::empty());
    }
    let mut blocks = Vec::new();
    for block in text.split('/') {
        let block = block.trim();
        if block.is_empty() {
            return Err(Error::parse(block, "empty block"));
        }
        let mut elems = Vec::new();
        for tok in block.split(',') {
            let tok = tok.trim();
            let x: usize = tok
                .parse()
                .map_err(|_| Error::parse(tok, "not a positive integer"))?;
            elems.push(x);
        }
        blocks.push(elems);
    }
    SetPartition::from_blocks(blocks)
}

/// Partitions of `[n]` in lexicographic order of restricted growth strings.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    // prefix maxima: maxes[i] = max(rgs[0..=i])
    maxes: Vec<usize>,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Partitions {
            rgs: vec![0; n],
            maxes: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_rgs(&self.rgs).expect("generator emits valid strings");
        self.advance();
        Some(current)
    }
}

/// Every partition of `[n]` exactly once. `n = 0` yields the empty partition.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// Every partition of `[n]` with exactly `k` blocks.
pub fn enumerate_partitions_k(n: usize, k: usize) -> impl Iterator<Item = SetPartition> {
    Partitions::new(n).filter(move |p| p.k() == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let lam = p("1,2,5/3,4");
        assert_eq!(lam.n(), 5);
        assert_eq!(lam.k(), 2);
        assert_eq!(lam.blocks(), &[vec![1, 2, 5], vec![3, 4]]);

        let one = p("1");
        assert_eq!((one.n(), one.k()), (1, 1));

        // blocks and elements are re-sorted
        assert_eq!(p("4,3/5,1,2"), lam);
    }

    #[test]
    fn parse_errors_name_the_token() {
        match parse_partition("1,3/2,2") {
            Err(Error::Parse { token, reason }) => {
                assert_eq!(token, "2");
                assert!(reason.contains("duplicate"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_partition("1,3"),
            Err(Error::Parse { token, .. }) if token == "2"
        ));
        assert!(matches!(
            parse_partition("1//2"),
            Err(Error::Parse { reason, .. }) if reason == "empty block"
        ));
        assert!(matches!(
            parse_partition("1,x"),
            Err(Error::Parse { token, .. }) if token == "x"
        ));
        assert!(parse_partition("0,1").is_err());
    }

    #[test]
    fn arcs_examples() {
        let arcs = p("1,2,5/3,4").arcs();
        let pairs: Vec<_> = arcs.iter().map(|a| (a.i, a.j)).collect();
        assert_eq!(pairs, vec![(1, 2), (2, 5), (3, 4)]);
        assert!(p("1").arcs().is_empty());

        let big = p("1,7,10/2,4,6,8/3/5,9/11,12");
        let arcs = big.arcs();
        assert_eq!(arcs.len(), 7);
        for (i, j) in [(2, 4), (4, 6), (6, 8)] {
            assert!(arcs.contains(&Arc { i, j }));
        }
    }

    #[test]
    fn statistics_examples() {
        let lam = p("1,7/2,6/3,4/5,8");
        assert_eq!((lam.cr(), lam.ne()), (2, 3));
        let pi = p("1,2,4/3,5");
        assert_eq!((pi.cr(), pi.ne()), (1, 0));
        assert_eq!(p("1/2/3").pair_stats(), (0, 0, 0));
        assert_eq!(SetPartition::empty().pair_stats(), (0, 0, 0));
    }

    #[test]
    fn roles_examples() {
        use VertexRole::*;
        assert_eq!(
            p("1,2,5/3,4").vertex_roles(),
            vec![Opener, Transient, Opener, Closer, Closer]
        );
        assert_eq!(p("1").vertex_roles(), vec![Singleton]);

        let big = p("1,7,10/2,4,6,8/3/5,9/11,12");
        let zeros: Vec<usize> = big
            .vertex_roles()
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, Opener | Singleton))
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(zeros, vec![1, 2, 3, 5, 11]);
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_partitions(3).count(), 5);
        assert_eq!(enumerate_partitions_k(4, 2).count(), 7);
        let zero: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(zero, vec![SetPartition::empty()]);
        let rgs: Vec<_> = enumerate_partitions(3).map(|p| p.rgs()).collect();
        assert_eq!(
            rgs,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn json_rendering() {
        let lam = p("1,2,5/3,4");
        let v = lam.to_json();
        assert_eq!(v.to_string(), r#"{"blocks":[[1,2,5],[3,4]],"n":5}"#);
        let back: SetPartition = serde_json::from_value(v).unwrap();
        assert_eq!(back, lam);
        let bad = serde_json::json!({ "n": 4, "blocks": [[1, 2, 5], [3, 4]] });
        assert!(serde_json::from_value::<SetPartition>(bad).is_err());
    }

    #[test]
    fn empty_partition_round_trip() {
        let e = SetPartition::empty();
        assert_eq!(e.canonical_string(), "");
        assert_eq!(parse_partition("").unwrap(), e);
    }
}
