//! Restricted bicolored Motzkin paths, Charlier diagrams and the two
//! bijections from Charlier diagrams onto set partitions.
//!
//! Both bijections read the path as a vertex type (opener, closer, singleton,
//! transient) and then draw arcs left to right: a closer or transient `i` is
//! joined to the `ξ_i`-th *available* opener or transient on its left. A
//! vertex is available until it has been used as the left end of an arc.
//! [`phi_r`] ranks available vertices right to left, [`phi_l`] left to
//! right. Under `phi_r` each `ξ_i - 1` counts crossings, under `phi_l`
//! nestings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{SetPartition, VertexRole};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(1, 1)`
    NE,
    /// `(1, -1)`
    SE,
    /// Red `(1, 0)`
    RE,
    /// Blue `(1, 0)`
    BE,
}

impl Step {
    pub fn rise(self) -> i64 {
        match self {
            Step::NE => 1,
            Step::SE => -1,
            Step::RE | Step::BE => 0,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::NE => 'N',
            Step::SE => 'S',
            Step::RE => 'R',
            Step::BE => 'B',
        }
    }

    pub fn from_char(c: char) -> Result<Step> {
        match c {
            'N' => Ok(Step::NE),
            'S' => Ok(Step::SE),
            'R' => Ok(Step::RE),
            'B' => Ok(Step::BE),
            other => Err(Error::parse(other.to_string(), "expected one of N, S, R, B")),
        }
    }

    /// Semi-type bit: 0 for NE/RE, 1 for SE/BE.
    pub fn semi_type_bit(self) -> u8 {
        match self {
            Step::NE | Step::RE => 0,
            Step::SE | Step::BE => 1,
        }
    }

    fn of_role(role: VertexRole) -> Step {
        match role {
            VertexRole::Opener => Step::NE,
            VertexRole::Closer => Step::SE,
            VertexRole::Singleton => Step::RE,
            VertexRole::Transient => Step::BE,
        }
    }
}

/// Heights (y-coordinate of the left endpoint) of each step.
pub fn step_heights(steps: &[Step]) -> Vec<i64> {
    steps
        .iter()
        .scan(0i64, |y, s| {
            let h = *y;
            *y += s.rise();
            Some(h)
        })
        .collect()
}

/// A Motzkin path with red/blue level steps, no blue step at height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RBMPath {
    steps: Vec<Step>,
}

impl RBMPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut y = 0i64;
        for (idx, s) in steps.iter().enumerate() {
            if *s == Step::BE && y == 0 {
                return Err(Error::InvalidPath(format!(
                    "blue level step at height 0 (step {})",
                    idx + 1
                )));
            }
            y += s.rise();
            if y < 0 {
                return Err(Error::InvalidPath(format!(
                    "path goes below the axis at step {}",
                    idx + 1
                )));
            }
        }
        if y != 0 {
            return Err(Error::InvalidPath(format!("path ends at height {y}")));
        }
        Ok(RBMPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<usize> {
        step_heights(&self.steps)
            .into_iter()
            .map(|h| h as usize)
            .collect()
    }
}

impl fmt::Display for RBMPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl FromStr for RBMPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s.chars().map(Step::from_char).collect::<Result<Vec<_>>>()?;
        RBMPath::new(steps)
    }
}

impl TryFrom<String> for RBMPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RBMPath> for String {
    fn from(p: RBMPath) -> String {
        p.to_string()
    }
}

/// A path together with choice indices `ξ`: `ξ_i = 1` on NE/RE steps and
/// `1 <= ξ_i <= h_i` on SE/BE steps of height `h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct CharlierDiagram {
    path: RBMPath,
    xi: Vec<usize>,
}

#[derive(Deserialize)]
struct RawDiagram {
    path: RBMPath,
    xi: Vec<usize>,
}

impl TryFrom<RawDiagram> for CharlierDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        CharlierDiagram::new(raw.path, raw.xi)
    }
}

impl CharlierDiagram {
    pub fn new(path: RBMPath, xi: Vec<usize>) -> Result<Self> {
        if xi.len() != path.len() {
            return Err(Error::InvalidDiagram(format!(
                "path has {} steps but xi has {} entries",
                path.len(),
                xi.len()
            )));
        }
        for (idx, ((s, h), &x)) in path.steps.iter().zip(path.heights()).zip(&xi).enumerate() {
            let ok = match s {
                Step::NE | Step::RE => x == 1,
                Step::SE | Step::BE => 1 <= x && x <= h,
            };
            if !ok {
                return Err(Error::InvalidDiagram(format!(
                    "xi_{} = {x} not allowed on a {s:?} step of height {h}",
                    idx + 1
                )));
            }
        }
        Ok(CharlierDiagram { path, xi })
    }

    pub fn path(&self) -> &RBMPath {
        &self.path
    }

    pub fn xi(&self) -> &[usize] {
        &self.xi
    }

    /// `Σ (ξ_i - 1)`.
    pub fn weight(&self) -> usize {
        self.xi.iter().map(|x| x - 1).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "path": self.path.to_string(), "xi": self.xi })
    }
}

/// The path recording the role of every vertex.
pub fn shape(lam: &SetPartition) -> RBMPath {
    let steps = lam.vertex_roles().into_iter().map(Step::of_role).collect();
    RBMPath::new(steps).expect("role paths are restricted Motzkin paths")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ranking {
    RightToLeft,
    LeftToRight,
}

fn pick(avail: &[usize], xi: usize, ranking: Ranking) -> usize {
    match ranking {
        Ranking::RightToLeft => avail.len() - xi,
        Ranking::LeftToRight => xi - 1,
    }
}

fn phi(d: &CharlierDiagram, ranking: Ranking) -> SetPartition {
    let n = d.path.len();
    let mut block_of = vec![usize::MAX; n + 1];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // available openers/transients, increasing
    let mut avail: Vec<usize> = Vec::new();
    for (idx, (&s, &x)) in d.path.steps.iter().zip(&d.xi).enumerate() {
        let v = idx + 1;
        match s {
            Step::NE | Step::RE => {
                block_of[v] = blocks.len();
                blocks.push(vec![v]);
                if s == Step::NE {
                    avail.push(v);
                }
            }
            Step::SE | Step::BE => {
                let partner = avail.remove(pick(&avail, x, ranking));
                let b = block_of[partner];
                block_of[v] = b;
                blocks[b].push(v);
                if s == Step::BE {
                    avail.push(v);
                }
            }
        }
    }
    SetPartition::from_blocks(blocks).expect("valid diagrams give valid partitions")
}

fn phi_inv(lam: &SetPartition, ranking: Ranking) -> CharlierDiagram {
    let path = shape(lam);
    let prev = lam.predecessors();
    let mut avail: Vec<usize> = Vec::new();
    let mut xi = Vec::with_capacity(lam.n());
    for (idx, &s) in path.steps.iter().enumerate() {
        let v = idx + 1;
        match s {
            Step::NE => {
                xi.push(1);
                avail.push(v);
            }
            Step::RE => xi.push(1),
            Step::SE | Step::BE => {
                let partner = prev[idx].expect("closers and transients have a predecessor");
                let pos = avail
                    .iter()
                    .position(|&a| a == partner)
                    .expect("predecessor is still available");
                xi.push(match ranking {
                    Ranking::RightToLeft => avail.len() - pos,
                    Ranking::LeftToRight => pos + 1,
                });
                avail.remove(pos);
                if s == Step::BE {
                    avail.push(v);
                }
            }
        }
    }
    CharlierDiagram::new(path, xi).expect("inverse produces a valid diagram")
}

/// Partners ranked right to left; `Σ(ξ_i - 1) = cr`.
pub fn phi_r(d: &CharlierDiagram) -> SetPartition {
    phi(d, Ranking::RightToLeft)
}

/// Partners ranked left to right; `Σ(ξ_i - 1) = ne`.
pub fn phi_l(d: &CharlierDiagram) -> SetPartition {
    phi(d, Ranking::LeftToRight)
}

pub fn phi_r_inv(lam: &SetPartition) -> CharlierDiagram {
    phi_inv(lam, Ranking::RightToLeft)
}

pub fn phi_l_inv(lam: &SetPartition) -> CharlierDiagram {
    phi_inv(lam, Ranking::LeftToRight)
}

/// `(d_0, ..., d_l)`: number of NE and RE steps starting at each height,
/// trailing zeros removed.
pub fn profile(path: &RBMPath) -> Vec<usize> {
    let mut d: Vec<usize> = Vec::new();
    for (s, h) in path.steps.iter().zip(path.heights()) {
        if matches!(s, Step::NE | Step::RE) {
            if d.len() <= h {
                d.resize(h + 1, 0);
            }
            d[h] += 1;
        }
    }
    while d.last() == Some(&0) {
        d.pop();
    }
    d
}

pub fn semi_type(path: &RBMPath) -> Vec<u8> {
    path.steps.iter().map(|s| s.semi_type_bit()).collect()
}

/// Path built backwards from a 0/1 word, see [`path_from_semitype`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemitypePath {
    /// The word starts with 0 and the path is restricted.
    Restricted(RBMPath),
    /// The word starts with 1; the leading ones became blue steps on the axis.
    BlueOnAxis(Vec<Step>),
}

impl SemitypePath {
    pub fn steps(&self) -> &[Step] {
        match self {
            SemitypePath::Restricted(p) => p.steps(),
            SemitypePath::BlueOnAxis(s) => s,
        }
    }

    pub fn into_restricted(self) -> Result<RBMPath> {
        match self {
            SemitypePath::Restricted(p) => Ok(p),
            SemitypePath::BlueOnAxis(_) => Err(Error::InvalidPath(
                "semi-type starts with 1: blue level step at height 0".into(),
            )),
        }
    }
}

/// The path of greatest height with semi-type `eps`, built from the right:
/// a 0 not yet assigned becomes RE; a 1 becomes SE paired with the leftmost
/// unassigned 0 to its left (which becomes NE), or BE if there is none.
pub fn path_from_semitype(eps: &[u8]) -> SemitypePath {
    let n = eps.len();
    let mut steps: Vec<Option<Step>> = vec![None; n];
    for i in (0..n).rev() {
        if eps[i] == 0 {
            if steps[i].is_none() {
                steps[i] = Some(Step::RE);
            }
        } else if let Some(j0) = (0..i).find(|&j| eps[j] == 0 && steps[j].is_none()) {
            steps[i] = Some(Step::SE);
            steps[j0] = Some(Step::NE);
        } else {
            steps[i] = Some(Step::BE);
        }
    }
    let steps: Vec<Step> = steps.into_iter().map(|s| s.expect("every step set")).collect();
    match RBMPath::new(steps.clone()) {
        Ok(p) => SemitypePath::Restricted(p),
        Err(_) => SemitypePath::BlueOnAxis(steps),
    }
}

/// `Σ (h_i - 1)` over the positions with `ε_i = 1`, heights taken in
/// [`path_from_semitype`]`(eps)`.
pub fn ne_of_semitype(eps: &[u8]) -> i64 {
    let built = path_from_semitype(eps);
    step_heights(built.steps())
        .into_iter()
        .zip(eps)
        .filter(|(_, &e)| e == 1)
        .map(|(h, _)| h - 1)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use Step::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    const FIG: &str = "1,7,10/2,4,6,8/3/5,9/11,12";
    const FIG_L: &str = "1,4,6,7,9/2,10/3/5,8/11,12";
    const FIG_EPS: [u8; 12] = [0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1];

    #[test]
    fn shape_of_figure_partition() {
        let path = shape(&p(FIG));
        assert_eq!(semi_type(&path), FIG_EPS.to_vec());
        assert_eq!(profile(&path), vec![2, 1, 2]);
        assert_eq!(shape(&p("1")).steps(), &[RE]);
    }

    #[test]
    fn figure_diagram_gives_both_partitions() {
        let d = phi_r_inv(&p(FIG));
        assert_eq!(phi_r(&d), p(FIG));
        assert_eq!(phi_l(&d), p(FIG_L));
    }

    #[test]
    fn trivial_diagram() {
        let d = CharlierDiagram::new("R".parse().unwrap(), vec![1]).unwrap();
        assert_eq!(phi_r(&d), p("1"));
        assert_eq!(phi_l(&d), p("1"));
    }

    #[test]
    fn path_validation() {
        assert!("NS".parse::<RBMPath>().is_ok());
        assert!("B".parse::<RBMPath>().is_err());
        assert!("NBS".parse::<RBMPath>().is_ok());
        assert!("SN".parse::<RBMPath>().is_err());
        assert!("N".parse::<RBMPath>().is_err());
        assert!("NX".parse::<RBMPath>().is_err());
        let path: RBMPath = "NNSS".parse().unwrap();
        assert!(CharlierDiagram::new(path.clone(), vec![1, 1, 2, 1]).is_ok());
        assert!(CharlierDiagram::new(path.clone(), vec![1, 1, 1, 2]).is_err());
        assert!(CharlierDiagram::new(path.clone(), vec![1, 2, 1, 1]).is_err());
        assert!(CharlierDiagram::new(path, vec![1, 1]).is_err());
    }

    #[test]
    fn diagram_json() {
        let d = phi_r_inv(&p("1,3/2,4"));
        let v = d.to_json();
        assert_eq!(v.to_string(), r#"{"path":"NNSS","xi":[1,1,2,1]}"#);
        let back: CharlierDiagram = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
        let bad = serde_json::json!({ "path": "NNSS", "xi": [1, 1, 3, 1] });
        assert!(serde_json::from_value::<CharlierDiagram>(bad).is_err());
    }

    #[test]
    fn round_trips_and_statistics() {
        for n in 1..=7 {
            for lam in enumerate_partitions(n) {
                let dr = phi_r_inv(&lam);
                let dl = phi_l_inv(&lam);
                assert_eq!(phi_r(&dr), lam);
                assert_eq!(phi_l(&dl), lam);
                assert_eq!(dr.path(), dl.path());
                assert_eq!(dr.weight(), lam.cr());
                assert_eq!(dl.weight(), lam.ne());
            }
        }
    }

    #[test]
    fn semitype_construction_example() {
        let built = path_from_semitype(&FIG_EPS);
        assert_eq!(
            built.steps(),
            &[NE, NE, NE, BE, NE, BE, BE, SE, SE, SE, RE, SE]
        );
        assert!(matches!(built, SemitypePath::Restricted(_)));
        assert_eq!(
            step_heights(built.steps()),
            vec![0, 1, 2, 3, 3, 4, 4, 4, 3, 2, 1, 1]
        );
        assert_eq!(ne_of_semitype(&FIG_EPS), 14);

        assert_eq!(path_from_semitype(&[0]).steps(), &[RE]);
        assert_eq!(ne_of_semitype(&[0]), 0);
    }

    #[test]
    fn leading_one_is_not_restricted() {
        let built = path_from_semitype(&[1, 0, 1]);
        assert!(matches!(built, SemitypePath::BlueOnAxis(_)));
        assert!(built.into_restricted().is_err());
    }
}
