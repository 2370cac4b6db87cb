//! Crossing- and nesting-similarity classes.
//!
//! Two partitions are crossing-similar when `cr` has the same distribution
//! on every `T(·, l, m)` of their subtrees, and likewise for nesting. Both
//! relations reduce to finite keys: `(crset, cr)` for crossings, where
//! `crset` is the multiset of covering counts `u_i`, and `(neseq, ne)` for
//! nestings, where `neseq = (v_1, ..., v_k)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::charlier::{path_from_semitype, phi_r, step_heights, CharlierDiagram, RBMPath, Step};
use crate::error::{Error, Result};
use crate::group_seq::uv_seq;
use crate::partition::{enumerate_partitions_k, SetPartition};
use crate::scalar::{binomial, from_i64, CountInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Cr,
    Ne,
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cr" => Ok(Stat::Cr),
            "ne" => Ok(Stat::Ne),
            other => Err(Error::parse(other, "expected `cr` or `ne`")),
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stat::Cr => "cr",
            Stat::Ne => "ne",
        })
    }
}

/// `crseq(λ) = (u_1, ..., u_k)`.
pub fn crseq(lam: &SetPartition) -> Result<Vec<usize>> {
    Ok(uv_seq(lam)?.0)
}

/// `neseq(λ) = (v_1, ..., v_k)`, nondecreasing.
pub fn neseq(lam: &SetPartition) -> Result<Vec<usize>> {
    Ok(uv_seq(lam)?.1)
}

/// `crset(λ)` as the multiplicity vector `(d_0, ..., d_l)` of the values
/// `0, ..., l` in `crseq(λ)`.
pub fn crset(lam: &SetPartition) -> Result<Vec<usize>> {
    let u = crseq(lam)?;
    let top = u.iter().copied().max().unwrap_or(0);
    let mut d = vec![0; top + 1];
    for x in u {
        d[x] += 1;
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrClassKey {
    pub crset: Vec<usize>,
    pub cr: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NeClassKey {
    pub neseq: Vec<usize>,
    pub ne: usize,
}

pub fn cr_class_key(lam: &SetPartition) -> Result<CrClassKey> {
    Ok(CrClassKey {
        crset: crset(lam)?,
        cr: lam.cr(),
    })
}

pub fn ne_class_key(lam: &SetPartition) -> Result<NeClassKey> {
    Ok(NeClassKey {
        neseq: neseq(lam)?,
        ne: lam.ne(),
    })
}

/// Number of distinct class keys over `Π_{n,k}`.
pub fn count_classes_brute(n: usize, k: usize, which: Stat) -> usize {
    let parts = enumerate_partitions_k(n, k);
    match which {
        Stat::Cr => parts
            .map(|p| cr_class_key(&p).expect("k >= 1"))
            .collect::<BTreeSet<_>>()
            .len(),
        Stat::Ne => parts
            .map(|p| ne_class_key(&p).expect("k >= 1"))
            .collect::<BTreeSet<_>>()
            .len(),
    }
}

/// Largest possible `cr` for a partition in `Π_{n,k}` whose `crset` has
/// `l + 1` distinct values: `(n - k - 1)l - l(l - 1)/2`.
pub fn cr_upper_bound(n: usize, k: usize, l: usize) -> i64 {
    let (n, k, l) = (n as i64, k as i64, l as i64);
    (n - k - 1) * l - l * (l - 1) / 2
}

fn check_nk(n: usize, k: usize) {
    assert!(1 <= k && k <= n, "need 1 <= k <= n, got n = {n}, k = {k}");
}

/// `Σ_{l=0}^{min(n-k, k-1)} C(k-1, l)·[(n-k-1)l - l(l-1)/2 + 1]`.
pub fn count_cr_formula<T: CountInt>(n: usize, k: usize) -> T {
    check_nk(n, k);
    let top = (n - k).min(k - 1);
    (0..=top).fold(T::zero(), |acc, l| {
        acc + binomial::<T>(k as i64 - 1, l as i64) * from_i64::<T>(cr_upper_bound(n, k, l) + 1)
    })
}

/// Closed form `(n-k-1)(k-1)2^{k-2} + 2^{k-1} - (k-1)(k-2)2^{k-4}`, valid
/// for `n >= 2k - 1`; `None` otherwise.
pub fn count_cr_closed_form<T: CountInt>(n: usize, k: usize) -> Option<T> {
    check_nk(n, k);
    if n + 1 < 2 * k {
        return None;
    }
    let (n, k) = (n as i64, k as i64);
    let c = |x: i64| from_i64::<T>(x);
    let two = c(2);
    let pow2 = |e: i64| num_traits::pow(two.clone(), e as usize);
    // scaled by 16 so every power of two is integral
    let scaled = c((n - k - 1) * (k - 1)) * pow2(k + 2) + pow2(k + 3)
        - c((k - 1) * (k - 2)) * pow2(k);
    Some(scaled / c(16))
}

/// `f_{n,k}` by the recurrence `f_{n,1} = 1`,
/// `f_{n,k} = Σ_{r=k-1}^{n-1} f_{r,k-1} + (k-1)C(n-2, k)`.
pub fn count_ne_recurrence<T: CountInt>(n: usize, k: usize) -> T {
    check_nk(n, k);
    ne_recurrence_table::<T>(n)[n][k].clone()
}

/// `table[n][k] = f_{n,k}` for `1 <= k <= n <= n_max`, zero elsewhere.
pub fn ne_recurrence_table<T: CountInt>(n_max: usize) -> Vec<Vec<T>> {
    let mut f = vec![vec![T::zero(); n_max + 1]; n_max + 1];
    for n in 1..=n_max {
        f[n][1] = T::one();
        for k in 2..=n {
            let mut acc: T = binomial::<T>(n as i64 - 2, k as i64) * from_i64::<T>(k as i64 - 1);
            for r in k - 1..n {
                acc = acc + f[r][k - 1].clone();
            }
            f[n][k] = acc;
        }
    }
    f
}

/// `F_n = |Π_n / ∼_ne|`: `F_1 = 1`, `F_2 = 2`, `F_n = 2^{n-5}(n² - 5n + 22)`.
pub fn count_ne_total<T: CountInt>(n: usize) -> T {
    assert!(n >= 1, "need n >= 1");
    match n {
        1 => T::one(),
        2 => from_i64(2),
        _ => {
            let n = n as i64;
            let poly = from_i64::<T>(n * n - 5 * n + 22);
            let two = from_i64::<T>(2);
            if n >= 5 {
                poly * num_traits::pow(two, (n - 5) as usize)
            } else {
                poly / num_traits::pow(two, (5 - n) as usize)
            }
        }
    }
}

/// 0/1 words of length `n` with exactly `zeros` zeros, in lexicographic
/// order; `restricted` keeps only words starting with 0.
pub fn semitype_words(n: usize, zeros: usize, restricted: bool) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn rec(n: usize, zeros: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let used = word.iter().filter(|&&b| b == 0).count();
        if word.len() == n {
            if used == zeros {
                out.push(word.clone());
            }
            return;
        }
        let left = n - word.len();
        if used < zeros {
            word.push(0);
            rec(n, zeros, word, out);
            word.pop();
        }
        if zeros - used < left {
            word.push(1);
            rec(n, zeros, word, out);
            word.pop();
        }
    }
    rec(n, zeros, &mut word, &mut out);
    if restricted {
        out.retain(|w| w.first() == Some(&0));
    }
    out
}

fn height_sum_over_ones(eps: &[u8]) -> i64 {
    let built = path_from_semitype(eps);
    step_heights(built.steps())
        .into_iter()
        .zip(eps)
        .filter(|(_, &e)| e == 1)
        .map(|(h, _)| h)
        .sum()
}

/// Height bookkeeping behind the nesting recurrence, evaluated by summing
/// over 0/1 words directly and through the recurrences between them.
#[derive(Debug, Clone)]
pub struct NeBookkeeping {
    n_max: usize,
    /// `g[n][k] = Σ_{ε ∈ S⁰_{n,k}} Σ_{ε_i = 1} h_i`.
    pub g: Vec<Vec<i64>>,
    /// `g_star[n][k]`: the same sum over all words with `k` zeros.
    pub g_star: Vec<Vec<i64>>,
    /// `Σ_{ε ∈ S⁰_{n,k}} (ne(ε) + 1)`.
    pub f_words: Vec<Vec<i64>>,
}

impl NeBookkeeping {
    pub fn from_words(n_max: usize) -> Self {
        let mut g = vec![vec![0; n_max + 1]; n_max + 1];
        let mut g_star = vec![vec![0; n_max + 1]; n_max + 1];
        let mut f_words = vec![vec![0; n_max + 1]; n_max + 1];
        for n in 0..=n_max {
            for k in 0..=n {
                for eps in semitype_words(n, k, false) {
                    let hs = height_sum_over_ones(&eps);
                    g_star[n][k] += hs;
                    if eps.first() == Some(&0) {
                        g[n][k] += hs;
                        let ones = (n - k) as i64;
                        f_words[n][k] += hs - ones + 1;
                    }
                }
            }
        }
        NeBookkeeping {
            n_max,
            g,
            g_star,
            f_words,
        }
    }

    fn at(table: &[Vec<i64>], n: i64, k: i64) -> i64 {
        if n < 0 || k < 0 {
            return 0;
        }
        table
            .get(n as usize)
            .and_then(|row| row.get(k as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Checks, for `2 <= k <= n <= n_max`:
    /// `g_{n,k} = g_{n-1,k-1} + g*_{n-2,k-1} + (n-k)C(n-2,k-1)`,
    /// `g*_{n,k} = Σ_{r=k}^n g_{r,k}`,
    /// `g_{n,k} = Σ_{r=k-1}^{n-1} g_{r,k-1} + (n-k)C(n-2,k-1)`,
    /// `f_{n,k} = g_{n,k} - (n-k-1)C(n-1,k-1)`, against the recurrence for `f`.
    pub fn check(&self) -> Result<()> {
        let f_rec = ne_recurrence_table::<i64>(self.n_max);
        let mismatch = |what: &str, n: usize, k: usize, lhs: i64, rhs: i64| {
            Err(Error::RouteMismatch(format!(
                "{what} at n = {n}, k = {k}: {lhs} != {rhs}"
            )))
        };
        for n in 1..=self.n_max {
            for k in 1..=n {
                let (ni, ki) = (n as i64, k as i64);
                let g_star_sum: i64 = (k..=n).map(|r| self.g[r][k]).sum();
                if self.g_star[n][k] != g_star_sum {
                    return mismatch("g* sum", n, k, self.g_star[n][k], g_star_sum);
                }
                let via_g = self.g[n][k] - (ni - ki - 1) * binomial::<i64>(ni - 1, ki - 1);
                if via_g != self.f_words[n][k] || via_g != f_rec[n][k] {
                    return mismatch("f from g", n, k, via_g, f_rec[n][k]);
                }
                if k < 2 {
                    continue;
                }
                let extra = (ni - ki) * binomial::<i64>(ni - 2, ki - 1);
                let g1 = Self::at(&self.g, ni - 1, ki - 1) + Self::at(&self.g_star, ni - 2, ki - 1) + extra;
                if self.g[n][k] != g1 {
                    return mismatch("g first recurrence", n, k, self.g[n][k], g1);
                }
                let grec: i64 = (k - 1..n).map(|r| self.g[r][k - 1]).sum::<i64>() + extra;
                if self.g[n][k] != grec {
                    return mismatch("g summed recurrence", n, k, self.g[n][k], grec);
                }
            }
        }
        Ok(())
    }
}

/// A partition in `Π_{n,k}` with `crset = {0^{d_0}, ..., l^{d_l}}` and
/// exactly `c` crossings, built from an explicit Charlier diagram.
pub fn witness_cr(n: usize, k: usize, composition: &[usize], c: usize) -> Result<SetPartition> {
    if k == 0 || k > n {
        return Err(Error::Infeasible(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if composition.is_empty()
        || composition.contains(&0)
        || composition.iter().sum::<usize>() != k
    {
        return Err(Error::Infeasible(format!(
            "{composition:?} is not a composition of {k}"
        )));
    }
    let l = composition.len() - 1;
    if l > n - k {
        return Err(Error::Infeasible(format!(
            "{} parts exceed n - k + 1 = {}",
            l + 1,
            n - k + 1
        )));
    }
    let bound = cr_upper_bound(n, k, l);
    if c as i64 > bound {
        return Err(Error::Infeasible(format!(
            "c = {c} exceeds the bound {bound} for n = {n}, k = {k}, l = {l}"
        )));
    }

    let mut steps = Vec::with_capacity(n);
    let last_part = if l < n - k { l + 1 } else { l };
    for &d in &composition[..last_part] {
        steps.extend(std::iter::repeat(Step::RE).take(d - 1));
        steps.push(Step::NE);
    }
    if l < n - k {
        steps.extend(std::iter::repeat(Step::BE).take(n - k - l - 1));
        steps.extend(std::iter::repeat(Step::SE).take(l + 1));
    } else {
        steps.extend(std::iter::repeat(Step::RE).take(composition[l]));
        steps.extend(std::iter::repeat(Step::SE).take(l));
    }
    let path = RBMPath::new(steps)?;

    // fill ξ greedily up to each step's height until c is used up
    let mut left = c;
    let xi: Vec<usize> = path
        .steps()
        .iter()
        .zip(path.heights())
        .map(|(s, h)| match s {
            Step::SE | Step::BE => {
                let extra = left.min(h - 1);
                left -= extra;
                1 + extra
            }
            _ => 1,
        })
        .collect();
    debug_assert_eq!(left, 0);
    Ok(phi_r(&CharlierDiagram::new(path, xi)?))
}

/// Every `(crset, cr)` pair realisable in `Π_{n,k}`: compositions of `k`
/// into at most `n - k + 1` parts with `cr` up to the matching bound.
pub fn feasible_cr_keys(n: usize, k: usize) -> Vec<CrClassKey> {
    let mut out = Vec::new();
    for parts in 1..=k.min(n - k + 1) {
        for comp in compositions(k, parts) {
            let bound = cr_upper_bound(n, k, parts - 1);
            for c in 0..=bound.max(0) as usize {
                out.push(CrClassKey {
                    crset: comp.clone(),
                    cr: c,
                });
            }
        }
    }
    out
}

/// Compositions of `total` into exactly `parts` positive parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Distinct class keys over `Π_{n,k}` with the partitions in each class.
pub fn cr_classes(n: usize, k: usize) -> BTreeMap<CrClassKey, Vec<SetPartition>> {
    let mut classes: BTreeMap<CrClassKey, Vec<SetPartition>> = BTreeMap::new();
    for p in enumerate_partitions_k(n, k) {
        classes.entry(cr_class_key(&p).expect("k >= 1")).or_default().push(p);
    }
    classes
}

pub fn ne_classes(n: usize, k: usize) -> BTreeMap<NeClassKey, Vec<SetPartition>> {
    let mut classes: BTreeMap<NeClassKey, Vec<SetPartition>> = BTreeMap::new();
    for p in enumerate_partitions_k(n, k) {
        classes.entry(ne_class_key(&p).expect("k >= 1")).or_default().push(p);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlier::{profile, semi_type, shape};
    use crate::partition::enumerate_partitions;
    use num_bigint::BigInt;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn sequence_examples() {
        let lam = p("1,2,5/3,4");
        assert_eq!(crseq(&lam).unwrap(), vec![0, 1]);
        assert_eq!(neseq(&lam).unwrap(), vec![0, 1]);
        assert_eq!(crset(&lam).unwrap(), vec![1, 1]);
        assert_eq!(crseq(&p("1")).unwrap(), vec![0]);
        assert_eq!(neseq(&p("1")).unwrap(), vec![0]);
    }

    #[test]
    fn keys_agree_with_path_data() {
        for n in 1..=7 {
            for lam in enumerate_partitions(n) {
                let path = shape(&lam);
                assert_eq!(crset(&lam).unwrap(), profile(&path));
                let v = neseq(&lam).unwrap();
                assert!(v.windows(2).all(|w| w[0] <= w[1]));
                let zeros: Vec<usize> = semi_type(&path)
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e == 0)
                    .map(|(i, _)| i + 1)
                    .collect();
                let expected: Vec<usize> = v.iter().enumerate().map(|(i, vi)| vi + i + 1).collect();
                assert_eq!(zeros, expected);
            }
        }
    }

    #[test]
    fn brute_examples() {
        assert_eq!(count_classes_brute(6, 3, Stat::Cr), 11);
        assert_eq!(count_classes_brute(6, 3, Stat::Ne), 22);
        for n in 1..=7 {
            assert_eq!(count_classes_brute(n, 1, Stat::Cr), 1);
            assert_eq!(count_classes_brute(n, 1, Stat::Ne), 1);
        }
    }

    #[test]
    fn cr_formula_examples() {
        assert_eq!(count_cr_formula::<i64>(5, 2), 4);
        assert_eq!(count_cr_formula::<i64>(6, 3), 11);
        assert_eq!(count_cr_formula::<i64>(4, 4), 1);
        assert_eq!(count_cr_formula::<i64>(6, 4), 13);
        assert_eq!(count_cr_formula::<BigInt>(6, 3), BigInt::from(11));
    }

    #[test]
    fn closed_form_matches_sum() {
        for k in 1..=12 {
            for n in k..=30 {
                match count_cr_closed_form::<i64>(n, k) {
                    Some(v) => assert_eq!(v, count_cr_formula::<i64>(n, k), "n={n} k={k}"),
                    None => assert!(n < 2 * k - 1),
                }
            }
        }
    }

    #[test]
    fn ne_recurrence_examples() {
        assert_eq!(count_ne_recurrence::<i64>(6, 3), 22);
        assert_eq!(count_ne_recurrence::<i64>(5, 2), 7);
        for n in 1..=10 {
            assert_eq!(count_ne_recurrence::<i64>(n, n), 1);
        }
    }

    #[test]
    fn ne_total_examples() {
        assert_eq!(count_ne_total::<i64>(6), 56);
        assert_eq!(count_ne_total::<i64>(3), 4);
        assert_eq!(count_ne_total::<i64>(2), 2);
        assert_eq!(count_ne_total::<i64>(1), 1);
        for n in 1..=14 {
            let sum: i64 = (1..=n).map(|k| count_ne_recurrence::<i64>(n, k)).sum();
            assert_eq!(count_ne_total::<i64>(n), sum);
        }
    }

    #[test]
    fn bookkeeping_identities() {
        NeBookkeeping::from_words(10).check().unwrap();
    }

    #[test]
    fn semitype_word_counts() {
        assert_eq!(semitype_words(5, 2, false).len(), 10);
        assert_eq!(semitype_words(5, 2, true).len(), 4);
        assert!(semitype_words(0, 0, false) == vec![Vec::<u8>::new()]);
    }

    #[test]
    fn witness_examples() {
        let w = witness_cr(6, 3, &[3], 0).unwrap();
        assert_eq!((w.n(), w.k(), w.cr()), (6, 3, 0));
        assert_eq!(crset(&w).unwrap(), vec![3]);

        let w = witness_cr(8, 3, &[1, 1, 1], 5).unwrap();
        assert_eq!(cr_class_key(&w).unwrap(), CrClassKey { crset: vec![1, 1, 1], cr: 5 });

        let bound = cr_upper_bound(8, 3, 2) as usize;
        assert!(witness_cr(8, 3, &[1, 1, 1], bound).is_ok());
        assert!(matches!(
            witness_cr(8, 3, &[1, 1, 1], bound + 1),
            Err(Error::Infeasible(_))
        ));
        assert!(witness_cr(4, 3, &[1, 1, 1], 0).is_err());
        assert!(witness_cr(6, 3, &[2, 2], 0).is_err());
        assert!(witness_cr(6, 3, &[3, 0], 0).is_err());
    }

    #[test]
    fn compositions_count() {
        for total in 1..=8 {
            for parts in 1..=total {
                assert_eq!(
                    compositions(total, parts).len() as i64,
                    binomial::<i64>(total as i64 - 1, parts as i64 - 1)
                );
            }
        }
    }

    #[test]
    fn stat_parse() {
        assert_eq!("cr".parse::<Stat>().unwrap(), Stat::Cr);
        assert!("al".parse::<Stat>().is_err());
    }
}
