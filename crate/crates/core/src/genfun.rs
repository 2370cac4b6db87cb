//! Generating functions `S_π(q, p, z) = Σ_l Σ_{λ ∈ T(π, l)} q^cr(λ) p^ne(λ) z^l`.
//!
//! Three independent routes are provided: direct tree enumeration, the
//! `b_{l,r}` recurrence with its weighted-path expansion, and truncated
//! continued fractions.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group_seq::uv_seq;
use crate::partition::{enumerate_partitions, SetPartition};
use crate::poly::BivarPoly;
use crate::scalar::Coefficient;
use crate::series::ZSeries;
use crate::tree;

/// `[r]_{q,p} = q^{r-1} + q^{r-2}p + ... + p^{r-1}`, with `[0] = 0`.
pub fn qp_int<C: Coefficient>(r: usize) -> BivarPoly<C> {
    let r = r as u32;
    BivarPoly::from_terms((0..r).map(|t| ((r - 1 - t, t), C::one())))
}

/// `q^cr(π) p^ne(π)`.
pub fn stat_monomial<C: Coefficient>(pi: &SetPartition) -> BivarPoly<C> {
    let (cr, ne, _) = pi.pair_stats();
    BivarPoly::monomial(C::one(), cr as u32, ne as u32)
}

/// `b_{0,r}` from the covering counts of the block minima:
/// `Σ_{1 < i_1 < ... < i_r <= k} q^{Σu - (r-1)u_1} p^{Σv - (r-1)v_1}`.
///
/// This is relative to `π` itself; multiply by [`stat_monomial`] to get the
/// first row of [`blr_table`].
pub fn b0r<C: Coefficient>(pi: &SetPartition, r: usize) -> Result<BivarPoly<C>> {
    let (u, v) = uv_seq(pi)?;
    let exponent = |xs: &[usize], pick: &[usize]| -> u32 {
        let sum: i64 = pick.iter().map(|&i| xs[i] as i64).sum();
        let e = sum - (r as i64 - 1) * xs[0] as i64;
        u32::try_from(e).expect("block minima exponents are nonnegative")
    };
    Ok(BivarPoly::from_terms((1..u.len()).combinations(r).map(|pick| {
        ((exponent(&u, &pick), exponent(&v, &pick)), C::one())
    })))
}

/// Rows `b_{l,·}` for `0 <= l <= L`; row `l` holds `r = 0 .. k + l - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlrTable<C: Coefficient> {
    rows: Vec<Vec<BivarPoly<C>>>,
}

impl<C: Coefficient> BlrTable<C> {
    /// `b_{l,r}`, zero outside the stored range.
    pub fn get(&self, l: usize, r: usize) -> BivarPoly<C> {
        self.rows
            .get(l)
            .and_then(|row| row.get(r))
            .cloned()
            .unwrap_or_else(BivarPoly::zero)
    }

    pub fn row(&self, l: usize) -> &[BivarPoly<C>] {
        &self.rows[l]
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// The column `b_{·,0}` as a series; this is `S_π` up to the table depth.
    pub fn series(&self) -> ZSeries<C> {
        ZSeries::from_coeffs(self.depth(), self.rows.iter().map(|row| row[0].clone()))
    }
}

/// `b_{l,r}` via `b_{l,r} = b_{l-1,r-1} + (1 + [r+1]) b_{l-1,r} + [r+1] b_{l-1,r+1}`.
///
/// Row 0 carries the factor `q^cr(π) p^ne(π)`, so `b_{l,0}` is the full
/// level sum over `T(π, l)`.
pub fn blr_table<C: Coefficient>(pi: &SetPartition, depth: usize) -> Result<BlrTable<C>> {
    let k = pi.k();
    let offset = stat_monomial::<C>(pi);
    let first = (0..k)
        .map(|r| Ok(&b0r::<C>(pi, r)? * &offset))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = vec![first];
    for l in 1..=depth {
        let prev = &rows[l - 1];
        let at = |r: usize| prev.get(r).cloned().unwrap_or_else(BivarPoly::zero);
        let row = (0..k + l)
            .map(|r| {
                let bracket = qp_int::<C>(r + 1);
                let stay = &bracket + &BivarPoly::one();
                let mut out = &stay * &at(r);
                out += &(&bracket * &at(r + 1));
                if r > 0 {
                    out += &at(r - 1);
                }
                out
            })
            .collect();
        rows.push(row);
    }
    Ok(BlrTable { rows })
}

/// `c_{l,s}` for `0 <= s <= l <= L`: weighted paths from height 0 to height
/// `s` in `l` steps, never below the axis. A level step at height `r` weighs
/// `1 + [r+1]`, a rise from `r` weighs `[r+1]` and a fall weighs 1, matching
/// the transfer structure of the `b_{l,r}` recurrence.
pub fn c_path_table<C: Coefficient>(depth: usize) -> Vec<Vec<BivarPoly<C>>> {
    let mut rows = vec![vec![BivarPoly::one()]];
    for l in 1..=depth {
        let prev = &rows[l - 1];
        let mut row = vec![BivarPoly::zero(); l + 1];
        for (r, w) in prev.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let bracket = qp_int::<C>(r + 1);
            row[r] += &(w * &(&bracket + &BivarPoly::one()));
            row[r + 1] += &(w * &bracket);
            if r > 0 {
                row[r - 1] += w;
            }
        }
        rows.push(row);
    }
    rows
}

/// A single `c_{l,s}`; zero when `s > l`.
pub fn c_path_weight<C: Coefficient>(l: usize, s: usize) -> BivarPoly<C> {
    if s > l {
        return BivarPoly::zero();
    }
    c_path_table::<C>(l).swap_remove(l).swap_remove(s)
}

/// `S_π = q^cr p^ne Σ_s b_{0,s} K_s(z)` with `K_s = Σ_l c_{l,s} z^l`.
pub fn s_pi_theorem<C: Coefficient>(pi: &SetPartition, order: usize) -> Result<ZSeries<C>> {
    let c = c_path_table::<C>(order);
    let offset = stat_monomial::<C>(pi);
    let mut out = ZSeries::zero(order);
    for s in 0..pi.k() {
        let b = &b0r::<C>(pi, s)? * &offset;
        if b.is_zero() {
            continue;
        }
        let k_s = ZSeries::from_coeffs(
            order,
            c.iter()
                .map(|row| row.get(s).cloned().unwrap_or_else(BivarPoly::zero)),
        );
        out = &out + &k_s.scale(&b);
    }
    Ok(out)
}

/// `S_π` by summing `q^cr p^ne` over each tree level.
pub fn s_pi_brute<C: Coefficient>(pi: &SetPartition, order: usize) -> ZSeries<C> {
    let mut level = vec![pi.clone()];
    let mut coeffs = Vec::with_capacity(order + 1);
    for l in 0..=order {
        if l > 0 {
            level = level.iter().flat_map(tree::children).collect();
        }
        let mut acc = BivarPoly::zero();
        for mu in &level {
            acc += &stat_monomial::<C>(mu);
        }
        coeffs.push(acc);
    }
    ZSeries::from_coeffs(order, coeffs)
}

/// Weights of the J-fraction attached to the tree: `c_h = [h+1] + 1` and
/// `a_h = [h+1]`.
fn tree_c<C: Coefficient>(h: usize) -> BivarPoly<C> {
    &qp_int::<C>(h + 1) + &BivarPoly::one()
}

fn tree_a<C: Coefficient>(h: usize) -> BivarPoly<C> {
    qp_int::<C>(h + 1)
}

/// `J^{/h/}(z)` for the tree weights.
fn j_tail<C: Coefficient>(h: usize, order: usize) -> Result<ZSeries<C>> {
    cf_truncate(|i| tree_c::<C>(h + i), |i| tree_a::<C>(h + i), order)
}

/// `K_s(z) = J^{/0/} a_0 z J^{/1/} a_1 z ... J^{/s/}` as a product of
/// truncated fractions.
pub fn k_s_series<C: Coefficient>(s: usize, order: usize) -> Result<ZSeries<C>> {
    let mut out = j_tail::<C>(0, order)?;
    for h in 1..=s {
        out = &out.shift().scale(&tree_a::<C>(h - 1)) * &j_tail::<C>(h, order)?;
    }
    Ok(out)
}

/// `S_π` through the continued-fraction form of `K_s`.
pub fn s_pi_fraction<C: Coefficient>(pi: &SetPartition, order: usize) -> Result<ZSeries<C>> {
    let offset = stat_monomial::<C>(pi);
    let mut out = ZSeries::zero(order);
    for s in 0..pi.k() {
        let b = &b0r::<C>(pi, s)? * &offset;
        if !b.is_zero() {
            out = &out + &k_s_series::<C>(s, order)?.scale(&b);
        }
    }
    Ok(out)
}

/// `1 / (1 - c_0 z - a_0 z^2 / (1 - c_1 z - a_1 z^2 / ...))` evaluated bottom
/// up from depth `order + 1` with tail 1.
pub fn cf_truncate<C, FC, FA>(c: FC, a: FA, order: usize) -> Result<ZSeries<C>>
where
    C: Coefficient,
    FC: Fn(usize) -> BivarPoly<C>,
    FA: Fn(usize) -> BivarPoly<C>,
{
    let one = ZSeries::one(order);
    let z = ZSeries::<C>::z(order);
    let z2 = z.shift();
    let mut tail = one.clone();
    for h in (0..=order + 1).rev() {
        let denom = &(&one - &z.scale(&c(h))) - &(&z2.scale(&a(h)) * &tail);
        tail = denom.reciprocal()?;
    }
    Ok(tail)
}

/// `c_0 / (1 - c_1 z / (1 - c_2 z / ...))` evaluated from depth `order + 1`
/// with tail 1.
pub fn s_fraction<C, F>(c: F, order: usize) -> Result<ZSeries<C>>
where
    C: Coefficient,
    F: Fn(usize) -> BivarPoly<C>,
{
    let one = ZSeries::one(order);
    let z = ZSeries::<C>::z(order);
    let mut tail = one.clone();
    for h in (1..=order + 1).rev() {
        tail = (&one - &(&z.scale(&c(h)) * &tail)).reciprocal()?;
    }
    Ok(tail.scale(&c(0)))
}

/// Both sides of the contraction identity
/// `c_0 / (1 - c_1 z / (1 - ...)) = c_0 + c_0 c_1 z / (1 - (c_1 + c_2) z - c_2 c_3 z^2 / ...)`.
/// Weights past the end of `weights` are zero.
pub fn cf_contract<C: Coefficient>(
    weights: &[BivarPoly<C>],
    order: usize,
) -> Result<(ZSeries<C>, ZSeries<C>)> {
    let w = |i: usize| weights.get(i).cloned().unwrap_or_else(BivarPoly::zero);
    let lhs = s_fraction(w, order)?;
    let j = cf_truncate(|h| &w(2 * h + 1) + &w(2 * h + 2), |h| &w(2 * h + 2) * &w(2 * h + 3), order)?;
    let rhs = &ZSeries::constant(w(0), order) + &j.shift().scale(&(&w(0) * &w(1)));
    Ok((lhs, rhs))
}

/// S-fraction weights `1; 1, [1], 1, [2], 1, [3], ...` whose even contraction
/// is [`fraction_allpartitions_v2`] and whose odd contraction is
/// [`fraction_allpartitions_v1`].
pub fn allpartitions_s_weight<C: Coefficient>(i: usize) -> BivarPoly<C> {
    if i == 0 || i % 2 == 1 {
        BivarPoly::one()
    } else {
        qp_int(i / 2)
    }
}

/// `1 + z / (1 - ([1] + 1) z - [1] z^2 / (1 - ([2] + 1) z - [2] z^2 / ...))`.
pub fn fraction_allpartitions_v2<C: Coefficient>(order: usize) -> Result<ZSeries<C>> {
    let j = cf_truncate(tree_c::<C>, tree_a::<C>, order)?;
    Ok(&ZSeries::one(order) + &j.shift())
}

/// `1 / (1 - z - z^2 / (1 - ([1] + 1) z - [2] z^2 / (1 - ([2] + 1) z - ...)))`.
pub fn fraction_allpartitions_v1<C: Coefficient>(order: usize) -> Result<ZSeries<C>> {
    cf_truncate(
        |h| {
            if h == 0 {
                BivarPoly::one()
            } else {
                &qp_int::<C>(h) + &BivarPoly::one()
            }
        },
        |h| qp_int::<C>(h + 1),
        order,
    )
}

/// `Σ_{n <= order} Σ_{λ ∈ Π_n} q^cr p^ne z^n` by enumeration.
pub fn partitions_series_brute<C: Coefficient>(order: usize) -> ZSeries<C> {
    ZSeries::from_coeffs(
        order,
        (0..=order).map(|n| {
            let mut acc = BivarPoly::zero();
            for lam in enumerate_partitions(n) {
                acc += &stat_monomial::<C>(&lam);
            }
            acc
        }),
    )
}

/// `S_π` by the recurrence, the path expansion and the fractions; fails
/// with [`Error::RouteMismatch`] unless all agree with enumeration.
pub fn s_pi_checked<C: Coefficient>(pi: &SetPartition, order: usize) -> Result<ZSeries<C>> {
    let brute = s_pi_brute::<C>(pi, order);
    let routes = [
        ("recurrence", blr_table::<C>(pi, order)?.series()),
        ("path expansion", s_pi_theorem::<C>(pi, order)?),
        ("continued fraction", s_pi_fraction::<C>(pi, order)?),
    ];
    for (name, series) in routes {
        if series != brute {
            return Err(Error::RouteMismatch(format!(
                "{name} route for S of {pi} at order {order}"
            )));
        }
    }
    Ok(brute)
}
