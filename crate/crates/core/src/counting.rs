//! Exact counting for weighted games without coalition enumeration.
//!
//! The engine is a size-by-weight dynamic program: `counts[s][w]` holds the
//! number of player subsets of size `s` and total weight `w`, with the
//! weight axis clamped at a cap so that only "reached the cap" survives
//! above it. Per-player counts are obtained by undoing one player's
//! insertion (an exact deconvolution), never by rebuilding from scratch.
//! Counters run in u128 with checked arithmetic and fall back to arbitrary
//! precision automatically on overflow.

use crate::error::{Error, Result};
use crate::game::LeastSizeSummary;
use crate::indices::{Backend, IndexKind, PowerVector};
use crate::partition::Partition;
use itertools::Itertools;
use num::bigint::BigInt;
use num::{BigRational, BigUint, One, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// Budgets for the counting backend.
#[derive(Clone, Debug)]
pub struct CountingConfig {
    /// Upper bound on the bytes a single size-by-weight table may take.
    pub memory_budget_bytes: u128,
    /// Upper bound on the number of union subsets examined when listing the
    /// least-size winning coalitions of the quotient game.
    pub quotient_budget: u128,
}

impl Default for CountingConfig {
    fn default() -> Self {
        CountingConfig {
            memory_budget_bytes: 2 << 30,
            quotient_budget: 5_000_000,
        }
    }
}

/// Least-size counts of a weighted game in arbitrary precision:
/// the least winning size `c`, the number `p` of winning coalitions of that
/// size, and for each player how many of them the player belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSummary {
    pub c: usize,
    pub p: BigUint,
    pub per_player: Vec<BigUint>,
}

impl CountSummary {
    /// Narrows to the fixed-width summary when every count fits.
    pub fn to_least_size_summary(&self) -> Option<LeastSizeSummary> {
        let p = u64::try_from(&self.p).ok()?;
        let per_player = self
            .per_player
            .iter()
            .map(u64::try_from)
            .collect::<std::result::Result<Vec<u64>, _>>()
            .ok()?;
        Some(LeastSizeSummary {
            c: self.c,
            p,
            per_player,
        })
    }
}

/// The least winning size: the smallest `s` such that the `s` heaviest
/// players reach the quota (the heaviest subset of each size is the
/// descending prefix, so the greedy scan is exact).
pub fn min_winning_size(quota: u64, weights: &[u64]) -> Result<usize> {
    let total = checked_total(weights)?;
    if quota == 0 {
        return Err(Error::domain("quota must be positive"));
    }
    if quota > total {
        return Err(Error::domain(format!(
            "quota {quota} exceeds total weight {total}"
        )));
    }
    let mut sorted: Vec<u64> = weights.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = 0u64;
    for (idx, w) in sorted.iter().enumerate() {
        acc += w;
        if acc >= quota {
            return Ok(idx + 1);
        }
    }
    unreachable!("quota <= total guarantees the full prefix reaches it")
}

/// Exact least-size counts for `[quota; weights]`.
///
/// Runs the dynamic program on whichever side of the quota has the smaller
/// size-times-weight table: directly on winning weight when the quota is
/// low, or on complement subsets when the quota is close to the total.
pub fn count_least_size(
    quota: u64,
    weights: &[u64],
    config: &CountingConfig,
) -> Result<CountSummary> {
    let c = min_winning_size(quota, weights)?;
    let summary = match run_counts::<u128>(quota, weights, c, config) {
        Ok(s) => s,
        Err(RunError::Overflow) => {
            run_counts::<BigUint>(quota, weights, c, config).map_err(RunError::into_error)?
        }
        Err(e) => return Err(e.into_error()),
    };
    let total_memberships: BigUint = summary.per_player.iter().sum();
    if total_memberships != &summary.p * BigUint::from(summary.c) {
        return Err(Error::internal(
            "per-player least-size memberships do not add up to p * c",
        ));
    }
    Ok(summary)
}

/// The Felsenthal index of a weighted game, via exact counting.
pub fn felsenthal_weighted(
    quota: u64,
    weights: &[u64],
    config: &CountingConfig,
) -> Result<PowerVector> {
    let summary = count_least_size(quota, weights, config)?;
    Ok(PowerVector::new(
        felsenthal_values_from_counts(&summary),
        IndexKind::Felsenthal,
        Backend::WeightedCounting,
    ))
}

fn felsenthal_values_from_counts(summary: &CountSummary) -> Vec<BigRational> {
    let denom = BigInt::from(&summary.p * BigUint::from(summary.c));
    summary
        .per_player
        .iter()
        .map(|count| BigRational::new(BigInt::from(count.clone()), denom.clone()))
        .collect()
}

/// The Felsenthal-Owen index of a weighted game with unions, via exact
/// counting: the quotient game is the weighted game of pooled block weights
/// at the same quota, its least-size winners are listed by bounded search,
/// and each internal game is the weighted game of one block at the reduced
/// quota (the quota minus what the other blocks of `R` bring).
pub fn felsenthal_owen_weighted(
    quota: u64,
    weights: &[u64],
    partition: &Partition,
    config: &CountingConfig,
) -> Result<PowerVector> {
    if weights.len() != partition.player_count() {
        return Err(Error::domain(format!(
            "{} weights for a partition of {} players",
            weights.len(),
            partition.player_count()
        )));
    }
    let total = checked_total(weights)?;
    if quota == 0 || quota > total {
        return Err(Error::domain(format!(
            "quota {quota} infeasible for total weight {total}"
        )));
    }
    // under a trivial union structure the index reduces to the plain one
    if partition.is_singletons() || partition.is_grand() {
        let mut v = felsenthal_weighted(quota, weights, config)?;
        v.index_kind = IndexKind::FelsenthalOwen;
        return Ok(v);
    }

    let u = partition.union_count();
    let union_weights: Vec<u64> = partition
        .blocks()
        .iter()
        .map(|b| b.iter().map(|i| weights[i]).sum())
        .collect();
    let c_bar = min_winning_size(quota, &union_weights)?;

    // every least-size quotient winner has exactly c_bar unions, so listing
    // them is a bounded scan over size-c_bar union subsets
    let combos = binomial(u, c_bar);
    if combos > BigUint::from(config.quotient_budget) {
        return Err(Error::capacity(format!(
            "listing least-size quotient winners needs {combos} candidate union subsets \
             (budget {}); coarsen the partition or raise the budget",
            config.quotient_budget
        )));
    }
    let quotient_ls: Vec<Vec<usize>> = (0..u)
        .combinations(c_bar)
        .filter(|r| r.iter().map(|&k| union_weights[k]).sum::<u64>() >= quota)
        .collect();
    let p_bar = quotient_ls.len() as u64;
    if p_bar == 0 {
        return Err(Error::internal(
            "the greedy least winning size found no winning subset of that size",
        ));
    }

    // collect the distinct internal quotas each block is queried at
    let mut queries: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); u];
    for r in &quotient_ls {
        let wr: u64 = r.iter().map(|&k| union_weights[k]).sum();
        for &k in r {
            let others = wr - union_weights[k];
            if others >= quota {
                return Err(Error::internal(
                    "a least-size quotient winner stays winning after dropping a union",
                ));
            }
            queries[k].insert(quota - others);
        }
    }

    // solve each queried block once for all its quotas
    let block_members: Vec<Vec<usize>> = partition.blocks().iter().map(|b| b.iter().collect()).collect();
    let block_answers: Vec<BTreeMap<u64, InternalCounts>> = (0..u)
        .into_par_iter()
        .map(|k| {
            if queries[k].is_empty() {
                return Ok(BTreeMap::new());
            }
            let block_weights: Vec<u64> = block_members[k].iter().map(|&i| weights[i]).collect();
            solve_block(&block_weights, &queries[k], config)
        })
        .collect::<Result<Vec<_>>>()?;

    // combine: each R weighs 1/p_bar, each union in R weighs 1/|R| = 1/c_bar,
    // and inside the block the internal Felsenthal shares apply
    let mut values = vec![BigRational::zero(); weights.len()];
    let outer = BigRational::new(
        BigInt::one(),
        BigInt::from(p_bar) * BigInt::from(c_bar as u64),
    );
    for r in &quotient_ls {
        let wr: u64 = r.iter().map(|&k| union_weights[k]).sum();
        for &k in r {
            let q_internal = quota - (wr - union_weights[k]);
            let counts = &block_answers[k][&q_internal];
            let denom = BigInt::from(&counts.p * BigUint::from(counts.c));
            for (j, &i) in block_members[k].iter().enumerate() {
                if !counts.per_member[j].is_zero() {
                    values[i] += &outer
                        * BigRational::new(
                            BigInt::from(counts.per_member[j].clone()),
                            denom.clone(),
                        );
                }
            }
        }
    }
    Ok(PowerVector::new(
        values,
        IndexKind::FelsenthalOwen,
        Backend::WeightedCounting,
    ))
}

/// Least-size counts of one block at one internal quota.
#[derive(Clone, Debug)]
struct InternalCounts {
    c: usize,
    p: BigUint,
    /// Indexed by position in the block's ascending member list.
    per_member: Vec<BigUint>,
}

fn solve_block(
    block_weights: &[u64],
    quotas: &BTreeSet<u64>,
    config: &CountingConfig,
) -> Result<BTreeMap<u64, InternalCounts>> {
    match solve_block_generic::<u128>(block_weights, quotas, config) {
        Ok(a) => Ok(a),
        Err(RunError::Overflow) => {
            solve_block_generic::<BigUint>(block_weights, quotas, config)
                .map_err(RunError::into_error)
        }
        Err(e) => Err(e.into_error()),
    }
}

fn solve_block_generic<C: Count>(
    block_weights: &[u64],
    quotas: &BTreeSet<u64>,
    config: &CountingConfig,
) -> std::result::Result<BTreeMap<u64, InternalCounts>, RunError> {
    let m = block_weights.len();
    let block_total = checked_total(block_weights).map_err(RunError::Other)?;
    let mut c_of: BTreeMap<u64, usize> = BTreeMap::new();
    for &q in quotas {
        if q == 0 || q > block_total {
            return Err(RunError::Other(Error::internal(format!(
                "internal quota {q} infeasible for block total {block_total}"
            ))));
        }
        c_of.insert(q, min_winning_size(q, block_weights).map_err(RunError::Other)?);
    }
    let needed_rows: BTreeSet<usize> = c_of.values().copied().collect();
    let s_max = *needed_rows.iter().max().expect("at least one quota");

    // the block table keeps the full weight axis (cap at the block total is
    // exact, nothing exceeds it), so one table answers every quota by
    // suffix sums
    let cap = block_total;
    check_memory::<C>(s_max, cap, config).map_err(RunError::Other)?;
    let table = Table::<C>::build(block_weights, s_max, cap)?;

    let suffix_f: BTreeMap<usize, Vec<C>> = needed_rows
        .iter()
        .map(|&s| Ok((s, suffix_sums(&table.rows[s])?)))
        .collect::<std::result::Result<_, RunError>>()?;

    // per-member counts: undo the member, then the same suffix-sum queries
    let per_member_rows: Vec<BTreeMap<usize, Vec<C>>> = (0..m)
        .into_par_iter()
        .map(|j| {
            let rows = table.undo_rows(block_weights[j], &needed_rows)?;
            rows.into_iter()
                .map(|(s, row)| Ok((s, suffix_sums(&row)?)))
                .collect::<std::result::Result<BTreeMap<usize, Vec<C>>, RunError>>()
        })
        .collect::<std::result::Result<Vec<_>, RunError>>()?;

    let mut answers = BTreeMap::new();
    for (&q, &c) in &c_of {
        let q_idx = q as usize;
        let p = &suffix_f[&c][q_idx];
        let mut per_member = Vec::with_capacity(m);
        for rows in per_member_rows.iter() {
            // count of size-c winners avoiding the member, subtracted from p
            let avoiding = &rows[&c][q_idx];
            let with_member = p
                .checked_sub(avoiding)
                .ok_or(RunError::Underflow)?;
            per_member.push(with_member.to_biguint());
        }
        answers.insert(
            q,
            InternalCounts {
                c,
                p: p.to_biguint(),
                per_member,
            },
        );
    }
    Ok(answers)
}

// ---------------------------------------------------------------------------
// the counting core, generic over the counter type

trait Count: Clone + Send + Sync + Zero + One {
    const BYTES_HINT: u128;
    #[must_use]
    fn checked_add_assign(&mut self, rhs: &Self) -> bool;
    fn checked_sub(&self, rhs: &Self) -> Option<Self>;
    fn to_biguint(&self) -> BigUint;
}

impl Count for u128 {
    const BYTES_HINT: u128 = 16;
    fn checked_add_assign(&mut self, rhs: &Self) -> bool {
        match self.checked_add(*rhs) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        u128::checked_sub(*self, *rhs)
    }
    fn to_biguint(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for BigUint {
    const BYTES_HINT: u128 = 48;
    fn checked_add_assign(&mut self, rhs: &Self) -> bool {
        *self += rhs;
        true
    }
    fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        if self >= rhs {
            Some(self - rhs)
        } else {
            None
        }
    }
    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

#[derive(Debug)]
enum RunError {
    Overflow,
    Underflow,
    Other(Error),
}

impl RunError {
    fn into_error(self) -> Error {
        match self {
            RunError::Overflow => Error::internal(
                "counter overflow survived the arbitrary-precision fallback",
            ),
            RunError::Underflow => {
                Error::internal("reverse dynamic program produced a negative count")
            }
            RunError::Other(e) => e,
        }
    }
}

/// `rows[s][w]` counts subsets of the processed players with exactly `s`
/// members and total weight `min(w, cap)`; index `cap` pools everything at
/// or above the cap.
struct Table<C> {
    cap: usize,
    rows: Vec<Vec<C>>,
}

impl<C: Count> Table<C> {
    fn build(weights: &[u64], s_max: usize, cap: u64) -> std::result::Result<Self, RunError> {
        let cap = usize::try_from(cap)
            .map_err(|_| RunError::Other(Error::capacity("weight cap exceeds the address space")))?;
        let mut rows = vec![vec![C::zero(); cap + 1]; s_max + 1];
        rows[0][0] = C::one();
        for &w in weights {
            // descending sizes so each player is counted at most once
            for s in (1..=s_max).rev() {
                let (dst, src) = {
                    let (lo, hi) = rows.split_at_mut(s);
                    (&mut hi[0], &lo[s - 1])
                };
                for w_prev in 0..=cap {
                    if src[w_prev].is_zero() {
                        continue;
                    }
                    let target = (w_prev + w as usize).min(cap);
                    let add = src[w_prev].clone();
                    if !dst[target].checked_add_assign(&add) {
                        return Err(RunError::Overflow);
                    }
                }
            }
        }
        Ok(Table { cap, rows })
    }

    /// The table with one player of weight `w_i` removed, restricted to the
    /// requested rows. Row `s` of the smaller table satisfies
    /// `f[s][w] = g[s][w] + g[s-1][clamped w - w_i]`, solved upward from
    /// row 0 (which removal never changes).
    fn undo_rows(
        &self,
        w_i: u64,
        needed: &BTreeSet<usize>,
    ) -> std::result::Result<BTreeMap<usize, Vec<C>>, RunError> {
        let cap = self.cap;
        let max_needed = *needed.iter().max().expect("at least one row requested");
        let mut out = BTreeMap::new();
        let mut prev: Vec<C> = self.rows[0].clone();
        if needed.contains(&0) {
            out.insert(0, prev.clone());
        }
        let w_i_us = usize::try_from(w_i).unwrap_or(usize::MAX);
        for s in 1..=max_needed {
            let f = &self.rows[s];
            let mut cur: Vec<C> = Vec::with_capacity(cap + 1);
            for w in 0..cap {
                let val = if w >= w_i_us {
                    f[w].checked_sub(&prev[w - w_i_us]).ok_or(RunError::Underflow)?
                } else {
                    f[w].clone()
                };
                cur.push(val);
            }
            // the cap bucket absorbed every subset the player pushed to or
            // past the cap: those from the bucket itself and those from
            // weights within w_i below it
            let mut deduction = prev[cap].clone();
            for w_prev in cap.saturating_sub(w_i_us)..cap {
                if !deduction.checked_add_assign(&prev[w_prev]) {
                    return Err(RunError::Overflow);
                }
            }
            cur.push(f[cap].checked_sub(&deduction).ok_or(RunError::Underflow)?);
            if needed.contains(&s) {
                out.insert(s, cur.clone());
            }
            prev = cur;
        }
        Ok(out)
    }
}

/// `suffix[w] = sum of row[w..]`, so "weight at least q" reads are O(1).
fn suffix_sums<C: Count>(row: &[C]) -> std::result::Result<Vec<C>, RunError> {
    let mut out = vec![C::zero(); row.len()];
    let mut acc = C::zero();
    for w in (0..row.len()).rev() {
        if !acc.checked_add_assign(&row[w]) {
            return Err(RunError::Overflow);
        }
        out[w] = acc.clone();
    }
    Ok(out)
}

fn check_memory<C: Count>(s_max: usize, cap: u64, config: &CountingConfig) -> Result<()> {
    let entries = (s_max as u128 + 1) * (cap as u128 + 2);
    // one full table plus two rolling rows for the undo
    let bytes = entries.saturating_add(2 * (cap as u128 + 2)) * C::BYTES_HINT;
    if bytes > config.memory_budget_bytes {
        return Err(Error::capacity(format!(
            "size-by-weight table needs about {bytes} bytes (budget {}); \
             rescale the weights or raise the budget",
            config.memory_budget_bytes
        )));
    }
    Ok(())
}

fn run_counts<C: Count>(
    quota: u64,
    weights: &[u64],
    c: usize,
    config: &CountingConfig,
) -> std::result::Result<CountSummary, RunError> {
    let n = weights.len();
    let total: u64 = weights.iter().sum();
    let direct_cost = (c as u128 + 1) * (quota as u128 + 1);
    let complement_cost = (n as u128 - c as u128 + 1) * ((total - quota) as u128 + 2);
    if direct_cost <= complement_cost {
        run_counts_direct::<C>(quota, weights, c, config)
    } else {
        run_counts_complement::<C>(quota, weights, c, config)
    }
}

/// Direct mode: cap the weight axis at the quota; the cap bucket holds the
/// winning subsets of each size.
fn run_counts_direct<C: Count>(
    quota: u64,
    weights: &[u64],
    c: usize,
    config: &CountingConfig,
) -> std::result::Result<CountSummary, RunError> {
    let n = weights.len();
    check_memory::<C>(c, quota, config).map_err(RunError::Other)?;
    let table = Table::<C>::build(weights, c, quota)?;
    let cap = table.cap;
    let p_direct = table.rows[c][cap].to_biguint();

    // complement consistency: winning plus losing size-c subsets is C(n, c)
    let mut losing = BigUint::zero();
    for w in 0..cap {
        losing += table.rows[c][w].to_biguint();
    }
    if &p_direct + losing != binomial(n, c) {
        return Err(RunError::Other(Error::internal(
            "size-c winning and losing counts do not add up to C(n, c)",
        )));
    }

    let needed: BTreeSet<usize> = [c].into_iter().collect();
    let per_player: Vec<BigUint> = (0..n)
        .into_par_iter()
        .map(|i| {
            let rows = table.undo_rows(weights[i], &needed)?;
            let without = rows[&c][cap].to_biguint();
            // p minus the winners that avoid player i
            Ok(&p_direct - without)
        })
        .collect::<std::result::Result<Vec<_>, RunError>>()?;
    Ok(CountSummary {
        c,
        p: p_direct,
        per_player,
    })
}

/// Complement mode, for quotas near the total: a size-c subset wins exactly
/// when its complement (size n-c) weighs at most total minus quota, so cap
/// the axis just above that slack and count complements instead.
fn run_counts_complement<C: Count>(
    quota: u64,
    weights: &[u64],
    c: usize,
    config: &CountingConfig,
) -> std::result::Result<CountSummary, RunError> {
    let n = weights.len();
    let total: u64 = weights.iter().sum();
    let slack = total - quota;
    let comp_size = n - c;
    let cap = slack + 1; // bucket at slack+1 holds complements too heavy to win
    check_memory::<C>(comp_size, cap, config).map_err(RunError::Other)?;
    let table = Table::<C>::build(weights, comp_size, cap)?;

    let in_range = |row: &[C]| -> std::result::Result<BigUint, RunError> {
        let mut acc = BigUint::zero();
        for v in &row[..row.len() - 1] {
            acc += v.to_biguint();
        }
        Ok(acc)
    };
    let p = in_range(&table.rows[comp_size])?;
    let over = table.rows[comp_size][table.cap].to_biguint();
    if &p + over != binomial(n, comp_size) {
        return Err(RunError::Other(Error::internal(
            "light and heavy complement counts do not add up to C(n, n-c)",
        )));
    }

    let needed: BTreeSet<usize> = [comp_size].into_iter().collect();
    let per_player: Vec<BigUint> = (0..n)
        .into_par_iter()
        .map(|i| {
            // a size-c winner containing i has a complement avoiding i, and
            // complements avoiding i are counted by the table without i
            let rows = table.undo_rows(weights[i], &needed)?;
            in_range(&rows[&comp_size])
        })
        .collect::<std::result::Result<Vec<_>, RunError>>()?;
    Ok(CountSummary {
        c,
        p,
        per_player,
    })
}

fn checked_total(weights: &[u64]) -> Result<u64> {
    weights
        .iter()
        .try_fold(0u64, |acc, w| acc.checked_add(*w))
        .ok_or_else(|| Error::domain("total weight overflows u64"))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Verifies that undoing and re-adding a player restores the table: used by
/// the property suite, exposed for it.
pub fn undo_redo_roundtrip(weights: &[u64], quota: u64, s_max: usize, player: usize) -> Result<bool> {
    let table =
        Table::<u128>::build(weights, s_max, quota).map_err(RunError::into_error)?;
    let all: BTreeSet<usize> = (0..=s_max).collect();
    let undone = table
        .undo_rows(weights[player], &all)
        .map_err(RunError::into_error)?;
    // rebuild by inserting the player into the undone table
    let reduced: Vec<u64> = weights
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != player)
        .map(|(_, &w)| w)
        .collect();
    let rebuilt = Table::<u128>::build(&reduced, s_max, quota).map_err(RunError::into_error)?;
    for s in 0..=s_max {
        if undone[&s] != rebuilt.rows[s] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::Coalition;
    use crate::exhaustive;
    use crate::game::WeightedGame;

    fn cfg() -> CountingConfig {
        CountingConfig::default()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn greedy_least_winning_size() {
        assert_eq!(min_winning_size(5, &[3, 2, 2, 1]).unwrap(), 2);
        assert_eq!(min_winning_size(8, &[3, 2, 2, 1]).unwrap(), 4);
        assert_eq!(min_winning_size(1, &[3, 2, 2, 1]).unwrap(), 1);
        assert!(min_winning_size(9, &[3, 2, 2, 1]).is_err());
        assert!(min_winning_size(0, &[3, 2, 2, 1]).is_err());
    }

    #[test]
    fn counts_match_hand_worked_game() {
        let s = count_least_size(5, &[3, 2, 2, 1], &cfg()).unwrap();
        assert_eq!(s.c, 2);
        assert_eq!(s.p, BigUint::from(2u32));
        assert_eq!(
            s.per_player,
            vec![
                BigUint::from(2u32),
                BigUint::from(1u32),
                BigUint::from(1u32),
                BigUint::from(0u32)
            ]
        );
        let psi = felsenthal_weighted(5, &[3, 2, 2, 1], &cfg()).unwrap();
        assert_eq!(psi.values, vec![rat(1, 2), rat(1, 4), rat(1, 4), rat(0, 1)]);
    }

    #[test]
    fn zero_weight_players_never_join_least_size_winners() {
        let psi = felsenthal_weighted(2, &[2, 0], &cfg()).unwrap();
        assert_eq!(psi.values, vec![rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn unanimity_quota_gives_the_grand_coalition_only() {
        let s = count_least_size(7, &[3, 2, 1, 1], &cfg()).unwrap();
        assert_eq!(s.c, 4);
        assert_eq!(s.p, BigUint::one());
        assert!(s.per_player.iter().all(|x| x == &BigUint::one()));
    }

    #[test]
    fn symmetric_weights_spread_evenly() {
        let s = count_least_size(2, &[1, 1, 1, 1], &cfg()).unwrap();
        assert_eq!(s.c, 2);
        assert_eq!(s.p, BigUint::from(6u32));
        assert!(s.per_player.iter().all(|x| x == &BigUint::from(3u32)));
    }

    #[test]
    fn both_modes_agree_with_enumeration() {
        // mid quota exercises direct mode, near-total quota complement mode
        let weights = [5u64, 4, 3, 3, 2, 1];
        let total: u64 = weights.iter().sum();
        for quota in [6, 9, total - 2, total] {
            let s = count_least_size(quota, &weights, &cfg()).unwrap();
            let game = WeightedGame::new(quota, weights.to_vec()).unwrap();
            let wins = |set: &Coalition| game.is_winning(set).unwrap();
            let (_, oracle) = exhaustive::least_size_family(weights.len(), &wins);
            assert_eq!(s.c, oracle.c, "quota {quota}");
            assert_eq!(s.p, BigUint::from(oracle.p), "quota {quota}");
            let oracle_pp: Vec<BigUint> =
                oracle.per_player.iter().map(|&x| BigUint::from(x)).collect();
            assert_eq!(s.per_player, oracle_pp, "quota {quota}");
        }
    }

    #[test]
    fn undo_then_rebuild_is_identity() {
        let weights = [4u64, 3, 3, 2, 1, 1];
        for player in 0..weights.len() {
            assert!(undo_redo_roundtrip(&weights, 7, 4, player).unwrap());
        }
    }

    #[test]
    fn weighted_unions_match_the_enumeration_backend() {
        // [4; 3,1,1,1] with blocks {0} and {1,2,3}: both unions are needed,
        // the light block then needs only one member
        let partition = Partition::new(
            4,
            vec![Coalition::singleton(0), Coalition::from_ids([1, 2, 3])],
        )
        .unwrap();
        let psi = felsenthal_owen_weighted(4, &[3, 1, 1, 1], &partition, &cfg()).unwrap();
        assert_eq!(
            psi.values,
            vec![rat(1, 2), rat(1, 6), rat(1, 6), rat(1, 6)]
        );
    }

    #[test]
    fn trivial_partitions_reduce_to_plain_felsenthal() {
        let weights = [3u64, 2, 2, 1];
        let plain = felsenthal_weighted(5, &weights, &cfg()).unwrap();
        for partition in [Partition::singletons(4), Partition::grand(4)] {
            let v = felsenthal_owen_weighted(5, &weights, &partition, &cfg()).unwrap();
            assert_eq!(v.values, plain.values);
        }
    }

    #[test]
    fn capacity_errors_are_reported() {
        let tight = CountingConfig {
            memory_budget_bytes: 16,
            quotient_budget: 5_000_000,
        };
        assert!(matches!(
            count_least_size(5, &[3, 2, 2, 1], &tight),
            Err(Error::Capacity(_))
        ));
    }
}
