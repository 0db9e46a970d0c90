//! Brute-force reference implementations over the full subset lattice.
//!
//! Everything here scans all `2^n` coalitions and is deliberately written
//! from the definitions, independent of the production code paths, so the
//! two can be checked against each other. Bounded to small player counts.

use crate::coalition::{Coalition, PlayerId};
use crate::game::LeastSizeSummary;
use crate::indices::ratio;
use crate::partition::{Partition, UnionId};
use num::{BigRational, Zero};

const SCAN_BOUND: usize = 20;

fn all_subsets(n: usize) -> impl Iterator<Item = Coalition> {
    assert!(n <= SCAN_BOUND, "exhaustive scan bounded to {SCAN_BOUND} players");
    (0u32..(1u32 << n)).map(move |mask| {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .collect::<Coalition>()
    })
}

/// All winning coalitions, by scanning every subset.
pub fn winning_family(n: usize, wins: &dyn Fn(&Coalition) -> bool) -> Vec<Coalition> {
    all_subsets(n).filter(|s| wins(s)).collect()
}

/// The minimal winning coalitions from the definition: winning, and every
/// proper subset obtained by dropping one member loses.
pub fn minimal_family(n: usize, wins: &dyn Fn(&Coalition) -> bool) -> Vec<Coalition> {
    let mut family: Vec<Coalition> = all_subsets(n)
        .filter(|s| wins(s) && s.iter().all(|i| !wins(&s.without(i))))
        .collect();
    family.sort();
    family
}

/// The least-size winning coalitions and their summary counts.
pub fn least_size_family(
    n: usize,
    wins: &dyn Fn(&Coalition) -> bool,
) -> (Vec<Coalition>, LeastSizeSummary) {
    let winning = winning_family(n, wins);
    let c = winning
        .iter()
        .map(Coalition::len)
        .filter(|&l| l > 0)
        .min()
        .expect("some nonempty coalition must win");
    let mut ls: Vec<Coalition> = winning.into_iter().filter(|s| s.len() == c).collect();
    ls.sort();
    let mut per_player = vec![0u64; n];
    for s in &ls {
        for i in s.iter() {
            per_player[i] += 1;
        }
    }
    let summary = LeastSizeSummary {
        c,
        p: ls.len() as u64,
        per_player,
    };
    (ls, summary)
}

/// The Felsenthal index from its definition: each least-size winning
/// coalition contributes `1/|S|` to each member, averaged over the family.
pub fn psi(n: usize, wins: &dyn Fn(&Coalition) -> bool) -> Vec<BigRational> {
    let (ls, summary) = least_size_family(n, wins);
    let p = summary.p;
    (0..n)
        .map(|i| {
            ls.iter()
                .filter(|s| s.contains(i))
                .map(|s| ratio(1, s.len() as u64))
                .sum::<BigRational>()
                / ratio(p, 1)
        })
        .collect()
}

/// The minimal family of the quotient game, scanning all union subsets.
pub fn quotient_minimal(
    partition: &Partition,
    wins: &dyn Fn(&Coalition) -> bool,
) -> Vec<Coalition> {
    let u = partition.union_count();
    let quotient_wins = |r: &Coalition| wins(&partition.union_of_blocks(r));
    minimal_family(u, &quotient_wins)
}

/// The minimal family of the internal game of union `k` with respect to
/// `r`, scanning all subsets of block `k`; results in original player ids.
pub fn internal_minimal(
    partition: &Partition,
    r: &Coalition,
    k: UnionId,
    wins: &dyn Fn(&Coalition) -> bool,
) -> Vec<Coalition> {
    let others = partition.union_of_blocks(&r.without(k));
    let members: Vec<PlayerId> = partition.block(k).iter().collect();
    let m = members.len();
    assert!(m <= SCAN_BOUND);
    let internal_wins = |s: &Coalition| {
        let original: Coalition = s.iter().map(|j| members[j]).collect();
        wins(&original.union(&others))
    };
    minimal_family(m, &internal_wins)
        .into_iter()
        .map(|s| s.iter().map(|j| members[j]).collect())
        .collect()
}

/// The Felsenthal-Owen index from its two-stage definition, built entirely
/// from subset scans: least-size quotient winners, then least-size internal
/// winners, with uniform weights at both stages.
pub fn psi_owen(partition: &Partition, wins: &dyn Fn(&Coalition) -> bool) -> Vec<BigRational> {
    let n = partition.player_count();
    let u = partition.union_count();
    let quotient_wins = |r: &Coalition| wins(&partition.union_of_blocks(r));
    let (quotient_ls, quotient_summary) = least_size_family(u, &quotient_wins);
    let mut values = vec![BigRational::zero(); n];
    for r in &quotient_ls {
        for k in r.iter() {
            let others = partition.union_of_blocks(&r.without(k));
            let members: Vec<PlayerId> = partition.block(k).iter().collect();
            let internal_wins = |s: &Coalition| {
                let original: Coalition = s.iter().map(|j| members[j]).collect();
                wins(&original.union(&others))
            };
            let (e_ls, _) = least_size_family(members.len(), &internal_wins);
            let weight = ratio(1, quotient_summary.p)
                * ratio(1, r.len() as u64)
                * ratio(1, e_ls.len() as u64);
            for s in &e_ls {
                let share = ratio(1, s.len() as u64) * &weight;
                for j in s.iter() {
                    values[members[j]] += &share;
                }
            }
        }
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{ExplicitGame, WeightedGame};

    fn coal(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied())
    }

    #[test]
    fn scan_recovers_minimal_family_of_weighted_game() {
        let g = WeightedGame::new(5, vec![3, 2, 2, 1]).unwrap();
        let wins = |s: &Coalition| g.is_winning(s).unwrap();
        assert_eq!(
            minimal_family(4, &wins),
            vec![coal(&[0, 1]), coal(&[0, 2]), coal(&[1, 2, 3])]
        );
        let (ls, summary) = least_size_family(4, &wins);
        assert_eq!(ls, vec![coal(&[0, 1]), coal(&[0, 2])]);
        assert_eq!((summary.c, summary.p), (2, 2));
        assert_eq!(summary.per_player, vec![2, 1, 1, 0]);
    }

    #[test]
    fn scan_psi_matches_hand_computation() {
        let g = WeightedGame::new(5, vec![3, 2, 2, 1]).unwrap();
        let wins = |s: &Coalition| g.is_winning(s).unwrap();
        assert_eq!(
            psi(4, &wins),
            vec![ratio(1, 2), ratio(1, 4), ratio(1, 4), ratio(0, 1)]
        );
    }

    #[test]
    fn scan_quotient_and_psi_owen_on_worked_example() {
        let game = ExplicitGame::new(
            7,
            [
                coal(&[0, 1, 5]),
                coal(&[0, 2, 5]),
                coal(&[0, 1, 2, 3]),
                coal(&[0, 6]),
                coal(&[4, 6]),
            ],
        )
        .unwrap();
        let partition =
            Partition::new(7, vec![coal(&[0, 1, 2]), coal(&[3, 4, 5]), coal(&[6])]).unwrap();
        let wins = |s: &Coalition| game.is_winning(s).unwrap();
        assert_eq!(
            quotient_minimal(&partition, &wins),
            vec![coal(&[0, 1]), coal(&[0, 2]), coal(&[1, 2])]
        );
        assert_eq!(
            internal_minimal(&partition, &coal(&[0, 1]), 0, &wins),
            vec![coal(&[0, 1]), coal(&[0, 2])]
        );
        let values = psi_owen(&partition, &wins);
        assert_eq!(
            values,
            vec![
                ratio(1, 4),
                ratio(1, 24),
                ratio(1, 24),
                ratio(1, 12),
                ratio(1, 6),
                ratio(1, 12),
                ratio(1, 3),
            ]
        );
    }
}
