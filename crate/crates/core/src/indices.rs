use crate::coalition::{Coalition, PlayerId};
use crate::error::{Error, Result};
use crate::game::{ExplicitGame, LeastSizeSummary, ENUMERATION_BOUND};
use crate::unions::{essential_families, internal_game, quotient_game, GameWithUnions};
use num::{BigInt, BigRational, One, Zero};

/// Which index a power vector came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    Felsenthal,
    FelsenthalOwen,
    ShapleyShubik,
    BanzhafNormalized,
    DeeganPackel,
    /// A bespoke evaluator, e.g. one of the axiom lab's counterexamples.
    Other,
}

/// Which engine produced a power vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Enumeration,
    WeightedCounting,
}

/// An exact power value per player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerVector {
    pub values: Vec<BigRational>,
    pub index_kind: IndexKind,
    pub backend: Backend,
}

impl PowerVector {
    pub fn new(values: Vec<BigRational>, index_kind: IndexKind, backend: Backend) -> Self {
        PowerVector {
            values,
            index_kind,
            backend,
        }
    }

    pub fn sum(&self) -> BigRational {
        self.values.iter().sum()
    }

    pub fn player_count(&self) -> usize {
        self.values.len()
    }

    /// Sum of the values of the players in `s`.
    pub fn sum_over(&self, s: &Coalition) -> BigRational {
        s.iter().map(|i| &self.values[i]).sum()
    }
}

pub(crate) fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The Felsenthal index: each least-size winning coalition is equally
/// likely, and splits the unit of power evenly among its members; player
/// `i` gets `|W^ls_i| / (p * c)`.
pub fn felsenthal(game: &ExplicitGame) -> PowerVector {
    let (_, summary) = game.least_size_winning();
    PowerVector::new(
        felsenthal_values(&summary),
        IndexKind::Felsenthal,
        Backend::Enumeration,
    )
}

pub(crate) fn felsenthal_values(summary: &LeastSizeSummary) -> Vec<BigRational> {
    let denom = summary.p * summary.c as u64;
    summary
        .per_player
        .iter()
        .map(|&count| ratio(count, denom))
        .collect()
}

/// The Felsenthal-Owen index, computed by composing the Felsenthal index of
/// the internal games over the least-size winners of the quotient game:
///
/// `Psi_i = (1/p_quotient) * sum over R containing i's union of
///          (1/|R|) * psi_i(internal game of (R, k))`.
///
/// Players whose union joins no least-size quotient winner get exactly 0.
pub fn felsenthal_owen(gwu: &GameWithUnions) -> PowerVector {
    let n = gwu.player_count();
    let quotient = quotient_game(gwu);
    let (quotient_ls, quotient_summary) = quotient.least_size_winning();
    let p_quotient = BigRational::from(BigInt::from(quotient_summary.p));
    let mut values = vec![BigRational::zero(); n];
    for r in &quotient_ls {
        let weight = (ratio(1, r.len() as u64)) / &p_quotient;
        for k in r.iter() {
            let internal = internal_game(gwu, r, k)
                .expect("least-size quotient winners have well-formed internal games");
            let psi = felsenthal(&internal.game);
            for (j, value) in psi.values.into_iter().enumerate() {
                if !value.is_zero() {
                    values[internal.members[j]] += value * &weight;
                }
            }
        }
    }
    PowerVector::new(values, IndexKind::FelsenthalOwen, Backend::Enumeration)
}

/// The Felsenthal-Owen index computed directly from the essential families:
///
/// `Psi_i = (1/p_quotient) * sum_R (1/|R|) (1/|E^ls_{R,k}|)
///          * sum over the least-size essential coalitions containing i of 1/|S|`.
///
/// Must agree exactly with [`felsenthal_owen`]; kept as an independent
/// evaluation path for cross-checking.
pub fn felsenthal_owen_by_essential_sums(gwu: &GameWithUnions) -> PowerVector {
    let n = gwu.player_count();
    let quotient = quotient_game(gwu);
    let (_, quotient_summary) = quotient.least_size_winning();
    let p_quotient = BigRational::from(BigInt::from(quotient_summary.p));
    let mut values = vec![BigRational::zero(); n];
    for family in essential_families(gwu) {
        let e_ls_size = family.least_size.len() as u64;
        let weight = ratio(1, family.r.len() as u64) / &p_quotient / ratio(e_ls_size, 1);
        for s in &family.least_size {
            let share = ratio(1, s.len() as u64) * &weight;
            for i in s.iter() {
                values[i] += &share;
            }
        }
    }
    PowerVector::new(values, IndexKind::FelsenthalOwen, Backend::Enumeration)
}

/// Classical small-n reference indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceKind {
    ShapleyShubik,
    BanzhafNormalized,
    DeeganPackel,
}

/// Computes a classical index by enumeration. Shapley-Shubik and Banzhaf
/// walk all subsets avoiding each player, so they are bounded; Deegan-Packel
/// reads the minimal family directly.
pub fn reference_index(game: &ExplicitGame, kind: ReferenceKind) -> Result<PowerVector> {
    let n = game.player_count();
    match kind {
        ReferenceKind::DeeganPackel => {
            let family = game.minimal_winning();
            let m = family.len() as u64;
            let mut values = vec![BigRational::zero(); n];
            for s in family {
                let share = ratio(1, m * s.len() as u64);
                for i in s.iter() {
                    values[i] += &share;
                }
            }
            Ok(PowerVector::new(
                values,
                IndexKind::DeeganPackel,
                Backend::Enumeration,
            ))
        }
        ReferenceKind::ShapleyShubik | ReferenceKind::BanzhafNormalized => {
            if n > ENUMERATION_BOUND {
                return Err(Error::capacity(format!(
                    "swing enumeration needs n <= {ENUMERATION_BOUND}, got {n}"
                )));
            }
            let swings = swing_counts_by_size(game);
            match kind {
                ReferenceKind::ShapleyShubik => {
                    // phi_i = sum over sizes s of swings_i[s] * s! (n-1-s)! / n!
                    let fact: Vec<BigInt> = {
                        let mut f = vec![BigInt::one()];
                        for i in 1..=n {
                            let next = f[i - 1].clone() * BigInt::from(i);
                            f.push(next);
                        }
                        f
                    };
                    let n_fact = fact[n].clone();
                    let values = swings
                        .iter()
                        .map(|per_size| {
                            per_size
                                .iter()
                                .enumerate()
                                .map(|(s, &count)| {
                                    BigRational::new(
                                        BigInt::from(count) * &fact[s] * &fact[n - 1 - s],
                                        n_fact.clone(),
                                    )
                                })
                                .sum()
                        })
                        .collect();
                    Ok(PowerVector::new(
                        values,
                        IndexKind::ShapleyShubik,
                        Backend::Enumeration,
                    ))
                }
                ReferenceKind::BanzhafNormalized => {
                    let totals: Vec<u64> = swings.iter().map(|per| per.iter().sum()).collect();
                    let all: u64 = totals.iter().sum();
                    if all == 0 {
                        return Err(Error::internal(
                            "a simple game must have at least one swing",
                        ));
                    }
                    let values = totals.iter().map(|&t| ratio(t, all)).collect();
                    Ok(PowerVector::new(
                        values,
                        IndexKind::BanzhafNormalized,
                        Backend::Enumeration,
                    ))
                }
                ReferenceKind::DeeganPackel => unreachable!(),
            }
        }
    }
}

/// `swings[i][s]` counts subsets `S` of size `s` avoiding `i` with `S`
/// losing and `S + i` winning.
fn swing_counts_by_size(game: &ExplicitGame) -> Vec<Vec<u64>> {
    let n = game.player_count();
    let ids: Vec<PlayerId> = (0..n).collect();
    let mut swings = vec![vec![0u64; n]; n];
    for i in 0..n {
        let others: Vec<PlayerId> = ids.iter().copied().filter(|&j| j != i).collect();
        for mask in 0u32..(1u32 << others.len()) {
            let s: Coalition = others
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let wins_without = game.is_winning(&s).expect("ids in range");
            if !wins_without && game.is_winning(&s.with(i)).expect("ids in range") {
                swings[i][s.len()] += 1;
            }
        }
    }
    swings
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::WeightedGame;
    use crate::partition::Partition;

    fn coal(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied())
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn seven_player_example() -> GameWithUnions {
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
        GameWithUnions::new(game, partition).unwrap()
    }

    #[test]
    fn felsenthal_dictator_and_symmetric_cases() {
        let dictator = WeightedGame::new(4, vec![4, 2, 1])
            .unwrap()
            .to_explicit(25)
            .unwrap();
        assert_eq!(felsenthal(&dictator).values, vec![rat(1, 1), rat(0, 1), rat(0, 1)]);

        let two_pairs = ExplicitGame::new(4, [coal(&[0, 1]), coal(&[2, 3])]).unwrap();
        assert_eq!(felsenthal(&two_pairs).values, vec![rat(1, 4); 4]);
    }

    #[test]
    fn felsenthal_of_seven_player_example() {
        let gwu = seven_player_example();
        // least-size winners of the base game: {0,6} and {4,6}
        assert_eq!(
            felsenthal(gwu.game()).values,
            vec![
                rat(1, 4),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1),
                rat(1, 4),
                rat(0, 1),
                rat(1, 2)
            ]
        );
    }

    #[test]
    fn felsenthal_owen_of_seven_player_example_both_forms() {
        let gwu = seven_player_example();
        let expected = vec![
            rat(1, 4),
            rat(1, 24),
            rat(1, 24),
            rat(1, 12),
            rat(1, 6),
            rat(1, 12),
            rat(1, 3),
        ];
        assert_eq!(felsenthal_owen(&gwu).values, expected);
        assert_eq!(felsenthal_owen_by_essential_sums(&gwu).values, expected);
    }

    #[test]
    fn felsenthal_owen_under_trivial_partitions_is_felsenthal() {
        let gwu = seven_player_example();
        let psi = felsenthal(gwu.game()).values;
        let singles = gwu.with_partition(Partition::singletons(7)).unwrap();
        assert_eq!(felsenthal_owen(&singles).values, psi);
        let grand = gwu.with_partition(Partition::grand(7)).unwrap();
        assert_eq!(felsenthal_owen(&grand).values, psi);
    }

    #[test]
    fn shapley_shubik_on_reference_games() {
        let dictator = WeightedGame::new(4, vec![4, 2, 1])
            .unwrap()
            .to_explicit(25)
            .unwrap();
        let phi = reference_index(&dictator, ReferenceKind::ShapleyShubik).unwrap();
        assert_eq!(phi.values, vec![rat(1, 1), rat(0, 1), rat(0, 1)]);

        let majority = ExplicitGame::new(3, [coal(&[0, 1]), coal(&[0, 2]), coal(&[1, 2])]).unwrap();
        let phi = reference_index(&majority, ReferenceKind::ShapleyShubik).unwrap();
        assert_eq!(phi.values, vec![rat(1, 3); 3]);

        // a vetoer with two supporters: the classic (2/3, 1/6, 1/6) split
        let veto = ExplicitGame::new(3, [coal(&[0, 1]), coal(&[0, 2])]).unwrap();
        let phi = reference_index(&veto, ReferenceKind::ShapleyShubik).unwrap();
        assert_eq!(phi.values, vec![rat(2, 3), rat(1, 6), rat(1, 6)]);
    }

    #[test]
    fn deegan_packel_splits_within_minimal_winners() {
        let g = ExplicitGame::new(3, [coal(&[0, 1]), coal(&[0, 2])]).unwrap();
        let dp = reference_index(&g, ReferenceKind::DeeganPackel).unwrap();
        assert_eq!(dp.values, vec![rat(1, 2), rat(1, 4), rat(1, 4)]);
    }

    #[test]
    fn banzhaf_normalized_sums_to_one() {
        let g = ExplicitGame::new(3, [coal(&[0, 1]), coal(&[0, 2])]).unwrap();
        let bz = reference_index(&g, ReferenceKind::BanzhafNormalized).unwrap();
        assert_eq!(bz.sum(), rat(1, 1));
        assert_eq!(bz.values, vec![rat(3, 5), rat(1, 5), rat(1, 5)]);
    }
}
