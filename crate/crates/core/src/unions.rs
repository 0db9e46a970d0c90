use crate::coalition::{minimize_family, Coalition, PlayerId};
use crate::error::{Error, Result};
use crate::game::ExplicitGame;
use crate::partition::{Partition, UnionId};
use std::collections::BTreeSet;

/// A simple game together with an a priori union structure.
#[derive(Clone, Debug)]
pub struct GameWithUnions {
    game: ExplicitGame,
    partition: Partition,
}

impl GameWithUnions {
    pub fn new(game: ExplicitGame, partition: Partition) -> Result<Self> {
        if game.player_count() != partition.player_count() {
            return Err(Error::domain(format!(
                "game has {} players but partition covers {}",
                game.player_count(),
                partition.player_count()
            )));
        }
        Ok(GameWithUnions { game, partition })
    }

    pub fn game(&self) -> &ExplicitGame {
        &self.game
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn player_count(&self) -> usize {
        self.game.player_count()
    }

    /// Same game under a different union structure.
    pub fn with_partition(&self, partition: Partition) -> Result<Self> {
        GameWithUnions::new(self.game.clone(), partition)
    }

    /// Different game under the same union structure.
    pub fn with_game(&self, game: ExplicitGame) -> Result<Self> {
        GameWithUnions::new(game, self.partition.clone())
    }
}

/// The quotient game over the unions: a set of unions wins when the pooled
/// players win in the base game.
///
/// A set `R` of unions wins exactly when some minimal winning coalition `M`
/// has all its players inside `R`'s blocks, i.e. `u(M)` is a subset of `R`;
/// the quotient minimal family is therefore the minimized image of `u`.
pub fn quotient_game(gwu: &GameWithUnions) -> ExplicitGame {
    let family: Vec<Coalition> = gwu
        .game()
        .minimal_winning()
        .iter()
        .map(|m| gwu.partition().representatives(m))
        .collect();
    ExplicitGame::new(gwu.partition().union_count(), family)
        .expect("the image of a nonempty minimal family is a valid winning family")
}

/// Whether a winning coalition is irrelevant: its representative set is not
/// minimal in the quotient game. Only winning coalitions qualify; the check
/// is performed against the minimized family of the base game, so a winning
/// non-minimal input is judged by its representatives all the same.
pub fn is_irrelevant(gwu: &GameWithUnions, s: &Coalition) -> Result<bool> {
    if !gwu.game().is_winning(s)? {
        return Err(Error::domain(format!(
            "irrelevance is defined for winning coalitions; {s} loses"
        )));
    }
    let quotient = quotient_game(gwu);
    let r = gwu.partition().representatives(s);
    Ok(!quotient.minimal_winning().contains(&r))
}

/// An internal game: the game played inside one union's block, relabeled to
/// dense ids `0..m`, with the original player ids kept alongside.
#[derive(Clone, Debug)]
pub struct InternalGame {
    /// The internal game over `0..members.len()`.
    pub game: ExplicitGame,
    /// `members[j]` is the original id of internal player `j`, ascending.
    pub members: Vec<PlayerId>,
}

impl InternalGame {
    /// Maps a coalition of internal ids back to original player ids.
    pub fn to_original(&self, s: &Coalition) -> Coalition {
        s.iter().map(|j| self.members[j]).collect()
    }

    /// Maps a coalition of original ids (inside the block) to internal ids.
    pub fn to_internal(&self, s: &Coalition) -> Coalition {
        s.iter()
            .map(|i| {
                self.members
                    .binary_search(&i)
                    .expect("player belongs to the block")
            })
            .collect()
    }
}

/// The internal game of union `k` with respect to a winning union set `r`:
/// a subset of block `k` wins when, pooled with all players of the other
/// unions in `r`, it wins the base game.
///
/// Minimal winners come straight from the base family: `S` wins internally
/// iff some minimal `M` has `M` minus the other blocks inside `S`, so the
/// candidates are those differences and minimizing them is exact.
pub fn internal_game(gwu: &GameWithUnions, r: &Coalition, k: UnionId) -> Result<InternalGame> {
    let partition = gwu.partition();
    if k >= partition.union_count() || r.iter().any(|l| l >= partition.union_count()) {
        return Err(Error::domain("union id out of range"));
    }
    if !r.contains(k) {
        return Err(Error::domain(format!("union {k} is not a member of {r}")));
    }
    let others = partition.union_of_blocks(&r.without(k));
    let block = partition.block(k);
    let mut candidates: Vec<Coalition> = Vec::new();
    let mut empty_wins = false;
    for m in gwu.game().minimal_winning() {
        let inside = m.difference(&others);
        if inside.is_subset(block) {
            if inside.is_empty() {
                empty_wins = true;
                break;
            }
            candidates.push(inside);
        }
    }
    if empty_wins {
        return Err(Error::domain(format!(
            "unions {} already win without {k}; the internal game would let the empty coalition win",
            r.without(k)
        )));
    }
    if candidates.is_empty() {
        return Err(Error::domain(format!(
            "union set {r} loses in the quotient game"
        )));
    }
    let members: Vec<PlayerId> = block.iter().collect();
    let mut index_of = vec![usize::MAX; gwu.player_count()];
    for (j, &i) in members.iter().enumerate() {
        index_of[i] = j;
    }
    let relabeled = candidates
        .into_iter()
        .map(|s| s.iter().map(|i| index_of[i]).collect::<Coalition>());
    Ok(InternalGame {
        game: ExplicitGame::new(members.len(), relabeled)?,
        members,
    })
}

/// The essential coalitions of union `k` with respect to `r`, in original
/// player ids: `minimal` is the internal game's minimal family and
/// `least_size` its least-size subfamily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialFamily {
    pub r: Coalition,
    pub k: UnionId,
    pub minimal: Vec<Coalition>,
    pub least_size: Vec<Coalition>,
}

/// All essential families of the game: one per pair `(R, k)` with `R` a
/// least-size winning coalition of the quotient game and `k` in `R`,
/// sorted by `(R, k)`.
pub fn essential_families(gwu: &GameWithUnions) -> Vec<EssentialFamily> {
    let quotient = quotient_game(gwu);
    let (quotient_ls, _) = quotient.least_size_winning();
    let mut families = Vec::new();
    for r in &quotient_ls {
        for k in r.iter() {
            let internal = internal_game(gwu, r, k)
                .expect("least-size quotient winners have well-formed internal games");
            let minimal: Vec<Coalition> = internal
                .game
                .minimal_winning()
                .iter()
                .map(|s| internal.to_original(s))
                .collect();
            let (ls, _) = internal.game.least_size_winning();
            let least_size: Vec<Coalition> = ls.iter().map(|s| internal.to_original(s)).collect();
            families.push(EssentialFamily {
                r: r.clone(),
                k,
                minimal,
                least_size,
            });
        }
    }
    families
}

/// The set of essential coalitions of least size of the whole game: the
/// union of the least-size families over all `(R, k)` pairs.
pub fn essential_least_size_set(gwu: &GameWithUnions) -> BTreeSet<Coalition> {
    essential_families(gwu)
        .into_iter()
        .flat_map(|f| f.least_size)
        .collect()
}

/// The trace family of union `k` with respect to `r`: the distinct sets
/// `M` intersected with block `k`, over minimal winning `M` whose
/// representatives are exactly `r`.
pub fn trace_family(gwu: &GameWithUnions, r: &Coalition, k: UnionId) -> BTreeSet<Coalition> {
    let block = gwu.partition().block(k);
    gwu.game()
        .minimal_winning()
        .iter()
        .filter(|m| &gwu.partition().representatives(m) == r)
        .map(|m| m.intersection(block))
        .collect()
}

/// For a least-size quotient winner `R`, the internal minimal family equals
/// the minimized trace family: every internal winner contains the trace of
/// some minimal `M` with representatives exactly `R` (an `M` touching fewer
/// unions would contradict `R` having least size). Exposed for cross-checks.
pub fn minimal_essential_from_traces(
    gwu: &GameWithUnions,
    r: &Coalition,
    k: UnionId,
) -> Vec<Coalition> {
    minimize_family(trace_family(gwu, r, k).into_iter().collect())
}

/// A seven-player game in three unions, rich enough to exercise every part
/// of the machinery: its quotient game is the three-union majority game and
/// its internal games range from dictatorships to two-winner races. Used
/// throughout the test suite as a hand-verified fixture.
pub fn seven_player_example() -> GameWithUnions {
    let c = |ids: &[usize]| Coalition::from_ids(ids.iter().copied());
    let game = ExplicitGame::new(
        7,
        [
            c(&[0, 1, 5]),
            c(&[0, 2, 5]),
            c(&[0, 1, 2, 3]),
            c(&[0, 6]),
            c(&[4, 6]),
        ],
    )
    .unwrap();
    let partition = Partition::new(7, vec![c(&[0, 1, 2]), c(&[3, 4, 5]), c(&[6])]).unwrap();
    GameWithUnions::new(game, partition).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coal(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied())
    }

    #[test]
    fn quotient_of_seven_player_example() {
        let gwu = seven_player_example();
        let quotient = quotient_game(&gwu);
        assert_eq!(
            quotient.minimal_winning(),
            &[coal(&[0, 1]), coal(&[0, 2]), coal(&[1, 2])]
        );
        let (ls, summary) = quotient.least_size_winning();
        assert_eq!(ls.len(), 3);
        assert_eq!(summary.c, 2);
    }

    #[test]
    fn quotient_of_trivial_partitions() {
        let gwu = seven_player_example();
        let singles = gwu
            .with_partition(Partition::singletons(7))
            .unwrap();
        assert_eq!(
            quotient_game(&singles).minimal_winning(),
            gwu.game().minimal_winning()
        );
        let grand = gwu.with_partition(Partition::grand(7)).unwrap();
        assert_eq!(quotient_game(&grand).minimal_winning(), &[coal(&[0])]);
    }

    #[test]
    fn internal_games_of_seven_player_example() {
        let gwu = seven_player_example();
        // unions {0,1}: block 0 needs {0,1} or {0,2}; block 1 needs {3} or {5}
        let internal = internal_game(&gwu, &coal(&[0, 1]), 0).unwrap();
        let (ls, _) = internal.game.least_size_winning();
        let ls: Vec<Coalition> = ls.iter().map(|s| internal.to_original(s)).collect();
        assert_eq!(ls, vec![coal(&[0, 1]), coal(&[0, 2])]);

        let internal = internal_game(&gwu, &coal(&[0, 1]), 1).unwrap();
        let (ls, _) = internal.game.least_size_winning();
        let ls: Vec<Coalition> = ls.iter().map(|s| internal.to_original(s)).collect();
        assert_eq!(ls, vec![coal(&[3]), coal(&[5])]);

        // unions {1,2}: block 1 needs {4}; block 2 needs {6}
        let internal = internal_game(&gwu, &coal(&[1, 2]), 1).unwrap();
        let (ls, _) = internal.game.least_size_winning();
        let ls: Vec<Coalition> = ls.iter().map(|s| internal.to_original(s)).collect();
        assert_eq!(ls, vec![coal(&[4])]);
    }

    #[test]
    fn internal_game_rejects_bad_inputs() {
        let gwu = seven_player_example();
        // k outside r
        assert!(internal_game(&gwu, &coal(&[0, 1]), 2).is_err());
        // losing union set
        assert!(internal_game(&gwu, &coal(&[1]), 1).is_err());
    }

    #[test]
    fn grand_internal_game_is_the_base_game() {
        let gwu = seven_player_example();
        let grand = gwu.with_partition(Partition::grand(7)).unwrap();
        let internal = internal_game(&grand, &coal(&[0]), 0).unwrap();
        assert_eq!(
            internal.game.minimal_winning(),
            gwu.game().minimal_winning()
        );
    }

    #[test]
    fn essential_families_of_seven_player_example() {
        let gwu = seven_player_example();
        let families = essential_families(&gwu);
        let as_tuples: Vec<(Coalition, usize, Vec<Coalition>)> = families
            .iter()
            .map(|f| (f.r.clone(), f.k, f.least_size.clone()))
            .collect();
        assert_eq!(
            as_tuples,
            vec![
                (coal(&[0, 1]), 0, vec![coal(&[0, 1]), coal(&[0, 2])]),
                (coal(&[0, 1]), 1, vec![coal(&[3]), coal(&[5])]),
                (coal(&[0, 2]), 0, vec![coal(&[0])]),
                (coal(&[0, 2]), 2, vec![coal(&[6])]),
                (coal(&[1, 2]), 1, vec![coal(&[4])]),
                (coal(&[1, 2]), 2, vec![coal(&[6])]),
            ]
        );
    }

    #[test]
    fn traces_match_internal_minimal_families_on_least_size_winners() {
        let gwu = seven_player_example();
        let quotient = quotient_game(&gwu);
        let (quotient_ls, _) = quotient.least_size_winning();
        for r in &quotient_ls {
            for k in r.iter() {
                let internal = internal_game(&gwu, r, k).unwrap();
                let direct: Vec<Coalition> = internal
                    .game
                    .minimal_winning()
                    .iter()
                    .map(|s| internal.to_original(s))
                    .collect();
                assert_eq!(direct, minimal_essential_from_traces(&gwu, r, k));
            }
        }
    }

    #[test]
    fn irrelevance_detects_non_minimal_representatives() {
        // five players, three blocks; {0,1,4} wins but its representatives
        // {0,1,2} strictly contain the minimal {0,2}
        let game = ExplicitGame::new(
            5,
            [coal(&[0, 4]), coal(&[0, 1, 3]), coal(&[1, 2, 4]), coal(&[0, 1, 4])],
        )
        .unwrap();
        let partition =
            Partition::new(5, vec![coal(&[0]), coal(&[1, 2, 3]), coal(&[4])]).unwrap();
        let gwu = GameWithUnions::new(game, partition).unwrap();
        assert!(is_irrelevant(&gwu, &coal(&[0, 1, 4])).unwrap());
        assert!(!is_irrelevant(&gwu, &coal(&[0, 4])).unwrap());
        assert!(is_irrelevant(&gwu, &coal(&[1, 2])).is_err()); // losing
    }

    #[test]
    fn singleton_partition_has_no_irrelevant_coalitions() {
        let gwu = seven_player_example();
        let singles = gwu.with_partition(Partition::singletons(7)).unwrap();
        for m in singles.game().minimal_winning() {
            assert!(!is_irrelevant(&singles, m).unwrap());
        }
    }
}
