//! Seeded instance generators for the axiom laboratory.
//!
//! Each axiom gets a pool of concrete instances: randomly generated ones,
//! shaped so the axiom's hypothesis holds (by construction where possible,
//! by rejection otherwise), followed by a short curated list of hand-checked
//! instances that are known to expose the deviant indices. Pools are
//! deterministic in the seed, so matrix runs are reproducible.

use super::counterexamples::Psi;
use super::{check, Axiom, Instance};
use crate::coalition::{minimize_family, Coalition};
use crate::game::ExplicitGame;
use crate::partition::Partition;
use crate::unions::{is_irrelevant, seven_player_example, GameWithUnions};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Every simple game on `n` players (`n <= 4`): each nonempty antichain of
/// nonempty subsets of the player set is the minimal winning family of
/// exactly one game.
pub fn all_games(n: usize) -> Vec<ExplicitGame> {
    assert!(
        (1..=4).contains(&n),
        "exhaustive game enumeration is meant for n <= 4"
    );
    let subsets: Vec<Coalition> = (1u32..1 << n).map(coalition_from_mask).collect();
    let mut games = Vec::new();
    for pick in 1u32..1 << subsets.len() {
        let family: Vec<Coalition> = subsets
            .iter()
            .enumerate()
            .filter(|(j, _)| pick >> j & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        if is_antichain(&family) {
            games.push(ExplicitGame::new(n, family).expect("antichains are valid families"));
        }
    }
    games
}

/// Every partition of `n` players (`n <= 4`), via restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    assert!(
        (1..=4).contains(&n),
        "exhaustive partition enumeration is meant for n <= 4"
    );
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    grow(1, 1, &mut assignment, &mut out);
    out
}

fn grow(i: usize, used: usize, assignment: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let n = assignment.len();
    if i == n {
        let blocks: Vec<Coalition> = (0..used)
            .map(|b| {
                (0..n)
                    .filter(|&x| assignment[x] == b)
                    .collect::<Coalition>()
            })
            .collect();
        out.push(Partition::new(n, blocks).expect("growth strings are partitions"));
        return;
    }
    for b in 0..=used {
        assignment[i] = b;
        grow(i + 1, used.max(b + 1), assignment, out);
    }
}

fn is_antichain(family: &[Coalition]) -> bool {
    for (a, s) in family.iter().enumerate() {
        for t in &family[a + 1..] {
            if s.is_subset(t) || t.is_subset(s) {
                return false;
            }
        }
    }
    true
}

fn coalition_from_mask(mask: u32) -> Coalition {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// A random game: a few random nonempty coalitions, minimized.
pub fn random_game(rng: &mut impl Rng, n: usize) -> ExplicitGame {
    let members = rng.gen_range(1..=4);
    let family: Vec<Coalition> =
        (0..members).map(|_| random_nonempty_subset(rng, n)).collect();
    ExplicitGame::new(n, family).expect("random families are valid")
}

fn random_nonempty_subset(rng: &mut impl Rng, n: usize) -> Coalition {
    coalition_from_mask(rng.gen_range(1..1u32 << n))
}

/// A random partition, built by seating players at existing or new blocks
/// with equal probability.
pub fn random_partition(rng: &mut impl Rng, n: usize) -> Partition {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let b = rng.gen_range(0..=blocks.len());
        if b == blocks.len() {
            blocks.push(vec![i]);
        } else {
            blocks[b].push(i);
        }
    }
    Partition::new(
        n,
        blocks
            .into_iter()
            .map(|b| b.into_iter().collect::<Coalition>())
            .collect(),
    )
    .expect("seating assignments are partitions")
}

/// A random partition guaranteed to contain a block of two or more players.
fn random_partition_with_pair(rng: &mut impl Rng, n: usize) -> Partition {
    for _ in 0..32 {
        let p = random_partition(rng, n);
        if p.blocks().iter().any(|b| b.len() >= 2) {
            return p;
        }
    }
    Partition::grand(n)
}

/// A random antichain of subsets of the given player ids.
fn random_antichain_within(rng: &mut impl Rng, ids: &[usize], max_members: usize) -> Vec<Coalition> {
    let members = rng.gen_range(1..=max_members);
    let family: Vec<Coalition> = (0..members)
        .map(|_| loop {
            let s: Coalition = ids.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if !s.is_empty() {
                break s;
            }
        })
        .collect();
    minimize_family(family)
}

fn triple(game: ExplicitGame, partition: Partition) -> GameWithUnions {
    GameWithUnions::new(game, partition).expect("generated games match their partitions")
}

/// One candidate instance for the axiom, shaped towards its hypothesis.
/// `None` when the strategy found nothing usable this round.
fn candidate(axiom: Axiom, rng: &mut ChaCha8Rng) -> Option<Instance> {
    match axiom {
        Axiom::Nonnegativity | Axiom::Efficiency | Axiom::QuotientGame => {
            let n = rng.gen_range(3..=6);
            Some(Instance::Single(triple(
                random_game(rng, n),
                random_partition(rng, n),
            )))
        }
        Axiom::CoincidenceWithFelsenthal => {
            let n = rng.gen_range(3..=6);
            Some(Instance::Single(triple(
                random_game(rng, n),
                Partition::singletons(n),
            )))
        }
        Axiom::ProportionalityOverEssentials => {
            let n = rng.gen_range(3..=6);
            Some(Instance::Single(triple(
                random_game(rng, n),
                random_partition_with_pair(rng, n),
            )))
        }
        Axiom::NullPlayer => {
            // keep one player out of every winning coalition
            let n = rng.gen_range(3..=6);
            let null = rng.gen_range(0..n);
            let others: Vec<usize> = (0..n).filter(|&i| i != null).collect();
            let family = random_antichain_within(rng, &others, 4);
            Some(Instance::Single(triple(
                ExplicitGame::new(n, family).expect("valid family"),
                random_partition(rng, n),
            )))
        }
        Axiom::SymmetryAmongUnions => {
            let n = rng.gen_range(3..=6);
            let p = random_partition(rng, n);
            let game = random_game(rng, n);
            if rng.gen_bool(0.5) {
                // organic: keep only if the quotient happens to have a
                // symmetric pair (the applicability filter decides)
                return Some(Instance::Single(triple(game, p)));
            }
            // symmetrized: overlay the game with its image under a block swap
            let pairs: Vec<(usize, usize)> = (0..p.union_count())
                .flat_map(|k| ((k + 1)..p.union_count()).map(move |l| (k, l)))
                .filter(|&(k, l)| p.block(k).len() == p.block(l).len())
                .collect();
            let &(k, l) = pairs.as_slice().choose(rng)?;
            let mut map: Vec<usize> = (0..n).collect();
            for (a, b) in p.block(k).iter().zip(p.block(l).iter()) {
                map[a] = b;
                map[b] = a;
            }
            let swapped = game.relabel(&map).expect("swaps are bijections");
            let overlay = game
                .minimal_winning()
                .iter()
                .chain(swapped.minimal_winning())
                .cloned();
            Some(Instance::Single(triple(
                ExplicitGame::new(n, overlay).expect("valid family"),
                p,
            )))
        }
        Axiom::SymmetryInsideUnions => {
            let n = rng.gen_range(3..=6);
            let p = random_partition_with_pair(rng, n);
            let game = random_game(rng, n);
            if rng.gen_bool(0.5) {
                return Some(Instance::Single(triple(game, p)));
            }
            // symmetrized: overlay the game with its image under a
            // transposition of two players from one block
            let k = (0..p.union_count()).find(|&k| p.block(k).len() >= 2)?;
            let members: Vec<usize> = p.block(k).iter().collect();
            let i = *members.as_slice().choose(rng)?;
            let others: Vec<usize> = members.iter().copied().filter(|&x| x != i).collect();
            let j = *others.as_slice().choose(rng)?;
            let mut map: Vec<usize> = (0..n).collect();
            map[i] = j;
            map[j] = i;
            let swapped = game.relabel(&map).expect("swaps are bijections");
            let overlay = game
                .minimal_winning()
                .iter()
                .chain(swapped.minimal_winning())
                .cloned();
            Some(Instance::Single(triple(
                ExplicitGame::new(n, overlay).expect("valid family"),
                p,
            )))
        }
        Axiom::TransferAmongUnions => {
            let n = rng.gen_range(3..=6);
            let p = random_partition(rng, n);
            if rng.gen_bool(0.5) {
                // split one antichain into two sides whose disjunction
                // reproduces it exactly
                let family = random_antichain_within(rng, &(0..n).collect::<Vec<_>>(), 4);
                if family.len() < 2 {
                    return None;
                }
                let mut shuffled = family;
                shuffled.shuffle(rng);
                let cut = rng.gen_range(1..shuffled.len());
                let (a, b) = shuffled.split_at(cut);
                return Some(Instance::Pair {
                    w: triple(ExplicitGame::new(n, a.to_vec()).expect("valid"), p.clone()),
                    v: triple(ExplicitGame::new(n, b.to_vec()).expect("valid"), p),
                });
            }
            Some(Instance::Pair {
                w: triple(random_game(rng, n), p.clone()),
                v: triple(random_game(rng, n), p),
            })
        }
        Axiom::TransferInsideUnions => {
            let n = rng.gen_range(3..=6);
            let p = random_partition_with_pair(rng, n);
            let k = (0..p.union_count()).max_by_key(|&k| p.block(k).len())?;
            let ids: Vec<usize> = p.block(k).iter().collect();
            let a = random_antichain_within(rng, &ids, 2);
            let b = random_antichain_within(rng, &ids, 2);
            Some(Instance::Pair {
                w: triple(ExplicitGame::new(n, a).expect("valid"), p.clone()),
                v: triple(ExplicitGame::new(n, b).expect("valid"), p),
            })
        }
        Axiom::IrrelevantCoalitions => {
            let n = rng.gen_range(4..=6);
            let mut p = random_partition(rng, n);
            for _ in 0..16 {
                if (2..=3).contains(&p.union_count()) {
                    break;
                }
                p = random_partition(rng, n);
            }
            let game = random_game(rng, n);
            let gwu = triple(game, p);
            let removable: Vec<Coalition> = gwu
                .game()
                .minimal_winning()
                .iter()
                .filter(|m| is_irrelevant(&gwu, m).expect("minimal winners win"))
                .cloned()
                .collect();
            let removed = removable.as_slice().choose(rng)?.clone();
            Some(Instance::Removal { base: gwu, removed })
        }
        Axiom::LeastSizeInvariance => {
            // product construction: pick per-union antichains F_k for the
            // unions of R; the compound side's minimal winners are all the
            // unions of one choice from each F_k, the decomposed side's are
            // the F_k members themselves (optionally trimmed to least size)
            let u = rng.gen_range(2..=3);
            let sizes: Vec<usize> = (0..u).map(|_| rng.gen_range(1..=3)).collect();
            let n: usize = sizes.iter().sum();
            let mut blocks = Vec::new();
            let mut next = 0;
            for &s in &sizes {
                blocks.push((next..next + s).collect::<Coalition>());
                next += s;
            }
            let p = Partition::new(n, blocks).expect("consecutive blocks partition the players");
            let r_len = rng.gen_range(2..=u);
            let mut unions: Vec<usize> = (0..u).collect();
            unions.shuffle(rng);
            let r: Vec<usize> = {
                let mut r = unions[..r_len].to_vec();
                r.sort_unstable();
                r
            };
            let families: Vec<Vec<Coalition>> = r
                .iter()
                .map(|&k| {
                    let ids: Vec<usize> = p.block(k).iter().collect();
                    random_antichain_within(rng, &ids, 3)
                })
                .collect();
            let mut compound = vec![Coalition::empty()];
            for f in &families {
                compound = compound
                    .iter()
                    .flat_map(|acc| f.iter().map(move |s| acc.union(s)))
                    .collect();
            }
            let decomposed: Vec<Coalition> = if rng.gen_bool(0.5) {
                families.iter().flatten().cloned().collect()
            } else {
                families
                    .iter()
                    .flat_map(|f| {
                        let c = f.iter().map(Coalition::len).min().expect("nonempty");
                        f.iter().filter(move |s| s.len() == c).cloned()
                    })
                    .collect()
            };
            Some(Instance::Pair {
                w: triple(ExplicitGame::new(n, compound).expect("valid"), p.clone()),
                v: triple(ExplicitGame::new(n, decomposed).expect("valid"), p),
            })
        }
    }
}

/// Hand-checked instances appended to every pool. They are the instances on
/// which the deviant indices are known to go wrong, so the independence
/// matrices do not depend on the random stream finding them.
fn curated(axiom: Axiom) -> Vec<Instance> {
    let g = |n: usize, fam: &[&[usize]], blocks: &[&[usize]]| -> GameWithUnions {
        triple(
            ExplicitGame::new(n, fam.iter().map(|s| s.iter().copied().collect()))
                .expect("curated games are valid"),
            Partition::new(n, blocks.iter().map(|b| b.iter().copied().collect()).collect())
                .expect("curated partitions are valid"),
        )
    };
    let single = |n, fam: &[&[usize]], blocks: &[&[usize]]| Instance::Single(g(n, fam, blocks));
    let pair = |n, wf: &[&[usize]], vf: &[&[usize]], blocks: &[&[usize]]| Instance::Pair {
        w: g(n, wf, blocks),
        v: g(n, vf, blocks),
    };
    match axiom {
        // an all-null union, where one index dips below zero
        Axiom::Nonnegativity => vec![single(4, &[&[0, 1]], &[&[0, 1], &[2, 3]])],
        Axiom::CoincidenceWithFelsenthal => {
            vec![single(3, &[&[0, 1], &[0, 2]], &[&[0], &[1], &[2]])]
        }
        // a union that wins on its own but joins no least-size quotient winner
        Axiom::QuotientGame => vec![single(4, &[&[0, 1], &[2, 3]], &[&[0, 1], &[2], &[3]])],
        // an internal game with minimal winners of two different sizes
        Axiom::ProportionalityOverEssentials => {
            vec![single(4, &[&[0, 1, 3], &[2, 3]], &[&[0, 1, 2], &[3]])]
        }
        Axiom::Efficiency => vec![Instance::Single(seven_player_example())],
        Axiom::NullPlayer => vec![single(3, &[&[0, 1]], &[&[0, 1], &[2]])],
        // a two-player unanimity game: the unions are symmetric in the quotient
        Axiom::SymmetryAmongUnions => vec![single(2, &[&[0, 1]], &[&[0], &[1]])],
        // grand-union unanimity games: all players symmetric, one block
        Axiom::SymmetryInsideUnions => vec![
            single(2, &[&[0, 1]], &[&[0, 1]]),
            single(3, &[&[0, 1, 2]], &[&[0, 1, 2]]),
        ],
        Axiom::TransferAmongUnions => vec![
            // dictator against a pair of single-player winners
            pair(3, &[&[0]], &[&[1], &[2]], &[&[0], &[1], &[2]]),
            // two unanimity sides meeting at a shared vetoer
            pair(5, &[&[0, 4]], &[&[0, 1, 2, 3]], &[&[0], &[1, 2, 3], &[4]]),
            // a slow unanimity side against a faster two-winner side
            pair(
                5,
                &[&[0, 1, 4]],
                &[&[0, 1, 3], &[1, 2, 4]],
                &[&[0], &[1, 2, 3], &[4]],
            ),
        ],
        Axiom::TransferInsideUnions => vec![
            pair(3, &[&[0]], &[&[1], &[2]], &[&[0, 1, 2]]),
            pair(3, &[&[0, 1]], &[&[0, 2]], &[&[0, 1, 2]]),
            pair(3, &[&[0]], &[&[1, 2]], &[&[0, 1, 2]]),
        ],
        Axiom::IrrelevantCoalitions => vec![Instance::Removal {
            base: g(
                5,
                &[&[0, 1, 3], &[1, 2, 4], &[0, 1, 4]],
                &[&[0], &[1, 2, 3], &[4]],
            ),
            removed: [0, 1, 4].into_iter().collect(),
        }],
        Axiom::LeastSizeInvariance => vec![
            // a grand unanimity winner against its per-union decomposition
            pair(3, &[&[0, 1, 2]], &[&[0, 1], &[2]], &[&[0, 1], &[2]]),
            // a compound with mixed-size internal winners against the
            // least-size decomposition
            pair(
                4,
                &[&[0, 1, 3], &[2, 3]],
                &[&[2], &[3]],
                &[&[0, 1, 2], &[3]],
            ),
            // a two-union compound whose redundant third winner disappears
            // from the least-size essentials
            pair(
                6,
                &[&[0, 1, 4], &[2, 3, 5], &[0, 1, 5]],
                &[&[0, 1], &[2, 3], &[4], &[5]],
                &[&[0, 1, 2, 3], &[4, 5]],
            ),
        ],
    }
}

/// Whether the axiom's hypothesis holds on the instance. Applicability only
/// depends on the instance, so any total index serves as the probe.
fn applicable(axiom: Axiom, instance: &Instance) -> bool {
    matches!(check(&Psi, axiom, instance), Ok(a) if a.is_applicable())
}

/// A deterministic pool of at least `count` applicable instances for the
/// axiom (random ones first, curated ones at the end).
pub fn pool(axiom: Axiom, seed: u64, count: usize) -> Vec<Instance> {
    let salt = (axiom as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(salt));
    let tail = curated(axiom);
    let mut out = Vec::with_capacity(count + tail.len());
    let budget = count.saturating_mul(400).max(10_000);
    let mut attempts = 0;
    while out.len() + tail.len() < count && attempts < budget {
        attempts += 1;
        if let Some(inst) = candidate(axiom, &mut rng) {
            if applicable(axiom, &inst) {
                out.push(inst);
            }
        }
    }
    out.extend(tail);
    out
}

/// The twelve axioms in presentation order.
pub fn all_axioms() -> [Axiom; 12] {
    [
        Axiom::Nonnegativity,
        Axiom::CoincidenceWithFelsenthal,
        Axiom::QuotientGame,
        Axiom::ProportionalityOverEssentials,
        Axiom::Efficiency,
        Axiom::NullPlayer,
        Axiom::SymmetryAmongUnions,
        Axiom::SymmetryInsideUnions,
        Axiom::TransferAmongUnions,
        Axiom::TransferInsideUnions,
        Axiom::IrrelevantCoalitions,
        Axiom::LeastSizeInvariance,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts_match_the_combinatorics() {
        // nonempty antichains of nonempty subsets
        assert_eq!(all_games(1).len(), 1);
        assert_eq!(all_games(2).len(), 4);
        assert_eq!(all_games(3).len(), 18);
        assert_eq!(all_games(4).len(), 166);
        // Bell numbers
        assert_eq!(all_partitions(1).len(), 1);
        assert_eq!(all_partitions(2).len(), 2);
        assert_eq!(all_partitions(3).len(), 5);
        assert_eq!(all_partitions(4).len(), 15);
    }

    #[test]
    fn pools_are_deterministic() {
        for axiom in all_axioms() {
            let a = pool(axiom, 11, 8);
            let b = pool(axiom, 11, 8);
            assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                assert_eq!(x.describe(), y.describe(), "{axiom}");
            }
        }
    }

    #[test]
    fn pools_reach_their_size_and_stay_applicable() {
        for axiom in all_axioms() {
            let instances = pool(axiom, 3, 12);
            assert!(
                instances.len() >= 12,
                "{axiom} pool holds {} instances",
                instances.len()
            );
            for inst in &instances {
                assert!(
                    applicable(axiom, inst),
                    "{axiom} pool holds an inapplicable instance: {}",
                    inst.describe()
                );
            }
        }
    }

    #[test]
    fn curated_instances_are_applicable() {
        for axiom in all_axioms() {
            for inst in curated(axiom) {
                assert!(
                    applicable(axiom, &inst),
                    "curated {axiom} instance is inapplicable: {}",
                    inst.describe()
                );
            }
        }
    }
}
