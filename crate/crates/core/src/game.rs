use crate::coalition::{minimize_family, Coalition, PlayerId};
use crate::error::{Error, Result};
use std::fmt;

/// Default player-count bound for operations that enumerate coalitions of a
/// weighted game.
pub const ENUMERATION_BOUND: usize = 25;

/// A simple game given by its player count and the antichain of minimal
/// winning coalitions.
///
/// Construction always reduces the provided family to an antichain, so the
/// stored `minimal_winning` family is minimal even when the input is not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExplicitGame {
    n: usize,
    // invariant: nonempty antichain of nonempty subsets of 0..n, sorted
    minimal: Vec<Coalition>,
}

impl ExplicitGame {
    /// Builds a game from any family of winning coalitions. The family is
    /// minimized; it must be nonempty (the grand coalition must win) and must
    /// not contain the empty coalition (the empty coalition must lose).
    pub fn new<I>(n: usize, winning_family: I) -> Result<Self>
    where
        I: IntoIterator<Item = Coalition>,
    {
        let family: Vec<Coalition> = winning_family.into_iter().collect();
        if family.is_empty() {
            return Err(Error::domain("winning family must be nonempty"));
        }
        for s in &family {
            if s.is_empty() {
                return Err(Error::domain("the empty coalition cannot win"));
            }
            if let Some(max) = s.max_id() {
                if max >= n {
                    return Err(Error::domain(format!(
                        "player {max} out of range for n={n}"
                    )));
                }
            }
        }
        Ok(ExplicitGame {
            n,
            minimal: minimize_family(family),
        })
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    pub fn players(&self) -> impl Iterator<Item = PlayerId> {
        0..self.n
    }

    /// The antichain of minimal winning coalitions, sorted by size then id.
    pub fn minimal_winning(&self) -> &[Coalition] {
        &self.minimal
    }

    pub fn is_winning(&self, s: &Coalition) -> Result<bool> {
        check_ids(self.n, s)?;
        Ok(self.minimal.iter().any(|m| m.is_subset(s)))
    }

    /// Winning coalitions of least size, plus the summary counts.
    pub fn least_size_winning(&self) -> (Vec<Coalition>, LeastSizeSummary) {
        let c = self.minimal.iter().map(Coalition::len).min().expect("nonempty");
        let ls: Vec<Coalition> = self
            .minimal
            .iter()
            .filter(|s| s.len() == c)
            .cloned()
            .collect();
        let mut per_player = vec![0u64; self.n];
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
        summary.check().expect("counts from an explicit family are consistent");
        (ls, summary)
    }

    /// Relabels players by `map[old] = new`, which must be a bijection on 0..n.
    pub fn relabel(&self, map: &[PlayerId]) -> Result<ExplicitGame> {
        if map.len() != self.n {
            return Err(Error::domain("relabel map length mismatch"));
        }
        ExplicitGame::new(
            self.n,
            self.minimal
                .iter()
                .map(|s| s.iter().map(|i| map[i]).collect::<Coalition>()),
        )
    }
}

impl fmt::Debug for ExplicitGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExplicitGame(n={}, W^m={:?})", self.n, self.minimal)
    }
}

/// A weighted voting game `[q; w_1..w_n]`: a coalition wins when its total
/// weight reaches the quota.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGame {
    quota: u64,
    weights: Vec<u64>,
}

impl WeightedGame {
    pub fn new(quota: u64, weights: Vec<u64>) -> Result<Self> {
        let total: u64 = weights
            .iter()
            .try_fold(0u64, |acc, w| acc.checked_add(*w))
            .ok_or_else(|| Error::domain("total weight overflows u64"))?;
        if quota == 0 {
            return Err(Error::domain("quota must be positive (the empty coalition must lose)"));
        }
        if quota > total {
            return Err(Error::domain(format!(
                "quota {quota} exceeds total weight {total} (the grand coalition must win)"
            )));
        }
        Ok(WeightedGame { quota, weights })
    }

    pub fn quota(&self) -> u64 {
        self.quota
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn player_count(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weight_of(&self, s: &Coalition) -> u64 {
        s.iter().map(|i| self.weights[i]).sum()
    }

    pub fn is_winning(&self, s: &Coalition) -> Result<bool> {
        check_ids(self.player_count(), s)?;
        Ok(self.weight_of(s) >= self.quota)
    }

    /// Enumerates the minimal winning coalitions and returns the game in
    /// explicit form. Bounded because the family can be exponential.
    pub fn to_explicit(&self, bound: usize) -> Result<ExplicitGame> {
        let n = self.player_count();
        if n > bound {
            return Err(Error::capacity(format!(
                "minimal-winning enumeration needs n <= {bound}, got {n}; use the counting backend"
            )));
        }
        // order players by descending weight so the search can prune: once a
        // branch cannot reach the quota with everything left, it is dead
        let mut order: Vec<PlayerId> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.weights[i]), i));
        // zero-weight players never appear in a minimal winning coalition
        // (dropping one keeps the weight, so the set was not minimal)
        let order: Vec<PlayerId> = order.into_iter().filter(|&i| self.weights[i] > 0).collect();
        let suffix_total: Vec<u64> = {
            let mut v = vec![0u64; order.len() + 1];
            for idx in (0..order.len()).rev() {
                v[idx] = v[idx + 1] + self.weights[order[idx]];
            }
            v
        };
        let mut found: Vec<Coalition> = Vec::new();
        let mut members: Vec<PlayerId> = Vec::new();
        // depth-first over include/exclude; a branch stops as soon as it wins,
        // because supersets of a winning set are never minimal
        fn dfs(
            game: &WeightedGame,
            order: &[PlayerId],
            suffix_total: &[u64],
            idx: usize,
            acc_weight: u64,
            min_member_weight: u64,
            members: &mut Vec<PlayerId>,
            found: &mut Vec<Coalition>,
        ) {
            if acc_weight >= game.quota {
                // minimal iff even dropping the lightest member loses
                if acc_weight - min_member_weight < game.quota {
                    found.push(Coalition::from_ids(members.iter().copied()));
                }
                return;
            }
            if idx == order.len() || acc_weight + suffix_total[idx] < game.quota {
                return;
            }
            let i = order[idx];
            members.push(i);
            dfs(
                game,
                order,
                suffix_total,
                idx + 1,
                acc_weight + game.weights[i],
                min_member_weight.min(game.weights[i]),
                members,
                found,
            );
            members.pop();
            dfs(
                game,
                order,
                suffix_total,
                idx + 1,
                acc_weight,
                min_member_weight,
                members,
                found,
            );
        }
        dfs(
            self,
            &order,
            &suffix_total,
            0,
            0,
            u64::MAX,
            &mut members,
            &mut found,
        );
        ExplicitGame::new(n, found)
    }
}

/// Either representation of a simple game.
#[derive(Clone, Debug)]
pub enum SimpleGame {
    Explicit(ExplicitGame),
    Weighted(WeightedGame),
}

impl SimpleGame {
    pub fn player_count(&self) -> usize {
        match self {
            SimpleGame::Explicit(g) => g.player_count(),
            SimpleGame::Weighted(g) => g.player_count(),
        }
    }

    pub fn is_winning(&self, s: &Coalition) -> Result<bool> {
        match self {
            SimpleGame::Explicit(g) => g.is_winning(s),
            SimpleGame::Weighted(g) => g.is_winning(s),
        }
    }
}

/// Counts describing the least-size winning coalitions of a game:
/// `c` is the least winning size, `p` the number of winning coalitions of
/// that size, and `per_player[i]` how many of them contain player `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeastSizeSummary {
    pub c: usize,
    pub p: u64,
    pub per_player: Vec<u64>,
}

impl LeastSizeSummary {
    /// Internal consistency: every least-size coalition has exactly `c`
    /// members, so the membership counts add up to `p * c`.
    pub fn check(&self) -> Result<()> {
        if self.c == 0 || self.c > self.per_player.len() {
            return Err(Error::internal(format!(
                "least size {} out of range for n={}",
                self.c,
                self.per_player.len()
            )));
        }
        if self.p == 0 {
            return Err(Error::internal("no least-size winning coalition counted"));
        }
        let total: u64 = self.per_player.iter().sum();
        if total != self.p * self.c as u64 {
            return Err(Error::internal(format!(
                "membership counts sum to {total}, expected p*c = {}",
                self.p * self.c as u64
            )));
        }
        Ok(())
    }
}

/// The role of a player as read off the minimal winning family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlayerRole {
    /// Member of no minimal winning coalition.
    Null,
    /// The sole minimal winning coalition is this player alone.
    Dictator,
    /// Member of every minimal winning coalition (dictators are reported as
    /// dictators, which implies vetoer).
    Vetoer,
    Regular,
}

pub fn classify_player(game: &ExplicitGame, i: PlayerId) -> PlayerRole {
    let family = game.minimal_winning();
    let in_all = family.iter().all(|s| s.contains(i));
    let in_none = family.iter().all(|s| !s.contains(i));
    if in_none {
        PlayerRole::Null
    } else if family.len() == 1 && family[0] == Coalition::singleton(i) {
        PlayerRole::Dictator
    } else if in_all {
        PlayerRole::Vetoer
    } else {
        PlayerRole::Regular
    }
}

/// Whether swapping `i` and `j` maps the winning family onto itself.
/// Equivalent to: for every `S` avoiding both, `S+i` wins iff `S+j` wins.
pub fn are_symmetric(game: &ExplicitGame, i: PlayerId, j: PlayerId) -> bool {
    if i == j {
        return true;
    }
    let swapped: Vec<Coalition> = game
        .minimal_winning()
        .iter()
        .map(|s| {
            s.iter()
                .map(|x| {
                    if x == i {
                        j
                    } else if x == j {
                        i
                    } else {
                        x
                    }
                })
                .collect::<Coalition>()
        })
        .collect();
    let mut swapped = swapped;
    swapped.sort();
    swapped == game.minimal_winning()
}

/// The unanimity game of `s`: the only minimal winning coalition is `s`.
pub fn unanimity_game(n: usize, s: &Coalition) -> Result<ExplicitGame> {
    if s.is_empty() {
        return Err(Error::domain("unanimity game needs a nonempty coalition"));
    }
    ExplicitGame::new(n, [s.clone()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// A coalition wins when it wins in either operand.
    Disjunction,
    /// A coalition wins when it wins in both operands.
    Conjunction,
}

/// Result of combining two games, carrying a flag for the textbook shortcut.
///
/// The shortcut families (union of the minimal families for a disjunction,
/// intersection for a conjunction) are only sometimes the true minimal
/// family of the combined game. `shortcut_family_exact` reports whether they
/// were here, so callers relying on the shortcut can tell instead of being
/// silently corrected.
#[derive(Clone, Debug)]
pub struct Combined {
    pub game: ExplicitGame,
    pub shortcut_family_exact: bool,
}

pub fn combine(a: &ExplicitGame, b: &ExplicitGame, mode: CombineMode) -> Result<Combined> {
    if a.player_count() != b.player_count() {
        return Err(Error::domain("combined games must share the player set"));
    }
    let (game, shortcut): (ExplicitGame, Vec<Coalition>) = match mode {
        CombineMode::Disjunction => {
            // a set wins in the disjunction iff it contains a minimal winner
            // of either operand, so minimizing the union family is exact
            let family: Vec<Coalition> = a
                .minimal_winning()
                .iter()
                .chain(b.minimal_winning())
                .cloned()
                .collect();
            let mut shortcut = family.clone();
            shortcut.sort();
            shortcut.dedup();
            (ExplicitGame::new(a.player_count(), family)?, shortcut)
        }
        CombineMode::Conjunction => {
            // wins in both iff it contains some A from a and some B from b,
            // i.e. contains A union B for some pair
            let family: Vec<Coalition> = a
                .minimal_winning()
                .iter()
                .flat_map(|x| b.minimal_winning().iter().map(move |y| x.union(y)))
                .collect();
            let mut shortcut: Vec<Coalition> = a
                .minimal_winning()
                .iter()
                .filter(|s| b.minimal_winning().contains(s))
                .cloned()
                .collect();
            shortcut.sort();
            (ExplicitGame::new(a.player_count(), family)?, shortcut)
        }
    };
    let shortcut_family_exact = game.minimal_winning() == shortcut.as_slice();
    Ok(Combined {
        game,
        shortcut_family_exact,
    })
}

/// Disjunction, discarding the shortcut flag.
pub fn disjunction(a: &ExplicitGame, b: &ExplicitGame) -> Result<ExplicitGame> {
    Ok(combine(a, b, CombineMode::Disjunction)?.game)
}

pub(crate) fn check_ids(n: usize, s: &Coalition) -> Result<()> {
    if let Some(max) = s.max_id() {
        if max >= n {
            return Err(Error::domain(format!("player {max} out of range for n={n}")));
        }
    }
    Ok(())
}
