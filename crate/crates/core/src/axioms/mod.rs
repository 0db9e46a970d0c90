//! Executable axioms for coalitional power indices.
//!
//! Each axiom from the two characterizations of the Felsenthal-Owen index
//! is a checkable predicate on concrete games: single games, pairs of games
//! sharing a partition, or a game plus a removable minimal winning
//! coalition. Checks distinguish "satisfied", "violated" (with a witness
//! message), and "not applicable" (the axiom's hypothesis does not hold on
//! the instance), so vacuous passes are never counted as evidence.

pub mod counterexamples;
pub mod generators;
pub mod matrix;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{are_symmetric, classify_player, ExplicitGame, PlayerRole};
use crate::indices::PowerVector;
use crate::partition::Partition;
use crate::unions::{internal_game, quotient_game, GameWithUnions};
use num::{BigRational, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A power index for games with a priori unions, as a total function.
pub trait CoalitionalIndex: Sync {
    /// Short lowercase identifier, e.g. `"psi"` or `"f7"`.
    fn name(&self) -> &'static str;
    /// The full power vector of the game.
    fn eval(&self, game: &GameWithUnions) -> Result<PowerVector>;
}

/// The twelve axioms, identified by the short codes used in their
/// characterizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// NN: every value is nonnegative.
    Nonnegativity,
    /// CFI: under the singleton partition the index is the Felsenthal index.
    CoincidenceWithFelsenthal,
    /// QG: evaluating the quotient game (with singleton unions) per union
    /// equals the block sums of the original game.
    QuotientGame,
    /// PELS: within a union, values are proportional to the summed internal
    /// values across the least-size quotient winners through that union.
    ProportionalityOverEssentials,
    /// E: values sum to one.
    Efficiency,
    /// NP: null players get zero.
    NullPlayer,
    /// S-AU: unions symmetric in the quotient game have equal block sums.
    SymmetryAmongUnions,
    /// S-IU: symmetric players in the same union have equal values.
    SymmetryInsideUnions,
    /// TCLS-AU: transfer over disjunctions whose quotient least-size
    /// families are disjoint.
    TransferAmongUnions,
    /// TCLS-IU: transfer over disjunctions of games confined to one union
    /// with disjoint least-size families.
    TransferInsideUnions,
    /// IIC: dropping a minimal winning coalition whose union image is not a
    /// minimal quotient winner leaves the index unchanged.
    IrrelevantCoalitions,
    /// ILSE: a single least-size quotient winner may be decomposed into its
    /// unions without changing the index, provided the essential least-size
    /// structure is preserved.
    LeastSizeInvariance,
}

impl Axiom {
    /// The short code used in reports and tables.
    pub fn code(self) -> &'static str {
        match self {
            Axiom::Nonnegativity => "NN",
            Axiom::CoincidenceWithFelsenthal => "CFI",
            Axiom::QuotientGame => "QG",
            Axiom::ProportionalityOverEssentials => "PELS",
            Axiom::Efficiency => "E",
            Axiom::NullPlayer => "NP",
            Axiom::SymmetryAmongUnions => "S-AU",
            Axiom::SymmetryInsideUnions => "S-IU",
            Axiom::TransferAmongUnions => "TCLS-AU",
            Axiom::TransferInsideUnions => "TCLS-IU",
            Axiom::IrrelevantCoalitions => "IIC",
            Axiom::LeastSizeInvariance => "ILSE",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One concrete situation an axiom can be checked on.
#[derive(Clone, Debug)]
pub enum Instance {
    /// A single game with unions.
    Single(GameWithUnions),
    /// Two games over the same players and the same partition.
    Pair {
        w: GameWithUnions,
        v: GameWithUnions,
    },
    /// A game plus one of its minimal winning coalitions to drop.
    Removal {
        base: GameWithUnions,
        removed: Coalition,
    },
}

impl Instance {
    /// Compact description for witness messages.
    pub fn describe(&self) -> String {
        match self {
            Instance::Single(g) => describe_game(g),
            Instance::Pair { w, v } => format!(
                "W: {} | V: {}",
                describe_game(w),
                describe_game(v)
            ),
            Instance::Removal { base, removed } => {
                format!("{} minus {removed}", describe_game(base))
            }
        }
    }
}

fn describe_game(g: &GameWithUnions) -> String {
    let family = g
        .game()
        .minimal_winning()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("W^m=[{family}] P={}", g.partition())
}

/// Outcome of checking one axiom on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Applicability {
    /// Hypothesis held and the conclusion checked out.
    Satisfied,
    /// Hypothesis held but the conclusion failed; the message is a witness.
    Violated(String),
    /// The instance does not satisfy the axiom's hypothesis.
    NotApplicable(String),
}

impl Applicability {
    pub fn is_violated(&self) -> bool {
        matches!(self, Applicability::Violated(_))
    }
    pub fn is_applicable(&self) -> bool {
        !matches!(self, Applicability::NotApplicable(_))
    }
}

/// Checks `axiom` for `index` on `instance`. Instances of the wrong shape
/// (a pair axiom on a single game, and so on) are rejected as errors, not
/// counted as vacuous.
pub fn check(
    index: &dyn CoalitionalIndex,
    axiom: Axiom,
    instance: &Instance,
) -> Result<Applicability> {
    match (axiom, instance) {
        (Axiom::Nonnegativity, Instance::Single(g)) => check_nonnegativity(index, g),
        (Axiom::CoincidenceWithFelsenthal, Instance::Single(g)) => check_coincidence(index, g),
        (Axiom::QuotientGame, Instance::Single(g)) => check_quotient_game(index, g),
        (Axiom::ProportionalityOverEssentials, Instance::Single(g)) => {
            check_proportionality(index, g)
        }
        (Axiom::Efficiency, Instance::Single(g)) => check_efficiency(index, g),
        (Axiom::NullPlayer, Instance::Single(g)) => check_null_player(index, g),
        (Axiom::SymmetryAmongUnions, Instance::Single(g)) => check_symmetry_among(index, g),
        (Axiom::SymmetryInsideUnions, Instance::Single(g)) => check_symmetry_inside(index, g),
        (Axiom::TransferAmongUnions, Instance::Pair { w, v }) => check_transfer_among(index, w, v),
        (Axiom::TransferInsideUnions, Instance::Pair { w, v }) => {
            check_transfer_inside(index, w, v)
        }
        (Axiom::IrrelevantCoalitions, Instance::Removal { base, removed }) => {
            check_irrelevant(index, base, removed)
        }
        (Axiom::LeastSizeInvariance, Instance::Pair { w, v }) => check_least_size(index, w, v),
        _ => Err(Error::domain(format!(
            "axiom {axiom} cannot be checked on this instance shape"
        ))),
    }
}

fn check_nonnegativity(index: &dyn CoalitionalIndex, g: &GameWithUnions) -> Result<Applicability> {
    let v = index.eval(g)?;
    for (i, x) in v.values.iter().enumerate() {
        if x < &BigRational::zero() {
            return Ok(Applicability::Violated(format!(
                "player {i} gets {x} in {}",
                describe_game(g)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

fn check_coincidence(index: &dyn CoalitionalIndex, g: &GameWithUnions) -> Result<Applicability> {
    if !g.partition().is_singletons() {
        return Ok(Applicability::NotApplicable(
            "partition is not the singleton partition".into(),
        ));
    }
    let got = index.eval(g)?;
    let want = crate::indices::felsenthal(g.game());
    for i in 0..g.player_count() {
        if got.values[i] != want.values[i] {
            return Ok(Applicability::Violated(format!(
                "player {i} gets {} but the Felsenthal index gives {} in {}",
                got.values[i],
                want.values[i],
                describe_game(g)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

fn check_quotient_game(index: &dyn CoalitionalIndex, g: &GameWithUnions) -> Result<Applicability> {
    let values = index.eval(g)?;
    let quotient = quotient_game(g);
    let u = g.partition().union_count();
    let quotient_with_unions = GameWithUnions::new(quotient, Partition::singletons(u))?;
    let quotient_values = index.eval(&quotient_with_unions)?;
    for k in 0..u {
        let block_sum: BigRational = g
            .partition()
            .block(k)
            .iter()
            .map(|i| values.values[i].clone())
            .sum();
        if quotient_values.values[k] != block_sum {
            return Ok(Applicability::Violated(format!(
                "union {k} gets {} in the quotient but its block sums to {} in {}",
                quotient_values.values[k],
                block_sum,
                describe_game(g)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

/// The summed internal value of player `i` across the least-size quotient
/// winners through its union: each term evaluates the index on the internal
/// game of the block under the singleton partition.
fn internal_sum(
    index: &dyn CoalitionalIndex,
    g: &GameWithUnions,
    i: usize,
) -> Result<BigRational> {
    let k = g.partition().block_of(i);
    let quotient = quotient_game(g);
    let (quotient_ls, _) = quotient.least_size_winning();
    let mut sum = BigRational::zero();
    for r in &quotient_ls {
        if !r.contains(k) {
            continue;
        }
        let internal = internal_game(g, r, k)?;
        let m = internal.game.player_count();
        let triple = GameWithUnions::new(internal.game.clone(), Partition::singletons(m))?;
        let v = index.eval(&triple)?;
        let pos = internal
            .members
            .iter()
            .position(|&orig| orig == i)
            .expect("player belongs to its own block");
        sum += v.values[pos].clone();
    }
    Ok(sum)
}

fn check_proportionality(
    index: &dyn CoalitionalIndex,
    g: &GameWithUnions,
) -> Result<Applicability> {
    let values = index.eval(g)?;
    let mut any_pair = false;
    for k in 0..g.partition().union_count() {
        let members: Vec<usize> = g.partition().block(k).iter().collect();
        if members.len() < 2 {
            continue;
        }
        let sums: Vec<BigRational> = members
            .iter()
            .map(|&i| internal_sum(index, g, i))
            .collect::<Result<_>>()?;
        for a in 0..members.len() {
            for b in (a + 1)..members.len() {
                any_pair = true;
                let (i, j) = (members[a], members[b]);
                let lhs = &values.values[i] * &sums[b];
                let rhs = &values.values[j] * &sums[a];
                if lhs != rhs {
                    return Ok(Applicability::Violated(format!(
                        "players {i},{j} in union {k}: F_{i}*S_{j} = {lhs} but F_{j}*S_{i} = {rhs} in {}",
                        describe_game(g)
                    )));
                }
            }
        }
    }
    if any_pair {
        Ok(Applicability::Satisfied)
    } else {
        Ok(Applicability::NotApplicable(
            "every union is a singleton".into(),
        ))
    }
}

fn check_efficiency(index: &dyn CoalitionalIndex, g: &GameWithUnions) -> Result<Applicability> {
    let v = index.eval(g)?;
    let total = v.sum();
    if total != BigRational::new(1.into(), 1.into()) {
        return Ok(Applicability::Violated(format!(
            "values sum to {total} in {}",
            describe_game(g)
        )));
    }
    Ok(Applicability::Satisfied)
}

fn check_null_player(index: &dyn CoalitionalIndex, g: &GameWithUnions) -> Result<Applicability> {
    let nulls: Vec<usize> = (0..g.player_count())
        .filter(|&i| classify_player(g.game(), i) == PlayerRole::Null)
        .collect();
    if nulls.is_empty() {
        return Ok(Applicability::NotApplicable("no null player".into()));
    }
    let v = index.eval(g)?;
    for i in nulls {
        if !v.values[i].is_zero() {
            return Ok(Applicability::Violated(format!(
                "null player {i} gets {} in {}",
                v.values[i],
                describe_game(g)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

fn check_symmetry_among(index: &dyn CoalitionalIndex, g: &GameWithUnions) -> Result<Applicability> {
    let quotient = quotient_game(g);
    let u = g.partition().union_count();
    let mut pairs = Vec::new();
    for k in 0..u {
        for l in (k + 1)..u {
            if are_symmetric(&quotient, k, l) {
                pairs.push((k, l));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(Applicability::NotApplicable(
            "no two unions are symmetric in the quotient".into(),
        ));
    }
    let v = index.eval(g)?;
    let block_sum = |k: usize| -> BigRational {
        g.partition()
            .block(k)
            .iter()
            .map(|i| v.values[i].clone())
            .sum()
    };
    for (k, l) in pairs {
        let (sk, sl) = (block_sum(k), block_sum(l));
        if sk != sl {
            return Ok(Applicability::Violated(format!(
                "symmetric unions {k},{l} have block sums {sk} and {sl} in {}",
                describe_game(g)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

fn check_symmetry_inside(
    index: &dyn CoalitionalIndex,
    g: &GameWithUnions,
) -> Result<Applicability> {
    let mut pairs = Vec::new();
    for k in 0..g.partition().union_count() {
        let members: Vec<usize> = g.partition().block(k).iter().collect();
        for a in 0..members.len() {
            for b in (a + 1)..members.len() {
                if are_symmetric(g.game(), members[a], members[b]) {
                    pairs.push((members[a], members[b]));
                }
            }
        }
    }
    if pairs.is_empty() {
        return Ok(Applicability::NotApplicable(
            "no symmetric players share a union".into(),
        ));
    }
    let v = index.eval(g)?;
    for (i, j) in pairs {
        if v.values[i] != v.values[j] {
            return Ok(Applicability::Violated(format!(
                "symmetric players {i},{j} in the same union get {} and {} in {}",
                v.values[i],
                v.values[j],
                describe_game(g)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

/// Shared shape checks for the pair axioms.
fn validate_pair(w: &GameWithUnions, v: &GameWithUnions) -> Result<()> {
    if w.player_count() != v.player_count() {
        return Err(Error::domain("paired games must share the player set"));
    }
    if w.partition() != v.partition() {
        return Err(Error::domain("paired games must share the partition"));
    }
    Ok(())
}

/// The three-way transfer comparison shared by both transfer axioms:
/// strictly smaller least size wins outright, ties mix with the given
/// weights.
fn transfer_expectation(
    index: &dyn CoalitionalIndex,
    w: &GameWithUnions,
    v: &GameWithUnions,
    c_w: usize,
    c_v: usize,
    p_w: u64,
    p_v: u64,
) -> Result<(PowerVector, Vec<BigRational>, &'static str)> {
    let disjunction = crate::game::disjunction(w.game(), v.game())?;
    let dis_values = index.eval(&w.with_game(disjunction)?)?;
    let fw = index.eval(w)?;
    let fv = index.eval(v)?;
    let n = w.player_count();
    let (expected, branch): (Vec<BigRational>, &'static str) = if c_w < c_v {
        (fw.values.clone(), "smaller least size on the W side")
    } else if c_v < c_w {
        (fv.values.clone(), "smaller least size on the V side")
    } else {
        let denom = BigRational::from_integer((p_w + p_v).into());
        let wq = BigRational::from_integer(p_w.into()) / &denom;
        let vq = BigRational::from_integer(p_v.into()) / &denom;
        (
            (0..n)
                .map(|i| &wq * &fw.values[i] + &vq * &fv.values[i])
                .collect(),
            "equal least sizes, mixing by counts",
        )
    };
    Ok((dis_values, expected, branch))
}

fn compare_transfer(
    dis_values: &PowerVector,
    expected: &[BigRational],
    branch: &str,
    w: &GameWithUnions,
    v: &GameWithUnions,
) -> Applicability {
    for i in 0..expected.len() {
        if dis_values.values[i] != expected[i] {
            return Applicability::Violated(format!(
                "player {i} gets {} in the disjunction but the transfer rule ({branch}) \
                 gives {} for W: {} | V: {}",
                dis_values.values[i],
                expected[i],
                describe_game(w),
                describe_game(v)
            ));
        }
    }
    Applicability::Satisfied
}

fn check_transfer_among(
    index: &dyn CoalitionalIndex,
    w: &GameWithUnions,
    v: &GameWithUnions,
) -> Result<Applicability> {
    validate_pair(w, v)?;
    let wq = quotient_game(w);
    let vq = quotient_game(v);
    let (w_ls, w_summary) = wq.least_size_winning();
    let (v_ls, v_summary) = vq.least_size_winning();
    let w_set: BTreeSet<&Coalition> = w_ls.iter().collect();
    if v_ls.iter().any(|r| w_set.contains(r)) {
        return Ok(Applicability::NotApplicable(
            "quotient least-size families overlap".into(),
        ));
    }
    let (dis, expected, branch) = transfer_expectation(
        index, w, v, w_summary.c, v_summary.c, w_summary.p, v_summary.p,
    )?;
    Ok(compare_transfer(&dis, &expected, branch, w, v))
}

fn check_transfer_inside(
    index: &dyn CoalitionalIndex,
    w: &GameWithUnions,
    v: &GameWithUnions,
) -> Result<Applicability> {
    validate_pair(w, v)?;
    let confined = (0..w.partition().union_count()).any(|k| {
        let block = w.partition().block(k);
        w.game()
            .minimal_winning()
            .iter()
            .chain(v.game().minimal_winning())
            .all(|m| m.is_subset(block))
    });
    if !confined {
        return Ok(Applicability::NotApplicable(
            "the minimal winning coalitions are not confined to one union".into(),
        ));
    }
    let (w_ls, w_summary) = w.game().least_size_winning();
    let (v_ls, v_summary) = v.game().least_size_winning();
    let w_set: BTreeSet<&Coalition> = w_ls.iter().collect();
    if v_ls.iter().any(|s| w_set.contains(s)) {
        return Ok(Applicability::NotApplicable(
            "least-size families overlap".into(),
        ));
    }
    let (dis, expected, branch) = transfer_expectation(
        index, w, v, w_summary.c, v_summary.c, w_summary.p, v_summary.p,
    )?;
    Ok(compare_transfer(&dis, &expected, branch, w, v))
}

fn check_irrelevant(
    index: &dyn CoalitionalIndex,
    base: &GameWithUnions,
    removed: &Coalition,
) -> Result<Applicability> {
    let minimal = base.game().minimal_winning();
    if !minimal.contains(removed) {
        return Ok(Applicability::NotApplicable(
            "the dropped coalition is not a minimal winner".into(),
        ));
    }
    let image = base.partition().representatives(removed);
    let quotient = quotient_game(base);
    if quotient.minimal_winning().contains(&image) {
        return Ok(Applicability::NotApplicable(
            "the dropped coalition's union image is a minimal quotient winner".into(),
        ));
    }
    let remaining: Vec<Coalition> = minimal
        .iter()
        .filter(|m| *m != removed)
        .cloned()
        .collect();
    let reduced = ExplicitGame::new(base.player_count(), remaining)?;
    let before = index.eval(base)?;
    let after = index.eval(&base.with_game(reduced)?)?;
    for i in 0..base.player_count() {
        if before.values[i] != after.values[i] {
            return Ok(Applicability::Violated(format!(
                "player {i} moves from {} to {} when dropping {removed} from {}",
                before.values[i],
                after.values[i],
                describe_game(base)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

fn check_least_size(
    index: &dyn CoalitionalIndex,
    w: &GameWithUnions,
    v: &GameWithUnions,
) -> Result<Applicability> {
    validate_pair(w, v)?;
    let wq = quotient_game(w);
    let (w_ls, _) = wq.least_size_winning();
    if w_ls.len() != 1 {
        return Ok(Applicability::NotApplicable(
            "the W side does not have a unique least-size quotient winner".into(),
        ));
    }
    let r = &w_ls[0];
    let vq = quotient_game(v);
    let (v_ls, _) = vq.least_size_winning();
    let want: BTreeSet<Coalition> = r.iter().map(Coalition::singleton).collect();
    let got: BTreeSet<Coalition> = v_ls.into_iter().collect();
    if want != got {
        return Ok(Applicability::NotApplicable(
            "the V side's least-size quotient winners are not the unions of R".into(),
        ));
    }
    let we = crate::unions::essential_least_size_set(w);
    let ve = crate::unions::essential_least_size_set(v);
    if we != ve {
        return Ok(Applicability::NotApplicable(
            "the essential least-size structures differ".into(),
        ));
    }
    let fw = index.eval(w)?;
    let fv = index.eval(v)?;
    for i in 0..w.player_count() {
        if fw.values[i] != fv.values[i] {
            return Ok(Applicability::Violated(format!(
                "player {i} gets {} on the compound side but {} on the decomposed side \
                 for W: {} | V: {}",
                fw.values[i],
                fv.values[i],
                describe_game(w),
                describe_game(v)
            )));
        }
    }
    Ok(Applicability::Satisfied)
}

#[cfg(test)]
mod tests {
    use super::counterexamples::Psi;
    use super::*;
    use crate::coalition::Coalition;
    use crate::unions::seven_player_example;

    fn single(n: usize, family: Vec<Coalition>, blocks: Vec<Coalition>) -> Instance {
        Instance::Single(
            GameWithUnions::new(
                ExplicitGame::new(n, family).unwrap(),
                Partition::new(n, blocks).unwrap(),
            )
            .unwrap(),
        )
    }

    #[test]
    fn psi_passes_on_the_worked_example() {
        let inst = Instance::Single(seven_player_example());
        for axiom in [
            Axiom::Nonnegativity,
            Axiom::Efficiency,
            Axiom::QuotientGame,
            Axiom::ProportionalityOverEssentials,
        ] {
            let out = check(&Psi, axiom, &inst).unwrap();
            assert_eq!(out, Applicability::Satisfied, "{axiom}");
        }
    }

    #[test]
    fn hypothesis_failures_are_not_applicable() {
        // CFI needs the singleton partition
        let grand = single(
            3,
            vec![Coalition::from_ids([0, 1])],
            vec![Coalition::from_ids([0, 1, 2])],
        );
        assert!(matches!(
            check(&Psi, Axiom::CoincidenceWithFelsenthal, &grand).unwrap(),
            Applicability::NotApplicable(_)
        ));
        // no null player in the majority game
        let majority = single(
            3,
            vec![
                Coalition::from_ids([0, 1]),
                Coalition::from_ids([0, 2]),
                Coalition::from_ids([1, 2]),
            ],
            vec![Coalition::from_ids([0, 1, 2])],
        );
        assert!(matches!(
            check(&Psi, Axiom::NullPlayer, &majority).unwrap(),
            Applicability::NotApplicable(_)
        ));
        // transfer with overlapping least-size families
        let w = GameWithUnions::new(
            ExplicitGame::new(2, vec![Coalition::singleton(0)]).unwrap(),
            Partition::singletons(2),
        )
        .unwrap();
        let out = check(
            &Psi,
            Axiom::TransferAmongUnions,
            &Instance::Pair {
                w: w.clone(),
                v: w,
            },
        )
        .unwrap();
        assert!(matches!(out, Applicability::NotApplicable(_)));
    }

    #[test]
    fn wrong_instance_shape_is_an_error() {
        let inst = Instance::Single(seven_player_example());
        assert!(check(&Psi, Axiom::TransferAmongUnions, &inst).is_err());
    }

    #[test]
    fn removal_check_validates_the_dropped_coalition() {
        // in this game {0,1,4} maps onto a non-minimal quotient winner
        let base = GameWithUnions::new(
            ExplicitGame::new(
                5,
                vec![
                    Coalition::from_ids([0, 1, 3]),
                    Coalition::from_ids([1, 2, 4]),
                    Coalition::from_ids([0, 1, 4]),
                ],
            )
            .unwrap(),
            Partition::new(
                5,
                vec![
                    Coalition::singleton(0),
                    Coalition::from_ids([1, 2, 3]),
                    Coalition::singleton(4),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        let ok = Instance::Removal {
            base: base.clone(),
            removed: Coalition::from_ids([0, 1, 4]),
        };
        match check(&Psi, Axiom::IrrelevantCoalitions, &ok).unwrap() {
            Applicability::Satisfied => {}
            other => panic!("psi should satisfy the removal check, got {other:?}"),
        }
        // dropping a coalition whose image stays minimal is not applicable
        let bad = Instance::Removal {
            base,
            removed: Coalition::from_ids([0, 1, 3]),
        };
        assert!(matches!(
            check(&Psi, Axiom::IrrelevantCoalitions, &bad).unwrap(),
            Applicability::NotApplicable(_)
        ));
    }
}
