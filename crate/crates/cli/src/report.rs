//! Report construction and rendering. A report carries exact rationals as
//! `num/den` strings next to fixed six-place decimals, so downstream tools
//! can choose exactness or plottability without reparsing.

use std::fmt::Write as _;

use clap::ValueEnum;
use felsenthal::counting::min_winning_size;
use felsenthal::game::ENUMERATION_BOUND;
use felsenthal::{
    count_least_size, felsenthal, felsenthal_owen, felsenthal_owen_weighted, felsenthal_weighted,
    quotient_game, CountingConfig, ExplicitGame, GameWithUnions, Partition, WeightedGame,
};
use num::{BigInt, BigRational, Integer, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::body::{Failure, QuotaSpec, VotingBody};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IndexChoice {
    /// One-stage index over least-size winning coalitions
    Felsenthal,
    /// Two-stage index through the quotient and internal games
    FelsenthalOwen,
    /// Both indices in one report
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SingleIndex {
    Felsenthal,
    FelsenthalOwen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendChoice {
    /// Enumeration up to 25 players, counting beyond
    Auto,
    /// Explicit minimal-winning enumeration
    Enumeration,
    /// Size-by-weight counting for weighted bodies
    Dp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatChoice {
    Text,
    Json,
    Csv,
}

/// A validated body ready for analysis: either a weighted body with a
/// resolved integer quota, or an explicit game. Labels run in member order.
pub enum Prepared {
    Weighted {
        ids: Vec<String>,
        names: Vec<String>,
        member_blocs: Vec<String>,
        bloc_order: Vec<String>,
        weights: Vec<u64>,
        total: u64,
        quota: u64,
        partition: Partition,
    },
    Explicit {
        game: ExplicitGame,
        partition: Partition,
    },
}

impl Prepared {
    pub fn weighted(
        body: &VotingBody,
        spec: QuotaSpec,
        inclusive: bool,
    ) -> Result<Self, Failure> {
        let total = body.total_weight()?;
        let quota = spec.resolve(total, inclusive)?;
        Ok(Prepared::Weighted {
            ids: body.members.iter().map(|m| m.id.clone()).collect(),
            names: body.members.iter().map(|m| m.name.clone()).collect(),
            member_blocs: body.members.iter().map(|m| m.bloc.clone()).collect(),
            bloc_order: body.blocs.clone(),
            weights: body.weights(),
            total,
            quota,
            partition: body.partition()?,
        })
    }

    pub fn explicit(game: ExplicitGame, partition: Partition) -> Self {
        Prepared::Explicit { game, partition }
    }

    fn player_count(&self) -> usize {
        match self {
            Prepared::Weighted { weights, .. } => weights.len(),
            Prepared::Explicit { game, .. } => game.player_count(),
        }
    }

    fn partition(&self) -> &Partition {
        match self {
            Prepared::Weighted { partition, .. } => partition,
            Prepared::Explicit { partition, .. } => partition,
        }
    }

    fn ids(&self) -> Vec<String> {
        match self {
            Prepared::Weighted { ids, .. } => ids.clone(),
            Prepared::Explicit { game, .. } => {
                game.players().map(|i| i.to_string()).collect()
            }
        }
    }

    fn names(&self) -> Vec<String> {
        match self {
            Prepared::Weighted { names, .. } => names.clone(),
            Prepared::Explicit { game, .. } => {
                game.players().map(|i| format!("player {i}")).collect()
            }
        }
    }

    fn member_blocs(&self) -> Vec<String> {
        match self {
            Prepared::Weighted { member_blocs, .. } => member_blocs.clone(),
            Prepared::Explicit { game, partition } => game
                .players()
                .map(|i| format!("B{}", partition.block_of(i) + 1))
                .collect(),
        }
    }

    fn bloc_order(&self) -> Vec<String> {
        match self {
            Prepared::Weighted { bloc_order, .. } => bloc_order.clone(),
            Prepared::Explicit { partition, .. } => {
                (0..partition.union_count()).map(|k| format!("B{}", k + 1)).collect()
            }
        }
    }
}

/// The backend actually used, after `auto` resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ResolvedBackend {
    Enumeration,
    Counting,
}

fn resolve_backend(choice: BackendChoice, prepared: &Prepared) -> Result<ResolvedBackend, Failure> {
    match (choice, prepared) {
        (BackendChoice::Dp, Prepared::Explicit { .. }) => Err(Failure::parse(
            "the counting backend needs weights; explicit games use enumeration",
        )),
        (_, Prepared::Explicit { .. }) => Ok(ResolvedBackend::Enumeration),
        (BackendChoice::Enumeration, _) => Ok(ResolvedBackend::Enumeration),
        (BackendChoice::Dp, _) => Ok(ResolvedBackend::Counting),
        (BackendChoice::Auto, _) => {
            if prepared.player_count() > ENUMERATION_BOUND {
                Ok(ResolvedBackend::Counting)
            } else {
                Ok(ResolvedBackend::Enumeration)
            }
        }
    }
}

#[derive(Serialize)]
pub struct ValueRow {
    pub id: String,
    pub name: String,
    pub bloc: String,
    pub value: String,
    pub decimal: String,
}

#[derive(Serialize)]
pub struct BlocRow {
    pub bloc: String,
    pub value: String,
    pub decimal: String,
}

#[derive(Serialize)]
pub struct TopShare {
    pub k: usize,
    pub cumulative: String,
    pub decimal: String,
}

#[derive(Serialize)]
pub struct IndexReport {
    pub index: &'static str,
    pub backend: &'static str,
    pub nonzero_members: usize,
    pub top_cumulative: Vec<TopShare>,
    pub members: Vec<ValueRow>,
    pub blocs: Vec<BlocRow>,
}

#[derive(Serialize)]
pub struct Report {
    pub members: usize,
    pub blocs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_weight: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quota: Option<u64>,
    pub least_winning_size: usize,
    pub least_winning_blocs: usize,
    pub indices: Vec<IndexReport>,
}

/// `num/den`, always with an explicit denominator.
pub fn exact_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Six-place decimal, rounding half away from zero; report values are
/// nonnegative so this is round half up.
pub fn decimal_string(r: &BigRational) -> String {
    debug_assert!(!r.is_negative());
    let million = BigInt::from(1_000_000);
    let two = BigInt::from(2);
    let scaled: BigInt =
        (r.numer() * &million * &two + r.denom()).div_floor(&(r.denom() * &two));
    let (int, frac) = scaled.div_rem(&million);
    format!("{int}.{:06}", frac)
}

fn index_report(
    index: &'static str,
    backend: ResolvedBackend,
    values: &[BigRational],
    prepared: &Prepared,
    top: usize,
) -> IndexReport {
    let ids = prepared.ids();
    let names = prepared.names();
    let member_blocs = prepared.member_blocs();
    let members: Vec<ValueRow> = values
        .iter()
        .enumerate()
        .map(|(i, v)| ValueRow {
            id: ids[i].clone(),
            name: names[i].clone(),
            bloc: member_blocs[i].clone(),
            value: exact_string(v),
            decimal: decimal_string(v),
        })
        .collect();

    // bloc aggregates are exact sums of member values
    let blocs: Vec<BlocRow> = prepared
        .bloc_order()
        .iter()
        .map(|bloc| {
            let sum: BigRational = values
                .iter()
                .zip(&member_blocs)
                .filter(|(_, b)| *b == bloc)
                .map(|(v, _)| v.clone())
                .sum();
            BlocRow {
                bloc: bloc.clone(),
                value: exact_string(&sum),
                decimal: decimal_string(&sum),
            }
        })
        .collect();

    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut cumulative = BigRational::zero();
    let top_cumulative: Vec<TopShare> = sorted
        .iter()
        .take(top)
        .enumerate()
        .map(|(i, v)| {
            cumulative += v;
            TopShare {
                k: i + 1,
                cumulative: exact_string(&cumulative),
                decimal: decimal_string(&cumulative),
            }
        })
        .collect();

    IndexReport {
        index,
        backend: match backend {
            ResolvedBackend::Enumeration => "enumeration",
            ResolvedBackend::Counting => "counting",
        },
        nonzero_members: values.iter().filter(|v| !v.is_zero()).count(),
        top_cumulative,
        members,
        blocs,
    }
}

/// Runs the requested indices on the prepared body and assembles the report.
pub fn analyze(
    prepared: &Prepared,
    index: IndexChoice,
    backend: BackendChoice,
    top: usize,
) -> Result<Report, Failure> {
    let resolved = resolve_backend(backend, prepared)?;
    let config = CountingConfig::default();
    let partition = prepared.partition().clone();

    let want_psi = matches!(index, IndexChoice::Felsenthal | IndexChoice::Both);
    let want_owen = matches!(index, IndexChoice::FelsenthalOwen | IndexChoice::Both);

    let (psi_values, owen_values, c_members, c_blocs, total_quota) = match prepared {
        Prepared::Weighted {
            weights,
            total,
            quota,
            ..
        } => {
            let bloc_totals: Vec<u64> = partition
                .blocks()
                .iter()
                .map(|b| b.iter().map(|i| weights[i]).sum())
                .collect();
            let c_blocs = min_winning_size(*quota, &bloc_totals)?;
            match resolved {
                ResolvedBackend::Enumeration => {
                    let game = WeightedGame::new(*quota, weights.clone())?
                        .to_explicit(ENUMERATION_BOUND)?;
                    let (_, summary) = game.least_size_winning();
                    let psi = want_psi.then(|| felsenthal(&game).values);
                    let owen = if want_owen {
                        let gwu = GameWithUnions::new(game, partition.clone())?;
                        Some(felsenthal_owen(&gwu).values)
                    } else {
                        None
                    };
                    (psi, owen, summary.c, c_blocs, Some((*total, *quota)))
                }
                ResolvedBackend::Counting => {
                    let summary = count_least_size(*quota, weights, &config)?;
                    let psi =
                        want_psi.then(|| felsenthal_weighted(*quota, weights, &config))
                            .transpose()?
                            .map(|v| v.values);
                    let owen = want_owen
                        .then(|| felsenthal_owen_weighted(*quota, weights, &partition, &config))
                        .transpose()?
                        .map(|v| v.values);
                    (psi, owen, summary.c, c_blocs, Some((*total, *quota)))
                }
            }
        }
        Prepared::Explicit { game, .. } => {
            let (_, summary) = game.least_size_winning();
            let gwu = GameWithUnions::new(game.clone(), partition.clone())?;
            let (_, quotient_summary) = quotient_game(&gwu).least_size_winning();
            let psi = want_psi.then(|| felsenthal(game).values);
            let owen = want_owen.then(|| felsenthal_owen(&gwu).values);
            (psi, owen, summary.c, quotient_summary.c, None)
        }
    };

    let mut indices = Vec::new();
    if let Some(values) = psi_values {
        indices.push(index_report("felsenthal", resolved, &values, prepared, top));
    }
    if let Some(values) = owen_values {
        indices.push(index_report(
            "felsenthal_owen",
            resolved,
            &values,
            prepared,
            top,
        ));
    }

    Ok(Report {
        members: prepared.player_count(),
        blocs: partition.union_count(),
        total_weight: total_quota.map(|(t, _)| t),
        quota: total_quota.map(|(_, q)| q),
        least_winning_size: c_members,
        least_winning_blocs: c_blocs,
        indices,
    })
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = write!(out, "members: {}   blocs: {}", report.members, report.blocs);
    if let (Some(total), Some(quota)) = (report.total_weight, report.quota) {
        let _ = write!(out, "   total weight: {total}   quota: {quota}");
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "least winning coalition: {} members, {} blocs",
        report.least_winning_size, report.least_winning_blocs
    );
    for ir in &report.indices {
        let _ = writeln!(out, "\n== {} ({} backend) ==", ir.index, ir.backend);
        let id_w = ir.members.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
        let name_w = ir.members.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let bloc_w = ir.members.iter().map(|r| r.bloc.len()).max().unwrap_or(4).max(4);
        let value_w = ir.members.iter().map(|r| r.value.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(
            out,
            "{:id_w$}  {:name_w$}  {:bloc_w$}  {:value_w$}  decimal",
            "id", "name", "bloc", "value"
        );
        for row in &ir.members {
            let _ = writeln!(
                out,
                "{:id_w$}  {:name_w$}  {:bloc_w$}  {:value_w$}  {}",
                row.id, row.name, row.bloc, row.value, row.decimal
            );
        }
        let _ = writeln!(out, "nonzero members: {}", ir.nonzero_members);
        let tops: Vec<String> = ir
            .top_cumulative
            .iter()
            .map(|t| format!("top-{} {}", t.k, t.decimal))
            .collect();
        let _ = writeln!(out, "cumulative shares: {}", tops.join(", "));
        let _ = writeln!(out, "bloc totals:");
        for row in &ir.blocs {
            let _ = writeln!(out, "  {:bloc_w$}  {}  {}", row.bloc, row.value, row.decimal);
        }
    }
    out
}

pub fn render_json(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn render_csv(report: &Report) -> String {
    let mut out = String::from("index,id,name,bloc,value,decimal\n");
    for ir in &report.indices {
        for row in &ir.members {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                ir.index, row.id, row.name, row.bloc, row.value, row.decimal
            );
        }
    }
    out
}

#[derive(Serialize)]
pub struct SweepRow {
    pub quota: String,
    pub resolved_quota: u64,
    pub member: String,
    pub value: String,
    pub decimal: String,
}

/// One analysis per quota, in the given order; quota jobs are independent
/// and run in parallel.
pub fn sweep(
    body: &VotingBody,
    quotas: &[(String, QuotaSpec)],
    inclusive: bool,
    index: SingleIndex,
    backend: BackendChoice,
) -> Result<Vec<SweepRow>, Failure> {
    let index_choice = match index {
        SingleIndex::Felsenthal => IndexChoice::Felsenthal,
        SingleIndex::FelsenthalOwen => IndexChoice::FelsenthalOwen,
    };
    let per_quota: Vec<Result<Vec<SweepRow>, Failure>> = quotas
        .par_iter()
        .map(|(label, spec)| {
            let prepared = Prepared::weighted(body, *spec, inclusive)?;
            let report = analyze(&prepared, index_choice, backend, 0)?;
            let resolved = report.quota.expect("weighted bodies have quotas");
            let ir = report.indices.into_iter().next().expect("one index");
            Ok(ir
                .members
                .into_iter()
                .map(|row| SweepRow {
                    quota: label.clone(),
                    resolved_quota: resolved,
                    member: row.id,
                    value: row.value,
                    decimal: row.decimal,
                })
                .collect())
        })
        .collect();
    let mut rows = Vec::new();
    for result in per_quota {
        rows.extend(result?);
    }
    Ok(rows)
}

pub fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("quota,resolved_quota,member,value,decimal\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.quota, row.resolved_quota, row.member, row.value, row.decimal
        );
    }
    out
}

pub fn render_sweep_json(rows: &[SweepRow]) -> String {
    let mut text = serde_json::to_string_pretty(rows).expect("rows serialize");
    text.push('\n');
    text
}
