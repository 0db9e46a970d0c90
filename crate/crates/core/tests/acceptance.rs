//! The release gate: one test per acceptance criterion, each printing a
//! single `criterion N:` status line (run with `-- --nocapture` to see them
//! all) and asserting the facts behind the line.
//!
//! Criterion 6 reports PARTIAL rather than PASS: the one-violation-per-row
//! ideal holds for most deviant indices, but three of the bundled deviants
//! provably violate additional axioms (see the assertions for the exact
//! sets). The matrix test asserts the full observed profile, so any drift
//! from the documented behaviour still fails loudly.
//!
//! Criterion 8 reports SKIP unless `IMF_DATA` points at a member CSV
//! (`id,name,weight,bloc`); a synthetic 188-member run still exercises the
//! counting backend at full scale.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num::{BigRational, One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use felsenthal::axioms::generators::all_games;
use felsenthal::axioms::matrix::{
    expected_violations, ideal_diagonal, independence_matrix, AxiomSet, IndependenceMatrix,
    MatrixConfig,
};
use felsenthal::counting::min_winning_size;
use felsenthal::indices::felsenthal_owen_by_essential_sums;
use felsenthal::unions::{essential_least_size_set, seven_player_example};
use felsenthal::{
    count_least_size, felsenthal, felsenthal_owen, felsenthal_owen_weighted, felsenthal_weighted,
    Coalition, CountingConfig, ExplicitGame, GameWithUnions, Partition, WeightedGame,
};

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn coalition(ids: &[usize]) -> Coalition {
    ids.iter().copied().collect()
}

fn partition_from_seats(n: usize, seats: &[usize]) -> Partition {
    let mut labels: Vec<usize> = Vec::new();
    let mut blocks: Vec<Coalition> = Vec::new();
    for (i, &raw) in seats.iter().enumerate().take(n) {
        match labels.iter().position(|&l| l == raw) {
            Some(k) => blocks[k] = blocks[k].with(i),
            None => {
                labels.push(raw);
                blocks.push(Coalition::singleton(i));
            }
        }
    }
    Partition::new(n, blocks).expect("seating vectors produce a valid partition")
}

struct TimedMatrix {
    matrix: IndependenceMatrix,
    build_time: Duration,
}

static QUOTIENT: OnceLock<TimedMatrix> = OnceLock::new();
static TRANSFER: OnceLock<TimedMatrix> = OnceLock::new();

fn matrix_for(set: AxiomSet) -> &'static TimedMatrix {
    let slot = match set {
        AxiomSet::Quotient => &QUOTIENT,
        AxiomSet::Transfer => &TRANSFER,
    };
    slot.get_or_init(|| {
        let start = Instant::now();
        let matrix = independence_matrix(set, &MatrixConfig::default())
            .expect("matrix construction stays within enumeration bounds");
        TimedMatrix {
            matrix,
            build_time: start.elapsed(),
        }
    })
}

#[test]
fn criterion_1_seven_player_value_is_exact_and_fast() {
    let gwu = seven_player_example();
    let expected: Vec<BigRational> = [(1, 4), (1, 24), (1, 24), (1, 12), (1, 6), (1, 12), (1, 3)]
        .iter()
        .map(|&(n, d)| rat(n, d))
        .collect();

    let start = Instant::now();
    let by_composition = felsenthal_owen(&gwu);
    let by_sums = felsenthal_owen_by_essential_sums(&gwu);
    let elapsed = start.elapsed();

    assert_eq!(by_composition.values, expected);
    assert_eq!(by_sums.values, expected);
    assert_eq!(by_composition.values[1], rat(1, 24));
    assert_eq!(by_sums.values[1], rat(1, 24));
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 1: PASS — seven-player profile exact under both forms, \
         second player 1/24, in {elapsed:?}"
    );
}

#[test]
fn criterion_2_essential_families_are_reproduced() {
    let gwu = seven_player_example();
    let families = felsenthal::unions::essential_families(&gwu);
    let expected: Vec<(Coalition, usize, Vec<Coalition>)> = vec![
        (coalition(&[0, 1]), 0, vec![coalition(&[0, 1]), coalition(&[0, 2])]),
        (coalition(&[0, 1]), 1, vec![coalition(&[3]), coalition(&[5])]),
        (coalition(&[0, 2]), 0, vec![coalition(&[0])]),
        (coalition(&[0, 2]), 2, vec![coalition(&[6])]),
        (coalition(&[1, 2]), 1, vec![coalition(&[4])]),
        (coalition(&[1, 2]), 2, vec![coalition(&[6])]),
    ];
    let got: Vec<(Coalition, usize, Vec<Coalition>)> = families
        .iter()
        .map(|f| (f.r.clone(), f.k, f.least_size.clone()))
        .collect();
    assert_eq!(got, expected);

    // three six-player games, one partition, identical essential sets
    let blocks = vec![coalition(&[0, 1, 2, 3]), coalition(&[4, 5])];
    let partition = Partition::new(6, blocks).expect("valid partition");
    let make = |fams: &[&[usize]]| {
        GameWithUnions::new(
            ExplicitGame::new(6, fams.iter().map(|s| coalition(s))).expect("valid game"),
            partition.clone(),
        )
        .expect("compatible")
    };
    let w1 = make(&[&[0, 1, 4], &[2, 3, 5], &[0, 1, 5]]);
    let v = make(&[&[0, 1], &[2, 3], &[4], &[5]]);
    let shared: BTreeSet<Coalition> =
        [&[0usize, 1][..], &[2, 3], &[4], &[5]].iter().map(|s| coalition(s)).collect();
    assert_eq!(essential_least_size_set(&w1), shared);
    assert_eq!(essential_least_size_set(&v), shared);

    println!(
        "criterion 2: PASS — all six essential families and the shared \
         essential set of the decomposition pair reproduced exactly"
    );
}

#[test]
fn criterion_3_trivial_partitions_collapse_exhaustively() {
    let start = Instant::now();
    let mut games = 0usize;
    for n in 1..=4 {
        for game in all_games(n) {
            let psi = felsenthal(&game).values;
            let singletons =
                GameWithUnions::new(game.clone(), Partition::singletons(n)).expect("same n");
            let grand = GameWithUnions::new(game, Partition::grand(n)).expect("same n");
            assert_eq!(felsenthal_owen(&singletons).values, psi);
            assert_eq!(felsenthal_owen(&grand).values, psi);
            games += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(games, 1 + 4 + 18 + 166);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 3: PASS — over all {games} games with up to four players, \
         the two-stage index under singleton and grand partitions equals the \
         one-stage index, in {elapsed:?}"
    );
}

#[test]
fn criterion_4_psi_satisfies_the_transfer_axioms() {
    let timed = matrix_for(AxiomSet::Transfer);
    let mut checked = 0usize;
    for axiom in timed.matrix.axioms.clone() {
        let cell = timed.matrix.cell("psi", axiom).expect("psi row exists");
        assert!(
            cell.applicable >= 500,
            "{axiom}: only {} applicable instances",
            cell.applicable
        );
        assert_eq!(cell.violations, 0, "{axiom}: psi violated the axiom");
        checked += cell.applicable;
    }
    println!(
        "criterion 4: PASS — psi satisfied all eight transfer-set axioms on \
         {checked} applicable seeded instances (>= 500 per axiom)"
    );
}

#[test]
fn criterion_5_psi_satisfies_the_quotient_axioms() {
    let timed = matrix_for(AxiomSet::Quotient);
    let mut checked = 0usize;
    for axiom in timed.matrix.axioms.clone() {
        let cell = timed.matrix.cell("psi", axiom).expect("psi row exists");
        assert!(
            cell.applicable >= 500,
            "{axiom}: only {} applicable instances",
            cell.applicable
        );
        assert_eq!(cell.violations, 0, "{axiom}: psi violated the axiom");
        checked += cell.applicable;
    }
    println!(
        "criterion 5: PASS — psi satisfied all four quotient-set axioms on \
         {checked} applicable seeded instances (>= 500 per axiom)"
    );
}

#[test]
fn criterion_6_independence_matrices_match_the_documented_profile() {
    let quotient = matrix_for(AxiomSet::Quotient);
    let transfer = matrix_for(AxiomSet::Transfer);
    let total_build = quotient.build_time + transfer.build_time;
    assert!(
        total_build < Duration::from_secs(300),
        "matrices took {total_build:?}"
    );

    // the observed profile is the contract: any drift fails here
    assert_eq!(
        quotient.matrix.profile(),
        expected_violations(AxiomSet::Quotient)
    );
    assert_eq!(
        transfer.matrix.profile(),
        expected_violations(AxiomSet::Transfer)
    );

    // every deviant violates at least its designated axiom, with a recorded
    // witness, and psi violates nothing
    let mut extras: Vec<String> = Vec::new();
    for (set, timed) in [
        (AxiomSet::Quotient, quotient),
        (AxiomSet::Transfer, transfer),
    ] {
        for (index_name, designated) in ideal_diagonal(set) {
            let violated = timed.matrix.violated_axioms(index_name);
            for axiom in &designated {
                assert!(
                    violated.contains(axiom),
                    "{index_name} was expected to violate {axiom}"
                );
                let cell = timed.matrix.cell(index_name, *axiom).expect("cell exists");
                assert!(
                    cell.first_witness.is_some(),
                    "{index_name} x {axiom}: violation without a witness"
                );
            }
            let surplus: Vec<String> = violated
                .iter()
                .filter(|a| !designated.contains(a))
                .map(|a| a.to_string())
                .collect();
            if !surplus.is_empty() {
                extras.push(format!("{} also violates {}", index_name, surplus.join(", ")));
            }
        }
        assert!(timed.matrix.violated_axioms("psi").is_empty());
    }

    if extras.is_empty() {
        println!(
            "criterion 6: PASS — one-violation diagonal on both matrices in {total_build:?}"
        );
    } else {
        println!(
            "criterion 6: PARTIAL — every deviant index violates its designated \
             axiom with a witness and psi is clean (built in {total_build:?}), \
             but the bundled deviants are not single-axiom separators: {}",
            extras.join("; ")
        );
    }
}

#[test]
fn criterion_7_counting_backend_agrees_with_enumeration() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let mut largest = 0usize;
    for _ in 0..200 {
        let n = rng.gen_range(2..=18);
        largest = largest.max(n);
        let mut weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=50)).collect();
        let i = rng.gen_range(0..n);
        weights[i] = weights[i].max(1);
        let total: u64 = weights.iter().sum();
        let quota = rng.gen_range(1..=total);
        let seats: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let partition = partition_from_seats(n, &seats);

        let game = WeightedGame::new(quota, weights.clone()).expect("feasible");
        let explicit = game.to_explicit(18).expect("within the enumeration bound");
        let config = CountingConfig::default();

        let counted = felsenthal_weighted(quota, &weights, &config).expect("within budget");
        assert_eq!(counted.values, felsenthal(&explicit).values);

        let gwu = GameWithUnions::new(explicit, partition.clone()).expect("same n");
        let counted_owen =
            felsenthal_owen_weighted(quota, &weights, &partition, &config).expect("within budget");
        assert_eq!(counted_owen.values, felsenthal_owen(&gwu).values);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 7: PASS — counting and enumeration agree on both indices \
         for 200 seeded weighted games (largest n = {largest}) in {elapsed:?}"
    );
}

/// A deterministic heavy-tailed 188-member body with ~1M total weight,
/// shaped like a large international voting body: a few heavyweights, a
/// long tail, 25 blocs.
fn synthetic_body() -> (Vec<u64>, Partition) {
    let n = 188;
    let weights: Vec<u64> = (0..n).map(|i| 170_000 / (i as u64 + 1)).collect();
    let seats: Vec<usize> = (0..n).map(|i| i % 25).collect();
    (weights, partition_from_seats(n, &seats))
}

fn imf_criterion(path: &str) -> String {
    let mut reader = csv::Reader::from_path(path).expect("IMF_DATA readable");
    let headers = reader.headers().expect("header row").clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .unwrap_or_else(|| panic!("missing column {name}"))
    };
    let (w_col, b_col) = (col("weight"), col("bloc"));
    let mut weights: Vec<u64> = Vec::new();
    let mut bloc_labels: Vec<String> = Vec::new();
    let mut seats: Vec<usize> = Vec::new();
    for record in reader.records() {
        let record = record.expect("valid CSV row");
        weights.push(record[w_col].trim().parse().expect("integer weight"));
        let bloc = record[b_col].trim().to_string();
        let k = bloc_labels
            .iter()
            .position(|b| *b == bloc)
            .unwrap_or_else(|| {
                bloc_labels.push(bloc);
                bloc_labels.len() - 1
            });
        seats.push(k);
    }
    let n = weights.len();
    assert_eq!(n, 188, "expected 188 members, found {n}");
    let partition = partition_from_seats(n, &seats);
    let total: u64 = weights.iter().sum();
    let quota = total.div_ceil(2);
    let config = CountingConfig::default();

    let start = Instant::now();
    let summary = count_least_size(quota, &weights, &config).expect("within budget");
    let psi = felsenthal_weighted(quota, &weights, &config).expect("within budget");
    let owen = felsenthal_owen_weighted(quota, &weights, &partition, &config)
        .expect("within budget");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");

    let bloc_totals: Vec<u64> = partition
        .blocks()
        .iter()
        .map(|b| b.iter().map(|i| weights[i]).sum())
        .collect();
    let c_quotient = min_winning_size(quota, &bloc_totals).expect("feasible");

    let nonzero = |values: &[BigRational]| values.iter().filter(|v| !v.is_zero()).count();
    let top_share = |values: &[BigRational], k: usize| -> f64 {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| b.cmp(a));
        sorted[..k]
            .iter()
            .sum::<BigRational>()
            .to_f64()
            .expect("finite")
    };

    assert_eq!(summary.c, 9, "least winning size");
    assert_eq!(c_quotient, 7, "least winning bloc count");
    assert_eq!(nonzero(&psi.values), 77, "members with nonzero psi");
    assert_eq!(nonzero(&owen.values), 38, "members with nonzero two-stage index");
    let psi_top6 = top_share(&psi.values, 6);
    let owen_top6 = top_share(&owen.values, 6);
    assert!((psi_top6 - 0.660).abs() < 0.001, "psi top-6 share {psi_top6}");
    assert!((owen_top6 - 0.643).abs() < 0.001, "owen top-6 share {owen_top6}");
    format!(
        "188-member dataset reproduced (c = 9, bloc c = 7, 77/38 nonzero, \
         top-6 shares {psi_top6:.3}/{owen_top6:.3}) in {elapsed:?}"
    )
}

#[test]
fn criterion_8_large_body_reproduction_or_skip() {
    if let Ok(path) = std::env::var("IMF_DATA") {
        let detail = imf_criterion(&path);
        println!("criterion 8: PASS — {detail}");
        return;
    }

    // no dataset: still prove the counting backend handles the full scale
    let (weights, partition) = synthetic_body();
    let total: u64 = weights.iter().sum();
    let quota = total.div_ceil(2);
    let config = CountingConfig::default();

    let start = Instant::now();
    let psi = felsenthal_weighted(quota, &weights, &config).expect("within budget");
    let owen =
        felsenthal_owen_weighted(quota, &weights, &partition, &config).expect("within budget");
    let elapsed = start.elapsed();

    let one: BigRational = BigRational::one();
    assert_eq!(psi.values.iter().sum::<BigRational>(), one);
    assert_eq!(owen.values.iter().sum::<BigRational>(), one);
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "criterion 8: SKIP — IMF_DATA not set, so the published figures were \
         not checked; a synthetic 188-member body (total weight {total}, 25 \
         blocs) ran both counting indices exactly in {elapsed:?}"
    );
}

#[test]
fn criterion_9_unanimity_quota_equalizes_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9A11);
    // enumeration-scale body: cross-check counting against enumeration
    for &n in &[5usize, 9] {
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=50)).collect();
        let total: u64 = weights.iter().sum();
        let config = CountingConfig::default();

        let psi = felsenthal_weighted(total, &weights, &config).expect("tiny");
        assert_eq!(psi.values, vec![rat(1, n as i64); n]);
        let game = WeightedGame::new(total, weights.clone())
            .expect("feasible")
            .to_explicit(18)
            .expect("small");
        assert_eq!(felsenthal(&game).values, psi.values);

        let grand = felsenthal_owen_weighted(total, &weights, &Partition::grand(n), &config)
            .expect("tiny");
        assert_eq!(grand.values, vec![rat(1, n as i64); n]);

        let seats: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let partition = partition_from_seats(n, &seats);
        let owen =
            felsenthal_owen_weighted(total, &weights, &partition, &config).expect("tiny");
        let u = partition.union_count() as i64;
        for i in 0..n {
            let block_size = partition.block(partition.block_of(i)).len() as i64;
            assert_eq!(owen.values[i], rat(1, u * block_size), "player {i}");
        }
        let gwu = GameWithUnions::new(game, partition).expect("same n");
        assert_eq!(felsenthal_owen(&gwu).values, owen.values);
    }

    // counting-only scale
    let n = 40usize;
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=50)).collect();
    let total: u64 = weights.iter().sum();
    let psi = felsenthal_weighted(total, &weights, &CountingConfig::default()).expect("fine");
    assert_eq!(psi.values, vec![rat(1, n as i64); n]);

    println!(
        "criterion 9: PASS — at a 100% quota every member holds 1/n, the \
         grand-partition two-stage index matches, and under any partition a \
         member of a block of size s in a u-block partition holds 1/(u*s)"
    );
}
