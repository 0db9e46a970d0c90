//! Built-in reference scenarios: end-to-end checks of the shipped binary
//! against hand-computed exact values, runnable in the field with
//! `fpower selftest`. A mismatch means the build is wrong, so failures map
//! to the internal-invariant exit code.

use felsenthal::indices::felsenthal_owen_by_essential_sums;
use felsenthal::unions::{essential_least_size_set, seven_player_example};
use felsenthal::{
    felsenthal, felsenthal_owen, felsenthal_owen_weighted, felsenthal_weighted, Coalition,
    CountingConfig, ExplicitGame, GameWithUnions, Partition, WeightedGame,
};
use num::BigRational;

use crate::body::Failure;

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn rats(pairs: &[(i64, i64)]) -> Vec<BigRational> {
    pairs.iter().map(|&(n, d)| rat(n, d)).collect()
}

fn expect(
    label: &str,
    got: &[BigRational],
    want: &[BigRational],
) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn seven_player_profile() -> Result<String, String> {
    let gwu = seven_player_example();
    let want = rats(&[(1, 4), (1, 24), (1, 24), (1, 12), (1, 6), (1, 12), (1, 3)]);
    expect("composition form", &felsenthal_owen(&gwu).values, &want)?;
    expect(
        "essential-sum form",
        &felsenthal_owen_by_essential_sums(&gwu).values,
        &want,
    )?;
    Ok("both forms give (1/4, 1/24, 1/24, 1/12, 1/6, 1/12, 1/3)".to_string())
}

fn decomposition_invariance() -> Result<String, String> {
    let blocks: Vec<Coalition> = vec![
        [0usize, 1, 2, 3].into_iter().collect(),
        [4usize, 5].into_iter().collect(),
    ];
    let partition = Partition::new(6, blocks).map_err(|e| e.to_string())?;
    let make = |fams: &[&[usize]]| -> Result<GameWithUnions, String> {
        let family = fams.iter().map(|s| s.iter().copied().collect());
        GameWithUnions::new(
            ExplicitGame::new(6, family).map_err(|e| e.to_string())?,
            partition.clone(),
        )
        .map_err(|e| e.to_string())
    };
    let w1 = make(&[&[0, 1, 4], &[2, 3, 5], &[0, 1, 5]])?;
    let v = make(&[&[0, 1], &[2, 3], &[4], &[5]])?;
    if essential_least_size_set(&w1) != essential_least_size_set(&v) {
        return Err("essential sets differ".to_string());
    }
    let want = rats(&[(1, 8), (1, 8), (1, 8), (1, 8), (1, 4), (1, 4)]);
    expect("compound game", &felsenthal_owen(&w1).values, &want)?;
    expect("decomposed game", &felsenthal_owen(&v).values, &want)?;
    Ok("compound and decomposed games share essentials and values".to_string())
}

fn dictator_under_unions() -> Result<String, String> {
    let weights = [4u64, 2, 1];
    let partition = Partition::new(
        3,
        vec![Coalition::singleton(0), [1usize, 2].into_iter().collect()],
    )
    .map_err(|e| e.to_string())?;
    let game = WeightedGame::new(4, weights.to_vec())
        .and_then(|g| g.to_explicit(10))
        .map_err(|e| e.to_string())?;
    let want = rats(&[(1, 1), (0, 1), (0, 1)]);
    expect("one-stage", &felsenthal(&game).values, &want)?;
    let gwu = GameWithUnions::new(game, partition.clone()).map_err(|e| e.to_string())?;
    expect("two-stage", &felsenthal_owen(&gwu).values, &want)?;
    let counted = felsenthal_owen_weighted(4, &weights, &partition, &CountingConfig::default())
        .map_err(|e| e.to_string())?;
    expect("counting backend", &counted.values, &want)?;
    Ok("[4; 4,2,1] with blocs {0},{1,2} stays (1/1, 0/1, 0/1)".to_string())
}

fn backend_agreement() -> Result<String, String> {
    let weights = [3u64, 1, 1, 1];
    let quota = 4;
    let partition = Partition::new(
        4,
        vec![
            Coalition::singleton(0),
            [1usize, 2, 3].into_iter().collect(),
        ],
    )
    .map_err(|e| e.to_string())?;
    let want = rats(&[(1, 2), (1, 6), (1, 6), (1, 6)]);
    let game = WeightedGame::new(quota, weights.to_vec())
        .and_then(|g| g.to_explicit(10))
        .map_err(|e| e.to_string())?;
    let gwu = GameWithUnions::new(game, partition.clone()).map_err(|e| e.to_string())?;
    expect("enumeration", &felsenthal_owen(&gwu).values, &want)?;
    let counted =
        felsenthal_owen_weighted(quota, &weights, &partition, &CountingConfig::default())
            .map_err(|e| e.to_string())?;
    expect("counting", &counted.values, &want)?;
    Ok("[4; 3,1,1,1] with blocs {0},{1,2,3} gives (1/2, 1/6, 1/6, 1/6) on both backends"
        .to_string())
}

fn unanimity_split() -> Result<String, String> {
    let weights = [1u64; 7];
    let config = CountingConfig::default();
    let psi = felsenthal_weighted(7, &weights, &config).map_err(|e| e.to_string())?;
    expect("one-stage", &psi.values, &vec![rat(1, 7); 7])?;
    let partition = Partition::new(
        7,
        vec![
            [0usize, 1, 2].into_iter().collect(),
            [3usize, 4, 5].into_iter().collect(),
            Coalition::singleton(6),
        ],
    )
    .map_err(|e| e.to_string())?;
    let owen = felsenthal_owen_weighted(7, &weights, &partition, &config)
        .map_err(|e| e.to_string())?;
    let want = rats(&[(1, 9), (1, 9), (1, 9), (1, 9), (1, 9), (1, 9), (1, 3)]);
    expect("two-stage", &owen.values, &want)?;
    Ok("unanimity splits 1/(blocs * bloc size), here (1/9 x6, 1/3)".to_string())
}

/// Runs every scenario; the returned text has one `ok` line per scenario.
pub fn run() -> Result<String, Failure> {
    let scenarios: [(&str, fn() -> Result<String, String>); 5] = [
        ("seven-player profile", seven_player_profile),
        ("decomposition invariance", decomposition_invariance),
        ("dictator under unions", dictator_under_unions),
        ("backend agreement", backend_agreement),
        ("unanimity split", unanimity_split),
    ];
    let mut out = String::new();
    for (name, scenario) in scenarios {
        match scenario() {
            Ok(detail) => out.push_str(&format!("ok — {name}: {detail}\n")),
            Err(why) => {
                return Err(Failure::internal(format!(
                    "selftest `{name}` failed: {why}"
                )))
            }
        }
    }
    out.push_str("all reference scenarios passed\n");
    Ok(out)
}
