//! Input plumbing: the member CSV, the explicit-game JSON, and quota
//! resolution. Everything here turns user files and flags into validated
//! library types, with errors classified by the exit code they deserve.

use std::fmt;
use std::path::Path;

use felsenthal::{Coalition, ExplicitGame, Partition};
use serde::Deserialize;

/// A failure carrying the process exit code of its class: 2 for unusable
/// input, 3 for requests over a capacity budget, 4 for internal invariant
/// violations (a bug, never the user's fault).
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.message.fmt(f)
    }
}

impl From<felsenthal::Error> for Failure {
    fn from(e: felsenthal::Error) -> Self {
        let code = match e {
            felsenthal::Error::Domain(_) => 2,
            felsenthal::Error::Capacity(_) => 3,
            felsenthal::Error::Internal(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// One row of the member CSV, in file order.
#[derive(Clone, Debug)]
pub struct Member {
    pub id: String,
    pub name: String,
    pub weight: u64,
    pub bloc: String,
}

/// A weighted voting body read from `id,name,weight,bloc` CSV. Member order
/// is file order; bloc order is first appearance.
#[derive(Clone, Debug)]
pub struct VotingBody {
    pub members: Vec<Member>,
    pub blocs: Vec<String>,
}

impl VotingBody {
    pub fn from_csv_path(path: &Path) -> Result<Self, Failure> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
        let headers = reader
            .headers()
            .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
        let expected = ["id", "name", "weight", "bloc"];
        let got: Vec<String> = headers.iter().map(|h| h.to_ascii_lowercase()).collect();
        if got != expected {
            return Err(Failure::parse(format!(
                "{}: header must be `id,name,weight,bloc`, found `{}`",
                path.display(),
                got.join(",")
            )));
        }

        let mut members: Vec<Member> = Vec::new();
        let mut blocs: Vec<String> = Vec::new();
        for (row, record) in reader.records().enumerate() {
            // header is line 1, so the first record is line 2
            let line = row + 2;
            let record =
                record.map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
            if record.len() != 4 {
                return Err(Failure::parse(format!(
                    "line {line}: expected 4 fields, found {}",
                    record.len()
                )));
            }
            let id = record[0].to_string();
            if id.is_empty() {
                return Err(Failure::parse(format!("line {line}: empty id")));
            }
            if members.iter().any(|m| m.id == id) {
                return Err(Failure::parse(format!("line {line}: duplicate id `{id}`")));
            }
            let weight: u64 = record[2].parse().map_err(|_| {
                Failure::parse(format!(
                    "line {line}: weight `{}` is not a nonnegative integer",
                    &record[2]
                ))
            })?;
            let bloc = record[3].to_string();
            if bloc.is_empty() {
                return Err(Failure::parse(format!("line {line}: empty bloc")));
            }
            if !blocs.contains(&bloc) {
                blocs.push(bloc.clone());
            }
            members.push(Member {
                id,
                name: record[1].to_string(),
                weight,
                bloc,
            });
        }
        if members.is_empty() {
            return Err(Failure::parse(format!(
                "{}: no members after the header",
                path.display()
            )));
        }
        Ok(VotingBody { members, blocs })
    }

    pub fn weights(&self) -> Vec<u64> {
        self.members.iter().map(|m| m.weight).collect()
    }

    pub fn total_weight(&self) -> Result<u64, Failure> {
        let mut total: u64 = 0;
        for m in &self.members {
            total = total
                .checked_add(m.weight)
                .ok_or_else(|| Failure::parse("total weight overflows 64 bits"))?;
        }
        if total == 0 {
            return Err(Failure::parse("total weight is zero"));
        }
        Ok(total)
    }

    pub fn partition(&self) -> Result<Partition, Failure> {
        let blocks: Vec<Coalition> = self
            .blocs
            .iter()
            .map(|b| {
                self.members
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| &m.bloc == b)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok(Partition::new(self.members.len(), blocks)?)
    }
}

#[derive(Deserialize)]
struct ExplicitInput {
    n: usize,
    minimal_winning: Vec<Vec<usize>>,
    #[serde(default)]
    partition: Option<Vec<Vec<usize>>>,
}

/// Reads `{"n", "minimal_winning", "partition"}` JSON; a missing partition
/// means singletons.
pub fn explicit_from_json_path(path: &Path) -> Result<(ExplicitGame, Partition), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let input: ExplicitInput = serde_json::from_str(&text)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let game = ExplicitGame::new(
        input.n,
        input
            .minimal_winning
            .iter()
            .map(|ids| ids.iter().copied().collect()),
    )?;
    let partition = match input.partition {
        Some(blocks) => Partition::new(
            input.n,
            blocks.iter().map(|ids| ids.iter().copied().collect()).collect(),
        )?,
        None => Partition::singletons(input.n),
    };
    Ok((game, partition))
}

/// A quota flag: absolute votes (`"123"`), a decimal fraction of the total
/// (`"0.55"`), or a percentage (`"55%"`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotaSpec {
    Absolute(u64),
    Fraction { num: u64, den: u64 },
}

impl QuotaSpec {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let trimmed = text.trim();
        let (digits, percent) = match trimmed.strip_suffix('%') {
            Some(rest) => (rest.trim(), true),
            None => (trimmed, false),
        };
        let bad = || Failure::parse(format!("quota `{text}` is not a number"));
        let (num, den) = match digits.split_once('.') {
            Some((int_part, frac_part)) => {
                if frac_part.len() > 9 || frac_part.is_empty() {
                    return Err(Failure::parse(format!(
                        "quota `{text}` needs 1 to 9 fractional digits"
                    )));
                }
                let int: u64 = if int_part.is_empty() {
                    0
                } else {
                    int_part.parse().map_err(|_| bad())?
                };
                let frac: u64 = frac_part.parse().map_err(|_| bad())?;
                let scale = 10u64.pow(frac_part.len() as u32);
                (int * scale + frac, scale)
            }
            None => (digits.parse().map_err(|_| bad())?, 1),
        };
        if percent {
            Self::fraction(num, den * 100, text)
        } else if den == 1 {
            // a bare integer is an absolute quota
            Ok(QuotaSpec::Absolute(num))
        } else {
            Self::fraction(num, den, text)
        }
    }

    fn fraction(num: u64, den: u64, text: &str) -> Result<Self, Failure> {
        if num == 0 || num > den {
            return Err(Failure::parse(format!(
                "fractional quota `{text}` must be in (0, 1]"
            )));
        }
        Ok(QuotaSpec::Fraction { num, den })
    }

    /// The integer quota for a body with the given total weight. Fractions
    /// default to strict majority, `floor(f * total) + 1` (capped at
    /// unanimity so that `f = 1` stays feasible); with `inclusive` they
    /// round to `ceil(f * total)`, making weight `>= f * total` winning.
    pub fn resolve(self, total: u64, inclusive: bool) -> Result<u64, Failure> {
        let q = match self {
            QuotaSpec::Absolute(q) => q,
            QuotaSpec::Fraction { num, den } => {
                let product = num as u128 * total as u128;
                let den = den as u128;
                let q = if inclusive {
                    product.div_ceil(den)
                } else {
                    (product / den + 1).min(total as u128)
                };
                q as u64
            }
        };
        if q == 0 || q > total {
            return Err(Failure::parse(format!(
                "quota {q} is outside 1..={total}"
            )));
        }
        Ok(q)
    }
}
