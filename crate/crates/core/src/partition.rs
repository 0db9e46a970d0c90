use crate::coalition::{Coalition, PlayerId};
use crate::error::{Error, Result};
use std::fmt;

/// A union (block) index within a partition.
pub type UnionId = usize;

/// An a priori union structure: an ordered partition of `{0..n-1}`.
///
/// Blocks keep their input order so union ids are stable and results are
/// reproducible across runs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Coalition>,
    block_of: Vec<UnionId>,
}

impl Partition {
    /// Validates that the blocks are nonempty, pairwise disjoint and cover
    /// `{0..n-1}` exactly.
    pub fn new(n: usize, blocks: Vec<Coalition>) -> Result<Self> {
        let mut block_of: Vec<Option<UnionId>> = vec![None; n];
        for (k, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::domain(format!("partition block {k} is empty")));
            }
            for i in block.iter() {
                if i >= n {
                    return Err(Error::domain(format!(
                        "player {i} in block {k} out of range for n={n}"
                    )));
                }
                if let Some(prev) = block_of[i] {
                    return Err(Error::domain(format!(
                        "player {i} appears in blocks {prev} and {k}"
                    )));
                }
                block_of[i] = Some(k);
            }
        }
        let block_of: Vec<UnionId> = block_of
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::domain(format!("player {i} not covered"))))
            .collect::<Result<_>>()?;
        Ok(Partition { blocks, block_of })
    }

    /// Every player in their own union.
    pub fn singletons(n: usize) -> Self {
        assert!(n >= 1, "partition needs at least one player");
        Partition {
            blocks: (0..n).map(Coalition::singleton).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// One union containing everyone.
    pub fn grand(n: usize) -> Self {
        assert!(n >= 1, "partition needs at least one player");
        Partition {
            blocks: vec![Coalition::full(n)],
            block_of: vec![0; n],
        }
    }

    pub fn player_count(&self) -> usize {
        self.block_of.len()
    }

    /// Number of unions, `u`.
    pub fn union_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    pub fn block(&self, k: UnionId) -> &Coalition {
        &self.blocks[k]
    }

    pub fn block_of(&self, i: PlayerId) -> UnionId {
        self.block_of[i]
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn is_grand(&self) -> bool {
        self.blocks.len() == 1
    }

    /// The representatives of `s`: the unions `s` intersects.
    pub fn representatives(&self, s: &Coalition) -> Coalition {
        let mut r = Coalition::empty();
        for i in s.iter() {
            r.insert(self.block_of[i]);
        }
        r
    }

    /// The pooled player set of a set `r` of unions.
    pub fn union_of_blocks(&self, r: &Coalition) -> Coalition {
        let mut s = Coalition::empty();
        for k in r.iter() {
            s = s.union(&self.blocks[k]);
        }
        s
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}
