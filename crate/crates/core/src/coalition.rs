use smallvec::SmallVec;
use std::fmt;

/// A player id: a dense index in `0..n` for the containing game.
pub type PlayerId = usize;

/// A finite set of player ids, stored as a bitset over 64-bit blocks.
///
/// Two player sets in blocks and up to 128 players stay inline; larger
/// games (the scalable backend handles 188 players) spill to the heap.
/// Trailing zero blocks are always trimmed so that equality and hashing
/// are semantic: `{0,2}` built in any insertion order compares equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coalition {
    // invariant: last block is nonzero (trimmed representation)
    blocks: SmallVec<[u64; 2]>,
}

impl Coalition {
    pub fn empty() -> Self {
        Coalition::default()
    }

    pub fn singleton(i: PlayerId) -> Self {
        let mut c = Coalition::empty();
        c.insert(i);
        c
    }

    pub fn from_ids<I: IntoIterator<Item = PlayerId>>(ids: I) -> Self {
        let mut c = Coalition::empty();
        for i in ids {
            c.insert(i);
        }
        c
    }

    /// Full player set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        Coalition::from_ids(0..n)
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn contains(&self, i: PlayerId) -> bool {
        let (blk, bit) = (i / 64, i % 64);
        blk < self.blocks.len() && self.blocks[blk] & (1u64 << bit) != 0
    }

    pub fn insert(&mut self, i: PlayerId) {
        let (blk, bit) = (i / 64, i % 64);
        if blk >= self.blocks.len() {
            self.blocks.resize(blk + 1, 0);
        }
        self.blocks[blk] |= 1u64 << bit;
    }

    pub fn remove(&mut self, i: PlayerId) {
        let (blk, bit) = (i / 64, i % 64);
        if blk < self.blocks.len() {
            self.blocks[blk] &= !(1u64 << bit);
            self.trim();
        }
    }

    pub fn with(&self, i: PlayerId) -> Self {
        let mut c = self.clone();
        c.insert(i);
        c
    }

    pub fn without(&self, i: PlayerId) -> Self {
        let mut c = self.clone();
        c.remove(i);
        c
    }

    pub fn is_subset(&self, other: &Coalition) -> bool {
        if self.blocks.len() > other.blocks.len() {
            return false;
        }
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Coalition) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(&self, other: &Coalition) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &Coalition) -> Self {
        let (long, short) = if self.blocks.len() >= other.blocks.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut blocks = long.blocks.clone();
        for (i, b) in short.blocks.iter().enumerate() {
            blocks[i] |= b;
        }
        Coalition { blocks }
    }

    pub fn intersection(&self, other: &Coalition) -> Self {
        let n = self.blocks.len().min(other.blocks.len());
        let mut c = Coalition {
            blocks: self.blocks[..n]
                .iter()
                .zip(other.blocks[..n].iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        c.trim();
        c
    }

    pub fn difference(&self, other: &Coalition) -> Self {
        let mut blocks = self.blocks.clone();
        for (i, b) in other.blocks.iter().enumerate().take(blocks.len()) {
            blocks[i] &= !b;
        }
        let mut c = Coalition { blocks };
        c.trim();
        c
    }

    /// Member ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = PlayerId> + '_ {
        self.blocks.iter().enumerate().flat_map(|(blk, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(blk * 64 + bit)
                }
            })
        })
    }

    pub fn min_id(&self) -> Option<PlayerId> {
        self.iter().next()
    }

    pub fn max_id(&self) -> Option<PlayerId> {
        let blk = self.blocks.len().checked_sub(1)?;
        Some(blk * 64 + 63 - self.blocks[blk].leading_zeros() as usize)
    }

    fn trim(&mut self) {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }
}

impl FromIterator<PlayerId> for Coalition {
    fn from_iter<I: IntoIterator<Item = PlayerId>>(iter: I) -> Self {
        Coalition::from_ids(iter)
    }
}

/// Orders by size first, then lexicographically by ascending member list.
/// This puts least-size coalitions first in sorted family listings and
/// makes every emitted ordering reproducible.
impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, i) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Removes every member of `family` that strictly contains another member,
/// returning the antichain of minimal elements, sorted and deduplicated.
pub fn minimize_family(mut family: Vec<Coalition>) -> Vec<Coalition> {
    family.sort();
    family.dedup();
    // sorted by size, so a set can only contain earlier (smaller) ones
    let mut minimal: Vec<Coalition> = Vec::with_capacity(family.len());
    for s in family {
        if !minimal.iter().any(|m| m.is_subset(&s)) {
            minimal.push(s);
        }
    }
    minimal
}

/// All subsets of `ground`, in a deterministic order (binary counting over
/// the member list). Exponential; callers must bound `ground.len()`.
pub fn subsets_of(ground: &Coalition) -> Vec<Coalition> {
    let ids: Vec<PlayerId> = ground.iter().collect();
    let m = ids.len();
    assert!(m < 26, "subset enumeration bounded to 25 members");
    (0u32..(1 << m))
        .map(|mask| {
            Coalition::from_ids(
                ids.iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &i)| i),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_order_is_irrelevant() {
        let a = Coalition::from_ids([5, 0, 2]);
        let b = Coalition::from_ids([2, 5, 0]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
    }

    #[test]
    fn removal_trims_high_blocks() {
        let mut a = Coalition::from_ids([1, 130]);
        a.remove(130);
        assert_eq!(a, Coalition::singleton(1));
        assert_eq!(a.max_id(), Some(1));
    }

    #[test]
    fn set_algebra_with_wide_ids() {
        let a = Coalition::from_ids([0, 70, 187]);
        let b = Coalition::from_ids([70, 3]);
        assert_eq!(a.intersection(&b), Coalition::singleton(70));
        assert_eq!(a.union(&b), Coalition::from_ids([0, 3, 70, 187]));
        assert_eq!(a.difference(&b), Coalition::from_ids([0, 187]));
        assert!(Coalition::from_ids([70]).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn ordering_is_size_then_lexicographic() {
        let mut v = vec![
            Coalition::from_ids([1, 2]),
            Coalition::singleton(9),
            Coalition::from_ids([0, 5]),
            Coalition::singleton(3),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Coalition::singleton(3),
                Coalition::singleton(9),
                Coalition::from_ids([0, 5]),
                Coalition::from_ids([1, 2]),
            ]
        );
    }

    #[test]
    fn minimize_family_drops_supersets_and_duplicates() {
        let family = vec![
            Coalition::from_ids([0, 1, 2]),
            Coalition::from_ids([0, 1]),
            Coalition::from_ids([0, 1]),
            Coalition::from_ids([2, 3]),
        ];
        assert_eq!(
            minimize_family(family),
            vec![Coalition::from_ids([0, 1]), Coalition::from_ids([2, 3])]
        );
    }

    #[test]
    fn subsets_of_small_ground() {
        let subs = subsets_of(&Coalition::from_ids([1, 4]));
        assert_eq!(subs.len(), 4);
        assert!(subs.contains(&Coalition::empty()));
        assert!(subs.contains(&Coalition::from_ids([1, 4])));
    }
}
