//! Explicit minimum conversion sets and the block-label calculus for double
//! coronas.
//!
//! A double-corona block `i` is `{v_i, w_i, u_i^1..u_i^p}`. Each block of a
//! seed set is labelled by what it holds:
//!
//! | label | seeds in the block                  |
//! |-------|-------------------------------------|
//! | `B`   | none                                |
//! | `O`   | `w_i` only                          |
//! | `I`   | `v_i` only                          |
//! | `M`   | one block vertex `u_i^j`            |
//! | `T`   | exactly two vertices                |
//! | `C`   | every vertex of the block           |
//!
//! Patterns are read cyclically: block `n` is adjacent to block `1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::closed_form::{conv_corona, conv_double_corona, ConversionNumber};
use crate::dynamics::SeedSet;
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockLabel {
    Blank,
    Complete,
    Outer,
    Inner,
    Middle,
    Two,
}

impl BlockLabel {
    pub fn symbol(self) -> char {
        match self {
            BlockLabel::Blank => 'B',
            BlockLabel::Complete => 'C',
            BlockLabel::Outer => 'O',
            BlockLabel::Inner => 'I',
            BlockLabel::Middle => 'M',
            BlockLabel::Two => 'T',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self> {
        Ok(match c {
            'B' => BlockLabel::Blank,
            'C' => BlockLabel::Complete,
            'O' => BlockLabel::Outer,
            'I' => BlockLabel::Inner,
            'M' => BlockLabel::Middle,
            'T' => BlockLabel::Two,
            other => return Err(Error::InvalidLabel(other)),
        })
    }
}

/// One label per block, in cyclic block order. Serialises as a plain
/// uppercase string such as `"MOMBMOM"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPattern(Vec<BlockLabel>);

impl BlockPattern {
    pub fn new(labels: Vec<BlockLabel>) -> Self {
        Self(labels)
    }

    pub fn labels(&self) -> &[BlockLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for BlockPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

impl FromStr for BlockPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(BlockLabel::from_symbol)
            .collect::<Result<_>>()
            .map(Self)
    }
}

impl Serialize for BlockPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BlockPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn require_finite(value: ConversionNumber, what: impl fmt::Display) -> Result<usize> {
    value
        .finite()
        .ok_or_else(|| Error::Inconvertible(what.to_string()))
}

/// Cycle positions (1-based) of a minimum threshold-2 conversion set of
/// `C_n`: the odd positions for even `n`, and `1, 2, 4, 6, ..., n-1` for odd
/// `n` so that exactly one pair of seeds is adjacent.
pub fn alternating_cycle_positions(n: usize) -> Vec<usize> {
    if n.is_multiple_of(2) {
        (1..=n).step_by(2).collect()
    } else {
        std::iter::once(1).chain((2..n).step_by(2)).collect()
    }
}

/// A seed of size `C_k(C_n ⊙ K_p)` that converts the corona.
///
/// For `k ≤ p+1` this is the first `k-1` vertices of each block plus `v_1`;
/// for `k = p+2` it is every block vertex plus an alternating set of inner
/// vertices. With `p = 0` these reduce to the cycle constructions.
pub fn canonical_corona_seed(n: usize, p: usize, k: usize) -> Result<SeedSet> {
    let spec = FamilySpec::corona(n, p);
    let target = require_finite(conv_corona(n, p, k)?, spec)?;
    let mut ids: Vec<VertexId> = Vec::with_capacity(target);
    if k <= p + 1 {
        for i in 1..=n {
            ids.extend((1..k).map(|j| spec.block(i, j)));
        }
        ids.push(spec.inner(1));
    } else {
        for i in 1..=n {
            ids.extend((1..=p).map(|j| spec.block(i, j)));
        }
        ids.extend(
            alternating_cycle_positions(n)
                .into_iter()
                .map(|i| spec.inner(i)),
        );
    }
    let seed = SeedSet::new(ids);
    debug_assert_eq!(seed.len(), target);
    Ok(seed)
}

/// The threshold-2 block pattern of size `C_2(C_n ⊙⊙ K_p)`.
///
/// `p ≥ 2`: `MOMB` repeated `⌊n/4⌋` times followed by `""`, `M`, `MO` or
/// `MOM` according to `n mod 4`. `p = 1`: `IOIO…IO`, with a trailing `M`
/// when `n` is odd.
pub fn canonical_double_corona_pattern(n: usize, p: usize) -> Result<BlockPattern> {
    use BlockLabel::*;
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let labels: Vec<_> = match p {
        0 => {
            return Err(Error::BlockSizeTooSmall { p, min: 1 });
        }
        1 => {
            let mut labels: Vec<_> = [Inner, Outer].into_iter().cycle().take(n - n % 2).collect();
            if n % 2 == 1 {
                labels.push(Middle);
            }
            labels
        }
        _ => {
            const UNIT: [BlockLabel; 4] = [Middle, Outer, Middle, Blank];
            UNIT.iter().cycle().take(n).copied().collect()
        }
    };
    Ok(BlockPattern(labels))
}

/// Decodes a pattern using the block vertices `offset+1, offset+2, ...` for
/// `M` and `T`.
fn place_pattern(pattern: &BlockPattern, spec: FamilySpec, offset: usize) -> Result<Vec<VertexId>> {
    let (n, p) = (spec.n, spec.p);
    if pattern.len() != n {
        return Err(Error::PatternLength {
            expected: n,
            found: pattern.len(),
        });
    }
    let mut ids = Vec::new();
    for (idx, &label) in pattern.labels().iter().enumerate() {
        let i = idx + 1;
        let needed = match label {
            BlockLabel::Middle => 1,
            BlockLabel::Two => 2,
            _ => 0,
        };
        if offset + needed > p {
            return Err(Error::LabelNeedsLargerBlock {
                label: label.symbol(),
                block: i,
                needed,
                p: p.saturating_sub(offset),
            });
        }
        match label {
            BlockLabel::Blank => {}
            BlockLabel::Outer => ids.push(spec.outer(i)),
            BlockLabel::Inner => ids.push(spec.inner(i)),
            BlockLabel::Middle | BlockLabel::Two => {
                ids.extend((offset + 1..=offset + needed).map(|j| spec.block(i, j)))
            }
            BlockLabel::Complete => {
                ids.push(spec.inner(i));
                ids.push(spec.outer(i));
                ids.extend((1..=p).map(|j| spec.block(i, j)));
            }
        }
    }
    Ok(ids)
}

/// Seeds of a pattern on `C_n ⊙⊙ K_p`. `M` seeds `u_i^1`, `T` seeds
/// `u_i^1, u_i^2`.
pub fn pattern_to_seed(pattern: &BlockPattern, n: usize, p: usize) -> Result<SeedSet> {
    let spec = FamilySpec::double_corona(n, p);
    spec.validate()?;
    Ok(SeedSet::new(place_pattern(pattern, spec, 0)?))
}

/// Labels each block of a double-corona seed set.
pub fn seed_to_pattern(seed: &SeedSet, n: usize, p: usize) -> Result<BlockPattern> {
    let spec = FamilySpec::double_corona(n, p);
    spec.validate()?;
    if let Some(v) = seed.iter().find(|&v| v >= spec.num_vertices()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            num_vertices: spec.num_vertices(),
        });
    }
    let labels = (1..=n)
        .map(|i| {
            let inner = seed.contains(spec.inner(i));
            let outer = seed.contains(spec.outer(i));
            let middle = (1..=p).filter(|&j| seed.contains(spec.block(i, j))).count();
            let total = inner as usize + outer as usize + middle;
            Ok(match (total, inner, outer) {
                (0, ..) => BlockLabel::Blank,
                (t, ..) if t == p + 2 => BlockLabel::Complete,
                (1, true, _) => BlockLabel::Inner,
                (1, _, true) => BlockLabel::Outer,
                (1, ..) => BlockLabel::Middle,
                (2, ..) => BlockLabel::Two,
                (seeds, ..) => return Err(Error::UnrepresentableBlock { block: i, seeds }),
            })
        })
        .collect::<Result<_>>()?;
    Ok(BlockPattern(labels))
}

/// A seed of size `C_k(C_n ⊙⊙ K_p)` that converts the double corona.
///
/// Peels `k-2` block vertices from every block (all `p` when `k ≥ p+2`) and
/// completes the residual threshold-2 problem with the canonical pattern,
/// or with alternating seeds on both cycles once the blocks are exhausted.
pub fn canonical_double_corona_seed(n: usize, p: usize, k: usize) -> Result<SeedSet> {
    let spec = FamilySpec::double_corona(n, p);
    let target = require_finite(conv_double_corona(n, p, k)?, spec)?;
    let mut ids = Vec::with_capacity(target);
    if k == 1 {
        ids.push(spec.inner(1));
        if p == 0 {
            ids.push(spec.outer(1));
        }
    } else if k <= p + 1 {
        let peeled = k - 2;
        for i in 1..=n {
            ids.extend((1..=peeled).map(|j| spec.block(i, j)));
        }
        let pattern = canonical_double_corona_pattern(n, p - peeled)?;
        ids.extend(place_pattern(&pattern, spec, peeled)?);
    } else {
        for i in 1..=n {
            ids.extend((1..=p).map(|j| spec.block(i, j)));
        }
        for i in alternating_cycle_positions(n) {
            ids.push(spec.inner(i));
            ids.push(spec.outer(i));
        }
    }
    let seed = SeedSet::new(ids);
    debug_assert_eq!(seed.len(), target);
    Ok(seed)
}
