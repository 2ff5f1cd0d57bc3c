//! Partitions laid out over a variable universe.
//!
//! A multi-partition assigns one nonnegative part to every indeterminate of a
//! context; reading the parts in flat-index order must give a weakly
//! decreasing sequence.  Equivalently it is an ordinary partition with at
//! most `m*q(n,k)` parts, zero-padded to the universe size.  The staircase is
//! the strictly decreasing multi-partition `size-1, size-2, ..., 1, 0` that
//! turns weakly decreasing exponent sequences into strictly decreasing ones.

use crate::error::{Error, Result};
use crate::indexing::Context;
use std::fmt;

/// Cap on how many multi-partitions [`enumerate_multipartitions`] will
/// materialize in one call.
pub const ENUMERATION_BUDGET: u64 = 200_000;

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts any weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        validate_flat_chain(&parts, false)?;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Checks that `values` is weakly decreasing, or strictly decreasing along
/// its nonzero prefix when `strict` is set.  The reported position is the
/// 1-based flat index of the offending right-hand entry.
pub fn validate_flat_chain(values: &[u32], strict: bool) -> Result<()> {
    for (i, pair) in values.windows(2).enumerate() {
        let (left, right) = (pair[0], pair[1]);
        let broken = if strict {
            left < right || (left == right && right > 0)
        } else {
            left < right
        };
        if broken {
            return Err(Error::ChainViolation {
                position: i + 2,
                left,
                right,
            });
        }
    }
    Ok(())
}

/// A partition distributed over the full universe of a context, one part per
/// indeterminate, weakly decreasing in flat order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    ctx: Context,
    flat: Vec<u32>,
}

impl MultiPartition {
    /// Builds from the flat part sequence; shorter input is zero-padded to
    /// the universe size.
    pub fn from_flat(ctx: Context, mut flat: Vec<u32>) -> Result<Self> {
        let size = ctx.universe_size();
        if flat.len() > size {
            return Err(Error::TooManyParts {
                got: flat.len(),
                expected: size,
            });
        }
        validate_flat_chain(&flat, false)?;
        flat.resize(size, 0);
        Ok(MultiPartition { ctx, flat })
    }

    pub fn from_partition(ctx: Context, partition: &Partition) -> Result<Self> {
        MultiPartition::from_flat(ctx, partition.parts().to_vec())
    }

    /// Builds from per-depth level arrays: level `d` lists parts for the
    /// depth-`d` indeterminates in flat order and may be shorter than the
    /// `m*n^d` slots it fills.
    pub fn from_levels(ctx: Context, levels: &[Vec<u32>]) -> Result<Self> {
        if levels.len() > ctx.k() as usize + 1 {
            return Err(Error::TooManyParts {
                got: levels.len(),
                expected: ctx.k() as usize + 1,
            });
        }
        let mut flat = Vec::with_capacity(ctx.universe_size());
        for (d, level) in levels.iter().enumerate() {
            let slots = (ctx.m() as u64 * (ctx.n() as u64).pow(d as u32)) as usize;
            if level.len() > slots {
                return Err(Error::TooManyParts {
                    got: level.len(),
                    expected: slots,
                });
            }
            flat.extend_from_slice(level);
            flat.resize(flat.len() + slots - level.len(), 0);
        }
        MultiPartition::from_flat(ctx, flat)
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn flat(&self) -> &[u32] {
        &self.flat
    }

    /// Per-depth level arrays with trailing zeros removed.
    pub fn levels(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.ctx.k() as usize + 1);
        let mut start = 0usize;
        for d in 0..=self.ctx.k() {
            let slots = (self.ctx.m() as u64 * (self.ctx.n() as u64).pow(d)) as usize;
            let mut level = self.flat[start..start + slots].to_vec();
            while level.last() == Some(&0) {
                level.pop();
            }
            out.push(level);
            start += slots;
        }
        out
    }

    pub fn weight(&self) -> u64 {
        self.flat.iter().map(|&p| p as u64).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.flat.iter().filter(|&&p| p > 0).count()
    }

    /// True when the nonzero prefix is strictly decreasing.
    pub fn is_strict(&self) -> bool {
        validate_flat_chain(&self.flat, true).is_ok()
    }

    pub fn as_partition(&self) -> Partition {
        Partition::new(self.flat.clone()).expect("flat chain is validated")
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (d, level) in self.levels().iter().enumerate() {
            if d > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (i, p) in level.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// The strictly decreasing sequence `size-1, size-2, ..., 1, 0` over the
/// universe of `ctx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    ctx: Context,
    values: Vec<u32>,
}

impl Staircase {
    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

pub fn staircase(ctx: Context) -> Staircase {
    let size = ctx.universe_size();
    Staircase {
        ctx,
        values: (0..size).map(|i| (size - 1 - i) as u32).collect(),
    }
}

/// Adds the staircase entrywise, turning a weakly decreasing sequence into a
/// strictly decreasing one.
pub fn shift_by_staircase(mp: &MultiPartition) -> MultiPartition {
    let stairs = staircase(mp.context());
    let flat = mp
        .flat()
        .iter()
        .zip(stairs.values())
        .map(|(&l, &d)| l + d)
        .collect();
    MultiPartition {
        ctx: mp.context(),
        flat,
    }
}

/// Inverse of [`shift_by_staircase`]: subtracts the staircase and checks the
/// result is a valid multi-partition.
pub fn unshift_by_staircase(mp: &MultiPartition) -> Result<MultiPartition> {
    let stairs = staircase(mp.context());
    let mut flat = Vec::with_capacity(mp.flat().len());
    for (i, (&l, &d)) in mp.flat().iter().zip(stairs.values()).enumerate() {
        flat.push(l.checked_sub(d).ok_or_else(|| {
            Error::UnshiftError(format!(
                "entry {l} at flat position {} is below the staircase value {d}",
                i + 1
            ))
        })?);
    }
    validate_flat_chain(&flat, false)?;
    Ok(MultiPartition {
        ctx: mp.context(),
        flat,
    })
}

/// Number of partitions of `r` into at most `max_parts` parts.  By
/// conjugation this equals the number of partitions of `r` with every part at
/// most `max_parts`, which is what the table below accumulates.
pub fn count_partitions_at_most(r: u64, max_parts: u64) -> Result<u64> {
    const MAX_WEIGHT: u64 = 10_000;
    if r > MAX_WEIGHT {
        return Err(Error::BudgetExceeded(format!(
            "partition counting for weight {r} exceeds the supported maximum {MAX_WEIGHT}"
        )));
    }
    let weight = r as usize;
    let mut table = vec![0u64; weight + 1];
    table[0] = 1;
    for part in 1..=max_parts.min(r) as usize {
        for j in part..=weight {
            let add = table[j - part];
            table[j] = table[j].checked_add(add).ok_or_else(|| {
                Error::BudgetExceeded(format!("partition count of {r} overflows"))
            })?;
        }
    }
    Ok(table[weight])
}

/// All multi-partitions of weight `r` over the universe of `ctx`, first part
/// descending, lexicographically decreasing within equal first parts.
pub fn enumerate_multipartitions(ctx: Context, r: u64) -> Result<Vec<MultiPartition>> {
    let size = ctx.universe_size() as u64;
    let expected = count_partitions_at_most(r, size)?;
    if expected > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{expected} multi-partitions of weight {r} exceed the budget {ENUMERATION_BUDGET}"
        )));
    }
    let mut out = Vec::with_capacity(expected as usize);
    let mut current: Vec<u32> = Vec::new();
    descend(ctx, r, r as u32, size as usize, &mut current, &mut out);
    Ok(out)
}

fn descend(
    ctx: Context,
    remaining: u64,
    max_part: u32,
    slots: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<MultiPartition>,
) {
    if remaining == 0 {
        let mut flat = current.clone();
        flat.resize(ctx.universe_size(), 0);
        out.push(MultiPartition { ctx, flat });
        return;
    }
    if slots == 0 {
        return;
    }
    let cap = (max_part as u64).min(remaining) as u32;
    for part in (1..=cap).rev() {
        // the tail must fit: slots-1 further parts of size at most `part`
        if (remaining - part as u64) > (part as u64) * (slots as u64 - 1) {
            continue;
        }
        current.push(part);
        descend(ctx, remaining - part as u64, part, slots - 1, current, out);
        current.pop();
    }
}
