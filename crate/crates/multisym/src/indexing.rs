//! Variable universes indexed by an owner row and a tensor-index word.
//!
//! A context `(m, n, k)` declares the universe of indeterminates
//! `a[p; mu1, ..., mut]` with owner row `1 <= p <= m`, word depth
//! `0 <= t <= k` and word letters `1 <= mu_i <= n`.  Each label has a flat
//! index in `1..=m*q(n,k)`; depth-`t` labels precede depth-`t+1` labels and
//! ties break by `(p, word)` lexicographically.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest universe a context may declare.  Dense exponent vectors make
/// anything beyond this size useless in practice.
pub const MAX_UNIVERSE: u64 = 1 << 24;

/// Number of words of depth at most `k` over an alphabet of `n` letters,
/// `q = 1 + n + n^2 + ... + n^k`.
pub fn q(n: u32, k: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidContext("n must be at least 1".into()));
    }
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..=k {
        total = total
            .checked_add(power)
            .ok_or_else(|| Error::InvalidContext("q(n, k) overflows".into()))?;
        power = power
            .checked_mul(n as u64)
            .ok_or_else(|| Error::InvalidContext("q(n, k) overflows".into()))?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext", into = "RawContext")]
pub struct Context {
    m: u32,
    n: u32,
    k: u32,
}

#[derive(Serialize, Deserialize)]
struct RawContext {
    m: u32,
    n: u32,
    k: u32,
}

impl From<Context> for RawContext {
    fn from(ctx: Context) -> Self {
        RawContext {
            m: ctx.m,
            n: ctx.n,
            k: ctx.k,
        }
    }
}

impl TryFrom<RawContext> for Context {
    type Error = Error;

    fn try_from(raw: RawContext) -> Result<Self> {
        Context::new(raw.m, raw.n, raw.k)
    }
}

impl Context {
    pub fn new(m: u32, n: u32, k: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidContext("m must be at least 1".into()));
        }
        let per_row = q(n, k)?;
        let size = (m as u64)
            .checked_mul(per_row)
            .ok_or_else(|| Error::InvalidContext("universe size overflows".into()))?;
        if size > MAX_UNIVERSE {
            return Err(Error::InvalidContext(format!(
                "universe of {size} variables exceeds the supported maximum {MAX_UNIVERSE}"
            )));
        }
        Ok(Context { m, n, k })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `m * q(n, k)`, the number of indeterminates.
    pub fn universe_size(&self) -> usize {
        (self.m as u64 * q(self.n, self.k).expect("validated at construction")) as usize
    }

    fn check_label(&self, label: &Label) -> Result<()> {
        let bad = || Error::BadLabel(label.to_string(), self.m, self.n, self.k);
        if label.row == 0 || label.row > self.m {
            return Err(bad());
        }
        if label.word.len() > self.k as usize {
            return Err(bad());
        }
        if label.word.iter().any(|&mu| mu == 0 || mu > self.n) {
            return Err(bad());
        }
        Ok(())
    }

    /// Position of `label` in the flat enumeration, starting at 1.
    ///
    /// Depth 0 occupies `1..=m`; the depth-`t` block starts right after the
    /// `m*q(n, t-1)` shallower labels and orders its `m*n^t` members by
    /// `(p, word)` with the word read as a base-`n` numeral.
    pub fn flat_index(&self, label: &Label) -> Result<usize> {
        self.check_label(label)?;
        let t = label.word.len() as u32;
        if t == 0 {
            return Ok(label.row as usize);
        }
        let n = self.n as u64;
        let before = self.m as u64 * q(self.n, t - 1).expect("depth below k");
        let mut word_offset: u64 = 0;
        for &mu in &label.word {
            word_offset = word_offset * n + (mu as u64 - 1);
        }
        let index = before + (label.row as u64 - 1) * n.pow(t) + word_offset + 1;
        Ok(index as usize)
    }

    /// Inverse of [`Context::flat_index`].
    pub fn label_of(&self, index: usize) -> Result<Label> {
        let size = self.universe_size();
        if index == 0 || index > size {
            return Err(Error::IndexOutOfRange { index, size });
        }
        let m = self.m as u64;
        let n = self.n as u64;
        let mut t: u32 = 0;
        let mut before: u64 = 0;
        loop {
            let block = m * n.pow(t);
            if (index as u64) <= before + block {
                break;
            }
            before += block;
            t += 1;
        }
        let offset = index as u64 - before - 1;
        let row = offset / n.pow(t) + 1;
        let mut rem = offset % n.pow(t);
        let mut word = vec![0u32; t as usize];
        for slot in word.iter_mut().rev() {
            *slot = (rem % n) as u32 + 1;
            rem /= n;
        }
        Ok(Label::new(row as u32, word))
    }

    /// All labels in flat-index order.
    pub fn universe(&self) -> Vec<Label> {
        let mut labels = Vec::with_capacity(self.universe_size());
        for t in 0..=self.k {
            for p in 1..=self.m {
                let mut word = vec![1u32; t as usize];
                'words: loop {
                    labels.push(Label::new(p, word.clone()));
                    // advance the word like a base-n numeral, last letter fastest
                    let mut pos = t as usize;
                    while pos > 0 {
                        pos -= 1;
                        if word[pos] < self.n {
                            word[pos] += 1;
                            for slot in word.iter_mut().skip(pos + 1) {
                                *slot = 1;
                            }
                            continue 'words;
                        }
                    }
                    break;
                }
            }
        }
        labels
    }

    pub fn cardinality_report(&self) -> CardinalityReport {
        let n = self.n as u64;
        let column = q(self.n, self.k).expect("validated at construction");
        let deeper = n.pow(self.k + 1);
        CardinalityReport {
            card_column: column,
            card_row: deeper * self.m as u64,
            card_corner: column + deeper * (self.m as u64 + 1),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={}, k={})", self.m, self.n, self.k)
    }
}

/// One indeterminate: owner row plus tensor-index word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    row: u32,
    word: Vec<u32>,
}

impl Label {
    pub fn new(row: u32, word: Vec<u32>) -> Self {
        Label { row, word }
    }

    pub fn row(&self) -> u32 {
        self.row
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn depth(&self) -> usize {
        self.word.len()
    }

    /// Compact `X`/`Y`/`Z` spelling for depths 0..=2, `None` deeper.
    pub fn alias(&self) -> Option<String> {
        let letter = match self.word.len() {
            0 => "X",
            1 => "Y",
            2 => "Z",
            _ => return None,
        };
        let mut out = format!("{letter}{}", self.row);
        for &mu in &self.word {
            out.push(',');
            out.push_str(&mu.to_string());
        }
        Some(out)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{}", self.row)?;
        for (i, mu) in self.word.iter().enumerate() {
            f.write_str(if i == 0 { ";" } else { "," })?;
            write!(f, "{mu}")?;
        }
        f.write_str("]")
    }
}

/// Sizes of the three label families a context gains when `m` and `k` both
/// grow by one: the new row at old depths, the new depth over old rows, and
/// their union together with the new row at the new depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CardinalityReport {
    pub card_column: u64,
    pub card_row: u64,
    pub card_corner: u64,
}
