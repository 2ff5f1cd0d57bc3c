//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! A polynomial lives over the full variable universe of one [`Context`];
//! every monomial stores a dense exponent vector in flat-index order.  The
//! term order everywhere (leading terms, display, serialization) is graded
//! lexicographic on those vectors.

use crate::error::{Error, Result};
use crate::indexing::Context;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{btree_map, BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Upper bound for the brute-force routines that walk all `N!` permutations
/// of the universe.  Overridable through `MULTISYM_FACTORIAL_BOUND`.
pub fn factorial_bound() -> usize {
    std::env::var("MULTISYM_FACTORIAL_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}

/// Exponent vector in flat-index order, compared graded-lexicographically:
/// higher total degree wins, ties fall back to the leftmost differing entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: u64,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { degree, exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial::new(exps)
    }

    /// Componentwise quotient, `None` when some exponent of `other` exceeds
    /// the matching exponent of `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial::new(exps))
    }
}

/// Bijection of `{0, ..., n-1}`, acting on polynomials by relabeling the
/// variable at flat position `i` to flat position `sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Builds a permutation from the image list `map[i] = sigma(i)`
    /// (0-based).
    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &img in &map {
            if img >= n || seen[img] {
                return Err(Error::BadPermutation(format!(
                    "{map:?} is not a bijection of 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { map })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::BadPermutation(format!(
                "positions {i}, {j} outside 0..{n}"
            )));
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, j);
        Ok(Permutation { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `self` after `other`: the returned permutation sends `i` to
    /// `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::BadPermutation(format!(
                "cannot compose sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.n()];
        for (i, &img) in self.map.iter().enumerate() {
            map[img] = i;
        }
        Permutation { map }
    }
}

/// Calls `f` once per permutation of `0..n` together with its sign.  Heap's
/// algorithm swaps exactly one pair between consecutive outputs, so the sign
/// simply alternates starting from the identity.
pub fn for_each_permutation_signed<F: FnMut(&[usize], i32)>(n: usize, mut f: F) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i32;
    f(&a, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            f(&a, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Context,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(ctx: Context) -> Self {
        Polynomial {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: Context) -> Self {
        Polynomial::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: Context, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(vec![0; ctx.universe_size()]), c);
        }
        Polynomial { ctx, terms }
    }

    /// The variable with 1-based flat index `index`.
    pub fn variable(ctx: Context, index: usize) -> Result<Self> {
        let size = ctx.universe_size();
        if index == 0 || index > size {
            return Err(Error::IndexOutOfRange { index, size });
        }
        let mut exps = vec![0; size];
        exps[index - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(exps), BigInt::one());
        Ok(Polynomial { ctx, terms })
    }

    /// Single term `coeff * x^exps`.
    pub fn term(ctx: Context, coeff: impl Into<BigInt>, exps: Vec<u32>) -> Result<Self> {
        Polynomial::from_terms(ctx, vec![(exps, coeff.into())])
    }

    pub fn from_terms(ctx: Context, raw: Vec<(Vec<u32>, BigInt)>) -> Result<Self> {
        let size = ctx.universe_size();
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (exps, coeff) in raw {
            if exps.len() != size {
                return Err(Error::Parse(format!(
                    "exponent vector has {} entries, universe has {}",
                    exps.len(),
                    size
                )));
            }
            *terms
                .entry(Monomial::new(exps))
                .or_insert_with(BigInt::zero) += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { ctx, terms })
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order, the order used for display and
    /// serialization.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree among the terms, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self, r: u64) -> bool {
        self.terms.keys().all(|m| m.degree() == r)
    }

    pub fn homogeneous_component(&self, r: u64) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == r)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn assert_same_ctx(&self, other: &Polynomial) {
        assert!(
            self.ctx == other.ctx,
            "operands belong to different contexts"
        );
    }

    /// Sets each listed variable (1-based flat index) to zero: terms that
    /// mention one disappear, everything else survives unchanged.
    pub fn substitute_zero(&self, vars: &[usize]) -> Result<Polynomial> {
        let size = self.ctx.universe_size();
        let mut killed = vec![false; size];
        for &v in vars {
            if v == 0 || v > size {
                return Err(Error::IndexOutOfRange { index: v, size });
            }
            killed[v - 1] = true;
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| {
                m.exps()
                    .iter()
                    .zip(&killed)
                    .all(|(&e, &dead)| e == 0 || !dead)
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// Relabels variables along `sigma`: the variable at flat position `i`
    /// becomes the variable at flat position `sigma(i)`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Polynomial> {
        let size = self.ctx.universe_size();
        if sigma.n() != size {
            return Err(Error::BadPermutation(format!(
                "permutation of {} positions applied to a universe of {}",
                sigma.n(),
                size
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; size];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[sigma.apply(i)] = e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// Invariance under every adjacent transposition, hence under the whole
    /// symmetric group of the universe.
    pub fn is_symmetric(&self) -> bool {
        let size = self.ctx.universe_size();
        for i in 0..size.saturating_sub(1) {
            let swap = Permutation::transposition(size, i, i + 1).expect("in range");
            if self.apply_permutation(&swap).expect("matching size") != *self {
                return false;
            }
        }
        true
    }

    /// Exact quotient `self / den`.  Fails with [`Error::NotDivisible`] (and
    /// names the offending remainder term) when `den` does not divide `self`
    /// over the integers.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial> {
        if self.ctx != den.ctx {
            return Err(Error::ContextMismatch);
        }
        let (den_mono, den_coeff) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        while let Some((mono, coeff)) = rem.last_key_value() {
            let mono = mono.clone();
            let coeff = coeff.clone();
            let not_divisible = || Error::NotDivisible(render_term(self.ctx, &mono, &coeff));
            let q_mono = mono.div(den_mono).ok_or_else(not_divisible)?;
            let q_coeff = &coeff / den_coeff;
            if !(&coeff % den_coeff).is_zero() {
                return Err(not_divisible());
            }
            // rem -= q_term * den; the leading entry cancels by construction
            for (m, c) in &den.terms {
                let target = q_mono.mul(m);
                match rem.entry(target) {
                    btree_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() -= &q_coeff * c;
                        if slot.get().is_zero() {
                            slot.remove();
                        }
                    }
                    btree_map::Entry::Vacant(slot) => {
                        slot.insert(-(&q_coeff * c));
                    }
                }
            }
            quot.insert(q_mono, q_coeff);
        }
        Ok(Polynomial {
            ctx: self.ctx,
            terms: quot,
        })
    }

    /// Uniformly random polynomial for randomized checks: up to `max_terms`
    /// monomials, each exponent below `max_exp`, coefficients in
    /// `[-max_coeff, max_coeff]` excluding zero.
    pub fn random<R: Rng + ?Sized>(
        ctx: Context,
        rng: &mut R,
        max_terms: usize,
        max_exp: u32,
        max_coeff: i64,
    ) -> Polynomial {
        let size = ctx.universe_size();
        let n_terms = rng.random_range(0..=max_terms);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for _ in 0..n_terms {
            let exps: Vec<u32> = (0..size).map(|_| rng.random_range(0..=max_exp)).collect();
            let mut c: i64 = rng.random_range(1..=max_coeff);
            if rng.random_bool(0.5) {
                c = -c;
            }
            let entry = terms
                .entry(Monomial::new(exps))
                .or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { ctx, terms }
    }

    /// Canonical text form: terms descending, `*` between factors, `^` for
    /// repeated variables.  With `alias` set, variables of depth at most two
    /// print as `X`/`Y`/`Z` names.
    pub fn render(&self, alias: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let labels = self.ctx.universe();
        let mut out = String::new();
        for (idx, (mono, coeff)) in self.terms_desc().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || mono.is_constant() {
                factors.push(abs.to_string());
            }
            for (i, &e) in mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if alias {
                    labels[i].alias().unwrap_or_else(|| labels[i].to_string())
                } else {
                    labels[i].to_string()
                };
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Polynomial> {
        Ok(serde_json::from_str(s)?)
    }
}

fn render_term(ctx: Context, mono: &Monomial, coeff: &BigInt) -> String {
    let mut poly = Polynomial::zero(ctx);
    poly.terms.insert(mono.clone(), coeff.clone());
    poly.render(false)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ctx(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial {
            ctx: self.ctx,
            terms,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ctx(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial {
            ctx: self.ctx,
            terms,
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ctx(rhs);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let entry = terms.entry(m1.mul(m2)).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ctx: self.ctx,
            terms,
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Largest matrix size the memoized cofactor expansion accepts; the memo is
/// keyed by column subsets, so the key space doubles with every row.
pub const MAX_DETERMINANT: usize = 16;

/// Determinant by cofactor expansion along the first remaining row, with the
/// minors memoized per column subset.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let ctx = validate_matrix(matrix)?;
    let n = matrix.len();
    if n > MAX_DETERMINANT {
        return Err(Error::BudgetExceeded(format!(
            "determinant of size {n} exceeds the supported maximum {MAX_DETERMINANT}"
        )));
    }
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(det_memo(matrix, ctx, full, &mut memo))
}

fn det_memo(
    matrix: &[Vec<Polynomial>],
    ctx: Context,
    cols: u32,
    memo: &mut HashMap<u32, Polynomial>,
) -> Polynomial {
    if cols == 0 {
        return Polynomial::one(ctx);
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let n = matrix.len();
    let row = n - cols.count_ones() as usize;
    let mut acc = Polynomial::zero(ctx);
    let mut sign = 1i32;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let minor = det_memo(matrix, ctx, cols & !(1 << j), memo);
        let contribution = &matrix[row][j] * &minor;
        if sign > 0 {
            acc = &acc + &contribution;
        } else {
            acc = &acc - &contribution;
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Determinant as the signed sum over all permutations; independent of the
/// cofactor expansion and deliberately brute-force.  Bounded by
/// [`factorial_bound`].
pub fn determinant_perm_expansion(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let ctx = validate_matrix(matrix)?;
    let n = matrix.len();
    let bound = factorial_bound();
    if n > bound {
        return Err(Error::UniverseTooLarge { size: n, bound });
    }
    let mut acc = Polynomial::zero(ctx);
    for_each_permutation_signed(n, |perm, sign| {
        let mut prod = Polynomial::one(ctx);
        for (row, &col) in perm.iter().enumerate() {
            prod = &prod * &matrix[row][col];
        }
        if sign > 0 {
            acc = &acc + &prod;
        } else {
            acc = &acc - &prod;
        }
    });
    Ok(acc)
}

fn validate_matrix(matrix: &[Vec<Polynomial>]) -> Result<Context> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSquareMatrix {
                row: i,
                got: row.len(),
                expected: n,
            });
        }
    }
    let ctx = matrix[0][0].context();
    for row in matrix {
        for entry in row {
            if entry.context() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
    }
    Ok(ctx)
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    context: Context,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exp: Vec<u32>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            context: self.ctx,
            terms: self
                .terms_desc()
                .map(|(m, c)| TermRepr {
                    coeff: c.to_string(),
                    exp: m.exps().to_vec(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut raw = Vec::with_capacity(repr.terms.len());
        for term in repr.terms {
            let coeff = BigInt::from_str(&term.coeff)
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", term.coeff)))?;
            raw.push((term.exp, coeff));
        }
        Polynomial::from_terms(repr.context, raw).map_err(D::Error::custom)
    }
}
