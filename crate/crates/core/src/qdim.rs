//! Laurent polynomials in `q` and the graded dimension formula
//!
//! `dim_q e(ν) R^{Λ}(β) e(ν′) = Σ_λ K_q(λ,ν) K_q(λ,ν′)`,
//!
//! the sum running over partitions `λ` of content `β`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::partitions::{Charge, Partition};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^e`.
    pub fn monomial(e: i64) -> Self {
        Self::term(1, e)
    }

    /// `c·q^e`.
    pub fn term(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), e);
        p
    }

    /// Builds `Σ c_e q^e` from `(e, c)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(BigInt::from(c), e);
        }
        p
    }

    fn add_term(&mut self, c: BigInt, e: i64) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `p(q^{-1})`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical form produced by `Display`; terms may come in
    /// any order and repeat, and whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParsePoly(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let bytes = text.as_bytes();
        // split before every sign that is not an exponent sign
        let mut pieces = Vec::new();
        let mut start = 0;
        for idx in 1..bytes.len() {
            if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'^' {
                pieces.push(&text[start..idx]);
                start = idx;
            }
        }
        pieces.push(&text[start..]);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'+') => (false, &piece[1..]),
                Some(b'-') => (true, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let head = &body[..pos];
                    let tail = &body[pos + 1..];
                    let coeff = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        let digits = tail.strip_prefix('^').ok_or_else(bad)?;
                        digits.parse::<i64>().map_err(|_| bad())?
                    };
                    (coeff, exp)
                }
            };
            if coeff.is_negative() {
                return Err(bad());
            }
            out.add_term(if negative { -coeff } else { coeff }, exp);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(c.clone(), e);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(-c, e);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(x * y, a + b);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

/// `K_q(λ, ν)`: the sum of `q^{deg t}` over standard `λ`-tableaux with
/// residue sequence `ν`.
///
/// Works backwards from `λ`: the entry `n` sits in a removable node of
/// residue `ν_n`, which contributes `q^{d_A}` on top of the smaller shape.
pub fn kq(charge: &Charge, lambda: &Partition, nu: &[usize]) -> LaurentPoly {
    if nu.len() != lambda.size() {
        return LaurentPoly::zero();
    }
    let mut memo = HashMap::new();
    kq_rec(charge, lambda, nu, &mut memo)
}

fn kq_rec(
    charge: &Charge,
    shape: &Partition,
    nu: &[usize],
    memo: &mut HashMap<Partition, LaurentPoly>,
) -> LaurentPoly {
    let Some((&last, prefix)) = nu.split_last() else {
        return LaurentPoly::one();
    };
    if let Some(hit) = memo.get(shape) {
        return hit.clone();
    }
    let mut total = LaurentPoly::zero();
    for a in shape.removable_nodes() {
        if charge.residue(a) != last {
            continue;
        }
        let smaller = shape.without_node(a).expect("removable");
        let rest = kq_rec(charge, &smaller, prefix, memo);
        if !rest.is_zero() {
            total += &(&rest * &LaurentPoly::monomial(charge.stat_below(shape, a)));
        }
    }
    memo.insert(shape.clone(), total.clone());
    total
}

/// `K_q(λ)`: the sum of `q^{deg t}` over all standard `λ`-tableaux.
pub fn kq_total(charge: &Charge, lambda: &Partition) -> LaurentPoly {
    let mut memo = HashMap::new();
    kq_total_rec(charge, lambda, &mut memo)
}

fn kq_total_rec(charge: &Charge, shape: &Partition, memo: &mut HashMap<Partition, LaurentPoly>) -> LaurentPoly {
    if shape.is_empty() {
        return LaurentPoly::one();
    }
    if let Some(hit) = memo.get(shape) {
        return hit.clone();
    }
    let mut total = LaurentPoly::zero();
    for a in shape.removable_nodes() {
        let smaller = shape.without_node(a).expect("removable");
        let rest = kq_total_rec(charge, &smaller, memo);
        total += &(&rest * &LaurentPoly::monomial(charge.stat_below(shape, a)));
    }
    memo.insert(shape.clone(), total.clone());
    total
}

/// `ν ↦ K_q(λ, ν)` for every residue sequence of `λ`, from one pass over
/// the standard tableaux.
pub fn kq_table(charge: &Charge, lambda: &Partition) -> BTreeMap<Vec<usize>, LaurentPoly> {
    let mut table = BTreeMap::new();
    let mut seq = Vec::with_capacity(lambda.size());
    kq_table_dfs(charge, lambda, &Partition::empty(), 0, &mut seq, &mut table);
    table
}

fn kq_table_dfs(
    charge: &Charge,
    target: &Partition,
    shape: &Partition,
    deg: i64,
    seq: &mut Vec<usize>,
    table: &mut BTreeMap<Vec<usize>, LaurentPoly>,
) {
    if shape == target {
        *table.entry(seq.clone()).or_default() += &LaurentPoly::monomial(deg);
        return;
    }
    for a in shape.addable_nodes() {
        if !target.contains(a) {
            continue;
        }
        let bigger = shape.with_node(a).expect("addable");
        seq.push(charge.residue(a));
        kq_table_dfs(charge, target, &bigger, deg + charge.stat_below(&bigger, a), seq, table);
        seq.pop();
    }
}

fn check_in_block(charge: &Charge, beta: &RootVector, nu: &[usize]) -> Result<()> {
    if &charge.sequence_content(nu)? != beta {
        return Err(Error::SequenceNotInBlock(nu.to_vec()));
    }
    Ok(())
}

/// `dim_q e(ν) R^{Λ_κ}(β) e(ν′)`.
pub fn graded_dim(charge: &Charge, beta: &RootVector, nu: &[usize], nu2: &[usize]) -> Result<LaurentPoly> {
    charge.datum().check_root(beta)?;
    check_in_block(charge, beta, nu)?;
    check_in_block(charge, beta, nu2)?;
    let mut total = LaurentPoly::zero();
    for lambda in charge.partitions_of_content(beta)? {
        let left = kq(charge, &lambda, nu);
        if left.is_zero() {
            continue;
        }
        let right = if nu == nu2 { left.clone() } else { kq(charge, &lambda, nu2) };
        total += &(&left * &right);
    }
    Ok(total)
}

/// `dim_q R^{Λ_κ}(β) = Σ_λ K_q(λ)^2`.
pub fn graded_dim_block(charge: &Charge, beta: &RootVector) -> Result<LaurentPoly> {
    let parts = charge.partitions_of_content(beta)?;
    Ok(parts
        .iter()
        .map(|lambda| {
            let k = kq_total(charge, lambda);
            &k * &k
        })
        .sum())
}

/// Whether `R^{Λ_κ}(β) ≠ 0`, i.e. some partition has content `β`.
pub fn is_nonzero_block(charge: &Charge, beta: &RootVector) -> Result<bool> {
    Ok(!charge.partitions_of_content(beta)?.is_empty())
}

/// `β ↦ dim_q R^{Λ_κ}(β)` for every nonzero block with `ht β = n`.
pub fn block_dims_at_level(charge: &Charge, n: usize) -> BTreeMap<RootVector, LaurentPoly> {
    let mut out: BTreeMap<RootVector, LaurentPoly> = BTreeMap::new();
    let mut memo = HashMap::new();
    for lambda in Partition::all_of(n) {
        let k = kq_total_rec(charge, &lambda, &mut memo);
        *out.entry(charge.content(&lambda)).or_default() += &(&k * &k);
    }
    out
}

/// The matrix of `dim_q e(ν) R^{Λ_κ}(β) e(ν′)` over all realizable `ν` of
/// content `β`, listed in decreasing lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DimTable {
    pub sequences: Vec<Vec<usize>>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

pub fn dim_table(charge: &Charge, beta: &RootVector) -> Result<DimTable> {
    let tables: Vec<BTreeMap<Vec<usize>, LaurentPoly>> = charge
        .partitions_of_content(beta)?
        .iter()
        .map(|lambda| kq_table(charge, lambda))
        .collect();
    let mut sequences: Vec<Vec<usize>> = tables.iter().flat_map(|t| t.keys().cloned()).collect();
    sequences.sort_unstable_by(|a, b| b.cmp(a));
    sequences.dedup();
    let entries = sequences
        .iter()
        .map(|nu| {
            sequences
                .iter()
                .map(|nu2| {
                    tables
                        .iter()
                        .filter_map(|t| Some(t.get(nu)? * t.get(nu2)?))
                        .sum()
                })
                .collect()
        })
        .collect();
    Ok(DimTable { sequences, entries })
}

/// Reads a residue sequence written either as digits (`"1210"`, only for
/// `ℓ ≤ 9`) or as a comma-separated list.
pub fn parse_sequence(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    }
}

/// Number of standard tableaux of shape `λ`, read off `K_q(λ)` at `q = 1`.
pub fn count_tableaux(charge: &Charge, lambda: &Partition) -> BigInt {
    kq_total(charge, lambda).eval_at_one()
}
