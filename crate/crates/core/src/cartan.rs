//! Affine Cartan datum of type `C_ℓ^(1)`.
//!
//! Weights are always level one and stored relative to a fundamental weight:
//! a [`Weight`] `(k, β)` stands for `Λ_k − β`. Root lattice elements are
//! [`RootVector`]s holding the coefficients of `α_0, …, α_ℓ`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of the root lattice `Q`, as coefficients on `α_0..α_ℓ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// The simple root `α_i` in a lattice of rank `len`.
    pub fn simple(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        Self(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True when every coefficient is non-negative, i.e. the vector lies in `Q⁺`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add_simple(&mut self, i: usize, times: i64) {
        self.0[i] += times;
    }

    /// Coefficient reversal `α_i ↦ α_{ℓ−i}`.
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl Index<usize> for RootVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, c) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &RootVector {
    type Output = RootVector;

    fn add(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.len(), rhs.len(), "rank mismatch");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for RootVector {
    type Output = RootVector;

    fn add(self, rhs: RootVector) -> RootVector {
        &self + &rhs
    }
}

impl AddAssign<&RootVector> for RootVector {
    fn add_assign(&mut self, rhs: &RootVector) {
        assert_eq!(self.len(), rhs.len(), "rank mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Sub for &RootVector {
    type Output = RootVector;

    fn sub(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.len(), rhs.len(), "rank mismatch");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for RootVector {
    type Output = RootVector;

    fn sub(self, rhs: RootVector) -> RootVector {
        &self - &rhs
    }
}

impl SubAssign<&RootVector> for RootVector {
    fn sub_assign(&mut self, rhs: &RootVector) {
        assert_eq!(self.len(), rhs.len(), "rank mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for RootVector {
    type Output = RootVector;

    fn neg(self) -> RootVector {
        RootVector(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul<&RootVector> for i64 {
    type Output = RootVector;

    fn mul(self, rhs: &RootVector) -> RootVector {
        RootVector(rhs.0.iter().map(|c| self * c).collect())
    }
}

/// Direction of `ξ_k^{±i}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The level-one weight `Λ_k − β`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    pub k: usize,
    pub beta: RootVector,
}

impl Weight {
    pub fn new(k: usize, beta: RootVector) -> Self {
        Self { k, beta }
    }

    /// The fundamental weight `Λ_k` itself.
    pub fn fundamental(k: usize, rank: usize) -> Self {
        Self::new(k, RootVector::zero(rank))
    }
}

/// A word in the simple reflections. Letters act right to left, so
/// `[a, b]` means `r_a r_b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse element; simple reflections are involutions.
    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `self · other`, i.e. `other` acts first.
    pub fn compose(&self, other: &WeylWord) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }
}

/// Cartan datum of type `C_ℓ^(1)` with symmetrizer `d = (2,1,…,1,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    ell: usize,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

impl CartanDatum {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::RankTooSmall(ell));
        }
        let n = ell + 1;
        let mut matrix = vec![vec![0; n]; n];
        for i in 0..n {
            matrix[i][i] = 2;
            if i + 1 < n {
                matrix[i][i + 1] = -1;
                matrix[i + 1][i] = -1;
            }
        }
        matrix[1][0] = -2;
        matrix[ell - 1][ell] = -2;

        let mut symmetrizer = vec![1; n];
        symmetrizer[0] = 2;
        symmetrizer[ell] = 2;

        Ok(Self {
            ell,
            matrix,
            symmetrizer,
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of nodes, `ℓ + 1`.
    pub fn rank(&self) -> usize {
        self.ell + 1
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    /// Matrix entry `a_ij = ⟨α_i^∨, α_j⟩`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizer[i]
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node > self.ell {
            return Err(Error::NodeOutOfRange {
                node,
                ell: self.ell,
            });
        }
        Ok(())
    }

    pub fn check_root(&self, beta: &RootVector) -> Result<()> {
        if beta.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: beta.len(),
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> RootVector {
        RootVector::zero(self.rank())
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::simple(self.rank(), i)
    }

    /// The null root `δ = α_0 + 2α_1 + ⋯ + 2α_{ℓ−1} + α_ℓ`.
    pub fn delta(&self) -> RootVector {
        let mut v = vec![2; self.rank()];
        v[0] = 1;
        v[self.ell] = 1;
        RootVector(v)
    }

    /// `ξ_k^{±i}` for even `i` with `k ± i ∈ 0..=ℓ`; `ξ_k^{±0} = 0`.
    ///
    /// On the `+` side the coefficient of `α_j` is `min(j − k, i)` for
    /// `k < j < ℓ` and `i/2` at `α_ℓ`; the `−` side mirrors this towards
    /// `α_0`.
    pub fn xi(&self, k: usize, sign: Sign, i: usize) -> Result<RootVector> {
        self.check_node(k)?;
        if !i.is_multiple_of(2) {
            return Err(Error::OddXiIndex(i));
        }
        let legal = match sign {
            Sign::Plus => k + i <= self.ell,
            Sign::Minus => i <= k,
        };
        if !legal {
            return Err(Error::XiOutOfRange {
                k,
                sign,
                i,
                ell: self.ell,
            });
        }
        let mut v = vec![0i64; self.rank()];
        if i == 0 {
            return Ok(RootVector(v));
        }
        let i = i as i64;
        match sign {
            Sign::Plus => {
                for (j, c) in v.iter_mut().enumerate().take(self.ell).skip(k + 1) {
                    *c = (j - k).min(i as usize) as i64;
                }
                v[self.ell] = i / 2;
            }
            Sign::Minus => {
                for (j, c) in v.iter_mut().enumerate().take(k).skip(1) {
                    *c = (k - j).min(i as usize) as i64;
                }
                v[0] = i / 2;
            }
        }
        Ok(RootVector(v))
    }

    /// `⟨α_j^∨, β⟩` for a root lattice element.
    pub fn coroot_pairing(&self, j: usize, beta: &RootVector) -> i64 {
        self.matrix[j]
            .iter()
            .zip(beta.coeffs())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `⟨α_j^∨, Λ_k − β⟩ = δ_jk − Σ_i a_ji β_i`.
    pub fn pairing(&self, j: usize, w: &Weight) -> i64 {
        i64::from(j == w.k) - self.coroot_pairing(j, &w.beta)
    }

    /// `(x, y)` on the root lattice, with `(α_i, α_j) = d_i a_ij`.
    pub fn bilinear(&self, x: &RootVector, y: &RootVector) -> i64 {
        let mut total = 0;
        for (i, xi) in x.coeffs().iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.coeffs().iter().enumerate() {
                total += xi * yj * self.symmetrizer[i] * self.matrix[i][j];
            }
        }
        total
    }

    /// `(Λ_k, β) = d_k β_k`.
    pub fn fundamental_bilinear(&self, k: usize, beta: &RootVector) -> i64 {
        self.symmetrizer[k] * beta[k]
    }

    /// `def_{Λ_k}(β) = (Λ_k, β) − (β, β)/2`.
    pub fn defect(&self, k: usize, beta: &RootVector) -> i64 {
        let norm = self.bilinear(beta, beta);
        debug_assert!(norm % 2 == 0, "(beta, beta) is always even");
        self.fundamental_bilinear(k, beta) - norm / 2
    }

    /// The simple reflection `r_j w = w − ⟨α_j^∨, w⟩ α_j`.
    pub fn reflect(&self, j: usize, w: &Weight) -> Weight {
        let p = self.pairing(j, w);
        let mut beta = w.beta.clone();
        // Λ − β − pα_j = Λ − (β + pα_j)
        beta.add_simple(j, p);
        Weight::new(w.k, beta)
    }

    /// Applies a word right to left.
    pub fn act(&self, word: &WeylWord, w: &Weight) -> Weight {
        word.letters()
            .iter()
            .rev()
            .fold(w.clone(), |acc, &j| self.reflect(j, &acc))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.nodes().all(|j| self.pairing(j, w) >= 0)
    }

    /// Walks `w` into the dominant chamber by repeatedly reflecting in the
    /// smallest node with negative pairing. Returns the dominant weight `μ`
    /// and the word `u` with `μ = u·w`.
    pub fn dominantize(&self, w: &Weight) -> Result<(Weight, WeylWord)> {
        let height = w.beta.height().max(0) as usize;
        let cap = 10 * self.ell * (height + 1);
        let mut current = w.clone();
        let mut applied = Vec::new();
        while let Some(j) = self.nodes().find(|&j| self.pairing(j, &current) < 0) {
            if applied.len() >= cap {
                return Err(Error::DominantizeCapExceeded(cap));
            }
            current = self.reflect(j, &current);
            applied.push(j);
        }
        applied.reverse();
        Ok((current, WeylWord(applied)))
    }

    /// The diagram automorphism `σ(i) = ℓ − i` applied to `β`.
    pub fn dynkin_flip(&self, beta: &RootVector) -> RootVector {
        beta.reversed()
    }

    pub fn flip_node(&self, k: usize) -> usize {
        self.ell - k
    }
}
