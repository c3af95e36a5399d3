//! Residue sequences `ν` whose idempotents `e(ν)` serve as certificates for
//! the representation type of the maximal-weight blocks.

use crate::cartan::Sign;
use crate::error::{Error, Result};

fn down(from: usize, to: usize) -> impl Iterator<Item = usize> {
    (to..=from).rev()
}

fn no_cert(ell: usize, k: usize) -> Error {
    Error::NoCertificate { ell, k }
}

/// The four realizable sequences of `R^{Λ_1}(δ)` for `ℓ = 2`.
pub fn tame_sequences() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 1, 0], vec![1, 2, 0, 1], vec![1, 0, 2, 1], vec![1, 0, 1, 2]]
}

/// `(e_1, e_2)` for `R^{Λ_k}(δ)` with `ℓ ≥ 3` and `1 ≤ k ≤ ℓ/2`.
///
/// For `k = 1, ℓ ≥ 4` the generic `e_1` degenerates, and the sequence
/// `(1,2,0,1,2,…,ℓ,ℓ−1,…,3)` is used in its place.
pub fn onedelta_pair(ell: usize, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if ell < 3 || k == 0 || 2 * k > ell {
        return Err(no_cert(ell, k));
    }
    if ell == 3 {
        return Ok((vec![1, 2, 3, 2, 0, 1], vec![1, 0, 1, 2, 3, 2]));
    }
    let e1: Vec<usize> = if k == 1 {
        [k, k + 1]
            .into_iter()
            .chain(down(k - 1, 0))
            .chain(1..=ell)
            .chain(down(ell - 1, k + 2))
            .collect()
    } else {
        (k..=ell)
            .chain(down(ell - 1, k + 1))
            .chain([k - 1, k])
            .chain(down(k - 2, 0))
            .chain(1..k)
            .collect()
    };
    let e2 = (k..=ell)
        .chain(down(ell - 1, k + 2))
        .chain(down(k - 1, 0))
        .chain(1..=k + 1)
        .collect();
    Ok((e1, e2))
}

/// `c_{i,ℓ}`, the `q^2` coefficient of `dim_q e_i R^{Λ_k}(δ) e_i`.
pub fn onedelta_loops(ell: usize, i: usize) -> i64 {
    if ell == 3 && i == 1 {
        1
    } else {
        2
    }
}

/// The primitive idempotent sequences of the defect-one block
/// `R^{Λ_k}(δ − ξ_k^{±2})`: `ν(0..=k)` for `+`, `υ(0..=ℓ−k)` for `−`.
pub fn xik2_sequences(ell: usize, k: usize, sign: Sign) -> Result<Vec<Vec<usize>>> {
    let legal = match sign {
        Sign::Plus => k + 2 <= ell,
        Sign::Minus => k >= 2 && k <= ell,
    };
    if !legal {
        return Err(Error::XiOutOfRange { k, sign, i: 2, ell });
    }
    Ok(match sign {
        Sign::Plus => (0..=k)
            .map(|i| {
                (0..i)
                    .flat_map(|p| [k - p, k - p + 1])
                    .chain(down(k - i, 0))
                    .chain(1..=k - i + 1)
                    .collect()
            })
            .collect(),
        Sign::Minus => (0..=ell - k)
            .map(|i| {
                (k..=ell)
                    .chain((ell - i..ell).rev())
                    .chain(k - 1..ell - i)
                    .collect()
            })
            .collect(),
    })
}

fn underline(j: usize) -> [usize; 4] {
    [j, j - 1, j - 2, j - 3]
}

/// `(e_1, e_2)` for `R^{Λ_k}(2δ − ξ_k^{±4})`.
///
/// The `+` pair needs `1 ≤ k` and `k + 4 ≤ ℓ`; the `−` pair needs `k ≥ 4`
/// and `k < ℓ`.
pub fn xik4_pair(ell: usize, k: usize, sign: Sign) -> Result<(Vec<usize>, Vec<usize>)> {
    match sign {
        Sign::Plus => {
            if k == 0 || k + 4 > ell {
                return Err(no_cert(ell, k));
            }
            let e1 = down(k, 0)
                .chain(1..=k + 3)
                .chain([k + 1, k + 2])
                .chain(down(k, 0))
                .chain(1..=k + 1)
                .collect();
            let e2 = [k, k + 1, k + 2, k + 3]
                .into_iter()
                .chain((0..k).rev())
                .chain(1..=k + 2)
                .chain([k, k + 1])
                .chain((0..k).rev())
                .chain(1..=k)
                .collect();
            Ok((e1, e2))
        }
        Sign::Minus => {
            if k < 4 || k >= ell {
                return Err(no_cert(ell, k));
            }
            let e1 = (k..=ell)
                .flat_map(underline)
                .chain([ell - 1, ell - 2, ell, ell - 1])
                .collect();
            let e2 = (k..=ell - 2)
                .flat_map(underline)
                .chain([
                    ell - 1,
                    ell,
                    ell - 1,
                    ell - 2,
                    ell - 3,
                    ell - 4,
                    ell - 2,
                    ell - 3,
                    ell - 1,
                    ell,
                    ell - 1,
                    ell - 2,
                ])
                .collect();
            Ok((e1, e2))
        }
    }
}

/// `(e_1, e_2)` for `R^{Λ_1}(2δ)` with `ℓ = 2`.
pub fn twodelta_pair() -> (Vec<usize>, Vec<usize>) {
    (vec![1, 0, 1, 2, 1, 0, 1, 2], vec![1, 2, 0, 1, 2, 1, 0, 1])
}
