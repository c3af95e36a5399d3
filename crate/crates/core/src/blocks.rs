//! Blocks `R^{Λ_k}(β)`: maximal-weight decomposition, representation type,
//! defect-one profiles and two-idempotent wildness witnesses.
//!
//! Every weight `Λ_k − β` of `V(Λ_k)` is `W`-conjugate to a unique dominant
//! weight `Λ_k + ξ_k^{±i} − mδ`, and the block's representation type only
//! depends on `(±, i, m)`.

use serde::Serialize;

use crate::cartan::{CartanDatum, RootVector, Sign, Weight, WeylWord};
use crate::error::{Error, Result};
use crate::fock::is_kleshchev;
use crate::idempotents::xik2_sequences;
use crate::partitions::{Charge, Partition};
use crate::qdim::{graded_dim, kq, LaurentPoly};

/// `Λ_k − β = word · (Λ_k + ξ_k^{sign·i} − mδ)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Decomposition {
    pub word: WeylWord,
    pub sign: Sign,
    pub i: usize,
    pub m: i64,
}

impl Decomposition {
    /// `2m − i/2`.
    pub fn defect(&self) -> i64 {
        2 * self.m - (self.i / 2) as i64
    }

    /// Rebuilds `β` from the decomposition.
    pub fn reconstruct(&self, datum: &CartanDatum, k: usize) -> Result<RootVector> {
        let xi = datum.xi(k, self.sign, self.i)?;
        let dominant = Weight::new(k, &(self.m * &datum.delta()) - &xi);
        Ok(datum.act(&self.word, &dominant).beta)
    }
}

/// Finds the dominant representative of `Λ_k − β`, or `None` when `Λ_k − β`
/// is not a weight of `V(Λ_k)` (equivalently, the block is zero).
pub fn decompose(datum: &CartanDatum, k: usize, beta: &RootVector) -> Result<Option<Decomposition>> {
    datum.check_node(k)?;
    datum.check_root(beta)?;
    if !beta.is_nonnegative() {
        return Err(Error::NotPositive(beta.coeffs().to_vec()));
    }
    let (dominant, walk) = match datum.dominantize(&Weight::new(k, beta.clone())) {
        Ok(found) => found,
        Err(Error::DominantizeCapExceeded(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    // A dominant level-one weight pairs to 1 with exactly one coroot.
    let ones: Vec<usize> = datum.nodes().filter(|&j| datum.pairing(j, &dominant) == 1).collect();
    let [j] = ones[..] else {
        return Ok(None);
    };
    let (sign, i) = if j >= k { (Sign::Plus, j - k) } else { (Sign::Minus, k - j) };
    if i % 2 != 0 {
        return Ok(None);
    }
    let xi = datum.xi(k, sign, i)?;
    let shifted = &dominant.beta + &xi;
    let m = shifted[0];
    if shifted != m * &datum.delta() || 2 * m < i as i64 {
        return Ok(None);
    }
    Ok(Some(Decomposition {
        word: walk.inverse(),
        sign,
        i,
        m,
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Zero,
    Simple,
    Finite { num_simples: usize },
    Tame,
    Wild,
}

impl RepType {
    pub fn name(&self) -> &'static str {
        match self {
            RepType::Zero => "zero",
            RepType::Simple => "simple",
            RepType::Finite { .. } => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        }
    }

    pub fn num_simples(&self) -> Option<usize> {
        match self {
            RepType::Finite { num_simples } => Some(*num_simples),
            _ => None,
        }
    }
}

/// Representation type of `R^{Λ_k}(β)`.
pub fn classify(datum: &CartanDatum, k: usize, beta: &RootVector) -> Result<RepType> {
    let Some(dec) = decompose(datum, k, beta)? else {
        return Ok(RepType::Zero);
    };
    Ok(classify_decomposition(datum, k, &dec))
}

pub fn classify_decomposition(datum: &CartanDatum, k: usize, dec: &Decomposition) -> RepType {
    let ell = datum.ell();
    match (dec.i, dec.m) {
        (0, 0) => RepType::Simple,
        (2, 1) => RepType::Finite {
            num_simples: match dec.sign {
                Sign::Plus => k + 1,
                Sign::Minus => ell - k + 1,
            },
        },
        (0, 1) if ell == 2 => RepType::Tame,
        _ => RepType::Wild,
    }
}

/// The defect-one block `R^{Λ_k}(δ − ξ_k^{±2})` in numbers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BrauerLineData {
    pub ell: usize,
    pub k: usize,
    pub sign: Sign,
    pub beta: RootVector,
    pub num_simples: usize,
    /// `ν(0..)` for `+`, `υ(0..)` for `−`.
    pub sequences: Vec<Vec<usize>>,
    /// `dims[a][b] = dim_q e(ν(a)) R e(ν(b))`.
    pub dims: Vec<Vec<LaurentPoly>>,
    /// Row labels of the decomposition matrix: the partition labelling the
    /// simple head of `e(ν(j))` for each `j`, then the rest.
    pub partitions: Vec<Partition>,
    pub kleshchev: Vec<bool>,
    /// `matrix[r][j] = K_q(partitions[r], ν(j))`.
    pub decomposition_matrix: Vec<Vec<LaurentPoly>>,
    /// `layers[a][d]` lists `b` once for each copy of `S_b` in degree `d`
    /// of `P_a = R e(ν(a))`.
    pub layers: Vec<Vec<Vec<usize>>>,
}

impl BrauerLineData {
    /// `1 + q²` on the diagonal, `q` next to it, `0` elsewhere.
    pub fn has_brauer_line_dims(&self) -> bool {
        let one_q2 = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        let q = LaurentPoly::monomial(1);
        self.dims.iter().enumerate().all(|(a, row)| {
            row.iter().enumerate().all(|(b, x)| match a.abs_diff(b) {
                0 => *x == one_q2,
                1 => *x == q,
                _ => x.is_zero(),
            })
        })
    }

    /// `1` on the diagonal, `q` directly below it, `0` elsewhere.
    pub fn has_bidiagonal_matrix(&self) -> bool {
        let q = LaurentPoly::monomial(1);
        self.decomposition_matrix.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(j, x)| {
                if r == j {
                    *x == LaurentPoly::one()
                } else if r == j + 1 {
                    *x == q
                } else {
                    x.is_zero()
                }
            })
        })
    }
}

pub fn defect1_profile(datum: &CartanDatum, k: usize, sign: Sign) -> Result<BrauerLineData> {
    let ell = datum.ell();
    let beta = &datum.delta() - &datum.xi(k, sign, 2)?;
    let charge = Charge::new(k as i64, ell)?;
    let sequences = xik2_sequences(ell, k, sign)?;
    let dims: Vec<Vec<LaurentPoly>> = sequences
        .iter()
        .map(|a| {
            sequences
                .iter()
                .map(|b| graded_dim(&charge, &beta, a, b))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;

    let mut rest = charge.partitions_of_content(&beta)?;
    let mut partitions = Vec::with_capacity(rest.len());
    for nu in &sequences {
        if let Some(pos) = rest.iter().position(|lambda| kq(&charge, lambda, nu) == LaurentPoly::one()) {
            partitions.push(rest.remove(pos));
        }
    }
    partitions.extend(rest);
    let kleshchev = partitions.iter().map(|lambda| is_kleshchev(&charge, lambda)).collect();
    let decomposition_matrix = partitions
        .iter()
        .map(|lambda| sequences.iter().map(|nu| kq(&charge, lambda, nu)).collect())
        .collect();

    let layers = (0..sequences.len())
        .map(|a| {
            let top = (0..sequences.len())
                .filter_map(|b| dims[b][a].max_degree())
                .max()
                .unwrap_or(0)
                .max(0);
            (0..=top)
                .map(|deg| {
                    (0..sequences.len())
                        .flat_map(|b| {
                            let mult = dims[b][a].coeff(deg);
                            let mult = usize::try_from(mult).unwrap_or(0);
                            std::iter::repeat_n(b, mult)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    Ok(BrauerLineData {
        ell,
        k,
        sign,
        beta,
        num_simples: sequences.len(),
        sequences,
        dims,
        partitions,
        kleshchev,
        decomposition_matrix,
        layers,
    })
}

/// Data for the two-vertex quiver test on `e = e(ν₁) + e(ν₂)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessReport {
    pub sequences: [Vec<usize>; 2],
    pub dims: [[LaurentPoly; 2]; 2],
    /// `q²` coefficients.
    pub c: [[i64; 2]; 2],
    /// `dim_q e_a R e_b − δ_ab − c_ab q²`.
    pub remainders: [[LaurentPoly; 2]; 2],
    /// Every remainder lies in `q³ ℤ_{≥0}[q]`.
    pub hypothesis_ok: bool,
    /// First `(a, b)` whose remainder is not in `q³ ℤ_{≥0}[q]`.
    pub offending: Option<(usize, usize)>,
    /// `e_a R e_a` is non-negatively graded with one-dimensional degree zero.
    pub local: [bool; 2],
    /// `e_1 R e_2` and `e_2 R e_1` vanish in degrees `≤ 0`.
    pub non_isomorphic: bool,
    /// Hypothesis holds and every vertex has a loop and the two vertices are
    /// joined both ways.
    pub wild_quiver: bool,
}

pub fn wildness_witness(
    datum: &CartanDatum,
    k: usize,
    beta: &RootVector,
    nu1: &[usize],
    nu2: &[usize],
) -> Result<WitnessReport> {
    if nu1 == nu2 {
        return Err(Error::EqualIdempotents);
    }
    datum.check_node(k)?;
    let charge = Charge::new(k as i64, datum.ell())?;
    let seqs = [nu1, nu2];
    let dim = |a: usize, b: usize| graded_dim(&charge, beta, seqs[a], seqs[b]);
    let dims = [[dim(0, 0)?, dim(0, 1)?], [dim(1, 0)?, dim(1, 1)?]];

    let mut c = [[0i64; 2]; 2];
    let mut remainders: [[LaurentPoly; 2]; 2] = Default::default();
    let mut offending = None;
    for a in 0..2 {
        for b in 0..2 {
            let coeff = dims[a][b].coeff(2);
            c[a][b] = i64::try_from(&coeff).unwrap_or(i64::MAX);
            let mut r = &dims[a][b] - &LaurentPoly::term(coeff, 2);
            if a == b {
                r -= &LaurentPoly::one();
            }
            let ok = r.has_nonnegative_coeffs() && r.min_degree().is_none_or(|d| d >= 3);
            if !ok && offending.is_none() {
                offending = Some((a, b));
            }
            remainders[a][b] = r;
        }
    }
    let hypothesis_ok = offending.is_none();
    let local = [0, 1].map(|a| dims[a][a].min_degree() == Some(0) && dims[a][a].coeff(0) == 1.into());
    let non_isomorphic = [(0, 1), (1, 0)]
        .iter()
        .all(|&(a, b)| dims[a][b].min_degree().is_none_or(|d| d > 0));
    let wild_quiver = hypothesis_ok && c.iter().flatten().all(|&x| x >= 1);

    Ok(WitnessReport {
        sequences: [nu1.to_vec(), nu2.to_vec()],
        dims,
        c,
        remainders,
        hypothesis_ok,
        offending,
        local,
        non_isomorphic,
        wild_quiver,
    })
}

/// `σβ` with `σ(i) = ℓ − i`; `R^{Λ_k}(β) ≅ R^{Λ_{ℓ−k}}(σβ)`.
pub fn dynkin_flip(datum: &CartanDatum, beta: &RootVector) -> RootVector {
    datum.dynkin_flip(beta)
}

pub fn flip_k(datum: &CartanDatum, k: usize) -> usize {
    datum.flip_node(k)
}

/// Every `β ∈ Q⁺` of height exactly `n`, in lexicographic order.
pub fn roots_of_height(datum: &CartanDatum, n: usize) -> Vec<RootVector> {
    fn fill(slots: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootVector>) {
        if slots == 1 {
            cur.push(left);
            out.push(RootVector::new(cur.clone()));
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            fill(slots - 1, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(datum.rank(), n as i64, &mut Vec::new(), &mut out);
    out
}

/// Contents `β` of height `n` with `R^{Λ_κ}(β) ≠ 0`.
pub fn nonzero_blocks(charge: &Charge, n: usize) -> Vec<RootVector> {
    let mut out: Vec<RootVector> = Partition::all_of(n).iter().map(|lambda| charge.content(lambda)).collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Sign::{Minus, Plus};
    use crate::idempotents::{onedelta_pair, twodelta_pair, xik4_pair};
    use crate::qdim::is_nonzero_block;

    fn datum(ell: usize) -> CartanDatum {
        CartanDatum::new(ell).unwrap()
    }

    #[test]
    fn maximal_weights_decompose_trivially() {
        for ell in 2..=6 {
            let d = datum(ell);
            for k in 0..=ell {
                for sign in [Plus, Minus] {
                    for i in (0..=ell).step_by(2) {
                        let Ok(xi) = d.xi(k, sign, i) else { continue };
                        if i == 0 && sign == Minus {
                            continue;
                        }
                        for m in (i / 2) as i64..=(i / 2) as i64 + 2 {
                            let beta = &(m * &d.delta()) - &xi;
                            let dec = decompose(&d, k, &beta).unwrap().unwrap();
                            assert_eq!(dec, Decomposition { word: WeylWord::identity(), sign, i, m });
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn delta_is_zero_xi_one_delta() {
        for ell in 2..=5 {
            let d = datum(ell);
            for k in 0..=ell {
                let dec = decompose(&d, k, &d.delta()).unwrap().unwrap();
                assert_eq!((dec.word.len(), dec.sign, dec.i, dec.m), (0, Plus, 0, 1));
            }
        }
    }

    #[test]
    fn non_weights_are_zero_blocks() {
        let d = datum(3);
        let beta = 2i64 * &d.simple_root(1);
        assert_eq!(decompose(&d, 1, &beta).unwrap(), None);
        assert_eq!(classify(&d, 1, &beta).unwrap(), RepType::Zero);
        assert_eq!(classify(&d, 1, &d.simple_root(0)).unwrap(), RepType::Zero);
        assert!(decompose(&d, 1, &RootVector::new(vec![0, -1, 0, 0])).is_err());
        assert!(decompose(&d, 4, &d.zero()).is_err());
    }

    #[test]
    fn classification_examples() {
        let d2 = datum(2);
        assert_eq!(classify(&d2, 1, &d2.delta()).unwrap(), RepType::Tame);
        assert_eq!(classify(&d2, 1, &d2.zero()).unwrap(), RepType::Simple);
        assert_eq!(classify(&d2, 1, &(2i64 * &d2.delta())).unwrap(), RepType::Wild);
        let d3 = datum(3);
        assert_eq!(classify(&d3, 1, &d3.delta()).unwrap(), RepType::Wild);
        for ell in 2..=5 {
            let d = datum(ell);
            for k in 0..=ell {
                assert_eq!(classify(&d, k, &(2i64 * &d.delta())).unwrap(), RepType::Wild);
                if k + 2 <= ell {
                    let beta = &d.delta() - &d.xi(k, Plus, 2).unwrap();
                    assert_eq!(classify(&d, k, &beta).unwrap(), RepType::Finite { num_simples: k + 1 });
                }
                if k >= 2 {
                    let beta = &d.delta() - &d.xi(k, Minus, 2).unwrap();
                    assert_eq!(
                        classify(&d, k, &beta).unwrap(),
                        RepType::Finite { num_simples: ell - k + 1 }
                    );
                }
            }
        }
    }

    #[test]
    fn finite_counts_match_kleshchev_partitions() {
        for ell in 2..=6 {
            let d = datum(ell);
            for k in 0..=ell {
                let charge = Charge::new(k as i64, ell).unwrap();
                for sign in [Plus, Minus] {
                    let Ok(xi) = d.xi(k, sign, 2) else { continue };
                    let beta = &d.delta() - &xi;
                    let count = charge
                        .partitions_of_content(&beta)
                        .unwrap()
                        .iter()
                        .filter(|lambda| is_kleshchev(&charge, lambda))
                        .count();
                    let rep = classify(&d, k, &beta).unwrap();
                    assert_eq!(rep.num_simples(), Some(count), "ell={ell} k={k} {sign}");
                }
            }
        }
    }

    #[test]
    fn round_trip_and_defect_on_small_blocks() {
        for ell in 2..=4 {
            let d = datum(ell);
            for k in 0..=ell {
                let charge = Charge::new(k as i64, ell).unwrap();
                for n in 0..=7 {
                    for beta in roots_of_height(&d, n) {
                        let dec = decompose(&d, k, &beta).unwrap();
                        assert_eq!(dec.is_some(), is_nonzero_block(&charge, &beta).unwrap(), "{beta}");
                        if let Some(dec) = dec {
                            assert_eq!(dec.reconstruct(&d, k).unwrap(), beta);
                            assert_eq!(dec.defect(), d.defect(k, &beta));
                            assert!(dec.defect() >= 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brauer_line_profiles() {
        for (ell, k) in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3), (6, 4)] {
            let d = datum(ell);
            for sign in [Plus, Minus] {
                let Ok(data) = defect1_profile(&d, k, sign) else {
                    assert!(d.xi(k, sign, 2).is_err());
                    continue;
                };
                assert!(data.has_brauer_line_dims(), "ell={ell} k={k} {sign}");
                assert!(data.has_bidiagonal_matrix(), "ell={ell} k={k} {sign}");
                let n = data.num_simples;
                assert_eq!(data.partitions.len(), n + 1);
                assert_eq!(data.kleshchev, (0..=n).map(|r| r < n).collect::<Vec<_>>());
                for (a, layers) in data.layers.iter().enumerate() {
                    assert_eq!(layers[0], vec![a]);
                    let middle: Vec<usize> = [a.checked_sub(1), Some(a + 1).filter(|&b| b < n)]
                        .into_iter()
                        .flatten()
                        .collect();
                    assert_eq!(layers[1], middle);
                    assert_eq!(layers[2], vec![a]);
                }
                assert_eq!(d.defect(k, &data.beta), 1);
            }
        }
        assert!(defect1_profile(&datum(3), 2, Plus).is_err());
    }

    #[test]
    fn onedelta_witness_at_rank_three() {
        let d = datum(3);
        let (e1, e2) = onedelta_pair(3, 1).unwrap();
        assert_eq!(e1, vec![1, 2, 3, 2, 0, 1]);
        let w = wildness_witness(&d, 1, &d.delta(), &e1, &e2).unwrap();
        assert_eq!(w.c, [[1, 1], [1, 2]]);
        assert!(w.hypothesis_ok);
        assert!(w.local[0] && w.local[1] && w.non_isomorphic && w.wild_quiver);
    }

    #[test]
    fn witness_for_two_delta_and_xik4() {
        let d = datum(2);
        let (e1, e2) = twodelta_pair();
        let w = wildness_witness(&d, 1, &(2i64 * &d.delta()), &e1, &e2).unwrap();
        assert_eq!(w.c, [[2, 1], [1, 2]]);
        assert!(w.hypothesis_ok && w.wild_quiver);

        let d = datum(5);
        let (e1, e2) = xik4_pair(5, 1, Plus).unwrap();
        let beta = &(2i64 * &d.delta()) - &d.xi(1, Plus, 4).unwrap();
        let w = wildness_witness(&d, 1, &beta, &e1, &e2).unwrap();
        assert_eq!(w.c, [[2, 1], [1, 2]]);
        assert!(w.hypothesis_ok);
    }

    #[test]
    fn witness_rejects_bad_input() {
        let d = datum(3);
        let (e1, _) = onedelta_pair(3, 1).unwrap();
        assert_eq!(wildness_witness(&d, 1, &d.delta(), &e1, &e1), Err(Error::EqualIdempotents));
        assert_eq!(
            wildness_witness(&d, 1, &d.delta(), &e1, &[1, 2, 3]),
            Err(Error::SequenceNotInBlock(vec![1, 2, 3]))
        );
    }

    #[test]
    fn hypothesis_failure_is_reported() {
        // In the tame block the two end idempotents have q^4 on the diagonal
        // but nothing in degree 2.
        let d = datum(2);
        let w = wildness_witness(&d, 1, &d.delta(), &[1, 2, 1, 0], &[1, 2, 0, 1]).unwrap();
        assert!(w.hypothesis_ok);
        assert_eq!(w.c, [[0, 1], [1, 1]]);
        assert!(!w.wild_quiver);
        let w = wildness_witness(&d, 1, &d.delta(), &[1, 2, 1, 0], &[0, 1, 1, 2]).unwrap();
        assert!(!w.local[1]);
        assert!(!w.hypothesis_ok);
        assert_eq!(w.offending, Some((1, 1)));
    }

    #[test]
    fn flips() {
        let d = datum(4);
        assert_eq!(dynkin_flip(&d, &d.delta()), d.delta());
        for k in 0..=4 {
            assert_eq!(flip_k(&d, flip_k(&d, k)), k);
            for i in [2usize, 4] {
                if let Ok(xi) = d.xi(k, Plus, i) {
                    assert_eq!(dynkin_flip(&d, &xi), d.xi(4 - k, Minus, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn heights_enumerate_compositions() {
        let d = datum(2);
        assert_eq!(roots_of_height(&d, 0), vec![d.zero()]);
        assert_eq!(roots_of_height(&d, 2).len(), 6);
        assert_eq!(roots_of_height(&datum(4), 10).len(), 1001);
    }
}
