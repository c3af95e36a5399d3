//! The Fock space `F(κ)` and its crystal.
//!
//! The `i`-signature lists the addable (`+`) and removable (`−`) `i`-nodes
//! from top to bottom; adjacent `(−,+)` pairs cancel until the word has the
//! form `+⋯+−⋯−`. The good node is the removable node behind the leftmost
//! surviving `−`, the cogood node the addable node behind the rightmost `+`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::partitions::{Charge, Node, Partition};
use crate::qdim::LaurentPoly;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum NodeSign {
    /// An addable node, `+`.
    Addable,
    /// A removable node, `−`.
    Removable,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SignedNode {
    pub node: Node,
    pub sign: NodeSign,
}

/// The `i`-signature of `λ`, top to bottom.
pub fn signature(charge: &Charge, lambda: &Partition, i: usize) -> Vec<SignedNode> {
    let mut entries: Vec<SignedNode> = lambda
        .addable_nodes()
        .into_iter()
        .filter(|&a| charge.residue(a) == i)
        .map(|node| SignedNode {
            node,
            sign: NodeSign::Addable,
        })
        .chain(
            lambda
                .removable_nodes()
                .into_iter()
                .filter(|&a| charge.residue(a) == i)
                .map(|node| SignedNode {
                    node,
                    sign: NodeSign::Removable,
                }),
        )
        .collect();
    entries.sort_by_key(|e| e.node.row);
    entries
}

/// Cancels `(−,+)` pairs until only `+⋯+−⋯−` remains.
pub fn reduce_signature(word: &[SignedNode]) -> Vec<SignedNode> {
    let mut out: Vec<SignedNode> = Vec::with_capacity(word.len());
    for &entry in word {
        if entry.sign == NodeSign::Addable && out.last().is_some_and(|l| l.sign == NodeSign::Removable) {
            out.pop();
        } else {
            out.push(entry);
        }
    }
    out
}

pub fn reduced_signature(charge: &Charge, lambda: &Partition, i: usize) -> Vec<SignedNode> {
    reduce_signature(&signature(charge, lambda, i))
}

pub fn good_node(charge: &Charge, lambda: &Partition, i: usize) -> Option<Node> {
    reduced_signature(charge, lambda, i)
        .into_iter()
        .find(|e| e.sign == NodeSign::Removable)
        .map(|e| e.node)
}

pub fn cogood_node(charge: &Charge, lambda: &Partition, i: usize) -> Option<Node> {
    reduced_signature(charge, lambda, i)
        .into_iter()
        .rev()
        .find(|e| e.sign == NodeSign::Addable)
        .map(|e| e.node)
}

/// `ẽ_i λ`: remove the good `i`-node.
pub fn e_tilde(charge: &Charge, lambda: &Partition, i: usize) -> Option<Partition> {
    good_node(charge, lambda, i).map(|a| lambda.without_node(a).expect("good nodes are removable"))
}

/// `f̃_i λ`: add the cogood `i`-node.
pub fn f_tilde(charge: &Charge, lambda: &Partition, i: usize) -> Option<Partition> {
    cogood_node(charge, lambda, i).map(|a| lambda.with_node(a).expect("cogood nodes are addable"))
}

/// Whether `λ` lies in the crystal component of `∅`, i.e. labels a simple
/// module of `R^{Λ_κ}`.
///
/// Crystal operators stay inside a connected component, and each component
/// has a unique highest-weight vertex, so following any defined `ẽ_i`
/// upward decides membership.
pub fn is_kleshchev(charge: &Charge, lambda: &Partition) -> bool {
    let mut current = lambda.clone();
    'up: while !current.is_empty() {
        for a in current.removable_nodes() {
            let i = charge.residue(a);
            if let Some(up) = e_tilde(charge, &current, i) {
                current = up;
                continue 'up;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CrystalEdge {
    pub source: usize,
    pub colour: usize,
    pub target: usize,
}

/// The part of the crystal of `V(Λ_κ)` on partitions of size at most `n_max`.
///
/// Vertices are ordered by size, then by discovery order of the breadth
/// first search from `∅` (colours tried in increasing order).
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    vertices: Vec<Partition>,
    index: HashMap<Partition, usize>,
    edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CrystalEdge] {
        &self.edges
    }

    pub fn root(&self) -> &Partition {
        &self.vertices[0]
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.index.contains_key(lambda)
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Vertices of size `n`.
    pub fn rank(&self, n: usize) -> impl Iterator<Item = &Partition> {
        self.vertices.iter().filter(move |v| v.size() == n)
    }
}

pub fn crystal(charge: &Charge, n_max: usize) -> CrystalGraph {
    let mut vertices = vec![Partition::empty()];
    let mut index = HashMap::from([(Partition::empty(), 0)]);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(src) = queue.pop_front() {
        if vertices[src].size() == n_max {
            continue;
        }
        for i in charge.datum().nodes() {
            let Some(next) = f_tilde(charge, &vertices[src], i) else {
                continue;
            };
            let target = *index.entry(next.clone()).or_insert_with(|| {
                vertices.push(next);
                queue.push_back(vertices.len() - 1);
                vertices.len() - 1
            });
            edges.push(CrystalEdge {
                source: src,
                colour: i,
                target,
            });
        }
    }
    CrystalGraph {
        vertices,
        index,
        edges,
    }
}

/// A vector of the Fock space: partitions with Laurent-polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, LaurentPoly::one());
        v
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: LaurentPoly) {
        let slot = self.terms.entry(lambda).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn map_basis(&self, f: impl Fn(&Partition) -> Vec<(Partition, LaurentPoly)>) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in &self.terms {
            for (mu, scale) in f(lambda) {
                out.add_term(mu, c * &scale);
            }
        }
        out
    }
}

/// `f_i λ = Σ_A q^{−d^A(λ)} λ ∪ A` over addable `i`-nodes `A`.
pub fn f_act(charge: &Charge, v: &FockVector, i: usize) -> FockVector {
    v.map_basis(|lambda| {
        lambda
            .addable_nodes()
            .into_iter()
            .filter(|&a| charge.residue(a) == i)
            .map(|a| {
                let exp = -charge.stat_above(lambda, a);
                (lambda.with_node(a).expect("addable"), LaurentPoly::monomial(exp))
            })
            .collect()
    })
}

/// `e_i λ = Σ_A q^{d_A(λ)} λ ∖ A` over removable `i`-nodes `A`.
pub fn e_act(charge: &Charge, v: &FockVector, i: usize) -> FockVector {
    v.map_basis(|lambda| {
        lambda
            .removable_nodes()
            .into_iter()
            .filter(|&a| charge.residue(a) == i)
            .map(|a| {
                let exp = charge.stat_below(lambda, a);
                (lambda.without_node(a).expect("removable"), LaurentPoly::monomial(exp))
            })
            .collect()
    })
}

/// `q^d λ = q^{−N_0(λ)} λ`.
pub fn q_d_act(charge: &Charge, v: &FockVector) -> FockVector {
    v.map_basis(|lambda| vec![(lambda.clone(), LaurentPoly::monomial(-(charge.n_zero(lambda) as i64)))])
}

/// `q^{α_i^∨} λ = q^{d_i(λ)} λ`.
pub fn q_alpha_act(charge: &Charge, v: &FockVector, i: usize) -> FockVector {
    v.map_basis(|lambda| vec![(lambda.clone(), LaurentPoly::monomial(charge.stat_di(lambda, i)))])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn signs(word: &[SignedNode]) -> String {
        word.iter()
            .map(|e| match e.sign {
                NodeSign::Addable => '+',
                NodeSign::Removable => '-',
            })
            .collect()
    }

    #[test]
    fn signature_examples() {
        let charge = Charge::new(1, 3).unwrap();
        let sig = signature(&charge, &Partition::empty(), 1);
        assert_eq!(sig, vec![SignedNode { node: Node::new(1, 1), sign: NodeSign::Addable }]);
        let sig = signature(&charge, &p(&[2, 2]), 1);
        assert_eq!(
            sig,
            vec![
                SignedNode { node: Node::new(2, 2), sign: NodeSign::Removable },
                SignedNode { node: Node::new(3, 1), sign: NodeSign::Addable },
            ]
        );
        assert!(signature(&charge, &Partition::empty(), 3).is_empty());
    }

    #[test]
    fn reduction_cancels_minus_plus() {
        let mk = |s: &str| -> Vec<SignedNode> {
            s.chars()
                .enumerate()
                .map(|(r, c)| SignedNode {
                    node: Node::new(r + 1, 1),
                    sign: if c == '+' { NodeSign::Addable } else { NodeSign::Removable },
                })
                .collect()
        };
        assert_eq!(signs(&reduce_signature(&mk("-+"))), "");
        assert_eq!(signs(&reduce_signature(&mk("+--+-++"))), "+");
        assert_eq!(signs(&reduce_signature(&mk("+-+--"))), "+--");
        assert_eq!(signs(&reduce_signature(&mk("++--"))), "++--");
        assert_eq!(signs(&reduce_signature(&mk("+++"))), "+++");
        assert_eq!(signs(&reduce_signature(&mk("--+-+"))), "-");
    }

    #[test]
    fn two_column_rectangle_is_not_kleshchev() {
        for (ell, k) in [(3usize, 1usize), (4, 1), (4, 2), (5, 3)] {
            let charge = Charge::new(k as i64, ell).unwrap();
            let rect = Partition::new(vec![2; k + 1]).unwrap();
            assert!(reduced_signature(&charge, &rect, 1).is_empty());
            assert_eq!(good_node(&charge, &rect, 1), None);
            assert!(!is_kleshchev(&charge, &rect));
            for i in 1..=k + 1 {
                let mut parts = vec![2; k + 1 - i];
                parts.extend(std::iter::repeat_n(1, 2 * i));
                let lambda = Partition::new(parts).unwrap();
                assert!(is_kleshchev(&charge, &lambda), "{lambda}");
                // first-column corner carries a good i-node
                let corner = Node::new(lambda.len(), 1);
                assert_eq!(good_node(&charge, &lambda, i), Some(corner), "{lambda}");
            }
        }
    }

    #[test]
    fn empty_partition_crystal_data() {
        let charge = Charge::new(4, 3).unwrap();
        let k = charge.node();
        assert_eq!(good_node(&charge, &Partition::empty(), k), None);
        assert_eq!(cogood_node(&charge, &Partition::empty(), k), Some(Node::new(1, 1)));
        for i in 0..=3 {
            let f = f_tilde(&charge, &Partition::empty(), i);
            assert_eq!(f.is_some(), i == k);
        }
        assert!(is_kleshchev(&charge, &Partition::empty()));
    }

    #[test]
    fn e_chain_from_column() {
        let charge = Charge::new(1, 3).unwrap();
        let mut lambda = p(&[1, 1, 1, 1]);
        let mut steps = 0;
        while let Some(up) = charge
            .datum()
            .nodes()
            .find_map(|i| e_tilde(&charge, &lambda, i))
        {
            lambda = up;
            steps += 1;
        }
        assert!(lambda.is_empty());
        assert_eq!(steps, 4);
    }

    #[test]
    fn crystal_small_cases() {
        let charge = Charge::new(1, 2).unwrap();
        let g0 = crystal(&charge, 0);
        assert_eq!(g0.vertices(), &[Partition::empty()]);
        assert!(g0.edges().is_empty());
        let g1 = crystal(&charge, 1);
        assert_eq!(g1.vertices().len(), 2);
        assert_eq!(g1.edges(), &[CrystalEdge { source: 0, colour: 1, target: 1 }]);
    }

    #[test]
    fn fock_action_on_empty() {
        let charge = Charge::new(1, 2).unwrap();
        let empty = FockVector::basis(Partition::empty());
        let f = f_act(&charge, &empty, 1);
        assert_eq!(f, FockVector::basis(p(&[1])));
        for i in 0..=2 {
            assert!(e_act(&charge, &empty, i).is_zero());
        }
    }

    #[test]
    fn f_act_exponents_on_two_by_two() {
        let charge = Charge::new(1, 3).unwrap();
        let lambda = p(&[2, 2]);
        let f = f_act(&charge, &FockVector::basis(lambda.clone()), 1);
        // (3,1) is the only addable 1-node; above it is the removable (2,2), d_1 = 1.
        let tally: i64 = lambda
            .removable_nodes()
            .into_iter()
            .filter(|a| a.row < 3 && charge.residue(*a) == 1)
            .count() as i64;
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(&p(&[2, 2, 1])), LaurentPoly::monomial(tally));
    }
}
