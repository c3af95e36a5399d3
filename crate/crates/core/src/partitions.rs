//! Partitions, charged residues, standard tableaux and the degree statistic.
//!
//! Diagrams use the English convention: row 1 is at the top and rows grow
//! downwards. "Below" a node means in a strictly later row, "above" in a
//! strictly earlier one.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVector};
use crate::error::{Error, Result};

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r` (1-based), zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.row_len(node.row)
    }

    /// All nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&r| self.row_len(r) < self.row_len(r - 1))
            .map(|r| Node::new(r, self.row_len(r) + 1))
            .collect()
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Node::new(r, self.row_len(r)))
            .collect()
    }

    pub fn is_addable(&self, node: Node) -> bool {
        node.row >= 1
            && node.col == self.row_len(node.row) + 1
            && self.row_len(node.row) < self.row_len(node.row - 1)
    }

    pub fn is_removable(&self, node: Node) -> bool {
        self.contains(node)
            && node.col == self.row_len(node.row)
            && self.row_len(node.row) > self.row_len(node.row + 1)
    }

    /// `λ ∪ A`, if `A` is addable.
    pub fn with_node(&self, node: Node) -> Option<Partition> {
        if !self.is_addable(node) {
            return None;
        }
        let mut parts = self.0.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// `λ ∖ A`, if `A` is removable.
    pub fn without_node(&self, node: Node) -> Option<Partition> {
        if !self.is_removable(node) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[node.row - 1] -= 1;
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition(parts))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, p) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A charge `κ` for rank `ℓ`; residues are `π_ℓ(κ + c − r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charge {
    kappa: i64,
    datum: CartanDatum,
}

impl Charge {
    pub fn new(kappa: i64, ell: usize) -> Result<Self> {
        Ok(Self {
            kappa,
            datum: CartanDatum::new(ell)?,
        })
    }

    pub fn kappa(&self) -> i64 {
        self.kappa
    }

    pub fn ell(&self) -> usize {
        self.datum.ell()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    /// The node `k = π_ℓ(κ)`, so that `Λ_κ = Λ_k`.
    pub fn node(&self) -> usize {
        self.fold(self.kappa)
    }

    /// The folding map `π_ℓ : ℤ → {0..ℓ}`: reduce mod `2ℓ` to `m`, then
    /// `m` if `m ≤ ℓ`, else `2ℓ − m`.
    pub fn fold(&self, x: i64) -> usize {
        let ell = self.ell() as i64;
        let m = x.rem_euclid(2 * ell);
        (if m <= ell { m } else { 2 * ell - m }) as usize
    }

    pub fn residue(&self, node: Node) -> usize {
        self.fold(self.kappa + node.col as i64 - node.row as i64)
    }

    /// `cont(λ) = Σ_{A ∈ [λ]} α_{res A}`.
    pub fn content(&self, lambda: &Partition) -> RootVector {
        let mut v = self.datum.zero();
        for node in lambda.nodes() {
            v.add_simple(self.residue(node), 1);
        }
        v
    }

    /// `def(λ) = def(cont(λ))` relative to `Λ_κ`.
    pub fn partition_defect(&self, lambda: &Partition) -> i64 {
        self.datum.defect(self.node(), &self.content(lambda))
    }

    fn check_residue(&self, i: usize) -> Result<()> {
        if i > self.ell() {
            return Err(Error::ResidueOutOfRange {
                residue: i,
                ell: self.ell(),
            });
        }
        Ok(())
    }

    /// `d_i(λ)`: addable minus removable `i`-nodes.
    pub fn stat_di(&self, lambda: &Partition, i: usize) -> i64 {
        let add = lambda
            .addable_nodes()
            .into_iter()
            .filter(|&a| self.residue(a) == i)
            .count() as i64;
        let rem = lambda
            .removable_nodes()
            .into_iter()
            .filter(|&a| self.residue(a) == i)
            .count() as i64;
        add - rem
    }

    fn signed_count(&self, lambda: &Partition, i: usize, keep: impl Fn(Node) -> bool) -> i64 {
        let add = lambda
            .addable_nodes()
            .into_iter()
            .filter(|&a| self.residue(a) == i && keep(a))
            .count() as i64;
        let rem = lambda
            .removable_nodes()
            .into_iter()
            .filter(|&a| self.residue(a) == i && keep(a))
            .count() as i64;
        self.datum.d(i) * (add - rem)
    }

    /// `d_A(λ)` for a node `A` of residue `i`: `d_i` times addable minus
    /// removable `i`-nodes strictly below `A`.
    ///
    /// `A` only fixes the row and residue, so it may be addable or removable.
    pub fn stat_below(&self, lambda: &Partition, node: Node) -> i64 {
        let i = self.residue(node);
        self.signed_count(lambda, i, |b| b.row > node.row)
    }

    /// `d^A(λ)`: as [`Charge::stat_below`] but strictly above `A`.
    pub fn stat_above(&self, lambda: &Partition, node: Node) -> i64 {
        let i = self.residue(node);
        self.signed_count(lambda, i, |b| b.row < node.row)
    }

    /// `d_A(λ)` with the requirement that `A ∈ [λ]`.
    pub fn stat_below_checked(&self, lambda: &Partition, node: Node) -> Result<i64> {
        if !lambda.contains(node) {
            return Err(Error::NodeNotInDiagram {
                row: node.row,
                col: node.col,
            });
        }
        Ok(self.stat_below(lambda, node))
    }

    /// `d^A(λ)` with the requirement that `A ∈ [λ]`.
    pub fn stat_above_checked(&self, lambda: &Partition, node: Node) -> Result<i64> {
        if !lambda.contains(node) {
            return Err(Error::NodeNotInDiagram {
                row: node.row,
                col: node.col,
            });
        }
        Ok(self.stat_above(lambda, node))
    }

    /// `N_0(λ)`, the number of 0-nodes.
    pub fn n_zero(&self, lambda: &Partition) -> usize {
        lambda.nodes().filter(|&a| self.residue(a) == 0).count()
    }

    pub fn residue_sequence(&self, t: &StandardTableau) -> Vec<usize> {
        t.insertion_order().map(|a| self.residue(a)).collect()
    }

    /// `deg t`, summing `d_A` over the insertion history of `t`.
    pub fn degree(&self, t: &StandardTableau) -> i64 {
        let mut shape = Partition::empty();
        let mut deg = 0;
        for node in t.insertion_order() {
            shape = shape.with_node(node).expect("standard tableau grows by addable nodes");
            deg += self.stat_below(&shape, node);
        }
        deg
    }

    /// Every partition whose content is exactly `beta`.
    pub fn partitions_of_content(&self, beta: &RootVector) -> Result<Vec<Partition>> {
        self.datum.check_root(beta)?;
        if !beta.is_nonnegative() {
            return Err(Error::NotPositive(beta.coeffs().to_vec()));
        }
        let n = beta.height() as usize;
        let mut out = Vec::new();
        let mut remaining = beta.coeffs().to_vec();
        self.content_search(n, n, &mut Vec::new(), &mut remaining, &mut out);
        Ok(out)
    }

    // Rows are chosen top to bottom; `remaining` tracks the unused content,
    // and a row is abandoned as soon as it would overdraw a residue.
    fn content_search(
        &self,
        left: usize,
        max: usize,
        rows: &mut Vec<usize>,
        remaining: &mut [i64],
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            out.push(Partition(rows.clone()));
            return;
        }
        let r = rows.len() + 1;
        let mut placed = 0;
        // Lay the row out one box at a time; every prefix length is a candidate.
        let mut taken = Vec::new();
        for c in 1..=left.min(max) {
            let i = self.residue(Node::new(r, c));
            if remaining[i] == 0 {
                break;
            }
            remaining[i] -= 1;
            taken.push(i);
            placed = c;
        }
        for len in (1..=placed).rev() {
            rows.push(len);
            self.content_search(left - len, len, rows, remaining, out);
            rows.pop();
            let i = taken.pop().expect("one residue per placed box");
            remaining[i] += 1;
        }
    }

    /// True iff some standard tableau has residue sequence `nu`.
    pub fn realizable(&self, nu: &[usize]) -> bool {
        let mut frontier: HashSet<Partition> = HashSet::from([Partition::empty()]);
        for &i in nu {
            let mut next = HashSet::new();
            for shape in &frontier {
                for a in shape.addable_nodes() {
                    if self.residue(a) == i {
                        next.insert(shape.with_node(a).expect("addable"));
                    }
                }
            }
            if next.is_empty() {
                return false;
            }
            frontier = next;
        }
        true
    }

    /// Validates that `nu` only uses residues in `0..=ℓ`.
    pub fn check_sequence(&self, nu: &[usize]) -> Result<()> {
        nu.iter().try_for_each(|&i| self.check_residue(i))
    }

    /// The content `α_{ν_1} + ⋯ + α_{ν_n}` of a residue sequence.
    pub fn sequence_content(&self, nu: &[usize]) -> Result<RootVector> {
        self.check_sequence(nu)?;
        let mut v = self.datum.zero();
        for &i in nu {
            v.add_simple(i, 1);
        }
        Ok(v)
    }
}

/// A standard tableau, stored as rows of entries `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidTableau(format!("entry {e} is not a bijection onto 1..={n}")));
                }
                seen[e] = true;
                if c > 0 && row[c - 1] >= e {
                    return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(Error::InvalidTableau(format!("column {} is not increasing", c + 1)));
                }
            }
        }
        Ok(Self { shape, rows })
    }

    /// The initial tableau `t^λ`, filled along successive rows.
    pub fn initial(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        Self {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, node: Node) -> Option<usize> {
        self.rows.get(node.row.checked_sub(1)?)?.get(node.col.checked_sub(1)?).copied()
    }

    /// Nodes in the order their entries were inserted: `t⁻¹(1), t⁻¹(2), …`.
    pub fn insertion_order(&self) -> impl Iterator<Item = Node> {
        let mut order = vec![Node::new(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                order[e - 1] = Node::new(r + 1, c + 1);
            }
        }
        order.into_iter()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Depth-first stream of the standard tableaux of a shape.
///
/// The largest remaining entry is placed in each removable corner in turn,
/// top to bottom, and the search recurses on the smaller shape.
pub struct StandardTableaux {
    target: Partition,
    // (current shape, its removable corners, index of the next corner to try)
    stack: Vec<(Partition, Vec<Node>, usize)>,
    placed: Vec<Node>,
    done: bool,
}

impl StandardTableaux {
    fn new(shape: &Partition) -> Self {
        Self {
            target: shape.clone(),
            stack: vec![(shape.clone(), shape.removable_nodes(), 0)],
            placed: Vec::new(),
            done: false,
        }
    }

    fn emit(&self) -> StandardTableau {
        let n = self.target.size();
        let mut rows: Vec<Vec<usize>> = self.target.parts().iter().map(|&l| vec![0; l]).collect();
        // placed[j] holds entry n − j
        for (j, node) in self.placed.iter().enumerate() {
            rows[node.row - 1][node.col - 1] = n - j;
        }
        StandardTableau {
            shape: self.target.clone(),
            rows,
        }
    }
}

impl Iterator for StandardTableaux {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        loop {
            let Some((shape, corners, idx)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            if shape.is_empty() {
                let t = self.emit();
                self.stack.pop();
                self.placed.pop();
                if self.stack.is_empty() {
                    self.done = true;
                }
                return Some(t);
            }
            if *idx == corners.len() {
                self.stack.pop();
                self.placed.pop();
                continue;
            }
            let corner = corners[*idx];
            *idx += 1;
            let smaller = shape.without_node(corner).expect("corner is removable");
            let next_corners = smaller.removable_nodes();
            self.placed.push(corner);
            self.stack.push((smaller, next_corners, 0));
        }
    }
}

/// All standard tableaux of shape `lambda`.
pub fn standard_tableaux(lambda: &Partition) -> StandardTableaux {
    StandardTableaux::new(lambda)
}
