//! Partition combinatorics, branching graphs and closed-form depths for the
//! symmetric and alternating families.
//!
//! Simples of the symmetric group on n letters are partitions of n, with
//! branching given by single-box containment. For the alternating family the
//! vertices are conjugation orbits of partitions, split into signed pairs at
//! symmetric partitions; edges follow the restriction rules of the split
//! characters. Closed-form depth formulas are verified against the matrix
//! oracle where the oracle is cheap.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::intmatrix::{IrredundantMatrix, Matrix};
use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YoungError {
    #[error("partitions have different weights {0} and {1}")]
    WeightMismatch(usize, usize),
    #[error("closed-form depth {expected} disagrees with the matrix oracle {computed}")]
    OracleMismatch { expected: usize, computed: usize },
}

/// Weakly decreasing positive parts; the empty partition has weight 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let rows = self.0.len();
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| (0..rows).take_while(|&i| self.0[i] >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// True iff self is obtained from other by removing exactly one box.
    pub fn covered_by(&self, other: &Partition) -> bool {
        if self.weight() + 1 != other.weight() {
            return false;
        }
        let mut diff = 0;
        let rows = self.0.len().max(other.0.len());
        for i in 0..rows {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            if b < a {
                return false;
            }
            diff += b - a;
        }
        diff == 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of n in reverse lexicographic order: (n) first, the
/// all-ones partition last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Graph distance in the branching graph between two partitions of the same
/// weight: 2 (n - sum of coordinatewise minima). Module distance is half
/// this value.
pub fn young_distance(a: &Partition, b: &Partition) -> Result<usize, YoungError> {
    let n = a.weight();
    if n != b.weight() {
        return Err(YoungError::WeightMismatch(n, b.weight()));
    }
    let overlap: usize = (0..a.len().max(b.len()))
        .map(|i| {
            a.parts()
                .get(i)
                .copied()
                .unwrap_or(0)
                .min(b.parts().get(i).copied().unwrap_or(0))
        })
        .sum();
    Ok(2 * (n - overlap))
}

/// One level of a branching graph: lower vertices, upper vertices, edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchGraph<V> {
    pub lower: Vec<V>,
    pub upper: Vec<V>,
    pub edges: Vec<(usize, usize)>,
}

impl<V> BranchGraph<V> {
    pub fn inclusion_matrix(&self) -> IrredundantMatrix {
        let mut m = Matrix::zeros(self.lower.len(), self.upper.len());
        for &(i, j) in &self.edges {
            m.set(i, j, BigUint::one());
        }
        IrredundantMatrix::new(m).expect("branching graphs have no isolated vertex")
    }
}

/// Branching between partitions of n and of n+1 by single-box containment.
pub fn sym_branch_graph(n: usize) -> BranchGraph<Partition> {
    assert!(n >= 1);
    let lower = partitions(n);
    let upper = partitions(n + 1);
    let mut edges = Vec::new();
    for (i, lam) in lower.iter().enumerate() {
        for (j, alpha) in upper.iter().enumerate() {
            if lam.covered_by(alpha) {
                edges.push((i, j));
            }
        }
    }
    BranchGraph {
        lower,
        upper,
        edges,
    }
}

pub fn sym_inclusion_matrix(n: usize) -> IrredundantMatrix {
    sym_branch_graph(n).inclusion_matrix()
}

/// Depth of the symmetric pair at level n: 2n - 1 for n >= 2, and 2 for
/// n = 1 where the reported depth bottoms out.
pub fn sym_depth(n: usize) -> usize {
    assert!(n >= 1);
    if n == 1 {
        2
    } else {
        2 * n - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDepthReport {
    pub n: usize,
    pub depth: usize,
    pub oracle_checked: bool,
}

/// Closed form plus, for small n, the matrix oracle rerun on the branching
/// matrix.
pub fn sym_depth_checked(n: usize, oracle_cap: usize) -> Result<FamilyDepthReport, YoungError> {
    let expected = sym_depth(n);
    let oracle_checked = n <= oracle_cap;
    if oracle_checked {
        let computed = sym_inclusion_matrix(n).depth().depth;
        if computed != expected {
            return Err(YoungError::OracleMismatch { expected, computed });
        }
    }
    Ok(FamilyDepthReport {
        n,
        depth: expected,
        oracle_checked,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Sign {
    Unsplit,
    Plus,
    Minus,
}

/// Simple of the alternating group at level n: a conjugation orbit of
/// partitions in canonical form (the lexicographically larger of the pair),
/// carrying a sign when the partition is symmetric and the restriction
/// splits.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct SignedVertex {
    pub partition: Partition,
    pub sign: Sign,
}

impl fmt::Display for SignedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Unsplit => write!(f, "{}", self.partition),
            Sign::Plus => write!(f, "{}+", self.partition),
            Sign::Minus => write!(f, "{}-", self.partition),
        }
    }
}

/// Vertices at level n in partition enumeration order, each orbit listed
/// once, symmetric partitions split into plus then minus.
pub fn alt_vertices(n: usize) -> Vec<SignedVertex> {
    let mut out = Vec::new();
    for lam in partitions(n) {
        let conj = lam.conjugate();
        if lam < conj {
            continue;
        }
        if lam == conj {
            out.push(SignedVertex {
                partition: lam.clone(),
                sign: Sign::Plus,
            });
            out.push(SignedVertex {
                partition: lam,
                sign: Sign::Minus,
            });
        } else {
            out.push(SignedVertex {
                partition: lam,
                sign: Sign::Unsplit,
            });
        }
    }
    out
}

/// Zero pattern of the branching between alternating levels n and n+1.
/// Multiplicities beyond the first are not tracked; every edge is recorded
/// with multiplicity one.
pub fn alt_branch_graph(n: usize) -> BranchGraph<SignedVertex> {
    assert!(n >= 2);
    let lower = alt_vertices(n);
    let upper = alt_vertices(n + 1);
    let mut edges = Vec::new();
    for (i, x) in lower.iter().enumerate() {
        for (j, y) in upper.iter().enumerate() {
            let connected = match (x.sign, y.sign) {
                (Sign::Unsplit, Sign::Unsplit) => {
                    x.partition.covered_by(&y.partition)
                        || x.partition.covered_by(&y.partition.conjugate())
                }
                (Sign::Plus | Sign::Minus, Sign::Unsplit) => {
                    x.partition.covered_by(&y.partition)
                        || x.partition.covered_by(&y.partition.conjugate())
                }
                (Sign::Unsplit, Sign::Plus | Sign::Minus) => {
                    x.partition.covered_by(&y.partition)
                        || x.partition.conjugate().covered_by(&y.partition)
                }
                (Sign::Plus, Sign::Plus) | (Sign::Minus, Sign::Minus) => {
                    x.partition.covered_by(&y.partition)
                }
                _ => false,
            };
            if connected {
                edges.push((i, j));
            }
        }
    }
    BranchGraph {
        lower,
        upper,
        edges,
    }
}

pub fn alt_inclusion_matrix(n: usize) -> IrredundantMatrix {
    alt_branch_graph(n).inclusion_matrix()
}

fn ceil_sqrt(n: usize) -> usize {
    let mut k = 0;
    while k * k < n {
        k += 1;
    }
    k
}

/// Depth of the alternating pair at level n: 2 for n = 2 (the lower group
/// is trivial and the pair is normal), otherwise 2 (n - ceil sqrt n) + 1.
pub fn alt_depth(n: usize) -> usize {
    assert!(n >= 2);
    if n == 2 {
        2
    } else {
        2 * (n - ceil_sqrt(n)) + 1
    }
}

pub fn alt_depth_checked(n: usize, oracle_cap: usize) -> Result<FamilyDepthReport, YoungError> {
    let expected = alt_depth(n);
    let oracle_checked = n <= oracle_cap;
    if oracle_checked {
        let computed = alt_inclusion_matrix(n).depth().depth;
        if computed != expected {
            return Err(YoungError::OracleMismatch { expected, computed });
        }
    }
    Ok(FamilyDepthReport {
        n,
        depth: expected,
        oracle_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bratteli::build_graph;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_counts_match_the_classical_sequence() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions(n).len(), count, "p({n})");
        }
    }

    #[test]
    fn partitions_are_enumerated_in_reverse_lexicographic_order() {
        let got = partitions(4);
        let expected = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, expected);
        for w in got.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn conjugation_is_an_involution_and_detects_symmetry() {
        let lam = p(&[4, 2, 1]);
        assert_eq!(lam.conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert!(p(&[2, 1]).is_symmetric());
        assert!(p(&[3, 1, 1]).is_symmetric());
        assert!(!p(&[3, 1]).is_symmetric());
        assert!(p(&[]).is_symmetric());
    }

    #[test]
    fn young_distance_matches_the_overlap_formula() {
        let a = p(&[4, 3, 2, 1]);
        let b = p(&[5, 2, 1, 1, 1]);
        assert_eq!(young_distance(&a, &b).unwrap(), 4);
        for n in 2..=8 {
            let row = p(&[n]);
            let col = p(&vec![1; n]);
            assert_eq!(young_distance(&row, &col).unwrap(), 2 * (n - 1));
        }
        assert_eq!(
            young_distance(&p(&[2]), &p(&[3])).unwrap_err(),
            YoungError::WeightMismatch(2, 3)
        );
        assert_eq!(young_distance(&a, &a).unwrap(), 0);
    }

    #[test]
    fn distinct_symmetric_partitions_are_at_distance_at_least_four() {
        for n in 2..=10 {
            let symmetric: Vec<Partition> = partitions(n)
                .into_iter()
                .filter(Partition::is_symmetric)
                .collect();
            for a in &symmetric {
                for b in &symmetric {
                    if a != b {
                        assert!(young_distance(a, b).unwrap() >= 4, "{a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_branching_at_level_two_is_the_two_row_matrix() {
        let m = sym_inclusion_matrix(2);
        let expected = IrredundantMatrix::from_u64_rows(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn symmetric_depth_formula_agrees_with_the_oracle() {
        assert_eq!(sym_depth(1), 2);
        for n in 2..=7 {
            let report = sym_depth_checked(n, 8).unwrap();
            assert_eq!(report.depth, 2 * n - 1);
            assert!(report.oracle_checked);
        }
        assert!(!sym_depth_checked(30, 8).unwrap().oracle_checked);
    }

    #[test]
    fn bfs_distances_double_as_young_distances() {
        for n in 2..=6 {
            let graph = sym_branch_graph(n);
            let table = build_graph(&graph.inclusion_matrix()).distances();
            for (i, a) in graph.lower.iter().enumerate() {
                for (j, b) in graph.lower.iter().enumerate() {
                    let bfs = table.get(i, j).expect("branching graphs are connected");
                    assert_eq!(2 * bfs, young_distance(a, b).unwrap(), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn alternating_vertex_counts_match_the_irreducible_counts() {
        assert_eq!(alt_vertices(3).len(), 3);
        assert_eq!(alt_vertices(4).len(), 4);
        assert_eq!(alt_vertices(5).len(), 5);
        assert_eq!(alt_vertices(6).len(), 7);
        assert_eq!(alt_vertices(7).len(), 9);
    }

    #[test]
    fn alternating_branching_at_level_three() {
        let g = alt_branch_graph(3);
        let labels: Vec<String> = g.lower.iter().map(|v| v.to_string()).collect();
        assert_eq!(labels, vec!["(3)", "(2,1)+", "(2,1)-"]);
        let expected = IrredundantMatrix::from_u64_rows(&[
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 1, 0, 1],
        ])
        .unwrap();
        assert_eq!(g.inclusion_matrix(), expected);
    }

    #[test]
    fn alternating_depth_formula_agrees_with_the_oracle() {
        assert_eq!(alt_depth(2), 2);
        let expected = [(3, 3), (4, 5), (5, 5), (6, 7), (7, 9), (8, 11)];
        for (n, d) in expected {
            assert_eq!(alt_depth(n), d);
            let report = alt_depth_checked(n, 8).unwrap();
            assert_eq!(report.depth, d);
            assert!(report.oracle_checked);
        }
    }

    #[test]
    fn alternating_matrices_have_no_zero_line() {
        for n in 2..=8 {
            let m = alt_inclusion_matrix(n);
            assert_eq!(m.rows(), alt_vertices(n).len());
            assert_eq!(m.cols(), alt_vertices(n + 1).len());
        }
    }
}
