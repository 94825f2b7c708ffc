//! Bipartite graph view of an inclusion matrix and the graph-distance
//! route to depth.
//!
//! Bottom vertices are the rows (simples of the small algebra), top vertices
//! the columns, with an edge wherever the matrix entry is positive. The
//! distance between two bottom vertices is half their graph distance; powers
//! of S = M M^t see exactly the pairs within a given distance, which turns
//! the depth computation into a diameter computation. The result is always
//! cross-checked against the matrix oracle.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::intmatrix::IrredundantMatrix;

/// The graph route and the matrix oracle must agree; disagreement is an
/// implementation bug, not an input error.
#[derive(Debug, Error)]
#[error("graph depth {graph} disagrees with matrix depth {matrix}")]
pub struct OracleMismatch {
    pub graph: usize,
    pub matrix: usize,
}

/// Bipartite multigraph of an inclusion matrix.
#[derive(Clone, Debug)]
pub struct BiGraph {
    matrix: IrredundantMatrix,
    bottom_adj: Vec<Vec<usize>>,
    top_adj: Vec<Vec<usize>>,
}

/// Pairwise distances between bottom vertices; `None` encodes vertices in
/// different connected components, i.e. a distance no power of the
/// inclusion matrix ever realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.d[i * self.n + j]
    }

    /// Largest finite pairwise distance.
    pub fn max_finite(&self) -> usize {
        self.d.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Connected components, listed by smallest member, each split into its
/// bottom and top vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub bottom_classes: Vec<Vec<usize>>,
    pub top_classes: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.bottom_classes.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphDepth {
    pub odd_depth: usize,
    pub even_depth: usize,
    pub depth: usize,
    pub components: usize,
}

/// Labels for DOT export; indices fall back to W1.. and V1.. when absent.
#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    pub graph_name: Option<String>,
    pub bottom_labels: Option<Vec<String>>,
    pub top_labels: Option<Vec<String>>,
}

pub fn build_graph(matrix: &IrredundantMatrix) -> BiGraph {
    let (r, s) = (matrix.rows(), matrix.cols());
    let mut bottom_adj = vec![Vec::new(); r];
    let mut top_adj = vec![Vec::new(); s];
    for (i, row) in bottom_adj.iter_mut().enumerate() {
        for (u, column) in top_adj.iter_mut().enumerate() {
            if !matrix.get(i, u).is_zero() {
                row.push(u);
                column.push(i);
            }
        }
    }
    BiGraph {
        matrix: matrix.clone(),
        bottom_adj,
        top_adj,
    }
}

impl BiGraph {
    pub fn bottom_count(&self) -> usize {
        self.bottom_adj.len()
    }

    pub fn top_count(&self) -> usize {
        self.top_adj.len()
    }

    pub fn matrix(&self) -> &IrredundantMatrix {
        &self.matrix
    }

    /// Bottom vertices adjacent to top vertex u (the set that the column u
    /// supports).
    pub fn top_class(&self, u: usize) -> &[usize] {
        &self.top_adj[u]
    }

    /// Half graph distances between bottom vertices, by BFS from every
    /// bottom vertex through alternating bottom-top hops.
    pub fn distances(&self) -> DistanceTable {
        let r = self.bottom_count();
        let mut d = vec![None; r * r];
        for start in 0..r {
            let mut dist = vec![None; r];
            dist[start] = Some(0usize);
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let next = dist[i].unwrap() + 1;
                for &u in &self.bottom_adj[i] {
                    for &j in &self.top_adj[u] {
                        if dist[j].is_none() {
                            dist[j] = Some(next);
                            queue.push_back(j);
                        }
                    }
                }
            }
            for j in 0..r {
                d[start * r + j] = dist[j];
            }
        }
        DistanceTable { n: r, d }
    }

    /// Distance from bottom vertex i to the vertex set of top vertex u:
    /// the least distance from i to a bottom vertex adjacent to u.
    pub fn top_set_distance(&self, table: &DistanceTable, i: usize, u: usize) -> Option<usize> {
        self.top_adj[u]
            .iter()
            .filter_map(|&j| table.get(i, j))
            .min()
    }

    /// Least odd n whose depth-n inequality the distances certify:
    /// 2 D + 1 for D the largest finite pairwise bottom distance. For a
    /// single bottom vertex the bound degenerates to 1; for more the clamp
    /// to >= 3 keeps the composition with the even bound faithful.
    pub fn odd_depth(&self, table: &DistanceTable) -> usize {
        if self.bottom_count() == 1 {
            return 1;
        }
        2 * table.max_finite().max(1) + 1
    }

    /// Least even n whose depth-n inequality holds: 2 exactly when every
    /// top class is a full connected-component bottom set, otherwise
    /// 2 max_u m(V_u) + 2 where m(V_u) is the largest finite distance from
    /// a bottom vertex to the class of u.
    pub fn even_depth(&self, table: &DistanceTable) -> usize {
        let comps = self.equiv_classes();
        let r = self.bottom_count();
        let mut class_of = vec![0usize; r];
        for (c, class) in comps.bottom_classes.iter().enumerate() {
            for &i in class {
                class_of[i] = c;
            }
        }
        let full_classes = (0..self.top_count()).all(|u| {
            let class = &comps.bottom_classes[class_of[self.top_adj[u][0]]];
            self.top_adj[u] == *class
        });
        if full_classes {
            return 2;
        }
        let mut max_m = 0usize;
        for u in 0..self.top_count() {
            for i in 0..r {
                if let Some(m) = self.top_set_distance(table, i, u) {
                    max_m = max_m.max(m);
                }
            }
        }
        2 * max_m + 2
    }

    /// Connected components, each containing at least one vertex of either
    /// kind because the matrix is irredundant.
    pub fn equiv_classes(&self) -> Components {
        let r = self.bottom_count();
        let s = self.top_count();
        let mut comp = vec![usize::MAX; r + s];
        let mut count = 0;
        for start in 0..r {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let neighbors: &[usize] = if v < r {
                    &self.bottom_adj[v]
                } else {
                    &self.top_adj[v - r]
                };
                for &w in neighbors {
                    let w = if v < r { w + r } else { w };
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        let mut bottom_classes = vec![Vec::new(); count];
        let mut top_classes = vec![Vec::new(); count];
        for i in 0..r {
            bottom_classes[comp[i]].push(i);
        }
        for u in 0..s {
            top_classes[comp[r + u]].push(u);
        }
        assert!(
            top_classes.iter().all(|c| !c.is_empty()),
            "irredundant matrices leave no isolated top vertex"
        );
        Components {
            bottom_classes,
            top_classes,
        }
    }

    /// Combined graph depth, cross-checked against the matrix oracle.
    pub fn graph_depth(&self) -> Result<GraphDepth, OracleMismatch> {
        let table = self.distances();
        let odd = self.odd_depth(&table);
        let even = self.even_depth(&table);
        let depth = odd.min(even).max(2);
        let matrix_depth = self.matrix.depth().depth;
        if depth != matrix_depth {
            return Err(OracleMismatch {
                graph: depth,
                matrix: matrix_depth,
            });
        }
        Ok(GraphDepth {
            odd_depth: odd,
            even_depth: even,
            depth,
            components: self.equiv_classes().count(),
        })
    }

    /// Deterministic DOT rendering: filled bottom row, hollow top row,
    /// multiplicities above one as edge labels.
    pub fn export_dot(&self, options: &DotOptions) -> String {
        let name = options.graph_name.as_deref().unwrap_or("inclusion");
        let bottom_label = |i: usize| -> String {
            options
                .bottom_labels
                .as_ref()
                .map(|l| l[i].clone())
                .unwrap_or_else(|| format!("W{}", i + 1))
        };
        let top_label = |u: usize| -> String {
            options
                .top_labels
                .as_ref()
                .map(|l| l[u].clone())
                .unwrap_or_else(|| format!("V{}", u + 1))
        };
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        write!(out, "  {{ rank=min;").unwrap();
        for i in 0..self.bottom_count() {
            write!(out, " b{i};").unwrap();
        }
        writeln!(out, " }}").unwrap();
        write!(out, "  {{ rank=max;").unwrap();
        for u in 0..self.top_count() {
            write!(out, " t{u};").unwrap();
        }
        writeln!(out, " }}").unwrap();
        for i in 0..self.bottom_count() {
            writeln!(
                out,
                "  b{i} [shape=circle, style=filled, fillcolor=black, width=0.22, label=\"\", xlabel=\"{}\"];",
                bottom_label(i)
            )
            .unwrap();
        }
        for u in 0..self.top_count() {
            writeln!(
                out,
                "  t{u} [shape=circle, width=0.22, label=\"\", xlabel=\"{}\"];",
                top_label(u)
            )
            .unwrap();
        }
        let one = BigUint::one();
        for i in 0..self.bottom_count() {
            for &u in &self.bottom_adj[i] {
                let mult = self.matrix.get(i, u);
                if *mult > one {
                    writeln!(out, "  b{i} -- t{u} [label=\"{mult}\"];").unwrap();
                } else {
                    writeln!(out, "  b{i} -- t{u};").unwrap();
                }
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
