//! Explicit hypercube, Fibonacci cube and Lucas cube graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use crate::bitstring::{generate, BitString, Family};
use crate::error::{Error, Result};

/// Largest `n` for which [`CubeGraph::build`] materializes a graph.
pub const MAX_GRAPH_LEN: usize = 24;

/// The subgraph of `Q_n` induced by one string family.
#[derive(Clone, Debug)]
pub struct CubeGraph {
    n: usize,
    family: Family,
    vertices: Vec<BitString>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<u64, usize>,
}

impl CubeGraph {
    /// Vertices in ascending word order; `u ~ v` iff they differ in one coordinate.
    pub fn build(n: usize, family: Family) -> Result<Self> {
        if n > MAX_GRAPH_LEN {
            return Err(Error::ResourceCap {
                what: "graph materialization",
                n,
                cap: MAX_GRAPH_LEN,
            });
        }
        let vertices = generate(n, family)?;
        let index: HashMap<u64, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.word(), i))
            .collect();
        let adjacency = vertices
            .iter()
            .map(|v| {
                let mut nbrs: Vec<usize> = (1..=n)
                    .filter_map(|i| index.get(&v.flip(i).word()).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Ok(Self {
            n,
            family,
            vertices,
            adjacency,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vertices(&self) -> &[BitString] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn index_of(&self, v: &BitString) -> Option<usize> {
        if v.len() != self.n {
            return None;
        }
        self.index.get(&v.word()).copied()
    }

    fn require(&self, v: &BitString) -> Result<usize> {
        self.index_of(v).ok_or_else(|| {
            Error::Argument(format!(
                "'{v}' is not a vertex of the {} graph of order {}",
                self.family, self.n
            ))
        })
    }

    /// Distances from `source` to every vertex; `None` for unreachable ones.
    pub fn bfs_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn bfs_distance(&self, u: &BitString, v: &BitString) -> Result<usize> {
        let (ui, vi) = (self.require(u)?, self.require(v)?);
        self.bfs_from(ui)[vi].ok_or_else(|| Error::Disconnected(u.to_string(), v.to_string()))
    }

    /// True iff every pair of vertices is at graph distance equal to its Hamming distance.
    pub fn is_isometric(&self) -> bool {
        (0..self.vertices.len()).all(|s| {
            let dist = self.bfs_from(s);
            self.vertices
                .iter()
                .zip(&dist)
                .all(|(v, d)| *d == Some(self.vertices[s].hamming(v)))
        })
    }

    /// Graphviz rendering with bitstring labels.
    pub fn to_dot(&self) -> String {
        self.to_dot_highlighting(&[])
    }

    /// Like [`to_dot`](Self::to_dot), drawing the given vertices as double circles.
    pub fn to_dot_highlighting(&self, highlight: &[BitString]) -> String {
        let name = match self.family {
            Family::Hypercube => "Q",
            Family::Fibonacci => "Gamma",
            Family::Lucas => "Lambda",
        };
        let mut out = String::new();
        writeln!(out, "graph {name}_{} {{", self.n).unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for (i, v) in self.vertices.iter().enumerate() {
            let shape = if highlight.contains(v) {
                ", shape=doublecircle"
            } else {
                ""
            };
            writeln!(out, "  v{i} [label=\"{}\"{shape}];", v.csv_token()).unwrap();
        }
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                writeln!(out, "  v{u} -- v{v};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the graph and checks it is an isometric subgraph of `Q_n`.
pub fn verify_isometric(n: usize, family: Family) -> Result<bool> {
    Ok(CubeGraph::build(n, family)?.is_isometric())
}
