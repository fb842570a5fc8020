//! `Cay(Z_p x Z_m, phi_p x phi_m)`: construction, components, distances
//! and diameter.
//!
//! Vertex `(u, v)` has id `u * m + v`, so the `Z_m` coordinate is contiguous.
//! Adjacency is stored as one bit-packed row per vertex.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::{self, words_for, BitSet};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, unit_set, UnitSet};

pub const DEFAULT_VERTEX_CAP: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub u: u64,
    pub v: u64,
}

impl Vertex {
    pub const fn new(u: u64, v: u64) -> Self {
        Vertex { u, v }
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    p: u64,
    m: u64,
    n: usize,
    phi_p: UnitSet,
    phi_m: UnitSet,
    words: usize,
    rows: Vec<u64>,
}

pub fn build_graph(p: u64, m: u64) -> Result<CayleyGraph> {
    build_graph_with_cap(p, m, DEFAULT_VERTEX_CAP)
}

pub fn build_graph_with_cap(p: u64, m: u64, cap: usize) -> Result<CayleyGraph> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("p = {p} is not prime")));
    }
    if m < 2 {
        return Err(Error::Domain(format!("m must be at least 2, got {m}")));
    }
    let n = p
        .checked_mul(m)
        .and_then(|n| usize::try_from(n).ok())
        .unwrap_or(usize::MAX);
    if n > cap {
        return Err(Error::Capacity { vertices: n, cap });
    }
    let phi_p = unit_set(p)?;
    let phi_m = unit_set(m)?;
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    for a in 0..n {
        let (ua, va) = (a as u64 / m, a as u64 % m);
        let row = &mut rows[a * words..(a + 1) * words];
        for du in phi_p.members() {
            let ub = (ua + du) % p;
            for dv in phi_m.members() {
                let b = (ub * m + (va + dv) % m) as usize;
                row[b / 64] |= 1 << (b % 64);
            }
        }
    }
    Ok(CayleyGraph { p, m, n, phi_p, phi_m, words, rows })
}

impl CayleyGraph {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of vertices, `p * m`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phi_p(&self) -> &UnitSet {
        &self.phi_p
    }

    pub fn phi_m(&self) -> &UnitSet {
        &self.phi_m
    }

    /// `|phi_p| * |phi_m|`; every vertex has this degree.
    pub fn degree(&self) -> usize {
        self.phi_p.len() * self.phi_m.len()
    }

    /// Words per adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn id(&self, x: Vertex) -> usize {
        (x.u * self.m + x.v) as usize
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        Vertex::new(id as u64 / self.m, id as u64 % self.m)
    }

    pub fn check_vertex(&self, x: Vertex) -> Result<usize> {
        if x.u >= self.p || x.v >= self.m {
            return Err(Error::Domain(format!(
                "vertex {x} outside Z_{} x Z_{}",
                self.p, self.m
            )));
        }
        Ok(self.id(x))
    }

    /// Open neighbourhood of `id` as a bit-packed row.
    #[inline]
    pub fn row(&self, id: usize) -> &[u64] {
        &self.rows[id * self.words..(id + 1) * self.words]
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.row(a)[b / 64] >> (b % 64) & 1 == 1
    }

    /// Adjacency straight from the connection set, without the stored rows.
    pub fn adjacent_by_rule(&self, a: Vertex, b: Vertex) -> bool {
        self.phi_p.contains(a.u as i64 - b.u as i64) && self.phi_m.contains(a.v as i64 - b.v as i64)
    }

    pub fn open_neighborhood(&self, id: usize) -> BitSet {
        BitSet::from_words(self.n, self.row(id))
    }

    pub fn closed_neighborhood(&self, id: usize) -> BitSet {
        let mut s = self.open_neighborhood(id);
        s.insert(id);
        s
    }

    pub fn neighbor_ids(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(id))
    }

    pub fn neighbors(&self, x: Vertex) -> Result<Vec<Vertex>> {
        let id = self.check_vertex(x)?;
        Ok(self.neighbor_ids(id).map(|j| self.vertex(j)).collect())
    }

    pub fn components(&self) -> ComponentPartition {
        let mut labels = vec![usize::MAX; self.n];
        let mut sizes = Vec::new();
        for s in 0..self.n {
            if labels[s] != usize::MAX {
                continue;
            }
            let label = sizes.len();
            let reach = self.reachable_from(s);
            for i in reach.iter() {
                labels[i] = label;
            }
            sizes.push(reach.count());
        }
        ComponentPartition { count: sizes.len(), labels, sizes }
    }

    fn reachable_from(&self, s: usize) -> BitSet {
        let mut seen = BitSet::new(self.n);
        seen.insert(s);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = BitSet::new(self.n);
            for i in frontier.iter() {
                next.union_with(self.row(i));
            }
            next.difference_with(seen.words());
            seen.union_with(next.words());
            frontier = next;
        }
        seen
    }

    /// BFS hop counts from `src`; `None` for vertices in other components.
    pub fn distances_from(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut seen = BitSet::new(self.n);
        seen.insert(src);
        let mut frontier = seen.clone();
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = BitSet::new(self.n);
            for i in frontier.iter() {
                next.union_with(self.row(i));
            }
            next.difference_with(seen.words());
            for i in next.iter() {
                dist[i] = Some(d);
            }
            seen.union_with(next.words());
            frontier = next;
        }
        dist
    }

    pub fn distance(&self, a: Vertex, b: Vertex) -> Result<Option<u32>> {
        let ia = self.check_vertex(a)?;
        let ib = self.check_vertex(b)?;
        Ok(self.distances_from(ia)[ib])
    }

    /// Eccentricity of each vertex within its own component, one BFS per
    /// source, sources processed in parallel.
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.n)
            .into_par_iter()
            .map(|s| self.distances_from(s).into_iter().flatten().max().unwrap_or(0))
            .collect()
    }

    /// Largest component diameter; for a disconnected graph this is the
    /// maximum over components rather than infinity.
    pub fn diameter(&self) -> u32 {
        self.diameter_report().diameter
    }

    pub fn diameter_report(&self) -> DiameterReport {
        let comps = self.components();
        let ecc = self.eccentricities();
        let mut per_component = vec![0u32; comps.count];
        for (i, &e) in ecc.iter().enumerate() {
            let c = &mut per_component[comps.labels[i]];
            *c = (*c).max(e);
        }
        DiameterReport {
            diameter: per_component.iter().copied().max().unwrap_or(0),
            per_component,
            eccentricities_equal: ecc.windows(2).all(|w| w[0] == w[1]),
        }
    }

    /// Graphviz DOT, vertices labelled `"u,v"`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"Cay(Z_{} x Z_{})\" {{", self.p, self.m);
        for i in 0..self.n {
            let x = self.vertex(i);
            let _ = writeln!(out, "  {i} [label=\"{},{}\"];", x.u, x.v);
        }
        for i in 0..self.n {
            for j in self.neighbor_ids(i).filter(|&j| j > i) {
                let _ = writeln!(out, "  {i} -- {j};");
            }
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency matrix as CSV with a `u,v` header row and column.
    pub fn to_adjacency_csv(&self) -> String {
        let mut out = String::from("vertex");
        for j in 0..self.n {
            let y = self.vertex(j);
            let _ = write!(out, ",\"{},{}\"", y.u, y.v);
        }
        out.push('\n');
        for i in 0..self.n {
            let x = self.vertex(i);
            let _ = write!(out, "\"{},{}\"", x.u, x.v);
            for j in 0..self.n {
                out.push_str(if self.adjacent(i, j) { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPartition {
    /// Component id of each vertex; ids are assigned in order of lowest vertex.
    pub labels: Vec<usize>,
    pub count: usize,
    pub sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn members(&self, label: usize) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(move |&(_, &l)| l == label)
            .map(|(i, _)| i)
    }

    pub fn mask(&self, label: usize) -> BitSet {
        BitSet::from_ids(self.labels.len(), self.members(label))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterReport {
    pub diameter: u32,
    pub per_component: Vec<u32>,
    pub eccentricities_equal: bool,
}
