//! Exact domination, total domination and connected domination numbers.
//!
//! The solver answers "is there a set of size <= k?" for increasing `k`,
//! starting at a counting lower bound and stopping at the greedy incumbent.
//! Each decision is a depth-first branch-and-bound:
//!
//! * dominating / total: branch on the uncovered vertex with the fewest
//!   remaining coverers, one child per coverer (later children exclude the
//!   earlier coverers);
//! * connected: grow a connected set from a fixed root, one child per
//!   frontier vertex with the same exclusion scheme.
//!
//! Nodes are pruned when some uncovered vertex has no admissible coverer or
//! when the best `r` remaining gains cannot cover what is left.
//!
//! Two reductions rely on the graph being a Cayley graph. Translations are
//! automorphisms, so every component's lowest vertex may be assumed to be in
//! the set. Vertices with identical open neighbourhoods are interchangeable
//! in total and connected sets, so only the lowest member of each such class
//! is a candidate in those modes.
//!
//! In those two modes the root also needs a neighbour in the set, and the
//! maps `x -> r + (a, b)(x - r)` with `a`, `b` units fix the root `r` and act
//! transitively on its neighbours. So `r + (1, 1)` (or its twin
//! representative) may be fixed as well once `k >= 2`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::{self, and_count, BitSet};
use crate::error::{Error, Result};
use crate::graph::{CayleyGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomMode {
    Dominating,
    Total,
    Connected,
}

impl DomMode {
    pub const ALL: [DomMode; 3] = [DomMode::Dominating, DomMode::Total, DomMode::Connected];

    pub fn symbol(self) -> &'static str {
        match self {
            DomMode::Dominating => "gamma",
            DomMode::Total => "gamma_t",
            DomMode::Connected => "gamma_c",
        }
    }
}

/// A set of vertices of a particular `Z_p x Z_m` instance.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VertexSetRepr", try_from = "VertexSetRepr")]
pub struct VertexSet {
    p: u64,
    m: u64,
    members: BitSet,
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    p: u64,
    m: u64,
    vertices: Vec<Vertex>,
}

impl From<VertexSet> for VertexSetRepr {
    fn from(s: VertexSet) -> Self {
        VertexSetRepr { p: s.p, m: s.m, vertices: s.vertices() }
    }
}

impl TryFrom<VertexSetRepr> for VertexSet {
    type Error = Error;

    fn try_from(r: VertexSetRepr) -> Result<Self> {
        VertexSet::from_vertices(r.p, r.m, &r.vertices)
    }
}

impl VertexSet {
    pub fn empty(p: u64, m: u64) -> Self {
        VertexSet { p, m, members: BitSet::new((p * m) as usize) }
    }

    pub fn from_vertices(p: u64, m: u64, vertices: &[Vertex]) -> Result<Self> {
        let mut s = VertexSet::empty(p, m);
        for &x in vertices {
            if x.u >= p || x.v >= m {
                return Err(Error::Domain(format!("vertex {x} outside Z_{p} x Z_{m}")));
            }
            s.members.insert((x.u * m + x.v) as usize);
        }
        Ok(s)
    }

    pub fn from_pairs(p: u64, m: u64, pairs: &[(u64, u64)]) -> Result<Self> {
        let vs: Vec<Vertex> = pairs.iter().map(|&(u, v)| Vertex::new(u, v)).collect();
        VertexSet::from_vertices(p, m, &vs)
    }

    pub fn from_ids(g: &CayleyGraph, ids: impl IntoIterator<Item = usize>) -> Self {
        VertexSet { p: g.p(), m: g.m(), members: BitSet::from_ids(g.n(), ids) }
    }

    pub fn dims(&self) -> (u64, u64) {
        (self.p, self.m)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.members
            .iter()
            .map(|i| Vertex::new(i as u64 / self.m, i as u64 % self.m))
            .collect()
    }

    fn fits(&self, g: &CayleyGraph) -> bool {
        self.p == g.p() && self.m == g.m()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

/// Does `s` dominate `g` in the sense of `mode`?
///
/// Sets built for a different instance are never valid.
pub fn check_set(g: &CayleyGraph, s: &VertexSet, mode: DomMode) -> bool {
    dominates_within(g, s, &BitSet::full(g.n()), mode)
}

/// Like [`check_set`], but only the vertices of `target` need to be covered.
pub fn dominates_within(g: &CayleyGraph, s: &VertexSet, target: &BitSet, mode: DomMode) -> bool {
    if !s.fits(g) || s.is_empty() {
        return false;
    }
    let mut reached = BitSet::new(g.n());
    for i in s.ids() {
        reached.union_with(g.row(i));
    }
    if mode != DomMode::Total {
        reached.union_with(s.bits().words());
    }
    if !target.is_subset(&reached) {
        return false;
    }
    mode != DomMode::Connected || induced_connected(g, s.bits())
}

fn induced_connected(g: &CayleyGraph, s: &BitSet) -> bool {
    let Some(start) = s.first() else { return false };
    let mut seen = BitSet::new(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for j in bitset::ones(g.row(i)) {
            if s.contains(j) && seen.insert(j) {
                stack.push(j);
            }
        }
    }
    seen.count() == s.count()
}

/// Counting lower bounds `(ceil(n / (k + 1)), ceil(n / k))` for a
/// `k`-regular graph on `n` vertices.
pub fn trivial_bounds(g: &CayleyGraph) -> (usize, usize) {
    let n = g.n();
    let k = g.degree();
    (n.div_ceil(k + 1), n.div_ceil(k.max(1)))
}

/// Deterministic greedy set for `mode`, ties broken by lowest vertex id,
/// followed by removal of redundant members. `None` when `mode` is
/// `Connected` and `g` is disconnected.
pub fn greedy_upper(g: &CayleyGraph, mode: DomMode) -> Option<VertexSet> {
    let target = BitSet::full(g.n());
    let rows = CoverRows::new(g, mode);
    let ids = match mode {
        DomMode::Connected => {
            if g.components().count > 1 {
                return None;
            }
            greedy_connected(g, &rows, &target, 0)
        }
        _ => greedy_cover(&rows, &target, &target),
    };
    Some(VertexSet::from_ids(g, ids))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 100_000_000, max_time: Duration::from_secs(300) }
    }
}

impl Budget {
    pub fn with_time(max_time: Duration) -> Self {
        Budget { max_time, ..Budget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Fix each component's lowest vertex and collapse open twins.
    pub symmetry: bool,
    /// Explore the first branching levels on the rayon pool.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: Budget::default(), symmetry: true, parallel: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Outcome {
    Exact { value: usize, witness: VertexSet },
    /// Budget ran out; the true value lies in `[lower, upper]`.
    Interval { lower: usize, upper: usize, witness: Option<VertexSet> },
    Nonexistent,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
    /// Sizes `k` for which "no set of size <= k" was proved.
    pub refuted: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomResult {
    pub mode: DomMode,
    pub outcome: Outcome,
    pub stats: SearchStats,
}

impl DomResult {
    pub fn exact(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    /// `(lower, upper)` for exact and interval outcomes.
    pub fn bounds(&self) -> Option<(usize, usize)> {
        match self.outcome {
            Outcome::Exact { value, .. } => Some((value, value)),
            Outcome::Interval { lower, upper, .. } => Some((lower, upper)),
            Outcome::Nonexistent => None,
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match &self.outcome {
            Outcome::Exact { witness, .. } => Some(witness),
            Outcome::Interval { witness, .. } => witness.as_ref(),
            Outcome::Nonexistent => None,
        }
    }
}

pub fn solve(g: &CayleyGraph, mode: DomMode, budget: Budget) -> DomResult {
    solve_with(g, mode, &SolveOptions { budget, ..SolveOptions::default() })
}

pub fn solve_with(g: &CayleyGraph, mode: DomMode, opts: &SolveOptions) -> DomResult {
    let started = Instant::now();
    let ctl = Control::new(opts.budget, started);
    let comps = g.components();
    let mut stats = SearchStats::default();

    if mode == DomMode::Connected && comps.count > 1 {
        stats.elapsed_ms = started.elapsed().as_millis() as u64;
        return DomResult { mode, outcome: Outcome::Nonexistent, stats };
    }

    let rows = CoverRows::new(g, mode);
    let reps = if opts.symmetry && mode != DomMode::Dominating {
        twin_representatives(g)
    } else {
        BitSet::full(g.n())
    };

    let mut lower = 0;
    let mut upper = 0;
    let mut members = Vec::new();
    let mut exact = true;
    for label in 0..comps.count {
        let target = comps.mask(label);
        let root = target.first().expect("components are non-empty");
        let mut allowed = target.clone();
        allowed.intersect_with(reps.words());
        let second = (opts.symmetry && mode != DomMode::Dominating)
            .then(|| partner(g, root, &allowed))
            .flatten();
        let problem = Problem {
            g,
            mode,
            rows: &rows,
            target,
            allowed,
            root: opts.symmetry.then_some(root),
            second,
            parallel: opts.parallel,
        };
        let part = problem.minimize(&ctl, &mut stats);
        lower += part.lower;
        upper += part.best.len();
        exact &= part.lower == part.upper();
        members.extend(part.best);
    }

    stats.nodes = ctl.nodes.load(Ordering::Relaxed);
    stats.elapsed_ms = started.elapsed().as_millis() as u64;
    let witness = VertexSet::from_ids(g, members);
    let outcome = if exact {
        Outcome::Exact { value: upper, witness }
    } else {
        Outcome::Interval { lower, upper, witness: Some(witness) }
    };
    DomResult { mode, outcome, stats }
}

/// Twin representative of `root + (1, 1)`.
fn partner(g: &CayleyGraph, root: usize, allowed: &BitSet) -> Option<usize> {
    let r = g.vertex(root);
    let x = g.id(Vertex::new((r.u + 1) % g.p(), (r.v + 1) % g.m()));
    allowed.iter().find(|&y| g.row(y) == g.row(x))
}

/// Lowest-id member of each class of vertices with equal open neighbourhoods.
pub fn twin_representatives(g: &CayleyGraph) -> BitSet {
    let mut reps = BitSet::new(g.n());
    let mut seen = std::collections::HashSet::new();
    for i in 0..g.n() {
        if seen.insert(g.row(i)) {
            reps.insert(i);
        }
    }
    reps
}

/// Closed rows for dominating and connected modes, open rows for total.
struct CoverRows {
    words: usize,
    data: Vec<u64>,
}

impl CoverRows {
    fn new(g: &CayleyGraph, mode: DomMode) -> Self {
        let words = g.words();
        let mut data = Vec::with_capacity(g.n() * words);
        for i in 0..g.n() {
            let start = data.len();
            data.extend_from_slice(g.row(i));
            if mode != DomMode::Total {
                data[start + i / 64] |= 1 << (i % 64);
            }
        }
        CoverRows { words, data }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }
}

struct Control {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Instant,
    aborted: AtomicBool,
}

impl Control {
    fn new(budget: Budget, started: Instant) -> Self {
        Control {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            deadline: started + budget.max_time,
            aborted: AtomicBool::new(false),
        }
    }

    /// Count a node; false once the budget is spent.
    #[inline]
    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes || (n.is_multiple_of(1024) && Instant::now() >= self.deadline) {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn is_aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }
}

enum Step {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

struct Part {
    lower: usize,
    best: Vec<usize>,
}

impl Part {
    fn upper(&self) -> usize {
        self.best.len()
    }
}

struct Problem<'a> {
    g: &'a CayleyGraph,
    mode: DomMode,
    rows: &'a CoverRows,
    /// Vertices that must be covered.
    target: BitSet,
    /// Vertices that may be chosen.
    allowed: BitSet,
    root: Option<usize>,
    /// Fixed neighbour of the root, used when `k >= 2`.
    second: Option<usize>,
    parallel: bool,
}

/// Search state below the root.
#[derive(Clone)]
struct Node {
    chosen: Vec<usize>,
    covered: BitSet,
    excluded: BitSet,
}

impl Problem<'_> {
    fn minimize(&self, ctl: &Control, stats: &mut SearchStats) -> Part {
        let size = self.target.count();
        let k = self.g.degree();
        let trivial = match self.mode {
            DomMode::Total => size.div_ceil(k.max(1)),
            _ => size.div_ceil(k + 1),
        };
        let mut best = match self.mode {
            DomMode::Connected => greedy_connected(
                self.g,
                self.rows,
                &self.target,
                self.root.unwrap_or_else(|| self.target.first().unwrap()),
            ),
            _ => greedy_cover(self.rows, &self.target, &self.target),
        };
        let mut lower = trivial.max(1);
        while lower < best.len() {
            match self.decide(lower, ctl) {
                Step::Found(set) => {
                    best = set;
                    break;
                }
                Step::Exhausted => {
                    stats.refuted.push(lower);
                    lower += 1;
                }
                Step::Aborted => break,
            }
        }
        if lower >= best.len() {
            lower = best.len();
        }
        Part { lower, best }
    }

    /// Is there an admissible set of size at most `k`?
    fn decide(&self, k: usize, ctl: &Control) -> Step {
        let n = self.g.n();
        let mut node = Node {
            chosen: Vec::new(),
            covered: BitSet::new(n),
            excluded: BitSet::new(n),
        };
        match self.root {
            Some(r) => {
                node.chosen.push(r);
                node.covered.union_with(self.rows.row(r));
                if let Some(s) = self.second.filter(|_| k >= 2) {
                    node.chosen.push(s);
                    node.covered.union_with(self.rows.row(s));
                }
            }
            None if self.mode == DomMode::Connected => {
                // Without the translation argument every vertex is a seed;
                // later seeds exclude earlier ones.
                let seeds: Vec<usize> = self.allowed.iter().collect();
                let mut aborted = false;
                for (i, &s) in seeds.iter().enumerate() {
                    let mut child = node.clone();
                    child.chosen.push(s);
                    child.covered.union_with(self.rows.row(s));
                    for &e in &seeds[..i] {
                        child.excluded.insert(e);
                    }
                    match self.search(child, k, ctl) {
                        Step::Found(set) => return Step::Found(set),
                        Step::Aborted => aborted = true,
                        Step::Exhausted => {}
                    }
                    if aborted {
                        break;
                    }
                }
                return if aborted { Step::Aborted } else { Step::Exhausted };
            }
            None => {}
        }
        if !self.parallel {
            return self.search(node, k, ctl);
        }

        // Expand breadth-first until there is enough work to share.
        let want = 8 * rayon::current_num_threads().max(1);
        let mut layer = vec![node];
        for _ in 0..3 {
            if layer.len() >= want {
                break;
            }
            let mut next = Vec::new();
            for nd in layer {
                match self.expand(&nd, k, ctl) {
                    Expansion::Done(set) => return Step::Found(set),
                    Expansion::Children(ch) => next.extend(ch),
                    Expansion::Aborted => return Step::Aborted,
                }
            }
            layer = next;
        }
        let found = AtomicBool::new(false);
        let hit = layer.into_par_iter().find_map_first(|nd| {
            if found.load(Ordering::Relaxed) {
                return None;
            }
            match self.search(nd, k, ctl) {
                Step::Found(set) => {
                    found.store(true, Ordering::Relaxed);
                    Some(set)
                }
                _ => None,
            }
        });
        match hit {
            Some(set) => Step::Found(set),
            None if ctl.is_aborted() => Step::Aborted,
            None => Step::Exhausted,
        }
    }

    fn search(&self, node: Node, k: usize, ctl: &Control) -> Step {
        match self.expand(&node, k, ctl) {
            Expansion::Done(set) => Step::Found(set),
            Expansion::Aborted => Step::Aborted,
            Expansion::Children(children) => {
                for child in children {
                    match self.search(child, k, ctl) {
                        Step::Exhausted => {}
                        other => return other,
                    }
                }
                Step::Exhausted
            }
        }
    }

    /// Evaluate a node: report success, prune (no children), or branch.
    fn expand(&self, node: &Node, k: usize, ctl: &Control) -> Expansion {
        if !ctl.tick() {
            return Expansion::Aborted;
        }
        let mut uncovered = self.target.clone();
        uncovered.difference_with(node.covered.words());
        let left = uncovered.count();
        if left == 0 {
            return Expansion::Done(node.chosen.clone());
        }
        let r = k.saturating_sub(node.chosen.len());
        if r == 0 {
            return Expansion::Children(Vec::new());
        }
        let mut avail = self.allowed.clone();
        avail.difference_with(node.excluded.words());
        for &c in &node.chosen {
            avail.remove(c);
        }
        match self.mode {
            DomMode::Connected => self.expand_connected(node, &uncovered, left, avail, r),
            _ => self.expand_cover(node, &uncovered, left, avail, r),
        }
    }

    fn expand_cover(
        &self,
        node: &Node,
        uncovered: &BitSet,
        left: usize,
        avail: BitSet,
        r: usize,
    ) -> Expansion {
        // Uncovered vertex with the fewest admissible coverers.
        let mut pick = None;
        let mut fewest = u32::MAX;
        for w in uncovered.iter() {
            let c = and_count(self.rows.row(w), avail.words());
            if c < fewest {
                fewest = c;
                pick = Some(w);
                if c == 0 {
                    return Expansion::Children(Vec::new());
                }
            }
        }
        let w = pick.expect("uncovered is non-empty");

        let gain = |v: usize| and_count(self.rows.row(v), uncovered.words()) as usize;
        if r == 1 {
            let mut cands = avail.clone();
            cands.intersect_with(self.rows.row(w));
            return match cands.iter().find(|&c| gain(c) == left) {
                Some(c) => {
                    let mut set = node.chosen.clone();
                    set.push(c);
                    Expansion::Done(set)
                }
                None => Expansion::Children(Vec::new()),
            };
        }
        let mut gains: Vec<usize> = avail.iter().map(gain).collect();
        if top_sum(&mut gains, r) < left {
            return Expansion::Children(Vec::new());
        }

        let mut cands: Vec<(usize, usize)> = bitset::ones(self.rows.row(w))
            .filter(|&c| avail.contains(c))
            .map(|c| (c, gain(c)))
            .collect();
        cands.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        self.children(node, &cands)
    }

    fn expand_connected(
        &self,
        node: &Node,
        uncovered: &BitSet,
        left: usize,
        avail: BitSet,
        r: usize,
    ) -> Expansion {
        // Vertices reachable from the current set through admissible
        // vertices within r steps; only they can still join.
        let mut frontier = node.covered.clone();
        frontier.intersect_with(avail.words());
        if frontier.is_empty() {
            return Expansion::Children(Vec::new());
        }
        let mut reach = frontier.clone();
        let mut layer = frontier.clone();
        for _ in 1..r {
            let mut next = BitSet::new(self.g.n());
            for i in layer.iter() {
                next.union_with(self.g.row(i));
            }
            next.intersect_with(avail.words());
            next.difference_with(reach.words());
            if next.is_empty() {
                break;
            }
            reach.union_with(next.words());
            layer = next;
        }
        let mut coverable = BitSet::new(self.g.n());
        for i in reach.iter() {
            coverable.union_with(self.rows.row(i));
        }
        if !uncovered.is_subset(&coverable) {
            return Expansion::Children(Vec::new());
        }

        let gain = |v: usize| and_count(self.rows.row(v), uncovered.words()) as usize;
        let mut gains: Vec<usize> = reach.iter().map(gain).collect();
        if top_sum(&mut gains, r) < left {
            return Expansion::Children(Vec::new());
        }
        if r == 1 {
            return match frontier.iter().find(|&c| gain(c) == left) {
                Some(c) => {
                    let mut set = node.chosen.clone();
                    set.push(c);
                    Expansion::Done(set)
                }
                None => Expansion::Children(Vec::new()),
            };
        }

        let mut cands: Vec<(usize, usize)> = frontier.iter().map(|c| (c, gain(c))).collect();
        cands.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        self.children(node, &cands)
    }

    fn children(&self, node: &Node, cands: &[(usize, usize)]) -> Expansion {
        let mut out = Vec::with_capacity(cands.len());
        let mut excluded = node.excluded.clone();
        for &(c, _) in cands {
            let mut child = Node {
                chosen: node.chosen.clone(),
                covered: node.covered.clone(),
                excluded: excluded.clone(),
            };
            child.chosen.push(c);
            child.covered.union_with(self.rows.row(c));
            out.push(child);
            excluded.insert(c);
        }
        Expansion::Children(out)
    }
}

enum Expansion {
    Done(Vec<usize>),
    Children(Vec<Node>),
    Aborted,
}

/// Sum of the `r` largest entries.
fn top_sum(values: &mut [usize], r: usize) -> usize {
    if values.len() > r {
        values.select_nth_unstable_by(r - 1, |a, b| b.cmp(a));
        values[..r].iter().sum()
    } else {
        values.iter().sum()
    }
}

fn greedy_cover(rows: &CoverRows, target: &BitSet, allowed: &BitSet) -> Vec<usize> {
    let mut uncovered = target.clone();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = allowed
            .iter()
            .map(|v| (v, and_count(rows.row(v), uncovered.words())))
            .fold((usize::MAX, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        assert!(gain > 0, "target cannot be covered from the allowed vertices");
        chosen.push(best);
        uncovered.difference_with(rows.row(best));
    }
    prune_redundant(chosen, |set| covers(rows, target, set))
}

fn greedy_connected(g: &CayleyGraph, rows: &CoverRows, target: &BitSet, root: usize) -> Vec<usize> {
    let mut chosen = vec![root];
    let mut inside = BitSet::new(g.n());
    inside.insert(root);
    let mut uncovered = target.clone();
    uncovered.difference_with(rows.row(root));
    while !uncovered.is_empty() {
        let mut frontier = BitSet::new(g.n());
        for &c in &chosen {
            frontier.union_with(g.row(c));
        }
        frontier.difference_with(inside.words());
        let (mut best, gain) = frontier
            .iter()
            .map(|v| (v, and_count(rows.row(v), uncovered.words())))
            .fold((usize::MAX, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if gain == 0 {
            // Step toward the nearest uncovered vertex.
            let target_v = uncovered.first().unwrap();
            let dist = g.distances_from(target_v);
            best = frontier
                .iter()
                .min_by_key(|&v| (dist[v].unwrap_or(u32::MAX), v))
                .expect("connected graph has a frontier");
        }
        chosen.push(best);
        inside.insert(best);
        uncovered.difference_with(rows.row(best));
    }
    prune_redundant(chosen, |set| {
        covers(rows, target, set) && induced_connected(g, &BitSet::from_ids(g.n(), set.iter().copied()))
    })
}

fn covers(rows: &CoverRows, target: &BitSet, set: &[usize]) -> bool {
    let mut cov = BitSet::new(target.capacity());
    for &v in set {
        cov.union_with(rows.row(v));
    }
    target.is_subset(&cov)
}

/// Drop members, highest id first, while the predicate still holds.
fn prune_redundant(mut set: Vec<usize>, ok: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    let mut order = set.clone();
    order.sort_unstable_by(|a, b| b.cmp(a));
    for v in order {
        if set.len() == 1 {
            break;
        }
        let trial: Vec<usize> = set.iter().copied().filter(|&x| x != v).collect();
        if ok(&trial) {
            set = trial;
        }
    }
    set.sort_unstable();
    set
}
