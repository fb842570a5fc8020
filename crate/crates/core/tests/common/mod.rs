//! Reference implementations that share no code with the crate: adjacency
//! from gcd, distances from boolean matrix powers, domination numbers by
//! exhaustive subset enumeration.

#![allow(dead_code)]

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Adjacency of `(ua, va)` and `(ub, vb)` straight from the definition.
pub fn adjacent(p: u64, m: u64, a: (u64, u64), b: (u64, u64)) -> bool {
    let du = (a.0 + p - b.0) % p;
    let dv = (a.1 + m - b.1) % m;
    gcd(du, p) == 1 && gcd(dv, m) == 1
}

pub struct Naive {
    pub p: u64,
    pub m: u64,
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(p: u64, m: u64) -> Self {
        let n = (p * m) as usize;
        let at = |i: usize| (i as u64 / m, i as u64 % m);
        let adj = (0..n)
            .map(|i| (0..n).map(|j| adjacent(p, m, at(i), at(j))).collect())
            .collect();
        Naive { p, m, n, adj }
    }

    /// All-pairs distances by powers of the adjacency matrix.
    pub fn distances(&self) -> Vec<Vec<Option<u32>>> {
        let n = self.n;
        let mut dist = vec![vec![None; n]; n];
        let mut reach: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for k in 1..n as u32 {
            // reach_k = reach_{k-1} * (A + I)
            let next: Vec<Vec<bool>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| reach[i][j] || (0..n).any(|l| reach[i][l] && self.adj[l][j]))
                        .collect()
                })
                .collect();
            let mut grew = false;
            for i in 0..n {
                for j in 0..n {
                    if next[i][j] && dist[i][j].is_none() {
                        dist[i][j] = Some(k);
                        grew = true;
                    }
                }
            }
            reach = next;
            if !grew {
                break;
            }
        }
        dist
    }

    pub fn connected(&self) -> bool {
        self.distances()[0].iter().all(Option::is_some)
    }

    fn masks(&self) -> Vec<u32> {
        assert!(self.n <= 32);
        self.adj
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).fold(0u32, |acc, (j, _)| acc | 1 << j))
            .collect()
    }

    fn induced_connected(&self, masks: &[u32], set: u32) -> bool {
        let start = set & set.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = masks[i] & set & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == set
    }

    /// Minimum size of a dominating (`'d'`), total dominating (`'t'`) or
    /// connected dominating (`'c'`) set; `None` when there is none.
    pub fn domination_number(&self, mode: char) -> Option<usize> {
        let masks = self.masks();
        let full: u32 = if self.n == 32 { u32::MAX } else { (1 << self.n) - 1 };
        if mode == 'c' && !self.connected() {
            return None;
        }
        for k in 1..=self.n {
            // Gosper's hack over all k-subsets.
            let mut s: u32 = (1 << k) - 1;
            while s <= full {
                let mut open = 0u32;
                let mut bits = s;
                while bits != 0 {
                    open |= masks[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                let ok = match mode {
                    'd' => (open | s) == full,
                    't' => open == full,
                    'c' => (open | s) == full && self.induced_connected(&masks, s),
                    _ => panic!("unknown mode {mode}"),
                };
                if ok {
                    return Some(k);
                }
                let c = s & s.wrapping_neg();
                let r = s + c;
                if r > full || r == 0 {
                    break;
                }
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        None
    }

    /// Does `set` dominate every vertex in the given mode?
    pub fn dominates(&self, set: &[(u64, u64)], mode: char) -> bool {
        let ids: Vec<usize> = set.iter().map(|&(u, v)| (u * self.m + v) as usize).collect();
        let covered = |x: usize| {
            ids.iter().any(|&s| self.adj[s][x] || (mode != 't' && s == x))
        };
        if !(0..self.n).all(covered) {
            return false;
        }
        if mode != 'c' {
            return true;
        }
        let mut seen = vec![ids[0]];
        let mut i = 0;
        while i < seen.len() {
            let a = seen[i];
            for &b in &ids {
                if self.adj[a][b] && !seen.contains(&b) {
                    seen.push(b);
                }
            }
            i += 1;
        }
        ids.iter().all(|x| seen.contains(x))
    }
}

/// Every prime `p` and modulus `m >= 2` with `p * m <= max_n`.
pub fn small_instances(max_n: u64) -> Vec<(u64, u64)> {
    let is_prime = |x: u64| x >= 2 && (2..x).all(|d| !x.is_multiple_of(d));
    let mut out = Vec::new();
    for p in (2..=max_n / 2).filter(|&x| is_prime(x)) {
        for m in 2..=max_n / p {
            out.push((p, m));
        }
    }
    out
}
