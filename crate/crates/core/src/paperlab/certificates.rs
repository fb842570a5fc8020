//! Explicit vertex sets quoted in the arguments for each family.
//!
//! Nothing here asserts that a set is valid; callers check the claims.

use serde::{Deserialize, Serialize};

use super::{classify_instance, CaseTag, Family};
use crate::bitset::BitSet;
use crate::domsolve::{DomMode, VertexSet};
use crate::graph::{CayleyGraph, Vertex};
use crate::numtheory::{consecutive_runs, Factorization};

/// The part of the graph a set is claimed to dominate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scope {
    Graph,
    /// The component containing the vertex.
    ComponentOf { vertex: Vertex },
    /// All vertices `(u, *)`.
    Layer { u: u64 },
}

impl Scope {
    pub fn mask(&self, g: &CayleyGraph) -> BitSet {
        match *self {
            Scope::Graph => BitSet::full(g.n()),
            Scope::ComponentOf { vertex } => {
                let comps = g.components();
                comps.mask(comps.labels[g.id(vertex)])
            }
            Scope::Layer { u } => {
                let m = g.m() as usize;
                let start = u as usize * m;
                BitSet::from_ids(g.n(), start..start + m)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertClaim {
    pub mode: DomMode,
    pub scope: Scope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub provenance: String,
    pub set: VertexSet,
    /// What the set is claimed to be a minimum set for.
    pub claims: Vec<CertClaim>,
}

struct Builder<'a> {
    p: u64,
    m: u64,
    out: &'a mut Vec<Certificate>,
}

impl Builder<'_> {
    fn add(&mut self, name: &str, prov: &str, pairs: &[(u64, u64)], claims: &[CertClaim]) {
        // Coordinates outside the instance mean the set does not apply.
        if let Ok(set) = VertexSet::from_pairs(self.p, self.m, pairs) {
            self.out.push(Certificate {
                name: name.into(),
                provenance: prov.into(),
                set,
                claims: claims.to_vec(),
            });
        }
    }
}

fn whole(modes: &[DomMode]) -> Vec<CertClaim> {
    modes.iter().map(|&mode| CertClaim { mode, scope: Scope::Graph }).collect()
}

fn within(vertex: (u64, u64), modes: &[DomMode]) -> Vec<CertClaim> {
    let vertex = Vertex::new(vertex.0, vertex.1);
    modes
        .iter()
        .map(|&mode| CertClaim { mode, scope: Scope::ComponentOf { vertex } })
        .collect()
}

const D: DomMode = DomMode::Dominating;
const T: DomMode = DomMode::Total;
const C: DomMode = DomMode::Connected;

/// Named sets for the instance, in the order they are introduced.
pub fn paper_certificates(p: u64, fact: &Factorization) -> Vec<Certificate> {
    let tag = classify_instance(p, fact);
    let m = fact.modulus();
    let mut out = Vec::new();
    let mut b = Builder { p, m, out: &mut out };
    match tag.family {
        Family::PrimePower => prime_power(&mut b, &tag, fact),
        Family::TwoPrime => two_prime(&mut b, &tag, fact),
        Family::ThreePrime => three_prime(&mut b, &tag),
        Family::KPrimeRemark | Family::Uncovered => {}
    }
    out
}

fn prime_power(b: &mut Builder, tag: &CaseTag, fact: &Factorization) {
    if tag.p_is_two {
        if fact.exponent_of(2) >= 2 {
            let d = [(0, 0), (0, 1), (1, 0), (1, 1)];
            b.add("D", "thm gamma_t, gamma_c (m = p^a) case 1", &d, &whole(&[D, T]));
        }
    } else {
        let d = [(0, 1), (1, 0), (2, 2)];
        b.add("D", "thm gamma_t, gamma_c (m = p^a) case 2", &d, &whole(&[D, T, C]));
    }
}

fn two_prime(b: &mut Builder, tag: &CaseTag, fact: &Factorization) {
    let p = tag.p;
    let q = tag.others[0];
    let ones = fact.exponent_of(p) == 1 && fact.exponent_of(q) == 1;

    if tag.p_is_two {
        if ones {
            b.add("A", "lem t1", &[(0, 0), (1, q)], &within((0, 0), &[D]));
            b.add("B", "lem t1", &[(0, 1), (1, q + 1)], &within((0, 1), &[D]));
            let t1 = [(0, 0), (1, 1), (1, q), (0, q + 1)];
            b.add("T1", "lem t1", &t1, &within((0, 0), &[T]));
            let t2 = [(0, 1), (1, 0), (0, q), (1, q + 1)];
            b.add("T2", "lem t1", &t2, &within((0, 1), &[T]));
        } else {
            let d = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)];
            b.add("D", "lem t1", &d, &whole(&[D, T]));
        }
        if fact.modulus() == 18 {
            let t1 = [(0, 0), (0, 4), (1, 1), (1, 3)];
            b.add("T1 (fig:4)", "fig:4", &t1, &within((0, 0), &[T]));
            let t2 = [(0, 1), (0, 3), (1, 0), (1, 4)];
            b.add("T2 (fig:4)", "fig:4", &t2, &within((0, 1), &[T]));
        }
        return;
    }

    if q == 2 {
        if ones {
            let d = [(0, 0), (0, 1), (1, p), (1, p + 1)];
            b.add("D", "prop t2", &d, &whole(&[D]));
        }
        let t = [(0, 0), (0, 1), (1, p), (1, p + 1), (p - 1, p - 1), (p - 1, 2 * p - 1)];
        b.add("T", "prop t2", &t, &whole(&[T]));
        if p == 3 {
            let mut c = t.to_vec();
            c.push((0, p));
            b.add("C", "prop t2", &c, &whole(&[C]));
        }
        let mut modes = vec![T];
        if !ones {
            modes.insert(0, D);
        }
        if p >= 5 {
            modes.push(C);
        }
        let d1 = [(0, 0), (0, 1), (1, 2), (1, 3), (2, 4), (2, 5)];
        b.add("D'", "prop t2", &d1, &whole(&modes));
        return;
    }

    if tag.has_three() {
        if ones {
            let m = fact.modulus();
            let (Some(x), Some(y)) = (pair_end(m, p), pair_end(m, q)) else {
                return;
            };
            let d = [(0, 0), (0, 1), (1, x), (1, y)];
            b.add("D", "prop t3", &d, &whole(&[D]));
            let mut t = d.to_vec();
            t.push((2, 2));
            b.add("T", "prop t3; fig:3", &t, &whole(&[T, C]));
        } else {
            let d = [(0, 0), (0, 1), (1, 2), (2, 3), (2, 4)];
            b.add("D", "prop t3", &d, &whole(&[D, T, C]));
        }
    } else {
        b.add("D", "prop t3", &[(0, 0), (1, 1), (2, 2), (3, 3)], &whole(&[D, T, C]));
    }
}

/// Second element `x'` of the first run `{x, x'}` of length 2 whose second
/// element is a multiple of `prime`.
fn pair_end(m: u64, prime: u64) -> Option<u64> {
    let runs = consecutive_runs(m).ok()?;
    let end = runs.runs_of_len(2).map(|r| (r.start + 1) % m).find(|x| x % prime == 0);
    end
}

/// `(x4, x4', x5, x5')` from the first two runs of length 5.
fn fives(m: u64) -> Option<(u64, u64, u64, u64)> {
    let runs = consecutive_runs(m).ok()?;
    let mut it = runs.runs_of_len(5);
    let a = it.next()?;
    let b = it.next()?;
    Some(((a.start + 3) % m, (b.start + 3) % m, (a.start + 4) % m, (b.start + 4) % m))
}

fn three_prime(b: &mut Builder, tag: &CaseTag) {
    let m = b.m;
    if tag.p_is_two {
        if tag.all_exponents_one {
            let Some((x4, x4b, x5, x5b)) = fives(m) else { return };
            b.add("D1", "lem t4", &[(0, 0), (0, 2), (1, x4), (1, x4b)], &within((0, 0), &[D]));
            b.add("D2", "lem t4", &[(0, 1), (0, 3), (1, x5), (1, x5b)], &within((0, 1), &[D]));
            let t1 = [(0, 0), (0, 2), (0, 4), (1, 1), (1, x4), (1, x4b)];
            b.add("T1", "lem t4", &t1, &within((0, 0), &[T]));
            let t2 = [(0, 1), (0, 3), (0, 5), (1, 2), (1, x5), (1, x5b)];
            b.add("T2", "lem t4", &t2, &within((0, 1), &[T]));
        } else {
            let d1 = [(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)];
            b.add("D1", "lem t4", &d1, &within((0, 0), &[D, T]));
            let d2 = [(0, 1), (0, 3), (0, 5), (1, 0), (1, 2), (1, 4)];
            b.add("D2", "lem t4", &d2, &within((0, 1), &[D, T]));
        }
        return;
    }
    if !tag.m_even {
        return;
    }

    if tag.has_three() {
        if tag.all_exponents_one {
            if let Some((x4, x4b, x5, x5b)) = fives(m) {
                let d = [(0, 0), (0, 1), (0, 2), (0, 3), (1, x4), (1, x4b), (1, x5), (1, x5b)];
                b.add("D", "prop t5", &d, &whole(&[D]));
            }
        }
        let d1 = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (2, 8), (2, 9)];
        let modes: &[DomMode] = if tag.all_exponents_one { &[T] } else { &[D, T] };
        b.add("D'", "prop t5", &d1, &whole(modes));
        if tag.p == 3 {
            let layer = |u| vec![CertClaim { mode: D, scope: Scope::Layer { u } }];
            let a = [(1, 1), (2, 2), (1, 4), (2, 5), (1, 7), (2, 8), (1, 10), (2, 11)];
            b.add("A", "prop t5", &a, &layer(0));
            let bb = [(0, 0), (2, 2), (0, 3), (2, 5), (0, 6), (2, 8), (0, 9), (2, 11)];
            b.add("B", "prop t5", &bb, &layer(1));
            let c = [(0, 0), (1, 1), (0, 3), (1, 4), (0, 6), (1, 7), (0, 9), (1, 10)];
            b.add("C", "prop t5", &c, &layer(2));
            let d2: Vec<(u64, u64)> = (0..12).map(|i| (i % 3, i)).collect();
            b.add("D''", "prop t5", &d2, &whole(&[C]));
        } else {
            let d3: Vec<(u64, u64)> = (0..10).map(|i| (i % 5, i)).collect();
            b.add("D'''", "prop t5", &d3, &whole(&[C]));
        }
    } else {
        let d4 = [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (2, 5), (1, 6), (0, 7)];
        b.add("D''''", "prop t5", &d4, &whole(&[D, T, C]));
    }
}
