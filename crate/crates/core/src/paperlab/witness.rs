//! Common-neighbour and 3-path formula tables for three prime factors.
//!
//! `dia1`: `p = 2`, pairs `(u, v), (u, v')` in one component; the formula
//! gives a common neighbour `(1 - u, w)`.
//! `dia2`: `p = 2`, pairs `(u, v), (u', v')` with `u != u'` in one component,
//! oriented so that `v` is even; the formula gives `(u, v) (u', w1) (u, w2)
//! (u', v')`, or the edge itself.
//! `dia3`: odd `p, q, r`, pairs `(u, v), (u, v')`; common neighbour
//! `(u + 1, w)`.
//!
//! A pair is classified by which of the primes divide `v` and `v'` (each
//! category is exclusive: "multiple of q" means divisible by q and by no
//! other listed odd prime) and by parity of the representative in `[0, m)`.
//! Rows are tried in printed order, each in both orientations; the first
//! match claims the pair. Quotients are taken on representatives when exact.
//! For odd `m`, halving an odd representative uses the inverse of 2.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CayleyGraph, Vertex};
use crate::numtheory::{factorize, gcd};

/// Failures and unclassified pairs listed per report, at most.
pub const FAILURE_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    Dia1,
    Dia2,
    Dia3,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::Dia1, TableId::Dia2, TableId::Dia3];

    pub fn label(self) -> &'static str {
        match self {
            TableId::Dia1 => "dia1",
            TableId::Dia2 => "dia2",
            TableId::Dia3 => "dia3",
        }
    }

    /// Does the table apply to `Z_p x Z_m`?
    pub fn applies(self, p: u64, m: u64) -> bool {
        primes_for(self, p, m).is_ok()
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dia1" => Ok(TableId::Dia1),
            "dia2" => Ok(TableId::Dia2),
            "dia3" => Ok(TableId::Dia3),
            _ => Err(Error::Domain(format!("unknown table {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowTally {
    /// 1-based row number in printed order.
    pub row: usize,
    pub label: String,
    pub classified: usize,
    pub valid: usize,
    pub invalid: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFailure {
    pub a: Vertex,
    pub b: Vertex,
    pub row: usize,
    /// Evaluated path from `a` to `b`; empty when the row has no formula
    /// for this sub-case.
    pub path: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub table: TableId,
    pub p: u64,
    pub m: u64,
    pub eligible: usize,
    pub classified: usize,
    pub unclassified: usize,
    pub rows: Vec<RowTally>,
    pub failure_count: usize,
    /// First [`FAILURE_CAP`] failures in pair order.
    pub failures: Vec<WitnessFailure>,
    /// First [`FAILURE_CAP`] unclassified pairs.
    pub unclassified_pairs: Vec<(Vertex, Vertex)>,
}

impl WitnessReport {
    /// Fraction of eligible pairs matched by some row.
    pub fn coverage(&self) -> f64 {
        if self.eligible == 0 {
            1.0
        } else {
            self.classified as f64 / self.eligible as f64
        }
    }

    pub fn valid(&self) -> usize {
        self.rows.iter().map(|r| r.valid).sum()
    }
}

/// Outcome for one eligible pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    pub a: Vertex,
    pub b: Vertex,
    pub row: Option<usize>,
    /// Path from `a` to `b` (both included) that was accepted, or the first
    /// candidate when none was.
    pub path: Vec<Vertex>,
    pub valid: bool,
}

pub fn verify_witness_table(g: &CayleyGraph, table: TableId) -> Result<WitnessReport> {
    let checks = witness_checks(g, table)?;
    primes_for(table, g.p(), g.m())?;
    let mut rows: Vec<RowTally> = table_rows(table)
        .iter()
        .enumerate()
        .map(|(i, r)| RowTally {
            row: i + 1,
            label: r.label.to_string(),
            classified: 0,
            valid: 0,
            invalid: 0,
        })
        .collect();
    let mut report = WitnessReport {
        table,
        p: g.p(),
        m: g.m(),
        eligible: checks.len(),
        classified: 0,
        unclassified: 0,
        rows: Vec::new(),
        failure_count: 0,
        failures: Vec::new(),
        unclassified_pairs: Vec::new(),
    };
    for c in checks {
        let Some(row) = c.row else {
            report.unclassified += 1;
            if report.unclassified_pairs.len() < FAILURE_CAP {
                report.unclassified_pairs.push((c.a, c.b));
            }
            continue;
        };
        report.classified += 1;
        let t = &mut rows[row - 1];
        t.classified += 1;
        if c.valid {
            t.valid += 1;
        } else {
            t.invalid += 1;
            report.failure_count += 1;
            if report.failures.len() < FAILURE_CAP {
                report.failures.push(WitnessFailure { a: c.a, b: c.b, row, path: c.path });
            }
        }
    }
    report.rows = rows;
    Ok(report)
}

/// Evaluate the table on every eligible pair, in order of vertex ids.
pub fn witness_checks(g: &CayleyGraph, table: TableId) -> Result<Vec<PairCheck>> {
    let pr = primes_for(table, g.p(), g.m())?;
    let rows = table_rows(table);
    let m = g.m();
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let (a, b) = (g.vertex(i), g.vertex(j));
            let Some((a, b)) = orient(table, g.p(), a, b) else { continue };
            let mut check = PairCheck { a, b, row: None, path: Vec::new(), valid: false };
            if let Some((row, x, y, cands)) = classify(&rows, &pr, a.v, b.v) {
                let swapped = (x, y) != (a.v, b.v);
                let (x, y) = if swapped { (b, a) } else { (a, b) };
                check.row = Some(row + 1);
                let paths: Vec<Vec<Vertex>> = cands
                    .unwrap_or_default()
                    .into_iter()
                    .map(|mid| {
                        let mut path = lift(table, g.p(), m, x, y, &mid);
                        if swapped {
                            path.reverse();
                        }
                        path
                    })
                    .collect();
                match paths.iter().find(|path| walk_ok(g, path)) {
                    Some(path) => {
                        check.path = path.clone();
                        check.valid = true;
                    }
                    None => check.path = paths.into_iter().next().unwrap_or_default(),
                }
            }
            out.push(check);
        }
    }
    Ok(out)
}

/// Eligible pairs in the canonical orientation for the table.
fn orient(table: TableId, p: u64, a: Vertex, b: Vertex) -> Option<(Vertex, Vertex)> {
    match table {
        TableId::Dia1 => (a.u == b.u && a.v % 2 == b.v % 2).then_some((a, b)),
        TableId::Dia2 => {
            debug_assert_eq!(p, 2);
            if a.u == b.u || a.v % 2 == b.v % 2 {
                return None;
            }
            Some(if a.v.is_multiple_of(2) { (a, b) } else { (b, a) })
        }
        TableId::Dia3 => (a.u == b.u).then_some((a, b)),
    }
}

/// Turn middle second coordinates into a full path from `x` to `y`.
fn lift(table: TableId, p: u64, m: u64, x: Vertex, y: Vertex, mid: &[i128]) -> Vec<Vertex> {
    let red = |w: i128| w.rem_euclid(m as i128) as u64;
    let mut path = vec![x];
    match table {
        TableId::Dia1 => path.push(Vertex::new(1 - x.u, red(mid[0]))),
        TableId::Dia3 => path.push(Vertex::new((x.u + 1) % p, red(mid[0]))),
        TableId::Dia2 => {
            let us = [y.u, x.u];
            for (k, &w) in mid.iter().enumerate() {
                path.push(Vertex::new(us[k % 2], red(w)));
            }
        }
    }
    path.push(y);
    path
}

fn walk_ok(g: &CayleyGraph, path: &[Vertex]) -> bool {
    path.windows(2).all(|w| g.adjacent(g.id(w[0]), g.id(w[1])))
}

/// The odd primes named in the table, in the table's roles.
#[derive(Debug, Clone, Copy)]
struct Primes {
    m: i128,
    /// `dia3` only.
    p: i128,
    q: i128,
    r: i128,
}

fn primes_for(table: TableId, p: u64, m: u64) -> Result<Primes> {
    let fact = factorize(m)?;
    let odd: Vec<u64> = fact.primes().filter(|&x| x != 2).collect();
    let bad = || Error::Domain(format!("table {table} does not apply to Z_{p} x Z_{m}"));
    match table {
        TableId::Dia1 | TableId::Dia2 => {
            if p != 2 || !m.is_multiple_of(2) || odd.len() != 2 {
                return Err(bad());
            }
            Ok(Primes { m: m as i128, p: 2, q: odd[0] as i128, r: odd[1] as i128 })
        }
        TableId::Dia3 => {
            if p == 2 || m.is_multiple_of(2) || odd.len() != 3 || !m.is_multiple_of(p) {
                return Err(bad());
            }
            let rest: Vec<u64> = odd.into_iter().filter(|&x| x != p).collect();
            Ok(Primes { m: m as i128, p: p as i128, q: rest[0] as i128, r: rest[1] as i128 })
        }
    }
}

// Category of `v`: which of the three table primes divide it, as bits
// `p = 4, q = 2, r = 1`. Parity conditions inside a row are left to the
// row's formula.
const U: u8 = 0;
const R: u8 = 1;
const Q: u8 = 2;
const QR: u8 = 3;
const P: u8 = 4;
const PR: u8 = 5;
const PQ: u8 = 6;
const PQR: u8 = 7;

fn cat(pr: &Primes, v: i128) -> u8 {
    (u8::from(v % pr.p == 0) << 2) | (u8::from(v % pr.q == 0) << 1) | u8::from(v % pr.r == 0)
}

type Formula = Box<dyn Fn(&Primes, i128, i128) -> Candidates>;

struct Row {
    label: &'static str,
    /// Category bits of `v` and `v'` accepted by the row.
    pairs: Vec<(u8, u8)>,
    formula: Formula,
}

fn row(
    label: &'static str,
    pairs: &[(u8, u8)],
    formula: impl Fn(&Primes, i128, i128) -> Option<Vec<Vec<i128>>> + 'static,
) -> Row {
    Row { label, pairs: pairs.to_vec(), formula: Box::new(formula) }
}

/// A single candidate common neighbour (or middle path).
fn one(w: Vec<i128>) -> Option<Vec<Vec<i128>>> {
    Some(vec![w])
}

fn is_unit(pr: &Primes, x: i128) -> bool {
    gcd(x.rem_euclid(pr.m) as u64, pr.m as u64) == 1
}

/// `x / 2` in `Z_m`; exact integer halving for even `x`, otherwise via the
/// inverse of 2 (odd `m` only).
fn half(pr: &Primes, x: i128) -> Option<i128> {
    let x = x.rem_euclid(pr.m);
    if x % 2 == 0 {
        Some(x / 2)
    } else if pr.m % 2 == 1 {
        Some((x + pr.m) / 2)
    } else {
        None
    }
}

/// Candidate middle vertices (second coordinates), or `None` when the row
/// has no formula for the sub-case.
type Candidates = Option<Vec<Vec<i128>>>;

/// Matching row index, the oriented `(v, v')`, and the row's candidates.
fn classify(rows: &[Row], pr: &Primes, v: u64, w: u64) -> Option<(usize, u64, u64, Candidates)> {
    let (a, b) = (v as i128, w as i128);
    let (ca, cb) = (cat(pr, a), cat(pr, b));
    for (i, r) in rows.iter().enumerate() {
        for (x, y, cx, cy) in [(a, b, ca, cb), (b, a, cb, ca)] {
            if r.pairs.contains(&(cx, cy)) {
                return Some((i, x as u64, y as u64, (r.formula)(pr, x, y)));
            }
        }
    }
    None
}

fn table_rows(table: TableId) -> Vec<Row> {
    match table {
        TableId::Dia1 => dia1_rows(),
        TableId::Dia2 => dia2_rows(),
        TableId::Dia3 => dia3_rows(),
    }
}

// In dia1/dia2 the `p` bit of a category is evenness (`Primes::p = 2`), so
// `U` is an odd unit, `P` an even non-multiple of q and r, `PQR` a multiple
// of 2qr, and so on.

fn dia1_rows() -> Vec<Row> {
    vec![
        row("v, v' units", &[(U, U)], |pr, _, _| one(vec![2 * pr.q * pr.r])),
        row("v, v' odd multiples of q", &[(Q, Q)], |pr, _, _| one(vec![2 * pr.r])),
        row("v, v' odd multiples of r", &[(R, R)], |pr, _, _| one(vec![2 * pr.q])),
        row("v, v' odd multiples of qr", &[(QR, QR)], |_, _, _| one(vec![2])),
        row("v odd multiple of q, v' odd multiple of r", &[(Q, R)], |pr, v, w| {
            let h = (v + w) / 2;
            one(vec![if h % 2 == 0 { h } else { h + pr.q * pr.r }])
        }),
        row("v odd multiple of q, v' odd multiple of qr", &[(Q, QR)], |pr, v, w| {
            let t = (v + w) / pr.q;
            one(vec![if t % pr.q != 0 { t } else { t + 2 * pr.r }])
        }),
        row("v odd multiple of r, v' odd multiple of qr", &[(R, QR)], |pr, v, w| {
            let t = (v + w) / pr.r;
            one(vec![if t % pr.r != 0 { t } else { t + 2 * pr.q }])
        }),
        row("v unit, v' odd multiple of q", &[(U, Q)], |pr, v, w| one(vec![(v + w) * pr.r])),
        row("v unit, v' odd multiple of r", &[(U, R)], |pr, v, w| one(vec![(v + w) * pr.q])),
        row("v unit, v' odd multiple of qr", &[(U, QR)], |_, v, w| one(vec![(v + w) * 2])),
        row("v, v' even multiples of r", &[(PR, PR)], |pr, _, _| one(vec![pr.q])),
        row("v, v' even multiples of q", &[(PQ, PQ)], |pr, _, _| one(vec![pr.r])),
        row("v, v' even, prime to q and r", &[(P, P)], |pr, _, _| one(vec![pr.q * pr.r])),
        row("v, v' multiples of 2qr", &[(PQR, PQR)], |pr, _, _| one(vec![2 * pr.q * pr.r - 1])),
        row("v even multiple of q, v' even multiple of r", &[(PQ, PR)], |pr, v, w| {
            let h = (v + w) / 2;
            one(vec![if h % 2 == 0 { h + pr.q * pr.r } else { h }])
        }),
        row("v multiple of 2qr, v' even prime to q and r", &[(PQR, P)], |pr, _, w| {
            let h = w / 2;
            one(vec![if is_unit(pr, h) { h } else { h + pr.q * pr.r }])
        }),
        row("v multiple of 2qr, v' even multiple of q", &[(PQR, PQ)], |pr, _, w| {
            let t = w / pr.q;
            one(vec![if t % pr.q != 0 { t + pr.q * pr.r } else { t + pr.r }])
        }),
        row("v multiple of 2qr, v' even multiple of r", &[(PQR, PR)], |pr, _, w| {
            let t = w / pr.r;
            one(vec![if t % pr.r != 0 { t + pr.q * pr.r } else { t + pr.q }])
        }),
    ]
}

fn dia2_rows() -> Vec<Row> {
    vec![
        row("v = 2kqr, v' unit (edge)", &[(PQR, U)], |_, _, _| one(vec![])),
        row("v multiple of 2qr, v' odd multiple of q", &[(PQR, Q)], |pr, _, w| {
            one(vec![1, (1 + w) * pr.r])
        }),
        row("v multiple of 2qr, v' odd multiple of r", &[(PQR, R)], |pr, _, w| {
            one(vec![1, (1 + w) * pr.q])
        }),
        row("v multiple of 2qr, v' odd multiple of qr", &[(PQR, QR)], |_, _, w| {
            one(vec![1, (1 + w) * 2])
        }),
        row("v = 2kr, v' unit", &[(PR, U)], |pr, _, w| one(vec![pr.q, (pr.q + w) * pr.r])),
        row("v multiple of 2r, v' odd multiple of r", &[(PR, R)], |pr, _, w| {
            let h = (pr.q + w) / 2;
            one(vec![pr.q, if h % 2 == 0 { h } else { h + pr.q * pr.r }])
        }),
        row("v multiple of 2r, v' odd multiple of q", &[(PR, Q)], |pr, _, _| {
            one(vec![pr.q, 2 * pr.r])
        }),
        row("v multiple of 2r, v' odd multiple of qr", &[(PR, QR)], |pr, _, w| {
            let t = (pr.q + w) / pr.q;
            one(vec![pr.q, if t % pr.q != 0 { t } else { t + 2 * pr.r }])
        }),
        row("v = 2kq, v' unit", &[(PQ, U)], |pr, _, w| one(vec![pr.r, (pr.r + w) * pr.q])),
        row("v multiple of 2q, v' odd multiple of q", &[(PQ, Q)], |pr, _, w| {
            let h = (pr.r + w) / 2;
            one(vec![pr.r, if h % 2 == 0 { h } else { h + pr.q * pr.r }])
        }),
        row("v multiple of 2q, v' odd multiple of r", &[(PQ, R)], |pr, _, _| {
            one(vec![pr.r, 2 * pr.q])
        }),
        row("v multiple of 2q, v' odd multiple of qr", &[(PQ, QR)], |pr, _, w| {
            let t = (pr.r + w) / pr.r;
            one(vec![pr.r, if t % pr.r != 0 { t } else { t + 2 * pr.q }])
        }),
        row("v = 2k, v' unit", &[(P, U)], |pr, _, w| {
            one(vec![pr.q * pr.r, (pr.q * pr.r + w) * 2])
        }),
        row("v multiple of 2, v' odd multiple of q", &[(P, Q)], |pr, _, w| {
            let t = (pr.q * pr.r + w) / pr.q;
            one(vec![pr.q * pr.r, if t % pr.q != 0 { t } else { t + 2 * pr.r }])
        }),
        row("v multiple of 2, v' odd multiple of r", &[(P, R)], |pr, _, w| {
            let t = (pr.q * pr.r + w) / pr.r;
            one(vec![pr.q * pr.r, if t % pr.r != 0 { t } else { t + 2 * pr.q }])
        }),
        row("v multiple of 2, v' odd multiple of qr", &[(P, QR)], |pr, _, _| {
            one(vec![pr.q * pr.r, 2])
        }),
    ]
}

fn same_parity(v: i128, w: i128) -> bool {
    v % 2 == w % 2
}

/// `(v + v') / 2` when `v - v'` is a unit, `2 (v + v')` otherwise.
fn half_or_double(pr: &Primes, v: i128, w: i128) -> Option<Vec<Vec<i128>>> {
    if is_unit(pr, v - w) {
        one(vec![half(pr, v + w)?])
    } else {
        one(vec![2 * (v + w)])
    }
}

/// `(v + v') / 2` for equal parity, `2 (v + v')` otherwise.
fn half_by_parity(pr: &Primes, v: i128, w: i128) -> Option<Vec<Vec<i128>>> {
    if same_parity(v, w) {
        one(vec![half(pr, v + w)?])
    } else {
        one(vec![2 * (v + w)])
    }
}

/// `t = v / d`; `t * k + a` if `t` is a unit, `t * k + b` if `d | t`.
fn quotient_rule(pr: &Primes, v: i128, d: i128, k: i128, a: i128, b: i128) -> Option<Vec<Vec<i128>>> {
    let t = v / d;
    if is_unit(pr, t) {
        one(vec![t * k + a])
    } else if t % d == 0 {
        one(vec![t * k + b])
    } else {
        None
    }
}

/// `t = v / d`; `t + a` unless `d | t`, then `t + b`.
fn plain_quotient(v: i128, d: i128, a: i128, b: i128) -> Option<Vec<Vec<i128>>> {
    let t = v / d;
    one(vec![if t % d != 0 { t + a } else { t + b }])
}

/// `(v + v') k` for equal parity, `v' k` otherwise.
fn scaled(v: i128, w: i128, k: i128) -> Option<Vec<Vec<i128>>> {
    one(vec![if same_parity(v, w) { (v + w) * k } else { w * k }])
}

/// `(v + v') / 2` if `v - v'` is a unit; otherwise `v - v'` for equal parity
/// and `v' k` for mixed parity.
fn pair_unit(pr: &Primes, v: i128, w: i128, k: i128) -> Option<Vec<Vec<i128>>> {
    if is_unit(pr, v - w) {
        one(vec![half(pr, v + w)?])
    } else if same_parity(v, w) {
        one(vec![v - w])
    } else {
        one(vec![w * k])
    }
}

/// `(v + v') / d` if a unit, plus `a` if the quotient is a multiple of `d`.
fn sum_quotient(pr: &Primes, v: i128, w: i128, d: i128, a: i128) -> Option<Vec<Vec<i128>>> {
    let t = (v + w) / d;
    if is_unit(pr, t) {
        one(vec![t])
    } else if t % d == 0 {
        one(vec![t + a])
    } else {
        None
    }
}

fn dia3_rows() -> Vec<Row> {
    vec![
        row("v, v' units", &[(U, U)], |pr, _, _| one(vec![pr.p * pr.q * pr.r])),
        row("v, v' multiples of pqr", &[(PQR, PQR)], |pr, _, _| one(vec![pr.p * pr.q * pr.r - 1])),
        row("v, v' multiples of pq", &[(PQ, PQ)], |pr, _, _| one(vec![pr.r])),
        row("v, v' multiples of pr", &[(PR, PR)], |pr, _, _| one(vec![pr.q])),
        row("v, v' multiples of qr", &[(QR, QR)], |pr, _, _| one(vec![pr.p])),
        row("v, v' multiples of p", &[(P, P)], |pr, _, _| one(vec![pr.q * pr.r])),
        row(
            "v, v' multiples of different single primes",
            &[(P, Q), (P, R), (Q, R)],
            half_or_double,
        ),
        row("v multiple of p, v' multiple of pq", &[(P, PQ)], |pr, v, _| {
            quotient_rule(pr, v, pr.p, pr.r, pr.p * pr.q * pr.r, pr.q * pr.r)
        }),
        row("v multiple of p, v' multiple of pr", &[(P, PR)], |pr, v, _| {
            quotient_rule(pr, v, pr.p, pr.q, pr.p * pr.q * pr.r, pr.q * pr.r)
        }),
        row("v multiple of p, v' multiple of qr", &[(P, QR)], half_by_parity),
        row("v multiple of p, v' multiple of pqr", &[(P, PQR)], |pr, v, _| {
            plain_quotient(v, pr.p, pr.p * pr.q * pr.r, pr.q * pr.r)
        }),
        row("v multiple of p, v' unit", &[(P, U)], |pr, v, w| scaled(v, w, pr.q * pr.r)),
        row("v, v' multiples of q", &[(Q, Q)], |pr, _, _| one(vec![pr.p * pr.r])),
        row("v multiple of q, v' multiple of pq", &[(Q, PQ)], |pr, v, _| {
            quotient_rule(pr, v, pr.q, pr.r, pr.p * pr.q * pr.r, pr.p * pr.r)
        }),
        row("v multiple of q, v' multiple of qr", &[(Q, QR)], |pr, v, _| {
            quotient_rule(pr, v, pr.q, pr.p, pr.p * pr.q * pr.r, pr.p * pr.r)
        }),
        row("v multiple of q, v' multiple of pr", &[(Q, PR)], half_by_parity),
        row("v multiple of q, v' multiple of pqr", &[(Q, PQR)], |pr, v, _| {
            plain_quotient(v, pr.q, pr.p * pr.q * pr.r, pr.p * pr.r)
        }),
        row("v multiple of q, v' unit", &[(Q, U)], |pr, v, w| scaled(v, w, pr.p * pr.r)),
        row("v, v' multiples of r", &[(R, R)], |pr, _, _| one(vec![pr.p * pr.q])),
        row("v multiple of r, v' multiple of pr", &[(R, PR)], |pr, v, _| {
            quotient_rule(pr, v, pr.r, pr.q, pr.p * pr.q * pr.r, pr.p * pr.q)
        }),
        row("v multiple of r, v' multiple of qr", &[(R, QR)], |pr, v, _| {
            quotient_rule(pr, v, pr.r, pr.p, pr.p * pr.q * pr.r, pr.p * pr.q)
        }),
        row("v multiple of r, v' multiple of pq", &[(R, PQ)], half_by_parity),
        row("v multiple of r, v' multiple of pqr", &[(R, PQR)], |pr, v, _| {
            plain_quotient(v, pr.r, pr.p * pr.q * pr.r, pr.p * pr.q)
        }),
        row("v multiple of r, v' unit", &[(R, U)], |pr, v, w| scaled(v, w, pr.p * pr.q)),
        row("v multiple of pq, v' multiple of pr", &[(PQ, PR)], |pr, v, w| {
            sum_quotient(pr, v, w, pr.p, pr.q * pr.r)
        }),
        row("v multiple of pq, v' multiple of qr", &[(PQ, QR)], |pr, v, w| {
            sum_quotient(pr, v, w, pr.q, pr.p * pr.r)
        }),
        row("v multiple of pr, v' multiple of qr", &[(PR, QR)], |pr, v, w| {
            sum_quotient(pr, v, w, pr.r, pr.p * pr.q)
        }),
        row("v = kpq, v' unit", &[(PQ, U)], |pr, v, w| pair_unit(pr, v, w, pr.r)),
        row("v = kpr, v' unit", &[(PR, U)], |pr, v, w| pair_unit(pr, v, w, pr.q)),
        row("v = kqr, v' unit", &[(QR, U)], |pr, v, w| pair_unit(pr, v, w, pr.p)),
        row(
            "v = kpqr, v' multiple of pq, pr or qr",
            &[(PQR, PQ), (PQR, PR), (PQR, QR)],
            |_, v, _| Some(vec![vec![v + 4], vec![v - 4]]),
        ),
        row("v multiple of pqr, v' unit", &[(PQR, U)], half_by_parity),
    ]
}
