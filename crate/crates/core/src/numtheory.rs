//! Modular arithmetic helpers: factorization, unit sets and runs of
//! consecutive non-units in `Z_m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization of a modulus `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    modulus: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, prime: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(p, _)| p == prime)
            .map_or(0, |&(_, e)| e)
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }
}

pub fn factorize(m: u64) -> Result<Factorization> {
    if m < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
    }
    let mut factors = Vec::new();
    let mut rest = m;
    let mut d = 2;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { modulus: m, factors })
}

/// The units of `Z_m`, i.e. the residues coprime to `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitSet {
    modulus: u64,
    members: Vec<u64>,
    #[serde(skip)]
    mask: Vec<bool>,
}

impl UnitSet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted unit residues in `[1, m)`.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership for any integer, reduced mod `m` first.
    pub fn contains(&self, x: i64) -> bool {
        let r = x.rem_euclid(self.modulus as i64) as usize;
        self.mask[r]
    }
}

pub fn unit_set(m: u64) -> Result<UnitSet> {
    if m < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
    }
    let mask: Vec<bool> = (0..m).map(|x| gcd(x, m) == 1).collect();
    let members = (0..m).filter(|&x| mask[x as usize]).collect();
    Ok(UnitSet { modulus: m, members, mask })
}

/// A maximal cyclic interval of residues that all share a factor with `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub start: u64,
    pub len: u64,
}

impl Run {
    /// Residues of the run in order, wrapping past `m - 1`.
    pub fn elements(&self, m: u64) -> impl Iterator<Item = u64> {
        let start = self.start;
        (0..self.len).map(move |i| (start + i) % m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsecutiveRuns {
    pub modulus: u64,
    /// Runs ordered by start residue.
    pub runs: Vec<Run>,
    /// Longest run, counted cyclically.
    pub lambda: u64,
    /// Longest run when `Z_m` is read as the integers `0..m` without wrap.
    pub linear_lambda: u64,
}

impl ConsecutiveRuns {
    pub fn runs_of_len(&self, len: u64) -> impl Iterator<Item = &Run> {
        self.runs.iter().filter(move |r| r.len == len)
    }
}

pub fn consecutive_runs(m: u64) -> Result<ConsecutiveRuns> {
    let units = unit_set(m)?;
    let nonunit = |x: u64| !units.mask[(x % m) as usize];

    // 0 is never a unit, so a unit exists (1) and the cycle can be cut at it.
    let mut runs = Vec::new();
    let mut x = 1;
    while x <= m {
        if nonunit(x) {
            let start = x;
            while nonunit(x) {
                x += 1;
            }
            runs.push(Run { start: start % m, len: x - start });
        }
        x += 1;
    }
    runs.sort_by_key(|r| r.start);
    let lambda = runs.iter().map(|r| r.len).max().unwrap_or(0);

    let mut linear_lambda = 0;
    let mut cur = 0;
    for x in 0..m {
        if nonunit(x) {
            cur += 1;
            linear_lambda = linear_lambda.max(cur);
        } else {
            cur = 0;
        }
    }

    Ok(ConsecutiveRuns { modulus: m, runs, lambda, linear_lambda })
}
