//! Catalogue of published values for `Cay(Z_p x Z_m, phi_p x phi_m)`.
//!
//! Instances are sorted into families by the shape of `m`; each family maps
//! to claimed values of gamma, gamma_t, gamma_c and the diameter, to the
//! explicit sets used in the corresponding arguments, and (for three prime
//! factors) to tables of common-neighbour formulas. Claims are recorded as
//! printed, including the ones the solver disagrees with; `run_verification`
//! puts claims and computations side by side.
//!
//! Provenance strings use the labels of the source tables and results
//! (`tab:01`, `thm p1`, `prop t2`, ...).

mod certificates;
mod report;
mod witness;

pub use certificates::{paper_certificates, CertClaim, Certificate, Scope};
pub use report::{
    run_verification, CertificateCheck, ClaimCheck, Computed, FieldReport, Instance,
    LambdaInfo, ParamField, RemarkCheck, Verdict, VerificationReport, SCHEMA_VERSION,
};
pub use witness::{
    verify_witness_table, witness_checks, PairCheck, RowTally, TableId, WitnessFailure,
    WitnessReport, FAILURE_CAP,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, Factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `m = p^a`.
    PrimePower,
    /// `m = p^a q^b`.
    TwoPrime,
    /// `m = p^a q^b r^c`.
    ThreePrime,
    /// `p = 2`, `m = 2^a 3^a1 5^a2 ... p_k^ak` with `a >= 2` and `k >= 3`.
    KPrimeRemark,
    Uncovered,
}

/// Where 3 sits among the primes of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeAt {
    /// `p = 3`.
    P,
    /// 3 divides `m` but `p != 3`.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTag {
    pub family: Family,
    pub p: u64,
    /// Primes of `m` other than `p`, increasing.
    pub others: Vec<u64>,
    pub p_is_two: bool,
    pub m_even: bool,
    pub all_exponents_one: bool,
    pub three_at: Option<ThreeAt>,
    /// `k` when the `4k + 4` lower bound applies.
    pub remark_k: Option<usize>,
}

impl CaseTag {
    pub fn has_three(&self) -> bool {
        self.three_at.is_some()
    }

    pub fn is_covered(&self) -> bool {
        self.family != Family::Uncovered
    }
}

pub fn classify_instance(p: u64, fact: &Factorization) -> CaseTag {
    let primes: Vec<u64> = fact.primes().collect();
    let others: Vec<u64> = primes.iter().copied().filter(|&x| x != p).collect();
    let p_divides = primes.contains(&p);
    let three_at = if p == 3 {
        Some(ThreeAt::P)
    } else if others.contains(&3) {
        Some(ThreeAt::Other)
    } else {
        None
    };
    let remark_k = remark_k(p, fact);
    let family = if !is_prime(p) || !p_divides {
        Family::Uncovered
    } else {
        match primes.len() {
            1 => Family::PrimePower,
            2 => Family::TwoPrime,
            3 => Family::ThreePrime,
            _ if remark_k.is_some() => Family::KPrimeRemark,
            _ => Family::Uncovered,
        }
    };
    CaseTag {
        family,
        p,
        others,
        p_is_two: p == 2,
        m_even: fact.modulus().is_multiple_of(2),
        all_exponents_one: fact.is_squarefree(),
        three_at,
        remark_k,
    }
}

/// `k` for `p = 2`, `m = 2^a p_1^a1 ... p_k^ak` with `a >= 2` and
/// `p_1 .. p_k` the consecutive primes from 3.
fn remark_k(p: u64, fact: &Factorization) -> Option<usize> {
    if p != 2 || fact.exponent_of(2) < 2 {
        return None;
    }
    let odd: Vec<u64> = fact.primes().filter(|&x| x != 2).collect();
    let mut expect = 3;
    for &x in &odd {
        if x != expect {
            return None;
        }
        expect = (expect + 2..).find(|&c| is_prime(c)).unwrap();
    }
    (!odd.is_empty()).then_some(odd.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
    /// Only a lower bound is stated.
    AtLeast { lo: usize },
    Nonexistent,
    Unstated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedValue {
    pub claim: Claim,
    pub provenance: String,
}

impl PredictedValue {
    fn exact(value: usize, provenance: &str) -> Self {
        PredictedValue { claim: Claim::Exact { value }, provenance: provenance.into() }
    }

    fn interval(lo: usize, hi: usize, provenance: &str) -> Self {
        PredictedValue { claim: Claim::Interval { lo, hi }, provenance: provenance.into() }
    }

    fn nonexistent(provenance: &str) -> Self {
        PredictedValue { claim: Claim::Nonexistent, provenance: provenance.into() }
    }

    fn unstated() -> Self {
        PredictedValue { claim: Claim::Unstated, provenance: String::new() }
    }

    /// `(lo, hi)` of the claim; `hi` is `None` when unbounded.
    pub fn range(&self) -> Option<(usize, Option<usize>)> {
        match self.claim {
            Claim::Exact { value } => Some((value, Some(value))),
            Claim::Interval { lo, hi } => Some((lo, Some(hi))),
            Claim::AtLeast { lo } => Some((lo, None)),
            Claim::Nonexistent | Claim::Unstated => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedParams {
    pub gamma: PredictedValue,
    pub gamma_t: PredictedValue,
    pub gamma_c: PredictedValue,
    pub diam: PredictedValue,
    pub certificates: Vec<Certificate>,
}

pub fn predicted_params(p: u64, fact: &Factorization) -> Result<PredictedParams> {
    let tag = classify_instance(p, fact);
    let (gamma, gamma_t, gamma_c, diam) = match tag.family {
        Family::PrimePower => prime_power(&tag, fact),
        Family::TwoPrime => two_prime(&tag, fact),
        Family::ThreePrime => three_prime(&tag),
        Family::KPrimeRemark => {
            let k = tag.remark_k.expect("family implies k");
            let lo = 4 * k + 4;
            let bound = |prov: &str| PredictedValue {
                claim: Claim::AtLeast { lo },
                provenance: prov.into(),
            };
            (
                bound("thm p4: gamma >= 4k+4"),
                bound("remark: gamma_t >= gamma >= 4k+4"),
                PredictedValue::nonexistent("remark: p = 2, disconnected"),
                PredictedValue::unstated(),
            )
        }
        Family::Uncovered => {
            return Err(Error::Uncovered(format!(
                "Z_{p} x Z_{} fits no family",
                fact.modulus()
            )))
        }
    };
    let certificates = paper_certificates(p, fact);
    Ok(PredictedParams { gamma, gamma_t, gamma_c, diam, certificates })
}

type Four = (PredictedValue, PredictedValue, PredictedValue, PredictedValue);

fn prime_power(tag: &CaseTag, fact: &Factorization) -> Four {
    use PredictedValue as P;
    let alpha = fact.exponent_of(tag.p);
    if tag.p_is_two {
        let (g, d) = if alpha == 1 {
            (P::exact(2, "thm p1 case 1"), P::exact(1, "thm d1 case 1"))
        } else {
            (P::exact(4, "thm p1 case 2"), P::exact(2, "thm d1 case 2"))
        };
        (g, P::exact(4, "thm gamma_t, gamma_c (m = p^a) case 1"), P::nonexistent("thm gamma_t, gamma_c (m = p^a) case 1"), d)
    } else {
        (
            P::exact(3, "thm p1 case 3"),
            P::exact(3, "thm gamma_t, gamma_c (m = p^a) case 2"),
            P::exact(3, "thm gamma_t, gamma_c (m = p^a) case 2"),
            P::exact(2, "thm d1 case 2"),
        )
    }
}

fn two_prime(tag: &CaseTag, fact: &Factorization) -> Four {
    use PredictedValue as P;
    let q = tag.others[0];
    let ones = fact.exponent_of(tag.p) == 1 && fact.exponent_of(q) == 1;
    let gamma = if ones {
        P::exact(4, "tab:01 row 1")
    } else if tag.p_is_two {
        P::exact(8, "tab:01 row 2")
    } else if q == 2 {
        P::exact(6, "tab:01 row 3")
    } else if tag.has_three() {
        P::exact(5, "tab:01 row 4")
    } else {
        P::exact(4, "tab:01 row 5")
    };
    let (gamma_t, gamma_c, diam) = if tag.p_is_two {
        (
            P::exact(8, "tab:2 row 1 (lem t1)"),
            P::nonexistent("tab:2 row 1 (lem t1)"),
            P::exact(3, "lem d2"),
        )
    } else if q == 2 {
        let c = if tag.p == 3 {
            P::exact(7, "tab:7 row 1 (p = 3)")
        } else {
            P::exact(6, "tab:7 row 2 (p >= 5)")
        };
        (P::exact(6, "tab:2 (prop t2)"), c, P::exact(3, "prop d3"))
    } else if tag.has_three() {
        (
            P::exact(5, "tab:1 row 1"),
            P::exact(5, "tab:1 row 1"),
            P::exact(2, "prop d4"),
        )
    } else {
        (
            P::exact(4, "tab:1 row 2"),
            P::exact(4, "tab:1 row 2"),
            P::exact(2, "prop d4"),
        )
    };
    (gamma, gamma_t, gamma_c, diam)
}

fn three_prime(tag: &CaseTag) -> Four {
    use PredictedValue as P;
    if tag.p_is_two {
        let gamma = if tag.all_exponents_one {
            P::exact(8, "tab:02 row 1")
        } else {
            P::exact(12, "tab:02 row 3")
        };
        return (
            gamma,
            P::exact(12, "tab:5 row 1 (lem t4)"),
            P::nonexistent("tab:5 row 1 (lem t4)"),
            P::exact(3, "lem tdia"),
        );
    }
    if tag.m_even {
        let gamma = if tag.all_exponents_one {
            P::exact(8, "tab:02 row 2")
        } else if tag.has_three() {
            P::exact(10, "tab:02 row 4")
        } else {
            P::exact(8, "tab:02 row 5")
        };
        let (t, c) = if tag.three_at == Some(ThreeAt::P) {
            (P::exact(10, "tab:3 row 1 (p = 3)"), P::exact(12, "tab:3 row 1 (p = 3)"))
        } else if tag.has_three() {
            (P::exact(10, "tab:3 row 2 (p >= 5)"), P::exact(10, "tab:3 row 2 (p >= 5)"))
        } else {
            (P::exact(8, "tab:3 row 3"), P::exact(8, "tab:3 row 3"))
        };
        return (gamma, t, c, P::exact(3, "prop d6"));
    }
    if tag.has_three() {
        (
            P::interval(6, 8, "tab:02 row 6"),
            P::interval(6, 8, "tab:4 row 1"),
            P::interval(6, 8, "tab:4 row 1"),
            P::exact(2, "prop d7"),
        )
    } else {
        (
            P::exact(5, "tab:02 row 7"),
            P::exact(5, "tab:4 row 2"),
            P::exact(5, "tab:4 row 2"),
            P::exact(2, "prop d7"),
        )
    }
}
