//! Side-by-side comparison of catalogued claims with computed values.

use serde::{Deserialize, Serialize};

use super::{
    classify_instance, paper_certificates, predicted_params, verify_witness_table, CaseTag,
    Claim, PredictedValue, Scope, TableId, WitnessReport,
};
use crate::domsolve::{dominates_within, solve, Budget, DomMode, DomResult, Outcome};
use crate::error::Result;
use crate::graph::build_graph;
use crate::numtheory::{consecutive_runs, factorize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub p: u64,
    pub m: u64,
    pub n: usize,
    pub degree: usize,
    pub components: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaInfo {
    pub cyclic: u64,
    pub linear: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamField {
    Gamma,
    GammaT,
    GammaC,
    Diam,
}

impl ParamField {
    pub const ALL: [ParamField; 4] =
        [ParamField::Gamma, ParamField::GammaT, ParamField::GammaC, ParamField::Diam];

    pub fn label(self) -> &'static str {
        match self {
            ParamField::Gamma => "gamma",
            ParamField::GammaT => "gamma_t",
            ParamField::GammaC => "gamma_c",
            ParamField::Diam => "diam",
        }
    }

    pub fn mode(self) -> Option<DomMode> {
        match self {
            ParamField::Gamma => Some(DomMode::Dominating),
            ParamField::GammaT => Some(DomMode::Total),
            ParamField::GammaC => Some(DomMode::Connected),
            ParamField::Diam => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Computed {
    Exact { value: usize },
    Interval { lower: usize, upper: usize },
    Nonexistent,
}

impl Computed {
    pub fn of(r: &DomResult) -> Self {
        match r.outcome {
            Outcome::Exact { value, .. } => Computed::Exact { value },
            Outcome::Interval { lower, upper, .. } => Computed::Interval { lower, upper },
            Outcome::Nonexistent => Computed::Nonexistent,
        }
    }

    fn bounds(self) -> Option<(usize, usize)> {
        match self {
            Computed::Exact { value } => Some((value, value)),
            Computed::Interval { lower, upper } => Some((lower, upper)),
            Computed::Nonexistent => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Exact claim equals the exact computation.
    Match,
    Mismatch,
    /// Computation lies inside a claimed range.
    Consistent,
    /// Budget ran out before the claim could be confirmed or refuted.
    Inconclusive,
    Unstated,
    Uncovered,
}

impl Verdict {
    /// Compare one claim with one computation.
    pub fn judge(claim: Claim, computed: Computed) -> Verdict {
        let (lo, hi) = match claim {
            Claim::Unstated => return Verdict::Unstated,
            Claim::Nonexistent => {
                return if computed == Computed::Nonexistent {
                    Verdict::Match
                } else {
                    Verdict::Mismatch
                };
            }
            Claim::Exact { value } => (value, Some(value)),
            Claim::Interval { lo, hi } => (lo, Some(hi)),
            Claim::AtLeast { lo } => (lo, None),
        };
        let Some((a, b)) = computed.bounds() else { return Verdict::Mismatch };
        let hi = hi.unwrap_or(usize::MAX);
        if b < lo || a > hi {
            Verdict::Mismatch
        } else if lo <= a && b <= hi {
            match claim {
                Claim::Exact { .. } if a == b => Verdict::Match,
                Claim::Exact { .. } => Verdict::Inconclusive,
                _ => Verdict::Consistent,
            }
        } else {
            Verdict::Inconclusive
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub field: ParamField,
    pub predicted: Option<PredictedValue>,
    pub computed: Computed,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub mode: DomMode,
    pub scope: Scope,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub name: String,
    pub provenance: String,
    pub size: usize,
    pub vertices: Vec<crate::graph::Vertex>,
    pub claims: Vec<ClaimCheck>,
}

impl CertificateCheck {
    pub fn holds(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkCheck {
    pub k: usize,
    pub bound: usize,
    pub gamma: Verdict,
    pub gamma_t: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub instance: Instance,
    pub tag: CaseTag,
    pub lambda: LambdaInfo,
    pub diameter_per_component: Vec<u32>,
    pub fields: Vec<FieldReport>,
    pub results: Vec<DomResult>,
    pub certificates: Vec<CertificateCheck>,
    pub witness_tables: Vec<WitnessReport>,
    pub remark: Option<RemarkCheck>,
}

impl VerificationReport {
    pub fn field(&self, f: ParamField) -> &FieldReport {
        self.fields.iter().find(|r| r.field == f).expect("all fields are reported")
    }

    pub fn result(&self, mode: DomMode) -> &DomResult {
        self.results.iter().find(|r| r.mode == mode).expect("all modes are solved")
    }

    fn verdicts(&self) -> impl Iterator<Item = Verdict> + '_ {
        let remark = self.remark.iter().flat_map(|r| [r.gamma, r.gamma_t]);
        self.fields.iter().map(|f| f.verdict).chain(remark)
    }

    pub fn has_mismatch(&self) -> bool {
        self.verdicts().any(|v| v == Verdict::Mismatch)
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdicts().any(|v| v == Verdict::Inconclusive)
    }

    /// 1 on any mismatch, else 2 on any inconclusive verdict, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.has_mismatch() {
            1
        } else if self.is_inconclusive() {
            2
        } else {
            0
        }
    }
}

/// Build, solve all three modes under `budget` each, and compare with the
/// catalogue. Uncovered instances get computed values only.
pub fn run_verification(p: u64, m: u64, budget: Budget) -> Result<VerificationReport> {
    let g = build_graph(p, m)?;
    let fact = factorize(m)?;
    let tag = classify_instance(p, &fact);
    let predicted = predicted_params(p, &fact).ok();
    let runs = consecutive_runs(m)?;
    let dia = g.diameter_report();

    let results: Vec<DomResult> = DomMode::ALL.iter().map(|&mode| solve(&g, mode, budget)).collect();

    let fields = ParamField::ALL
        .iter()
        .map(|&field| {
            let computed = match field.mode() {
                Some(mode) => Computed::of(&results[mode_index(mode)]),
                None => Computed::Exact { value: dia.diameter as usize },
            };
            let predicted = predicted.as_ref().map(|pp| match field {
                ParamField::Gamma => pp.gamma.clone(),
                ParamField::GammaT => pp.gamma_t.clone(),
                ParamField::GammaC => pp.gamma_c.clone(),
                ParamField::Diam => pp.diam.clone(),
            });
            let verdict = match &predicted {
                Some(pv) => Verdict::judge(pv.claim, computed),
                None => Verdict::Uncovered,
            };
            FieldReport { field, predicted, computed, verdict }
        })
        .collect();

    let certificates = paper_certificates(p, &fact)
        .into_iter()
        .map(|c| CertificateCheck {
            size: c.set.len(),
            vertices: c.set.vertices(),
            claims: c
                .claims
                .iter()
                .map(|cl| ClaimCheck {
                    mode: cl.mode,
                    scope: cl.scope,
                    holds: dominates_within(&g, &c.set, &cl.scope.mask(&g), cl.mode),
                })
                .collect(),
            name: c.name,
            provenance: c.provenance,
        })
        .collect();

    let witness_tables = TableId::ALL
        .iter()
        .filter(|t| t.applies(p, m))
        .map(|&t| verify_witness_table(&g, t))
        .collect::<Result<Vec<_>>>()?;

    let remark = tag.remark_k.map(|k| {
        let bound = 4 * k + 4;
        let claim = Claim::AtLeast { lo: bound };
        RemarkCheck {
            k,
            bound,
            gamma: Verdict::judge(claim, Computed::of(&results[0])),
            gamma_t: Verdict::judge(claim, Computed::of(&results[1])),
        }
    });

    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        instance: Instance {
            p,
            m,
            n: g.n(),
            degree: g.degree(),
            components: dia.per_component.len(),
        },
        tag,
        lambda: LambdaInfo { cyclic: runs.lambda, linear: runs.linear_lambda },
        diameter_per_component: dia.per_component,
        fields,
        results,
        certificates,
        witness_tables,
        remark,
    })
}

fn mode_index(mode: DomMode) -> usize {
    DomMode::ALL.iter().position(|&m| m == mode).expect("mode is listed")
}
