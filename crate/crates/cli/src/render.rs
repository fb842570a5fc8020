//! Plain-text and CSV renderings of reports.

use std::fmt::Write as _;
use std::path::Path;

use toticay::paperlab::{Claim, Computed, ParamField, Verdict, VerificationReport, WitnessReport};

pub fn claim(c: &Claim) -> String {
    match *c {
        Claim::Exact { value } => value.to_string(),
        Claim::Interval { lo, hi } => format!("[{lo}, {hi}]"),
        Claim::AtLeast { lo } => format!(">= {lo}"),
        Claim::Nonexistent => "does not exist".into(),
        Claim::Unstated => "-".into(),
    }
}

pub fn computed(c: &Computed) -> String {
    match *c {
        Computed::Exact { value } => value.to_string(),
        Computed::Interval { lower, upper } => format!("[{lower}, {upper}]"),
        Computed::Nonexistent => "does not exist".into(),
    }
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Match => "match",
        Verdict::Mismatch => "MISMATCH",
        Verdict::Consistent => "consistent",
        Verdict::Inconclusive => "inconclusive",
        Verdict::Unstated => "unstated",
        Verdict::Uncovered => "uncovered",
    }
}

pub fn params(r: &VerificationReport) -> String {
    let i = &r.instance;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Z_{} x Z_{}: n={} degree={} components={} lambda={} family={:?}",
        i.p, i.m, i.n, i.degree, i.components, r.lambda.cyclic, r.tag.family
    );
    let _ = writeln!(out, "{:<8} {:<16} {:<16} {:<13} source", "field", "computed", "predicted", "verdict");
    for f in &r.fields {
        let (pred, prov) = match &f.predicted {
            Some(p) => (claim(&p.claim), p.provenance.as_str()),
            None => ("-".into(), ""),
        };
        let _ = writeln!(
            out,
            "{:<8} {:<16} {:<16} {:<13} {}",
            f.field.label(),
            computed(&f.computed),
            pred,
            verdict(f.verdict),
            prov
        );
    }
    for c in &r.certificates {
        let modes: Vec<&str> = c.claims.iter().map(|x| x.mode.symbol()).collect();
        let _ = writeln!(
            out,
            "set {:<6} size {:<3} {:<10} {} ({})",
            c.name,
            c.size,
            modes.join("/"),
            if c.holds() { "holds" } else { "FAILS" },
            c.provenance
        );
    }
    if let Some(rm) = &r.remark {
        let _ = writeln!(
            out,
            "bound >= 4k+4 = {} (k={}): gamma {}, gamma_t {}",
            rm.bound,
            rm.k,
            verdict(rm.gamma),
            verdict(rm.gamma_t)
        );
    }
    for w in &r.witness_tables {
        let _ = writeln!(
            out,
            "table {}: {}/{} classified, {} failures",
            w.table, w.classified, w.eligible, w.failure_count
        );
    }
    out
}

pub fn summary_line(r: &VerificationReport) -> String {
    let mut s = format!("Z_{} x Z_{}:", r.instance.p, r.instance.m);
    for f in &r.fields {
        let _ = write!(s, " {}={} ({})", f.field.label(), computed(&f.computed), verdict(f.verdict));
    }
    s
}

pub fn witness(w: &WitnessReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "table {} on Z_{} x Z_{}: {} eligible pairs, {} classified ({:.1}%), {} unclassified",
        w.table,
        w.p,
        w.m,
        w.eligible,
        w.classified,
        100.0 * w.coverage(),
        w.unclassified
    );
    let _ = writeln!(out, "{:>4} {:>10} {:>7} {:>7}  row", "row", "classified", "valid", "invalid");
    for r in &w.rows {
        let _ = writeln!(out, "{:>4} {:>10} {:>7} {:>7}  {}", r.row, r.classified, r.valid, r.invalid, r.label);
    }
    if w.failure_count > 0 {
        let _ = writeln!(out, "{} failures; first {}:", w.failure_count, w.failures.len());
        for f in &w.failures {
            let path: Vec<String> = f.path.iter().map(|x| format!("({},{})", x.u, x.v)).collect();
            let path = if path.is_empty() { "no formula".to_string() } else { path.join(" ") };
            let _ = writeln!(out, "  row {}: ({},{}) ({},{}) via {}", f.row, f.a.u, f.a.v, f.b.u, f.b.v, path);
        }
    }
    if w.unclassified > 0 {
        let sample: Vec<String> = w
            .unclassified_pairs
            .iter()
            .take(8)
            .map(|(a, b)| format!("({},{})-({},{})", a.u, a.v, b.u, b.v))
            .collect();
        let _ = writeln!(out, "unclassified, e.g. {}", sample.join(" "));
    }
    out
}

pub fn write_csv(path: &Path, reports: &[VerificationReport]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record([
        "p", "m", "n", "k", "diam", "gamma", "gamma_t", "gamma_c", "v_gamma", "v_gamma_t", "v_gamma_c",
        "v_diam",
    ])?;
    for r in reports {
        let i = &r.instance;
        let field = |f| computed(&r.field(f).computed);
        let v = |f| verdict(r.field(f).verdict).to_string();
        w.write_record([
            i.p.to_string(),
            i.m.to_string(),
            i.n.to_string(),
            i.degree.to_string(),
            field(ParamField::Diam),
            field(ParamField::Gamma),
            field(ParamField::GammaT),
            field(ParamField::GammaC),
            v(ParamField::Gamma),
            v(ParamField::GammaT),
            v(ParamField::GammaC),
            v(ParamField::Diam),
        ])?;
    }
    w.flush()?;
    Ok(())
}
