use std::collections::BTreeMap;
use std::path::Path;

use anticode::catalog::{CatalogReport, Mode};
use anticode::{
    CodeFile, CodeReport, DualDistance, SwrgCertificate, WalkCounts, WeightDistribution,
};
use clap::ValueEnum;
use serde_json::json;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    out += &line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
    for row in rows {
        out += &line(row);
    }
    out
}

fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 records")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn params(q: u32, n: usize, k: usize, d: Option<usize>) -> String {
    match d {
        Some(d) => format!("[{n},{k},{d}]_{q}"),
        None => format!("[{n},{k}]_{q}"),
    }
}

fn spectrum_text(counts: &BTreeMap<usize, u64>, sep: &str, pair: &str) -> String {
    counts
        .iter()
        .filter(|(&w, _)| w > 0)
        .map(|(w, a)| format!("{w}{pair}{a}"))
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn code_summary(format: Format, file: &CodeFile, path: Option<&Path>) -> String {
    let wd = file.cached_distribution();
    let d = wd.as_ref().and_then(WeightDistribution::min_distance);
    let weights = wd.as_ref().map(|w| spectrum_text(&w.counts, " ", "^"));
    match format {
        Format::Json => pretty(&json!({
            "label": file.label,
            "q": file.field.q(),
            "n": file.n,
            "k": file.k,
            "d": d,
            "weight_distribution": file.weight_distribution,
            "path": path.map(|p| p.display().to_string()),
        })),
        Format::Csv => csv(
            &["label", "q", "n", "k", "d", "weights", "path"],
            &[vec![
                file.label.clone(),
                file.field.q().to_string(),
                file.n.to_string(),
                file.k.to_string(),
                opt(d),
                wd.as_ref()
                    .map_or(String::new(), |w| spectrum_text(&w.counts, ";", ":")),
                path.map_or(String::new(), |p| p.display().to_string()),
            ]],
        ),
        Format::Text => {
            let mut out = format!(
                "{}  {}\n",
                params(file.field.q(), file.n, file.k, d),
                file.label
            );
            match weights {
                Some(w) => out += &format!("weights: {w}\n"),
                None => out += "weights: not enumerated (over the enumeration cap)\n",
            }
            if let Some(p) = path {
                out += &format!("written to {}\n", p.display());
            }
            out
        }
    }
}

fn report_fields(r: &CodeReport) -> Vec<(&'static str, String)> {
    let b = r.bounds.as_ref();
    vec![
        ("label", r.label.clone()),
        ("q", r.q.to_string()),
        ("n", r.n.to_string()),
        ("k", r.k.to_string()),
        ("d", opt(r.d)),
        ("delta", opt(r.delta)),
        ("weights", opt(r.t)),
        (
            "distribution",
            r.weight_distribution
                .as_ref()
                .map_or("-".into(), |w| spectrum_text(&w.counts, " ", "^")),
        ),
        ("projective", r.projective.to_string()),
        (
            "dual_distance",
            opt(r.dual_distance.map(|d| match d {
                DualDistance::Exact(v) => v.to_string(),
                DualDistance::AtLeastThree => ">= 3".into(),
                DualDistance::Trivial => "none".into(),
            })),
        ),
        ("minimal", opt(r.minimal_exact.as_ref().map(|m| m.minimal))),
        ("ab_criterion", opt(r.ab_criterion)),
        ("griesmer_sum", opt(b.map(|b| b.griesmer_sum))),
        ("griesmer_defect", opt(b.map(|b| b.griesmer_defect))),
        ("antigriesmer_sum", opt(b.map(|b| b.antigriesmer_sum))),
        ("antigriesmer_defect", opt(b.map(|b| b.antigriesmer_defect))),
        ("antigriesmer_holds", opt(b.map(|b| b.antigriesmer_holds))),
        ("erdos_kleitman", opt(b.and_then(|b| b.ek_bound.clone()))),
        ("optimality", r.optimality.to_string()),
        ("skipped", r.skipped.join("; ")),
    ]
}

pub fn report(format: Format, r: &CodeReport) -> String {
    match format {
        Format::Json => pretty(r),
        Format::Csv => {
            let fields = report_fields(r);
            let headers: Vec<&str> = fields.iter().map(|(h, _)| *h).collect();
            let mut row: Vec<String> = fields.into_iter().map(|(_, v)| v).collect();
            if let Some(w) = &r.weight_distribution {
                row[7] = spectrum_text(&w.counts, ";", ":");
            }
            csv(&headers, &[row])
        }
        Format::Text => {
            let fields = report_fields(r);
            let width = fields.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (h, v) in fields
                .iter()
                .filter(|(h, v)| *h != "distribution" && !(*h == "skipped" && v.is_empty()))
            {
                out += &format!("{h:<width$}  {v}\n");
            }
            if let Some(w) = &r.weight_distribution {
                out += "\n";
                out += &distribution_table(w);
            }
            out
        }
    }
}

fn distribution_table(wd: &WeightDistribution) -> String {
    let rows: Vec<Vec<String>> = wd
        .counts
        .iter()
        .map(|(w, a)| vec![w.to_string(), a.to_string()])
        .collect();
    table(&["weight", "count"], &rows)
}

pub fn distribution(format: Format, wd: &WeightDistribution) -> String {
    match format {
        Format::Json => pretty(wd),
        Format::Csv => {
            let rows: Vec<Vec<String>> = wd
                .counts
                .iter()
                .map(|(w, a)| vec![w.to_string(), a.to_string()])
                .collect();
            csv(&["weight", "count"], &rows)
        }
        Format::Text => {
            format!(
                "{}\n\n{}",
                params(wd.q, wd.n, wd.k, wd.min_distance()),
                distribution_table(wd)
            )
        }
    }
}

fn walk_summary(w: &WalkCounts) -> (String, String, String, String) {
    match w {
        WalkCounts::Constant(p) => (
            "constant".into(),
            p.lambda.to_string(),
            opt(p.mu),
            p.nu.to_string(),
        ),
        WalkCounts::NotConstant { first, second } => (
            format!(
                "varies: ({},{})={} vs ({},{})={}",
                first.0, first.1, first.2, second.0, second.1, second.2
            ),
            "-".into(),
            "-".into(),
            "-".into(),
        ),
    }
}

pub fn certificate(format: Format, c: &SwrgCertificate) -> String {
    let (walks, lambda, mu, nu) = walk_summary(&c.walk_counts);
    let spectrum = c
        .spectrum
        .iter()
        .map(|(e, m)| format!("{e}^{m}"))
        .collect::<Vec<_>>()
        .join(" ");
    let verdict = serde_json::to_value(c.verdict).expect("verdict serializes");
    let verdict = verdict.as_str().unwrap_or_default().to_string();
    let fields = vec![
        ("l", c.l.to_string()),
        ("n", c.n.to_string()),
        ("k", c.k.to_string()),
        ("weights", c.weights.map(|w| w.to_string()).join(" ")),
        ("spectrum", spectrum),
        ("spectrum_verified", opt(c.spectrum_verified)),
        ("walks", walks),
        ("lambda", lambda),
        ("mu", mu),
        ("nu", nu),
        ("analytic_matches", opt(c.analytic_matches)),
        ("weight_sum", c.conditions.weight_sum.to_string()),
        ("middle_weight", c.conditions.middle_weight.to_string()),
        ("root_equation", opt(c.root_equation)),
        ("degree_identity", opt(c.degree_identity)),
        ("verdict", verdict),
    ];
    match format {
        Format::Json => pretty(c),
        Format::Csv => {
            let headers: Vec<&str> = fields.iter().map(|(h, _)| *h).collect();
            csv(&headers, &[fields.into_iter().map(|(_, v)| v).collect()])
        }
        Format::Text => {
            let width = fields.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
            fields
                .iter()
                .map(|(h, v)| format!("{h:<width$}  {v}\n"))
                .collect()
        }
    }
}

pub fn catalog(format: Format, report: &CatalogReport) -> String {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            let m = r.measured.as_ref();
            vec![
                r.id.clone(),
                r.tag.clone(),
                match r.mode {
                    Mode::ConstructAndEnumerate => "construct".into(),
                    Mode::TransformOnly => "transform".into(),
                },
                m.map_or("-".into(), |m| params(m.q, m.n, m.k, Some(m.d))),
                m.map_or("-".into(), |m| {
                    m.distribution
                        .counts
                        .keys()
                        .filter(|&&w| w > 0)
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                }),
                m.map_or("-".into(), |m| m.griesmer_defect.to_string()),
                m.map_or("-".into(), |m| m.optimality.to_string()),
                r.status.to_string(),
                r.mismatches.join("; "),
            ]
        })
        .collect();
    let headers = [
        "id",
        "tag",
        "mode",
        "code",
        "weights",
        "defect",
        "optimality",
        "status",
        "detail",
    ];
    let s = &report.summary;
    match format {
        Format::Json => pretty(report),
        Format::Csv => csv(&headers, &rows),
        Format::Text => {
            table(&headers, &rows)
                + &format!(
                    "\n{} rows: {} pass, {} fail, {} known discrepancy, {} error\n",
                    report.rows.len(),
                    s.pass,
                    s.fail,
                    s.known_discrepancy,
                    s.error
                )
        }
    }
}
