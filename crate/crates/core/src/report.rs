use serde::{Deserialize, Serialize};

use crate::bounds::{classify_optimality, BestKnownTable, BoundsReport, Optimality};
use crate::code::{
    ab_criterion, DualDistance, Limits, LinearCode, MinimalityVerdict, WeightDistribution,
};
use crate::error::Result;

/// Everything `analyze` knows about a code. Fields that needed an enumeration
/// over its cap are `None` and named in `skipped`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d: Option<usize>,
    pub delta: Option<usize>,
    pub t: Option<usize>,
    pub weight_distribution: Option<WeightDistribution>,
    pub projective: bool,
    pub dual_distance: Option<DualDistance>,
    pub minimal_exact: Option<MinimalityVerdict>,
    pub ab_criterion: Option<bool>,
    pub bounds: Option<BoundsReport>,
    pub optimality: Optimality,
    pub skipped: Vec<String>,
}

fn keep<T>(skipped: &mut Vec<String>, what: &str, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => {
            skipped.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub fn analyze(code: &LinearCode, limits: &Limits, table: &BestKnownTable) -> Result<CodeReport> {
    let mut skipped = Vec::new();
    let wd = keep(
        &mut skipped,
        "weight distribution",
        code.weight_distribution(limits),
    )?;
    let dual_distance = keep(&mut skipped, "dual distance", code.dual_distance(limits))?;
    let minimal_exact = keep(
        &mut skipped,
        "exact minimality",
        code.is_minimal_exact(limits),
    )?;
    let (n, k, q) = (code.n(), code.k(), code.q());
    let d = wd.as_ref().and_then(WeightDistribution::min_distance);
    let delta = wd.as_ref().and_then(WeightDistribution::max_weight);
    let (ab, bounds, optimality) = match (d, delta) {
        (Some(d), Some(delta)) => (
            Some(ab_criterion(q, d, delta)),
            Some(BoundsReport::compute(q, n, k, d, delta)),
            classify_optimality(n, k, q, d, table),
        ),
        _ => (None, None, Optimality::Unknown),
    };
    Ok(CodeReport {
        label: code.label().to_string(),
        n,
        k,
        q,
        d,
        delta,
        t: wd.as_ref().map(WeightDistribution::num_weights),
        weight_distribution: wd,
        projective: code.is_projective(),
        dual_distance,
        minimal_exact,
        ab_criterion: ab,
        bounds,
        optimality,
        skipped,
    })
}
