//! Coset graphs of binary projective codes and strong walk-regularity.
//!
//! The coset graph of the dual of an `[n, k]` binary projective code is
//! isomorphic to the Cayley graph on `F_2^k` whose connection set is the set
//! of generator columns, and that is the realization used here.

use serde::{Deserialize, Serialize};

use crate::code::{Limits, LinearCode, WeightDistribution};
use crate::error::{Error, Result};

/// Generic simple graph by adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); vertices];
        for &(a, b) in edges {
            if a >= vertices || b >= vertices || a == b {
                return Err(Error::InvalidParameter(format!("bad edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }
}

/// Cayley graph on `F_2^k` with the generator columns as connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetGraph {
    k: usize,
    connection: Vec<u32>,
    source: String,
}

impl CosetGraph {
    pub fn vertex_count(&self) -> usize {
        1 << self.k
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Connection vectors, coordinate 0 of each column in the most significant bit.
    pub fn connection_set(&self) -> &[u32] {
        &self.connection
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.connection.iter().map(move |&c| v ^ c as usize)
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.connection.contains(&((a ^ b) as u32))
    }

    pub fn to_graph(&self) -> Graph {
        let adj = (0..self.vertex_count())
            .map(|v| {
                let mut l: Vec<usize> = self.neighbors(v).collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph { adj }
    }

    /// `walks[u]` = number of length-`l` walks from vertex 0 to `u`.
    pub fn walks_from_origin(&self, l: usize) -> Vec<u128> {
        let mut cur = vec![0u128; self.vertex_count()];
        cur[0] = 1;
        for _ in 0..l {
            let mut next = vec![0u128; cur.len()];
            for (v, &w) in cur.iter().enumerate() {
                if w != 0 {
                    for u in self.neighbors(v) {
                        next[u] += w;
                    }
                }
            }
            cur = next;
        }
        cur
    }
}

pub fn coset_graph(code: &LinearCode, limits: &Limits) -> Result<CosetGraph> {
    if code.q() != 2 {
        return Err(Error::InvalidParameter(format!(
            "coset graphs need a binary code, got GF({})",
            code.q()
        )));
    }
    if !code.is_projective() {
        return Err(Error::NotProjective(format!(
            "{} has zero or repeated columns",
            code.label()
        )));
    }
    let k = code.k();
    if k > limits.graph_dimension as usize {
        return Err(Error::CapExceeded {
            what: "coset graph",
            size: 1u128 << k.min(127),
            cap: 1u128 << limits.graph_dimension.min(127),
        });
    }
    let connection = code
        .generator()
        .columns()
        .iter()
        .map(|c| c.iter().fold(0u32, |acc, &b| acc << 1 | b))
        .collect();
    Ok(CosetGraph {
        k,
        connection,
        source: code.label().to_string(),
    })
}

/// Eigenvalues `n - 2w` with multiplicity `A_w`, largest first.
pub fn spectrum_from_wd(wd: &WeightDistribution) -> Result<Vec<(i64, u64)>> {
    if wd.q != 2 {
        return Err(Error::InvalidParameter(
            "spectrum formula applies to binary codes".into(),
        ));
    }
    Ok(wd
        .counts
        .iter()
        .map(|(&w, &a)| (wd.n as i64 - 2 * w as i64, a))
        .collect())
}

/// Checks `A χ_a = θ_a χ_a` exactly for every character `χ_a(v) = (-1)^{a·v}`,
/// and that the eigenvalue multiset equals `expected`.
pub fn verify_spectrum(graph: &CosetGraph, expected: &[(i64, u64)]) -> bool {
    let size = graph.vertex_count();
    let sign = |a: usize, v: usize| {
        if (a & v).count_ones().is_multiple_of(2) {
            1i64
        } else {
            -1
        }
    };
    let mut found: std::collections::BTreeMap<i64, u64> = Default::default();
    for a in 0..size {
        let theta: i64 = graph.connection.iter().map(|&c| sign(a, c as usize)).sum();
        for v in 0..size {
            let av: i64 = graph.neighbors(v).map(|u| sign(a, u)).sum();
            if av != theta * sign(a, v) {
                return false;
            }
        }
        *found.entry(theta).or_insert(0) += 1;
    }
    let want: std::collections::BTreeMap<i64, u64> = expected.iter().copied().collect();
    found == want
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkParameters {
    pub lambda: u128,
    /// `None` when the graph has no two distinct non-adjacent vertices.
    pub mu: Option<u128>,
    pub nu: u128,
}

/// A vertex pair and its number of walks of the requested length.
pub type PairWalks = (usize, usize, u128);

/// Either the walk constants or two vertex pairs of one class with different counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkCounts {
    Constant(WalkParameters),
    NotConstant { first: PairWalks, second: PairWalks },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairClass {
    Identical,
    Adjacent,
    Distant,
}

#[derive(Default)]
struct ClassTally {
    seen: [Option<PairWalks>; 3],
    clash: Option<(PairWalks, PairWalks)>,
}

impl ClassTally {
    fn record(&mut self, class: PairClass, a: usize, b: usize, count: u128) {
        if self.clash.is_some() {
            return;
        }
        let slot = &mut self.seen[class as usize];
        match slot {
            None => *slot = Some((a, b, count)),
            Some(first) if first.2 != count => self.clash = Some((*first, (a, b, count))),
            _ => {}
        }
    }

    fn finish(self) -> WalkCounts {
        if let Some((first, second)) = self.clash {
            return WalkCounts::NotConstant { first, second };
        }
        let get = |c: PairClass| self.seen[c as usize].map(|s| s.2);
        WalkCounts::Constant(WalkParameters {
            lambda: get(PairClass::Adjacent).unwrap_or(0),
            mu: get(PairClass::Distant),
            nu: get(PairClass::Identical).unwrap_or(0),
        })
    }
}

fn check_walk_length(l: usize) -> Result<()> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "walk length must be odd and at least 3, got {l}"
        )));
    }
    Ok(())
}

/// Walk counts of a Cayley graph from row 0 of `A^l`; vertex transitivity
/// makes every other row a translate of it.
pub fn walk_counts(graph: &CosetGraph, l: usize) -> Result<WalkCounts> {
    check_walk_length(l)?;
    let walks = graph.walks_from_origin(l);
    let mut tally = ClassTally::default();
    for (u, &w) in walks.iter().enumerate() {
        let class = if u == 0 {
            PairClass::Identical
        } else if graph.is_adjacent(0, u) {
            PairClass::Adjacent
        } else {
            PairClass::Distant
        };
        tally.record(class, 0, u, w);
    }
    Ok(tally.finish())
}

/// Walk counts of an arbitrary graph from the full matrix power.
pub fn walk_counts_graph(graph: &Graph, l: usize) -> Result<WalkCounts> {
    check_walk_length(l)?;
    let size = graph.vertex_count();
    let cap = if l == 3 { 1 << 10 } else { 1 << 8 };
    if size > cap {
        return Err(Error::CapExceeded {
            what: "walk counting",
            size: size as u128,
            cap: cap as u128,
        });
    }
    let degrees = graph.degrees();
    if degrees.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::InvalidParameter(
            "walk regularity needs a regular graph".into(),
        ));
    }
    let mut tally = ClassTally::default();
    for start in 0..size {
        let mut cur = vec![0u128; size];
        cur[start] = 1;
        for _ in 0..l {
            let mut next = vec![0u128; size];
            for (v, &w) in cur.iter().enumerate() {
                if w != 0 {
                    for &u in graph.neighbors(v) {
                        next[u] += w;
                    }
                }
            }
            cur = next;
        }
        for (u, &w) in cur.iter().enumerate() {
            let class = if u == start {
                PairClass::Identical
            } else if graph.is_adjacent(start, u) {
                PairClass::Adjacent
            } else {
                PairClass::Distant
            };
            tally.record(class, start, u, w);
        }
    }
    Ok(tally.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SwrgVerdict {
    IsLSwrg,
    NotLSwrg,
    ConditionsUnmet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwrgConditions {
    /// `w1 + w2 + w3 = 3n/2`.
    pub weight_sum: bool,
    /// `w2 = n/2`.
    pub middle_weight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwrgCertificate {
    pub l: usize,
    pub n: usize,
    pub k: usize,
    pub weights: [usize; 3],
    pub spectrum: Vec<(i64, u64)>,
    /// `None` when the character check was skipped for size.
    pub spectrum_verified: Option<bool>,
    pub walk_counts: WalkCounts,
    /// Closed forms `μ3 = ν3 = 4 n w1 (n - w1) / 2^k`, `λ3 = μ3 + (n - 2 w1)^2`; `l = 3` only.
    pub analytic: Option<WalkParameters>,
    pub analytic_matches: Option<bool>,
    pub conditions: SwrgConditions,
    /// `θ^l + (μ - λ) θ + (μ - ν) = 0` for the three nontrivial eigenvalues.
    pub root_equation: Option<bool>,
    /// `n^l + (μ - λ) n + (μ - ν) = μ 2^k`.
    pub degree_identity: Option<bool>,
    pub verdict: SwrgVerdict,
}

const CHARACTER_CHECK_MAX_K: usize = 8;

pub fn verify_swrg(code: &LinearCode, l: usize, limits: &Limits) -> Result<SwrgCertificate> {
    check_walk_length(l)?;
    let graph = coset_graph(code, limits)?;
    let wd = code.weight_distribution(limits)?;
    let weights = wd.nonzero_weights();
    if weights.len() != 3 {
        return Err(Error::InvalidParameter(format!(
            "SWRG verification needs a three-weight code, found {} weights",
            weights.len()
        )));
    }
    let (n, k) = (code.n(), code.k());
    let w = [weights[0], weights[1], weights[2]];
    let conditions = SwrgConditions {
        weight_sum: 2 * (w[0] + w[1] + w[2]) == 3 * n,
        middle_weight: 2 * w[1] == n,
    };
    let spectrum = spectrum_from_wd(&wd)?;
    let spectrum_verified =
        (k <= CHARACTER_CHECK_MAX_K).then(|| verify_spectrum(&graph, &spectrum));

    let analytic = (l == 3)
        .then(|| {
            let num = 4 * n as u128 * w[0] as u128 * (n - w[0]) as u128;
            let den = 1u128 << k;
            num.is_multiple_of(den).then(|| {
                let mu = num / den;
                let gap = (n as i128 - 2 * w[0] as i128).unsigned_abs();
                WalkParameters {
                    lambda: mu + gap * gap,
                    mu: Some(mu),
                    nu: mu,
                }
            })
        })
        .flatten();

    let counts = walk_counts(&graph, l)?;
    let (root_equation, degree_identity) = match &counts {
        WalkCounts::Constant(p) => {
            let lam = p.lambda as i128;
            let mu = p.mu.unwrap_or(0) as i128;
            let nu = p.nu as i128;
            let poly = |x: i128| x.pow(l as u32) + (mu - lam) * x + (mu - nu);
            let roots = w.iter().all(|&wi| poly(n as i128 - 2 * wi as i128) == 0);
            let degree = poly(n as i128) == mu * (1i128 << k);
            (Some(roots), Some(degree))
        }
        WalkCounts::NotConstant { .. } => (None, None),
    };

    let analytic_matches = match (&counts, &analytic) {
        (WalkCounts::Constant(p), Some(a)) => Some(p == a),
        (WalkCounts::NotConstant { .. }, Some(_)) => Some(false),
        _ => None,
    };

    let required = if l == 3 {
        conditions.weight_sum
    } else {
        conditions.weight_sum && conditions.middle_weight
    };
    let verdict = match &counts {
        WalkCounts::Constant(_) => {
            if l == 3 && conditions.middle_weight && analytic_matches != Some(true) {
                SwrgVerdict::NotLSwrg
            } else {
                SwrgVerdict::IsLSwrg
            }
        }
        WalkCounts::NotConstant { .. } if !required => SwrgVerdict::ConditionsUnmet,
        WalkCounts::NotConstant { .. } => SwrgVerdict::NotLSwrg,
    };

    Ok(SwrgCertificate {
        l,
        n,
        k,
        weights: w,
        spectrum,
        spectrum_verified,
        walk_counts: counts,
        analytic,
        analytic_matches,
        conditions,
        root_equation,
        degree_identity,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::simplex;

    #[test]
    fn k4_from_simplex() {
        let s = simplex(2, 2).unwrap();
        let g = coset_graph(&s, &Limits::default()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        for v in 0..4 {
            assert_eq!(g.neighbors(v).count(), 3);
        }
        // (J - I)^3 = 7J - 6I on four vertices.
        let counts = walk_counts(&g, 3).unwrap();
        assert_eq!(
            counts,
            WalkCounts::Constant(WalkParameters {
                lambda: 7,
                mu: None,
                nu: 6
            })
        );
        let wd = s.weight_distribution(&Limits::default()).unwrap();
        let spec = spectrum_from_wd(&wd).unwrap();
        assert_eq!(spec, vec![(3, 1), (-1, 3)]);
        assert!(verify_spectrum(&g, &spec));
    }

    #[test]
    fn irregular_or_mixed_graphs() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(walk_counts_graph(&p, 3).is_err());
        let edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)];
        let g = Graph::from_edges(7, &edges).unwrap();
        assert!(matches!(
            walk_counts_graph(&g, 3).unwrap(),
            WalkCounts::NotConstant { .. }
        ));
    }

    #[test]
    fn generic_and_cayley_agree() {
        let s = simplex(2, 3).unwrap();
        let g = coset_graph(&s, &Limits::default()).unwrap();
        assert_eq!(
            walk_counts(&g, 5).unwrap(),
            walk_counts_graph(&g.to_graph(), 5).unwrap()
        );
    }

    #[test]
    fn rejects_even_walks_and_non_binary() {
        let s = simplex(2, 3).unwrap();
        let g = coset_graph(&s, &Limits::default()).unwrap();
        assert!(walk_counts(&g, 4).is_err());
        assert!(coset_graph(&simplex(3, 2).unwrap(), &Limits::default()).is_err());
        assert!(verify_swrg(&s, 3, &Limits::default()).is_err());
    }
}
