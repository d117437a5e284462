//! Griesmer-type bounds for codes and anticodes, and optimality lookups.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ_{i<k} ⌈d / q^i⌉`.
pub fn griesmer_sum(q: u32, k: usize, d: usize) -> u128 {
    let d = d as u128;
    let mut sum = 0;
    let mut power = Some(1u128);
    for _ in 0..k {
        sum += match power {
            Some(p) => d.div_ceil(p),
            None => u128::from(d > 0),
        };
        power = power.and_then(|p| p.checked_mul(q as u128));
    }
    sum
}

/// `Σ_{i<k} ⌊δ / q^i⌋`.
pub fn antigriesmer_sum(q: u32, k: usize, delta: usize) -> u128 {
    let delta = delta as u128;
    let mut sum = 0;
    let mut power = 1u128;
    for _ in 0..k {
        if power > delta {
            break;
        }
        sum += delta / power;
        power = match power.checked_mul(q as u128) {
            Some(p) => p,
            None => break,
        };
    }
    sum
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Griesmer {
    pub sum: u128,
    /// `n - sum`; negative values mean the parameters violate the bound.
    pub defect: i128,
}

pub fn griesmer(q: u32, k: usize, d: usize, n: usize) -> Griesmer {
    let sum = griesmer_sum(q, k, d);
    Griesmer {
        sum,
        defect: n as i128 - sum as i128,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntiGriesmer {
    pub sum: u128,
    /// `sum - n`.
    pub defect: i128,
    pub holds: bool,
    /// Whether `n < q^(k-1)`, under which projective codes must satisfy the bound.
    pub hypothesis: bool,
}

pub fn antigriesmer(q: u32, k: usize, delta: usize, n: usize) -> AntiGriesmer {
    let sum = antigriesmer_sum(q, k, delta);
    let hypothesis = k >= 1
        && (q as u128)
            .checked_pow(k as u32 - 1)
            .is_none_or(|p| (n as u128) < p);
    AntiGriesmer {
        sum,
        defect: sum as i128 - n as i128,
        holds: sum >= n as u128,
        hypothesis,
    }
}

/// `⌈(q - 1) n / q⌉`, the smallest diameter a projective code with `n < q^(k-1)` can have.
pub fn plotkin_anticode_floor(q: u32, n: usize) -> u128 {
    ((q as u128 - 1) * n as u128).div_ceil(q as u128)
}

/// Erdős–Kleitman bound `Σ_{i ≤ ⌊δ/2⌋} C(n, i)` on binary anticodes of diameter `δ`.
pub fn erdos_kleitman(n: usize, delta: usize) -> BigUint {
    let mut sum = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    for i in 0..=(delta / 2).min(n) {
        if i > 0 {
            binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
        }
        sum += &binom;
    }
    sum
}

/// Code–anticode bound `|C| |A| ≤ q^n`, valid when the anticode's diameter is below `d(C)`.
pub fn code_anticode_check(code_size: &BigUint, anticode_size: &BigUint, q: u32, n: usize) -> bool {
    code_size * anticode_size <= BigUint::from(q).pow(n as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub griesmer_sum: u128,
    pub griesmer_defect: i128,
    pub antigriesmer_sum: u128,
    pub antigriesmer_defect: i128,
    pub antigriesmer_holds: bool,
    pub antigriesmer_hypothesis: bool,
    pub plotkin_anticode_floor: u128,
    /// Erdős–Kleitman bound as a decimal string; binary codes only.
    pub ek_bound: Option<String>,
    /// `δ ≥ k`.
    pub diameter_at_least_dimension: bool,
}

impl BoundsReport {
    pub fn compute(q: u32, n: usize, k: usize, d: usize, delta: usize) -> BoundsReport {
        let g = griesmer(q, k, d, n);
        let a = antigriesmer(q, k, delta, n);
        BoundsReport {
            griesmer_sum: g.sum,
            griesmer_defect: g.defect,
            antigriesmer_sum: a.sum,
            antigriesmer_defect: a.defect,
            antigriesmer_holds: a.holds,
            antigriesmer_hypothesis: a.hypothesis,
            plotkin_anticode_floor: plotkin_anticode_floor(q, n),
            ek_bound: (q == 2).then(|| erdos_kleitman(n, delta).to_string()),
            diameter_at_least_dimension: delta >= k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimality {
    Optimal,
    AlmostOptimal,
    DistanceToBest(i64),
    Unknown,
}

impl std::fmt::Display for Optimality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Optimality::Optimal => write!(f, "optimal"),
            Optimality::AlmostOptimal => write!(f, "almost optimal"),
            Optimality::DistanceToBest(d) => write!(f, "{d} below best known"),
            Optimality::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestKnownEntry {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d_best: usize,
    pub source: String,
}

/// Best-known minimum distances keyed by `(q, n, k)`.
#[derive(Clone, Debug, Default)]
pub struct BestKnownTable {
    entries: HashMap<(u32, usize, usize), BestKnownEntry>,
}

const BUNDLED_BEST_KNOWN: &str = include_str!("../data/best_known.txt");

impl BestKnownTable {
    /// Parses whitespace-separated `q n k d_best source` records; `#` starts a comment.
    pub fn parse(text: &str) -> Result<BestKnownTable> {
        let mut entries = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(Error::Format(format!(
                    "best-known line {}: expected 5 fields, found {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            let num = |s: &str| {
                s.parse::<usize>().map_err(|_| {
                    Error::Format(format!("best-known line {}: bad integer {s:?}", lineno + 1))
                })
            };
            let e = BestKnownEntry {
                q: num(fields[0])? as u32,
                n: num(fields[1])?,
                k: num(fields[2])?,
                d_best: num(fields[3])?,
                source: fields[4].to_string(),
            };
            if let Some(prev) = entries.insert((e.q, e.n, e.k), e.clone()) {
                if prev.d_best != e.d_best {
                    return Err(Error::Format(format!(
                        "best-known line {}: conflicting entries for q={} n={} k={}",
                        lineno + 1,
                        e.q,
                        e.n,
                        e.k
                    )));
                }
            }
        }
        Ok(BestKnownTable { entries })
    }

    /// The table shipped with the crate.
    pub fn bundled() -> &'static BestKnownTable {
        static TABLE: OnceLock<BestKnownTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            BestKnownTable::parse(BUNDLED_BEST_KNOWN).expect("bundled table parses")
        })
    }

    pub fn lookup(&self, q: u32, n: usize, k: usize) -> Option<&BestKnownEntry> {
        self.entries.get(&(q, n, k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BestKnownEntry> {
        self.entries.values()
    }
}

pub fn classify_optimality(
    n: usize,
    k: usize,
    q: u32,
    d: usize,
    table: &BestKnownTable,
) -> Optimality {
    match table.lookup(q, n, k) {
        None => Optimality::Unknown,
        Some(e) if e.d_best == d => Optimality::Optimal,
        Some(e) if e.d_best == d + 1 => Optimality::AlmostOptimal,
        Some(e) => Optimality::DistanceToBest(e.d_best as i64 - d as i64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer(2, 6, 26, 56), Griesmer { sum: 53, defect: 3 });
        assert_eq!(griesmer(2, 5, 14, 29), Griesmer { sum: 28, defect: 1 });
        for q in [2, 3, 7, 256] {
            assert_eq!(griesmer_sum(q, 9, 1), 9);
        }
        assert_eq!(griesmer_sum(65536, 40, 5), 5 + 39);
    }

    #[test]
    fn antigriesmer_examples() {
        let a = antigriesmer(2, 6, 30, 56);
        assert_eq!(
            (a.sum, a.defect, a.holds, a.hypothesis),
            (56, 0, true, false)
        );
        let a = antigriesmer(2, 5, 18, 29);
        assert_eq!((a.sum, a.defect), (34, 5));
        for (q, k) in [(2u32, 4usize), (3, 3), (4, 3), (5, 2)] {
            let n = ((q as usize).pow(k as u32) - 1) / (q as usize - 1);
            let a = antigriesmer(q, k, (q as usize).pow(k as u32 - 1), n);
            assert_eq!(a.defect, 0);
        }
    }

    #[test]
    fn erdos_kleitman_examples() {
        assert_eq!(erdos_kleitman(4, 2), BigUint::from(5u32));
        assert_eq!(erdos_kleitman(9, 0), BigUint::from(1u32));
        assert_eq!(erdos_kleitman(5, 4), BigUint::from(16u32));
        assert_eq!(erdos_kleitman(5, 5), BigUint::from(16u32));
    }

    #[test]
    fn code_anticode_examples() {
        let b = |x: u32| BigUint::from(x);
        assert!(code_anticode_check(&b(16), &b(8), 2, 7));
        assert!(!code_anticode_check(&b(16), &b(9), 2, 7));
        assert!(code_anticode_check(&b(1), &b(1 << 20), 2, 20));
        assert!(code_anticode_check(&b(8), &b(8), 2, 7));
    }

    #[test]
    fn plotkin_floor() {
        assert_eq!(plotkin_anticode_floor(2, 7), 4);
        assert_eq!(plotkin_anticode_floor(3, 9), 6);
    }

    #[test]
    fn defect_duality_identity() {
        // ⌈(q^(k-1) - δ) / q^i⌉ = q^(k-1-i) - ⌊δ / q^i⌋ termwise.
        for q in [2u32, 3, 4, 5] {
            for k in 2..5usize {
                let top = (q as usize).pow(k as u32 - 1);
                let simplex_len = ((q as u128).pow(k as u32) - 1) / (q as u128 - 1);
                for delta in 1..top {
                    assert_eq!(
                        griesmer_sum(q, k, top - delta),
                        simplex_len - antigriesmer_sum(q, k, delta)
                    );
                }
            }
        }
    }

    #[test]
    fn table_parsing_and_classification() {
        let t =
            BestKnownTable::parse("# q n k d\n2 56 6 28 paper-cited\n2 19 5 8 x\n2 70 7 33 y\n")
                .unwrap();
        assert_eq!(
            classify_optimality(56, 6, 2, 26, &t),
            Optimality::DistanceToBest(2)
        );
        assert_eq!(classify_optimality(19, 5, 2, 8, &t), Optimality::Optimal);
        assert_eq!(
            classify_optimality(70, 7, 2, 32, &t),
            Optimality::AlmostOptimal
        );
        assert_eq!(classify_optimality(71, 7, 2, 32, &t), Optimality::Unknown);
        assert!(BestKnownTable::parse("2 56 6 28").is_err());
        assert!(BestKnownTable::parse("2 56 6 28 a\n2 56 6 27 b").is_err());
    }
}
