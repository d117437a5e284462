use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::GfMatrix;

/// Enumeration caps, counted in codewords (or graph vertices for walk counts).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `q^k` for which full weight enumeration is attempted.
    pub enumeration: u128,
    /// Largest `q^k` for the exact minimality test.
    pub minimality: u128,
    /// Largest dimension accepted when building a coset graph.
    pub graph_dimension: u32,
}

pub const ENV_ENUMERATION_CAP: &str = "ANTICODE_ENUM_CAP";
pub const ENV_MINIMALITY_CAP: &str = "ANTICODE_MINIMAL_CAP";
pub const ENV_GRAPH_DIMENSION_CAP: &str = "ANTICODE_GRAPH_K_CAP";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 1 << 24,
            minimality: 1 << 20,
            graph_dimension: 12,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `ANTICODE_ENUM_CAP`, `ANTICODE_MINIMAL_CAP`
    /// and `ANTICODE_GRAPH_K_CAP` when those parse as integers.
    pub fn from_env() -> Limits {
        let mut l = Limits::default();
        let read = |key: &str| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse::<u128>().ok())
        };
        if let Some(v) = read(ENV_ENUMERATION_CAP) {
            l.enumeration = v;
        }
        if let Some(v) = read(ENV_MINIMALITY_CAP) {
            l.minimality = v;
        }
        if let Some(v) = read(ENV_GRAPH_DIMENSION_CAP) {
            l.graph_dimension = v.min(u32::MAX as u128) as u32;
        }
        l
    }
}

/// `q^k`, saturating at `u128::MAX`.
pub fn codeword_count(q: u32, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// Exact weight distribution: `counts[w] = A_w` for every `w` with `A_w > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    /// Builds a distribution from nonzero weight counts; `A_0 = 1` is added.
    pub fn from_nonzero(q: u32, n: usize, k: usize, pairs: &[(usize, u64)]) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        counts.insert(0, 1);
        for &(w, a) in pairs {
            if a > 0 {
                *counts.entry(w).or_insert(0) += a;
            }
        }
        WeightDistribution { q, n, k, counts }
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.counts.keys().copied().rfind(|&w| w > 0)
    }

    /// Number of distinct nonzero weights.
    pub fn num_weights(&self) -> usize {
        self.counts.keys().filter(|&&w| w > 0).count()
    }

    /// Checks the structural invariants: total `q^k`, `A_0 = 1`, weights at
    /// most `n`, and nonzero counts divisible by `q - 1`.
    pub fn validate(&self) -> Result<()> {
        if self.total() != codeword_count(self.q, self.k) {
            return Err(Error::InvalidParameter(format!(
                "distribution totals {} but q^k = {}",
                self.total(),
                codeword_count(self.q, self.k)
            )));
        }
        if self.count(0) != 1 {
            return Err(Error::InvalidParameter("A_0 must be 1".into()));
        }
        if let Some(&w) = self.counts.keys().last() {
            if w > self.n {
                return Err(Error::InvalidParameter(format!(
                    "weight {w} exceeds length {}",
                    self.n
                )));
            }
        }
        let step = (self.q - 1) as u64;
        if let Some((w, a)) = self.counts.iter().find(|(&w, &a)| w > 0 && a % step != 0) {
            return Err(Error::InvalidParameter(format!(
                "A_{w} = {a} is not divisible by q - 1 = {step}"
            )));
        }
        Ok(())
    }

    /// The first two power moments every projective code satisfies:
    /// `Σ w A_w = n (q-1) q^(k-1)` and `Σ w² A_w = (q-1) q^(k-2) n ((q-1) n + 1)`.
    pub fn projective_moments_hold(&self) -> bool {
        if self.k < 2 {
            return false;
        }
        let (q, n) = (self.q as u128, self.n as u128);
        let (mut m1, mut m2) = (0u128, 0u128);
        for (&w, &a) in &self.counts {
            let (w, a) = (w as u128, a as u128);
            m1 += w * a;
            m2 += w * w * a;
        }
        let qk2 = codeword_count(self.q, self.k - 2);
        m1 == n * (q - 1) * q * qk2 && m2 == (q - 1) * qk2 * n * ((q - 1) * n + 1)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(w, a)| format!("{w}:{a}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A linear code given by a full-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: GfMatrix,
    label: String,
}

/// Minimality verdict with a witness `(smaller, larger)` when the code is not minimal:
/// `supp(smaller) ⊆ supp(larger)` while the two are not proportional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub witness: Option<(Vec<Elem>, Vec<Elem>)>,
}

/// Dual minimum distance, exact when the dual is enumerable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualDistance {
    Exact(usize),
    /// The dual was too large to enumerate but the column test shows `d⊥ ≥ 3`.
    AtLeastThree,
    /// `k = n`: the dual is the zero code.
    Trivial,
}

impl DualDistance {
    pub fn at_least_three(self) -> bool {
        match self {
            DualDistance::Exact(d) => d >= 3,
            DualDistance::AtLeastThree | DualDistance::Trivial => true,
        }
    }
}

impl LinearCode {
    /// Validates that the generator has full row rank.
    pub fn from_generator(generator: GfMatrix, label: impl Into<String>) -> Result<LinearCode> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::EmptyCode);
        }
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode {
            generator,
            label: label.into(),
        })
    }

    pub fn from_rows(
        field: &Field,
        rows: &[Vec<Elem>],
        label: impl Into<String>,
    ) -> Result<LinearCode> {
        LinearCode::from_generator(GfMatrix::from_rows(field, rows)?, label)
    }

    /// Code spanned by the given columns; the generator keeps a row basis of
    /// the column matrix, so the dimension is its rank.
    pub fn from_columns(
        field: &Field,
        rows: usize,
        columns: &[Vec<Elem>],
        label: impl Into<String>,
    ) -> Result<LinearCode> {
        let m = GfMatrix::from_columns(field, rows, columns)?;
        let rank = m.rank();
        let g = if rank == rows {
            m
        } else {
            let (red, _) = m.rref();
            GfMatrix::from_rows(field, &red.to_rows()[..rank])?
        };
        LinearCode::from_generator(g, label)
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.generator
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> LinearCode {
        self.label = label.into();
        self
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    pub fn size(&self) -> u128 {
        codeword_count(self.q(), self.k())
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.vec_mul(message)
    }

    /// The `index`-th message in base-q order, least significant digit last.
    pub fn message(&self, mut index: u128) -> Vec<Elem> {
        let q = self.q() as u128;
        let mut m = vec![0; self.k()];
        for d in m.iter_mut().rev() {
            *d = (index % q) as Elem;
            index /= q;
        }
        m
    }

    fn check_cap(&self, what: &'static str, cap: u128) -> Result<()> {
        let size = self.size();
        if size > cap {
            return Err(Error::CapExceeded { what, size, cap });
        }
        Ok(())
    }

    /// Exact weight distribution by enumerating all `q^k` messages.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<WeightDistribution> {
        self.check_cap("weight enumeration", limits.enumeration)?;
        let hist = if self.q() == 2 {
            self.binary_histogram()
        } else {
            self.qary_histogram()
        };
        Ok(self.distribution_from_histogram(&hist))
    }

    /// Weight distribution from one message per scalar class, scaled by `q - 1`.
    pub fn weight_distribution_by_classes(&self, limits: &Limits) -> Result<WeightDistribution> {
        self.check_cap("weight enumeration", limits.enumeration)?;
        let classes = self.class_representatives();
        let hist = classes
            .par_iter()
            .fold(
                || vec![0u64; self.n() + 1],
                |mut h, m| {
                    let c = self.encode(m).expect("message length equals k");
                    h[c.iter().filter(|&&x| x != 0).count()] += 1;
                    h
                },
            )
            .reduce(|| vec![0u64; self.n() + 1], merge_hist);
        let scale = (self.q() - 1) as u64;
        let mut scaled: Vec<u64> = hist.iter().map(|&a| a * scale).collect();
        scaled[0] = 1;
        Ok(self.distribution_from_histogram(&scaled))
    }

    fn distribution_from_histogram(&self, hist: &[u64]) -> WeightDistribution {
        let counts = hist
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(w, &a)| (w, a))
            .collect();
        WeightDistribution {
            q: self.q(),
            n: self.n(),
            k: self.k(),
            counts,
        }
    }

    fn binary_histogram(&self) -> Vec<u64> {
        let n = self.n();
        let k = self.k();
        let words = n.div_ceil(64);
        let packed: Vec<Vec<u64>> = (0..k)
            .map(|r| {
                let mut w = vec![0u64; words];
                for (c, &x) in self.generator.row(r).iter().enumerate() {
                    if x != 0 {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        // Row `k-1-j` is toggled by bit j of the Gray code index.
        let row_for_bit = |j: u32| &packed[k - 1 - j as usize];
        let total: u64 = 1 << k;
        let chunk_bits = k.min(16);
        let chunk: u64 = 1 << chunk_bits;
        (0..total / chunk)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut hist, ci| {
                    let start = ci * chunk;
                    let gray = start ^ (start >> 1);
                    let mut word = vec![0u64; words];
                    for j in 0..k as u32 {
                        if gray >> j & 1 == 1 {
                            for (a, b) in word.iter_mut().zip(row_for_bit(j)) {
                                *a ^= b;
                            }
                        }
                    }
                    hist[popcount(&word)] += 1;
                    for i in start + 1..start + chunk {
                        let j = i.trailing_zeros();
                        for (a, b) in word.iter_mut().zip(row_for_bit(j)) {
                            *a ^= b;
                        }
                        hist[popcount(&word)] += 1;
                    }
                    hist
                },
            )
            .reduce(|| vec![0u64; n + 1], merge_hist)
    }

    /// Modular base-q Gray code: each step adds 1 (mod q) to a single digit,
    /// where digit values index the field elements by their integer codes.
    fn qary_histogram(&self) -> Vec<u64> {
        let f = self.field().clone();
        let q = self.q() as u64;
        let n = self.n();
        let k = self.k();
        let total = q.pow(k as u32);
        let mut chunk_digits = 0;
        while chunk_digits < k && q.pow(chunk_digits as u32 + 1) <= 1 << 14 {
            chunk_digits += 1;
        }
        let chunk = q.pow(chunk_digits as u32);
        let steps: Vec<Elem> = (0..q as Elem)
            .map(|t| f.sub((t + 1) % q as Elem, t))
            .collect();
        (0..total / chunk)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut hist, ci| {
                    let start = ci * chunk;
                    let digits = base_q_digits(start, q, k);
                    let mut gray: Vec<u64> = (0..k)
                        .map(|j| (digits[j] + q - digits.get(j + 1).copied().unwrap_or(0)) % q)
                        .collect();
                    let msg: Vec<Elem> = gray.iter().rev().map(|&d| d as Elem).collect();
                    let mut word = self.encode(&msg).expect("message length equals k");
                    hist[word.iter().filter(|&&x| x != 0).count()] += 1;
                    for i in start + 1..start + chunk {
                        let mut j = 0;
                        let mut t = i;
                        while t % q == 0 {
                            t /= q;
                            j += 1;
                        }
                        let old = gray[j] as Elem;
                        gray[j] = (gray[j] + 1) % q;
                        let delta = steps[old as usize];
                        let row = self.generator.row(k - 1 - j);
                        for (a, &g) in word.iter_mut().zip(row) {
                            if g != 0 {
                                *a = f.add(*a, f.mul(delta, g));
                            }
                        }
                        hist[word.iter().filter(|&&x| x != 0).count()] += 1;
                    }
                    hist
                },
            )
            .reduce(|| vec![0u64; n + 1], merge_hist)
    }

    /// One message per scalar class: those whose first nonzero digit is 1.
    pub fn class_representatives(&self) -> Vec<Vec<Elem>> {
        let q = self.q() as u64;
        let k = self.k();
        let mut out = Vec::new();
        for lead in 0..k {
            let tail = k - lead - 1;
            for t in 0..q.pow(tail as u32) {
                let mut m = vec![0; k];
                m[lead] = 1;
                let digits = base_q_digits(t, q, tail);
                for (i, &d) in digits.iter().enumerate() {
                    m[k - 1 - i] = d as Elem;
                }
                out.push(m);
            }
        }
        out
    }

    pub fn min_distance(&self, limits: &Limits) -> Result<usize> {
        Ok(self
            .weight_distribution(limits)?
            .min_distance()
            .expect("k >= 1"))
    }

    pub fn max_weight(&self, limits: &Limits) -> Result<usize> {
        Ok(self
            .weight_distribution(limits)?
            .max_weight()
            .expect("k >= 1"))
    }

    /// The dual code, generated by a basis of the generator's kernel.
    pub fn dual_code(&self) -> Result<LinearCode> {
        let kernel = self.generator.kernel();
        LinearCode::from_generator(kernel, format!("dual of {}", self.label))
    }

    /// Dual minimum distance. Zero or proportional columns decide it directly;
    /// otherwise the dual is enumerated when it fits under the cap, and the
    /// answer degrades to `AtLeastThree` when it does not.
    pub fn dual_distance(&self, limits: &Limits) -> Result<DualDistance> {
        if self.k() == self.n() {
            return Ok(DualDistance::Trivial);
        }
        match self.column_defect() {
            Some(ColumnDefect::Zero(_)) => return Ok(DualDistance::Exact(1)),
            Some(ColumnDefect::Proportional(..)) => return Ok(DualDistance::Exact(2)),
            None => {}
        }
        let dual_size = codeword_count(self.q(), self.n() - self.k());
        if dual_size > limits.enumeration {
            return Ok(DualDistance::AtLeastThree);
        }
        Ok(DualDistance::Exact(self.dual_code()?.min_distance(limits)?))
    }

    /// Exact dual distance through enumeration only, failing over the cap.
    pub fn dual_distance_enumerated(&self, limits: &Limits) -> Result<usize> {
        self.dual_code()?.min_distance(limits)
    }

    pub fn column_defect(&self) -> Option<ColumnDefect> {
        let mut seen: BTreeMap<Vec<Elem>, usize> = BTreeMap::new();
        for c in 0..self.n() {
            let col = self.generator.column(c);
            match canonical_point(self.field(), &col) {
                None => return Some(ColumnDefect::Zero(c)),
                Some(p) => {
                    if let Some(&prev) = seen.get(&p) {
                        return Some(ColumnDefect::Proportional(prev, c));
                    }
                    seen.insert(p, c);
                }
            }
        }
        None
    }

    /// No zero column and no two proportional columns.
    pub fn is_projective(&self) -> bool {
        self.column_defect().is_none()
    }

    /// Exact minimality by pairwise support containment over scalar classes.
    pub fn is_minimal_exact(&self, limits: &Limits) -> Result<MinimalityVerdict> {
        self.check_cap("minimality check", limits.minimality)?;
        let n = self.n();
        let words = n.div_ceil(64);
        let mut reps: Vec<(usize, Vec<u64>, Vec<Elem>)> = self
            .class_representatives()
            .into_par_iter()
            .map(|m| {
                let c = self.encode(&m).expect("message length equals k");
                let mut s = vec![0u64; words];
                for (i, &x) in c.iter().enumerate() {
                    if x != 0 {
                        s[i / 64] |= 1 << (i % 64);
                    }
                }
                (popcount(&s), s, c)
            })
            .collect();
        reps.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        // Equal supports from different classes already break minimality.
        for pair in reps.windows(2) {
            if pair[0].1 == pair[1].1 {
                return Ok(MinimalityVerdict {
                    minimal: false,
                    witness: Some((pair[0].2.clone(), pair[1].2.clone())),
                });
            }
        }
        let found = (0..reps.len()).into_par_iter().find_map_first(|i| {
            let (wi, si, _) = &reps[i];
            reps[..i]
                .iter()
                .take_while(|(w, _, _)| w < wi)
                .find(|(_, s, _)| s.iter().zip(si).all(|(a, b)| a & !b == 0))
                .map(|(_, _, small)| (small.clone(), reps[i].2.clone()))
        });
        Ok(MinimalityVerdict {
            minimal: found.is_none(),
            witness: found,
        })
    }

    /// Ashikhmin–Barg sufficient condition `q d > (q - 1) δ`.
    pub fn ab_criterion(&self, limits: &Limits) -> Result<bool> {
        let wd = self.weight_distribution(limits)?;
        Ok(ab_criterion(
            self.q(),
            wd.min_distance().unwrap(),
            wd.max_weight().unwrap(),
        ))
    }
}

pub fn ab_criterion(q: u32, d: usize, delta: usize) -> bool {
    q as u128 * d as u128 > (q as u128 - 1) * delta as u128
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnDefect {
    Zero(usize),
    Proportional(usize, usize),
}

/// Scales a nonzero vector so that its first nonzero coordinate is 1.
pub fn canonical_point(field: &Field, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = field.inv(lead).expect("lead is nonzero");
    Some(v.iter().map(|&x| field.mul(x, inv)).collect())
}

fn base_q_digits(mut x: u64, q: u64, len: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(len);
    for _ in 0..len {
        d.push(x % q);
        x /= q;
    }
    d
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn merge_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex23() -> LinearCode {
        let f = Field::new(2, 1).unwrap();
        let cols: Vec<Vec<Elem>> = (1u32..8)
            .map(|v| vec![v >> 2 & 1, v >> 1 & 1, v & 1])
            .collect();
        LinearCode::from_columns(&f, 3, &cols, "simplex").unwrap()
    }

    #[test]
    fn rank_deficient_generator() {
        let f = Field::new(2, 1).unwrap();
        let err = LinearCode::from_rows(&f, &[vec![1, 0, 1], vec![0, 1, 1], vec![1, 0, 1]], "x")
            .unwrap_err();
        assert!(matches!(err, Error::RankDeficient { rank: 2, rows: 3 }));
    }

    #[test]
    fn ternary_four_two() {
        let f = Field::new(3, 1).unwrap();
        let c = LinearCode::from_rows(&f, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]], "t").unwrap();
        assert_eq!((c.n(), c.k()), (4, 2));
        let wd = c.weight_distribution(&Limits::default()).unwrap();
        assert_eq!(
            wd,
            c.weight_distribution_by_classes(&Limits::default())
                .unwrap()
        );
        wd.validate().unwrap();
    }

    #[test]
    fn simplex_basics() {
        let c = simplex23();
        let l = Limits::default();
        let wd = c.weight_distribution(&l).unwrap();
        assert_eq!(wd.counts, BTreeMap::from([(0, 1), (4, 7)]));
        assert!(c.is_projective());
        assert_eq!(c.dual_distance(&l).unwrap(), DualDistance::Exact(3));
        assert!(c.is_minimal_exact(&l).unwrap().minimal);
        assert!(c.ab_criterion(&l).unwrap());
    }

    #[test]
    fn self_dual_length_four() {
        let f = Field::new(2, 1).unwrap();
        let c = LinearCode::from_rows(&f, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]], "sd").unwrap();
        let d = c.dual_code().unwrap();
        let l = Limits::default();
        assert_eq!(
            c.weight_distribution(&l).unwrap(),
            d.weight_distribution(&l).unwrap()
        );
        assert_eq!(c.dual_distance(&l).unwrap(), DualDistance::Exact(2));
        assert!(!c.is_projective());
    }

    #[test]
    fn not_minimal_witness() {
        let f = Field::new(2, 1).unwrap();
        let c = LinearCode::from_rows(&f, &[vec![1, 1, 0], vec![0, 0, 1]], "nm").unwrap();
        let v = c.is_minimal_exact(&Limits::default()).unwrap();
        assert!(!v.minimal);
        let (small, big) = v.witness.unwrap();
        assert!(small.iter().zip(&big).all(|(&a, &b)| a == 0 || b != 0));
        assert_ne!(small, big);
    }

    #[test]
    fn ab_arithmetic() {
        assert!(ab_criterion(2, 26, 30));
        assert!(!ab_criterion(2, 2, 6));
        for q in [2, 3, 4, 5, 7] {
            assert!(ab_criterion(q, 9, 9));
        }
    }

    #[test]
    fn caps_are_reported() {
        let c = simplex23();
        let l = Limits {
            enumeration: 4,
            minimality: 4,
            graph_dimension: 2,
        };
        let e = c.weight_distribution(&l).unwrap_err();
        assert!(e.is_cap());
        assert!(c.is_minimal_exact(&l).unwrap_err().is_cap());
    }

    #[test]
    fn proportional_columns() {
        let f = Field::new(3, 1).unwrap();
        let c = LinearCode::from_rows(&f, &[vec![1, 2, 0], vec![0, 0, 1]], "p").unwrap();
        assert_eq!(c.column_defect(), Some(ColumnDefect::Proportional(0, 1)));
        assert!(!c.is_projective());
    }
}
