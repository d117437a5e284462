//! Explicit generator-matrix constructions and the complement transform.

use std::collections::{BTreeMap, HashSet};

use crate::code::{canonical_point, codeword_count, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, SubfieldEmbedding};
use crate::matrix::GfMatrix;

/// Largest number of projective points any construction will materialize.
pub const MAX_POINTS: u128 = 1 << 21;

/// Number of projective points of the `k`-dimensional space over GF(q).
pub fn projective_point_count(q: u32, k: usize) -> u128 {
    codeword_count(q, k).saturating_sub(1) / (q as u128 - 1)
}

/// Distinct canonical projective points (first nonzero coordinate 1),
/// kept in lexicographic order of their coordinate lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePointSet {
    field: Field,
    k: usize,
    points: Vec<Vec<Elem>>,
}

impl ProjectivePointSet {
    pub fn new(field: &Field, k: usize, vectors: &[Vec<Elem>]) -> Result<ProjectivePointSet> {
        let mut seen = HashSet::new();
        let mut points = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != k {
                return Err(Error::Shape(format!(
                    "point {i} has {} coordinates, expected {k}",
                    v.len()
                )));
            }
            for &x in v {
                field.check(x)?;
            }
            let p = canonical_point(field, v)
                .ok_or_else(|| Error::NotProjective(format!("column {i} is zero")))?;
            if !seen.insert(p.clone()) {
                return Err(Error::NotProjective(format!(
                    "column {i} is proportional to an earlier column"
                )));
            }
            points.push(p);
        }
        points.sort();
        Ok(ProjectivePointSet {
            field: field.clone(),
            k,
            points,
        })
    }

    /// The columns of a projective code, as points of its `k`-dimensional space.
    pub fn from_code(code: &LinearCode) -> Result<ProjectivePointSet> {
        ProjectivePointSet::new(code.field(), code.k(), &code.generator().columns())
    }

    /// Every point of the `k`-dimensional space.
    pub fn full(field: &Field, k: usize) -> Result<ProjectivePointSet> {
        if k == 0 {
            return Err(Error::InvalidParameter(
                "dimension must be at least 1".into(),
            ));
        }
        let q = field.q();
        let count = projective_point_count(q, k);
        if count > MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "projective point set",
                size: count,
                cap: MAX_POINTS,
            });
        }
        let mut points = Vec::with_capacity(count as usize);
        for lead in (0..k).rev() {
            let tail = k - lead - 1;
            for t in 0..(q as u64).pow(tail as u32) {
                let mut v = vec![0; k];
                v[lead] = 1;
                let mut x = t;
                for slot in v.iter_mut().rev().take(tail) {
                    *slot = (x % q as u64) as Elem;
                    x /= q as u64;
                }
                points.push(v);
            }
        }
        points.sort();
        Ok(ProjectivePointSet {
            field: field.clone(),
            k,
            points,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    /// Prefixes `big_k - k` zero coordinates to every point.
    pub fn embed(&self, big_k: usize) -> Result<ProjectivePointSet> {
        if big_k < self.k {
            return Err(Error::InvalidParameter(format!(
                "cannot embed dimension {} into {big_k}",
                self.k
            )));
        }
        let pad = big_k - self.k;
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut v = vec![0; pad];
                v.extend_from_slice(p);
                v
            })
            .collect();
        Ok(ProjectivePointSet {
            field: self.field.clone(),
            k: big_k,
            points,
        })
    }

    /// The code whose generator columns are these points.
    pub fn to_code(&self, label: impl Into<String>) -> Result<LinearCode> {
        let m = GfMatrix::from_columns(&self.field, self.k, &self.points)?;
        LinearCode::from_generator(m, label)
    }
}

pub fn simplex(q: u32, k: usize) -> Result<LinearCode> {
    let field = Field::with_order(q as u64)?;
    ProjectivePointSet::full(&field, k)?.to_code(format!("simplex({q},{k})"))
}

/// Points of the `big_k`-dimensional space missing from the embedded input.
pub fn complement_points(points: &ProjectivePointSet, big_k: usize) -> Result<ProjectivePointSet> {
    let embedded = points.embed(big_k)?;
    let removed: HashSet<&Vec<Elem>> = embedded.points.iter().collect();
    let full = ProjectivePointSet::full(points.field(), big_k)?;
    let kept: Vec<Vec<Elem>> = full
        .points
        .into_iter()
        .filter(|p| !removed.contains(p))
        .collect();
    if kept.is_empty() {
        return Err(Error::InvalidParameter(
            "the complement has no points".into(),
        ));
    }
    Ok(ProjectivePointSet {
        field: points.field().clone(),
        k: big_k,
        points: kept,
    })
}

/// The complementary code of a projective code inside the simplex code of dimension `big_k`.
pub fn complement(code: &LinearCode, big_k: usize) -> Result<LinearCode> {
    let points = ProjectivePointSet::from_code(code)?;
    complement_points(&points, big_k)?.to_code(format!("complement({}, K={big_k})", code.label()))
}

/// Parameters of a predicted complement distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WdTransformSpec {
    pub base: WeightDistribution,
    pub big_k: usize,
}

/// Weight distribution of the complement in dimension `K`, predicted from the
/// base distribution alone: weight `w` maps to `q^(K-1) - w` with its count
/// scaled by `q^(K-k)`, and `K > k` adds `q^(K-k) - 1` words of weight `q^(K-1)`.
pub fn transform_wd(spec: &WdTransformSpec) -> Result<WeightDistribution> {
    let base = &spec.base;
    let (q, k, big_k) = (base.q, base.k, spec.big_k);
    if big_k < k {
        return Err(Error::InvalidParameter(format!(
            "K = {big_k} is below k = {k}"
        )));
    }
    if base.total() != codeword_count(q, k) {
        return Err(Error::InvalidParameter(format!(
            "base distribution totals {} instead of q^k = {}",
            base.total(),
            codeword_count(q, k)
        )));
    }
    let top = codeword_count(q, big_k - 1);
    let scale = codeword_count(q, big_k - k);
    if top > u64::MAX as u128 || scale > u64::MAX as u128 {
        return Err(Error::InvalidParameter("lifted dimension too large".into()));
    }
    let (top, scale) = (top as usize, scale as u64);
    let length = projective_point_count(q, big_k) as usize;
    if base.n >= length {
        return Err(Error::InvalidParameter(format!(
            "base length {} leaves no points among {length}",
            base.n
        )));
    }
    let mut counts = BTreeMap::new();
    counts.insert(0, 1u64);
    for (&w, &a) in &base.counts {
        if w == 0 {
            continue;
        }
        if w >= top {
            return Err(Error::InvalidParameter(format!(
                "base weight {w} is not below q^(K-1)"
            )));
        }
        *counts.entry(top - w).or_insert(0) += scale * a;
    }
    if big_k > k {
        *counts.entry(top).or_insert(0) += scale - 1;
    }
    Ok(WeightDistribution {
        q,
        n: length - base.n,
        k: big_k,
        counts,
    })
}

fn moment_curve_points(field: &Field, k: usize) -> Vec<Vec<Elem>> {
    field
        .elements()
        .map(|a| (0..k).map(|i| field.pow(a, i as u64)).collect())
        .collect()
}

/// Reed–Solomon code with columns `(1, a, ..., a^(k-1))` for every `a` in GF(q).
pub fn rs_code(q: u32, k: usize) -> Result<LinearCode> {
    if k < 2 || k > q as usize {
        return Err(Error::InvalidParameter(format!(
            "RS dimension needs 2 <= k <= q, got k = {k}"
        )));
    }
    let field = Field::with_order(q as u64)?;
    let cols = moment_curve_points(&field, k);
    LinearCode::from_generator(
        GfMatrix::from_columns(&field, k, &cols)?,
        format!("rs({q},{k})"),
    )
}

/// Complement of the `q` moment-curve points of dimension `k`, lifted to `k + h`.
///
/// For `k > q` the points still form a projective set of size `q` (they span
/// only a `q`-dimensional subspace), so the complement is well defined.
pub fn complementary_rs(q: u32, k: usize, h: usize) -> Result<LinearCode> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "complementary RS needs k >= 2, got {k}"
        )));
    }
    let field = Field::with_order(q as u64)?;
    let points = ProjectivePointSet::new(&field, k, &moment_curve_points(&field, k))?;
    complement_points(&points, k + h)?.to_code(format!("comp-rs({q},{k},h={h})"))
}

/// Complement of the `k` unit vectors, lifted to `k + h`.
pub fn complementary_mds_trivial(q: u32, k: usize, h: usize) -> Result<LinearCode> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "complementary MDS needs k >= 2, got {k}"
        )));
    }
    let field = Field::with_order(q as u64)?;
    let units: Vec<Vec<Elem>> = (0..k)
        .map(|i| (0..k).map(|j| Elem::from(i == j)).collect())
        .collect();
    let points = ProjectivePointSet::new(&field, k, &units)?;
    let big_k = k + h;
    let comp = complement_points(&points, big_k)?;
    if comp.len() < big_k {
        return Err(Error::InvalidParameter(format!(
            "complement has length {} below its dimension {big_k}",
            comp.len()
        )));
    }
    comp.to_code(format!("comp-mds({q},{k},h={h})"))
}

/// Binary code whose columns are all weight-`w` vectors of length `k`, in lexicographic order.
pub fn fixed_weight_anticode(k: usize, w: usize) -> Result<LinearCode> {
    if w < 2 || w + 1 > k {
        return Err(Error::InvalidParameter(format!(
            "column weight needs 2 <= w <= k-1, got k={k}, w={w}"
        )));
    }
    if k > 24 {
        return Err(Error::CapExceeded {
            what: "fixed-weight columns",
            size: 1 << k,
            cap: 1 << 24,
        });
    }
    let field = Field::new(2, 1)?;
    let cols: Vec<Vec<Elem>> = (0u32..1 << k)
        .map(|v| (0..k).map(|i| v >> (k - 1 - i) & 1).collect::<Vec<Elem>>())
        .filter(|c| c.iter().sum::<u32>() as usize == w)
        .collect();
    LinearCode::from_columns(&field, k, &cols, format!("fixed-weight({k},{w})"))
}

/// Points of the coordinate planes `(*,*,0,0)` and `(0,0,*,*)` in dimension four.
pub fn two_subspace_points(q: u32) -> Result<ProjectivePointSet> {
    let field = Field::with_order(q as u64)?;
    let plane = ProjectivePointSet::full(&field, 2)?;
    let mut vs = Vec::new();
    for p in plane.points() {
        vs.push(vec![p[0], p[1], 0, 0]);
        vs.push(vec![0, 0, p[0], p[1]]);
    }
    ProjectivePointSet::new(&field, 4, &vs)
}

pub fn two_subspace_code(q: u32) -> Result<LinearCode> {
    two_subspace_points(q)?.to_code(format!("two-subspace({q})"))
}

/// Points of the elliptic quadric `x0 x1 = N(x2 + x3 ξ)`, `N` the norm of
/// GF(q²)/GF(q) and `ξ` the least element of GF(q²) outside GF(q).
pub fn ovoid_points(q: u32) -> Result<ProjectivePointSet> {
    let small = Field::with_order(q as u64)?;
    let big = Field::new(small.p(), 2 * small.e())?;
    let emb = SubfieldEmbedding::new(&big, &small)?;
    let xi = big
        .elements()
        .find(|&x| emb.project(x).is_none())
        .expect("a quadratic extension is larger than its base field");
    let qq = q as u64;
    let form = |a: Elem, b: Elem| -> Elem {
        let y = big.add(emb.embed(a), big.mul(emb.embed(b), xi));
        emb.project(big.pow(y, qq + 1))
            .expect("norm lies in the base field")
    };
    let all = ProjectivePointSet::full(&small, 4)?;
    let pts: Vec<Vec<Elem>> = all
        .points()
        .iter()
        .filter(|v| small.mul(v[0], v[1]) == form(v[2], v[3]))
        .cloned()
        .collect();
    ProjectivePointSet::new(&small, 4, &pts)
}

pub fn ovoid_code(q: u32) -> Result<LinearCode> {
    ovoid_points(q)?.to_code(format!("ovoid({q})"))
}

fn binary_extension(m: usize) -> Result<Field> {
    if m == 0 || m > 16 {
        return Err(Error::InvalidParameter(format!(
            "extension degree {m} outside 1..=16"
        )));
    }
    Field::new(2, m as u32)
}

/// Trace code `(Tr(a x + b x^3))_{x ≠ 0}` over GF(2^m), `m` odd.
pub fn dual_bch_code(m: usize) -> Result<LinearCode> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "dual BCH needs odd m >= 3, got {m}"
        )));
    }
    let f = binary_extension(m)?;
    let xs: Vec<Elem> = f.elements().skip(1).collect();
    let mut rows = Vec::with_capacity(2 * m);
    for exp in [1u64, 3] {
        for i in 0..m {
            let basis = 1 << i;
            rows.push(
                xs.iter()
                    .map(|&x| f.absolute_trace(f.mul(basis, f.pow(x, exp))))
                    .collect(),
            );
        }
    }
    let field = Field::new(2, 1)?;
    LinearCode::from_rows(&field, &rows, format!("dual-bch({m})"))
}

/// Kasami code `(Tr_2m(b x) + Tr_m(a x^(2^m+1)))_{x ≠ 0}`, `a ∈ GF(2^m)`, `b ∈ GF(2^2m)`.
pub fn kasami_code(m: usize) -> Result<LinearCode> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "Kasami code needs m >= 2, got {m}"
        )));
    }
    let big = binary_extension(2 * m)?;
    let small = binary_extension(m)?;
    let emb = SubfieldEmbedding::new(&big, &small)?;
    let xs: Vec<Elem> = big.elements().skip(1).collect();
    let norm_exp = (1u64 << m) + 1;
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(3 * m);
    for i in 0..2 * m {
        let b = 1 << i;
        rows.push(
            xs.iter()
                .map(|&x| big.absolute_trace(big.mul(b, x)))
                .collect(),
        );
    }
    for i in 0..m {
        let a = emb.embed(1 << i);
        rows.push(
            xs.iter()
                .map(|&x| {
                    let y = emb
                        .project(big.mul(a, big.pow(x, norm_exp)))
                        .expect("norm lies in the subfield");
                    small.absolute_trace(y)
                })
                .collect(),
        );
    }
    let field = Field::new(2, 1)?;
    let m_rows = GfMatrix::from_rows(&field, &rows)?;
    let rank = m_rows.rank();
    if rank != 3 * m {
        return Err(Error::RankDeficient { rank, rows: 3 * m });
    }
    LinearCode::from_generator(m_rows, format!("kasami({m})"))
}

/// Binary image of a code over GF(2^s): each symbol becomes the simplex
/// codeword of its coordinate vector in the polynomial basis.
pub fn concatenate_with_simplex(outer: &LinearCode) -> Result<LinearCode> {
    let f = outer.field();
    if f.p() != 2 {
        return Err(Error::InvalidParameter(format!(
            "outer code must be over GF(2^s), got {}",
            f
        )));
    }
    let s = f.e() as usize;
    let gf2 = Field::new(2, 1)?;
    let inner = ProjectivePointSet::full(&gf2, s)?;
    let expand = |y: Elem| -> Vec<Elem> {
        let digits = f.digits(y);
        inner
            .points()
            .iter()
            .map(|v| v.iter().zip(&digits).fold(0, |acc, (&a, &b)| acc ^ (a & b)))
            .collect()
    };
    let mut rows = Vec::with_capacity(s * outer.k());
    for r in 0..outer.k() {
        for t in 0..s {
            let beta: Elem = 1 << t;
            let row: Vec<Elem> = outer
                .generator()
                .row(r)
                .iter()
                .flat_map(|&g| expand(f.mul(beta, g)))
                .collect();
            rows.push(row);
        }
    }
    LinearCode::from_rows(&gf2, &rows, format!("concat({})", outer.label()))
}
