//! Arithmetic in GF(p^e) for small prime powers.
//!
//! Elements are integer codes in `[0, q)`: the base-p digits of a code are the
//! coefficients of the residue polynomial, least significant digit first.
//! Every field carries log/antilog tables, so multiplication is two lookups.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer code of a field element.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

const ADD_TABLE_MAX_Q: u32 = 256;

/// Self-describing field descriptor, as stored in code files.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic modulus coefficients, constant term first (length `e + 1`).
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn q(&self) -> u32 {
        self.p.pow(self.e)
    }
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    primitive: Elem,
    /// `exp[i] = primitive^i`, doubled so that `log a + log b` needs no reduction.
    exp: Vec<Elem>,
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: Option<Vec<u16>>,
}

/// A finite field GF(p^e), cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}, modulus {:?})",
            self.p(),
            self.e(),
            self.0.spec.modulus
        )
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, e))
}

// Polynomials over GF(p) as coefficient vectors, constant term first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo the nonzero polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let factor = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
        if factor != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = dr - db + i;
                let sub = (factor as u64 * bc as u64 % p as u64) as u32;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if db == 0 {
            return vec![0];
        }
    }
    r
}

/// Irreducibility of a monic polynomial over GF(p) by trial division against
/// every monic polynomial of degree at most half its degree.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits_of(low as u32, p, d);
            g.push(1);
            let r = poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits_of(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

/// The lexicographically smallest monic irreducible polynomial of degree `e`
/// over GF(p), comparing coefficient lists from the constant term upward.
pub fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = p.pow(e);
    for rank in 0..count {
        // The constant term is the most significant position in this order.
        let mut coeffs = digits_of(rank, p, e as usize);
        coeffs.reverse();
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl Field {
    /// GF(p^e) with the canonical (lexicographically smallest) modulus.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = smallest_irreducible(p, e);
        Ok(Field::build(FieldSpec { p, e, modulus }))
    }

    /// The canonical field of order `q`.
    pub fn with_order(q: u64) -> Result<Field> {
        if q > MAX_FIELD_ORDER as u64 {
            return Err(Error::FieldTooLarge(q as u128));
        }
        let (p, e) = prime_power(q)?;
        Field::new(p, e)
    }

    /// Field from an explicit descriptor; the modulus must be monic and irreducible.
    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        if !is_prime(spec.p as u64) {
            return Err(Error::NotPrime(spec.p as u64));
        }
        if spec.e == 0 || spec.modulus.len() != spec.e as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients, found {}",
                spec.e as usize + 1,
                spec.modulus.len()
            )));
        }
        let q = (spec.p as u128).checked_pow(spec.e).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q));
        }
        if spec.modulus.iter().any(|&c| c >= spec.p) || *spec.modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus(
                "coefficients must be reduced and monic".into(),
            ));
        }
        if !is_irreducible(&spec.modulus, spec.p) {
            return Err(Error::InvalidModulus(format!(
                "{:?} is reducible",
                spec.modulus
            )));
        }
        Ok(Field::build(spec.clone()))
    }

    fn build(spec: FieldSpec) -> Field {
        let p = spec.p;
        let q = spec.q();
        let e = spec.e as usize;

        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits_of(a, p, e).iter().map(|&c| (p - c) % p).collect();
                from_digits(&d, p)
            })
            .collect();

        let mul_poly = |a: Elem, b: Elem| -> Elem {
            let da = digits_of(a, p, e);
            let db = digits_of(b, p, e);
            let mut prod = vec![0u32; 2 * e];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let r = poly_rem(&prod, &spec.modulus, p);
            let mut r = r;
            r.resize(e, 0);
            from_digits(&r, p)
        };

        let order = q - 1;
        let mut primitive = 1;
        let mut exp = Vec::new();
        for g in 1..q {
            let mut powers = Vec::with_capacity(order as usize);
            let mut x = 1;
            loop {
                powers.push(x);
                x = mul_poly(x, g);
                if x == 1 {
                    break;
                }
            }
            if powers.len() as u32 == order {
                primitive = g;
                exp = powers;
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let doubled: Vec<Elem> = exp.iter().chain(exp.iter()).copied().collect();

        let add = (q <= ADD_TABLE_MAX_Q).then(|| {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b, p) as u16;
                }
            }
            t
        });

        Field(Arc::new(Tables {
            spec,
            q,
            primitive,
            exp: doubled,
            log,
            neg,
            add,
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn e(&self) -> u32 {
        self.0.spec.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.spec.modulus
    }

    /// The smallest element code generating the multiplicative group.
    pub fn primitive(&self) -> Elem {
        self.0.primitive
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.0.q
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange {
                elem: a as u64,
                q: self.0.q,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.0;
        if t.spec.p == 2 {
            a ^ b
        } else if let Some(add) = &t.add {
            add[(a * t.q + b) as usize] as Elem
        } else {
            digit_add(a, b, t.spec.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.0;
        let order = t.q - 1;
        Ok(t.exp[((order - t.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if exp == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.0;
        let order = (t.q - 1) as u64;
        let l = t.log[a as usize] as u64 * (exp % order) % order;
        t.exp[l as usize]
    }

    /// `log_primitive(a)` for nonzero `a`.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// Coefficient vector of `a` in the polynomial basis, constant term first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        digits_of(a, self.p(), self.e() as usize)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem> {
        if digits.len() != self.e() as usize || digits.iter().any(|&d| d >= self.p()) {
            return Err(Error::Shape(format!(
                "expected {} base-{} digits",
                self.e(),
                self.p()
            )));
        }
        Ok(from_digits(digits, self.p()))
    }

    /// Absolute trace onto the prime field.
    pub fn absolute_trace(&self, a: Elem) -> Elem {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.e() {
            acc = self.add(acc, x);
            x = self.pow(x, self.p() as u64);
        }
        acc
    }
}

fn from_digits(d: &[u32], p: u32) -> Elem {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn digit_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// A fixed embedding of GF(p^d) into GF(p^D), `d | D`.
///
/// The image of the small field's polynomial generator `x` is the smallest
/// root of the small field's modulus in the large field.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    big: Field,
    small: Field,
    embed: Vec<Elem>,
    project: Vec<Option<Elem>>,
}

impl SubfieldEmbedding {
    pub fn new(big: &Field, small: &Field) -> Result<SubfieldEmbedding> {
        if big.p() != small.p() || !big.e().is_multiple_of(small.e()) {
            return Err(Error::NotSubfield {
                sub: small.q(),
                ambient: big.q(),
            });
        }
        let p = big.p();
        let generator_image = if small.e() == 1 {
            // Prime field: the embedding is the identity on constants.
            None
        } else {
            let root = big
                .elements()
                .find(|&x| {
                    let value = small
                        .modulus()
                        .iter()
                        .rev()
                        .fold(0, |acc, &c| big.add(big.mul(acc, x), c));
                    value == 0
                })
                .ok_or(Error::NotSubfield {
                    sub: small.q(),
                    ambient: big.q(),
                })?;
            Some(root)
        };
        let embed: Vec<Elem> = small
            .elements()
            .map(|a| match generator_image {
                None => a,
                Some(beta) => {
                    let digits = small.digits(a);
                    digits
                        .iter()
                        .rev()
                        .fold(0, |acc, &c| big.add(big.mul(acc, beta), c))
                }
            })
            .collect();
        let mut project = vec![None; big.q() as usize];
        for (a, &img) in embed.iter().enumerate() {
            project[img as usize] = Some(a as Elem);
        }
        debug_assert!(p == small.p());
        Ok(SubfieldEmbedding {
            big: big.clone(),
            small: small.clone(),
            embed,
            project,
        })
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a as usize]
    }

    /// Preimage of a big-field element lying in the embedded subfield.
    pub fn project(&self, x: Elem) -> Option<Elem> {
        self.project[x as usize]
    }

    /// Relative trace `Tr(x) = sum_{i<m} x^(s^i)`, `s` the subfield order.
    pub fn trace(&self, x: Elem) -> Elem {
        let s = self.small.q() as u64;
        let m = self.big.e() / self.small.e();
        let mut acc = 0;
        let mut y = x;
        for _ in 0..m {
            acc = self.big.add(acc, y);
            y = self.big.pow(y, s);
        }
        self.project(acc).expect("trace lands in the subfield")
    }
}

/// Relative trace of `x` in `big` onto its subfield `small`.
pub fn relative_trace(big: &Field, small: &Field, x: Elem) -> Result<Elem> {
    big.check(x)?;
    Ok(SubfieldEmbedding::new(big, small)?.trace(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn root_check_agrees_on_quadratics() {
        // Quadratics and cubics are irreducible iff they have no root.
        for p in [2u32, 3, 5, 7] {
            for deg in 2..=3usize {
                for low in 0..p.pow(deg as u32) {
                    let mut f = digits_of(low, p, deg);
                    f.push(1);
                    let has_root = (0..p).any(|x| {
                        f.iter()
                            .rev()
                            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64)
                            == 0
                    });
                    assert_eq!(is_irreducible(&f, p), !has_root, "{f:?} over GF({p})");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(2, 17), Err(Error::FieldTooLarge(_))));
        assert!(matches!(Field::with_order(6), Err(Error::NotPrimePower(6))));
        assert!(Field::new(2, 16).is_ok());
        let bad = FieldSpec {
            p: 2,
            e: 2,
            modulus: vec![1, 0, 1],
        };
        assert!(matches!(
            Field::from_spec(&bad),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn small_products() {
        let gf2 = Field::new(2, 1).unwrap();
        assert_eq!(gf2.add(1, 1), 0);
        let gf4 = Field::new(2, 2).unwrap();
        assert_eq!(gf4.mul(2, 2), 3);
        assert!(matches!(gf4.div(1, 0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn exhaustive_axioms() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32] {
            let f = Field::with_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let p = f.p() as u64;
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                }
            }
            // Distributivity and associativity on a sample of triples.
            for a in f.elements().step_by(3) {
                for b in f.elements().step_by(2) {
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn digit_table_free_addition_matches_table() {
        let f = Field::new(3, 6).unwrap();
        assert!(f.0.add.is_none());
        assert_eq!(f.add(1, 2), 0);
        assert_eq!(f.add(5, 4), digit_add(5, 4, 3));
        assert_eq!(f.sub(f.add(100, 200), 200), 100);
    }

    #[test]
    fn traces() {
        let gf2 = Field::new(2, 1).unwrap();
        let gf4 = Field::new(2, 2).unwrap();
        assert_eq!(relative_trace(&gf4, &gf2, 0).unwrap(), 0);
        assert_eq!(relative_trace(&gf4, &gf2, 2).unwrap(), 1);
        let gf8 = Field::new(2, 3).unwrap();
        let emb = SubfieldEmbedding::new(&gf8, &gf2).unwrap();
        assert_eq!(gf8.elements().filter(|&x| emb.trace(x) == 0).count(), 4);
        assert!(matches!(
            SubfieldEmbedding::new(&gf8, &gf4),
            Err(Error::NotSubfield { .. })
        ));
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for (big, small) in [(16u64, 4u64), (64, 4), (64, 8), (81, 9), (256, 16)] {
            let b = Field::with_order(big).unwrap();
            let s = Field::with_order(small).unwrap();
            let emb = SubfieldEmbedding::new(&b, &s).unwrap();
            for x in s.elements() {
                for y in s.elements() {
                    assert_eq!(emb.embed(s.add(x, y)), b.add(emb.embed(x), emb.embed(y)));
                    assert_eq!(emb.embed(s.mul(x, y)), b.mul(emb.embed(x), emb.embed(y)));
                }
            }
            // Trace is fixed by the subfield Frobenius and onto.
            let mut hit = vec![false; s.q() as usize];
            for x in b.elements() {
                let t = emb.trace(x);
                let img = emb.embed(t);
                assert_eq!(b.pow(img, s.q() as u64), img);
                hit[t as usize] = true;
            }
            assert!(hit.iter().all(|&h| h));
        }
    }
}
