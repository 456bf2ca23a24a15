//! Exact arithmetic for the supported ring families.
//!
//! Four families are supported: the integers, the residue rings `Z_n`,
//! polynomial rings `F_p[x]` over prime fields, and the ring of upper
//! triangular 2x2 matrices over `F_p`. The first three are commutative
//! principal ideal rings; the matrix ring is only used to exhibit how
//! ideal multiplication breaks down without commutativity.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Positive divisors of `n` in ascending order, by trial division.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Inverse of `a` modulo `n`, if it exists.
pub(crate) fn mod_inv(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

fn reduce_i64(v: i64, n: u64) -> u64 {
    (v as i128).rem_euclid(n as i128) as u64
}

/// A ring family together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawSpec")]
pub enum RingSpec {
    /// The integers.
    Integer,
    /// Integers modulo `n`, `n >= 2`.
    Modular { n: u64 },
    /// Polynomials over the prime field `F_p`.
    Poly { p: u64 },
    /// Upper triangular 2x2 matrices over `F_p`.
    Triangular { p: u64 },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawSpec {
    Integer,
    Modular { n: u64 },
    Poly { p: u64 },
    Triangular { p: u64 },
}

impl TryFrom<RawSpec> for RingSpec {
    type Error = AlgebraError;

    fn try_from(raw: RawSpec) -> Result<Self> {
        match raw {
            RawSpec::Integer => Ok(RingSpec::Integer),
            RawSpec::Modular { n } => RingSpec::modular(n),
            RawSpec::Poly { p } => RingSpec::poly(p),
            RawSpec::Triangular { p } => RingSpec::triangular(p),
        }
    }
}

impl RingSpec {
    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(AlgebraError::InvalidSpec(format!("modulus must be at least 2, got {n}")));
        }
        Ok(RingSpec::Modular { n })
    }

    pub fn poly(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidSpec(format!("characteristic {p} is not prime")));
        }
        Ok(RingSpec::Poly { p })
    }

    pub fn triangular(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidSpec(format!("characteristic {p} is not prime")));
        }
        Ok(RingSpec::Triangular { p })
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, RingSpec::Triangular { .. })
    }

    /// Number of elements, for finite rings.
    pub fn cardinality(&self) -> Option<u64> {
        match *self {
            RingSpec::Modular { n } => Some(n),
            RingSpec::Triangular { p } => Some(p * p * p),
            RingSpec::Integer | RingSpec::Poly { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    /// Image of an integer under the unique ring map `Z -> R`.
    pub fn from_int(&self, v: i64) -> RingElement {
        match *self {
            RingSpec::Integer => RingElement::Integer(BigInt::from(v)),
            RingSpec::Modular { n } => RingElement::Residue { n, value: reduce_i64(v, n) },
            RingSpec::Poly { p } => RingElement::Poly(FpPoly::constant(p, reduce_i64(v, p))),
            RingSpec::Triangular { p } => {
                let s = reduce_i64(v, p);
                RingElement::Triangular(TriMatrix::new(p, s, 0, s))
            }
        }
    }

    /// Every element of a finite ring, in ascending order.
    pub fn elements(&self) -> Option<Vec<RingElement>> {
        match *self {
            RingSpec::Modular { n } => {
                Some((0..n).map(|value| RingElement::Residue { n, value }).collect())
            }
            RingSpec::Triangular { p } => {
                Some(TriMatrix::all(p).into_iter().map(RingElement::Triangular).collect())
            }
            RingSpec::Integer | RingSpec::Poly { .. } => None,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integer => write!(f, "Z"),
            RingSpec::Modular { n } => write!(f, "Z_{n}"),
            RingSpec::Poly { p } => write!(f, "F_{p}[x]"),
            RingSpec::Triangular { p } => write!(f, "UT2(F_{p})"),
        }
    }
}

/// Polynomial over `F_p`, coefficients stored low to high with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Builds a polynomial from low-to-high coefficients, reducing and trimming.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        FpPoly::new(p, coeffs.iter().map(|&c| reduce_i64(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        FpPoly::new(p, vec![c])
    }

    /// The indeterminate `x`.
    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        FpPoly::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        FpPoly::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| mod_mul(a, c, self.p)).collect();
        FpPoly::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mod_mul(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        let inv = mod_inv(lead, self.p).expect("nonzero element of a prime field is invertible");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((FpPoly::zero(self.p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = mod_mul(rem[k + dd], inv, self.p);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = mod_mul(c, d, self.p);
                rem[k + j] = (rem[k + j] + self.p - t) % self.p;
            }
        }
        Some((FpPoly::new(self.p, quot), FpPoly::new(self.p, rem)))
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lead) => self.scale(mod_inv(lead, self.p).expect("prime field")),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Substitutes `inner` for `x`, i.e. returns `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = FpPoly::zero(self.p);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&FpPoly::constant(self.p, c));
        }
        acc
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The matrix `(a b; 0 c)` over `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriMatrix {
    p: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl TriMatrix {
    pub fn new(p: u64, a: u64, b: u64, c: u64) -> Self {
        TriMatrix { p, a: a % p, b: b % p, c: c % p }
    }

    pub fn zero(p: u64) -> Self {
        TriMatrix::new(p, 0, 0, 0)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Matrix unit `E_11`.
    pub fn e11(p: u64) -> Self {
        TriMatrix::new(p, 1, 0, 0)
    }

    /// Matrix unit `E_12`.
    pub fn e12(p: u64) -> Self {
        TriMatrix::new(p, 0, 1, 0)
    }

    /// Matrix unit `E_22`.
    pub fn e22(p: u64) -> Self {
        TriMatrix::new(p, 0, 0, 1)
    }

    pub fn add(&self, o: &Self) -> Self {
        TriMatrix::new(self.p, self.a + o.a, self.b + o.b, self.c + o.c)
    }

    pub fn neg(&self) -> Self {
        TriMatrix::new(self.p, self.p - self.a, self.p - self.b, self.p - self.c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p;
        TriMatrix::new(
            p,
            mod_mul(self.a, o.a, p),
            (mod_mul(self.a, o.b, p) + mod_mul(self.b, o.c, p)) % p,
            mod_mul(self.c, o.c, p),
        )
    }

    pub fn all(p: u64) -> Vec<Self> {
        let mut out = Vec::with_capacity((p * p * p) as usize);
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    out.push(TriMatrix::new(p, a, b, c));
                }
            }
        }
        out
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; 0 {})", self.a, self.b, self.c)
    }
}

/// An element of one of the supported rings. Each variant carries its ring parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ElementRepr", into = "ElementRepr")]
pub enum RingElement {
    Integer(BigInt),
    Residue { n: u64, value: u64 },
    Poly(FpPoly),
    Triangular(TriMatrix),
}

impl RingElement {
    pub fn int(v: impl Into<BigInt>) -> Self {
        RingElement::Integer(v.into())
    }

    /// Residue of `v` modulo `n`. Panics if `n < 2`.
    pub fn residue(n: u64, v: i64) -> Self {
        assert!(n >= 2, "modulus must be at least 2");
        RingElement::Residue { n, value: reduce_i64(v, n) }
    }

    /// Polynomial from low-to-high coefficients. Panics if `p` is not prime.
    pub fn poly(p: u64, coeffs: &[i64]) -> Self {
        assert!(is_prime(p), "characteristic must be prime");
        RingElement::Poly(FpPoly::from_i64(p, coeffs))
    }

    /// The matrix `(a b; 0 c)`. Panics if `p` is not prime.
    pub fn tri(p: u64, a: u64, b: u64, c: u64) -> Self {
        assert!(is_prime(p), "characteristic must be prime");
        RingElement::Triangular(TriMatrix::new(p, a, b, c))
    }

    pub fn spec(&self) -> RingSpec {
        match self {
            RingElement::Integer(_) => RingSpec::Integer,
            RingElement::Residue { n, .. } => RingSpec::Modular { n: *n },
            RingElement::Poly(f) => RingSpec::Poly { p: f.p },
            RingElement::Triangular(m) => RingSpec::Triangular { p: m.p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(v) => v.is_zero(),
            RingElement::Residue { value, .. } => *value == 0,
            RingElement::Poly(f) => f.is_zero(),
            RingElement::Triangular(m) => m.a == 0 && m.b == 0 && m.c == 0,
        }
    }

    pub fn as_poly(&self) -> Option<&FpPoly> {
        match self {
            RingElement::Poly(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self {
            RingElement::Residue { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_tri(&self) -> Option<&TriMatrix> {
        match self {
            RingElement::Triangular(m) => Some(m),
            _ => None,
        }
    }
}

impl From<FpPoly> for RingElement {
    fn from(f: FpPoly) -> Self {
        RingElement::Poly(f)
    }
}

impl From<TriMatrix> for RingElement {
    fn from(m: TriMatrix) -> Self {
        RingElement::Triangular(m)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(v) => write!(f, "{v}"),
            RingElement::Residue { value, .. } => write!(f, "{value}"),
            RingElement::Poly(p) => write!(f, "{p}"),
            RingElement::Triangular(m) => write!(f, "{m}"),
        }
    }
}

/// JSON shape of an element: `{"family": <spec>, "value": ...}`.
#[derive(Serialize, Deserialize)]
struct ElementRepr {
    family: RingSpec,
    value: serde_json::Value,
}

impl From<RingElement> for ElementRepr {
    fn from(e: RingElement) -> Self {
        ElementRepr { family: e.spec(), value: element_value(&e) }
    }
}

impl TryFrom<ElementRepr> for RingElement {
    type Error = AlgebraError;

    fn try_from(r: ElementRepr) -> Result<Self> {
        element_from_value(r.family, &r.value)
    }
}

/// The `value` part of an element's JSON form. Integers are decimal strings,
/// polynomials low-to-high coefficient arrays, matrices `[a, b, c]`.
pub fn element_value(e: &RingElement) -> serde_json::Value {
    use serde_json::json;
    match e {
        RingElement::Integer(v) => json!(v.to_string()),
        RingElement::Residue { value, .. } => json!(value),
        RingElement::Poly(f) => json!(f.coeffs),
        RingElement::Triangular(m) => json!([m.a, m.b, m.c]),
    }
}

/// Parses the `value` part of an element's JSON form for the given ring.
pub fn element_from_value(spec: RingSpec, value: &serde_json::Value) -> Result<RingElement> {
    let bad = || AlgebraError::Domain(format!("cannot read {value} as an element of {spec}"));
    let small = |v: &serde_json::Value| v.as_i64().ok_or_else(bad);
    match spec {
        RingSpec::Integer => {
            let parsed = match value {
                serde_json::Value::String(s) => s.parse::<BigInt>().map_err(|_| bad())?,
                serde_json::Value::Number(_) => BigInt::from(small(value)?),
                _ => return Err(bad()),
            };
            Ok(RingElement::Integer(parsed))
        }
        RingSpec::Modular { n } => {
            let v = small(value)?;
            if v < 0 || v as u64 >= n {
                return Err(bad());
            }
            Ok(RingElement::Residue { n, value: v as u64 })
        }
        RingSpec::Poly { p } => {
            let arr = value.as_array().ok_or_else(bad)?;
            let coeffs = arr
                .iter()
                .map(|c| match c.as_u64() {
                    Some(c) if c < p => Ok(c),
                    _ => Err(bad()),
                })
                .collect::<Result<Vec<_>>>()?;
            if coeffs.last() == Some(&0) {
                return Err(bad());
            }
            Ok(RingElement::Poly(FpPoly { p, coeffs }))
        }
        RingSpec::Triangular { p } => {
            let arr = value.as_array().ok_or_else(bad)?;
            let entries = arr
                .iter()
                .map(|c| match c.as_u64() {
                    Some(c) if c < p => Ok(c),
                    _ => Err(bad()),
                })
                .collect::<Result<Vec<_>>>()?;
            match entries[..] {
                [a, b, c] => Ok(RingElement::Triangular(TriMatrix::new(p, a, b, c))),
                _ => Err(bad()),
            }
        }
    }
}

fn same_spec(x: &RingElement, y: &RingElement) -> Result<RingSpec> {
    let (l, r) = (x.spec(), y.spec());
    if l != r {
        return Err(AlgebraError::SpecMismatch { left: l, right: r });
    }
    Ok(l)
}

fn commutative(op: &'static str, spec: RingSpec) -> Result<()> {
    if spec.is_commutative() {
        Ok(())
    } else {
        Err(AlgebraError::UnsupportedFamily { op, family: spec })
    }
}

pub fn ring_add(x: &RingElement, y: &RingElement) -> Result<RingElement> {
    same_spec(x, y)?;
    Ok(match (x, y) {
        (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a + b),
        (RingElement::Residue { n, value: a }, RingElement::Residue { value: b, .. }) => {
            RingElement::Residue { n: *n, value: ((*a as u128 + *b as u128) % *n as u128) as u64 }
        }
        (RingElement::Poly(a), RingElement::Poly(b)) => RingElement::Poly(a.add(b)),
        (RingElement::Triangular(a), RingElement::Triangular(b)) => RingElement::Triangular(a.add(b)),
        _ => unreachable!("specs already matched"),
    })
}

pub fn ring_neg(x: &RingElement) -> RingElement {
    match x {
        RingElement::Integer(a) => RingElement::Integer(-a),
        RingElement::Residue { n, value } => RingElement::Residue { n: *n, value: (n - value) % n },
        RingElement::Poly(f) => RingElement::Poly(f.neg()),
        RingElement::Triangular(m) => RingElement::Triangular(m.neg()),
    }
}

pub fn ring_sub(x: &RingElement, y: &RingElement) -> Result<RingElement> {
    ring_add(x, &ring_neg(y))
}

pub fn ring_mul(x: &RingElement, y: &RingElement) -> Result<RingElement> {
    same_spec(x, y)?;
    Ok(match (x, y) {
        (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a * b),
        (RingElement::Residue { n, value: a }, RingElement::Residue { value: b, .. }) => {
            RingElement::Residue { n: *n, value: mod_mul(*a, *b, *n) }
        }
        (RingElement::Poly(a), RingElement::Poly(b)) => RingElement::Poly(a.mul(b)),
        (RingElement::Triangular(a), RingElement::Triangular(b)) => RingElement::Triangular(a.mul(b)),
        _ => unreachable!("specs already matched"),
    })
}

/// Whether `a` divides `b`, i.e. `b = r a` for some `r`.
///
/// `a | 0` always holds and `0 | b` only for `b = 0`. In `Z_n` this uses the
/// criterion `gcd(a, n) | b` over the integers.
pub fn divides(a: &RingElement, b: &RingElement) -> Result<bool> {
    let spec = same_spec(a, b)?;
    commutative("divides", spec)?;
    Ok(match (a, b) {
        (RingElement::Integer(a), RingElement::Integer(b)) => {
            if a.is_zero() {
                b.is_zero()
            } else {
                (b % a).is_zero()
            }
        }
        (RingElement::Residue { n, value: a }, RingElement::Residue { value: b, .. }) => {
            b % gcd_u64(*a, *n) == 0
        }
        (RingElement::Poly(a), RingElement::Poly(b)) => match b.div_rem(a) {
            Some((_, r)) => r.is_zero(),
            None => b.is_zero(),
        },
        _ => unreachable!("commutative families only"),
    })
}

/// Canonical associate: `|a|` in `Z`, `gcd(a, n)` in `Z_n` (with `n` stored as 0),
/// the monic multiple in `F_p[x]`.
pub fn canonical_generator(a: &RingElement) -> Result<RingElement> {
    commutative("canonical_generator", a.spec())?;
    Ok(match a {
        RingElement::Integer(v) => RingElement::Integer(v.abs()),
        RingElement::Residue { n, value } => {
            RingElement::Residue { n: *n, value: gcd_u64(*value, *n) % n }
        }
        RingElement::Poly(f) => RingElement::Poly(f.monic()),
        RingElement::Triangular(_) => unreachable!(),
    })
}

/// Nonnegative (integers) or monic (polynomials) gcd; `gcd(0, 0) = 0`.
pub fn euclidean_gcd(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    let spec = same_spec(a, b)?;
    match (a, b) {
        (RingElement::Integer(x), RingElement::Integer(y)) => Ok(RingElement::Integer(x.gcd(y))),
        (RingElement::Poly(x), RingElement::Poly(y)) => Ok(RingElement::Poly(x.gcd(y))),
        _ => Err(AlgebraError::UnsupportedFamily { op: "euclidean_gcd", family: spec }),
    }
}

/// Whether `u` is a unit.
pub fn is_unit(u: &RingElement) -> bool {
    match u {
        RingElement::Integer(v) => v.abs().is_one(),
        RingElement::Residue { n, value } => gcd_u64(*value, *n) == 1,
        RingElement::Poly(f) => f.is_unit(),
        RingElement::Triangular(m) => m.a != 0 && m.c != 0,
    }
}

fn finite_tri(op: &'static str, x: &RingElement) -> Result<TriMatrix> {
    match x {
        RingElement::Triangular(m) => Ok(*m),
        other => Err(AlgebraError::UnsupportedFamily { op, family: other.spec() }),
    }
}

fn additive_closure(seed: BTreeSet<TriMatrix>, p: u64) -> BTreeSet<TriMatrix> {
    let mut set = seed;
    set.insert(TriMatrix::zero(p));
    loop {
        let current: Vec<TriMatrix> = set.iter().copied().collect();
        let before = set.len();
        for x in &current {
            for y in &current {
                set.insert(x.add(y));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

fn lift(set: BTreeSet<TriMatrix>) -> BTreeSet<RingElement> {
    set.into_iter().map(RingElement::Triangular).collect()
}

/// Smallest two-sided ideal of the triangular matrix ring containing `x`:
/// the additive closure of `{r x s}`.
pub fn two_sided_ideal_closure(x: &RingElement) -> Result<BTreeSet<RingElement>> {
    let m = finite_tri("two_sided_ideal_closure", x)?;
    let p = m.p;
    let ring = TriMatrix::all(p);
    let mut products = BTreeSet::new();
    for r in &ring {
        let rx = r.mul(&m);
        for s in &ring {
            products.insert(rx.mul(s));
        }
    }
    Ok(lift(additive_closure(products, p)))
}

/// The ideal product `IJ`: all finite sums of products `i j`.
pub fn set_ideal_product(
    left: &BTreeSet<RingElement>,
    right: &BTreeSet<RingElement>,
) -> Result<BTreeSet<RingElement>> {
    let unpack = |set: &BTreeSet<RingElement>| -> Result<Vec<TriMatrix>> {
        set.iter().map(|e| finite_tri("set_ideal_product", e)).collect()
    };
    let (l, r) = (unpack(left)?, unpack(right)?);
    let p = match l.first().or(r.first()) {
        Some(m) => m.p,
        None => return Err(AlgebraError::Domain("ideals must be nonempty".into())),
    };
    if l.iter().chain(r.iter()).any(|m| m.p != p) {
        let other = l.iter().chain(r.iter()).find(|m| m.p != p).unwrap();
        return Err(AlgebraError::SpecMismatch {
            left: RingSpec::Triangular { p },
            right: RingSpec::Triangular { p: other.p },
        });
    }
    let mut products = BTreeSet::new();
    for x in &l {
        for y in &r {
            products.insert(x.mul(y));
        }
    }
    Ok(lift(additive_closure(products, p)))
}
