//! Concrete ideal semigroups: `I(Z_n)` and `(D(n), *, |)`, sampled `I(Z)` and
//! `I(F_p[x])`, and the triangular-matrix counterexample.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::ideals::{self, ideal_leq, ideal_mul, Ideal};
use crate::ordered_semigroup::{self, FiniteOrderedSemigroup};
use crate::report::CheckReport;
use crate::rings::{
    self, ring_add, ring_mul, set_ideal_product, two_sided_ideal_closure, FpPoly, RingElement, RingSpec,
    TriMatrix,
};
use crate::sampling::{SampleConfig, Sampler};

fn check_modulus(n: u64) -> Result<RingSpec> {
    RingSpec::modular(n).map_err(|_| AlgebraError::Domain(format!("n must be at least 2, got {n}")))
}

/// Label of `<d>` in `I(Z_n)`: the divisor `d`, with the zero ideal printed as `n`.
pub fn divisor_label(ideal: &Ideal) -> String {
    match ideal.generator() {
        RingElement::Residue { n, value: 0 } => n.to_string(),
        g => g.to_string(),
    }
}

/// All ideals of `Z_n`, one per positive divisor, ascending.
pub fn zn_universe(n: u64) -> Result<Vec<Ideal>> {
    let spec = check_modulus(n)?;
    Ok(ideals::all_ideals(spec).expect("modular rings are enumerable"))
}

/// `(I(Z_n), ·, ≼)` with elements labelled by divisors of `n`.
pub fn build_ideal_semigroup_zn(n: u64) -> Result<FiniteOrderedSemigroup> {
    let universe = zn_universe(n)?;
    let labels = universe.iter().map(divisor_label).collect();
    ideals::semigroup_from_ideals(&universe, Some(labels))
}

/// `(D(n), *, |)` with `d1 * d2 = gcd(d1 d2, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSemigroup {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub semigroup: FiniteOrderedSemigroup,
}

impl DivisorSemigroup {
    /// `d1 * d2 = gcd(d1 d2, n)`.
    pub fn star(&self, d1: u64, d2: u64) -> u64 {
        rings::gcd_u64(((d1 as u128 * d2 as u128) % self.n as u128) as u64, self.n)
    }

    pub fn index_of(&self, d: u64) -> Option<usize> {
        self.divisors.iter().position(|&x| x == d)
    }
}

pub fn build_divisor_semigroup(n: u64) -> Result<DivisorSemigroup> {
    check_modulus(n)?;
    let divisors = rings::divisors(n);
    let gcd_star = |a: u64, b: u64| {
        // gcd(ab, n) = gcd(ab mod n, n)
        rings::gcd_u64(((a as u128 * b as u128) % n as u128) as u64, n)
    };
    let idx = |d: u64| divisors.iter().position(|&x| x == d);
    let mut mul = Vec::with_capacity(divisors.len());
    for &a in &divisors {
        let mut row = Vec::with_capacity(divisors.len());
        for &b in &divisors {
            let prod = gcd_star(a, b);
            row.push(idx(prod).ok_or_else(|| AlgebraError::Invariant(format!("{a} * {b} = {prod} not in D({n})")))?);
        }
        mul.push(row);
    }
    let leq = divisors.iter().map(|&a| divisors.iter().map(|&b| b % a == 0).collect()).collect();
    let labels = divisors.iter().map(|d| d.to_string()).collect();
    let semigroup = FiniteOrderedSemigroup::new(labels, mul, leq)?;
    Ok(DivisorSemigroup { n, divisors, semigroup })
}

/// Checks `φ(<d>) = d` is an isomorphism `(I(Z_n), ·, ≼) -> (D(n), *, |)`.
pub fn verify_zn_divisor_iso(n: u64) -> CheckReport {
    let instance = format!("n = {n}");
    let built = (|| -> Result<_> {
        let universe = zn_universe(n)?;
        let ideal_sg = build_ideal_semigroup_zn(n)?;
        let dn = build_divisor_semigroup(n)?;
        Ok((universe, ideal_sg, dn))
    })();
    let (universe, ideal_sg, dn) = match built {
        Ok(parts) => parts,
        Err(e) => return CheckReport::fail("I(Z_n) ≅ D(n)", instance, json!({ "error": e.to_string() })),
    };

    let phi = |i: &Ideal| -> u64 {
        match i.generator().as_residue() {
            Some(0) => n,
            Some(v) => v,
            None => unreachable!("ideals of Z_n"),
        }
    };
    let images: Vec<u64> = universe.iter().map(phi).collect();
    let map: Option<Vec<usize>> = images.iter().map(|&d| dn.index_of(d)).collect();

    let bijective = match &map {
        None => Some(json!({ "image_not_a_divisor": images })),
        Some(m) => {
            let distinct: BTreeSet<usize> = m.iter().copied().collect();
            (distinct.len() != dn.divisors.len()).then(|| json!({ "images": images }))
        }
    };

    let mut gcd_table = None;
    'outer: for a in &universe {
        for b in &universe {
            let prod = phi(&ideal_mul(a, b).expect("same ring"));
            let (d1, d2) = (phi(a), phi(b));
            let literal = num_integer::gcd(d1 as u128 * d2 as u128, n as u128) as u64;
            if prod != literal {
                gcd_table = Some(json!({ "d1": d1, "d2": d2, "ideal_product": prod, "gcd": literal }));
                break 'outer;
            }
        }
    }

    // ring-internal divisibility and plain integer divisibility agree on divisors of n
    let mut order_coincides = None;
    'outer2: for a in &universe {
        for b in &universe {
            let ring = ideal_leq(a, b).expect("same ring");
            let integer = phi(b) % phi(a) == 0;
            if ring != integer {
                order_coincides = Some(json!([phi(a), phi(b)]));
                break 'outer2;
            }
        }
    }

    let homomorphism = match &map {
        Some(m) => ordered_semigroup::isomorphism_violation(&ideal_sg, &dn.semigroup, m),
        None => Some(json!("phi is not a map into D(n)")),
    };
    let found = ordered_semigroup::find_isomorphism(&ideal_sg, &dn.semigroup);

    let bijection: Vec<Value> = universe.iter().map(|i| json!([i.to_string(), phi(i)])).collect();
    CheckReport::aggregate(
        "I(Z_n) ≅ D(n)",
        instance.clone(),
        vec![
            CheckReport::from_outcome("phi bijective", instance.clone(), bijective),
            CheckReport::from_outcome("d1 * d2 = gcd(d1 d2, n)", instance.clone(), gcd_table),
            CheckReport::from_outcome("ring order = integer divisibility", instance.clone(), order_coincides),
            CheckReport::from_outcome("phi preserves products and order both ways", instance.clone(), homomorphism),
            CheckReport::from_outcome(
                "isomorphism search succeeds",
                instance,
                found.is_none().then(|| json!("no isomorphism found")),
            ),
        ],
    )
    .with_witness(json!({ "phi": bijection }))
}

struct Law {
    name: &'static str,
    cases: usize,
    counterexample: Option<Value>,
}

impl Law {
    fn new(name: &'static str) -> Self {
        Law { name, cases: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, cx: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(cx());
        }
    }

    fn report(self, instance: &str) -> CheckReport {
        let cases = self.cases;
        CheckReport::from_outcome(self.name, instance, self.counterexample).with_witness(json!({ "cases": cases }))
    }
}

fn naturals_divide(m: &BigInt, k: &BigInt) -> bool {
    if m.is_zero() {
        k.is_zero()
    } else {
        (k % m).is_zero()
    }
}

/// Checks `φ(<m>) = |m|` is an isomorphism `(I(Z), ·, ≼) -> (N⁰, ·, |)` on seeded samples.
pub fn verify_z_naturals_iso(config: &SampleConfig) -> CheckReport {
    let instance = format!("{} samples, seed {}", config.samples, config.seed);
    let mut sampler = Sampler::new(config, 0x2A);
    let ideal = |v: &BigInt| Ideal::new(RingElement::Integer(v.clone())).expect("integers");
    let phi = |i: &Ideal| i.generator().as_integer().expect("integer ideal").clone();

    let mut canonical = Law::new("<m> = <-m> and phi(<m>) = |m|");
    let mut product = Law::new("phi(AB) = phi(A) phi(B)");
    let mut order = Law::new("A ≼ B iff phi(A) | phi(B)");
    let mut injective = Law::new("phi injective");
    let mut surjective = Law::new("phi surjective");

    let mut pairs: Vec<(BigInt, BigInt)> = vec![(BigInt::from(-6), BigInt::from(6))];
    for _ in 0..config.samples {
        let a = sampler.integer();
        let b = if sampler.coin() { &a * sampler.integer() } else { sampler.integer() };
        pairs.push((a, b));
    }
    let k = sampler.integer().abs();
    pairs.push((k.clone(), BigInt::zero()));
    pairs.push((BigInt::zero(), k));

    for (a, b) in &pairs {
        let (ia, ib) = (ideal(a), ideal(b));
        canonical.record(ia == ideal(&-a) && phi(&ia) == a.abs(), || json!(a.to_string()));
        let (pa, pb) = (phi(&ia), phi(&ib));
        product.record(phi(&ideal_mul(&ia, &ib).expect("same ring")) == &pa * &pb, || {
            json!([a.to_string(), b.to_string()])
        });
        order.record(ideal_leq(&ia, &ib).expect("same ring") == naturals_divide(&pa, &pb), || {
            json!([a.to_string(), b.to_string()])
        });
        injective.record(pa != pb || ia == ib, || json!([a.to_string(), b.to_string()]));
        let natural = b.abs();
        surjective.record(phi(&ideal(&natural)) == natural, || json!(natural.to_string()));
    }

    let children = [canonical, product, order, injective, surjective]
        .into_iter()
        .map(|l| l.report(&instance))
        .collect();
    CheckReport::aggregate("I(Z) ≅ (N⁰, ·, |)", instance, children)
}

/// A class `[f]` of `F_p[x]` modulo nonzero scalars, stored as its monic (or zero) member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyClass {
    representative: FpPoly,
}

impl PolyClass {
    pub fn representative(&self) -> &FpPoly {
        &self.representative
    }
}

impl fmt::Display for PolyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// Operations on `F_p[x]/~`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyClassOps {
    p: u64,
}

impl PolyClassOps {
    pub fn new(p: u64) -> Result<Self> {
        if !rings::is_prime(p) {
            return Err(AlgebraError::Domain(format!("{p} is not prime")));
        }
        Ok(PolyClassOps { p })
    }

    pub fn class_of(&self, f: &FpPoly) -> PolyClass {
        PolyClass { representative: f.monic() }
    }

    pub fn class_mul(&self, a: &PolyClass, b: &PolyClass) -> PolyClass {
        self.class_of(&a.representative.mul(&b.representative))
    }

    pub fn class_divides(&self, a: &PolyClass, b: &PolyClass) -> bool {
        match b.representative.div_rem(&a.representative) {
            Some((_, r)) => r.is_zero(),
            None => b.representative.is_zero(),
        }
    }

    /// `ψ(<f>) = [f]`.
    pub fn psi(&self, ideal: &Ideal) -> Result<PolyClass> {
        match ideal.generator() {
            RingElement::Poly(f) if f.characteristic() == self.p => Ok(self.class_of(f)),
            other => Err(AlgebraError::SpecMismatch { left: other.spec(), right: RingSpec::Poly { p: self.p } }),
        }
    }

    /// Checks `ψ` is a well-defined order isomorphism `I(F_p[x]) -> F_p[x]/~` on samples.
    pub fn verify_bijection(&self, config: &SampleConfig) -> CheckReport {
        let instance = format!("F_{}[x], {} samples, seed {}", self.p, config.samples, config.seed);
        let mut sampler = Sampler::new(config, 0x5000 + self.p);
        let ideal = |f: &FpPoly| Ideal::new(RingElement::Poly(f.clone())).expect("poly ring");
        let psi = |i: &Ideal| self.psi(i).expect("same field");

        let mut well_defined = Law::new("[uf] = [f] for units u");
        let mut injective = Law::new("psi injective");
        let mut surjective = Law::new("psi surjective");
        let mut product = Law::new("psi(AB) = psi(A) psi(B)");
        let mut order = Law::new("A ≼ B iff psi(A) | psi(B)");

        for _ in 0..config.samples {
            let f = sampler.poly(self.p);
            let g = if sampler.coin() { f.mul(&sampler.poly(self.p)) } else { sampler.poly(self.p) };
            let u = sampler.nonzero_scalar(self.p);
            well_defined.record(self.class_of(&f.scale(u)) == self.class_of(&f), || json!(f.to_string()));
            let (a, b) = (ideal(&f), ideal(&g));
            let (pa, pb) = (psi(&a), psi(&b));
            injective.record(pa != pb || a == b, || json!([f.to_string(), g.to_string()]));
            let class = self.class_of(&g);
            surjective.record(psi(&ideal(class.representative())) == class, || json!(g.to_string()));
            product.record(psi(&ideal_mul(&a, &b).expect("same ring")) == self.class_mul(&pa, &pb), || {
                json!([f.to_string(), g.to_string()])
            });
            order.record(ideal_leq(&a, &b).expect("same ring") == self.class_divides(&pa, &pb), || {
                json!([f.to_string(), g.to_string()])
            });
        }
        let children = [well_defined, injective, surjective, product, order]
            .into_iter()
            .map(|l| l.report(&instance))
            .collect();
        CheckReport::aggregate("I(F_p[x]) ≅ F_p[x]/~", instance, children)
    }
}

/// Ordered-semigroup and ring laws on seeded samples of an infinite ring (`Z` or `F_p[x]`).
pub fn sampled_law_suite(spec: RingSpec, config: &SampleConfig) -> Result<CheckReport> {
    if spec.is_finite() || !spec.is_commutative() {
        return Err(AlgebraError::UnsupportedFamily { op: "sampled_law_suite", family: spec });
    }
    let instance = format!("I({spec}), {} samples, seed {}", config.samples, config.seed);
    let stream = match spec {
        RingSpec::Poly { p } => 0x1000 + p,
        _ => 0x1000,
    };
    let mut sampler = Sampler::new(config, stream);
    let ideal = |x: &RingElement| Ideal::new(x.clone()).expect("commutative ring");
    let mul = |a: &Ideal, b: &Ideal| ideal_mul(a, b).expect("same ring");
    let leq = |a: &Ideal, b: &Ideal| ideal_leq(a, b).expect("same ring");
    let rmul = |a: &RingElement, b: &RingElement| ring_mul(a, b).expect("same ring");
    let radd = |a: &RingElement, b: &RingElement| ring_add(a, b).expect("same ring");

    let mut ring_laws = Law::new("ring axioms");
    let mut assoc = Law::new("associativity");
    let mut comm = Law::new("commutativity");
    let mut compat = Law::new("compatibility");
    let mut regular = Law::new("ordered regularity with X = <1>");
    let mut idempotent = Law::new("ordered idempotent");
    let mut associates = Law::new("generator independence");

    for _ in 0..config.samples {
        let (x, y, z) = (sampler.element(spec), sampler.element(spec), sampler.element(spec));
        let ring_ok = rmul(&rmul(&x, &y), &z) == rmul(&x, &rmul(&y, &z))
            && rmul(&x, &y) == rmul(&y, &x)
            && radd(&radd(&x, &y), &z) == radd(&x, &radd(&y, &z))
            && rmul(&x, &radd(&y, &z)) == radd(&rmul(&x, &y), &rmul(&x, &z));
        ring_laws.record(ring_ok, || json!([x.to_string(), y.to_string(), z.to_string()]));

        let (a, c) = (ideal(&x), ideal(&z));
        // half the time force a ≼ b so compatibility is exercised
        let b = if sampler.coin() { mul(&a, &ideal(&y)) } else { ideal(&y) };
        let show = || json!([a.to_string(), b.to_string(), c.to_string()]);
        assoc.record(mul(&mul(&a, &b), &c) == mul(&a, &mul(&b, &c)), show);
        comm.record(mul(&a, &b) == mul(&b, &a), show);
        compat.record(!leq(&a, &b) || (leq(&mul(&a, &c), &mul(&b, &c)) && leq(&mul(&c, &a), &mul(&c, &b))), show);
        regular.record(ideals::ordered_regularity_witness(&a).is_ok(), || json!(a.to_string()));
        idempotent.record(ideals::is_ordered_idempotent(&a).unwrap_or(false), || json!(a.to_string()));
        let u = sampler.unit(spec);
        associates.record(ideal(&rmul(&u, &x)) == a, || json!([x.to_string(), u.to_string()]));
    }

    let mut children: Vec<CheckReport> = [ring_laws, assoc, comm, compat, regular, idempotent, associates]
        .into_iter()
        .map(|l| l.report(&instance))
        .collect();
    match spec {
        RingSpec::Integer => children.push(verify_z_naturals_iso(config)),
        RingSpec::Poly { p } => children.push(PolyClassOps::new(p)?.verify_bijection(config)),
        _ => {}
    }
    Ok(CheckReport::aggregate("sampled ideal semigroup laws", instance, children))
}

fn show_set(set: &BTreeSet<RingElement>) -> Value {
    json!(set.iter().map(|e| e.to_string()).collect::<Vec<_>>())
}

/// Reproduces `<E11><E22> ≠ <E11 E22>` in upper triangular 2x2 matrices over `F_p`.
pub fn run_counterexample(p: u64) -> Result<CheckReport> {
    let spec = RingSpec::triangular(p)?;
    let instance = spec.to_string();
    let e11 = RingElement::Triangular(TriMatrix::e11(p));
    let e12 = RingElement::Triangular(TriMatrix::e12(p));
    let e22 = RingElement::Triangular(TriMatrix::e22(p));

    let i1 = two_sided_ideal_closure(&e11)?;
    let i2 = two_sided_ideal_closure(&e22)?;
    let product = set_ideal_product(&i1, &i2)?;
    let closure_e12 = two_sided_ideal_closure(&e12)?;
    let closure_of_product = two_sided_ideal_closure(&ring_mul(&e11, &e22)?)?;
    let zero: BTreeSet<RingElement> = BTreeSet::from([spec.zero()]);
    let square = set_ideal_product(&i1, &i1)?;

    let children = vec![
        CheckReport::from_outcome(
            "<E11><E22> = <E12>",
            instance.clone(),
            (product != closure_e12).then(|| show_set(&product)),
        ),
        CheckReport::from_outcome(
            "<E11 E22> = {0}",
            instance.clone(),
            (closure_of_product != zero).then(|| show_set(&closure_of_product)),
        ),
        CheckReport::from_outcome(
            "<E11><E22> ≠ <E11 E22>",
            instance.clone(),
            (product == closure_of_product).then(|| show_set(&product)),
        ),
        CheckReport::from_outcome(
            "|<E12>| = p",
            instance.clone(),
            (closure_e12.len() as u64 != p).then(|| json!(closure_e12.len())),
        ),
        CheckReport::from_outcome(
            "<E11><E11> = <E11> ≠ {0}",
            instance.clone(),
            (square != i1 || square == zero).then(|| show_set(&square)),
        ),
    ];
    Ok(CheckReport::aggregate("noncommutative product counterexample", instance, children).with_witness(json!({
        "I1": show_set(&i1),
        "I2": show_set(&i2),
        "I1_I2": show_set(&product),
        "closure_E11_E22": show_set(&closure_of_product),
    })))
}

fn build_failure(check: &str, instance: String, e: AlgebraError) -> CheckReport {
    CheckReport::fail(check, instance, json!({ "error": e.to_string() }))
}

/// `I(Z_n)` is an ordered semigroup and every element has ordered-regularity witness `<1>`.
pub fn verify_zn_ordered_regular(n: u64) -> CheckReport {
    let instance = format!("I(Z_{n})");
    let (universe, s) = match zn_universe(n).and_then(|u| Ok((u, build_ideal_semigroup_zn(n)?))) {
        Ok(parts) => parts,
        Err(e) => return build_failure("regular ordered semigroup", instance, e),
    };
    let one = Ideal::unit(universe[0].spec()).expect("modular ring");
    let mut missing = None;
    for a in &universe {
        match ideals::ordered_regularity_witness(a) {
            Ok(x) if x == one => {}
            Ok(x) => {
                missing = Some(json!({ "element": divisor_label(a), "witness": divisor_label(&x) }));
                break;
            }
            Err(e) => {
                missing = Some(json!({ "element": divisor_label(a), "error": e.to_string() }));
                break;
            }
        }
    }
    CheckReport::aggregate(
        "regular ordered semigroup",
        instance.clone(),
        vec![ordered_semigroup::validate(&s), CheckReport::from_outcome("A ≼ A<1>A for all A", instance, missing)],
    )
}

/// Each of L, R, J, H, D on `I(Z_n)` is a single class of size `τ(n)`.
pub fn verify_greens_universal(n: u64) -> CheckReport {
    let instance = format!("I(Z_{n})");
    let s = match build_ideal_semigroup_zn(n) {
        Ok(s) => s,
        Err(e) => return build_failure("Green's relations universal", instance, e),
    };
    let tau = rings::divisors(n).len();
    let greens = ordered_semigroup::greens_relations(&s);
    let show = |p: &ordered_semigroup::Partition| -> Value {
        json!(p
            .classes()
            .iter()
            .map(|c| c.iter().map(|&i| s.label(i).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    };
    let relations = [("L", &greens.l), ("R", &greens.r), ("J", &greens.j), ("H", &greens.h), ("D", &greens.d)];
    let children = relations
        .iter()
        .map(|(name, p)| {
            let ok = p.len() == 1 && p.classes()[0].len() == tau;
            CheckReport::from_outcome(format!("{name} universal"), instance.clone(), (!ok).then(|| show(p)))
        })
        .collect();
    CheckReport::aggregate("Green's relations universal", instance, children)
        .with_witness(json!({ "classes": 1, "class_size": tau }))
}

/// `<a> = <a>X<a>` has a solution in `I(Z_n)` iff `a = axa` has one in `Z_n`, for every `a`.
pub fn verify_von_neumann_correspondence(n: u64) -> CheckReport {
    let instance = format!("Z_{n}");
    let universe = match zn_universe(n) {
        Ok(u) => u,
        Err(e) => return build_failure("von Neumann regular iff <a> regular", instance, e),
    };
    let mut mismatch = None;
    let mut regular = 0usize;
    for a in 0..n {
        let in_ring = (0..n).any(|x| (a as u128 * x as u128 % n as u128 * a as u128 % n as u128) as u64 == a);
        let ideal = Ideal::new(RingElement::Residue { n, value: a }).expect("modular ring");
        let in_semigroup = match ideals::semigroup_regular_exact(&ideal, &universe) {
            Ok(found) => found.witness().is_some(),
            Err(e) => {
                mismatch = Some(json!({ "a": a, "error": e.to_string() }));
                break;
            }
        };
        regular += in_ring as usize;
        if in_ring != in_semigroup {
            mismatch = Some(json!({ "a": a, "ring": in_ring, "semigroup": in_semigroup }));
            break;
        }
    }
    CheckReport::from_outcome("von Neumann regular iff <a> regular", instance, mismatch)
        .with_witness(json!({ "regular_elements": regular }))
}

#[cfg(test)]
pub(crate) fn zn_ideal(n: u64, v: i64) -> Ideal {
    Ideal::new(RingElement::residue(n, v)).expect("modular ring")
}
