//! The ordered semigroup of principal ideals of a commutative principal ideal ring.
//!
//! An ideal is stored as its canonical generator, so ideal equality is
//! generator equality. Multiplication is `<a><b> = <ab>` and the order is
//! `<a> ≼ <b>` iff `a | b`; note that this is the reverse of inclusion.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::ordered_semigroup::{self, FiniteOrderedSemigroup};
use crate::report::CheckReport;
use crate::rings::{
    self, canonical_generator, divides, ring_add, ring_mul, FpPoly, RingElement, RingSpec,
};
use crate::sampling::{SampleConfig, Sampler};

/// A principal ideal `<gen>` with `gen` canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct Ideal {
    gen: RingElement,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    ring: RingSpec,
    generator: Value,
}

impl From<Ideal> for IdealRepr {
    fn from(i: Ideal) -> Self {
        IdealRepr { ring: i.spec(), generator: rings::element_value(&i.gen) }
    }
}

impl TryFrom<IdealRepr> for Ideal {
    type Error = AlgebraError;

    fn try_from(r: IdealRepr) -> Result<Self> {
        Ideal::new(rings::element_from_value(r.ring, &r.generator)?)
    }
}

impl Ideal {
    /// The ideal generated by `gen`; the generator is replaced by its canonical associate.
    pub fn new(gen: RingElement) -> Result<Self> {
        Ok(Ideal { gen: canonical_generator(&gen)? })
    }

    /// `<1>`, the whole ring.
    pub fn unit(spec: RingSpec) -> Result<Self> {
        Ideal::new(spec.one())
    }

    /// `<0>`.
    pub fn zero(spec: RingSpec) -> Result<Self> {
        Ideal::new(spec.zero())
    }

    pub fn spec(&self) -> RingSpec {
        self.gen.spec()
    }

    pub fn generator(&self) -> &RingElement {
        &self.gen
    }

    pub fn is_zero(&self) -> bool {
        self.gen.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        rings::is_unit(&self.gen)
    }

    /// Whether `x` lies in this ideal.
    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        divides(&self.gen, x)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.gen)
    }
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.spec() != b.spec() {
        return Err(AlgebraError::SpecMismatch { left: a.spec(), right: b.spec() });
    }
    Ok(())
}

/// `<a><b> = <ab>`.
pub fn ideal_mul(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    Ideal::new(ring_mul(&a.gen, &b.gen)?)
}

/// The order `A ≼ B`, i.e. `a | b`.
pub fn ideal_leq(a: &Ideal, b: &Ideal) -> Result<bool> {
    same_ring(a, b)?;
    divides(&a.gen, &b.gen)
}

/// Set inclusion `A ⊆ B`, i.e. `b | a`. Dual to [`ideal_leq`].
pub fn ideal_subset(a: &Ideal, b: &Ideal) -> Result<bool> {
    same_ring(a, b)?;
    divides(&b.gen, &a.gen)
}

/// Returns `X = <1>` after confirming `A ≼ AXA`.
pub fn ordered_regularity_witness(a: &Ideal) -> Result<Ideal> {
    let x = Ideal::unit(a.spec())?;
    let axa = ideal_mul(&ideal_mul(a, &x)?, a)?;
    if !ideal_leq(a, &axa)? {
        return Err(AlgebraError::Invariant(format!("{a} is not below {a}<1>{a} = {axa}")));
    }
    Ok(x)
}

/// `A ≼ A²`.
pub fn is_ordered_idempotent(a: &Ideal) -> Result<bool> {
    ideal_leq(a, &ideal_mul(a, a)?)
}

/// Some `x` with `a = a x a`, if one exists.
///
/// Exhaustive over `Z_n`; closed form in `Z` (`a ∈ {0, ±1}`) and `F_p[x]`
/// (`a` zero or a unit).
pub fn von_neumann_regular(a: &RingElement) -> Result<Option<RingElement>> {
    Ok(match a {
        RingElement::Integer(v) => {
            let small = i64::try_from(v).ok().filter(|v| v.abs() <= 1);
            small.map(RingElement::int)
        }
        RingElement::Residue { n, value } => (0..*n)
            .find(|&x| rings::mod_mul(rings::mod_mul(*value, x, *n), *value, *n) == *value)
            .map(|x| RingElement::Residue { n: *n, value: x }),
        RingElement::Poly(f) => match f.leading() {
            None => Some(a.clone()),
            Some(lead) if f.is_unit() => {
                let inv = rings::mod_inv(lead, f.characteristic()).expect("prime field");
                Some(RingElement::Poly(FpPoly::constant(f.characteristic(), inv)))
            }
            Some(_) => None,
        },
        RingElement::Triangular(_) => {
            return Err(AlgebraError::UnsupportedFamily { op: "von_neumann_regular", family: a.spec() })
        }
    })
}

/// Outcome of a search for `X` with `A = AXA`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularSearch {
    Found(Ideal),
    /// The pool was not all of `I(R)`, so absence is not proven.
    NotFoundInPool,
    /// The pool covered all of `I(R)` and no witness exists.
    ProvenAbsent,
}

impl RegularSearch {
    pub fn witness(&self) -> Option<&Ideal> {
        match self {
            RegularSearch::Found(x) => Some(x),
            _ => None,
        }
    }
}

/// Searches `universe` for `X` with `A = AXA` exactly.
pub fn semigroup_regular_exact(a: &Ideal, universe: &[Ideal]) -> Result<RegularSearch> {
    if universe.is_empty() {
        return Err(AlgebraError::Domain("empty universe".into()));
    }
    for x in universe {
        if ideal_mul(&ideal_mul(a, x)?, a)? == *a {
            return Ok(RegularSearch::Found(x.clone()));
        }
    }
    let complete = match all_ideals(a.spec()) {
        Some(all) => {
            let pool: BTreeSet<&Ideal> = universe.iter().collect();
            all.iter().all(|i| pool.contains(i))
        }
        None => false,
    };
    Ok(if complete { RegularSearch::ProvenAbsent } else { RegularSearch::NotFoundInPool })
}

/// All ideals of a finite commutative ring: `<d>` for each divisor `d` of `n`,
/// ascending by `d` (so `<0> = <n>` comes last).
pub fn all_ideals(spec: RingSpec) -> Option<Vec<Ideal>> {
    match spec {
        RingSpec::Modular { n } => Some(
            rings::divisors(n)
                .into_iter()
                .map(|d| Ideal { gen: RingElement::Residue { n, value: d % n } })
                .collect(),
        ),
        _ => None,
    }
}

/// The finite ordered semigroup `(universe, ·, ≼)`; `universe` must be closed under products.
pub fn semigroup_from_ideals(universe: &[Ideal], labels: Option<Vec<String>>) -> Result<FiniteOrderedSemigroup> {
    let first = universe.first().ok_or_else(|| AlgebraError::Domain("empty universe".into()))?;
    for i in universe {
        same_ring(first, i)?;
    }
    let distinct: BTreeSet<&Ideal> = universe.iter().collect();
    if distinct.len() != universe.len() {
        return Err(AlgebraError::Domain("universe lists an ideal twice".into()));
    }
    let index = |x: &Ideal| universe.iter().position(|y| y == x);
    let mut mul = Vec::with_capacity(universe.len());
    let mut leq = Vec::with_capacity(universe.len());
    for a in universe {
        let mut mrow = Vec::with_capacity(universe.len());
        let mut lrow = Vec::with_capacity(universe.len());
        for b in universe {
            let ab = ideal_mul(a, b)?;
            mrow.push(index(&ab).ok_or_else(|| {
                AlgebraError::Domain(format!("universe not closed: {a}{b} = {ab}"))
            })?);
            lrow.push(ideal_leq(a, b)?);
        }
        mul.push(mrow);
        leq.push(lrow);
    }
    let labels = labels.unwrap_or_else(|| universe.iter().map(|i| i.to_string()).collect());
    FiniteOrderedSemigroup::new(labels, mul, leq)
}

/// Checks that `{<1>}` is an inverse transversal of the finite ideal semigroup on `universe`.
pub fn check_inverse_transversal(universe: &[Ideal]) -> CheckReport {
    let instance = match universe.first() {
        Some(i) => format!("I({})", i.spec()),
        None => "empty".to_string(),
    };
    let built = semigroup_from_ideals(universe, None).and_then(|s| {
        let one = Ideal::unit(universe[0].spec())?;
        let idx = universe
            .iter()
            .position(|i| *i == one)
            .ok_or_else(|| AlgebraError::Domain("universe lacks <1>".into()))?;
        Ok((s, idx))
    });
    match built {
        Ok((s, one)) => ordered_semigroup::check_inverse_transversal(&s, &[one], &instance),
        Err(e) => CheckReport::fail("inverse transversal", instance, json!({ "error": e.to_string() })),
    }
}

type ElementMap = Arc<dyn Fn(&RingElement) -> RingElement + Send + Sync>;

/// A ring isomorphism given by closed-form forward and backward element maps.
#[derive(Clone)]
pub struct RingIso {
    name: String,
    source: RingSpec,
    target: RingSpec,
    forward: ElementMap,
    backward: ElementMap,
}

impl fmt::Debug for RingIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingIso")
            .field("name", &self.name)
            .field("source", &self.source)
            .field("target", &self.target)
            .finish()
    }
}

impl RingIso {
    pub fn identity(spec: RingSpec) -> Self {
        RingIso::from_maps(format!("id on {spec}"), spec, spec, |x| x.clone(), |x| x.clone())
    }

    /// The `F_p`-algebra automorphism `x ↦ αx + β` of `F_p[x]`, `α ≠ 0`.
    pub fn poly_affine(p: u64, alpha: u64, beta: u64) -> Result<Self> {
        let spec = RingSpec::poly(p)?;
        let (alpha, beta) = (alpha % p, beta % p);
        if alpha == 0 {
            return Err(AlgebraError::Domain("x -> αx + β needs α ≠ 0".into()));
        }
        let inv = rings::mod_inv(alpha, p).expect("prime field");
        let fwd = FpPoly::new(p, vec![beta, alpha]);
        // x ↦ α⁻¹(x − β)
        let bwd = FpPoly::new(p, vec![rings::mod_mul(inv, (p - beta) % p, p), inv]);
        let substitute = |inner: FpPoly| {
            move |e: &RingElement| match e {
                RingElement::Poly(f) => RingElement::Poly(f.compose(&inner)),
                other => other.clone(),
            }
        };
        Ok(RingIso::from_maps(format!("x -> {fwd} on {spec}"), spec, spec, substitute(fwd), substitute(bwd)))
    }

    /// Wraps arbitrary element maps. Nothing is verified here; see [`verify_induced_iso`].
    pub fn from_maps<F, B>(name: impl Into<String>, source: RingSpec, target: RingSpec, forward: F, backward: B) -> Self
    where
        F: Fn(&RingElement) -> RingElement + Send + Sync + 'static,
        B: Fn(&RingElement) -> RingElement + Send + Sync + 'static,
    {
        RingIso { name: name.into(), source, target, forward: Arc::new(forward), backward: Arc::new(backward) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> RingSpec {
        self.source
    }

    pub fn target(&self) -> RingSpec {
        self.target
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        if x.spec() != self.source {
            return Err(AlgebraError::SpecMismatch { left: x.spec(), right: self.source });
        }
        Ok((self.forward)(x))
    }

    pub fn invert(&self, y: &RingElement) -> Result<RingElement> {
        if y.spec() != self.target {
            return Err(AlgebraError::SpecMismatch { left: y.spec(), right: self.target });
        }
        Ok((self.backward)(y))
    }
}

/// `ψ(<a>) = <φ(a)>`.
pub fn induced_iso_apply(iso: &RingIso, a: &Ideal) -> Result<Ideal> {
    Ideal::new(iso.apply(a.generator())?)
}

/// Collects the first counterexample of a law over a sequence of cases.
struct Law {
    name: &'static str,
    counterexample: Option<Value>,
}

impl Law {
    fn new(name: &'static str) -> Self {
        Law { name, counterexample: None }
    }

    fn record(&mut self, ok: bool, cx: impl FnOnce() -> Value) {
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(cx());
        }
    }

    fn report(self, instance: &str) -> CheckReport {
        CheckReport::from_outcome(self.name, instance, self.counterexample)
    }
}

/// Verifies that `ψ` induced by `iso` is an isomorphism of ordered semigroups.
///
/// Finite rings are checked over every element and every ideal; infinite rings
/// over `config.samples` seeded draws. Checked: `φ` round-trips and is a ring
/// homomorphism, `ψ` is independent of the generator, injective, surjective,
/// multiplicative, and preserves and reflects `≼`.
pub fn verify_induced_iso(iso: &RingIso, config: &SampleConfig) -> CheckReport {
    let instance = iso.name().to_string();
    let source = iso.source();
    let target = iso.target();
    let mut sampler = Sampler::new(config, 0x150);

    let (elements, targets, pairs): (Vec<RingElement>, Vec<RingElement>, Vec<(RingElement, RingElement)>) =
        match (source.elements(), target.elements()) {
            (Some(src), Some(tgt)) => {
                let pairs = src.iter().flat_map(|a| src.iter().map(move |b| (a.clone(), b.clone()))).collect();
                (src, tgt, pairs)
            }
            _ => {
                let src: Vec<RingElement> = (0..config.samples).map(|_| sampler.element(source)).collect();
                let tgt: Vec<RingElement> = (0..config.samples).map(|_| sampler.element(target)).collect();
                let pairs = (0..config.samples)
                    .map(|_| {
                        let a = sampler.element(source);
                        let b = if sampler.coin() {
                            ring_mul(&a, &sampler.element(source)).expect("same ring")
                        } else {
                            sampler.element(source)
                        };
                        (a, b)
                    })
                    .collect();
                (src, tgt, pairs)
            }
        };

    let fwd = |x: &RingElement| iso.apply(x).expect("source element");
    let bwd = |y: &RingElement| iso.invert(y).expect("target element");
    let ideal = |x: &RingElement| Ideal::new(x.clone()).expect("commutative ring");
    let psi = |i: &Ideal| induced_iso_apply(iso, i).expect("source ideal");

    let mut round_trip = Law::new("phi round-trips");
    let mut hom = Law::new("phi is a ring homomorphism");
    let mut independent = Law::new("psi independent of generator");
    let mut surjective = Law::new("psi surjective");
    let mut injective = Law::new("psi injective");
    let mut multiplicative = Law::new("psi multiplicative");
    let mut order = Law::new("psi preserves and reflects order");

    let one_ok = fwd(&source.one()) == target.one();
    hom.record(one_ok, || json!({ "one_maps_to": fwd(&source.one()).to_string() }));

    for a in &elements {
        round_trip.record(bwd(&fwd(a)) == *a, || json!({ "source": a.to_string() }));
        let u = sampler.unit(source);
        let ua = ring_mul(&u, a).expect("same ring");
        independent.record(psi(&ideal(a)) == psi(&ideal(&ua)), || {
            json!({ "generator": a.to_string(), "associate": ua.to_string() })
        });
    }
    for c in &targets {
        round_trip.record(fwd(&bwd(c)) == *c, || json!({ "target": c.to_string() }));
        let preimage = ideal(&bwd(c));
        surjective.record(psi(&preimage) == ideal(c), || json!({ "target_ideal": ideal(c).to_string() }));
    }
    for (a, b) in &pairs {
        let sum_ok = fwd(&ring_add(a, b).expect("same ring")) == ring_add(&fwd(a), &fwd(b)).expect("same ring");
        let prod_ok = fwd(&ring_mul(a, b).expect("same ring")) == ring_mul(&fwd(a), &fwd(b)).expect("same ring");
        hom.record(sum_ok && prod_ok, || json!([a.to_string(), b.to_string()]));

        let (ia, ib) = (ideal(a), ideal(b));
        let (pa, pb) = (psi(&ia), psi(&ib));
        injective.record(pa != pb || ia == ib, || json!([ia.to_string(), ib.to_string()]));
        let lhs = psi(&ideal_mul(&ia, &ib).expect("same ring"));
        let rhs = ideal_mul(&pa, &pb).expect("same ring");
        multiplicative.record(lhs == rhs, || {
            json!({ "pair": [ia.to_string(), ib.to_string()], "psi_of_product": lhs.to_string(), "product_of_psi": rhs.to_string() })
        });
        let before = ideal_leq(&ia, &ib).expect("same ring");
        let after = ideal_leq(&pa, &pb).expect("same ring");
        order.record(before == after, || json!([ia.to_string(), ib.to_string()]));
    }

    let children = [round_trip, hom, independent, surjective, injective, multiplicative, order]
        .into_iter()
        .map(|law| law.report(&instance))
        .collect();
    CheckReport::aggregate("induced ideal isomorphism", instance, children)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> Ideal {
        Ideal::new(RingElement::int(v)).unwrap()
    }

    fn z12(v: i64) -> Ideal {
        Ideal::new(RingElement::residue(12, v)).unwrap()
    }

    fn f3(c: &[i64]) -> Ideal {
        Ideal::new(RingElement::poly(3, c)).unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(ideal_mul(&z(2), &z(3)).unwrap(), z(6));
        assert_eq!(ideal_mul(&z12(4), &z12(6)).unwrap(), z12(0));
        for a in [z12(0), z12(2), z12(3), z12(4), z12(6), z12(1)] {
            assert_eq!(ideal_mul(&z12(1), &a).unwrap(), a);
        }
        assert!(ideal_mul(&z(2), &z12(2)).is_err());
    }

    #[test]
    fn order_and_inclusion_examples() {
        assert!(ideal_leq(&z(2), &z(6)).unwrap());
        assert!(ideal_leq(&z(7), &z(0)).unwrap());
        assert!(!ideal_leq(&z12(4), &z12(2)).unwrap());
        assert!(ideal_subset(&z(6), &z(2)).unwrap());
        assert!(ideal_subset(&z(0), &z(5)).unwrap());
        assert!(!ideal_subset(&z12(2), &z12(4)).unwrap());
    }

    #[test]
    fn generators_are_canonical() {
        assert_eq!(z(-6), z(6));
        assert_eq!(z12(8), z12(4));
        assert_eq!(z12(10), z12(2));
        assert_eq!(f3(&[2, 2]), f3(&[1, 1]));
        assert!(Ideal::new(RingElement::tri(2, 1, 0, 0)).is_err());
    }

    #[test]
    fn regularity_witness_examples() {
        assert_eq!(ordered_regularity_witness(&z(6)).unwrap(), z(1));
        assert_eq!(ordered_regularity_witness(&z12(0)).unwrap(), z12(1));
        assert_eq!(ordered_regularity_witness(&f3(&[1, 1])).unwrap(), f3(&[1]));
    }

    #[test]
    fn ordered_idempotent_examples() {
        assert!(is_ordered_idempotent(&z(5)).unwrap());
        assert!(is_ordered_idempotent(&z(1)).unwrap());
        assert!(is_ordered_idempotent(&z12(6)).unwrap());
    }

    #[test]
    fn von_neumann_examples() {
        assert_eq!(von_neumann_regular(&RingElement::residue(12, 4)).unwrap(), Some(RingElement::residue(12, 1)));
        assert_eq!(von_neumann_regular(&RingElement::int(1)).unwrap(), Some(RingElement::int(1)));
        assert_eq!(von_neumann_regular(&RingElement::int(-1)).unwrap(), Some(RingElement::int(-1)));
        assert_eq!(von_neumann_regular(&RingElement::int(0)).unwrap(), Some(RingElement::int(0)));
        assert_eq!(von_neumann_regular(&RingElement::int(2)).unwrap(), None);
        assert_eq!(von_neumann_regular(&RingElement::residue(12, 2)).unwrap(), None);
        assert_eq!(von_neumann_regular(&RingElement::poly(5, &[3])).unwrap(), Some(RingElement::poly(5, &[2])));
        assert_eq!(von_neumann_regular(&RingElement::poly(5, &[0, 1])).unwrap(), None);
    }

    #[test]
    fn regular_exact_examples() {
        let all = all_ideals(RingSpec::Modular { n: 12 }).unwrap();
        assert_eq!(semigroup_regular_exact(&z12(4), &all).unwrap(), RegularSearch::Found(z12(1)));
        assert_eq!(semigroup_regular_exact(&z12(2), &all).unwrap(), RegularSearch::ProvenAbsent);
        assert_eq!(semigroup_regular_exact(&z12(1), &all).unwrap(), RegularSearch::Found(z12(1)));
        assert_eq!(semigroup_regular_exact(&z12(2), &all[..3]).unwrap(), RegularSearch::NotFoundInPool);
        assert_eq!(semigroup_regular_exact(&z(1), &[z(1)]).unwrap(), RegularSearch::Found(z(1)));
        assert_eq!(semigroup_regular_exact(&z(2), &[z(1), z(3)]).unwrap(), RegularSearch::NotFoundInPool);
        assert!(semigroup_regular_exact(&z(1), &[]).is_err());
    }

    #[test]
    fn induced_iso_examples() {
        let id = RingIso::identity(RingSpec::Modular { n: 12 });
        assert_eq!(induced_iso_apply(&id, &z12(4)).unwrap(), z12(4));
        let shift = RingIso::poly_affine(3, 1, 1).unwrap();
        assert_eq!(induced_iso_apply(&shift, &f3(&[0, 1])).unwrap(), f3(&[1, 1]));
        let scale = RingIso::poly_affine(3, 2, 0).unwrap();
        // x + 1 ↦ 2x + 1, monic form x + 2
        assert_eq!(induced_iso_apply(&scale, &f3(&[1, 1])).unwrap(), f3(&[2, 1]));
        assert!(induced_iso_apply(&shift, &z(1)).is_err());
        assert!(RingIso::poly_affine(3, 0, 1).is_err());
    }

    #[test]
    fn verify_identity_and_affine_isos() {
        let cfg = SampleConfig::new(300, 42);
        assert!(verify_induced_iso(&RingIso::identity(RingSpec::Modular { n: 12 }), &cfg).passed);
        assert!(verify_induced_iso(&RingIso::poly_affine(3, 1, 1).unwrap(), &cfg).passed);
        assert!(verify_induced_iso(&RingIso::poly_affine(5, 3, 2).unwrap(), &cfg).passed);
        assert!(verify_induced_iso(&RingIso::identity(RingSpec::Integer), &cfg).passed);
    }

    #[test]
    fn corrupted_maps_are_caught() {
        let spec = RingSpec::Poly { p: 3 };
        let cfg = SampleConfig::new(300, 42);
        let square = FpPoly::new(3, vec![0, 0, 1]);
        let sub_square = RingIso::from_maps(
            "x -> x^2",
            spec,
            spec,
            move |e| RingElement::Poly(e.as_poly().unwrap().compose(&square)),
            |e| e.clone(),
        );
        let r = verify_induced_iso(&sub_square, &cfg);
        assert!(!r.passed);
        let failed: Vec<&str> = r.failures().iter().map(|c| c.check.as_str()).collect();
        assert!(failed.contains(&"phi round-trips") && failed.contains(&"psi surjective"));

        let plus_one = RingIso::from_maps(
            "f -> f + 1",
            spec,
            spec,
            |e| ring_add(e, &RingElement::poly(3, &[1])).unwrap(),
            |e| ring_add(e, &RingElement::poly(3, &[2])).unwrap(),
        );
        let r = verify_induced_iso(&plus_one, &cfg);
        let failed: Vec<&str> = r.failures().iter().map(|c| c.check.as_str()).collect();
        assert!(failed.contains(&"psi multiplicative"));
    }

    #[test]
    fn transversal_examples() {
        for n in [12u64, 2, 30] {
            let all = all_ideals(RingSpec::Modular { n }).unwrap();
            assert!(check_inverse_transversal(&all).passed, "n = {n}");
        }
        let all = all_ideals(RingSpec::Modular { n: 12 }).unwrap();
        assert!(!check_inverse_transversal(&all[1..]).passed);
    }

    #[test]
    fn semigroup_from_ideals_rejects_open_universes() {
        let all = all_ideals(RingSpec::Modular { n: 12 }).unwrap();
        assert_eq!(semigroup_from_ideals(&all, None).unwrap().size(), 6);
        assert!(semigroup_from_ideals(&[z12(2), z12(1)], None).is_err());
        assert!(semigroup_from_ideals(&[z12(1), z12(1)], None).is_err());
    }

    #[test]
    fn ideal_json_shape() {
        let v = serde_json::to_value(z12(8)).unwrap();
        assert_eq!(v, json!({"ring": {"kind": "modular", "n": 12}, "generator": 4}));
        let back: Ideal = serde_json::from_value(json!({"ring": {"kind": "integer"}, "generator": "-6"})).unwrap();
        assert_eq!(back, z(6));
    }
}
