//! The category of ideals with R-linear maps, its inclusion subcategory, the
//! preorder category of the divisibility order, and the contravariant functor
//! from the latter to the former.
//!
//! Composition is diagrammatic throughout: `compose(f, g)` is "f then g".

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::error::{AlgebraError, Result};
use crate::ideals::{ideal_leq, ideal_subset, Ideal};
use crate::report::CheckReport;
use crate::rings::{self, divides, ring_mul, FpPoly, RingElement};

/// An R-linear map `<a> -> <b>`, stored as the image of the domain generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearMorphism {
    dom: Ideal,
    cod: Ideal,
    image: RingElement,
}

impl fmt::Display for LinearMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} ({} ↦ {})", self.dom, self.cod, self.dom.generator(), self.image)
    }
}

fn ensure_same(dom: &Ideal, cod: &Ideal, image: &RingElement) -> Result<()> {
    for other in [cod.spec(), image.spec()] {
        if dom.spec() != other {
            return Err(AlgebraError::SpecMismatch { left: dom.spec(), right: other });
        }
    }
    Ok(())
}

/// Some `r` with `x = r a`, if `x ∈ <a>`.
pub fn solve_multiplier(a: &RingElement, x: &RingElement) -> Result<Option<RingElement>> {
    if !divides(a, x)? {
        return Ok(None);
    }
    Ok(Some(match (a, x) {
        (RingElement::Integer(a), RingElement::Integer(x)) => {
            if a == &0.into() {
                RingElement::int(0)
            } else {
                RingElement::Integer(x / a)
            }
        }
        (RingElement::Residue { n, value: a }, RingElement::Residue { value: x, .. }) => {
            let g = rings::gcd_u64(*a, *n);
            let m = n / g;
            let inv = rings::mod_inv((a / g) % m, m).unwrap_or(0);
            RingElement::Residue { n: *n, value: rings::mod_mul((x / g) % m, inv, m) }
        }
        (RingElement::Poly(a), RingElement::Poly(x)) => match x.div_rem(a) {
            Some((q, _)) => RingElement::Poly(q),
            None => RingElement::Poly(FpPoly::zero(a.characteristic())),
        },
        _ => unreachable!("divides accepted the pair"),
    }))
}

impl LinearMorphism {
    /// The map `r a ↦ r image`. Fails if `image ∉ cod` or if some `r` kills `a`
    /// but not `image` (then the assignment is not a function).
    pub fn from_image(dom: Ideal, cod: Ideal, image: RingElement) -> Result<Self> {
        ensure_same(&dom, &cod, &image)?;
        if !cod.contains(&image)? {
            return Err(AlgebraError::Domain(format!("{image} is not in {cod}")));
        }
        if let Some(r) = annihilator_violation(dom.generator(), &image)? {
            return Err(AlgebraError::IllDefinedMorphism {
                dom: dom.to_string(),
                cod: cod.to_string(),
                image: image.to_string(),
                witness: r.to_string(),
            });
        }
        Ok(LinearMorphism { dom, cod, image })
    }

    pub fn identity(a: &Ideal) -> Self {
        LinearMorphism { dom: a.clone(), cod: a.clone(), image: a.generator().clone() }
    }

    pub fn zero(dom: &Ideal, cod: &Ideal) -> Result<Self> {
        LinearMorphism::from_image(dom.clone(), cod.clone(), dom.spec().zero())
    }

    pub fn dom(&self) -> &Ideal {
        &self.dom
    }

    pub fn cod(&self) -> &Ideal {
        &self.cod
    }

    pub fn image(&self) -> &RingElement {
        &self.image
    }

    /// `f(x)` for `x ∈ dom`.
    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        let r = solve_multiplier(self.dom.generator(), x)?
            .ok_or_else(|| AlgebraError::Domain(format!("{x} is not in {}", self.dom)))?;
        ring_mul(&r, &self.image)
    }
}

/// First `r` (smallest residue) with `r a = 0` but `r image ≠ 0`.
fn annihilator_violation(a: &RingElement, image: &RingElement) -> Result<Option<RingElement>> {
    match (a, image) {
        (RingElement::Residue { n, value: a }, RingElement::Residue { value: y, .. }) => Ok((0..*n)
            .find(|&r| rings::mod_mul(r, *a, *n) == 0 && rings::mod_mul(r, *y, *n) != 0)
            .map(|r| RingElement::Residue { n: *n, value: r })),
        // domains: only a = 0 has a nontrivial annihilator
        _ => Ok((a.is_zero() && !image.is_zero()).then(|| a.spec().one())),
    }
}

/// The morphism `A -> B` with `a ↦ c b`.
pub fn make_morphism(a: &Ideal, b: &Ideal, c: &RingElement) -> Result<LinearMorphism> {
    let image = ring_mul(c, b.generator())?;
    LinearMorphism::from_image(a.clone(), b.clone(), image)
}

/// All morphisms `A -> B` over a finite ring, ordered by image.
pub fn hom_set(a: &Ideal, b: &Ideal) -> Result<Vec<LinearMorphism>> {
    if a.spec() != b.spec() {
        return Err(AlgebraError::SpecMismatch { left: a.spec(), right: b.spec() });
    }
    let elements = a.spec().elements().ok_or(AlgebraError::UnsupportedEnumeration(a.spec()))?;
    let mut out = Vec::new();
    for y in elements {
        if !b.contains(&y)? || annihilator_violation(a.generator(), &y)?.is_some() {
            continue;
        }
        out.push(LinearMorphism { dom: a.clone(), cod: b.clone(), image: y });
    }
    Ok(out)
}

/// `fg`: first `f`, then `g`.
pub fn compose(f: &LinearMorphism, g: &LinearMorphism) -> Result<LinearMorphism> {
    if f.cod != g.dom {
        return Err(AlgebraError::Composition { cod: f.cod.to_string(), dom: g.dom.to_string() });
    }
    let image = g.apply(&f.image)?;
    Ok(LinearMorphism { dom: f.dom.clone(), cod: g.cod.clone(), image })
}

/// The inclusion `j(A, B)` for `A ⊆ B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InclusionMorphism(LinearMorphism);

impl InclusionMorphism {
    pub fn new(a: &Ideal, b: &Ideal) -> Result<Self> {
        if !ideal_subset(a, b)? {
            return Err(AlgebraError::Domain(format!("{a} is not contained in {b}")));
        }
        Ok(InclusionMorphism(LinearMorphism::from_image(a.clone(), b.clone(), a.generator().clone())?))
    }

    pub fn as_morphism(&self) -> &LinearMorphism {
        &self.0
    }

    pub fn into_morphism(self) -> LinearMorphism {
        self.0
    }
}

/// Elements of `<a>` over a finite ring.
pub fn ideal_elements(a: &Ideal) -> Result<Vec<RingElement>> {
    let ring = a.spec().elements().ok_or(AlgebraError::UnsupportedEnumeration(a.spec()))?;
    let set: BTreeSet<RingElement> =
        ring.iter().map(|r| ring_mul(r, a.generator())).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// Injectivity of `f` as a function on the elements of its domain (finite rings).
pub fn is_injective_on_elements(f: &LinearMorphism) -> Result<bool> {
    let dom = ideal_elements(&f.dom)?;
    let images: BTreeSet<RingElement> = dom.iter().map(|x| f.apply(x)).collect::<Result<_>>()?;
    Ok(images.len() == dom.len())
}

/// All morphisms into `target` from objects of `universe`.
pub fn probes_into(universe: &[Ideal], target: &Ideal) -> Result<Vec<LinearMorphism>> {
    let mut out = Vec::new();
    for x in universe {
        out.extend(hom_set(x, target)?);
    }
    Ok(out)
}

/// Left-cancellability of `f` over `probes`: `hf = kf ⟹ h = k`.
pub fn is_monomorphism(f: &LinearMorphism, probes: &[LinearMorphism]) -> bool {
    let mut seen: BTreeMap<(Ideal, RingElement), &LinearMorphism> = BTreeMap::new();
    for h in probes.iter().filter(|h| h.cod == f.dom) {
        let hf = compose(h, f).expect("codomain matches");
        match seen.insert((hf.dom.clone(), hf.image.clone()), h) {
            Some(prev) if prev != h => return false,
            _ => {}
        }
    }
    true
}

/// Checks the category-with-subobjects axioms for inclusions over a finite universe.
pub fn check_subobject_axioms(universe: &[Ideal]) -> CheckReport {
    check_subobject_axioms_using(universe, &|a, b| InclusionMorphism::new(a, b).ok().map(InclusionMorphism::into_morphism))
}

/// As [`check_subobject_axioms`], with the inclusions supplied by `inclusion`.
pub fn check_subobject_axioms_using(
    universe: &[Ideal],
    inclusion: &dyn Fn(&Ideal, &Ideal) -> Option<LinearMorphism>,
) -> CheckReport {
    let instance = match universe.first() {
        Some(i) => format!("I({})", i.spec()),
        None => "empty".into(),
    };
    match subobject_axioms(universe, inclusion, &instance) {
        Ok(children) => CheckReport::aggregate("category with subobjects", instance, children),
        Err(e) => CheckReport::fail("category with subobjects", instance, json!({ "error": e.to_string() })),
    }
}

fn subobject_axioms(
    universe: &[Ideal],
    inclusion: &dyn Fn(&Ideal, &Ideal) -> Option<LinearMorphism>,
    instance: &str,
) -> Result<Vec<CheckReport>> {
    let pairs = || universe.iter().flat_map(|a| universe.iter().map(move |b| (a, b)));
    let show = |xs: &[&Ideal]| json!(xs.iter().map(|i| i.to_string()).collect::<Vec<_>>());

    // (i) strict preorder: ⊆ is a partial order and inclusions exist exactly along it
    let mut order_cx = None;
    for a in universe {
        if !ideal_subset(a, a)? {
            order_cx.get_or_insert_with(|| json!({ "not_reflexive": a.to_string() }));
        }
    }
    for (a, b) in pairs() {
        let ab = ideal_subset(a, b)?;
        if a != b && ab && ideal_subset(b, a)? {
            order_cx.get_or_insert_with(|| json!({ "not_antisymmetric": show(&[a, b]) }));
        }
        if ab != inclusion(a, b).is_some() {
            order_cx.get_or_insert_with(|| json!({ "inclusion_mismatch": show(&[a, b]) }));
        }
        for c in universe {
            if ab && ideal_subset(b, c)? && !ideal_subset(a, c)? {
                order_cx.get_or_insert_with(|| json!({ "not_transitive": show(&[a, b, c]) }));
            }
        }
    }

    // (ii) inclusions are monomorphisms
    let mut probes: BTreeMap<&Ideal, Vec<LinearMorphism>> = BTreeMap::new();
    for x in universe {
        probes.insert(x, probes_into(universe, x)?);
    }
    let mut mono_cx = None;
    for (a, b) in pairs() {
        if let Some(j) = inclusion(a, b) {
            if !is_monomorphism(&j, &probes[a]) {
                mono_cx = Some(json!({ "inclusion": show(&[a, b]), "image": j.image.to_string() }));
                break;
            }
        }
    }

    // cancellability over probes agrees with injectivity on elements
    let mut agree_cx = None;
    'agree: for (a, b) in pairs() {
        for f in hom_set(a, b)? {
            if is_monomorphism(&f, &probes[a]) != is_injective_on_elements(&f)? {
                agree_cx = Some(json!(f.to_string()));
                break 'agree;
            }
        }
    }

    // (iii) f = h g with f, g inclusions forces h to be the inclusion
    let mut factor_cx = None;
    'factor: for d in universe {
        for (a, b) in pairs() {
            let (Some(f), Some(g)) = (inclusion(a, d), inclusion(b, d)) else { continue };
            for h in hom_set(a, b)? {
                if compose(&h, &g)? == f && inclusion(a, b).as_ref() != Some(&h) {
                    factor_cx = Some(json!({ "objects": show(&[a, b, d]), "h": h.to_string() }));
                    break 'factor;
                }
            }
        }
    }

    Ok(vec![
        CheckReport::from_outcome("inclusions form a strict preorder", instance, order_cx),
        CheckReport::from_outcome("inclusions are monomorphisms", instance, mono_cx),
        CheckReport::from_outcome("monomorphism iff injective", instance, agree_cx),
        CheckReport::from_outcome("factorization through inclusions", instance, factor_cx),
    ])
}

/// The unique arrow `A -> B` of the preorder category, present iff `A ≼ B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PreorderArrow {
    dom: Ideal,
    cod: Ideal,
}

impl PreorderArrow {
    pub fn new(a: &Ideal, b: &Ideal) -> Result<Option<Self>> {
        Ok(ideal_leq(a, b)?.then(|| PreorderArrow { dom: a.clone(), cod: b.clone() }))
    }

    pub fn identity(a: &Ideal) -> Self {
        PreorderArrow { dom: a.clone(), cod: a.clone() }
    }

    pub fn dom(&self) -> &Ideal {
        &self.dom
    }

    pub fn cod(&self) -> &Ideal {
        &self.cod
    }

    /// Diagrammatic composite `self` then `next`.
    pub fn then(&self, next: &PreorderArrow) -> Result<PreorderArrow> {
        if self.cod != next.dom {
            return Err(AlgebraError::Composition { cod: self.cod.to_string(), dom: next.dom.to_string() });
        }
        PreorderArrow::new(&self.dom, &next.cod)?
            .ok_or_else(|| AlgebraError::Invariant(format!("divisibility not transitive at {}", self.cod)))
    }
}

/// Hom-set of the preorder category: empty or a single arrow.
pub fn preorder_hom(a: &Ideal, b: &Ideal) -> Result<Vec<PreorderArrow>> {
    Ok(PreorderArrow::new(a, b)?.into_iter().collect())
}

/// `F(f(A, B)) = j(B, A)`; objects are mapped to themselves.
pub fn functor_f(arrow: &PreorderArrow) -> Result<InclusionMorphism> {
    InclusionMorphism::new(&arrow.cod, &arrow.dom)
}

/// Checks `F` preserves identities, reverses composition, and is injective on arrows.
pub fn verify_functor_laws(universe: &[Ideal]) -> CheckReport {
    let instance = match universe.first() {
        Some(i) => format!("I({})", i.spec()),
        None => "empty".into(),
    };
    match functor_laws(universe, &instance) {
        Ok(children) => CheckReport::aggregate("contravariant functor", instance, children),
        Err(e) => CheckReport::fail("contravariant functor", instance, json!({ "error": e.to_string() })),
    }
}

fn functor_laws(universe: &[Ideal], instance: &str) -> Result<Vec<CheckReport>> {
    let mut identity_cx = None;
    for a in universe {
        let fa = functor_f(&PreorderArrow::identity(a))?.into_morphism();
        if fa != LinearMorphism::identity(a) {
            identity_cx.get_or_insert_with(|| json!(a.to_string()));
        }
    }

    let mut arrows = Vec::new();
    let mut strict_cx = None;
    for a in universe {
        for b in universe {
            let hom = preorder_hom(a, b)?;
            if hom.len() != usize::from(ideal_leq(a, b)?) {
                strict_cx.get_or_insert_with(|| json!([a.to_string(), b.to_string()]));
            }
            arrows.extend(hom);
        }
    }

    let mut compose_cx = None;
    for f in &arrows {
        for g in arrows.iter().filter(|g| g.dom == f.cod) {
            let lhs = functor_f(&f.then(g)?)?.into_morphism();
            let rhs = compose(functor_f(g)?.as_morphism(), functor_f(f)?.as_morphism())?;
            if lhs != rhs {
                compose_cx.get_or_insert_with(|| {
                    json!({ "chain": [f.dom.to_string(), f.cod.to_string(), g.cod.to_string()], "lhs": lhs.to_string(), "rhs": rhs.to_string() })
                });
            }
        }
    }

    let mut images: BTreeMap<InclusionMorphism, &PreorderArrow> = BTreeMap::new();
    let mut injective_cx = None;
    for f in &arrows {
        if let Some(prev) = images.insert(functor_f(f)?, f) {
            injective_cx.get_or_insert_with(|| {
                json!([[prev.dom.to_string(), prev.cod.to_string()], [f.dom.to_string(), f.cod.to_string()]])
            });
        }
    }

    let mut duality_cx = None;
    for a in universe {
        for b in universe {
            let arrow = PreorderArrow::new(a, b)?.is_some();
            let incl = InclusionMorphism::new(b, a).is_ok();
            if arrow != incl {
                duality_cx.get_or_insert_with(|| json!([a.to_string(), b.to_string()]));
            }
        }
    }

    Ok(vec![
        CheckReport::from_outcome("preorder category is strict", instance, strict_cx),
        CheckReport::from_outcome("F(1_A) = 1_A", instance, identity_cx),
        CheckReport::from_outcome("F(fg) = F(g)F(f)", instance, compose_cx),
        CheckReport::from_outcome("F injective on arrows", instance, injective_cx),
        CheckReport::from_outcome("arrow A -> B iff inclusion B -> A", instance, duality_cx),
    ])
}

fn dot(name: &str, universe: &[Ideal], labels: &[String], edge: impl Fn(&Ideal, &Ideal) -> Result<bool>) -> Result<String> {
    if labels.len() != universe.len() {
        return Err(AlgebraError::Domain("one label per object required".into()));
    }
    let mut out = format!("digraph {name} {{\n");
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{label}\"];").expect("write to string");
    }
    for (i, a) in universe.iter().enumerate() {
        for (j, b) in universe.iter().enumerate() {
            if i != j && edge(a, b)? {
                writeln!(out, "  n{i} -> n{j};").expect("write to string");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT rendering of the non-identity arrows of the preorder category.
pub fn preorder_dot(universe: &[Ideal], labels: &[String]) -> Result<String> {
    dot("preorder", universe, labels, ideal_leq)
}

/// DOT rendering of the non-identity inclusions.
pub fn inclusion_dot(universe: &[Ideal], labels: &[String]) -> Result<String> {
    dot("inclusions", universe, labels, ideal_subset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::all_ideals;
    use crate::rings::RingSpec;

    fn z(v: i64) -> Ideal {
        Ideal::new(RingElement::int(v)).unwrap()
    }

    fn z12(v: i64) -> Ideal {
        Ideal::new(RingElement::residue(12, v)).unwrap()
    }

    fn zn(n: u64) -> Vec<Ideal> {
        all_ideals(RingSpec::Modular { n }).unwrap()
    }

    #[test]
    fn make_morphism_examples() {
        let f = make_morphism(&z(2), &z(3), &RingElement::int(5)).unwrap();
        assert_eq!(f.image(), &RingElement::int(15));
        assert_eq!(f.apply(&RingElement::int(14)).unwrap(), RingElement::int(105));
        let zero = make_morphism(&z12(4), &z12(6), &RingElement::residue(12, 2)).unwrap();
        assert!(zero.image().is_zero());
        let err = make_morphism(&z12(4), &z12(6), &RingElement::residue(12, 1)).unwrap_err();
        match err {
            AlgebraError::IllDefinedMorphism { witness, .. } => assert_eq!(witness, "3"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn morphisms_from_zero_ideal_are_zero() {
        assert!(LinearMorphism::from_image(z(0), z(3), RingElement::int(3)).is_err());
        assert!(LinearMorphism::from_image(z(0), z(3), RingElement::int(0)).is_ok());
        assert!(LinearMorphism::from_image(z(2), z(3), RingElement::int(4)).is_err());
    }

    #[test]
    fn hom_set_examples() {
        let h = hom_set(&z12(4), &z12(6)).unwrap();
        assert_eq!(h.len(), 1);
        assert!(h[0].image().is_zero());
        assert_eq!(hom_set(&z12(0), &z12(3)).unwrap().len(), 1);
        assert_eq!(hom_set(&z12(1), &z12(1)).unwrap().len(), 12);
        assert!(matches!(hom_set(&z(1), &z(1)), Err(AlgebraError::UnsupportedEnumeration(_))));
    }

    #[test]
    fn composition_examples() {
        let f = make_morphism(&z(2), &z(3), &RingElement::int(5)).unwrap();
        let g = make_morphism(&z(3), &z(5), &RingElement::int(2)).unwrap();
        assert_eq!(compose(&f, &g).unwrap().image(), &RingElement::int(50));
        assert_eq!(compose(&LinearMorphism::identity(&z(2)), &f).unwrap(), f);
        assert_eq!(compose(&f, &LinearMorphism::identity(&z(3))).unwrap(), f);
        assert!(matches!(compose(&g, &f), Err(AlgebraError::Composition { .. })));
    }

    #[test]
    fn inclusions_compose() {
        let all = zn(12);
        for a in &all {
            for b in &all {
                for c in &all {
                    let (Ok(ab), Ok(bc)) = (InclusionMorphism::new(a, b), InclusionMorphism::new(b, c)) else {
                        continue;
                    };
                    let ac = InclusionMorphism::new(a, c).unwrap();
                    assert_eq!(&compose(ab.as_morphism(), bc.as_morphism()).unwrap(), ac.as_morphism());
                }
            }
        }
    }

    #[test]
    fn monomorphism_examples() {
        let all = zn(12);
        for a in &all {
            let probes = probes_into(&all, a).unwrap();
            for b in &all {
                if let Ok(j) = InclusionMorphism::new(a, b) {
                    assert!(is_monomorphism(j.as_morphism(), &probes));
                }
            }
            assert!(is_monomorphism(&LinearMorphism::identity(a), &probes));
        }
        let one = z12(1);
        let zero_map = LinearMorphism::zero(&one, &one).unwrap();
        assert!(!is_monomorphism(&zero_map, &probes_into(&all, &one).unwrap()));
        assert!(!is_injective_on_elements(&zero_map).unwrap());
    }

    #[test]
    fn subobject_axioms_examples() {
        assert!(check_subobject_axioms(&zn(12)).passed);
        assert!(check_subobject_axioms(&zn(2)).passed);
        let one = z12(1);
        let mutated = |a: &Ideal, b: &Ideal| {
            if *a == one && *b == one {
                LinearMorphism::zero(a, b).ok()
            } else {
                InclusionMorphism::new(a, b).ok().map(InclusionMorphism::into_morphism)
            }
        };
        let r = check_subobject_axioms_using(&zn(12), &mutated);
        assert!(!r.passed);
        let mono = r.children.iter().find(|c| c.check == "inclusions are monomorphisms").unwrap();
        assert!(!mono.passed);
        assert!(mono.counterexample.is_some());
    }

    #[test]
    fn functor_examples() {
        let arrow = PreorderArrow::new(&z(2), &z(6)).unwrap().unwrap();
        let j = functor_f(&arrow).unwrap();
        assert_eq!(j, InclusionMorphism::new(&z(6), &z(2)).unwrap());
        let a = z(7);
        assert_eq!(functor_f(&PreorderArrow::identity(&a)).unwrap().into_morphism(), LinearMorphism::identity(&a));
        let arrow = PreorderArrow::new(&z12(2), &z12(4)).unwrap().unwrap();
        assert_eq!(functor_f(&arrow).unwrap(), InclusionMorphism::new(&z12(4), &z12(2)).unwrap());
        assert!(PreorderArrow::new(&z12(4), &z12(2)).unwrap().is_none());
    }

    #[test]
    fn functor_law_examples() {
        assert!(verify_functor_laws(&zn(12)).passed);
        assert!(verify_functor_laws(&[z12(1)]).passed);
        let f = PreorderArrow::new(&z12(1), &z12(2)).unwrap().unwrap();
        let g = PreorderArrow::new(&z12(2), &z12(4)).unwrap().unwrap();
        let lhs = functor_f(&f.then(&g).unwrap()).unwrap();
        assert_eq!(lhs, InclusionMorphism::new(&z12(4), &z12(1)).unwrap());
        let rhs = compose(functor_f(&g).unwrap().as_morphism(), functor_f(&f).unwrap().as_morphism()).unwrap();
        assert_eq!(lhs.as_morphism(), &rhs);
    }

    #[test]
    fn solve_multiplier_cases() {
        let r = solve_multiplier(&RingElement::residue(12, 8), &RingElement::residue(12, 4)).unwrap().unwrap();
        assert_eq!(ring_mul(&r, &RingElement::residue(12, 8)).unwrap(), RingElement::residue(12, 4));
        assert!(solve_multiplier(&RingElement::residue(12, 4), &RingElement::residue(12, 2)).unwrap().is_none());
        let f = RingElement::poly(3, &[1, 1]);
        let x = RingElement::poly(3, &[1, 2, 1]);
        assert_eq!(solve_multiplier(&f, &x).unwrap().unwrap(), f);
    }

    #[test]
    fn dot_output_is_stable() {
        let all = zn(4);
        let labels: Vec<String> = ["1", "2", "4"].iter().map(|s| s.to_string()).collect();
        let dot = preorder_dot(&all, &labels).unwrap();
        assert_eq!(
            dot,
            "digraph preorder {\n  n0 [label=\"1\"];\n  n1 [label=\"2\"];\n  n2 [label=\"4\"];\n  n0 -> n1;\n  n0 -> n2;\n  n1 -> n2;\n}\n"
        );
        let inc = inclusion_dot(&all, &labels).unwrap();
        assert!(inc.contains("n2 -> n0;") && inc.contains("n1 -> n0;") && !inc.contains("n0 -> n1;"));
    }
}
