//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Each criterion also carries a wall-clock budget; exceeding it is a failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use osgrp_core::category::{check_subobject_axioms, hom_set, verify_functor_laws};
use osgrp_core::cli;
use osgrp_core::ideals::{self, semigroup_regular_exact, Ideal, RingIso};
use osgrp_core::instances::{
    build_ideal_semigroup_zn, run_counterexample, sampled_law_suite, verify_greens_universal,
    verify_zn_divisor_iso, verify_zn_ordered_regular, zn_universe,
};
use osgrp_core::ordered_semigroup::{classify, greens_relations};
use osgrp_core::rings::{set_ideal_product, two_sided_ideal_closure, RingElement, RingSpec, TriMatrix};
use osgrp_core::sampling::SampleConfig;

mod common;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_passes(r: &osgrp_core::CheckReport) -> Outcome {
    ensure(r.passed, || format!("{} [{}]: {}", r.check, r.instance, r.counterexample.clone().unwrap_or_default()))
}

fn tau(n: u64) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}

fn regular_ordered_semigroups() -> Outcome {
    for n in 2..=60 {
        report_passes(&verify_zn_ordered_regular(n))?;
        let unit = Ideal::unit(RingSpec::modular(n).unwrap()).unwrap();
        for a in zn_universe(n).unwrap() {
            let x = ideals::ordered_regularity_witness(&a).map_err(|e| e.to_string())?;
            ensure(x == unit, || format!("witness for {a} in Z_{n} is {x}"))?;
        }
    }
    Ok(())
}

fn divisor_isomorphism() -> Outcome {
    for n in 2..=60 {
        let r = verify_zn_divisor_iso(n);
        report_passes(&r)?;
        ensure(r.children.iter().any(|c| c.check == "d1 * d2 = gcd(d1 d2, n)" && c.passed), || {
            format!("gcd table identity missing for n = {n}")
        })?;
    }
    Ok(())
}

fn greens_universal() -> Outcome {
    for n in 2..=60 {
        report_passes(&verify_greens_universal(n))?;
        let g = greens_relations(&build_ideal_semigroup_zn(n).unwrap());
        for (name, p) in [("L", &g.l), ("R", &g.r), ("J", &g.j), ("H", &g.h), ("D", &g.d)] {
            ensure(p.len() == 1 && p.classes()[0].len() == tau(n), || format!("{name} on Z_{n}: {:?}", p.classes()))?;
        }
    }
    let g = greens_relations(&build_ideal_semigroup_zn(12).unwrap());
    ensure(g.l.classes()[0].len() == 6, || "class size for n = 12 is not 6".into())
}

fn six_properties() -> Outcome {
    for n in 2..=60 {
        let c = classify(&build_ideal_semigroup_zn(n).unwrap());
        for (name, p) in c.properties() {
            ensure(p.holds, || format!("{name} fails on Z_{n}: {:?}", p.counterexample))?;
        }
    }
    Ok(())
}

fn inverse_transversal() -> Outcome {
    for n in 2..=60 {
        report_passes(&ideals::check_inverse_transversal(&zn_universe(n).unwrap()))?;
    }
    Ok(())
}

fn von_neumann() -> Outcome {
    for n in 2..=60u64 {
        let universe = zn_universe(n).unwrap();
        for a in 0..n {
            let brute = (0..n).any(|x| a * x % n * a % n == a);
            let ideal = Ideal::new(RingElement::residue(n, a as i64)).unwrap();
            let found = semigroup_regular_exact(&ideal, &universe).map_err(|e| e.to_string())?;
            ensure(found.witness().is_some() == brute, || format!("a = {a} in Z_{n}: ring {brute}, semigroup {found:?}"))?;
        }
    }
    Ok(())
}

fn matrix_counterexample() -> Outcome {
    for p in [2, 3] {
        let el = |m: TriMatrix| RingElement::Triangular(m);
        let closure = |m: TriMatrix| two_sided_ideal_closure(&el(m)).unwrap();
        let product = set_ideal_product(&closure(TriMatrix::e11(p)), &closure(TriMatrix::e22(p))).unwrap();
        let e12 = closure(TriMatrix::e12(p));
        let e11_e22 = TriMatrix::e11(p).mul(&TriMatrix::e22(p));
        let of_product = closure(e11_e22);
        let zero = BTreeSet::from([RingSpec::triangular(p).unwrap().zero()]);
        ensure(product == e12, || format!("p = {p}: product is not <E12>"))?;
        ensure(of_product == zero, || format!("p = {p}: <E11 E22> is not {{0}}"))?;
        ensure(product != of_product, || format!("p = {p}: products agree"))?;
        ensure(e12.len() as u64 == p, || format!("p = {p}: |<E12>| = {}", e12.len()))?;
        report_passes(&run_counterexample(p).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn induced_isomorphisms() -> Outcome {
    let config = SampleConfig::new(1000, 42);
    for (alpha, beta) in [(1, 1), (2, 0)] {
        let iso = RingIso::poly_affine(3, alpha, beta).map_err(|e| e.to_string())?;
        let r = ideals::verify_induced_iso(&iso, &config);
        report_passes(&r)?;
        for name in ["psi multiplicative", "psi preserves and reflects order"] {
            ensure(r.children.iter().any(|c| c.check == name && c.passed), || format!("{name} missing for {}", iso.name()))?;
        }
    }
    Ok(())
}

fn category_with_subobjects() -> Outcome {
    for n in [2, 6, 12, 24] {
        report_passes(&check_subobject_axioms(&zn_universe(n).unwrap()))?;
    }
    for n in 2..=24u64 {
        let universe = zn_universe(n).unwrap();
        for a in &universe {
            for b in &universe {
                let images: Vec<u64> =
                    hom_set(a, b).unwrap().iter().map(|f| f.image().as_residue().unwrap()).collect();
                let mut expected =
                    common::oracle_images(n, a.generator().as_residue().unwrap(), b.generator().as_residue().unwrap());
                expected.sort_unstable();
                ensure(images == expected, || format!("Hom({a}, {b}) in Z_{n}: {images:?} vs {expected:?}"))?;
            }
        }
    }
    Ok(())
}

fn functor_laws() -> Outcome {
    for n in [2, 6, 12, 24, 60] {
        report_passes(&verify_functor_laws(&zn_universe(n).unwrap()))?;
    }
    Ok(())
}

fn sampled_suites() -> Outcome {
    let config = SampleConfig::new(1000, 42);
    let specs = [RingSpec::Integer, RingSpec::poly(2).unwrap(), RingSpec::poly(3).unwrap(), RingSpec::poly(5).unwrap()];
    for spec in specs {
        let r = sampled_law_suite(spec, &config).map_err(|e| e.to_string())?;
        report_passes(&r)?;
        for leaf in &r.children {
            if let Some(cases) = leaf.witness.as_ref().and_then(|w| w["cases"].as_u64()) {
                ensure(cases >= 1000, || format!("{} on {spec}: only {cases} cases", leaf.check))?;
            }
        }
    }
    Ok(())
}

fn without_timing(json: &str) -> (String, usize) {
    let kept: Vec<&str> = json.lines().filter(|l| !l.trim_start().starts_with("\"elapsed_ms\"")).collect();
    (kept.join("\n"), json.lines().count() - kept.len())
}

fn deterministic_certify() -> Outcome {
    let args = ["osgrp", "certify", "--n-max", "60", "--seed", "42", "--format", "json"];
    let (c1, first) = cli::run(args);
    let (c2, second) = cli::run(args);
    ensure(c1 == 0 && c2 == 0, || format!("exit codes {c1}, {c2}"))?;
    let (a, timing_a) = without_timing(&first);
    let (b, timing_b) = without_timing(&second);
    ensure(timing_a == 1 && timing_b == 1, || format!("expected one timing field, found {timing_a} and {timing_b}"))?;
    ensure(a == b, || "outputs differ".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("I(Z_n) regular ordered semigroup, witness <1>, n <= 60", 5, regular_ordered_semigroups),
        ("I(Z_n) ≅ (D(n), *, |) with d1 * d2 = gcd(d1 d2, n), n <= 60", 2, divisor_isomorphism),
        ("Green's relations universal with class size τ(n), n <= 60", 5, greens_universal),
        ("six regularity properties hold, n <= 60", 10, six_properties),
        ("{<1>} is an inverse transversal, n <= 60", 2, inverse_transversal),
        ("von Neumann regular iff <a> semigroup-regular, n <= 60", 10, von_neumann),
        ("upper triangular counterexample, p in {2, 3}", 1, matrix_counterexample),
        ("induced isomorphisms x -> x + 1, x -> 2x on F_3[x], 1000 samples", 2, induced_isomorphisms),
        ("subobject axioms and hom-set oracle, n <= 24", 30, category_with_subobjects),
        ("contravariant functor laws, n in {2, 6, 12, 24, 60}", 5, functor_laws),
        ("sampled laws on I(Z) and I(F_p[x]), p in {2, 3, 5}", 10, sampled_suites),
        ("certify --n-max 60 --seed 42 is byte-identical twice", 60, deterministic_certify),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*budget), || format!("took {elapsed:?}, budget {budget} s"))
        });
        let ms = elapsed.as_millis();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({ms} ms, budget {budget} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms, budget {budget} s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
