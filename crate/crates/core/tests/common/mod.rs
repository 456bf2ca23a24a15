//! Oracles shared by the integration test targets.

use std::collections::BTreeSet;

fn members(n: u64, g: u64) -> Vec<u64> {
    let set: BTreeSet<u64> = (0..n).map(|r| r * g % n).collect();
    set.into_iter().collect()
}

/// Images `y ∈ <b>` for which `r a ↦ r y` is a well-defined, additive,
/// homogeneous function `<a> -> <b>`, found by tabulating the function.
pub fn oracle_images(n: u64, a: u64, b: u64) -> Vec<u64> {
    let dom = members(n, a);
    let mut out = Vec::new();
    for y in members(n, b) {
        let mut table = vec![None; n as usize];
        let mut function = true;
        for r in 0..n {
            let (x, fx) = ((r * a % n) as usize, r * y % n);
            match table[x] {
                None => table[x] = Some(fx),
                Some(prev) if prev != fx => function = false,
                _ => {}
            }
        }
        if !function {
            continue;
        }
        let f = |x: u64| table[x as usize].unwrap();
        let additive = dom.iter().all(|&x| dom.iter().all(|&z| f((x + z) % n) == (f(x) + f(z)) % n));
        let homogeneous = (0..n).all(|r| dom.iter().all(|&x| f(r * x % n) == r * f(x) % n));
        if additive && homogeneous {
            out.push(y);
        }
    }
    out
}
