//! Finite ordered semigroups given by a Cayley table and an order relation.
//!
//! Everything here is decided by exhaustive search over the table: axiom
//! validation, downward closures, principal ordered ideals, Green's
//! relations, the regularity classes, inverse transversals and
//! order-preserving isomorphisms. Counterexamples are always the
//! lexicographically first violating tuple.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::report::CheckReport;

/// Ordered semigroup on `{0, .., k-1}` with display labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct FiniteOrderedSemigroup {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
}

/// Table interchange format: `{"labels": [...], "mul": [[...]], "leq": [[...]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRepr {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
}

impl TryFrom<TableRepr> for FiniteOrderedSemigroup {
    type Error = AlgebraError;

    fn try_from(t: TableRepr) -> Result<Self> {
        FiniteOrderedSemigroup::new(t.labels, t.mul, t.leq)
    }
}

impl From<FiniteOrderedSemigroup> for TableRepr {
    fn from(s: FiniteOrderedSemigroup) -> Self {
        TableRepr { labels: s.labels, mul: s.mul, leq: s.leq }
    }
}

impl FiniteOrderedSemigroup {
    /// Checks table shapes only; the axioms are checked by [`validate`].
    pub fn new(labels: Vec<String>, mul: Vec<Vec<usize>>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let k = labels.len();
        if k == 0 {
            return Err(AlgebraError::Format("a semigroup needs at least one element".into()));
        }
        if mul.len() != k || mul.iter().any(|row| row.len() != k) {
            return Err(AlgebraError::Format(format!("multiplication table must be {k}x{k}")));
        }
        if leq.len() != k || leq.iter().any(|row| row.len() != k) {
            return Err(AlgebraError::Format(format!("order relation must be {k}x{k}")));
        }
        if let Some(bad) = mul.iter().flatten().find(|&&v| v >= k) {
            return Err(AlgebraError::Format(format!("product index {bad} out of range 0..{k}")));
        }
        Ok(FiniteOrderedSemigroup { labels, mul, leq })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("tables serialize")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn leq_relation(&self) -> &[Vec<bool>] {
        &self.leq
    }

    fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.size() {
            Ok(())
        } else {
            Err(AlgebraError::Domain(format!("element index {i} out of range 0..{}", self.size())))
        }
    }

    fn labelled(&self, idx: &[usize]) -> Value {
        json!(idx.iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>())
    }

    /// The subsemigroup on `subset`, if closed under multiplication.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        for &i in subset {
            self.check_index(i)?;
        }
        let pos: BTreeMap<usize, usize> = subset.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut mul = Vec::with_capacity(subset.len());
        for &i in subset {
            let mut row = Vec::with_capacity(subset.len());
            for &j in subset {
                let prod = self.mul(i, j);
                match pos.get(&prod) {
                    Some(&p) => row.push(p),
                    None => {
                        return Err(AlgebraError::Domain(format!(
                            "subset not closed: {} * {} = {}",
                            self.labels[i], self.labels[j], self.labels[prod]
                        )))
                    }
                }
            }
            mul.push(row);
        }
        let leq = subset.iter().map(|&i| subset.iter().map(|&j| self.leq(i, j)).collect()).collect();
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        FiniteOrderedSemigroup::new(labels, mul, leq)
    }
}

fn first<I: Iterator<Item = Vec<usize>>>(mut it: I) -> Option<Vec<usize>> {
    it.next()
}

/// Checks associativity, the partial-order axioms and two-sided compatibility.
pub fn validate(s: &FiniteOrderedSemigroup) -> CheckReport {
    let k = s.size();
    let triples = || {
        (0..k).flat_map(move |i| (0..k).flat_map(move |j| (0..k).map(move |l| vec![i, j, l])))
    };
    let pairs = || (0..k).flat_map(move |i| (0..k).map(move |j| vec![i, j]));
    let show = |cx: Option<Vec<usize>>| cx.map(|t| s.labelled(&t));

    let assoc = first(triples().filter(|t| s.mul(s.mul(t[0], t[1]), t[2]) != s.mul(t[0], s.mul(t[1], t[2]))));
    let refl = first((0..k).map(|i| vec![i]).filter(|t| !s.leq(t[0], t[0])));
    let antisym = first(pairs().filter(|t| t[0] != t[1] && s.leq(t[0], t[1]) && s.leq(t[1], t[0])));
    let trans = first(triples().filter(|t| s.leq(t[0], t[1]) && s.leq(t[1], t[2]) && !s.leq(t[0], t[2])));
    let right = first(triples().filter(|t| s.leq(t[0], t[1]) && !s.leq(s.mul(t[0], t[2]), s.mul(t[1], t[2]))));
    let left = first(triples().filter(|t| s.leq(t[0], t[1]) && !s.leq(s.mul(t[2], t[0]), s.mul(t[2], t[1]))));

    let inst = format!("{k} elements");
    CheckReport::aggregate(
        "ordered semigroup axioms",
        inst.clone(),
        vec![
            CheckReport::from_outcome("associativity", inst.clone(), show(assoc)),
            CheckReport::from_outcome("order reflexive", inst.clone(), show(refl)),
            CheckReport::from_outcome("order antisymmetric", inst.clone(), show(antisym)),
            CheckReport::from_outcome("order transitive", inst.clone(), show(trans)),
            CheckReport::from_outcome("right compatibility", inst.clone(), show(right)),
            CheckReport::from_outcome("left compatibility", inst, show(left)),
        ],
    )
}

fn closure_of_mask(s: &FiniteOrderedSemigroup, mask: &[bool]) -> Vec<bool> {
    s.elements().map(|x| s.elements().any(|a| mask[a] && s.leq(x, a))).collect()
}

fn mask_to_vec(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
}

/// `(A] = {x | x <= a for some a in A}`.
pub fn downward_closure(s: &FiniteOrderedSemigroup, subset: &[usize]) -> Result<Vec<usize>> {
    let mut mask = vec![false; s.size()];
    for &a in subset {
        s.check_index(a)?;
        mask[a] = true;
    }
    Ok(mask_to_vec(&closure_of_mask(s, &mask)))
}

/// Principal left, right and two-sided ordered ideals of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalIdeals {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub two_sided: Vec<usize>,
}

/// `L(a) = (a ∪ Sa]`, `R(a) = (a ∪ aS]`, `I(a) = (a ∪ Sa ∪ aS ∪ SaS]`.
pub fn principal_ordered_ideals(s: &FiniteOrderedSemigroup, a: usize) -> Result<PrincipalIdeals> {
    s.check_index(a)?;
    let k = s.size();
    let mut left = vec![false; k];
    let mut right = vec![false; k];
    left[a] = true;
    right[a] = true;
    for x in s.elements() {
        left[s.mul(x, a)] = true;
        right[s.mul(a, x)] = true;
    }
    let mut both: Vec<bool> = left.iter().zip(&right).map(|(l, r)| *l || *r).collect();
    for x in s.elements() {
        let xa = s.mul(x, a);
        for y in s.elements() {
            both[s.mul(xa, y)] = true;
        }
    }
    Ok(PrincipalIdeals {
        left: mask_to_vec(&closure_of_mask(s, &left)),
        right: mask_to_vec(&closure_of_mask(s, &right)),
        two_sided: mask_to_vec(&closure_of_mask(s, &both)),
    })
}

/// A partition of `{0, .., k-1}`; classes are sorted and ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups elements by equal key.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Self {
        let mut groups: BTreeMap<&K, Vec<usize>> = BTreeMap::new();
        for (i, key) in keys.iter().enumerate() {
            groups.entry(key).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
        classes.sort();
        Partition { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn size(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&x)).expect("element in partition")
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_index(x) == self.class_index(y)
    }

    pub fn is_universal(&self) -> bool {
        self.classes.len() == 1
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes.iter().all(|c| c.iter().all(|&x| coarser.same_class(c[0], x)))
    }
}

/// The five Green's relations as partitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreensStructure {
    pub l: Partition,
    pub r: Partition,
    pub j: Partition,
    pub h: Partition,
    pub d: Partition,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Finest equivalence containing both partitions.
pub fn join(a: &Partition, b: &Partition) -> Partition {
    let k = a.size();
    let mut parent: Vec<usize> = (0..k).collect();
    for class in a.classes.iter().chain(b.classes.iter()) {
        for &x in &class[1..] {
            let (rx, r0) = (find(&mut parent, x), find(&mut parent, class[0]));
            if rx != r0 {
                parent[rx.max(r0)] = rx.min(r0);
            }
        }
    }
    let roots: Vec<usize> = (0..k).map(|x| find(&mut parent, x)).collect();
    Partition::from_keys(&roots)
}

/// Green's relations by equality of principal ordered ideals; `D = L ∨ R`.
pub fn greens_relations(s: &FiniteOrderedSemigroup) -> GreensStructure {
    let ideals: Vec<PrincipalIdeals> =
        s.elements().map(|a| principal_ordered_ideals(s, a).expect("index in range")).collect();
    let l = Partition::from_keys(&ideals.iter().map(|p| p.left.clone()).collect::<Vec<_>>());
    let r = Partition::from_keys(&ideals.iter().map(|p| p.right.clone()).collect::<Vec<_>>());
    let j = Partition::from_keys(&ideals.iter().map(|p| p.two_sided.clone()).collect::<Vec<_>>());
    let h_keys: Vec<(usize, usize)> = s.elements().map(|a| (l.class_index(a), r.class_index(a))).collect();
    let h = Partition::from_keys(&h_keys);
    let d = join(&l, &r);
    GreensStructure { l, r, j, h, d }
}

/// `L` and `R` computed from `(Sa]` and `(aS]` alone, the form valid on regular semigroups.
pub fn greens_simplified(s: &FiniteOrderedSemigroup) -> (Partition, Partition) {
    let left: Vec<Vec<usize>> = s
        .elements()
        .map(|a| {
            let mask: Vec<bool> = {
                let mut m = vec![false; s.size()];
                s.elements().for_each(|x| m[s.mul(x, a)] = true);
                m
            };
            mask_to_vec(&closure_of_mask(s, &mask))
        })
        .collect();
    let right: Vec<Vec<usize>> = s
        .elements()
        .map(|a| {
            let mut m = vec![false; s.size()];
            s.elements().for_each(|x| m[s.mul(a, x)] = true);
            mask_to_vec(&closure_of_mask(s, &m))
        })
        .collect();
    (Partition::from_keys(&left), Partition::from_keys(&right))
}

/// `a L b` via witnesses: some `x, y` with `a <= xb` and `b <= ya`.
///
/// Agrees with [`greens_relations`] on regular ordered semigroups.
pub fn greens_l_alt(s: &FiniteOrderedSemigroup, a: usize, b: usize) -> bool {
    s.elements().any(|x| s.leq(a, s.mul(x, b))) && s.elements().any(|y| s.leq(b, s.mul(y, a)))
}

/// `a R b` via witnesses: some `u, v` with `a <= bu` and `b <= av`.
pub fn greens_r_alt(s: &FiniteOrderedSemigroup, a: usize, b: usize) -> bool {
    s.elements().any(|u| s.leq(a, s.mul(b, u))) && s.elements().any(|v| s.leq(b, s.mul(a, v)))
}

fn is_ordered_regular(s: &FiniteOrderedSemigroup, a: usize) -> bool {
    s.elements().any(|x| s.leq(a, s.mul(s.mul(a, x), a)))
}

/// `Reg≤(S)`: elements with `a <= axa` for some `x`.
pub fn ordered_regular_set(s: &FiniteOrderedSemigroup) -> Vec<usize> {
    s.elements().filter(|&a| is_ordered_regular(s, a)).collect()
}

/// `E≤(S)`: elements with `e <= e²`.
pub fn ordered_idempotents(s: &FiniteOrderedSemigroup) -> Vec<usize> {
    s.elements().filter(|&e| s.leq(e, s.mul(e, e))).collect()
}

/// `V≤(a)`: all `a'` with `a <= a a' a` and `a' <= a' a a'`.
pub fn ordered_inverses(s: &FiniteOrderedSemigroup, a: usize) -> Vec<usize> {
    s.elements()
        .filter(|&b| s.leq(a, s.mul(s.mul(a, b), a)) && s.leq(b, s.mul(s.mul(b, a), b)))
        .collect()
}

/// Outcome of one structural property: holds, or the first counterexample tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl PropertyOutcome {
    fn from_counterexample(cx: Option<Vec<usize>>) -> Self {
        PropertyOutcome { holds: cx.is_none(), counterexample: cx }
    }
}

/// The regularity classes of a finite ordered semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub regular: PropertyOutcome,
    pub intra_regular: PropertyOutcome,
    pub completely_regular: PropertyOutcome,
    pub group_like: PropertyOutcome,
    pub clifford: PropertyOutcome,
    pub inverse_ordered: PropertyOutcome,
    pub all_ordered_idempotent: PropertyOutcome,
    pub ordered_idempotents: Vec<usize>,
    pub ordered_inverses: Vec<Vec<usize>>,
}

impl Classification {
    /// The six properties (regularity itself is a prerequisite of Clifford, not one of them).
    pub fn properties(&self) -> [(&'static str, &PropertyOutcome); 6] {
        [
            ("intra-regular", &self.intra_regular),
            ("inverse ordered", &self.inverse_ordered),
            ("all ordered idempotent", &self.all_ordered_idempotent),
            ("completely regular", &self.completely_regular),
            ("group-like", &self.group_like),
            ("Clifford", &self.clifford),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.properties().iter().all(|(_, p)| p.holds)
    }

    pub fn to_report(&self, s: &FiniteOrderedSemigroup, instance: &str) -> CheckReport {
        let children = self
            .properties()
            .iter()
            .map(|(name, p)| {
                CheckReport::from_outcome(*name, instance, p.counterexample.as_ref().map(|t| s.labelled(t)))
            })
            .collect();
        let inverses: BTreeMap<&str, Value> = self
            .ordered_inverses
            .iter()
            .enumerate()
            .map(|(a, v)| (s.label(a), s.labelled(v)))
            .collect();
        CheckReport::aggregate("regularity classes", instance, children).with_witness(json!({
            "ordered_idempotents": s.labelled(&self.ordered_idempotents),
            "ordered_inverses": inverses,
        }))
    }
}

/// Decides each regularity class by exhaustive witness search.
pub fn classify(s: &FiniteOrderedSemigroup) -> Classification {
    let el = || s.elements();
    let sq = |a: usize| s.mul(a, a);

    let regular = el().find(|&a| !is_ordered_regular(s, a)).map(|a| vec![a]);
    let intra = el()
        .find(|&a| !el().any(|x| el().any(|y| s.leq(a, s.mul(s.mul(x, sq(a)), y)))))
        .map(|a| vec![a]);
    let completely = el()
        .find(|&a| !el().any(|x| s.leq(a, s.mul(s.mul(sq(a), x), sq(a)))))
        .map(|a| vec![a]);
    let group_like = el()
        .flat_map(|a| el().map(move |b| (a, b)))
        .find(|&(a, b)| {
            !(el().any(|x| s.leq(a, s.mul(x, b))) && el().any(|y| s.leq(a, s.mul(b, y))))
        })
        .map(|(a, b)| vec![a, b]);

    let idempotents = ordered_idempotents(s);
    let all_idem = el().find(|&e| !s.leq(e, sq(e))).map(|e| vec![e]);

    let clifford = match &regular {
        Some(cx) => Some(cx.clone()),
        None => el()
            .flat_map(|a| idempotents.iter().map(move |&e| (a, e)))
            .find(|&(a, e)| {
                let ae = s.mul(a, e);
                let ea = s.mul(e, a);
                !(el().any(|u| s.leq(ae, s.mul(s.mul(e, u), a)))
                    && el().any(|v| s.leq(ea, s.mul(s.mul(a, v), e))))
            })
            .map(|(a, e)| vec![a, e]),
    };

    let greens = greens_relations(s);
    let inverses: Vec<Vec<usize>> = el().map(|a| ordered_inverses(s, a)).collect();
    let inverse_ordered = el().find_map(|a| {
        let v = &inverses[a];
        v.iter()
            .flat_map(|&x| v.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| !greens.h.same_class(x, y))
            .map(|(x, y)| vec![a, x, y])
    });

    Classification {
        regular: PropertyOutcome::from_counterexample(regular),
        intra_regular: PropertyOutcome::from_counterexample(intra),
        completely_regular: PropertyOutcome::from_counterexample(completely),
        group_like: PropertyOutcome::from_counterexample(group_like),
        clifford: PropertyOutcome::from_counterexample(clifford),
        inverse_ordered: PropertyOutcome::from_counterexample(inverse_ordered),
        all_ordered_idempotent: PropertyOutcome::from_counterexample(all_idem),
        ordered_idempotents: idempotents,
        ordered_inverses: inverses,
    }
}

/// Verifies the four inverse-transversal conditions for `s0 ⊆ S`.
pub fn check_inverse_transversal(s: &FiniteOrderedSemigroup, s0: &[usize], instance: &str) -> CheckReport {
    let mut s0: Vec<usize> = s0.to_vec();
    s0.sort_unstable();
    s0.dedup();
    let members = s.labelled(&s0);
    if let Some(&bad) = s0.iter().find(|&&i| i >= s.size()) {
        return CheckReport::fail("inverse transversal", instance, json!({ "out_of_range": bad }));
    }

    // (1) inverse ordered subsemigroup
    let sub = s.restrict(&s0);
    let cond1 = match &sub {
        Err(e) => Some(json!({ "not_closed": e.to_string() })),
        Ok(t) => {
            let cls = classify(t);
            if let Some(cx) = cls.regular.counterexample {
                Some(json!({ "no_ordered_inverse_in_subsemigroup": t.labelled(&cx) }))
            } else {
                cls.inverse_ordered
                    .counterexample
                    .map(|cx| json!({ "inverses_not_h_related": t.labelled(&cx) }))
            }
        }
    };

    // (2) downward closed
    let closure = downward_closure(s, &s0).expect("indices checked");
    let cond2 = (closure != s0).then(|| json!({ "closure": s.labelled(&closure) }));

    // (3) meets every V≤(a)
    let cond3 = s
        .elements()
        .find(|&a| !ordered_inverses(s, a).iter().any(|x| s0.contains(x)))
        .map(|a| json!({ "element": s.label(a) }));

    // (4) transversal inverses are H-related in S0
    let cond4 = sub.as_ref().ok().and_then(|t| {
        let h = greens_relations(t).h;
        let pos = |x: usize| s0.iter().position(|&y| y == x).expect("member of s0");
        s.elements().find_map(|a| {
            let v: Vec<usize> = ordered_inverses(s, a).into_iter().filter(|x| s0.contains(x)).collect();
            v.iter()
                .flat_map(|&x| v.iter().map(move |&y| (x, y)))
                .find(|&(x, y)| !h.same_class(pos(x), pos(y)))
                .map(|(x, y)| json!({ "element": s.label(a), "inverses": s.labelled(&[x, y]) }))
        })
    });

    CheckReport::aggregate(
        "inverse transversal",
        instance,
        vec![
            CheckReport::from_outcome("inverse ordered subsemigroup", instance, cond1),
            CheckReport::from_outcome("downward closed", instance, cond2),
            CheckReport::from_outcome("meets every V(a)", instance, cond3),
            CheckReport::from_outcome("transversal inverses H-related", instance, cond4),
        ],
    )
    .with_witness(json!({ "s0": members }))
}

/// First violation of `map` being an order isomorphism `S -> T`, if any.
pub fn isomorphism_violation(
    s: &FiniteOrderedSemigroup,
    t: &FiniteOrderedSemigroup,
    map: &[usize],
) -> Option<Value> {
    if s.size() != t.size() || map.len() != s.size() {
        return Some(json!({ "size_mismatch": [s.size(), t.size(), map.len()] }));
    }
    let mut seen = vec![false; t.size()];
    for (i, &m) in map.iter().enumerate() {
        if m >= t.size() || seen[m] {
            return Some(json!({ "not_bijective_at": s.label(i) }));
        }
        seen[m] = true;
    }
    for i in s.elements() {
        for j in s.elements() {
            if map[s.mul(i, j)] != t.mul(map[i], map[j]) {
                return Some(json!({ "product": [s.label(i), s.label(j)] }));
            }
            if s.leq(i, j) != t.leq(map[i], map[j]) {
                return Some(json!({ "order": [s.label(i), s.label(j)] }));
            }
        }
    }
    None
}

fn fingerprint(s: &FiniteOrderedSemigroup, i: usize) -> (usize, usize, bool, bool, bool, bool) {
    let up = s.elements().filter(|&j| s.leq(i, j)).count();
    let down = s.elements().filter(|&j| s.leq(j, i)).count();
    let idempotent = s.mul(i, i) == i;
    let ordered_idempotent = s.leq(i, s.mul(i, i));
    let zero = s.elements().all(|j| s.mul(i, j) == i && s.mul(j, i) == i);
    let identity = s.elements().all(|j| s.mul(i, j) == j && s.mul(j, i) == j);
    (up, down, idempotent, ordered_idempotent, zero, identity)
}

/// Backtracking search for an isomorphism of ordered semigroups.
///
/// Candidates are pruned by order in/out-degree and idempotent, zero and
/// identity fingerprints; every partial map is checked on all assigned pairs.
pub fn find_isomorphism(s: &FiniteOrderedSemigroup, t: &FiniteOrderedSemigroup) -> Option<Vec<usize>> {
    let k = s.size();
    if k != t.size() {
        return None;
    }
    let fs: Vec<_> = s.elements().map(|i| fingerprint(s, i)).collect();
    let ft: Vec<_> = t.elements().map(|i| fingerprint(t, i)).collect();
    let candidates: Vec<Vec<usize>> =
        s.elements().map(|i| t.elements().filter(|&j| fs[i] == ft[j]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut order: Vec<usize> = s.elements().collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));

    struct Search<'a> {
        s: &'a FiniteOrderedSemigroup,
        t: &'a FiniteOrderedSemigroup,
        candidates: &'a [Vec<usize>],
        order: &'a [usize],
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn consistent(&self, i: usize) -> bool {
            let mi = self.map[i].expect("just assigned");
            for j in 0..self.s.size() {
                let Some(mj) = self.map[j] else { continue };
                if self.s.leq(i, j) != self.t.leq(mi, mj) || self.s.leq(j, i) != self.t.leq(mj, mi) {
                    return false;
                }
                for (x, y, mx, my) in [(i, j, mi, mj), (j, i, mj, mi)] {
                    if let Some(mp) = self.map[self.s.mul(x, y)] {
                        if mp != self.t.mul(mx, my) {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let i = self.order[depth];
            for &c in &self.candidates[i] {
                if self.used[c] {
                    continue;
                }
                self.map[i] = Some(c);
                self.used[c] = true;
                if self.consistent(i) && self.run(depth + 1) {
                    return true;
                }
                self.map[i] = None;
                self.used[c] = false;
            }
            false
        }
    }

    let mut search = Search {
        s,
        t,
        candidates: &candidates,
        order: &order,
        map: vec![None; k],
        used: vec![false; k],
    };
    if !search.run(0) {
        return None;
    }
    let map: Vec<usize> = search.map.into_iter().map(|m| m.expect("complete")).collect();
    debug_assert!(isomorphism_violation(s, t, &map).is_none());
    Some(map)
}
