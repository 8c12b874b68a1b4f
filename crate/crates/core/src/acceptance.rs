//! The acceptance criteria as executable checks, shared by the test suite
//! and `check-all`. Every comparison is exact.

use std::collections::HashSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{
    catalog_ids, cascade_size, check_scaffold, expected_content, expected_degree, family_record,
    polygon_b, polygon_pair, polygon_x, FamilyId,
};
use crate::error::Result;
use crate::hilbert::{
    anticanonical_hilbert_p11k, cascade_hilbert, cascade_hilbert_raw, ci_hilbert,
    closed_form_p11k_numerator, fractions_equal,
};
use crate::mutation::{
    available_moves, find_representative_with_quiver, fundamental_group_invariant, mutate, quiver,
    reduced_quiver, FiniteAbelianGroup, MutationMove, DEFAULT_SEARCH_BOUND,
};
use crate::polygon::{pt, LatticePolygon, QuotientSingularity};
use crate::quasismooth::is_quasismooth;
use crate::rootsys::{
    cartan_matrix, classify, index_witnesses, reflect, simple_roots, CartanType, Family,
    PolarizedLattice, Root,
};
use crate::scaffolding::random_valid_scaffolding;

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "root counts"),
    (2, "root system types"),
    (3, "index of connectedness"),
    (4, "Hilbert numerators and model identities"),
    (5, "Laurent inversion reproduces the printed matrices"),
    (6, "quasismoothness of the models"),
    (7, "catalog polygon invariants and cascade size"),
    (8, "mutations, fundamental group and quivers"),
    (9, "property suites"),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub number: u8,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    /// values reported but not asserted
    pub notes: Vec<String>,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] criterion {}: {} ({} checks", self.number, self.title, self.checks)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        write!(f, ")")
    }
}

#[derive(Default)]
struct Checker {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records an error from a computation that should have succeeded.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

pub fn run_criterion(number: u8) -> Option<CriterionReport> {
    let title = CRITERIA.iter().find(|c| c.0 == number)?.1;
    let mut c = Checker::default();
    match number {
        1 => root_counts(&mut c),
        2 => root_types(&mut c),
        3 => connectedness(&mut c),
        4 => hilbert_numerators(&mut c),
        5 => laurent_inversion(&mut c),
        6 => quasismoothness(&mut c),
        7 => polygon_invariants(&mut c),
        8 => mutations(&mut c),
        9 => properties(&mut c),
        _ => unreachable!(),
    }
    Some(CriterionReport {
        number,
        title: title.to_string(),
        passed: c.failures.is_empty(),
        checks: c.checks,
        failures: c.failures,
        notes: c.notes,
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().filter_map(|&(n, _)| run_criterion(n)).collect()
}

/// `(k, l)` for `3 <= k <= 10`, `2 <= l <= k+4`.
fn root_grid() -> Vec<(i64, usize)> {
    (3..=10).flat_map(|k| (2..=k as usize + 4).map(move |l| (k, l))).collect()
}

fn root_counts(c: &mut Checker) {
    for (k, l) in root_grid() {
        let l64 = l as i64;
        let want = if l64 <= k + 1 {
            l64 * (l64 - 1)
        } else if l64 == k + 2 {
            (k + 2) * (k + 1) + 2
        } else if l64 == k + 3 {
            (k + 4) * (k + 3)
        } else {
            2 * (k + 4) * (k + 3)
        };
        let Some(lat) = c.ok(PolarizedLattice::new(k, l), || format!("lattice ({k},{l})")) else { continue };
        let got = lat.enumerate_roots().len() as i64;
        c.check(got == want, || format!("({k},{l}): {got} roots, expected {want}"));
    }
    if let Some(lat) = c.ok(PolarizedLattice::new(3, 8), || "lattice (3,8)".into()) {
        let got = lat.enumerate_roots().len();
        c.check(got == 240, || format!("(3,8): {got} roots, expected 240"));
    }
}

fn cartan_of(lat: &PolarizedLattice) -> Vec<Vec<i64>> {
    cartan_matrix(&simple_roots(&lat.enumerate_roots()), lat)
}

/// The E8 Cartan matrix: a chain of seven nodes with an eighth attached to
/// the third from one end.
fn e8_cartan() -> Vec<Vec<i64>> {
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut m = vec![vec![0; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}

/// Whether `b = P a P^T` for some permutation `P` (backtracking).
pub fn permutation_equivalent(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || a[i][i] != b[j][j] {
                continue;
            }
            if map.iter().enumerate().all(|(p, &q)| a[i][p] == b[j][q] && a[p][i] == b[q][j]) {
                map.push(j);
                used[j] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn root_types(c: &mut Checker) {
    for (k, l) in root_grid() {
        let l64 = l as i64;
        let ku = k as usize;
        let want = CartanType::new(if l64 <= k + 1 {
            vec![(Family::A, l - 1)]
        } else if l64 == k + 2 {
            vec![(Family::A, ku + 1), (Family::A, 1)]
        } else if l64 == k + 3 {
            vec![(Family::A, ku + 3)]
        } else {
            vec![(Family::D, ku + 4)]
        });
        let Some(lat) = c.ok(PolarizedLattice::new(k, l), || format!("lattice ({k},{l})")) else { continue };
        if let Some(t) = c.ok(classify(&cartan_of(&lat)), || format!("classify ({k},{l})")) {
            c.check(t == want, || format!("({k},{l}): type {t}, expected {want}"));
        }
    }
    if let Some(lat) = c.ok(PolarizedLattice::new(3, 8), || "lattice (3,8)".into()) {
        let cartan = cartan_of(&lat);
        if let Some(t) = c.ok(classify(&cartan), || "classify (3,8)".into()) {
            c.check(t.to_string() == "E8", || format!("(3,8): type {t}, expected E8"));
        }
        c.check(permutation_equivalent(&cartan, &e8_cartan()), || {
            "(3,8): Cartan matrix is not the E8 Cartan matrix up to permutation".into()
        });
    }
}

fn connectedness(c: &mut Checker) {
    let mut cases = root_grid();
    cases.push((3, 8));
    for (k, l) in cases {
        let Some(lat) = c.ok(PolarizedLattice::new(k, l), || format!("lattice ({k},{l})")) else { continue };
        let Some((by_det, by_smith)) = c.ok(index_witnesses(&lat.enumerate_roots(), &lat), || {
            format!("index ({k},{l})")
        }) else {
            continue;
        };
        c.check(by_det == by_smith, || format!("({k},{l}): det(Cartan) {by_det} != discriminant {by_smith}"));
        let l64 = l as i64;
        let claim = if (k, l) == (3, 8) {
            Some(1)
        } else if l64 == k + 3 {
            Some(k + 4)
        } else if l64 == k + 4 {
            Some(4)
        } else {
            None
        };
        if let Some(claim) = claim {
            c.check(by_det == claim, || format!("({k},{l}): index {by_det}, expected {claim}"));
        } else if l64 == k + 2 {
            c.note(format!("({k},{l}): index {by_det}; printed value 2(k+1) = {}", 2 * (k + 1)));
        }
    }
}

fn hilbert_numerators(c: &mut Checker) {
    for k in 1..=12usize {
        let h = anticanonical_hilbert_p11k(k);
        let closed = closed_form_p11k_numerator(k);
        c.check(h.denominator == vec![1, 1, k] && h.numerator == closed, || {
            format!("P(1,1,{k}): numerator {:?}, closed form {:?}", h.numerator.coeffs(), closed.coeffs())
        });
    }
    for m in 1..=6i64 {
        let mut identities = 0;
        for k in [2 * m, 2 * m - 1] {
            for l in k + 2..=k + 4 {
                let Some(rec) = c.ok(family_record(FamilyId::X { k, l }), || format!("X({k},{l})")) else {
                    continue;
                };
                let Some(target) = c.ok(cascade_hilbert(k as usize, l as usize), || format!("series X({k},{l})"))
                else {
                    continue;
                };
                for model in rec.models.iter().filter(|m| m.hilbert_claim) {
                    identities += 1;
                    let w: Vec<usize> = model.weights.iter().map(|&a| a as usize).collect();
                    let d: Vec<usize> = model.degrees.iter().map(|&a| a as usize).collect();
                    c.check(fractions_equal(&ci_hilbert(&w, &d), &target), || {
                        format!("m={m}: {model} does not have the series of X({k},{l})")
                    });
                }
            }
        }
        c.check(identities == 4, || format!("m={m}: {identities} model identities, expected 4"));
    }
    for k in 1..=12usize {
        let k64 = k as i64;
        for l in 0..=(((k64 + 2) * (k64 + 2) - 1) / k64) as usize {
            let Some(h) = c.ok(cascade_hilbert_raw(k, l), || format!("series ({k},{l})")) else { continue };
            let coeffs = h.numerator.coeffs();
            c.check(h.numerator.is_palindromic(), || format!("({k},{l}): numerator {coeffs:?} not palindromic"));
            c.check(coeffs.iter().all(|&x| x >= 0), || {
                format!("({k},{l}): numerator {coeffs:?} over (1-t)^2(1-t^{k}) has a negative coefficient")
            });
        }
    }
}

fn laurent_inversion(c: &mut Checker) {
    // the P^1 scaffolding of the first k+1 blow-ups: verbatim
    for k in 3..=8 {
        for l in 1..=k + 1 {
            let Some(rec) = c.ok(family_record(FamilyId::X { k, l }), || format!("X({k},{l})")) else { continue };
            let Some(s) = rec.scaffolds.first() else {
                c.check(false, || format!("X({k},{l}): no scaffolding"));
                continue;
            };
            let Some(chk) = c.ok(check_scaffold(s), || format!("X({k},{l}) Laurent inversion")) else { continue };
            let printed = s.printed.as_ref().expect("low-l scaffolds carry their matrix");
            c.check(chk.git.weight_matrix == printed.weight_matrix, || {
                format!("X({k},{l}): matrix {:?}, expected {:?}", chk.git.weight_matrix, printed.weight_matrix)
            });
            c.check(Some(&chk.git.stability) == printed.stability.as_ref(), || {
                format!("X({k},{l}): stability {:?}", chk.git.stability)
            });
            c.check(chk.binomials_ok == Some(true), || format!("X({k},{l}): binomial degrees"));
        }
    }
    let equivalent = |c: &mut Checker, id: FamilyId, which: usize| {
        let Some(rec) = c.ok(family_record(id), || id.to_string()) else { return };
        let Some(s) = rec.scaffolds.get(which) else {
            c.check(false, || format!("{id}: scaffolding {which} missing"));
            return;
        };
        if let Some(chk) = c.ok(check_scaffold(s), || format!("{id} Laurent inversion")) {
            c.check(chk.printed_equivalent == Some(true), || {
                format!("{id}: {:?} is not equivalent to the printed matrix", chk.git.weight_matrix)
            });
            c.check(chk.binomials_ok != Some(false), || format!("{id}: binomial degrees"));
        }
    };
    for m in 2..=5 {
        let k = 2 * m - 1;
        equivalent(c, FamilyId::X { k, l: k + 2 }, 0);
        equivalent(c, FamilyId::X { k, l: k + 3 }, 0);
    }
    equivalent(c, FamilyId::Pair { k1: 6, k2: 6 }, 0);
    equivalent(c, FamilyId::Pair { k1: 6, k2: 6 }, 1);
    // single-strut anti-canonical scaffoldings give weighted projective spaces
    for m in 2..=5 {
        let cases = [
            (FamilyId::X { k: 2 * m, l: 2 * m + 3 }, vec![1, 1, 1, m]),
            (FamilyId::X { k: 2 * m, l: 2 * m + 4 }, vec![1, 1, m, m + 1]),
            (FamilyId::X { k: 2 * m - 1, l: 2 * m + 3 }, vec![1, 1, m, m, 2 * m - 1]),
        ];
        for (id, want) in cases {
            let Some(rec) = c.ok(family_record(id), || id.to_string()) else { continue };
            let Some(s) = rec.scaffolds.first() else {
                c.check(false, || format!("{id}: no scaffolding"));
                continue;
            };
            c.check(s.scaffolding.struts.len() == 1, || format!("{id}: not a single strut"));
            if let Some(chk) = c.ok(check_scaffold(s), || format!("{id} Laurent inversion")) {
                let mut w = chk.git.weights().unwrap_or_default();
                w.sort_unstable();
                c.check(w == want, || format!("{id}: weights {w:?}, expected {want:?}"));
            }
        }
    }
}

fn quasismoothness(c: &mut Checker) {
    let mut cases: Vec<(Vec<i64>, Vec<i64>, bool)> = Vec::new();
    for m in 2..=6 {
        let k = 2 * m - 1;
        cases.push((vec![1, 1, m, m, k], vec![k + 1, k + 1], true));
    }
    for m in 2..=6 {
        cases.push((vec![1, 1, m, m + 1], vec![2 * m + 2], false));
    }
    cases.push((vec![1, 1, 6, 6], vec![12], true));
    cases.push((vec![1, 1, 1, 3, 3], vec![2, 6], true));
    for (a, b) in [(3, 5), (3, 6), (5, 5), (5, 6)] {
        cases.push((vec![1, 1, a, b], vec![a + b], true));
    }
    for (w, d, want) in cases {
        if let Some(r) = c.ok(is_quasismooth(&w, &d), || format!("X_{d:?} in P{w:?}")) {
            c.check(r.quasismooth == want, || {
                format!(
                    "X_{d:?} in P{w:?}: quasismooth = {}, expected {want} (violating subset {:?})",
                    r.quasismooth, r.violating_subset
                )
            });
        }
    }
}

fn polygon_invariants(c: &mut Checker) {
    for id in catalog_ids() {
        let Some(rec) = c.ok(family_record(id), || id.to_string()) else { continue };
        let p = &rec.polygon;
        c.check(p.is_fano(), || format!("{id}: not Fano"));
        match id {
            FamilyId::X { k, l } => {
                c.check(rec.degree == expected_degree(k, l), || format!("{id}: degree {}", rec.degree));
                let want = expected_content(k, 3 + l);
                c.check(rec.content == want, || format!("{id}: content {}, expected {want}", rec.content));
            }
            FamilyId::B { k } => {
                // the contraction of a (-1)-curve on X(k,k+1)
                let want_degree = expected_degree(k, k + 1) + 1;
                c.check(rec.degree == want_degree, || format!("{id}: degree {}", rec.degree));
                let want = expected_content(k, k + 3);
                c.check(rec.content == want, || format!("{id}: content {}, expected {want}", rec.content));
            }
            FamilyId::Pair { k1, k2 } => {
                let mut want = vec![
                    QuotientSingularity::new(k1, 1, 1).expect("valid"),
                    QuotientSingularity::new(k2, 1, 1).expect("valid"),
                ];
                want.sort();
                c.check(rec.content.basket == want, || format!("{id}: basket {}", rec.content));
            }
        }
    }
    for k in 4..=10 {
        if let Some(n) = c.ok(cascade_size(k), || format!("cascade_size({k})")) {
            c.check(n as i64 == k + 6, || format!("cascade_size({k}) = {n}, expected {}", k + 6));
        }
    }
}

fn mutations(c: &mut Checker) {
    let p = LatticePolygon::from_coords(&[(-1, 1), (1, 1), (5, -1), (-5, -1)]).expect("polygon");
    let rect = LatticePolygon::from_coords(&[(-3, -1), (3, -1), (3, 1), (-3, 1)]).expect("polygon");
    let reps = [
        (MutationMove::new(pt(0, -1), pt(2, 0)), polygon_pair(6, 6)),
        (MutationMove::new(pt(0, 1), pt(4, 0)), Ok(rect)),
    ];
    for (mv, target) in reps {
        let (Some(mv), Some(target)) = (c.ok(mv, || "move".into()), c.ok(target, || "target".into())) else {
            continue;
        };
        let got = c.ok(mutate(&p, mv).and_then(|q| q.normal_form()), || format!("mutation {mv:?}"));
        let want = c.ok(target.normal_form(), || format!("normal form of {target}"));
        if let (Some(got), Some(want)) = (got, want) {
            c.check(got == want, || format!("mutation {mv:?} gives {got}, expected {want}"));
        }
    }
    for k in [3, 5, 6, 7] {
        let checks = [
            (polygon_x(k, k), FiniteAbelianGroup::trivial(), format!("X({k},{k})")),
            (polygon_b(k), FiniteAbelianGroup::cyclic(2), format!("B({k})")),
        ];
        for (poly, want, name) in checks {
            let Some(poly) = c.ok(poly, || name.clone()) else { continue };
            if let Some(r) = c.ok(fundamental_group_invariant(&poly, DEFAULT_SEARCH_BOUND), || name.clone()) {
                c.check(r.group == want, || format!("{name}: group {}, expected {want}", r.group));
            }
        }
    }
    let tri = LatticePolygon::from_coords(&[(1, 0), (0, 1), (-1, -1)]).expect("polygon");
    if let Some(q) = c.ok(quiver(&tri), || "quiver of P^2".into()) {
        let forward = (0..3).all(|i| q.arrows[i][(i + 1) % 3] == 3 && q.arrows[(i + 1) % 3][i] == 0);
        let backward = (0..3).all(|i| q.arrows[(i + 1) % 3][i] == 3 && q.arrows[i][(i + 1) % 3] == 0);
        c.check(q.len() == 3 && (forward || backward), || format!("quiver of P^2: {:?}", q.arrows));
    }
    if let Some(q) = c.ok(reduced_quiver(&tri), || "reduced quiver of P^2".into()) {
        c.check(q.is_empty(), || format!("reduced quiver of P^2 has {} nodes", q.len()));
    }
    for k in [3, 5] {
        for l in 2..=k + 4 {
            let Some(p) = c.ok(polygon_x(k, l), || format!("X({k},{l})")) else { continue };
            let want = match l - k {
                d if d < 2 => (l - 2) as usize,
                2 => (k + 1) as usize,
                3 => (k + 3) as usize,
                _ => (k + 5) as usize,
            };
            let isolated = l <= k + 1;
            let found = find_representative_with_quiver(
                &p,
                |q| q.len() == want && (!isolated || q.has_no_arrows()),
                DEFAULT_SEARCH_BOUND,
            );
            if let Some(found) = c.ok(found, || format!("search X({k},{l})")) {
                c.check(found.is_some(), || {
                    format!("X({k},{l}): no representative with {want} reduced-quiver nodes within the bound")
                });
            }
        }
    }
}

fn properties(c: &mut Checker) {
    // mutation invariance over every catalog polygon and every move
    for id in catalog_ids() {
        let Some(rec) = c.ok(family_record(id), || id.to_string()) else { continue };
        for mv in available_moves(&rec.polygon) {
            let Some(q) = c.ok(mutate(&rec.polygon, mv), || format!("{id}: {mv:?}")) else { continue };
            let same = q.degree().ok() == Some(rec.degree)
                && q.singularity_content().ok().as_ref() == Some(&rec.content);
            c.check(same, || format!("{id}: move {mv:?} changes degree or content"));
        }
    }
    // root systems: closed under negation and under every reflection
    let mut cases = root_grid();
    cases.push((3, 8));
    for (k, l) in cases {
        let Some(lat) = c.ok(PolarizedLattice::new(k, l), || format!("lattice ({k},{l})")) else { continue };
        let roots = lat.enumerate_roots();
        let set: HashSet<&Root> = roots.iter().collect();
        let neg = roots.iter().all(|r| set.contains(&r.iter().map(|x| -x).collect::<Root>()));
        c.check(neg, || format!("({k},{l}): not closed under negation"));
        let refl = roots.iter().all(|a| roots.iter().all(|b| set.contains(&reflect(&lat, b, a))));
        c.check(refl, || format!("({k},{l}): not closed under reflections"));
    }
    // duality and random scaffoldings
    let mut polygons: Vec<LatticePolygon> =
        catalog_ids().into_iter().filter_map(|id| family_record(id).ok()).map(|r| r.polygon).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let (p, s) = random_valid_scaffolding(&mut rng);
        if let Some(git) = c.ok(s.laurent_invert(&p), || format!("random scaffolding {i}")) {
            let inv = git.check_invariants();
            c.check(inv.is_ok(), || format!("random scaffolding {i}: {inv:?}"));
        }
        polygons.push(p);
    }
    for p in polygons {
        let dd = p.dual().and_then(|d| d.dual());
        c.check(dd.as_ref().ok() == Some(&p.to_rational().canonical()), || format!("dual(dual({p})) = {dd:?}"));
    }
}
