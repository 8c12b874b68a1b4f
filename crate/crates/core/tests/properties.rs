use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dpcascade::Error;
use dpcascade::catalog::{catalog_ids, family_record};
use dpcascade::hilbert::{ci_hilbert, series_expand};
use dpcascade::mutation::{available_moves, mutate};
use dpcascade::polygon::{pt, LatticePoint, LatticePolygon};
use dpcascade::rootsys::{reflect, PolarizedLattice};
use dpcascade::scaffolding::random_valid_scaffolding;

fn catalog_polygons() -> Vec<LatticePolygon> {
    catalog_ids().into_iter().map(|id| family_record(id).unwrap().polygon).collect()
}

fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec((0..3u8, -3i64..=3), 0..5).prop_map(|steps| {
        let mut m = [[1, 0], [0, 1]];
        for (kind, a) in steps {
            let s = match kind {
                0 => [[1, a], [0, 1]],
                1 => [[1, 0], [a, 1]],
                _ => [[0, -1], [1, 0]],
            };
            m = [
                [s[0][0] * m[0][0] + s[0][1] * m[1][0], s[0][0] * m[0][1] + s[0][1] * m[1][1]],
                [s[1][0] * m[0][0] + s[1][1] * m[1][0], s[1][0] * m[0][1] + s[1][1] * m[1][1]],
            ];
        }
        m
    })
}

fn fano_polygon() -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((-4i64..=4, -4i64..=4), 3..8).prop_filter_map("not Fano", |pts| {
        let pts: Vec<LatticePoint> = pts.into_iter().map(|(x, y)| pt(x, y)).collect();
        let p = dpcascade::polygon::convex_hull(&pts).ok()?;
        p.is_fano().then_some(p)
    })
}

/// Number of monomials of each degree `0..order` in the given weights.
fn monomial_counts(weights: &[usize], order: usize) -> Vec<i64> {
    let mut c = vec![0i64; order];
    c[0] = 1;
    for &a in weights {
        for n in a..order {
            c[n] += c[n - a];
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn content_and_normal_form_are_unimodular_invariants(i in 0usize..60, u in unimodular()) {
        let polys = catalog_polygons();
        let p = &polys[i % polys.len()];
        let q = p.transform(u);
        prop_assert_eq!(q.singularity_content().unwrap(), p.singularity_content().unwrap());
        prop_assert_eq!(q.normal_form().unwrap(), p.normal_form().unwrap());
        prop_assert_eq!(q.degree().unwrap(), p.degree().unwrap());
    }

    #[test]
    fn dual_is_an_involution(p in fano_polygon()) {
        let dd = p.dual().unwrap().dual().unwrap();
        prop_assert_eq!(dd, p.to_rational().canonical());
    }

    #[test]
    fn mutation_walks_keep_degree_and_content(i in 0usize..60, picks in prop::collection::vec(0usize..64, 1..6)) {
        let polys = catalog_polygons();
        let start = &polys[i % polys.len()];
        let (degree, content) = (start.degree().unwrap(), start.singularity_content().unwrap());
        let mut p = start.clone();
        for pick in picks {
            let moves = available_moves(&p);
            if moves.is_empty() {
                break;
            }
            let m = moves[pick % moves.len()];
            let q = match mutate(&p, m) {
                Ok(q) => q,
                // past the coordinate cap of the search
                Err(Error::OutOfRange(_)) => break,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            prop_assert_eq!(&mutate(&q, m.inverse()).unwrap(), &p);
            p = q.normal_form().unwrap();
            prop_assert_eq!(p.degree().unwrap(), degree);
            prop_assert_eq!(&p.singularity_content().unwrap(), &content);
        }
    }

    #[test]
    fn random_scaffoldings_satisfy_git_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, s) = random_valid_scaffolding(&mut rng);
        let git = s.laurent_invert(&p).unwrap();
        prop_assert!(git.check_invariants().is_ok());
        prop_assert_eq!(git.rows(), s.struts.iter().filter(|t| !t.uneliminated).count());
    }

    #[test]
    fn roots_closed_under_negation_and_reflection(k in 1i64..=8, l in 2usize..=12) {
        prop_assume!(l as i64 * k < (k + 2) * (k + 2));
        let lat = PolarizedLattice::new(k, l).unwrap();
        let roots = lat.enumerate_roots();
        let set: HashSet<&Vec<i64>> = roots.iter().collect();
        for a in &roots {
            prop_assert!(set.contains(&a.iter().map(|x| -x).collect::<Vec<_>>()));
            for b in &roots {
                prop_assert!(set.contains(&reflect(&lat, b, a)));
            }
        }
    }

    #[test]
    fn hypersurface_series_counts_monomials(w in prop::collection::vec(1usize..=6, 2..=4), d in 1usize..=20) {
        let order = 40;
        let got = series_expand(&ci_hilbert(&w, &[d]), order);
        let m = monomial_counts(&w, order);
        let want: Vec<i64> = (0..order).map(|n| m[n] - if n >= d { m[n - d] } else { 0 }).collect();
        prop_assert_eq!(got, want);
    }
}
