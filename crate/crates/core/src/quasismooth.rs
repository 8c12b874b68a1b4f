//! Quasismoothness of general hypersurfaces and codimension-2 complete
//! intersections in weighted projective space (Iano-Fletcher's criteria).
//!
//! "General" is read combinatorially: every verdict depends only on which
//! monomials of the relevant degrees exist.

use serde::Serialize;

use crate::error::{Error, Result};

/// Whether `sum m_j a_j = d` has a solution in nonnegative integers.
pub fn has_monomial(weights: &[i64], d: i64) -> bool {
    if d < 0 {
        return false;
    }
    let d = d as usize;
    let mut reach = vec![false; d + 1];
    reach[0] = true;
    for &a in weights.iter().filter(|&&a| a > 0) {
        let a = a as usize;
        for x in a..=d {
            if reach[x - a] {
                reach[x] = true;
            }
        }
    }
    reach[d]
}

pub fn is_linear_cone(weights: &[i64], d: i64) -> bool {
    weights.contains(&d)
}

/// Which variables `x_e` may serve as the extra factor in a monomial
/// `x_I^m x_e`. The criteria place no restriction on `e`; the other rule
/// is kept for comparison against the sampled oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TailRule {
    #[default]
    Unrestricted,
    OutsideSubset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasismoothReport {
    pub quasismooth: bool,
    /// some weight equals a degree
    pub linear_cone: bool,
    /// first subset (as variable indices) for which no condition holds
    pub violating_subset: Option<Vec<usize>>,
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

/// `E_I(d) = { e : x_I^m x_e has degree d for some m }`.
fn tails(weights: &[i64], subset: &[usize], d: i64, rule: TailRule) -> Vec<usize> {
    let wi: Vec<i64> = subset.iter().map(|&i| weights[i]).collect();
    (0..weights.len())
        .filter(|e| rule == TailRule::Unrestricted || !subset.contains(e))
        .filter(|&e| has_monomial(&wi, d - weights[e]))
        .collect()
}

fn sub_weights(weights: &[i64], subset: &[usize]) -> Vec<i64> {
    subset.iter().map(|&i| weights[i]).collect()
}

pub fn is_quasismooth_hypersurface(weights: &[i64], d: i64) -> QuasismoothReport {
    is_quasismooth_hypersurface_with(weights, d, TailRule::default())
}

pub fn is_quasismooth_hypersurface_with(weights: &[i64], d: i64, rule: TailRule) -> QuasismoothReport {
    if is_linear_cone(weights, d) {
        return QuasismoothReport { quasismooth: true, linear_cone: true, violating_subset: None };
    }
    let violating = subsets(weights.len()).find(|s| {
        let pure = has_monomial(&sub_weights(weights, s), d);
        !(pure || tails(weights, s, d, rule).len() >= s.len())
    });
    QuasismoothReport { quasismooth: violating.is_none(), linear_cone: false, violating_subset: violating }
}

fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in k_subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Condition (4): distinct tails `e^1_mu` for `d1` and `e^2_mu` for `d2`,
/// `mu = 1..kappa`, whose union has at least `kappa + 1` elements. Decided
/// by trying every pair of `kappa`-subsets.
pub fn double_tail_condition(e1: &[usize], e2: &[usize], kappa: usize) -> bool {
    let s1 = k_subsets(e1, kappa);
    let s2 = k_subsets(e2, kappa);
    s1.iter().any(|a| {
        s2.iter().any(|b| {
            let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
            u.sort_unstable();
            u.dedup();
            u.len() > kappa
        })
    })
}

pub fn is_quasismooth_ci2(weights: &[i64], d1: i64, d2: i64) -> Result<QuasismoothReport> {
    is_quasismooth_ci2_with(weights, d1, d2, TailRule::default())
}

pub fn is_quasismooth_ci2_with(
    weights: &[i64],
    d1: i64,
    d2: i64,
    rule: TailRule,
) -> Result<QuasismoothReport> {
    if weights.len() < 3 {
        return Err(Error::DegenerateInput("need at least three weights".into()));
    }
    if is_linear_cone(weights, d1) || is_linear_cone(weights, d2) {
        return Err(Error::LinearCone(format!("degrees ({d1},{d2}) in weights {weights:?}")));
    }
    let violating = subsets(weights.len()).find(|s| {
        let kappa = s.len();
        let w = sub_weights(weights, s);
        let (p1, p2) = (has_monomial(&w, d1), has_monomial(&w, d2));
        let e1 = tails(weights, s, d1, rule);
        let e2 = tails(weights, s, d2, rule);
        let ok = (p1 && p2)
            || (p1 && e2.len() + 1 >= kappa)
            || (p2 && e1.len() + 1 >= kappa)
            || double_tail_condition(&e1, &e2, kappa);
        !ok
    });
    Ok(QuasismoothReport { quasismooth: violating.is_none(), linear_cone: false, violating_subset: violating })
}

/// Dispatch on the number of degrees (one or two).
pub fn is_quasismooth(weights: &[i64], degrees: &[i64]) -> Result<QuasismoothReport> {
    if weights.iter().any(|&a| a < 1) || degrees.iter().any(|&d| d < 1) {
        return Err(Error::DegenerateInput("weights and degrees must be positive".into()));
    }
    match degrees {
        [d] if weights.len() >= 2 => Ok(is_quasismooth_hypersurface(weights, *d)),
        [d1, d2] => is_quasismooth_ci2(weights, *d1, *d2),
        _ => Err(Error::DegenerateInput(format!(
            "{} degrees in {} variables not supported",
            degrees.len(),
            weights.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_existence() {
        assert!(has_monomial(&[2, 3], 7));
        assert!(!has_monomial(&[2, 4], 7));
        assert!(!has_monomial(&[5], 12));
        assert!(has_monomial(&[], 0));
        assert!(!has_monomial(&[], 3));
        assert!(!has_monomial(&[1], -1));
    }

    #[test]
    fn linear_cones() {
        assert!(is_linear_cone(&[1, 1, 1, 3], 3));
        assert!(!is_linear_cone(&[1, 1, 6, 6], 12));
        assert!(is_linear_cone(&[1, 2], 2));
    }

    #[test]
    fn hypersurface_examples() {
        assert!(is_quasismooth_hypersurface(&[1, 1, 6, 6], 12).quasismooth);
        assert!(is_quasismooth_hypersurface(&[1, 1, 1], 3).quasismooth);
        assert!(is_quasismooth_hypersurface(&[1, 1, 3, 5], 8).quasismooth);
        // the weight-3 point of P(1,1,3,4) has no monomial y^a x_e of degree 8
        assert!(!is_quasismooth_hypersurface(&[1, 1, 3, 4], 8).quasismooth);
        let r = is_quasismooth_hypersurface(&[1, 1, 4, 5], 10);
        assert!(!r.quasismooth);
        assert_eq!(r.violating_subset, Some(vec![2]));
    }

    #[test]
    fn ci_examples() {
        assert!(is_quasismooth_ci2(&[1, 1, 3, 3, 5], 6, 6).unwrap().quasismooth);
        // the quadric only involves the weight-1 variables, so its gradient
        // vanishes on the two points of the surface with x = 0
        let r = is_quasismooth_ci2(&[1, 1, 1, 3, 3], 2, 6).unwrap();
        assert_eq!(r.violating_subset, Some(vec![3, 4]));
        assert!(is_quasismooth_ci2(&[1, 1, 2, 2, 3], 4, 4).unwrap().quasismooth);
        assert!(matches!(is_quasismooth_ci2(&[1, 1, 1, 3, 3], 3, 6), Err(Error::LinearCone(_))));
    }

    #[test]
    fn double_tail_closed_form() {
        let sets: Vec<Vec<usize>> = (0u32..32)
            .map(|m| (0..5).filter(|&i| m & (1 << i) != 0).collect())
            .collect();
        for e1 in &sets {
            for e2 in &sets {
                for kappa in 1..=5 {
                    let closed = e1.len() >= kappa
                        && e2.len() >= kappa
                        && !(e1 == e2 && e1.len() == kappa);
                    assert_eq!(double_tail_condition(e1, e2, kappa), closed, "{e1:?} {e2:?} {kappa}");
                }
            }
        }
    }
}
