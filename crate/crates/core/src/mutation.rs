//! Combinatorial mutations of Fano polygons, the weight-vector group of a
//! mutation class, and the quivers attached to a polygon.
//!
//! A move is a primitive `w` in the dual lattice together with a factor
//! segment `[0, f]` with `<w, f> = 0`. At height `h = <w, .>` the slice of
//! the polygon gains `h` copies of the factor (or loses `-h` copies when
//! `h < 0`); concretely the `f`-minimal boundary chain is fixed and the
//! `f`-maximal chain is sheared by `v -> v + <w, v> f`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::smith_invariants;
use crate::polygon::{convex_hull, pt, LatticePoint, LatticePolygon};

pub const DEFAULT_SEARCH_BOUND: usize = 500;

/// Largest coordinate a mutation may produce. Mutation classes such as the
/// Markov triangles grow exponentially along a branch, so searches skip
/// polygons past this size (and report that they did not exhaust the class).
/// Normal forms square the coordinate size and hulls square it again, so
/// this keeps every intermediate inside `i64`.
pub const COORD_LIMIT: i64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MutationMove {
    pub w: LatticePoint,
    /// the factor segment `[0, factor]`; need not be primitive
    pub factor: LatticePoint,
}

impl MutationMove {
    pub fn new(w: LatticePoint, factor: LatticePoint) -> Result<MutationMove> {
        if !w.is_primitive() {
            return Err(Error::InvalidMove(format!("weight vector {w} is not primitive")));
        }
        if w.dot(factor) != 0 {
            return Err(Error::InvalidMove(format!("<{w}, {factor}> != 0")));
        }
        Ok(MutationMove { w, factor })
    }

    pub fn inverse(self) -> MutationMove {
        MutationMove { w: -self.w, factor: self.factor }
    }
}

/// Applies a move. The bottom slice (the minimum of `w`) must be an edge of
/// lattice length at least `c * height`, where `c` is the length of the factor.
pub fn mutate(p: &LatticePolygon, m: MutationMove) -> Result<LatticePolygon> {
    let m = MutationMove::new(m.w, m.factor)?;
    if !p.is_fano() {
        return Err(Error::NotFano(p.to_string()));
    }
    if m.factor == pt(0, 0) {
        return Ok(p.clone());
    }
    let verts = p.vertices();
    let h_min = verts.iter().map(|v| m.w.dot(*v)).min().expect("nonempty polygon");
    let bottom: Vec<LatticePoint> = verts.iter().copied().filter(|v| m.w.dot(*v) == h_min).collect();
    let slice_len = if bottom.len() == 2 { (bottom[1] - bottom[0]).content() } else { 0 };
    let c = m.factor.content();
    if slice_len < c * -h_min {
        return Err(Error::InvalidMove(format!(
            "bottom slice of length {slice_len} at height {h_min} cannot absorb factor {}",
            m.factor
        )));
    }
    let edges = p.edges();
    let n = verts.len();
    let mut image = Vec::with_capacity(2 * n);
    for i in 0..n {
        // the two edges through vertex i
        let tight = [edges[(i + n - 1) % n].normal, edges[i].normal];
        let v = verts[i];
        if tight.iter().any(|nm| nm.dot(m.factor) > 0) {
            image.push(v);
        }
        if tight.iter().any(|nm| nm.dot(m.factor) < 0) {
            let h = m.w.dot(v) as i128;
            let x = v.x as i128 + h * m.factor.x as i128;
            let y = v.y as i128 + h * m.factor.y as i128;
            let lim = COORD_LIMIT as i128;
            if x.abs() > lim || y.abs() > lim {
                return Err(Error::OutOfRange(format!("mutation of {p} leaves |coordinate| <= {COORD_LIMIT}")));
            }
            image.push(pt(x as i64, y as i64));
        }
    }
    convex_hull(&image)
}

/// Every valid move with a primitive factor direction taken from an edge:
/// `w` is the inner normal of the edge, `f` its direction, and the factor
/// is `c f` for `c = 1 .. length / height`.
pub fn available_moves(p: &LatticePolygon) -> Vec<MutationMove> {
    let mut out = Vec::new();
    for e in p.edges() {
        for c in 1..=e.length / e.height {
            out.push(MutationMove { w: e.normal, factor: e.dir.scale(c) });
        }
    }
    out
}

/// Polygons one mutation away, as normal forms. Neighbours beyond
/// `COORD_LIMIT` are left out.
pub fn mutation_neighbors(p: &LatticePolygon) -> Result<BTreeSet<LatticePolygon>> {
    Ok(capped_neighbors(p)?.0)
}

fn within_limit(p: &LatticePolygon) -> bool {
    p.vertices().iter().all(|v| v.x.abs() <= COORD_LIMIT && v.y.abs() <= COORD_LIMIT)
}

fn capped_neighbors(p: &LatticePolygon) -> Result<(BTreeSet<LatticePolygon>, bool)> {
    let mut out = BTreeSet::new();
    let mut capped = false;
    for m in available_moves(p) {
        match mutate(p, m) {
            Ok(q) => {
                let q = q.normal_form()?;
                if within_limit(&q) {
                    out.insert(q);
                } else {
                    capped = true;
                }
            }
            Err(Error::OutOfRange(_)) => capped = true,
            Err(e) => return Err(e),
        }
    }
    Ok((out, capped))
}

/// Breadth-first search over the mutation class up to `bound` polygons
/// (deduplicated by normal form), in discovery order.
pub fn mutation_class(p: &LatticePolygon, bound: usize) -> Result<(Vec<LatticePolygon>, bool)> {
    let start = p.normal_form()?;
    let mut seen: HashSet<LatticePolygon> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    let mut exhausted = true;
    while let Some(q) = queue.pop_front() {
        let (nbs, capped) = capped_neighbors(&q)?;
        exhausted &= !capped;
        for nb in nbs {
            if seen.contains(&nb) {
                continue;
            }
            if order.len() >= bound {
                return Ok((order, false));
            }
            seen.insert(nb.clone());
            order.push(nb.clone());
            queue.push_back(nb);
        }
    }
    Ok((order, exhausted))
}

/// `Z^free_rank + Z/d_1 + ... + Z/d_s` with `d_i | d_{i+1}`, each `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<i64>,
    pub free_rank: usize,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new(), free_rank: 0 }
    }

    pub fn cyclic(n: i64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            FiniteAbelianGroup { invariant_factors: vec![n], free_rank: 0 }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// `Z^2` modulo the span of `gens`.
    pub fn quotient_of_z2(gens: &[LatticePoint]) -> Self {
        let rows: Vec<Vec<i64>> = gens.iter().map(|g| vec![g.x, g.y]).collect();
        let inv = if rows.is_empty() { Vec::new() } else { smith_invariants(&rows) };
        FiniteAbelianGroup {
            invariant_factors: inv.iter().filter(|&&d| d > 1).map(|&d| d as i64).collect(),
            free_rank: 2 - inv.len(),
        }
    }
}

impl std::fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            write!(f, "trivial")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Report {
    pub group: FiniteAbelianGroup,
    pub polygons_visited: usize,
    /// the whole mutation class was enumerated within the bound
    pub exhausted: bool,
    /// number of polygons visited when the generated lattice last grew
    pub last_change: usize,
    /// exhausted, or no growth during the second half of the search
    pub stabilized: bool,
}

/// `M / Lambda`, where `Lambda` is generated by the weight vectors of all
/// moves met in a bounded breadth-first search. Polygons are kept in the
/// original lattice (not normal forms), since `Lambda` lives in a fixed `M`.
pub fn fundamental_group_invariant(p: &LatticePolygon, bound: usize) -> Result<Pi1Report> {
    if !p.is_fano() {
        return Err(Error::NotFano(p.to_string()));
    }
    let mut seen: HashSet<LatticePolygon> = HashSet::from([p.clone()]);
    let mut queue = VecDeque::from([p.clone()]);
    let mut gens: Vec<LatticePoint> = Vec::new();
    let mut group = FiniteAbelianGroup::quotient_of_z2(&gens);
    let mut last_change = 0;
    let mut exhausted = true;
    while let Some(q) = queue.pop_front() {
        for m in available_moves(&q) {
            if !gens.contains(&m.w) {
                gens.push(m.w);
                let g = FiniteAbelianGroup::quotient_of_z2(&gens);
                if g != group {
                    group = g;
                    last_change = seen.len();
                }
            }
            let nb = match mutate(&q, m) {
                Ok(nb) => nb,
                Err(Error::OutOfRange(_)) => {
                    exhausted = false;
                    continue;
                }
                Err(e) => return Err(e),
            };
            if !within_limit(&nb) {
                exhausted = false;
                continue;
            }
            if seen.contains(&nb) {
                continue;
            }
            if seen.len() >= bound {
                exhausted = false;
                continue;
            }
            seen.insert(nb.clone());
            queue.push_back(nb);
        }
    }
    let visited = seen.len();
    Ok(Pi1Report {
        group,
        polygons_visited: visited,
        exhausted,
        last_change,
        stabilized: exhausted || 2 * last_change <= visited,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverNode {
    /// index of the counterclockwise edge the node comes from
    pub edge: usize,
    pub normal: LatticePoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub nodes: Vec<QuiverNode>,
    pub arrows: Vec<Vec<i64>>,
}

impl Quiver {
    fn from_nodes(nodes: Vec<QuiverNode>) -> Quiver {
        let arrows = nodes
            .iter()
            .map(|a| nodes.iter().map(|b| a.normal.det(b.normal).max(0)).collect())
            .collect();
        Quiver { nodes, arrows }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn arrow_count(&self) -> i64 {
        self.arrows.iter().flatten().sum()
    }

    pub fn has_no_arrows(&self) -> bool {
        self.arrow_count() == 0
    }
}

/// One node per primitive T-cone, carrying the inner normal of its edge;
/// `arrows[i][j] = max(det(w_i, w_j), 0)`.
pub fn quiver(p: &LatticePolygon) -> Result<Quiver> {
    if !p.is_fano() {
        return Err(Error::NotFano(p.to_string()));
    }
    let mut nodes = Vec::new();
    for (i, e) in p.edges().iter().enumerate() {
        for _ in 0..e.length / e.height {
            nodes.push(QuiverNode { edge: i, normal: e.normal });
        }
    }
    Ok(Quiver::from_nodes(nodes))
}

/// Drops one node from every edge at height one. A smooth edge has exactly
/// one node, so all nodes of smooth cones disappear.
pub fn reduced_quiver(p: &LatticePolygon) -> Result<Quiver> {
    let full = quiver(p)?;
    let edges = p.edges();
    let mut dropped = HashSet::new();
    let nodes = full
        .nodes
        .into_iter()
        .filter(|nd| !(edges[nd.edge].height == 1 && dropped.insert(nd.edge)))
        .collect();
    Ok(Quiver::from_nodes(nodes))
}

/// First polygon (breadth-first, by normal form) in the mutation class of
/// `p` whose reduced quiver satisfies `pred`.
pub fn find_representative_with_quiver(
    p: &LatticePolygon,
    pred: impl Fn(&Quiver) -> bool,
    bound: usize,
) -> Result<Option<LatticePolygon>> {
    let (class, _) = mutation_class(p, bound)?;
    for q in class {
        if pred(&reduced_quiver(&q)?) {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;


    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    fn nf(c: &[(i64, i64)]) -> LatticePolygon {
        poly(c).normal_form().unwrap()
    }

    #[test]
    fn polygon_113_representatives() {
        let p = poly(&[(-1, 1), (1, 1), (5, -1), (-5, -1)]);
        let top = mutate(&p, MutationMove::new(pt(0, -1), pt(2, 0)).unwrap()).unwrap();
        assert_eq!(top.normal_form().unwrap(), nf(&[(-6, -1), (0, 1), (6, -1)]));
        let rect = mutate(&p, MutationMove::new(pt(0, 1), pt(4, 0)).unwrap()).unwrap();
        assert_eq!(rect.normal_form().unwrap(), nf(&[(-3, 1), (3, 1), (3, -1), (-3, -1)]));
    }

    #[test]
    fn inverse_move_and_identity() {
        let p = poly(&[(-1, 1), (1, 1), (5, -1), (-5, -1)]);
        for m in available_moves(&p) {
            let q = mutate(&p, m).unwrap();
            assert_eq!(mutate(&q, m.inverse()).unwrap(), p, "{m:?}");
        }
        assert_eq!(mutate(&p, MutationMove::new(pt(0, 1), pt(0, 0)).unwrap()).unwrap(), p);
        let tri = poly(&[(1, 0), (0, 1), (-1, -1)]);
        assert!(matches!(
            mutate(&tri, MutationMove::new(pt(1, 1), pt(1, -1)).unwrap()),
            Err(Error::InvalidMove(_))
        ));
    }

    #[test]
    fn p2_neighbors_and_quivers() {
        let tri = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let nbs = mutation_neighbors(&tri).unwrap();
        assert_eq!(nbs.len(), 1);
        assert!(nbs.contains(&nf(&[(1, 0), (0, 1), (-1, -4)])));
        let q = quiver(&tri).unwrap();
        assert_eq!(q.len(), 3);
        for i in 0..3 {
            assert_eq!(q.arrows[i][(i + 1) % 3] + q.arrows[(i + 1) % 3][i], 3);
        }
        assert!(reduced_quiver(&tri).unwrap().is_empty());
        assert_eq!(quiver(&poly(&[(1, 0), (0, -1), (-1, 5)])).unwrap().len(), 2);
    }

    #[test]
    fn small_groups() {
        let tri = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let r = fundamental_group_invariant(&tri, 60).unwrap();
        assert_eq!(r.group, FiniteAbelianGroup::cyclic(3));
        let b5 = poly(&[(1, 0), (-1, -1), (-1, 5)]);
        assert_eq!(fundamental_group_invariant(&b5, 60).unwrap().group, FiniteAbelianGroup::cyclic(2));
        assert_eq!(FiniteAbelianGroup::cyclic(6).to_string(), "Z/6");
        assert_eq!(FiniteAbelianGroup::quotient_of_z2(&[pt(2, 0)]).to_string(), "Z/2 + Z");
    }
}
