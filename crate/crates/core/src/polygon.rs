//! Rank-2 lattice geometry: polygons, polar duals, cyclic quotient
//! singularities of cones and the singularity content of Fano polygons.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{ext_gcd, gcd};

pub type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

pub const fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint { x, y }
}

impl LatticePoint {
    pub fn det(self, o: LatticePoint) -> i64 {
        self.x * o.y - self.y * o.x
    }

    pub fn dot(self, o: LatticePoint) -> i64 {
        self.x * o.x + self.y * o.y
    }

    pub fn content(self) -> i64 {
        gcd(self.x, self.y)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    pub fn primitive(self) -> LatticePoint {
        let g = self.content();
        if g == 0 {
            self
        } else {
            pt(self.x / g, self.y / g)
        }
    }

    pub fn scale(self, c: i64) -> LatticePoint {
        pt(c * self.x, c * self.y)
    }

    /// `m * self`, with `m` row-major.
    pub fn apply(self, m: [[i64; 2]; 2]) -> LatticePoint {
        pt(m[0][0] * self.x + m[0][1] * self.y, m[1][0] * self.x + m[1][1] * self.y)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl std::ops::Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        pt(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        pt(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        pt(-self.x, -self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub fn is_unimodular(m: [[i64; 2]; 2]) -> bool {
    (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1
}

/// A convex lattice polygon, vertices counterclockwise starting from the
/// lexicographically smallest one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// An edge of a polygon containing the origin, traversed counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// primitive direction from `start` to `end`
    pub dir: LatticePoint,
    pub length: i64,
    /// lattice height of the edge above the origin (`det(start, end) / length`)
    pub height: i64,
    /// primitive inner normal, `<normal, start> = -height`
    pub normal: LatticePoint,
}

pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolygon> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(format!("{} distinct points", pts.len())));
    }
    let cross = |o: LatticePoint, a: LatticePoint, b: LatticePoint| (a - o).det(b - o);
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("all points are collinear".into()));
    }
    Ok(LatticePolygon { vertices: hull })
}

impl LatticePolygon {
    /// Builds the hull of `points`; the flag reports whether `points` was
    /// already exactly the counterclockwise vertex list up to rotation.
    pub fn from_points(points: &[LatticePoint]) -> Result<(LatticePolygon, bool)> {
        let p = convex_hull(points)?;
        let n = p.vertices.len();
        let was_hull = points.len() == n
            && (0..n).any(|s| (0..n).all(|i| points[(s + i) % n] == p.vertices[i]));
        Ok((p, was_hull))
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<LatticePolygon> {
        let pts: Vec<LatticePoint> = coords.iter().map(|&(x, y)| pt(x, y)).collect();
        convex_hull(&pts)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn transform(&self, m: [[i64; 2]; 2]) -> LatticePolygon {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|v| v.apply(m)).collect();
        convex_hull(&pts).expect("linear image of a polygon under an invertible map")
    }

    pub fn translate(&self, t: LatticePoint) -> LatticePolygon {
        LatticePolygon {
            vertices: self.vertices.iter().map(|&v| v + t).collect(),
        }
    }

    pub fn double_area(&self) -> i64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].det(self.vertices[(i + 1) % n]))
            .sum()
    }

    pub fn area(&self) -> Q {
        Q::new(self.double_area(), 2)
    }

    /// Closed membership test.
    pub fn contains(&self, p: LatticePoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b - a).det(p - a) >= 0
        })
    }

    pub fn strictly_contains(&self, p: LatticePoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b - a).det(p - a) > 0
        })
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if self.contains(pt(x, y)) {
                    out.push(pt(x, y));
                }
            }
        }
        out
    }

    pub fn boundary_point_count(&self) -> i64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[(i + 1) % n] - self.vertices[i]).content())
            .sum()
    }

    pub fn is_fano(&self) -> bool {
        self.vertices.iter().all(|v| v.is_primitive()) && self.strictly_contains(pt(0, 0))
    }

    fn require_fano(&self) -> Result<()> {
        if self.is_fano() {
            Ok(())
        } else {
            Err(Error::NotFano(self.to_string()))
        }
    }

    /// Counterclockwise edges. Heights are only meaningful when the origin is
    /// strictly interior.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let start = self.vertices[i];
                let end = self.vertices[(i + 1) % n];
                let d = end - start;
                let length = d.content();
                let dir = d.primitive();
                Edge {
                    start,
                    end,
                    dir,
                    length,
                    height: start.det(end) / length,
                    normal: pt(-dir.y, dir.x),
                }
            })
            .collect()
    }

    /// Singularities of the cones over the vertices of the dual, i.e. the
    /// torus-fixed points of the toric surface.
    pub fn vertex_cone_singularities(&self) -> Result<Vec<QuotientSingularity>> {
        self.require_fano()?;
        self.edges()
            .iter()
            .map(|e| cone_singularity(e.start, e.end))
            .collect()
    }

    pub fn singularity_content(&self) -> Result<SingularityContent> {
        self.require_fano()?;
        let mut n = 0;
        let mut basket = Vec::new();
        for e in self.edges() {
            n += e.length / e.height;
            let rho = e.length % e.height;
            if rho > 0 {
                let p = e.start + e.dir.scale(e.length - rho);
                basket.push(cone_singularity(p.primitive(), e.end)?);
            }
        }
        basket.sort();
        Ok(SingularityContent { n, basket })
    }

    pub fn to_rational(&self) -> RationalPolygon {
        RationalPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| (Q::from_integer(v.x), Q::from_integer(v.y)))
                .collect(),
        }
    }

    pub fn dual(&self) -> Result<RationalPolygon> {
        self.to_rational().dual()
    }

    /// Anti-canonical degree, twice the area of the dual polygon.
    pub fn degree(&self) -> Result<Q> {
        self.require_fano()?;
        Ok(self.dual()?.area() * 2)
    }

    /// Canonical representative of the GL(2,Z)-orbit.
    pub fn normal_form(&self) -> Result<LatticePolygon> {
        self.require_fano()?;
        Ok(self.normal_form_with_map().0)
    }

    /// Normal form together with a unimodular `U` such that `U·self` is it.
    pub fn normal_form_with_map(&self) -> (LatticePolygon, [[i64; 2]; 2]) {
        let n = self.vertices.len();
        let mut best: Option<(LatticePolygon, [[i64; 2]; 2])> = None;
        for i in 0..n {
            for (a, b) in [
                (self.vertices[i], self.vertices[(i + 1) % n]),
                (self.vertices[(i + 1) % n], self.vertices[i]),
            ] {
                let u = standardizing_map(a, b);
                let img = self.transform(u);
                if best.as_ref().is_none_or(|(p, _)| img < *p) {
                    best = Some((img, u));
                }
            }
        }
        best.expect("polygon has vertices")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolygonJson {
            vertices: self.vertices.iter().map(|v| [v.x, v.y]).collect(),
        })
        .expect("plain integers serialize")
    }

    /// Reads `{"vertices": [[x,y],...]}` and re-canonicalizes; the flag says
    /// whether the input was already a counterclockwise vertex list.
    pub fn from_json(text: &str) -> Result<(LatticePolygon, bool)> {
        let raw: PolygonJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let pts: Vec<LatticePoint> = raw.vertices.iter().map(|&[x, y]| pt(x, y)).collect();
        LatticePolygon::from_points(&pts)
    }
}

impl Serialize for LatticePolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonJson { vertices: self.vertices.iter().map(|v| [v.x, v.y]).collect() }.serialize(s)
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<[i64; 2]>,
}

/// The unimodular map sending `a` to `(1,0)` and `b` to `(x, y)` with
/// `y = |det(a,b)|` and `0 <= x < y`. `a` must be primitive and `det(a,b) != 0`.
fn standardizing_map(a: LatticePoint, b: LatticePoint) -> [[i64; 2]; 2] {
    let (_, s, t) = ext_gcd(a.x, a.y);
    let mut m = [[s, t], [-a.y, a.x]];
    let mut img = b.apply(m);
    if img.y < 0 {
        m[1] = [-m[1][0], -m[1][1]];
        img.y = -img.y;
    }
    let j = -img.x.div_euclid(img.y);
    [
        [m[0][0] + j * m[1][0], m[0][1] + j * m[1][1]],
        m[1],
    ]
}

/// A polygon with exact rational vertices, counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolygon {
    pub vertices: Vec<(Q, Q)>,
}

impl RationalPolygon {
    pub fn area(&self) -> Q {
        let n = self.vertices.len();
        let twice: Q = (0..n)
            .map(|i| {
                let (ax, ay) = self.vertices[i];
                let (bx, by) = self.vertices[(i + 1) % n];
                ax * by - ay * bx
            })
            .sum();
        twice / 2
    }

    /// Polar dual `{u : <u,v> >= -1 for all v}`. Vertices of the dual are
    /// listed edge by edge, so the result is again counterclockwise.
    pub fn dual(&self) -> Result<RationalPolygon> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let (ax, ay) = self.vertices[i];
            let (bx, by) = self.vertices[(i + 1) % n];
            // inner normal of the edge and its (negative) value on the edge
            let (nx, ny) = (ay - by, bx - ax);
            let h = nx * ax + ny * ay;
            if h >= Q::from_integer(0) {
                return Err(Error::OriginNotInterior);
            }
            out.push((nx / -h, ny / -h));
        }
        Ok(RationalPolygon { vertices: out }.canonical())
    }

    /// Rotates the vertex list to start at the lexicographically smallest vertex.
    pub fn canonical(mut self) -> RationalPolygon {
        if let Some(i) = (0..self.vertices.len()).min_by_key(|&i| self.vertices[i]) {
            self.vertices.rotate_left(i);
        }
        self
    }

    /// Integral vertices, if every vertex is integral.
    pub fn to_lattice(&self) -> Option<LatticePolygon> {
        let pts: Option<Vec<LatticePoint>> = self
            .vertices
            .iter()
            .map(|(x, y)| (x.is_integer() && y.is_integer()).then(|| pt(x.to_integer(), y.to_integer())))
            .collect();
        convex_hull(&pts?).ok()
    }
}

impl fmt::Display for RationalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, (x, y)) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "}}")
    }
}

/// The cyclic quotient singularity `1/R(1,c)`; `R = 1` is a smooth point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientSingularity {
    pub r: i64,
    pub c: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingularityKind {
    Smooth,
    T,
    R,
    Neither,
}

/// Decomposition `R = k·r`, `1 + c = k·w` with `k = gcd(1 + c, R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityClass {
    pub kind: SingularityKind,
    pub k: i64,
    pub w: i64,
    pub r: i64,
}

impl QuotientSingularity {
    pub const SMOOTH: QuotientSingularity = QuotientSingularity { r: 1, c: 0 };

    /// `1/r(a,b)` with `a, b` coprime to `r`, normalized to `1/r(1,c)` with
    /// `c` the smaller of the two equivalent representatives.
    pub fn new(r: i64, a: i64, b: i64) -> Result<QuotientSingularity> {
        if r < 1 {
            return Err(Error::DegenerateInput(format!("index {r}")));
        }
        if r == 1 {
            return Ok(Self::SMOOTH);
        }
        if gcd(a, r) != 1 || gcd(b, r) != 1 {
            return Err(Error::DegenerateInput(format!("weights ({a},{b}) not coprime to {r}")));
        }
        let ainv = crate::intmat::mod_inverse(a, r).expect("coprime");
        Ok(Self::normalized(r, (b * ainv).rem_euclid(r)))
    }

    fn normalized(r: i64, c: i64) -> QuotientSingularity {
        if r == 1 {
            return Self::SMOOTH;
        }
        let cinv = crate::intmat::mod_inverse(c, r).expect("c coprime to r");
        QuotientSingularity { r, c: c.min(cinv) }
    }

    pub fn is_smooth(&self) -> bool {
        self.r == 1
    }

    pub fn classify(&self) -> SingularityClass {
        if self.r == 1 {
            return SingularityClass { kind: SingularityKind::Smooth, k: 1, w: 1, r: 1 };
        }
        let k = gcd(1 + self.c, self.r);
        let r = self.r / k;
        let w = (1 + self.c) / k;
        let kind = if k % r == 0 {
            SingularityKind::T
        } else if k < r {
            SingularityKind::R
        } else {
            SingularityKind::Neither
        };
        SingularityClass { kind, k, w, r }
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 1 {
            write!(f, "smooth")
        } else {
            write!(f, "1/{}(1,{})", self.r, self.c)
        }
    }
}

/// Singularity of the two-dimensional cone spanned by primitive `u`, `v`.
pub fn cone_singularity(u: LatticePoint, v: LatticePoint) -> Result<QuotientSingularity> {
    let d = u.det(v);
    if d == 0 {
        return Err(Error::DependentRays((u.x, u.y), (v.x, v.y)));
    }
    if !u.is_primitive() || !v.is_primitive() {
        return Err(Error::DegenerateInput(format!("rays {u} and {v} must be primitive")));
    }
    let r = d.abs();
    if r == 1 {
        return Ok(QuotientSingularity::SMOOTH);
    }
    // send u to (0,1); v goes to (x, y) with |x| = r
    let (_, al, be) = ext_gcd(u.x, u.y);
    let mut img = v.apply([[u.y, -u.x], [al, be]]);
    if img.x < 0 {
        img.x = -img.x;
    }
    Ok(QuotientSingularity::normalized(r, (-img.y).rem_euclid(r)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityContent {
    pub n: i64,
    pub basket: Vec<QuotientSingularity>,
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.n)?;
        for (i, s) in self.basket.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    #[test]
    fn hull_drops_interior_and_rejects_collinear() {
        let p = poly(&[(1, 0), (0, 1), (-1, -1), (0, 0)]);
        assert_eq!(p.vertices(), &[pt(-1, -1), pt(1, 0), pt(0, 1)]);
        assert!(matches!(
            LatticePolygon::from_coords(&[(0, 0), (1, 0), (2, 0)]),
            Err(Error::DegenerateInput(_))
        ));
        let q = poly(&[(1, 0), (0, -1), (-1, 2), (-1, 5)]);
        assert_eq!(q.len(), 4);
    }

    #[test]
    fn fano_checks() {
        assert!(poly(&[(1, 0), (0, 1), (-1, -1)]).is_fano());
        assert!(!poly(&[(2, 0), (0, 1), (-1, -1)]).is_fano());
        assert!(!poly(&[(1, 0), (0, 1), (1, 1)]).is_fano());
    }

    #[test]
    fn cone_types() {
        assert!(cone_singularity(pt(1, 0), pt(0, 1)).unwrap().is_smooth());
        assert_eq!(
            cone_singularity(pt(1, 0), pt(-1, -5)).unwrap(),
            QuotientSingularity { r: 5, c: 1 }
        );
        for k in 2..12 {
            let s = cone_singularity(pt(1, 0), pt(1, k)).unwrap();
            assert_eq!(s, QuotientSingularity::new(k, 1, k - 1).unwrap());
        }
        assert!(matches!(
            cone_singularity(pt(1, 2), pt(-2, -4)),
            Err(Error::DependentRays(..))
        ));
    }

    #[test]
    fn t_and_r_for_one_over_k() {
        for k in 2..=100 {
            let kind = QuotientSingularity::new(k, 1, 1).unwrap().classify().kind;
            let expected = match k {
                2 | 4 => SingularityKind::T,
                _ => SingularityKind::R,
            };
            assert_eq!(kind, expected, "k={k}");
        }
        assert_eq!(QuotientSingularity::SMOOTH.classify().kind, SingularityKind::Smooth);
    }

    #[test]
    fn content_examples() {
        let p2 = poly(&[(1, 0), (0, 1), (-1, -1)]);
        assert_eq!(p2.singularity_content().unwrap(), SingularityContent { n: 3, basket: vec![] });
        let p115 = poly(&[(1, 0), (0, 1), (-1, -5)]);
        assert_eq!(
            p115.singularity_content().unwrap(),
            SingularityContent { n: 2, basket: vec![QuotientSingularity { r: 5, c: 1 }] }
        );
        // four edges of length 2 at height 1
        let sq = poly(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        assert_eq!(sq.singularity_content().unwrap().n, 8);
        let p1p1 = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(p1p1.singularity_content().unwrap(), SingularityContent { n: 4, basket: vec![] });
    }

    #[test]
    fn duals_and_degrees() {
        let p2 = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let d = p2.dual().unwrap();
        let expect = poly(&[(-1, -1), (2, -1), (-1, 2)]);
        assert_eq!(d.to_lattice().unwrap(), expect);
        assert_eq!(p2.degree().unwrap(), Q::from_integer(9));
        assert_eq!(poly(&[(1, 0), (0, 1), (-1, -5)]).degree().unwrap(), Q::new(49, 5));
        let sq = poly(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        assert_eq!(sq.dual().unwrap().to_lattice().unwrap(), poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]));
        assert_eq!(p2.dual().unwrap().dual().unwrap(), p2.to_rational());
        assert!(matches!(
            poly(&[(1, 0), (0, 1), (1, 1)]).dual(),
            Err(Error::OriginNotInterior)
        ));
    }

    #[test]
    fn normal_form_examples() {
        let p2 = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let rot = p2.transform([[0, -1], [1, 0]]);
        assert_eq!(p2.normal_form().unwrap(), rot.normal_form().unwrap());
        let a = poly(&[(-1, 1), (1, 1), (5, -1), (-5, -1)]);
        let b = poly(&[(-6, -1), (0, 1), (6, -1)]);
        assert_ne!(a.normal_form().unwrap(), b.normal_form().unwrap());
        let (nf, u) = a.normal_form_with_map();
        assert_eq!(a.transform(u), nf);
    }

    #[test]
    fn pick_on_square() {
        let sq = poly(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        let b = sq.boundary_point_count();
        let total = sq.lattice_points().len() as i64;
        let interior = total - b;
        assert_eq!(sq.double_area(), 2 * interior + b - 2);
    }

    #[test]
    fn json_reader_recanonicalizes() {
        let (p, was_hull) = LatticePolygon::from_json(r#"{"vertices": [[1,0],[0,1],[-1,-1]]}"#).unwrap();
        assert!(was_hull);
        let (q, was_hull) =
            LatticePolygon::from_json(r#"{"vertices": [[0,1],[1,0],[0,0],[-1,-1]]}"#).unwrap();
        assert!(!was_hull);
        assert_eq!(p, q);
        let (r, _) = LatticePolygon::from_json(&p.to_json_value().to_string()).unwrap();
        assert_eq!(r, p);
    }
}
