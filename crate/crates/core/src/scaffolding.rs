//! Scaffoldings of Fano polygons by products of projective spaces, and
//! Laurent inversion into GIT weight data.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{adjugate, det};
use crate::polygon::{convex_hull, pt, LatticePoint, LatticePolygon};

/// A product `P^{n_1} x ... x P^{n_s}`. Factor `i` has rays
/// `e_1, ..., e_{n_i}, -(e_1 + ... + e_{n_i})` in its own coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub factor_dims: Vec<usize>,
}

impl Shape {
    pub fn new(factor_dims: Vec<usize>) -> Result<Shape> {
        if factor_dims.is_empty() || factor_dims.contains(&0) {
            return Err(Error::InvalidScaffolding(format!("bad shape {factor_dims:?}")));
        }
        Ok(Shape { factor_dims })
    }

    pub fn p1() -> Shape {
        Shape { factor_dims: vec![1] }
    }

    pub fn p2() -> Shape {
        Shape { factor_dims: vec![2] }
    }

    pub fn p1xp1() -> Shape {
        Shape { factor_dims: vec![1, 1] }
    }

    pub fn dim(&self) -> usize {
        self.factor_dims.iter().sum()
    }

    pub fn ray_count(&self) -> usize {
        self.factor_dims.iter().map(|n| n + 1).sum()
    }

    /// Rays of the fan as `(factor, vector in the product lattice)`.
    pub fn rays(&self) -> Vec<(usize, Vec<i64>)> {
        let d = self.dim();
        let mut out = Vec::new();
        let mut offset = 0;
        for (f, &n) in self.factor_dims.iter().enumerate() {
            for i in 0..n {
                let mut v = vec![0; d];
                v[offset + i] = 1;
                out.push((f, v));
            }
            let mut v = vec![0; d];
            v[offset..offset + n].iter_mut().for_each(|x| *x = -1);
            out.push((f, v));
            offset += n;
        }
        out
    }

    /// Per-factor degree of a divisor given by its ray coefficients.
    pub fn multidegree(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut out = Vec::new();
        let mut j = 0;
        for &n in &self.factor_dims {
            out.push(coeffs[j..j + n + 1].iter().sum());
            j += n + 1;
        }
        out
    }

    fn check_coeffs(&self, coeffs: &[i64]) -> Result<()> {
        if coeffs.len() != self.ray_count() {
            return Err(Error::InvalidScaffolding(format!(
                "divisor has {} coefficients, shape has {} rays",
                coeffs.len(),
                self.ray_count()
            )));
        }
        Ok(())
    }
}

/// The polyhedron of sections `{x : <x, rho_j> >= -c_j}` of a nef divisor,
/// as its (integral) vertex list in the shape's lattice.
pub fn polyhedron_of_sections(shape: &Shape, coeffs: &[i64]) -> Result<Vec<Vec<i64>>> {
    shape.check_coeffs(coeffs)?;
    let degs = shape.multidegree(coeffs);
    if let Some(f) = degs.iter().position(|&d| d < 0) {
        return Err(Error::NotNef(format!("factor {f} has degree {}", degs[f])));
    }
    // each factor is a simplex: corner -c and corner + deg e_i
    let mut factors: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut j = 0;
    for (f, &n) in shape.factor_dims.iter().enumerate() {
        let corner: Vec<i64> = coeffs[j..j + n].iter().map(|c| -c).collect();
        let mut verts = vec![corner.clone()];
        if degs[f] > 0 {
            for i in 0..n {
                let mut v = corner.clone();
                v[i] += degs[f];
                verts.push(v);
            }
        }
        factors.push(verts);
        j += n + 1;
    }
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for verts in factors {
        out = out
            .iter()
            .flat_map(|prefix| {
                verts.iter().map(move |v| {
                    let mut w = prefix.clone();
                    w.extend_from_slice(v);
                    w
                })
            })
            .collect();
    }
    Ok(out)
}

fn in_sections(shape: &Shape, coeffs: &[i64], x: &[i64]) -> bool {
    shape
        .rays()
        .iter()
        .zip(coeffs)
        .all(|((_, r), &c)| r.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() >= -c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strut {
    pub coeffs: Vec<i64>,
    pub chi: Vec<i64>,
    #[serde(default)]
    pub uneliminated: bool,
}

/// A scaffolding with shape `Z` and splitting `N = Nbar + N_U`, where
/// `rank N_U = splitting_u` and `rank Nbar = dim Z`. The columns of `frame`
/// are a basis of `Nbar` followed by a basis of `N_U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scaffolding {
    pub shape: Vec<usize>,
    pub splitting_u: usize,
    pub struts: Vec<Strut>,
    #[serde(default = "identity_frame")]
    pub frame: [[i64; 2]; 2],
}

fn identity_frame() -> [[i64; 2]; 2] {
    [[1, 0], [0, 1]]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaffoldingReport {
    pub valid: bool,
    pub problems: Vec<String>,
}

/// Weight data of the ambient toric variety produced by Laurent inversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GitData {
    pub weight_matrix: Vec<Vec<i64>>,
    pub stability: Vec<i64>,
    pub equation_degrees: Vec<Vec<i64>>,
    /// number of leading columns that come from struts; the rest are rays
    pub strut_columns: usize,
}

impl Scaffolding {
    pub fn new(shape: Vec<usize>, splitting_u: usize, struts: Vec<Strut>) -> Scaffolding {
        Scaffolding { shape, splitting_u, struts, frame: identity_frame() }
    }

    pub fn with_frame(mut self, frame: [[i64; 2]; 2]) -> Scaffolding {
        self.frame = frame;
        self
    }

    pub fn shape(&self) -> Result<Shape> {
        Shape::new(self.shape.clone())
    }

    pub fn from_json(text: &str) -> Result<Scaffolding> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    fn structural_problems(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let shape = match self.shape() {
            Ok(s) => s,
            Err(e) => return vec![e.to_string()],
        };
        if shape.dim() + self.splitting_u != 2 {
            problems.push(format!(
                "shape dimension {} plus splitting {} is not 2",
                shape.dim(),
                self.splitting_u
            ));
            return problems;
        }
        let f = self.frame;
        if (f[0][0] * f[1][1] - f[0][1] * f[1][0]).abs() != 1 {
            problems.push("frame is not unimodular".into());
        }
        let mut basis_hits = BTreeSet::new();
        for (i, s) in self.struts.iter().enumerate() {
            if s.coeffs.len() != shape.ray_count() {
                problems.push(format!("strut {i}: wrong number of coefficients"));
                continue;
            }
            if s.chi.len() != self.splitting_u {
                problems.push(format!("strut {i}: chi has length {}", s.chi.len()));
                continue;
            }
            if let Some(d) = shape.multidegree(&s.coeffs).iter().find(|&&d| d < 0) {
                problems.push(format!("strut {i}: divisor not nef (degree {d})"));
            }
            if s.uneliminated {
                let unit = s.chi.iter().filter(|&&c| c == 1).count() == 1
                    && s.chi.iter().all(|&c| c == 0 || c == 1);
                if s.coeffs.iter().any(|&c| c != 0) || !unit {
                    problems.push(format!("strut {i}: uneliminated strut must be (O, e_j)"));
                } else {
                    basis_hits.insert(s.chi.iter().position(|&c| c == 1).unwrap());
                }
            }
        }
        let marked = self.struts.iter().filter(|s| s.uneliminated).count();
        if marked != self.splitting_u || basis_hits.len() != marked {
            problems.push(format!(
                "need one uneliminated strut per basis vector of N_U ({}), found {marked}",
                self.splitting_u
            ));
        }
        problems
    }

    /// Coordinates `(x, chi)` in the frame to a point of N.
    fn to_n(&self, x: &[i64], chi: &[i64]) -> LatticePoint {
        let v: Vec<i64> = x.iter().chain(chi).copied().collect();
        let f = self.frame;
        pt(f[0][0] * v[0] + f[0][1] * v[1], f[1][0] * v[0] + f[1][1] * v[1])
    }

    fn from_n(&self, p: LatticePoint) -> Vec<i64> {
        let f = self.frame;
        let d = f[0][0] * f[1][1] - f[0][1] * f[1][0];
        // inverse of a unimodular 2x2 matrix
        vec![
            d * (f[1][1] * p.x - f[0][1] * p.y),
            d * (-f[1][0] * p.x + f[0][0] * p.y),
        ]
    }

    /// Vertices in N of the translated polyhedron of sections of strut `i`.
    pub fn strut_points(&self, i: usize) -> Result<Vec<LatticePoint>> {
        let shape = self.shape()?;
        let s = &self.struts[i];
        Ok(polyhedron_of_sections(&shape, &s.coeffs)?
            .iter()
            .map(|x| self.to_n(x, &s.chi))
            .collect())
    }

    pub fn strut_contains(&self, i: usize, p: LatticePoint) -> bool {
        let Ok(shape) = self.shape() else { return false };
        let s = &self.struts[i];
        let v = self.from_n(p);
        let (x, chi) = v.split_at(shape.dim());
        chi == s.chi.as_slice() && in_sections(&shape, &s.coeffs, x)
    }

    /// The convex hull of all struts, if it is two-dimensional.
    pub fn hull(&self) -> Result<LatticePolygon> {
        let mut pts = Vec::new();
        for i in 0..self.struts.len() {
            pts.extend(self.strut_points(i)?);
        }
        convex_hull(&pts)
    }

    pub fn validate(&self, p: &LatticePolygon) -> ScaffoldingReport {
        let mut problems = self.structural_problems();
        if problems.is_empty() {
            match self.hull() {
                Ok(h) if h == *p => {}
                Ok(h) => problems.push(format!("hull of struts is {h}, not {p}")),
                Err(e) => problems.push(format!("hull of struts: {e}")),
            }
            for &v in p.vertices() {
                let hits = (0..self.struts.len()).filter(|&i| self.strut_contains(i, v)).count();
                if hits != 1 {
                    problems.push(format!("vertex {v} lies in {hits} struts"));
                }
            }
        }
        ScaffoldingReport { valid: problems.is_empty(), problems }
    }

    /// Laurent inversion. Columns: eliminated struts (identity block), then
    /// uneliminated struts (the `-chi` block), then the shape rays (divisor
    /// coefficients). Rows are the eliminated struts in order.
    pub fn laurent_invert(&self, p: &LatticePolygon) -> Result<GitData> {
        let report = self.validate(p);
        if !report.valid {
            return Err(Error::InvalidScaffolding(report.problems.join("; ")));
        }
        let shape = self.shape()?;
        let rows: Vec<&Strut> = self.struts.iter().filter(|s| !s.uneliminated).collect();
        let unelim: Vec<&Strut> = self.struts.iter().filter(|s| s.uneliminated).collect();
        let r = rows.len();
        let mut m = Vec::with_capacity(r);
        for (i, s) in rows.iter().enumerate() {
            let mut row: Vec<i64> = (0..r).map(|j| i64::from(i == j)).collect();
            for u in &unelim {
                let j = u.chi.iter().position(|&c| c == 1).unwrap();
                row.push(-s.chi[j]);
            }
            row.extend_from_slice(&s.coeffs);
            m.push(row);
        }
        let n_struts = self.struts.len();
        let stability: Vec<i64> = m.iter().map(|row| row[..n_struts].iter().sum()).collect();
        let mut equation_degrees = Vec::new();
        let mut j = n_struts;
        for &n in &shape.factor_dims {
            equation_degrees.push(m.iter().map(|row| row[j..j + n + 1].iter().sum()).collect());
            j += n + 1;
        }
        Ok(GitData { weight_matrix: m, stability, equation_degrees, strut_columns: n_struts })
    }
}

/// The single-strut scaffolding `P = P_D` on the given two-dimensional shape
/// (identity frame, `chi = 0`).
pub fn anti_canonical_scaffolding(p: &LatticePolygon, shape: &Shape) -> Result<Scaffolding> {
    if shape.dim() != 2 {
        return Err(Error::InvalidScaffolding("anti-canonical shape must be a surface".into()));
    }
    let coeffs: Vec<i64> = shape
        .rays()
        .iter()
        .map(|(_, r)| -p.vertices().iter().map(|v| r[0] * v.x + r[1] * v.y).min().unwrap())
        .collect();
    let s = Scaffolding::new(
        shape.factor_dims.clone(),
        0,
        vec![Strut { coeffs, chi: vec![], uneliminated: false }],
    );
    match s.hull() {
        Ok(h) if h == *p => Ok(s),
        _ => Err(Error::NoSuchDivisor),
    }
}

/// A random unimodular frame: a short product of shears and a swap.
fn random_frame(rng: &mut impl Rng) -> [[i64; 2]; 2] {
    let mut f = [[1, 0], [0, 1]];
    for _ in 0..rng.gen_range(0..3) {
        let a = rng.gen_range(-2..=2);
        let step = match rng.gen_range(0..3) {
            0 => [[1, a], [0, 1]],
            1 => [[1, 0], [a, 1]],
            _ => [[0, 1], [1, 0]],
        };
        f = [
            [
                step[0][0] * f[0][0] + step[0][1] * f[1][0],
                step[0][0] * f[0][1] + step[0][1] * f[1][1],
            ],
            [
                step[1][0] * f[0][0] + step[1][1] * f[1][0],
                step[1][0] * f[0][1] + step[1][1] * f[1][1],
            ],
        ];
    }
    f
}

fn random_nef(rng: &mut impl Rng, shape: &Shape) -> Vec<i64> {
    loop {
        let c: Vec<i64> = (0..shape.ray_count()).map(|_| rng.gen_range(-2..=3)).collect();
        if shape.multidegree(&c).iter().all(|&d| d >= 0) {
            return c;
        }
    }
}

/// A random scaffolding on shape `P^1`, `P^2` or `P^1 x P^1` whose struts
/// hull a Fano polygon it scaffolds. Rejection sampling; always terminates
/// in practice since the anti-canonical `P^2` triangle is reachable.
pub fn random_valid_scaffolding(rng: &mut impl Rng) -> (LatticePolygon, Scaffolding) {
    loop {
        let frame = random_frame(rng);
        let s = match rng.gen_range(0..3) {
            0 => {
                let shape = Shape::p1();
                let mut struts = vec![Strut { coeffs: vec![0, 0], chi: vec![1], uneliminated: true }];
                for _ in 0..rng.gen_range(1..=3) {
                    struts.push(Strut {
                        coeffs: random_nef(rng, &shape),
                        chi: vec![rng.gen_range(-3..=2)],
                        uneliminated: false,
                    });
                }
                Scaffolding::new(shape.factor_dims, 1, struts)
            }
            i => {
                let shape = if i == 1 { Shape::p2() } else { Shape::p1xp1() };
                let struts = (0..rng.gen_range(1..=2))
                    .map(|_| Strut { coeffs: random_nef(rng, &shape), chi: vec![], uneliminated: false })
                    .collect();
                Scaffolding::new(shape.factor_dims, 0, struts)
            }
        }
        .with_frame(frame);
        let Ok(p) = s.hull() else { continue };
        if p.is_fano() && s.validate(&p).valid {
            return (p, s);
        }
    }
}

impl GitData {
    pub fn rows(&self) -> usize {
        self.weight_matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.weight_matrix.first().map_or(0, |r| r.len())
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.weight_matrix.iter().map(|row| row[j]).collect()
    }

    /// Identity block, stability as the sum of the strut columns, and the
    /// anti-canonical relation `sum of columns - sum of equation degrees = omega`.
    pub fn check_invariants(&self) -> Result<()> {
        let r = self.rows();
        for (i, row) in self.weight_matrix.iter().enumerate() {
            for (j, &x) in row[..r].iter().enumerate() {
                if x != i64::from(i == j) {
                    return Err(Error::InternalMismatch("identity block".into()));
                }
            }
            let strut_sum: i64 = row[..self.strut_columns].iter().sum();
            if strut_sum != self.stability[i] {
                return Err(Error::InternalMismatch("stability vector".into()));
            }
            let all: i64 = row.iter().sum();
            let eq: i64 = self.equation_degrees.iter().map(|d| d[i]).sum();
            if all - eq != self.stability[i] {
                return Err(Error::InternalMismatch("anti-canonical relation".into()));
            }
        }
        Ok(())
    }

    /// Degree of a monomial given as `(column, exponent)` pairs.
    pub fn monomial_degree(&self, monomial: &[(usize, i64)]) -> Vec<i64> {
        (0..self.rows())
            .map(|i| monomial.iter().map(|&(j, e)| e * self.weight_matrix[i][j]).sum())
            .collect()
    }

    /// For a single-row matrix, the weighted projective weights.
    pub fn weights(&self) -> Option<Vec<i64>> {
        (self.rows() == 1).then(|| self.weight_matrix[0].clone())
    }
}

/// A plain weight matrix with a stability condition, for comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub matrix: Vec<Vec<i64>>,
    pub stability: Vec<i64>,
}

impl From<&GitData> for WeightData {
    fn from(g: &GitData) -> Self {
        WeightData { matrix: g.weight_matrix.clone(), stability: g.stability.clone() }
    }
}

impl WeightData {
    pub fn new(matrix: Vec<Vec<i64>>, stability: Vec<i64>) -> Self {
        WeightData { matrix, stability }
    }

    fn column(&self, j: usize) -> Vec<i64> {
        self.matrix.iter().map(|row| row[j]).collect()
    }
}

fn apply(u: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    u.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// A unimodular `U` with `U·A` equal to `B` up to a permutation of columns
/// and `U·omega_A = omega_B`, if one exists.
pub fn git_equivalence(a: &WeightData, b: &WeightData) -> Option<Vec<Vec<i64>>> {
    let r = a.matrix.len();
    if r != b.matrix.len() || r == 0 {
        return None;
    }
    let n = a.matrix[0].len();
    if n != b.matrix[0].len() {
        return None;
    }
    // r independent columns of B
    let bcols: Vec<Vec<i64>> = (0..n).map(|j| b.column(j)).collect();
    let acols: Vec<Vec<i64>> = (0..n).map(|j| a.column(j)).collect();
    let target = independent_columns(&bcols, r)?;
    let bt: Vec<Vec<i64>> = (0..r).map(|i| target.iter().map(|&j| bcols[j][i]).collect()).collect();
    let mut bsorted = bcols.clone();
    bsorted.sort();
    let mut choice = Vec::with_capacity(r);
    search_columns(&acols, &bt, &bsorted, a, b, n, r, &mut choice)
}

#[allow(clippy::too_many_arguments)]
fn search_columns(
    acols: &[Vec<i64>],
    bt: &[Vec<i64>],
    bsorted: &[Vec<i64>],
    a: &WeightData,
    b: &WeightData,
    n: usize,
    r: usize,
    choice: &mut Vec<usize>,
) -> Option<Vec<Vec<i64>>> {
    if choice.len() == r {
        let at: Vec<Vec<i64>> = (0..r).map(|i| choice.iter().map(|&j| acols[j][i]).collect()).collect();
        let d = det(&at);
        if d == 0 {
            return None;
        }
        let adj = adjugate(&at);
        // U = B_T adj(A_T) / det
        let mut u = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let s: i128 = (0..r).map(|t| bt[i][t] as i128 * adj[t][j]).sum();
                if s % d != 0 {
                    return None;
                }
                u[i][j] = (s / d) as i64;
            }
        }
        if det(&u).abs() != 1 {
            return None;
        }
        let mut img: Vec<Vec<i64>> = acols.iter().map(|c| apply(&u, c)).collect();
        img.sort();
        if img != bsorted || apply(&u, &a.stability) != b.stability {
            return None;
        }
        return Some(u);
    }
    for j in 0..n {
        if choice.contains(&j) {
            continue;
        }
        choice.push(j);
        let found = search_columns(acols, bt, bsorted, a, b, n, r, choice);
        choice.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn independent_columns(cols: &[Vec<i64>], r: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..cols.len() {
        chosen.push(j);
        let m: Vec<Vec<i64>> = chosen.iter().map(|&c| cols[c].clone()).collect();
        if crate::intmat::lattice_basis(&m).len() < chosen.len() {
            chosen.pop();
        }
        if chosen.len() == r {
            return Some(chosen);
        }
    }
    None
}

pub fn git_equivalent(a: &WeightData, b: &WeightData) -> bool {
    git_equivalence(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strut(coeffs: &[i64], chi: &[i64]) -> Strut {
        Strut { coeffs: coeffs.to_vec(), chi: chi.to_vec(), uneliminated: false }
    }

    fn low_l(k: i64, l: i64) -> (LatticePolygon, Scaffolding) {
        let p = LatticePolygon::from_coords(&[(1, 0), (0, -1), (-1, k - l), (-1, k)]).unwrap();
        let s = Scaffolding::new(
            vec![1],
            1,
            vec![
                strut(&[1, 0], &[0]),
                strut(&[l - k, k], &[-1]),
                Strut { coeffs: vec![0, 0], chi: vec![1], uneliminated: true },
            ],
        )
        .with_frame([[0, 1], [1, 0]]);
        (p, s)
    }

    #[test]
    fn sections_on_the_three_shapes() {
        assert_eq!(
            polyhedron_of_sections(&Shape::p2(), &[1, 1, 1]).unwrap(),
            vec![vec![-1, -1], vec![2, -1], vec![-1, 2]]
        );
        let rect = polyhedron_of_sections(&Shape::p1xp1(), &[0, 2, 0, 4]).unwrap();
        assert_eq!(rect.len(), 4);
        assert!(rect.contains(&vec![2, 4]));
        assert_eq!(polyhedron_of_sections(&Shape::p1(), &[0, 0]).unwrap(), vec![vec![0]]);
        assert!(matches!(
            polyhedron_of_sections(&Shape::p1(), &[1, -2]),
            Err(Error::NotNef(_))
        ));
    }

    #[test]
    fn low_l_scaffolding_inverts_to_the_printed_matrix() {
        let (p, s) = low_l(4, 2);
        assert!(s.validate(&p).valid, "{:?}", s.validate(&p));
        let g = s.laurent_invert(&p).unwrap();
        assert_eq!(g.weight_matrix, vec![vec![1, 0, 0, 1, 0], vec![0, 1, 1, -2, 4]]);
        assert_eq!(g.stability, vec![1, 2]);
        assert_eq!(g.equation_degrees, vec![vec![1, 2]]);
        g.check_invariants().unwrap();
        // binomial y1 y2^l - x2 x3
        assert_eq!(g.monomial_degree(&[(0, 1), (1, 2)]), g.equation_degrees[0]);
        assert_eq!(g.monomial_degree(&[(3, 1), (4, 1)]), g.equation_degrees[0]);
    }

    #[test]
    fn shifted_strut_is_rejected() {
        let (p, mut s) = low_l(4, 2);
        s.struts[1] = strut(&[-1, 3], &[-1]);
        let rep = s.validate(&p);
        assert!(!rep.valid);
        assert!(rep.problems.iter().any(|m| m.contains("hull")));
    }

    #[test]
    fn anti_canonical_examples() {
        let m = 3;
        let p = LatticePolygon::from_coords(&[(-1, -1), (-1, m + 1), (m + 1, -1)]).unwrap();
        let s = anti_canonical_scaffolding(&p, &Shape::p2()).unwrap();
        let g = s.laurent_invert(&p).unwrap();
        assert_eq!(g.weights().unwrap(), vec![1, 1, 1, m]);
        assert_eq!(g.equation_degrees, vec![vec![m + 2]]);
        let tri = LatticePolygon::from_coords(&[(1, 0), (0, 1), (-1, -1)]).unwrap();
        assert_eq!(anti_canonical_scaffolding(&tri, &Shape::p1xp1()), Err(Error::NoSuchDivisor));
    }

    #[test]
    fn equivalence_search() {
        let a = WeightData::new(vec![vec![1, 6, 6, 1]], vec![1]);
        let b = WeightData::new(vec![vec![1, 1, 6, 6]], vec![1]);
        assert!(git_equivalent(&a, &b));
        let c = WeightData::new(vec![vec![1, 0, 0, 1, 0], vec![0, 1, 1, -2, 4]], vec![1, 2]);
        // U = [[1,0],[1,1]] then swap the first and last columns
        let d = WeightData::new(vec![vec![0, 0, 0, 1, 1], vec![4, 1, 1, -1, 1]], vec![1, 3]);
        assert!(git_equivalent(&c, &d));
        assert!(!git_equivalent(&a, &c));
    }
}
