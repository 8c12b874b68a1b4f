//! The (-2)-classes orthogonal to the canonical class in the Picard lattice
//! of the blow-up of P(1,1,k) in `l` points, and their root system.
//!
//! The lattice has basis `l_0, ..., l_l` with Gram matrix `diag(k, -1, ...)`
//! and `omega = -(k+2)/k l_0 + l_1 + ... + l_l`. A class is stored as its
//! coordinate vector `(a, c_1, ..., c_l)`. Root-system algorithms use the
//! negated pairing, which is positive definite on the span of the roots.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::{det, lattice_basis, smith_invariants};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolarizedLattice {
    pub k: i64,
    pub l: usize,
}

pub type Root = Vec<i64>;

impl PolarizedLattice {
    pub fn new(k: i64, l: usize) -> Result<PolarizedLattice> {
        if k < 1 {
            return Err(Error::OutOfRange(format!("k = {k}")));
        }
        if (k + 2) * (k + 2) - l as i64 * k <= 0 {
            return Err(Error::DegenerateLattice { k, l: l as i64 });
        }
        Ok(PolarizedLattice { k, l })
    }

    pub fn rank(&self) -> usize {
        self.l + 1
    }

    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0; n]; n];
        g[0][0] = self.k;
        for (i, row) in g.iter_mut().enumerate().skip(1) {
            row[i] = -1;
        }
        g
    }

    /// Intersection pairing `(x, y)`.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        self.k * x[0] * y[0] - x[1..].iter().zip(&y[1..]).map(|(a, b)| a * b).sum::<i64>()
    }

    /// `(x, omega)`.
    pub fn pair_omega(&self, x: &[i64]) -> Ratio<i64> {
        Ratio::from_integer(-(self.k + 2) * x[0] - x[1..].iter().sum::<i64>())
    }

    /// `(omega, omega) = (k+2)^2/k - l`.
    pub fn degree(&self) -> Ratio<i64> {
        Ratio::new((self.k + 2) * (self.k + 2), self.k) - Ratio::from_integer(self.l as i64)
    }

    pub fn is_root(&self, x: &[i64]) -> bool {
        x.len() == self.rank() && self.pairing(x, x) == -2 && self.pair_omega(x) == Ratio::from_integer(0)
    }

    /// Every root, sorted. Orthogonality forces `sum c_i = -(k+2) a`, length
    /// forces `sum c_i^2 = k a^2 + 2`, and Cauchy-Schwarz then bounds
    /// `a^2 ((k+2)^2 - l k) <= 2 l`.
    pub fn enumerate_roots(&self) -> Vec<Root> {
        let k = self.k;
        let l = self.l as i64;
        let gap = (k + 2) * (k + 2) - l * k;
        let mut out = Vec::new();
        let mut a = 0i64;
        while a * a * gap <= 2 * l {
            for sa in if a == 0 { vec![0] } else { vec![a, -a] } {
                let mut prefix = vec![sa];
                fill(&mut prefix, self.l, -(k + 2) * sa, k * sa * sa + 2, &mut out);
            }
            a += 1;
        }
        out.sort();
        out
    }
}

/// Extends `prefix` by `remaining` integers with the given sum and sum of squares.
fn fill(prefix: &mut Vec<i64>, remaining: usize, sum: i64, sq: i64, out: &mut Vec<Root>) {
    if remaining == 0 {
        if sum == 0 && sq == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if sq < 0 || sum * sum > remaining as i64 * sq {
        return;
    }
    let bound = (sq as f64).sqrt() as i64 + 1;
    for c in -bound..=bound {
        if c * c <= sq {
            prefix.push(c);
            fill(prefix, remaining - 1, sum - c, sq - c * c, out);
            prefix.pop();
        }
    }
}

fn is_positive(x: &[i64]) -> bool {
    x.iter().find(|&&v| v != 0).is_some_and(|&v| v > 0)
}

/// Simple roots for the lexicographic order: the positive roots that are not
/// sums of two positive roots.
pub fn simple_roots(roots: &[Root]) -> Vec<Root> {
    let positive: Vec<&Root> = roots.iter().filter(|r| is_positive(r)).collect();
    let set: HashSet<&Root> = positive.iter().copied().collect();
    let mut simple: Vec<Root> = positive
        .iter()
        .filter(|&&a| {
            !positive.iter().any(|&b| {
                let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                set.contains(&diff)
            })
        })
        .map(|&r| r.clone())
        .collect();
    simple.sort();
    simple
}

/// Cartan matrix of a base with respect to the negated pairing.
pub fn cartan_matrix(base: &[Root], lat: &PolarizedLattice) -> Vec<Vec<i64>> {
    base.iter()
        .map(|a| {
            base.iter()
                .map(|b| 2 * -lat.pairing(a, b) / -lat.pairing(b, b))
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

/// A product of simply laced irreducible types, largest rank first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanType {
    pub factors: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn new(mut factors: Vec<(Family, usize)>) -> Self {
        factors.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        CartanType { factors }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self.factors.iter().map(|(fam, n)| format!("{fam:?}{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Recognizes the Dynkin diagram of a simply laced Cartan matrix.
pub fn classify(cartan: &[Vec<i64>]) -> Result<CartanType> {
    let n = cartan.len();
    for (i, row) in cartan.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let ok = if i == j { x == 2 } else { x == 0 || x == -1 };
            if !ok || cartan[j][i] != x {
                return Err(Error::UnrecognizedDiagram(format!("entry ({i},{j}) = {x}")));
            }
        }
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && cartan[i][j] == -1).collect())
        .collect();
    let mut seen = vec![false; n];
    let mut factors = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for &j in &adj[comp[i]] {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            i += 1;
        }
        factors.push(classify_component(&comp, &adj)?);
    }
    Ok(CartanType::new(factors))
}

fn classify_component(comp: &[usize], adj: &[Vec<usize>]) -> Result<(Family, usize)> {
    let size = comp.len();
    let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edges + 1 != size {
        return Err(Error::UnrecognizedDiagram("diagram contains a cycle".into()));
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => Ok((Family::A, size)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c].iter().map(|&s| arm_length(*c, s, adj)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, r] => Ok((Family::D, r + 3)),
                [1, 2, 2] => Ok((Family::E, 6)),
                [1, 2, 3] => Ok((Family::E, 7)),
                [1, 2, 4] => Ok((Family::E, 8)),
                _ => Err(Error::UnrecognizedDiagram(format!("arms {arms:?}"))),
            }
        }
        _ => Err(Error::UnrecognizedDiagram("more than one branch node".into())),
    }
}

fn arm_length(center: usize, start: usize, adj: &[Vec<usize>]) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [nx] => {
                prev = cur;
                cur = *nx;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// `|det Cartan|` and the discriminant of a Z-basis of the root lattice
/// (via Smith form), separately.
pub fn index_witnesses(roots: &[Root], lat: &PolarizedLattice) -> Result<(i64, i64)> {
    if roots.is_empty() {
        return Ok((1, 1));
    }
    let base = simple_roots(roots);
    let by_det = det(&cartan_matrix(&base, lat)).abs();
    let basis = lattice_basis(roots);
    let gram: Vec<Vec<i64>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| -lat.pairing(x, y)).collect())
        .collect();
    let inv = smith_invariants(&gram);
    if inv.len() != basis.len() {
        return Err(Error::InternalMismatch("root lattice Gram matrix is singular".into()));
    }
    let by_smith: i128 = inv.iter().product();
    Ok((by_det as i64, by_smith as i64))
}

/// Order of the weight lattice modulo the root lattice. The two witnesses
/// of [`index_witnesses`] must agree.
pub fn index_of_connectedness(roots: &[Root], lat: &PolarizedLattice) -> Result<i64> {
    let (by_det, by_smith) = index_witnesses(roots, lat)?;
    if by_det != by_smith {
        return Err(Error::InternalMismatch(format!(
            "det(Cartan) = {by_det} but discriminant = {by_smith}"
        )));
    }
    Ok(by_det)
}

/// The closed-form root count for the cascade.
pub fn expected_root_count(k: i64, l: usize) -> Option<usize> {
    let l64 = l as i64;
    let n = if (3, 8) == (k, l) {
        240
    } else if l64 <= k + 1 {
        l64 * (l64 - 1)
    } else if l64 == k + 2 {
        (k + 2) * (k + 1) + 2
    } else if l64 == k + 3 {
        (k + 4) * (k + 3)
    } else if l64 == k + 4 {
        2 * (k + 4) * (k + 3)
    } else {
        return None;
    };
    Some(n as usize)
}

/// The root system type of the cascade (`A_{l-1}` up to `l = k+1`, then
/// `A_{k+1} x A_1`, `A_{k+3}`, `D_{k+4}`, and `E_8` at `(3,8)`).
pub fn expected_type(k: i64, l: usize) -> Option<CartanType> {
    let l64 = l as i64;
    let k = k as usize;
    let t = if (3, 8) == (k, l) {
        vec![(Family::E, 8)]
    } else if l < 2 {
        vec![]
    } else if l64 <= k as i64 + 1 {
        vec![(Family::A, l - 1)]
    } else if l == k + 2 {
        vec![(Family::A, k + 1), (Family::A, 1)]
    } else if l == k + 3 {
        vec![(Family::A, k + 3)]
    } else if l == k + 4 {
        vec![(Family::D, k + 4)]
    } else {
        return None;
    };
    Some(CartanType::new(t))
}

/// Representative rows `(a; b_1..b_l)` of the root table, each standing for
/// `a l_0 - sum b_i l_i`.
pub fn root_table(k: i64, l: usize) -> Option<Vec<Root>> {
    let row = |a: i64, b: &[i64]| {
        let mut r = vec![a];
        r.extend_from_slice(b);
        r.resize(l + 1, 0);
        r
    };
    if (k, l) == (3, 8) {
        return Some(vec![
            row(0, &[1, 0, 0, 0, 0, 0, 0, -1]),
            row(1, &[1, 1, 1, 1, 1]),
            row(2, &[2, 2, 1, 1, 1, 1, 1, 1]),
            row(3, &[2, 2, 2, 2, 2, 2, 2, 1]),
        ]);
    }
    let l64 = l as i64;
    if !(k + 2..=k + 4).contains(&l64) {
        return None;
    }
    Some(vec![row(0, &[1, -1]), row(1, &vec![1; (k + 2) as usize])])
}

fn distinct_permutations(items: &[i64]) -> Vec<Vec<i64>> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in items {
        *counts.entry(x).or_default() += 1;
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(items.len());
    permute(&mut counts, items.len(), &mut cur, &mut out);
    out
}

fn permute(counts: &mut BTreeMap<i64, usize>, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let keys: Vec<i64> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
    for key in keys {
        *counts.get_mut(&key).unwrap() -= 1;
        cur.push(key);
        permute(counts, n, cur, out);
        cur.pop();
        *counts.get_mut(&key).unwrap() += 1;
    }
}

/// The orbit of table rows under permutations of the `b_i` and a global sign,
/// converted to coordinates `(a, -b_1, ..., -b_l)`.
pub fn table_orbit(rows: &[Root]) -> BTreeSet<Root> {
    let mut out = BTreeSet::new();
    for r in rows {
        for perm in distinct_permutations(&r[1..]) {
            let mut x = vec![r[0]];
            x.extend(perm.iter().map(|b| -b));
            out.insert(x.iter().map(|v| -v).collect());
            out.insert(x);
        }
    }
    out
}

/// Whether the orbit of the printed table is exactly the enumerated root set.
pub fn verify_orbit_table(k: i64, l: usize) -> Result<bool> {
    let lat = PolarizedLattice::new(k, l)?;
    let rows = root_table(k, l)
        .ok_or_else(|| Error::OutOfRange(format!("no root table for (k,l) = ({k},{l})")))?;
    let all: BTreeSet<Root> = lat.enumerate_roots().into_iter().collect();
    Ok(table_orbit(&rows) == all)
}

/// The reflection `x -> x + (x, m) m` in the root `m`.
pub fn reflect(lat: &PolarizedLattice, x: &[i64], m: &[i64]) -> Root {
    let c = lat.pairing(x, m);
    x.iter().zip(m).map(|(a, b)| a + c * b).collect()
}

/// Summary of the root system of one lattice.
#[derive(Clone, Debug, Serialize)]
pub struct RootSummary {
    pub k: i64,
    pub l: usize,
    pub count: usize,
    pub rank: usize,
    pub cartan_type: CartanType,
    pub type_label: String,
    pub index: i64,
}

pub fn summarize(k: i64, l: usize) -> Result<(RootSummary, Vec<Root>)> {
    let lat = PolarizedLattice::new(k, l)?;
    let roots = lat.enumerate_roots();
    let base = simple_roots(&roots);
    let cartan_type = classify(&cartan_matrix(&base, &lat))?;
    let index = index_of_connectedness(&roots, &lat)?;
    let summary = RootSummary {
        k,
        l,
        count: roots.len(),
        rank: base.len(),
        type_label: cartan_type.to_string(),
        cartan_type,
        index,
    };
    Ok((summary, roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let lat = PolarizedLattice::new(5, 2).unwrap();
        assert_eq!(lat.enumerate_roots(), vec![vec![0, -1, 1], vec![0, 1, -1]]);
        assert_eq!(PolarizedLattice::new(5, 7).unwrap().enumerate_roots().len(), 44);
        assert_eq!(PolarizedLattice::new(5, 9).unwrap().enumerate_roots().len(), 144);
        assert_eq!(PolarizedLattice::new(3, 8).unwrap().enumerate_roots().len(), 240);
        assert_eq!(PolarizedLattice::new(5, 10), Err(Error::DegenerateLattice { k: 5, l: 10 }));
    }

    #[test]
    fn types_and_indices() {
        let (s, _) = summarize(6, 8).unwrap();
        assert_eq!(s.type_label, "A7xA1");
        assert_eq!(summarize(6, 10).unwrap().0.type_label, "D10");
        assert_eq!(summarize(7, 5).unwrap().0.type_label, "A4");
        assert_eq!(summarize(5, 8).unwrap().0.index, 9);
        assert_eq!(summarize(5, 9).unwrap().0.index, 4);
        let (e8, _) = summarize(3, 8).unwrap();
        assert_eq!((e8.type_label.as_str(), e8.index, e8.rank), ("E8", 1, 8));
    }

    #[test]
    fn classify_rejects_non_ade() {
        let affine_a2 = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(classify(&affine_a2), Err(Error::UnrecognizedDiagram(_))));
        assert_eq!(classify(&[vec![2]]).unwrap().to_string(), "A1");
    }

    #[test]
    fn tables_generate_all_roots() {
        assert!(verify_orbit_table(5, 9).unwrap());
        assert!(verify_orbit_table(5, 7).unwrap());
        assert!(verify_orbit_table(3, 8).unwrap());
        assert_eq!(table_orbit(&root_table(3, 8).unwrap()).len(), 240);
    }
}
