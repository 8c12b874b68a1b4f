//! Exact univariate Hilbert series: sparse integer polynomials over products
//! of `(1 - t^a)` factors.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    terms: BTreeMap<usize, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(e: usize, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `coeffs[i]` is the coefficient of `t^i`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `1 - t^a`
    pub fn one_minus(a: usize) -> Self {
        Self::from_terms(&[(0, 1), (a, -1)])
    }

    pub fn add_term(&mut self, e: usize, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: usize) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Dense coefficient list from `t^0` to the degree.
    pub fn coeffs(&self) -> Vec<i64> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in o.terms() {
            p.add_term(e, c);
        }
        p
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut p = Self::zero();
        for (e, c) in self.terms() {
            p.add_term(e, c * s);
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }

    /// Exact quotient by a divisor with constant term `±1`, if the
    /// division leaves no remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let d0 = d.coeff(0);
        assert!(d0 == 1 || d0 == -1, "divisor must have unit constant term");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (n, m) = (self.degree()?, d.degree()?);
        if n < m {
            return None;
        }
        let mut q = vec![0i64; n - m + 1];
        for e in 0..q.len() {
            let acc: i64 = d
                .terms()
                .filter(|&(j, _)| j >= 1 && j <= e)
                .map(|(j, c)| c * q[e - j])
                .sum();
            q[e] = (self.coeff(e) - acc) * d0;
        }
        let quotient = Self::from_coeffs(&q);
        (quotient.mul(d) == *self).then_some(quotient)
    }

    pub fn div_one_minus(&self, a: usize) -> Option<Self> {
        self.div_exact(&Self::one_minus(a))
    }

    pub fn is_palindromic(&self) -> bool {
        let c = self.coeffs();
        let low = c.iter().position(|&x| x != 0).unwrap_or(0);
        let c = &c[low..];
        c.iter().eq(c.iter().rev())
    }

    /// Keeps the exponents divisible by `q` and substitutes `t^q -> t`.
    pub fn veronese(&self, q: usize) -> Self {
        let mut p = Self::zero();
        for (e, c) in self.terms() {
            if e % q == 0 {
                p.add_term(e / q, c);
            }
        }
        p
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let mag = c.abs();
            let body = match (e, mag) {
                (0, m) => format!("{m}"),
                (1, 1) => "t".to_string(),
                (1, m) => format!("{m}t"),
                (e, 1) => format!("t^{e}"),
                (e, m) => format!("{m}t^{e}"),
            };
            if i > 0 {
                write!(f, "{sep}{sign} {body}")?;
            } else {
                write!(f, "{sign}{body}")?;
            }
        }
        Ok(())
    }
}

/// `numerator / prod (1 - t^a)` over the multiset `denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFraction {
    pub numerator: IntPolynomial,
    pub denominator: Vec<usize>,
}

#[derive(Serialize)]
struct FractionJson {
    numerator: Vec<i64>,
    denominator: Vec<usize>,
}

fn denominator_poly(factors: &[usize]) -> IntPolynomial {
    factors
        .iter()
        .fold(IntPolynomial::one(), |acc, &a| acc.mul(&IntPolynomial::one_minus(a)))
}

impl HilbertFraction {
    pub fn new(numerator: IntPolynomial, mut denominator: Vec<usize>) -> Self {
        assert!(denominator.iter().all(|&a| a > 0), "denominator factors must be positive");
        denominator.sort_unstable();
        HilbertFraction { numerator, denominator }
    }

    /// Cancels `(1 - t^a)` factors that divide the numerator exactly,
    /// trying the largest `a` first, then lowers a factor `(1 - t^a)` to
    /// `(1 - t^b)` for `b | a` whenever the numerator absorbs
    /// `(1 - t^a)/(1 - t^b)`.
    pub fn canonical(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        'outer: loop {
            let mut distinct = den.clone();
            distinct.dedup();
            for &a in distinct.iter().rev() {
                if let Some(q) = num.div_one_minus(a) {
                    num = q;
                    let pos = den.iter().position(|&x| x == a).unwrap();
                    den.remove(pos);
                    continue 'outer;
                }
            }
            for &a in distinct.iter().rev() {
                for b in (1..a).filter(|b| a % b == 0) {
                    if let Some(q) = num.div_exact(&geometric_block(b, a / b)) {
                        num = q;
                        let pos = den.iter().position(|&x| x == a).unwrap();
                        den[pos] = b;
                        den.sort_unstable();
                        continue 'outer;
                    }
                }
            }
            break;
        }
        HilbertFraction::new(num, den)
    }

    /// The numerator when written over `target`, if that is exactly possible.
    pub fn numerator_over(&self, target: &[usize]) -> Option<IntPolynomial> {
        let mut num = self.numerator.mul(&denominator_poly(target));
        for &a in &self.denominator {
            num = num.div_one_minus(a)?;
        }
        Some(num)
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self
            .numerator
            .mul(&denominator_poly(&o.denominator))
            .add(&o.numerator.mul(&denominator_poly(&self.denominator)));
        let mut den = self.denominator.clone();
        den.extend_from_slice(&o.denominator);
        HilbertFraction::new(num, den).canonical()
    }

    pub fn scale(&self, s: i64) -> Self {
        HilbertFraction::new(self.numerator.scale(s), self.denominator.clone())
    }

    pub fn series(&self, order: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..order).map(|e| self.numerator.coeff(e)).collect();
        for &a in &self.denominator {
            for e in a..order {
                c[e] += c[e - a];
            }
        }
        c
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FractionJson {
            numerator: self.numerator.coeffs(),
            denominator: self.denominator.clone(),
        })
        .expect("plain integers serialize")
    }
}

impl fmt::Display for HilbertFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ", self.numerator)?;
        if self.denominator.is_empty() {
            return write!(f, "1");
        }
        for a in &self.denominator {
            if *a == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{a})")?;
            }
        }
        Ok(())
    }
}

pub fn series_expand(f: &HilbertFraction, order: usize) -> Vec<i64> {
    f.series(order)
}

pub fn fractions_equal(f: &HilbertFraction, g: &HilbertFraction) -> bool {
    f.numerator.mul(&denominator_poly(&g.denominator)) == g.numerator.mul(&denominator_poly(&f.denominator))
}

fn geometric_block(step: usize, count: usize) -> IntPolynomial {
    // 1 + t^step + ... + t^{step (count-1)}
    IntPolynomial::from_terms(&(0..count).map(|i| (i * step, 1)).collect::<Vec<_>>())
}

/// Anti-canonical Hilbert series of P(1,1,k) computed from the O(1) series:
/// multiply by `(1-s^{k+2})^2 (1-s^{k(k+2)})`, keep the exponents divisible by
/// `k+2` and put `t = s^{k+2}`. The result sits over `(1-t)^2 (1-t^k)`.
pub fn anticanonical_hilbert_p11k(k: usize) -> HilbertFraction {
    assert!(k >= 1, "k must be positive");
    let q = k + 2;
    // (1-s^q)/(1-s) twice, and (1-s^{kq})/(1-s^k)
    let a = geometric_block(1, q);
    let b = geometric_block(k, q);
    let product = a.mul(&a).mul(&b);
    HilbertFraction::new(product.veronese(q), vec![1, 1, k])
}

/// The closed-form numerator of the anti-canonical series of P(1,1,k).
pub fn closed_form_p11k_numerator(k: usize) -> IntPolynomial {
    let k64 = k as i64;
    let mut c = vec![k64 + 4; k + 2];
    c[0] = 1;
    c[k + 1] = 1;
    if k % 2 == 0 {
        let m = k / 2;
        c[m] = k64 + 5;
        c[m + 1] = k64 + 5;
    } else {
        let m = k.div_ceil(2);
        c[m] = k64 + 6;
    }
    IntPolynomial::from_coeffs(&c)
}

/// Hilbert contribution of one smooth blow-up, `-t/(1-t)^3`, written over
/// `(1-t)^2 (1-t^k)`.
pub fn blowup_contribution(k: usize) -> HilbertFraction {
    let num = IntPolynomial::from_terms(&(1..=k).map(|e| (e, -1)).collect::<Vec<_>>());
    HilbertFraction::new(num, vec![1, 1, k])
}

/// `H_{P(1,1,k)} + l Q`, the series of the blow-up of P(1,1,k) in `l`
/// general points, kept over `(1-t)^2 (1-t^k)`.
pub fn cascade_hilbert_raw(k: usize, l: usize) -> Result<HilbertFraction> {
    let (k64, l64) = (k as i64, l as i64);
    if k == 0 || l64 * k64 >= (k64 + 2) * (k64 + 2) {
        return Err(Error::DegreeNonPositive { k: k64, l: l64 });
    }
    let h = anticanonical_hilbert_p11k(k);
    let q = blowup_contribution(k);
    Ok(HilbertFraction::new(
        h.numerator.add(&q.numerator.scale(l64)),
        vec![1, 1, k],
    ))
}

pub fn cascade_hilbert(k: usize, l: usize) -> Result<HilbertFraction> {
    Ok(cascade_hilbert_raw(k, l)?.canonical())
}

/// `prod (1 - t^d) / prod (1 - t^a)` for a complete intersection of the
/// given degrees in weighted projective space.
pub fn ci_hilbert(weights: &[usize], degrees: &[usize]) -> HilbertFraction {
    HilbertFraction::new(denominator_poly(degrees), weights.to_vec()).canonical()
}

/// Pfaffian degrees of a homogeneous 5x5 skew matrix with upper-triangular
/// entry degrees `entry_degrees[i][j]` (i < j). `None` if the matrix is not
/// homogeneous, i.e. the three terms of some Pfaffian differ in degree.
pub fn pfaffian_degrees(entry_degrees: &[[i64; 5]; 5]) -> Option<[i64; 5]> {
    let d = |a: usize, b: usize| entry_degrees[a.min(b)][a.max(b)];
    let mut out = [0; 5];
    for (i, slot) in out.iter_mut().enumerate() {
        let rest: Vec<usize> = (0..5).filter(|&j| j != i).collect();
        let (a, b, c, e) = (rest[0], rest[1], rest[2], rest[3]);
        let terms = [d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)];
        if terms.iter().any(|&t| t != terms[0]) {
            return None;
        }
        *slot = terms[0];
    }
    Some(out)
}

/// Hilbert numerator `1 - sum t^{p_i} + sum t^{s - p_i} - t^s` of the
/// codimension-3 Pfaffian variety, where `p_i` are the Pfaffian degrees and
/// `s = sum p_i / 2`.
pub fn pfaffian_numerator(entry_degrees: &[[i64; 5]; 5]) -> Option<IntPolynomial> {
    let p = pfaffian_degrees(entry_degrees)?;
    let total: i64 = p.iter().sum();
    if total % 2 != 0 {
        return None;
    }
    let s = total / 2;
    let mut num = IntPolynomial::one();
    for &pi in &p {
        if pi <= 0 || pi >= s {
            return None;
        }
        num.add_term(pi as usize, -1);
        num.add_term((s - pi) as usize, 1);
    }
    num.add_term(s as usize, -1);
    Some(num)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_examples() {
        assert_eq!(HilbertFraction::new(IntPolynomial::one(), vec![1]).series(4), vec![1, 1, 1, 1]);
        assert_eq!(
            HilbertFraction::new(IntPolynomial::one(), vec![1, 1, 5]).series(6),
            vec![1, 2, 3, 4, 5, 7]
        );
        assert_eq!(
            HilbertFraction::new(IntPolynomial::monomial(1, -1), vec![1, 1, 1]).series(4),
            vec![0, -1, -3, -6]
        );
    }

    #[test]
    fn p11k_examples() {
        assert_eq!(anticanonical_hilbert_p11k(2).numerator.coeffs(), vec![1, 7, 7, 1]);
        assert_eq!(anticanonical_hilbert_p11k(3).numerator.coeffs(), vec![1, 7, 9, 7, 1]);
        let p2 = anticanonical_hilbert_p11k(1);
        assert_eq!(p2.numerator.coeffs(), vec![1, 7, 1]);
        // h^0(-nK) on P^2
        let s = p2.series(8);
        for (n, c) in s.iter().enumerate() {
            let n = n as i64;
            assert_eq!(*c, (3 * n + 1) * (3 * n + 2) / 2);
        }
    }

    #[test]
    fn cascade_examples() {
        let f = cascade_hilbert_raw(3, 6).unwrap();
        assert_eq!(f.numerator.coeffs(), vec![1, 1, 3, 1, 1]);
        assert_eq!(cascade_hilbert(4, 0).unwrap(), anticanonical_hilbert_p11k(4).canonical());
        assert_eq!(cascade_hilbert(5, 10), Err(Error::DegreeNonPositive { k: 5, l: 10 }));
    }

    #[test]
    fn equality_and_cancellation() {
        let a = HilbertFraction::new(IntPolynomial::one(), vec![1]);
        let b = HilbertFraction::new(IntPolynomial::from_coeffs(&[1, 1]), vec![2]);
        assert!(fractions_equal(&a, &b));
        assert_eq!(b.canonical(), a);
        let c = ci_hilbert(&[1, 1, 2, 3], &[6]);
        assert_eq!(c.numerator_over(&[1, 1, 2, 3]).unwrap(), IntPolynomial::one_minus(6));
        assert_eq!(ci_hilbert(&[1], &[]), a);
    }

    #[test]
    fn exact_division() {
        let p = IntPolynomial::one_minus(6);
        assert_eq!(p.div_one_minus(2).unwrap(), IntPolynomial::from_coeffs(&[1, 0, 1, 0, 1]));
        assert!(p.div_one_minus(4).is_none());
    }
}
