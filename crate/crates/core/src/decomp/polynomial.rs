//! Polynomials in finitely many commuting variables, used to realize
//! Schur's `Q`-functions concretely.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{rat, AlgebraElement, Rational};
use crate::combinatorics::{Composition, StrictPartition};
use crate::error::{Error, Result};
use crate::sym::{QsymBasis, QsymElement};

/// Largest Pfaffian expanded by [`schur_q`].
pub const MAX_PFAFFIAN: usize = 6;

/// `Σ c_α x^α` in `m` variables; exponent vectors have length `m`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    nvars: usize,
    terms: AlgebraElement<Vec<u8>>,
}

impl MultivariatePolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultivariatePolynomial { nvars, terms: AlgebraElement::zero() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], rat(1))
    }

    pub fn monomial(exponents: Vec<u8>, c: Rational) -> Self {
        MultivariatePolynomial { nvars: exponents.len(), terms: AlgebraElement::term(exponents, c) }
    }

    /// `x_i`, 1-based.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, rat(1))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u8>, Rational)>) -> Result<Self> {
        let terms = AlgebraElement::from_terms(terms);
        if terms.support().any(|e| e.len() != nvars) {
            return Err(Error::invalid(format!("exponent vector length differs from {nvars}")));
        }
        Ok(MultivariatePolynomial { nvars, terms })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &AlgebraElement<Vec<u8>> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u8]) -> Rational {
        self.terms.coefficient(&exponents.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of every monomial, when they all agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.support().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        let d = degrees.next()?;
        degrees.all(|x| x == d).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms = self.terms.clone();
        terms.add_scaled(&other.terms, &rat(1));
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms = self.terms.clone();
        terms.add_scaled(&other.terms, &rat(-1));
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MultivariatePolynomial { nvars: self.nvars, terms: self.terms.scale(c) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let terms = self.terms.bilinear(&other.terms, |a, b| {
            AlgebraElement::monomial(a.iter().zip(b).map(|(x, y)| x + y).collect())
        });
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Self {
        let terms = self.terms.map_keys(|e| {
            let mut e = e.clone();
            e.swap(i - 1, i);
            e
        });
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    /// Invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_variables(i) == *self)
    }

    /// Sets `x_{k+1} = ⋯ = x_m = 0` and drops those variables.
    pub fn truncate(&self, k: usize) -> Self {
        let k = k.min(self.nvars);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[k..].iter().all(|&x| x == 0))
            .map(|(e, c)| (e[..k].to_vec(), c.clone()));
        MultivariatePolynomial { nvars: k, terms: AlgebraElement::from_terms(terms) }
    }
}

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{x}", i + 1) })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("({c})*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Weak compositions of `r` into `m` parts.
fn weak_compositions(r: usize, m: usize) -> Vec<Vec<u8>> {
    if m == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=r)
        .rev()
        .flat_map(|first| {
            weak_compositions(r - first, m - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first as u8);
                rest
            })
        })
        .collect()
}

/// `q_0, …, q_cap` in `m` variables, from `Σ q_r t^r = ∏_i (1 + x_i t)/(1 - x_i t)`.
/// Each factor is `1 + 2 Σ_{k ≥ 1} x_i^k t^k`, so `x^α` has coefficient
/// `2^{#{i : α_i > 0}}` in `q_{|α|}`.
pub fn q_series(m: usize, degree_cap: usize) -> Result<Vec<MultivariatePolynomial>> {
    if m < degree_cap {
        return Err(Error::invalid(format!(
            "{m} variables cannot faithfully carry degree {degree_cap}"
        )));
    }
    Ok((0..=degree_cap)
        .map(|r| {
            let terms = weak_compositions(r, m).into_iter().map(|e| {
                let support = e.iter().filter(|&&x| x > 0).count();
                (e, rat(1i64 << support))
            });
            MultivariatePolynomial { nvars: m, terms: AlgebraElement::from_terms(terms) }
        })
        .collect())
}

/// `Q_(r,s) = q_r q_s + 2 Σ_{i=1}^{s} (-1)^i q_{r+i} q_{s-i}`.
fn two_row(q: &[MultivariatePolynomial], r: usize, s: usize) -> MultivariatePolynomial {
    let mut out = q[r].mul(&q[s]);
    for i in 1..=s {
        let sign = if i % 2 == 0 { 2 } else { -2 };
        out = out.add(&q[r + i].mul(&q[s - i]).scale(&rat(sign)));
    }
    out
}

/// Pfaffian of the antisymmetric matrix with upper entries `entry(i, j)`,
/// expanded along the first row.
fn pfaffian(
    rows: &[usize],
    entry: &dyn Fn(usize, usize) -> MultivariatePolynomial,
    nvars: usize,
) -> MultivariatePolynomial {
    if rows.is_empty() {
        return MultivariatePolynomial::one(nvars);
    }
    let mut out = MultivariatePolynomial::zero(nvars);
    for k in 1..rows.len() {
        let rest: Vec<usize> = rows[1..].iter().enumerate().filter(|&(j, _)| j + 1 != k).map(|(_, &r)| r).collect();
        let term = entry(rows[0], rows[k]).mul(&pfaffian(&rest, entry, nvars));
        out = if k % 2 == 1 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// Schur's `Q_λ` in `m` variables, as a Pfaffian of two-row functions.
pub fn schur_q(lambda: &StrictPartition, m: usize) -> Result<MultivariatePolynomial> {
    let n = lambda.size();
    if m < n {
        return Err(Error::invalid(format!("Q_{lambda} needs at least {n} variables, got {m}")));
    }
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    Error::check_bound("Pfaffian size", parts.len(), MAX_PFAFFIAN)?;
    let q = q_series(m, n)?;
    let entries: BTreeMap<(usize, usize), MultivariatePolynomial> = (0..parts.len())
        .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
        .map(|(i, j)| ((i, j), two_row(&q, parts[i], parts[j])))
        .collect();
    let rows: Vec<usize> = (0..parts.len()).collect();
    Ok(pfaffian(&rows, &|i, j| entries[&(i, j)].clone(), m))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// The `M`-expansion of a quasi-symmetric polynomial, read from its
/// monomials. Rejects polynomials that are not quasi-symmetric.
pub fn poly_to_monomial(p: &MultivariatePolynomial) -> Result<QsymElement> {
    let m = p.nvars();
    let mut seen: BTreeMap<Composition, (Rational, u64)> = BTreeMap::new();
    for (e, c) in p.terms().iter() {
        let alpha = Composition::new(e.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect())?;
        let entry = seen.entry(alpha.clone()).or_insert((c.clone(), 0));
        if entry.0 != *c {
            return Err(Error::invalid(format!(
                "not quasi-symmetric: monomials of type {alpha} have coefficients {} and {c}",
                entry.0
            )));
        }
        entry.1 += 1;
    }
    for (alpha, (_, count)) in &seen {
        let expected = binomial(m, alpha.len());
        if *count != expected {
            return Err(Error::invalid(format!(
                "not quasi-symmetric: {count} of {expected} monomials of type {alpha} present"
            )));
        }
    }
    Ok(QsymElement::from_terms(
        QsymBasis::M,
        AlgebraElement::from_terms(seen.into_iter().map(|(alpha, (c, _))| (alpha, c))),
    ))
}

/// The exact `F`-expansion of a quasi-symmetric polynomial homogeneous of
/// degree `n`.
pub fn poly_to_fundamental(p: &MultivariatePolynomial, n: usize) -> Result<QsymElement> {
    if !p.is_zero() && p.homogeneous_degree() != Some(n) {
        return Err(Error::invalid(format!("polynomial is not homogeneous of degree {n}")));
    }
    Ok(poly_to_monomial(p)?.to_f())
}

/// Evaluates a quasi-symmetric function in `m` variables.
pub fn qsym_to_poly(g: &QsymElement, m: usize) -> MultivariatePolynomial {
    let mut out = MultivariatePolynomial::zero(m);
    for (alpha, c) in g.to_m().terms().iter() {
        let l = alpha.len();
        if l > m {
            continue;
        }
        // increasing position sequences 0 ≤ p_1 < ⋯ < p_l < m
        let mut positions: Vec<usize> = (0..l).collect();
        loop {
            let mut e = vec![0u8; m];
            for (k, &pos) in positions.iter().enumerate() {
                e[pos] = alpha.parts()[k] as u8;
            }
            out = out.add(&MultivariatePolynomial::monomial(e, c.clone()));
            let Some(k) = (0..l).rev().find(|&k| positions[k] < m - l + k) else { break };
            positions[k] += 1;
            for j in k + 1..l {
                positions[j] = positions[j - 1] + 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    /// `e_k` and `h_k` in `m` variables, built independently of `q_series`.
    fn e_h(m: usize, k: usize) -> (MultivariatePolynomial, MultivariatePolynomial) {
        let e = weak_compositions(k, m).into_iter().filter(|v| v.iter().all(|&x| x <= 1)).map(|v| (v, rat(1)));
        let h = weak_compositions(k, m).into_iter().map(|v| (v, rat(1)));
        (
            MultivariatePolynomial::from_terms(m, e).unwrap(),
            MultivariatePolynomial::from_terms(m, h).unwrap(),
        )
    }

    #[test]
    fn q_series_is_e_times_h() {
        for m in 1..=4 {
            let q = q_series(m, m).unwrap();
            for (r, qr) in q.iter().enumerate() {
                let mut expected = MultivariatePolynomial::zero(m);
                for a in 0..=r {
                    expected = expected.add(&e_h(m, a).0.mul(&e_h(m, r - a).1));
                }
                assert_eq!(*qr, expected, "m = {m}, r = {r}");
            }
        }
        let q = q_series(2, 1).unwrap();
        assert_eq!(q[0], MultivariatePolynomial::one(2));
        assert_eq!(q[1].to_string(), "(2)*x2 + (2)*x1");
        assert!(q_series(2, 3).is_err());
    }

    #[test]
    fn small_schur_q() {
        let q = q_series(3, 3).unwrap();
        assert_eq!(schur_q(&sp("2"), 3).unwrap(), q[2]);
        let expected = q[2].mul(&q[1]).sub(&q[3].scale(&rat(2)));
        assert_eq!(schur_q(&sp("2,1"), 3).unwrap(), expected);
        let q321 = schur_q(&sp("3,2,1"), 6).unwrap();
        assert_eq!(q321.homogeneous_degree(), Some(6));
        assert!(q321.is_symmetric());
        assert!(schur_q(&sp("2,1"), 2).is_err());
    }

    #[test]
    fn fundamental_expansions() {
        let q2 = &q_series(2, 2).unwrap()[2];
        assert_eq!(poly_to_fundamental(q2, 2).unwrap().to_string(), "2F_[2] + 2F_[1,1]");
        let e2 = e_h(3, 2).0;
        assert_eq!(poly_to_fundamental(&e2, 2).unwrap(), QsymElement::fundamental("1,1".parse().unwrap()));
        let bad = MultivariatePolynomial::monomial(vec![2, 1, 0], rat(1));
        assert!(poly_to_fundamental(&bad, 3).is_err());
    }

    #[test]
    fn evaluation_round_trip() {
        let p = schur_q(&sp("3,1"), 4).unwrap();
        let g = poly_to_fundamental(&p, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(qsym_to_poly(&g, k), p.truncate(k), "k = {k}");
        }
    }
}
