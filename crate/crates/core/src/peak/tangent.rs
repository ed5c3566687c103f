use std::collections::BTreeMap;

use super::{is_peak_element, s_tilde, solve_in};
use crate::algebra::{ratio, Field, Rational};
use crate::combinatorics::{odd_compositions, Composition};
use crate::error::{Error, Result};
use crate::sym::{NsfBasis, NsfElement};

/// `T_{2k+1} = R_{(2^k, 1)}`.
pub fn tangent(m: usize) -> Result<NsfElement> {
    if m % 2 == 0 {
        return Err(Error::invalid(format!("T_{m} needs an odd index")));
    }
    let mut parts = vec![2; m / 2];
    parts.push(1);
    Ok(NsfElement::ribbon(Composition::new(parts)?))
}

/// `T^I = T_{i₁} ⋯ T_{i_r}` for an odd composition `I`.
pub fn tangent_basis(i: &Composition) -> Result<NsfElement> {
    if !i.is_odd() {
        return Err(Error::invalid(format!("{i} has an even part")));
    }
    i.parts()
        .iter()
        .try_fold(NsfElement::one(NsfBasis::R), |acc, &m| Ok(acc.product(&tangent(m)?)))
}

/// Coordinates of a homogeneous peak element in the basis `{T^I : I odd}`.
pub fn expand_in_t(x: &NsfElement, n: usize) -> Result<BTreeMap<Composition, Rational>> {
    if !is_peak_element(x) {
        return Err(Error::NotInSpan { residual: format!("{x} is not a peak element") });
    }
    let odd = odd_compositions(n);
    let basis = odd.iter().map(tangent_basis).collect::<Result<Vec<_>>>()?;
    let coeffs = solve_in(&basis, x, n)?;
    Ok(odd.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect())
}

/// Degree-`n` part of `log σ̃₁ = log(1 + Σ_{k≥1} S̃_k)`, from the series
/// `Σ_m (-1)^{m+1} X^m / m`.
pub fn log_sigma_tilde(n: usize) -> NsfElement {
    // powers[d] = degree-d part of X^m for the current m
    let mut powers: Vec<NsfElement> = (0..=n)
        .map(|d| if d == 0 { NsfElement::zero(NsfBasis::R) } else { s_tilde(d) })
        .collect();
    let mut out = NsfElement::zero(NsfBasis::R);
    for m in 1..=n {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        out = out.add(&powers[n].scale(&ratio(sign, m as i64)));
        let next: Vec<NsfElement> = (0..=n)
            .map(|d| {
                (1..d).fold(NsfElement::zero(NsfBasis::R), |acc, k| acc.add(&powers[d - k].product(&s_tilde(k))))
            })
            .collect();
        powers = next;
    }
    out
}

/// `2 Σ_{I odd, ℓ(I) odd} (-1)^{(|I|-ℓ(I))/2} / ℓ(I) · T^I` in degree `n`.
pub fn log_sigma_tilde_closed_form(n: usize) -> NsfElement {
    odd_compositions(n)
        .into_iter()
        .filter(|i| i.len() % 2 == 1)
        .fold(NsfElement::zero(NsfBasis::R), |acc, i| {
            let sign = if ((n - i.len()) / 2) % 2 == 0 { 2 } else { -2 };
            let t = tangent_basis(&i).expect("odd composition");
            acc.add(&t.scale(&ratio(sign, i.len() as i64)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::combinatorics::IndexSet;
    use crate::peak::pi_class;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn tangent_examples() {
        assert_eq!(tangent(3).unwrap().to_string(), "R_[2,1]");
        assert_eq!(tangent_basis(&c("1,1")).unwrap().to_string(), "R_[2] + R_[1,1]");
        assert!(tangent_basis(&c("2")).is_err());
        let coords = expand_in_t(&pi_class(&IndexSet::empty(2), 2).unwrap(), 2).unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[&c("1,1")], rat(1));
    }

    #[test]
    fn log_examples() {
        assert_eq!(log_sigma_tilde(1).to_string(), "2R_[1]");
        let coords = expand_in_t(&log_sigma_tilde(3), 3).unwrap();
        assert_eq!(coords[&c("3")], rat(-2));
        assert_eq!(coords[&c("1,1,1")], ratio(2, 3));
        for n in 1..6 {
            assert_eq!(log_sigma_tilde(n), log_sigma_tilde_closed_form(n), "n = {n}");
        }
    }
}
