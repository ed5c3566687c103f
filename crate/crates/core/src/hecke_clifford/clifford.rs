//! The Clifford algebra `Cl_n` in the basis `c_D = c_{d₁} c_{d₂} ⋯` with
//! `d₁ < d₂ < ⋯`, subject to `c_i c_j = -c_j c_i` and `c_i² = -1`.

use crate::algebra::{AlgebraElement, Field, GaussianRational};
use crate::combinatorics::IndexSet;

pub type CliffordElement = AlgebraElement<IndexSet, GaussianRational>;

/// `c_j c_D = sign · c_{D Δ {j}}`.
///
/// Moving `c_j` past the elements of `D` below `j` contributes
/// `(-1)^{|D ∩ [1, j-1]|}`; if `j ∈ D` the adjacent pair `c_j c_j` gives a
/// further `-1`.
pub fn clifford_sign(j: usize, d: &IndexSet) -> (i8, IndexSet) {
    let below = d.iter().take_while(|&x| x < j).count();
    let mut sign = if below % 2 == 0 { 1 } else { -1 };
    if d.contains(j) {
        sign = -sign;
    }
    (sign, d.toggled(j))
}

/// `c_A c_B = sign · c_{A Δ B}`: sorting the word costs one sign per pair
/// `a > b`, and each common element squares to `-1`.
pub fn clifford_product(a: &IndexSet, b: &IndexSet) -> (i8, IndexSet) {
    let inversions: usize = b.iter().map(|y| a.iter().filter(|&x| x > y).count()).sum();
    let common = a.intersection(b).len();
    let sign = if (inversions + common) % 2 == 0 { 1 } else { -1 };
    (sign, a.symmetric_difference(b))
}

pub fn clifford_multiply(x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
    x.bilinear(y, |a, b| {
        let (sign, d) = clifford_product(a, b);
        CliffordElement::term(d, GaussianRational::from_i64(sign as i64))
    })
}

/// `c_D` as an element.
pub fn clifford_word(d: IndexSet) -> CliffordElement {
    CliffordElement::monomial(d)
}

/// True when every term has `|D|` even.
pub fn is_even(x: &CliffordElement) -> bool {
    x.support().all(|d| d.len() % 2 == 0)
}
