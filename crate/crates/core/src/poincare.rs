//! Poincaré polynomials of the classical groups.
//!
//! For a compact simple group with exponents `a_1, .., a_r` the polynomial is
//! `prod_i (1 + t^(2 a_i + 1))`. Coefficients are the Betti numbers and are
//! kept as unbounded integers: for `SU(64)` they sum to `2^63`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::cartan::{CartanClass, CartanGroup};

/// Dense polynomial in `t` with nonnegative integer coefficients.
///
/// Canonical form: no trailing zero coefficient, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigUint>,
}

/// Outcome of comparing two polynomials coefficient by coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyComparison {
    Equal,
    /// Smallest degree at which the coefficients differ.
    Differ {
        degree: usize,
        left: BigUint,
        right: BigUint,
    },
}

impl PolyComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, PolyComparison::Equal)
    }
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigUint::one()] }
    }

    pub fn from_coefficients(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<BigUint> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^q`; zero past the degree.
    pub fn coefficient(&self, q: usize) -> BigUint {
        self.coeffs.get(q).cloned().unwrap_or_default()
    }

    /// Multiplies in place by `1 + t^shift`.
    pub fn mul_binomial(&mut self, shift: usize) {
        if self.coeffs.is_empty() {
            return;
        }
        if shift == 0 {
            for c in &mut self.coeffs {
                *c <<= 1u32;
            }
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + shift, BigUint::zero());
        for i in (shift..old_len + shift).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - shift];
        }
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        if t.is_one() {
            return BigInt::from(self.coefficient_sum());
        }
        if *t == -BigInt::one() {
            let (mut even, mut odd) = (BigUint::zero(), BigUint::zero());
            for (q, c) in self.coeffs.iter().enumerate() {
                if q % 2 == 0 {
                    even += c;
                } else {
                    odd += c;
                }
            }
            return BigInt::from(even) - BigInt::from(odd);
        }
        // Horner
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + BigInt::from(c.clone()))
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn coefficient_sum(&self) -> BigUint {
        self.coeffs.iter().fold(BigUint::zero(), |acc, c| acc + c)
    }

    /// `c_q == c_(deg - q)` for every `q`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficient-wise comparison reporting the first differing degree.
    pub fn compare(&self, other: &IntPolynomial) -> PolyComparison {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigUint::zero();
        for q in 0..len {
            let a = self.coeffs.get(q).unwrap_or(&zero);
            let b = other.coeffs.get(q).unwrap_or(&zero);
            if a != b {
                return PolyComparison::Differ { degree: q, left: a.clone(), right: b.clone() };
            }
        }
        PolyComparison::Equal
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (q, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "t^{q}")?,
                (_, false) => write!(f, "{c}*t^{q}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Degrees `2a + 1` of the binomial factors, ascending.
pub fn factor_degrees(g: &CartanGroup) -> Vec<u32> {
    g.exponents().into_iter().map(|a| 2 * a + 1).collect()
}

/// Unexpanded product form, e.g. `(1+t^3)(1+t^5)(1+t^7)`.
pub fn factored_form(g: &CartanGroup) -> String {
    let mut out = String::new();
    for d in factor_degrees(g) {
        let _ = write!(out, "(1+t^{d})");
    }
    out
}

/// Fully expanded Poincaré polynomial of `g`.
pub fn poincare_polynomial(g: &CartanGroup) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for d in factor_degrees(g) {
        p.mul_binomial(d as usize);
    }
    p
}

/// Betti number `b_q(g)`; zero above the dimension.
pub fn betti(g: &CartanGroup, q: usize) -> BigUint {
    poincare_polynomial(g).coefficient(q)
}

/// Compares the Poincaré polynomials of two groups.
pub fn compare_groups(a: &CartanGroup, b: &CartanGroup) -> PolyComparison {
    poincare_polynomial(a).compare(&poincare_polynomial(b))
}

/// Poincaré polynomials of one Cartan series at increasing rank, each built
/// from its predecessor with a single binomial multiplication.
///
/// `D_n` reuses the `B_(n-1)` product, since its exponents are those of
/// `B_(n-1)` plus `n - 1`.
#[derive(Clone, Debug)]
pub struct PoincareTower {
    class: CartanClass,
    rank: u32,
    // running product over the odd exponents 1, 3, .., or 1..=rank for A
    base: IntPolynomial,
}

impl PoincareTower {
    pub fn new(class: CartanClass) -> Self {
        PoincareTower { class, rank: 0, base: IntPolynomial::one() }
    }
}

impl Iterator for PoincareTower {
    type Item = (CartanGroup, IntPolynomial);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.rank += 1;
            let n = self.rank;
            let group = match CartanGroup::new(self.class, u64::from(n)) {
                Ok(g) => Some(g),
                Err(_) if n < self.class.min_rank() => None,
                Err(_) => return None,
            };
            match self.class {
                CartanClass::A => self.base.mul_binomial(2 * n as usize + 1),
                CartanClass::B | CartanClass::C => self.base.mul_binomial(4 * n as usize - 1),
                CartanClass::D => {
                    // base tracks B_(n-1) here
                    if let Some(group) = group {
                        let mut p = self.base.clone();
                        p.mul_binomial(2 * n as usize - 1);
                        self.base.mul_binomial(4 * n as usize - 1);
                        return Some((group, p));
                    }
                    self.base.mul_binomial(4 * n as usize - 1);
                    continue;
                }
            }
            if let Some(group) = group {
                return Some((group, self.base.clone()));
            }
        }
    }
}
