//! Sparse integer polynomials in the deformation parameter `q`.

use num::bigint::Sign;
use num::traits::{One, Signed, Zero};
use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `q` with big-integer coefficients, stored as a sparse map
/// from exponent to coefficient. Zero coefficients are never stored; the zero
/// polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        QPoly { coeffs }
    }

    pub fn constant_i64(c: i64) -> Self {
        QPoly::constant(BigInt::from(c))
    }

    /// The monomial `c * q^e`.
    pub fn monomial(c: BigInt, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QPoly { coeffs }
    }

    /// `q^e`.
    pub fn q_power(e: u32) -> Self {
        QPoly::monomial(BigInt::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.degree().map(|d| self.coeff(d)).unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of the lowest-degree term.
    pub fn lowest_coeff(&self) -> BigInt {
        self.low_degree().map(|d| self.coeff(d)).unwrap_or_else(BigInt::zero)
    }

    /// Evaluation at `q = 0`, i.e. the constant term.
    pub fn eval_q0(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, BigInt)>>(terms: I) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn add_ref(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn mul_ref(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> QPoly {
        let mut out = QPoly::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// Substitute `q -> q^k` (exponent scaling). Used to obtain base-q^2
    /// objects such as the q^2-binomials from their base-q counterparts.
    pub fn substitute_q_power(&self, k: u32) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = gcd_bigint(&g, c);
        }
        g
    }

    /// Divide every coefficient by `d`; panics if any division is inexact.
    pub fn div_content(&self, d: &BigInt) -> QPoly {
        assert!(!d.is_zero(), "division of polynomial content by zero");
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| {
                    let (quo, rem) = num::Integer::div_rem(c, d);
                    assert!(rem.is_zero(), "inexact content division");
                    (*e, quo)
                })
                .collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_abs(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.div_content(&c)
    }

    /// Exact polynomial division; `None` when the division leaves a remainder
    /// or hits an inexact coefficient quotient.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quo = QPoly::zero();
        let dd = divisor.degree().unwrap();
        let dl = divisor.leading_coeff();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return None;
            }
            let (qc, qrem) = num::Integer::div_rem(&rem.leading_coeff(), &dl);
            if !qrem.is_zero() {
                return None;
            }
            let shift = dr - dd;
            quo.add_term(shift, qc.clone());
            let piece = divisor.mul_ref(&QPoly::monomial(qc, shift));
            rem = rem.sub_ref(&piece);
        }
        Some(quo)
    }

    /// Polynomial gcd over the integers via a primitive pseudo-remainder
    /// sequence, normalized to a primitive polynomial with positive leading
    /// coefficient.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.primitive_abs();
        }
        if b.is_zero() {
            return a.primitive_abs();
        }
        let mut x = a.primitive_abs();
        let mut y = b.primitive_abs();
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = QPoly::pseudo_rem(&x, &y).primitive_abs();
            x = y;
            y = r;
        }
        x.primitive_abs()
    }

    /// Pseudo-remainder: the remainder of `lc(b)^k * a` divided by `b` for a
    /// suitable power k, computed without leaving the integers.
    fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let lb = b.leading_coeff();
        let mut r = a.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff();
            // r <- lc(b)*r - lc(r)*q^(dr-db)*b ; strictly lowers deg(r)
            r = r.mul_ref(&QPoly::constant(lb.clone()))
                .sub_ref(&b.mul_ref(&QPoly::monomial(lr, dr - db)));
        }
        r
    }
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    num::Integer::gcd(a, b)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.neg_ref()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let (sign, mag) = (c.sign(), c.magnitude());
            if first {
                if sign == Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if *e > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let a = p(&[(0, 1), (2, 3)]);
        let b = p(&[(0, -1), (2, -3)]);
        assert!(a.add_ref(&b).is_zero());
        assert_eq!(a.add_ref(&b), QPoly::zero());
    }

    #[test]
    fn multiplication_matches_hand_expansion() {
        // (1 - q)(1 + q) = 1 - q^2
        let a = p(&[(0, 1), (1, -1)]);
        let b = p(&[(0, 1), (1, 1)]);
        assert_eq!(a.mul_ref(&b), p(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn exact_division_round_trips() {
        let a = p(&[(0, 1), (1, -2), (3, 5)]);
        let b = p(&[(0, 1), (2, 7)]);
        let prod = a.mul_ref(&b);
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        // inexact division is signalled, not silently truncated
        let c = prod.add_ref(&QPoly::one());
        assert_eq!(c.div_exact(&a), None);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = p(&[(0, 1), (1, 1)]); // 1 + q
        let a = common.mul_ref(&p(&[(0, 2), (2, 1)]));
        let b = common.mul_ref(&p(&[(0, -3), (1, 1)]));
        assert_eq!(QPoly::gcd(&a, &b), common);
        assert_eq!(QPoly::gcd(&a, &QPoly::zero()), a.primitive_abs());
    }

    #[test]
    fn substitution_doubles_exponents() {
        let a = p(&[(0, 1), (1, -1), (3, 2)]);
        assert_eq!(a.substitute_q_power(2), p(&[(0, 1), (2, -1), (6, 2)]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[(0, 1), (1, -1), (4, 2)]).to_string(), "1 - q + 2*q^4");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
