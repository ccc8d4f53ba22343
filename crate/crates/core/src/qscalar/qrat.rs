//! Reduced rational functions in `q`.

use super::qpoly::QPoly;
use num::traits::{One, Signed, Zero};
use num::BigInt;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function `num/den` in `q`, kept in canonical form:
///
/// - `den` is nonzero and `gcd(num, den) = 1` over the integers (both the
///   polynomial gcd and the gcd of all integer coefficients are divided out),
/// - the lowest-degree nonzero coefficient of `den` is positive.
///
/// Equality is therefore plain structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = QRat { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        QRat { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        QRat { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat { num: p, den: QPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        QRat::from_poly(QPoly::constant_i64(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        QRat::from_poly(QPoly::constant(c))
    }

    /// `q^e` for any integer exponent, negative exponents going into the
    /// denominator.
    pub fn q_power(e: i64) -> Self {
        if e >= 0 {
            QRat::from_poly(QPoly::q_power(e as u32))
        } else {
            QRat { num: QPoly::one(), den: QPoly::q_power((-e) as u32) }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator reduced to 1, i.e. the value is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&QPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The underlying integer when the value is a constant polynomial.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.eval_q0())
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::one();
            return;
        }
        let g = QPoly::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        let c = num::Integer::gcd(&self.num.content(), &self.den.content());
        if !c.is_one() {
            self.num = self.num.div_content(&c);
            self.den = self.den.div_content(&c);
        }
        if self.den.lowest_coeff().is_negative() {
            self.num = self.num.neg_ref();
            self.den = self.den.neg_ref();
        }
    }

    pub fn add_ref(&self, other: &QRat) -> QRat {
        QRat::new(
            &self.num.mul_ref(&other.den) + &other.num.mul_ref(&self.den),
            self.den.mul_ref(&other.den),
        )
    }

    pub fn sub_ref(&self, other: &QRat) -> QRat {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> QRat {
        QRat { num: self.num.neg_ref(), den: self.den.clone() }
    }

    pub fn mul_ref(&self, other: &QRat) -> QRat {
        QRat::new(self.num.mul_ref(&other.num), self.den.mul_ref(&other.den))
    }

    pub fn inv(&self) -> QRat {
        assert!(!self.is_zero(), "inverse of zero rational function");
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn div_ref(&self, other: &QRat) -> QRat {
        self.mul_ref(&other.inv())
    }

    pub fn pow(&self, e: i64) -> QRat {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = QRat::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul_ref(&base);
        }
        out
    }

    /// Evaluation at `q = 0` as a constant rational; `None` when the reduced
    /// denominator vanishes at 0 (a pole at the origin).
    pub fn eval_q0(&self) -> Option<QRat> {
        let d0 = self.den.eval_q0();
        if d0.is_zero() {
            return None;
        }
        Some(QRat::new(QPoly::constant(self.num.eval_q0()), QPoly::constant(d0)))
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        self.add_ref(rhs)
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self.sub_ref(rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        self.mul_ref(rhs)
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.div_ref(rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        self.neg_ref()
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn reduction_cancels_common_factors() {
        // (1 - q^2)/(1 - q) = 1 + q
        let r = QRat::new(p(&[(0, 1), (2, -1)]), p(&[(0, 1), (1, -1)]));
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &p(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn canonical_sign_on_denominator() {
        // 1/(q - 1) is stored as (-1)/(1 - q)
        let r = QRat::new(QPoly::one(), p(&[(0, -1), (1, 1)]));
        assert_eq!(r.den().lowest_coeff(), BigInt::from(1));
        assert_eq!(r.num(), &p(&[(0, -1)]));
        // structural equality of canonical forms
        let s = QRat::new(p(&[(0, -2)]), p(&[(0, 2), (1, -2)]));
        assert_eq!(r, s);
    }

    #[test]
    fn field_operations() {
        let a = QRat::new(QPoly::one(), p(&[(0, 1), (1, -1)])); // 1/(1-q)
        let b = QRat::from_poly(p(&[(0, 1), (1, -1)]));
        assert!(a.mul_ref(&b).is_one());
        assert!(a.sub_ref(&a).is_zero());
        assert_eq!(a.inv(), b);
        let neg_pow = QRat::q_power(-2);
        assert_eq!(neg_pow.mul_ref(&QRat::q_power(2)), QRat::one());
    }

    #[test]
    fn q0_evaluation() {
        let a = QRat::new(p(&[(0, 3), (1, 5)]), p(&[(0, 2), (1, -1)]));
        let v = a.eval_q0().unwrap();
        assert_eq!(v, QRat::new(p(&[(0, 3)]), p(&[(0, 2)])));
        assert_eq!(QRat::q_power(-1).eval_q0(), None);
    }
}
