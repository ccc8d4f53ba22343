//! q-special functions: q-factorials, q-Pochhammer symbols, q-binomial
//! coefficients, and the chi weights used by the transfer-matrix boundary
//! sums.

use super::laurent::LaurentScalar;
use super::qpoly::QPoly;
use super::qrat::QRat;

/// `(q)_m = prod_{j=1}^m (1 - q^j)`, an exact polynomial of degree m(m+1)/2.
pub fn q_factorial(m: u32) -> QPoly {
    let mut out = QPoly::one();
    for j in 1..=m {
        out = out.mul_ref(&QPoly::one().sub_ref(&QPoly::q_power(j)));
    }
    out
}

/// `(z; q)_m = prod_{j=1}^m (1 - z q^{j-1})` with `z = z_coeff * q^z_qshift`.
///
/// Negative `z_qshift` is allowed; the factors then pick up `1/q^k` pieces and
/// the result is a reduced rational function. With `z = q` this specializes
/// to [`q_factorial`].
pub fn q_pochhammer(z_coeff: &QRat, z_qshift: i64, m: u32) -> QRat {
    let mut out = QRat::one();
    for j in 1..=m {
        let factor = QRat::one().sub_ref(&z_coeff.mul_ref(&QRat::q_power(z_qshift + j as i64 - 1)));
        out = out.mul_ref(&factor);
    }
    out
}

/// `(q^2)_m`, the base-q^2 factorial.
pub fn q2_factorial(m: u32) -> QPoly {
    q_factorial(m).substitute_q_power(2)
}

/// Gaussian binomial `[m choose j]_q = (q)_m / ((q)_j (q)_{m-j})` as an exact
/// polynomial; 0 when `j` lies outside `[0, m]`.
///
/// The division is asserted exact: a failure would signal an arithmetic bug in
/// the polynomial engine, never an expected condition.
pub fn q_binomial(m: u32, j: i64) -> QPoly {
    if j < 0 || j > m as i64 {
        return QPoly::zero();
    }
    let j = j as u32;
    let num = q_factorial(m);
    let den = q_factorial(j).mul_ref(&q_factorial(m - j));
    num.div_exact(&den)
        .expect("non-exact division in q-binomial: arithmetic bug")
}

/// Base-q^2 Gaussian binomial, by exponent doubling.
pub fn q2_binomial(m: u32, j: i64) -> QPoly {
    q_binomial(m, j).substitute_q_power(2)
}

/// `chi_m = 1/(q)_m`.
pub fn chi(m: u32) -> QRat {
    QRat::new(QPoly::one(), q_factorial(m))
}

/// `chi'_m = (q^2)_m / (q)_m`; the denominator always cancels, leaving a
/// polynomial.
pub fn chi_prime(m: u32) -> QRat {
    QRat::new(q2_factorial(m), q_factorial(m))
}

/// `(z_coeff * v q^z_qshift ; q)_m` as a Laurent polynomial in the variable
/// `v` over `QRat`: `prod_{j=1}^m (1 - z_coeff * v * q^{z_qshift + j - 1})`.
pub fn q_pochhammer_in_var(var: &str, z_coeff: &QRat, z_qshift: i64, m: u32) -> LaurentScalar {
    let mut out = LaurentScalar::one();
    for j in 1..=m {
        let c = z_coeff.mul_ref(&QRat::q_power(z_qshift + j as i64 - 1));
        let factor = LaurentScalar::one().sub_ref(&LaurentScalar::monomial(c, &[(var, 1)]));
        out = out.mul_ref(&factor);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn p(terms: &[(u32, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn q_factorial_small_values() {
        assert!(q_factorial(0).is_one());
        assert_eq!(q_factorial(1), p(&[(0, 1), (1, -1)]));
        // direct product of (1-q)(1-q^2)(1-q^3), expanded by the engine and
        // frozen: 1 - q - q^2 + q^4 + q^5 - q^6
        assert_eq!(
            q_factorial(3),
            p(&[(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)])
        );
        assert_eq!(q_factorial(3).degree(), Some(6)); // m(m+1)/2
    }

    #[test]
    fn q_pochhammer_cases() {
        // (z; q)_0 = 1 for any z
        assert!(q_pochhammer(&QRat::from_int(7), 3, 0).is_one());
        // (-1; q)_2 = (1+1)(1+q) = 2(1+q)
        assert_eq!(
            q_pochhammer(&QRat::from_int(-1), 0, 2),
            QRat::from_poly(p(&[(0, 2), (1, 2)]))
        );
        // (q^2; q)_2 = (1-q^2)(1-q^3)
        let expect = p(&[(0, 1), (2, -1)]).mul_ref(&p(&[(0, 1), (3, -1)]));
        assert_eq!(q_pochhammer(&QRat::one(), 2, 2), QRat::from_poly(expect));
        // z = q recovers the q-factorial
        for m in 0..6 {
            assert_eq!(
                q_pochhammer(&QRat::one(), 1, m),
                QRat::from_poly(q_factorial(m))
            );
        }
    }

    #[test]
    fn q_binomial_values() {
        for m in 0..6 {
            assert!(q_binomial(m, 0).is_one());
            assert_eq!(q_binomial(m, -1), QPoly::zero());
            assert_eq!(q_binomial(m, m as i64 + 1), QPoly::zero());
        }
        assert_eq!(q_binomial(2, 1), p(&[(0, 1), (1, 1)]));
        // (1+q^2)(1+q+q^2) expanded independently
        let direct = p(&[(0, 1), (2, 1)]).mul_ref(&p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(q_binomial(4, 2), direct);
    }

    #[test]
    fn q_binomial_symmetry_and_pascal() {
        for m in 1..=10u32 {
            for j in 0..=m as i64 {
                assert_eq!(q_binomial(m, j), q_binomial(m, m as i64 - j));
                let pascal = q_binomial(m - 1, j - 1)
                    .add_ref(&QPoly::q_power(j as u32).mul_ref(&q_binomial(m - 1, j)));
                assert_eq!(q_binomial(m, j), pascal);
            }
        }
    }

    #[test]
    fn chi_values() {
        assert!(chi(0).is_one());
        assert_eq!(chi(2), QRat::new(QPoly::one(), q_factorial(2)));
        assert_eq!(chi_prime(1), QRat::from_poly(p(&[(0, 1), (1, 1)])));
    }

    #[test]
    fn chi_prime_is_always_polynomial() {
        for m in 0..=12 {
            let c = chi_prime(m);
            assert!(c.is_polynomial(), "chi'_{} should reduce to a polynomial", m);
        }
    }

    #[test]
    fn pochhammer_in_var_matches_scalar_specialization() {
        // setting the variable to 1 recovers the plain q-Pochhammer value
        let s = q_pochhammer_in_var("z", &QRat::from_int(-1), 2, 3);
        assert_eq!(
            s.eval_var_one("z").as_constant().unwrap(),
            q_pochhammer(&QRat::from_int(-1), 2, 3)
        );
    }
}
