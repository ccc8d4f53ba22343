//! Multivariate Laurent polynomials in named spectral variables over `QRat`.

use super::qrat::QRat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in a set of named variables (`z`, `x`, `y`, `z1`..`z4`,
/// ...) with `QRat` coefficients. The variable list is sorted and contains
/// only variables that actually occur; exponents may be negative. Zero
/// coefficients are never stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, QRat>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentScalar::constant(QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LaurentScalar { vars: Vec::new(), terms }
    }

    pub fn from_int(c: i64) -> Self {
        LaurentScalar::constant(QRat::from_int(c))
    }

    /// The single variable `name`.
    pub fn var(name: &str) -> Self {
        LaurentScalar::monomial(QRat::one(), &[(name, 1)])
    }

    /// `c * prod_i name_i^{e_i}`.
    pub fn monomial(c: QRat, powers: &[(&str, i64)]) -> Self {
        if c.is_zero() {
            return LaurentScalar::zero();
        }
        let mut map: BTreeMap<String, i64> = BTreeMap::new();
        for (name, e) in powers {
            *map.entry((*name).to_string()).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        let vars: Vec<String> = map.keys().cloned().collect();
        let exps: Vec<i64> = map.values().copied().collect();
        let mut terms = BTreeMap::new();
        terms.insert(exps, c);
        LaurentScalar { vars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.vars.is_empty()
            && self.terms.get(&Vec::new()).map(|c| c.is_one()).unwrap_or(false)
    }

    /// The constant coefficient when this scalar has no variable dependence.
    pub fn as_constant(&self) -> Option<QRat> {
        if self.is_zero() {
            return Some(QRat::zero());
        }
        if self.vars.is_empty() {
            return self.terms.get(&Vec::new()).cloned();
        }
        None
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QRat)> {
        self.terms.iter()
    }

    /// Remove variables whose exponent is zero in every term.
    fn normalize(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            return LaurentScalar::zero();
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for exps in self.terms.keys() {
            for (i, e) in exps.iter().enumerate() {
                if *e != 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|u| *u) {
            return self;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, u)| **u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(exps, c)| {
                let e: Vec<i64> =
                    exps.into_iter().zip(&used).filter(|(_, u)| **u).map(|(e, _)| e).collect();
                (e, c)
            })
            .collect();
        LaurentScalar { vars, terms }
    }

    /// Merge the variable lists of two scalars and remap both term maps onto
    /// the common list.
    fn unify(a: &LaurentScalar, b: &LaurentScalar) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut vars: Vec<String> = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        let pos_a: Vec<usize> =
            a.vars.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
        let pos_b: Vec<usize> =
            b.vars.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
        (vars, pos_a, pos_b)
    }

    fn remap(exps: &[i64], pos: &[usize], width: usize) -> Vec<i64> {
        let mut out = vec![0i64; width];
        for (e, p) in exps.iter().zip(pos) {
            out[*p] = *e;
        }
        out
    }

    pub fn add_ref(&self, other: &LaurentScalar) -> LaurentScalar {
        let (vars, pa, pb) = LaurentScalar::unify(self, other);
        let w = vars.len();
        let mut terms: BTreeMap<Vec<i64>, QRat> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let key = LaurentScalar::remap(exps, &pa, w);
            let entry = terms.entry(key).or_insert_with(QRat::zero);
            *entry = entry.add_ref(c);
        }
        for (exps, c) in &other.terms {
            let key = LaurentScalar::remap(exps, &pb, w);
            let entry = terms.entry(key).or_insert_with(QRat::zero);
            *entry = entry.add_ref(c);
        }
        LaurentScalar { vars, terms }.normalize()
    }

    pub fn sub_ref(&self, other: &LaurentScalar) -> LaurentScalar {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> LaurentScalar {
        LaurentScalar {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn mul_ref(&self, other: &LaurentScalar) -> LaurentScalar {
        let (vars, pa, pb) = LaurentScalar::unify(self, other);
        let w = vars.len();
        let mut terms: BTreeMap<Vec<i64>, QRat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let k1 = LaurentScalar::remap(e1, &pa, w);
            for (e2, c2) in &other.terms {
                let k2 = LaurentScalar::remap(e2, &pb, w);
                let key: Vec<i64> = k1.iter().zip(&k2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(key).or_insert_with(QRat::zero);
                *entry = entry.add_ref(&c1.mul_ref(c2));
            }
        }
        LaurentScalar { vars, terms }.normalize()
    }

    pub fn scale(&self, c: &QRat) -> LaurentScalar {
        if c.is_zero() {
            return LaurentScalar::zero();
        }
        LaurentScalar {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k.mul_ref(c))).collect(),
        }
    }

    /// Integer power of a scalar that is a single monomial (negative powers
    /// allowed). Panics when the scalar has more than one term.
    pub fn mono_pow(&self, k: i64) -> LaurentScalar {
        if k == 0 {
            return LaurentScalar::one();
        }
        if self.is_zero() {
            assert!(k > 0, "negative power of zero");
            return LaurentScalar::zero();
        }
        assert!(self.terms.len() == 1, "mono_pow on a non-monomial scalar");
        let (exps, c) = self.terms.iter().next().unwrap();
        LaurentScalar {
            vars: self.vars.clone(),
            terms: std::iter::once((exps.iter().map(|e| e * k).collect(), c.pow(k))).collect(),
        }
        .normalize()
    }

    /// Inverse of a single-monomial scalar.
    pub fn mono_inv(&self) -> LaurentScalar {
        self.mono_pow(-1)
    }

    /// Substitute `name = 1`.
    pub fn eval_var_one(&self, name: &str) -> LaurentScalar {
        let Some(idx) = self.vars.iter().position(|v| v == name) else {
            return self.clone();
        };
        let vars: Vec<String> =
            self.vars.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, v)| v.clone()).collect();
        let mut terms: BTreeMap<Vec<i64>, QRat> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let key: Vec<i64> =
                exps.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, e)| *e).collect();
            let entry = terms.entry(key).or_insert_with(QRat::zero);
            *entry = entry.add_ref(c);
        }
        LaurentScalar { vars, terms }.normalize()
    }

    /// The Euler operator `name * d/d name`: multiplies each term by its
    /// exponent in `name`.
    pub fn euler_derivative(&self, name: &str) -> LaurentScalar {
        let Some(idx) = self.vars.iter().position(|v| v == name) else {
            return LaurentScalar::zero();
        };
        let terms: BTreeMap<Vec<i64>, QRat> = self
            .terms
            .iter()
            .filter(|(exps, _)| exps[idx] != 0)
            .map(|(exps, c)| (exps.clone(), c.mul_ref(&QRat::from_int(exps[idx]))))
            .collect();
        LaurentScalar { vars: self.vars.clone(), terms }.normalize()
    }

    /// Exchange two variable names.
    pub fn swap_vars(&self, a: &str, b: &str) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (exps, c) in &self.terms {
            let powers: Vec<(&str, i64)> = self
                .vars
                .iter()
                .zip(exps)
                .map(|(v, e)| {
                    let name = if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v.as_str()
                    };
                    (name, *e)
                })
                .collect();
            out = out.add_ref(&LaurentScalar::monomial(c.clone(), &powers));
        }
        out
    }

    /// Coefficient-wise evaluation at `q = 0`; `None` if any coefficient has
    /// a pole there.
    pub fn eval_q0(&self) -> Option<LaurentScalar> {
        let mut out = LaurentScalar::zero();
        for (exps, c) in &self.terms {
            let c0 = c.eval_q0()?;
            if c0.is_zero() {
                continue;
            }
            let powers: Vec<(&str, i64)> =
                self.vars.iter().zip(exps).map(|(v, e)| (v.as_str(), *e)).collect();
            out = out.add_ref(&LaurentScalar::monomial(c0, &powers));
        }
        Some(out)
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.add_ref(rhs)
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        self.neg_ref()
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (v, e) in self.vars.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", v)?,
                    _ => write!(f, "*{}^{}", v, e)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> LaurentScalar {
        LaurentScalar::var("z")
    }

    #[test]
    fn unused_variables_are_dropped() {
        let a = LaurentScalar::monomial(QRat::one(), &[("x", 1), ("y", 0)]);
        assert_eq!(a.vars(), &["x".to_string()]);
        let b = &LaurentScalar::monomial(QRat::one(), &[("x", 1), ("y", 2)])
            * &LaurentScalar::monomial(QRat::one(), &[("y", -2)]);
        assert_eq!(b, LaurentScalar::var("x"));
    }

    #[test]
    fn monomial_powers_and_inverse() {
        let m = LaurentScalar::monomial(QRat::from_int(1), &[("z1", 1), ("z3", -1)]);
        assert!(m.mul_ref(&m.mono_inv()).is_one());
        assert_eq!(m.mono_pow(3).mono_pow(-1), m.mono_pow(-3));
    }

    #[test]
    fn euler_derivative_weights_by_exponent() {
        // z*d/dz (z^2 + 3 + z^-1) = 2 z^2 - z^-1
        let s = &(&z().mono_pow(2) + &LaurentScalar::from_int(3)) + &z().mono_pow(-1);
        let d = s.euler_derivative("z");
        let expect = &z().mono_pow(2).scale(&QRat::from_int(2)) + &z().mono_pow(-1).neg_ref();
        assert_eq!(d, expect);
    }

    #[test]
    fn var_swap_and_eval_one() {
        let s = &LaurentScalar::monomial(QRat::from_int(2), &[("x", 2), ("y", 1)])
            + &LaurentScalar::var("y");
        let swapped = s.swap_vars("x", "y");
        let expect = &LaurentScalar::monomial(QRat::from_int(2), &[("y", 2), ("x", 1)])
            + &LaurentScalar::var("x");
        assert_eq!(swapped, expect);
        assert_eq!(
            s.eval_var_one("x"),
            LaurentScalar::monomial(QRat::from_int(3), &[("y", 1)])
        );
    }
}
