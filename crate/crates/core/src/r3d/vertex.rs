//! Operator-valued vertices of the 3D lattice model.

use crate::fock::{FockOp, FockSpace};
use crate::qscalar::{q2_binomial, LaurentScalar, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    RHat,
    SHat,
}

/// A vertex operator with fixed boundary labels `(a, b, i, j)` acting on one
/// Fock factor, carrying its spectral monomial `z^{j-b}`.
#[derive(Clone, Debug)]
pub struct VertexOp {
    pub kind: VertexKind,
    pub a: u32,
    pub b: u32,
    pub i: u32,
    pub j: u32,
    pub body: FockOp,
}

/// The operator
///
/// `Rhat^{ab}_{ij}(z) = delta^{a+b}_{i+j} z^{j-b} sum_{lambda+mu=b} (-1)^lambda
///  q^{lambda + mu^2 - i b} [i choose mu]_{q^2} [j choose lambda]_{q^2}
///  (a-)^mu (a+)^{j-lambda} k^{i+lambda-mu}`
///
/// on a generic-mode truncated space. `zarg` is the spectral parameter as a
/// single Laurent monomial (so `z`, `z1/z3`, or a constant all work). Columns
/// `|k>` with `k <= cutoff - j` are exact; the recorded raise bound is `j`.
pub fn vertex_op(a: u32, b: u32, i: u32, j: u32, zarg: &LaurentScalar, space: &FockSpace) -> VertexOp {
    let mut body = FockOp::zero(vec![space.cutoff]);
    if a + b == i + j {
        let z_pow = zarg.mono_pow(j as i64 - b as i64);
        let lambda_min = b.saturating_sub(i);
        let lambda_max = b.min(j);
        for lambda in lambda_min..=lambda_max {
            let mu = b - lambda;
            let (ii, bb, ll, mm) = (i as i64, b as i64, lambda as i64, mu as i64);
            let mut coeff = QRat::q_power(ll + mm * mm - ii * bb)
                .mul_ref(&QRat::from_poly(q2_binomial(i, mu as i64)))
                .mul_ref(&QRat::from_poly(q2_binomial(j, lambda as i64)));
            if lambda % 2 == 1 {
                coeff = coeff.neg_ref();
            }
            // word (a-)^mu (a+)^{j-lambda} k^{i+lambda-mu}, applied right to left
            let mut word = FockOp::identity(vec![space.cutoff]);
            for _ in 0..(i + lambda - mu) {
                word = FockOp::generator(crate::fock::Generator::K, space).compose(&word);
            }
            for _ in 0..(j - lambda) {
                word = FockOp::generator(crate::fock::Generator::APlus, space).compose(&word);
            }
            for _ in 0..mu {
                word = FockOp::generator(crate::fock::Generator::AMinus, space).compose(&word);
            }
            body = body.add_ref(&word.scale(&z_pow.scale(&coeff)));
        }
    }
    body.set_raise_bound(vec![j.min(space.cutoff + 1)]);
    VertexOp { kind: VertexKind::RHat, a, b, i, j, body }
}

/// `Shat^{ab}_{ij}(z) = Rhat^{ba}_{ji}(z^{-1})` entrywise.
pub fn s_vertex_op(a: u32, b: u32, i: u32, j: u32, zarg: &LaurentScalar, space: &FockSpace) -> VertexOp {
    let mut v = vertex_op(b, a, j, i, &zarg.mono_inv(), space);
    v.kind = VertexKind::SHat;
    v.a = a;
    v.b = b;
    v.i = i;
    v.j = j;
    v
}
