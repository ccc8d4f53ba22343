//! Exhaustive verification sweeps for the 3D R-operator: algebraic
//! properties, the tetrahedron equation with spectral parameters, and the
//! eigenvector identities.

use super::RCoeffs;
use crate::qscalar::{chi, chi_prime, q2_factorial, LaurentScalar, QPoly, QRat};
use crate::report::CheckReport;
use std::collections::BTreeMap;

/// All 6-tuples with every entry `<= max`.
pub(crate) fn tuples(max: u32) -> Vec<[u32; 6]> {
    let mut out = Vec::new();
    let mut t = [0u32; 6];
    loop {
        out.push(t);
        let mut pos = 5;
        loop {
            if t[pos] < max {
                t[pos] += 1;
                for u in t.iter_mut().skip(pos + 1) {
                    *u = 0;
                }
                break;
            }
            t[pos] = 0;
            if pos == 0 {
                return out;
            }
            pos -= 1;
        }
    }
}

fn triples(max: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Verify the defining properties of the constant 3D R-operator for all index
/// tuples bounded by `max_index`:
///
/// 1. conservation: `R^{abc}_{ijk} = 0` unless `a+b = i+j` and `b+c = j+k`;
/// 2. involution: `sum_x R^{abc}_x R^x_{ijk} = delta^{abc}_{ijk}`;
/// 3. reflection: `R^{abc}_{ijk} = R^{cba}_{kji}`;
/// 4. weight symmetry:
///    `(q^2)_a (q^2)_b (q^2)_c R^{abc}_{ijk} = (q^2)_i (q^2)_j (q^2)_k R^{ijk}_{abc}`.
pub fn check_r_properties(max_index: u32, src: &dyn RCoeffs) -> CheckReport {
    let mut report = CheckReport::new();

    for t in tuples(max_index) {
        let [a, b, c, i, j, k] = t;
        let v = src.coeff(a, b, c, i, j, k);

        report.tick();
        if (a + b != i + j || b + c != j + k) && !v.is_zero() {
            report.record(
                format!("conservation {:?}", t),
                "0".into(),
                v.to_string(),
            );
        }

        report.tick();
        let refl = src.coeff(c, b, a, k, j, i);
        if v != refl {
            report.record(format!("reflection {:?}", t), v.to_string(), refl.to_string());
        }

        report.tick();
        let lhs = q2_factorial(a)
            .mul_ref(&q2_factorial(b))
            .mul_ref(&q2_factorial(c))
            .mul_ref(&v);
        let rhs = q2_factorial(i)
            .mul_ref(&q2_factorial(j))
            .mul_ref(&q2_factorial(k))
            .mul_ref(&src.coeff(i, j, k, a, b, c));
        if lhs != rhs {
            report.record(format!("weight symmetry {:?}", t), lhs.to_string(), rhs.to_string());
        }
    }

    for abc in triples(max_index) {
        for ijk in triples(max_index) {
            let [a, b, c] = abc;
            let [i, j, k] = ijk;
            report.tick();
            // sums over x constrained by the conservation gradings are finite
            let mut acc = QPoly::zero();
            for x2 in 0..=(a + b).min(b + c) {
                let x1 = a + b - x2;
                let x3 = b + c - x2;
                acc = acc.add_ref(
                    &src.coeff(a, b, c, x1, x2, x3).mul_ref(&src.coeff(x1, x2, x3, i, j, k)),
                );
            }
            let expect = if abc == ijk { QPoly::one() } else { QPoly::zero() };
            if acc != expect {
                report.record(
                    format!("involution {:?} -> {:?}", ijk, abc),
                    expect.to_string(),
                    acc.to_string(),
                );
            }
        }
    }

    report.finish()
}

/// Sparse vector on a tensor power of Fock spaces with Laurent coefficients.
type SparseVec = BTreeMap<Vec<u32>, LaurentScalar>;

fn accumulate(vec: &mut SparseVec, state: Vec<u32>, value: LaurentScalar) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match vec.entry(state) {
        Entry::Occupied(mut e) => {
            let sum = e.get().add_ref(&value);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
        Entry::Vacant(e) => {
            e.insert(value);
        }
    }
}

/// One of the two 3-factor operators entering the tetrahedron equation.
#[derive(Clone, Copy)]
enum ROrS {
    R,
    S,
}

/// Apply `R(z)` or `S(z)` on factors `(p1, p2, p3)` of a sparse vector:
///
/// `R(z)|i,j,k> = sum z^{j-b} R^{abc}_{ijk} |a,b,c>` and
/// `S(z)|i,j,k> = sum z^{j-b} R^{bac}_{jik} |a,b,c>`,
///
/// with the sums finite by the conservation gradings.
fn apply(
    which: ROrS,
    vec: &SparseVec,
    pos: (usize, usize, usize),
    zarg: &LaurentScalar,
    src: &dyn RCoeffs,
) -> SparseVec {
    let mut out = SparseVec::new();
    for (state, coeff) in vec {
        let (i, j, k) = (state[pos.0], state[pos.1], state[pos.2]);
        for b in 0..=(i + j).min(j + k) {
            let a = i + j - b;
            let c = j + k - b;
            let rc = match which {
                ROrS::R => src.coeff(a, b, c, i, j, k),
                ROrS::S => src.coeff(b, a, c, j, i, k),
            };
            if rc.is_zero() {
                continue;
            }
            let zf = zarg.mono_pow(j as i64 - b as i64);
            let mut next = state.clone();
            next[pos.0] = a;
            next[pos.1] = b;
            next[pos.2] = c;
            accumulate(&mut out, next, coeff.mul_ref(&zf).scale(&QRat::from_poly(rc)));
        }
    }
    out
}

fn state_name(state: &[u32]) -> String {
    let parts: Vec<String> = state.iter().map(|m| m.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Verify the tetrahedron equation with spectral parameters on `F^{(x)6}`:
///
/// `S(z12)_126 S(z34)_346 R(z13)_135 R(z24)_245
///  = R(z24)_245 R(z13)_135 S(z34)_346 S(z12)_126`, `z_uv = z_u/z_v`,
///
/// as an identity of Laurent polynomials in the formal variables `z1..z4`
/// over `Z[q]`, for every in-state with total mode `<= max_total_mode` and
/// every reachable out-state. Intermediate sums are finite by the
/// conservation gradings, so there is no truncation anywhere.
pub fn check_tetrahedron(max_total_mode: u32, src: &dyn RCoeffs) -> CheckReport {
    let mut report = CheckReport::new();
    let z = |u: &str, v: &str| {
        LaurentScalar::monomial(QRat::one(), &[(u, 1), (v, -1)])
    };
    let z12 = z("z1", "z2");
    let z34 = z("z3", "z4");
    let z13 = z("z1", "z3");
    let z24 = z("z2", "z4");
    // factor positions, 0-indexed
    let p126 = (0, 1, 5);
    let p346 = (2, 3, 5);
    let p135 = (0, 2, 4);
    let p245 = (1, 3, 4);

    let mut in_states = Vec::new();
    collect_bounded(6, max_total_mode, &mut vec![], &mut in_states);

    for state in in_states {
        report.tick();
        let mut start = SparseVec::new();
        start.insert(state.clone(), LaurentScalar::one());

        // left side, rightmost operator first
        let lhs = apply(ROrS::R, &start, p245, &z24, src);
        let lhs = apply(ROrS::R, &lhs, p135, &z13, src);
        let lhs = apply(ROrS::S, &lhs, p346, &z34, src);
        let lhs = apply(ROrS::S, &lhs, p126, &z12, src);

        let rhs = apply(ROrS::S, &start, p126, &z12, src);
        let rhs = apply(ROrS::S, &rhs, p346, &z34, src);
        let rhs = apply(ROrS::R, &rhs, p135, &z13, src);
        let rhs = apply(ROrS::R, &rhs, p245, &z24, src);

        let mut outs: std::collections::BTreeSet<Vec<u32>> = lhs.keys().cloned().collect();
        outs.extend(rhs.keys().cloned());
        for out in outs {
            let l = lhs.get(&out).cloned().unwrap_or_else(LaurentScalar::zero);
            let r = rhs.get(&out).cloned().unwrap_or_else(LaurentScalar::zero);
            if l != r {
                let diff = l.sub_ref(&r);
                report.record(
                    format!("in {} out {}", state_name(&state), state_name(&out)),
                    format!("difference 0, lhs {}", l),
                    format!("difference {}, rhs {}", diff, r),
                );
            }
        }
    }

    report.finish()
}

fn collect_bounded(slots: usize, budget: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if acc.len() == slots {
        out.push(acc.clone());
        return;
    }
    for v in 0..=budget {
        acc.push(v);
        collect_bounded(slots, budget - v, acc, out);
        acc.pop();
    }
}

/// Verify the eigenvector identities of the constant R-operator and their
/// vertex-operator form, with all spectral parameters formal:
///
/// - `R (|chi(x)> (x) |chi(xy)> (x) |chi(y)>)` fixes the vector, component by
///   component, and dually for the bra vector (components `<= max_component`);
/// - `sum_{i,j} chi_i(lam) chi_j(mu) Shat^{ab}_{ij}(z) |chi(lam/(mu z))> =
///    chi_a(lam) chi_b(mu) |chi(lam/(mu z))>`;
/// - `sum_{a,b} chi'_a(lam) chi'_b(mu) <chi(lam z/mu)| Shat^{ab}_{ij}(z) =
///    chi'_i(lam) chi'_j(mu) <chi(lam z/mu)|`.
pub fn check_eigenvectors(max_component: u32, src: &dyn RCoeffs) -> CheckReport {
    let mut report = CheckReport::new();
    let x = |e: i64| LaurentScalar::monomial(QRat::one(), &[("x", e)]);
    let xy = |e: i64| LaurentScalar::monomial(QRat::one(), &[("x", e), ("y", e)]);
    let y = |e: i64| LaurentScalar::monomial(QRat::one(), &[("y", e)]);

    // ket eigenvector, component (a,b,c)
    for [a, b, c] in triples(max_component) {
        report.tick();
        let mut acc = LaurentScalar::zero();
        for j in 0..=(a + b).min(b + c) {
            let i = a + b - j;
            let k = b + c - j;
            let rc = src.coeff(a, b, c, i, j, k);
            if rc.is_zero() {
                continue;
            }
            let weight = chi(i).mul_ref(&chi(j)).mul_ref(&chi(k)).mul_ref(&QRat::from_poly(rc));
            acc = acc.add_ref(
                &x(i as i64).mul_ref(&xy(j as i64)).mul_ref(&y(k as i64)).scale(&weight),
            );
        }
        let expect = x(a as i64)
            .mul_ref(&xy(b as i64))
            .mul_ref(&y(c as i64))
            .scale(&chi(a).mul_ref(&chi(b)).mul_ref(&chi(c)));
        if acc != expect {
            report.record(
                format!("ket eigenvector ({a},{b},{c})"),
                expect.to_string(),
                acc.to_string(),
            );
        }
    }

    // bra eigenvector, component (i,j,k)
    for [i, j, k] in triples(max_component) {
        report.tick();
        let mut acc = LaurentScalar::zero();
        for b in 0..=(i + j).min(j + k) {
            let a = i + j - b;
            let c = j + k - b;
            let rc = src.coeff(i, j, k, a, b, c);
            if rc.is_zero() {
                continue;
            }
            let weight = chi(a).mul_ref(&chi(b)).mul_ref(&chi(c)).mul_ref(&QRat::from_poly(rc));
            acc = acc.add_ref(
                &x(a as i64).mul_ref(&xy(b as i64)).mul_ref(&y(c as i64)).scale(&weight),
            );
        }
        let expect = x(i as i64)
            .mul_ref(&xy(j as i64))
            .mul_ref(&y(k as i64))
            .scale(&chi(i).mul_ref(&chi(j)).mul_ref(&chi(k)));
        if acc != expect {
            report.record(
                format!("bra eigenvector ({i},{j},{k})"),
                expect.to_string(),
                acc.to_string(),
            );
        }
    }

    // vertex form on the ket side: fixed (a,b), output component m.
    // Shat^{ab}_{ij}(z)|k> = z^{j-b} sum_c R^{bac}_{jik} |c>, so the
    // m-component of the left side is
    // sum_{i,j,k} chi_i lam^i chi_j mu^j chi_k (lam/(mu z))^k z^{j-b} R^{bam}_{jik}
    // with j = a+b-i and k = a+m-i pinned by the gradings.
    let lam = |e: i64| LaurentScalar::monomial(QRat::one(), &[("lam", e)]);
    let mu = |e: i64| LaurentScalar::monomial(QRat::one(), &[("mu", e)]);
    let zv = |e: i64| LaurentScalar::monomial(QRat::one(), &[("z", e)]);
    let chi_arg = |m: u32, num: &LaurentScalar, den_pow: i64| {
        // chi_m * (lam/(mu z))^m style weights
        num.mono_pow(m as i64)
            .mul_ref(&mu(den_pow * m as i64))
            .mul_ref(&zv(den_pow * m as i64))
            .scale(&chi(m))
    };

    for a in 0..=max_component {
        for b in 0..=max_component {
            for m in 0..=max_component {
                report.tick();
                let mut acc = LaurentScalar::zero();
                for i in 0..=(a + b).min(a + m) {
                    let j = a + b - i;
                    let k = a + m - i;
                    let rc = src.coeff(b, a, m, j, i, k);
                    if rc.is_zero() {
                        continue;
                    }
                    let term = lam(i as i64)
                        .scale(&chi(i))
                        .mul_ref(&mu(j as i64).scale(&chi(j)))
                        .mul_ref(&chi_arg(k, &lam(1), -1))
                        .mul_ref(&zv(j as i64 - b as i64))
                        .scale(&QRat::from_poly(rc));
                    acc = acc.add_ref(&term);
                }
                let expect = lam(a as i64)
                    .scale(&chi(a))
                    .mul_ref(&mu(b as i64).scale(&chi(b)))
                    .mul_ref(&chi_arg(m, &lam(1), -1));
                if acc != expect {
                    report.record(
                        format!("ket vertex eigenrelation (a,b)=({a},{b}) component {m}"),
                        expect.to_string(),
                        acc.to_string(),
                    );
                }
            }
        }
    }

    // vertex form on the bra side: fixed (i,j), output component k.
    // <c|Shat^{ab}_{ij}(z) = z^{j-b} sum_k ((q^2)_c/(q^2)_k) R^{bac}_{jik} <k|
    for i in 0..=max_component {
        for j in 0..=max_component {
            for k in 0..=max_component {
                report.tick();
                let mut acc = LaurentScalar::zero();
                for a in 0..=(i + j).min(i + k) {
                    let b = i + j - a;
                    let c = i + k - a;
                    let rc = src.coeff(b, a, c, j, i, k);
                    if rc.is_zero() {
                        continue;
                    }
                    let metric = QRat::from_poly(q2_factorial(c))
                        .div_ref(&QRat::from_poly(q2_factorial(k)));
                    // chi_c * (lam z / mu)^c
                    let chi_c = lam(c as i64)
                        .mul_ref(&zv(c as i64))
                        .mul_ref(&mu(-(c as i64)))
                        .scale(&chi(c));
                    let term = lam(a as i64)
                        .scale(&chi_prime(a))
                        .mul_ref(&mu(b as i64).scale(&chi_prime(b)))
                        .mul_ref(&chi_c)
                        .mul_ref(&zv(j as i64 - b as i64))
                        .scale(&metric.mul_ref(&QRat::from_poly(rc)));
                    acc = acc.add_ref(&term);
                }
                let chi_k = lam(k as i64)
                    .mul_ref(&zv(k as i64))
                    .mul_ref(&mu(-(k as i64)))
                    .scale(&chi(k));
                let expect = lam(i as i64)
                    .scale(&chi_prime(i))
                    .mul_ref(&mu(j as i64).scale(&chi_prime(j)))
                    .mul_ref(&chi_k);
                if acc != expect {
                    report.record(
                        format!("bra vertex eigenrelation (i,j)=({i},{j}) component {k}"),
                        expect.to_string(),
                        acc.to_string(),
                    );
                }
            }
        }
    }

    report.finish()
}
