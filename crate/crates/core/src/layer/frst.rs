//! The coefficients `f_{r,s,t}` arising from products of boundary-summed
//! transfer matrices on the 1×2 lattice, and their symmetry identities.

use crate::qscalar::{chi, q_pochhammer_in_var, QPoly, QRat};
use crate::report::CheckReport;

/// `f_{r,s,t} = sum q^{j1 j2'} / ((q)_{j1} (q)_{j2} (q)_{j1'} (q)_{j2'})`
/// over `j1 + j2 = r`, `j1' + j2' = s`, `j1 + j1' = t`; zero when `t > r + s`.
///
/// Negative arguments give zero (empty sum), which keeps the recurrence-style
/// identities uniform.
pub fn f_rst(r: i64, s: i64, t: i64) -> QRat {
    if r < 0 || s < 0 || t < 0 || t > r + s {
        return QRat::zero();
    }
    let (r, s, t) = (r as u32, s as u32, t as u32);
    let mut acc = QRat::zero();
    let j1_min = t.saturating_sub(s);
    let j1_max = r.min(t);
    for j1 in j1_min..=j1_max {
        let j1p = t - j1;
        let j2 = r - j1;
        let j2p = s - j1p;
        let term = QRat::q_power((j1 * j2p) as i64)
            .mul_ref(&chi(j1))
            .mul_ref(&chi(j2))
            .mul_ref(&chi(j1p))
            .mul_ref(&chi(j2p));
        acc = acc.add_ref(&term);
    }
    acc
}

/// Verify, for all `r, s, t <= max`:
///
/// 1. `f_{r,s,t} = f_{s,r,t}`;
/// 2. `q^s f_{r-1,s,t} + f_{r,s-1,t} = (r <-> s)`;
/// 3. `(1-q^s) f_{r-1,s,t} = (r <-> s)`;
/// 4. the generating identity `(-z;q)_r (-z q^r;q)_s = (-z;q)_s (-z q^s;q)_r`
///    as polynomials in `z` and `q`, which implies the symmetry.
pub fn check_f_symmetry(max: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let max = max as i64;
    for r in 0..=max {
        for s in 0..=max {
            for t in 0..=max {
                report.tick();
                let lhs = f_rst(r, s, t);
                let rhs = f_rst(s, r, t);
                if lhs != rhs {
                    report.record(
                        format!("f symmetry (r,s,t)=({r},{s},{t})"),
                        lhs.to_string(),
                        rhs.to_string(),
                    );
                }

                report.tick();
                let lhs = QRat::q_power(s)
                    .mul_ref(&f_rst(r - 1, s, t))
                    .add_ref(&f_rst(r, s - 1, t));
                let rhs = QRat::q_power(r)
                    .mul_ref(&f_rst(s - 1, r, t))
                    .add_ref(&f_rst(s, r - 1, t));
                if lhs != rhs {
                    report.record(
                        format!("shifted f identity (r,s,t)=({r},{s},{t})"),
                        lhs.to_string(),
                        rhs.to_string(),
                    );
                }

                report.tick();
                let one_minus = |e: i64| {
                    if e <= 0 {
                        QRat::zero()
                    } else {
                        QRat::from_poly(QPoly::one().sub_ref(&QPoly::q_power(e as u32)))
                    }
                };
                let lhs = one_minus(s).mul_ref(&f_rst(r - 1, s, t));
                let rhs = one_minus(r).mul_ref(&f_rst(s - 1, r, t));
                if lhs != rhs {
                    report.record(
                        format!("reduced f identity (r,s,t)=({r},{s},{t})"),
                        lhs.to_string(),
                        rhs.to_string(),
                    );
                }
            }

            report.tick();
            let minus_one = QRat::from_int(-1);
            let lhs = q_pochhammer_in_var("z", &minus_one, 0, r as u32)
                .mul_ref(&q_pochhammer_in_var("z", &minus_one, r, s as u32));
            let rhs = q_pochhammer_in_var("z", &minus_one, 0, s as u32)
                .mul_ref(&q_pochhammer_in_var("z", &minus_one, s, r as u32));
            if lhs != rhs {
                report.record(
                    format!("generating identity (r,s)=({r},{s})"),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::q_factorial;

    #[test]
    fn base_values() {
        assert!(f_rst(0, 0, 0).is_one());
        assert!(f_rst(2, 1, 4).is_zero());
        // two-term sum: f_{1,1,1} = (1+q)/(1-q)^2
        let expect = QRat::new(
            QPoly::one().add_ref(&QPoly::q_power(1)),
            q_factorial(1).mul_ref(&q_factorial(1)),
        );
        assert_eq!(f_rst(1, 1, 1), expect);
        // cross-check by coefficient extraction: (q)_1 (q)_1 f_{1,1,1} equals
        // the z-coefficient of (-z;q)_1 (-z q;q)_1 = (1+z)(1+zq), namely 1+q
        let weighted = f_rst(1, 1, 1)
            .mul_ref(&QRat::from_poly(q_factorial(1)))
            .mul_ref(&QRat::from_poly(q_factorial(1)));
        assert_eq!(weighted, QRat::from_poly(QPoly::one().add_ref(&QPoly::q_power(1))));
    }

    #[test]
    fn symmetries_up_to_four() {
        let report = check_f_symmetry(4);
        assert!(report.passed(), "failures: {:?}", report.failures);
    }
}
