//! Verification sweeps for the layer-to-layer transfer matrices: the
//! intertwining relation, bilinear relations, and the q=0 limit of the grid.

use super::{bbt_element, t_fixed, vertex_order};
use crate::fock::{basis_of, FockOp, FockSpace, QMode};
use crate::qscalar::{LaurentScalar, QRat};
use crate::r3d::RCoeffs;
use crate::report::CheckReport;

/// All vectors of the given length with entries `<= max`.
fn boundary_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Componentwise splits `(u, v)` with `u + v = total`.
fn splits(total: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
    for &t in total {
        out = out
            .into_iter()
            .flat_map(|(u, v)| {
                (0..=t).map(move |e| {
                    let mut u2 = u.clone();
                    let mut v2 = v.clone();
                    u2.push(e);
                    v2.push(t - e);
                    (u2, v2)
                })
            })
            .collect();
    }
    out
}

/// Scalar matrix element of a chain of vertex operators on the single Fock
/// space carried by the auxiliary line. Each link `Shat^{A B}_{I J}(w)` acts
/// as `|g> -> w^{J-B} R^{B A c}_{J I g} |c>` with `c = I + g - A` pinned by
/// the gradings, so the chain is a product of single entries.
fn aux_chain_element(
    links: &[(u32, u32, u32, u32, LaurentScalar)], // (A, B, I, J, zarg), applied in order
    g_in: u32,
    g_out: u32,
    rsrc: &dyn RCoeffs,
) -> LaurentScalar {
    let mut value = LaurentScalar::one();
    let mut g = g_in as i64;
    for (a, b, i, j, zarg) in links {
        if a + b != i + j {
            return LaurentScalar::zero();
        }
        let c = *i as i64 + g - *a as i64;
        if c < 0 {
            return LaurentScalar::zero();
        }
        let rc = rsrc.coeff(*b, *a, c as u32, *j, *i, g as u32);
        if rc.is_zero() {
            return LaurentScalar::zero();
        }
        value = value
            .mul_ref(&zarg.mono_pow(*j as i64 - *b as i64))
            .mul_ref(&LaurentScalar::constant(QRat::from_poly(rc)));
        g = c;
    }
    if g == g_out as i64 {
        value
    } else {
        LaurentScalar::zero()
    }
}

/// Verify the intertwining relation between two fixed-boundary layer transfer
/// matrices and a chain of auxiliary vertex operators, as an identity of
/// operators on the m×n grid space (compared on the safe window), with the
/// four spectral parameters `x, x', y, y'` formal:
///
/// `sum_{a'',a''',b'',b'''} (S^{a_m a'_m}_{a''_m a'''_m}(x/x') ... )
///  (S^{b_n b'_n}_{b''_n b'''_n}(y/y') ... ) T(x/y)^{a'' b''}_{i j}
///  T(x'/y')^{a''' b'''}_{i' j'}`
/// `= sum_{i'',i''',j'',j'''} T(x'/y')^{a' b'}_{i''' j'''}
///  T(x/y)^{a b}_{i'' j''} (S^{j'' j'''}_{j j'}(y/y') ... )
///  (S^{i'' i'''}_{i i'}(x/x') ... )`,
///
/// the auxiliary factors evaluated between fixed modes `g_in -> g_out`.
#[allow(clippy::too_many_arguments)]
pub fn check_intertwining(
    m: usize,
    n: usize,
    a: &[u32],
    ap: &[u32],
    b: &[u32],
    bp: &[u32],
    i: &[u32],
    ip: &[u32],
    j: &[u32],
    jp: &[u32],
    g_in: u32,
    g_out: u32,
    cutoff: u32,
    rsrc: &dyn RCoeffs,
) -> CheckReport {
    let mut report = CheckReport::new();
    let space = FockSpace::generic(cutoff);
    let var = |name: &str| LaurentScalar::var(name);
    let ratio = |u: &str, v: &str| var(u).mul_ref(&var(v).mono_inv());
    let x_xp = ratio("x", "xp");
    let y_yp = ratio("y", "yp");
    let x_y = ratio("x", "y");
    let xp_yp = ratio("xp", "yp");

    let asum: Vec<u32> = a.iter().zip(ap).map(|(u, v)| u + v).collect();
    let bsum: Vec<u32> = b.iter().zip(bp).map(|(u, v)| u + v).collect();
    let isum: Vec<u32> = i.iter().zip(ip).map(|(u, v)| u + v).collect();
    let jsum: Vec<u32> = j.iter().zip(jp).map(|(u, v)| u + v).collect();

    let mut lhs = FockOp::zero(vec![cutoff; m * n]);
    for (app, appp) in splits(&asum) {
        for (bpp, bppp) in splits(&bsum) {
            // auxiliary chain, rightmost factor first: the b-links in
            // ascending column order, then the a-links in ascending row order
            let mut links = Vec::new();
            for t in 0..n {
                links.push((b[t], bp[t], bpp[t], bppp[t], y_yp.clone()));
            }
            for t in 0..m {
                links.push((a[t], ap[t], app[t], appp[t], x_xp.clone()));
            }
            let green = aux_chain_element(&links, g_in, g_out, rsrc);
            if green.is_zero() {
                continue;
            }
            let t1 = t_fixed(m, n, &app, &bpp, i, j, &x_y, &space);
            let t2 = t_fixed(m, n, &appp, &bppp, ip, jp, &xp_yp, &space);
            lhs = lhs.add_ref(&t1.compose(&t2).scale(&green));
        }
    }

    let mut rhs = FockOp::zero(vec![cutoff; m * n]);
    for (ipp, ippp) in splits(&isum) {
        for (jpp, jppp) in splits(&jsum) {
            let mut links = Vec::new();
            for t in 0..m {
                links.push((ipp[t], ippp[t], i[t], ip[t], x_xp.clone()));
            }
            for t in 0..n {
                links.push((jpp[t], jppp[t], j[t], jp[t], y_yp.clone()));
            }
            let green = aux_chain_element(&links, g_in, g_out, rsrc);
            if green.is_zero() {
                continue;
            }
            let t1 = t_fixed(m, n, ap, bp, &ippp, &jppp, &xp_yp, &space);
            let t2 = t_fixed(m, n, a, b, &ipp, &jpp, &x_y, &space);
            rhs = rhs.add_ref(&t1.compose(&t2).scale(&green));
        }
    }

    report.tick();
    for (out, inn) in lhs.diff_on_safe_window(&rhs) {
        report.record(
            format!("intertwining element out {:?} in {:?}", out, inn),
            lhs.entry(&out, &inn).to_string(),
            rhs.entry(&out, &inn).to_string(),
        );
    }
    report.finish()
}

/// Sweep `check_intertwining` over all boundary tuples with entries bounded
/// by `max_boundary` and auxiliary modes `<= max_boundary`, subject to the
/// conservation constraint that makes the sides nonzero.
pub fn check_intertwining_sweep(
    m: usize,
    n: usize,
    max_boundary: u32,
    cutoff: u32,
    rsrc: &dyn RCoeffs,
) -> CheckReport {
    let mut report = CheckReport::new();
    let rows = boundary_vectors(m, max_boundary);
    let cols = boundary_vectors(n, max_boundary);
    for a in &rows {
        for ap in &rows {
            for b in &cols {
                for bp in &cols {
                    for i in &rows {
                        for ip in &rows {
                            for j in &cols {
                                for jp in &cols {
                                    // both T factors need matching flux
                                    let fl = |u: &[u32]| u.iter().sum::<u32>();
                                    if fl(a) + fl(ap) + fl(b) + fl(bp)
                                        != fl(i) + fl(ip) + fl(j) + fl(jp)
                                    {
                                        continue;
                                    }
                                    for g_in in 0..=max_boundary {
                                        for g_out in 0..=max_boundary {
                                            let sub = check_intertwining(
                                                m, n, a, ap, b, bp, i, ip, j, jp, g_in, g_out,
                                                cutoff, rsrc,
                                            );
                                            report.merge(sub);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.finish()
}

/// Verify the bilinear relation
///
/// `sum_{b+b'=s, i+i'=r} x^{|b|+|i|} y^{|b'|+|i'|} T(x)^b_i T(y)^{b'}_{i'}
///  = (x <-> y)`
///
/// element-wise on the graded window `|out|, |in| <= window_total`. For each
/// element the intermediate-state sum is finite: the left factor's bottom
/// labels force `sum_r mid[r][c] <= b_c + sum_r out[r][c]` per column, so
/// both sides are exact Laurent polynomials in `x, y`.
pub fn check_bilinear(
    m: usize,
    n: usize,
    s: &[u32],
    r: &[u32],
    window_total: u32,
    rsrc: &dyn RCoeffs,
) -> CheckReport {
    let mut report = CheckReport::new();
    let max_label = 2 * (window_total + s.iter().sum::<u32>() + r.iter().sum::<u32>()) + 4;
    let x = LaurentScalar::var("x");
    let y = LaurentScalar::var("y");

    let states: Vec<Vec<u32>> = basis_of(&vec![window_total; m * n])
        .into_iter()
        .filter(|v| v.iter().sum::<u32>() <= window_total)
        .collect();
    let order = vertex_order(m, n);

    let product_element = |out: &[u32],
                           inn: &[u32],
                           first: &LaurentScalar,
                           second: &LaurentScalar|
     -> LaurentScalar {
        let mut acc = LaurentScalar::zero();
        for (b, bq) in splits(s) {
            for (i, iq) in splits(r) {
                // per-column bound on the intermediate state from the left
                // factor's bottom labels
                let mut colmax = vec![0u32; n];
                for (c0, cm) in colmax.iter_mut().enumerate() {
                    *cm = b[c0] + (0..m).map(|r0| {
                        let pos = order.iter().position(|&(rr, cc)| rr == r0 + 1 && cc == c0 + 1).unwrap();
                        out[pos]
                    }).sum::<u32>();
                }
                let mut mid_shape = vec![0u32; m * n];
                for (pos, &(._, cc)) in order.iter().enumerate() {
                    mid_shape[pos] = colmax[cc - 1];
                }
                for mid in basis_of(&mid_shape) {
                    let left = bbt_element(
                        m, n, &b, &i, out, &mid, first, QMode::Generic, rsrc, max_label,
                    )
                    .expect("pinned labels within bound");
                    if left.is_zero() {
                        continue;
                    }
                    let right = bbt_element(
                        m, n, &bq, &iq, &mid, inn, second, QMode::Generic, rsrc, max_label,
                    )
                    .expect("pinned labels within bound");
                    if right.is_zero() {
                        continue;
                    }
                    let weight = first
                        .mono_pow((b.iter().sum::<u32>() + i.iter().sum::<u32>()) as i64)
                        .mul_ref(
                            &second.mono_pow(
                                (bq.iter().sum::<u32>() + iq.iter().sum::<u32>()) as i64,
                            ),
                        );
                    acc = acc.add_ref(&left.mul_ref(&right).mul_ref(&weight));
                }
            }
        }
        acc
    };

    for out in &states {
        for inn in &states {
            report.tick();
            let lhs = product_element(out, inn, &x, &y);
            let rhs = product_element(out, inn, &y, &x);
            if lhs != rhs {
                report.record(
                    format!("bilinear element out {:?} in {:?}", out, inn),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
    }
    report.finish()
}

/// Verify that the generic-q grid specializes at q=0 to the frozen-vertex
/// grid, entrywise with `z` tracked, sweeping all boundaries with entries
/// `<= max_boundary` on the m×n lattice.
pub fn check_q0_grid(m: usize, n: usize, max_boundary: u32, cutoff: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let gen = FockSpace::generic(cutoff);
    let zero = FockSpace::zero(cutoff);
    let z = LaurentScalar::var("z");
    let rows = boundary_vectors(m, max_boundary);
    let cols = boundary_vectors(n, max_boundary);
    for a in &rows {
        for b in &cols {
            for i in &rows {
                for j in &cols {
                    if a.iter().sum::<u32>() + b.iter().sum::<u32>()
                        != i.iter().sum::<u32>() + j.iter().sum::<u32>()
                    {
                        continue;
                    }
                    report.tick();
                    let generic = t_fixed(m, n, a, b, i, j, &z, &gen);
                    let frozen = t_fixed(m, n, a, b, i, j, &z, &zero);
                    let Some(specialized) = generic.eval_q0() else {
                        report.record(
                            format!("q0 grid a{:?} b{:?} i{:?} j{:?}", a, b, i, j),
                            "finite q=0 limit".into(),
                            "pole at q=0".into(),
                        );
                        continue;
                    };
                    let mut frozen = frozen;
                    frozen.set_raise_bound(specialized.raise_bound().to_vec());
                    for (out, inn) in specialized.diff_on_safe_window(&frozen) {
                        report.record(
                            format!(
                                "q0 grid a{:?} b{:?} i{:?} j{:?} element out {:?} in {:?}",
                                a, b, i, j, out, inn
                            ),
                            frozen.entry(&out, &inn).to_string(),
                            specialized.entry(&out, &inn).to_string(),
                        );
                    }
                }
            }
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::r3d::StdRCoeffs;

    #[test]
    fn intertwining_single_vertex() {
        let rsrc = StdRCoeffs::new();
        let report = check_intertwining_sweep(1, 1, 1, 5, &rsrc);
        assert!(report.passed(), "failures: {:?}", report.failures.first());
        assert!(report.checked > 0);
    }

    #[test]
    fn intertwining_trivial_boundaries() {
        let rsrc = StdRCoeffs::new();
        let zeros1 = vec![0u32; 1];
        let zeros2 = vec![0u32; 2];
        let report = check_intertwining(
            1, 2, &zeros1, &zeros1, &zeros2, &zeros2, &zeros1, &zeros1, &zeros2, &zeros2, 0, 0,
            4, &rsrc,
        );
        assert!(report.passed(), "failures: {:?}", report.failures.first());
    }

    #[test]
    fn bilinear_window_zero_is_trivial() {
        let rsrc = StdRCoeffs::new();
        let report = check_bilinear(1, 2, &[0, 0], &[0], 0, &rsrc);
        assert!(report.passed(), "failures: {:?}", report.failures.first());
    }

    #[test]
    fn commuting_family_on_small_window() {
        let rsrc = StdRCoeffs::new();
        let report = check_bilinear(1, 2, &[0, 0], &[0], 2, &rsrc);
        assert!(report.passed(), "failures: {:?}", report.failures.first());
    }

    #[test]
    fn q0_grid_single_vertex() {
        let report = check_q0_grid(1, 1, 2, 5);
        assert!(report.passed(), "failures: {:?}", report.failures.first());
    }
}
