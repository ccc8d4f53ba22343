//! Layer-to-layer transfer matrices on the m×n lattice.
//!
//! `t_fixed` contracts the grid with all four boundaries fixed, summing the
//! finitely many internal edge configurations into a tensor-product operator.
//! `bbT_element` computes single matrix elements of the boundary-summed
//! transfer matrix: for a fixed element every vertex changes its Fock mode by
//! its bottom-in minus top-out edge label, which pins every edge of the grid,
//! so each element is a finite closed-form product.

mod checks;
mod frst;

pub use checks::{check_bilinear, check_intertwining, check_q0_grid};
pub use frst::{check_f_symmetry, f_rst};

use crate::fock::{FockOp, FockSpace, QMode};
use crate::qscalar::{chi, chi_prime, LaurentScalar, QRat};
use crate::r3d::{r_coeff_q0, vertex_op, RCoeffs};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayerError {
    /// A pinned edge label exceeded the configured exploration bound. The
    /// grading pin makes every boundary sum finite, so this fires only when
    /// the caller's bound is genuinely too small for the requested element.
    #[error("pinned edge label {label} exceeds the configured bound {bound}")]
    UnboundedSum { label: u32, bound: u32 },
}

/// Grid vertices `(r, c)` (row from top, column from left) in the canonical
/// tensor order: anti-diagonals of the bottom-right corner first. In
/// bottom/right coordinates `(i, j) = (m+1-r, n+1-c)` the order is by
/// ascending `i+j`, descending `i`.
pub fn vertex_order(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (1..=m)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .collect();
    v.sort_by_key(|&(r, c)| (std::cmp::Reverse(r + c), r));
    v
}

/// The q=0 vertex `delta^{a+b}_{i+j} theta(a>=j) (a+)^j k^{theta(a>j)} (a-)^b`
/// times `z^{j-b}`, as a matrix on a zero-mode space.
pub fn frozen_vertex(a: u32, b: u32, i: u32, j: u32, zarg: &LaurentScalar, space: &FockSpace) -> FockOp {
    if a + b != i + j || a < j {
        return FockOp::zero(vec![space.cutoff]);
    }
    let mut op = FockOp::word(j, a > j, b, space);
    op = op.scale(&zarg.mono_pow(j as i64 - b as i64));
    op.set_raise_bound(vec![j.min(space.cutoff + 1)]);
    op
}

/// Entry of the q=0 vertex between Fock modes `inn -> out`, with its
/// `z`-monomial.
fn frozen_vertex_entry(
    a: u32,
    b: u32,
    i: u32,
    j: u32,
    out: u32,
    inn: u32,
    zarg: &LaurentScalar,
) -> LaurentScalar {
    if r_coeff_q0(a, b, out, i, j, inn) {
        zarg.mono_pow(j as i64 - b as i64)
    } else {
        LaurentScalar::zero()
    }
}

/// Enumerates edge configurations of the fixed-boundary grid. Rows are
/// processed bottom to top, each row left to right; at every vertex the top
/// output is the free choice (forced to the boundary on the top row) and the
/// right output follows from conservation. Internal edges are automatically
/// bounded by the total boundary flux.
struct GridConfigs<'a> {
    m: usize,
    n: usize,
    a: &'a [u32],
    b: &'a [u32],
    i: &'a [u32],
    /// per-vertex `(a_out, b_out, i_in, j_in)`, indexed `(r-1)*n + (c-1)`
    edges: Vec<(u32, u32, u32, u32)>,
    /// current top output of each column
    tops: Vec<u32>,
    configs: Vec<Vec<(u32, u32, u32, u32)>>,
}

impl<'a> GridConfigs<'a> {
    fn run(m: usize, n: usize, a: &'a [u32], b: &'a [u32], i: &'a [u32], j: &[u32]) -> Vec<Vec<(u32, u32, u32, u32)>> {
        let mut g = GridConfigs {
            m,
            n,
            a,
            b,
            i,
            edges: vec![(0, 0, 0, 0); m * n],
            tops: j.to_vec(),
            configs: Vec::new(),
        };
        g.row(m, 1, i[m - 1]);
        g.configs
    }

    fn row(&mut self, r: usize, c: usize, left: u32) {
        if c > self.n {
            if left == self.a[r - 1] {
                if r == 1 {
                    self.configs.push(self.edges.clone());
                } else {
                    self.row(r - 1, 1, self.i[r - 2]);
                }
            }
            return;
        }
        let bottom = self.tops[c - 1];
        let total = left + bottom;
        let (lo, hi) = if r == 1 {
            (self.b[c - 1], self.b[c - 1])
        } else {
            (0, total)
        };
        for top in lo..=hi {
            if top > total {
                continue;
            }
            let aout = total - top;
            self.edges[(r - 1) * self.n + (c - 1)] = (aout, top, left, bottom);
            self.tops[c - 1] = top;
            self.row(r, c + 1, aout);
            self.tops[c - 1] = bottom;
        }
    }
}

/// Fixed-boundary layer transfer matrix: the sum over internal edge
/// configurations of the tensor product of vertex operators, in the canonical
/// vertex order. `a`/`i` are the right/left row boundaries (length m, top to
/// bottom), `b`/`j` the top/bottom column boundaries (length n, left to
/// right). Vanishes unless `|a| + |b| = |i| + |j|`.
#[allow(clippy::too_many_arguments)]
pub fn t_fixed(
    m: usize,
    n: usize,
    a: &[u32],
    b: &[u32],
    i: &[u32],
    j: &[u32],
    zarg: &LaurentScalar,
    space: &FockSpace,
) -> FockOp {
    assert_eq!(a.len(), m);
    assert_eq!(i.len(), m);
    assert_eq!(b.len(), n);
    assert_eq!(j.len(), n);
    let order = vertex_order(m, n);
    let mut result = FockOp::zero(vec![space.cutoff; m * n]);
    if a.iter().sum::<u32>() + b.iter().sum::<u32>() != i.iter().sum::<u32>() + j.iter().sum::<u32>()
    {
        return result;
    }
    for config in GridConfigs::run(m, n, a, b, i, j) {
        let bodies: Vec<FockOp> = order
            .iter()
            .map(|&(rr, cc)| {
                let (ao, bo, li, ji) = config[(rr - 1) * n + (cc - 1)];
                match space.mode {
                    QMode::Generic => vertex_op(ao, bo, li, ji, zarg, space).body,
                    QMode::Zero => frozen_vertex(ao, bo, li, ji, zarg, space),
                }
            })
            .collect();
        result = result.add_ref(&FockOp::tensor(&bodies));
    }
    result
}

/// Matrix element `<out| T(z)^b_i |in>` of the boundary-summed layer transfer
/// matrix. The right and bottom boundary labels are summed in the definition,
/// but for a fixed element every vertex changes its Fock mode by exactly
/// `j_in - b_out`, which pins all labels; the element is a single product (or
/// zero). `max_label` guards the pinned labels.
#[allow(clippy::too_many_arguments)]
pub fn bbt_element(
    m: usize,
    n: usize,
    b: &[u32],
    i: &[u32],
    out: &[u32],
    inn: &[u32],
    zarg: &LaurentScalar,
    mode: QMode,
    rsrc: &dyn RCoeffs,
    max_label: u32,
) -> Result<LaurentScalar, LayerError> {
    assert_eq!(b.len(), n);
    assert_eq!(i.len(), m);
    assert_eq!(out.len(), m * n);
    assert_eq!(inn.len(), m * n);
    let order = vertex_order(m, n);
    // mode change per vertex, indexed (r-1, c-1)
    let mut d = vec![0i64; m * n];
    for (pos, &(r, c)) in order.iter().enumerate() {
        d[(r - 1) * n + (c - 1)] = out[pos] as i64 - inn[pos] as i64;
    }
    let guard = |label: i64| -> Result<u32, LayerError> {
        if label > max_label as i64 {
            Err(LayerError::UnboundedSum { label: label as u32, bound: max_label })
        } else {
            Ok(label as u32)
        }
    };

    // vertical edges, bottom-up per column
    let mut bot_in = vec![0u32; m * n];
    let mut top_out = vec![0u32; m * n];
    let mut j_bottom = vec![0u32; n];
    for c0 in 0..n {
        let mut v: i64 = b[c0] as i64 + (0..m).map(|r0| d[r0 * n + c0]).sum::<i64>();
        if v < 0 {
            return Ok(LaurentScalar::zero());
        }
        j_bottom[c0] = guard(v)?;
        for r0 in (0..m).rev() {
            bot_in[r0 * n + c0] = guard(v)?;
            v -= d[r0 * n + c0];
            if v < 0 {
                return Ok(LaurentScalar::zero());
            }
            top_out[r0 * n + c0] = guard(v)?;
        }
        debug_assert_eq!(top_out[c0], b[c0]);
    }

    // horizontal edges, left to right per row
    let mut left_in = vec![0u32; m * n];
    let mut a_out = vec![0u32; m * n];
    for r0 in 0..m {
        let mut left = i[r0] as i64;
        for c0 in 0..n {
            left_in[r0 * n + c0] = guard(left)?;
            left += d[r0 * n + c0];
            if left < 0 {
                return Ok(LaurentScalar::zero());
            }
            a_out[r0 * n + c0] = guard(left)?;
        }
    }

    // assemble the product of vertex entries
    let mut value = LaurentScalar::one();
    for (pos, &(r, c)) in order.iter().enumerate() {
        let idx = (r - 1) * n + (c - 1);
        let (ao, bo, li, ji) = (a_out[idx], top_out[idx], left_in[idx], bot_in[idx]);
        let (o, iv) = (out[pos], inn[pos]);
        let entry = match mode {
            QMode::Generic => {
                let rc = rsrc.coeff(ao, bo, o, li, ji, iv);
                if rc.is_zero() {
                    return Ok(LaurentScalar::zero());
                }
                zarg.mono_pow(ji as i64 - bo as i64).scale(&QRat::from_poly(rc))
            }
            QMode::Zero => {
                let e = frozen_vertex_entry(ao, bo, li, ji, o, iv, zarg);
                if e.is_zero() {
                    return Ok(LaurentScalar::zero());
                }
                e
            }
        };
        value = value.mul_ref(&entry);
    }

    if mode == QMode::Generic {
        let mut weight = QRat::one();
        for &bb in b {
            weight = weight.mul_ref(&chi_prime(bb));
        }
        for &ii in i {
            weight = weight.mul_ref(&chi(ii));
        }
        for r0 in 0..m {
            weight = weight.mul_ref(&chi_prime(a_out[r0 * n + (n - 1)]));
        }
        for &jj in &j_bottom {
            weight = weight.mul_ref(&chi(jj));
        }
        value = value.scale(&weight);
    }

    Ok(value)
}
