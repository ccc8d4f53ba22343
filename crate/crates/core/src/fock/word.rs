//! Exact normal-form engine for the 0-oscillator algebra.
//!
//! The algebra is generated by `a+`, `a-`, `k` with
//! `k a+ = 0`, `a- k = 0`, `a+ a- = 1 - k`, `a- a+ = 1` (and hence `k^2 = k`).
//! Words `(a+)^f k^e (a-)^g` with `e in {0,1}` span it; the fully reduced
//! forms — `e = 1`, or `e = 0` with `f = 0` or `g = 0` — are a basis, and
//! `k = 1 - a+ a-` recovers the k-free basis `{(a+)^f (a-)^g}`.

use super::{FockOp, FockSpace};
use crate::qscalar::LaurentScalar;
use thiserror::Error;

/// A word `coeff * (a+)^f k^e (a-)^g` in the 0-oscillator algebra. The triple
/// is not required to be reduced: `(f, 0, g)` with both powers positive is a
/// legal word and can be expanded on demand via [`OscWord::reduce`].
#[derive(Clone, Debug, PartialEq)]
pub struct OscWord {
    pub raise: u32,
    pub k: bool,
    pub lower: u32,
    pub coeff: LaurentScalar,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    /// The trace `sum_m <m|w|m>` has infinitely many equal contributions;
    /// this happens exactly for `(a+)^f (a-)^f` words without a `k` projector.
    #[error("trace diverges: every mode above the word's lowering power contributes")]
    Divergent,
}

impl OscWord {
    pub fn new(raise: u32, k: bool, lower: u32, coeff: LaurentScalar) -> Self {
        OscWord { raise, k, lower, coeff }
    }

    pub fn unit(raise: u32, k: bool, lower: u32) -> Self {
        OscWord::new(raise, k, lower, LaurentScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Expand into the reduced basis using `a+ a- = 1 - k` repeatedly:
    ///
    /// `(a+)^f (a-)^g = (a+)^{f-c}(a-)^{g-c} - sum_{t=1}^{c} (a+)^{f-t} k (a-)^{g-t}`
    ///
    /// with `c = min(f, g)`. Reduced words pass through unchanged.
    pub fn reduce(&self) -> Vec<OscWord> {
        if self.is_zero() {
            return Vec::new();
        }
        if self.k || self.raise == 0 || self.lower == 0 {
            return vec![self.clone()];
        }
        let c = self.raise.min(self.lower);
        let mut out =
            vec![OscWord::new(self.raise - c, false, self.lower - c, self.coeff.clone())];
        for t in 1..=c {
            out.push(OscWord::new(
                self.raise - t,
                true,
                self.lower - t,
                self.coeff.neg_ref(),
            ));
        }
        out
    }

    /// Product of two words, fully reduced. The middle `(a-)^{g1} (a+)^{f2}`
    /// collapses exactly by `a- a+ = 1`; `k a+ = 0` and `a- k = 0` kill the
    /// mismatched projector cases; the final `a+ ... a-` junction is expanded
    /// by [`OscWord::reduce`]. Products where one factor is a generator have
    /// at most 2 terms.
    pub fn multiply(&self, rhs: &OscWord) -> Vec<OscWord> {
        let coeff = self.coeff.mul_ref(&rhs.coeff);
        if coeff.is_zero() {
            return Vec::new();
        }
        if rhs.raise >= self.lower {
            let d = rhs.raise - self.lower;
            if self.k && d > 0 {
                return Vec::new(); // k a+ = 0
            }
            OscWord::new(self.raise + d, self.k || rhs.k, rhs.lower, coeff).reduce()
        } else {
            let c = self.lower - rhs.raise;
            if rhs.k {
                return Vec::new(); // a- k = 0
            }
            OscWord::new(self.raise, self.k, c + rhs.lower, coeff).reduce()
        }
    }

    /// Zero-mode trace by normal-form evaluation:
    /// `Tr (a+)^f k (a-)^g = delta_{f,g}` (only `m = g` contributes), while
    /// `Tr (a+)^f (a-)^g` vanishes for `f != g` and diverges for `f = g`.
    pub fn trace_zero(&self) -> Result<LaurentScalar, TraceError> {
        if self.is_zero() {
            return Ok(LaurentScalar::zero());
        }
        if self.k {
            if self.raise == self.lower {
                Ok(self.coeff.clone())
            } else {
                Ok(LaurentScalar::zero())
            }
        } else if self.raise == self.lower {
            Err(TraceError::Divergent)
        } else {
            Ok(LaurentScalar::zero())
        }
    }

    /// Matrix of the word on a truncated zero-mode space.
    pub fn matrix(&self, space: &FockSpace) -> FockOp {
        FockOp::word(self.raise, self.k, self.lower, space).scale(&self.coeff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::QMode;

    fn w(f: u32, k: bool, g: u32) -> OscWord {
        OscWord::unit(f, k, g)
    }

    #[test]
    fn generator_products_follow_the_relations() {
        // a- a+ = 1
        let prod = w(0, false, 1).multiply(&w(1, false, 0));
        assert_eq!(prod, vec![w(0, false, 0)]);
        // a+ a- = 1 - k
        let prod = w(1, false, 0).multiply(&w(0, false, 1));
        assert_eq!(
            prod,
            vec![w(0, false, 0), OscWord::new(0, true, 0, LaurentScalar::from_int(-1))]
        );
        // k a+ = 0 and a- k = 0
        assert!(w(0, true, 0).multiply(&w(1, false, 0)).is_empty());
        assert!(w(0, false, 1).multiply(&w(0, true, 0)).is_empty());
        // k^2 = k
        assert_eq!(w(0, true, 0).multiply(&w(0, true, 0)), vec![w(0, true, 0)]);
    }

    #[test]
    fn traces_by_normal_form() {
        assert_eq!(w(2, true, 2).trace_zero(), Ok(LaurentScalar::one()));
        assert_eq!(w(1, false, 2).trace_zero(), Ok(LaurentScalar::zero()));
        assert_eq!(w(1, false, 1).trace_zero(), Err(TraceError::Divergent));
        assert_eq!(w(0, false, 0).trace_zero(), Err(TraceError::Divergent));
    }

    #[test]
    fn matrix_unit_trace_agrees_with_mode_sum() {
        // independent oracle: sum <m|(a+)^2 k (a-)^2|m> over m <= 10 with the
        // matrix engine; only m = 2 contributes
        let space = FockSpace { cutoff: 10, mode: QMode::Zero };
        let mat = w(2, true, 2).matrix(&space);
        assert_eq!(mat.full_trace(), LaurentScalar::one());
        assert_eq!(w(2, true, 2).trace_zero(), Ok(LaurentScalar::one()));
        // and its divergent cousin really does hit every mode >= 1
        let shift = w(1, false, 1).matrix(&space);
        assert_eq!(shift.full_trace(), LaurentScalar::from_int(10));
    }

    #[test]
    fn word_products_agree_with_matrix_composition() {
        // for all words with f, e, g <= 3, the matrix of the normal-form
        // expansion equals the product of the factor matrices on the safe
        // window of a cutoff-12 space
        let space = FockSpace { cutoff: 12, mode: QMode::Zero };
        let range = 0..=3u32;
        for f1 in range.clone() {
            for e1 in [false, true] {
                for g1 in range.clone() {
                    for f2 in range.clone() {
                        for e2 in [false, true] {
                            for g2 in range.clone() {
                                let w1 = w(f1, e1, g1);
                                let w2 = w(f2, e2, g2);
                                let direct = w1.matrix(&space).compose(&w2.matrix(&space));
                                let mut expanded = FockOp::zero(vec![12]);
                                for t in w1.multiply(&w2) {
                                    expanded = expanded.add_ref(&t.matrix(&space));
                                }
                                // align windows before comparing
                                expanded.set_raise_bound(direct.raise_bound().to_vec());
                                assert!(
                                    direct.diff_on_safe_window(&expanded).is_empty(),
                                    "mismatch for ({f1},{e1},{g1})*({f2},{e2},{g2})"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
