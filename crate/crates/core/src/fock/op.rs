//! Sparse operators on tensor products of truncated Fock spaces.

use super::{FockSpace, QMode};
use crate::qscalar::{LaurentScalar, QRat};
use std::collections::BTreeMap;

/// The oscillator generators. `H` is the mode-counting operator
/// `h|m> = m|m>` used for spectral-parameter conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    APlus,
    AMinus,
    K,
    H,
}

/// Sparse operator on `F_{N_1} (x) ... (x) F_{N_k}` with `LaurentScalar`
/// entries, keyed by `(out, in)` multi-indices.
///
/// `raise_bound[t]` records the maximum amount the operator can raise the
/// mode of factor `t` (including intermediate states of compositions).
/// Matrix elements whose in-index satisfies `in_t <= N_t - raise_bound[t]` in
/// every factor are exactly those of the untruncated operator: the truncation
/// at `a^+|N>` can only discard amplitudes that such columns never reach.
#[derive(Clone, Debug)]
pub struct FockOp {
    shape: Vec<u32>,
    entries: BTreeMap<(Vec<u32>, Vec<u32>), LaurentScalar>,
    raise_bound: Vec<u32>,
}

impl FockOp {
    pub fn zero(shape: Vec<u32>) -> Self {
        let raise_bound = vec![0; shape.len()];
        FockOp { shape, entries: BTreeMap::new(), raise_bound }
    }

    pub fn identity(shape: Vec<u32>) -> Self {
        let mut op = FockOp::zero(shape.clone());
        let mut idx = vec![0u32; shape.len()];
        loop {
            op.entries.insert((idx.clone(), idx.clone()), LaurentScalar::one());
            if !increment(&mut idx, &shape) {
                break;
            }
        }
        op
    }

    /// Generator matrix on a single space. `a^+|cutoff>` is dropped by the
    /// truncation and the raise bound records it.
    pub fn generator(gen: Generator, space: &FockSpace) -> Self {
        let n = space.cutoff;
        let mut op = FockOp::zero(vec![n]);
        for m in 0..=n {
            match (gen, space.mode) {
                (Generator::APlus, _) => {
                    if m < n {
                        op.insert(vec![m + 1], vec![m], LaurentScalar::one());
                    }
                }
                (Generator::AMinus, QMode::Generic) => {
                    if m > 0 {
                        // a^-|m> = (1 - q^{2m})|m-1>
                        let c = QRat::one().sub_ref(&QRat::q_power(2 * m as i64));
                        op.insert(vec![m - 1], vec![m], LaurentScalar::constant(c));
                    }
                }
                (Generator::AMinus, QMode::Zero) => {
                    if m > 0 {
                        op.insert(vec![m - 1], vec![m], LaurentScalar::one());
                    }
                }
                (Generator::K, QMode::Generic) => {
                    // k|m> = q^m |m>
                    op.insert(vec![m], vec![m], LaurentScalar::constant(QRat::q_power(m as i64)));
                }
                (Generator::K, QMode::Zero) => {
                    if m == 0 {
                        op.insert(vec![0], vec![0], LaurentScalar::one());
                    }
                }
                (Generator::H, _) => {
                    if m > 0 {
                        op.insert(vec![m], vec![m], LaurentScalar::from_int(m as i64));
                    }
                }
            }
        }
        if gen == Generator::APlus {
            op.raise_bound = vec![1];
        }
        op
    }

    /// `(a^+)^f k^e (a^-)^g` (applied right to left) on a single space.
    pub fn word(f: u32, e: bool, g: u32, space: &FockSpace) -> Self {
        let mut op = FockOp::identity(vec![space.cutoff]);
        for _ in 0..g {
            op = FockOp::generator(Generator::AMinus, space).compose(&op);
        }
        if e {
            op = FockOp::generator(Generator::K, space).compose(&op);
        }
        for _ in 0..f {
            op = FockOp::generator(Generator::APlus, space).compose(&op);
        }
        op
    }

    pub fn shape(&self) -> &[u32] {
        &self.shape
    }

    pub fn raise_bound(&self) -> &[u32] {
        &self.raise_bound
    }

    pub fn set_raise_bound(&mut self, bound: Vec<u32>) {
        assert_eq!(bound.len(), self.shape.len());
        self.raise_bound = bound;
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Vec<u32>, Vec<u32>), &LaurentScalar)> {
        self.entries.iter()
    }

    pub fn insert(&mut self, out: Vec<u32>, inn: Vec<u32>, value: LaurentScalar) {
        debug_assert!(out.iter().zip(&self.shape).all(|(i, n)| i <= n));
        debug_assert!(inn.iter().zip(&self.shape).all(|(i, n)| i <= n));
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry((out, inn)) {
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

    pub fn entry(&self, out: &[u32], inn: &[u32]) -> LaurentScalar {
        self.entries
            .get(&(out.to_vec(), inn.to_vec()))
            .cloned()
            .unwrap_or_else(LaurentScalar::zero)
    }

    /// Tensor product; factor order is the argument order.
    pub fn tensor(ops: &[FockOp]) -> FockOp {
        let shape: Vec<u32> = ops.iter().flat_map(|o| o.shape.iter().copied()).collect();
        let raise: Vec<u32> = ops.iter().flat_map(|o| o.raise_bound.iter().copied()).collect();
        let mut acc: Vec<(Vec<u32>, Vec<u32>, LaurentScalar)> =
            vec![(Vec::new(), Vec::new(), LaurentScalar::one())];
        for op in ops {
            let mut next = Vec::with_capacity(acc.len() * op.entries.len().max(1));
            for ((out, inn), v) in &op.entries {
                for (o0, i0, v0) in &acc {
                    let mut o = o0.clone();
                    o.extend_from_slice(out);
                    let mut i = i0.clone();
                    i.extend_from_slice(inn);
                    next.push((o, i, v0.mul_ref(v)));
                }
            }
            acc = next;
        }
        let mut result = FockOp::zero(shape);
        result.raise_bound = raise;
        for (o, i, v) in acc {
            result.insert(o, i, v);
        }
        result
    }

    /// Operator composition `self ∘ rhs` (apply `rhs` first). Panics on shape
    /// mismatch; raise bounds add per factor.
    pub fn compose(&self, rhs: &FockOp) -> FockOp {
        assert_eq!(self.shape, rhs.shape, "operator shapes do not match in compose");
        let mut by_in: BTreeMap<&Vec<u32>, Vec<(&Vec<u32>, &LaurentScalar)>> = BTreeMap::new();
        for ((out, inn), v) in &self.entries {
            by_in.entry(inn).or_default().push((out, v));
        }
        let mut result = FockOp::zero(self.shape.clone());
        for ((mid, inn), v_rhs) in &rhs.entries {
            if let Some(rows) = by_in.get(mid) {
                for (out, v_lhs) in rows {
                    result.insert((*out).clone(), inn.clone(), v_lhs.mul_ref(v_rhs));
                }
            }
        }
        result.raise_bound = self
            .raise_bound
            .iter()
            .zip(&rhs.raise_bound)
            .zip(&self.shape)
            .map(|((a, b), n)| (a + b).min(*n + 1))
            .collect();
        result
    }

    pub fn add_ref(&self, rhs: &FockOp) -> FockOp {
        assert_eq!(self.shape, rhs.shape, "operator shapes do not match in add");
        let mut result = self.clone();
        for ((out, inn), v) in &rhs.entries {
            result.insert(out.clone(), inn.clone(), v.clone());
        }
        result.raise_bound = self
            .raise_bound
            .iter()
            .zip(&rhs.raise_bound)
            .map(|(a, b)| *a.max(b))
            .collect();
        result
    }

    pub fn sub_ref(&self, rhs: &FockOp) -> FockOp {
        self.add_ref(&rhs.scale(&LaurentScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentScalar) -> FockOp {
        let mut result = FockOp::zero(self.shape.clone());
        result.raise_bound = self.raise_bound.clone();
        for ((out, inn), v) in &self.entries {
            result.insert(out.clone(), inn.clone(), v.mul_ref(c));
        }
        result
    }

    /// Trace over all factors with unit weight per basis state (the zero-mode
    /// trace; the generic-q trace is never needed by the identities covered
    /// here).
    pub fn full_trace(&self) -> LaurentScalar {
        let mut acc = LaurentScalar::zero();
        for ((out, inn), v) in &self.entries {
            if out == inn {
                acc = acc.add_ref(v);
            }
        }
        acc
    }

    /// Trace out the listed factors (unit weight), returning the operator on
    /// the remaining ones.
    pub fn partial_trace(&self, traced: &[usize]) -> FockOp {
        let keep: Vec<usize> =
            (0..self.shape.len()).filter(|t| !traced.contains(t)).collect();
        let shape: Vec<u32> = keep.iter().map(|t| self.shape[*t]).collect();
        let mut result = FockOp::zero(shape);
        result.raise_bound = keep.iter().map(|t| self.raise_bound[*t]).collect();
        for ((out, inn), v) in &self.entries {
            if traced.iter().any(|t| out[*t] != inn[*t]) {
                continue;
            }
            let o: Vec<u32> = keep.iter().map(|t| out[*t]).collect();
            let i: Vec<u32> = keep.iter().map(|t| inn[*t]).collect();
            result.insert(o, i, v.clone());
        }
        result
    }

    /// True when the in-index lies in the safe window: every factor satisfies
    /// `in_t + raise_bound_t <= N_t`.
    pub fn safe_in(&self, inn: &[u32]) -> bool {
        inn.iter()
            .zip(&self.raise_bound)
            .zip(&self.shape)
            .all(|((m, b), n)| m + b <= *n)
    }

    /// Compare two operators on the in-columns lying in both safe windows,
    /// returning the differing `(out, in)` pairs.
    pub fn diff_on_safe_window(&self, other: &FockOp) -> Vec<(Vec<u32>, Vec<u32>)> {
        assert_eq!(self.shape, other.shape, "operator shapes do not match in diff");
        let mut keys: std::collections::BTreeSet<(Vec<u32>, Vec<u32>)> =
            std::collections::BTreeSet::new();
        for (k, _) in self.entries.iter().chain(other.entries.iter()) {
            keys.insert(k.clone());
        }
        let mut bad = Vec::new();
        for (out, inn) in keys {
            if !(self.safe_in(&inn) && other.safe_in(&inn)) {
                continue;
            }
            if self.entry(&out, &inn) != other.entry(&out, &inn) {
                bad.push((out, inn));
            }
        }
        bad
    }

    /// Structural equality of the entry maps (shapes must match).
    pub fn same_entries(&self, other: &FockOp) -> bool {
        self.shape == other.shape && self.entries == other.entries
    }

    /// Coefficient-wise q = 0 specialization.
    pub fn eval_q0(&self) -> Option<FockOp> {
        let mut result = FockOp::zero(self.shape.clone());
        result.raise_bound = self.raise_bound.clone();
        for ((out, inn), v) in &self.entries {
            result.insert(out.clone(), inn.clone(), v.eval_q0()?);
        }
        Some(result)
    }

    /// Iterate over all multi-indices of the underlying space.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        basis_of(&self.shape)
    }
}

/// All multi-indices for a given shape, in lexicographic order.
pub(crate) fn basis_of(shape: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut idx = vec![0u32; shape.len()];
    loop {
        out.push(idx.clone());
        if !increment(&mut idx, shape) {
            break;
        }
    }
    out
}

fn increment(idx: &mut [u32], shape: &[u32]) -> bool {
    for t in (0..idx.len()).rev() {
        if idx[t] < shape[t] {
            idx[t] += 1;
            for u in idx.iter_mut().skip(t + 1) {
                *u = 0;
            }
            return true;
        }
        idx[t] = 0;
    }
    // the empty shape has exactly one index, the empty tuple
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_actions_match_their_definitions() {
        let gen = FockSpace::generic(5);
        let am = FockOp::generator(Generator::AMinus, &gen);
        // a^-|m> = (1 - q^{2m})|m-1>, a^-|0> = 0
        for m in 1..=5u32 {
            let c = QRat::one().sub_ref(&QRat::q_power(2 * m as i64));
            assert_eq!(am.entry(&[m - 1], &[m]), LaurentScalar::constant(c));
        }
        assert!(am.entry(&[0], &[0]).is_zero());

        let zero = FockSpace::zero(5);
        let k = FockOp::generator(Generator::K, &zero);
        for m in 0..=5u32 {
            let expect = if m == 0 { LaurentScalar::one() } else { LaurentScalar::zero() };
            assert_eq!(k.entry(&[m], &[m]), expect);
        }

        let h = FockOp::generator(Generator::H, &gen);
        assert_eq!(h.entry(&[3], &[3]), LaurentScalar::from_int(3));
    }

    #[test]
    fn generic_relations_hold_on_safe_window() {
        // k a± = q^{±1} a± k, a+a- = 1 - k^2, a-a+ = 1 - q^2 k^2 at cutoff 8
        let s = FockSpace::generic(8);
        let ap = FockOp::generator(Generator::APlus, &s);
        let am = FockOp::generator(Generator::AMinus, &s);
        let k = FockOp::generator(Generator::K, &s);
        let id = FockOp::identity(vec![8]);
        let q = |e: i64| LaurentScalar::constant(QRat::q_power(e));

        let lhs = k.compose(&ap);
        let rhs = ap.compose(&k).scale(&q(1));
        assert!(lhs.diff_on_safe_window(&rhs).is_empty());

        let lhs = k.compose(&am);
        let rhs = am.compose(&k).scale(&q(-1));
        assert!(lhs.diff_on_safe_window(&rhs).is_empty());

        let kk = k.compose(&k);
        let lhs = ap.compose(&am);
        let rhs = id.sub_ref(&kk);
        assert!(lhs.diff_on_safe_window(&rhs).is_empty());

        let lhs = am.compose(&ap);
        let rhs = id.sub_ref(&kk.scale(&q(2)));
        assert!(lhs.diff_on_safe_window(&rhs).is_empty());
    }

    #[test]
    fn zero_mode_relations_hold_exactly() {
        // k a+ = 0, a- k = 0, a+a- = 1 - k, a-a+ = 1, k^2 = k at cutoff 6
        let s = FockSpace::zero(6);
        let ap = FockOp::generator(Generator::APlus, &s);
        let am = FockOp::generator(Generator::AMinus, &s);
        let k = FockOp::generator(Generator::K, &s);
        let id = FockOp::identity(vec![6]);

        assert_eq!(k.compose(&ap).num_entries(), 0);
        assert_eq!(am.compose(&k).num_entries(), 0);
        assert!(ap.compose(&am).diff_on_safe_window(&id.sub_ref(&k)).is_empty());
        assert!(am.compose(&ap).diff_on_safe_window(&id).is_empty());
        assert!(k.compose(&k).same_entries(&k));
    }

    #[test]
    fn compose_of_ladder_operators_at_q0() {
        // a+ a- = diag(0,1,1,1) = 1 - k at cutoff 3
        let s = FockSpace::zero(3);
        let ap = FockOp::generator(Generator::APlus, &s);
        let am = FockOp::generator(Generator::AMinus, &s);
        let prod = ap.compose(&am);
        for m in 0..=3u32 {
            let expect = if m == 0 { LaurentScalar::zero() } else { LaurentScalar::one() };
            assert_eq!(prod.entry(&[m], &[m]), expect);
        }
    }

    #[test]
    fn tensor_and_traces() {
        let s = FockSpace::zero(5);
        let id = FockOp::identity(vec![5]);
        let both = FockOp::tensor(&[id.clone(), id.clone()]);
        assert!(both.same_entries(&FockOp::identity(vec![5, 5])));

        let k = FockOp::generator(Generator::K, &s);
        assert_eq!(k.full_trace(), LaurentScalar::one());

        // tracing k out of k (x) id leaves id
        let kid = FockOp::tensor(&[k, FockOp::identity(vec![5])]);
        let reduced = kid.partial_trace(&[0]);
        assert!(reduced.same_entries(&FockOp::identity(vec![5])));
    }

    #[test]
    fn pairing_is_compatible_with_generator_actions() {
        // <m|(X|m'>) = (<m|X)|m'> for the generic generators: the dual action
        // <m|a- = <m+1|, <m|a+ = (1-q^{2m})<m-1|, <m|k = q^m <m|
        let s = FockSpace::generic(8);
        for m in 0..=7u32 {
            for mp in 0..=7u32 {
                let ap = FockOp::generator(Generator::APlus, &s);
                let am = FockOp::generator(Generator::AMinus, &s);
                let k = FockOp::generator(Generator::K, &s);
                // a+: <m|(a+|m'>) = (q^2)_m delta_{m, m'+1}
                let lhs = s.pairing(m).mul_ref(&ap.entry(&[m], &[mp]).as_constant().unwrap());
                let rhs = if m >= 1 {
                    // (<m|a+)|m'> = (1-q^{2m}) <m-1|m'>
                    let c = QRat::one().sub_ref(&QRat::q_power(2 * m as i64));
                    if m - 1 == mp { c.mul_ref(&s.pairing(mp)) } else { QRat::zero() }
                } else {
                    QRat::zero()
                };
                assert_eq!(lhs, rhs, "a+ pairing at ({m},{mp})");
                // a-: <m|(a-|m'>) vs (<m+1|)|m'>
                let lhs = s.pairing(m).mul_ref(&am.entry(&[m], &[mp]).as_constant().unwrap());
                let rhs = if m + 1 == mp { s.pairing(mp) } else { QRat::zero() };
                assert_eq!(lhs, rhs, "a- pairing at ({m},{mp})");
                // k: diagonal both ways
                let lhs = s.pairing(m).mul_ref(&k.entry(&[m], &[mp]).as_constant().unwrap());
                let rhs = if m == mp {
                    QRat::q_power(m as i64).mul_ref(&s.pairing(m))
                } else {
                    QRat::zero()
                };
                assert_eq!(lhs, rhs, "k pairing at ({m},{mp})");
            }
        }
    }

    #[test]
    fn empty_shape_is_the_scalar_space() {
        let id = FockOp::identity(vec![]);
        assert_eq!(id.num_entries(), 1);
        assert_eq!(id.full_trace(), LaurentScalar::one());
        let two = id.scale(&LaurentScalar::from_int(2));
        assert_eq!(two.compose(&two).full_trace(), LaurentScalar::from_int(4));
    }

    #[test]
    fn safe_window_shrinks_under_composition() {
        let s = FockSpace::generic(4);
        let ap = FockOp::generator(Generator::APlus, &s);
        let twice = ap.compose(&ap);
        assert_eq!(twice.raise_bound(), &[2]);
        assert!(twice.safe_in(&[2]));
        assert!(!twice.safe_in(&[3]));
    }
}
