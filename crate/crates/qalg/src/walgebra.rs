//! The finite W-algebra attached to the principal-in-blocks even nilpotent
//! of Q(n).
//!
//! For l | n the even nilpotent with all Jordan blocks of size l induces a
//! grading of Q(n); the negative part together with the character chi (one
//! on single-step descents inside a block, zero elsewhere) defines a
//! quotient of the enveloping algebra, and the W-algebra is the space of
//! parabolic elements whose adjoint action by the negative part dies in
//! the quotient. This module computes the quotient projection, membership
//! witnesses, the distinguished generators obtained by projecting Gauss
//! powers of the generator matrix, their top symbols in the associated
//! graded algebra, and the two structure maps out of the weight-zero
//! subalgebra: the positive-part-killing projection and the factorization
//! of weight-zero elements into an l-fold tensor power of the smaller
//! algebra Q(n/l).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::Zero;

use crate::context::{AlgebraError, Context};
use crate::element::UElement;
use crate::generator::{GenKind, Generator};
use crate::monomial::Monomial;
use crate::scalar::{self, Scalar};
use crate::tensor::TensorElement;

/// W-algebra environment for Q(n) with Jordan blocks of size l.
#[derive(Debug)]
pub struct WSetup {
    ctx: Arc<Context>,
    /// Environment over Q(n/l) with trivial grading; `None` when l = 1
    /// (the environment is then its own slot algebra).
    slot: Option<Arc<WSetup>>,
    /// Memoized Gauss powers of the generator matrix.
    memo: Mutex<HashMap<(GenKind, u16, u16, u16), UElement>>,
}

impl WSetup {
    /// Build the environment; fails unless 0 < l and l | n.
    pub fn new(n: u16, l: u16) -> Result<Arc<WSetup>, AlgebraError> {
        let ctx = Context::new(n, l)?;
        let slot = if l == 1 { None } else { Some(WSetup::new(n / l, 1)?) };
        Ok(Arc::new(WSetup { ctx, slot, memo: Mutex::new(HashMap::new()) }))
    }

    /// The underlying context.
    pub fn ctx(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// The environment of the slot algebra Q(n/l) targeted by the tensor
    /// factorization; the environment itself when l = 1.
    pub fn slot_setup(&self) -> &WSetup {
        self.slot.as_deref().unwrap_or(self)
    }

    fn gen_elem(&self, g: Generator) -> UElement {
        UElement::generator(self.ctx.clone(), g).expect("generator in range")
    }

    /// The even raising element of the block-principal sl2 triple.
    pub fn sl2_e(&self) -> UElement {
        let l = self.ctx.l();
        let mut acc = UElement::zero(self.ctx.clone());
        for p in 1..=self.ctx.blocks() {
            for i in 1..l {
                let base = l * (p - 1);
                acc = &acc + &self.gen_elem(Generator::e(base + i, base + i + 1));
            }
        }
        acc
    }

    /// The even lowering element completing the sl2 triple.
    pub fn sl2_f(&self) -> UElement {
        let l = self.ctx.l();
        let mut acc = UElement::zero(self.ctx.clone());
        for p in 1..=self.ctx.blocks() {
            for i in 1..l {
                let base = l * (p - 1);
                let coeff = scalar::int(i as i64 * (l - i) as i64);
                acc = acc
                    .try_add(&self.gen_elem(Generator::e(base + i + 1, base + i)).scale(&coeff))
                    .expect("same context");
            }
        }
        acc
    }

    /// The semisimple element of the sl2 triple.
    pub fn sl2_h(&self) -> UElement {
        let l = self.ctx.l();
        let mut acc = UElement::zero(self.ctx.clone());
        for p in 1..=self.ctx.blocks() {
            for i in 1..=l {
                let base = l * (p - 1);
                let coeff = scalar::int(l as i64 - 2 * i as i64 + 1);
                acc = acc
                    .try_add(&self.gen_elem(Generator::e(base + i, base + i)).scale(&coeff))
                    .expect("same context");
            }
        }
        acc
    }

    /// The odd nilpotent pairing with the character.
    pub fn odd_nilpotent(&self) -> UElement {
        let l = self.ctx.l();
        let mut acc = UElement::zero(self.ctx.clone());
        for p in 1..=self.ctx.blocks() {
            for i in 1..l {
                let base = l * (p - 1);
                acc = &acc + &self.gen_elem(Generator::f(base + i, base + i + 1));
            }
        }
        acc
    }

    /// Quotient projection: substitute the character value for every
    /// trailing negative-part factor of each normal-form term.
    pub fn project_pi(&self, x: &UElement) -> Result<UElement, AlgebraError> {
        if !self.ctx.same_as(x.ctx()) {
            return Err(self.ctx.mismatch(x.ctx()));
        }
        let mut out = UElement::zero(self.ctx.clone());
        'terms: for (m, c) in x.terms() {
            let split = m.factors().len() - m.negative_suffix_len(&self.ctx);
            for &(rank, _) in &m.factors()[split..] {
                if self.ctx.chi_int(rank) == 0 {
                    continue 'terms;
                }
            }
            out.insert_term(Monomial::from_factors(&m.factors()[..split]), c.clone());
        }
        Ok(out)
    }

    /// The projected adjoint action of a negative-part generator.
    pub fn ad_reduce(&self, a: Generator, y: &UElement) -> Result<UElement, AlgebraError> {
        let ga = UElement::generator(self.ctx.clone(), a)?;
        self.project_pi(&ga.try_super_commutator(y)?)
    }

    /// First negative-part generator whose projected adjoint action on `y`
    /// is nonzero, with the nonzero residue.
    pub fn membership_failure(
        &self,
        y: &UElement,
    ) -> Result<Option<(Generator, UElement)>, AlgebraError> {
        for rank in self.ctx.negative_ranks() {
            let a = self.ctx.generator(rank);
            let residue = self.ad_reduce(a, y)?;
            if !residue.is_zero() {
                return Ok(Some((a, residue)));
            }
        }
        Ok(None)
    }

    /// True if `y` lies in the W-algebra.
    pub fn is_in_w(&self, y: &UElement) -> Result<bool, AlgebraError> {
        Ok(self.membership_failure(y)?.is_none())
    }

    /// Kill every term containing a positive-weight factor; the input must
    /// not contain negative-part factors.
    pub fn theta(&self, x: &UElement) -> Result<UElement, AlgebraError> {
        if !self.ctx.same_as(x.ctx()) {
            return Err(self.ctx.mismatch(x.ctx()));
        }
        let mut out = UElement::zero(self.ctx.clone());
        'terms: for (m, c) in x.terms() {
            for &(rank, _) in m.factors() {
                if self.ctx.is_negative_part(rank) {
                    return Err(AlgebraError::BadSupport(format!(
                        "term {} contains the negative-part factor {}",
                        m.render(&self.ctx),
                        self.ctx.generator(rank)
                    )));
                }
                if self.ctx.weight(rank) > 0 {
                    continue 'terms;
                }
            }
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Gauss power of the generator matrix: the even entry when `kind` is
    /// `E`, the odd entry when `kind` is `F`, at matrix position (i, j)
    /// and power `order`.
    pub fn sergeev(
        &self,
        kind: GenKind,
        order: u16,
        i: u16,
        j: u16,
    ) -> Result<UElement, AlgebraError> {
        let n = self.ctx.n();
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(AlgebraError::BadParameter(format!(
                    "matrix index {idx} outside 1..={n}"
                )));
            }
        }
        Ok(self.sergeev_inner(kind, order, i, j))
    }

    fn sergeev_inner(&self, kind: GenKind, order: u16, i: u16, j: u16) -> UElement {
        if order == 0 {
            return match kind {
                GenKind::E if i == j => UElement::one(self.ctx.clone()),
                _ => UElement::zero(self.ctx.clone()),
            };
        }
        let key = (kind, order, i, j);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        // One expansion step along the first factor:
        //   even(m) = sum_k e_{ik} even(m-1)_{kj} + (-1)^{m+1} f_{ik} odd(m-1)_{kj}
        //   odd(m)  = sum_k e_{ik} odd(m-1)_{kj}  + (-1)^{m+1} f_{ik} even(m-1)_{kj}
        let sign = if order % 2 == 1 { scalar::int(1) } else { scalar::int(-1) };
        let mut acc = UElement::zero(self.ctx.clone());
        for k in 1..=self.ctx.n() {
            let (tail_e, tail_f) = match kind {
                GenKind::E => (
                    self.sergeev_inner(GenKind::E, order - 1, k, j),
                    self.sergeev_inner(GenKind::F, order - 1, k, j),
                ),
                GenKind::F => (
                    self.sergeev_inner(GenKind::F, order - 1, k, j),
                    self.sergeev_inner(GenKind::E, order - 1, k, j),
                ),
            };
            if !tail_e.is_zero() {
                let head = self.gen_elem(Generator::e(i, k));
                acc = &acc + &head.try_mul(&tail_e).expect("same context");
            }
            if !tail_f.is_zero() {
                let head = self.gen_elem(Generator::f(i, k));
                acc = acc
                    .try_add(&head.try_mul(&tail_f).expect("same context").scale(&sign))
                    .expect("same context");
            }
        }
        self.memo.lock().expect("memo lock").insert(key, acc.clone());
        acc
    }

    /// Distinguished W-algebra generator: the projected Gauss power of
    /// order l + k - 1 anchored at block row p and block column q, for
    /// 1 <= k <= l.
    pub fn w_generator(
        &self,
        kind: GenKind,
        p: u16,
        q: u16,
        k: u16,
    ) -> Result<UElement, AlgebraError> {
        let l = self.ctx.l();
        let blocks = self.ctx.blocks();
        if k == 0 || k > l {
            return Err(AlgebraError::BadParameter(format!("k = {k} outside 1..={l}")));
        }
        if p == 0 || p > blocks || q == 0 || q > blocks {
            return Err(AlgebraError::BadParameter(format!(
                "block indices ({p}, {q}) outside 1..={blocks}"
            )));
        }
        let power = self.sergeev(kind, l + k - 1, l * p, l * (q - 1) + 1)?;
        self.project_pi(&power)
    }

    /// The weight-zero diagonal element x^i_{p,q}.
    pub fn x_element(&self, i: u16, p: u16, q: u16) -> Result<UElement, AlgebraError> {
        let (row, col) = self.diag_position(i, p, q)?;
        UElement::generator(self.ctx.clone(), Generator::e(row, col))
    }

    /// The signed odd weight-zero diagonal element xi^i_{p,q}.
    pub fn xi_element(&self, i: u16, p: u16, q: u16) -> Result<UElement, AlgebraError> {
        let (row, col) = self.diag_position(i, p, q)?;
        let sign = if i % 2 == 1 { scalar::int(1) } else { scalar::int(-1) };
        Ok(UElement::generator(self.ctx.clone(), Generator::f(row, col))?.scale(&sign))
    }

    fn diag_position(&self, i: u16, p: u16, q: u16) -> Result<(u16, u16), AlgebraError> {
        let l = self.ctx.l();
        let blocks = self.ctx.blocks();
        if i == 0 || i > l {
            return Err(AlgebraError::BadParameter(format!("i = {i} outside 1..={l}")));
        }
        if p == 0 || p > blocks || q == 0 || q > blocks {
            return Err(AlgebraError::BadParameter(format!(
                "block indices ({p}, {q}) outside 1..={blocks}"
            )));
        }
        Ok((l * (p - 1) + i, l * (q - 1) + i))
    }

    /// Top symbol under the filtration by (degree-plus-weight, weight):
    /// the terms of maximal Kazhdan degree, and among them of maximal
    /// grading weight, read as commutative symbols.
    pub fn top_symbol(&self, x: &UElement) -> SymbolElement {
        let best = x
            .terms()
            .map(|(m, _)| (m.kazhdan_degree(&self.ctx), m.dynkin_weight(&self.ctx)))
            .max();
        let Some(best) = best else {
            return SymbolElement::from_terms(Vec::new());
        };
        SymbolElement::from_terms(
            x.terms()
                .filter(|(m, _)| {
                    (m.kazhdan_degree(&self.ctx), m.dynkin_weight(&self.ctx)) == best
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Basis symbols of the nilpotent's centralizer, ordered by family
    /// (even then odd), shift k, block row, block column.
    pub fn centralizer_basis(&self) -> Vec<SymbolElement> {
        let l = self.ctx.l();
        let blocks = self.ctx.blocks();
        let mut out = Vec::new();
        for kind in [GenKind::E, GenKind::F] {
            for k in 0..l {
                for p in 1..=blocks {
                    for q in 1..=blocks {
                        let mut terms = Vec::new();
                        for i in 1..=l - k {
                            let row = l * (p - 1) + i;
                            let col = l * (q - 1) + i + k;
                            let g = Generator { kind, row, col };
                            let coeff = match kind {
                                GenKind::E => scalar::int(1),
                                // Alternating signs along the odd ladder.
                                GenKind::F => {
                                    if (i + k) % 2 == 1 {
                                        scalar::int(1)
                                    } else {
                                        scalar::int(-1)
                                    }
                                }
                            };
                            let rank = self.ctx.rank(g).expect("generator in range");
                            terms.push((Monomial::from_sorted_ranks(&[rank]), coeff));
                        }
                        out.push(SymbolElement::from_terms(terms));
                    }
                }
            }
        }
        out
    }

    /// Factor a weight-zero element through the l-fold tensor power of the
    /// slot algebra Q(n/l): the i-th diagonal entry of a block lands in
    /// slot l - i (zero-based), odd entries with the alternating sign.
    pub fn g0_to_tensor(&self, x: &UElement) -> Result<TensorElement, AlgebraError> {
        if !self.ctx.same_as(x.ctx()) {
            return Err(self.ctx.mismatch(x.ctx()));
        }
        let l = self.ctx.l() as usize;
        let slot_ctx = self.slot_setup().ctx().clone();
        let mut out = TensorElement::zero(slot_ctx.clone(), l);
        for (m, c) in x.terms() {
            let mut tensor = TensorElement::unit(slot_ctx.clone(), l);
            for &(rank, exp) in m.factors() {
                if self.ctx.weight(rank) != 0 {
                    return Err(AlgebraError::BadSupport(format!(
                        "term {} contains the nonzero-weight factor {}",
                        m.render(&self.ctx),
                        self.ctx.generator(rank)
                    )));
                }
                let g = self.ctx.generator(rank);
                let (i, p) = self.ctx.block_coords(g.row);
                let (_, q) = self.ctx.block_coords(g.col);
                let slot = l - i as usize;
                // Odd diagonal entries alternate in sign along the block.
                let sign = match g.kind {
                    GenKind::E => scalar::int(1),
                    GenKind::F => {
                        if i % 2 == 1 {
                            scalar::int(1)
                        } else {
                            scalar::int(-1)
                        }
                    }
                };
                let slot_gen = UElement::generator(
                    slot_ctx.clone(),
                    Generator { kind: g.kind, row: p, col: q },
                )?
                .scale(&sign);
                let factor = TensorElement::embed(&slot_gen, slot, l)?;
                for _ in 0..exp {
                    tensor = tensor.try_mul(&factor)?;
                }
            }
            out = out.try_add(&tensor.scale(c))?;
        }
        Ok(out)
    }
}

/// A commutative symbol in the associated graded algebra: sorted monomial
/// terms with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymbolElement {
    terms: Vec<(Monomial, Scalar)>,
}

impl SymbolElement {
    /// Normalize a term list: sort, merge duplicates, drop zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        SymbolElement { terms: merged }
    }

    /// The sorted terms.
    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    /// True if there are no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common (Kazhdan degree, grading weight) of all terms, if they
    /// agree.
    pub fn bidegree(&self, ctx: &Context) -> Option<(i64, i64)> {
        let mut degrees = self
            .terms
            .iter()
            .map(|(m, _)| (m.kazhdan_degree(ctx), m.dynkin_weight(ctx)));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Canonical text in the same shape as element display.
    pub fn render(&self, ctx: &Context) -> String {
        use num::Signed;
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_unit() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{mag} * {}", m.render(ctx)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_triple_relations_hold() {
        for (n, l) in [(2u16, 2u16), (4, 2), (3, 3)] {
            let w = WSetup::new(n, l).unwrap();
            let (e, f, h) = (w.sl2_e(), w.sl2_f(), w.sl2_h());
            assert_eq!(e.try_super_commutator(&f).unwrap(), h, "[e, f] = h at ({n}, {l})");
            assert_eq!(
                h.try_super_commutator(&e).unwrap(),
                e.scale(&scalar::int(2)),
                "[h, e] = 2e at ({n}, {l})"
            );
            assert_eq!(
                h.try_super_commutator(&f).unwrap(),
                f.scale(&scalar::int(-2)),
                "[h, f] = -2f at ({n}, {l})"
            );
        }
    }

    #[test]
    fn projection_substitutes_character_values() {
        let w = WSetup::new(2, 2).unwrap();
        let ctx = w.ctx().clone();
        let e21 = UElement::generator(ctx.clone(), Generator::e(2, 1)).unwrap();
        let e11 = UElement::generator(ctx.clone(), Generator::e(1, 1)).unwrap();
        // e21 e11 = e11 e21 + e21, and chi(e21) = 1.
        let got = w.project_pi(&e21.try_mul(&e11).unwrap()).unwrap();
        let want = e11.try_add(&UElement::one(ctx.clone())).unwrap();
        assert_eq!(got, want);
        // An odd negative generator is killed.
        let f21 = UElement::generator(ctx.clone(), Generator::f(2, 1)).unwrap();
        assert!(w.project_pi(&f21).unwrap().is_zero());
        // Parabolic elements pass through unchanged.
        let e12 = UElement::generator(ctx, Generator::e(1, 2)).unwrap();
        assert_eq!(w.project_pi(&e12).unwrap(), e12);
    }

    #[test]
    fn gauss_powers_start_from_the_generators() {
        let w = WSetup::new(2, 1).unwrap();
        let ctx = w.ctx().clone();
        let e11 = w.sergeev(GenKind::E, 1, 1, 1).unwrap();
        assert_eq!(e11, UElement::generator(ctx.clone(), Generator::e(1, 1)).unwrap());
        let f12 = w.sergeev(GenKind::F, 1, 1, 2).unwrap();
        assert_eq!(f12, UElement::generator(ctx.clone(), Generator::f(1, 2)).unwrap());
        assert_eq!(w.sergeev(GenKind::E, 0, 1, 1).unwrap(), UElement::one(ctx.clone()));
        assert!(w.sergeev(GenKind::E, 0, 1, 2).unwrap().is_zero());
        assert!(w.sergeev(GenKind::F, 0, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn gauss_power_two_in_rank_one() {
        let w = WSetup::new(1, 1).unwrap();
        let ctx = w.ctx().clone();
        let e = UElement::generator(ctx.clone(), Generator::e(1, 1)).unwrap();
        // even(2) = e^2 - f f = e^2 - e.
        let got = w.sergeev(GenKind::E, 2, 1, 1).unwrap();
        let want = e.try_mul(&e).unwrap().try_sub(&e).unwrap();
        assert_eq!(got, want);
        // odd(2) = e f - f e = 0 in rank one.
        assert!(w.sergeev(GenKind::F, 2, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn trivial_blocks_make_generators_projections_of_themselves() {
        let w = WSetup::new(2, 1).unwrap();
        for p in 1..=2 {
            for q in 1..=2 {
                let even = w.w_generator(GenKind::E, p, q, 1).unwrap();
                let odd = w.w_generator(GenKind::F, p, q, 1).unwrap();
                let ctx = w.ctx().clone();
                assert_eq!(
                    even,
                    UElement::generator(ctx.clone(), Generator::e(p, q)).unwrap()
                );
                assert_eq!(odd, UElement::generator(ctx, Generator::f(p, q)).unwrap());
            }
        }
    }

    #[test]
    fn theta_kills_positive_factors_only() {
        let w = WSetup::new(2, 2).unwrap();
        let ctx = w.ctx().clone();
        let e11 = UElement::generator(ctx.clone(), Generator::e(1, 1)).unwrap();
        let e12 = UElement::generator(ctx.clone(), Generator::e(1, 2)).unwrap();
        let x = e11.try_add(&e12).unwrap();
        assert_eq!(w.theta(&x).unwrap(), e11);
        let e21 = UElement::generator(ctx, Generator::e(2, 1)).unwrap();
        assert!(matches!(w.theta(&e21), Err(AlgebraError::BadSupport(_))));
    }

    #[test]
    fn centralizer_basis_has_expected_size_and_bidegrees() {
        let w = WSetup::new(4, 2).unwrap();
        let basis = w.centralizer_basis();
        // 2 families x l shifts x (n/l)^2 block positions.
        assert_eq!(basis.len(), 2 * 2 * 4);
        for sym in &basis {
            assert!(!sym.is_zero());
            let (_, weight) = sym.bidegree(w.ctx()).unwrap();
            assert!(weight >= 0 && weight % 2 == 0);
        }
        // All distinct.
        let mut sorted = basis.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), basis.len());
    }

    #[test]
    fn weight_zero_elements_factor_through_slots() {
        let w = WSetup::new(4, 2).unwrap();
        let ctx = w.ctx().clone();
        let slot_ctx = w.slot_setup().ctx().clone();
        // x^2_{1,2} = e_{2,4} goes to slot 0 as e_{1,2}.
        let x = UElement::generator(ctx.clone(), Generator::e(2, 4)).unwrap();
        let got = w.g0_to_tensor(&x).unwrap();
        let want = TensorElement::embed(
            &UElement::generator(slot_ctx.clone(), Generator::e(1, 2)).unwrap(),
            0,
            2,
        )
        .unwrap();
        assert_eq!(got, want);
        // f_{2,4} = -xi^2_{1,2} goes to slot 0 as -f_{1,2}.
        let f = UElement::generator(ctx.clone(), Generator::f(2, 4)).unwrap();
        let got = w.g0_to_tensor(&f).unwrap();
        let want = TensorElement::embed(
            &UElement::generator(slot_ctx.clone(), Generator::f(1, 2))
                .unwrap()
                .scale(&scalar::int(-1)),
            0,
            2,
        )
        .unwrap();
        assert_eq!(got, want);
        // Positive-weight input is rejected.
        let bad = UElement::generator(ctx, Generator::e(1, 2)).unwrap();
        assert!(matches!(w.g0_to_tensor(&bad), Err(AlgebraError::BadSupport(_))));
    }

    #[test]
    fn top_symbol_picks_maximal_bidegree() {
        let w = WSetup::new(2, 2).unwrap();
        let ctx = w.ctx().clone();
        let e12 = UElement::generator(ctx.clone(), Generator::e(1, 2)).unwrap();
        let e11 = UElement::generator(ctx, Generator::e(1, 1)).unwrap();
        // Kazhdan degrees: e12 has 4, e11 has 2.
        let x = e12.try_add(&e11).unwrap();
        let sym = w.top_symbol(&x);
        assert_eq!(sym.bidegree(w.ctx()), Some((4, 2)));
        assert_eq!(sym.terms().len(), 1);
    }
}
