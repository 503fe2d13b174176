//! Tensor powers of the enveloping algebra with the graded product rule.
//!
//! A tensor element is a rational combination of pure tensors of sorted
//! monomials, all over one slot context. Multiplication moves right-hand
//! factors past left-hand slots with the usual parity sign and then
//! multiplies slotwise, restraightening within each slot. Assembling a
//! pure tensor out of given slot values involves no sign; signs enter only
//! when two tensors are multiplied.

use std::fmt;
use std::sync::Arc;

use num::{Signed, Zero};
use std::collections::BTreeMap;

use crate::context::{AlgebraError, Context};
use crate::element::UElement;
use crate::monomial::Monomial;
use crate::scalar::{self, Scalar};

/// An element of the `slots`-fold tensor power of the enveloping algebra.
#[derive(Clone, Debug)]
pub struct TensorElement {
    ctx: Arc<Context>,
    slots: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl TensorElement {
    /// The zero tensor.
    pub fn zero(ctx: Arc<Context>, slots: usize) -> Self {
        TensorElement { ctx, slots, terms: BTreeMap::new() }
    }

    /// The unit tensor 1 x ... x 1.
    pub fn unit(ctx: Arc<Context>, slots: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![Monomial::unit(); slots], scalar::int(1));
        TensorElement { ctx, slots, terms }
    }

    /// An element placed in one slot, units elsewhere.
    pub fn embed(e: &UElement, slot: usize, slots: usize) -> Result<Self, AlgebraError> {
        if slot >= slots {
            return Err(AlgebraError::BadParameter(format!(
                "slot {slot} out of range for {slots} slots"
            )));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in e.terms() {
            let mut key = vec![Monomial::unit(); slots];
            key[slot] = m.clone();
            terms.insert(key, c.clone());
        }
        Ok(TensorElement { ctx: e.ctx().clone(), slots, terms })
    }

    /// The pure tensor of the given slot values (no sign is involved).
    pub fn from_slots(elems: &[UElement]) -> Result<Self, AlgebraError> {
        let ctx = match elems.first() {
            Some(e) => e.ctx().clone(),
            None => {
                return Err(AlgebraError::BadParameter(
                    "a pure tensor needs at least one slot".to_string(),
                ))
            }
        };
        for e in elems {
            if !ctx.same_as(e.ctx()) {
                return Err(ctx.mismatch(e.ctx()));
            }
        }
        let mut out = TensorElement::unit(ctx, elems.len());
        for (slot, e) in elems.iter().enumerate() {
            let mut next = BTreeMap::new();
            for (key, c) in &out.terms {
                for (m, mc) in e.terms() {
                    let mut k = key.clone();
                    k[slot] = m.clone();
                    add_term(&mut next, k, c * mc);
                }
            }
            out.terms = next;
        }
        Ok(out)
    }

    /// The slot context.
    pub fn ctx(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// Number of tensor slots.
    pub fn slots(&self) -> usize {
        self.slots
    }

    /// Terms, sorted by slot-monomial key.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Scalar)> {
        self.terms.iter()
    }

    /// True if this is the zero tensor.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &TensorElement) -> Result<(), AlgebraError> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(self.ctx.mismatch(&other.ctx));
        }
        if self.slots != other.slots {
            return Err(AlgebraError::SlotMismatch { left: self.slots, right: other.slots });
        }
        Ok(())
    }

    /// Sum of two tensors.
    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two tensors.
    pub fn try_sub(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), -c.clone());
        }
        Ok(out)
    }

    /// The tensor scaled by a rational.
    pub fn scale(&self, c: &Scalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.ctx.clone(), self.slots);
        }
        TensorElement {
            ctx: self.ctx.clone(),
            slots: self.slots,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Graded product: right factors pick up a sign moving past later left
    /// slots, then slots multiply independently.
    pub fn try_mul(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            let left_par: Vec<bool> = k1.iter().map(|m| m.parity(&self.ctx)).collect();
            for (k2, c2) in &other.terms {
                let mut exp = 0usize;
                for (i, m2) in k2.iter().enumerate() {
                    if m2.parity(&self.ctx) {
                        exp += left_par[i + 1..].iter().filter(|p| **p).count();
                    }
                }
                let mut coeff = c1 * c2;
                if exp % 2 == 1 {
                    coeff = -coeff;
                }
                // Slotwise products, then the cartesian recombination.
                let slot_products: Vec<UElement> = (0..self.slots)
                    .map(|i| {
                        let ranks: Vec<u16> = k1[i].ranks().chain(k2[i].ranks()).collect();
                        UElement::from_rank_word(self.ctx.clone(), scalar::int(1), &ranks)
                    })
                    .collect();
                distribute(&slot_products, coeff, &mut terms);
            }
        }
        Ok(TensorElement { ctx: self.ctx.clone(), slots: self.slots, terms })
    }
}

fn distribute(
    slot_products: &[UElement],
    coeff: Scalar,
    terms: &mut BTreeMap<Vec<Monomial>, Scalar>,
) {
    let mut partial: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), coeff)];
    for prod in slot_products {
        let mut next = Vec::with_capacity(partial.len() * prod.num_terms().max(1));
        for (key, c) in &partial {
            for (m, mc) in prod.terms() {
                let mut k = key.clone();
                k.push(m.clone());
                next.push((k, c * mc));
            }
        }
        partial = next;
    }
    for (k, c) in partial {
        add_term(terms, k, c);
    }
}

fn add_term(terms: &mut BTreeMap<Vec<Monomial>, Scalar>, k: Vec<Monomial>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.slots == other.slots && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if key.iter().all(|m| m.is_unit()) {
                write!(f, "{mag}")?;
            } else {
                let slots: Vec<String> = key.iter().map(|m| m.render(&self.ctx)).collect();
                write!(f, "{mag} * {}", slots.join(" | "))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("adding incompatible tensors")
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.try_sub(rhs).expect("subtracting incompatible tensors")
    }
}

impl std::ops::Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.try_mul(rhs).expect("multiplying incompatible tensors")
    }
}

impl std::ops::Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&scalar::int(-1))
    }
}
