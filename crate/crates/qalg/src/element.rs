//! Elements of the enveloping algebra in PBW normal form.
//!
//! An element is a rational linear combination of sorted monomials. All
//! arithmetic funnels through a straightening worklist that rewrites an
//! arbitrary generator word into the sorted basis: an out-of-order
//! adjacent pair is swapped at the cost of a parity sign plus the
//! substituted supercommutator, and a repeated odd generator is replaced
//! by half its self-bracket. Both moves strictly decrease (degree, number
//! of inversions), so the rewriting terminates.

use std::fmt;
use std::sync::Arc;

use num::{Signed, Zero};
use smallvec::SmallVec;
use std::collections::BTreeMap;

use crate::context::{AlgebraError, Context};
use crate::generator::Generator;
use crate::monomial::Monomial;
use crate::scalar::{self, Scalar};

type Word = SmallVec<[u16; 8]>;

/// A normal-form element of the enveloping algebra of Q(n).
#[derive(Clone, Debug)]
pub struct UElement {
    ctx: Arc<Context>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl UElement {
    /// The zero element.
    pub fn zero(ctx: Arc<Context>) -> Self {
        UElement { ctx, terms: BTreeMap::new() }
    }

    /// The unit element.
    pub fn one(ctx: Arc<Context>) -> Self {
        Self::scalar(ctx, scalar::int(1))
    }

    /// A scalar multiple of the unit.
    pub fn scalar(ctx: Arc<Context>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        UElement { ctx, terms }
    }

    /// A single generator.
    pub fn generator(ctx: Arc<Context>, g: Generator) -> Result<Self, AlgebraError> {
        let rank = ctx.rank(g)?;
        Ok(Self::from_rank_word(ctx, scalar::int(1), &[rank]))
    }

    /// The product of a word of generators, in the order given.
    pub fn word(ctx: Arc<Context>, gens: &[Generator]) -> Result<Self, AlgebraError> {
        let ranks: Vec<u16> = gens
            .iter()
            .map(|g| ctx.rank(*g))
            .collect::<Result<_, _>>()?;
        Ok(Self::from_rank_word(ctx, scalar::int(1), &ranks))
    }

    /// `coeff` times the product of the generators at the given ranks.
    pub fn from_rank_word(ctx: Arc<Context>, coeff: Scalar, ranks: &[u16]) -> Self {
        let mut terms = BTreeMap::new();
        straighten_into(&ctx, coeff, ranks.iter().copied().collect(), &mut terms);
        UElement { ctx, terms }
    }

    /// The owning context.
    pub fn ctx(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// Normal-form terms, sorted by monomial.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True if this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> Scalar {
        self.terms.get(&Monomial::unit()).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of a specific monomial.
    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    fn check_same(&self, other: &UElement) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(self.ctx.mismatch(&other.ctx))
        }
    }

    /// Sum of two elements.
    pub fn try_add(&self, other: &UElement) -> Result<UElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two elements.
    pub fn try_sub(&self, other: &UElement) -> Result<UElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Product of two elements, restraightened into normal form.
    pub fn try_mul(&self, other: &UElement) -> Result<UElement, AlgebraError> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let word: Word = m1.ranks().chain(m2.ranks()).collect();
                straighten_into(&self.ctx, c1 * c2, word, &mut terms);
            }
        }
        Ok(UElement { ctx: self.ctx.clone(), terms })
    }

    /// The element scaled by a rational.
    pub fn scale(&self, c: &Scalar) -> UElement {
        if c.is_zero() {
            return UElement::zero(self.ctx.clone());
        }
        UElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// The supercommutator with `other`, summing over parity components.
    pub fn try_super_commutator(&self, other: &UElement) -> Result<UElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = UElement::zero(self.ctx.clone());
        for (a, a_odd) in self.parity_split_pairs() {
            for (b, b_odd) in other.parity_split_pairs() {
                let ab = a.try_mul(&b)?;
                let ba = b.try_mul(&a)?;
                let part = if a_odd && b_odd { ab.try_add(&ba)? } else { ab.try_sub(&ba)? };
                out = out.try_add(&part)?;
            }
        }
        Ok(out)
    }

    /// Even and odd components, in that order.
    pub fn parity_split(&self) -> (UElement, UElement) {
        let mut even = UElement::zero(self.ctx.clone());
        let mut odd = UElement::zero(self.ctx.clone());
        for (m, c) in &self.terms {
            let target = if m.parity(&self.ctx) { &mut odd } else { &mut even };
            target.terms.insert(m.clone(), c.clone());
        }
        (even, odd)
    }

    fn parity_split_pairs(&self) -> Vec<(UElement, bool)> {
        let (even, odd) = self.parity_split();
        let mut out = Vec::new();
        if !even.is_zero() {
            out.push((even, false));
        }
        if !odd.is_zero() {
            out.push((odd, true));
        }
        out
    }

    /// The principal anti-automorphism: -1 on generators, reversing
    /// products with the parity sign of the factor exchange.
    pub fn alpha(&self) -> UElement {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let word: Word = m.ranks().collect();
            let d = word.len();
            let odd = word.iter().filter(|&&r| self.ctx.parity(r)).count();
            // Reversing a length-d word of which `odd` factors are odd
            // costs (-1)^{odd choose 2}; negating each factor costs
            // (-1)^d.
            let exponent = d + odd * (odd.saturating_sub(1)) / 2;
            let sign = if exponent % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
            let reversed: Word = word.iter().rev().copied().collect();
            straighten_into(&self.ctx, c * sign, reversed, &mut terms);
        }
        UElement { ctx: self.ctx.clone(), terms }
    }

    pub(crate) fn insert_term(&mut self, m: Monomial, c: Scalar) {
        add_term(&mut self.terms, m, c);
    }
}

impl PartialEq for UElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for UElement {}

fn add_term(terms: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
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

/// Rewrite `coeff * word` into sorted monomials, accumulating into `terms`.
fn straighten_into(ctx: &Context, coeff: Scalar, word: Word, terms: &mut BTreeMap<Monomial, Scalar>) {
    if coeff.is_zero() {
        return;
    }
    let mut work: Vec<(Scalar, Word)> = vec![(coeff, word)];
    while let Some((c, w)) = work.pop() {
        match first_violation(ctx, &w) {
            None => {
                let ranks: Vec<u16> = w.to_vec();
                add_term(terms, Monomial::from_sorted_ranks(&ranks), c);
            }
            Some(t) if w[t] > w[t + 1] => {
                let (a, b) = (w[t], w[t + 1]);
                let sign_flip = ctx.parity(a) && ctx.parity(b);
                let mut swapped = w.clone();
                swapped.swap(t, t + 1);
                let swapped_coeff = if sign_flip { -c.clone() } else { c.clone() };
                work.push((swapped_coeff, swapped));
                for &(rank, k) in ctx.bracket(a, b) {
                    let mut replaced: Word = SmallVec::with_capacity(w.len() - 1);
                    replaced.extend_from_slice(&w[..t]);
                    replaced.push(rank);
                    replaced.extend_from_slice(&w[t + 2..]);
                    work.push((&c * scalar::int(k as i64), replaced));
                }
            }
            Some(t) => {
                // Equal adjacent odd generators: x x = (1/2)[x, x].
                let a = w[t];
                for &(rank, k) in ctx.bracket(a, a) {
                    let mut replaced: Word = SmallVec::with_capacity(w.len() - 1);
                    replaced.extend_from_slice(&w[..t]);
                    replaced.push(rank);
                    replaced.extend_from_slice(&w[t + 2..]);
                    work.push((&c * scalar::ratio(k as i64, 2), replaced));
                }
            }
        }
    }
}

/// Index of the leftmost adjacent pair violating normal form, if any.
fn first_violation(ctx: &Context, w: &[u16]) -> Option<usize> {
    w.windows(2)
        .position(|p| p[0] > p[1] || (p[0] == p[1] && ctx.parity(p[0])))
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
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
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} * {}", m.render(&self.ctx))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &UElement {
    type Output = UElement;
    fn add(self, rhs: &UElement) -> UElement {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl std::ops::Sub for &UElement {
    type Output = UElement;
    fn sub(self, rhs: &UElement) -> UElement {
        self.try_sub(rhs).expect("subtracting elements of different algebras")
    }
}

impl std::ops::Mul for &UElement {
    type Output = UElement;
    fn mul(self, rhs: &UElement) -> UElement {
        self.try_mul(rhs).expect("multiplying elements of different algebras")
    }
}

impl std::ops::Neg for &UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        self.scale(&scalar::int(-1))
    }
}
