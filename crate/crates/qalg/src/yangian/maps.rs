//! Maps from free Yangian words into (tensor powers of) enveloping
//! algebras.
//!
//! Three morphisms are provided: the evaluation homomorphism sending a
//! power-one generator to minus a generator of Q(m) and higher powers to
//! zero; its twist by the principal anti-automorphism, which drops the
//! minus signs and reverses products; and the homomorphism sending the
//! power-r generator to the signed Gauss power of order r. All three
//! preserve parity, so applying them slot by slot to a tensor needs no
//! sign bookkeeping.

use crate::context::AlgebraError;
use crate::element::UElement;
use crate::generator::{GenKind, Generator};
use crate::scalar;
use crate::tensor::TensorElement;
use crate::walgebra::WSetup;

use super::{YElement, YTensorElement, YWord};

/// Choice of morphism into the enveloping algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapKind {
    /// Evaluation: T^{(1)}_{i,j} to minus the transposed generator, higher
    /// powers to zero.
    Ev,
    /// Evaluation twisted by the principal anti-automorphism: signs drop
    /// and products reverse.
    BarEv,
    /// Gauss powers: T^{(r)}_{i,j} to (-1)^r times the order-r power at
    /// the transposed position.
    U,
}

fn check_size(setup: &WSetup, m: u16) -> Result<(), AlgebraError> {
    if setup.ctx().n() != m {
        return Err(AlgebraError::BadParameter(format!(
            "map target Q({}) does not match Yangian size {m}",
            setup.ctx().n()
        )));
    }
    Ok(())
}

/// Image of one free word under the chosen map.
pub fn word_image(setup: &WSetup, word: &YWord, map: MapKind) -> Result<UElement, AlgebraError> {
    match map {
        MapKind::Ev => ev_word(setup, word),
        MapKind::BarEv => Ok(ev_word(setup, word)?.alpha()),
        MapKind::U => u_word(setup, word),
    }
}

fn ev_word(setup: &WSetup, word: &YWord) -> Result<UElement, AlgebraError> {
    let ctx = setup.ctx().clone();
    let mut ranks = Vec::with_capacity(word.len());
    for sym in word.factors() {
        if sym.r != 1 {
            return Ok(UElement::zero(ctx));
        }
        debug_assert!(sym.j > 0, "stored words have positive column indices");
        let g = if sym.i > 0 {
            Generator::e(sym.j as u16, sym.i as u16)
        } else {
            Generator::f(sym.j as u16, (-sym.i) as u16)
        };
        ranks.push(ctx.rank(g)?);
    }
    let sign = if ranks.len() % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
    Ok(UElement::from_rank_word(ctx, sign, &ranks))
}

fn u_word(setup: &WSetup, word: &YWord) -> Result<UElement, AlgebraError> {
    let ctx = setup.ctx().clone();
    let mut acc = UElement::one(ctx);
    for sym in word.factors() {
        debug_assert!(sym.j > 0, "stored words have positive column indices");
        let (kind, col) = if sym.i > 0 {
            (GenKind::E, sym.i as u16)
        } else {
            (GenKind::F, (-sym.i) as u16)
        };
        let mut power = setup.sergeev(kind, sym.r, sym.j as u16, col)?;
        if sym.r % 2 == 1 {
            power = power.scale(&scalar::int(-1));
        }
        acc = acc.try_mul(&power)?;
    }
    Ok(acc)
}

/// Image of a Yangian element in the enveloping algebra of Q(m).
pub fn apply(setup: &WSetup, x: &YElement, map: MapKind) -> Result<UElement, AlgebraError> {
    check_size(setup, x.m())?;
    let mut out = UElement::zero(setup.ctx().clone());
    for (w, c) in x.terms() {
        out = out.try_add(&word_image(setup, w, map)?.scale(c))?;
    }
    Ok(out)
}

/// Slotwise image of a Yangian tensor in the tensor power of the
/// enveloping algebra of Q(m).
pub fn push(
    setup: &WSetup,
    x: &YTensorElement,
    map: MapKind,
) -> Result<TensorElement, AlgebraError> {
    check_size(setup, x.m())?;
    let mut out = TensorElement::zero(setup.ctx().clone(), x.slots());
    for (key, c) in x.terms() {
        let images: Vec<UElement> = key
            .iter()
            .map(|w| word_image(setup, w, map))
            .collect::<Result<_, _>>()?;
        if images.iter().any(|e| e.is_zero()) {
            continue;
        }
        out = out.try_add(&TensorElement::from_slots(&images)?.scale(c))?;
    }
    Ok(out)
}
