//! Free generator calculus for the super-Yangian of Q(m).
//!
//! Generators T^{(r)}_{i,j} carry a power r >= 1 and signed indices i, j
//! in +-1..+-m; a negative index contributes odd parity. Words of
//! generators are kept free — no defining relation is imposed — except for
//! two normalizations applied when a symbol is built: the power-zero
//! symbol collapses to a Kronecker delta, and the sign symmetry
//! T^{(r)}_{-i,-j} = (-1)^r T^{(r)}_{i,j} is used to keep the column index
//! positive. The module provides the (opposite) coproducts with their
//! iterated forms, the antipode, and the power-sign twist; the evaluation
//! and composite maps into enveloping algebras live in [`maps`].

pub mod maps;

use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, Zero};

use crate::context::AlgebraError;
use crate::scalar::{self, Scalar};

/// A single Yangian generator T^{(r)}_{i,j}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TSymbol {
    /// Power index r >= 1 once stored in a word.
    pub r: u16,
    /// Signed row index, nonzero.
    pub i: i16,
    /// Signed column index, nonzero; positive in stored words.
    pub j: i16,
}

impl TSymbol {
    /// Parity of the symbol (true = odd).
    pub fn parity(&self) -> bool {
        (self.i < 0) ^ (self.j < 0)
    }

    /// Equivalent symbol with positive column index, and the sign of the
    /// rewriting.
    fn normalized(self) -> (i64, TSymbol) {
        if self.j > 0 {
            (1, self)
        } else {
            let sign = if self.r % 2 == 0 { 1 } else { -1 };
            (sign, TSymbol { r: self.r, i: -self.i, j: -self.j })
        }
    }
}

impl fmt::Display for TSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}[{},{}]", self.r, self.i, self.j)
    }
}

/// A free product of generator symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct YWord {
    factors: Vec<TSymbol>,
}

impl YWord {
    /// The empty word.
    pub fn unit() -> Self {
        YWord { factors: Vec::new() }
    }

    /// The factor symbols in order.
    pub fn factors(&self) -> &[TSymbol] {
        &self.factors
    }

    /// Parity of the word (true = odd).
    pub fn parity(&self) -> bool {
        self.factors.iter().filter(|s| s.parity()).count() % 2 == 1
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A rational combination of free generator words over a fixed size m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YElement {
    m: u16,
    terms: BTreeMap<YWord, Scalar>,
}

impl YElement {
    /// The zero element.
    pub fn zero(m: u16) -> Self {
        YElement { m, terms: BTreeMap::new() }
    }

    /// The unit element.
    pub fn one(m: u16) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(YWord::unit(), scalar::int(1));
        YElement { m, terms }
    }

    /// A single generator symbol; power zero collapses to a delta and a
    /// negative column index is normalized away.
    pub fn symbol(m: u16, r: u16, i: i16, j: i16) -> Result<Self, AlgebraError> {
        check_index(m, i)?;
        check_index(m, j)?;
        if r == 0 {
            return if i == j { Ok(Self::one(m)) } else { Ok(Self::zero(m)) };
        }
        let (sign, sym) = TSymbol { r, i, j }.normalized();
        let mut terms = BTreeMap::new();
        terms.insert(YWord { factors: vec![sym] }, scalar::int(sign));
        Ok(YElement { m, terms })
    }

    /// The underlying size m.
    pub fn m(&self) -> u16 {
        self.m
    }

    /// Terms, sorted by word.
    pub fn terms(&self) -> impl Iterator<Item = (&YWord, &Scalar)> {
        self.terms.iter()
    }

    /// True if this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &YElement) -> Result<(), AlgebraError> {
        if self.m != other.m {
            return Err(AlgebraError::YangianSizeMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    /// Sum of two elements.
    pub fn try_add(&self, other: &YElement) -> Result<YElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_word(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two elements.
    pub fn try_sub(&self, other: &YElement) -> Result<YElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_word(&mut out.terms, w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Free product: concatenation of words.
    pub fn try_mul(&self, other: &YElement) -> Result<YElement, AlgebraError> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut factors = w1.factors.clone();
                factors.extend_from_slice(&w2.factors);
                add_word(&mut terms, YWord { factors }, c1 * c2);
            }
        }
        Ok(YElement { m: self.m, terms })
    }

    /// The element scaled by a rational.
    pub fn scale(&self, c: &Scalar) -> YElement {
        if c.is_zero() {
            return YElement::zero(self.m);
        }
        YElement {
            m: self.m,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// The power-sign twist: each symbol T^{(r)} picks up (-1)^r.
    pub fn power_twist(&self) -> YElement {
        let mut out = YElement::zero(self.m);
        for (w, c) in &self.terms {
            let total: u32 = w.factors.iter().map(|s| s.r as u32).sum();
            let signed = if total % 2 == 0 { c.clone() } else { -c.clone() };
            add_word(&mut out.terms, w.clone(), signed);
        }
        out
    }

    /// The coproduct into two tensor slots.
    pub fn coproduct(&self) -> YTensorElement {
        self.iterated_coproduct(2, false).expect("two slots are valid")
    }

    /// The opposite coproduct into two tensor slots.
    pub fn coproduct_op(&self) -> YTensorElement {
        self.iterated_coproduct(2, true).expect("two slots are valid")
    }

    /// Iterated (opposite) coproduct into `slots` tensor slots, expanding
    /// the last slot at each step.
    pub fn iterated_coproduct(
        &self,
        slots: usize,
        opposite: bool,
    ) -> Result<YTensorElement, AlgebraError> {
        if slots == 0 {
            return Err(AlgebraError::BadParameter(
                "an iterated coproduct needs at least one slot".to_string(),
            ));
        }
        let mut out = YTensorElement {
            m: self.m,
            slots: 1,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (vec![w.clone()], c.clone()))
                .collect(),
        };
        while out.slots < slots {
            out = out.expand_last(opposite)?;
        }
        Ok(out)
    }

    /// The antipode on a combination of scalars and single symbols.
    pub fn antipode(&self) -> Result<YElement, AlgebraError> {
        let mut out = YElement::zero(self.m);
        for (w, c) in &self.terms {
            match w.factors.as_slice() {
                [] => add_word(&mut out.terms, YWord::unit(), c.clone()),
                [sym] => {
                    let image = antipode_symbol(self.m, *sym)?;
                    out = out.try_add(&image.scale(c))?;
                }
                _ => {
                    return Err(AlgebraError::BadSupport(format!(
                        "antipode is only applied to generators, not the word {w}"
                    )))
                }
            }
        }
        Ok(out)
    }
}

fn check_index(m: u16, idx: i16) -> Result<(), AlgebraError> {
    if idx == 0 || idx.unsigned_abs() > m {
        return Err(AlgebraError::BadParameter(format!(
            "index {idx} outside +-1..+-{m}"
        )));
    }
    Ok(())
}

fn add_word(terms: &mut BTreeMap<YWord, Scalar>, w: YWord, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(w) {
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

/// All signed indices +-1..+-m in a fixed order.
pub fn signed_indices(m: u16) -> Vec<i16> {
    let mut out = Vec::with_capacity(2 * m as usize);
    for a in 1..=m as i16 {
        out.push(a);
        out.push(-a);
    }
    out
}

/// Parity of the path sign nu: the number of unordered pairs of distinct
/// odd steps, where a step is odd when its endpoint parities differ.
pub fn nu_parity(path: &[i16]) -> bool {
    let steps: Vec<bool> = path.windows(2).map(|w| (w[0] < 0) ^ (w[1] < 0)).collect();
    let odd = steps.iter().filter(|s| **s).count();
    odd * (odd.saturating_sub(1)) / 2 % 2 == 1
}

/// Antipode of one generator: the signed sum over multiplicative paths of
/// every length up to the power.
fn antipode_symbol(m: u16, sym: TSymbol) -> Result<YElement, AlgebraError> {
    let r = sym.r;
    let mut out = YElement::zero(m);
    let indices = signed_indices(m);
    for parts in 1..=r {
        let part_sign = if parts % 2 == 0 { 1i64 } else { -1 };
        for composition in compositions(r, parts) {
            for inner in index_paths(&indices, parts as usize - 1) {
                let mut path = Vec::with_capacity(parts as usize + 1);
                path.push(sym.i);
                path.extend_from_slice(&inner);
                path.push(sym.j);
                let nu = if nu_parity(&path) { -1i64 } else { 1 };
                let mut word = YElement::one(m);
                for (t, rt) in composition.iter().enumerate() {
                    let factor = YElement::symbol(m, *rt, path[t], path[t + 1])?;
                    word = word.try_mul(&factor)?;
                }
                out = out.try_add(&word.scale(&scalar::int(part_sign * nu)))?;
            }
        }
    }
    Ok(out)
}

/// All ways to write `total` as an ordered sum of `parts` positive parts.
fn compositions(total: u16, parts: u16) -> Vec<Vec<u16>> {
    fn rec(total: u16, parts: u16, acc: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if parts == 1 {
            if total >= 1 {
                acc.push(total);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            acc.push(first);
            rec(total - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// All paths of the given length over the index set.
fn index_paths(indices: &[i16], len: usize) -> Vec<Vec<i16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * indices.len());
        for path in &out {
            for idx in indices {
                let mut p = path.clone();
                p.push(*idx);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
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
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} * {w}")?;
            }
        }
        Ok(())
    }
}

/// A rational combination of pure tensors of free words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YTensorElement {
    m: u16,
    slots: usize,
    terms: BTreeMap<Vec<YWord>, Scalar>,
}

impl YTensorElement {
    /// The zero tensor.
    pub fn zero(m: u16, slots: usize) -> Self {
        YTensorElement { m, slots, terms: BTreeMap::new() }
    }

    /// The unit tensor.
    pub fn unit(m: u16, slots: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![YWord::unit(); slots], scalar::int(1));
        YTensorElement { m, slots, terms }
    }

    /// The underlying size m.
    pub fn m(&self) -> u16 {
        self.m
    }

    /// Number of tensor slots.
    pub fn slots(&self) -> usize {
        self.slots
    }

    /// Terms, sorted by the slot words.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<YWord>, &Scalar)> {
        self.terms.iter()
    }

    /// True if this is the zero tensor.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &YTensorElement) -> Result<(), AlgebraError> {
        if self.m != other.m {
            return Err(AlgebraError::YangianSizeMismatch { left: self.m, right: other.m });
        }
        if self.slots != other.slots {
            return Err(AlgebraError::SlotMismatch { left: self.slots, right: other.slots });
        }
        Ok(())
    }

    /// Sum of two tensors.
    pub fn try_add(&self, other: &YTensorElement) -> Result<YTensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_tensor_word(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two tensors.
    pub fn try_sub(&self, other: &YTensorElement) -> Result<YTensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_tensor_word(&mut out.terms, k.clone(), -c.clone());
        }
        Ok(out)
    }

    /// The tensor scaled by a rational.
    pub fn scale(&self, c: &Scalar) -> YTensorElement {
        if c.is_zero() {
            return YTensorElement::zero(self.m, self.slots);
        }
        YTensorElement {
            m: self.m,
            slots: self.slots,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Graded product: right slot words move past later left slots with
    /// the parity sign; slots concatenate freely.
    pub fn try_mul(&self, other: &YTensorElement) -> Result<YTensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            let left_par: Vec<bool> = k1.iter().map(|w| w.parity()).collect();
            for (k2, c2) in &other.terms {
                let mut exp = 0usize;
                for (i, w2) in k2.iter().enumerate() {
                    if w2.parity() {
                        exp += left_par[i + 1..].iter().filter(|p| **p).count();
                    }
                }
                let mut coeff = c1 * c2;
                if exp % 2 == 1 {
                    coeff = -coeff;
                }
                let key: Vec<YWord> = k1
                    .iter()
                    .zip(k2)
                    .map(|(w1, w2)| {
                        let mut factors = w1.factors.clone();
                        factors.extend_from_slice(&w2.factors);
                        YWord { factors }
                    })
                    .collect();
                add_tensor_word(&mut terms, key, coeff);
            }
        }
        Ok(YTensorElement { m: self.m, slots: self.slots, terms })
    }

    /// Apply the (opposite) coproduct to the word in one slot, splicing
    /// the two new slots in its place. Coassociativity makes the result
    /// of repeated expansions independent of the slot order.
    pub fn expand_slot(
        &self,
        slot: usize,
        opposite: bool,
    ) -> Result<YTensorElement, AlgebraError> {
        if slot >= self.slots {
            return Err(AlgebraError::BadParameter(format!(
                "slot {slot} outside 0..{}",
                self.slots
            )));
        }
        let mut terms = BTreeMap::new();
        for (key, c) in &self.terms {
            let expanded = word_coproduct(self.m, &key[slot], opposite)?;
            for (pair, pc) in &expanded.terms {
                let mut k = key[..slot].to_vec();
                k.extend_from_slice(pair);
                k.extend_from_slice(&key[slot + 1..]);
                add_tensor_word(&mut terms, k, c * pc);
            }
        }
        Ok(YTensorElement { m: self.m, slots: self.slots + 1, terms })
    }

    fn expand_last(&self, opposite: bool) -> Result<YTensorElement, AlgebraError> {
        self.expand_slot(self.slots - 1, opposite)
    }
}

/// Coproduct of a whole word: the product of the symbol coproducts.
fn word_coproduct(m: u16, w: &YWord, opposite: bool) -> Result<YTensorElement, AlgebraError> {
    let mut out = YTensorElement::unit(m, 2);
    for sym in &w.factors {
        out = out.try_mul(&symbol_coproduct(m, *sym, opposite)?)?;
    }
    Ok(out)
}

/// Coproduct of one symbol: the sum over power splits and middle indices,
/// with the parity sign on the straight coproduct and none on the
/// opposite one.
fn symbol_coproduct(m: u16, sym: TSymbol, opposite: bool) -> Result<YTensorElement, AlgebraError> {
    let mut terms = BTreeMap::new();
    for s in 0..=sym.r {
        for k in signed_indices(m) {
            let left = YElement::symbol(m, s, sym.i, k)?;
            let right = YElement::symbol(m, sym.r - s, k, sym.j)?;
            if left.is_zero() || right.is_zero() {
                continue;
            }
            let sign = if opposite {
                1i64
            } else {
                let pi = sym.i < 0;
                let pj = sym.j < 0;
                let pk = k < 0;
                if (pi ^ pk) && (pj ^ pk) {
                    -1
                } else {
                    1
                }
            };
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    let key = if opposite {
                        vec![rw.clone(), lw.clone()]
                    } else {
                        vec![lw.clone(), rw.clone()]
                    };
                    add_tensor_word(&mut terms, key, lc * rc * scalar::int(sign));
                }
            }
        }
    }
    Ok(YTensorElement { m, slots: 2, terms })
}

fn add_tensor_word(terms: &mut BTreeMap<Vec<YWord>, Scalar>, k: Vec<YWord>, c: Scalar) {
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

impl fmt::Display for YTensorElement {
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
            if key.iter().all(|w| w.is_empty()) {
                write!(f, "{mag}")?;
            } else {
                let slots: Vec<String> = key.iter().map(|w| w.to_string()).collect();
                write!(f, "{mag} * {}", slots.join(" | "))?;
            }
        }
        Ok(())
    }
}
