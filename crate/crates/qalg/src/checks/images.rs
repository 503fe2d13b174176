//! Checks comparing Yangian coproduct images against the ordered
//! factor-sum elements of the weight-zero subalgebra.
//!
//! The shared building block is `factor_sum`: a sum over block-index
//! paths and monotone diagonal sequences of products of (x +- xi)
//! factors, split into its even and odd parts. The weakly-decreasing
//! variant matches opposite-coproduct images under the Gauss-power map;
//! the strictly-increasing variant matches plain-coproduct images under
//! twisted evaluation, and vanishes once the order exceeds the block
//! size.

use crate::context::AlgebraError;
use crate::element::UElement;
use crate::generator::GenKind;
use crate::scalar::{self, Scalar};
use crate::tensor::TensorElement;
use crate::walgebra::WSetup;
use crate::yangian::maps::{self, MapKind};
use crate::yangian::YElement;

use super::{generators::family_tag, Failure, Verdict};

/// Parity half of an ordered factor sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Half {
    Even,
    Odd,
}

/// All diagonal index sequences of length `r` in 1..=l: weakly
/// decreasing, or strictly increasing when `strict` is set.
fn diag_sequences(l: u16, r: u16, strict: bool) -> Vec<Vec<u16>> {
    fn extend(out: &mut Vec<Vec<u16>>, cur: &mut Vec<u16>, l: u16, r: usize, strict: bool) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        if strict {
            let lo = cur.last().map_or(1, |&last| last + 1);
            for i in lo..=l {
                cur.push(i);
                extend(out, cur, l, r, strict);
                cur.pop();
            }
        } else {
            let hi = cur.last().copied().unwrap_or(l);
            for i in 1..=hi {
                cur.push(i);
                extend(out, cur, l, r, strict);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut out, &mut Vec::with_capacity(r as usize), l, r as usize, strict);
    out
}

/// All block-index paths p = p_0, p_1, ..., p_{r-1}, p_r = q with free
/// middle entries in 1..=blocks.
fn block_paths(blocks: u16, r: u16, p: u16, q: u16) -> Vec<Vec<u16>> {
    let mut out = vec![vec![p]];
    for _ in 1..r {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=blocks).map(move |mid| {
                    let mut path = prefix.clone();
                    path.push(mid);
                    path
                })
            })
            .collect();
    }
    for path in &mut out {
        path.push(q);
    }
    out
}

/// Ordered factor-sum element of order `r` from block `p` to block `q`:
/// the parity half of the sum over paths and diagonal sequences of the
/// products of (x +- xi) factors, the sign of the t-th factor being
/// (-1)^(r-t). Order 0 is the block delta in the even half, zero in the
/// odd half.
pub(crate) fn factor_sum(
    setup: &WSetup,
    half: Half,
    r: u16,
    q: u16,
    p: u16,
    strict: bool,
) -> Result<UElement, AlgebraError> {
    let ctx = setup.ctx().clone();
    if r == 0 {
        return Ok(if half == Half::Even && q == p {
            UElement::one(ctx)
        } else {
            UElement::zero(ctx)
        });
    }
    let (l, blocks) = (ctx.l(), ctx.blocks());
    let mut total = UElement::zero(ctx.clone());
    for path in block_paths(blocks, r, p, q) {
        for seq in diag_sequences(l, r, strict) {
            let mut product = UElement::one(ctx.clone());
            for (t, &i) in seq.iter().enumerate() {
                let x = setup.x_element(i, path[t], path[t + 1])?;
                let xi = setup.xi_element(i, path[t], path[t + 1])?;
                let factor = if (r as usize - 1 - t) % 2 == 0 {
                    x.try_add(&xi)?
                } else {
                    x.try_sub(&xi)?
                };
                product = product.try_mul(&factor)?;
            }
            total = total.try_add(&product)?;
        }
    }
    let (even, odd) = total.parity_split();
    Ok(match half {
        Half::Even => even,
        Half::Odd => odd,
    })
}

/// The order-(l+k-1) Gauss power anchored at block row p and block column
/// q, projected and stripped to the weight-zero subalgebra.
fn projected_diagonal_power(
    setup: &WSetup,
    kind: GenKind,
    k: u16,
    p: u16,
    q: u16,
) -> Result<UElement, AlgebraError> {
    let l = setup.ctx().l();
    let power = setup.sergeev(kind, l + k - 1, l * p, l * (q - 1) + 1)?;
    setup.theta(&setup.project_pi(&power)?)
}

fn sign_of_order(r: u16) -> Scalar {
    if r % 2 == 0 {
        scalar::int(1)
    } else {
        scalar::int(-1)
    }
}

const FAMILIES: [(GenKind, Half); 2] = [(GenKind::E, Half::Even), (GenKind::F, Half::Odd)];

/// Both parity halves: the fully projected Gauss power equals the
/// weakly-decreasing factor sum.
pub(crate) fn t3(setup: &WSetup, k_max: u16) -> Result<Verdict, AlgebraError> {
    let blocks = setup.ctx().blocks();
    for k in 1..=k_max {
        for p in 1..=blocks {
            for q in 1..=blocks {
                for (kind, half) in FAMILIES {
                    let got = projected_diagonal_power(setup, kind, k, p, q)?;
                    let want = factor_sum(setup, half, k, q, p, false)?;
                    if got != want {
                        return Ok(Verdict::Fail(Failure {
                            at: vec![
                                ("family", family_tag(kind)),
                                ("k", k as i64),
                                ("p", p as i64),
                                ("q", q as i64),
                            ],
                            expected: want.to_string(),
                            actual: got.to_string(),
                        }));
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// The Gauss-power image of the opposite coproduct equals the signed
/// factor sum in the tensor model, along both the factor-sum and the
/// projected-power routes.
pub(crate) fn t4(setup: &WSetup, r_max: u16) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    let slot = setup.slot_setup();
    for r in 1..=r_max {
        let sign = sign_of_order(r);
        for p in 1..=blocks {
            for q in 1..=blocks {
                for (kind, half) in FAMILIES {
                    let row = if kind == GenKind::E { q as i16 } else { -(q as i16) };
                    let symbol = YElement::symbol(blocks, r, row, p as i16)?;
                    let coproduct = symbol.iterated_coproduct(l as usize, true)?;
                    let pushed = maps::push(slot, &coproduct, MapKind::U)?;
                    let at = vec![
                        ("family", family_tag(kind)),
                        ("r", r as i64),
                        ("p", p as i64),
                        ("q", q as i64),
                    ];
                    let sum = factor_sum(setup, half, r, q, p, false)?;
                    let want = setup.g0_to_tensor(&sum)?.scale(&sign);
                    if pushed != want {
                        return Ok(Verdict::Fail(Failure {
                            at,
                            expected: want.to_string(),
                            actual: pushed.to_string(),
                        }));
                    }
                    let projected = projected_diagonal_power(setup, kind, r, p, q)?;
                    let from_power = setup.g0_to_tensor(&projected)?.scale(&sign);
                    if pushed != from_power {
                        let mut at = at;
                        at.push(("route", 1));
                        return Ok(Verdict::Fail(Failure {
                            at,
                            expected: from_power.to_string(),
                            actual: pushed.to_string(),
                        }));
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Twisted evaluation of the antipode coproduct equals the Gauss-power
/// image of the opposite coproduct, on even-plus-odd generator sums.
pub(crate) fn kl(setup: &WSetup, r_max: u16, k_max: u16) -> Result<Verdict, AlgebraError> {
    let blocks = setup.ctx().blocks();
    let slot = setup.slot_setup();
    for r in 1..=r_max {
        for q in 1..=blocks {
            for p in 1..=blocks {
                let plus = YElement::symbol(blocks, r, q as i16, p as i16)?
                    .try_add(&YElement::symbol(blocks, r, -(q as i16), p as i16)?)?;
                let antipode = plus.antipode()?;
                for k in 1..=k_max {
                    let lhs =
                        maps::push(slot, &antipode.iterated_coproduct(k as usize, false)?, MapKind::BarEv)?;
                    let rhs =
                        maps::push(slot, &plus.iterated_coproduct(k as usize, true)?, MapKind::U)?;
                    if lhs != rhs {
                        return Ok(Verdict::Fail(Failure {
                            at: vec![
                                ("r", r as i64),
                                ("k", k as i64),
                                ("q", q as i64),
                                ("p", p as i64),
                            ],
                            expected: rhs.to_string(),
                            actual: lhs.to_string(),
                        }));
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Twisted evaluation of the plain coproduct equals the strict factor
/// sum; orders above the block size vanish on both sides.
pub(crate) fn cor1(setup: &WSetup, r_max: u16) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    let slot = setup.slot_setup();
    for r in 1..=r_max {
        for q in 1..=blocks {
            for p in 1..=blocks {
                for (kind, half) in FAMILIES {
                    let row = if kind == GenKind::E { q as i16 } else { -(q as i16) };
                    let symbol = YElement::symbol(blocks, r, row, p as i16)?;
                    let coproduct = symbol.iterated_coproduct(l as usize, false)?;
                    let got = maps::push(slot, &coproduct, MapKind::BarEv)?;
                    let want = setup.g0_to_tensor(&factor_sum(setup, half, r, q, p, true)?)?;
                    if got != want {
                        return Ok(Verdict::Fail(Failure {
                            at: vec![
                                ("family", family_tag(kind)),
                                ("r", r as i64),
                                ("q", q as i64),
                                ("p", p as i64),
                            ],
                            expected: want.to_string(),
                            actual: got.to_string(),
                        }));
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// The signed convolution of the weakly-decreasing and strict factor-sum
/// families vanishes in the tensor model.
pub(crate) fn rel(setup: &WSetup, r_max: u16) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    let slot_ctx = setup.slot_setup().ctx().clone();
    for r in 1..=r_max {
        let sign_r = sign_of_order(r);
        for p in 1..=blocks {
            for q in 1..=blocks {
                let mut total = TensorElement::zero(slot_ctx.clone(), l as usize);
                for s in 0..=r {
                    let t = r - s;
                    let sign_s = sign_of_order(s);
                    for j in 1..=blocks {
                        let left = factor_sum(setup, Half::Even, s, j, p, false)?
                            .scale(&sign_s)
                            .try_add(&factor_sum(setup, Half::Odd, s, j, p, false)?.scale(&sign_r))?;
                        let right = factor_sum(setup, Half::Even, t, q, j, true)?
                            .try_add(&factor_sum(setup, Half::Odd, t, q, j, true)?)?;
                        let product =
                            setup.g0_to_tensor(&left)?.try_mul(&setup.g0_to_tensor(&right)?)?;
                        total = total.try_add(&product)?;
                    }
                }
                if !total.is_zero() {
                    return Ok(Verdict::Fail(Failure {
                        at: vec![("r", r as i64), ("p", p as i64), ("q", q as i64)],
                        expected: "0".to_string(),
                        actual: total.to_string(),
                    }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}
