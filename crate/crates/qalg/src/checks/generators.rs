//! Checks on the projected Gauss powers and distinguished generators:
//! delta collapse, signed diagonal sums, top symbols, invariance of
//! pairwise products.

use crate::context::AlgebraError;
use crate::element::UElement;
use crate::generator::{GenKind, Generator};
use crate::scalar;
use crate::walgebra::WSetup;

use rayon::prelude::*;

use super::{Failure, Verdict};

/// Family tag in failure parameter maps: 0 even, 1 odd.
pub(crate) fn family_tag(kind: GenKind) -> i64 {
    match kind {
        GenKind::E => 0,
        GenKind::F => 1,
    }
}

/// Orders 1..l-1: the projection keeps only the even block delta at the
/// first off-diagonal order and kills everything else.
pub(crate) fn lem1(setup: &WSetup) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    for kind in [GenKind::E, GenKind::F] {
        for r in 1..l {
            for m in r + 1..=l {
                for p in 1..=blocks {
                    for q in 1..=blocks {
                        let power = setup.sergeev(kind, r, l * (p - 1) + m, l * (q - 1) + 1)?;
                        let got = setup.project_pi(&power)?;
                        let want = if kind == GenKind::E && m == r + 1 && p == q {
                            UElement::one(ctx.clone())
                        } else {
                            UElement::zero(ctx.clone())
                        };
                        if got != want {
                            return Ok(Verdict::Fail(Failure {
                                at: vec![
                                    ("family", family_tag(kind)),
                                    ("r", r as i64),
                                    ("m", m as i64),
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
    }
    Ok(Verdict::Pass)
}

/// Orders 1..l: the projected order-m power anchored at block row offset m
/// is the sum of the first m diagonal entries, with alternating signs in
/// the odd family.
pub(crate) fn lem2(setup: &WSetup) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    for kind in [GenKind::E, GenKind::F] {
        for m in 1..=l {
            for p in 1..=blocks {
                for q in 1..=blocks {
                    let power = setup.sergeev(kind, m, l * (p - 1) + m, l * (q - 1) + 1)?;
                    let got = setup.project_pi(&power)?;
                    let mut want = UElement::zero(ctx.clone());
                    for k in 1..=m {
                        let g = Generator { kind, row: l * (p - 1) + k, col: l * (q - 1) + k };
                        let sign = match kind {
                            GenKind::E => 1,
                            GenKind::F => {
                                if k % 2 == 1 {
                                    1
                                } else {
                                    -1
                                }
                            }
                        };
                        let term = UElement::generator(ctx.clone(), g)?.scale(&scalar::int(sign));
                        want = want.try_add(&term)?;
                    }
                    if got != want {
                        return Ok(Verdict::Fail(Failure {
                            at: vec![
                                ("family", family_tag(kind)),
                                ("m", m as i64),
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

/// Top symbols of all distinguished generators match the centralizer
/// basis elementwise, carry bidegree (2k+2, 2k), and form a bijection.
pub(crate) fn lem3(setup: &WSetup) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    let basis = setup.centralizer_basis();
    let mut tops = Vec::with_capacity(basis.len());
    let mut index = 0usize;
    for kind in [GenKind::E, GenKind::F] {
        for k in 0..l {
            for p in 1..=blocks {
                for q in 1..=blocks {
                    let at = vec![
                        ("family", family_tag(kind)),
                        ("k", k as i64),
                        ("p", p as i64),
                        ("q", q as i64),
                    ];
                    let top = setup.top_symbol(&setup.w_generator(kind, p, q, k + 1)?);
                    let want = &basis[index];
                    if top != *want {
                        return Ok(Verdict::Fail(Failure {
                            at,
                            expected: want.render(ctx),
                            actual: top.render(ctx),
                        }));
                    }
                    let want_bidegree = (2 * k as i64 + 2, 2 * k as i64);
                    if top.bidegree(ctx) != Some(want_bidegree) {
                        let actual = match top.bidegree(ctx) {
                            Some((d, w)) => format!("Kazhdan degree {d}, weight {w}"),
                            None => "zero symbol".to_string(),
                        };
                        return Ok(Verdict::Fail(Failure {
                            at,
                            expected: format!(
                                "Kazhdan degree {}, weight {}",
                                want_bidegree.0, want_bidegree.1
                            ),
                            actual,
                        }));
                    }
                    tops.push(top);
                    index += 1;
                }
            }
        }
    }
    // Bijection onto the basis: equal as sorted lists, without repeats.
    let mut sorted_tops = tops.clone();
    sorted_tops.sort();
    for (i, pair) in sorted_tops.windows(2).enumerate() {
        if pair[0] == pair[1] {
            return Ok(Verdict::Fail(Failure {
                at: vec![("position", i as i64)],
                expected: "pairwise distinct top symbols".to_string(),
                actual: pair[0].render(ctx),
            }));
        }
    }
    let mut sorted_basis = basis;
    sorted_basis.sort();
    for (i, (top, want)) in sorted_tops.iter().zip(&sorted_basis).enumerate() {
        if top != want {
            return Ok(Verdict::Fail(Failure {
                at: vec![("position", i as i64)],
                expected: want.render(ctx),
                actual: top.render(ctx),
            }));
        }
    }
    Ok(Verdict::Pass)
}

const PAIR_KEYS_A: [&str; 4] = ["family_a", "k_a", "p_a", "q_a"];
const PAIR_KEYS_B: [&str; 4] = ["family_b", "k_b", "p_b", "q_b"];

fn membership_residue(
    setup: &WSetup,
    at: Vec<(&'static str, i64)>,
    y: &UElement,
) -> Option<Result<Failure, AlgebraError>> {
    match setup.membership_failure(y) {
        Err(e) => Some(Err(e)),
        Ok(None) => None,
        Ok(Some((a, residue))) => {
            let mut at = at;
            at.push(("ad_family", family_tag(a.kind)));
            at.push(("ad_row", a.row as i64));
            at.push(("ad_col", a.col as i64));
            Some(Ok(Failure { at, expected: "0".to_string(), actual: residue.to_string() }))
        }
    }
}

/// Every distinguished generator, and every pairwise product of two, lies
/// in the W-algebra.
pub(crate) fn t2(setup: &WSetup) -> Result<Verdict, AlgebraError> {
    let ctx = setup.ctx();
    let (l, blocks) = (ctx.l(), ctx.blocks());
    let mut gens: Vec<([i64; 4], UElement)> = Vec::new();
    for kind in [GenKind::E, GenKind::F] {
        for k in 1..=l {
            for p in 1..=blocks {
                for q in 1..=blocks {
                    let label = [family_tag(kind), k as i64, p as i64, q as i64];
                    gens.push((label, setup.w_generator(kind, p, q, k)?));
                }
            }
        }
    }
    let single = gens.par_iter().find_map_first(|(label, g)| {
        let at =
            vec![("family", label[0]), ("k", label[1]), ("p", label[2]), ("q", label[3])];
        membership_residue(setup, at, g)
    });
    if let Some(found) = single {
        return found.map(Verdict::Fail);
    }
    let pairs: Vec<(usize, usize)> =
        (0..gens.len()).flat_map(|i| (i..gens.len()).map(move |j| (i, j))).collect();
    let pair_failure = pairs.par_iter().find_map_first(|&(i, j)| {
        let product = match gens[i].1.try_mul(&gens[j].1) {
            Ok(p) => p,
            Err(e) => return Some(Err(e)),
        };
        let at = PAIR_KEYS_A
            .iter()
            .zip(gens[i].0)
            .chain(PAIR_KEYS_B.iter().zip(gens[j].0))
            .map(|(&key, value)| (key, value))
            .collect();
        membership_residue(setup, at, &product)
    });
    match pair_failure {
        Some(found) => found.map(Verdict::Fail),
        None => Ok(Verdict::Pass),
    }
}
