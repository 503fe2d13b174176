//! Exhaustive relation sweeps backing the acceptance tests: commutation
//! of generators with Gauss powers in the enveloping algebra, and
//! vanishing of the quadratic defining-relation images under the
//! evaluation and Gauss-power maps.

use crate::context::AlgebraError;
use crate::element::UElement;
use crate::generator::{GenKind, Generator};
use crate::scalar;
use crate::walgebra::WSetup;
use crate::yangian::maps::{self, MapKind};
use crate::yangian::{signed_indices, YElement};

use rayon::prelude::*;

/// First failing commutation identity between a generator and a Gauss
/// power of order up to `m_max`, described as text; `None` if all hold.
pub fn sergeev_commutation_failure(
    setup: &WSetup,
    m_max: u16,
) -> Result<Option<String>, AlgebraError> {
    let ctx = setup.ctx().clone();
    let n = ctx.n();
    for m in 1..=m_max {
        // The odd-family lines flip sign at even orders.
        let twist = if m % 2 == 1 { scalar::int(1) } else { scalar::int(-1) };
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for t in 1..=n {
                        let e_ij = UElement::generator(ctx.clone(), Generator::e(i, j))?;
                        let f_ij = UElement::generator(ctx.clone(), Generator::f(i, j))?;
                        let lines: [(GenKind, GenKind, UElement); 4] = [
                            (GenKind::E, GenKind::E, e_ij.clone()),
                            (GenKind::E, GenKind::F, e_ij),
                            (GenKind::F, GenKind::E, f_ij.clone()),
                            (GenKind::F, GenKind::F, f_ij),
                        ];
                        for (low, high, gen) in lines {
                            let power = setup.sergeev(high, m, k, t)?;
                            let got = gen.try_super_commutator(&power)?;
                            // Result family: matching parities commute
                            // into the even family, mixed into the odd.
                            let out = if low == high { GenKind::E } else { GenKind::F };
                            let mut want = UElement::zero(ctx.clone());
                            if j == k {
                                let image = setup.sergeev(out, m, i, t)?;
                                let image = if low == GenKind::F {
                                    image.scale(&twist)
                                } else {
                                    image
                                };
                                want = want.try_add(&image)?;
                            }
                            if i == t {
                                let image = setup.sergeev(out, m, k, j)?;
                                // Only the odd-odd line adds its second term.
                                if low == GenKind::F && high == GenKind::F {
                                    want = want.try_add(&image)?;
                                } else {
                                    want = want.try_sub(&image)?;
                                }
                            }
                            if got != want {
                                return Ok(Some(format!(
                                    "[{:?}({i},{j}), {:?}^({m})({k},{t})]: expected {want}, got {got}",
                                    low, high
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn index_parity(i: i16) -> u32 {
    (i < 0) as u32
}

fn y_symbol(m: u16, r: u16, i: i16, j: i16) -> Result<YElement, AlgebraError> {
    YElement::symbol(m, r, i, j)
}

/// Super commutator of two Yangian elements of definite parities.
fn y_bracket(
    a: &YElement,
    b: &YElement,
    pa: bool,
    pb: bool,
) -> Result<YElement, AlgebraError> {
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    if pa && pb {
        ab.try_add(&ba)
    } else {
        ab.try_sub(&ba)
    }
}

/// The quadratic defining relation at orders (mo, r) and indices
/// (i, j, k, t), as a free element: bracket side minus product side.
fn quadratic_relation(
    msize: u16,
    mo: u16,
    r: u16,
    i: i16,
    j: i16,
    k: i16,
    t: i16,
) -> Result<YElement, AlgebraError> {
    let (pi, pk, pt) = (index_parity(i), index_parity(k), index_parity(t));
    let sym_parity = |a: i16, b: i16| index_parity(a) != index_parity(b);
    let bracket_one = y_bracket(
        &y_symbol(msize, mo + 1, i, j)?,
        &y_symbol(msize, r - 1, k, t)?,
        sym_parity(i, j),
        sym_parity(k, t),
    )?;
    let bracket_two = y_bracket(
        &y_symbol(msize, mo - 1, i, j)?,
        &y_symbol(msize, r + 1, k, t)?,
        sym_parity(i, j),
        sym_parity(k, t),
    )?;
    let front = if (pi * pk + pi * pt + pk * pt) % 2 == 0 {
        scalar::int(1)
    } else {
        scalar::int(-1)
    };
    let lhs = bracket_one.try_sub(&bracket_two)?.scale(&front);

    let prod = |ra: u16, a1: i16, a2: i16, rb: u16, b1: i16, b2: i16| -> Result<YElement, AlgebraError> {
        y_symbol(msize, ra, a1, a2)?.try_mul(&y_symbol(msize, rb, b1, b2)?)
    };
    let mut rhs = prod(mo, k, j, r - 1, i, t)?
        .try_add(&prod(mo - 1, k, j, r, i, t)?)?
        .try_sub(&prod(r - 1, k, j, mo, i, t)?)?
        .try_sub(&prod(r, k, j, mo - 1, i, t)?)?;
    let tail = prod(mo, -k, j, r - 1, -i, t)?
        .scale(&scalar::int(-1))
        .try_add(&prod(mo - 1, -k, j, r, -i, t)?)?
        .try_add(&prod(r - 1, k, -j, mo, i, -t)?)?
        .try_sub(&prod(r, k, -j, mo - 1, i, -t)?)?;
    let tail_sign = if (pk + pt) % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
    rhs = rhs.try_add(&tail.scale(&tail_sign))?;
    lhs.try_sub(&rhs)
}

/// First tuple whose defining-relation image under `map` fails to vanish,
/// described as text; `None` if all images vanish. Sweeps orders 1..=
/// `order_max` exhaustively, falling back to an evenly strided sample of
/// at most `sample_cap` tuples when the exhaustive set exceeds 10^4.
pub fn yangian_relation_image_failure(
    setup: &WSetup,
    map: MapKind,
    order_max: u16,
    sample_cap: usize,
) -> Result<Option<String>, AlgebraError> {
    let msize = setup.ctx().n();
    let indices = signed_indices(msize);
    let mut tuples: Vec<(u16, u16, i16, i16, i16, i16)> = Vec::new();
    for mo in 1..=order_max {
        for r in 1..=order_max {
            for &i in &indices {
                for &j in &indices {
                    for &k in &indices {
                        for &t in &indices {
                            tuples.push((mo, r, i, j, k, t));
                        }
                    }
                }
            }
        }
    }
    if tuples.len() > 10_000 {
        let stride = tuples.len().div_ceil(sample_cap);
        tuples = tuples.into_iter().step_by(stride.max(1)).collect();
    }
    let failure = tuples.par_iter().find_map_first(|&(mo, r, i, j, k, t)| {
        let relation = match quadratic_relation(msize, mo, r, i, j, k, t) {
            Ok(rel) => rel,
            Err(e) => return Some(Err(e)),
        };
        match maps::apply(setup, &relation, map) {
            Ok(image) if image.is_zero() => None,
            Ok(image) => Some(Ok(format!(
                "relation at orders ({mo}, {r}), indices ({i}, {j}, {k}, {t}): image {image}"
            ))),
            Err(e) => Some(Err(e)),
        }
    });
    failure.transpose()
}
