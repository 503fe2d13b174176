//! Independent 2n x 2n matrix model of Q(n) used as a cross-check oracle.
//!
//! The defining representation sends the even generator e_{ij} to the
//! matrix unit E_ij repeated in both diagonal n x n blocks and the odd
//! generator f_{ij} to E_ij repeated in both off-diagonal blocks. Products
//! and supercommutators of exact rational matrices computed here never
//! touch the symbolic normal-form machinery, so agreement between the two
//! is evidence for the structure constants and the straightening rules,
//! not a tautology.

use num::Zero;

use crate::context::Context;
use crate::element::UElement;
use crate::generator::{GenKind, Generator};
use crate::scalar::{self, Scalar};

/// Dense square matrix of exact rationals.
pub type Matrix = Vec<Vec<Scalar>>;

/// The 2n x 2n zero matrix.
pub fn zero_matrix(n: u16) -> Matrix {
    let d = 2 * n as usize;
    vec![vec![Scalar::zero(); d]; d]
}

/// The 2n x 2n identity matrix.
pub fn identity_matrix(n: u16) -> Matrix {
    let mut m = zero_matrix(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = scalar::int(1);
    }
    m
}

/// Defining-representation image of a single generator.
pub fn generator_matrix(n: u16, g: Generator) -> Matrix {
    let mut m = zero_matrix(n);
    let (r, c) = (g.row as usize - 1, g.col as usize - 1);
    match g.kind {
        GenKind::E => {
            m[r][c] = scalar::int(1);
            m[n as usize + r][n as usize + c] = scalar::int(1);
        }
        GenKind::F => {
            m[r][n as usize + c] = scalar::int(1);
            m[n as usize + r][c] = scalar::int(1);
        }
    }
    m
}

/// Matrix sum.
pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

/// Matrix scaled by a rational.
pub fn mat_scale(a: &Matrix, c: &Scalar) -> Matrix {
    a.iter()
        .map(|row| row.iter().map(|x| x * c).collect())
        .collect()
}

/// Matrix product.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut out = vec![vec![Scalar::zero(); d]; d];
    for i in 0..d {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += aik * bkj;
                }
            }
        }
    }
    out
}

/// Supercommutator a b - (-1)^{p(a) p(b)} b a of matrices with the given
/// parities.
pub fn mat_super_commutator(a: &Matrix, b: &Matrix, a_odd: bool, b_odd: bool) -> Matrix {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    let sign = if a_odd && b_odd { scalar::int(1) } else { scalar::int(-1) };
    mat_add(&ab, &mat_scale(&ba, &sign))
}

/// True if every entry is zero.
pub fn mat_is_zero(a: &Matrix) -> bool {
    a.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

/// Image of an element in the defining representation: each normal-form
/// term contributes its coefficient times the left-to-right product of its
/// factor matrices.
pub fn matrix_rep(ctx: &Context, e: &UElement) -> Matrix {
    let mut out = zero_matrix(ctx.n());
    for (mono, coeff) in e.terms() {
        let mut prod = identity_matrix(ctx.n());
        for rank in mono.ranks() {
            prod = mat_mul(&prod, &generator_matrix(ctx.n(), ctx.generator(rank)));
        }
        out = mat_add(&out, &mat_scale(&prod, coeff));
    }
    out
}

/// Image of a plain word of generators (no straightening involved).
pub fn word_matrix(n: u16, word: &[Generator]) -> Matrix {
    let mut prod = identity_matrix(n);
    for g in word {
        prod = mat_mul(&prod, &generator_matrix(n, *g));
    }
    prod
}
