//! Per-(n, l) generator tables: total order, gradings, character values,
//! and the full structure-constant table.
//!
//! A `Context` fixes the block configuration (n, l) with l | n and
//! precomputes everything elements need: a total order on the 2n^2
//! generators (their *ranks*), parities, the even grading weights, the
//! character values on the negative part, and the supercommutator of every
//! generator pair. All elements hold an `Arc<Context>` and agree on ranks,
//! so monomial comparison is plain integer comparison.
//!
//! The generator order sorts all nonnegative-weight generators before all
//! negative-weight ones (weights ascending within each class, then kind
//! `E` before `F`, then row/column lexicographic). Sorted monomials thus
//! always carry their negative-part factors as a contiguous rightmost
//! suffix, which is what makes the quotient projection a pure
//! right-substitution.

use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

use crate::generator::{GenKind, Generator};

/// Errors from constructing contexts or combining incompatible values.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// The block size must divide the matrix size.
    #[error("l must divide n (n = {n}, l = {l})")]
    UnevenBlocks {
        /// Ambient matrix size.
        n: u16,
        /// Requested block size.
        l: u16,
    },
    /// Sizes must be positive.
    #[error("n and l must be positive (n = {n}, l = {l})")]
    EmptyAlgebra {
        /// Ambient matrix size.
        n: u16,
        /// Requested block size.
        l: u16,
    },
    /// A generator index fell outside `1..=n`.
    #[error("generator {gen} lies outside the ambient algebra Q({n})")]
    OutOfRange {
        /// The offending generator.
        gen: Generator,
        /// Ambient size of the context it was used with.
        n: u16,
    },
    /// Two operands belong to different algebras.
    #[error(
        "operands belong to incompatible algebras: Q({left_n}) with block size {left_l} \
         vs Q({right_n}) with block size {right_l}"
    )]
    ContextMismatch {
        /// Left operand ambient size.
        left_n: u16,
        /// Left operand block size.
        left_l: u16,
        /// Right operand ambient size.
        right_n: u16,
        /// Right operand block size.
        right_l: u16,
    },
    /// Two tensor operands have different slot counts.
    #[error("tensor slot counts differ: {left} vs {right}")]
    SlotMismatch {
        /// Left slot count.
        left: usize,
        /// Right slot count.
        right: usize,
    },
    /// Two Yangian operands have different underlying sizes.
    #[error("Yangian sizes differ: {left} vs {right}")]
    YangianSizeMismatch {
        /// Left size.
        left: u16,
        /// Right size.
        right: u16,
    },
    /// An element was not supported where an operation requires it.
    #[error("unsupported element: {0}")]
    BadSupport(String),
    /// An index parameter fell outside its documented range.
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

/// A generator together with an integer coefficient, as used in the
/// structure-constant table.
pub type BracketTerm = (u16, i32);

/// Precomputed tables for Q(n) with Jordan-block size l.
#[derive(Debug)]
pub struct Context {
    n: u16,
    l: u16,
    /// Rank -> generator, in the fixed total order.
    gens: Vec<Generator>,
    /// Flat (kind, row, col) index -> rank.
    rank_by_id: Vec<u16>,
    /// Rank -> grading weight 2(j - i) in block coordinates.
    weights: Vec<i32>,
    /// Rank -> parity (true = odd).
    parities: Vec<bool>,
    /// Rank -> character value is 1 (it is 0 or 1 on the negative part).
    chi_one: Vec<bool>,
    /// First rank of the negative-weight class; ranks below it are the
    /// nonnegative (parabolic) part.
    m_start: u16,
    /// Number of weight-zero ranks; they form the prefix `0..g0_len`.
    g0_len: u16,
    /// Supercommutator of each ordered generator pair, `a * N + b` indexed.
    brackets: Vec<SmallVec<[BracketTerm; 2]>>,
}

impl Context {
    /// Build the tables for Q(n) with all Jordan blocks of size l.
    ///
    /// Fails if n or l is zero or l does not divide n. Use `l = 1` for the
    /// plain enveloping algebra of Q(n): the grading is then trivial and
    /// the negative part is empty.
    pub fn new(n: u16, l: u16) -> Result<Arc<Context>, AlgebraError> {
        if n == 0 || l == 0 {
            return Err(AlgebraError::EmptyAlgebra { n, l });
        }
        if n % l != 0 {
            return Err(AlgebraError::UnevenBlocks { n, l });
        }

        let count = 2 * (n as usize) * (n as usize);
        let mut gens = Vec::with_capacity(count);
        for kind in [GenKind::E, GenKind::F] {
            for row in 1..=n {
                for col in 1..=n {
                    gens.push(Generator { kind, row, col });
                }
            }
        }
        // Order: parabolic class first, then weight ascending, then kind,
        // then (row, col).
        gens.sort_by_key(|g| {
            let w = weight_of(l, *g);
            ((w < 0) as u8, w, g.kind, g.row, g.col)
        });

        let mut rank_by_id = vec![0u16; count];
        let mut weights = Vec::with_capacity(count);
        let mut parities = Vec::with_capacity(count);
        let mut chi_one = Vec::with_capacity(count);
        for (rank, g) in gens.iter().enumerate() {
            rank_by_id[flat_id(n, *g)] = rank as u16;
            weights.push(weight_of(l, *g));
            parities.push(g.is_odd());
            // The character is 1 exactly on the even single-step
            // lower-diagonal generators inside one block column pair:
            // row = col + 1 with both indices in the same size-l block.
            chi_one.push(g.kind == GenKind::E && g.row == g.col + 1 && g.col % l != 0);
        }
        let m_start = weights.iter().position(|w| *w < 0).unwrap_or(count) as u16;
        let g0_len = weights.iter().filter(|w| **w == 0).count() as u16;

        let mut brackets = Vec::with_capacity(count * count);
        for a in &gens {
            for b in &gens {
                brackets.push(bracket_terms(n, &rank_by_id, *a, *b));
            }
        }

        Ok(Arc::new(Context {
            n,
            l,
            gens,
            rank_by_id,
            weights,
            parities,
            chi_one,
            m_start,
            g0_len,
            brackets,
        }))
    }

    /// Ambient matrix size n.
    pub fn n(&self) -> u16 {
        self.n
    }

    /// Jordan-block size l.
    pub fn l(&self) -> u16 {
        self.l
    }

    /// Number of diagonal blocks, n / l.
    pub fn blocks(&self) -> u16 {
        self.n / self.l
    }

    /// Total number of generators, 2 n^2.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Rank of a generator in the fixed total order.
    pub fn rank(&self, g: Generator) -> Result<u16, AlgebraError> {
        if g.row == 0 || g.col == 0 || g.row > self.n || g.col > self.n {
            return Err(AlgebraError::OutOfRange { gen: g, n: self.n });
        }
        Ok(self.rank_by_id[flat_id(self.n, g)])
    }

    /// Generator at a given rank.
    pub fn generator(&self, rank: u16) -> Generator {
        self.gens[rank as usize]
    }

    /// Parity of the generator at `rank` (true = odd).
    pub fn parity(&self, rank: u16) -> bool {
        self.parities[rank as usize]
    }

    /// Grading weight of the generator at `rank`.
    pub fn weight(&self, rank: u16) -> i32 {
        self.weights[rank as usize]
    }

    /// Character value at `rank` as a small integer (0 or 1). The character
    /// vanishes outside the negative part.
    pub fn chi_int(&self, rank: u16) -> i32 {
        self.chi_one[rank as usize] as i32
    }

    /// True if the generator at `rank` has negative weight.
    pub fn is_negative_part(&self, rank: u16) -> bool {
        rank >= self.m_start
    }

    /// Ranks of the negative-weight generators (the "m" part).
    pub fn negative_ranks(&self) -> impl Iterator<Item = u16> + '_ {
        self.m_start..self.num_generators() as u16
    }

    /// Ranks of the nonnegative-weight generators (the parabolic part).
    pub fn parabolic_ranks(&self) -> impl Iterator<Item = u16> {
        0..self.m_start
    }

    /// Ranks of the weight-zero generators.
    pub fn weight_zero_ranks(&self) -> impl Iterator<Item = u16> {
        0..self.g0_len
    }

    /// Supercommutator of the generators at ranks `a` and `b`, as
    /// (rank, integer coefficient) pairs.
    pub fn bracket(&self, a: u16, b: u16) -> &[BracketTerm] {
        &self.brackets[a as usize * self.num_generators() + b as usize]
    }

    /// Block coordinates (i, p) of a 1-based matrix index: index = l(p-1)+i
    /// with 1 <= i <= l.
    pub fn block_coords(&self, index: u16) -> (u16, u16) {
        ((index - 1) % self.l + 1, (index - 1) / self.l + 1)
    }

    /// True if `other` denotes the same algebra configuration.
    pub fn same_as(&self, other: &Context) -> bool {
        self.n == other.n && self.l == other.l
    }

    /// Error value describing a mismatch between two contexts.
    pub fn mismatch(&self, other: &Context) -> AlgebraError {
        AlgebraError::ContextMismatch {
            left_n: self.n,
            left_l: self.l,
            right_n: other.n,
            right_l: other.l,
        }
    }
}

fn flat_id(n: u16, g: Generator) -> usize {
    let base = match g.kind {
        GenKind::E => 0,
        GenKind::F => (n as usize) * (n as usize),
    };
    base + (g.row as usize - 1) * (n as usize) + (g.col as usize - 1)
}

/// Grading weight 2(j - i) where i, j are the within-block coordinates of
/// the row and column indices.
fn weight_of(l: u16, g: Generator) -> i32 {
    let i = ((g.row - 1) % l) as i32;
    let j = ((g.col - 1) % l) as i32;
    2 * (j - i)
}

/// Supercommutator [a, b] of two generators from the delta rules
///
///   [e_ij, e_kl] = d_jk e_il - d_li e_kj
///   [e_ij, f_kl] = d_jk f_il - d_li f_kj
///   [f_ij, e_kl] = d_jk f_il - d_li f_kj
///   [f_ij, f_kl] = d_jk e_il + d_il e_kj   (anticommutator)
///
/// with coinciding result generators merged.
fn bracket_terms(
    n: u16,
    rank_by_id: &[u16],
    a: Generator,
    b: Generator,
) -> SmallVec<[BracketTerm; 2]> {
    let (i, j) = (a.row, a.col);
    let (k, l) = (b.row, b.col);
    let both_odd = a.is_odd() && b.is_odd();
    let result_kind = if a.is_odd() ^ b.is_odd() { GenKind::F } else { GenKind::E };

    let mut out: SmallVec<[BracketTerm; 2]> = SmallVec::new();
    let mut push = |g: Generator, c: i32| {
        let rank = rank_by_id[flat_id(n, g)];
        if let Some(entry) = out.iter_mut().find(|(r, _)| *r == rank) {
            entry.1 += c;
        } else {
            out.push((rank, c));
        }
    };

    if j == k {
        push(Generator { kind: result_kind, row: i, col: l }, 1);
    }
    if i == l {
        let sign = if both_odd { 1 } else { -1 };
        push(Generator { kind: result_kind, row: k, col: j }, sign);
    }
    out.retain(|(_, c)| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_sizes() {
        assert_eq!(
            Context::new(3, 2).unwrap_err(),
            AlgebraError::UnevenBlocks { n: 3, l: 2 }
        );
        assert!(matches!(Context::new(0, 1), Err(AlgebraError::EmptyAlgebra { .. })));
        assert!(Context::new(4, 2).is_ok());
    }

    #[test]
    fn divisibility_error_message_names_the_rule() {
        let msg = Context::new(3, 2).unwrap_err().to_string();
        assert!(msg.contains("l must divide n"), "got: {msg}");
    }

    #[test]
    fn trivial_grading_when_l_is_one() {
        let ctx = Context::new(3, 1).unwrap();
        assert_eq!(ctx.negative_ranks().count(), 0);
        assert_eq!(ctx.weight_zero_ranks().count(), 18);
        for r in 0..ctx.num_generators() as u16 {
            assert_eq!(ctx.weight(r), 0);
        }
    }

    #[test]
    fn weights_at_two_two() {
        let ctx = Context::new(2, 2).unwrap();
        let w = |g| ctx.weight(ctx.rank(g).unwrap());
        assert_eq!(w(Generator::e(1, 2)), 2);
        assert_eq!(w(Generator::f(2, 1)), -2);
        assert_eq!(w(Generator::e(1, 1)), 0);
        assert_eq!(w(Generator::f(2, 2)), 0);
    }

    #[test]
    fn weights_at_four_two_cross_block() {
        let ctx = Context::new(4, 2).unwrap();
        let w = |g| ctx.weight(ctx.rank(g).unwrap());
        // Rows 1 and 3 both sit at block coordinate 1, so e_{1,3} has
        // weight zero even though it crosses blocks.
        assert_eq!(w(Generator::e(1, 3)), 0);
        assert_eq!(w(Generator::e(1, 4)), 2);
        assert_eq!(w(Generator::f(4, 1)), -2);
    }

    #[test]
    fn order_puts_zero_weight_first_and_negative_last() {
        let ctx = Context::new(2, 2).unwrap();
        // Weight-zero prefix: e11, e22, f11, f22 (kind then lexicographic).
        let prefix: Vec<Generator> = (0..4).map(|r| ctx.generator(r)).collect();
        assert_eq!(
            prefix,
            vec![
                Generator::e(1, 1),
                Generator::e(2, 2),
                Generator::f(1, 1),
                Generator::f(2, 2),
            ]
        );
        // Then weight +2, then the negative class.
        assert_eq!(ctx.generator(4), Generator::e(1, 2));
        assert_eq!(ctx.generator(5), Generator::f(1, 2));
        assert_eq!(ctx.generator(6), Generator::e(2, 1));
        assert_eq!(ctx.generator(7), Generator::f(2, 1));
        assert!(ctx.is_negative_part(6));
        assert!(!ctx.is_negative_part(5));
    }

    #[test]
    fn character_is_one_exactly_on_single_step_descents_within_a_block() {
        let ctx = Context::new(4, 2).unwrap();
        let chi = |g| ctx.chi_int(ctx.rank(g).unwrap());
        assert_eq!(chi(Generator::e(2, 1)), 1);
        assert_eq!(chi(Generator::e(4, 3)), 1);
        // Block boundary: rows 3,2 sit in different blocks.
        assert_eq!(chi(Generator::e(3, 2)), 0);
        // Cross-block single-coordinate descents and all odd generators
        // vanish.
        assert_eq!(chi(Generator::e(4, 1)), 0);
        assert_eq!(chi(Generator::f(2, 1)), 0);
        assert_eq!(chi(Generator::f(4, 3)), 0);
    }

    #[test]
    fn bracket_spot_checks() {
        let ctx = Context::new(2, 2).unwrap();
        let rank = |g| ctx.rank(g).unwrap();
        // [e_{2,1}, e_{1,1}] = e_{2,1}
        let terms = ctx.bracket(rank(Generator::e(2, 1)), rank(Generator::e(1, 1)));
        assert_eq!(terms, &[(rank(Generator::e(2, 1)), 1)]);
        // [f_{1,2}, f_{2,1}] = e_{1,1} + e_{2,2}
        let terms = ctx.bracket(rank(Generator::f(1, 2)), rank(Generator::f(2, 1)));
        let mut got: Vec<BracketTerm> = terms.to_vec();
        got.sort();
        let mut want = vec![(rank(Generator::e(1, 1)), 1), (rank(Generator::e(2, 2)), 1)];
        want.sort();
        assert_eq!(got, want);
        // [e_{1,1}, f_{1,1}] = 0
        assert!(ctx
            .bracket(rank(Generator::e(1, 1)), rank(Generator::f(1, 1)))
            .is_empty());
        // [f_{1,1}, f_{1,1}] = 2 e_{1,1}
        let terms = ctx.bracket(rank(Generator::f(1, 1)), rank(Generator::f(1, 1)));
        assert_eq!(terms, &[(rank(Generator::e(1, 1)), 2)]);
    }

    #[test]
    fn block_coords_roundtrip() {
        let ctx = Context::new(6, 3).unwrap();
        assert_eq!(ctx.block_coords(1), (1, 1));
        assert_eq!(ctx.block_coords(3), (3, 1));
        assert_eq!(ctx.block_coords(4), (1, 2));
        assert_eq!(ctx.block_coords(6), (3, 2));
    }
}
