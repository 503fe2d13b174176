//! Basis generators of the queer superalgebra Q(n).
//!
//! Q(n) is realized as 2n x 2n block matrices [[A, B], [B, A]]. The even
//! basis element `E[i,j]` places the elementary matrix E_ij in both diagonal
//! blocks; the odd basis element `F[i,j]` places it in both off-diagonal
//! blocks. Rows and columns are 1-based throughout.

use std::fmt;

/// Parity class of a generator: `E` is even, `F` is odd.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenKind {
    /// Even generator `e_{i,j}`.
    E,
    /// Odd generator `f_{i,j}`.
    F,
}

impl GenKind {
    /// True for the odd kind.
    pub fn is_odd(self) -> bool {
        matches!(self, GenKind::F)
    }
}

/// A single basis generator `e_{row,col}` or `f_{row,col}` of Q(n).
///
/// The ambient size n is carried by the [`Context`](crate::Context) a
/// generator is used with; constructing one does not validate the indices,
/// looking up its rank in a context does.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    /// Parity class.
    pub kind: GenKind,
    /// 1-based row index.
    pub row: u16,
    /// 1-based column index.
    pub col: u16,
}

impl Generator {
    /// The even generator `e_{row,col}`.
    pub fn e(row: u16, col: u16) -> Self {
        Generator { kind: GenKind::E, row, col }
    }

    /// The odd generator `f_{row,col}`.
    pub fn f(row: u16, col: u16) -> Self {
        Generator { kind: GenKind::F, row, col }
    }

    /// True for odd generators.
    pub fn is_odd(self) -> bool {
        self.kind.is_odd()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::E => 'E',
            GenKind::F => 'F',
        };
        write!(f, "{}[{},{}]", k, self.row, self.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_canonical_text_form() {
        assert_eq!(Generator::e(1, 2).to_string(), "E[1,2]");
        assert_eq!(Generator::f(10, 3).to_string(), "F[10,3]");
    }

    #[test]
    fn kinds_order_even_before_odd() {
        assert!(GenKind::E < GenKind::F);
        assert!(Generator::e(2, 2) < Generator::f(1, 1));
    }
}
