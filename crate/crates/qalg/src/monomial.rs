//! Ordered monomials in the generators: the normal-form basis words.
//!
//! A monomial stores (rank, exponent) factors with strictly increasing
//! ranks. The straightening algorithm never produces an odd generator with
//! exponent above one (its square rewrites into half its self-bracket), so
//! monomials produced by arithmetic are genuine basis words of the
//! enveloping algebra.

use smallvec::SmallVec;

use crate::context::Context;

/// A sorted power product of generators, identified by context ranks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    factors: SmallVec<[(u16, u16); 4]>,
}

impl Monomial {
    /// The empty monomial (the unit of the algebra).
    pub fn unit() -> Self {
        Monomial { factors: SmallVec::new() }
    }

    /// Build from a non-decreasing rank word, collapsing repeats into
    /// exponents.
    pub fn from_sorted_ranks(ranks: &[u16]) -> Self {
        let mut factors: SmallVec<[(u16, u16); 4]> = SmallVec::new();
        for &r in ranks {
            match factors.last_mut() {
                Some((rank, exp)) if *rank == r => *exp += 1,
                _ => {
                    debug_assert!(factors.last().is_none_or(|(rank, _)| *rank < r));
                    factors.push((r, 1));
                }
            }
        }
        Monomial { factors }
    }

    /// Build from (rank, exponent) factors that are already strictly
    /// increasing in rank.
    pub fn from_factors(factors: &[(u16, u16)]) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|(_, e)| *e > 0));
        Monomial { factors: factors.iter().copied().collect() }
    }

    /// True for the empty monomial.
    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// The (rank, exponent) factors.
    pub fn factors(&self) -> &[(u16, u16)] {
        &self.factors
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize).sum()
    }

    /// Ranks with exponents expanded, in order.
    pub fn ranks(&self) -> impl Iterator<Item = u16> + '_ {
        self.factors
            .iter()
            .flat_map(|&(rank, exp)| std::iter::repeat_n(rank, exp as usize))
    }

    /// Parity of the word (true = odd).
    pub fn parity(&self, ctx: &Context) -> bool {
        self.factors
            .iter()
            .filter(|&&(rank, exp)| ctx.parity(rank) && exp % 2 == 1)
            .count()
            % 2
            == 1
    }

    /// Sum of grading weights over all factors.
    pub fn dynkin_weight(&self, ctx: &Context) -> i64 {
        self.factors
            .iter()
            .map(|&(rank, exp)| ctx.weight(rank) as i64 * exp as i64)
            .sum()
    }

    /// Filtration degree giving each generator weight + 2.
    pub fn kazhdan_degree(&self, ctx: &Context) -> i64 {
        self.factors
            .iter()
            .map(|&(rank, exp)| (ctx.weight(rank) as i64 + 2) * exp as i64)
            .sum()
    }

    /// Number of trailing factors lying in the negative-weight part.
    pub fn negative_suffix_len(&self, ctx: &Context) -> usize {
        self.factors
            .iter()
            .rev()
            .take_while(|&&(rank, _)| ctx.is_negative_part(rank))
            .count()
    }

    /// Canonical text, e.g. `E[1,1]^2 F[1,2]`; the unit renders as `1`.
    pub fn render(&self, ctx: &Context) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(rank, exp)| {
                let g = ctx.generator(rank).to_string();
                if exp == 1 {
                    g
                } else {
                    format!("{g}^{exp}")
                }
            })
            .collect();
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator;

    #[test]
    fn collapses_runs_and_expands_back() {
        let m = Monomial::from_sorted_ranks(&[0, 0, 3, 7, 7, 7]);
        assert_eq!(m.factors(), &[(0, 2), (3, 1), (7, 3)]);
        let expanded: Vec<u16> = m.ranks().collect();
        assert_eq!(expanded, vec![0, 0, 3, 7, 7, 7]);
        assert_eq!(m.degree(), 6);
    }

    #[test]
    fn unit_properties() {
        let ctx = Context::new(2, 2).unwrap();
        let u = Monomial::unit();
        assert!(u.is_unit());
        assert_eq!(u.degree(), 0);
        assert!(!u.parity(&ctx));
        assert_eq!(u.kazhdan_degree(&ctx), 0);
        assert_eq!(u.render(&ctx), "1");
    }

    #[test]
    fn parity_and_weights() {
        let ctx = Context::new(2, 2).unwrap();
        let rank = |g| ctx.rank(g).unwrap();
        let mut ranks = vec![
            rank(Generator::e(1, 2)),
            rank(Generator::f(1, 2)),
            rank(Generator::f(2, 1)),
        ];
        ranks.sort();
        let m = Monomial::from_sorted_ranks(&ranks);
        // Two odd factors: even overall.
        assert!(!m.parity(&ctx));
        assert_eq!(m.dynkin_weight(&ctx), 2 + 2 - 2);
        assert_eq!(m.kazhdan_degree(&ctx), 8);
    }

    #[test]
    fn negative_suffix_is_detected() {
        let ctx = Context::new(2, 2).unwrap();
        let rank = |g| ctx.rank(g).unwrap();
        let mut ranks = vec![rank(Generator::e(1, 1)), rank(Generator::e(2, 1))];
        ranks.sort();
        let m = Monomial::from_sorted_ranks(&ranks);
        assert_eq!(m.negative_suffix_len(&ctx), 1);
        let unit = Monomial::unit();
        assert_eq!(unit.negative_suffix_len(&ctx), 0);
    }

    #[test]
    fn render_with_exponents() {
        let ctx = Context::new(2, 2).unwrap();
        let e11 = ctx.rank(Generator::e(1, 1)).unwrap();
        let f12 = ctx.rank(Generator::f(1, 2)).unwrap();
        let m = Monomial::from_sorted_ranks(&[e11, e11, f12]);
        assert_eq!(m.render(&ctx), "E[1,1]^2 F[1,2]");
    }
}
