//! Integration tests for the W-algebra layer: the principal sl2 data,
//! the quotient projection, top symbols of projected Gauss powers, and
//! the tensor factorization of the weight-zero subalgebra.

use std::sync::Arc;

use proptest::prelude::*;

use qalg::scalar::{self, Scalar};
use qalg::walgebra::SymbolElement;
use qalg::{Context, GenKind, Generator, Monomial, TensorElement, UElement, WSetup};

const CONFIGS: [(u16, u16); 4] = [(2, 1), (2, 2), (4, 2), (3, 3)];

fn mul(a: &UElement, b: &UElement) -> UElement {
    a.try_mul(b).expect("same context")
}

fn bracket(a: &UElement, b: &UElement) -> UElement {
    a.try_super_commutator(b).expect("same context")
}

#[test]
fn sl2_triple_satisfies_the_standard_relations() {
    for (n, l) in CONFIGS {
        let setup = WSetup::new(n, l).unwrap();
        let (e, f, h) = (setup.sl2_e(), setup.sl2_f(), setup.sl2_h());
        assert_eq!(bracket(&e, &f), h, "[e, f] = h at ({n}, {l})");
        assert_eq!(bracket(&h, &e), e.scale(&scalar::int(2)), "[h, e] = 2e at ({n}, {l})");
        assert_eq!(bracket(&h, &f), f.scale(&scalar::int(-2)), "[h, f] = -2f at ({n}, {l})");
    }
}

#[test]
fn odd_nilpotent_has_weight_two_and_squares_above_the_triple() {
    for (n, l) in CONFIGS {
        let setup = WSetup::new(n, l).unwrap();
        let h = setup.sl2_h();
        let odd = setup.odd_nilpotent();
        assert_eq!(bracket(&h, &odd), odd.scale(&scalar::int(2)), "weight 2 at ({n}, {l})");
        // The odd square [F, F] is the even second superdiagonal, which
        // the raising element takes two steps to reach: both sides are
        // annihilated by bracketing with e twice.
        let square = bracket(&odd, &odd);
        let e = setup.sl2_e();
        assert!(bracket(&e, &square).is_zero(), "[e, [F, F]] = 0 at ({n}, {l})");
    }
}

/// Raw material for one element: a few short words with small coefficients.
type RawElement = Vec<(Vec<u8>, i8)>;

fn raw_element() -> impl Strategy<Value = RawElement> {
    prop::collection::vec(
        (prop::collection::vec(any::<u8>(), 0..3), -3i8..=3),
        0..3,
    )
}

fn build(ctx: &Arc<Context>, raw: &RawElement) -> UElement {
    let total = ctx.num_generators() as u16;
    let mut out = UElement::zero(ctx.clone());
    for (word, c) in raw {
        let ranks: Vec<u16> = word.iter().map(|&r| u16::from(r) % total).collect();
        let term = UElement::from_rank_word(ctx.clone(), scalar::int(i64::from(*c)), &ranks);
        out = out.try_add(&term).expect("same context");
    }
    out
}

/// Like `build`, but drawing factors from a restricted rank list.
fn build_from(ctx: &Arc<Context>, ranks: &[u16], raw: &RawElement) -> UElement {
    let mut out = UElement::zero(ctx.clone());
    for (word, c) in raw {
        let picked: Vec<u16> = word.iter().map(|&r| ranks[r as usize % ranks.len()]).collect();
        let term = UElement::from_rank_word(ctx.clone(), scalar::int(i64::from(*c)), &picked);
        out = out.try_add(&term).expect("same context");
    }
    out
}

fn proj_config() -> impl Strategy<Value = (u16, u16)> {
    prop_oneof![Just((2u16, 2u16)), Just((4, 2)), Just((3, 3))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn quotient_projection_is_idempotent((n, l) in proj_config(), raw in raw_element()) {
        let setup = WSetup::new(n, l).unwrap();
        let x = build(setup.ctx(), &raw);
        let once = setup.project_pi(&x).unwrap();
        prop_assert_eq!(setup.project_pi(&once).unwrap(), once);
    }

    #[test]
    fn quotient_projection_kills_the_character_shift(
        (n, l) in proj_config(),
        raw in raw_element(),
    ) {
        // Right multiplication by a negative-part generator lands in the
        // defining left ideal up to its character value.
        let setup = WSetup::new(n, l).unwrap();
        let ctx = setup.ctx();
        let x = build(ctx, &raw);
        let px = setup.project_pi(&x).unwrap();
        for rank in ctx.negative_ranks() {
            let a = UElement::generator(ctx.clone(), ctx.generator(rank)).unwrap();
            let shifted = setup.project_pi(&mul(&x, &a)).unwrap();
            let chi = scalar::int(i64::from(ctx.chi_int(rank)));
            prop_assert_eq!(shifted, px.scale(&chi));
        }
    }

    #[test]
    fn quotient_projection_fixes_the_parabolic(
        (n, l) in proj_config(),
        raw in raw_element(),
    ) {
        let setup = WSetup::new(n, l).unwrap();
        let ctx = setup.ctx();
        let ranks: Vec<u16> = ctx.parabolic_ranks().collect();
        let x = build_from(ctx, &ranks, &raw);
        prop_assert_eq!(setup.project_pi(&x).unwrap(), x);
    }

    #[test]
    fn quotient_projection_commutes_with_left_parabolic_factors(
        (n, l) in proj_config(),
        raw in raw_element(),
    ) {
        let setup = WSetup::new(n, l).unwrap();
        let ctx = setup.ctx();
        let x = build(ctx, &raw);
        let px = setup.project_pi(&x).unwrap();
        for rank in ctx.parabolic_ranks() {
            let p = UElement::generator(ctx.clone(), ctx.generator(rank)).unwrap();
            let left = setup.project_pi(&mul(&p, &x)).unwrap();
            prop_assert_eq!(left, mul(&p, &px));
        }
    }
}

/// Expected top symbol of the projected Gauss power of order m + k: the
/// shifted diagonal section of length min(m, l - k), odd entries with the
/// alternating sign.
fn shifted_diagonal(
    ctx: &Arc<Context>,
    kind: GenKind,
    p: u16,
    q: u16,
    m: u16,
    k: u16,
) -> SymbolElement {
    let l = ctx.l();
    let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
    for i in 1..=m.min(l - k) {
        let g = Generator { kind, row: l * (p - 1) + i, col: l * (q - 1) + i + k };
        let sign = match kind {
            GenKind::E => scalar::int(1),
            GenKind::F => {
                if (i + k) % 2 == 1 {
                    scalar::int(1)
                } else {
                    scalar::int(-1)
                }
            }
        };
        terms.push((Monomial::from_sorted_ranks(&[ctx.rank(g).unwrap()]), sign));
    }
    SymbolElement::from_terms(terms)
}

#[test]
fn projected_gauss_powers_have_shifted_diagonal_top_symbols() {
    for (n, l) in CONFIGS {
        let setup = WSetup::new(n, l).unwrap();
        let ctx = setup.ctx();
        let blocks = ctx.blocks();
        for kind in [GenKind::E, GenKind::F] {
            for k in 0..l {
                for m in 1..=l {
                    for p in 1..=blocks {
                        for q in 1..=blocks {
                            let power = setup
                                .sergeev(kind, m + k, l * (p - 1) + m, l * (q - 1) + 1)
                                .unwrap();
                            let symbol = setup.top_symbol(&setup.project_pi(&power).unwrap());
                            let want = shifted_diagonal(ctx, kind, p, q, m, k);
                            assert_eq!(
                                symbol, want,
                                "top symbol at n={n} l={l} {kind:?} k={k} m={m} p={p} q={q}"
                            );
                            assert_eq!(
                                symbol.bidegree(ctx),
                                Some((2 * i64::from(k) + 2, 2 * i64::from(k))),
                                "bidegree at n={n} l={l} {kind:?} k={k} m={m} p={p} q={q}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn distinguished_generators_lie_in_the_w_algebra() {
    for (n, l) in [(2, 2), (4, 2), (3, 3)] {
        let setup = WSetup::new(n, l).unwrap();
        for kind in [GenKind::E, GenKind::F] {
            for k in 1..=l {
                for p in 1..=setup.ctx().blocks() {
                    for q in 1..=setup.ctx().blocks() {
                        let y = setup.w_generator(kind, p, q, k).unwrap();
                        assert!(
                            setup.membership_failure(&y).unwrap().is_none(),
                            "generator {kind:?} p={p} q={q} k={k} at ({n}, {l})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn invariance_failures_come_with_a_nonzero_residue() {
    let setup = WSetup::new(2, 2).unwrap();
    let ctx = setup.ctx();
    for bad in [
        UElement::generator(ctx.clone(), Generator::e(1, 1)).unwrap(),
        setup.sl2_h(),
    ] {
        let (witness, residue) = setup
            .membership_failure(&bad)
            .unwrap()
            .expect("a single diagonal entry is not invariant");
        assert!(!residue.is_zero());
        assert!(ctx.is_negative_part(ctx.rank(witness).unwrap()));
        assert!(!setup.is_in_w(&bad).unwrap());
    }
}

#[test]
fn centralizer_basis_matches_the_generator_count() {
    for (n, l) in CONFIGS {
        let setup = WSetup::new(n, l).unwrap();
        let blocks = usize::from(setup.ctx().blocks());
        let basis = setup.centralizer_basis();
        assert_eq!(basis.len(), 2 * usize::from(l) * blocks * blocks);
        for symbol in &basis {
            assert!(!symbol.is_zero());
        }
    }
}

#[test]
fn theta_keeps_weight_zero_and_rejects_negative_factors() {
    let setup = WSetup::new(4, 2).unwrap();
    let ctx = setup.ctx();
    let diag = setup.x_element(1, 1, 2).unwrap();
    let raising = UElement::generator(ctx.clone(), Generator::e(1, 2)).unwrap();
    let mixed = diag.try_add(&raising).unwrap();
    assert_eq!(setup.theta(&mixed).unwrap(), diag);
    let lowering = UElement::generator(ctx.clone(), Generator::e(2, 1)).unwrap();
    assert!(setup.theta(&lowering).is_err());
}

/// Every single diagonal element of the weight-zero subalgebra, both
/// parities, at the given configuration.
fn diagonal_elements(setup: &WSetup) -> Vec<UElement> {
    let l = setup.ctx().l();
    let blocks = setup.ctx().blocks();
    let mut out = Vec::new();
    for i in 1..=l {
        for p in 1..=blocks {
            for q in 1..=blocks {
                out.push(setup.x_element(i, p, q).unwrap());
                out.push(setup.xi_element(i, p, q).unwrap());
            }
        }
    }
    out
}

#[test]
fn weight_zero_factorization_embeds_single_entries() {
    for (n, l) in [(4, 2), (3, 3)] {
        let setup = WSetup::new(n, l).unwrap();
        let slot_ctx = setup.slot_setup().ctx().clone();
        let slots = usize::from(l);
        for i in 1..=l {
            for p in 1..=setup.ctx().blocks() {
                for q in 1..=setup.ctx().blocks() {
                    let slot = slots - usize::from(i);
                    let even = UElement::generator(slot_ctx.clone(), Generator::e(p, q)).unwrap();
                    assert_eq!(
                        setup.g0_to_tensor(&setup.x_element(i, p, q).unwrap()).unwrap(),
                        TensorElement::embed(&even, slot, slots).unwrap()
                    );
                    let odd = UElement::generator(slot_ctx.clone(), Generator::f(p, q)).unwrap();
                    assert_eq!(
                        setup.g0_to_tensor(&setup.xi_element(i, p, q).unwrap()).unwrap(),
                        TensorElement::embed(&odd, slot, slots).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn weight_zero_factorization_is_multiplicative() {
    let setup = WSetup::new(4, 2).unwrap();
    let atoms = diagonal_elements(&setup);
    for a in &atoms {
        for b in &atoms {
            let product = setup.g0_to_tensor(&mul(a, b)).unwrap();
            let factored = setup
                .g0_to_tensor(a)
                .unwrap()
                .try_mul(&setup.g0_to_tensor(b).unwrap())
                .unwrap();
            assert_eq!(product, factored);
        }
    }
    // One longer word crossing both slots and both parities.
    let word = mul(&mul(&atoms[1], &atoms[10]), &atoms[7]);
    let product = setup.g0_to_tensor(&word).unwrap();
    let factored = setup
        .g0_to_tensor(&mul(&atoms[1], &atoms[10]))
        .unwrap()
        .try_mul(&setup.g0_to_tensor(&atoms[7]).unwrap())
        .unwrap();
    assert_eq!(product, factored);
}

#[test]
fn weight_zero_factorization_rejects_other_weights() {
    let setup = WSetup::new(4, 2).unwrap();
    let raising = UElement::generator(setup.ctx().clone(), Generator::e(1, 2)).unwrap();
    assert!(setup.g0_to_tensor(&raising).is_err());
}

#[test]
fn diagonal_element_indices_are_validated() {
    let setup = WSetup::new(4, 2).unwrap();
    assert!(setup.x_element(0, 1, 1).is_err());
    assert!(setup.x_element(3, 1, 1).is_err());
    assert!(setup.xi_element(1, 3, 1).is_err());
    assert!(setup.w_generator(GenKind::E, 1, 1, 3).is_err());
    assert!(WSetup::new(3, 2).is_err());
}
