//! Randomized algebra laws, plus exhaustive structural checks cheap enough
//! to run on every spec at desk scale.

use proptest::prelude::*;

use lgv_core::field::FieldSpec;
use lgv_core::groebner::{reduced_groebner_basis, verify_closure, SelectionStrategy};
use lgv_core::ideal_ops::{hilbert_function, ideal_quotient, krull_dimension, saturate, substitute_solved};
use lgv_core::parse::{emit_ideal_file, parse_ideal_file};
use lgv_core::ring::{Ring, VarTable};
use lgv_core::schemes::{enumerate_specs, standard_chart_ideal};
use lgv_core::{Guards, Ideal, Monomial, MonomialOrder, Polynomial};

const P: u64 = 32003;

fn fp() -> FieldSpec {
    FieldSpec::Fp(P)
}

fn ring_with(arity: usize, field: FieldSpec) -> Ring {
    let names = ["x", "y", "z", "w"][..arity]
        .iter()
        .map(|s| s.to_string())
        .collect();
    VarTable::new(names, field).expect("ring builds")
}

/// Raw term data: exponent vectors with small entries and small signed
/// integer coefficients, so every field interprets the same data.
type TermData = Vec<(Vec<u32>, i64)>;

fn poly_from(ring: &Ring, data: &TermData) -> Polynomial {
    let field = ring.field();
    let terms = data
        .iter()
        .map(|(exps, c)| (Monomial(exps.clone()), field.from_i64(*c)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn arb_terms(arity: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = TermData> {
    prop::collection::vec(
        (
            prop::collection::vec(0..=max_exp, arity),
            -6i64..=6,
        ),
        1..=max_terms,
    )
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg(128))]

    /// Commutative-ring axioms on the polynomial arithmetic.
    #[test]
    fn arithmetic_laws(
        a in arb_terms(3, 3, 4),
        b in arb_terms(3, 3, 4),
        c in arb_terms(3, 3, 4),
        rational in proptest::bool::ANY,
    ) {
        let field = if rational { FieldSpec::Rat } else { fp() };
        let ring = ring_with(3, field);
        let (a, b, c) = (poly_from(&ring, &a), poly_from(&ring, &b), poly_from(&ring, &c));

        prop_assert!(a.add(&b).sub(&b.add(&a)).is_zero());
        prop_assert!(a.add(&b).add(&c).sub(&a.add(&b.add(&c))).is_zero());
        prop_assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
        prop_assert!(a.mul(&b).mul(&c).sub(&a.mul(&b.mul(&c))).is_zero());
        prop_assert!(a.mul(&b.add(&c)).sub(&a.mul(&b).add(&a.mul(&c))).is_zero());
        prop_assert!(a.sub(&a).is_zero());
        prop_assert!(a.mul(&Polynomial::one(&ring)).sub(&a).is_zero());
    }

    /// With all inputs small, every coefficient of `a·b + c` stays far below
    /// p/2, where the balanced prime-field display is faithful — so the
    /// rational and modular computations must render identically.
    #[test]
    fn rational_and_modular_arithmetic_agree(
        a in arb_terms(3, 2, 4),
        b in arb_terms(3, 2, 4),
        c in arb_terms(3, 2, 4),
    ) {
        let over_rat = ring_with(3, FieldSpec::Rat);
        let over_fp = ring_with(3, fp());
        let rat = poly_from(&over_rat, &a).mul(&poly_from(&over_rat, &b)).add(&poly_from(&over_rat, &c));
        let modular = poly_from(&over_fp, &a).mul(&poly_from(&over_fp, &b)).add(&poly_from(&over_fp, &c));
        prop_assert_eq!(rat.to_string(), modular.to_string());
    }
}

proptest! {
    #![proptest_config(cfg(1024))]

    /// Monomial orders are total, multiplicative (compatible with
    /// multiplication), and well founded (1 is minimal).
    #[test]
    fn monomial_orders_are_multiplicative(
        a in prop::collection::vec(0u32..=4, 3),
        b in prop::collection::vec(0u32..=4, 3),
        c in prop::collection::vec(0u32..=4, 3),
    ) {
        use std::cmp::Ordering;
        let ring = VarTable::with_weights(
            ["x", "y", "z"].iter().map(|s| s.to_string()).collect(),
            vec![2, 1, 1],
            fp(),
        ).expect("ring builds");
        let (a, b, c) = (Monomial(a), Monomial(b), Monomial(c));
        let one = Monomial::one(3);
        for ord in [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex,
            MonomialOrder::elimination(3, &[0], MonomialOrder::Grevlex),
        ] {
            let direct = ord.cmp(&ring, &a, &b);
            let scaled = ord.cmp(&ring, &a.mul(&c), &b.mul(&c));
            prop_assert_eq!(direct, scaled, "order {} not multiplicative", ord.label());
            prop_assert_eq!(ord.cmp(&ring, &a, &a), Ordering::Equal);
            prop_assert_ne!(ord.cmp(&ring, &one, &a.mul(&Monomial::var(0, 3))), Ordering::Greater);
        }
    }
}

proptest! {
    #![proptest_config(cfg(32))]

    /// Reduced bases really are Groebner bases (every S-pair reduces to
    /// zero), contain the generators, and do not depend on the
    /// pair-selection strategy. Normal forms are idempotent and linear.
    #[test]
    fn reduced_bases_are_closed_canonical_generating(
        gen_data in prop::collection::vec(arb_terms(3, 2, 3), 1..=3),
        probe in arb_terms(3, 2, 3),
        rational in proptest::bool::ANY,
    ) {
        let guards = Guards::default();
        let field = if rational { FieldSpec::Rat } else { fp() };
        let ring = ring_with(3, field);
        let gens: Vec<Polynomial> = gen_data.iter().map(|d| poly_from(&ring, d)).collect();
        let ord = MonomialOrder::Grevlex;

        let basis = reduced_groebner_basis(&ring, &gens, &ord, &guards, SelectionStrategy::NormalMinLcm)
            .expect("basis computes");
        prop_assert!(verify_closure(&ring, &basis, &ord, &guards).expect("closure check runs"));

        let fifo = reduced_groebner_basis(&ring, &gens, &ord, &guards, SelectionStrategy::Fifo)
            .expect("basis computes");
        prop_assert_eq!(emit_ideal_file(&ring, &basis), emit_ideal_file(&ring, &fifo));

        let ideal = Ideal::new(&ring, gens.clone());
        for g in &gens {
            prop_assert!(ideal.contains(g, &guards).expect("membership runs"));
        }

        let p = poly_from(&ring, &probe);
        let q = gens.first().cloned().unwrap_or_else(|| Polynomial::zero(&ring));
        let nf_p = ideal.normal_form(&p, &ord, &guards).expect("normal form");
        let nf_nf_p = ideal.normal_form(&nf_p, &ord, &guards).expect("normal form");
        prop_assert!(nf_p.sub(&nf_nf_p).is_zero());
        let nf_sum = ideal.normal_form(&p.add(&q), &ord, &guards).expect("normal form");
        let nf_q = ideal.normal_form(&q, &ord, &guards).expect("normal form");
        prop_assert!(nf_sum.sub(&nf_p.add(&nf_q)).is_zero());
    }

    /// Colon and saturation laws: `I ⊆ (I : f)`, `(I : f)·f ⊆ I`, the
    /// saturation contains the colon ideal and is idempotent.
    #[test]
    fn quotient_and_saturation_laws(
        gen_data in prop::collection::vec(arb_terms(3, 2, 2), 1..=2),
        f_exps in prop::collection::vec(0u32..=2, 3),
        f_coeff in 1i64..=6,
    ) {
        let guards = Guards::default();
        let ring = ring_with(3, fp());
        let gens: Vec<Polynomial> = gen_data.iter().map(|d| poly_from(&ring, d)).collect();
        let ideal = Ideal::new(&ring, gens);
        let f = Polynomial::term(&ring, Monomial(f_exps), ring.field().from_i64(f_coeff));

        let colon = ideal_quotient(&ideal, &f, &guards).expect("colon computes");
        for g in ideal.gens() {
            prop_assert!(colon.contains(g, &guards).expect("membership runs"));
        }
        for q in colon.gens() {
            prop_assert!(ideal.contains(&q.mul(&f), &guards).expect("membership runs"));
        }

        let saturated = saturate(&ideal, &f, &guards).expect("saturation computes");
        for q in colon.gens() {
            prop_assert!(saturated.contains(q, &guards).expect("membership runs"));
        }
        let twice = saturate(&saturated, &f, &guards).expect("saturation computes");
        prop_assert!(twice.equals(&saturated, &guards).expect("comparison runs"));
    }

    /// Dimension is monotone under adding generators, bounded by the ambient
    /// arity, and matches the growth of the graded dimension counts: a
    /// zero-dimensional quotient dies out, a positive-dimensional one keeps
    /// at least one monomial in every degree.
    #[test]
    fn dimension_bounds_and_growth(
        mono_data in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=4),
        extra in prop::collection::vec(0u32..=3, 3),
    ) {
        let guards = Guards::default();
        let ring = ring_with(3, fp());
        let one = ring.field().one();
        let to_gen = |exps: &Vec<u32>| {
            let mut exps = exps.clone();
            if exps.iter().all(|&e| e == 0) {
                exps[0] = 1;
            }
            Polynomial::term(&ring, Monomial(exps), one.clone())
        };
        let gens: Vec<Polynomial> = mono_data.iter().map(to_gen).collect();
        let ideal = Ideal::new(&ring, gens);

        let dim = krull_dimension(&ideal, &guards).expect("dimension computes").dim;
        prop_assert!(dim <= ring.arity());

        let larger = ideal.plus(&[to_gen(&extra)]);
        let dim_larger = krull_dimension(&larger, &guards).expect("dimension computes").dim;
        prop_assert!(dim_larger <= dim);

        // generator exponents are ≤ 3, so an Artinian quotient lives in
        // degrees < 3·3 and positive dimension keeps every degree inhabited
        let counts = hilbert_function(&ideal, 12, &guards).expect("counting runs");
        if dim == 0 {
            prop_assert_eq!(counts[9..].iter().sum::<u64>(), 0);
        } else {
            prop_assert!(counts.iter().all(|&v| v > 0));
        }
    }

    /// Emit-then-parse is the identity on rings and rendered generators,
    /// including non-uniform weights.
    #[test]
    fn ideal_files_round_trip(
        gen_data in prop::collection::vec(arb_terms(3, 3, 4), 1..=4),
        weights in prop::collection::vec(1u64..=3, 3),
        rational in proptest::bool::ANY,
    ) {
        let field = if rational { FieldSpec::Rat } else { fp() };
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let ring = VarTable::with_weights(names, weights, field).expect("ring builds");
        let gens: Vec<Polynomial> = gen_data
            .iter()
            .map(|d| poly_from(&ring, d))
            .filter(|p| !p.is_zero())
            .collect();

        let text = emit_ideal_file(&ring, &gens);
        let (parsed_ring, parsed_gens) = parse_ideal_file(&text, field).expect("file parses");
        prop_assert_eq!(&parsed_ring, &ring);
        prop_assert_eq!(emit_ideal_file(&parsed_ring, &parsed_gens), text);
    }
}

/// Applying the solve schedule cannot change what the chart is: the full
/// ideal and its residual describe the same set, of total dimension
/// r(d−r) + 1, for every spec at desk scale.
#[test]
fn solve_schedules_preserve_chart_dimension() {
    let guards = Guards::default();
    for spec in enumerate_specs(3) {
        let chart = standard_chart_ideal(&spec, fp()).expect("chart builds");
        let expected = spec.r * (spec.d - spec.r) + 1;
        let full = krull_dimension(&chart.ideal, &guards).expect("dimension").dim;
        let residual = substitute_solved(&chart.ideal, &chart.schedule).expect("schedule applies");
        let reduced = krull_dimension(&residual, &guards).expect("dimension").dim;
        assert_eq!(
            (full, reduced),
            (expected, expected),
            "dimension drift on {}",
            spec.label()
        );
    }
}

/// Charts whose exchanged block is empty carry no residual equations at
/// all: the solve schedule exhibits them as free coordinate patches.
#[test]
fn charts_without_exchanged_block_are_free() {
    for spec in enumerate_specs(3).into_iter().filter(|s| s.ell() == 0) {
        let chart = standard_chart_ideal(&spec, fp()).expect("chart builds");
        let residual = substitute_solved(&chart.ideal, &chart.schedule).expect("schedule applies");
        assert!(
            residual.gens().is_empty(),
            "{} left {} equations",
            spec.label(),
            residual.gens().len()
        );
    }
}
