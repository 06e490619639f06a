use eulerian::cd::{CdWord, Letter};
use eulerian::expr::Expr;
use eulerian::flag::{inv_subset_sums, subset_sums};
use eulerian::poset::validate;
use eulerian::{
    cd_index, cd_product, flag_h, flag_vector, l_vector, AbPolynomial, CdPolynomial, RankedPoset,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Small random construction expressions, not necessarily Eulerian.
fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (1usize..=5).prop_map(Expr::Chain),
        (1usize..=4).prop_map(Expr::Boolean),
        (1u64..=3).prop_map(|copies| Expr::Lemma3 { copies }),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Dual(Box::new(e))),
            inner.clone().prop_map(|e| Expr::Double(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Join(Box::new(a), Box::new(b))),
            (inner, any::<(u8, u8)>(), 1u64..=3).prop_filter_map(
                "rank too small",
                |(e, (a, b), copies)| {
                    let top = e.rank();
                    if top < 2 {
                        return None;
                    }
                    let i = 1 + a as usize % (top - 1);
                    let j = i + b as usize % (top - i);
                    Some(Expr::Dni {
                        inner: Box::new(e),
                        i,
                        j,
                        copies,
                    })
                }
            ),
        ]
    })
}

fn arb_poset() -> impl Strategy<Value = RankedPoset> {
    arb_expr().prop_filter_map("too large", |e| {
        if e.rank() > 12 {
            return None;
        }
        e.eval().ok().filter(|p| p.element_count() <= 3000)
    })
}

fn arb_word(max_len: usize) -> impl Strategy<Value = CdWord> {
    prop::collection::vec(prop_oneof![Just(Letter::C), Just(Letter::D)], 0..=max_len)
        .prop_map(CdWord::new)
}

fn arb_poly(degree: usize) -> impl Strategy<Value = CdPolynomial> {
    let words = eulerian::cd_words(degree);
    prop::collection::vec(-20i64..20, words.len()).prop_map(move |coeffs| {
        CdPolynomial::from_terms(
            degree,
            words
                .iter()
                .cloned()
                .zip(coeffs.into_iter().map(BigInt::from)),
        )
        .expect("homogeneous terms")
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generated_posets_validate(p in arb_poset()) {
        prop_assert!(validate(&p.to_raw()).is_empty());
        prop_assert_eq!(RankedPoset::from_raw(&p.to_raw()).unwrap(), p);
    }

    #[test]
    fn dual_is_an_involution(p in arb_poset()) {
        let d = p.dual();
        prop_assert_eq!(d.dual(), p.clone());
        prop_assert_eq!(d.count_maximal_chains(), p.count_maximal_chains());
        prop_assert_eq!(d.is_eulerian().eulerian, p.is_eulerian().eulerian);
        prop_assert_eq!(flag_vector(&d).unwrap(), flag_vector(&p).unwrap().reversed());
    }

    #[test]
    fn comparability_composes(p in arb_poset(), a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let top = p.rank() + 1;
        let mut r = [a as usize % top, b as usize % top, c as usize % top];
        r.sort_unstable();
        let direct = p.comparability(r[0], r[2]).unwrap();
        let via = p.comparability(r[0], r[1]).unwrap().product(&p.comparability(r[1], r[2]).unwrap());
        prop_assert_eq!(direct, via);
        let same = p.comparability(r[1], r[1]).unwrap();
        prop_assert_eq!(same.count_ones(), p.level_size(r[1]));
    }

    #[test]
    fn chain_count_is_top_flag_number(p in arb_poset()) {
        let f = flag_vector(&p).unwrap();
        prop_assert_eq!(f.entries().last().unwrap(), &p.count_maximal_chains());
        prop_assert_eq!(&f.entries()[0], &BigUint::one());
    }

    #[test]
    fn eulerian_balances_levels(p in arb_poset()) {
        if p.is_eulerian().eulerian {
            let alt: i64 = p.level_sizes().iter().enumerate()
                .map(|(r, &s)| if r % 2 == 0 { s as i64 } else { -(s as i64) })
                .sum();
            prop_assert_eq!(alt, 0);
        }
    }

    #[test]
    fn l_vector_sums_to_one(p in arb_poset()) {
        let l = l_vector(&flag_vector(&p).unwrap());
        let total: BigRational = l.entries().iter().cloned().sum();
        prop_assert!(total.is_one());
    }

    /// Eulerian posets have cd-indices whose expansion is the ab-index, whose
    /// c^n coefficient is 1, and whose L-vector lives on even sets. Other
    /// posets either fail the conversion or are Eulerian after all.
    #[test]
    fn cd_index_exists_exactly_when_expected(p in arb_poset()) {
        let f = flag_vector(&p).unwrap();
        let result = cd_index(&p);
        if p.is_eulerian().eulerian {
            let cd = result.unwrap();
            prop_assert!(l_vector(&f).first_non_even_support().is_none());
            prop_assert_eq!(cd.expand_to_ab(), AbPolynomial::from_flag_h(&flag_h(&f)));
            prop_assert!(cd.coeff(&CdWord::c_power(cd.degree())).is_one());
            prop_assert_eq!(cd_index(&p.dual()).unwrap(), cd.reversed());
        } else if let Ok(cd) = result {
            // cd-expressible but not Eulerian: the expansion must still match.
            prop_assert_eq!(cd.expand_to_ab(), AbPolynomial::from_flag_h(&flag_h(&f)));
        }
    }

    #[test]
    fn flag_h_round_trip(table in prop::collection::vec(-10_000i64..10_000, 64)) {
        let f: Vec<BigInt> = table.into_iter().map(BigInt::from).collect();
        let mut h = f.clone();
        inv_subset_sums(&mut h);
        subset_sums(&mut h);
        prop_assert_eq!(h, f);
    }

    #[test]
    fn cd_product_associative(a in arb_poly(2), b in arb_poly(3), c in arb_poly(1)) {
        let left = cd_product(&cd_product(&a, &b), &c);
        let right = cd_product(&a, &cd_product(&b, &c));
        prop_assert_eq!(&left, &right);
        if !left.is_zero() {
            prop_assert_eq!(left.degree(), 6);
        }
    }

    #[test]
    fn support_is_even(w in arb_word(10)) {
        let supp = w.support().unwrap();
        prop_assert_eq!(supp.len(), 2 * w.d_count());
        prop_assert!(supp.is_even());
        prop_assert_eq!(w.reversed().reversed(), w.clone());
        let text = w.to_string();
        if !text.is_empty() {
            prop_assert_eq!(text.parse::<CdWord>().unwrap(), w);
        }
    }

    #[test]
    fn expression_display_round_trips(e in arb_expr()) {
        prop_assert_eq!(e.to_string().parse::<Expr>().unwrap(), e);
    }
}

#[test]
fn zero_polynomial_has_no_terms() {
    let p = CdPolynomial::c_power(3);
    assert!((&p - &p).is_zero());
    assert!((&p - &p).coeff(&CdWord::c_power(3)).is_zero());
}
