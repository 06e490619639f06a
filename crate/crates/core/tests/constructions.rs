use eulerian::analysis::limit_l_vector;
use eulerian::construct::{lemma2_glued, IntervalSystem};
use eulerian::expr::build;
use eulerian::{
    boolean, cd_index, cd_product, chain, dp_poset, flag_vector, glue, horizontal_double, join,
    l_vector, replicate_interval, CdPolynomial, Error, RankSubset,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

#[test]
fn replicate_examples() {
    let p = replicate_interval(&chain(5).unwrap(), 1, 4, 2).unwrap();
    assert_eq!(p.level_sizes(), &[1, 2, 2, 2, 2, 1]);
    assert_eq!(p.count_maximal_chains(), BigUint::from(2u32));

    let b = boolean(3).unwrap();
    assert_eq!(replicate_interval(&b, 1, 2, 1).unwrap(), b);
    assert!(replicate_interval(&b, 0, 2, 2).is_err());
    assert!(replicate_interval(&b, 1, 3, 2).is_err());
    assert!(replicate_interval(&b, 1, 2, 0).is_err());
}

#[test]
fn double_examples() {
    let d = horizontal_double(&chain(3).unwrap()).unwrap();
    assert_eq!(d.level_sizes(), &[1, 2, 2, 1]);
    assert_eq!(cd_index(&d).unwrap().to_string(), "cc");
    let diamond = horizontal_double(&chain(2).unwrap()).unwrap();
    assert_eq!(diamond.level_sizes(), &[1, 2, 1]);
    assert!(diamond.is_eulerian().eulerian);
    let c1 = chain(1).unwrap();
    assert_eq!(horizontal_double(&c1).unwrap(), c1);

    for name in ["boolean(3)", "dp(4,[[1,2]],3)", "lemma3(2)"] {
        let p = build(name).unwrap();
        let factor = BigUint::from(1u32) << (p.rank() - 1);
        assert_eq!(
            horizontal_double(&p).unwrap().count_maximal_chains(),
            factor * p.count_maximal_chains(),
            "{name}"
        );
    }
}

#[test]
fn join_examples() {
    let b = boolean(3).unwrap();
    assert_eq!(join(&b, &chain(1).unwrap()).unwrap(), b);
    let diamond = horizontal_double(&chain(2).unwrap()).unwrap();
    let j = join(&diamond, &diamond).unwrap();
    assert_eq!(j.rank(), 3);
    assert_eq!(cd_index(&j).unwrap().to_string(), "cc");
}

#[test]
fn join_flag_numbers_factor() {
    let p = build("dp(3,[[1,2]],2)").unwrap();
    let q = boolean(4).unwrap();
    let (fp, fq) = (flag_vector(&p).unwrap(), flag_vector(&q).unwrap());
    let fj = flag_vector(&join(&p, &q).unwrap()).unwrap();
    let (m, k) = (fp.n(), fq.n());
    for mask in 0u64..1 << (m + k) {
        let s = RankSubset::from_mask(m + k, mask).unwrap();
        let left = RankSubset::from_mask(m, mask & ((1 << m) - 1)).unwrap();
        let right = RankSubset::from_mask(k, mask >> m).unwrap();
        assert_eq!(fj.get(&s), &(fp.get(&left) * fq.get(&right)), "{s}");
    }
}

#[test]
fn join_cd_index_associative() {
    let names = [
        "boolean(3)",
        "dp(2,[[1,2]],2)",
        "double(chain(3))",
        "dual(dp(4,[[1,2]],2))",
    ];
    for a in names {
        for b in names {
            for c in ["boolean(2)", "boolean(4)"] {
                let (p, q, r) = (build(a).unwrap(), build(b).unwrap(), build(c).unwrap());
                let left = join(&join(&p, &q).unwrap(), &r).unwrap();
                let right = join(&p, &join(&q, &r).unwrap()).unwrap();
                assert_eq!(
                    cd_index(&left).unwrap(),
                    cd_index(&right).unwrap(),
                    "{a} {b} {c}"
                );
            }
        }
    }
}

#[test]
fn glue_examples_and_errors() {
    let c3 = chain(3).unwrap();
    let b3 = boolean(3).unwrap();
    assert_eq!(glue(&[(b3.clone(), vec![0, 1, 2, 3])]).unwrap(), b3);
    let two = glue(&[(c3.clone(), vec![0, 3]), (c3.clone(), vec![0, 3])]).unwrap();
    assert_eq!(two.level_sizes(), &[1, 2, 2, 1]);
    assert_eq!(two.count_maximal_chains(), BigUint::from(2u32));

    assert!(matches!(
        glue(&[(c3.clone(), vec![0, 1, 3]), (b3.clone(), vec![0, 1, 3])]),
        Err(Error::GlueMismatch { rank: 1, .. })
    ));
    assert!(matches!(
        glue(&[(c3.clone(), vec![1, 3]), (c3.clone(), vec![0, 3])]),
        Err(Error::InvalidArgument(_))
    ));
    // Two parallel chains glued against a doubled chain at all ranks: the
    // first pairs (0,0),(1,1) at rank 1-2; the double relates every pair.
    let double = horizontal_double(&c3).unwrap();
    assert!(matches!(
        glue(&[(two, vec![0, 1, 2, 3]), (double, vec![0, 1, 2, 3])]),
        Err(Error::GlueInconsistent { .. })
    ));
}

#[test]
fn even_interval_system_validation() {
    assert!(IntervalSystem::new(4, [(1, 2), (3, 4)])
        .unwrap()
        .is_even_system());
    assert!(IntervalSystem::new(6, [(1, 4), (3, 6)])
        .unwrap()
        .is_even_system());
    assert!(!IntervalSystem::new(4, [(1, 4), (2, 3)])
        .unwrap()
        .is_even_system());
    assert!(!IntervalSystem::new(4, [(1, 3)]).unwrap().is_even_system());
    assert!(!IntervalSystem::new(6, [(1, 4), (4, 5)])
        .unwrap()
        .is_even_system());
    assert!(IntervalSystem::new(4, [(0, 2)]).is_err());
}

#[test]
fn dp_chain_counts_and_eulerian() {
    for n in 1..=8 {
        for sys in IntervalSystem::enumerate_even(n, 2) {
            for copies in 1..=3u64 {
                let p = dp_poset(n, &sys, copies, false).unwrap();
                let expected =
                    (BigUint::from(1u32) << n) * BigUint::from(copies).pow(sys.len() as u32);
                assert_eq!(p.count_maximal_chains(), expected, "{sys:?} N={copies}");
                assert!(p.is_eulerian().eulerian, "{sys:?} N={copies}");
            }
        }
    }
    let p = dp_poset(4, &IntervalSystem::new(4, [(1, 4)]).unwrap(), 3, false).unwrap();
    assert_eq!(p.count_maximal_chains(), BigUint::from(48u32));
}

#[test]
fn dp_of_one_copy_is_doubled_chain() {
    for n in 1..=6 {
        for sys in IntervalSystem::enumerate_even(n, 2) {
            let p = dp_poset(n, &sys, 1, false).unwrap();
            assert_eq!(cd_index(&p).unwrap(), CdPolynomial::c_power(n));
        }
    }
}

#[test]
fn dp_cd_index_ignores_interval_order() {
    for n in 2..=6 {
        for sys in IntervalSystem::enumerate_even(n, 2) {
            if sys.len() < 2 {
                continue;
            }
            let mut rev = sys.clone();
            rev.intervals.reverse();
            let a = cd_index(&dp_poset(n, &sys, 2, false).unwrap()).unwrap();
            let b = cd_index(&dp_poset(n, &rev, 2, false).unwrap()).unwrap();
            assert_eq!(a, b, "{sys:?}");
        }
    }
}

#[test]
fn dp_rejects_odd_systems_unless_allowed() {
    let sys = IntervalSystem::new(4, [(1, 3)]).unwrap();
    assert!(dp_poset(4, &sys, 2, false).is_err());
    let p = dp_poset(4, &sys, 2, true).unwrap();
    assert!(!p.is_eulerian().eulerian);
}

/// With N copies per interval the single-interval family is
/// `N c^n - (N-1)(cc-2d)^{n/2}`.
#[test]
fn single_interval_family_closed_form() {
    let cc_2d = &CdPolynomial::c_power(2) - &CdPolynomial::monomial("d".parse().unwrap(), 2);
    for n in [2, 4, 6, 8] {
        let sys = IntervalSystem::new(n, [(1, n)]).unwrap();
        let pow = cc_2d.pow((n / 2) as u32);
        for copies in 1..=4u64 {
            let k = BigInt::from(copies);
            let expected = &CdPolynomial::c_power(n).scale(&k) - &pow.scale(&(&k - 1));
            let actual = cd_index(&dp_poset(n, &sys, copies, false).unwrap()).unwrap();
            assert_eq!(actual, expected, "n={n} N={copies}");
        }
    }
    assert_eq!(
        cd_product(&CdPolynomial::c_power(1), &cc_2d).to_string(),
        "ccc - 2cd"
    );
}

/// For identified x at rank 2 and y at rank n-1 in the pre-double three-part
/// glue, [x, y] has one more element of even rank than of odd rank.
#[test]
fn three_part_glue_interval_parity() {
    let n = 7;
    for copies in 1..=3u64 {
        let p = lemma2_glued(n, copies).unwrap();
        let order = p.order();
        let (lo, hi) = (2, n - 1);
        // Shared blocks come first in each glued level; both have N+1 elements.
        let shared = copies as usize + 1;
        let mut pairs = 0;
        for x in 0..shared {
            for y in 0..shared {
                if !order.above(lo, hi).get(x, y) {
                    continue;
                }
                let mut excess = 0i64;
                for r in lo..=hi {
                    let (a, b) = (order.above(lo, r), order.above(r, hi));
                    let inside = (0..p.level_size(r))
                        .filter(|&z| a.get(x, z) && b.get(z, y))
                        .count() as i64;
                    excess += if r % 2 == 0 { inside } else { -inside };
                }
                assert_eq!(excess, 1, "N={copies} x={x} y={y}");
                pairs += 1;
            }
        }
        assert!(pairs > 0);
    }
}

/// `L_Q(dp(n, sys, N)) / N^k` moves toward the limit vector as N grows.
#[test]
fn finite_l_vectors_approach_the_limit() {
    for n in 1..=6 {
        for sys in IntervalSystem::enumerate_even(n, 2) {
            let k = sys.len() as u32;
            let limit = limit_l_vector(n, &sys).unwrap();
            let deviations: Vec<Vec<BigRational>> = (1..=4u64)
                .map(|copies| {
                    let l =
                        l_vector(&flag_vector(&dp_poset(n, &sys, copies, false).unwrap()).unwrap());
                    let scale = BigRational::from_integer(BigInt::from(copies).pow(k));
                    l.entries()
                        .iter()
                        .enumerate()
                        .map(|(mask, v)| {
                            let q = RankSubset::from_mask(n, mask as u64).unwrap();
                            let target = BigRational::from_integer(limit.get(&q).into());
                            (v / &scale - target).abs()
                        })
                        .collect()
                })
                .collect();
            for q in 0..1usize << n {
                for pair in deviations.windows(2) {
                    assert!(pair[1][q] <= pair[0][q], "{sys:?} Q={q:b}");
                }
                let qs = RankSubset::from_mask(n, q as u64).unwrap();
                if limit.get(&qs) != 0 && deviations[0][q] > BigRational::from_integer(0.into()) {
                    assert!(deviations[3][q] < deviations[0][q], "{sys:?} Q={qs}");
                }
            }
        }
    }
}
