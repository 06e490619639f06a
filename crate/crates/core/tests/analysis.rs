use std::collections::BTreeMap;

use eulerian::analysis::classify::coefficient_from_l;
use eulerian::analysis::{
    classify_word, d_position_system, inequality_f_form, inequality_l_form, limit_cd_coefficient,
    limit_l_vector, negative_witness, nonneg_certificate, valid_windows, InequalityWindow,
    LimitLVector, WitnessKind, WordClass,
};
use eulerian::corpus::eulerian_corpus;
use eulerian::{
    boolean, cd_index, cd_words, chain, flag_vector, l_vector, CdWord, IntervalSystem, RankSubset,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn w(s: &str) -> CdWord {
    s.parse().unwrap()
}

fn set(n: usize, m: &[usize]) -> RankSubset {
    RankSubset::from_members(n, m.iter().copied()).unwrap()
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

#[test]
fn limit_examples() {
    let two = limit_l_vector(4, &IntervalSystem::new(4, [(1, 2), (3, 4)]).unwrap()).unwrap();
    let expected: BTreeMap<RankSubset, i64> = [
        (set(4, &[]), 1),
        (set(4, &[1, 2]), -1),
        (set(4, &[3, 4]), -1),
        (set(4, &[1, 2, 3, 4]), 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(two.nonzero(), &expected);

    let dd = IntervalSystem::new(4, [(1, 2), (3, 4)]).unwrap();
    assert_eq!(
        limit_cd_coefficient(&w("dd"), &dd).unwrap(),
        BigInt::from(4)
    );
    let d3 = IntervalSystem::new(7, [(1, 2), (6, 7)]).unwrap();
    assert_eq!(
        limit_cd_coefficient(&w("dcccd"), &d3).unwrap(),
        BigInt::from(4)
    );
    assert_eq!(d_position_system(&w("dcccd")), d3);
    let empty = IntervalSystem::new(5, []).unwrap();
    assert_eq!(
        limit_cd_coefficient(&w("ccccc"), &empty).unwrap(),
        BigInt::from(1)
    );

    // Non-even systems are accepted.
    let odd = limit_l_vector(3, &IntervalSystem::new(3, [(1, 3)]).unwrap()).unwrap();
    assert_eq!(odd.get(&set(3, &[1, 2, 3])), -1);
}

#[test]
fn limit_budget() {
    let sys = IntervalSystem::new(2, std::iter::repeat_n((1, 2), 21)).unwrap();
    assert!(matches!(
        limit_l_vector(2, &sys),
        Err(eulerian::Error::ResourceLimit { .. })
    ));
}

#[test]
fn halved_two_system_sum() {
    let a = limit_l_vector(6, &IntervalSystem::new(6, [(1, 2), (2, 6)]).unwrap()).unwrap();
    let b = limit_l_vector(6, &IntervalSystem::new(6, [(1, 5), (5, 6)]).unwrap()).unwrap();
    let mean = LimitLVector::mean(&[a, b]).unwrap();
    let at = |m: &[usize]| {
        mean.get(&set(6, m))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    };
    assert_eq!(at(&[3, 4]), rat(0, 1));
    assert_eq!(at(&[1, 2, 3, 4]), rat(0, 1));
    assert_eq!(at(&[3, 4, 5, 6]), rat(0, 1));
    assert_eq!(at(&[1, 2, 3, 4, 5, 6]), rat(1, 1));
}

#[test]
fn inequality_examples() {
    let fb = flag_vector(&boolean(3).unwrap()).unwrap();
    let lb = l_vector(&fb);
    let (t, v) = (set(2, &[1]), set(2, &[1, 2]));
    assert_eq!(inequality_f_form(&fb, &t, &v).unwrap(), BigInt::from(1));
    assert_eq!(inequality_l_form(&lb, &t, &v).unwrap(), rat(1, 2));

    let fc = flag_vector(&chain(3).unwrap()).unwrap();
    assert_eq!(inequality_f_form(&fc, &t, &v).unwrap(), BigInt::from(-1));

    // T = {1, 2} inside the single run V = {1, 2} violates the precondition.
    assert!(inequality_f_form(&fb, &set(2, &[1, 2]), &v).is_err());
    assert!(InequalityWindow::new(set(2, &[2]), set(2, &[1])).is_err());

    let empty = set(2, &[]);
    assert_eq!(
        inequality_f_form(&fb, &empty, &empty).unwrap(),
        BigInt::from(6)
    );
}

/// The f-form equals 2^{|S|+|T|} times the L-form for every flag vector, not
/// only Eulerian ones.
#[test]
fn inequality_forms_are_proportional() {
    for p in [
        chain(4).unwrap(),
        boolean(4).unwrap(),
        eulerian::expr::build("dni(chain(4),1,2,3)").unwrap(),
    ] {
        let f = flag_vector(&p).unwrap();
        let l = l_vector(&f);
        for win in valid_windows(f.n()).unwrap() {
            let ff = inequality_f_form(&f, &win.t(), &win.v()).unwrap();
            let lf = inequality_l_form(&l, &win.t(), &win.v()).unwrap();
            let scale = BigRational::from_integer(BigInt::from(1) << win.f_to_l_exponent());
            assert_eq!(BigRational::from_integer(ff), lf * scale);
        }
    }
}

#[test]
fn classifier_examples() {
    match classify_word(&w("ccdcc")).unwrap() {
        WordClass::Part3(wit) => assert_eq!(wit.kind, WitnessKind::Ccdcc),
        other => panic!("{other:?}"),
    }
    match classify_word(&w("dd")).unwrap() {
        WordClass::Part3(wit) => assert_eq!(wit.subword, w("dd")),
        other => panic!("{other:?}"),
    }
    let c = nonneg_certificate(&w("dccc")).unwrap();
    assert_eq!(
        (c.s, c.t, c.v),
        (set(5, &[]), set(5, &[1]), set(5, &[1, 2, 3, 4, 5]))
    );
    let c = nonneg_certificate(&w("cdc")).unwrap();
    assert_eq!(
        (c.s, c.t, c.v),
        (set(4, &[1]), set(4, &[2]), set(4, &[2, 3, 4]))
    );
    let c = nonneg_certificate(&w("cdcdc")).unwrap();
    assert_eq!((c.s, c.t), (set(7, &[4]), set(7, &[3, 5])));
}

/// Every certificate satisfies the window precondition and reproduces the
/// cd coefficient from the L-vector of every Eulerian corpus poset.
#[test]
fn certificates_are_sound() {
    let corpus = eulerian_corpus().unwrap();
    let mut by_degree: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for e in &corpus {
        let l = l_vector(&flag_vector(&e.poset).unwrap());
        by_degree
            .entry(l.n())
            .or_default()
            .push((e.name.clone(), l));
    }
    let mut checked = 0;
    for n in 1..=8 {
        for word in cd_words(n) {
            let Ok(cert) = nonneg_certificate(&word) else {
                continue;
            };
            assert!(cert.window().is_ok(), "{word}");
            assert_eq!(cert.v, cert.s.complement());
            for (name, l) in by_degree.get(&n).into_iter().flatten() {
                let direct = coefficient_from_l(&word, l);
                assert_eq!(cert.evaluate(l), direct, "{word} on {name}");
                assert!(direct >= BigRational::zero(), "{word} on {name}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn witness_examples() {
    let nw = negative_witness(&w("dcccd"), 2).unwrap();
    assert_eq!((nw.prefix_degree, nw.suffix_degree), (0, 0));
    assert_eq!(nw.coefficient, BigInt::from(-48));
    let nw = negative_witness(&w("ccdcc"), 3).unwrap();
    assert_eq!(nw.coefficient, BigInt::from(-8));
    assert!(nw.poset.is_eulerian().eulerian);

    // The witness coefficient factors through the joined Boolean algebras.
    let nw = negative_witness(&w("cdccdc"), 3).unwrap();
    let cd = cd_index(&nw.poset).unwrap();
    assert_eq!(cd.coeff(&w("cdccdc")), nw.coefficient);
    assert!(nw.coefficient < BigInt::zero());
}
