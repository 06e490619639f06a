//! Reproduction suites. Each suite recomputes one family of closed forms or
//! invariants and reports expected against actual values row by row.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::analysis::{
    classify_word, count_part1_words, d_position_system, inequality_f_form, inequality_l_form,
    limit_cd_coefficient, limit_l_vector, negative_witness, note_count_formula, valid_windows,
    ClassTag, LimitLVector, WordClass,
};
use crate::cd::{cd_index, cd_product, cd_words, AbPolynomial, CdPolynomial, CdWord};
use crate::construct::{
    dp_poset, horizontal_double, join, lemma2_poset, lemma3_poset, IntervalSystem,
};
use crate::corpus::{eulerian_corpus, join_pairs};
use crate::error::{invalid, Error, Result};
use crate::expr::build;
use crate::flag::{flag_h, flag_vector, l_vector};
use crate::poset::{boolean, chain};
use crate::subset::RankSubset;

/// Suite names in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "double-chain",
    "lemma1",
    "lemma2",
    "lemma3",
    "limit",
    "inequality",
    "note-count",
    "part2",
    "join-mult",
    "witness",
    "boolean-positivity",
    "duality",
    "round-trip",
];

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    /// Informational rows are reported but do not decide the suite.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub criterion: usize,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        let criterion = SUITES.iter().position(|s| *s == suite).unwrap() + 1;
        Self {
            suite,
            criterion,
            rows: Vec::new(),
            notes: Vec::new(),
            millis: 0,
        }
    }

    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass || r.informational)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass && !r.informational)
    }

    fn check(&mut self, label: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.rows.push(Row {
            label: label.into(),
            pass: expected == actual,
            expected,
            actual,
            informational: false,
        });
    }

    fn claim(
        &mut self,
        label: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) {
        self.rows.push(Row {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            informational: false,
        });
    }

    fn info(&mut self, label: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.rows.push(Row {
            label: label.into(),
            pass: expected == actual,
            expected,
            actual,
            informational: true,
        });
    }
}

pub fn run_suite(name: &str) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s)).collect();
    }
    Ok(vec![run_one(name)?])
}

fn run_one(name: &str) -> Result<SuiteReport> {
    let Some(&suite) = SUITES.iter().find(|s| **s == name) else {
        return Err(invalid(format!(
            "unknown suite '{name}', expected all or one of {}",
            SUITES.join(", ")
        )));
    };
    let start = Instant::now();
    let mut r = SuiteReport::new(suite);
    match suite {
        "double-chain" => double_chain(&mut r)?,
        "lemma1" => lemma1(&mut r)?,
        "lemma2" => lemma2(&mut r)?,
        "lemma3" => lemma3(&mut r)?,
        "limit" => limit(&mut r)?,
        "inequality" => inequality(&mut r)?,
        "note-count" => note_count(&mut r)?,
        "part2" => part2(&mut r)?,
        "join-mult" => join_mult(&mut r)?,
        "witness" => witness(&mut r)?,
        "boolean-positivity" => boolean_positivity(&mut r)?,
        "duality" => duality(&mut r)?,
        "round-trip" => round_trip(&mut r)?,
        _ => unreachable!(),
    }
    r.millis = start.elapsed().as_millis();
    Ok(r)
}

fn word(s: &str) -> CdWord {
    s.parse().expect("literal cd-word")
}

fn double_chain(r: &mut SuiteReport) -> Result<()> {
    for rank in 2..=7 {
        let p = horizontal_double(&chain(rank)?)?;
        r.check(
            format!("double(chain({rank}))"),
            CdPolynomial::c_power(rank - 1),
            cd_index(&p)?,
        );
    }
    Ok(())
}

/// `(N+1) c^n - N (cc - 2d)^{n/2}`.
pub fn lemma1_closed_form(n: usize, copies: u64) -> CdPolynomial {
    let cc_2d = &CdPolynomial::c_power(2) - &CdPolynomial::monomial(word("d"), 2);
    let mut pow = CdPolynomial::c_power(0);
    for _ in 0..n / 2 {
        pow = cd_product(&pow, &cc_2d);
    }
    let n_big = BigInt::from(copies);
    &CdPolynomial::c_power(n).scale(&(&n_big + 1)) - &pow.scale(&n_big)
}

fn lemma1(r: &mut SuiteReport) -> Result<()> {
    for n in [4, 6] {
        let sys = IntervalSystem::new(n, [(1, n)])?;
        for copies in 1..=3 {
            let expected = lemma1_closed_form(n, copies);
            let actual = cd_index(&dp_poset(n, &sys, copies, false)?)?;
            r.check(format!("dp({n},[[1,{n}]],{copies})"), &expected, actual);
            let shifted = cd_index(&dp_poset(n, &sys, copies + 1, false)?)?;
            r.info(
                format!("dp({n},[[1,{n}]],{}) against N={copies}", copies + 1),
                &expected,
                shifted,
            );
        }
    }
    r.notes.push(
        "with N disjoint copies per interval, the closed form holds at N+1 copies: \
         dp(n,[[1,n]],N) = N c^n - (N-1)(cc-2d)^{n/2}"
            .into(),
    );
    Ok(())
}

fn lemma2(r: &mut SuiteReport) -> Result<()> {
    let w = word("dcccd");
    for copies in 1..=2u64 {
        let p = lemma2_poset(7, copies)?;
        r.check(
            format!("lemma2(7,{copies}) eulerian"),
            true,
            p.is_eulerian().eulerian,
        );
        let n2 = BigInt::from(copies * copies);
        let expected = (&n2 - &n2 * &n2) * 4;
        r.check(
            format!("lemma2(7,{copies}) [dc^3d]"),
            expected,
            cd_index(&p)?.coeff(&w),
        );
    }
    Ok(())
}

fn lemma3(r: &mut SuiteReport) -> Result<()> {
    let w = word("ccdcc");
    for copies in 1..=3u64 {
        let p = lemma3_poset(copies)?;
        r.check(
            format!("lemma3({copies}) eulerian"),
            true,
            p.is_eulerian().eulerian,
        );
        let m = copies as i64 - 1;
        r.check(
            format!("lemma3({copies}) [ccdcc]"),
            -2 * m * m,
            cd_index(&p)?.coeff(&w),
        );
    }
    Ok(())
}

fn limit(r: &mut SuiteReport) -> Result<()> {
    let one = limit_l_vector(4, &IntervalSystem::new(4, [(1, 4)])?)?;
    r.check(
        "limit L of {[1,4]}",
        "{[]: 1, [1,2,3,4]: -1}",
        fmt_map(one.nonzero()),
    );

    let a = limit_l_vector(6, &IntervalSystem::new(6, [(1, 2), (2, 6)])?)?;
    let b = limit_l_vector(6, &IntervalSystem::new(6, [(1, 5), (5, 6)])?)?;
    let mean = LimitLVector::mean(&[a, b])?;
    for (members, expected) in [
        (vec![3, 4], 0),
        (vec![1, 2, 3, 4], 0),
        (vec![3, 4, 5, 6], 0),
        (vec![1, 2, 3, 4, 5, 6], 1),
    ] {
        let q = RankSubset::from_members(6, members)?;
        let actual = mean.get(&q).cloned().unwrap_or_else(BigRational::zero);
        r.check(format!("halved two-system sum at {q}"), expected, actual);
    }

    let mut bad = 0usize;
    let mut total = 0usize;
    for n in 1..=6 {
        for w in cd_words(n) {
            let sys = d_position_system(&w);
            let value = limit_cd_coefficient(&w, &sys)?;
            let expected = BigInt::one() << w.d_count();
            total += 1;
            if value != expected {
                bad += 1;
                r.check(format!("limit [{w}] at d-positions"), expected, value);
            }
        }
    }
    r.check(
        "words of degree <= 6 with limit coefficient 2^r",
        total,
        total - bad,
    );
    Ok(())
}

fn fmt_map<K: std::fmt::Display, V: std::fmt::Display>(
    m: &std::collections::BTreeMap<K, V>,
) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn inequality(r: &mut SuiteReport) -> Result<()> {
    let corpus = eulerian_corpus()?;
    let (mut instances, mut negative, mut identity_fail) = (0usize, 0usize, 0usize);
    let (mut conj_tested, mut conj_fail) = (0usize, 0usize);
    let mut first_conj_fail = None;
    for e in &corpus {
        let f = flag_vector(&e.poset)?;
        let l = l_vector(&f);
        for win in valid_windows(f.n())? {
            let (t, v) = (win.t(), win.v());
            let ff = inequality_f_form(&f, &t, &v)?;
            let lf = inequality_l_form(&l, &t, &v)?;
            instances += 1;
            if ff < BigInt::zero() || lf < BigRational::zero() {
                negative += 1;
                r.claim(
                    format!("{} T={t} V={v}", e.name),
                    "both forms >= 0",
                    format!("f={ff} L={lf}"),
                    false,
                );
            }
            let scaled = |k: usize| lf.clone() * BigRational::from_integer(BigInt::one() << k);
            if BigRational::from_integer(ff.clone()) != scaled(win.f_to_l_exponent()) {
                identity_fail += 1;
            }
            if e.poset.element_count() <= 200 {
                conj_tested += 1;
                if BigRational::from_integer(ff.clone()) != scaled(v.difference(&t).len()) {
                    conj_fail += 1;
                    first_conj_fail.get_or_insert_with(|| {
                        format!("{} T={t} V={v}: f-form {ff}, L-form {lf}", e.name)
                    });
                }
            }
        }
    }
    r.check(
        "instances with f-form >= 0 and L-form >= 0",
        instances,
        instances - negative,
    );
    r.check(
        "instances with f-form = 2^{|S|+|T|} L-form",
        instances,
        instances - identity_fail,
    );
    r.info(
        "instances (<= 200 elements) with f-form = 2^{|V\\T|} L-form",
        conj_tested,
        conj_tested - conj_fail,
    );
    if conj_fail > 0 {
        r.notes.push(format!(
            "the constant 2^{{|V\\T|}} fails on {conj_fail} of {conj_tested} instances \
             (first: {}); the forms are asserted sign-equivalent only, and the exact \
             relation f-form = 2^{{|S|+|T|}} L-form is checked instead",
            first_conj_fail.unwrap_or_default()
        ));
    }
    r.notes.push(format!(
        "{} posets, {instances} (poset, T, V) instances",
        corpus.len()
    ));
    Ok(())
}

fn note_count(r: &mut SuiteReport) -> Result<()> {
    for n in 1..=10 {
        let (mut counts, mut missing) = ([0usize; 4], 0usize);
        let words = cd_words(n);
        for w in &words {
            match classify_word(w) {
                Ok(c) => counts[c.tag() as usize] += 1,
                Err(Error::Internal(_)) => missing += 1,
                Err(e) => return Err(e),
            }
        }
        r.check(
            format!("n={n}: words classified exactly once"),
            words.len(),
            counts.iter().sum::<usize>(),
        );
        r.check(format!("n={n}: Part3 words without witness"), 0, missing);
        r.check(
            format!("n={n}: Part2 words"),
            1,
            counts[ClassTag::Part2 as usize],
        );
    }
    for n in 5..=10 {
        r.check(
            format!("n={n}: Part1 count"),
            note_count_formula(n),
            count_part1_words(n)?,
        );
    }
    let (mut a, mut b) = (1usize, 1usize);
    for n in 1..=12 {
        r.check(format!("|cd_words({n})|"), b, cd_words(n).len());
        (a, b) = (b, a + b);
    }
    Ok(())
}

fn part2(r: &mut SuiteReport) -> Result<()> {
    let corpus = eulerian_corpus()?;
    let mut ok = 0;
    for e in &corpus {
        let cd = cd_index(&e.poset)?;
        let c = cd.coeff(&CdWord::c_power(cd.degree()));
        if c.is_one() {
            ok += 1;
        } else {
            r.check(format!("{} [c^n]", e.name), 1, c);
        }
    }
    r.check("corpus posets with [c^n] = 1", corpus.len(), ok);
    Ok(())
}

fn join_mult(r: &mut SuiteReport) -> Result<()> {
    for (a, b) in join_pairs() {
        let (p, q) = (build(&a)?, build(&b)?);
        let j = join(&p, &q)?;
        r.check(
            format!("join({a},{b}) eulerian"),
            true,
            j.is_eulerian().eulerian,
        );
        r.check(
            format!("join({a},{b}) cd-index"),
            cd_product(&cd_index(&p)?, &cd_index(&q)?),
            cd_index(&j)?,
        );
    }
    Ok(())
}

fn witness(r: &mut SuiteReport) -> Result<()> {
    let cdd = word("cdd");
    for copies in 1..=3u64 {
        let nw = negative_witness(&cdd, copies)?;
        r.check(
            format!("[cdd] N={copies}"),
            -4 * copies as i64,
            &nw.coefficient,
        );
        r.info(
            format!("[cdd] N={copies} against N copies per interval"),
            -4 * (copies as i64 - 1),
            &nw.coefficient,
        );
    }
    for copies in 1..=3u64 {
        let m = copies as i64 - 1;
        let nw = negative_witness(&word("ccdcc"), copies)?;
        r.check(format!("[ccdcc] N={copies}"), -2 * m * m, nw.coefficient);
    }
    for copies in 1..=2u64 {
        let n2 = BigInt::from(copies * copies);
        let nw = negative_witness(&word("dcccd"), copies)?;
        r.check(
            format!("[dc^3d] N={copies}"),
            (&n2 - &n2 * &n2) * 4,
            nw.coefficient,
        );
    }
    for n in 1..=7 {
        for w in cd_words(n) {
            if !matches!(classify_word(&w)?, WordClass::Part3(_)) {
                continue;
            }
            let values = (2..=4u64)
                .map(|copies| negative_witness(&w, copies).map(|nw| nw.coefficient))
                .collect::<Result<Vec<_>>>()?;
            let decreasing = values.windows(2).all(|p| p[1] < p[0]);
            let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            r.claim(
                format!("[{w}] over N = 2,3,4"),
                "strictly decreasing",
                shown.join(", "),
                decreasing,
            );
        }
    }
    Ok(())
}

fn boolean_positivity(r: &mut SuiteReport) -> Result<()> {
    for k in 1..=6 {
        let cd = cd_index(&boolean(k)?)?;
        let all_positive = cd_words(k.saturating_sub(1))
            .iter()
            .all(|w| cd.coeff(w) > BigInt::zero());
        r.claim(
            format!("boolean({k})"),
            "every coefficient > 0",
            cd,
            all_positive,
        );
    }
    Ok(())
}

fn duality(r: &mut SuiteReport) -> Result<()> {
    let corpus = eulerian_corpus()?;
    let (mut cd_ok, mut f_ok) = (0usize, 0usize);
    for e in &corpus {
        let d = e.poset.dual();
        let cd = cd_index(&e.poset)?;
        let cd_dual = cd_index(&d)?;
        if cd_dual == cd.reversed() {
            cd_ok += 1;
        } else {
            r.check(format!("{} dual cd-index", e.name), cd.reversed(), &cd_dual);
        }
        let f = flag_vector(&e.poset)?;
        if flag_vector(&d)? == f.reversed() {
            f_ok += 1;
        } else {
            r.claim(
                format!("{} dual flag vector", e.name),
                "f_S(P*) = f_rev(S)(P)",
                "differs",
                false,
            );
        }
    }
    r.check("cd_index(dual) = reverse(cd_index)", corpus.len(), cd_ok);
    r.check("f_S(dual) = f_{reverse(S)}", corpus.len(), f_ok);
    Ok(())
}

fn round_trip(r: &mut SuiteReport) -> Result<()> {
    let corpus = eulerian_corpus()?;
    let (mut fh_ok, mut ab_ok) = (0usize, 0usize);
    for e in &corpus {
        let f = flag_vector(&e.poset)?;
        let h = flag_h(&f);
        let back: Vec<BigInt> = f
            .entries()
            .iter()
            .map(|x| BigInt::from(x.clone()))
            .collect();
        if h.to_f() == back {
            fh_ok += 1;
        }
        if cd_index(&e.poset)?.expand_to_ab() == AbPolynomial::from_flag_h(&h) {
            ab_ok += 1;
        } else {
            r.claim(format!("{} ab-index", e.name), "equal", "differs", false);
        }
    }
    r.check("corpus f -> h -> f", corpus.len(), fh_ok);
    r.check("expand(cd_index) = ab-index from h", corpus.len(), ab_ok);
    for rank in 2..=7 {
        let outcome = match cd_index(&chain(rank)?) {
            Err(Error::NotCdExpressible { .. }) => "not-cd-expressible".to_string(),
            Err(e) => format!("other error: {e}"),
            Ok(cd) => format!("accepted: {cd}"),
        };
        r.check(
            format!("cd_index(chain({rank}))"),
            "not-cd-expressible",
            outcome,
        );
    }
    Ok(())
}
