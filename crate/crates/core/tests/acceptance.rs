//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, even when an earlier one fails.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use braidrep::coxeter::Family;
use braidrep::reprmap::{
    apply_map, build_an, build_bn, build_d4, build_for_type, build_i2, injectivity_scan_i2_2,
    random_word, verify, RepMap, VerificationReport, VerifyOptions, DEFAULT_SEED,
};
use braidrep::{type_a_realization, BraidElement, BraidWord, CoxeterType, Permutation, Realization};
use common::{all_positive_words, random_signed_word, to_braid_word, RewriteOracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn run_verify(t: &str) -> VerificationReport {
    let map = build_for_type(t.parse().unwrap()).unwrap();
    verify(&map, &VerifyOptions::default())
}

fn same_braid(map: &RepMap, a: &BraidWord, b: &str) -> bool {
    let target = map.target();
    let x = BraidElement::from_word(target, a).unwrap();
    let y = BraidElement::from_word(target, &b.parse().unwrap()).unwrap();
    x.equal(&y).unwrap()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    for k in 2..=12 {
        let r = run_verify(&format!("I2({k})"));
        ensure(r.is_homomorphism, || format!("I2({k}) not a homomorphism"))?;
        ensure(r.diagram.generator_failures == 0, || {
            format!("I2({k}): {} generator-level diagram failures", r.diagram.generator_failures)
        })?;
    }
    let took = within(Duration::from_secs(30), start)?;
    let expected = [
        (2, "2 1 3 2"),
        (4, "2 1 4 3 2 6 5 4 7 6"),
        (6, "2 1 4 3 2 6 8 7 6 10 9 8 11 10"),
    ];
    let mut mismatched = Vec::new();
    for (k, w) in expected {
        let map = build_i2(k).unwrap();
        if !same_braid(&map, &map.f_images()[1], w) {
            mismatched.push(format!("k={k}: f(s2) = \"{}\" differs from \"{w}\"", map.f_images()[1]));
        }
    }
    ensure(mismatched.is_empty(), || mismatched.join("; "))?;
    Ok(format!("I2(2..12) all homomorphisms in {took:.2?}; f(s2) words match for k=2,4,6"))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    for n in 2..=6 {
        let r = run_verify(&format!("B{n}"));
        ensure(r.is_homomorphism, || format!("B{n} not a homomorphism"))?;
        ensure(r.witness("s1s2s1s2", "s2s1s2s1").is_none(), || format!("B{n}: quadruple relation"))?;
        let commuting = r.relations.iter().filter(|c| c.lhs.len() == 4).count();
        let expected = (n - 1) * (n - 2) / 2;
        ensure(commuting == expected, || format!("B{n}: {commuting} commuting relations checked, expected {expected}"))?;
        ensure(r.relations.iter().all(|c| c.equal), || format!("B{n}: a relation fails"))?;
    }
    let took = within(Duration::from_secs(30), start)?;
    Ok(format!("B2..B6 all homomorphisms, quadruple and commuting relations hold, {took:.2?}"))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let r = run_verify("D4");
    ensure(!r.is_homomorphism, || "D4 reported as a homomorphism".into())?;
    let w = r
        .witness("s2s3s2", "s3s2s3")
        .ok_or_else(|| "no s2s3s2 = s3s2s3 witness".to_string())?;
    ensure(w.nf_lhs != w.nf_rhs, || "witness normal forms coincide".into())?;
    ensure(r.source_order == 192, || format!("order {}", r.source_order))?;
    ensure(r.embedding_relations.iter().all(|c| c.holds), || "e violates a Coxeter relation".into())?;
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "D4 witness s2s3s2 = s3s2s3 ({} vs {}), e embeds order 192, {took:.2?}",
        w.nf_lhs, w.nf_rhs
    ))
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let s = injectivity_scan_i2_2(10).map_err(|e| e.to_string())?;
    ensure(s.elements_scanned == 441, || format!("{} elements scanned", s.elements_scanned))?;
    ensure(s.kernel.is_empty(), || format!("kernel {:?}", s.kernel))?;
    ensure(s.all_distinct && s.distinct_images == 441, || format!("{} distinct images", s.distinct_images))?;
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!("441 grid elements, trivial kernel, images pairwise distinct, {took:.2?}"))
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let r = Arc::new(type_a_realization(4).unwrap());
    let mut oracle = RewriteOracle::new();
    let words = all_positive_words(3, 6);
    ensure(words.len() == 729, || format!("{} words", words.len()))?;
    let keyed: Vec<_> = words
        .iter()
        .map(|w| (oracle.class(w), BraidElement::from_word(&r, &to_braid_word(w)).unwrap().key()))
        .collect();
    let mut disagreements = 0usize;
    for (ca, ka) in &keyed {
        for (cb, kb) in &keyed {
            if (ca == cb) != (ka == kb) {
                disagreements += 1;
            }
        }
    }
    ensure(disagreements == 0, || format!("{disagreements} disagreeing pairs"))?;
    let took = within(Duration::from_secs(60), start)?;
    let classes: HashSet<_> = keyed.iter().map(|(c, _)| *c).collect();
    Ok(format!("729 words, {} classes, 0 disagreements, {took:.2?}", classes.len()))
}

fn normal_form_violation<R: Realization>(x: &BraidElement<R>) -> Option<String> {
    let r = x.realization();
    let f = x.factors();
    let w0 = r.longest();
    for (i, a) in f.iter().enumerate() {
        if r.is_identity(a) {
            return Some(format!("identity factor at {i}"));
        }
        if *a == w0 {
            return Some(format!("Delta factor at {i}"));
        }
    }
    for (i, pair) in f.windows(2).enumerate() {
        let right: HashSet<usize> = r.right_descents(&pair[0]).into_iter().collect();
        if !r.left_descents(&pair[1]).iter().all(|s| right.contains(s)) {
            return Some(format!("pair {i},{} not left-weighted", i + 1));
        }
    }
    None
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let groups: Vec<_> = (2..=12).map(|m| Arc::new(type_a_realization(m).unwrap())).collect();
    for i in 0..1000 {
        let r = &groups[rng.gen_range(0..groups.len())];
        let len = rng.gen_range(0..=200);
        let w = random_signed_word(&mut rng, r.rank(), len);
        let x = BraidElement::from_word(r, &w).unwrap();
        if let Some(v) = normal_form_violation(&x) {
            return Err(format!("word {i} on {} strands: {v}", r.rank() + 1));
        }
        let back = BraidElement::from_word(r, &x.to_word()).unwrap();
        ensure(back == x, || format!("word {i}: from_word(to_word(x)) != x"))?;
    }
    for i in 0..1000 {
        let r = &groups[rng.gen_range(0..groups.len())];
        let (la, lb) = (rng.gen_range(0..=200), rng.gen_range(0..=200));
        let wa = random_signed_word(&mut rng, r.rank(), la);
        let wb = random_signed_word(&mut rng, r.rank(), lb);
        let a = BraidElement::from_word(r, &wa).unwrap();
        let b = BraidElement::from_word(r, &wb).unwrap();
        let ab = a.multiply(&b).unwrap();
        ensure(ab == BraidElement::from_word(r, &wa.concat(&wb)).unwrap(), || format!("pair {i}: product"))?;
        ensure(a.multiply(&a.invert()).unwrap().is_identity(), || format!("pair {i}: a a^-1"))?;
        ensure(ab.invert() == b.invert().multiply(&a.invert()).unwrap(), || format!("pair {i}: (ab)^-1"))?;
        ensure(a.multiply(&BraidElement::identity(r)).unwrap() == a, || format!("pair {i}: identity"))?;
        if normal_form_violation(&ab).is_some() {
            return Err(format!("pair {i}: product not in normal form"));
        }
    }
    Ok("1000 words normal, round-trip exact; group laws hold on 1000 pairs".into())
}

fn e_image(map: &RepMap, w: &BraidWord) -> Permutation {
    w.letters().iter().fold(Permutation::identity(map.target_m()), |acc, &l| {
        acc.compose(&map.e_images()[l.unsigned_abs() as usize - 1]).unwrap()
    })
}

fn ac7() -> Outcome {
    let mut maps = Vec::new();
    maps.extend((1..=7).map(|n| build_an(n).unwrap()));
    maps.extend((2..=6).map(|n| build_bn(n).unwrap()));
    maps.extend((2..=12).map(|k| build_i2(k).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for map in &maps {
        for _ in 0..100 {
            let w = random_word(&mut rng, map.source().rank(), 20);
            let braid = apply_map(map, &w).unwrap();
            let via_braid = braid.underlying_permutation();
            let expected = e_image(map, &w);
            ensure(via_braid == expected, || {
                format!("{}: word \"{w}\" gives {} vs {}", map.source_type(), via_braid, expected)
            })?;
        }
    }
    Ok(format!("{} types x 100 words, 0 failures", maps.len()))
}

fn ac8() -> Outcome {
    let r = Arc::new(type_a_realization(12).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let w = BraidWord::new(
        (0..1000)
            .map(|_| {
                let g = rng.gen_range(1..=11);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .collect(),
    );
    let start = Instant::now();
    let x = BraidElement::from_word(&r, &w).unwrap();
    let nf = within(Duration::from_secs(1), start)?;
    ensure(x.is_normal_form(), || "not normal".into())?;
    let start = Instant::now();
    let rep = run_verify("I2(6)");
    ensure(rep.is_homomorphism, || "I2(6) not a homomorphism".into())?;
    let v = within(Duration::from_secs(5), start)?;
    Ok(format!("1000-letter A12 normal form in {nf:.2?}; verify I2(6) in {v:.2?}"))
}

fn ac9() -> Outcome {
    let mut checked = 0;
    let mut check = |t: CoxeterType, got: usize| -> Result<(), String> {
        let want = t.order().expect("finite") as usize;
        let formula = match t.family() {
            Family::I2 => 2 * t.param(),
            Family::B => (1..=t.param()).product::<usize>() << t.param(),
            Family::A => (1..=t.param() + 1).product(),
            Family::D => 192,
        };
        checked += 1;
        ensure(got == want && got == formula, || format!("{t}: closure {got}, expected {formula}"))
    };
    for k in 2..=12 {
        check(CoxeterType::i2(k).unwrap(), build_i2(k).unwrap().source().order())?;
    }
    for n in 2..=6 {
        check(CoxeterType::b(n).unwrap(), build_bn(n).unwrap().source().order())?;
    }
    check(CoxeterType::d(4).unwrap(), build_d4().unwrap().source().order())?;
    for n in 1..=7 {
        check(CoxeterType::a(n).unwrap(), build_an(n).unwrap().source().order())?;
    }
    Ok(format!("{checked} closure sizes match"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "I2(k) lifts are homomorphisms", ac1),
        ("AC2", "B_n lifts are homomorphisms", ac2),
        ("AC3", "D4 counterexample", ac3),
        ("AC4", "I2(2) injectivity scan", ac4),
        ("AC5", "positive words agree with rewriting oracle", ac5),
        ("AC6", "normal-form invariants", ac6),
        ("AC7", "projection square commutes", ac7),
        ("AC8", "performance floor", ac8),
        ("AC9", "realization orders", ac9),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("{id} PASS: {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL: {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
