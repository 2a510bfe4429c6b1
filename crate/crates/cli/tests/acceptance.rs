//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails or overruns its time budget.

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gassmann_core::character::{
    char_equal, frobenius_inner_product, induce, inner_product, linear_characters, permutation_character,
    ClassFunction,
};
use gassmann_core::cyclotomic::{cyclotomic_polynomial, lcm, Cyclotomic, Rational};
use gassmann_core::gassmann::{
    catalog, catalog_instance, class_intersection_counts, is_gassmann_triple, Materialized,
};
use gassmann_core::group::{conjugacy_classes, ConjugacyClassTable, FiniteGroup, PermGroup, Subgroup};
use gassmann_core::tilde::TildeGroup;
use gassmann_core::verify::{
    low_index_subgroups, verify_decomposition, verify_irreducibility, verify_main_distinguish,
    verify_theorem_group_exhaustive, Detail, VerificationReport,
};
use gassmann_core::DEFAULT_ELEMENT_CAP as CAP;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn instance(name: &str) -> Materialized {
    catalog_instance(name).unwrap().materialize(CAP).unwrap()
}

fn whole_table<G: FiniteGroup>(g: &G) -> Arc<ConjugacyClassTable> {
    Arc::new(conjugacy_classes(g, Arc::new(Subgroup::whole(g))))
}

fn subgroups(g: &PermGroup) -> Vec<Arc<Subgroup>> {
    oracle::all_subgroups(g).into_iter().map(|e| Arc::new(Subgroup::from_elements(g, e).unwrap())).collect()
}

fn failing_cases(r: &VerificationReport) -> Vec<String> {
    r.cases.iter().filter(|c| !c.passed).map(|c| c.id.clone()).collect()
}

fn value_field(r: &VerificationReport, case: &str) -> Option<Cyclotomic> {
    match r.case(case)?.field("value")? {
        Detail::Value(v) => Some(v.clone()),
        _ => None,
    }
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let argv = std::iter::once("gassmann").chain(args.iter().copied()).chain(["--json"]);
    let (code, out) = gassmann::run_command_with_env(argv, None);
    (code, serde_json::from_str(&out).expect("JSON output"))
}

fn catalog_args(cmd: &[&str], name: &str, parts: &[&str]) -> Vec<String> {
    cmd.iter().map(|s| s.to_string()).chain(parts.iter().map(|p| format!("catalog:{name}:{p}"))).collect()
}

fn cli_outcome(cmd: &[&str], name: &str, parts: &[&str]) -> (i32, Value) {
    let args = catalog_args(cmd, name, parts);
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    cli_json(&refs)
}

fn irreducibility() -> Check {
    let one = Cyclotomic::one(1);
    let mut summary = Vec::new();
    for (name, order, secs) in [("s3-c2", 162usize, 5), ("gl3f2", 367_416, 60)] {
        let start = Instant::now();
        let m = instance(name);
        let r = verify_irreducibility(&m.group, &m.h, 3, CAP).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{name}: failing cases {:?}", failing_cases(&r));
        let g_side = value_field(&r, "norm-over-G~").ok_or("missing G~ value")?;
        let h_side = value_field(&r, "norm-over-H~").ok_or("missing H~ value")?;
        ensure!(g_side == one && h_side == one, "{name}: norms {g_side} and {h_side}");
        let (code, doc) = cli_outcome(&["verify", "irreducible"], name, &["g", "h"]);
        ensure!(code == 0 && doc["outcome"] == "pass", "{name}: cli exit {code}");
        ensure!(r.instance.contains(&format!("|G̃| = {order}")), "{name}: unexpected order in {}", r.instance);
        let elapsed = start.elapsed();
        ensure!(elapsed < Duration::from_secs(secs), "{name}: took {elapsed:.1?}, budget {secs}s");
        summary.push(format!("{name} <Ind χ, Ind χ> = 1 both ways"));
    }
    Ok(summary.join("; "))
}

fn reciprocity() -> Check {
    let g = oracle::s4();
    let table = whole_table(&g);
    let subs = subgroups(&g);
    let mut rng = StdRng::seed_from_u64(0xacce);
    for case in 0..50 {
        let k = subs[rng.random_range(0..subs.len())].clone();
        let chars = linear_characters(&g, k.clone(), None).map_err(|e| e.to_string())?;
        let lam = &chars[rng.random_range(0..chars.len())];
        let values = (0..table.len())
            .map(|_| {
                let a = Cyclotomic::from_integer(12, rng.random_range(-4..=4));
                let b = Cyclotomic::root_of_unity(12, rng.random_range(0..12))
                    .scale(&Rational::new(rng.random_range(-3..=3).into(), rng.random_range(1..=4).into()));
                a.try_add(&b).unwrap()
            })
            .collect();
        let psi = ClassFunction::new(table.clone(), values).map_err(|e| e.to_string())?;
        let lhs = inner_product(&induce(&g, &table, lam).map_err(|e| e.to_string())?, &psi)
            .map_err(|e| e.to_string())?;
        let rhs = frobenius_inner_product(lam, &psi).map_err(|e| e.to_string())?;
        // (1/|K|) Σ_{k ∈ K} λ(k) conj ψ(k), element by element
        let mut direct = Cyclotomic::zero(12);
        for &x in k.elements() {
            let value = lam.value(x).unwrap().embed(12).unwrap();
            let term = value.try_mul(&psi.value_at(x).unwrap().conjugate()).unwrap();
            direct = direct.try_add(&term).unwrap();
        }
        let direct = direct.scale(&Rational::new(BigInt::from(1), BigInt::from(k.order())));
        ensure!(lhs == rhs && rhs == direct, "case {case}: {lhs} vs {rhs} vs {direct}");
    }
    Ok("50 random S4 cases agree exactly".into())
}

fn decomposition() -> Check {
    let mut summary = Vec::new();
    for (name, part) in [("s3-c2", 3i64), ("gl3f2", 7)] {
        let m = instance(name);
        let r = verify_decomposition(&m.group, &m.h, 3, CAP).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{name}: failing cases {:?}", failing_cases(&r));
        let degrees = r.case("degrees").ok_or("missing degrees")?;
        ensure!(
            matches!(degrees.field("total"), Some(Detail::Integer(t)) if *t == 3 * part)
                && matches!(degrees.field("parts"), Some(Detail::Integers(p)) if p == &[part; 3]),
            "{name}: degree bookkeeping {:?}",
            degrees.fields
        );
        let (code, doc) = cli_outcome(&["verify", "decomposition"], name, &["g", "h"]);
        ensure!(code == 0 && doc["outcome"] == "pass", "{name}: cli exit {code}");
        summary.push(format!("{name} {} = {part}+{part}+{part}", 3 * part));
    }
    Ok(format!("{}; negative controls rejected", summary.join(", ")))
}

fn theorem_group() -> Check {
    let m = instance("s3-c2");
    let r = verify_theorem_group_exhaustive(&m.group, &m.h, 3, CAP).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "failing cases {:?}", failing_cases(&r));
    let space = r.case("search-space").ok_or("missing search-space")?;
    let t = TildeGroup::new(m.group, &m.h, 3, CAP).map_err(|e| e.to_string())?;
    let all = oracle::all_subgroups(&t);
    for n in 1..=5 {
        let expected: Vec<Vec<usize>> = all.iter().filter(|s| s.len() * n == t.order()).cloned().collect();
        let got: Vec<Vec<usize>> = low_index_subgroups(&t, n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|s| s.elements().to_vec())
            .collect();
        ensure!(got == expected, "index {n}: {} subgroups vs {} by brute force", got.len(), expected.len());
    }
    let (code, doc) = cli_outcome(&["verify", "theorem-group"], "s3-c2", &["g", "h"]);
    ensure!(code == 0 && doc["outcome"] == "pass", "cli exit {code}");
    let field = |k| match space.field(k) {
        Some(Detail::Integer(n)) => *n,
        _ => -1,
    };
    Ok(format!(
        "{} index-3 subgroups, {} characters, {} hits, all conjugate; low-index matches {} brute-force subgroups",
        field("subgroups"),
        field("characters"),
        field("hits"),
        all.len()
    ))
}

fn distinguish() -> Check {
    let m = instance("gl3f2");
    let r = verify_main_distinguish(&m.group, &m.h, &m.h_prime, 3, CAP).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "failing cases {:?}", failing_cases(&r));
    for clause in ["a:lifted-gassmann", "b:not-conjugate", "c:character-count"] {
        ensure!(r.case(clause).is_some_and(|c| c.passed), "clause {clause} missing or failed");
    }
    let count = match r.case("c:character-count").and_then(|c| c.field("count")) {
        Some(Detail::Integer(n)) => *n,
        _ => 0,
    };
    ensure!(count > 0, "no order-3 characters of H̃′ were checked");
    let (code, doc) = cli_outcome(&["verify", "distinguish"], "gl3f2", &["g", "h", "h2"]);
    ensure!(code == 0 && doc["outcome"] == "pass", "cli exit {code}");
    Ok(format!("clauses a, b hold; c holds for all {count} order-3 characters"))
}

fn gassmann_detection() -> Check {
    let m = instance("gl3f2");
    let g = &m.group;
    let table = whole_table(g);
    let (h, h2) = (Arc::new(m.h), Arc::new(m.h_prime));
    let r = is_gassmann_triple(g, &table, &h, &h2).map_err(|e| e.to_string())?;
    ensure!(r.is_gassmann && !r.is_trivial, "gassmann={} trivial={}", r.is_gassmann, r.is_trivial);
    let counts =
        (class_intersection_counts(&table, &h).unwrap(), class_intersection_counts(&table, &h2).unwrap());
    for (c, &rep) in table.representatives().iter().enumerate() {
        let fixed = (oracle::fixed_cosets(g, h.elements(), rep), oracle::fixed_cosets(g, h2.elements(), rep));
        ensure!(
            (counts.0[c] == counts.1[c]) == (fixed.0 == fixed.1),
            "class {c}: counts {:?}/{:?}, fixed points {fixed:?}",
            counts.0[c],
            counts.1[c]
        );
    }
    let (code, doc) = cli_outcome(&["gassmann", "check"], "gl3f2", &["g", "h", "h2"]);
    ensure!(
        code == 0 && doc["details"]["is_gassmann"] == true && doc["details"]["is_trivial"] == false,
        "cli exit {code}, details {}",
        doc["details"]
    );
    let mut pairs = 0;
    for g in [oracle::s3(), oracle::s4()] {
        let table = whole_table(&g);
        let subs = subgroups(&g);
        let chars: Vec<ClassFunction> =
            subs.iter().map(|s| permutation_character(&g, &table, s).unwrap()).collect();
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                let r = is_gassmann_triple(&g, &table, a, b).map_err(|e| e.to_string())?;
                let by_counts = class_intersection_counts(&table, a).unwrap()
                    == class_intersection_counts(&table, b).unwrap();
                let by_chars = char_equal(&chars[i], &chars[j]).unwrap();
                ensure!(
                    r.is_gassmann == by_counts && by_counts == by_chars,
                    "criteria disagree on pair ({i}, {j})"
                );
                ensure!(
                    r.is_trivial == oracle::brute_conjugate(&g, a.elements(), b.elements()),
                    "conjugacy mismatch on pair ({i}, {j})"
                );
                pairs += 1;
            }
        }
    }
    Ok(format!("gl3f2 non-trivial Gassmann, 6 classes agree; {pairs} S3/S4 pairs agree"))
}

fn random_cyclotomic(rng: &mut StdRng, m: u32) -> Cyclotomic {
    let powers: Vec<Rational> = (0..m)
        .map(|_| Rational::new(rng.random_range(-5..=5).into(), rng.random_range(1..=3).into()))
        .collect();
    Cyclotomic::from_powers(m, &powers)
}

fn foundations() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    for m in 1..=30u32 {
        let mut phi_at_zeta = Cyclotomic::zero(m);
        for (i, &c) in cyclotomic_polynomial(m).iter().enumerate() {
            let term = Cyclotomic::root_of_unity(m, i as i64).scale(&Rational::from_integer(c.into()));
            phi_at_zeta = phi_at_zeta.try_add(&term).unwrap();
        }
        ensure!(phi_at_zeta.is_zero(), "Φ_{m}(ζ_{m}) = {phi_at_zeta}");
        for _ in 0..8 {
            let (a, b, c) = (
                random_cyclotomic(&mut rng, m),
                random_cyclotomic(&mut rng, m),
                random_cyclotomic(&mut rng, m),
            );
            let zero = Cyclotomic::zero(m);
            let one = Cyclotomic::one(m);
            let add = |x: &Cyclotomic, y: &Cyclotomic| x.try_add(y).unwrap();
            let mul = |x: &Cyclotomic, y: &Cyclotomic| x.try_mul(y).unwrap();
            ensure!(add(&add(&a, &b), &c) == add(&a, &add(&b, &c)), "m={m}: + not associative");
            ensure!(add(&a, &b) == add(&b, &a), "m={m}: + not commutative");
            ensure!(mul(&mul(&a, &b), &c) == mul(&a, &mul(&b, &c)), "m={m}: × not associative");
            ensure!(mul(&a, &b) == mul(&b, &a), "m={m}: × not commutative");
            ensure!(mul(&a, &add(&b, &c)) == add(&mul(&a, &b), &mul(&a, &c)), "m={m}: not distributive");
            ensure!(
                add(&a, &zero) == a && mul(&a, &one) == a && add(&a, &a.neg()).is_zero(),
                "m={m}: identities"
            );
            ensure!(a.conjugate().conjugate() == a, "m={m}: conjugation is not an involution");
            ensure!(
                mul(&a, &b).conjugate() == mul(&a.conjugate(), &b.conjugate()),
                "m={m}: conjugation not multiplicative"
            );
            let n = rng.random_range(1..=30u32);
            let d = random_cyclotomic(&mut rng, n);
            let k = lcm(m, n);
            let (ak, dk) = (a.embed(k).unwrap(), d.embed(k).unwrap());
            ensure!(add(&ak, &dk).try_sub(&dk).unwrap() == a, "mixed orders {m}, {n}");
        }
    }

    let s3 = instance("s3-c2");
    let t = TildeGroup::new(s3.group.clone(), &s3.h, 3, CAP).map_err(|e| e.to_string())?;
    ensure!(t.order() == 162, "|G̃| = {}", t.order());
    let mut seen = BTreeSet::new();
    for key in 0..t.order() {
        let e = t.decode(key);
        ensure!(t.encode(&e) == key, "encode(decode({key})) != {key}");
        seen.insert((e.exps.clone(), e.base));
    }
    ensure!(seen.len() == 162, "decode is not injective");

    let gl = instance("gl3f2");
    let big = TildeGroup::new(gl.group.clone(), &gl.h, 3, CAP).map_err(|e| e.to_string())?;
    for t in [&t, &big] {
        for _ in 0..5000 {
            let (a, b, c) = (
                rng.random_range(0..t.order()),
                rng.random_range(0..t.order()),
                rng.random_range(0..t.order()),
            );
            ensure!(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)), "associativity on ({a}, {b}, {c})");
            ensure!(t.mul(a, t.identity()) == a && t.mul(t.identity(), a) == a, "identity on {a}");
            ensure!(t.mul(a, t.inv(a)) == t.identity(), "inverse on {a}");
        }
    }

    let mut checked = 0usize;
    let groups = [
        oracle::s3(),
        oracle::s4(),
        oracle::a4(),
        oracle::d4(),
        oracle::c3_x_s3(),
        oracle::a5(),
        oracle::s5(),
        gl.group.clone(),
    ];
    for g in &groups {
        let table = whole_table(g);
        for k in subgroups(g) {
            let pi = permutation_character(g, &table, &k).map_err(|e| e.to_string())?;
            for x in 0..g.order() {
                let expected = Cyclotomic::from_integer(1, oracle::fixed_cosets(g, k.elements(), x));
                ensure!(
                    pi.value_at(x) == Some(&expected),
                    "|G| = {}, |K| = {}, x = {x}",
                    g.order(),
                    k.order()
                );
            }
            checked += 1;
        }
    }
    // the order-162 group is not a permutation group; check it separately
    let table = whole_table(&t);
    for k in oracle::all_subgroups(&t) {
        let k = Arc::new(Subgroup::from_elements(&t, k).unwrap());
        let pi = permutation_character(&t, &table, &k).map_err(|e| e.to_string())?;
        for x in 0..t.order() {
            let expected = Cyclotomic::from_integer(1, oracle::fixed_cosets(&t, k.elements(), x));
            ensure!(pi.value_at(x) == Some(&expected), "|G̃| = 162, |K| = {}, x = {x}", k.order());
        }
        checked += 1;
    }
    Ok(format!("ring axioms m ≤ 30, 162 keys round-trip, fixed points on {checked} subgroups"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    assert!(catalog().len() >= 2);
    let criteria = [
        Criterion { name: "irreducibility", budget: Duration::from_secs(65), run: irreducibility },
        Criterion { name: "frobenius reciprocity", budget: Duration::from_secs(10), run: reciprocity },
        Criterion { name: "decomposition", budget: Duration::from_secs(120), run: decomposition },
        Criterion { name: "exhaustive theorem group", budget: Duration::from_secs(300), run: theorem_group },
        Criterion { name: "distinguishing statement", budget: Duration::from_secs(300), run: distinguish },
        Criterion { name: "gassmann detection", budget: Duration::from_secs(60), run: gassmann_detection },
        Criterion { name: "foundations", budget: Duration::from_secs(60), run: foundations },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(format!("panic: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > c.budget => Err(format!("took {elapsed:.1?}, budget {:?}", c.budget)),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS {} {} ({elapsed:.2?}): {msg}", i + 1, c.name),
            Err(msg) => {
                failures += 1;
                println!("FAIL {} {} ({elapsed:.2?}): {msg}", i + 1, c.name);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
