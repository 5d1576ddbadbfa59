//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use hagge::fuzz::{sample, sample_triangles, FuzzConfig};
use hagge::instance::parse_squared;
use hagge_core::areal::{
    circle_through, collinear, isogonal, isotomic, join, meet, on_circle, on_circumcircle, polar,
    second_intersection, tangent_at, ArealLine, ArealPoint, Circle, TriangleParams,
};
use hagge_core::construct::{run, run_degenerate_h, run_degenerate_k, StartingPoint};
use hagge_core::reflect::{reflect, Side};
use hagge_core::scalar::{Field, Rational};
use hagge_core::verify::{
    check_all, check_degenerate_h, check_degenerate_k, check_fully_generic, check_reproduction,
    symbolic_triangle, CheckReport, CheckStatus,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const T1_TO_T15: [&str; 15] = [
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14", "T15",
];

fn require(report: &CheckReport, ids: &[&str]) -> Result<(), String> {
    for id in ids {
        let rec = report.get(id).ok_or_else(|| format!("{id} missing"))?;
        if rec.status != CheckStatus::Pass {
            return Err(format!("{id} {}: {}", rec.status.as_str(), rec.detail));
        }
    }
    Ok(())
}

fn symbolic_proof() -> Outcome {
    let start = Instant::now();
    let t = symbolic_triangle();
    let r = run(&t, StartingPoint::centroid()).map_err(|e| e.to_string())?;
    require(&check_all(&r), &T1_TO_T15)?;
    let repro = check_reproduction(&r).map_err(|e| e.to_string())?;
    // Hagge circles of G and Q, circle CHA, V1, V3
    require(&repro, &["R12", "R13", "R14", "R10", "R11"])?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "T1-T15 identically zero, closed-form circles match up to scale ({elapsed:.2?})"
    ))
}

fn printed_coordinates() -> Outcome {
    let r = run(&symbolic_triangle(), StartingPoint::centroid()).map_err(|e| e.to_string())?;
    let repro = check_reproduction(&r).map_err(|e| e.to_string())?;
    // Q, L', P1, D, U, H
    require(&repro, &["R3", "R4", "R6", "R2", "R8", "R7"])?;
    Ok("symbolic Q, L', P1, D, U, H match the closed forms projectively".into())
}

fn fuzz_generalization() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_hagge"))
        .args([
            "fuzz",
            "--count",
            "500",
            "--seed",
            "42",
            "--max-coord",
            "40",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let pass = v["summary"]["pass"].as_u64().unwrap_or(0);
    if out.status.code() != Some(0) || pass != 500 {
        return Err(format!("{pass}/500 pass, exit {:?}", out.status.code()));
    }

    // per-instance timing, sequentially, and how often the centroid-only
    // form of the conjugate identity would have held
    let config = FuzzConfig {
        count: 500,
        seed: 42,
        max_coord: 40,
    };
    let (mut slowest, mut total, mut centroid_form) = (Duration::ZERO, Duration::ZERO, 0);
    for i in 0..config.count {
        let start = Instant::now();
        let s = sample(&config, i).map_err(|e| e.to_string())?;
        require(&check_all(&s.construction), &T1_TO_T15)
            .map_err(|e| format!("instance {i}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        total += took;
        let r = &s.construction;
        let iq = isogonal(&r.triangle, &r.q).map_err(|e| e.to_string())?;
        if iq.eq_projective(&isotomic(&r.h).map_err(|e| e.to_string())?) {
            centroid_form += 1;
        }
    }
    let rejected = &v["summary"]["rejected"];
    Ok(format!(
        "500/500 pass T1-T15 (T15 in its general form; the centroid-only form holds in {centroid_form}/500); \
         rejected draws: {rejected}; {total:.2?} total, slowest instance {slowest:.2?}"
    ))
}

fn degenerate_cases() -> Outcome {
    let mut triangles = vec![
        parse_squared("4,5,6").unwrap(),
        parse_squared("169,196,225").unwrap(),
    ];
    triangles.extend(sample_triangles(42, 10, 40));
    for t in &triangles {
        let name = format!("({}, {}, {})", t.sa, t.sb, t.sc);
        let h = run_degenerate_h(t).map_err(|e| format!("{name}: {e}"))?;
        require(&check_degenerate_h(&h), &["T16"]).map_err(|e| format!("{name}: {e}"))?;
        let k = run_degenerate_k(t).map_err(|e| format!("{name}: {e}"))?;
        require(&check_degenerate_k(&k), &["T17", "T18"]).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "T16, T17, T18 exact on {} triangles",
        triangles.len()
    ))
}

fn worked_instance() -> Outcome {
    let t = parse_squared("4,5,6").unwrap();
    let r = run(&t, StartingPoint::centroid()).map_err(|e| e.to_string())?;
    let expected: [(&str, &ArealPoint<Rational>, [i64; 3]); 8] = [
        ("Q", &r.q, [4, 7, 14]),
        ("L", &r.l, [-4, 11, 11]),
        ("L'", &r.l_prime, [-1, 2, 4]),
        ("D", &r.d, [-8, 1, 2]),
        ("P1", &r.p1, [8, -7, -7]),
        ("U", &r.u, [2, 4, 3]),
        ("V1", &r.v1, [1, -10, 34]),
        ("H", &r.h, [15, 21, 35]),
    ];
    for (label, got, [x, y, z]) in expected {
        let want = ArealPoint::from_ints(x, y, z).unwrap();
        if !got.eq_projective(&want) {
            return Err(format!("{label} = {got}, expected {want}"));
        }
    }
    let bhc = Circle {
        u: Rational::from(-7),
        v: Rational::zero(),
        w: Rational::zero(),
    };
    if !r.bhc.same_as(&bhc) {
        return Err(format!("circle BHC is {}", r.bhc));
    }
    Ok("Q, L, L', D, P1, U, V1, H and circle BHC as hand-substituted".into())
}

fn triangle() -> impl Strategy<Value = TriangleParams<Rational>> {
    (1i64..=40, 1i64..=40, 1i64..=40).prop_filter_map("valid triangle", |(a, b, c)| {
        TriangleParams::new(a.into(), b.into(), c.into()).ok()
    })
}

fn point() -> impl Strategy<Value = ArealPoint<Rational>> {
    (-30i64..=30, -30i64..=30, -30i64..=30)
        .prop_filter("finite", |&(x, y, z)| x + y + z != 0)
        .prop_map(|(x, y, z)| ArealPoint::from_ints(x, y, z).unwrap())
}

fn interior() -> impl Strategy<Value = ArealPoint<Rational>> {
    (1i64..=30, 1i64..=30, 1i64..=30).prop_map(|(x, y, z)| ArealPoint::from_ints(x, y, z).unwrap())
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Bc), Just(Side::Ca), Just(Side::Ab)]
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn properties() -> Outcome {
    let runner = || {
        TestRunner::new_with_rng(
            Config {
                failure_persistence: None,
                ..Config::with_cases(200)
            },
            TestRng::deterministic_rng(RngAlgorithm::ChaCha),
        )
    };

    runner()
        .run(&(triangle(), point(), side()), |(t, p, s)| {
            prop_assert!(reflect(s, &t, &reflect(s, &t, &p)).eq_projective(&p));
            Ok(())
        })
        .map_err(|e| fail("reflection involution", e))?;
    runner()
        .run(&(triangle(), point(), side()), |(t, p, s)| {
            let r = reflect(s, &t, &p);
            let (a, b) = (p.unit_sum().unwrap(), r.unit_sum().unwrap());
            let k = match s {
                Side::Bc => 0,
                Side::Ca => 1,
                Side::Ab => 2,
            };
            prop_assert!((a[k].clone() + &b[k]).is_zero());
            Ok(())
        })
        .map_err(|e| fail("midpoint on mirror", e))?;
    runner()
        .run(&(point(), point(), point()), |(p, q, r)| {
            prop_assume!(!collinear(&p, &q, &r));
            let m = meet(&join(&p, &q).unwrap(), &join(&p, &r).unwrap()).unwrap();
            prop_assert!(m.eq_projective(&p));
            Ok(())
        })
        .map_err(|e| fail("join/meet duality", e))?;
    runner()
        .run(&(triangle(), interior()), |(t, p)| {
            let a = ArealPoint::vertex_a();
            let x = second_intersection(&t, &a, &p).unwrap();
            prop_assert!(on_circumcircle(&t, &x));
            prop_assert!(second_intersection(&t, &x, &p).unwrap().eq_projective(&a));
            Ok(())
        })
        .map_err(|e| fail("second-intersection round trip", e))?;
    runner()
        .run(&(triangle(), interior(), 1i64..=9), |(t, p, k)| {
            let x = second_intersection(&t, &ArealPoint::vertex_b(), &p).unwrap();
            let tangent = tangent_at(&t, &x).unwrap();
            prop_assert!(tangent.eq_projective(&polar(&t, &x)));
            let Ok(other) = meet(&tangent, &ArealLine::from_ints(1, k, -1).unwrap()) else {
                return Ok(());
            };
            prop_assume!(!other.eq_projective(&x));
            prop_assert!(second_intersection(&t, &x, &other)
                .unwrap()
                .eq_projective(&x));
            Ok(())
        })
        .map_err(|e| fail("tangent double root", e))?;
    runner()
        .run(&(triangle(), point(), point(), point()), |(t, p, q, r)| {
            prop_assume!(!collinear(&p, &q, &r));
            let c = circle_through(&t, &p, &q, &r).unwrap();
            prop_assert!(on_circle(&t, &c, &p) && on_circle(&t, &c, &q) && on_circle(&t, &c, &r));
            Ok(())
        })
        .map_err(|e| fail("circle_through membership", e))?;
    Ok("six property suites, 200 seeded cases each, all exact".into())
}

fn figure() -> Outcome {
    let path = std::env::temp_dir().join(format!("hagge-acceptance-{}.svg", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_hagge"))
        .args(["figure", "--triangle", "4,5,6", "--point", "1,1,1", "--out"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    let summary: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let svg = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&path);
    let doc = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
    let root = doc.root_element();
    if root.tag_name().name() != "svg" {
        return Err("root element is not svg".into());
    }
    let count = |tag: &str| {
        root.descendants()
            .filter(|n| n.tag_name().name() == tag)
            .count()
    };
    let labels = root
        .descendants()
        .filter(|n| n.attribute("class") == Some("label"))
        .count();
    let residual = summary["max_residual"].as_f64().unwrap_or(f64::INFINITY);
    if count("circle") != 9 || count("line") != 1 || labels < 22 || residual >= 1e-6 {
        return Err(format!(
            "{} circles, {} lines, {labels} labels, residual {residual:e}",
            count("circle"),
            count("line")
        ));
    }
    Ok(format!(
        "9 circles, 1 line, {labels} labels, max on-circle residual {residual:.1e}"
    ))
}

fn fully_generic() -> Outcome {
    let report = check_fully_generic(20_000);
    let s = report.summary();
    if s.fail > 0 {
        return Err(format!("failed: {:?}", report.failed_ids()));
    }
    if s.pass == 15 {
        Ok("P = (l, m, n): T1-T15 identically zero".into())
    } else {
        Ok(report.checks[0].detail.clone())
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("symbolic proof suite", symbolic_proof),
        ("printed-coordinate reproduction", printed_coordinates),
        ("generalization fuzz", fuzz_generalization),
        ("degenerate cases", degenerate_cases),
        ("worked-instance regression", worked_instance),
        ("property suites", properties),
        ("figure", figure),
        ("fully generic symbolic run", fully_generic),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("criterion {}: PASS {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
