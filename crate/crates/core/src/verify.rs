//! The theorem checklist.
//!
//! Every check reduces to exact zero tests, so a pass on the symbolic
//! realization is a proof for all triangles, and a pass on the rational
//! realization is an exact statement about one instance. Failures are data:
//! each carries the first nonzero residue it met.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::areal::{
    anticomplement, circle_through, collinear_residue, concurrent_residue, conics_proportional,
    isogonal, isotomic, join, meet, polar, symmedian, ArealLine, ArealPoint, Circle, GeometryError,
    TriangleParams,
};
use crate::construct::{run_with_budget, ConstructError, Construction, StartKind, StartingPoint};
use crate::reflect::reflect_ca;
use crate::scalar::{dot, Field, RatFunc, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: &'static str,
    pub name: &'static str,
    pub status: CheckStatus,
    /// Residue witness for failures, a note otherwise.
    pub detail: String,
}

/// Description of the instance a report is about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub sa: String,
    pub sb: String,
    pub sc: String,
    pub point: [String; 3],
    pub realization: &'static str,
}

impl Instance {
    pub fn of<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> Self {
        Instance {
            sa: t.sa.to_string(),
            sb: t.sb.to_string(),
            sc: t.sc.to_string(),
            point: p.coords().clone().map(|c| c.to_string()),
            realization: F::REALIZATION,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub instance: Instance,
    pub checks: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => s.pass += 1,
                CheckStatus::Fail => s.fail += 1,
                CheckStatus::Skipped => s.skipped += 1,
            }
        }
        s
    }

    /// No evaluated check failed.
    pub fn all_passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failed_ids(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.id)
            .collect()
    }
}

/// Check ids and names, in report order.
pub const CHECKS: [(&str, &str); 18] = [
    ("T1", "DA, EB, FC concurrent at Q"),
    ("T2", "P1, P2, P3 collinear on the polar of Q"),
    ("T3", "Hagge circle UVW passes through H"),
    ("T4", "Hagge circle U'V'W' passes through H"),
    ("T5", "Hagge circle UV3W2 passes through H"),
    ("T6", "Hagge circle U3VW1 passes through H"),
    ("T7", "Hagge circle U2V1W passes through H"),
    ("T8", "circle BHC contains U, U', U2, U3"),
    ("T9", "circle CHA contains V, V', V3, V1"),
    ("T10", "circle AHB contains W, W', W1, W2"),
    ("T11", "U', V1, W1, H collinear"),
    ("T12", "V', W2, U2, H collinear"),
    ("T13", "W', U3, V3, H collinear"),
    (
        "T14",
        "ABC perspective with LMN, L'M'N', LN'M', N'ML', M'L'N",
    ),
    ("T15", "isogonal conjugate of Q"),
    ("T16", "orthocentre start: U, V, W coincide with H"),
    (
        "T17",
        "symmedian start: L=L', M=M', N=N', Q=K, four Hagge circles, quadruple perspective",
    ),
    (
        "T18",
        "AB^DE, BC^EF, CA^FD on the polar of K, which is line P1P2P3",
    ),
];

type Outcome = Result<String, String>;

fn residue<F: Field>(what: &str, value: F) -> Result<(), String> {
    if value.is_zero() {
        Ok(())
    } else {
        Err(format!("{what}: residue {value}"))
    }
}

fn geometry(what: &str, e: GeometryError) -> String {
    format!("{what}: {e}")
}

fn same_point<F: Field>(what: &str, p: &ArealPoint<F>, q: &ArealPoint<F>) -> Result<(), String> {
    if p.eq_projective(q) {
        Ok(())
    } else {
        Err(format!("{what}: {p} is not {q}"))
    }
}

fn on_line<F: Field>(what: &str, p: &ArealPoint<F>, line: &ArealLine<F>) -> Result<(), String> {
    residue(what, dot(p.coords(), line.coords()))
}

/// All points on one line; coincident points are allowed.
fn all_collinear<F: Field>(labels: &[&str], pts: &[&ArealPoint<F>]) -> Result<(), String> {
    let base = pts[0];
    let Some(j) = (1..pts.len()).find(|&j| !pts[j].eq_projective(base)) else {
        return Ok(());
    };
    for k in 1..pts.len() {
        if k == j {
            continue;
        }
        let what = format!("{}, {}, {}", labels[0], labels[j], labels[k]);
        residue(&what, collinear_residue(base, pts[j], pts[k]))?;
    }
    Ok(())
}

fn circle_contains<F: Field>(
    t: &TriangleParams<F>,
    circle_label: &str,
    c: &Circle<F>,
    labels: &[&str],
    pts: &[&ArealPoint<F>],
) -> Result<(), String> {
    for (label, p) in labels.iter().zip(pts) {
        residue(&format!("{label} on {circle_label}"), c.value_at(t, p))?;
    }
    Ok(())
}

/// If the joins `X_i Y_i` are concurrent, their common point.
///
/// Both triangles must have distinct vertices, and no vertex may coincide
/// with its partner.
pub fn check_perspective<F: Field>(
    first: [&ArealPoint<F>; 3],
    second: [&ArealPoint<F>; 3],
) -> Result<Option<ArealPoint<F>>, GeometryError> {
    for tri in [&first, &second] {
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            if tri[i].eq_projective(tri[j]) {
                return Err(GeometryError::DegenerateTrianglePair);
            }
        }
    }
    let mut joins = Vec::with_capacity(3);
    for i in 0..3 {
        joins.push(join(first[i], second[i]).map_err(|_| GeometryError::DegenerateTrianglePair)?);
    }
    if !concurrent_residue(&joins[0], &joins[1], &joins[2]).is_zero() {
        return Ok(None);
    }
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        if let Ok(p) = meet(&joins[i], &joins[j]) {
            return Ok(Some(p));
        }
    }
    Err(GeometryError::IdenticalLines)
}

fn perspective_at<F: Field>(
    label: &str,
    first: [&ArealPoint<F>; 3],
    second: [&ArealPoint<F>; 3],
    expected: Option<(&str, &ArealPoint<F>)>,
) -> Result<(), String> {
    let perspector = check_perspective(first, second).map_err(|e| geometry(label, e))?;
    let Some(found) = perspector else {
        let joins: Vec<ArealLine<F>> = (0..3)
            .filter_map(|i| join(first[i], second[i]).ok())
            .collect();
        let det = concurrent_residue(&joins[0], &joins[1], &joins[2]);
        return Err(format!("{label}: not perspective, residue {det}"));
    };
    match expected {
        Some((name, p)) => same_point(&format!("{label} perspector is {name}"), &found, p),
        None => Ok(()),
    }
}

fn t1<F: Field>(r: &Construction<F>) -> Outcome {
    let [a, b, c] = Construction::<F>::vertices();
    let da = join(&r.d, &a).map_err(|e| geometry("DA", e))?;
    let eb = join(&r.e, &b).map_err(|e| geometry("EB", e))?;
    let fc = join(&r.f, &c).map_err(|e| geometry("FC", e))?;
    residue("DA, EB, FC", concurrent_residue(&da, &eb, &fc))?;
    on_line("Q on FC", &r.q, &fc)?;
    Ok(String::new())
}

fn t2<F: Field>(r: &Construction<F>) -> Outcome {
    residue("P1, P2, P3", collinear_residue(&r.p1, &r.p2, &r.p3))?;
    for (label, p) in [("P1", &r.p1), ("P2", &r.p2), ("P3", &r.p3)] {
        on_line(&format!("{label} on polar of Q"), p, &r.polar_q)?;
    }
    Ok(String::new())
}

fn hagge_through_h<F: Field>(r: &Construction<F>, index: usize) -> Outcome {
    let hc = &r.hagge[index];
    let circle = hc
        .circle
        .as_ref()
        .map_err(|e| geometry(&format!("circle {}", hc.label.circle), e.clone()))?;
    residue(
        &format!("H on {}", hc.label.circle),
        circle.value_at(&r.triangle, &r.h),
    )?;
    Ok(format!("Hagge circle of {}", hc.label.of))
}

fn vertex_circle<F: Field>(r: &Construction<F>, index: usize) -> Outcome {
    const LABELS: [[&str; 4]; 3] = [
        ["U", "U'", "U2", "U3"],
        ["V", "V'", "V3", "V1"],
        ["W", "W'", "W1", "W2"],
    ];
    let (name, circle, pts) = &r.vertex_circles()[index];
    circle_contains(&r.triangle, name, circle, &LABELS[index], pts)?;
    Ok(String::new())
}

fn double_simson<F: Field>(r: &Construction<F>, index: usize) -> Outcome {
    let (labels, pts): ([&str; 4], [&ArealPoint<F>; 4]) = match index {
        0 => (["U'", "V1", "W1", "H"], [&r.u_prime, &r.v1, &r.w1, &r.h]),
        1 => (["V'", "W2", "U2", "H"], [&r.v_prime, &r.w2, &r.u2, &r.h]),
        _ => (["W'", "U3", "V3", "H"], [&r.w_prime, &r.u3, &r.v3, &r.h]),
    };
    all_collinear(&labels, &pts)?;
    Ok(String::new())
}

fn t14<F: Field>(r: &Construction<F>) -> Outcome {
    let [a, b, c] = Construction::<F>::vertices();
    let abc = [&a, &b, &c];
    perspective_at("LMN", abc, [&r.l, &r.m, &r.n], Some(("P", r.start.point())))?;
    perspective_at(
        "L'M'N'",
        abc,
        [&r.l_prime, &r.m_prime, &r.n_prime],
        Some(("Q", &r.q)),
    )?;
    perspective_at(
        "LN'M'",
        abc,
        [&r.l, &r.n_prime, &r.m_prime],
        Some(("P1", &r.p1)),
    )?;
    perspective_at(
        "N'ML'",
        abc,
        [&r.n_prime, &r.m, &r.l_prime],
        Some(("P2", &r.p2)),
    )?;
    perspective_at(
        "M'L'N",
        abc,
        [&r.m_prime, &r.l_prime, &r.n],
        Some(("P3", &r.p3)),
    )?;
    Ok(String::new())
}

/// At the centroid: isogonal(Q) ≡ isotomic(H). For other starting points the
/// identity that holds is isogonal(Q) ≡ anticomplement(isogonal(P)), which
/// is the same statement at P = G.
fn t15<F: Field>(r: &Construction<F>) -> Outcome {
    let t = &r.triangle;
    let iq = isogonal(t, &r.q).map_err(|e| geometry("isogonal of Q", e))?;
    if r.start.kind() == StartKind::Centroid {
        let ih = isotomic(&r.h).map_err(|e| geometry("isotomic of H", e))?;
        same_point("isogonal(Q) vs isotomic(H)", &iq, &ih)?;
        return Ok("isogonal(Q) = isotomic(H)".into());
    }
    let ip = isogonal(t, r.start.point()).map_err(|e| geometry("isogonal of P", e))?;
    let target = anticomplement(&ip).map_err(|e| geometry("anticomplement", e))?;
    same_point("isogonal(Q) vs anticomplement(isogonal(P))", &iq, &target)?;
    Ok("general form isogonal(Q) = anticomplement(isogonal(P)); isotomic(H) only at P = G".into())
}

fn t16<F: Field>(r: &Construction<F>) -> Outcome {
    same_point("U = H", &r.u, &r.h)?;
    same_point("V = H", &r.v, &r.h)?;
    same_point("W = H", &r.w, &r.h)?;
    match &r.hagge[0].circle {
        Err(_) => Ok("Hagge circle of H is the point H".into()),
        Ok(c) => Err(format!("circle UVW unexpectedly defined: {c}")),
    }
}

fn t17<F: Field>(r: &Construction<F>) -> Outcome {
    let k = symmedian(&r.triangle);
    same_point("L = L'", &r.l, &r.l_prime)?;
    same_point("M = M'", &r.m, &r.m_prime)?;
    same_point("N = N'", &r.n, &r.n_prime)?;
    same_point("Q = K", &r.q, &k)?;

    let mut circles: Vec<(&str, &Circle<F>)> = Vec::new();
    for hc in &r.hagge {
        let c = hc
            .circle
            .as_ref()
            .map_err(|e| geometry(&format!("circle {}", hc.label.circle), e.clone()))?;
        if !circles.iter().any(|(_, d)| d.same_as(c)) {
            circles.push((hc.label.circle, c));
        }
    }
    if circles.len() != 4 {
        return Err(format!(
            "{} distinct Hagge circles, expected 4",
            circles.len()
        ));
    }

    let [a, b, c] = Construction::<F>::vertices();
    let abc = [&a, &b, &c];
    perspective_at("LMN", abc, [&r.l, &r.m, &r.n], Some(("K", &k)))?;
    perspective_at("LNM", abc, [&r.l, &r.n, &r.m], None)?;
    perspective_at("NML", abc, [&r.n, &r.m, &r.l], None)?;
    perspective_at("MLN", abc, [&r.m, &r.l, &r.n], None)?;
    Ok("UVW = U'V'W'".into())
}

fn t18<F: Field>(r: &Construction<F>) -> Outcome {
    let t = &r.triangle;
    let k = symmedian(t);
    let polar_k = polar(t, &k);
    let line_p = join(&r.p1, &r.p2).map_err(|e| geometry("line P1P2", e))?;
    if !line_p.eq_projective(&polar_k) {
        return Err(format!(
            "line P1P2 {line_p} is not the polar of K {polar_k}"
        ));
    }
    on_line("P3 on polar of K", &r.p3, &polar_k)?;

    let [a, b, c] = Construction::<F>::vertices();
    let sides = [
        ("AB^DE", (&a, &b), (&r.d, &r.e)),
        ("BC^EF", (&b, &c), (&r.e, &r.f)),
        ("CA^FD", (&c, &a), (&r.f, &r.d)),
    ];
    for (label, (p, q), (x, y)) in sides {
        let side = join(p, q).map_err(|e| geometry(label, e))?;
        let other = join(x, y).map_err(|e| geometry(label, e))?;
        let point = meet(&side, &other).map_err(|e| geometry(label, e))?;
        on_line(&format!("{label} on polar of K"), &point, &polar_k)?;
    }
    Ok(String::new())
}

fn record(id: &'static str, outcome: Option<Outcome>, skip_note: &str) -> CheckRecord {
    let name = CHECKS
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("");
    let (status, detail) = match outcome {
        None => (CheckStatus::Skipped, skip_note.to_string()),
        Some(Ok(note)) => (CheckStatus::Pass, note),
        Some(Err(residue)) => (CheckStatus::Fail, residue),
    };
    CheckRecord {
        id,
        name,
        status,
        detail,
    }
}

fn theorem<F: Field>(r: &Construction<F>, id: &str) -> Outcome {
    match id {
        "T1" => t1(r),
        "T2" => t2(r),
        "T3" => hagge_through_h(r, 0),
        "T4" => hagge_through_h(r, 1),
        "T5" => hagge_through_h(r, 2),
        "T6" => hagge_through_h(r, 3),
        "T7" => hagge_through_h(r, 4),
        "T8" => vertex_circle(r, 0),
        "T9" => vertex_circle(r, 1),
        "T10" => vertex_circle(r, 2),
        "T11" => double_simson(r, 0),
        "T12" => double_simson(r, 1),
        "T13" => double_simson(r, 2),
        "T14" => t14(r),
        "T15" => t15(r),
        "T16" => t16(r),
        "T17" => t17(r),
        "T18" => t18(r),
        _ => unreachable!("unknown check id {id}"),
    }
}

fn report<F: Field>(r: &Construction<F>, evaluate: &[&str], skip_note: &str) -> CheckReport {
    let checks = CHECKS
        .iter()
        .map(|(id, _)| {
            let outcome = evaluate.contains(id).then(|| theorem(r, id));
            record(id, outcome, skip_note)
        })
        .collect();
    CheckReport {
        instance: Instance::of(&r.triangle, r.start.point()),
        checks,
    }
}

const GENERIC_IDS: [&str; 15] = [
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14", "T15",
];

/// T1–T15 on a run from a generic interior point or the centroid; the
/// degenerate-start checks are skipped.
pub fn check_all<F: Field>(r: &Construction<F>) -> CheckReport {
    report(
        r,
        &GENERIC_IDS,
        "applies to a degenerate starting point only",
    )
}

/// T16 on a run started at the orthocentre.
pub fn check_degenerate_h<F: Field>(r: &Construction<F>) -> CheckReport {
    report(r, &["T16"], "not evaluated for the orthocentre start")
}

/// T17 and T18 on a run started at the symmedian point.
pub fn check_degenerate_k<F: Field>(r: &Construction<F>) -> CheckReport {
    report(r, &["T17", "T18"], "not evaluated for the symmedian start")
}

/// The generic symbolic triangle `(sa, sb, sc)`.
pub fn symbolic_triangle() -> TriangleParams<RatFunc> {
    TriangleParams::new(Var::Sa.into(), Var::Sb.into(), Var::Sc.into())
        .expect("generic triangle is valid")
}

/// T1–T15 with the triangle and the starting point `(l, m, n)` both
/// symbolic. Gives up, marking every check skipped, once a coordinate grows
/// past `budget` terms.
pub fn check_fully_generic(budget: usize) -> CheckReport {
    let t = symbolic_triangle();
    let p = ArealPoint::new(Var::L.into(), Var::M.into(), Var::N.into()).expect("nonzero");
    let start = StartingPoint::classify(&t, p.clone()).expect("generic point is generic");
    match run_with_budget(&t, start, Some(budget)) {
        Ok(r) => check_all(&r),
        Err(e) => {
            let note = match e {
                ConstructError::BudgetExceeded { .. } => format!("skipped: resource limit ({e})"),
                other => format!("skipped: {other}"),
            };
            CheckReport {
                instance: Instance::of(&t, &p),
                checks: CHECKS
                    .iter()
                    .map(|(id, _)| record(id, None, &note))
                    .collect(),
            }
        }
    }
}

/// Closed-form coordinates and conics for the centroid start, written
/// directly in terms of the squared sides.
pub struct ClosedForms<F> {
    pub l: ArealPoint<F>,
    pub m: ArealPoint<F>,
    pub n: ArealPoint<F>,
    pub d: ArealPoint<F>,
    pub e: ArealPoint<F>,
    pub f: ArealPoint<F>,
    pub q: ArealPoint<F>,
    pub l_prime: ArealPoint<F>,
    pub m_prime: ArealPoint<F>,
    pub n_prime: ArealPoint<F>,
    pub polar_q: ArealLine<F>,
    pub p1: ArealPoint<F>,
    pub p2: ArealPoint<F>,
    pub p3: ArealPoint<F>,
    pub h: ArealPoint<F>,
    pub u: ArealPoint<F>,
    pub v: ArealPoint<F>,
    pub w: ArealPoint<F>,
    pub u_prime: ArealPoint<F>,
    pub v1: ArealPoint<F>,
    pub v3: ArealPoint<F>,
    /// Conics as `[x², y², z², yz, zx, xy]`.
    pub hagge_g: [F; 6],
    pub hagge_q: [F; 6],
    pub cha: [F; 6],
}

impl<F: Field> ClosedForms<F> {
    pub fn new(t: &TriangleParams<F>) -> Result<Self, GeometryError> {
        let (a, b, c) = (t.sa.clone(), t.sb.clone(), t.sc.clone());
        let (ka, kb, kc) = (t.s_a(), t.s_b(), t.s_c());
        let k = |n: i64| F::from_i64(n);
        let sq = |x: &F| x.clone() * x;
        let pt = |x: F, y: F, z: F| ArealPoint::new(x, y, z);
        let div = |x: F, y: &F| x.try_div(y);

        let l = pt(-a.clone(), b.clone() + &c, b.clone() + &c)?;
        let m = pt(c.clone() + &a, -b.clone(), c.clone() + &a)?;
        let n = pt(a.clone() + &b, a.clone() + &b, -c.clone())?;

        // −(a⁴ + a²(b²+c²) + 2b²c²) and its cyclic shifts
        let big =
            |x: &F, y: &F, z: &F| -(sq(x) + &(x.clone() * &(y.clone() + z)) + &(k(2) * y * z));
        let d = pt(big(&a, &b, &c), b.clone() * &kc, c.clone() * &kb)?;
        let e = pt(a.clone() * &kc, big(&b, &c, &a), c.clone() * &ka)?;
        let f = pt(a.clone() * &kb, b.clone() * &ka, big(&c, &a, &b))?;

        let q = pt(
            div(a.clone(), &ka)?,
            div(b.clone(), &kb)?,
            div(c.clone(), &kc)?,
        )?;
        let l_prime = pt(k(-1), div(k(2) * &b, &kb)?, div(k(2) * &c, &kc)?)?;
        let m_prime = pt(div(k(2) * &a, &ka)?, k(-1), div(k(2) * &c, &kc)?)?;
        let n_prime = pt(div(k(2) * &a, &ka)?, div(k(2) * &b, &kb)?, k(-1))?;
        let polar_q = ArealLine::new(ka.clone(), kb.clone(), kc.clone())?;

        let p1 = pt(k(2) * &a, a.clone() - &b - &c, a.clone() - &b - &c)?;
        let p2 = pt(b.clone() - &c - &a, k(2) * &b, b.clone() - &c - &a)?;
        let p3 = pt(c.clone() - &a - &b, c.clone() - &a - &b, k(2) * &c)?;

        let h = pt(
            F::one().try_div(&ka)?,
            F::one().try_div(&kb)?,
            F::one().try_div(&kc)?,
        )?;

        let u = pt(a.clone(), k(2) * &c - &a, k(2) * &b - &a)?;
        let v = pt(k(2) * &c - &b, b.clone(), k(2) * &a - &b)?;
        let w = pt(k(2) * &b - &c, k(2) * &a - &c, c.clone())?;

        let b_minus_c_sq = sq(&(b.clone() - &c));
        let u_prime = pt(
            F::one(),
            div(
                -(sq(&a) - &(k(2) * &a * &b) - &b_minus_c_sq),
                &(a.clone() * &kb),
            )?,
            div(
                -(sq(&a) - &(k(2) * &c * &a) - &b_minus_c_sq),
                &(a.clone() * &kc),
            )?,
        )?;

        let v1 = pt(
            div(a.clone() + &(k(3) * &(b.clone() - &c)), &kb)?,
            div(-(k(2) * &b), &kb)?,
            div(
                k(-2) * &(sq(&a) - &(k(3) * &a * &c) - &(b.clone() * &(b.clone() - &c))),
                &(kc.clone() * &kb),
            )?,
        )?;
        let v3 = pt(
            div(
                k(2) * &(a.clone() * &(b.clone() - &(k(3) * &c))
                    - &((b.clone() + &c) * &(b.clone() - &c))),
                &((a.clone() - &b - &c) * &kb),
            )?,
            div(-(k(2) * &b), &kb)?,
            div(k(3) * &b + &c - &(k(3) * &a), &kb)?,
        )?;

        let hagge_g = [
            a.clone() * &ka,
            b.clone() * &kb,
            c.clone() * &kc,
            -(sq(&a) + &sq(&(b.clone() - &c))),
            -(sq(&b) + &sq(&(c.clone() - &a))),
            -(sq(&c) + &sq(&(a.clone() - &b))),
        ];
        let mixed = |x: &F, y: &F, z: &F| {
            sq(x) - &(x.clone() * &(y.clone() + z)) + &(k(2) * &sq(&(y.clone() - z)))
        };
        let hagge_q = [
            sq(&ka),
            sq(&kb),
            sq(&kc),
            mixed(&a, &b, &c),
            mixed(&b, &c, &a),
            mixed(&c, &a, &b),
        ];
        let cha = [
            F::zero(),
            kb.clone(),
            F::zero(),
            c.clone() - &b,
            -b.clone(),
            a.clone() - &b,
        ];

        Ok(ClosedForms {
            l,
            m,
            n,
            d,
            e,
            f,
            q,
            l_prime,
            m_prime,
            n_prime,
            polar_q,
            p1,
            p2,
            p3,
            h,
            u,
            v,
            w,
            u_prime,
            v1,
            v3,
            hagge_g,
            hagge_q,
            cha,
        })
    }
}

/// Ids and names of the reproduction checks.
pub const REPRODUCTIONS: [(&str, &str); 17] = [
    ("R1", "L, M, N on the medians"),
    ("R2", "tangent triangle D, E, F"),
    ("R3", "concurrence point Q"),
    ("R4", "second points L', M', N'"),
    ("R5", "polar of Q"),
    ("R6", "perspectors P1, P2, P3"),
    ("R7", "orthocentre H"),
    ("R8", "reflections U, V, W"),
    ("R9", "reflection U'"),
    ("R10", "reflection V1 of L' in CA"),
    ("R11", "reflection V3 of N' in CA"),
    ("R12", "Hagge circle of G"),
    ("R13", "Hagge circle of Q"),
    ("R14", "circle CHA fitted through C, H, A"),
    ("R15", "tangent at L"),
    ("R16", "lines DA, EB, FC"),
    ("R17", "V3 from reflecting N' in CA"),
];

fn points_match<F: Field>(pairs: &[(&str, &ArealPoint<F>, &ArealPoint<F>)]) -> Outcome {
    for (label, got, want) in pairs {
        same_point(label, got, want)?;
    }
    Ok(String::new())
}

fn conic_matches<F: Field>(label: &str, got: &[F; 6], want: &[F; 6]) -> Outcome {
    if conics_proportional(got, want) {
        Ok(String::new())
    } else {
        let show = |v: &[F; 6]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        Err(format!(
            "{label}: [{}] not proportional to [{}]",
            show(got),
            show(want)
        ))
    }
}

/// Compares a centroid-start construction against the closed forms.
/// Conics are compared up to one overall factor, points projectively.
pub fn check_reproduction<F: Field>(r: &Construction<F>) -> Result<CheckReport, GeometryError> {
    let t = &r.triangle;
    let cf = ClosedForms::new(t)?;
    let [a, b, c] = Construction::<F>::vertices();

    let mut outcomes: Vec<Outcome> = Vec::new();
    outcomes.push(points_match(&[
        ("L", &r.l, &cf.l),
        ("M", &r.m, &cf.m),
        ("N", &r.n, &cf.n),
    ]));
    outcomes.push(points_match(&[
        ("D", &r.d, &cf.d),
        ("E", &r.e, &cf.e),
        ("F", &r.f, &cf.f),
    ]));
    outcomes.push(points_match(&[("Q", &r.q, &cf.q)]));
    outcomes.push(points_match(&[
        ("L'", &r.l_prime, &cf.l_prime),
        ("M'", &r.m_prime, &cf.m_prime),
        ("N'", &r.n_prime, &cf.n_prime),
    ]));
    outcomes.push(if r.polar_q.eq_projective(&cf.polar_q) {
        Ok(String::new())
    } else {
        Err(format!("polar of Q: {} is not {}", r.polar_q, cf.polar_q))
    });
    outcomes.push(points_match(&[
        ("P1", &r.p1, &cf.p1),
        ("P2", &r.p2, &cf.p2),
        ("P3", &r.p3, &cf.p3),
    ]));
    outcomes.push(points_match(&[("H", &r.h, &cf.h)]));
    outcomes.push(points_match(&[
        ("U", &r.u, &cf.u),
        ("V", &r.v, &cf.v),
        ("W", &r.w, &cf.w),
    ]));
    outcomes.push(points_match(&[("U'", &r.u_prime, &cf.u_prime)]));
    outcomes.push(points_match(&[("V1", &r.v1, &cf.v1)]));
    outcomes.push(points_match(&[("V3", &r.v3, &cf.v3)]));

    let circle_of = |i: usize| r.hagge[i].circle.clone();
    outcomes.push(match circle_of(0) {
        Ok(circle) => conic_matches(
            "Hagge circle of G",
            &circle.conic_coefficients(t),
            &cf.hagge_g,
        ),
        Err(e) => Err(geometry("Hagge circle of G", e)),
    });
    outcomes.push(match circle_of(1) {
        Ok(circle) => conic_matches(
            "Hagge circle of Q",
            &circle.conic_coefficients(t),
            &cf.hagge_q,
        ),
        Err(e) => Err(geometry("Hagge circle of Q", e)),
    });
    outcomes.push(match circle_through(t, &c, &r.h, &a) {
        Ok(circle) => {
            conic_matches("circle CHA", &circle.conic_coefficients(t), &cf.cha).and_then(|_| {
                // equivalently (u, v, w) = (0, −(c²+a²−b²), 0)
                let expected = Circle {
                    u: F::zero(),
                    v: -t.s_b(),
                    w: F::zero(),
                };
                if circle.same_as(&expected) {
                    Ok(String::new())
                } else {
                    Err(format!("circle CHA is {circle}, expected {expected}"))
                }
            })
        }
        Err(e) => Err(geometry("circle CHA", e)),
    });

    // tangent at L: ((b²+c²)², a²b², c²a²)
    let tangent_l = polar(t, &cf.l);
    let bc = t.sb.clone() + &t.sc;
    let want = ArealLine::new(bc.clone() * &bc, t.sa.clone() * &t.sb, t.sc.clone() * &t.sa)?;
    outcomes.push(if tangent_l.eq_projective(&want) {
        Ok(String::new())
    } else {
        Err(format!("tangent at L: {tangent_l} is not {want}"))
    });

    // DA: c²(c²+a²−b²)y = b²(a²+b²−c²)z, and cyclically
    let lines = [
        (
            join(&r.d, &a),
            ArealLine::new(
                F::zero(),
                t.sc.clone() * &t.s_b(),
                -(t.sb.clone() * &t.s_c()),
            )?,
        ),
        (
            join(&r.e, &b),
            ArealLine::new(
                -(t.sc.clone() * &t.s_a()),
                F::zero(),
                t.sa.clone() * &t.s_c(),
            )?,
        ),
        (
            join(&r.f, &c),
            ArealLine::new(
                t.sb.clone() * &t.s_a(),
                -(t.sa.clone() * &t.s_b()),
                F::zero(),
            )?,
        ),
    ];
    outcomes.push(
        lines
            .iter()
            .enumerate()
            .try_fold(String::new(), |_, (i, (got, want))| {
                let label = ["DA", "EB", "FC"][i];
                let got = got.clone().map_err(|e| geometry(label, e))?;
                if got.eq_projective(want) {
                    Ok(String::new())
                } else {
                    Err(format!("{label}: {got} is not {want}"))
                }
            }),
    );

    let v3 = reflect_ca(t, &r.n_prime);
    outcomes.push(points_match(&[("reflect_ca(N')", &v3, &cf.v3)]));

    let checks = REPRODUCTIONS
        .iter()
        .zip(outcomes)
        .map(|((id, name), outcome)| {
            let (status, detail) = match outcome {
                Ok(note) => (CheckStatus::Pass, note),
                Err(e) => (CheckStatus::Fail, e),
            };
            CheckRecord {
                id,
                name,
                status,
                detail,
            }
        })
        .collect();
    Ok(CheckReport {
        instance: Instance::of(t, r.start.point()),
        checks,
    })
}
