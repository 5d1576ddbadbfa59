//! The full construction from a triangle and a starting point.
//!
//! Starting from `P`, the cevians `AP`, `BP`, `CP` meet the circumcircle
//! again at `L`, `M`, `N`. Tangents there form the triangle `DEF`, and `DA`,
//! `EB`, `FC` meet the circumcircle again at `L′`, `M′`, `N′`. Reflecting
//! these six points in the sides gives twelve points lying on five Hagge
//! circles and on the circles `BHC`, `CHA`, `AHB`.
//!
//! Only what is needed to build each object is assumed. Concurrences and
//! incidences that the construction does not rely on are left for
//! [`crate::verify`] to check.

use alloc::vec::Vec;

use crate::areal::{
    centroid, circle_through, join, meet, orthocentre, polar, second_intersection, symmedian,
    tangent_at, ArealLine, ArealPoint, Circle, GeometryError, TriangleParams,
};
use crate::reflect::{reflect_ab, reflect_bc, reflect_ca};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error(
        "starting point is the orthocentre; run the degenerate orthocentre construction instead"
    )]
    StartAtOrthocentre,
    #[error(
        "starting point is the symmedian point; run the degenerate symmedian construction instead"
    )]
    StartAtSymmedian,
    #[error("starting point lies on a sideline of the triangle")]
    OnSideline,
    #[error("starting point is outside the triangle")]
    Exterior,
    #[error("symbolic size budget of {budget} terms exceeded at {step}")]
    BudgetExceeded { step: &'static str, budget: usize },
    #[error("cannot construct {step}: {source}")]
    Step {
        step: &'static str,
        #[source]
        source: GeometryError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartKind {
    Centroid,
    Generic,
    Orthocentre,
    Symmedian,
}

impl StartKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StartKind::Centroid => "centroid",
            StartKind::Generic => "generic-interior",
            StartKind::Orthocentre => "orthocentre-degenerate",
            StartKind::Symmedian => "symmedian-degenerate",
        }
    }
}

#[derive(Debug, Clone)]
pub struct StartingPoint<F> {
    point: ArealPoint<F>,
    kind: StartKind,
}

impl<F: Field> StartingPoint<F> {
    /// Classifies an interior point. Interiority (all coordinates of one
    /// sign) is only checked in ordered fields.
    pub fn classify(t: &TriangleParams<F>, p: ArealPoint<F>) -> Result<Self, ConstructError> {
        Self::classify_with(t, p, false)
    }

    /// Like [`classify`](Self::classify), optionally accepting points outside
    /// the triangle.
    pub fn classify_with(
        t: &TriangleParams<F>,
        p: ArealPoint<F>,
        allow_exterior: bool,
    ) -> Result<Self, ConstructError> {
        if p.coords().iter().any(Field::is_zero) {
            return Err(ConstructError::OnSideline);
        }
        let signs: Vec<Option<bool>> = p.coords().iter().map(Field::is_positive).collect();
        let mixed = signs.contains(&Some(true)) && signs.contains(&Some(false));
        if mixed && !allow_exterior {
            return Err(ConstructError::Exterior);
        }
        let kind = if p.eq_projective(&orthocentre(t)) {
            StartKind::Orthocentre
        } else if p.eq_projective(&symmedian(t)) {
            StartKind::Symmedian
        } else if p.eq_projective(&centroid()) {
            StartKind::Centroid
        } else {
            StartKind::Generic
        };
        Ok(StartingPoint {
            point: p.normalized(),
            kind,
        })
    }

    pub fn centroid() -> Self {
        StartingPoint {
            point: centroid(),
            kind: StartKind::Centroid,
        }
    }

    pub fn point(&self) -> &ArealPoint<F> {
        &self.point
    }

    pub fn kind(&self) -> StartKind {
        self.kind
    }
}

/// Labels for the five Hagge circles, in construction order.
pub const HAGGE_LABELS: [HaggeLabel; 5] = [
    HaggeLabel {
        circle: "UVW",
        of: "P",
    },
    HaggeLabel {
        circle: "U'V'W'",
        of: "Q",
    },
    HaggeLabel {
        circle: "UV3W2",
        of: "P1",
    },
    HaggeLabel {
        circle: "U3VW1",
        of: "P2",
    },
    HaggeLabel {
        circle: "U2V1W",
        of: "P3",
    },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HaggeLabel {
    /// The three defining reflections.
    pub circle: &'static str,
    /// The point whose Hagge circle this is.
    pub of: &'static str,
}

#[derive(Debug, Clone)]
pub struct HaggeCircle<F> {
    pub label: HaggeLabel,
    pub through: [ArealPoint<F>; 3],
    /// `Err` when the three points are collinear or coincide.
    pub circle: Result<Circle<F>, GeometryError>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Degeneracy {
    /// `U ≡ V ≡ W`; the Hagge circle of the starting point shrinks to a point.
    pub uvw_collapsed: bool,
    /// `L ≡ L′`, `M ≡ M′` and `N ≡ N′`.
    pub second_points_coincide: bool,
}

/// Every named object of the construction.
#[derive(Debug, Clone)]
pub struct Construction<F> {
    pub triangle: TriangleParams<F>,
    pub start: StartingPoint<F>,

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
    pub p1: ArealPoint<F>,
    pub p2: ArealPoint<F>,
    pub p3: ArealPoint<F>,
    pub h: ArealPoint<F>,

    pub u: ArealPoint<F>,
    pub v: ArealPoint<F>,
    pub w: ArealPoint<F>,
    pub u_prime: ArealPoint<F>,
    pub v_prime: ArealPoint<F>,
    pub w_prime: ArealPoint<F>,
    pub u2: ArealPoint<F>,
    pub u3: ArealPoint<F>,
    pub v3: ArealPoint<F>,
    pub v1: ArealPoint<F>,
    pub w1: ArealPoint<F>,
    pub w2: ArealPoint<F>,

    pub hagge: [HaggeCircle<F>; 5],
    pub bhc: Circle<F>,
    pub cha: Circle<F>,
    pub ahb: Circle<F>,

    pub polar_q: ArealLine<F>,
    /// Lines `U′V₁`, `V′W₂`, `W′U₃`, each expected to carry a third
    /// reflection and `H`.
    pub double_simson: [Result<ArealLine<F>, GeometryError>; 3],

    pub degeneracy: Degeneracy,
}

/// A circle through a vertex pair and `H`, with the four reflections on it.
pub type VertexCircle<'a, F> = (&'static str, &'a Circle<F>, [&'a ArealPoint<F>; 4]);

impl<F: Field> Construction<F> {
    pub fn vertices() -> [ArealPoint<F>; 3] {
        [
            ArealPoint::vertex_a(),
            ArealPoint::vertex_b(),
            ArealPoint::vertex_c(),
        ]
    }

    /// All named points with their labels, vertices first.
    pub fn named_points(&self) -> Vec<(&'static str, ArealPoint<F>)> {
        let [a, b, c] = Self::vertices();
        let mut out = alloc::vec![
            ("A", a),
            ("B", b),
            ("C", c),
            ("P", self.start.point.clone())
        ];
        let rest: [(&'static str, &ArealPoint<F>); 26] = [
            ("L", &self.l),
            ("M", &self.m),
            ("N", &self.n),
            ("D", &self.d),
            ("E", &self.e),
            ("F", &self.f),
            ("Q", &self.q),
            ("L'", &self.l_prime),
            ("M'", &self.m_prime),
            ("N'", &self.n_prime),
            ("P1", &self.p1),
            ("P2", &self.p2),
            ("P3", &self.p3),
            ("H", &self.h),
            ("U", &self.u),
            ("V", &self.v),
            ("W", &self.w),
            ("U'", &self.u_prime),
            ("V'", &self.v_prime),
            ("W'", &self.w_prime),
            ("U2", &self.u2),
            ("U3", &self.u3),
            ("V3", &self.v3),
            ("V1", &self.v1),
            ("W1", &self.w1),
            ("W2", &self.w2),
        ];
        out.extend(rest.into_iter().map(|(k, p)| (k, p.clone())));
        out
    }

    pub fn point(&self, label: &str) -> Option<ArealPoint<F>> {
        self.named_points()
            .into_iter()
            .find(|(k, _)| *k == label)
            .map(|(_, p)| p)
    }

    /// The circles `BHC`, `CHA`, `AHB` with the four reflections each one
    /// should carry.
    pub fn vertex_circles(&self) -> [VertexCircle<'_, F>; 3] {
        [
            (
                "BHC",
                &self.bhc,
                [&self.u, &self.u_prime, &self.u2, &self.u3],
            ),
            (
                "CHA",
                &self.cha,
                [&self.v, &self.v_prime, &self.v3, &self.v1],
            ),
            (
                "AHB",
                &self.ahb,
                [&self.w, &self.w_prime, &self.w1, &self.w2],
            ),
        ]
    }
}

struct Builder<'a, F> {
    t: &'a TriangleParams<F>,
    budget: Option<usize>,
}

impl<F: Field> Builder<'_, F> {
    fn check(&self, step: &'static str, p: &ArealPoint<F>) -> Result<(), ConstructError> {
        match self.budget {
            Some(budget) if p.size() > budget => {
                Err(ConstructError::BudgetExceeded { step, budget })
            }
            _ => Ok(()),
        }
    }

    fn point(
        &self,
        step: &'static str,
        r: Result<ArealPoint<F>, GeometryError>,
    ) -> Result<ArealPoint<F>, ConstructError> {
        let p = r.map_err(|source| ConstructError::Step { step, source })?;
        self.check(step, &p)?;
        Ok(p)
    }

    fn line(
        &self,
        step: &'static str,
        r: Result<ArealLine<F>, GeometryError>,
    ) -> Result<ArealLine<F>, ConstructError> {
        r.map_err(|source| ConstructError::Step { step, source })
    }

    fn circle(
        &self,
        step: &'static str,
        r: Result<Circle<F>, GeometryError>,
    ) -> Result<Circle<F>, ConstructError> {
        r.map_err(|source| ConstructError::Step { step, source })
    }

    fn second(
        &self,
        step: &'static str,
        vertex: &ArealPoint<F>,
        through: &ArealPoint<F>,
    ) -> Result<ArealPoint<F>, ConstructError> {
        self.point(step, second_intersection(self.t, vertex, through))
    }

    fn tangent(
        &self,
        step: &'static str,
        p: &ArealPoint<F>,
    ) -> Result<ArealLine<F>, ConstructError> {
        self.line(step, tangent_at(self.t, p))
    }

    fn meet_of(
        &self,
        step: &'static str,
        r: &ArealLine<F>,
        s: &ArealLine<F>,
    ) -> Result<ArealPoint<F>, ConstructError> {
        self.point(step, meet(r, s))
    }

    fn join_of(
        &self,
        step: &'static str,
        p: &ArealPoint<F>,
        q: &ArealPoint<F>,
    ) -> Result<ArealLine<F>, ConstructError> {
        self.line(step, join(p, q))
    }

    fn mirror(
        &self,
        step: &'static str,
        p: ArealPoint<F>,
    ) -> Result<ArealPoint<F>, ConstructError> {
        self.point(step, Ok(p.normalized()))
    }

    fn build(&self, start: StartingPoint<F>) -> Result<Construction<F>, ConstructError> {
        let t = self.t;
        let [a, b, c] = Construction::<F>::vertices();
        let p = start.point.clone();

        let l = self.second("L", &a, &p)?;
        let m = self.second("M", &b, &p)?;
        let n = self.second("N", &c, &p)?;

        let (tl, tm, tn) = (
            self.tangent("tangent at L", &l)?,
            self.tangent("tangent at M", &m)?,
            self.tangent("tangent at N", &n)?,
        );
        let d = self.meet_of("D", &tm, &tn)?;
        let e = self.meet_of("E", &tn, &tl)?;
        let f = self.meet_of("F", &tl, &tm)?;

        let da = self.join_of("line DA", &d, &a)?;
        let eb = self.join_of("line EB", &e, &b)?;
        let q = self.meet_of("Q", &da, &eb)?;

        let l_prime = self.second("L'", &a, &d)?;
        let m_prime = self.second("M'", &b, &e)?;
        let n_prime = self.second("N'", &c, &f)?;

        let p1 = self.meet_of(
            "P1",
            &self.join_of("line AL", &a, &l)?,
            &self.join_of("line BN'", &b, &n_prime)?,
        )?;
        let p2 = self.meet_of(
            "P2",
            &self.join_of("line BM", &b, &m)?,
            &self.join_of("line CL'", &c, &l_prime)?,
        )?;
        let p3 = self.meet_of(
            "P3",
            &self.join_of("line CN", &c, &n)?,
            &self.join_of("line AM'", &a, &m_prime)?,
        )?;

        let h = orthocentre(t);

        let u = self.mirror("U", reflect_bc(t, &l))?;
        let v = self.mirror("V", reflect_ca(t, &m))?;
        let w = self.mirror("W", reflect_ab(t, &n))?;
        let u_prime = self.mirror("U'", reflect_bc(t, &l_prime))?;
        let v_prime = self.mirror("V'", reflect_ca(t, &m_prime))?;
        let w_prime = self.mirror("W'", reflect_ab(t, &n_prime))?;
        let u2 = self.mirror("U2", reflect_bc(t, &m_prime))?;
        let u3 = self.mirror("U3", reflect_bc(t, &n_prime))?;
        let v3 = self.mirror("V3", reflect_ca(t, &n_prime))?;
        let v1 = self.mirror("V1", reflect_ca(t, &l_prime))?;
        let w1 = self.mirror("W1", reflect_ab(t, &l_prime))?;
        let w2 = self.mirror("W2", reflect_ab(t, &m_prime))?;

        let triples = [
            [u.clone(), v.clone(), w.clone()],
            [u_prime.clone(), v_prime.clone(), w_prime.clone()],
            [u.clone(), v3.clone(), w2.clone()],
            [u3.clone(), v.clone(), w1.clone()],
            [u2.clone(), v1.clone(), w.clone()],
        ];
        let hagge = core::array::from_fn(|i| {
            let through = triples[i].clone();
            let circle = circle_through(t, &through[0], &through[1], &through[2]);
            HaggeCircle {
                label: HAGGE_LABELS[i],
                through,
                circle,
            }
        });

        let bhc = self.circle("circle BHC", circle_through(t, &b, &h, &c))?;
        let cha = self.circle("circle CHA", circle_through(t, &c, &h, &a))?;
        let ahb = self.circle("circle AHB", circle_through(t, &a, &h, &b))?;

        let polar_q = polar(t, &q);
        let double_simson = [
            join(&u_prime, &v1),
            join(&v_prime, &w2),
            join(&w_prime, &u3),
        ];

        let degeneracy = Degeneracy {
            uvw_collapsed: u.eq_projective(&v) && v.eq_projective(&w),
            second_points_coincide: l.eq_projective(&l_prime)
                && m.eq_projective(&m_prime)
                && n.eq_projective(&n_prime),
        };

        Ok(Construction {
            triangle: t.clone(),
            start,
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
            p1,
            p2,
            p3,
            h,
            u,
            v,
            w,
            u_prime,
            v_prime,
            w_prime,
            u2,
            u3,
            v3,
            v1,
            w1,
            w2,
            hagge,
            bhc,
            cha,
            ahb,
            polar_q,
            double_simson,
            degeneracy,
        })
    }
}

/// Runs the construction from a generic interior point or the centroid.
pub fn run<F: Field>(
    t: &TriangleParams<F>,
    start: StartingPoint<F>,
) -> Result<Construction<F>, ConstructError> {
    run_with_budget(t, start, None)
}

/// As [`run`], aborting once any named point has a coordinate larger than
/// `budget` terms.
pub fn run_with_budget<F: Field>(
    t: &TriangleParams<F>,
    start: StartingPoint<F>,
    budget: Option<usize>,
) -> Result<Construction<F>, ConstructError> {
    match start.kind {
        StartKind::Orthocentre => return Err(ConstructError::StartAtOrthocentre),
        StartKind::Symmedian => return Err(ConstructError::StartAtSymmedian),
        StartKind::Centroid | StartKind::Generic => {}
    }
    Builder { t, budget }.build(start)
}

/// Starting point `H`: the reflections `U`, `V`, `W` all land on `H`, and
/// the Hagge circle of `H` is left as an error rather than fabricated.
pub fn run_degenerate_h<F: Field>(
    t: &TriangleParams<F>,
) -> Result<Construction<F>, ConstructError> {
    let start = StartingPoint {
        point: orthocentre(t),
        kind: StartKind::Orthocentre,
    };
    Builder { t, budget: None }.build(start)
}

/// Starting point `K`: `L ≡ L′`, `M ≡ M′`, `N ≡ N′` and `Q ≡ K`.
pub fn run_degenerate_k<F: Field>(
    t: &TriangleParams<F>,
) -> Result<Construction<F>, ConstructError> {
    let start = StartingPoint {
        point: symmedian(t),
        kind: StartKind::Symmedian,
    };
    Builder { t, budget: None }.build(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn t456() -> TriangleParams<Rational> {
        TriangleParams::new(4.into(), 5.into(), 6.into()).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ArealPoint<Rational> {
        ArealPoint::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn centroid_run_matches_worked_values() {
        let r = run(&t456(), StartingPoint::centroid()).unwrap();
        assert!(r.q.eq_projective(&pt(4, 7, 14)));
        assert!(r.l.eq_projective(&pt(-4, 11, 11)));
        assert!(r.l_prime.eq_projective(&pt(-1, 2, 4)));
        assert!(r.d.eq_projective(&pt(-8, 1, 2)));
        assert!(r.p1.eq_projective(&pt(8, -7, -7)));
        assert!(r.u.eq_projective(&pt(2, 4, 3)));
        assert!(r.v1.eq_projective(&pt(1, -10, 34)));
        assert!(r.h.eq_projective(&pt(15, 21, 35)));
        assert_eq!(r.bhc.u, Rational::from(-7));
        assert!(r.bhc.v == Rational::from(0) && r.bhc.w == Rational::from(0));
        // normalized to coprime integers
        assert_eq!(r.q.coords(), &[4, 7, 14].map(Rational::from));
    }

    #[test]
    fn classification() {
        let t = t456();
        let k = |x, y, z| StartingPoint::classify(&t, pt(x, y, z)).map(|s| s.kind());
        assert_eq!(k(1, 1, 1), Ok(StartKind::Centroid));
        assert_eq!(k(2, 2, 2), Ok(StartKind::Centroid));
        assert_eq!(k(2, 1, 1), Ok(StartKind::Generic));
        assert_eq!(k(-2, -1, -1), Ok(StartKind::Generic));
        assert_eq!(k(15, 21, 35), Ok(StartKind::Orthocentre));
        assert_eq!(k(4, 5, 6), Ok(StartKind::Symmedian));
        assert_eq!(k(0, 1, 1).unwrap_err(), ConstructError::OnSideline);
        assert_eq!(k(-1, 2, 2).unwrap_err(), ConstructError::Exterior);
        assert!(StartingPoint::classify_with(&t, pt(-1, 2, 2), true).is_ok());
    }

    #[test]
    fn degenerate_starts_are_rejected_by_run() {
        let t = t456();
        let h = StartingPoint::classify(&t, pt(15, 21, 35)).unwrap();
        assert_eq!(run(&t, h).unwrap_err(), ConstructError::StartAtOrthocentre);
        let k = StartingPoint::classify(&t, pt(4, 5, 6)).unwrap();
        assert_eq!(run(&t, k).unwrap_err(), ConstructError::StartAtSymmedian);
    }

    #[test]
    fn orthocentre_start_collapses_uvw() {
        let r = run_degenerate_h(&t456()).unwrap();
        assert!(r.degeneracy.uvw_collapsed);
        assert!(r.u.eq_projective(&pt(15, 21, 35)));
        assert_eq!(
            r.hagge[0].circle.as_ref().unwrap_err(),
            &GeometryError::SingularCircle
        );
    }

    #[test]
    fn symmedian_start_fixes_second_points() {
        let r = run_degenerate_k(&t456()).unwrap();
        assert!(r.degeneracy.second_points_coincide);
        assert!(r.q.eq_projective(&pt(4, 5, 6)));
    }

    #[test]
    fn named_points_cover_the_figure() {
        let r = run(&t456(), StartingPoint::centroid()).unwrap();
        let names: Vec<&str> = r.named_points().iter().map(|(k, _)| *k).collect();
        assert_eq!(names.len(), 30);
        assert!(r.point("V1").unwrap().eq_projective(&pt(1, -10, 34)));
        assert!(r.point("K").is_none());
    }
}
