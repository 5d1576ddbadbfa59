//! Areal (barycentric) coordinates relative to a reference triangle ABC.
//!
//! Points and lines are homogeneous triples. Nothing here normalizes by the
//! coordinate sum; equality is the vanishing of all 2×2 minors.

use core::fmt;

use crate::scalar::{cross, det3, dot, proportional, Field, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("all three homogeneous coordinates are zero")]
    ZeroTriple,
    #[error("points coincide, no line joins them")]
    CoincidentPoints,
    #[error("lines coincide, no unique meet")]
    IdenticalLines,
    #[error("point is not on the circumcircle")]
    NotOnCircumcircle,
    #[error("point lies on the line at infinity (coordinate sum is zero)")]
    PointAtInfinity,
    #[error("circle through collinear or coincident points is undefined")]
    SingularCircle,
    #[error("point lies on a sideline of the reference triangle")]
    OnSideline,
    #[error("squared side lengths do not form a triangle")]
    DegenerateTriangle,
    #[error("squared side lengths must be positive")]
    NonPositiveSide,
    #[error("triangle has a right angle, the orthocentre is a vertex")]
    RightTriangle,
    #[error("triangle has a repeated vertex")]
    DegenerateTrianglePair,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Squared side lengths `a² = |BC|²`, `b² = |CA|²`, `c² = |AB|²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleParams<F> {
    pub sa: F,
    pub sb: F,
    pub sc: F,
}

impl<F: Field> TriangleParams<F> {
    /// Checks nondegeneracy and that no angle is right. Positivity is checked
    /// as well when the field is ordered.
    pub fn new(sa: F, sb: F, sc: F) -> Result<Self, GeometryError> {
        let t = TriangleParams { sa, sb, sc };
        if [&t.sa, &t.sb, &t.sc]
            .iter()
            .any(|s| s.is_positive() == Some(false))
        {
            return Err(GeometryError::NonPositiveSide);
        }
        let area = t.sixteen_area_squared();
        if area.is_zero() || area.is_positive() == Some(false) {
            return Err(GeometryError::DegenerateTriangle);
        }
        if t.s_a().is_zero() || t.s_b().is_zero() || t.s_c().is_zero() {
            return Err(GeometryError::RightTriangle);
        }
        Ok(t)
    }

    /// `2(a²b² + b²c² + c²a²) − a⁴ − b⁴ − c⁴`, i.e. sixteen times the squared area.
    pub fn sixteen_area_squared(&self) -> F {
        let (a, b, c) = (&self.sa, &self.sb, &self.sc);
        let two = F::from_i64(2);
        let pairs = a.clone() * b + &(b.clone() * c) + &(c.clone() * a);
        two * &pairs - &(a.clone() * a) - &(b.clone() * b) - &(c.clone() * c)
    }

    /// `b² + c² − a²`.
    pub fn s_a(&self) -> F {
        self.sb.clone() + &self.sc - &self.sa
    }

    /// `c² + a² − b²`.
    pub fn s_b(&self) -> F {
        self.sc.clone() + &self.sa - &self.sb
    }

    /// `a² + b² − c²`.
    pub fn s_c(&self) -> F {
        self.sa.clone() + &self.sb - &self.sc
    }

    pub fn squares(&self) -> [F; 3] {
        [self.sa.clone(), self.sb.clone(), self.sc.clone()]
    }

    pub fn map<G>(&self, mut f: impl FnMut(&F) -> G) -> TriangleParams<G> {
        TriangleParams {
            sa: f(&self.sa),
            sb: f(&self.sb),
            sc: f(&self.sc),
        }
    }
}

macro_rules! homogeneous_triple {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name<F> {
            coords: [F; 3],
        }

        impl<F: Field> $name<F> {
            pub fn new(a: F, b: F, c: F) -> Result<Self, GeometryError> {
                Self::from_array([a, b, c])
            }

            pub fn from_array(coords: [F; 3]) -> Result<Self, GeometryError> {
                if coords.iter().all(Field::is_zero) {
                    return Err(GeometryError::ZeroTriple);
                }
                Ok(Self { coords })
            }

            pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, GeometryError> {
                Self::new(F::from_i64(a), F::from_i64(b), F::from_i64(c))
            }

            pub fn coords(&self) -> &[F; 3] {
                &self.coords
            }

            pub fn into_coords(self) -> [F; 3] {
                self.coords
            }

            /// Canonical representative of the projective class.
            pub fn normalized(mut self) -> Self {
                F::normalize_projective(&mut self.coords);
                self
            }

            /// Projective equality: all 2×2 minors vanish.
            pub fn eq_projective(&self, other: &Self) -> bool {
                proportional(&self.coords, &other.coords)
            }

            pub fn scaled(&self, k: &F) -> Self {
                Self {
                    coords: self.coords.clone().map(|c| c * k),
                }
            }

            /// Largest coordinate size, for resource budgets.
            pub fn size(&self) -> usize {
                self.coords.iter().map(Field::size).max().unwrap_or(0)
            }
        }

        impl<F: fmt::Display> fmt::Display for $name<F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [x, y, z] = &self.coords;
                write!(f, "({x}, {y}, {z})")
            }
        }
    };
}

homogeneous_triple!(ArealPoint, "A point `(x : y : z)`.");
homogeneous_triple!(
    ArealLine,
    "A line `l·x + m·y + n·z = 0`, stored as `(l : m : n)`."
);

impl<F: Field> ArealPoint<F> {
    pub fn x(&self) -> &F {
        &self.coords[0]
    }
    pub fn y(&self) -> &F {
        &self.coords[1]
    }
    pub fn z(&self) -> &F {
        &self.coords[2]
    }

    pub fn vertex_a() -> Self {
        Self::from_ints(1, 0, 0).expect("nonzero")
    }
    pub fn vertex_b() -> Self {
        Self::from_ints(0, 1, 0).expect("nonzero")
    }
    pub fn vertex_c() -> Self {
        Self::from_ints(0, 0, 1).expect("nonzero")
    }

    pub fn coordinate_sum(&self) -> F {
        self.coords[0].clone() + &self.coords[1] + &self.coords[2]
    }

    /// Representative with coordinate sum one.
    pub fn unit_sum(&self) -> Result<[F; 3], GeometryError> {
        let s = self.coordinate_sum();
        if s.is_zero() {
            return Err(GeometryError::PointAtInfinity);
        }
        let mut out = self.coords.clone();
        for c in out.iter_mut() {
            *c = c.try_div(&s)?;
        }
        Ok(out)
    }

    pub fn on_line(&self, line: &ArealLine<F>) -> bool {
        dot(&self.coords, &line.coords).is_zero()
    }
}

impl<F: Field> ArealLine<F> {
    /// `BC`, `CA`, `AB`: the sidelines `x = 0`, `y = 0`, `z = 0`.
    pub fn side_bc() -> Self {
        Self::from_ints(1, 0, 0).expect("nonzero")
    }
    pub fn side_ca() -> Self {
        Self::from_ints(0, 1, 0).expect("nonzero")
    }
    pub fn side_ab() -> Self {
        Self::from_ints(0, 0, 1).expect("nonzero")
    }

    pub fn contains(&self, p: &ArealPoint<F>) -> bool {
        p.on_line(self)
    }
}

/// Line through two points.
pub fn join<F: Field>(p: &ArealPoint<F>, q: &ArealPoint<F>) -> Result<ArealLine<F>, GeometryError> {
    ArealLine::from_array(cross(&p.coords, &q.coords))
        .map(ArealLine::normalized)
        .map_err(|_| GeometryError::CoincidentPoints)
}

/// Intersection of two lines.
pub fn meet<F: Field>(r: &ArealLine<F>, s: &ArealLine<F>) -> Result<ArealPoint<F>, GeometryError> {
    ArealPoint::from_array(cross(&r.coords, &s.coords))
        .map(ArealPoint::normalized)
        .map_err(|_| GeometryError::IdenticalLines)
}

pub fn collinear_residue<F: Field>(p: &ArealPoint<F>, q: &ArealPoint<F>, r: &ArealPoint<F>) -> F {
    det3(&p.coords, &q.coords, &r.coords)
}

pub fn collinear<F: Field>(p: &ArealPoint<F>, q: &ArealPoint<F>, r: &ArealPoint<F>) -> bool {
    collinear_residue(p, q, r).is_zero()
}

pub fn concurrent_residue<F: Field>(r: &ArealLine<F>, s: &ArealLine<F>, t: &ArealLine<F>) -> F {
    det3(&r.coords, &s.coords, &t.coords)
}

pub fn concurrent<F: Field>(r: &ArealLine<F>, s: &ArealLine<F>, t: &ArealLine<F>) -> bool {
    concurrent_residue(r, s, t).is_zero()
}

/// `a²yz + b²zx + c²xy`, the circumcircle form evaluated at `p`.
pub fn circumcircle_value<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> F {
    let [x, y, z] = &p.coords;
    t.sa.clone() * y * z + &(t.sb.clone() * z * x) + &(t.sc.clone() * x * y)
}

pub fn on_circumcircle<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> bool {
    circumcircle_value(t, p).is_zero()
}

fn polar_coords<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> [F; 3] {
    let [d, e, f] = &p.coords;
    [
        t.sb.clone() * f + &(t.sc.clone() * e),
        t.sa.clone() * f + &(t.sc.clone() * d),
        t.sa.clone() * e + &(t.sb.clone() * d),
    ]
}

/// Symmetric bilinear form of the circumcircle; `polar(p)·q`.
pub fn circumcircle_pairing<F: Field>(
    t: &TriangleParams<F>,
    p: &ArealPoint<F>,
    q: &ArealPoint<F>,
) -> F {
    dot(&polar_coords(t, p), &q.coords)
}

/// Polar line of `p` with respect to the circumcircle.
pub fn polar<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> ArealLine<F> {
    ArealLine::from_array(polar_coords(t, p))
        .expect("nondegenerate conic has no zero polar")
        .normalized()
}

pub fn tangent_at<F: Field>(
    t: &TriangleParams<F>,
    p: &ArealPoint<F>,
) -> Result<ArealLine<F>, GeometryError> {
    if !on_circumcircle(t, p) {
        return Err(GeometryError::NotOnCircumcircle);
    }
    Ok(polar(t, p))
}

/// Second point where the line `pq` meets the circumcircle, `p` being the
/// first.
///
/// On `s·p + t·q` the circle form is `s²Γ(p) + st·pairing(p, q) + t²Γ(q)`.
/// With `Γ(p) = 0` the known root `t = 0` factors out, leaving
/// `s·pairing + t·Γ(q) = 0`. A tangent line gives `p` back.
pub fn second_intersection<F: Field>(
    t: &TriangleParams<F>,
    p: &ArealPoint<F>,
    q: &ArealPoint<F>,
) -> Result<ArealPoint<F>, GeometryError> {
    if !on_circumcircle(t, p) {
        return Err(GeometryError::NotOnCircumcircle);
    }
    if p.eq_projective(q) {
        return Err(GeometryError::CoincidentPoints);
    }
    let gq = circumcircle_value(t, q);
    let pairing = circumcircle_pairing(t, p, q);
    let coords = [0, 1, 2].map(|i| gq.clone() * &p.coords[i] - &(pairing.clone() * &q.coords[i]));
    Ok(ArealPoint::from_array(coords)?.normalized())
}

/// A circle `a²yz + b²zx + c²xy + (ux + vy + wz)(x + y + z) = 0`.
/// `(0, 0, 0)` is the circumcircle.
#[derive(Debug, Clone)]
pub struct Circle<F> {
    pub u: F,
    pub v: F,
    pub w: F,
}

impl<F: Field> Circle<F> {
    pub fn circumcircle() -> Self {
        Circle {
            u: F::zero(),
            v: F::zero(),
            w: F::zero(),
        }
    }

    pub fn value_at(&self, t: &TriangleParams<F>, p: &ArealPoint<F>) -> F {
        let [x, y, z] = p.coords();
        let linear = self.u.clone() * x + &(self.v.clone() * y) + &(self.w.clone() * z);
        circumcircle_value(t, p) + &(linear * &p.coordinate_sum())
    }

    /// Expanded conic coefficients `[x², y², z², yz, zx, xy]`.
    pub fn conic_coefficients(&self, t: &TriangleParams<F>) -> [F; 6] {
        [
            self.u.clone(),
            self.v.clone(),
            self.w.clone(),
            t.sa.clone() + &self.v + &self.w,
            t.sb.clone() + &self.w + &self.u,
            t.sc.clone() + &self.u + &self.v,
        ]
    }

    /// Same circle: the linear parts agree exactly (the quadratic part is
    /// fixed, so no rescaling is possible).
    pub fn same_as(&self, other: &Circle<F>) -> bool {
        self.u == other.u && self.v == other.v && self.w == other.w
    }
}

impl<F: fmt::Display> fmt::Display for Circle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[u={}, v={}, w={}]", self.u, self.v, self.w)
    }
}

/// True when two six-coefficient conics agree up to one nonzero factor.
pub fn conics_proportional<F: Field>(a: &[F; 6], b: &[F; 6]) -> bool {
    !a.iter().all(Field::is_zero) && !b.iter().all(Field::is_zero) && proportional(a, b)
}

pub fn on_circle<F: Field>(t: &TriangleParams<F>, c: &Circle<F>, p: &ArealPoint<F>) -> bool {
    c.value_at(t, p).is_zero()
}

/// Circle through three points, by Cramer's rule on the linear system for
/// `(u, v, w)`. A vanishing determinant means the points are collinear or
/// not distinct.
pub fn circle_through<F: Field>(
    t: &TriangleParams<F>,
    p: &ArealPoint<F>,
    q: &ArealPoint<F>,
    r: &ArealPoint<F>,
) -> Result<Circle<F>, GeometryError> {
    // Row i: u·x + v·y + w·z = −Γ(P_i)/(x + y + z).
    let mut rows = [p, q, r].map(|pt| pt.coords.clone());
    let mut rhs = [p, q, r].map(|_| F::zero());
    for (i, pt) in [p, q, r].into_iter().enumerate() {
        let s = pt.coordinate_sum();
        if s.is_zero() {
            return Err(GeometryError::PointAtInfinity);
        }
        rhs[i] = (-circumcircle_value(t, pt)).try_div(&s)?;
    }
    let det = det3(&rows[0], &rows[1], &rows[2]);
    if det.is_zero() {
        return Err(GeometryError::SingularCircle);
    }
    let mut solution = [F::zero(), F::zero(), F::zero()];
    for (k, slot) in solution.iter_mut().enumerate() {
        let saved = [0, 1, 2].map(|i| rows[i][k].clone());
        for i in 0..3 {
            rows[i][k] = rhs[i].clone();
        }
        *slot = det3(&rows[0], &rows[1], &rows[2]).try_div(&det)?;
        for (i, v) in saved.into_iter().enumerate() {
            rows[i][k] = v;
        }
    }
    let [u, v, w] = solution;
    Ok(Circle { u, v, w })
}

pub fn centroid<F: Field>() -> ArealPoint<F> {
    ArealPoint::from_ints(1, 1, 1).expect("nonzero")
}

/// `(1/(b²+c²−a²) : 1/(c²+a²−b²) : 1/(a²+b²−c²))`, written without fractions.
pub fn orthocentre<F: Field>(t: &TriangleParams<F>) -> ArealPoint<F> {
    let (ka, kb, kc) = (t.s_a(), t.s_b(), t.s_c());
    ArealPoint::new(kb.clone() * &kc, kc * &ka, ka * &kb)
        .expect("non-right triangle")
        .normalized()
}

/// `(a² : b² : c²)`.
pub fn symmedian<F: Field>(t: &TriangleParams<F>) -> ArealPoint<F> {
    ArealPoint::new(t.sa.clone(), t.sb.clone(), t.sc.clone())
        .expect("positive sides")
        .normalized()
}

fn off_sidelines<F: Field>(p: &ArealPoint<F>) -> Result<(), GeometryError> {
    if p.coords.iter().any(Field::is_zero) {
        Err(GeometryError::OnSideline)
    } else {
        Ok(())
    }
}

/// `(a²yz : b²zx : c²xy)`.
pub fn isogonal<F: Field>(
    t: &TriangleParams<F>,
    p: &ArealPoint<F>,
) -> Result<ArealPoint<F>, GeometryError> {
    off_sidelines(p)?;
    let [x, y, z] = &p.coords;
    Ok(ArealPoint::new(
        t.sa.clone() * y * z,
        t.sb.clone() * z * x,
        t.sc.clone() * x * y,
    )?
    .normalized())
}

/// `(yz : zx : xy)`.
pub fn isotomic<F: Field>(p: &ArealPoint<F>) -> Result<ArealPoint<F>, GeometryError> {
    off_sidelines(p)?;
    let [x, y, z] = &p.coords;
    Ok(ArealPoint::new(y.clone() * z, z.clone() * x, x.clone() * y)?.normalized())
}

/// `(−x+y+z : x−y+z : x+y−z)`, the preimage of `p` under the medial map.
pub fn anticomplement<F: Field>(p: &ArealPoint<F>) -> Result<ArealPoint<F>, GeometryError> {
    let s = p.coordinate_sum();
    let two = F::from_i64(2);
    let [x, y, z] = &p.coords;
    Ok(ArealPoint::new(
        s.clone() - &(two.clone() * x),
        s.clone() - &(two.clone() * y),
        s - &(two * z),
    )?
    .normalized())
}
