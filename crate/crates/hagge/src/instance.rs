//! Parsing triangles and starting points from command-line text.

use hagge_core::areal::{orthocentre, symmedian, ArealPoint, GeometryError, TriangleParams};
use hagge_core::construct::{ConstructError, StartingPoint};
use hagge_core::scalar::{Field, Rational};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("expected three comma-separated values, got {0:?}")]
    Arity(String),
    #[error("invalid number {0:?}")]
    Number(String),
    #[error("side lengths must be positive integers, got {0:?}")]
    Side(String),
    #[error("invalid triangle: {0}")]
    Triangle(GeometryError),
    #[error("invalid starting point: {0}")]
    Point(GeometryError),
    #[error("invalid starting point: {0}")]
    Start(ConstructError),
    #[error("coordinates must be positive (pass --allow-exterior to use an exterior point)")]
    NonPositive,
    #[error("give either --triangle or --sides, not both")]
    BothTriangleForms,
    #[error("a triangle is required (--triangle or --sides)")]
    MissingTriangle,
}

fn triple(s: &str) -> Result<[&str; 3], InputError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    <[&str; 3]>::try_from(parts).map_err(|_| InputError::Arity(s.to_string()))
}

fn rationals(s: &str) -> Result<[Rational; 3], InputError> {
    let [x, y, z] = triple(s)?;
    let parse = |v: &str| {
        v.parse::<Rational>()
            .map_err(|_| InputError::Number(v.to_string()))
    };
    Ok([parse(x)?, parse(y)?, parse(z)?])
}

/// Squared side lengths `a², b², c²` such as `4,5,6` or `9/4,3,5`.
pub fn parse_squared(s: &str) -> Result<TriangleParams<Rational>, InputError> {
    let [a, b, c] = rationals(s)?;
    TriangleParams::new(a, b, c).map_err(InputError::Triangle)
}

/// Integer side lengths `a, b, c`, squared on the way in.
pub fn parse_sides(s: &str) -> Result<TriangleParams<Rational>, InputError> {
    let [a, b, c] = triple(s)?;
    let side = |v: &str| match v.parse::<i64>() {
        Ok(n) if n > 0 && n <= 3_000_000_000 => Ok(Rational::from(n) * &Rational::from(n)),
        _ => Err(InputError::Side(v.to_string())),
    };
    TriangleParams::new(side(a)?, side(b)?, side(c)?).map_err(InputError::Triangle)
}

/// Resolves the `--triangle` / `--sides` pair.
pub fn triangle(
    squared: Option<&str>,
    sides: Option<&str>,
) -> Result<TriangleParams<Rational>, InputError> {
    match (squared, sides) {
        (Some(_), Some(_)) => Err(InputError::BothTriangleForms),
        (Some(s), None) => parse_squared(s),
        (None, Some(s)) => parse_sides(s),
        (None, None) => Err(InputError::MissingTriangle),
    }
}

/// A starting point: `g`, `k`, `h`, or three rationals.
pub fn parse_point(
    t: &TriangleParams<Rational>,
    s: &str,
    allow_exterior: bool,
) -> Result<ArealPoint<Rational>, InputError> {
    match s.trim().to_ascii_lowercase().as_str() {
        "g" => return Ok(ArealPoint::from_ints(1, 1, 1).expect("nonzero")),
        "k" => return Ok(symmedian(t)),
        "h" => return Ok(orthocentre(t)),
        _ => {}
    }
    let coords = rationals(s)?;
    let p = ArealPoint::from_array(coords).map_err(InputError::Point)?;
    let all_positive = p.coords().iter().all(|c| c.is_positive() == Some(true));
    if !all_positive && !allow_exterior {
        return Err(InputError::NonPositive);
    }
    Ok(p)
}

pub fn starting_point(
    t: &TriangleParams<Rational>,
    p: ArealPoint<Rational>,
    allow_exterior: bool,
) -> Result<StartingPoint<Rational>, InputError> {
    StartingPoint::classify_with(t, p, allow_exterior).map_err(InputError::Start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squared_sides() {
        let t = parse_squared("4, 5, 6").unwrap();
        assert_eq!(t.sa, Rational::from(4));
        assert!(parse_squared("9/4,3,5").is_ok());
        assert!(matches!(
            parse_squared("1,1,2"),
            Err(InputError::Triangle(GeometryError::RightTriangle))
        ));
        assert!(matches!(parse_squared("1,2"), Err(InputError::Arity(_))));
        assert!(matches!(parse_squared("1,x,2"), Err(InputError::Number(_))));
    }

    #[test]
    fn integer_sides_are_squared() {
        let t = parse_sides("2,3,4").unwrap();
        assert_eq!(t.sc, Rational::from(16));
        assert!(parse_sides("3,4,5").is_err());
        assert!(parse_sides("1,2,9").is_err());
        assert!(parse_sides("1.5,2,2").is_err());
    }

    #[test]
    fn named_and_numeric_points() {
        let t = parse_squared("4,5,6").unwrap();
        assert!(parse_point(&t, "k", false)
            .unwrap()
            .eq_projective(&ArealPoint::from_ints(4, 5, 6).unwrap()));
        assert!(parse_point(&t, "H", false)
            .unwrap()
            .eq_projective(&ArealPoint::from_ints(15, 21, 35).unwrap()));
        assert!(parse_point(&t, "2,1,1", false).is_ok());
        assert!(matches!(
            parse_point(&t, "2,-1,1", false),
            Err(InputError::NonPositive)
        ));
        assert!(parse_point(&t, "2,-1,1", true).is_ok());
        assert!(matches!(
            parse_point(&t, "0,0,0", true),
            Err(InputError::Point(_))
        ));
    }
}
