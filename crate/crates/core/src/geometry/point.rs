use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rational(x, 1), rational(y, 1))
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn norm_l1(&self) -> Rational {
        self.x.abs() + self.y.abs()
    }

    pub fn dist_sq(&self, other: &Point) -> Rational {
        (self - other).norm_sq()
    }

    /// Squared distance from `self` to the closed segment `[a, b]`.
    pub fn dist_sq_to_segment(&self, a: &Point, b: &Point) -> Rational {
        let ab = b - a;
        let len = ab.norm_sq();
        if len.is_zero() {
            return self.dist_sq(a);
        }
        let t = (self - a).dot(&ab) / &len;
        let t = if t.is_negative() {
            Rational::zero()
        } else if t > Rational::from_integer(1.into()) {
            Rational::from_integer(1.into())
        } else {
            t
        };
        self.dist_sq(&(a + &ab.scale(&t)))
    }
}

impl Add for &Point {
    type Output = Point;

    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(b - a) × (c - a)`: `Greater` for a
/// counter-clockwise turn.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    (b - a).cross(&(c - a)).cmp(&Rational::zero())
}

// Rationals are serialized as "num/den" strings so traces stay exact.
impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let parse = |s: &str| s.parse::<Rational>().map_err(serde::de::Error::custom);
        Ok(Point::new(parse(&x)?, parse(&y)?))
    }
}
