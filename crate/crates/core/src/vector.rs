use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;

use crate::error::{GeomError, Result};
use crate::rational::{format_rational, int, parse_rational, ratio, Rational};

/// A point or direction in ℝⁿ with exact coordinates.
///
/// Ordering is lexicographic on the coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = int(1);
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Vector(coords.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    /// Parses a comma separated list such as `"1/2,-3,0"`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`
    pub fn add_scaled(&self, factor: &Rational, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    pub fn midpoint(&self, other: &Vector) -> Vector {
        (self + other).scale(&ratio(1, 2))
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(GeomError::DimensionMismatch {
                expected,
                found: self.dim(),
            })
        }
    }

    /// Arithmetic mean of a non-empty point list.
    pub fn centroid(points: &[Vector]) -> Vector {
        assert!(!points.is_empty(), "centroid of no points");
        let dim = points[0].dim();
        let sum = points.iter().fold(Vector::zeros(dim), |acc, p| &acc + p);
        sum.scale(&ratio(1, points.len() as i64))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::rational::to_f64).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// All vectors in `points` must share `dim`.
pub fn check_dims(points: &[Vector], dim: usize) -> Result<()> {
    points.iter().try_for_each(|p| p.check_dim(dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Vector::from_ratios(&[(1, 2), (-1, 3)]);
        let b = Vector::from_ints(&[2, 1]);
        assert_eq!(a.dot(&b), ratio(2, 3));
        assert_eq!(&a + &b, Vector::from_ratios(&[(5, 2), (2, 3)]));
        assert_eq!(&b - &a, Vector::from_ratios(&[(3, 2), (4, 3)]));
        assert_eq!(a.add_scaled(&int(2), &b), Vector::from_ratios(&[(9, 2), (5, 3)]));
        assert_eq!(Vector::parse("1/2,-1/3").unwrap(), a);
        assert_eq!(a.to_string(), "(1/2,-1/3)");
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![
            Vector::from_ints(&[1, -1]),
            Vector::from_ints(&[-1, 1]),
            Vector::from_ints(&[-1, -1]),
        ];
        v.sort();
        assert_eq!(v[0], Vector::from_ints(&[-1, -1]));
        assert_eq!(v[2], Vector::from_ints(&[1, -1]));
    }
}
