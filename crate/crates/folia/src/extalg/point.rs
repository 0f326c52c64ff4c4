use num_traits::Zero;

use crate::rational::Rational;

/// A rational point of affine space, or a chosen representative of a
/// projective point (not all coordinates zero in that case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointQ(Vec<Rational>);

impl PointQ {
    pub fn new(coords: Vec<Rational>) -> Self {
        PointQ(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        PointQ(coords.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}
