use std::fmt::Debug;

use num_traits::{FromPrimitive, Signed};

/// Exact signed scalar used for quotas and deficits.
///
/// Implemented for `Ratio<i64>` (the default) and `Ratio<i128>`. Plain integer
/// types do not qualify because `|V|/2` must be representable.
pub trait Scalar: Signed + FromPrimitive + Ord + Copy + Debug + Send + Sync + 'static {
    fn from_count(k: usize) -> Self {
        Self::from_usize(k).expect("count fits the scalar type")
    }

    fn ratio(num: usize, den: usize) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }

    /// `max(0, self)`.
    fn positive_part(self) -> Self {
        if self > Self::zero() {
            self
        } else {
            Self::zero()
        }
    }
}

impl Scalar for num_rational::Ratio<i64> {}
impl Scalar for num_rational::Ratio<i128> {}
