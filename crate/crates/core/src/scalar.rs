//! Scalar traits shared by the matrix and normal-form code.
//!
//! Integer algorithms (Hermite and Smith forms, determinants) are generic over
//! [`IntegerScalar`], so they run on machine integers as well as on
//! [`num_bigint::BigInt`]. Elimination over a field is generic over
//! [`FieldScalar`], which is only implemented for exact rationals.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Exact commutative ring element usable as a matrix entry.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

/// Euclidean integer type: `i64`, `i128`, `BigInt`.
pub trait IntegerScalar: Scalar + Integer + Signed + Ord {}

impl<T> IntegerScalar for T where T: Scalar + Integer + Signed + Ord {}

/// Exact field element. Division must be exact, so this is restricted to
/// rationals over an integer type.
pub trait FieldScalar: Scalar + Signed {}

impl<T> FieldScalar for Ratio<T> where T: IntegerScalar {}

/// Floor division with a remainder in `[0, |d|)`.
pub(crate) fn div_rem_nonneg<T: IntegerScalar>(n: &T, d: &T) -> (T, T) {
    let (mut q, mut r) = n.div_rem(d);
    if r.is_negative() {
        if d.is_positive() {
            q = q - T::one();
            r = r + d.clone();
        } else {
            q = q + T::one();
            r = r - d.clone();
        }
    }
    (q, r)
}
