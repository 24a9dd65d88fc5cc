//! Exhaustive subset enumeration over small spaces with exact integer masses.
//!
//! Both measures are rescaled to a common denominator, so subset masses are
//! integer sums. Small denominators use `i128`; anything larger falls back
//! to `BigInt`.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::measure::Measure;

pub(crate) trait Mass: Clone + Ord + Zero + for<'a> AddAssign<&'a Self> {}
impl Mass for i128 {}
impl Mass for BigInt {}

pub(crate) trait MassVisitor {
    type Out;
    fn visit<T: Mass>(self, mu: &[T], nu: &[T]) -> Self::Out;
}

pub(crate) fn with_scaled<V: MassVisitor>(mu: &Measure, nu: &Measure, v: V) -> V::Out {
    let lcm = mu
        .weights()
        .iter()
        .chain(nu.weights())
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let scale = |m: &Measure| -> Vec<BigInt> {
        m.weights()
            .iter()
            .map(|w| w.numer() * (&lcm / w.denom()))
            .collect()
    };
    let (a, b) = (scale(mu), scale(nu));
    if lcm.bits() < 120 {
        let small = |v: &[BigInt]| -> Vec<i128> {
            v.iter().map(|x| i128::try_from(x).expect("bounded by lcm")).collect()
        };
        v.visit(&small(&a), &small(&b))
    } else {
        v.visit(&a, &b)
    }
}

pub(crate) fn mask_sum<T: Mass>(w: &[T], mask: u64) -> T {
    let mut total = T::zero();
    let mut rest = mask;
    while rest != 0 {
        let p = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += &w[p];
    }
    total
}

/// Calls `f` on every subset mask, by increasing size and then
/// lexicographically in `order` (event indices ranked by label). Stops
/// early and returns the first `Some`.
pub(crate) fn canonical_subsets<R>(order: &[usize], mut f: impl FnMut(u64) -> Option<R>) -> Option<R> {
    let n = order.len();
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &r| m | 1 << order[r]);
            if let Some(r) = f(mask) {
                return Some(r);
            }
            // advance to the next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut seen = Vec::new();
        canonical_subsets::<()>(&[0, 1, 2], |m| {
            seen.push(m);
            None
        });
        assert_eq!(seen, vec![0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]);
    }

    #[test]
    fn order_permutation_is_respected() {
        let mut seen = Vec::new();
        canonical_subsets::<()>(&[2, 0, 1], |m| {
            seen.push(m);
            None
        });
        assert_eq!(&seen[1..4], &[0b100, 0b001, 0b010]);
        assert_eq!(seen.len(), 8);
    }
}
