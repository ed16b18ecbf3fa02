//! Truncated formal power series with exact `i128` coefficients.
//!
//! Every operation is checked; overflow surfaces as [`Error::Overflow`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N`, with `N` the truncation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSeries {
    coefficients: Vec<i128>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coefficients: vec![0; order + 1],
        }
    }

    pub fn constant(c: i128, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    /// Truncates or zero-pads `coefficients` to `order`.
    pub fn from_coefficients(mut coefficients: Vec<i128>, order: usize) -> Self {
        coefficients.resize(order + 1, 0);
        PowerSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    pub fn coefficient(&self, m: usize) -> i128 {
        self.coefficients.get(m).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.zip_with(other, i128::checked_add)
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.zip_with(other, i128::checked_sub)
    }

    fn zip_with(
        &self,
        other: &PowerSeries,
        f: fn(i128, i128) -> Option<i128>,
    ) -> Result<PowerSeries> {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|m| f(self.coefficients[m], other.coefficients[m]).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(PowerSeries { coefficients })
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let order = self.order().min(other.order());
        let mut out = vec![0i128; order + 1];
        for (i, &a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(PowerSeries { coefficients: out })
    }

    /// Multiplication by `t`, dropping the term that falls off the end.
    pub fn shift(&self) -> PowerSeries {
        let mut coefficients = vec![0; self.coefficients.len()];
        coefficients[1..].copy_from_slice(&self.coefficients[..self.coefficients.len() - 1]);
        PowerSeries { coefficients }
    }

    /// `1 / self`; the constant term must be `±1` so the inverse stays
    /// integral.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let c0 = self.coefficients[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::NotInvertible(c0));
        }
        let order = self.order();
        let mut inv = vec![0i128; order + 1];
        inv[0] = c0;
        for m in 1..=order {
            let mut acc: i128 = 0;
            for k in 1..=m {
                let term = self.coefficients[k]
                    .checked_mul(inv[m - k])
                    .ok_or(Error::Overflow)?;
                acc = acc.checked_add(term).ok_or(Error::Overflow)?;
            }
            // c0 * inv[m] = -acc, and c0 is its own inverse.
            inv[m] = acc
                .checked_neg()
                .and_then(|x| x.checked_mul(c0))
                .ok_or(Error::Overflow)?;
        }
        Ok(PowerSeries { coefficients: inv })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_series() {
        let one_minus_t = PowerSeries::from_coefficients(vec![1, -1], 6);
        assert_eq!(one_minus_t.reciprocal().unwrap().coefficients(), &[1; 7]);
    }

    #[test]
    fn non_unit_constant_rejected() {
        let s = PowerSeries::from_coefficients(vec![2, 1], 3);
        assert_eq!(s.reciprocal(), Err(Error::NotInvertible(2)));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = PowerSeries::from_coefficients(vec![1, i128::MAX], 2);
        assert_eq!(big.mul(&big), Err(Error::Overflow));
        let doubling = PowerSeries::from_coefficients(vec![1, -(1i128 << 100)], 3);
        assert_eq!(doubling.reciprocal(), Err(Error::Overflow));
    }

    #[test]
    fn shift_drops_last() {
        let s = PowerSeries::from_coefficients(vec![1, 2, 3], 2);
        assert_eq!(s.shift().coefficients(), &[0, 1, 2]);
        assert_eq!(s.to_string(), "1 2 3");
    }

    proptest! {
        #[test]
        fn reciprocal_times_self_is_one(tail in proptest::collection::vec(-50i128..50, 0..8), neg in any::<bool>()) {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            let order = 7;
            let s = PowerSeries::from_coefficients(c, order);
            let inv = s.reciprocal().unwrap();
            prop_assert_eq!(s.mul(&inv).unwrap(), PowerSeries::one(order));
        }
    }
}
