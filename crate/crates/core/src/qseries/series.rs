use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub type Coeff = i64;

pub(crate) fn add_c(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul_c(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// A power series in `q` known exactly through `q^order`.
///
/// Arithmetic between series of different orders truncates to the smaller
/// one. Coefficient overflow is an error, never a wrap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct Series {
    order: usize,
    coeffs: Vec<Coeff>,
}

#[derive(Deserialize)]
struct RawSeries {
    order: usize,
    coeffs: Vec<Coeff>,
}

impl TryFrom<RawSeries> for Series {
    type Error = Error;

    fn try_from(raw: RawSeries) -> Result<Self> {
        if raw.coeffs.len() != raw.order + 1 {
            return Err(invalid("series", format!("order {} needs {} coefficients", raw.order, raw.order + 1)));
        }
        Ok(Series { order: raw.order, coeffs: raw.coeffs })
    }
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self { order, coeffs: vec![0; order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `coeff · q^exp`, or zero if `exp` lies past the order.
    pub fn monomial(order: usize, exp: usize, coeff: Coeff) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Pads with zeros or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Coeff>) -> Self {
        coeffs.resize(order + 1, 0);
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Coeff {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub(crate) fn add_at(&mut self, n: usize, c: Coeff) -> Result<()> {
        if n <= self.order {
            self.coeffs[n] = add_c(self.coeffs[n], c)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| add_c(self.coeffs[i], other.coeffs[i]))
            .collect::<Result<_>>()?;
        Ok(Self { order, coeffs })
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn scale(&self, c: Coeff) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|&x| mul_c(x, c)).collect::<Result<_>>()?;
        Ok(Self { order: self.order, coeffs })
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order);
        if k <= self.order {
            s.coeffs[k..].copy_from_slice(&self.coeffs[..=self.order - k]);
        }
        s
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for (i, &a) in self.coeffs[..=order].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=order - i].iter().enumerate() {
                if b != 0 {
                    out.coeffs[i + j] = add_c(out.coeffs[i + j], mul_c(a, b)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnitConstant(c0));
        }
        let mut inv = Self::zero(self.order);
        inv.coeffs[0] = c0;
        for n in 1..=self.order {
            let mut acc: Coeff = 0;
            for i in 1..=n {
                let a = self.coeffs[i];
                if a != 0 {
                    acc = add_c(acc, mul_c(a, inv.coeffs[n - i])?)?;
                }
            }
            // c0 = ±1 is its own inverse
            inv.coeffs[n] = mul_c(-acc, c0)?;
        }
        Ok(inv)
    }

    /// Multiplies in place by `1 + c·q^k`.
    pub(crate) fn mul_binomial(&mut self, c: Coeff, k: usize) -> Result<()> {
        if k == 0 {
            return Err(invalid("binomial factor", "degree-0 factor"));
        }
        for n in (k..=self.order).rev() {
            self.coeffs[n] = add_c(self.coeffs[n], mul_c(c, self.coeffs[n - k])?)?;
        }
        Ok(())
    }

    /// Divides in place by `1 - c·q^k` with `c = ±1`.
    pub(crate) fn div_binomial(&mut self, c: Coeff, k: usize) -> Result<()> {
        if k == 0 {
            return Err(invalid("binomial factor", "degree-0 factor"));
        }
        for n in k..=self.order {
            self.coeffs[n] = add_c(self.coeffs[n], mul_c(c, self.coeffs[n - k])?)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(order: usize, c: &[Coeff]) -> Series {
        Series::from_coeffs(order, c.to_vec())
    }

    #[test]
    fn basic_products() {
        assert_eq!(s(2, &[1, 1]).mul(&s(2, &[1, -1])).unwrap(), s(2, &[1, 0, -1]));
        assert!(s(4, &[3, 2, 1]).mul(&Series::zero(4)).unwrap().is_zero());
        let geometric = s(5, &[1; 6]);
        assert_eq!(geometric.mul(&s(5, &[1, -1])).unwrap(), Series::one(5));
    }

    #[test]
    fn inverses() {
        assert_eq!(s(6, &[1, -1]).inverse().unwrap(), s(6, &[1; 7]));
        // 1/((1-q)(1-q^2)): partitions into parts <= 2; 3 of them for n = 4
        let poch = s(6, &[1, -1, -1, 1]);
        assert_eq!(poch.inverse().unwrap().coeff(4), 3);
        assert_eq!(poch.inverse().unwrap().inverse().unwrap(), poch);
        assert_eq!(s(3, &[-1, 2]).inverse().unwrap(), s(3, &[-1, -2, -4, -8]));
        assert_eq!(s(3, &[2, 1]).inverse(), Err(Error::NonUnitConstant(2)));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = s(5, &[1, 1, 1, 1, 1, 1]);
        let b = s(2, &[1, 1, 1]);
        assert_eq!(a.add(&b).unwrap().order(), 2);
        assert_eq!(a.mul(&b).unwrap().order(), 2);
    }

    #[test]
    fn overflow_detected() {
        let big = s(2, &[1, i64::MAX]);
        assert_eq!(big.add(&big), Err(Error::Overflow));
        assert_eq!(big.mul(&s(2, &[1, 2])), Err(Error::Overflow));
    }

    #[test]
    fn binomial_helpers() {
        let mut x = Series::one(6);
        x.mul_binomial(-1, 2).unwrap();
        x.div_binomial(1, 2).unwrap();
        assert_eq!(x, Series::one(6));
    }

    #[test]
    fn json_shape() {
        let x = s(2, &[1, 0, -1]);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"order":2,"coeffs":[1,0,-1]}"#);
        assert!(serde_json::from_str::<Series>(r#"{"order":3,"coeffs":[1]}"#).is_err());
    }

    fn small_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec(-20i64..20, order + 1).prop_map(move |c| Series::from_coeffs(order, c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_series(8), b in small_series(8), c in small_series(8)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
        }

        #[test]
        fn inverse_is_two_sided(
            c in prop::collection::vec(-3i64..=3, 11),
            unit in prop::bool::ANY,
        ) {
            let mut a = Series::from_coeffs(10, c);
            a = a.sub(&Series::monomial(10, 0, a.coeff(0))).unwrap();
            a = a.add(&Series::monomial(10, 0, if unit { 1 } else { -1 })).unwrap();
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), Series::one(10));
            prop_assert_eq!(inv.inverse().unwrap(), a);
        }
    }
}
