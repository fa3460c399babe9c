use serde::{Deserialize, Serialize};

use super::multi::{MSeries, Monomial};
use super::series::{Coeff, Series};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Length {
    Finite(u32),
    Infinite,
}

/// `Π_n (1 - sign · base · modulus^n)` over `n` in `0..length`.
///
/// `sign = 1` gives `(x; m)_L`, `sign = -1` gives `(-x; m)_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PochSpec<B> {
    pub sign: i8,
    pub base: B,
    pub modulus: B,
    pub length: Length,
}

impl<B> PochSpec<B> {
    pub fn new(sign: i8, base: B, modulus: B, length: Length) -> Self {
        Self { sign, base, modulus, length }
    }

    pub fn infinite(sign: i8, base: B, modulus: B) -> Self {
        Self::new(sign, base, modulus, Length::Infinite)
    }
}

/// Variables a q-Pochhammer product can be taken in.
pub trait PochBase: Copy {
    fn degree(self) -> usize;
    fn times_power(self, modulus: Self, n: u32) -> Self;
}

impl PochBase for u32 {
    fn degree(self) -> usize {
        self as usize
    }

    fn times_power(self, modulus: Self, n: u32) -> Self {
        self + modulus * n
    }
}

impl PochBase for Monomial {
    fn degree(self) -> usize {
        Monomial::degree(self)
    }

    fn times_power(self, modulus: Self, n: u32) -> Self {
        self.mul(modulus.pow(n))
    }
}

impl<B: PochBase> PochSpec<B> {
    fn check(&self) -> Result<()> {
        if self.sign != 1 && self.sign != -1 {
            return Err(invalid("pochhammer", format!("sign must be +1 or -1, got {}", self.sign)));
        }
        if self.length == Length::Infinite && self.modulus.degree() == 0 {
            return Err(Error::DegenerateModulus);
        }
        Ok(())
    }

    /// The factors `base · modulus^n` whose degree is at most `order`.
    fn terms(&self, order: usize) -> Result<Vec<B>> {
        self.check()?;
        let mut out = Vec::new();
        let mut n = 0u32;
        loop {
            if let Length::Finite(l) = self.length {
                if n >= l {
                    break;
                }
            }
            let x = self.base.times_power(self.modulus, n);
            if x.degree() > order {
                if self.modulus.degree() > 0 {
                    break;
                }
            } else {
                out.push(x);
            }
            n += 1;
        }
        Ok(out)
    }

    fn neg_sign(&self) -> Coeff {
        -Coeff::from(self.sign)
    }
}

/// Expands a univariate q-Pochhammer product through `q^order`.
pub fn pochhammer(spec: &PochSpec<u32>, order: usize) -> Result<Series> {
    let mut s = Series::one(order);
    for x in spec.terms(order)? {
        if x == 0 {
            s = s.scale(1 + spec.neg_sign())?;
        } else {
            s.mul_binomial(spec.neg_sign(), x as usize)?;
        }
    }
    Ok(s)
}

/// `1 / pochhammer(spec)`, by repeated division by each factor.
pub fn pochhammer_inverse(spec: &PochSpec<u32>, order: usize) -> Result<Series> {
    let mut s = Series::one(order);
    for x in spec.terms(order)? {
        if x == 0 {
            return pochhammer(spec, order)?.inverse();
        }
        s.div_binomial(Coeff::from(spec.sign), x as usize)?;
    }
    Ok(s)
}

/// Expands a four-variable q-Pochhammer product through total degree `order`.
pub fn m_pochhammer(spec: &PochSpec<Monomial>, order: usize) -> Result<MSeries> {
    let mut s = MSeries::one(order);
    for x in spec.terms(order)? {
        if x.degree() == 0 {
            s = s.scale(1 + spec.neg_sign())?;
        } else {
            s.mul_binomial(spec.neg_sign(), x)?;
        }
    }
    Ok(s)
}

pub fn m_pochhammer_inverse(spec: &PochSpec<Monomial>, order: usize) -> Result<MSeries> {
    let mut s = MSeries::one(order);
    for x in spec.terms(order)? {
        if x.degree() == 0 {
            return m_pochhammer(spec, order)?.inverse();
        }
        s.div_binomial(Coeff::from(spec.sign), x)?;
    }
    Ok(s)
}

/// Multiplies (or divides, with `invert`) `s` in place by the product.
pub(crate) fn m_apply(s: &mut MSeries, spec: &PochSpec<Monomial>, invert: bool) -> Result<()> {
    let order = s.order();
    for x in spec.terms(order)? {
        if x.degree() == 0 {
            return Err(invalid("pochhammer", "in-place product with a degree-0 factor"));
        }
        if invert {
            s.div_binomial(Coeff::from(spec.sign), x)?;
        } else {
            s.mul_binomial(spec.neg_sign(), x)?;
        }
    }
    Ok(())
}

/// `(q; q)_n`.
pub fn q_factorial(n: u32, order: usize) -> Result<Series> {
    pochhammer(&PochSpec::new(1, 1, 1, Length::Finite(n)), order)
}
