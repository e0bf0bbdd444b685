use std::fmt;

use num_bigint::BigInt;

use crate::{Error, Monomial, Poly, Rational, Result, Var};

pub fn theta() -> Var {
    Var::new("theta")
}

/// `payload · (θ/2)^shift`.
///
/// Keeps quantities such as Π 2α_e/θ inside the polynomial ring: the negative
/// part of the θ power lives in `shift` until [`ThetaTracked::to_poly`] divides
/// it out exactly.
#[derive(Clone, PartialEq, Eq)]
pub struct ThetaTracked {
    pub payload: Poly,
    pub shift: i64,
}

/// (θ/2)^n for n ≥ 0.
pub fn half_theta_pow(n: u32) -> Poly {
    let two = Rational::from_integer(BigInt::from(2).pow(n));
    Poly::term(Rational::from_integer(1.into()) / two, Monomial::from_powers([(theta(), n)]))
}

impl ThetaTracked {
    pub fn plain(p: Poly) -> Self {
        ThetaTracked { payload: p, shift: 0 }
    }

    pub fn zero() -> Self {
        Self::plain(Poly::zero())
    }

    /// Σ payload_i · (θ/2)^{shift_i}, brought to the smallest shift.
    pub fn from_parts(parts: Vec<(Poly, i64)>) -> Self {
        let Some(min) = parts.iter().map(|(_, s)| *s).min() else {
            return Self::zero();
        };
        let payload = parts
            .into_iter()
            .map(|(p, s)| p * half_theta_pow((s - min) as u32))
            .sum();
        ThetaTracked { payload, shift: min }
    }

    /// The true polynomial. A negative shift needs the payload divisible by the
    /// matching θ power.
    pub fn to_poly(&self) -> Result<Poly> {
        if self.shift >= 0 {
            return Ok(&self.payload * &half_theta_pow(self.shift as u32));
        }
        let n = (-self.shift) as u32;
        let q = self
            .payload
            .div_monomial(&Monomial::from_powers([(theta(), n)]))
            .map_err(|e| Error::NegativeThetaPower(format!("(θ/2)^{}: {e}", self.shift)))?;
        let two = Rational::from_integer(BigInt::from(2).pow(n));
        Ok(q.scale(&two))
    }

    pub fn commutative_limit(&self) -> Result<Poly> {
        let p = self.to_poly()?;
        Ok(p.coefficient_of(&theta(), 0))
    }
}

impl fmt::Display for ThetaTracked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_poly() {
            Ok(p) => write!(f, "{p}"),
            Err(_) => write!(f, "({})*(theta/2)^({})", self.payload, self.shift),
        }
    }
}

impl fmt::Debug for ThetaTracked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThetaTracked({:?}, shift {})", self.payload, self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_shift_divides_exactly() {
        // θα · (θ/2)^{-1} = 2α
        let t = ThetaTracked { payload: Poly::var("theta") * Poly::var("a.e1"), shift: -1 };
        assert_eq!(t.to_poly().unwrap().canonical_string(), "2*a.e1");
        let bad = ThetaTracked { payload: Poly::var("a.e1"), shift: -1 };
        assert!(matches!(bad.to_poly(), Err(Error::NegativeThetaPower(_))));
    }

    #[test]
    fn parts_merge() {
        let a = Poly::var("a.e1") * Poly::var("a.e2");
        let t = ThetaTracked::from_parts(vec![(a, 0), (Poly::one(), 2)]);
        assert_eq!(t.to_poly().unwrap().canonical_string(), "a.e1*a.e2 + 1/4*theta^2");
        assert_eq!(t.commutative_limit().unwrap().canonical_string(), "a.e1*a.e2");
    }
}
