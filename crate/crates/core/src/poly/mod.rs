//! Exact sparse multivariate polynomials.
//!
//! [`MultiPoly`] stores a map from [`Monomial`] to a nonzero coefficient. The map
//! is ordered by the display order of monomials, so iteration, printing and
//! leading-term selection are all deterministic.

mod monomial;
mod scalar;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

pub use monomial::{Monomial, Var};
pub use scalar::Coefficient;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    pub fn var(v: impl Into<Var>) -> Self {
        Self::term(C::one(), Monomial::var(v.into()))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(m, c)| m.is_one() && c.is_one()) == Some(true)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next()
    }

    /// The constant coefficient, or `None` if the polynomial is not constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each bound variable by its polynomial image; unbound variables
    /// are left in place.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly<C>>) -> Self {
        let mut powers: BTreeMap<(Var, u32), MultiPoly<C>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for (v, e) in m.powers() {
                match bindings.get(v) {
                    Some(image) => {
                        let pw = powers
                            .entry((v.clone(), *e))
                            .or_insert_with(|| image.pow(*e))
                            .clone();
                        acc = &acc * &pw;
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            if !kept.is_empty() {
                acc = acc.mul_monomial(&Monomial::from_powers(kept));
            }
            out += acc;
        }
        out
    }

    /// Coefficient of `v^power`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: &Var, power: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            if e == power {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Terms of minimal total degree in `vars`.
    pub fn lowest_homogeneous_part(&self, vars: &BTreeSet<Var>) -> Result<Self> {
        let degree = |m: &Monomial| -> u32 {
            m.powers().iter().filter(|(v, _)| vars.contains(v)).map(|(_, e)| e).sum()
        };
        let min = self
            .terms
            .keys()
            .map(degree)
            .min()
            .ok_or_else(|| Error::Precondition("lowest homogeneous part of zero".into()))?;
        Ok(MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| degree(m) == min)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn eval(&self, bindings: &BTreeMap<Var, C>) -> Result<C> {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let x = bindings.get(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                for _ in 0..*e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        Ok(total)
    }

    /// Exact division by a monomial; fails if any term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let q = k
                .div(m)
                .ok_or_else(|| Error::InexactDivision(format!("{k} is not divisible by {m}")))?;
            terms.insert(q, c.clone());
        }
        Ok(MultiPoly { terms })
    }

    /// Exact polynomial division. Fails when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm).ok_or_else(|| {
                Error::InexactDivision(format!("leading term {m} not divisible by {lm}"))
            })?;
            let qc = c.clone() / lc.clone();
            let m = m.clone();
            let step = Self::term(qc, qm);
            rem -= &(&step * divisor);
            // inexact coefficient types may leave rounding residue on the cancelled term
            rem.terms.remove(&m);
            quot += step;
        }
        Ok(quot)
    }

    /// Applies `f` to each term; the image monomials may collide and are merged.
    pub fn map_terms<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&Monomial, &C) -> Result<(Monomial, C)>,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (m2, c2) = f(m, c)?;
            out.add_term(m2, c2);
        }
        Ok(out)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Deterministic text form, e.g. `a.e1*a.e3 - 1/2*x^2 + 3`.
    pub fn canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{a}*{m}"));
            }
        }
        s
    }

    /// Term list as JSON: `[{"coeff": "1/2", "powers": {"x": 2}}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let powers: serde_json::Map<String, serde_json::Value> = m
                    .powers()
                    .iter()
                    .map(|(v, e)| (v.to_string(), serde_json::Value::from(*e)))
                    .collect();
                serde_json::json!({ "coeff": c.to_string(), "powers": powers })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl<C: Coefficient + FromStr> MultiPoly<C> {
    /// Parses the canonical string format (and anything close to it: spaces are
    /// optional, factors may appear in any order).
    pub fn parse(text: &str) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero();
        let mut rest = cleaned.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut neg = false;
            if let Some(r) = rest.strip_prefix('-') {
                neg = true;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if !first {
                return Err(Error::Parse(format!("expected '+' or '-' before '{rest}'")));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let mut coeff = C::one();
            let mut powers = Vec::new();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in '{term}'")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let c = C::from_str(factor)
                        .map_err(|_| Error::Parse(format!("bad coefficient '{factor}'")))?;
                    coeff = coeff * c;
                } else {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
                        ),
                        None => (factor, 1),
                    };
                    powers.push((Var::new(name), e));
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_powers(powers), coeff);
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl<C: Coefficient> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.canonical_string())
    }
}

impl<C: Coefficient> AddAssign<MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: MultiPoly<C>) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<C: Coefficient> AddAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &MultiPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn sub_assign(&mut self, rhs: &MultiPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: Self) -> MultiPoly<C> {
        self += rhs;
        self
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(mut self, rhs: Self) -> MultiPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<C: Coefficient> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for MultiPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl<C: Coefficient> std::iter::Product for MultiPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};
    use num_rational::Rational64;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn additive_inverse_and_merge() {
        assert!((p("x") + p("-x")).is_zero());
        assert_eq!((p("x + y") + p("y")).canonical_string(), "x + 2*y");
    }

    #[test]
    fn symanzik_u_assembles_from_parts() {
        let u = p("a.e3*a.e4 + a.e2*a.e4") + p("a.e2*a.e3 + a.e1*a.e3 + a.e1*a.e4");
        assert_eq!(u.canonical_string(), "a.e1*a.e3 + a.e1*a.e4 + a.e2*a.e3 + a.e2*a.e4 + a.e3*a.e4");
    }

    #[test]
    fn products() {
        assert_eq!(&Poly::one() * &p("x + 2*y"), p("x + 2*y"));
        assert_eq!((p("x - 1") * p("y - 1")).canonical_string(), "x*y - x - y + 1");
    }

    #[test]
    fn theta_prefactor_cancels_by_exact_division() {
        // (theta/2) * (2 alpha / theta): clear the theta in the denominator by
        // exact monomial division of the numerator product.
        let num = p("1/2*theta") * p("2*alpha");
        let q = num.div_monomial(&Monomial::var(Var::new("theta"))).unwrap();
        assert_eq!(q, p("alpha"));
        assert!(p("alpha").div_monomial(&Monomial::var(Var::new("theta"))).is_err());
    }

    #[test]
    fn substitution() {
        let mut b = BTreeMap::new();
        b.insert(Var::new("x"), Poly::zero());
        assert_eq!(p("x + y").substitute(&b), p("y"));

        let mut b = BTreeMap::new();
        b.insert(Var::new("theta"), Poly::zero());
        assert_eq!(p("a.e1*a.e2 + 1/4*theta^2").substitute(&b), p("a.e1*a.e2"));
    }

    #[test]
    fn coefficient_extraction() {
        assert_eq!(p("w + b.e1*w^2").coefficient_of(&Var::new("w"), 1), Poly::one());
        assert_eq!(p("q^2 + q*b.e1").coefficient_of(&Var::new("q"), 1), p("b.e1"));
        assert_eq!(p("q^2 + q*b.e1").coefficient_of(&Var::new("q"), 0), Poly::zero());
    }

    #[test]
    fn lowest_part() {
        let betas: BTreeSet<Var> = ["b1", "b2", "b3"].iter().map(|s| Var::new(s)).collect();
        assert_eq!(p("b1 + b1*b2").lowest_homogeneous_part(&betas).unwrap(), p("b1"));
        assert_eq!(p("b1*b2 + b1*b2*b3").lowest_homogeneous_part(&betas).unwrap(), p("b1*b2"));
        assert!(Poly::zero().lowest_homogeneous_part(&betas).is_err());
        // non-listed variables do not count toward the degree
        assert_eq!(p("q^5*b1 + b1*b2").lowest_homogeneous_part(&betas).unwrap(), p("q^5*b1"));
    }

    #[test]
    fn evaluation() {
        let mut b = BTreeMap::new();
        b.insert(Var::new("x"), r(2, 1));
        b.insert(Var::new("y"), r(1, 3));
        assert_eq!(p("x^2*y - 1/2").eval(&b).unwrap(), r(5, 6));
        assert!(p("z").eval(&b).is_err());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Poly::zero().canonical_string(), "0");
        assert_eq!(p("x + y").canonical_string(), p("y + x").canonical_string());
        assert_eq!(p("-x + 1/4*theta^2 - 3").canonical_string(), "1/4*theta^2 - x - 3");
        assert_eq!(p("-1").canonical_string(), "-1");
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert!(p("x^2 + 1").div_exact(&p("x - 1")).is_err());
        assert!(a.div_exact(&Poly::zero()).is_err());
    }

    #[test]
    fn works_over_other_coefficient_rings() {
        let a: MultiPoly<Rational64> = MultiPoly::parse("x + 1/2").unwrap();
        assert_eq!((&a * &a).canonical_string(), "x^2 + x + 1/4");
        let b: MultiPoly<f64> = MultiPoly::var("x") + MultiPoly::constant(0.5);
        let mut env = BTreeMap::new();
        env.insert(Var::new("x"), 1.5);
        assert_eq!(b.pow(2).eval(&env).unwrap(), 4.0);
    }

    #[test]
    fn json_terms() {
        let j = p("1/2*x^2 + y").to_json();
        assert_eq!(j[0]["coeff"], "1/2");
        assert_eq!(j[0]["powers"]["x"], 2);
        assert_eq!(j[1]["powers"]["y"], 1);
    }
}
