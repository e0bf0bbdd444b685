use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::feyn::Label;

/// A factor of a formal amplitude: the Feynman rule applied to a generator, or
/// the projection T applied to a product of factors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Atom {
    T(Box<AmpMonomial>),
    Phi(Label),
}

/// Sorted product of atoms; empty is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AmpMonomial(Vec<Atom>);

impl AmpMonomial {
    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    fn t_count(&self) -> usize {
        self.0.iter().filter(|a| matches!(a, Atom::T(_))).count()
    }

    fn mul(&self, o: &AmpMonomial) -> AmpMonomial {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        v.sort();
        AmpMonomial(v)
    }

    fn render(&self, name: &dyn Fn(&Label) -> String) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|a| match a {
                Atom::Phi(l) => format!("Phi({})", name(l)),
                Atom::T(m) => format!("T[{}]", m.render(name)),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

// fewer counterterms first, so the bare amplitude leads
impl Ord for AmpMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.t_count(), self.0.len(), &self.0).cmp(&(o.t_count(), o.0.len(), &o.0))
    }
}

impl PartialOrd for AmpMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Fully expanded integer combination of atom products. T is linear and is
/// pushed through sums and scalars, so every T node wraps a single monomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalAmplitude {
    terms: BTreeMap<AmpMonomial, i64>,
}

impl FormalAmplitude {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(AmpMonomial::default(), 1)
    }

    pub fn phi(l: Label) -> Self {
        Self::from_monomial(AmpMonomial(vec![Atom::Phi(l)]), 1)
    }

    fn from_monomial(m: AmpMonomial, c: i64) -> Self {
        let mut a = Self::zero();
        a.add_term(m, c);
        a
    }

    fn add_term(&mut self, m: AmpMonomial, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AmpMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (m, d) in self.terms() {
            out.add_term(m.clone(), c * d);
        }
        out
    }

    /// T applied termwise.
    pub fn t(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_term(AmpMonomial(vec![Atom::T(Box::new(m.clone()))]), c);
        }
        out
    }

    /// (id − T).
    pub fn id_minus_t(&self) -> Self {
        self - &self.t()
    }

    pub fn render(&self, name: &dyn Fn(&Label) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let sign = match (i == 0, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            s += sign;
            let n = c.unsigned_abs();
            match (n, m.0.is_empty()) {
                (_, true) => s += &n.to_string(),
                (1, false) => s += &m.render(name),
                _ => s += &format!("{n}*{}", m.render(name)),
            }
        }
        s
    }

    /// Every generator mentioned, inside T nodes too.
    pub fn labels(&self) -> Vec<Label> {
        fn walk(m: &AmpMonomial, out: &mut Vec<Label>) {
            for a in &m.0 {
                match a {
                    Atom::Phi(l) => out.push(l.clone()),
                    Atom::T(inner) => walk(inner, out),
                }
            }
        }
        let mut out = Vec::new();
        for m in self.terms.keys() {
            walk(m, &mut out);
        }
        out.sort();
        out.dedup();
        out
    }
}

impl Add for &FormalAmplitude {
    type Output = FormalAmplitude;
    fn add(self, o: &FormalAmplitude) -> FormalAmplitude {
        let mut out = self.clone();
        for (m, c) in o.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &FormalAmplitude {
    type Output = FormalAmplitude;
    fn sub(self, o: &FormalAmplitude) -> FormalAmplitude {
        self + &o.scale(-1)
    }
}

impl Neg for &FormalAmplitude {
    type Output = FormalAmplitude;
    fn neg(self) -> FormalAmplitude {
        self.scale(-1)
    }
}

impl Mul for &FormalAmplitude {
    type Output = FormalAmplitude;
    fn mul(self, o: &FormalAmplitude) -> FormalAmplitude {
        let mut out = FormalAmplitude::zero();
        for (a, c) in self.terms() {
            for (b, d) in o.terms() {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}
