use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A named polynomial variable. Variables order lexicographically by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        assert!(!name.is_empty(), "variable names must be nonempty");
        Var(Arc::from(name))
    }

    /// Schwinger parameter of an internal edge, rendered `a.<edge id>`.
    pub fn alpha(edge_id: &str) -> Self {
        Var::new(&format!("a.{edge_id}"))
    }

    /// Per-edge weight of the multivariate Tutte and Bollobás–Riordan polynomials,
    /// rendered `b.<edge id>`.
    pub fn beta(edge_id: &str) -> Self {
        Var::new(&format!("b.{edge_id}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// A power product of variables with positive exponents, sorted by variable.
///
/// The `Ord` implementation is the display order used by canonical strings:
/// higher total degree first, then the monomial with the larger exponent in the
/// alphabetically smallest variable where the two differ. This is a graded
/// lexicographic monomial order, so the first term of a sorted polynomial is its
/// leading term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(powers: I) -> Self {
        let mut v: Vec<(Var, u32)> = powers.into_iter().filter(|(_, e)| *e > 0).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, le)) if *last == var => *le += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if every exponent of `other` is covered.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *v {
                let oe = other.0[j].1;
                j += 1;
                match e.cmp(&oe) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v.clone(), e - oe)),
                }
            } else {
                out.push((v.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes `v` from the monomial, returning the remaining part and the exponent.
    pub fn split_off(&self, v: &Var) -> (Monomial, u32) {
        let mut rest = self.0.clone();
        match rest.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => {
                let (_, e) = rest.remove(i);
                (Monomial(rest), e)
            }
            Err(_) => (Monomial(rest), 0),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match other.degree().cmp(&self.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match b.1.cmp(&a.1) {
                    Ordering::Equal => {}
                    o => return o,
                },
            }
        }
        // equal degrees and an identical prefix leave no room for trailing factors
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(&str, u32)]) -> Monomial {
        Monomial::from_powers(p.iter().map(|(v, e)| (Var::new(v), *e)))
    }

    #[test]
    fn display_order_is_graded_then_lex() {
        let mut v = [m(&[("a.e3", 1), ("a.e4", 1)]),
            m(&[("a.e1", 1), ("a.e4", 1)]),
            m(&[("a.e1", 1), ("a.e3", 1)]),
            m(&[]),
            m(&[("x", 3)])];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["x^3", "a.e1*a.e3", "a.e1*a.e4", "a.e3*a.e4", "1"]);
    }

    #[test]
    fn division() {
        let a = m(&[("x", 2), ("y", 1)]);
        assert_eq!(a.div(&m(&[("x", 1)])), Some(m(&[("x", 1), ("y", 1)])));
        assert_eq!(a.div(&m(&[("z", 1)])), None);
        assert_eq!(a.div(&m(&[("y", 2)])), None);
        assert_eq!(a.div(&a), Some(Monomial::one()));
    }
}
