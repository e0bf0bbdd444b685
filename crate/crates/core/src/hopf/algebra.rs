use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::feyn::Label;

/// A product of generators: a sorted multiset of labels. Empty is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct GraphMonomial(Vec<Label>);

impl GraphMonomial {
    pub fn one() -> Self {
        GraphMonomial(Vec::new())
    }

    pub fn single(l: Label) -> Self {
        GraphMonomial(vec![l])
    }

    pub fn from_labels(mut ls: Vec<Label>) -> Self {
        ls.sort();
        GraphMonomial(ls)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn mul(&self, other: &GraphMonomial) -> GraphMonomial {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        GraphMonomial::from_labels(v)
    }

    pub fn render(&self, name: &dyn Fn(&Label) -> String) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(name).collect::<Vec<_>>().join("*")
    }
}

fn merge<K: Ord + Clone>(map: &mut BTreeMap<K, i64>, k: K, c: i64) {
    if c == 0 {
        return;
    }
    let e = map.entry(k.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        map.remove(&k);
    }
}

fn coefficient_prefix(first: bool, c: i64) -> String {
    let sign = match (first, c < 0) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    match c.unsigned_abs() {
        1 => sign.to_string(),
        n => format!("{sign}{n}*"),
    }
}

/// Integer combination of generator monomials; like terms merged, no zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GraphSum {
    terms: BTreeMap<GraphMonomial, i64>,
}

impl GraphSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(GraphMonomial::one(), 1)
    }

    pub fn generator(l: Label) -> Self {
        Self::monomial(GraphMonomial::single(l), 1)
    }

    pub fn monomial(m: GraphMonomial, c: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    pub fn add_term(&mut self, m: GraphMonomial, c: i64) {
        merge(&mut self.terms, m, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &GraphMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (m, d) in self.terms() {
            out.add_term(m.clone(), c * d);
        }
        out
    }

    pub fn render(&self, name: &dyn Fn(&Label) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            if m.is_one() {
                s += &match (i == 0, c < 0) {
                    (true, _) => c.to_string(),
                    (false, true) => format!(" - {}", -c),
                    (false, false) => format!(" + {c}"),
                };
            } else {
                s += &coefficient_prefix(i == 0, c);
                s += &m.render(name);
            }
        }
        s
    }
}

impl Add for &GraphSum {
    type Output = GraphSum;
    fn add(self, o: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        for (m, c) in o.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &GraphSum {
    type Output = GraphSum;
    fn sub(self, o: &GraphSum) -> GraphSum {
        self + &o.scale(-1)
    }
}

impl Neg for &GraphSum {
    type Output = GraphSum;
    fn neg(self) -> GraphSum {
        self.scale(-1)
    }
}

impl Mul for &GraphSum {
    type Output = GraphSum;
    fn mul(self, o: &GraphSum) -> GraphSum {
        let mut out = GraphSum::zero();
        for (a, c) in self.terms() {
            for (b, d) in o.terms() {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

/// Integer combination of pairs `left ⊗ right` of generator monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorSum {
    terms: BTreeMap<(GraphMonomial, GraphMonomial), i64>,
}

impl TensorSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// 1 ⊗ 1.
    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(GraphMonomial::one(), GraphMonomial::one(), 1);
        t
    }

    pub fn add_term(&mut self, l: GraphMonomial, r: GraphMonomial, c: i64) {
        merge(&mut self.terms, (l, r), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphMonomial, &GraphMonomial, i64)> {
        self.terms.iter().map(|((l, r), &c)| (l, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise product (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
    pub fn mul(&self, o: &TensorSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for (a, b, c) in self.terms() {
            for (x, y, d) in o.terms() {
                out.add_term(a.mul(x), b.mul(y), c * d);
            }
        }
        out
    }

    pub fn render(&self, name: &dyn Fn(&Label) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (l, r, c)) in self.terms().enumerate() {
            s += &coefficient_prefix(i == 0, c);
            let body = format!("{} ⊗ {}", l.render(name), r.render(name));
            if c.unsigned_abs() == 1 {
                s += &body;
            } else {
                s += &format!("({body})");
            }
        }
        s
    }
}

/// Integer combination of triples, for comparing the two sides of
/// coassociativity.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor3 {
    terms: BTreeMap<(GraphMonomial, GraphMonomial, GraphMonomial), i64>,
}

impl Tensor3 {
    pub fn add_term(&mut self, a: GraphMonomial, b: GraphMonomial, c: GraphMonomial, k: i64) {
        merge(&mut self.terms, (a, b, c), k);
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
