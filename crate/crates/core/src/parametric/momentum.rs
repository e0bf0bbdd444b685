use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde_json::Value;

use crate::graphs::{Graph, LegDir};
use crate::{Error, Rational, Result};

/// A Euclidean 4-vector with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Momentum(pub [Rational; 4]);

impl Momentum {
    pub fn zero() -> Self {
        Momentum(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Momentum(c.map(|x| Rational::from_integer(x.into())))
    }

    pub fn unit(i: usize) -> Self {
        let mut c = [0; 4];
        c[i] = 1;
        Momentum::from_ints(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Momentum) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn square(&self) -> Rational {
        self.dot(self)
    }

    /// p∧q = p₁q₂ − p₂q₁ + p₃q₄ − p₄q₃.
    pub fn wedge(&self, q: &Momentum) -> Rational {
        let p = &self.0;
        let q = &q.0;
        &p[0] * &q[1] - &p[1] * &q[0] + &p[2] * &q[3] - &p[3] * &q[2]
    }

    pub fn scaled(&self, s: i64) -> Momentum {
        let s = Rational::from_integer(s.into());
        Momentum(std::array::from_fn(|i| &self.0[i] * &s))
    }
}

impl Add for &Momentum {
    type Output = Momentum;
    fn add(self, o: &Momentum) -> Momentum {
        Momentum(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Momentum {
    type Output = Momentum;
    fn sub(self, o: &Momentum) -> Momentum {
        Momentum(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Momentum {
    type Output = Momentum;
    fn neg(self) -> Momentum {
        Momentum(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Debug for Momentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Momenta on the external legs of a graph, each with its direction.
/// Invariant: Σ sign·p = 0 and every leg of the graph is covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalAssignment {
    momenta: BTreeMap<String, (Momentum, LegDir)>,
}

impl ExternalAssignment {
    /// Validates coverage and conservation against `g`.
    pub fn new(g: &Graph, momenta: BTreeMap<String, (Momentum, LegDir)>) -> Result<Self> {
        for id in momenta.keys() {
            g.leg_index(id)?;
        }
        if let Some(l) = g.legs().iter().find(|l| !momenta.contains_key(&l.id)) {
            return Err(Error::Precondition(format!("no momentum given for external leg '{}'", l.id)));
        }
        let total = momenta
            .values()
            .fold(Momentum::zero(), |acc, (p, d)| &acc + &p.scaled(d.sign()));
        if !total.is_zero() {
            return Err(Error::MomentumNotConserved(format!("{total:?}")));
        }
        Ok(ExternalAssignment { momenta })
    }

    /// Uses the graph's own leg directions.
    pub fn with_graph_dirs(g: &Graph, momenta: BTreeMap<String, Momentum>) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (id, p) in momenta {
            let dir = g.legs()[g.leg_index(&id)?].dir;
            m.insert(id, (p, dir));
        }
        Self::new(g, m)
    }

    pub fn zero(g: &Graph) -> Self {
        ExternalAssignment {
            momenta: g.legs().iter().map(|l| (l.id.clone(), (Momentum::zero(), l.dir))).collect(),
        }
    }

    /// Parses `{"f1": {"p": [1, 0, 0, 0], "dir": "in"}, …}`. Components may be
    /// integers or strings such as `"-3/2"`; `dir` defaults to the leg's own.
    pub fn from_json(g: &Graph, text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| Error::Parse("momenta must be a JSON object".into()))?;
        let mut m = BTreeMap::new();
        for (id, entry) in obj {
            let leg = g.leg_index(id).map_err(|e| Error::Parse(format!("field `{id}`: {e}")))?;
            let p = entry
                .get("p")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("field `{id}.p` must be an array of 4 numbers")))?;
            if p.len() != 4 {
                return Err(Error::Parse(format!("field `{id}.p` must have 4 components")));
            }
            let mut comps = Vec::with_capacity(4);
            for (i, c) in p.iter().enumerate() {
                comps.push(parse_rational(c).ok_or_else(|| {
                    Error::Parse(format!("field `{id}.p[{i}]` is not an integer or rational string"))
                })?);
            }
            let dir = match entry.get("dir") {
                None => g.legs()[leg].dir,
                Some(d) => serde_json::from_value(d.clone())
                    .map_err(|_| Error::Parse(format!("field `{id}.dir` must be \"in\" or \"out\"")))?,
            };
            m.insert(id.clone(), (Momentum(comps.try_into().expect("4 components")), dir));
        }
        Self::new(g, m)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        for (id, (p, d)) in &self.momenta {
            obj.insert(
                id.clone(),
                serde_json::json!({
                    "p": p.0.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "dir": d,
                }),
            );
        }
        Value::Object(obj)
    }

    /// sign·p for a leg, with sign +1 for ingoing.
    pub fn signed(&self, leg_id: &str) -> Momentum {
        let (p, d) = &self.momenta[leg_id];
        p.scaled(d.sign())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &(Momentum, LegDir))> {
        self.momenta.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.momenta.values().all(|(p, _)| p.is_zero())
    }
}

fn parse_rational(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_legs() -> Graph {
        Graph::builder()
            .vertex("v")
            .leg("f1", "v", LegDir::In)
            .leg("f2", "v", LegDir::Out)
            .build()
            .unwrap()
    }

    #[test]
    fn wedge_and_square() {
        let p = Momentum::from_ints([1, 2, 3, 4]);
        let q = Momentum::from_ints([0, 1, 0, 1]);
        assert_eq!(p.wedge(&q), Rational::from_integer(4.into()));
        assert!(p.wedge(&p).is_zero());
        assert_eq!(p.square(), Rational::from_integer(30.into()));
    }

    #[test]
    fn conservation() {
        let g = two_legs();
        let ok = r#"{"f1":{"p":[1,0,0,"1/2"],"dir":"in"},"f2":{"p":[1,0,0,"1/2"]}}"#;
        assert!(ExternalAssignment::from_json(&g, ok).is_ok());
        let bad = r#"{"f1":{"p":[1,0,0,0]},"f2":{"p":[2,0,0,0]}}"#;
        assert!(matches!(ExternalAssignment::from_json(&g, bad), Err(Error::MomentumNotConserved(_))));
        let missing = r#"{"f1":{"p":[0,0,0,0]}}"#;
        assert!(ExternalAssignment::from_json(&g, missing).is_err());
        let malformed = r#"{"f1":{"p":[0,0,0]},"f2":{"p":[0,0,0,0]}}"#;
        assert!(ExternalAssignment::from_json(&g, malformed).unwrap_err().to_string().contains("f1.p"));
    }
}
