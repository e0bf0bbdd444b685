use std::collections::BTreeMap;
use std::fmt;

use super::graph::Graph;
use super::ribbon::{Dart, RibbonGraph};

/// Isomorphism-class key of a [`Graph`]. Vertex, edge and leg ids, edge
/// orientation and leg direction are forgotten; legs count per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphLabel(Vec<u32>);

/// Isomorphism-class key of a [`RibbonGraph`], respecting the rotation system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonLabel(Vec<u32>);

impl GraphLabel {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl RibbonLabel {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

fn hex(f: &mut fmt::Formatter<'_>, tag: &str, v: &[u32]) -> fmt::Result {
    f.write_str(tag)?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(".")?;
        }
        write!(f, "{x:x}")?;
    }
    Ok(())
}

impl fmt::Display for GraphLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        hex(f, "G", &self.0)
    }
}

impl fmt::Debug for GraphLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RibbonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        hex(f, "R", &self.0)
    }
}

impl fmt::Debug for RibbonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Shape {
    n: usize,
    legs: Vec<u32>,
    /// adjacency multiplicities; the diagonal counts self-loops
    adj: Vec<Vec<u32>>,
}

impl Shape {
    fn of(g: &Graph) -> Shape {
        let n = g.num_vertices();
        let mut legs = vec![0; n];
        for l in g.legs() {
            legs[l.vertex] += 1;
        }
        let mut adj = vec![vec![0; n]; n];
        for e in g.edges() {
            adj[e.tail][e.head] += 1;
            if e.tail != e.head {
                adj[e.head][e.tail] += 1;
            }
        }
        Shape { n, legs, adj }
    }

    /// Replaces every colour by its rank among the distinct signatures.
    fn rerank<K: Ord + Clone>(sig: &[K]) -> Vec<u32> {
        let mut distinct: Vec<K> = sig.to_vec();
        distinct.sort();
        distinct.dedup();
        sig.iter().map(|s| distinct.binary_search(s).unwrap() as u32).collect()
    }

    fn refine(&self, mut colour: Vec<u32>) -> Vec<u32> {
        loop {
            let sig: Vec<(u32, Vec<(u32, u32)>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<(u32, u32)> = (0..self.n)
                        .filter(|&w| w != v && self.adj[v][w] > 0)
                        .map(|w| (colour[w], self.adj[v][w]))
                        .collect();
                    nb.sort();
                    (colour[v], nb)
                })
                .collect();
            let next = Self::rerank(&sig);
            let classes = |c: &[u32]| c.iter().max().map_or(0, |m| m + 1);
            if classes(&next) == classes(&colour) {
                return next;
            }
            colour = next;
        }
    }

    fn encode(&self, colour: &[u32]) -> Vec<u32> {
        // colour is a discrete partition: colour[v] is the position of v
        let mut at = vec![0; self.n];
        for v in 0..self.n {
            at[colour[v] as usize] = v;
        }
        let mut out = Vec::with_capacity(1 + self.n + self.n * self.n);
        out.push(self.n as u32);
        out.extend(at.iter().map(|&v| self.legs[v]));
        for i in 0..self.n {
            for j in i..self.n {
                out.push(self.adj[at[i]][at[j]]);
            }
        }
        out
    }

    fn search(&self, colour: Vec<u32>, best: &mut Option<Vec<u32>>) {
        let colour = self.refine(colour);
        let mut count = BTreeMap::new();
        for &c in &colour {
            *count.entry(c).or_insert(0) += 1;
        }
        let Some((&cell, _)) = count.iter().find(|(_, &k)| k > 1) else {
            let code = self.encode(&colour);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        };
        for v in (0..self.n).filter(|&v| colour[v] == cell) {
            let sig: Vec<(u32, bool)> =
                (0..self.n).map(|w| (colour[w], !(w == v))).collect();
            self.search(Self::rerank(&sig), best);
        }
    }
}

impl Graph {
    /// Equal labels iff the graphs are isomorphic as graphs with external legs.
    pub fn canonical_form(&self) -> GraphLabel {
        let s = Shape::of(self);
        if s.n == 0 {
            return GraphLabel(vec![0]);
        }
        let init: Vec<(u32, u32, u32)> = (0..s.n)
            .map(|v| {
                let deg: u32 = s.adj[v].iter().sum();
                (s.legs[v], s.adj[v][v], deg)
            })
            .collect();
        let mut best = None;
        s.search(Shape::rerank(&init), &mut best);
        GraphLabel(best.expect("search reaches a leaf"))
    }
}

const LEG_MARK: u32 = u32::MAX;

impl RibbonGraph {
    /// Equal labels iff the ribbon graphs are isomorphic by a bijection that
    /// preserves every rotation. Edge orientation and leg ids are forgotten.
    pub fn canonical_form(&self) -> RibbonLabel {
        let ne = self.num_edges();
        let nl = self.graph().num_legs();
        let n = 2 * ne + nl;
        let idx = |d: Dart| match d {
            Dart::Tail(e) => 2 * e,
            Dart::Head(e) => 2 * e + 1,
            Dart::Leg(l) => 2 * ne + l,
        };
        let mut sigma = vec![0usize; n];
        let mut bare = 0u32;
        for rot in self.rotation() {
            if rot.is_empty() {
                bare += 1;
            }
            for (i, &d) in rot.iter().enumerate() {
                sigma[idx(d)] = idx(rot[(i + 1) % rot.len()]);
            }
        }
        let alpha = |d: usize| if d < 2 * ne { d ^ 1 } else { d };

        let code_from = |start: usize| -> (Vec<u32>, Vec<bool>) {
            let mut label = vec![u32::MAX; n];
            let mut order = vec![start];
            label[start] = 0;
            let mut code = Vec::new();
            let mut i = 0;
            while i < order.len() {
                let d = order[i];
                for nb in [alpha(d), sigma[d]] {
                    if label[nb] == u32::MAX {
                        label[nb] = order.len() as u32;
                        order.push(nb);
                    }
                }
                code.push(if alpha(d) == d { LEG_MARK } else { label[alpha(d)] });
                code.push(label[sigma[d]]);
                i += 1;
            }
            let reached = label.iter().map(|&l| l != u32::MAX).collect();
            (code, reached)
        };

        let mut done = vec![false; n];
        let mut components: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            let (_, reached) = code_from(start);
            let members: Vec<usize> = (0..n).filter(|&d| reached[d]).collect();
            for &d in &members {
                done[d] = true;
            }
            let best = members.iter().map(|&d| code_from(d).0).min().expect("nonempty component");
            components.push(best);
        }
        components.sort();
        let mut out = vec![bare, components.len() as u32];
        for c in components {
            out.push(c.len() as u32);
            out.extend(c);
        }
        RibbonLabel(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::LegDir;

    fn k3(order: [&str; 3]) -> Graph {
        Graph::builder()
            .vertices(&order)
            .edge("e1", "a", "b")
            .edge("e2", "b", "c")
            .edge("e3", "c", "a")
            .build()
            .unwrap()
    }

    #[test]
    fn relabelled_triangles_agree() {
        assert_eq!(k3(["a", "b", "c"]).canonical_form(), k3(["c", "a", "b"]).canonical_form());
        let path = Graph::builder()
            .vertices(&["a", "b", "c"])
            .edge("e1", "a", "b")
            .edge("e2", "b", "c")
            .build()
            .unwrap();
        assert_ne!(k3(["a", "b", "c"]).canonical_form(), path.canonical_form());
    }

    #[test]
    fn legs_distinguish() {
        let a = Graph::builder()
            .vertices(&["a", "b"])
            .edge("e1", "a", "b")
            .leg("f", "a", LegDir::In)
            .build()
            .unwrap();
        let b = Graph::builder()
            .vertices(&["a", "b"])
            .edge("e1", "b", "a")
            .leg("g", "b", LegDir::Out)
            .build()
            .unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), a.without_legs().canonical_form());
    }

    #[test]
    fn ribbon_labels_see_rotation() {
        let g = Graph::builder()
            .vertex("v")
            .edge("e1", "v", "v")
            .edge("e2", "v", "v")
            .build()
            .unwrap();
        let planar = RibbonGraph::new(
            g.clone(),
            vec![vec![Dart::Tail(0), Dart::Head(0), Dart::Tail(1), Dart::Head(1)]],
        )
        .unwrap();
        let planar2 = RibbonGraph::new(
            g.clone(),
            vec![vec![Dart::Head(1), Dart::Tail(1), Dart::Tail(0), Dart::Head(0)]],
        )
        .unwrap();
        let inter = RibbonGraph::new(
            g,
            vec![vec![Dart::Tail(0), Dart::Tail(1), Dart::Head(0), Dart::Head(1)]],
        )
        .unwrap();
        assert_eq!(planar.canonical_form(), planar2.canonical_form());
        assert_ne!(planar.canonical_form(), inter.canonical_form());
    }
}
