use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::subset::{EdgeSubset, MAX_ENUM_EDGES};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LegDir {
    In,
    Out,
}

impl LegDir {
    /// `+1` for ingoing momenta, `-1` for outgoing ones.
    pub fn sign(self) -> i64 {
        match self {
            LegDir::In => 1,
            LegDir::Out => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// An external edge, attached to a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Leg {
    pub id: String,
    pub vertex: usize,
    pub dir: LegDir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Bridge,
    SelfLoop,
    Regular,
}

/// A finite multigraph with oriented internal edges and external legs.
///
/// Self-loops and parallel edges are allowed. Vertices, edges and legs are
/// addressed by index internally; ids are kept for input and output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    legs: Vec<Leg>,
}

/// A spanning forest with exactly two trees, with the vertices and external legs
/// on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTree {
    pub edges: EdgeSubset,
    pub vertices: [Vec<usize>; 2],
    pub legs: [Vec<usize>; 2],
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when the two were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[derive(Default)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
    legs: Vec<(String, String, LegDir)>,
}

impl GraphBuilder {
    pub fn vertex(mut self, id: &str) -> Self {
        self.vertices.push(id.to_string());
        self
    }

    pub fn vertices(mut self, ids: &[&str]) -> Self {
        self.vertices.extend(ids.iter().map(|s| s.to_string()));
        self
    }

    pub fn edge(mut self, id: &str, tail: &str, head: &str) -> Self {
        self.edges.push((id.into(), tail.into(), head.into()));
        self
    }

    pub fn leg(mut self, id: &str, vertex: &str, dir: LegDir) -> Self {
        self.legs.push((id.into(), vertex.into(), dir));
        self
    }

    pub fn build(self) -> Result<Graph> {
        let index: HashMap<&str, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let lookup = |v: &str| index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.into()));
        let mut edges = Vec::with_capacity(self.edges.len());
        for (id, t, h) in &self.edges {
            edges.push(Edge { id: id.clone(), tail: lookup(t)?, head: lookup(h)? });
        }
        let mut legs = Vec::with_capacity(self.legs.len());
        for (id, v, d) in &self.legs {
            legs.push(Leg { id: id.clone(), vertex: lookup(v)?, dir: *d });
        }
        Graph::new(self.vertices, edges, legs)
    }
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>, legs: Vec<Leg>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if v.is_empty() || !seen.insert(v.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate or empty vertex id '{v}'")));
            }
        }
        let mut ids = HashSet::new();
        for e in &edges {
            if e.id.is_empty() || !ids.insert(e.id.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate or empty edge id '{}'", e.id)));
            }
            if e.tail >= vertices.len() || e.head >= vertices.len() {
                return Err(Error::InvalidGraph(format!("edge '{}' has a dangling endpoint", e.id)));
            }
        }
        for l in &legs {
            if l.id.is_empty() || !ids.insert(l.id.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate or empty leg id '{}'", l.id)));
            }
            if l.vertex >= vertices.len() {
                return Err(Error::InvalidGraph(format!("leg '{}' has a dangling vertex", l.id)));
            }
        }
        Ok(Graph { vertices, edges, legs })
    }

    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    /// Edge indices sorted by id, with digit runs compared numerically
    /// (`e2` before `e10`).
    pub fn edges_by_id(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by(|&a, &b| natural_cmp(&self.edges[a].id, &self.edges[b].id));
        idx
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == id).ok_or_else(|| Error::UnknownVertex(id.into()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.edges.iter().position(|e| e.id == id).ok_or_else(|| Error::UnknownEdge(id.into()))
    }

    pub fn leg_index(&self, id: &str) -> Result<usize> {
        self.legs.iter().position(|l| l.id == id).ok_or_else(|| Error::UnknownLeg(id.into()))
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edges.len())
    }

    pub fn edge_ids(&self, a: EdgeSubset) -> Vec<&str> {
        a.iter().map(|i| self.edges[i].id.as_str()).collect()
    }

    pub fn subset_from_ids(&self, ids: &[&str]) -> Result<EdgeSubset> {
        let mut s = EdgeSubset::EMPTY;
        for id in ids {
            s.insert(self.edge_index(id)?);
        }
        Ok(s)
    }

    /// Number of half-edges at `v`, counting external legs and both ends of a loop.
    pub fn degree(&self, v: usize) -> usize {
        let internal: usize = self
            .edges
            .iter()
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum();
        internal + self.legs.iter().filter(|l| l.vertex == v).count()
    }

    pub(crate) fn check_enumerable(&self) -> Result<()> {
        if self.edges.len() > MAX_ENUM_EDGES {
            return Err(Error::TooManyEdges { edges: self.edges.len(), max: MAX_ENUM_EDGES });
        }
        Ok(())
    }

    /// Component index of every vertex in the spanning subgraph with edges `a`.
    /// Components are numbered by their lowest vertex.
    pub fn component_labels(&self, a: EdgeSubset) -> Vec<usize> {
        let mut dsu = Dsu::new(self.vertices.len());
        for i in a.iter() {
            dsu.union(self.edges[i].tail, self.edges[i].head);
        }
        let mut label = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        let mut root_label = HashMap::new();
        for v in 0..self.vertices.len() {
            let r = dsu.find(v);
            label[v] = *root_label.entry(r).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        label
    }

    /// k(A): connected components of the spanning subgraph (V, A).
    pub fn components(&self, a: EdgeSubset) -> usize {
        let mut dsu = Dsu::new(self.vertices.len());
        let merges = a.iter().filter(|&i| dsu.union(self.edges[i].tail, self.edges[i].head)).count();
        self.vertices.len() - merges
    }

    /// r(A) = |V| - k(A).
    pub fn rank(&self, a: EdgeSubset) -> usize {
        self.vertices.len() - self.components(a)
    }

    /// n(A) = |A| - r(A).
    pub fn nullity(&self, a: EdgeSubset) -> usize {
        a.len() - self.rank(a)
    }

    pub fn loop_number(&self) -> usize {
        self.nullity(self.all_edges())
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.components(self.all_edges()) == 1
    }

    pub fn classify_edge(&self, i: usize) -> EdgeKind {
        let e = &self.edges[i];
        if e.is_loop() {
            return EdgeKind::SelfLoop;
        }
        let mut rest = self.all_edges();
        rest.remove(i);
        if self.components(rest) > self.components(self.all_edges()) {
            EdgeKind::Bridge
        } else {
            EdgeKind::Regular
        }
    }

    pub fn classify_edge_id(&self, id: &str) -> Result<EdgeKind> {
        Ok(self.classify_edge(self.edge_index(id)?))
    }

    /// Γ − e.
    pub fn delete_edge_at(&self, i: usize) -> Graph {
        let mut g = self.clone();
        g.edges.remove(i);
        g
    }

    pub fn delete_edge(&self, id: &str) -> Result<Graph> {
        Ok(self.delete_edge_at(self.edge_index(id)?))
    }

    /// Γ / e. The head vertex is merged into the tail vertex, which keeps its id.
    /// Contracting a self-loop is the same as deleting it.
    pub fn contract_edge_at(&self, i: usize) -> Graph {
        let e = &self.edges[i];
        let (keep, gone) = (e.tail, e.head);
        let mut g = self.delete_edge_at(i);
        if keep != gone {
            g.merge_vertex_into(gone, keep);
        }
        g
    }

    pub fn contract_edge(&self, id: &str) -> Result<Graph> {
        Ok(self.contract_edge_at(self.edge_index(id)?))
    }

    /// Moves every half-edge of `gone` onto `keep` and removes `gone`.
    pub(crate) fn merge_vertex_into(&mut self, gone: usize, keep: usize) {
        let remap = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        for e in &mut self.edges {
            e.tail = remap(e.tail);
            e.head = remap(e.head);
        }
        for l in &mut self.legs {
            l.vertex = remap(l.vertex);
        }
        self.vertices.remove(gone);
    }

    fn forests_of_size(&self, size: usize) -> Vec<EdgeSubset> {
        fn rec(
            g: &Graph,
            start: usize,
            size: usize,
            chosen: EdgeSubset,
            out: &mut Vec<EdgeSubset>,
        ) {
            if chosen.len() == size {
                out.push(chosen);
                return;
            }
            let need = size - chosen.len();
            for i in start..g.edges.len() {
                if g.edges.len() - i < need {
                    break;
                }
                let mut next = chosen;
                next.insert(i);
                if g.nullity(next) == 0 {
                    rec(g, i + 1, size, next, out);
                }
            }
        }
        let mut out = Vec::new();
        rec(self, 0, size, EdgeSubset::EMPTY, &mut out);
        out
    }

    /// Edge sets of all spanning trees.
    pub fn spanning_trees(&self) -> Result<Vec<EdgeSubset>> {
        if !self.is_connected() || self.vertices.is_empty() {
            return Err(Error::Disconnected { op: "spanning_trees" });
        }
        self.check_enumerable()?;
        Ok(self.forests_of_size(self.vertices.len() - 1))
    }

    /// All spanning two-trees, each with its vertex partition and leg assignment.
    /// Side 0 is the component holding the lowest-index vertex.
    pub fn spanning_two_trees(&self) -> Result<Vec<TwoTree>> {
        if !self.is_connected() || self.vertices.is_empty() {
            return Err(Error::Disconnected { op: "spanning_two_trees" });
        }
        self.check_enumerable()?;
        if self.vertices.len() < 2 {
            return Ok(Vec::new());
        }
        Ok(self
            .forests_of_size(self.vertices.len() - 2)
            .into_iter()
            .map(|a| {
                let label = self.component_labels(a);
                let mut vertices = [Vec::new(), Vec::new()];
                for (v, &c) in label.iter().enumerate() {
                    vertices[c].push(v);
                }
                let mut legs = [Vec::new(), Vec::new()];
                for (i, l) in self.legs.iter().enumerate() {
                    legs[label[l.vertex]].push(i);
                }
                TwoTree { edges: a, vertices, legs }
            })
            .collect())
    }

    /// Rows are internal edges, columns vertices: +1 where the edge leaves the
    /// vertex, -1 where it enters, 0 otherwise (and on the row of a self-loop).
    pub fn incidence_matrix(&self) -> Vec<Vec<i64>> {
        self.edges
            .iter()
            .map(|e| {
                let mut row = vec![0; self.vertices.len()];
                if !e.is_loop() {
                    row[e.tail] = 1;
                    row[e.head] = -1;
                }
                row
            })
            .collect()
    }

    /// Connected and bridgeless.
    pub fn is_one_pi(&self) -> bool {
        self.is_connected()
            && !self.vertices.is_empty()
            && (0..self.edges.len()).all(|i| self.classify_edge(i) != EdgeKind::Bridge)
    }

    pub fn without_legs(&self) -> Graph {
        Graph { vertices: self.vertices.clone(), edges: self.edges.clone(), legs: Vec::new() }
    }

    /// Copy with the edges in `flip` reversed.
    pub fn reoriented(&self, flip: EdgeSubset) -> Graph {
        let mut g = self.clone();
        for i in flip.iter() {
            let e = &mut g.edges[i];
            std::mem::swap(&mut e.tail, &mut e.head);
        }
        g
    }

    /// Vertices touched by the edges of `a`, in host order.
    pub fn vertices_of(&self, a: EdgeSubset) -> Vec<usize> {
        let mut mark = vec![false; self.vertices.len()];
        for i in a.iter() {
            mark[self.edges[i].tail] = true;
            mark[self.edges[i].head] = true;
        }
        (0..self.vertices.len()).filter(|&v| mark[v]).collect()
    }

    /// Number of external legs of the subgraph spanned by `a`: host legs on its
    /// vertices plus every host half-edge at those vertices whose edge is not in `a`.
    pub fn subgraph_leg_count(&self, a: EdgeSubset) -> usize {
        let vs = self.vertices_of(a);
        let inner: usize = a.iter().map(|_| 2).sum();
        vs.iter().map(|&v| self.degree(v)).sum::<usize>() - inner
    }

    /// Whether the edges of `a` form a connected subgraph (on the vertices they touch).
    pub fn subset_is_connected(&self, a: EdgeSubset) -> bool {
        if a.is_empty() {
            return false;
        }
        let vs = self.vertices_of(a);
        self.components(a) - (self.vertices.len() - vs.len()) == 1
    }

    /// Whether no edge of `a` is a bridge of the subgraph spanned by `a`.
    pub fn subset_is_bridgeless(&self, a: EdgeSubset) -> bool {
        let k = self.components(a);
        a.iter().all(|i| {
            let mut b = a;
            b.remove(i);
            self.components(b) == k
        })
    }

    /// The subgraph spanned by `a` as a standalone graph. Host legs on its
    /// vertices are kept; every cut host half-edge becomes a leg named
    /// `<edge id>.t` or `<edge id>.h`.
    pub fn subgraph(&self, a: EdgeSubset) -> Graph {
        let vs = self.vertices_of(a);
        let mut new_index = vec![usize::MAX; self.vertices.len()];
        for (k, &v) in vs.iter().enumerate() {
            new_index[v] = k;
        }
        let vertices = vs.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = a
            .iter()
            .map(|i| {
                let e = &self.edges[i];
                Edge { id: e.id.clone(), tail: new_index[e.tail], head: new_index[e.head] }
            })
            .collect();
        let mut legs = Vec::new();
        for &v in &vs {
            for l in self.legs.iter().filter(|l| l.vertex == v) {
                legs.push(Leg { id: l.id.clone(), vertex: new_index[v], dir: l.dir });
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if a.contains(i) {
                continue;
            }
            if new_index[e.tail] != usize::MAX {
                legs.push(Leg { id: format!("{}.t", e.id), vertex: new_index[e.tail], dir: LegDir::Out });
            }
            if new_index[e.head] != usize::MAX {
                legs.push(Leg { id: format!("{}.h", e.id), vertex: new_index[e.head], dir: LegDir::In });
            }
        }
        Graph { vertices, edges, legs }
    }

    /// Shrinks the subgraph spanned by `a` to a single vertex. The merged vertex
    /// keeps the id of the first vertex of `a`; host edges of `a` disappear and
    /// other edges between its vertices become self-loops.
    pub fn shrink(&self, a: EdgeSubset) -> Graph {
        let vs = self.vertices_of(a);
        let mut g = self.clone();
        g.edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !a.contains(*i))
            .map(|(_, e)| e.clone())
            .collect();
        if let Some((&keep, rest)) = vs.split_first() {
            // remove from the highest index down so earlier indices stay valid
            for &v in rest.iter().rev() {
                g.merge_vertex_into(v, keep);
            }
        }
        g
    }
}

/// Compares strings chunkwise, reading runs of ASCII digits as numbers.
pub fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(cb.iter()) {
        let o = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}; E=[", self.vertices)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}->{}", e.id, self.vertices[e.tail], self.vertices[e.head])?;
        }
        f.write_str("]; L=[")?;
        for (i, l) in self.legs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}@{}", l.id, self.vertices[l.vertex])?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::builder()
            .vertices(&["v1", "v2", "v3"])
            .edge("e1", "v1", "v2")
            .edge("e2", "v2", "v3")
            .edge("e3", "v3", "v1")
            .build()
            .unwrap()
    }

    fn bridge() -> Graph {
        Graph::builder().vertices(&["v1", "v2"]).edge("e1", "v1", "v2").build().unwrap()
    }

    fn tadpole() -> Graph {
        Graph::builder().vertex("v1").edge("e1", "v1", "v1").build().unwrap()
    }

    #[test]
    fn counts() {
        let g = triangle();
        assert_eq!(g.components(EdgeSubset::EMPTY), 3);
        assert_eq!(g.rank(EdgeSubset::EMPTY), 0);
        assert_eq!(g.rank(EdgeSubset::from_indices([0, 1])), 2);
        assert_eq!(g.nullity(g.all_edges()), 1);
        assert_eq!(tadpole().nullity(tadpole().all_edges()), 1);
        let single = Graph::builder().vertex("v").build().unwrap();
        assert_eq!(single.components(EdgeSubset::EMPTY), 1);
    }

    #[test]
    fn edge_kinds() {
        assert_eq!(bridge().classify_edge(0), EdgeKind::Bridge);
        assert_eq!(tadpole().classify_edge(0), EdgeKind::SelfLoop);
        let t = triangle();
        assert!((0..3).all(|i| t.classify_edge(i) == EdgeKind::Regular));
    }

    #[test]
    fn delete_and_contract() {
        let c = bridge().contract_edge("e1").unwrap();
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.num_edges(), 0);

        let path = triangle().delete_edge("e3").unwrap();
        assert_eq!(path.num_edges(), 2);
        assert!(path.is_connected());
        assert_eq!(path.classify_edge(0), EdgeKind::Bridge);

        assert_eq!(tadpole().contract_edge("e1").unwrap(), tadpole().delete_edge("e1").unwrap());
        assert!(matches!(triangle().delete_edge("zz"), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn contraction_moves_legs() {
        let g = Graph::builder()
            .vertices(&["v1", "v2", "v3"])
            .edge("e1", "v1", "v2")
            .edge("e2", "v2", "v3")
            .leg("f1", "v2", LegDir::In)
            .leg("f2", "v3", LegDir::Out)
            .build()
            .unwrap();
        let c = g.contract_edge("e1").unwrap();
        assert_eq!(c.vertices(), ["v1", "v3"]);
        assert_eq!(c.legs()[0].vertex, 0);
        assert_eq!(c.legs()[1].vertex, 1);
        assert_eq!(c.edges()[0].tail, 0);
    }

    #[test]
    fn trees_and_two_trees() {
        assert_eq!(triangle().spanning_trees().unwrap().len(), 3);
        let single = Graph::builder().vertex("v").build().unwrap();
        assert_eq!(single.spanning_trees().unwrap(), vec![EdgeSubset::EMPTY]);
        assert_eq!(triangle().spanning_two_trees().unwrap().len(), 3);

        let tt = bridge().spanning_two_trees().unwrap();
        assert_eq!(tt.len(), 1);
        assert_eq!(tt[0].edges, EdgeSubset::EMPTY);
        assert_eq!(tt[0].vertices, [vec![0], vec![1]]);

        let two = Graph::builder().vertices(&["a", "b"]).build().unwrap();
        assert!(matches!(two.spanning_trees(), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn natural_order() {
        use std::cmp::Ordering::*;
        assert_eq!(natural_cmp("e2", "e10"), Less);
        assert_eq!(natural_cmp("e10", "e9"), Greater);
        assert_eq!(natural_cmp("a", "b"), Less);
        assert_eq!(natural_cmp("e1", "e1"), Equal);
    }

    #[test]
    fn incidence() {
        assert_eq!(bridge().incidence_matrix(), vec![vec![1, -1]]);
        assert_eq!(tadpole().incidence_matrix(), vec![vec![0]]);
    }

    #[test]
    fn one_pi() {
        assert!(!bridge().is_one_pi());
        assert!(triangle().is_one_pi());
        let two = Graph::builder().vertices(&["a", "b"]).build().unwrap();
        assert!(!two.is_one_pi());
    }

    #[test]
    fn subgraph_extraction() {
        let t = triangle();
        let s = t.subgraph(EdgeSubset::from_indices([0]));
        assert_eq!(s.num_vertices(), 2);
        assert_eq!(s.num_legs(), 2);
        assert_eq!(t.subgraph_leg_count(EdgeSubset::from_indices([0])), 2);
        let shrunk = t.shrink(EdgeSubset::from_indices([0]));
        assert_eq!(shrunk.num_vertices(), 2);
        assert_eq!(shrunk.num_edges(), 2);
    }
}
