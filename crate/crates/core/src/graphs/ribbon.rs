use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::graph::{Graph, LegDir};
use super::subset::EdgeSubset;
use crate::error::{Error, Result};

/// A half-edge: one end of an internal edge, or an external leg.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Dart {
    Tail(usize),
    Head(usize),
    Leg(usize),
}

impl Dart {
    /// The other half of the same edge; legs are their own partner.
    pub fn partner(self) -> Dart {
        match self {
            Dart::Tail(e) => Dart::Head(e),
            Dart::Head(e) => Dart::Tail(e),
            Dart::Leg(l) => Dart::Leg(l),
        }
    }

    pub fn edge(self) -> Option<usize> {
        match self {
            Dart::Tail(e) | Dart::Head(e) => Some(e),
            Dart::Leg(_) => None,
        }
    }

    pub fn leg(self) -> Option<usize> {
        match self {
            Dart::Leg(l) => Some(l),
            _ => None,
        }
    }

    fn index(self, num_edges: usize) -> usize {
        match self {
            Dart::Tail(e) => 2 * e,
            Dart::Head(e) => 2 * e + 1,
            Dart::Leg(l) => 2 * num_edges + l,
        }
    }

    fn from_index(i: usize, num_edges: usize) -> Dart {
        if i >= 2 * num_edges {
            Dart::Leg(i - 2 * num_edges)
        } else if i.is_multiple_of(2) {
            Dart::Tail(i / 2)
        } else {
            Dart::Head(i / 2)
        }
    }

    /// Renumbers the dart after internal edge `removed` has been dropped.
    fn shift_after_removal(self, removed: usize) -> Dart {
        let f = |e: usize| if e > removed { e - 1 } else { e };
        match self {
            Dart::Tail(e) => Dart::Tail(f(e)),
            Dart::Head(e) => Dart::Head(f(e)),
            leg => leg,
        }
    }
}

/// One boundary component, as the cyclic sequence of darts it runs along.
/// A vertex without any darts is a face with an empty sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face(pub Vec<Dart>);

impl Face {
    pub fn legs(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().filter_map(|d| d.leg())
    }

    pub fn is_broken(&self) -> bool {
        self.legs().next().is_some()
    }
}

/// A sub-ribbon graph with exactly two faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoQuasiTree {
    pub edges: EdgeSubset,
    pub faces: [Face; 2],
}

/// A graph with a cyclic order of the darts around every vertex.
///
/// Faces are the cycles of `d ↦ σ(α(d))`, where `α` swaps the two halves of an
/// edge (and fixes legs) and `σ` moves to the next dart around the vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    graph: Graph,
    rotation: Vec<Vec<Dart>>,
}

impl RibbonGraph {
    pub fn new(graph: Graph, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        if rotation.len() != graph.num_vertices() {
            return Err(Error::InvalidGraph(format!(
                "rotation lists {} vertices, graph has {}",
                rotation.len(),
                graph.num_vertices()
            )));
        }
        let n = 2 * graph.num_edges() + graph.num_legs();
        let mut seen = vec![false; n];
        for (v, rot) in rotation.iter().enumerate() {
            for &d in rot {
                let home = match d {
                    Dart::Tail(e) if e < graph.num_edges() => graph.edge(e).tail,
                    Dart::Head(e) if e < graph.num_edges() => graph.edge(e).head,
                    Dart::Leg(l) if l < graph.num_legs() => graph.legs()[l].vertex,
                    _ => return Err(Error::InvalidGraph(format!("rotation names unknown dart {d:?}"))),
                };
                if home != v {
                    return Err(Error::InvalidGraph(format!(
                        "dart {} listed at vertex '{}' but attached to '{}'",
                        dart_name(&graph, d),
                        graph.vertices()[v],
                        graph.vertices()[home]
                    )));
                }
                let i = d.index(graph.num_edges());
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidGraph(format!(
                        "dart {} appears twice in the rotation",
                        dart_name(&graph, d)
                    )));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            let d = Dart::from_index(i, graph.num_edges());
            return Err(Error::InvalidGraph(format!(
                "dart {} is missing from the rotation",
                dart_name(&graph, d)
            )));
        }
        Ok(RibbonGraph { graph, rotation })
    }

    /// Builds the rotation from dart names (`<edge>.t`, `<edge>.h` or a leg id).
    pub fn from_names(graph: Graph, rotation: &BTreeMap<String, Vec<String>>) -> Result<Self> {
        let mut rot = vec![Vec::new(); graph.num_vertices()];
        for (vid, names) in rotation {
            let v = graph.vertex_index(vid)?;
            for name in names {
                rot[v].push(parse_dart(&graph, name)?);
            }
        }
        RibbonGraph::new(graph, rot)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    pub fn dart_name(&self, d: Dart) -> String {
        dart_name(&self.graph, d)
    }

    /// Faces of the spanning sub-ribbon graph with internal edges `h`.
    /// Every leg stays; darts of edges outside `h` are dropped from the rotation.
    pub fn faces_of(&self, h: EdgeSubset) -> Vec<Face> {
        let ne = self.graph.num_edges();
        let n = 2 * ne + self.graph.num_legs();
        let keep = |d: &Dart| d.edge().is_none_or(|e| h.contains(e));
        let mut next = vec![usize::MAX; n];
        let mut bare = 0;
        for rot in &self.rotation {
            let kept: Vec<usize> = rot.iter().filter(|d| keep(d)).map(|d| d.index(ne)).collect();
            if kept.is_empty() {
                bare += 1;
            }
            for (i, &d) in kept.iter().enumerate() {
                next[d] = kept[(i + 1) % kept.len()];
            }
        }
        let partner = |i: usize| Dart::from_index(i, ne).partner().index(ne);
        let mut visited = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if visited[start] || next[start] == usize::MAX {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !visited[d] {
                visited[d] = true;
                cycle.push(Dart::from_index(d, ne));
                d = next[partner(d)];
            }
            faces.push(Face(cycle));
        }
        faces.extend((0..bare).map(|_| Face(Vec::new())));
        faces
    }

    pub fn num_faces_of(&self, h: EdgeSubset) -> usize {
        self.faces_of(h).len()
    }

    pub fn faces(&self) -> Vec<Face> {
        self.faces_of(self.graph.all_edges())
    }

    /// k(H) − F(H) + n(H), which is twice the summed genus of the components of H.
    pub fn twice_genus_of(&self, h: EdgeSubset) -> usize {
        let k = self.graph.components(h);
        let f = self.num_faces_of(h);
        let n = self.graph.nullity(h);
        debug_assert!(k + n >= f && (k + n - f).is_multiple_of(2));
        k + n - f
    }

    /// Sum of the genera of the connected components.
    pub fn genus(&self) -> usize {
        self.twice_genus_of(self.graph.all_edges()) / 2
    }

    pub fn broken_faces(&self) -> usize {
        self.faces().iter().filter(|f| f.is_broken()).count()
    }

    pub fn is_planar_regular(&self) -> bool {
        self.genus() == 0 && self.broken_faces() == 1
    }

    pub fn delete_edge_at(&self, i: usize) -> RibbonGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|d| d.edge() != Some(i))
                    .map(|d| d.shift_after_removal(i))
                    .collect()
            })
            .collect();
        RibbonGraph { graph: self.graph.delete_edge_at(i), rotation }
    }

    pub fn delete_edge(&self, id: &str) -> Result<RibbonGraph> {
        Ok(self.delete_edge_at(self.graph.edge_index(id)?))
    }

    /// Contracts a non-loop edge. The head's rotation, read from just after the
    /// head dart, is spliced into the tail's rotation in place of the tail dart.
    pub fn contract_edge_at(&self, i: usize) -> Result<RibbonGraph> {
        let e = self.graph.edge(i);
        if e.is_loop() {
            return Err(Error::SelfLoopContraction(e.id.clone()));
        }
        let (u, v) = (e.tail, e.head);
        let vrot = &self.rotation[v];
        let hp = vrot.iter().position(|&d| d == Dart::Head(i)).expect("head dart in rotation");
        let spliced: Vec<Dart> = (1..vrot.len()).map(|k| vrot[(hp + k) % vrot.len()]).collect();
        let mut urot = Vec::with_capacity(self.rotation[u].len() + spliced.len());
        for &d in &self.rotation[u] {
            if d == Dart::Tail(i) {
                urot.extend_from_slice(&spliced);
            } else {
                urot.push(d);
            }
        }
        let mut rotation = self.rotation.clone();
        rotation[u] = urot;
        rotation.remove(v);
        for rot in &mut rotation {
            for d in rot.iter_mut() {
                *d = d.shift_after_removal(i);
            }
        }
        Ok(RibbonGraph { graph: self.graph.contract_edge_at(i), rotation })
    }

    pub fn contract_edge(&self, id: &str) -> Result<RibbonGraph> {
        self.contract_edge_at(self.graph.edge_index(id)?)
    }

    /// Spanning connected sub-ribbon graphs with a single face.
    pub fn quasi_trees(&self) -> Result<Vec<EdgeSubset>> {
        self.require_connected("quasi_trees")?;
        self.graph.check_enumerable()?;
        Ok(EdgeSubset::all(self.num_edges())
            .filter(|&h| self.graph.components(h) == 1 && self.num_faces_of(h) == 1)
            .collect())
    }

    /// Spanning sub-ribbon graphs with exactly two faces. Such a subgraph has
    /// at most two components; with two, each component has a single face.
    pub fn two_quasi_trees(&self) -> Result<Vec<TwoQuasiTree>> {
        self.require_connected("two_quasi_trees")?;
        self.graph.check_enumerable()?;
        Ok(EdgeSubset::all(self.num_edges())
            .filter_map(|h| {
                let faces = self.faces_of(h);
                let [a, b]: [Face; 2] = faces.try_into().ok()?;
                Some(TwoQuasiTree { edges: h, faces: [a, b] })
            })
            .collect())
    }

    /// The legs on `face` in boundary order, starting from the leg with the
    /// smallest id, each with `+1` for ingoing and `-1` for outgoing.
    pub fn face_boundary_order(&self, face: &Face) -> Vec<(usize, i64)> {
        let legs: Vec<usize> = face.legs().collect();
        let Some(start) = (0..legs.len()).min_by(|&a, &b| {
            self.graph.legs()[legs[a]].id.cmp(&self.graph.legs()[legs[b]].id)
        }) else {
            return Vec::new();
        };
        (0..legs.len())
            .map(|k| {
                let l = legs[(start + k) % legs.len()];
                (l, self.graph.legs()[l].dir.sign())
            })
            .collect()
    }

    fn require_connected(&self, op: &'static str) -> Result<()> {
        if self.graph.num_vertices() == 0 || !self.graph.is_connected() {
            return Err(Error::Disconnected { op });
        }
        Ok(())
    }

    /// The sub-ribbon graph spanned by `a`; cut half-edges become legs in place,
    /// named as in [`Graph::subgraph`].
    pub fn subgraph(&self, a: EdgeSubset) -> RibbonGraph {
        let sub = self.graph.subgraph(a);
        let vs = self.graph.vertices_of(a);
        let new_edge: HashMap<usize, usize> = a.iter().enumerate().map(|(k, i)| (i, k)).collect();
        let leg_at = |name: String| sub.leg_index(&name).expect("subgraph leg");
        let rotation = vs
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .map(|&d| match d {
                        Dart::Tail(i) if a.contains(i) => Dart::Tail(new_edge[&i]),
                        Dart::Head(i) if a.contains(i) => Dart::Head(new_edge[&i]),
                        Dart::Tail(i) => Dart::Leg(leg_at(format!("{}.t", self.graph.edge(i).id))),
                        Dart::Head(i) => Dart::Leg(leg_at(format!("{}.h", self.graph.edge(i).id))),
                        Dart::Leg(l) => Dart::Leg(leg_at(self.graph.legs()[l].id.clone())),
                    })
                    .collect()
            })
            .collect();
        RibbonGraph { graph: sub, rotation }
    }

    /// Shrinks the subgraph spanned by `a` to one vertex. The new vertex's rotation
    /// lists the subgraph's legs in the order its boundary visits them, broken
    /// faces taken in face order. For a planar regular subgraph this is the
    /// cyclic order along its single broken face.
    pub fn shrink(&self, a: EdgeSubset) -> RibbonGraph {
        let vs = self.graph.vertices_of(a);
        let Some(&keep) = vs.first() else {
            return self.clone();
        };
        let sub = self.subgraph(a);
        let to_host = |l: usize| -> Dart {
            let id = &sub.graph.legs()[l].id;
            if let Some(host) = self.graph.legs().iter().position(|h| &h.id == id) {
                return Dart::Leg(host);
            }
            let (eid, end) = id.rsplit_once('.').expect("cut half-edge name");
            let e = self.graph.edge_index(eid).expect("cut edge in host");
            if end == "t" {
                Dart::Tail(e)
            } else {
                Dart::Head(e)
            }
        };
        let order: Vec<Dart> =
            sub.faces().iter().flat_map(|f| f.legs().collect::<Vec<_>>()).map(to_host).collect();
        let removed: Vec<usize> = a.iter().collect();
        let renumber = |d: Dart| -> Dart {
            let f = |e: usize| e - removed.iter().filter(|&&r| r < e).count();
            match d {
                Dart::Tail(e) => Dart::Tail(f(e)),
                Dart::Head(e) => Dart::Head(f(e)),
                leg => leg,
            }
        };
        let mut rotation: Vec<Vec<Dart>> = Vec::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            if v == keep {
                rotation.push(order.iter().map(|&d| renumber(d)).collect());
            } else if !vs.contains(&v) {
                rotation.push(rot.iter().map(|&d| renumber(d)).collect());
            }
        }
        RibbonGraph { graph: self.graph.shrink(a), rotation }
    }

    /// Rotation as dart names per vertex id.
    pub fn rotation_names(&self) -> BTreeMap<String, Vec<String>> {
        self.rotation
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                (self.graph.vertices()[v].clone(), rot.iter().map(|&d| self.dart_name(d)).collect())
            })
            .collect()
    }

    pub fn leg_dir(&self, l: usize) -> LegDir {
        self.graph.legs()[l].dir
    }
}

fn dart_name(g: &Graph, d: Dart) -> String {
    match d {
        Dart::Tail(e) => format!("{}.t", g.edge(e).id),
        Dart::Head(e) => format!("{}.h", g.edge(e).id),
        Dart::Leg(l) => g.legs()[l].id.clone(),
    }
}

fn parse_dart(g: &Graph, name: &str) -> Result<Dart> {
    if let Ok(l) = g.leg_index(name) {
        return Ok(Dart::Leg(l));
    }
    if let Some((eid, end)) = name.rsplit_once('.') {
        if let Ok(e) = g.edge_index(eid) {
            match end {
                "t" => return Ok(Dart::Tail(e)),
                "h" => return Ok(Dart::Head(e)),
                _ => {}
            }
        }
    }
    Err(Error::InvalidGraph(format!("rotation names unknown half-edge '{name}'")))
}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ribbon({:?}; rot={:?})", self.graph, self.rotation_names())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_vertex(loops: usize, rot: &[&str], legs: &[&str]) -> RibbonGraph {
        let mut b = Graph::builder().vertex("v1");
        for i in 1..=loops {
            b = b.edge(&format!("e{i}"), "v1", "v1");
        }
        for (k, l) in legs.iter().enumerate() {
            b = b.leg(l, "v1", if k % 2 == 0 { LegDir::In } else { LegDir::Out });
        }
        let mut r = BTreeMap::new();
        r.insert("v1".to_string(), rot.iter().map(|s| s.to_string()).collect());
        RibbonGraph::from_names(b.build().unwrap(), &r).unwrap()
    }

    fn bridge() -> RibbonGraph {
        let g = Graph::builder().vertices(&["v1", "v2"]).edge("e1", "v1", "v2").build().unwrap();
        RibbonGraph::new(g, vec![vec![Dart::Tail(0)], vec![Dart::Head(0)]]).unwrap()
    }

    #[test]
    fn face_counts() {
        let planar = one_vertex(1, &["e1.t", "e1.h"], &[]);
        assert_eq!(planar.faces().len(), 2);
        assert_eq!(planar.genus(), 0);
        let inter = one_vertex(2, &["e1.t", "e2.t", "e1.h", "e2.h"], &[]);
        assert_eq!(inter.faces().len(), 1);
        assert_eq!(inter.genus(), 1);
        assert!(!inter.is_planar_regular());
        let lone = one_vertex(0, &[], &[]);
        assert_eq!(lone.faces(), vec![Face(vec![])]);
    }

    #[test]
    fn broken_faces_of_legged_loop() {
        let g = one_vertex(1, &["e1.t", "f1", "e1.h", "f2"], &["f1", "f2"]);
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.broken_faces(), 2);
        assert!(!g.is_planar_regular());
        let one_leg = one_vertex(0, &["f1"], &["f1"]);
        assert_eq!(one_leg.broken_faces(), 1);
        assert!(one_leg.is_planar_regular());
    }

    #[test]
    fn rotation_validation() {
        let g = Graph::builder().vertex("v1").edge("e1", "v1", "v1").build().unwrap();
        assert!(RibbonGraph::new(g.clone(), vec![vec![Dart::Tail(0)]]).is_err());
        assert!(RibbonGraph::new(g.clone(), vec![vec![Dart::Tail(0), Dart::Tail(0)]]).is_err());
        assert!(RibbonGraph::new(g, vec![vec![Dart::Tail(0), Dart::Head(0)]]).is_ok());
    }

    #[test]
    fn contract_bridge_splices() {
        let g = Graph::builder()
            .vertices(&["v1", "v2"])
            .edge("e1", "v1", "v2")
            .leg("f1", "v1", LegDir::In)
            .leg("f2", "v2", LegDir::In)
            .leg("f3", "v2", LegDir::Out)
            .build()
            .unwrap();
        let r = RibbonGraph::new(
            g,
            vec![vec![Dart::Tail(0), Dart::Leg(0)], vec![Dart::Leg(1), Dart::Head(0), Dart::Leg(2)]],
        )
        .unwrap();
        let c = r.contract_edge("e1").unwrap();
        assert_eq!(c.rotation(), [vec![Dart::Leg(2), Dart::Leg(1), Dart::Leg(0)]]);
        assert!(matches!(
            one_vertex(1, &["e1.t", "e1.h"], &[]).contract_edge("e1"),
            Err(Error::SelfLoopContraction(_))
        ));
    }

    #[test]
    fn delete_loop_leaves_legs() {
        let g = one_vertex(1, &["e1.t", "f1", "e1.h", "f2"], &["f1", "f2"]);
        let d = g.delete_edge("e1").unwrap();
        assert_eq!(d.num_edges(), 0);
        assert_eq!(d.rotation(), [vec![Dart::Leg(0), Dart::Leg(1)]]);
    }

    #[test]
    fn quasi_tree_lists() {
        let planar = one_vertex(1, &["e1.t", "e1.h"], &[]);
        assert_eq!(planar.quasi_trees().unwrap(), vec![EdgeSubset::EMPTY]);
        let inter = one_vertex(2, &["e1.t", "e2.t", "e1.h", "e2.h"], &[]);
        assert_eq!(
            inter.quasi_trees().unwrap(),
            vec![EdgeSubset::EMPTY, EdgeSubset::from_indices([0, 1])]
        );
        assert_eq!(bridge().quasi_trees().unwrap(), vec![EdgeSubset::from_indices([0])]);

        let two: Vec<_> = planar.two_quasi_trees().unwrap().into_iter().map(|t| t.edges).collect();
        assert_eq!(two, vec![EdgeSubset::from_indices([0])]);
        // the empty subgraph of a bridge has two one-face components
        let two: Vec<_> = bridge().two_quasi_trees().unwrap().into_iter().map(|t| t.edges).collect();
        assert_eq!(two, vec![EdgeSubset::EMPTY]);
    }

    #[test]
    fn boundary_order_starts_at_smallest_leg() {
        let g = one_vertex(0, &["f3", "f1", "f2"], &["f1", "f2", "f3"]);
        let face = &g.faces()[0];
        let ids: Vec<&str> =
            g.face_boundary_order(face).iter().map(|&(l, _)| g.graph().legs()[l].id.as_str()).collect();
        assert_eq!(ids, ["f1", "f2", "f3"]);
    }

    #[test]
    fn shrink_uses_face_order() {
        // one vertex carrying a planar loop with legs on the outer face only
        let g = one_vertex(1, &["e1.t", "e1.h", "f1", "f2"], &["f1", "f2"]);
        let s = g.shrink(EdgeSubset::from_indices([0]));
        assert_eq!(s.num_edges(), 0);
        assert_eq!(s.rotation(), [vec![Dart::Leg(0), Dart::Leg(1)]]);
    }
}
