use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::graphs::{Dart, Edge, EdgeSubset, Graph, GraphLabel, Leg, LegDir, RibbonGraph, RibbonLabel};
use crate::{Error, Result};

/// A Feynman graph of either flavour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FeynGraph {
    Plain(Graph),
    Ribbon(RibbonGraph),
}

/// Isomorphism class of a [`FeynGraph`]; the generators of the Hopf algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Plain(GraphLabel),
    Ribbon(RibbonLabel),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plain(l) => write!(f, "{l}"),
            Label::Ribbon(l) => write!(f, "{l}"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FeynGraph {
    pub fn graph(&self) -> &Graph {
        match self {
            FeynGraph::Plain(g) => g,
            FeynGraph::Ribbon(r) => r.graph(),
        }
    }

    pub fn ribbon(&self) -> Option<&RibbonGraph> {
        match self {
            FeynGraph::Ribbon(r) => Some(r),
            FeynGraph::Plain(_) => None,
        }
    }

    pub fn label(&self) -> Label {
        match self {
            FeynGraph::Plain(g) => Label::Plain(g.canonical_form()),
            FeynGraph::Ribbon(r) => Label::Ribbon(r.canonical_form()),
        }
    }

    pub fn loop_number(&self) -> usize {
        self.graph().loop_number()
    }

    pub fn subgraph(&self, a: EdgeSubset) -> FeynGraph {
        match self {
            FeynGraph::Plain(g) => FeynGraph::Plain(g.subgraph(a)),
            FeynGraph::Ribbon(r) => FeynGraph::Ribbon(r.subgraph(a)),
        }
    }

    fn shrink_one(&self, a: EdgeSubset) -> FeynGraph {
        match self {
            FeynGraph::Plain(g) => FeynGraph::Plain(g.shrink(a)),
            FeynGraph::Ribbon(r) => FeynGraph::Ribbon(r.shrink(a)),
        }
    }

    /// Shrinks every member of a vertex-disjoint family to its own vertex. A
    /// member with two legs leaves a two-valent vertex, which is replaced by a
    /// single propagator keeping the id of the lower of its two edges.
    pub fn cograph(&self, family: &[EdgeSubset]) -> FeynGraph {
        let members: Vec<(Vec<String>, String, bool)> = family
            .iter()
            .map(|&a| {
                let g = self.graph();
                let ids = g.edge_ids(a).into_iter().map(String::from).collect();
                let first = g.vertices()[g.vertices_of(a)[0]].clone();
                (ids, first, g.subgraph_leg_count(a) == 2)
            })
            .collect();
        let mut g = self.clone();
        for (ids, first, two_legs) in members {
            let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
            let a = g.graph().subset_from_ids(&refs).expect("family edges survive earlier shrinks");
            g = g.shrink_one(a);
            if two_legs {
                let x = g.graph().vertex_index(&first).expect("merged vertex keeps its id");
                if let Some(s) = g.suppress(x) {
                    g = s;
                }
            }
        }
        g
    }

    /// Removes vertex `x` if it carries exactly two distinct non-loop edges and
    /// nothing else, joining them into one edge.
    fn suppress(&self, x: usize) -> Option<FeynGraph> {
        let g = self.graph();
        if g.degree(x) != 2 || g.legs().iter().any(|l| l.vertex == x) {
            return None;
        }
        let mut inc: Vec<usize> = (0..g.num_edges())
            .filter(|&i| g.edge(i).tail == x || g.edge(i).head == x)
            .collect();
        if inc.len() != 2 || inc.iter().any(|&i| g.edge(i).is_loop()) {
            return None;
        }
        inc.sort_by(|&p, &q| crate::graphs::natural_cmp(&g.edge(p).id, &g.edge(q).id));
        let (keep, gone) = (inc[0], inc[1]);
        let far = |i: usize| if g.edge(i).tail == x { g.edge(i).head } else { g.edge(i).tail };
        let (u, w) = (far(keep), far(gone));
        let vmap = |v: usize| if v > x { v - 1 } else { v };
        let emap = |e: usize| if e > gone { e - 1 } else { e };
        let vertices = g.vertices().iter().enumerate().filter(|&(v, _)| v != x).map(|(_, s)| s.clone()).collect();
        let mut edges = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            if i == gone {
                continue;
            }
            let (tail, head) = match i == keep {
                true if e.tail == x => (w, u),
                true => (u, w),
                false => (e.tail, e.head),
            };
            edges.push(Edge { id: e.id.clone(), tail: vmap(tail), head: vmap(head) });
        }
        let legs = g.legs().iter().map(|l| Leg { id: l.id.clone(), vertex: vmap(l.vertex), dir: l.dir }).collect();
        let graph = Graph::new(vertices, edges, legs).expect("suppression keeps ids valid");
        Some(match self {
            FeynGraph::Plain(_) => FeynGraph::Plain(graph),
            FeynGraph::Ribbon(r) => {
                // the far dart of `gone` is replaced by the dart of `keep` that sat at x
                let keep_at_x = if g.edge(keep).head == x { Dart::Head(keep) } else { Dart::Tail(keep) };
                let gone_far = if g.edge(gone).tail == x { Dart::Head(gone) } else { Dart::Tail(gone) };
                let renumber = |d: Dart| match d {
                    Dart::Tail(e) => Dart::Tail(emap(e)),
                    Dart::Head(e) => Dart::Head(emap(e)),
                    leg => leg,
                };
                let rotation = r
                    .rotation()
                    .iter()
                    .enumerate()
                    .filter(|&(v, _)| v != x)
                    .map(|(_, rot)| {
                        rot.iter().map(|&d| renumber(if d == gone_far { keep_at_x } else { d })).collect()
                    })
                    .collect();
                FeynGraph::Ribbon(RibbonGraph::new(graph, rotation).expect("suppression keeps rotations valid"))
            }
        })
    }
}

/// Where a graph is inserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Site {
    /// Replace a vertex of the host; the inserted graph's legs are glued to the
    /// half-edges at that vertex.
    Vertex(String),
    /// Replace an internal edge of the host by a two-leg graph.
    Edge(String),
}

/// Inserts `inner` into `host` at `site`.
///
/// `gluing` maps each leg id of `inner` to a half-edge name at the site: for a
/// vertex site, `<edge>.t`, `<edge>.h` or a host leg id at that vertex; for an
/// edge site, `<edge>.t` for the side towards the tail and `<edge>.h` for the
/// side towards the head. Inserted vertices and edges get the prefix `prefix`.
/// Returns the new graph and the edges that came from `inner`.
pub fn insert(
    host: &FeynGraph,
    site: &Site,
    inner: &FeynGraph,
    gluing: &BTreeMap<String, String>,
    prefix: &str,
) -> Result<(FeynGraph, EdgeSubset)> {
    let (hg, ig) = (host.graph(), inner.graph());
    // darts of the host that the inner legs get glued to
    let targets: Vec<Dart> = match site {
        Site::Vertex(v) => {
            let v = hg.vertex_index(v)?;
            let mut t = Vec::new();
            for (i, e) in hg.edges().iter().enumerate() {
                if e.tail == v {
                    t.push(Dart::Tail(i));
                }
                if e.head == v {
                    t.push(Dart::Head(i));
                }
            }
            t.extend((0..hg.num_legs()).filter(|&l| hg.legs()[l].vertex == v).map(Dart::Leg));
            t
        }
        Site::Edge(e) => {
            let e = hg.edge_index(e)?;
            if hg.edge(e).is_loop() {
                return Err(Error::Precondition(format!("cannot insert into self-loop '{}'", hg.edge(e).id)));
            }
            vec![Dart::Tail(e), Dart::Head(e)]
        }
    };
    if ig.num_legs() != targets.len() || gluing.len() != targets.len() {
        return Err(Error::ArityMismatch(format!(
            "site has {} half-edges, inserted graph has {} legs, gluing has {} entries",
            targets.len(),
            ig.num_legs(),
            gluing.len()
        )));
    }
    let dart_name = |d: Dart| match d {
        Dart::Tail(e) => format!("{}.t", hg.edge(e).id),
        Dart::Head(e) => format!("{}.h", hg.edge(e).id),
        Dart::Leg(l) => hg.legs()[l].id.clone(),
    };
    // inner leg index -> host dart
    let mut glued: Vec<Option<Dart>> = vec![None; ig.num_legs()];
    let mut used: HashMap<Dart, ()> = HashMap::new();
    for (leg_id, target) in gluing {
        let l = ig.leg_index(leg_id).map_err(|_| Error::ArityMismatch(format!("unknown inner leg '{leg_id}'")))?;
        let d = *targets
            .iter()
            .find(|&&d| dart_name(d) == *target)
            .ok_or_else(|| Error::ArityMismatch(format!("'{target}' is not a half-edge at the site")))?;
        if used.insert(d, ()).is_some() {
            return Err(Error::ArityMismatch(format!("half-edge '{target}' glued twice")));
        }
        glued[l] = Some(d);
    }
    let glued: Vec<Dart> = glued.into_iter().map(|d| d.expect("bijection")).collect();

    if let (FeynGraph::Ribbon(hr), FeynGraph::Ribbon(ir), Site::Vertex(v)) = (host, inner, site) {
        check_cyclic(hr, hr.graph().vertex_index(v)?, ir, &glued)?;
    }

    // assemble vertices: host minus the site vertex (vertex site), then inner
    let removed_vertex = match site {
        Site::Vertex(v) => Some(hg.vertex_index(v)?),
        Site::Edge(_) => None,
    };
    let removed_edge = match site {
        Site::Edge(e) => Some(hg.edge_index(e)?),
        Site::Vertex(_) => None,
    };
    let mut vertices: Vec<String> = Vec::new();
    let mut host_v = vec![usize::MAX; hg.num_vertices()];
    for (i, v) in hg.vertices().iter().enumerate() {
        if Some(i) != removed_vertex {
            host_v[i] = vertices.len();
            vertices.push(v.clone());
        }
    }
    let inner_v: Vec<usize> = ig
        .vertices()
        .iter()
        .map(|v| {
            vertices.push(format!("{prefix}{v}"));
            vertices.len() - 1
        })
        .collect();
    // where each host dart now attaches, if it was glued
    let mut moved: HashMap<Dart, usize> = HashMap::new();
    for (l, &d) in glued.iter().enumerate() {
        moved.insert(d, inner_v[ig.legs()[l].vertex]);
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut host_e = vec![usize::MAX; hg.num_edges()];
    for (i, e) in hg.edges().iter().enumerate() {
        if Some(i) == removed_edge {
            continue;
        }
        let tail = moved.get(&Dart::Tail(i)).copied().unwrap_or(host_v[e.tail]);
        let head = moved.get(&Dart::Head(i)).copied().unwrap_or(host_v[e.head]);
        host_e[i] = edges.len();
        edges.push(Edge { id: e.id.clone(), tail, head });
    }
    let mut inner_e = Vec::new();
    let first_inner = edges.len();
    for e in ig.edges() {
        inner_e.push(edges.len());
        edges.push(Edge { id: format!("{prefix}{}", e.id), tail: inner_v[e.tail], head: inner_v[e.head] });
    }
    let mut image = EdgeSubset::from_indices(first_inner..edges.len());
    let mut split_edges = [usize::MAX; 2];
    if let Some(r) = removed_edge {
        let e = hg.edge(r);
        let ta = moved[&Dart::Tail(r)];
        let hb = moved[&Dart::Head(r)];
        split_edges = [edges.len(), edges.len() + 1];
        edges.push(Edge { id: format!("{}.a", e.id), tail: host_v[e.tail], head: ta });
        edges.push(Edge { id: format!("{}.b", e.id), tail: hb, head: host_v[e.head] });
        // the two halves are not part of the inserted graph
        image = EdgeSubset::from_indices(first_inner..first_inner + ig.num_edges());
    }
    let mut legs: Vec<Leg> = Vec::new();
    let mut host_l = vec![usize::MAX; hg.num_legs()];
    for (i, l) in hg.legs().iter().enumerate() {
        let vertex = moved.get(&Dart::Leg(i)).copied().unwrap_or_else(|| host_v[l.vertex]);
        host_l[i] = legs.len();
        legs.push(Leg { id: l.id.clone(), vertex, dir: l.dir });
    }
    let graph = Graph::new(vertices, edges, legs)?;

    let result = match (host, inner) {
        (FeynGraph::Plain(_), FeynGraph::Plain(_)) => FeynGraph::Plain(graph),
        (FeynGraph::Ribbon(hr), FeynGraph::Ribbon(ir)) => {
            let map_host = |d: Dart| -> Dart {
                match d {
                    Dart::Tail(e) if Some(e) == removed_edge => Dart::Tail(split_edges[0]),
                    Dart::Head(e) if Some(e) == removed_edge => Dart::Head(split_edges[1]),
                    Dart::Tail(e) => Dart::Tail(host_e[e]),
                    Dart::Head(e) => Dart::Head(host_e[e]),
                    Dart::Leg(l) => Dart::Leg(host_l[l]),
                }
            };
            let map_inner_leg = |l: usize| -> Dart {
                let d = glued[l];
                match (removed_edge, d) {
                    (Some(_), Dart::Tail(_)) => Dart::Head(split_edges[0]),
                    (Some(_), Dart::Head(_)) => Dart::Tail(split_edges[1]),
                    _ => map_host(d),
                }
            };
            let mut rotation = Vec::new();
            for (v, rot) in hr.rotation().iter().enumerate() {
                if Some(v) != removed_vertex {
                    rotation.push(rot.iter().map(|&d| map_host(d)).collect());
                }
            }
            for rot in ir.rotation() {
                rotation.push(
                    rot.iter()
                        .map(|&d| match d {
                            Dart::Tail(e) => Dart::Tail(inner_e[e]),
                            Dart::Head(e) => Dart::Head(inner_e[e]),
                            Dart::Leg(l) => map_inner_leg(l),
                        })
                        .collect(),
                );
            }
            FeynGraph::Ribbon(RibbonGraph::new(graph, rotation)?)
        }
        _ => return Err(Error::Precondition("cannot insert a ribbon graph into a plain one or vice versa".into())),
    };
    Ok((result, image))
}

/// The inner legs, read along the inner graph's broken face, must land on the
/// site's half-edges in their cyclic order.
fn check_cyclic(host: &RibbonGraph, v: usize, inner: &RibbonGraph, glued: &[Dart]) -> Result<()> {
    let broken: Vec<Vec<usize>> =
        inner.faces().iter().filter(|f| f.is_broken()).map(|f| f.legs().collect()).collect();
    if broken.len() != 1 {
        return Err(Error::CyclicOrderViolation(format!(
            "inserted ribbon graph has {} broken faces, expected 1",
            broken.len()
        )));
    }
    let along: Vec<Dart> = broken[0].iter().map(|&l| glued[l]).collect();
    let rot = &host.rotation()[v];
    let n = rot.len();
    let Some(start) = rot.iter().position(|&d| Some(&d) == along.first()) else {
        return Err(Error::CyclicOrderViolation("gluing misses the site".into()));
    };
    if (0..n).all(|k| rot[(start + k) % n] == along[k]) {
        Ok(())
    } else {
        Err(Error::CyclicOrderViolation(format!(
            "legs along the boundary map to {:?}, site order is {:?}",
            along.iter().map(|&d| host.dart_name(d)).collect::<Vec<_>>(),
            rot.iter().map(|&d| host.dart_name(d)).collect::<Vec<_>>()
        )))
    }
}

/// A vertex carrying `legs` legs and nothing else; inserting it changes nothing.
pub fn bare_vertex(legs: usize) -> Graph {
    let mut b = Graph::builder().vertex("o");
    for i in 0..legs {
        b = b.leg(&format!("l{i}"), "o", LegDir::In);
    }
    b.build().expect("valid")
}
