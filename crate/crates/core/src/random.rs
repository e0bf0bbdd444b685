//! Seeded generators for the randomized cross-checks. Everything is driven by a
//! ChaCha stream so a seed reproduces the same corpus on every platform.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::{Dart, Graph, LegDir, RibbonGraph};
use crate::linalg::PolyMatrix;
use crate::parametric::{ExternalAssignment, Momentum};
use crate::{Poly, Rational, Var};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn build(vertices: &[String], edges: &[(usize, usize)], legs: &[(usize, LegDir)]) -> Graph {
    let refs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let mut b = Graph::builder().vertices(&refs);
    for (i, &(t, h)) in edges.iter().enumerate() {
        b = b.edge(&format!("e{}", i + 1), &vertices[t], &vertices[h]);
    }
    for (i, &(v, d)) in legs.iter().enumerate() {
        b = b.leg(&format!("f{}", i + 1), &vertices[v], d);
    }
    b.build().expect("generated ids are unique")
}

fn random_dir(rng: &mut Rng64) -> LegDir {
    if rng.gen_bool(0.5) {
        LegDir::In
    } else {
        LegDir::Out
    }
}

/// A multigraph with `1..=max_vertices` vertices and `0..=max_edges` edges;
/// loops and parallel edges allowed, possibly disconnected.
pub fn multigraph(rng: &mut Rng64, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    build(&names("v", n), &edges, &[])
}

/// A connected multigraph: a random spanning tree plus extra random edges, with
/// `legs` external legs on random vertices.
pub fn connected_multigraph(rng: &mut Rng64, max_vertices: usize, max_edges: usize, legs: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices.min(max_edges + 1));
    let m = rng.gen_range(n - 1..=max_edges);
    let mut edges = Vec::with_capacity(m);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    while edges.len() < m {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    edges.shuffle(rng);
    let legs: Vec<(usize, LegDir)> = (0..legs).map(|_| (rng.gen_range(0..n), random_dir(rng))).collect();
    build(&names("v", n), &edges, &legs)
}

/// A uniformly shuffled rotation system on `g`.
pub fn rotation_system(rng: &mut Rng64, g: Graph) -> RibbonGraph {
    let mut rot: Vec<Vec<Dart>> = vec![Vec::new(); g.num_vertices()];
    for (i, e) in g.edges().iter().enumerate() {
        rot[e.tail].push(Dart::Tail(i));
        rot[e.head].push(Dart::Head(i));
    }
    for (l, leg) in g.legs().iter().enumerate() {
        rot[leg.vertex].push(Dart::Leg(l));
    }
    for r in &mut rot {
        r.shuffle(rng);
    }
    RibbonGraph::new(g, rot).expect("every dart placed once")
}

/// A connected ribbon graph with at most `max_edges` edges and `legs` legs.
pub fn ribbon(rng: &mut Rng64, max_vertices: usize, max_edges: usize, legs: usize) -> RibbonGraph {
    let g = connected_multigraph(rng, max_vertices, max_edges, legs);
    rotation_system(rng, g)
}

/// A 1PI φ⁴ graph (every vertex of degree four) with 2 or 4 legs and between 1
/// and `max_loops` loops, drawn by random half-edge pairing and rejection.
pub fn phi4_graph(rng: &mut Rng64, max_loops: usize) -> Graph {
    assert!(max_loops >= 1);
    loop {
        let legs = if rng.gen_bool(0.5) { 2 } else { 4 };
        // L = V − legs/2 + 1
        let max_v = max_loops + legs / 2 - 1;
        let min_v = if legs == 4 { 2 } else { 1 };
        let n = rng.gen_range(min_v..=max_v);
        let mut half: Vec<usize> = (0..n).flat_map(|v| [v; 4]).collect();
        half.shuffle(rng);
        let (ext, int) = half.split_at(legs);
        let edges: Vec<(usize, usize)> = int.chunks(2).map(|p| (p[0], p[1])).collect();
        let legs: Vec<(usize, LegDir)> = ext.iter().map(|&v| (v, random_dir(rng))).collect();
        let g = build(&names("v", n), &edges, &legs);
        if g.is_one_pi() && (1..=max_loops).contains(&g.loop_number()) {
            return g;
        }
    }
}

fn small_rational(rng: &mut Rng64) -> Rational {
    Rational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=2).into())
}

pub fn momentum(rng: &mut Rng64) -> Momentum {
    Momentum([small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng)])
}

/// Random momenta on every leg of `g`, the last leg balancing the others.
pub fn momenta(rng: &mut Rng64, g: &Graph) -> ExternalAssignment {
    let legs = g.legs();
    let mut map = BTreeMap::new();
    let mut total = Momentum::zero();
    for (i, l) in legs.iter().enumerate() {
        let p = if i + 1 == legs.len() {
            // sign·p = −total
            (-&total).scaled(l.dir.sign())
        } else {
            let p = momentum(rng);
            total = &total + &p.scaled(l.dir.sign());
            p
        };
        map.insert(l.id.clone(), p);
    }
    ExternalAssignment::with_graph_dirs(g, map).expect("balanced by construction")
}

/// A random skew-symmetric n×n matrix with small rational entries.
pub fn skew_rational(rng: &mut Rng64, n: usize) -> PolyMatrix<Rational> {
    let mut m = PolyMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = Poly::constant(small_rational(rng));
            m.set(j, i, -c.clone());
            m.set(i, j, c);
        }
    }
    m
}

/// A random polynomial in x, y of degree at most 2.
pub fn poly_xy(rng: &mut Rng64) -> Poly {
    let (x, y) = (Poly::var(Var::new("x")), Poly::var(Var::new("y")));
    let mut p = Poly::zero();
    for (i, j) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)] {
        if rng.gen_bool(0.6) {
            p += (x.pow(i) * y.pow(j)).scale(&small_rational(rng));
        }
    }
    p
}

pub fn skew_poly(rng: &mut Rng64, n: usize) -> PolyMatrix<Rational> {
    let mut m = PolyMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = poly_xy(rng);
            m.set(j, i, -c.clone());
            m.set(i, j, c);
        }
    }
    m
}

/// A random diagonal with polynomial entries, as a vector.
pub fn diagonal(rng: &mut Rng64, n: usize, polys: bool) -> Vec<Poly> {
    (0..n)
        .map(|_| if polys { poly_xy(rng) } else { Poly::constant(small_rational(rng)) })
        .collect()
}
