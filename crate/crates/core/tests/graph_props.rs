use feyncomb::graphs::{Edge, Leg};
use feyncomb::linalg::matrix_tree_count;
use feyncomb::random;
use feyncomb::{Dart, EdgeSubset, Graph, RibbonGraph};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// The same graph with shuffled vertex order, edge order and edge names.
fn relabel(g: &Graph, rng: &mut random::Rng64) -> (Graph, Vec<usize>, Vec<usize>) {
    let mut vperm: Vec<usize> = (0..g.num_vertices()).collect();
    vperm.shuffle(rng);
    let mut eperm: Vec<usize> = (0..g.num_edges()).collect();
    eperm.shuffle(rng);
    // new vertex vperm[i] is old vertex i; new edge eperm[i] is old edge i
    let mut vertices = vec![String::new(); g.num_vertices()];
    for (old, &new) in vperm.iter().enumerate() {
        vertices[new] = format!("w{old}");
    }
    let mut edges = vec![None; g.num_edges()];
    for (old, e) in g.edges().iter().enumerate() {
        edges[eperm[old]] = Some(Edge { id: format!("x{}", eperm[old]), tail: vperm[e.tail], head: vperm[e.head] });
    }
    let legs = g.legs().iter().map(|l| Leg { id: l.id.clone(), vertex: vperm[l.vertex], dir: l.dir }).collect();
    let h = Graph::new(vertices, edges.into_iter().map(Option::unwrap).collect(), legs).unwrap();
    (h, vperm, eperm)
}

fn relabel_ribbon(rg: &RibbonGraph, rng: &mut random::Rng64) -> RibbonGraph {
    let (h, vperm, eperm) = relabel(rg.graph(), rng);
    let mut rot = vec![Vec::new(); h.num_vertices()];
    for (old, r) in rg.rotation().iter().enumerate() {
        let mut r: Vec<Dart> = r
            .iter()
            .map(|d| match *d {
                Dart::Tail(e) => Dart::Tail(eperm[e]),
                Dart::Head(e) => Dart::Head(eperm[e]),
                leg => leg,
            })
            .collect();
        if !r.is_empty() {
            let k = rng.gen_range(0..r.len());
            r.rotate_left(k);
        }
        rot[vperm[old]] = r;
    }
    RibbonGraph::new(h, rot).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_relation(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let rg = random::ribbon(&mut rng, 5, 7, 0);
        let (v, e, f) = (rg.num_vertices() as i64, rg.num_edges() as i64, rg.faces().len() as i64);
        prop_assert_eq!(v - e + f, 2 - 2 * rg.genus() as i64);
    }

    #[test]
    fn subset_genus_is_nonnegative_and_even(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let rg = random::ribbon(&mut rng, 4, 6, 0);
        let g = rg.graph();
        for h in EdgeSubset::all(g.num_edges()) {
            let excess = g.components(h) as i64 + g.nullity(h) as i64 - rg.num_faces_of(h) as i64;
            prop_assert!(excess >= 0 && excess % 2 == 0);
            prop_assert_eq!(excess as usize, rg.twice_genus_of(h));
        }
    }

    #[test]
    fn delete_and_contract_drop_one_edge(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = random::multigraph(&mut rng, 5, 7);
        for i in 0..g.num_edges() {
            let d = g.delete_edge_at(i);
            prop_assert_eq!(d.num_edges(), g.num_edges() - 1);
            let (before, after) = (g.components(g.all_edges()), d.components(d.all_edges()));
            prop_assert!(after == before || after == before + 1);
            prop_assert_eq!(g.contract_edge_at(i).num_edges(), g.num_edges() - 1);
        }
    }

    #[test]
    fn spanning_trees_match_kirchhoff(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = random::connected_multigraph(&mut rng, 5, 8, 0);
        let trees = g.spanning_trees().unwrap();
        prop_assert_eq!(BigInt::from(trees.len()), matrix_tree_count(&g));
    }

    #[test]
    fn one_face_spanning_trees_are_quasi_trees(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let rg = random::ribbon(&mut rng, 5, 7, 0);
        let quasi = rg.quasi_trees().unwrap();
        for t in rg.graph().spanning_trees().unwrap() {
            if rg.num_faces_of(t) == 1 {
                prop_assert!(quasi.contains(&t));
            }
        }
        for q in quasi {
            prop_assert!(q.len() + 1 >= rg.num_vertices());
        }
    }

    #[test]
    fn canonical_form_ignores_names(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let legs = rng.gen_range(0..3);
        let g = random::connected_multigraph(&mut rng, 5, 7, legs);
        let (h, _, _) = relabel(&g, &mut rng);
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
        let rg = random::rotation_system(&mut rng, g);
        prop_assert_eq!(rg.canonical_form(), relabel_ribbon(&rg, &mut rng).canonical_form());
    }
}
