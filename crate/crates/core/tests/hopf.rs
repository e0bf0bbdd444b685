use std::collections::BTreeMap;

use feyncomb::fixtures;
use feyncomb::hopf::{
    bare_vertex, counit, insert, Character, DivergenceModel, FeynGraph, FormalAmplitude, GraphMonomial, GraphSum, Hopf,
    HopfConfig, Site, TensorSum,
};
use feyncomb::{random, Dart, EdgeSubset, Error};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn ids(g: &FeynGraph, names: &[&str]) -> EdgeSubset {
    g.graph().subset_from_ids(names).unwrap()
}

fn sites_at(g: &FeynGraph, v: usize) -> Vec<String> {
    let gr = g.graph();
    let mut out = Vec::new();
    for e in gr.edges() {
        if e.tail == v {
            out.push(format!("{}.t", e.id));
        }
        if e.head == v {
            out.push(format!("{}.h", e.id));
        }
    }
    out.extend(gr.legs().iter().filter(|l| l.vertex == v).map(|l| l.id.clone()));
    out
}

fn gluing(inner: &FeynGraph, targets: &[String]) -> BTreeMap<String, String> {
    inner.graph().legs().iter().map(|l| l.id.clone()).zip(targets.iter().cloned()).collect()
}

#[test]
fn one_loop_bubble_is_primitive() {
    let h = Hopf::new(DivergenceModel::Phi4);
    let g = fixtures::feyn("fig4");
    let l = h.register(&g).unwrap();
    let mut want = TensorSum::zero();
    want.add_term(GraphMonomial::single(l.clone()), GraphMonomial::one(), 1);
    want.add_term(GraphMonomial::one(), GraphMonomial::single(l.clone()), 1);
    assert_eq!(h.coproduct(&g).unwrap(), want);
    assert_eq!(h.antipode(&g).unwrap(), -&GraphSum::generator(l.clone()));
    let phi = FormalAmplitude::phi(l);
    assert_eq!(h.twisted_antipode(&g).unwrap(), -&phi.t());
    assert_eq!(h.renormalized(&g).unwrap(), phi.id_minus_t());
}

#[test]
fn single_subdivergence() {
    let h = Hopf::new(DivergenceModel::Phi4);
    let g = fixtures::feyn("fig5");
    let gamma = ids(&g, &["e1", "e2"]);
    assert_eq!(h.divergent_subgraphs(&g).unwrap(), vec![gamma]);
    let (big, small, quotient) = (
        h.register(&g).unwrap(),
        h.register(&g.subgraph(gamma)).unwrap(),
        h.register(&g.cograph(&[gamma])).unwrap(),
    );
    assert_eq!(small, fixtures::feyn("fig4").label());

    let mut want = TensorSum::zero();
    want.add_term(GraphMonomial::single(big.clone()), GraphMonomial::one(), 1);
    want.add_term(GraphMonomial::one(), GraphMonomial::single(big.clone()), 1);
    want.add_term(GraphMonomial::single(small.clone()), GraphMonomial::single(quotient.clone()), 1);
    assert_eq!(h.coproduct(&g).unwrap(), want);

    let s = h.antipode(&g).unwrap();
    let want = &(-&GraphSum::generator(big.clone())) + &GraphSum::monomial(
        GraphMonomial::from_labels(vec![small.clone(), quotient.clone()]),
        1,
    );
    assert_eq!(s, want);
    assert_eq!(h.zimmermann_forests(&g).unwrap(), vec![vec![], vec![gamma]]);

    let (pg, pq) = (FormalAmplitude::phi(big), FormalAmplitude::phi(quotient));
    let rbar = &pg - &(&FormalAmplitude::phi(small).t() * &pq);
    assert_eq!(h.bogoliubov_hopf(&g).unwrap(), rbar);
    assert_eq!(h.twisted_antipode(&g).unwrap(), -&rbar.t());
}

#[test]
fn two_disjoint_bubbles() {
    let h = Hopf::new(DivergenceModel::Phi4);
    let g = fixtures::feyn("twobubble");
    let (a, b) = (ids(&g, &["e1", "e2"]), ids(&g, &["e3", "e4"]));
    assert_eq!(h.families(&g).unwrap(), vec![vec![a], vec![a, b], vec![b]]);
    assert_eq!(h.zimmermann_forests(&g).unwrap().len(), 4);
    let bubble = fixtures::feyn("fig4").label();
    let both = GraphMonomial::from_labels(vec![bubble.clone(), bubble.clone()]);
    let t = h.coproduct(&g).unwrap();
    assert!(t.terms().any(|(l, r, c)| *l == both && *r == GraphMonomial::single(bubble.clone()) && c == 1));
    assert_eq!(t.len(), 4);
    assert!(h.check_hopf_axioms(&g).unwrap());
}

#[test]
fn single_subgraph_coproduct_is_not_coassociative() {
    let h = Hopf::with_config(DivergenceModel::Phi4, HopfConfig { allow_products: false, ..HopfConfig::default() });
    assert!(!h.check_coassociativity(&fixtures::feyn("twobubble")).unwrap());
    assert!(h.check_coassociativity(&fixtures::feyn("fig5")).unwrap());
}

#[test]
fn unit_and_counit() {
    let h = Hopf::new(DivergenceModel::Phi4);
    assert_eq!(h.antipode_monomial(&GraphMonomial::one()).unwrap(), GraphSum::one());
    assert_eq!(h.coproduct_monomial(&GraphMonomial::one()).unwrap(), TensorSum::one());
    let l = h.register(&fixtures::feyn("fig4")).unwrap();
    let x = &GraphSum::one().scale(3) + &GraphSum::generator(l).scale(2);
    assert_eq!(counit(&x), 3);
    assert_eq!(
        h.character(Character::Counit, &GraphMonomial::one()).unwrap(),
        FormalAmplitude::one()
    );
}

#[test]
fn nested_forests_respect_inclusion() {
    let h = Hopf::new(DivergenceModel::Phi4);
    let g = fixtures::feyn("nested");
    let forests = h.zimmermann_forests(&g).unwrap();
    let gr = g.graph();
    for f in &forests {
        for (i, &a) in f.iter().enumerate() {
            for &b in &f[i + 1..] {
                let nested = a.is_subset_of(b) || b.is_subset_of(a);
                let disjoint = gr.vertices_of(a).iter().all(|v| !gr.vertices_of(b).contains(v));
                assert!(nested || disjoint);
            }
        }
    }
    assert_eq!(h.bogoliubov_forest(&g).unwrap(), h.bogoliubov_hopf(&g).unwrap());
}

#[test]
fn gw_model_skips_irregular_bubbles() {
    let g = fixtures::feyn("ribbon_irregular");
    let gw = Hopf::new(DivergenceModel::GwRibbon);
    assert_eq!(gw.divergent_subgraphs(&g).unwrap(), vec![ids(&g, &["e3", "e4"])]);
    assert!(Hopf::new(DivergenceModel::Phi4).divergent_subgraphs(&g).unwrap().len() > 1);
    assert!(gw.register(&fixtures::feyn("fig4")).is_err());
}

#[test]
fn tadpole_flag() {
    let host = fixtures::feyn("fig4");
    let tad = FeynGraph::Plain(fixtures::load("fig6").graph().clone());
    let (g, image) = insert(&host, &Site::Edge("e1".into()), &tad, &gluing(&tad, &["e1.t".into(), "e1.h".into()]), "t.")
        .unwrap();
    let with = Hopf::new(DivergenceModel::Phi4);
    let without =
        Hopf::with_config(DivergenceModel::Phi4, HopfConfig { include_tadpoles: false, ..HopfConfig::default() });
    let d_with = with.divergent_subgraphs(&g).unwrap();
    let d_without = without.divergent_subgraphs(&g).unwrap();
    assert!(d_with.contains(&image));
    assert!(!d_without.contains(&image));
    assert_eq!(d_with.len(), d_without.len() + 1);
    for h in [&with, &without] {
        assert!(h.check_hopf_axioms(&g).unwrap());
        assert!(h.check_coassociativity(&g).unwrap());
        assert_eq!(h.bogoliubov_forest(&g).unwrap(), h.bogoliubov_hopf(&g).unwrap());
    }
}

#[test]
fn bare_vertex_insertion_is_the_identity() {
    let host = fixtures::feyn("fig5");
    let v = host.graph().vertex_index("v1").unwrap();
    let targets = sites_at(&host, v);
    let bare = FeynGraph::Plain(bare_vertex(targets.len()));
    let (g, image) = insert(&host, &Site::Vertex("v1".into()), &bare, &gluing(&bare, &targets), "i.").unwrap();
    assert!(image.is_empty());
    assert_eq!(g.label(), host.label());
}

#[test]
fn insertion_arity_is_checked() {
    let host = fixtures::feyn("fig5");
    let inner = FeynGraph::Plain(fixtures::load("fig6").graph().clone());
    let err = insert(&host, &Site::Vertex("v1".into()), &inner, &gluing(&inner, &["e1.t".into(), "e2.t".into()]), "i.");
    assert!(matches!(err, Err(Error::ArityMismatch(_))));
}

#[test]
fn ribbon_insertion_respects_cyclic_order() {
    let host = fixtures::feyn("fig4_ribbon");
    let inner = fixtures::feyn("fig4_ribbon");
    let FeynGraph::Ribbon(hr) = &host else { panic!("ribbon fixture") };
    let rot: Vec<String> = hr.rotation()[0].iter().map(|&d| hr.dart_name(d)).collect();
    let site = Site::Vertex(host.graph().vertices()[0].clone());
    let mut ok = 0;
    let mut perm = rot.clone();
    // all 24 gluings: exactly the cyclic shifts of one order are allowed
    for p in permutations(&mut perm, 0) {
        match insert(&host, &site, &inner, &gluing(&inner, &p), "i.") {
            Ok((g, image)) => {
                ok += 1;
                assert_eq!(g.cograph(&[image]).label(), host.label());
            }
            Err(e) => assert!(matches!(e, Error::CyclicOrderViolation(_)), "{e}"),
        }
    }
    assert_eq!(ok, 4);
}

fn permutations(v: &mut Vec<String>, k: usize) -> Vec<Vec<String>> {
    if k == v.len() {
        return vec![v.clone()];
    }
    let mut out = Vec::new();
    for i in k..v.len() {
        v.swap(k, i);
        out.extend(permutations(v, k + 1));
        v.swap(k, i);
    }
    out
}

fn two_leg_phi4(rng: &mut random::Rng64) -> FeynGraph {
    loop {
        let g = random::phi4_graph(rng, 2);
        if g.num_legs() == 2 {
            return FeynGraph::Plain(g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shrinking_an_inserted_vertex_graph_recovers_the_host(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let host = FeynGraph::Plain(random::phi4_graph(&mut rng, 2));
        let inner = loop {
            let g = random::phi4_graph(&mut rng, 2);
            if g.num_legs() == 4 {
                break FeynGraph::Plain(g);
            }
        };
        let v = rng.gen_range(0..host.graph().num_vertices());
        let mut targets = sites_at(&host, v);
        targets.shuffle(&mut rng);
        let site = Site::Vertex(host.graph().vertices()[v].clone());
        let (g, image) = insert(&host, &site, &inner, &gluing(&inner, &targets), "i.").unwrap();
        prop_assert_eq!(g.subgraph(image).label(), inner.label());
        prop_assert_eq!(g.cograph(&[image]).label(), host.label());
        prop_assert_eq!(g.loop_number(), host.loop_number() + inner.loop_number());
    }

    #[test]
    fn shrinking_an_inserted_self_energy_recovers_the_host(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let host = FeynGraph::Plain(random::phi4_graph(&mut rng, 2));
        let inner = two_leg_phi4(&mut rng);
        let candidates: Vec<String> =
            host.graph().edges().iter().filter(|e| !e.is_loop()).map(|e| e.id.clone()).collect();
        prop_assume!(!candidates.is_empty());
        let e = candidates.choose(&mut rng).unwrap().clone();
        let mut ends = vec![format!("{e}.t"), format!("{e}.h")];
        ends.shuffle(&mut rng);
        let (g, image) = insert(&host, &Site::Edge(e), &inner, &gluing(&inner, &ends), "i.").unwrap();
        prop_assert_eq!(g.graph().num_edges(), host.graph().num_edges() + inner.graph().num_edges() + 1);
        prop_assert_eq!(g.cograph(&[image]).label(), host.label());
        let h = Hopf::new(DivergenceModel::Phi4);
        prop_assert!(h.divergent_subgraphs(&g).unwrap().contains(&image));
    }

    #[test]
    fn random_phi4_graphs_satisfy_the_axioms(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = FeynGraph::Plain(random::phi4_graph(&mut rng, 3));
        let h = Hopf::new(DivergenceModel::Phi4);
        prop_assert!(h.check_coassociativity(&g).unwrap());
        prop_assert!(h.check_hopf_axioms(&g).unwrap());
        prop_assert!(h.check_counit(&g).unwrap());
        prop_assert!(h.check_grading(&g).unwrap());
        let rbar = h.bogoliubov_hopf(&g).unwrap();
        prop_assert_eq!(h.bogoliubov_forest(&g).unwrap(), rbar.clone());
        prop_assert_eq!(h.renormalized(&g).unwrap(), rbar.id_minus_t());
    }

    #[test]
    fn labels_ignore_dart_names(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = random::phi4_graph(&mut rng, 3);
        let flip = EdgeSubset(rng.gen::<u64>() & g.all_edges().0);
        prop_assert_eq!(FeynGraph::Plain(g.reoriented(flip)).label(), FeynGraph::Plain(g).label());
    }
}

#[test]
fn dart_partners_pair_up() {
    assert_eq!(Dart::Tail(3).partner(), Dart::Head(3));
    assert_eq!(Dart::Leg(1).partner(), Dart::Leg(1));
}
