use std::collections::HashMap;

use super::{rational, tally_subsets, Method, Powers};
use crate::graphs::{EdgeKind, EdgeSubset, RibbonGraph, RibbonLabel};
use crate::{Monomial, Poly, Rational, Result, Var};

/// R(x, y, z) = Σ_H (x−1)^{r(E)−r(H)} y^{n(H)} z^{k(H)−F(H)+n(H)}.
pub fn bollobas_riordan(rg: &RibbonGraph, method: Method) -> Result<Poly> {
    match method {
        Method::SubsetSum => br_subsets(rg),
        Method::DeletionContraction { memoize } => {
            super::check_edges(rg.num_edges())?;
            let mut memo = memoize.then(HashMap::new);
            br_dc(rg, &mut memo)
        }
    }
}

fn br_subsets(rg: &RibbonGraph) -> Result<Poly> {
    let g = rg.graph();
    let full_rank = g.rank(g.all_edges());
    let counts = tally_subsets(rg.num_edges(), |h| {
        (full_rank - g.rank(h), g.nullity(h), rg.twice_genus_of(h))
    })?;
    let mut xs = Powers::new(Poly::var("x") - Poly::one());
    let mut out = Poly::zero();
    for ((dr, n, g2), c) in counts {
        let m = Monomial::from_powers([(Var::new("y"), n as u32), (Var::new("z"), g2 as u32)]);
        out += xs.get(dr).mul_monomial(&m).scale(&rational(c));
    }
    Ok(out)
}

fn br_dc(rg: &RibbonGraph, memo: &mut Option<HashMap<RibbonLabel, Poly>>) -> Result<Poly> {
    let key = memo.as_ref().map(|_| rg.canonical_form());
    if let (Some(m), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(p) = m.get(k) {
            return Ok(p.clone());
        }
    }
    let g = rg.graph();
    let order = g.edges_by_id();
    let kinds: Vec<(usize, EdgeKind)> = order.iter().map(|&i| (i, g.classify_edge(i))).collect();
    let regular = kinds.iter().find(|(_, k)| *k == EdgeKind::Regular).map(|(i, _)| *i);
    let bridge = kinds.iter().find(|(_, k)| *k == EdgeKind::Bridge).map(|(i, _)| *i);
    let result = if let Some(e) = regular {
        br_dc(&rg.contract_edge_at(e)?, memo)? + br_dc(&rg.delete_edge_at(e), memo)?
    } else if let Some(e) = bridge {
        Poly::var("x") * br_dc(&rg.contract_edge_at(e)?, memo)?
    } else {
        one_vertex_product(rg)
    };
    if let (Some(m), Some(k)) = (memo.as_mut(), key) {
        m.insert(k, result.clone());
    }
    Ok(result)
}

/// With only self-loops left every component is a single vertex; R is the
/// product of the one-vertex forms Σ_H y^{|H|} z^{2g(H)}.
fn one_vertex_product(rg: &RibbonGraph) -> Poly {
    let g = rg.graph();
    (0..g.num_vertices())
        .map(|v| {
            let loops: Vec<usize> = (0..g.num_edges()).filter(|&i| g.edge(i).tail == v).collect();
            let mut p = Poly::zero();
            for bits in 0u64..1 << loops.len() {
                let h = EdgeSubset::from_indices(
                    loops.iter().enumerate().filter(|(j, _)| bits >> j & 1 == 1).map(|(_, &i)| i),
                );
                let m = Monomial::from_powers([
                    (Var::new("y"), h.len() as u32),
                    (Var::new("z"), rg.twice_genus_of(h) as u32),
                ]);
                p.add_term(m, Rational::from_integer(1.into()));
            }
            p
        })
        .product()
}

/// Z(x, β, z) = Σ_H x^{k(H)} (Π_{e∈H} β_e) z^{F(H)}, with β_e named `b.<edge id>`.
pub fn multivariate_br(rg: &RibbonGraph, method: Method) -> Result<Poly> {
    super::check_edges(rg.num_edges())?;
    match method {
        Method::SubsetSum => Ok(zbr_subsets(rg)),
        Method::DeletionContraction { memoize } => {
            let mut memo = memoize.then(HashMap::new);
            zbr_dc(rg, &mut memo)
        }
    }
}

fn zbr_subsets(rg: &RibbonGraph) -> Poly {
    let g = rg.graph();
    let betas: Vec<Var> = g.edges().iter().map(|e| Var::beta(&e.id)).collect();
    let (x, z) = (Var::new("x"), Var::new("z"));
    Poly::from_terms(EdgeSubset::all(g.num_edges()).map(|h| {
        let mut powers: Vec<(Var, u32)> = h.iter().map(|i| (betas[i].clone(), 1)).collect();
        powers.push((x.clone(), g.components(h) as u32));
        powers.push((z.clone(), rg.num_faces_of(h) as u32));
        (Monomial::from_powers(powers), Rational::from_integer(1.into()))
    }))
}

fn zbr_dc(rg: &RibbonGraph, memo: &mut Option<HashMap<RibbonGraph, Poly>>) -> Result<Poly> {
    if let Some(p) = memo.as_ref().and_then(|m| m.get(rg)) {
        return Ok(p.clone());
    }
    let g = rg.graph();
    let e = g.edges_by_id().into_iter().find(|&i| !g.edge(i).is_loop());
    let result = match e {
        Some(e) => {
            let beta = Poly::var(Var::beta(&g.edge(e).id));
            zbr_dc(&rg.delete_edge_at(e), memo)? + beta * zbr_dc(&rg.contract_edge_at(e)?, memo)?
        }
        None => zbr_subsets(rg),
    };
    if let Some(m) = memo.as_mut() {
        m.insert(rg.clone(), result.clone());
    }
    Ok(result)
}
