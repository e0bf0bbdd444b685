use std::collections::{BTreeMap, HashMap};

use super::{rational, tally_subsets, Method, Powers};
use crate::graphs::{EdgeKind, EdgeSubset, Graph, GraphLabel};
use crate::{Monomial, Poly, Result, Var};

fn x() -> Poly {
    Poly::var("x")
}

fn y() -> Poly {
    Poly::var("y")
}

/// The Tutte polynomial T(x, y).
pub fn tutte(g: &Graph, method: Method) -> Result<Poly> {
    let g = g.without_legs();
    match method {
        Method::SubsetSum => tutte_subsets(&g),
        Method::DeletionContraction { memoize } => {
            let mut memo = memoize.then(HashMap::new);
            Ok(tutte_dc(&g, &mut memo))
        }
    }
}

fn tutte_subsets(g: &Graph) -> Result<Poly> {
    let full_rank = g.rank(g.all_edges());
    let counts = tally_subsets(g.num_edges(), |a| (full_rank - g.rank(a), g.nullity(a)))?;
    let mut xs = Powers::new(x() - Poly::one());
    let mut ys = Powers::new(y() - Poly::one());
    let mut out = Poly::zero();
    for ((dr, n), c) in counts {
        out += (xs.get(dr) * ys.get(n)).scale(&rational(c));
    }
    Ok(out)
}

fn tutte_dc(g: &Graph, memo: &mut Option<HashMap<GraphLabel, Poly>>) -> Poly {
    let key = memo.as_ref().map(|_| g.canonical_form());
    if let (Some(m), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(p) = m.get(k) {
            return p.clone();
        }
    }
    let mut bridges = 0;
    let mut loops = 0;
    let mut regular = None;
    for i in g.edges_by_id() {
        match g.classify_edge(i) {
            EdgeKind::Bridge => bridges += 1,
            EdgeKind::SelfLoop => loops += 1,
            EdgeKind::Regular => {
                regular = Some(i);
                break;
            }
        }
    }
    let result = match regular {
        Some(e) => tutte_dc(&g.delete_edge_at(e), memo) + tutte_dc(&g.contract_edge_at(e), memo),
        None => x().pow(bridges) * y().pow(loops),
    };
    if let (Some(m), Some(k)) = (memo.as_mut(), key) {
        m.insert(k, result.clone());
    }
    result
}

/// Z(q, β) = Σ_A q^{k(A)} Π_{e∈A} β_e, with β_e named `b.<edge id>`.
pub fn multivariate_tutte(g: &Graph, method: Method) -> Result<Poly> {
    let g = g.without_legs();
    match method {
        Method::SubsetSum => {
            super::check_edges(g.num_edges())?;
            let betas: Vec<Var> = g.edges().iter().map(|e| Var::beta(&e.id)).collect();
            let q = Var::new("q");
            Ok(Poly::from_terms(EdgeSubset::all(g.num_edges()).map(|a| {
                let mut powers: Vec<(Var, u32)> = a.iter().map(|i| (betas[i].clone(), 1)).collect();
                powers.push((q.clone(), g.components(a) as u32));
                (Monomial::from_powers(powers), crate::Rational::from_integer(1.into()))
            })))
        }
        Method::DeletionContraction { memoize } => {
            // the variables name the edges, so only identical graphs may share entries
            let mut memo = memoize.then(HashMap::new);
            Ok(ztutte_dc(&g, &mut memo))
        }
    }
}

fn ztutte_dc(g: &Graph, memo: &mut Option<HashMap<Graph, Poly>>) -> Poly {
    if let Some(p) = memo.as_ref().and_then(|m| m.get(g)) {
        return p.clone();
    }
    let result = match g.edges_by_id().first() {
        None => Poly::var("q").pow(g.num_vertices() as u32),
        Some(&e) => {
            let beta = Poly::var(Var::beta(&g.edge(e).id));
            if g.edge(e).is_loop() {
                (Poly::one() + beta) * ztutte_dc(&g.delete_edge_at(e), memo)
            } else {
                ztutte_dc(&g.delete_edge_at(e), memo) + beta * ztutte_dc(&g.contract_edge_at(e), memo)
            }
        }
    };
    if let Some(m) = memo.as_mut() {
        m.insert(g.clone(), result.clone());
    }
    result
}

/// Checks q^{-|V|} Z(q, β) = (x−1)^{k(E)−|V|} T(x, y) under β_e = y−1,
/// q = (x−1)(y−1). Both sides are multiplied by (x−1)^{|V|}(y−1)^{|V|} so the
/// comparison stays inside the polynomial ring.
pub fn check_tutte_relation(g: &Graph) -> Result<bool> {
    let g = g.without_legs();
    let z = multivariate_tutte(&g, Method::SubsetSum)?;
    let t = tutte(&g, Method::SubsetSum)?;
    let (xm, ym) = (x() - Poly::one(), y() - Poly::one());
    let mut bind: BTreeMap<Var, Poly> =
        g.edges().iter().map(|e| (Var::beta(&e.id), ym.clone())).collect();
    bind.insert(Var::new("q"), &xm * &ym);
    let lhs = z.substitute(&bind);
    let v = g.num_vertices() as u32;
    let k = g.components(g.all_edges()) as u32;
    let rhs = xm.pow(k) * ym.pow(v) * t;
    Ok(lhs == rhs)
}
