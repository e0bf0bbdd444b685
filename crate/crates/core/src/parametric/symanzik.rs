use std::collections::BTreeSet;

use super::momentum::{ExternalAssignment, Momentum};
use crate::graph_poly::{multivariate_tutte, Method};
use crate::graphs::{EdgeKind, EdgeSubset, Graph};
use crate::linalg::PolyMatrix;
use crate::{Error, Monomial, Poly, Rational, Result, Var};

fn require_connected(g: &Graph, op: &'static str) -> Result<()> {
    if g.num_vertices() == 0 || !g.is_connected() {
        return Err(Error::Disconnected { op });
    }
    Ok(())
}

fn alphas(g: &Graph) -> Vec<Var> {
    g.edges().iter().map(|e| Var::alpha(&e.id)).collect()
}

/// Π_{e∉A} α_e.
pub(crate) fn complement_monomial(g: &Graph, a: EdgeSubset) -> Monomial {
    Monomial::from_powers(
        a.complement(g.num_edges()).iter().map(|i| (Var::alpha(&g.edge(i).id), 1)),
    )
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// U = Σ over spanning trees T of Π_{e∉T} α_e.
pub fn symanzik_u(g: &Graph) -> Result<Poly> {
    require_connected(g, "symanzik_u")?;
    let trees = g.spanning_trees()?;
    Ok(Poly::from_terms(trees.into_iter().map(|t| (complement_monomial(g, t), one()))))
}

/// V = Σ over spanning two-trees of Π_{e∉T} α_e · (Σ sign·p)², the momentum sum
/// taken over the legs on `side` (0 or 1) of each two-tree.
pub fn symanzik_v_side(g: &Graph, ext: &ExternalAssignment, side: usize) -> Result<Poly> {
    require_connected(g, "symanzik_v")?;
    if side > 1 {
        return Err(Error::Precondition(format!("two-tree side must be 0 or 1, got {side}")));
    }
    let mut out = Poly::zero();
    for tt in g.spanning_two_trees()? {
        let p = tt.legs[side]
            .iter()
            .fold(Momentum::zero(), |acc, &l| &acc + &ext.signed(&g.legs()[l].id));
        out.add_term(complement_monomial(g, tt.edges), p.square());
    }
    Ok(out)
}

pub fn symanzik_v(g: &Graph, ext: &ExternalAssignment) -> Result<Poly> {
    symanzik_v_side(g, ext, 0)
}

/// U from det Q with Q = [[diag α, −ε], [−εᵀ, 0]] over the non-loop edges and
/// all vertices but `deleted_vertex`. Self-loops are peeled off as factors α_e,
/// and det Q = (−1)^{|V|−1} U.
pub fn symanzik_u_via_det(g: &Graph, deleted_vertex: usize) -> Result<Poly> {
    require_connected(g, "symanzik_u_via_det")?;
    if deleted_vertex >= g.num_vertices() {
        return Err(Error::Precondition(format!(
            "vertex column {deleted_vertex} out of range for {} vertices",
            g.num_vertices()
        )));
    }
    let al = alphas(g);
    let mut peeled = Poly::one();
    let mut rows = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            peeled = peeled * Poly::var(al[i].clone());
        } else {
            rows.push(i);
        }
    }
    let cols: Vec<usize> = (0..g.num_vertices()).filter(|&v| v != deleted_vertex).collect();
    let (m, n) = (rows.len(), cols.len());
    let inc = g.incidence_matrix();
    let mut q = PolyMatrix::<Rational>::zeros(m + n);
    for (r, &e) in rows.iter().enumerate() {
        q.set(r, r, Poly::var(al[e].clone()));
        for (c, &v) in cols.iter().enumerate() {
            let eps = Poly::int(-inc[e][v]);
            q.set(r, m + c, eps.clone());
            q.set(m + c, r, eps);
        }
    }
    let det = q.det();
    let sign = if n % 2 == 0 { Poly::one() } else { Poly::int(-1) };
    Ok(sign * det * peeled)
}

/// U(Γ) = α_e U(Γ−e) + U(Γ/e) on the lowest-id regular edge; a bridge gives
/// U(Γ) = U(Γ/e); a vertex carrying only self-loops gives Π α_e.
pub fn symanzik_u_delcon(g: &Graph) -> Result<Poly> {
    require_connected(g, "symanzik_u_delcon")?;
    Ok(u_dc(g))
}

fn u_dc(g: &Graph) -> Poly {
    let order = g.edges_by_id();
    let mut bridge = None;
    for &i in &order {
        match g.classify_edge(i) {
            EdgeKind::Regular => {
                let a = Poly::var(Var::alpha(&g.edge(i).id));
                return a * u_dc(&g.delete_edge_at(i)) + u_dc(&g.contract_edge_at(i));
            }
            EdgeKind::Bridge if bridge.is_none() => bridge = Some(i),
            _ => {}
        }
    }
    match bridge {
        Some(i) => u_dc(&g.contract_edge_at(i)),
        None => {
            debug_assert_eq!(g.num_vertices(), 1);
            Poly::from_terms([(complement_monomial(g, EdgeSubset::EMPTY), one())])
        }
    }
}

/// U recovered from the multivariate Tutte polynomial: keep the q^{k(Γ)} part,
/// keep its lowest degree in β (the spanning-tree polynomial), and replace each
/// Π_{e∈T} β_e by its complement Π_{e∉T} α_e.
pub fn u_from_multivariate_tutte(g: &Graph) -> Result<Poly> {
    require_connected(g, "u_from_multivariate_tutte")?;
    let z = multivariate_tutte(g, Method::SubsetSum)?;
    let k = g.components(g.all_edges()) as u32;
    let spanning = z.coefficient_of(&Var::new("q"), k);
    let betas: BTreeSet<Var> = g.edges().iter().map(|e| Var::beta(&e.id)).collect();
    let forests = spanning.lowest_homogeneous_part(&betas)?;
    let beta_to_edge: Vec<(Var, usize)> =
        g.edges().iter().enumerate().map(|(i, e)| (Var::beta(&e.id), i)).collect();
    forests.map_terms(|m, c| {
        let mut t = EdgeSubset::EMPTY;
        for (v, e) in m.powers() {
            let &(_, i) = beta_to_edge
                .iter()
                .find(|(b, _)| b == v)
                .ok_or_else(|| Error::Precondition(format!("unexpected variable {v}")))?;
            if *e != 1 {
                return Err(Error::Precondition(format!("{v} appears with power {e}")));
            }
            t.insert(i);
        }
        Ok((complement_monomial(g, t), c.clone()))
    })
}

/// The symbolic pieces of the parametric integrand e^{−V/U}/U² · e^{−m² Σα}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrand {
    pub u: Poly,
    pub v: Poly,
    pub mass_term: Poly,
}

pub fn parametric_integrand(g: &Graph, ext: &ExternalAssignment, m2: &Rational) -> Result<Integrand> {
    let u = symanzik_u(g)?;
    let v = symanzik_v(g, ext)?;
    let mass_term = alphas(g).into_iter().map(Poly::var).sum::<Poly>().scale(m2);
    Ok(Integrand { u, v, mass_term })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::LegDir;

    fn fig3() -> Graph {
        Graph::builder()
            .vertices(&["v1", "v2", "v3"])
            .edge("e1", "v1", "v2")
            .edge("e2", "v1", "v3")
            .edge("e3", "v3", "v2")
            .edge("e4", "v2", "v3")
            .leg("f1", "v1", LegDir::In)
            .leg("f2", "v1", LegDir::In)
            .leg("f3", "v3", LegDir::Out)
            .leg("f4", "v2", LegDir::Out)
            .build()
            .unwrap()
    }

    const FIG3_U: &str = "a.e1*a.e3 + a.e1*a.e4 + a.e2*a.e3 + a.e2*a.e4 + a.e3*a.e4";

    #[test]
    fn u_four_ways() {
        let g = fig3();
        assert_eq!(symanzik_u(&g).unwrap().canonical_string(), FIG3_U);
        for v in 0..3 {
            assert_eq!(symanzik_u_via_det(&g, v).unwrap().canonical_string(), FIG3_U);
        }
        assert_eq!(symanzik_u_delcon(&g).unwrap().canonical_string(), FIG3_U);
        assert_eq!(u_from_multivariate_tutte(&g).unwrap().canonical_string(), FIG3_U);
    }

    #[test]
    fn small_u_values() {
        let bridge = Graph::builder().vertices(&["a", "b"]).edge("e1", "a", "b").build().unwrap();
        let lp = Graph::builder().vertex("a").edge("e1", "a", "a").build().unwrap();
        let bl = Graph::builder()
            .vertices(&["a", "b"])
            .edge("e1", "a", "b")
            .edge("e2", "b", "b")
            .build()
            .unwrap();
        for f in [symanzik_u, symanzik_u_delcon, u_from_multivariate_tutte] {
            assert!(f(&bridge).unwrap().is_one());
            assert_eq!(f(&lp).unwrap().canonical_string(), "a.e1");
            assert_eq!(f(&bl).unwrap().canonical_string(), "a.e2");
        }
        assert!(symanzik_u_via_det(&bridge, 0).unwrap().is_one());
        assert_eq!(symanzik_u_via_det(&lp, 0).unwrap().canonical_string(), "a.e1");
    }

    #[test]
    fn v_of_fig3_with_unit_momenta() {
        let g = fig3();
        let ext = ExternalAssignment::with_graph_dirs(
            &g,
            [
                ("f1".to_string(), Momentum::unit(0)),
                ("f2".to_string(), Momentum::unit(1)),
                ("f3".to_string(), Momentum::unit(2)),
                ("f4".to_string(), Momentum::from_ints([1, 1, -1, 0])),
            ]
            .into(),
        )
        .unwrap();
        // (p1+p2)² = 2, p4² = 3, p3² = 1
        let v = symanzik_v(&g, &ext).unwrap();
        assert_eq!(
            v.canonical_string(),
            "2*a.e1*a.e2*a.e3 + 2*a.e1*a.e2*a.e4 + 3*a.e1*a.e3*a.e4 + a.e2*a.e3*a.e4"
        );
        assert_eq!(v, symanzik_v_side(&g, &ext, 1).unwrap());
        assert!(symanzik_v(&g, &ExternalAssignment::zero(&g)).unwrap().is_zero());
    }
}
