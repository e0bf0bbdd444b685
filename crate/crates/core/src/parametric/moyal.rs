use super::momentum::{ExternalAssignment, Momentum};
use super::symanzik::complement_monomial;
use super::theta::{theta, ThetaTracked};
use crate::graph_poly::{multivariate_br, Method};
use crate::graphs::{EdgeSubset, Face, RibbonGraph};
use crate::{Error, Poly, Rational, Result, Var};

fn require_connected(rg: &RibbonGraph, op: &'static str) -> Result<()> {
    if rg.num_vertices() == 0 || !rg.graph().is_connected() {
        return Err(Error::Disconnected { op });
    }
    Ok(())
}

/// b = F − 1 + 2g for the whole ribbon graph.
fn b_exponent(rg: &RibbonGraph) -> i64 {
    rg.faces().len() as i64 - 1 + 2 * rg.genus() as i64
}

fn alpha_term(rg: &RibbonGraph, t: EdgeSubset) -> Poly {
    Poly::term(Rational::from_integer(1.into()), complement_monomial(rg.graph(), t))
}

/// Exponent of θ/2 carried by a subgraph T: b + extra − (E − |T|).
fn theta_exponent(rg: &RibbonGraph, t: EdgeSubset, extra: i64) -> Result<i64> {
    let e = b_exponent(rg) + extra - (rg.num_edges() as i64 - t.len() as i64);
    if e < 0 {
        return Err(Error::NegativeThetaPower(format!(
            "subgraph {:?} needs (θ/2)^{e}",
            rg.graph().edge_ids(t)
        )));
    }
    Ok(e)
}

/// U* = (θ/2)^b Σ_{quasi-trees T} Π_{e∉T} 2α_e/θ, expanded so that each
/// quasi-tree contributes (θ/2)^{b−E+|T|} Π_{e∉T} α_e.
pub fn nc_u(rg: &RibbonGraph) -> Result<ThetaTracked> {
    require_connected(rg, "nc_u")?;
    let mut parts = Vec::new();
    for t in rg.quasi_trees()? {
        parts.push((alpha_term(rg, t), theta_exponent(rg, t, 0)?));
    }
    Ok(ThetaTracked::plain(ThetaTracked::from_parts(parts).to_poly()?))
}

/// U*(Γ) = α_e U*(Γ−e) + U*(Γ/e) on the lowest-id non-loop edge; U* vanishes on
/// disconnected graphs, so a bridge only contracts. One-vertex graphs are
/// evaluated by [`nc_u`].
pub fn nc_u_delcon(rg: &RibbonGraph) -> Result<ThetaTracked> {
    require_connected(rg, "nc_u_delcon")?;
    Ok(ThetaTracked::plain(u_star_dc(rg)?))
}

fn u_star_dc(rg: &RibbonGraph) -> Result<Poly> {
    let g = rg.graph();
    if !g.is_connected() {
        return Ok(Poly::zero());
    }
    let Some(e) = g.edges_by_id().into_iter().find(|&i| !g.edge(i).is_loop()) else {
        return nc_u(rg)?.to_poly();
    };
    let contracted = u_star_dc(&rg.contract_edge_at(e)?)?;
    let deleted = u_star_dc(&rg.delete_edge_at(e))?;
    Ok(Poly::var(Var::alpha(&g.edge(e).id)) * deleted + contracted)
}

/// U* from the multivariate Bollobás–Riordan polynomial:
/// (θ/2)^{|V|−1} Π_e α_e · [w¹] Z(1, θ/(2α_e), w).
///
/// The substitution β_e ↦ θ/(2α_e) is done on exponents: a term Π_{e∈H} β_e
/// becomes (θ/2)^{|H|} Π_{e∉H} α_e once multiplied by Π_e α_e.
pub fn nc_u_from_multivariate_br(rg: &RibbonGraph) -> Result<ThetaTracked> {
    require_connected(rg, "nc_u_from_multivariate_br")?;
    let g = rg.graph();
    let z = multivariate_br(rg, Method::SubsetSum)?;
    let at_x1 = z.substitute(&[(Var::new("x"), Poly::one())].into());
    let single_face = at_x1.coefficient_of(&Var::new("z"), 1);
    let mut parts = Vec::new();
    for (m, c) in single_face.terms() {
        let mut h = EdgeSubset::EMPTY;
        for (v, _) in m.powers() {
            let id = v.name().strip_prefix("b.").ok_or_else(|| {
                Error::Precondition(format!("unexpected variable {v} in the multivariate BR polynomial"))
            })?;
            h.insert(g.edge_index(id)?);
        }
        parts.push((alpha_term(rg, h).scale(c), h.len() as i64));
    }
    let summed = ThetaTracked::from_parts(parts);
    Ok(ThetaTracked { payload: summed.payload, shift: summed.shift + 1 - g.num_vertices() as i64 })
}

/// θ ↦ 0 in U*.
pub fn commutative_limit(rg: &RibbonGraph) -> Result<Poly> {
    nc_u(rg)?.commutative_limit()
}

fn face_momentum(rg: &RibbonGraph, ext: &ExternalAssignment, face: &Face) -> Momentum {
    face.legs()
        .fold(Momentum::zero(), |acc, l| &acc + &ext.signed(&rg.graph().legs()[l].id))
}

/// Re V* = (θ/2)^{b+1} Σ_{two-quasi-trees T} Π_{e∉T} (2α_e/θ) · p_T², where p_T
/// is the momentum entering face `face` (0 or 1) of T.
pub fn nc_v_real(rg: &RibbonGraph, ext: &ExternalAssignment, face: usize) -> Result<ThetaTracked> {
    require_connected(rg, "nc_v_real")?;
    if face > 1 {
        return Err(Error::Precondition(format!("face choice must be 0 or 1, got {face}")));
    }
    let mut parts = Vec::new();
    for t in rg.two_quasi_trees()? {
        let p = face_momentum(rg, ext, &t.faces[face]);
        parts.push((alpha_term(rg, t.edges).scale(&p.square()), theta_exponent(rg, t.edges, 1)?));
    }
    Ok(ThetaTracked::plain(ThetaTracked::from_parts(parts).to_poly()?))
}

/// ψ = Σ_{i<j} (ε̃_i p_i) ∧ (ε̃_j p_j) along the boundary of `face`, reading the
/// legs from position `start` of the boundary order.
pub fn face_phase(rg: &RibbonGraph, ext: &ExternalAssignment, face: &Face, start: usize) -> Rational {
    let order = rg.face_boundary_order(face);
    if order.is_empty() {
        return Rational::from_integer(0.into());
    }
    let signed: Vec<Momentum> = (0..order.len())
        .map(|k| {
            let l = order[(start + k) % order.len()].0;
            ext.signed(&rg.graph().legs()[l].id)
        })
        .collect();
    let mut psi = Rational::from_integer(0.into());
    for i in 0..signed.len() {
        for j in i + 1..signed.len() {
            psi += signed[i].wedge(&signed[j]);
        }
    }
    psi
}

/// Im V* = Σ_{quasi-trees T} (θ/2)^{b−E+|T|} Π_{e∉T} α_e · ψ_T, ψ_T read along
/// the single face of T starting `start` legs after the smallest leg id.
pub fn nc_v_imag(rg: &RibbonGraph, ext: &ExternalAssignment, start: usize) -> Result<ThetaTracked> {
    require_connected(rg, "nc_v_imag")?;
    let mut parts = Vec::new();
    for t in rg.quasi_trees()? {
        let faces = rg.faces_of(t);
        debug_assert_eq!(faces.len(), 1);
        let psi = face_phase(rg, ext, &faces[0], start);
        parts.push((alpha_term(rg, t).scale(&psi), theta_exponent(rg, t, 0)?));
    }
    Ok(ThetaTracked::plain(ThetaTracked::from_parts(parts).to_poly()?))
}

/// θ appears in U*, V* only through (θ/2) powers; this is the largest one.
pub fn theta_degree(p: &Poly) -> u32 {
    p.degree_in(&theta())
}
