use std::collections::BTreeMap;

use super::{tutte, Method};
use crate::graphs::Graph;
use crate::{Error, Poly, Result, Var};

fn require_connected(g: &Graph, op: &'static str) -> Result<()> {
    if g.num_vertices() == 0 || !g.is_connected() {
        return Err(Error::Disconnected { op });
    }
    Ok(())
}

fn sign(e: usize) -> Poly {
    Poly::int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// P(k) = (−1)^{|V|−1} k T(1−k, 0).
pub fn chromatic(g: &Graph, method: Method) -> Result<Poly> {
    require_connected(g, "chromatic")?;
    let t = tutte(g, method)?;
    let k = Poly::var("k");
    let bind = BTreeMap::from([(Var::new("x"), Poly::one() - k.clone()), (Var::new("y"), Poly::zero())]);
    Ok(sign(g.num_vertices() - 1) * k * t.substitute(&bind))
}

/// F(k) = (−1)^{|E|−|V|+1} T(0, 1−k).
pub fn flow_poly(g: &Graph, method: Method) -> Result<Poly> {
    require_connected(g, "flow_poly")?;
    let t = tutte(g, method)?;
    let k = Poly::var("k");
    let bind = BTreeMap::from([(Var::new("x"), Poly::zero()), (Var::new("y"), Poly::one() - k)]);
    Ok(sign(g.num_edges() + 1 - g.num_vertices()) * t.substitute(&bind))
}

/// Proper k-colourings, by trying every assignment.
pub fn count_colorings(g: &Graph, k: u32) -> u64 {
    let n = g.num_vertices();
    let mut colour = vec![0u32; n];
    let mut count = 0;
    if k == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    loop {
        if g.edges().iter().all(|e| colour[e.tail] != colour[e.head]) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
    }
}

/// Nowhere-zero Z_k flows, by trying every assignment of nonzero values.
pub fn count_flows(g: &Graph, k: u32) -> u64 {
    if k < 2 {
        return if g.num_edges() == 0 { 1 } else { 0 };
    }
    let m = g.num_edges();
    let k = k as i64;
    let mut value = vec![1i64; m];
    let mut count = 0;
    loop {
        let mut net = vec![0i64; g.num_vertices()];
        for (e, &v) in g.edges().iter().zip(&value) {
            net[e.tail] -= v;
            net[e.head] += v;
        }
        if net.iter().all(|x| x.rem_euclid(k) == 0) {
            count += 1;
        }
        let mut i = 0;
        while i < m {
            value[i] += 1;
            if value[i] < k {
                break;
            }
            value[i] = 1;
            i += 1;
        }
        if i == m {
            return count;
        }
    }
}
