//! The Tutte family on graphs and the Bollobás–Riordan family on ribbon graphs.
//!
//! Every polynomial has two engines: a sum over all edge subsets, which is the
//! definition, and a deletion/contraction recursion. They are kept independent
//! so that each can check the other. External legs are ignored throughout.

mod br;
mod counting;
mod tutte;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

pub use br::{bollobas_riordan, multivariate_br};
pub use counting::{chromatic, count_colorings, count_flows, flow_poly};
pub use tutte::{check_tutte_relation, multivariate_tutte, tutte};

use crate::graphs::{EdgeSubset, MAX_ENUM_EDGES};
use crate::{Error, Poly, Rational, Result};

/// How a polynomial is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Sum over all edge subsets.
    SubsetSum,
    /// Deletion/contraction down to terminal forms. With `memoize`, results are
    /// cached by isomorphism class where the polynomial depends only on it.
    DeletionContraction { memoize: bool },
}

impl Method {
    pub const DELCON: Method = Method::DeletionContraction { memoize: true };
}

pub(crate) fn check_edges(n: usize) -> Result<()> {
    if n > MAX_ENUM_EDGES {
        return Err(Error::TooManyEdges { edges: n, max: MAX_ENUM_EDGES });
    }
    Ok(())
}

/// Tallies `key(A)` over every subset `A` of `n` edges, in parallel.
/// Counts are exact, so the merge order does not affect the result.
pub(crate) fn tally_subsets<K, F>(n: usize, key: F) -> Result<BTreeMap<K, u64>>
where
    K: Ord + Send,
    F: Fn(EdgeSubset) -> K + Sync,
{
    check_edges(n)?;
    let total = 1u64 << n;
    let chunk = (total / 256).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    Ok(starts
        .into_par_iter()
        .map(|s| {
            let mut m = BTreeMap::new();
            for bits in s..(s + chunk).min(total) {
                *m.entry(key(EdgeSubset(bits))).or_insert(0u64) += 1;
            }
            m
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_insert(0) += c;
            }
            a
        }))
}

pub(crate) fn rational(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^e`, cached by exponent.
pub(crate) struct Powers {
    base: Poly,
    cache: Vec<Poly>,
}

impl Powers {
    pub(crate) fn new(base: Poly) -> Self {
        Powers { base, cache: vec![Poly::one()] }
    }

    pub(crate) fn get(&mut self, e: usize) -> &Poly {
        while self.cache.len() <= e {
            let next = self.cache.last().unwrap() * &self.base;
            self.cache.push(next);
        }
        &self.cache[e]
    }
}
