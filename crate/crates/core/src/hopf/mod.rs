//! Connes–Kreimer Hopf algebra of 1PI graphs and BPHZ renormalization.
//!
//! Generators are isomorphism classes ([`Label`]s) of connected 1PI graphs. A
//! [`Hopf`] value fixes the divergence model and memoizes the coproduct,
//! antipode and twisted antipode per label. Divergent subgraphs are edge
//! subsets; a family is a set of pairwise vertex-disjoint divergent subgraphs,
//! and a Zimmermann forest is a set whose members are pairwise nested or
//! vertex-disjoint.

mod algebra;
mod amplitude;
mod feyn;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

pub use algebra::{GraphMonomial, GraphSum, Tensor3, TensorSum};
pub use amplitude::{AmpMonomial, Atom, FormalAmplitude};
pub use feyn::{bare_vertex, insert, FeynGraph, Label, Site};

use crate::graphs::EdgeSubset;
use crate::{Error, Result};

/// Which subgraphs count as superficially divergent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivergenceModel {
    /// Connected 1PI subgraphs with two or four legs.
    Phi4,
    /// As `Phi4`, and the sub-ribbon graph is planar regular.
    GwRibbon,
    /// Every connected 1PI subgraph.
    Core,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HopfConfig {
    /// Sum over products of disjoint subgraphs, not only single subgraphs.
    /// Turning this off breaks coassociativity as soon as two disjoint
    /// divergences exist.
    pub allow_products: bool,
    /// Count one-vertex subgraphs (tadpoles) as divergent.
    pub include_tadpoles: bool,
}

impl Default for HopfConfig {
    fn default() -> Self {
        HopfConfig { allow_products: true, include_tadpoles: true }
    }
}

/// Which map a convolution factor applies to each generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    /// u∘ε: 1 on the unit, 0 on every generator.
    Counit,
    /// The Feynman rules, Γ ↦ Phi(Γ).
    Phi,
    /// The twisted antipode φ₋.
    PhiMinus,
}

/// Proper part of a coproduct: γ ⊗ Γ/γ over the families γ.
type Splits = Arc<Vec<(GraphMonomial, Label)>>;

/// The Hopf algebra for one divergence model, with its memo tables.
pub struct Hopf {
    model: DivergenceModel,
    config: HopfConfig,
    registry: Mutex<BTreeMap<Label, FeynGraph>>,
    splits: Mutex<HashMap<Label, Splits>>,
    antipodes: Mutex<HashMap<Label, GraphSum>>,
    phi_minus: Mutex<HashMap<Label, FormalAmplitude>>,
}

impl Hopf {
    pub fn new(model: DivergenceModel) -> Self {
        Self::with_config(model, HopfConfig::default())
    }

    pub fn with_config(model: DivergenceModel, config: HopfConfig) -> Self {
        Hopf {
            model,
            config,
            registry: Mutex::new(BTreeMap::new()),
            splits: Mutex::new(HashMap::new()),
            antipodes: Mutex::new(HashMap::new()),
            phi_minus: Mutex::new(HashMap::new()),
        }
    }

    pub fn model(&self) -> DivergenceModel {
        self.model
    }

    pub fn config(&self) -> HopfConfig {
        self.config
    }

    /// Validates an input graph. The commutative models forget a rotation
    /// system: shrinking a subgraph with several broken faces has no canonical
    /// cyclic order, so only the gw model works with ribbon structure.
    fn prepare(&self, g: &FeynGraph) -> Result<FeynGraph> {
        if !g.graph().is_one_pi() {
            return Err(Error::NotOnePi { op: "hopf" });
        }
        g.graph().check_enumerable()?;
        match (self.model, g) {
            (DivergenceModel::GwRibbon, FeynGraph::Plain(_)) => {
                Err(Error::Precondition("the gw model needs a ribbon graph".into()))
            }
            (DivergenceModel::GwRibbon, _) => Ok(g.clone()),
            (_, FeynGraph::Ribbon(r)) => Ok(FeynGraph::Plain(r.graph().clone())),
            (_, FeynGraph::Plain(_)) => Ok(g.clone()),
        }
    }

    /// Records `g` as the representative of its class; the first one wins.
    fn intern(&self, g: &FeynGraph) -> Label {
        let l = g.label();
        self.registry.lock().expect("registry lock").entry(l.clone()).or_insert_with(|| g.clone());
        l
    }

    /// Validates a 1PI input and returns its generator.
    pub fn register(&self, g: &FeynGraph) -> Result<Label> {
        Ok(self.intern(&self.prepare(g)?))
    }

    /// The representative graph of a registered label.
    pub fn representative(&self, l: &Label) -> Option<FeynGraph> {
        self.registry.lock().expect("registry lock").get(l).cloned()
    }

    /// Every label seen so far with its representative.
    pub fn registry(&self) -> BTreeMap<Label, FeynGraph> {
        self.registry.lock().expect("registry lock").clone()
    }

    fn rep(&self, l: &Label) -> Result<FeynGraph> {
        self.representative(l).ok_or_else(|| Error::Precondition(format!("unregistered generator {l}")))
    }

    /// Loop number.
    pub fn grading(&self, l: &Label) -> Result<usize> {
        Ok(self.rep(l)?.loop_number())
    }

    pub fn grading_monomial(&self, m: &GraphMonomial) -> Result<usize> {
        m.labels().iter().map(|l| self.grading(l)).sum()
    }

    fn is_divergent(&self, g: &FeynGraph, a: EdgeSubset) -> bool {
        let gr = g.graph();
        if a.is_empty() || a == gr.all_edges() || !gr.subset_is_connected(a) || !gr.subset_is_bridgeless(a) {
            return false;
        }
        if !self.config.include_tadpoles && gr.vertices_of(a).len() == 1 {
            return false;
        }
        let legs = gr.subgraph_leg_count(a);
        match self.model {
            DivergenceModel::Core => true,
            DivergenceModel::Phi4 => legs == 2 || legs == 4,
            DivergenceModel::GwRibbon => {
                (legs == 2 || legs == 4)
                    && g.ribbon().is_some_and(|r| r.subgraph(a).is_planar_regular())
            }
        }
    }

    /// Proper divergent connected subgraphs, in increasing bit order.
    pub fn divergent_subgraphs(&self, g: &FeynGraph) -> Result<Vec<EdgeSubset>> {
        let g = &self.prepare(g)?;
        Ok(EdgeSubset::all(g.graph().num_edges()).filter(|&a| self.is_divergent(g, a)).collect())
    }

    /// Nonempty sets of pairwise vertex-disjoint divergent subgraphs (single
    /// subgraphs only when products are switched off).
    pub fn families(&self, g: &FeynGraph) -> Result<Vec<Vec<EdgeSubset>>> {
        let d = self.divergent_subgraphs(g)?;
        let gr = g.graph();
        // 1PI with at most MAX_ENUM_EDGES edges, so fewer than 64 vertices
        let vmask: Vec<u64> = d.iter().map(|&a| gr.vertices_of(a).iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        if !self.config.allow_products {
            return Ok(d.into_iter().map(|a| vec![a]).collect());
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(i: usize, used: u64, d: &[EdgeSubset], vm: &[u64], stack: &mut Vec<usize>, out: &mut Vec<Vec<EdgeSubset>>) {
            for j in i..d.len() {
                if used & vm[j] == 0 {
                    stack.push(j);
                    out.push(stack.iter().map(|&k| d[k]).collect());
                    rec(j + 1, used | vm[j], d, vm, stack, out);
                    stack.pop();
                }
            }
        }
        rec(0, 0, &d, &vmask, &mut stack, &mut out);
        Ok(out)
    }

    fn splits(&self, l: &Label) -> Result<Splits> {
        if let Some(s) = self.splits.lock().expect("splits lock").get(l) {
            return Ok(s.clone());
        }
        let g = self.rep(l)?;
        let mut v = Vec::new();
        for fam in self.families(&g)? {
            let left = GraphMonomial::from_labels(fam.iter().map(|&a| self.intern(&g.subgraph(a))).collect());
            v.push((left, self.intern(&g.cograph(&fam))));
        }
        let s = Arc::new(v);
        self.splits.lock().expect("splits lock").insert(l.clone(), s.clone());
        Ok(s)
    }

    /// Δ of a registered generator.
    pub fn coproduct_label(&self, l: &Label) -> Result<TensorSum> {
        let mut t = TensorSum::zero();
        let g = GraphMonomial::single(l.clone());
        t.add_term(g.clone(), GraphMonomial::one(), 1);
        t.add_term(GraphMonomial::one(), g, 1);
        for (left, right) in self.splits(l)?.iter() {
            t.add_term(left.clone(), GraphMonomial::single(right.clone()), 1);
        }
        Ok(t)
    }

    /// Δ extended multiplicatively; Δ(1) = 1 ⊗ 1.
    pub fn coproduct_monomial(&self, m: &GraphMonomial) -> Result<TensorSum> {
        m.labels().iter().try_fold(TensorSum::one(), |acc, l| Ok(acc.mul(&self.coproduct_label(l)?)))
    }

    pub fn coproduct_sum(&self, x: &GraphSum) -> Result<TensorSum> {
        let mut out = TensorSum::zero();
        for (m, c) in x.terms() {
            for (a, b, d) in self.coproduct_monomial(m)?.terms() {
                out.add_term(a.clone(), b.clone(), c * d);
            }
        }
        Ok(out)
    }

    /// ΔΓ = Γ ⊗ 1 + 1 ⊗ Γ + Σ γ ⊗ Γ/γ.
    pub fn coproduct(&self, g: &FeynGraph) -> Result<TensorSum> {
        let l = self.register(g)?;
        self.coproduct_label(&l)
    }

    /// S(Γ) = −Γ − Σ S(γ) Γ/γ.
    pub fn antipode_label(&self, l: &Label) -> Result<GraphSum> {
        if let Some(s) = self.antipodes.lock().expect("antipode lock").get(l) {
            return Ok(s.clone());
        }
        let mut s = GraphSum::generator(l.clone()).scale(-1);
        for (left, right) in self.splits(l)?.iter() {
            let term = &self.antipode_monomial(left)? * &GraphSum::generator(right.clone());
            s = &s - &term;
        }
        self.antipodes.lock().expect("antipode lock").insert(l.clone(), s.clone());
        Ok(s)
    }

    /// S is an algebra map on the commutative algebra; S(1) = 1.
    pub fn antipode_monomial(&self, m: &GraphMonomial) -> Result<GraphSum> {
        m.labels().iter().try_fold(GraphSum::one(), |acc, l| Ok(&acc * &self.antipode_label(l)?))
    }

    pub fn antipode_sum(&self, x: &GraphSum) -> Result<GraphSum> {
        let mut out = GraphSum::zero();
        for (m, c) in x.terms() {
            out = &out + &self.antipode_monomial(m)?.scale(c);
        }
        Ok(out)
    }

    pub fn antipode(&self, g: &FeynGraph) -> Result<GraphSum> {
        let l = self.register(g)?;
        self.antipode_label(&l)
    }

    /// (Δ⊗id)Δ and (id⊗Δ)Δ of a generator.
    pub fn coassociativity_sides(&self, l: &Label) -> Result<(Tensor3, Tensor3)> {
        let (mut lhs, mut rhs) = (Tensor3::default(), Tensor3::default());
        for (a, b, c) in self.coproduct_label(l)?.terms() {
            for (x, y, d) in self.coproduct_monomial(a)?.terms() {
                lhs.add_term(x.clone(), y.clone(), b.clone(), c * d);
            }
            for (x, y, d) in self.coproduct_monomial(b)?.terms() {
                rhs.add_term(a.clone(), x.clone(), y.clone(), c * d);
            }
        }
        Ok((lhs, rhs))
    }

    pub fn check_coassociativity(&self, g: &FeynGraph) -> Result<bool> {
        let l = self.register(g)?;
        let (lhs, rhs) = self.coassociativity_sides(&l)?;
        Ok(lhs == rhs)
    }

    /// m∘(S⊗id)∘Δ = u∘ε = m∘(id⊗S)∘Δ on Γ, where u∘ε(Γ) = 0.
    pub fn check_hopf_axioms(&self, g: &FeynGraph) -> Result<bool> {
        let l = self.register(g)?;
        self.check_hopf_axioms_monomial(&GraphMonomial::single(l))
    }

    pub fn check_hopf_axioms_monomial(&self, m: &GraphMonomial) -> Result<bool> {
        let expected = GraphSum::monomial(GraphMonomial::one(), counit_monomial(m));
        let (mut left, mut right) = (GraphSum::zero(), GraphSum::zero());
        for (a, b, c) in self.coproduct_monomial(m)?.terms() {
            let (ga, gb) = (GraphSum::monomial(a.clone(), 1), GraphSum::monomial(b.clone(), 1));
            left = &left + &(&self.antipode_monomial(a)? * &gb).scale(c);
            right = &right + &(&ga * &self.antipode_monomial(b)?).scale(c);
        }
        Ok(left == expected && right == expected)
    }

    /// (ε⊗id)Δ = id = (id⊗ε)Δ on Γ.
    pub fn check_counit(&self, g: &FeynGraph) -> Result<bool> {
        let l = self.register(g)?;
        let (mut left, mut right) = (GraphSum::zero(), GraphSum::zero());
        for (a, b, c) in self.coproduct_label(&l)?.terms() {
            left.add_term(b.clone(), c * counit_monomial(a));
            right.add_term(a.clone(), c * counit_monomial(b));
        }
        let id = GraphSum::generator(l);
        Ok(left == id && right == id)
    }

    /// Every term γ ⊗ Γ/γ of ΔΓ splits the loop number of Γ.
    pub fn check_grading(&self, g: &FeynGraph) -> Result<bool> {
        let l = self.register(g)?;
        let n = self.grading(&l)?;
        for (a, b, _) in self.coproduct_label(&l)?.terms() {
            if self.grading_monomial(a)? + self.grading_monomial(b)? != n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All Zimmermann forests, the empty one first.
    pub fn zimmermann_forests(&self, g: &FeynGraph) -> Result<Vec<Vec<EdgeSubset>>> {
        let d = self.divergent_subgraphs(g)?;
        let gr = g.graph();
        let verts: Vec<Vec<usize>> = d.iter().map(|&a| gr.vertices_of(a)).collect();
        let n = d.len();
        let compatible: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        d[i].is_subset_of(d[j])
                            || d[j].is_subset_of(d[i])
                            || verts[i].iter().all(|v| !verts[j].contains(v))
                    })
                    .collect()
            })
            .collect();
        let mut out = vec![Vec::new()];
        let mut stack: Vec<usize> = Vec::new();
        fn rec(i: usize, c: &[Vec<bool>], d: &[EdgeSubset], stack: &mut Vec<usize>, out: &mut Vec<Vec<EdgeSubset>>) {
            for j in i..d.len() {
                if stack.iter().all(|&k| c[k][j]) {
                    stack.push(j);
                    out.push(stack.iter().map(|&k| d[k]).collect());
                    rec(j + 1, c, d, stack, out);
                    stack.pop();
                }
            }
        }
        rec(0, &compatible, &d, &mut stack, &mut out);
        Ok(out)
    }

    /// The term of one forest: Phi(Γ/M) Π_{γ∈M} (−T[term of γ with the members
    /// strictly inside it]), M the maximal members.
    fn forest_term(&self, g: &FeynGraph, forest: &[EdgeSubset]) -> Result<FormalAmplitude> {
        let maximal: Vec<EdgeSubset> = forest
            .iter()
            .copied()
            .filter(|&a| !forest.iter().any(|&b| b != a && a.is_subset_of(b)))
            .collect();
        let mut out = FormalAmplitude::phi(self.intern(&g.cograph(&maximal)));
        for &m in &maximal {
            let sub = g.subgraph(m);
            let inner: Vec<EdgeSubset> = forest
                .iter()
                .filter(|&&b| b != m && b.is_subset_of(m))
                .map(|&b| {
                    let ids = g.graph().edge_ids(b);
                    sub.graph().subset_from_ids(&ids).expect("nested subgraph lives in its parent")
                })
                .collect();
            let counter = self.forest_term(&sub, &inner)?.t().scale(-1);
            out = &out * &counter;
        }
        Ok(out)
    }

    /// R̄(Γ) = Σ_F Π_{γ∈F} (−τ_γ) φ(Γ).
    pub fn bogoliubov_forest(&self, g: &FeynGraph) -> Result<FormalAmplitude> {
        let g = &self.prepare(g)?;
        self.intern(g);
        let mut out = FormalAmplitude::zero();
        for f in self.zimmermann_forests(g)? {
            out = &out + &self.forest_term(g, &f)?;
        }
        Ok(out)
    }

    fn phi_minus_label(&self, l: &Label) -> Result<FormalAmplitude> {
        if let Some(a) = self.phi_minus.lock().expect("phi_minus lock").get(l) {
            return Ok(a.clone());
        }
        let a = self.rbar_label(l)?.t().scale(-1);
        self.phi_minus.lock().expect("phi_minus lock").insert(l.clone(), a.clone());
        Ok(a)
    }

    /// R̄(Γ) = φ(Γ) + Σ φ₋(γ) φ(Γ/γ).
    fn rbar_label(&self, l: &Label) -> Result<FormalAmplitude> {
        let mut out = FormalAmplitude::phi(l.clone());
        for (left, right) in self.splits(l)?.iter() {
            let pm = self.character(Character::PhiMinus, left)?;
            out = &out + &(&pm * &FormalAmplitude::phi(right.clone()));
        }
        Ok(out)
    }

    /// A character evaluated on a monomial, extended multiplicatively.
    pub fn character(&self, c: Character, m: &GraphMonomial) -> Result<FormalAmplitude> {
        m.labels().iter().try_fold(FormalAmplitude::one(), |acc, l| {
            let f = match c {
                Character::Counit => FormalAmplitude::zero(),
                Character::Phi => FormalAmplitude::phi(l.clone()),
                Character::PhiMinus => self.phi_minus_label(l)?,
            };
            Ok(&acc * &f)
        })
    }

    /// φ₋(Γ) = −T[φ(Γ) + Σ φ₋(γ) φ(Γ/γ)].
    pub fn twisted_antipode(&self, g: &FeynGraph) -> Result<FormalAmplitude> {
        let l = self.register(g)?;
        self.phi_minus_label(&l)
    }

    pub fn bogoliubov_hopf(&self, g: &FeynGraph) -> Result<FormalAmplitude> {
        let l = self.register(g)?;
        self.rbar_label(&l)
    }

    /// (f ∗ g)(x) = m∘(f⊗g)∘Δ(x).
    pub fn convolution(&self, f: Character, g: Character, x: &GraphMonomial) -> Result<FormalAmplitude> {
        let mut out = FormalAmplitude::zero();
        for (a, b, c) in self.coproduct_monomial(x)?.terms() {
            out = &out + &(&self.character(f, a)? * &self.character(g, b)?).scale(c);
        }
        Ok(out)
    }

    /// φ₊ = φ₋ ∗ φ.
    pub fn renormalized(&self, g: &FeynGraph) -> Result<FormalAmplitude> {
        let l = self.register(g)?;
        self.convolution(Character::PhiMinus, Character::Phi, &GraphMonomial::single(l))
    }
}

/// ε(1) = 1, ε(Γ) = 0.
pub fn counit_monomial(m: &GraphMonomial) -> i64 {
    i64::from(m.is_one())
}

pub fn counit(x: &GraphSum) -> i64 {
    x.coefficient(&GraphMonomial::one())
}

/// Legs of the subgraph spanned by `a`: the half-edges leaving it.
pub fn subgraph_external_legs(g: &FeynGraph, a: EdgeSubset) -> usize {
    g.graph().subgraph_leg_count(a)
}
