//! The fixture corpus shipped with the crate, embedded at compile time.

use crate::graphs::json::{parse_fixture, Fixture};
use crate::hopf::FeynGraph;
use crate::Result;

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// `(name, JSON text)` for every shipped fixture, sorted by name.
        pub const ALL: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*
        ];
    };
}

fixtures!(
    "bridge",
    "fig3",
    "fig4",
    "fig4_ribbon",
    "fig5",
    "fig6",
    "interleaved",
    "nested",
    "parallel",
    "ribbon_chain",
    "ribbon_irregular",
    "tadpole",
    "twobubble",
    "twobubble_ribbon",
);

/// External momenta for fig3: unit vectors on f1, f2, f3 and the balancing f4.
pub const FIG3_MOMENTA: &str = include_str!("../fixtures/fig3_momenta.json");

/// Graph fixtures used by the Hopf-algebra checks under the phi4 and core models.
pub const HOPF_GRAPHS: &[&str] = &["fig4", "fig5", "nested", "twobubble"];

/// Ribbon fixtures used under the gw model.
pub const HOPF_RIBBONS: &[&str] = &["fig4_ribbon", "ribbon_chain", "ribbon_irregular", "twobubble_ribbon"];

/// Ribbon fixtures for the noncommutative parametric polynomials.
pub const MOYAL: &[&str] = &["tadpole", "interleaved", "bridge", "parallel", "fig6"];

pub fn text(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a shipped fixture; panics on an unknown name, since the corpus is fixed.
pub fn load(name: &str) -> Fixture {
    let t = text(name).unwrap_or_else(|| panic!("no fixture named {name}"));
    parse_fixture(t).expect("shipped fixtures parse")
}

pub fn feyn(name: &str) -> FeynGraph {
    to_feyn(load(name))
}

pub fn to_feyn(f: Fixture) -> FeynGraph {
    match f {
        Fixture::Graph(g) => FeynGraph::Plain(g),
        Fixture::Ribbon(r) => FeynGraph::Ribbon(r),
    }
}

pub fn parse(text: &str) -> Result<Fixture> {
    parse_fixture(text)
}
