//! Interchangeable engines, looked up by name.

use num_bigint::BigInt;

use crate::clique_sum::compose_tree_generators;
use crate::cut::exponent_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polytope::{facets_with_budget, placing_triangulation, pulling_triangulation, VPolytope};
use crate::toric::{
    groebner, markov_basis, markov_by_degree, markov_from_groebner, toric_groebner, GroebnerBasis, MarkovBasis,
    TermOrder, ToricConfig,
};

/// Computes a Gröbner basis of the cut ideal of a graph.
pub trait ToricEngine: Send + Sync {
    fn groebner(&self, g: &Graph, order: &TermOrder, cfg: &ToricConfig) -> Result<GroebnerBasis>;

    /// Minimal generators, by default read off the degrevlex basis.
    fn markov(&self, g: &Graph, cfg: &ToricConfig) -> Result<MarkovBasis> {
        let a = exponent_matrix(g)?;
        let gb = self.groebner(g, &TermOrder::degrevlex(a.ncols()), cfg)?;
        markov_from_groebner(&a, &gb)
    }
}

/// Computes the normalized volume of a lattice polytope.
pub trait VolumeMethod: Send + Sync {
    fn volume(&self, p: &VPolytope) -> Result<BigInt>;
}

/// Named trait objects, kept in registration order.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(&'static str, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry { kind, entries: Vec::new() }
    }

    /// Adds an entry, replacing any earlier one of the same name.
    pub fn register(&mut self, name: &'static str, item: Box<T>) {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, item));
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, x)| x.as_ref())
            .ok_or_else(|| Error::Unknown { kind: self.kind, name: name.to_string() })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }
}

/// Saturation of a lattice-basis ideal.
pub struct Saturation;

impl ToricEngine for Saturation {
    fn groebner(&self, g: &Graph, order: &TermOrder, cfg: &ToricConfig) -> Result<GroebnerBasis> {
        toric_groebner(&exponent_matrix(g)?, order, cfg)
    }
}

/// Splits the graph at cliques of size at most three, glues generating
/// sets of the pieces and runs Buchberger on the result.
pub struct CliqueSum;

impl ToricEngine for CliqueSum {
    fn groebner(&self, g: &Graph, order: &TermOrder, cfg: &ToricConfig) -> Result<GroebnerBasis> {
        let gens = compose_tree_generators(g, |piece| Ok(markov_basis(&exponent_matrix(piece)?, cfg)?.elements))?;
        groebner(&gens, 1 << (g.n() - 1), order, &cfg.gb)
    }
}

/// Minimal generators degree by degree from fiber connectivity, stopping
/// once they span a saturated ideal.
pub struct Fibers;

impl ToricEngine for Fibers {
    fn groebner(&self, g: &Graph, order: &TermOrder, cfg: &ToricConfig) -> Result<GroebnerBasis> {
        let mb = self.markov(g, cfg)?;
        let mut gb = groebner(&mb.elements, 1 << (g.n() - 1), order, &cfg.gb)?;
        if !mb.certified {
            gb.mark_uncertified();
        }
        Ok(gb)
    }

    fn markov(&self, g: &Graph, cfg: &ToricConfig) -> Result<MarkovBasis> {
        markov_by_degree(&exponent_matrix(g)?, cfg)
    }
}

/// Facet dimension bound for pulling; cut polytopes of graphs on six
/// vertices reach dimension 12.
pub const PULLING_MAX_DIM: usize = 12;

pub struct Pulling;

impl VolumeMethod for Pulling {
    fn volume(&self, p: &VPolytope) -> Result<BigInt> {
        let h = facets_with_budget(p, PULLING_MAX_DIM)?;
        let order: Vec<usize> = (0..p.num_vertices()).collect();
        Ok(pulling_triangulation(p, &h, &order)?.volume())
    }
}

pub struct Placing;

impl VolumeMethod for Placing {
    fn volume(&self, p: &VPolytope) -> Result<BigInt> {
        let order: Vec<usize> = (0..p.num_vertices()).collect();
        Ok(placing_triangulation(p, &order)?.volume())
    }
}

pub fn toric_engines() -> Registry<dyn ToricEngine> {
    let mut r: Registry<dyn ToricEngine> = Registry::new("engine");
    r.register("saturation", Box::new(Saturation));
    r.register("clique-sum", Box::new(CliqueSum));
    r.register("fibers", Box::new(Fibers));
    r
}

pub fn volume_methods() -> Registry<dyn VolumeMethod> {
    let mut r: Registry<dyn VolumeMethod> = Registry::new("volume method");
    r.register("pulling", Box::new(Pulling));
    r.register("placing", Box::new(Placing));
    r
}
