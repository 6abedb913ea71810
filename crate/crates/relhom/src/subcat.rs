//! Additively generated subcategories and their approximations.
//!
//! The realized class is add(generators): finite direct sums of generators
//! and their summands. The evaluation map ⊕_G G^{dim Hom(G,m)} -> m is a
//! right approximation by construction, which makes contravariant finiteness
//! automatic; admissibility (every right approximation epic) is a property to
//! verify against a corpus.

use crate::module::{hom_basis, Module, Morphism};
use crate::summand::{add_membership, evaluation_map, SplittingWitness};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SideRole {
    Contravariant,
    Covariant,
    Both,
}

#[derive(Clone, Debug)]
pub struct Subcategory {
    pub name: String,
    generators: Vec<Module>,
    pub side_role: SideRole,
    pub contains_projectives: bool,
    pub contains_injectives: bool,
}

impl Subcategory {
    pub fn new(name: &str, generators: Vec<Module>, side_role: SideRole) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Subcategory {
            name: name.to_string(),
            generators,
            side_role,
            contains_projectives: false,
            contains_injectives: false,
        }
    }

    pub fn with_flags(mut self, contains_projectives: bool, contains_injectives: bool) -> Self {
        self.contains_projectives = contains_projectives;
        self.contains_injectives = contains_injectives;
        self
    }

    pub fn generators(&self) -> &[Module] {
        &self.generators
    }

    pub fn contains(&self, m: &Module) -> Option<SplittingWitness> {
        add_membership(m, &self.generators)
    }

    /// The evaluation right approximation of m. Every morphism G -> m with G
    /// a generator factors through it by construction.
    pub fn right_approximation(&self, m: &Module) -> Morphism {
        evaluation_map(m, &self.generators).0
    }

    /// The evaluation left approximation m -> ⊕_G G^{dim Hom(m,G)}.
    pub fn left_approximation(&self, m: &Module) -> Morphism {
        let algebra = m.algebra().clone();
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        for g in &self.generators {
            for h in hom_basis(m, g) {
                parts.push(g.clone());
                maps.push(h);
            }
        }
        let sum = crate::module::direct_sum(&algebra, &parts);
        let mut eval = Morphism::zero(m, &sum.total);
        for (inj, h) in sum.injections.iter().zip(&maps) {
            eval = eval.add(&h.then(inj));
        }
        eval
    }

    /// Factorization of an arbitrary map G -> m (G a generator) through the
    /// right approximation; re-verifies the defining property.
    pub fn factor_through_right_approximation(
        &self,
        g_map: &Morphism,
        approx: &Morphism,
    ) -> Option<Morphism> {
        let candidates = hom_basis(g_map.source(), approx.source());
        let fp = g_map.source().algebra().fp();
        let composed: Vec<Vec<u64>> = candidates.iter().map(|c| c.then(approx).flatten()).collect();
        let rows = g_map.flatten().len();
        let system = crate::matrix::Matrix::from_fn(fp, rows, candidates.len(), |r, c| {
            composed[c][r]
        });
        let rhs = crate::matrix::Matrix::from_flat(fp, rows, 1, &g_map.flatten());
        let sol = system.solve(&rhs)?;
        let mut h = Morphism::zero(g_map.source(), approx.source());
        for (j, cand) in candidates.iter().enumerate() {
            let c = sol.particular.at(j, 0);
            if c != 0 {
                h = h.add(&cand.scale(c));
            }
        }
        Some(h)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub subcategory: String,
    pub admissible: bool,
    /// Sufficient criterion applied: the subcategory contains the projectives.
    pub by_projectives_criterion: bool,
    /// Corpus indices whose right approximation fails to be epic.
    pub failures: Vec<usize>,
}

/// Right approximations of every corpus object must be epic.
pub fn is_admissible(x: &Subcategory, corpus: &[Module]) -> AdmissibilityReport {
    let mut failures = Vec::new();
    for (i, m) in corpus.iter().enumerate() {
        if !x.right_approximation(m).is_epi() {
            failures.push(i);
        }
    }
    AdmissibilityReport {
        subcategory: x.name.clone(),
        admissible: failures.is_empty(),
        by_projectives_criterion: x.contains_projectives,
        failures,
    }
}

/// Dual: left approximations of every corpus object must be monic.
pub fn is_coadmissible(y: &Subcategory, corpus: &[Module]) -> AdmissibilityReport {
    let mut failures = Vec::new();
    for (i, m) in corpus.iter().enumerate() {
        if !y.left_approximation(m).is_mono() {
            failures.push(i);
        }
    }
    AdmissibilityReport {
        subcategory: y.name.clone(),
        admissible: failures.is_empty(),
        by_projectives_criterion: y.contains_injectives,
        failures,
    }
}
