//! Balanced pairs, relative Ext from both sides, and the balanced-pair
//! verification report.
//!
//! A registered pair (X, Y) carries an admissibility verdict and makes the
//! two Ext routes comparable: dims via an X-resolution of the first argument
//! must equal dims via a Y-coresolution of the second, degree by degree.

use crate::complex::Complex;
use crate::error::Result;
use crate::homalg::{is_rel_acyclic, is_rel_acyclic_truncated, Side};
use crate::module::Module;
use crate::resolution::{
    ext_via_x, ext_via_y, proper_coresolution, proper_resolution, Coresolution, Resolution,
};
use crate::sample::Sampler;
use crate::ses::{ShortExactSequence, StarAcyclicWitness};
use crate::subcat::{is_admissible, is_coadmissible, AdmissibilityReport, Subcategory};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct BalancedPair {
    pub name: String,
    pub x: Subcategory,
    pub y: Subcategory,
}

impl BalancedPair {
    pub fn new(name: &str, x: Subcategory, y: Subcategory) -> Self {
        BalancedPair { name: name.to_string(), x, y }
    }

    /// *-acyclic = right-X-acyclic and left-Y-acyclic.
    pub fn is_star_acyclic(&self, c: &Complex) -> bool {
        is_rel_acyclic(c, Side::Right, self.x.generators()).acyclic
            && is_rel_acyclic(c, Side::Left, self.y.generators()).acyclic
    }

    pub fn star_witness(&self, s: ShortExactSequence) -> Option<StarAcyclicWitness> {
        StarAcyclicWitness::certify(s, self.x.generators(), self.y.generators())
    }
}

fn module_key(m: &Module) -> Vec<u64> {
    let mut key: Vec<u64> = m.dims().iter().map(|&d| d as u64).collect();
    key.push(u64::MAX);
    for a in 0..m.algebra().arrow_count() {
        key.extend(m.action(a).flatten_row());
        key.push(u64::MAX - 1);
    }
    key
}

/// Resolution/coresolution cache plus the Ext dimension calculator for one
/// balanced pair at a fixed working depth.
pub struct ExtCalculator<'a> {
    pub pair: &'a BalancedPair,
    pub depth: usize,
    resolutions: BTreeMap<Vec<u64>, Arc<Resolution>>,
    coresolutions: BTreeMap<Vec<u64>, Arc<Coresolution>>,
}

impl<'a> ExtCalculator<'a> {
    pub fn new(pair: &'a BalancedPair, depth: usize) -> Self {
        ExtCalculator {
            pair,
            depth,
            resolutions: BTreeMap::new(),
            coresolutions: BTreeMap::new(),
        }
    }

    pub fn resolution(&mut self, m: &Module) -> Result<Arc<Resolution>> {
        let key = module_key(m);
        if let Some(r) = self.resolutions.get(&key) {
            return Ok(Arc::clone(r));
        }
        let r = Arc::new(proper_resolution(m, &self.pair.x, self.depth)?);
        self.resolutions.insert(key, Arc::clone(&r));
        Ok(r)
    }

    pub fn coresolution(&mut self, n: &Module) -> Result<Arc<Coresolution>> {
        let key = module_key(n);
        if let Some(r) = self.coresolutions.get(&key) {
            return Ok(Arc::clone(r));
        }
        let r = Arc::new(proper_coresolution(n, &self.pair.y, self.depth)?);
        self.coresolutions.insert(key, Arc::clone(&r));
        Ok(r)
    }

    pub fn ext_x(&mut self, m: &Module, n: &Module, i: usize) -> Result<usize> {
        let res = self.resolution(m)?;
        ext_via_x(&res, n, i)
    }

    pub fn ext_y(&mut self, m: &Module, n: &Module, i: usize) -> Result<usize> {
        let cores = self.coresolution(n)?;
        ext_via_y(m, &cores, i)
    }

    /// Both routes at once; `balanced` asserts they agree.
    pub fn ext_both(&mut self, m: &Module, n: &Module, i: usize) -> Result<(usize, usize)> {
        Ok((self.ext_x(m, n, i)?, self.ext_y(m, n, i)?))
    }

    pub fn table(&mut self, m: &Module, n: &Module, max_degree: usize) -> Result<ExtTable> {
        let mut dims_via_x = Vec::new();
        let mut dims_via_y = Vec::new();
        for i in 1..=max_degree {
            let (dx, dy) = self.ext_both(m, n, i)?;
            dims_via_x.push(dx);
            dims_via_y.push(dy);
        }
        let balanced = dims_via_x == dims_via_y;
        Ok(ExtTable { dims_via_x, dims_via_y, balanced })
    }
}

/// Relative Ext dimensions for one pair (M, N), degrees 1..=k.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtTable {
    pub dims_via_x: Vec<usize>,
    pub dims_via_y: Vec<usize>,
    pub balanced: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BalancedPairReport {
    pub pair: String,
    pub x_admissibility: AdmissibilityReport,
    pub y_coadmissibility: AdmissibilityReport,
    /// Admissibility of X iff coadmissibility of Y over the corpus.
    pub admissibility_equivalence: bool,
    /// Per corpus object: the X-resolution is also left-Y-acyclic.
    pub resolutions_left_acyclic: Vec<bool>,
    /// Per corpus object: the Y-coresolution is also right-X-acyclic.
    pub coresolutions_right_acyclic: Vec<bool>,
    pub samples_checked: usize,
    /// Sampled complexes where right-X-acyclic and left-Y-acyclic disagree.
    pub coincidence_failures: Vec<String>,
    pub pass: bool,
}

/// Check the balanced-pair conditions over a corpus: resolutions acyclic on
/// both sides, coresolutions likewise, acyclicity classes coinciding on
/// sampled complexes, and admissibility matching coadmissibility.
pub fn verify_balanced_pair(
    pair: &BalancedPair,
    corpus: &[Module],
    depth: usize,
    samples: usize,
    seed: u64,
) -> BalancedPairReport {
    let x_admissibility = is_admissible(&pair.x, corpus);
    let y_coadmissibility = is_coadmissible(&pair.y, corpus);
    let admissibility_equivalence = x_admissibility.admissible == y_coadmissibility.admissible;

    let mut resolutions_left_acyclic = Vec::new();
    for m in corpus {
        let ok = proper_resolution(m, &pair.x, depth)
            .map(|res| {
                let aug = res.augmented_complex();
                let truncated = res.finite_length.is_none().then(|| aug.lo());
                is_rel_acyclic_truncated(&aug, Side::Left, pair.y.generators(), truncated).acyclic
            })
            .unwrap_or(false);
        resolutions_left_acyclic.push(ok);
    }
    let mut coresolutions_right_acyclic = Vec::new();
    for n in corpus {
        let ok = proper_coresolution(n, &pair.y, depth)
            .map(|cores| {
                let aug = cores.augmented_complex();
                let truncated = cores.finite_length.is_none().then(|| aug.hi());
                is_rel_acyclic_truncated(&aug, Side::Right, pair.x.generators(), truncated).acyclic
            })
            .unwrap_or(false);
        coresolutions_right_acyclic.push(ok);
    }

    let mut sampler = Sampler::new(seed);
    let algebra = corpus
        .first()
        .map(|m| m.algebra().clone())
        .expect("corpus must be nonempty");
    let mut coincidence_failures = Vec::new();
    let pool = sampler.sequence_pool(&pair.x, &pair.y, corpus, samples / 3 + 1);
    let mut tested = 0;
    for seq in &pool {
        let c = seq.as_complex();
        let right = is_rel_acyclic(&c, Side::Right, pair.x.generators()).acyclic;
        let left = is_rel_acyclic(&c, Side::Left, pair.y.generators()).acyclic;
        tested += 1;
        if right != left {
            coincidence_failures.push(format!(
                "sequence with middle {:?}: right={right}, left={left}",
                seq.mid_term()
            ));
        }
    }
    while tested < samples {
        tested += 1;
        let width = sampler.range(1, 4) as usize;
        let c = sampler.bounded_complex(&algebra, corpus, width);
        let right = is_rel_acyclic(&c, Side::Right, pair.x.generators()).acyclic;
        let left = is_rel_acyclic(&c, Side::Left, pair.y.generators()).acyclic;
        if right != left {
            coincidence_failures.push(format!("{c:?}: right={right}, left={left}"));
        }
    }

    let pass = admissibility_equivalence
        && resolutions_left_acyclic.iter().all(|&b| b)
        && coresolutions_right_acyclic.iter().all(|&b| b)
        && coincidence_failures.is_empty();
    BalancedPairReport {
        pair: pair.name.clone(),
        x_admissibility,
        y_coadmissibility,
        admissibility_equivalence,
        resolutions_left_acyclic,
        coresolutions_right_acyclic,
        samples_checked: tested,
        coincidence_failures,
        pass,
    }
}
