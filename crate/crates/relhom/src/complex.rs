//! Bounded cochain complexes of modules, with differentials raising degree.
//!
//! Resolutions live in degrees <= 0, coresolutions in degrees >= 0. The shift
//! X[k]^n = X^{n+k} negates differentials k times; the mapping cone of
//! f: X -> Y has Con(f)^n = X^{n+1} ⊕ Y^n with differential
//! [[-d_X, 0], [f, d_Y]].

use crate::algebra::{same_algebra, AlgebraRef};
use crate::error::{Error, Result};
use crate::module::{direct_sum, Module, Morphism};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq)]
pub struct Complex {
    algebra: AlgebraRef,
    lo: i32,
    terms: Vec<Module>,
    diffs: Vec<Morphism>,
}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex[{}..{}]{:?}", self.lo, self.hi(), self.terms.iter().map(Module::total_dim).collect::<Vec<_>>())
    }
}

impl Complex {
    pub fn new(algebra: AlgebraRef, lo: i32, terms: Vec<Module>, diffs: Vec<Morphism>) -> Result<Self> {
        let c = Complex { algebra, lo, terms, diffs };
        c.validate()?;
        Ok(c.trimmed())
    }

    pub(crate) fn new_unchecked(algebra: AlgebraRef, lo: i32, terms: Vec<Module>, diffs: Vec<Morphism>) -> Self {
        let c = Complex { algebra, lo, terms, diffs };
        debug_assert!(c.validate().is_ok(), "internal complex violates d^2 = 0");
        c.trimmed()
    }

    pub fn zero(algebra: AlgebraRef) -> Self {
        Complex { algebra, lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    pub fn stalk(module: Module, degree: i32) -> Self {
        let algebra = module.algebra().clone();
        Complex { algebra, lo: degree, terms: vec![module], diffs: Vec::new() }.trimmed()
    }

    fn validate(&self) -> Result<()> {
        if !self.terms.is_empty() && self.diffs.len() + 1 != self.terms.len() {
            return Err(Error::Schema("complex differential count mismatch".into()));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            if d.source() != &self.terms[k] || d.target() != &self.terms[k + 1] {
                return Err(Error::Schema(format!(
                    "differential {k} endpoints do not match the terms"
                )));
            }
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[k].then(&self.diffs[k + 1]).is_zero() {
                return Err(Error::Invariant {
                    location: format!("complex degree {}", self.lo + k as i32),
                    detail: "d^2 is nonzero".into(),
                });
            }
        }
        Ok(())
    }

    fn trimmed(mut self) -> Self {
        while self.terms.first().is_some_and(Module::is_zero) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        while self.terms.last().is_some_and(Module::is_zero) {
            self.terms.pop();
            self.diffs.pop();
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Module::is_zero)
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    /// Degrees carrying a stored term.
    pub fn support(&self) -> impl Iterator<Item = i32> + '_ {
        self.lo..=self.hi()
    }

    /// Number of degrees with a nonzero term.
    pub fn width(&self) -> usize {
        self.terms.iter().filter(|t| !t.is_zero()).count()
    }

    pub fn term(&self, n: i32) -> Module {
        if n < self.lo || n > self.hi() {
            self.algebra.zero_module()
        } else {
            self.terms[(n - self.lo) as usize].clone()
        }
    }

    /// d^n : term(n) -> term(n+1); zero outside the stored range.
    pub fn diff(&self, n: i32) -> Morphism {
        let idx = n - self.lo;
        if idx >= 0 && (idx as usize) < self.diffs.len() {
            self.diffs[idx as usize].clone()
        } else {
            Morphism::zero(&self.term(n), &self.term(n + 1))
        }
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(Module::total_dim).sum()
    }

    /// X[k]^n = X^{n+k}; differentials pick up (-1)^k.
    pub fn shift(&self, k: i32) -> Complex {
        if self.terms.is_empty() {
            return self.clone();
        }
        let fp = self.algebra.fp();
        let sign = if k.rem_euclid(2) == 0 { 1 } else { fp.neg(1) };
        let diffs = self.diffs.iter().map(|d| d.scale(sign)).collect();
        Complex { algebra: self.algebra.clone(), lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    /// Brutal truncation keeping degrees > j.
    pub fn truncate_above(&self, j: i32) -> Complex {
        if j + 1 > self.hi() {
            return Complex::zero(self.algebra.clone());
        }
        let start = ((j + 1).max(self.lo) - self.lo) as usize;
        let terms = self.terms[start..].to_vec();
        let diffs = if terms.len() <= 1 {
            Vec::new()
        } else {
            self.diffs[start..].to_vec()
        };
        Complex {
            algebra: self.algebra.clone(),
            lo: (j + 1).max(self.lo),
            terms,
            diffs,
        }
        .trimmed()
    }
}

/// Degreewise direct sum of complexes.
pub fn direct_sum_complex(algebra: &AlgebraRef, parts: &[Complex]) -> Complex {
    direct_sum_complex_with_maps(algebra, parts).0
}

/// Degreewise direct sum plus the summand inclusion chain maps.
pub fn direct_sum_complex_with_maps(
    algebra: &AlgebraRef,
    parts: &[Complex],
) -> (Complex, Vec<ChainMap>) {
    if parts.iter().all(|c| c.is_zero()) {
        let z = Complex::zero(algebra.clone());
        let injections = parts.iter().map(|c| ChainMap::zero(c, &z)).collect();
        return (z, injections);
    }
    let lo = parts.iter().filter(|c| !c.is_zero()).map(|c| c.lo()).min().unwrap();
    let hi = parts.iter().filter(|c| !c.is_zero()).map(|c| c.hi()).max().unwrap();
    let mut terms = Vec::new();
    let mut sums = Vec::new();
    for n in lo..=hi {
        let layer: Vec<Module> = parts.iter().map(|c| c.term(n)).collect();
        let s = direct_sum(algebra, &layer);
        terms.push(s.total.clone());
        sums.push(s);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let i = (n - lo) as usize;
        let mut d = Morphism::zero(&terms[i], &terms[i + 1]);
        for (k, c) in parts.iter().enumerate() {
            d = d.add(&sums[i].projections[k].then(&c.diff(n)).then(&sums[i + 1].injections[k]));
        }
        diffs.push(d);
    }
    let total = Complex::new_unchecked(algebra.clone(), lo, terms, diffs);
    let injections = parts
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let components = (lo..=hi)
                .map(|n| (n, sums[(n - lo) as usize].injections[k].clone()))
                .collect();
            ChainMap::new_unchecked(c.clone(), total.clone(), components)
        })
        .collect();
    (total, injections)
}

#[derive(Clone, PartialEq)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    components: BTreeMap<i32, Morphism>,
}

impl std::fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainMap[{:?} -> {:?}]", self.source, self.target)
    }
}

impl ChainMap {
    pub fn new(source: Complex, target: Complex, components: BTreeMap<i32, Morphism>) -> Result<Self> {
        let f = ChainMap { source, target, components };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Complex, target: Complex, components: BTreeMap<i32, Morphism>) -> Self {
        let f = ChainMap { source, target, components };
        debug_assert!(f.validate().is_ok(), "internal chain map fails to commute");
        f
    }

    pub fn validate(&self) -> Result<()> {
        assert!(
            same_algebra(self.source.algebra(), self.target.algebra()),
            "algebra mismatch"
        );
        for (&n, c) in &self.components {
            if c.source() != &self.source.term(n) || c.target() != &self.target.term(n) {
                return Err(Error::Schema(format!("chain map component {n} has wrong endpoints")));
            }
        }
        let lo = self.source.lo().min(self.target.lo()) - 1;
        let hi = self.source.hi().max(self.target.hi()) + 1;
        for n in lo..=hi {
            let lhs = self.component(n).then(&self.target.diff(n));
            let rhs = self.source.diff(n).then(&self.component(n + 1));
            if lhs != rhs {
                return Err(Error::Invariant {
                    location: format!("chain map degree {n}"),
                    detail: "does not commute with the differentials".into(),
                });
            }
        }
        Ok(())
    }

    pub fn identity(c: &Complex) -> Self {
        let components = c
            .support()
            .map(|n| (n, Morphism::identity(&c.term(n))))
            .collect();
        ChainMap::new_unchecked(c.clone(), c.clone(), components)
    }

    pub fn zero(source: &Complex, target: &Complex) -> Self {
        ChainMap::new_unchecked(source.clone(), target.clone(), BTreeMap::new())
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn component(&self, n: i32) -> Morphism {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Morphism::zero(&self.source.term(n), &self.target.term(n)))
    }

    pub fn then(&self, next: &ChainMap) -> ChainMap {
        assert!(self.target == next.source, "chain map composition mismatch");
        let lo = self.source.lo().min(next.target.lo());
        let hi = self.source.hi().max(next.target.hi());
        let components = (lo..=hi)
            .map(|n| (n, self.component(n).then(&next.component(n))))
            .collect();
        ChainMap::new_unchecked(self.source.clone(), next.target.clone(), components)
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert!(self.source == other.source && self.target == other.target);
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        let components = (lo..=hi)
            .map(|n| (n, self.component(n).add(&other.component(n))))
            .collect();
        ChainMap::new_unchecked(self.source.clone(), self.target.clone(), components)
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChainMap {
        let components = self.components.iter().map(|(&n, c)| (n, c.neg())).collect();
        ChainMap::new_unchecked(self.source.clone(), self.target.clone(), components)
    }

    pub fn scale(&self, c: u64) -> ChainMap {
        let components = self.components.iter().map(|(&n, m)| (n, m.scale(c))).collect();
        ChainMap::new_unchecked(self.source.clone(), self.target.clone(), components)
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(Morphism::is_zero)
    }

    /// Shift a chain map: components reindex, no signs.
    pub fn shift(&self, k: i32) -> ChainMap {
        let components = self
            .components
            .iter()
            .map(|(&n, c)| (n - k, c.clone()))
            .collect();
        ChainMap::new_unchecked(self.source.shift(k), self.target.shift(k), components)
    }

    /// Degreewise isomorphism test.
    pub fn is_iso(&self) -> bool {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        (lo..=hi).all(|n| self.component(n).is_iso())
    }
}

pub struct Cone {
    pub complex: Complex,
    /// Y -> Con(f)
    pub incl: ChainMap,
    /// Con(f) -> X[1]
    pub proj: ChainMap,
    /// per-degree biproduct structure Con^n = X^{n+1} ⊕ Y^n
    pub sums: BTreeMap<i32, crate::module::DirectSum>,
}

/// Mapping cone with the standard triangle maps; incl.then(proj) = 0.
pub fn cone(f: &ChainMap) -> Cone {
    let x = f.source();
    let y = f.target();
    let algebra = x.algebra().clone();
    if x.is_zero() && y.is_zero() {
        let z = Complex::zero(algebra);
        return Cone {
            complex: z.clone(),
            incl: ChainMap::zero(y, &z),
            proj: ChainMap::zero(&z, &x.shift(1)),
            sums: BTreeMap::new(),
        };
    }
    let lo = (x.lo() - 1).min(y.lo());
    let hi = (x.hi() - 1).max(y.hi());
    let mut terms = Vec::new();
    let mut sums = Vec::new();
    for n in lo..=hi {
        let s = direct_sum(&algebra, &[x.term(n + 1), y.term(n)]);
        terms.push(s.total.clone());
        sums.push(s);
    }
    let at = |n: i32| (n - lo) as usize;
    let mut diffs = Vec::new();
    for n in lo..hi {
        let (s, t) = (&sums[at(n)], &sums[at(n + 1)]);
        let d = s.projections[0]
            .then(&x.diff(n + 1).neg())
            .then(&t.injections[0])
            .add(&s.projections[0].then(&f.component(n + 1)).then(&t.injections[1]))
            .add(&s.projections[1].then(&y.diff(n)).then(&t.injections[1]));
        diffs.push(d);
    }
    let complex = Complex::new_unchecked(algebra.clone(), lo, terms, diffs);
    let incl_components = (lo..=hi)
        .map(|n| (n, sums[at(n)].injections[1].clone()))
        .collect();
    let incl = ChainMap::new_unchecked(y.clone(), complex.clone(), incl_components);
    let xs = x.shift(1);
    let proj_components = (lo..=hi)
        .map(|n| (n, sums[at(n)].projections[0].clone()))
        .collect();
    let proj = ChainMap::new_unchecked(complex.clone(), xs, proj_components);
    let sums = (lo..=hi).map(|n| (n, sums[at(n)].clone())).collect();
    Cone { complex, incl, proj, sums }
}

/// A homotopy h with f - g = d∘h + h∘d; maps drop degree by one.
#[derive(Clone)]
pub struct Homotopy {
    source: Complex,
    target: Complex,
    maps: BTreeMap<i32, Morphism>,
}

impl Homotopy {
    pub fn new(source: Complex, target: Complex, maps: BTreeMap<i32, Morphism>) -> Self {
        Homotopy { source, target, maps }
    }

    pub fn zero(source: &Complex, target: &Complex) -> Self {
        Homotopy { source: source.clone(), target: target.clone(), maps: BTreeMap::new() }
    }

    /// h^n : source^n -> target^{n-1}.
    pub fn map(&self, n: i32) -> Morphism {
        self.maps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Morphism::zero(&self.source.term(n), &self.target.term(n - 1)))
    }

    pub fn maps(&self) -> &BTreeMap<i32, Morphism> {
        &self.maps
    }

    /// Exact check of f - g = d_target ∘ h + h ∘ d_source.
    pub fn witnesses(&self, f: &ChainMap, g: &ChainMap) -> bool {
        let lo = self.source.lo().min(self.target.lo()) - 1;
        let hi = self.source.hi().max(self.target.hi()) + 1;
        (lo..=hi).all(|n| {
            let want = f.component(n).sub(&g.component(n));
            let have = self
                .map(n)
                .then(&self.target.diff(n - 1))
                .add(&self.source.diff(n).then(&self.map(n + 1)));
            want == have
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, AlgebraRef, Quiver, RelationTerm};
    use crate::field::Fp;
    use crate::module::hom_basis;

    fn kx2() -> AlgebraRef {
        let rel = vec![RelationTerm { coeff: 1, path: vec!["x".into(), "x".into()] }];
        Algebra::build("kx2", Quiver::new(1, vec![(0, 0, "x")]), &[rel], Fp::new(2).unwrap(), 4)
            .unwrap()
    }

    #[test]
    fn stalk_and_shift() {
        let alg = kx2();
        let s = alg.simple(0);
        let c = Complex::stalk(s.clone(), 0);
        assert_eq!(c.lo(), 0);
        assert_eq!(c.width(), 1);
        let shifted = c.shift(3);
        assert_eq!(shifted.lo(), -3);
        assert_eq!(shifted.term(-3).dims(), s.dims());
    }

    #[test]
    fn cone_of_identity_stalk() {
        let alg = kx2();
        let p = alg.projective(0);
        let c = Complex::stalk(p.clone(), 0);
        let cone = cone(&ChainMap::identity(&c));
        // 0 -> P -> P -> 0 in degrees -1, 0
        assert_eq!(cone.complex.lo(), -1);
        assert_eq!(cone.complex.hi(), 0);
        assert!(cone.complex.diff(-1).is_iso());
        assert!(cone.incl.then(&cone.proj).is_zero());
    }

    #[test]
    fn cone_of_zero_map_is_sum_with_shift() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let f = ChainMap::zero(&Complex::stalk(p.clone(), 0), &Complex::stalk(s.clone(), 0));
        let cone = cone(&f);
        assert_eq!(cone.complex.term(-1).dims(), p.dims());
        assert_eq!(cone.complex.term(0).dims(), s.dims());
        assert!(cone.complex.diff(-1).is_zero());
    }

    #[test]
    fn two_periodic_complex_validates() {
        let alg = kx2();
        let p = alg.projective(0);
        // d = multiplication by x: P -> P, d^2 = 0
        let x_mult = hom_basis(&p, &p)
            .into_iter()
            .find(|f| !f.is_iso() && !f.is_zero())
            .unwrap();
        let c = Complex::new(
            alg.clone(),
            0,
            vec![p.clone(), p.clone(), p.clone()],
            vec![x_mult.clone(), x_mult.clone()],
        )
        .unwrap();
        assert_eq!(c.width(), 3);
        assert_eq!(c.truncate_above(0).lo(), 1);
    }

    #[test]
    fn homotopy_witness_on_contractible_complex() {
        let alg = kx2();
        let p = alg.projective(0);
        let c = cone(&ChainMap::identity(&Complex::stalk(p.clone(), 0))).complex;
        let id = ChainMap::identity(&c);
        let zero = ChainMap::zero(&c, &c);
        // h^0 = inverse of d^{-1} contracts 0 -> P -> P -> 0
        let d = c.diff(-1);
        let mut maps = BTreeMap::new();
        let h0 = crate::summand::factor_through_mono(&d, &Morphism::identity(&c.term(0)));
        maps.insert(0, h0);
        let h = Homotopy::new(c.clone(), c.clone(), maps);
        assert!(h.witnesses(&id, &zero));
    }

    #[test]
    fn direct_sum_of_complexes() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let a = Complex::stalk(p.clone(), 0);
        let b = Complex::stalk(s.clone(), -1);
        let sum = direct_sum_complex(&alg, &[a, b]);
        assert_eq!(sum.lo(), -1);
        assert_eq!(sum.hi(), 0);
        assert_eq!(sum.term(-1).total_dim(), 1);
        assert_eq!(sum.term(0).total_dim(), 2);
    }
}
