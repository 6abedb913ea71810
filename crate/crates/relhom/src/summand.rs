//! Membership in additively generated classes and minimal versions of
//! morphisms.
//!
//! `add_membership` decides m ∈ add(G_1, ..., G_k) by building the evaluation
//! map ⊕ G_i^{dim Hom(G_i, m)} → m and solving for a section. Minimal
//! reduction strips the largest summand of the source (resp. target) on which
//! a morphism vanishes; minimality itself is certified by the nilpotency of
//! the multiplicatively closed space {v : f∘v = 0}, with Fitting projections
//! used to locate splitting idempotents when that space is not nilpotent.

use crate::matrix::{
    fitting_projection, independent_span, span_size, Matrix, EXHAUSTIVE_SPAN_CAP,
};
use crate::module::{
    direct_sum, hom_basis, image, kernel, DirectSum, Module, Morphism,
};

/// Witness that `m` is a direct summand of a finite sum of generators:
/// `approximation ∘ section = id_m`.
#[derive(Clone, Debug)]
pub struct SplittingWitness {
    pub approximation: Morphism,
    pub section: Morphism,
}

/// The evaluation map ⊕_G G^{dim Hom(G, m)} -> m, with the sum structure.
pub fn evaluation_map(m: &Module, generators: &[Module]) -> (Morphism, DirectSum) {
    let algebra = m.algebra().clone();
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for g in generators {
        for h in hom_basis(g, m) {
            parts.push(g.clone());
            maps.push(h);
        }
    }
    let sum = direct_sum(&algebra, &parts);
    let mut eval = Morphism::zero(&sum.total, m);
    for (proj, h) in sum.projections.iter().zip(&maps) {
        eval = eval.add(&proj.then(h));
    }
    (eval, sum)
}

/// Decide whether `m` lies in add(generators); the witness is a split
/// epimorphism from a finite sum of generators together with a section.
pub fn add_membership(m: &Module, generators: &[Module]) -> Option<SplittingWitness> {
    if m.is_zero() {
        let zero = m.algebra().zero_module();
        return Some(SplittingWitness {
            approximation: Morphism::zero(&zero, m),
            section: Morphism::zero(m, &zero),
        });
    }
    let (eval, _) = evaluation_map(m, generators);
    let section = solve_section(&eval)?;
    Some(SplittingWitness { approximation: eval, section })
}

/// Find `s` with `f ∘ s = id` on the target of `f`, by linear solving over
/// the hom space.
fn solve_section(f: &Morphism) -> Option<Morphism> {
    let target = f.target().clone();
    let candidates = hom_basis(&target, f.source());
    if candidates.is_empty() {
        return target.is_zero().then(|| Morphism::zero(&target, f.source()));
    }
    let fp = target.algebra().fp();
    let composed: Vec<Morphism> = candidates.iter().map(|s| s.then(f)).collect();
    let flats: Vec<Matrix> = composed
        .iter()
        .map(|c| Matrix::from_flat(fp, c.flatten().len(), 1, &c.flatten()))
        .collect();
    let id = Morphism::identity(&target);
    let rhs = Matrix::from_flat(fp, id.flatten().len(), 1, &id.flatten());
    let lhs = if flats.is_empty() {
        Matrix::zero(fp, rhs.rows(), 0)
    } else {
        let mut acc = flats[0].clone();
        for m in &flats[1..] {
            acc = acc.hstack(m);
        }
        acc
    };
    let sol = lhs.solve(&rhs)?;
    let mut s = Morphism::zero(&target, f.source());
    for (j, cand) in candidates.iter().enumerate() {
        let c = sol.particular.at(j, 0);
        if c != 0 {
            s = s.add(&cand.scale(c));
        }
    }
    Some(s)
}

/// Isomorphism test: equal dimension vectors plus two-sided membership in the
/// singleton additive closure.
pub fn is_isomorphic(m: &Module, n: &Module) -> bool {
    m.dims() == n.dims()
        && add_membership(m, std::slice::from_ref(n)).is_some()
        && add_membership(n, std::slice::from_ref(m)).is_some()
}

/// How a minimality verdict was certified.
#[derive(Clone, Debug)]
pub enum MinimalityCertificate {
    /// The space {v : f∘v = 0} (resp. {v : v∘f = 0}) is zero.
    VanishingSpace,
    /// Dimensions of the powers of that space, strictly decreasing to zero.
    NilpotentChain(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct MinimalReduction {
    pub minimal: Morphism,
    /// Inclusion of the kept summand into the original source (right) or of
    /// the kept summand into the original target (left).
    pub kept: Morphism,
    /// Inclusions of the stripped summands into the original module.
    pub discarded: Vec<Morphism>,
    pub certificate: MinimalityCertificate,
}

impl MinimalReduction {
    pub fn discarded_total_dim(&self) -> usize {
        self.discarded.iter().map(|i| i.source().total_dim()).sum()
    }
}

/// Basis of {v in End(end_of) : compose(v) = 0} where `compose` places `v`
/// before or after `f`.
fn vanishing_endos(space: &Module, vanish: impl Fn(&Morphism) -> Morphism) -> Vec<Morphism> {
    let fp = space.algebra().fp();
    let endos = hom_basis(space, space);
    if endos.is_empty() {
        return Vec::new();
    }
    let composed: Vec<Vec<u64>> = endos.iter().map(|e| vanish(e).flatten()).collect();
    let rows = composed[0].len().max(1);
    let system = Matrix::from_fn(fp, rows, endos.len(), |r, c| {
        composed[c].get(r).copied().unwrap_or(0)
    });
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|j| {
            let mut v = Morphism::zero(space, space);
            for (i, e) in endos.iter().enumerate() {
                let c = kernel.at(i, j);
                if c != 0 {
                    v = v.add(&e.scale(c));
                }
            }
            v
        })
        .collect()
}

fn endo_total(v: &Morphism) -> Matrix {
    v.total_matrix()
}

fn total_to_endo(space: &Module, total: &Matrix) -> Morphism {
    let fp = space.algebra().fp();
    let mut blocks = Vec::new();
    let mut off = 0;
    for &d in space.dims() {
        blocks.push(Matrix::from_fn(fp, d, d, |r, c| total.at(off + r, off + c)));
        off += d;
    }
    Morphism::new_unchecked(space.clone(), space.clone(), blocks)
}

/// Decide nilpotency of the multiplicatively closed span of `basis` by the
/// chain of power spaces; returns the dimension chain when nilpotent.
fn nilpotency_chain(basis: &[Morphism]) -> Option<Vec<usize>> {
    let mut chain = vec![basis.len()];
    let mut power: Vec<Morphism> = basis.to_vec();
    loop {
        if power.is_empty() {
            return Some(chain);
        }
        let products: Vec<Morphism> = power
            .iter()
            .flat_map(|w| basis.iter().map(move |v| v.then(w)))
            .collect();
        let product_totals: Vec<Matrix> = products.iter().map(endo_total).collect();
        let indep = independent_span(&product_totals);
        let dim = indep.len();
        if dim >= *chain.last().unwrap() {
            return None; // stabilized at a nonzero algebra
        }
        chain.push(dim);
        let space = power[0].source().clone();
        power = indep.iter().map(|t| total_to_endo(&space, t)).collect();
    }
}

/// Locate a nonzero idempotent in the multiplicatively closed, non-nilpotent
/// span of `basis`. Exhaustive for small spans, Fitting projections of a
/// deterministic candidate family otherwise.
fn find_idempotent_in(basis: &[Morphism]) -> Option<Morphism> {
    let space = basis.first()?.source().clone();
    let fp = space.algebra().fp();
    let totals: Vec<Matrix> = basis.iter().map(endo_total).collect();
    let indep = independent_span(&totals);
    if span_size(fp, indep.len()) <= EXHAUSTIVE_SPAN_CAP {
        for e in crate::matrix::enumerate_span(fp, &indep) {
            if !e.is_zero() && e.is_idempotent() {
                return Some(total_to_endo(&space, &e));
            }
        }
        return None;
    }
    let mut candidates: Vec<Matrix> = indep.clone();
    for i in 0..indep.len() {
        for j in (i + 1)..indep.len() {
            candidates.push(indep[i].add(&indep[j]));
            candidates.push(indep[i].mul(&indep[j]));
        }
    }
    let mut state = 0x51ed270b7a349eefu64;
    for _ in 0..256 {
        let mut m = Matrix::zero(fp, totals[0].rows(), totals[0].cols());
        for b in &indep {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = (state >> 33) % fp.modulus();
            if c != 0 {
                m = m.add(&b.scale(c));
            }
        }
        candidates.push(m);
    }
    for s in candidates {
        let e = fitting_projection(&s);
        if !e.is_zero() && e.is_idempotent() {
            return Some(total_to_endo(&space, &e));
        }
    }
    None
}

/// Strip from the source of `f` a maximal direct summand on which `f`
/// vanishes. The result is right minimal, certified by the nilpotency of
/// {v : f∘v = 0}.
pub fn right_minimal_reduction(f: &Morphism) -> MinimalReduction {
    let mut current = f.clone();
    let mut kept = Morphism::identity(f.source());
    let mut discarded: Vec<Morphism> = Vec::new();
    loop {
        let source = current.source().clone();
        let vanishing = vanishing_endos(&source, |v| v.then(&current));
        if vanishing.is_empty() {
            return MinimalReduction {
                minimal: current,
                kept,
                discarded,
                certificate: MinimalityCertificate::VanishingSpace,
            };
        }
        if let Some(chain) = nilpotency_chain(&vanishing) {
            return MinimalReduction {
                minimal: current,
                kept,
                discarded,
                certificate: MinimalityCertificate::NilpotentChain(chain),
            };
        }
        let pi = find_idempotent_in(&vanishing)
            .expect("non-nilpotent vanishing space must contain an idempotent");
        debug_assert!(pi.then(&current).is_zero());
        let (kept_part, incl_kept) = kernel(&pi);
        let (disc_part, _, incl_disc) = image(&pi);
        debug_assert_eq!(
            kept_part.total_dim() + disc_part.total_dim(),
            source.total_dim()
        );
        discarded.push(incl_disc.then(&kept));
        current = incl_kept.then(&current);
        kept = incl_kept.then(&kept);
    }
}

/// Dual reduction: strip from the target of `f` a maximal direct summand
/// missed by `f`. `kept` embeds the reduced target into the original one.
pub fn left_minimal_reduction(f: &Morphism) -> MinimalReduction {
    let mut current = f.clone();
    let mut kept = Morphism::identity(f.target());
    let mut discarded: Vec<Morphism> = Vec::new();
    loop {
        let target = current.target().clone();
        let vanishing = vanishing_endos(&target, |v| current.then(v));
        if vanishing.is_empty() {
            return MinimalReduction {
                minimal: current,
                kept,
                discarded,
                certificate: MinimalityCertificate::VanishingSpace,
            };
        }
        if let Some(chain) = nilpotency_chain(&vanishing) {
            return MinimalReduction {
                minimal: current,
                kept,
                discarded,
                certificate: MinimalityCertificate::NilpotentChain(chain),
            };
        }
        let pi = find_idempotent_in(&vanishing)
            .expect("non-nilpotent vanishing space must contain an idempotent");
        debug_assert!(current.then(&pi).is_zero());
        let (kept_part, incl_kept) = kernel(&pi);
        let (_, _, incl_disc) = image(&pi);
        // projection onto ker(pi) along im(pi): solve incl ∘ p = 1 - pi
        let one_minus = Morphism::identity(&target).sub(&pi);
        let proj = factor_through_mono(&incl_kept, &one_minus);
        discarded.push(incl_disc.then(&kept));
        current = current.then(&proj);
        kept = incl_kept.then(&kept);
        let _ = kept_part;
    }
}

/// Solve `mono ∘ x = g` where `mono` is a monomorphism; panics when `g` does
/// not factor.
pub fn factor_through_mono(mono: &Morphism, g: &Morphism) -> Morphism {
    let blocks = (0..g.source().dims().len())
        .map(|v| {
            mono.block(v)
                .solve(g.block(v))
                .expect("morphism must factor through the mono")
                .particular
        })
        .collect();
    Morphism::new_unchecked(g.source().clone(), mono.source().clone(), blocks)
}

/// Solve `x ∘ epi = g` where `epi` is an epimorphism; panics when `g` does
/// not factor.
pub fn factor_through_epi(epi: &Morphism, g: &Morphism) -> Morphism {
    let blocks = (0..g.source().dims().len())
        .map(|v| {
            let lhs = epi.block(v).transpose();
            let rhs = g.block(v).transpose();
            lhs.solve(&rhs)
                .expect("morphism must factor through the epi")
                .particular
                .transpose()
        })
        .collect();
    Morphism::new_unchecked(epi.target().clone(), g.target().clone(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, AlgebraRef, Quiver, RelationTerm};
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn kx2() -> AlgebraRef {
        let rel = vec![RelationTerm { coeff: 1, path: vec!["x".into(), "x".into()] }];
        Algebra::build("kx2", Quiver::new(1, vec![(0, 0, "x")]), &[rel], f2(), 4).unwrap()
    }

    fn a2() -> AlgebraRef {
        Algebra::build("a2", Quiver::new(2, vec![(0, 1, "a")]), &[], f2(), 2).unwrap()
    }

    #[test]
    fn generator_is_member() {
        let alg = kx2();
        let p = alg.projective(0);
        let w = add_membership(&p, &[p.clone()]).unwrap();
        let round = w.section.then(&w.approximation);
        assert!(round.is_iso());
    }

    #[test]
    fn zero_module_is_member_of_anything() {
        let alg = kx2();
        let z = alg.zero_module();
        assert!(add_membership(&z, &[]).is_some());
        assert!(add_membership(&z, &[alg.projective(0)]).is_some());
    }

    #[test]
    fn simple_is_not_in_add_of_projective() {
        let alg = kx2();
        let s = alg.simple(0);
        let p = alg.projective(0);
        assert!(add_membership(&s, &[p]).is_none());
    }

    #[test]
    fn summand_of_sum_is_member() {
        let alg = a2();
        let p1 = alg.projective(0);
        let p2 = alg.projective(1);
        let both = direct_sum(&alg, &[p1.clone(), p2.clone()]).total;
        assert!(add_membership(&p1, &[both.clone()]).is_some());
        assert!(add_membership(&p2, &[both.clone()]).is_some());
        assert!(add_membership(&both, &[p1, p2]).is_some());
    }

    #[test]
    fn iso_detection() {
        let alg = kx2();
        let p = alg.projective(0);
        let i = alg.injective(0);
        let s = alg.simple(0);
        assert!(is_isomorphic(&p, &i));
        assert!(!is_isomorphic(&p, &s));
        assert!(is_isomorphic(&s, &s));
    }

    #[test]
    fn projective_cover_is_right_minimal() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let cover = hom_basis(&p, &s).remove(0);
        let red = right_minimal_reduction(&cover);
        assert!(red.discarded.is_empty());
        assert_eq!(&red.minimal, &cover);
        // End(P) is local: the vanishing space is the radical, hence nilpotent
        assert!(matches!(red.certificate, MinimalityCertificate::NilpotentChain(_)));
    }

    #[test]
    fn explicit_zero_block_is_stripped() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let cover = hom_basis(&p, &s).remove(0);
        let padded_source = direct_sum(&alg, &[p.clone(), s.clone()]);
        let f = padded_source.projections[0].then(&cover);
        let red = right_minimal_reduction(&f);
        assert_eq!(red.discarded_total_dim(), s.total_dim());
        assert_eq!(red.minimal.source().dims(), p.dims());
        // reduction is idempotent
        let again = right_minimal_reduction(&red.minimal);
        assert!(again.discarded.is_empty());
        assert_eq!(again.minimal.source().dims(), red.minimal.source().dims());
    }

    #[test]
    fn identity_is_minimal() {
        let alg = a2();
        let p = alg.projective(0);
        let red = right_minimal_reduction(&Morphism::identity(&p));
        assert!(red.discarded.is_empty());
    }

    #[test]
    fn zero_map_discards_everything() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let red = right_minimal_reduction(&Morphism::zero(&p, &s));
        assert_eq!(red.discarded_total_dim(), p.total_dim());
        assert!(red.minimal.source().is_zero());
    }

    #[test]
    fn left_reduction_strips_padded_target() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let socle = hom_basis(&s, &p).remove(0);
        let padded_target = direct_sum(&alg, &[p.clone(), s.clone()]);
        let f = socle.then(&padded_target.injections[0]);
        let red = left_minimal_reduction(&f);
        assert_eq!(red.discarded_total_dim(), s.total_dim());
        assert_eq!(red.minimal.target().dims(), p.dims());
        // f factors back through the kept inclusion
        assert_eq!(red.minimal.then(&red.kept), f);
    }
}
