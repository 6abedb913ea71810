//! Proper resolutions, relative Ext, and resolution dimensions.
//!
//! A proper X-resolution iterates the evaluation right approximation and its
//! kernel; the augmented complex is right-X-acyclic by construction and the
//! certificate is recomputed anyway. Relative Ext is the cohomology of
//! Hom(X^•, N) (via X) or Hom(M, Y^•) (via Y); over a registered balanced
//! pair the two routes must agree degreewise.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homalg::{is_rel_acyclic_truncated, RelAcyclicityCert, Side, VectComplex};
use crate::matrix::Matrix;
use crate::module::{cokernel, hom_basis, kernel, morphism_coords, Module, Morphism};
use crate::subcat::Subcategory;
use crate::summand::{add_membership, is_isomorphic};
use serde::{Deserialize, Serialize};

/// A proper X-resolution of `base`, terms in degrees 0, -1, -2, ...
pub struct Resolution {
    pub base: Module,
    /// terms[k] = X^{-k}
    pub terms: Vec<Module>,
    /// maps[k]: X^{-k-1} -> X^{-k}
    pub maps: Vec<Morphism>,
    pub augmentation: Morphism,
    /// syzygies[k] = ker of the k-th approximation; syzygies[0] is the kernel
    /// of the augmentation
    pub syzygies: Vec<Module>,
    /// inclusions syzygies[k] -> terms[k]
    pub inclusions: Vec<Morphism>,
    /// least n with a length-n resolution seen during construction
    pub finite_length: Option<usize>,
    pub cert: RelAcyclicityCert,
}

impl Resolution {
    /// The k-th syzygy with syz_0 = base.
    pub fn syzygy(&self, k: usize) -> Module {
        if k == 0 {
            self.base.clone()
        } else if k - 1 < self.syzygies.len() {
            self.syzygies[k - 1].clone()
        } else {
            self.base.algebra().zero_module()
        }
    }

    pub fn depth(&self) -> usize {
        self.terms.len()
    }

    /// Deleted resolution as a complex in degrees -depth+1 ..= 0.
    pub fn deleted_complex(&self) -> Complex {
        let algebra = self.base.algebra().clone();
        let mut terms = self.terms.clone();
        terms.reverse();
        let mut diffs = self.maps.clone();
        diffs.reverse();
        Complex::new_unchecked(algebra, -(self.terms.len() as i32) + 1, terms, diffs)
    }

    /// Augmented complex ... -> X^{-1} -> X^0 -> base -> 0 with the base in
    /// degree 1.
    pub fn augmented_complex(&self) -> Complex {
        let algebra = self.base.algebra().clone();
        let mut terms = self.terms.clone();
        terms.reverse();
        terms.push(self.base.clone());
        let mut diffs = self.maps.clone();
        diffs.reverse();
        diffs.push(self.augmentation.clone());
        Complex::new_unchecked(algebra, -(self.terms.len() as i32) + 1, terms, diffs)
    }
}

/// Build a proper X-resolution to the requested depth. Stops early when a
/// syzygy vanishes. The approximation of every syzygy must be epic; a failure
/// is the documented admissibility error.
pub fn proper_resolution(m: &Module, x: &Subcategory, depth: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut syzygies = Vec::new();
    let mut inclusions = Vec::new();
    let mut augmentation = None;
    let mut finite_length = None;
    let mut current = m.clone();
    for k in 0..depth {
        if current.is_zero() && k > 0 {
            finite_length = Some(k - 1);
            break;
        }
        // a syzygy already in add(X) closes the resolution with an identity
        let approx = if add_membership(&current, x.generators()).is_some() {
            Morphism::identity(&current)
        } else {
            let a = x.right_approximation(&current);
            if !a.is_epi() {
                return Err(Error::ApproximationNotEpic {
                    module: format!("{current:?} (syzygy {k} of {:?})", m),
                    subcategory: x.name.clone(),
                });
            }
            a
        };
        let (syz, incl) = kernel(&approx);
        terms.push(approx.source().clone());
        if k == 0 {
            augmentation = Some(approx.clone());
        } else {
            // d^{-k}: X^{-k} -> X^{-k+1} is approx followed by the previous
            // syzygy inclusion
            let prev_incl: &Morphism = &inclusions[k - 1];
            maps.push(approx.then(prev_incl));
        }
        syzygies.push(syz.clone());
        inclusions.push(incl);
        if syz.is_zero() && finite_length.is_none() {
            finite_length = Some(k);
        }
        current = syz;
    }
    let augmentation = augmentation.unwrap_or_else(|| {
        // depth 0 requested: a bare augmentation of the zero complex
        Morphism::zero(&m.algebra().zero_module(), m)
    });
    let mut res = Resolution {
        base: m.clone(),
        terms,
        maps,
        augmentation,
        syzygies,
        inclusions,
        finite_length,
        cert: RelAcyclicityCert {
            side: Side::Right,
            tables: Vec::new(),
            acyclic: true,
            exempt_degree: None,
        },
    };
    let aug = res.augmented_complex();
    let truncated_at = res.finite_length.is_none().then(|| aug.lo());
    res.cert = is_rel_acyclic_truncated(&aug, Side::Right, x.generators(), truncated_at);
    if !res.cert.acyclic {
        return Err(Error::Invariant {
            location: "proper resolution".into(),
            detail: "augmented complex failed its right-acyclicity certificate".into(),
        });
    }
    Ok(res)
}

/// A proper Y-coresolution of `base`, terms in degrees 0, 1, 2, ...
pub struct Coresolution {
    pub base: Module,
    /// terms[k] = Y^k
    pub terms: Vec<Module>,
    /// maps[k]: Y^k -> Y^{k+1}
    pub maps: Vec<Morphism>,
    pub augmentation: Morphism,
    /// cosyzygies[k] = coker of the k-th coapproximation
    pub cosyzygies: Vec<Module>,
    /// projections terms[k] -> cosyzygies[k]
    pub projections: Vec<Morphism>,
    pub finite_length: Option<usize>,
    pub cert: RelAcyclicityCert,
}

impl Coresolution {
    pub fn cosyzygy(&self, k: usize) -> Module {
        if k == 0 {
            self.base.clone()
        } else if k - 1 < self.cosyzygies.len() {
            self.cosyzygies[k - 1].clone()
        } else {
            self.base.algebra().zero_module()
        }
    }

    pub fn depth(&self) -> usize {
        self.terms.len()
    }

    pub fn deleted_complex(&self) -> Complex {
        let algebra = self.base.algebra().clone();
        Complex::new_unchecked(algebra, 0, self.terms.clone(), self.maps.clone())
    }

    /// Augmented complex 0 -> base -> Y^0 -> Y^1 -> ... with base in
    /// degree -1.
    pub fn augmented_complex(&self) -> Complex {
        let algebra = self.base.algebra().clone();
        let mut terms = vec![self.base.clone()];
        terms.extend(self.terms.iter().cloned());
        let mut diffs = vec![self.augmentation.clone()];
        diffs.extend(self.maps.iter().cloned());
        Complex::new_unchecked(algebra, -1, terms, diffs)
    }
}

pub fn proper_coresolution(n: &Module, y: &Subcategory, depth: usize) -> Result<Coresolution> {
    let mut terms = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut cosyzygies = Vec::new();
    let mut projections = Vec::new();
    let mut augmentation = None;
    let mut finite_length = None;
    let mut current = n.clone();
    for k in 0..depth {
        if current.is_zero() && k > 0 {
            finite_length = Some(k - 1);
            break;
        }
        let coapprox = if add_membership(&current, y.generators()).is_some() {
            Morphism::identity(&current)
        } else {
            let a = y.left_approximation(&current);
            if !a.is_mono() {
                return Err(Error::CoapproximationNotMonic {
                    module: format!("{current:?} (cosyzygy {k} of {:?})", n),
                    subcategory: y.name.clone(),
                });
            }
            a
        };
        let (cosyz, proj) = cokernel(&coapprox);
        terms.push(coapprox.target().clone());
        if k == 0 {
            augmentation = Some(coapprox.clone());
        } else {
            let prev_proj: &Morphism = &projections[k - 1];
            maps.push(prev_proj.then(&coapprox));
        }
        cosyzygies.push(cosyz.clone());
        projections.push(proj);
        if cosyz.is_zero() && finite_length.is_none() {
            finite_length = Some(k);
        }
        current = cosyz;
    }
    let augmentation = augmentation
        .unwrap_or_else(|| Morphism::zero(n, &n.algebra().zero_module()));
    let mut cores = Coresolution {
        base: n.clone(),
        terms,
        maps,
        augmentation,
        cosyzygies,
        projections,
        finite_length,
        cert: RelAcyclicityCert {
            side: Side::Left,
            tables: Vec::new(),
            acyclic: true,
            exempt_degree: None,
        },
    };
    let aug = cores.augmented_complex();
    let truncated_at = cores.finite_length.is_none().then(|| aug.hi());
    cores.cert = is_rel_acyclic_truncated(&aug, Side::Left, y.generators(), truncated_at);
    if !cores.cert.acyclic {
        return Err(Error::Invariant {
            location: "proper coresolution".into(),
            detail: "augmented complex failed its left-acyclicity certificate".into(),
        });
    }
    Ok(cores)
}

/// dim Ext^i computed from a proper X-resolution of the first argument:
/// H^i of Hom(X^•, n), built directly on hom bases.
pub fn ext_via_x(res: &Resolution, n: &Module, i: usize) -> Result<usize> {
    if i == 0 {
        return Err(Error::Precondition("relative Ext is exposed for degrees >= 1 only".into()));
    }
    if res.finite_length.is_none() && res.depth() < i + 1 {
        return Err(Error::DepthInsufficient { have: res.depth(), need: i + 1 });
    }
    let fp = res.base.algebra().fp();
    let k_max = res.depth();
    let bases: Vec<Vec<Morphism>> = (0..=k_max)
        .map(|k| {
            if k < k_max {
                hom_basis(&res.terms[k], n)
            } else {
                Vec::new()
            }
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut diffs = Vec::new();
    for k in 0..k_max {
        // delta^k: Hom(X^{-k}, n) -> Hom(X^{-k-1}, n), phi -> phi ∘ d
        let mut dmat = Matrix::zero(fp, dims[k + 1], dims[k]);
        if k + 1 < res.terms.len() {
            let d = &res.maps[k]; // X^{-k-1} -> X^{-k}
            for (col, phi) in bases[k].iter().enumerate() {
                let composed = d.then(phi);
                let coords = morphism_coords(&bases[k + 1], &composed)
                    .expect("precomposition stays in the hom space");
                for (row, c) in coords.into_iter().enumerate() {
                    if c != 0 {
                        dmat.set(row, col, c);
                    }
                }
            }
        }
        diffs.push(dmat);
    }
    let vect = VectComplex::new(fp, 0, dims, diffs);
    let h = vect.homology_dims();
    Ok(h.iter().find(|&&(d, _)| d == i as i32).map_or(0, |&(_, v)| v))
}

/// dim Ext^i computed from a proper Y-coresolution of the second argument:
/// H^i of Hom(m, Y^•).
pub fn ext_via_y(m: &Module, cores: &Coresolution, i: usize) -> Result<usize> {
    if i == 0 {
        return Err(Error::Precondition("relative Ext is exposed for degrees >= 1 only".into()));
    }
    if cores.finite_length.is_none() && cores.depth() < i + 1 {
        return Err(Error::DepthInsufficient { have: cores.depth(), need: i + 1 });
    }
    let fp = m.algebra().fp();
    let k_max = cores.depth();
    let bases: Vec<Vec<Morphism>> = (0..=k_max)
        .map(|k| {
            if k < k_max {
                hom_basis(m, &cores.terms[k])
            } else {
                Vec::new()
            }
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut diffs = Vec::new();
    for k in 0..k_max {
        let mut dmat = Matrix::zero(fp, dims[k + 1], dims[k]);
        if k + 1 < cores.terms.len() {
            let d = &cores.maps[k]; // Y^k -> Y^{k+1}
            for (col, phi) in bases[k].iter().enumerate() {
                let composed = phi.then(d);
                let coords = morphism_coords(&bases[k + 1], &composed)
                    .expect("postcomposition stays in the hom space");
                for (row, c) in coords.into_iter().enumerate() {
                    if c != 0 {
                        dmat.set(row, col, c);
                    }
                }
            }
        }
        diffs.push(dmat);
    }
    let vect = VectComplex::new(fp, 0, dims, diffs);
    let h = vect.homology_dims();
    Ok(h.iter().find(|&&(d, _)| d == i as i32).map_or(0, |&(_, v)| v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DimValue {
    Finite(usize),
    /// No length <= cap resolution exists; reported as ">= cap+1".
    ExceedsCap(usize),
}

impl std::fmt::Display for DimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimValue::Finite(n) => write!(f, "{n}"),
            DimValue::ExceedsCap(cap) => write!(f, ">= {}", cap + 1),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimReport {
    pub value: DimValue,
    /// least n with the syzygy in the subcategory (membership route)
    pub membership_decision: Option<usize>,
    /// least n with the witness Ext vanishing (cross-check route)
    pub ext_decision: Option<usize>,
    /// the two decision rules agree wherever both are defined
    pub consistent: bool,
    /// syzygy period, when one was detected (certifies an infinite dimension)
    pub period: Option<usize>,
}

/// X-resolution dimension by syzygy membership (decision rule) cross-checked
/// by the witness-based Ext vanishing.
pub fn resolution_dimension(m: &Module, x: &Subcategory, cap: usize) -> Result<DimReport> {
    let res = proper_resolution(m, x, cap + 2)?;
    let mut membership_decision = None;
    for n in 0..=cap {
        if add_membership(&res.syzygy(n), x.generators()).is_some() {
            membership_decision = Some(n);
            break;
        }
    }
    let mut ext_decision = None;
    if let Some(found) = membership_decision {
        for n in 0..=found {
            let witness = res.syzygy(n + 1);
            let dim = if witness.is_zero() {
                0
            } else {
                ext_via_x(&res, &witness, n + 1).unwrap_or(usize::MAX)
            };
            if dim == 0 {
                ext_decision = Some(n);
                break;
            }
        }
    }
    let consistent = membership_decision == ext_decision || membership_decision.is_none();
    let period = detect_periodicity(&res);
    Ok(DimReport {
        value: membership_decision.map_or(DimValue::ExceedsCap(cap), DimValue::Finite),
        membership_decision,
        ext_decision,
        consistent,
        period,
    })
}

/// Dual decision rule: least n with the image of d^{n-1} (the n-th cosyzygy)
/// in the subcategory.
pub fn coresolution_dimension(n: &Module, y: &Subcategory, cap: usize) -> Result<DimReport> {
    let cores = proper_coresolution(n, y, cap + 2)?;
    let mut membership_decision = None;
    for k in 0..=cap {
        if add_membership(&cores.cosyzygy(k), y.generators()).is_some() {
            membership_decision = Some(k);
            break;
        }
    }
    let mut ext_decision = None;
    if let Some(found) = membership_decision {
        for k in 0..=found {
            let witness = cores.cosyzygy(k + 1);
            let dim = if witness.is_zero() {
                0
            } else {
                ext_via_y(&witness, &cores, k + 1).unwrap_or(usize::MAX)
            };
            if dim == 0 {
                ext_decision = Some(k);
                break;
            }
        }
    }
    let consistent = membership_decision == ext_decision || membership_decision.is_none();
    let period = detect_copersistence(&cores);
    Ok(DimReport {
        value: membership_decision.map_or(DimValue::ExceedsCap(cap), DimValue::Finite),
        membership_decision,
        ext_decision,
        consistent,
        period,
    })
}

/// Least k such that some syzygy repeats k steps later (isomorphism via
/// two-sided membership); a repeat certifies infinite resolution dimension.
pub fn detect_periodicity(res: &Resolution) -> Option<usize> {
    let count = res.syzygies.len() + 1;
    let syz: Vec<Module> = (0..count).map(|k| res.syzygy(k)).collect();
    for k in 1..count {
        for j in 0..count - k {
            if syz[j].is_zero() || syz[j + k].is_zero() {
                continue;
            }
            if is_isomorphic(&syz[j], &syz[j + k]) {
                return Some(k);
            }
        }
    }
    None
}

fn detect_copersistence(cores: &Coresolution) -> Option<usize> {
    let count = cores.cosyzygies.len() + 1;
    let syz: Vec<Module> = (0..count).map(|k| cores.cosyzygy(k)).collect();
    for k in 1..count {
        for j in 0..count - k {
            if syz[j].is_zero() || syz[j + k].is_zero() {
                continue;
            }
            if is_isomorphic(&syz[j], &syz[j + k]) {
                return Some(k);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {

    use super::*;
    use crate::algebra::{Algebra, AlgebraRef, Quiver, RelationTerm};
    use crate::field::Fp;
    use crate::subcat::SideRole;

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

    fn proj(alg: &AlgebraRef) -> Subcategory {
        let gens = (0..alg.vertex_count()).map(|i| alg.projective(i)).collect();
        Subcategory::new("proj", gens, SideRole::Contravariant).with_flags(true, false)
    }

    fn inj(alg: &AlgebraRef) -> Subcategory {
        let gens = (0..alg.vertex_count()).map(|i| alg.injective(i)).collect();
        Subcategory::new("inj", gens, SideRole::Covariant).with_flags(false, true)
    }

    #[test]
    fn member_resolves_at_length_zero() {
        let alg = kx2();
        let p = alg.projective(0);
        let res = proper_resolution(&p, &proj(&alg), 4).unwrap();
        assert_eq!(res.finite_length, Some(0));
        assert!(res.cert.acyclic);
    }

    #[test]
    fn two_periodic_resolution_of_simple() {
        let alg = kx2();
        let s = alg.simple(0);
        let res = proper_resolution(&s, &proj(&alg), 5).unwrap();
        assert_eq!(res.finite_length, None);
        for k in 0..res.terms.len() {
            assert_eq!(res.terms[k].total_dim(), 2);
        }
        // every syzygy is S again
        for k in 1..=4 {
            assert_eq!(res.syzygy(k).dims(), s.dims());
        }
        assert_eq!(detect_periodicity(&res), Some(1));
    }

    #[test]
    fn a2_resolution_of_simple_terminates() {
        let alg = a2();
        let s1 = alg.simple(0);
        let res = proper_resolution(&s1, &proj(&alg), 5).unwrap();
        // 0 -> P(2) -> P(1) -> S(1) -> 0
        assert_eq!(res.finite_length, Some(1));
        assert_eq!(res.terms[0].dims(), alg.projective(0).dims());
        assert_eq!(detect_periodicity(&res), None);
    }

    #[test]
    fn a2_coresolution_of_s2() {
        let alg = a2();
        let s2 = alg.simple(1);
        let cores = proper_coresolution(&s2, &inj(&alg), 5).unwrap();
        // 0 -> S(2) -> I(2) -> I(1) -> 0
        assert_eq!(cores.finite_length, Some(1));
        assert_eq!(cores.terms[0].dims(), alg.injective(1).dims());
        assert_eq!(cores.terms[1].dims(), alg.injective(0).dims());
    }

    #[test]
    fn two_periodic_coresolution_over_kx2() {
        let alg = kx2();
        let s = alg.simple(0);
        let cores = proper_coresolution(&s, &inj(&alg), 4).unwrap();
        assert_eq!(cores.finite_length, None);
        for k in 1..=3 {
            assert_eq!(cores.cosyzygy(k).dims(), s.dims());
        }
    }

    #[test]
    fn ext_dims_on_kx2_are_periodic() {
        let alg = kx2();
        let s = alg.simple(0);
        let res = proper_resolution(&s, &proj(&alg), 8).unwrap();
        let cores = proper_coresolution(&s, &inj(&alg), 8).unwrap();
        for i in 1..=5 {
            assert_eq!(ext_via_x(&res, &s, i).unwrap(), 1, "degree {i}");
            assert_eq!(ext_via_y(&s, &cores, i).unwrap(), 1, "degree {i}");
        }
    }

    #[test]
    fn ext_dims_on_a2() {
        let alg = a2();
        let s1 = alg.simple(0);
        let s2 = alg.simple(1);
        let res = proper_resolution(&s1, &proj(&alg), 6).unwrap();
        let cores = proper_coresolution(&s2, &inj(&alg), 6).unwrap();
        assert_eq!(ext_via_x(&res, &s2, 1).unwrap(), 1);
        assert_eq!(ext_via_x(&res, &s2, 2).unwrap(), 0);
        assert_eq!(ext_via_y(&s1, &cores, 1).unwrap(), 1);
        assert_eq!(ext_via_y(&s1, &cores, 2).unwrap(), 0);
    }

    #[test]
    fn ext_of_member_vanishes() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let res = proper_resolution(&p, &proj(&alg), 6).unwrap();
        for i in 1..=4 {
            assert_eq!(ext_via_x(&res, &s, i).unwrap(), 0);
        }
    }

    #[test]
    fn depth_errors_are_explicit() {
        let alg = kx2();
        let s = alg.simple(0);
        let res = proper_resolution(&s, &proj(&alg), 3).unwrap();
        assert!(matches!(
            ext_via_x(&res, &s, 5),
            Err(Error::DepthInsufficient { .. })
        ));
        assert!(matches!(ext_via_x(&res, &s, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn resolution_dimension_reports() {
        let alg = kx2();
        let x = proj(&alg);
        let p = alg.projective(0);
        let rep = resolution_dimension(&p, &x, 6).unwrap();
        assert_eq!(rep.value, DimValue::Finite(0));
        assert!(rep.consistent);

        let s = alg.simple(0);
        let rep = resolution_dimension(&s, &x, 6).unwrap();
        assert_eq!(rep.value, DimValue::ExceedsCap(6));
        assert_eq!(rep.period, Some(1));

        let alg = a2();
        let rep = resolution_dimension(&alg.simple(0), &proj(&alg), 6).unwrap();
        assert_eq!(rep.value, DimValue::Finite(1));
        assert!(rep.consistent);
        let rep = coresolution_dimension(&alg.simple(1), &inj(&alg), 6).unwrap();
        assert_eq!(rep.value, DimValue::Finite(1));
        assert!(rep.consistent);
    }
}
