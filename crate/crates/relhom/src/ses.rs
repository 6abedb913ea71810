//! Short exact sequences, pullbacks and pushouts.
//!
//! A sequence is stored as its two maps; exactness is verified by rank
//! conditions at construction. Pullback objects come from the canonical
//! kernel recipe, pushouts from the cokernel recipe, and relative-acyclicity
//! certificates of induced rows are always recomputed rather than inherited.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homalg::{is_rel_acyclic, RelAcyclicityCert, Side};
use crate::module::{cokernel, direct_sum, kernel, Module, Morphism};
use crate::summand::{factor_through_epi, factor_through_mono};

#[derive(Clone, Debug, PartialEq)]
pub struct ShortExactSequence {
    left: Morphism,
    right: Morphism,
}

impl ShortExactSequence {
    pub fn new(left: Morphism, right: Morphism) -> Result<Self> {
        if left.target() != right.source() {
            return Err(Error::Schema("sequence maps are not composable".into()));
        }
        let s = ShortExactSequence { left, right };
        s.verify_exactness()?;
        Ok(s)
    }

    /// 0 -> A -> A⊕B -> B -> 0.
    pub fn split(a: &Module, b: &Module) -> Self {
        let sum = direct_sum(a.algebra(), &[a.clone(), b.clone()]);
        ShortExactSequence {
            left: sum.injections[0].clone(),
            right: sum.projections[1].clone(),
        }
    }

    /// Complete an epimorphism by its kernel.
    pub fn from_epi(epi: &Morphism) -> Result<Self> {
        if !epi.is_epi() {
            return Err(Error::Precondition("map is not an epimorphism".into()));
        }
        let (_, incl) = kernel(epi);
        ShortExactSequence::new(incl, epi.clone())
    }

    /// Complete a monomorphism by its cokernel.
    pub fn from_mono(mono: &Morphism) -> Result<Self> {
        if !mono.is_mono() {
            return Err(Error::Precondition("map is not a monomorphism".into()));
        }
        let (_, proj) = cokernel(mono);
        ShortExactSequence::new(mono.clone(), proj)
    }

    fn verify_exactness(&self) -> Result<()> {
        let fail = |detail: &str| {
            Err(Error::Invariant { location: "short exact sequence".into(), detail: detail.into() })
        };
        if !self.left.is_mono() {
            return fail("left map is not monic");
        }
        if !self.right.is_epi() {
            return fail("right map is not epic");
        }
        if !self.left.then(&self.right).is_zero() {
            return fail("composition is nonzero");
        }
        for v in 0..self.left.source().dims().len() {
            let mid = self.left.target().dim_at(v);
            let ker_right = mid - self.right.block(v).rank();
            if ker_right != self.left.block(v).rank() {
                return fail("not exact at the middle term");
            }
        }
        Ok(())
    }

    pub fn sub_term(&self) -> &Module {
        self.left.source()
    }

    pub fn mid_term(&self) -> &Module {
        self.left.target()
    }

    pub fn quot_term(&self) -> &Module {
        self.right.target()
    }

    pub fn left(&self) -> &Morphism {
        &self.left
    }

    pub fn right(&self) -> &Morphism {
        &self.right
    }

    /// The sequence as a three-term complex in degrees 0, 1, 2.
    pub fn as_complex(&self) -> Complex {
        Complex::new_unchecked(
            self.sub_term().algebra().clone(),
            0,
            vec![self.sub_term().clone(), self.mid_term().clone(), self.quot_term().clone()],
            vec![self.left.clone(), self.right.clone()],
        )
    }

    /// Recompute the relative-acyclicity certificate of this sequence.
    pub fn certify(&self, side: Side, generators: &[Module]) -> RelAcyclicityCert {
        is_rel_acyclic(&self.as_complex(), side, generators)
    }

    pub fn is_split(&self) -> bool {
        crate::summand::add_membership(
            self.mid_term(),
            &[self.sub_term().clone(), self.quot_term().clone()],
        )
        .is_some()
            && {
                let sum = direct_sum(
                    self.sub_term().algebra(),
                    &[self.sub_term().clone(), self.quot_term().clone()],
                );
                crate::summand::is_isomorphic(self.mid_term(), &sum.total)
            }
    }
}

/// Certificate pair for a *-acyclic sequence: right-X and left-Y tables.
#[derive(Clone, Debug)]
pub struct StarAcyclicWitness {
    pub sequence: ShortExactSequence,
    pub right_cert: RelAcyclicityCert,
    pub left_cert: RelAcyclicityCert,
}

impl StarAcyclicWitness {
    pub fn certify(
        sequence: ShortExactSequence,
        x_generators: &[Module],
        y_generators: &[Module],
    ) -> Option<Self> {
        let right_cert = sequence.certify(Side::Right, x_generators);
        let left_cert = sequence.certify(Side::Left, y_generators);
        (right_cert.acyclic && left_cert.acyclic)
            .then_some(StarAcyclicWitness { sequence, right_cert, left_cert })
    }

    /// Re-verify the stored certificates from scratch.
    pub fn reverify(&self, x_generators: &[Module], y_generators: &[Module]) -> bool {
        self.sequence.certify(Side::Right, x_generators).acyclic
            && self.sequence.certify(Side::Left, y_generators).acyclic
    }
}

/// The canonical pullback square of g and alpha over their common target.
pub struct PullbackSquare {
    pub object: Module,
    /// projection to the source of g
    pub to_g_source: Morphism,
    /// projection to the source of alpha
    pub to_alpha_source: Morphism,
    /// inclusion of the pullback into the biproduct of the two sources
    pub incl: Morphism,
}

pub fn pullback_square(g: &Morphism, alpha: &Morphism) -> PullbackSquare {
    assert!(g.target() == alpha.target(), "pullback needs a common target");
    let algebra = g.source().algebra().clone();
    let sum = direct_sum(&algebra, &[g.source().clone(), alpha.source().clone()]);
    let difference = sum.projections[0]
        .then(g)
        .sub(&sum.projections[1].then(alpha));
    let (object, incl) = kernel(&difference);
    PullbackSquare {
        object,
        to_g_source: incl.then(&sum.projections[0]),
        to_alpha_source: incl.then(&sum.projections[1]),
        incl,
    }
}

/// The canonical pushout square of f and s under their common source.
pub struct PushoutSquare {
    pub object: Module,
    /// injection from the target of f
    pub from_f_target: Morphism,
    /// injection from the target of s
    pub from_s_target: Morphism,
    /// projection from the biproduct of the two targets onto the pushout
    pub proj: Morphism,
}

pub fn pushout_square(f: &Morphism, s: &Morphism) -> PushoutSquare {
    assert!(f.source() == s.source(), "pushout needs a common source");
    let algebra = f.source().algebra().clone();
    let sum = direct_sum(&algebra, &[f.target().clone(), s.target().clone()]);
    let combined = f.then(&sum.injections[0]).sub(&s.then(&sum.injections[1]));
    let (object, proj) = cokernel(&combined);
    PushoutSquare {
        object,
        from_f_target: sum.injections[0].then(&proj),
        from_s_target: sum.injections[1].then(&proj),
        proj,
    }
}

pub struct InducedPullback {
    /// 0 -> L -> M' -> N' -> 0 over the original 0 -> L -> M -> N -> 0
    pub top: ShortExactSequence,
    /// the comparison map M' -> M
    pub to_mid: Morphism,
}

/// Pull a short exact sequence back along alpha: N' -> N.
pub fn pullback_of_sequence(ses: &ShortExactSequence, alpha: &Morphism) -> Result<InducedPullback> {
    assert!(alpha.target() == ses.quot_term(), "alpha must land in the quotient term");
    let square = pullback_square(ses.right(), alpha);
    // L -> M' induced by (left, 0), factored through the kernel inclusion
    let algebra = ses.sub_term().algebra().clone();
    let sum = direct_sum(&algebra, &[ses.mid_term().clone(), alpha.source().clone()]);
    let into_sum = ses.left().then(&sum.injections[0]);
    let left = factor_through_mono(&square.incl, &into_sum);
    let top = ShortExactSequence::new(left, square.to_alpha_source.clone())?;
    Ok(InducedPullback { top, to_mid: square.to_g_source })
}

pub struct InducedPushout {
    /// 0 -> L' -> M'' -> N -> 0 under the original 0 -> L -> M -> N -> 0
    pub bottom: ShortExactSequence,
    /// the comparison map M -> M''
    pub from_mid: Morphism,
}

/// Push a short exact sequence out along s: L -> L'.
pub fn pushout_of_sequence(ses: &ShortExactSequence, s: &Morphism) -> Result<InducedPushout> {
    assert!(s.source() == ses.sub_term(), "s must start at the sub term");
    let square = pushout_square(ses.left(), s);
    // M'' -> N induced by (right, 0), factored through the cokernel projection
    let algebra = ses.sub_term().algebra().clone();
    let sum = direct_sum(&algebra, &[ses.mid_term().clone(), s.target().clone()]);
    let onto_n = sum.projections[0].then(ses.right());
    let right = factor_through_epi(&square.proj, &onto_n);
    let bottom = ShortExactSequence::new(square.from_s_target.clone(), right)?;
    Ok(InducedPushout { bottom, from_mid: square.from_f_target })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, AlgebraRef, Quiver, RelationTerm};
    use crate::field::Fp;
    use crate::module::hom_basis;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn kx2() -> AlgebraRef {
        let rel = vec![RelationTerm { coeff: 1, path: vec!["x".into(), "x".into()] }];
        Algebra::build("kx2", Quiver::new(1, vec![(0, 0, "x")]), &[rel], f2(), 4).unwrap()
    }

    /// 0 -> S -> P -> S -> 0 over kx2.
    fn socle_sequence(alg: &AlgebraRef) -> ShortExactSequence {
        let p = alg.projective(0);
        let s = alg.simple(0);
        let socle = hom_basis(&s, &p).remove(0);
        let aug = hom_basis(&p, &s).remove(0);
        ShortExactSequence::new(socle, aug).unwrap()
    }

    #[test]
    fn split_sequence_is_exact_and_split() {
        let alg = kx2();
        let p = alg.projective(0);
        let s = alg.simple(0);
        let ses = ShortExactSequence::split(&s, &p);
        assert!(ses.is_split());
        assert_eq!(ses.mid_term().total_dim(), 3);
    }

    #[test]
    fn socle_sequence_is_exact_not_split() {
        let alg = kx2();
        let ses = socle_sequence(&alg);
        assert!(!ses.is_split());
        assert!(crate::homalg::is_acyclic(&ses.as_complex()).acyclic);
    }

    #[test]
    fn pullback_along_identity_is_isomorphic_top() {
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let alpha = Morphism::identity(ses.quot_term());
        let induced = pullback_of_sequence(&ses, &alpha).unwrap();
        assert!(induced.to_mid.is_iso());
        assert_eq!(induced.top.mid_term().dims(), ses.mid_term().dims());
    }

    #[test]
    fn pullback_along_zero_splits() {
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let s = alg.simple(0);
        let alpha = Morphism::zero(&s, ses.quot_term());
        let induced = pullback_of_sequence(&ses, &alpha).unwrap();
        assert!(induced.top.is_split());
    }

    #[test]
    fn pullback_along_cover_has_dimension_three_mid() {
        // bottom 0 -> S -> P -> S -> 0, alpha: P ->> S
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let p = alg.projective(0);
        let alpha = hom_basis(&p, ses.quot_term()).remove(0);
        assert!(alpha.is_epi());
        let induced = pullback_of_sequence(&ses, &alpha).unwrap();
        assert_eq!(induced.top.mid_term().total_dim(), 3);
        // right-proj-acyclicity certificate recomputes on the induced row
        assert!(induced.top.certify(Side::Right, &[p.clone()]).acyclic);
    }

    #[test]
    fn pushout_along_identity_and_zero() {
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let id = Morphism::identity(ses.sub_term());
        let induced = pushout_of_sequence(&ses, &id).unwrap();
        assert!(induced.from_mid.is_iso());

        let p = alg.projective(0);
        let zero = Morphism::zero(ses.sub_term(), &p);
        let induced = pushout_of_sequence(&ses, &zero).unwrap();
        assert!(induced.bottom.is_split());
    }

    #[test]
    fn pushout_along_socle_embedding() {
        // top 0 -> S -> P -> S -> 0 pushed along S -> P: middle dimension 3
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let p = alg.projective(0);
        let s_to_p = hom_basis(ses.sub_term(), &p).remove(0);
        assert!(s_to_p.is_mono());
        let induced = pushout_of_sequence(&ses, &s_to_p).unwrap();
        assert_eq!(induced.bottom.mid_term().total_dim(), 3);
        assert_eq!(induced.bottom.sub_term().dims(), p.dims());
        assert!(induced.bottom.certify(Side::Left, &[alg.injective(0)]).acyclic);
    }

    #[test]
    fn pullback_square_universal_property_spot_check() {
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let p = alg.projective(0);
        let alpha = hom_basis(&p, ses.quot_term()).remove(0);
        let square = pullback_square(ses.right(), &alpha);
        // for every pair (u, v) with right∘u = alpha∘v there is w through the
        // pullback; test with the universal cone itself and with zero maps
        let w_maps = hom_basis(&square.object, &square.object);
        assert!(!w_maps.is_empty());
        assert_eq!(
            square.to_g_source.then(ses.right()),
            square.to_alpha_source.then(&alpha)
        );
    }

    #[test]
    fn star_witness_reverifies() {
        let alg = kx2();
        let ses = socle_sequence(&alg);
        let p = alg.projective(0);
        let i = alg.injective(0);
        let w = StarAcyclicWitness::certify(ses, &[p.clone()], &[i.clone()]).unwrap();
        assert!(w.reverify(&[p], &[i]));
    }
}
