//! Seeded random generation of morphisms, complexes and short exact
//! sequences. One ChaCha generator per run keeps every counterexample
//! reproducible from the recorded seed.

use crate::algebra::AlgebraRef;
use crate::complex::{cone, ChainMap, Complex};
use crate::homalg::chain_map_space;
use crate::module::{direct_sum, hom_basis, Module, Morphism};
use crate::ses::{pullback_of_sequence, pushout_of_sequence, ShortExactSequence};
use crate::subcat::Subcategory;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        let i = self.rng.random_range(0..items.len());
        &items[i]
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_range(0..2u32) == 1
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    /// Random element of Hom(m, n) (uniform coefficients on the hom basis).
    pub fn morphism(&mut self, m: &Module, n: &Module) -> Morphism {
        let p = m.algebra().fp().modulus();
        let mut f = Morphism::zero(m, n);
        for b in hom_basis(m, n) {
            let c = self.rng.random_range(0..p);
            if c != 0 {
                f = f.add(&b.scale(c));
            }
        }
        f
    }

    /// Random chain map in the solved chain-map space.
    pub fn chain_map(&mut self, from: &Complex, to: &Complex) -> ChainMap {
        let p = from.algebra().fp().modulus();
        let basis = chain_map_space(from, to);
        let mut f = ChainMap::zero(from, to);
        for b in &basis {
            let c = self.rng.random_range(0..p);
            if c != 0 {
                f = f.add(&b.scale(c));
            }
        }
        f
    }

    /// Direct sum of 1..=max_parts modules drawn from the pool.
    pub fn sum_from(&mut self, algebra: &AlgebraRef, pool: &[Module], max_parts: usize) -> Module {
        let count = self.rng.random_range(1..=max_parts);
        let parts: Vec<Module> = (0..count).map(|_| self.pick(pool).clone()).collect();
        direct_sum(algebra, &parts).total
    }

    /// Random bounded complex with all terms in add(pool), built by iterated
    /// mapping cones of random chain maps; d^2 = 0 holds by construction.
    pub fn bounded_complex(
        &mut self,
        algebra: &AlgebraRef,
        pool: &[Module],
        target_width: usize,
    ) -> Complex {
        let degree = self.range(-2, 2) as i32;
        let mut c = Complex::stalk(self.sum_from(algebra, pool, 2), degree);
        let mut guard = 0;
        while c.width() < target_width && guard < 4 * target_width {
            guard += 1;
            let degree = self.range((c.lo() - 1) as i64, (c.hi() + 1) as i64) as i32;
            let stalk = Complex::stalk(self.sum_from(algebra, pool, 2), degree);
            let (from, to) = if self.coin() { (stalk, c.clone()) } else { (c.clone(), stalk) };
            let f = self.chain_map(&from, &to);
            c = cone(&f).complex;
            if c.is_zero() {
                let degree = self.range(-2, 2) as i32;
                c = Complex::stalk(self.sum_from(algebra, pool, 2), degree);
            }
        }
        c
    }

    /// A pool of short exact sequences: approximation kernels and
    /// coapproximation cokernels of corpus objects, split sequences, and
    /// pullbacks/pushouts of earlier entries along random morphisms.
    pub fn sequence_pool(
        &mut self,
        x: &Subcategory,
        y: &Subcategory,
        corpus: &[Module],
        count: usize,
    ) -> Vec<ShortExactSequence> {
        let mut pool = Vec::new();
        for m in corpus {
            let approx = x.right_approximation(m);
            if approx.is_epi() && !approx.source().is_zero() {
                if let Ok(s) = ShortExactSequence::from_epi(&approx) {
                    pool.push(s);
                }
            }
            let coapprox = y.left_approximation(m);
            if coapprox.is_mono() && !coapprox.target().is_zero() {
                if let Ok(s) = ShortExactSequence::from_mono(&coapprox) {
                    pool.push(s);
                }
            }
        }
        for _ in 0..2 {
            let a = self.pick(corpus).clone();
            let b = self.pick(corpus).clone();
            if !a.is_zero() || !b.is_zero() {
                pool.push(ShortExactSequence::split(&a, &b));
            }
        }
        let mut i = 0;
        while pool.len() < count && i < 4 * count {
            i += 1;
            let idx = self.rng.random_range(0..pool.len());
            let base = pool[idx].clone();
            let derived = if self.coin() {
                let n_prime = self.pick(corpus).clone();
                let alpha = self.morphism(&n_prime, base.quot_term());
                pullback_of_sequence(&base, &alpha).map(|p| p.top)
            } else {
                let l_prime = self.pick(corpus).clone();
                let s = self.morphism(base.sub_term(), &l_prime);
                pushout_of_sequence(&base, &s).map(|p| p.bottom)
            };
            if let Ok(seq) = derived {
                if !seq.mid_term().is_zero() {
                    pool.push(seq);
                }
            }
        }
        pool.truncate(count);
        pool
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Quiver, RelationTerm};
    use crate::field::Fp;
    use crate::subcat::SideRole;

    fn kx2() -> AlgebraRef {
        let rel = vec![RelationTerm { coeff: 1, path: vec!["x".into(), "x".into()] }];
        Algebra::build("kx2", Quiver::new(1, vec![(0, 0, "x")]), &[rel], Fp::new(2).unwrap(), 4)
            .unwrap()
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let alg = kx2();
        let pool = vec![alg.projective(0), alg.simple(0)];
        let c1 = Sampler::new(7).bounded_complex(&alg, &pool, 3);
        let c2 = Sampler::new(7).bounded_complex(&alg, &pool, 3);
        assert_eq!(c1, c2);
        let c3 = Sampler::new(8).bounded_complex(&alg, &pool, 3);
        let _ = c3; // different seed may or may not differ; only determinism is asserted
    }

    #[test]
    fn generated_complexes_validate() {
        let alg = kx2();
        let pool = vec![alg.projective(0), alg.simple(0)];
        let mut s = Sampler::new(42);
        for _ in 0..10 {
            let c = s.bounded_complex(&alg, &pool, 4);
            // d^2 = 0 verified by reconstructing through the public API
            let rebuilt = Complex::new(
                alg.clone(),
                c.lo(),
                c.support().map(|n| c.term(n)).collect(),
                (c.lo()..c.hi()).map(|n| c.diff(n)).collect(),
            );
            assert!(rebuilt.is_ok());
        }
    }

    #[test]
    fn sequence_pool_is_nonempty_and_exact() {
        let alg = kx2();
        let corpus = vec![alg.simple(0), alg.projective(0)];
        let x = Subcategory::new("proj", vec![alg.projective(0)], SideRole::Contravariant);
        let y = Subcategory::new("inj", vec![alg.injective(0)], SideRole::Covariant);
        let mut s = Sampler::new(3);
        let pool = s.sequence_pool(&x, &y, &corpus, 12);
        assert!(pool.len() >= 4);
    }
}
