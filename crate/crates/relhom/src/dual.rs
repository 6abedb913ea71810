//! Vector-space duality between a quiver algebra and its opposite.
//!
//! D(-) is a contravariant exact equivalence mod A -> mod A^op: dimensions
//! per vertex are kept, arrow actions transpose, morphisms reverse, complexes
//! flip degrees. Dual statements (coresolutions, left acyclicity, colifting)
//! reduce to their primal versions over the opposite algebra.

use crate::algebra::AlgebraRef;
use crate::complex::{ChainMap, Complex};
use crate::module::{Module, Morphism};
use crate::subcat::{SideRole, Subcategory};
use std::collections::BTreeMap;

/// D(m) over the target algebra (the opposite of m's algebra, or the
/// original algebra when dualizing back).
pub fn dual_module(target: &AlgebraRef, m: &Module) -> Module {
    let action = (0..target.arrow_count())
        .map(|a| m.action(a).transpose())
        .collect();
    Module::new_unchecked(target.clone(), m.dims().to_vec(), action)
}

/// D(f): D(target) -> D(source), blocks transposed.
pub fn dual_morphism(target: &AlgebraRef, f: &Morphism) -> Morphism {
    let blocks = f.blocks().iter().map(|b| b.transpose()).collect();
    Morphism::new_unchecked(
        dual_module(target, f.target()),
        dual_module(target, f.source()),
        blocks,
    )
}

/// D(C): degree n becomes -n, differentials reverse.
pub fn dual_complex(target: &AlgebraRef, c: &Complex) -> Complex {
    if c.is_zero() {
        return Complex::zero(target.clone());
    }
    let lo = -c.hi();
    let hi = -c.lo();
    let terms: Vec<Module> = (lo..=hi).map(|m| dual_module(target, &c.term(-m))).collect();
    let diffs: Vec<Morphism> = (lo..hi)
        .map(|m| dual_morphism(target, &c.diff(-m - 1)))
        .collect();
    Complex::new_unchecked(target.clone(), lo, terms, diffs)
}

/// D of a chain map: D(target complex) -> D(source complex).
pub fn dual_chain_map(target: &AlgebraRef, f: &ChainMap) -> ChainMap {
    let source = dual_complex(target, f.target());
    let tgt = dual_complex(target, f.source());
    let components: BTreeMap<i32, Morphism> = f
        .source()
        .support()
        .chain(f.target().support())
        .map(|n| (-n, dual_morphism_component(target, f, n)))
        .collect();
    ChainMap::new_unchecked(source, tgt, components)
}

fn dual_morphism_component(target: &AlgebraRef, f: &ChainMap, n: i32) -> Morphism {
    let comp = f.component(n);
    let blocks = comp.blocks().iter().map(|b| b.transpose()).collect();
    Morphism::new_unchecked(
        dual_module(target, comp.target()),
        dual_module(target, comp.source()),
        blocks,
    )
}

/// Dual subcategory: generators dualized, side role flipped.
pub fn dual_subcategory(target: &AlgebraRef, s: &Subcategory) -> Subcategory {
    let gens = s.generators().iter().map(|g| dual_module(target, g)).collect();
    let role = match s.side_role {
        SideRole::Contravariant => SideRole::Covariant,
        SideRole::Covariant => SideRole::Contravariant,
        SideRole::Both => SideRole::Both,
    };
    Subcategory::new(&format!("{}^op", s.name), gens, role)
        .with_flags(s.contains_injectives, s.contains_projectives)
}
