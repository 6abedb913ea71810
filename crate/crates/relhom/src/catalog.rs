//! Builtin algebras at desk scale: simples, projectives, injectives, the
//! classical balanced pair, the (Gorenstein projective, Gorenstein injective)
//! realization on self-injective entries, and a seeded default corpus.

use crate::algebra::{Algebra, AlgebraRef, Quiver, RelationInput, RelationTerm};
use crate::balanced::BalancedPair;
use crate::cotorsion::CotorsionSpec;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::module::Module;
use crate::resolution::{resolution_dimension, DimValue};
use crate::sample::Sampler;
use crate::subcat::{SideRole, Subcategory};
use crate::summand::{add_membership, is_isomorphic};
use crate::workspace::{CorpusEntry, Settings, Workspace};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

pub const BUILTIN_NAMES: [&str; 5] = ["semisimple2", "a2", "a3rad2", "kx2", "nak_cyc2"];

fn rel(labels: &[&str]) -> RelationInput {
    vec![RelationTerm { coeff: 1, path: labels.iter().map(|s| s.to_string()).collect() }]
}

fn build_algebra(name: &str) -> Result<AlgebraRef> {
    let fp = Fp::new(2).map_err(Error::Schema)?;
    match name {
        "semisimple2" => Algebra::build(name, Quiver::new(2, vec![]), &[], fp, 1),
        "a2" => Algebra::build(name, Quiver::new(2, vec![(0, 1, "a")]), &[], fp, 2),
        "a3rad2" => Algebra::build(
            name,
            Quiver::new(3, vec![(0, 1, "a"), (1, 2, "b")]),
            &[rel(&["a", "b"])],
            fp,
            2,
        ),
        "kx2" => Algebra::build(
            name,
            Quiver::new(1, vec![(0, 0, "x")]),
            &[rel(&["x", "x"])],
            fp,
            2,
        ),
        "nak_cyc2" => Algebra::build(
            name,
            Quiver::new(2, vec![(0, 1, "a"), (1, 0, "b")]),
            &[rel(&["a", "b"]), rel(&["b", "a"])],
            fp,
            2,
        ),
        other => Err(Error::DanglingReference(format!("builtin workspace `{other}`"))),
    }
}

/// Assemble the standard workspace around a built algebra: named simples,
/// projectives and injectives, proj/inj/all subcategories, the classical
/// pair, the (all, all) pair on self-injective entries, and the seeded
/// default corpus.
pub fn builtin_workspace(name: &str) -> Result<Workspace> {
    let algebra = build_algebra(name)?;
    let settings = Settings::default();
    let nv = algebra.vertex_count();

    let mut modules: IndexMap<String, Module> = IndexMap::new();
    for i in 0..nv {
        modules.insert(format!("S{}", i + 1), algebra.simple(i));
    }
    for i in 0..nv {
        modules.insert(format!("P{}", i + 1), algebra.projective(i));
    }
    for i in 0..nv {
        modules.insert(format!("I{}", i + 1), algebra.injective(i));
    }

    // corpus: simples ∪ projectives ∪ injectives ∪ cokernels of seeded random
    // morphisms between projectives, deduplicated up to isomorphism
    let mut corpus: Vec<CorpusEntry> = Vec::new();
    let push_entry = |corpus: &mut Vec<CorpusEntry>, name: String, m: Module, prov: &str| {
        if m.is_zero() {
            return;
        }
        if corpus.iter().any(|e| is_isomorphic(&e.module, &m)) {
            return;
        }
        corpus.push(CorpusEntry { name, module: m, provenance: prov.to_string() });
    };
    for i in 0..nv {
        push_entry(&mut corpus, format!("S{}", i + 1), algebra.simple(i), "simple");
    }
    for i in 0..nv {
        push_entry(&mut corpus, format!("P{}", i + 1), algebra.projective(i), "projective");
    }
    for i in 0..nv {
        push_entry(&mut corpus, format!("I{}", i + 1), algebra.injective(i), "injective");
    }
    let mut sampler = Sampler::new(settings.seed);
    let projectives: Vec<Module> = (0..nv).map(|i| algebra.projective(i)).collect();
    let mut coker_count = 0;
    for k in 0..10 {
        let a = sampler.pick(&projectives).clone();
        let b = sampler.pick(&projectives).clone();
        let f = sampler.morphism(&a, &b);
        let (c, _) = crate::module::cokernel(&f);
        if c.is_zero() {
            continue;
        }
        let cname = format!("C{}", coker_count + 1);
        let before = corpus.len();
        push_entry(
            &mut corpus,
            cname.clone(),
            c.clone(),
            &format!("cokernel of seeded morphism {k} between projectives"),
        );
        if corpus.len() > before {
            modules.insert(cname, c);
            coker_count += 1;
        }
    }

    let proj_gens: Vec<Module> = (0..nv).map(|i| algebra.projective(i)).collect();
    let inj_gens: Vec<Module> = (0..nv).map(|i| algebra.injective(i)).collect();
    let all_gens: Vec<Module> = corpus.iter().map(|e| e.module.clone()).collect();

    let mut subcategories: IndexMap<String, Subcategory> = IndexMap::new();
    subcategories.insert(
        "proj".into(),
        Subcategory::new("proj", proj_gens.clone(), SideRole::Contravariant)
            .with_flags(true, false),
    );
    subcategories.insert(
        "inj".into(),
        Subcategory::new("inj", inj_gens.clone(), SideRole::Covariant).with_flags(false, true),
    );
    subcategories.insert(
        "all".into(),
        Subcategory::new("all", all_gens, SideRole::Both).with_flags(true, true),
    );

    let mut pairs: IndexMap<String, BalancedPair> = IndexMap::new();
    pairs.insert(
        "proj_inj".into(),
        BalancedPair::new(
            "proj_inj",
            subcategories["proj"].clone(),
            subcategories["inj"].clone(),
        ),
    );
    let self_injective = proj_gens
        .iter()
        .all(|p| add_membership(p, &inj_gens).is_some())
        && inj_gens.iter().all(|i| add_membership(i, &proj_gens).is_some());
    if self_injective {
        // over a self-injective algebra every module is Gorenstein projective
        // and Gorenstein injective: (GProj, GInj) = (all, all) at corpus scale
        pairs.insert(
            "gproj_ginj".into(),
            BalancedPair::new(
                "gproj_ginj",
                subcategories["all"].clone(),
                subcategories["all"].clone(),
            ),
        );
    }

    let mut cotorsion_specs: IndexMap<String, CotorsionSpec> = IndexMap::new();
    cotorsion_specs.insert(
        "proj_all".into(),
        CotorsionSpec {
            name: "proj_all".into(),
            pair_name: "proj_inj".into(),
            c: subcategories["proj"].clone(),
            d: subcategories["all"].clone(),
        },
    );
    cotorsion_specs.insert(
        "all_inj".into(),
        CotorsionSpec {
            name: "all_inj".into(),
            pair_name: "proj_inj".into(),
            c: subcategories["all"].clone(),
            d: subcategories["inj"].clone(),
        },
    );
    if self_injective {
        cotorsion_specs.insert(
            "gp_all_all".into(),
            CotorsionSpec {
                name: "gp_all_all".into(),
                pair_name: "gproj_ginj".into(),
                c: subcategories["all"].clone(),
                d: subcategories["all"].clone(),
            },
        );
    }

    Ok(Workspace {
        name: name.to_string(),
        algebra,
        modules,
        morphisms: IndexMap::new(),
        subcategories,
        pairs,
        cotorsion_specs,
        corpus,
        settings,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra_dim: usize,
    pub self_injective: bool,
    /// max projective dimension of the simples, when finite within the cap
    pub global_dimension: Option<usize>,
    pub registered_pairs: Vec<String>,
}

/// Build every builtin workspace and derive its catalog markers.
pub fn builtin_catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for name in BUILTIN_NAMES {
        let w = builtin_workspace(name)?;
        let proj = &w.subcategories["proj"];
        let mut gl = Some(0usize);
        for i in 0..w.algebra.vertex_count() {
            let rep = resolution_dimension(&w.algebra.simple(i), proj, w.settings.cap)?;
            match rep.value {
                DimValue::Finite(n) => gl = gl.map(|g| g.max(n)),
                DimValue::ExceedsCap(_) => gl = None,
            }
            if gl.is_none() {
                break;
            }
        }
        out.push(CatalogEntry {
            name: name.to_string(),
            algebra_dim: w.algebra.dim(),
            self_injective: w.pairs.contains_key("gproj_ginj"),
            global_dimension: gl,
            registered_pairs: w.pairs.keys().cloned().collect(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_build() {
        for name in BUILTIN_NAMES {
            let w = builtin_workspace(name).unwrap();
            assert!(!w.corpus.is_empty(), "{name}");
            assert!(w.pairs.contains_key("proj_inj"));
        }
    }

    #[test]
    fn catalog_markers() {
        let cat = builtin_catalog().unwrap();
        let find = |n: &str| cat.iter().find(|e| e.name == n).unwrap();
        assert_eq!(find("semisimple2").global_dimension, Some(0));
        assert!(find("semisimple2").self_injective);
        assert_eq!(find("a2").global_dimension, Some(1));
        assert!(!find("a2").self_injective);
        assert_eq!(find("a3rad2").global_dimension, Some(2));
        assert_eq!(find("kx2").global_dimension, None);
        assert!(find("kx2").self_injective);
        assert!(find("nak_cyc2").self_injective);
        assert_eq!(find("nak_cyc2").global_dimension, None);
    }

    #[test]
    fn algebra_dimensions() {
        let cat = builtin_catalog().unwrap();
        let find = |n: &str| cat.iter().find(|e| e.name == n).unwrap();
        assert_eq!(find("semisimple2").algebra_dim, 2);
        assert_eq!(find("a2").algebra_dim, 3);
        assert_eq!(find("a3rad2").algebra_dim, 5);
        assert_eq!(find("kx2").algebra_dim, 2);
        assert_eq!(find("nak_cyc2").algebra_dim, 4);
    }

    #[test]
    fn self_injective_entries_register_gorenstein_pair() {
        let w = builtin_workspace("kx2").unwrap();
        assert!(w.pairs.contains_key("gproj_ginj"));
        assert!(w.cotorsion_specs.contains_key("gp_all_all"));
        let w = builtin_workspace("a2").unwrap();
        assert!(!w.pairs.contains_key("gproj_ginj"));
    }

    #[test]
    fn a3rad2_resolution_of_first_simple() {
        let w = builtin_workspace("a3rad2").unwrap();
        let rep =
            resolution_dimension(&w.algebra.simple(0), &w.subcategories["proj"], 6).unwrap();
        assert_eq!(rep.value, DimValue::Finite(2));
    }
}
