//! Workspace files: the `relhom/1` JSON schema, loading with full invariant
//! verification, and canonical saving.
//!
//! A workspace bundles one algebra, named modules with their representations,
//! named subcategories/pairs/cotorsion specs (by reference), an ordered
//! corpus with provenance, and run settings. Loading rejects files whose
//! modules violate the relations or whose morphisms fail to intertwine,
//! naming the offending location.

use crate::algebra::{Algebra, AlgebraRef, Quiver, RelationInput, RelationTerm};
use crate::balanced::BalancedPair;
use crate::cotorsion::CotorsionSpec;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::module::{Module, Morphism};
use crate::subcat::{SideRole, Subcategory};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "relhom/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Settings {
    pub depth: usize,
    pub cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { depth: 8, cap: 6, samples: 50, seed: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub module: Module,
    pub provenance: String,
}

#[derive(Debug)]
pub struct Workspace {
    pub name: String,
    pub algebra: AlgebraRef,
    pub modules: IndexMap<String, Module>,
    pub morphisms: IndexMap<String, Morphism>,
    pub subcategories: IndexMap<String, Subcategory>,
    pub pairs: IndexMap<String, BalancedPair>,
    pub cotorsion_specs: IndexMap<String, CotorsionSpec>,
    pub corpus: Vec<CorpusEntry>,
    pub settings: Settings,
}

impl Workspace {
    pub fn corpus_modules(&self) -> Vec<Module> {
        self.corpus.iter().map(|e| e.module.clone()).collect()
    }

    pub fn module(&self, name: &str) -> Result<&Module> {
        self.modules
            .get(name)
            .ok_or_else(|| Error::DanglingReference(format!("module `{name}`")))
    }

    pub fn subcategory(&self, name: &str) -> Result<&Subcategory> {
        self.subcategories
            .get(name)
            .ok_or_else(|| Error::DanglingReference(format!("subcategory `{name}`")))
    }

    /// Exact pair lookup, falling back to a unique prefix match so that
    /// `proj` and `gproj` resolve to `proj_inj` and `gproj_ginj`.
    pub fn pair(&self, name: &str) -> Result<&BalancedPair> {
        if let Some(p) = self.pairs.get(name) {
            return Ok(p);
        }
        let matches: Vec<&BalancedPair> = self
            .pairs
            .values()
            .filter(|p| p.name.starts_with(name))
            .collect();
        match matches.as_slice() {
            [one] => Ok(one),
            _ => Err(Error::DanglingReference(format!("balanced pair `{name}`"))),
        }
    }

    pub fn cotorsion_spec(&self, name: &str) -> Result<&CotorsionSpec> {
        self.cotorsion_specs
            .get(name)
            .ok_or_else(|| Error::DanglingReference(format!("cotorsion spec `{name}`")))
    }

    /// Find a registered pair whose contravariant half is the named
    /// subcategory.
    pub fn pair_with_x(&self, sub_name: &str) -> Option<&BalancedPair> {
        self.pairs.values().find(|p| p.x.name == sub_name)
    }
}

// ---------------------------------------------------------------------------
// file schema

#[derive(Serialize, Deserialize)]
struct FileRoot {
    schema: String,
    name: String,
    field: u64,
    path_cap: usize,
    quiver: FileQuiver,
    #[serde(default)]
    relations: Vec<Vec<FileRelTerm>>,
    #[serde(default)]
    modules: IndexMap<String, FileModule>,
    #[serde(default)]
    morphisms: IndexMap<String, FileMorphism>,
    #[serde(default)]
    subcategories: IndexMap<String, FileSubcategory>,
    #[serde(default)]
    pairs: IndexMap<String, FilePair>,
    #[serde(default)]
    cotorsion: IndexMap<String, FileCotorsion>,
    #[serde(default)]
    corpus: Vec<FileCorpusEntry>,
    #[serde(default)]
    settings: Option<Settings>,
}

#[derive(Serialize, Deserialize)]
struct FileQuiver {
    vertices: usize,
    arrows: Vec<(usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct FileRelTerm {
    path: Vec<String>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct FileModule {
    dims: Vec<usize>,
    /// one matrix per arrow, in quiver arrow order, rows of integers mod p
    action: Vec<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize)]
struct FileMorphism {
    source: String,
    target: String,
    /// one block per vertex, rows of integers mod p
    blocks: Vec<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize)]
struct FileSubcategory {
    generators: Vec<String>,
    role: String,
    #[serde(default)]
    contains_projectives: bool,
    #[serde(default)]
    contains_injectives: bool,
}

#[derive(Serialize, Deserialize)]
struct FilePair {
    x: String,
    y: String,
}

#[derive(Serialize, Deserialize)]
struct FileCotorsion {
    pair: String,
    c: String,
    d: String,
}

#[derive(Serialize, Deserialize)]
struct FileCorpusEntry {
    name: String,
    module: String,
    provenance: String,
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c) as i64).collect())
        .collect()
}

fn rows_to_matrix(fp: Fp, rows: usize, cols: usize, data: &[Vec<i64>]) -> Result<Matrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::Schema(format!(
            "matrix shape mismatch: expected {rows}x{cols}"
        )));
    }
    // dimensions come from the declared dims; zero-row/zero-column matrices
    // carry no shape of their own in the row encoding
    Ok(Matrix::from_fn(fp, rows, cols, |r, c| fp.reduce(data[r][c])))
}

pub fn save_workspace(w: &Workspace) -> Result<String> {
    let q = w.algebra.quiver();
    let root = FileRoot {
        schema: SCHEMA.to_string(),
        name: w.name.clone(),
        field: w.algebra.fp().modulus(),
        path_cap: w.algebra.cap(),
        quiver: FileQuiver {
            vertices: q.vertex_count,
            arrows: q.arrows.iter().map(|a| (a.src, a.tgt, a.label.clone())).collect(),
        },
        relations: w
            .algebra
            .relations()
            .iter()
            .map(|lc| {
                lc.terms()
                    .map(|(p, c)| FileRelTerm {
                        path: p.arrows.iter().map(|&i| q.arrows[i].label.clone()).collect(),
                        coeff: c as i64,
                    })
                    .collect()
            })
            .collect(),
        modules: w
            .modules
            .iter()
            .map(|(name, m)| {
                (
                    name.clone(),
                    FileModule {
                        dims: m.dims().to_vec(),
                        action: (0..q.arrows.len())
                            .map(|a| matrix_to_rows(m.action(a)))
                            .collect(),
                    },
                )
            })
            .collect(),
        morphisms: w
            .morphisms
            .iter()
            .map(|(name, f)| {
                let source = w
                    .modules
                    .iter()
                    .find(|(_, m)| *m == f.source())
                    .map(|(n, _)| n.clone())
                    .unwrap_or_default();
                let target = w
                    .modules
                    .iter()
                    .find(|(_, m)| *m == f.target())
                    .map(|(n, _)| n.clone())
                    .unwrap_or_default();
                (
                    name.clone(),
                    FileMorphism {
                        source,
                        target,
                        blocks: f.blocks().iter().map(matrix_to_rows).collect(),
                    },
                )
            })
            .collect(),
        subcategories: w
            .subcategories
            .iter()
            .map(|(name, s)| {
                let generators = s
                    .generators()
                    .iter()
                    .map(|g| {
                        w.modules
                            .iter()
                            .find(|(_, m)| *m == g)
                            .map(|(n, _)| n.clone())
                            .unwrap_or_default()
                    })
                    .collect();
                let role = match s.side_role {
                    SideRole::Contravariant => "contravariant",
                    SideRole::Covariant => "covariant",
                    SideRole::Both => "both",
                };
                (
                    name.clone(),
                    FileSubcategory {
                        generators,
                        role: role.to_string(),
                        contains_projectives: s.contains_projectives,
                        contains_injectives: s.contains_injectives,
                    },
                )
            })
            .collect(),
        pairs: w
            .pairs
            .iter()
            .map(|(name, p)| (name.clone(), FilePair { x: p.x.name.clone(), y: p.y.name.clone() }))
            .collect(),
        cotorsion: w
            .cotorsion_specs
            .iter()
            .map(|(name, s)| {
                (
                    name.clone(),
                    FileCotorsion {
                        pair: s.pair_name.clone(),
                        c: s.c.name.clone(),
                        d: s.d.name.clone(),
                    },
                )
            })
            .collect(),
        corpus: w
            .corpus
            .iter()
            .map(|e| FileCorpusEntry {
                name: e.name.clone(),
                module: e.name.clone(),
                provenance: e.provenance.clone(),
            })
            .collect(),
        settings: Some(w.settings.clone()),
    };
    Ok(serde_json::to_string_pretty(&root)? + "\n")
}

pub fn load_workspace(text: &str) -> Result<Workspace> {
    let root: FileRoot = serde_json::from_str(text)?;
    if root.schema != SCHEMA {
        return Err(Error::Schema(format!(
            "unsupported schema `{}` (expected `{SCHEMA}`)",
            root.schema
        )));
    }
    let fp = Fp::new(root.field).map_err(Error::Schema)?;
    let quiver = Quiver {
        vertex_count: root.quiver.vertices,
        arrows: root
            .quiver
            .arrows
            .iter()
            .map(|(s, t, l)| crate::algebra::Arrow { src: *s, tgt: *t, label: l.clone() })
            .collect(),
    };
    let relations: Vec<RelationInput> = root
        .relations
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| RelationTerm { coeff: t.coeff, path: t.path.clone() })
                .collect()
        })
        .collect();
    let algebra = Algebra::build(&root.name, quiver, &relations, fp, root.path_cap)?;
    let q = algebra.quiver();

    let mut modules: IndexMap<String, Module> = IndexMap::new();
    for (name, fm) in &root.modules {
        if fm.dims.len() != q.vertex_count || fm.action.len() != q.arrows.len() {
            return Err(Error::Schema(format!("module `{name}` shape mismatch")));
        }
        let mut action = Vec::new();
        for (aidx, a) in q.arrows.iter().enumerate() {
            let m = rows_to_matrix(fp, fm.dims[a.tgt], fm.dims[a.src], &fm.action[aidx])
                .map_err(|e| Error::Schema(format!("module `{name}`, arrow `{}`: {e}", a.label)))?;
            action.push(m);
        }
        let module = Module::new(algebra.clone(), fm.dims.clone(), action).map_err(|e| {
            Error::Invariant {
                location: format!("module `{name}`"),
                detail: e.to_string(),
            }
        })?;
        modules.insert(name.clone(), module);
    }

    let mut morphisms: IndexMap<String, Morphism> = IndexMap::new();
    for (name, fmor) in &root.morphisms {
        let source = modules
            .get(&fmor.source)
            .ok_or_else(|| Error::DanglingReference(format!("morphism `{name}` source")))?
            .clone();
        let target = modules
            .get(&fmor.target)
            .ok_or_else(|| Error::DanglingReference(format!("morphism `{name}` target")))?
            .clone();
        let mut blocks = Vec::new();
        for v in 0..q.vertex_count {
            blocks.push(
                rows_to_matrix(fp, target.dims()[v], source.dims()[v], &fmor.blocks[v]).map_err(
                    |e| Error::Schema(format!("morphism `{name}`, vertex {v}: {e}")),
                )?,
            );
        }
        let f = Morphism::new(source, target, blocks).map_err(|e| Error::Invariant {
            location: format!("morphism `{name}`"),
            detail: e.to_string(),
        })?;
        morphisms.insert(name.clone(), f);
    }

    let mut subcategories: IndexMap<String, Subcategory> = IndexMap::new();
    for (name, fs) in &root.subcategories {
        let mut generators = Vec::new();
        for g in &fs.generators {
            generators.push(
                modules
                    .get(g)
                    .ok_or_else(|| {
                        Error::DanglingReference(format!("subcategory `{name}` generator `{g}`"))
                    })?
                    .clone(),
            );
        }
        let role = match fs.role.as_str() {
            "contravariant" => SideRole::Contravariant,
            "covariant" => SideRole::Covariant,
            "both" => SideRole::Both,
            other => return Err(Error::Schema(format!("unknown side role `{other}`"))),
        };
        subcategories.insert(
            name.clone(),
            Subcategory::new(name, generators, role)
                .with_flags(fs.contains_projectives, fs.contains_injectives),
        );
    }

    let mut pairs: IndexMap<String, BalancedPair> = IndexMap::new();
    for (name, fp_) in &root.pairs {
        let x = subcategories
            .get(&fp_.x)
            .ok_or_else(|| Error::DanglingReference(format!("pair `{name}` half `{}`", fp_.x)))?
            .clone();
        let y = subcategories
            .get(&fp_.y)
            .ok_or_else(|| Error::DanglingReference(format!("pair `{name}` half `{}`", fp_.y)))?
            .clone();
        pairs.insert(name.clone(), BalancedPair::new(name, x, y));
    }

    let mut cotorsion_specs: IndexMap<String, CotorsionSpec> = IndexMap::new();
    for (name, fc) in &root.cotorsion {
        let c = subcategories
            .get(&fc.c)
            .ok_or_else(|| Error::DanglingReference(format!("spec `{name}` class `{}`", fc.c)))?
            .clone();
        let d = subcategories
            .get(&fc.d)
            .ok_or_else(|| Error::DanglingReference(format!("spec `{name}` class `{}`", fc.d)))?
            .clone();
        if !pairs.contains_key(&fc.pair) {
            return Err(Error::DanglingReference(format!(
                "spec `{name}` pair `{}`",
                fc.pair
            )));
        }
        cotorsion_specs.insert(
            name.clone(),
            CotorsionSpec { name: name.clone(), pair_name: fc.pair.clone(), c, d },
        );
    }

    let mut corpus = Vec::new();
    for e in &root.corpus {
        let module = modules
            .get(&e.module)
            .ok_or_else(|| Error::DanglingReference(format!("corpus entry `{}`", e.name)))?
            .clone();
        corpus.push(CorpusEntry {
            name: e.name.clone(),
            module,
            provenance: e.provenance.clone(),
        });
    }

    Ok(Workspace {
        name: root.name,
        algebra,
        modules,
        morphisms,
        subcategories,
        pairs,
        cotorsion_specs,
        corpus,
        settings: root.settings.unwrap_or_default(),
    })
}
