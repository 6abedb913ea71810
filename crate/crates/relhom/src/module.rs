//! Finite-dimensional representations of a bound quiver algebra and the
//! abelian-category calculus on them.
//!
//! A module is a dimension vector plus one matrix per arrow; a morphism is a
//! vertex-indexed family of matrices intertwining the two actions. Kernels,
//! cokernels and hom spaces all reduce to exact linear algebra per vertex.

use crate::algebra::{same_algebra, AlgebraRef, Path};
use crate::error::{Error, Result};
use crate::matrix::{coords_in_span, Matrix};

#[derive(Clone, PartialEq)]
pub struct Module {
    algebra: AlgebraRef,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module{:?}", self.dims)
    }
}

impl Module {
    pub fn new(algebra: AlgebraRef, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let m = Module { algebra, dims, action };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: AlgebraRef, dims: Vec<usize>, action: Vec<Matrix>) -> Self {
        let m = Module { algebra, dims, action };
        debug_assert!(m.validate().is_ok(), "internal module construction violates relations");
        m
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, vertex: usize) -> usize {
        self.dims[vertex]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.action[arrow]
    }

    /// Matrix of the action of a path: fiber at `path.source` to fiber at
    /// `path.target`, arrows applied in travel order.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let fp = self.algebra.fp();
        let mut m = Matrix::identity(fp, self.dims[path.source]);
        for &a in &path.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Checks shapes and that every defining relation acts as zero.
    pub fn validate(&self) -> Result<()> {
        let q = self.algebra.quiver();
        if self.dims.len() != q.vertex_count || self.action.len() != q.arrows.len() {
            return Err(Error::Schema("module shape does not match the quiver".into()));
        }
        for (idx, a) in q.arrows.iter().enumerate() {
            let m = &self.action[idx];
            if m.rows() != self.dims[a.tgt] || m.cols() != self.dims[a.src] {
                return Err(Error::Invariant {
                    location: format!("module action of arrow `{}`", a.label),
                    detail: format!(
                        "expected {}x{}, found {}x{}",
                        self.dims[a.tgt],
                        self.dims[a.src],
                        m.rows(),
                        m.cols()
                    ),
                });
            }
        }
        for (ri, rel) in self.algebra.relations().iter().enumerate() {
            let mut acc: Option<Matrix> = None;
            for (path, c) in rel.terms() {
                let term = self.path_action(path).scale(c);
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            if let Some(total) = acc {
                if !total.is_zero() {
                    return Err(Error::Invariant {
                        location: format!("relation {ri}"),
                        detail: "relation does not annihilate the representation".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq)]
pub struct Morphism {
    source: Module,
    target: Module,
    blocks: Vec<Matrix>,
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism{:?}->{:?}", self.source.dims, self.target.dims)
    }
}

impl Morphism {
    pub fn new(source: Module, target: Module, blocks: Vec<Matrix>) -> Result<Self> {
        assert!(same_algebra(&source.algebra, &target.algebra), "algebra mismatch");
        let f = Morphism { source, target, blocks };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, blocks: Vec<Matrix>) -> Self {
        let f = Morphism { source, target, blocks };
        debug_assert!(f.validate().is_ok(), "internal morphism fails to intertwine");
        f
    }

    pub fn validate(&self) -> Result<()> {
        let q = self.source.algebra.quiver();
        if self.blocks.len() != q.vertex_count {
            return Err(Error::Schema("morphism block count mismatch".into()));
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != self.target.dims[v] || b.cols() != self.source.dims[v] {
                return Err(Error::Invariant {
                    location: format!("morphism block at vertex {v}"),
                    detail: "block shape mismatch".into(),
                });
            }
        }
        for (idx, a) in q.arrows.iter().enumerate() {
            let lhs = self.blocks[a.tgt].mul(self.source.action(idx));
            let rhs = self.target.action(idx).mul(&self.blocks[a.src]);
            if lhs != rhs {
                return Err(Error::Invariant {
                    location: format!("arrow `{}` at vertices {}->{}", a.label, a.src, a.tgt),
                    detail: "morphism does not intertwine the actions".into(),
                });
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> Self {
        let fp = m.algebra.fp();
        let blocks = m.dims.iter().map(|&d| Matrix::identity(fp, d)).collect();
        Morphism::new_unchecked(m.clone(), m.clone(), blocks)
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let fp = source.algebra.fp();
        let blocks = (0..source.dims.len())
            .map(|v| Matrix::zero(fp, target.dims[v], source.dims[v]))
            .collect();
        Morphism::new_unchecked(source.clone(), target.clone(), blocks)
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn block(&self, vertex: usize) -> &Matrix {
        &self.blocks[vertex]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// Diagrammatic composition: `self` then `next`.
    pub fn then(&self, next: &Morphism) -> Morphism {
        assert!(self.target == next.source, "composition endpoint mismatch");
        let blocks = self
            .blocks
            .iter()
            .zip(&next.blocks)
            .map(|(f, g)| g.mul(f))
            .collect();
        Morphism::new_unchecked(self.source.clone(), next.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.source == other.source && self.target == other.target, "add shape mismatch");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Morphism {
        let blocks = self.blocks.iter().map(Matrix::neg).collect();
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: u64) -> Morphism {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi() && self.source.dims == self.target.dims
    }

    pub fn total_rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    /// Flatten all blocks into one coefficient vector (vertex-major).
    pub fn flatten(&self) -> Vec<u64> {
        self.blocks.iter().flat_map(|b| b.flatten_row()).collect()
    }

    /// Block-diagonal total matrix, forgetting the grading by vertices.
    pub fn total_matrix(&self) -> Matrix {
        let fp = self.source.algebra.fp();
        let blocks: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diag(fp, &blocks)
    }
}

/// Basis of Hom(m, n): solves the commuting-square constraints for all arrows
/// simultaneously. The result is a deterministic ordered basis.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<Morphism> {
    assert!(same_algebra(&m.algebra, &n.algebra), "algebra mismatch");
    let fp = m.algebra.fp();
    let q = m.algebra.quiver();
    let nv = q.vertex_count;
    // unknown layout: per vertex v, row-major entries of an n_v x m_v block
    let offsets: Vec<usize> = {
        let mut acc = 0;
        let mut out = Vec::with_capacity(nv + 1);
        for v in 0..nv {
            out.push(acc);
            acc += n.dims[v] * m.dims[v];
        }
        out.push(acc);
        out
    };
    let unknowns = offsets[nv];
    let total_rows: usize = q
        .arrows
        .iter()
        .map(|a| n.dims[a.tgt] * m.dims[a.src])
        .sum();
    let mut system = Matrix::zero(fp, total_rows, unknowns);
    let mut row0 = 0;
    for (aidx, a) in q.arrows.iter().enumerate() {
        let ma = m.action(aidx); // m_t x m_s
        let na = n.action(aidx); // n_t x n_s
        for r in 0..n.dims[a.tgt] {
            for c in 0..m.dims[a.src] {
                let row = row0 + r * m.dims[a.src] + c;
                // (B_t * ma)[r,c] = sum_k B_t[r,k] * ma[k,c]
                for k in 0..m.dims[a.tgt] {
                    let col = offsets[a.tgt] + r * m.dims[a.tgt] + k;
                    let cur = system.at(row, col);
                    system.set(row, col, fp.add(cur, ma.at(k, c)));
                }
                // -(na * B_s)[r,c] = -sum_k na[r,k] * B_s[k,c]
                for k in 0..n.dims[a.src] {
                    let col = offsets[a.src] + k * m.dims[a.src] + c;
                    let cur = system.at(row, col);
                    system.set(row, col, fp.sub(cur, na.at(r, k)));
                }
            }
        }
        row0 += n.dims[a.tgt] * m.dims[a.src];
    }
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|j| {
            let blocks = (0..nv)
                .map(|v| {
                    Matrix::from_fn(fp, n.dims[v], m.dims[v], |r, c| {
                        kernel.at(offsets[v] + r * m.dims[v] + c, j)
                    })
                })
                .collect();
            Morphism::new_unchecked(m.clone(), n.clone(), blocks)
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// Coordinates of `f` in an independent list of morphisms, when expressible.
pub fn morphism_coords(basis: &[Morphism], f: &Morphism) -> Option<Vec<u64>> {
    let fp = f.source.algebra.fp();
    let len = f.flatten().len();
    let mats: Vec<Matrix> = basis
        .iter()
        .map(|b| Matrix::from_flat(fp, 1, len, &b.flatten()))
        .collect();
    coords_in_span(&mats, &Matrix::from_flat(fp, 1, len, &f.flatten()))
}

/// Kernel as a submodule: returns the kernel object and its inclusion.
pub fn kernel(f: &Morphism) -> (Module, Morphism) {
    let q = f.source.algebra.quiver();
    let incl_blocks: Vec<Matrix> = f.blocks.iter().map(Matrix::kernel_basis).collect();
    let dims: Vec<usize> = incl_blocks.iter().map(Matrix::cols).collect();
    let mut action = Vec::new();
    for (aidx, a) in q.arrows.iter().enumerate() {
        let rhs = f.source.action(aidx).mul(&incl_blocks[a.src]);
        let sol = incl_blocks[a.tgt]
            .solve(&rhs)
            .expect("arrow action preserves kernels");
        action.push(sol.particular);
    }
    let k = Module::new_unchecked(f.source.algebra.clone(), dims, action);
    let incl = Morphism::new_unchecked(k.clone(), f.source.clone(), incl_blocks);
    (k, incl)
}

/// Cokernel as a quotient: returns the cokernel object and its projection.
pub fn cokernel(f: &Morphism) -> (Module, Morphism) {
    let q = f.target.algebra.quiver();
    let proj_blocks: Vec<Matrix> = f.blocks.iter().map(Matrix::left_kernel_basis).collect();
    let dims: Vec<usize> = proj_blocks.iter().map(Matrix::rows).collect();
    let mut action = Vec::new();
    for (aidx, a) in q.arrows.iter().enumerate() {
        // X * proj_s = proj_t * action_a, solved via transposes
        let lhs_t = proj_blocks[a.src].transpose();
        let rhs_t = proj_blocks[a.tgt].mul(f.target.action(aidx)).transpose();
        let sol = lhs_t.solve(&rhs_t).expect("arrow action descends to the quotient");
        action.push(sol.particular.transpose());
    }
    let c = Module::new_unchecked(f.target.algebra.clone(), dims, action);
    let proj = Morphism::new_unchecked(f.target.clone(), c.clone(), proj_blocks);
    (c, proj)
}

/// Epi-mono factorization `f = incl . onto` through the image submodule.
pub fn image(f: &Morphism) -> (Module, Morphism, Morphism) {
    let q = f.source.algebra.quiver();
    let incl_blocks: Vec<Matrix> = f.blocks.iter().map(Matrix::column_space_basis).collect();
    let dims: Vec<usize> = incl_blocks.iter().map(Matrix::cols).collect();
    let mut action = Vec::new();
    for (aidx, a) in q.arrows.iter().enumerate() {
        let rhs = f.target.action(aidx).mul(&incl_blocks[a.src]);
        let sol = incl_blocks[a.tgt]
            .solve(&rhs)
            .expect("arrow action preserves images");
        action.push(sol.particular);
    }
    let im = Module::new_unchecked(f.source.algebra.clone(), dims, action);
    let incl = Morphism::new_unchecked(im.clone(), f.target.clone(), incl_blocks.clone());
    let onto_blocks: Vec<Matrix> = (0..q.vertex_count)
        .map(|v| {
            incl_blocks[v]
                .solve(f.block(v))
                .expect("f factors through its image")
                .particular
        })
        .collect();
    let onto = Morphism::new_unchecked(f.source.clone(), im.clone(), onto_blocks);
    (im, onto, incl)
}

#[derive(Clone)]
pub struct DirectSum {
    pub total: Module,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(algebra: &AlgebraRef, parts: &[Module]) -> DirectSum {
    let fp = algebra.fp();
    let q = algebra.quiver();
    for p in parts {
        assert!(same_algebra(&p.algebra, algebra), "algebra mismatch in direct sum");
    }
    let dims: Vec<usize> = (0..q.vertex_count)
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let action: Vec<Matrix> = (0..q.arrows.len())
        .map(|aidx| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| p.action(aidx)).collect();
            let a = &q.arrows[aidx];
            if parts.is_empty() {
                Matrix::zero(fp, dims[a.tgt], dims[a.src])
            } else {
                Matrix::block_diag(fp, &blocks)
            }
        })
        .collect();
    let total = Module::new_unchecked(algebra.clone(), dims.clone(), action);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = vec![0usize; q.vertex_count];
    for p in parts {
        let inj_blocks: Vec<Matrix> = (0..q.vertex_count)
            .map(|v| {
                Matrix::from_fn(fp, dims[v], p.dims[v], |r, c| {
                    u64::from(r == offset[v] + c)
                })
            })
            .collect();
        let proj_blocks: Vec<Matrix> =
            inj_blocks.iter().map(Matrix::transpose).collect();
        injections.push(Morphism::new_unchecked(p.clone(), total.clone(), inj_blocks));
        projections.push(Morphism::new_unchecked(total.clone(), p.clone(), proj_blocks));
        for (o, &d) in offset.iter_mut().zip(&p.dims) {
            *o += d;
        }
    }
    DirectSum { total, injections, projections }
}
