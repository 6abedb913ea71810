//! Bound quiver algebras A = kQ/I presented by a finite confluent rewriting
//! system on paths.
//!
//! Relations are linear combinations of parallel paths of length >= 2. Each
//! relation is oriented into a rewrite rule "leading path -> smaller terms"
//! under degree-lex order; confluence is certified by resolving every overlap
//! and inclusion ambiguity up to the path cap, and algebras whose ambiguities
//! fail to resolve are rejected rather than completed.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::module::Module;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize, &str)>) -> Self {
        Quiver {
            vertex_count,
            arrows: arrows
                .into_iter()
                .map(|(src, tgt, label)| Arrow { src, tgt, label: label.to_string() })
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.vertex_count == 0 {
            return Err(Error::Schema("quiver needs at least one vertex".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for a in &self.arrows {
            if a.src >= self.vertex_count || a.tgt >= self.vertex_count {
                return Err(Error::Schema(format!("arrow `{}` endpoint out of range", a.label)));
            }
            if !seen.insert(a.label.clone()) {
                return Err(Error::Schema(format!("duplicate arrow label `{}`", a.label)));
            }
        }
        Ok(())
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }
}

/// A path in travel order: `arrows[0]` leaves `source`, the last arrow enters
/// `target`. Empty `arrows` is the lazy path e_source.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(vertex: usize) -> Self {
        Path { source: vertex, target: vertex, arrows: Vec::new() }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let first = arrows
            .first()
            .ok_or_else(|| Error::Schema("path of arrows must be nonempty".into()))?;
        let mut at = quiver.arrows[*first].src;
        for &idx in &arrows {
            let a = &quiver.arrows[idx];
            if a.src != at {
                return Err(Error::Schema(format!("path breaks at arrow `{}`", a.label)));
            }
            at = a.tgt;
        }
        Ok(Path { source: quiver.arrows[*first].src, target: at, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next` (travel order), defined when endpoints meet.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path { source: self.source, target: next.target, arrows })
    }
}

/// Degree-lex order, compatible with concatenation on parallel paths.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then(self.source.cmp(&other.source))
            .then(self.arrows.cmp(&other.arrows))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Linear combination of parallel paths with coefficients in F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Path, u64>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn single(path: Path, coeff: u64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(path, coeff);
        }
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Path, u64)> {
        self.terms.iter().next_back().map(|(p, &c)| (p, c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, u64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }
}

/// Field-aware combination arithmetic; `LinComb` itself stays field-agnostic.
fn lc_add_scaled(fp: Fp, acc: &mut BTreeMap<Path, u64>, lc: &LinComb, scale: u64) {
    for (p, c) in lc.terms() {
        let add = fp.mul(c, scale);
        if add == 0 {
            continue;
        }
        let entry = acc.entry(p.clone()).or_insert(0);
        *entry = fp.add(*entry, add);
        if *entry == 0 {
            acc.remove(p);
        }
    }
}

fn lc_from(fp: Fp, pairs: Vec<(Path, u64)>) -> LinComb {
    let mut acc: BTreeMap<Path, u64> = BTreeMap::new();
    for (p, c) in pairs {
        let c = c % fp.modulus();
        if c == 0 {
            continue;
        }
        let entry = acc.entry(p).or_insert(0);
        *entry = fp.add(*entry, c);
    }
    acc.retain(|_, c| *c != 0);
    LinComb { terms: acc }
}

#[derive(Debug, Clone)]
struct RewriteRule {
    lead: Path,
    rhs: LinComb,
}

/// Input form of a relation: coefficient plus arrow labels in travel order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

pub type RelationInput = Vec<RelationTerm>;

/// A built algebra presentation: quiver, confluent rewrite table, and the
/// finite basis of irreducible paths.
#[derive(Debug)]
pub struct Algebra {
    pub name: String,
    quiver: Quiver,
    fp: Fp,
    cap: usize,
    relations: Vec<LinComb>,
    rules: Vec<RewriteRule>,
    basis: Vec<Path>,
    basis_ids: BTreeMap<Path, usize>,
}

pub type AlgebraRef = Arc<Algebra>;

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.fp == other.fp
            && self.cap == other.cap
            && self.relations == other.relations
    }
}

impl Algebra {
    pub fn build(
        name: &str,
        quiver: Quiver,
        relations: &[RelationInput],
        fp: Fp,
        cap: usize,
    ) -> Result<AlgebraRef> {
        quiver.validate()?;
        let rels = normalize_relations(&quiver, relations, fp)?;
        let rules = orient_rules(&rels, fp)?;
        check_confluence(&quiver, &rules, fp, cap)?;
        let basis = enumerate_basis(&quiver, &rules, cap)?;
        let basis_ids = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let alg = Algebra {
            name: name.to_string(),
            quiver,
            fp,
            cap,
            relations: rels,
            rules,
            basis,
            basis_ids,
        };
        for rel in &alg.relations {
            if !alg.reduce(rel.clone()).is_zero() {
                return Err(Error::Invariant {
                    location: "algebra build".into(),
                    detail: "a defining relation does not reduce to zero".into(),
                });
            }
        }
        Ok(Arc::new(alg))
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn relations(&self) -> &[LinComb] {
        &self.relations
    }

    pub fn basis_id(&self, path: &Path) -> Option<usize> {
        self.basis_ids.get(path).copied()
    }

    /// Normal form of a combination modulo the relation ideal.
    pub fn reduce(&self, lc: LinComb) -> LinComb {
        let mut current = lc.terms;
        loop {
            let mut target: Option<(Path, usize, usize)> = None;
            'outer: for path in current.keys().rev() {
                for (ri, rule) in self.rules.iter().enumerate() {
                    if let Some(pos) = find_subword(&path.arrows, &rule.lead.arrows) {
                        target = Some((path.clone(), ri, pos));
                        break 'outer;
                    }
                }
            }
            let Some((path, ri, pos)) = target else {
                return LinComb { terms: current };
            };
            let coeff = current.remove(&path).unwrap();
            let rule = &self.rules[ri];
            let replaced = substitute(&self.quiver, &path, pos, rule);
            lc_add_scaled(self.fp, &mut current, &replaced, coeff);
        }
    }

    /// Product of basis paths as a combination of basis paths; zero when the
    /// endpoints do not meet.
    pub fn mult_basis(&self, first_then: usize, second: usize) -> Vec<(usize, u64)> {
        let p = &self.basis[first_then];
        let q = &self.basis[second];
        match p.then(q) {
            None => Vec::new(),
            Some(w) => self.comb_to_basis(self.reduce(LinComb::single(w, 1))),
        }
    }

    fn comb_to_basis(&self, lc: LinComb) -> Vec<(usize, u64)> {
        lc.terms()
            .map(|(p, c)| {
                let id = self
                    .basis_id(p)
                    .expect("reduced combination must be supported on the basis");
                (id, c)
            })
            .collect()
    }

    /// Basis ids of irreducible paths from `i` to `j`, in degree-lex order.
    pub fn paths_between(&self, i: usize, j: usize) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, p)| p.source == i && p.target == j)
            .map(|(id, _)| id)
            .collect()
    }

    /// The simple module at a vertex.
    pub fn simple(self: &Arc<Self>, vertex: usize) -> Module {
        assert!(vertex < self.vertex_count(), "vertex out of range");
        let mut dims = vec![0; self.vertex_count()];
        dims[vertex] = 1;
        let action = self
            .quiver
            .arrows
            .iter()
            .map(|a| Matrix::zero(self.fp, dims[a.tgt], dims[a.src]))
            .collect();
        Module::new_unchecked(Arc::clone(self), dims, action)
    }

    /// The indecomposable projective P(i) = Ae_i as a representation: the
    /// fiber at vertex j is spanned by irreducible paths i -> j.
    pub fn projective(self: &Arc<Self>, vertex: usize) -> Module {
        assert!(vertex < self.vertex_count(), "vertex out of range");
        let fibers: Vec<Vec<usize>> = (0..self.vertex_count())
            .map(|j| self.paths_between(vertex, j))
            .collect();
        let dims: Vec<usize> = fibers.iter().map(Vec::len).collect();
        let mut action = Vec::new();
        for (aidx, a) in self.quiver.arrows.iter().enumerate() {
            let mut m = Matrix::zero(self.fp, dims[a.tgt], dims[a.src]);
            for (col, &pid) in fibers[a.src].iter().enumerate() {
                let extended = self.basis[pid]
                    .then(&Path::from_arrows(&self.quiver, vec![aidx]).unwrap())
                    .expect("arrow source matches path target");
                let reduced = self.reduce(LinComb::single(extended, 1));
                for (q, c) in reduced.terms() {
                    let qid = self.basis_id(q).unwrap();
                    let row = fibers[a.tgt]
                        .iter()
                        .position(|&x| x == qid)
                        .expect("product of paths from i stays a path from i");
                    m.set(row, col, c);
                }
            }
            action.push(m);
        }
        Module::new_unchecked(Arc::clone(self), dims, action)
    }

    /// Opposite algebra: reversed arrows (same labels, same indices) and
    /// reversed relation paths.
    pub fn opposite(&self) -> Result<AlgebraRef> {
        let quiver = Quiver {
            vertex_count: self.quiver.vertex_count,
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| Arrow { src: a.tgt, tgt: a.src, label: a.label.clone() })
                .collect(),
        };
        let relations: Vec<RelationInput> = self
            .relations
            .iter()
            .map(|lc| {
                lc.terms()
                    .map(|(p, c)| RelationTerm {
                        coeff: c as i64,
                        path: p
                            .arrows
                            .iter()
                            .rev()
                            .map(|&i| self.quiver.arrows[i].label.clone())
                            .collect(),
                    })
                    .collect()
            })
            .collect();
        Algebra::build(&format!("{}^op", self.name), quiver, &relations, self.fp, self.cap)
    }

    /// The indecomposable injective I(i) = D(e_i A): fibers are dual to paths
    /// j -> i, realized by transposing the opposite-algebra projective.
    pub fn injective(self: &Arc<Self>, vertex: usize) -> Module {
        let op = self.opposite().expect("opposite of a built algebra must build");
        let pop = op.projective(vertex);
        let action = (0..self.arrow_count())
            .map(|aidx| pop.action(aidx).transpose())
            .collect();
        let m = Module::new_unchecked(Arc::clone(self), pop.dims().to_vec(), action);
        m.validate().expect("dual of the opposite projective satisfies the relations");
        m
    }

    /// D(A_A) = direct sum of all indecomposable injectives, plus the
    /// injection of each summand.
    pub fn dual_regular(self: &Arc<Self>) -> (Module, Vec<crate::module::Morphism>) {
        let parts: Vec<Module> = (0..self.vertex_count()).map(|i| self.injective(i)).collect();
        let sum = crate::module::direct_sum(self, &parts);
        (sum.total, sum.injections)
    }

    pub fn zero_module(self: &Arc<Self>) -> Module {
        let dims = vec![0; self.vertex_count()];
        let action = self
            .quiver
            .arrows
            .iter()
            .map(|a| Matrix::zero(self.fp, dims[a.tgt], dims[a.src]))
            .collect();
        Module::new_unchecked(Arc::clone(self), dims, action)
    }
}

pub fn same_algebra(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn normalize_relations(
    quiver: &Quiver,
    relations: &[RelationInput],
    fp: Fp,
) -> Result<Vec<LinComb>> {
    let mut out = Vec::new();
    for (ri, rel) in relations.iter().enumerate() {
        let mut pairs = Vec::new();
        let mut endpoints: Option<(usize, usize)> = None;
        for term in rel {
            let arrows: Result<Vec<usize>> = term
                .path
                .iter()
                .map(|l| {
                    quiver
                        .arrow_index(l)
                        .ok_or_else(|| Error::Schema(format!("unknown arrow label `{l}`")))
                })
                .collect();
            let arrows = arrows?;
            if arrows.len() < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation {ri} has a term of length {} (< 2, outside the arrow ideal squared)",
                    arrows.len()
                )));
            }
            let path = Path::from_arrows(quiver, arrows)?;
            match endpoints {
                None => endpoints = Some((path.source, path.target)),
                Some(ep) => {
                    if ep != (path.source, path.target) {
                        return Err(Error::NotAdmissible(format!(
                            "relation {ri} mixes non-parallel paths"
                        )));
                    }
                }
            }
            pairs.push((path, fp.reduce(term.coeff)));
        }
        let lc = lc_from(fp, pairs);
        if !lc.is_zero() {
            out.push(lc);
        }
    }
    Ok(out)
}

fn orient_rules(relations: &[LinComb], fp: Fp) -> Result<Vec<RewriteRule>> {
    let mut rules: Vec<RewriteRule> = Vec::new();
    for rel in relations {
        let (lead, c) = rel.leading().expect("nonzero relation");
        let lead = lead.clone();
        let inv = fp.inv(c);
        let mut rhs = BTreeMap::new();
        for (p, coeff) in rel.terms() {
            if *p == lead {
                continue;
            }
            // lead = -inv * rest
            let v = fp.neg(fp.mul(inv, coeff));
            if v != 0 {
                rhs.insert(p.clone(), v);
            }
        }
        rules.push(RewriteRule { lead, rhs: LinComb { terms: rhs } });
    }
    Ok(rules)
}

fn find_subword(word: &[usize], sub: &[usize]) -> Option<usize> {
    if sub.is_empty() || sub.len() > word.len() {
        return None;
    }
    (0..=word.len() - sub.len()).find(|&i| &word[i..i + sub.len()] == sub)
}

/// Replace the occurrence of `rule.lead` at `pos` inside `path` by the rule's
/// right-hand side.
fn substitute(quiver: &Quiver, path: &Path, pos: usize, rule: &RewriteRule) -> LinComb {
    let pre = &path.arrows[..pos];
    let post = &path.arrows[pos + rule.lead.arrows.len()..];
    let mut terms = BTreeMap::new();
    for (t, c) in rule.rhs.terms() {
        let mut arrows = pre.to_vec();
        arrows.extend_from_slice(&t.arrows);
        arrows.extend_from_slice(post);
        let new_path = if arrows.is_empty() {
            Path::lazy(path.source)
        } else {
            Path::from_arrows(quiver, arrows).expect("parallel substitution keeps composability")
        };
        terms.insert(new_path, c);
    }
    LinComb { terms }
}

/// Full deterministic reduction by a rule list (used before the algebra
/// object exists).
fn reduce_with(quiver: &Quiver, rules: &[RewriteRule], fp: Fp, lc: LinComb) -> LinComb {
    let mut current = lc.terms;
    loop {
        let mut target: Option<(Path, usize, usize)> = None;
        'outer: for path in current.keys().rev() {
            for (ri, rule) in rules.iter().enumerate() {
                if let Some(pos) = find_subword(&path.arrows, &rule.lead.arrows) {
                    target = Some((path.clone(), ri, pos));
                    break 'outer;
                }
            }
        }
        let Some((path, ri, pos)) = target else {
            return LinComb { terms: current };
        };
        let coeff = current.remove(&path).unwrap();
        let replaced = substitute(quiver, &path, pos, &rules[ri]);
        lc_add_scaled(fp, &mut current, &replaced, coeff);
    }
}

/// Diamond-lemma confluence: every overlap and inclusion ambiguity between
/// rule leads must reduce to the same normal form along both routes.
fn check_confluence(quiver: &Quiver, rules: &[RewriteRule], fp: Fp, cap: usize) -> Result<()> {
    let resolve = |word: &Path, ri: usize, pos: usize| -> LinComb {
        let one_step = substitute(quiver, word, pos, &rules[ri]);
        reduce_with(quiver, rules, fp, one_step)
    };
    for (i, ra) in rules.iter().enumerate() {
        for (j, rb) in rules.iter().enumerate() {
            let (u, v) = (&ra.lead.arrows, &rb.lead.arrows);
            // overlap: proper suffix of u equals proper prefix of v
            for l in 1..u.len().min(v.len()) {
                if u[u.len() - l..] != v[..l] {
                    continue;
                }
                let mut arrows = u.clone();
                arrows.extend_from_slice(&v[l..]);
                if arrows.len() > 2 * cap + 2 {
                    continue;
                }
                let Ok(word) = Path::from_arrows(quiver, arrows) else { continue };
                let left = resolve(&word, i, 0);
                let right = resolve(&word, j, u.len() - l);
                if left != right {
                    return Err(Error::NotConfluent(format!(
                        "overlap of rules {i} and {j} does not resolve"
                    )));
                }
            }
            // inclusion: v occurs strictly inside u
            if i != j && v.len() < u.len() {
                if let Some(pos) = find_subword(u, v) {
                    let word = ra.lead.clone();
                    let left = resolve(&word, i, 0);
                    let right = resolve(&word, j, pos);
                    if left != right {
                        return Err(Error::NotConfluent(format!(
                            "rule {j} inside rule {i} does not resolve"
                        )));
                    }
                }
            }
            // equal leads from distinct relations must agree
            if i < j && ra.lead == rb.lead {
                let left = reduce_with(quiver, rules, fp, ra.rhs.clone());
                let right = reduce_with(quiver, rules, fp, rb.rhs.clone());
                if left != right {
                    return Err(Error::NotConfluent(format!(
                        "rules {i} and {j} share a lead with different normal forms"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Irreducible paths of length <= cap; a surviving path of length cap+1 means
/// the basis does not close.
fn enumerate_basis(quiver: &Quiver, rules: &[RewriteRule], cap: usize) -> Result<Vec<Path>> {
    let irreducible = |p: &Path| rules.iter().all(|r| find_subword(&p.arrows, &r.lead.arrows).is_none());
    let mut layer: Vec<Path> = (0..quiver.vertex_count).map(Path::lazy).collect();
    let mut basis = layer.clone();
    for _len in 1..=cap + 1 {
        let mut next = Vec::new();
        for p in &layer {
            for (aidx, a) in quiver.arrows.iter().enumerate() {
                if a.src != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(aidx);
                let q = Path { source: p.source, target: a.tgt, arrows };
                if irreducible(&q) {
                    next.push(q);
                }
            }
        }
        if _len == cap + 1 {
            if let Some(w) = next.first() {
                return Err(Error::BasisNotClosed {
                    cap,
                    detail: format!(
                        "irreducible path of length {} exists (starts with arrow `{}`)",
                        cap + 1,
                        quiver.arrows[w.arrows[0]].label
                    ),
                });
            }
            break;
        }
        basis.extend(next.iter().cloned());
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    basis.sort();
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn arrow_path(labels: &[&str]) -> RelationTerm {
        RelationTerm { coeff: 1, path: labels.iter().map(|s| s.to_string()).collect() }
    }

    #[test]
    fn a2_basis_enumeration() {
        let q = Quiver::new(2, vec![(0, 1, "a")]);
        let alg = Algebra::build("a2", q, &[], f2(), 2).unwrap();
        // paths: e1, e2, a
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.paths_between(0, 1).len(), 1);
        assert_eq!(alg.paths_between(1, 0).len(), 0);
    }

    #[test]
    fn loop_with_square_zero() {
        let q = Quiver::new(1, vec![(0, 0, "x")]);
        let alg = Algebra::build("kx2", q, &[vec![arrow_path(&["x", "x"])]], f2(), 4).unwrap();
        assert_eq!(alg.dim(), 2);
    }

    #[test]
    fn free_loop_is_rejected() {
        let q = Quiver::new(1, vec![(0, 0, "x")]);
        let err = Algebra::build("kx", q, &[], f2(), 4).unwrap_err();
        assert!(matches!(err, Error::BasisNotClosed { .. }));
    }

    #[test]
    fn short_relation_rejected_as_non_admissible() {
        let q = Quiver::new(2, vec![(0, 1, "a")]);
        let err = Algebra::build("bad", q, &[vec![arrow_path(&["a"])]], f2(), 2).unwrap_err();
        assert!(matches!(err, Error::NotAdmissible(_)));
    }

    #[test]
    fn projective_shapes_on_a2() {
        let q = Quiver::new(2, vec![(0, 1, "a")]);
        let alg = Algebra::build("a2", q, &[], f2(), 2).unwrap();
        let p1 = alg.projective(0);
        assert_eq!(p1.dims(), &[1, 1]);
        assert!(p1.action(0).is_identity());
        let p2 = alg.projective(1);
        assert_eq!(p2.dims(), &[0, 1]);
    }

    #[test]
    fn projective_of_truncated_polynomials() {
        let q = Quiver::new(1, vec![(0, 0, "x")]);
        let alg = Algebra::build("kx2", q, &[vec![arrow_path(&["x", "x"])]], f2(), 4).unwrap();
        let p = alg.projective(0);
        assert_eq!(p.dims(), &[2]);
        // basis {e, x}: x*e = x, x*x = 0
        assert_eq!(p.action(0), &Matrix::from_rows(f2(), &[vec![0, 0], vec![1, 0]]));
    }

    #[test]
    fn injectives_on_a2() {
        let q = Quiver::new(2, vec![(0, 1, "a")]);
        let alg = Algebra::build("a2", q, &[], f2(), 2).unwrap();
        let i1 = alg.injective(0);
        assert_eq!(i1.dims(), &[1, 0]); // simple at vertex 1 (index 0)
        let i2 = alg.injective(1);
        assert_eq!(i2.dims(), &[1, 1]); // equals P(1)
        assert!(i2.action(0).is_identity());
    }

    #[test]
    fn self_injectivity_of_kx2() {
        let q = Quiver::new(1, vec![(0, 0, "x")]);
        let alg = Algebra::build("kx2", q, &[vec![arrow_path(&["x", "x"])]], f2(), 4).unwrap();
        let p = alg.projective(0);
        let i = alg.injective(0);
        assert_eq!(p.dims(), i.dims());
        // both are 2-dimensional with nilpotent action of rank 1
        assert_eq!(i.action(0).rank(), 1);
        assert!(i.action(0).mul(i.action(0)).is_zero());
    }

    #[test]
    fn dual_regular_dimensions() {
        let q = Quiver::new(2, vec![(0, 1, "a")]);
        let alg = Algebra::build("a2", q, &[], f2(), 2).unwrap();
        let (d, injections) = alg.dual_regular();
        assert_eq!(d.dims(), &[2, 1]);
        assert_eq!(injections.len(), 2);

        let q = Quiver::new(2, vec![]);
        let ss = Algebra::build("ss2", q, &[], f2(), 1).unwrap();
        let (d, _) = ss.dual_regular();
        assert_eq!(d.dims(), &[1, 1]);
    }

    #[test]
    fn commuting_square_relation_is_confluent() {
        // 4 vertices, two routes 0->3; relation ba - dc
        let q = Quiver::new(4, vec![(0, 1, "a"), (1, 3, "b"), (0, 2, "c"), (2, 3, "d")]);
        let rel = vec![
            RelationTerm { coeff: 1, path: vec!["a".into(), "b".into()] },
            RelationTerm { coeff: -1, path: vec!["c".into(), "d".into()] },
        ];
        let alg = Algebra::build("square", q, &[rel], Fp::new(3).unwrap(), 3).unwrap();
        // basis: 4 lazy, 4 arrows, one length-2 route survives
        assert_eq!(alg.dim(), 9);
    }

    #[test]
    fn reduction_of_relations_vanishes() {
        let q = Quiver::new(1, vec![(0, 0, "x")]);
        let alg = Algebra::build("kx3", q, &[vec![arrow_path(&["x", "x", "x"])]], f2(), 4).unwrap();
        assert_eq!(alg.dim(), 3);
        for rel in alg.relations() {
            assert!(alg.reduce(rel.clone()).is_zero());
        }
    }
}
