//! Folded AR-quivers: the twisted AR-quiver of a class in the twisted
//! adapted cluster point with residues folded onto the index set
//! `{1, ..., n+1}` of B_{n+1}.
//!
//! Positions stay the doubled twisted positions. Folded residue `n+1` has
//! `d = 1` and every other folded residue `d = 2`.

use std::collections::HashMap;

use crate::arquiver::ArQuiver;
use crate::error::{Error, Result};
use crate::roots::{reflect, Root};
use crate::twist::{fold_index, TwistedQuiver};

/// Constants of B_{n+1} used on folded quivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldedConstants {
    pub n: usize,
}

impl FoldedConstants {
    /// Diagonal entry `d_i` symmetrizing the Cartan matrix of B_{n+1}.
    pub fn d(&self, i: usize) -> i64 {
        if i == self.n + 1 {
            1
        } else {
            2
        }
    }

    /// Number of residues of A_{2n+1} folding onto `i`.
    pub fn orbit_size(&self, i: usize) -> usize {
        if i == self.n + 1 {
            1
        } else {
            2
        }
    }

    pub fn d_bar(&self) -> i64 {
        (1..=self.n + 1).map(|i| self.d(i)).fold(1, lcm)
    }

    pub fn dual_coxeter(&self) -> i64 {
        2 * self.n as i64 + 1
    }

    /// Adjacency in the Dynkin diagram of B_{n+1}.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i.abs_diff(j) == 1
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// A folded quiver. The wrapped quiver carries folded residues.
#[derive(Clone, Debug)]
pub struct FoldedQuiver {
    n: usize,
    quiver: ArQuiver,
}

impl FoldedQuiver {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quiver(&self) -> &ArQuiver {
        &self.quiver
    }

    pub fn constants(&self) -> FoldedConstants {
        FoldedConstants { n: self.n }
    }

    /// `(folded residue, doubled position)` of a root.
    pub fn coordinate(&self, r: &Root) -> Option<(usize, i64)> {
        let v = self.quiver.vertex_of(r)?;
        Some((self.quiver.residue(v), self.quiver.pos(v)))
    }

    pub fn root_at(&self, residue: usize, pos2x: i64) -> Option<&Root> {
        self.quiver.vertex_at(residue, pos2x).map(|v| self.quiver.root(v))
    }
}

/// Folds residues and keeps positions; two roots may not share a coordinate.
pub fn fold(tq: &TwistedQuiver) -> Result<FoldedQuiver> {
    let n = tq.n();
    fold_quiver(tq.quiver(), n)
}

fn fold_quiver(q: &ArQuiver, n: usize) -> Result<FoldedQuiver> {
    let residues: Vec<usize> = q.residues().iter().map(|&i| fold_index(n, i)).collect();
    let quiver = q.clone().with_residues(residues);
    let mut seen = HashMap::new();
    for v in 0..quiver.len() {
        if seen.insert((quiver.residue(v), quiver.pos(v)), v).is_some() {
            return Err(Error::CoordinateCollision { residue: quiver.residue(v), pos2x: quiver.pos(v) });
        }
    }
    Ok(FoldedQuiver { n, quiver })
}

/// `^{+k} beta`: the root sharing the folded residue of `beta` whose
/// position is `4k` lower (higher for negative `k`).
pub fn hat_shift<'a>(fq: &'a FoldedQuiver, beta: &Root, k: i64) -> Option<&'a Root> {
    let (i, p) = fq.coordinate(beta)?;
    fq.root_at(i, p - 4 * k)
}

/// Simple roots lie on the boundary: each is a sink, a source or has
/// folded residue `1` or `n+1`, and every sink and source is simple.
pub fn boundary_simple_check(fq: &FoldedQuiver) -> bool {
    let q = &fq.quiver;
    let n = fq.n;
    (0..q.len()).all(|v| {
        let r = q.root(v);
        let edge = q.is_sink(v) || q.is_source(v);
        let boundary_residue = q.residue(v) == 1 || q.residue(v) == n + 1;
        (!r.is_simple() || edge || boundary_residue) && (!edge || r.is_simple())
    })
}

/// The reflection functor at a sink `i` on folded coordinates: `alpha_i`
/// moves from `(i', p)` to `(i', p - d h)`, gains arrows to the vertices at
/// `(j', p - d h + min(d_i', d_j'))` with `j'` adjacent to `i'`, and every
/// other label is transformed by `s_i`.
pub fn folded_reflect(fq: &FoldedQuiver, i: usize) -> Result<FoldedQuiver> {
    let q = &fq.quiver;
    let c = fq.constants();
    let d = q.diagram().clone();
    let simple = Root::simple(d.rank(), i);
    let v = q.vertex_of(&simple).ok_or_else(|| Error::Undefined(format!("{simple} is absent")))?;
    if !q.is_sink(v) {
        return Err(Error::NotSink(i));
    }
    let ib = q.residue(v);
    let base = q.pos(v) - c.d_bar() * c.dual_coxeter();
    let keep: Vec<usize> = (0..q.len()).filter(|&u| u != v).collect();
    let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &u)| (u, k)).collect();
    let mut residues: Vec<usize> = keep.iter().map(|&u| q.residue(u)).collect();
    let mut roots: Vec<Root> = keep.iter().map(|&u| reflect(&d, i, q.root(u))).collect();
    let mut pos: Vec<i64> = keep.iter().map(|&u| q.pos(u)).collect();
    let mut arrows: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .filter(|a| a.0 != v && a.1 != v)
        .map(|a| (remap[&a.0], remap[&a.1]))
        .collect();
    let new = roots.len();
    for u in 0..new {
        let jb = residues[u];
        if c.adjacent(ib, jb) && pos[u] == base + c.d(ib).min(c.d(jb)) {
            arrows.push((new, u));
        }
    }
    residues.push(ib);
    roots.push(simple);
    pos.push(base);
    let quiver = ArQuiver::from_parts(&d, residues, roots, Some(pos), arrows);
    Ok(FoldedQuiver { n: fq.n, quiver })
}

/// The first `beta` at which the folded additive property fails: for
/// `alpha` at `(i, P - 2^{|i|})` and `beta` at `(i, P)`, the sum equals the
/// sum of the roots at position `P - 2^{|i|-1}` lying on a path from
/// `beta` to `alpha`.
pub fn folded_additive_violation(fq: &FoldedQuiver) -> Option<Root> {
    let q = &fq.quiver;
    let c = fq.constants();
    let reach = q.reachability();
    for b in 0..q.len() {
        let i = q.residue(b);
        let size = c.orbit_size(i) as u32;
        let p = q.pos(b);
        let Some(a) = q.vertex_at(i, p - (1 << size)) else {
            continue;
        };
        let mid_pos = p - (1 << (size - 1));
        let mid = (0..q.len())
            .filter(|&g| q.pos(g) == mid_pos && reach[g].contains(b) && reach[a].contains(g))
            .fold(Root::zero(q.diagram().rank()), |acc, g| acc.add(q.root(g)));
        if q.root(a).add(q.root(b)) != mid {
            return Some(q.root(b).clone());
        }
    }
    None
}

pub fn folded_additive_check(fq: &FoldedQuiver) -> bool {
    folded_additive_violation(fq).is_none()
}

/// Which clause of the coordinate description of minimal pairs a triple
/// satisfies, if any. `alpha` sits at `(i, p)`, `beta` at `(j, q)` and
/// `gamma = alpha + beta` at `(k, r)`, all in folded coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairClause {
    /// All three folded residues are at most `n`.
    Short,
    /// One folded residue is at most `n`, the other two are `n+1`.
    Long,
}

pub fn coordinate_clause(n: usize, alpha: (usize, i64), beta: (usize, i64), gamma: (usize, i64)) -> Option<PairClause> {
    let ((i, p), (j, q), (k, r)) = (alpha, beta, gamma);
    let n1 = n + 1;
    let h = 2 * n as i64 + 1;
    let (ii, jj, kk) = (i as i64, j as i64, k as i64);
    let l = i.max(j).max(k);
    if l <= n && i + j + k == 2 * l {
        let want = if l == k {
            (-ii, jj)
        } else if l == i {
            (ii - h, jj)
        } else {
            (-ii, h - jj)
        };
        let diff = q - r;
        let diff2 = p - r;
        return (diff % 2 == 0 && diff2 % 2 == 0 && (diff / 2, diff2 / 2) == want).then_some(PairClause::Short);
    }
    let s = i.min(j).min(k);
    let others = [i, j, k].iter().filter(|&&x| x == n1).count();
    if s <= n && others == 2 {
        let nn = n as i64;
        let want = if s == k {
            (-2 * (nn - kk) - 1, 2 * (nn - kk) + 1)
        } else if s == i {
            (-4 * ii, 2 * (nn - ii) + 1)
        } else {
            (-2 * (nn - jj) - 1, 4 * jj)
        };
        return ((q - r, p - r) == want).then_some(PairClause::Long);
    }
    None
}

/// Ordered pairs `(alpha, beta)` with `alpha + beta = gamma` whose
/// coordinates satisfy one of the two clauses.
pub fn coordinate_minimal_pairs(fq: &FoldedQuiver, gamma: &Root) -> Vec<(Root, Root)> {
    let q = &fq.quiver;
    let Some(g) = fq.coordinate(gamma) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for a in 0..q.len() {
        let alpha = q.root(a);
        let beta = gamma.sub(alpha);
        let Some(b) = q.vertex_of(&beta) else {
            continue;
        };
        let ca = (q.residue(a), q.pos(a));
        let cb = (q.residue(b), q.pos(b));
        if coordinate_clause(fq.n, ca, cb, g).is_some() {
            out.push((alpha.clone(), beta));
        }
    }
    out.sort();
    out
}
