//! Dynkin quivers, adapted classes and the combinatorial AR-quiver of a
//! commutation class.
//!
//! The AR-quiver of a class has one vertex per letter occurrence, labelled by
//! the root of that occurrence. Arrows run from later occurrences to earlier
//! ones, so a path from `beta` to `alpha` means `alpha` precedes `beta` in the
//! convex order of the class. Coordinates are stored doubled (`pos2x`) so
//! that the half-integral positions of the twisted theory stay integral.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::roots::{reflect, roots_of_word, DynkinDiagram, DynkinType, Root, Word};
use crate::words::CommutationClass;

/// An orientation of a Dynkin diagram, one arrow per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinQuiver {
    diagram: DiagramKey,
    arrows: BTreeSet<(usize, usize)>,
}

// Wrapper so the quiver can derive `Ord` while holding its diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct DiagramKey(DynkinDiagram);

impl PartialOrd for DiagramKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DiagramKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.kind(), self.0.rank(), self.0.edges()).cmp(&(
            other.0.kind(),
            other.0.rank(),
            other.0.edges(),
        ))
    }
}

impl DynkinQuiver {
    /// `arrows` must orient every edge of `d` exactly once.
    pub fn new(d: &DynkinDiagram, arrows: &[(usize, usize)]) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = arrows.iter().copied().collect();
        let mut undirected: Vec<(usize, usize)> =
            set.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        undirected.sort();
        let before = undirected.len();
        undirected.dedup();
        if before != undirected.len() || undirected != d.edges() {
            return Err(Error::Inconsistent("arrows must orient each edge once".into()));
        }
        Ok(DynkinQuiver { diagram: DiagramKey(d.clone()), arrows: set })
    }

    /// Type A_n from a string of `n-1` characters: the k-th character is
    /// `>` for `k -> k+1` and `<` for `k <- k+1`.
    pub fn type_a(n: usize, orientation: &str) -> Result<Self> {
        let chars: Vec<char> = orientation.chars().collect();
        if chars.len() + 1 != n {
            return Err(Error::Parse(orientation.to_string()));
        }
        let mut arrows = Vec::new();
        for (k, c) in chars.iter().enumerate() {
            let i = k + 1;
            match c {
                '>' => arrows.push((i, i + 1)),
                '<' => arrows.push((i + 1, i)),
                _ => return Err(Error::Parse(orientation.to_string())),
            }
        }
        Self::new(&DynkinDiagram::a(n), &arrows)
    }

    /// All `2^{n-1}` quivers of type A_n, ordered by orientation string.
    pub fn all_type_a(n: usize) -> Vec<Self> {
        (0..1usize << (n - 1))
            .map(|mask| {
                let s: String = (0..n - 1)
                    .map(|k| if mask >> (n - 2 - k) & 1 == 1 { '>' } else { '<' })
                    .collect();
                Self::type_a(n, &s).expect("well formed")
            })
            .collect()
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram.0
    }

    pub fn rank(&self) -> usize {
        self.diagram.0.rank()
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// The orientation string of a type A quiver.
    pub fn orientation(&self) -> String {
        (1..self.rank())
            .map(|i| if self.has_arrow(i, i + 1) { '>' } else { '<' })
            .collect()
    }

    pub fn is_sink(&self, i: usize) -> bool {
        !self.arrows.iter().any(|&(a, _)| a == i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        !self.arrows.iter().any(|&(_, b)| b == i)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.is_sink(i)).collect()
    }

    /// Reverses every arrow at `i`.
    pub fn reflect_at(&self, i: usize) -> Self {
        let mut q = self.clone();
        q.arrows = self
            .arrows
            .iter()
            .map(|&(a, b)| if a == i || b == i { (b, a) } else { (a, b) })
            .collect();
        q
    }

    pub fn reversed(&self) -> Self {
        let mut q = self.clone();
        q.arrows = self.arrows.iter().map(|&(a, b)| (b, a)).collect();
        q
    }

    /// The height function with `xi(j) = xi(i) + 1` for every arrow `i -> j`
    /// and `xi(1) = 0`.
    pub fn height_function(&self) -> Vec<i64> {
        let n = self.rank();
        let mut xi: Vec<Option<i64>> = vec![None; n + 1];
        xi[1] = Some(0);
        let mut stack = vec![1usize];
        while let Some(i) = stack.pop() {
            let h = xi[i].expect("assigned");
            for &(a, b) in &self.arrows {
                let (other, val) = if a == i {
                    (b, h + 1)
                } else if b == i {
                    (a, h - 1)
                } else {
                    continue;
                };
                if xi[other].is_none() {
                    xi[other] = Some(val);
                    stack.push(other);
                }
            }
        }
        xi.into_iter().map(|x| x.unwrap_or(0)).collect()
    }

    /// The Coxeter element adapted to the quiver: repeatedly take the
    /// smallest sink and reflect at it.
    pub fn coxeter_element(&self) -> Word {
        let mut q = self.clone();
        let mut used = vec![false; self.rank() + 1];
        let mut out = Vec::new();
        while out.len() < self.rank() {
            let i = (1..=self.rank())
                .find(|&i| !used[i] && q.is_sink(i))
                .expect("a finite acyclic quiver has a sink");
            used[i] = true;
            out.push(i);
            q = q.reflect_at(i);
        }
        out
    }

    /// A reduced word of `w0` adapted to the quiver, built in rounds: the
    /// current sinks are emitted in increasing order whenever the resulting
    /// root stays positive, then the quiver is reflected at them.
    pub fn adapted_word(&self) -> Word {
        let d = self.diagram().clone();
        let total = d.longest_length();
        let mut word: Word = Vec::new();
        let mut q = self.clone();
        while word.len() < total {
            let sinks = q.sinks();
            for &i in &sinks {
                let mut beta = Root::simple(d.rank(), i);
                for &j in word.iter().rev() {
                    beta = reflect(&d, j, &beta);
                }
                if beta.is_positive() {
                    word.push(i);
                }
                q = q.reflect_at(i);
            }
        }
        word
    }

    pub fn adapted_class(&self) -> CommutationClass {
        CommutationClass::new(self.diagram(), &self.adapted_word()).expect("adapted words are reduced")
    }

    /// Number of occurrences of `i` in an adapted word,
    /// `(h + a_i - b_i) / 2` where `a_i`, `b_i` count arrows on the path
    /// between `i` and `i*` pointing towards `i` and towards `i*`.
    pub fn occurrence_count(&self, i: usize) -> Result<usize> {
        if self.diagram().kind() != DynkinType::A {
            return Err(Error::Undefined("occurrence count is implemented for type A".into()));
        }
        let d = self.diagram();
        let j = d.star(i);
        let (lo, hi) = (i.min(j), i.max(j));
        let mut toward_i = 0i64;
        let mut toward_j = 0i64;
        for k in lo..hi {
            let toward_low = self.has_arrow(k + 1, k);
            if toward_low == (i == lo) {
                toward_i += 1;
            } else {
                toward_j += 1;
            }
        }
        Ok(((d.coxeter_number() as i64 + toward_i - toward_j) / 2) as usize)
    }

    /// Recovers the quiver a class is adapted to, if any.
    pub fn from_adapted_class(c: &CommutationClass) -> Result<Self> {
        let d = c.diagram();
        let w = c.word();
        let first = |i: usize| w.iter().position(|&x| x == i).unwrap_or(usize::MAX);
        let arrows: Vec<(usize, usize)> = d
            .edges()
            .into_iter()
            .map(|(i, j)| if first(j) < first(i) { (i, j) } else { (j, i) })
            .collect();
        let q = Self::new(d, &arrows)?;
        if q.adapted_class() == *c {
            Ok(q)
        } else {
            Err(Error::NotAdapted)
        }
    }
}

/// A labelled quiver: vertices carry a residue, a root and optionally a
/// doubled position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArQuiver {
    diagram: DynkinDiagram,
    residues: Vec<usize>,
    roots: Vec<Root>,
    pos2x: Option<Vec<i64>>,
    arrows: Vec<(usize, usize)>,
}

/// Comparison form of a quiver: root to (residue, position) and the arrows
/// as pairs of roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub vertices: BTreeMap<Root, (usize, Option<i64>)>,
    pub arrows: BTreeSet<(Root, Root)>,
}

impl Snapshot {
    /// Moves every position by `delta` (doubled units).
    pub fn shifted(&self, delta: i64) -> Snapshot {
        Snapshot {
            vertices: self
                .vertices
                .iter()
                .map(|(r, &(i, p))| (r.clone(), (i, p.map(|x| x + delta))))
                .collect(),
            arrows: self.arrows.clone(),
        }
    }

    /// Equality up to a global translation of positions.
    pub fn eq_up_to_shift(&self, other: &Snapshot) -> bool {
        let Some((r, &(_, Some(p)))) = self.vertices.iter().next() else {
            return self == other;
        };
        match other.vertices.get(r) {
            Some(&(_, Some(q))) => self.shifted(q - p) == *other,
            _ => false,
        }
    }
}

impl ArQuiver {
    /// The AR-quiver of a class: `beta_k -> beta_j` for `j < k` when the
    /// letters are adjacent, `j` is the last occurrence of its letter before
    /// `k` and `k` the first occurrence of its letter after `j`.
    pub fn from_class(c: &CommutationClass) -> Self {
        let d = c.diagram().clone();
        let w = c.word();
        let roots = roots_of_word(&d, w).expect("class words are valid");
        let mut arrows = Vec::new();
        for k in 0..w.len() {
            for j in 0..k {
                if !d.adjacent(w[j], w[k]) {
                    continue;
                }
                let j_last = (j + 1..k).all(|t| w[t] != w[j]);
                let k_first = (j + 1..k).all(|t| w[t] != w[k]);
                if j_last && k_first {
                    arrows.push((k, j));
                }
            }
        }
        arrows.sort();
        ArQuiver { diagram: d, residues: w.to_vec(), roots, pos2x: None, arrows }
    }

    pub fn from_parts(
        diagram: &DynkinDiagram,
        residues: Vec<usize>,
        roots: Vec<Root>,
        pos2x: Option<Vec<i64>>,
        mut arrows: Vec<(usize, usize)>,
    ) -> Self {
        arrows.sort();
        arrows.dedup();
        ArQuiver { diagram: diagram.clone(), residues, roots, pos2x, arrows }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn residue(&self, v: usize) -> usize {
        self.residues[v]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, v: usize) -> &Root {
        &self.roots[v]
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn pos2x(&self) -> Option<&[i64]> {
        self.pos2x.as_deref()
    }

    /// Doubled position of `v`; panics when the quiver has no coordinates.
    pub fn pos(&self, v: usize) -> i64 {
        self.pos2x.as_ref().expect("quiver has coordinates")[v]
    }

    pub fn with_positions(mut self, pos2x: Vec<i64>) -> Self {
        self.pos2x = Some(pos2x);
        self
    }

    pub fn with_residues(mut self, residues: Vec<usize>) -> Self {
        self.residues = residues;
        self
    }

    pub fn vertex_of(&self, r: &Root) -> Option<usize> {
        self.roots.iter().position(|x| x == r)
    }

    pub fn vertex_at(&self, residue: usize, pos2x: i64) -> Option<usize> {
        let pos = self.pos2x.as_ref()?;
        (0..self.len()).find(|&v| self.residues[v] == residue && pos[v] == pos2x)
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.0 == v).map(|a| a.1).collect()
    }

    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.1 == v).map(|a| a.0).collect()
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.binary_search(&(from, to)).is_ok()
    }

    /// A vertex with no outgoing arrow.
    pub fn is_sink(&self, v: usize) -> bool {
        !self.arrows.iter().any(|a| a.0 == v)
    }

    /// A vertex with no incoming arrow.
    pub fn is_source(&self, v: usize) -> bool {
        !self.arrows.iter().any(|a| a.1 == v)
    }

    /// `reach[v]` holds every vertex reachable from `v` by a non-empty path.
    pub fn reachability(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        let succ: Vec<Vec<usize>> = (0..n).map(|v| self.successors(v)).collect();
        let mut done = vec![false; n];
        fn visit(v: usize, succ: &[Vec<usize>], reach: &mut [FixedBitSet], done: &mut [bool]) {
            if done[v] {
                return;
            }
            done[v] = true;
            let mut acc = FixedBitSet::with_capacity(succ.len());
            for &w in &succ[v] {
                visit(w, succ, reach, done);
                acc.insert(w);
                acc.union_with(&reach[w]);
            }
            reach[v] = acc;
        }
        for v in 0..n {
            visit(v, &succ, &mut reach, &mut done);
        }
        reach
    }

    /// `alpha` precedes `beta` when there is a path from `beta` to `alpha`.
    pub fn convex_precedes(&self, alpha: &Root, beta: &Root) -> Result<bool> {
        let a = self.vertex_of(alpha).ok_or_else(|| Error::Undefined(format!("{alpha} is absent")))?;
        let b = self.vertex_of(beta).ok_or_else(|| Error::Undefined(format!("{beta} is absent")))?;
        Ok(self.reachability()[b].contains(a))
    }

    pub fn snapshot(&self) -> Snapshot {
        let vertices = (0..self.len())
            .map(|v| (self.roots[v].clone(), (self.residues[v], self.pos2x.as_ref().map(|p| p[v]))))
            .collect();
        let arrows =
            self.arrows.iter().map(|&(a, b)| (self.roots[a].clone(), self.roots[b].clone())).collect();
        Snapshot { vertices, arrows }
    }

    /// The first pair `(beta, alpha)` of same-residue vertices at distance
    /// one step (`pos2x` apart by `4`) whose sum differs from the sum of the
    /// vertices strictly between them along arrows.
    pub fn additive_violation(&self) -> Option<(Root, Root)> {
        for b in 0..self.len() {
            for a in 0..self.len() {
                if self.residues[a] != self.residues[b] || self.pos(b) - self.pos(a) != 4 {
                    continue;
                }
                let mid: Root = self
                    .successors(a)
                    .into_iter()
                    .filter(|&g| self.has_arrow(g, b))
                    .fold(Root::zero(self.diagram.rank()), |acc, g| acc.add(&self.roots[g]));
                if self.roots[a].add(&self.roots[b]) != mid {
                    return Some((self.roots[b].clone(), self.roots[a].clone()));
                }
            }
        }
        None
    }

    pub fn check_additive(&self) -> bool {
        self.additive_violation().is_none()
    }

    /// Maximal sectional paths. `upward` follows arrows that lower the
    /// residue by one (N-paths), otherwise arrows raising it by one
    /// (S-paths). Paths are listed in arrow order.
    pub fn sectional_paths(&self, upward: bool) -> Result<Vec<Vec<usize>>> {
        let step = |a: usize, b: usize| {
            if upward {
                self.residues[b] + 1 == self.residues[a]
            } else {
                self.residues[a] + 1 == self.residues[b]
            }
        };
        let mut next: HashMap<usize, usize> = HashMap::new();
        let mut has_prev = vec![false; self.len()];
        for &(a, b) in &self.arrows {
            if step(a, b) {
                if next.insert(a, b).is_some() || has_prev[b] {
                    return Err(Error::Inconsistent("sectional paths branch".into()));
                }
                has_prev[b] = true;
            }
        }
        let mut paths = Vec::new();
        for v in 0..self.len() {
            if has_prev[v] {
                continue;
            }
            let mut path = vec![v];
            let mut cur = v;
            while let Some(&w) = next.get(&cur) {
                path.push(w);
                cur = w;
            }
            paths.push(path);
        }
        Ok(paths)
    }
}

/// The AR-quiver of a Dynkin quiver with coordinates, built from the
/// Coxeter element: its roots sit at `(i, xi(i))` and applying the Coxeter
/// transformation lowers the position by two.
pub fn gamma_q(q: &DynkinQuiver) -> ArQuiver {
    let d = q.diagram().clone();
    let c = q.coxeter_element();
    let xi = q.height_function();
    let phi = |beta: &Root| -> Root {
        let mut b = beta.clone();
        for &i in c.iter().rev() {
            b = reflect(&d, i, &b);
        }
        b
    };
    let mut verts: Vec<(i64, usize, Root)> = Vec::new();
    for (k, beta) in roots_of_word(&d, &c).expect("valid").into_iter().enumerate() {
        let i = c[k];
        let mut p = 2 * xi[i];
        let mut b = beta;
        while b.is_positive() {
            verts.push((p, i, b.clone()));
            b = phi(&b);
            p -= 4;
        }
    }
    verts.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let residues: Vec<usize> = verts.iter().map(|v| v.1).collect();
    let pos: Vec<i64> = verts.iter().map(|v| v.0).collect();
    let roots: Vec<Root> = verts.into_iter().map(|v| v.2).collect();
    let mut arrows = Vec::new();
    for a in 0..roots.len() {
        for b in 0..roots.len() {
            if d.adjacent(residues[a], residues[b]) && pos[b] - pos[a] == 2 {
                arrows.push((a, b));
            }
        }
    }
    ArQuiver::from_parts(&d, residues, roots, Some(pos), arrows)
}

/// Positions of the AR-quiver of the adapted class of `q` read off from the
/// word: the k-th occurrence (from 0) of `i` sits at `xi(i) - 2k`.
pub fn occurrence_positions(q: &DynkinQuiver, word: &[usize]) -> Vec<i64> {
    let xi = q.height_function();
    let mut seen = vec![0i64; q.rank() + 1];
    word.iter()
        .map(|&i| {
            let p = 2 * xi[i] - 4 * seen[i];
            seen[i] += 1;
            p
        })
        .collect()
}

/// The word-labelled AR-quiver of `[Q]` with coordinates from occurrences.
pub fn gamma_q_from_word(q: &DynkinQuiver) -> ArQuiver {
    let c = q.adapted_class();
    let pos = occurrence_positions(q, c.word());
    ArQuiver::from_class(&c).with_positions(pos)
}

/// The reflection of `Gamma_Q` at a sink `i` of `Q` computed on
/// coordinates: `alpha_i` moves from `(i, p)` to `(i*, p - h)`, gains
/// arrows to `(j, p - h + 1)` for `j` adjacent to `i*`, and every other
/// label is transformed by `s_i`.
pub fn reflect_gamma(g: &ArQuiver, i: usize) -> Result<ArQuiver> {
    let d = g.diagram().clone();
    let rank = d.rank();
    let simple = Root::simple(rank, i);
    let v = g.vertex_of(&simple).ok_or_else(|| Error::Undefined(format!("{simple} is absent")))?;
    if g.residue(v) != i || !g.is_sink(v) {
        return Err(Error::NotSink(i));
    }
    let h2 = 2 * d.coxeter_number() as i64;
    let p = g.pos(v);
    let star = d.star(i);
    let keep: Vec<usize> = (0..g.len()).filter(|&u| u != v).collect();
    let mut residues: Vec<usize> = keep.iter().map(|&u| g.residue(u)).collect();
    let mut roots: Vec<Root> = keep.iter().map(|&u| reflect(&d, i, g.root(u))).collect();
    let mut pos: Vec<i64> = keep.iter().map(|&u| g.pos(u)).collect();
    let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &u)| (u, k)).collect();
    let mut arrows: Vec<(usize, usize)> = g
        .arrows()
        .iter()
        .filter(|a| a.0 != v && a.1 != v)
        .map(|a| (remap[&a.0], remap[&a.1]))
        .collect();
    let new = roots.len();
    residues.push(star);
    roots.push(simple);
    pos.push(p - h2);
    for u in 0..new {
        if d.adjacent(residues[u], star) && pos[u] == p - h2 + 2 {
            arrows.push((new, u));
        }
    }
    Ok(ArQuiver::from_parts(&d, residues, roots, Some(pos), arrows))
}

/// Labels of a type A AR-quiver recovered from its sectional paths: a
/// maximal N-path of length `k` shares the first component `n - k` and a
/// maximal S-path of length `k` the second component `k + 1`.
pub fn label_by_sections(g: &ArQuiver) -> Result<Vec<Root>> {
    let n = g.diagram().rank();
    let mut first = vec![0usize; g.len()];
    let mut second = vec![0usize; g.len()];
    for path in g.sectional_paths(true)? {
        for &v in &path {
            first[v] = n - (path.len() - 1);
        }
    }
    for path in g.sectional_paths(false)? {
        for &v in &path {
            second[v] = path.len();
        }
    }
    (0..g.len())
        .map(|v| {
            let (a, b) = (first[v], second[v]);
            if a == 0 || a > b || b > n {
                Err(Error::Inconsistent(format!("section labels ({a},{b}) at vertex {v}")))
            } else {
                Ok(Root::segment(n, a, b))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5_example() -> DynkinQuiver {
        // 1 <- 2 -> 3 <- 4 <- 5
        DynkinQuiver::type_a(5, "<><<").unwrap()
    }

    #[test]
    fn orientation_strings_round_trip() {
        let q = a5_example();
        assert_eq!(q.orientation(), "<><<");
        assert_eq!(q.sinks(), vec![1, 3]);
        assert_eq!(DynkinQuiver::all_type_a(4).len(), 8);
        assert!(DynkinQuiver::type_a(3, "<x").is_err());
        assert!(DynkinQuiver::type_a(3, "<").is_err());
    }

    #[test]
    fn height_function_of_example() {
        assert_eq!(a5_example().height_function()[1..], [0, -1, 0, -1, -2]);
    }

    #[test]
    fn coxeter_element_of_example() {
        assert_eq!(a5_example().coxeter_element(), vec![1, 3, 2, 4, 5]);
    }

    #[test]
    fn two_routes_to_gamma_q_agree() {
        for n in 1..=6 {
            for q in DynkinQuiver::all_type_a(n) {
                assert_eq!(gamma_q(&q).snapshot(), gamma_q_from_word(&q).snapshot(), "{}", q.orientation());
            }
        }
    }

    #[test]
    fn occurrence_counts_match_word() {
        for n in 1..=6 {
            for q in DynkinQuiver::all_type_a(n) {
                let w = q.adapted_word();
                for i in 1..=n {
                    assert_eq!(w.iter().filter(|&&x| x == i).count(), q.occurrence_count(i).unwrap());
                }
            }
        }
    }

    #[test]
    fn adapted_class_round_trip() {
        for q in DynkinQuiver::all_type_a(5) {
            assert_eq!(DynkinQuiver::from_adapted_class(&q.adapted_class()).unwrap(), q);
        }
    }

    #[test]
    fn d4_example_quiver() {
        let d = DynkinDiagram::d(4);
        let c = CommutationClass::new(&d, &[1, 2, 3, 1, 2, 4, 1, 2, 3, 1, 2, 4]).unwrap();
        let q = ArQuiver::from_class(&c);
        let r = |v: [i32; 4]| Root(v.to_vec());
        let rows: [(usize, Vec<Root>); 4] = [
            (1, vec![r([1, 0, 0, 0]), r([0, 1, 0, 0]), r([0, 0, 1, 0]), r([1, 1, 0, 1])]),
            (2, vec![r([1, 1, 0, 0]), r([0, 1, 1, 0]), r([1, 1, 1, 1]), r([0, 1, 0, 1])]),
            (3, vec![r([1, 1, 1, 0]), r([0, 1, 1, 1])]),
            (4, vec![r([1, 2, 1, 1]), r([0, 0, 0, 1])]),
        ];
        for (i, labels) in rows {
            let got: Vec<Root> =
                (0..q.len()).filter(|&v| q.residue(v) == i).map(|v| q.root(v).clone()).collect();
            assert_eq!(got, labels, "residue {i}");
        }
        let arrow = |a: [i32; 4], b: [i32; 4]| {
            q.has_arrow(q.vertex_of(&r(a)).unwrap(), q.vertex_of(&r(b)).unwrap())
        };
        assert!(arrow([0, 0, 0, 1], [0, 1, 0, 1]));
        assert!(arrow([0, 1, 0, 1], [1, 1, 0, 1]));
        assert!(arrow([1, 2, 1, 1], [0, 1, 1, 0]));
        assert!(arrow([1, 1, 1, 1], [0, 0, 1, 0]));
        assert_eq!(q.arrows().len(), 14);
        assert!(q.convex_precedes(&r([1, 0, 0, 0]), &r([0, 1, 0, 1])).unwrap());
        assert!(!q.convex_precedes(&r([0, 1, 0, 1]), &r([1, 0, 0, 0])).unwrap());
        assert!(!q.convex_precedes(&r([1, 0, 0, 0]), &r([1, 0, 0, 0])).unwrap());
    }

    #[test]
    fn a2_quiver_is_a_path() {
        let d = DynkinDiagram::a(2);
        let q = ArQuiver::from_class(&CommutationClass::new(&d, &[1, 2, 1]).unwrap());
        assert_eq!(q.residues(), &[1, 2, 1]);
        assert_eq!(q.arrows(), &[(1, 0), (2, 1)]);
        assert_eq!(q.root(1), &Root::segment(2, 1, 2));
    }

    #[test]
    fn deleting_an_arrow_breaks_additivity() {
        let g = gamma_q(&a5_example());
        assert!(g.check_additive());
        let mut arrows = g.arrows().to_vec();
        arrows.remove(3);
        let broken = ArQuiver::from_parts(
            g.diagram(),
            g.residues().to_vec(),
            g.roots().to_vec(),
            g.pos2x().map(|p| p.to_vec()),
            arrows,
        );
        assert!(!broken.check_additive());
    }

    #[test]
    fn d4_word_is_not_adapted() {
        let d = DynkinDiagram::d(4);
        let c = CommutationClass::new(&d, &[1, 2, 3, 1, 2, 4, 1, 2, 3, 1, 2, 4]).unwrap();
        assert_eq!(DynkinQuiver::from_adapted_class(&c), Err(Error::NotAdapted));
    }

    #[test]
    fn reflection_of_gamma_matches_reflected_quiver() {
        for n in 1..=5 {
            for q in DynkinQuiver::all_type_a(n) {
                let g = gamma_q(&q);
                for i in q.sinks() {
                    let r = reflect_gamma(&g, i).unwrap();
                    let fresh = gamma_q(&q.reflect_at(i));
                    assert!(r.snapshot().eq_up_to_shift(&fresh.snapshot()));
                }
            }
        }
    }

    #[test]
    fn arrows_raise_position_by_one() {
        for q in DynkinQuiver::all_type_a(5) {
            let g = gamma_q_from_word(&q);
            let fresh = ArQuiver::from_class(&q.adapted_class());
            assert_eq!(g.arrows(), fresh.arrows());
            for &(a, b) in g.arrows() {
                assert_eq!(g.pos(b) - g.pos(a), 2);
            }
        }
    }

    #[test]
    fn sink_check_in_reflection() {
        let g = gamma_q(&a5_example());
        assert_eq!(reflect_gamma(&g, 2).unwrap_err(), Error::NotSink(2));
    }
}
