//! The twisted adapted cluster point of type A_{2n+1}: twisted Coxeter
//! elements, the surgery maps between A_{2n+1} and A_{2n}, coordinates on
//! twisted AR-quivers, their labels and the twisted additive property.
//!
//! Residue `n+1` is the middle of A_{2n+1}. Vertices of other residues are
//! called induced: they correspond to vertices of `Gamma_Q` for the A_{2n}
//! quiver `Q` obtained by deleting the letter `n+1`. Positions are doubled;
//! induced vertices sit at even positions, the others at odd ones.

use std::collections::{BTreeSet, HashMap};

use crate::arquiver::{occurrence_positions, ArQuiver, DynkinQuiver};
use crate::error::{Error, Result};
use crate::roots::{reflect, Automorphism, DynkinDiagram, Root, RootSystem, Word};
use crate::words::{canonical_form, ClusterPoint, CommutationClass};

/// The diagram A_{2n+1}.
pub fn diagram(n: usize) -> DynkinDiagram {
    DynkinDiagram::a(2 * n + 1)
}

/// The involution `i -> 2n+2-i` of A_{2n+1}.
pub fn vee(n: usize) -> Automorphism {
    Automorphism::flip_a(2 * n + 1)
}

/// Folded residue `min(i, 2n+2-i)`.
pub fn fold_index(n: usize, i: usize) -> usize {
    i.min(2 * n + 2 - i)
}

/// `prod_{k=0}^{2n} (w)^{k vee}` for a word `w` of A_{2n+1}.
pub fn twisted_power(n: usize, w: &[usize]) -> Word {
    let v = vee(n);
    (0..=2 * n).flat_map(|k| v.apply_word(k % 2, w)).collect()
}

/// The generating word `prod_{k=0}^{2n} (1 2 ... n+1)^{k vee}`.
pub fn generator_word(n: usize) -> Word {
    twisted_power(n, &(1..=n + 1).collect::<Vec<_>>())
}

pub fn twisted_cluster_point(n: usize) -> ClusterPoint {
    let c = CommutationClass::new(&diagram(n), &generator_word(n)).expect("generator is reduced");
    ClusterPoint::generate(&c)
}

/// Twisted Coxeter elements of A_{2n+1}: one letter from each orbit
/// `{i, 2n+2-i}` and the letter `n+1`, in any order, up to commutation.
/// Each is returned in normal form.
pub fn twisted_coxeter_elements(n: usize) -> Vec<Word> {
    let d = diagram(n);
    let mut found = BTreeSet::new();
    for mask in 0..1usize << n {
        let mut letters: Vec<usize> =
            (1..=n).map(|i| if mask >> (i - 1) & 1 == 1 { 2 * n + 2 - i } else { i }).collect();
        letters.push(n + 1);
        permutations(&mut letters, 0, &mut |w| {
            found.insert(canonical_form(&d, w));
        });
    }
    found.into_iter().collect()
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for j in k..v.len() {
        v.swap(k, j);
        permutations(v, k + 1, f);
        v.swap(k, j);
    }
}

/// The class of `prod_{k=0}^{2n} (tc)^{k vee}`.
pub fn class_from_twisted_coxeter(n: usize, tc: &[usize]) -> Result<CommutationClass> {
    let mut orbits: Vec<usize> = tc.iter().map(|&i| fold_index(n, i)).collect();
    orbits.sort();
    if orbits != (1..=n + 1).collect::<Vec<_>>() {
        return Err(Error::Inconsistent(format!("{tc:?} is not a twisted Coxeter word")));
    }
    CommutationClass::new(&diagram(n), &twisted_power(n, tc))
}

/// The letterwise surgery map: delete `n+1`, shift letters above it down.
pub fn surgery_p_word(n: usize, w: &[usize]) -> Word {
    w.iter()
        .filter(|&&i| i != n + 1)
        .map(|&i| if i > n + 1 { i - 1 } else { i })
        .collect()
}

/// The surgery map on classes; the image must be a class of `w0` of A_{2n}.
pub fn surgery_p(n: usize, c: &CommutationClass) -> Result<CommutationClass> {
    if c.diagram() != &diagram(n) {
        return Err(Error::NotInPoint(format!("expected A{}", 2 * n + 1)));
    }
    CommutationClass::new(&DynkinDiagram::a(2 * n), &surgery_p_word(n, c.word()))
        .map_err(|e| Error::NotInPoint(e.to_string()))
}

/// The homomorphism of free monoids with `n -> n n+1`,
/// `n+1 -> n+2 n+1` and `i -> i+1` for `i > n+1`.
pub fn r_hom(n: usize, w: &[usize]) -> Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &i in w {
        if i < n {
            out.push(i);
        } else if i == n {
            out.extend([n, n + 1]);
        } else if i == n + 1 {
            out.extend([n + 2, n + 1]);
        } else {
            out.push(i + 1);
        }
    }
    out
}

/// Which of the two preimages of an adapted class: `Less` when `n+1` is a
/// source of the class, `Greater` when it is a sink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Less,
    Greater,
}

impl Side {
    pub fn symbol(self) -> char {
        match self {
            Side::Less => '<',
            Side::Greater => '>',
        }
    }

    pub fn parse(s: &str) -> Result<Side> {
        match s {
            "<" => Ok(Side::Less),
            ">" => Ok(Side::Greater),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Rank of the A_{2n} quiver, as `n`.
fn half_rank(q: &DynkinQuiver) -> Result<usize> {
    let m = q.rank();
    if q.diagram() != &DynkinDiagram::a(m) || m % 2 != 0 {
        return Err(Error::Inconsistent("expected a quiver of type A_{2n}".into()));
    }
    Ok(m / 2)
}

/// Builds the preimage of `[Q]` by inserting letters: shift letters above
/// `n` up by one, put `n+1` between consecutive letters of `{n, n+2}` and
/// one more `n+1` at the end (`Less`) or at the beginning (`Greater`).
pub fn surgery_r(q: &DynkinQuiver, side: Side) -> Result<CommutationClass> {
    let n = half_rank(q)?;
    let shifted: Word = q.adapted_word().into_iter().map(|i| if i > n { i + 1 } else { i }).collect();
    let mut out = Vec::with_capacity(shifted.len() + 2 * n + 1);
    if side == Side::Greater {
        out.push(n + 1);
    }
    let mut seen_middle = false;
    for i in shifted {
        if i == n || i == n + 2 {
            if seen_middle {
                out.push(n + 1);
            }
            seen_middle = true;
        }
        out.push(i);
    }
    if side == Side::Less {
        out.push(n + 1);
    }
    CommutationClass::new(&diagram(n), &out)
}

/// The same preimage through the homomorphism `R`: the image of an adapted
/// word ends with `n+1`, giving `Less`; `Greater` moves that letter to the
/// front by the reflection functor.
pub fn surgery_r_hom(q: &DynkinQuiver, side: Side) -> Result<CommutationClass> {
    let n = half_rank(q)?;
    let less = CommutationClass::new(&diagram(n), &r_hom(n, &q.adapted_word()))?;
    match side {
        Side::Less => Ok(less),
        Side::Greater => less.try_reflect_left(n + 1),
    }
}

/// A class of the twisted adapted cluster point with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedClass {
    n: usize,
    class: CommutationClass,
    side: Side,
    parent: DynkinQuiver,
}

impl TwistedClass {
    /// Certifies membership: `P(c)` is adapted to some `Q` and `c` is one of
    /// the two preimages of `[Q]`.
    pub fn identify(c: &CommutationClass) -> Result<Self> {
        let m = c.diagram().rank();
        if m % 2 == 0 || c.diagram() != &DynkinDiagram::a(m) {
            return Err(Error::NotInPoint("expected type A of odd rank".into()));
        }
        let n = (m - 1) / 2;
        let pc = surgery_p(n, c)?;
        let parent = DynkinQuiver::from_adapted_class(&pc)
            .map_err(|_| Error::NotInPoint("image under P is not adapted".into()))?;
        let src = c.sources().contains(&(n + 1));
        let snk = c.sinks().contains(&(n + 1));
        let side = match (src, snk) {
            (true, false) => Side::Less,
            (false, true) => Side::Greater,
            _ => return Err(Error::NotInPoint(format!("{} is both or neither sink and source", n + 1))),
        };
        if surgery_r(&parent, side)? != *c {
            return Err(Error::NotInPoint("class differs from the surgery of its image".into()));
        }
        Ok(TwistedClass { n, class: c.clone(), side, parent })
    }

    pub fn from_quiver(q: &DynkinQuiver, side: Side) -> Result<Self> {
        let n = half_rank(q)?;
        Ok(TwistedClass { n, class: surgery_r(q, side)?, side, parent: q.clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> &CommutationClass {
        &self.class
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn parent(&self) -> &DynkinQuiver {
        &self.parent
    }

    /// Which of the four local shapes around residues `n, n+1, n+2`
    /// (see [`restricted_pattern`]). Cases 1 and 2 have the arrow
    /// `n+1 -> n` in `Q`, cases 3 and 4 the arrow `n -> n+1`; odd cases are
    /// `Greater`, even ones `Less`. Induced central vertices contain
    /// `alpha_n + alpha_{n+1}` in cases 1 and 4 and `alpha_{n+1} + alpha_{n+2}`
    /// in cases 2 and 3.
    pub fn situation(&self) -> u8 {
        let toward_n = self.parent.has_arrow(self.n + 1, self.n);
        match (toward_n, self.side) {
            (true, Side::Greater) => 1,
            (true, Side::Less) => 2,
            (false, Side::Greater) => 3,
            (false, Side::Less) => 4,
        }
    }
}

pub fn is_twisted_adapted(c: &CommutationClass) -> bool {
    TwistedClass::identify(c).is_ok()
}

/// The four shapes of the subword on `{n, n+1, n+2}`:
/// 1 is `n+1 n (n+1 n+2 n+1 n)^n`, 2 is `(n n+1 n+2 n+1)^n n n+1`,
/// 3 is `n+1 n+2 (n+1 n n+1 n+2)^n` and 4 is `(n+2 n+1 n n+1)^n n+2 n+1`.
pub fn restricted_pattern(n: usize, w: &[usize]) -> Option<u8> {
    let sub: Word = w.iter().copied().filter(|&i| (n..=n + 2).contains(&i)).collect();
    let (a, b, c) = (n, n + 1, n + 2);
    let rep = |unit: &[usize], times: usize, tail: &[usize], head: &[usize]| -> Word {
        let mut v = head.to_vec();
        for _ in 0..times {
            v.extend(unit);
        }
        v.extend(tail);
        v
    };
    let shapes = [
        (1, rep(&[b, c, b, a], n, &[], &[b, a])),
        (2, rep(&[a, b, c, b], n, &[a, b], &[])),
        (3, rep(&[b, a, b, c], n, &[], &[b, c])),
        (4, rep(&[c, b, a, b], n, &[c, b], &[])),
    ];
    shapes.into_iter().find(|(_, s)| *s == sub).map(|(k, _)| k)
}

/// Number of quivers of A_{2n} with `|a_i - b_i| = 1` for every `i`.
pub fn count_char_quivers(n: usize) -> usize {
    DynkinQuiver::all_type_a(2 * n).into_iter().filter(is_char_quiver).count()
}

/// `|a_i - b_i| = 1` for every vertex, with `a_i`, `b_i` the numbers of
/// arrows between `i` and `i*` pointing towards `i` and towards `i*`.
pub fn is_char_quiver(q: &DynkinQuiver) -> bool {
    let m = q.rank();
    (1..=m).all(|i| {
        let j = m + 1 - i;
        let (lo, hi) = (i.min(j), i.max(j));
        let toward_lo = (lo..hi).filter(|&k| q.has_arrow(k + 1, k)).count() as i64;
        let toward_hi = (hi - lo) as i64 - toward_lo;
        (toward_lo - toward_hi).abs() == 1
    })
}

pub fn multiplicity(gamma: &Root) -> i32 {
    gamma.0.iter().copied().max().unwrap_or(0)
}

/// Largest sum of coefficients over an orbit of `sigma`.
pub fn folded_multiplicity(gamma: &Root, sigma: &Automorphism) -> i32 {
    sigma.orbits().iter().map(|o| o.iter().map(|&i| gamma.coeff(i)).sum()).max().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    CentralInduced,
    CentralNonInduced,
    NorthEast,
    SouthEast,
    NorthWest,
    SouthWest,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::CentralInduced => "central-induced",
            VertexKind::CentralNonInduced => "central-non-induced",
            VertexKind::NorthEast => "NE",
            VertexKind::SouthEast => "SE",
            VertexKind::NorthWest => "NW",
            VertexKind::SouthWest => "SW",
        }
    }

    pub fn is_central(self) -> bool {
        matches!(self, VertexKind::CentralInduced | VertexKind::CentralNonInduced)
    }
}

/// A twisted AR-quiver with doubled coordinates.
#[derive(Clone, Debug)]
pub struct TwistedQuiver {
    class: TwistedClass,
    quiver: ArQuiver,
}

impl TwistedQuiver {
    pub fn class(&self) -> &TwistedClass {
        &self.class
    }

    pub fn quiver(&self) -> &ArQuiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.class.n
    }

    pub fn is_induced(&self, v: usize) -> bool {
        self.quiver.residue(v) != self.n() + 1
    }
}

/// Coordinates from the surgery: an induced vertex takes the position of
/// its counterpart in `Gamma_Q`; a vertex of residue `n+1` sits half a step
/// after its predecessor, or half a step before its successor when it has
/// no predecessor.
pub fn assign_coordinates(tc: &TwistedClass) -> Result<TwistedQuiver> {
    let n = tc.n;
    let c = &tc.class;
    let ups = ArQuiver::from_class(c);
    let parent_word = surgery_p_word(n, c.word());
    let parent_pos = occurrence_positions(&tc.parent, &parent_word);
    let mut pos: Vec<Option<i64>> = vec![None; ups.len()];
    let mut k = 0;
    for v in 0..ups.len() {
        if ups.residue(v) != n + 1 {
            pos[v] = Some(parent_pos[k]);
            k += 1;
        }
    }
    for v in 0..ups.len() {
        if ups.residue(v) != n + 1 {
            continue;
        }
        let preds = ups.predecessors(v);
        let succs = ups.successors(v);
        let p = match (preds.as_slice(), succs.as_slice()) {
            ([a], [b]) => {
                let (pa, pb) = (pos[*a].expect("induced"), pos[*b].expect("induced"));
                if pb != pa + 2 {
                    return Err(Error::Inconsistent(format!("middle vertex between {pa} and {pb}")));
                }
                pa + 1
            }
            ([a], []) => pos[*a].expect("induced") + 1,
            ([], [b]) => pos[*b].expect("induced") - 1,
            _ => return Err(Error::Inconsistent("vertex of residue n+1 with unexpected arrows".into())),
        };
        pos[v] = Some(p);
    }
    let pos: Vec<i64> = pos.into_iter().map(|p| p.expect("assigned")).collect();
    let quiver = ups.with_positions(pos);
    let mut seen = HashMap::new();
    for v in 0..quiver.len() {
        if seen.insert((quiver.residue(v), quiver.pos(v)), v).is_some() {
            return Err(Error::CoordinateCollision { residue: quiver.residue(v), pos2x: quiver.pos(v) });
        }
    }
    Ok(TwistedQuiver { class: tc.clone(), quiver })
}

/// Positions propagated along arrows alone: every arrow raises the doubled
/// position by 2, or by 1 when it touches residue `n+1`. The vertex of the
/// first letter is placed at 0.
pub fn propagate_positions(q: &ArQuiver, n: usize) -> Result<Vec<i64>> {
    let mut pos: Vec<Option<i64>> = vec![None; q.len()];
    if q.is_empty() {
        return Ok(Vec::new());
    }
    pos[0] = Some(0);
    let step = |a: usize, b: usize| if q.residue(a) == n + 1 || q.residue(b) == n + 1 { 1 } else { 2 };
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        let p = pos[v].expect("assigned");
        for &(a, b) in q.arrows() {
            let (other, want) = if a == v {
                (b, p + step(a, b))
            } else if b == v {
                (a, p - step(a, b))
            } else {
                continue;
            };
            match pos[other] {
                None => {
                    pos[other] = Some(want);
                    stack.push(other);
                }
                Some(x) if x != want => {
                    return Err(Error::Inconsistent(format!("arrow {a}->{b} breaks the step rule")))
                }
                _ => {}
            }
        }
    }
    pos.into_iter().map(|p| p.ok_or_else(|| Error::Inconsistent("disconnected quiver".into()))).collect()
}

/// Central vertices and the four outer regions. A vertex is central when
/// it has residue `n+1` or when both of its maximal sectional paths contain
/// a vertex of residue `n+1`. Outside the centre, a vertex on a totally
/// induced maximal S-path lies in NE (upper half) or SW (lower half), one
/// on a totally induced maximal N-path in NW or SE.
pub fn classify_vertices(tq: &TwistedQuiver) -> Result<Vec<VertexKind>> {
    let q = &tq.quiver;
    let n = tq.n();
    let npath = path_index(q, true)?;
    let spath = path_index(q, false)?;
    let touches = |path: &[usize]| path.iter().any(|&v| q.residue(v) == n + 1);
    let mut kinds = Vec::with_capacity(q.len());
    for v in 0..q.len() {
        let r = q.residue(v);
        if r == n + 1 {
            kinds.push(VertexKind::CentralNonInduced);
            continue;
        }
        let (nt, st) = (touches(&npath[v]), touches(&spath[v]));
        let kind = match (nt, st, r <= n) {
            (true, true, _) => VertexKind::CentralInduced,
            (true, false, true) => VertexKind::NorthEast,
            (true, false, false) => VertexKind::SouthWest,
            (false, true, true) => VertexKind::NorthWest,
            (false, true, false) => VertexKind::SouthEast,
            (false, false, _) => {
                return Err(Error::Inconsistent(format!(
                    "vertex {} lies on two totally induced sectional paths",
                    q.root(v)
                )))
            }
        };
        kinds.push(kind);
    }
    Ok(kinds)
}

/// For every vertex, the maximal sectional path through it.
fn path_index(q: &ArQuiver, upward: bool) -> Result<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); q.len()];
    for path in q.sectional_paths(upward)? {
        for &v in &path {
            out[v] = path.clone();
        }
    }
    Ok(out)
}

/// Labels recovered from the sectional structure: an induced maximal
/// N-path of length `k` shares the first component `2n+1-k`, an induced
/// maximal S-path of length `k` shares the second component `k+1`. A vertex
/// of residue `n+1` lies on a single induced path; its other component is
/// the one value left unused along that path.
pub fn label_twisted(tq: &TwistedQuiver) -> Result<Vec<Root>> {
    let q = &tq.quiver;
    let n = tq.n();
    let m = 2 * n + 1;
    let mut first: Vec<Option<usize>> = vec![None; q.len()];
    let mut second: Vec<Option<usize>> = vec![None; q.len()];
    let npaths = q.sectional_paths(true)?;
    let spaths = q.sectional_paths(false)?;
    let induced = |path: &[usize]| path.iter().any(|&v| tq.is_induced(v));
    for path in npaths.iter().filter(|p| induced(p)) {
        for &v in path {
            first[v] = Some(m - (path.len() - 1));
        }
    }
    for path in spaths.iter().filter(|p| induced(p)) {
        for &v in path {
            second[v] = Some(path.len());
        }
    }
    for path in npaths.iter().filter(|p| induced(p)) {
        complete(path, &mut second, |b| (first[path[0]].expect("set")..=m).contains(&b))?;
    }
    for path in spaths.iter().filter(|p| induced(p)) {
        let b = second[path[0]].expect("set");
        complete(path, &mut first, |a| (1..=b).contains(&a))?;
    }
    let labels = (0..q.len())
        .map(|v| match (first[v], second[v]) {
            (Some(a), Some(b)) if a <= b => Ok(Root::segment(m, a, b)),
            _ => Err(Error::Inconsistent(format!("no section label for vertex {v}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<&Root> = labels.iter().collect();
    if distinct.len() != labels.len() {
        return Err(Error::Inconsistent("section labels repeat".into()));
    }
    Ok(labels)
}

/// Fills the single missing entry of `comp` along `path` with the only
/// admissible value not used elsewhere on the path.
fn complete(path: &[usize], comp: &mut [Option<usize>], admissible: impl Fn(usize) -> bool) -> Result<()> {
    let missing: Vec<usize> = path.iter().copied().filter(|&v| comp[v].is_none()).collect();
    match missing.as_slice() {
        [] => Ok(()),
        [v] => {
            let used: BTreeSet<usize> = path.iter().filter_map(|&u| comp[u]).collect();
            let free: Vec<usize> = (1..=path.len() + 64).filter(|&x| admissible(x) && !used.contains(&x)).collect();
            match free.as_slice() {
                [x] => {
                    comp[*v] = Some(*x);
                    Ok(())
                }
                _ => Err(Error::Inconsistent(format!("{} candidates for a missing component", free.len()))),
            }
        }
        _ => Err(Error::Inconsistent("several missing components on one path".into())),
    }
}

/// The first `beta` at which the twisted additive property fails. For
/// `beta` at `(i, P)` and `alpha` at `(i, P - 4 + 2 delta)` the sum equals
/// the sum of the roots at `(j, P - 2 + delta)` over the prescribed `j`,
/// where `delta = 1` exactly when `i = n+1`.
pub fn twisted_additive_violation(tq: &TwistedQuiver) -> Option<Root> {
    let q = &tq.quiver;
    let n = tq.n();
    let m = 2 * n + 1;
    for b in 0..q.len() {
        let i = q.residue(b);
        let delta = i64::from(i == n + 1);
        let p = q.pos(b);
        let Some(a) = q.vertex_at(i, p - 4 + 2 * delta) else {
            continue;
        };
        let js: Vec<usize> = if i == n + 2 {
            vec![n, n + 3]
        } else if i == n {
            vec![n.wrapping_sub(1), n + 2]
        } else {
            vec![i.wrapping_sub(1), i + 1]
        };
        let mid = js
            .into_iter()
            .filter(|&j| (1..=m).contains(&j))
            .filter_map(|j| q.vertex_at(j, p - 2 + delta))
            .fold(Root::zero(m), |acc, g| acc.add(q.root(g)));
        if q.root(a).add(q.root(b)) != mid {
            return Some(q.root(b).clone());
        }
    }
    None
}

pub fn check_twisted_additive(tq: &TwistedQuiver) -> bool {
    twisted_additive_violation(tq).is_none()
}

/// The reflection functor at a sink `i` on coordinates: `alpha_i` moves
/// from `(i, p)` to `(i*, p - h)` with `h = 2n+1`, gains arrows to the
/// vertices `(j, p - h + 1/(1 + delta_{j,n+1} + delta_{i*,n+1}))` with `j`
/// adjacent to `i*`, and the other labels are transformed by `s_i`.
pub fn reflect_twisted(tq: &TwistedQuiver, i: usize) -> Result<ArQuiver> {
    let q = &tq.quiver;
    let n = tq.n();
    let d = q.diagram().clone();
    let simple = Root::simple(d.rank(), i);
    let v = q.vertex_of(&simple).ok_or_else(|| Error::Undefined(format!("{simple} is absent")))?;
    if !tq.class.class.sinks().contains(&i) {
        return Err(Error::NotSink(i));
    }
    let h2 = 2 * (2 * n + 1) as i64;
    let p = q.pos(v);
    let star = d.star(i);
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
    let base = p - h2;
    residues.push(star);
    roots.push(simple);
    pos.push(base);
    for u in 0..new {
        let j = residues[u];
        if !d.adjacent(j, star) {
            continue;
        }
        let step = 2 / (1 + i64::from(j == n + 1) + i64::from(star == n + 1));
        if pos[u] == base + step {
            arrows.push((new, u));
        }
    }
    Ok(ArQuiver::from_parts(&d, residues, roots, Some(pos), arrows))
}

/// `iota^+`: the embedding of indices of A_{2n} into A_{2n+1} skipping `n+1`.
pub fn iota_plus(n: usize, i: usize) -> usize {
    if i > n {
        i + 1
    } else {
        i
    }
}

/// Inverse of [`iota_plus`] on induced residues.
pub fn iota_minus(n: usize, i: usize) -> usize {
    if i > n + 1 {
        i - 1
    } else {
        i
    }
}

/// The label of an induced vertex predicted from its label `[a,b]` in
/// `Gamma_Q`: the sum of `alpha_{iota^+(k)}` for `a <= k <= b`, plus
/// `alpha_{n+1}` for central vertices.
pub fn induced_label(n: usize, gamma_q_label: &Root, central: bool) -> Result<Root> {
    let (a, b) = gamma_q_label
        .as_segment()
        .ok_or_else(|| Error::Inconsistent(format!("{gamma_q_label} is not a segment")))?;
    let m = 2 * n + 1;
    let mut r = Root::zero(m);
    for k in a..=b {
        r.0[iota_plus(n, k) - 1] += 1;
    }
    if central {
        r.0[n] += 1;
    }
    Ok(r)
}

/// A root system handle for A_{2n+1}.
pub fn root_system(n: usize) -> RootSystem {
    RootSystem::new(&diagram(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_word_shape() {
        assert_eq!(generator_word(1), vec![1, 2, 3, 2, 1, 2]);
        assert_eq!(generator_word(2).len(), 15);
        for n in 1..=3 {
            assert_eq!(generator_word(n).len(), (2 * n + 1) * (n + 1));
        }
    }

    #[test]
    fn twisted_coxeter_counts() {
        assert_eq!(twisted_coxeter_elements(1).len(), 4);
        assert_eq!(twisted_coxeter_elements(2).len(), 12);
        assert_eq!(twisted_coxeter_elements(3).len(), 36);
    }

    #[test]
    fn a5_twisted_coxeter_list() {
        let d = diagram(2);
        let listed: BTreeSet<Word> = [
            [1, 2, 3], [2, 1, 3], [3, 1, 2], [3, 2, 1], [5, 2, 3], [3, 2, 5],
            [1, 4, 3], [3, 1, 4], [5, 4, 3], [4, 5, 3], [3, 5, 4], [3, 4, 5],
        ]
        .iter()
        .map(|w| canonical_form(&d, w))
        .collect();
        assert_eq!(listed, twisted_coxeter_elements(2).into_iter().collect());
    }

    #[test]
    fn r_hom_letters() {
        assert_eq!(r_hom(2, &[1, 2, 3, 4]), vec![1, 2, 3, 4, 3, 5]);
    }

    #[test]
    fn char_quiver_counts() {
        assert_eq!(count_char_quivers(1), 2);
        assert_eq!(count_char_quivers(2), 6);
        assert_eq!(count_char_quivers(3), 18);
    }

    #[test]
    fn multiplicities() {
        let v = vee(2);
        assert_eq!(multiplicity(&Root::segment(5, 2, 4)), 1);
        assert_eq!(folded_multiplicity(&Root::segment(5, 2, 4), &v), 2);
        assert_eq!(folded_multiplicity(&Root::simple(5, 3), &v), 1);
    }

    #[test]
    fn p_example() {
        let d = diagram(2);
        let c = CommutationClass::new(&d, &[1, 2, 3, 5, 4, 3, 1, 2, 3, 5, 4, 3, 1, 2, 3]).unwrap();
        let p = surgery_p(2, &c).unwrap();
        let expected = CommutationClass::new(&DynkinDiagram::a(4), &[1, 2, 4, 3, 1, 2, 4, 3, 1, 2]).unwrap();
        assert_eq!(p, expected);
        assert_eq!(DynkinQuiver::from_adapted_class(&p).unwrap(), DynkinQuiver::type_a(4, "<<>").unwrap());
    }

    #[test]
    fn surgery_routes_agree() {
        for n in 1..=3 {
            for q in DynkinQuiver::all_type_a(2 * n) {
                for side in [Side::Less, Side::Greater] {
                    let a = surgery_r(&q, side).unwrap();
                    assert_eq!(a, surgery_r_hom(&q, side).unwrap());
                    let t = TwistedClass::identify(&a).unwrap();
                    assert_eq!(t.side(), side);
                    assert_eq!(t.parent(), &q);
                }
            }
        }
    }

    #[test]
    fn identify_rejects_outsiders() {
        let d = DynkinDiagram::a(3);
        let c = CommutationClass::new(&d, &[1, 2, 1, 3, 2, 1]).unwrap();
        assert!(TwistedClass::identify(&c).is_err());
        assert!(!is_twisted_adapted(&c));
    }

    #[test]
    fn induced_label_shift() {
        assert_eq!(induced_label(3, &Root::segment(6, 2, 3), false).unwrap(), Root::segment(7, 2, 3));
        assert_eq!(induced_label(3, &Root::segment(6, 4, 5), false).unwrap(), Root::segment(7, 5, 6));
        assert_eq!(induced_label(3, &Root::segment(6, 3, 4), true).unwrap(), Root::segment(7, 3, 5));
    }
}


#[cfg(test)]
mod sweep {
    use super::*;

    fn all_twisted(n: usize) -> Vec<TwistedClass> {
        let mut out = Vec::new();
        for q in DynkinQuiver::all_type_a(2 * n) {
            for side in [Side::Less, Side::Greater] {
                out.push(TwistedClass::from_quiver(&q, side).unwrap());
            }
        }
        out
    }

    #[test]
    fn point_is_the_image_of_surgery() {
        for (n, size) in [(1, 4), (2, 16), (3, 64)] {
            let point = twisted_cluster_point(n);
            assert_eq!(point.len(), size);
            let images: BTreeSet<Word> = all_twisted(n).iter().map(|t| t.class().word().to_vec()).collect();
            let members: BTreeSet<Word> = point.classes().iter().map(|c| c.word().to_vec()).collect();
            assert_eq!(images, members);
            for c in point.classes() {
                TwistedClass::identify(c).unwrap();
            }
            for tc in twisted_coxeter_elements(n) {
                assert!(point.contains(&class_from_twisted_coxeter(n, &tc).unwrap()));
            }
        }
    }

    #[test]
    fn restricted_pattern_matches_situation() {
        for n in 1..=3 {
            for t in all_twisted(n) {
                assert_eq!(restricted_pattern(n, t.class().word()), Some(t.situation()));
            }
        }
    }

    #[test]
    fn coordinates_labels_and_regions() {
        for n in 1..=3 {
            for t in all_twisted(n) {
                let tq = assign_coordinates(&t).unwrap();
                let q = tq.quiver();
                assert_eq!(label_twisted(&tq).unwrap(), q.roots());
                let prop = propagate_positions(q, n).unwrap();
                let delta = q.pos(0) - prop[0];
                assert!((0..q.len()).all(|v| prop[v] + delta == q.pos(v)));
                assert!(check_twisted_additive(&tq), "{:?}", twisted_additive_violation(&tq));
                let kinds = classify_vertices(&tq).unwrap();
                let g = crate::arquiver::gamma_q(t.parent());
                let case = t.situation();
                let centre: BTreeSet<usize> =
                    if case == 1 || case == 4 { [n, n + 1].into() } else { [n + 1, n + 2].into() };
                for v in 0..q.len() {
                    let r = q.root(v);
                    if kinds[v] == VertexKind::CentralInduced {
                        assert!(centre.is_subset(&r.support()), "{r} in case {case}");
                    }
                    if !tq.is_induced(v) {
                        continue;
                    }
                    let parent_root = g.roots()[g.vertex_at(iota_minus(n, q.residue(v)), q.pos(v)).unwrap()].clone();
                    assert_eq!(&induced_label(n, &parent_root, kinds[v].is_central()).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn star_components_follow_the_case() {
        for n in 1..=3 {
            for t in all_twisted(n) {
                let tq = assign_coordinates(&t).unwrap();
                let q = tq.quiver();
                let low = matches!(t.situation(), 1 | 4);
                for v in (0..q.len()).filter(|&v| !tq.is_induced(v)) {
                    let (a, b) = q.root(v).as_segment().unwrap();
                    let upward = q.predecessors(v).iter().chain(q.successors(v).iter()).any(|&u| {
                        let (x, y) = if q.has_arrow(u, v) { (u, v) } else { (v, u) };
                        q.residue(x) == q.residue(y) + 1
                    });
                    if upward {
                        assert_eq!(b, if low { n } else { n + 1 });
                    } else {
                        assert_eq!(a, if low { n + 1 } else { n + 2 });
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_on_coordinates() {
        for n in 1..=3 {
            for t in all_twisted(n) {
                let tq = assign_coordinates(&t).unwrap();
                for i in t.class().sinks() {
                    let r = reflect_twisted(&tq, i).unwrap();
                    let next = TwistedClass::identify(&t.class().reflect_right(i)).unwrap();
                    let fresh = assign_coordinates(&next).unwrap();
                    assert!(r.snapshot().eq_up_to_shift(&fresh.quiver().snapshot()), "n={n} i={i}");
                }
            }
        }
    }
}
