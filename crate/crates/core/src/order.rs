//! Orders on sequences of positive roots attached to a commutation class:
//! the bi-lexicographic order of one word, its class version, simple and
//! minimal sequences, generalized distance, radius and socle.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::arquiver::ArQuiver;
use crate::error::{Error, Result};
use crate::roots::{roots_of_word, Root, RootSystem};
use crate::words::CommutationClass;

/// A finitely supported multiplicity function on positive roots, keyed by
/// the index of the root in a [`RootSystem`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSequence(BTreeMap<usize, u32>);

impl RootSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(index: usize) -> Self {
        Self::from_indices(&[index])
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut m = BTreeMap::new();
        for &i in indices {
            *m.entry(i).or_insert(0) += 1;
        }
        RootSequence(m)
    }

    pub fn get(&self, index: usize) -> u32 {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn entries(&self) -> &BTreeMap<usize, u32> {
        &self.0
    }

    /// `|m|`, the total multiplicity.
    pub fn size(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_basic(&self) -> bool {
        self.0.values().all(|&k| k <= 1)
    }

    pub fn is_pair(&self) -> bool {
        self.is_basic() && self.size() == 2
    }

    pub fn weight(&self, rs: &RootSystem) -> Root {
        let mut w = Root::zero(rs.diagram().rank());
        for (&i, &k) in &self.0 {
            w = w.add(&rs.root(i).scale(k as i32));
        }
        w
    }

    fn push(&mut self, index: usize) {
        *self.0.entry(index).or_insert(0) += 1;
    }

    fn pop(&mut self, index: usize) {
        let e = self.0.get_mut(&index).expect("present");
        *e -= 1;
        if *e == 0 {
            self.0.remove(&index);
        }
    }
}

/// Every sequence of positive roots with weight `v`.
pub fn sequences_of_weight(rs: &RootSystem, v: &Root) -> Vec<RootSequence> {
    fn go(rs: &RootSystem, rest: &Root, from: usize, cur: &mut RootSequence, out: &mut Vec<RootSequence>) {
        if rest.0.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for k in from..rs.len() {
            let next = rest.sub(rs.root(k));
            if next.0.iter().all(|&x| x >= 0) {
                cur.push(k);
                go(rs, &next, k, cur, out);
                cur.pop(k);
            }
        }
    }
    let mut out = Vec::new();
    if v.0.iter().any(|&x| x < 0) {
        return out;
    }
    go(rs, v, 0, &mut RootSequence::new(), &mut out);
    out.sort();
    out
}

/// `m' <_b m` for the total order given by `rank` (root index to position
/// in a word): the two sequences agree outside an interval whose two ends
/// both drop.
pub fn lt_b_ranked(m_prime: &RootSequence, m: &RootSequence, rank: &[usize]) -> bool {
    let diff = disagreement(m_prime, m);
    let (Some(&first), Some(&last)) =
        (diff.iter().min_by_key(|&&t| rank[t]), diff.iter().max_by_key(|&&t| rank[t]))
    else {
        return false;
    };
    m_prime.get(first) < m.get(first) && m_prime.get(last) < m.get(last)
}

fn disagreement(a: &RootSequence, b: &RootSequence) -> Vec<usize> {
    let mut keys: Vec<usize> = a.support().chain(b.support()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().filter(|&t| a.get(t) != b.get(t)).collect()
}

/// The data of a class needed to compare sequences.
pub struct OrderContext {
    class: CommutationClass,
    roots: RootSystem,
    quiver: ArQuiver,
    /// `before[a]` holds the indices of roots strictly preceding root `a`.
    before: Vec<FixedBitSet>,
    simple_pairs: RefCell<HashMap<RootSequence, bool>>,
    weight_cache: RefCell<HashMap<Root, Vec<RootSequence>>>,
    gdist_cache: RefCell<HashMap<RootSequence, usize>>,
}

impl OrderContext {
    pub fn new(class: &CommutationClass) -> Self {
        let roots = RootSystem::new(class.diagram());
        let quiver = ArQuiver::from_class(class);
        let reach = quiver.reachability();
        let to_global: Vec<usize> =
            (0..quiver.len()).map(|v| roots.index_of(quiver.root(v)).expect("positive root")).collect();
        let mut before = vec![FixedBitSet::with_capacity(roots.len()); roots.len()];
        for b in 0..quiver.len() {
            for a in reach[b].ones() {
                before[to_global[b]].insert(to_global[a]);
            }
        }
        OrderContext {
            class: class.clone(),
            roots,
            quiver,
            before,
            simple_pairs: RefCell::new(HashMap::new()),
            weight_cache: RefCell::new(HashMap::new()),
            gdist_cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn class(&self) -> &CommutationClass {
        &self.class
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn quiver(&self) -> &ArQuiver {
        &self.quiver
    }

    pub fn index(&self, r: &Root) -> Result<usize> {
        self.roots.index_of(r).ok_or_else(|| Error::Undefined(format!("{r} is not a positive root")))
    }

    pub fn sequence(&self, roots: &[Root]) -> Result<RootSequence> {
        let idx = roots.iter().map(|r| self.index(r)).collect::<Result<Vec<_>>>()?;
        Ok(RootSequence::from_indices(&idx))
    }

    /// Convex order of the class: `a` precedes `b` in every member word.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.before[b].contains(a)
    }

    /// Position of each root in the word `w`.
    pub fn rank_in_word(&self, w: &[usize]) -> Result<Vec<usize>> {
        let mut rank = vec![0; self.roots.len()];
        for (k, r) in roots_of_word(self.roots.diagram(), w)?.iter().enumerate() {
            rank[self.index(r)?] = k;
        }
        Ok(rank)
    }

    pub fn lt_b_word(&self, m_prime: &RootSequence, m: &RootSequence, w: &[usize]) -> Result<bool> {
        if !self.class.contains(w) {
            return Err(Error::NotInPoint("word outside the class".into()));
        }
        Ok(lt_b_ranked(m_prime, m, &self.rank_in_word(w)?))
    }

    /// `m' <_b m` in every member word: in every linear extension the first
    /// and the last disagreement must drop, so every minimal and every
    /// maximal element of the disagreement set must drop.
    pub fn prec_b(&self, m_prime: &RootSequence, m: &RootSequence) -> bool {
        let diff = disagreement(m_prime, m);
        if diff.is_empty() {
            return false;
        }
        diff.iter().all(|&t| {
            let minimal = !diff.iter().any(|&u| self.precedes(u, t));
            let maximal = !diff.iter().any(|&u| self.precedes(t, u));
            !(minimal || maximal) || m_prime.get(t) < m.get(t)
        })
    }

    pub fn sequences_of_weight(&self, v: &Root) -> Vec<RootSequence> {
        if let Some(s) = self.weight_cache.borrow().get(v) {
            return s.clone();
        }
        let s = sequences_of_weight(&self.roots, v);
        self.weight_cache.borrow_mut().insert(v.clone(), s.clone());
        s
    }

    fn is_simple_pair(&self, p: &RootSequence) -> bool {
        if let Some(&b) = self.simple_pairs.borrow().get(p) {
            return b;
        }
        let w = p.weight(&self.roots);
        let simple = !self.sequences_of_weight(&w).iter().any(|m| self.prec_b(m, p));
        self.simple_pairs.borrow_mut().insert(p.clone(), simple);
        simple
    }

    /// A pair is simple when no sequence of its weight lies below it; a
    /// general sequence when it is supported on one root or all pairs drawn
    /// from its support are simple.
    pub fn is_simple(&self, m: &RootSequence) -> bool {
        if m.is_pair() {
            return self.is_simple_pair(m);
        }
        let support: Vec<usize> = m.support().collect();
        if support.len() <= 1 {
            return true;
        }
        for (k, &a) in support.iter().enumerate() {
            for &b in &support[k + 1..] {
                if !self.is_simple_pair(&RootSequence::from_indices(&[a, b])) {
                    return false;
                }
            }
        }
        true
    }

    /// Sequences `m` of the weight of the simple sequence `s` with
    /// `s < m` and nothing strictly in between.
    pub fn minimal_sequences(&self, s: &RootSequence) -> Result<Vec<RootSequence>> {
        if !self.is_simple(s) {
            return Err(Error::Undefined("minimal sequences of a non-simple sequence".into()));
        }
        let above: Vec<RootSequence> = self
            .sequences_of_weight(&s.weight(&self.roots))
            .into_iter()
            .filter(|m| self.prec_b(s, m))
            .collect();
        Ok(above
            .iter()
            .filter(|m| !above.iter().any(|x| self.prec_b(x, m)))
            .cloned()
            .collect())
    }

    /// Minimal sequences of `(gamma)` that are pairs, as `(earlier, later)`
    /// in the canonical word of the class.
    pub fn minimal_pairs(&self, gamma: &Root) -> Result<Vec<(Root, Root)>> {
        let g = RootSequence::single(self.index(gamma)?);
        let rank = self.rank_in_word(self.class.word())?;
        let mut out: Vec<(Root, Root)> = self
            .minimal_sequences(&g)?
            .into_iter()
            .filter(RootSequence::is_pair)
            .map(|p| {
                let mut s: Vec<usize> = p.support().collect();
                s.sort_by_key(|&t| rank[t]);
                (self.roots.root(s[0]).clone(), self.roots.root(s[1]).clone())
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Length of the longest chain of non-simple sequences of the same
    /// weight ending at `m`; zero for simple `m`.
    pub fn gdist(&self, m: &RootSequence) -> usize {
        if let Some(&g) = self.gdist_cache.borrow().get(m) {
            return g;
        }
        if self.is_simple(m) {
            return 0;
        }
        let candidates: Vec<RootSequence> = self
            .sequences_of_weight(&m.weight(&self.roots))
            .into_iter()
            .filter(|x| !self.is_simple(x))
            .collect();
        let mut memo: HashMap<usize, usize> = HashMap::new();
        fn longest(
            ctx: &OrderContext,
            k: usize,
            cands: &[RootSequence],
            memo: &mut HashMap<usize, usize>,
        ) -> usize {
            if let Some(&x) = memo.get(&k) {
                return x;
            }
            let best = (0..cands.len())
                .filter(|&j| ctx.prec_b(&cands[j], &cands[k]))
                .map(|j| longest(ctx, j, cands, memo))
                .max()
                .unwrap_or(0);
            memo.insert(k, best + 1);
            best + 1
        }
        let k = candidates.iter().position(|x| x == m).expect("m is among its weight");
        let g = longest(self, k, &candidates, &mut memo);
        self.gdist_cache
            .borrow_mut()
            .extend(memo.into_iter().map(|(j, d)| (candidates[j].clone(), d)));
        g
    }

    /// The largest generalized distance of a pair above `(gamma)`.
    pub fn rds(&self, gamma: &Root) -> Result<usize> {
        if gamma.is_simple() {
            return Err(Error::Undefined(format!("radius of the simple root {gamma}")));
        }
        let g = RootSequence::single(self.index(gamma)?);
        Ok(self
            .sequences_of_weight(gamma)
            .iter()
            .filter(|p| p.is_pair() && self.prec_b(&g, p))
            .map(|p| self.gdist(p))
            .max()
            .unwrap_or(0))
    }

    /// The unique simple sequence of the same weight below or equal to `p`.
    pub fn socle(&self, p: &RootSequence) -> Result<Option<RootSequence>> {
        let mut found: Vec<RootSequence> = self
            .sequences_of_weight(&p.weight(&self.roots))
            .into_iter()
            .filter(|s| (s == p || self.prec_b(s, p)) && self.is_simple(s))
            .collect();
        match found.len() {
            0 => Ok(None),
            1 => Ok(found.pop()),
            k => Err(Error::Inconsistent(format!("{k} socle candidates"))),
        }
    }

    pub fn display<'a>(&'a self, m: &'a RootSequence) -> SequenceDisplay<'a> {
        SequenceDisplay { ctx: self, seq: m }
    }
}

/// Prints a sequence as its roots in the order of the canonical word.
pub struct SequenceDisplay<'a> {
    ctx: &'a OrderContext,
    seq: &'a RootSequence,
}

impl fmt::Display for SequenceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.ctx.rank_in_word(self.ctx.class.word()).map_err(|_| fmt::Error)?;
        let mut items: Vec<(usize, usize, u32)> = self.seq.entries().iter().map(|(&i, &k)| (rank[i], i, k)).collect();
        items.sort();
        let parts: Vec<String> = items
            .into_iter()
            .map(|(_, i, k)| {
                let r = self.ctx.roots.root(i);
                if k == 1 {
                    r.to_string()
                } else {
                    format!("{k}{r}")
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::DynkinQuiver;
    use crate::roots::DynkinDiagram;
    use crate::twist::{Side, TwistedClass};

    /// `m' < m` in every member word, by listing the words.
    fn prec_b_brute(ctx: &OrderContext, a: &RootSequence, b: &RootSequence) -> bool {
        ctx.class().member_words(usize::MAX).iter().all(|w| ctx.lt_b_word(a, b, w).unwrap())
    }

    fn a7_example() -> OrderContext {
        let q = DynkinQuiver::type_a(6, "><>><").unwrap();
        OrderContext::new(TwistedClass::from_quiver(&q, Side::Less).unwrap().class())
    }

    #[test]
    fn sequence_counts() {
        let a2 = RootSystem::new(&DynkinDiagram::a(2));
        assert_eq!(sequences_of_weight(&a2, &Root::simple(2, 1)).len(), 1);
        assert_eq!(sequences_of_weight(&a2, &Root::segment(2, 1, 2)).len(), 2);
        let a3 = RootSystem::new(&DynkinDiagram::a(3));
        assert_eq!(sequences_of_weight(&a3, &Root::segment(3, 1, 3)).len(), 4);
    }

    #[test]
    fn lt_b_truth_table() {
        let rank = [0, 1, 2];
        let s = RootSequence::from_indices;
        assert!(!lt_b_ranked(&s(&[0, 2]), &s(&[0, 2]), &rank));
        assert!(lt_b_ranked(&s(&[1]), &s(&[0, 2]), &rank));
        assert!(!lt_b_ranked(&s(&[0, 2]), &s(&[1]), &rank));
        assert!(lt_b_ranked(&s(&[0]), &s(&[0, 1]), &rank));
        assert!(!lt_b_ranked(&s(&[0, 1]), &s(&[1, 2]), &rank));
    }

    #[test]
    fn lt_b_on_a_word() {
        let d = DynkinDiagram::a(5);
        let c = CommutationClass::new(&d, &[1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1]).unwrap();
        let ctx = OrderContext::new(&c);
        let w = c.member_words(1).remove(0);
        let a1 = Root::simple(5, 1);
        let a2 = Root::simple(5, 2);
        let a12 = Root::segment(5, 1, 2);
        let rank = ctx.rank_in_word(&w).unwrap();
        let (r1, r12, r2) = (rank[ctx.index(&a1).unwrap()], rank[ctx.index(&a12).unwrap()], rank[ctx.index(&a2).unwrap()]);
        assert!(r1 < r12 && r12 < r2);
        let single = ctx.sequence(&[a12]).unwrap();
        let pair = ctx.sequence(&[a1, a2]).unwrap();
        assert!(ctx.lt_b_word(&single, &pair, &w).unwrap());
    }

    #[test]
    fn poset_criterion_matches_brute_force() {
        let mut classes: Vec<CommutationClass> = crate::words::ClusterPoint::generate(
            &DynkinQuiver::type_a(3, "<<").unwrap().adapted_class(),
        )
        .classes()
        .to_vec();
        let q = DynkinQuiver::type_a(2, "<").unwrap();
        classes.push(TwistedClass::from_quiver(&q, Side::Less).unwrap().class().clone());
        for c in &classes {
            let ctx = OrderContext::new(c);
            for g in ctx.roots().roots().to_vec() {
                let seqs = ctx.sequences_of_weight(&g);
                for a in &seqs {
                    for b in &seqs {
                        assert_eq!(ctx.prec_b(a, b), prec_b_brute(&ctx, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn a7_chains() {
        let ctx = a7_example();
        let s = |a, b| Root::segment(7, a, b);
        let x = ctx.sequence(&[s(3, 5)]).unwrap();
        let y = ctx.sequence(&[s(4, 5), s(3, 3)]).unwrap();
        let z = ctx.sequence(&[s(5, 5), s(3, 4)]).unwrap();
        assert!(ctx.prec_b(&x, &y) && ctx.prec_b(&y, &z) && ctx.prec_b(&x, &z));
        assert!(!ctx.is_simple(&y));
        assert_eq!(ctx.socle(&z).unwrap(), Some(x.clone()));
        let p = ctx.sequence(&[s(1, 7), s(2, 5)]).unwrap();
        let t = ctx.sequence(&[s(4, 7), s(1, 3), s(2, 5)]).unwrap();
        let u = ctx.sequence(&[s(2, 7), s(1, 5)]).unwrap();
        assert!(ctx.prec_b(&p, &t) && ctx.prec_b(&t, &u));
        assert_eq!(ctx.gdist(&u), 2);
        assert!(ctx.minimal_pairs(&s(1, 5)).unwrap().contains(&(s(1, 3), s(4, 5))));
        assert_eq!(ctx.display(&y).to_string(), "([4,5],[3])");
    }

    #[test]
    fn simple_root_has_no_minimal_sequences() {
        let ctx = a7_example();
        assert!(ctx.minimal_pairs(&Root::simple(7, 2)).unwrap().is_empty());
        assert!(ctx.rds(&Root::simple(7, 2)).is_err());
    }

    #[test]
    fn adapted_classes_have_distance_one() {
        for m in [2, 4] {
            for q in DynkinQuiver::all_type_a(m) {
                let ctx = OrderContext::new(&q.adapted_class());
                for g in ctx.roots().roots().to_vec() {
                    if g.is_simple() {
                        continue;
                    }
                    assert_eq!(ctx.rds(&g).unwrap(), 1);
                    for p in ctx.sequences_of_weight(&g).into_iter().filter(RootSequence::is_pair) {
                        assert!(ctx.gdist(&p) <= 1);
                        assert!(ctx.socle(&p).unwrap().is_some());
                    }
                }
            }
        }
    }
}
