//! Commutation classes of reduced words of the longest element, reflection
//! functors and the cluster points they generate.
//!
//! A class is represented by the Cartier-Foata normal form of any of its
//! words: every occurrence gets a depth one larger than the deepest earlier
//! occurrence it does not commute with, and occurrences are sorted by
//! `(depth, letter)`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::roots::{check_longest, Automorphism, DynkinDiagram, Word};

/// Depth of every occurrence in the heap of `w`.
pub fn heap_depths(d: &DynkinDiagram, w: &[usize]) -> Vec<usize> {
    let mut depth = vec![0usize; w.len()];
    for k in 0..w.len() {
        depth[k] = 1 + (0..k)
            .filter(|&j| d.linked(w[j], w[k]))
            .map(|j| depth[j])
            .max()
            .unwrap_or(0);
    }
    depth
}

/// The Cartier-Foata normal form of `w`.
pub fn canonical_form(d: &DynkinDiagram, w: &[usize]) -> Word {
    let depth = heap_depths(d, w);
    let mut occ: Vec<(usize, usize)> = depth.into_iter().zip(w.iter().copied()).collect();
    occ.sort();
    occ.into_iter().map(|(_, i)| i).collect()
}

/// The subsequence of `w` made of the letters in `j`.
pub fn subword_restrict(w: &[usize], j: &BTreeSet<usize>) -> Word {
    w.iter().copied().filter(|i| j.contains(i)).collect()
}

/// A commutation class of reduced words of the longest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommutationClass {
    diagram: DynkinDiagram,
    canonical: Word,
}

impl CommutationClass {
    /// The class of `w`, which must be a reduced word of `w0`.
    pub fn new(d: &DynkinDiagram, w: &[usize]) -> Result<Self> {
        check_longest(d, w)?;
        Ok(CommutationClass { diagram: d.clone(), canonical: canonical_form(d, w) })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    /// The normal form, which is itself a member word.
    pub fn word(&self) -> &[usize] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Whether `w` is a word of this class.
    pub fn contains(&self, w: &[usize]) -> bool {
        w.len() == self.len()
            && w.iter().all(|&i| i >= 1 && i <= self.diagram.rank())
            && canonical_form(&self.diagram, w) == self.canonical
    }

    /// Letters that start some member word.
    pub fn sinks(&self) -> BTreeSet<usize> {
        let depth = heap_depths(&self.diagram, &self.canonical);
        self.canonical.iter().zip(&depth).filter(|(_, &dp)| dp == 1).map(|(&i, _)| i).collect()
    }

    /// Letters that end some member word.
    pub fn sources(&self) -> BTreeSet<usize> {
        let w = &self.canonical;
        (0..w.len())
            .filter(|&k| (k + 1..w.len()).all(|j| !self.diagram.linked(w[j], w[k])))
            .map(|k| w[k])
            .collect()
    }

    /// A member word starting with `i`, when `i` is a sink.
    pub fn word_starting_with(&self, i: usize) -> Option<Word> {
        let w = &self.canonical;
        let k = w.iter().position(|&x| x == i)?;
        if (0..k).any(|j| self.diagram.linked(w[j], i)) {
            return None;
        }
        let mut out = vec![i];
        out.extend(w[..k].iter().chain(&w[k + 1..]));
        Some(out)
    }

    /// A member word ending with `i`, when `i` is a source.
    pub fn word_ending_with(&self, i: usize) -> Option<Word> {
        let w = &self.canonical;
        let k = w.iter().rposition(|&x| x == i)?;
        if (k + 1..w.len()).any(|j| self.diagram.linked(w[j], i)) {
            return None;
        }
        let mut out: Word = w[..k].iter().chain(&w[k + 1..]).copied().collect();
        out.push(i);
        Some(out)
    }

    fn from_word_unchecked(d: &DynkinDiagram, w: &[usize]) -> Self {
        CommutationClass { diagram: d.clone(), canonical: canonical_form(d, w) }
    }

    /// `[i i_2 ... i_N] -> [i_2 ... i_N i*]` for a sink `i`, identity otherwise.
    pub fn reflect_right(&self, i: usize) -> Self {
        match self.try_reflect_right(i) {
            Ok(c) => c,
            Err(_) => self.clone(),
        }
    }

    /// `[i_1 ... i_{N-1} i] -> [i* i_1 ... i_{N-1}]` for a source `i`, identity otherwise.
    pub fn reflect_left(&self, i: usize) -> Self {
        match self.try_reflect_left(i) {
            Ok(c) => c,
            Err(_) => self.clone(),
        }
    }

    pub fn try_reflect_right(&self, i: usize) -> Result<Self> {
        let w = self.word_starting_with(i).ok_or(Error::NotSink(i))?;
        let mut out = w[1..].to_vec();
        out.push(self.diagram.star(i));
        Ok(Self::from_word_unchecked(&self.diagram, &out))
    }

    pub fn try_reflect_left(&self, i: usize) -> Result<Self> {
        let w = self.word_ending_with(i).ok_or(Error::NotSource(i))?;
        let mut out = vec![self.diagram.star(i)];
        out.extend(&w[..w.len() - 1]);
        Ok(Self::from_word_unchecked(&self.diagram, &out))
    }

    /// Member words, in lexicographic order, stopping after `limit` words.
    pub fn member_words(&self, limit: usize) -> Vec<Word> {
        let w = &self.canonical;
        let n = w.len();
        // preds[k]: earlier occurrences that must precede occurrence k.
        let preds: Vec<Vec<usize>> = (0..n)
            .map(|k| (0..k).filter(|&j| self.diagram.linked(w[j], w[k])).collect())
            .collect();
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut cur = Vec::with_capacity(n);
        fn rec(
            w: &[usize],
            preds: &[Vec<usize>],
            used: &mut Vec<bool>,
            cur: &mut Word,
            out: &mut Vec<Word>,
            limit: usize,
        ) {
            if out.len() >= limit {
                return;
            }
            if cur.len() == w.len() {
                out.push(cur.clone());
                return;
            }
            let mut avail: Vec<usize> = (0..w.len())
                .filter(|&k| !used[k] && preds[k].iter().all(|&j| used[j]))
                .collect();
            avail.sort_by_key(|&k| w[k]);
            for k in avail {
                used[k] = true;
                cur.push(w[k]);
                rec(w, preds, used, cur, out, limit);
                cur.pop();
                used[k] = false;
            }
        }
        rec(w, &preds, &mut used, &mut cur, &mut out, limit);
        out
    }

    /// Number of letters in each orbit of `sigma`, orbits ordered by their
    /// smallest element. `sigma` must map every `i*` into the orbit of `i`.
    pub fn coxeter_composition(&self, sigma: &Automorphism) -> Result<Vec<usize>> {
        check_star_compatible(&self.diagram, sigma)?;
        let orbits = sigma.orbits();
        let mut counts = vec![0; orbits.len()];
        for &i in &self.canonical {
            counts[sigma.orbit_index(i)] += 1;
        }
        Ok(counts)
    }
}

fn check_star_compatible(d: &DynkinDiagram, sigma: &Automorphism) -> Result<()> {
    if sigma.rank() != d.rank() {
        return Err(Error::BadAutomorphism("rank mismatch".into()));
    }
    for i in 1..=d.rank() {
        if sigma.orbit_index(i) != sigma.orbit_index(d.star(i)) {
            return Err(Error::BadAutomorphism(format!(
                "{i} and {} lie in different orbits",
                d.star(i)
            )));
        }
    }
    Ok(())
}

/// The closure of a class under both reflection functors, in breadth-first
/// order from the generating class.
#[derive(Clone, Debug)]
pub struct ClusterPoint {
    classes: Vec<CommutationClass>,
    index: HashMap<Word, usize>,
}

impl ClusterPoint {
    pub fn generate(start: &CommutationClass) -> Self {
        let mut classes = vec![start.clone()];
        let mut index = HashMap::from([(start.word().to_vec(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let c = classes[k].clone();
            let right = c.sinks().into_iter().map(|i| c.reflect_right(i));
            let left = c.sources().into_iter().map(|i| c.reflect_left(i));
            for next in right.chain(left).collect::<Vec<_>>() {
                if !index.contains_key(next.word()) {
                    index.insert(next.word().to_vec(), classes.len());
                    queue.push_back(classes.len());
                    classes.push(next);
                }
            }
        }
        ClusterPoint { classes, index }
    }

    pub fn classes(&self) -> &[CommutationClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, c: &CommutationClass) -> bool {
        self.index.get(c.word()).is_some_and(|&k| self.classes[k] == *c)
    }

    /// The composition of the generating class; see [`ClusterPoint::is_foldable`].
    pub fn coxeter_composition(&self, sigma: &Automorphism) -> Result<Vec<usize>> {
        self.classes[0].coxeter_composition(sigma)
    }

    /// Foldable means the composition is constant across orbits.
    pub fn is_foldable(&self, sigma: &Automorphism) -> Result<bool> {
        let c = self.coxeter_composition(sigma)?;
        Ok(c.windows(2).all(|p| p[0] == p[1]))
    }
}
