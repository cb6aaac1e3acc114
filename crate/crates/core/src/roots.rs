//! Simply-laced Dynkin diagrams, their positive roots, simple reflections
//! and diagram automorphisms.
//!
//! Indices are 1-based throughout. A root is stored as its dense vector of
//! coefficients in the basis of simple roots.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// A word in the simple reflections, letters are 1-based indices.
pub type Word = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A,
    D,
    E,
}

/// A simply-laced Dynkin diagram given by its edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    kind: DynkinType,
    rank: usize,
    adj: Vec<bool>,
}

impl DynkinDiagram {
    fn from_edges(kind: DynkinType, rank: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![false; rank * rank];
        for &(i, j) in edges {
            adj[(i - 1) * rank + (j - 1)] = true;
            adj[(j - 1) * rank + (i - 1)] = true;
        }
        DynkinDiagram { kind, rank, adj }
    }

    /// Type A_n: the path 1 - 2 - ... - n.
    pub fn a(n: usize) -> Self {
        assert!(n >= 1, "A_n needs n >= 1");
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_edges(DynkinType::A, n, &edges)
    }

    /// Type D_n: the path 1 - ... - (n-1) with n attached to n-2.
    pub fn d(n: usize) -> Self {
        assert!(n >= 4, "D_n needs n >= 4");
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 2, n));
        Self::from_edges(DynkinType::D, n, &edges)
    }

    /// Type D_4 drawn as a star with centre 4 and leaves 1, 2, 3, the
    /// labelling on which triality acts by 1 -> 2 -> 3 -> 1.
    pub fn d4_star() -> Self {
        Self::from_edges(DynkinType::D, 4, &[(1, 4), (2, 4), (3, 4)])
    }

    /// Type E_6: the path 1 - 2 - 3 - 4 - 5 with 6 attached to 3.
    pub fn e6() -> Self {
        Self::from_edges(DynkinType::E, 6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[(i - 1) * self.rank + (j - 1)]
    }

    /// Letters that do not commute: equal or adjacent.
    pub fn linked(&self, i: usize, j: usize) -> bool {
        i == j || self.adjacent(i, j)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (1..=self.rank).filter(|&j| self.adjacent(i, j)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::UnknownIndex { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    pub fn check_word(&self, w: &[usize]) -> Result<()> {
        w.iter().try_for_each(|&i| self.check_index(i))
    }

    /// The involution `i -> i*` with `w0(alpha_i) = -alpha_{i*}`.
    pub fn star(&self, i: usize) -> usize {
        match self.kind {
            DynkinType::A => self.rank + 1 - i,
            DynkinType::D => {
                let n = self.rank;
                if n % 2 == 1 && self.adjacent(n - 2, n) && (i == n - 1 || i == n) {
                    2 * n - 1 - i
                } else {
                    i
                }
            }
            DynkinType::E => match i {
                1 => 5,
                2 => 4,
                4 => 2,
                5 => 1,
                other => other,
            },
        }
    }

    /// The Coxeter number, which equals the dual Coxeter number here.
    pub fn coxeter_number(&self) -> usize {
        match self.kind {
            DynkinType::A => self.rank + 1,
            DynkinType::D => 2 * self.rank - 2,
            DynkinType::E => 12,
        }
    }

    /// Length of the longest element, that is the number of positive roots.
    pub fn longest_length(&self) -> usize {
        let n = self.rank;
        match self.kind {
            DynkinType::A => n * (n + 1) / 2,
            DynkinType::D => n * (n - 1),
            DynkinType::E => 36,
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        };
        write!(f, "{k}{}", self.rank)
    }
}

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    /// The type A root `alpha_a + ... + alpha_b`, written `[a,b]`.
    pub fn segment(rank: usize, a: usize, b: usize) -> Self {
        let mut v = vec![0; rank];
        for c in &mut v[a - 1..b] {
            *c = 1;
        }
        Root(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_simple(&self) -> bool {
        self.0.iter().all(|&c| c == 0 || c == 1) && self.height() == 1
    }

    /// Support as a sorted set of indices.
    pub fn support(&self) -> BTreeSet<usize> {
        (1..=self.rank()).filter(|&i| self.coeff(i) != 0).collect()
    }

    /// `Some((a, b))` when the root is `alpha_a + ... + alpha_b`.
    pub fn as_segment(&self) -> Option<(usize, usize)> {
        let a = self.0.iter().position(|&c| c != 0)? + 1;
        let b = self.0.iter().rposition(|&c| c != 0)? + 1;
        if self.0[a - 1..b].iter().all(|&c| c == 1) {
            Some((a, b))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_segment() {
            Some((a, b)) if a == b => write!(f, "[{a}]"),
            Some((a, b)) => write!(f, "[{a},{b}]"),
            None => {
                let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// `<beta, alpha_i^vee> = 2 beta_i - sum over neighbours j of beta_j`.
pub fn pairing(d: &DynkinDiagram, beta: &Root, i: usize) -> i32 {
    2 * beta.coeff(i) - d.neighbors(i).iter().map(|&j| beta.coeff(j)).sum::<i32>()
}

/// The simple reflection `s_i` applied to `beta`.
pub fn reflect(d: &DynkinDiagram, i: usize, beta: &Root) -> Root {
    let mut v = beta.0.clone();
    v[i - 1] -= pairing(d, beta, i);
    Root(v)
}

/// `beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})` for every k.
pub fn roots_of_word(d: &DynkinDiagram, w: &[usize]) -> Result<Vec<Root>> {
    d.check_word(w)?;
    Ok((0..w.len())
        .map(|k| {
            let mut beta = Root::simple(d.rank(), w[k]);
            for &i in w[..k].iter().rev() {
                beta = reflect(d, i, &beta);
            }
            beta
        })
        .collect())
}

/// A word is reduced when its roots are positive and pairwise distinct.
pub fn is_reduced(d: &DynkinDiagram, w: &[usize]) -> Result<bool> {
    let roots = roots_of_word(d, w)?;
    let mut seen = BTreeSet::new();
    Ok(roots.iter().all(|r| r.is_positive() && seen.insert(r.clone())))
}

/// Checks that `w` is a reduced word of the longest element.
pub fn check_longest(d: &DynkinDiagram, w: &[usize]) -> Result<()> {
    if !is_reduced(d, w)? {
        return Err(Error::NotReduced(w.to_vec()));
    }
    if w.len() != d.longest_length() {
        return Err(Error::NotLongest {
            word: w.to_vec(),
            len: w.len(),
            expected: d.longest_length(),
        });
    }
    Ok(())
}

/// All positive roots, closed up from the simple roots under reflections.
pub fn positive_roots(d: &DynkinDiagram) -> Vec<Root> {
    let n = d.rank();
    let mut found: BTreeSet<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut frontier: Vec<Root> = found.iter().cloned().collect();
    while let Some(beta) = frontier.pop() {
        for i in 1..=n {
            let r = reflect(d, i, &beta);
            if r.is_positive() && found.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    found.into_iter().collect()
}

/// The positive roots with a fixed global index. In type A the order is
/// lexicographic on segments `[a,b]`, otherwise by height and coefficients.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let mut roots = positive_roots(diagram);
        if diagram.kind() == DynkinType::A {
            roots.sort_by_key(|r| r.as_segment());
        } else {
            roots.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| y.cmp(x)));
        }
        let index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        RootSystem { diagram: diagram.clone(), roots, index }
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

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }
}

/// A diagram automorphism, stored as the image of each index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    /// Validates that `perm` (1-based images) is a bijection preserving edges.
    pub fn new(d: &DynkinDiagram, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != d.rank() {
            return Err(Error::BadAutomorphism(format!("expected {} images", d.rank())));
        }
        let distinct: BTreeSet<_> = perm.iter().copied().collect();
        if distinct.len() != perm.len() || perm.iter().any(|&p| p == 0 || p > d.rank()) {
            return Err(Error::BadAutomorphism("not a permutation".into()));
        }
        for (i, j) in d.edges() {
            if !d.adjacent(perm[i - 1], perm[j - 1]) {
                return Err(Error::BadAutomorphism(format!("edge {i}-{j} is not preserved")));
            }
        }
        Ok(Automorphism { perm })
    }

    pub fn identity(rank: usize) -> Self {
        Automorphism { perm: (1..=rank).collect() }
    }

    /// `i -> m + 1 - i` on A_m.
    pub fn flip_a(m: usize) -> Self {
        Automorphism { perm: (1..=m).map(|i| m + 1 - i).collect() }
    }

    /// The order two automorphism of E_6: 1 <-> 5, 2 <-> 4.
    pub fn e6_flip() -> Self {
        Automorphism { perm: vec![5, 4, 3, 2, 1, 6] }
    }

    /// Triality on [`DynkinDiagram::d4_star`]: 1 -> 2 -> 3 -> 1, 4 fixed.
    pub fn d4_triality() -> Self {
        Automorphism { perm: vec![2, 3, 1, 4] }
    }

    /// The swap of the two short legs of D_n in the standard labelling.
    pub fn d_swap(n: usize) -> Self {
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.swap(n - 2, n - 1);
        Automorphism { perm }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    pub fn power(&self, k: usize) -> Self {
        let mut perm: Vec<usize> = (1..=self.rank()).collect();
        for _ in 0..k {
            perm = perm.iter().map(|&i| self.apply(i)).collect();
        }
        Automorphism { perm }
    }

    pub fn order(&self) -> usize {
        let id = Self::identity(self.rank());
        (1..).find(|&k| self.power(k) == id).expect("finite order")
    }

    /// Orbits of indices, each sorted, ordered by smallest representative.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank()];
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            if seen[i - 1] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut j = i;
            while orbit.insert(j) {
                seen[j - 1] = true;
                j = self.apply(j);
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    /// Position of the orbit of `i` in [`Automorphism::orbits`].
    pub fn orbit_index(&self, i: usize) -> usize {
        self.orbits()
            .iter()
            .position(|o| o.contains(&i))
            .expect("every index lies in an orbit")
    }

    /// Applies the `k`-th power letterwise to a word.
    pub fn apply_word(&self, k: usize, w: &[usize]) -> Word {
        let p = self.power(k);
        w.iter().map(|&i| p.apply(i)).collect()
    }
}

/// Parses a word written with spaces, commas or as a string of digits.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    let tokens: Vec<&str> = if s.contains(|c: char| c == ' ' || c == ',') {
        s.split(|c: char| c == ' ' || c == ',').filter(|t| !t.is_empty()).collect()
    } else {
        s.split("").filter(|t| !t.is_empty()).collect()
    };
    tokens
        .iter()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
        .collect()
}

pub fn format_word(w: &[usize]) -> String {
    w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_matches_definition() {
        let d = DynkinDiagram::a(3);
        let b = reflect(&d, 2, &Root::simple(3, 1));
        assert_eq!(b, Root::segment(3, 1, 2));
        assert_eq!(reflect(&d, 2, &Root::simple(3, 2)), Root(vec![0, -1, 0]));
    }

    #[test]
    fn root_counts_match_longest_length() {
        for d in [
            DynkinDiagram::a(1),
            DynkinDiagram::a(5),
            DynkinDiagram::d(4),
            DynkinDiagram::d(5),
            DynkinDiagram::d4_star(),
            DynkinDiagram::e6(),
        ] {
            assert_eq!(positive_roots(&d).len(), d.longest_length(), "{d}");
        }
    }

    #[test]
    fn words_of_roots_and_reducedness() {
        let d = DynkinDiagram::a(2);
        let r = roots_of_word(&d, &[1, 2, 1]).unwrap();
        assert_eq!(r, vec![Root::segment(2, 1, 1), Root::segment(2, 1, 2), Root::segment(2, 2, 2)]);
        assert!(is_reduced(&d, &[1, 2, 1]).unwrap());
        assert!(!is_reduced(&d, &[1, 1]).unwrap());
        assert!(check_longest(&d, &[1, 2]).is_err());
        assert!(roots_of_word(&d, &[3]).is_err());
    }

    #[test]
    fn automorphisms() {
        let d = DynkinDiagram::d4_star();
        let t = Automorphism::d4_triality();
        assert_eq!(t.apply_word(2, &[2, 1]), vec![1, 3]);
        assert_eq!(t.order(), 3);
        assert_eq!(t.orbits(), vec![vec![1, 2, 3], vec![4]]);
        assert!(Automorphism::new(&d, vec![2, 3, 1, 4]).is_ok());
        assert!(Automorphism::new(&DynkinDiagram::a(3), vec![2, 1, 3]).is_err());
        assert!(Automorphism::new(&DynkinDiagram::e6(), Automorphism::e6_flip().perm).is_ok());
        assert_eq!(Automorphism::flip_a(5).orbits(), vec![vec![1, 5], vec![2, 4], vec![3]]);
    }

    #[test]
    fn star_involution_is_minus_w0() {
        // w0 = -* on simple roots; check via a reduced word of w0.
        for (d, w) in [
            (DynkinDiagram::a(4), vec![1, 2, 1, 3, 2, 1, 4, 3, 2, 1]),
            (DynkinDiagram::d(4), vec![1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4]),
        ] {
            check_longest(&d, &w).unwrap();
            for i in 1..=d.rank() {
                let mut beta = Root::simple(d.rank(), i);
                for &j in w.iter().rev() {
                    beta = reflect(&d, j, &beta);
                }
                assert_eq!(beta, Root::simple(d.rank(), d.star(i)).scale(-1));
            }
        }
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_word("1 2 3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_word("123").unwrap(), vec![1, 2, 3]);
        assert!(parse_word("1 x").is_err());
        assert_eq!(format_word(&[3, 1]), "3 1");
        assert_eq!(Root::segment(5, 2, 4).to_string(), "[2,4]");
        assert_eq!(Root::segment(5, 2, 2).to_string(), "[2]");
    }
}
