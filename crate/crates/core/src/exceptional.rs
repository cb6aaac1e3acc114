//! Foldable cluster points of E_6 under its involution and of D_4 under
//! triality and its square.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::roots::{positive_roots, Automorphism, DynkinDiagram, Word};
use crate::words::{canonical_form, ClusterPoint, CommutationClass};

/// A diagram, an automorphism and a sigma-Coxeter word generating a point.
#[derive(Clone, Debug)]
pub struct ExceptionalSeed {
    pub name: &'static str,
    pub diagram: DynkinDiagram,
    pub sigma: Automorphism,
    pub coxeter: Word,
}

impl ExceptionalSeed {
    /// `prod_{k} (c)^{k sigma}` with as many factors as needed to reach the
    /// length of the longest element.
    pub fn generator_word(&self) -> Word {
        let factors = positive_roots(&self.diagram).len() / self.coxeter.len();
        (0..factors).flat_map(|k| self.sigma.apply_word(k, &self.coxeter)).collect()
    }

    pub fn point(&self) -> Result<ClusterPoint> {
        Ok(ClusterPoint::generate(&CommutationClass::new(&self.diagram, &self.generator_word())?))
    }
}

/// E_6 with `1 <-> 5, 2 <-> 4` and the word `1 2 6 3`.
pub fn e6_seed() -> ExceptionalSeed {
    ExceptionalSeed {
        name: "E6",
        diagram: DynkinDiagram::e6(),
        sigma: Automorphism::e6_flip(),
        coxeter: vec![1, 2, 6, 3],
    }
}

/// D_4 (centre 4) with triality or its square and the word `4 1`.
pub fn d4_seeds() -> [ExceptionalSeed; 2] {
    let d = DynkinDiagram::d4_star();
    let t = Automorphism::d4_triality();
    [
        ExceptionalSeed { name: "D4 triality", diagram: d.clone(), sigma: t.clone(), coxeter: vec![4, 1] },
        ExceptionalSeed { name: "D4 triality squared", diagram: d, sigma: t.power(2), coxeter: vec![4, 1] },
    ]
}

pub fn e6_point() -> Result<ClusterPoint> {
    e6_seed().point()
}

pub fn d4_points() -> Result<(ClusterPoint, ClusterPoint)> {
    let [a, b] = d4_seeds();
    Ok((a.point()?, b.point()?))
}

/// Products of one letter from each orbit of `sigma`, in every order,
/// in normal form.
pub fn sigma_coxeter_elements(d: &DynkinDiagram, sigma: &Automorphism) -> Vec<Word> {
    let orbits = sigma.orbits();
    let mut found = BTreeSet::new();
    let mut choice = Vec::new();
    choose(&orbits, &mut choice, &mut |letters| {
        let mut v = letters.to_vec();
        permute(&mut v, 0, &mut |w| {
            found.insert(canonical_form(d, w));
        });
    });
    found.into_iter().collect()
}

fn choose(orbits: &[Vec<usize>], cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let Some((first, rest)) = orbits.split_first() else {
        f(cur);
        return;
    };
    for &i in first {
        cur.push(i);
        choose(rest, cur, f);
        cur.pop();
    }
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for j in k..v.len() {
        v.swap(k, j);
        permute(v, k + 1, f);
        v.swap(k, j);
    }
}

/// Counts and compositions of one appendix point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub name: &'static str,
    pub classes: usize,
    /// Composition of every class; `None` when the classes disagree.
    pub composition: Option<Vec<usize>>,
    pub coxeter_elements: usize,
    /// Distinct classes generated by the sigma-Coxeter elements.
    pub coxeter_classes: usize,
    /// Largest number of reduced words in one class, capped at 2.
    pub max_words_per_class: usize,
}

pub fn report(seed: &ExceptionalSeed) -> Result<PointReport> {
    let point = seed.point()?;
    let comps = point
        .classes()
        .iter()
        .map(|c| c.coxeter_composition(&seed.sigma))
        .collect::<Result<BTreeSet<_>>>()?;
    let elements = sigma_coxeter_elements(&seed.diagram, &seed.sigma);
    let mut coxeter_classes = BTreeSet::new();
    for c in &elements {
        let s = ExceptionalSeed { coxeter: c.clone(), ..seed.clone() };
        if let Ok(cls) = CommutationClass::new(&s.diagram, &s.generator_word()) {
            coxeter_classes.insert(cls.word().to_vec());
        }
    }
    Ok(PointReport {
        name: seed.name,
        classes: point.len(),
        composition: (comps.len() == 1).then(|| comps.into_iter().next().expect("one composition")),
        coxeter_elements: elements.len(),
        coxeter_classes: coxeter_classes.len(),
        max_words_per_class: point.classes().iter().map(|c| c.member_words(2).len()).max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_words_are_longest() {
        assert_eq!(e6_seed().generator_word().len(), 36);
        for s in d4_seeds() {
            assert_eq!(s.generator_word().len(), 12);
        }
        assert_eq!(&e6_seed().generator_word()[..8], &[1, 2, 6, 3, 5, 4, 6, 3]);
    }

    #[test]
    fn e6_point() {
        let r = report(&e6_seed()).unwrap();
        assert_eq!(r.classes, 32);
        assert_eq!(r.composition, Some(vec![9, 9, 9, 9]));
        assert_eq!(r.coxeter_elements, 24);
    }

    #[test]
    fn e6_words_repeating_an_orbit_are_excluded() {
        let d = DynkinDiagram::e6();
        let ours = sigma_coxeter_elements(&d, &Automorphism::e6_flip());
        for w in [[6, 3, 5, 1], [3, 5, 1, 6]] {
            assert!(!ours.contains(&canonical_form(&d, &w)));
        }
    }

    #[test]
    fn e6_elements_match_list() {
        let d = DynkinDiagram::e6();
        let listed: [&[usize]; 24] = [
            &[6, 5, 4, 3], &[6, 4, 5, 3], &[6, 3, 5, 4], &[6, 3, 4, 5], &[6, 1, 4, 3], &[6, 3, 4, 1],
            &[6, 5, 2, 3], &[6, 3, 5, 2], &[6, 1, 2, 3], &[6, 2, 1, 3], &[6, 3, 1, 2], &[6, 3, 2, 1],
            &[5, 4, 3, 6], &[4, 5, 3, 6], &[3, 5, 4, 6], &[3, 4, 5, 6], &[1, 4, 3, 6], &[3, 4, 1, 6],
            &[5, 2, 3, 6], &[3, 5, 2, 6], &[1, 2, 3, 6], &[2, 1, 3, 6], &[3, 1, 2, 6], &[3, 2, 1, 6],
        ];
        let listed: BTreeSet<Word> = listed.iter().map(|w| canonical_form(&d, w)).collect();
        let ours: BTreeSet<Word> = sigma_coxeter_elements(&d, &Automorphism::e6_flip()).into_iter().collect();
        assert_eq!(listed, ours);
    }

    #[test]
    fn d4_points() {
        let (a, b) = super::d4_points().unwrap();
        assert_eq!((a.len(), b.len()), (6, 6));
        for s in d4_seeds() {
            let r = report(&s).unwrap();
            assert_eq!(r.composition, Some(vec![6, 6]));
            assert_eq!(r.max_words_per_class, 1);
            assert_eq!(r.coxeter_elements, 6);
            assert_eq!(r.coxeter_classes, 6);
        }
        assert!(a.classes().iter().all(|c| !b.contains(c)));
    }
}
