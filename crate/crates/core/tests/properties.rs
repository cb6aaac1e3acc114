//! Property tests over random classes, words and factor polynomials.

use std::collections::HashSet;

use foldar::dorey::{twisted_classes, v_label, DoreyTriple, SpectralLabel};
use foldar::folded::fold;
use foldar::poly::QsFactorPoly;
use foldar::twist::{assign_coordinates, diagram};
use foldar::words::{canonical_form, CommutationClass};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QsFactorPoly> {
    prop::collection::vec((prop::bool::ANY, 1u32..12, 1u32..3), 0..5).prop_map(|fs| {
        fs.into_iter()
            .fold(QsFactorPoly::one(), |p, (neg, e, m)| p.times(if neg { -1 } else { 1 }, e, m))
    })
}

fn label() -> impl Strategy<Value = SpectralLabel> {
    (1usize..5, prop::bool::ANY, -20i64..20).prop_map(|(index, neg, exp)| SpectralLabel {
        index,
        sign: if neg { -1 } else { 1 },
        exp,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commuting_swaps_keep_the_class(class in 0usize..16, at in 0usize..15) {
        let d = diagram(2);
        let tc = &twisted_classes(2).unwrap()[class];
        let mut w = tc.class().word().to_vec();
        let (a, b) = (w[at], w[(at + 1) % w.len()]);
        if at + 1 < w.len() && a.abs_diff(b) > 1 {
            w.swap(at, at + 1);
            prop_assert_eq!(canonical_form(&d, &w), canonical_form(&d, tc.class().word()));
            prop_assert_eq!(&CommutationClass::new(&d, &w).unwrap(), tc.class());
        }
    }

    #[test]
    fn poly_mul_div_round_trip(a in poly(), b in poly()) {
        let ab = a.mul(&b);
        prop_assert_eq!(ab.degree(), a.degree() + b.degree());
        prop_assert_eq!(ab.div(&b), Some(a.clone()));
        prop_assert_eq!(ab.div(&a), Some(b.clone()));
        prop_assert_eq!(a.negated_signs().negated_signs(), a);
    }

    #[test]
    fn poly_div_fails_on_missing_factor(a in poly(), e in 13u32..20) {
        prop_assert_eq!(a.div(&QsFactorPoly::factor(1, e)), None);
    }

    #[test]
    fn triples_ignore_a_common_shift(y in label(), x in label(), z in label(), s in -10i64..10, flip in prop::bool::ANY) {
        let f = if flip { -1 } else { 1 };
        let move_by = |l: SpectralLabel| SpectralLabel { sign: l.sign * f, exp: l.exp + s, ..l };
        prop_assert_eq!(
            DoreyTriple::normalize(move_by(y), move_by(x), move_by(z)),
            DoreyTriple::normalize(y, x, z)
        );
    }

    #[test]
    fn coordinates_and_labels_are_injective(class in 0usize..16) {
        let tc = &twisted_classes(2).unwrap()[class];
        let tq = assign_coordinates(tc).unwrap();
        let q = tq.quiver();
        let coords: HashSet<(usize, i64)> = (0..q.len()).map(|v| (q.residue(v), q.pos(v))).collect();
        prop_assert_eq!(coords.len(), q.len());
        let fq = fold(&tq).unwrap();
        let labels: HashSet<SpectralLabel> = fq.quiver().roots().iter().map(|b| v_label(&fq, b).unwrap()).collect();
        prop_assert_eq!(labels.len(), q.len());
    }
}
