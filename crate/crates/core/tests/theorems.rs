//! Cross-module checks over whole twisted adapted cluster points.

use foldar::arquiver::DynkinQuiver;
use foldar::folded::{coordinate_minimal_pairs, fold};
use foldar::order::{OrderContext, RootSequence};
use foldar::roots::Root;
use foldar::twist::{
    assign_coordinates, class_from_twisted_coxeter, folded_multiplicity, twisted_coxeter_elements, vee, Side,
    TwistedClass,
};

fn twisted_classes(n: usize) -> Vec<TwistedClass> {
    DynkinQuiver::all_type_a(2 * n)
        .into_iter()
        .flat_map(|q| [Side::Less, Side::Greater].map(|s| TwistedClass::from_quiver(&q, s).unwrap()))
        .collect()
}

fn non_simple(ctx: &OrderContext) -> Vec<Root> {
    ctx.roots().roots().iter().filter(|r| !r.is_simple()).cloned().collect()
}

#[test]
fn distance_bounds_on_twisted_points() {
    for n in 1..=2 {
        let sigma = vee(n);
        for t in twisted_classes(n) {
            let ctx = OrderContext::new(t.class());
            for g in non_simple(&ctx) {
                let rds = ctx.rds(&g).unwrap();
                assert!(rds <= 2);
                if rds == 2 {
                    assert_eq!(folded_multiplicity(&g, &sigma), 2);
                }
                for p in ctx.sequences_of_weight(&g).into_iter().filter(RootSequence::is_pair) {
                    assert!(ctx.gdist(&p) <= 2);
                    ctx.socle(&p).unwrap().expect("socle exists");
                }
            }
        }
    }
}

#[test]
fn twisted_coxeter_radius_is_folded_multiplicity() {
    for n in 1..=2 {
        let sigma = vee(n);
        for tc in twisted_coxeter_elements(n) {
            let c = class_from_twisted_coxeter(n, &tc).unwrap();
            let ctx = OrderContext::new(&c);
            for g in non_simple(&ctx) {
                assert_eq!(ctx.rds(&g).unwrap() as i32, folded_multiplicity(&g, &sigma), "{tc:?} {g}");
            }
        }
    }
}

#[test]
fn minimal_pairs_match_coordinates() {
    for n in 1..=3 {
        for t in twisted_classes(n) {
            let ctx = OrderContext::new(t.class());
            let fq = fold(&assign_coordinates(&t).unwrap()).unwrap();
            for g in non_simple(&ctx) {
                assert_eq!(ctx.minimal_pairs(&g).unwrap(), coordinate_minimal_pairs(&fq, &g), "{g}");
            }
        }
    }
}

#[test]
fn unique_rectangle() {
    for n in 1..=2 {
        for t in twisted_classes(n) {
            let ctx = OrderContext::new(t.class());
            let rs = ctx.roots();
            for a in 0..rs.len() {
                for b in a + 1..rs.len() {
                    let p = RootSequence::from_indices(&[a, b]);
                    let w = p.weight(rs);
                    if rs.is_root(&w) || ctx.gdist(&p) != 1 {
                        continue;
                    }
                    let below: Vec<RootSequence> = ctx
                        .sequences_of_weight(&w)
                        .into_iter()
                        .filter(|m| m.is_pair() && ctx.prec_b(m, &p))
                        .collect();
                    assert_eq!(below.len(), 1);
                }
            }
        }
    }
}
