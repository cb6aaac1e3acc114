//! Verification suites run by `foldar verify`. Each returns a one-line
//! summary on success and the first counterexample on failure.

use clap::ValueEnum;
use foldar::arquiver::{gamma_q, label_by_sections, DynkinQuiver};
use foldar::dorey::{fusion_closure, twisted_classes, verify_dorey, LongTable};
use foldar::exceptional::{d4_seeds, e6_seed, report};
use foldar::folded::{fold, folded_additive_check};
use foldar::order::{OrderContext, RootSequence};
use foldar::poly::{verify_dist_denom_a, verify_dist_denom_b};
use foldar::roots::format_word;
use foldar::twist::{assign_coordinates, check_twisted_additive, label_twisted, twisted_additive_violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Additive,
    TwistedAdditive,
    Labels,
    GdistBounds,
    #[value(name = "denom-A", alias = "denom-a")]
    DenomA,
    #[value(name = "denom-B", alias = "denom-b")]
    DenomB,
    Dorey,
    Appendix,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Additive => "additive",
            Suite::TwistedAdditive => "twisted-additive",
            Suite::Labels => "labels",
            Suite::GdistBounds => "gdist-bounds",
            Suite::DenomA => "denom-A",
            Suite::DenomB => "denom-B",
            Suite::Dorey => "dorey",
            Suite::Appendix => "appendix",
        }
    }
}

type Outcome = Result<String, String>;

fn lib<T>(r: foldar::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run(suite: Suite, n: usize) -> Outcome {
    match suite {
        Suite::Additive => additive(n),
        Suite::TwistedAdditive => twisted_additive(n),
        Suite::Labels => labels(n),
        Suite::GdistBounds => gdist_bounds(n),
        Suite::DenomA => {
            lib(verify_dist_denom_a(n))?;
            Ok(format!("all quivers of A{}", 2 * n))
        }
        Suite::DenomB => {
            lib(verify_dist_denom_b(n))?;
            Ok(format!("all {} classes of A{}", 1usize << (2 * n), 2 * n + 1))
        }
        Suite::Dorey => dorey(n),
        Suite::Appendix => appendix(),
    }
}

fn additive(n: usize) -> Outcome {
    let quivers = DynkinQuiver::all_type_a(2 * n);
    for q in &quivers {
        let g = gamma_q(q);
        if let Some((beta, alpha)) = g.additive_violation() {
            return Err(format!("A{} quiver {}: mesh at {beta} -> {alpha} fails", 2 * n, q.orientation()));
        }
        if lib(label_by_sections(&g))? != g.roots() {
            return Err(format!("A{} quiver {}: section labels differ", 2 * n, q.orientation()));
        }
    }
    Ok(format!("{} quivers of A{}", quivers.len(), 2 * n))
}

fn twisted_additive(n: usize) -> Outcome {
    let classes = lib(twisted_classes(n))?;
    for tc in &classes {
        let tq = lib(assign_coordinates(tc))?;
        let twisted = check_twisted_additive(&tq);
        let folded = folded_additive_check(&lib(fold(&tq))?);
        if !twisted || twisted != folded {
            let at = twisted_additive_violation(&tq).map(|r| r.to_string()).unwrap_or_default();
            return Err(format!(
                "class {}: twisted {twisted}, folded {folded} {at}",
                format_word(tc.class().word())
            ));
        }
    }
    Ok(format!("{} classes of A{}", classes.len(), 2 * n + 1))
}

fn labels(n: usize) -> Outcome {
    let classes = lib(twisted_classes(n))?;
    for tc in &classes {
        let tq = lib(assign_coordinates(tc))?;
        let sections = lib(label_twisted(&tq))?;
        if sections != tq.quiver().roots() {
            return Err(format!("class {}: section labels differ", format_word(tc.class().word())));
        }
    }
    Ok(format!("{} classes of A{}", classes.len(), 2 * n + 1))
}

fn gdist_bounds(n: usize) -> Outcome {
    let classes = lib(twisted_classes(n))?;
    let mut pairs = 0;
    for tc in &classes {
        let ctx = OrderContext::new(tc.class());
        for g in ctx.roots().roots().iter().filter(|g| !g.is_simple()) {
            let rds = lib(ctx.rds(g))?;
            if rds > 2 {
                return Err(format!("class {}: rds({g}) = {rds}", format_word(tc.class().word())));
            }
            for p in ctx.sequences_of_weight(g).into_iter().filter(RootSequence::is_pair) {
                pairs += 1;
                let d = ctx.gdist(&p);
                if d > 2 || lib(ctx.socle(&p))?.is_none() {
                    return Err(format!(
                        "class {}: pair {} has gdist {d} or no socle",
                        format_word(tc.class().word()),
                        ctx.display(&p)
                    ));
                }
            }
        }
    }
    for q in DynkinQuiver::all_type_a(2 * n) {
        let ctx = OrderContext::new(&q.adapted_class());
        for g in ctx.roots().roots().iter().filter(|g| !g.is_simple()) {
            if lib(ctx.rds(g))? != 1 {
                return Err(format!("A{} quiver {}: rds({g}) != 1", 2 * n, q.orientation()));
            }
            for p in ctx.sequences_of_weight(g).into_iter().filter(RootSequence::is_pair) {
                if ctx.gdist(&p) > 1 {
                    return Err(format!("A{} quiver {}: pair {} has gdist > 1", 2 * n, q.orientation(), ctx.display(&p)));
                }
            }
        }
    }
    Ok(format!("{} classes, {pairs} pairs", classes.len()))
}

fn dorey(n: usize) -> Outcome {
    let r = lib(verify_dorey(n, LongTable::Shifted))?;
    if !r.is_equal() {
        let show = |v: &[foldar::dorey::DoreyTriple]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("; ");
        return Err(format!("missing: {} | extra: {}", show(&r.missing), show(&r.extra)));
    }
    let roots = (2 * n + 1) * (2 * n + 2) / 2;
    for tc in lib(twisted_classes(n))? {
        let reached = lib(fusion_closure(&tc))?.len();
        if reached != roots {
            return Err(format!("class {}: fusion reaches {reached} of {roots} roots", format_word(tc.class().word())));
        }
    }
    let printed = lib(verify_dorey(n, LongTable::Printed))?;
    Ok(format!(
        "{} triples; printed long-clause table differs on {} triples; no single class is complete: {}",
        r.direct,
        printed.extra.len(),
        r.complete_classes == 0
    ))
}

fn appendix() -> Outcome {
    let e6 = lib(report(&e6_seed()))?;
    if e6.classes != 32 || e6.composition != Some(vec![9, 9, 9, 9]) || e6.coxeter_elements != 24 {
        return Err(format!("E6: {e6:?}"));
    }
    let mut d4 = Vec::new();
    for s in d4_seeds() {
        let r = lib(report(&s))?;
        if r.classes != 6 || r.composition != Some(vec![6, 6]) || r.max_words_per_class != 1 {
            return Err(format!("{}: {r:?}", r.name));
        }
        d4.push(r);
    }
    let d4_elements: usize = d4.iter().map(|r| r.coxeter_elements).sum();
    if d4_elements != 12 {
        return Err(format!("D4: {d4_elements} triply twisted Coxeter elements"));
    }
    Ok(format!(
        "E6 {} classes, composition (9,9,9,9), {} twisted Coxeter elements; D4 {}+{} singleton classes, {} elements",
        e6.classes, e6.coxeter_elements, d4[0].classes, d4[1].classes, d4_elements
    ))
}
