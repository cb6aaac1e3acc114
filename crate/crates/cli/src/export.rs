//! Text, JSON and DOT renderings of twisted and folded AR-quivers.

use std::fmt::Write as _;

use clap::ValueEnum;
use foldar::folded::fold;
use foldar::roots::{format_word, Root};
use foldar::twist::{assign_coordinates, classify_vertices, TwistedClass};
use foldar::Result;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Serialize)]
struct Vertex {
    root: Vec<i32>,
    residue: usize,
    pos2x: i64,
    kind: &'static str,
}

#[derive(Serialize)]
struct QuiverExport {
    family: &'static str,
    n: usize,
    folded: bool,
    side: String,
    class: String,
    vertices: Vec<Vertex>,
    arrows: Vec<[usize; 2]>,
}

/// `[a, b]` for a segment `[a,b]`, the coefficient vector otherwise.
fn root_json(r: &Root) -> Vec<i32> {
    match r.as_segment() {
        Some((a, b)) => vec![a as i32, b as i32],
        None => r.0.clone(),
    }
}

fn collect(tc: &TwistedClass, folded: bool) -> Result<QuiverExport> {
    let tq = assign_coordinates(tc)?;
    let kinds = classify_vertices(&tq)?;
    let fq;
    let q = if folded {
        fq = fold(&tq)?;
        fq.quiver()
    } else {
        tq.quiver()
    };
    let mut order: Vec<usize> = (0..q.len()).collect();
    order.sort_by_key(|&v| (q.residue(v), -q.pos(v)));
    let mut index = vec![0; q.len()];
    for (k, &v) in order.iter().enumerate() {
        index[v] = k;
    }
    let vertices = order
        .iter()
        .map(|&v| Vertex { root: root_json(q.root(v)), residue: q.residue(v), pos2x: q.pos(v), kind: kinds[v].name() })
        .collect();
    let mut arrows: Vec<[usize; 2]> = q.arrows().iter().map(|&(a, b)| [index[a], index[b]]).collect();
    arrows.sort();
    Ok(QuiverExport {
        family: if folded { "B" } else { "A" },
        n: tc.n(),
        folded,
        side: tc.side().symbol().to_string(),
        class: format_word(tc.class().word()),
        vertices,
        arrows,
    })
}

fn root_label(v: &Vertex) -> String {
    match v.root.as_slice() {
        [a, b] if a == b => format!("[{a}]"),
        [a, b] => format!("[{a},{b}]"),
        other => format!("{other:?}"),
    }
}

fn render_text(e: &QuiverExport) -> String {
    let mut s = String::new();
    let what = if e.folded { "folded" } else { "twisted" };
    let _ = writeln!(s, "{what} AR-quiver, n = {}, side {}, class {}", e.n, e.side, e.class);
    let _ = writeln!(s, "residue pos2x root kind");
    for v in &e.vertices {
        let _ = writeln!(s, "{} {} {} {}", v.residue, v.pos2x, root_label(v), v.kind);
    }
    let _ = writeln!(s, "{} arrows", e.arrows.len());
    s
}

fn render_dot(e: &QuiverExport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph upsilon {{");
    let _ = writeln!(s, "  rankdir=LR;");
    let mut residues: Vec<usize> = e.vertices.iter().map(|v| v.residue).collect();
    residues.dedup();
    for r in residues {
        let _ = writeln!(s, "  subgraph residue_{r} {{");
        let _ = writeln!(s, "    rank=same;");
        for (k, v) in e.vertices.iter().enumerate().filter(|(_, v)| v.residue == r) {
            let shape = if v.residue == e.n + 1 { "star" } else { "ellipse" };
            let _ = writeln!(
                s,
                "    v{k} [label=\"{}\", shape={shape}, residue={}, pos2x={}, kind=\"{}\"];",
                root_label(v),
                v.residue,
                v.pos2x,
                v.kind
            );
        }
        let _ = writeln!(s, "  }}");
    }
    for [a, b] in &e.arrows {
        let _ = writeln!(s, "  v{a} -> v{b};");
    }
    let _ = writeln!(s, "}}");
    s
}

pub fn build_export(tc: &TwistedClass, folded: bool, format: Format) -> Result<String> {
    let e = collect(tc, folded)?;
    Ok(match format {
        Format::Text => render_text(&e),
        Format::Json => serde_json::to_string_pretty(&e).expect("serializable") + "\n",
        Format::Dot => render_dot(&e),
    })
}
