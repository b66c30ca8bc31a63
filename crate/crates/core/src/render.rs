//! Diagnostic DOT and SVG output.

use crate::drawing::{ColoredDual, FaceId, Planarization, VertexKind};
use std::fmt::Write;

/// The planarization as an undirected DOT graph. Vertices are named by
/// id and labelled with their names; edges are labelled with color ids.
pub fn planarization_dot(p: &Planarization) -> String {
    let mut s = String::from("graph planarization {\n");
    for (i, v) in p.vertices().iter().enumerate() {
        let shape = match v.kind {
            VertexKind::Crossing => "point",
            VertexKind::Anchor => "diamond",
            VertexKind::Original => "circle",
        };
        writeln!(s, "  {i} [label=\"{}\", shape={shape}];", escape(&v.name)).unwrap();
    }
    for e in 0..p.num_edges() {
        let h = p.edge_half_edge(e);
        let (a, b) = (p.tail(h), p.half_edges()[h].head);
        writeln!(s, "  {a} -- {b} [label=\"{}\"];", p.edge_color(e)).unwrap();
    }
    s.push_str("}\n");
    s
}

/// The dual as an undirected DOT multigraph: one node per face id, one edge
/// per planarization edge labelled with its color id. With a colored dual,
/// only its arcs are drawn and the faces at `u` and `v` are highlighted.
pub fn dual_dot(p: &Planarization, dual: Option<&ColoredDual>) -> String {
    let mut s = String::from("graph dual {\n");
    let marked = |f: FaceId, side: &[FaceId]| side.contains(&f);
    for f in 0..p.faces().len() {
        let mut attrs = vec![];
        if f == p.outer_face() {
            attrs.push("style=dashed".to_string());
        }
        if let Some(d) = dual {
            if marked(f, &d.u_faces) || marked(f, &d.v_faces) {
                attrs.push("shape=doublecircle".to_string());
                let who = match (marked(f, &d.u_faces), marked(f, &d.v_faces)) {
                    (true, true) => "u,v",
                    (true, false) => "u",
                    _ => "v",
                };
                attrs.push(format!("xlabel=\"{who}\""));
            }
        }
        if attrs.is_empty() {
            writeln!(s, "  {f};").unwrap();
        } else {
            writeln!(s, "  {f} [{}];", attrs.join(", ")).unwrap();
        }
    }
    match dual {
        Some(d) => {
            for a in &d.arcs {
                writeln!(s, "  {} -- {} [label=\"{}\"];", a.faces.0, a.faces.1, a.color).unwrap();
            }
        }
        None => {
            for e in 0..p.num_edges() {
                let (f, g) = p.edge_faces(e);
                writeln!(s, "  {f} -- {g} [label=\"{}\"];", p.edge_color(e)).unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Side length of the SVG viewport in pixels.
pub const SVG_SIZE: f64 = 800.0;

/// Draws the planarization's geometry, one stroke color per edge color,
/// with named original vertices labelled. Returns `None` for maps built
/// from combinatorial input, which carry no coordinates.
pub fn svg(p: &Planarization) -> Option<String> {
    let g = p.geometry()?;
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for q in g.vertices.iter().chain(g.edges.iter().flatten()) {
        for k in 0..2 {
            lo[k] = lo[k].min(q[k]);
            hi[k] = hi[k].max(q[k]);
        }
    }
    if !lo[0].is_finite() {
        lo = [0.0; 2];
        hi = [1.0; 2];
    }
    let margin = 20.0;
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let scale = (SVG_SIZE - 2.0 * margin) / span;
    let map = |q: &[f64; 2]| {
        (
            margin + (q[0] - lo[0]) * scale,
            SVG_SIZE - margin - (q[1] - lo[1]) * scale,
        )
    };
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">"
    )
    .unwrap();
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for (e, path) in g.edges.iter().enumerate() {
        let c = p.edge_color(e);
        let pts: Vec<String> = path
            .iter()
            .map(|q| {
                let (x, y) = map(q);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"><title>{}</title></polyline>",
            pts.join(" "),
            PALETTE[c % PALETTE.len()],
            xml_escape(&p.colors()[c].name)
        )
        .unwrap();
    }
    for (i, v) in p.vertices().iter().enumerate() {
        let (x, y) = map(&g.vertices[i]);
        match v.kind {
            VertexKind::Original => {
                writeln!(s, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"black\"/>").unwrap();
                writeln!(
                    s,
                    "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">{}</text>",
                    x + 5.0,
                    y - 5.0,
                    xml_escape(&v.name)
                )
                .unwrap();
            }
            _ => {
                writeln!(s, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2\" fill=\"gray\"/>").unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    Some(s)
}
