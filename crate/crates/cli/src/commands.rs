use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde_json::json;

use grdual_core::amodel::{no_polytope, valuation_table};
use grdual_core::bmodel::{superpotential_in_cluster, superpotential_plucker, superpotential_rectangles, tropicalize};
use grdual_core::network::{oriented_along_path, NetworkChart, PerfectOrientation};
use grdual_core::plabic::build_rectangles_graph;
use grdual_core::polytope::{hull, polytope_json, vertices_of};
use grdual_core::{GrassmannShape, LaurentPoly, Partition, PlabicGraph};

use crate::{parse_path, parse_subset, ChartArgs, ExportArgs, Format, Model, MovesArgs, SuperpotentialArgs, Target, WForm};

fn unsupported(format: Format, what: &str) -> anyhow::Error {
    anyhow::anyhow!("format {format:?} is not available for {what}")
}

fn orientation_text(o: &PerfectOrientation) -> String {
    let mut out = format!("sources {}\n", o.sources());
    for e in 0..o.graph().edge_count() {
        writeln!(out, "e{e}\t{} -> {}", o.tail(e), o.head(e)).unwrap();
    }
    out
}

fn graph_text(g: &PlabicGraph) -> Result<String> {
    let mut out = format!("{}\n", g.encode());
    let labels = g.face_labels()?;
    let mut sorted = labels.labels.clone();
    sorted.sort_by(Partition::column_order);
    for l in sorted {
        writeln!(out, "face {}", if l.is_empty() { "∅".to_string() } else { l.to_string() }).unwrap();
    }
    Ok(out)
}

fn pretty(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn export(args: &ExportArgs) -> Result<String> {
    let shape = args.shape.shape()?;
    let path = parse_path(&args.path)?;
    match args.target {
        Target::Graph => {
            let g = build_rectangles_graph(shape).follow_path(&path)?;
            match args.format {
                Format::Json => Ok(g.to_json() + "\n"),
                Format::Dot => Ok(g.to_dot()),
                Format::Text => graph_text(&g),
            }
        }
        Target::Orientation => {
            let o = oriented_along_path(shape, &path)?;
            match args.format {
                Format::Json => pretty(&o.to_json_value()),
                Format::Text => Ok(orientation_text(&o)),
                Format::Dot => Err(unsupported(args.format, "orientations")),
            }
        }
        Target::Polytope => {
            if args.r == 0 {
                bail!("the dilation factor must be positive");
            }
            let (vertices, facets) = match args.model {
                Model::A => {
                    let chart = NetworkChart::new(oriented_along_path(shape, &path)?)?;
                    let v = no_polytope(&valuation_table(&chart, None)?, args.r)?;
                    let h = hull(&v)?.facets;
                    (v, h)
                }
                Model::B => {
                    let q = grdual_core::bmodel::q_polytope(shape, &path, args.r as u32)?;
                    let h = hull(&vertices_of(&q)?)?;
                    (h.vertices, h.facets)
                }
            };
            match args.format {
                Format::Json => pretty(&polytope_json(&vertices, &facets)),
                Format::Text => Ok(format!("{}{}", vertices.to_text(), facets.sorted().to_text())),
                Format::Dot => Err(unsupported(args.format, "polytopes")),
            }
        }
        Target::Superpotential => {
            let w = superpotential_in_cluster(shape, &path)?.superpotential;
            match args.format {
                Format::Text => Ok(w.to_ratio_string() + "\n"),
                Format::Json => pretty(&superpotential_json(shape, &path, &w)),
                Format::Dot => Err(unsupported(args.format, "superpotentials")),
            }
        }
    }
}

fn superpotential_json(shape: GrassmannShape, path: &[Partition], w: &LaurentPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> =
        w.terms().map(|(m, c)| json!({ "coefficient": c.to_string(), "exponents": m.exponents() })).collect();
    json!({
        "shape": { "k": shape.k, "n": shape.n },
        "path": path.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "text": w.to_ratio_string(),
        "terms": terms,
    })
}

pub fn chart(args: &ChartArgs) -> Result<String> {
    let shape = args.shape.shape()?;
    let path = parse_path(&args.path)?;
    let chart = NetworkChart::new(oriented_along_path(shape, &path)?)?;
    match &args.j {
        Some(j) => Ok(format!("{}\n", chart.plucker_polynomial(&parse_subset(j, shape)?)?)),
        None => {
            let mut out = String::new();
            for (j, p) in chart.plucker_table()? {
                writeln!(out, "{j}\t{p}").unwrap();
            }
            Ok(out)
        }
    }
}

pub fn moves(args: &MovesArgs) -> Result<String> {
    let shape = args.shape.shape()?;
    let class = PlabicGraph::move_class_bfs(&build_rectangles_graph(shape), args.budget)?;
    let path_text = |p: &[Partition]| -> String {
        if p.is_empty() {
            "-".into()
        } else {
            p.iter().map(|l| l.to_string().trim_matches(['[', ']']).to_string()).collect::<Vec<_>>().join("/")
        }
    };
    match args.format {
        Format::Text => {
            let mut out = format!("{} graphs{}\n", class.len(), if class.complete { "" } else { " (budget exhausted)" });
            for (i, m) in class.members.iter().enumerate() {
                writeln!(out, "{i}\t{}\t{}", path_text(&m.path), m.code).unwrap();
            }
            for (u, v, label) in &class.exchanges {
                writeln!(out, "move {u} -- {v} at {label}").unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let members: Vec<serde_json::Value> = class
                .members
                .iter()
                .map(|m| json!({ "code": m.code, "path": m.path.iter().map(|p| p.to_string()).collect::<Vec<_>>() }))
                .collect();
            let exchanges: Vec<serde_json::Value> =
                class.exchanges.iter().map(|(u, v, l)| json!({ "from": u, "to": v, "face": l.to_string() })).collect();
            pretty(&json!({
                "shape": { "k": shape.k, "n": shape.n },
                "complete": class.complete,
                "members": members,
                "exchanges": exchanges,
            }))
        }
        Format::Dot => {
            let mut out = String::from("graph moves {\n");
            for (i, m) in class.members.iter().enumerate() {
                writeln!(out, "  g{i} [label=\"{}\"];", path_text(&m.path)).unwrap();
            }
            for (u, v, label) in &class.exchanges {
                writeln!(out, "  g{u} -- g{v} [label=\"{label}\"];").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
    }
}

fn plucker_text(shape: GrassmannShape) -> String {
    superpotential_plucker(shape)
        .iter()
        .map(|t| format!("{}p{}/p{}", if t.has_q { "q*" } else { "" }, t.numerator, t.denominator))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn superpotential(args: &SuperpotentialArgs) -> Result<String> {
    let shape = args.shape.shape()?;
    let path = parse_path(&args.path)?;
    if args.form != WForm::Cluster && !path.is_empty() {
        bail!("--path only applies to the cluster form");
    }
    if args.form == WForm::Plucker {
        if args.r.is_some() {
            bail!("the Plücker form is not a Laurent polynomial in a cluster and has no tropicalization here");
        }
        return match args.format {
            Format::Text => Ok(plucker_text(shape) + "\n"),
            Format::Json => pretty(&serde_json::to_value(superpotential_plucker(shape))?),
            Format::Dot => Err(unsupported(args.format, "superpotentials")),
        };
    }
    let (w, coords) = if args.form == WForm::Rectangles {
        let g = build_rectangles_graph(shape);
        (superpotential_rectangles(shape), g.face_labels()?.nonempty_labels())
    } else {
        let c = superpotential_in_cluster(shape, &path)?;
        let coords = c.graph.face_labels()?.nonempty_labels();
        (c.superpotential, coords)
    };
    match (args.r, args.format) {
        (Some(r), Format::Text) => Ok(tropicalize(&w, &coords, r)?.sorted().to_text()),
        (Some(r), Format::Json) => {
            let q = tropicalize(&w, &coords, r)?;
            let h = hull(&vertices_of(&q)?)?;
            pretty(&polytope_json(&h.vertices, &h.facets))
        }
        (None, Format::Text) => Ok(w.to_ratio_string() + "\n"),
        (None, Format::Json) => pretty(&superpotential_json(shape, &path, &w)),
        (_, Format::Dot) => Err(unsupported(args.format, "superpotentials")),
    }
}
