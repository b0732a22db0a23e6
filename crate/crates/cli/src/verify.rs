use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde::Serialize;

use grdual_core::amodel::{no_polytope, representation_dimension, valuation_table};
use grdual_core::bmodel::q_polytope;
use grdual_core::network::{oriented_along_path, NetworkChart};
use grdual_core::plabic::{build_rectangles_graph, MoveClassMember};
use grdual_core::polytope::{equal_polytopes, hull, lattice_points, vertices_of, Polytope};
use grdual_core::{GrassmannShape, PlabicGraph};

#[derive(Clone, Debug, Serialize)]
pub struct ShapeDoc {
    pub k: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphResult {
    pub r: usize,
    /// Canonical encoding of the graph's normal form.
    pub canonical_id: String,
    pub path: Vec<String>,
    pub path_length: usize,
    pub no_vertices: usize,
    pub q_facets: usize,
    pub lattice_points: u64,
    pub equal: bool,
    pub count_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl GraphResult {
    pub fn passed(&self) -> bool {
        self.equal && self.count_matches
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub oracle_seconds: f64,
    pub search_seconds: f64,
    pub polytope_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub shape: ShapeDoc,
    pub r: Vec<usize>,
    pub class_size: usize,
    /// Expected number of lattice points for each dilation factor.
    pub oracle: BTreeMap<usize, u64>,
    /// Sorted by graph discovery order, then by `r`.
    pub results: Vec<GraphResult>,
    pub passed: bool,
    pub timings: Timings,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &GraphResult> {
        self.results.iter().filter(|g| !g.passed())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ShapeDoc { k, n } = self.shape;
        writeln!(out, "shape (k,n) = ({k},{n}), move class of {} graphs", self.class_size).unwrap();
        for (r, count) in &self.oracle {
            writeln!(out, "oracle r={r}: {count} lattice points").unwrap();
        }
        writeln!(out, "r\tpath\tNO vertices\tQ facets\tlattice points\tequal").unwrap();
        for g in &self.results {
            let path = if g.path.is_empty() { "-".to_string() } else { g.path.join("/") };
            writeln!(
                out,
                "{}\t{path}\t{}\t{}\t{}\t{}",
                g.r,
                g.no_vertices,
                g.q_facets,
                g.lattice_points,
                if g.passed() { "yes" } else { "NO" }
            )
            .unwrap();
            if let Some(c) = &g.certificate {
                writeln!(out, "  certificate: {c}").unwrap();
            }
        }
        let failed = self.failures().count();
        if self.passed {
            writeln!(out, "all {} checks passed", self.results.len()).unwrap();
        } else {
            writeln!(out, "{failed} of {} checks failed", self.results.len()).unwrap();
        }
        out
    }
}

fn check_member(shape: GrassmannShape, m: &MoveClassMember, rs: &[usize], oracle: &BTreeMap<usize, u64>) -> Vec<GraphResult> {
    let path: Vec<String> = m.path.iter().map(|p| p.to_string().trim_matches(['[', ']']).to_string()).collect();
    let blank = |r: usize, certificate: String| GraphResult {
        r,
        canonical_id: m.code.clone(),
        path: path.clone(),
        path_length: m.path.len(),
        no_vertices: 0,
        q_facets: 0,
        lattice_points: 0,
        equal: false,
        count_matches: false,
        certificate: Some(certificate),
    };
    let table = oriented_along_path(shape, &m.path)
        .and_then(|o| {
            if o.graph().encode() != m.code {
                return Err(grdual_core::Error::Consistency("transported orientation lands on another graph".into()));
            }
            NetworkChart::new(o)
        })
        .and_then(|chart| valuation_table(&chart, None));
    let table = match table {
        Ok(t) => t,
        Err(e) => return rs.iter().map(|&r| blank(r, e.to_string())).collect(),
    };
    rs.iter()
        .map(|&r| {
            let one = || -> grdual_core::Result<GraphResult> {
                let no = no_polytope(&table, r)?;
                let q = q_polytope(shape, &m.path, r as u32)?;
                let q_facets = hull(&vertices_of(&q)?)?.facets.inequalities.len();
                let lattice = lattice_points(&hull(&no)?.facets)?.len() as u64;
                let eq = equal_polytopes(&Polytope::V(no.clone()), &Polytope::H(q))?;
                let expected = oracle[&r];
                let count_matches = lattice == expected;
                let certificate = match (eq.certificate, count_matches) {
                    (Some(c), _) => Some(c),
                    (None, false) => Some(format!("{lattice} lattice points, expected {expected}")),
                    (None, true) => None,
                };
                Ok(GraphResult {
                    r,
                    canonical_id: m.code.clone(),
                    path: path.clone(),
                    path_length: m.path.len(),
                    no_vertices: no.points.len(),
                    q_facets,
                    lattice_points: lattice,
                    equal: eq.equal,
                    count_matches,
                    certificate,
                })
            };
            one().unwrap_or_else(|e| blank(r, e.to_string()))
        })
        .collect()
}

/// Enumerates the move class of the rectangles graph and compares `NO^r` with `Q^r` for every
/// member and every `r`, checking lattice-point counts against tableau enumeration.
pub fn run_verify(shape: GrassmannShape, rs: &[usize], budget: usize) -> Result<VerificationReport> {
    if rs.is_empty() || rs.contains(&0) {
        bail!("dilation factors must be positive");
    }
    let mut rs = rs.to_vec();
    rs.sort_unstable();
    rs.dedup();

    let t0 = Instant::now();
    let oracle: BTreeMap<usize, u64> = rs.iter().map(|&r| (r, representation_dimension(shape, r))).collect();
    let oracle_seconds = t0.elapsed().as_secs_f64();

    let t1 = Instant::now();
    let class = PlabicGraph::move_class_bfs(&build_rectangles_graph(shape), budget)?;
    if !class.complete {
        bail!("budget of {budget} graphs exhausted before the move class was complete");
    }
    let search_seconds = t1.elapsed().as_secs_f64();

    let t2 = Instant::now();
    let results: Vec<GraphResult> =
        class.members.par_iter().flat_map_iter(|m| check_member(shape, m, &rs, &oracle)).collect();
    let polytope_seconds = t2.elapsed().as_secs_f64();

    let passed = results.iter().all(GraphResult::passed);
    Ok(VerificationReport {
        shape: ShapeDoc { k: shape.k, n: shape.n },
        r: rs,
        class_size: class.len(),
        oracle,
        results,
        passed,
        timings: Timings { oracle_seconds, search_seconds, polytope_seconds },
    })
}
