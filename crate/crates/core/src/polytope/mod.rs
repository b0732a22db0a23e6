//! Exact rational polytopes in coordinates indexed by Young diagrams.

mod dd;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

use dd::{extreme_rays, integer_row, primitive, rank, rref};

pub type Point = Vec<BigRational>;

pub fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn integer_point(xs: &[i64]) -> Point {
    xs.iter().map(|&x| rational(x)).collect()
}

/// The affine inequality `constant + coeffs . v >= 0` (or `= 0` when used as an equation),
/// stored with coprime integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub constant: BigInt,
    pub coeffs: Vec<BigInt>,
}

impl Inequality {
    pub fn new(constant: BigInt, coeffs: Vec<BigInt>) -> Self {
        let mut all = vec![constant];
        all.extend(coeffs);
        let mut all = primitive(all);
        let coeffs = all.split_off(1);
        Self { constant: all.pop().unwrap(), coeffs }
    }

    pub fn from_ints(constant: i64, coeffs: &[i64]) -> Self {
        Self::new(BigInt::from(constant), coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn from_rationals(constant: &BigRational, coeffs: &[BigRational]) -> Self {
        let mut all = vec![constant.clone()];
        all.extend(coeffs.iter().cloned());
        let mut ints = integer_row(&all);
        let coeffs = ints.split_off(1);
        Self { constant: ints.pop().unwrap(), coeffs }
    }

    pub fn value(&self, p: &[BigRational]) -> BigRational {
        let mut v = BigRational::from_integer(self.constant.clone());
        for (c, x) in self.coeffs.iter().zip(p) {
            if !c.is_zero() {
                v += x * BigRational::from_integer(c.clone());
            }
        }
        v
    }

    pub fn holds(&self, p: &[BigRational]) -> bool {
        !self.value(p).is_negative()
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn negated(&self) -> Self {
        Self { constant: -&self.constant, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn homogeneous_row(&self) -> Vec<BigInt> {
        let mut row = vec![self.constant.clone()];
        row.extend(self.coeffs.iter().cloned());
        row
    }

    pub fn display(&self, coords: &[Partition]) -> String {
        let mut out = format!("{}", self.constant);
        for (c, mu) in self.coeffs.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let a = c.abs();
            if a == BigInt::from(1) {
                write!(out, " {sign} v{mu}").unwrap();
            } else {
                write!(out, " {sign} {a}*v{mu}").unwrap();
            }
        }
        out
    }
}

/// An inequality description `{v : ineq(v) >= 0, eq(v) = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    pub coords: Vec<Partition>,
    pub inequalities: Vec<Inequality>,
    pub equations: Vec<Inequality>,
}

impl HPolytope {
    /// Normalizes and deduplicates the inequalities, keeping first occurrences in order.
    pub fn new(coords: Vec<Partition>, inequalities: Vec<Inequality>) -> Self {
        Self::with_equations(coords, inequalities, Vec::new())
    }

    pub fn with_equations(coords: Vec<Partition>, inequalities: Vec<Inequality>, equations: Vec<Inequality>) -> Self {
        let mut seen = BTreeSet::new();
        let inequalities = inequalities
            .into_iter()
            .map(|i| Inequality::new(i.constant, i.coeffs))
            .filter(|i| seen.insert(i.clone()))
            .collect();
        Self { coords, inequalities, equations }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn contains(&self, p: &[BigRational]) -> bool {
        self.inequalities.iter().all(|i| i.holds(p)) && self.equations.iter().all(|e| e.value(p).is_zero())
    }

    fn homogeneous_rows(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = self.inequalities.iter().map(Inequality::homogeneous_row).collect();
        for e in &self.equations {
            rows.push(e.homogeneous_row());
            rows.push(e.negated().homogeneous_row());
        }
        let mut t = vec![BigInt::zero(); self.dim() + 1];
        t[0] = BigInt::from(1);
        rows.push(t);
        rows
    }

    /// Same inequalities with a canonical order, for comparisons and dumps.
    pub fn sorted(&self) -> Self {
        let mut s = self.clone();
        s.inequalities.sort();
        s.equations.sort();
        s
    }

    pub fn to_text(&self) -> String {
        let s = self.sorted();
        let mut out = String::new();
        for i in &s.inequalities {
            writeln!(out, "{} >= 0", i.display(&s.coords)).unwrap();
        }
        for e in &s.equations {
            writeln!(out, "{} = 0", e.display(&s.coords)).unwrap();
        }
        out
    }
}

/// A finite point set; its convex hull is the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    pub coords: Vec<Partition>,
    pub points: Vec<Point>,
}

impl VPolytope {
    /// Deduplicates and sorts the points.
    pub fn new(coords: Vec<Partition>, points: Vec<Point>) -> Self {
        let set: BTreeSet<Point> = points.into_iter().collect();
        Self { coords, points: set.into_iter().collect() }
    }

    pub fn from_integer_points(coords: Vec<Partition>, points: &[Vec<i64>]) -> Self {
        Self::new(coords, points.iter().map(|p| integer_point(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.points.iter().all(|p| p.iter().all(|x| x.is_integer()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            writeln!(out, "({})", parts.join(",")).unwrap();
        }
        out
    }
}

/// Vertices, facets and affine hull of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    pub vertices: VPolytope,
    /// Facet inequalities together with the affine-hull equations.
    pub facets: HPolytope,
    /// Dimension of the affine hull.
    pub dimension: usize,
}

/// Convex hull of a nonempty finite point set.
pub fn hull(points: &VPolytope) -> Result<Hull> {
    let d = points.dim();
    let pts = &points.points;
    let first = pts.first().ok_or(Error::Empty)?;
    // Affine hull: pivot coordinates of the difference vectors.
    let mut diffs: Vec<Vec<BigRational>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        diffs.push(vec![BigRational::zero(); d]);
    }
    let pivots = rref(&mut diffs);
    let s = pivots.len();
    let mut equations = Vec::new();
    for f in (0..d).filter(|c| !pivots.contains(c)) {
        let mut normal = vec![BigRational::zero(); d];
        normal[f] = rational(1);
        for (r, &pc) in pivots.iter().enumerate() {
            normal[pc] = -diffs[r][f].clone();
        }
        let c0: BigRational = -normal.iter().zip(first).map(|(a, b)| a * b).sum::<BigRational>();
        equations.push(Inequality::from_rationals(&c0, &normal));
    }
    let project = |p: &Point| -> Vec<BigRational> { pivots.iter().map(|&c| p[c].clone()).collect() };
    let mut facets = Vec::new();
    if s > 0 {
        let rows: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|p| {
                let mut row = vec![rational(1)];
                row.extend(project(p));
                integer_row(&row)
            })
            .collect();
        for ray in extreme_rays(&rows, s + 1)? {
            let mut coeffs = vec![BigInt::zero(); d];
            for (k, &pc) in pivots.iter().enumerate() {
                coeffs[pc] = ray[k + 1].clone();
            }
            facets.push(Inequality::new(ray[0].clone(), coeffs));
        }
        facets.sort();
    }
    let vertices: Vec<Point> = pts
        .iter()
        .filter(|p| {
            if s == 0 {
                return true;
            }
            let tight: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.value(p).is_zero())
                .map(|f| pivots.iter().map(|&c| f.coeffs[c].clone()).collect())
                .collect();
            tight.len() >= s && rank(&tight) == s
        })
        .cloned()
        .collect();
    Ok(Hull {
        vertices: VPolytope::new(points.coords.clone(), vertices),
        facets: HPolytope::with_equations(points.coords.clone(), facets, equations),
        dimension: s,
    })
}

/// Vertex enumeration. Fails on unbounded or empty input.
pub fn vertices_of(h: &HPolytope) -> Result<VPolytope> {
    let d = h.dim();
    let rays = extreme_rays(&h.homogeneous_rows(), d + 1)?;
    let mut points = Vec::new();
    for r in rays {
        if r[0].is_zero() {
            return Err(Error::Unbounded);
        }
        let t = BigRational::from_integer(r[0].clone());
        points.push(r[1..].iter().map(|x| BigRational::from_integer(x.clone()) / &t).collect());
    }
    if points.is_empty() {
        return Err(Error::Empty);
    }
    Ok(VPolytope::new(h.coords.clone(), points))
}

/// Integer points of a bounded polytope, in lexicographic order.
pub fn lattice_points(h: &HPolytope) -> Result<Vec<Vec<i64>>> {
    let v = vertices_of(h)?;
    let d = h.dim();
    let mut lo = vec![i64::MAX; d];
    let mut hi = vec![i64::MIN; d];
    for p in &v.points {
        for i in 0..d {
            let fl = p[i].floor().to_integer().to_i64().ok_or(Error::Unbounded)?;
            let ce = p[i].ceil().to_integer().to_i64().ok_or(Error::Unbounded)?;
            lo[i] = lo[i].min(fl);
            hi[i] = hi[i].max(ce);
        }
    }
    let to_i128 = |x: &BigInt| x.to_i128().expect("small coefficient");
    let mut rows: Vec<(i128, Vec<i128>)> = h
        .inequalities
        .iter()
        .map(|i| (to_i128(&i.constant), i.coeffs.iter().map(to_i128).collect()))
        .collect();
    for e in &h.equations {
        rows.push((to_i128(&e.constant), e.coeffs.iter().map(to_i128).collect()));
        rows.push((-to_i128(&e.constant), e.coeffs.iter().map(|c| -to_i128(c)).collect()));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    let lo: Vec<i128> = lo.into_iter().map(i128::from).collect();
    let hi: Vec<i128> = hi.into_iter().map(i128::from).collect();
    lattice_rec(&rows, &lo, &hi, &mut cur, &mut out);
    Ok(out)
}

fn lattice_rec(rows: &[(i128, Vec<i128>)], lo: &[i128], hi: &[i128], cur: &mut Vec<i128>, out: &mut Vec<Vec<i64>>) {
    let i = cur.len();
    let d = lo.len();
    if i == d {
        if rows.iter().all(|(c, a)| c + a.iter().zip(cur.iter()).map(|(x, y)| x * y).sum::<i128>() >= 0) {
            out.push(cur.iter().map(|&x| x as i64).collect());
        }
        return;
    }
    let (mut a, mut b) = (lo[i], hi[i]);
    for (c, coef) in rows {
        let ci = coef[i];
        if ci == 0 {
            continue;
        }
        let known: i128 = c + coef[..i].iter().zip(cur.iter()).map(|(x, y)| x * y).sum::<i128>();
        let rest: i128 = (i + 1..d).map(|j| (coef[j] * lo[j]).max(coef[j] * hi[j])).sum();
        let need = -known - rest;
        if ci > 0 {
            a = a.max(Integer::div_ceil(&need, &ci));
        } else {
            b = b.min(Integer::div_floor(&(-need), &(-ci)));
        }
        if a > b {
            return;
        }
    }
    for x in a..=b {
        cur.push(x);
        lattice_rec(rows, lo, hi, cur, out);
        cur.pop();
    }
}

/// Vertices of `r * P`.
pub fn dilate(p: &VPolytope, r: &BigRational) -> Result<VPolytope> {
    let scaled = VPolytope::new(p.coords.clone(), p.points.iter().map(|x| x.iter().map(|c| c * r).collect()).collect());
    Ok(hull(&scaled)?.vertices)
}

/// Vertices of `P + Q`.
pub fn minkowski_sum(p: &VPolytope, q: &VPolytope) -> Result<VPolytope> {
    if p.coords != q.coords {
        return Err(Error::DimensionMismatch("Minkowski summands live in different coordinates".into()));
    }
    let pv = hull(p)?.vertices;
    let qv = hull(q)?.vertices;
    let mut sums = Vec::new();
    for a in &pv.points {
        for b in &qv.points {
            sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    Ok(hull(&VPolytope::new(p.coords.clone(), sums))?.vertices)
}

/// The coordinate change of a square move. Neighbors given as `None` stand for the empty
/// diagram, whose coordinate is identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationMapSpec {
    pub mu1: Partition,
    pub mu1_prime: Partition,
    pub neighbors: [Option<Partition>; 4],
}

impl MutationMapSpec {
    /// The same move read in the opposite direction.
    pub fn reversed(&self) -> Self {
        Self { mu1: self.mu1_prime.clone(), mu1_prime: self.mu1.clone(), neighbors: self.neighbors.clone() }
    }
}

/// Applies `V_{mu1'} = min(V_2 + V_4, V_3 + V_5) - V_{mu1}` and renames the coordinate.
pub fn pl_mutate(coords: &[Partition], points: &[Point], spec: &MutationMapSpec) -> Result<(Vec<Partition>, Vec<Point>)> {
    let index = |mu: &Partition| {
        coords
            .iter()
            .position(|c| c == mu)
            .ok_or_else(|| Error::DimensionMismatch(format!("coordinate {mu} is missing")))
    };
    let i1 = index(&spec.mu1)?;
    let nb: Vec<Option<usize>> = spec.neighbors.iter().map(|n| n.as_ref().map(&index).transpose()).collect::<Result<_>>()?;
    let val = |p: &Point, k: usize| nb[k].map_or_else(BigRational::zero, |i| p[i].clone());
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        let a = val(p, 0) + val(p, 2);
        let b = val(p, 1) + val(p, 3);
        let mut q = p.clone();
        q[i1] = a.min(b) - &p[i1];
        out.push(q);
    }
    let mut new_coords = coords.to_vec();
    new_coords[i1] = spec.mu1_prime.clone();
    Ok((new_coords, out))
}

/// Either representation of a polytope.
#[derive(Clone, Debug)]
pub enum Polytope {
    V(VPolytope),
    H(HPolytope),
}

impl Polytope {
    fn coords(&self) -> &[Partition] {
        match self {
            Polytope::V(v) => &v.coords,
            Polytope::H(h) => &h.coords,
        }
    }

    fn both(&self) -> Result<(VPolytope, HPolytope)> {
        match self {
            Polytope::V(v) => {
                let h = hull(v)?;
                Ok((h.vertices, h.facets))
            }
            Polytope::H(h) => Ok((vertices_of(h)?, h.clone())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equality {
    pub equal: bool,
    /// A vertex of one side violating a constraint of the other.
    pub certificate: Option<String>,
}

/// Exact equality by mutual containment of vertices.
pub fn equal_polytopes(a: &Polytope, b: &Polytope) -> Result<Equality> {
    if a.coords() != b.coords() {
        return Err(Error::DimensionMismatch("polytopes live in different coordinates".into()));
    }
    let (av, ah) = a.both()?;
    let (bv, bh) = b.both()?;
    for (name, verts, other, oname) in [("first", &av, &bh, "second"), ("second", &bv, &ah, "first")] {
        for p in &verts.points {
            if let Some(f) = other.inequalities.iter().find(|f| !f.holds(p)) {
                return Ok(Equality {
                    equal: false,
                    certificate: Some(format!(
                        "vertex {} of the {name} polytope violates {} >= 0 of the {oname}",
                        fmt_point(p),
                        f.display(&other.coords)
                    )),
                });
            }
            if let Some(e) = other.equations.iter().find(|e| !e.value(p).is_zero()) {
                return Ok(Equality {
                    equal: false,
                    certificate: Some(format!(
                        "vertex {} of the {name} polytope violates {} = 0 of the {oname}",
                        fmt_point(p),
                        e.display(&other.coords)
                    )),
                });
            }
        }
    }
    Ok(Equality { equal: true, certificate: None })
}

fn fmt_point(p: &[BigRational]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Serialize, Deserialize)]
struct InequalityDoc {
    #[serde(rename = "const")]
    constant: String,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PolytopeDoc {
    coords: Vec<String>,
    vertices: Vec<Vec<String>>,
    inequalities: Vec<InequalityDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    equations: Vec<InequalityDoc>,
}

fn ineq_doc(i: &Inequality) -> InequalityDoc {
    InequalityDoc { constant: i.constant.to_string(), coeffs: i.coeffs.iter().map(|c| c.to_string()).collect() }
}

/// JSON with canonical ordering of vertices and inequalities.
pub fn polytope_json(vertices: &VPolytope, facets: &HPolytope) -> serde_json::Value {
    let facets = facets.sorted();
    let doc = PolytopeDoc {
        coords: vertices.coords.iter().map(|c| c.to_string()).collect(),
        vertices: vertices.points.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect(),
        inequalities: facets.inequalities.iter().map(ineq_doc).collect(),
        equations: facets.equations.iter().map(ineq_doc).collect(),
    };
    serde_json::to_value(doc).expect("polytope serializes")
}

/// Reads the JSON written by [`polytope_json`].
pub fn polytope_from_json(value: &serde_json::Value) -> Result<(VPolytope, HPolytope)> {
    let doc: PolytopeDoc = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let coords = doc.coords.iter().map(|c| Partition::parse(c)).collect::<Result<Vec<_>>>()?;
    let rat = |s: &String| s.parse::<BigRational>().map_err(|e| Error::Parse(e.to_string()));
    let int = |s: &String| s.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()));
    let points = doc
        .vertices
        .iter()
        .map(|p| p.iter().map(rat).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let parse_ineq = |i: &InequalityDoc| -> Result<Inequality> {
        Ok(Inequality::new(int(&i.constant)?, i.coeffs.iter().map(int).collect::<Result<_>>()?))
    };
    let ineqs = doc.inequalities.iter().map(parse_ineq).collect::<Result<Vec<_>>>()?;
    let eqs = doc.equations.iter().map(parse_ineq).collect::<Result<Vec<_>>>()?;
    Ok((VPolytope::new(coords.clone(), points), HPolytope::with_equations(coords, ineqs, eqs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(d: usize) -> Vec<Partition> {
        (1..=d).map(|i| Partition::new(vec![i])).collect()
    }

    fn square() -> VPolytope {
        VPolytope::from_integer_points(coords(2), &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
    }

    #[test]
    fn unit_square() {
        let h = hull(&square()).unwrap();
        assert_eq!(h.vertices.points.len(), 4);
        assert_eq!(h.facets.inequalities.len(), 4);
        assert_eq!(h.dimension, 2);
        assert_eq!(lattice_points(&h.facets).unwrap().len(), 4);
    }

    #[test]
    fn interior_points_are_not_vertices() {
        let mut pts = square().points;
        pts.push(vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())]);
        pts.push(integer_point(&[1, 0]));
        let h = hull(&VPolytope::new(coords(2), pts)).unwrap();
        assert_eq!(h.vertices, square());
    }

    #[test]
    fn single_point_and_segment() {
        let p = VPolytope::from_integer_points(coords(3), &[vec![1, 2, 3]]);
        let h = hull(&p).unwrap();
        assert_eq!(h.dimension, 0);
        assert_eq!(h.facets.equations.len(), 3);
        assert_eq!(h.vertices, p);
        assert_eq!(vertices_of(&h.facets).unwrap(), p);
        let seg = VPolytope::from_integer_points(coords(2), &[vec![0, 0], vec![1, 1], vec![3, 3]]);
        let h = hull(&seg).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.vertices.points.len(), 2);
        assert_eq!(lattice_points(&h.facets).unwrap().len(), 4);
    }

    #[test]
    fn simplex_vertices() {
        let mut ineqs: Vec<Inequality> = (0..3)
            .map(|i| {
                let mut c = vec![0; 3];
                c[i] = 1;
                Inequality::from_ints(0, &c)
            })
            .collect();
        ineqs.push(Inequality::from_ints(1, &[-1, -1, -1]));
        let h = HPolytope::new(coords(3), ineqs);
        assert_eq!(vertices_of(&h).unwrap().points.len(), 4);
        let unbounded = HPolytope::new(coords(2), vec![Inequality::from_ints(0, &[1, 0]), Inequality::from_ints(0, &[0, 1])]);
        assert_eq!(vertices_of(&unbounded), Err(Error::Unbounded));
        let empty = HPolytope::new(coords(1), vec![Inequality::from_ints(-1, &[1]), Inequality::from_ints(0, &[-1])]);
        assert!(vertices_of(&empty).is_err());
    }

    #[test]
    fn unit_cube_lattice() {
        let mut ineqs = Vec::new();
        for i in 0..3 {
            let mut c = vec![0; 3];
            c[i] = 1;
            ineqs.push(Inequality::from_ints(0, &c));
            c[i] = -1;
            ineqs.push(Inequality::from_ints(1, &c));
        }
        assert_eq!(lattice_points(&HPolytope::new(coords(3), ineqs)).unwrap().len(), 8);
    }

    #[test]
    fn dilation_and_sums() {
        let seg = VPolytope::from_integer_points(coords(1), &[vec![0], vec![1]]);
        assert_eq!(dilate(&seg, &rational(3)).unwrap(), VPolytope::from_integer_points(coords(1), &[vec![0], vec![3]]));
        assert_eq!(dilate(&square(), &rational(1)).unwrap(), square());
        assert_eq!(minkowski_sum(&square(), &square()).unwrap(), dilate(&square(), &rational(2)).unwrap());
    }

    #[test]
    fn equality_with_certificate() {
        let tri = VPolytope::from_integer_points(coords(2), &[vec![0, 0], vec![1, 0], vec![0, 1]]);
        let e = equal_polytopes(&Polytope::V(square()), &Polytope::V(tri)).unwrap();
        assert!(!e.equal);
        assert!(e.certificate.unwrap().contains("(1,1)"));
        let h = hull(&square()).unwrap().facets;
        assert!(equal_polytopes(&Polytope::V(square()), &Polytope::H(h)).unwrap().equal);
    }

    #[test]
    fn mutation_map() {
        let cs = coords(5);
        let spec = MutationMapSpec {
            mu1: cs[0].clone(),
            mu1_prime: Partition::new(vec![9]),
            neighbors: [Some(cs[1].clone()), Some(cs[2].clone()), Some(cs[3].clone()), Some(cs[4].clone())],
        };
        let (nc, pts) = pl_mutate(&cs, &[integer_point(&[0, 0, 0, 0, 0]), integer_point(&[0, 1, 1, 0, 0])], &spec).unwrap();
        assert_eq!(pts[0], integer_point(&[0, 0, 0, 0, 0]));
        assert_eq!(pts[1][0], rational(1));
        assert_eq!(nc[0], Partition::new(vec![9]));
        let (back_c, back) = pl_mutate(&nc, &pts, &spec.reversed()).unwrap();
        assert_eq!(back_c, cs);
        assert_eq!(back[1], integer_point(&[0, 1, 1, 0, 0]));
    }

    #[test]
    fn json_round_trip() {
        let h = hull(&square()).unwrap();
        let j = polytope_json(&h.vertices, &h.facets);
        assert_eq!(j["vertices"].as_array().unwrap().len(), 4);
        let (v, f) = polytope_from_json(&j).unwrap();
        assert_eq!(v, h.vertices);
        assert_eq!(f.sorted(), h.facets.sorted());
    }
}
