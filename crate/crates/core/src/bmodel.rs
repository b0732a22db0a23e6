//! The superpotential in Plücker form and in cluster charts, and its tropicalization.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};
use crate::partitions::{frozen_labels, GrassmannShape, IndexSubset, Partition};
use crate::plabic::{build_rectangles_graph, PlabicGraph, SquareMoveInfo};
use crate::polytope::{HPolytope, Inequality, MutationMapSpec};

/// One summand `p_{J_m^+} / p_{J_m}` of the Plücker form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerTerm {
    pub m: usize,
    pub numerator: IndexSubset,
    pub denominator: IndexSubset,
    pub numerator_label: Partition,
    pub denominator_label: Partition,
    pub has_q: bool,
}

pub fn superpotential_plucker(shape: GrassmannShape) -> Vec<PluckerTerm> {
    frozen_labels(&shape)
        .into_iter()
        .map(|f| PluckerTerm {
            m: f.i,
            numerator: f.j_plus,
            denominator: f.j,
            numerator_label: f.mu_plus,
            denominator_label: f.mu,
            has_q: f.i == shape.rows(),
        })
        .collect()
}

fn p(mu: Partition) -> Monomial {
    if mu.is_empty() {
        Monomial::one()
    } else {
        Monomial::var(Var::P(mu))
    }
}

/// Node `(i, j)` of the quiver carries `p_{i x j} / p_{(i-1) x (j-1)}`.
fn quiver_node(i: usize, j: usize) -> Monomial {
    p(Partition::rectangle(i, j)).mul(&p(Partition::rectangle(i - 1, j - 1)).inverse())
}

/// The superpotential in the rectangles cluster, one term per arrow of the grid quiver with
/// the extra nodes `1` above the corner and `q` after the last node.
pub fn superpotential_rectangles(shape: GrassmannShape) -> LaurentPoly {
    let (a, k) = (shape.rows(), shape.cols());
    let mut arrows: Vec<Monomial> = vec![quiver_node(1, 1)];
    for i in 1..=a {
        for j in 1..=k {
            if j < k {
                arrows.push(quiver_node(i, j + 1).mul(&quiver_node(i, j).inverse()));
            }
            if i < a {
                arrows.push(quiver_node(i + 1, j).mul(&quiver_node(i, j).inverse()));
            }
        }
    }
    arrows.push(Monomial::var(Var::Q).mul(&quiver_node(a, k).inverse()));
    arrows.into_iter().map(LaurentPoly::monomial).sum()
}

/// Rewrites `w` across a square move using `p_{mu1} p_{mu1'} = p_2 p_4 + p_3 p_5`.
pub fn mutate_superpotential(w: &LaurentPoly, info: &SquareMoveInfo) -> Result<LaurentPoly> {
    let n = &info.neighbors;
    let term = |a: &Partition, b: &Partition| LaurentPoly::monomial(p(a.clone()).mul(&p(b.clone())));
    let replacement = &term(&n[0], &n[2]) + &term(&n[1], &n[3]);
    let out = w.substitute(&Var::P(info.mu1.clone()), &replacement, &LaurentPoly::p(info.mu1_prime.clone()))?;
    if !out.has_nonnegative_coefficients() {
        return Err(Error::NegativeCoefficient);
    }
    Ok(out)
}

/// The coordinate change on valuation space that accompanies `info`.
pub fn mutation_spec(info: &SquareMoveInfo) -> MutationMapSpec {
    let nb = |mu: &Partition| (!mu.is_empty()).then(|| mu.clone());
    MutationMapSpec {
        mu1: info.mu1.clone(),
        mu1_prime: info.mu1_prime.clone(),
        neighbors: std::array::from_fn(|i| nb(&info.neighbors[i])),
    }
}

/// A graph reached from the grid graph by square moves, with the superpotential in its cluster.
#[derive(Clone, Debug)]
pub struct ClusterExpression {
    pub graph: PlabicGraph,
    pub superpotential: LaurentPoly,
    pub moves: Vec<SquareMoveInfo>,
}

/// Follows `path` (labels of mutated faces) from the grid graph, substituting at every step.
pub fn superpotential_in_cluster(shape: GrassmannShape, path: &[Partition]) -> Result<ClusterExpression> {
    let mut graph = build_rectangles_graph(shape).normalized()?;
    let mut w = superpotential_rectangles(shape);
    let mut moves = Vec::with_capacity(path.len());
    for label in path {
        let (next, info) = graph.square_move_at_label(label)?;
        w = mutate_superpotential(&w, &info)?;
        graph = next;
        moves.push(info);
    }
    Ok(ClusterExpression { graph, superpotential: w, moves })
}

/// One inequality `r * deg_q + sum a_mu v_mu >= 0` per term of `w`.
pub fn tropicalize(w: &LaurentPoly, coords: &[Partition], r: u32) -> Result<HPolytope> {
    let index: BTreeMap<&Partition, usize> = coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut ineqs = Vec::with_capacity(w.len());
    for (m, c) in w.terms() {
        if !c.is_positive() {
            return Err(Error::NegativeCoefficient);
        }
        let mut coeffs = vec![BigInt::zero(); coords.len()];
        let mut constant = BigInt::zero();
        for (v, &e) in m.exponents() {
            match v {
                Var::Q => constant = BigInt::from(r) * e,
                Var::P(mu) => {
                    let i = index
                        .get(mu)
                        .ok_or_else(|| Error::DimensionMismatch(format!("p{mu} is not a coordinate")))?;
                    coeffs[*i] = BigInt::from(e);
                }
                Var::X(mu) => return Err(Error::DimensionMismatch(format!("unexpected variable x{mu}"))),
            }
        }
        ineqs.push(Inequality { constant, coeffs });
    }
    Ok(HPolytope::new(coords.to_vec(), ineqs))
}

/// `Q^r` for the graph reached along `path`, in the graph's column order.
pub fn q_polytope(shape: GrassmannShape, path: &[Partition], r: u32) -> Result<HPolytope> {
    let c = superpotential_in_cluster(shape, path)?;
    let coords = c.graph.face_labels()?.nonempty_labels();
    tropicalize(&c.superpotential, &coords, r)
}

/// The form of the superpotential to evaluate.
#[derive(Clone, Copy, Debug)]
pub enum Form<'a> {
    Plucker,
    Rectangles,
    Cluster(&'a LaurentPoly),
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if piv != c {
            a.swap(piv, c);
            sign = -sign;
        }
        for r in c + 1..n {
            for j in c + 1..n {
                a[r][j] = (&a[r][j] * &a[c][c] - &a[r][c] * &a[c][j]) / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// The maximal minor of the `k x n` matrix on columns `cols` (1-based, increasing).
pub fn minor(matrix: &[Vec<BigInt>], cols: &IndexSubset) -> BigInt {
    let sub: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| cols.elements().iter().map(|&c| row[c - 1].clone()).collect())
        .collect();
    determinant(&sub)
}

/// Normalized cluster coordinates `p_mu = Delta_mu / Delta_{1..k}` of the row span of `matrix`.
pub fn cluster_values(
    shape: GrassmannShape,
    matrix: &[Vec<BigInt>],
    labels: &[Partition],
) -> Result<BTreeMap<Var, BigRational>> {
    let base = minor(matrix, &Partition::empty().west_subset(&shape)?);
    if base.is_zero() {
        return Err(Error::VanishingMinor((1..=shape.k).collect()));
    }
    let mut out = BTreeMap::new();
    for mu in labels {
        let j = mu.west_subset(&shape)?;
        let d = minor(matrix, &j);
        if d.is_zero() {
            return Err(Error::VanishingMinor(j.elements().to_vec()));
        }
        out.insert(Var::P(mu.clone()), BigRational::new(d, base.clone()));
    }
    Ok(out)
}

/// Value of the superpotential at the row span of `matrix` with `q = q_val`.
pub fn evaluate_oracle(shape: GrassmannShape, matrix: &[Vec<BigInt>], q_val: &BigRational, form: Form<'_>) -> Result<BigRational> {
    if matrix.len() != shape.k || matrix.iter().any(|r| r.len() != shape.n) {
        return Err(Error::DimensionMismatch(format!("expected a {}x{} matrix", shape.k, shape.n)));
    }
    let expr = match form {
        Form::Plucker => {
            let mut total = BigRational::zero();
            for t in superpotential_plucker(shape) {
                let d = minor(matrix, &t.denominator);
                if d.is_zero() {
                    return Err(Error::VanishingMinor(t.denominator.elements().to_vec()));
                }
                let mut v = BigRational::new(minor(matrix, &t.numerator), d);
                if t.has_q {
                    v *= q_val;
                }
                total += v;
            }
            return Ok(total);
        }
        Form::Rectangles => superpotential_rectangles(shape),
        Form::Cluster(w) => w.clone(),
    };
    let labels: Vec<Partition> = expr
        .variables()
        .into_iter()
        .filter_map(|v| match v {
            Var::P(mu) => Some(mu),
            _ => None,
        })
        .collect();
    let mut point = cluster_values(shape, matrix, &labels)?;
    point.insert(Var::Q, q_val.clone());
    expr.evaluate(&point)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(k: usize, n: usize) -> GrassmannShape {
        GrassmannShape::new(k, n).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn plucker_terms() {
        let t = superpotential_plucker(shape(3, 5));
        assert_eq!(t.len(), 5);
        assert_eq!(t.iter().filter(|t| t.has_q).map(|t| t.m).collect::<Vec<_>>(), vec![2]);
        let t = superpotential_plucker(shape(2, 4));
        assert_eq!(t.len(), 4);
        assert!(t[1].has_q);
    }

    #[test]
    fn rectangles_expression_gr35() {
        let w = superpotential_rectangles(shape(3, 5));
        let expected = LaurentPoly::parse(
            "p[1] + p[1,1]/p[1] + p[2,2]/(p[1]*p[2]) + p[3,3]/(p[2]*p[3]) + p[2]/p[1] + p[3]/p[2] \
             + p[2,2]/(p[1]*p[1,1]) + p[3,3]*p[1]/(p[2]*p[2,2]) + q*p[2]/p[3,3]",
        )
        .unwrap();
        assert_eq!(w, expected);
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6), (4, 7)] {
            let a = n - k;
            assert_eq!(superpotential_rectangles(shape(k, n)).len(), 2 * k * a - k - a + 2);
        }
    }

    #[test]
    fn tropical_inequalities() {
        let coords = vec![part(&[2]), part(&[3, 3])];
        let h = tropicalize(&LaurentPoly::parse("q*p[2]/p[3,3]").unwrap(), &coords, 4).unwrap();
        assert_eq!(h.inequalities, vec![Inequality::from_ints(4, &[1, -1])]);
        let coords = vec![part(&[1])];
        let h = tropicalize(&LaurentPoly::parse("p[1]").unwrap(), &coords, 1).unwrap();
        assert_eq!(h.inequalities, vec![Inequality::from_ints(0, &[1])]);
    }

    #[test]
    fn determinants() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(determinant(&m(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(determinant(&m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), BigInt::from(-2));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn empty_path_keeps_rectangles_form() {
        let c = superpotential_in_cluster(shape(2, 4), &[]).unwrap();
        assert_eq!(c.superpotential, superpotential_rectangles(shape(2, 4)));
    }

    #[test]
    fn forward_and_back() {
        let s = shape(2, 4);
        let c = superpotential_in_cluster(s, &[part(&[1])]).unwrap();
        assert_ne!(c.superpotential, superpotential_rectangles(s));
        let back = superpotential_in_cluster(s, &[part(&[1]), c.moves[0].mu1_prime.clone()]).unwrap();
        assert_eq!(back.superpotential, superpotential_rectangles(s));
    }
}
