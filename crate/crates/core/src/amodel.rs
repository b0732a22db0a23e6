//! Valuations of Plücker coordinates in a network chart and the Newton-Okounkov polytope.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::network::NetworkChart;
use crate::partitions::{GrassmannShape, IndexSubset, Partition};
use crate::polytope::{hull, rational, VPolytope};

/// Exponent vector of the lexicographically smallest term, reading `order` as increasing.
pub fn val(f: &LaurentPoly, order: &[Var]) -> Result<Vec<i32>> {
    f.lex_min_term(order)
}

/// `val(f / g) = val(f) - val(g)`.
pub fn val_quotient(f: &LaurentPoly, g: &LaurentPoly, order: &[Var]) -> Result<Vec<i32>> {
    let a = val(f, order)?;
    let b = val(g, order)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationTable {
    pub coords: Vec<Partition>,
    /// One row per `(n-k)`-subset, in lexicographic order of subsets.
    pub rows: Vec<(IndexSubset, Vec<i32>)>,
}

impl ValuationTable {
    pub fn row(&self, j: &IndexSubset) -> Option<&[i32]> {
        self.rows.iter().find(|(s, _)| s == j).map(|(_, v)| v.as_slice())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("J");
        for c in &self.coords {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (j, v) in &self.rows {
            out.push_str(&j.to_string());
            for x in v {
                out.push('\t');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Valuations of every Plücker coordinate. `order` defaults to the chart's column order.
pub fn valuation_table(chart: &NetworkChart, order: Option<&[Partition]>) -> Result<ValuationTable> {
    let coords = match order {
        Some(o) => o.to_vec(),
        None => chart.coordinates(),
    };
    let vars: Vec<Var> = coords.iter().cloned().map(Var::X).collect();
    let rows = chart
        .plucker_table()?
        .into_iter()
        .map(|(j, p)| val(&p, &vars).map(|v| (j, v)))
        .collect::<Result<_>>()?;
    Ok(ValuationTable { coords, rows })
}

fn to_point(v: &[i32]) -> Vec<BigRational> {
    v.iter().map(|&x| rational(i64::from(x))).collect()
}

/// Distinct valuations taken by nonzero elements of the linear span of `polys`, sorted.
pub fn span_valuations(polys: &[LaurentPoly], order: &[Var]) -> Result<Vec<Vec<i32>>> {
    let mut basis: BTreeMap<Vec<i32>, BTreeMap<Vec<i32>, BigRational>> = BTreeMap::new();
    for f in polys {
        let mut row: BTreeMap<Vec<i32>, BigRational> = BTreeMap::new();
        for (m, c) in f.terms() {
            *row.entry(m.vector(order)).or_insert_with(BigRational::zero) += BigRational::from_integer(c.clone());
        }
        row.retain(|_, c| !c.is_zero());
        while let Some((lead, c)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
            let Some(pivot) = basis.get(&lead) else {
                basis.insert(lead, row);
                break;
            };
            let factor = c / &pivot[&lead];
            for (k, v) in pivot {
                let e = row.entry(k.clone()).or_insert_with(BigRational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(k);
                }
            }
        }
    }
    Ok(basis.into_keys().collect())
}

/// Products of `r` Plücker polynomials taken with repetition, in the chart.
pub fn plucker_monomials(chart: &NetworkChart, r: usize) -> Result<Vec<LaurentPoly>> {
    let table: Vec<LaurentPoly> = chart.plucker_table()?.into_iter().map(|(_, p)| p).collect();
    let mut level: Vec<(usize, LaurentPoly)> = vec![(0, LaurentPoly::one())];
    for _ in 0..r {
        let mut next = Vec::new();
        for (start, acc) in &level {
            for (i, p) in table.iter().enumerate().skip(*start) {
                next.push((i, acc * p));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|(_, p)| p).collect())
}

/// All sums of `r` rows taken with repetition.
fn monomial_valuations(rows: &[Vec<i32>], r: usize) -> BTreeSet<Vec<i32>> {
    let dim = rows.first().map_or(0, Vec::len);
    let mut level: BTreeSet<(usize, Vec<i32>)> = BTreeSet::from([(0, vec![0; dim])]);
    for _ in 0..r {
        let mut next = BTreeSet::new();
        for (start, acc) in &level {
            for (i, row) in rows.iter().enumerate().skip(*start) {
                next.insert((i, acc.iter().zip(row).map(|(a, b)| a + b).collect()));
            }
        }
        level = next;
    }
    level.into_iter().map(|(_, v)| v).collect()
}

/// Vertices of `NO^r`, computed from degree-`r` monomials and cross-checked against the
/// `r`-fold dilation of `NO^1`.
pub fn no_polytope(table: &ValuationTable, r: usize) -> Result<VPolytope> {
    if r == 0 {
        return Err(Error::Consistency("the dilation factor must be positive".into()));
    }
    let rows: Vec<Vec<i32>> = table.rows.iter().map(|(_, v)| v.clone()).collect();
    let sums = monomial_valuations(&rows, r);
    let direct = hull(&VPolytope::new(table.coords.clone(), sums.iter().map(|v| to_point(v)).collect()))?.vertices;
    let base = hull(&VPolytope::new(table.coords.clone(), rows.iter().map(|v| to_point(v)).collect()))?.vertices;
    let scale = rational(r as i64);
    let dilated = VPolytope::new(
        table.coords.clone(),
        base.points.iter().map(|p| p.iter().map(|x| x * &scale).collect()).collect(),
    );
    if dilated != direct {
        return Err(Error::Consistency(format!(
            "monomial hull has {} vertices but the dilation has {}",
            direct.points.len(),
            dilated.points.len()
        )));
    }
    Ok(direct)
}

/// Hull of the valuations of the whole degree-`r` span, without the monomial shortcut.
pub fn span_no_polytope(chart: &NetworkChart, r: usize) -> Result<VPolytope> {
    let coords = chart.coordinates();
    let vals = span_valuations(&plucker_monomials(chart, r)?, &chart.variables())?;
    Ok(hull(&VPolytope::new(coords, vals.iter().map(|v| to_point(v)).collect()))?.vertices)
}

/// Number of semistandard tableaux of rectangular shape `(n-k) x r` with entries in `1..=n`,
/// counted by direct enumeration.
pub fn representation_dimension(shape: GrassmannShape, r: usize) -> u64 {
    let rows = shape.rows();
    let n = shape.n;
    let mut grid = vec![vec![0usize; r]; rows];
    fill(&mut grid, 0, n)
}

fn fill(grid: &mut Vec<Vec<usize>>, cell: usize, n: usize) -> u64 {
    let cols = grid.first().map_or(0, Vec::len);
    if cols == 0 || cell == grid.len() * cols {
        return 1;
    }
    let (i, j) = (cell / cols, cell % cols);
    let left = if j > 0 { grid[i][j - 1] } else { 1 };
    let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    let mut total = 0;
    for x in left.max(above)..=n {
        grid[i][j] = x;
        total += fill(grid, cell + 1, n);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::rectangles_chart;

    #[test]
    fn val_of_constants_and_quotients() {
        let order = [Var::X(Partition::new(vec![1])), Var::X(Partition::new(vec![2]))];
        assert_eq!(val(&LaurentPoly::one(), &order).unwrap(), vec![0, 0]);
        assert_eq!(val(&LaurentPoly::zero(), &order), Err(Error::ZeroPolynomial));
        let f = LaurentPoly::parse("x[1]*x[2] + x[2]^2").unwrap();
        let g = LaurentPoly::parse("x[2]").unwrap();
        assert_eq!(val(&f, &order).unwrap(), vec![0, 2]);
        assert_eq!(val_quotient(&f, &g, &order).unwrap(), vec![0, 1]);
    }

    #[test]
    fn monomial_sums_with_repetition() {
        let rows = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        assert_eq!(monomial_valuations(&rows, 1).len(), 3);
        assert_eq!(monomial_valuations(&rows, 2).len(), 6);
    }

    #[test]
    fn grid_chart_gr24() {
        let shape = GrassmannShape::new(2, 4).unwrap();
        let table = valuation_table(&rectangles_chart(shape), None).unwrap();
        assert_eq!(table.rows[0].1, vec![0; 4]);
        let no1 = no_polytope(&table, 1).unwrap();
        assert_eq!(no1.points.len(), 6);
        let no2 = no_polytope(&table, 2).unwrap();
        assert_eq!(no2.points.len(), 6);
    }

    #[test]
    fn span_of_grid_chart_matches_monomials() {
        let shape = GrassmannShape::new(2, 4).unwrap();
        let chart = rectangles_chart(shape);
        let table = valuation_table(&chart, None).unwrap();
        for r in 1..=2 {
            assert_eq!(span_no_polytope(&chart, r).unwrap(), no_polytope(&table, r).unwrap());
        }
        let vals = span_valuations(&plucker_monomials(&chart, 2).unwrap(), &chart.variables()).unwrap();
        assert_eq!(vals.len() as u64, representation_dimension(shape, 2));
    }

    #[test]
    fn tableau_counts() {
        let s = GrassmannShape::new(2, 4).unwrap();
        assert_eq!(
            (1..=3).map(|r| representation_dimension(s, r)).collect::<Vec<_>>(),
            vec![6, 20, 50]
        );
        assert_eq!(representation_dimension(GrassmannShape::new(3, 5).unwrap(), 1), 10);
    }
}
