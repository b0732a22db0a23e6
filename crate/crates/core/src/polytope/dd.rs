//! Extreme rays of pointed polyhedral cones `{y : R y >= 0}` by double description over the
//! integers, plus the small amount of exact linear algebra the polytope code needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the gcd of the entries.
pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Clears denominators and makes the vector primitive; the sign is preserved.
pub(crate) fn integer_row(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect())
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    rref(&mut m).len()
}

/// Extreme rays of `{y : row . y >= 0 for every row}` as primitive integer vectors.
/// Rows are processed in lexicographic order. Fails if the cone contains a line.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut rows: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    rows.sort();
    rows.dedup();
    // Greedy basis of independent rows.
    let mut basis: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vec<BigRational>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = echelon.clone();
        trial.push(r.iter().map(|x| BigRational::from_integer(x.clone())).collect());
        if rref(&mut trial).len() > echelon.len() {
            echelon = trial;
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::Unbounded);
    }
    // Rays of the simplicial cone are the columns of the inverse of the basis matrix.
    let mut aug: Vec<Vec<BigRational>> = basis
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let mut row: Vec<BigRational> = rows[i].iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..dim).map(|j| if j == k { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    rref(&mut aug);
    let nrows = rows.len();
    let mut rays: Vec<(Vec<BigInt>, Bits)> = (0..dim)
        .map(|j| {
            let col: Vec<BigRational> = (0..dim).map(|i| aug[i][dim + j].clone()).collect();
            let ray = integer_row(&col);
            let mut z = Bits::new(nrows);
            for (k, &i) in basis.iter().enumerate() {
                if k != j {
                    z.set(i);
                }
            }
            (ray, z)
        })
        .collect();
    for (i, h) in rows.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|(r, _)| dot(h, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();
        let mut next: Vec<(Vec<BigInt>, Bits)> = Vec::new();
        for (j, (r, z)) in rays.iter().enumerate() {
            if !vals[j].is_negative() {
                let mut z = z.clone();
                if vals[j].is_zero() {
                    z.set(i);
                }
                next.push((r.clone(), z));
            }
        }
        let need = dim.saturating_sub(2);
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].1.and(&rays[n].1);
                if common.count() < need {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|t| t == p || t == n || !common.subset_of(&rays[t].1));
                if !adjacent {
                    continue;
                }
                let combo: Vec<BigInt> = rays[n]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(x, y)| &vals[p] * x - &vals[n] * y)
                    .collect();
                let mut z = common;
                z.set(i);
                next.push((primitive(combo), z));
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
