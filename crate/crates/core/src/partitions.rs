//! Young diagrams in the `(n-k) x k` rectangle and their subset encodings.
//!
//! The south-east border of a diagram is walked from the north-east to the south-west corner
//! of the rectangle; the `n` steps are labelled `1..=n` in that order. South steps give the
//! `(n-k)`-subset used on the A-model side, west steps the `k`-subset used on the B-model side.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape data of the pair `Gr_{n-k}(C^n)` / `Gr_k((C^n)^*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrassmannShape {
    pub k: usize,
    pub n: usize,
}

impl GrassmannShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidShape { k, n });
        }
        Ok(Self { k, n })
    }

    /// Number of rows of the rectangle, `n - k`.
    pub fn rows(&self) -> usize {
        self.n - self.k
    }

    /// Number of columns of the rectangle, `k`.
    pub fn cols(&self) -> usize {
        self.k
    }

    /// Dimension `N = k(n-k)`.
    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.rows() && lambda.parts.first().is_none_or(|&p| p <= self.cols())
    }

    /// All diagrams of `P_{k,n}`, in the default column order.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.rows());
        enumerate_partitions(self.rows(), self.cols(), &mut current, &mut out);
        out.sort_by(Partition::column_order);
        out
    }

    /// The nonempty rectangles `i x j` with `i <= n-k`, `j <= k`.
    pub fn rectangles(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                out.push(Partition::rectangle(i, j));
            }
        }
        out.sort_by(Partition::column_order);
        out
    }

    /// The trip permutation `pi_{k,n} = (n-k+1, ..., n, 1, ..., n-k)`, one-based.
    pub fn trip_permutation(&self) -> Vec<usize> {
        (1..=self.n).map(|i| (i - 1 + self.rows()) % self.n + 1).collect()
    }

    /// The subset `{1, ..., n-k}`, the source set of the preferred orientations.
    pub fn initial_subset(&self) -> IndexSubset {
        IndexSubset((1..=self.rows()).collect())
    }

    /// All subsets of `[n]` of the given size, in lexicographic order.
    pub fn subsets(&self, size: usize) -> Vec<IndexSubset> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(size);
        choose(1, self.n, size, &mut cur, &mut out);
        out
    }
}

fn choose(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSubset>) {
    if cur.len() == size {
        out.push(IndexSubset(cur.clone()));
        return;
    }
    for x in start..=n {
        if n - x + 1 < size - cur.len() {
            break;
        }
        cur.push(x);
        choose(x + 1, n, size, cur, out);
        cur.pop();
    }
}

fn enumerate_partitions(rows: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition::new(cur.clone()));
    if cur.len() == rows {
        return;
    }
    let bound = cur.last().copied().unwrap_or(max_part);
    for p in 1..=bound {
        cur.push(p);
        enumerate_partitions(rows, max_part, cur, out);
        cur.pop();
    }
}

/// A Young diagram stored as its weakly decreasing nonzero parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The `rows x cols` rectangle; empty if either side is zero.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            Self::empty()
        } else {
            Self { parts: vec![cols; rows] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `Some((rows, cols))` when the diagram is a nonempty rectangle.
    pub fn as_rectangle(&self) -> Option<(usize, usize)> {
        let first = *self.parts.first()?;
        self.parts.iter().all(|&p| p == first).then_some((self.parts.len(), first))
    }

    /// True if `other` is obtained from `self` by adding exactly one box.
    pub fn covered_by(&self, other: &Partition) -> bool {
        if other.size() != self.size() + 1 {
            return false;
        }
        let len = self.len().max(other.len());
        (0..len).all(|i| self.part(i) <= other.part(i))
    }

    /// Default variable order: more rows first, then parts in decreasing lexicographic order.
    /// For `P_{3,5}` this gives `(3,3) < (2,2) < (1,1) < (3) < (2) < (1)`.
    pub fn column_order(a: &Partition, b: &Partition) -> Ordering {
        b.len().cmp(&a.len()).then_with(|| b.parts.cmp(&a.parts))
    }

    fn check_fits(&self, shape: &GrassmannShape) -> Result<()> {
        if shape.contains(self) {
            Ok(())
        } else {
            Err(Error::PartitionDoesNotFit(self.clone(), shape.rows(), shape.cols()))
        }
    }

    /// Steps of the border path, `true` for a south step.
    fn border_steps(&self, shape: &GrassmannShape) -> Vec<bool> {
        let mut x = shape.cols();
        let mut y = 0;
        let mut steps = Vec::with_capacity(shape.n);
        for _ in 0..shape.n {
            if y < shape.rows() && self.part(y) == x {
                steps.push(true);
                y += 1;
            } else {
                steps.push(false);
                x -= 1;
            }
        }
        steps
    }

    /// The `(n-k)`-subset of south-step labels.
    pub fn south_subset(&self, shape: &GrassmannShape) -> Result<IndexSubset> {
        self.check_fits(shape)?;
        let steps = self.border_steps(shape);
        Ok(IndexSubset((1..=shape.n).filter(|&i| steps[i - 1]).collect()))
    }

    /// The `k`-subset of west-step labels.
    pub fn west_subset(&self, shape: &GrassmannShape) -> Result<IndexSubset> {
        self.check_fits(shape)?;
        let steps = self.border_steps(shape);
        Ok(IndexSubset((1..=shape.n).filter(|&i| !steps[i - 1]).collect()))
    }

    /// Inverse of [`Partition::south_subset`].
    pub fn from_south(subset: &IndexSubset, shape: &GrassmannShape) -> Result<Self> {
        subset.check(shape, shape.rows())?;
        let mut parts = Vec::with_capacity(shape.rows());
        let mut x = shape.cols();
        for i in 1..=shape.n {
            if subset.contains(i) {
                parts.push(x);
            } else {
                x -= 1;
            }
        }
        Ok(Self::new(parts))
    }

    /// Inverse of [`Partition::west_subset`].
    pub fn from_west(subset: &IndexSubset, shape: &GrassmannShape) -> Result<Self> {
        subset.check(shape, shape.k)?;
        Self::from_south(&subset.complement(shape.n), shape)
    }

    /// Parses `3,3`, `[3,3]`, `(3,3)` or the empty string / `[]` / `0`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if trimmed.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{text:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let p = Self::new(parts.clone());
        let mut sorted = parts;
        sorted.retain(|&x| x > 0);
        if sorted != p.parts {
            return Err(Error::Parse(format!("{text:?} is not weakly decreasing")));
        }
        Ok(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// A strictly increasing subset of `[n]`, one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSubset(Vec<usize>);

impl IndexSubset {
    /// Sorts and deduplicates the given elements.
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn complement(&self, n: usize) -> Self {
        Self((1..=n).filter(|&i| !self.contains(i)).collect())
    }

    pub fn minus(&self, other: &IndexSubset) -> Self {
        Self(self.0.iter().copied().filter(|&i| !other.contains(i)).collect())
    }

    fn check(&self, shape: &GrassmannShape, size: usize) -> Result<()> {
        if self.len() != size {
            return Err(Error::WrongCardinality { expected: size, got: self.len() });
        }
        match self.0.iter().find(|&&i| i == 0 || i > shape.n) {
            Some(&bad) => Err(Error::SubsetOutOfRange(bad, shape.n)),
            None => Ok(()),
        }
    }

    /// Cyclic interval `[start, start+len-1]` reduced into `1..=n`.
    pub fn cyclic_interval(start: usize, len: usize, n: usize) -> Self {
        Self::new((0..len).map(|d| (start + d - 1) % n + 1).collect())
    }

    /// Parses `2,4`, `{2,4}` or `24` (single digits only for the compact form).
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches(['{', '[']).trim_end_matches(['}', ']']);
        let elems: Result<Vec<usize>> = if trimmed.contains(',') {
            trimmed
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{text:?}: {e}"))))
                .collect()
        } else {
            trimmed
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(text.to_string())))
                .collect()
        };
        Ok(Self::new(elems?))
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

/// Frozen data for index `i`: `J_i`, `J_i^+` and their diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrozenLabel {
    pub i: usize,
    pub j: IndexSubset,
    pub j_plus: IndexSubset,
    pub mu: Partition,
    pub mu_plus: Partition,
}

/// `J_i = [i+1, i+k]` and `J_i^+ = [i+1, i+k-1] ∪ {i+k+1}` (cyclic), for `i = 1..=n`.
pub fn frozen_labels(shape: &GrassmannShape) -> Vec<FrozenLabel> {
    let (k, n) = (shape.k, shape.n);
    (1..=n)
        .map(|i| {
            let j = IndexSubset::cyclic_interval(i + 1, k, n);
            let mut plus = IndexSubset::cyclic_interval(i + 1, k - 1, n).0;
            plus.push((i + k) % n + 1);
            let j_plus = IndexSubset::new(plus);
            let mu = Partition::from_west(&j, shape).expect("cyclic interval has k elements");
            let mu_plus = Partition::from_west(&j_plus, shape).expect("J_i^+ has k elements");
            FrozenLabel { i, j, j_plus, mu, mu_plus }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> IndexSubset {
        IndexSubset::new(v.to_vec())
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn border_examples() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        assert_eq!(Partition::empty().south_subset(&sh).unwrap(), s(&[4, 5]));
        assert_eq!(p(&[3, 3]).south_subset(&sh).unwrap(), s(&[1, 2]));
        assert_eq!(Partition::empty().west_subset(&sh).unwrap(), s(&[1, 2, 3]));
        assert_eq!(Partition::from_south(&s(&[1, 2]), &sh).unwrap(), p(&[3, 3]));
        assert_eq!(Partition::from_south(&s(&[4, 5]), &sh).unwrap(), Partition::empty());
    }

    #[test]
    fn one_row_rectangle_is_shifted_interval() {
        for (k, n) in [(2, 4), (3, 5), (3, 6), (5, 9)] {
            let sh = GrassmannShape::new(k, n).unwrap();
            let expected: Vec<usize> = (2..=k + 1).collect();
            assert_eq!(Partition::rectangle(1, k).west_subset(&sh).unwrap(), s(&expected));
        }
    }

    #[test]
    fn cluster_labels_of_running_example() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        let got: Vec<IndexSubset> = [p(&[]), p(&[1]), p(&[2]), p(&[3]), p(&[1, 1]), p(&[2, 2]), p(&[3, 3])]
            .iter()
            .map(|l| l.west_subset(&sh).unwrap())
            .collect();
        let want = [s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[2, 3, 4]), s(&[1, 2, 5]), s(&[1, 4, 5]), s(&[3, 4, 5])];
        assert_eq!(got, want);
    }

    #[test]
    fn bijections_and_complements() {
        for (k, n) in [(1, 3), (2, 4), (3, 5), (2, 5), (3, 6), (4, 7)] {
            let sh = GrassmannShape::new(k, n).unwrap();
            let parts = sh.partitions();
            assert_eq!(parts.len(), binomial(n, k));
            let mut souths = Vec::new();
            for l in &parts {
                let so = l.south_subset(&sh).unwrap();
                let we = l.west_subset(&sh).unwrap();
                assert_eq!(so.len(), n - k);
                assert_eq!(we, so.complement(n));
                assert_eq!(&Partition::from_south(&so, &sh).unwrap(), l);
                assert_eq!(&Partition::from_west(&we, &sh).unwrap(), l);
                souths.push(so);
            }
            souths.sort();
            assert_eq!(souths, sh.subsets(n - k));
        }
    }

    #[test]
    fn round_trip_from_subsets() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        for j in sh.subsets(2) {
            let l = Partition::from_south(&j, &sh).unwrap();
            assert_eq!(l.south_subset(&sh).unwrap(), j);
        }
    }

    #[test]
    fn errors() {
        let sh = GrassmannShape::new(2, 4).unwrap();
        assert!(matches!(p(&[3]).south_subset(&sh), Err(Error::PartitionDoesNotFit(..))));
        assert!(matches!(p(&[1, 1, 1]).west_subset(&sh), Err(Error::PartitionDoesNotFit(..))));
        assert!(matches!(Partition::from_south(&s(&[1]), &sh), Err(Error::WrongCardinality { .. })));
        assert!(matches!(Partition::from_south(&s(&[1, 5]), &sh), Err(Error::SubsetOutOfRange(5, 4))));
        assert!(GrassmannShape::new(0, 3).is_err());
        assert!(GrassmannShape::new(3, 3).is_err());
    }

    #[test]
    fn frozen_examples() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        let fl = frozen_labels(&sh);
        assert_eq!(fl[0].j, s(&[2, 3, 4]));
        assert_eq!(fl[0].mu, p(&[3]));
        assert_eq!(fl[1].mu, p(&[3, 3]));
        assert_eq!(fl[1].mu_plus, p(&[2]));
        let sh = GrassmannShape::new(2, 4).unwrap();
        let fl = frozen_labels(&sh);
        assert_eq!(fl[3].j, s(&[1, 2]));
        assert_eq!(fl[3].mu, Partition::empty());
    }

    #[test]
    fn frozen_rectangles_and_boxes() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 5), (3, 6), (5, 9)] {
            let sh = GrassmannShape::new(k, n).unwrap();
            let a = sh.rows();
            for fl in frozen_labels(&sh) {
                let i = fl.i;
                let want = if i <= a { Partition::rectangle(i, k) } else { Partition::rectangle(a, n - i) };
                assert_eq!(fl.mu, want, "mu_{i} for ({k},{n})");
                if i == a {
                    assert_eq!(fl.mu_plus, Partition::rectangle(a - 1, k - 1));
                } else {
                    assert!(fl.mu.covered_by(&fl.mu_plus), "mu_{i}^+ for ({k},{n})");
                }
            }
        }
    }

    #[test]
    fn column_order_matches_table() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        let got = sh.rectangles();
        assert_eq!(got, vec![p(&[3, 3]), p(&[2, 2]), p(&[1, 1]), p(&[3]), p(&[2]), p(&[1])]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("[3,3]").unwrap(), p(&[3, 3]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(IndexSubset::parse("{2,4}").unwrap(), s(&[2, 4]));
        assert_eq!(IndexSubset::parse("35").unwrap(), s(&[3, 5]));
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
