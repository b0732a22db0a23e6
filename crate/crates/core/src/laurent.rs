//! Exact Laurent polynomials with big-integer coefficients.
//!
//! Variables are the face variables `x[λ]`, the Plücker variables `p[λ]` and the quantum
//! parameter `q`. A polynomial is a sparse map from monomials to nonzero coefficients, so equal
//! polynomials have equal representations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(Partition),
    P(Partition),
    Q,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(l) => write!(f, "x{l}"),
            Var::P(l) => write!(f, "p{l}"),
            Var::Q => f.write_str("q"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(Var::Q);
        }
        let (head, rest) = s.split_at(s.len().min(1));
        let label = Partition::parse(rest)?;
        match head {
            "x" => Ok(Var::X(label)),
            "p" => Ok(Var::P(label)),
            _ => Err(Error::Parse(format!("unknown variable {s:?}"))),
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A product of variables with nonzero integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<Var, i32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self(BTreeMap::from([(v, 1)]))
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut m = Self::one();
        for (v, e) in exps {
            m.bump(v, e);
        }
        m
    }

    fn bump(&mut self, v: Var, e: i32) {
        if e == 0 {
            return;
        }
        let slot = self.0.entry(v.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&v);
        }
    }

    pub fn exponent(&self, v: &Var) -> i32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<Var, i32> {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (v, &e) in &other.0 {
            out.bump(v.clone(), e);
        }
        out
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, &e)| (v.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, &e)| (v.clone(), e * k)).collect())
    }

    /// Divides `other` into `self` when the quotient has no negative exponents.
    fn div_polynomial(&self, other: &Monomial) -> Option<Monomial> {
        let q = self.mul(&other.inverse());
        q.0.values().all(|&e| e >= 0).then_some(q)
    }

    /// Exponents along `order`.
    pub fn vector(&self, order: &[Var]) -> Vec<i32> {
        order.iter().map(|v| self.exponent(v)).collect()
    }

    /// Lexicographic monomial order in which the smallest variable is the most significant.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let vars: BTreeSet<&Var> = self.0.keys().chain(other.0.keys()).collect();
        for v in vars {
            match self.exponent(v).cmp(&other.exponent(v)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn write_factors(f: &mut fmt::Formatter<'_>, factors: &[(&Var, i32)]) -> fmt::Result {
        for (i, (v, e)) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn x(label: Partition) -> Self {
        Self::var(Var::X(label))
    }

    pub fn p(label: Partition) -> Self {
        Self::var(Var::P(label))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c.into());
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The single monomial of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.keys().cloned()).collect()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Smallest and largest exponent of `v` over all terms.
    pub fn exponent_range(&self, v: &Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    /// Nonnegative power, or any power of a monomial with unit coefficient.
    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return Self::one().exact_div(&self.pow(-k)?);
        }
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if let Some((m, c)) = divisor.as_monomial() {
            let inv = m.inverse();
            let mut out = Self::zero();
            for (t, x) in &self.terms {
                let (q, r) = x.div_rem(c);
                if !r.is_zero() {
                    return Err(Error::InexactDivision);
                }
                out.terms.insert(t.mul(&inv), q);
            }
            return Ok(out);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift both sides into the polynomial ring and divide by leading terms.
        let fs = self.min_monomial();
        let gs = divisor.min_monomial();
        let mut rem = self.mul_monomial(&fs.inverse());
        let g = divisor.mul_monomial(&gs.inverse());
        let (g_lead, g_coef) = g.leading_term();
        let (g_lead, g_coef) = (g_lead.clone(), g_coef.clone());
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (r_lead, r_coef) = rem.leading_term();
            let Some(m) = r_lead.div_polynomial(&g_lead) else { return Err(Error::InexactDivision) };
            let (c, r) = r_coef.div_rem(&g_coef);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let step = Self::term(c, m);
            rem = &rem - &(&g * &step);
            quot = &quot + &step;
        }
        Ok(quot.mul_monomial(&fs.mul(&gs.inverse())))
    }

    /// Componentwise minimum of all exponent vectors.
    fn min_monomial(&self) -> Monomial {
        let vars = self.variables();
        Monomial::from_exponents(vars.into_iter().map(|v| {
            let lo = self.terms.keys().map(|m| m.exponent(&v)).min().unwrap_or(0);
            (v, lo)
        }))
    }

    fn leading_term(&self) -> (&Monomial, &BigInt) {
        self.terms
            .iter()
            .max_by(|a, b| a.0.lex_cmp(b.0))
            .expect("nonzero polynomial")
    }

    /// Replaces `v` by `replacement / divisor`. Negative powers of `v` become exact divisions.
    pub fn substitute(&self, v: &Var, replacement: &LaurentPoly, divisor: &LaurentPoly) -> Result<Self> {
        let Some((lo, hi)) = self.exponent_range(v) else {
            return Ok(self.clone());
        };
        if lo == 0 && hi == 0 {
            return Ok(self.clone());
        }
        let mut by_power: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut rest = m.clone();
            rest.bump(v.clone(), -e);
            by_power.entry(e).or_default().add_term(rest, c.clone());
        }
        let mut num = Self::zero();
        for (e, coeff) in by_power {
            let r = replacement.pow(e - lo)?;
            let d = divisor.pow(hi - e)?;
            num = &num + &(&coeff * &(&r * &d));
        }
        let num = if lo >= 0 { &num * &replacement.pow(lo)? } else { num.exact_div(&replacement.pow(-lo)?)? };
        if hi >= 0 {
            num.exact_div(&divisor.pow(hi)?)
        } else {
            Ok(&num * &divisor.pow(-hi)?)
        }
    }

    /// Exponent vector along `order` of the term that is lexicographically smallest along `order`.
    pub fn lex_min_term(&self, order: &[Var]) -> Result<Vec<i32>> {
        self.terms
            .keys()
            .map(|m| m.vector(order))
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Exponent vector along `vars` that is componentwise below every term's, if some term has it.
    pub fn strongly_minimal_term(&self, vars: &[Var]) -> Option<Vec<i32>> {
        let vectors: Vec<Vec<i32>> = self.terms.keys().map(|m| m.vector(vars)).collect();
        let first = vectors.first()?;
        let lower: Vec<i32> = (0..vars.len())
            .map(|i| vectors.iter().map(|v| v[i]).min().unwrap_or(first[i]))
            .collect();
        vectors.contains(&lower).then_some(lower)
    }

    /// Exact value at a rational point. Missing variables are an error.
    pub fn evaluate(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, &e) in &m.0 {
                let x = point
                    .get(v)
                    .ok_or_else(|| Error::Consistency(format!("no value for {v}")))?;
                if x.is_zero() && e < 0 {
                    return Err(Error::Consistency(format!("{v} vanishes in a denominator")));
                }
                t *= num_traits::pow::Pow::pow(x, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Renames variables.
    pub fn map_vars(&self, f: impl Fn(&Var) -> Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mm = Monomial::from_exponents(m.0.iter().map(|(v, &e)| (f(v), e)));
            out.add_term(mm, c.clone());
        }
        out
    }

    /// Text form writing every term as a ratio, e.g. `q*p[2]/p[3,3]`.
    pub fn to_ratio_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        struct Ratio<'a>(&'a Monomial, &'a BigInt);
        impl fmt::Display for Ratio<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let num: Vec<(&Var, i32)> = self.0 .0.iter().filter(|(_, &e)| e > 0).map(|(v, &e)| (v, e)).collect();
                let den: Vec<(&Var, i32)> = self.0 .0.iter().filter(|(_, &e)| e < 0).map(|(v, &e)| (v, -e)).collect();
                let c = self.1.abs();
                if num.is_empty() {
                    write!(f, "{c}")?;
                } else {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    Monomial::write_factors(f, &num)?;
                }
                if !den.is_empty() {
                    f.write_str("/")?;
                    if den.len() > 1 || den[0].1 != 1 {
                        f.write_str("(")?;
                        Monomial::write_factors(f, &den)?;
                        f.write_str(")")?;
                    } else {
                        Monomial::write_factors(f, &den)?;
                    }
                }
                Ok(())
            }
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&Ratio(m, c).to_string());
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), i: 0 };
        let f = p.expr()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(Error::Parse(format!("trailing input at byte {} of {text:?}", p.i)));
        }
        Ok(f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.i))
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.i += 1;
                    acc = acc.exact_div(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.skip_ws();
            let neg = self.s.get(self.i) == Some(&b'-');
            if neg {
                self.i += 1;
            }
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.i]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.i += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::constant(self.integer()?)),
            Some(b'q') => {
                self.i += 1;
                Ok(LaurentPoly::q())
            }
            Some(c @ (b'x' | b'p')) => {
                self.i += 1;
                if self.peek() != Some(b'[') {
                    return Err(self.err("expected '['"));
                }
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i] != b']' {
                    self.i += 1;
                }
                if self.i == self.s.len() {
                    return Err(self.err("unterminated label"));
                }
                self.i += 1;
                let label = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                let label = Partition::parse(label)?;
                Ok(if c == b'x' { LaurentPoly::x(label) } else { LaurentPoly::p(label) })
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    exponents: BTreeMap<Var, i32>,
    coeff: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let docs: Vec<TermDoc> = self
            .terms
            .iter()
            .map(|(m, c)| TermDoc { exponents: m.0.clone(), coeff: c.to_string() })
            .collect();
        docs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let docs = Vec::<TermDoc>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for t in docs {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            out.add_term(Monomial::from_exponents(t.exponents), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn x(parts: &[usize]) -> Var {
        Var::X(Partition::new(parts.to_vec()))
    }

    #[test]
    fn ring_basics() {
        assert_eq!(lp("(1+x[1])*(1-x[1])"), lp("1 - x[1]^2"));
        assert_eq!(&lp("x[1] + 3") + &LaurentPoly::zero(), lp("3 + x[1]"));
        assert!(lp("x[1] - x[1]").is_zero());
        assert!(lp("x[2]*x[2]^-1").is_one());
    }

    #[test]
    fn exact_division() {
        assert_eq!(lp("x[2]^2 - x[1]^2").exact_div(&lp("x[2] - x[1]")).unwrap(), lp("x[2] + x[1]"));
        assert_eq!(
            lp("x[2] + x[1]").exact_div(&lp("x[2]*x[1]")).unwrap(),
            lp("x[1]^-1 + x[2]^-1")
        );
        assert_eq!(lp("x[2] + x[1] + 1").exact_div(&lp("x[2] - x[1]")), Err(Error::InexactDivision));
        assert_eq!(lp("3*x[1]").exact_div(&lp("2")), Err(Error::InexactDivision));
        assert_eq!(lp("x[1]").exact_div(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
        let f = lp("x[1]^-2*x[2] + 2*x[3]^-1");
        let g = lp("x[1] + x[3]^-1*x[2] + 1");
        assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn substitution() {
        let p = |s: &[usize]| LaurentPoly::p(Partition::new(s.to_vec()));
        let r = &(&p(&[2]) * &p(&[1, 1])) + &p(&[2, 1]);
        let d = p(&[3]);
        let v = Var::P(Partition::new(vec![1]));
        let out = p(&[1]).substitute(&v, &r, &d).unwrap();
        assert_eq!(out, r.exact_div(&d).unwrap());
        let g = lp("p[2] + q");
        assert_eq!(g.substitute(&v, &r, &d).unwrap(), g);
        // f = (r/d) + d/r... substituting into 1/p[1] needs exact division by r.
        let f = lp("p[1]^-1*(p[2]*p[1,1] + p[2,1])");
        assert_eq!(f.substitute(&v, &r, &d).unwrap(), d);
    }

    #[test]
    fn minimal_terms() {
        let order = vec![x(&[3, 3]), x(&[2, 2]), x(&[1, 1]), x(&[3]), x(&[2]), x(&[1])];
        let p24 = lp("x[3]*x[2,2]*x[3,3]*(1+x[2])");
        assert_eq!(p24.lex_min_term(&order).unwrap(), vec![1, 1, 0, 1, 0, 0]);
        let p25 = lp("x[3]*x[1,1]*x[2,2]*x[3,3]*(1+x[2]+x[1]*x[2])");
        assert_eq!(p25.lex_min_term(&order).unwrap(), vec![1, 1, 1, 1, 0, 0]);
        assert_eq!(lp("1 + x[1]").strongly_minimal_term(&[x(&[1])]), Some(vec![0]));
        assert_eq!(lp("x[1] + x[2]").strongly_minimal_term(&[x(&[1]), x(&[2])]), None);
        assert_eq!(lp("x[1]").lex_min_term(&[x(&[1])]).unwrap(), vec![1]);
        assert!(LaurentPoly::zero().lex_min_term(&order).is_err());
    }

    #[test]
    fn text_and_json() {
        let f = lp("q*p[2]/p[3,3] + p[1] + 2*p[2,1]/(p[1]*p[2])");
        assert_eq!(LaurentPoly::parse(&f.to_string()).unwrap(), f);
        assert_eq!(LaurentPoly::parse(&f.to_ratio_string()).unwrap(), f);
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&j).unwrap(), f);
        assert!(j.contains("\"coeff\":\"2\""));
        assert_eq!("x[]".parse::<Var>().unwrap(), Var::X(Partition::empty()));
    }

    #[test]
    fn evaluation() {
        let f = lp("x[1]^-1 + 2*x[2]");
        let pt = BTreeMap::from([
            (x(&[1]), BigRational::new(2.into(), 3.into())),
            (x(&[2]), BigRational::from_integer(5.into())),
        ]);
        assert_eq!(f.evaluate(&pt).unwrap(), BigRational::new(23.into(), 2.into()));
    }
}
