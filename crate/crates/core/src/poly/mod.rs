//! Exact multivariate polynomials over `Q` in the coordinates of a generic
//! symmetric matrix `x[i,j]`, a generic skew matrix `y[a,b]` and auxiliary
//! variables `t1, t2, …`.

mod parse;
mod polarize;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use polarize::Polarization;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Degree reverse lexicographic, `x` variables most significant.
    #[default]
    Degrevlex,
    /// Pure lexicographic, `x` before `y` before `t`.
    Lex,
    /// Block order eliminating the auxiliary variables: degrevlex on the `t`
    /// block first, ties broken by degrevlex on the `x`/`y` block.
    Elim,
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" => Ok(Self::Degrevlex),
            "lex" => Ok(Self::Lex),
            "elim" => Ok(Self::Elim),
            _ => Err(Error::Parse(format!("unknown monomial order `{s}`"))),
        }
    }
}

/// A named variable. Indices are 1-based as in the text grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize, usize),
    Y(usize, usize),
    T(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i, j) => write!(f, "x[{i},{j}]"),
            Var::Y(a, b) => write!(f, "y[{a},{b}]"),
            Var::T(k) => write!(f, "t{k}"),
        }
    }
}

/// `B(Q^(r|s))[t1..ta] = Q[x[i,j] (i ≤ j ≤ r), y[a,b] (a < b ≤ s), t_k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub sym: usize,
    pub skew: usize,
    #[serde(default)]
    pub aux: usize,
    #[serde(default)]
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(sym: usize, skew: usize, aux: usize, order: MonomialOrder) -> Self {
        Self { sym, skew, aux, order }
    }

    pub fn sym_vars(&self) -> usize {
        self.sym * (self.sym + 1) / 2
    }

    pub fn skew_vars(&self) -> usize {
        self.skew * self.skew.saturating_sub(1) / 2
    }

    pub fn nvars(&self) -> usize {
        self.sym_vars() + self.skew_vars() + self.aux
    }

    pub fn with_aux(&self, aux: usize) -> Ring {
        Ring { aux, ..*self }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring { order, ..*self }
    }

    /// Position of a canonical variable (`i ≤ j` for `x`, `a < b` for `y`).
    pub fn index(&self, v: Var) -> Result<usize> {
        let oob = || Error::Index(format!("{v} is not a variable of {self}"));
        match v {
            Var::X(i, j) => {
                if i < 1 || i > j || j > self.sym {
                    return Err(oob());
                }
                let r = self.sym;
                // rows 1..i-1 contribute r, r-1, ..., r-i+2 entries
                Ok((i - 1) * (2 * r + 2 - i) / 2 + (j - i))
            }
            Var::Y(a, b) => {
                if a < 1 || a >= b || b > self.skew {
                    return Err(oob());
                }
                let s = self.skew;
                let row_start = (a - 1) * (2 * s - a) / 2;
                Ok(self.sym_vars() + row_start + (b - a - 1))
            }
            Var::T(k) => {
                if k < 1 || k > self.aux {
                    return Err(oob());
                }
                Ok(self.sym_vars() + self.skew_vars() + k - 1)
            }
        }
    }

    pub fn var(&self, idx: usize) -> Var {
        self.vars()[idx]
    }

    /// All variables in canonical order.
    pub fn vars(&self) -> Vec<Var> {
        let mut out = Vec::with_capacity(self.nvars());
        for i in 1..=self.sym {
            for j in i..=self.sym {
                out.push(Var::X(i, j));
            }
        }
        for a in 1..=self.skew {
            for b in a + 1..=self.skew {
                out.push(Var::Y(a, b));
            }
        }
        for k in 1..=self.aux {
            out.push(Var::T(k));
        }
        out
    }

    pub fn is_aux(&self, idx: usize) -> bool {
        idx >= self.sym_vars() + self.skew_vars()
    }

    /// Compares two monomials of this ring under its order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::Degrevlex => degrevlex(&a.exps, &b.exps, a.deg, b.deg),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elim => {
                let split = self.sym_vars() + self.skew_vars();
                let (am, at) = a.exps.split_at(split);
                let (bm, bt) = b.exps.split_at(split);
                let adt: u32 = at.iter().map(|&e| u32::from(e)).sum();
                let bdt: u32 = bt.iter().map(|&e| u32::from(e)).sum();
                degrevlex(at, bt, adt, bdt).then_with(|| degrevlex(am, bm, a.deg - adt, b.deg - bdt))
            }
        }
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        parse::parse(*self, text)
    }
}

fn degrevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}|{})", self.sym, self.skew)?;
        if self.aux > 0 {
            write!(f, "[t1..t{}]", self.aux)?;
        }
        Ok(())
    }
}

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { deg: 0, exps: vec![0; nvars] }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| u32::from(e)).sum();
        Self { deg, exps }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[idx] = 1;
        m.deg = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let e16 = u16::try_from(e).expect("exponent overflow");
        Monomial { deg: self.deg * e, exps: self.exps.iter().map(|a| a * e16).collect() }
    }
}

/// A polynomial in a [`Ring`]. Terms are kept sorted in decreasing monomial
/// order with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero(ring: Ring) -> Self {
        Self { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Self { ring, terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: Ring, v: Var) -> Result<Self> {
        let idx = ring.index(v)?;
        Ok(Self::var_at(ring, idx))
    }

    pub fn var_at(ring: Ring, idx: usize) -> Self {
        Self { ring, terms: vec![(Monomial::var(ring.nvars(), idx), Rational::one())] }
    }

    /// `x[i,j]` with indices in either order.
    pub fn x(ring: Ring, i: usize, j: usize) -> Self {
        Self::var(ring, Var::X(i.min(j), i.max(j))).expect("x index in range")
    }

    /// `y[a,b]` with skew normalization: `y[b,a] = -y[a,b]`, `y[a,a] = 0`.
    pub fn y(ring: Ring, a: usize, b: usize) -> Self {
        match a.cmp(&b) {
            Ordering::Equal => Self::zero(ring),
            Ordering::Less => Self::var(ring, Var::Y(a, b)).expect("y index in range"),
            Ordering::Greater => -Self::var(ring, Var::Y(b, a)).expect("y index in range"),
        }
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exps.len(), ring.nvars());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Self { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.deg).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.deg == w[1].0.deg)
    }

    /// Degree in the variable at `idx`.
    pub fn degree_in(&self, idx: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exps[idx]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Poly { ring: self.ring, terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        // multiplying by a monomial preserves a monomial order
        Poly { ring: self.ring, terms }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let ring = self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Poly { ring, terms: out }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.ring));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ring = self.ring;
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Ok(Poly { ring, terms })
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring homomorphism into `target` determined by variable images.
    pub fn subst_hom(&self, target: Ring, images: &BTreeMap<Var, Poly>) -> Result<Poly> {
        if images.values().any(|p| p.ring != target) {
            return Err(Error::RingMismatch);
        }
        let vars = self.ring.vars();
        let mut out = Poly::zero(target);
        let mut powers: HashMap<(usize, u16), Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (idx, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images
                    .get(&vars[idx])
                    .ok_or_else(|| Error::MissingImage(vars[idx].to_string()))?;
                let p = powers.entry((idx, e)).or_insert_with(|| img.pow(u32::from(e)));
                term = &term * p;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Moves the polynomial into a ring containing all of its variables
    /// (for example the same ring with extra auxiliary variables or another
    /// order).
    pub fn to_ring(&self, target: Ring) -> Result<Poly> {
        let vars = self.ring.vars();
        let map: Vec<usize> = vars.iter().map(|&v| target.index(v)).collect::<Result<_>>()?;
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; n];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] = e;
            }
            (Monomial { deg: m.deg, exps }, c.clone())
        });
        Ok(Poly::from_terms(target, terms))
    }

    /// Evaluates at a point given by one rational per variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), usize::from(e));
                }
            }
            total += v;
        }
        total
    }

    /// Partial derivative with respect to the variable at `idx`.
    pub fn derivative(&self, idx: usize) -> Poly {
        let terms = self.terms.iter().filter(|(m, _)| m.exps[idx] > 0).map(|(m, c)| {
            let mut exps = m.exps.clone();
            let e = exps[idx];
            exps[idx] -= 1;
            (Monomial { deg: m.deg - 1, exps }, c * rat(i64::from(e)))
        });
        Poly::from_terms(self.ring, terms)
    }

    /// Clears denominators and divides by the content; sign is chosen so
    /// that the leading coefficient is positive.
    pub fn primitive_integer(&self) -> Vec<(Monomial, BigInt)> {
        use num_integer::Integer;
        let lcm = self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.terms.iter().map(|(_, c)| (c * &lcm).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Vec::new();
        }
        if ints[0].is_negative() {
            g = -g;
        }
        self.terms.iter().zip(ints).map(|((m, _), c)| (m.clone(), c / &g)).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (idx, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", vars[idx])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    /// Panics on ring mismatch; use [`Poly::checked_add`] to get an error.
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}
