//! Finite-length polynomial functors and their evaluation on super vector
//! spaces `Q^(r|s)`.
//!
//! Dimensions are counted with super semistandard tableaux: letters
//! `1..r` are even and must strictly increase down columns, letters
//! `1'..s'` are odd and must strictly increase along rows, and every even
//! letter precedes every odd one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The super vector space `Q^(r|s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperSpace {
    pub even: usize,
    pub odd: usize,
}

impl SuperSpace {
    pub const fn new(even: usize, odd: usize) -> Self {
        Self { even, odd }
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

impl FromStr for SuperSpace {
    type Err = Error;

    /// Accepts `r,s`, `r|s` or `(r|s)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = body.split([',', '|']).map(|t| t.trim().parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(r)), Some(Ok(s)), None) => Ok(SuperSpace::new(r, s)),
            _ => Err(Error::Parse(format!("bad super space `{s}`"))),
        }
    }
}

/// `S_λ(Q^(r|s)) ≠ 0` iff `λ_{r+1} ≤ s`.
pub fn schur_nonzero(lambda: &Partition, space: SuperSpace) -> bool {
    lambda.part(space.even) <= space.odd
}

/// Dimension of `S_λ(Q^(r|s))`, by enumerating super semistandard tableaux.
pub fn schur_dim(lambda: &Partition, space: SuperSpace) -> u64 {
    if !schur_nonzero(lambda, space) {
        return 0;
    }
    let shape = lambda.parts();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&p| vec![0; p]).collect();
    let cells: Vec<(usize, usize)> = lambda.boxes().collect();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        space: SuperSpace,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let letters = space.even + space.odd;
        let left = if j > 0 { Some(grid[i][j - 1]) } else { None };
        let above = if i > 0 { Some(grid[i - 1][j]) } else { None };
        let lo = left.into_iter().chain(above).max().unwrap_or(0);
        let mut total = 0;
        for v in lo..letters {
            let odd = v >= space.even;
            if left == Some(v) && odd {
                continue;
            }
            if above == Some(v) && !odd {
                continue;
            }
            grid[i][j] = v;
            total += fill(k + 1, cells, grid, space);
        }
        total
    }
    fill(0, &cells, &mut grid, space)
}

/// Content vectors of all semistandard tableaux of shape `λ` in letters
/// `1..n`; the multiset of weights of `S_λ(Q^n)`.
pub fn tableau_weights(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> = lambda.boxes().collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == cells.len() {
            let mut w = vec![0; n];
            grid.iter().flatten().for_each(|&v| w[v] += 1);
            out.push(w);
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            grid[i][j] = v;
            fill(k + 1, cells, grid, n, out);
        }
    }
    fill(0, &cells, &mut grid, n, &mut out);
    out
}

/// Kostka number `K_{shape, content}`: semistandard tableaux of the given
/// shape and content. Computed by peeling horizontal strips.
pub fn kostka(shape: &Partition, content: &[usize]) -> u64 {
    match content.split_last() {
        None => u64::from(shape.is_empty()),
        Some((&last, rest)) => {
            if shape.size() != content.iter().sum::<usize>() {
                return 0;
            }
            shape
                .horizontal_strip_removals()
                .iter()
                .filter(|mu| shape.size() - mu.size() == last)
                .map(|mu| kostka(mu, rest))
                .sum()
        }
    }
}

/// `dim S_λ(Q^n)` by the hook-content formula, for arbitrary-precision `n`.
pub fn classical_dim(lambda: &Partition, n: &BigUint) -> BigUint {
    let n = BigInt::from(n.clone());
    let mut num = BigInt::one();
    let mut den = BigUint::one();
    for (i, j) in lambda.boxes() {
        let factor = &n + BigInt::from(j) - BigInt::from(i);
        if !factor.is_positive() {
            return BigUint::zero();
        }
        num *= factor;
        den *= BigUint::from(lambda.hook(i, j));
    }
    num.to_biguint().expect("positive") / den
}

/// `dim S_λ(Q^(0|n))`, which equals `dim S_{λ'}(Q^n)`.
pub fn odd_dim(lambda: &Partition, n: &BigUint) -> BigUint {
    classical_dim(&lambda.transpose(), n)
}

/// A finite-length polynomial functor `⊕ S_λ^{⊕ m_λ}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolyFunctor {
    terms: BTreeMap<Partition, u64>,
}

impl PolyFunctor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::schur_mult(lambda, 1)
    }

    pub fn schur_mult(lambda: Partition, mult: u64) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, mult);
        f
    }

    /// `Sym^n`.
    pub fn sym(n: usize) -> Self {
        Self::schur(Partition::from_unsorted(vec![n]))
    }

    /// `Λ^n`.
    pub fn wedge(n: usize) -> Self {
        Self::schur(Partition::from_unsorted(vec![1; n]))
    }

    pub fn add_term(&mut self, lambda: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(lambda).or_insert(0) += mult;
        }
    }

    pub fn direct_sum(&self, other: &PolyFunctor) -> PolyFunctor {
        let mut out = self.clone();
        for (lam, &m) in &other.terms {
            out.add_term(lam.clone(), m);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|λ|` over the terms; zero for the zero functor.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn maxdeg(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroFunctor);
        }
        Ok(self.degree())
    }

    /// `sup λ_1` over the terms, with the empty supremum taken to be 0.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Partition::width).max().unwrap_or(0)
    }

    pub fn dim(&self, space: SuperSpace) -> u64 {
        self.terms.iter().map(|(l, &m)| m * schur_dim(l, space)).sum()
    }

    /// `dim F(Q^(0|n))` as an exact big integer.
    pub fn odd_dim(&self, n: &BigUint) -> BigUint {
        self.terms
            .iter()
            .map(|(l, &m)| odd_dim(l, n) * BigUint::from(m))
            .sum()
    }

    /// Weight decomposition of `F'(V) = F(Q ⊕ V)` under the `G_m` acting on
    /// the extra line. Weight-`i` pieces come from horizontal strips of size
    /// `i`; the weight-0 piece is `F` itself.
    pub fn shift_decompose(&self) -> BTreeMap<usize, PolyFunctor> {
        let mut out: BTreeMap<usize, PolyFunctor> = BTreeMap::new();
        for (lam, &m) in &self.terms {
            for mu in lam.horizontal_strip_removals() {
                let w = lam.size() - mu.size();
                out.entry(w).or_default().add_term(mu, m);
            }
        }
        out
    }
}

impl fmt::Display for PolyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (lam, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({lam}):{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PolyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PolyFunctor {
    type Err = Error;

    /// `sym:2`, `wedge:2`, `{(3,1):1,(2,2):5}`, or a `+`-separated sum of
    /// these.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad functor `{text}`"));
        let mut total = PolyFunctor::zero();
        for piece in text.split('+') {
            let piece = piece.trim();
            if let Some(n) = piece.strip_prefix("sym:") {
                total = total.direct_sum(&PolyFunctor::sym(n.trim().parse().map_err(|_| bad())?));
            } else if let Some(n) = piece.strip_prefix("wedge:") {
                total = total.direct_sum(&PolyFunctor::wedge(n.trim().parse().map_err(|_| bad())?));
            } else if let Some(body) = piece.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
                let mut rest = body.trim();
                while !rest.is_empty() {
                    let open = rest.strip_prefix('(').ok_or_else(bad)?;
                    let close = open.find(')').ok_or_else(bad)?;
                    let lam: Partition = open[..close].parse()?;
                    let after = open[close + 1..].trim_start().strip_prefix(':').ok_or_else(bad)?;
                    let end = after.find(',').unwrap_or(after.len());
                    let mult: u64 = after[..end].trim().parse().map_err(|_| bad())?;
                    total.add_term(lam, mult);
                    rest = after[end..].trim_start_matches(',').trim();
                }
            } else {
                return Err(bad());
            }
        }
        Ok(total)
    }
}
