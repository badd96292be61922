//! Integer partitions and the containment lattice.
//!
//! A [`Partition`] is stored in canonical form (weakly decreasing, no
//! trailing zeros), so structural equality is partition equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros. Fails if `parts` is not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part, 0-indexed, with zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `self ⊂ other` in the containment order of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Lattice join (componentwise max).
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.length().max(other.length());
        let parts = (0..n).map(|i| self.part(i).max(other.part(i))).collect();
        Partition { parts }
    }

    /// Lattice meet (componentwise min).
    pub fn intersect(&self, other: &Partition) -> Partition {
        let n = self.length().min(other.length());
        let parts = (0..n).map(|i| self.part(i).min(other.part(i))).collect();
        Partition { parts }
    }

    /// Boxes `(row, col)` (1-indexed) with nothing below or to the right,
    /// ordered by increasing row.
    pub fn corners(&self) -> Result<Vec<(usize, usize)>> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let corners = (0..self.length())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| (i + 1, self.part(i)))
            .collect();
        Ok(corners)
    }

    /// The r×s rectangle: `r` rows of length `s`.
    pub fn rectangle(rows: usize, cols: usize) -> Result<Partition> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyRectangle { rows, cols });
        }
        Ok(Partition { parts: vec![cols; rows] })
    }

    /// Number of distinct corners is one and the partition is nonempty.
    pub fn is_rectangle(&self) -> bool {
        !self.is_empty() && self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn double(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|p| 2 * p).collect() }
    }

    pub fn transpose(&self) -> Partition {
        let parts = (0..self.width())
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of the box in row `i`, column `j` (0-indexed).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Iterator over the boxes `(row, col)`, 0-indexed, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size then reverse lex.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Partitions μ ⊂ self such that self/μ is a horizontal strip.
    pub fn horizontal_strip_removals(&self) -> Vec<Partition> {
        // interlacing: λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ ...
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.length());
        fn go(lam: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.length() {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            for m in lam.part(i + 1)..=lam.part(i) {
                cur.push(m);
                go(lam, i + 1, cur, out);
                cur.pop();
            }
        }
        go(self, 0, &mut cur, &mut out);
        out
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: by size, then lexicographically on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,1`. `0` and the empty string denote the
    /// empty partition; surrounding parentheses are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}
