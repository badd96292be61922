use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Poly, Rational, Ring};
use crate::error::{Error, Result};

/// Full polarization of a degree-`d` form on symmetric matrices.
///
/// Each matrix argument is split into a pair of vector slots, so there are
/// `2d` slots. The entry for a tuple of basis indices `(i_1, …, i_2d)` is the
/// coefficient of `s_1⋯s_d` in `f(Σ_m s_m ω_m)` where
/// `ω_m = (e_{i_{2m-1}} e_{i_{2m}}ᵀ + e_{i_{2m}} e_{i_{2m-1}}ᵀ)/2`.
/// Summing `entry · Π_m x[i_{2m-1}, i_{2m}]` over all tuples gives back
/// `restitution_factor · f` with `restitution_factor = d!`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polarization {
    pub dim: usize,
    pub slots: usize,
    pub restitution_factor: BigInt,
    pub table: BTreeMap<Vec<usize>, Rational>,
}

impl Poly {
    /// Polarizes `self`, which must be a form of degree `slots / 2` in the
    /// `x` variables only.
    pub fn polarize(&self, slots: usize) -> Result<Polarization> {
        let ring = *self.ring();
        let nsym = ring.sym_vars();
        let in_sym = self
            .terms()
            .iter()
            .all(|(m, _)| m.exps()[nsym..].iter().all(|&e| e == 0));
        if !in_sym || !self.is_homogeneous() || slots % 2 == 1 {
            return Err(Error::NotHomogeneous);
        }
        let d = slots / 2;
        if d == 0 || self.degree().is_some_and(|deg| deg as usize != d) {
            return Err(Error::NotHomogeneous);
        }
        let vars = ring.vars();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut table: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (m, c) in self.terms() {
            // factors of the monomial as (i, j) index pairs
            let mut factors = Vec::with_capacity(d);
            for (idx, &e) in m.exps().iter().enumerate() {
                if let super::Var::X(i, j) = vars[idx] {
                    factors.extend(std::iter::repeat_n((i, j), usize::from(e)));
                }
            }
            for perm in permutations(d) {
                // factor perm[m] feeds matrix argument m
                let mut orient = vec![(0usize, 0usize); d];
                let mut base = c.clone();
                for (slot, &f) in perm.iter().enumerate() {
                    orient[slot] = factors[f];
                    if factors[f].0 != factors[f].1 {
                        base *= &half;
                    }
                }
                // each off-diagonal factor can be fed in either order
                let offdiag: Vec<usize> = (0..d).filter(|&k| orient[k].0 != orient[k].1).collect();
                for mask in 0..(1u32 << offdiag.len()) {
                    let mut key = Vec::with_capacity(slots);
                    for (k, &(i, j)) in orient.iter().enumerate() {
                        let flip = offdiag
                            .iter()
                            .position(|&o| o == k)
                            .is_some_and(|b| mask >> b & 1 == 1);
                        if flip {
                            key.extend([j, i]);
                        } else {
                            key.extend([i, j]);
                        }
                    }
                    *table.entry(key).or_insert_with(Rational::zero) += &base;
                }
            }
        }
        table.retain(|_, v| !v.is_zero());
        let restitution_factor = (1..=d).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
        Ok(Polarization { dim: ring.sym, slots, restitution_factor, table })
    }
}

impl Polarization {
    /// `Σ entry · Π_m x[i_{2m-1}, i_{2m}]` in `ring`.
    pub fn restitute(&self, ring: Ring) -> Result<Poly> {
        let n = ring.nvars();
        let mut terms = Vec::with_capacity(self.table.len());
        for (key, c) in &self.table {
            let mut m = Monomial::one(n);
            for pair in key.chunks(2) {
                let idx = ring.index(super::Var::X(pair[0].min(pair[1]), pair[0].max(pair[1])))?;
                m = m.mul(&Monomial::var(n, idx));
            }
            terms.push((m, c.clone()));
        }
        Ok(Poly::from_terms(ring, terms))
    }

    /// Value at a tuple of vectors, one per slot, by multilinearity.
    pub fn evaluate(&self, vectors: &[Vec<Rational>]) -> Rational {
        assert_eq!(vectors.len(), self.slots);
        self.table
            .iter()
            .map(|(key, c)| {
                key.iter()
                    .zip(vectors)
                    .fold(c.clone(), |acc, (&i, v)| acc * &v[i - 1])
            })
            .sum()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, MonomialOrder};

    fn ring(n: usize) -> Ring {
        Ring::new(n, 0, 0, MonomialOrder::Degrevlex)
    }

    #[test]
    fn linear_form() {
        let r = ring(2);
        let f = r.parse("x[1,1]").unwrap();
        let pol = f.polarize(2).unwrap();
        assert_eq!(pol.table.len(), 1);
        assert_eq!(pol.table[&vec![1, 1]], rat(1));
        assert_eq!(pol.restitute(r).unwrap(), f);

        let g = r.parse("x[1,2]").unwrap().polarize(2).unwrap();
        // x~(u, w) = (u1 w2 + u2 w1) / 2 is symmetric
        assert_eq!(g.table[&vec![1, 2]], g.table[&vec![2, 1]]);
    }

    #[test]
    fn determinant_restitution() {
        let r = ring(2);
        let det = r.parse("x[1,1]*x[2,2] - x[1,2]^2").unwrap();
        let pol = det.polarize(4).unwrap();
        assert_eq!(pol.restitution_factor, BigInt::from(2));
        assert_eq!(pol.restitute(r).unwrap(), det.scale(&rat(2)));
    }

    /// Direct expansion: F(ω1, ω2) for det₂ is ω1_11 ω2_22 + ω1_22 ω2_11 - 2 ω1_12 ω2_12.
    #[test]
    fn determinant_matches_direct_expansion() {
        let r = ring(2);
        let det = r.parse("x[1,1]*x[2,2] - x[1,2]^2").unwrap();
        let pol = det.polarize(4).unwrap();
        let u = [vec![rat(1), rat(2)], vec![rat(3), rat(-1)], vec![rat(0), rat(5)], vec![rat(2), rat(7)]];
        let sym = |a: &Vec<Rational>, b: &Vec<Rational>, i: usize, j: usize| {
            (&a[i] * &b[j] + &a[j] * &b[i]) / rat(2)
        };
        let w1 = |i, j| sym(&u[0], &u[1], i, j);
        let w2 = |i, j| sym(&u[2], &u[3], i, j);
        let direct = w1(0, 0) * w2(1, 1) + w1(1, 1) * w2(0, 0) - rat(2) * w1(0, 1) * w2(0, 1);
        assert_eq!(pol.evaluate(&u), direct);
    }

    #[test]
    fn rejects_non_forms() {
        let r = ring(2);
        assert!(matches!(r.parse("3").unwrap().polarize(2), Err(Error::NotHomogeneous)));
        assert!(matches!(r.parse("x[1,1] + x[1,2]^2").unwrap().polarize(4), Err(Error::NotHomogeneous)));
        assert!(matches!(r.parse("x[1,1]").unwrap().polarize(4), Err(Error::NotHomogeneous)));
        let mixed = Ring::new(2, 2, 0, MonomialOrder::Degrevlex);
        assert!(matches!(mixed.parse("y[1,2]").unwrap().polarize(2), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn restitution_for_cubic() {
        let r = ring(3);
        let f = r.parse("x[1,1]*x[2,3]^2 - 2*x[1,2]*x[1,3]*x[2,3] + x[3,3]^3").unwrap();
        let pol = f.polarize(6).unwrap();
        assert_eq!(pol.restitute(r).unwrap(), f.scale(&rat(6)));
    }
}
