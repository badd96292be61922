//! The symbolic GL-spectrum of `Sym(Sym²)` and the bridge to Gröbner
//! computations on its evaluations.
//!
//! GL-radical ideals are the `I_λ`; GL-primes are the rectangular `I_{r,s}`
//! and the zero ideal. Containment is decided on partitions, and checked
//! against radical containment of the evaluated ideals in `B(Q^(r|s))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functor::SuperSpace;
use crate::groebner::Ideal;
use crate::models::{ideal_lambda, model_ring};
use crate::partition::Partition;
use crate::poly::Poly;

/// A GL-ideal of `Sym(Sym²)` built from the `I_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GlIdeal {
    Zero,
    Unit,
    Generated(Partition),
    /// `Σ I_λ` over an antichain of containment-minimal partitions.
    Sum(Vec<Partition>),
}

impl GlIdeal {
    pub fn generated(lambda: Partition) -> GlIdeal {
        if lambda.is_empty() {
            GlIdeal::Unit
        } else {
            GlIdeal::Generated(lambda)
        }
    }

    /// Canonical form of `Σ I_λ`: only containment-minimal partitions are
    /// kept, since `I_λ ⊂ I_μ` whenever `μ ⊂ λ`.
    pub fn sum(parts: impl IntoIterator<Item = Partition>) -> GlIdeal {
        let mut parts: Vec<Partition> = parts.into_iter().collect();
        parts.sort();
        parts.dedup();
        if parts.iter().any(Partition::is_empty) {
            return GlIdeal::Unit;
        }
        let minimal: Vec<Partition> = parts
            .iter()
            .filter(|l| !parts.iter().any(|m| m != *l && m.contains(l)))
            .cloned()
            .collect();
        match minimal.len() {
            0 => GlIdeal::Zero,
            1 => GlIdeal::Generated(minimal.into_iter().next().unwrap()),
            _ => GlIdeal::Sum(minimal),
        }
    }

    /// Brings a hand-built value into canonical form.
    pub fn canonical(self) -> GlIdeal {
        match self {
            GlIdeal::Generated(l) => GlIdeal::generated(l),
            GlIdeal::Sum(m) => GlIdeal::sum(m),
            other => other,
        }
    }

    fn members(&self) -> &[Partition] {
        match self {
            GlIdeal::Generated(l) => std::slice::from_ref(l),
            GlIdeal::Sum(m) => m,
            GlIdeal::Zero | GlIdeal::Unit => &[],
        }
    }

    /// `J(V)` in `B(V)`.
    pub fn evaluate(&self, space: SuperSpace) -> Result<Ideal> {
        let ring = model_ring(space);
        match self {
            GlIdeal::Zero => Ok(Ideal::zero(ring)),
            GlIdeal::Unit => Ok(Ideal::unit(ring)),
            _ => {
                let mut gens = Vec::new();
                for l in self.members() {
                    gens.extend(ideal_lambda(l, space)?.ideal.generators().iter().cloned());
                }
                Ideal::new(ring, gens)
            }
        }
    }
}

impl fmt::Display for GlIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlIdeal::Zero => f.write_str("0"),
            GlIdeal::Unit => f.write_str("A"),
            GlIdeal::Generated(l) => write!(f, "I({l})"),
            GlIdeal::Sum(m) => {
                let parts: Vec<String> = m.iter().map(|l| format!("I({l})")).collect();
                f.write_str(&parts.join(" + "))
            }
        }
    }
}

/// True for the zero ideal and for `I_λ` with `λ` a rectangle.
pub fn is_gl_prime(j: &GlIdeal) -> bool {
    match j {
        GlIdeal::Zero => true,
        GlIdeal::Generated(l) => l.is_rectangle(),
        _ => false,
    }
}

/// `J ⊂ K` in the lattice of GL-ideals.
pub fn gl_contains(j: &GlIdeal, k: &GlIdeal) -> bool {
    match (j, k) {
        (GlIdeal::Zero, _) | (_, GlIdeal::Unit) => true,
        (GlIdeal::Unit, _) | (_, GlIdeal::Zero) => false,
        _ => j.members().iter().all(|l| k.members().iter().any(|m| m.contains(l))),
    }
}

/// GL-radical: `Σ_{λ∈M} I_λ` has radical `I_{∩M}`; each `I_λ` is radical.
pub fn gl_radical(j: &GlIdeal) -> GlIdeal {
    match j {
        GlIdeal::Sum(m) => {
            let meet = m.iter().skip(1).fold(m[0].clone(), |acc, l| acc.intersect(l));
            GlIdeal::generated(meet)
        }
        other => other.clone(),
    }
}

/// A point of `Spec_GL = N² ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumPoint {
    Point(usize, usize),
    Infinity,
}

impl fmt::Display for SpectrumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumPoint::Point(r, s) => write!(f, "({r},{s})"),
            SpectrumPoint::Infinity => f.write_str("∞"),
        }
    }
}

/// A GL-prime: the rectangular `I_{r,s}` or the zero ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GlPrime {
    Rect { rows: usize, cols: usize },
    Zero,
}

impl GlPrime {
    pub fn ideal(&self) -> GlIdeal {
        match *self {
            GlPrime::Rect { rows, cols } => {
                GlIdeal::Generated(Partition::rectangle(rows, cols).expect("nonempty rectangle"))
            }
            GlPrime::Zero => GlIdeal::Zero,
        }
    }

    pub fn point(&self) -> SpectrumPoint {
        match *self {
            GlPrime::Rect { rows, cols } => SpectrumPoint::Point(rows - 1, cols - 1),
            GlPrime::Zero => SpectrumPoint::Infinity,
        }
    }
}

/// Minimal GL-primes over `J`: the corner rectangles of its radical.
pub fn minimal_gl_primes(j: &GlIdeal) -> Result<Vec<GlPrime>> {
    match gl_radical(j) {
        GlIdeal::Unit => Err(Error::UnitIdeal),
        GlIdeal::Zero => Ok(vec![GlPrime::Zero]),
        GlIdeal::Generated(l) => {
            Ok(l.corners()?.into_iter().map(|(rows, cols)| GlPrime::Rect { rows, cols }).collect())
        }
        GlIdeal::Sum(_) => unreachable!("radicals are principal"),
    }
}

/// Generalization order: componentwise on `N²`, with `∞` on top.
pub fn poset_le(p: SpectrumPoint, q: SpectrumPoint) -> bool {
    match (p, q) {
        (_, SpectrumPoint::Infinity) => true,
        (SpectrumPoint::Infinity, _) => false,
        (SpectrumPoint::Point(a, b), SpectrumPoint::Point(c, d)) => a <= c && b <= d,
    }
}

/// Closure of a point: everything below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Closure(pub SpectrumPoint);

impl Closure {
    pub fn contains(&self, q: SpectrumPoint) -> bool {
        poset_le(q, self.0)
    }

    /// The points of a closure of a finite point, in increasing order.
    pub fn points(&self) -> Option<Vec<SpectrumPoint>> {
        match self.0 {
            SpectrumPoint::Infinity => None,
            SpectrumPoint::Point(r, s) => {
                Some((0..=r).flat_map(|a| (0..=s).map(move |b| SpectrumPoint::Point(a, b))).collect())
            }
        }
    }
}

pub fn closure(p: SpectrumPoint) -> Closure {
    Closure(p)
}

/// The point of a GL-prime: `I_{r,s} ↦ (r−1, s−1)`, zero ideal `↦ ∞`.
pub fn spec_point(j: &GlIdeal) -> Result<SpectrumPoint> {
    match j {
        GlIdeal::Zero => Ok(SpectrumPoint::Infinity),
        GlIdeal::Generated(l) if l.is_rectangle() => Ok(SpectrumPoint::Point(l.length() - 1, l.width() - 1)),
        _ => Err(Error::NotPrime),
    }
}

/// Smallest space on which the rank loci of all corners involved are
/// distinguished: `dim E ≥` largest corner row, `dim F ≥ 2·`largest corner
/// column.
pub fn faithful_space(ideals: &[&GlIdeal]) -> SpectrumSpace {
    let mut rows = 0;
    let mut cols = 0;
    for j in ideals {
        for l in j.members() {
            if let Ok(corners) = l.corners() {
                for (r, c) in corners {
                    rows = rows.max(r);
                    cols = cols.max(c);
                }
            }
        }
    }
    SpectrumSpace(SuperSpace::new(rows, 2 * cols))
}

/// Wrapper so evaluation sizes serialize as `[r, s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumSpace(pub SuperSpace);

impl Serialize for SpectrumSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.even, self.0.odd].serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpectrumSpace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [r, s] = <[usize; 2]>::deserialize(d)?;
        Ok(SpectrumSpace(SuperSpace::new(r, s)))
    }
}

/// `rad J(V) ⊂ rad K(V)`, i.e. every generator of `J(V)` lies in the radical
/// of `K(V)`.
pub fn geometric_radical_contains(j: &GlIdeal, k: &GlIdeal, space: SuperSpace) -> Result<bool> {
    k.evaluate(space)?.ideal_radical_contains(&j.evaluate(space)?)
}

/// Whether `f` is nilpotent in `B(V)/J(V)`.
pub fn nilpotent_at(f: &Poly, j: &GlIdeal, space: SuperSpace) -> Result<bool> {
    j.evaluate(space)?.radical_contains(f)
}

/// Whether `f` is nilpotent modulo an arbitrary ideal.
pub fn nilpotent_mod(f: &Poly, ideal: &Ideal) -> Result<bool> {
    ideal.radical_contains(f)
}

/// One line of a cross-validation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub pair: [Partition; 2],
    pub symbolic: bool,
    pub geometric: bool,
    pub space: SpectrumSpace,
    pub agree: bool,
}

/// Compares `I_λ ⊂ rad I_μ` decided on partitions with the Gröbner answer on
/// the evaluations at a faithful space.
pub fn cross_check(lambda: &Partition, mu: &Partition) -> Result<CrossCheck> {
    let j = GlIdeal::generated(lambda.clone());
    let k = GlIdeal::generated(mu.clone());
    let symbolic = gl_contains(&gl_radical(&j), &gl_radical(&k));
    let space = faithful_space(&[&j, &k]);
    let geometric = geometric_radical_contains(&j, &k, space.0)?;
    Ok(CrossCheck { pair: [lambda.clone(), mu.clone()], symbolic, geometric, space, agree: symbolic == geometric })
}

/// Cross-validates all ordered pairs of nonempty partitions of size at most
/// `max_size`, in lexicographic order of the pair.
pub fn cross_validate(max_size: usize) -> Result<Vec<CrossCheck>> {
    let parts: Vec<Partition> = Partition::all_up_to(max_size).into_iter().filter(|l| !l.is_empty()).collect();
    let mut pairs: Vec<(Partition, Partition)> =
        parts.iter().flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone()))).collect();
    pairs.sort_by(|a, b| (a.0.parts(), a.1.parts()).cmp(&(b.0.parts(), b.1.parts())));
    run_pairs(&pairs)
}

#[cfg(feature = "parallel")]
fn run_pairs(pairs: &[(Partition, Partition)]) -> Result<Vec<CrossCheck>> {
    use rayon::prelude::*;
    pairs.par_iter().map(|(l, m)| cross_check(l, m)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_pairs(pairs: &[(Partition, Partition)]) -> Result<Vec<CrossCheck>> {
    pairs.iter().map(|(l, m)| cross_check(l, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn prime_examples() {
        assert!(is_gl_prime(&GlIdeal::Generated(partition![2, 2])));
        assert!(!is_gl_prime(&GlIdeal::Generated(partition![2, 1])));
        assert!(is_gl_prime(&GlIdeal::Zero));
        assert!(!is_gl_prime(&GlIdeal::Unit));
    }

    #[test]
    fn containment_examples() {
        let g = |l: Partition| GlIdeal::Generated(l);
        assert!(gl_contains(&g(partition![3, 1]), &g(partition![2, 1])));
        assert!(!gl_contains(&g(partition![2, 2]), &g(partition![3, 1])));
        assert!(gl_contains(&GlIdeal::Zero, &g(partition![1])));
        let s = GlIdeal::sum([partition![3, 1], partition![2, 2]]);
        assert!(gl_contains(&g(partition![3, 2]), &s));
        assert!(!gl_contains(&g(partition![2, 1]), &s));
        assert!(gl_contains(&s, &g(partition![2, 1])));
    }

    #[test]
    fn sums_are_canonical() {
        assert_eq!(GlIdeal::sum([partition![2, 1], partition![3, 1]]), GlIdeal::Generated(partition![2, 1]));
        assert_eq!(GlIdeal::sum([]), GlIdeal::Zero);
        assert_eq!(GlIdeal::sum([partition![1], Partition::empty()]), GlIdeal::Unit);
        assert_eq!(
            GlIdeal::sum([partition![2, 2], partition![3, 1], partition![3, 1]]),
            GlIdeal::Sum(vec![partition![2, 2], partition![3, 1]])
        );
    }

    #[test]
    fn radical_examples() {
        let s = GlIdeal::sum([partition![3, 1], partition![2, 2]]);
        assert_eq!(gl_radical(&s), GlIdeal::Generated(partition![2, 1]));
        let g = GlIdeal::Generated(partition![2, 1]);
        assert_eq!(gl_radical(&g), g);
        assert_eq!(gl_radical(&GlIdeal::Zero), GlIdeal::Zero);
    }

    #[test]
    fn minimal_primes_examples() {
        let g = GlIdeal::Generated(partition![2, 1]);
        assert_eq!(
            minimal_gl_primes(&g).unwrap(),
            vec![GlPrime::Rect { rows: 1, cols: 2 }, GlPrime::Rect { rows: 2, cols: 1 }]
        );
        let rect = GlIdeal::Generated(Partition::rectangle(2, 3).unwrap());
        assert_eq!(minimal_gl_primes(&rect).unwrap(), vec![GlPrime::Rect { rows: 2, cols: 3 }]);
        assert_eq!(minimal_gl_primes(&GlIdeal::Zero).unwrap(), vec![GlPrime::Zero]);
        assert!(matches!(minimal_gl_primes(&GlIdeal::Unit), Err(Error::UnitIdeal)));
    }

    #[test]
    fn order_and_closure() {
        use SpectrumPoint::*;
        assert!(poset_le(Point(1, 0), Point(1, 1)));
        assert!(!poset_le(Point(2, 0), Point(1, 5)));
        assert!(poset_le(Point(7, 7), Infinity));
        assert!(!poset_le(Infinity, Point(7, 7)));
        let pts = closure(Point(1, 1)).points().unwrap();
        assert_eq!(pts, vec![Point(0, 0), Point(0, 1), Point(1, 0), Point(1, 1)]);
        assert!(closure(Infinity).contains(Point(3, 9)));
    }

    #[test]
    fn spec_points() {
        let rect = GlIdeal::Generated(Partition::rectangle(2, 3).unwrap());
        assert_eq!(spec_point(&rect).unwrap(), SpectrumPoint::Point(1, 2));
        assert_eq!(spec_point(&GlIdeal::Zero).unwrap(), SpectrumPoint::Infinity);
        assert!(matches!(spec_point(&GlIdeal::Generated(partition![2, 1])), Err(Error::NotPrime)));
    }

    #[test]
    fn faithful_sizes_follow_corners() {
        let a = GlIdeal::Generated(partition![1, 1, 1]);
        let b = GlIdeal::Generated(partition![2]);
        assert_eq!(faithful_space(&[&a, &b]).0, SuperSpace::new(3, 4));
    }

    #[test]
    fn json_shapes() {
        let s = GlIdeal::sum([partition![3, 1], partition![2, 2]]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"sum":[[2,2],[3,1]]}"#);
        assert_eq!(serde_json::to_string(&GlIdeal::Zero).unwrap(), r#""zero""#);
        assert_eq!(serde_json::to_string(&SpectrumSpace(SuperSpace::new(3, 2))).unwrap(), "[3,2]");
    }
}
