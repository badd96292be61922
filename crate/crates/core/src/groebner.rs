//! Buchberger's algorithm over `Q`, ideal membership and Rabinowitsch
//! radical membership.
//!
//! Internally polynomials are kept primitive over `Z` and reduced
//! fraction-free; content is stripped after every reduction. Pairs are
//! pruned with the Gebauer–Möller criteria and selected by least sugar,
//! ties broken by the monomial order on the lcm's (for homogeneous input
//! this is the normal strategy).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rational, Ring, Var};

#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl IPoly {
    fn from_poly(p: &Poly) -> Self {
        let terms = p.primitive_integer();
        let sugar = p.degree().unwrap_or(0);
        IPoly { terms, sugar }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = self.terms.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    fn to_poly(&self, ring: Ring) -> Poly {
        let lc = self.lc().clone();
        Poly::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (m.clone(), Rational::new(c.clone(), lc.clone()))),
        )
    }
}

/// Bitmask of variables with nonzero exponent, for fast divisibility
/// rejection.
fn support_mask(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | 1 << (i % 64))
}

struct Reducer<'a> {
    ring: Ring,
    polys: &'a [IPoly],
    masks: &'a [u64],
    active: &'a [usize],
}

impl Reducer<'_> {
    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = support_mask(m);
        self.active
            .iter()
            .copied()
            .find(|&i| self.masks[i] & !mask == 0 && self.polys[i].lm().divides(m))
    }

    /// Full fraction-free reduction; the result is primitive.
    fn reduce(&self, mut p: IPoly) -> IPoly {
        let mut k = 0;
        while k < p.terms.len() {
            let Some(gi) = self.find_divisor(&p.terms[k].0) else {
                k += 1;
                continue;
            };
            let g = &self.polys[gi];
            let c = &p.terms[k].1;
            let gcd = c.gcd(g.lc());
            let a = g.lc() / &gcd;
            let b = c / &gcd;
            let shift = g.lm().quotient_of(&p.terms[k].0);
            p.sugar = p.sugar.max(g.sugar + shift.degree());
            let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(p.terms.len() + g.terms.len());
            let scale_a = !a.is_one();
            for (m, c) in &p.terms[..k] {
                out.push((m.clone(), if scale_a { c * &a } else { c.clone() }));
            }
            // merge a·p[k+1..] with -b·shift·g[1..]; the leading terms cancel
            let tail = &p.terms[k + 1..];
            let (mut i, mut j) = (0, 1);
            while i < tail.len() || j < g.terms.len() {
                let gm = (j < g.terms.len()).then(|| g.terms[j].0.mul(&shift));
                let ord = match (&gm, i < tail.len()) {
                    (None, _) => Ordering::Greater,
                    (Some(_), false) => Ordering::Less,
                    (Some(gm), true) => self.ring.cmp(&tail[i].0, gm),
                };
                match ord {
                    Ordering::Greater => {
                        let c = &tail[i].1;
                        out.push((tail[i].0.clone(), if scale_a { c * &a } else { c.clone() }));
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((gm.unwrap(), -(&b * &g.terms[j].1)));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = &tail[i].1 * &a - &b * &g.terms[j].1;
                        if !c.is_zero() {
                            out.push((tail[i].0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            p.terms = out;
        }
        p.make_primitive();
        p
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Outcome of a Buchberger run: a Gröbner basis (not yet interreduced) or
/// the detection of the unit ideal.
enum Run {
    Unit,
    Basis(Vec<IPoly>),
}

fn buchberger(ring: Ring, input: &[IPoly], max_degree: Option<u32>) -> Run {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut sorted: Vec<IPoly> = input.iter().filter(|p| !p.is_zero()).cloned().collect();
    if sorted.iter().any(|p| p.lm().is_one()) {
        return Run::Unit;
    }
    sorted.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));

    let insert = |h: IPoly,
                      polys: &mut Vec<IPoly>,
                      masks: &mut Vec<u64>,
                      active: &mut Vec<usize>,
                      pairs: &mut Vec<Pair>| {
        let hi = polys.len();
        masks.push(support_mask(h.lm()));
        polys.push(h);
        gebauer_moeller(ring, polys, hi, active, pairs);
    };

    for f in sorted {
        let reduced = Reducer { ring, polys: &polys, masks: &masks, active: &active }.reduce(f);
        if reduced.is_zero() {
            continue;
        }
        if reduced.lm().is_one() {
            return Run::Unit;
        }
        insert(reduced, &mut polys, &mut masks, &mut active, &mut pairs);
    }

    loop {
        if let Some(limit) = max_degree {
            pairs.retain(|p| p.lcm.degree() <= limit);
        }
        let Some(best) = (0..pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&pairs[a], &pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| ring.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        }) else {
            break;
        };
        let pair = pairs.swap_remove(best);
        let s = spoly(ring, &polys[pair.i], &polys[pair.j], &pair.lcm);
        let h = Reducer { ring, polys: &polys, masks: &masks, active: &active }.reduce(s);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Run::Unit;
        }
        insert(h, &mut polys, &mut masks, &mut active, &mut pairs);
    }
    Run::Basis(active.into_iter().map(|i| polys[i].clone()).collect())
}

fn spoly(ring: Ring, f: &IPoly, g: &IPoly, lcm: &Monomial) -> IPoly {
    let gcd = f.lc().gcd(g.lc());
    let a = g.lc() / &gcd;
    let b = f.lc() / &gcd;
    let sf = f.lm().quotient_of(lcm);
    let sg = g.lm().quotient_of(lcm);
    let sugar = (f.sugar + sf.degree()).max(g.sugar + sg.degree());
    let mut acc: BTreeMap<Vec<u16>, (Monomial, BigInt)> = BTreeMap::new();
    for (m, c) in &f.terms[1..] {
        let mm = m.mul(&sf);
        acc.entry(mm.exps().to_vec()).or_insert((mm, BigInt::zero())).1 += c * &a;
    }
    for (m, c) in &g.terms[1..] {
        let mm = m.mul(&sg);
        acc.entry(mm.exps().to_vec()).or_insert((mm, BigInt::zero())).1 -= c * &b;
    }
    let mut terms: Vec<(Monomial, BigInt)> = acc.into_values().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
    IPoly { terms, sugar }
}

/// Gebauer–Möller update after appending `polys[hi]`.
fn gebauer_moeller(ring: Ring, polys: &[IPoly], hi: usize, active: &mut Vec<usize>, pairs: &mut Vec<Pair>) {
    let h = &polys[hi];
    let hlm = h.lm();
    let sugar_of = |i: usize, lcm: &Monomial| {
        let p = &polys[i];
        p.sugar + lcm.degree() - p.lm().degree()
    };
    let mut cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let glm = polys[g].lm();
            (g, hlm.lcm(glm), hlm.coprime(glm))
        })
        .collect();
    // keep a deterministic processing order
    cands.sort_by(|a, b| ring.cmp(&a.1, &b.1).then(a.0.cmp(&b.0)));

    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for idx in 0..cands.len() {
        let (g, ref lcm, coprime) = cands[idx];
        let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
            || kept.iter().any(|(_, l2, _)| l2.divides(lcm));
        if coprime || !dominated {
            kept.push((g, lcm.clone(), coprime));
        }
    }
    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && hlm.lcm(polys[p.i].lm()) != p.lcm
            && hlm.lcm(polys[p.j].lm()) != p.lcm)
    });
    for (g, lcm, coprime) in kept {
        if !coprime {
            let sugar = sugar_of(g, &lcm).max(sugar_of(hi, &lcm));
            pairs.push(Pair { i: g, j: hi, lcm, sugar });
        }
    }
    active.retain(|&g| !hlm.divides(polys[g].lm()));
    active.push(hi);
}

/// Interreduces a Gröbner basis into the reduced one (monic, sorted by
/// decreasing leading monomial).
fn interreduce(ring: Ring, basis: Vec<IPoly>) -> Vec<Poly> {
    let mut basis = basis;
    basis.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, q)| l != k && q.lm().divides(p.lm()) && (q.lm() != p.lm() || l < k));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let masks: Vec<u64> = minimal.iter().map(|p| support_mask(p.lm())).collect();
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<usize> = (0..minimal.len()).filter(|&l| l != k).collect();
        let red = Reducer { ring, polys: &minimal, masks: &masks, active: &others };
        let r = red.reduce(minimal[k].clone());
        out.push(r.to_poly(ring));
    }
    out.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(ring: Ring, gens: &[Poly]) -> Vec<Poly> {
    let input: Vec<IPoly> = gens.iter().map(IPoly::from_poly).collect();
    match buchberger(ring, &input, None) {
        Run::Unit => vec![Poly::one(ring)],
        Run::Basis(b) => interreduce(ring, b),
    }
}

fn generates_unit(ring: Ring, gens: &[Poly]) -> bool {
    let input: Vec<IPoly> = gens.iter().map(IPoly::from_poly).collect();
    matches!(buchberger(ring, &input, None), Run::Unit)
}

/// A finitely generated ideal with a lazily computed, write-once reduced
/// Gröbner basis.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
    truncated: Mutex<BTreeMap<u32, Vec<IPoly>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring,
            generators: self.generators.clone(),
            gb: self.gb.clone(),
            truncated: Mutex::new(self.truncated.lock().expect("poisoned").clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Poly>) -> Result<Self> {
        if generators.iter().any(|g| *g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, generators, gb: OnceLock::new(), truncated: Mutex::new(BTreeMap::new()) })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    pub fn unit(ring: Ring) -> Self {
        Ideal::new(ring, vec![Poly::one(ring)]).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    /// Sum of two ideals in the same ring.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring, gens)
    }

    pub fn reduced_gb(&self) -> &[Poly] {
        self.gb.get_or_init(|| reduced_groebner_basis(self.ring, &self.generators))
    }

    pub fn is_unit(&self) -> bool {
        self.reduced_gb().first().is_some_and(Poly::is_constant)
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if *f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Remainder of `f` modulo the reduced Gröbner basis.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        let gb = self.reduced_gb();
        let ring = self.ring;
        let mut p = f.clone();
        let mut rem = Poly::zero(ring);
        while let Some((m, c)) = p.terms().first().cloned() {
            match gb.iter().find(|g| g.leading_monomial().unwrap().divides(&m)) {
                Some(g) => {
                    let shift = g.leading_monomial().unwrap().quotient_of(&m);
                    p = &p - &g.mul_monomial(&shift, &c);
                }
                None => {
                    let lead = Poly::from_terms(ring, [(m, c)]);
                    rem = &rem + &lead;
                    p = &p - &lead;
                }
            }
        }
        Ok(rem)
    }

    /// Ideal membership. Homogeneous queries against a homogeneous ideal use
    /// a degree-truncated basis when the full basis is not cached.
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        self.check(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.gb.get().is_none() && f.is_homogeneous() && self.is_homogeneous() {
            let deg = f.degree().unwrap_or(0);
            let basis = self.truncated_basis(deg);
            let masks: Vec<u64> = basis.iter().map(|p| support_mask(p.lm())).collect();
            let active: Vec<usize> = (0..basis.len()).collect();
            let red = Reducer { ring: self.ring, polys: &basis, masks: &masks, active: &active };
            return Ok(red.reduce(IPoly::from_poly(f)).is_zero());
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    fn truncated_basis(&self, deg: u32) -> Vec<IPoly> {
        let mut cache = self.truncated.lock().expect("poisoned");
        if let Some((_, b)) = cache.range(deg..).next() {
            return b.clone();
        }
        let input: Vec<IPoly> = self.generators.iter().map(IPoly::from_poly).collect();
        let basis = match buchberger(self.ring, &input, Some(deg)) {
            Run::Unit => vec![IPoly::from_poly(&Poly::one(self.ring))],
            Run::Basis(b) => b,
        };
        cache.insert(deg, basis.clone());
        basis
    }

    /// `f ∈ rad(I)`, decided by testing `1 ∈ I + (1 - t·f)` with a fresh
    /// variable `t`.
    pub fn radical_contains(&self, f: &Poly) -> Result<bool> {
        if self.contains(f)? {
            return Ok(true);
        }
        Ok(self.rabinowitsch(f))
    }

    /// The Rabinowitsch test alone, without the membership shortcut.
    pub fn rabinowitsch(&self, f: &Poly) -> bool {
        let ring = self.ring;
        let ext = ring.with_aux(ring.aux + 1);
        let t = Poly::var(ext, Var::T(ring.aux + 1)).expect("fresh variable");
        let mut gens: Vec<Poly> =
            self.generators.iter().map(|g| g.to_ring(ext).expect("subring")).collect();
        let tf = &t * &f.to_ring(ext).expect("subring");
        gens.push(&Poly::one(ext) - &tf);
        generates_unit(ext, &gens)
    }

    /// `J ⊂ rad(I)`: every generator of `J` lies in the radical of `self`.
    pub fn ideal_radical_contains(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        for g in &other.generators {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn radical_equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.ideal_radical_contains(other)? && other.ideal_radical_contains(self)?)
    }

    /// Elimination ideal `I ∩ Q[x, y]` for an ideal in a ring with
    /// auxiliary variables under the [`Elim`](crate::poly::MonomialOrder::Elim)
    /// order, returned in `target` (which must hold no auxiliary variables).
    pub fn eliminate_aux(&self, target: Ring) -> Result<Ideal> {
        let split = self.ring.sym_vars() + self.ring.skew_vars();
        let gens = self
            .reduced_gb()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exps()[split..].iter().all(|&e| e == 0)))
            .map(|g| {
                let stripped = Poly::from_terms(
                    self.ring.with_aux(0),
                    g.terms().iter().map(|(m, c)| (Monomial::from_exps(m.exps()[..split].to_vec()), c.clone())),
                );
                stripped.to_ring(target)
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            ring: self.ring,
            generators: self.generators.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<Ideal> {
        let gens = json.generators.iter().map(|g| json.ring.parse(g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(json.ring, gens)
    }
}

/// Serialized form: `{"ring": {...}, "generators": ["<poly>", ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Ring,
    pub generators: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn lex2() -> Ring {
        // x[1,1] > x[1,2] > x[2,2] play the roles of x > y > z
        Ring::new(2, 0, 0, MonomialOrder::Lex)
    }

    fn ideal(ring: Ring, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|g| ring.parse(g).unwrap()).collect()).unwrap()
    }

    fn show(gb: &[Poly]) -> Vec<String> {
        gb.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn basic_bases() {
        let r = lex2();
        let i = ideal(r, &["x[1,1] + x[1,2]", "x[1,2]"]);
        assert_eq!(show(i.reduced_gb()), vec!["x[1,1]", "x[1,2]"]);

        let ext = Ring::new(1, 0, 1, MonomialOrder::Degrevlex);
        let unit = ideal(ext, &["x[1,1]^2", "1 - t1*x[1,1]"]);
        assert_eq!(show(unit.reduced_gb()), vec!["1"]);

        assert!(ideal(r, &[]).reduced_gb().is_empty());
    }

    #[test]
    fn textbook_lex_example() {
        // x^2 + y^2 - 1, x - y  →  x - y, y^2 - 1/2
        let r = lex2();
        let i = ideal(r, &["x[1,1]^2 + x[1,2]^2 - 1", "x[1,1] - x[1,2]"]);
        assert_eq!(show(i.reduced_gb()), vec!["x[1,1] - x[1,2]", "x[1,2]^2 - 1/2"]);
    }

    #[test]
    fn normal_forms_and_membership() {
        let r = lex2();
        let i = ideal(r, &["x[1,1]"]);
        assert!(i.normal_form(&r.parse("x[1,1]^2").unwrap()).unwrap().is_zero());
        let xy = ideal(r, &["x[1,1]*x[1,2]"]);
        assert!(!xy.contains(&r.parse("x[1,1]").unwrap()).unwrap());
        let f = r.parse("3*x[2,2]^2 + x[1,2]").unwrap();
        assert_eq!(ideal(r, &[]).normal_form(&f).unwrap(), f);
        let other = Ring::new(3, 0, 0, MonomialOrder::Lex);
        assert!(matches!(i.normal_form(&other.parse("1").unwrap()), Err(Error::RingMismatch)));
    }

    #[test]
    fn radical_membership() {
        let r = lex2();
        assert!(ideal(r, &["x[1,1]^2"]).radical_contains(&r.parse("x[1,1]").unwrap()).unwrap());
        assert!(!ideal(r, &["x[1,1]*x[1,2]"]).radical_contains(&r.parse("x[1,1]").unwrap()).unwrap());
        let s = Ring::new(2, 0, 0, MonomialOrder::Degrevlex);
        let det = "x[1,1]*x[2,2] - x[1,2]^2";
        assert!(ideal(s, &[det]).radical_contains(&s.parse(det).unwrap()).unwrap());
        // x^3 - y^2 does not have x in its radical
        assert!(!ideal(r, &["x[1,1]^3 - x[1,2]^2"]).rabinowitsch(&r.parse("x[1,1]").unwrap()));
    }

    #[test]
    fn radical_containment_of_ideals() {
        let r = lex2();
        let a = ideal(r, &["x[1,1]^2", "x[1,2]"]);
        let b = ideal(r, &["x[1,1]", "x[1,2]^2"]);
        assert!(a.radical_equals(&b).unwrap());
        let x = ideal(r, &["x[1,1]"]);
        let xy = ideal(r, &["x[1,1]", "x[1,2]"]);
        assert!(!x.ideal_radical_contains(&xy).unwrap());
        assert!(xy.ideal_radical_contains(&x).unwrap());
        assert!(Ideal::unit(r).ideal_radical_contains(&xy).unwrap());
    }

    #[test]
    fn truncated_membership_agrees_with_full() {
        let r = Ring::new(3, 0, 0, MonomialOrder::Degrevlex);
        let minors = crate::models::rank_locus_ideal(crate::models::RankBound::finite(1), crate::models::RankBound::Infinite, crate::functor::SuperSpace::new(3, 0)).unwrap();
        let f = r.parse("x[1,1]*x[2,2]*x[3,3] - x[1,1]*x[2,3]^2 - x[2,2]*x[1,3]^2 - x[3,3]*x[1,2]^2 + 2*x[1,2]*x[1,3]*x[2,3]").unwrap();
        let g = r.parse("x[1,1]*x[2,2]").unwrap();
        assert!(minors.contains(&f).unwrap());
        assert!(!minors.contains(&g).unwrap());
        let full = minors.clone();
        full.reduced_gb();
        assert!(full.contains(&f).unwrap());
        assert!(!full.contains(&g).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let r = Ring::new(2, 2, 1, MonomialOrder::Degrevlex);
        let i = ideal(r, &["x[1,1]*y[1,2] - t1", "x[2,2]^2"]);
        let text = serde_json::to_string(&i.to_json()).unwrap();
        assert!(text.contains("\"order\":\"degrevlex\""));
        let back = Ideal::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.generators(), i.generators());
    }
}
