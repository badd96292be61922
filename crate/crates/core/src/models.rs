//! Concrete models in `B(Q^(r|s)) = Sym(Sym²Q^r ⊕ Λ²Q^s)`: highest-weight
//! vectors, the equivariant ideals `I_λ`, rank loci, the Veronese kernel and
//! a graded-character oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::functor::{kostka, SuperSpace};
use crate::groebner::Ideal;
use crate::partition::Partition;
use crate::poly::{Monomial, MonomialOrder, Poly, Rational, Ring, Var};

/// The ring `B(Q^(r|s))` with the default order.
pub fn model_ring(space: SuperSpace) -> Ring {
    Ring::new(space.even, space.odd, 0, MonomialOrder::Degrevlex)
}

fn determinant(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => unreachable!("empty matrix"),
        1 => m[0][0].clone(),
        n => {
            let ring = *m[0][0].ring();
            let mut acc = Poly::zero(ring);
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][col] * &determinant(&minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Pfaffian of the generic alternating matrix restricted to `idx`
/// (1-based, increasing), expanded along the first row.
fn pfaffian(ring: Ring, idx: &[usize]) -> Poly {
    if idx.is_empty() {
        return Poly::one(ring);
    }
    let mut acc = Poly::zero(ring);
    for j in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != idx[j]).collect();
        let term = &Poly::y(ring, idx[0], idx[j]) * &pfaffian(ring, &rest);
        acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn symmetric_matrix(ring: Ring, rows: &[usize], cols: &[usize]) -> Vec<Vec<Poly>> {
    rows.iter().map(|&i| cols.iter().map(|&j| Poly::x(ring, i, j)).collect()).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Highest-weight vector of the summand `S_{2λ}(Q^n)` of `Sym(Sym²Q^n)`:
/// the product of leading principal minors `Δ_i^{λ_i − λ_{i+1}}`.
pub fn hwv(lambda: &Partition, n: usize) -> Result<Poly> {
    if lambda.length() > n {
        return Err(Error::TooFewRows { partition: lambda.to_string(), rows: n });
    }
    let ring = Ring::new(n, 0, 0, MonomialOrder::Degrevlex);
    let mut f = Poly::one(ring);
    for i in 1..=lambda.length() {
        let e = lambda.part(i - 1) - lambda.part(i);
        if e > 0 {
            let lead: Vec<usize> = (1..=i).collect();
            let delta = determinant(&symmetric_matrix(ring, &lead, &lead));
            f = &f * &delta.pow(e as u32);
        }
    }
    Ok(f)
}

/// Infinitesimal action of the elementary matrix `E_ab` of `gl_r` on the
/// symmetric coordinates, extended as a derivation. Alternating coordinates
/// are left alone.
pub fn lie_act(a: usize, b: usize, f: &Poly) -> Result<Poly> {
    let ring = *f.ring();
    if a == 0 || b == 0 || a > ring.sym || b > ring.sym {
        return Err(Error::Index(format!("E_{a}{b} outside gl_{}", ring.sym)));
    }
    let mut acc = Poly::zero(ring);
    for (idx, v) in ring.vars().into_iter().enumerate().take(ring.sym_vars()) {
        let Var::X(i, j) = v else { unreachable!() };
        let d = f.derivative(idx);
        if d.is_zero() {
            continue;
        }
        let mut image = Poly::zero(ring);
        if b == i {
            image = &image + &Poly::x(ring, a, j);
        }
        if b == j {
            image = &image + &Poly::x(ring, i, a);
        }
        acc = &acc + &(&d * &image);
    }
    Ok(acc)
}

/// Substitution action of `(g, h) ∈ GL_r × GL_s`: `x[i,j] ↦ Σ g_ki g_lj x[k,l]`
/// and `y[a,b] ↦ Σ h_ka h_lb y[k,l]`.
pub fn gl_substitute(g: &[Vec<Rational>], h: &[Vec<Rational>], f: &Poly) -> Result<Poly> {
    let ring = *f.ring();
    let mut images = BTreeMap::new();
    for v in ring.vars() {
        let image = match v {
            Var::X(i, j) => {
                let mut p = Poly::zero(ring);
                for k in 1..=ring.sym {
                    for l in 1..=ring.sym {
                        let c = &g[k - 1][i - 1] * &g[l - 1][j - 1];
                        if !c.is_zero() {
                            p = &p + &Poly::x(ring, k, l).scale(&c);
                        }
                    }
                }
                p
            }
            Var::Y(a, b) => {
                let mut p = Poly::zero(ring);
                for k in 1..=ring.skew {
                    for l in 1..=ring.skew {
                        let c = &h[k - 1][a - 1] * &h[l - 1][b - 1];
                        if k != l && !c.is_zero() {
                            p = &p + &Poly::y(ring, k, l).scale(&c);
                        }
                    }
                }
                p
            }
            Var::T(_) => Poly::var(ring, v)?,
        };
        images.insert(v, image);
    }
    f.subst_hom(ring, &images)
}

/// A rank bound that may be infinite (no condition).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankBound {
    Finite(usize),
    Infinite,
}

impl RankBound {
    pub const fn finite(n: usize) -> Self {
        RankBound::Finite(n)
    }
}

impl fmt::Display for RankBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankBound::Finite(n) => write!(f, "{n}"),
            RankBound::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for RankBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(RankBound::Infinite),
            t => t.parse().map(RankBound::Finite).map_err(|_| Error::Parse(format!("bad rank bound `{t}`"))),
        }
    }
}

fn sorted_generators(ring: Ring, gens: Vec<Poly>) -> Vec<Poly> {
    let mut seen = std::collections::HashSet::new();
    let mut out: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero() && seen.insert(g.monic().to_string())).collect();
    out.sort_by(|a, b| {
        ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    out
}

/// Ideal of the locus `rank ω ≤ r, rank η ≤ 2s` in `B(V)`: the `(r+1)`-minors
/// of the generic symmetric matrix and the `(2s+2)`-Pfaffians of the generic
/// alternating matrix. An infinite bound omits its family.
pub fn rank_locus_ideal(r: RankBound, s: RankBound, space: SuperSpace) -> Result<Ideal> {
    let ring = model_ring(space);
    let mut gens = Vec::new();
    if let RankBound::Finite(r) = r {
        let k = r + 1;
        if k <= space.even {
            let subs = subsets(space.even, k);
            for (ri, rows) in subs.iter().enumerate() {
                for cols in &subs[ri..] {
                    gens.push(determinant(&symmetric_matrix(ring, rows, cols)));
                }
            }
        }
    }
    if let RankBound::Finite(s) = s {
        let k = 2 * s + 2;
        if k <= space.odd {
            for idx in subsets(space.odd, k) {
                gens.push(pfaffian(ring, &idx));
            }
        }
    }
    Ideal::new(ring, sorted_generators(ring, gens))
}

/// Kernel of `Sym(Sym²Q^s) → Sym(Q^s)`, `x[i,j] ↦ u_i u_j`, computed by
/// eliminating the `u`'s.
pub fn veronese_kernel(s: usize) -> Result<Ideal> {
    let ring = Ring::new(s, 0, s, MonomialOrder::Elim);
    let mut gens = Vec::new();
    for i in 1..=s {
        for j in i..=s {
            let u = &Poly::var(ring, Var::T(i))? * &Poly::var(ring, Var::T(j))?;
            gens.push(&Poly::x(ring, i, j) - &u);
        }
    }
    let target = Ring::new(s, 0, 0, MonomialOrder::Degrevlex);
    let elim = Ideal::new(ring, gens)?.eliminate_aux(target)?;
    let gens = sorted_generators(target, elim.generators().to_vec());
    Ideal::new(target, gens)
}

/// The ideal `I_λ(V)` generated by the image of `S_{2λ}(V)` in `B(V)`.
#[derive(Clone, Debug)]
pub struct ModelIdeal {
    pub lambda: Partition,
    pub space: SuperSpace,
    pub ideal: Ideal,
}

/// Monomial in the parameters of a generic point: commuting `a_{k,i}` and
/// anticommuting `θ_{k,i}` (kept as a bitmask in increasing order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ParamMono {
    even: Vec<u8>,
    odd: u64,
}

type Expansion = HashMap<(ParamMono, Vec<u16>), BigInt>;

/// Sign of `θ_A θ_B` rewritten in increasing order; `None` if they overlap.
fn odd_merge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

fn mul_expansions(p: &Expansion, q: &Expansion) -> Expansion {
    let mut out: Expansion = HashMap::with_capacity(p.len() * q.len() / 2 + 1);
    for ((pm, pe), pc) in p {
        for ((qm, qe), qc) in q {
            let Some(neg) = odd_merge_sign(pm.odd, qm.odd) else { continue };
            let even = pm.even.iter().zip(&qm.even).map(|(a, b)| a + b).collect();
            let exps = pe.iter().zip(qe).map(|(a, b)| a + b).collect();
            let c = pc * qc;
            let slot = out.entry((ParamMono { even, odd: pm.odd | qm.odd }, exps)).or_insert_with(BigInt::zero);
            if neg {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Image of the source coordinate `x[i,j]` of `Q^m` under the generic point
/// `e_i ↦ Σ_k a_{k,i} e_k + Σ_k θ_{k,i} f_k` of `V`, with mixed terms dropped.
fn generic_image(ring: Ring, space: SuperSpace, m: usize, i: usize, j: usize) -> Expansion {
    let (r, s) = (space.even, space.odd);
    let nvars = ring.nvars();
    let mut out: Expansion = HashMap::new();
    for k in 1..=r {
        for l in 1..=r {
            let mut even = vec![0u8; r * m];
            even[(k - 1) * m + i - 1] += 1;
            even[(l - 1) * m + j - 1] += 1;
            let idx = ring.index(Var::X(k.min(l), k.max(l))).expect("in range");
            let mut exps = vec![0u16; nvars];
            exps[idx] = 1;
            *out.entry((ParamMono { even, odd: 0 }, exps)).or_insert_with(BigInt::zero) += 1;
        }
    }
    for k in 1..=s {
        for l in 1..=s {
            if k == l {
                continue;
            }
            // θ_{k,i} f_k θ_{l,j} f_l = -θ_{k,i} θ_{l,j} f_k f_l
            let (bk, bl) = ((k - 1) * m + i - 1, (l - 1) * m + j - 1);
            let mut sign = -1;
            if bk > bl {
                sign = -sign;
            }
            if k > l {
                sign = -sign;
            }
            let idx = ring.index(Var::Y(k.min(l), k.max(l))).expect("in range");
            let mut exps = vec![0u16; nvars];
            exps[idx] = 1;
            let key = (ParamMono { even: vec![0; r * m], odd: 1 << bk | 1 << bl }, exps);
            *out.entry(key).or_insert_with(BigInt::zero) += sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Weight of a monomial of `B(V)` under the diagonal torus of `GL_r × GL_s`.
pub fn monomial_weight(ring: &Ring, m: &Monomial) -> Vec<usize> {
    let mut w = vec![0usize; ring.sym + ring.skew];
    for (&e, v) in m.exps().iter().zip(ring.vars()) {
        if e == 0 {
            continue;
        }
        match v {
            Var::X(i, j) => {
                w[i - 1] += usize::from(e);
                w[j - 1] += usize::from(e);
            }
            Var::Y(a, b) => {
                w[ring.sym + a - 1] += usize::from(e);
                w[ring.sym + b - 1] += usize::from(e);
            }
            Var::T(_) => {}
        }
    }
    w
}

/// Reduced row-echelon basis of the linear span of `polys` (monic rows,
/// sorted by decreasing leading monomial).
pub fn span_basis(ring: Ring, polys: impl IntoIterator<Item = Poly>) -> Vec<Poly> {
    let mut rows: Vec<Poly> = Vec::new();
    let mut pivots: HashMap<Monomial, usize> = HashMap::new();
    for mut p in polys {
        while let Some(lm) = p.leading_monomial() {
            match pivots.get(lm) {
                Some(&r) => {
                    let c = p.leading_coeff().unwrap().clone();
                    p = &p - &rows[r].scale(&c);
                }
                None => break,
            }
        }
        if let Some(lm) = p.leading_monomial() {
            pivots.insert(lm.clone(), rows.len());
            rows.push(p.monic());
        }
    }
    rows.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let pivots: HashMap<Monomial, usize> =
        rows.iter().enumerate().map(|(k, p)| (p.leading_monomial().unwrap().clone(), k)).collect();
    for k in 0..rows.len() {
        loop {
            let hit = rows[k].terms()[1..]
                .iter()
                .find_map(|(m, c)| pivots.get(m).map(|&r| (r, c.clone())));
            let Some((r, c)) = hit else { break };
            let reduced = &rows[k] - &rows[r].scale(&c);
            rows[k] = reduced;
        }
    }
    rows.reverse();
    rows
}

/// `I_λ(V)`: the generators span the image of `S_{2λ}(V)` in `B(V)`.
///
/// The highest-weight vector lives on `Q^m` with `m = ℓ(λ)`. It is pushed
/// along a generic point `Q^m → V` whose coefficients on the odd part are
/// Grassmann parameters; the coefficients of the parameter monomials span
/// the image, and are reduced to a basis one weight space at a time.
pub fn ideal_lambda(lambda: &Partition, space: SuperSpace) -> Result<ModelIdeal> {
    let ring = model_ring(space);
    if lambda.is_empty() {
        return Ok(ModelIdeal { lambda: lambda.clone(), space, ideal: Ideal::unit(ring) });
    }
    let m = lambda.length();
    if space.odd * m > 64 {
        return Err(Error::TooLarge(format!("{} odd parameters", space.odd * m)));
    }
    let f = hwv(lambda, m)?;
    let src = *f.ring();
    let mut images: Vec<Expansion> = Vec::with_capacity(src.nvars());
    for v in src.vars() {
        let Var::X(i, j) = v else { unreachable!() };
        images.push(generic_image(ring, space, m, i, j));
    }
    let unit_key = (ParamMono { even: vec![0; space.even * m], odd: 0 }, vec![0u16; ring.nvars()]);
    let mut total: Expansion = HashMap::new();
    for (mono, c) in f.terms() {
        assert!(c.is_integer(), "highest-weight vectors have integer coefficients");
        let mut acc: Expansion = HashMap::from([(unit_key.clone(), c.to_integer())]);
        for (idx, &e) in mono.exps().iter().enumerate() {
            for _ in 0..e {
                acc = mul_expansions(&acc, &images[idx]);
            }
        }
        for (k, v) in acc {
            *total.entry(k).or_insert_with(BigInt::zero) += v;
        }
    }

    let mut by_param: BTreeMap<ParamMono, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for ((pm, exps), c) in total {
        if !c.is_zero() {
            by_param.entry(pm).or_default().push((Monomial::from_exps(exps), Rational::from_integer(c)));
        }
    }
    let mut by_weight: BTreeMap<Vec<usize>, Vec<Poly>> = BTreeMap::new();
    for (_, terms) in by_param {
        let p = Poly::from_terms(ring, terms);
        if let Some(lm) = p.leading_monomial() {
            by_weight.entry(monomial_weight(&ring, lm)).or_default().push(p);
        }
    }
    let mut gens = Vec::new();
    for (_, polys) in by_weight {
        gens.extend(span_basis(ring, polys));
    }
    let gens = sorted_generators(ring, gens);
    Ok(ModelIdeal { lambda: lambda.clone(), space, ideal: Ideal::new(ring, gens)? })
}

/// All monomials of total degree `d` in the first `nvars` variables of a ring
/// with `total` variables.
pub fn monomials_of_degree(nvars: usize, total: usize, d: usize) -> Vec<Monomial> {
    fn go(pos: usize, left: usize, nvars: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur[pos] = left as u16;
            out.push(Monomial::from_exps(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as u16;
            go(pos + 1, left - e, nvars, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(total));
        }
        return out;
    }
    go(0, d, nvars, &mut vec![0; total], &mut out);
    out
}

/// Decomposes the degree-`d` part of an ideal of `B(Q^n)` as a `GL_n`
/// character. Returns the highest weights `2μ` of its irreducible summands,
/// largest first; each must occur once.
pub fn graded_multiplicities(model: &ModelIdeal, d: usize) -> Result<Vec<Partition>> {
    if model.space.odd > 0 {
        return Err(Error::OddSpaceUnsupported);
    }
    let ring = *model.ideal.ring();
    let n = model.space.even;
    let nsym = ring.sym_vars();
    let mut cache: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    let mut by_weight: BTreeMap<Partition, Vec<Poly>> = BTreeMap::new();
    let one = Rational::one();
    for g in model.ideal.generators() {
        let Some(e) = g.degree().map(|e| e as usize) else { continue };
        if e > d || !g.is_homogeneous() {
            continue;
        }
        let mons = cache.entry(d - e).or_insert_with(|| monomials_of_degree(nsym, ring.nvars(), d - e));
        for mono in mons.iter() {
            let p = g.mul_monomial(mono, &one);
            let w = monomial_weight(&ring, p.leading_monomial().unwrap());
            if w.windows(2).all(|p| p[0] >= p[1]) {
                by_weight.entry(Partition::from_unsorted(w)).or_default().push(p);
            }
        }
    }
    let mut remaining: BTreeMap<Partition, usize> =
        by_weight.into_iter().map(|(w, ps)| (w, span_basis(ring, ps).len())).collect();
    for w in Partition::all_of_size(2 * d) {
        if w.length() <= n {
            remaining.entry(w).or_insert(0);
        }
    }
    let mut out = Vec::new();
    let weights: Vec<Partition> = remaining.keys().rev().cloned().collect();
    for top in &weights {
        let c = remaining[top];
        if c == 0 {
            continue;
        }
        if c > 1 {
            return Err(Error::NotMultiplicityFree(top.to_string(), c));
        }
        out.push(top.clone());
        for (nu, dim) in remaining.iter_mut() {
            let k = kostka(top, nu.parts()) as usize;
            *dim = dim.checked_sub(k).expect("weight multiplicities of a GL_n-module");
        }
    }
    Ok(out)
}
