//! Self-checking suites: each recomputes a family of identities of the
//! theory on concrete evaluations and counts disagreements.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::SuperSpace;
use crate::models::{graded_multiplicities, ideal_lambda, rank_locus_ideal, veronese_kernel, RankBound};
use crate::partition::Partition;
use crate::poly::{Monomial, Poly, Rational, Ring};
use crate::spectrum::{cross_validate, nilpotent_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Graded decomposition of `I_λ(Q^n)` and the containment law.
    Lattice,
    /// Radicals of rectangular ideals: determinantal and Pfaffian sides.
    RectangularRadicals,
    /// Rectangular ideals cut out the mixed rank loci.
    RankLoci,
    /// Symbolic spectrum against Gröbner radical containment.
    Bridge,
    /// Veronese kernel and nilpotency in the Veronese ring.
    Veronese,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Lattice, Suite::RectangularRadicals, Suite::RankLoci, Suite::Bridge, Suite::Veronese];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lattice => "prop5.1",
            Suite::RectangularRadicals => "lemma5.4",
            Suite::RankLoci => "rankloci",
            Suite::Bridge => "bridge",
            Suite::Veronese => "veronese",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Parameters shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Even dimension for the lattice suite.
    pub n: usize,
    /// Largest degree (lattice suite) or partition size (bridge suite).
    pub maxdeg: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n: 3, maxdeg: 4 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<String>,
}

impl SuiteReport {
    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            self.failed.push(label());
        }
    }
}

pub fn run_suite(suite: Suite, opts: SuiteOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Lattice => lattice(opts.n, opts.maxdeg),
        Suite::RectangularRadicals => rectangular_radicals(),
        Suite::RankLoci => rank_loci(),
        Suite::Bridge => bridge(opts.maxdeg.min(3)),
        Suite::Veronese => veronese(50),
    }
}

/// `{2μ : λ ⊂ μ, |μ| = d, ℓ(μ) ≤ n}`, largest first.
pub fn expected_summands(lambda: &Partition, n: usize, d: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = Partition::all_of_size(d)
        .into_iter()
        .filter(|mu| mu.length() <= n && lambda.contains(mu))
        .map(|mu| mu.double())
        .collect();
    out.sort();
    out.reverse();
    out
}

fn small_partitions(max: usize) -> Vec<Partition> {
    Partition::all_up_to(max).into_iter().filter(|l| !l.is_empty()).collect()
}

fn lattice(n: usize, maxdeg: usize) -> Result<SuiteReport> {
    let space = SuperSpace::new(n, 0);
    let parts: Vec<Partition> = small_partitions(3).into_iter().filter(|l| l.length() <= n).collect();
    let models = parts.iter().map(|l| ideal_lambda(l, space)).collect::<Result<Vec<_>>>()?;
    let mut report = SuiteReport::default();
    for model in &models {
        for d in 0..=maxdeg {
            let got = graded_multiplicities(model, d)?;
            let want = expected_summands(&model.lambda, n, d);
            report.record(got == want, || format!("I({}) degree {d}: got {got:?}, want {want:?}", model.lambda));
        }
    }
    for a in &models {
        for b in &models {
            // I_μ ⊂ I_λ iff λ ⊂ μ
            let mut inside = true;
            for g in b.ideal.generators() {
                if !a.ideal.contains(g)? {
                    inside = false;
                    break;
                }
            }
            let want = a.lambda.contains(&b.lambda);
            report.record(inside == want, || format!("I({}) ⊂ I({}): got {inside}, want {want}", b.lambda, a.lambda));
        }
    }
    Ok(report)
}

fn rect(rows: usize, cols: usize) -> Partition {
    Partition::rectangle(rows, cols).expect("nonempty rectangle")
}

fn rectangular_radicals() -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let even = SuperSpace::new(3, 0);
    let a = ideal_lambda(&rect(2, 2), even)?.ideal;
    let b = ideal_lambda(&rect(2, 1), even)?.ideal;
    report.record(a.radical_equals(&b)?, || "rad I(2,2)(Q^3) = I(2,1)(Q^3)".into());

    let odd = SuperSpace::new(0, 4);
    let a = ideal_lambda(&rect(2, 2), odd)?.ideal;
    let b = rank_locus_ideal(RankBound::Infinite, RankBound::Finite(1), odd)?;
    report.record(a.radical_equals(&b)?, || "rad I(2,2)(Q^(0|4)) = (Pf_4)".into());
    Ok(report)
}

fn rank_loci() -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let space = SuperSpace::new(2, 2);
    for (r, s) in [(1, 1), (0, 0), (1, 0), (0, 1)] {
        let a = ideal_lambda(&rect(r + 1, s + 1), space)?.ideal;
        let b = rank_locus_ideal(RankBound::Finite(r), RankBound::Finite(s), space)?;
        report.record(a.radical_equals(&b)?, || format!("V(I({},{})) = X({r},{s}) on {space}", r + 1, s + 1));
    }
    Ok(report)
}

fn bridge(max_size: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for check in cross_validate(max_size)? {
        report.record(check.agree, || serde_json::to_string(&check).expect("serializable"));
    }
    Ok(report)
}

/// A random nonzero polynomial of degree at most 2 in the symmetric
/// coordinates of `ring`.
pub fn random_quadric(ring: Ring, rng: &mut ChaCha8Rng) -> Poly {
    let n = ring.nvars();
    loop {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let mut m = Monomial::one(n);
            for _ in 0..rng.gen_range(0..=2) {
                m = m.mul(&Monomial::var(n, rng.gen_range(0..ring.sym_vars())));
            }
            let c: i64 = rng.gen_range(-5..=5);
            terms.push((m, Rational::from_integer(c.into())));
        }
        let f = Poly::from_terms(ring, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

fn veronese(samples: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let kernel = veronese_kernel(3)?;
    let minors = rank_locus_ideal(RankBound::Finite(1), RankBound::Infinite, SuperSpace::new(3, 0))?;
    report.record(kernel.reduced_gb() == minors.reduced_gb(), || "Veronese kernel = 2x2 minors".into());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tested = 0;
    while tested < samples {
        let f = random_quadric(*kernel.ring(), &mut rng);
        if kernel.contains(&f)? {
            continue;
        }
        tested += 1;
        let nil = nilpotent_mod(&f, &kernel)?;
        report.record(!nil, || format!("{f} is nilpotent modulo the Veronese kernel"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("lemma9".parse::<Suite>().is_err());
    }

    #[test]
    fn expected_summands_small() {
        assert_eq!(expected_summands(&partition![1], 2, 2), vec![partition![4], partition![2, 2]]);
        assert!(expected_summands(&partition![2], 3, 1).is_empty());
        assert_eq!(expected_summands(&partition![1, 1], 3, 2), vec![partition![2, 2]]);
    }

    #[test]
    fn cheap_suites_pass() {
        let r = run_suite(Suite::RectangularRadicals, SuiteOptions::default()).unwrap();
        assert_eq!((r.checked, r.failures), (2, 0));
        let r = run_suite(Suite::RankLoci, SuiteOptions::default()).unwrap();
        assert_eq!((r.checked, r.failures), (4, 0));
    }
}
