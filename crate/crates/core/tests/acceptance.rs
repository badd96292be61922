//! Acceptance gate: each criterion prints one PASS/FAIL line with its
//! runtime, and the process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tca::bounds::{eta_bound, rough_bound};
use tca::functor::{schur_dim, schur_nonzero, PolyFunctor, SuperSpace};
use tca::models::{graded_multiplicities, ideal_lambda, rank_locus_ideal, veronese_kernel, RankBound};
use tca::partition::Partition;
use tca::spectrum::{cross_validate, gl_contains, gl_radical, is_gl_prime, minimal_gl_primes, nilpotent_mod, GlIdeal, GlPrime};
use tca::verify::{expected_summands, random_quadric};
use tca::Result;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn rect(rows: usize, cols: usize) -> Partition {
    Partition::rectangle(rows, cols).unwrap()
}

fn ideal_lattice() -> Result<Outcome> {
    let n = 3;
    let space = SuperSpace::new(n, 0);
    let mut checked = 0;
    let mut bad = Vec::new();
    for lambda in Partition::all_up_to(3) {
        let model = ideal_lambda(&lambda, space)?;
        for d in 0..=4 {
            let got = graded_multiplicities(&model, d)?;
            let want = expected_summands(&lambda, n, d);
            checked += 1;
            if got != want {
                bad.push(format!("λ=({lambda}) d={d}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} graded pieces, mismatches: {bad:?}"))
}

fn determinantal_radical() -> Result<Outcome> {
    let space = SuperSpace::new(3, 0);
    let a = ideal_lambda(&rect(2, 2), space)?.ideal;
    let b = ideal_lambda(&rect(2, 1), space)?.ideal;
    let eq = a.radical_equals(&b)?;
    outcome(eq, format!("rad I(2,2)(Q^3) = I(2,1)(Q^3): {eq}"))
}

fn pfaffian_radical() -> Result<Outcome> {
    let space = SuperSpace::new(0, 4);
    let a = ideal_lambda(&rect(2, 2), space)?.ideal;
    let pf = rank_locus_ideal(RankBound::Infinite, RankBound::Finite(1), space)?;
    let eq = a.radical_equals(&pf)?;
    outcome(eq, format!("rad I(2,2)(Q^(0|4)) = (Pf): {eq}, Pfaffian {}", pf.generators()[0]))
}

fn mixed_rank_locus() -> Result<Outcome> {
    let space = SuperSpace::new(2, 2);
    let a = ideal_lambda(&rect(2, 2), space)?.ideal;
    let b = rank_locus_ideal(RankBound::Finite(1), RankBound::Finite(1), space)?;
    let eq = a.radical_equals(&b)?;
    outcome(eq, format!("V(I(2,2)(Q^(2|2))) = X(1,1): {eq}"))
}

fn bridge() -> Result<Outcome> {
    let checks = cross_validate(3)?;
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.agree)
        .map(|c| format!("({}) vs ({})", c.pair[0], c.pair[1]))
        .collect();
    outcome(bad.is_empty() && checks.len() == 36, format!("{} pairs, disagreements: {bad:?}", checks.len()))
}

fn random_partition(rng: &mut ChaCha8Rng, max_size: usize) -> Partition {
    let size = rng.gen_range(1..=max_size);
    let mut parts = Vec::new();
    let mut left = size;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    Partition::from_unsorted(parts)
}

fn classification() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut shapes = 0;
    for lambda in Partition::all_up_to(12).into_iter().filter(|l| !l.is_empty()) {
        shapes += 1;
        let one_corner = lambda.corners()?.len() == 1;
        if is_gl_prime(&GlIdeal::generated(lambda.clone())) != one_corner {
            bad.push(format!("prime test on ({lambda})"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let count = rng.gen_range(1..=4);
        let j = GlIdeal::sum((0..count).map(|_| random_partition(&mut rng, 8)));
        let primes = minimal_gl_primes(&j)?;
        let mut union = Partition::empty();
        for p in &primes {
            match *p {
                GlPrime::Rect { rows, cols } => union = union.union(&rect(rows, cols)),
                GlPrime::Zero => bad.push(format!("zero prime over {j}")),
            }
            if !gl_contains(&j, &p.ideal()) {
                bad.push(format!("{j} not inside {}", p.ideal()));
            }
        }
        for p in &primes {
            for q in &primes {
                if p != q && gl_contains(&p.ideal(), &q.ideal()) {
                    bad.push(format!("non-minimal primes over {j}"));
                }
            }
        }
        if GlIdeal::generated(union) != gl_radical(&j) {
            bad.push(format!("corner rectangles do not rebuild the radical of {j}"));
        }
    }
    outcome(bad.is_empty(), format!("{shapes} shapes, 200 random sums, problems: {bad:?}"))
}

fn veronese() -> Result<Outcome> {
    let kernel = veronese_kernel(3)?;
    let minors = rank_locus_ideal(RankBound::Finite(1), RankBound::Infinite, SuperSpace::new(3, 0))?;
    let same = kernel.reduced_gb() == minors.reduced_gb();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tested = 0;
    let mut nilpotent = 0;
    while tested < 50 {
        let f = random_quadric(*kernel.ring(), &mut rng);
        if kernel.contains(&f)? {
            continue;
        }
        tested += 1;
        if nilpotent_mod(&f, &kernel)? {
            nilpotent += 1;
        }
    }
    outcome(
        same && nilpotent == 0,
        format!("kernel GB = minors GB: {same}, nilpotent among {tested} samples: {nilpotent}"),
    )
}

fn schur_evaluation() -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for lambda in Partition::all_up_to(6) {
        for r in 0..=3 {
            for s in 0..=3 {
                let space = SuperSpace::new(r, s);
                let dim = schur_dim(&lambda, space);
                let vanishing_ok = (dim > 0) == (lambda.part(r) <= s) && schur_nonzero(&lambda, space) == (dim > 0);
                let transpose_ok = dim == schur_dim(&lambda.transpose(), SuperSpace::new(s, r));
                checked += 1;
                if !(vanishing_ok && transpose_ok) {
                    bad.push(format!("({lambda}) on ({r}|{s})"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} evaluations, problems: {bad:?}"))
}

fn bounds() -> Result<Outcome> {
    let mut bad = Vec::new();
    let shapes: Vec<Partition> = Partition::all_up_to(4).into_iter().collect();
    let mut functors: Vec<PolyFunctor> = shapes.iter().map(|l| PolyFunctor::schur(l.clone())).collect();
    for (i, a) in shapes.iter().enumerate() {
        for b in &shapes[i..] {
            let mut f = PolyFunctor::schur(a.clone());
            f.add_term(b.clone(), 1);
            functors.push(f);
        }
    }
    functors.push("sym:4 + wedge:4 + {(2,1):2} + sym:0".parse()?);
    for f in &functors {
        let d = f.degree();
        let mut previous = BigUint::from(0u32);
        for k in 1..=3u32 {
            let eta = eta_bound(f, k)?.eta;
            if eta < previous {
                bad.push(format!("{f}: not monotone at k={k}"));
            }
            if eta < BigUint::from(d as u64 * u64::from(k - 1)) {
                bad.push(format!("{f}: below d(k-1) at k={k}"));
            }
            previous = eta;
        }
    }
    // d!/i! exponents: d=1 → k; d=2 → k²·2k; d=3 → k⁶·(2k)³·3k.
    for k in 1..=3u64 {
        let hand = [1, k, 2 * k.pow(3), 24 * k.pow(10)];
        for (d, want) in hand.into_iter().enumerate() {
            if rough_bound(d as u32, k as u32)? != BigUint::from(want) {
                bad.push(format!("rough bound d={d} k={k}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{} functors, k ≤ 3, problems: {bad:?}", functors.len()))
}

type Criterion = (&'static str, fn() -> Result<Outcome>, Duration);

fn main() -> ExitCode {
    let minute = Duration::from_secs(60);
    let criteria: [Criterion; 9] = [
        ("1 ideal lattice", ideal_lattice, 5 * minute),
        ("2 determinantal radical", determinantal_radical, 5 * minute),
        ("3 Pfaffian radical", pfaffian_radical, 5 * minute),
        ("4 mixed rank locus", mixed_rank_locus, 30 * minute),
        ("5 bridge consistency", bridge, 60 * minute),
        ("6 classification shape", classification, minute),
        ("7 Veronese example", veronese, 10 * minute),
        ("8 Schur evaluation", schur_evaluation, minute),
        ("9 bounds", bounds, minute),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass && elapsed <= budget, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {verdict} ({:.2?} of {:?}) {detail}", elapsed, budget);
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
