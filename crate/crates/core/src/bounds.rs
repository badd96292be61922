//! Upper bounds on the top nonzero degree of a tca generated by a finite
//! length polynomial functor `E` whose nonzero weight vectors are
//! `k`-nilpotent.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::{PolyFunctor, SuperSpace};

/// Value of the recursive bound together with the depth of the recursion
/// that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaBound {
    #[serde(serialize_with = "as_decimal")]
    pub eta: BigUint,
    pub depth: usize,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

type Memo = Mutex<HashMap<(PolyFunctor, u32), EtaBound>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `η_k(E) ≤ kd · P(d·η_k(E'_1 ⊕ ⋯ ⊕ E'_d) + kd·dim E(C))` with `d` the degree
/// of `E`, `P(n) = dim E(Q^(0|n))` and `E'_i` the weight-`i` pieces of the
/// shift of `E`. Functors of degree zero give 0.
pub fn eta_bound(functor: &PolyFunctor, k: u32) -> Result<EtaBound> {
    if k < 1 {
        return Err(Error::BadExponent(k));
    }
    Ok(eta(functor, k))
}

fn eta(functor: &PolyFunctor, k: u32) -> EtaBound {
    let d = functor.degree();
    if d == 0 {
        return EtaBound { eta: BigUint::zero(), depth: 0 };
    }
    let key = (functor.clone(), k);
    if let Some(hit) = memo().lock().expect("poisoned").get(&key) {
        return hit.clone();
    }
    let pieces = functor.shift_decompose();
    let lower = (1..=d)
        .filter_map(|i| pieces.get(&i))
        .fold(PolyFunctor::zero(), |acc, p| acc.direct_sum(p));
    let inner = eta(&lower, k);
    let kd = BigUint::from(k) * BigUint::from(d);
    let line = BigUint::from(functor.dim(SuperSpace::new(1, 0)));
    let arg = BigUint::from(d) * &inner.eta + &kd * line;
    let value = EtaBound { eta: &kd * functor.odd_dim(&arg), depth: inner.depth + 1 };
    memo().lock().expect("poisoned").insert(key, value.clone());
    value
}

/// The closed-form approximation `∏_{i=1}^{d} (ik)^{d!/i!}`.
pub fn rough_bound(d: u32, k: u32) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::BadExponent(k));
    }
    let mut out = BigUint::one();
    for i in 1..=d {
        // d!/i! = (i+1)(i+2)⋯d
        let exp: BigUint = (i + 1..=d).map(BigUint::from).product();
        let exp = u32::try_from(exp).map_err(|_| Error::TooLarge(format!("exponent in rough bound for d = {d}")))?;
        out *= BigUint::from(i * k).pow(exp);
    }
    Ok(out)
}
