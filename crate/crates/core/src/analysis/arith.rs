//! Index arithmetic for subgroups of `A_n` of index `2n`.
//!
//! A subgroup of `A_n` (`n >= 5`) of index below `C(n, r)` for some
//! `1 <= r <= n/2` satisfies one of: (i) `C(n,s) <= index <= C(n,s) s!` for
//! some `s < r`; (ii) `n = 2m` and `index = C(n,m)/2`; (iii) `(n, index)` is
//! one of a few exceptional pairs. This module evaluates those conditions for
//! `index = 2n`.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub const EXCEPTIONAL_PAIRS: [(u64, u64); 6] = [(6, 15), (5, 6), (6, 6), (7, 15), (8, 15), (9, 120)];

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexFeasibility {
    pub n: u64,
    pub index: u64,
    /// Smallest `r <= n/2` with `2n < C(n, r)`, if any.
    pub r: Option<u64>,
    /// Whether the hypothesis `index < C(n, r)` holds for some admissible `r`.
    pub premise_holds: bool,
    pub case_i: bool,
    pub case_ii: bool,
    pub case_iii: bool,
    pub feasible: bool,
    pub trace: Vec<String>,
}

/// Evaluates conditions (i)–(iii) for index `2n`.
///
/// When no `r <= n/2` satisfies `2n < C(n, r)` (only `n = 5`), the hypothesis
/// fails; `premise_holds` is false and (i) is evaluated with `r = floor(n/2)`,
/// so the verdict is just the three conditions and not a theorem about `A_n`.
pub fn an_index_2n_feasible(n: u64) -> IndexFeasibility {
    assert!(n >= 5, "the index conditions need n >= 5");
    let index = 2 * n;
    let idx = BigUint::from(index);
    let mut trace = Vec::new();
    let r_min = (1..=n / 2).find(|&r| idx < binomial(n, r));
    let premise_holds = r_min.is_some();
    let r = r_min.unwrap_or(n / 2);
    match r_min {
        Some(r) => trace.push(format!("premise: {index} < C({n},{r}) = {}", binomial(n, r))),
        None => trace.push(format!(
            "premise fails: {index} >= C({n},r) for all r <= {}; conditions evaluated with r = {r}",
            n / 2
        )),
    }
    let mut case_i = false;
    for s in 0..r {
        let lo = binomial(n, s);
        let hi = &lo * factorial(s);
        let hit = lo <= idx && idx <= hi;
        trace.push(format!("(i) s={s}: {lo} <= {index} <= {hi} is {hit}"));
        case_i |= hit;
    }
    let case_ii = n.is_multiple_of(2) && binomial(n, n / 2) == BigUint::from(2 * index);
    if n.is_multiple_of(2) {
        trace.push(format!(
            "(ii) C({n},{})/2 = {} vs {index}: {case_ii}",
            n / 2,
            binomial(n, n / 2) / 2u32
        ));
    } else {
        trace.push("(ii) n is odd".into());
    }
    let case_iii = EXCEPTIONAL_PAIRS.contains(&(n, index));
    trace.push(format!("(iii) ({n},{index}) exceptional: {case_iii}"));
    IndexFeasibility {
        n,
        index,
        r: r_min,
        premise_holds,
        case_i,
        case_ii,
        case_iii,
        feasible: case_i || case_ii || case_iii,
        trace,
    }
}
