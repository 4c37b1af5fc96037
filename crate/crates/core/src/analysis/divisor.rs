//! Which proper divisors `d` of `2n` admit a transitive action of degree `d`.

use serde::Serialize;

use super::catalog::{named_group, CatalogError};
use super::subgroups::{transitive_action_exists, SubgroupSearch, SubgroupSearchBudget};

#[derive(Clone, Debug, Serialize)]
pub struct DivisorVerdict {
    pub d: u64,
    pub subgroup_order: String,
    /// `Some(true)` if a transitive action on `d` points exists, `None` if unknown.
    pub action_exists: Option<bool>,
    pub search: SubgroupSearch,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorReport {
    pub group: String,
    pub n: u64,
    pub divisors: Vec<DivisorVerdict>,
    /// No divisor other than `n` admits an action (false also if any verdict is unknown).
    pub holds: bool,
    pub complete: bool,
}

/// Divisors `d` of `m` with `1 < d < m`.
pub fn proper_divisors(m: u64) -> Vec<u64> {
    (2..m).filter(|d| m.is_multiple_of(*d)).collect()
}

pub fn lemma_divisor_check(
    name: &str,
    n: u64,
    budget: &SubgroupSearchBudget,
) -> Result<DivisorReport, CatalogError> {
    let named = named_group(name)?;
    let order = named.group.order();
    let mut divisors = Vec::new();
    for d in proper_divisors(2 * n) {
        let search = transitive_action_exists(&named.group, d, budget);
        let subgroup_order = if &order % d == num_bigint::BigUint::ZERO {
            (&order / d).to_string()
        } else {
            "-".into()
        };
        divisors.push(DivisorVerdict {
            d,
            subgroup_order,
            action_exists: search.exists(),
            search,
        });
    }
    let complete = divisors.iter().all(|v| v.action_exists.is_some());
    let holds = divisors
        .iter()
        .all(|v| v.d == n || v.action_exists == Some(false));
    Ok(DivisorReport {
        group: named.name,
        n,
        divisors,
        holds,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors() {
        assert_eq!(proper_divisors(12), vec![2, 3, 4, 6]);
        assert_eq!(proper_divisors(20), vec![2, 4, 5, 10]);
        assert_eq!(proper_divisors(14), vec![2, 7]);
    }

    #[test]
    fn alternating_six() {
        let r = lemma_divisor_check("A6", 6, &SubgroupSearchBudget::default()).unwrap();
        assert!(r.holds && r.complete);
        let six = r.divisors.iter().find(|v| v.d == 6).unwrap();
        assert_eq!(six.action_exists, Some(true));
    }

    #[test]
    fn simple_group_of_order_168() {
        let r = lemma_divisor_check("L3(2)", 7, &SubgroupSearchBudget::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.divisors[0].action_exists, Some(false));
    }
}
