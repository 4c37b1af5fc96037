//! Named permutation groups.
//!
//! Fixed entries live in `data/catalog.json`; `S_n`, `A_n` and `I_n` are
//! built on demand, and `NAME^(k)` gives a parallel multiple.

use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::perm::{PermError, Permutation, PermutationGroup};

/// Where a simple group without fixed points sits in the classification of
/// distinguishing numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Classification {
    /// `A_n^(k)` with `n >= 5`.
    Alternating { n: u64, k: u64 },
    /// One of the listed exceptional groups, with its distinguishing number.
    Listed { d: u32 },
    /// A simple group outside the exceptions.
    Generic,
    /// Not a simple group without fixed points.
    Unclassified,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub degree: usize,
    pub generators: Vec<String>,
    pub order: String,
    pub simple: bool,
    pub classification: Classification,
    /// Whether the distinguishing number is checked by default.
    pub within_budget: bool,
    #[serde(default)]
    pub description: String,
}

impl CatalogEntry {
    pub fn group(&self) -> Result<PermutationGroup, PermError> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        PermutationGroup::from_cycle_strings(self.degree, &gens)
    }

    pub fn documented_order(&self) -> BigUint {
        self.order.parse().expect("catalog orders are integers")
    }

    pub fn matches(&self, name: &str) -> bool {
        let key = normalize(name);
        normalize(&self.name) == key || self.aliases.iter().any(|a| normalize(a) == key)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .flat_map(char::to_lowercase)
        .collect()
}

impl Catalog {
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            serde_json::from_str(include_str!("../../data/catalog.json")).expect("bundled catalog parses")
        })
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.matches(name))
    }
}

/// A resolved group name.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: PermutationGroup,
    pub classification: Classification,
}

/// Resolves `S_n`, `A_n`, `I_n`, catalog names and `NAME^(k)` or `NAME^k`.
pub fn named_group(name: &str) -> Result<NamedGroup, CatalogError> {
    let trimmed = name.trim();
    if let Some((base, mult)) = trimmed.rsplit_once('^') {
        let k: usize = mult
            .trim_matches(|c| c == '(' || c == ')')
            .parse()
            .map_err(|_| CatalogError::UnknownName(name.into()))?;
        let inner = named_group(base)?;
        let group = inner.group.parallel_multiple(k)?;
        let classification = match inner.classification {
            Classification::Alternating { n, k: k0 } => Classification::Alternating { n, k: k0 * k as u64 },
            Classification::Generic if k == 1 => Classification::Generic,
            Classification::Listed { d } if k == 1 => Classification::Listed { d },
            _ => Classification::Unclassified,
        };
        return Ok(NamedGroup {
            name: trimmed.into(),
            group,
            classification,
        });
    }
    let key: String = normalize(trimmed);
    let mut chars = key.chars();
    if let (Some(c), rest) = (chars.next(), chars.as_str()) {
        if let Some(n) = rest.parse::<usize>().ok().filter(|_| matches!(c, 's' | 'a' | 'i')) {
            let (group, classification) = match c {
                's' => (
                    PermutationGroup::symmetric(n),
                    if n == 2 { Classification::Generic } else { Classification::Unclassified },
                ),
                'a' => (
                    PermutationGroup::alternating(n),
                    match n {
                        3 => Classification::Generic,
                        n if n >= 5 => Classification::Alternating { n: n as u64, k: 1 },
                        _ => Classification::Unclassified,
                    },
                ),
                _ => (PermutationGroup::trivial(n), Classification::Unclassified),
            };
            return Ok(NamedGroup {
                name: trimmed.into(),
                group,
                classification,
            });
        }
    }
    let entry = Catalog::builtin()
        .get(trimmed)
        .ok_or_else(|| CatalogError::UnknownName(name.into()))?;
    Ok(NamedGroup {
        name: entry.name.clone(),
        group: entry.group()?,
        classification: entry.classification.clone(),
    })
}

/// Cycle-notation strings for a generator list, in the catalog's format.
pub fn generator_strings(gens: &[Permutation]) -> Vec<String> {
    gens.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::field::{projective_line_group, projective_space_group};
    use crate::analysis::simple::is_simple;

    fn entry(name: &str) -> &'static CatalogEntry {
        Catalog::builtin().get(name).unwrap()
    }

    #[test]
    fn documented_orders_match() {
        for e in &Catalog::builtin().entries {
            let g = e.group().unwrap();
            assert_eq!(g.degree(), e.degree, "{}", e.name);
            assert_eq!(g.order(), e.documented_order(), "{}", e.name);
        }
    }

    #[test]
    fn field_entries_match_their_construction() {
        for (name, g) in [
            ("L2(5)", projective_line_group(5)),
            ("L2(7)", projective_line_group(7)),
            ("L2(8)", projective_line_group(8)),
            ("A6on10", projective_line_group(9)),
            ("L2(11)", projective_line_group(11)),
            ("L3(2)", projective_space_group(3, 2)),
            ("L3(3)", projective_space_group(3, 3)),
            ("A8on15", projective_space_group(4, 2)),
        ] {
            assert_eq!(generator_strings(g.unwrap().generators()), entry(name).generators, "{name}");
        }
        let (pairs, _) = PermutationGroup::alternating(5).on_pairs();
        assert_eq!(generator_strings(pairs.generators()), entry("A5on10").generators);
    }

    #[test]
    fn small_entries_are_simple_and_transitive() {
        for e in Catalog::builtin().entries.iter().filter(|e| e.documented_order() <= BigUint::from(100_000u32)) {
            let g = e.group().unwrap();
            assert_eq!(is_simple(&g).unwrap(), e.simple, "{}", e.name);
            if !e.name.contains("||") {
                assert!(g.is_transitive(), "{}", e.name);
            }
        }
    }

    #[test]
    fn point_stabilizers_of_coset_entries() {
        // L2(11) on 11 points: stabilizer of order 60; M11 on 12: order 660.
        for (name, stab) in [("L2(11)on11", 60u32), ("M11on12", 660)] {
            let g = entry(name).group().unwrap();
            let chain = g.chain_with_base(&[0]);
            let s = PermutationGroup::new(g.degree(), chain.stabilizer_generators(1)).unwrap();
            assert_eq!(s.order(), BigUint::from(stab), "{name}");
        }
    }

    #[test]
    fn name_resolution() {
        assert_eq!(named_group("A_5").unwrap().group.order(), BigUint::from(60u32));
        assert_eq!(named_group("s4").unwrap().group.degree(), 4);
        assert_eq!(named_group("I_3").unwrap().group.degree(), 3);
        assert!(named_group("I3").unwrap().group.is_trivial());
        let m = named_group("A5^(2)").unwrap();
        assert_eq!(m.group.degree(), 10);
        assert_eq!(m.classification, Classification::Alternating { n: 5, k: 2 });
        assert_eq!(named_group("m11").unwrap().name, "M11");
        assert_eq!(named_group("(A6,10)").unwrap().name, "A6on10");
        assert!(named_group("Q8").is_err());
    }
}
