use serde::{Deserialize, Serialize};

use crate::perm::{Permutation, PermutationGroup};

use super::DistinguishError;

/// A map from points `0..len` to colors `1..=d`; not every color need occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    d: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, d: u32) -> Result<Self, DistinguishError> {
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > d) {
            return Err(DistinguishError::ColorOutOfRange { color: c, d });
        }
        Ok(Coloring { colors, d })
    }

    pub fn constant(len: usize) -> Self {
        Coloring { colors: vec![1; len], d: 1 }
    }

    /// Every point its own color.
    pub fn discrete(len: usize) -> Self {
        Coloring {
            colors: (1..=len as u32).collect(),
            d: len.max(1) as u32,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, x: usize) -> u32 {
        self.colors[x]
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Same coloring with a larger palette.
    pub fn with_palette(&self, d: u32) -> Self {
        Coloring {
            colors: self.colors.clone(),
            d: d.max(self.d),
        }
    }
}

/// `color(x g) == color(x)` for every point.
pub fn preserves(g: &Permutation, c: &Coloring) -> Result<bool, DistinguishError> {
    if g.degree() != c.len() {
        return Err(DistinguishError::DegreeMismatch {
            group: g.degree(),
            coloring: c.len(),
        });
    }
    Ok((0..c.len()).all(|x| c.color(g.image(x)) == c.color(x)))
}

/// Whether only the identity of `group` preserves `c`, by backtracking
/// through the stabilizer chain.
pub fn is_distinguishing(group: &PermutationGroup, c: &Coloring) -> Result<bool, DistinguishError> {
    if group.degree() != c.len() {
        return Err(DistinguishError::DegreeMismatch {
            group: group.degree(),
            coloring: c.len(),
        });
    }
    let checker = super::search::LeafChecker::new(group);
    let mut nodes = 0;
    Ok(checker.is_distinguishing(c.colors(), &mut nodes))
}

/// The same question answered by listing every element; for cross-checks.
pub fn is_distinguishing_by_enumeration(
    group: &PermutationGroup,
    c: &Coloring,
    limit: u64,
) -> Result<bool, DistinguishError> {
    if group.degree() != c.len() {
        return Err(DistinguishError::DegreeMismatch {
            group: group.degree(),
            coloring: c.len(),
        });
    }
    for g in group.enumerate(limit)? {
        if !g.is_identity() && preserves(&g, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
