use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PermError;

/// A bijection on the points `0..degree`, stored as its image array.
///
/// Permutations act on the right: `p.image(x)` is the image `xp`, and
/// [`Permutation::compose`] applies `self` first, then the argument.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from `images[i] = image of i`, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(PermError::PointOutOfRange { point: x, degree: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotABijection);
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from a list of cycles, applied left to right.
    ///
    /// Cycles need not be disjoint; overlapping cycles are composed in order.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if !seen.insert(x) {
                    return Err(PermError::Parse(format!("point {x} repeated within a cycle")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            acc = acc.compose(&Permutation { images });
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `"(0 1 2)(3 4)"` on `degree` points.
    ///
    /// Points may be separated by spaces or commas; `"()"` and the empty
    /// string denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| PermError::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The product `self * other`: maps `x` to `(x self) other`.
    ///
    /// Panics on a degree mismatch; use [`Permutation::try_compose`] for a checked version.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] == x
    }

    /// Points moved by the permutation, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| !self.fixes(x)).collect()
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted list of all cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable();
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num_lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Embeds the permutation into `total` points, acting on `offset..offset+degree`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<usize> = (0..total).collect();
        for (x, &y) in self.images.iter().enumerate() {
            images[offset + x] = offset + y;
        }
        Permutation { images }
    }

    /// Side-by-side action: `self` on the first block of points, `other` on the second.
    pub fn juxtapose(&self, other: &Permutation) -> Permutation {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&y| y + n));
        Permutation { images }
    }

    /// Relabels the points: the result maps `relabel[x]` to `relabel[x self]`.
    pub fn relabeled(&self, relabel: &[usize]) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[relabel[x]] = relabel[y];
        }
        Permutation { images }
    }

    /// Action on a subset of points, which must be invariant under `self`.
    ///
    /// `points[i]` becomes point `i` of the restriction.
    pub fn restricted(&self, points: &[usize]) -> Option<Permutation> {
        let mut index = vec![usize::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            index[p] = i;
        }
        let images = points
            .iter()
            .map(|&p| index[self.images[p]])
            .collect::<Vec<_>>();
        if images.contains(&usize::MAX) {
            return None;
        }
        Some(Permutation { images })
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    a / num_gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Parses `"<degree>:<cycles>"`, e.g. `"5:(0 1)(2 3 4)"`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| PermError::Parse(format!("expected '<degree>:<cycles>', got {s:?}")))?;
        let degree = deg
            .trim()
            .parse()
            .map_err(|_| PermError::Parse(format!("bad degree {deg:?}")))?;
        Permutation::parse_cycles(degree, cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let p = Permutation::parse_cycles(5, "(0 3 1)(2 4)").unwrap();
        let e = Permutation::identity(5);
        assert_eq!(e.compose(&p), p);
        assert_eq!(p.compose(&e), p);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn composition_in_s3_is_noncommutative() {
        // Multiplication table of S_3 done by hand, action on the right:
        // (0 1)(1 2): 0->1->2, 1->0->0, 2->2->1, i.e. (0 2 1).
        // (1 2)(0 1): 0->0->1, 1->2->2, 2->1->0, i.e. (0 1 2).
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let ab = a.compose(&b);
        let ba = b.compose(&a);
        assert_eq!(ab, Permutation::parse_cycles(3, "(0 2 1)").unwrap());
        assert_eq!(ba, Permutation::parse_cycles(3, "(0 1 2)").unwrap());
        assert_ne!(ab, ba);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.try_compose(&b),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::parse_cycles(3, "(0 1 0)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 5)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1").is_err());
    }

    #[test]
    fn display_round_trips() {
        let p = Permutation::parse_cycles(6, "(3 4)(5 0 2)").unwrap();
        assert_eq!(p.to_string(), "(0 2 5)(3 4)");
        assert_eq!(Permutation::parse_cycles(6, &p.to_string()).unwrap(), p);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!("4:(0 1, 2)".parse::<Permutation>().unwrap().to_string(), "(0 1 2)");
    }

    #[test]
    fn order_and_parity() {
        let p = Permutation::parse_cycles(7, "(0 1)(2 3 4)").unwrap();
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(p.cycle_type(), vec![1, 1, 2, 3]);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(3), Permutation::parse_cycles(7, "(0 1)").unwrap());
    }

    #[test]
    fn juxtapose_and_restrict() {
        let a = Permutation::parse_cycles(2, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(0 1 2)").unwrap();
        let c = a.juxtapose(&b);
        assert_eq!(c.to_string(), "(0 1)(2 3 4)");
        assert_eq!(c.restricted(&[2, 3, 4]).unwrap(), b);
        assert!(c.restricted(&[1, 2]).is_none());
        assert_eq!(b.shifted(2, 5), Permutation::parse_cycles(5, "(2 3 4)").unwrap());
    }
}
