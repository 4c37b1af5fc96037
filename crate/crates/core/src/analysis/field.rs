//! Small finite fields and the projective groups built over them.

use crate::perm::{PermError, Permutation, PermutationGroup};

/// `GF(q)` for small `q`, elements encoded as integers `0..q` whose base-`p`
/// digits are polynomial coefficients (lowest degree first).
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

/// Irreducible polynomials for the prime-power fields we support, as
/// coefficient lists of the reduction `x^k = -(c_0 + c_1 x + ...)`.
fn modulus(p: usize, k: usize) -> Option<Vec<usize>> {
    Some(match (p, k) {
        (2, 2) => vec![1, 1],       // x^2 + x + 1
        (2, 3) => vec![1, 1, 0],    // x^3 + x + 1
        (2, 4) => vec![1, 1, 0, 0], // x^4 + x + 1
        (3, 2) => vec![1, 0],       // x^2 + 1
        (3, 3) => vec![1, 2, 0],    // x^3 + 2x + 1
        (5, 2) => vec![2, 1],       // x^2 + x + 2
        _ => return None,
    })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl FiniteField {
    pub fn new(q: usize) -> Option<Self> {
        let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
        let mut k = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            k += 1;
        }
        if r != 1 || !is_prime(p) {
            return None;
        }
        let digits = |x: usize| -> Vec<usize> {
            let mut v = vec![0; k];
            let mut x = x;
            for d in v.iter_mut() {
                *d = x % p;
                x /= p;
            }
            v
        };
        let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
        let reduction = if k == 1 { vec![] } else { modulus(p, k)? };
        let mut add = vec![vec![0; q]; q];
        let mut mul = vec![vec![0; q]; q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = encode(&sum);
                let mut prod = vec![0; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &r) in reduction.iter().enumerate() {
                        // x^k = -(reduction), so c x^deg contributes -c r x^(deg-k+i)
                        prod[deg - k + i] = (prod[deg - k + i] + (p - c) * r) % p;
                    }
                }
                mul[a][b] = encode(&prod[..k]);
            }
        }
        Some(FiniteField { p, q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn is_prime_field(&self) -> bool {
        self.p == self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add[a][b] == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul[a][b] == 1)
    }

    /// The first generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (2..self.q)
            .find(|&w| {
                let mut x = w;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, w);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .unwrap_or(1)
    }
}

/// `L_2(q) = PSL(2,q)` on the `q + 1` points of the projective line
/// (`0..q` are field elements, `q` is infinity).
pub fn projective_line_group(q: usize) -> Result<PermutationGroup, PermError> {
    let f = FiniteField::new(q).ok_or_else(|| PermError::Parse(format!("no field of order {q}")))?;
    let inf = q;
    let translate: Vec<usize> = (0..=q).map(|x| if x == inf { inf } else { f.add(x, 1) }).collect();
    let invert: Vec<usize> = (0..=q)
        .map(|x| {
            if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                f.neg(f.inv(x).unwrap())
            }
        })
        .collect();
    let mut gens = vec![Permutation::from_images(translate)?, Permutation::from_images(invert)?];
    if !f.is_prime_field() {
        let w = f.primitive_element();
        let w2 = f.mul(w, w);
        let scale: Vec<usize> = (0..=q).map(|x| if x == inf { inf } else { f.mul(x, w2) }).collect();
        gens.push(Permutation::from_images(scale)?);
    }
    PermutationGroup::new(q + 1, gens)
}

/// `L_d(q) = PSL(d,q)` on the points of `PG(d-1, q)`, generated by the
/// coordinate-cycling matrix and one elementary transvection.
pub fn projective_space_group(d: usize, q: usize) -> Result<PermutationGroup, PermError> {
    let f = FiniteField::new(q).ok_or_else(|| PermError::Parse(format!("no field of order {q}")))?;
    if d < 2 {
        return Err(PermError::Parse("projective dimension must be at least 1".into()));
    }
    // Normalized vectors: first nonzero coordinate equals 1.
    let mut points: Vec<Vec<usize>> = Vec::new();
    let total = q.pow(d as u32);
    for code in 1..total {
        let mut v = vec![0; d];
        let mut c = code;
        for x in v.iter_mut() {
            *x = c % q;
            c /= q;
        }
        v.reverse();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            points.push(v);
        }
    }
    points.sort();
    let normalize = |v: &[usize]| -> Vec<usize> {
        let lead = *v.iter().find(|&&x| x != 0).unwrap();
        let s = f.inv(lead).unwrap();
        v.iter().map(|&x| f.mul(x, s)).collect()
    };
    let index_of = |v: &[usize]| points.binary_search(&normalize(v)).unwrap();
    let act = |m: &dyn Fn(&[usize]) -> Vec<usize>| -> Result<Permutation, PermError> {
        Permutation::from_images(points.iter().map(|v| index_of(&m(v))).collect())
    };
    // v -> v * C where C cycles coordinates; in characteristic other than 2 and even d
    // a sign keeps the determinant 1.
    let sign = if d.is_multiple_of(2) { f.neg(1) } else { 1 };
    let cycle = act(&|v: &[usize]| {
        let mut w = vec![0; d];
        for i in 0..d {
            w[(i + 1) % d] = v[i];
        }
        w[0] = f.mul(w[0], sign);
        w
    })?;
    // v -> v (I + E_{01}): adds the first coordinate to the second.
    let transvection = act(&|v: &[usize]| {
        let mut w = v.to_vec();
        w[1] = f.add(w[1], v[0]);
        w
    })?;
    PermutationGroup::new(points.len(), vec![cycle, transvection])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            let w = f.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(x, w);
            }
            assert_eq!(seen.len(), q - 1);
        }
        assert!(FiniteField::new(6).is_none());
    }

    #[test]
    fn projective_line_orders() {
        for (q, order) in [(4, 60u32), (5, 60), (7, 168), (8, 504), (9, 360), (11, 660), (13, 1092)] {
            let g = projective_line_group(q).unwrap();
            assert_eq!(g.order(), BigUint::from(order), "q={q}");
            assert!(g.is_2_transitive());
        }
    }

    #[test]
    fn projective_space_orders() {
        for (d, q, degree, order) in [(3, 2, 7, 168u32), (3, 3, 13, 5616), (4, 2, 15, 20160), (2, 7, 8, 168)] {
            let g = projective_space_group(d, q).unwrap();
            assert_eq!(g.degree(), degree);
            assert_eq!(g.order(), BigUint::from(order), "d={d} q={q}");
        }
    }
}
