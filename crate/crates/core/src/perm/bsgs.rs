//! Base and strong generating set via deterministic incremental Schreier–Sims.

use num_bigint::BigUint;
use num_traits::One;

use super::Permutation;

/// One level `G^(i)` of a stabilizer chain: the stabilizer of the earlier
/// base points, its strong generators, and a transversal for the orbit of
/// its base point.
#[derive(Clone, Debug)]
pub struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        inverse[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverse,
        }
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    /// Coset representative `u` with `base_point * u == point`, if `point` is in the orbit.
    pub fn representative(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref()
    }

    pub fn representative_inverse(&self, point: usize) -> Option<&Permutation> {
        self.inverse[point].as_ref()
    }
}

/// A stabilizer chain `G = G^(0) >= G^(1) >= ... >= 1`.
///
/// Built by Knuth's incremental Schreier–Sims: every inserted element is
/// sifted, and every new Schreier generator is inserted one level down, so
/// each level's generators generate the full point stabilizer of the level above.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Builds a chain whose base starts with `base_prefix` (in order).
    pub fn with_base_prefix(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        for g in generators {
            chain.insert(0, g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Adds `g` to the group, keeping the chain complete.
    pub fn add_generator(&mut self, g: Permutation) -> bool {
        if self.contains(&g) {
            return false;
        }
        self.insert(0, g);
        true
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(0, g.clone()).0.is_identity()
    }

    /// Sifts `g` starting at level `start`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way through).
    pub fn sift_from(&self, start: usize, mut g: Permutation) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.base_point);
            match &level.inverse[beta] {
                Some(u_inv) => g = g.compose(u_inv),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    fn insert(&mut self, i: usize, g: Permutation) {
        if g.is_identity() {
            return;
        }
        let (residue, stop) = self.sift_from(i, g.clone());
        if residue.is_identity() && stop == self.levels.len() {
            return;
        }
        if i == self.levels.len() {
            let b = self.choose_base_point(&g);
            self.levels.push(Level::new(b, self.degree));
        }

        let level = &mut self.levels[i];
        level.generators.push(g.clone());
        let old_len = level.orbit.len();

        let mut k = 0;
        while k < level.orbit.len() {
            let beta = level.orbit[k];
            for s in &level.generators {
                let img = s.image(beta);
                if level.transversal[img].is_none() {
                    let u = level.transversal[beta].as_ref().unwrap().compose(s);
                    level.inverse[img] = Some(u.inverse());
                    level.transversal[img] = Some(u);
                    level.orbit.push(img);
                }
            }
            k += 1;
        }

        let mut schreier = Vec::new();
        for (k, &beta) in level.orbit.iter().enumerate() {
            let u = level.transversal[beta].as_ref().unwrap();
            let gens: &[Permutation] = if k < old_len {
                std::slice::from_ref(level.generators.last().unwrap())
            } else {
                &level.generators
            };
            for s in gens {
                let img = s.image(beta);
                let h = u.compose(s).compose(level.inverse[img].as_ref().unwrap());
                if !h.is_identity() {
                    schreier.push(h);
                }
            }
        }
        for h in schreier {
            self.insert(i + 1, h);
        }
    }

    fn choose_base_point(&self, g: &Permutation) -> usize {
        (0..self.degree)
            .find(|&x| !g.fixes(x))
            .expect("non-identity element moves a point")
    }

    /// Generators of the pointwise stabilizer of the first `k` base points.
    pub fn stabilizer_generators(&self, k: usize) -> Vec<Permutation> {
        self.levels.get(k).map(|l| l.generators.clone()).unwrap_or_default()
    }

    /// Every element of the group, as products `u_k ... u_1` of coset representatives.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            chain: self,
            counters: vec![0; self.levels.len()],
            done: false,
        }
    }
}

pub struct Elements<'a> {
    chain: &'a StabilizerChain,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let levels = &self.chain.levels;
        let mut g = Permutation::identity(self.chain.degree);
        for (level, &c) in levels.iter().zip(&self.counters).rev() {
            let u = level.transversal[level.orbit[c]].as_ref().unwrap();
            g = g.compose(u);
        }
        let mut j = 0;
        loop {
            if j == levels.len() {
                self.done = true;
                break;
            }
            self.counters[j] += 1;
            if self.counters[j] < levels[j].orbit.len() {
                break;
            }
            self.counters[j] = 0;
            j += 1;
        }
        Some(g)
    }
}
