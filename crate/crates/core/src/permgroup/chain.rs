//! Deterministic Schreier–Sims. Used as an order oracle that does not rely on
//! element enumeration.

use num_bigint::BigUint;

use crate::perm::Perm;

struct Level {
    orbit: Vec<usize>,
    // transversal[pt] maps the level's base point to pt
    transversal: Vec<Option<Perm>>,
}

/// A base and strong generating set for a permutation group.
pub struct StabilizerChain {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let strong: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut chain = StabilizerChain {
            degree,
            base: Vec::new(),
            strong,
            levels: Vec::new(),
        };
        for s in chain.strong.clone() {
            if chain.base.iter().all(|&b| s.apply(b) == b) {
                chain.base.push(s.first_moved_point().unwrap());
            }
        }
        for l in 0..chain.base.len() {
            let level = chain.build_level(l);
            chain.levels.push(level);
        }
        let mut i = chain.base.len() as isize - 1;
        while i >= 0 {
            match chain.find_missing(i as usize) {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        chain
    }

    fn level_gens(&self, l: usize) -> impl Iterator<Item = &Perm> + '_ {
        let fixed = &self.base[..l];
        self.strong
            .iter()
            .filter(move |s| fixed.iter().all(|&b| s.apply(b) == b))
    }

    fn build_level(&self, l: usize) -> Level {
        let b = self.base[l];
        let gens: Vec<&Perm> = self.level_gens(l).collect();
        let mut transversal = vec![None; self.degree];
        transversal[b] = Some(Perm::identity(self.degree));
        let mut orbit = vec![b];
        let mut k = 0;
        while k < orbit.len() {
            let pt = orbit[k];
            let u = transversal[pt].clone().unwrap();
            for g in &gens {
                let img = g.apply(pt);
                if transversal[img].is_none() {
                    transversal[img] = Some(u.mul(g));
                    orbit.push(img);
                }
            }
            k += 1;
        }
        Level { orbit, transversal }
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`levels.len()` when it passed every level).
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for l in from..self.levels.len() {
            let img = g.apply(self.base[l]);
            match &self.levels[l].transversal[img] {
                None => return (g, l),
                Some(u) => g = g.mul(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    /// Checks the Schreier generators of level `i`; on the first one that
    /// does not sift, adds its residue as a strong generator and returns the
    /// level to resume from.
    fn find_missing(&mut self, i: usize) -> Option<usize> {
        let gens: Vec<Perm> = self.level_gens(i).cloned().collect();
        let level = &self.levels[i];
        for &pt in &level.orbit {
            let u = level.transversal[pt].as_ref().unwrap();
            for s in &gens {
                let w = level.transversal[s.apply(pt)].as_ref().unwrap();
                let y = u.mul(s).mul(&w.inverse());
                let (h, j) = self.sift(y, i + 1);
                if h.is_identity() {
                    continue;
                }
                if j == self.levels.len() {
                    self.base.push(h.first_moved_point().unwrap());
                    self.levels.push(Level {
                        orbit: Vec::new(),
                        transversal: Vec::new(),
                    });
                }
                self.strong.push(h);
                for l in i + 1..=j {
                    self.levels[l] = self.build_level(l);
                }
                return Some(j);
            }
        }
        None
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }
}
