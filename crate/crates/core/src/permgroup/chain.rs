//! Base and strong generating set via the deterministic Schreier–Sims algorithm.

use num_bigint::BigUint;
use rand::Rng;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    orbit: Vec<usize>,
    // transversal[k] maps `point` to `orbit[k]`
    transversal: Vec<Permutation>,
    slot: Vec<Option<u32>>,
}

impl Level {
    fn representative(&self, beta: usize) -> Option<&Permutation> {
        self.slot[beta].map(|k| &self.transversal[k as usize])
    }
}

/// Stabilizer chain `G = G_0 ≥ G_1 ≥ … ≥ G_k = 1` with `G_{i+1}` the
/// pointwise stabilizer of `base[0..=i]` in `G_i`.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    base: Vec<usize>,
    strong_generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier–Sims on `generators`, extending `initial_base` as needed.
    pub fn new(degree: usize, generators: &[Permutation], initial_base: &[usize]) -> Self {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &b in initial_base {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.fixes(b)) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        let mut chain = StabilizerChain {
            degree,
            base,
            strong_generators: strong,
            levels: Vec::new(),
        };
        for i in 0..chain.base.len() {
            let level = chain.build_level(i);
            chain.levels.push(level);
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match chain.first_failing_schreier_generator(level) {
                None => i -= 1,
                Some((residue, stop)) => {
                    if stop == chain.base.len() {
                        let p = residue.first_moved_point().expect("non-identity residue");
                        chain.base.push(p);
                        chain.levels.push(Level {
                            point: p,
                            orbit: Vec::new(),
                            transversal: Vec::new(),
                            slot: Vec::new(),
                        });
                    }
                    chain.strong_generators.push(residue);
                    for l in level + 1..=stop {
                        chain.levels[l] = chain.build_level(l);
                    }
                    i = stop as isize;
                }
            }
        }
        chain
    }

    fn generators_fixing_prefix(&self, len: usize) -> impl Iterator<Item = &Permutation> {
        let prefix = &self.base[..len];
        self.strong_generators
            .iter()
            .filter(move |g| prefix.iter().all(|&b| g.fixes(b)))
    }

    fn build_level(&self, i: usize) -> Level {
        let point = self.base[i];
        let gens: Vec<&Permutation> = self.generators_fixing_prefix(i).collect();
        let mut slot = vec![None; self.degree];
        let mut orbit = vec![point];
        let mut transversal = vec![Permutation::identity(self.degree)];
        slot[point] = Some(0);
        let mut head = 0;
        while head < orbit.len() {
            let beta = orbit[head];
            for s in &gens {
                let gamma = s.apply(beta);
                if slot[gamma].is_none() {
                    slot[gamma] = Some(orbit.len() as u32);
                    orbit.push(gamma);
                    transversal.push(s.compose(&transversal[head]));
                }
            }
            head += 1;
        }
        Level {
            point,
            orbit,
            transversal,
            slot,
        }
    }

    fn first_failing_schreier_generator(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        let gens: Vec<&Permutation> = self.generators_fixing_prefix(i).collect();
        for (k, u_beta) in level.transversal.iter().enumerate() {
            let beta = level.orbit[k];
            for s in &gens {
                let u_sbeta = level
                    .representative(s.apply(beta))
                    .expect("orbit is closed under generators");
                let schreier = u_sbeta.inverse().compose(&s.compose(u_beta));
                let (residue, stop) = self.sift_from(schreier, i + 1);
                if !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`base.len()` when it went all the way down).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let beta = g.apply(level.point);
            match level.representative(beta) {
                None => return (g, l),
                Some(u) => g = u.inverse().compose(&g),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(g.clone(), 0);
        residue.is_identity()
    }

    /// Uniformly random group element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = rng.gen_range(0..level.transversal.len());
            g = level.transversal[k].compose(&g);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cyc(c: &[usize], n: usize) -> Permutation {
        Permutation::from_cycles(&[c.to_vec()], n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let full: Vec<usize> = (0..n).collect();
            let chain = StabilizerChain::new(n, &[cyc(&full, n), cyc(&[0, 1], n)], &[]);
            let fact: usize = (1..=n).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn membership_in_alternating_group() {
        let n = 5;
        // A5 = <(0 1 2), (2 3 4)>
        let chain = StabilizerChain::new(n, &[cyc(&[0, 1, 2], n), cyc(&[2, 3, 4], n)], &[]);
        assert_eq!(chain.order(), BigUint::from(60u32));
        assert!(chain.contains(&cyc(&[0, 1, 2, 3, 4], n)));
        assert!(!chain.contains(&cyc(&[0, 1], n)));
    }

    #[test]
    fn random_elements_are_members() {
        let n = 6;
        let chain = StabilizerChain::new(n, &[cyc(&[0, 1, 2, 3, 4, 5], n), cyc(&[0, 5], n)], &[]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = chain.random_element(&mut rng);
            assert!(chain.contains(&g));
        }
    }

    #[test]
    fn trivial_group_has_order_one() {
        let chain = StabilizerChain::new(4, &[Permutation::identity(4)], &[]);
        assert_eq!(chain.order(), BigUint::from(1u32));
        assert!(chain.contains(&Permutation::identity(4)));
    }
}
