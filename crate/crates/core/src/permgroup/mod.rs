//! Finite groups as permutation groups: elements, orders, named families and
//! the plain-text group-spec format.

mod chain;
mod perm;
mod spec;

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

pub use chain::StabilizerChain;
pub use perm::{parse_cycles, Permutation};
pub use spec::{parse_group_spec, parse_group_spec_list, realize_group, GroupSpec};

/// Largest group materialised element by element.
pub const ENUMERATION_LIMIT: usize = 100_000;

/// Largest group for the brute-force minimum generator count.
pub const MIN_GENERATORS_LIMIT: usize = 1_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("image list {0:?} is not a bijection")]
    NotABijection(Vec<usize>),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears twice in one permutation")]
    RepeatedPoint(usize),
    #[error("unbalanced cycle in `{0}`")]
    UnbalancedCycle(String),
    #[error("malformed cycle notation `{0}`")]
    MalformedCycles(String),
    #[error("generators have inconsistent degrees {0} and {1}")]
    InconsistentDegrees(usize, usize),
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("group parameter must be positive in `{0}`")]
    BadParameter(String),
    #[error("empty group spec")]
    Empty,
    #[error("expected exactly one group spec, found {0}")]
    ExpectedOne(usize),
    #[error("group has more than {limit} elements; use order_of instead of enumerating")]
    TooLarge { limit: usize },
}

/// A finite group given by permutation generators of one common degree.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cached_order: OnceLock<BigUint>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::InconsistentDegrees(degree, g.degree()));
            }
        }
        Ok(PermutationGroup {
            degree,
            generators,
            cached_order: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            cached_order: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn stabilizer_chain(&self) -> StabilizerChain {
        StabilizerChain::new(self.degree, &self.generators, &[])
    }

    /// Exact order, cached after the first call.
    pub fn order(&self) -> &BigUint {
        self.cached_order
            .get_or_init(|| self.stabilizer_chain().order())
    }

    /// Order as a machine integer, when it fits.
    pub fn order_usize(&self) -> Option<usize> {
        self.order().to_usize()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.stabilizer_chain().contains(g)
    }

    /// All elements by breadth-first closure over the generators, identity first.
    pub fn enumerate_elements(&self) -> Result<Vec<Permutation>, GroupError> {
        let id = self.identity();
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(id.clone(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in &self.generators {
                let next = s.compose(&elements[k]);
                if !index.contains_key(&next) {
                    if elements.len() >= ENUMERATION_LIMIT {
                        return Err(GroupError::TooLarge {
                            limit: ENUMERATION_LIMIT,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let _ = self.cached_order.set(BigUint::from(elements.len()));
        Ok(elements)
    }

    /// Smallest number of elements that generate the group, by exhaustive
    /// search over subsets of increasing size. `None` above the size guard.
    pub fn minimum_generator_count(&self) -> Option<usize> {
        let n = self.order_usize()?;
        if n > MIN_GENERATORS_LIMIT {
            return None;
        }
        if n == 1 {
            return Some(0);
        }
        let table = CayleyTable::new(&self.enumerate_elements().ok()?);
        let candidates: Vec<usize> = (1..n).collect();
        for k in 1.. {
            let mut chosen = Vec::with_capacity(k);
            if table.some_subset_generates(&candidates, 0, k, &mut chosen) {
                return Some(k);
            }
        }
        unreachable!()
    }
}

/// Multiplication table on an enumerated element list.
pub(crate) struct CayleyTable {
    // product[a][b] = index of a·b
    product: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub(crate) fn new(elements: &[Permutation]) -> Self {
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let product = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        CayleyTable { product }
    }

    fn len(&self) -> usize {
        self.product.len()
    }

    fn generated_size(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.product[s][x];
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    fn some_subset_generates(
        &self,
        candidates: &[usize],
        from: usize,
        k: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return self.generated_size(chosen) == self.len();
        }
        for i in from..candidates.len() {
            chosen.push(candidates[i]);
            if self.some_subset_generates(candidates, i + 1, k, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn group(text: &str) -> PermutationGroup {
        realize_group(&parse_group_spec(text).unwrap())
    }

    #[test]
    fn trivial_group() {
        let g = PermutationGroup::trivial(1);
        let els = g.enumerate_elements().unwrap();
        assert_eq!(els, vec![Permutation::identity(1)]);
        assert_eq!(g.order(), &BigUint::from(1u32));
        assert_eq!(g.minimum_generator_count(), Some(0));
    }

    #[test]
    fn klein_four_is_exponent_two() {
        let g = group("klein4");
        let els = g.enumerate_elements().unwrap();
        assert_eq!(els.len(), 4);
        assert!(els.iter().all(|e| e.compose(e).is_identity()));
        assert_eq!(g.minimum_generator_count(), Some(2));
    }

    #[test]
    fn dihedral_six_has_twelve_elements() {
        let g = group("dihedral 6");
        let els = g.enumerate_elements().unwrap();
        assert_eq!(els.len(), 12);
        // brute force: distinct symmetries of the hexagon among all 6! permutations
        let hexagon_edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let mut count = 0;
        for p in all_perms(6) {
            let ok = hexagon_edges.iter().all(|&(a, b)| {
                let (x, y) = (p[a], p[b]);
                (x + 1) % 6 == y || (y + 1) % 6 == x
            });
            if ok {
                count += 1;
            }
        }
        assert_eq!(count, 12);
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn named_orders() {
        assert_eq!(group("symmetric 3").order(), &BigUint::from(6u32));
        assert_eq!(group("symmetric 5").order(), &BigUint::from(120u32));
        assert_eq!(group("quaternion8").order(), &BigUint::from(8u32));
        assert_eq!(group("product cyclic 2 ; cyclic 4").order(), &BigUint::from(8u32));
        assert_eq!(group("dihedral 4").order(), &BigUint::from(8u32));
        assert_eq!(group("dihedral 2").order(), &BigUint::from(4u32));
        assert_eq!(group("dihedral 1").order(), &BigUint::from(2u32));
        assert_eq!(group("cyclic 1").order(), &BigUint::from(1u32));
    }

    #[test]
    fn cyclic_orders_up_to_twelve() {
        for k in 1..=12u32 {
            let g = group(&format!("cyclic {k}"));
            assert_eq!(g.order(), &BigUint::from(k));
            assert_eq!(g.enumerate_elements().unwrap().len(), k as usize);
        }
    }

    #[test]
    fn minimum_generators() {
        assert_eq!(group("cyclic 7").minimum_generator_count(), Some(1));
        assert_eq!(group("quaternion8").minimum_generator_count(), Some(2));
        assert_eq!(group("product cyclic 2 ; cyclic 4").minimum_generator_count(), Some(2));
        assert_eq!(group("product cyclic 2 ; cyclic 3").minimum_generator_count(), Some(1));
        assert_eq!(group("symmetric 7").minimum_generator_count(), None);
    }

    #[test]
    fn quaternion_brute_force_pairs() {
        // Q8 is not cyclic, and some pair generates it.
        let g = group("quaternion8");
        let els = g.enumerate_elements().unwrap();
        assert!(els.iter().all(|e| e.order() < 8));
        let table = CayleyTable::new(&els);
        let mut found = false;
        for a in 0..8 {
            for b in a + 1..8 {
                if table.generated_size(&[a, b]) == 8 {
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn closure_is_a_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for text in ["dihedral 5", "quaternion8", "symmetric 4", "product klein4 ; cyclic 3"] {
            let g = group(text);
            let els = g.enumerate_elements().unwrap();
            assert!(els.contains(&g.identity()));
            for _ in 0..100 {
                let a = &els[rng.gen_range(0..els.len())];
                let b = &els[rng.gen_range(0..els.len())];
                assert!(els.contains(&a.compose(b)));
                assert!(els.contains(&a.inverse()));
            }
            assert_eq!(g.order(), &BigUint::from(els.len()));
        }
    }

    #[test]
    fn enumeration_guard() {
        let g = group("symmetric 9");
        assert_eq!(
            g.enumerate_elements(),
            Err(GroupError::TooLarge {
                limit: ENUMERATION_LIMIT
            })
        );
        assert_eq!(g.order(), &BigUint::from(362_880u32));
    }
}
