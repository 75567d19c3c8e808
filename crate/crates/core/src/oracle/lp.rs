//! Phase-1 simplex over exact rationals with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polytope::BinaryPolytope;

pub type ExactRational = BigRational;

/// Feasibility problem `A x = b`, `x ≥ 0`.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub rows: Vec<Vec<ExactRational>>,
    pub rhs: Vec<ExactRational>,
}

#[derive(Clone, Debug)]
pub struct Phase1Outcome {
    pub feasible: bool,
    pub pivots: usize,
    /// Phase-1 objective (sum of artificials) before each pivot and at the end.
    pub objective_trace: Vec<ExactRational>,
    /// A feasible point when one exists.
    pub solution: Option<Vec<ExactRational>>,
    /// Final tableau as fractions, when requested.
    pub tableau_dump: Option<String>,
}

struct Tableau {
    // m rows of n + m columns (originals then artificials)
    a: Vec<Vec<ExactRational>>,
    b: Vec<ExactRational>,
    basis: Vec<usize>,
    // reduced costs of the phase-1 objective
    cost: Vec<ExactRational>,
    objective: ExactRational,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.a[r][e].clone();
        for x in self.a[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        self.b[r] /= &p;
        let (pivot_row, pivot_b) = (self.a[r].clone(), self.b[r].clone());
        for i in 0..self.a.len() {
            if i == r || self.a[i][e].is_zero() {
                continue;
            }
            let f = self.a[i][e].clone();
            for (x, y) in self.a[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.b[i] -= &f * &pivot_b;
        }
        let f = self.cost[e].clone();
        if !f.is_zero() {
            for (x, y) in self.cost.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.objective += &f * &pivot_b;
        }
        self.basis[r] = e;
    }

    fn dump(&self) -> String {
        let mut s = String::new();
        for (i, row) in self.a.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("x{} | {} | {}\n", self.basis[i], cells.join(" "), self.b[i]));
        }
        let cells: Vec<String> = self.cost.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("w  | {} | {}\n", cells.join(" "), self.objective));
        s
    }
}

impl LpProblem {
    pub fn variable_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Runs phase 1 with Bland's rule: entering column is the lowest index
    /// with negative reduced cost; ratio ties go to the lowest basic index.
    pub fn solve_phase1(&self, dump: bool) -> Phase1Outcome {
        let m = self.rows.len();
        let n = self.variable_count();
        assert!(self.rows.iter().all(|r| r.len() == n), "ragged constraint matrix");
        let mut a = Vec::with_capacity(m);
        let mut b = Vec::with_capacity(m);
        for (i, (row, rhs)) in self.rows.iter().zip(&self.rhs).enumerate() {
            let flip = rhs.is_negative();
            let mut full: Vec<ExactRational> =
                row.iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
            full.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            a.push(full);
            b.push(rhs.abs());
        }
        let mut cost = vec![BigRational::zero(); n + m];
        for j in 0..n {
            for row in &a {
                cost[j] -= &row[j];
            }
        }
        let objective = b.iter().sum();
        let mut t = Tableau {
            a,
            b,
            basis: (n..n + m).collect(),
            cost,
            objective,
        };

        let mut trace = vec![t.objective.clone()];
        let mut pivots = 0;
        while let Some(e) = (0..n + m).find(|&j| t.cost[j].is_negative()) {
            let mut leave: Option<(usize, ExactRational)> = None;
            for i in 0..m {
                if !t.a[i][e].is_positive() {
                    continue;
                }
                let ratio = &t.b[i] / &t.a[i][e];
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && t.basis[i] < t.basis[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            // the phase-1 objective is bounded below by zero, so a ratio always exists
            let (r, _) = leave.expect("phase 1 cannot be unbounded");
            t.pivot(r, e);
            pivots += 1;
            trace.push(t.objective.clone());
        }
        let feasible = t.objective.is_zero();
        let solution = feasible.then(|| {
            let mut x = vec![BigRational::zero(); n];
            for (i, &j) in t.basis.iter().enumerate() {
                if j < n {
                    x[j] = t.b[i].clone();
                }
            }
            x
        });
        Phase1Outcome {
            feasible,
            pivots,
            objective_trace: trace,
            solution,
            tableau_dump: dump.then(|| t.dump()),
        }
    }
}

fn int(k: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(k))
}

/// System asking whether the segment `[v_i, v_j]` meets the hull of the
/// other vertices: `Σ μ_k v_k − t v_i − s v_j = 0`, `Σ μ_k = 1`, `t + s = 1`.
/// Columns are `μ_k` for `k ∉ {i, j}` in vertex order, then `t`, `s`.
pub fn segment_problem(p: &BinaryPolytope, i: usize, j: usize) -> LpProblem {
    let d = p.ambient_dimension();
    let others: Vec<usize> = (0..p.vertex_count()).filter(|&k| k != i && k != j).collect();
    let cols = others.len() + 2;
    let mut rows = vec![vec![BigRational::zero(); cols]; d + 2];
    for (c, &k) in others.iter().enumerate() {
        for (r, &x) in p.vertices()[k].coords.iter().enumerate() {
            if x == 1 {
                rows[r][c] = int(1);
            }
        }
        rows[d][c] = int(1);
    }
    for (r, (&xi, &xj)) in p.vertices()[i].coords.iter().zip(&p.vertices()[j].coords).enumerate() {
        rows[r][cols - 2] = int(-(xi as i64));
        rows[r][cols - 1] = int(-(xj as i64));
    }
    rows[d + 1][cols - 2] = int(1);
    rows[d + 1][cols - 1] = int(1);
    let mut rhs = vec![BigRational::zero(); d + 2];
    rhs[d] = int(1);
    rhs[d + 1] = int(1);
    LpProblem { rows, rhs }
}

/// System asking whether the midpoint of `v_i`, `v_j` is a convex
/// combination of the other vertices, scaled by two:
/// `Σ μ_k v_k = v_i + v_j`, `Σ μ_k = 2`.
pub fn midpoint_problem(p: &BinaryPolytope, i: usize, j: usize) -> LpProblem {
    let d = p.ambient_dimension();
    let others: Vec<usize> = (0..p.vertex_count()).filter(|&k| k != i && k != j).collect();
    let mut rows = vec![vec![BigRational::zero(); others.len()]; d + 1];
    for (c, &k) in others.iter().enumerate() {
        for (r, &x) in p.vertices()[k].coords.iter().enumerate() {
            if x == 1 {
                rows[r][c] = int(1);
            }
        }
        rows[d][c] = int(1);
    }
    let mut rhs: Vec<ExactRational> = p.vertices()[i]
        .coords
        .iter()
        .zip(&p.vertices()[j].coords)
        .map(|(&a, &b)| int(a as i64 + b as i64))
        .collect();
    rhs.push(int(2));
    LpProblem { rows, rhs }
}

/// Geometric adjacency: `v_i`, `v_j` span an edge iff the segment between
/// them misses the convex hull of all other vertices.
pub fn lp_adjacent(p: &BinaryPolytope, i: usize, j: usize) -> bool {
    assert_ne!(i, j);
    !segment_problem(p, i, j).solve_phase1(false).feasible
}
