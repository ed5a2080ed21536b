//! Exact two-phase simplex over free variables.
//!
//! Problems have the form `opt c·x  s.t.  a_i·x <= b_i` with `x` unrestricted.
//! Free variables are split as `x = x⁺ - x⁻`, every row gets a slack, and
//! rows with a negative right-hand side get an artificial for phase one.
//! Bland's rule (lowest index entering and leaving) rules out cycling.
//!
//! The reported argpoint is the lexicographically smallest optimal point,
//! obtained by re-solving with the optimal value pinned and minimizing one
//! coordinate at a time. On a bounded optimal face this is a vertex.

use num_traits::{Signed, Zero};

use crate::error::{GeomError, Result};
use crate::polytope::HalfSpace;
use crate::rational::Rational;
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub argpoint: Vector,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// reduced costs, last entry holds minus the objective value
    z: Vec<Rational>,
    ncols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rational::from_integer(1.into()) / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.z);
        self.basis[r] = c;
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        let mut z: Vec<Rational> = costs.to_vec();
        z.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if !cb.is_zero() {
                for (x, t) in z.iter_mut().zip(&self.rows[i]) {
                    *x -= cb * t;
                }
            }
        }
        self.z = z;
    }

    fn run(&mut self, allowed: usize) -> Outcome {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.z[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[self.ncols] / &row[enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn value(&self) -> Rational {
        -&self.z[self.ncols]
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rows[i][self.ncols].clone();
        }
        x
    }
}

/// Minimizes `c·x` over `{ x : a_i·x <= b_i }`, returning one optimal basic solution.
fn simplex_min(c: &[Rational], cons: &[(Vec<Rational>, Rational)]) -> Result<(Rational, Vec<Rational>)> {
    let n = c.len();
    let m = cons.len();
    let n_art = cons.iter().filter(|(_, b)| b.is_negative()).count();
    let ncols = 2 * n + m + n_art;
    let art_start = 2 * n + m;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_art = art_start;
    for (i, (a, b)) in cons.iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols + 1];
        let sign = if b.is_negative() { -Rational::from_integer(1.into()) } else { Rational::from_integer(1.into()) };
        for j in 0..n {
            row[j] = &sign * &a[j];
            row[n + j] = -&row[j];
        }
        row[2 * n + i] = sign.clone();
        row[ncols] = &sign * b;
        if b.is_negative() {
            row[next_art] = Rational::from_integer(1.into());
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(2 * n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis,
        z: Vec::new(),
        ncols,
    };

    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); ncols];
        for x in &mut phase1[art_start..] {
            *x = Rational::from_integer(1.into());
        }
        t.set_costs(&phase1);
        if let Outcome::Unbounded = t.run(ncols) {
            unreachable!("phase one objective is bounded below by zero");
        }
        if t.value().is_positive() {
            return Err(GeomError::Infeasible);
        }
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        // redundant row
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut costs = vec![Rational::zero(); ncols];
    for j in 0..n {
        costs[j] = c[j].clone();
        costs[n + j] = -&c[j];
    }
    t.set_costs(&costs);
    match t.run(art_start) {
        Outcome::Unbounded => Err(GeomError::UnboundedObjective),
        Outcome::Optimal => {
            let cols = t.column_values();
            let x = (0..n).map(|j| &cols[j] - &cols[n + j]).collect();
            Ok((t.value(), x))
        }
    }
}

/// Exact optimum of a linear objective over a halfspace system.
pub fn lp_solve(objective: &Vector, constraints: &[HalfSpace], sense: Sense) -> Result<LpSolution> {
    let n = objective.dim();
    for h in constraints {
        h.normal().check_dim(n)?;
    }
    let mut cons: Vec<(Vec<Rational>, Rational)> = constraints
        .iter()
        .map(|h| (h.normal().coords().to_vec(), h.offset().clone()))
        .collect();
    let c: Vec<Rational> = match sense {
        Sense::Min => objective.coords().to_vec(),
        Sense::Max => objective.coords().iter().map(|x| -x).collect(),
    };
    let (min_value, basic_point) = simplex_min(&c, &cons)?;

    // pin the optimum, then take the lexicographic minimum of the optimal face
    cons.push((c.clone(), min_value.clone()));
    let mut point = basic_point;
    for k in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[k] = Rational::from_integer(1.into());
        match simplex_min(&e, &cons) {
            Ok((w, x)) => {
                cons.push((e, w));
                point = x;
            }
            // unbounded optimal face: keep the basic solution
            Err(GeomError::UnboundedObjective) => break,
            Err(e) => return Err(e),
        }
    }
    let value = match sense {
        Sense::Min => min_value,
        Sense::Max => -min_value,
    };
    Ok(LpSolution {
        value,
        argpoint: Vector::new(point),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn hs(n: &[i64], b: i64) -> HalfSpace {
        HalfSpace::new(Vector::from_ints(n), int(b)).unwrap()
    }

    fn square() -> Vec<HalfSpace> {
        vec![hs(&[1, 0], 1), hs(&[-1, 0], 1), hs(&[0, 1], 1), hs(&[0, -1], 1)]
    }

    fn diamond() -> Vec<HalfSpace> {
        vec![hs(&[1, 1], 1), hs(&[1, -1], 1), hs(&[-1, 1], 1), hs(&[-1, -1], 1)]
    }

    #[test]
    fn max_over_square() {
        let s = lp_solve(&Vector::from_ints(&[1, 1]), &square(), Sense::Max).unwrap();
        assert_eq!(s.value, int(2));
        assert_eq!(s.argpoint, Vector::from_ints(&[1, 1]));
    }

    #[test]
    fn min_over_diamond() {
        let s = lp_solve(&Vector::from_ints(&[1, 0]), &diamond(), Sense::Min).unwrap();
        assert_eq!(s.value, int(-1));
        assert_eq!(s.argpoint, Vector::from_ints(&[-1, 0]));
    }

    #[test]
    fn unbounded_objective() {
        let r = lp_solve(&Vector::from_ints(&[1]), &[hs(&[-1], 0)], Sense::Max);
        assert_eq!(r, Err(GeomError::UnboundedObjective));
    }

    #[test]
    fn infeasible() {
        let r = lp_solve(&Vector::from_ints(&[1]), &[hs(&[1], 0), hs(&[-1], -1)], Sense::Max);
        assert_eq!(r, Err(GeomError::Infeasible));
    }

    #[test]
    fn ties_break_lexicographically() {
        // max x over the square: the optimal face is the edge x = 1
        let s = lp_solve(&Vector::from_ints(&[1, 0]), &square(), Sense::Max).unwrap();
        assert_eq!(s.argpoint, Vector::from_ints(&[1, -1]));
        let s = lp_solve(&Vector::from_ints(&[0, 0]), &diamond(), Sense::Max).unwrap();
        assert_eq!(s.value, int(0));
        assert_eq!(s.argpoint, Vector::from_ints(&[-1, 0]));
    }

    #[test]
    fn fractional_vertex() {
        // max x + y  s.t.  2x + y <= 2, x + 3y <= 3, x, y >= 0  ->  (3/5, 4/5)
        let cons = vec![hs(&[2, 1], 2), hs(&[1, 3], 3), hs(&[-1, 0], 0), hs(&[0, -1], 0)];
        let s = lp_solve(&Vector::from_ints(&[1, 1]), &cons, Sense::Max).unwrap();
        assert_eq!(s.value, ratio(7, 5));
        assert_eq!(s.argpoint, Vector::from_ratios(&[(3, 5), (4, 5)]));
    }

    #[test]
    fn degenerate_equality_rows() {
        // segment y = 1/2, 0 <= x <= 2 given as opposite halfspaces
        let cons = vec![
            HalfSpace::new(Vector::from_ints(&[0, 1]), ratio(1, 2)).unwrap(),
            HalfSpace::new(Vector::from_ints(&[0, -1]), ratio(-1, 2)).unwrap(),
            hs(&[1, 0], 2),
            hs(&[-1, 0], 0),
        ];
        let s = lp_solve(&Vector::from_ints(&[1, 1]), &cons, Sense::Max).unwrap();
        assert_eq!(s.value, ratio(5, 2));
        assert_eq!(s.argpoint, Vector::from_ratios(&[(2, 1), (1, 2)]));
    }
}
