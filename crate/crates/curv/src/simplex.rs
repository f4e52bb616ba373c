//! Dense two-phase tableau simplex over a generic [`Scalar`].
//!
//! Supports `<=`, `=`, `>=` rows, free / nonnegative / nonpositive
//! variables, and both optimization senses.  Pivoting uses Bland's rule, so
//! the solver terminates on degenerate programs.  In rational mode every
//! pivot is exact and the returned dual vector satisfies strong duality
//! identically; in float mode comparisons use the scalar tolerance.
//!
//! Dual values are read off the final tableau: every row carries an identity
//! column (its slack or its artificial), whose reduced cost at optimality is
//! the row's multiplier.

use std::fmt;

use crate::numerics::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ge => ">=",
        })
    }
}

/// Sign restriction of a variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Free,
    NonNeg,
    NonPos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LinearProgram<S> {
    pub sense: Sense,
    pub objective: Vec<S>,
    pub bounds: Vec<Bound>,
    pub rows: Vec<Vec<S>>,
    pub rels: Vec<Rel>,
    pub rhs: Vec<S>,
}

/// Result of a solve.  `primal` and `dual` are meaningful only when `status`
/// is [`LpStatus::Optimal`]; `dual` has one multiplier per constraint row,
/// with signs matching the conventions checked by [`LinearProgram::verify`].
#[derive(Debug, Clone)]
pub struct LpSolution<S> {
    pub status: LpStatus,
    pub objective: S,
    pub primal: Vec<S>,
    pub dual: Vec<S>,
}

impl<S: Scalar> LinearProgram<S> {
    pub fn new(sense: Sense) -> Self {
        LinearProgram {
            sense,
            objective: Vec::new(),
            bounds: Vec::new(),
            rows: Vec::new(),
            rels: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Add a variable; returns its column index.
    pub fn add_var(&mut self, bound: Bound, objective: S) -> usize {
        assert!(self.rows.is_empty(), "add variables before constraints");
        self.objective.push(objective);
        self.bounds.push(bound);
        self.objective.len() - 1
    }

    /// Add the constraint `sum coeffs[i].1 * x_{coeffs[i].0}  rel  rhs`.
    /// Repeated indices accumulate.
    pub fn add_constraint(&mut self, coeffs: &[(usize, S)], rel: Rel, rhs: S) {
        let mut row = vec![S::zero(); self.objective.len()];
        for (j, c) in coeffs {
            row[*j] += c.clone();
        }
        self.rows.push(row);
        self.rels.push(rel);
        self.rhs.push(rhs);
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self) -> LpSolution<S> {
        Solver::new(self).run()
    }

    /// Check a claimed optimal solution: primal feasibility, dual
    /// feasibility, complementary slackness, and equality of the primal and
    /// dual objective values (all up to the scalar's tolerance — exact for
    /// rationals).
    pub fn verify(&self, sol: &LpSolution<S>) -> Result<(), String> {
        if sol.status != LpStatus::Optimal {
            return Err(format!("solution status {:?} is not optimal", sol.status));
        }
        if self.sense == Sense::Min {
            // Verify through the equivalent max program.
            let flipped = LinearProgram {
                sense: Sense::Max,
                objective: self.objective.iter().map(|c| -c.clone()).collect(),
                bounds: self.bounds.clone(),
                rows: self.rows.clone(),
                rels: self.rels.clone(),
                rhs: self.rhs.clone(),
            };
            let flipped_sol = LpSolution {
                status: LpStatus::Optimal,
                objective: -sol.objective.clone(),
                primal: sol.primal.clone(),
                dual: sol.dual.iter().map(|y| -y.clone()).collect(),
            };
            return flipped.verify(&flipped_sol);
        }

        let x = &sol.primal;
        let y = &sol.dual;
        if x.len() != self.num_vars() || y.len() != self.rows.len() {
            return Err("solution dimensions do not match the program".into());
        }
        for (j, b) in self.bounds.iter().enumerate() {
            match b {
                Bound::NonNeg if x[j].is_negative() => {
                    return Err(format!("x{j} = {} violates x >= 0", x[j]))
                }
                Bound::NonPos if x[j].is_positive() => {
                    return Err(format!("x{j} = {} violates x <= 0", x[j]))
                }
                _ => {}
            }
        }
        let mut cx = S::zero();
        for j in 0..self.num_vars() {
            cx += self.objective[j].clone() * x[j].clone();
        }
        if !cx.approx_eq(&sol.objective) {
            return Err(format!(
                "objective mismatch: c.x = {cx}, reported {}",
                sol.objective
            ));
        }
        let mut by = S::zero();
        for (i, row) in self.rows.iter().enumerate() {
            let mut ax = S::zero();
            for j in 0..self.num_vars() {
                ax += row[j].clone() * x[j].clone();
            }
            let slack = self.rhs[i].clone() - ax.clone();
            match self.rels[i] {
                Rel::Le if slack.is_negative() => {
                    return Err(format!("row {i} violated: {ax} > {}", self.rhs[i]))
                }
                Rel::Ge if slack.is_positive() => {
                    return Err(format!("row {i} violated: {ax} < {}", self.rhs[i]))
                }
                Rel::Eq if !slack.is_zero() => {
                    return Err(format!("row {i} violated: {ax} != {}", self.rhs[i]))
                }
                _ => {}
            }
            // Dual sign (max sense): <= rows want y >= 0, >= rows want y <= 0.
            match self.rels[i] {
                Rel::Le if y[i].is_negative() => {
                    return Err(format!("dual y{i} = {} negative on a <= row", y[i]))
                }
                Rel::Ge if y[i].is_positive() => {
                    return Err(format!("dual y{i} = {} positive on a >= row", y[i]))
                }
                _ => {}
            }
            // Complementary slackness on rows.
            if !(y[i].clone() * slack.clone()).is_zero() {
                return Err(format!("complementary slackness fails on row {i}"));
            }
            by += self.rhs[i].clone() * y[i].clone();
        }
        for j in 0..self.num_vars() {
            let mut aty = S::zero();
            for i in 0..self.rows.len() {
                aty += self.rows[i][j].clone() * y[i].clone();
            }
            let r = aty - self.objective[j].clone(); // reduced cost
            match self.bounds[j] {
                Bound::NonNeg if r.is_negative() => {
                    return Err(format!("dual infeasible at x{j}: reduced cost {r} < 0"))
                }
                Bound::NonPos if r.is_positive() => {
                    return Err(format!("dual infeasible at x{j}: reduced cost {r} > 0"))
                }
                Bound::Free if !r.is_zero() => {
                    return Err(format!("dual infeasible at free x{j}: reduced cost {r}"))
                }
                _ => {}
            }
            if !(r.clone() * x[j].clone()).is_zero() {
                return Err(format!("complementary slackness fails on x{j}"));
            }
        }
        if !by.approx_eq(&sol.objective) {
            return Err(format!(
                "strong duality fails: b.y = {by}, objective {}",
                sol.objective
            ));
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Display for LinearProgram<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sense = match self.sense {
            Sense::Max => "max",
            Sense::Min => "min",
        };
        write!(f, "{sense} ")?;
        for (j, c) in self.objective.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} x{j}")?;
        }
        writeln!(f)?;
        for (i, row) in self.rows.iter().enumerate() {
            write!(f, "  r{i}: ")?;
            let mut first = true;
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "{a} x{j}")?;
                first = false;
            }
            if first {
                write!(f, "0")?;
            }
            writeln!(f, " {} {}", self.rels[i], self.rhs[i])?;
        }
        for (j, b) in self.bounds.iter().enumerate() {
            let b = match b {
                Bound::Free => "free",
                Bound::NonNeg => ">= 0",
                Bound::NonPos => "<= 0",
            };
            writeln!(f, "  x{j} {b}")?;
        }
        Ok(())
    }
}

/// Internal: the normalized tableau.  All variables nonnegative, all rhs
/// nonnegative, one identity column per row.
struct Solver<'a, S> {
    lp: &'a LinearProgram<S>,
    // structural column -> (original variable, +-1)
    colmap: Vec<(usize, i8)>,
    // per row: was the row negated to make rhs >= 0
    negated: Vec<bool>,
    // per row: identity column (slack for Le, artificial for Ge/Eq)
    idcol: Vec<usize>,
    nart_start: usize,
    ncols: usize,
    a: Vec<Vec<S>>,
    rhs: Vec<S>,
    basis: Vec<usize>,
    live: Vec<bool>,
    objrow: Vec<S>,
    objval: S,
    // phase-2 costs on tableau columns
    costs: Vec<S>,
}

impl<'a, S: Scalar> Solver<'a, S> {
    fn new(lp: &'a LinearProgram<S>) -> Self {
        let m = lp.rows.len();

        let mut colmap = Vec::new();
        for (j, b) in lp.bounds.iter().enumerate() {
            match b {
                Bound::NonNeg => colmap.push((j, 1i8)),
                Bound::NonPos => colmap.push((j, -1)),
                Bound::Free => {
                    colmap.push((j, 1));
                    colmap.push((j, -1));
                }
            }
        }
        let ns = colmap.len();

        // Normalize rows to rhs >= 0.
        let mut rels = lp.rels.clone();
        let mut negated = vec![false; m];
        let mut rows_t: Vec<Vec<S>> = Vec::with_capacity(m);
        let mut rhs_t: Vec<S> = Vec::with_capacity(m);
        for i in 0..m {
            let mut flip = false;
            if lp.rhs[i].is_negative() {
                flip = true;
                negated[i] = true;
                rels[i] = match rels[i] {
                    Rel::Le => Rel::Ge,
                    Rel::Ge => Rel::Le,
                    Rel::Eq => Rel::Eq,
                };
            }
            let mut row: Vec<S> = colmap
                .iter()
                .map(|&(var, sign)| {
                    let v = lp.rows[i][var].clone();
                    if sign < 0 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            let mut b = lp.rhs[i].clone();
            if flip {
                for v in &mut row {
                    *v = -v.clone();
                }
                b = -b;
            }
            rows_t.push(row);
            rhs_t.push(b);
        }

        // Column layout: structural, slacks/surpluses, artificials.
        let mut nslack = 0usize;
        for r in &rels {
            if matches!(r, Rel::Le | Rel::Ge) {
                nslack += 1;
            }
        }
        let nart = rels.iter().filter(|r| !matches!(r, Rel::Le)).count();
        let nart_start = ns + nslack;
        let ncols = nart_start + nart;

        let mut a = vec![vec![S::zero(); ncols]; m];
        for (i, row) in rows_t.into_iter().enumerate() {
            a[i][..ns].clone_from_slice(&row);
        }
        let mut idcol = vec![0usize; m];
        let mut basis = vec![0usize; m];
        let mut next_slack = ns;
        let mut next_art = nart_start;
        for i in 0..m {
            match rels[i] {
                Rel::Le => {
                    a[i][next_slack] = S::one();
                    idcol[i] = next_slack;
                    basis[i] = next_slack;
                    next_slack += 1;
                }
                Rel::Ge => {
                    a[i][next_slack] = -S::one();
                    next_slack += 1;
                    a[i][next_art] = S::one();
                    idcol[i] = next_art;
                    basis[i] = next_art;
                    next_art += 1;
                }
                Rel::Eq => {
                    a[i][next_art] = S::one();
                    idcol[i] = next_art;
                    basis[i] = next_art;
                    next_art += 1;
                }
            }
        }

        // Phase-2 costs on tableau columns (always maximize internally).
        let mut costs = vec![S::zero(); ncols];
        for (col, &(var, sign)) in colmap.iter().enumerate() {
            let c = lp.objective[var].clone();
            let c = if lp.sense == Sense::Min { -c } else { c };
            costs[col] = if sign < 0 { -c } else { c };
        }

        Solver {
            lp,
            colmap,
            negated,
            idcol,
            nart_start,
            ncols,
            a,
            rhs: rhs_t,
            basis,
            live: vec![true; m],
            objrow: vec![S::zero(); ncols],
            objval: S::zero(),
            costs,
        }
    }

    fn rebuild_objrow(&mut self, costs: &[S]) {
        for j in 0..self.ncols {
            let mut z = S::zero();
            for i in 0..self.a.len() {
                if self.live[i] {
                    z += costs[self.basis[i]].clone() * self.a[i][j].clone();
                }
            }
            self.objrow[j] = z - costs[j].clone();
        }
        let mut v = S::zero();
        for i in 0..self.a.len() {
            if self.live[i] {
                v += costs[self.basis[i]].clone() * self.rhs[i].clone();
            }
        }
        self.objval = v;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.a[r][c].clone();
        let inv = p.recip();
        for j in 0..self.ncols {
            self.a[r][j] *= inv.clone();
        }
        self.rhs[r] *= inv;
        for i in 0..self.a.len() {
            if i == r || !self.live[i] || self.a[i][c].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut self.a[i][c], S::zero());
            for j in 0..self.ncols {
                if j == c {
                    continue;
                }
                let t = f.clone() * self.a[r][j].clone();
                self.a[i][j] -= t;
            }
            let t = f * self.rhs[r].clone();
            self.rhs[i] -= t;
        }
        let f = std::mem::replace(&mut self.objrow[c], S::zero());
        if !f.is_zero() {
            for j in 0..self.ncols {
                if j == c {
                    continue;
                }
                let t = f.clone() * self.a[r][j].clone();
                self.objrow[j] -= t;
            }
            let t = f * self.rhs[r].clone();
            self.objval -= t;
        }
        self.basis[r] = c;
    }

    /// Bland's rule iteration until optimal or unbounded.
    fn iterate(&mut self, allow_artificials: bool) -> LpStatus {
        let mut guard = 0usize;
        loop {
            guard += 1;
            assert!(
                guard < 1_000_000,
                "simplex failed to terminate (this is a bug)"
            );
            let limit = if allow_artificials {
                self.ncols
            } else {
                self.nart_start
            };
            let entering = (0..limit).find(|&j| self.objrow[j].is_negative());
            let Some(c) = entering else {
                return LpStatus::Optimal;
            };
            let mut best: Option<(S, usize)> = None; // (ratio, row)
            for i in 0..self.a.len() {
                if !self.live[i] || !self.a[i][c].is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / self.a[i][c].clone();
                best = match best {
                    None => Some((ratio, i)),
                    Some((r, bi)) => {
                        if ratio < r
                            || (ratio == r && self.basis[i] < self.basis[bi])
                        {
                            Some((ratio, i))
                        } else {
                            Some((r, bi))
                        }
                    }
                };
            }
            let Some((_, r)) = best else {
                return LpStatus::Unbounded;
            };
            self.pivot(r, c);
        }
    }

    fn run(mut self) -> LpSolution<S> {
        let has_artificials = self.nart_start < self.ncols;
        if has_artificials {
            let mut phase1 = vec![S::zero(); self.ncols];
            for c in phase1.iter_mut().skip(self.nart_start) {
                *c = -S::one();
            }
            self.rebuild_objrow(&phase1);
            let status = self.iterate(true);
            debug_assert_eq!(status, LpStatus::Optimal, "phase 1 cannot be unbounded");
            if self.objval.is_negative() {
                return LpSolution {
                    status: LpStatus::Infeasible,
                    objective: S::zero(),
                    primal: Vec::new(),
                    dual: Vec::new(),
                };
            }
            // Drive zero-level artificials out of the basis; rows that
            // cannot pivot are redundant and go dead.
            for i in 0..self.a.len() {
                if !self.live[i] || self.basis[i] < self.nart_start {
                    continue;
                }
                match (0..self.nart_start).find(|&j| !self.a[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => self.live[i] = false,
                }
            }
        }

        let costs = self.costs.clone();
        self.rebuild_objrow(&costs);
        let status = self.iterate(false);
        if status == LpStatus::Unbounded {
            return LpSolution {
                status,
                objective: S::zero(),
                primal: Vec::new(),
                dual: Vec::new(),
            };
        }

        // Primal values.
        let mut colval = vec![S::zero(); self.ncols];
        for i in 0..self.a.len() {
            if self.live[i] {
                colval[self.basis[i]] = self.rhs[i].clone();
            }
        }
        let mut primal = vec![S::zero(); self.lp.num_vars()];
        for (col, &(var, sign)) in self.colmap.iter().enumerate() {
            let v = colval[col].clone();
            if sign < 0 {
                primal[var] -= v;
            } else {
                primal[var] += v;
            }
        }

        // Dual values from the identity column of each row.
        let minimize = self.lp.sense == Sense::Min;
        let mut dual = Vec::with_capacity(self.a.len());
        for i in 0..self.a.len() {
            let mut y = if self.live[i] {
                self.objrow[self.idcol[i]].clone()
            } else {
                S::zero()
            };
            if self.negated[i] {
                y = -y;
            }
            if minimize {
                y = -y;
            }
            dual.push(y);
        }

        let objective = if minimize {
            -self.objval.clone()
        } else {
            self.objval.clone()
        };
        LpSolution {
            status: LpStatus::Optimal,
            objective,
            primal,
            dual,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn textbook_max() {
        // max x + y, x + 2y <= 4, 3x + y <= 6, x,y >= 0.
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(Bound::NonNeg, q(1, 1));
        let y = lp.add_var(Bound::NonNeg, q(1, 1));
        lp.add_constraint(&[(x, q(1, 1)), (y, q(2, 1))], Rel::Le, q(4, 1));
        lp.add_constraint(&[(x, q(3, 1)), (y, q(1, 1))], Rel::Le, q(6, 1));
        let sol = lp.solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.objective, q(14, 5));
        assert_eq!(sol.primal, vec![q(8, 5), q(6, 5)]);
        assert_eq!(sol.dual, vec![q(2, 5), q(1, 5)]);
        lp.verify(&sol).unwrap();
    }

    #[test]
    fn infeasible_program() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(Bound::NonNeg, q(1, 1));
        lp.add_constraint(&[(x, q(1, 1))], Rel::Ge, q(1, 1));
        lp.add_constraint(&[(x, q(1, 1))], Rel::Le, q(0, 1));
        assert_eq!(lp.solve().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_program() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(Bound::NonNeg, q(1, 1));
        let y = lp.add_var(Bound::NonNeg, q(0, 1));
        lp.add_constraint(&[(y, q(1, 1))], Rel::Le, q(5, 1));
        let _ = x;
        assert_eq!(lp.solve().status, LpStatus::Unbounded);
    }

    #[test]
    fn blands_rule_survives_beale_cycling_example() {
        // The classic degenerate example on which largest-coefficient
        // pivoting cycles forever.
        let mut lp = LinearProgram::new(Sense::Min);
        let x1 = lp.add_var(Bound::NonNeg, q(-3, 4));
        let x2 = lp.add_var(Bound::NonNeg, q(150, 1));
        let x3 = lp.add_var(Bound::NonNeg, q(-1, 50));
        let x4 = lp.add_var(Bound::NonNeg, q(6, 1));
        lp.add_constraint(
            &[(x1, q(1, 4)), (x2, q(-60, 1)), (x3, q(-1, 25)), (x4, q(9, 1))],
            Rel::Le,
            q(0, 1),
        );
        lp.add_constraint(
            &[(x1, q(1, 2)), (x2, q(-90, 1)), (x3, q(-1, 50)), (x4, q(3, 1))],
            Rel::Le,
            q(0, 1),
        );
        lp.add_constraint(&[(x3, q(1, 1))], Rel::Eq, q(1, 1));
        let sol = lp.solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.objective, q(-1, 20));
        lp.verify(&sol).unwrap();
    }

    #[test]
    fn mixed_relations_and_bounds() {
        // min 2x - y + z with x free, y >= 0, z <= 0,
        //   x + y - z = 3, x - y >= -2, y + z <= 4.
        let mut lp = LinearProgram::new(Sense::Min);
        let x = lp.add_var(Bound::Free, q(2, 1));
        let y = lp.add_var(Bound::NonNeg, q(-1, 1));
        let z = lp.add_var(Bound::NonPos, q(1, 1));
        lp.add_constraint(&[(x, q(1, 1)), (y, q(1, 1)), (z, q(-1, 1))], Rel::Eq, q(3, 1));
        lp.add_constraint(&[(x, q(1, 1)), (y, q(-1, 1))], Rel::Ge, q(-2, 1));
        lp.add_constraint(&[(y, q(1, 1)), (z, q(1, 1))], Rel::Le, q(4, 1));
        let sol = lp.solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        lp.verify(&sol).unwrap();
        // Substituting x = 3 - y + z turns the objective into 6 - 3(y - z)
        // with z >= 2y - 5, so the optimum sits at y = 0, z = -5, x = -2.
        assert_eq!(sol.objective, q(-9, 1));
        assert_eq!(sol.primal, vec![q(-2, 1), q(0, 1), q(-5, 1)]);
    }

    #[test]
    fn float_mode_agrees_on_textbook_example() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(Bound::NonNeg, 1.0f64);
        let y = lp.add_var(Bound::NonNeg, 1.0);
        lp.add_constraint(&[(x, 1.0), (y, 2.0)], Rel::Le, 4.0);
        lp.add_constraint(&[(x, 3.0), (y, 1.0)], Rel::Le, 6.0);
        let sol = lp.solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective - 2.8).abs() < 1e-9);
        lp.verify(&sol).unwrap();
    }

    #[test]
    fn redundant_equalities_get_zero_duals() {
        // x + y = 2 listed twice; the duplicate row must go dead and
        // strong duality must still hold.
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(Bound::NonNeg, q(1, 1));
        let y = lp.add_var(Bound::NonNeg, q(2, 1));
        lp.add_constraint(&[(x, q(1, 1)), (y, q(1, 1))], Rel::Eq, q(2, 1));
        lp.add_constraint(&[(x, q(1, 1)), (y, q(1, 1))], Rel::Eq, q(2, 1));
        let sol = lp.solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.objective, q(4, 1));
        lp.verify(&sol).unwrap();
    }

    #[test]
    fn display_dump_mentions_all_pieces() {
        let mut lp = LinearProgram::new(Sense::Min);
        let x = lp.add_var(Bound::Free, q(1, 1));
        lp.add_constraint(&[(x, q(2, 1))], Rel::Ge, q(1, 1));
        let dump = lp.to_string();
        assert!(dump.contains("min"));
        assert!(dump.contains(">="));
        assert!(dump.contains("x0 free"));
    }
}
