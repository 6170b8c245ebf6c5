//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Only what cone membership needs: feasibility of `A x = b, x >= 0` and
//! maximization of a linear objective over that polyhedron.

use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rat>, value: Rat },
}

struct Tableau {
    // rows x (vars + 1); last column is the right-hand side
    t: Vec<Vec<Rat>>,
    // reduced costs for minimization; last entry is minus the objective value
    obj: Vec<Rat>,
    basis: Vec<usize>,
    vars: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.t[row][col].recip();
        for x in self.t[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.t[row].clone();
        for (i, r) in self.t.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        if !self.obj[col].is_zero() {
            let f = self.obj[col].clone();
            for (x, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs Bland-rule pivots on columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let rhs = self.vars;
            let mut best: Option<(usize, Rat)> = None;
            for (i, r) in self.t.iter().enumerate() {
                if !r[col].is_positive() {
                    continue;
                }
                let ratio = &r[rhs] / &r[col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn solution(&self, n: usize) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.t[i][self.vars].clone();
            }
        }
        x
    }
}

/// Maximizes `c · x` subject to `a x = b`, `x >= 0`. `a` is given by rows.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == m);

    // phase I tableau: original vars, one artificial per row, rhs
    let vars = n + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = a[i]
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        row.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut obj = vec![Rat::zero(); vars + 1];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[vars] -= &row[vars];
    }
    let mut tab = Tableau {
        t,
        obj,
        basis: (n..n + m).collect(),
        vars,
    };
    tab.optimize(vars);
    if !tab.obj[vars].is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive artificials out of the basis; rows that cannot be pivoted are redundant
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= n {
            if let Some(col) = (0..n).find(|&j| !tab.t[i][j].is_zero()) {
                tab.pivot(i, col);
            } else {
                tab.t.remove(i);
                tab.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    // phase II on the original columns only
    let mut t2: Vec<Vec<Rat>> = tab
        .t
        .iter()
        .map(|r| {
            let mut row = r[..n].to_vec();
            row.push(r[vars].clone());
            row
        })
        .collect();
    let mut obj = vec![Rat::zero(); n + 1];
    for j in 0..n {
        obj[j] = -c[j].clone();
    }
    for (row, &bv) in t2.iter_mut().zip(&tab.basis) {
        let cb = -c[bv].clone();
        if cb.is_zero() {
            continue;
        }
        for (o, x) in obj.iter_mut().zip(row.iter()) {
            *o -= &cb * x;
        }
    }
    let mut tab2 = Tableau {
        t: t2,
        obj,
        basis: tab.basis,
        vars: n,
    };
    if !tab2.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let x = tab2.solution(n);
    let value = x.iter().zip(c).fold(Rat::zero(), |acc, (xi, ci)| acc + xi * ci);
    LpOutcome::Optimal { x, value }
}

/// Some `x >= 0` with `a x = b`, if one exists.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.first().map_or(0, |r| r.len());
    match maximize(a, b, &vec![Rat::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}
