//! Independent oracles. Deliberately share nothing with the library's
//! linear algebra: plain `Vec<Vec<BigRational>>` and a textbook elimination.

#![allow(dead_code, clippy::needless_range_loop)]

use lietrans::LieAlgebra;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Reduced row echelon form with zero rows dropped.
pub fn echelon(mut rows: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let d = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

pub fn rank(rows: Vec<Vec<Q>>) -> usize {
    echelon(rows).len()
}

fn c(g: &LieAlgebra, i: usize, j: usize, k: usize) -> Q {
    g.structure_constant(i, j, k).clone()
}

/// `dim Der(g) = n² - rank` of the Leibniz defect map, evaluated on the
/// elementary matrices `E_ab` (`E_ab e_b = e_a`) by direct substitution.
pub fn derivation_dim_oracle(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let row: Vec<Q> = (0..n * n)
                    .map(|col| {
                        let (a, b) = (col / n, col % n);
                        let mut v = Q::zero();
                        if k == a {
                            v += c(g, i, j, b);
                        }
                        if i == b {
                            v -= c(g, a, j, k);
                        }
                        if j == b {
                            v -= c(g, i, a, k);
                        }
                        v
                    })
                    .collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    n * n - if rows.is_empty() { 0 } else { rank(rows) }
}

fn bracket(g: &LieAlgebra, x: &[Q], y: &[Q]) -> Vec<Q> {
    let n = g.dim();
    let mut out = vec![Q::zero(); n];
    for i in 0..n {
        for j in 0..n {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += x[i].clone() * y[j].clone() * c(g, i, j, k);
            }
        }
    }
    out
}

/// A subspace in reduced echelon form; equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space(pub Vec<Vec<Q>>);

impl Space {
    pub fn span(n: usize, vectors: Vec<Vec<Q>>) -> Space {
        let rows: Vec<Vec<Q>> = vectors.into_iter().filter(|v| v.len() == n).collect();
        Space(if rows.is_empty() { rows } else { echelon(rows) })
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut rows = self.0.clone();
        rows.push(v.to_vec());
        rank(rows) == self.dim()
    }

    pub fn within(&self, other: &Space) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }
}

fn brackets_land_in(g: &LieAlgebra, a: &Space, b: &Space, target: &Space) -> bool {
    a.0.iter()
        .all(|x| b.0.iter().all(|y| target.contains(&bracket(g, x, y))))
}

pub fn is_subalgebra(g: &LieAlgebra, s: &Space) -> bool {
    brackets_land_in(g, s, s, s)
}

/// `h ⊴ s`.
pub fn is_ideal_in(g: &LieAlgebra, h: &Space, s: &Space) -> bool {
    h.within(s) && brackets_land_in(g, s, h, h)
}

/// Every subalgebra spanned by vectors with entries in `-1..=1`.
pub fn grid_subalgebras(g: &LieAlgebra) -> Vec<Space> {
    let n = g.dim();
    let mut grid: Vec<Vec<Q>> = vec![vec![]];
    for _ in 0..n {
        grid = grid
            .into_iter()
            .flat_map(|v| {
                (-1..=1).map(move |e| {
                    let mut w = v.clone();
                    w.push(q(e));
                    w
                })
            })
            .collect();
    }
    grid.retain(|v| v.iter().any(|x| !x.is_zero()));
    let mut found: Vec<Space> = vec![
        Space(vec![]),
        Space::span(n, (0..n).map(|i| unit(n, i)).collect()),
    ];
    let mut frontier: Vec<Space> = vec![Space(vec![])];
    // grow spans one grid vector at a time
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &frontier {
            for v in &grid {
                if s.contains(v) {
                    continue;
                }
                let mut rows = s.0.clone();
                rows.push(v.clone());
                let t = Space::span(n, rows);
                if !next.contains(&t) && !found.contains(&t) {
                    next.push(t);
                }
            }
        }
        for t in &next {
            if !found.contains(t) {
                found.push(t.clone());
            }
        }
        frontier = next;
    }
    found.retain(|s| is_subalgebra(g, s));
    found
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n)
        .map(|j| if i == j { Q::one() } else { Q::zero() })
        .collect()
}

/// Exhaustive search: `h` is a subideal of `s` iff `h = s` or some proper
/// ideal `t` of `s` containing `h` has `h` as a subideal. Candidates for `t`
/// are the grid lattice plus `h` extended by one bracket `[x, v]`
/// (`x ∈ s`, `v ∈ h`); below dimension four every intermediate ideal
/// needed by a chain is of one of these forms.
pub fn subideal_oracle(g: &LieAlgebra, lattice: &[Space], h: &Space, s: &Space) -> bool {
    if h == s {
        return true;
    }
    let n = g.dim();
    let mut candidates: Vec<Space> = lattice.to_vec();
    for x in &s.0 {
        for v in &h.0 {
            let mut rows = h.0.clone();
            rows.push(bracket(g, x, v));
            candidates.push(Space::span(n, rows));
        }
    }
    candidates.iter().any(|t| {
        t.dim() < s.dim()
            && h.within(t)
            && is_subalgebra(g, t)
            && is_ideal_in(g, t, s)
            && subideal_oracle(g, lattice, h, t)
    })
}
