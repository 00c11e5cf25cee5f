use super::{Int, IntMatrix};

/// Smith normal form `U·M·V = diag(d₁, d₂, …)` with `d₁ | d₂ | …`, `dᵢ ≥ 0`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// Length `min(rows, cols)`; zeros trail.
    pub diag: Vec<Int>,
}

impl Snf {
    /// The diagonal matrix `S` with the shape of the input.
    pub fn s(&self) -> IntMatrix {
        IntMatrix::diagonal(self.u.rows(), self.v.cols(), &self.diag)
    }
}

pub(crate) struct Want {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
}

/// Working state: `a` row-major, `u` as rows, `u_inv` and `v`/`v_inv` as columns.
pub(crate) struct SnfCalc {
    a: Vec<Vec<Int>>,
    m: usize,
    n: usize,
    u: Option<Vec<Vec<Int>>>,
    u_inv: Option<Vec<Vec<Int>>>,
    v: Option<Vec<Vec<Int>>>,
    v_inv: Option<Vec<Vec<Int>>>,
}

fn unit_vectors(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Int::ZERO; n];
            v[i] = Int::ONE;
            v
        })
        .collect()
}

fn axpy(dst: &mut [Int], c: &Int, src: &[Int]) {
    let nc = -c;
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            d.sub_mul_assign(&nc, s);
        }
    }
}

fn add_scaled(vs: &mut [Vec<Int>], i: usize, j: usize, c: &Int) {
    let (src, dst) = if i < j {
        let (l, r) = vs.split_at_mut(j);
        (&r[0], &mut l[i])
    } else {
        let (l, r) = vs.split_at_mut(i);
        (&l[j], &mut r[0])
    };
    axpy(dst, c, src);
}

impl SnfCalc {
    pub fn new(rows: Vec<Vec<Int>>, n: usize, want: Want) -> Self {
        let m = rows.len();
        SnfCalc {
            a: rows,
            m,
            n,
            u: want.u.then(|| unit_vectors(m)),
            u_inv: want.u_inv.then(|| unit_vectors(m)),
            v: want.v.then(|| unit_vectors(n)),
            v_inv: want.v.then(|| unit_vectors(n)),
        }
    }

    /// row_i += c·row_j
    fn row_add(&mut self, i: usize, j: usize, c: &Int) {
        add_scaled(&mut self.a, i, j, c);
        if let Some(u) = self.u.as_mut() {
            add_scaled(u, i, j, c);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            add_scaled(ui, j, i, &-c);
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui.swap(i, j);
        }
    }

    fn row_neg(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        if let Some(u) = self.u.as_mut() {
            u[i].iter_mut().for_each(|x| *x = -&*x);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui[i].iter_mut().for_each(|x| *x = -&*x);
        }
    }

    /// col_i += c·col_j
    fn col_add(&mut self, i: usize, j: usize, c: &Int) {
        for row in self.a.iter_mut() {
            if !row[j].is_zero() {
                let add = c * &row[j];
                row[i] += &add;
            }
        }
        if let Some(v) = self.v.as_mut() {
            add_scaled(v, i, j, c);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            // V⁻¹ changes by the inverse row operation: row_j -= c·row_i,
            // stored column-wise.
            for col in vi.iter_mut() {
                if !col[i].is_zero() {
                    let sub = c * &col[i];
                    col[j] -= &sub;
                }
            }
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            v.swap(i, j);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            for col in vi.iter_mut() {
                col.swap(i, j);
            }
        }
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.cmp_abs(&self.a[bi][bj]) == std::cmp::Ordering::Less,
                };
                if better {
                    best = Some((i, j));
                    if x.cmp_abs(&Int::ONE) == std::cmp::Ordering::Equal {
                        return best;
                    }
                }
            }
        }
        best
    }

    pub fn run(mut self) -> (Vec<Int>, Option<Vec<Vec<Int>>>, Option<Vec<Vec<Int>>>, Option<(Vec<Vec<Int>>, Vec<Vec<Int>>)>) {
        let k = self.m.min(self.n);
        let mut t = 0;
        while t < k {
            let Some((pi, pj)) = self.min_nonzero(t) else { break };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                for i in t + 1..self.m {
                    if !self.a[i][t].is_zero() {
                        let q = self.a[i][t].div_round(&self.a[t][t]);
                        self.row_add(i, t, &-q);
                    }
                }
                for j in t + 1..self.n {
                    if !self.a[t][j].is_zero() {
                        let q = self.a[t][j].div_round(&self.a[t][t]);
                        self.col_add(j, t, &-q);
                    }
                }
                let mut smaller: Option<(usize, usize)> = None;
                for i in t + 1..self.m {
                    if !self.a[i][t].is_zero() {
                        smaller = match smaller {
                            Some(s) if self.a[s.0][s.1].cmp_abs(&self.a[i][t]) != std::cmp::Ordering::Greater => Some(s),
                            _ => Some((i, t)),
                        };
                    }
                }
                for j in t + 1..self.n {
                    if !self.a[t][j].is_zero() {
                        smaller = match smaller {
                            Some(s) if self.a[s.0][s.1].cmp_abs(&self.a[t][j]) != std::cmp::Ordering::Greater => Some(s),
                            _ => Some((t, j)),
                        };
                    }
                }
                if let Some((i, j)) = smaller {
                    self.row_swap(t, i);
                    self.col_swap(t, j);
                    continue;
                }
                let p = self.a[t][t].clone();
                if p.abs().is_one() {
                    break;
                }
                let bad = (t + 1..self.m).find(|&i| (t + 1..self.n).any(|j| !self.a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => self.row_add(t, i, &Int::ONE),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.row_neg(t);
            }
            t += 1;
        }
        let diag = (0..k).map(|i| self.a[i][i].clone()).collect();
        let v = self.v.zip(self.v_inv);
        (diag, self.u, self.u_inv, v)
    }
}

/// Smith normal form with both transforms and their inverses.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows: Vec<Vec<Int>> = (0..m.rows()).map(|r| m.row(r)).collect();
    let calc = SnfCalc::new(rows, m.cols(), Want { u: true, u_inv: true, v: true });
    let (diag, u, u_inv, v) = calc.run();
    let (v, v_inv) = v.expect("requested");
    let u = u.expect("requested");
    let u_inv = u_inv.expect("requested");
    let mr = m.rows();
    let nc = m.cols();
    Snf {
        u: IntMatrix::from_columns(mr, transpose_rows(&u, mr)),
        u_inv: IntMatrix::from_columns(mr, u_inv),
        v: IntMatrix::from_columns(nc, v),
        v_inv: IntMatrix::from_columns(nc, v_inv),
        diag,
    }
}

/// Turns a list of rows into a list of columns.
pub(crate) fn transpose_rows(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}
