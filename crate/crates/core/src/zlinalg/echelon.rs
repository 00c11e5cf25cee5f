//! Column echelon engine and the [`Lattice`] type built on it.
//!
//! Every column carries an optional *tag*: the coefficient vector that
//! expresses it in terms of the input columns. Tags of columns that reduce
//! to zero span the kernel.
//!
//! Rows may carry a modulus `d > 0`; the relation column `d·e_r` is then
//! part of the spanned lattice. It is materialized lazily when row `r` is
//! reached, and until then entries in row `r` are freely reduced modulo
//! `d`, which keeps torsion computations from blowing up.

use super::Int;

struct Column {
    v: Vec<Int>,
    tag: Option<Vec<Int>>,
}

pub(crate) struct EchelonOutput {
    pub basis: Vec<Vec<Int>>,
    pub pivots: Vec<usize>,
    pub basis_tags: Vec<Vec<Int>>,
    pub kernel_tags: Vec<Vec<Int>>,
}

pub(crate) struct Echelon<'a> {
    rows: usize,
    row_moduli: Option<&'a [Int]>,
    tag_len: usize,
}

fn reduce_mod(x: &mut Int, m: &Int) {
    if m.is_positive() && !x.is_zero() {
        *x = x.mod_symmetric(m);
    }
}

fn lead_from(v: &[Int], start: usize) -> usize {
    v[start..].iter().position(|x| !x.is_zero()).map_or(v.len(), |p| p + start)
}

impl<'a> Echelon<'a> {
    pub fn new(rows: usize) -> Self {
        Echelon { rows, row_moduli: None, tag_len: 0 }
    }

    pub fn row_moduli(mut self, m: &'a [Int]) -> Self {
        assert_eq!(m.len(), self.rows);
        self.row_moduli = Some(m);
        self
    }

    /// Enables tags of the given length.
    pub fn tags(mut self, len: usize) -> Self {
        self.tag_len = len;
        self
    }

    fn modulus(&self, r: usize) -> Option<&Int> {
        self.row_moduli.map(|m| &m[r]).filter(|d| d.is_positive())
    }

    /// Runs the elimination. `columns` pairs each column with its tag (when
    /// tags are enabled).
    pub fn run(&self, columns: Vec<(Vec<Int>, Option<Vec<Int>>)>) -> EchelonOutput {
        let rows = self.rows;
        let mut store: Vec<Column> = Vec::with_capacity(columns.len());
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); rows];
        let mut kernel_tags = Vec::new();

        for (mut v, tag) in columns {
            assert_eq!(v.len(), rows, "column length mismatch");
            if let Some(m) = self.row_moduli {
                for (x, d) in v.iter_mut().zip(m) {
                    reduce_mod(x, d);
                }
            }
            debug_assert!(tag.as_ref().map_or(self.tag_len == 0, |t| t.len() == self.tag_len));
            let lead = lead_from(&v, 0);
            if lead == rows {
                if let Some(t) = tag {
                    kernel_tags.push(t);
                }
                continue;
            }
            buckets[lead].push(store.len());
            store.push(Column { v, tag });
        }

        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        let mut basis_tags = Vec::new();

        for r in 0..rows {
            let mut ids = std::mem::take(&mut buckets[r]);
            if let Some(d) = self.modulus(r) {
                let mut v = vec![Int::ZERO; rows];
                v[r] = d.clone();
                let tag = (self.tag_len > 0).then(|| vec![Int::ZERO; self.tag_len]);
                ids.push(store.len());
                store.push(Column { v, tag });
            }
            if ids.is_empty() {
                continue;
            }
            loop {
                // smallest |entry|, ties broken by lowest id for determinism
                let (pi, _) = ids
                    .iter()
                    .enumerate()
                    .min_by(|(_, &a), (_, &b)| store[a].v[r].cmp_abs(&store[b].v[r]).then(a.cmp(&b)))
                    .expect("nonempty");
                let pid = ids.swap_remove(pi);
                if ids.is_empty() {
                    ids.push(pid);
                    break;
                }
                let pivot = std::mem::take(&mut store[pid].v);
                let ptag = store[pid].tag.take();
                let support: Vec<usize> = (r..rows).filter(|&i| !pivot[i].is_zero()).collect();
                let tag_support: Vec<usize> =
                    ptag.as_ref().map_or_else(Vec::new, |t| (0..t.len()).filter(|&i| !t[i].is_zero()).collect());
                let mut keep = Vec::with_capacity(ids.len() + 1);
                for &o in &ids {
                    let q = store[o].v[r].div_round(&pivot[r]);
                    if !q.is_zero() {
                        let col = &mut store[o];
                        for &i in &support {
                            col.v[i].sub_mul_assign(&q, &pivot[i]);
                            if i > r {
                                if let Some(d) = self.modulus(i) {
                                    reduce_mod(&mut col.v[i], d);
                                }
                            }
                        }
                        if let (Some(t), Some(pt)) = (col.tag.as_mut(), ptag.as_ref()) {
                            for &i in &tag_support {
                                t[i].sub_mul_assign(&q, &pt[i]);
                            }
                        }
                    }
                    if store[o].v[r].is_zero() {
                        let lead = lead_from(&store[o].v, r + 1);
                        if lead == rows {
                            let col = &mut store[o];
                            col.v = Vec::new();
                            if let Some(t) = col.tag.take() {
                                kernel_tags.push(t);
                            }
                        } else {
                            buckets[lead].push(o);
                        }
                    } else {
                        keep.push(o);
                    }
                }
                store[pid].v = pivot;
                store[pid].tag = ptag;
                keep.push(pid);
                ids = keep;
            }
            let pid = ids[0];
            let col = &mut store[pid];
            if col.v[r].is_negative() {
                for x in col.v.iter_mut() {
                    *x = -&*x;
                }
                if let Some(t) = col.tag.as_mut() {
                    for x in t.iter_mut() {
                        *x = -&*x;
                    }
                }
            }
            basis.push(std::mem::take(&mut col.v));
            basis_tags.push(col.tag.take().unwrap_or_default());
            pivots.push(r);
        }

        hermite_reduce(&mut basis, &pivots, &mut basis_tags);
        EchelonOutput { basis, pivots, basis_tags, kernel_tags }
    }
}

/// Reduces entries left of each pivot into `[0, pivot)`, giving the unique
/// column Hermite form of the lattice.
fn hermite_reduce(basis: &mut [Vec<Int>], pivots: &[usize], tags: &mut [Vec<Int>]) {
    for j in 0..basis.len() {
        let p = pivots[j];
        let (head, tail) = basis.split_at_mut(j);
        let bj = &tail[0];
        let piv = &bj[p];
        let (thead, ttail) = tags.split_at_mut(j);
        let tj = &ttail[0];
        for (i, col) in head.iter_mut().enumerate() {
            let q = col[p].div_floor(piv);
            if q.is_zero() {
                continue;
            }
            for r in p..col.len() {
                if !bj[r].is_zero() {
                    col[r].sub_mul_assign(&q, &bj[r]);
                }
            }
            for (x, y) in thead[i].iter_mut().zip(tj) {
                if !y.is_zero() {
                    x.sub_mul_assign(&q, y);
                }
            }
        }
    }
}

/// A subgroup of `Z^dim`, stored as its column Hermite basis.
///
/// Two lattices are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl Lattice {
    /// Lattice spanned by `gens` together with `moduli[r]·e_r` for every
    /// positive modulus.
    pub fn from_generators(dim: usize, gens: Vec<Vec<Int>>, moduli: Option<&[Int]>) -> Lattice {
        let mut e = Echelon::new(dim);
        if let Some(m) = moduli {
            e = e.row_moduli(m);
        }
        let out = e.run(gens.into_iter().map(|g| (g, None)).collect());
        Lattice { dim, basis: out.basis, pivots: out.pivots }
    }

    pub fn from_matrix(m: &super::IntMatrix) -> Lattice {
        Lattice::from_generators(m.rows(), m.to_columns(), None)
    }

    pub fn full(dim: usize) -> Lattice {
        let basis = (0..dim)
            .map(|i| {
                let mut v = vec![Int::ZERO; dim];
                v[i] = Int::ONE;
                v
            })
            .collect();
        Lattice { dim, basis, pivots: (0..dim).collect() }
    }

    pub(crate) fn from_echelon(dim: usize, basis: Vec<Vec<Int>>, pivots: Vec<usize>) -> Lattice {
        Lattice { dim, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> super::IntMatrix {
        super::IntMatrix::from_columns(self.dim, self.basis.clone())
    }

    /// Coefficients of `v` in the Hermite basis, or `None` if `v` lies
    /// outside the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            if !w[p].is_multiple_of(&b[p]) {
                return None;
            }
            let c = w[p].div_exact(&b[p]);
            if !c.is_zero() {
                for r in p..self.dim {
                    if !b[r].is_zero() {
                        w[r].sub_mul_assign(&c, &b[r]);
                    }
                }
            }
            coeffs.push(c);
        }
        w.iter().all(Int::is_zero).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Canonical representative of the coset `v + L`.
    pub fn reduce(&self, v: &[Int]) -> Vec<Int> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p].div_floor(&b[p]);
            if !c.is_zero() {
                for r in p..self.dim {
                    if !b[r].is_zero() {
                        w[r].sub_mul_assign(&c, &b[r]);
                    }
                }
            }
        }
        w
    }

    /// Combination of basis vectors with the given coefficients.
    pub fn combine(&self, coeffs: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::ZERO; self.dim];
        for (b, c) in self.basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let nc = -c;
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    o.sub_mul_assign(&nc, x);
                }
            }
        }
        out
    }

    /// Sum `L + M`.
    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Lattice::from_generators(self.dim, gens, None)
    }

    /// Intersection `L ∩ M`.
    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let n = self.basis.len();
        let mut cols = Vec::with_capacity(n + other.basis.len());
        for (i, b) in self.basis.iter().enumerate() {
            let mut t = vec![Int::ZERO; n];
            t[i] = Int::ONE;
            cols.push((b.clone(), Some(t)));
        }
        for b in &other.basis {
            cols.push((b.clone(), Some(vec![Int::ZERO; n])));
        }
        let out = Echelon::new(self.dim).tags(n).run(cols);
        let gens = out.kernel_tags.iter().map(|t| self.combine(t)).collect();
        Lattice::from_generators(self.dim, gens, None)
    }
}
