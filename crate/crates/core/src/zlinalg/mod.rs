//! Exact integer linear algebra: Hermite and Smith normal forms, kernels of
//! maps into quotient lattices, membership, and subquotient invariants.

mod echelon;
mod int;
mod matrix;
mod snf;

use thiserror::Error;

pub use echelon::Lattice;
pub use int::Int;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, Snf};

use echelon::Echelon;
use snf::{SnfCalc, Want};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("inner generators are not contained in the outer lattice")]
    NotASubgroupOf,
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::ZERO; n];
    v[i] = Int::ONE;
    v
}

/// Basis (Hermite form, as columns) of `{x : M·x ∈ colspan(R)}`.
pub fn kernel_mod_relations(m: &IntMatrix, r: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    if m.rows() != r.rows() {
        return Err(LinalgError::DimensionMismatch {
            op: "kernel_mod_relations",
            left: (m.rows(), m.cols()),
            right: (r.rows(), r.cols()),
        });
    }
    let a = m.cols();
    let mut cols = Vec::with_capacity(a + r.cols());
    for (i, c) in m.columns().enumerate() {
        cols.push((c.to_vec(), Some(unit(a, i))));
    }
    for c in r.columns() {
        cols.push((c.to_vec(), Some(vec![Int::ZERO; a])));
    }
    let out = Echelon::new(m.rows()).tags(a).run(cols);
    Ok(Lattice::from_generators(a, out.kernel_tags, None).basis_matrix())
}

/// `M` maps `Z^a/diag(src)` into `Z^b/diag(tgt)` compatibly: every relation
/// `dᵢ·eᵢ` of the source lands in the target relations.
pub fn is_compatible(m: &IntMatrix, src: &[Int], tgt: &[Int]) -> bool {
    (0..m.cols()).all(|i| {
        let d = &src[i];
        if d.is_zero() {
            return true;
        }
        m.col(i).iter().zip(tgt).all(|(x, t)| (x * d).is_multiple_of(t))
    })
}

/// Kernel of `M : Z^a → Z^b/diag(tgt)`, returned as a lattice that also
/// contains `diag(src)`.
///
/// The rows of `M` are imposed one at a time on a basis of the current
/// kernel; most rows of the sparse matrices met here are already satisfied
/// and cost a few dot products. When `M` is compatible with the source
/// relations, basis coordinates are kept reduced modulo them.
pub fn kernel_mod_diagonal(m: &IntMatrix, src: &[Int], tgt: &[Int]) -> Result<Lattice, LinalgError> {
    if m.rows() != tgt.len() || m.cols() != src.len() {
        return Err(LinalgError::DimensionMismatch {
            op: "kernel_mod_diagonal",
            left: (m.rows(), m.cols()),
            right: (tgt.len(), src.len()),
        });
    }
    let a = m.cols();
    let compatible = is_compatible(m, src, tgt);
    let mut rows: Vec<Vec<(usize, Int)>> = vec![Vec::new(); m.rows()];
    for c in 0..a {
        for (r, x) in m.col(c).iter().enumerate() {
            if !x.is_zero() {
                rows[r].push((c, x.clone()));
            }
        }
    }
    let mut basis: Vec<Vec<Int>> = (0..a).map(|i| unit(a, i)).collect();
    let mut values: Vec<Int> = Vec::new();
    for (row, t) in rows.iter().zip(tgt) {
        if row.is_empty() {
            continue;
        }
        let reduce_t = |x: Int| if t.is_positive() { x.mod_symmetric(t) } else { x };
        values.clear();
        values.extend(basis.iter().map(|b| {
            let mut v = Int::ZERO;
            for (c, x) in row {
                if !b[*c].is_zero() {
                    v += &(x * &b[*c]);
                }
            }
            reduce_t(v)
        }));
        if values.iter().all(Int::is_zero) {
            continue;
        }
        // unimodular column operations until a single nonzero value remains
        let p = loop {
            let (p, _) = values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .min_by(|(i, x), (j, y)| x.cmp_abs(y).then(i.cmp(j)))
                .expect("some value is nonzero");
            let mut others = false;
            for l in 0..basis.len() {
                if l == p || values[l].is_zero() {
                    continue;
                }
                let q = values[l].div_round(&values[p]);
                if !q.is_zero() {
                    let (bl, bp) = if l < p {
                        let (x, y) = basis.split_at_mut(p);
                        (&mut x[l], &y[0])
                    } else {
                        let (x, y) = basis.split_at_mut(l);
                        (&mut y[0], &x[p])
                    };
                    for (c, y) in bp.iter().enumerate() {
                        if !y.is_zero() {
                            bl[c].sub_mul_assign(&q, y);
                            if compatible && src[c].is_positive() {
                                bl[c] = bl[c].mod_symmetric(&src[c]);
                            }
                        }
                    }
                    let mut v = values[l].clone();
                    v.sub_mul_assign(&q, &values[p]);
                    values[l] = reduce_t(v);
                }
                others |= !values[l].is_zero();
            }
            if !others {
                break p;
            }
        };
        if t.is_positive() {
            let mult = t.div_exact(&values[p].gcd(t));
            for (c, x) in basis[p].iter_mut().enumerate() {
                if !x.is_zero() {
                    *x = &*x * &mult;
                    if compatible && src[c].is_positive() {
                        *x = x.mod_symmetric(&src[c]);
                    }
                }
            }
            if basis[p].iter().all(Int::is_zero) {
                basis.swap_remove(p);
            }
        } else {
            basis.swap_remove(p);
        }
    }
    Ok(Lattice::from_generators(a, basis, Some(src)))
}

/// Integer solution `c` of `Gens·c = v`, if one exists.
pub fn membership_solve(gens: &IntMatrix, v: &[Int]) -> Result<Option<Vec<Int>>, LinalgError> {
    if gens.rows() != v.len() {
        return Err(LinalgError::DimensionMismatch {
            op: "membership_solve",
            left: (gens.rows(), gens.cols()),
            right: (v.len(), 1),
        });
    }
    let n = gens.cols();
    let cols = gens.columns().enumerate().map(|(i, c)| (c.to_vec(), Some(unit(n, i)))).collect();
    let out = Echelon::new(gens.rows()).tags(n).run(cols);
    let lattice = Lattice::from_echelon(gens.rows(), out.basis, out.pivots);
    Ok(lattice.coordinates(v).map(|coeffs| {
        let mut c = vec![Int::ZERO; n];
        for (k, tag) in coeffs.iter().zip(&out.basis_tags) {
            if k.is_zero() {
                continue;
            }
            let nk = -k;
            for (ci, t) in c.iter_mut().zip(tag) {
                if !t.is_zero() {
                    ci.sub_mul_assign(&nk, t);
                }
            }
        }
        c
    }))
}

/// The finitely generated abelian group `outer/inner` in Smith form, with
/// generators and a way to read off coordinates of any element of `outer`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    outer: Lattice,
    inner: Lattice,
    /// Row transform taking Hermite coordinates of `outer` to Smith coordinates.
    u: Vec<Vec<Int>>,
    /// Full Smith diagonal of length `rank(outer)`, including units and zeros.
    diag: Vec<Int>,
    /// Positions in `diag` that are not 1.
    kept: Vec<usize>,
    generators: Vec<Vec<Int>>,
}

impl Subquotient {
    pub fn new(outer: Lattice, inner: Lattice) -> Result<Subquotient, LinalgError> {
        let r = outer.rank();
        let mut coord_cols = Vec::with_capacity(inner.rank());
        for b in inner.basis() {
            coord_cols.push(outer.coordinates(b).ok_or(LinalgError::NotASubgroupOf)?);
        }
        let rows: Vec<Vec<Int>> = (0..r).map(|i| coord_cols.iter().map(|c| c[i].clone()).collect()).collect();
        let calc = SnfCalc::new(rows, coord_cols.len(), Want { u: true, u_inv: true, v: false });
        let (mut diag, u, u_inv, _) = calc.run();
        diag.resize(r, Int::ZERO);
        let u = u.expect("requested");
        let u_inv = u_inv.expect("requested");
        let kept: Vec<usize> = (0..r).filter(|&i| !diag[i].is_one()).collect();
        let generators = kept.iter().map(|&i| inner.reduce(&outer.combine(&u_inv[i]))).collect();
        Ok(Subquotient { outer, inner, u, diag, kept, generators })
    }

    /// Invariant factors with the trivial ones dropped; `0` stands for `Z`.
    pub fn factors(&self) -> Vec<Int> {
        self.kept.iter().map(|&i| self.diag[i].clone()).collect()
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    pub fn outer(&self) -> &Lattice {
        &self.outer
    }

    pub fn inner(&self) -> &Lattice {
        &self.inner
    }

    pub fn is_trivial(&self) -> bool {
        self.kept.is_empty()
    }

    /// Coordinates of `z + inner` on the generators, each reduced modulo its
    /// factor. `None` when `z` is not in `outer`.
    pub fn coordinates(&self, z: &[Int]) -> Option<Vec<Int>> {
        let y = self.outer.coordinates(z)?;
        Some(
            self.kept
                .iter()
                .map(|&i| {
                    let mut c = Int::ZERO;
                    for (a, b) in self.u[i].iter().zip(&y) {
                        if !a.is_zero() && !b.is_zero() {
                            c += &(a * b);
                        }
                    }
                    let d = &self.diag[i];
                    if d.is_zero() {
                        c
                    } else {
                        c.mod_floor_abs(d)
                    }
                })
                .collect(),
        )
    }
}

/// Invariant factors of `colspan(K)/colspan(B)`.
pub fn subquotient_invariants(k: &IntMatrix, b: &IntMatrix) -> Result<Subquotient, LinalgError> {
    if k.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            op: "subquotient_invariants",
            left: (k.rows(), k.cols()),
            right: (b.rows(), b.cols()),
        });
    }
    Subquotient::new(Lattice::from_matrix(k), Lattice::from_matrix(b))
}
