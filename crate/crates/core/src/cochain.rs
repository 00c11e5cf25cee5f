//! Inhomogeneous bar cochains `Cⁿ(H, A) = {σ : Hⁿ → A}` over a subgroup `H`
//! of the ambient group, together with the differential, the action of the
//! symmetric group `Σₙ₊₁` through its adjacent transpositions, and the
//! invariant subcomplex `CSⁿ`.
//!
//! A cochain is stored as a vector in `Z^N`, `N = k·|H|ⁿ`: tuple
//! `(h₁,…,hₙ)` (lexicographic in the member order of `H`) occupies the
//! `k` coordinates starting at `k·index`. The relations of `A` repeat on
//! every block.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::{Group, Subgroup};
use crate::zlinalg::{kernel_mod_diagonal, Int, IntMatrix, Lattice};

/// Resource limits on cochain computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    /// Largest admissible `|H|ⁿ⁺¹·k`.
    pub max_coordinates: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 3, max_coordinates: 1_000_000 }
    }
}

impl Limits {
    /// Checks that degree `n` cohomology over a carrier of order `m` with a
    /// rank-`k` module fits (it needs the degree `n+1` cochains).
    pub fn check(&self, m: usize, k: usize, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeCapExceeded { degree: n, cap: self.max_degree });
        }
        let coords = (m as u128).saturating_pow(n as u32 + 1).saturating_mul(k.max(1) as u128);
        if coords > self.max_coordinates {
            return Err(Error::MemoryGuard { coords, limit: self.max_coordinates });
        }
        Ok(())
    }
}

/// The group `Cⁿ(H, A)` presented as `Z^N / relations`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    group: Arc<Group>,
    carrier: Subgroup,
    module: Arc<GModule>,
    degree: usize,
    tuples: usize,
}

impl PartialEq for CochainSpace {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.carrier == other.carrier
            && Arc::ptr_eq(&self.group, &other.group)
            && Arc::ptr_eq(&self.module, &other.module)
    }
}

impl CochainSpace {
    pub fn new(group: Arc<Group>, carrier: Subgroup, module: Arc<GModule>, degree: usize) -> Arc<CochainSpace> {
        let tuples = carrier.order().pow(degree as u32);
        Arc::new(CochainSpace { group, carrier, module, degree, tuples })
    }

    /// Cochains on the whole group.
    pub fn over_group(group: Arc<Group>, module: Arc<GModule>, degree: usize) -> Arc<CochainSpace> {
        let carrier = Subgroup::whole(&group);
        CochainSpace::new(group, carrier, module, degree)
    }

    /// Same carrier and module, another degree.
    pub fn with_degree(&self, degree: usize) -> Arc<CochainSpace> {
        CochainSpace::new(self.group.clone(), self.carrier.clone(), self.module.clone(), degree)
    }

    /// Same group, module and degree over another subgroup.
    pub fn with_carrier(&self, carrier: Subgroup) -> Arc<CochainSpace> {
        CochainSpace::new(self.group.clone(), carrier, self.module.clone(), self.degree)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn carrier(&self) -> &Subgroup {
        &self.carrier
    }

    pub fn module(&self) -> &Arc<GModule> {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of tuples `|H|ⁿ`.
    pub fn tuple_count(&self) -> usize {
        self.tuples
    }

    /// Ambient rank `N = k·|H|ⁿ`.
    pub fn dim(&self) -> usize {
        self.tuples * self.module.rank()
    }

    pub fn moduli(&self) -> Vec<Int> {
        let rel = self.module.relations();
        (0..self.tuples).flat_map(|_| rel.iter().cloned()).collect()
    }

    /// Index of a tuple of carrier elements.
    pub fn tuple_index(&self, elems: &[usize]) -> Option<usize> {
        debug_assert_eq!(elems.len(), self.degree);
        let m = self.carrier.order();
        elems.iter().try_fold(0usize, |acc, &g| Some(acc * m + self.carrier.position(g)?))
    }

    /// The tuple stored at `index`.
    pub fn tuple(&self, index: usize) -> Vec<usize> {
        let m = self.carrier.order();
        let members = self.carrier.members();
        let mut out = vec![0; self.degree];
        let mut rest = index;
        for slot in out.iter_mut().rev() {
            *slot = members[rest % m];
            rest /= m;
        }
        out
    }

    fn index_unchecked(&self, elems: &[usize]) -> usize {
        self.tuple_index(elems).expect("tuple of carrier elements")
    }
}

/// An element of `Cⁿ(H, A)`, canonically reduced.
#[derive(Clone, Debug)]
pub struct Cochain {
    space: Arc<CochainSpace>,
    values: Vec<Int>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        *self.space == *other.space && self.values == other.values
    }
}

impl Cochain {
    /// Reduces a lifted vector into canonical form.
    pub fn from_vector(space: Arc<CochainSpace>, mut values: Vec<Int>) -> Cochain {
        assert_eq!(values.len(), space.dim(), "vector length must match the cochain space");
        let k = space.module.rank();
        if k > 0 {
            for block in values.chunks_mut(k) {
                space.module.reduce(block);
            }
        }
        Cochain { space, values }
    }

    pub fn zero(space: Arc<CochainSpace>) -> Cochain {
        let values = vec![Int::ZERO; space.dim()];
        Cochain { space, values }
    }

    /// Cochain with `σ(tuple) = f(tuple)`.
    pub fn from_fn(space: Arc<CochainSpace>, mut f: impl FnMut(&[usize]) -> Vec<Int>) -> Cochain {
        let mut values = Vec::with_capacity(space.dim());
        for t in 0..space.tuple_count() {
            let v = f(&space.tuple(t));
            assert_eq!(v.len(), space.module.rank());
            values.extend(v);
        }
        Cochain::from_vector(space, values)
    }

    pub fn space(&self) -> &Arc<CochainSpace> {
        &self.space
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Int> {
        self.values
    }

    /// `σ(h₁,…,hₙ)`
    pub fn value(&self, elems: &[usize]) -> &[Int] {
        let k = self.space.module.rank();
        let t = self.space.index_unchecked(elems);
        &self.values[t * k..(t + 1) * k]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Int::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if *self.space != *other.space {
            return Err(Error::SpaceMismatch);
        }
        let v = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Cochain::from_vector(self.space.clone(), v))
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        if *self.space != *other.space {
            return Err(Error::SpaceMismatch);
        }
        let v = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(Cochain::from_vector(self.space.clone(), v))
    }

    pub fn scale(&self, c: &Int) -> Cochain {
        let v = self.values.iter().map(|a| a * c).collect();
        Cochain::from_vector(self.space.clone(), v)
    }
}

/// Iterates all tuples of positions in `0..m` of length `len`.
fn for_each_tuple(m: usize, len: usize, mut f: impl FnMut(usize, &[usize])) {
    let total = m.pow(len as u32);
    let mut pos = vec![0usize; len];
    for idx in 0..total {
        f(idx, &pos);
        for slot in pos.iter_mut().rev() {
            *slot += 1;
            if *slot < m {
                break;
            }
            *slot = 0;
        }
    }
}

fn add_block(mat: &mut IntMatrix, row_t: usize, col_t: usize, k: usize, sign: i64, block: Option<&IntMatrix>) {
    let s = Int::from(sign);
    for a in 0..k {
        match block {
            None => mat.add_at(row_t * k + a, col_t * k + a, &s),
            Some(b) => {
                for c in 0..k {
                    let v = b.get(a, c);
                    if !v.is_zero() {
                        mat.add_at(row_t * k + a, col_t * k + c, &(v * &s));
                    }
                }
            }
        }
    }
}

/// Lift of `∂ⁿ : Cⁿ → Cⁿ⁺¹` to an integer matrix:
/// `∂σ(g₁,…,gₙ₊₁) = g₁σ(g₂,…) + Σᵢ(−1)ⁱσ(…,gᵢgᵢ₊₁,…) + (−1)ⁿ⁺¹σ(g₁,…,gₙ)`.
pub fn differential_lift(space: &CochainSpace) -> IntMatrix {
    let n = space.degree;
    let k = space.module.rank();
    let m = space.carrier.order();
    let members = space.carrier.members();
    let g = &space.group;
    let target = space.with_degree(n + 1);
    let mut mat = IntMatrix::zeros(target.dim(), space.dim());
    let mut elems = vec![0usize; n + 1];
    let mut buf = vec![0usize; n];
    for_each_tuple(m, n + 1, |row, pos| {
        for (e, &p) in elems.iter_mut().zip(pos) {
            *e = members[p];
        }
        buf.copy_from_slice(&elems[1..]);
        add_block(&mut mat, row, space.index_unchecked(&buf), k, 1, Some(space.module.action_matrix(elems[0])));
        for i in 1..=n {
            // merge positions i-1 and i (0-based)
            for (j, slot) in buf.iter_mut().enumerate() {
                *slot = match j.cmp(&(i - 1)) {
                    std::cmp::Ordering::Less => elems[j],
                    std::cmp::Ordering::Equal => g.mul(elems[i - 1], elems[i]),
                    std::cmp::Ordering::Greater => elems[j + 1],
                };
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            add_block(&mut mat, row, space.index_unchecked(&buf), k, sign, None);
        }
        buf.copy_from_slice(&elems[..n]);
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        add_block(&mut mat, row, space.index_unchecked(&buf), k, sign, None);
    });
    mat
}

/// `∂ⁿσ`, evaluated pointwise.
pub fn differential(sigma: &Cochain) -> Cochain {
    let space = sigma.space();
    let n = space.degree;
    let g = &space.group;
    let module = &space.module;
    let k = module.rank();
    let target = space.with_degree(n + 1);
    Cochain::from_fn(target, |t| {
        let mut acc = module.act(t[0], sigma.value(&t[1..]));
        for i in 1..=n {
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&t[..i - 1]);
            merged.push(g.mul(t[i - 1], t[i]));
            merged.extend_from_slice(&t[i + 1..]);
            let v = sigma.value(&merged);
            for j in 0..k {
                if i % 2 == 0 {
                    acc[j] += &v[j];
                } else {
                    acc[j] -= &v[j];
                }
            }
        }
        let v = sigma.value(&t[..n]);
        for j in 0..k {
            if (n + 1) % 2 == 0 {
                acc[j] += &v[j];
            } else {
                acc[j] -= &v[j];
            }
        }
        acc
    })
}

/// Argument tuple and acting element for the `i`-th adjacent transposition:
/// `((i,i+1)σ)(g) = −x·σ(args)`, with `x = g₁` for `i = 1` and `x = 1`
/// otherwise.
fn transposition_source(g: &Group, i: usize, t: &[usize], out: &mut Vec<usize>) -> usize {
    let n = t.len();
    out.clear();
    out.extend_from_slice(t);
    if i == 1 {
        out[0] = g.inv(t[0]);
        if n >= 2 {
            out[1] = g.mul(t[0], t[1]);
        }
        t[0]
    } else {
        // 1-based positions i-1, i, i+1 become g_{i-1}g_i, g_i⁻¹, g_i g_{i+1}
        let gi = t[i - 1];
        out[i - 2] = g.mul(t[i - 2], gi);
        out[i - 1] = g.inv(gi);
        if i < n {
            out[i] = g.mul(gi, t[i]);
        }
        0
    }
}

/// Matrix of the transposition `(i, i+1)`, `1 ≤ i ≤ n`, acting on `Cⁿ`.
pub fn generator_action_lift(space: &CochainSpace, i: usize) -> Result<IntMatrix> {
    let n = space.degree;
    if n == 0 {
        return Err(Error::DegreeTooLow);
    }
    assert!((1..=n).contains(&i), "transposition index out of range");
    let k = space.module.rank();
    let m = space.carrier.order();
    let members = space.carrier.members();
    let mut mat = IntMatrix::zeros(space.dim(), space.dim());
    let mut elems = vec![0usize; n];
    let mut src = Vec::with_capacity(n);
    for_each_tuple(m, n, |row, pos| {
        for (e, &p) in elems.iter_mut().zip(pos) {
            *e = members[p];
        }
        let x = transposition_source(&space.group, i, &elems, &mut src);
        let col = space.index_unchecked(&src);
        let block = (i == 1).then(|| space.module.action_matrix(x));
        add_block(&mut mat, row, col, k, -1, block);
    });
    Ok(mat)
}

/// `(i, i+1)·σ`, evaluated pointwise.
pub fn apply_transposition(sigma: &Cochain, i: usize) -> Result<Cochain> {
    let space = sigma.space().clone();
    let n = space.degree;
    if n == 0 {
        return Err(Error::DegreeTooLow);
    }
    assert!((1..=n).contains(&i), "transposition index out of range");
    let g = space.group.clone();
    let module = space.module.clone();
    let mut src = Vec::with_capacity(n);
    Ok(Cochain::from_fn(space, |t| {
        let x = transposition_source(&g, i, t, &mut src);
        module.act(x, sigma.value(&src)).iter().map(|v| -v).collect()
    }))
}

/// Fixed by every adjacent transposition, hence by `Σₙ₊₁`.
pub fn is_symmetric(sigma: &Cochain) -> bool {
    let n = sigma.space().degree;
    (1..=n).all(|i| apply_transposition(sigma, i).map(|t| t == *sigma).unwrap_or(false))
}

/// Stacked `[(T₁ − I); …; (Tₙ − I)]`.
pub fn invariance_conditions(space: &CochainSpace) -> Result<IntMatrix> {
    let id = IntMatrix::identity(space.dim());
    let blocks =
        (1..=space.degree).map(|i| generator_action_lift(space, i)?.sub(&id).map_err(Error::from)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    Ok(IntMatrix::vstack(&refs)?)
}

/// Preimage in `Z^N` of `CSⁿ(H, A)`. In degree 0 there is nothing to fix.
pub fn symmetric_preimage(space: &CochainSpace) -> Result<Lattice> {
    let moduli = space.moduli();
    if space.degree == 0 {
        return Ok(Lattice::full(space.dim()));
    }
    let cond = invariance_conditions(space)?;
    let tgt: Vec<Int> = (0..space.degree).flat_map(|_| moduli.iter().cloned()).collect();
    Ok(kernel_mod_diagonal(&cond, &moduli, &tgt)?)
}

/// Generator columns of the preimage of `CSⁿ(H, A)`.
pub fn symmetric_preimage_gens(space: &CochainSpace) -> Result<IntMatrix> {
    Ok(symmetric_preimage(space)?.basis_matrix())
}

fn contains_identity(t: &[usize]) -> bool {
    t.contains(&0)
}

/// Some adjacent pair `(gᵢ, gᵢ₊₁)` with `gᵢ₊₁ = gᵢ⁻¹`.
fn has_inverse_pair(g: &Group, t: &[usize]) -> bool {
    t.windows(2).any(|w| w[1] == g.inv(w[0]))
}

/// Vanishes on every tuple containing the identity.
pub fn is_normalized(sigma: &Cochain) -> bool {
    let space = sigma.space();
    (0..space.tuple_count()).all(|t| {
        let tuple = space.tuple(t);
        !contains_identity(&tuple) || sigma.value(&tuple).iter().all(Int::is_zero)
    })
}

/// Vanishes on every tuple with an adjacent inverse pair. Vacuous for `n ≤ 1`.
pub fn satisfies_star(sigma: &Cochain) -> bool {
    let space = sigma.space();
    let g = &space.group;
    (0..space.tuple_count()).all(|t| {
        let tuple = space.tuple(t);
        !has_inverse_pair(g, &tuple) || sigma.value(&tuple).iter().all(Int::is_zero)
    })
}

/// Lattice of cochains vanishing on the selected tuples (relations included).
pub fn vanishing_lattice(space: &CochainSpace, mut vanish: impl FnMut(&[usize]) -> bool) -> Lattice {
    let k = space.module.rank();
    let dim = space.dim();
    let mut gens = Vec::new();
    for t in 0..space.tuple_count() {
        if vanish(&space.tuple(t)) {
            continue;
        }
        for j in 0..k {
            let mut v = vec![Int::ZERO; dim];
            v[t * k + j] = Int::ONE;
            gens.push(v);
        }
    }
    Lattice::from_generators(dim, gens, Some(&space.moduli()))
}

/// Normalized cochains (and, when `star`, also satisfying the inverse-pair
/// vanishing conditions).
pub fn normalized_lattice(space: &CochainSpace, star: bool) -> Lattice {
    let g = space.group.clone();
    vanishing_lattice(space, |t| contains_identity(t) || (star && has_inverse_pair(&g, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(g: Group, a: GModule, n: usize) -> Arc<CochainSpace> {
        CochainSpace::over_group(Arc::new(g), Arc::new(a), n)
    }

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn tuple_indexing_round_trips() {
        let s = space(Group::cyclic(3), GModule::trivial(&Group::cyclic(3), &[2]), 3);
        for t in 0..s.tuple_count() {
            assert_eq!(s.tuple_index(&s.tuple(t)), Some(t));
        }
        assert_eq!(s.tuple(1), vec![0, 0, 1]);
    }

    #[test]
    fn degree_zero_differential() {
        let g = Group::cyclic(2);
        let s = space(g.clone(), GModule::trivial(&g, &[2]), 0);
        assert!(differential_lift(&s).is_zero());
        let neg = GModule::from_generators(&g, ints(&[3]), &[(1, IntMatrix::from_rows(&[[2]]))]).unwrap();
        let s = space(g, neg, 0);
        let d = differential_lift(&s);
        // ∂a(g) = g·a − a
        assert_eq!(d, IntMatrix::from_rows(&[[0], [1]]));
    }

    #[test]
    fn degree_one_differential_pattern() {
        let g = Group::cyclic(2);
        let s = space(g.clone(), GModule::trivial(&g, &[2]), 1);
        let d = differential_lift(&s);
        // rows (g,h) = (0,0),(0,1),(1,0),(1,1); ∂σ(g,h) = σ(h) − σ(gh) + σ(g)
        let expect = IntMatrix::from_rows(&[[1, 0], [1, 0], [1, 0], [-1, 2]]);
        assert_eq!(d, expect);
        let sigma = Cochain::from_vector(s.clone(), ints(&[0, 1]));
        let direct = differential(&sigma);
        let via = Cochain::from_vector(s.with_degree(2), d.mul_vec(sigma.values()).unwrap());
        assert_eq!(direct, via);
    }

    #[test]
    fn transposition_in_degree_one_for_z2() {
        let g = Group::cyclic(2);
        let s = space(g.clone(), GModule::trivial(&g, &[2]), 1);
        let t = generator_action_lift(&s, 1).unwrap();
        // −σ(g⁻¹) with g⁻¹ = g, which is σ(g) modulo 2
        assert_eq!(t, IntMatrix::from_rows(&[[-1, 0], [0, -1]]));
        let sym = symmetric_preimage(&s).unwrap();
        assert_eq!(sym, Lattice::full(2));
        assert_eq!(generator_action_lift(&s.with_degree(0), 1).unwrap_err(), Error::DegreeTooLow);
    }

    #[test]
    fn last_transposition_is_a_signed_permutation() {
        let g = Group::cyclic(3);
        let s = space(g.clone(), GModule::trivial(&g, &[0]), 2);
        let t = generator_action_lift(&s, 2).unwrap();
        for row in 0..s.dim() {
            let tuple = s.tuple(row);
            let src = s.tuple_index(&[g.mul(tuple[0], tuple[1]), g.inv(tuple[1])]).unwrap();
            for col in 0..s.dim() {
                let expect = if col == src { -1 } else { 0 };
                assert_eq!(t.get(row, col), &Int::from(expect));
            }
        }
    }

    #[test]
    fn normalized_and_star_predicates() {
        let g = Group::cyclic(2);
        let a = GModule::trivial(&g, &[2]);
        let s1 = space(g.clone(), a.clone(), 1);
        assert!(is_normalized(&Cochain::zero(s1.clone())));
        assert!(is_normalized(&Cochain::from_vector(s1, ints(&[0, 1]))));
        let s2 = space(g, a, 2);
        let ones = Cochain::from_vector(s2.clone(), ints(&[1, 1, 1, 1]));
        assert!(!is_normalized(&ones));
        assert!(!satisfies_star(&ones));
        assert!(satisfies_star(&Cochain::zero(s2.clone())));
        // only (0,0) and (1,1) are inverse pairs in Z/2
        let only_mixed = Cochain::from_vector(s2, ints(&[0, 1, 1, 0]));
        assert!(satisfies_star(&only_mixed));
    }

    #[test]
    fn symmetric_cochains_of_degree_one() {
        // σ ∈ CS¹ iff σ(g) = −g·σ(g⁻¹)
        let g = Group::cyclic(3);
        let a = GModule::trivial(&g, &[0]);
        let s = space(g.clone(), a, 1);
        let sym = symmetric_preimage(&s).unwrap();
        for v in sym.basis() {
            let c = Cochain::from_vector(s.clone(), v.clone());
            for x in g.elements() {
                let lhs = &c.value(&[x])[0];
                let rhs = -&c.value(&[g.inv(x)])[0];
                assert_eq!(*lhs, rhs);
            }
        }
        assert_eq!(sym.rank(), 1);
    }
}
