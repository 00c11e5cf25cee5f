//! `Hⁿ(H, A)` and `HSⁿ(H, A)` as explicit subquotients of the cochain
//! lattice, class membership, the natural map `i : HSⁿ → Hⁿ`, and an
//! independent derivation-based computation of `H¹`.

use std::sync::Arc;

use serde::Serialize;

use crate::cochain::{differential_lift, invariance_conditions, symmetric_preimage, Cochain, CochainSpace, Limits};
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::Group;
use crate::zlinalg::{kernel_mod_diagonal, Int, IntMatrix, Lattice, Subquotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ordinary,
    Symmetric,
}

/// A cohomology group as cocycles modulo boundaries, both given as lattices
/// in `Z^N` containing the relations.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    kind: Kind,
    space: Arc<CochainSpace>,
    quotient: Subquotient,
    generators: Vec<Cochain>,
}

/// A class together with a representative cocycle.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    pub result: Arc<CohomologyResult>,
    pub representative: Cochain,
}

impl CohomologyClass {
    pub fn coordinates(&self) -> Vec<Int> {
        self.result.class_coordinates(&self.representative).expect("representative is a cocycle")
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates().iter().all(Int::is_zero)
    }
}

impl CohomologyResult {
    pub(crate) fn from_parts(kind: Kind, space: Arc<CochainSpace>, cocycles: Lattice, boundaries: Lattice) -> Result<Self> {
        let quotient = Subquotient::new(cocycles, boundaries)?;
        let generators = quotient.generators().iter().map(|v| Cochain::from_vector(space.clone(), v.clone())).collect();
        Ok(CohomologyResult { kind, space, quotient, generators })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.space.degree()
    }

    pub fn space(&self) -> &Arc<CochainSpace> {
        &self.space
    }

    /// Invariant factors, trivial ones omitted; `0` denotes a copy of `Z`.
    pub fn factors(&self) -> Vec<Int> {
        self.quotient.factors()
    }

    pub fn generators(&self) -> &[Cochain] {
        &self.generators
    }

    pub fn cocycles(&self) -> &Lattice {
        self.quotient.outer()
    }

    pub fn boundaries(&self) -> &Lattice {
        self.quotient.inner()
    }

    pub fn is_trivial(&self) -> bool {
        self.quotient.is_trivial()
    }

    pub fn is_cocycle(&self, sigma: &Cochain) -> bool {
        *sigma.space().as_ref() == *self.space && self.cocycles().contains(sigma.values())
    }

    fn check(&self, sigma: &Cochain) -> Result<()> {
        if *sigma.space().as_ref() != *self.space {
            return Err(Error::SpaceMismatch);
        }
        if !self.cocycles().contains(sigma.values()) {
            return Err(Error::NotACocycle);
        }
        Ok(())
    }

    /// Coordinates of `[σ]` on the generators, each reduced modulo its factor.
    pub fn class_coordinates(&self, sigma: &Cochain) -> Result<Vec<Int>> {
        self.check(sigma)?;
        Ok(self.quotient.coordinates(sigma.values()).expect("checked cocycle"))
    }

    /// `[σ] = [τ]`.
    pub fn class_equal(&self, sigma: &Cochain, tau: &Cochain) -> Result<bool> {
        self.check(sigma)?;
        self.check(tau)?;
        Ok(self.boundaries().contains(sigma.sub(tau)?.values()))
    }

    pub fn is_boundary(&self, sigma: &Cochain) -> Result<bool> {
        self.check(sigma)?;
        Ok(self.boundaries().contains(sigma.values()))
    }

    /// Canonical representative of the class of `σ`.
    pub fn canonical(&self, sigma: &Cochain) -> Result<Cochain> {
        self.check(sigma)?;
        Ok(Cochain::from_vector(self.space.clone(), self.boundaries().reduce(sigma.values())))
    }

    /// `Σ cᵢ·genᵢ`.
    pub fn combine(&self, coeffs: &[Int]) -> Cochain {
        let mut out = vec![Int::ZERO; self.space.dim()];
        for (g, c) in self.generators.iter().zip(coeffs) {
            for (o, x) in out.iter_mut().zip(g.values()) {
                if !x.is_zero() {
                    *o += &(x * c);
                }
            }
        }
        Cochain::from_vector(self.space.clone(), out)
    }
}

/// Boundary lattice `∂(Cⁿ⁻¹)` or `∂(CSⁿ⁻¹)` plus relations.
fn boundary_lattice(space: &CochainSpace, kind: Kind) -> Result<Lattice> {
    let moduli = space.moduli();
    let n = space.degree();
    if n == 0 {
        return Ok(Lattice::from_generators(space.dim(), Vec::new(), Some(&moduli)));
    }
    let below = space.with_degree(n - 1);
    let d = differential_lift(&below);
    let gens = match kind {
        Kind::Ordinary => d.to_columns(),
        Kind::Symmetric => {
            let pre = symmetric_preimage(&below)?;
            pre.basis().iter().map(|b| d.mul_vec(b)).collect::<Result<Vec<_>, _>>()?
        }
    };
    Ok(Lattice::from_generators(space.dim(), gens, Some(&moduli)))
}

fn cocycle_lattice(space: &CochainSpace, kind: Kind) -> Result<Lattice> {
    let n = space.degree();
    let moduli = space.moduli();
    let d = differential_lift(space);
    let next = space.with_degree(n + 1).moduli();
    match kind {
        Kind::Symmetric if n > 0 => {
            let cond = invariance_conditions(space)?;
            let stacked = IntMatrix::vstack(&[&d, &cond])?;
            let mut tgt = next;
            for _ in 0..n {
                tgt.extend(moduli.iter().cloned());
            }
            Ok(kernel_mod_diagonal(&stacked, &moduli, &tgt)?)
        }
        _ => Ok(kernel_mod_diagonal(&d, &moduli, &next)?),
    }
}

/// `Hⁿ` or `HSⁿ` over the carrier of `space`.
pub fn cohomology_of(space: &Arc<CochainSpace>, kind: Kind, limits: &Limits) -> Result<CohomologyResult> {
    limits.check(space.carrier().order(), space.module().rank(), space.degree())?;
    let z = cocycle_lattice(space, kind)?;
    let b = boundary_lattice(space, kind)?;
    CohomologyResult::from_parts(kind, space.clone(), z, b)
}

/// `Hⁿ(G, A)` (or `HSⁿ(G, A)` when `symmetric`).
pub fn cohomology_group(
    group: &Arc<Group>,
    module: &Arc<GModule>,
    n: usize,
    symmetric: bool,
    limits: &Limits,
) -> Result<CohomologyResult> {
    let space = CochainSpace::over_group(group.clone(), module.clone(), n);
    let kind = if symmetric { Kind::Symmetric } else { Kind::Ordinary };
    cohomology_of(&space, kind, limits)
}

/// Kernel and surjectivity of `i : HSⁿ → Hⁿ`.
#[derive(Clone, Debug)]
pub struct NaturalMap {
    /// `(ZSⁿ ∩ Bⁿ)/BSⁿ`.
    pub kernel: Subquotient,
    pub surjective: bool,
}

impl NaturalMap {
    pub fn injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn kernel_factors(&self) -> Vec<Int> {
        self.kernel.factors()
    }
}

/// Compares precomputed ordinary and symmetric results on the same space.
pub fn natural_map_between(ordinary: &CohomologyResult, symmetric: &CohomologyResult) -> Result<NaturalMap> {
    if *ordinary.space != *symmetric.space || ordinary.kind != Kind::Ordinary || symmetric.kind != Kind::Symmetric {
        return Err(Error::SpaceMismatch);
    }
    let meet = symmetric.cocycles().intersect(ordinary.boundaries());
    let kernel = Subquotient::new(meet, symmetric.boundaries().clone())?;
    let image = symmetric.cocycles().sum(ordinary.boundaries());
    let surjective = ordinary.cocycles().basis().iter().all(|z| image.contains(z));
    Ok(NaturalMap { kernel, surjective })
}

pub fn natural_map_analysis(group: &Arc<Group>, module: &Arc<GModule>, n: usize, limits: &Limits) -> Result<NaturalMap> {
    let h = cohomology_group(group, module, n, false, limits)?;
    let hs = cohomology_group(group, module, n, true, limits)?;
    natural_map_between(&h, &hs)
}

/// `Der(G, A)`, `Pder(G, A)` and `Der/Pder ≅ H¹(G, A)`, computed from the
/// derivation identity rather than the bar differential.
#[derive(Clone, Debug)]
pub struct Derivations {
    pub der: Lattice,
    pub pder: Lattice,
    pub quotient: Subquotient,
}

pub fn derivations_h1(group: &Group, module: &GModule) -> Result<Derivations> {
    let order = group.order();
    let k = module.rank();
    let dim = order * k;
    let rel = module.relations();
    let moduli: Vec<Int> = (0..order).flat_map(|_| rel.iter().cloned()).collect();
    // one block of k rows per pair (g, h): σ(gh) − g·σ(h) − σ(g)
    let mut cond = IntMatrix::zeros(order * order * k, dim);
    for g in 0..order {
        let mg = module.action_matrix(g);
        for h in 0..order {
            let row = (g * order + h) * k;
            let gh = group.mul(g, h);
            for a in 0..k {
                cond.add_at(row + a, gh * k + a, &Int::ONE);
                cond.add_at(row + a, g * k + a, &Int::from(-1));
                for b in 0..k {
                    let v = mg.get(a, b);
                    if !v.is_zero() {
                        cond.add_at(row + a, h * k + b, &-v);
                    }
                }
            }
        }
    }
    let tgt: Vec<Int> = (0..order * order).flat_map(|_| rel.iter().cloned()).collect();
    let der = kernel_mod_diagonal(&cond, &moduli, &tgt)?;
    let mut inner = Vec::with_capacity(k);
    for j in 0..k {
        let mut v = vec![Int::ZERO; dim];
        for g in 0..order {
            let col = module.action_matrix(g).col(j);
            for a in 0..k {
                v[g * k + a] = &col[a] - &Int::from(i64::from(a == j));
            }
        }
        inner.push(v);
    }
    let pder = Lattice::from_generators(dim, inner, Some(&moduli));
    let quotient = Subquotient::new(der.clone(), pder.clone())?;
    Ok(Derivations { der, pder, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn setup(g: Group, rel: &[i64]) -> (Arc<Group>, Arc<GModule>) {
        let a = GModule::trivial(&g, rel);
        (Arc::new(g), Arc::new(a))
    }

    #[test]
    fn trivial_group_has_no_higher_cohomology() {
        let (g, a) = setup(Group::trivial(), &[0]);
        for n in 1..=3 {
            for sym in [false, true] {
                assert!(cohomology_group(&g, &a, n, sym, &Limits::default()).unwrap().is_trivial());
            }
        }
        assert_eq!(cohomology_group(&g, &a, 0, false, &Limits::default()).unwrap().factors(), ints(&[0]));
    }

    #[test]
    fn z2_with_z2_coefficients() {
        let (g, a) = setup(Group::cyclic(2), &[2]);
        let l = Limits::default();
        for n in 0..=3 {
            assert_eq!(cohomology_group(&g, &a, n, false, &l).unwrap().factors(), ints(&[2]), "n = {n}");
        }
        let h1 = cohomology_group(&g, &a, 1, false, &l).unwrap();
        let hs1 = cohomology_group(&g, &a, 1, true, &l).unwrap();
        assert_eq!(hs1.factors(), ints(&[2]));
        let zero = Cochain::zero(h1.space().clone());
        let gen = &h1.generators()[0];
        assert!(!h1.class_equal(gen, &zero).unwrap());
        assert!(h1.class_equal(gen, gen).unwrap());
    }

    #[test]
    fn integer_coefficients_over_cyclic_groups() {
        let (g, a) = setup(Group::cyclic(3), &[0]);
        let l = Limits::default();
        assert_eq!(cohomology_group(&g, &a, 0, false, &l).unwrap().factors(), ints(&[0]));
        assert!(cohomology_group(&g, &a, 1, false, &l).unwrap().is_trivial());
        assert_eq!(cohomology_group(&g, &a, 2, false, &l).unwrap().factors(), ints(&[3]));
        assert!(cohomology_group(&g, &a, 3, false, &l).unwrap().is_trivial());
    }

    #[test]
    fn sign_action_of_z2_on_z() {
        let g = Group::cyclic(2);
        let a = GModule::from_generators(&g, ints(&[0]), &[(1, IntMatrix::from_rows(&[[-1]]))]).unwrap();
        let (g, a) = (Arc::new(g), Arc::new(a));
        let l = Limits::default();
        assert!(cohomology_group(&g, &a, 0, false, &l).unwrap().is_trivial());
        assert_eq!(cohomology_group(&g, &a, 1, false, &l).unwrap().factors(), ints(&[2]));
        assert!(cohomology_group(&g, &a, 2, false, &l).unwrap().is_trivial());
    }

    #[test]
    fn non_cocycles_are_rejected() {
        let (g, a) = setup(Group::cyclic(3), &[3]);
        let h = cohomology_group(&g, &a, 1, false, &Limits::default()).unwrap();
        let bad = Cochain::from_vector(h.space().clone(), ints(&[0, 1, 0]));
        assert_eq!(h.class_equal(&bad, &bad).unwrap_err(), Error::NotACocycle);
    }

    #[test]
    fn natural_map_in_low_degrees() {
        let (g, a) = setup(Group::symmetric(3), &[2]);
        let l = Limits::default();
        for n in 0..=2 {
            let m = natural_map_analysis(&g, &a, n, &l).unwrap();
            assert!(m.injective(), "n = {n}");
        }
        assert!(natural_map_analysis(&g, &a, 1, &l).unwrap().surjective);
    }

    #[test]
    fn derivations_agree_with_bar_complex_in_degree_one() {
        let (g, a) = setup(Group::symmetric(3), &[3]);
        let d = derivations_h1(&g, &a).unwrap();
        assert!(d.quotient.is_trivial());
        assert!(d.pder.basis().iter().all(|b| b.iter().all(|x| x.is_multiple_of(&Int::from(3)))));
        let (g, a) = setup(Group::klein4(), &[2]);
        let d = derivations_h1(&g, &a).unwrap();
        let h = cohomology_group(&g, &a, 1, false, &Limits::default()).unwrap();
        assert_eq!(d.quotient.factors(), h.factors());
        assert_eq!(h.factors(), ints(&[2, 2]));
    }

    #[test]
    fn guards_refuse_oversized_requests() {
        let (g, a) = setup(Group::cyclic(2), &[2]);
        let e = cohomology_group(&g, &a, 4, false, &Limits::default()).unwrap_err();
        assert_eq!(e, Error::DegreeCapExceeded { degree: 4, cap: 3 });
        let tight = Limits { max_degree: 3, max_coordinates: 8 };
        assert!(matches!(cohomology_group(&g, &a, 3, false, &tight), Err(Error::MemoryGuard { .. })));
    }
}
