//! Restriction, conjugation and transfer on cochains, and the maps they
//! induce on cohomology classes.

use std::sync::Arc;

use crate::cochain::{Cochain, CochainSpace};
use crate::cohomology::{CohomologyClass, CohomologyResult};
use crate::error::{Error, Result};
use crate::group::{conjugate, CosetTable, GroupError, Subgroup};
use crate::zlinalg::Int;

/// `res(σ)(h₁,…,hₙ) = σ(h₁,…,hₙ)` for `σ` over a subgroup containing `k`.
pub fn restrict_cochain(sigma: &Cochain, k: &Subgroup) -> Result<Cochain> {
    let space = sigma.space();
    if !k.is_subgroup_of(space.carrier()) {
        return Err(GroupError::SubgroupNotContained.into());
    }
    let target = space.with_carrier(k.clone());
    Ok(Cochain::from_fn(target, |t| sigma.value(t).to_vec()))
}

/// `c_g(σ)(ᵍh₁,…,ᵍhₙ) = g·σ(h₁,…,hₙ)`, a cochain over `ᵍH`.
pub fn conjugate_cochain(sigma: &Cochain, g: usize) -> Cochain {
    let space = sigma.space();
    let group = space.group().clone();
    let module = space.module().clone();
    let target = space.with_carrier(conjugate(&group, g, space.carrier()));
    let gi = group.inv(g);
    let mut src = Vec::with_capacity(space.degree());
    Cochain::from_fn(target, |t| {
        src.clear();
        src.extend(t.iter().map(|&x| group.conj(gi, x)));
        module.act(g, sigma.value(&src))
    })
}

/// Transfer from the carrier `H` of `σ` up to `parent`, using the
/// representatives of `table` (left cosets of `H` in `parent`):
///
/// `tr(σ)(g₁,…,gₙ) = Σ_c r₁·σ(r₁⁻¹g₁r₂, …, rₙ⁻¹gₙc̄)`, where `rᵢ` represents
/// the coset of `gᵢ⋯gₙ·c̄`.
pub fn transfer_cochain(sigma: &Cochain, parent: &Subgroup, table: &CosetTable) -> Result<Cochain> {
    let space = sigma.space();
    let h = space.carrier();
    if !h.is_subgroup_of(parent) {
        return Err(GroupError::SubgroupNotContained.into());
    }
    if table.len() * h.order() != parent.order() || table.cosets()[0] != h.members() {
        return Err(GroupError::InvalidRepresentatives("coset table does not match the subgroups".into()).into());
    }
    let group = space.group().clone();
    let module = space.module().clone();
    let n = space.degree();
    let k = module.rank();
    let target = space.with_carrier(parent.clone());
    let mut err = None;
    let mut reps = vec![0usize; n + 1];
    let mut args = vec![0usize; n];
    let out = Cochain::from_fn(target, |t| {
        let mut acc = vec![Int::ZERO; k];
        for &c in table.reps() {
            // reps[i] represents the coset of (g_{i+1}⋯gₙ)·c̄, reps[n] = c̄
            reps[n] = c;
            let mut x = c;
            for i in (0..n).rev() {
                x = group.mul(t[i], x);
                reps[i] = table.rep_of(x);
            }
            for i in 0..n {
                let a = group.mul(group.mul(group.inv(reps[i]), t[i]), reps[i + 1]);
                if !h.contains(a) {
                    err.get_or_insert(Error::ArgumentNotInSubgroup(a));
                    return acc;
                }
                args[i] = a;
            }
            for (s, v) in acc.iter_mut().zip(module.act(reps[0], sigma.value(&args))) {
                *s += &v;
            }
        }
        acc
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// One of the three cochain maps, with its parameters.
#[derive(Clone, Debug)]
pub enum CohMap {
    /// Restriction to a subgroup of the source carrier.
    Restriction(Subgroup),
    /// Conjugation by an element of the ambient group.
    Conjugation(usize),
    /// Transfer to an overgroup of the source carrier.
    Transfer { to: Subgroup, table: CosetTable },
}

impl CohMap {
    pub fn transfer(space: &CochainSpace, to: &Subgroup) -> Result<CohMap> {
        let table = CosetTable::new(space.group(), to, space.carrier())?;
        Ok(CohMap::Transfer { to: to.clone(), table })
    }

    pub fn apply(&self, sigma: &Cochain) -> Result<Cochain> {
        match self {
            CohMap::Restriction(k) => restrict_cochain(sigma, k),
            CohMap::Conjugation(g) => Ok(conjugate_cochain(sigma, *g)),
            CohMap::Transfer { to, table } => transfer_cochain(sigma, to, table),
        }
    }

    /// Carrier of the image of a cochain over `source`.
    pub fn target_carrier(&self, space: &CochainSpace) -> Subgroup {
        match self {
            CohMap::Restriction(k) => k.clone(),
            CohMap::Conjugation(g) => conjugate(space.group(), *g, space.carrier()),
            CohMap::Transfer { to, .. } => to.clone(),
        }
    }
}

/// Pushes a class through `map`, landing in `target`.
pub fn induced_class_map(map: &CohMap, class: &CohomologyClass, target: &Arc<CohomologyResult>) -> Result<CohomologyClass> {
    if !class.result.is_cocycle(&class.representative) {
        return Err(Error::NotACocycle);
    }
    let image = map.apply(&class.representative)?;
    if !target.is_cocycle(&image) {
        return Err(Error::NotACocycle);
    }
    Ok(CohomologyClass { result: target.clone(), representative: image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::is_symmetric;
    use crate::gmodule::GModule;
    use crate::group::Group;

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn space(g: &Arc<Group>, a: &Arc<GModule>, n: usize) -> Arc<CochainSpace> {
        CochainSpace::over_group(g.clone(), a.clone(), n)
    }

    #[test]
    fn restriction_to_whole_group_is_identity() {
        let g = Arc::new(Group::cyclic(3));
        let a = Arc::new(GModule::trivial(&g, &[5]));
        let s = space(&g, &a, 2);
        let sigma = Cochain::from_fn(s.clone(), |t| vec![Int::from((t[0] * 3 + t[1]) as i64)]);
        assert_eq!(restrict_cochain(&sigma, s.carrier()).unwrap(), sigma);
        let triv = Subgroup::trivial(&g);
        let r = restrict_cochain(&sigma, &triv).unwrap();
        assert_eq!(r.values(), &ints(&[0])[..]);
    }

    #[test]
    fn conjugation_by_identity_is_identity() {
        let g = Arc::new(Group::symmetric(3));
        let a = Arc::new(GModule::trivial(&g, &[3]));
        let sigma = Cochain::from_fn(space(&g, &a, 1), |t| vec![Int::from(t[0] as i64)]);
        assert_eq!(conjugate_cochain(&sigma, 0), sigma);
    }

    #[test]
    fn degree_zero_transfer_is_the_norm() {
        let g = Arc::new(Group::cyclic(2));
        let a = Arc::new(GModule::trivial(&g, &[2]));
        let triv = Subgroup::trivial(&g);
        let s = space(&g, &a, 0).with_carrier(triv);
        let sigma = Cochain::from_vector(s.clone(), ints(&[1]));
        let map = CohMap::transfer(&s, &Subgroup::whole(&g)).unwrap();
        assert!(map.apply(&sigma).unwrap().is_zero());
        let a3 = Arc::new(GModule::trivial(&g, &[3]));
        let s3 = space(&g, &a3, 0).with_carrier(Subgroup::trivial(&g));
        let t = map.apply(&Cochain::from_vector(s3, ints(&[1]))).unwrap();
        assert_eq!(t.values(), &ints(&[2])[..]);
    }

    #[test]
    fn transfer_over_the_whole_group_is_identity() {
        let g = Arc::new(Group::dihedral(4));
        let a = Arc::new(GModule::trivial(&g, &[0]));
        let s = space(&g, &a, 2);
        let sigma = Cochain::from_fn(s.clone(), |t| vec![Int::from((t[0] * 7 + t[1]) as i64)]);
        let map = CohMap::transfer(&s, s.carrier()).unwrap();
        assert_eq!(map.apply(&sigma).unwrap(), sigma);
    }

    #[test]
    fn maps_keep_symmetric_cochains_symmetric() {
        let g = Arc::new(Group::symmetric(3));
        let a = Arc::new(GModule::trivial(&g, &[0]));
        let h = Subgroup::generated(&g, &[1]);
        let s = space(&g, &a, 2).with_carrier(h.clone());
        let pre = crate::cochain::symmetric_preimage(&s).unwrap();
        let whole = Subgroup::whole(&g);
        let map = CohMap::transfer(&s, &whole).unwrap();
        for b in pre.basis() {
            let sigma = Cochain::from_vector(s.clone(), b.clone());
            assert!(is_symmetric(&sigma));
            assert!(is_symmetric(&map.apply(&sigma).unwrap()));
            for x in g.elements() {
                assert!(is_symmetric(&conjugate_cochain(&sigma, x)));
            }
        }
    }
}
