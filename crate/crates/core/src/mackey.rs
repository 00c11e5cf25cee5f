//! Mechanical checks of the Mackey functor axioms for `H ↦ HSⁿ(H, A)`, of
//! the low-degree descriptions of symmetric cocycles and boundaries, and a
//! probe for the axioms whose proof needs `i` to be injective.
//!
//! Every axiom is an identity between linear maps, so it is checked on the
//! generators of the domain only.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::cochain::{differential_lift, normalized_lattice, vanishing_lattice, Cochain, CochainSpace, Limits};
use crate::cohomology::{cohomology_of, natural_map_between, CohomologyResult, Kind};
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::{conjugate, double_coset_reps, enumerate_subgroups, Group, Subgroup};
use crate::maps::{conjugate_cochain, restrict_cochain, CohMap};
use crate::zlinalg::{Int, Lattice};

/// Groups up to this order are quantified over exhaustively.
pub const EXHAUSTIVE_ORDER: usize = 12;
/// Number of sampled elements for larger groups.
pub const SAMPLE_SIZE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    AxiomIRestriction,
    AxiomITransfer,
    AxiomII,
    AxiomIII,
    AxiomIV,
    AxiomVRestriction,
    AxiomVTransfer,
    AxiomVI,
    Hs1,
    StarN,
    Star2,
    IInjective,
    Corollary,
}

impl Check {
    pub const AXIOMS: [Check; 8] = [
        Check::AxiomIRestriction,
        Check::AxiomITransfer,
        Check::AxiomII,
        Check::AxiomIII,
        Check::AxiomIV,
        Check::AxiomVRestriction,
        Check::AxiomVTransfer,
        Check::AxiomVI,
    ];

    pub const SECTION2: [Check; 5] = [Check::Hs1, Check::StarN, Check::Star2, Check::IInjective, Check::Corollary];

    /// Axioms whose proof uses injectivity of `HSⁿ(H, A) → Hⁿ(H, A)`.
    pub const CONDITIONAL: [Check; 3] = [Check::AxiomITransfer, Check::AxiomIV, Check::AxiomVI];

    pub fn id(self) -> &'static str {
        match self {
            Check::AxiomIRestriction => "axiom-i-restriction",
            Check::AxiomITransfer => "axiom-i-transfer",
            Check::AxiomII => "axiom-ii",
            Check::AxiomIII => "axiom-iii",
            Check::AxiomIV => "axiom-iv",
            Check::AxiomVRestriction => "axiom-v-restriction",
            Check::AxiomVTransfer => "axiom-v-transfer",
            Check::AxiomVI => "axiom-vi",
            Check::Hs1 => "HS1",
            Check::StarN => "star-n",
            Check::Star2 => "star-2",
            Check::IInjective => "i-injective",
            Check::Corollary => "corollary",
        }
    }

    pub fn from_id(s: &str) -> Option<Check> {
        Check::AXIOMS.iter().chain(&Check::SECTION2).copied().find(|c| c.id() == s)
    }

    pub fn needs_injectivity(self) -> bool {
        Check::CONDITIONAL.contains(&self)
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub group: String,
    pub module: String,
    pub degree: usize,
}

/// Everything needed to re-evaluate a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Human-readable description of the quantified parameters.
    pub case: String,
    /// Carrier (as ambient element indices) of the space both sides live in.
    pub carrier: Vec<usize>,
    pub degree: usize,
    /// Index of the generator of the domain, when the check is an axiom.
    pub generator: Option<usize>,
    pub left: Vec<Int>,
    pub right: Vec<Int>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub check: Check,
    pub instance: Instance,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Number of comparisons carried out.
    pub cases: u64,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    fn new(check: Check, instance: &Instance) -> Self {
        AxiomReport { check, instance: instance.clone(), verdict: Verdict::Holds, reason: None, cases: 0, witness: None }
    }

    fn skipped(check: Check, instance: &Instance, reason: impl Into<String>) -> Self {
        let mut r = AxiomReport::new(check, instance);
        r.verdict = Verdict::Skipped;
        r.reason = Some(reason.into());
        r
    }

    fn fail(&mut self, w: Witness) {
        self.verdict = Verdict::Fails;
        self.witness = Some(w);
    }
}

/// One instance, with `HSⁿ` and `Hⁿ` cached per subgroup.
pub struct Context {
    instance: Instance,
    group: Arc<Group>,
    module: Arc<GModule>,
    limits: Limits,
    seed: u64,
    subgroups: Vec<Subgroup>,
    cache: Mutex<HashMap<(Subgroup, usize, Kind), Arc<CohomologyResult>>>,
}

impl Context {
    pub fn new(instance: Instance, group: Arc<Group>, module: Arc<GModule>, limits: Limits, seed: u64) -> Context {
        let subgroups = enumerate_subgroups(&group);
        Context { instance, group, module, limits, seed, subgroups, cache: Mutex::new(HashMap::new()) }
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn module(&self) -> &Arc<GModule> {
        &self.module
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn degree(&self) -> usize {
        self.instance.degree
    }

    fn space(&self, carrier: &Subgroup, degree: usize) -> Arc<CochainSpace> {
        CochainSpace::new(self.group.clone(), carrier.clone(), self.module.clone(), degree)
    }

    /// Cohomology over `carrier` in any degree, cached.
    pub fn cohomology_in(&self, carrier: &Subgroup, degree: usize, kind: Kind) -> Result<Arc<CohomologyResult>> {
        let key = (carrier.clone(), degree, kind);
        if let Some(r) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let r = Arc::new(cohomology_of(&self.space(carrier, degree), kind, &self.limits)?);
        self.cache.lock().expect("cache lock").insert(key, r.clone());
        Ok(r)
    }

    /// `HSⁿ(H, A)` in the instance degree.
    pub fn hs(&self, carrier: &Subgroup) -> Result<Arc<CohomologyResult>> {
        self.cohomology_in(carrier, self.degree(), Kind::Symmetric)
    }

    pub fn h(&self, carrier: &Subgroup) -> Result<Arc<CohomologyResult>> {
        self.cohomology_in(carrier, self.degree(), Kind::Ordinary)
    }

    /// Elements conjugated by: all of `within` when the group is small,
    /// otherwise a seeded sample.
    fn elements(&self, within: &[usize], salt: u64) -> Vec<usize> {
        if self.group.order() <= EXHAUSTIVE_ORDER || within.len() <= SAMPLE_SIZE {
            return within.to_vec();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut out: Vec<usize> = within.choose_multiple(&mut rng, SAMPLE_SIZE).copied().collect();
        out.sort_unstable();
        out
    }

    fn all_elements(&self, salt: u64) -> Vec<usize> {
        let all: Vec<usize> = self.group.elements().collect();
        self.elements(&all, salt)
    }

    /// First subgroup on which `i` fails to be injective, with its kernel.
    pub fn injectivity_failure(&self) -> Result<Option<(Subgroup, Vec<Int>)>> {
        for h in &self.subgroups {
            let map = natural_map_between(&*self.h(h)?, &*self.hs(h)?)?;
            if !map.injective() {
                return Ok(Some((h.clone(), map.kernel_factors())));
            }
        }
        Ok(None)
    }

    fn witness_for(&self, case: String, target: &CohomologyResult, gen: usize, left: &Cochain, right: &Cochain) -> Witness {
        Witness {
            case,
            carrier: target.space().carrier().members().to_vec(),
            degree: target.degree(),
            generator: Some(gen),
            left: left.values().to_vec(),
            right: right.values().to_vec(),
        }
    }

    /// Re-evaluates a stored witness; `true` means the two sides really are
    /// different classes.
    pub fn replay(&self, w: &Witness) -> Result<bool> {
        let carrier = Subgroup::new(&self.group, &w.carrier)?;
        let target = self.cohomology_in(&carrier, w.degree, Kind::Symmetric)?;
        let l = Cochain::from_vector(target.space().clone(), w.left.clone());
        let r = Cochain::from_vector(target.space().clone(), w.right.clone());
        Ok(!target.class_equal(&l, &r)?)
    }

    /// Checks one axiom. Axioms that need injectivity of `i` are skipped
    /// (with the reason) when it fails, unless `force` is set.
    pub fn verify_axiom(&self, check: Check, force: bool) -> Result<AxiomReport> {
        if !Check::AXIOMS.contains(&check) {
            return Ok(AxiomReport::skipped(check, &self.instance, "not an axiom"));
        }
        if check.needs_injectivity() && !force {
            if let Some((h, k)) = self.injectivity_failure()? {
                let reason = format!("ker(i) = {} over subgroup {:?}", format_factors(&k), h.members());
                return Ok(AxiomReport::skipped(check, &self.instance, reason));
            }
        }
        let mut rep = AxiomReport::new(check, &self.instance);
        let subs = &self.subgroups;
        // compares both sides on every generator, stopping at the first failure
        let cmp = |rep: &mut AxiomReport,
                   case: &dyn Fn() -> String,
                   domain: &CohomologyResult,
                   target: &CohomologyResult,
                   f: &dyn Fn(&Cochain) -> Result<(Cochain, Cochain)>|
         -> Result<bool> {
            for (i, sigma) in domain.generators().iter().enumerate() {
                let (l, r) = f(sigma)?;
                rep.cases += 1;
                if !target.class_equal(&l, &r)? {
                    rep.fail(self.witness_for(case(), target, i, &l, &r));
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let tr = |s: &Cochain, to: &Subgroup| CohMap::transfer(s.space(), to)?.apply(s);
        match check {
            Check::AxiomIRestriction | Check::AxiomITransfer => {
                for h in subs {
                    for k in subs.iter().filter(|k| k.is_subgroup_of(h)) {
                        for l in subs.iter().filter(|l| l.is_subgroup_of(k)) {
                            let case = || format!("L={:?} K={:?} H={:?}", l.members(), k.members(), h.members());
                            let ok = if check == Check::AxiomIRestriction {
                                cmp(&mut rep, &case, &*self.hs(h)?, &*self.hs(l)?, &|s| {
                                    Ok((restrict_cochain(&restrict_cochain(s, k)?, l)?, restrict_cochain(s, l)?))
                                })?
                            } else {
                                cmp(&mut rep, &case, &*self.hs(l)?, &*self.hs(h)?, &|s| Ok((tr(&tr(s, k)?, h)?, tr(s, h)?)))?
                            };
                            if !ok {
                                return Ok(rep);
                            }
                        }
                    }
                }
            }
            Check::AxiomII => {
                for h in subs {
                    let hs = self.hs(h)?;
                    let case = || format!("H={:?}", h.members());
                    if !cmp(&mut rep, &case, &hs, &hs, &|s| Ok((restrict_cochain(s, h)?, s.clone())))?
                        || !cmp(&mut rep, &case, &hs, &hs, &|s| Ok((tr(s, h)?, s.clone())))?
                    {
                        return Ok(rep);
                    }
                }
            }
            Check::AxiomIII => {
                let elems = self.all_elements(3);
                for h in subs {
                    let dom = self.hs(h)?;
                    for &g in &elems {
                        for &x in &elems {
                            let gx = self.group.mul(g, x);
                            let target = self.hs(&conjugate(&self.group, gx, h))?;
                            let case = || format!("g={g} h={x} H={:?}", h.members());
                            if !cmp(&mut rep, &case, &dom, &target, &|s| {
                                Ok((conjugate_cochain(s, gx), conjugate_cochain(&conjugate_cochain(s, x), g)))
                            })? {
                                return Ok(rep);
                            }
                        }
                    }
                }
            }
            Check::AxiomIV => {
                for h in subs {
                    let dom = self.hs(h)?;
                    for x in self.elements(h.members(), 4) {
                        let case = || format!("h={x} H={:?}", h.members());
                        if !cmp(&mut rep, &case, &dom, &dom, &|s| Ok((conjugate_cochain(s, x), s.clone())))? {
                            return Ok(rep);
                        }
                    }
                }
            }
            Check::AxiomVRestriction | Check::AxiomVTransfer => {
                let elems = self.all_elements(5);
                for h in subs {
                    for k in subs.iter().filter(|k| k.is_subgroup_of(h)) {
                        for &g in &elems {
                            let gh = conjugate(&self.group, g, h);
                            let gk = conjugate(&self.group, g, k);
                            let case = || format!("g={g} K={:?} H={:?}", k.members(), h.members());
                            let ok = if check == Check::AxiomVRestriction {
                                cmp(&mut rep, &case, &*self.hs(h)?, &*self.hs(&gk)?, &|s| {
                                    Ok((
                                        conjugate_cochain(&restrict_cochain(s, k)?, g),
                                        restrict_cochain(&conjugate_cochain(s, g), &gk)?,
                                    ))
                                })?
                            } else {
                                cmp(&mut rep, &case, &*self.hs(k)?, &*self.hs(&gh)?, &|s| {
                                    Ok((conjugate_cochain(&tr(s, h)?, g), tr(&conjugate_cochain(s, g), &gh)?))
                                })?
                            };
                            if !ok {
                                return Ok(rep);
                            }
                        }
                    }
                }
            }
            Check::AxiomVI => {
                for h in subs {
                    let below: Vec<&Subgroup> = subs.iter().filter(|x| x.is_subgroup_of(h)).collect();
                    for &l in &below {
                        for &k in &below {
                            let reps = double_coset_reps(&self.group, l, h, k)?;
                            let case = || format!("L={:?} K={:?} H={:?} reps={reps:?}", l.members(), k.members(), h.members());
                            let target = self.hs(l)?;
                            let ok = cmp(&mut rep, &case, &*self.hs(k)?, &target, &|s| {
                                let left = restrict_cochain(&tr(s, h)?, l)?;
                                let mut right = Cochain::zero(target.space().clone());
                                for &x in &reps {
                                    let meet = l.intersect(&self.group, &conjugate(&self.group, x, k));
                                    let term = tr(&restrict_cochain(&conjugate_cochain(s, x), &meet)?, l)?;
                                    right = right.add(&term)?;
                                }
                                Ok((left, right))
                            })?;
                            if !ok {
                                return Ok(rep);
                            }
                        }
                    }
                }
            }
            _ => unreachable!("filtered above"),
        }
        Ok(rep)
    }

    /// All axioms in order.
    pub fn verify_axioms(&self) -> Result<Vec<AxiomReport>> {
        Check::AXIOMS.iter().map(|&c| self.verify_axiom(c, false)).collect()
    }

    /// The low-degree checks: `HS¹ = H¹`, the descriptions of `ZSⁿ` and
    /// `BSⁿ` under `₂A = 0`, the degree-2 special case, injectivity of `i`,
    /// and the divisibility route to injectivity.
    pub fn verify_section2(&self) -> Result<Vec<AxiomReport>> {
        Check::SECTION2.iter().map(|&c| self.section2_check(c)).collect()
    }

    fn lattice_witness(&self, case: &str, space: &CochainSpace, left: &Lattice, right: &Lattice) -> Option<Witness> {
        let (v, in_left) = match left.basis().iter().find(|b| !right.contains(b)) {
            Some(v) => (v.clone(), true),
            None => (right.basis().iter().find(|b| !left.contains(b))?.clone(), false),
        };
        let zero = vec![Int::ZERO; v.len()];
        let (l, r) = if in_left { (v, zero) } else { (zero, v) };
        Some(Witness {
            case: case.to_string(),
            carrier: space.carrier().members().to_vec(),
            degree: space.degree(),
            generator: None,
            left: l,
            right: r,
        })
    }

    pub fn section2_check(&self, check: Check) -> Result<AxiomReport> {
        let whole = Subgroup::whole(&self.group);
        let n = self.degree();
        let inst = &self.instance;
        let mut rep = AxiomReport::new(check, inst);
        let no_two_torsion = self.module.p_torsion_trivial(2);
        match check {
            Check::Hs1 => {
                let h = self.cohomology_in(&whole, 1, Kind::Ordinary)?;
                let hs = self.cohomology_in(&whole, 1, Kind::Symmetric)?;
                let map = natural_map_between(&h, &hs)?;
                rep.cases = 1;
                if h.factors() != hs.factors() || !map.injective() || !map.surjective {
                    rep.verdict = Verdict::Fails;
                    rep.reason = Some(format!(
                        "H^1 = {}, HS^1 = {}, ker(i) = {}, onto = {}",
                        format_factors(&h.factors()),
                        format_factors(&hs.factors()),
                        format_factors(&map.kernel_factors()),
                        map.surjective
                    ));
                }
            }
            Check::StarN => {
                if !no_two_torsion {
                    return Ok(AxiomReport::skipped(check, inst, "2-torsion present"));
                }
                if n < 2 {
                    return Ok(AxiomReport::skipped(check, inst, "(*) conditions are vacuous below degree 2"));
                }
                let hs = self.cohomology_in(&whole, n, Kind::Symmetric)?;
                let h = self.cohomology_in(&whole, n, Kind::Ordinary)?;
                let space = hs.space();
                let normal_n = normalized_lattice(space, true);
                let zs = h.cocycles().intersect(&normal_n);
                rep.cases += 1;
                if let Some(w) = self.lattice_witness("ZS^n vs normalized (*) cocycles", space, hs.cocycles(), &zs) {
                    rep.fail(w);
                    return Ok(rep);
                }
                let below = space.with_degree(n - 1);
                let d = differential_lift(&below);
                let pre = normalized_lattice(&below, true);
                let imgs = pre.basis().iter().map(|b| d.mul_vec(b)).collect::<Result<Vec<_>, _>>()?;
                let bs = Lattice::from_generators(space.dim(), imgs, Some(&space.moduli())).intersect(&normal_n);
                rep.cases += 1;
                if let Some(w) = self.lattice_witness("BS^n vs normalized (*) boundaries", space, hs.boundaries(), &bs) {
                    rep.fail(w);
                }
            }
            Check::Star2 => {
                if !no_two_torsion {
                    return Ok(AxiomReport::skipped(check, inst, "2-torsion present"));
                }
                let hs = self.cohomology_in(&whole, 2, Kind::Symmetric)?;
                let h = self.cohomology_in(&whole, 2, Kind::Ordinary)?;
                let g = &self.group;
                let vanish = vanishing_lattice(hs.space(), |t| t[1] == g.inv(t[0]));
                let zs = h.cocycles().intersect(&vanish);
                rep.cases = 1;
                if let Some(w) = self.lattice_witness("ZS^2 vs cocycles with s(g, g^-1) = 0", hs.space(), hs.cocycles(), &zs) {
                    rep.fail(w);
                }
            }
            Check::IInjective => {
                let map = natural_map_between(&*self.h(&whole)?, &*self.hs(&whole)?)?;
                rep.cases = 1;
                if !map.injective() {
                    let reason = format!("ker(i) = {}", format_factors(&map.kernel_factors()));
                    if n <= 2 {
                        rep.verdict = Verdict::Fails;
                        rep.reason = Some(reason);
                    } else {
                        return Ok(AxiomReport::skipped(check, inst, format!("{reason}; no injectivity claim in degree {n}")));
                    }
                }
            }
            Check::Corollary => {
                if !self.module.corollary_hypothesis(n as u64) {
                    return Ok(AxiomReport::skipped(check, inst, "divisibility hypothesis fails"));
                }
                rep.cases = self.subgroups.len() as u64;
                if let Some((h, k)) = self.injectivity_failure()? {
                    rep.verdict = Verdict::Fails;
                    rep.reason = Some(format!("ker(i) = {} over subgroup {:?}", format_factors(&k), h.members()));
                }
            }
            _ => return Ok(AxiomReport::skipped(check, inst, "not a section 2 check")),
        }
        Ok(rep)
    }

    /// Runs the injectivity-dependent axioms on an instance where `i` is not
    /// injective. `None` when the hypothesis holds and there is nothing to
    /// probe.
    pub fn counterexample_search(&self) -> Result<Option<Vec<AxiomReport>>> {
        if self.injectivity_failure()?.is_none() {
            return Ok(None);
        }
        Check::CONDITIONAL.iter().map(|&c| self.verify_axiom(c, true)).collect::<Result<Vec<_>>>().map(Some)
    }
}

/// `Z/2 + Z/4 + Z`, or `0` for the trivial group.
pub fn format_factors(factors: &[Int]) -> String {
    if factors.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, d) in factors.iter().enumerate() {
        if i > 0 {
            s.push_str(" + ");
        }
        if d.is_zero() {
            s.push('Z');
        } else {
            let _ = write!(s, "Z/{d}");
        }
    }
    s
}

/// Error in a probe is reported, never fatal to other instances.
pub fn describe_error(e: &Error) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::IntMatrix;

    fn ctx(g: Group, a: GModule, n: usize) -> Context {
        let inst = Instance { group: "G".into(), module: "A".into(), degree: n };
        Context::new(inst, Arc::new(g), Arc::new(a), Limits::default(), 7)
    }

    #[test]
    fn check_ids_round_trip() {
        for c in Check::AXIOMS.iter().chain(&Check::SECTION2) {
            assert_eq!(Check::from_id(c.id()), Some(*c));
        }
        assert_eq!(Check::from_id("axiom-vii"), None);
    }

    #[test]
    fn axioms_hold_for_s3_with_z5() {
        let g = Group::symmetric(3);
        let a = GModule::trivial(&g, &[5]);
        let c = ctx(g, a, 2);
        for r in c.verify_axioms().unwrap() {
            assert_eq!(r.verdict, Verdict::Holds, "{:?}", r);
        }
    }

    #[test]
    fn axioms_hold_for_z4_with_z2_in_degree_one() {
        let g = Group::cyclic(4);
        let a = GModule::trivial(&g, &[2]);
        let c = ctx(g, a, 1);
        for r in c.verify_axioms().unwrap() {
            assert_eq!(r.verdict, Verdict::Holds, "{:?}", r);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn section2_on_z3_with_z3() {
        let g = Group::cyclic(3);
        let a = GModule::trivial(&g, &[3]);
        let c = ctx(g, a, 2);
        for r in c.verify_section2().unwrap() {
            assert_ne!(r.verdict, Verdict::Fails, "{:?}", r);
        }
    }

    #[test]
    fn two_torsion_skips_star_checks() {
        let g = Group::cyclic(2);
        let a = GModule::trivial(&g, &[2]);
        let c = ctx(g, a, 2);
        let r = c.section2_check(Check::StarN).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(r.reason.as_deref(), Some("2-torsion present"));
    }

    #[test]
    fn a_broken_identity_yields_a_replayable_witness() {
        let g = Group::cyclic(2);
        let a = GModule::trivial(&g, &[2]);
        let c = ctx(g, a, 1);
        let hs = c.hs(&Subgroup::whole(c.group())).unwrap();
        assert_eq!(hs.factors(), vec![Int::from(2)]);
        let gen = &hs.generators()[0];
        let w = c.witness_for("gen vs 0".into(), &hs, 0, gen, &Cochain::zero(hs.space().clone()));
        assert!(c.replay(&w).unwrap());
        let same = c.witness_for("gen vs gen".into(), &hs, 0, gen, gen);
        assert!(!c.replay(&same).unwrap());
    }

    #[test]
    fn sign_module_search_has_nothing_to_probe_in_degree_one() {
        let g = Group::cyclic(2);
        let a = GModule::from_generators(&g, vec![Int::ZERO], &[(1, IntMatrix::from_rows(&[[-1]]))]).unwrap();
        let c = ctx(g, a, 1);
        assert!(c.counterexample_search().unwrap().is_none());
    }

    #[test]
    fn factor_formatting() {
        assert_eq!(format_factors(&[]), "0");
        assert_eq!(format_factors(&[Int::from(2), Int::ZERO]), "Z/2 + Z");
    }
}
