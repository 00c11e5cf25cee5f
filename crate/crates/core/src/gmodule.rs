//! Coefficient modules: `A = ⊕ᵢ Z/dᵢ` (with `dᵢ = 0` meaning a free summand)
//! together with a `G`-action by integer matrices.

use std::collections::VecDeque;

use thiserror::Error;

use crate::group::Group;
use crate::zlinalg::{smith_normal_form, Int, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("action matrix of element {g} has shape {shape:?}, expected {k}x{k}")]
    ActionShape { g: usize, shape: (usize, usize), k: usize },
    #[error("negative relation {0}")]
    NegativeRelation(Int),
    #[error("matrix of element {g} does not induce an endomorphism (entry {i},{j})")]
    IllDefinedAction { g: usize, i: usize, j: usize },
    #[error("identity element acts nontrivially")]
    IdentityActsNontrivially,
    #[error("action is not a homomorphism: M({g})M({h}) != M({g}*{h})")]
    NotHomomorphic { g: usize, h: usize },
    #[error("action generators do not generate the group (element {0} unreachable)")]
    IncompleteAction(usize),
    #[error("generator index {0} is not a group element")]
    UnknownGenerator(usize),
}

/// A finitely generated abelian group with a validated `G`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    relations: Vec<Int>,
    action: Vec<IntMatrix>,
}

fn congruent_columns(a: &IntMatrix, b: &IntMatrix, relations: &[Int]) -> bool {
    (0..a.cols()).all(|j| (0..a.rows()).all(|i| (a.get(i, j) - b.get(i, j)).is_multiple_of(&relations[i])))
}

impl GModule {
    /// Validates relations and one action matrix per group element.
    pub fn new(group: &Group, relations: Vec<Int>, action: Vec<IntMatrix>) -> Result<GModule, ModuleError> {
        let k = relations.len();
        if let Some(d) = relations.iter().find(|d| d.is_negative()) {
            return Err(ModuleError::NegativeRelation(d.clone()));
        }
        if action.len() != group.order() {
            return Err(ModuleError::ActionCount { expected: group.order(), got: action.len() });
        }
        for (g, m) in action.iter().enumerate() {
            if m.rows() != k || m.cols() != k {
                return Err(ModuleError::ActionShape { g, shape: (m.rows(), m.cols()), k });
            }
            for i in 0..k {
                for j in 0..k {
                    // d_i | d_j · M[i][j], where only 0 is a multiple of 0
                    if !(&relations[j] * m.get(i, j)).is_multiple_of(&relations[i]) {
                        return Err(ModuleError::IllDefinedAction { g, i, j });
                    }
                }
            }
        }
        if !congruent_columns(&action[0], &IntMatrix::identity(k), &relations) {
            return Err(ModuleError::IdentityActsNontrivially);
        }
        for g in group.elements() {
            for h in group.elements() {
                let prod = action[g].mul(&action[h]).expect("square matrices");
                if !congruent_columns(&prod, &action[group.mul(g, h)], &relations) {
                    return Err(ModuleError::NotHomomorphic { g, h });
                }
            }
        }
        let mut module = GModule { relations, action };
        for m in module.action.iter_mut() {
            for j in 0..k {
                let col = m.col_mut(j);
                for (x, d) in col.iter_mut().zip(&module.relations) {
                    if d.is_positive() {
                        *x = x.mod_floor_abs(d);
                    }
                }
            }
        }
        Ok(module)
    }

    /// Trivial action on `⊕ Z/dᵢ`.
    pub fn trivial(group: &Group, relations: &[i64]) -> GModule {
        let rel: Vec<Int> = relations.iter().map(|&d| Int::from(d)).collect();
        let k = rel.len();
        GModule::new(group, rel, vec![IntMatrix::identity(k); group.order()]).expect("trivial action is valid")
    }

    /// Action given on a generating set and completed by products.
    pub fn from_generators(group: &Group, relations: Vec<Int>, gens: &[(usize, IntMatrix)]) -> Result<GModule, ModuleError> {
        let k = relations.len();
        for (g, m) in gens {
            if *g >= group.order() {
                return Err(ModuleError::UnknownGenerator(*g));
            }
            if m.rows() != k || m.cols() != k {
                return Err(ModuleError::ActionShape { g: *g, shape: (m.rows(), m.cols()), k });
            }
        }
        let mut action: Vec<Option<IntMatrix>> = vec![None; group.order()];
        action[0] = Some(IntMatrix::identity(k));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, ms) in gens {
                let y = group.mul(x, *s);
                let my = action[x].as_ref().expect("visited").mul(ms).expect("square");
                match &action[y] {
                    None => {
                        action[y] = Some(my);
                        queue.push_back(y);
                    }
                    Some(existing) => {
                        if !congruent_columns(existing, &my, &relations) {
                            return Err(ModuleError::NotHomomorphic { g: x, h: *s });
                        }
                    }
                }
            }
        }
        let action = action
            .into_iter()
            .enumerate()
            .map(|(g, m)| m.ok_or(ModuleError::IncompleteAction(g)))
            .collect::<Result<Vec<_>, _>>()?;
        GModule::new(group, relations, action)
    }

    /// Module presented as `Z^k / span(relation vectors)`, with the action
    /// given on a generating set in the original coordinates. The
    /// presentation is brought to diagonal form first.
    pub fn from_presentation(
        group: &Group,
        k: usize,
        relation_vectors: &[Vec<Int>],
        gens: &[(usize, IntMatrix)],
    ) -> Result<GModule, ModuleError> {
        let r = IntMatrix::from_columns(k, relation_vectors.to_vec());
        let snf = smith_normal_form(&r);
        let mut diag = snf.diag.clone();
        diag.resize(k, Int::ZERO);
        let kept: Vec<usize> = (0..k).filter(|&i| !diag[i].is_one()).collect();
        let relations: Vec<Int> = kept.iter().map(|&i| diag[i].clone()).collect();
        // new coordinates y = U x, so M ↦ U M U⁻¹ restricted to kept rows/cols
        let mut new_gens = Vec::with_capacity(gens.len());
        for (g, m) in gens {
            if m.rows() != k || m.cols() != k {
                return Err(ModuleError::ActionShape { g: *g, shape: (m.rows(), m.cols()), k });
            }
            let full = snf.u.mul(m).and_then(|x| x.mul(&snf.u_inv)).expect("square");
            let mut sub = IntMatrix::zeros(kept.len(), kept.len());
            for (a, &i) in kept.iter().enumerate() {
                for (b, &j) in kept.iter().enumerate() {
                    sub.set(a, b, full.get(i, j).clone());
                }
            }
            new_gens.push((*g, sub));
        }
        GModule::from_generators(group, relations, &new_gens)
    }

    /// Number of cyclic summands `k`.
    #[inline]
    pub fn rank(&self) -> usize {
        self.relations.len()
    }

    pub fn relations(&self) -> &[Int] {
        &self.relations
    }

    pub fn action_matrix(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = IntMatrix::identity(self.rank());
        self.action.iter().all(|m| congruent_columns(m, &id, &self.relations))
    }

    /// Canonical coordinates: coordinate `i` in `[0, dᵢ)` when `dᵢ > 0`.
    pub fn reduce(&self, a: &mut [Int]) {
        for (x, d) in a.iter_mut().zip(&self.relations) {
            if d.is_positive() {
                *x = x.mod_floor_abs(d);
            }
        }
    }

    /// `g · a`, canonically reduced.
    pub fn act(&self, g: usize, a: &[Int]) -> Vec<Int> {
        let mut out = self.action[g].mul_vec(a).expect("element has module rank");
        self.reduce(&mut out);
        out
    }

    pub fn is_finite(&self) -> bool {
        self.relations.iter().all(Int::is_positive)
    }

    /// `|A|` when finite.
    pub fn cardinality(&self) -> Option<Int> {
        self.is_finite().then(|| self.relations.iter().fold(Int::ONE, |acc, d| &acc * d))
    }

    /// All elements of a finite module, in lexicographic order.
    pub fn elements(&self) -> Option<Vec<Vec<Int>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for d in &self.relations {
            let d = d.to_i64()?;
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(Int::from(x));
                        p
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// Multiplication by `p` is injective, i.e. `ₚA = 0`.
    pub fn p_torsion_trivial(&self, p: u64) -> bool {
        let p = Int::from(p);
        self.relations.iter().all(|d| d.is_zero() || d.gcd(&p).is_one())
    }

    /// `n+1` is not a zero divisor on `A` and `n!·x = a` is uniquely
    /// solvable for every `a`.
    pub fn corollary_hypothesis(&self, n: u64) -> bool {
        let fact = Int::factorial(n);
        self.p_torsion_trivial(n + 1)
            && self.relations.iter().all(|d| if d.is_zero() { fact.is_one() } else { d.gcd(&fact).is_one() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::permutations;

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn sign_module_s3() -> GModule {
        let g = Group::symmetric(3);
        let action = permutations(3)
            .iter()
            .map(|p| {
                let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                IntMatrix::from_rows(&[[if inversions % 2 == 0 { 1 } else { -1 }]])
            })
            .collect();
        GModule::new(&g, ints(&[0]), action).unwrap()
    }

    #[test]
    fn valid_modules() {
        let z2 = Group::cyclic(2);
        let a = GModule::trivial(&z2, &[2]);
        assert!(a.is_trivial_action());
        let sign = sign_module_s3();
        assert_eq!(sign.act(1, &ints(&[5])), ints(&[-5]));
        let neg = GModule::from_generators(&z2, ints(&[3]), &[(1, IntMatrix::from_rows(&[[2]]))]).unwrap();
        assert_eq!(neg.act(1, &ints(&[1])), ints(&[2]));
        assert_eq!(neg.act(0, &ints(&[1])), ints(&[1]));
    }

    #[test]
    fn action_composes() {
        let g = Group::symmetric(3);
        let m = sign_module_s3();
        for a in g.elements() {
            for b in g.elements() {
                let lhs = m.act(a, &m.act(b, &ints(&[1])));
                assert_eq!(lhs, m.act(g.mul(a, b), &ints(&[1])));
            }
        }
    }

    #[test]
    fn rejects_bad_actions() {
        let z2 = Group::cyclic(2);
        // Z/2 -> Z summand with an odd coefficient is not well defined
        let bad = vec![IntMatrix::identity(2), IntMatrix::from_rows(&[[1, 1], [0, 1]])];
        assert_eq!(GModule::new(&z2, ints(&[0, 2]), bad), Err(ModuleError::IllDefinedAction { g: 1, i: 0, j: 1 }));
        let not_hom = vec![IntMatrix::identity(1), IntMatrix::from_rows(&[[2]])];
        assert!(matches!(GModule::new(&z2, ints(&[0]), not_hom), Err(ModuleError::NotHomomorphic { .. })));
        let bad_id = vec![IntMatrix::from_rows(&[[-1]]), IntMatrix::from_rows(&[[-1]])];
        assert_eq!(GModule::new(&z2, ints(&[0]), bad_id), Err(ModuleError::IdentityActsNontrivially));
        let z3 = Group::cyclic(3);
        assert!(matches!(
            GModule::from_generators(&z3, ints(&[0]), &[(1, IntMatrix::from_rows(&[[-1]]))]),
            Err(ModuleError::NotHomomorphic { .. })
        ));
    }

    #[test]
    fn torsion_predicates() {
        let g = Group::trivial();
        assert!(GModule::trivial(&g, &[3]).p_torsion_trivial(2));
        assert!(!GModule::trivial(&g, &[2]).p_torsion_trivial(2));
        assert!(GModule::trivial(&g, &[0, 9]).p_torsion_trivial(2));
        assert!(GModule::trivial(&g, &[5]).corollary_hypothesis(2));
        assert!(!GModule::trivial(&g, &[2]).corollary_hypothesis(2));
        assert!(GModule::trivial(&g, &[0]).corollary_hypothesis(1));
        assert!(!GModule::trivial(&g, &[0]).corollary_hypothesis(2));
    }

    #[test]
    fn presentation_is_diagonalized() {
        let g = Group::cyclic(2);
        // Z^2 / <(2,0),(0,3)> ≅ Z/6, swap action becomes an automorphism of Z/6
        let swap = IntMatrix::from_rows(&[[1, 0], [0, 1]]);
        let m = GModule::from_presentation(&g, 2, &[ints(&[2, 0]), ints(&[0, 3])], &[(1, swap)]).unwrap();
        assert_eq!(m.relations(), &ints(&[6])[..]);
        assert_eq!(m.cardinality(), Some(Int::from(6)));
    }

    #[test]
    fn p_torsion_matches_brute_force() {
        let g = Group::trivial();
        for rel in [vec![2], vec![3], vec![4, 6], vec![5, 5], vec![9], vec![2, 3, 5]] {
            let m = GModule::trivial(&g, &rel);
            for p in 1..8u64 {
                let brute = m.elements().unwrap().iter().all(|a| {
                    let mut pa: Vec<Int> = a.iter().map(|x| x * &Int::from(p)).collect();
                    m.reduce(&mut pa);
                    !pa.iter().all(Int::is_zero) || a.iter().all(Int::is_zero)
                });
                assert_eq!(m.p_torsion_trivial(p), brute, "{rel:?} p={p}");
            }
        }
    }
}
