//! Finite groups given by multiplication tables, with subgroups, cosets,
//! conjugation and double cosets.
//!
//! Element `0` is always the identity. Elements are plain indices into the
//! table.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not square or has entries out of range")]
    InvalidTable,
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element 0 is not a two-sided identity")]
    NoIdentityAtZero,
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("elements {0:?} do not form a subgroup")]
    NotASubgroup(Vec<usize>),
    #[error("subgroup is not contained in the ambient subgroup")]
    SubgroupNotContained,
    #[error("invalid coset representatives: {0}")]
    InvalidRepresentatives(String),
    #[error("unknown builtin group {0}")]
    UnknownBuiltin(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {})", self.order)
    }
}

impl Group {
    /// Validates a Cayley table: range, identity at 0, inverses, and
    /// associativity (checked on every triple).
    pub fn from_table(table: &[Vec<usize>]) -> Result<Group, GroupError> {
        let m = table.len();
        if m == 0 || table.iter().any(|row| row.len() != m || row.iter().any(|&x| x >= m)) {
            return Err(GroupError::InvalidTable);
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let mul = |a: usize, b: usize| flat[a * m + b];
        if (0..m).any(|g| mul(0, g) != g || mul(g, 0) != g) {
            return Err(GroupError::NoIdentityAtZero);
        }
        let mut inv = vec![0; m];
        for g in 0..m {
            match (0..m).find(|&h| mul(g, h) == 0 && mul(h, g) == 0) {
                Some(h) => inv[g] = h,
                None => return Err(GroupError::MissingInverse(g)),
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = mul(a, b);
                for c in 0..m {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Group { order: m, table: flat, inv })
    }

    /// Builds a group from a product on `0..m` that is known to be valid.
    fn from_fn(m: usize, f: impl Fn(usize, usize) -> usize) -> Group {
        let table: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| f(a, b)).collect()).collect();
        Group::from_table(&table).expect("builtin table is a group")
    }

    pub fn trivial() -> Group {
        Group::cyclic(1)
    }

    /// `Z/m` with element `i` standing for `i mod m`.
    pub fn cyclic(m: usize) -> Group {
        assert!(m >= 1);
        Group::from_fn(m, |a, b| (a + b) % m)
    }

    /// Dihedral group of order `2m`: index `i < m` is `r^i`, index `m + i`
    /// is `r^i s`.
    pub fn dihedral(m: usize) -> Group {
        assert!(m >= 1);
        Group::from_fn(2 * m, |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
            rot + m * ((b + d) % 2)
        })
    }

    /// `Z/2 × Z/2` as bit vectors under xor.
    pub fn klein4() -> Group {
        Group::from_fn(4, |a, b| a ^ b)
    }

    /// Symmetric group on `m ≤ 4` letters, elements in lexicographic order of
    /// one-line notation; `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(m: usize) -> Group {
        assert!((1..=4).contains(&m), "symmetric groups are provided for m <= 4");
        let perms = permutations(m);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation");
        Group::from_fn(perms.len(), |a, b| {
            let comp: Vec<usize> = (0..m).map(|x| perms[a][perms[b][x]]).collect();
            index(&comp)
        })
    }

    pub fn builtin(kind: &str, n: Option<usize>) -> Result<Group, GroupError> {
        let need =
            |n: Option<usize>| n.filter(|&n| n >= 1).ok_or_else(|| GroupError::UnknownBuiltin(format!("{kind} needs n >= 1")));
        Ok(match kind {
            "trivial" => Group::trivial(),
            "cyclic" => Group::cyclic(need(n)?),
            "dihedral" => Group::dihedral(need(n)?),
            "klein4" => Group::klein4(),
            "symmetric" => {
                let n = need(n)?;
                if n > 4 {
                    return Err(GroupError::UnknownBuiltin(format!("symmetric({n}) exceeds S4")));
                }
                Group::symmetric(n)
            }
            other => return Err(GroupError::UnknownBuiltin(other.to_string())),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g h g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv[g])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|c| c.to_vec()).collect()
    }
}

/// Permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for x in 0..m {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, m, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), m, &mut out);
    out
}

/// Index of a permutation (one-line notation) in [`Group::symmetric`].
pub fn permutation_index(perm: &[usize]) -> Option<usize> {
    permutations(perm.len()).iter().position(|p| p == perm)
}

/// A subgroup, stored as its sorted member list plus a membership table
/// over the ambient group.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then members lexicographically.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

impl Subgroup {
    fn from_sorted(group: &Group, members: Vec<usize>) -> Subgroup {
        let mut position = vec![None; group.order()];
        for (i, &g) in members.iter().enumerate() {
            position[g] = Some(i);
        }
        Subgroup { members, position }
    }

    /// Validates that `members` is a subgroup of `group`.
    pub fn new(group: &Group, members: &[usize]) -> Result<Subgroup, GroupError> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        let bad = || GroupError::NotASubgroup(members.to_vec());
        if set.iter().any(|&g| g >= group.order()) || !set.contains(&0) {
            return Err(bad());
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(bad());
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(bad());
                }
            }
        }
        Ok(Subgroup::from_sorted(group, set.into_iter().collect()))
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup::from_sorted(group, group.elements().collect())
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup::from_sorted(group, vec![0])
    }

    /// Subgroup generated by `gens`.
    pub fn generated(group: &Group, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; group.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = group.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let members = (0..group.order()).filter(|&g| seen[g]).collect();
        Subgroup::from_sorted(group, members)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.position.get(g).is_some_and(|p| p.is_some())
    }

    /// Index of `g` in the sorted member list.
    #[inline]
    pub fn position(&self, g: usize) -> Option<usize> {
        self.position.get(g).copied().flatten()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn intersect(&self, group: &Group, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&g| other.contains(g)).collect();
        Subgroup::from_sorted(group, members)
    }
}

/// All subgroups of `group`, sorted by order and then by members.
///
/// Breadth-first closure: every subgroup arises from a smaller one by
/// adjoining a single element.
pub fn enumerate_subgroups(group: &Group) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = Subgroup::trivial(group);
    found.insert(trivial.members.clone());
    let mut queue = VecDeque::from([trivial]);
    while let Some(s) = queue.pop_front() {
        for g in group.elements() {
            if s.contains(g) {
                continue;
            }
            let mut gens = s.members.clone();
            gens.push(g);
            let t = Subgroup::generated(group, &gens);
            if found.insert(t.members.clone()) {
                queue.push_back(t);
            }
        }
    }
    let mut subs: Vec<Subgroup> = found.into_iter().map(|m| Subgroup::from_sorted(group, m)).collect();
    subs.sort();
    subs
}

/// `g H g⁻¹`
pub fn conjugate(group: &Group, g: usize, h: &Subgroup) -> Subgroup {
    let mut members: Vec<usize> = h.members.iter().map(|&x| group.conj(g, x)).collect();
    members.sort_unstable();
    Subgroup::from_sorted(group, members)
}

/// Left cosets `cH` of `sub` inside `parent`, each with a chosen
/// representative; the coset `H` itself is always represented by the
/// identity.
#[derive(Clone, Debug)]
pub struct CosetTable {
    cosets: Vec<Vec<usize>>,
    reps: Vec<usize>,
    coset_of: Vec<Option<usize>>,
}

impl CosetTable {
    /// Cosets ordered by their minimal element, which is also the
    /// representative.
    pub fn new(group: &Group, parent: &Subgroup, sub: &Subgroup) -> Result<CosetTable, GroupError> {
        if !sub.is_subgroup_of(parent) {
            return Err(GroupError::SubgroupNotContained);
        }
        let mut coset_of = vec![None; group.order()];
        let mut cosets = Vec::new();
        let mut reps = Vec::new();
        for &g in parent.members() {
            if coset_of[g].is_some() {
                continue;
            }
            let mut c: Vec<usize> = sub.members().iter().map(|&h| group.mul(g, h)).collect();
            c.sort_unstable();
            for &x in &c {
                coset_of[x] = Some(cosets.len());
            }
            reps.push(c[0]);
            cosets.push(c);
        }
        Ok(CosetTable { cosets, reps, coset_of })
    }

    /// Same cosets, representatives given explicitly (one per coset, in the
    /// coset order of [`CosetTable::new`]).
    pub fn with_representatives(&self, reps: Vec<usize>) -> Result<CosetTable, GroupError> {
        if reps.len() != self.cosets.len() {
            return Err(GroupError::InvalidRepresentatives("wrong number of representatives".into()));
        }
        for (i, &r) in reps.iter().enumerate() {
            if self.coset_of.get(r).copied().flatten() != Some(i) {
                return Err(GroupError::InvalidRepresentatives(format!("{r} is not in coset {i}")));
            }
        }
        if reps[0] != 0 {
            return Err(GroupError::InvalidRepresentatives("the subgroup itself must be represented by 1".into()));
        }
        Ok(CosetTable { cosets: self.cosets.clone(), reps, coset_of: self.coset_of.clone() })
    }

    /// A second valid choice: the largest element of every coset other than
    /// the subgroup itself.
    pub fn alternate(&self) -> CosetTable {
        let reps =
            self.cosets.iter().enumerate().map(|(i, c)| if i == 0 { 0 } else { *c.last().expect("nonempty coset") }).collect();
        self.with_representatives(reps).expect("valid by construction")
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn coset_of(&self, g: usize) -> Option<usize> {
        self.coset_of.get(g).copied().flatten()
    }

    /// Representative of the coset containing `g`.
    pub fn rep_of(&self, g: usize) -> usize {
        self.reps[self.coset_of(g).expect("element of the parent subgroup")]
    }
}

/// Left cosets of `h` in the whole group.
pub fn left_cosets(group: &Group, h: &Subgroup) -> Result<CosetTable, GroupError> {
    CosetTable::new(group, &Subgroup::whole(group), h)
}

/// One representative (the minimal element) per double coset `L h K` in `H`.
pub fn double_coset_reps(group: &Group, l: &Subgroup, h: &Subgroup, k: &Subgroup) -> Result<Vec<usize>, GroupError> {
    if !l.is_subgroup_of(h) || !k.is_subgroup_of(h) {
        return Err(GroupError::SubgroupNotContained);
    }
    let mut seen = vec![false; group.order()];
    let mut reps = Vec::new();
    for &x in h.members() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &a in l.members() {
            let ax = group.mul(a, x);
            for &b in k.members() {
                seen[group.mul(ax, b)] = true;
            }
        }
    }
    Ok(reps)
}

/// Size of the double coset `L x K`.
pub fn double_coset_size(group: &Group, l: &Subgroup, x: usize, k: &Subgroup) -> usize {
    let mut set = BTreeSet::new();
    for &a in l.members() {
        for &b in k.members() {
            set.insert(group.mul(group.mul(a, x), b));
        }
    }
    set.len()
}
