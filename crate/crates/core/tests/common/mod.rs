//! Shared fixtures: the catalog instances and an enumeration oracle that
//! recomputes cohomology of small finite modules from scratch.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use symcoh::catalog::Catalog;
use symcoh::gmodule::GModule;
use symcoh::group::Group;
use symcoh::zlinalg::Int;

pub struct Pair {
    pub group_name: String,
    pub module_name: String,
    pub group: Arc<Group>,
    pub module: Arc<GModule>,
    /// Degrees listed for the pair in the catalog jobs.
    pub degrees: Vec<usize>,
}

/// Every distinct (group, module) pair of the default catalog.
pub fn catalog_pairs() -> Vec<Pair> {
    let cat = Catalog::builtin();
    let mut out: Vec<Pair> = Vec::new();
    for job in cat.jobs() {
        if let Some(p) = out.iter_mut().find(|p| p.group_name == job.group && p.module_name == job.module) {
            for &d in &job.degrees {
                if !p.degrees.contains(&d) {
                    p.degrees.push(d);
                }
            }
            continue;
        }
        out.push(Pair {
            group_name: job.group.clone(),
            module_name: job.module.clone(),
            group: cat.group(&job.group).unwrap(),
            module: cat.module(&job.module, &job.group).unwrap(),
            degrees: job.degrees.clone(),
        });
    }
    out
}

pub fn ints(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| Int::from(x)).collect()
}

/// Cyclic module `Z/d` given by the scalar each element acts by.
pub struct CyclicModule {
    pub d: u64,
    pub scalar: Vec<u64>,
}

impl CyclicModule {
    /// `None` unless the module is `Z/d` with `d > 0`.
    pub fn of(group: &Group, module: &GModule) -> Option<CyclicModule> {
        if module.rank() != 1 || module.relations()[0].is_zero() {
            return None;
        }
        let d = module.relations()[0].to_i64()? as u64;
        let scalar =
            group.elements().map(|g| module.action_matrix(g).get(0, 0).to_i64().unwrap().rem_euclid(d as i64) as u64).collect();
        Some(CyclicModule { d, scalar })
    }

    /// Number of `n`-cochains, `d^(|G|^n)`, if it fits in `u64`.
    pub fn cochain_count(&self, order: usize, n: usize) -> Option<u64> {
        let places = (order as u64).checked_pow(n as u32)?;
        self.d.checked_pow(u32::try_from(places).ok()?)
    }
}

fn tuple_of(mut idx: usize, m: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = idx % m;
        idx /= m;
    }
    t
}

fn index_of(t: &[usize], m: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * m + x)
}

/// Cochains as plain value tables over `Z/d`, indexed by tuples in base `|G|`.
pub struct Oracle<'a> {
    pub g: &'a Group,
    pub a: &'a CyclicModule,
}

impl Oracle<'_> {
    fn places(&self, n: usize) -> usize {
        self.g.order().pow(n as u32)
    }

    fn decode(&self, mut code: u64, n: usize) -> Vec<u64> {
        let mut v = vec![0; self.places(n)];
        for x in v.iter_mut() {
            *x = code % self.a.d;
            code /= self.a.d;
        }
        v
    }

    pub fn differential(&self, s: &[u64], n: usize) -> Vec<u64> {
        let (g, d, m) = (self.g, self.a.d, self.g.order());
        (0..self.places(n + 1))
            .map(|idx| {
                let t = tuple_of(idx, m, n + 1);
                let mut acc = self.a.scalar[t[0]] * s[index_of(&t[1..], m)] % d;
                for i in 1..=n {
                    let mut merged = t[..i - 1].to_vec();
                    merged.push(g.mul(t[i - 1], t[i]));
                    merged.extend_from_slice(&t[i + 1..]);
                    let v = s[index_of(&merged, m)];
                    acc = if i % 2 == 0 { acc + v } else { acc + d - v } % d;
                }
                let v = s[index_of(&t[..n], m)];
                if (n + 1) % 2 == 0 {
                    (acc + v) % d
                } else {
                    (acc + d - v) % d
                }
            })
            .collect()
    }

    /// Fixed by all adjacent transpositions.
    pub fn is_symmetric(&self, s: &[u64], n: usize) -> bool {
        let (g, d, m) = (self.g, self.a.d, self.g.order());
        (1..=n).all(|i| {
            (0..self.places(n)).all(|idx| {
                let t = tuple_of(idx, m, n);
                let mut src = t.clone();
                let mut scalar = 1;
                if i == 1 {
                    src[0] = g.inv(t[0]);
                    if n >= 2 {
                        src[1] = g.mul(t[0], t[1]);
                    }
                    scalar = self.a.scalar[t[0]];
                } else {
                    src[i - 2] = g.mul(t[i - 2], t[i - 1]);
                    src[i - 1] = g.inv(t[i - 1]);
                    if i < n {
                        src[i] = g.mul(t[i - 1], t[i]);
                    }
                }
                let moved = (d - scalar * s[index_of(&src, m)] % d) % d;
                moved == s[idx]
            })
        })
    }

    fn all(&self, n: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
        let count = self.a.d.pow(self.places(n) as u32);
        (0..count).map(move |c| self.decode(c, n))
    }

    /// Invariant factors of `Hⁿ` and `HSⁿ` by exhaustive enumeration.
    pub fn cohomology(&self, n: usize) -> (Vec<Int>, Vec<Int>) {
        let mut z = Vec::new();
        let mut zs = Vec::new();
        for s in self.all(n) {
            if self.differential(&s, n).iter().all(|&x| x == 0) {
                if n == 0 || self.is_symmetric(&s, n) {
                    zs.push(s.clone());
                }
                z.push(s);
            }
        }
        let mut b: HashSet<Vec<u64>> = HashSet::new();
        let mut bs: HashSet<Vec<u64>> = HashSet::new();
        if n == 0 {
            b.insert(vec![0; self.places(0)]);
            bs.insert(vec![0; self.places(0)]);
        } else {
            for t in self.all(n - 1) {
                let dt = self.differential(&t, n - 1);
                if n == 1 || self.is_symmetric(&t, n - 1) {
                    bs.insert(dt.clone());
                }
                b.insert(dt);
            }
        }
        (self.quotient_factors(&z, &b), self.quotient_factors(&zs, &bs))
    }

    /// Invariant factors of the finite group `Z/B` from the sizes of its
    /// `p^k`-torsion subgroups.
    fn quotient_factors(&self, z: &[Vec<u64>], b: &HashSet<Vec<u64>>) -> Vec<Int> {
        let d = self.a.d;
        let order = z.len() / b.len();
        let torsion =
            |m: u64| z.iter().filter(|v| b.contains(&v.iter().map(|x| x * m % d).collect::<Vec<_>>())).count() / b.len();
        // exponents[p] = multiset of p-primary cyclic orders
        let mut columns: Vec<Vec<u64>> = Vec::new();
        let mut rest = order as u64;
        let mut p = 2;
        while rest > 1 {
            if rest % p != 0 {
                p += 1;
                continue;
            }
            while rest % p == 0 {
                rest /= p;
            }
            // r[k] = number of cyclic p-factors of order >= p^k
            let mut r = Vec::new();
            let mut prev = 1;
            let mut pk = 1;
            loop {
                pk *= p;
                let t = torsion(pk);
                if t == prev {
                    break;
                }
                r.push(((t / prev) as f64).log(p as f64).round() as usize);
                prev = t;
            }
            let mut orders = Vec::new();
            for (k, &count) in r.iter().enumerate() {
                let next = r.get(k + 1).copied().unwrap_or(0);
                orders.extend(std::iter::repeat(p.pow(k as u32 + 1)).take(count - next));
            }
            orders.sort_unstable_by(|a, b| b.cmp(a));
            columns.push(orders);
        }
        let len = columns.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len).map(|j| columns.iter().map(|c| c.get(j).copied().unwrap_or(1)).product()).collect();
        factors.reverse();
        factors.into_iter().map(|f| Int::from(f as i64)).collect()
    }
}
