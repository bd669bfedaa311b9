//! Fully enumerated finite groups: construction, conjugacy classes,
//! subgroups and quotients.

pub mod catalog;
mod classes;
pub mod expr;
pub mod families;
mod perm;
mod subgroups;

use std::collections::HashMap;
use std::sync::OnceLock;

pub use classes::{conjugacy_classes, power_class, ConjClass};
pub use perm::{parse_generator_list, Perm};
pub use subgroups::{
    derived_subgroup, intermediate_subgroups, is_normal, join, normal_subgroups, normalizer,
    quotient_group, quotient_map, subgroup_classes, NormalSubgroupDesc, SubgroupClass,
};

use crate::error::{Error, Result};
use crate::numtheory::lcm;

/// Default bound on the order of groups built from generators.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    elt_order: Vec<u32>,
    exponent: u64,
    generators: Vec<usize>,
    pub label: Option<String>,
    classes: OnceLock<Vec<ConjClass>>,
    class_of: OnceLock<Vec<usize>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            order: self.order,
            mult: self.mult.clone(),
            inv: self.inv.clone(),
            elt_order: self.elt_order.clone(),
            exponent: self.exponent,
            generators: self.generators.clone(),
            label: self.label.clone(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
        }
    }
}

impl FiniteGroup {
    /// Closure of a set of permutations. Elements are indexed in
    /// breadth-first order by word length in the generators; within one
    /// layer new elements are sorted by their image lists.
    pub fn from_generators(gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
        let gens = perm::pad_all(gens.to_vec());
        let degree = gens.first().map(Perm::degree).unwrap_or(0);
        let id = Perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Perm, u32> = HashMap::from([(id, 0)]);
        // for every non-identity element: (parent index, generator index)
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut fresh: Vec<(Perm, u32, u32)> = Vec::new();
            let mut fresh_set: HashMap<Perm, ()> = HashMap::new();
            for &x in &layer {
                for (gi, g) in gens.iter().enumerate() {
                    let y = elems[x].compose(g);
                    if !index.contains_key(&y) && !fresh_set.contains_key(&y) {
                        fresh_set.insert(y.clone(), ());
                        fresh.push((y, x as u32, gi as u32));
                    }
                }
            }
            fresh.sort_by(|a, b| a.0.cmp(&b.0));
            layer.clear();
            for (y, x, gi) in fresh {
                if elems.len() >= cap {
                    return Err(Error::SizeLimit { cap });
                }
                index.insert(y.clone(), elems.len() as u32);
                layer.push(elems.len());
                elems.push(y);
                parent.push((x, gi));
            }
        }
        let n = elems.len();
        // right multiplication by generators
        let mut right = vec![0u32; n * gens.len()];
        for (i, e) in elems.iter().enumerate() {
            for (gi, g) in gens.iter().enumerate() {
                right[i * gens.len() + gi] = index[&e.compose(g)];
            }
        }
        let mut mult = vec![0u32; n * n];
        for i in 0..n {
            mult[i * n] = i as u32;
        }
        // element j = parent(j) * gen, so i*j = (i*parent(j)) * gen
        for j in 1..n {
            let (pj, gj) = parent[j];
            for i in 0..n {
                let ip = mult[i * n + pj as usize] as usize;
                mult[i * n + j] = right[ip * gens.len() + gj as usize];
            }
        }
        let generators = gens
            .iter()
            .map(|g| index[g] as usize)
            .filter(|&g| g != 0)
            .collect::<Vec<_>>();
        Self::build(mult, dedup_keep_order(generators))
    }

    /// Build from a multiplication table (row-major, `n*n` entries) with the
    /// identity at index 0. Validates the identity and inverse laws.
    pub fn from_table(mult: Vec<u32>, generators: Vec<usize>) -> Result<FiniteGroup> {
        Self::build(mult, generators)
    }

    fn build(mult: Vec<u32>, generators: Vec<usize>) -> Result<FiniteGroup> {
        let g = Self::from_table_unchecked(mult, generators)?;
        let n = g.order;
        for x in 0..n {
            if g.mul(0, x) != x || g.mul(x, 0) != x {
                return Err(Error::Contract(format!("identity law fails at element {x}")));
            }
        }
        Ok(g)
    }

    /// Build from a table without checking the group axioms. Used to feed
    /// possibly broken tables to the verifier. Inverses and orders are
    /// filled in on a best-effort basis (0 when they do not exist).
    pub fn from_table_unchecked(mult: Vec<u32>, generators: Vec<usize>) -> Result<FiniteGroup> {
        let n = (mult.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != mult.len() {
            return Err(Error::Contract("multiplication table is not square".into()));
        }
        if mult.iter().any(|&x| x as usize >= n) {
            return Err(Error::Contract("multiplication table entry out of range".into()));
        }
        let mut inv = vec![0u32; n];
        for x in 0..n {
            inv[x] = (0..n).find(|&y| mult[x * n + y] == 0).unwrap_or(0) as u32;
        }
        let mut elt_order = vec![0u32; n];
        let mut exponent = 1u64;
        for x in 0..n {
            let mut y = x;
            let mut k = 1u32;
            while y != 0 && (k as usize) <= n {
                y = mult[y * n + x] as usize;
                k += 1;
            }
            if y == 0 {
                elt_order[x] = k;
                exponent = lcm(exponent, k as u64);
            }
        }
        Ok(FiniteGroup {
            order: n,
            mult,
            inv,
            elt_order,
            exponent,
            generators,
            label: None,
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.elt_order[a] as u64
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.elt_order[a].max(1) as u64;
        let mut acc = 0;
        let mut base = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> &[ConjClass] {
        self.classes.get_or_init(|| conjugacy_classes(self))
    }

    /// Index (into [`classes`](Self::classes)) of the class containing `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of.get_or_init(|| {
            let mut map = vec![0usize; self.order];
            for (ci, c) in self.classes().iter().enumerate() {
                for &y in &c.members {
                    map[y] = ci;
                }
            }
            map
        })[x]
    }

    /// The group with its generators reordered (same table).
    pub fn with_generators(&self, generators: Vec<usize>) -> FiniteGroup {
        let mut g = self.clone();
        g.generators = generators;
        g
    }

    pub fn multiplication_table(&self) -> &[u32] {
        &self.mult
    }
}

fn dedup_keep_order(v: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(v.len());
    for x in v {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Smallest subgroup containing `gens`, as a sorted member list.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut members = vec![0usize];
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                members.push(y);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

/// Build a standalone group from a subgroup. Returns the group and the
/// embedding (new index -> old index); the identity stays at index 0.
pub fn subgroup_as_group(g: &FiniteGroup, members: &[usize]) -> (FiniteGroup, Vec<usize>) {
    let mut emb: Vec<usize> = members.to_vec();
    emb.sort_unstable();
    let k = emb.len();
    let mut back = vec![usize::MAX; g.order()];
    for (i, &x) in emb.iter().enumerate() {
        back[x] = i;
    }
    let mut mult = vec![0u32; k * k];
    for i in 0..k {
        for j in 0..k {
            mult[i * k + j] = back[g.mul(emb[i], emb[j])] as u32;
        }
    }
    // greedy generating set
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    for (i, &x) in emb.iter().enumerate() {
        if span.binary_search(&x).is_err() {
            gens.push(i);
            let old: Vec<usize> = gens.iter().map(|&j| emb[j]).collect();
            span = subgroup_generated(g, &old);
        }
    }
    let sub = FiniteGroup::from_table(mult, gens).expect("subgroup table is a group");
    (sub, emb)
}
