use std::collections::{HashMap, HashSet};

use super::classes::conjugators;
use super::{subgroup_generated, FiniteGroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubgroupDesc {
    pub members: Vec<usize>,
    pub order: usize,
}

/// Subgroup generated by the union of two subgroups.
pub fn join(g: &FiniteGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let gens: Vec<usize> = a.iter().chain(b).copied().filter(|&x| x != 0).collect();
    subgroup_generated(g, &small_generating_set(g, &gens))
}

/// Drop elements already generated by earlier ones.
fn small_generating_set(g: &FiniteGroup, elems: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span: Vec<usize> = vec![0];
    for &x in elems {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = subgroup_generated(g, &gens);
        }
    }
    gens
}

pub fn is_normal(g: &FiniteGroup, members: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &x in members {
        inside[x] = true;
    }
    conjugators(g)
        .iter()
        .all(|&s| members.iter().all(|&x| inside[g.conj(x, s)]))
}

/// Elements normalizing the subgroup `members` (any subset of `g`).
pub fn normalizer(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    for &x in members {
        inside[x] = true;
    }
    (0..g.order())
        .filter(|&y| members.iter().all(|&x| inside[g.conj(x, y)]))
        .collect()
}

/// Commutator subgroup of the subgroup `members`.
pub fn derived_subgroup(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut comms: Vec<usize> = Vec::new();
    let mut seen = HashSet::new();
    for &x in members {
        for &y in members {
            let c = g.commutator(x, y);
            if seen.insert(c) {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    subgroup_generated(g, &small_generating_set(g, &comms))
}

/// All normal subgroups, as the join-closure of the normal closures of
/// single classes, sorted by (order, members).
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<NormalSubgroupDesc> {
    let mut basic: Vec<Vec<usize>> = Vec::new();
    for c in g.classes() {
        let n = subgroup_generated(g, &c.members);
        if !basic.contains(&n) {
            basic.push(n);
        }
    }
    let mut all: Vec<Vec<usize>> = basic.clone();
    let mut known: HashSet<Vec<usize>> = all.iter().cloned().collect();
    let mut i = 0;
    while i < all.len() {
        for b in &basic {
            let j = join(g, &all[i], b);
            if known.insert(j.clone()) {
                all.push(j);
            }
        }
        i += 1;
    }
    let mut out: Vec<NormalSubgroupDesc> = all
        .into_iter()
        .map(|m| NormalSubgroupDesc { order: m.len(), members: m })
        .collect();
    out.sort_by(|a, b| (a.order, &a.members).cmp(&(b.order, &b.members)));
    out
}

/// Quotient by a normal subgroup, with the coset map (element -> coset
/// index). Cosets are numbered by their smallest element.
pub fn quotient_map(g: &FiniteGroup, n: &NormalSubgroupDesc) -> Result<(FiniteGroup, Vec<usize>)> {
    if n.members.first() != Some(&0) || !is_normal(g, &n.members) {
        return Err(Error::Contract("quotient by a subgroup that is not normal".into()));
    }
    if subgroup_generated(g, &n.members) != n.members {
        return Err(Error::Contract("quotient by a set that is not a subgroup".into()));
    }
    let size = g.order();
    let mut coset = vec![usize::MAX; size];
    let mut reps = Vec::new();
    for x in 0..size {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in &n.members {
            coset[g.mul(x, k)] = id;
        }
    }
    let q = reps.len();
    let mut mult = vec![0u32; q * q];
    for i in 0..q {
        for j in 0..q {
            mult[i * q + j] = coset[g.mul(reps[i], reps[j])] as u32;
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    for &s in g.generators() {
        let c = coset[s];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let quotient = FiniteGroup::from_table(mult, gens)?;
    Ok((quotient, coset))
}

pub fn quotient_group(g: &FiniteGroup, n: &NormalSubgroupDesc) -> Result<FiniteGroup> {
    quotient_map(g, n).map(|(q, _)| q)
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically smallest conjugate (sorted members).
    pub representative: Vec<usize>,
    /// Number of conjugates.
    pub size: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.len()
    }
}

/// All subgroups up to conjugacy, sorted by decreasing order and then by
/// discovery. Every subgroup is a join of cyclic subgroups, so the classes
/// are found by joining class representatives with cyclic subgroups.
pub fn subgroup_classes(g: &FiniteGroup) -> Vec<SubgroupClass> {
    let n = g.order();
    let mut cyclic: Vec<Vec<usize>> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in 0..n {
        let c = subgroup_generated(g, &[x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push(c);
        }
    }
    // exact member list -> class id
    let mut lookup: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut register = |h: Vec<usize>, classes: &mut Vec<SubgroupClass>| -> Option<usize> {
        if lookup.contains_key(&h) {
            return None;
        }
        let mut conjugates: Vec<Vec<usize>> = Vec::new();
        for y in 0..n {
            let mut c: Vec<usize> = h.iter().map(|&x| g.conj(x, y)).collect();
            c.sort_unstable();
            if !conjugates.contains(&c) {
                conjugates.push(c);
            }
        }
        conjugates.sort();
        let id = classes.len();
        for c in &conjugates {
            lookup.insert(c.clone(), id);
        }
        classes.push(SubgroupClass { representative: conjugates[0].clone(), size: conjugates.len() });
        Some(id)
    };
    let mut queue = Vec::new();
    for c in &cyclic {
        if let Some(id) = register(c.clone(), &mut classes) {
            queue.push(id);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let h = classes[queue[i]].representative.clone();
        for c in &cyclic {
            if c.iter().all(|x| h.binary_search(x).is_ok()) {
                continue;
            }
            let j = join(g, &h, c);
            if let Some(id) = register(j, &mut classes) {
                queue.push(id);
            }
        }
        i += 1;
    }
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(classes[i].order()), i));
    order.into_iter().map(|i| classes[i].clone()).collect()
}

/// Subgroups of `h` that contain `k`, where `h/k` is abelian; found by
/// joining `k` with cyclic subgroups of `h`.
pub fn intermediate_subgroups(g: &FiniteGroup, h: &[usize], k: &[usize]) -> Vec<Vec<usize>> {
    let mut cyclic: Vec<Vec<usize>> = Vec::new();
    for &x in h {
        let c = subgroup_generated(g, &[x]);
        if !cyclic.contains(&c) {
            cyclic.push(c);
        }
    }
    let mut out = vec![k.to_vec()];
    let mut seen: HashSet<Vec<usize>> = out.iter().cloned().collect();
    let mut i = 0;
    while i < out.len() {
        for c in &cyclic {
            let j = join(g, &out[i], c);
            if seen.insert(j.clone()) {
                out.push(j);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{builtin_group, Family};

    fn brute_force_normal_count(g: &FiniteGroup) -> usize {
        subgroup_classes(g).iter().filter(|c| c.size == 1).count()
    }

    #[test]
    fn normal_subgroup_examples() {
        let c7 = builtin_group(&Family::Cyclic(7)).unwrap();
        assert_eq!(normal_subgroups(&c7).len(), 2);
        let s3 = builtin_group(&Family::Sym(3)).unwrap();
        let ns = normal_subgroups(&s3);
        assert_eq!(ns.iter().map(|n| n.order).collect::<Vec<_>>(), vec![1, 3, 6]);
        let q16 = builtin_group(&Family::Dicyclic(4)).unwrap();
        let ns = normal_subgroups(&q16);
        assert!(ns.iter().any(|n| n.order == 2));
        for f in [Family::Sym(4), Family::Dicyclic(6), Family::SL23, Family::Dihedral(16)] {
            let g = builtin_group(&f).unwrap();
            assert_eq!(normal_subgroups(&g).len(), brute_force_normal_count(&g), "{f}");
        }
    }

    #[test]
    fn quotients() {
        let c6 = builtin_group(&Family::Cyclic(6)).unwrap();
        let two = normal_subgroups(&c6).into_iter().find(|n| n.order == 2).unwrap();
        assert_eq!(quotient_group(&c6, &two).unwrap().order(), 3);
        let q16 = builtin_group(&Family::Dicyclic(4)).unwrap();
        let ns = normal_subgroups(&q16);
        let (d8, map) = quotient_map(&q16, &ns[1]).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.classes().len(), 5);
        for x in 0..q16.order() {
            for y in 0..q16.order() {
                assert_eq!(map[q16.mul(x, y)], d8.mul(map[x], map[y]));
            }
        }
        let trivial = &ns[0];
        let same = quotient_group(&q16, trivial).unwrap();
        let sizes = |g: &FiniteGroup| {
            let mut v: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
            v.sort();
            v
        };
        assert_eq!(sizes(&same), sizes(&q16));
        let s3 = builtin_group(&Family::Sym(3)).unwrap();
        let t = s3.classes().iter().find(|c| c.element_order == 2).unwrap().members[0];
        let not_normal = NormalSubgroupDesc { members: vec![0, t], order: 2 };
        assert!(quotient_group(&s3, &not_normal).is_err());
    }

    #[test]
    fn subgroup_class_counts() {
        // S4 has 11 classes of subgroups, Q8 has 6, C2 x C2 has 5.
        let s4 = builtin_group(&Family::Sym(4)).unwrap();
        assert_eq!(subgroup_classes(&s4).len(), 11);
        let q8 = builtin_group(&Family::Dicyclic(2)).unwrap();
        assert_eq!(subgroup_classes(&q8).len(), 6);
        let v4 = builtin_group(&Family::Dihedral(4)).unwrap();
        assert_eq!(subgroup_classes(&v4).len(), 5);
    }
}
