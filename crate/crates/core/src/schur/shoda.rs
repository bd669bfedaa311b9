//! Strong Shoda pairs (H, K) and the cyclic cyclotomic algebras they give.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::group::{derived_subgroup, intermediate_subgroups, normalizer, FiniteGroup};
use crate::numtheory::{divisors, euler_phi, gcd, mobius, mult_order, prime_divisors, Rational};

/// A strong Shoda pair with a linear character of H/K: `lambda(generator)`
/// is `exp(2 pi i / root_order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongShodaPair {
    /// Sorted members of H.
    pub h: Vec<usize>,
    /// Sorted members of K.
    pub k: Vec<usize>,
    /// Element of H whose coset generates H/K.
    pub generator: usize,
    /// |H/K|.
    pub root_order: u64,
}

/// The crossed product of Q(zeta_k) by N/H, where n in N acts by
/// zeta -> zeta^s when n y n^-1 = y^s mod K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicAlgebra {
    /// Conductor k = |H/K|.
    pub conductor: u64,
    /// For each acting residue s (ascending): (s, j) with n_s^ord(s) = y^j
    /// mod K, for a fixed preimage n_s in N. The cyclic subalgebra for s has
    /// u^ord(s) = zeta_k^j.
    pub actions: Vec<(u64, u64)>,
}

impl CyclotomicAlgebra {
    /// The acting subgroup S of (Z/k)^x.
    pub fn residues(&self) -> Vec<u64> {
        self.actions.iter().map(|&(s, _)| s).collect()
    }

    pub fn cocycle_exponent(&self, s: u64) -> Option<u64> {
        self.actions.iter().find(|&&(t, _)| t == s).map(|&(_, j)| j)
    }
}

/// H/K as a cyclic group: a generator and the discrete logarithm of every
/// element of H (u32::MAX off H).
#[derive(Clone, Debug)]
pub(crate) struct CyclicQuotient {
    pub generator: usize,
    pub order: u64,
    pub dlog: Vec<u32>,
}

pub(crate) fn cyclic_quotient(g: &FiniteGroup, h: &[usize], k: &[usize]) -> Option<CyclicQuotient> {
    let idx = (h.len() / k.len()) as u64;
    let mut in_k = vec![false; g.order()];
    for &x in k {
        in_k[x] = true;
    }
    let generator = *h.iter().find(|&&y| {
        let mut z = y;
        let mut o = 1u64;
        while !in_k[z] {
            z = g.mul(z, y);
            o += 1;
        }
        o == idx
    })?;
    let mut dlog = vec![u32::MAX; g.order()];
    let mut z = 0;
    for e in 0..idx {
        for &x in k {
            dlog[g.mul(z, x)] = e as u32;
        }
        z = g.mul(z, generator);
    }
    Some(CyclicQuotient { generator, order: idx, dlog })
}

/// Candidate pairs for a subgroup H: every K with H' <= K <= H and H/K
/// cyclic.
pub(crate) fn cyclic_quotients_of(g: &FiniteGroup, h: &[usize]) -> Vec<(Vec<usize>, CyclicQuotient)> {
    let hd = derived_subgroup(g, h);
    intermediate_subgroups(g, h, &hd)
        .into_iter()
        .filter_map(|k| cyclic_quotient(g, h, &k).map(|q| (k, q)))
        .collect()
}

/// (|H| / phi(k)) <T_H, sum of the faithful characters of H/K>, for a
/// rational class function T given on classes. Nonzero iff some Galois
/// conjugate of lambda is a constituent of T restricted to H.
pub(crate) fn induction_test(g: &FiniteGroup, h: &[usize], q: &CyclicQuotient, trace: &[Rational]) -> bool {
    let k = q.order;
    let mut acc = Rational::zero();
    for &x in h {
        let e = q.dlog[x] as u64;
        let o = k / gcd(k, e);
        let mu = mobius(o);
        if mu == 0 {
            continue;
        }
        let t = &trace[g.class_of(x)];
        acc += t * Rational::new(BigInt::from(mu), BigInt::from(euler_phi(o)));
    }
    !acc.is_zero()
}

/// |H| * e(H, K) as an integer combination of group elements, where
/// e(H, K) = sum over d | rad(k) of mu(d) * (average over M_d), with M_d/K
/// the subgroup of order d.
fn scaled_idempotent(h: &[usize], q: &CyclicQuotient) -> Vec<(usize, i64)> {
    let k = q.order;
    let rad: u64 = prime_divisors(k).iter().product();
    let kk = (h.len() as u64 / k) as i64;
    let mut coeff: std::collections::BTreeMap<usize, i64> = Default::default();
    for d in divisors(rad) {
        let mu = mobius(d);
        // M_d: elements with dlog divisible by k/d
        let weight = mu * (h.len() as i64) / (kk * d as i64);
        for &x in h {
            if (q.dlog[x] as u64) % (k / d) == 0 {
                *coeff.entry(x).or_insert(0) += weight;
            }
        }
    }
    coeff.into_iter().filter(|&(_, c)| c != 0).collect()
}

fn product_vanishes(g: &FiniteGroup, a: &[(usize, i64)], b: &[(usize, i64)]) -> bool {
    let mut acc = vec![0i64; g.order()];
    for &(x, cx) in a {
        for &(y, cy) in b {
            acc[g.mul(x, y)] += cx * cy;
        }
    }
    acc.iter().all(|&c| c == 0)
}

/// Check the strong Shoda conditions for (H, K) and build the crossed
/// product: H normal in N = N_G(K), H/K maximal abelian in N/K, and
/// e e^g = 0 for g outside N. Returns the pair, [G:N] and the algebra.
pub(crate) fn strong_shoda_data(
    g: &FiniteGroup,
    h: &[usize],
    k: &[usize],
    q: &CyclicQuotient,
) -> Option<(StrongShodaPair, u64, CyclotomicAlgebra)> {
    let n_set = normalizer(g, k);
    let mut in_h = vec![false; g.order()];
    for &x in h {
        in_h[x] = true;
    }
    if !n_set.iter().all(|&n| h.iter().all(|&x| in_h[g.conj(x, n)])) {
        return None;
    }
    let y = q.generator;
    let kq = q.order;
    let mut actions: Vec<(u64, usize)> = Vec::new();
    for &n in &n_set {
        // n y n^-1 = conj(y, n^-1)
        let s = q.dlog[g.conj(y, g.inv(n))] as u64 % kq.max(1);
        let s = if kq == 1 { 1 } else { s };
        if s == 1 && !in_h[n] {
            // n centralizes H/K but lies outside H
            return None;
        }
        if !actions.iter().any(|&(t, _)| t == s) {
            actions.push((s, n));
        }
    }
    if actions.len() * h.len() != n_set.len() {
        return None;
    }
    let e = scaled_idempotent(h, q);
    let mut in_n = vec![false; g.order()];
    for &x in &n_set {
        in_n[x] = true;
    }
    let mut seen = vec![false; g.order()];
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        for &n in &n_set {
            seen[g.mul(n, x)] = true;
        }
        if in_n[x] {
            continue;
        }
        let eg: Vec<(usize, i64)> = e.iter().map(|&(a, c)| (g.conj(a, x), c)).collect();
        if !product_vanishes(g, &e, &eg) {
            return None;
        }
    }
    actions.sort_unstable();
    let actions = actions
        .into_iter()
        .map(|(s, n)| {
            let f = mult_order(s, kq.max(1));
            let nf = g.pow(n, f);
            debug_assert!(in_h[nf]);
            (s, q.dlog[nf] as u64)
        })
        .collect();
    let pair = StrongShodaPair {
        h: h.to_vec(),
        k: k.to_vec(),
        generator: y,
        root_order: kq,
    };
    let index = (g.order() / n_set.len()) as u64;
    Some((pair, index, CyclotomicAlgebra { conductor: kq, actions }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{builtin_group, Family};
    use crate::group::subgroup_generated;

    #[test]
    fn quaternion_pair() {
        let q8 = builtin_group(&Family::Dicyclic(2)).unwrap();
        let a = (0..8).find(|&x| q8.element_order(x) == 4).unwrap();
        let h = subgroup_generated(&q8, &[a]);
        let k = vec![0];
        let q = cyclic_quotient(&q8, &h, &k).unwrap();
        let (pair, index, alg) = strong_shoda_data(&q8, &h, &k, &q).unwrap();
        assert_eq!(pair.root_order, 4);
        assert_eq!(index, 1);
        assert_eq!(alg.actions, vec![(1, 0), (3, 2)]);
    }

    #[test]
    fn non_pairs_are_rejected() {
        // (C_2, 1) in S_3: C_2 is not normal in its normalizer's complement
        let s3 = builtin_group(&Family::Sym(3)).unwrap();
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = subgroup_generated(&s3, &[t]);
        let q = cyclic_quotient(&s3, &h, &[0]).unwrap();
        assert!(strong_shoda_data(&s3, &h, &[0], &q).is_none());
        // (C_3, 1) is a pair, giving M_1(Q(zeta_3) * C_2)
        let r = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let h = subgroup_generated(&s3, &[r]);
        let q = cyclic_quotient(&s3, &h, &[0]).unwrap();
        let (_, index, alg) = strong_shoda_data(&s3, &h, &[0], &q).unwrap();
        assert_eq!(index, 1);
        assert_eq!(alg.residues(), vec![1, 2]);
    }
}
