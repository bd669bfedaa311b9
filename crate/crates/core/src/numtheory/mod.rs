//! Integer helpers, unit groups mod m, the local Galois groups T_m and the
//! generic partition routine.

mod cyclotomic;

pub use cyclotomic::{Cyclotomic, Rational};

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        num_integer::lcm(a, b)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial-division factorisation as (prime, exponent) pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exponent of the prime `p` in `n` (n > 0).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// The `p`-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    p.pow(valuation(n, p))
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `m`. By convention `ord_1(a) = 1`.
pub fn mult_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    assert_eq!(gcd(a % m, m), 1, "mult_order: {a} is not a unit mod {m}");
    let mut k = 1;
    let mut x = a % m;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    k
}

/// Residues in `[1, m-1]` coprime to `m`; empty for `m = 1`.
pub fn prime_residues(m: u64) -> Vec<u64> {
    (1..m).filter(|&t| gcd(t, m) == 1).collect()
}

/// The unit group (Z/m)^x as residues. Unlike [`prime_residues`] this is
/// `[1]` for `m = 1`, so it can always be iterated as a group.
pub fn units(m: u64) -> Vec<u64> {
    if m == 1 {
        vec![1]
    } else {
        prime_residues(m)
    }
}

/// Reduce a unit mod `m`, representing the single unit mod 1 as 1.
pub fn unit_reduce(t: u64, m: u64) -> u64 {
    if m == 1 {
        1
    } else {
        t % m
    }
}

/// A subgroup of (Z/m)^x, stored as a sorted residue list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisSubgroup {
    pub modulus: u64,
    pub residues: Vec<u64>,
    /// Prime the group was built for, with the split m = q * mu.
    pub prime: Option<u64>,
    pub q: u64,
    pub mu: u64,
}

impl GaloisSubgroup {
    /// Full unit group mod `m` (Gal(Q(zeta_m)/Q)).
    pub fn full(m: u64) -> Self {
        GaloisSubgroup { modulus: m, residues: units(m), prime: None, q: 1, mu: m }
    }

    /// Subgroup generated by the given residues.
    pub fn generated(m: u64, gens: &[u64]) -> Self {
        let mut set = vec![1];
        let mut i = 0;
        while i < set.len() {
            for &g in gens {
                let x = unit_reduce(set[i] * unit_reduce(g, m), m);
                if !set.contains(&x) {
                    set.push(x);
                }
            }
            i += 1;
        }
        set.sort_unstable();
        GaloisSubgroup { modulus: m, residues: set, prime: None, q: 1, mu: m }
    }

    pub fn from_residues(m: u64, mut residues: Vec<u64>) -> Self {
        residues.sort_unstable();
        residues.dedup();
        GaloisSubgroup { modulus: m, residues, prime: None, q: 1, mu: m }
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, t: u64) -> bool {
        self.residues.binary_search(&unit_reduce(t, self.modulus)).is_ok()
    }

    pub fn intersect(&self, other: &GaloisSubgroup) -> GaloisSubgroup {
        assert_eq!(self.modulus, other.modulus);
        let residues = self
            .residues
            .iter()
            .copied()
            .filter(|&t| other.contains(t))
            .collect();
        GaloisSubgroup::from_residues(self.modulus, residues)
    }

    /// Is the group cyclic? Returns a generator if so.
    pub fn cyclic_generator(&self) -> Option<u64> {
        let n = self.len() as u64;
        self.residues
            .iter()
            .copied()
            .find(|&t| mult_order(t, self.modulus) == n)
    }

    /// The Sylow subgroup for the prime `q`.
    pub fn sylow(&self, q: u64) -> GaloisSubgroup {
        let residues = self
            .residues
            .iter()
            .copied()
            .filter(|&t| {
                let o = mult_order(t, self.modulus);
                p_part(o, q) == o
            })
            .collect();
        GaloisSubgroup::from_residues(self.modulus, residues)
    }

    /// One representative per coset of `sub` (a subgroup of self).
    pub fn coset_reps(&self, sub: &GaloisSubgroup) -> Vec<u64> {
        let m = self.modulus;
        let mut seen: Vec<u64> = Vec::new();
        let mut reps = Vec::new();
        for &t in &self.residues {
            if seen.contains(&t) {
                continue;
            }
            reps.push(t);
            for &s in &sub.residues {
                seen.push(unit_reduce(t * s, m));
            }
        }
        reps
    }
}

/// T_m for the prime `p`: units t mod m with t mod mu in <p mod mu>, where
/// q is the p-part of m and mu = m / q. This is Gal(Q_p(zeta_m)/Q_p).
pub fn galois_t_m(m: u64, p: u64) -> Result<GaloisSubgroup> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::Argument("modulus must be positive".into()));
    }
    let q = p_part(m, p);
    let mu = m / q;
    let ord = mult_order(p % mu.max(1), mu);
    let powers: Vec<u64> = (0..ord).map(|i| pow_mod(p, i, mu)).collect();
    let residues: Vec<u64> = units(m)
        .into_iter()
        .filter(|&t| mu == 1 || powers.contains(&(t % mu)))
        .collect();
    Ok(GaloisSubgroup { modulus: m, residues, prime: Some(p), q, mu })
}

/// Split `items` into classes of the equivalence relation `rel`. Each item is
/// compared against the first member of the existing cells, in order.
pub fn partition_by<T: Clone>(items: &[T], rel: impl Fn(&T, &T) -> bool) -> Vec<Vec<T>> {
    let mut cells: Vec<Vec<T>> = Vec::new();
    for x in items {
        match cells.iter_mut().find(|c| rel(&c[0], x)) {
            Some(cell) => cell.push(x.clone()),
            None => cells.push(vec![x.clone()]),
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        assert_eq!(prime_residues(12), vec![1, 5, 7, 11]);
        assert!(prime_residues(1).is_empty());
        assert_eq!(units(1), vec![1]);
        assert_eq!(prime_residues(15), vec![1, 2, 4, 7, 8, 11, 13, 14]);
    }

    #[test]
    fn t_m_examples() {
        assert_eq!(galois_t_m(8, 2).unwrap().residues, vec![1, 3, 5, 7]);
        assert_eq!(galois_t_m(7, 2).unwrap().residues, vec![1, 2, 4]);
        assert_eq!(galois_t_m(15, 2).unwrap().residues, vec![1, 2, 4, 8]);
        assert_eq!(galois_t_m(6, 3).unwrap().residues, vec![1, 5]);
        assert_eq!(galois_t_m(1, 5).unwrap().residues, vec![1]);
        assert!(galois_t_m(12, 4).is_err());
    }

    #[test]
    fn t_m_size_formula() {
        for m in 1..200u64 {
            for p in [2u64, 3, 5, 7, 11, 13] {
                let t = galois_t_m(m, p).unwrap();
                let q = p_part(m, p);
                let mu = m / q;
                assert_eq!(t.len() as u64, euler_phi(q) * mult_order(p % mu.max(1), mu));
                assert_eq!(euler_phi(m) % t.len() as u64, 0);
                if m % p != 0 {
                    assert_eq!(t, GaloisSubgroup { prime: Some(p), q: 1, mu: m, ..GaloisSubgroup::generated(m, &[p]) });
                }
            }
        }
    }

    #[test]
    fn partition_examples() {
        let parity = partition_by(&[1, 2, 3, 4], |a, b| a % 2 == b % 2);
        assert_eq!(parity, vec![vec![1, 3], vec![2, 4]]);
        let empty: Vec<Vec<i32>> = partition_by(&[], |_: &i32, _: &i32| true);
        assert!(empty.is_empty());
        let items: Vec<u32> = (1..=12).collect();
        let cells = partition_by(&items, |a, b| a % 3 == b % 3);
        assert_eq!(cells.len(), 3);
        assert!(cells.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(36), 12);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(5, 1), 1);
        assert_eq!(valuation(48, 2), 4);
    }
}
