//! Local Schur indices of cyclotomic algebras by local class field theory.
//!
//! At a prime P of the center F over p, the completed algebra is the crossed
//! product of Q_p(zeta_k) by the decomposition group D = S meet T_k(p). For a
//! prime q with D_q cyclic, generated by d with u_d^f = zeta^j, the q-part of
//! the index is the order of the norm residue symbol of zeta^j. It equals the
//! Artin symbol of N(zeta^j) in Q_p, a root of unity, and its order is read
//! off the ramified part (Z/p^e)^x of T_k(p).

use super::shoda::CyclotomicAlgebra;
use crate::error::{Error, Result};
use crate::numtheory::{galois_t_m, gcd, mult_order, p_part, prime_divisors, valuation, GaloisSubgroup};

/// The index at a place split into its 2-part and odd part; `None` marks a
/// part the cyclic method cannot see (a non-cyclic Sylow subgroup of D).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalIndex {
    pub two: Option<u64>,
    pub odd: Option<u64>,
}

impl LocalIndex {
    pub const ONE: LocalIndex = LocalIndex { two: Some(1), odd: Some(1) };

    pub fn value(&self) -> Option<u64> {
        Some(self.two? * self.odd?)
    }
}

/// q-part of the index at p from the cocycle exponent of a generator of D_q.
fn cyclic_part(alg: &CyclotomicAlgebra, p: u64, t: &GaloisSubgroup, dq: &GaloisSubgroup, delta: u64) -> Result<u64> {
    let k = alg.conductor;
    let j = alg
        .cocycle_exponent(delta)
        .ok_or_else(|| Error::Internal(format!("residue {delta} does not act")))?;
    let sum: u64 = t.coset_reps(dq).iter().sum();
    let c = (j as u128 * sum as u128 % k as u128) as u64;
    let ob = k / gcd(k, c);
    let e = valuation(k, p);
    let index = if e == 0 || ob == 1 {
        1
    } else if p == 2 {
        if ob != 2 {
            return Err(Error::Internal(format!("norm zeta_{k}^{c} is not in Q_2")));
        }
        if e >= 2 {
            2
        } else {
            1
        }
    } else {
        if (p - 1) % ob != 0 {
            return Err(Error::Internal(format!("norm zeta_{k}^{c} is not in Q_{p}")));
        }
        ob
    };
    let q = prime_divisors(dq.len() as u64)[0];
    if p_part(index, q) != index {
        return Err(Error::Internal(format!("local index {index} at {p} is not a power of {q}")));
    }
    Ok(index)
}

/// The index at the finite prime p.
pub fn finite_local_index(alg: &CyclotomicAlgebra, p: u64, check_uniform: bool) -> Result<LocalIndex> {
    let k = alg.conductor;
    if k <= 2 {
        return Ok(LocalIndex::ONE);
    }
    let t = galois_t_m(k, p)?;
    let s = GaloisSubgroup::from_residues(k, alg.residues());
    let d = s.intersect(&t);
    let mut out = LocalIndex::ONE;
    for q in prime_divisors(d.len() as u64) {
        let dq = d.sylow(q);
        let part = match dq.cyclic_generator() {
            None => None,
            Some(delta) => {
                let idx = cyclic_part(alg, p, &t, &dq, delta)?;
                if check_uniform {
                    // every generator of D_q, with its own preimage in N,
                    // must give the same index
                    let f = dq.len() as u64;
                    for &other in &dq.residues {
                        if mult_order(other, k) == f && cyclic_part(alg, p, &t, &dq, other)? != idx {
                            return Err(Error::Internal(format!(
                                "local index at {p} depends on the generator of D_{q}"
                            )));
                        }
                    }
                }
                Some(idx)
            }
        };
        if q == 2 {
            out.two = part;
        } else {
            out.odd = match (out.odd, part) {
                (Some(a), Some(b)) => Some(a * b),
                _ => None,
            };
        }
    }
    Ok(out)
}

/// The index at the real places: 2 iff complex conjugation acts and
/// u_{-1}^2 = -1.
pub fn infinite_local_index(alg: &CyclotomicAlgebra) -> Result<u64> {
    let k = alg.conductor;
    if k <= 2 {
        return Ok(1);
    }
    match alg.cocycle_exponent(k - 1) {
        None => Ok(1),
        Some(j) => {
            if 2 * j % k != 0 {
                return Err(Error::Internal(format!("u^2 = zeta_{k}^{j} is not real")));
            }
            Ok(if j == 0 { 1 } else { 2 })
        }
    }
}
