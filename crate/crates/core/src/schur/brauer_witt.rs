//! Brauer-Witt reduction at q = 2.
//!
//! For a subgroup E and psi in Irr(E) with Q(psi) inside F = Q(chi) and
//! <chi_E, psi> odd, the 2-parts of m_{F_P}(chi) and m_{F_P}(psi) agree at
//! every place P of F. The index of psi over F_P is its index over
//! Q(psi) divided by its gcd with the local degree [F_P : Q(psi)].

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{component_for_class, extend_index, local_degree, local_indices, two_part, GroupAnalysis, Place};
use crate::error::{Error, Result};
use crate::group::subgroup_as_group;
use crate::numtheory::{prime_divisors, Cyclotomic, GaloisSubgroup, Rational};

/// Search proper subgroups (largest first) for a character psi as above and
/// return (|E|, [(p, 2-part of the local index at p)]) for the given primes.
/// Returns None when no subgroup determines all of them.
pub(crate) fn reduce(an: &GroupAnalysis, idx: usize, primes: &[u64]) -> Result<Option<(usize, Vec<(u64, u64)>)>> {
    let g = an.group;
    let rc = &an.classes[idx];
    let chi = &an.table.characters[rc.representative()];
    let m = g.exponent();
    for sc in an.subgroup_classes() {
        if sc.order() == g.order() {
            continue;
        }
        let (sub, emb) = subgroup_as_group(g, &sc.representative);
        let sub_an = GroupAnalysis::new(&sub)?;
        let me = sub.exponent();
        let restricted: Vec<&Cyclotomic> = sub
            .classes()
            .iter()
            .map(|c| &chi.values[g.class_of(emb[c.representative])])
            .collect();
        for (ridx, rho) in sub_an.classes.iter().enumerate() {
            // Q(psi) inside Q(chi): the stabilizer of chi fixes psi
            if !rc.stabilizer.residues.iter().all(|&t| rho.stabilizer.contains(t % me.max(1))) {
                continue;
            }
            let odd = rho.members.iter().any(|&psi| {
                multiplicity(&sub_an, &restricted, psi).is_some_and(|k| k % 2 == 1)
            });
            if !odd {
                continue;
            }
            let comp = component_for_class(&sub_an, ridx);
            let sd = match comp.and_then(|c| local_indices(&c, &prime_divisors(sub.order() as u64))) {
                Ok(sd) => sd,
                Err(Error::Unsupported(_)) => continue,
                Err(e) => return Err(e),
            };
            let psi_stab = GaloisSubgroup::from_residues(
                m,
                crate::numtheory::units(m)
                    .into_iter()
                    .filter(|&t| rho.stabilizer.contains(t % me.max(1)))
                    .collect(),
            );
            let mut parts = Vec::new();
            for &p in primes {
                let old = two_part(sd.at(Place::Prime(p)));
                let deg = local_degree(m, p, &rc.stabilizer, &psi_stab)?;
                parts.push((p, extend_index(old, deg)));
            }
            return Ok(Some((sub.order(), parts)));
        }
    }
    Ok(None)
}

/// <chi_E, psi> for chi given by its values on the classes of E.
fn multiplicity(sub_an: &GroupAnalysis, restricted: &[&Cyclotomic], psi: usize) -> Option<u64> {
    let t = &sub_an.table;
    let vals = &t.characters[psi].values;
    let owned: Vec<Cyclotomic> = restricted.iter().map(|&c| c.clone()).collect();
    let ip = t.inner_product(&owned, vals).to_rational().ok()?;
    if !ip.is_integer() || ip < Rational::from_integer(BigInt::from(0)) {
        return None;
    }
    ip.to_integer().to_u64()
}
