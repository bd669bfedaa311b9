//! Simple components of QG and their Schur indices, and the count s(G).
//!
//! A rational character class is matched to a strong Shoda pair when one
//! exists; its component is then a cyclic cyclotomic algebra with local
//! indices from [`local`]. Parts the cyclic method cannot see are filled in
//! by the reciprocity law or by a Brauer-Witt reduction to a subgroup, which
//! determines the 2-parts of the local indices.

mod brauer_witt;
mod hilbert;
mod local;
mod shoda;

use std::sync::OnceLock;

use rayon::prelude::*;

pub use hilbert::{hilbert_symbol, Place};
pub use local::{finite_local_index, infinite_local_index, LocalIndex};
pub use shoda::{CyclotomicAlgebra, StrongShodaPair};

use crate::chartab::{character_table, orbit_trace, rational_character_classes, CharacterTable, RationalCharClass};
use crate::error::{Error, Result};
use crate::group::{subgroup_classes, FiniteGroup, SubgroupClass};
use crate::numtheory::{divisors, euler_phi, galois_t_m, gcd, lcm, p_part, prime_divisors, units, GaloisSubgroup, Rational};
use crate::rank::{r_of_group, RankBreakdown};
use shoda::CyclicQuotient;

/// How a component was described.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    StrongShoda,
    BrauerWitt2,
    QuaternionShortcut,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::StrongShoda => "strong-shoda",
            Provenance::BrauerWitt2 => "brauer-witt-2",
            Provenance::QuaternionShortcut => "quaternion-shortcut",
        })
    }
}

/// An abelian number field as the fixed field of `fixing` in Q(zeta_f),
/// with f minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterField {
    pub conductor: u64,
    pub fixing: GaloisSubgroup,
    pub degree: u64,
}

impl CenterField {
    /// The fixed field of `stab`, a subgroup of (Z/m)^x.
    pub fn from_stabilizer(stab: &GaloisSubgroup) -> CenterField {
        let m = stab.modulus;
        let f = divisors(m)
            .into_iter()
            .find(|&f| units(m).into_iter().filter(|&t| (t - 1) % f == 0).all(|t| stab.contains(t)))
            .unwrap_or(m);
        let mut image: Vec<u64> = stab.residues.iter().map(|&t| if f == 1 { 1 } else { t % f }).collect();
        image.sort_unstable();
        image.dedup();
        let degree = euler_phi(f) / image.len() as u64;
        CenterField { conductor: f, fixing: GaloisSubgroup::from_residues(f, image), degree }
    }
}

/// One simple component of QG, attached to a rational character class.
#[derive(Clone, Debug)]
pub struct SimpleComponentDesc {
    /// Index into the rational character classes.
    pub class_index: usize,
    /// Characters of the class (indices into the character table).
    pub members: Vec<usize>,
    pub degree: u64,
    pub fs_indicator: i32,
    pub center: CenterField,
    /// Units mod exp(G) fixing the characters of the class.
    pub stabilizer: GaloisSubgroup,
    pub group_order: usize,
    /// n with A = M_n(crossed product); unknown for a reduction.
    pub matrix_size: Option<u64>,
    pub pair: Option<StrongShodaPair>,
    pub algebra: Option<CyclotomicAlgebra>,
    /// 2-parts of finite local indices found by a Brauer-Witt reduction.
    pub reduced: Vec<(u64, u64)>,
    /// Order of the subgroup used by the reduction.
    pub reduction_subgroup: Option<usize>,
    pub provenance: Provenance,
}

impl SimpleComponentDesc {
    /// Dimension over Q: [F:Q] * degree^2.
    pub fn q_dimension(&self) -> u64 {
        self.center.degree * self.degree * self.degree
    }
}

/// Local and global Schur indices of a component. Finite places are the
/// primes dividing |G|; other places have index 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurData {
    pub local_indices: Vec<(Place, u64)>,
    pub global_index: u64,
    /// Only the 2-parts of the indices are determined.
    pub parity_only: bool,
    /// Primes whose index was fixed by the reciprocity law.
    pub parity_closed: Vec<u64>,
}

impl SchurData {
    pub fn at(&self, place: Place) -> u64 {
        self.local_indices.iter().find(|(v, _)| *v == place).map(|&(_, m)| m).unwrap_or(1)
    }
}

/// Character table, rational classes and cached subgroup data of a group.
pub struct GroupAnalysis<'a> {
    pub group: &'a FiniteGroup,
    pub table: CharacterTable,
    pub classes: Vec<RationalCharClass>,
    traces: Vec<Vec<Rational>>,
    subgroups: OnceLock<Vec<SubgroupClass>>,
    candidates: OnceLock<Vec<(Vec<usize>, Vec<usize>, CyclicQuotient)>>,
}

impl<'a> GroupAnalysis<'a> {
    pub fn new(group: &'a FiniteGroup) -> Result<Self> {
        let table = character_table(group)?;
        let classes = rational_character_classes(group, &table)?;
        let traces = classes.iter().map(|rc| orbit_trace(&table, rc)).collect::<Result<Vec<_>>>()?;
        Ok(GroupAnalysis {
            group,
            table,
            classes,
            traces,
            subgroups: OnceLock::new(),
            candidates: OnceLock::new(),
        })
    }

    pub fn subgroup_classes(&self) -> &[SubgroupClass] {
        self.subgroups.get_or_init(|| subgroup_classes(self.group))
    }

    /// (H, K, H/K) for subgroup class representatives H whose index is a
    /// character degree, with H/K cyclic.
    fn candidates(&self) -> &[(Vec<usize>, Vec<usize>, CyclicQuotient)] {
        self.candidates.get_or_init(|| {
            let n = self.group.order();
            let orders: Vec<usize> = self.classes.iter().map(|rc| n / rc.degree as usize).collect();
            let mut out = Vec::new();
            for sc in self.subgroup_classes() {
                if !orders.contains(&sc.order()) {
                    continue;
                }
                for (k, q) in shoda::cyclic_quotients_of(self.group, &sc.representative) {
                    out.push((sc.representative.clone(), k, q));
                }
            }
            out
        })
    }

    fn prime_divisors(&self) -> Vec<u64> {
        prime_divisors(self.group.order() as u64)
    }
}

fn base_component(an: &GroupAnalysis, idx: usize, provenance: Provenance) -> SimpleComponentDesc {
    let rc = &an.classes[idx];
    SimpleComponentDesc {
        class_index: idx,
        members: rc.members.clone(),
        degree: rc.degree,
        fs_indicator: rc.fs_indicator,
        center: CenterField::from_stabilizer(&rc.stabilizer),
        stabilizer: rc.stabilizer.clone(),
        group_order: an.group.order(),
        matrix_size: None,
        pair: None,
        algebra: None,
        reduced: Vec::new(),
        reduction_subgroup: None,
        provenance,
    }
}

/// The strong Shoda pair and algebra of a class, if the class is strongly
/// monomial.
fn find_pair(an: &GroupAnalysis, idx: usize) -> Result<Option<(StrongShodaPair, u64, CyclotomicAlgebra)>> {
    let rc = &an.classes[idx];
    let g = an.group;
    let n = g.order();
    for (h, k, q) in an.candidates() {
        if h.len() * rc.degree as usize != n {
            continue;
        }
        if !shoda::induction_test(g, h, q, &an.traces[idx]) {
            continue;
        }
        if let Some((pair, index, alg)) = shoda::strong_shoda_data(g, h, k, q) {
            let s = alg.actions.len() as u64;
            if euler_phi(alg.conductor) / s != rc.field_degree as u64 || index * s != rc.degree {
                return Err(Error::Internal(format!(
                    "pair of index {} does not match class {idx} of degree {}",
                    n / h.len(),
                    rc.degree
                )));
            }
            return Ok(Some((pair, index, alg)));
        }
    }
    Ok(None)
}

/// The simple component of QG for the rational class `idx`.
pub fn component_for_class(an: &GroupAnalysis, idx: usize) -> Result<SimpleComponentDesc> {
    let mut comp = match find_pair(an, idx)? {
        Some((pair, index, alg)) => {
            let quaternion = an.classes[idx].field_degree == 1 && alg.actions.len() == 2;
            let prov = if quaternion { Provenance::QuaternionShortcut } else { Provenance::StrongShoda };
            let mut c = base_component(an, idx, prov);
            c.matrix_size = Some(index);
            c.pair = Some(pair);
            c.algebra = Some(alg);
            c
        }
        None => return brauer_witt_2_reduction(an, idx),
    };
    let primes = an.prime_divisors();
    let (_, missing) = assemble(&comp, &primes)?;
    if !missing.is_empty() {
        if let Some((order, parts)) = brauer_witt::reduce(an, idx, &missing)? {
            comp.reduced = parts;
            comp.reduction_subgroup = Some(order);
        }
    }
    Ok(comp)
}

/// Component data for a class through a Brauer-Witt reduction at q = 2:
/// the 2-parts of the local indices at every prime dividing |G|.
pub fn brauer_witt_2_reduction(an: &GroupAnalysis, idx: usize) -> Result<SimpleComponentDesc> {
    let mut comp = base_component(an, idx, Provenance::BrauerWitt2);
    let primes = an.prime_divisors();
    match brauer_witt::reduce(an, idx, &primes)? {
        Some((order, parts)) => {
            comp.reduced = parts;
            comp.reduction_subgroup = Some(order);
            Ok(comp)
        }
        None => {
            // the reciprocity law may still settle a single prime
            if assemble(&comp, &primes)?.1.is_empty() {
                Ok(comp)
            } else {
                Err(Error::Internal(format!(
                    "no subgroup character with odd multiplicity in class {idx}"
                )))
            }
        }
    }
}

/// Number of primes of the center above p.
fn primes_above(comp: &SimpleComponentDesc, p: u64) -> Result<u64> {
    let m = comp.stabilizer.modulus;
    let t = galois_t_m(m, p)?;
    let local_degree = t.len() / t.intersect(&comp.stabilizer).len();
    Ok(comp.center.degree / local_degree as u64)
}

/// Quaternion algebra (d, b)_Q of a component with center Q and |S| = 2.
fn quaternion_symbols(alg: &CyclotomicAlgebra) -> Result<(i64, i64)> {
    let k = alg.conductor;
    let d = match k {
        4 => -1,
        3 | 6 => -3,
        _ => return Err(Error::Internal(format!("no quaternion shape for conductor {k}"))),
    };
    let j = alg.cocycle_exponent(k - 1).unwrap_or(0);
    let b = if j == 0 {
        1
    } else if 2 * j == k {
        -1
    } else {
        return Err(Error::Internal(format!("cocycle zeta_{k}^{j} is not rational")));
    };
    Ok((d, b))
}

/// Local data from every available source; returns the primes still
/// undetermined.
fn assemble(comp: &SimpleComponentDesc, primes: &[u64]) -> Result<(SchurData, Vec<u64>)> {
    let inf = if comp.fs_indicator == -1 { 2 } else { 1 };
    if let Some(alg) = &comp.algebra {
        let computed = infinite_local_index(alg)?;
        if computed != inf {
            return Err(Error::Internal(format!(
                "index {computed} at infinity but Frobenius-Schur indicator {}",
                comp.fs_indicator
            )));
        }
    }
    let quaternion = match (&comp.algebra, comp.provenance) {
        (Some(alg), Provenance::QuaternionShortcut) => Some(quaternion_symbols(alg)?),
        _ => None,
    };
    if let Some((d, b)) = quaternion {
        if (hilbert_symbol(d, b, Place::Infinite) == -1) != (inf == 2) {
            return Err(Error::Internal("quaternion algebra disagrees at infinity".into()));
        }
    }
    let uniform = comp.group_order <= 48;
    let mut found: Vec<(u64, LocalIndex)> = Vec::new();
    for &p in primes {
        let mut li = match &comp.algebra {
            Some(alg) => finite_local_index(alg, p, uniform)?,
            None => LocalIndex { two: None, odd: None },
        };
        if let Some((d, b)) = quaternion {
            let h = if hilbert_symbol(d, b, Place::Prime(p)) == -1 { 2 } else { 1 };
            if li.value().is_some_and(|v| v != h) {
                return Err(Error::Internal(format!("Hilbert symbol at {p} disagrees with the cyclic algebra")));
            }
            li = LocalIndex { two: Some(h), odd: Some(1) };
        }
        if let Some(&(_, two)) = comp.reduced.iter().find(|&&(q, _)| q == p) {
            if li.two.is_some_and(|v| v != two) {
                return Err(Error::Internal(format!("reduction disagrees with the cyclic algebra at {p}")));
            }
            li.two = Some(two);
        }
        found.push((p, li));
    }
    let mut parity_closed = Vec::new();
    let missing: Vec<u64> = found.iter().filter(|(_, li)| li.two.is_none()).map(|&(p, _)| p).collect();
    if let [p0] = missing[..] {
        // Hilbert reciprocity: with every 2-part at most 2, the number of
        // places with even index is even. Indices at 2 are at most 2 and odd
        // p has index dividing p - 1.
        let bounded = found.iter().all(|(_, li)| li.two.map_or(true, |t| t <= 2));
        let g0 = primes_above(comp, p0)?;
        if bounded && g0 % 2 == 1 && (p0 == 2 || p0 % 4 == 3) {
            let mut count = if inf == 2 { comp.center.degree } else { 0 };
            for &(p, li) in &found {
                if li.two == Some(2) {
                    count += primes_above(comp, p)?;
                }
            }
            let two = if count % 2 == 1 { 2 } else { 1 };
            for (p, li) in found.iter_mut() {
                if *p == p0 {
                    li.two = Some(two);
                    if li.odd.is_none() && p0 == 2 {
                        li.odd = Some(1);
                    }
                }
            }
            parity_closed.push(p0);
        }
    }
    let missing: Vec<u64> = found.iter().filter(|(_, li)| li.two.is_none()).map(|&(p, _)| p).collect();
    let parity_only = found.iter().any(|(_, li)| li.odd.is_none());
    let mut local_indices: Vec<(Place, u64)> = found
        .iter()
        .map(|(p, li)| (Place::Prime(*p), li.value().unwrap_or(li.two.unwrap_or(1))))
        .collect();
    local_indices.push((Place::Infinite, inf));
    let global_index = local_indices.iter().fold(1, |acc, &(_, m)| lcm(acc, m));
    let data = SchurData { local_indices, global_index, parity_only, parity_closed };
    Ok((data, missing))
}

/// Local Schur indices at the primes `primes` (the divisors of |G|) and at
/// infinity.
pub fn local_indices(comp: &SimpleComponentDesc, primes: &[u64]) -> Result<SchurData> {
    let (data, missing) = assemble(comp, primes)?;
    if !missing.is_empty() {
        return Err(Error::Unsupported(format!(
            "local index of rational class {} undetermined at {:?}",
            comp.class_index, missing
        )));
    }
    Ok(data)
}

/// The global Schur index: lcm of the local ones.
pub fn schur_index(sd: &SchurData) -> u64 {
    sd.local_indices.iter().fold(1, |acc, &(_, m)| lcm(acc, m))
}

/// Even global index with odd local index at every listed prime.
pub fn contributes_to_s(sd: &SchurData, primes: &[u64]) -> bool {
    schur_index(sd) % 2 == 0 && primes.iter().all(|&p| sd.at(Place::Prime(p)) % 2 == 1)
}

/// A component with its Schur data.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub component: SimpleComponentDesc,
    pub schur: SchurData,
    pub contributes: bool,
}

/// Components of every rational class, in class order.
pub fn components(an: &GroupAnalysis) -> Result<Vec<ComponentReport>> {
    let primes = an.prime_divisors();
    (0..an.classes.len())
        .into_par_iter()
        .map(|idx| {
            let component = component_for_class(an, idx)?;
            let schur = local_indices(&component, &primes)?;
            let contributes = contributes_to_s(&schur, &primes);
            Ok(ComponentReport { component, schur, contributes })
        })
        .collect()
}

/// Strong Shoda pairs of the strongly monomial rational classes, one per
/// class.
pub fn strong_shoda_pairs(g: &FiniteGroup) -> Result<Vec<StrongShodaPair>> {
    let an = GroupAnalysis::new(g)?;
    let mut out = Vec::new();
    for idx in 0..an.classes.len() {
        if let Some((pair, _, _)) = find_pair(&an, idx)? {
            out.push(pair);
        }
    }
    Ok(out)
}

/// s(G) and the contributing components.
pub fn s_of_group(g: &FiniteGroup) -> Result<(usize, Vec<ComponentReport>)> {
    let an = GroupAnalysis::new(g)?;
    let comps = components(&an)?;
    let contributing: Vec<ComponentReport> = comps.into_iter().filter(|c| c.contributes).collect();
    Ok((contributing.len(), contributing))
}

/// K_{-1}(Z[G]) = Z^r + (Z/2)^s with both breakdowns.
#[derive(Clone, Debug)]
pub struct KMinusOneResult {
    pub r: u64,
    pub s: u64,
    pub rank_breakdown: RankBreakdown,
    /// Every simple component; `contributes` marks the ones counted by s.
    pub components: Vec<ComponentReport>,
}

impl KMinusOneResult {
    pub fn contributing(&self) -> impl Iterator<Item = &ComponentReport> {
        self.components.iter().filter(|c| c.contributes)
    }
}

pub fn k_minus_one(g: &FiniteGroup) -> Result<KMinusOneResult> {
    let rank_breakdown = r_of_group(g)?;
    let an = GroupAnalysis::new(g)?;
    let components = components(&an)?;
    let s = components.iter().filter(|c| c.contributes).count() as u64;
    if s > 0 && g.order() % 4 != 0 {
        return Err(Error::Internal(format!("s = {s} for a group of order {}", g.order())));
    }
    Ok(KMinusOneResult { r: rank_breakdown.r as u64, s, rank_breakdown, components })
}

/// 2-part of a local degree [F_P : F'_P'] for fields given by stabilizers
/// in (Z/m)^x with `larger` (the field F) inside the fixing group of F'.
fn local_degree(m: u64, p: u64, field: &GaloisSubgroup, subfield: &GaloisSubgroup) -> Result<u64> {
    let t = galois_t_m(m, p)?;
    let a = t.intersect(subfield).len() as u64;
    let b = t.intersect(field).len() as u64;
    if a % b != 0 {
        return Err(Error::Internal("local degrees do not divide".into()));
    }
    Ok(a / b)
}

/// Index after extending a local field by degree `deg`.
fn extend_index(index: u64, deg: u64) -> u64 {
    index / gcd(index, deg)
}

fn two_part(x: u64) -> u64 {
    p_part(x, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{builtin_group, Family};

    fn kmo(f: Family) -> KMinusOneResult {
        k_minus_one(&builtin_group(&f).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let r = kmo(Family::Cyclic(1));
        assert_eq!((r.r, r.s), (0, 0));
        let r = kmo(Family::Cyclic(6));
        assert_eq!((r.r, r.s), (1, 0));
        let r = kmo(Family::SL25);
        assert_eq!((r.r, r.s), (2, 1));
    }

    #[test]
    fn quaternion_components() {
        let q8 = builtin_group(&Family::Dicyclic(2)).unwrap();
        let an = GroupAnalysis::new(&q8).unwrap();
        let comps = components(&an).unwrap();
        let quat: Vec<_> = comps.iter().filter(|c| c.component.degree == 2).collect();
        assert_eq!(quat.len(), 1);
        let sd = &quat[0].schur;
        assert_eq!(sd.local_indices, vec![(Place::Prime(2), 2), (Place::Infinite, 2)]);
        assert_eq!(schur_index(sd), 2);
        assert!(!quat[0].contributes);
        assert_eq!(quat[0].component.provenance, Provenance::QuaternionShortcut);

        let q16 = builtin_group(&Family::Dicyclic(4)).unwrap();
        let an = GroupAnalysis::new(&q16).unwrap();
        let comps = components(&an).unwrap();
        let faithful = comps.iter().find(|c| c.component.center.degree == 2).unwrap();
        assert_eq!(faithful.component.center.conductor, 8);
        assert_eq!(faithful.schur.at(Place::Infinite), 2);
        assert_eq!(faithful.schur.at(Place::Prime(2)) % 2, 1);
        assert_eq!(schur_index(&faithful.schur), 2);
        assert!(faithful.contributes);
        let pair = faithful.component.pair.as_ref().unwrap();
        assert_eq!((pair.h.len(), pair.k.len()), (8, 1));
    }

    #[test]
    fn trivial_component() {
        let g = builtin_group(&Family::Sym(4)).unwrap();
        let an = GroupAnalysis::new(&g).unwrap();
        let c = component_for_class(&an, 0).unwrap();
        assert_eq!(c.center.degree, 1);
        assert_eq!(c.matrix_size, Some(1));
        let sd = local_indices(&c, &[2, 3]).unwrap();
        assert!(sd.local_indices.iter().all(|&(_, m)| m == 1));
        assert_eq!(schur_index(&sd), 1);
    }

    #[test]
    fn pair_lists_cover_the_group_algebra() {
        for (f, count) in [(Family::Cyclic(6), 4), (Family::Sym(3), 3), (Family::Dicyclic(2), 5)] {
            let g = builtin_group(&f).unwrap();
            let pairs = strong_shoda_pairs(&g).unwrap();
            assert_eq!(pairs.len(), count);
        }
    }

    #[test]
    fn s_examples() {
        for (f, s) in [
            (Family::Dicyclic(5), 1),
            (Family::Dicyclic(12), 2),
            (Family::Sym(4), 0),
            (Family::Prod(Box::new(Family::Cyclic(2)), Box::new(Family::Dicyclic(4))), 2),
            (Family::SL23, 0),
        ] {
            let g = builtin_group(&f).unwrap();
            assert_eq!(s_of_group(&g).unwrap().0, s, "{f}");
        }
    }

    #[test]
    fn center_fields() {
        let c = CenterField::from_stabilizer(&GaloisSubgroup::from_residues(8, vec![1, 7]));
        assert_eq!((c.conductor, c.degree), (8, 2));
        let c = CenterField::from_stabilizer(&GaloisSubgroup::from_residues(24, units(24)));
        assert_eq!((c.conductor, c.degree), (1, 1));
        let c = CenterField::from_stabilizer(&GaloisSubgroup::from_residues(12, vec![1, 7]));
        assert_eq!((c.conductor, c.degree), (3, 2));
    }
}
