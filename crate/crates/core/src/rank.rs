//! The free rank r of K_{-1}(Z[G]) from rational and Q_p-conjugacy classes.

use crate::error::{Error, Result};
use crate::group::{power_class, FiniteGroup};
use crate::numtheory::{galois_t_m, partition_by, prime_divisors, units, GaloisSubgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBreakdown {
    /// Number of rational conjugacy classes.
    pub r_q: usize,
    /// (p, number of Q_p-classes of p-singular elements) for each p dividing |G|.
    pub singular: Vec<(u64, usize)>,
    pub r: i64,
}

/// Partition the classes of `g` (given by index) into orbits of
/// `c -> power_class(c, t)`, t ranging over `t_set`. Classes are bucketed by
/// element order first; cells come out sorted by their smallest class index.
fn galois_cells(g: &FiniteGroup, classes: &[usize], t_set: &[u64]) -> Vec<Vec<usize>> {
    let mut by_order: Vec<(u64, Vec<usize>)> = Vec::new();
    for &c in classes {
        let o = g.classes()[c].element_order;
        match by_order.iter_mut().find(|(k, _)| *k == o) {
            Some((_, v)) => v.push(c),
            None => by_order.push((o, vec![c])),
        }
    }
    let mut cells = Vec::new();
    for (_, bucket) in by_order {
        let images: Vec<(usize, Vec<usize>)> = bucket
            .iter()
            .map(|&c| (c, t_set.iter().map(|&t| power_class(g, c, t)).collect()))
            .collect();
        let part = partition_by(&images, |a, b| a.1.contains(&b.0));
        cells.extend(part.into_iter().map(|cell| cell.into_iter().map(|(c, _)| c).collect()));
    }
    cells.sort_by_key(|c: &Vec<usize>| c[0]);
    cells
}

/// Rational classes: c ~ d iff power_class(c, t) = d for a unit t mod m.
pub fn rational_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..g.classes().len()).collect();
    galois_cells(g, &all, &units(g.exponent()))
}

/// Are the classes `c` and `d` Q_p-conjugate?
pub fn qp_conjugate(g: &FiniteGroup, p: u64, c: usize, d: usize) -> Result<bool> {
    let t = galois_t_m(g.exponent(), p)?;
    Ok(t.residues.iter().any(|&s| power_class(g, c, s) == d))
}

/// Q_p-classes of p-singular elements.
pub fn singular_qp_classes(g: &FiniteGroup, p: u64) -> Result<Vec<Vec<usize>>> {
    if g.order() as u64 % p != 0 {
        return Err(Error::Argument(format!("{p} does not divide |G| = {}", g.order())));
    }
    let t: GaloisSubgroup = galois_t_m(g.exponent(), p)?;
    let singular: Vec<usize> = (0..g.classes().len())
        .filter(|&c| g.classes()[c].element_order % p == 0)
        .collect();
    Ok(galois_cells(g, &singular, &t.residues))
}

pub fn r_of_group(g: &FiniteGroup) -> Result<RankBreakdown> {
    let r_q = rational_classes(g).len();
    let mut singular = Vec::new();
    for p in prime_divisors(g.order() as u64) {
        singular.push((p, singular_qp_classes(g, p)?.len()));
    }
    let r = 1 - r_q as i64 + singular.iter().map(|&(_, k)| k as i64).sum::<i64>();
    if r < 0 {
        return Err(Error::Internal(format!("negative rank {r}")));
    }
    Ok(RankBreakdown { r_q, singular, r })
}

/// Number of Q_p-conjugacy classes of all elements (r_{Q_p}).
pub fn qp_class_count(g: &FiniteGroup, p: u64) -> Result<usize> {
    let t = galois_t_m(g.exponent(), p)?;
    let all: Vec<usize> = (0..g.classes().len()).collect();
    Ok(galois_cells(g, &all, &t.residues).len())
}

/// Number of F_p-conjugacy classes of p-regular elements (r_{F_p}, Berman),
/// where the Galois action is by powers of the Frobenius p.
pub fn fp_regular_class_count(g: &FiniteGroup, p: u64) -> Result<usize> {
    let m = g.exponent();
    let mu = m / crate::numtheory::p_part(m, p);
    let frob = GaloisSubgroup::generated(mu, &[p]);
    // lift each power of p mod mu to a unit mod m acting the same way on
    // p-regular elements (their orders divide mu)
    let lifts: Vec<u64> = frob
        .residues
        .iter()
        .map(|&t| {
            units(m)
                .into_iter()
                .find(|&u| mu == 1 || u % mu == t)
                .expect("units surject onto units mod mu")
        })
        .collect();
    let regular: Vec<usize> = (0..g.classes().len())
        .filter(|&c| g.classes()[c].element_order % p != 0)
        .collect();
    Ok(galois_cells(g, &regular, &lifts).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{builtin_group, Family};

    fn grp(f: Family) -> FiniteGroup {
        builtin_group(&f).unwrap()
    }

    #[test]
    fn rational_class_examples() {
        let c4 = grp(Family::Cyclic(4));
        let cells = rational_classes(&c4);
        assert_eq!(cells.len(), 3);
        assert_eq!(cells.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 2]);
        assert_eq!(rational_classes(&grp(Family::Sym(3))).len(), 3);
        assert_eq!(rational_classes(&grp(Family::Cyclic(6))).len(), 4);
    }

    #[test]
    fn qp_conjugacy_examples() {
        let c6 = grp(Family::Cyclic(6));
        let gen = c6.class_of(c6.generators()[0]);
        let g5 = c6.class_of(c6.pow(c6.generators()[0], 5));
        assert!(qp_conjugate(&c6, 2, gen, gen).unwrap());
        assert!(qp_conjugate(&c6, 2, gen, g5).unwrap());
        let c8 = grp(Family::Cyclic(8));
        let a = c8.class_of(c8.generators()[0]);
        let a3 = c8.class_of(c8.pow(c8.generators()[0], 3));
        assert!(qp_conjugate(&c8, 2, a, a3).unwrap());
    }

    #[test]
    fn singular_examples() {
        let c6 = grp(Family::Cyclic(6));
        assert_eq!(singular_qp_classes(&c6, 2).unwrap().len(), 2);
        assert_eq!(singular_qp_classes(&c6, 3).unwrap().len(), 2);
        assert!(singular_qp_classes(&c6, 5).is_err());
        let q16 = grp(Family::Dicyclic(4));
        let cells = singular_qp_classes(&q16, 2).unwrap();
        // 6 non-identity classes; a and a^3 fuse, so r = 1 - 6 + 5 = 0
        assert_eq!(cells.len(), 5);
        assert_eq!(rational_classes(&q16).len(), 6);
        assert_eq!(cells.iter().map(Vec::len).sum::<usize>(), q16.classes().len() - 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(r_of_group(&grp(Family::Cyclic(1))).unwrap().r, 0);
        assert_eq!(r_of_group(&grp(Family::Cyclic(12))).unwrap().r, 2);
        assert_eq!(r_of_group(&grp(Family::SL25)).unwrap().r, 2);
        assert_eq!(r_of_group(&grp(Family::Cyclic(14))).unwrap().r, 2);
        assert_eq!(r_of_group(&grp(Family::Cyclic(6))).unwrap().r, 1);
    }

    #[test]
    fn berman_difference_matches_singular_count() {
        for f in [Family::Cyclic(12), Family::Sym(4), Family::SL23, Family::Dicyclic(6)] {
            let g = grp(f);
            for p in prime_divisors(g.order() as u64) {
                let diff = qp_class_count(&g, p).unwrap() - fp_regular_class_count(&g, p).unwrap();
                assert_eq!(diff, singular_qp_classes(&g, p).unwrap().len());
            }
        }
    }
}
