//! Complex character tables, Frobenius-Schur indicators and Galois orbits of
//! irreducible characters.

mod dixon;
mod fp;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

pub use dixon::class_mult_coefficients;

use crate::error::{Error, Result};
use crate::group::{power_class, FiniteGroup};
use crate::numtheory::{units, Cyclotomic, GaloisSubgroup, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// Values per class, stored at conductor m = exponent of G.
    pub values: Vec<Cyclotomic>,
    pub degree: u64,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: usize,
    pub exponent: u64,
    pub class_sizes: Vec<usize>,
    /// Class of the inverses of each class.
    pub inverse_class: Vec<usize>,
    pub characters: Vec<Character>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    /// (1/|G|) sum_c |c| a(c) conj(b(c)) for class functions a, b.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (i, size) in self.class_sizes.iter().enumerate() {
            let conj_b = b[self.inverse_class[i]].clone();
            let term = (&a[i] * &conj_b).scale(&Rational::from_integer(BigInt::from(*size)));
            acc = &acc + &term;
        }
        acc.scale(&Rational::new(BigInt::one(), BigInt::from(self.order)))
    }

    /// Inner product <chi_i, chi_j>.
    pub fn inner(&self, i: usize, j: usize) -> Cyclotomic {
        self.inner_product(&self.characters[i].values, &self.characters[j].values)
    }
}

/// Exact character table by Dixon's method. Characters are sorted by degree
/// and then by their values, compared lexicographically (larger first) on the
/// canonical coefficients at conductor m; the trivial character comes first.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let modular = dixon::modular_characters(g)?;
    let m = g.exponent();
    let mut characters = Vec::with_capacity(modular.chars.len());
    for (d, vals) in &modular.chars {
        let values = dixon::lift_character(g, &modular, *d, vals)?;
        for v in &values {
            if m % v.normalize().stored_conductor() != 0 {
                return Err(Error::Internal("character value outside Q(zeta_m)".into()));
            }
        }
        characters.push(Character { values, degree: *d });
    }
    let keys: Vec<Vec<Vec<Rational>>> = characters
        .iter()
        .map(|c| c.values.iter().map(|v| v.key_at(m)).collect())
        .collect();
    let mut idx: Vec<usize> = (0..characters.len()).collect();
    idx.sort_by(|&a, &b| match characters[a].degree.cmp(&characters[b].degree) {
        Ordering::Equal => keys[b].cmp(&keys[a]),
        o => o,
    });
    let characters = idx.into_iter().map(|i| characters[i].clone()).collect();
    let classes = g.classes();
    Ok(CharacterTable {
        order: g.order(),
        exponent: m,
        class_sizes: classes.iter().map(|c| c.size()).collect(),
        inverse_class: classes.iter().map(|c| g.class_of(g.inv(c.representative))).collect(),
        characters,
    })
}

/// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2).
pub fn fs_indicator(g: &FiniteGroup, chi: &Character) -> Result<i32> {
    let mut acc = Cyclotomic::zero();
    for c in g.classes() {
        let sq = g.class_of(g.mul(c.representative, c.representative));
        let term = chi.values[sq].scale(&Rational::from_integer(BigInt::from(c.size())));
        acc = &acc + &term;
    }
    let nu = acc
        .to_rational()
        .map_err(|_| Error::Internal("Frobenius-Schur sum is not rational".into()))?
        / Rational::from_integer(BigInt::from(g.order()));
    if !nu.is_integer() {
        return Err(Error::Internal(format!("Frobenius-Schur indicator {nu} is not an integer")));
    }
    match nu.to_integer().to_i32() {
        Some(v @ -1..=1) => Ok(v),
        _ => Err(Error::Internal(format!("Frobenius-Schur indicator {nu} out of range"))),
    }
}

/// A Galois orbit of irreducible characters, i.e. one irreducible rational
/// representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCharClass {
    /// Indices into the character table, ascending.
    pub members: Vec<usize>,
    pub degree: u64,
    /// [Q(chi):Q], the orbit size.
    pub field_degree: usize,
    pub fs_indicator: i32,
    /// Units t mod m with chi^t = chi; the field Q(chi) is its fixed field.
    pub stabilizer: GaloisSubgroup,
}

impl RationalCharClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// The character `chi^t`, i.e. `c -> chi(power_class(c, t))`, as an index
/// into the table.
pub fn galois_image(g: &FiniteGroup, table: &CharacterTable, chi: usize, t: u64) -> Result<usize> {
    let r = g.classes().len();
    let vals: Vec<&Cyclotomic> = (0..r)
        .map(|c| &table.characters[chi].values[power_class(g, c, t)])
        .collect();
    table
        .characters
        .iter()
        .position(|psi| psi.values.iter().zip(&vals).all(|(a, b)| a == *b))
        .ok_or_else(|| Error::Internal(format!("Galois conjugate of character {chi} by {t} is not irreducible")))
}

/// Galois orbits of the irreducible characters, ordered by their smallest
/// member. Checks Berman's count against the rational classes.
pub fn rational_character_classes(g: &FiniteGroup, table: &CharacterTable) -> Result<Vec<RationalCharClass>> {
    let m = g.exponent();
    let us = units(m);
    let k = table.characters.len();
    let mut assigned = vec![false; k];
    let mut out = Vec::new();
    for chi in 0..k {
        if assigned[chi] {
            continue;
        }
        let mut members = Vec::new();
        let mut stab = Vec::new();
        for &t in &us {
            let img = galois_image(g, table, chi, t)?;
            if img == chi {
                stab.push(t);
            }
            if !members.contains(&img) {
                members.push(img);
            }
        }
        members.sort_unstable();
        for &x in &members {
            assigned[x] = true;
        }
        let c = &table.characters[chi];
        out.push(RationalCharClass {
            field_degree: members.len(),
            degree: c.degree,
            fs_indicator: fs_indicator(g, c)?,
            stabilizer: GaloisSubgroup::from_residues(m, stab),
            members,
        });
    }
    let berman = crate::rank::rational_classes(g).len();
    if out.len() != berman {
        return Err(Error::Internal(format!(
            "{} character orbits but {berman} rational classes",
            out.len()
        )));
    }
    Ok(out)
}

/// Sum of the characters in an orbit: a rational-valued class function.
pub fn orbit_trace(table: &CharacterTable, rc: &RationalCharClass) -> Result<Vec<Rational>> {
    let r = table.class_sizes.len();
    (0..r)
        .map(|c| {
            let mut acc = Cyclotomic::zero();
            for &i in &rc.members {
                acc = &acc + &table.characters[i].values[c];
            }
            acc.to_rational()
        })
        .collect()
}

/// Is every value of this class function zero?
pub fn is_zero_function(values: &[Cyclotomic]) -> bool {
    values.iter().all(Cyclotomic::is_zero)
}
