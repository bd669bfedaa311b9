//! Built-in group families and their permutation models.
//!
//! | family | model |
//! |---|---|
//! | `Cyclic(n)` | the n-cycle `(1,..,n)` |
//! | `Dihedral(n)`, n even | rotation `(1,..,n/2)` and reflection `i -> n/2+2-i`; orders 2 and 4 as `C2`, `C2 x C2` |
//! | `Dicyclic(k)`, order 4k | right regular action on words `a^i x^j`, `x a x^-1 = a^-1`, `x^2 = a^k` |
//! | `Sym(k)`, `k <= 5` | `(1,2)` and `(1,..,k)` |
//! | `Alt(k)`, `k <= 5` | the 3-cycles `(1,2,j)` for `3 <= j <= k` |
//! | `SL(2,3)`, `SL(2,5)` | `[[0,-1],[1,0]]`, `[[1,1],[0,1]]` acting on nonzero row vectors of F_p^2 |
//! | `BinO` | `[[0,1],[6,3]]`, `[[1,1],[4,5]]` in SL(2,7) acting on the 48 nonzero vectors of F_7^2 |
//! | `Prod(A,B)` | disjoint union of the two point sets |

use std::fmt;

use super::{FiniteGroup, Perm, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Sym(u64),
    Alt(u64),
    SL23,
    SL25,
    BinO,
    Prod(Box<Family>, Box<Family>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "Cyclic({n})"),
            Family::Dihedral(n) => write!(f, "Dihedral({n})"),
            Family::Dicyclic(n) => write!(f, "Dicyclic({n})"),
            Family::Sym(n) => write!(f, "Sym({n})"),
            Family::Alt(n) => write!(f, "Alt({n})"),
            Family::SL23 => write!(f, "SL(2,3)"),
            Family::SL25 => write!(f, "SL(2,5)"),
            Family::BinO => write!(f, "BinO"),
            Family::Prod(a, b) => write!(f, "Prod({a},{b})"),
        }
    }
}

fn cycle_perm(points: &[u32], degree: usize) -> Perm {
    Perm::from_cycles(&[points.to_vec()], degree).expect("valid cycle")
}

/// Right regular representation of a group given by a multiplication
/// function on `0..n`.
fn regular_perms(n: usize, gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> Vec<Perm> {
    gens.iter()
        .map(|&g| Perm((0..n).map(|x| mul(x, g) as u32).collect()))
        .collect()
}

/// SL(2,p) matrices acting on the nonzero row vectors of F_p^2.
fn matrix_action(p: u32, mats: &[[u32; 4]]) -> Vec<Perm> {
    let idx = |x: u32, y: u32| (x * p + y - 1) as u32;
    let n = (p * p - 1) as usize;
    mats.iter()
        .map(|m| {
            let mut img = vec![0u32; n];
            for x in 0..p {
                for y in 0..p {
                    if x == 0 && y == 0 {
                        continue;
                    }
                    let nx = (x * m[0] + y * m[2]) % p;
                    let ny = (x * m[1] + y * m[3]) % p;
                    img[idx(x, y) as usize] = idx(nx, ny);
                }
            }
            Perm(img)
        })
        .collect()
}

/// Permutation generators for a family (possibly empty for trivial groups).
pub fn family_generators(f: &Family) -> Result<Vec<Perm>> {
    let range = |what: &str, ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::Argument(format!("{what}: parameter out of range")))
        }
    };
    Ok(match f {
        Family::Cyclic(n) => {
            range("Cyclic(n) needs 1 <= n <= 2048", (1..=2048).contains(n))?;
            if *n == 1 {
                vec![]
            } else {
                let pts: Vec<u32> = (1..=*n as u32).collect();
                vec![cycle_perm(&pts, *n as usize)]
            }
        }
        Family::Dihedral(n) => {
            range("Dihedral(n) needs even 2 <= n <= 2048", *n % 2 == 0 && (2..=2048).contains(n))?;
            let k = (*n / 2) as u32;
            match k {
                1 => vec![cycle_perm(&[1, 2], 2)],
                2 => vec![cycle_perm(&[1, 2], 4), cycle_perm(&[3, 4], 4)],
                _ => {
                    let rot: Vec<u32> = (1..=k).collect();
                    let mut refl = Perm::identity(k as usize);
                    for i in 1..=k {
                        let j = (k + 1 - i) % k + 1; // i -> k + 2 - i, mod k
                        refl.0[(i - 1) as usize] = j - 1;
                    }
                    vec![cycle_perm(&rot, k as usize), refl]
                }
            }
        }
        Family::Dicyclic(k) => {
            range("Dicyclic(k) needs 1 <= k <= 512", (1..=512).contains(k))?;
            let k = *k as usize;
            let two_k = 2 * k;
            // element a^i x^j stored as i + 2k j
            let mul = |u: usize, v: usize| {
                let (i1, j1) = (u % two_k, u / two_k);
                let (i2, j2) = (v % two_k, v / two_k);
                let i2s = if j1 == 1 { (two_k - i2) % two_k } else { i2 };
                let mut i = (i1 + i2s) % two_k;
                let j = j1 + j2;
                if j == 2 {
                    i = (i + k) % two_k;
                }
                i + two_k * (j % 2)
            };
            regular_perms(4 * k, &[1, two_k], mul)
        }
        Family::Sym(k) => {
            range("Sym(k) needs 1 <= k <= 5", (1..=5).contains(k))?;
            let k = *k as u32;
            match k {
                1 => vec![],
                2 => vec![cycle_perm(&[1, 2], 2)],
                _ => {
                    let pts: Vec<u32> = (1..=k).collect();
                    vec![cycle_perm(&[1, 2], k as usize), cycle_perm(&pts, k as usize)]
                }
            }
        }
        Family::Alt(k) => {
            range("Alt(k) needs 1 <= k <= 5", (1..=5).contains(k))?;
            let k = *k as u32;
            (3..=k).map(|j| cycle_perm(&[1, 2, j], k as usize)).collect()
        }
        Family::SL23 => matrix_action(3, &[[0, 2, 1, 0], [1, 1, 0, 1]]),
        Family::SL25 => matrix_action(5, &[[0, 4, 1, 0], [1, 1, 0, 1]]),
        Family::BinO => matrix_action(7, &[[0, 1, 6, 3], [1, 1, 4, 5]]),
        Family::Prod(a, b) => {
            let ga = family_generators(a)?;
            let gb = family_generators(b)?;
            let da = ga.iter().map(Perm::degree).max().unwrap_or(0);
            let db = gb.iter().map(Perm::degree).max().unwrap_or(0);
            let mut out: Vec<Perm> = ga.iter().map(|p| p.pad(da).pad(da + db)).collect();
            out.extend(gb.iter().map(|p| p.pad(db).shifted(da, da + db)));
            out
        }
    })
}

pub fn builtin_group(f: &Family) -> Result<FiniteGroup> {
    let gens = family_generators(f)?;
    Ok(FiniteGroup::from_generators(&gens, DEFAULT_ORDER_CAP)?.with_label(f.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_exponents() {
        let cases = [
            (Family::Cyclic(1), 1, 1),
            (Family::Cyclic(6), 6, 6),
            (Family::Dihedral(2), 2, 2),
            (Family::Dihedral(4), 4, 2),
            (Family::Dihedral(8), 8, 4),
            (Family::Dicyclic(1), 4, 4),
            (Family::Dicyclic(2), 8, 4),
            (Family::Dicyclic(4), 16, 8),
            (Family::Sym(4), 24, 12),
            (Family::Alt(5), 60, 30),
            (Family::Alt(2), 1, 1),
            (Family::SL23, 24, 12),
            (Family::SL25, 120, 60),
            (Family::BinO, 48, 24),
        ];
        for (f, n, m) in cases {
            let g = builtin_group(&f).unwrap();
            assert_eq!((g.order(), g.exponent()), (n, m), "{f}");
        }
        let p = builtin_group(&Family::Prod(Box::new(Family::Cyclic(2)), Box::new(Family::Dicyclic(4)))).unwrap();
        assert_eq!(p.order(), 32);
    }

    #[test]
    fn quaternion_families_have_one_involution() {
        for f in [Family::Dicyclic(4), Family::SL23, Family::SL25, Family::BinO] {
            let g = builtin_group(&f).unwrap();
            let inv = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
            assert_eq!(inv, 1, "{f}");
        }
        assert_eq!(builtin_group(&Family::SL25).unwrap().classes().len(), 9);
    }

    #[test]
    fn ranges() {
        assert!(builtin_group(&Family::Sym(6)).is_err());
        assert!(builtin_group(&Family::Dihedral(7)).is_err());
        assert!(builtin_group(&Family::Cyclic(0)).is_err());
    }
}
