//! Hilbert symbols (a, b)_v over Q, for the quaternion shortcut.

use crate::numtheory::{pow_mod, valuation};

/// A place of Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(u64),
    Infinite,
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "inf"),
        }
    }
}

fn split(a: i64, p: u64) -> (u32, i64) {
    let v = valuation(a.unsigned_abs(), p);
    (v, a / (p as i64).pow(v))
}

/// Legendre symbol (u/p) for p odd and p not dividing u, as +1 or -1.
fn legendre(u: i64, p: u64) -> i32 {
    let r = u.rem_euclid(p as i64) as u64;
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// The Hilbert symbol (a, b)_v for nonzero integers a, b.
pub fn hilbert_symbol(a: i64, b: i64, place: Place) -> i32 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    let p = match place {
        Place::Infinite => return if a < 0 && b < 0 { -1 } else { 1 },
        Place::Prime(p) => p,
    };
    let (alpha, u) = split(a, p);
    let (beta, v) = split(b, p);
    if p == 2 {
        let eps = |x: i64| ((x - 1) / 2).rem_euclid(2);
        let omega = |x: i64| ((x * x - 1) / 8).rem_euclid(2);
        let e = eps(u) * eps(v) + i64::from(alpha) * omega(v) + i64::from(beta) * omega(u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let mut sign = 1;
    if (alpha * beta) % 2 == 1 && (p - 1) / 2 % 2 == 1 {
        sign = -sign;
    }
    if beta % 2 == 1 {
        sign *= legendre(u, p);
    }
    if alpha % 2 == 1 {
        sign *= legendre(v, p);
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (a, b)_p = 1 iff a x^2 + b y^2 = z^2 has a primitive solution mod p^2
    /// (p odd) or mod 32; valid for a, b not divisible by p^2.
    fn brute(a: i64, b: i64, p: u64) -> i32 {
        let m = if p == 2 { 32 } else { (p * p) as i64 };
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    let primitive = [x, y, z].iter().any(|t| t % p as i64 != 0);
                    if primitive && (a * x * x + b * y * y - z * z).rem_euclid(m) == 0 {
                        return 1;
                    }
                }
            }
        }
        -1
    }

    #[test]
    fn quaternion_ramification() {
        assert_eq!(hilbert_symbol(-1, -1, Place::Prime(2)), -1);
        assert_eq!(hilbert_symbol(-1, -1, Place::Infinite), -1);
        assert_eq!(hilbert_symbol(-1, -1, Place::Prime(3)), 1);
        assert_eq!(hilbert_symbol(-3, -1, Place::Prime(3)), -1);
        assert_eq!(hilbert_symbol(-3, -1, Place::Prime(2)), 1);
        assert_eq!(hilbert_symbol(-3, 1, Place::Prime(3)), 1);
    }

    #[test]
    fn matches_brute_force() {
        for p in [2u64, 3, 5] {
            for a in [-3i64, -2, -1, 1, 2, 3, 5, 6, -5, 7] {
                for b in [-3i64, -1, 2, 3, 5, -6, 7] {
                    assert_eq!(hilbert_symbol(a, b, Place::Prime(p)), brute(a, b, p), "({a},{b})_{p}");
                }
            }
        }
    }
}
