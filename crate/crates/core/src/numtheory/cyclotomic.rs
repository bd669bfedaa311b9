//! Exact elements of cyclotomic fields Q(zeta_n).
//!
//! An element is stored at some conductor `n` as rational coefficients on
//! the power basis zeta_n^0 .. zeta_n^(phi(n)-1), reduced modulo the
//! cyclotomic polynomial. Binary operations lift both sides to the lcm of
//! the conductors; [`Cyclotomic::normalize`] finds the smallest conductor.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{euler_phi, gcd, lcm, mobius, prime_divisors};
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Reduction data for one conductor: `rows[e]` holds zeta^e in the basis.
struct Basis {
    phi: usize,
    rows: Vec<Vec<i64>>,
}

fn cyclotomic_poly(n: u64) -> Vec<i64> {
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}, low degree first.
    let mut num = vec![1i64];
    let mut den = vec![1i64];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut f = vec![0i64; d as usize + 1];
        f[0] = -1;
        f[d as usize] = 1;
        match mobius(n / d) {
            1 => num = poly_mul(&num, &f),
            -1 => den = poly_mul(&den, &f),
            _ => {}
        }
    }
    poly_div_exact(&num, &den)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn basis(n: u64) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let phi = euler_phi(n) as usize;
    let poly = cyclotomic_poly(n);
    let mut rows = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        rows.push(cur.clone());
        // multiply by x and reduce the x^phi term with the monic Phi_n
        let top = cur[phi - 1];
        for k in (1..phi).rev() {
            cur[k] = cur[k - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for k in 0..phi {
                cur[k] -= top * poly[k];
            }
        }
    }
    let b = Arc::new(Basis { phi, rows });
    cache.lock().unwrap().insert(n, b.clone());
    b
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<Rational>,
}

fn reduce_exponents(n: u64, acc: Vec<Rational>) -> Cyclotomic {
    let b = basis(n);
    let mut out = vec![Rational::zero(); b.phi];
    for (e, c) in acc.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < b.phi {
            out[e] += c;
            continue;
        }
        for (k, &r) in b.rows[e].iter().enumerate() {
            if r != 0 {
                out[k] += &c * Rational::from_integer(BigInt::from(r));
            }
        }
    }
    Cyclotomic { n, coeffs: out }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { n: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { n: 1, coeffs: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// zeta_n^e.
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        assert!(n > 0);
        let e = e.rem_euclid(n as i64) as usize;
        let row = &basis(n).rows[e];
        let coeffs = row
            .iter()
            .map(|&r| Rational::from_integer(BigInt::from(r)))
            .collect();
        Cyclotomic { n, coeffs }
    }

    pub fn zeta(n: u64) -> Self {
        Self::root_of_unity(n, 1)
    }

    /// sum over (e, c) of c * zeta_n^e, exponents taken mod n.
    pub fn from_exponent_sum<I>(n: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut acc = vec![Rational::zero(); n as usize];
        for (e, c) in terms {
            acc[e.rem_euclid(n as i64) as usize] += c;
        }
        reduce_exponents(n, acc)
    }

    /// Like [`from_exponent_sum`](Self::from_exponent_sum) with integer weights.
    pub fn from_int_exponent_sum(n: u64, weights: &[i64]) -> Self {
        assert_eq!(weights.len() as u64, n);
        let acc = weights
            .iter()
            .map(|&w| Rational::from_integer(BigInt::from(w)))
            .collect();
        reduce_exponents(n, acc)
    }

    /// The conductor this value is currently stored at (not necessarily minimal).
    pub fn stored_conductor(&self) -> u64 {
        self.n
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-express at a multiple `big` of the stored conductor.
    pub fn lift(&self, big: u64) -> Cyclotomic {
        assert!(big % self.n == 0, "lift: {} does not divide {}", self.n, big);
        if big == self.n {
            return self.clone();
        }
        let step = (big / self.n) as usize;
        let mut acc = vec![Rational::zero(); big as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[i * step] = c.clone();
            }
        }
        reduce_exponents(big, acc)
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let n = lcm(a.n, b.n);
        (a.lift(n), b.lift(n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.normalize().n == 1
    }

    pub fn to_rational(&self) -> Result<Rational> {
        let x = self.normalize();
        if x.n == 1 {
            Ok(x.coeffs[0].clone())
        } else {
            Err(Error::NotRational)
        }
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Apply the automorphism zeta_n -> zeta_n^t.
    pub fn galois_apply(&self, t: i64) -> Result<Cyclotomic> {
        let n = self.n as i64;
        let t = t.rem_euclid(n);
        if gcd(t as u64, self.n) != 1 {
            return Err(Error::Argument(format!("{t} is not a unit mod {n}")));
        }
        let mut acc = vec![Rational::zero(); self.n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[((i as i64) * t % n) as usize] += c;
            }
        }
        Ok(reduce_exponents(self.n, acc))
    }

    pub fn conj(&self) -> Cyclotomic {
        self.galois_apply(-1).expect("-1 is always a unit")
    }

    /// Is the value fixed by every automorphism t == 1 mod d (t a unit mod n)?
    fn fixed_mod(&self, d: u64) -> bool {
        let n = self.n;
        let mut t = 1 + d;
        while t < n {
            if gcd(t, n) == 1 && self.galois_apply(t as i64).unwrap() != *self {
                return false;
            }
            t += d;
        }
        true
    }

    /// Smallest conductor representation.
    pub fn normalize(&self) -> Cyclotomic {
        if self.n == 1 {
            return self.clone();
        }
        let mut d = self.n;
        for p in prime_divisors(self.n) {
            while d % p == 0 && self.fixed_mod(d / p) {
                d /= p;
            }
        }
        if d % 4 == 2 {
            d /= 2;
        }
        if d == self.n {
            return self.clone();
        }
        self.descend(d)
    }

    /// Express the value (known to lie in Q(zeta_d)) at conductor d by solving
    /// the linear system against the lifted basis of Q(zeta_d).
    fn descend(&self, d: u64) -> Cyclotomic {
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.coeffs.len();
        let cols: Vec<Cyclotomic> = (0..phi_d)
            .map(|j| Cyclotomic::root_of_unity(d, j as i64).lift(self.n))
            .collect();
        // augmented system: rows = coordinates at conductor n
        let mut m: Vec<Vec<Rational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..phi_d {
            let Some(pr) = (row..phi_n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..phi_n {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=phi_d {
                        let delta = &f * &m[row][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let mut coeffs = vec![Rational::zero(); phi_d];
        for (i, &col) in pivots.iter().enumerate() {
            coeffs[col] = m[i][phi_d].clone();
        }
        Cyclotomic { n: d, coeffs }
    }

    /// Canonical coefficient vector at conductor `n` (must be a multiple of
    /// the stored conductor); used for deterministic ordering.
    pub fn key_at(&self, n: u64) -> Vec<Rational> {
        self.lift(n).coeffs
    }

    /// Compare two values lexicographically on their coefficients at
    /// conductor `n`.
    pub fn cmp_at(&self, other: &Cyclotomic, n: u64) -> Ordering {
        self.key_at(n).cmp(&other.key_at(n))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n == rhs.n {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            return Cyclotomic { n: self.n, coeffs };
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        &a + &b
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n != rhs.n {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        let n = self.n as usize;
        let mut acc = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % n] += a * b;
                }
            }
        }
        reduce_exponents(self.n, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Text syntax: `z8+z8^3`, `-1`, `3/2*z5^2-z5`. Exponents refer to the
/// canonical basis at the minimal conductor.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.normalize();
        let mut out = String::new();
        for (e, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let monomial = match e {
                0 => String::new(),
                1 => format!("z{}", x.n),
                _ => format!("z{}^{}", x.n, e),
            };
            if monomial.is_empty() {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{}*{}", fmt_rational(&mag), monomial));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len(), 49);
    }

    #[test]
    fn zeta3_sum() {
        let z = Cyclotomic::zeta(3);
        let z2 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(&z + &z2, Cyclotomic::from_int(-1));
    }

    #[test]
    fn galois_composition() {
        let z = Cyclotomic::zeta(5);
        let twice = z.galois_apply(2).unwrap().galois_apply(2).unwrap();
        assert_eq!(twice, z.galois_apply(4).unwrap());
        assert!(z.galois_apply(5).is_err());
    }

    #[test]
    fn real_part_of_zeta8() {
        let x = &Cyclotomic::zeta(8) + &Cyclotomic::root_of_unity(8, -1);
        assert_eq!(&x * &x, Cyclotomic::from_int(2));
        assert_eq!((&x * &x).to_rational().unwrap(), q(2, 1));
        assert!(x.to_rational().is_err());
    }

    #[test]
    fn normalization_drops_conductor() {
        let x = Cyclotomic::root_of_unity(12, 4); // zeta_3
        let y = x.normalize();
        assert_eq!(y.stored_conductor(), 3);
        assert_eq!(y, Cyclotomic::zeta(3));
        let minus_one = Cyclotomic::root_of_unity(10, 5).normalize();
        assert_eq!(minus_one.stored_conductor(), 1);
        // zeta_5 read at conductor 10 is -zeta_10^6, conductor 5
        assert_eq!(Cyclotomic::root_of_unity(10, 2).normalize().stored_conductor(), 5);
        // sqrt(-3) = zeta_3 - zeta_3^2 has conductor 3
        let s = &Cyclotomic::zeta(3) - &Cyclotomic::root_of_unity(3, 2);
        assert_eq!(s.lift(24).normalize().stored_conductor(), 3);
    }

    #[test]
    fn display_syntax() {
        assert_eq!(Cyclotomic::from_int(-1).to_string(), "-1");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        let x = &Cyclotomic::root_of_unity(5, 2) + &Cyclotomic::root_of_unity(5, 3);
        assert_eq!(x.to_string(), "z5^2+z5^3");
        let h = Cyclotomic::zeta(4).scale(&q(1, 2));
        assert_eq!(h.to_string(), "1/2*z4");
    }

    #[test]
    fn mixed_conductors() {
        let i = Cyclotomic::zeta(4);
        let w = Cyclotomic::zeta(3);
        let prod = &i * &w;
        assert_eq!(prod.stored_conductor(), 12);
        assert_eq!(prod, Cyclotomic::root_of_unity(12, 7));
    }
}
