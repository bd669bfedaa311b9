//! Dixon's modular method: irreducible characters as common eigenvectors of
//! the class matrices over F_l, lifted to cyclotomic values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numtheory::{is_prime, Cyclotomic};

const SPLIT_SEED: u64 = 0x6e65_676b_2d31;

/// Class multiplication coefficients: `a[(i*r + j)*r + k]` is the number of
/// pairs (x, y) in C_i x C_j with x*y equal to the representative of C_k.
pub fn class_mult_coefficients(g: &FiniteGroup) -> Vec<u32> {
    let r = g.classes().len();
    let mut a = vec![0u32; r * r * r];
    for (k, ck) in g.classes().iter().enumerate() {
        let z = ck.representative;
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            let (i, j) = (g.class_of(x), g.class_of(y));
            a[(i * r + j) * r + k] += 1;
        }
    }
    a
}

/// Smallest prime l = 1 mod m with l > 2 sqrt(n).
pub(crate) fn dixon_prime(m: u64, n: u64) -> u64 {
    let mut l = m + 1;
    while !(is_prime(l) && l * l > 4 * n) {
        l += m;
    }
    l
}

/// Simultaneous eigenspace decomposition. Each space is stored as rows in
/// reduced echelon form.
struct Splitter {
    p: u64,
    r: usize,
}

impl Splitter {
    /// Split the space `basis` by the eigenvalues of `m` (r x r, acting on
    /// column vectors). Returns the eigenspaces.
    fn split(&self, basis: &[Vec<u64>], m: &[Vec<u64>]) -> Vec<Vec<Vec<u64>>> {
        let (p, r) = (self.p, self.r);
        let d = basis.len();
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| b.iter().position(|&x| x != 0).unwrap())
            .collect();
        // images of basis vectors, then coordinates via pivot entries
        let images: Vec<Vec<u64>> = basis
            .iter()
            .map(|b| {
                (0..r)
                    .map(|i| {
                        m[i].iter()
                            .zip(b)
                            .fold(0, |acc, (&x, &y)| fp::add(acc, fp::mul(x, y, p), p))
                    })
                    .collect()
            })
            .collect();
        // restriction rmat[i][l] = coordinate i of image of basis vector l
        let rmat: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d).map(|l| images[l][pivots[i]]).collect())
            .collect();
        let cp = fp::charpoly(&rmat, p);
        let roots: Vec<u64> = (0..p).filter(|&x| fp::poly_eval(&cp, x, p) == 0).collect();
        if roots.len() <= 1 {
            return vec![basis.to_vec()];
        }
        let mut out = Vec::new();
        for lam in roots {
            let shifted: Vec<Vec<u64>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|l| if i == l { fp::sub(rmat[i][l], lam, p) } else { rmat[i][l] })
                        .collect()
                })
                .collect();
            let coords = fp::nullspace(&shifted, p);
            let mut vecs: Vec<Vec<u64>> = coords
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; r];
                    for (l, &cl) in c.iter().enumerate() {
                        if cl != 0 {
                            for k in 0..r {
                                v[k] = fp::add(v[k], fp::mul(cl, basis[l][k], p), p);
                            }
                        }
                    }
                    v
                })
                .collect();
            fp::rref(&mut vecs, p);
            out.push(vecs);
        }
        out
    }
}

/// Modular irreducible characters: for each, (degree, values mod l per class).
pub(crate) struct ModularTable {
    pub prime: u64,
    pub root: u64,
    pub chars: Vec<(u64, Vec<u64>)>,
}

pub(crate) fn modular_characters(g: &FiniteGroup) -> Result<ModularTable> {
    let classes = g.classes();
    let r = classes.len();
    let n = g.order() as u64;
    let m = g.exponent();
    let p = dixon_prime(m, n);
    let a = class_mult_coefficients(g);
    let mat = |j: usize| -> Vec<Vec<u64>> {
        (0..r)
            .map(|i| (0..r).map(|k| a[(j * r + i) * r + k] as u64 % p).collect())
            .collect()
    };
    let splitter = Splitter { p, r };
    let mut identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|k| u64::from(i == k)).collect())
        .collect();
    fp::rref(&mut identity, p);
    let mut spaces = vec![identity];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mj = mat(j);
        spaces = spaces
            .into_iter()
            .flat_map(|s| if s.len() > 1 { splitter.split(&s, &mj) } else { vec![s] })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut attempts = 0;
    while spaces.iter().any(|s| s.len() > 1) {
        attempts += 1;
        if attempts > 64 {
            return Err(Error::Internal(format!(
                "could not split eigenspaces of the class matrices mod {p}"
            )));
        }
        let mut comb = vec![vec![0u64; r]; r];
        for j in 0..r {
            let c: u64 = rng.gen_range(0..p);
            let mj = mat(j);
            for i in 0..r {
                for k in 0..r {
                    comb[i][k] = fp::add(comb[i][k], fp::mul(c, mj[i][k], p), p);
                }
            }
        }
        spaces = spaces
            .into_iter()
            .flat_map(|s| if s.len() > 1 { splitter.split(&s, &comb) } else { vec![s] })
            .collect();
    }
    if spaces.len() != r {
        return Err(Error::Internal(format!("found {} characters for {r} classes", spaces.len())));
    }
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let inv_class: Vec<usize> = classes.iter().map(|c| g.class_of(g.inv(c.representative))).collect();
    let mut chars = Vec::with_capacity(r);
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(Error::Internal("central character vanishes at the identity".into()));
        }
        let scale = fp::inv(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| fp::mul(x, scale, p)).collect();
        // sum_i w_i w_{i*} / |C_i| = n / d^2
        let mut acc = 0;
        for i in 0..r {
            let t = fp::mul(fp::mul(w[i], w[inv_class[i]], p), fp::inv(sizes[i] % p, p), p);
            acc = fp::add(acc, t, p);
        }
        if acc == 0 {
            return Err(Error::Internal("degenerate norm in degree recovery".into()));
        }
        let target = fp::mul(n % p, fp::inv(acc, p), p);
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| d * d % p == target)
            .ok_or_else(|| Error::Internal("no character degree matches".into()))?;
        let vals: Vec<u64> = (0..r)
            .map(|i| fp::mul(fp::mul(w[i], d % p, p), fp::inv(sizes[i] % p, p), p))
            .collect();
        chars.push((d, vals));
    }
    let root = fp::pow(fp::primitive_root(p), (p - 1) / m, p);
    Ok(ModularTable { prime: p, root, chars })
}

/// Lift a modular character to cyclotomic values at conductor m, through the
/// eigenvalue multiplicities of each class representative.
pub(crate) fn lift_character(
    g: &FiniteGroup,
    table: &ModularTable,
    degree: u64,
    vals: &[u64],
) -> Result<Vec<Cyclotomic>> {
    let p = table.prime;
    let m = g.exponent();
    let mut out = Vec::with_capacity(vals.len());
    for c in g.classes() {
        let x = c.representative;
        let o = c.element_order;
        let zo = fp::pow(table.root, m / o, p);
        let zo_inv = fp::inv(zo, p);
        let powers: Vec<u64> = (0..o).map(|s| vals[g.class_of(g.pow(x, s))]).collect();
        let inv_o = fp::inv(o % p, p);
        let mut weights = vec![0i64; m as usize];
        for e in 0..o {
            let step = fp::pow(zo_inv, e, p);
            let mut acc = 0;
            let mut zpow = 1;
            for &v in &powers {
                acc = fp::add(acc, fp::mul(v, zpow, p), p);
                zpow = fp::mul(zpow, step, p);
            }
            let mult = fp::mul(acc, inv_o, p);
            if mult > degree {
                return Err(Error::Internal(format!(
                    "eigenvalue multiplicity {mult} exceeds degree {degree}"
                )));
            }
            weights[(e * (m / o)) as usize] += mult as i64;
        }
        out.push(Cyclotomic::from_int_exponent_sum(m, &weights));
    }
    Ok(out)
}
