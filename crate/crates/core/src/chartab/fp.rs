//! Dense linear algebra over a prime field F_p, p < 2^32.

pub(crate) fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub(crate) fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow(a: u64, e: u64, p: u64) -> u64 {
    crate::numtheory::pow_mod(a, e, p)
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow(a, p - 2, p)
}

/// A generator of F_p^x.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let qs = crate::numtheory::prime_divisors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let iv = inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul(*x, iv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    let t = mul(f, m[r][k], p);
                    m[i][k] = sub(m[i][k], t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of the right null space {x : m x = 0}.
pub(crate) fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = sub(0, a[i][f], p);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial det(xI - a), coefficients low degree first,
/// via reduction to Hessenberg form.
pub(crate) fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let iv = inv(h[j + 1][j], p);
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let f = mul(h[k][j], iv, p);
            for c in 0..n {
                let t = mul(f, h[j + 1][c], p);
                h[k][c] = sub(h[k][c], t, p);
            }
            for row in h.iter_mut() {
                let t = mul(f, row[k], p);
                row[j + 1] = add(row[j + 1], t, p);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add(next[d + 1], c, p);
            next[d] = sub(next[d], mul(h[k][k], c, p), p);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mul(h[i][k], prod, p);
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}
