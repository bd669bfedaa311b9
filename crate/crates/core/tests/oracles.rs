//! Independent brute-force oracles, checked against the library over the
//! bundled catalog.

use std::path::PathBuf;

use negk_core::chartab::character_table;
use negk_core::group::DEFAULT_ORDER_CAP;
use negk_core::{builtin_group, k_minus_one, r_of_group, Catalog, Cyclotomic, Family, FiniteGroup};

fn catalog() -> Catalog {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog");
    Catalog::load(&dir).expect("bundled catalog loads")
}

fn groups_up_to(max: usize) -> Vec<(String, FiniteGroup)> {
    catalog()
        .in_range(1, max)
        .into_iter()
        .map(|e| (format!("({},{}) {}", e.order, e.index, e.name), e.build(DEFAULT_ORDER_CAP).unwrap()))
        .collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn split_off(mut n: u64, p: u64) -> (u64, u64) {
    let mut pa = 1;
    while n % p == 0 {
        n /= p;
        pa *= p;
    }
    (pa, n)
}

fn ord_mod(p: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let (mut x, mut k) = (p % m, 1);
    while x != 1 {
        x = x * p % m;
        k += 1;
    }
    k
}

fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    if a != b {
        parent[a.max(b)] = a.min(b);
    }
}

/// Number of classes of the elements passing `keep` under conjugation and
/// x -> x^t for every t in `powers`.
fn element_classes(g: &FiniteGroup, keep: impl Fn(usize) -> bool, powers: &[u64]) -> usize {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for x in (0..n).filter(|&x| keep(x)) {
        for y in 0..n {
            let c = g.mul(g.mul(y, x), g.inv(y));
            union(&mut parent, x, c);
        }
        for &t in powers {
            union(&mut parent, x, g.pow(x, t));
        }
    }
    let mut roots: Vec<usize> = (0..n).filter(|&x| keep(x)).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// r = 1 - r_Q + sum over p of (r_{Q_p} - r_{F_p}), all counts taken element
/// by element.
fn brute_force_r(g: &FiniteGroup) -> i64 {
    let n = g.order() as u64;
    let m = (0..g.order()).map(|x| g.element_order(x)).fold(1, |a, b| a / gcd(a, b) * b);
    let units: Vec<u64> = (1..=m).filter(|&t| gcd(t, m) == 1).collect();
    let r_q = element_classes(g, |_| true, &units) as i64;
    let mut r = 1 - r_q;
    for p in primes_of(n) {
        let (_, m_prime) = split_off(m, p);
        let p_powers: Vec<u64> = (0..ord_mod(p, m_prime)).map(|k| p.pow(k as u32) % m_prime).collect();
        let t_qp: Vec<u64> = units.iter().copied().filter(|t| p_powers.contains(&(t % m_prime))).collect();
        let r_qp = element_classes(g, |_| true, &t_qp) as i64;
        let frob: Vec<u64> = (0..ord_mod(p, m_prime)).map(|k| p.pow(k as u32)).collect();
        let r_fp = element_classes(g, |x| g.element_order(x) % p != 0, &frob) as i64;
        r += r_qp - r_fp;
    }
    r
}

/// Closed form for cyclic groups: Q_p(zeta_d) has degree phi(p^a) * ord_{d'}(p)
/// over Q_p for d = p^a d'.
fn cyclic_r(n: u64) -> i64 {
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut r = 1 - divisors.len() as i64;
    for p in primes_of(n) {
        let qp: u64 = divisors
            .iter()
            .map(|&d| {
                let (pa, d1) = split_off(d, p);
                phi(d) / (phi(pa) * ord_mod(p, d1))
            })
            .sum();
        let fp: u64 = divisors.iter().filter(|&&d| d % p != 0).map(|&d| phi(d) / ord_mod(p, d)).sum();
        r += qp as i64 - fp as i64;
    }
    r
}

#[test]
fn rank_matches_element_level_count() {
    for (label, g) in groups_up_to(100) {
        let want = brute_force_r(&g);
        assert!(want >= 0, "{label}: brute-force r = {want}");
        assert_eq!(r_of_group(&g).unwrap().r, want, "{label}");
    }
}

#[test]
fn rank_of_cyclic_groups_matches_closed_form() {
    assert_eq!(cyclic_r(15), 1);
    assert_eq!(cyclic_r(6), 1);
    for n in 1..=60 {
        let g = builtin_group(&Family::Cyclic(n)).unwrap();
        assert_eq!(r_of_group(&g).unwrap().r, cyclic_r(n), "C{n}");
    }
}

/// (1/|G|) sum over g of chi(g^2), from element squares.
fn brute_force_fs(g: &FiniteGroup, values: &[Cyclotomic]) -> i64 {
    let mut acc = Cyclotomic::zero();
    for x in 0..g.order() {
        acc = &acc + &values[g.class_of(g.mul(x, x))];
    }
    let q = acc.to_rational().expect("indicator sum is rational");
    let q = q / negk_core::Rational::from_integer((g.order() as i64).into());
    assert!(q.is_integer());
    q.to_integer().try_into().unwrap()
}

/// A contributing component needs index 2 at a real place and odd index at
/// every prime, so its characters are real with indicator -1 and, by
/// reciprocity over the totally real center, the center has even degree.
#[test]
fn contributing_components_have_even_real_centers() {
    for (label, g) in groups_up_to(100) {
        let table = character_table(&g).unwrap();
        let res = k_minus_one(&g).unwrap();
        for rep in &res.components {
            let c = &rep.component;
            let fs = brute_force_fs(&g, &table.characters[c.members[0]].values);
            assert_eq!(fs, c.fs_indicator as i64, "{label} class {}", c.class_index);
            if rep.contributes {
                assert_eq!(fs, -1, "{label} class {}", c.class_index);
                assert_eq!(c.center.degree % 2, 0, "{label} class {}", c.class_index);
            }
            if fs == -1 && c.center.degree % 2 == 1 {
                assert!(!rep.contributes, "{label} class {}", c.class_index);
            }
        }
        if g.order() % 4 != 0 {
            assert_eq!(res.s, 0, "{label}");
        }
    }
}

/// s for the dicyclic groups of order 4k, k = 2..25, from the published
/// tables; a dicyclic group missing from the published list of s-positive
/// groups of order at most 100 has s = 0.
#[test]
fn dicyclic_s_values() {
    let expected: &[(u64, u64)] = &[
        (2, 0),
        (3, 0),
        (4, 1),
        (5, 1),
        (6, 1),
        (7, 0),
        (8, 1),
        (9, 0),
        (10, 1),
        (11, 0),
        (12, 2),
        (13, 1),
        (14, 1),
        (15, 2),
        (16, 1),
        (17, 1),
        (18, 2),
        (19, 0),
        (20, 2),
        (21, 1),
        (22, 1),
        (23, 0),
        (24, 2),
        (25, 2),
    ];
    for &(k, s) in expected {
        let g = builtin_group(&Family::Dicyclic(k)).unwrap();
        assert_eq!(k_minus_one(&g).unwrap().s, s, "Dicyclic({k})");
    }
}

#[test]
fn catalog_groups_have_the_declared_orders() {
    for e in catalog().entries.iter() {
        let g = e.build(DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), e.order, "({},{}) {}", e.order, e.index, e.name);
    }
}
