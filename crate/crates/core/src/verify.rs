//! Invariant suite over groups and catalogs.
//!
//! Group laws are checked first on the raw multiplication table; the
//! character-theoretic, rank and Schur-index checks only run on tables that
//! pass them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartab::{fs_indicator, rational_character_classes};
use crate::error::Result;
use crate::group::catalog::Catalog;
use crate::group::{derived_subgroup, normal_subgroups, power_class, quotient_group, subgroup_generated, FiniteGroup};
use crate::numtheory::{units, Cyclotomic};
use crate::rank::{r_of_group, rational_classes, singular_qp_classes};
use crate::scan::par_map;
use crate::schur::{components, s_of_group, GroupAnalysis, Place};

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub group: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub groups: usize,
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: VerifyReport) {
        self.groups += other.groups;
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

struct Checker {
    label: String,
    report: VerifyReport,
}

impl Checker {
    fn new(label: &str) -> Self {
        Checker { label: label.to_string(), report: VerifyReport { groups: 1, ..Default::default() } }
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.report.checks += 1;
        if !ok {
            self.report.failures.push(CheckFailure {
                group: self.label.clone(),
                check: name.to_string(),
                detail: detail(),
            });
        }
        ok
    }

    fn fail(&mut self, name: &str, detail: String) {
        self.check(name, false, || detail);
    }
}

/// Associativity is checked exhaustively up to this order, on a seeded
/// sample beyond it.
const FULL_ASSOCIATIVITY: usize = 128;

fn table_laws(g: &FiniteGroup, c: &mut Checker) -> bool {
    let n = g.order();
    let bad_identity = (0..n).find(|&x| g.mul(0, x) != x || g.mul(x, 0) != x);
    let ok = c.check("identity law", bad_identity.is_none(), || {
        format!("element 0 is not a two-sided identity at element {}", bad_identity.unwrap())
    });
    if !ok {
        return false;
    }
    let bad_inverse = (0..n).find(|&x| !(0..n).any(|y| g.mul(x, y) == 0 && g.mul(y, x) == 0));
    let ok = c.check("inverse law", bad_inverse.is_none(), || {
        format!("element {} has no two-sided inverse", bad_inverse.unwrap())
    });
    if !ok {
        return false;
    }
    let assoc = |a: usize, b: usize, d: usize| g.mul(g.mul(a, b), d) == g.mul(a, g.mul(b, d));
    let bad = if n <= FULL_ASSOCIATIVITY {
        (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |d| (a, b, d))))
            .find(|&(a, b, d)| !assoc(a, b, d))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        (0..200_000)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            .find(|&(a, b, d)| !assoc(a, b, d))
    };
    c.check("associativity", bad.is_none(), || format!("fails at {:?}", bad.unwrap()))
}

fn class_checks(g: &FiniteGroup, c: &mut Checker) {
    let n = g.order();
    let sizes: Vec<usize> = g.classes().iter().map(|k| k.size()).collect();
    c.check("class partition", sizes.iter().sum::<usize>() == n && sizes.iter().all(|s| n % s == 0), || {
        format!("class sizes {sizes:?}")
    });
    // Burnside: the number of classes is the average centralizer order
    let commuting = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| g.mul(x, y) == g.mul(y, x)).count();
    c.check("Burnside class count", commuting == n * sizes.len(), || {
        format!("{commuting} commuting pairs for {} classes", sizes.len())
    });
}

fn character_checks(g: &FiniteGroup, an: &GroupAnalysis, c: &mut Checker) -> Result<()> {
    let t = &an.table;
    let n = g.order();
    let k = g.classes().len();
    let chars = &t.characters;
    c.check("character count", chars.len() == k, || format!("{} characters, {k} classes", chars.len()));
    let mut bad_row = None;
    for i in 0..chars.len() {
        for j in i..chars.len() {
            let want = Cyclotomic::from_int(i64::from(i == j));
            if t.inner(i, j) != want {
                bad_row = Some((i, j));
            }
        }
    }
    c.check("row orthogonality", bad_row.is_none(), || format!("<chi_i, chi_j> wrong at {:?}", bad_row.unwrap()));
    let mut bad_col = None;
    for a in 0..k {
        for b in a..k {
            let mut acc = Cyclotomic::zero();
            for ch in chars {
                acc = &acc + &(&ch.values[a] * &ch.values[b].conj());
            }
            let want = if a == b { (n / t.class_sizes[a]) as i64 } else { 0 };
            if acc != Cyclotomic::from_int(want) {
                bad_col = Some((a, b));
            }
        }
    }
    c.check("column orthogonality", bad_col.is_none(), || format!("columns {:?}", bad_col.unwrap()));
    let degrees = t.degrees();
    let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
    c.check("degree sum", sum_sq == n as u64, || format!("sum of squared degrees {sum_sq}"));
    c.check("degrees divide order", degrees.iter().all(|d| n as u64 % d == 0), || format!("degrees {degrees:?}"));
    let mut fs_sum = 0i64;
    for ch in chars {
        fs_sum += i64::from(fs_indicator(g, ch)?) * ch.degree as i64;
    }
    let involutions = (0..n).filter(|&x| g.mul(x, x) == 0).count() as i64;
    c.check("FS sum rule", fs_sum == involutions, || format!("sum {fs_sum}, {involutions} square roots of 1"));
    let m = g.exponent();
    let mut bad_galois = None;
    'outer: for tt in units(m) {
        for (i, ch) in chars.iter().enumerate() {
            let image: Vec<Cyclotomic> = ch.values.iter().map(|v| v.galois_apply(tt as i64)).collect::<Result<_>>()?;
            let permuted = (0..k).all(|cl| image[cl] == ch.values[power_class(g, cl, tt)]);
            let in_table = chars.iter().any(|other| other.values == image);
            if !permuted || !in_table {
                bad_galois = Some((i, tt));
                break 'outer;
            }
        }
    }
    c.check("Galois equivariance", bad_galois.is_none(), || format!("(character, t) = {:?}", bad_galois.unwrap()));
    let orbits = rational_character_classes(g, t)?.len();
    let cells = rational_classes(g).len();
    c.check("Berman count", orbits == cells, || format!("{orbits} character orbits, {cells} rational classes"));
    let all: Vec<usize> = (0..n).collect();
    let abel = n / derived_subgroup(g, &all).len();
    let linear = degrees.iter().filter(|&&d| d == 1).count();
    c.check("abelianization", abel == linear, || format!("|G/G'| = {abel}, {linear} linear characters"));
    Ok(())
}

/// Conjugacy classes of cyclic subgroups, by brute force.
fn cyclic_subgroup_classes(g: &FiniteGroup) -> usize {
    let mut subs: Vec<Vec<usize>> = (0..g.order()).map(|x| subgroup_generated(g, &[x])).collect();
    subs.sort();
    subs.dedup();
    let mut seen = vec![false; subs.len()];
    let mut count = 0;
    for i in 0..subs.len() {
        if seen[i] {
            continue;
        }
        count += 1;
        for y in 0..g.order() {
            let mut conj: Vec<usize> = subs[i].iter().map(|&x| g.conj(x, y)).collect();
            conj.sort_unstable();
            if let Ok(j) = subs.binary_search(&conj) {
                seen[j] = true;
            }
        }
    }
    count
}

fn rank_checks(g: &FiniteGroup, c: &mut Checker) -> Result<()> {
    let n = g.order();
    let rb = r_of_group(g)?;
    let cells = rational_classes(g);
    if n <= 32 {
        let cyc = cyclic_subgroup_classes(g);
        c.check("cyclic subgroup classes", cyc == cells.len(), || {
            format!("{cyc} classes of cyclic subgroups, {} rational classes", cells.len())
        });
    }
    let prime_power = |o: u64| crate::numtheory::prime_divisors(o).len() <= 1;
    if (0..n).all(|x| prime_power(g.element_order(x))) {
        c.check("prime-power orders give r = 0", rb.r == 0, || format!("r = {}", rb.r));
    }
    let primes = crate::numtheory::prime_divisors(n as u64);
    if primes.len() == 1 {
        let mut union = singular_qp_classes(g, primes[0])?;
        union.push(vec![0]);
        union.sort();
        let mut q = cells.clone();
        q.sort();
        c.check("p-group class partition", union == q, || "rational and Q_p-classes differ".into());
    }
    Ok(())
}

fn schur_checks(g: &FiniteGroup, an: &GroupAnalysis, c: &mut Checker) -> Result<()> {
    let n = g.order();
    let comps = components(an)?;
    let primes = crate::numtheory::prime_divisors(n as u64);
    let dim: u64 = comps.iter().map(|r| r.component.members.len() as u64 * r.component.degree.pow(2)).sum();
    c.check("dimension completeness", dim == n as u64, || format!("components have dimension {dim}"));
    for r in &comps {
        let comp = &r.component;
        let fs = comp.fs_indicator;
        let inf = r.schur.at(Place::Infinite);
        c.check("infinite index matches FS", (inf == 2) == (fs == -1), || {
            format!("class {}: index {inf} at inf, indicator {fs}", comp.class_index)
        });
        let odd = primes.iter().all(|&p| r.schur.at(Place::Prime(p)) % 2 == 1);
        c.check("contribution equivalence", r.contributes == (fs == -1 && odd), || {
            format!("class {}: contributes = {}, indicator {fs}", comp.class_index, r.contributes)
        });
    }
    let s = comps.iter().filter(|r| r.contributes).count();
    if g.is_abelian() {
        c.check("abelian s = 0", s == 0, || format!("s = {s}"));
    }
    if n % 4 != 0 {
        c.check("s = 0 off multiples of 4", s == 0, || format!("s = {s}"));
    }
    for nd in normal_subgroups(g) {
        if nd.order == 1 || nd.order == n {
            continue;
        }
        let q = quotient_group(g, &nd)?;
        let sq = s_of_group(&q)?.0;
        c.check("quotient monotonicity", s >= sq, || format!("s = {s} < s(G/N) = {sq} for |N| = {}", nd.order));
    }
    Ok(())
}

/// Run every check on one group.
pub fn verify_group(g: &FiniteGroup, label: &str) -> VerifyReport {
    let mut c = Checker::new(label);
    if !table_laws(g, &mut c) {
        return c.report;
    }
    class_checks(g, &mut c);
    let res = GroupAnalysis::new(g).and_then(|an| {
        character_checks(g, &an, &mut c)?;
        rank_checks(g, &mut c)?;
        schur_checks(g, &an, &mut c)
    });
    if let Err(e) = res {
        c.fail("computation", e.to_string());
    }
    c.report
}

/// Verify every catalog group of order at most `max_order`.
pub fn verify_catalog(catalog: &Catalog, max_order: usize, jobs: usize) -> Result<VerifyReport> {
    let entries = catalog.in_range(1, max_order);
    let reports = par_map(&entries, jobs, |e| {
        let label = format!("({},{}) {}", e.order, e.index, e.name);
        Ok(match e.build(crate::group::DEFAULT_ORDER_CAP) {
            Ok(g) => verify_group(&g, &label),
            Err(err) => {
                let mut c = Checker::new(&label);
                c.fail("construction", err.to_string());
                c.report
            }
        })
    })?;
    let mut total = VerifyReport::default();
    for r in reports {
        total.absorb(r);
    }
    Ok(total)
}
