//! Catalog scans: (r, s) for every group of an order range, and the groups
//! with s > 0 none of whose proper quotients has s > 0.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::catalog::{Catalog, CatalogEntry};
use crate::group::{normal_subgroups, quotient_group, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::numtheory::Cyclotomic;
use crate::schur::{components, k_minus_one, s_of_group, GroupAnalysis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub order: usize,
    pub index: usize,
    pub name: String,
    pub r: u64,
    pub s: u64,
    pub elapsed_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanFilter {
    All,
    SPositive,
}

/// A group with s > 0 and no proper quotient with s > 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalRow {
    pub order: usize,
    pub index: usize,
    pub name: String,
    pub s: u64,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("cannot start worker pool: {e}")))
}

/// Run `f` on every entry in a pool of `jobs` workers. Results keep catalog
/// order; the first failure in that order is returned.
pub(crate) fn par_map<T: Send>(
    entries: &[&CatalogEntry],
    jobs: usize,
    f: impl Fn(&CatalogEntry) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    let results: Vec<Result<T>> = pool(jobs)?.install(|| entries.par_iter().map(|e| f(e)).collect());
    results.into_iter().collect()
}

fn build(e: &CatalogEntry) -> Result<FiniteGroup> {
    e.build(DEFAULT_ORDER_CAP)
}

pub fn scan_entry(e: &CatalogEntry) -> Result<ScanRow> {
    let start = Instant::now();
    let g = build(e)?;
    let res = k_minus_one(&g)?;
    Ok(ScanRow {
        order: e.order,
        index: e.index,
        name: e.name.clone(),
        r: res.r,
        s: res.s,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// One row per catalog group with order in [min, max] passing the filter,
/// sorted by (order, index).
pub fn scan(catalog: &Catalog, min: usize, max: usize, filter: ScanFilter, jobs: usize) -> Result<Vec<ScanRow>> {
    let entries = catalog.in_range(min, max);
    let mut rows = par_map(&entries, jobs, scan_entry)?;
    if filter == ScanFilter::SPositive {
        rows.retain(|r| r.s > 0);
    }
    rows.sort_by_key(|r| (r.order, r.index));
    Ok(rows)
}

/// Orders in [min, max] with no catalog entry, up to the largest catalog
/// order.
pub fn missing_orders(catalog: &Catalog, min: usize, max: usize) -> Vec<usize> {
    let top = catalog.entries.iter().map(|e| e.order).max().unwrap_or(0).min(max);
    (min.max(1)..=top).filter(|&n| catalog.entries.iter().all(|e| e.order != n)).collect()
}

/// Is every contributing component faithful? Computed on G alone, from the
/// kernels of the contributing characters.
fn contributing_all_faithful(g: &FiniteGroup) -> Result<bool> {
    let an = GroupAnalysis::new(g)?;
    let comps = components(&an)?;
    for c in comps.iter().filter(|c| c.contributes) {
        let chi = &an.table.characters[an.classes[c.component.class_index].representative()];
        let deg = Cyclotomic::from_int(chi.degree as i64);
        let kernel_classes = chi.values.iter().filter(|&v| *v == deg).count();
        if kernel_classes > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// s(G) if G has s > 0 and s(G/N) = 0 for every proper nontrivial normal N.
/// The quotient computation is cross-checked against the kernels of the
/// contributing characters of G.
pub fn minimal_s_of_group(g: &FiniteGroup) -> Result<Option<u64>> {
    let (s, _) = s_of_group(g)?;
    if s == 0 {
        return Ok(None);
    }
    let mut minimal = true;
    for n in normal_subgroups(g) {
        if n.order == 1 || n.order == g.order() {
            continue;
        }
        let q = quotient_group(g, &n)?;
        if s_of_group(&q)?.0 > 0 {
            minimal = false;
            break;
        }
    }
    if minimal != contributing_all_faithful(g)? {
        return Err(Error::Internal(
            "quotient scan and contributing kernels disagree on minimality".into(),
        ));
    }
    Ok(minimal.then_some(s as u64))
}

/// Minimal s-positive groups of the catalog up to order `max`.
pub fn minimal_s(catalog: &Catalog, max: usize, jobs: usize) -> Result<Vec<MinimalRow>> {
    let entries = catalog.in_range(1, max);
    let found = par_map(&entries, jobs, |e| {
        let g = build(e)?;
        Ok(minimal_s_of_group(&g)?.map(|s| MinimalRow {
            order: e.order,
            index: e.index,
            name: e.name.clone(),
            s,
        }))
    })?;
    Ok(found.into_iter().flatten().collect())
}

/// K_{-1} as plain text: `Z^2 + Z/2`, `Z`, `(Z/2)^3`, `0`.
pub fn k_minus_one_text(r: u64, s: u64) -> String {
    let mut parts = Vec::new();
    match r {
        0 => {}
        1 => parts.push("Z".to_string()),
        _ => parts.push(format!("Z^{r}")),
    }
    match s {
        0 => {}
        1 => parts.push("Z/2".to_string()),
        _ => parts.push(format!("(Z/2)^{s}")),
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// K_{-1} in LaTeX: `$\mathbb{Z}^2 \oplus \mathbb{Z}/2$`.
pub fn k_minus_one_latex(r: u64, s: u64) -> String {
    let mut parts = Vec::new();
    match r {
        0 => {}
        1 => parts.push(r"\mathbb{Z}".to_string()),
        _ => parts.push(format!(r"\mathbb{{Z}}^{{{r}}}")),
    }
    match s {
        0 => {}
        1 => parts.push(r"\mathbb{Z}/2".to_string()),
        _ => parts.push(format!(r"(\mathbb{{Z}}/2)^{{{s}}}")),
    }
    if parts.is_empty() {
        "$0$".into()
    } else {
        format!("${}$", parts.join(r" \oplus "))
    }
}

pub fn format_tsv(rows: &[ScanRow], timings: bool) -> String {
    let mut out = String::from("order\tindex\tname\tr\ts\tK-1");
    if timings {
        out.push_str("\tms");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(out, "{}\t{}\t{}\t{}\t{}\t{}", r.order, r.index, r.name, r.r, r.s, k_minus_one_text(r.r, r.s));
        if timings {
            let _ = write!(out, "\t{}", r.elapsed_ms);
        }
        out.push('\n');
    }
    out
}

/// Table rows `& index & name & r & s & K-1 \\`, with a `% n = ...` comment
/// before each order.
pub fn format_latex(rows: &[ScanRow]) -> String {
    let mut out = String::new();
    let mut current = None;
    for r in rows {
        if current != Some(r.order) {
            let _ = writeln!(out, "% n = {}", r.order);
            current = Some(r.order);
        }
        let _ = writeln!(out, " & {} & {} & {} & {} & {} \\\\", r.index, r.name, r.r, r.s, k_minus_one_latex(r.r, r.s));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::parse_catalog;
    use crate::group::families::{builtin_group, Family};

    const SMALL: &str = "\
group 6 2 C6
gen (1,2,3,4,5,6)
group 6 1 S3
gen (1,2)
gen (1,2,3)
group 8 4 Q8
gen (1,2,3,4)(5,6,7,8)
gen (1,5,3,7)(2,8,4,6)
";

    #[test]
    fn text_forms() {
        assert_eq!(k_minus_one_text(0, 0), "0");
        assert_eq!(k_minus_one_text(2, 1), "Z^2 + Z/2");
        assert_eq!(k_minus_one_text(1, 3), "Z + (Z/2)^3");
        assert_eq!(k_minus_one_latex(2, 1), r"$\mathbb{Z}^{2} \oplus \mathbb{Z}/2$");
        assert_eq!(k_minus_one_latex(0, 0), "$0$");
    }

    #[test]
    fn scan_is_sorted_and_filtered() {
        let cat = Catalog::from_entries(parse_catalog(SMALL).unwrap());
        let rows = scan(&cat, 1, 10, ScanFilter::All, 2).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.order, r.index, r.r, r.s)).collect();
        assert_eq!(keys, vec![(6, 1, 0, 0), (6, 2, 1, 0), (8, 4, 0, 0)]);
        assert!(scan(&cat, 1, 10, ScanFilter::SPositive, 1).unwrap().is_empty());
        assert!(scan(&cat, 9, 8, ScanFilter::All, 1).unwrap().is_empty());
        let tsv = format_tsv(&rows, false);
        assert_eq!(tsv.lines().next().unwrap(), "order\tindex\tname\tr\ts\tK-1");
        assert_eq!(tsv.lines().nth(2).unwrap(), "6\t2\tC6\t1\t0\tZ");
        assert!(format_latex(&rows).contains(" & 2 & C6 & 1 & 0 & $\\mathbb{Z}$ \\\\"));
        assert_eq!(missing_orders(&cat, 5, 8), vec![5, 7]);
        assert_eq!(missing_orders(&cat, 1, usize::MAX), vec![1, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn minimal_examples() {
        let q16 = builtin_group(&Family::Dicyclic(4)).unwrap();
        assert_eq!(minimal_s_of_group(&q16).unwrap(), Some(1));
        // C2 x Q16 maps onto Q16
        let p = builtin_group(&Family::Prod(Box::new(Family::Cyclic(2)), Box::new(Family::Dicyclic(4)))).unwrap();
        assert_eq!(minimal_s_of_group(&p).unwrap(), None);
        let s4 = builtin_group(&Family::Sym(4)).unwrap();
        assert_eq!(minimal_s_of_group(&s4).unwrap(), None);
    }
}
