//! TSV dumps for `compute`.

use std::fmt::Write as _;

use anyhow::Result;
use negk_core::chartab::character_table;
use negk_core::{FiniteGroup, KMinusOneResult};

/// One row per simple component.
pub fn components_tsv(res: &KMinusOneResult) -> String {
    let mut out = String::from(
        "class\tdegree\torbit\tfs\tcenter_conductor\tcenter_degree\tmatrix_size\tprovenance\tlocal_indices\tglobal_index\tcontributes\n",
    );
    for rep in &res.components {
        let c = &rep.component;
        let locals: Vec<String> = rep.schur.local_indices.iter().map(|(v, m)| format!("{v}:{m}")).collect();
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            c.class_index,
            c.degree,
            c.members.len(),
            c.fs_indicator,
            c.center.conductor,
            c.center.degree,
            c.matrix_size.map_or("?".to_string(), |n| n.to_string()),
            c.provenance,
            locals.join(","),
            rep.schur.global_index,
            if rep.contributes { "yes" } else { "no" },
        );
    }
    out
}

/// Header rows with element orders and class sizes, then one row per
/// irreducible character.
pub fn chartab_tsv(g: &FiniteGroup) -> Result<String> {
    let t = character_table(g)?;
    let mut out = String::from("class");
    for i in 0..g.classes().len() {
        let _ = write!(out, "\t{i}");
    }
    out.push_str("\norder");
    for c in g.classes() {
        let _ = write!(out, "\t{}", c.element_order);
    }
    out.push_str("\nsize");
    for c in g.classes() {
        let _ = write!(out, "\t{}", c.size());
    }
    out.push('\n');
    for (i, ch) in t.characters.iter().enumerate() {
        let _ = write!(out, "chi{i}");
        for v in &ch.values {
            let _ = write!(out, "\t{v}");
        }
        out.push('\n');
    }
    Ok(out)
}

/// `1-3, 7, 9-10` for a sorted list.
pub fn ranges(xs: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j + 1 < xs.len() && xs[j + 1] == xs[j] + 1 {
            j += 1;
        }
        parts.push(if i == j { xs[i].to_string() } else { format!("{}-{}", xs[i], xs[j]) });
        i = j + 1;
    }
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_ranges() {
        assert_eq!(ranges(&[1, 2, 3, 7, 9, 10]), "1-3, 7, 9-10");
        assert_eq!(ranges(&[]), "");
    }
}
