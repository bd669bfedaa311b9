use super::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Smallest member index.
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    pub element_order: u64,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Elements whose conjugation action generates all inner automorphisms.
pub(crate) fn conjugators(g: &FiniteGroup) -> Vec<usize> {
    if g.generators().is_empty() && g.order() > 1 {
        (1..g.order()).collect()
    } else {
        g.generators().to_vec()
    }
}

/// Conjugacy classes by orbit sweeps under conjugation by the generators,
/// sorted by (element order, smallest member).
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjClass> {
    let n = g.order();
    let gens = conjugators(g);
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        assigned[x] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &s in &gens {
                let z = g.conj(y, s);
                if !assigned[z] {
                    assigned[z] = true;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(ConjClass {
            representative: orbit[0],
            element_order: g.element_order(orbit[0]),
            members: orbit,
        });
    }
    classes.sort_by_key(|c| (c.element_order, c.representative));
    classes
}

/// Index of the class containing `representative(c)^t`, with `c` given by
/// its index in `g.classes()`.
pub fn power_class(g: &FiniteGroup, c: usize, t: u64) -> usize {
    g.class_of(g.pow(g.classes()[c].representative, t))
}
