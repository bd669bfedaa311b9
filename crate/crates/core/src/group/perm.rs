use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image list. Products
/// act left to right: `(a * b)(x) = b(a(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Build from 1-based cycles on `degree` points.
    pub fn from_cycles(cycles: &[Vec<u32>], degree: usize) -> Result<Self> {
        let mut p = Perm::identity(degree);
        for cyc in cycles {
            let mut seen = Vec::with_capacity(cyc.len());
            for &x in cyc {
                if x == 0 || x as usize > degree {
                    return Err(Error::Parse(format!("point {x} out of range 1..={degree}")));
                }
                if seen.contains(&x) {
                    return Err(Error::Parse(format!("point {x} repeated in a cycle")));
                }
                seen.push(x);
            }
            let mut c = Perm::identity(degree);
            for (i, &x) in cyc.iter().enumerate() {
                let y = cyc[(i + 1) % cyc.len()];
                c.0[x as usize - 1] = y - 1;
            }
            p = p.compose(&c);
        }
        Ok(p)
    }

    /// Parse cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    /// Whitespace is ignored. Cycles need not be disjoint; they are
    /// multiplied left to right.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        let degree = degree.unwrap_or(max).max(max);
        Perm::from_cycles(&cycles, degree)
    }

    pub fn pad(&self, degree: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(v.len() as u32..degree as u32);
        Perm(v)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u32;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Shift every point up by `offset`, on `degree` points in total.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut v: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[i + offset] = x + offset as u32;
        }
        Perm(v)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32 + 1);
                x = self.0[x] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in cycle notation: {text:?}")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
        };
        let inner = &body[..end];
        if !inner.is_empty() {
            let pts = inner
                .split(',')
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in {text:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            cycles.push(pts);
        }
        rest = &body[end + 1..];
    }
    Ok(cycles)
}

/// Parse a generator list `[(1,2)(3,4),(1,3)]`: commas at bracket depth zero
/// separate generators. All generators are padded to a common degree.
pub fn parse_generator_list(text: &str) -> Result<Vec<Perm>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("generator list must be bracketed: {text:?}")))?;
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
    }
    if !inner.is_empty() {
        parts.push(&inner[start..]);
    }
    let perms = parts
        .iter()
        .map(|p| Perm::parse(p, None))
        .collect::<Result<Vec<_>>>()?;
    Ok(pad_all(perms))
}

pub fn pad_all(perms: Vec<Perm>) -> Vec<Perm> {
    let degree = perms.iter().map(Perm::degree).max().unwrap_or(0);
    perms.into_iter().map(|p| p.pad(degree)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse(" (1, 2,3)( 4,5) ", None).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Perm::parse("()", None).unwrap().degree(), 0);
        assert!(Perm::parse("(1,2", None).is_err());
        assert!(Perm::parse("(1,1)", None).is_err());
        assert!(Perm::parse("(0,1)", None).is_err());
        assert!(Perm::parse("1,2", None).is_err());
    }

    #[test]
    fn left_to_right_product() {
        let a = Perm::parse("(1,2)", Some(3)).unwrap();
        let b = Perm::parse("(2,3)", Some(3)).unwrap();
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(a.compose(&b).to_string(), "(1,3,2)");
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn generator_lists() {
        let g = parse_generator_list("[(1,2)(3,4), (1,3)]").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].degree(), 4);
        assert!(parse_generator_list("[]").unwrap().is_empty());
        assert!(parse_generator_list("(1,2)").is_err());
    }
}
