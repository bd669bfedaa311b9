//! Textual group specifications.
//!
//! ```text
//! spec   := family | key | gens
//! family := Cyclic(n) | Dihedral(n) | Dicyclic(n) | Sym(n) | Alt(n)
//!         | SL(2,3) | SL(2,5) | BinO | Prod(spec,spec)
//! key    := (order,index)            catalog lookup
//! gens   := [(1,2,3),(1,2)]          inline permutation generators
//! ```
//!
//! `SymmetricGroup`, `AlternatingGroup`, `BinaryOctahedral` and
//! `DirectProduct` are accepted as long names.

use std::fmt;

use super::catalog::Catalog;
use super::families::{builtin_group, family_generators, Family};
use super::{parse_generator_list, FiniteGroup, Perm, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Family(Family),
    CatalogKey { order: usize, index: usize },
    Generators(Vec<Perm>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(fam) => write!(f, "{fam}"),
            GroupSpec::CatalogKey { order, index } => write!(f, "({order},{index})"),
            GroupSpec::Generators(g) => {
                let parts: Vec<String> = g.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.starts_with('[') {
            return Ok(GroupSpec::Generators(parse_generator_list(&s)?));
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let nums: Vec<&str> = inner.split(',').collect();
            if let [o, i] = nums.as_slice() {
                if let (Ok(order), Ok(index)) = (o.parse(), i.parse()) {
                    return Ok(GroupSpec::CatalogKey { order, index });
                }
            }
            return Err(Error::Parse(format!("catalog key must look like (16,9): {text:?}")));
        }
        let mut p = Parser { s: &s, pos: 0 };
        let fam = p.family()?;
        if p.pos != s.len() {
            return Err(Error::Parse(format!("trailing input after {fam} in {text:?}")));
        }
        Ok(GroupSpec::Family(fam))
    }

    /// Build the group. Catalog keys need a catalog.
    pub fn resolve(&self, catalog: Option<&Catalog>) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Family(f) => builtin_group(f),
            GroupSpec::CatalogKey { order, index } => {
                let cat = catalog.ok_or_else(|| {
                    Error::Argument("catalog key given but no catalog is available".into())
                })?;
                let e = cat.get(*order, *index).ok_or_else(|| {
                    Error::Argument(format!("no catalog entry ({order},{index})"))
                })?;
                e.build(DEFAULT_ORDER_CAP)
            }
            GroupSpec::Generators(g) => {
                Ok(FiniteGroup::from_generators(g, DEFAULT_ORDER_CAP)?.with_label(self.to_string()))
            }
        }
    }

    /// Permutation generators, when the spec does not need a catalog.
    pub fn generators(&self) -> Result<Vec<Perm>> {
        match self {
            GroupSpec::Family(f) => family_generators(f),
            GroupSpec::Generators(g) => Ok(g.clone()),
            GroupSpec::CatalogKey { .. } => Err(Error::Argument("catalog key has no inline generators".into())),
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {tok:?} at {:?}", self.rest())))
        }
    }

    fn ident(&mut self) -> String {
        let len = self
            .rest()
            .char_indices()
            .find(|(_, c)| !c.is_ascii_alphanumeric())
            .map(|(i, _)| i)
            .unwrap_or(self.rest().len());
        let id = self.rest()[..len].to_string();
        self.pos += len;
        id
    }

    fn number(&mut self) -> Result<u64> {
        let len = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        let n = self.rest()[..len]
            .parse()
            .map_err(|_| Error::Parse(format!("expected a number at {:?}", self.rest())))?;
        self.pos += len;
        Ok(n)
    }

    fn unary(&mut self) -> Result<u64> {
        self.expect("(")?;
        let n = self.number()?;
        self.expect(")")?;
        Ok(n)
    }

    fn family(&mut self) -> Result<Family> {
        let start = self.pos;
        let id = self.ident();
        Ok(match id.as_str() {
            "Cyclic" => Family::Cyclic(self.unary()?),
            "Dihedral" => Family::Dihedral(self.unary()?),
            "Dicyclic" => Family::Dicyclic(self.unary()?),
            "Sym" | "SymmetricGroup" => Family::Sym(self.unary()?),
            "Alt" | "AlternatingGroup" => Family::Alt(self.unary()?),
            "BinO" | "BinaryOctahedral" => Family::BinO,
            "SL" => {
                self.expect("(2,")?;
                let q = self.number()?;
                self.expect(")")?;
                match q {
                    3 => Family::SL23,
                    5 => Family::SL25,
                    _ => return Err(Error::Argument(format!("SL(2,{q}) is not a built-in family"))),
                }
            }
            "Prod" | "DirectProduct" => {
                self.expect("(")?;
                let a = self.family()?;
                self.expect(",")?;
                let b = self.family()?;
                self.expect(")")?;
                Family::Prod(Box::new(a), Box::new(b))
            }
            "" => return Err(Error::Parse(format!("expected a group family at {:?}", &self.s[start..]))),
            other => return Err(Error::Argument(format!("unknown group family {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!(GroupSpec::parse("Cyclic(6)").unwrap(), GroupSpec::Family(Family::Cyclic(6)));
        assert_eq!(GroupSpec::parse(" SL(2, 5) ").unwrap(), GroupSpec::Family(Family::SL25));
        let p = GroupSpec::parse("Prod(Cyclic(2),Dicyclic(4))").unwrap();
        assert_eq!(p.to_string(), "Prod(Cyclic(2),Dicyclic(4))");
        assert_eq!(p.resolve(None).unwrap().order(), 32);
        assert_eq!(GroupSpec::parse("(16,9)").unwrap(), GroupSpec::CatalogKey { order: 16, index: 9 });
        let g = GroupSpec::parse("[(1,2),(1,2,3)]").unwrap();
        assert_eq!(g.resolve(None).unwrap().order(), 6);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GroupSpec::parse("Foo(3)").is_err());
        assert!(GroupSpec::parse("Cyclic(3").is_err());
        assert!(GroupSpec::parse("Cyclic(3)x").is_err());
        assert!(GroupSpec::parse("SL(2,7)").is_err());
        assert!(GroupSpec::parse("(16)").is_err());
        assert!(GroupSpec::parse("(16,9)").unwrap().resolve(None).is_err());
    }
}
