use std::fmt;

use crate::bsgs::Bsgs;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// A permutation group given by generators. The stabilizer chain is built
/// eagerly, so order and membership queries are cheap afterwards.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
    bsgs: Bsgs,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let bsgs = Bsgs::new(degree, &generators);
        Ok(PermGroup {
            degree,
            generators,
            name: None,
            bsgs,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree.max(1), vec![Permutation::identity(degree.max(1))])
            .expect("identity generator is valid")
    }

    /// Parses generators written in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<PermGroup> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        if perms.is_empty() {
            return PermGroup::new(degree, vec![Permutation::identity(degree.max(1))]);
        }
        PermGroup::new(degree, perms)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> PermGroup {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }

    pub fn order(&self) -> u128 {
        self.bsgs.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.bsgs.contains(p))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| (a * b) == (b * a)))
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.bsgs.contains(g))
    }

    pub fn normalizes(&self, s: &Permutation) -> bool {
        s.degree() == self.degree
            && self
                .generators
                .iter()
                .all(|g| self.bsgs.contains(&s.conjugate(g)))
    }

    /// Label used in reports: the catalog name when known.
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("<degree {} order {}>", self.degree, self.order()))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let a5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(3 4 5)"]).unwrap();
        assert_eq!(a5.order(), 60);
        let t = Permutation::parse_cycles("(1 2)", 5).unwrap();
        let dt = Permutation::parse_cycles("(1 2)(3 4)", 5).unwrap();
        assert!(!a5.contains(&t).unwrap());
        assert!(a5.contains(&dt).unwrap());
        assert!(a5.contains(&Permutation::identity(4)).is_err());
        let c2 = PermGroup::from_cycles(2, &["(1 2)"]).unwrap();
        assert_eq!(c2.order(), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(PermGroup::new(0, vec![]), Err(GroupError::ZeroDegree)));
        assert!(matches!(PermGroup::new(3, vec![]), Err(GroupError::NoGenerators)));
        assert!(PermGroup::new(3, vec![Permutation::identity(4)]).is_err());
        assert_eq!(PermGroup::trivial(1).order(), 1);
    }
}
