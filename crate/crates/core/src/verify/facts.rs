//! Cached per-group invariants for a verification run.

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;
use std::time::{Duration, Instant};

use crate::aut::AutAnalysis;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::structure::derived::is_solvable;
use crate::structure::invariants::spectrum;
use crate::structure::normal::{normal_subgroups, SubgroupRecord};
use crate::table::{element_cap, ElementTable};

/// Invariants of one group; the structural ones are computed on first use.
pub struct Facts {
    pub name: String,
    pub group: PermGroup,
    pub table: ElementTable,
    pub solvable: bool,
    pub spectrum: BTreeSet<u32>,
    timeout: Option<Duration>,
    aut: OnceCell<std::result::Result<AutAnalysis, GroupError>>,
    normal: OnceCell<Vec<SubgroupRecord>>,
}

impl Facts {
    pub fn new(group: &PermGroup, timeout: Option<Duration>) -> Result<Facts> {
        let table = ElementTable::with_cap(group, element_cap())?;
        Ok(Facts {
            name: group.label(),
            solvable: is_solvable(group),
            spectrum: spectrum(&table),
            group: group.clone(),
            table,
            timeout,
            aut: OnceCell::new(),
            normal: OnceCell::new(),
        })
    }

    pub fn order(&self) -> u128 {
        self.table.len() as u128
    }

    /// The automorphism search, run once.
    pub fn aut(&self) -> Result<&AutAnalysis> {
        self.aut
            .get_or_init(|| {
                let deadline = self.timeout.map(|d| Instant::now() + d);
                AutAnalysis::compute_until(&self.table, deadline)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn omega(&self) -> Result<usize> {
        Ok(self.aut()?.omega())
    }

    /// ω = |spec|.
    pub fn is_at(&self) -> Result<bool> {
        Ok(self.omega()? == self.spectrum.len())
    }

    /// Normal subgroups, sorted by order.
    pub fn normal_subgroups(&self) -> &[SubgroupRecord] {
        self.normal.get_or_init(|| normal_subgroups(&self.table))
    }

    /// Normal subgroups that are unions of automorphism orbits.
    pub fn characteristic_subgroups(&self) -> Result<Vec<SubgroupRecord>> {
        let aut = self.aut()?;
        Ok(self
            .normal_subgroups()
            .iter()
            .filter(|r| aut.is_characteristic(&self.table, r))
            .map(|r| {
                let mut r = r.clone();
                r.is_characteristic = Some(true);
                r
            })
            .collect())
    }

    /// Nontrivial with no proper nontrivial normal subgroup.
    pub fn is_simple(&self) -> bool {
        self.table.len() > 1 && self.normal_subgroups().len() == 2
    }
}

/// Builds [`Facts`] on demand and keeps them by name.
pub struct Analyzer {
    timeout: Option<Duration>,
    cache: RefCell<HashMap<String, Rc<Facts>>>,
}

impl Analyzer {
    pub fn new(timeout: Option<Duration>) -> Analyzer {
        Analyzer {
            timeout,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Facts for `group`, cached under `key`.
    pub fn facts(&self, key: &str, group: &PermGroup) -> Result<Rc<Facts>> {
        if let Some(f) = self.cache.borrow().get(key) {
            return Ok(f.clone());
        }
        let f = Rc::new(Facts::new(group, self.timeout)?);
        self.cache.borrow_mut().insert(key.to_string(), f.clone());
        Ok(f)
    }

    /// Facts for a catalog group, keyed by its name.
    pub fn catalog(&self, name: &str) -> Result<Rc<Facts>> {
        if let Some(f) = self.cache.borrow().get(name) {
            return Ok(f.clone());
        }
        let g = crate::catalog::build(name)?;
        self.facts(name, &g)
    }
}
