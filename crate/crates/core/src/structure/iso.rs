//! Isomorphism testing between two permutation groups.

use std::ops::ControlFlow;

use crate::aut::fingerprint::ElementLabels;
use crate::aut::search::{generating_sequence, MapSearch};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::invariants::spectrum;
use crate::table::ElementTable;

/// An isomorphism given by generator images, with the order of the graph
/// subgroup `⟨(g_i, h_i)⟩` that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomWitness {
    pub source_generators: Vec<Permutation>,
    pub image_elements: Vec<Permutation>,
    pub graph_order: u128,
}

/// Finds an isomorphism `g -> h`, or `None` when the groups differ.
pub fn isomorphic(g: &PermGroup, h: &PermGroup) -> Result<Option<HomWitness>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.degree() == h.degree() && g.generators() == h.generators() {
        return Ok(Some(HomWitness {
            source_generators: g.generators().to_vec(),
            image_elements: g.generators().to_vec(),
            graph_order: g.order(),
        }));
    }
    let tg = ElementTable::new(g)?;
    let th = ElementTable::new(h)?;
    Ok(isomorphic_tables(&tg, &th))
}

pub fn is_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    Ok(isomorphic(g, h)?.is_some())
}

/// As [`isomorphic`], on prebuilt element tables.
pub fn isomorphic_tables(tg: &ElementTable, th: &ElementTable) -> Option<HomWitness> {
    if tg.len() != th.len() || tg.is_abelian() != th.is_abelian() {
        return None;
    }
    if spectrum(tg) != spectrum(th) {
        return None;
    }
    let lg = ElementLabels::new(tg);
    let lh = ElementLabels::new(th);
    if lg.fingerprints.signature() != lh.fingerprints.signature() {
        return None;
    }
    let gens = generating_sequence(tg);
    let search = MapSearch::new(tg, &lg, th, &lh, gens);
    let mut hit: Option<Vec<usize>> = None;
    search
        .run(None, |img| {
            hit = Some(img.to_vec());
            ControlFlow::Break(())
        })
        .ok()?;
    let img = hit?;
    let graph_order = if img.is_empty() {
        1
    } else {
        search.graph_order(&img)?
    };
    Some(HomWitness {
        source_generators: search.generators().iter().map(|&i| tg.element(i).clone()).collect(),
        image_elements: img.iter().map(|&i| th.element(i).clone()).collect(),
        graph_order,
    })
}
