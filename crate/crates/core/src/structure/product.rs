use crate::group::PermGroup;

/// `G x H` acting on disjoint point sets: `G` on the first `deg(G)` points,
/// `H` on the rest.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let deg = g.degree() + h.degree();
    let mut gens: Vec<_> = g
        .generators()
        .iter()
        .filter(|p| !p.is_identity())
        .map(|p| p.shifted(0, deg))
        .collect();
    gens.extend(
        h.generators()
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| p.shifted(g.degree(), deg)),
    );
    let prod = if gens.is_empty() {
        PermGroup::trivial(deg)
    } else {
        PermGroup::new(deg, gens).expect("embedded generators are valid")
    };
    prod.with_name(format!("DP({},{})", g.label(), h.label()))
}

/// `H x ... x H` (`k` factors, `k >= 1`).
pub fn direct_power(h: &PermGroup, k: usize) -> PermGroup {
    assert!(k >= 1, "direct power needs at least one factor");
    let mut acc = h.clone();
    for _ in 1..k {
        acc = direct_product(&acc, h);
    }
    acc.with_name(format!("POW({},{})", h.label(), k))
}
