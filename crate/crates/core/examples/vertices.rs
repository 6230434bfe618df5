//! Vertices from the support order, checked against the exact LP oracle.

use epoly::geometry::{generators, vertices, vertices_by_lp};
use epoly::lp::hull_membership;
use epoly::rat::ratio;
use epoly::{PointFn, PolytopeKind, Poset};

fn main() -> epoly::Result<()> {
    let p = Poset::parse("elements: u v w\ncovers: u<w v<w")?;
    for kind in [PolytopeKind::EnrichedOrderPoly, PolytopeKind::EnrichedChainPoly] {
        let mut ours = vertices(kind, &p)?;
        let mut lp = vertices_by_lp(&generators(kind, &p)?)?;
        ours.sort_by_key(|x| x.to_ints());
        lp.sort_by_key(|x| x.to_ints());
        let shown: Vec<String> = ours.iter().map(|x| x.to_string()).collect();
        println!("{kind}: {} vertices {}  (LP agrees: {})", ours.len(), shown.join(" "), ours == lp);
    }
    let gens = generators(PolytopeKind::EnrichedOrderPoly, &p)?;
    let mid = PointFn::new(vec![ratio(1, 2), ratio(1, 2), ratio(1, 1)]);
    println!("{mid} in hull: {}", hull_membership(&mid, &gens)?);
    Ok(())
}
