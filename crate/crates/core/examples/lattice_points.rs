//! Lattice points of dilates, the counting identity between the enriched
//! polytopes and left enriched P-partitions, and Ehrhart polynomials.

use epoly::geometry::{count_lattice_points, ehrhart, enumerate_left_enriched, membership};
use epoly::rat::rat;
use epoly::{PointFn, PolytopeKind, Poset};

fn main() -> epoly::Result<()> {
    let p = Poset::parse("elements: u v w\ncovers: u<w v<w")?;
    for m in 0..=3 {
        let eo = count_lattice_points(PolytopeKind::EnrichedOrderPoly, &p, m)?;
        let ec = count_lattice_points(PolytopeKind::EnrichedChainPoly, &p, m)?;
        let lepp = enumerate_left_enriched(&p, m)?.len();
        println!("m = {m}: eO {eo}, eC {ec}, partitions {lepp}");
    }
    for kind in PolytopeKind::ALL {
        println!("L_{}(m) = {}", kind.short_name(), ehrhart(kind, &p)?.display_in("m"));
    }
    let x = PointFn::from_ints(&[1, 0, 0]);
    println!("{x} in eO: {}", membership(PolytopeKind::EnrichedOrderPoly, &p, &x, &rat(1))?);
    Ok(())
}
