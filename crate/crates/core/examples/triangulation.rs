//! Facets of the enriched triangulations with their ladder inequalities,
//! followed by the full verification report.

use epoly::enriched::maximal_echain;
use epoly::triangulation::{
    enriched_simplices, facet_data, facet_functionals, unimodular_volume, verify_triangulation, Side,
};
use epoly::{PointFn, PolytopeKind, Poset};

fn main() -> epoly::Result<()> {
    let p = Poset::parse("elements: u v w\ncovers: u<w v<w")?;
    let k = maximal_echain(&p, &[0, 1, 2], &[1, -1, 1])?;
    let data = facet_data(&p, &k)?;
    let (s, t) = enriched_simplices(&p, &k)?;
    println!("chains {:?}, sign {:?}", data.chains, data.sign);
    println!("S vertices {:?}", s.vertices().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("T vertices {:?}", t.vertices().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("volumes {} and {}", unimodular_volume(&s)?, unimodular_volume(&t)?);
    println!("order rows {:?}, chain rows {:?}", data.rows(Side::Order), data.rows(Side::Chain));
    let x = PointFn::from_ints(&[1, -1, 0]);
    let vals: Vec<String> = facet_functionals(&data, &x, Side::Chain)?.iter().map(|v| v.to_string()).collect();
    println!("ladder values at {x}: {}", vals.join(" <= "));

    for kind in PolytopeKind::ALL {
        let report = verify_triangulation(kind, &p, 100, 1)?;
        println!("{kind}: {} facets, volume {}", report.facets.len(), report.volume_sum());
        for c in &report.checks {
            println!("  {c}");
        }
    }
    Ok(())
}
