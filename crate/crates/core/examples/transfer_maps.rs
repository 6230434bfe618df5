//! The classical and enriched transfer maps, their inverses, and the
//! bijections from left enriched P-partitions onto lattice points.

use epoly::geometry::enumerate_left_enriched;
use epoly::rat::ratio;
use epoly::transfer::{enriched_phi, enriched_psi, pi_map, stanley_phi, theta_map};
use epoly::{PointFn, Poset};

fn main() -> epoly::Result<()> {
    let p = Poset::parse("elements: u v w\ncovers: u<w v<w")?;

    let f = PointFn::new(vec![ratio(3, 10), ratio(7, 10), ratio(9, 10)]);
    println!("phi{f} = {}", stanley_phi(&p, &f)?);

    let f = PointFn::new(vec![ratio(-1, 2), ratio(1, 4), ratio(1, 2)]);
    let g = enriched_phi(&p, &f)?;
    println!("ephi{f} = {g}, epsi back = {}", enriched_psi(&p, &g)?);

    let m = 2;
    for h in enumerate_left_enriched(&p, m)?.iter().take(6) {
        println!("h = {h:?}  pi = {:?}  theta = {:?}", pi_map(&p, h, m)?, theta_map(&p, h, m)?);
    }
    Ok(())
}
