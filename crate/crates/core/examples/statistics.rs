//! h*, γ and d-vectors along independent routes, and flag vectors of the
//! graded poset of signed filters.

use epoly::statistics::{d_vector, DRoute, Statistics};
use epoly::triangulation::flag_vectors;
use epoly::Poset;

fn main() -> epoly::Result<()> {
    for (name, text) in [
        ("lambda", "elements: u v w\ncovers: u<w v<w"),
        ("diamond", "elements: bot a b top\ncovers: bot<a bot<b a<top b<top"),
    ] {
        let p = Poset::parse(text)?;
        let s = Statistics::compute(&p)?;
        println!("{name}: L(m) = {}", s.ehrhart_eo.display_in("m"));
        println!("  h* {:?}, from flags {:?}", s.hstar_eo, s.h_flags);
        println!("  gamma {:?}, peaks {:?}", s.gamma, s.peaks);
        println!("  d-vector {:?} / {:?}", d_vector(&p, DRoute::ViaGamma)?, d_vector(&p, DRoute::ViaPeaks)?);
        let fv = flag_vectors(&p)?;
        println!("  f_{{1,2}} = {}, h_{{1,2}} = {}", fv.f_of(&[1, 2]), fv.h_of(&[1, 2]));
    }
    Ok(())
}
