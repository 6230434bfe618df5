//! Parse a poset, list its linear extensions and count left peaks.

use epoly::Poset;

fn main() -> epoly::Result<()> {
    let p = Poset::parse("elements: a b c d\ncovers: a<c b<c b<d")?;
    println!("{} elements, covers {:?}", p.len(), p.cover_pairs());
    println!("minimal {}, maximal {}", p.format_set(p.minimal_elements()), p.format_set(p.maximal_elements()));
    println!("natural labeling {:?}", p.natural_labeling());
    for ext in p.linear_extensions()? {
        let names: Vec<&str> = ext.order.iter().map(|&v| p.label(v)).collect();
        println!("  {}  left peaks: {}", names.join(" < "), ext.left_peaks);
    }
    println!("e(P) = {} (counted without listing)", p.count_linear_extensions()?);
    println!("dual:\n{}", p.dual());
    Ok(())
}
