//! Signed filters and antichains, the order on signed filters, and maximal
//! chains with their signatures.

use epoly::enriched::{
    efilter_hasse, enumerate_signed_antichains, enumerate_signed_filters, maximal_echains, preceq_maximal,
};
use epoly::Poset;

fn main() -> epoly::Result<()> {
    let p = Poset::parse("elements: u v w\ncovers: u<w v<w")?;
    let filters = enumerate_signed_filters(&p)?;
    let antichains = enumerate_signed_antichains(&p)?;
    println!("{} signed filters:", filters.len());
    for f in &filters {
        println!("  {f}");
    }
    println!("{} signed antichains:", antichains.len());
    for a in &antichains {
        println!("  {a}");
    }

    let hasse = efilter_hasse(&p)?;
    println!("rank sizes {:?}, maximal chains {}", hasse.rank_sizes(), hasse.count_maximal_chains());

    let top: Vec<String> = preceq_maximal(&filters).iter().map(|f| f.to_string()).collect();
    println!("support-maximal signed filters: {}", top.join(" "));

    for k in maximal_echains(&p)?.iter().take(4) {
        let links: Vec<String> = k.links().iter().map(|f| f.to_string()).collect();
        println!("chain {}  signature {:?}", links.join(" > "), k.signature(&p));
    }
    Ok(())
}
