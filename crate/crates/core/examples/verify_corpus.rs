//! Run the invariant suite over every built-in poset.

use epoly::corpus;
use epoly::verify::verify_suite;

fn main() {
    let mut failures = 0;
    for (name, p) in corpus::all() {
        let report = verify_suite(&p, 2, 0);
        failures += report.failures();
        println!("{name:>14}: {} checks, {} failed", report.checks.len(), report.failures());
        for c in report.checks.iter().filter(|c| c.failed()) {
            println!("    {c}");
        }
    }
    std::process::exit(if failures == 0 { 0 } else { 2 });
}
