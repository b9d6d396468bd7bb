//! Exact re-check of the eight-edge scene: occlusion points, barycentric
//! coordinates and the final edge counts.

use sodvis::harness::verify_section6;

fn main() {
    let r = verify_section6();
    for c in &r.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{mark} {}", c.name);
        } else {
            println!("{mark} {} ({})", c.name, c.detail);
        }
    }
    println!("{} checks, all pass: {}", r.checks.len(), r.pass);
    if !r.pass {
        std::process::exit(1);
    }
}
