//! Named corner points, the necessary and sufficient regions, and the
//! three-way classification of a few exponent points.
//!
//! cargo run --example regions -- 3

use strichartz_lab::geometry::*;

fn main() -> strichartz_lab::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let v = vertices(n)?;
    for (label, p) in v.named() {
        println!("{label:>2} = ({}, {})", fmt_rational(p.x), fmt_rational(p.y));
    }

    for region in [necessary_region(n)?, sufficient_region(n)?] {
        let corners: Vec<String> = region.labels.iter().zip(&region.vertex_included).map(|(l, inc)| format!("{l}{}", if *inc { "" } else { "°" })).collect();
        println!("{}({n}): {}  (° = removed)", region.id, corners.join(" → "));
    }

    let probes = [
        ("B", v.b),
        ("R", v.r),
        ("mid(P,P')", v.p.midpoint(&v.p_dual())),
        ("mid(R,R')", v.r.midpoint(&v.r_dual())),
        ("mid(Q,R)", v.q.midpoint(&v.r)),
    ];
    for (name, p) in probes {
        let verdict = classify(n, p)?;
        let why: Vec<&str> = verdict.violated.iter().map(|c| c.as_str()).collect();
        println!("{name:>10}: {} {}", verdict.kind, why.join(","));
    }
    Ok(())
}
