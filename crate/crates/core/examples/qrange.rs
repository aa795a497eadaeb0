//! Admissible time exponents at a point: the feasible interval of 1/q̃′
//! (1/q follows from scaling) and a full necessary-condition check on the
//! midpoint choice.
//!
//! cargo run --example qrange -- 3 13/20 1/10

use strichartz_lab::geometry::*;

fn main() -> strichartz_lab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let x = parse_rational(args.get(1).map(String::as_str).unwrap_or("13/20"))?;
    let y = parse_rational(args.get(2).map(String::as_str).unwrap_or("1/10"))?;
    let p = ExponentPoint::new(x, y)?;

    match feasible_q_interval(n, p)? {
        None => println!("no admissible (1/q~', 1/q) at ({x}, {y})"),
        Some(iv) => {
            println!("1/q~' in {}", iv.notation());
            let u = iv.midpoint();
            let c = ExponentConfig::new(n, iv.inv_q(u), u, p)?;
            println!("midpoint: 1/q~' = {}, 1/q = {}, scaling gap {}", u, c.inv_q, scaling_gap(&c));
            let violated = necessary_check(&c);
            println!("necessary conditions violated: {violated:?}");
        }
    }

    // the interval is always empty at the removed corners
    let v = vertices(n)?;
    for (label, q) in [("R", v.r), ("R'", v.r_dual())] {
        println!("{label}: {:?}", feasible_q_interval(n, q)?.map(|iv| iv.notation()));
    }
    Ok(())
}
