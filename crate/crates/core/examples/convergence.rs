//! Total-variation distance between exact finite-n laws and the rounded limit
//! ⌈X + a_n⌉, for several digital-tree and counting processes.

use rounding::processes::{by_name, convergence_check};

fn main() -> rounding::Result<()> {
    let ns: Vec<u64> = (4..=12).map(|k| 1u64 << k).collect();
    for name in ["approx-counting", "successful-search", "trie-depth:2", "maxgeo:0.5", "patricia"] {
        let spec = by_name(name)?;
        println!("{name}");
        for (n, a, d) in convergence_check(&spec, &ns)? {
            println!("  n = {n:5}  a_n = {a:8.4}  d_TV = {d:.3e}");
        }
    }
    Ok(())
}
