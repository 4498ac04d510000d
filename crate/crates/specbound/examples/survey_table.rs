//! Reproduce the bound-comparison table: for every irregular connected
//! graph of each order, compare the product bound Δ with the
//! independence bound αδ²/(n−α) and count strict wins.
//!
//!     cargo run --example survey_table            # orders 4..=8
//!     cargo run --example survey_table -- 6       # stop earlier

use specbound::enumeration::survey;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order in 4..=8"))
        .unwrap_or(8);

    println!("{:>2} {:>7} {:>9} {:>13} {:>6} {:>12}", "n", "count", "new_wins", "haemers_wins", "ties", "proportion");
    for n in 4..=max_n {
        let row = survey(n, 1e-7).unwrap();
        println!(
            "{:>2} {:>7} {:>9} {:>13} {:>6} {:>12.6}",
            row.n, row.count, row.new_wins, row.haemers_wins, row.ties, row.proportion
        );
    }
}
