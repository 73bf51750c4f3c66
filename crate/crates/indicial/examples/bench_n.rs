use std::time::Instant;
fn main() {
    for n in [20u32, 25] {
        let t0 = Instant::now();
        let s = indicial::thresholds::threshold_set(n).unwrap();
        println!("n={n}: threshold_set {:.2?} ({} entries)", t0.elapsed(), s.entries().len());
    }
    let t0 = Instant::now();
    let rows = indicial::asymptotics::table_a3(25).unwrap();
    println!("table_a3(25): {:.2?}, row25 mid = {}", t0.elapsed(), rows[24].mid);
    let t0 = Instant::now();
    let rows = indicial::asymptotics::table_a2(12, 6).unwrap();
    println!("table_a2(12): {:.2?}, row12 = {} vs {}", t0.elapsed(), rows[11].cn, rows[11].conjecture);
}
