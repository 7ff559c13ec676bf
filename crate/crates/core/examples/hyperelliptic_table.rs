// The table of hyperelliptic counts h_{g,(1,d)}, with the genus 3 closed form alongside.

use abelcount::surface::{hyp3_closed, hyp_h_table, hyp_nonvanishing};

fn main() {
    let t = hyp_h_table(8, 10).unwrap();
    print!("{}", t.to_plain());
    println!();
    let closed: Vec<String> = (1..=10).map(|d| hyp3_closed(d).unwrap().to_string()).collect();
    println!("genus 3 closed form: {}", closed.join(" "));
    let first: Vec<String> = (2..=8).map(|g| format!("g={g}: d>={}", (1..=10).find(|&d| hyp_nonvanishing(g, d)).unwrap())).collect();
    println!("first nonzero column: {}", first.join(", "));
}
