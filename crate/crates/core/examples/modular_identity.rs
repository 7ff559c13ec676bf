// Machine check of K^4 (3 wp + theta_D4/4) = (3/2) K^4 wp + (3/8) K(p^2,q^2)^2 and the f/g lemma.

use abelcount::threefold::{consistency_fg, modular_identity_check};

fn main() {
    for c in modular_identity_check(8, 24).unwrap() {
        let w = c.comparison.window.map_or("exact".to_string(), |w| format!("|e| <= {w}"));
        println!("{:<18} agrees={} through q^{}, {w}", c.name, c.comparison.agrees(), c.comparison.q_order);
    }
    for c in consistency_fg(4, 24).unwrap() {
        println!("f/g {:<5} agrees={}", c.name, c.comparison.agrees());
    }
    match modular_identity_check(8, 8) {
        Err(e) => println!("too small a window is refused: {e}"),
        Ok(_) => println!("unexpected"),
    }
}
