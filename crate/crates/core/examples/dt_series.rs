// Donaldson-Thomas series of A x E and their rebuild from local pieces.

use abelcount::threefold::{
    dt_1, dt_2, dt_2_via_theta_d4, dt_hat_1, dt_hat_1_assembled, dt_hat_2_assembled, dt_hat_2_closed, gw_from_dt,
    window_needed_for_k4,
};

fn main() {
    let (q, w) = (4, 24);
    let d1 = dt_1(q, w).unwrap();
    for d in 0..=2 {
        println!("DT_(n,(1,1,{d})) in y = w^2: {}", d1.invariants().coeffs()[d]);
    }
    let a = dt_hat_1_assembled(q, w).unwrap();
    println!("(1,1,d) assembly agrees: {}", a.invariants().compare(dt_hat_1(q, w).unwrap().invariants()).agrees());
    let b = dt_hat_2_assembled(q, w).unwrap();
    println!("(1,2,d) assembly agrees: {}", b.invariants().compare(dt_hat_2_closed(q, w).unwrap().invariants()).agrees());

    println!("window needed for K^4 through q^{q}: {}", window_needed_for_k4(q).unwrap());
    let two = dt_2(q, w).unwrap();
    println!("two routes to (1,2,d) agree: {}", two.invariants().compare(dt_2_via_theta_d4(q, w).unwrap().invariants()).agrees());
    println!("DT_(1,(1,2,1)) = {}", two.invariant(1, 1).unwrap());

    let gw = gw_from_dt(&d1, 6).unwrap();
    println!("GW side at q^1: {:?}", gw.coeffs()[1].coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
}
