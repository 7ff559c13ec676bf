// The theta function K as a product in p and as an exponential in u; they agree.

use abelcount::modular::{theta_k_pq, theta_k_u};

fn main() {
    let (q, u) = (4, 8);
    let k_p = theta_k_pq(q, 24).unwrap();
    for (d, c) in k_p.coeffs().iter().enumerate() {
        println!("K at q^{d}: {c}");
    }
    let via_p = k_p.antisymmetric_w_to_u(u).unwrap();
    let direct = theta_k_u(q, u).unwrap();
    println!("u-form at q^0: {:?}", direct.coeffs()[0].coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let cmp = via_p.compare(&direct);
    println!("agree through q^{}, u^{u}: {}", cmp.q_order, cmp.agrees());
}
