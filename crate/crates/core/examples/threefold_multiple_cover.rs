// Imprimitive classes on A x E from primitive ones.

use abelcount::lattice::nu_subgroup_formula;
use abelcount::threefold::{dt_degenerate, mc_threefold_f, n_mc_factor, ThreefoldClassType, ThreefoldPrimitives};

fn main() {
    println!("f(3,2,2) = {}", mc_threefold_f(3, 2, 2).unwrap());
    println!("n(2,2,4; k=2) = {}", n_mc_factor([2, 2, 4], 2).unwrap());
    let p = ThreefoldPrimitives::new(16, 4).unwrap();
    for d in [[1, 1, 4], [1, 2, 2], [2, 2, 1], [2, 2, 4], [1, 4, 4]] {
        let t = ThreefoldClassType::new(d[0], d[1], d[2]).unwrap();
        let n3 = p.n_g_imprimitive(3, t).unwrap();
        println!("N_3{d:?} = {n3}, 2 nu = {}", 2 * nu_subgroup_formula(&d).unwrap());
    }
    for n in 1..=3 {
        println!("DT_({n},(0,0,2)) = {} = {}", p.dt_mc(n as i64, [0, 0, 2]).unwrap(), dt_degenerate(n, 2).unwrap());
    }
}
