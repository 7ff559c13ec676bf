// nu(d1, d2, ...) by subgroup sums, by isotropic subgroups, and in closed form.

use abelcount::lattice::{
    enumerate_subgroups, hom_sym_count, nu_closed, nu_isotropic, nu_recursion, nu_subgroup_formula, FiniteAbelianGroup,
};

fn main() {
    let g = FiniteAbelianGroup::new(&[2, 4]);
    let subs = enumerate_subgroups(&g).unwrap();
    println!("Z/2 x Z/4 has {} subgroups", subs.len());
    for s in &subs {
        let t = s.isomorphism_type();
        println!("  order {:>2}  type {:?}  sym homs {}", s.order(), t.invariant_factors(), hom_sym_count(&t).unwrap());
    }
    println!("nu(2,4): subgroups {}, isotropic {}, closed {}, recursion {}",
        nu_subgroup_formula(&[2, 4]).unwrap(),
        nu_isotropic(&[2, 4]).unwrap(),
        nu_closed(2, 4).unwrap(),
        nu_recursion(2, 1, 2).unwrap());
    println!("nu(2,2,2) = {}", nu_subgroup_formula(&[2, 2, 2]).unwrap());
}
