use super::group::{ext_gcd, smith_diagonal, FiniteAbelianGroup};
use super::LatticeError;
use std::collections::{HashSet, VecDeque};

/// A subgroup of Z/m1 x ... x Z/mn, stored as the Hermite normal form of the lattice
/// spanned by its generators together with the relations m_i e_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    moduli: Vec<i64>,
    hnf: Vec<Vec<i64>>,
    generators: Vec<Vec<i64>>,
}

impl Subgroup {
    pub fn trivial(moduli: &[u64]) -> Self {
        let moduli: Vec<i64> = moduli.iter().map(|&m| m as i64).collect();
        let n = moduli.len();
        let hnf = (0..n).map(|i| (0..n).map(|j| if i == j { moduli[i] } else { 0 }).collect()).collect();
        Subgroup { moduli, hnf, generators: Vec::new() }
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Normal form: equal keys iff equal subgroups.
    pub fn canonical_key(&self) -> Vec<i64> {
        self.hnf.iter().flatten().copied().collect()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().zip(&self.hnf).enumerate().map(|(i, (m, row))| (m / row[i]) as u64).product()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let mut v = self.reduce_mod(x);
        for (j, row) in self.hnf.iter().enumerate() {
            if v[j] % row[j] != 0 {
                return false;
            }
            let q = v[j] / row[j];
            if q != 0 {
                for k in j..v.len() {
                    v[k] -= q * row[k];
                }
            }
        }
        v.iter().all(|&c| c == 0)
    }

    fn reduce_mod(&self, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.moduli).map(|(a, m)| a.rem_euclid(*m)).collect()
    }

    /// The subgroup generated by `self` and `x`.
    pub fn with_element(&self, x: &[i64]) -> Self {
        let n = self.moduli.len();
        let mut h = self.hnf.clone();
        let mut v = self.reduce_mod(x);
        for j in 0..n {
            if v[j] == 0 {
                continue;
            }
            let (a, b) = (h[j][j], v[j]);
            let (g, s, t) = ext_gcd(a, b);
            let new_row: Vec<i64> = (0..n).map(|k| s * h[j][k] + t * v[k]).collect();
            let rest: Vec<i64> = (0..n).map(|k| (b / g) * h[j][k] - (a / g) * v[k]).collect();
            h[j] = new_row;
            v = rest;
            for k in j + 1..n {
                v[k] = v[k].rem_euclid(self.moduli[k]);
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let q = h[i][k].div_euclid(h[k][k]);
                if q != 0 {
                    for c in k..n {
                        h[i][c] -= q * h[k][c];
                    }
                }
            }
        }
        let mut generators = self.generators.clone();
        generators.push(self.reduce_mod(x));
        Subgroup { moduli: self.moduli.clone(), hnf: h, generators }
    }

    /// Isomorphism type of the subgroup as an abstract group.
    pub fn isomorphism_type(&self) -> FiniteAbelianGroup {
        let n = self.moduli.len();
        // express each relation m_i e_i in the basis given by the rows of the HNF
        let mut rel = Vec::with_capacity(n);
        for i in 0..n {
            let mut target = vec![0i64; n];
            target[i] = self.moduli[i];
            let mut c = vec![0i64; n];
            for j in 0..n {
                let s: i64 = (0..j).map(|k| c[k] * self.hnf[k][j]).sum();
                let r = target[j] - s;
                debug_assert_eq!(r % self.hnf[j][j], 0);
                c[j] = r / self.hnf[j][j];
            }
            rel.push(c);
        }
        let d: Vec<u64> = smith_diagonal(rel).into_iter().map(|x| x as u64).collect();
        FiniteAbelianGroup::new(&d)
    }
}

/// Every element of Z/m1 x ... x Z/mn in lexicographic order.
pub(crate) fn elements(moduli: &[u64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m as i64).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// One generator for each cyclic subgroup.
fn cyclic_generators(moduli: &[u64]) -> Vec<Vec<i64>> {
    let base = Subgroup::trivial(moduli);
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for x in elements(moduli) {
        if x.iter().all(|&c| c == 0) {
            continue;
        }
        if seen.insert(base.with_element(&x).canonical_key()) {
            gens.push(x);
        }
    }
    gens
}

/// Closes the trivial subgroup under adding cyclic subgroups that pass `admissible`.
/// Returns every subgroup reached, each exactly once, in discovery order.
pub(crate) fn closure(
    moduli: &[u64],
    admissible: impl Fn(&Subgroup, &[i64]) -> bool,
) -> Vec<Subgroup> {
    let gens = cyclic_generators(moduli);
    let start = Subgroup::trivial(moduli);
    let mut seen = HashSet::from([start.canonical_key()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for g in &gens {
            if s.contains(g) || !admissible(&s, g) {
                continue;
            }
            let t = s.with_element(g);
            if seen.insert(t.canonical_key()) {
                queue.push_back(t);
            }
        }
        out.push(s);
    }
    out
}

/// All subgroups of `g`, each once.
pub fn enumerate_subgroups_bounded(g: &FiniteAbelianGroup, bound: u64) -> Result<Vec<Subgroup>, LatticeError> {
    if g.order() > bound {
        return Err(LatticeError::BoundExceeded { what: "subgroup enumeration", size: g.order(), bound });
    }
    Ok(closure(g.invariant_factors(), |_, _| true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(moduli: &[u64]) -> usize {
        enumerate_subgroups_bounded(&FiniteAbelianGroup::new(moduli), 4096).unwrap().len()
    }

    /// Subsets closed under addition, by brute force over the power set.
    fn brute_force_count(moduli: &[u64]) -> usize {
        let els = elements(moduli);
        let n = els.len();
        let add = |a: &Vec<i64>, b: &Vec<i64>| -> Vec<i64> {
            a.iter().zip(b).zip(moduli).map(|((x, y), m)| (x + y).rem_euclid(*m as i64)).collect()
        };
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<&Vec<i64>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &els[i]).collect();
                mask & 1 == 1 && set.iter().all(|a| set.iter().all(|b| set.contains(&&add(a, b))))
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(count(&[2, 2]), 5);
        assert_eq!(count(&[7]), 2);
        assert_eq!(count(&[2, 4]), 8);
        assert_eq!(count(&[3, 3]), 6);
        assert_eq!(count(&[5, 5]), 8);
        assert_eq!(count(&[1]), 1);
        assert_eq!(brute_force_count(&[2, 4]), 8);
        assert_eq!(brute_force_count(&[2, 2, 2]), count(&[2, 2, 2]));
        assert_eq!(brute_force_count(&[12]), count(&[12]));
    }

    #[test]
    fn keys_identify_subgroups() {
        let t = Subgroup::trivial(&[2, 4]);
        let a = t.with_element(&[1, 2]);
        let b = t.with_element(&[1, 2]).with_element(&[0, 0]);
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_eq!(a.order(), 2);
        let full = t.with_element(&[1, 0]).with_element(&[0, 1]);
        assert_eq!(full.order(), 8);
        assert_eq!(full.isomorphism_type(), FiniteAbelianGroup::new(&[2, 4]));
        assert_eq!(t.with_element(&[1, 1]).isomorphism_type(), FiniteAbelianGroup::new(&[4]));
        assert!(full.contains(&[1, 3]));
        assert!(!a.contains(&[0, 1]));
    }

    #[test]
    fn bound_is_enforced() {
        let g = FiniteAbelianGroup::new(&[64, 128]);
        assert!(matches!(enumerate_subgroups_bounded(&g, 4096), Err(LatticeError::BoundExceeded { bound: 4096, .. })));
    }
}
