use num::Integer;

/// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1, mut x0, mut x1, mut y0, mut y1) = (a, b, 1i64, 0i64, 0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Diagonal of the Smith normal form of an integer matrix, d1 | d2 | ..., zeros last.
pub fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // move a nonzero entry of least modulus to (t, t); repeat until row and column clear
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(p);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold any entry not divisible by p into row t
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    let (mut nz, z): (Vec<i64>, Vec<i64>) = diag.into_iter().partition(|&d| d != 0);
    nz.sort_unstable();
    nz.extend(z);
    nz
}

/// A finite abelian group given by its invariant factors d1 | d2 | ... (trivial factors dropped).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// Normalises an arbitrary product Z/a1 x ... x Z/an. Zero entries are rejected.
    pub fn new(moduli: &[u64]) -> Self {
        assert!(moduli.iter().all(|&a| a > 0), "cyclic factors must be positive");
        let n = moduli.len();
        let m = (0..n)
            .map(|i| (0..n).map(|j| if i == j { moduli[i] as i64 } else { 0 }).collect())
            .collect();
        let invariant_factors = smith_diagonal(m).into_iter().filter(|&d| d > 1).map(|d| d as u64).collect();
        FiniteAbelianGroup { invariant_factors }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.iter().fold(1, |a, b| a.lcm(b))
    }
}
