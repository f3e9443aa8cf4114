//! Finite abelian groups, their characters, and module gradings.
//!
//! Group elements and characters are both coordinate vectors against a fixed
//! generator list with declared orders; the canonical pairing sends
//! `(χ, g) ↦ ζ_e^{Σ_i χ_i g_i (e/d_i)}` where e is the exponent. Bilinear
//! forms (for braidings and skew commutation) are tables of ζ_e-exponents.

use serde::{Deserialize, Serialize};

/// Coordinates of a group element or character, entry i reduced mod orders[i].
pub type GrpVec = Vec<u64>;

/// A finite abelian group presented by generator orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbGroup {
    pub orders: Vec<u64>,
    pub exponent: u64,
}

impl AbGroup {
    pub fn new(orders: Vec<u64>) -> Self {
        assert!(orders.iter().all(|&d| d >= 1));
        let exponent = orders.iter().fold(1u64, |a, &b| lcm(a, b));
        AbGroup { orders, exponent }
    }

    pub fn trivial() -> Self {
        AbGroup {
            orders: vec![],
            exponent: 1,
        }
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn zero(&self) -> GrpVec {
        vec![0; self.orders.len()]
    }

    pub fn add(&self, a: &GrpVec, b: &GrpVec) -> GrpVec {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), d)| (x + y) % d)
            .collect()
    }

    pub fn neg(&self, a: &GrpVec) -> GrpVec {
        a.iter()
            .zip(&self.orders)
            .map(|(x, d)| (d - x % d) % d)
            .collect()
    }

    pub fn sub(&self, a: &GrpVec, b: &GrpVec) -> GrpVec {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: u64, a: &GrpVec) -> GrpVec {
        a.iter()
            .zip(&self.orders)
            .map(|(x, d)| (x * (k % d)) % d)
            .collect()
    }

    pub fn is_zero(&self, a: &GrpVec) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Enumerate every element, lexicographically. Deterministic order.
    pub fn elements(&self) -> Vec<GrpVec> {
        let mut out = vec![self.zero()];
        for (i, &d) in self.orders.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for v in &out {
                for k in 0..d {
                    let mut w = v.clone();
                    w[i] = k;
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    /// Index of an element in the `elements()` enumeration.
    pub fn index_of(&self, a: &GrpVec) -> usize {
        let mut idx = 0usize;
        for (x, d) in a.iter().zip(&self.orders) {
            idx = idx * (*d as usize) + (*x as usize) % (*d as usize);
        }
        idx
    }

    pub fn element_at(&self, mut idx: usize) -> GrpVec {
        let mut v = self.zero();
        for i in (0..self.orders.len()).rev() {
            let d = self.orders[i] as usize;
            v[i] = (idx % d) as u64;
            idx /= d;
        }
        v
    }

    /// ζ_e-exponent of the canonical pairing of a character χ (dual
    /// coordinates) against a group element g.
    pub fn pairing_exp(&self, chi: &GrpVec, g: &GrpVec) -> i64 {
        let e = self.exponent;
        let mut s = 0u64;
        for ((x, y), d) in chi.iter().zip(g).zip(&self.orders) {
            s = (s + (x % d) * (y % d) % e * (e / d)) % e;
        }
        s as i64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A bilinear form on the character group, as ζ_e-exponents on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub table: Vec<Vec<i64>>,
    pub exponent: u64,
}

impl BilinearForm {
    /// Evaluate on character coordinate vectors; returns a ζ_e-exponent.
    pub fn eval(&self, a: &GrpVec, b: &GrpVec) -> i64 {
        let e = self.exponent as i64;
        let mut s: i64 = 0;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                s = (s + (*x as i64 % e) * (*y as i64 % e) % e * self.table[i][j]) % e;
            }
        }
        s.rem_euclid(e)
    }
}

/// Grading data of one module basis vector: a character of the grouplike
/// part plus an optional integer degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grade {
    pub ch: GrpVec,
    pub n: i64,
}

/// Smith normal form of an integer matrix; returns (diag, left, right) with
/// left·m·right = diag (diag rectangular, nonnegative diagonal entries).
/// Sizes here are at most 4×4, so the naive algorithm is fine.
pub fn smith_normal_form(m: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut left = ident(rows);
    let mut right = ident(cols);
    let mut t = 0usize;
    while t < rows.min(cols) {
        // find a nonzero pivot in the remaining block
        let mut piv = None;
        'outer: for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 {
                    piv = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        a.swap(t, pi);
        left.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in right.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    for j in 0..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..rows {
                        left[i][j] -= q * left[t][j];
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        left.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for i in 0..rows {
                        a[i][j] -= q * a[i][t];
                    }
                    for i in 0..cols {
                        right[i][j] -= q * right[i][t];
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        for row in right.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[t][t] < 0 {
            for j in 0..cols {
                a[t][j] = -a[t][j];
            }
            for j in 0..rows {
                left[t][j] = -left[t][j];
            }
        }
        t += 1;
    }
    // enforce divisibility chain
    for i in 0..rows.min(cols).saturating_sub(1) {
        loop {
            let (d1, d2) = (a[i][i], a[i + 1][i + 1]);
            if d1 == 0 || d2 % d1 == 0 {
                break;
            }
            // standard trick: add column i+1 to column i, then reduce
            for r in 0..rows {
                a[r][i] += a[r][i + 1];
            }
            for r in 0..cols {
                right[r][i] += right[r][i + 1];
            }
            // re-eliminate the 2x2 block
            let g = gcd_i(a[i][i], a[i + 1][i]);
            while a[i + 1][i] != 0 {
                let q = a[i][i] / a[i + 1][i];
                for j in 0..cols {
                    a[i][j] -= q * a[i + 1][j];
                }
                for j in 0..rows {
                    left[i][j] -= q * left[i + 1][j];
                }
                std::mem::swap(&mut a[i], &mut a[i + 1]);
                left.swap(i, i + 1);
            }
            debug_assert_eq!(a[i][i].abs(), g.abs());
            while a[i][i + 1] != 0 {
                let q = a[i][i + 1] / a[i][i];
                for r in 0..rows {
                    a[r][i + 1] -= q * a[r][i];
                }
                for r in 0..cols {
                    right[r][i + 1] -= q * right[r][i];
                }
            }
            if a[i][i] < 0 {
                for j in 0..cols {
                    a[i][j] = -a[i][j];
                }
                for j in 0..rows {
                    left[i][j] = -left[i][j];
                }
            }
            if a[i + 1][i + 1] < 0 {
                for j in 0..cols {
                    a[i + 1][j] = -a[i + 1][j];
                }
                for j in 0..rows {
                    left[i + 1][j] = -left[i + 1][j];
                }
            }
        }
    }
    (a, left, right)
}

fn gcd_i(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i(b, a % b)
    }
}

fn ident(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_basics() {
        let g = AbGroup::new(vec![3, 3]);
        assert_eq!(g.order(), 9);
        assert_eq!(g.exponent, 3);
        let els = g.elements();
        assert_eq!(els.len(), 9);
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.index_of(e), i);
            assert_eq!(g.element_at(i), *e);
        }
        // pairing is biadditive
        let chi = vec![1, 2];
        let a = vec![2, 1];
        let b = vec![1, 1];
        let lhs = g.pairing_exp(&chi, &g.add(&a, &b));
        let rhs = (g.pairing_exp(&chi, &a) + g.pairing_exp(&chi, &b)).rem_euclid(3);
        assert_eq!(lhs.rem_euclid(3), rhs);
    }

    #[test]
    fn snf_of_scaled_cartan_a2() {
        // 3·Cartan(A2) has Smith form diag(3, 9)
        let m = vec![vec![6, -3], vec![-3, 6]];
        let (d, l, r) = smith_normal_form(&m);
        assert_eq!(d[0][0], 3);
        assert_eq!(d[1][1], 9);
        // verify l·m·r = d
        let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            let n = a.len();
            let p = b[0].len();
            let k = b.len();
            (0..n)
                .map(|i| {
                    (0..p)
                        .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                        .collect()
                })
                .collect()
        };
        assert_eq!(mul(&mul(&l, &m.to_vec()), &r), d);
    }
}
