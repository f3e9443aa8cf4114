//! Root-lattice combinatorics for the type A (and, for tests, B₂)
//! constructors: Cartan matrices, positive roots, weight-lattice coordinates
//! and quotient grouplike lattices.

use crate::grading::{smith_normal_form, AbGroup, GrpVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    SimplyConnected,
    Adjoint,
    /// The unique strict intermediate lattice (type A₃ only).
    Intermediate,
}

/// A positive root vector E_{i,j} (1 ≤ i < j ≤ n+1) with its root
/// coordinates and height.
#[derive(Clone, Debug)]
pub struct RootVector {
    pub i: usize,
    pub j: usize,
    /// Coordinates in the simple-root basis.
    pub alpha: Vec<i64>,
    pub height: u64,
    pub name: String,
}

pub fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

/// Positive root vectors of A_n in lexicographic (i,j) order.
pub fn root_vectors_a(n: usize) -> Vec<RootVector> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=(n + 1) {
            let mut alpha = vec![0i64; n];
            for t in i..j {
                alpha[t - 1] = 1;
            }
            let name = if j == i + 1 {
                format!("E{}{}", i, j)
            } else {
                format!("E{}{}", i, j)
            };
            out.push(RootVector {
                i,
                j,
                alpha,
                height: (j - i) as u64,
                name,
            });
        }
    }
    out
}

/// Killing pairing (γ, x) of γ in root coordinates against x in
/// fundamental-weight coordinates: (α_i, ω_j) = δ_ij.
pub fn pair_root_weight(gamma_alpha: &[i64], x_omega: &[i64]) -> i64 {
    gamma_alpha.iter().zip(x_omega).map(|(a, b)| a * b).sum()
}

/// (γ, ν) for two root-coordinate vectors, via the Cartan matrix.
pub fn pair_roots(cartan: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            s += x * y * cartan[i][j];
        }
    }
    s
}

/// The grouplike quotient for a chosen lattice: returns the abelian group,
/// plus for each simple root α_i the coordinates of K_{α_i} = q^{(α_i,−)} in
/// the dual group, and for each root γ its class coordinates (the degree of
/// E_γ) in the quotient.
pub struct GrouplikeData {
    pub group: AbGroup,
    /// K_{α_i} as a group element (coordinates matching `group`).
    pub k_simple: Vec<GrpVec>,
    /// Map: root coordinates (length n) → class in the quotient, as dual
    /// coordinates suitable for conjugation characters.
    pub root_class: Vec<GrpVec>,
    /// Total order |X/R| before dropping trivial factors.
    pub full_order: u64,
}

/// Build X/R where X is the chosen lattice (in ω-coordinates) and
/// R = lQ for the simply connected form, or the radical of the q-form on X
/// otherwise.
pub fn grouplikes_a(n: usize, l: u64, lattice: Lattice) -> Result<GrouplikeData, String> {
    let c = cartan_a(n);
    // X-basis as integer columns in ω-coordinates.
    let x_basis: Vec<Vec<i64>> = match lattice {
        Lattice::SimplyConnected => (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect(),
        Lattice::Adjoint => (0..n).map(|j| (0..n).map(|i| c[i][j]).collect()).collect(),
        Lattice::Intermediate => {
            if n != 3 {
                return Err(format!(
                    "intermediate lattice exists only in rank 3 (got rank {n})"
                ));
            }
            // v = ω₁ − ω₂ + ω₃ together with α₂, α₃ spans the index-2 lattice.
            vec![
                vec![1, -1, 1],
                (0..n).map(|i| c[i][1]).collect(),
                (0..n).map(|i| c[i][2]).collect(),
            ]
        }
    };
    // Relation lattice R in X-coordinates.
    let rels: Vec<Vec<i64>> = match lattice {
        Lattice::SimplyConnected => {
            // R = lQ; α_j has ω-coordinates C·e_j = column j of C, and
            // X-coords = same (X = P, basis identity).
            (0..n)
                .map(|j| (0..n).map(|i| l as i64 * c[i][j]).collect())
                .collect()
        }
        _ => {
            // R = {t : Gram_X · t ≡ 0 mod l} as a lattice: columns l·e_t
            // plus lifts of the kernel of Gram_X mod l.
            let gram = gram_x(&c, &x_basis)?;
            let mut cols: Vec<Vec<i64>> = (0..n)
                .map(|j| (0..n).map(|i| if i == j { l as i64 } else { 0 }).collect())
                .collect();
            for v in kernel_mod_l(&gram, l) {
                cols.push(v.iter().map(|&x| x as i64).collect());
            }
            cols
        }
    };
    // SNF of the relation matrix (columns = rels) in X-coordinates.
    let rank = x_basis.len();
    let mut relmat = vec![vec![0i64; rels.len()]; rank];
    for (j, col) in rels.iter().enumerate() {
        for i in 0..rank {
            relmat[i][j] = col[i];
        }
    }
    let (d, left, _right) = smith_normal_form(&relmat);
    // X/R ≅ ⊕ Z/d_i with coordinates x ↦ (left·x) mod d_i. d_i = 0 would
    // mean an infinite quotient (cannot happen here).
    let mut orders = Vec::new();
    for i in 0..rank {
        let di = if i < d.len() && i < d[i].len() { d[i][i] } else { 0 };
        if di == 0 {
            return Err("grouplike quotient is infinite".into());
        }
        orders.push(di.unsigned_abs());
    }
    let full_order: u64 = orders.iter().product();
    // keep only nontrivial factors
    let kept: Vec<usize> = (0..rank).filter(|&i| orders[i] > 1).collect();
    let group = AbGroup::new(kept.iter().map(|&i| orders[i]).collect());

    // coordinates of a lattice vector given in ω-coords: solve X-coords then
    // apply `left` and reduce.
    let to_coords = |omega: &[i64]| -> Result<GrpVec, String> {
        let t = solve_int(&x_basis, omega).ok_or("vector not in the chosen lattice")?;
        let mut out = Vec::new();
        for &i in &kept {
            let mut s = 0i64;
            for j in 0..rank {
                s += left[i][j] * t[j];
            }
            out.push(s.rem_euclid(orders[i] as i64) as u64);
        }
        Ok(out)
    };

    // Root classes: γ in α-coords → ω-coords via C.
    let roots = root_vectors_a(n);
    let mut root_class = Vec::new();
    for rv in &roots {
        let omega: Vec<i64> = (0..n)
            .map(|i| (0..n).map(|j| c[i][j] * rv.alpha[j]).sum())
            .collect();
        root_class.push(to_coords(&omega)?);
    }
    // K_{α_i}: the dual element with χ(K) = q^{(α_i, lift χ)}. In the kept
    // SNF coordinates with basis b_t (columns of left⁻¹), the coordinate is
    // k_t = (α_i, b_t)·d_t/l mod d_t, requiring l·exponent bookkeeping
    // handled by the caller through the group/field zeta factor: here we
    // return k_t against ζ_{exp} with exp = group exponent, i.e. the element
    // coordinates themselves.
    let linv = invert_unimodular(&left).ok_or("SNF left factor not unimodular")?;
    let mut k_simple = Vec::new();
    for i in 0..n {
        let mut coords = Vec::new();
        for (t_pos, &t) in kept.iter().enumerate() {
            let d_t = orders[t] as i64;
            // b_t in X-coords = column t of left⁻¹; in ω-coords = X·b_t.
            let bx: Vec<i64> = (0..rank).map(|r| linv[r][t]).collect();
            let omega: Vec<i64> = (0..rank)
                .map(|r| (0..rank).map(|s| x_basis[s][r] * bx[s]).sum())
                .collect();
            // (α_i, y) = y_i in ω-coordinates.
            let pair = omega[i];
            let num = pair * d_t;
            if num % l as i64 != 0 {
                return Err("K_alpha is not a character of the quotient".into());
            }
            coords.push((num / l as i64).rem_euclid(d_t) as u64);
            let _ = t_pos;
        }
        k_simple.push(coords);
    }
    Ok(GrouplikeData {
        group,
        k_simple,
        root_class,
        full_order,
    })
}

fn gram_x(c: &[Vec<i64>], x_basis: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, String> {
    // Gram entries (x_a, x_b) with x in ω-coords: xᵀ C⁻¹ y. Compute in
    // rationals scaled by det(C) and check integrality.
    let n = c.len();
    let det = det_int(c);
    let adj = adjugate(c);
    let mut gram = vec![vec![0i64; x_basis.len()]; x_basis.len()];
    for a in 0..x_basis.len() {
        for b in 0..x_basis.len() {
            let mut num = 0i64;
            for i in 0..n {
                for j in 0..n {
                    num += x_basis[a][i] * adj[i][j] * x_basis[b][j];
                }
            }
            if num % det != 0 {
                return Err("chosen lattice is not integral under the form".into());
            }
            gram[a][b] = num / det;
        }
    }
    Ok(gram)
}

fn det_int(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut d = 0;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&jj| jj != j)
                            .map(|jj| m[i][jj])
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                d += s * m[0][j] * det_int(&minor);
            }
            d
        }
    }
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c])
                        .collect()
                })
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = s * det_int(&minor);
        }
    }
    adj
}

fn kernel_mod_l(m: &[Vec<i64>], l: u64) -> Vec<Vec<u64>> {
    // kernel of m over Z/l (l prime in every use here)
    let n = m.len();
    let li = l as i64;
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(li)).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| a[r][col] % li != 0) else {
            continue;
        };
        a.swap(row, p);
        let inv = mod_inv(a[row][col].rem_euclid(li) as u64, l) as i64;
        for x in a[row].iter_mut() {
            *x = (*x * inv).rem_euclid(li);
        }
        for r in 0..n {
            if r != row && a[r][col] % li != 0 {
                let f = a[r][col];
                for cc in 0..n {
                    a[r][cc] = (a[r][cc] - f * a[row][cc]).rem_euclid(li);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut out = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (li - a[r][free]).rem_euclid(li) as u64;
        }
        out.push(v);
    }
    out
}

fn mod_inv(a: u64, l: u64) -> u64 {
    let mut res = 1u64;
    let mut base = a % l;
    let mut e = l - 2;
    while e > 0 {
        if e & 1 == 1 {
            res = res * base % l;
        }
        base = base * base % l;
        e >>= 1;
    }
    res
}

fn solve_int(basis_cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    // Solve Σ t_j · col_j = target over Z by rational elimination + check.
    let n = target.len();
    let m = basis_cols.len();
    let mut a: Vec<Vec<f64>> = vec![vec![0.0; m + 1]; n];
    for i in 0..n {
        for j in 0..m {
            a[i][j] = basis_cols[j][i] as f64;
        }
        a[i][m] = target[i] as f64;
    }
    // Gaussian elimination in rationals would be cleaner; the matrices here
    // are tiny unimodular-ish, so solve with i128 Cramer via det.
    if n != m {
        return None;
    }
    let mat: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..m).map(|j| basis_cols[j][i]).collect())
        .collect();
    let det = det_int(&mat);
    if det == 0 {
        return None;
    }
    let mut out = Vec::new();
    for j in 0..m {
        let mut mj = mat.clone();
        for i in 0..n {
            mj[i][j] = target[i];
        }
        let dj = det_int(&mj);
        if dj % det != 0 {
            return None;
        }
        out.push(dj / det);
    }
    Some(out)
}

fn invert_unimodular(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let det = det_int(m);
    if det.abs() != 1 {
        return None;
    }
    let adj = adjugate(m);
    // adjugate here is the transpose-cofactor convention giving m·adjᵀ? We
    // normalize by direct verification instead.
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            inv[i][j] = adj[i][j] * det;
        }
    }
    // verify
    for i in 0..n {
        for j in 0..n {
            let s: i64 = (0..n).map(|k| m[i][k] * inv[k][j]).sum();
            if s != i64::from(i == j) {
                return None;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_a2() {
        let r = root_vectors_a(2);
        assert_eq!(r.len(), 3);
        assert_eq!(r[0].alpha, vec![1, 0]);
        assert_eq!(r[1].alpha, vec![1, 1]);
        assert_eq!(r[2].alpha, vec![0, 1]);
        assert_eq!(r[1].height, 2);
    }

    #[test]
    fn sc_grouplikes_orders() {
        let g = grouplikes_a(2, 5, Lattice::SimplyConnected).unwrap();
        assert_eq!(g.full_order, 75);
        assert_eq!(g.group.exponent, 15);
        let g = grouplikes_a(1, 3, Lattice::SimplyConnected).unwrap();
        assert_eq!(g.full_order, 6);
        let g = grouplikes_a(2, 3, Lattice::SimplyConnected).unwrap();
        assert_eq!(g.full_order, 27);
        assert_eq!(g.group.exponent, 9);
    }

    #[test]
    fn adjoint_grouplikes() {
        let g = grouplikes_a(2, 3, Lattice::Adjoint).unwrap();
        // Q/rad for A2 at l=3 has order 3
        assert_eq!(g.full_order, 3);
    }

    #[test]
    fn k_alpha_pairing_a2_sc() {
        // χ(K_α) values against the class of a root must reproduce q^{(α,γ)}.
        let l = 3u64;
        let g = grouplikes_a(2, l, Lattice::SimplyConnected).unwrap();
        let roots = root_vectors_a(2);
        let c = cartan_a(2);
        let e = g.group.exponent;
        for (ri, rv) in roots.iter().enumerate() {
            for i in 0..2 {
                // pairing of the class of γ (as character-style coords) with K_αi
                let got = g.group.pairing_exp(&g.root_class[ri], &g.k_simple[i]);
                let want = pair_roots(&c, &{
                    let mut a = vec![0i64; 2];
                    a[i] = 1;
                    a
                }, &rv.alpha);
                // got is a ζ_e exponent; want is a q = ζ_e^{e/l} exponent
                assert_eq!(
                    got.rem_euclid(e as i64),
                    ((e / l) as i64 * want).rem_euclid(e as i64),
                    "root {ri}, K_{i}"
                );
            }
        }
    }
}
