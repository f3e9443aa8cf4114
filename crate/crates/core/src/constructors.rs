//! Constructors for every algebra class the engine supports: bosonized
//! quantum complete intersections, functions on semidirect-product height-1
//! group schemes, restricted enveloping algebras of nilpotent Lie algebras,
//! and quantum Borels in type A (rank ≤ 3).

use std::sync::Arc;

use crate::error::{EngineError, Result};
use crate::grading::{AbGroup, BilinearForm, GrpVec};
use crate::hopf::{GenInfo, HopfAlgebra, UElem, UTensorElem};
use crate::presentation::{PbwAlgebra, RewriteSystem, Word};
use crate::rootdata::{self, Lattice};
use crate::scalar::{is_prime, Field, Fp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grouplikes {
    Extended,
    Standard,
}

/// Truncation factor for integrations: caps are `trunc_factor · N_i`
/// exponents per variable. Three is enough for every lift in this crate.
pub const DEFAULT_TRUNC_FACTOR: u16 = 3;

fn validate_skew_matrix(n: usize, a: &[Vec<i64>]) -> Result<()> {
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(EngineError::Invalid(format!(
            "parameter matrix must be {n}×{n}"
        )));
    }
    for i in 0..n {
        if a[i][i] != 1 {
            return Err(EngineError::Invalid(
                "parameter matrix must have 1 on the diagonal".into(),
            ));
        }
        for j in 0..n {
            if i != j && a[i][j] != -a[j][i] {
                return Err(EngineError::Invalid(
                    "parameter matrix must be skew-symmetric off the diagonal".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Smallest admissible default prime for a QCI at odd order l (p ≡ 1 mod l,
/// p ≥ 7).
pub fn default_qci_prime(l: u64) -> u64 {
    Fp::smallest_prime_with_root(l, 7)
}

/// The skew polynomial fiber/integration pair shared by the QCI-type
/// constructors. `zeta_mul` scales skew exponents into field-root exponents.
fn skew_pbw_pair<F: Field>(
    field: &F,
    n: usize,
    l: u64,
    a: &[Vec<i64>],
    zeta_mul: i64,
    trunc_factor: u16,
) -> (PbwAlgebra<F>, PbwAlgebra<F>) {
    let weights = vec![1u64; n];
    let mut rs = RewriteSystem::new(field.clone(), weights.clone());
    for j in 0..n {
        for i in 0..j {
            // x_j x_i = q_{ji} x_i x_j
            rs.add_relation(vec![
                (vec![j as u8, i as u8], field.one()),
                (
                    vec![i as u8, j as u8],
                    field.neg(&field.zeta_pow(a[j][i] * zeta_mul)),
                ),
            ]);
        }
    }
    let mut rs_q = rs.clone();
    for i in 0..n {
        rs.add_relation(vec![(vec![i as u8; l as usize], field.one())]);
    }
    let fiber_bound = 2 * n as u64 * l + 2 * l;
    rs.complete(fiber_bound, 128);
    let fiber = PbwAlgebra::new(rs, vec![l as u16; n], true);
    let qcap = trunc_factor * l as u16;
    let q_bound = 2 * n as u64 * qcap as u64 + 2 * l;
    rs_q.complete(q_bound, 128);
    let qint = PbwAlgebra::new(rs_q, vec![qcap; n], false);
    (fiber, qint)
}

/// Bosonized quantum complete intersection u = u⁺ ⋊ kG at a root of unity of
/// odd order l, with parameters q_ij = q^{a_ij} and either the extended
/// (rank 2n) or standard (rank n) grouplikes. The field must carry a
/// primitive l-th root of unity.
pub fn build_qci<F: Field>(
    field: F,
    l: u64,
    a: Vec<Vec<i64>>,
    grouplikes: Grouplikes,
    trunc_factor: u16,
    config_hash: String,
) -> Result<Arc<HopfAlgebra<F>>> {
    if l % 2 == 0 || l < 3 {
        return Err(EngineError::Invalid(format!(
            "root order must be odd and ≥ 3 (got {l})"
        )));
    }
    let n = a.len();
    validate_skew_matrix(n, &a)?;
    if field.root_order() % l != 0 {
        return Err(EngineError::Invalid(format!(
            "field carries no primitive {l}-th root of unity (root order {})",
            field.root_order()
        )));
    }
    if field.characteristic() != 0 && (field.characteristic() - 1) % l != 0 {
        return Err(EngineError::Invalid(format!(
            "prime field F_{} has no {l}-th roots of unity",
            field.characteristic()
        )));
    }
    let zeta_mul = (field.root_order() / l) as i64;
    let (fiber, qint) = skew_pbw_pair(&field, n, l, &a, zeta_mul, trunc_factor);

    let li = l as i64;
    let alt = |i: usize, j: usize| -> i64 {
        if i == j {
            0
        } else {
            // (a_ij - a_ji)/2 = a_ij off the diagonal; keep the halved form
            // so the formula stays correct for any integral input.
            let two_inv = ((li + 1) / 2) % li;
            ((a[i][j] - a[j][i]).rem_euclid(li) * two_inv).rem_euclid(li)
        }
    };

    let (group, gens, delta_formula_k, braid_form, name) = match grouplikes {
        Grouplikes::Extended => {
            let rank = 2 * n;
            let group = AbGroup::new(vec![l; rank]);
            // Form table on the character group: rows/cols ordered e_1..e_n,
            // χ_1..χ_n.
            let mut form = vec![vec![0i64; rank]; rank];
            for i in 0..n {
                for j in 0..n {
                    form[i][j] = a[i][j].rem_euclid(li) * zeta_mul;
                    form[i][n + j] = alt(i, j) * zeta_mul;
                }
            }
            let braid = BilinearForm {
                table: form.clone(),
                exponent: field.root_order(),
            };
            // K_i = q^{(e_i,−)}: element coordinates are the ζ_exp-exponents
            // against each character generator, scaled back to group units.
            let mut k_elts: Vec<GrpVec> = Vec::new();
            for i in 0..n {
                let coords: GrpVec = (0..rank)
                    .map(|s| (form[i][s] / zeta_mul).rem_euclid(li) as u64)
                    .collect();
                k_elts.push(coords);
            }
            let gens: Vec<GenInfo> = (0..n)
                .map(|i| {
                    let mut ch = vec![0u64; rank];
                    ch[i] = 1;
                    GenInfo {
                        name: format!("x{}", i + 1),
                        weight: 1,
                        char_deg: ch,
                        root_deg: {
                            let mut r = vec![0i64; n];
                            r[i] = 1;
                            r
                        },
                    }
                })
                .collect();
            let names: Vec<String> = (1..=n)
                .map(|i| format!("e{i}"))
                .chain((1..=n).map(|i| format!("c{i}")))
                .collect();
            (
                (group, names),
                gens,
                k_elts,
                Some(braid),
                format!("qci-ext-l{l}-n{n}"),
            )
        }
        Grouplikes::Standard => {
            let group = AbGroup::new(vec![l; n]);
            // K_i is the i-th group generator; x_j has conjugation character
            // χ with χ(K_i) = q^{a_ij}, i.e. dual coordinates (a_1j,…,a_nj).
            let k_elts: Vec<GrpVec> = (0..n)
                .map(|i| {
                    let mut v = vec![0u64; n];
                    v[i] = 1;
                    v
                })
                .collect();
            let gens: Vec<GenInfo> = (0..n)
                .map(|j| GenInfo {
                    name: format!("x{}", j + 1),
                    weight: 1,
                    char_deg: (0..n).map(|i| a[i][j].rem_euclid(li) as u64).collect(),
                    root_deg: {
                        let mut r = vec![0i64; n];
                        r[j] = 1;
                        r
                    },
                })
                .collect();
            // Canonical braiding form: solve Aᵀ·X = I mod l when possible.
            let braid = invert_mod(&a, l).map(|ainv_t| {
                // X = (Aᵀ)⁻¹, i.e. X[r][s] = (A⁻¹)[s][r]
                let table: Vec<Vec<i64>> = (0..n)
                    .map(|r| (0..n).map(|s| ainv_t[s][r] * zeta_mul).collect())
                    .collect();
                BilinearForm {
                    table,
                    exponent: field.root_order(),
                }
            });
            let names: Vec<String> = (1..=n).map(|i| format!("K{i}")).collect();
            (
                (group, names),
                gens,
                k_elts,
                braid,
                format!("qci-std-l{l}-n{n}"),
            )
        }
    };
    let (group, group_names) = group;

    let mut h = HopfAlgebra::assemble(
        field.clone(),
        name,
        gens,
        fiber,
        qint,
        group,
        group_names,
        vec![Vec::new(); n],
        vec![Vec::new(); n],
        Some(a.clone()),
        braid_form,
        config_hash,
    );
    // Δ(x_i) = x_i⊗1 + K_i⊗x_i, S(x_i) = −K_i⁻¹ x_i.
    let f = field;
    let mut deltas: Vec<UTensorElem<F>> = Vec::new();
    let mut antipodes: Vec<UElem<F>> = Vec::new();
    for i in 0..n {
        let xi = h.uid(h.fiber.gen_id(i), 0);
        let ki = h.uid(0, h.group.index_of(&delta_formula_k[i]));
        let one = h.unit_uid();
        deltas.push(vec![((xi, one), f.one()), ((ki, xi), f.one())]);
        let ki_inv = h.uid(0, h.group.index_of(&h.group.neg(&delta_formula_k[i])));
        let s = h.mul_basis_u(ki_inv, xi)?;
        antipodes.push(s.into_iter().map(|(id, c)| (id, f.neg(&c))).collect());
    }
    h.delta_gens = deltas;
    h.antipode_gens = antipodes;
    h.into_checked()
}

fn invert_mod(a: &[Vec<i64>], l: u64) -> Option<Vec<Vec<i64>>> {
    // Inverse of a mod l (l odd; uses gcd-based inverses so nonprime l still
    // works when every pivot is a unit).
    let n = a.len();
    let li = l as i64;
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut row: Vec<i64> = a[i].iter().map(|x| x.rem_euclid(li)).collect();
            let mut id = vec![0i64; n];
            id[i] = 1;
            row.extend(id);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| unit_inverse(m[r][col], li).is_some())?;
        m.swap(col, piv);
        let inv = unit_inverse(m[col][col], li).unwrap();
        for x in m[col].iter_mut() {
            *x = (*x * inv).rem_euclid(li);
        }
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..2 * n {
                    m[r][c] = (m[r][c] - f * m[col][c]).rem_euclid(li);
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n..].to_vec()).collect())
}

fn unit_inverse(x: i64, l: i64) -> Option<i64> {
    let x = x.rem_euclid(l);
    for y in 1..l {
        if (x * y).rem_euclid(l) == 1 {
            return Some(y);
        }
    }
    None
}

/// A permutation of {0..n-1}; perm[i] is the image of i.
pub type Perm = Vec<usize>;

fn perm_order(p: &Perm) -> u64 {
    let n = p.len();
    let mut cur: Perm = (0..n).collect();
    for k in 1..=3628800u64 {
        cur = p.iter().map(|&i| cur[i]).collect::<Vec<_>>();
        let _ = &cur;
        // apply p to identity k times: track directly below instead
        if {
            let mut q: Perm = (0..n).collect();
            for _ in 0..k {
                q = (0..n).map(|i| p[q[i]]).collect();
            }
            q == (0..n).collect::<Vec<_>>()
        } {
            return k;
        }
    }
    unreachable!("permutation order overflow")
}

fn compose_perm(a: &Perm, b: &Perm) -> Perm {
    // (a∘b)(i) = a(b(i))
    (0..a.len()).map(|i| a[b[i]]).collect()
}

fn inverse_perm(a: &Perm) -> Perm {
    let mut inv = vec![0usize; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Functions on the finite group scheme (G_{a(1)})ⁿ ⋊ π over F_p, for an
/// abelian permutation group π with p ∤ |π|. The generators of π must
/// generate independent cyclic factors (π ≅ ∏⟨π_r⟩), which covers every
/// case in scope; anything else is rejected as unsupported.
pub fn build_group_scheme_functions<F: Field>(
    field: F,
    p: u64,
    n: usize,
    perm_gens: Vec<Perm>,
    trunc_factor: u16,
    config_hash: String,
) -> Result<Arc<HopfAlgebra<F>>> {
    if !is_prime(p) {
        return Err(EngineError::Invalid(format!("{p} is not prime")));
    }
    if field.characteristic() != p {
        return Err(EngineError::Invalid(
            "field characteristic must equal p".into(),
        ));
    }
    for g in &perm_gens {
        if g.len() != n || {
            let mut s = g.clone();
            s.sort_unstable();
            s != (0..n).collect::<Vec<_>>()
        } {
            return Err(EngineError::Invalid(format!(
                "not a permutation of 0..{n}: {g:?}"
            )));
        }
    }
    // abelian check
    for a in &perm_gens {
        for b in &perm_gens {
            if compose_perm(a, b) != compose_perm(b, a) {
                return Err(EngineError::Unsupported(
                    "non-abelian component groups are not supported".into(),
                ));
            }
        }
    }
    let orders: Vec<u64> = perm_gens.iter().map(perm_order).collect();
    let group_order: u64 = orders.iter().product();
    // direct-factor check: the listed generators must enumerate π without
    // collisions
    {
        let mut seen = std::collections::HashSet::new();
        let group = AbGroup::new(orders.clone());
        for el in group.elements() {
            let mut q: Perm = (0..n).collect();
            for (r, &e) in el.iter().enumerate() {
                for _ in 0..e {
                    q = compose_perm(&perm_gens[r], &q);
                }
            }
            if !seen.insert(q) {
                return Err(EngineError::Unsupported(
                    "permutation generators do not split π into independent cyclic factors"
                        .into(),
                ));
            }
        }
    }
    if group_order % p == 0 {
        return Err(EngineError::Invalid(format!(
            "p = {p} divides |π| = {group_order}; the component group algebra must be semisimple"
        )));
    }
    let exp = orders.iter().fold(1u64, crate::grading::lcm);
    if field.root_order() % exp != 0 {
        return Err(EngineError::Invalid(format!(
            "field must contain primitive {exp}-th roots of unity for the component characters"
        )));
    }
    if field.characteristic() != 0 && (field.characteristic() - 1) % exp != 0 {
        return Err(EngineError::Invalid(format!(
            "F_{p} has no primitive {exp}-th roots of unity"
        )));
    }

    // commutative truncated polynomial fiber, trivial conjugation characters
    let a = vec![vec![0i64; n]; n]; // used only for rule exponents: all q_ij=1
    let mut a_diag = a;
    for i in 0..n {
        a_diag[i][i] = 1;
    }
    let (fiber, qint) = skew_pbw_pair(&field, n, p, &{
        // off-diagonal zero, diagonal irrelevant for rules
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 1;
        }
        m
    }, 0, trunc_factor);

    let group = AbGroup::new(orders.clone());
    let rank = group.rank();
    let gens: Vec<GenInfo> = (0..n)
        .map(|i| GenInfo {
            name: format!("x{}", i + 1),
            weight: 1,
            char_deg: vec![0; rank],
            root_deg: {
                let mut r = vec![0i64; n];
                r[i] = 1;
                r
            },
        })
        .collect();
    let group_names: Vec<String> = (1..=rank).map(|r| format!("s{r}")).collect();

    let h = HopfAlgebra::assemble(
        field.clone(),
        format!("ogrp-p{p}-n{n}-pi{group_order}"),
        gens,
        fiber,
        qint,
        group.clone(),
        group_names,
        vec![Vec::new(); n],
        vec![Vec::new(); n],
        Some({
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 1;
            }
            m
        }),
        None,
        config_hash,
    );

    // π-element table: index by group coordinates (characters ↔ elements of
    // π both use the same coordinate group here; we fix the isomorphism
    // sending the r-th character generator to the r-th permutation).
    let elements = group.elements();
    let perm_of = |coords: &GrpVec| -> Perm {
        let mut q: Perm = (0..n).collect();
        for (r, &e) in coords.iter().enumerate() {
            for _ in 0..e {
                q = compose_perm(&perm_gens[r], &q);
            }
        }
        q
    };
    let f = field.clone();
    let inv_order = f
        .inv(&f.from_i64(group_order as i64))
        .expect("p ∤ |π| ensures invertibility");
    // δ_h = |π|⁻¹ Σ_m χ_m(h)⁻¹ s^m as group-part coefficients.
    let delta_h_coeffs = |h_coords: &GrpVec| -> Vec<(usize, F::Elem)> {
        elements
            .iter()
            .map(|m| {
                let e = -(group.pairing_exp(m, h_coords)) * h2_factor(&f, &group);
                (group.index_of(m), f.mul(&inv_order, &f.zeta_pow(e)))
            })
            .collect()
    };

    let mut deltas: Vec<UTensorElem<F>> = Vec::new();
    let mut antipodes: Vec<UElem<F>> = Vec::new();
    for i in 0..n {
        // Δ(x_i) = Σ_h x_{h(i)} ⊗ δ_h + 1 ⊗ x_i
        let mut d: UTensorElem<F> = Vec::new();
        for hc in &elements {
            let perm = perm_of(hc);
            let xh = h.uid(h.fiber.gen_id(perm[i]), 0);
            for (gidx, c) in delta_h_coeffs(hc) {
                d.push(((xh, h.uid(0, gidx)), c));
            }
        }
        let xi = h.uid(h.fiber.gen_id(i), 0);
        d.push(((h.unit_uid(), xi), f.one()));
        d = merge_tensor(&f, d);
        deltas.push(d);
        // S(x_i) = −Σ_h x_{h⁻¹(i)} δ_h
        let mut s: UElem<F> = Vec::new();
        for hc in &elements {
            let perm = inverse_perm(&perm_of(hc));
            let xh = h.fiber.gen_id(perm[i]);
            for (gidx, c) in delta_h_coeffs(hc) {
                s.push((h.uid(xh, gidx), f.neg(&c)));
            }
        }
        antipodes.push(merge_elem(&f, s));
    }
    let mut h = h;
    h.delta_gens = deltas;
    h.antipode_gens = antipodes;
    h.into_checked()
}

fn h2_factor<F: Field>(f: &F, group: &AbGroup) -> i64 {
    (f.root_order() / group.exponent) as i64
}

fn merge_tensor<F: Field>(f: &F, v: UTensorElem<F>) -> UTensorElem<F> {
    let mut acc: std::collections::BTreeMap<(u32, u32), F::Elem> = std::collections::BTreeMap::new();
    for (k, c) in v {
        let e = acc.entry(k).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
    }
    acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
}

fn merge_elem<F: Field>(f: &F, v: UElem<F>) -> UElem<F> {
    let mut acc: std::collections::BTreeMap<u32, F::Elem> = std::collections::BTreeMap::new();
    for (k, c) in v {
        let e = acc.entry(k).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
    }
    acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
}

/// A nilpotent Lie algebra given by structure constants on named generators:
/// brackets[(i,j)] = [b_i, b_j] as a list of (k, coeff), for i < j.
#[derive(Clone, Debug)]
pub struct LiePresentation {
    pub names: Vec<String>,
    pub brackets: std::collections::BTreeMap<(usize, usize), Vec<(usize, i64)>>,
}

impl LiePresentation {
    pub fn abelian(rank: usize) -> Self {
        LiePresentation {
            names: (1..=rank).map(|i| format!("b{i}")).collect(),
            brackets: Default::default(),
        }
    }

    /// Heisenberg h₃: [x, y] = z.
    pub fn heisenberg() -> Self {
        let mut brackets = std::collections::BTreeMap::new();
        brackets.insert((0usize, 1usize), vec![(2usize, 1i64)]);
        LiePresentation {
            names: vec!["x".into(), "y".into(), "z".into()],
            brackets,
        }
    }

    fn bracket(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vec![],
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .cloned()
                .unwrap_or_default()
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect(),
        }
    }
}

/// Restricted enveloping algebra u^res(n) of a nilpotent Lie algebra over
/// F_p with zero p-power map. The PBW order puts deeper lower central series
/// layers first, and the recorded `lcs_sequence` (shallowest first) is the
/// regular-sequence order.
pub fn build_restricted_enveloping<F: Field>(
    field: F,
    p: u64,
    lie: LiePresentation,
    p_power_zero: bool,
    trunc_factor: u16,
    config_hash: String,
) -> Result<(Arc<HopfAlgebra<F>>, Vec<usize>)> {
    if !p_power_zero {
        return Err(EngineError::Unsupported(
            "only the zero p-power map is supported".into(),
        ));
    }
    if !is_prime(p) || field.characteristic() != p {
        return Err(EngineError::Invalid(
            "field characteristic must be the given prime".into(),
        ));
    }
    let m = lie.names.len();
    // Jacobi identity over the integers reduced mod p.
    let f = field.clone();
    let bracket_vec = |i: usize, j: usize| -> Vec<i64> {
        let mut v = vec![0i64; m];
        for (k, c) in lie.bracket(i, j) {
            v[k] += c;
        }
        v
    };
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
                let mut total = vec![f.zero(); m];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (t, ct) in lie.bracket(a, b) {
                        for (u, cu) in lie.bracket(t, c) {
                            total[u] =
                                f.add(&total[u], &f.from_i64(ct * cu));
                        }
                    }
                }
                if total.iter().any(|x| !f.is_zero(x)) {
                    return Err(EngineError::Invalid(format!(
                        "Jacobi identity fails on ({i},{j},{k})"
                    )));
                }
            }
        }
    }
    // Lower central series depth per generator; also certifies nilpotency.
    let mut depth = vec![1u64; m];
    {
        // iterate: depth of anything appearing in [x, y] is ≥ depth x + depth y
        let mut changed = true;
        let mut rounds = 0;
        while changed {
            changed = false;
            rounds += 1;
            if rounds > 2 * m as u64 + 4 {
                return Err(EngineError::Invalid(
                    "Lie algebra is not nilpotent (lower central series does not terminate)"
                        .into(),
                ));
            }
            for i in 0..m {
                for j in 0..m {
                    for (k, c) in lie.bracket(i, j) {
                        if c != 0 {
                            let want = depth[i] + depth[j];
                            if depth[k] < want {
                                depth[k] = want;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
    }
    // PBW order: deeper first. Stable order for determinism.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(depth[i]), i));
    let pos_of: Vec<usize> = {
        let mut v = vec![0usize; m];
        for (pos, &orig) in order.iter().enumerate() {
            v[orig] = pos;
        }
        v
    };
    // graded check: every bracket term is weight-homogeneous; if so use the
    // depth weights (giving the N-grading), otherwise fall back to weight 1.
    let graded = (0..m).all(|i| {
        (0..m).all(|j| {
            lie.bracket(i, j)
                .iter()
                .all(|&(k, c)| c == 0 || depth[k] == depth[i] + depth[j])
        })
    });
    let weights: Vec<u64> = order
        .iter()
        .map(|&orig| if graded { depth[orig] } else { 1 })
        .collect();

    let mut rs = RewriteSystem::new(f.clone(), weights.clone());
    for a_pos in 0..m {
        for b_pos in 0..a_pos {
            // z_{a} z_{b} = z_b z_a + [orig(a), orig(b)]
            let (oa, ob) = (order[a_pos], order[b_pos]);
            let mut rel: Vec<(Word, F::Elem)> = vec![
                (vec![a_pos as u8, b_pos as u8], f.one()),
                (vec![b_pos as u8, a_pos as u8], f.neg(&f.one())),
            ];
            for (k, c) in lie.bracket(oa, ob) {
                rel.push((vec![pos_of[k] as u8], f.neg(&f.from_i64(c))));
            }
            rs.add_relation(rel);
        }
    }
    let mut rs_q = rs.clone();
    for i in 0..m {
        rs.add_relation(vec![(vec![i as u8; p as usize], f.one())]);
    }
    let max_w: u64 = weights.iter().sum::<u64>() * p;
    rs.complete(2 * max_w + 4, 256);
    let fiber = PbwAlgebra::new(rs, vec![p as u16; m], true);
    let qcap = trunc_factor * p as u16;
    rs_q.complete(2 * weights.iter().sum::<u64>() * qcap as u64 + 4, 256);
    let qint = PbwAlgebra::new(rs_q, vec![qcap; m], false);

    let group = AbGroup::trivial();
    let gens: Vec<GenInfo> = (0..m)
        .map(|pos| GenInfo {
            name: lie.names[order[pos]].clone(),
            weight: weights[pos],
            char_deg: vec![],
            root_deg: {
                let mut r = vec![0i64; m];
                r[pos] = 1;
                r
            },
        })
        .collect();

    let mut h = HopfAlgebra::assemble(
        f.clone(),
        format!("ures-p{p}-dim{m}"),
        gens,
        fiber,
        qint,
        group,
        vec![],
        vec![Vec::new(); m],
        vec![Vec::new(); m],
        None,
        Some(BilinearForm {
            table: vec![vec![0; 0]; 0],
            exponent: field.root_order(),
        }),
        config_hash,
    );
    let mut deltas = Vec::new();
    let mut antipodes = Vec::new();
    for i in 0..m {
        let zi = h.uid(h.fiber.gen_id(i), 0);
        deltas.push(vec![
            ((zi, h.unit_uid()), f.one()),
            ((h.unit_uid(), zi), f.one()),
        ]);
        antipodes.push(vec![(zi, f.neg(&f.one()))]);
    }
    h.delta_gens = deltas;
    h.antipode_gens = antipodes;
    // braid form for the trivial group: empty table (symmetric Vect)
    h.braid_form = Some(BilinearForm {
        table: vec![],
        exponent: f.root_order(),
    });
    let alg = h.into_checked()?;
    // regular-sequence order: shallowest first = reverse of the PBW order
    let lcs_sequence: Vec<usize> = (0..m).rev().collect();
    Ok((alg, lcs_sequence))
}

/// The quantum Borel u_q(b) = u_q(n) ⋊ kG in type A_n (n ≤ 3) at odd order
/// l, with the grouplike lattice chosen explicitly. Returns the algebra; the
/// positive generators are the lexicographically ordered root vectors.
pub fn build_quantum_borel_a<F: Field>(
    field: F,
    n: usize,
    l: u64,
    lattice: Lattice,
    trunc_factor: u16,
    config_hash: String,
) -> Result<Arc<HopfAlgebra<F>>> {
    if n == 0 || n > 3 {
        return Err(EngineError::Unsupported(format!(
            "type A rank must be 1..3 (got {n})"
        )));
    }
    if l % 2 == 0 || l < 3 {
        return Err(EngineError::Invalid(format!(
            "root order must be odd and ≥ 3 (got {l})"
        )));
    }
    if lattice != Lattice::SimplyConnected && !is_prime(l) {
        return Err(EngineError::Unsupported(
            "adjoint/intermediate lattices currently require prime l".into(),
        ));
    }
    let gl = rootdata::grouplikes_a(n, l, lattice).map_err(EngineError::Invalid)?;
    let e_needed = crate::grading::lcm(l, gl.group.exponent);
    if field.root_order() % e_needed != 0 {
        return Err(EngineError::Invalid(format!(
            "field needs a primitive {e_needed}-th root of unity (has order {})",
            field.root_order()
        )));
    }
    let q_mul = (field.root_order() / l) as i64; // q = ζ^{q_mul}
    let f = field.clone();
    let qp = |k: i64| f.zeta_pow(k * q_mul);

    let roots = rootdata::root_vectors_a(n);
    let cartan = rootdata::cartan_a(n);
    let ngen = roots.len();
    let weights: Vec<u64> = roots.iter().map(|r| r.height).collect();

    let mut rs = RewriteSystem::new(f.clone(), weights.clone());
    // q-Serre relations on the simple generators
    let simple_pos: Vec<usize> = (0..ngen).filter(|&t| roots[t].height == 1).collect();
    for &s1 in &simple_pos {
        for &s2 in &simple_pos {
            if s1 == s2 {
                continue;
            }
            let pairing = rootdata::pair_roots(&cartan, &roots[s1].alpha, &roots[s2].alpha);
            if pairing == 0 {
                if s1 > s2 {
                    rs.add_relation(vec![
                        (vec![s1 as u8, s2 as u8], f.one()),
                        (vec![s2 as u8, s1 as u8], f.neg(&f.one())),
                    ]);
                }
            } else if pairing == -1 && s1 < s2 {
                // E1²E2 − (q+q⁻¹) E1E2E1 + E2E1² = 0, both orderings
                for (a, b) in [(s1, s2), (s2, s1)] {
                    rs.add_relation(vec![
                        (vec![a as u8, a as u8, b as u8], f.one()),
                        (
                            vec![a as u8, b as u8, a as u8],
                            f.neg(&f.add(&qp(1), &qp(-1))),
                        ),
                        (vec![b as u8, a as u8, a as u8], f.one()),
                    ]);
                }
            }
        }
    }
    // defining recursions of the composite root vectors:
    // E_{i,j} = E_{i,j-1}E_{j-1,j} − q^{(ν,μ)} E_{j-1,j}E_{i,j-1}
    let pos_of = |i: usize, j: usize| -> usize {
        roots.iter().position(|r| r.i == i && r.j == j).unwrap()
    };
    let mut recursion: Vec<Option<(usize, usize, i64)>> = vec![None; ngen];
    for t in 0..ngen {
        let (i, j) = (roots[t].i, roots[t].j);
        if j > i + 1 {
            let a = pos_of(i, j - 1);
            let b = pos_of(j - 1, j);
            let coeff = rootdata::pair_roots(&cartan, &roots[a].alpha, &roots[b].alpha);
            recursion[t] = Some((a, b, coeff));
            rs.add_relation(vec![
                (vec![t as u8], f.one()),
                (vec![a as u8, b as u8], f.neg(&f.one())),
                (vec![b as u8, a as u8], qp(coeff)),
            ]);
        }
    }
    let mut rs_q = rs.clone();
    let fiber_w: u64 = weights.iter().map(|w| w * (l - 1)).sum();
    rs.complete(2 * fiber_w + 3 * l * 3 + 6, 512);
    // nilpotency of the root vectors in the small Borel
    for t in 0..ngen {
        rs.add_relation(vec![(vec![t as u8; l as usize], f.one())]);
    }
    rs.complete(2 * fiber_w + 3 * l * 3 + 6, 512);
    let fiber = PbwAlgebra::new(rs, vec![l as u16; ngen], true);
    let qcap = trunc_factor * l as u16;
    let q_w: u64 = weights.iter().map(|w| w * (qcap as u64 - 1)).sum();
    rs_q.complete(2 * q_w + 6, 512);
    let qint = PbwAlgebra::new(rs_q, vec![qcap; ngen], false);

    let gens: Vec<GenInfo> = (0..ngen)
        .map(|t| GenInfo {
            name: roots[t].name.clone(),
            weight: roots[t].height,
            char_deg: gl.root_class[t].clone(),
            root_deg: roots[t].alpha.clone(),
        })
        .collect();
    let group_names: Vec<String> = (1..=gl.group.rank()).map(|r| format!("g{r}")).collect();

    let mut h = HopfAlgebra::assemble(
        f.clone(),
        format!(
            "borel-a{n}-l{l}-{}",
            match lattice {
                Lattice::SimplyConnected => "sc",
                Lattice::Adjoint => "ad",
                Lattice::Intermediate => "int",
            }
        ),
        gens,
        fiber,
        qint,
        gl.group.clone(),
        group_names,
        vec![Vec::new(); ngen],
        vec![Vec::new(); ngen],
        None,
        None,
        config_hash,
    );

    // Δ and S: skew-primitive on simple generators, recursion for the rest.
    let mut deltas: Vec<Option<UTensorElem<F>>> = vec![None; ngen];
    let mut antipodes: Vec<Option<UElem<F>>> = vec![None; ngen];
    // K_γ elements for arbitrary positive roots: product of the simple K's.
    let k_of_root = |alpha: &[i64]| -> GrpVec {
        let mut acc = gl.group.zero();
        for (i, &c) in alpha.iter().enumerate() {
            for _ in 0..c {
                acc = gl.group.add(&acc, &gl.k_simple[i]);
            }
        }
        acc
    };
    for t in 0..ngen {
        if roots[t].height == 1 {
            let et = h.uid(h.fiber.gen_id(t), 0);
            let kt = h.uid(0, gl.group.index_of(&k_of_root(&roots[t].alpha)));
            deltas[t] = Some(vec![((et, h.unit_uid()), f.one()), ((kt, et), f.one())]);
            let kt_inv = h.uid(
                0,
                gl.group
                    .index_of(&gl.group.neg(&k_of_root(&roots[t].alpha))),
            );
            let s = h.mul_basis_u(kt_inv, et)?;
            antipodes[t] = Some(s.into_iter().map(|(id, c)| (id, f.neg(&c))).collect());
        }
    }
    // fill composites in height order
    let mut by_height: Vec<usize> = (0..ngen).collect();
    by_height.sort_by_key(|&t| roots[t].height);
    for &t in &by_height {
        let Some((a, b, coeff)) = recursion[t] else {
            continue;
        };
        let da = deltas[a].clone().unwrap();
        let db = deltas[b].clone().unwrap();
        let ab = h.mul_tensor(&da, &db)?;
        let ba = h.mul_tensor(&db, &da)?;
        let mut d = ab;
        for (k, c) in ba {
            d.push((k, f.neg(&f.mul(&c, &qp(coeff)))));
        }
        deltas[t] = Some(merge_tensor(&f, d));
        let sa = antipodes[a].clone().unwrap();
        let sb = antipodes[b].clone().unwrap();
        // S is an antihomomorphism: S(AB − cBA) = S(B)S(A) − c S(A)S(B)
        let sba = h.mul_u(&sb, &sa)?;
        let sab = h.mul_u(&sa, &sb)?;
        let mut s = sba;
        for (k, c) in sab {
            s.push((k, f.neg(&f.mul(&c, &qp(coeff)))));
        }
        antipodes[t] = Some(merge_elem(&f, s));
    }
    h.delta_gens = deltas.into_iter().map(Option::unwrap).collect();
    h.antipode_gens = antipodes.into_iter().map(Option::unwrap).collect();
    h.into_checked()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::hopf_axioms_check;

    fn fp_for_qci(l: u64) -> Fp {
        Fp::with_root(default_qci_prime(l), l)
    }

    #[test]
    fn qci_dims() {
        let h = build_qci(fp_for_qci(3), 3, vec![vec![1]], Grouplikes::Standard, 3, String::new())
            .unwrap();
        assert_eq!(h.dim(), 9);
        let a2 = vec![vec![1, 1], vec![-1, 1]];
        let h = build_qci(fp_for_qci(3), 3, a2.clone(), Grouplikes::Standard, 3, String::new())
            .unwrap();
        assert_eq!(h.dim(), 81);
        let h = build_qci(fp_for_qci(3), 3, a2, Grouplikes::Extended, 3, String::new()).unwrap();
        assert_eq!(h.dim(), 729);
    }

    #[test]
    fn qci_rejects_bad_input() {
        assert!(build_qci(fp_for_qci(3), 4, vec![vec![1]], Grouplikes::Standard, 3, String::new())
            .is_err());
        assert!(build_qci(
            fp_for_qci(3),
            3,
            vec![vec![1, 2], vec![1, 1]],
            Grouplikes::Standard,
            3,
            String::new()
        )
        .is_err());
        // prime without p ≡ 1 mod l
        let bad = Fp::plain(5);
        assert!(build_qci(bad, 3, vec![vec![1]], Grouplikes::Standard, 3, String::new()).is_err());
    }

    #[test]
    fn qci_eq_1549_identities_exhaustive() {
        // Verify the extended form satisfies the generator identities by
        // brute-force enumeration over all pairs of group characters.
        let l = 3u64;
        let a = vec![vec![1, 1], vec![-1, 1]];
        let h = build_qci(fp_for_qci(3), 3, a.clone(), Grouplikes::Extended, 3, String::new())
            .unwrap();
        let form = h.braid_form.as_ref().unwrap();
        let n = 2;
        let li = l as i64;
        let unit = |r: usize| -> Vec<u64> {
            let mut v = vec![0u64; 2 * n];
            v[r] = 1;
            v
        };
        for i in 0..n {
            for j in 0..n {
                // q^{(e_i, e_j)} = q^{a_ij}
                assert_eq!(
                    form.eval(&unit(i), &unit(j)).rem_euclid(li),
                    a[i][j].rem_euclid(li)
                );
                // q^{(e_i, χ_j)} = q^{(e_i,e_j)_alt}
                let alt = if i == j { 0 } else { a[i][j].rem_euclid(li) };
                assert_eq!(form.eval(&unit(i), &unit(n + j)).rem_euclid(li), alt);
            }
        }
        // biadditivity on all pairs of elements
        let g = AbGroup::new(vec![l; 2 * n]);
        for x in g.elements() {
            for y in g.elements() {
                for z in [unit(0), unit(2)] {
                    let lhs = form.eval(&g.add(&x, &y), &z).rem_euclid(li);
                    let rhs = (form.eval(&x, &z) + form.eval(&y, &z)).rem_euclid(li);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn group_scheme_dims_and_axioms() {
        // trivial π
        let f = Fp::with_root(3, 2);
        let h =
            build_group_scheme_functions(f.clone(), 3, 1, vec![], 3, String::new()).unwrap();
        assert_eq!(h.dim(), 3);
        let r = hopf_axioms_check(&h).unwrap();
        assert!(r.all_passed(), "{r:?}");
        // swap on two factors
        let h = build_group_scheme_functions(f, 3, 2, vec![vec![1, 0]], 3, String::new()).unwrap();
        assert_eq!(h.dim(), 18);
        let r = hopf_axioms_check(&h).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert!(!r.sampled);
    }

    #[test]
    fn group_scheme_rejects_p_dividing_pi() {
        let f = Fp::with_root(3, 3);
        let res = build_group_scheme_functions(
            f,
            3,
            3,
            vec![vec![1, 2, 0]],
            3,
            String::new(),
        );
        assert!(res.is_err());
    }

    #[test]
    fn ures_heisenberg() {
        let f = Fp::plain(5);
        let (h, seq) = build_restricted_enveloping(
            f,
            5,
            LiePresentation::heisenberg(),
            true,
            3,
            String::new(),
        )
        .unwrap();
        assert_eq!(h.dim(), 125);
        // PBW order deepest-first: gens are (z, y, x)
        assert_eq!(h.gens[0].name, "z");
        assert_eq!(h.gens[1].name, "y");
        assert_eq!(h.gens[2].name, "x");
        assert_eq!(seq, vec![2, 1, 0]);
        // z is central in the fiber
        let z = h.fiber.gen_id(0);
        for t in 1..3 {
            let g = h.fiber.gen_id(t);
            assert_eq!(
                h.fiber.mul_basis(z, g).unwrap(),
                h.fiber.mul_basis(g, z).unwrap()
            );
        }
    }

    #[test]
    fn ures_rejects_non_jacobi() {
        let mut lie = LiePresentation::heisenberg();
        // break Jacobi: [x,z] = x makes it non-nilpotent too
        lie.brackets.insert((0, 2), vec![(0, 1)]);
        let f = Fp::plain(5);
        assert!(build_restricted_enveloping(f, 5, lie, true, 3, String::new()).is_err());
    }

    #[test]
    fn borel_a1_is_taft_like() {
        let f = Fp::with_root(7, 6);
        let h = build_quantum_borel_a(f, 1, 3, Lattice::SimplyConnected, 3, String::new()).unwrap();
        assert_eq!(h.dim(), 3 * 6);
        let r = hopf_axioms_check(&h).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn borel_a2_root_vector_expansion() {
        // E_β E_α = q E_α E_β − q E_{α+β}: the normal form of the descent.
        let f = Fp::with_root(19, 9);
        let h = build_quantum_borel_a(f.clone(), 2, 3, Lattice::SimplyConnected, 3, String::new())
            .unwrap();
        assert_eq!(h.fiber.dim, 27);
        assert_eq!(h.group_order(), 27);
        // gens in lex order: E12 (α), E13 (α+β), E23 (β)
        let e_b = h.fiber.gen_id(2);
        let e_a = h.fiber.gen_id(0);
        let p = h.fiber.mul_basis(e_b, e_a).unwrap();
        let q1 = f.zeta_pow(3); // q = ζ⁹ᐟ³... root order 9, q = ζ^3
        let ab = h.fiber.id_of(&[1, 0, 1]).unwrap();
        let mid = h.fiber.id_of(&[0, 1, 0]).unwrap();
        let want = {
            let mut v = vec![(ab, q1.clone()), (mid, f.neg(&q1))];
            v.sort_by_key(|(i, _)| *i);
            v
        };
        assert_eq!(p, want);
    }

    #[test]
    fn borel_a2_l5_grouplike_order() {
        let f = Fp::with_root(31, 15);
        let h = build_quantum_borel_a(f, 2, 5, Lattice::SimplyConnected, 3, String::new()).unwrap();
        assert_eq!(h.group_order(), 75);
        assert_eq!(h.fiber.dim, 125);
        let r = hopf_axioms_check(&h).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    use crate::grading::AbGroup;
}
