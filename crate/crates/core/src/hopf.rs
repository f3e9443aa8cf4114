//! Finite-dimensional Hopf algebras of smash-product shape, together with
//! their truncated integrations and deformation data.
//!
//! The fiber is a PBW algebra u⁺ on nilpotent generators z_i (caps N_i), the
//! grouplike part is a finite abelian group G acting by characters, and the
//! basis of u = u⁺⋊kG is (monomial, group element). The integration Q⁺ is
//! the same presentation without nilpotency, truncated per variable, and the
//! deformation generators are f_i = z_i^{N_i}, central in Q⁺ (verified).
//! Comultiplication, counit and antipode are data on generators and are
//! extended (anti)multiplicatively; `hopf_axioms_check` certifies the axioms
//! as exact identities on the basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{EngineError, Result};
use crate::grading::{AbGroup, BilinearForm, Grade, GrpVec};
use crate::presentation::{PbwAlgebra, SparseElem, Word};
use crate::scalar::Field;

/// One positive generator with its degrees.
#[derive(Clone, Debug)]
pub struct GenInfo {
    pub name: String,
    /// Integer weight (the N-grading used for slicing).
    pub weight: u64,
    /// Conjugation character in dual coordinates of the group part.
    pub char_deg: GrpVec,
    /// Optional lattice degree (root coordinates), used by q-regularity.
    pub root_deg: Vec<i64>,
}

/// Sparse element of u; index = fiber_id · |G| + group_index.
pub type UElem<F> = Vec<(u32, <F as Field>::Elem)>;

/// Sparse element of u ⊗ u.
pub type UTensorElem<F> = Vec<((u32, u32), <F as Field>::Elem)>;

pub struct HopfAlgebra<F: Field> {
    pub field: F,
    pub name: String,
    pub gens: Vec<GenInfo>,
    pub fiber: PbwAlgebra<F>,
    pub qint: PbwAlgebra<F>,
    pub group: AbGroup,
    pub group_names: Vec<String>,
    /// Δ(z_i) ∈ u⊗u.
    pub delta_gens: Vec<UTensorElem<F>>,
    /// S(z_i) ∈ u.
    pub antipode_gens: Vec<UElem<F>>,
    /// ε(z_i); zero for every constructor in this crate.
    pub counit_gens: Vec<F::Elem>,
    /// Skew exponents a_ij (ζ-exponents, a_ji = -a_ij) when the fiber is a
    /// pure skew polynomial quotient; drives the q-Koszul machinery.
    pub skew: Option<Vec<Vec<i64>>>,
    /// Bilinear form on Ĝ giving the canonical half-braiding, when one exists.
    pub braid_form: Option<BilinearForm>,
    /// Content hash of the originating config.
    pub config_hash: String,
    /// field.root_order() / group.exponent: converts group-pairing exponents
    /// (powers of ζ_{exp G}) to exponents of the field's distinguished root.
    pub group_zeta_factor: i64,
    delta_cache: Mutex<HashMap<u32, Arc<UTensorElem<F>>>>,
}

impl<F: Field> HopfAlgebra<F> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: F,
        name: String,
        gens: Vec<GenInfo>,
        fiber: PbwAlgebra<F>,
        qint: PbwAlgebra<F>,
        group: AbGroup,
        group_names: Vec<String>,
        delta_gens: Vec<UTensorElem<F>>,
        antipode_gens: Vec<UElem<F>>,
        skew: Option<Vec<Vec<i64>>>,
        braid_form: Option<BilinearForm>,
        config_hash: String,
    ) -> Result<Arc<Self>> {
        Self::assemble(
            field,
            name,
            gens,
            fiber,
            qint,
            group,
            group_names,
            delta_gens,
            antipode_gens,
            skew,
            braid_form,
            config_hash,
        )
        .into_checked()
    }

    /// Build the structure without running the deformation checks; used by
    /// constructors that still need to compute derived coproduct/antipode
    /// tables with the algebra's own multiplication.
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        field: F,
        name: String,
        gens: Vec<GenInfo>,
        fiber: PbwAlgebra<F>,
        qint: PbwAlgebra<F>,
        group: AbGroup,
        group_names: Vec<String>,
        delta_gens: Vec<UTensorElem<F>>,
        antipode_gens: Vec<UElem<F>>,
        skew: Option<Vec<Vec<i64>>>,
        braid_form: Option<BilinearForm>,
        config_hash: String,
    ) -> Self {
        let counit_gens = vec![field.zero(); gens.len()];
        assert_eq!(
            field.root_order() % group.exponent,
            0,
            "field root order must be divisible by the group exponent"
        );
        let group_zeta_factor = (field.root_order() / group.exponent) as i64;
        HopfAlgebra {
            field,
            name,
            gens,
            fiber,
            qint,
            group,
            group_names,
            delta_gens,
            antipode_gens,
            counit_gens,
            skew,
            braid_form,
            config_hash,
            group_zeta_factor,
            delta_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn into_checked(self) -> Result<Arc<Self>> {
        self.verify_deformation()?;
        // derived tables may have been computed with a stale cache
        self.delta_cache.lock().unwrap().clear();
        Ok(Arc::new(self))
    }

    pub fn dim(&self) -> usize {
        self.fiber.dim * self.group.order() as usize
    }

    pub fn n_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn n_group_gens(&self) -> usize {
        self.group.orders.len()
    }

    pub fn group_order(&self) -> usize {
        self.group.order() as usize
    }

    #[inline]
    pub fn uid(&self, fid: u32, gidx: usize) -> u32 {
        fid * self.group.order() as u32 + gidx as u32
    }

    #[inline]
    pub fn split_uid(&self, id: u32) -> (u32, usize) {
        let go = self.group.order() as u32;
        (id / go, (id % go) as usize)
    }

    pub fn unit_uid(&self) -> u32 {
        0
    }

    /// Character (in dual coordinates) of the fiber monomial with given id.
    pub fn fiber_char(&self, fid: u32) -> GrpVec {
        let exps = self.fiber.exps_of(fid);
        let mut ch = self.group.zero();
        for (i, &a) in exps.iter().enumerate() {
            let s = self.group.scale(a as u64, &self.gens[i].char_deg);
            ch = self.group.add(&ch, &s);
        }
        ch
    }

    pub fn fiber_weight(&self, fid: u32) -> i64 {
        self.fiber.monomial_weight(fid) as i64
    }

    pub fn fiber_grade(&self, fid: u32) -> Grade {
        Grade {
            ch: self.fiber_char(fid),
            n: self.fiber_weight(fid),
        }
    }

    /// ζ-exponent for conjugating the fiber monomial `fid` by group element g:
    /// g · z^a = ζ^exp · z^a · g.
    fn conj_exp(&self, g: &GrpVec, fid: u32) -> i64 {
        let ch = self.fiber_char(fid);
        self.group.pairing_exp(&ch, g)
    }

    /// Product of basis elements of u.
    pub fn mul_basis_u(&self, a: u32, b: u32) -> Result<UElem<F>> {
        let f = &self.field;
        let (fa, ga) = self.split_uid(a);
        let (fb, gb) = self.split_uid(b);
        let ga_vec = self.group.element_at(ga);
        let gb_vec = self.group.element_at(gb);
        let tw = f.zeta_pow(self.conj_exp(&ga_vec, fb) * self.group_zeta_factor);
        let prod = self.fiber.mul_basis(fa, fb)?;
        let gsum = self.group.index_of(&self.group.add(&ga_vec, &gb_vec));
        Ok(prod
            .into_iter()
            .map(|(fid, c)| (self.uid(fid, gsum), f.mul(&c, &tw)))
            .collect())
    }

    pub fn mul_u(&self, a: &UElem<F>, b: &UElem<F>) -> Result<UElem<F>> {
        let f = &self.field;
        let mut acc: HashMap<u32, F::Elem> = HashMap::new();
        for (ia, ca) in a {
            for (ib, cb) in b {
                let c = f.mul(ca, cb);
                if f.is_zero(&c) {
                    continue;
                }
                for (id, cc) in self.mul_basis_u(*ia, *ib)? {
                    let e = acc.entry(id).or_insert_with(|| f.zero());
                    *e = f.add(e, &f.mul(&c, &cc));
                }
            }
        }
        let mut out: UElem<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    pub fn mul_tensor(&self, a: &UTensorElem<F>, b: &UTensorElem<F>) -> Result<UTensorElem<F>> {
        let f = &self.field;
        let mut acc: HashMap<(u32, u32), F::Elem> = HashMap::new();
        for ((a1, a2), ca) in a {
            for ((b1, b2), cb) in b {
                let c = f.mul(ca, cb);
                if f.is_zero(&c) {
                    continue;
                }
                let left = self.mul_basis_u(*a1, *b1)?;
                let right = self.mul_basis_u(*a2, *b2)?;
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        let cc = f.mul(&f.mul(&c, cl), cr);
                        if f.is_zero(&cc) {
                            continue;
                        }
                        let e = acc.entry((*l, *r)).or_insert_with(|| f.zero());
                        *e = f.add(e, &cc);
                    }
                }
            }
        }
        let mut out: UTensorElem<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    /// Word of generator letters for the fiber part of a basis element.
    fn fiber_word(&self, fid: u32) -> Word {
        self.fiber.word_of_exps(&self.fiber.exps_of(fid))
    }

    /// Δ on a basis element, memoized.
    pub fn delta_basis(&self, id: u32) -> Result<Arc<UTensorElem<F>>> {
        if let Some(hit) = self.delta_cache.lock().unwrap().get(&id) {
            return Ok(Arc::clone(hit));
        }
        let f = &self.field;
        let (fid, gidx) = self.split_uid(id);
        let g_uid = self.uid(0, gidx);
        let mut acc: UTensorElem<F> = vec![((g_uid, g_uid), f.one())];
        for letter in self.fiber_word(fid).iter().rev() {
            // Δ is an algebra map; basis monomial = product of letters then g.
            // We multiply from the left: Δ(z_{w1}) ··· Δ(z_{wk}) · (g⊗g).
            let dg = &self.delta_gens[*letter as usize];
            acc = self.mul_tensor(dg, &acc)?;
        }
        let arc = Arc::new(acc);
        self.delta_cache
            .lock()
            .unwrap()
            .insert(id, Arc::clone(&arc));
        Ok(arc)
    }

    pub fn delta_elem(&self, a: &UElem<F>) -> Result<UTensorElem<F>> {
        let f = &self.field;
        let mut acc: HashMap<(u32, u32), F::Elem> = HashMap::new();
        for (id, c) in a {
            for ((l, r), d) in self.delta_basis(*id)?.iter() {
                let e = acc.entry((*l, *r)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(c, d));
            }
        }
        let mut out: UTensorElem<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    pub fn counit_basis(&self, id: u32) -> F::Elem {
        let f = &self.field;
        let (fid, _) = self.split_uid(id);
        if fid == 0 {
            return f.one();
        }
        // ε is an algebra map with ε(z_i) stored (zero in practice).
        let exps = self.fiber.exps_of(fid);
        let mut acc = f.one();
        for (i, &a) in exps.iter().enumerate() {
            for _ in 0..a {
                acc = f.mul(&acc, &self.counit_gens[i]);
            }
        }
        acc
    }

    pub fn antipode_basis(&self, id: u32) -> Result<UElem<F>> {
        let f = &self.field;
        let (fid, gidx) = self.split_uid(id);
        let ginv = self.group.neg(&self.group.element_at(gidx));
        let mut acc: UElem<F> = vec![(self.uid(0, self.group.index_of(&ginv)), f.one())];
        // antihomomorphism: S(z_{w1}…z_{wk} g) = S(g)·S(z_{wk})…S(z_{w1})
        for letter in self.fiber_word(fid).iter().rev() {
            acc = self.mul_u(&acc, &self.antipode_gens[*letter as usize])?;
        }
        Ok(acc)
    }

    pub fn antipode_elem(&self, a: &UElem<F>) -> Result<UElem<F>> {
        let f = &self.field;
        let mut acc: HashMap<u32, F::Elem> = HashMap::new();
        for (id, c) in a {
            for (j, d) in self.antipode_basis(*id)? {
                let e = acc.entry(j).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(c, &d));
            }
        }
        let mut out: UElem<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    // ----- deformation data -----

    /// Number of deformation generators f_i = z_i^{N_i}.
    pub fn n_def(&self) -> usize {
        self.gens.len()
    }

    /// f_i as an element of the integration.
    pub fn def_gen(&self, i: usize) -> SparseElem<F> {
        let mut exps = vec![0u16; self.n_gens()];
        exps[i] = self.fiber.caps[i];
        vec![(self.qint.id_of(&exps).expect("truncation too small"), self.field.one())]
    }

    /// Normal-form lift of a fiber basis monomial into the integration.
    pub fn lift_fiber_id(&self, fid: u32) -> u32 {
        let exps = self.fiber.exps_of(fid);
        self.qint.id_of(&exps).expect("truncation too small for lift")
    }

    pub fn lift_elem(&self, a: &SparseElem<F>) -> SparseElem<F> {
        let mut out: SparseElem<F> = a
            .iter()
            .map(|(id, c)| (self.lift_fiber_id(*id), c.clone()))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// Split an integration monomial as (f-exponent vector, fiber id).
    pub fn split_qid(&self, qid: u32) -> (Vec<u16>, u32) {
        let exps = self.qint.exps_of(qid);
        let mut fvec = vec![0u16; exps.len()];
        let mut rvec = vec![0u16; exps.len()];
        for i in 0..exps.len() {
            let n = self.fiber.caps[i];
            fvec[i] = exps[i] / n;
            rvec[i] = exps[i] % n;
        }
        (fvec, self.fiber.id_of(&rvec).unwrap())
    }

    /// Reduce an integration element to the fiber (set every f_i to zero).
    pub fn project_to_fiber(&self, a: &SparseElem<F>) -> SparseElem<F> {
        let mut out: SparseElem<F> = Vec::new();
        for (qid, c) in a {
            let (fvec, fid) = self.split_qid(*qid);
            if fvec.iter().all(|&b| b == 0) {
                out.push((fid, c.clone()));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// Decompose a ∈ (f_1..f_n)·Q as Σ_i f_i·θ_i with the canonical choice
    /// (each monomial assigned to its smallest f-divisor). Errors if a has a
    /// nonzero fiber component.
    pub fn central_decompose(&self, a: &SparseElem<F>) -> Result<Vec<SparseElem<F>>> {
        let n = self.n_gens();
        let mut out: Vec<SparseElem<F>> = vec![Vec::new(); n];
        for (qid, c) in a {
            let exps = self.qint.exps_of(*qid);
            let mut assigned = false;
            for i in 0..n {
                if exps[i] >= self.fiber.caps[i] {
                    let mut rest = exps.clone();
                    rest[i] -= self.fiber.caps[i];
                    let rid = self.qint.id_of(&rest).unwrap();
                    out[i].push((rid, c.clone()));
                    assigned = true;
                    break;
                }
            }
            if !assigned {
                return Err(EngineError::Internal(
                    "central decomposition of an element with nonzero fiber part".into(),
                ));
            }
        }
        for v in &mut out {
            v.sort_by_key(|(i, _)| *i);
        }
        Ok(out)
    }

    /// Verify that every f_i is central in Q⁺ (against all generators, which
    /// generate), reduces to zero in the fiber, and that lift∘project is the
    /// identity on the fiber basis.
    fn verify_deformation(&self) -> Result<()> {
        let f = &self.field;
        for i in 0..self.n_gens() {
            let fi = self.def_gen(i);
            for j in 0..self.n_gens() {
                let zj = vec![(self.qint.gen_id(j), f.one())];
                let lhs = self.qint.mul_elems(&fi, &zj)?;
                let rhs = self.qint.mul_elems(&zj, &fi)?;
                if lhs != rhs {
                    return Err(EngineError::Invalid(format!(
                        "deformation generator {} is not central (fails against {})",
                        i, self.gens[j].name
                    )));
                }
            }
            // group conjugation must fix f_i: pairing of N_i·char_i vanishes
            let ch = self
                .group
                .scale(self.fiber.caps[i] as u64, &self.gens[i].char_deg);
            for r in 0..self.group.rank() {
                let mut g = self.group.zero();
                g[r] = 1;
                if self.group.pairing_exp(&ch, &g) != 0 {
                    return Err(EngineError::Invalid(format!(
                        "deformation generator {i} is not group-invariant"
                    )));
                }
            }
            if !self.project_to_fiber(&fi).is_empty() {
                return Err(EngineError::Invalid(format!(
                    "deformation generator {i} does not vanish in the fiber"
                )));
            }
        }
        for fid in 0..self.fiber.dim as u32 {
            let lifted = self.lift_fiber_id(fid);
            let (fvec, back) = self.split_qid(lifted);
            if back != fid || fvec.iter().any(|&b| b != 0) {
                return Err(EngineError::Internal("lift/project mismatch".into()));
            }
        }
        Ok(())
    }

    /// Simple modules are the characters of the group part (the fiber is
    /// local); returned as dual coordinate vectors in a fixed order.
    pub fn simple_characters(&self) -> Vec<GrpVec> {
        AbGroup::new(self.group.orders.clone()).elements()
    }

    /// Character value χ(g) for χ in dual coordinates and g a group element.
    pub fn char_value(&self, chi: &GrpVec, g: &GrpVec) -> F::Elem {
        self.field
            .zeta_pow(self.group.pairing_exp(chi, g) * self.group_zeta_factor)
    }
}

impl<F: Field> std::fmt::Debug for HopfAlgebra<F> {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.debug_struct("HopfAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("gens", &self.gens.len())
            .field("group", &self.group.orders)
            .finish()
    }
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail { witness: String },
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub associativity: CheckOutcome,
    pub coassociativity: CheckOutcome,
    pub counit: CheckOutcome,
    pub antipode: CheckOutcome,
    pub bialgebra: CheckOutcome,
    /// True when associativity/bialgebra ran on a deterministic sample
    /// rather than every basis triple/pair.
    pub sampled: bool,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.associativity.passed()
            && self.coassociativity.passed()
            && self.counit.passed()
            && self.antipode.passed()
            && self.bialgebra.passed()
    }
}

/// Check the Hopf axioms as exact identities on basis elements.
pub fn hopf_axioms_check<F: Field>(h: &HopfAlgebra<F>) -> Result<AxiomReport> {
    let f = h.field.clone();
    let dim = h.dim() as u32;
    let exhaustive_triples = (dim as u64).pow(3) <= 2_000_000;
    let exhaustive_pairs = (dim as u64).pow(2) <= 250_000;
    let mut sampled = false;

    let gen_ids: Vec<u32> = {
        let mut v = Vec::new();
        for i in 0..h.n_gens() {
            v.push(h.uid(h.fiber.gen_id(i), 0));
        }
        for r in 0..h.group.rank() {
            let mut g = h.group.zero();
            g[r] = 1;
            v.push(h.uid(0, h.group.index_of(&g)));
        }
        v
    };

    // --- associativity ---
    let mut associativity = CheckOutcome::Pass;
    let triples: Vec<(u32, u32, u32)> = if exhaustive_triples {
        let mut v = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    v.push((a, b, c));
                }
            }
        }
        v
    } else {
        sampled = true;
        let mut v = Vec::new();
        for &a in &gen_ids {
            for b in 0..dim {
                for &c in &gen_ids {
                    v.push((a, b, c));
                    v.push((b, a, c));
                    v.push((a, c, b));
                }
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..20_000 {
            v.push((
                rng.gen_range(0..dim),
                rng.gen_range(0..dim),
                rng.gen_range(0..dim),
            ));
        }
        v
    };
    'assoc: for (a, b, c) in triples {
        let ab = h.mul_basis_u(a, b)?;
        let bc = h.mul_basis_u(b, c)?;
        let lhs = h.mul_u(&ab, &vec![(c, f.one())])?;
        let rhs = h.mul_u(&vec![(a, f.one())], &bc)?;
        if lhs != rhs {
            associativity = CheckOutcome::Fail {
                witness: format!("basis triple ({a},{b},{c})"),
            };
            break 'assoc;
        }
    }

    // --- coassociativity, counit, antipode: exhaustive over the basis, or
    // a deterministic sample on very large algebras ---
    let mut coassociativity = CheckOutcome::Pass;
    let mut counit = CheckOutcome::Pass;
    let mut antipode = CheckOutcome::Pass;
    let basis_elems: Vec<u32> = if dim <= 4000 {
        (0..dim).collect()
    } else {
        sampled = true;
        let mut v: Vec<u32> = gen_ids.clone();
        for &a in &gen_ids {
            for &b in &gen_ids {
                for (id, _) in h.mul_basis_u(a, b)? {
                    v.push(id);
                }
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xc0a);
        for _ in 0..1500 {
            v.push(rng.gen_range(0..dim));
        }
        v.sort_unstable();
        v.dedup();
        v
    };
    for &id in &basis_elems {
        let d = h.delta_basis(id)?;
        // (Δ⊗1)Δ vs (1⊗Δ)Δ
        let mut lhs: HashMap<(u32, u32, u32), F::Elem> = HashMap::new();
        for ((x, y), c) in d.iter() {
            for ((x1, x2), e) in h.delta_basis(*x)?.iter() {
                let t = f.mul(c, e);
                let en = lhs.entry((*x1, *x2, *y)).or_insert_with(|| f.zero());
                *en = f.add(en, &t);
            }
        }
        let mut rhs: HashMap<(u32, u32, u32), F::Elem> = HashMap::new();
        for ((x, y), c) in d.iter() {
            for ((y1, y2), e) in h.delta_basis(*y)?.iter() {
                let t = f.mul(c, e);
                let en = rhs.entry((*x, *y1, *y2)).or_insert_with(|| f.zero());
                *en = f.add(en, &t);
            }
        }
        let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
        for k in keys {
            let a = lhs.get(&k).cloned().unwrap_or_else(|| f.zero());
            let b = rhs.get(&k).cloned().unwrap_or_else(|| f.zero());
            if a != b {
                coassociativity = CheckOutcome::Fail {
                    witness: format!("basis element {id}"),
                };
                break;
            }
        }
        // counit: (ε⊗1)Δ(b) = b = (1⊗ε)Δ(b)
        let mut left = vec![f.zero(); dim as usize];
        let mut right = vec![f.zero(); dim as usize];
        for ((x, y), c) in d.iter() {
            let ex = h.counit_basis(*x);
            let ey = h.counit_basis(*y);
            left[*y as usize] = f.add(&left[*y as usize], &f.mul(c, &ex));
            right[*x as usize] = f.add(&right[*x as usize], &f.mul(c, &ey));
        }
        for j in 0..dim as usize {
            let want = if j == id as usize { f.one() } else { f.zero() };
            if left[j] != want || right[j] != want {
                counit = CheckOutcome::Fail {
                    witness: format!("basis element {id}"),
                };
                break;
            }
        }
        // antipode: Σ S(b₁)b₂ = ε(b)·1 = Σ b₁S(b₂), and ε∘S = ε
        let mut conv_l = vec![f.zero(); dim as usize];
        let mut conv_r = vec![f.zero(); dim as usize];
        for ((x, y), c) in d.iter() {
            let sx = h.antipode_basis(*x)?;
            let prod = h.mul_u(&sx, &vec![(*y, f.one())])?;
            for (j, cc) in prod {
                conv_l[j as usize] = f.add(&conv_l[j as usize], &f.mul(c, &cc));
            }
            let sy = h.antipode_basis(*y)?;
            let prod = h.mul_u(&vec![(*x, f.one())], &sy)?;
            for (j, cc) in prod {
                conv_r[j as usize] = f.add(&conv_r[j as usize], &f.mul(c, &cc));
            }
        }
        let eps = h.counit_basis(id);
        for j in 0..dim as usize {
            let want = if j == h.unit_uid() as usize {
                eps.clone()
            } else {
                f.zero()
            };
            if conv_l[j] != want || conv_r[j] != want {
                antipode = CheckOutcome::Fail {
                    witness: format!("basis element {id}"),
                };
                break;
            }
        }
        // ε∘S = ε
        let s = h.antipode_basis(id)?;
        let mut eps_s = f.zero();
        for (j, c) in &s {
            eps_s = f.add(&eps_s, &f.mul(c, &h.counit_basis(*j)));
        }
        if eps_s != eps {
            antipode = CheckOutcome::Fail {
                witness: format!("ε∘S ≠ ε at basis element {id}"),
            };
        }
        if !(coassociativity.passed() && counit.passed() && antipode.passed()) {
            break;
        }
    }

    // --- bialgebra compatibility: Δ(ab) = Δ(a)Δ(b), ε(ab) = ε(a)ε(b) ---
    let mut bialgebra = CheckOutcome::Pass;
    let pairs: Vec<(u32, u32)> = if exhaustive_pairs {
        (0..dim).flat_map(|a| (0..dim).map(move |b| (a, b))).collect()
    } else {
        sampled = true;
        let mut v = Vec::new();
        for &a in &gen_ids {
            for b in 0..dim {
                v.push((a, b));
                v.push((b, a));
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xb1a);
        for _ in 0..20_000 {
            v.push((rng.gen_range(0..dim), rng.gen_range(0..dim)));
        }
        v
    };
    'bi: for (a, b) in pairs {
        let ab = h.mul_basis_u(a, b)?;
        let lhs = h.delta_elem(&ab)?;
        let rhs = h.mul_tensor(&h.delta_basis(a)?, &h.delta_basis(b)?)?;
        if lhs != rhs {
            bialgebra = CheckOutcome::Fail {
                witness: format!("basis pair ({a},{b})"),
            };
            break 'bi;
        }
        let eps_ab: F::Elem = {
            let mut acc = f.zero();
            for (j, c) in &ab {
                acc = f.add(&acc, &f.mul(c, &h.counit_basis(*j)));
            }
            acc
        };
        let eps_a = h.counit_basis(a);
        let eps_b = h.counit_basis(b);
        if eps_ab != f.mul(&eps_a, &eps_b) {
            bialgebra = CheckOutcome::Fail {
                witness: format!("counit multiplicativity at ({a},{b})"),
            };
            break 'bi;
        }
    }

    Ok(AxiomReport {
        associativity,
        coassociativity,
        counit,
        antipode,
        bialgebra,
        sampled,
    })
}
