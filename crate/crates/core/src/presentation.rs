//! Presented algebras with PBW monomial bases.
//!
//! A presentation is a list of rewrite rules over a free algebra, ordered by
//! a weighted degree-then-length-then-lex term order. Completion resolves
//! overlap ambiguities up to a declared weight bound and stores that bound as
//! a confluence certificate; normal forms of anything under the bound are
//! then canonical. The algebra classes built here (skew polynomial rings,
//! enveloping algebras of nilpotent Lie algebras, De Concini–Kac type
//! nilpotent algebras) all straighten onto ordered-monomial bases, which the
//! constructor asserts.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::EngineError;
use crate::scalar::Field;

pub type Gen = u8;
pub type Word = Vec<Gen>;

/// Term-order key: (total weight, length, word); BTreeMap max = leading term.
pub type TermKey = (u64, usize, Word);

/// A free-algebra polynomial keyed by the term order.
pub type FreePoly<F> = BTreeMap<TermKey, <F as Field>::Elem>;

pub fn word_weight(weights: &[u64], w: &[Gen]) -> u64 {
    w.iter().map(|&g| weights[g as usize]).sum()
}

pub fn term_key(weights: &[u64], w: Word) -> TermKey {
    (word_weight(weights, &w), w.len(), w)
}

#[derive(Clone, Debug)]
pub struct Rule<F: Field> {
    pub lhs: Word,
    /// Strictly smaller terms; the rule reads lhs → rhs.
    pub rhs: Vec<(Word, F::Elem)>,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem<F: Field> {
    pub field: F,
    pub ngens: usize,
    pub weights: Vec<u64>,
    pub rules: Vec<Rule<F>>,
    /// Ambiguities with overlap weight ≤ this bound are certified resolved.
    pub confluence_bound: u64,
}

impl<F: Field> RewriteSystem<F> {
    pub fn new(field: F, weights: Vec<u64>) -> Self {
        let ngens = weights.len();
        RewriteSystem {
            field,
            ngens,
            weights,
            rules: Vec::new(),
            confluence_bound: 0,
        }
    }

    pub fn key(&self, w: Word) -> TermKey {
        term_key(&self.weights, w)
    }

    /// Add a relation given as a polynomial Σ c_w · w = 0. The leading term
    /// becomes the rule head. Returns false if the relation reduces to zero.
    pub fn add_relation(&mut self, poly: Vec<(Word, F::Elem)>) -> bool {
        let f = self.field.clone();
        let mut p: FreePoly<F> = BTreeMap::new();
        for (w, c) in poly {
            add_term::<F>(&f, &mut p, self.key(w), c);
        }
        let p = self.reduce_poly(p);
        let Some((lead_key, lead_c)) = p.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))
        else {
            return false;
        };
        let inv = f.inv(&lead_c).expect("nonzero leading coefficient");
        let mut rhs = Vec::new();
        for (k, c) in p.iter() {
            if *k == lead_key {
                continue;
            }
            rhs.push((k.2.clone(), f.neg(&f.mul(c, &inv))));
        }
        self.rules.push(Rule {
            lhs: lead_key.2,
            rhs,
        });
        true
    }

    /// First (position, rule) at which some rule head occurs in `w`.
    fn find_redex(&self, w: &[Gen]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.len();
                if pos + l <= w.len() && w[pos..pos + l] == rule.lhs[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    /// Full normal form of a polynomial.
    pub fn reduce_poly(&self, mut input: FreePoly<F>) -> FreePoly<F> {
        let f = self.field.clone();
        let mut normal: FreePoly<F> = BTreeMap::new();
        while let Some((key, coeff)) = pop_max::<F>(&mut input) {
            if f.is_zero(&coeff) {
                continue;
            }
            match self.find_redex(&key.2) {
                None => {
                    add_term::<F>(&f, &mut normal, key, coeff);
                }
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    let l = rule.lhs.len();
                    let prefix = &key.2[..pos];
                    let suffix = &key.2[pos + l..];
                    for (rw, rc) in &rule.rhs {
                        let mut nw = Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
                        nw.extend_from_slice(prefix);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(suffix);
                        let nk = self.key(nw);
                        debug_assert!(nk < key, "rewriting must decrease the term order");
                        add_term::<F>(&f, &mut input, nk, f.mul(&coeff, rc));
                    }
                }
            }
        }
        normal
    }

    pub fn reduce_word(&self, w: Word) -> FreePoly<F> {
        let mut p = BTreeMap::new();
        p.insert(self.key(w), self.field.one());
        self.reduce_poly(p)
    }

    /// Knuth–Bendix style completion: resolve all overlap and inclusion
    /// ambiguities whose overlap word has weight ≤ `bound`. Panics if more
    /// than `max_rules` rules appear (runaway presentations).
    pub fn complete(&mut self, bound: u64, max_rules: usize) {
        loop {
            let mut new_relations: Vec<FreePoly<F>> = Vec::new();
            let n = self.rules.len();
            for i in 0..n {
                for j in 0..n {
                    for w in ambiguities(&self.rules[i].lhs, &self.rules[j].lhs) {
                        if word_weight(&self.weights, &w.word) > bound {
                            continue;
                        }
                        let p1 = self.expand_via(&w, i, true);
                        let p2 = self.expand_via(&w, j, false);
                        let mut diff = p1;
                        let f = self.field.clone();
                        for (k, c) in p2 {
                            add_term::<F>(&f, &mut diff, k, f.neg(&c));
                        }
                        let diff = self.reduce_poly(diff);
                        if !diff.is_empty() {
                            new_relations.push(diff);
                        }
                    }
                }
            }
            if new_relations.is_empty() {
                break;
            }
            for rel in new_relations {
                let poly: Vec<(Word, F::Elem)> =
                    rel.into_iter().map(|(k, c)| (k.2, c)).collect();
                self.add_relation(poly);
                assert!(
                    self.rules.len() <= max_rules,
                    "completion exceeded {max_rules} rules"
                );
            }
        }
        self.confluence_bound = bound;
    }

    fn expand_via(&self, amb: &Ambiguity, rule_idx: usize, left: bool) -> FreePoly<F> {
        let f = self.field.clone();
        let rule = &self.rules[rule_idx];
        let (pos, _) = if left {
            (amb.left_pos, ())
        } else {
            (amb.right_pos, ())
        };
        let l = rule.lhs.len();
        let prefix = &amb.word[..pos];
        let suffix = &amb.word[pos + l..];
        let mut out: FreePoly<F> = BTreeMap::new();
        for (rw, rc) in &rule.rhs {
            let mut nw = Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
            nw.extend_from_slice(prefix);
            nw.extend_from_slice(rw);
            nw.extend_from_slice(suffix);
            add_term::<F>(&f, &mut out, self.key(nw), rc.clone());
        }
        self.reduce_poly(out)
    }
}

struct Ambiguity {
    word: Word,
    left_pos: usize,
    right_pos: usize,
}

/// Overlap and inclusion ambiguities of two rule heads u (applied at
/// left_pos) and v (applied at right_pos).
fn ambiguities(u: &[Gen], v: &[Gen]) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    // overlap: a proper suffix of u equals a proper prefix of v
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            let mut w = u.to_vec();
            w.extend_from_slice(&v[k..]);
            out.push(Ambiguity {
                word: w,
                left_pos: 0,
                right_pos: u.len() - k,
            });
        }
    }
    // inclusion: v occurs strictly inside u
    if v.len() < u.len() {
        for pos in 0..=u.len() - v.len() {
            if &u[pos..pos + v.len()] == v {
                out.push(Ambiguity {
                    word: u.to_vec(),
                    left_pos: 0,
                    right_pos: pos,
                });
            }
        }
    }
    out
}

pub fn add_term<F: Field>(
    f: &F,
    p: &mut FreePoly<F>,
    k: TermKey,
    c: <F as Field>::Elem,
) {
    if f.is_zero(&c) {
        return;
    }
    match p.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = f.add(e.get(), &c);
            if f.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn pop_max<F: Field>(p: &mut FreePoly<F>) -> Option<(TermKey, <F as Field>::Elem)> {
    let k = p.keys().next_back()?.clone();
    let c = p.remove(&k).unwrap();
    Some((k, c))
}

/// Sparse element over a monomial basis, sorted by basis index.
pub type SparseElem<F> = Vec<(u32, <F as Field>::Elem)>;

/// A presented algebra whose normal words are the ordered monomials
/// `z_0^{a_0} … z_{m-1}^{a_{m-1}}` with `a_i < caps[i]`.
///
/// With `nilpotent = true` the caps are algebra relations (`z_i^{caps_i} = 0`
/// rules are present); otherwise the caps are a truncation window and any
/// product escaping it is a degree-overflow error, never a silent cut.
pub struct PbwAlgebra<F: Field> {
    pub rs: RewriteSystem<F>,
    pub caps: Vec<u16>,
    pub nilpotent: bool,
    pub dim: usize,
    strides: Vec<usize>,
    /// Purely skew straightening data: z_j z_i = ζ^{skew[j][i]} z_i z_j with
    /// no correction terms, for all j > i. Enables the closed-form product.
    pub pure_skew: Option<Vec<Vec<i64>>>,
    product_cache: Arc<Mutex<HashMap<(u32, u32), SparseElem<F>>>>,
}

impl<F: Field> Clone for PbwAlgebra<F> {
    fn clone(&self) -> Self {
        PbwAlgebra {
            rs: self.rs.clone(),
            caps: self.caps.clone(),
            nilpotent: self.nilpotent,
            dim: self.dim,
            strides: self.strides.clone(),
            pure_skew: self.pure_skew.clone(),
            product_cache: Arc::clone(&self.product_cache),
        }
    }
}

impl<F: Field> std::fmt::Debug for PbwAlgebra<F> {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.debug_struct("PbwAlgebra")
            .field("caps", &self.caps)
            .field("nilpotent", &self.nilpotent)
            .field("dim", &self.dim)
            .finish()
    }
}

impl<F: Field> PbwAlgebra<F> {
    /// Build from a completed rewrite system. Asserts that normal words are
    /// exactly the ordered monomials under the caps.
    pub fn new(rs: RewriteSystem<F>, caps: Vec<u16>, nilpotent: bool) -> Self {
        assert_eq!(rs.ngens, caps.len());
        // Every descent z_j z_i (j > i) must be reducible, so normal words
        // are weakly increasing letter sequences.
        for j in 0..rs.ngens {
            for i in 0..j {
                let w = vec![j as Gen, i as Gen];
                assert!(
                    rs.find_redex(&w).is_some(),
                    "pair ({j},{i}) has no straightening rule; not a PBW presentation"
                );
            }
        }
        if nilpotent {
            for (i, &c) in caps.iter().enumerate() {
                let w = vec![i as Gen; c as usize];
                assert!(
                    rs.find_redex(&w).is_some(),
                    "generator {i} lacks its nilpotency rule"
                );
            }
        }
        let mut strides = vec![0usize; caps.len()];
        let mut acc = 1usize;
        for (i, &c) in caps.iter().enumerate() {
            strides[i] = acc;
            acc *= c as usize;
        }
        let pure_skew = detect_pure_skew(&rs);
        PbwAlgebra {
            rs,
            caps,
            nilpotent,
            dim: acc,
            strides,
            pure_skew,
            product_cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn ngens(&self) -> usize {
        self.rs.ngens
    }

    pub fn field(&self) -> &F {
        &self.rs.field
    }

    pub fn exps_of(&self, mut id: u32) -> Vec<u16> {
        let mut out = vec![0u16; self.caps.len()];
        for i in 0..self.caps.len() {
            let c = self.caps[i] as u32;
            out[i] = (id % c) as u16;
            id /= c;
        }
        out
    }

    pub fn id_of(&self, exps: &[u16]) -> Option<u32> {
        let mut id = 0usize;
        for (i, &a) in exps.iter().enumerate() {
            if a >= self.caps[i] {
                return None;
            }
            id += a as usize * self.strides[i];
        }
        Some(id as u32)
    }

    pub fn unit_id(&self) -> u32 {
        0
    }

    pub fn gen_id(&self, g: usize) -> u32 {
        self.strides[g] as u32
    }

    pub fn word_of_exps(&self, exps: &[u16]) -> Word {
        let mut w = Vec::new();
        for (i, &a) in exps.iter().enumerate() {
            for _ in 0..a {
                w.push(i as Gen);
            }
        }
        w
    }

    pub fn monomial_weight(&self, id: u32) -> u64 {
        let exps = self.exps_of(id);
        exps.iter()
            .enumerate()
            .map(|(i, &a)| a as u64 * self.rs.weights[i])
            .sum()
    }

    /// Convert a reduced free polynomial to a sparse basis element.
    fn poly_to_sparse(&self, p: FreePoly<F>) -> Result<SparseElem<F>, EngineError> {
        let mut out: Vec<(u32, F::Elem)> = Vec::with_capacity(p.len());
        for (k, c) in p {
            let exps = sorted_word_exps(self.ngens(), &k.2).ok_or_else(|| {
                EngineError::Internal("normal word is not an ordered monomial".into())
            })?;
            match self.id_of(&exps) {
                Some(id) => out.push((id, c)),
                None => {
                    return Err(EngineError::DegreeOverflow {
                        what: format!(
                            "monomial with exponents {exps:?} exceeds truncation {:?}",
                            self.caps
                        ),
                    })
                }
            }
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    /// Product of basis monomials, memoized.
    pub fn mul_basis(&self, a: u32, b: u32) -> Result<SparseElem<F>, EngineError> {
        if a == 0 {
            return Ok(vec![(b, self.field().one())]);
        }
        if b == 0 {
            return Ok(vec![(a, self.field().one())]);
        }
        if let Some(hit) = self.product_cache.lock().unwrap().get(&(a, b)) {
            return Ok(hit.clone());
        }
        let res = self.mul_basis_uncached(a, b)?;
        self.product_cache
            .lock()
            .unwrap()
            .insert((a, b), res.clone());
        Ok(res)
    }

    fn mul_basis_uncached(&self, a: u32, b: u32) -> Result<SparseElem<F>, EngineError> {
        let ea = self.exps_of(a);
        let eb = self.exps_of(b);
        if let Some(skew) = &self.pure_skew {
            // ζ-exponent from moving every letter of b left past the larger
            // letters of a.
            let f = self.field();
            let mut exp_sum: i64 = 0;
            let mut out = vec![0u16; self.ngens()];
            for i in 0..self.ngens() {
                let s = ea[i] as u32 + eb[i] as u32;
                if self.nilpotent && s >= self.caps[i] as u32 {
                    return Ok(vec![]);
                }
                if s >= self.caps[i] as u32 {
                    return Err(EngineError::DegreeOverflow {
                        what: format!("exponent {s} of generator {i} exceeds truncation"),
                    });
                }
                out[i] = s as u16;
                for j in 0..i {
                    // z_i-letters of a move past z_j-letters of b (i > j)
                    exp_sum += skew[i][j] * (ea[i] as i64) * (eb[j] as i64);
                }
            }
            let c = f.zeta_pow(exp_sum);
            let id = self.id_of(&out).unwrap();
            return Ok(vec![(id, c)]);
        }
        let mut w = self.word_of_exps(&ea);
        w.extend(self.word_of_exps(&eb));
        let wt = word_weight(&self.rs.weights, &w);
        if wt > self.rs.confluence_bound {
            return Err(EngineError::DegreeOverflow {
                what: format!(
                    "product weight {wt} beyond certified confluence bound {}",
                    self.rs.confluence_bound
                ),
            });
        }
        let p = self.rs.reduce_word(w);
        self.poly_to_sparse(p)
    }

    pub fn mul_elems(
        &self,
        a: &SparseElem<F>,
        b: &SparseElem<F>,
    ) -> Result<SparseElem<F>, EngineError> {
        let f = self.field().clone();
        let mut acc: HashMap<u32, F::Elem> = HashMap::new();
        for (ia, ca) in a {
            for (ib, cb) in b {
                let c = f.mul(ca, cb);
                if f.is_zero(&c) {
                    continue;
                }
                for (id, cc) in self.mul_basis(*ia, *ib)? {
                    let entry = acc.entry(id).or_insert_with(|| f.zero());
                    *entry = f.add(entry, &f.mul(&c, &cc));
                }
            }
        }
        let mut out: Vec<(u32, F::Elem)> = acc
            .into_iter()
            .filter(|(_, c)| !f.is_zero(c))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    /// Normal form of an arbitrary word in the generators.
    pub fn normal_form_word(&self, w: &[Gen]) -> Result<SparseElem<F>, EngineError> {
        let wt = word_weight(&self.rs.weights, w);
        if wt > self.rs.confluence_bound {
            return Err(EngineError::DegreeOverflow {
                what: format!(
                    "word weight {wt} beyond certified confluence bound {}",
                    self.rs.confluence_bound
                ),
            });
        }
        let p = self.rs.reduce_word(w.to_vec());
        self.poly_to_sparse(p)
    }

    /// Confluence spot check: reduce `samples` random words two ways (by the
    /// deterministic strategy and by a right-to-left strategy) and compare.
    /// Returns the first mismatch.
    pub fn confluence_check(&self, max_len: usize, samples: usize, seed: u64) -> Option<Word> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let len = rng.gen_range(0..=max_len);
            let w: Word = (0..len)
                .map(|_| rng.gen_range(0..self.ngens()) as Gen)
                .collect();
            if word_weight(&self.rs.weights, &w) > self.rs.confluence_bound {
                continue;
            }
            let p1 = self.rs.reduce_word(w.clone());
            let p2 = self.reduce_rightmost(w.clone());
            if p1 != p2 {
                return Some(w);
            }
        }
        None
    }

    /// Alternative reduction strategy (rightmost redex first).
    fn reduce_rightmost(&self, w: Word) -> FreePoly<F> {
        let f = self.field().clone();
        let mut input: FreePoly<F> = BTreeMap::new();
        input.insert(self.rs.key(w), f.one());
        let mut normal: FreePoly<F> = BTreeMap::new();
        while let Some((key, coeff)) = pop_max::<F>(&mut input) {
            let mut redex = None;
            for pos in (0..key.2.len()).rev() {
                for (ri, rule) in self.rs.rules.iter().enumerate().rev() {
                    let l = rule.lhs.len();
                    if pos + l <= key.2.len() && key.2[pos..pos + l] == rule.lhs[..] {
                        redex = Some((pos, ri));
                        break;
                    }
                }
                if redex.is_some() {
                    break;
                }
            }
            match redex {
                None => add_term::<F>(&f, &mut normal, key, coeff),
                Some((pos, ri)) => {
                    let rule = &self.rs.rules[ri];
                    let l = rule.lhs.len();
                    for (rw, rc) in &rule.rhs {
                        let mut nw = Vec::new();
                        nw.extend_from_slice(&key.2[..pos]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&key.2[pos + l..]);
                        add_term::<F>(&f, &mut input, self.rs.key(nw), f.mul(&coeff, rc));
                    }
                }
            }
        }
        normal
    }
}

fn sorted_word_exps(ngens: usize, w: &[Gen]) -> Option<Vec<u16>> {
    let mut exps = vec![0u16; ngens];
    let mut last: i32 = -1;
    for &g in w {
        if (g as i32) < last {
            return None;
        }
        last = g as i32;
        exps[g as usize] += 1;
    }
    Some(exps)
}

fn detect_pure_skew<F: Field>(rs: &RewriteSystem<F>) -> Option<Vec<Vec<i64>>> {
    let f = &rs.field;
    let n = rs.ngens;
    let mut skew = vec![vec![0i64; n]; n];
    for rule in &rs.rules {
        if rule.lhs.len() == 2 && rule.lhs[0] > rule.lhs[1] {
            let (j, i) = (rule.lhs[0] as usize, rule.lhs[1] as usize);
            if rule.rhs.len() != 1 {
                return None;
            }
            let (w, c) = &rule.rhs[0];
            if w.len() != 2 || w[0] != rule.lhs[1] || w[1] != rule.lhs[0] {
                return None;
            }
            // c must be a power of ζ
            let e = f.root_order();
            let mut found = None;
            for k in 0..e {
                if f.zeta_pow(k as i64) == *c {
                    found = Some(k as i64);
                    break;
                }
            }
            skew[j][i] = found?;
        } else if rule.lhs.iter().all(|&g| g == rule.lhs[0]) {
            // power rule: rhs must be 0 (nilpotency)
            if !rule.rhs.is_empty() {
                return None;
            }
        } else {
            return None;
        }
    }
    Some(skew)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    fn qci_system(l: u64, a12: i64, p: u64) -> RewriteSystem<Fp> {
        // x1 x2 with x2 x1 = q^{a21} x1 x2, a21 = -a12
        let f = Fp::with_root(p, l);
        let mut rs = RewriteSystem::new(f.clone(), vec![1, 1]);
        rs.add_relation(vec![
            (vec![1, 0], f.one()),
            (vec![0, 1], f.neg(&f.zeta_pow(-a12))),
        ]);
        rs.add_relation(vec![(vec![0; l as usize], f.one())]);
        rs.add_relation(vec![(vec![1; l as usize], f.one())]);
        rs.complete(6 * l, 64);
        rs
    }

    #[test]
    fn qci_fiber_basis_and_relations() {
        let rs = qci_system(3, 1, 7);
        let alg = PbwAlgebra::new(rs, vec![3, 3], true);
        assert_eq!(alg.dim, 9);
        assert!(alg.pure_skew.is_some());
        // x2 x1 = q^{-1} x1 x2  (q = ζ with a12 = 1 ⇒ a21 = -1)
        let f = alg.field().clone();
        let x1 = alg.gen_id(0);
        let x2 = alg.gen_id(1);
        let prod = alg.mul_basis(x2, x1).unwrap();
        assert_eq!(prod.len(), 1);
        let expect = alg.id_of(&[1, 1]).unwrap();
        assert_eq!(prod[0].0, expect);
        assert_eq!(prod[0].1, f.zeta_pow(-1));
        // x1^3 = 0
        let sq = alg.mul_basis(alg.id_of(&[2, 0]).unwrap(), x1).unwrap();
        assert!(sq.is_empty());
        assert!(alg.confluence_check(7, 500, 1).is_none());
    }

    #[test]
    fn heisenberg_enveloping_straightening() {
        // generators z < y < x (z central, [x, y] = z i.e. xy - yx = z)
        let f = Fp::plain(3);
        let mut rs = RewriteSystem::new(f.clone(), vec![2, 1, 1]);
        // x y = y x + z  →  rule for descent (2,1): [2,1] → [1,2] + [0]
        rs.add_relation(vec![
            (vec![2, 1], f.one()),
            (vec![1, 2], f.neg(&f.one())),
            (vec![0], f.neg(&f.one())),
        ]);
        // z central
        rs.add_relation(vec![(vec![1, 0], f.one()), (vec![0, 1], f.neg(&f.one()))]);
        rs.add_relation(vec![(vec![2, 0], f.one()), (vec![0, 2], f.neg(&f.one()))]);
        rs.complete(40, 64);
        let alg = PbwAlgebra::new(rs, vec![9, 9, 9], false);
        assert!(alg.pure_skew.is_none());
        // x·y = yx + z
        let x = alg.gen_id(2);
        let y = alg.gen_id(1);
        let p = alg.mul_basis(x, y).unwrap();
        let yx = alg.id_of(&[0, 1, 1]).unwrap();
        let z = alg.id_of(&[1, 0, 0]).unwrap();
        let mut ids: Vec<u32> = p.iter().map(|(i, _)| *i).collect();
        ids.sort();
        let mut want = vec![yx, z];
        want.sort();
        assert_eq!(ids, want);
        assert!(alg.confluence_check(6, 400, 7).is_none());
        // x^3 is central in U(h_3) over F_3: x^3·y = y·x^3
        let x3 = alg.id_of(&[0, 0, 3]).unwrap();
        let lhs = alg.mul_basis(x3, y).unwrap();
        let rhs = alg.mul_basis(y, x3).unwrap();
        assert_eq!(lhs, rhs);
    }
}
