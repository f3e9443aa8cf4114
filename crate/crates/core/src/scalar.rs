//! Exact coefficient fields.
//!
//! Three backends sit behind one trait: prime fields `F_p` with a chosen
//! primitive root of unity, their extensions `F_{p^d}`, and the cyclotomic
//! field `Q(ζ_e)`. Everything downstream is generic over [`Field`]; no
//! floating point exists anywhere in this crate.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field carrying a distinguished primitive `root_order()`-th root
/// of unity. Operations go through the field object so that extensions and
/// cyclotomic quotients can carry their modulus.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// None iff `a == 0`.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 in characteristic zero.
    fn characteristic(&self) -> u64;
    /// Order of the distinguished root of unity ζ.
    fn root_order(&self) -> u64;
    /// ζ^k, k taken mod `root_order()`.
    fn zeta_pow(&self, k: i64) -> Self::Elem;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
    /// a += c*b, the inner-loop workhorse.
    fn add_mul(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        *a = self.add(a, &self.mul(c, b));
    }
    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }
    /// Render an element in a stable, parseable form.
    fn elem_string(&self, a: &Self::Elem) -> String;
}

/// The prime field `F_p` with a verified primitive `e`-th root of unity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fp {
    pub p: u64,
    /// Order of the distinguished root of unity (e | p-1).
    pub e: u64,
    /// A primitive e-th root of unity in F_p.
    pub zeta: u64,
}

impl Fp {
    /// Prime field with trivial root data (ζ = 1, e = 1).
    pub fn plain(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        Fp { p, e: 1, zeta: 1 }
    }

    /// Prime field containing a primitive `e`-th root of unity; panics if
    /// p ≢ 1 (mod e). The root is chosen deterministically as the smallest
    /// generator power.
    pub fn with_root(p: u64, e: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(e >= 1 && (p - 1) % e == 0, "no primitive {e}-th root in F_{p}");
        let zeta = primitive_root_of_order(p, e);
        Fp { p, e, zeta }
    }

    /// Smallest prime p ≥ `min` with p ≡ 1 (mod e).
    pub fn smallest_prime_with_root(e: u64, min: u64) -> u64 {
        let mut p = min.max(2);
        loop {
            if is_prime(p) && (p - 1) % e == 0 {
                return p;
            }
            p += 1;
        }
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Field for Fp {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1 % self.p
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p stays well under 2^32 in every constructor, so this cannot wrap.
        (a * b) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
    #[inline]
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn root_order(&self) -> u64 {
        self.e
    }
    fn zeta_pow(&self, k: i64) -> u64 {
        let k = k.rem_euclid(self.e as i64) as u64;
        self.pow(&self.zeta, k)
    }
    #[inline]
    fn add_mul(&self, a: &mut u64, c: &u64, b: &u64) {
        *a = (*a + c * b) % self.p;
    }
    fn elem_string(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// `F_{p^d}` presented as F_p[t]/(m(t)) for the deterministically-first monic
/// irreducible m of degree d. Elements are coefficient vectors of length d.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fq {
    pub base: Fp,
    pub deg: usize,
    /// Monic modulus, coefficients of 1, t, ..., t^(d-1); leading 1 implicit.
    pub modulus: Vec<u64>,
}

impl Fq {
    pub fn new(base: Fp, deg: usize) -> Self {
        assert!(deg >= 1);
        let modulus = first_irreducible(&base, deg);
        Fq { base, deg, modulus }
    }

    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.deg];
        v[0] = a % self.base.p;
        v
    }

    /// t as a field element (a generator of the extension).
    pub fn gen(&self) -> Vec<u64> {
        if self.deg == 1 {
            vec![self.base.neg(&self.modulus[0])]
        } else {
            let mut v = vec![0; self.deg];
            v[1] = 1;
            v
        }
    }

    /// Frobenius x ↦ x^p.
    pub fn frobenius(&self, a: &Vec<u64>) -> Vec<u64> {
        self.pow(a, self.base.p)
    }

    /// Inverse Frobenius, i.e. the unique p-th root.
    pub fn pth_root(&self, a: &Vec<u64>) -> Vec<u64> {
        let mut n = 1u64;
        for _ in 0..self.deg.saturating_sub(1) {
            n *= self.base.p;
        }
        self.pow(a, n)
    }

    fn reduce(&self, mut poly: Vec<u64>) -> Vec<u64> {
        let p = &self.base;
        while poly.len() > self.deg {
            let lead = poly.pop().unwrap();
            if lead != 0 {
                let k = poly.len() - self.deg;
                for i in 0..self.deg {
                    let t = p.mul(&lead, &self.modulus[i]);
                    poly[k + i] = p.sub(&poly[k + i], &t);
                }
            }
        }
        poly.resize(self.deg, 0);
        poly
    }
}

impl Field for Fq {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.deg]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&x| x == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let mut prod = vec![0u64; 2 * self.deg - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.base.p;
            }
        }
        self.reduce(prod)
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        // Extended Euclid in F_p[t] against the modulus.
        let p = &self.base;
        let mut m: Vec<u64> = self.modulus.clone();
        m.push(1);
        let mut r0 = m;
        let mut r1 = a.clone();
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(p, &r0, &r1);
            let s = poly_sub(p, &s0, &poly_mul(p, &q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is now a nonzero constant gcd.
        let c = p.inv(&r0[0]).unwrap();
        let mut out: Vec<u64> = s0.iter().map(|x| p.mul(x, &c)).collect();
        out.resize(self.deg, 0);
        Some(out)
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn root_order(&self) -> u64 {
        self.base.e
    }
    fn zeta_pow(&self, k: i64) -> Vec<u64> {
        self.embed(self.base.zeta_pow(k))
    }
    fn elem_string(&self, a: &Vec<u64>) -> String {
        let coeffs: Vec<String> = a.iter().map(|x| x.to_string()).collect();
        format!("[{}]", coeffs.join(","))
    }
}

/// The cyclotomic field Q(ζ_e) = Q[x]/(Φ_e(x)), exact rational arithmetic.
#[derive(Clone, PartialEq, Debug)]
pub struct CycQ {
    pub e: u64,
    /// Φ_e, monic, as i64 coefficients (they are small for the orders used).
    pub phi: Vec<BigRational>,
    pub deg: usize,
}

impl CycQ {
    pub fn new(e: u64) -> Self {
        assert!(e >= 1);
        let phi_int = cyclotomic_poly(e);
        let deg = phi_int.len() - 1;
        let phi = phi_int
            .iter()
            .take(deg)
            .map(|c| BigRational::from(BigInt::from(*c)))
            .collect();
        CycQ { e, phi, deg }
    }

    fn reduce(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        while poly.len() > self.deg {
            let lead = poly.pop().unwrap();
            if !lead.is_zero() {
                let k = poly.len() - self.deg;
                for i in 0..self.deg {
                    let t = &lead * &self.phi[i];
                    poly[k + i] = &poly[k + i] - t;
                }
            }
        }
        poly.resize(self.deg, BigRational::zero());
        poly
    }
}

impl Field for CycQ {
    type Elem = CycElem;

    fn zero(&self) -> CycElem {
        CycElem(vec![BigRational::zero(); self.deg])
    }
    fn one(&self) -> CycElem {
        let mut v = vec![BigRational::zero(); self.deg];
        v[0] = BigRational::one();
        CycElem(v)
    }
    fn is_zero(&self, a: &CycElem) -> bool {
        a.0.iter().all(|x| x.is_zero())
    }
    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }
    fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }
    fn neg(&self, a: &CycElem) -> CycElem {
        CycElem(a.0.iter().map(|x| -x).collect())
    }
    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let mut prod = vec![BigRational::zero(); 2 * self.deg - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = &prod[i + j] + x * y;
                }
            }
        }
        CycElem(self.reduce(prod))
    }
    fn inv(&self, a: &CycElem) -> Option<CycElem> {
        if self.is_zero(a) {
            return None;
        }
        let mut m = self.phi.clone();
        m.push(BigRational::one());
        let mut r0 = m;
        let mut r1 = a.0.clone();
        trim_q(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod_q(&r0, &r1);
            let s = poly_sub_q(&s0, &poly_mul_q(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let c = r0[0].recip();
        let mut out: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
        out.resize(self.deg, BigRational::zero());
        Some(CycElem(out))
    }
    fn from_i64(&self, n: i64) -> CycElem {
        let mut v = vec![BigRational::zero(); self.deg];
        v[0] = BigRational::from(BigInt::from(n));
        CycElem(v)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn root_order(&self) -> u64 {
        self.e
    }
    fn zeta_pow(&self, k: i64) -> CycElem {
        let k = k.rem_euclid(self.e as i64) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        CycElem(self.reduce(poly))
    }
    fn elem_string(&self, a: &CycElem) -> String {
        let coeffs: Vec<String> = a.0.iter().map(|x| x.to_string()).collect();
        format!("[{}]", coeffs.join(","))
    }
}

/// Element of Q(ζ_e); wrapper so Eq/Hash exist (BigRational is kept reduced).
#[derive(Clone, PartialEq, Debug)]
pub struct CycElem(pub Vec<BigRational>);

impl Eq for CycElem {}

impl Hash for CycElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for c in &self.0 {
            c.numer().hash(state);
            c.denom().hash(state);
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn primitive_root_of_order(p: u64, e: u64) -> u64 {
    // Deterministic: raise candidates to the (p-1)/e power and test the order.
    let f = Fp { p, e: 1, zeta: 1 };
    let k = (p - 1) / e;
    for g in 2..p {
        let z = f.pow(&g, k);
        if order_divides_properly(&f, z, e) {
            return z;
        }
    }
    panic!("no element of order {e} in F_{p}");
}

fn order_divides_properly(f: &Fp, z: u64, e: u64) -> bool {
    if f.pow(&z, e) != 1 % f.p {
        return false;
    }
    for q in prime_factors(e) {
        if f.pow(&z, e / q) == 1 % f.p {
            return false;
        }
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficients of Φ_e as integers (index = degree), computed by dividing
/// x^e - 1 by the proper cyclotomic factors.
pub fn cyclotomic_poly(e: u64) -> Vec<i64> {
    if e == 1 {
        return vec![-1, 1];
    }
    // x^e - 1
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    num
}

fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1);
    let mut q = vec![0i64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            q[i - dd] = c;
            for j in 0..=dd {
                rem[i - dd + j] -= c * den[j];
            }
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}

// --- small dense polynomial helpers over F_p (for Fq inverses) ---

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_divmod(f: &Fp, num: &[u64], den: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut rem: Vec<u64> = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead_inv = f.inv(&den[dd]).unwrap();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut q = vec![0u64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = f.mul(&rem[i], &lead_inv);
        if c != 0 {
            q[i - dd] = c;
            for j in 0..=dd {
                let t = f.mul(&c, &den[j]);
                rem[i - dd + j] = f.sub(&rem[i - dd + j], &t);
            }
        }
    }
    trim(&mut rem);
    (q, rem)
}

fn poly_mul(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

fn poly_sub(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = f.sub(&x, &y);
    }
    trim(&mut out);
    out
}

fn first_irreducible(f: &Fp, d: usize) -> Vec<u64> {
    // Smallest monic irreducible of degree d in lexicographic coefficient order.
    let p = f.p;
    let mut coeffs = vec![0u64; d];
    loop {
        if is_irreducible(f, &coeffs) {
            return coeffs.clone();
        }
        // increment base-p counter
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
            assert!(i < d, "no irreducible of degree {d} found");
        }
    }
}

fn is_irreducible(f: &Fp, modulus: &[u64]) -> bool {
    // x^(p^d) ≡ x and gcd(x^(p^(d/q)) - x, m) trivial for prime divisors q of d.
    let d = modulus.len();
    if d == 1 {
        return true;
    }
    if modulus[0] == 0 {
        return false;
    }
    let fq = Fq {
        base: f.clone(),
        deg: d,
        modulus: modulus.to_vec(),
    };
    let x = {
        let mut v = vec![0u64; d];
        v[1] = 1;
        v
    };
    // x^(p^k) by repeated Frobenius
    let mut xp = x.clone();
    let mut powers = vec![x.clone()];
    for _ in 0..d {
        xp = fq.pow(&xp, f.p);
        powers.push(xp.clone());
    }
    if powers[d] != x {
        return false;
    }
    for q in prime_factors(d as u64) {
        let k = d / q as usize;
        let diff = fq.sub(&powers[k], &x);
        // gcd(diff, modulus) must be 1
        let mut m: Vec<u64> = modulus.to_vec();
        m.push(1);
        let mut a = m;
        let mut b = diff.clone();
        trim(&mut b);
        while !b.is_empty() {
            let (_, r) = poly_divmod(f, &a, &b);
            a = b;
            b = r;
        }
        if a.len() != 1 {
            return false;
        }
    }
    true
}

// --- rational polynomial helpers (for CycQ inverses) ---

fn trim_q(v: &mut Vec<BigRational>) {
    while v.last().map(|x| x.is_zero()) == Some(true) {
        v.pop();
    }
}

fn poly_divmod_q(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = num.to_vec();
    trim_q(&mut rem);
    let dd = den.len() - 1;
    let lead_inv = den[dd].recip();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut q = vec![BigRational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] * &lead_inv;
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &c * &den[j];
                rem[i - dd + j] = &rem[i - dd + j] - t;
            }
            q[i - dd] = c;
        }
    }
    trim_q(&mut rem);
    (q, rem)
}

fn poly_mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

fn poly_sub_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out = vec![BigRational::zero(); n];
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out[i] = x - y;
    }
    trim_q(&mut out);
    out
}

/// Is the rational c a "positive" normal form witness? Used only for display.
pub fn rational_is_negative(c: &BigRational) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_root_orders() {
        let f = Fp::with_root(7, 3);
        assert_eq!(f.pow(&f.zeta, 3), 1);
        assert_ne!(f.zeta, 1);
        let f = Fp::with_root(31, 15);
        assert_eq!(f.pow(&f.zeta, 15), 1);
        assert_ne!(f.pow(&f.zeta, 5), 1);
        assert_ne!(f.pow(&f.zeta, 3), 1);
    }

    #[test]
    fn smallest_primes() {
        assert_eq!(Fp::smallest_prime_with_root(3, 7), 7);
        assert_eq!(Fp::smallest_prime_with_root(9, 2), 19);
        assert_eq!(Fp::smallest_prime_with_root(10, 2), 11);
        assert_eq!(Fp::smallest_prime_with_root(15, 2), 31);
    }

    #[test]
    fn fq_field_axioms() {
        let f = Fq::new(Fp::with_root(3, 1), 2);
        let t = f.gen();
        // Frobenius fixes exactly F_3.
        assert_ne!(f.frobenius(&t), t);
        assert_eq!(f.frobenius(&f.embed(2)), f.embed(2));
        for a in 0..3u64 {
            for b in 0..3u64 {
                let x = vec![a, b];
                if f.is_zero(&x) {
                    continue;
                }
                let xi = f.inv(&x).unwrap();
                assert_eq!(f.mul(&x, &xi), f.one());
                // p-th root inverts Frobenius
                assert_eq!(f.frobenius(&f.pth_root(&x)), x);
            }
        }
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        let f = CycQ::new(3);
        let z = f.zeta_pow(1);
        let z3 = f.pow(&z, 3);
        assert_eq!(z3, f.one());
        assert_ne!(z, f.one());
        let zi = f.inv(&z).unwrap();
        assert_eq!(f.mul(&z, &zi), f.one());
        assert_eq!(zi, f.zeta_pow(-1));
    }
}
