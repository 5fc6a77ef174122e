//! Exact arithmetic in the field tower F_q ⊂ F_{q²} ⊂ F_{q⁴} for odd prime
//! powers q = p^e.
//!
//! The tower is built as successive quadratic extensions: F_q = F_p\[x\]/(f),
//! F_{q²} = F_q\[y\]/(g), F_{q⁴} = F_{q²}\[z\]/(h), with g and h monic quadratics.
//! Elements are dense coordinate vectors over F_p (length e, 2e or 4e), so
//! splitting a quartic element over the quadratic subfield in the polynomial
//! basis {1, ω} is a coordinate projection.
//!
//! Defining polynomials are chosen as the smallest monic irreducible of the
//! required degree in packed-coefficient order (constant term least
//! significant), which makes towers, roots of unity and everything derived
//! from them reproducible across runs and platforms.

mod packed;

pub use packed::{Fq2Table, ONE as FQ2_ONE, ZERO as FQ2_ZERO};

use crate::error::{Error, Result};
use rand::Rng;

/// Position of an element inside the tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Base,
    Quadratic,
    Quartic,
}

impl Level {
    /// Number of F_p coordinates for this level, given the base degree e.
    pub fn coord_len(self, e: u32) -> usize {
        match self {
            Level::Base => e as usize,
            Level::Quadratic => 2 * e as usize,
            Level::Quartic => 4 * e as usize,
        }
    }

    fn index(self) -> u32 {
        match self {
            Level::Base => 0,
            Level::Quadratic => 1,
            Level::Quartic => 2,
        }
    }
}

/// A tower element: its level plus coordinates over F_p, reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    level: Level,
    coords: Vec<u64>,
}

impl FieldElement {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// The tower F_q ⊂ F_{q²} ⊂ F_{q⁴} with verified defining polynomials.
///
/// Immutable after construction; all operations are pure functions, so a
/// tower can be shared freely across threads.
#[derive(Debug)]
pub struct FieldTower {
    p: u64,
    e: u32,
    q: u64,
    q2: u64,
    q4: u64,
    /// Monic degree-e defining polynomial of F_q over F_p, lowest degree first.
    base_poly: Vec<u64>,
    /// y² + c₁y + c₀ over F_q: stored as [c₀, c₁], each a base coordinate vector.
    quad_poly: [Vec<u64>; 2],
    /// z² + d₁z + d₀ over F_{q²}: stored as [d₀, d₁], each a quadratic coordinate vector.
    quartic_poly: [Vec<u64>; 2],
    /// Smallest generator of F_{q⁴}* in packed coordinate order.
    generator4: FieldElement,
    fq2: Fq2Table,
}

/// Builds the tower for q = p^e.
///
/// Deterministic for fixed (p, e): defining polynomials are searched in a
/// fixed packed-coefficient order and irreducibility is verified outright.
pub fn make_tower(p: u64, e: u32) -> Result<FieldTower> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(e >= 1, "extension degree must be positive");
    // 48-bit cap keeps all exponent and order arithmetic comfortably in u64.
    let q4 = checked_pow(p, 4 * e).ok_or(Error::FieldTooLarge)?;
    if q4 > 1 << 48 {
        return Err(Error::FieldTooLarge);
    }
    let q = pow_u64(p, e);
    let q2 = q * q;

    let base_poly = if e == 1 {
        vec![0, 1]
    } else {
        smallest_irreducible_base(p, e)
    };

    let mut tower = FieldTower {
        p,
        e,
        q,
        q2,
        q4,
        base_poly,
        quad_poly: [vec![], vec![]],
        quartic_poly: [vec![], vec![]],
        generator4: FieldElement { level: Level::Quartic, coords: vec![] },
        fq2: Fq2Table::empty(),
    };

    tower.quad_poly = tower.smallest_irreducible_quadratic(Level::Base);
    tower.quartic_poly = tower.smallest_irreducible_quadratic(Level::Quadratic);
    tower.generator4 = tower.find_generator4();
    tower.fq2 = Fq2Table::build(&tower);
    Ok(tower)
}

impl FieldTower {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q2(&self) -> u64 {
        self.q2
    }

    pub fn q4(&self) -> u64 {
        self.q4
    }

    /// Cardinality of the field at `level`.
    pub fn level_size(&self, level: Level) -> u64 {
        match level {
            Level::Base => self.q,
            Level::Quadratic => self.q2,
            Level::Quartic => self.q4,
        }
    }

    /// Defining polynomials (base, quadratic step, quartic step), each as a
    /// list of coefficients lowest degree first, coefficients as coordinate
    /// vectors over F_p. The leading 1 is included.
    pub fn defining_polynomials(&self) -> [Vec<Vec<u64>>; 3] {
        let base: Vec<Vec<u64>> = self.base_poly.iter().map(|&c| vec![c]).collect();
        let quad = vec![
            self.quad_poly[0].clone(),
            self.quad_poly[1].clone(),
            self.one_coords(Level::Base),
        ];
        let quartic = vec![
            self.quartic_poly[0].clone(),
            self.quartic_poly[1].clone(),
            self.one_coords(Level::Quadratic),
        ];
        [base, quad, quartic]
    }

    /// Packed-index tables for F_{q²}; used by the matrix and polynomial layers.
    pub fn fq2(&self) -> &Fq2Table {
        &self.fq2
    }

    // ---- element construction ----

    pub fn zero(&self, level: Level) -> FieldElement {
        FieldElement { level, coords: vec![0; level.coord_len(self.e)] }
    }

    pub fn one(&self, level: Level) -> FieldElement {
        FieldElement { level, coords: self.one_coords(level) }
    }

    fn one_coords(&self, level: Level) -> Vec<u64> {
        let mut c = vec![0; level.coord_len(self.e)];
        c[0] = 1;
        c
    }

    /// Element from explicit coordinates (reduced mod p).
    pub fn element(&self, level: Level, coords: &[u64]) -> FieldElement {
        assert_eq!(coords.len(), level.coord_len(self.e), "coordinate length mismatch");
        FieldElement { level, coords: coords.iter().map(|&c| c % self.p).collect() }
    }

    /// Element from an integer in 0..p (embedded constant).
    pub fn constant(&self, level: Level, value: u64) -> FieldElement {
        let mut coords = vec![0; level.coord_len(self.e)];
        coords[0] = value % self.p;
        FieldElement { level, coords }
    }

    /// The packed index of an element: Σ coordᵢ·pⁱ.
    pub fn packed_index(&self, x: &FieldElement) -> u64 {
        let mut idx = 0u64;
        for &c in x.coords.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// Inverse of `packed_index`.
    pub fn element_from_index(&self, level: Level, mut idx: u64) -> FieldElement {
        let len = level.coord_len(self.e);
        let mut coords = vec![0; len];
        for c in coords.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        assert_eq!(idx, 0, "index out of range for level");
        FieldElement { level, coords }
    }

    /// The adjoined root ω of the quartic step, i.e. the element with
    /// quadratic part (0, 1). {1, ω} is the expansion basis fixed by this
    /// artifact.
    pub fn quartic_omega(&self) -> FieldElement {
        let half = Level::Quadratic.coord_len(self.e);
        let mut coords = vec![0; 2 * half];
        coords[half] = 1;
        FieldElement { level: Level::Quartic, coords }
    }

    /// Uniform random element at `level`.
    pub fn random_element<R: Rng>(&self, level: Level, rng: &mut R) -> FieldElement {
        let coords = (0..level.coord_len(self.e)).map(|_| rng.gen_range(0..self.p)).collect();
        FieldElement { level, coords }
    }

    /// Raise an element to a higher (or equal) level.
    pub fn embed(&self, x: &FieldElement, level: Level) -> FieldElement {
        assert!(
            level.index() >= x.level.index(),
            "cannot embed downward from {:?} to {:?}",
            x.level,
            level
        );
        let mut coords = vec![0; level.coord_len(self.e)];
        coords[..x.coords.len()].copy_from_slice(&x.coords);
        FieldElement { level, coords }
    }

    /// Project a quartic element to the quadratic level when its ω part is
    /// zero; `None` otherwise.
    pub fn project_to_quadratic(&self, x: &FieldElement) -> Option<FieldElement> {
        assert_eq!(x.level, Level::Quartic);
        let half = Level::Quadratic.coord_len(self.e);
        if x.coords[half..].iter().any(|&c| c != 0) {
            return None;
        }
        Some(FieldElement { level: Level::Quadratic, coords: x.coords[..half].to_vec() })
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        assert_eq!(a.level, b.level, "level mismatch in add");
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            })
            .collect();
        FieldElement { level: a.level, coords }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coords = a.coords.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect();
        FieldElement { level: a.level, coords }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        assert_eq!(a.level, b.level, "level mismatch in mul");
        FieldElement { level: a.level, coords: self.mul_coords(a.level, &a.coords, &b.coords) }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut result = self.one(a.level);
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        result
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero");
        self.pow(a, self.level_size(a.level) - 2)
    }

    /// x ↦ x^q, the Hermitian conjugation map. Applying it twice to an
    /// element of F_{q²} is the identity.
    pub fn frobenius_q(&self, x: &FieldElement) -> FieldElement {
        self.pow(x, self.q)
    }

    fn mul_coords(&self, level: Level, a: &[u64], b: &[u64]) -> Vec<u64> {
        match level {
            Level::Base => poly_mul_mod(a, b, &self.base_poly, self.p),
            Level::Quadratic => self.quad_step_mul(Level::Base, &self.quad_poly, a, b),
            Level::Quartic => self.quad_step_mul(Level::Quadratic, &self.quartic_poly, a, b),
        }
    }

    /// Multiplication one quadratic step above `sub`: elements are pairs
    /// (a₀, a₁) over the sub-level with x² = −(m₁x + m₀).
    fn quad_step_mul(&self, sub: Level, modulus: &[Vec<u64>; 2], a: &[u64], b: &[u64]) -> Vec<u64> {
        let h = sub.coord_len(self.e);
        let (a0, a1) = a.split_at(h);
        let (b0, b1) = b.split_at(h);
        let t00 = self.mul_coords(sub, a0, b0);
        let t11 = self.mul_coords(sub, a1, b1);
        let t01 = self.mul_coords(sub, a0, b1);
        let t10 = self.mul_coords(sub, a1, b0);
        let r0 = sub_mod(&t00, &self.mul_coords(sub, &t11, &modulus[0]), self.p);
        let mut r1 = add_mod(&t01, &t10, self.p);
        r1 = sub_mod(&r1, &self.mul_coords(sub, &t11, &modulus[1]), self.p);
        let mut out = r0;
        out.extend_from_slice(&r1);
        out
    }

    // ---- orders and roots of unity ----

    /// Multiplicative order of a nonzero element; always divides
    /// (level size − 1).
    pub fn element_order(&self, x: &FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::OrderOfZero);
        }
        let group = self.level_size(x.level) - 1;
        let mut order = group;
        for (prime, _) in factorize(group) {
            while order.is_multiple_of(prime) && self.pow(x, order / prime) == self.one(x.level) {
                order /= prime;
            }
        }
        Ok(order)
    }

    /// The fixed primitive N-th root of unity in F_{q⁴}: the smallest
    /// generator of F_{q⁴}* in packed coordinate order, raised to (q⁴−1)/N.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let group = self.q4 - 1;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::NotADivisor { n, order: group });
        }
        Ok(self.pow(&self.generator4, group / n))
    }

    fn find_generator4(&self) -> FieldElement {
        let group = self.q4 - 1;
        let factors = factorize(group);
        for idx in 1..self.q4 {
            let candidate = self.element_from_index(Level::Quartic, idx);
            let generates = factors
                .iter()
                .all(|&(prime, _)| self.pow(&candidate, group / prime) != self.one(Level::Quartic));
            if generates {
                return candidate;
            }
        }
        unreachable!("F_{{q^4}}* is cyclic, a generator exists");
    }

    // ---- subfield expansion ----

    /// Writes quartic `x` as a·basis₀ + b·basis₁ with a, b ∈ F_{q²}.
    ///
    /// The basis must be F_{q²}-linearly independent; recomposition is exact.
    pub fn expand_over_subfield(
        &self,
        x: &FieldElement,
        basis: (&FieldElement, &FieldElement),
    ) -> Result<(FieldElement, FieldElement)> {
        assert_eq!(x.level, Level::Quartic, "expansion input must be quartic");
        assert_eq!(basis.0.level, Level::Quartic);
        assert_eq!(basis.1.level, Level::Quartic);
        let h = Level::Quadratic.coord_len(self.e);
        let part = |v: &FieldElement, hi: bool| FieldElement {
            level: Level::Quadratic,
            coords: if hi { v.coords[h..].to_vec() } else { v.coords[..h].to_vec() },
        };
        let (b0l, b0h) = (part(basis.0, false), part(basis.0, true));
        let (b1l, b1h) = (part(basis.1, false), part(basis.1, true));
        let (xl, xh) = (part(x, false), part(x, true));
        let det = self.sub(&self.mul(&b0l, &b1h), &self.mul(&b1l, &b0h));
        if det.is_zero() {
            return Err(Error::DependentBasis);
        }
        let det_inv = self.inv(&det);
        let a = self.mul(&self.sub(&self.mul(&xl, &b1h), &self.mul(&xh, &b1l)), &det_inv);
        let b = self.mul(&self.sub(&self.mul(&b0l, &xh), &self.mul(&b0h, &xl)), &det_inv);
        Ok((a, b))
    }

    // ---- defining polynomial search ----

    /// Smallest monic irreducible quadratic x² + c₁x + c₀ over the field at
    /// `sub`, in packed order of (c₁, c₀). Degree-2 irreducibility is exactly
    /// "no roots", checked by scanning the whole sub-level field.
    fn smallest_irreducible_quadratic(&self, sub: Level) -> [Vec<u64>; 2] {
        let size = self.level_size(sub);
        for k in 0..size * size {
            let c0 = self.element_from_index(sub, k % size);
            let c1 = self.element_from_index(sub, k / size);
            let mut has_root = false;
            for idx in 0..size {
                let x = self.element_from_index(sub, idx);
                let val = self.add(&self.add(&self.mul(&x, &x), &self.mul(&c1, &x)), &c0);
                if val.is_zero() {
                    has_root = true;
                    break;
                }
            }
            if !has_root {
                return [c0.coords, c1.coords];
            }
        }
        unreachable!("irreducible quadratics exist over every finite field");
    }
}

// ---- F_p polynomial helpers (used for the base extension only) ----

fn add_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let s = x + y;
            if s >= p {
                s - p
            } else {
                s
            }
        })
        .collect()
}

fn sub_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect()
}

/// Product of two coordinate vectors of length d, reduced modulo the monic
/// polynomial `modulus` (length d+1), over F_p.
#[allow(clippy::needless_range_loop)]
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let d = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * d.max(1)];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce: x^d ≡ −(modulus minus leading term)
    for i in (d..2 * d).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..d {
            let m = modulus[j];
            if m != 0 {
                let idx = i - d + j;
                prod[idx] = (prod[idx] + (p - m) * c) % p;
            }
        }
    }
    prod.truncate(d);
    prod
}

/// Rabin irreducibility test for a monic degree-d polynomial over F_p.
fn is_irreducible_base(poly: &[u64], p: u64) -> bool {
    let d = (poly.len() - 1) as u32;
    if d == 1 {
        return true;
    }
    let x = {
        let mut v = vec![0u64; d as usize];
        v[1] = 1;
        v
    };
    // x^(p^d) ≡ x (mod poly)
    let xq = poly_pow_mod(&x, pow_u64(p, d), poly, p);
    if xq != x {
        return false;
    }
    // gcd(x^(p^(d/r)) − x, poly) = 1 for every prime r | d
    for (r, _) in factorize(d as u64) {
        let e = d / r as u32;
        let xe = poly_pow_mod(&x, pow_u64(p, e), poly, p);
        let diff = sub_mod(&xe, &x, p);
        if !poly_coprime(&diff, poly, p) {
            return false;
        }
    }
    true
}

fn poly_pow_mod(a: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let d = modulus.len() - 1;
    let mut result = vec![0u64; d];
    result[0] = 1;
    let mut base = a.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            result = poly_mul_mod(&result, &base, modulus, p);
        }
        base = poly_mul_mod(&base, &base, modulus, p);
        exp >>= 1;
    }
    result
}

/// True when gcd(a, monic modulus m) is a nonzero constant. `a` is a
/// coordinate vector (degree < deg m).
fn poly_coprime(a: &[u64], m: &[u64], p: u64) -> bool {
    let trim = |v: &[u64]| {
        let mut v = v.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let mut r0 = trim(m);
    let mut r1 = trim(a);
    while !r1.is_empty() {
        // r0 mod r1
        let lead_inv = mod_inverse(*r1.last().unwrap(), p);
        while r0.len() >= r1.len() {
            let shift = r0.len() - r1.len();
            let c = (*r0.last().unwrap() * lead_inv) % p;
            for (i, &ri) in r1.iter().enumerate() {
                r0[shift + i] = (r0[shift + i] + (p - (c * ri) % p)) % p;
            }
            r0 = trim(&r0);
            if r0.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    r0.len() == 1
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime; Fermat.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn smallest_irreducible_base(p: u64, e: u32) -> Vec<u64> {
    let total = pow_u64(p, e);
    for k in 0..total {
        let mut poly = vec![0u64; e as usize + 1];
        let mut idx = k;
        for c in poly.iter_mut().take(e as usize) {
            *c = idx % p;
            idx /= p;
        }
        poly[e as usize] = 1;
        if is_irreducible_base(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p");
}

// ---- integer helpers ----

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut m = 0;
            while n.is_multiple_of(d) {
                n /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decomposes q as p^e with p prime, or `None` when q is not a prime power.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = factorize(q);
    if factors.len() == 1 {
        Some(factors[0])
    } else {
        None
    }
}

pub(crate) fn pow_u64(base: u64, exp: u32) -> u64 {
    base.pow(exp)
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tower_sizes() {
        let t = make_tower(5, 1).unwrap();
        assert_eq!((t.q(), t.q2(), t.q4()), (5, 25, 625));
        let t = make_tower(3, 3).unwrap();
        assert_eq!((t.q(), t.q2(), t.q4()), (27, 729, 531441));
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(matches!(make_tower(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(make_tower(2, 3), Err(Error::EvenCharacteristic)));
        assert!(matches!(make_tower(9, 1), Err(Error::NotPrime(9))));
    }

    #[test]
    fn element_orders() {
        let t = make_tower(5, 1).unwrap();
        assert_eq!(t.element_order(&t.one(Level::Quadratic)).unwrap(), 1);
        let minus_one = t.neg(&t.one(Level::Quadratic));
        assert_eq!(t.element_order(&minus_one).unwrap(), 2);
        assert!(matches!(t.element_order(&t.zero(Level::Base)), Err(Error::OrderOfZero)));
    }

    #[test]
    fn generator_order_is_group_order() {
        // Brute-force oracle: repeated multiplication until reaching one.
        let t = make_tower(5, 1).unwrap();
        let g = t.generator4.clone();
        let mut acc = g.clone();
        let mut steps = 1u64;
        while acc != t.one(Level::Quartic) {
            acc = t.mul(&acc, &g);
            steps += 1;
            assert!(steps <= 624, "order exceeded the group order");
        }
        assert_eq!(steps, 624);
        assert_eq!(t.element_order(&g).unwrap(), 624);
        // 624 = 2^4·3·13
        for prime in [2, 3, 13] {
            assert_ne!(t.pow(&g, 624 / prime), t.one(Level::Quartic));
        }
    }

    #[test]
    fn primitive_roots() {
        let t = make_tower(5, 1).unwrap();
        let beta = t.primitive_root_of_unity(156).unwrap();
        assert_eq!(t.pow(&beta, 156), t.one(Level::Quartic));
        assert_ne!(t.pow(&beta, 78), t.one(Level::Quartic));
        assert_ne!(t.pow(&beta, 52), t.one(Level::Quartic));
        assert_eq!(t.element_order(&beta).unwrap(), 156);
        assert_eq!(t.primitive_root_of_unity(1).unwrap(), t.one(Level::Quartic));
        assert!(matches!(t.primitive_root_of_unity(7), Err(Error::NotADivisor { n: 7, order: 624 })));
    }

    #[test]
    fn frobenius_fixes_subfield_and_squares_to_identity() {
        let t = make_tower(5, 1).unwrap();
        assert_eq!(t.frobenius_q(&t.zero(Level::Quadratic)), t.zero(Level::Quadratic));
        assert_eq!(t.frobenius_q(&t.one(Level::Quadratic)), t.one(Level::Quadratic));
        for v in 0..5 {
            let x = t.constant(Level::Quadratic, v);
            assert_eq!(t.frobenius_q(&x), x);
        }
        // An element of F_25 outside F_5: y itself.
        let y = t.element(Level::Quadratic, &[0, 1]);
        let fy = t.frobenius_q(&y);
        assert_ne!(fy, y);
        assert_eq!(t.frobenius_q(&fy), y);
    }

    #[test]
    fn expansion_round_trips() {
        let t = make_tower(5, 1).unwrap();
        let basis = (t.one(Level::Quartic), t.quartic_omega());
        let zero = t.zero(Level::Quartic);
        assert_eq!(
            t.expand_over_subfield(&zero, (&basis.0, &basis.1)).unwrap(),
            (t.zero(Level::Quadratic), t.zero(Level::Quadratic))
        );
        assert_eq!(
            t.expand_over_subfield(&basis.0, (&basis.0, &basis.1)).unwrap(),
            (t.one(Level::Quadratic), t.zero(Level::Quadratic))
        );
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x = t.random_element(Level::Quartic, &mut rng);
            let (a, b) = t.expand_over_subfield(&x, (&basis.0, &basis.1)).unwrap();
            let recomposed = t.add(
                &t.mul(&t.embed(&a, Level::Quartic), &basis.0),
                &t.mul(&t.embed(&b, Level::Quartic), &basis.1),
            );
            assert_eq!(recomposed, x);
        }
        // Dependent basis: (1, 1+1).
        let two = t.add(&basis.0, &basis.0);
        assert!(matches!(
            t.expand_over_subfield(&zero, (&basis.0, &two)),
            Err(Error::DependentBasis)
        ));
    }

    #[test]
    fn field_axioms_sampled() {
        for (p, e) in [(5u64, 1u32), (3, 2)] {
            let t = make_tower(p, e).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for level in [Level::Base, Level::Quadratic, Level::Quartic] {
                for _ in 0..100 {
                    let a = t.random_element(level, &mut rng);
                    let b = t.random_element(level, &mut rng);
                    let c = t.random_element(level, &mut rng);
                    assert_eq!(t.mul(&t.mul(&a, &b), &c), t.mul(&a, &t.mul(&b, &c)));
                    assert_eq!(t.mul(&a, &t.add(&b, &c)), t.add(&t.mul(&a, &b), &t.mul(&a, &c)));
                    if !a.is_zero() {
                        assert_eq!(t.mul(&a, &t.inv(&a)), t.one(level));
                    }
                }
            }
        }
    }

    #[test]
    fn embeddings_commute_with_arithmetic() {
        let t = make_tower(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let a = t.random_element(Level::Base, &mut rng);
            let b = t.random_element(Level::Base, &mut rng);
            for level in [Level::Quadratic, Level::Quartic] {
                let ea = t.embed(&a, level);
                let eb = t.embed(&b, level);
                assert_eq!(t.embed(&t.add(&a, &b), level), t.add(&ea, &eb));
                assert_eq!(t.embed(&t.mul(&a, &b), level), t.mul(&ea, &eb));
            }
        }
    }

    #[test]
    fn defining_polynomials_are_deterministic() {
        let a = make_tower(5, 1).unwrap().defining_polynomials();
        let b = make_tower(5, 1).unwrap().defining_polynomials();
        assert_eq!(a, b);
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(factor_prime_power(27), Some((3, 3)));
        assert_eq!(factor_prime_power(23), Some((23, 1)));
        assert_eq!(factor_prime_power(12), None);
    }
}
