//! Discrete-log tables for F_{q²}.
//!
//! Matrix elimination and the exhaustive distance oracles spend essentially
//! all of their time in F_{q²} multiply/add, so elements are carried as a
//! compact code: 0 is the zero element, and k+1 stands for g^k where g is a
//! fixed generator of F_{q²}*. Multiplication is an addition of logs and
//! addition is a single Zech-logarithm lookup; the tables are O(q²) words and
//! stay cache-resident at the field sizes this crate targets.

use super::{FieldElement, FieldTower, Level};

const SENTINEL: u32 = u32::MAX;

/// The zero code.
pub const ZERO: u32 = 0;
/// The one code (g⁰).
pub const ONE: u32 = 1;

#[derive(Debug)]
pub struct Fq2Table {
    p: u64,
    e: u32,
    q: u64,
    order: u64, // q² − 1
    /// exp[k] = packed coordinate index of g^k.
    exp: Vec<u64>,
    /// log[packed] = k, SENTINEL for the zero index.
    log: Vec<u32>,
    /// zech[d] = log(1 + g^d), SENTINEL when 1 + g^d = 0.
    zech: Vec<u32>,
    /// log(−1) = (q² − 1)/2 for odd q.
    minus_one: u64,
}

impl Fq2Table {
    pub(super) fn empty() -> Self {
        Fq2Table { p: 0, e: 0, q: 0, order: 0, exp: vec![], log: vec![], zech: vec![], minus_one: 0 }
    }

    pub(super) fn build(tower: &FieldTower) -> Self {
        let q2 = tower.q2();
        let order = q2 - 1;
        // The subgroup of F_{q⁴}* of order q²−1 is exactly F_{q²}*, so a
        // generator of it projects onto the quadratic level.
        let g4 = tower.pow(&tower.generator4, (tower.q4() - 1) / order);
        let g2 = tower
            .project_to_quadratic(&g4)
            .expect("subgroup of order q^2-1 lies in the quadratic subfield");

        let mut exp = vec![0u64; order as usize];
        let mut log = vec![SENTINEL; q2 as usize];
        let mut acc = tower.one(Level::Quadratic);
        for (k, slot) in exp.iter_mut().enumerate() {
            let idx = tower.packed_index(&acc);
            *slot = idx;
            log[idx as usize] = k as u32;
            acc = tower.mul(&acc, &g2);
        }
        debug_assert_eq!(acc, tower.one(Level::Quadratic), "generator order mismatch");

        let p = tower.p();
        let mut zech = vec![SENTINEL; order as usize];
        for (d, slot) in zech.iter_mut().enumerate() {
            let idx = exp[d];
            let low = idx % p;
            let plus_one = idx - low + (low + 1) % p;
            if plus_one != 0 {
                *slot = log[plus_one as usize];
            }
        }

        Fq2Table { p, e: tower.e(), q: tower.q(), order, exp, log, zech, minus_one: order / 2 }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Field size q².
    pub fn size(&self) -> u64 {
        self.order + 1
    }

    #[inline]
    pub fn is_zero(code: u32) -> bool {
        code == ZERO
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        let la = (a - 1) as u64;
        let lb = (b - 1) as u64;
        let d = if lb >= la { lb - la } else { lb + self.order - la };
        let z = self.zech[d as usize];
        if z == SENTINEL {
            return ZERO;
        }
        let mut l = la + z as u64;
        if l >= self.order {
            l -= self.order;
        }
        l as u32 + 1
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == ZERO {
            return ZERO;
        }
        let mut l = (a - 1) as u64 + self.minus_one;
        if l >= self.order {
            l -= self.order;
        }
        l as u32 + 1
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == ZERO || b == ZERO {
            return ZERO;
        }
        let mut l = (a - 1) as u64 + (b - 1) as u64;
        if l >= self.order {
            l -= self.order;
        }
        l as u32 + 1
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert_ne!(a, ZERO, "inverse of zero");
        let l = (a - 1) as u64;
        (if l == 0 { 0 } else { self.order - l }) as u32 + 1
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// x ↦ x^q.
    #[inline]
    pub fn frob(&self, a: u32) -> u32 {
        if a == ZERO {
            return ZERO;
        }
        ((a - 1) as u64 * self.q % self.order) as u32 + 1
    }

    pub fn pow(&self, a: u32, exp: u64) -> u32 {
        if a == ZERO {
            return if exp == 0 { ONE } else { ZERO };
        }
        ((a - 1) as u64 * (exp % self.order) % self.order) as u32 + 1
    }

    // ---- conversions ----

    /// Code of the element with the given packed coordinate index.
    pub fn code_from_index(&self, idx: u64) -> u32 {
        if idx == 0 {
            return ZERO;
        }
        self.log[idx as usize] + 1
    }

    /// Packed coordinate index of a code.
    pub fn index_from_code(&self, code: u32) -> u64 {
        if code == ZERO {
            return 0;
        }
        self.exp[(code - 1) as usize]
    }

    /// Code of a quadratic-level tower element.
    pub fn code_from_element(&self, tower: &FieldTower, x: &FieldElement) -> u32 {
        assert_eq!(x.level(), Level::Quadratic, "packed field holds quadratic elements");
        self.code_from_index(tower.packed_index(x))
    }

    /// Quadratic-level tower element of a code.
    pub fn element_from_code(&self, tower: &FieldTower, code: u32) -> FieldElement {
        tower.element_from_index(Level::Quadratic, self.index_from_code(code))
    }

    /// F_p coordinates of a code (length 2e).
    pub fn coords_from_code(&self, code: u32) -> Vec<u64> {
        let mut idx = self.index_from_code(code);
        let mut coords = vec![0u64; 2 * self.e as usize];
        for c in coords.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        coords
    }

    /// Code of an integer constant in 0..p.
    pub fn constant(&self, value: u64) -> u32 {
        self.code_from_index(value % self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{make_tower, Level};
    use super::*;

    #[test]
    fn table_matches_tower_arithmetic() {
        for (p, e) in [(5u64, 1u32), (3, 2)] {
            let t = make_tower(p, e).unwrap();
            let f = t.fq2();
            let q2 = t.q2();
            for ai in 0..q2 {
                let a = t.element_from_index(Level::Quadratic, ai);
                let ca = f.code_from_element(&t, &a);
                assert_eq!(f.element_from_code(&t, ca), a);
                for bi in 0..q2 {
                    let b = t.element_from_index(Level::Quadratic, bi);
                    let cb = f.code_from_element(&t, &b);
                    assert_eq!(f.element_from_code(&t, f.add(ca, cb)), t.add(&a, &b));
                    assert_eq!(f.element_from_code(&t, f.mul(ca, cb)), t.mul(&a, &b));
                }
                if ai != 0 {
                    assert_eq!(f.mul(ca, f.inv(ca)), ONE);
                }
                assert_eq!(f.element_from_code(&t, f.frob(ca)), t.frobenius_q(&a));
                assert_eq!(f.element_from_code(&t, f.neg(ca)), t.neg(&a));
            }
        }
    }

    #[test]
    fn constants() {
        let t = make_tower(5, 1).unwrap();
        let f = t.fq2();
        assert_eq!(f.constant(0), ZERO);
        assert_eq!(f.constant(1), ONE);
        assert_eq!(f.add(f.constant(2), f.constant(3)), ZERO);
        assert_eq!(f.mul(f.constant(2), f.constant(3)), ONE);
    }
}
