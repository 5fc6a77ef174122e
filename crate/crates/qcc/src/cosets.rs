//! Modular number theory for the two code families: multiplicative orders,
//! q²-cyclotomic cosets modulo rn, the exponent set θ_{r,n} indexing the
//! roots of Xⁿ − λ, defining sets, and the dual-containment criterion
//! Z ∩ Z^{−q} = ∅.
//!
//! Family I works at length n = q² + 1 with r = q + 1; family II at
//! n = (q² + 1)/10 for q ≡ ±3 (mod 10). In both cases ord_{rn}(q²) = 2, so
//! every coset has one or two elements, and θ_{r,n} splits into a fixed
//! number of singletons plus pairs {s − ri, s + ri} around the distinguished
//! exponent s = (q² + 1)/2.

use crate::error::{Error, Result};
use crate::gf::factor_prime_power;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    I,
    II,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::I => write!(f, "I"),
            Family::II => write!(f, "II"),
        }
    }
}

/// Everything needed to talk about q²-cyclotomic cosets modulo rn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetContext {
    family: Family,
    q: u64,
    n: u64,
    r: u64,
    modulus: u64,
    s: u64,
}

/// Smallest t ≥ 1 with a^t ≡ 1 (mod m). Requires gcd(a, m) = 1.
pub fn mult_order(a: u64, m: u64) -> Result<u64> {
    assert!(m > 1, "modulus must exceed 1");
    let a = a % m;
    if gcd(a, m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    let mut acc = a;
    let mut t = 1u64;
    while acc != 1 {
        acc = mul_mod(acc, a, m);
        t += 1;
    }
    Ok(t)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Validates that q is an odd prime power and returns (p, e).
fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    let (p, e) = factor_prime_power(q)
        .ok_or_else(|| Error::Precondition(format!("q = {q} is not a prime power")))?;
    if p == 2 {
        return Err(Error::Precondition(format!("q = {q} is even; an odd prime power is required")));
    }
    Ok((p, e))
}

impl CosetContext {
    /// Context for length n = q² + 1, shift order r = q + 1.
    #[allow(clippy::manual_div_ceil)] // s = (q²+1)/2 is the exact domain formula
    pub fn family_i(q: u64) -> Result<Self> {
        let _ = odd_prime_power(q)?;
        if q < 3 {
            return Err(Error::Precondition(format!("family I requires q >= 3, got {q}")));
        }
        let n = q * q + 1;
        let r = q + 1;
        let ctx = CosetContext { family: Family::I, q, n, r, modulus: r * n, s: (q * q + 1) / 2 };
        ctx.validate()?;
        Ok(ctx)
    }

    /// Context for length n = (q² + 1)/10, for q = 10m + 3 or 10m + 7 with
    /// m ≥ 1. The quantum construction additionally requires m ≥ 2; the
    /// weaker gate here leaves the coset structure explorable.
    #[allow(clippy::manual_div_ceil)]
    pub fn family_ii(q: u64) -> Result<Self> {
        let _ = odd_prime_power(q)?;
        let m = q / 10;
        if !(q % 10 == 3 || q % 10 == 7) || m < 1 {
            return Err(Error::Precondition(format!(
                "family II requires q = 10m+3 or 10m+7 with m >= 1 (got q={q}, m={m})"
            )));
        }
        let n = (q * q + 1) / 10;
        let r = q + 1;
        let ctx = CosetContext { family: Family::II, q, n, r, modulus: r * n, s: (q * q + 1) / 2 };
        ctx.validate()?;
        Ok(ctx)
    }

    fn validate(&self) -> Result<()> {
        if gcd(self.n, self.q) != 1 {
            return Err(Error::Internal(format!("gcd(n, q) != 1 for q={}, n={}", self.q, self.n)));
        }
        if !(self.q * self.q - 1).is_multiple_of(self.r) {
            return Err(Error::Internal(format!("r = {} does not divide q^2 - 1", self.r)));
        }
        let ord = mult_order(self.q * self.q % self.modulus, self.modulus)?;
        if ord != 2 {
            return Err(Error::Internal(format!(
                "ord_{{rn}}(q^2) = {ord}, expected 2 for q = {}",
                self.q
            )));
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// The modulus rn.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The distinguished exponent s = (q² + 1)/2.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// m with q = 10m + 3 or 10m + 7 (meaningful for family II).
    pub fn m(&self) -> u64 {
        self.q / 10
    }

    /// The exponent of θ_{r,n} at index i: 1 + ri mod rn.
    pub fn theta(&self, i: u64) -> u64 {
        (1 + self.r * (i % self.n)) % self.modulus
    }

    /// Index of z inside θ_{r,n}, if z belongs to it.
    pub fn theta_index(&self, z: u64) -> Option<u64> {
        if z < self.modulus && z % self.r == 1 % self.r {
            Some((z - 1) / self.r)
        } else {
            None
        }
    }

    /// (−q·z) mod rn.
    pub fn negate_q(&self, z: u64) -> u64 {
        let m = self.modulus;
        (m - mul_mod(self.q % m, z % m, m)) % m
    }

    /// (s − r·steps) mod rn, the coset representative `steps` below s.
    pub fn rep_below_s(&self, steps: u64) -> u64 {
        let m = self.modulus;
        let offset = mul_mod(self.r, steps % m, m);
        (self.s + m - offset) % m
    }
}

/// Orbit of x under multiplication by q² modulo rn, sorted. Size 1 or 2
/// since ord_{rn}(q²) = 2.
pub fn cyclotomic_coset(x: u64, ctx: &CosetContext) -> Vec<u64> {
    let m = ctx.modulus;
    let q2 = ctx.q * ctx.q % m;
    let mut orbit = vec![x % m];
    let mut next = mul_mod(x % m, q2, m);
    while !orbit.contains(&next) {
        orbit.push(next);
        next = mul_mod(next, q2, m);
    }
    orbit.sort_unstable();
    orbit
}

/// The full partition of θ_{r,n} into q²-cyclotomic cosets.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaDecomposition {
    pub singletons: Vec<u64>,
    pub pairs: Vec<[u64; 2]>,
}

impl ThetaDecomposition {
    pub fn element_count(&self) -> usize {
        self.singletons.len() + 2 * self.pairs.len()
    }
}

/// Partitions θ_{r,n} into cosets and verifies the family-specific shape:
/// two singletons {s} and {s + rn/2} for family I, one singleton {s} for
/// family II, all other cosets pairs, covering exactly n exponents.
pub fn theta_decomposition(ctx: &CosetContext) -> Result<ThetaDecomposition> {
    let mut seen = BTreeSet::new();
    let mut singletons = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..ctx.n {
        let z = ctx.theta(i);
        if seen.contains(&z) {
            continue;
        }
        let coset = cyclotomic_coset(z, ctx);
        for &c in &coset {
            if !seen.insert(c) {
                return Err(Error::Internal(format!("cosets overlap at residue {c}")));
            }
        }
        match coset.len() {
            1 => singletons.push(coset[0]),
            2 => pairs.push([coset[0], coset[1]]),
            k => return Err(Error::Internal(format!("coset of size {k}, expected 1 or 2"))),
        }
    }
    singletons.sort_unstable();
    pairs.sort_unstable();
    let decomposition = ThetaDecomposition { singletons, pairs };
    if decomposition.element_count() as u64 != ctx.n {
        return Err(Error::Internal(format!(
            "decomposition covers {} exponents, expected n = {}",
            decomposition.element_count(),
            ctx.n
        )));
    }
    let expected_singletons: Vec<u64> = match ctx.family {
        Family::I => {
            let mut v = vec![ctx.s, ctx.s + ctx.modulus / 2];
            v.sort_unstable();
            v
        }
        Family::II => vec![ctx.s],
    };
    if decomposition.singletons != expected_singletons {
        return Err(Error::Internal(format!(
            "singleton cosets {:?} do not match the expected {:?}",
            decomposition.singletons, expected_singletons
        )));
    }
    Ok(decomposition)
}

/// A union of q²-cyclotomic cosets inside θ_{r,n}.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    ctx: CosetContext,
    /// Coset representatives in construction order.
    reps: Vec<u64>,
    /// Constituent cosets, parallel to `reps`.
    cosets: Vec<Vec<u64>>,
    /// Sorted union of all cosets.
    exponents: Vec<u64>,
}

impl DefiningSet {
    /// Union of the cosets of the given representatives, in order.
    /// Validates θ-membership, q²-closure and disjointness.
    pub fn from_cosets(ctx: &CosetContext, reps: &[u64]) -> Result<Self> {
        let mut cosets = Vec::with_capacity(reps.len());
        let mut union = BTreeSet::new();
        for &rep in reps {
            let coset = cyclotomic_coset(rep, ctx);
            for &z in &coset {
                if ctx.theta_index(z).is_none() {
                    return Err(Error::Precondition(format!(
                        "exponent {z} lies outside theta_(r,n)"
                    )));
                }
                if !union.insert(z) {
                    return Err(Error::Precondition(format!(
                        "cosets are not disjoint: residue {z} repeats"
                    )));
                }
            }
            cosets.push(coset);
        }
        Ok(DefiningSet {
            ctx: *ctx,
            reps: reps.to_vec(),
            cosets,
            exponents: union.into_iter().collect(),
        })
    }

    /// Family-I defining set Z = ∪_{j=0..δ} C_{s−rj}; |Z| = 2δ + 1.
    pub fn family_i(ctx: &CosetContext, delta: u64) -> Result<Self> {
        assert_eq!(ctx.family, Family::I, "family-I defining set needs a family-I context");
        if delta > (ctx.q - 1) / 2 {
            return Err(Error::Precondition(format!(
                "delta must satisfy 0 <= delta <= (q-1)/2 = {} (got {delta})",
                (ctx.q - 1) / 2
            )));
        }
        let reps: Vec<u64> = (0..=delta).map(|j| ctx.rep_below_s(j)).collect();
        let set = Self::from_cosets(ctx, &reps)?;
        debug_assert_eq!(set.len() as u64, 2 * delta + 1);
        Ok(set)
    }

    /// Family-II defining set Z = ∪_{j=0..t} C_{s−r((n−1)/2−j)}; |Z| = 2(t+1).
    /// The exponents form one cyclically consecutive progression of step r.
    pub fn family_ii(ctx: &CosetContext, t: u64) -> Result<Self> {
        assert_eq!(ctx.family, Family::II, "family-II defining set needs a family-II context");
        let half = (ctx.n - 1) / 2;
        if half == 0 || t > half - 1 {
            return Err(Error::Precondition(format!(
                "t must satisfy 0 <= t <= (n-1)/2 - 1 = {} (got {t})",
                half.saturating_sub(1)
            )));
        }
        let reps: Vec<u64> = (0..=t).map(|j| ctx.rep_below_s(half - j)).collect();
        let set = Self::from_cosets(ctx, &reps)?;
        debug_assert_eq!(set.len() as u64, 2 * (t + 1));
        debug_assert_eq!(set.longest_run(), 2 * (t + 1));
        Ok(set)
    }

    /// Single-coset defining set (the degree-1 piece of the split construction).
    pub fn single_coset(ctx: &CosetContext, rep: u64) -> Result<Self> {
        Self::from_cosets(ctx, &[rep])
    }

    /// The empty defining set (full-space code).
    pub fn empty(ctx: &CosetContext) -> Self {
        DefiningSet { ctx: *ctx, reps: vec![], cosets: vec![], exponents: vec![] }
    }

    /// All of θ_{r,n} (zero code).
    pub fn full(ctx: &CosetContext) -> Result<Self> {
        let decomposition = theta_decomposition(ctx)?;
        let mut reps = decomposition.singletons.clone();
        reps.extend(decomposition.pairs.iter().map(|p| p[0]));
        Self::from_cosets(ctx, &reps)
    }

    pub fn ctx(&self) -> &CosetContext {
        &self.ctx
    }

    /// Coset representatives in construction order (one parity-check row each).
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    /// Sorted union of all constituent cosets.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// {−qz mod rn | z ∈ Z}.
    pub fn negate_q_image(&self) -> BTreeSet<u64> {
        self.exponents.iter().map(|&z| self.ctx.negate_q(z)).collect()
    }

    /// Z ∩ Z^{−q} = ∅, the dual-containment criterion for the code with
    /// defining set Z.
    pub fn is_dual_containing(&self) -> bool {
        let image = self.negate_q_image();
        !self.exponents.iter().any(|z| image.contains(z))
    }

    /// Length of the longest cyclically consecutive run of θ-indices whose
    /// exponents all lie in Z. The BCH bound is this plus one.
    pub fn longest_run(&self) -> u64 {
        if self.exponents.is_empty() {
            return 0;
        }
        let indices: BTreeSet<u64> =
            self.exponents.iter().map(|&z| self.ctx.theta_index(z).expect("validated")).collect();
        if indices.len() as u64 == self.ctx.n {
            return self.ctx.n;
        }
        let sorted: Vec<u64> = indices.into_iter().collect();
        let mut best = 1u64;
        let mut current = 1u64;
        for w in sorted.windows(2) {
            if w[1] == w[0] + 1 {
                current += 1;
            } else {
                best = best.max(current);
                current = 1;
            }
        }
        best = best.max(current);
        // wrap-around: a run ending at n−1 continues at 0
        if sorted.first() == Some(&0) && sorted.last() == Some(&(self.ctx.n - 1)) {
            let head = sorted.iter().zip(0u64..).take_while(|&(&v, i)| v == i).count() as u64;
            let tail = sorted
                .iter()
                .rev()
                .zip((0..self.ctx.n).rev())
                .take_while(|&(&v, i)| v == i)
                .count() as u64;
            best = best.max(head + tail);
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx5() -> CosetContext {
        CosetContext::family_i(5).unwrap()
    }

    fn ctx23() -> CosetContext {
        CosetContext::family_ii(23).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(1, 156).unwrap(), 1);
        assert_eq!(mult_order(25, 156).unwrap(), 2);
        assert_eq!(mult_order(529, 1272).unwrap(), 2);
        assert!(matches!(mult_order(6, 9), Err(Error::NotCoprime { a: 6, m: 9 })));
    }

    #[test]
    fn context_parameters() {
        let c = ctx5();
        assert_eq!((c.n(), c.r(), c.modulus(), c.s()), (26, 6, 156, 13));
        let c = ctx23();
        assert_eq!((c.n(), c.r(), c.modulus(), c.s()), (53, 24, 1272, 265));
    }

    #[test]
    fn rejects_invalid_family_ii_q() {
        // 10 divides 7²+1 but 7 = 10·0+7 has m = 0.
        assert!(CosetContext::family_ii(7).is_err());
        assert!(CosetContext::family_ii(11).is_err());
        // m = 1 is allowed for coset exploration.
        assert!(CosetContext::family_ii(13).is_ok());
    }

    #[test]
    fn cosets_around_s() {
        let c = ctx5();
        assert_eq!(cyclotomic_coset(13, &c), vec![13]);
        assert_eq!(cyclotomic_coset(7, &c), vec![7, 19]);
        assert_eq!(cyclotomic_coset(0, &c), vec![0]);
    }

    #[test]
    fn decomposition_family_i() {
        let c = ctx5();
        let d = theta_decomposition(&c).unwrap();
        assert_eq!(d.singletons, vec![13, 91]);
        assert_eq!(d.pairs.len(), 12);
        assert_eq!(d.element_count(), 26);
    }

    #[test]
    fn decomposition_family_i_small_q() {
        // q = 3 is below the quantum construction's range but satisfies the
        // decomposition hypotheses.
        let c = CosetContext::family_i(3).unwrap();
        let d = theta_decomposition(&c).unwrap();
        assert_eq!(d.singletons.len(), 2);
        assert_eq!(d.pairs.len(), 4);
        assert_eq!(d.element_count(), 10);
    }

    #[test]
    fn decomposition_family_ii() {
        let c = ctx23();
        let d = theta_decomposition(&c).unwrap();
        assert_eq!(d.singletons, vec![265]);
        assert_eq!(d.pairs.len(), 26);
        assert_eq!(d.element_count(), 53);
    }

    #[test]
    fn family_i_defining_sets() {
        let c = ctx5();
        let z = DefiningSet::family_i(&c, 2).unwrap();
        assert_eq!(z.exponents(), &[1, 7, 13, 19, 25]);
        assert_eq!(z.len(), 5);
        let z0 = DefiningSet::family_i(&c, 0).unwrap();
        assert_eq!(z0.exponents(), &[13]);
        assert!(DefiningSet::family_i(&c, 3).is_err());
    }

    #[test]
    fn family_ii_defining_sets() {
        let c = ctx23();
        let z = DefiningSet::family_ii(&c, 3).unwrap();
        assert_eq!(z.len(), 8);
        assert_eq!(z.longest_run(), 8);
        let z0 = DefiningSet::family_ii(&c, 0).unwrap();
        assert_eq!(z0.exponents(), &[889, 913]);
        assert!(DefiningSet::family_ii(&c, 26).is_err());
    }

    #[test]
    fn negate_q_images() {
        let c = ctx5();
        let single = DefiningSet::single_coset(&c, 13).unwrap();
        assert_eq!(single.negate_q_image(), BTreeSet::from([91]));
        let z = DefiningSet::family_i(&c, 2).unwrap();
        assert_eq!(z.negate_q_image(), BTreeSet::from([31, 61, 91, 121, 151]));
        assert!(DefiningSet::empty(&c).negate_q_image().is_empty());
    }

    #[test]
    fn dual_containment() {
        let c = ctx5();
        assert!(DefiningSet::empty(&c).is_dual_containing());
        assert!(DefiningSet::family_i(&c, 2).unwrap().is_dual_containing());
        assert!(!DefiningSet::full(&c).unwrap().is_dual_containing());
    }

    #[test]
    fn runs() {
        let c = ctx5();
        assert_eq!(DefiningSet::empty(&c).longest_run(), 0);
        assert_eq!(DefiningSet::family_i(&c, 2).unwrap().longest_run(), 5);
        assert_eq!(DefiningSet::full(&c).unwrap().longest_run(), 26);
        // The family-II sets wrap around the end of θ.
        let z = DefiningSet::family_ii(&ctx23(), 2).unwrap();
        assert_eq!(z.longest_run(), 6);
    }
}
