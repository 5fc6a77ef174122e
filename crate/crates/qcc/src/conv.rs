//! Convolutional codes over F_{q²} presented by polynomial generator
//! matrices in the delay variable D.
//!
//! The generators here come from splitting a block parity check into a
//! constant part and a degree-one part: G(D) = Ñ₀ + Ñ₁D, with the shorter
//! block padded by zero rows at the bottom. Certification covers the three
//! properties the quantum step relies on: basicness (the gcd of all maximal
//! minors is a nonzero constant), reducedness (the leading-coefficient
//! matrix has full row rank), and Hermitian self-orthogonality of all time
//! shifts, expressed as vanishing Laurent products.

use crate::error::{Error, Result};
use crate::gf::{FieldTower, Fq2Table, FQ2_ZERO};
use crate::linalg::Fq2Matrix;
use crate::poly::Poly;
use std::sync::Arc;

/// A κ×n matrix of polynomials in D over F_{q²}, with per-row degrees γᵢ,
/// memory μ = max γᵢ and degree γ = Σ γᵢ.
#[derive(Debug, Clone)]
pub struct PolyGenerator {
    tower: Arc<FieldTower>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
    row_degrees: Vec<usize>,
    memory: usize,
    degree: usize,
}

impl PolyGenerator {
    pub fn from_rows(tower: Arc<FieldTower>, rows: Vec<Vec<Poly>>) -> Self {
        let n_rows = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        let row_degrees: Vec<usize> = (0..n_rows)
            .map(|r| {
                entries[r * cols..(r + 1) * cols]
                    .iter()
                    .filter_map(|p| p.degree())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let memory = row_degrees.iter().copied().max().unwrap_or(0);
        let degree = row_degrees.iter().sum();
        PolyGenerator { tower, rows: n_rows, cols, entries, row_degrees, memory, degree }
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    fn field(&self) -> &Fq2Table {
        self.tower.fq2()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn row_degrees(&self) -> &[usize] {
        &self.row_degrees
    }

    /// Memory μ = max γᵢ.
    pub fn memory(&self) -> usize {
        self.memory
    }

    /// Overall constraint length γ = Σ γᵢ.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient matrix of D^k.
    pub fn coefficient_matrix(&self, k: usize) -> Fq2Matrix {
        let rows = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c).coeff(k)).collect())
            .collect();
        Fq2Matrix::from_rows(Arc::clone(&self.tower), rows)
    }

    /// Row i contributes its degree-γᵢ coefficients.
    pub fn leading_coefficient_matrix(&self) -> Fq2Matrix {
        let rows = (0..self.rows)
            .map(|r| {
                let d = self.row_degrees[r];
                (0..self.cols).map(|c| self.entry(r, c).coeff(d)).collect()
            })
            .collect();
        Fq2Matrix::from_rows(Arc::clone(&self.tower), rows)
    }

    /// Certificate fragment: per-entry coefficient lists in D-degree order,
    /// each coefficient an F_p coordinate vector.
    pub fn to_json(&self) -> serde_json::Value {
        let f = self.field();
        let entries: Vec<Vec<Vec<Vec<u64>>>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.entry(r, c).0.iter().map(|&x| f.coords_from_code(x)).collect())
                    .collect()
            })
            .collect();
        serde_json::json!({
            "rows": self.rows,
            "cols": self.cols,
            "row_degrees": self.row_degrees,
            "memory": self.memory,
            "degree": self.degree,
            "entries": entries,
        })
    }
}

/// G(D) = Ñ₀ + Ñ₁D from the constant block N₀ and the degree-one block N₁,
/// the latter padded with zero rows at the bottom to κ = rows(N₀).
///
/// Requirements: equal column counts, 1 ≤ rows(N₁) ≤ κ with no zero row in
/// N₁ (otherwise the memory degenerates), and N₀ of full row rank κ.
pub fn split_and_build(n_c0: &Fq2Matrix, n_c1: &Fq2Matrix) -> Result<PolyGenerator> {
    if n_c0.cols() != n_c1.cols() {
        return Err(Error::Precondition(format!(
            "column mismatch: constant block has {}, degree-one block has {}",
            n_c0.cols(),
            n_c1.cols()
        )));
    }
    let kappa = n_c0.rows();
    let rho = n_c1.rows();
    if rho == 0 || (0..rho).any(|r| n_c1.row(r).iter().all(|&c| c == FQ2_ZERO)) {
        return Err(Error::Degenerate(
            "degree-one block has a zero row; the resulting memory is not 1".into(),
        ));
    }
    if rho > kappa {
        return Err(Error::Precondition(format!(
            "rank condition violated: degree-one block has {rho} rows, more than kappa = {kappa}"
        )));
    }
    if n_c0.rank() != kappa {
        return Err(Error::Precondition(
            "rank condition violated: constant block must have full row rank".into(),
        ));
    }
    let rows = (0..kappa)
        .map(|r| {
            (0..n_c0.cols())
                .map(|c| {
                    let c0 = n_c0.get(r, c);
                    let c1 = if r < rho { n_c1.get(r, c) } else { FQ2_ZERO };
                    Poly::from_coeffs(vec![c0, c1])
                })
                .collect()
        })
        .collect();
    let g = PolyGenerator::from_rows(Arc::clone(n_c0.tower()), rows);
    debug_assert_eq!(g.memory(), 1);
    debug_assert_eq!(g.degree(), rho);
    Ok(g)
}

/// Gcd of all κ×κ minors of G(D), monic-normalized; the zero polynomial when
/// the matrix has rank < κ. G is basic exactly when this is the constant 1.
///
/// Computed by diagonalizing a working copy with unimodular row and column
/// operations, which preserve every determinantal divisor; the product of
/// the resulting diagonal entries is the minor gcd.
#[allow(clippy::needless_range_loop)] // simultaneous row/column indexing
pub fn minor_gcd(g: &PolyGenerator) -> Poly {
    let f = g.field();
    let mut m: Vec<Vec<Poly>> = (0..g.rows())
        .map(|r| (0..g.cols()).map(|c| g.entry(r, c).clone()).collect())
        .collect();
    let rows = g.rows();
    let cols = g.cols();
    let mut diag: Vec<Poly> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: minimal-degree nonzero entry of the trailing submatrix
        let mut pivot: Option<(usize, usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if let Some(d) = m[i][j].degree() {
                    if pivot.is_none_or(|(_, _, pd)| d < pd) {
                        pivot = Some((i, j, d));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            break; // trailing submatrix is zero
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let (quot, rem) = m[i][t].div_rem(&m[t][t], f);
            for j in t..cols {
                let sub = quot.mul(&m[t][j], f);
                m[i][j] = m[i][j].sub(&sub, f);
            }
            debug_assert_eq!(m[i][t], rem);
            if !rem.is_zero() {
                clean = false; // smaller-degree remainder becomes the next pivot
            }
        }
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let (quot, rem) = m[t][j].div_rem(&m[t][t], f);
            for i in t..rows {
                let sub = quot.mul(&m[i][t], f);
                m[i][j] = m[i][j].sub(&sub, f);
            }
            if !rem.is_zero() {
                clean = false;
            }
        }
        if clean {
            diag.push(m[t][t].make_monic(f));
            t += 1;
        }
    }
    if diag.len() < rows {
        return Poly::zero();
    }
    let mut product = Poly::one();
    for d in &diag {
        product = product.mul(d, f);
    }
    product.make_monic(f)
}

/// G is basic iff the gcd of its maximal minors is a nonzero constant.
pub fn is_basic(g: &PolyGenerator) -> bool {
    let gcd = minor_gcd(g);
    !gcd.is_zero() && gcd.is_unit()
}

/// G is reduced iff its leading-coefficient matrix has full row rank.
pub fn is_reduced(g: &PolyGenerator) -> bool {
    g.leading_coefficient_matrix().rank() == g.rows()
}

/// All ordered row pairs (a, b) satisfy Σⱼ g_{aj}(D)·ĝ_{bj}(D⁻¹) = 0 as a
/// Laurent polynomial, where ĝ conjugates each coefficient by x ↦ x^q. This
/// encodes orthogonality of every pair of time shifts.
pub fn hermitian_self_orthogonal(g: &PolyGenerator) -> bool {
    let f = g.field();
    let max_deg = g.memory() as i64;
    for a in 0..g.rows() {
        for b in 0..g.rows() {
            for shift in -max_deg..=max_deg {
                let mut acc = FQ2_ZERO;
                for j in 0..g.cols() {
                    let pa = g.entry(a, j);
                    let pb = g.entry(b, j);
                    for m in 0..pa.0.len() {
                        let other = m as i64 - shift;
                        if other < 0 {
                            continue;
                        }
                        let term = f.mul(pa.coeff(m), f.frob(pb.coeff(other as usize)));
                        acc = f.add(acc, term);
                    }
                }
                if acc != FQ2_ZERO {
                    return false;
                }
            }
        }
    }
    true
}

/// The free-distance sandwich derived from block distances:
/// min{d₀ + d_μ, d} ≤ d_f^{⊥h} ≤ d, and d_f ≥ d^{⊥h}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sandwich {
    pub lower_perp: u64,
    pub upper_perp: u64,
    pub lower_v: u64,
}

impl Sandwich {
    /// The dual free distance, when the interval collapses to a point.
    pub fn pinned(&self) -> Option<u64> {
        (self.lower_perp == self.upper_perp).then_some(self.upper_perp)
    }
}

pub fn free_distance_sandwich(d0: u64, dmu: u64, d: u64, d_dual: u64) -> Sandwich {
    Sandwich { lower_perp: (d0 + dmu).min(d), upper_perp: d, lower_v: d_dual }
}

/// A convolutional code presented by a reduced basic generator, together
/// with the distance bounds carried through the construction.
#[derive(Debug, Clone)]
pub struct ConvCode {
    generator: PolyGenerator,
    sandwich: Sandwich,
}

impl ConvCode {
    pub fn new(generator: PolyGenerator, sandwich: Sandwich) -> Self {
        ConvCode { generator, sandwich }
    }

    pub fn generator(&self) -> &PolyGenerator {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn memory(&self) -> usize {
        self.generator.memory()
    }

    pub fn degree(&self) -> usize {
        self.generator.degree()
    }

    /// Lower bound for the free distance of the code itself: d^{⊥h} of the
    /// parent block code. The exact value is not certified at desk scale.
    pub fn free_distance_lower(&self) -> u64 {
        self.sandwich.lower_v
    }

    pub fn sandwich(&self) -> &Sandwich {
        &self.sandwich
    }
}
