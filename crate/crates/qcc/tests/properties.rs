//! Property tests for the structural invariants that have clean independent
//! restatements.

use proptest::prelude::*;
use qcc::conv::{hermitian_self_orthogonal, PolyGenerator};
use qcc::cosets::{CosetContext, DefiningSet};
use qcc::gf::{make_tower, FieldTower, FQ2_ZERO};
use qcc::poly::Poly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Shift-by-shift restatement of Hermitian orthogonality: for every ordered
/// row pair and every frame shift up to ±(2μ+1), the time-aligned inner
/// product Σ_{j,t} a_{j,t}·(b_{j,t−s})^q vanishes.
fn brute_force_shift_orthogonal(g: &PolyGenerator) -> bool {
    let f = g.tower().fq2();
    let max_shift = 2 * g.memory() as i64 + 1;
    for a in 0..g.rows() {
        for b in 0..g.rows() {
            for shift in -max_shift..=max_shift {
                let mut acc = FQ2_ZERO;
                for j in 0..g.cols() {
                    let pa = g.entry(a, j);
                    let pb = g.entry(b, j);
                    for t in 0..pa.0.len() as i64 {
                        let other = t - shift;
                        if other < 0 || other >= pb.0.len() as i64 {
                            continue;
                        }
                        let term = f.mul(pa.coeff(t as usize), f.frob(pb.coeff(other as usize)));
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

fn random_generator(tower: &Arc<FieldTower>, seed: u64) -> PolyGenerator {
    let f = tower.fq2();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rng.gen_range(1..=3);
    let cols = rng.gen_range(1..=4);
    let matrix = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    let deg = rng.gen_range(0..=2);
                    let coeffs =
                        (0..=deg).map(|_| f.code_from_index(rng.gen_range(0..f.size()))).collect();
                    Poly::from_coeffs(coeffs)
                })
                .collect()
        })
        .collect();
    PolyGenerator::from_rows(Arc::clone(tower), matrix)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The Laurent-product check agrees with brute-force shift orthogonality
    /// on arbitrary small matrices.
    #[test]
    fn laurent_check_is_shift_complete(seed in any::<u64>()) {
        let tower = Arc::new(make_tower(3, 1).unwrap());
        let g = random_generator(&tower, seed);
        prop_assert_eq!(hermitian_self_orthogonal(&g), brute_force_shift_orthogonal(&g));
    }

    /// z ↦ −qz applied twice is multiplication by q², so it permutes every
    /// q²-closed defining set.
    #[test]
    fn negate_q_twice_fixes_defining_sets(delta in 0u64..=2, family_ii in any::<bool>()) {
        let (ctx, z) = if family_ii {
            let ctx = CosetContext::family_ii(23).unwrap();
            let z = DefiningSet::family_ii(&ctx, delta).unwrap();
            (ctx, z)
        } else {
            let ctx = CosetContext::family_i(5).unwrap();
            let z = DefiningSet::family_i(&ctx, delta).unwrap();
            (ctx, z)
        };
        let twice: std::collections::BTreeSet<u64> =
            z.negate_q_image().into_iter().map(|x| ctx.negate_q(x)).collect();
        let original: std::collections::BTreeSet<u64> = z.exponents().iter().copied().collect();
        prop_assert_eq!(twice, original);
    }

    /// Every family-I defining set is q²-closed.
    #[test]
    fn family_i_sets_are_q2_closed(delta in 0u64..=3) {
        let ctx = CosetContext::family_i(7).unwrap();
        let z = DefiningSet::family_i(&ctx, delta).unwrap();
        let q2 = ctx.q() * ctx.q() % ctx.modulus();
        for &e in z.exponents() {
            prop_assert!(z.exponents().contains(&(e * q2 % ctx.modulus())));
        }
    }
}

/// A self-orthogonal instance exercises the agreeing-true path of the
/// equivalence above.
#[test]
fn laurent_check_true_case_matches_bruteforce() {
    use qcc::block::{build_code_in, FieldCtx};
    let ctx = CosetContext::family_i(5).unwrap();
    let env = FieldCtx::new(&ctx).unwrap();
    let c0 = build_code_in(&env, &DefiningSet::family_i(&ctx, 1).unwrap()).unwrap();
    let c1 = build_code_in(&env, &DefiningSet::single_coset(&ctx, ctx.rep_below_s(2)).unwrap()).unwrap();
    let g = qcc::conv::split_and_build(c0.check_expanded(), c1.check_expanded()).unwrap();
    assert!(hermitian_self_orthogonal(&g));
    assert!(brute_force_shift_orthogonal(&g));
}
