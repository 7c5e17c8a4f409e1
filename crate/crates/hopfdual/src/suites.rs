//! Family-independent verification suites: the combinatorial scalar
//! identities and the structured-matrix invertibility facts.

use crate::dual::{d_theta_range, DualError};
use crate::families::DAlgebra;
use crate::hopf::HopfAlgebra;
use crate::matrix::{build_shifted_matrix, verify_block_criterion, ExactMatrix};
use crate::report::Report;
use crate::scalar::{
    factorial_big, q_binomial, q_factorial, rat, stirling_partial, CycloContext, CycloScalar,
    Rational,
};
use num_traits::Zero;
use std::sync::Arc;

/// Scalar identities: Stirling-sum vanishing, quantum-binomial symmetry and
/// factorial-formula agreement away from vanishing denominators, and the
/// theta-product identity for the sampled bases.
pub fn verify_scalars(
    ctx: &Arc<CycloContext>,
    d_alg: Option<&Arc<DAlgebra>>,
    alphas: &[CycloScalar],
) -> Result<Report, DualError> {
    let mut report = Report::new("scalars", "all", format!("N={}", ctx.order()));
    for r in 0..=8u64 {
        for s in 0..r {
            report.case(stirling_partial(r, s).is_zero(), || {
                format!("stirling_partial({r},{s}) != 0")
            });
        }
        report.case(
            stirling_partial(r, r) == Rational::from_integer(factorial_big(r)),
            || format!("stirling_partial({r},{r}) != {r}!"),
        );
    }
    // quantum binomial symmetry on sampled q
    let mut samples = vec![
        ctx.from_int(2),
        ctx.from_rational(crate::scalar::ratio(-1, 3)),
    ];
    if ctx.order() > 1 {
        samples.push(ctx.zeta());
    }
    for q in &samples {
        for l in 0..=8u64 {
            for k in 0..=l {
                let a = q_binomial(l, k, q).map_err(DualError::Scalar)?;
                let b = q_binomial(l, l - k, q).map_err(DualError::Scalar)?;
                report.case(a == b, || {
                    format!("q-binomial symmetry fails at l={l} k={k}")
                });
            }
        }
    }
    // factorial formula agreement at q = 2 (no vanishing quantum integers)
    let two = ctx.from_int(2);
    for l in 0..=8u64 {
        for k in 0..=l {
            let lhs = q_binomial(l, k, &two).map_err(DualError::Scalar)?;
            let denom = q_factorial(k, &two).mul(&q_factorial(l - k, &two));
            let rhs = q_factorial(l, &two)
                .div(&denom)
                .map_err(DualError::Scalar)?;
            report.case(lhs == rhs, || {
                format!("factorial formula fails at l={l} k={k}")
            });
        }
    }
    if let Some(h) = d_alg {
        for alpha in alphas {
            let lambda = alpha.pow_int(h.omega as i64).map_err(DualError::Scalar)?;
            let prod = d_theta_range(h, alpha, 0, h.m)?;
            report.case(prod == h.ctx().one().sub(&lambda), || {
                format!("theta product != 1 - lambda at alpha = {alpha}")
            });
        }
    }
    Ok(report)
}

/// The structured-matrix facts: invertibility of the root-power matrices for
/// the sampled bases and shifts, and the brute-force Kronecker/block
/// equivalences at small sizes.
pub fn verify_matrix_lemmas(ctx: &Arc<CycloContext>) -> Report {
    let mut report = Report::new("matrix-lemmas", "all", format!("N={}", ctx.order()));
    let bases = [
        ctx.from_int(2),
        ctx.from_int(3),
        ctx.from_rational(crate::scalar::ratio(1, 2)),
        ctx.zeta().scale(&rat(2)),
    ];
    // base matrix: invertible for every base off the unit circle points +-1
    for r in 1..=3usize {
        for base in &bases {
            let m = build_shifted_matrix(r, base, &Rational::zero(), 0, 1).expect("nonzero base");
            report.case(!m.det().expect("square").is_zero(), || {
                format!("base matrix singular at r={r}, base={base}")
            });
        }
        // shifted variant (1): a-shift only
        for a in [rat(0), rat(1), crate::scalar::ratio(-1, 2)] {
            for base in &bases {
                let m = build_shifted_matrix(r, base, &a, 0, 1).expect("nonzero base");
                report.case(!m.det().expect("square").is_zero(), || {
                    format!("a-shifted matrix singular at r={r}, a={a}, base={base}")
                });
            }
        }
        // shifted variant (2): rational exponent shift b through integerized
        // powers of the supplied root
        for (num, den) in [(1i64, 2u64), (-1, 3)] {
            for base in &bases {
                let m = build_shifted_matrix(r, base, &crate::scalar::ratio(1, 2), num, den)
                    .expect("nonzero base");
                report.case(!m.det().expect("square").is_zero(), || {
                    format!("b-shifted matrix singular at r={r}, b={num}/{den}, base={base}")
                });
            }
        }
    }
    // lambda = +-1 degenerates
    let singular = build_shifted_matrix(1, &ctx.one(), &Rational::zero(), 0, 1).expect("nonzero");
    report.case(singular.det().expect("square").is_zero(), || {
        "base 1 should be singular".into()
    });

    // Kronecker equivalence: det(A (x) B) != 0 iff both factors invertible,
    // over a fixed small sample set of sizes <= 3
    let sample_entries: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1]],
        vec![vec![0]],
        vec![vec![1, 1], vec![0, 1]],
        vec![vec![1, 1], vec![1, 1]],
        vec![vec![2, 0], vec![0, 3]],
        vec![vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]],
        vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
    ];
    let to_matrix = |rows: &Vec<Vec<i64>>| {
        ExactMatrix::from_fn(ctx, rows.len(), rows[0].len(), |i, j| {
            ctx.from_int(rows[i][j])
        })
    };
    for a_rows in &sample_entries {
        for b_rows in &sample_entries {
            let a = to_matrix(a_rows);
            let b = to_matrix(b_rows);
            let lhs = !a.kronecker(&b).det().expect("square").is_zero();
            let rhs = !a.det().expect("square").is_zero() && !b.det().expect("square").is_zero();
            report.case(lhs == rhs, || {
                format!("Kronecker invertibility equivalence fails ({a_rows:?}, {b_rows:?})")
            });
        }
    }
    // block criterion: assembled matrix invertible iff every block is
    let invertible_outers = [
        vec![vec![1, 1], vec![0, 1]],
        vec![vec![2, 0], vec![0, 3]],
        vec![vec![1, 2], vec![3, 5]],
    ];
    let blocks_samples = [
        (
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![1, 1]]],
            false,
        ),
        (
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]],
            true,
        ),
        (
            vec![vec![vec![1, 2], vec![3, 4]], vec![vec![2, 1], vec![1, 1]]],
            true,
        ),
    ];
    for outer in &invertible_outers {
        let a = to_matrix(outer);
        for (blocks, expected) in &blocks_samples {
            let bs: Vec<ExactMatrix> = blocks.iter().map(&to_matrix).collect();
            match verify_block_criterion(&a, &bs) {
                Ok(out) => {
                    report.case(out.consistent(), || "block criterion inconsistent".into());
                    report.case(out.assembled_invertible == *expected, || {
                        "block criterion unexpected outcome".into()
                    });
                }
                Err(e) => report.case(false, || format!("block criterion error: {e}")),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_suite_passes() {
        let ctx = CycloContext::new(6);
        let d = DAlgebra::new(&ctx, 3, 1, ctx.zeta()).unwrap();
        let alphas = vec![ctx.one(), ctx.from_int(2), ctx.zeta()];
        let r = verify_scalars(&ctx, Some(&d), &alphas).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn matrix_lemma_suite_passes() {
        let ctx = CycloContext::new(3);
        let r = verify_matrix_lemmas(&ctx);
        assert!(r.passed(), "{:?}", r.witnesses);
    }
}
