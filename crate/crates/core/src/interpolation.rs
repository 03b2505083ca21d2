//! Interpolation (shifted) Jack polynomials `P^ip_m`, their values at shifted
//! points, generalized binomial coefficients, and verifiers for the
//! difference equation and the Pieri formula.

use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::jack::{box_factor, check_rank, coeff_a, coeff_i, eigen_i, jack_p, p_at_one, to_drats};
use crate::operators::UPolyR;
use crate::partitions::{
    all_subsets, enumerate_partitions, partitions_in_box, partitions_up_to, Partition, Sign,
    SymPoly,
};
use crate::scalars::DRat;
use crate::verdict::{VerdictBuilder, VerdictReport};

/// `P^ip_m`, the polynomial `P_m + (lower degree)` vanishing at `n + (d/2)δ`
/// unless `m ⊆ n`.
pub fn ijack_p(ctx: &Context, m: &Partition) -> Result<Arc<SymPoly>> {
    check_rank(ctx, m)?;
    if let Some(v) = ctx.ijack.get(m) {
        return Ok(v);
    }
    let g = construct(ctx, m)?;
    Ok(ctx.ijack.insert(m.clone(), Arc::new(g)))
}

fn singular(ctx: &Context, m: &Partition, n: &Partition) -> Error {
    if ctx.is_specialized() {
        Error::PoleAtSpecialization(format!(
            "P^ip_{n}({n} + d/2 delta) vanishes while building {m}"
        ))
    } else {
        Error::SingularVanishingSystem(m.clone())
    }
}

/// Removes the values at lower-weight points one weight class at a time.
/// Points of equal weight do not interact: each `P^ip_n` already vanishes at
/// the other points of its own weight.
fn construct(ctx: &Context, m: &Partition) -> Result<SymPoly> {
    let r = ctx.r();
    let mut g = (*jack_p(ctx, m)?).clone();
    for w in 0..m.weight() {
        for n in enumerate_partitions(w, r) {
            let pt = ctx.shifted_point(&to_drats(&n.as_vector()));
            let val = g.eval(&pt)?;
            if val.is_zero() {
                continue;
            }
            let norm = ijack_norm(ctx, &n)?;
            if norm.is_zero() {
                return Err(singular(ctx, m, &n));
            }
            let pn = ijack_p(ctx, &n)?;
            g.add_scaled(&pn, &-&val.checked_div(&norm)?);
        }
    }
    // the weight-|m| conditions were not imposed; confirm them too
    for n in partitions_up_to(m.weight(), r) {
        let x = to_drats(&n.as_vector());
        let val = g.eval(&ctx.shifted_point(&x))?;
        if &n != m && !val.is_zero() {
            return Err(Error::SingularVanishingSystem(m.clone()));
        }
        ctx.ijack_eval.insert((m.clone(), x), val);
    }
    Ok(g)
}

/// The same polynomial from one dense solve for the Jack-basis coefficients.
pub fn ijack_p_dense(ctx: &Context, m: &Partition) -> Result<SymPoly> {
    check_rank(ctx, m)?;
    let r = ctx.r();
    let unknowns: Vec<Partition> = if m.weight() == 0 {
        Vec::new()
    } else {
        partitions_up_to(m.weight() - 1, r)
    };
    let pm = jack_p(ctx, m)?;
    let lower = unknowns
        .iter()
        .map(|k| jack_p(ctx, k))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(unknowns.len());
    let mut rhs = Vec::with_capacity(unknowns.len());
    for n in &unknowns {
        let pt = ctx.shifted_point(&to_drats(&n.as_vector()));
        rows.push(
            lower
                .iter()
                .map(|p| p.eval(&pt))
                .collect::<Result<Vec<_>>>()?,
        );
        rhs.push(-&pm.eval(&pt)?);
    }
    let c = solve_dense(rows, rhs).ok_or_else(|| Error::SingularVanishingSystem(m.clone()))?;
    let mut out = (*pm).clone();
    for (p, ck) in lower.iter().zip(&c) {
        out.add_scaled(p, ck);
    }
    Ok(out)
}

/// Gaussian elimination over Q(d); `None` when the matrix is singular.
pub fn solve_dense(mut a: Vec<Vec<DRat>>, mut b: Vec<DRat>) -> Option<Vec<DRat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        let pivot_row = a[col].clone();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = &a[row][col] * &inv;
            for (k, v) in pivot_row.iter().enumerate().skip(col) {
                a[row][k] -= &(&f * v);
            }
            let t = &f * &b[col];
            b[row] -= &t;
        }
    }
    let mut x = vec![DRat::zero(); n];
    for i in (0..n).rev() {
        let mut s = b[i].clone();
        for k in i + 1..n {
            s -= &(&a[i][k] * &x[k]);
        }
        x[i] = s.checked_div(&a[i][i]).ok()?;
    }
    Some(x)
}

/// `P^ip_k(x + (d/2)δ)`, cached.
pub fn ijack_eval_shift(ctx: &Context, k: &Partition, x: &[DRat]) -> Result<DRat> {
    if x.len() != ctx.r() {
        return Err(Error::ArityMismatch {
            left: ctx.r(),
            right: x.len(),
        });
    }
    let key = (k.clone(), x.to_vec());
    if let Some(v) = ctx.ijack_eval.get(&key) {
        return Ok(v);
    }
    let v = ijack_p(ctx, k)?.eval(&ctx.shifted_point(x))?;
    Ok(ctx.ijack_eval.insert(key, v))
}

/// `P^ip_k(k + (d/2)δ)`.
pub fn ijack_norm(ctx: &Context, k: &Partition) -> Result<DRat> {
    let v = ijack_eval_shift(ctx, k, &to_drats(&k.as_vector()))?;
    if v.is_zero() {
        return Err(Error::ZeroNormalization(k.clone()));
    }
    Ok(v)
}

/// `P^ip_k(x + (d/2)δ) / P^ip_k(k + (d/2)δ)`.
pub fn binom_coeff(ctx: &Context, k: &Partition, x: &[DRat]) -> Result<DRat> {
    let norm = ijack_norm(ctx, k)?;
    ijack_eval_shift(ctx, k, x)?.checked_div(&norm)
}

fn params(ctx: &Context, k: &Partition, box_height: u32) -> String {
    format!(
        "r={} d={} k={k} box={box_height}",
        ctx.r(),
        ctx.mode().label()
    )
}

fn compare_r(b: &mut VerdictBuilder, x: &Partition, lhs: &UPolyR, rhs: &UPolyR) {
    for (p, (a, c)) in lhs.slots().iter().zip(rhs.slots()).enumerate() {
        b.scalar(Some(p), Some(x), a, c);
    }
}

/// The difference equation `D^ip_r(u; x) g = I_r(u; k) g` for
/// `g(x) = P^ip_k(x + (d/2)δ)` at every partition `x` with `x_1 ≤ box_height`.
///
/// Terms whose shifted argument leaves the partition cone are checked to have
/// a vanishing coefficient.
pub fn verify_difference_eq(
    ctx: &Context,
    k: &Partition,
    box_height: u32,
) -> Result<VerdictReport> {
    check_rank(ctx, k)?;
    let r = ctx.r();
    let mut b = VerdictBuilder::new("ijack-difference", params(ctx, k, box_height));
    let ev = eigen_i(ctx, k);
    for x in partitions_in_box(box_height, r) {
        let xv = to_drats(&x.as_vector());
        let mut lhs = UPolyR::zero(r);
        for set_j in all_subsets(r) {
            let coef = &coeff_a(ctx, Sign::Minus, &set_j, &xv)? * &box_factor(ctx, &set_j, &xv, 0);
            let shifted = to_drats(&x.shifted(&set_j, Sign::Minus));
            // evaluated even off the cone: g is a polynomial
            let g = ijack_eval_shift(ctx, k, &shifted)?;
            if x.add_boxes(&set_j, Sign::Minus).is_none() {
                b.count();
                if !coef.is_zero() {
                    b.fail_with(
                        None,
                        Some(x.clone()),
                        format!("off-cone coefficient for |J|={} is {coef}", set_j.len()),
                    );
                }
            }
            let sign = if set_j.len() % 2 == 1 {
                DRat::from_int(-1)
            } else {
                DRat::one()
            };
            lhs.add_assign(&coeff_i(ctx, &set_j, &xv).scale(&(&(&sign * &coef) * &g)));
        }
        let rhs = ev.scale(&ijack_eval_shift(ctx, k, &xv)?);
        compare_r(&mut b, &x, &lhs, &rhs);
    }
    Ok(b.finish())
}

/// The Pieri formula for interpolation Jack polynomials at every partition
/// `x` with `x_1 ≤ box_height`.
pub fn verify_ijack_pieri(ctx: &Context, k: &Partition, box_height: u32) -> Result<VerdictReport> {
    check_rank(ctx, k)?;
    let r = ctx.r();
    let mut b = VerdictBuilder::new("ijack-pieri", params(ctx, k, box_height));
    let kv = to_drats(&k.as_vector());
    let mut moves = Vec::new();
    for set_j in all_subsets(r) {
        if let Some(kj) = k.add_boxes(&set_j, Sign::Plus) {
            let c = coeff_i(ctx, &set_j, &kv).scale(&coeff_a(ctx, Sign::Plus, &set_j, &kv)?);
            let norm = p_at_one(ctx, &kj)?.inv()?;
            moves.push((kj, c, norm));
        }
    }
    let norm_k = p_at_one(ctx, k)?.inv()?;
    for x in partitions_in_box(box_height, r) {
        let xv = to_drats(&x.as_vector());
        let lhs = eigen_i(ctx, &x).scale(&(&ijack_eval_shift(ctx, k, &xv)? * &norm_k));
        let mut rhs = UPolyR::zero(r);
        for (kj, c, norm) in &moves {
            let v = ijack_eval_shift(ctx, kj, &xv)?;
            if !v.is_zero() {
                rhs.add_assign(&c.scale(&(&v * norm)));
            }
        }
        compare_r(&mut b, &x, &lhs, &rhs);
    }
    Ok(b.finish())
}

/// Vanishing of `P^ip_m` at `n + (d/2)δ` for every `n` with `|n| ≤ max_weight`
/// and `m ⊄ n`, and nonvanishing at `n = m`.
pub fn verify_vanishing(ctx: &Context, m: &Partition, max_weight: u32) -> Result<VerdictReport> {
    check_rank(ctx, m)?;
    let mut b = VerdictBuilder::new(
        "ijack-vanishing",
        format!(
            "r={} d={} m={m} max_weight={max_weight}",
            ctx.r(),
            ctx.mode().label()
        ),
    );
    for n in partitions_up_to(max_weight, ctx.r()) {
        let v = ijack_eval_shift(ctx, m, &to_drats(&n.as_vector()))?;
        b.count();
        if m.includes_in(&n)? {
            if &n == m && v.is_zero() {
                b.fail_with(None, Some(n), "normalization vanishes".into());
            }
        } else if !v.is_zero() {
            b.fail_with(None, Some(n), format!("value {v} should vanish"));
        }
    }
    Ok(b.finish())
}
