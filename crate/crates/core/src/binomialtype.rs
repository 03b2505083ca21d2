//! Degree-truncated `0F0` kernel, binomial-type families `f_m` generated by a
//! symmetric series `F(u)`, multivariate Bernoulli polynomials, and the
//! identities they satisfy.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::interpolation::{binom_coeff, ijack_eval_shift, ijack_norm};
use crate::jack::{
    box_factor, check_rank, coeff_a, jack_p, jack_phi, jack_psi, p_at_one, to_drats,
};
use crate::operators::{twisted_component, Twist};
use crate::partitions::{
    elementary_e, partitions_up_to, power_sum_p1, subsets_of_size, Partition, Sign, SymPoly,
    SymPolyRepr,
};
use crate::scalars::{int, BigRat, DRat};
use crate::verdict::{VerdictBuilder, VerdictReport};

/// A series in `u` whose coefficients are polynomials in `z`, keyed by a
/// partition indexing some basis in `u`.
pub type Bigraded = BTreeMap<Partition, SymPoly>;

/// `Σ_{|m|≤N} Φ_m(z) Ψ_m(u)`, stored as `m ↦ Φ_m(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelTrunc {
    pub r: usize,
    pub n: u32,
    pub terms: Bigraded,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelTruncRepr {
    pub r: usize,
    #[serde(rename = "N")]
    pub n: u32,
    pub terms: Vec<KernelTermRepr>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelTermRepr {
    pub u_partition: Vec<u32>,
    pub z_poly: SymPolyRepr,
}

impl KernelTrunc {
    pub fn to_repr(&self) -> KernelTruncRepr {
        KernelTruncRepr {
            r: self.r,
            n: self.n,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(k, z)| KernelTermRepr {
                    u_partition: k.parts().to_vec(),
                    z_poly: z.to_repr(),
                })
                .collect(),
        }
    }
}

/// A truncated symmetric series in `u`, in the monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesF {
    pub name: String,
    pub n: u32,
    pub coeffs: SymPoly,
}

impl SeriesF {
    pub fn one(r: usize, n: u32) -> Self {
        SeriesF {
            name: "1".into(),
            n,
            coeffs: SymPoly::one(r),
        }
    }

    /// `Σ_j a_j |u|^j`, truncated at degree `n`.
    pub fn from_p1_series(name: &str, r: usize, n: u32, a: &[BigRat]) -> Result<Self> {
        let p1 = power_sum_p1(r);
        let mut pow = SymPoly::one(r);
        let mut acc = SymPoly::zero(r);
        for (j, aj) in a.iter().enumerate().take(n as usize + 1) {
            if j > 0 {
                pow = pow.mul(&p1)?;
            }
            acc.add_scaled(&pow, &DRat::from_bigrat(aj.clone()));
        }
        Ok(SeriesF {
            name: name.into(),
            n,
            coeffs: acc,
        })
    }

    pub fn r(&self) -> usize {
        self.coeffs.r()
    }
}

fn factorial(n: u32) -> BigRat {
    (1..=n as i64).map(int).fold(int(1), |a, b| a * b)
}

/// `B_0, …, B_n` from inverting `Σ_j t^j / (j+1)!`.
pub fn bernoulli_numbers(n: u32) -> Vec<BigRat> {
    // b_k = B_k / k!, with (Σ b_k t^k)(Σ t^j/(j+1)!) = 1
    let e: Vec<BigRat> = (0..=n).map(|j| factorial(j + 1).recip()).collect();
    let mut b: Vec<BigRat> = vec![int(1)];
    for k in 1..=n as usize {
        let s: BigRat = (1..=k).map(|j| &e[j] * &b[k - j]).sum();
        b.push(-s);
    }
    b.into_iter()
        .enumerate()
        .map(|(k, bk)| bk * factorial(k as u32))
        .collect()
}

/// `F(u) = |u| / (e^{|u|} - 1) = Σ B_j |u|^j / j!`, truncated at `n`.
pub fn bernoulli_series(r: usize, n: u32) -> Result<SeriesF> {
    let a: Vec<BigRat> = bernoulli_numbers(n)
        .into_iter()
        .enumerate()
        .map(|(j, bj)| bj / factorial(j as u32))
        .collect();
    SeriesF::from_p1_series("bernoulli", r, n, &a)
}

/// `e^{|z|}` truncated at degree `n`.
pub fn exp_p1(r: usize, n: u32) -> Result<SymPoly> {
    let a: Vec<BigRat> = (0..=n).map(|j| factorial(j).recip()).collect();
    Ok(SeriesF::from_p1_series("exp", r, n, &a)?.coeffs)
}

/// `Σ_{|m|≤n} Φ_m(z) Ψ_m(u)`.
pub fn kernel_0f0(ctx: &Context, n: u32) -> Result<KernelTrunc> {
    let mut terms = BTreeMap::new();
    for m in partitions_up_to(n, ctx.r()) {
        let phi = jack_phi(ctx, &m)?;
        terms.insert(m, phi);
    }
    Ok(KernelTrunc {
        r: ctx.r(),
        n,
        terms,
    })
}

fn add_into(map: &mut Bigraded, key: Partition, poly: &SymPoly, c: &DRat) {
    let r = poly.r();
    let e = map.entry(key).or_insert_with(|| SymPoly::zero(r));
    e.add_scaled(poly, c);
}

fn prune(map: &mut Bigraded) {
    map.retain(|_, v| !v.is_zero());
}

/// Rewrites `Σ_m c_m(z) Ψ_m(u)` in the monomial basis of `u`.
pub fn psi_to_m_basis(ctx: &Context, series: &Bigraded) -> Result<Bigraded> {
    let mut out = Bigraded::new();
    for (m, z) in series {
        let psi = jack_psi(ctx, m)?;
        for (lambda, c) in psi.terms() {
            add_into(&mut out, lambda.clone(), z, c);
        }
    }
    prune(&mut out);
    Ok(out)
}

/// The kernel in the monomial basis of `u`.
pub fn kernel_in_m_basis(ctx: &Context, n: u32) -> Result<Bigraded> {
    psi_to_m_basis(ctx, &kernel_0f0(ctx, n)?.terms)
}

fn m_product(ctx: &Context, a: &Partition, b: &Partition) -> Result<Arc<SymPoly>> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    ctx.m_products.get_or_try(&key, || {
        Ok(Arc::new(
            SymPoly::monomial(&key.0).mul(&SymPoly::monomial(&key.1))?,
        ))
    })
}

/// Product with a series in `u` alone, truncated at `u`-degree `n`.
pub fn times_u_series(ctx: &Context, g: &Bigraded, f: &SymPoly, n: u32) -> Result<Bigraded> {
    let mut out = Bigraded::new();
    for (lambda, z) in g {
        for (mu, c) in f.terms() {
            if lambda.weight() + mu.weight() > n {
                continue;
            }
            for (nu, e) in m_product(ctx, lambda, mu)?.terms() {
                add_into(&mut out, nu.clone(), z, &(e * c));
            }
        }
    }
    prune(&mut out);
    Ok(out)
}

/// Re-expands a series given in the monomial basis of `u` against `{Ψ_x(u)}`.
pub fn expand_in_psi(ctx: &Context, series: &Bigraded, n: u32) -> Result<Bigraded> {
    let mut g: Bigraded = series
        .iter()
        .filter(|(k, v)| k.weight() <= n && !v.is_zero())
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let mut out = Bigraded::new();
    while let Some((lambda, a)) = g.pop_last() {
        // Σ a P_λ = Σ a N_λ Ψ_λ
        let p = jack_p(ctx, &lambda)?;
        for (kappa, c) in p.terms() {
            if kappa != &lambda {
                add_into(&mut g, kappa.clone(), &a, &-c);
            }
        }
        prune(&mut g);
        let norm = ijack_norm(ctx, &lambda).map_err(|e| match e {
            Error::ZeroNormalization(k) => Error::SingularVanishingSystem(k),
            other => other,
        })?;
        out.insert(lambda, a.scale(&norm));
    }
    Ok(out)
}

/// The family `{f_m}_{|m|≤n}` with `0F0(z,u) F(u) = Σ f_m(z) Ψ_m(u)`.
pub fn binomial_family(ctx: &Context, f: &SeriesF, n: u32) -> Result<Bigraded> {
    if f.r() != ctx.r() {
        return Err(Error::ArityMismatch {
            left: ctx.r(),
            right: f.r(),
        });
    }
    if f.n < n {
        return Err(Error::InvalidInput(format!(
            "series truncated at {} but degree {n} requested",
            f.n
        )));
    }
    let g = times_u_series(ctx, &kernel_in_m_basis(ctx, n)?, &f.coeffs, n)?;
    let mut fam = expand_in_psi(ctx, &g, n)?;
    for m in partitions_up_to(n, ctx.r()) {
        fam.entry(m).or_insert_with(|| SymPoly::zero(ctx.r()));
    }
    Ok(fam)
}

/// The multivariate Bernoulli polynomial `B_m(z)`.
pub fn bernoulli_poly(ctx: &Context, m: &Partition) -> Result<SymPoly> {
    check_rank(ctx, m)?;
    let n = m.weight();
    let fam = binomial_family(ctx, &bernoulli_series(ctx.r(), n)?, n)?;
    Ok(fam[m].clone())
}

fn params(ctx: &Context, rest: String) -> String {
    format!("r={} d={} {rest}", ctx.r(), ctx.mode().label())
}

/// `e^{|z|} Φ_k` and `e^{|z|} Ψ_k` against `Σ_{k⊆x} (…) Ψ_x`, to degree `n`.
pub fn verify_exp_binomial(ctx: &Context, k: &Partition, n: u32) -> Result<VerdictReport> {
    check_rank(ctx, k)?;
    let mut b = VerdictBuilder::new("exp-binomial", params(ctx, format!("k={k} N={n}")));
    let e = exp_p1(ctx.r(), n)?;
    let lhs_phi = e.mul(&jack_phi(ctx, k)?)?.truncate(n);
    let lhs_psi = e.mul(&jack_psi(ctx, k)?)?.truncate(n);
    let inv_one = p_at_one(ctx, k)?.inv()?;
    let mut rhs_phi = SymPoly::zero(ctx.r());
    let mut rhs_psi = SymPoly::zero(ctx.r());
    for x in partitions_up_to(n, ctx.r()) {
        if !k.includes_in(&x)? {
            continue;
        }
        let xv = to_drats(&x.as_vector());
        let psi_x = jack_psi(ctx, &x)?;
        rhs_phi.add_scaled(&psi_x, &(&ijack_eval_shift(ctx, k, &xv)? * &inv_one));
        rhs_psi.add_scaled(&psi_x, &binom_coeff(ctx, k, &xv)?);
    }
    b.label("Phi");
    b.sym(None, &lhs_phi, &rhs_phi);
    b.label("Psi");
    b.sym(None, &lhs_psi, &rhs_psi);
    Ok(b.finish())
}

/// `(d/2)^l [(ad|∂z|)^l / l! H_{r,l}] 0F0 = 0F0 e_l(u)`, compared in the
/// monomial basis of `u` up to degree `n`.
pub fn verify_intertwine(ctx: &Context, l: usize, n: u32) -> Result<VerdictReport> {
    let r = ctx.r();
    let mut b = VerdictBuilder::new("kernel-intertwine", params(ctx, format!("l={l} N={n}")));
    let kernel = kernel_0f0(ctx, n)?;
    let scale = ctx.half_d().pow(l as u32);
    let mut lhs_psi = Bigraded::new();
    for (m, phi) in &kernel.terms {
        let img = twisted_component(ctx, Twist::Falling, l, l, phi)?.scale(&scale);
        lhs_psi.insert(m.clone(), img);
    }
    let lhs = psi_to_m_basis(ctx, &lhs_psi)?;
    let k_m = psi_to_m_basis(ctx, &kernel.terms)?;
    let rhs = times_u_series(ctx, &k_m, &elementary_e(r, l)?, n)?;
    for u in partitions_up_to(n, r) {
        let zero = SymPoly::zero(r);
        let a = lhs.get(&u).unwrap_or(&zero);
        let c = rhs.get(&u).unwrap_or(&zero);
        b.label(format!("u-partition {u}"));
        b.sym(None, a, c);
    }
    Ok(b.finish())
}

/// `e_l Ψ_m = Σ_{m+ε_J∈P} Ψ_{m+ε_J} A_{-,J}(m+ε_J) ∏_{j∈J}(m_j + 1 + (d/2)(r-j))`.
pub fn verify_psi_pieri(ctx: &Context, m: &Partition, l: usize) -> Result<VerdictReport> {
    check_rank(ctx, m)?;
    let r = ctx.r();
    let mut b = VerdictBuilder::new("psi-pieri", params(ctx, format!("m={m} l={l}")));
    let mv = to_drats(&m.as_vector());
    let lhs = elementary_e(r, l)?.mul(&jack_psi(ctx, m)?)?;
    let mut rhs = SymPoly::zero(r);
    for set_j in subsets_of_size(r, l) {
        if let Some(mj) = m.add_boxes(&set_j, Sign::Plus) {
            let c = &coeff_a(ctx, Sign::Minus, &set_j, &to_drats(&mj.as_vector()))?
                * &box_factor(ctx, &set_j, &mv, 1);
            rhs.add_scaled(&jack_psi(ctx, &mj)?, &c);
        }
    }
    b.sym(None, &lhs, &rhs);
    Ok(b.finish())
}

/// `f_m(1 + z) = Σ_{k⊆m} binom(k, m) f_k(z)` for a precomputed family.
pub fn verify_binomial_shift(
    ctx: &Context,
    series_name: &str,
    family: &Bigraded,
    m: &Partition,
) -> Result<VerdictReport> {
    check_rank(ctx, m)?;
    let mut b = VerdictBuilder::new(
        "binomial-shift",
        params(ctx, format!("F={series_name} m={m}")),
    );
    let fm = family
        .get(m)
        .ok_or_else(|| Error::InvalidInput(format!("family does not contain {m}")))?;
    let lhs = fm.shift_by_ones()?;
    let mv = to_drats(&m.as_vector());
    let mut rhs = SymPoly::zero(ctx.r());
    for k in partitions_up_to(m.weight(), ctx.r()) {
        if k.includes_in(m)? {
            rhs.add_scaled(&family[&k], &binom_coeff(ctx, &k, &mv)?);
        }
    }
    b.sym(None, &lhs, &rhs);
    Ok(b.finish())
}

/// `(d/2)^l [(ad|∂z|)^l / l! H_{r,l}] f_m = Σ_{m-ε_J∈P} f_{m-ε_J} A_{-,J}(m) ∏_{j∈J}(m_j + (d/2)(r-j))`.
pub fn verify_twisted_pieri_binomial(
    ctx: &Context,
    series_name: &str,
    family: &Bigraded,
    m: &Partition,
    l: usize,
) -> Result<VerdictReport> {
    check_rank(ctx, m)?;
    let r = ctx.r();
    let mut b = VerdictBuilder::new(
        "binomial-twisted",
        params(ctx, format!("F={series_name} m={m} l={l}")),
    );
    let fm = family
        .get(m)
        .ok_or_else(|| Error::InvalidInput(format!("family does not contain {m}")))?;
    let lhs = twisted_component(ctx, Twist::Falling, l, l, fm)?.scale(&ctx.half_d().pow(l as u32));
    let mv = to_drats(&m.as_vector());
    let mut rhs = SymPoly::zero(r);
    for set_j in subsets_of_size(r, l) {
        if let Some(mj) = m.add_boxes(&set_j, Sign::Minus) {
            let c = &coeff_a(ctx, Sign::Minus, &set_j, &mv)? * &box_factor(ctx, &set_j, &mv, 0);
            rhs.add_scaled(&family[&mj], &c);
        }
    }
    b.sym(None, &lhs, &rhs);
    Ok(b.finish())
}
