//! The differential operators acting on symmetric polynomials: `D(z)`, the
//! Sekiguchi family `H_{r,p}` with generating operator `S_r(u; z)`, and their
//! commutator twists by `|∂z|` and `|z|`.

use std::sync::Arc;

use crate::context::{Context, OpKey};
use crate::error::{Error, Result};
use crate::partitions::{complement, power_sum_p1, subsets_of_size, Partition, SymPoly};
use crate::polyring::{vandermonde, MPoly};
use crate::scalars::{int, DRat};

/// Polynomial in the spectral variable `u`; slot `p` holds the coefficient of `u^{r-p}`.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<T> {
    slots: Vec<T>,
}

pub type UPolyS = UPoly<SymPoly>;
pub type UPolyR = UPoly<DRat>;

impl<T> UPoly<T> {
    pub fn from_slots(slots: Vec<T>) -> Self {
        UPoly { slots }
    }

    pub fn slots(&self) -> &[T] {
        &self.slots
    }

    pub fn slot(&self, p: usize) -> &T {
        &self.slots[p]
    }

    pub fn into_slots(self) -> Vec<T> {
        self.slots
    }

    /// The rank `r`, i.e. the nominal degree in `u`.
    pub fn rank(&self) -> usize {
        self.slots.len() - 1
    }
}

impl UPolyR {
    pub fn zero(r: usize) -> Self {
        UPoly {
            slots: vec![DRat::zero(); r + 1],
        }
    }

    /// `c` placed at `u^0`.
    pub fn constant(r: usize, c: DRat) -> Self {
        let mut out = Self::zero(r);
        out.slots[r] = c;
        out
    }

    /// Product of the linear factors `(u + a_i)`, times `lead`.
    pub fn from_roots(r: usize, lead: DRat, shifts: &[DRat]) -> Self {
        assert!(shifts.len() <= r, "degree exceeds rank");
        // ascending coefficients of the product
        let mut asc = vec![lead];
        for a in shifts {
            let mut next = vec![DRat::zero(); asc.len() + 1];
            for (i, c) in asc.iter().enumerate() {
                next[i] += &(c * a);
                next[i + 1] += c;
            }
            asc = next;
        }
        let mut out = Self::zero(r);
        for (pow, c) in asc.into_iter().enumerate() {
            out.slots[r - pow] = c;
        }
        out
    }

    pub fn scale(&self, c: &DRat) -> Self {
        UPoly {
            slots: self.slots.iter().map(|s| s * c).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &UPolyR) {
        for (a, b) in self.slots.iter_mut().zip(&other.slots) {
            *a += b;
        }
    }

    /// Coefficientwise product with a polynomial in `z`.
    pub fn times(&self, f: &SymPoly) -> UPolyS {
        UPoly {
            slots: self.slots.iter().map(|c| f.scale(c)).collect(),
        }
    }
}

impl UPolyS {
    pub fn zero(r: usize, rz: usize) -> Self {
        UPoly {
            slots: vec![SymPoly::zero(rz); r + 1],
        }
    }

    pub fn add_assign(&mut self, other: &UPolyS) {
        for (a, b) in self.slots.iter_mut().zip(&other.slots) {
            a.add_scaled(b, &DRat::one());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(SymPoly::is_zero)
    }
}

/// `Σ z_i ∂_i`.
pub fn euler(f: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero(f.r());
    for (k, c) in f.terms() {
        out.add_term(k.clone(), &c.scale(&int(k.weight() as i64)));
    }
    out
}

/// `|∂z| = Σ ∂_j`.
pub fn dsum(f: &SymPoly) -> Result<SymPoly> {
    let g = f.expand();
    let mut acc = MPoly::zero(f.r());
    for j in 0..f.r() {
        acc = acc.add(&g.diff(j)?)?;
    }
    SymPoly::collect(&acc)
}

/// Multiplication by `|z| = z_1 + … + z_r`.
pub fn zmul(f: &SymPoly) -> Result<SymPoly> {
    SymPoly::collect(&f.expand().mul(&power_sum_p1(f.r()).expand())?)
}

fn check_arity(ctx: &Context, f: &SymPoly) -> Result<()> {
    if f.r() != ctx.r() {
        return Err(Error::ArityMismatch {
            left: ctx.r(),
            right: f.r(),
        });
    }
    Ok(())
}

/// Extends a per-basis-element image linearly, memoizing each image.
fn linear(
    ctx: &Context,
    key: OpKey,
    f: &SymPoly,
    on_basis: impl Fn(&Partition) -> Result<SymPoly>,
) -> Result<SymPoly> {
    check_arity(ctx, f)?;
    let mut out = SymPoly::zero(ctx.r());
    for (k, c) in f.terms() {
        let img = ctx
            .ops
            .get_or_try(&(key, k.clone()), || on_basis(k).map(Arc::new))?;
        out.add_scaled(&img, c);
    }
    Ok(out)
}

/// `D(z) f`.
pub fn apply_d(ctx: &Context, f: &SymPoly) -> Result<SymPoly> {
    linear(ctx, OpKey::D, f, |k| d_on_basis(ctx, k))
}

fn d_on_basis(ctx: &Context, k: &Partition) -> Result<SymPoly> {
    let r = ctx.r();
    let g = SymPoly::monomial(k).expand();
    let mut second = MPoly::zero(r);
    let mut first = Vec::with_capacity(r);
    for j in 0..r {
        let zj2 = MPoly::from_terms(r, [(unit(r, j, 2), DRat::one())]);
        let dj = g.diff(j)?;
        second = second.add(&zj2.mul(&dj.diff(j)?)?)?;
        first.push(zj2.mul(&dj)?);
    }
    let mut cross = MPoly::zero(r);
    for j in 0..r {
        for l in j + 1..r {
            let num = first[j].sub(&first[l])?;
            let den = MPoly::var(r, j)?.sub(&MPoly::var(r, l)?)?;
            cross = cross.add(&num.exact_div(&den)?)?;
        }
    }
    SymPoly::collect(&second.add(&cross.scale(ctx.d()))?)
}

fn unit(r: usize, j: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; r];
    v[j] = e;
    v
}

/// `(∏_{i∈I} z_i ∂_i) Δ`.
fn delta_image(ctx: &Context, subset: &[usize]) -> Arc<MPoly> {
    if let Some(v) = ctx.delta_images.get(&subset.to_vec()) {
        return v;
    }
    let mut p = vandermonde(ctx.r());
    for &i in subset {
        p = p.euler_component(i);
    }
    ctx.delta_images.insert(subset.to_vec(), Arc::new(p))
}

/// `H_{r,p} f`.
pub fn apply_h(ctx: &Context, p: usize, f: &SymPoly) -> Result<SymPoly> {
    if p > ctx.r() {
        return Err(Error::IndexOutOfRange {
            index: p,
            max: ctx.r(),
        });
    }
    if p == 0 {
        check_arity(ctx, f)?;
        return Ok(f.clone());
    }
    linear(ctx, OpKey::H(p), f, |k| h_on_basis(ctx, p, k))
}

fn one_based(s: &[usize]) -> String {
    let v: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn h_on_basis(ctx: &Context, p: usize, k: &Partition) -> Result<SymPoly> {
    let r = ctx.r();
    let g = SymPoly::monomial(k).expand();
    let two_over_d = ctx.two_over_d();
    let mut acc = MPoly::zero(r);
    for l in 0..=p {
        let pref = two_over_d.pow((p - l) as u32);
        for set_i in subsets_of_size(r, l) {
            let di = delta_image(ctx, &set_i);
            let rest = complement(&set_i, r);
            let mut inner = MPoly::zero(r);
            for jj in subsets_of_size(rest.len(), p - l) {
                let set_j: Vec<usize> = jj.iter().map(|&t| rest[t]).collect();
                let w = g.weighted(|e| set_j.iter().map(|&j| e[j] as i64).product());
                if ctx.tracing() {
                    let term = di.mul(&w)?;
                    ctx.trace(|| {
                        format!(
                            "H[r={r},p={p}] m_{k} l={l} I={} J={} prefactor={pref} degree={}",
                            one_based(&set_i),
                            one_based(&set_j),
                            term.total_degree().map_or("-".into(), |d| d.to_string())
                        )
                    });
                }
                inner = inner.add(&w)?;
            }
            if !inner.is_zero() {
                acc = acc.add(&di.mul(&inner)?.scale(&pref))?;
            }
        }
    }
    SymPoly::collect(&acc.exact_div(&vandermonde(r))?)
}

/// `S_r(u; z) f` as the list `[H_{r,0} f, …, H_{r,r} f]`.
pub fn apply_s(ctx: &Context, f: &SymPoly) -> Result<UPolyS> {
    let slots = (0..=ctx.r())
        .map(|p| apply_h(ctx, p, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(UPoly::from_slots(slots))
}

/// Which commutator twist to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `(ad|∂z|)^l / l!`.
    Falling,
    /// `(-ad|z|)^l / l!`.
    Raising,
}

impl Twist {
    fn step(self, f: &SymPoly) -> Result<SymPoly> {
        match self {
            Twist::Falling => dsum(f),
            Twist::Raising => zmul(f),
        }
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn binomial(n: usize, k: usize) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The twisted operator applied to `f`, restricted to the given slots.
fn twisted_slots(
    ctx: &Context,
    twist: Twist,
    l: usize,
    f: &SymPoly,
    slots: &[usize],
) -> Result<Vec<SymPoly>> {
    check_arity(ctx, f)?;
    let r = ctx.r();
    let mut out = vec![SymPoly::zero(r); slots.len()];
    // X^j f for j = 0..=l
    let mut powers = vec![f.clone()];
    for j in 0..l {
        let next = twist.step(&powers[j])?;
        powers.push(next);
    }
    let sign_l = if twist == Twist::Raising && l % 2 == 1 {
        -1
    } else {
        1
    };
    let denom = int(factorial(l));
    for (j, fj) in powers.iter().enumerate() {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        let c = DRat::from_bigrat(int(sign * sign_l * binomial(l, j)) / &denom);
        if fj.is_zero() {
            continue;
        }
        for (slot, &p) in out.iter_mut().zip(slots) {
            let mut h = apply_h(ctx, p, fj)?;
            for _ in 0..l - j {
                h = twist.step(&h)?;
            }
            slot.add_scaled(&h, &c);
        }
    }
    Ok(out)
}

/// `(ad|∂z|)^l / l! · S_r(u; z)` applied to `f`.
pub fn twisted_falling(ctx: &Context, l: usize, f: &SymPoly) -> Result<UPolyS> {
    let slots: Vec<usize> = (0..=ctx.r()).collect();
    Ok(UPoly::from_slots(twisted_slots(
        ctx,
        Twist::Falling,
        l,
        f,
        &slots,
    )?))
}

/// `(-ad|z|)^l / l! · S_r(u; z)` applied to `f`.
pub fn twisted_raising(ctx: &Context, l: usize, f: &SymPoly) -> Result<UPolyS> {
    let slots: Vec<usize> = (0..=ctx.r()).collect();
    Ok(UPoly::from_slots(twisted_slots(
        ctx,
        Twist::Raising,
        l,
        f,
        &slots,
    )?))
}

/// The single component `(ad X)^l / l! · H_{r,p}` applied to `f`.
pub fn twisted_component(
    ctx: &Context,
    twist: Twist,
    l: usize,
    p: usize,
    f: &SymPoly,
) -> Result<SymPoly> {
    if p > ctx.r() {
        return Err(Error::IndexOutOfRange {
            index: p,
            max: ctx.r(),
        });
    }
    Ok(twisted_slots(ctx, twist, l, f, &[p])?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::DPoly;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn m(v: &[u32]) -> SymPoly {
        SymPoly::monomial(&p(v))
    }

    fn dpoly(c: &[i64]) -> DRat {
        DRat::from_dpoly(DPoly::from_ints(c))
    }

    #[test]
    fn d_on_small_basis() {
        let ctx = Context::symbolic(2).unwrap();
        let got = apply_d(&ctx, &m(&[2, 0])).unwrap();
        let want = SymPoly::from_terms(
            2,
            [(p(&[2, 0]), dpoly(&[2, 2])), (p(&[1, 1]), dpoly(&[0, 2]))],
        );
        assert_eq!(got, want);
        assert_eq!(
            apply_d(&ctx, &m(&[1, 1])).unwrap(),
            m(&[1, 1]).scale(&DRat::d())
        );
        assert!(apply_d(&ctx, &SymPoly::one(2)).unwrap().is_zero());
    }

    #[test]
    fn first_sekiguchi_component_is_shifted_euler() {
        let ctx = Context::symbolic(2).unwrap();
        let four_over_d_plus_one = &ctx.two_over_d().scale(&int(2)) + &DRat::one();
        assert_eq!(
            apply_h(&ctx, 1, &m(&[1, 1])).unwrap(),
            m(&[1, 1]).scale(&four_over_d_plus_one)
        );
        assert_eq!(apply_h(&ctx, 1, &SymPoly::one(2)).unwrap(), SymPoly::one(2));
        assert_eq!(apply_h(&ctx, 0, &m(&[2, 0])).unwrap(), m(&[2, 0]));
        assert!(matches!(
            apply_h(&ctx, 3, &m(&[2, 0])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn rank_one_s_on_constant() {
        let ctx = Context::symbolic(1).unwrap();
        let s = apply_s(&ctx, &SymPoly::one(1)).unwrap();
        assert_eq!(s.slot(0), &SymPoly::one(1));
        assert!(s.slot(1).is_zero());
    }

    #[test]
    fn elementary_helpers() {
        assert_eq!(
            euler(&SymPoly::monomial(&p(&[2, 1, 0]))),
            SymPoly::monomial(&p(&[2, 1, 0])).scale(&DRat::from_int(3))
        );
        assert_eq!(dsum(&m(&[1, 1])).unwrap(), m(&[1, 0]));
        assert_eq!(zmul(&SymPoly::one(2)).unwrap(), m(&[1, 0]));
    }

    #[test]
    fn twisted_examples() {
        let ctx = Context::symbolic(2).unwrap();
        // (ad|∂z|) H_{r,1} = (2/d)|∂z|
        let got = twisted_component(&ctx, Twist::Falling, 1, 1, &m(&[1, 0])).unwrap();
        assert_eq!(got, SymPoly::one(2).scale(&ctx.two_over_d().scale(&int(2))));
        // (d/2)(-ad|z|) H_{r,1} 1 = |z|
        let got = twisted_component(&ctx, Twist::Raising, 1, 1, &SymPoly::one(2)).unwrap();
        assert_eq!(got.scale(&ctx.half_d()), m(&[1, 0]));
        assert!(twisted_falling(&ctx, 3, &m(&[2, 1])).unwrap().is_zero());
        assert!(twisted_raising(&ctx, 3, &m(&[2, 1])).unwrap().is_zero());
        assert_eq!(
            twisted_falling(&ctx, 0, &m(&[2, 1])).unwrap(),
            apply_s(&ctx, &m(&[2, 1])).unwrap()
        );
    }

    #[test]
    fn u_polynomial_from_roots() {
        // (u + 1)(u + 2) at rank 2
        let q = UPolyR::from_roots(2, DRat::one(), &[DRat::from_int(1), DRat::from_int(2)]);
        assert_eq!(
            q.slots(),
            &[DRat::one(), DRat::from_int(3), DRat::from_int(2)]
        );
        let c = UPolyR::from_roots(2, DRat::from_int(5), &[]);
        assert_eq!(c.slots(), &[DRat::zero(), DRat::zero(), DRat::from_int(5)]);
    }
}
