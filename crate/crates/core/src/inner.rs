//! The scalar product `(f, g)_{q,t}` at `t = q^k` as the constant term of a
//! finite kernel, with adjoint, Hermitian and level-shift checks.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{sum_coeffs, CoeffField, LaurentPoly, Parity, ScalarSpec};
use crate::error::{Error, Result};
use crate::macdonald::a_rho;
use crate::ops::{apply_big_y, apply_big_y_inv, apply_t, apply_t_inv, apply_tpi, apply_tpi_inv};
use crate::weyl::poincare_w0;

/// The weight `∏_{i<j} (x_i/x_j; q)_k (q x_j/x_i; q)_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelJ {
    pub n: usize,
    pub k: u32,
    pub poly: LaurentPoly,
}

pub fn kernel(n: usize, k: u32) -> KernelJ {
    let mut poly = LaurentPoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let mut ratio = vec![0; n];
            ratio[i - 1] = 1;
            ratio[j - 1] = -1;
            let inv: Vec<i32> = ratio.iter().map(|x| -x).collect();
            for r in 0..k as i64 {
                poly = &poly * &(&LaurentPoly::one(n) - &LaurentPoly::x_pow(&ratio).scale_qv(r, 0));
            }
            for r in 1..=k as i64 {
                poly = &poly * &(&LaurentPoly::one(n) - &LaurentPoly::x_pow(&inv).scale_qv(r, 0));
            }
        }
    }
    KernelJ { n, k, poly }
}

/// `ct(a b)` without forming the full product.
pub fn ct_of_product(a: &LaurentPoly, b: &LaurentPoly) -> CoeffField {
    let parts: Vec<CoeffField> = a
        .terms()
        .filter_map(|(e, c)| {
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            let d = b.coeff(&neg);
            (!d.is_zero()).then(|| c * &d)
        })
        .collect();
    sum_coeffs(parts)
}

fn check_n(f: &LaurentPoly, n: usize) -> Result<()> {
    if f.n() != n {
        return Err(Error::Dimension(n, f.n()));
    }
    Ok(())
}

/// `(f, g)_{q,q^k} = ct(f bar(g) J)` with `t = q^k` substituted after
/// conjugation.
pub fn inner(f: &LaurentPoly, g: &LaurentPoly, n: usize, k: u32) -> Result<CoeffField> {
    inner_with(f, g, &kernel(n, k))
}

/// [`inner`] against a precomputed kernel.
pub fn inner_with(f: &LaurentPoly, g: &LaurentPoly, j: &KernelJ) -> Result<CoeffField> {
    check_n(f, j.n)?;
    check_n(g, j.n)?;
    let prod = (f * &g.bar()).specialize(ScalarSpec::TPowQ(j.k))?;
    Ok(ct_of_product(&prod, &j.poly))
}

/// `<f, g> = (1/W_0(t)) (f, g^t)` with `g^t` inverting `q, t` on coefficients.
pub fn inner_sym(f: &LaurentPoly, g: &LaurentPoly, n: usize, k: u32) -> Result<CoeffField> {
    if !f.is_symmetric() || !g.is_symmetric() {
        return Err(Error::Argument("inner_sym needs symmetric arguments".into()));
    }
    let w0 = poincare_w0(n).specialize(ScalarSpec::TPowQ(k))?;
    inner(f, &g.bar_coeffs(), n, k)?.div_ref(&w0)
}

/// Outcome of a batch of exact identity checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Power of `t^{1/2}` that makes both sides of an adjoint check even in `t^{1/2}`.
fn odd_shift(a: &LaurentPoly, b: &LaurentPoly) -> Result<i64> {
    let odd = |p: Parity| match p {
        Parity::Odd => Ok(true),
        Parity::Even | Parity::Zero => Ok(false),
        Parity::Mixed => Err(Error::Parity("mixed parity in t^(1/2)".into())),
    };
    Ok(if odd(a.parity())? || odd(b.parity())? { 1 } else { 0 })
}

/// Operators with a known adjoint for the scalar product.
#[derive(Clone, Copy, Debug)]
enum AdjointOp {
    X(usize),
    T(usize),
    Pi,
    Y(usize),
}

impl AdjointOp {
    fn name(self) -> String {
        match self {
            AdjointOp::X(i) => format!("x_{i}"),
            AdjointOp::T(i) => format!("T_{i}"),
            AdjointOp::Pi => "T_pi".into(),
            AdjointOp::Y(i) => format!("Y_{i}"),
        }
    }

    fn apply(self, f: &LaurentPoly) -> Result<LaurentPoly> {
        match self {
            AdjointOp::X(i) => Ok(&LaurentPoly::x(f.n(), i) * f),
            AdjointOp::T(i) => apply_t(i, f),
            AdjointOp::Pi => apply_tpi(f),
            AdjointOp::Y(i) => apply_big_y(i, f),
        }
    }

    fn apply_adjoint(self, f: &LaurentPoly) -> Result<LaurentPoly> {
        match self {
            AdjointOp::X(i) => {
                let mut e = vec![0; f.n()];
                e[i - 1] = -1;
                Ok(&LaurentPoly::x_pow(&e) * f)
            }
            AdjointOp::T(i) => apply_t_inv(i, f),
            AdjointOp::Pi => apply_tpi_inv(f),
            AdjointOp::Y(i) => apply_big_y_inv(i, f),
        }
    }
}

/// `(M f, g) = (f, M^* g)`, scaling by `t^{±1/2}` when `M` flips parity.
fn adjoint_holds(m: AdjointOp, f: &LaurentPoly, g: &LaurentPoly, j: &KernelJ) -> Result<bool> {
    let mf = m.apply(f)?;
    let mg = m.apply_adjoint(g)?;
    let s = odd_shift(&mf, &mg)?;
    Ok(inner_with(&mf.scale_qv(0, s), g, j)? == inner_with(f, &mg.scale_qv(0, -s), j)?)
}

/// Checks `x_i^* = x_i^{-1}`, `T_i^* = T_i^{-1}`, `T_π^* = T_π^{-1}` and
/// `Y_i^* = Y_i^{-1}` on every ordered pair from `sample`.
pub fn verify_adjoints(n: usize, k: u32, sample: &[LaurentPoly]) -> Result<Report> {
    let j = kernel(n, k);
    let ops: Vec<AdjointOp> = (1..=n)
        .map(AdjointOp::X)
        .chain((1..n).map(AdjointOp::T))
        .chain(std::iter::once(AdjointOp::Pi))
        .chain((1..=n).map(AdjointOp::Y))
        .collect();
    let mut cases = Vec::new();
    for &m in &ops {
        for (a, f) in sample.iter().enumerate() {
            for (b, g) in sample.iter().enumerate() {
                cases.push((m, a, f, b, g));
            }
        }
    }
    let results: Vec<Result<(bool, String)>> = cases
        .par_iter()
        .map(|&(m, a, f, b, g)| {
            let name = m.name();
            let ok = adjoint_holds(m, f, g, &j)?;
            Ok((ok, format!("({name} f{a}, f{b}) != (f{a}, {name}^* f{b}) at n = {n}, k = {k}")))
        })
        .collect();
    let mut report = Report::default();
    for r in results {
        let (ok, msg) = r?;
        report.record(ok, || msg);
    }
    Ok(report)
}

/// Checks `(g, f)/(1, 1) = bar[(f, g)/(1, 1)]` and sesquilinearity in both
/// arguments for every ordered pair and scalar.
pub fn verify_hermitian(n: usize, k: u32, sample: &[LaurentPoly], scalars: &[CoeffField]) -> Result<Report> {
    let j = kernel(n, k);
    let one = LaurentPoly::one(n);
    let norm1 = inner_with(&one, &one, &j)?;
    let mut report = Report::default();
    let mut values = BTreeMap::new();
    for (a, f) in sample.iter().enumerate() {
        for (b, g) in sample.iter().enumerate() {
            values.insert((a, b), inner_with(f, g, &j)?);
        }
    }
    for (a, f) in sample.iter().enumerate() {
        for (b, g) in sample.iter().enumerate() {
            let fg = values[&(a, b)].div_ref(&norm1)?;
            let gf = values[&(b, a)].div_ref(&norm1)?;
            report.record(gf == fg.bar_q(), || format!("Hermitian symmetry fails for (f{a}, f{b})"));
            for c in scalars {
                let ck = c.specialize(ScalarSpec::TPowQ(k))?;
                let left = inner_with(&f.scale(c), g, &j)?;
                report.record(left == &ck * &values[&(a, b)], || {
                    format!("(c f{a}, f{b}) != c (f{a}, f{b}) for c = {}", c.render())
                });
                let right = inner_with(f, &g.scale(c), &j)?;
                report.record(right == &ck.bar_q() * &values[&(a, b)], || {
                    format!("(f{a}, c f{b}) != bar(c) (f{a}, f{b}) for c = {}", c.render())
                });
            }
        }
    }
    Ok(report)
}

/// Which Poincare factor relates the levels `k` and `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelShiftFactor {
    /// `W_0(q^{k+1}) / W_0(q^{-k})`.
    InverseT,
    /// `W_0(q^{k+1}) / W_0(q^k)`.
    PlainT,
}

/// `(f, g)_{q,q^{k+1}} = c_k (A_rho f, A_rho g)_{q,q^k}` with `A_rho` at `t = q^k`.
pub fn verify_level_shift(
    f: &LaurentPoly,
    g: &LaurentPoly,
    n: usize,
    k: u32,
    factor: LevelShiftFactor,
) -> Result<Report> {
    if !f.is_symmetric() || !g.is_symmetric() {
        return Err(Error::Argument("level shift needs symmetric arguments".into()));
    }
    let spec = |c: &CoeffField, e: u32| c.specialize(ScalarSpec::TPowQ(e));
    let w0 = poincare_w0(n);
    let top = spec(&w0, k + 1)?;
    let bottom = match factor {
        LevelShiftFactor::InverseT => spec(&w0, k)?.bar_q(),
        LevelShiftFactor::PlainT => spec(&w0, k)?,
    };
    let ar = a_rho(n).specialize(ScalarSpec::TPowQ(k))?;
    let lhs = inner(f, g, n, k + 1)?;
    let rhs = top.div_ref(&bottom)? * inner(&(&ar * f), &(&ar * g), n, k)?;
    let mut report = Report::default();
    report.record(lhs == rhs, || format!("level shift k = {k}: {} != {}", lhs.render(), rhs.render()));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfunction::ct_closed;
    use crate::macdonald::{e_poly, EPolyCache};

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::x(n, i)
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(2, 0).poly, LaurentPoly::one(2));
        let expect = &(&LaurentPoly::one(2) - &LaurentPoly::x_pow(&[1, -1]))
            * &(&LaurentPoly::one(2) - &LaurentPoly::x_pow(&[-1, 1]).scale_qv(1, 0));
        assert_eq!(kernel(2, 1).poly, expect);
        for (n, k) in [(2, 1), (2, 2), (2, 3), (3, 1)] {
            assert_eq!(kernel(n, k).poly.ct(), ct_closed(n, k).unwrap());
        }
    }

    #[test]
    fn inner_examples() {
        let one = LaurentPoly::one(2);
        assert_eq!(inner(&one, &one, 2, 1).unwrap(), CoeffField::one() + CoeffField::q());
        let cache = EPolyCache::new();
        let e10 = e_poly(&[1, 0], &cache).unwrap();
        let e01 = e_poly(&[0, 1], &cache).unwrap();
        assert!(inner(&e10, &e01, 2, 1).unwrap().is_zero());
        assert!(inner(&x(1, 1), &x(1, 1), 1, 3).unwrap().is_one());
        assert!(inner_sym(&one, &one, 2, 1).unwrap().is_one());
        let m = &x(2, 1) + &x(2, 2);
        let direct = inner(&m, &m, 2, 1).unwrap().div_ref(&(CoeffField::one() + CoeffField::q())).unwrap();
        assert_eq!(inner_sym(&m, &m, 2, 1).unwrap(), direct);
        assert!(inner_sym(&m, &LaurentPoly::zero(2), 2, 1).unwrap().is_zero());
        assert!(inner_sym(&x(2, 1), &m, 2, 1).is_err());
    }

    #[test]
    fn adjoint_examples() {
        let sample = vec![LaurentPoly::one(2), x(2, 1), x(2, 2), LaurentPoly::x_pow(&[1, -1])];
        for k in [0, 1] {
            let r = verify_adjoints(2, k, &sample).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
        assert!(verify_adjoints(2, 1, &[]).unwrap().passed());
    }

    #[test]
    fn hermitian_examples() {
        let sample = vec![LaurentPoly::one(2), x(2, 1), &x(2, 2) + &x(2, 1).scale_qv(1, 2)];
        let scalars = vec![CoeffField::q(), CoeffField::t() + CoeffField::int(3)];
        let r = verify_hermitian(2, 1, &sample, &scalars).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn level_shift_examples() {
        let one = LaurentPoly::one(2);
        let m = &x(2, 1) + &x(2, 2);
        for k in [0, 1] {
            for f in [&one, &m] {
                let r = verify_level_shift(f, f, 2, k, LevelShiftFactor::InverseT).unwrap();
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
        assert!(verify_level_shift(&one, &LaurentPoly::zero(2), 2, 0, LevelShiftFactor::InverseT).unwrap().passed());
        // W_0(q^k) in place of W_0(q^{-k}) is off by a power of q once k > 0.
        assert!(!verify_level_shift(&one, &one, 2, 1, LevelShiftFactor::PlainT).unwrap().passed());
    }
}
