//! Evaluation of `c`-function products at monomial points, principal
//! specializations, hook formulas and norm ratios.

use crate::algebra::{CoeffField, LaurentPoly};
use crate::error::{Error, Result};
use crate::weyl::{
    box_stats, boxes, check_decreasing, inv_t_lambda, inv_u_mu, n_of_lambda, poincare_w0, poincare_wlambda, rho,
    sorted_decreasing, u_mu_arm, v_mu, InversionSet,
};

/// A ring map sending every `Y_i` to a monomial `q^a t^{b/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    /// `ev^t_mu(Y_i) = q^{-mu_i} t^{-(v_mu(i)-1) + (n-1)/2}`.
    TMu(Vec<i32>),
    /// `ev^{t^{-1}}_0(Y_i) = t^{(i-1) - (n-1)/2}`.
    TInvZero(usize),
    /// `ev_{q^lambda t^rho}(Y_i) = q^{lambda_i} t^{n-i}`.
    QLambdaTRho(Vec<i32>),
}

impl EvalPoint {
    pub fn n(&self) -> usize {
        match self {
            EvalPoint::TMu(mu) | EvalPoint::QLambdaTRho(mu) => mu.len(),
            EvalPoint::TInvZero(n) => *n,
        }
    }

    /// Image of `Y_i` as `(q-exponent, v-exponent)`.
    pub fn y(&self, i: usize) -> (i64, i64) {
        let n = self.n() as i64;
        match self {
            EvalPoint::TMu(mu) => crate::ops::y_eigen_exponents(mu, i),
            EvalPoint::TInvZero(_) => (0, 2 * (i as i64 - 1) - (n - 1)),
            EvalPoint::QLambdaTRho(l) => (l[i - 1] as i64, 2 * (n - i as i64)),
        }
    }

    /// Image of `q^l Y_i^{-1} Y_j`.
    fn z(&self, i: usize, j: usize, l: u32) -> (i64, i64) {
        let (qi, vi) = self.y(i);
        let (qj, vj) = self.y(j);
        (l as i64 + qj - qi, vj - vi)
    }
}

/// Which `c`-function is attached to each pair `(i, j, l)`, with
/// `z = q^l Y_i^{-1} Y_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CFactorKind {
    /// `c^Y = (t^{-1/2} - t^{1/2} z^{-1})/(1 - z^{-1})`.
    CY,
    /// `c^{Y^{-1}} = (t^{-1/2} - t^{1/2} z)/(1 - z)`; only for `l = 0`.
    CYInv,
    /// `c^Y c^{Y^{-1}} = (1 - t z)(1 - t^{-1} z)/(1 - z)^2`.
    CYBoth,
    /// `t^{-1/2}(1 - t z)/(1 - z)`, the affine `c^{Y^{-1}}`.
    AffineCYInv,
}

fn one_minus(a: i64, b: i64) -> CoeffField {
    CoeffField::one() - CoeffField::qv(a, b)
}

/// `∏_{(i,j,l)} c(i, j, l)` evaluated at `point`.
pub fn eval_cprod(point: &EvalPoint, kind: CFactorKind, pairs: &InversionSet) -> Result<CoeffField> {
    let n = point.n();
    let mut acc = CoeffField::one();
    for &(i, j, l) in &pairs.pairs {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Index { index: i.max(j), n });
        }
        if kind == CFactorKind::CYInv && l != 0 {
            return Err(Error::Argument("c^{Y^{-1}} takes finite pairs; use the affine kind".into()));
        }
        let (a, b) = point.z(i, j, l);
        let (num, den) = match kind {
            CFactorKind::CY => (CoeffField::qv(0, -1) - CoeffField::qv(-a, 1 - b), one_minus(-a, -b)),
            CFactorKind::CYInv => (CoeffField::qv(0, -1) - CoeffField::qv(a, b + 1), one_minus(a, b)),
            CFactorKind::CYBoth => (one_minus(a, b + 2) * one_minus(a, b - 2), one_minus(a, b).pow(2)),
            CFactorKind::AffineCYInv => (one_minus(a, b + 2).mul_qv(0, -1), one_minus(a, b)),
        };
        if den.is_zero() {
            return Err(Error::Pole(format!("c-factor ({i}, {j}, {l}) has a vanishing denominator")));
        }
        acc = acc * num.div_ref(&den)?;
    }
    Ok(acc)
}

/// `f(1, t, t^2, ..., t^{n-1})`.
pub fn princspec_direct(f: &LaurentPoly) -> CoeffField {
    let parts = f.terms().map(|(e, c)| {
        let b: i64 = e.iter().enumerate().map(|(i, &x)| 2 * i as i64 * x as i64).sum();
        c.mul_qv(0, b)
    });
    crate::algebra::sum_coeffs(parts.collect())
}

fn check_partition(lambda: &[i32]) -> Result<()> {
    check_decreasing(lambda)?;
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::Argument(format!("{lambda:?} has a negative entry")));
    }
    Ok(())
}

fn check_nonnegative(mu: &[i32]) -> Result<()> {
    if mu.iter().any(|&x| x < 0) {
        return Err(Error::Argument(format!("{mu:?} has a negative entry")));
    }
    Ok(())
}

/// `P_lambda(1, t, ..., t^{n-1}) = t^{(n-1)|lambda|/2} ev^{t^{-1}}_0(c^{Y^{-1}}_{t_lambda})`.
pub fn princspec_p_closed(lambda: &[i32]) -> Result<CoeffField> {
    check_partition(lambda)?;
    let n = lambda.len() as i64;
    let size: i64 = lambda.iter().map(|&x| x as i64).sum();
    let c = eval_cprod(&EvalPoint::TInvZero(lambda.len()), CFactorKind::AffineCYInv, &inv_t_lambda(lambda)?)?;
    Ok(c.mul_qv(0, (n - 1) * size))
}

/// `E_mu(1, t, ..., t^{n-1}) = t^{n(lambda)} ∏_{(r,c)} ∏_{i=1}^{u_mu(r,c)}
/// (1 - q^a t^{v_mu(r)-i+1})/(1 - q^a t^{v_mu(r)-i})`, `a = mu_r - c + 1`.
pub fn princspec_e_closed(mu: &[i32]) -> Result<CoeffField> {
    check_nonnegative(mu)?;
    let lambda = sorted_decreasing(mu);
    let v = v_mu(mu);
    let mut acc = CoeffField::qv(0, 2 * n_of_lambda(&lambda));
    for b in boxes(mu) {
        let a = (mu[b.r - 1] - b.c as i32 + 1) as i64;
        let vr = v.apply(b.r) as i64;
        for i in 1..=u_mu_arm(mu, b)? as i64 {
            acc = acc * one_minus(a, 2 * (vr - i + 1)).div_ref(&one_minus(a, 2 * (vr - i)))?;
        }
    }
    Ok(acc)
}

/// The same value as [`princspec_e_closed`], through
/// `t^{(n-1)|lambda|/2} t^{-l(v_mu^{-1})/2} ev^t_0(c^{Y^{-1}}_{u_mu})`.
pub fn princspec_e_cfunction(mu: &[i32]) -> Result<CoeffField> {
    check_nonnegative(mu)?;
    let n = mu.len() as i64;
    let size: i64 = mu.iter().map(|&x| x as i64).sum();
    let c = eval_cprod(&EvalPoint::TMu(vec![0; mu.len()]), CFactorKind::AffineCYInv, &inv_u_mu(mu)?)?;
    let l = v_mu(mu).inverse().length() as i64;
    Ok(c.mul_qv(0, (n - 1) * size - l))
}

/// `t^{n(lambda)} ∏_b (1 - q^{coarm} t^{n - coleg})/(1 - q^{arm} t^{leg + 1})`.
pub fn hook_p(lambda: &[i32]) -> Result<CoeffField> {
    check_partition(lambda)?;
    let n = lambda.len() as i64;
    let mut acc = CoeffField::qv(0, 2 * n_of_lambda(lambda));
    for b in boxes(lambda) {
        let s = box_stats(lambda, b)?;
        let num = one_minus(s.coarm as i64, 2 * (n - s.coleg as i64));
        let den = one_minus(s.arm as i64, 2 * (s.leg as i64 + 1));
        acc = acc * num.div_ref(&den)?;
    }
    Ok(acc)
}

/// `t^{n(lambda)} ∏_{(r,c)} (1 - q^c t^{v_mu(r)})/(1 - q^{mu_r - c + 1} t^{v_mu(r) - u_mu(r,c)})`.
pub fn hook_e(mu: &[i32]) -> Result<CoeffField> {
    check_nonnegative(mu)?;
    let lambda = sorted_decreasing(mu);
    let v = v_mu(mu);
    let mut acc = CoeffField::qv(0, 2 * n_of_lambda(&lambda));
    for b in boxes(mu) {
        let vr = v.apply(b.r) as i64;
        let u = u_mu_arm(mu, b)? as i64;
        let num = one_minus(b.c as i64, 2 * vr);
        let den = one_minus((mu[b.r - 1] - b.c as i32 + 1) as i64, 2 * (vr - u));
        acc = acc * num.div_ref(&den)?;
    }
    Ok(acc)
}

/// `(E_mu, E_mu)/(1, 1) = ev^t_0(c^Y_{u_mu} c^{Y^{-1}}_{u_mu})`.
pub fn norm_ratio_e(mu: &[i32]) -> Result<CoeffField> {
    check_nonnegative(mu)?;
    eval_cprod(&EvalPoint::TMu(vec![0; mu.len()]), CFactorKind::CYBoth, &inv_u_mu(mu)?)
}

/// Inversions `(i, j, 0)`, `i < j`, of the permutation sorting `mu` increasingly.
fn inv_v_mu(mu: &[i32]) -> InversionSet {
    let n = mu.len();
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if mu[i - 1] > mu[j - 1] {
                pairs.push((i, j, 0));
            }
        }
    }
    InversionSet { n, pairs }
}

/// `(P_lambda, P_lambda)/(E_lambda, E_lambda) = (W_0(t)/W_lambda(t)) t^{-l(v_lambda)/2} ev^t_lambda(c^Y_{v_lambda})`.
pub fn norm_ratio_p_over_e(lambda: &[i32]) -> Result<CoeffField> {
    check_decreasing(lambda)?;
    let inv = inv_v_mu(lambda);
    let c = eval_cprod(&EvalPoint::TMu(lambda.to_vec()), CFactorKind::CY, &inv)?;
    let w = poincare_w0(lambda.len()).div_ref(&poincare_wlambda(lambda)?)?;
    Ok((c * w).mul_qv(0, -(inv.len() as i64)))
}

/// `(A_{lambda+rho}, A_{lambda+rho})/(P_{lambda+rho}, P_{lambda+rho}) = ev^t_{lambda+rho}(c^{Y^{-1}}_{w_0}/c^Y_{w_0})`.
pub fn norm_ratio_a_over_p(lambda: &[i32]) -> Result<CoeffField> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    let shifted: Vec<i32> = lambda.iter().zip(rho(n)).map(|(a, b)| a + b).collect();
    let all = inv_v_mu(&shifted);
    let p = EvalPoint::TMu(shifted);
    eval_cprod(&p, CFactorKind::CYInv, &all)?.div_ref(&eval_cprod(&p, CFactorKind::CY, &all)?)
}

/// `(P_lambda, P_lambda)_{q,q^k}` in closed form:
/// `W_0(q^k) ∏_{i<j} ∏_{r=1}^{k-1} (1 - q^{lambda_i-lambda_j+r+k(j-i)})/(1 - q^{lambda_i-lambda_j-r+k(j-i)})`
/// for `k >= 1`, and the orbit size `W_0(1)/W_lambda(1)` of `m_lambda` at `k = 0`.
pub fn norm_p_closed(lambda: &[i32], k: u32) -> Result<CoeffField> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    if k == 0 {
        let w0 = poincare_w0(n).eval_at_one()?.0;
        let wl = poincare_wlambda(lambda)?.eval_at_one()?.0;
        return Ok(CoeffField::int(w0 / wl));
    }
    let k = k as i64;
    let mut acc = poincare_w0(n).specialize(crate::algebra::ScalarSpec::TPowQ(k as u32))?;
    for i in 1..=n {
        for j in i + 1..=n {
            let d = (lambda[i - 1] - lambda[j - 1]) as i64 + k * (j - i) as i64;
            for r in 1..k {
                acc = acc * one_minus(d + r, 0).div_ref(&one_minus(d - r, 0))?;
            }
        }
    }
    Ok(acc)
}

/// Gaussian binomial `[m, k]_q`.
pub fn qbinom(m: u32, k: u32) -> Result<CoeffField> {
    if k > m {
        return Err(Error::Argument(format!("q-binomial [{m}, {k}] out of range")));
    }
    let mut acc = CoeffField::one();
    for i in 1..=k as i64 {
        acc = acc * one_minus(m as i64 - k as i64 + i, 0).div_ref(&one_minus(i, 0))?;
    }
    Ok(acc)
}

/// `∏_{i=2}^n [ik, k]_q`.
pub fn ct_closed(n: usize, k: u32) -> Result<CoeffField> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    (2..=n as u32).try_fold(CoeffField::one(), |acc, i| Ok(acc * qbinom(i * k, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ScalarSpec;
    use crate::macdonald::{a_poly, e_poly, p_poly, EPolyCache};
    use crate::weyl::t_integer;

    fn frac(a: CoeffField, b: CoeffField) -> CoeffField {
        a.div_ref(&b).unwrap()
    }

    #[test]
    fn cprod_examples() {
        let w0 = InversionSet { n: 2, pairs: vec![(1, 2, 0)] };
        let v = eval_cprod(&EvalPoint::TMu(vec![0, 0]), CFactorKind::CY, &w0).unwrap();
        assert_eq!(v, (CoeffField::one() + CoeffField::t()).mul_qv(0, -1));
        assert!(eval_cprod(&EvalPoint::TInvZero(3), CFactorKind::CY, &InversionSet::default()).unwrap().is_one());
        for m in 1..4 {
            let v = eval_cprod(&EvalPoint::TMu(vec![m, 0]), CFactorKind::CY, &w0).unwrap();
            let expect = frac(one_minus(m as i64, 0), one_minus(m as i64, 2)).mul_qv(0, 2);
            assert_eq!(v.mul_qv(0, 1), expect);
        }
        let pole = InversionSet { n: 2, pairs: vec![(1, 1, 0)] };
        assert!(matches!(eval_cprod(&EvalPoint::TInvZero(2), CFactorKind::CY, &pole), Err(Error::Pole(_))));
    }

    #[test]
    fn qlambda_point_ratio() {
        let p = EvalPoint::QLambdaTRho(vec![3, 1, 0]);
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let (a, b) = p.z(i, j, 0);
            let l = [3i64, 1, 0];
            assert_eq!((a, b), (l[j - 1] - l[i - 1], -2 * (j as i64 - i as i64)));
        }
    }

    #[test]
    fn principal_specializations() {
        let cache = EPolyCache::new();
        let n2 = |f: &LaurentPoly| princspec_direct(f);
        assert_eq!(n2(&(&LaurentPoly::x(2, 1) + &LaurentPoly::x(2, 2))), t_integer(2));
        assert!(princspec_direct(&a_poly(&[0, 0], &cache).unwrap()).is_zero());
        assert!(princspec_direct(&LaurentPoly::one(3)).is_one());
        assert_eq!(princspec_p_closed(&[1, 0]).unwrap(), t_integer(2));
        assert!(princspec_p_closed(&[0, 0, 0]).unwrap().is_one());
        assert_eq!(hook_p(&[1, 1]).unwrap(), CoeffField::t());
        for mu in [vec![0, 1], vec![1, 0], vec![2, 0, 1], vec![0, 2, 2], vec![1, 0, 3]] {
            let e = princspec_direct(&e_poly(&mu, &cache).unwrap());
            assert_eq!(princspec_e_closed(&mu).unwrap(), e, "{mu:?}");
            assert_eq!(princspec_e_cfunction(&mu).unwrap(), e, "{mu:?}");
            assert_eq!(hook_e(&mu).unwrap(), e, "{mu:?}");
        }
        for lambda in [vec![1, 0], vec![1, 1], vec![3, 1], vec![2, 1, 0], vec![2, 2, 1]] {
            let p = princspec_direct(&p_poly(&lambda, &cache).unwrap());
            assert_eq!(princspec_p_closed(&lambda).unwrap(), p, "{lambda:?}");
            assert_eq!(hook_p(&lambda).unwrap(), p, "{lambda:?}");
        }
    }

    #[test]
    fn quantum_dimension() {
        // q = t turns the hook formula into t^{n(lambda)} ∏ (1 - t^{n+c})/(1 - t^h).
        for lambda in [vec![2, 1, 0], vec![3, 1, 1]] {
            let n = lambda.len() as i64;
            let mut expect = CoeffField::qv(0, 2 * n_of_lambda(&lambda));
            for b in boxes(&lambda) {
                let s = box_stats(&lambda, b).unwrap();
                expect = expect * frac(one_minus(0, 2 * (n + s.content as i64)), one_minus(0, 2 * s.hook as i64));
            }
            assert_eq!(hook_p(&lambda).unwrap().specialize(ScalarSpec::QEqT).unwrap(), expect);
        }
    }

    #[test]
    fn stabilizer_poincare() {
        for lambda in [vec![1, 1, 0], vec![2, 2, 2], vec![3, 1, 1, 0]] {
            let n = lambda.len();
            let mut pairs = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    if lambda[i - 1] == lambda[j - 1] {
                        pairs.push((i, j, 0));
                    }
                }
            }
            let len = pairs.len() as i64;
            let c = eval_cprod(&EvalPoint::TMu(vec![0; n]), CFactorKind::CY, &InversionSet { n, pairs }).unwrap();
            assert_eq!(c, poincare_wlambda(&lambda).unwrap().mul_qv(0, -len));
        }
    }

    #[test]
    fn norm_and_binomial_examples() {
        assert!(norm_ratio_e(&[0, 0]).unwrap().is_one());
        assert_eq!(norm_p_closed(&[1, 0], 0).unwrap(), CoeffField::int(2));
        assert_eq!(norm_p_closed(&[1, 1], 0).unwrap(), CoeffField::int(1));
        let w0q = CoeffField::one() + CoeffField::q();
        assert_eq!(norm_p_closed(&[0, 0], 1).unwrap(), w0q);
        assert_eq!(qbinom(2, 1).unwrap(), w0q);
        assert_eq!(ct_closed(2, 1).unwrap(), w0q);
        assert!(ct_closed(4, 0).unwrap().is_one());
        assert!(qbinom(1, 2).is_err());
        // Displayed corollary forms for n = 2, lambda = (2, 0).
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let q2 = q.pow(2);
        let expect = t_integer(2) * frac(CoeffField::one() - &q2, CoeffField::one() - &q2 * &t);
        assert_eq!(norm_ratio_p_over_e(&[2, 0]).unwrap(), expect);
        let q3 = q.pow(3);
        let expect = frac(CoeffField::one() - &q3 * &t * &t, CoeffField::one() - &q3).mul_qv(0, -2);
        assert_eq!(norm_ratio_a_over_p(&[2, 0]).unwrap(), expect);
    }
}
