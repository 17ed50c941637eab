//! Nonsymmetric Macdonald polynomials `E_mu`, the symmetric `P_lambda`, the
//! antisymmetric `A_{lambda+rho}`, and their classical specializations.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::algebra::{CoeffField, IntPoly2, LaurentPoly, ScalarSpec};
use crate::error::{Error, Result};
use crate::ops::{apply_partial, apply_tau_on_e, apply_tpi, apply_tpi_vee, y_eigen_exponents};
use crate::weyl::{
    boxes, check_decreasing, dblex_less, poincare_wlambda, rearrangements, rho, u_mu_arm, v_mu, Permutation,
};

/// Memo table for `E_mu`, keyed by compositions normalized to `min = 0`.
///
/// Values are pure functions of the key, so racing inserts are harmless.
#[derive(Debug, Default)]
pub struct EPolyCache {
    store: RwLock<HashMap<Vec<i32>, LaurentPoly>>,
}

impl EPolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, mu: &[i32]) -> Option<LaurentPoly> {
        self.store.read().expect("cache lock").get(mu).cloned()
    }

    pub fn insert(&self, mu: Vec<i32>, e: LaurentPoly) {
        debug_assert!(leading_term_ok(&mu, &e));
        self.store.write().expect("cache lock").insert(mu, e);
    }

    pub fn len(&self) -> usize {
        self.store.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `E_mu = x^mu + (strictly DBlex-lower terms)` and homogeneity.
pub fn leading_term_ok(mu: &[i32], e: &LaurentPoly) -> bool {
    let deg: i32 = mu.iter().sum();
    e.coeff(mu).is_one()
        && e.terms().all(|(x, _)| x.iter().sum::<i32>() == deg && (x.as_slice() == mu || dblex_less(x, mu)))
}

/// Checks `Y_i E = q^{-mu_i} t^{-(v_mu(i)-1) + (n-1)/2} E` for every `i`.
pub fn satisfies_eigen(mu: &[i32], e: &LaurentPoly) -> Result<bool> {
    satisfies_eigen_at(mu, e, 1..=mu.len())
}

/// The eigenvalue equations for the given indices `i` only.
pub fn satisfies_eigen_at(mu: &[i32], e: &LaurentPoly, indices: impl IntoIterator<Item = usize>) -> Result<bool> {
    // Y_i is linear, so working with integral coefficients avoids a gcd in
    // every intermediate sum.
    let e = &e.scale(&CoeffField::from_poly(common_denominator(e)));
    for i in indices {
        let (a, b) = y_eigen_exponents(mu, i);
        if crate::ops::apply_big_y(i, e)? != e.scale_qv(a, b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least common multiple of the coefficient denominators of `f`.
pub fn common_denominator(f: &LaurentPoly) -> IntPoly2 {
    f.terms().fold(IntPoly2::one(), |acc, (_, c)| {
        let g = acc.gcd(c.den());
        acc.mul(&c.den().div_exact(&g).expect("gcd divides"))
    })
}

/// `E_mu` by the recursion (E0)-(E3).
pub fn e_poly(mu: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    let n = mu.len();
    if n == 0 {
        return Err(Error::Argument("empty composition".into()));
    }
    let m = *mu.iter().min().unwrap();
    let key: Vec<i32> = mu.iter().map(|x| x - m).collect();
    let base = match cache.get(&key) {
        Some(e) => e,
        None => {
            let e = e_normalized(&key, cache)?;
            cache.insert(key, e.clone());
            e
        }
    };
    Ok(if m == 0 { base } else { base.shift(&vec![m; n]) })
}

fn e_normalized(mu: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    let n = mu.len();
    if mu.iter().all(|&x| x == 0) {
        return Ok(LaurentPoly::one(n));
    }
    if mu[0] >= 1 {
        // (E1) read backwards: mu = (nu_n + 1, nu_1, ..., nu_{n-1}).
        let mut nu: Vec<i32> = mu[1..].to_vec();
        nu.push(mu[0] - 1);
        let e_nu = e_poly(&nu, cache)?;
        let moved = apply_tpi(&e_nu)?;
        return Ok((&LaurentPoly::x(n, 1) * &moved).scale_qv(nu[n - 1] as i64, 0));
    }
    let i = (1..n).find(|&i| mu[i - 1] < mu[i]).expect("nonzero composition with mu_1 = 0 has an ascent");
    let mut sigma = mu.to_vec();
    sigma.swap(i - 1, i);
    let e_sigma = e_poly(&sigma, cache)?;
    e2_step(i, &sigma, &e_sigma)
}

/// (E2): `E_{s_i mu} = (∂_i x_i - t x_i ∂_i + (1-t) a/(1-a)) E_mu` for `mu_i > mu_{i+1}`.
fn e2_step(i: usize, mu: &[i32], e: &LaurentPoly) -> Result<LaurentPoly> {
    let n = mu.len();
    let v = v_mu(mu);
    let a = CoeffField::qv((mu[i - 1] - mu[i]) as i64, 2 * (v.apply(i) as i64 - v.apply(i + 1) as i64));
    let xi = LaurentPoly::x(n, i);
    let t = CoeffField::t();
    let c = (CoeffField::one() - &t).mul_ref(&a).div_ref(&(CoeffField::one() - &a))?;
    let first = apply_partial(i, &(&xi * e))?;
    let second = (&xi * &apply_partial(i, e)?).scale(&t);
    Ok(&(&first - &second) + &e.scale(&c))
}

/// `E_mu = t^{-l(v_mu^{-1})/2} τ^∨_{u_mu} 1`, applying the box words in
/// order of decreasing column, then decreasing row.
pub fn e_via_creation(mu: &[i32]) -> Result<LaurentPoly> {
    let n = mu.len();
    if n == 0 || mu.iter().any(|&x| x < 0) {
        return Err(Error::Argument("creation formula needs a nonnegative composition".into()));
    }
    let mut bs = boxes(mu);
    bs.sort_by_key(|b| std::cmp::Reverse((b.c, b.r)));
    let mut f = LaurentPoly::one(n);
    let mut nu = vec![0i32; n];
    for b in bs {
        f = apply_tpi_vee(&f)?;
        let mut next = vec![nu[n - 1] + 1];
        next.extend_from_slice(&nu[..n - 1]);
        nu = next;
        for j in 1..=u_mu_arm(mu, b)? {
            let (g, s) = apply_tau_on_e(j, &f, &nu)?;
            f = g;
            nu = s;
        }
    }
    if nu != mu {
        return Err(Error::Argument(format!("creation word reached {nu:?}, expected {mu:?}")));
    }
    let l = v_mu(mu).inverse().length() as i64;
    Ok(f.scale_qv(0, -l))
}

fn vandermonde_divide(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    let mut g = f.clone();
    for i in 1..n {
        for j in i + 1..=n {
            g = g.exact_div_pair(i, j)?;
        }
    }
    Ok(g)
}

fn alternate(f: &LaurentPoly) -> LaurentPoly {
    let n = f.n();
    Permutation::all(n)
        .iter()
        .map(|w| {
            let g = f.permute(w.images());
            if w.sign() < 0 {
                -g
            } else {
                g
            }
        })
        .fold(LaurentPoly::zero(n), |acc, g| &acc + &g)
}

fn product_over_pairs(n: usize, factor: impl Fn(usize, usize) -> LaurentPoly) -> LaurentPoly {
    let mut p = LaurentPoly::one(n);
    for i in 1..n {
        for j in i + 1..=n {
            p = &p * &factor(i, j);
        }
    }
    p
}

/// `A_rho = ∏_{i<j} (x_j - t x_i)`.
pub fn a_rho(n: usize) -> LaurentPoly {
    let t = CoeffField::t();
    product_over_pairs(n, |i, j| &LaurentPoly::x(n, j) - &LaurentPoly::x(n, i).scale(&t))
}

/// `P_lambda = (1/W_lambda(t)) Σ_w w(E_lambda ∏_{i<j} (x_i - t x_j)/(x_i - x_j))`.
pub fn p_poly(lambda: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    let t = CoeffField::t();
    let e = e_poly(lambda, cache)?;
    let num = product_over_pairs(n, |i, j| &LaurentPoly::x(n, i) - &LaurentPoly::x(n, j).scale(&t));
    let s = vandermonde_divide(&alternate(&(&e * &num)))?;
    Ok(s.scale(&poincare_wlambda(lambda)?.inv()?))
}

/// `A_{lambda+rho} = (∏_{i<j} (x_j - t x_i)/(x_i - x_j)) Σ_w (-1)^{l(w)} w E_{lambda+rho}`.
pub fn a_poly(lambda: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    let shifted: Vec<i32> = lambda.iter().zip(rho(n)).map(|(a, b)| a + b).collect();
    let e = e_poly(&shifted, cache)?;
    let s = vandermonde_divide(&alternate(&e))?;
    Ok(&a_rho(n) * &s)
}

/// Which symmetric family an E-expansion refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionKind {
    P,
    A,
}

/// Coefficient of `E_mu` in the E-expansion of `P_lambda` or `A_{lambda+rho}`.
pub fn eexp_coeff(kind: ExpansionKind, lambda: &[i32], mu: &[i32]) -> Result<CoeffField> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    let target: Vec<i32> = match kind {
        ExpansionKind::P => lambda.to_vec(),
        ExpansionKind::A => lambda.iter().zip(rho(n)).map(|(a, b)| a + b).collect(),
    };
    let mut a = mu.to_vec();
    let mut b = target;
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(Error::Argument(format!("{mu:?} is not a rearrangement of the index")));
    }
    let v = v_mu(mu);
    let mut c = CoeffField::one();
    for i in 1..=n {
        for j in i + 1..=n {
            if mu[i - 1] <= mu[j - 1] {
                continue;
            }
            let dq = (mu[i - 1] - mu[j - 1]) as i64;
            let dv = v.apply(i) as i64 - v.apply(j) as i64;
            let den = CoeffField::one() - CoeffField::qv(dq, 2 * dv);
            let f = match kind {
                ExpansionKind::P => (CoeffField::one() - CoeffField::qv(dq, 2 * (dv - 1))).mul_qv(0, 2),
                ExpansionKind::A => -(CoeffField::one() - CoeffField::qv(dq, 2 * (dv + 1))),
            };
            c = c.mul_ref(&f.div_ref(&den)?);
        }
    }
    Ok(c)
}

fn via_expansion(kind: ExpansionKind, lambda: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    let base: Vec<i32> = match kind {
        ExpansionKind::P => lambda.to_vec(),
        ExpansionKind::A => lambda.iter().zip(rho(n)).map(|(a, b)| a + b).collect(),
    };
    let mut out = LaurentPoly::zero(n);
    for mu in rearrangements(&base) {
        let c = eexp_coeff(kind, lambda, &mu)?;
        out = &out + &e_poly(&mu, cache)?.scale(&c);
    }
    Ok(out)
}

/// `P_lambda = Σ_{mu ∈ S_n lambda} c_mu E_mu`.
pub fn p_via_eexpansion(lambda: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    via_expansion(ExpansionKind::P, lambda, cache)
}

/// `A_{lambda+rho} = Σ_{mu ∈ S_n(lambda+rho)} c_mu E_mu`.
pub fn a_via_eexpansion(lambda: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    via_expansion(ExpansionKind::A, lambda, cache)
}

/// Coefficients of `f` in the `E` basis, peeled off from the top by
/// triangularity: the DBlex-largest monomial of `f` always indexes a term.
pub fn e_expansion(f: &LaurentPoly, cache: &EPolyCache) -> Result<Vec<(Vec<i32>, CoeffField)>> {
    const MAX_STEPS: usize = 100_000;
    let mut rest = f.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        if out.len() >= MAX_STEPS {
            return Err(Error::Argument("E-expansion did not terminate".into()));
        }
        let (top, c) = rest
            .terms()
            .max_by(|a, b| crate::weyl::dblex_total_cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero polynomial");
        rest = &rest - &e_poly(&top, cache)?.scale(&c);
        out.push((top, c));
    }
    Ok(out)
}

/// Classical families reached from `P_lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    Schur,
    HallLittlewood,
    Monomial,
}

/// Schur by bialternant, Hall-Littlewood as `P_lambda(q = 0)`, monomial as an
/// orbit sum.
pub fn classical(kind: ClassicalKind, lambda: &[i32], cache: &EPolyCache) -> Result<LaurentPoly> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    match kind {
        ClassicalKind::Schur => {
            if lambda.iter().any(|&x| x < 0) {
                return Err(Error::Argument("schur needs a partition".into()));
            }
            let shifted: Vec<i32> = lambda.iter().zip(rho(n)).map(|(a, b)| a + b).collect();
            vandermonde_divide(&alternate(&LaurentPoly::x_pow(&shifted)))
        }
        ClassicalKind::HallLittlewood => p_poly(lambda, cache)?.specialize(ScalarSpec::QZero),
        ClassicalKind::Monomial => {
            Ok(rearrangements(lambda).iter().fold(LaurentPoly::zero(n), |acc, m| &acc + &LaurentPoly::x_pow(m)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{symmetrize_bosonic, symmetrize_fermionic};

    fn c(x: CoeffField) -> CoeffField {
        x
    }

    fn one() -> CoeffField {
        CoeffField::one()
    }

    fn frac(a: &CoeffField, b: &CoeffField) -> CoeffField {
        a.div_ref(b).unwrap()
    }

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::x(n, i)
    }

    #[test]
    fn e_small_examples() {
        let cache = EPolyCache::new();
        let (q, t) = (CoeffField::q(), CoeffField::t());
        assert_eq!(e_poly(&[0, 0, 0], &cache).unwrap(), LaurentPoly::one(3));
        assert_eq!(e_poly(&[1, 0], &cache).unwrap(), x(2, 1));
        let e01 = &x(2, 2) + &x(2, 1).scale(&frac(&(one() - &t), &(one() - &q * &t)));
        assert_eq!(e_poly(&[0, 1], &cache).unwrap(), e01);
        assert_eq!(e_poly(&[-1, 0], &cache).unwrap(), e01.shift(&[-1, -1]));
        assert_eq!(e_via_creation(&[0, 1]).unwrap(), e01);
        assert_eq!(e_via_creation(&[1, 0]).unwrap(), x(2, 1));
        assert_eq!(e_via_creation(&[0, 0]).unwrap(), LaurentPoly::one(2));
    }

    #[test]
    fn e_eigen_and_triangularity() {
        let cache = EPolyCache::new();
        for mu in [vec![0, 2], vec![2, 0, 1], vec![0, 1, 1], vec![-1, 2, 0], vec![1, 0, 2]] {
            let e = e_poly(&mu, &cache).unwrap();
            assert!(satisfies_eigen(&mu, &e).unwrap(), "{mu:?}");
            assert!(leading_term_ok(&mu, &e), "{mu:?}");
            if mu.iter().all(|&x| x >= 0) {
                assert_eq!(e_via_creation(&mu).unwrap(), e, "{mu:?}");
            }
        }
    }

    #[test]
    fn p_examples() {
        let cache = EPolyCache::new();
        let (q, t) = (CoeffField::q(), CoeffField::t());
        assert_eq!(p_poly(&[0, 0], &cache).unwrap(), LaurentPoly::one(2));
        assert_eq!(p_poly(&[1, 0], &cache).unwrap(), &x(2, 1) + &x(2, 2));
        let r = frac(&(one() - &q), &(one() - &q * &t));
        let expect = &(&e_poly(&[0, 0, 1], &cache).unwrap() + &e_poly(&[0, 1, 0], &cache).unwrap().scale(&(&t * &r)))
            + &e_poly(&[1, 0, 0], &cache)
                .unwrap()
                .scale(&(&(&t * &t) * &(&r * &frac(&(one() - &q * &t), &(one() - &q * &t * &t)))));
        assert_eq!(p_poly(&[1, 0, 0], &cache).unwrap(), expect);
        assert!(p_poly(&[0, 1], &cache).is_err());
    }

    #[test]
    fn a_examples() {
        let cache = EPolyCache::new();
        let t = CoeffField::t();
        assert_eq!(a_poly(&[0, 0], &cache).unwrap(), &x(2, 2) - &x(2, 1).scale(&t));
        assert_eq!(a_poly(&[1, 0], &cache).unwrap(), &(&x(2, 1) + &x(2, 2)) * &a_rho(2));
        let q = CoeffField::q();
        for m in 0..3i64 {
            let qm = q.pow(m + 1);
            let c = frac(&(one() - &qm * &t * &t), &(one() - &qm * &t));
            let expect =
                &e_poly(&[0, m as i32 + 1], &cache).unwrap() - &e_poly(&[m as i32 + 1, 0], &cache).unwrap().scale(&c);
            assert_eq!(a_poly(&[m as i32, 0], &cache).unwrap(), expect);
        }
    }

    #[test]
    fn expansion_coefficients() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        for m in 1..4i64 {
            let qm = q.pow(m);
            let expect = &t * &frac(&(one() - &qm), &(one() - &qm * &t));
            assert_eq!(eexp_coeff(ExpansionKind::P, &[m as i32, 0], &[m as i32, 0]).unwrap(), expect);
        }
        let r = frac(&(one() - &q), &(one() - &q * &t));
        let q2 = q.pow(2);
        let expect = c(t.pow(3)) * r.clone() * r * frac(&(one() - &q2 * &t), &(one() - &q2 * &t * &t));
        assert_eq!(eexp_coeff(ExpansionKind::P, &[2, 1, 0], &[2, 1, 0]).unwrap(), expect);
        assert!(eexp_coeff(ExpansionKind::P, &[2, 1, 0], &[0, 1, 2]).unwrap().is_one());
        assert!(eexp_coeff(ExpansionKind::P, &[2, 1, 0], &[0, 1, 1]).is_err());
    }

    #[test]
    fn symmetric_cross_checks() {
        let cache = EPolyCache::new();
        for lambda in [vec![1, 0], vec![2, 1], vec![1, 1, 0], vec![2, 1, 0], vec![1, 0, 0]] {
            let n = lambda.len() as i64;
            let l0 = n * (n - 1) / 2;
            let p = p_poly(&lambda, &cache).unwrap();
            let a = a_poly(&lambda, &cache).unwrap();
            assert!(p.is_symmetric());
            assert_eq!(p_via_eexpansion(&lambda, &cache).unwrap(), p);
            assert_eq!(a_via_eexpansion(&lambda, &cache).unwrap(), a);
            let e = e_poly(&lambda, &cache).unwrap();
            let w = poincare_wlambda(&lambda).unwrap();
            assert_eq!(symmetrize_bosonic(&e).unwrap().scale_qv(0, l0), p.scale(&w));
            let shifted: Vec<i32> = lambda.iter().zip(rho(lambda.len())).map(|(a, b)| a + b).collect();
            let ea = e_poly(&shifted, &cache).unwrap();
            assert_eq!(symmetrize_fermionic(&ea).unwrap().scale_qv(0, l0), a);
            assert_eq!(&a_rho(lambda.len()) * &p.subst_t_qt().unwrap(), a);
            assert_eq!(
                p.specialize(ScalarSpec::QEqT).unwrap(),
                classical(ClassicalKind::Schur, &lambda, &cache).unwrap()
            );
        }
    }

    #[test]
    fn expansion_by_triangularity() {
        let cache = EPolyCache::new();
        let p = p_poly(&[2, 1, 0], &cache).unwrap();
        let exp = e_expansion(&p, &cache).unwrap();
        assert_eq!(exp.len(), 6);
        for (mu, c) in exp {
            assert_eq!(c, eexp_coeff(ExpansionKind::P, &[2, 1, 0], &mu).unwrap());
        }
    }

    #[test]
    fn classical_examples() {
        let cache = EPolyCache::new();
        assert_eq!(classical(ClassicalKind::Schur, &[1, 0], &cache).unwrap(), &x(2, 1) + &x(2, 2));
        let x1x2 = &x(2, 1) * &x(2, 2);
        assert_eq!(
            classical(ClassicalKind::Schur, &[2, 1], &cache).unwrap(),
            &(&x1x2 * &x(2, 1)) + &(&x1x2 * &x(2, 2))
        );
        assert_eq!(classical(ClassicalKind::HallLittlewood, &[1, 1], &cache).unwrap(), x1x2);
        assert_eq!(classical(ClassicalKind::Monomial, &[2, 0], &cache).unwrap(), &x(2, 1).pow(2) + &x(2, 2).pow(2));
        let e = e_poly(&[2, 1, 0], &cache).unwrap();
        assert_eq!(e.specialize(ScalarSpec::QZero).unwrap(), LaurentPoly::x_pow(&[2, 1, 0]));
    }
}
