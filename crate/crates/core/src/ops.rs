//! The polynomial representation: Hecke operators, promotion, Cherednik-Dunkl
//! operators, Demazure operators, symmetrizers and intertwiners.
//!
//! Operator indices are 1-based. Every operator is a pure function of its
//! input polynomial.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{CoeffField, LaurentPoly, VarImage};
use crate::error::{Error, Result};
use crate::weyl::{v_mu, Permutation};

fn check_i(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::Index { index: i, n });
    }
    Ok(())
}

fn check_j(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n {
        return Err(Error::Index { index: j, n });
    }
    Ok(())
}

/// `s_i`: swaps `x_i` and `x_{i+1}`.
pub fn apply_s(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_i(i, f.n())?;
    Ok(f.swap(i, i + 1))
}

/// Divided difference `(f - s_i f) / (x_i - x_{i+1})`.
pub fn apply_partial(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_i(i, f.n())?;
    (f - &f.swap(i, i + 1)).exact_div_linear(i)
}

/// `T_i = t^{-1/2} x_{i+1} ∂_i - t^{1/2} ∂_i x_{i+1}`.
///
/// With `∂_i(x_{i+1} f) = -f + x_i ∂_i f` this is
/// `t^{1/2} f + (t^{-1/2} x_{i+1} - t^{1/2} x_i) ∂_i f`, one division.
pub fn apply_t(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let d = apply_partial(i, f)?;
    let n = f.n();
    let mult = &LaurentPoly::x(n, i + 1).scale_qv(0, -1) - &LaurentPoly::x(n, i).scale_qv(0, 1);
    Ok(&f.scale_qv(0, 1) + &(&mult * &d))
}

/// `T_i^{-1} = T_i - (t^{1/2} - t^{-1/2})`.
pub fn apply_t_inv(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let tf = apply_t(i, f)?;
    Ok(&(&tf - &f.scale_qv(0, 1)) + &f.scale_qv(0, -1))
}

/// `T_π = s_1 ⋯ s_{n-1} y_n`, so `(T_π f)(x) = f(x_2, ..., x_n, q^{-1} x_1)`.
pub fn apply_tpi(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    let images: Vec<VarImage> =
        (1..=n).map(|k| if k < n { VarImage::var(k + 1) } else { VarImage::scaled(-1, 0, Some(1)) }).collect();
    f.substitute(&images)
}

/// `(T_π^{-1} f)(x) = f(q x_n, x_1, ..., x_{n-1})`.
pub fn apply_tpi_inv(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    let images: Vec<VarImage> =
        (1..=n).map(|k| if k > 1 { VarImage::var(k - 1) } else { VarImage::scaled(1, 0, Some(n)) }).collect();
    f.substitute(&images)
}

/// `y_i`: `x_i -> q^{-1} x_i`.
pub fn apply_y(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_j(i, f.n())?;
    let images: Vec<VarImage> =
        (1..=f.n()).map(|k| VarImage::scaled(if k == i { -1 } else { 0 }, 0, Some(k))).collect();
    f.substitute(&images)
}

/// `Y_i = T_{i-1}^{-1} ⋯ T_1^{-1} T_π T_{n-1} ⋯ T_i`.
pub fn apply_big_y(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    check_j(i, n)?;
    let mut g = f.clone();
    for k in i..n {
        g = apply_t(k, &g)?;
    }
    g = apply_tpi(&g)?;
    for k in 1..i {
        g = apply_t_inv(k, &g)?;
    }
    Ok(g)
}

/// `Y_i^{-1} = T_i^{-1} ⋯ T_{n-1}^{-1} T_π^{-1} T_1 ⋯ T_{i-1}`.
pub fn apply_big_y_inv(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    check_j(i, n)?;
    let mut g = f.clone();
    for k in (1..i).rev() {
        g = apply_t(k, &g)?;
    }
    g = apply_tpi_inv(&g)?;
    for k in (i..n).rev() {
        g = apply_t_inv(k, &g)?;
    }
    Ok(g)
}

/// `C_{s_i} = T_i + t^{-1/2}`.
pub fn apply_c(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    Ok(&apply_t(i, f)? + &f.scale_qv(0, -1))
}

/// Which Demazure operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `D_{i,i+1} = (1 + s_i) 1/(1 - x_i x_{i+1}^{-1})`.
    Up,
    /// `D_{i+1,i} = (1 + s_i) 1/(1 - x_i^{-1} x_{i+1})`.
    Down,
}

/// Demazure operators, via `D_{i,i+1} f = -∂_i(x_{i+1} f)` and
/// `D_{i+1,i} f = ∂_i(x_i f)`.
pub fn apply_d(i: usize, dir: Direction, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_i(i, f.n())?;
    let n = f.n();
    Ok(match dir {
        Direction::Up => -apply_partial(i, &(&LaurentPoly::x(n, i + 1) * f))?,
        Direction::Down => apply_partial(i, &(&LaurentPoly::x(n, i) * f))?,
    })
}

/// `T_π^∨ = X_1 T_1 ⋯ T_{n-1}`.
pub fn apply_tpi_vee(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    let mut g = f.clone();
    for k in (1..n).rev() {
        g = apply_t(k, &g)?;
    }
    Ok(&LaurentPoly::x(n, 1) * &g)
}

/// One letter of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    S(usize),
    Partial(usize),
    T(usize),
    TInv(usize),
    Tpi,
    TpiInv,
    SmallY(usize),
    Y(usize),
    YInv(usize),
    C(usize),
    D(usize, Direction),
    TpiVee,
    X(usize),
    XInv(usize),
}

impl Letter {
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let n = f.n();
        match *self {
            Letter::S(i) => apply_s(i, f),
            Letter::Partial(i) => apply_partial(i, f),
            Letter::T(i) => apply_t(i, f),
            Letter::TInv(i) => apply_t_inv(i, f),
            Letter::Tpi => apply_tpi(f),
            Letter::TpiInv => apply_tpi_inv(f),
            Letter::SmallY(i) => apply_y(i, f),
            Letter::Y(i) => apply_big_y(i, f),
            Letter::YInv(i) => apply_big_y_inv(i, f),
            Letter::C(i) => apply_c(i, f),
            Letter::D(i, d) => apply_d(i, d, f),
            Letter::TpiVee => apply_tpi_vee(f),
            Letter::X(j) => {
                check_j(j, n)?;
                Ok(&LaurentPoly::x(n, j) * f)
            }
            Letter::XInv(j) => {
                check_j(j, n)?;
                let mut e = vec![0; n];
                e[j - 1] = -1;
                Ok(&LaurentPoly::x_pow(&e) * f)
            }
        }
    }
}

/// Applies an operator product written left to right, so the rightmost
/// letter acts first.
pub fn apply_word(word: &[Letter], f: &LaurentPoly) -> Result<LaurentPoly> {
    word.iter().rev().try_fold(f.clone(), |g, l| l.apply(&g))
}

/// `T_w f` for every `w ∈ S_n`, each along its lexicographically first reduced
/// word. Permutations are processed by length so every prefix is available.
pub fn hecke_orbit(f: &LaurentPoly) -> Result<Vec<(Permutation, LaurentPoly)>> {
    let n = f.n();
    let mut by_len: Vec<Vec<Permutation>> = Vec::new();
    for w in Permutation::all(n) {
        let l = w.length();
        if by_len.len() <= l {
            by_len.resize(l + 1, Vec::new());
        }
        by_len[l].push(w);
    }
    let mut done: HashMap<Permutation, LaurentPoly> = HashMap::new();
    done.insert(Permutation::identity(n), f.clone());
    for level in by_len.iter().skip(1) {
        let computed: Vec<(Permutation, LaurentPoly)> = level
            .par_iter()
            .map(|w| {
                let a = w.reduced_word()[0];
                let rest = Permutation::simple(n, a).compose(w);
                let g = apply_t(a, &done[&rest])?;
                Ok((w.clone(), g))
            })
            .collect::<Result<_>>()?;
        done.extend(computed);
    }
    let mut out: Vec<(Permutation, LaurentPoly)> = done.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn weighted_sum(terms: Vec<(Permutation, LaurentPoly)>, weight: impl Fn(i64) -> CoeffField) -> LaurentPoly {
    let n = terms.first().map(|t| t.1.n()).unwrap_or(1);
    terms.into_iter().map(|(w, g)| g.scale(&weight(w.length() as i64))).fold(LaurentPoly::zero(n), |acc, g| &acc + &g)
}

/// `𝟏_0 = Σ_w t^{(l(w) - l(w_0))/2} T_w`.
pub fn symmetrize_bosonic(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n() as i64;
    let l0 = n * (n - 1) / 2;
    Ok(weighted_sum(hecke_orbit(f)?, |l| CoeffField::qv(0, l - l0)))
}

/// `ε_0 = Σ_w (-t^{-1/2})^{l(w) - l(w_0)} T_w`.
pub fn symmetrize_fermionic(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n() as i64;
    let l0 = n * (n - 1) / 2;
    Ok(weighted_sum(hecke_orbit(f)?, |l| {
        let e = l - l0;
        CoeffField::monomial(if e % 2 == 0 { 1 } else { -1 }, 0, -e)
    }))
}

/// Eigenvalue of `Y_i` on `E_mu` as `(q-exponent, v-exponent)`.
pub fn y_eigen_exponents(mu: &[i32], i: usize) -> (i64, i64) {
    let n = mu.len() as i64;
    let v = v_mu(mu);
    (-(mu[i - 1] as i64), -2 * (v.apply(i) as i64 - 1) + (n - 1))
}

/// `τ^∨_i E_mu` in scalar form, `T_i E_mu + (t^{-1/2} - t^{1/2})/(1 - a) E_mu`
/// with `a` the eigenvalue of `Y_i^{-1} Y_{i+1}` on `E_mu`. Returns the new
/// polynomial together with `s_i mu`; the result is zero when
/// `mu_i = mu_{i+1}`.
pub fn apply_tau_on_e(i: usize, e_mu: &LaurentPoly, mu: &[i32]) -> Result<(LaurentPoly, Vec<i32>)> {
    let n = e_mu.n();
    check_i(i, n)?;
    if mu.len() != n {
        return Err(Error::Dimension(n, mu.len()));
    }
    let mut s_mu = mu.to_vec();
    s_mu.swap(i - 1, i);
    if mu[i - 1] == mu[i] {
        return Ok((LaurentPoly::zero(n), s_mu));
    }
    let (qi, vi) = y_eigen_exponents(mu, i);
    let (qj, vj) = y_eigen_exponents(mu, i + 1);
    let a = CoeffField::qv(qj - qi, vj - vi);
    let c = (CoeffField::v().inv()? - CoeffField::v()).div_ref(&(CoeffField::one() - a))?;
    Ok((&apply_t(i, e_mu)? + &e_mu.scale(&c), s_mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::x(n, i)
    }

    fn one(n: usize) -> LaurentPoly {
        LaurentPoly::one(n)
    }

    #[test]
    fn partial_examples() {
        assert_eq!(apply_partial(1, &x(2, 1).pow(2)).unwrap(), &x(2, 1) + &x(2, 2));
        assert!(apply_partial(1, &(&x(2, 1) * &x(2, 2))).unwrap().is_zero());
        let d = &x(2, 1) - &x(2, 2);
        assert_eq!(apply_s(1, &d).unwrap(), -d.clone());
        assert!(apply_s(2, &d).is_err());
    }

    #[test]
    fn hecke_examples() {
        assert_eq!(apply_t(1, &one(2)).unwrap(), one(2).scale_qv(0, 1));
        assert_eq!(apply_t(1, &x(2, 1)).unwrap(), x(2, 2).scale_qv(0, -1));
        assert_eq!(apply_t_inv(1, &one(2)).unwrap(), one(2).scale_qv(0, -1));
        assert_eq!(apply_c(1, &one(2)).unwrap(), &one(2).scale_qv(0, 1) + &one(2).scale_qv(0, -1));
    }

    #[test]
    fn promotion_examples() {
        assert_eq!(apply_tpi(&one(2)).unwrap(), one(2));
        assert_eq!(apply_tpi(&x(2, 1)).unwrap(), x(2, 2));
        assert_eq!(apply_tpi(&x(2, 2)).unwrap(), x(2, 1).scale_qv(-1, 0));
        let f = &x(3, 1) + &x(3, 3).pow(2);
        assert_eq!(apply_tpi_inv(&apply_tpi(&f).unwrap()).unwrap(), f);
        assert_eq!(apply_y(2, &x(2, 2).pow(3)).unwrap(), x(2, 2).pow(3).scale_qv(-3, 0));
    }

    #[test]
    fn y_on_constants() {
        assert_eq!(apply_big_y(1, &one(2)).unwrap(), one(2).scale_qv(0, 1));
        assert_eq!(apply_big_y(2, &one(2)).unwrap(), one(2).scale_qv(0, -1));
        let f = &x(3, 2) + &x(3, 1).pow(2);
        for i in 1..=3 {
            let g = apply_big_y(i, &f).unwrap();
            assert_eq!(apply_big_y_inv(i, &g).unwrap(), f);
        }
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(apply_d(1, Direction::Up, &one(2)).unwrap(), one(2));
        let f = &x(2, 1) * &x(2, 2);
        assert_eq!(apply_d(1, Direction::Up, &f).unwrap(), f);
    }

    #[test]
    fn symmetrizer_examples() {
        let t = CoeffField::t();
        let b = symmetrize_bosonic(&one(2)).unwrap();
        assert_eq!(b, one(2).scale(&(CoeffField::one() + &t)).scale_qv(0, -1));
        let a = symmetrize_fermionic(&x(2, 1)).unwrap();
        assert_eq!(a.scale_qv(0, 1), &x(2, 2) - &x(2, 1).scale(&t));
        assert!(symmetrize_fermionic(&one(2)).unwrap().is_zero());
    }

    #[test]
    fn tau_examples() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let (g, nu) = apply_tau_on_e(1, &x(2, 1), &[1, 0]).unwrap();
        assert_eq!(nu, vec![0, 1]);
        let expect = &x(2, 2) + &x(2, 1).scale(&((CoeffField::one() - &t) / (CoeffField::one() - &q * &t)));
        assert_eq!(g.scale_qv(0, 1), expect);
        let (z, _) = apply_tau_on_e(1, &(&x(2, 1) * &x(2, 2)), &[1, 1]).unwrap();
        assert!(z.is_zero());
    }

    // tau_i E_mu is proportional to E_{s_i mu}, and tau_i tau_i E_mu =
    // (1 + c c') E_mu where c, c' are the scalar parts at a and 1/a.
    #[test]
    fn tau_intertwines() {
        use crate::macdonald::{e_poly, EPolyCache};
        let cache = EPolyCache::new();
        let one = CoeffField::one();
        let scalar = |a: &CoeffField| (CoeffField::v().inv().unwrap() - CoeffField::v()) / (&one - a);
        for mu in [[0, 1, 2], [2, 0, 1], [1, 0, 0], [0, 2, 2], [1, 2, 0]] {
            let e = e_poly(&mu, &cache).unwrap();
            for i in 1..3 {
                if mu[i - 1] == mu[i] {
                    continue;
                }
                let (g, nu) = apply_tau_on_e(i, &e, &mu).unwrap();
                let target = e_poly(&nu, &cache).unwrap();
                assert_eq!(target.scale(&g.coeff(&nu)), g, "mu = {mu:?}, i = {i}");
                let (back, mu2) = apply_tau_on_e(i, &g, &nu).unwrap();
                assert_eq!(mu2, mu.to_vec());
                let (qi, vi) = y_eigen_exponents(&mu, i);
                let (qj, vj) = y_eigen_exponents(&mu, i + 1);
                let a = CoeffField::qv(qj - qi, vj - vi);
                let k = &one + &(scalar(&a) * scalar(&a.inv().unwrap()));
                assert_eq!(back, e.scale(&k), "mu = {mu:?}, i = {i}");
            }
        }
    }
}
