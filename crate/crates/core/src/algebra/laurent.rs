//! Sparse Laurent polynomials in `x_1, ..., x_n` over [`CoeffField`].
//!
//! Variable indices in the public API are 1-based, matching `x_1, ..., x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::{CoeffField, ScalarSpec};
use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exponent, CoeffField>,
}

/// Image of one variable under [`LaurentPoly::substitute`]: `q^a v^b` times
/// either `x_var` (1-based) or the constant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarImage {
    pub q: i64,
    pub v: i64,
    pub var: Option<usize>,
}

impl VarImage {
    pub fn var(i: usize) -> Self {
        VarImage { q: 0, v: 0, var: Some(i) }
    }

    pub fn scaled(q: i64, v: i64, var: Option<usize>) -> Self {
        VarImage { q, v, var }
    }
}

/// How a polynomial's coefficients depend on the parity of the `v`-exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Zero,
    Even,
    Odd,
    Mixed,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(e, c)| format!("({})*x^{:?}", c.render(), e)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, CoeffField::one())
    }

    pub fn constant(n: usize, c: CoeffField) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exp: Exponent, c: CoeffField) -> Self {
        let n = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { n, terms }
    }

    /// The monomial `x^exp` with coefficient 1.
    pub fn x_pow(exp: &[i32]) -> Self {
        Self::monomial(exp.to_vec(), CoeffField::one())
    }

    /// The variable `x_i`.
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(e, CoeffField::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, CoeffField)>>(n: usize, it: I) -> Result<Self> {
        let mut p = LaurentPoly::zero(n);
        for (e, c) in it {
            if e.len() != n {
                return Err(Error::Dimension(n, e.len()));
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &CoeffField)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> CoeffField {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn ct(&self) -> CoeffField {
        self.coeff(&vec![0; self.n])
    }

    fn add_term(&mut self, e: Exponent, c: &CoeffField) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    fn check_dim(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::Dimension(self.n, o.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (e, c) in &small.terms {
            r.add_term(e.clone(), c);
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), &c.neg_ref());
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(LaurentPoly::zero(self.n));
        }
        // Gather all contributions per exponent first, then sum each bucket
        // once; this keeps the number of fraction normalizations down.
        let mut buckets: BTreeMap<Exponent, Vec<CoeffField>> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                buckets.entry(e).or_default().push(c1.mul_ref(c2));
            }
        }
        Ok(LaurentPoly {
            n: self.n,
            terms: buckets
                .into_iter()
                .filter_map(|(e, cs)| {
                    let s = sum_coeffs(cs);
                    (!s.is_zero()).then_some((e, s))
                })
                .collect(),
        })
    }

    pub fn scale(&self, c: &CoeffField) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul_ref(c))).collect() }
    }

    /// Multiplies every coefficient by `q^a v^b`.
    pub fn scale_qv(&self, a: i64, b: i64) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul_qv(a, b))).collect() }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), x.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = LaurentPoly::one(self.n);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Applies a coefficient map, dropping zeros.
    pub fn try_map_coeffs(&self, f: impl Fn(&CoeffField) -> Result<CoeffField>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        Ok(LaurentPoly { n: self.n, terms })
    }

    /// Variable substitution `x_i -> images[i-1]`.
    pub fn substitute(&self, images: &[VarImage]) -> Result<Self> {
        if images.len() != self.n {
            return Err(Error::Dimension(self.n, images.len()));
        }
        let mut buckets: BTreeMap<Exponent, Vec<CoeffField>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.n];
            let (mut qa, mut vb) = (0i64, 0i64);
            for (k, (&ek, img)) in e.iter().zip(images).enumerate() {
                if ek == 0 {
                    continue;
                }
                qa += img.q * ek as i64;
                vb += img.v * ek as i64;
                match img.var {
                    Some(j) => {
                        if j == 0 || j > self.n {
                            return Err(Error::Index { index: j, n: self.n });
                        }
                        ne[j - 1] += ek;
                    }
                    None if ek < 0 => return Err(Error::NonLaurent(k + 1)),
                    None => {}
                }
            }
            buckets.entry(ne).or_default().push(c.mul_qv(qa, vb));
        }
        Ok(LaurentPoly {
            n: self.n,
            terms: buckets
                .into_iter()
                .filter_map(|(e, cs)| {
                    let s = sum_coeffs(cs);
                    (!s.is_zero()).then_some((e, s))
                })
                .collect(),
        })
    }

    /// Permutes variables: `x_k -> x_{w(k)}` with `w` in 1-based one-line notation.
    pub fn permute(&self, w: &[usize]) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0; self.n];
                    for (k, &ek) in e.iter().enumerate() {
                        ne[w[k] - 1] = ek;
                    }
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Swaps `x_i` and `x_j` (1-based).
    pub fn swap(&self, i: usize, j: usize) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne.swap(i - 1, j - 1);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by `x_i - x_{i+1}`.
    ///
    /// Synthetic division in `x_i` from the top degree down, with the other
    /// variables as coefficients; the residue left at the lowest degree must
    /// vanish.
    pub fn exact_div_linear(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::Index { index: i, n: self.n });
        }
        self.div_by_binomial(i - 1, i, &CoeffField::one())
    }

    /// Exact quotient by `x_i - x_j` for any `i != j` (1-based).
    pub fn exact_div_pair(&self, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > self.n || j > self.n || i == j {
            return Err(Error::Index { index: i.max(j), n: self.n });
        }
        self.div_by_binomial(i - 1, j - 1, &CoeffField::one())
    }

    /// Exact quotient by `x_i - c x_j` for `i != j` (1-based).
    pub fn exact_div_binomial(&self, i: usize, j: usize, c: &CoeffField) -> Result<Self> {
        if i == 0 || j == 0 || i > self.n || j > self.n || i == j {
            return Err(Error::Index { index: i.max(j), n: self.n });
        }
        if c.is_zero() {
            return Err(Error::Argument("binomial divisor with zero coefficient".into()));
        }
        self.div_by_binomial(i - 1, j - 1, c)
    }

    fn div_by_binomial(&self, a: usize, b: usize, k: &CoeffField) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut slices: BTreeMap<i32, BTreeMap<Exponent, CoeffField>> = BTreeMap::new();
        for (e, c) in &self.terms {
            slices.entry(e[a]).or_default().insert(e.clone(), c.clone());
        }
        let lo = *slices.keys().next().unwrap();
        let hi = *slices.keys().next_back().unwrap();
        let mut quotient = LaurentPoly::zero(self.n);
        for d in ((lo + 1)..=hi).rev() {
            let Some(slice) = slices.remove(&d) else { continue };
            let below = slices.entry(d - 1).or_default();
            for (mut e, c) in slice {
                e[a] -= 1;
                quotient.terms.insert(e.clone(), c.clone());
                e[b] += 1;
                let c = if k.is_one() { c } else { c.mul_ref(k) };
                match below.entry(e) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().add_ref(&c);
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        if slices.get(&lo).is_some_and(|s| !s.is_empty()) {
            return Err(Error::Divisibility(format!(
                "x_{} - ({}) x_{} does not divide the polynomial",
                a + 1,
                k.render(),
                b + 1
            )));
        }
        Ok(quotient)
    }

    /// `f(x^{-1}; q^{-1}, t^{-1})`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.bar())).collect(),
        }
    }

    /// Coefficient-only `q -> 1/q, t -> 1/t`.
    pub fn bar_coeffs(&self) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.bar())).collect() }
    }

    pub fn specialize(&self, s: ScalarSpec) -> Result<Self> {
        self.try_map_coeffs(|c| c.specialize(s))
    }

    /// `t -> q t` on every coefficient.
    pub fn subst_t_qt(&self) -> Result<Self> {
        self.try_map_coeffs(|c| c.subst_t_qt())
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for c in self.terms.values() {
            let nv: Vec<u32> = c.num().terms().map(|(k, _)| k.1 % 2).collect();
            let dv: Vec<u32> = c.den().terms().map(|(k, _)| k.1 % 2).collect();
            let dpar = dv[0];
            if dv.iter().any(|&x| x != dpar) {
                return Parity::Mixed;
            }
            for x in nv {
                if (x + dpar).is_multiple_of(2) {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
        match (even, odd) {
            (false, false) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap(i, i + 1) == *self)
    }

    /// Total degrees occurring, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

/// Sums a list of field elements, combining equal denominators first.
pub fn sum_coeffs(cs: Vec<CoeffField>) -> CoeffField {
    match cs.len() {
        0 => return CoeffField::zero(),
        1 => return cs.into_iter().next().unwrap(),
        _ => {}
    }
    let mut by_den: Vec<(crate::algebra::IntPoly2, crate::algebra::IntPoly2)> = Vec::new();
    for c in cs {
        if c.is_zero() {
            continue;
        }
        if let Some(slot) = by_den.iter_mut().find(|(_, d)| d == c.den()) {
            slot.0 = slot.0.add(c.num());
        } else {
            by_den.push((c.num().clone(), c.den().clone()));
        }
    }
    let mut acc = CoeffField::zero();
    for (n, d) in by_den {
        let c = CoeffField::from_parts(n, d).expect("nonzero denominator");
        acc = acc.add_ref(&c);
    }
    acc
}

macro_rules! lbinop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &LaurentPoly) -> LaurentPoly {
                self.$f(o).expect("operands must have the same number of variables")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$f(&o).expect("operands must have the same number of variables")
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$f(o).expect("operands must have the same number of variables")
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                self.$f(&o).expect("operands must have the same number of variables")
            }
        }
    };
}

lbinop!(Add, add, checked_add);
lbinop!(Sub, sub, checked_sub);
lbinop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&CoeffField::int(-1))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::x(2, i)
    }

    #[test]
    fn cancellation_and_squares() {
        assert_eq!(&(&x(1) + &x(2)) - &x(2), x(1));
        let d = &(&x(1) - &x(2)) * &(&x(1) + &x(2));
        assert_eq!(d, &(&x(1) * &x(1)) - &(&x(2) * &x(2)));
        assert_eq!(d.exact_div_linear(1).unwrap(), &x(1) + &x(2));
    }

    #[test]
    fn division_examples() {
        let f = &(&x(1) * &x(2)) * &(&x(1) - &x(2));
        assert_eq!(f.exact_div_linear(1).unwrap(), &x(1) * &x(2));
        assert_eq!((&x(1) - &x(2)).exact_div_linear(1).unwrap(), LaurentPoly::one(2));
        assert!(matches!(x(1).exact_div_linear(1), Err(Error::Divisibility(_))));
        let t = CoeffField::t();
        let lin = &x(2) - &x(1).scale(&t);
        let g = &(&x(1) + &x(2).pow(2)) * &lin;
        assert_eq!(g.exact_div_binomial(2, 1, &t).unwrap(), &x(1) + &x(2).pow(2));
        assert!(matches!(g.exact_div_binomial(2, 1, &CoeffField::q()), Err(Error::Divisibility(_))));
    }

    #[test]
    fn substitution_examples() {
        let promo = [VarImage::scaled(-1, 0, Some(2)), VarImage::var(1)];
        assert_eq!(x(1).substitute(&promo).unwrap(), x(2).scale(&CoeffField::qv(-1, 0)));
        assert_eq!(x(2).substitute(&promo).unwrap(), x(1));
        let spec = [VarImage::scaled(0, 0, None), VarImage::scaled(0, 2, None)];
        assert_eq!(
            (&x(1) + &x(2)).substitute(&spec).unwrap(),
            LaurentPoly::constant(2, CoeffField::one() + CoeffField::t())
        );
        let inv = LaurentPoly::x_pow(&[-1, 0]);
        assert!(matches!(inv.substitute(&spec), Err(Error::NonLaurent(1))));
    }

    #[test]
    fn constant_terms() {
        let q = CoeffField::q();
        let a = &LaurentPoly::one(2) - &LaurentPoly::x_pow(&[1, -1]);
        let b = &LaurentPoly::one(2) - &LaurentPoly::x_pow(&[-1, 1]).scale(&q);
        assert_eq!((&a * &b).ct(), CoeffField::one() + q);
    }

    #[test]
    fn bar_involution() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let c = (CoeffField::one() - &t) / (CoeffField::one() - &q * &t);
        let f = x(2).scale(&c);
        let g = LaurentPoly::x_pow(&[0, -1]).scale(&(&q * &(&t - CoeffField::one()) / (&q * &t - CoeffField::one())));
        assert_eq!(f.bar(), g);
        assert_eq!(f.bar().bar(), f);
    }

    #[test]
    fn dimension_error() {
        let a = LaurentPoly::one(2);
        let b = LaurentPoly::one(3);
        assert_eq!(a.checked_add(&b), Err(Error::Dimension(2, 3)));
    }
}
