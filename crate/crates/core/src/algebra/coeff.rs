//! The coefficient field `Q(q, v)` with `v = t^{1/2}`.
//!
//! Elements are stored as reduced fractions of [`IntPoly2`] values whose
//! denominator has a positive graded-lex leading coefficient, so equal field
//! elements are structurally equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly2;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoeffField {
    num: IntPoly2,
    den: IntPoly2,
}

/// Scalar specializations of the parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarSpec {
    /// `q = 0`.
    QZero,
    /// `q = t`, i.e. `q := v^2`.
    QEqT,
    /// `t = q^k`, i.e. `v^2 := q^k`; the input must be even in `v`.
    TPowQ(u32),
}

impl Default for CoeffField {
    fn default() -> Self {
        CoeffField::zero()
    }
}

impl fmt::Debug for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl CoeffField {
    pub fn zero() -> Self {
        CoeffField { num: IntPoly2::zero(), den: IntPoly2::one() }
    }

    pub fn one() -> Self {
        CoeffField { num: IntPoly2::one(), den: IntPoly2::one() }
    }

    pub fn int(c: impl Into<BigInt>) -> Self {
        CoeffField { num: IntPoly2::constant(c), den: IntPoly2::one() }
    }

    /// `c q^a v^b` for arbitrary integer exponents.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return CoeffField::zero();
        }
        CoeffField {
            num: IntPoly2::monomial(c, a.max(0) as u32, b.max(0) as u32),
            den: IntPoly2::monomial(BigInt::one(), (-a).max(0) as u32, (-b).max(0) as u32),
        }
    }

    pub fn q() -> Self {
        CoeffField::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        CoeffField::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        CoeffField::monomial(1, 0, 2)
    }

    /// `q^a t^{b/2}`.
    pub fn qv(a: i64, b: i64) -> Self {
        CoeffField::monomial(1, a, b)
    }

    pub fn from_poly(p: IntPoly2) -> Self {
        CoeffField { num: p, den: IntPoly2::one() }
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn from_parts(num: IntPoly2, den: IntPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Pole("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    pub fn num(&self) -> &IntPoly2 {
        &self.num
    }

    pub fn den(&self) -> &IntPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element is a polynomial (denominator 1).
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    fn reduce(num: IntPoly2, den: IntPoly2) -> Self {
        if num.is_zero() {
            return CoeffField::zero();
        }
        if den.is_one() {
            return CoeffField { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        CoeffField { num, den }
    }

    // Fraction arithmetic uses the standard cofactor tricks so that gcds are
    // taken of the smallest possible operands.

    pub fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return CoeffField { num, den: self.den.clone() };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = self.num.mul(&o.den).add(&o.num);
            return CoeffField { num, den: o.den.clone() };
        }
        if o.den.is_one() {
            let num = o.num.mul(&self.den).add(&self.num);
            return CoeffField { num, den: self.den.clone() };
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            let den = self.den.mul(&o.den);
            return Self::reduce_num_monic(num, den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return CoeffField::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            CoeffField { num, den: b1.mul(&o.den) }
        } else {
            let num = num.div_exact(&h).expect("gcd divides");
            let den = b1.mul(&o.den).div_exact(&h).expect("gcd divides");
            Self::reduce(num, den)
        }
    }

    // With coprime denominators the sum is already reduced; only the sign
    // convention needs checking.
    fn reduce_num_monic(num: IntPoly2, den: IntPoly2) -> Self {
        if num.is_zero() {
            return CoeffField::zero();
        }
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            CoeffField { num: num.neg(), den: den.neg() }
        } else {
            CoeffField { num, den }
        }
    }

    pub fn neg_ref(&self) -> Self {
        CoeffField { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return CoeffField::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return CoeffField { num: self.num.mul(&o.num), den: IntPoly2::one() };
        }
        if o.num.is_monomial() && o.den.is_monomial() {
            return self.mul_monomial_fraction(o);
        }
        if self.num.is_monomial() && self.den.is_monomial() {
            return o.mul_monomial_fraction(self);
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Self::reduce_num_monic(a.mul(&c), b.mul(&d))
    }

    // Multiplication by `c q^a v^b / (d q^x v^y)`: only monomial and integer
    // content can cancel.
    fn mul_monomial_fraction(&self, m: &Self) -> Self {
        let (&(na, nb), nc) = m.num.terms().next().unwrap();
        let (&(da, db), dc) = m.den.terms().next().unwrap();
        let num = self.num.shift(na, nb);
        let den = self.den.shift(da, db);
        let (n1, n2) = num.min_exps();
        let (d1, d2) = den.min_exps();
        let (c1, c2) = (n1.min(d1), n2.min(d2));
        let num = num.unshift(c1, c2);
        let den = den.unshift(c1, c2);
        let g1 = nc.gcd(&den.content());
        let g2 = dc.gcd(&num.content());
        let num = num.div_int(&g2).scale(&(nc / &g1));
        let den = den.div_int(&g1).scale(&(dc / &g2));
        Self::reduce_num_monic(num, den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Pole("inverse of zero".into()));
        }
        Ok(Self::reduce_num_monic(self.den.clone(), self.num.clone()))
    }

    pub fn div_ref(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("power of zero").pow(-e);
        }
        CoeffField { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }.normalized_sign()
    }

    fn normalized_sign(self) -> Self {
        Self::reduce_num_monic(self.num, self.den)
    }

    /// Multiplies by `q^a v^b`.
    pub fn mul_qv(&self, a: i64, b: i64) -> Self {
        if a == 0 && b == 0 || self.is_zero() {
            return self.clone();
        }
        let num = self.num.shift(a.max(0) as u32, b.max(0) as u32);
        let den = self.den.shift((-a).max(0) as u32, (-b).max(0) as u32);
        let (n1, n2) = num.min_exps();
        let (d1, d2) = den.min_exps();
        let (c1, c2) = (n1.min(d1), n2.min(d2));
        CoeffField { num: num.unshift(c1, c2), den: den.unshift(c1, c2) }
    }

    /// Applies `q -> 1/q`, `v -> 1/v`.
    pub fn bar(&self) -> Self {
        let (n, nq, nv) = self.num.reversed();
        let (d, dq, dv) = self.den.reversed();
        // num(1/q,1/v) = n q^{-nq} v^{-nv}, likewise for den.
        let a = dq as i64 - nq as i64;
        let b = dv as i64 - nv as i64;
        Self::reduce_num_monic(n, d).mul_qv(a, b)
    }

    /// Applies `q -> 1/q` only; the element must be free of `v`.
    pub fn bar_q(&self) -> Self {
        self.bar()
    }

    pub fn is_even_in_v(&self) -> bool {
        self.num.is_even_in_v() && self.den.is_even_in_v()
    }

    /// True when the element does not involve `v`.
    pub fn is_free_of_v(&self) -> bool {
        self.num.terms().all(|(k, _)| k.1 == 0) && self.den.terms().all(|(k, _)| k.1 == 0)
    }

    pub fn specialize(&self, s: ScalarSpec) -> Result<Self> {
        let f = |p: &IntPoly2| -> Result<IntPoly2> {
            Ok(match s {
                ScalarSpec::QZero => {
                    IntPoly2::from_terms(p.terms().filter(|(k, _)| k.0 == 0).map(|(k, c)| (0, k.1, c.clone())))
                }
                ScalarSpec::QEqT => p.map_exps(|a, b| (0, b + 2 * a)),
                ScalarSpec::TPowQ(k) => {
                    if !p.is_even_in_v() {
                        return Err(Error::Parity(format!("odd power of t^(1/2) under t -> q^{k}")));
                    }
                    p.map_exps(|a, b| (a + k * (b / 2), 0))
                }
            })
        };
        let num = f(&self.num)?;
        let den = f(&self.den)?;
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes under {:?}", self.den.render(), s)));
        }
        Ok(Self::reduce(num, den))
    }

    /// The substitution `t -> q t`, i.e. `v^2 -> q v^2`; requires even `v`.
    pub fn subst_t_qt(&self) -> Result<Self> {
        if !self.is_even_in_v() {
            return Err(Error::Parity("odd power of t^(1/2) under t -> qt".into()));
        }
        let f = |p: &IntPoly2| p.map_exps(|a, b| (a + b / 2, b));
        Ok(Self::reduce(f(&self.num), f(&self.den)))
    }

    /// Exact value at `q = 1, v = 1` after the caller has cancelled poles.
    pub fn eval_at_one(&self) -> Result<(BigInt, BigInt)> {
        let s = |p: &IntPoly2| p.terms().fold(BigInt::zero(), |acc, (_, c)| acc + c);
        let n = s(&self.num);
        let d = s(&self.den);
        if d.is_zero() {
            return Err(Error::Pole("denominator vanishes at q = t = 1".into()));
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / &g, d / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok((n, d))
    }

    /// Canonical text form.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let wrap = |p: &IntPoly2| {
            if p.len() == 1 && !p.render().starts_with('-') {
                p.render()
            } else {
                format!("({})", p.render())
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&CoeffField> for &CoeffField {
            type Output = CoeffField;
            fn $m(self, o: &CoeffField) -> CoeffField {
                self.$f(o)
            }
        }
        impl $tr<CoeffField> for CoeffField {
            type Output = CoeffField;
            fn $m(self, o: CoeffField) -> CoeffField {
                (&self).$f(&o)
            }
        }
        impl $tr<&CoeffField> for CoeffField {
            type Output = CoeffField;
            fn $m(self, o: &CoeffField) -> CoeffField {
                (&self).$f(o)
            }
        }
        impl $tr<CoeffField> for &CoeffField {
            type Output = CoeffField;
            fn $m(self, o: CoeffField) -> CoeffField {
                self.$f(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Div<&CoeffField> for &CoeffField {
    type Output = CoeffField;
    /// Panics on division by zero; use [`CoeffField::div_ref`] to handle it.
    fn div(self, o: &CoeffField) -> CoeffField {
        self.div_ref(o).expect("division by zero")
    }
}

impl Div<CoeffField> for CoeffField {
    type Output = CoeffField;
    fn div(self, o: CoeffField) -> CoeffField {
        &self / &o
    }
}

impl Neg for CoeffField {
    type Output = CoeffField;
    fn neg(self) -> CoeffField {
        self.neg_ref()
    }
}

impl Neg for &CoeffField {
    type Output = CoeffField;
    fn neg(self) -> CoeffField {
        self.neg_ref()
    }
}

impl From<i64> for CoeffField {
    fn from(c: i64) -> Self {
        CoeffField::int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: i64) -> CoeffField {
        CoeffField::int(x)
    }

    #[test]
    fn inverse_pair_is_one() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let a = (c(1) - &t) / (c(1) - &q * &t);
        let b = (c(1) - &q * &t) / (c(1) - &t);
        assert!((a * b).is_one());
    }

    #[test]
    fn bar_example() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let a = (c(1) - &t) / (c(1) - &q * &t);
        let expect = &q * &(&t - c(1)) / (&q * &t - c(1));
        assert_eq!(a.bar(), expect);
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn specializations() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let a = (c(1) - &t) / (c(1) - &q * &t);
        assert_eq!(a.specialize(ScalarSpec::QZero).unwrap(), c(1) - &t);
        assert_eq!(a.specialize(ScalarSpec::QEqT).unwrap(), c(1) / (c(1) + &t));
        let b = (c(1) - &t * &t) / (c(1) - &t);
        assert_eq!(b.specialize(ScalarSpec::TPowQ(1)).unwrap(), c(1) + &q);
        assert!(matches!(CoeffField::v().specialize(ScalarSpec::TPowQ(1)), Err(Error::Parity(_))));
        let pole = c(1) / (c(1) - &q * &t);
        assert!(matches!(pole.specialize(ScalarSpec::TPowQ(0)).map(|_| ()), Ok(())));
        let pole = c(1) / (&q - &t);
        assert!(matches!(pole.specialize(ScalarSpec::QEqT), Err(Error::Pole(_))));
    }

    #[test]
    fn canonical_sign() {
        let (q, t) = (CoeffField::q(), CoeffField::t());
        let a = (&t - c(1)) / (&q * &t - c(1));
        let b = (c(1) - &t) / (c(1) - &q * &t);
        assert_eq!(a, b);
        assert_eq!(a.render(), "(t - 1)/(q*t - 1)");
    }
}
