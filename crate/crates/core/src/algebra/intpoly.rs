//! Polynomials in `q` and `v` with arbitrary-precision integer coefficients.
//!
//! `v` stands for `t^{1/2}`, so every half-integer power of `t` is an integer
//! power of `v`. Exponents are nonnegative; negative powers are handled one
//! level up by the fraction field.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in `Z[q, v]`, keyed by `(q-exponent, v-exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly2 {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }

    pub fn monomial(c: BigInt, qe: u32, ve: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, ve), c);
        }
        IntPoly2 { terms }
    }

    /// Builds a polynomial from `(q-exp, v-exp, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(it: I) -> Self {
        let mut p = IntPoly2::zero();
        for (a, b, c) in it {
            p.add_term(a, b, c);
        }
        p
    }

    fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a single term `c q^a v^b`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(q, v)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, qe: u32, ve: u32) -> BigInt {
        self.terms.get(&(qe, ve)).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(a, b), c) in &o.terms {
            r.add_term(a, b, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(a, b), c) in &o.terms {
            r.add_term(a, b, -c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        IntPoly2 { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IntPoly2::zero();
        }
        if o.is_monomial() {
            let (&(a, b), c) = o.terms.iter().next().unwrap();
            return self.shift(a, b).scale(c);
        }
        if self.is_monomial() {
            return o.mul(self);
        }
        let mut r = IntPoly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                r.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly2::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// Multiplies by `q^a v^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Divides by `q^a v^b`; every term must be divisible.
    pub fn unshift(&self, a: u32, b: u32) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(&(x, y), c)| ((x - a, y - b), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = IntPoly2::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    /// Smallest q- and v-exponents occurring (the monomial content).
    pub fn min_exps(&self) -> (u32, u32) {
        let mq = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let mv = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (mq, mv)
    }

    pub fn max_exps(&self) -> (u32, u32) {
        let mq = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let mv = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        (mq, mv)
    }

    /// Positive gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(k, x)| (*k, x / c)).collect() }
    }

    /// Leading term under graded-lex order with `q` before `v`.
    pub fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().max_by_key(|(&(a, b), _)| (a + b, a)).map(|(k, c)| (*k, c))
    }

    /// True when every v-exponent is even, i.e. the polynomial lies in `Z[q, t]`.
    pub fn is_even_in_v(&self) -> bool {
        self.terms.keys().all(|k| k.1 % 2 == 0)
    }

    /// Applies an exponent map `(a, b) -> (a', b')` to every term.
    pub fn map_exps(&self, f: impl Fn(u32, u32) -> (u32, u32)) -> Self {
        let mut r = IntPoly2::zero();
        for (&(a, b), c) in &self.terms {
            let (x, y) = f(a, b);
            r.add_term(x, y, c.clone());
        }
        r
    }

    /// `q^{dq} v^{dv} p(1/q, 1/v)` where `(dq, dv)` are the maximal exponents.
    pub fn reversed(&self) -> (Self, u32, u32) {
        let (dq, dv) = self.max_exps();
        (self.map_exps(|a, b| (dq - a, dv - b)), dq, dv)
    }

    /// Exact quotient, or `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly2::zero());
        }
        if o.is_monomial() {
            let (&(a, b), c) = o.terms.iter().next().unwrap();
            let mut r = BTreeMap::new();
            for (&(x, y), d) in &self.terms {
                if x < a || y < b {
                    return None;
                }
                let (quo, rem) = d.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                r.insert((x - a, y - b), quo);
            }
            return Some(IntPoly2 { terms: r });
        }
        let a = Dense::from_poly(self);
        let b = Dense::from_poly(o);
        bp_divexact(&a.rows, &b.rows).map(|rows| Dense { rows }.to_poly())
    }

    /// Greatest common divisor, normalized to a positive graded-lex leading
    /// coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        let (ma, na) = self.min_exps();
        let (mb, nb) = o.min_exps();
        let (mq, mv) = (ma.min(mb), na.min(nb));
        let a = self.unshift(ma, na);
        let b = o.unshift(mb, nb);
        let g = if a.is_monomial() || b.is_monomial() {
            IntPoly2::constant(a.content().gcd(&b.content()))
        } else if a == b {
            a.clone()
        } else {
            let ga = Dense::from_poly(&a);
            let gb = Dense::from_poly(&b);
            Dense { rows: bp_gcd(&ga.rows, &gb.rows) }.to_poly()
        };
        g.shift(mq, mv).normalize_sign()
    }

    /// Flips the sign so that the graded-lex leading coefficient is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Renders in the canonical text form: terms by `(q, v)` descending,
    /// `v` printed as `t^(1/2)` and `v^2` as `t`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(a, b);
            if mono.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&mag.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

fn render_monomial(a: u32, b: u32) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    if b > 0 {
        if b % 2 == 1 {
            parts.push(format!("t^({b}/2)"));
        } else if b == 2 {
            parts.push("t".to_string());
        } else {
            parts.push(format!("t^{}", b / 2));
        }
    }
    parts.join("*")
}

// Dense recursive form used by division and gcd: `rows[j]` is the coefficient
// of `v^j`, itself a dense polynomial in `q` (index = q-exponent).

type UPoly = Vec<BigInt>;

struct Dense {
    rows: Vec<UPoly>,
}

impl Dense {
    fn from_poly(p: &IntPoly2) -> Dense {
        let (_, dv) = p.max_exps();
        let mut rows: Vec<UPoly> = vec![Vec::new(); dv as usize + 1];
        for (&(a, b), c) in &p.terms {
            let row = &mut rows[b as usize];
            if row.len() <= a as usize {
                row.resize(a as usize + 1, BigInt::zero());
            }
            row[a as usize] = c.clone();
        }
        for r in rows.iter_mut() {
            up_trim(r);
        }
        bp_trim(&mut rows);
        Dense { rows }
    }

    fn to_poly(&self) -> IntPoly2 {
        let mut terms = BTreeMap::new();
        for (b, row) in self.rows.iter().enumerate() {
            for (a, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((a as u32, b as u32), c.clone());
                }
            }
        }
        IntPoly2 { terms }
    }
}

fn up_trim(a: &mut UPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn up_is_zero(a: &UPoly) -> bool {
    a.is_empty()
}

fn up_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        r.push(x - y);
    }
    up_trim(&mut r);
    r
}

fn up_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    up_trim(&mut r);
    r
}

fn up_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn up_divexact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quo = vec![BigInt::zero(); a.len() - db];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db];
        if c.is_zero() {
            continue;
        }
        let (qc, r) = c.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &qc * y;
        }
        quo[k] = qc;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    up_trim(&mut quo);
    Some(quo)
}

fn up_scale(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x * c).collect()
}

fn up_primpart(a: &UPoly) -> UPoly {
    let c = up_content(a);
    if c.is_zero() || c.is_one() {
        return a.clone();
    }
    let mut r: UPoly = a.iter().map(|x| x / &c).collect();
    if r.last().is_some_and(|x| x.is_negative()) {
        r = r.iter().map(|x| -x).collect();
    }
    r
}

fn up_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        up_trim(&mut r);
    }
    r
}

fn up_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if up_is_zero(a) {
        return up_primpart_signed(b, up_content(b));
    }
    if up_is_zero(b) {
        return up_primpart_signed(a, up_content(a));
    }
    let c = up_content(a).gcd(&up_content(b));
    let (mut x, mut y) =
        if a.len() >= b.len() { (up_primpart(a), up_primpart(b)) } else { (up_primpart(b), up_primpart(a)) };
    loop {
        if y.len() == 1 {
            return vec![c];
        }
        let r = up_prem(&x, &y);
        if r.is_empty() {
            return up_scale(&up_primpart(&y), &c);
        }
        x = y;
        y = up_primpart(&r);
    }
}

fn up_primpart_signed(a: &UPoly, c: BigInt) -> UPoly {
    let mut p = up_primpart(a);
    if !c.is_zero() {
        p = up_scale(&p, &c);
    }
    if p.last().is_some_and(|x| x.is_negative()) {
        p = p.iter().map(|x| -x).collect();
    }
    p
}

fn bp_trim(a: &mut Vec<UPoly>) {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
}

fn bp_divexact(a: &[UPoly], b: &[UPoly]) -> Option<Vec<UPoly>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem: Vec<UPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quo: Vec<UPoly> = vec![Vec::new(); a.len() - db];
    for k in (0..quo.len()).rev() {
        if rem[k + db].is_empty() {
            continue;
        }
        let qc = up_divexact(&rem[k + db], lb)?;
        for (j, y) in b.iter().enumerate() {
            if y.is_empty() {
                continue;
            }
            rem[k + j] = up_sub(&rem[k + j], &up_mul(&qc, y));
        }
        quo[k] = qc;
    }
    if rem.iter().any(|c| !c.is_empty()) {
        return None;
    }
    bp_trim(&mut quo);
    Some(quo)
}

fn bp_content(a: &[UPoly]) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = up_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bp_primpart(a: &[UPoly]) -> Vec<UPoly> {
    let c = bp_content(a);
    if c.len() == 1 && c[0].is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| up_divexact(x, &c).expect("content divides every coefficient")).collect()
}

fn bp_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let mut r: Vec<UPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = up_mul(x, lb);
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_empty() {
                continue;
            }
            r[shift + j] = up_sub(&r[shift + j], &up_mul(&lr, y));
        }
        bp_trim(&mut r);
    }
    r
}

fn bp_gcd(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let ca = bp_content(a);
    let cb = bp_content(b);
    let c = up_gcd(&ca, &cb);
    let (mut x, mut y) =
        if a.len() >= b.len() { (bp_primpart(a), bp_primpart(b)) } else { (bp_primpart(b), bp_primpart(a)) };
    loop {
        if y.len() == 1 {
            return vec![c];
        }
        let r = bp_prem(&x, &y);
        if r.is_empty() {
            return bp_primpart(&y).iter().map(|row| up_mul(row, &c)).collect();
        }
        x = y;
        y = bp_primpart(&r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ts: &[(u32, u32, i64)]) -> IntPoly2 {
        IntPoly2::from_terms(ts.iter().map(|&(a, b, c)| (a, b, BigInt::from(c))))
    }

    #[test]
    fn gcd_of_products() {
        // (1 - q v^2)(1 + q) and (1 - q v^2)(1 - v)
        let f = p(&[(0, 0, 1), (1, 2, -1)]);
        let a = f.mul(&p(&[(0, 0, 1), (1, 0, 1)]));
        let b = f.mul(&p(&[(0, 0, 1), (0, 1, -1)]));
        assert_eq!(a.gcd(&b), f.normalize_sign());
    }

    #[test]
    fn gcd_with_monomial_and_content() {
        let a = p(&[(2, 1, 6), (3, 1, 3)]);
        let b = p(&[(1, 3, 9)]);
        assert_eq!(a.gcd(&b), p(&[(1, 1, 3)]));
    }

    #[test]
    fn gcd_coprime() {
        let a = p(&[(0, 0, 1), (1, 2, -1)]);
        let b = p(&[(0, 0, 1), (0, 2, -1)]);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = p(&[(0, 0, 1), (1, 2, -1), (3, 1, 5)]);
        let b = p(&[(0, 0, 2), (2, 0, -1), (0, 3, 1)]);
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn render_is_descending() {
        let a = p(&[(0, 0, 1), (1, 2, -1), (0, 1, 3)]);
        assert_eq!(a.render(), "-q*t + 3*t^(1/2) + 1");
    }
}
