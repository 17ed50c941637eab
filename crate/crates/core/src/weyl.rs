//! Permutations, orders on compositions, box statistics, inversion sets and
//! Poincare polynomials.
//!
//! Positions and permutation values are 1-based throughout.

use std::cmp::Ordering;

use crate::algebra::CoeffField;
use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Argument(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The simple transposition `s_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The longest element `i -> n - i + 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &w) in self.images.iter().enumerate() {
            inv[w - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation { images: other.images.iter().map(|&i| self.images[i - 1]).collect() }
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Positional action: `(w mu)_{w(i)} = mu_i`.
    pub fn act(&self, mu: &[i32]) -> Vec<i32> {
        let mut r = vec![0; mu.len()];
        for (i, &m) in mu.iter().enumerate() {
            r[self.images[i] - 1] = m;
        }
        r
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for x in 1..=n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Lexicographically first reduced word `[a_1, ..., a_l]` with
    /// `w = s_{a_1} ... s_{a_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        let n = self.n();
        while w.length() > 0 {
            // Left descents of w: l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1).
            let inv = w.inverse();
            let i =
                (1..n).find(|&i| inv.apply(i) > inv.apply(i + 1)).expect("nonidentity permutation has a left descent");
            word.push(i);
            w = Permutation::simple(n, i).compose(&w);
        }
        word
    }

    /// Bruhat order via the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Self) -> bool {
        let n = self.n();
        if n != other.n() {
            return false;
        }
        for i in 1..=n {
            for j in 1..=n {
                let a = (0..i).filter(|&k| self.images[k] >= j).count();
                let b = (0..i).filter(|&k| other.images[k] >= j).count();
                if a > b {
                    return false;
                }
            }
        }
        true
    }

    pub fn bruhat_lt(&self, other: &Self) -> bool {
        self != other && self.bruhat_le(other)
    }
}

pub fn is_weakly_decreasing(l: &[i32]) -> bool {
    l.windows(2).all(|w| w[0] >= w[1])
}

pub fn check_decreasing(l: &[i32]) -> Result<()> {
    if is_weakly_decreasing(l) {
        Ok(())
    } else {
        Err(Error::Argument(format!("{l:?} is not weakly decreasing")))
    }
}

/// The minimal-length permutation sorting `mu` into weakly increasing order.
pub fn v_mu(mu: &[i32]) -> Permutation {
    let n = mu.len();
    let images = (0..n)
        .map(|r| 1 + (0..r).filter(|&s| mu[s] <= mu[r]).count() + (r + 1..n).filter(|&s| mu[s] < mu[r]).count())
        .collect();
    Permutation { images }
}

/// The decreasing rearrangement `mu^+` and the minimal `z` with `mu = z mu^+`.
pub fn z_mu(mu: &[i32]) -> (Vec<i32>, Permutation) {
    let n = mu.len();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps equal entries in place, which gives the minimal z.
    order.sort_by(|&a, &b| mu[b].cmp(&mu[a]));
    let lambda = order.iter().map(|&i| mu[i]).collect();
    let images = order.iter().map(|&i| i + 1).collect();
    (lambda, Permutation { images })
}

pub fn sorted_decreasing(mu: &[i32]) -> Vec<i32> {
    let mut l = mu.to_vec();
    l.sort_unstable_by(|a, b| b.cmp(a));
    l
}

/// Dominance order on sequences of equal sum (compares partial sums).
pub fn dominance_le(a: &[i32], b: &[i32]) -> bool {
    if a.len() != b.len() || a.iter().sum::<i32>() != b.iter().sum::<i32>() {
        return false;
    }
    let (mut sa, mut sb) = (0, 0);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa > sb {
            return false;
        }
    }
    true
}

/// Strict dominance-Bruhat order on compositions.
pub fn dblex_less(mu: &[i32], nu: &[i32]) -> bool {
    if mu.len() != nu.len() || mu.iter().sum::<i32>() != nu.iter().sum::<i32>() {
        return false;
    }
    let (lm, zm) = z_mu(mu);
    let (ln, zn) = z_mu(nu);
    if lm != ln {
        return dominance_le(&lm, &ln);
    }
    zm.bruhat_lt(&zn)
}

/// A total order extending [`dblex_less`]: degree, then `mu^+`
/// lexicographically, then `l(z_mu)`, then `z_mu` lexicographically.
pub fn dblex_total_cmp(mu: &[i32], nu: &[i32]) -> Ordering {
    let (lm, zm) = z_mu(mu);
    let (ln, zn) = z_mu(nu);
    mu.iter()
        .sum::<i32>()
        .cmp(&nu.iter().sum::<i32>())
        .then_with(|| lm.cmp(&ln))
        .then_with(|| zm.length().cmp(&zn.length()))
        .then_with(|| zm.images.cmp(&zn.images))
}

/// A box `(r, c)` of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Box {
    pub r: usize,
    pub c: usize,
}

/// All boxes of a composition with nonnegative entries, row by row.
pub fn boxes(mu: &[i32]) -> Vec<Box> {
    let mut out = Vec::new();
    for (r, &m) in mu.iter().enumerate() {
        for c in 1..=m.max(0) as usize {
            out.push(Box { r: r + 1, c });
        }
    }
    out
}

fn check_box(mu: &[i32], b: Box) -> Result<()> {
    if b.r == 0 || b.r > mu.len() || b.c == 0 || b.c as i64 > mu[b.r - 1] as i64 {
        return Err(Error::Argument(format!("box ({}, {}) not in {mu:?}", b.r, b.c)));
    }
    Ok(())
}

fn check_nonnegative(mu: &[i32]) -> Result<()> {
    if mu.iter().any(|&m| m < 0) {
        return Err(Error::Argument(format!("{mu:?} has a negative entry")));
    }
    Ok(())
}

/// `#{r' < r : mu_{r'} <= c-1} + #{r' > r : mu_{r'} < c-1}`.
pub fn u_mu_arm(mu: &[i32], b: Box) -> Result<usize> {
    check_nonnegative(mu)?;
    check_box(mu, b)?;
    let c1 = b.c as i32 - 1;
    let r = b.r - 1;
    Ok((0..r).filter(|&s| mu[s] <= c1).count() + (r + 1..mu.len()).filter(|&s| mu[s] < c1).count())
}

/// A finite set of affine pairs `(i, j + l n)`, stored as `(i, j, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InversionSet {
    pub n: usize,
    pub pairs: Vec<(usize, usize, u32)>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Inversions of the translation `t_lambda`: `(i, j, l)` with `i < j` and
/// `0 <= l <= lambda_i - lambda_j - 1`.
pub fn inv_t_lambda(lambda: &[i32]) -> Result<InversionSet> {
    check_decreasing(lambda)?;
    let n = lambda.len();
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for l in 0..(lambda[i - 1] - lambda[j - 1]) {
                pairs.push((i, j, l as u32));
            }
        }
    }
    Ok(InversionSet { n, pairs })
}

/// Inversions of the minimal creation word `u_mu`:
/// `(v_mu(r), i, mu_r - c + 1)` over boxes `(r, c)` and `1 <= i <= u_mu(r, c)`.
pub fn inv_u_mu(mu: &[i32]) -> Result<InversionSet> {
    check_nonnegative(mu)?;
    let v = v_mu(mu);
    let mut pairs = Vec::new();
    for b in boxes(mu) {
        let u = u_mu_arm(mu, b)?;
        for i in 1..=u {
            pairs.push((v.apply(b.r), i, (mu[b.r - 1] - b.c as i32 + 1) as u32));
        }
    }
    Ok(InversionSet { n: mu.len(), pairs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxStats {
    pub arm: i32,
    pub leg: i32,
    pub coarm: i32,
    pub coleg: i32,
    pub hook: i32,
    pub content: i32,
}

/// The conjugate partition, as a vector of column heights.
pub fn conjugate(lambda: &[i32]) -> Vec<i32> {
    let m = lambda.iter().copied().max().unwrap_or(0).max(0);
    (1..=m).map(|c| lambda.iter().filter(|&&l| l >= c).count() as i32).collect()
}

pub fn box_stats(lambda: &[i32], b: Box) -> Result<BoxStats> {
    check_decreasing(lambda)?;
    check_nonnegative(lambda)?;
    check_box(lambda, b)?;
    let conj = conjugate(lambda);
    let (r, c) = (b.r as i32, b.c as i32);
    let arm = lambda[b.r - 1] - c;
    let leg = conj[b.c - 1] - r;
    let coarm = c - 1;
    let coleg = r - 1;
    Ok(BoxStats { arm, leg, coarm, coleg, hook: arm + leg + 1, content: coarm - coleg })
}

/// `[m]_t = 1 + t + ... + t^{m-1}`.
pub fn t_integer(m: usize) -> CoeffField {
    (0..m).fold(CoeffField::zero(), |acc, k| acc + CoeffField::qv(0, 2 * k as i64))
}

/// `[m]_t!`.
pub fn t_factorial(m: usize) -> CoeffField {
    (1..=m).fold(CoeffField::one(), |acc, k| acc * t_integer(k))
}

/// `W_0(t) = [n]!`.
pub fn poincare_w0(n: usize) -> CoeffField {
    t_factorial(n)
}

/// Multiplicities of the distinct entries of `lambda`.
pub fn multiplicities(lambda: &[i32]) -> Vec<usize> {
    let mut s = lambda.to_vec();
    s.sort_unstable();
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let j = s[i..].iter().take_while(|&&x| x == s[i]).count();
        out.push(j);
        i += j;
    }
    out
}

/// `W_lambda(t) = prod_i [m_i]!` over the multiplicities of `lambda`.
pub fn poincare_wlambda(lambda: &[i32]) -> Result<CoeffField> {
    check_decreasing(lambda)?;
    Ok(multiplicities(lambda).into_iter().fold(CoeffField::one(), |acc, m| acc * t_factorial(m)))
}

/// `n(lambda) = sum_i (i - 1) lambda_i`.
pub fn n_of_lambda(lambda: &[i32]) -> i64 {
    lambda.iter().enumerate().map(|(i, &l)| i as i64 * l as i64).sum()
}

/// `rho = (n-1, ..., 1, 0)`.
pub fn rho(n: usize) -> Vec<i32> {
    (0..n as i32).rev().collect()
}

/// Distinct rearrangements of `lambda`, in lexicographic order.
pub fn rearrangements(lambda: &[i32]) -> Vec<Vec<i32>> {
    let mut s = lambda.to_vec();
    s.sort_unstable();
    let mut out = vec![s.clone()];
    // Standard next-permutation over a multiset.
    loop {
        let n = s.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| s[i] < s[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| s[j] > s[i]).unwrap();
        s.swap(i, j);
        s[i + 1..].reverse();
        out.push(s.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn v_mu_examples() {
        assert_eq!(v_mu(&[0, 0]), perm(&[1, 2]));
        assert_eq!(v_mu(&[1, 0]), perm(&[2, 1]));
        assert_eq!(v_mu(&[0, 1, 0]), perm(&[1, 3, 2]));
    }

    #[test]
    fn z_mu_examples() {
        assert_eq!(z_mu(&[3, 1, 2]), (vec![3, 2, 1], perm(&[1, 3, 2])));
        assert_eq!(z_mu(&[2, 2]), (vec![2, 2], perm(&[1, 2])));
        assert_eq!(z_mu(&[0, 5]), (vec![5, 0], perm(&[2, 1])));
    }

    #[test]
    fn dblex_examples() {
        assert!(dblex_less(&[1, 1], &[2, 0]));
        assert!(!dblex_less(&[0, 2], &[2, 0]));
        assert!(dblex_less(&[2, 0], &[0, 2]));
        assert!(!dblex_less(&[1, 2], &[1, 2]));
    }

    #[test]
    fn u_mu_examples() {
        assert_eq!(u_mu_arm(&[1, 0], Box { r: 1, c: 1 }).unwrap(), 0);
        assert_eq!(u_mu_arm(&[0, 1], Box { r: 2, c: 1 }).unwrap(), 1);
        assert_eq!(u_mu_arm(&[4], Box { r: 1, c: 3 }).unwrap(), 0);
        assert!(u_mu_arm(&[0, 1], Box { r: 1, c: 1 }).is_err());
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inv_t_lambda(&[1, 0]).unwrap().pairs, vec![(1, 2, 0)]);
        assert!(inv_t_lambda(&[0, 0]).unwrap().is_empty());
        assert!(inv_t_lambda(&[0, 1]).is_err());
        assert_eq!(inv_u_mu(&[0, 1]).unwrap().pairs, vec![(2, 1, 1)]);
    }

    #[test]
    fn box_stat_examples() {
        let s = box_stats(&[2, 1], Box { r: 1, c: 1 }).unwrap();
        assert_eq!((s.arm, s.leg, s.coarm, s.coleg, s.hook, s.content), (1, 1, 0, 0, 3, 0));
        let s = box_stats(&[2, 1], Box { r: 1, c: 2 }).unwrap();
        assert_eq!((s.arm, s.leg, s.coarm, s.coleg, s.hook, s.content), (0, 0, 1, 0, 1, 1));
        let s = box_stats(&[1], Box { r: 1, c: 1 }).unwrap();
        assert_eq!((s.arm, s.leg, s.hook, s.content), (0, 0, 1, 0));
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare_w0(2), CoeffField::one() + CoeffField::t());
        let l = [5, 5, 3, 2, 2, 2, 2, 2, -1, -1, -1];
        let expect = t_factorial(2) * t_factorial(1) * t_factorial(5) * t_factorial(3);
        assert_eq!(poincare_wlambda(&l).unwrap(), expect);
        assert_eq!(n_of_lambda(&[2, 1, 0]), 1);
    }

    #[test]
    fn reduced_words() {
        let w0 = Permutation::longest(3);
        let word = w0.reduced_word();
        assert_eq!(word.len(), 3);
        let prod = word.iter().fold(Permutation::identity(3), |acc, &i| acc.compose(&Permutation::simple(3, i)));
        assert_eq!(prod, w0);
    }
}
