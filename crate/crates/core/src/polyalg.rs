//! Exact sparse polynomials and Laurent polynomials.
//!
//! One implementation, [`SparsePoly`], is parameterized by the exponent type
//! (`u32` for ordinary polynomials, `i32` for Laurent polynomials) and by the
//! coefficient ring. Terms are kept in graded lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` text form, integers without a denominator.
pub fn q_to_string(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSpace(Arc<Vec<String>>);

impl VarSpace {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        VarSpace(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// `prefix1, …, prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

pub trait Exponent:
    Copy + Ord + Eq + Hash + fmt::Debug + Default + Send + Sync + 'static
{
    fn to_i64(self) -> i64;
    fn from_i64(v: i64) -> Option<Self>;
}

impl Exponent for u32 {
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        u32::try_from(v).ok()
    }
}

impl Exponent for i32 {
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        i32::try_from(v).ok()
    }
}

pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Send
        + Sync
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<E>(pub Vec<E>);

impl<E: Exponent> Monomial<E> {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| e.to_i64()).sum()
    }
}

impl<E: Exponent> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<E: Exponent> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq)]
pub struct SparsePoly<E, C> {
    space: VarSpace,
    terms: BTreeMap<Monomial<E>, C>,
}

pub type Poly = SparsePoly<u32, Q>;
pub type LaurentPoly = SparsePoly<i32, Q>;

impl<E: Exponent, C: Coeff> SparsePoly<E, C> {
    pub fn zero(space: &VarSpace) -> Self {
        SparsePoly { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(space: &VarSpace, c: C) -> Self {
        let mut p = Self::zero(space);
        p.add_term(vec![E::default(); space.len()], c);
        p
    }

    pub fn one(space: &VarSpace) -> Self {
        Self::constant(space, C::one())
    }

    /// The variable with index `i` (0-based).
    pub fn var(space: &VarSpace, i: usize) -> Self {
        let mut e = vec![E::default(); space.len()];
        e[i] = E::from_i64(1).unwrap();
        Self::monomial(space, e, C::one())
    }

    pub fn monomial(space: &VarSpace, exps: Vec<E>, c: C) -> Self {
        assert_eq!(exps.len(), space.len(), "exponent vector length");
        let mut p = Self::zero(space);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(space: &VarSpace, terms: impl IntoIterator<Item = (Vec<E>, C)>) -> Self {
        let mut p = Self::zero(space);
        for (e, c) in terms {
            assert_eq!(e.len(), space.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c·x^e` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Vec<E>, c: C) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn space(&self) -> &VarSpace {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[E], &C)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[E]) -> C {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&[E], &C)> {
        self.terms.iter().next_back().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Degree of the homogeneous polynomial, `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn homogeneous_part(&self, d: i64) -> Self {
        SparsePoly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::VarSpaceMismatch(
                self.space.names().join(","),
                other.space.names().join(","),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let n = self.space.len();
        let mut acc: HashMap<Vec<E>, C> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e: Vec<E> = (0..n)
                    .map(|i| {
                        E::from_i64(ma.0[i].to_i64() + mb.0[i].to_i64())
                            .expect("exponent overflow")
                    })
                    .collect();
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&e) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Ok(SparsePoly {
            space: self.space.clone(),
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (Monomial(e), c))
                .collect(),
        })
    }

    pub fn neg_ref(&self) -> Self {
        SparsePoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(&self.space);
        }
        SparsePoly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.space);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Composition: every variable occurring in `self` is replaced by its
    /// assigned expression. Negative exponents are only allowed when the
    /// assigned expression is a single term.
    pub fn substitute<E2: Exponent>(
        &self,
        assignment: &BTreeMap<String, SparsePoly<E2, C>>,
        target: &VarSpace,
    ) -> Result<SparsePoly<E2, C>> {
        let n = self.space.len();
        let mut images: Vec<Option<&SparsePoly<E2, C>>> = vec![None; n];
        for i in 0..n {
            if let Some(p) = assignment.get(self.space.name(i)) {
                if p.space() != target {
                    return Err(Error::VarSpaceMismatch(
                        p.space().names().join(","),
                        target.names().join(","),
                    ));
                }
                images[i] = Some(p);
            }
        }
        let mut out = SparsePoly::<E2, C>::zero(target);
        let mut cache: HashMap<(usize, i64), SparsePoly<E2, C>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = SparsePoly::<E2, C>::constant(target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                let e = e.to_i64();
                if e == 0 {
                    continue;
                }
                let img = images[i].ok_or_else(|| Error::Unassigned(self.space.name(i).to_string()))?;
                let f = match cache.get(&(i, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = if e > 0 {
                            img.pow(e as u32)
                        } else {
                            img.inverse_monomial()?.pow((-e) as u32)
                        };
                        cache.insert((i, e), f.clone());
                        f
                    }
                };
                t = &t * &f;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    fn inverse_monomial(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::Invalid("negative power of a non-monomial".into()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if *c != C::one() && *c != -C::one() {
            return Err(Error::Invalid("negative power needs a unit coefficient".into()));
        }
        let e = m
            .0
            .iter()
            .map(|x| E::from_i64(-x.to_i64()).ok_or_else(|| Error::Invalid("exponent domain".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::monomial(&self.space, e, c.clone()))
    }

    /// Applies a linear change of variables: variable `i` ↦ `images[i]`.
    pub fn compose(&self, images: &[SparsePoly<E, C>]) -> Result<Self> {
        let target = images
            .first()
            .map(|p| p.space.clone())
            .unwrap_or_else(|| self.space.clone());
        let assignment: BTreeMap<String, Self> = self
            .space
            .names()
            .iter()
            .cloned()
            .zip(images.iter().cloned())
            .collect();
        self.substitute(&assignment, &target)
    }

    /// Reinterprets the polynomial in a space with the same number of variables.
    pub fn rename(&self, space: &VarSpace) -> Self {
        assert_eq!(space.len(), self.space.len());
        SparsePoly { space: space.clone(), terms: self.terms.clone() }
    }

    pub fn map_coeffs<C2: Coeff>(&self, f: impl Fn(&C) -> C2) -> SparsePoly<E, C2> {
        let mut out = SparsePoly::<E, C2>::zero(&self.space);
        for (m, c) in &self.terms {
            out.add_term(m.0.clone(), f(c));
        }
        out
    }
}

impl<E: Exponent> SparsePoly<E, Q> {
    pub fn eval(&self, point: &[Q]) -> Q {
        let mut s = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                let e = e.to_i64();
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                } else if e < 0 {
                    t /= num_traits::pow(point[i].clone(), (-e) as usize);
                }
            }
            s += t;
        }
        s
    }

    /// Canonical text form, terms from the highest monomial down.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.mono_text(&m.0);
            if mono.is_empty() {
                out.push_str(&q_to_string(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&q_to_string(&a));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    fn mono_text(&self, e: &[E]) -> String {
        let mut parts = Vec::new();
        for (i, x) in e.iter().enumerate() {
            let x = x.to_i64();
            if x == 0 {
                continue;
            }
            if x == 1 {
                parts.push(self.space.name(i).to_string());
            } else {
                parts.push(format!("{}^{}", self.space.name(i), x));
            }
        }
        parts.join("*")
    }

    /// Parses the canonical text form (and any reordering of it).
    pub fn parse(s: &str, space: &VarSpace) -> Result<Self> {
        let mut p = Self::zero(space);
        let s = s.trim();
        if s == "0" {
            return Ok(p);
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') && !cur.trim().is_empty() {
                chunks.push((sign, std::mem::take(&mut cur)));
                sign = ch == '-';
            } else if (ch == '+' || ch == '-') && prev != Some('^') {
                if ch == '-' {
                    sign = !sign;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        chunks.push((sign, cur));
        for (neg, body) in chunks {
            let body = body.trim();
            if body.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut c = Q::one();
            let mut e = vec![E::default(); space.len()];
            for f in body.split('*') {
                let f = f.trim();
                if f.starts_with(|ch: char| ch.is_ascii_digit()) {
                    c *= parse_q(f)?;
                    continue;
                }
                let (name, pw) = match f.split_once('^') {
                    Some((n, p)) => (
                        n,
                        p.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {f:?}")))?,
                    ),
                    None => (f, 1),
                };
                let i = space
                    .index_of(name.trim())
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                e[i] = E::from_i64(e[i].to_i64() + pw)
                    .ok_or_else(|| Error::Parse(format!("exponent out of domain in {f:?}")))?;
            }
            p.add_term(e, if neg { -c } else { c });
        }
        Ok(p)
    }
}

impl<E: Exponent> fmt::Display for SparsePoly<E, Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<E: Exponent, C: Coeff> fmt::Debug for SparsePoly<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| (&m.0, c)))
            .finish()
    }
}

// Operator forms panic on mismatched spaces; use the checked_* methods when
// the spaces are not known to agree.
impl<'a, E: Exponent, C: Coeff> Add<&'a SparsePoly<E, C>> for &'a SparsePoly<E, C> {
    type Output = SparsePoly<E, C>;
    fn add(self, rhs: Self) -> SparsePoly<E, C> {
        self.checked_add(rhs).unwrap()
    }
}

impl<'a, E: Exponent, C: Coeff> Sub<&'a SparsePoly<E, C>> for &'a SparsePoly<E, C> {
    type Output = SparsePoly<E, C>;
    fn sub(self, rhs: Self) -> SparsePoly<E, C> {
        self.checked_sub(rhs).unwrap()
    }
}

impl<'a, E: Exponent, C: Coeff> Mul<&'a SparsePoly<E, C>> for &'a SparsePoly<E, C> {
    type Output = SparsePoly<E, C>;
    fn mul(self, rhs: Self) -> SparsePoly<E, C> {
        self.checked_mul(rhs).unwrap()
    }
}

impl<E: Exponent, C: Coeff> Neg for &SparsePoly<E, C> {
    type Output = SparsePoly<E, C>;
    fn neg(self) -> SparsePoly<E, C> {
        self.neg_ref()
    }
}

/// `e_i` of the given expressions; `e_0 = 1`.
pub fn elementary_symmetric<E: Exponent, C: Coeff>(
    i: usize,
    args: &[SparsePoly<E, C>],
    space: &VarSpace,
) -> Result<SparsePoly<E, C>> {
    if i > args.len() {
        return Err(Error::Invalid(format!("e_{i} of {} arguments", args.len())));
    }
    // e[j] after processing a prefix of args
    let mut e = vec![SparsePoly::<E, C>::zero(space); i + 1];
    e[0] = SparsePoly::one(space);
    for a in args {
        for j in (1..=i).rev() {
            let t = &e[j - 1] * a;
            e[j] = &e[j] + &t;
        }
    }
    Ok(e.pop().unwrap())
}

/// `Σ_j args_j^m`.
pub fn power_sum<E: Exponent, C: Coeff>(
    m: u32,
    args: &[SparsePoly<E, C>],
    space: &VarSpace,
) -> SparsePoly<E, C> {
    args.iter()
        .fold(SparsePoly::zero(space), |acc, a| &acc + &a.pow(m))
}

/// Linear form `Σ c_i v_i` in the variables of `space`.
pub fn linear_form(space: &VarSpace, coeffs: &[Q]) -> Poly {
    let mut p = Poly::zero(space);
    for (i, c) in coeffs.iter().enumerate() {
        let mut e = vec![0u32; space.len()];
        e[i] = 1;
        p.add_term(e, c.clone());
    }
    p
}
