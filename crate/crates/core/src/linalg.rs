//! Exact dense linear algebra over ℚ and 𝔽₂.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::polyalg::Q;

pub trait Field:
    Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn inv(&self) -> Self;
    /// Image of an integer.
    fn from_i64(n: i64) -> Self;
    fn to_text(&self) -> String;
    /// Image in `𝔽_p`, `p = FP_MODULUS`, when the characteristic is zero
    /// and the denominator is prime to `p`.
    fn to_fp(&self) -> Option<Fp> {
        None
    }
}

impl Field for Q {
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        crate::polyalg::q(n)
    }
    fn to_text(&self) -> String {
        crate::polyalg::q_to_string(self)
    }
    fn to_fp(&self) -> Option<Fp> {
        use num_traits::ToPrimitive;
        let m = num_bigint::BigInt::from(FP_MODULUS);
        let reduce = |x: &num_bigint::BigInt| ((x % &m + &m) % &m).to_u64();
        let num = Fp(reduce(self.numer())?);
        let den = Fp(reduce(self.denom())?);
        (!den.is_zero()).then(|| num * den.inv())
    }
}

pub const FP_MODULUS: u64 = 2_147_483_647;

/// The prime field of order `FP_MODULUS`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(pub u64);

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        Fp((self.0 + o.0) % FP_MODULUS)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        Fp((self.0 + FP_MODULUS - o.0) % FP_MODULUS)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        Fp(self.0 * o.0 % FP_MODULUS)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp((FP_MODULUS - self.0) % FP_MODULUS)
    }
}

impl Zero for Fp {
    fn zero() -> Fp {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Fp {
        Fp(1)
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat
        let (mut base, mut e, mut acc) = (*self, FP_MODULUS - 2, Fp(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(FP_MODULUS as i64) as u64)
    }
    fn to_text(&self) -> String {
        self.0.to_string()
    }
    fn to_fp(&self) -> Option<Fp> {
        Some(*self)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F2(pub bool);

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

impl Add for F2 {
    type Output = F2;
    fn add(self, o: F2) -> F2 {
        F2(self.0 ^ o.0)
    }
}

impl Sub for F2 {
    type Output = F2;
    fn sub(self, o: F2) -> F2 {
        F2(self.0 ^ o.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    fn mul(self, o: F2) -> F2 {
        F2(self.0 & o.0)
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Zero for F2 {
    fn zero() -> F2 {
        F2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for F2 {
    fn one() -> F2 {
        F2(true)
    }
}

impl Field for F2 {
    fn inv(&self) -> Self {
        assert!(self.0, "inverse of zero");
        *self
    }
    fn from_i64(n: i64) -> Self {
        F2(n.rem_euclid(2) == 1)
    }
    fn to_text(&self) -> String {
        (self.0 as u8).to_string()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = x.clone() - f.clone() * p.clone();
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / a[c][c].clone();
            for j in c..n {
                let t = f.clone() * a[c][j].clone();
                a[i][j] -= t;
            }
        }
    }
    det
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `m x = b` for square invertible `m`.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let inv = inverse(m)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(b).map(|(a, x)| a.clone() * x.clone()).sum())
            .collect(),
    )
}
