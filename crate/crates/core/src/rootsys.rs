//! Root data and Weyl groups in Bourbaki labeling.
//!
//! Cartan entries are `cartan[i][j] = <α_i^∨, α_j>`. Weights are stored in
//! fundamental-weight coordinates, roots in simple-root coordinates. Words
//! use 1-based reflection indices.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyalg::{q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!("{family:?}{rank}")));
        }
        Ok(CartanType { family, rank })
    }

    /// Degrees of the basic invariants.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort();
                d
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut ch = s.chars();
        let family = match ch.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = ch.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match t.family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    match t.family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    /// ω_i in simple-root coordinates (row i).
    pub fundamental_weights: Vec<Vec<Q>>,
    /// `d_i = (α_i, α_i)/2`, normalized so the short roots have 1.
    pub symmetrizer: Vec<i64>,
    /// `<ω_i, β^∨>` for every positive root β (row per root).
    pub coroots: Vec<Vec<i64>>,
    /// Positive roots in ω-coordinates.
    pub roots_omega: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Integer row vector whose pairing with the ω-coordinates of a root
    /// is a positive multiple of its height.
    height_form: Vec<i64>,
}

pub fn build_root_datum(t: CartanType) -> RootDatum {
    let n = t.rank;
    let cartan = cartan_matrix(t);

    let mut dq: Vec<Option<Q>> = vec![None; n];
    dq[0] = Some(q(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if dq[j].is_none() && cartan[i][j] != 0 {
                // d_i a_ij = d_j a_ji
                dq[j] = Some(dq[i].clone().unwrap() * crate::polyalg::qr(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let dq: Vec<Q> = dq.into_iter().map(|x| x.expect("connected diagram")).collect();
    let l = dq.iter().fold(num_bigint::BigInt::one(), |a, x| num_integer::lcm(a, x.denom().clone()));
    let ints: Vec<i64> = dq
        .iter()
        .map(|x| i64::try_from((x * Q::from_integer(l.clone())).to_integer()).unwrap())
        .collect();
    let g = ints.iter().copied().fold(0, num_integer::gcd);
    let symm: Vec<i64> = ints.iter().map(|x| x / g).collect();

    // root strings: β + α_i is a root iff q > 0 where q = p - <β, α_i^∨>
    let pair = |beta: &[i64], i: usize| -> i64 { (0..n).map(|j| beta[j] * cartan[i][j]).sum() };
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut set: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if set.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair(beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let norm = |beta: &[i64]| -> i64 {
        // (β,β)/2 = Σ c_i c_j d_i a_ij / 2
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta[i] * beta[j] * symm[i] * cartan[i][j];
            }
        }
        s / 2
    };
    let coroots: Vec<Vec<i64>> = roots
        .iter()
        .map(|b| {
            let nb = norm(b);
            (0..n)
                .map(|i| {
                    assert_eq!((b[i] * symm[i]) % nb, 0);
                    b[i] * symm[i] / nb
                })
                .collect()
        })
        .collect();
    let roots_omega: Vec<Vec<i64>> = roots
        .iter()
        .map(|b| (0..n).map(|i| pair(b, i)).collect())
        .collect();

    let aq: Vec<Vec<Q>> = cartan
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let inv = linalg::inverse(&aq).expect("Cartan matrix is invertible");
    // ω-coords = A·(α-coords), so α-coords of ω_i are column i of A^{-1}
    let fundamental_weights: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| inv[j][i].clone()).collect())
        .collect();
    let det = linalg::determinant(&aq);
    let height_form: Vec<i64> = (0..n)
        .map(|j| {
            let s: Q = (0..n).map(|i| inv[i][j].clone()).sum::<Q>() * det.clone();
            assert!(s.is_integer());
            i64::try_from(s.to_integer()).unwrap()
        })
        .collect();
    let root_index = roots_omega
        .iter()
        .enumerate()
        .map(|(k, r)| (r.clone(), k))
        .collect();

    RootDatum {
        cartan_type: t,
        cartan,
        positive_roots: roots,
        fundamental_weights,
        symmetrizer: symm,
        coroots,
        roots_omega,
        root_index,
        height_form,
    }
}

impl RootDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(build_root_datum(CartanType::new(family, rank)?))
    }

    pub fn from_label(s: &str) -> Result<Self> {
        Ok(build_root_datum(s.parse()?))
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// ω-coordinates of the simple root α_i (0-based).
    pub fn simple_root_omega(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| self.cartan[j][i]).collect()
    }

    /// ω-coordinates of a vector given in simple-root coordinates.
    pub fn alpha_to_omega(&self, c: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.cartan[i][j] * c[j]).sum()).collect()
    }

    /// `s_i(v) = v - <v, α_i^∨> α_i` on ω-coordinates; `i` is 1-based.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Result<Vec<i64>> {
        self.check_index(i)?;
        Ok(self.reflect0(i - 1, v))
    }

    pub(crate) fn reflect0(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = v[i];
        let mut out = v.to_vec();
        if c != 0 {
            for (j, o) in out.iter_mut().enumerate() {
                *o -= c * self.cartan[j][i];
            }
        }
        out
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(())
    }

    /// Sign of a root given in ω-coordinates.
    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        let h: i64 = v.iter().zip(&self.height_form).map(|(a, b)| a * b).sum();
        h > 0
    }

    /// Index of a root (either sign) in `positive_roots`, with its sign.
    pub fn root_position(&self, v: &[i64]) -> Option<(usize, bool)> {
        if let Some(&k) = self.root_index.get(v) {
            return Some((k, true));
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.get(&neg).map(|&k| (k, false))
    }

    /// Invariant form on ω-coordinates: `(x, y) = Σ_i (x)_α,i d_i y_i`.
    pub fn inner(&self, x: &[Q], y: &[Q]) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            // α-coordinate i of x
            let xa: Q = (0..n)
                .map(|k| x[k].clone() * self.fundamental_weights[k][i].clone())
                .sum();
            s += xa * q(self.symmetrizer[i]) * y[i].clone();
        }
        s
    }

    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> Q {
        let mut num = Q::one();
        for cr in &self.coroots {
            let a: i64 = cr.iter().zip(lambda).map(|(c, l)| c * (l + 1)).sum();
            let b: i64 = cr.iter().sum();
            num *= crate::polyalg::qr(a, b);
        }
        num
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut action = vec![0i64; n * n];
        for i in 0..n {
            action[i * n + i] = 1;
        }
        WeylElement { action, length: 0, word: vec![] }
    }

    /// The element `s_{w1} s_{w2} ⋯` (1-based word, not necessarily reduced).
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let n = self.rank();
        let mut m = self.identity().action;
        for &i in word.iter().rev() {
            self.check_index(i)?;
            // left multiply by s_i: new = s_i ∘ m, acts column by column
            for col in 0..n {
                let v: Vec<i64> = (0..n).map(|r| m[r * n + col]).collect();
                let w = self.reflect0(i - 1, &v);
                for r in 0..n {
                    m[r * n + col] = w[r];
                }
            }
        }
        Ok(self.element_from_action(m))
    }

    pub fn element_from_action(&self, action: Vec<i64>) -> WeylElement {
        let n = self.rank();
        let wrho: Vec<i64> = (0..n).map(|r| (0..n).map(|c| action[r * n + c]).sum()).collect();
        let word = self.canonical_word_from_rho(&wrho);
        WeylElement { length: word.len(), action, word }
    }

    /// Lexicographically smallest reduced word of the element with `wρ = v`:
    /// peel off the smallest left descent each time.
    pub fn canonical_word_from_rho(&self, v: &[i64]) -> Vec<usize> {
        let mut u = v.to_vec();
        let mut word = Vec::new();
        while let Some(i) = u.iter().position(|&x| x < 0) {
            word.push(i + 1);
            u = self.reflect0(i, &u);
        }
        word
    }

    /// Length computed as the number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.roots_omega
            .iter()
            .filter(|b| !self.is_positive_root(&w.apply(b)))
            .count()
    }

    /// Elements of length ≤ `max_length`, grouped by length, each group
    /// sorted by canonical word.
    pub fn enumerate_weyl(&self, max_length: usize) -> Vec<Vec<WeylElement>> {
        self.enumerate_filtered(max_length, |_| true)
    }

    fn enumerate_filtered(
        &self,
        max_length: usize,
        keep: impl Fn(&WeylElement) -> bool + Sync,
    ) -> Vec<Vec<WeylElement>> {
        let n = self.rank();
        let mut levels = vec![vec![self.identity()]];
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(self.identity().action);
        for _ in 0..max_length {
            let cur = levels.last().unwrap();
            let cand: Vec<WeylElement> = cur
                .par_iter()
                .flat_map_iter(|w| {
                    let wrho = w.apply(&self.rho());
                    (0..n)
                        .filter(move |&i| wrho[i] > 0)
                        .map(|i| w.left_mul(self, i))
                        .filter(|x| keep(x))
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut next = Vec::new();
            for x in cand {
                if seen.insert(x.action.clone()) {
                    next.push(x);
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by(|a, b| a.word.cmp(&b.word));
            levels.push(next);
        }
        levels
    }

    pub fn longest_length(&self) -> usize {
        self.num_positive_roots()
    }

    /// Minimal coset representatives for the Levi obtained by removing the
    /// 1-based nodes in `removed`.
    pub fn minimal_coset_reps(&self, removed: &[usize], max_length: usize) -> Result<CosetSystem> {
        for &r in removed {
            self.check_index(r)?;
        }
        let levi: Vec<usize> = (1..=self.rank()).filter(|j| !removed.contains(j)).collect();
        let levels = self.enumerate_filtered(max_length, |w| self.is_min_rep(w, &levi));
        Ok(CosetSystem {
            parabolic_node_set: removed.to_vec(),
            reps: levels.into_iter().flatten().collect(),
        })
    }

    /// `w(α_j) > 0` for all Levi simple roots `α_j`.
    pub fn is_min_rep(&self, w: &WeylElement, levi: &[usize]) -> bool {
        levi.iter()
            .all(|&j| self.is_positive_root(&w.apply(&self.simple_root_omega(j - 1))))
    }

    /// Order of the Weyl group of the Levi with the given 1-based nodes.
    pub fn levi_weyl_order(&self, levi: &[usize]) -> u128 {
        components(&self.cartan, levi)
            .iter()
            .map(|c| {
                let sub = sub_cartan_type(&self.cartan, c);
                weyl_order(sub)
            })
            .product()
    }

    pub fn weyl_order(&self) -> u128 {
        weyl_order(self.cartan_type)
    }

    /// Fundamental degrees of the Levi Weyl group, one `1` per central
    /// direction, sorted.
    pub fn levi_degrees(&self, levi: &[usize]) -> Vec<usize> {
        let mut out = vec![1; self.rank() - levi.len()];
        for c in components(&self.cartan, levi) {
            out.extend(sub_cartan_type(&self.cartan, &c).degrees());
        }
        out.sort();
        out
    }

    /// Every element of the Levi Weyl group generated by the given 1-based
    /// simple reflections.
    pub fn levi_elements(&self, levi: &[usize]) -> Vec<WeylElement> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(self.identity().action);
        let mut all = vec![self.identity()];
        let mut frontier = vec![self.identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for &j in levi {
                    let x = w.left_mul(self, j - 1);
                    if seen.insert(x.action.clone()) {
                        next.push(x);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Coefficients of the Poincaré polynomial by direct enumeration.
    pub fn poincare_polynomial(&self) -> Vec<u64> {
        self.enumerate_weyl(self.longest_length())
            .iter()
            .map(|l| l.len() as u64)
            .collect()
    }
}

/// `Π_i [d_i]_q` for the degrees of the type.
pub fn poincare_product(t: CartanType) -> Vec<u64> {
    let mut p = vec![1u64];
    for d in t.degrees() {
        let mut out = vec![0u64; p.len() + d - 1];
        for (i, c) in p.iter().enumerate() {
            for k in 0..d {
                out[i + k] += c;
            }
        }
        p = out;
    }
    p
}

pub fn weyl_order(t: CartanType) -> u128 {
    t.degrees().iter().map(|&d| d as u128).product()
}

/// Connected components of the Dynkin subdiagram on the given nodes.
pub fn components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = nodes.to_vec();
    let mut out = Vec::new();
    while let Some(s) = left.pop() {
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            let (nb, rest): (Vec<usize>, Vec<usize>) =
                left.iter().partition(|&&b| cartan[a - 1][b - 1] != 0);
            left = rest;
            comp.extend(nb);
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out.sort();
    out
}

/// Identifies a connected Dynkin subdiagram by its node count, bond data and
/// branching.
pub fn sub_cartan_type(cartan: &[Vec<i64>], comp: &[usize]) -> CartanType {
    let n = comp.len();
    let mut max_bond = 1;
    let mut max_deg = 0;
    for &a in comp {
        let mut deg = 0;
        for &b in comp {
            if a != b && cartan[a - 1][b - 1] != 0 {
                deg += 1;
                max_bond = max_bond.max(cartan[a - 1][b - 1] * cartan[b - 1][a - 1]);
            }
        }
        max_deg = max_deg.max(deg);
    }
    let family = match (max_bond, max_deg, n) {
        (3, _, _) => Family::G,
        (2, _, 4) if comp_is_f4(cartan, comp) => Family::F,
        (2, _, _) => Family::B,
        (1, 3, _) => {
            // D_n has a branch node with two leaf neighbours
            let branch = comp
                .iter()
                .find(|&&a| comp.iter().filter(|&&b| a != b && cartan[a - 1][b - 1] != 0).count() == 3)
                .copied()
                .unwrap();
            let leaves = comp
                .iter()
                .filter(|&&b| b != branch && cartan[branch - 1][b - 1] != 0)
                .filter(|&&b| comp.iter().filter(|&&c| c != b && cartan[b - 1][c - 1] != 0).count() == 1)
                .count();
            if leaves >= 2 {
                Family::D
            } else {
                Family::E
            }
        }
        _ => Family::A,
    };
    CartanType { family, rank: n }
}

fn comp_is_f4(cartan: &[Vec<i64>], comp: &[usize]) -> bool {
    // the double bond sits in the middle of the chain
    comp.iter().any(|&a| {
        let nbrs: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&b| a != b && cartan[a - 1][b - 1] != 0)
            .collect();
        nbrs.len() == 2
            && nbrs.iter().any(|&b| cartan[a - 1][b - 1] * cartan[b - 1][a - 1] == 2)
            && nbrs.iter().any(|&b| {
                comp.iter()
                    .filter(|&&c| c != b && cartan[b - 1][c - 1] != 0)
                    .count()
                    == 2
                    && cartan[a - 1][b - 1] * cartan[b - 1][a - 1] == 2
            })
    })
}

/// A Weyl group element, compared and hashed by its action matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeylElement {
    /// Row-major action on ω-coordinates: column j is `w(ω_j)`.
    pub action: Vec<i64>,
    pub length: usize,
    pub word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.action.hash(state)
    }
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        (self.action.len() as f64).sqrt() as usize
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = v.len();
        (0..n)
            .map(|r| (0..n).map(|c| self.action[r * n + c] * v[c]).sum())
            .collect()
    }

    pub fn apply_q(&self, v: &[Q]) -> Vec<Q> {
        let n = v.len();
        (0..n)
            .map(|r| (0..n).map(|c| q(self.action[r * n + c]) * v[c].clone()).sum())
            .collect()
    }

    /// `s_i w` for 0-based `i`.
    pub fn left_mul(&self, d: &RootDatum, i: usize) -> WeylElement {
        let n = d.rank();
        let mut m = self.action.clone();
        for col in 0..n {
            if m[i * n + col] == 0 {
                continue;
            }
            let c = m[i * n + col];
            for r in 0..n {
                m[r * n + col] -= c * d.cartan[r][i];
            }
        }
        d.element_from_action(m)
    }

    pub fn compose(&self, d: &RootDatum, other: &WeylElement) -> WeylElement {
        let n = d.rank();
        let mut m = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n).map(|k| self.action[r * n + k] * other.action[k * n + c]).sum();
            }
        }
        d.element_from_action(m)
    }

    pub fn inverse(&self, d: &RootDatum) -> WeylElement {
        let mut w: Vec<usize> = self.word.clone();
        w.reverse();
        d.element_from_word(&w).unwrap()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

#[derive(Clone, Debug)]
pub struct CosetSystem {
    pub parabolic_node_set: Vec<usize>,
    pub reps: Vec<WeylElement>,
}

/// Signed-permutation model of `W(D_n)`: the element `s_i` acting on the
/// diagonal coordinates `δ_1..δ_n`. Returns (target index, sign) per
/// coordinate, 0-based.
pub fn dn_signed_reflection(n: usize, i: usize) -> Vec<(usize, i64)> {
    let mut p: Vec<(usize, i64)> = (0..n).map(|k| (k, 1)).collect();
    if i < n {
        p.swap(i - 1, i);
    } else {
        p[n - 2] = (n - 1, -1);
        p[n - 1] = (n - 2, -1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_types() {
        let a1 = RootDatum::new(Family::A, 1).unwrap();
        assert_eq!(a1.cartan, vec![vec![2]]);
        assert_eq!(a1.positive_roots, vec![vec![1]]);
        let g2 = RootDatum::new(Family::G, 2).unwrap();
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.cartan[0][1] * g2.cartan[1][0], 3);
        let d4 = RootDatum::new(Family::D, 4).unwrap();
        assert_eq!(d4.num_positive_roots(), 12);
        assert_eq!(d4.enumerate_weyl(12).iter().map(|l| l.len()).sum::<usize>(), 192);
        assert!(CartanType::new(Family::G, 3).is_err());
        assert!("E9".parse::<CartanType>().is_err());
    }

    #[test]
    fn root_counts() {
        for (s, n) in [("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("B3", 9), ("C3", 9)] {
            assert_eq!(RootDatum::from_label(s).unwrap().num_positive_roots(), n, "{s}");
        }
    }

    #[test]
    fn g2_reflections() {
        let g2 = RootDatum::from_label("G2").unwrap();
        // x1 = ω1, x2 = ω2 - ω1
        assert_eq!(g2.reflect(1, &[1, 0]).unwrap(), vec![-1, 1]);
        assert_eq!(g2.reflect(2, &[-1, 1]).unwrap(), vec![2, -1]);
        assert!(g2.reflect(3, &[0, 0]).is_err());
    }

    #[test]
    fn fundamental_weights_invert_cartan() {
        for s in ["B3", "F4", "E6", "G2"] {
            let d = RootDatum::from_label(s).unwrap();
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    let v: Q = (0..n)
                        .map(|k| d.fundamental_weights[i][k].clone() * q(d.cartan[j][k]))
                        .sum();
                    assert_eq!(v, if i == j { q(1) } else { q(0) });
                }
            }
        }
    }

    #[test]
    fn levi_orders() {
        let e7 = RootDatum::from_label("E7").unwrap();
        assert_eq!(e7.levi_weyl_order(&[1, 2, 3, 4, 5, 6]), 51840);
        let f4 = RootDatum::from_label("F4").unwrap();
        assert_eq!(f4.levi_weyl_order(&[2, 3, 4]), 48);
        assert_eq!(f4.levi_weyl_order(&[1, 2, 3]), 48);
        let d5 = RootDatum::from_label("D5").unwrap();
        assert_eq!(d5.levi_weyl_order(&[1, 3, 4, 5]), 2 * 24);
    }
}
