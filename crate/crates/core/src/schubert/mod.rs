//! Cup products in `H*(G/B)` and `H*(G/P)` in the Schubert basis.

pub mod bruhat;
pub mod cache;
pub mod duan;
pub mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyalg::{q_to_string, Poly, VarSpace, Q};
use crate::rootsys::{poincare_product, CartanType, Family, RootDatum, WeylElement};

pub use bruhat::{BruhatIdeal, NodeClass};
pub use cache::{CacheKey, ConstantCache};
pub use duan::{duan_matrix, duan_operator, structure_constant, DuanMatrix};

/// Canonical reduced word, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// `G/B`, or `G/P` for the parabolic whose Levi omits the listed nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    Borel,
    Parabolic(Vec<usize>),
}

impl Space {
    pub fn maximal(r: usize) -> Self {
        Space::Parabolic(vec![r])
    }

    /// Levi nodes of the space (all nodes not removed; empty for `B`).
    pub fn levi(&self, rank: usize) -> Vec<usize> {
        match self {
            Space::Borel => vec![],
            Space::Parabolic(rm) => (1..=rank).filter(|j| !rm.contains(j)).collect(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Space::Borel => "B".into(),
            Space::Parabolic(rm) => format!("P{}", rm.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Chevalley,
    Duan,
}

impl std::str::FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chevalley" => Ok(Engine::Chevalley),
            "duan" => Ok(Engine::Duan),
            _ => Err(Error::Invalid(format!("unknown engine {s}"))),
        }
    }
}

/// How `β` handles a parabolic target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportMode {
    /// Compute in `H*(G/B)` and assert the support lies in `W^P`.
    Full,
    /// Check `W_L`-invariance first, then compute only on the ideal below
    /// the `W^P` classes of the right degree.
    Restricted,
    /// `Full` when `G/B` is small enough in the relevant degrees.
    Auto,
}

/// Elements of `G/B` up to this many are handled in full mode by `Auto`.
pub const AUTO_FULL_BUDGET: u64 = 6000;

#[derive(Clone, Debug, PartialEq)]
pub struct SchubertClass {
    pub group: CartanType,
    pub space: Space,
    pub support: BTreeMap<Word, Q>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub word: Vec<usize>,
    pub coeff: String,
}

impl SchubertClass {
    pub fn zero(group: CartanType, space: Space) -> Self {
        SchubertClass { group, space, support: BTreeMap::new() }
    }

    pub fn basis(group: CartanType, space: Space, word: &[usize]) -> Self {
        let mut c = Self::zero(group, space);
        c.support.insert(Word(word.to_vec()), Q::one());
        c
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Q) {
        if c.is_zero() {
            return;
        }
        let k = Word(word);
        let v = self.support.entry(k.clone()).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.support.remove(&k);
        }
    }

    pub fn coefficient(&self, word: &[usize]) -> Q {
        self.support.get(&Word(word.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(w.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zero(self.group, self.space.clone());
        for (w, c) in &self.support {
            out.add_term(w.0.clone(), c * s);
        }
        out
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.group != other.group || self.space != other.space {
            return Err(Error::Invalid(format!(
                "classes live on different spaces: {}/{} vs {}/{}",
                self.group,
                self.space.label(),
                other.group,
                other.space.label()
            )));
        }
        Ok(())
    }

    /// Cohomological degree `2ℓ(w)` if all terms share it.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.support.keys().map(|w| 2 * w.0.len());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.support
            .iter()
            .map(|(w, c)| TermJson { word: w.0.clone(), coeff: q_to_string(c) })
            .collect()
    }

    pub fn from_json_terms(group: CartanType, space: Space, terms: &[TermJson]) -> Result<Self> {
        let mut c = Self::zero(group, space);
        for t in terms {
            c.add_term(t.word.clone(), crate::polyalg::parse_q(&t.coeff)?);
        }
        Ok(c)
    }

    /// `-3/4 e[s2s1] + e[s1]`.
    pub fn to_text(&self) -> String {
        if self.support.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (w, c)) in self.support.iter().enumerate() {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&q_to_string(&a));
                s.push(' ');
            }
            s.push_str(&format!("e[{w}]"));
        }
        s
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Schubert calculus for one root datum: cached Bruhat ideals and structure
/// constants.
pub struct Calculus {
    pub datum: Arc<RootDatum>,
    pub cache: Arc<ConstantCache>,
    /// Maximal length of a full `G/B` computation; `None` for no limit.
    pub gb_ceiling: Option<usize>,
    ideals: Mutex<HashMap<(Space, usize), Arc<BruhatIdeal>>>,
}

impl Calculus {
    pub fn new(datum: RootDatum) -> Self {
        let gb_ceiling = match (datum.cartan_type.family, datum.rank()) {
            (Family::E, r) if r >= 7 => Some(14),
            _ => None,
        };
        Calculus {
            datum: Arc::new(datum),
            cache: Arc::new(ConstantCache::in_memory()),
            gb_ceiling,
            ideals: Mutex::new(HashMap::new()),
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        Ok(Self::new(RootDatum::from_label(s)?))
    }

    pub fn with_cache(mut self, cache: Arc<ConstantCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn group(&self) -> CartanType {
        self.datum.cartan_type
    }

    pub fn omega_space(&self) -> VarSpace {
        VarSpace::indexed("w", self.datum.rank())
    }

    fn guard(&self, len: usize) -> Result<()> {
        if let Some(c) = self.gb_ceiling {
            if len > c {
                return Err(Error::CostGuard(format!(
                    "{} G/B computation at length {len} exceeds the ceiling {c}",
                    self.group()
                )));
            }
        }
        Ok(())
    }

    /// All of `G/B` up to length `len`.
    pub fn full_ideal(&self, len: usize) -> Result<Arc<BruhatIdeal>> {
        self.guard(len)?;
        let key = (Space::Borel, len);
        if let Some(i) = self.ideals.lock().unwrap().get(&key) {
            return Ok(i.clone());
        }
        let ideal = Arc::new(BruhatIdeal::full(self.datum.clone(), len));
        self.ideals.lock().unwrap().insert(key, ideal.clone());
        Ok(ideal)
    }

    /// The ideal below all `W^P` elements of length ≤ `len`.
    pub fn parabolic_ideal(&self, removed: &[usize], len: usize) -> Result<Arc<BruhatIdeal>> {
        let key = (Space::Parabolic(removed.to_vec()), len);
        if let Some(i) = self.ideals.lock().unwrap().get(&key) {
            return Ok(i.clone());
        }
        let tops = self.datum.minimal_coset_reps(removed, len)?.reps;
        let ideal = Arc::new(BruhatIdeal::below(self.datum.clone(), &tops));
        self.ideals.lock().unwrap().insert(key, ideal.clone());
        Ok(ideal)
    }

    /// Number of `G/B` elements of length ≤ `len`.
    pub fn gb_count(&self, len: usize) -> u64 {
        poincare_product(self.group()).iter().take(len + 1).sum()
    }

    /// Elements of the space with exactly this length.
    pub fn level(&self, space: &Space, len: usize) -> Result<Vec<WeylElement>> {
        match space {
            Space::Borel => {
                self.guard(len)?;
                Ok(self.datum.enumerate_weyl(len).into_iter().nth(len).unwrap_or_default())
            }
            Space::Parabolic(rm) => Ok(self
                .datum
                .minimal_coset_reps(rm, len)?
                .reps
                .into_iter()
                .filter(|w| w.length == len)
                .collect()),
        }
    }

    pub fn is_in_space(&self, space: &Space, w: &WeylElement) -> bool {
        match space {
            Space::Borel => true,
            Space::Parabolic(_) => self.datum.is_min_rep(w, &space.levi(self.datum.rank())),
        }
    }

    fn to_class(&self, ideal: &BruhatIdeal, nc: &NodeClass, space: Space) -> SchubertClass {
        let mut c = SchubertClass::zero(self.group(), space);
        for (id, v) in nc {
            c.add_term(ideal.nodes[*id].word.clone(), v.clone());
        }
        c
    }

    fn to_nodes(&self, ideal: &BruhatIdeal, c: &SchubertClass) -> Result<NodeClass> {
        let mut nc = NodeClass::new();
        for (w, v) in &c.support {
            let id = ideal
                .find_word(&w.0)
                .ok_or_else(|| Error::Invalid(format!("{w} is outside the computed ideal")))?;
            nc.insert(id, v.clone());
        }
        Ok(nc)
    }

    /// `ε_{s_i}·cls` on `G/B` (1-based `i`).
    pub fn chevalley_multiply(&self, i: usize, cls: &SchubertClass) -> Result<SchubertClass> {
        self.datum.check_index(i)?;
        let top = cls.support.keys().map(|w| w.0.len()).max().unwrap_or(0);
        let ideal = self.full_ideal(top + 1)?;
        let nc = self.to_nodes(&ideal, cls)?;
        Ok(self.to_class(&ideal, &ideal.chevalley(i - 1, &nc), Space::Borel))
    }

    /// `β(f)` for `f` in the ω-variables.
    pub fn borel_image(&self, f: &Poly, space: &Space, mode: SupportMode) -> Result<SchubertClass> {
        let deg = f.max_degree().unwrap_or(0).max(0) as usize;
        let mode = match (mode, space) {
            (_, Space::Borel) => SupportMode::Full,
            (SupportMode::Auto, _) => {
                let guarded = self.gb_ceiling.map(|c| deg > c).unwrap_or(false);
                if !guarded && self.gb_count(deg) <= AUTO_FULL_BUDGET {
                    SupportMode::Full
                } else {
                    SupportMode::Restricted
                }
            }
            (m, _) => m,
        };
        match (mode, space) {
            (SupportMode::Full, _) => {
                let ideal = self.full_ideal(deg)?;
                let nc = ideal.multiply_poly(f, &ideal.unit());
                let cls = self.to_class(&ideal, &nc, space.clone());
                if let Space::Parabolic(rm) = space {
                    let levi = space.levi(self.datum.rank());
                    for (w, c) in &cls.support {
                        let e = self.datum.element_from_word(&w.0)?;
                        if !self.datum.is_min_rep(&e, &levi) {
                            return Err(Error::NotParabolic {
                                class: format!("{} {}", q_to_string(c), w),
                                node: rm[0],
                                word: w.0.clone(),
                            });
                        }
                    }
                }
                Ok(cls)
            }
            (_, Space::Parabolic(rm)) => {
                let levi = space.levi(self.datum.rank());
                if let Some(j) = crate::invariants::invariance_witness(&self.datum, &levi, f) {
                    return Err(Error::NotInvariant { j });
                }
                let ideal = self.parabolic_ideal(rm, deg)?;
                let nc = ideal.multiply_poly(f, &ideal.unit());
                Ok(self.to_class(&ideal, &nc, space.clone()))
            }
            _ => unreachable!(),
        }
    }

    /// `c^w_{u,v}` through the cache.
    pub fn structure_constant(&self, u: &WeylElement, v: &WeylElement, w: &WeylElement) -> Result<BigInt> {
        let (u, v) = if u.word <= v.word { (u, v) } else { (v, u) };
        let key = CacheKey { group: self.group(), w: w.word.clone(), u: u.word.clone(), v: v.word.clone() };
        if let Some(c) = self.cache.get(&key) {
            return Ok(c);
        }
        let c = duan::structure_constant(&self.datum, u, v, w)?;
        self.cache.insert(key, c.clone())?;
        Ok(c)
    }

    /// Recomputes a fraction of the cached constants and reports mismatches.
    pub fn verify_cache_sample(&self, fraction: f64, seed: u64) -> Result<Vec<CacheKey>> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut bad = Vec::new();
        for (k, v) in self.cache.entries() {
            if k.group != self.group() || rng.gen::<f64>() >= fraction {
                continue;
            }
            let e = |w: &[usize]| self.datum.element_from_word(w);
            let c = duan::structure_constant(&self.datum, &e(&k.u)?, &e(&k.v)?, &e(&k.w)?)?;
            if c != v {
                bad.push(k);
            }
        }
        Ok(bad)
    }

    pub fn cup_product(&self, a: &SchubertClass, b: &SchubertClass, engine: Engine) -> Result<SchubertClass> {
        a.check_same(b)?;
        if a.group != self.group() {
            return Err(Error::Invalid("class from another group".into()));
        }
        match engine {
            Engine::Duan => self.cup_duan(a, b),
            Engine::Chevalley => self.cup_chevalley(a, b),
        }
    }

    fn cup_duan(&self, a: &SchubertClass, b: &SchubertClass) -> Result<SchubertClass> {
        let mut out = SchubertClass::zero(self.group(), a.space.clone());
        let mut levels: HashMap<usize, Vec<WeylElement>> = HashMap::new();
        let elem = |w: &Word| self.datum.element_from_word(&w.0);
        for (wu, cu) in &a.support {
            for (wv, cv) in &b.support {
                let l = wu.0.len() + wv.0.len();
                if !levels.contains_key(&l) {
                    levels.insert(l, self.level(&a.space, l)?);
                }
                let u = elem(wu)?;
                let v = elem(wv)?;
                let terms: Vec<(Vec<usize>, BigInt)> = levels[&l]
                    .par_iter()
                    .map(|w| self.structure_constant(&u, &v, w).map(|c| (w.word.clone(), c)))
                    .collect::<Result<Vec<_>>>()?;
                let cc = cu * cv;
                for (w, c) in terms {
                    if !c.is_zero() {
                        out.add_term(w, &cc * Q::from_integer(c));
                    }
                }
            }
        }
        Ok(out)
    }

    fn cup_chevalley(&self, a: &SchubertClass, b: &SchubertClass) -> Result<SchubertClass> {
        let g = self.preimage(a)?;
        let top = b.support.keys().map(|w| w.0.len()).max().unwrap_or(0)
            + a.support.keys().map(|w| w.0.len()).max().unwrap_or(0);
        let ideal = self.full_ideal(top)?;
        let nb = self.to_nodes(&ideal, b)?;
        let nc = ideal.multiply_poly(&g, &nb);
        let cls = self.to_class(&ideal, &nc, a.space.clone());
        if let Space::Parabolic(rm) = &a.space {
            for w in cls.support.keys() {
                let e = self.datum.element_from_word(&w.0)?;
                if !self.is_in_space(&a.space, &e) {
                    return Err(Error::NotParabolic { class: cls.to_text(), node: rm[0], word: w.0.clone() });
                }
            }
        }
        Ok(cls)
    }

    /// `β(f)·b` on `G/B` (or on the space of `b`, asserting the support).
    pub fn multiply_poly(&self, f: &Poly, b: &SchubertClass) -> Result<SchubertClass> {
        let top = b.support.keys().map(|w| w.0.len()).max().unwrap_or(0)
            + f.max_degree().unwrap_or(0).max(0) as usize;
        let ideal = self.full_ideal(top)?;
        let nb = self.to_nodes(&ideal, b)?;
        Ok(self.to_class(&ideal, &ideal.multiply_poly(f, &nb), b.space.clone()))
    }

    /// β of every monomial of degree `d`, as node classes on `ideal`.
    pub fn monomial_images(&self, ideal: &BruhatIdeal, d: usize) -> Vec<(Vec<u32>, NodeClass)> {
        let n = self.datum.rank();
        let mut cur: Vec<(Vec<u32>, NodeClass)> = vec![(vec![0; n], ideal.unit())];
        for _ in 0..d {
            // extend by a variable no larger than the first one used so far,
            // so each monomial is generated once (smallest variable applied last)
            let next: Vec<(Vec<u32>, NodeClass)> = cur
                .par_iter()
                .flat_map_iter(|(e, c)| {
                    let lim = e.iter().position(|&x| x > 0).unwrap_or(n - 1);
                    (0..=lim)
                        .map(|i| {
                            let mut e2 = e.clone();
                            e2[i] += 1;
                            (e2, ideal.chevalley(i, c))
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
            cur = next;
        }
        cur
    }

    /// A polynomial `g` in the ω-variables with `β(g) = a`, by exact linear
    /// algebra on the monomials of each degree.
    pub fn preimage(&self, a: &SchubertClass) -> Result<Poly> {
        let space = self.omega_space();
        let mut out = Poly::zero(&space);
        let mut by_deg: BTreeMap<usize, Vec<(&Word, &Q)>> = BTreeMap::new();
        for (w, c) in &a.support {
            by_deg.entry(w.0.len()).or_default().push((w, c));
        }
        for (d, terms) in by_deg {
            let ideal = self.full_ideal(d)?;
            let mons = self.monomial_images(&ideal, d);
            let rows = &ideal.by_len[d];
            let pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &id)| (id, k)).collect();
            let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); mons.len() + 1]; rows.len()];
            for (j, (_, nc)) in mons.iter().enumerate() {
                for (id, c) in nc {
                    m[pos[id]][j] = c.clone();
                }
            }
            for (w, c) in terms {
                let id = ideal.find_word(&w.0).ok_or_else(|| Error::Invalid(format!("{w} not found")))?;
                m[pos[&id]][mons.len()] = c.clone();
            }
            let piv = linalg::rref(&mut m);
            if piv.last() == Some(&mons.len()) {
                return Err(Error::Invalid("class has no polynomial preimage".into()));
            }
            for (r, &col) in piv.iter().enumerate() {
                let c = m[r][mons.len()].clone();
                if !c.is_zero() {
                    out.add_term(mons[col].0.clone(), c);
                }
            }
        }
        Ok(out)
    }
}

/// Outcome of comparing the two product engines on every ordered pair.
#[derive(Clone, Debug, Serialize)]
pub struct EngineReport {
    pub group: String,
    pub elements: usize,
    pub pairs: usize,
    /// Nonzero structure constants seen.
    pub nonzero: usize,
    /// `(u, v)` words whose products differ.
    pub failures: Vec<(Vec<usize>, Vec<usize>)>,
}

impl EngineReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `ε_u ∪ ε_v` by Duan constants and by the Chevalley rule, for all `u, v`
/// in `W`.
pub fn engine_equivalence(calc: &Calculus) -> Result<EngineReport> {
    let top = calc.datum.longest_length();
    let levels = calc.datum.enumerate_weyl(top);
    let elems: Vec<WeylElement> = levels.iter().flatten().cloned().collect();
    let g = calc.group();
    let basis = |w: &WeylElement| SchubertClass::basis(g, Space::Borel, &w.word);
    let results = elems
        .par_iter()
        .map(|u| {
            let gu = calc.preimage(&basis(u))?;
            let mut out = Vec::new();
            for v in &elems {
                let chev = calc.multiply_poly(&gu, &basis(v))?;
                let l = u.length + v.length;
                let mut duan = SchubertClass::zero(g, Space::Borel);
                let mut nonzero = 0;
                for w in levels.get(l).map(|x| x.as_slice()).unwrap_or(&[]) {
                    let c = calc.structure_constant(u, v, w)?;
                    if !c.is_zero() {
                        nonzero += 1;
                        duan.add_term(w.word.clone(), Q::from_integer(c));
                    }
                }
                out.push((chev == duan, nonzero, u.word.clone(), v.word.clone()));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = EngineReport { group: g.to_string(), elements: elems.len(), pairs: 0, nonzero: 0, failures: Vec::new() };
    for (ok, nz, u, v) in results.into_iter().flatten() {
        rep.pairs += 1;
        rep.nonzero += nz;
        if !ok {
            rep.failures.push((u, v));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{q, qr};

    #[test]
    fn a2_chevalley() {
        let c = Calculus::from_label("A2").unwrap();
        let g = c.group();
        let s1 = SchubertClass::basis(g, Space::Borel, &[1]);
        let sq = c.chevalley_multiply(1, &s1).unwrap();
        assert_eq!(sq, SchubertClass::basis(g, Space::Borel, &[2, 1]));
        let e = SchubertClass::basis(g, Space::Borel, &[]);
        assert_eq!(c.chevalley_multiply(2, &e).unwrap(), SchubertClass::basis(g, Space::Borel, &[2]));
    }

    #[test]
    fn a2_cup_both_engines() {
        let c = Calculus::from_label("A2").unwrap();
        let g = c.group();
        let s1 = SchubertClass::basis(g, Space::Borel, &[1]);
        let s2 = SchubertClass::basis(g, Space::Borel, &[2]);
        let mut want = SchubertClass::basis(g, Space::Borel, &[1, 2]);
        want.add_term(vec![2, 1], q(1));
        for e in [Engine::Duan, Engine::Chevalley] {
            assert_eq!(c.cup_product(&s1, &s2, e).unwrap(), want, "{e:?}");
        }
    }

    #[test]
    fn engines_agree_on_a2() {
        let rep = engine_equivalence(&Calculus::from_label("A2").unwrap()).unwrap();
        assert_eq!(rep.pairs, 36);
        assert!(rep.passed());
    }

    #[test]
    fn g2_parabolic_square() {
        let c = Calculus::from_label("G2").unwrap();
        let sp = c.omega_space();
        // (ω2 - 3/2 ω1)^2
        let f = Poly::parse("w2^2 - 3*w1*w2 + 9/4*w1^2", &sp).unwrap();
        for mode in [SupportMode::Full, SupportMode::Restricted] {
            let img = c.borel_image(&f, &Space::maximal(1), mode).unwrap();
            assert_eq!(img.support.len(), 1);
            assert_eq!(img.coefficient(&[2, 1]), qr(-3, 4));
        }
        let bad = Poly::parse("w2", &sp).unwrap();
        assert!(matches!(
            c.borel_image(&bad, &Space::maximal(1), SupportMode::Full),
            Err(Error::NotParabolic { .. })
        ));
        assert!(matches!(
            c.borel_image(&bad, &Space::maximal(1), SupportMode::Restricted),
            Err(Error::NotInvariant { j: 2 })
        ));
    }
}
