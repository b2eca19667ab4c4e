//! Bruhat ideals with their cover relations, and the Chevalley rule on them.
//!
//! `ε_{s_i}·ε_w = Σ ω_i(β^∨) ε_{w s_β}` over positive roots β with
//! `ℓ(w s_β) = ℓ(w) + 1`. Only the covers inside the ideal generated by the
//! classes of interest are ever built: every product chain is increasing in
//! the Bruhat order, so nothing outside the ideal can reach its top.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::polyalg::{Poly, Q};
use crate::rootsys::{RootDatum, WeylElement};

#[derive(Clone, Debug)]
pub struct Node {
    /// `wρ` in ω-coordinates; determines `w`.
    pub rho: Vec<i64>,
    pub action: Vec<i64>,
    pub word: Vec<usize>,
    /// Covers `w → w s_β` inside the ideal: (node index, positive root index).
    pub up: Vec<(usize, usize)>,
}

impl Node {
    pub fn len(&self) -> usize {
        self.word.len()
    }
}

/// A lower Bruhat interval closed downward, with all covers inside it.
pub struct BruhatIdeal {
    pub datum: Arc<RootDatum>,
    pub nodes: Vec<Node>,
    pub by_len: Vec<Vec<usize>>,
    index: HashMap<Vec<i64>, usize>,
    /// `c_i d_i` per positive root, so `(γ, μ)` is proportional to `Σ g_i μ_i`.
    root_forms: Vec<Vec<i64>>,
}

/// Sparse class on the nodes of one ideal.
pub type NodeClass = HashMap<usize, Q>;

impl BruhatIdeal {
    /// The ideal generated by `tops`.
    pub fn below(datum: Arc<RootDatum>, tops: &[WeylElement]) -> Self {
        let n = datum.rank();
        let root_forms: Vec<Vec<i64>> = datum
            .positive_roots
            .iter()
            .map(|c| (0..n).map(|i| c[i] * datum.symmetrizer[i]).collect())
            .collect();
        let max_len = tops.iter().map(|t| t.length).max().unwrap_or(0);
        let mut ideal = BruhatIdeal {
            datum: datum.clone(),
            nodes: Vec::new(),
            by_len: vec![Vec::new(); max_len + 1],
            index: HashMap::new(),
            root_forms,
        };
        // levels[l]: (rho, action) pairs found at length l
        let mut levels: Vec<Vec<(Vec<i64>, Vec<i64>)>> = vec![Vec::new(); max_len + 1];
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        for t in tops {
            let rho = t.apply(&datum.rho());
            if seen.insert(rho.clone(), ()).is_none() {
                levels[t.length].push((rho, t.action.clone()));
            }
        }
        // downward edges recorded as (upper rho, lower rho, root)
        let mut edges: Vec<(Vec<i64>, Vec<i64>, usize)> = Vec::new();
        for l in (1..=max_len).rev() {
            let cur = std::mem::take(&mut levels[l]);
            let found: Vec<Vec<(Vec<i64>, Vec<i64>, usize)>> = cur
                .par_iter()
                .map(|(rho, action)| ideal.down_covers(rho, action, l))
                .collect();
            for (k, list) in found.into_iter().enumerate() {
                for (lrho, laction, root) in list {
                    if seen.insert(lrho.clone(), ()).is_none() {
                        levels[l - 1].push((lrho.clone(), laction));
                    }
                    edges.push((cur[k].0.clone(), lrho, root));
                }
            }
            levels[l] = cur;
        }
        for (l, lev) in levels.into_iter().enumerate() {
            let mut lev: Vec<Node> = lev
                .into_iter()
                .map(|(rho, action)| Node {
                    word: datum.canonical_word_from_rho(&rho),
                    rho,
                    action,
                    up: Vec::new(),
                })
                .collect();
            lev.sort_by(|a, b| a.word.cmp(&b.word));
            for node in lev {
                debug_assert_eq!(node.len(), l);
                let id = ideal.nodes.len();
                ideal.index.insert(node.rho.clone(), id);
                ideal.by_len[l].push(id);
                ideal.nodes.push(node);
            }
        }
        for (hi, lo, root) in edges {
            let h = ideal.index[&hi];
            let lo = ideal.index[&lo];
            ideal.nodes[lo].up.push((h, root));
        }
        for node in ideal.nodes.iter_mut() {
            node.up.sort();
        }
        ideal
    }

    /// Every element of length ≤ `max_len`.
    pub fn full(datum: Arc<RootDatum>, max_len: usize) -> Self {
        let max_len = max_len.min(datum.longest_length());
        let tops = datum
            .enumerate_weyl(max_len)
            .into_iter()
            .nth(max_len)
            .unwrap_or_default();
        Self::below(datum, &tops)
    }

    fn length_of(&self, rho: &[i64]) -> usize {
        self.root_forms
            .iter()
            .filter(|g| g.iter().zip(rho).map(|(a, b)| a * b).sum::<i64>() < 0)
            .count()
    }

    fn down_covers(&self, rho: &[i64], action: &[i64], l: usize) -> Vec<(Vec<i64>, Vec<i64>, usize)> {
        let d = &self.datum;
        let n = d.rank();
        let mut out = Vec::new();
        for (k, beta) in d.roots_omega.iter().enumerate() {
            let wb: Vec<i64> = (0..n)
                .map(|r| (0..n).map(|c| action[r * n + c] * beta[c]).sum())
                .collect();
            if d.is_positive_root(&wb) {
                continue;
            }
            // w s_β ρ = wρ - <ρ, β^∨> wβ
            let h: i64 = d.coroots[k].iter().sum();
            let nrho: Vec<i64> = rho.iter().zip(&wb).map(|(a, b)| a - h * b).collect();
            if self.length_of(&nrho) != l - 1 {
                continue;
            }
            let cr = &d.coroots[k];
            let mut na = action.to_vec();
            for c in 0..n {
                if cr[c] != 0 {
                    for r in 0..n {
                        na[r * n + c] -= cr[c] * wb[r];
                    }
                }
            }
            out.push((nrho, na, k));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn top_length(&self) -> usize {
        self.by_len.len().saturating_sub(1)
    }

    pub fn find(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.apply(&self.datum.rho())).copied()
    }

    pub fn find_word(&self, word: &[usize]) -> Option<usize> {
        let w = self.datum.element_from_word(word).ok()?;
        self.find(&w)
    }

    pub fn identity(&self) -> usize {
        self.by_len[0][0]
    }

    pub fn element(&self, id: usize) -> WeylElement {
        let node = &self.nodes[id];
        WeylElement { action: node.action.clone(), length: node.len(), word: node.word.clone() }
    }

    /// `ε_{s_i}·cls` for 0-based `i`.
    pub fn chevalley(&self, i: usize, cls: &NodeClass) -> NodeClass {
        let mut out = NodeClass::new();
        for (&w, c) in cls {
            for &(v, root) in &self.nodes[w].up {
                let m = self.datum.coroots[root][i];
                if m != 0 {
                    *out.entry(v).or_insert_with(Q::zero) += c * Q::from_integer(m.into());
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `β(f)·start` where `f` is a polynomial in `ω_1..ω_ℓ`.
    pub fn multiply_poly(&self, f: &Poly, start: &NodeClass) -> NodeClass {
        let mut out = NodeClass::new();
        let degrees: Vec<i64> = {
            let mut ds: Vec<i64> = f.terms().map(|(e, _)| e.iter().map(|&x| x as i64).sum()).collect();
            ds.sort();
            ds.dedup();
            ds
        };
        for d in degrees {
            let part = f.homogeneous_part(d);
            let terms: Vec<(Vec<u32>, Q)> = part.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
            for (k, c) in self.horner(terms, start) {
                *out.entry(k).or_insert_with(Q::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// β of a homogeneous polynomial given as terms, acting on `start`.
    /// Splits off the smallest variable of every monomial.
    fn horner(&self, terms: Vec<(Vec<u32>, Q)>, start: &NodeClass) -> NodeClass {
        let mut constant = Q::zero();
        let mut groups: Vec<Vec<(Vec<u32>, Q)>> = vec![Vec::new(); self.datum.rank()];
        for (mut e, c) in terms {
            match e.iter().position(|&x| x > 0) {
                None => constant += c,
                Some(i) => {
                    e[i] -= 1;
                    groups[i].push((e, c));
                }
            }
        }
        let big = groups.iter().map(|g| g.len()).sum::<usize>() > 64;
        let parts: Vec<NodeClass> = if big {
            groups
                .into_par_iter()
                .enumerate()
                .filter(|(_, g)| !g.is_empty())
                .map(|(i, g)| self.chevalley(i, &self.horner(g, start)))
                .collect()
        } else {
            groups
                .into_iter()
                .enumerate()
                .filter(|(_, g)| !g.is_empty())
                .map(|(i, g)| self.chevalley(i, &self.horner(g, start)))
                .collect()
        };
        let mut out = NodeClass::new();
        if !constant.is_zero() {
            for (k, c) in start {
                out.insert(*k, c * &constant);
            }
        }
        for p in parts {
            for (k, c) in p {
                *out.entry(k).or_insert_with(Q::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn unit(&self) -> NodeClass {
        let mut c = NodeClass::new();
        c.insert(self.identity(), Q::from_integer(1.into()));
        c
    }
}
