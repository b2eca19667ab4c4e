//! Independent multiplication table of `H*(G/B, ℚ)` for rank ≤ 3, built from
//! the Chevalley rule alone: every `ε_u` is re-expressed as a polynomial in
//! the `ε_{s_i}` by exact linear algebra, then multiplied through.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyalg::{q, qr, Poly, Q};
use crate::rootsys::RootDatum;
use crate::schubert::{Calculus, NodeClass, SchubertClass, Space};

pub struct MultiplicationTable {
    /// Canonical words, sorted by length then lexicographically.
    pub elements: Vec<Vec<usize>>,
    /// `products[u][v]` as (element index, coefficient) pairs.
    pub products: Vec<Vec<Vec<(usize, Q)>>>,
    pub preimages: Vec<Poly>,
}

pub fn coinvariant_oracle(calc: &Calculus) -> Result<MultiplicationTable> {
    let d = &calc.datum;
    if d.rank() > 3 {
        return Err(Error::CostGuard(format!("coinvariant oracle needs rank ≤ 3, got {}", d.cartan_type)));
    }
    let top = d.longest_length();
    let ideal = calc.full_ideal(top)?;
    let order: Vec<usize> = ideal.by_len.iter().flatten().copied().collect();
    let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(k, &id)| (id, k)).collect();
    let space = calc.omega_space();
    let mut preimages = vec![Poly::zero(&space); order.len()];
    for l in 0..=top {
        let mons = calc.monomial_images(&ideal, l);
        let rows = &ideal.by_len[l];
        let rpos: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &id)| (id, k)).collect();
        let mut m = vec![vec![Q::zero(); mons.len()]; rows.len()];
        for (j, (_, nc)) in mons.iter().enumerate() {
            for (id, c) in nc {
                m[rpos[id]][j] = c.clone();
            }
        }
        let mut r = m.clone();
        let piv = linalg::rref(&mut r);
        if piv.len() != rows.len() {
            return Err(Error::Invalid(format!("β is not onto in degree {l}")));
        }
        let sq: Vec<Vec<Q>> = m.iter().map(|row| piv.iter().map(|&j| row[j].clone()).collect()).collect();
        let inv = linalg::inverse(&sq).ok_or_else(|| Error::Invalid("singular pivot block".into()))?;
        for (k, &id) in rows.iter().enumerate() {
            let mut p = Poly::zero(&space);
            for (t, &j) in piv.iter().enumerate() {
                p.add_term(mons[j].0.clone(), inv[t][k].clone());
            }
            preimages[pos[&id]] = p;
        }
    }
    let products: Vec<Vec<Vec<(usize, Q)>>> = (0..order.len())
        .into_par_iter()
        .map(|u| {
            (0..order.len())
                .map(|v| {
                    let mut start = NodeClass::new();
                    start.insert(order[v], Q::one());
                    let nc = ideal.multiply_poly(&preimages[u], &start);
                    let mut row: Vec<(usize, Q)> = nc.into_iter().map(|(id, c)| (pos[&id], c)).collect();
                    row.sort_by_key(|e| e.0);
                    row
                })
                .collect()
        })
        .collect();
    Ok(MultiplicationTable {
        elements: order.iter().map(|&id| ideal.nodes[id].word.clone()).collect(),
        products,
        preimages,
    })
}

impl MultiplicationTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index(&self, word: &[usize]) -> Option<usize> {
        self.elements.iter().position(|w| w == word)
    }

    pub fn product_class(&self, calc: &Calculus, u: usize, v: usize) -> SchubertClass {
        let mut c = SchubertClass::zero(calc.group(), Space::Borel);
        for (k, q) in &self.products[u][v] {
            c.add_term(self.elements[*k].clone(), q.clone());
        }
        c
    }

    fn mul_vec(&self, a: &[(usize, Q)], v: usize) -> HashMap<usize, Q> {
        let mut out: HashMap<usize, Q> = HashMap::new();
        for (x, c) in a {
            for (k, q) in &self.products[*x][v] {
                *out.entry(*k).or_insert_with(Q::zero) += c * q;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn check_commutative(&self) -> Result<()> {
        for u in 0..self.len() {
            for v in 0..u {
                if self.products[u][v] != self.products[v][u] {
                    return Err(Error::Invalid(format!(
                        "not commutative at {:?}, {:?}",
                        self.elements[u], self.elements[v]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn check_associative(&self) -> Result<()> {
        let n = self.len();
        let bad = (0..n).into_par_iter().find_any(|&u| {
            (0..n).any(|v| {
                (0..n).any(|w| {
                    // (uv)w = u(vw) = w·(u·v) vs (v·w)·u
                    let uv = &self.products[u][v];
                    let vw = &self.products[v][w];
                    self.mul_vec(uv, w) != self.mul_vec(vw, u)
                })
            })
        });
        match bad {
            Some(u) => Err(Error::Invalid(format!("not associative at {:?}", self.elements[u]))),
            None => Ok(()),
        }
    }

    /// The degree-complementary pairing against the top class is a
    /// permutation matrix.
    pub fn check_duality(&self) -> Result<()> {
        let top = self.len() - 1;
        let lens: Vec<usize> = self.elements.iter().map(|w| w.len()).collect();
        let n_top = lens[top];
        for u in 0..self.len() {
            let mut ones = 0;
            for v in 0..self.len() {
                if lens[u] + lens[v] != n_top {
                    continue;
                }
                let c = self.products[u][v]
                    .iter()
                    .find(|e| e.0 == top)
                    .map(|e| e.1.clone())
                    .unwrap_or_else(Q::zero);
                if c.is_one() {
                    ones += 1;
                } else if !c.is_zero() {
                    return Err(Error::Invalid(format!("pairing entry {c} at {:?}", self.elements[u])));
                }
            }
            if ones != 1 {
                return Err(Error::Invalid(format!("pairing row of {:?} has {ones} units", self.elements[u])));
            }
        }
        Ok(())
    }
}

/// The divided difference `∂_i f = (f - s_i f) / α_i` on a polynomial in the
/// ω-variables (1-based `i`). Computed in coordinates where `α_i` replaces
/// `ω_i`, so that `s_i` just flips the sign of that variable.
pub fn divided_difference(d: &RootDatum, i: usize, f: &Poly) -> Result<Poly> {
    d.check_index(i)?;
    let sp = f.space().clone();
    let n = d.rank();
    let alpha = d.simple_root_omega(i - 1);
    // ω_i = (a - Σ_{k≠i} α_i[k] ω_k) / 2
    let to_alpha: Vec<Poly> = (0..n)
        .map(|k| {
            if k != i - 1 {
                return Poly::var(&sp, k);
            }
            let mut p = Poly::var(&sp, k);
            for (m, &c) in alpha.iter().enumerate() {
                if m != k && c != 0 {
                    p = &p - &Poly::var(&sp, m).scale(&q(c));
                }
            }
            p.scale(&qr(1, alpha[k]))
        })
        .collect();
    let g = f.compose(&to_alpha)?;
    let mut h = Poly::zero(&sp);
    for (e, c) in g.terms() {
        if e[i - 1] % 2 == 1 {
            let mut e2 = e.to_vec();
            e2[i - 1] -= 1;
            h.add_term(e2, c * q(2));
        }
    }
    let back: Vec<Poly> = (0..n)
        .map(|k| {
            if k == i - 1 {
                crate::polyalg::linear_form(&sp, &alpha.iter().map(|&c| q(c)).collect::<Vec<_>>())
            } else {
                Poly::var(&sp, k)
            }
        })
        .collect();
    h.compose(&back)
}

/// Coefficient of `ε_w` in `β(f)`: `(∂_{i_1}⋯∂_{i_k} f)(0)` for a reduced
/// word `i_1⋯i_k` of `w`, the last letter applied first.
pub fn bgg_coefficient(d: &RootDatum, word: &[usize], f: &Poly) -> Result<Q> {
    let k = word.len() as i64;
    let mut g = f.homogeneous_part(k);
    for &i in word.iter().rev() {
        if g.is_zero() {
            return Ok(Q::zero());
        }
        g = divided_difference(d, i, &g)?;
    }
    Ok(g.coeff(&vec![0; f.space().len()]))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::SupportMode;

    #[test]
    fn divided_difference_basics() {
        let d = RootDatum::from_label("A2").unwrap();
        let sp = crate::polyalg::VarSpace::indexed("w", 2);
        let f = Poly::parse("w1^2", &sp).unwrap();
        assert_eq!(divided_difference(&d, 1, &f).unwrap(), Poly::parse("w2", &sp).unwrap());
        assert_eq!(bgg_coefficient(&d, &[2, 1], &f).unwrap(), q(1));
        assert_eq!(bgg_coefficient(&d, &[1, 2], &f).unwrap(), q(0));
    }

    #[test]
    fn chevalley_matches_bgg() {
        for (g, texts) in [
            ("B3", vec!["w2^3 - w1*w3^2", "w3^3", "w1*w2*w3", "w3^2"]),
            ("G2", vec!["w1^3", "w2^2*w1", "w1^2"]),
            ("C3", vec!["w3^3", "w1*w3^2"]),
        ] {
            let calc = Calculus::from_label(g).unwrap();
            let sp = calc.omega_space();
            for t in texts {
                let f = Poly::parse(t, &sp).unwrap();
                let img = calc.borel_image(&f, &Space::Borel, SupportMode::Full).unwrap();
                let k = f.homogeneous_degree().unwrap() as usize;
                for w in calc.level(&Space::Borel, k).unwrap() {
                    let b = bgg_coefficient(&calc.datum, &w.word, &f).unwrap();
                    assert_eq!(img.coefficient(&w.word), b, "{g} {t} {:?}", w.word);
                }
            }
        }
    }
}
