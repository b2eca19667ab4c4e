//! Weight systems and the torus restriction of the Springer morphism.
//!
//! `θ_λ(t)` is the element of 𝔱 with `B_λ(θ_λ(t), h) = Σ_μ m(μ) t^μ μ(h)`,
//! where `B_λ(x, y) = Σ_μ m(μ) μ(x) μ(y)` is the trace form of `V(λ)`.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyalg::{q, LaurentPoly, VarSpace, Q};
use crate::rootsys::RootDatum;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightSystem {
    pub highest_weight: Vec<i64>,
    /// (weight in ω-coordinates, multiplicity), highest weight first.
    pub entries: Vec<(Vec<i64>, u64)>,
}

impl WeightSystem {
    pub fn dimension(&self) -> u64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.entries
            .iter()
            .find(|(w, _)| w.as_slice() == mu)
            .map(|e| e.1)
            .unwrap_or(0)
    }
}

/// Gram matrix `(ω_i, ω_j)`.
pub fn omega_gram(d: &RootDatum) -> Vec<Vec<Q>> {
    let n = d.rank();
    let unit = |i: usize| -> Vec<Q> { (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect() };
    (0..n)
        .map(|i| (0..n).map(|j| d.inner(&unit(i), &unit(j))).collect())
        .collect()
}

/// Freudenthal's recursion, layer by layer below the highest weight.
pub fn weight_system(d: &RootDatum, lambda: &[i64]) -> Result<WeightSystem> {
    let n = d.rank();
    if lambda.len() != n || lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let g = omega_gram(d);
    let ip = |x: &[i64], y: &[i64]| -> Q {
        let mut s = Q::zero();
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] != 0 {
                    s += g[i][j].clone() * q(x[i] * y[j]);
                }
            }
        }
        s
    };
    let shift = |x: &[i64]| -> Vec<i64> { x.iter().map(|v| v + 1).collect() };
    let top = ip(&shift(lambda), &shift(lambda));

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lambda.to_vec(), 1);
    let mut order = vec![lambda.to_vec()];
    let mut layer = vec![lambda.to_vec()];
    while !layer.is_empty() {
        let mut cand: Vec<Vec<i64>> = Vec::new();
        for mu in &layer {
            for i in 0..n {
                let a = d.simple_root_omega(i);
                let nu: Vec<i64> = mu.iter().zip(&a).map(|(x, y)| x - y).collect();
                if !mult.contains_key(&nu) && !cand.contains(&nu) {
                    cand.push(nu);
                }
            }
        }
        cand.sort();
        let mut next = Vec::new();
        for mu in cand {
            let denom = &top - ip(&shift(&mu), &shift(&mu));
            if denom.is_zero() {
                continue;
            }
            let mut s = Q::zero();
            for beta in &d.roots_omega {
                let mut k = 1;
                loop {
                    let nu: Vec<i64> = mu.iter().zip(beta).map(|(x, b)| x + k * b).collect();
                    let Some(&m) = mult.get(&nu) else { break };
                    s += q(m as i64) * ip(&nu, beta);
                    k += 1;
                }
            }
            let m = s * q(2) / denom;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Invalid(format!("non-integral multiplicity at {mu:?}")));
            }
            let m = u64::try_from(m.to_integer()).unwrap();
            if m > 0 {
                mult.insert(mu.clone(), m);
                order.push(mu.clone());
                next.push(mu);
            }
        }
        layer = next;
    }
    let ws = WeightSystem {
        highest_weight: lambda.to_vec(),
        entries: order.into_iter().map(|w| {
            let m = mult[&w];
            (w, m)
        }).collect(),
    };
    let dim = d.weyl_dimension(lambda);
    if q(ws.dimension() as i64) != dim {
        return Err(Error::Invalid(format!(
            "dimension {} differs from Weyl formula {}",
            ws.dimension(),
            dim
        )));
    }
    Ok(ws)
}

/// `B_λ(α_i^∨, α_j^∨) = Σ_μ m(μ) μ_i μ_j`; errors when the form is degenerate.
pub fn trace_form(ws: &WeightSystem) -> Result<Vec<Vec<Q>>> {
    let n = ws.highest_weight.len();
    let mut b = vec![vec![Q::zero(); n]; n];
    for (mu, m) in &ws.entries {
        for i in 0..n {
            for j in 0..n {
                b[i][j] += q(*m as i64 * mu[i] * mu[j]);
            }
        }
    }
    if linalg::determinant(&b).is_zero() {
        return Err(Error::DegenerateForm);
    }
    Ok(b)
}

/// Characters `x_i` (in ω-coordinates) defining the torus coordinates
/// `t_i = t(x_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisConfig {
    pub characters: Vec<Vec<i64>>,
    #[serde(default = "default_prefix")]
    pub prefix: String,
}

fn default_prefix() -> String {
    "t".to_string()
}

impl BasisConfig {
    pub fn omega(rank: usize) -> Self {
        BasisConfig {
            characters: (0..rank)
                .map(|i| (0..rank).map(|j| (i == j) as i64).collect())
                .collect(),
            prefix: default_prefix(),
        }
    }

    /// Diagonal characters `δ_1..δ_n` of `D_n` in ω-coordinates.
    pub fn dn_diagonal(n: usize) -> Self {
        BasisConfig { characters: dn_delta_omega(n), prefix: default_prefix() }
    }

    pub fn space(&self) -> VarSpace {
        VarSpace::indexed(&self.prefix, self.characters.len())
    }

    /// Coordinates of `mu` in the character basis.
    pub fn coordinates(&self, mu: &[i64]) -> Result<Vec<i64>> {
        let n = mu.len();
        let m: Vec<Vec<Q>> = (0..n)
            .map(|r| (0..n).map(|c| q(self.characters[c][r])).collect())
            .collect();
        let b: Vec<Q> = mu.iter().map(|&x| q(x)).collect();
        let x = linalg::solve(&m, &b).ok_or(Error::DegenerateForm)?;
        x.iter()
            .map(|v| {
                if v.is_integer() {
                    Ok(i64::try_from(v.to_integer()).unwrap())
                } else {
                    Err(Error::Invalid(format!("weight {mu:?} is not integral in the torus basis")))
                }
            })
            .collect()
    }
}

/// `δ_j` of `D_n` in ω-coordinates: `δ_1 = ω_1`, `δ_j = ω_j - ω_{j-1}` for
/// `j ≤ n-2`, `δ_{n-1} = ω_{n-1} + ω_n - ω_{n-2}`, `δ_n = ω_n - ω_{n-1}`.
pub fn dn_delta_omega(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for j in 1..=n {
        let mut v = vec![0i64; n];
        if j <= n - 2 {
            v[j - 1] = 1;
            if j > 1 {
                v[j - 2] = -1;
            }
        } else if j == n - 1 {
            v[n - 2] = 1;
            v[n - 1] = 1;
            v[n - 3] -= 1;
        } else {
            v[n - 1] = 1;
            v[n - 2] = -1;
        }
        out.push(v);
    }
    out
}

#[derive(Clone, Debug)]
pub struct TorusMap {
    /// Θ_i, the coordinates of θ_λ(t) in the α^∨-basis.
    pub coordinates: Vec<LaurentPoly>,
    pub basis: BasisConfig,
}

impl TorusMap {
    /// Coordinates against another basis of 𝔱*: entry i is `x_i(θ(t))` for
    /// the functional with ω-coordinates `chars[i]`.
    pub fn in_dual_basis(&self, chars: &[Vec<i64>]) -> Vec<LaurentPoly> {
        let space = self.basis.space();
        chars
            .iter()
            .map(|c| {
                c.iter()
                    .zip(&self.coordinates)
                    .fold(LaurentPoly::zero(&space), |acc, (k, th)| &acc + &th.scale(&q(*k)))
            })
            .collect()
    }

    /// Text layout with one `Theta_i(t) = …` line per coordinate.
    pub fn to_text(&self) -> String {
        self.coordinates
            .iter()
            .enumerate()
            .map(|(i, p)| format!("Theta_{}(t) = {}\n", i + 1, p.to_text()))
            .collect()
    }
}

pub fn theta_torus(ws: &WeightSystem, basis: &BasisConfig) -> Result<TorusMap> {
    let n = ws.highest_weight.len();
    let b = trace_form(ws)?;
    let inv = linalg::inverse(&b).ok_or(Error::DegenerateForm)?;
    let space = basis.space();
    // v_i = Σ m μ_i t^μ
    let mut v = vec![LaurentPoly::zero(&space); n];
    for (mu, m) in &ws.entries {
        let e: Vec<i32> = basis.coordinates(mu)?.iter().map(|&x| x as i32).collect();
        for i in 0..n {
            if mu[i] != 0 {
                v[i].add_term(e.clone(), q(*m as i64 * mu[i]));
            }
        }
    }
    let coordinates = (0..n)
        .map(|i| {
            (0..n).fold(LaurentPoly::zero(&space), |acc, j| &acc + &v[j].scale(&inv[i][j]))
        })
        .collect();
    Ok(TorusMap { coordinates, basis: basis.clone() })
}

/// `∂Θ_i/∂h_k` at `h = 0`, where `t = exp(h)` and `h = Σ h_k α_k^∨`.
/// Since `π ∘ dρ_λ` is the identity this is the identity matrix for every
/// `θ_λ`, whatever the normalization of `λ`.
pub fn differential_at_identity(coords: &[LaurentPoly], basis: &BasisConfig) -> Vec<Vec<Q>> {
    let n = basis.characters.len();
    coords
        .iter()
        .map(|p| {
            (0..n)
                .map(|k| {
                    let mut acc = Q::zero();
                    for (e, c) in p.terms() {
                        let x: i64 = e.iter().zip(&basis.characters).map(|(&ej, ch)| ej as i64 * ch[k]).sum();
                        acc += c * q(x);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::qr;

    #[test]
    fn differential_is_identity() {
        for (g, l) in [("A2", vec![1, 0]), ("B3", vec![0, 0, 1]), ("G2", vec![1, 0]), ("D4", vec![0, 1, 0, 0])] {
            let d = RootDatum::from_label(g).unwrap();
            let ws = weight_system(&d, &l).unwrap();
            let b = BasisConfig::omega(d.rank());
            let th = theta_torus(&ws, &b).unwrap();
            let m = differential_at_identity(&th.coordinates, &b);
            for (i, row) in m.iter().enumerate() {
                for (k, x) in row.iter().enumerate() {
                    assert_eq!(*x, q((i == k) as i64), "{g} ({i},{k})");
                }
            }
        }
    }

    #[test]
    fn a1_defining() {
        let d = RootDatum::from_label("A1").unwrap();
        let ws = weight_system(&d, &[1]).unwrap();
        assert_eq!(ws.entries, vec![(vec![1], 1), (vec![-1], 1)]);
        assert_eq!(trace_form(&ws).unwrap(), vec![vec![q(2)]]);
        let th = theta_torus(&ws, &BasisConfig::omega(1)).unwrap();
        assert_eq!(th.coordinates[0].to_text(), "1/2*t1 - 1/2*t1^-1");
    }

    #[test]
    fn trivial_rep_rejected() {
        let d = RootDatum::from_label("A2").unwrap();
        let ws = weight_system(&d, &[0, 0]).unwrap();
        assert_eq!(trace_form(&ws), Err(Error::DegenerateForm));
        assert!(weight_system(&d, &[-1, 0]).is_err());
    }

    #[test]
    fn small_dimensions() {
        let g2 = RootDatum::from_label("G2").unwrap();
        let ws = weight_system(&g2, &[1, 0]).unwrap();
        assert_eq!(ws.dimension(), 7);
        assert_eq!(ws.entries.len(), 7);
        assert_eq!(ws.multiplicity(&[0, 0]), 1);
        let f4 = RootDatum::from_label("F4").unwrap();
        let ws = weight_system(&f4, &[0, 0, 0, 1]).unwrap();
        assert_eq!(ws.dimension(), 26);
        assert_eq!(ws.multiplicity(&[0, 0, 0, 0]), 2);
        assert_eq!(d_weyl(&f4, &[1, 0, 0, 0]), qr(52, 1));
    }

    fn d_weyl(d: &RootDatum, l: &[i64]) -> Q {
        d.weyl_dimension(l)
    }
}
