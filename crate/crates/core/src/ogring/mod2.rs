//! The subring generated by `d = t_k - t_k'` and the `c_p`, presented by
//! `c_s² + 2 Σ_{p=1}^{s} (-1)^p c_{s+p} c_{s-p} = 0` (`s > k`) and
//! `c_k² - d² + 2 Σ_{p=1}^{k} (-1)^p c_{k+p} c_{k-p} = 0`, and the
//! injectivity of `e_i ↦ c_i² + 2 Σ_j (-1)^j c_{i+j} c_{i-j}` modulo 2.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::partitions::typed_counts;
use super::ring::{monomials_of_weight, rank_in_degree, FreePoly, Grading, PresentedRing, RingElement};
use super::xi_formula;
use crate::error::{Error, Result};
use crate::linalg::{Field, F2};
use crate::polyalg::Q;

/// Generators `c1..c(k-1), ck, d, c(k+1)..c(trunc)`.
struct Bar {
    k: usize,
    trunc: usize,
}

impl Bar {
    fn nvars(&self) -> usize {
        self.trunc + 1
    }

    fn c<F: Field>(&self, p: usize) -> FreePoly<F> {
        match p {
            0 => FreePoly::one(self.nvars()),
            p if p > self.trunc => FreePoly::zero(self.nvars()),
            p if p <= self.k => FreePoly::var(self.nvars(), p - 1),
            p => FreePoly::var(self.nvars(), p),
        }
    }

    fn d<F: Field>(&self) -> FreePoly<F> {
        FreePoly::var(self.nvars(), self.k)
    }

    fn relation<F: Field>(&self, s: usize) -> FreePoly<F> {
        let mut r = self.c::<F>(s).mul(&self.c(s));
        if s == self.k {
            r = r.sub(&self.d::<F>().mul(&self.d()));
        }
        for p in 1..=s {
            let two = F::from_i64(if p % 2 == 0 { 2 } else { -2 });
            r = r.add(&self.c::<F>(s + p).mul(&self.c(s - p)).scale(&two));
        }
        r
    }
}

/// The ring generated by `d` and the `c_p`, truncated at `trunc`.
pub fn bar_ring<F: Field>(k: usize, trunc: usize) -> Result<Arc<PresentedRing<F>>> {
    if k < 2 {
        return Err(Error::Invalid(format!("need k >= 2, got {k}")));
    }
    let b = Bar { k, trunc };
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for p in 1..=trunc {
        names.push(format!("c{p}"));
        weights.push(p);
        if p == k {
            names.push("d".to_string());
            weights.push(k);
        }
    }
    let rels = (k..)
        .take_while(|s| 2 * s <= trunc)
        .map(|s| (format!("Square_{s}"), b.relation::<F>(s)))
        .collect();
    let expected = typed_counts(k, None, trunc);
    PresentedRing::build(names, weights, rels, Grading::Truncated { trunc }, Some(&expected))
}

#[derive(Clone, Debug, Serialize)]
pub struct Mod2Degree {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mod2Report {
    pub k: usize,
    pub trunc: usize,
    /// One entry per even degree `0..=trunc` (`e_i` sits in degree `2i`).
    pub degrees: Vec<Mod2Degree>,
    /// Images of `e_i` for `i < k` equal `c_i²`.
    pub low_images_are_squares: bool,
    /// The image of `e_k` equals both `d²` and `c_k²`.
    pub top_image_is_d_squared: bool,
    /// `(t_k - t_k')² = c_k²` in the stable ring over 𝔽₂.
    pub tau_form_holds: bool,
    pub parity_samples: usize,
    pub parity_failures: usize,
}

impl Mod2Report {
    pub fn injective(&self) -> bool {
        self.degrees.iter().all(|d| d.rank == d.source_dim)
    }

    pub fn passed(&self) -> bool {
        self.injective()
            && self.low_images_are_squares
            && self.top_image_is_d_squared
            && self.tau_form_holds
            && self.parity_failures == 0
    }
}

/// Images of all monomials in `e_1..e_k` of degree `m` (`e_i` in degree `2i`).
fn source_images(
    ring: &Arc<PresentedRing<F2>>,
    images: &[RingElement<F2>],
    m: usize,
) -> Result<Vec<RingElement<F2>>> {
    let weights: Vec<usize> = (1..=images.len()).map(|i| 2 * i).collect();
    monomials_of_weight(&weights, m)
        .into_iter()
        .map(|e| {
            let mut acc = ring.one();
            for (img, &x) in images.iter().zip(&e) {
                for _ in 0..x {
                    acc = acc.mul(img)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Ranks of `𝔽₂[e_1..e_k] → 𝔽₂ ⊗ subring` in every degree up to `trunc`,
/// the closed forms of the images, and the parity argument on samples.
pub fn mod2_injectivity_check(k: usize, trunc: usize) -> Result<Mod2Report> {
    let ring = bar_ring::<F2>(k, trunc)?;
    let b = Bar { k, trunc };
    let mut images = Vec::new();
    for i in 1..=k {
        if 2 * i > trunc {
            break;
        }
        images.push(ring.element(&xi_formula(|p| b.c::<F2>(p), i))?);
    }
    let mut low = true;
    let mut top = images.len() == k;
    for (idx, img) in images.iter().enumerate() {
        let i = idx + 1;
        let ci = b.c::<F2>(i);
        let square = ring.element(&ci.mul(&ci))?;
        if i < k {
            low &= *img == square;
        } else {
            let d2 = ring.element(&b.d::<F2>().mul(&b.d()))?;
            top &= *img == d2 && *img == square;
        }
    }
    let mut degrees = Vec::new();
    for m in (0..=trunc).step_by(2) {
        let src = source_images(&ring, &images, m)?;
        degrees.push(Mod2Degree {
            degree: m,
            source_dim: src.len(),
            target_dim: ring.dimension(m),
            rank: rank_in_degree(&src, m),
        });
    }
    let tau_form_holds = if 2 * k <= trunc {
        let st = super::build_ring::<F2>(k, super::OgKind::Stable { trunc: 2 * k })?;
        let diff = st.tau(k)?.sub(&st.tau_prime()?);
        let ck = st.c(k)?;
        diff.mul(&diff)? == ck.mul(&ck)? && super::xi_generator_image(&st, k)? == ck.mul(&ck)?
    } else {
        false
    };
    let (parity_samples, parity_failures) = parity_check(k, 64, 0x5eed)?;
    Ok(Mod2Report {
        k,
        trunc,
        degrees,
        low_images_are_squares: low,
        top_image_is_d_squared: top,
        tau_form_holds,
        parity_samples,
        parity_failures,
    })
}

/// For random nonzero `f, g ∈ ℤ[e_1..e_k]`, the `e_k`-degree of `f²` is even
/// and that of `e_k g²` is odd, so the two never agree. Returns
/// `(samples, failures)`.
pub fn parity_check(k: usize, samples: usize, seed: u64) -> Result<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_poly = |rng: &mut ChaCha8Rng| -> FreePoly<Q> {
        let mut p = FreePoly::zero(k);
        while p.is_zero() {
            for _ in 0..rng.gen_range(1..4) {
                let e: Vec<u8> = (0..k).map(|_| rng.gen_range(0..3)).collect();
                p.add_term(e, Q::from_i64(rng.gen_range(-3..=3)));
            }
        }
        p
    };
    let ek_degree = |p: &FreePoly<Q>| p.terms().map(|(e, _)| e[k - 1]).max().unwrap_or(0) as usize;
    let ek = FreePoly::<Q>::var(k, k - 1);
    let mut failures = 0;
    for _ in 0..samples {
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let lhs = ek_degree(&f.mul(&f));
        let rhs = ek_degree(&ek.mul(&g).mul(&g));
        if lhs % 2 != 0 || rhs % 2 != 1 || f.mul(&f) == ek.mul(&g).mul(&g) {
            failures += 1;
        }
    }
    Ok((samples, failures))
}
