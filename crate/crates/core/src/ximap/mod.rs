//! `ξ^P_λ = β^P ∘ (θ_λ(P)^*)^{-1}` on the tabulated generators, compared
//! against the transcribed tables, plus the type-D Chern class identity and
//! the functoriality and homomorphism self-checks.

pub mod corpus;
pub mod dn;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::library::{CaseLibrary, Generator, GeneratorFamily};
use crate::polyalg::{Poly, VarSpace, Q};
use crate::schubert::duan::{duan_matrix, duan_operator, IntPoly};
use crate::schubert::{Calculus, Engine, SchubertClass, Space, SupportMode, TermJson};

pub use dn::{chern_quotient_d, verify_theorem_xi_d};

/// `ξ^{P_r}(f)` for `f` already in the ω-variables.
pub fn xi_image(calc: &Calculus, r: usize, f: &Poly) -> Result<SchubertClass> {
    calc.datum.check_index(r)?;
    calc.borel_image(f, &Space::maximal(r), SupportMode::Auto)
}

/// `β(f)` through Duan's formula: the coefficient of `ε_w` is
/// `T_{A_w}(f(ω_i ↦ Σ_{i_p = i} x_p))` for the canonical reduced word of `w`.
pub fn duan_borel_image(calc: &Calculus, f: &Poly, space: &Space) -> Result<SchubertClass> {
    let mut out = SchubertClass::zero(calc.group(), space.clone());
    let degrees: Vec<i64> = {
        let mut ds: Vec<i64> = f.terms().map(|(e, _)| e.iter().map(|&x| x as i64).sum()).collect();
        ds.sort();
        ds.dedup();
        ds
    };
    for d in degrees {
        let part = f.homogeneous_part(d);
        let k = d as usize;
        if k == 0 {
            out.add_term(vec![], part.coeff(&vec![0; f.space().len()]));
            continue;
        }
        let level = calc.level(space, k)?;
        let terms: Vec<(Vec<usize>, Q)> = level
            .par_iter()
            .map(|w| duan_coefficient(calc, &part, &w.word).map(|c| (w.word.clone(), c)))
            .collect::<Result<Vec<_>>>()?;
        for (w, c) in terms {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

fn duan_coefficient(calc: &Calculus, f: &Poly, word: &[usize]) -> Result<Q> {
    let k = word.len();
    let xs = VarSpace::indexed("x", k);
    let images: Vec<Poly> = (1..=calc.datum.rank())
        .map(|i| {
            let mut p = Poly::zero(&xs);
            for (pos, &l) in word.iter().enumerate() {
                if l == i {
                    p = &p + &Poly::var(&xs, pos);
                }
            }
            p
        })
        .collect();
    let g = f.compose(&images)?;
    let den = g.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut h = IntPoly::new();
    for (e, c) in g.terms() {
        let n = (c * Q::from_integer(den.clone())).to_integer();
        h.insert(e.iter().map(|&x| x as u8).collect(), n);
    }
    if h.is_empty() {
        return Ok(Q::zero());
    }
    let a = duan_matrix(&calc.datum, word)?;
    Ok(Q::new(duan_operator(&a, &h)?, den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowStatus {
    #[serde(rename = "match")]
    Match,
    /// The two engines disagree with each other.
    #[serde(rename = "mismatch")]
    Mismatch,
    /// Both engines agree, the table says otherwise.
    #[serde(rename = "mismatch(paper)")]
    MismatchPaper,
    /// In the presentation but without a tabulated image.
    #[serde(rename = "untabulated")]
    Untabulated,
    #[serde(rename = "skipped")]
    Skipped,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "mismatch",
            RowStatus::MismatchPaper => "mismatch(paper)",
            RowStatus::Untabulated => "untabulated",
            RowStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XiRow {
    pub parabolic: usize,
    pub generator: String,
    /// The generator in the Θ-variables.
    pub theta: String,
    pub degree: usize,
    pub image: Vec<TermJson>,
    pub paper: String,
    pub status: RowStatus,
    /// The Duan-route image, kept when it differs from `image`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duan: Option<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XiReport {
    pub group: String,
    pub lambda: Vec<i64>,
    pub rows: Vec<XiRow>,
}

impl XiReport {
    pub fn count(&self, s: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == s).count()
    }

    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| matches!(r.status, RowStatus::Match | RowStatus::Skipped | RowStatus::Untabulated))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} lambda={:?}\n", self.group, self.lambda);
        for r in &self.rows {
            let img = terms_text(&r.image);
            s.push_str(&format!("P{} {} [{}]: {} -> {}", r.parabolic, r.generator, r.status.as_str(), r.theta, img));
            if matches!(r.status, RowStatus::MismatchPaper | RowStatus::Mismatch) {
                s.push_str(&format!("  (paper: {})", r.paper));
            }
            if let Some(d) = &r.duan {
                s.push_str(&format!("  (duan: {})", terms_text(d)));
            }
            s.push('\n');
        }
        s
    }
}

fn terms_text(t: &[TermJson]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, x) in t.iter().enumerate() {
        let w = if x.word.is_empty() {
            "e".to_string()
        } else {
            x.word.iter().map(|i| format!("s{i}")).collect::<String>()
        };
        let (neg, c) = match x.coeff.strip_prefix('-') {
            Some(c) => (true, c),
            None => (false, x.coeff.as_str()),
        };
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if c != "1" {
            s.push_str(c);
            s.push(' ');
        }
        s.push_str(&format!("e[{w}]"));
    }
    s
}

/// The table entry as a class in canonical words; non-reduced or
/// non-minimal words are errors.
pub fn paper_class(calc: &Calculus, r: usize, terms: &[TermJson]) -> Result<SchubertClass> {
    let space = Space::maximal(r);
    let levi = space.levi(calc.datum.rank());
    let mut c = SchubertClass::zero(calc.group(), space);
    for t in terms {
        let e = calc.datum.element_from_word(&t.word)?;
        if e.length != t.word.len() {
            return Err(Error::NotReduced(t.word.clone()));
        }
        if !calc.datum.is_min_rep(&e, &levi) {
            return Err(Error::NotParabolic { class: t.coeff.clone(), node: r, word: t.word.clone() });
        }
        c.add_term(e.word.clone(), crate::polyalg::parse_q(&t.coeff)?);
    }
    Ok(c)
}

/// Options for [`report_section`].
#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Generators above this degree are skipped; `None` for no limit.
    pub ceiling: Option<usize>,
    /// Restrict to these parabolics.
    pub parabolics: Option<Vec<usize>>,
    /// Lift the built-in ceilings (E6 10, E7 6).
    pub allow_expensive: bool,
}

pub fn default_ceiling(group: &str) -> Option<usize> {
    match group {
        "E6" => Some(10),
        "E7" => Some(6),
        _ => None,
    }
}

fn theta_text(p: &Poly) -> String {
    let th = VarSpace::indexed("Theta", p.space().len());
    p.rename(&th).to_text()
}

pub fn xi_row(calc: &Calculus, r: usize, g: &Generator) -> Result<XiRow> {
    let image = xi_image(calc, r, &g.poly)?;
    let duan = duan_borel_image(calc, &g.poly, &Space::maximal(r))?;
    let mut row = XiRow {
        parabolic: r,
        generator: g.name.clone(),
        theta: theta_text(&g.poly),
        degree: g.degree,
        image: image.to_json_terms(),
        paper: String::new(),
        status: RowStatus::Untabulated,
        duan: None,
        note: g.note.clone(),
    };
    if image.degree().is_some_and(|d| d != 2 * g.degree) {
        return Err(Error::DegreeMismatch { expected: 2 * g.degree as i64, got: image.to_text() });
    }
    if g.paper.is_empty() {
        if image != duan {
            row.status = RowStatus::Mismatch;
            row.duan = Some(duan.to_json_terms());
        }
        return Ok(row);
    }
    let paper = paper_class(calc, r, &g.paper)?;
    row.paper = paper.to_text();
    row.status = match (image == duan, image == paper) {
        (true, true) => RowStatus::Match,
        (true, false) => RowStatus::MismatchPaper,
        (false, _) => RowStatus::Mismatch,
    };
    if image != duan {
        row.duan = Some(duan.to_json_terms());
    }
    Ok(row)
}

/// One row per tabulated generator, in table order.
pub fn report_section(calc: &Calculus, opts: &ReportOptions) -> Result<XiReport> {
    let group = calc.group().to_string();
    let lib = CaseLibrary::builtin();
    let lambda = lib.group(&group)?.weight.clone();
    let mut ceiling = opts.ceiling;
    if !opts.allow_expensive {
        ceiling = match (ceiling, default_ceiling(&group)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    let mut jobs: Vec<(usize, Generator)> = Vec::new();
    for case in lib.cases.iter().filter(|c| c.group == group) {
        if opts.parabolics.as_ref().is_some_and(|p| !p.contains(&case.r)) {
            continue;
        }
        let fam: GeneratorFamily = lib.family(&group, case.r)?;
        for g in fam.generators {
            jobs.push((case.r, g));
        }
    }
    let rows = jobs
        .par_iter()
        .map(|(r, g)| {
            if ceiling.is_some_and(|c| g.degree > c) {
                return Ok(XiRow {
                    parabolic: *r,
                    generator: g.name.clone(),
                    theta: theta_text(&g.poly),
                    degree: g.degree,
                    image: vec![],
                    paper: paper_class(calc, *r, &g.paper).map(|p| p.to_text()).unwrap_or_default(),
                    status: RowStatus::Skipped,
                    duan: None,
                    note: g.note.clone(),
                });
            }
            xi_row(calc, *r, g)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(XiReport { group, lambda, rows })
}

/// `ξ^P(f) = ξ^Q(f)` for a `W_{L_Q}`-invariant `f`, with `P ⊂ Q` given by
/// their removed node sets (`P` removes a superset). Returns the generator
/// names that failed.
pub fn functoriality_check(calc: &Calculus, p: &Space, qs: &Space, gens: &[(String, Poly)]) -> Result<Vec<String>> {
    let n = calc.datum.rank();
    let lp = p.levi(n);
    let lq = qs.levi(n);
    if !lp.iter().all(|j| lq.contains(j)) {
        return Err(Error::Invalid(format!("{} is not contained in {}", p.label(), qs.label())));
    }
    let mut bad = Vec::new();
    for (name, f) in gens {
        let a = calc.borel_image(f, p, SupportMode::Full)?;
        let b = calc.borel_image(f, qs, SupportMode::Auto)?;
        if a.support != b.support {
            bad.push(name.clone());
        }
    }
    Ok(bad)
}

/// `ξ(f·g) = ξ(f) ∪ ξ(g)` on pairs of monomials in the generators of one
/// family (total degree at most `max_degree`), the cup product taken with
/// the Duan engine. Returns (pairs tried, failures).
pub fn homomorphism_check(
    calc: &Calculus,
    fam: &GeneratorFamily,
    max_degree: usize,
    limit: usize,
) -> Result<(usize, Vec<(String, String)>)> {
    let gens: Vec<&Generator> = fam.generators.iter().filter(|g| g.degree >= 1 && g.degree < max_degree).collect();
    let mut elems: Vec<(String, Poly, usize)> = Vec::new();
    fn go(gens: &[&Generator], start: usize, name: String, f: Poly, deg: usize, cap: usize, out: &mut Vec<(String, Poly, usize)>) {
        for (i, g) in gens.iter().enumerate().skip(start) {
            if deg + g.degree > cap {
                continue;
            }
            let n = if name.is_empty() { g.name.clone() } else { format!("{name}*{}", g.name) };
            let p = &f * &g.poly;
            out.push((n.clone(), p.clone(), deg + g.degree));
            go(gens, i, n, p, deg + g.degree, cap, out);
        }
    }
    if let Some(g) = gens.first() {
        go(&gens, 0, String::new(), Poly::one(g.poly.space()), 0, max_degree.saturating_sub(1), &mut elems);
    }
    elems.sort_by_key(|e| e.2);
    let mut pairs = Vec::new();
    for (a, ea) in elems.iter().enumerate() {
        for eb in &elems[a..] {
            if ea.2 + eb.2 <= max_degree {
                pairs.push((ea, eb));
            }
        }
    }
    pairs.sort_by_key(|(a, b)| a.2 + b.2);
    pairs.truncate(limit);
    let results = pairs
        .par_iter()
        .map(|(a, b)| {
            let lhs = xi_image(calc, fam.r, &(&a.1 * &b.1))?;
            let rhs = calc.cup_product(&xi_image(calc, fam.r, &a.1)?, &xi_image(calc, fam.r, &b.1)?, Engine::Duan)?;
            Ok((lhs == rhs, a.0.clone(), b.0.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let bad = results.into_iter().filter(|(ok, _, _)| !ok).map(|(_, a, b)| (a, b)).collect();
    Ok((pairs.len(), bad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::case_generators;

    #[test]
    fn g2_rows() {
        let calc = Calculus::from_label("G2").unwrap();
        let f = case_generators("G2", 2).unwrap();
        let row = xi_row(&calc, 2, &f.generators[1]).unwrap();
        assert_eq!(row.status, RowStatus::Match);
        assert_eq!(row.image, vec![TermJson { word: vec![1, 2], coeff: "1".into() }]);
        assert_eq!(row.theta, "-Theta1^2 + Theta1*Theta2");
    }

    #[test]
    fn duan_route_agrees_on_monomials() {
        let calc = Calculus::from_label("B3").unwrap();
        let sp = calc.omega_space();
        for text in ["w1^2*w3", "w2^3 - w1*w3^2", "w3^4 + 2*w1*w2*w3^2"] {
            let f = Poly::parse(text, &sp).unwrap();
            let a = calc.borel_image(&f, &Space::Borel, SupportMode::Full).unwrap();
            let b = duan_borel_image(&calc, &f, &Space::Borel).unwrap();
            assert_eq!(a, b, "{text}");
        }
    }

    #[test]
    fn paper_words_canonicalized() {
        let calc = Calculus::from_label("G2").unwrap();
        let c = paper_class(&calc, 1, &[TermJson { word: vec![2, 1], coeff: "3/4".into() }]).unwrap();
        assert_eq!(c.to_text(), "3/4 e[s2s1]");
        assert!(paper_class(&calc, 1, &[TermJson { word: vec![1, 2], coeff: "1".into() }]).is_err());
    }
}
