//! The tabulated generator families of the maximal parabolics of `G_2`,
//! `F_4`, `E_6` and `E_7`, loaded from `data/case_library.json`.
//!
//! Schema: `groups[]` gives the representation for each group (`weight`, the
//! highest weight in ω-coordinates, and an optional character `basis`).
//! `cases[]` holds one entry per `(group, r)`:
//! - `y_defs[]`: `{name, form}` with `form` a linear combination of
//!   `Theta1..Thetan`, read as the ω-variables;
//! - `generators[]`: `{name, kind, .., paper, note?}` where `kind` is one of
//!   `expr {expr}`, `power {expr, exp}`, `esym {k, args, squared}` or
//!   `psi {m, scale}`; expressions use the y-names and `Theta` variables;
//!   `paper` lists the tabulated Schubert expansion as `{word, coeff}`;
//! - `relations[]`: `{name, expr}`, expressions in the y-names that vanish.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{elementary_symmetric, parse_q, q, Poly, VarSpace, Q};
use crate::rootsys::RootDatum;
use crate::schubert::TermJson;

const LIBRARY_JSON: &str = include_str!("../../data/case_library.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub group: String,
    pub weight: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedExpr {
    pub name: String,
    #[serde(alias = "expr")]
    pub form: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub name: String,
    pub expr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorKind {
    Expr { expr: String },
    Power { expr: String, exp: u32 },
    Esym { k: usize, args: Vec<String>, squared: bool },
    Psi { m: u32, scale: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub paper: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseEntry {
    pub group: String,
    pub r: usize,
    pub y_defs: Vec<NamedExpr>,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<RelationEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseLibrary {
    pub version: u32,
    pub groups: Vec<GroupEntry>,
    pub cases: Vec<CaseEntry>,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    /// Polynomial in the ω-variables, scale factor already applied.
    pub poly: Poly,
    pub degree: usize,
    pub scale: Q,
    /// The tabulated Schubert expansion of the image.
    pub paper: Vec<TermJson>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    pub group: String,
    pub r: usize,
    pub y_defs: Vec<(String, Poly)>,
    pub generators: Vec<Generator>,
    pub relations: Vec<(String, Poly)>,
}

impl GeneratorFamily {
    pub fn scale_factors(&self) -> Vec<Q> {
        self.generators.iter().map(|g| g.scale.clone()).collect()
    }

    /// Generators with their degrees, as needed by the span check.
    pub fn graded(&self) -> Vec<(Poly, usize)> {
        self.generators.iter().map(|g| (g.poly.clone(), g.degree)).collect()
    }
}

impl CaseLibrary {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("case library: {e}")))
    }

    /// The library shipped with the crate.
    pub fn builtin() -> &'static CaseLibrary {
        static LIB: OnceLock<CaseLibrary> = OnceLock::new();
        LIB.get_or_init(|| CaseLibrary::parse(LIBRARY_JSON).expect("embedded case library"))
    }

    pub fn builtin_text() -> &'static str {
        LIBRARY_JSON
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn case(&self, group: &str, r: usize) -> Result<&CaseEntry> {
        self.cases
            .iter()
            .find(|c| c.group == group && c.r == r)
            .ok_or_else(|| Error::UnknownCase { group: group.to_string(), r })
    }

    pub fn group(&self, group: &str) -> Result<&GroupEntry> {
        self.groups
            .iter()
            .find(|g| g.group == group)
            .ok_or_else(|| Error::UnknownCase { group: group.to_string(), r: 0 })
    }

    pub fn family(&self, group: &str, r: usize) -> Result<GeneratorFamily> {
        build_family(self.case(group, r)?)
    }
}

pub fn case_generators(group: &str, r: usize) -> Result<GeneratorFamily> {
    CaseLibrary::builtin().family(group, r)
}

fn build_family(case: &CaseEntry) -> Result<GeneratorFamily> {
    let d = RootDatum::from_label(&case.group)?;
    let n = d.rank();
    let w = super::omega_space(n);
    let theta = VarSpace::indexed("Theta", n);

    let mut y_defs = Vec::new();
    for y in &case.y_defs {
        let p = Poly::parse(&y.form, &theta)?.rename(&w);
        y_defs.push((y.name.clone(), p));
    }
    // expressions may mention y-names and Theta variables
    let mut names: Vec<String> = y_defs.iter().map(|(s, _)| s.clone()).collect();
    names.extend(theta.names().iter().cloned());
    let mixed = VarSpace::new(names);
    let mut images: Vec<Poly> = y_defs.iter().map(|(_, p)| p.clone()).collect();
    images.extend((0..n).map(|i| Poly::var(&w, i)));
    let eval = |text: &str| -> Result<Poly> { Poly::parse(text, &mixed)?.compose(&images) };
    let lookup = |name: &str| -> Result<Poly> {
        y_defs
            .iter()
            .find(|(s, _)| s == name)
            .map(|(_, p)| p.clone())
            .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))
    };

    let mut generators = Vec::new();
    for g in &case.generators {
        let (poly, scale) = match &g.kind {
            GeneratorKind::Expr { expr } => (eval(expr)?, q(1)),
            GeneratorKind::Power { expr, exp } => (eval(expr)?.pow(*exp), q(1)),
            GeneratorKind::Esym { k, args, squared } => {
                let xs = args
                    .iter()
                    .map(|a| lookup(a).map(|p| if *squared { &p * &p } else { p }))
                    .collect::<Result<Vec<_>>>()?;
                (elementary_symmetric(*k, &xs, &w)?, q(1))
            }
            GeneratorKind::Psi { m, scale } => {
                if case.group != "E7" {
                    return Err(Error::Invalid(format!("psi generator in {}", case.group)));
                }
                let s = parse_q(scale)?;
                (super::e6_psi(*m)?.scale(&s), s)
            }
        };
        let degree = poly
            .homogeneous_degree()
            .ok_or_else(|| Error::Invalid(format!("generator {} is not homogeneous", g.name)))?;
        generators.push(Generator {
            name: g.name.clone(),
            poly,
            degree: degree as usize,
            scale,
            paper: g.paper.clone(),
            note: g.note.clone(),
        });
    }

    let relations = case
        .relations
        .iter()
        .map(|rel| Ok((rel.name.clone(), eval(&rel.expr)?)))
        .collect::<Result<Vec<_>>>()?;

    Ok(GeneratorFamily { group: case.group.clone(), r: case.r, y_defs, generators, relations })
}

/// Tabulated cases per group.
pub fn tabulated_cases() -> BTreeMap<String, Vec<usize>> {
    let mut out: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for c in &CaseLibrary::builtin().cases {
        out.entry(c.group.clone()).or_default().push(c.r);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::check_invariance;

    #[test]
    fn round_trip() {
        let lib = CaseLibrary::builtin();
        assert_eq!(lib.to_json(), LIBRARY_JSON.trim_end());
        assert_eq!(&CaseLibrary::parse(&lib.to_json()).unwrap(), lib);
    }

    #[test]
    fn coverage() {
        let t = tabulated_cases();
        assert_eq!(t["G2"], vec![1, 2]);
        assert_eq!(t["F4"], (1..=4).collect::<Vec<_>>());
        assert_eq!(t["E6"], (1..=6).collect::<Vec<_>>());
        assert_eq!(t["E7"], (1..=7).collect::<Vec<_>>());
        assert!(matches!(case_generators("E8", 1), Err(Error::UnknownCase { .. })));
        assert!(case_generators("G2", 3).is_err());
    }

    #[test]
    fn g2_families() {
        let sp = crate::invariants::omega_space(2);
        let f = case_generators("G2", 2).unwrap();
        assert_eq!(f.generators[0].poly, Poly::parse("w2", &sp).unwrap());
        assert_eq!(f.generators[1].poly, Poly::parse("w1*w2 - w1^2", &sp).unwrap());
        let f = case_generators("G2", 1).unwrap();
        assert_eq!(f.generators[1].poly, Poly::parse("w2^2 - 3*w1*w2 + 9/4*w1^2", &sp).unwrap());
    }

    #[test]
    fn small_groups_invariant() {
        for (g, rs) in [("G2", 1..=2), ("F4", 1..=4)] {
            let d = RootDatum::from_label(g).unwrap();
            for r in rs {
                let f = case_generators(g, r).unwrap();
                for gen in &f.generators {
                    assert!(check_invariance(&d, r, &gen.poly).unwrap().passed(), "{g} {r} {}", gen.name);
                }
                for (name, rel) in &f.relations {
                    assert!(rel.is_zero(), "{name}");
                }
            }
        }
    }
}
