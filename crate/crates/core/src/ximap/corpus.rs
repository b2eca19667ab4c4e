//! The golden corpus: the Springer tables `Θ_i(t)` and the case library,
//! stored as transcribed text and guarded by SHA-256 checksums.
//!
//! A theta file has `#` comment lines and one line per coordinate:
//! `Theta_i: <scale> | <Laurent polynomial in t1..tn>`.

use std::path::Path;

use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::invariants::library::CaseLibrary;
use crate::polyalg::{parse_q, LaurentPoly, VarSpace, Q};
use crate::rootsys::RootDatum;
use crate::springer::{differential_at_identity, theta_torus, weight_system, BasisConfig, TorusMap};

pub const GROUPS: [&str; 4] = ["G2", "F4", "E6", "E7"];

const CHECKSUMS: &str = include_str!("../../data/CHECKSUMS");

/// Embedded corpus files by name.
pub fn embedded(name: &str) -> Option<&'static str> {
    Some(match name {
        "theta_G2.txt" => include_str!("../../data/theta_G2.txt"),
        "theta_F4.txt" => include_str!("../../data/theta_F4.txt"),
        "theta_E6.txt" => include_str!("../../data/theta_E6.txt"),
        "theta_E7.txt" => include_str!("../../data/theta_E7.txt"),
        "case_library.json" => CaseLibrary::builtin_text(),
        _ => return None,
    })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `(expected digest, file name)` pairs.
pub fn checksum_list(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (h, f) = l.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("checksum line {l:?}")))?;
            Ok((h.to_string(), f.trim().to_string()))
        })
        .collect()
}

/// Checks every file of the built-in checksum list, either the embedded
/// copies or those in `dir`. Returns the file names checked.
pub fn verify_checksums(dir: Option<&Path>) -> Result<Vec<String>> {
    let list = checksum_list(CHECKSUMS)?;
    let mut names = Vec::new();
    for (expected, name) in list {
        let got = match dir {
            None => sha256_hex(embedded(&name).ok_or_else(|| Error::Io(format!("no embedded file {name}")))?.as_bytes()),
            Some(d) => sha256_hex(read(&d.join(&name))?.as_bytes()),
        };
        if got != expected {
            return Err(Error::Checksum { file: name, expected, got });
        }
        names.push(name);
    }
    Ok(names)
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

/// Parses a theta file into its coordinates `Θ_1..Θ_n`.
pub fn parse_theta_file(text: &str, rank: usize) -> Result<Vec<LaurentPoly>> {
    let space = VarSpace::indexed("t", rank);
    let mut rows: Vec<Option<LaurentPoly>> = vec![None; rank];
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (head, rest) = line.split_once(':').ok_or_else(|| Error::Parse(format!("theta line {line:?}")))?;
        let i: usize = head
            .trim()
            .strip_prefix("Theta_")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("theta label {head:?}")))?;
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let (scale, body) = rest.split_once('|').ok_or_else(|| Error::Parse(format!("theta line {line:?}")))?;
        let p = LaurentPoly::parse(body.trim(), &space)?.scale(&parse_q(scale)?);
        rows[i - 1] = Some(p);
    }
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| Error::Parse(format!("Theta_{} missing", i + 1))))
        .collect()
}

/// `θ_λ|_T` for one of the tabulated groups, in the tabulated coordinates.
pub fn computed_theta(group: &str) -> Result<TorusMap> {
    let lib = CaseLibrary::builtin();
    let entry = lib.group(group)?;
    let d = RootDatum::from_label(group)?;
    let ws = weight_system(&d, &entry.weight)?;
    let basis = match &entry.basis {
        Some(b) => BasisConfig { characters: b.clone(), prefix: "t".into() },
        None => BasisConfig::omega(d.rank()),
    };
    theta_torus(&ws, &basis)
}

#[derive(Clone, Debug)]
pub struct ThetaComparison {
    pub group: String,
    /// Laurent terms compared (union of supports over all coordinates).
    pub terms: usize,
    /// `(i, computed - tabulated)` for every coordinate that differs.
    pub differences: Vec<(usize, LaurentPoly)>,
    /// `c` when the table's differential at the identity is `c·id`. The
    /// true map has `c = 1`.
    pub table_scale: Option<Q>,
}

impl ThetaComparison {
    pub fn passed(&self) -> bool {
        self.differences.is_empty()
    }
}

pub fn compare_theta(group: &str) -> Result<ThetaComparison> {
    let name = format!("theta_{group}.txt");
    let text = embedded(&name).ok_or_else(|| Error::UnknownCase { group: group.to_string(), r: 0 })?;
    let computed = computed_theta(group)?;
    let table = parse_theta_file(text, computed.coordinates.len())?;
    let mut terms = 0;
    let mut differences = Vec::new();
    for (i, (c, t)) in computed.coordinates.iter().zip(&table).enumerate() {
        let diff = c - t;
        let mut keys: Vec<Vec<i32>> = c.terms().map(|(e, _)| e.to_vec()).collect();
        keys.extend(t.terms().map(|(e, _)| e.to_vec()));
        keys.sort();
        keys.dedup();
        terms += keys.len();
        if !diff.is_zero() {
            differences.push((i + 1, diff));
        }
    }
    let dt = differential_at_identity(&table, &computed.basis);
    let c = dt[0][0].clone();
    let scalar = dt.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(k, x)| *x == if i == k { c.clone() } else { Q::zero() }));
    Ok(ThetaComparison { group: group.to_string(), terms, differences, table_scale: scalar.then_some(c) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_checksums() {
        let names = verify_checksums(None).unwrap();
        assert_eq!(names.len(), 5);
    }

    #[test]
    fn table_differentials() {
        for g in ["G2", "F4", "E7"] {
            assert_eq!(compare_theta(g).unwrap().table_scale, Some(crate::polyalg::q(1)), "{g}");
        }
        // the E6 table is three times the map whose differential is the identity
        let e6 = compare_theta("E6").unwrap();
        assert_eq!(e6.table_scale, Some(crate::polyalg::q(3)));
        let computed = computed_theta("E6").unwrap();
        let table = parse_theta_file(embedded("theta_E6.txt").unwrap(), 6).unwrap();
        for (c, t) in computed.coordinates.iter().zip(&table) {
            assert_eq!(&c.scale(&crate::polyalg::q(3)), t);
        }
    }

    #[test]
    fn g2_table() {
        let c = compare_theta("G2").unwrap();
        assert!(c.passed(), "{:?}", c.differences);
    }

    #[test]
    fn corrupted_file_rejected() {
        let dir = std::env::temp_dir().join(format!("repcoh-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("CHECKSUMS"), CHECKSUMS).unwrap();
        for (_, n) in checksum_list(CHECKSUMS).unwrap() {
            std::fs::write(dir.join(&n), embedded(&n).unwrap()).unwrap();
        }
        assert!(verify_checksums(Some(&dir)).is_ok());
        let t = embedded("theta_G2.txt").unwrap().replace("1/6", "1/7");
        std::fs::write(dir.join("theta_G2.txt"), t).unwrap();
        assert!(matches!(verify_checksums(Some(&dir)), Err(Error::Checksum { .. })));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
