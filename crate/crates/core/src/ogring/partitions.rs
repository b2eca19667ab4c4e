//! Typed k-strict partitions indexing the Schubert classes of `OG(n-k, 2n)`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KStrictPartition {
    pub parts: Vec<usize>,
    pub k: usize,
    /// 0 when no part equals `k`, otherwise 1 or 2.
    pub type_tag: u8,
}

impl KStrictPartition {
    pub fn new(parts: Vec<usize>, k: usize, type_tag: u8) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        if parts.windows(2).any(|w| w[0] > k && w[0] == w[1]) {
            return Err(Error::Invalid(format!("{parts:?} repeats a part greater than {k}")));
        }
        let has_k = parts.contains(&k);
        let ok = match type_tag {
            0 => !has_k,
            1 | 2 => has_k,
            _ => false,
        };
        if !ok {
            return Err(Error::Invalid(format!("type {type_tag} not allowed for {parts:?} with k={k}")));
        }
        Ok(KStrictPartition { parts, k, type_tag })
    }

    pub fn empty(k: usize) -> Self {
        KStrictPartition { parts: Vec::new(), k, type_tag: 0 }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Inside the `(n-k) x (n+k-1)` rectangle.
    pub fn fits(&self, n: usize) -> bool {
        n > self.k && self.length() <= n - self.k && self.parts.first().map_or(true, |&p| p < n + self.k)
    }

    pub fn to_text(&self) -> String {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        match self.type_tag {
            0 => format!("({})", body.join(",")),
            t => format!("({})_{t}", body.join(",")),
        }
    }
}

fn strict_parts(k: usize, max_part: usize, max_len: usize, m: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if m == 0 {
        out.push(prefix.clone());
        return;
    }
    if prefix.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(m)).rev() {
        prefix.push(p);
        // parts above k may not repeat
        let next_max = if p > k { p - 1 } else { p };
        strict_parts(k, next_max, max_len, m - p, prefix, out);
        prefix.pop();
    }
}

/// All typed k-strict partitions of `m`, inside the rectangle for `n` when
/// given. A partition with a part equal to `k` is listed once per type 1, 2.
pub fn kstrict_enumerate(k: usize, n: Option<usize>, m: usize) -> Vec<KStrictPartition> {
    let (max_part, max_len) = match n {
        Some(n) if n > k => (n + k - 1, n - k),
        Some(_) => return if m == 0 { vec![KStrictPartition::empty(k)] } else { Vec::new() },
        None => (m, m),
    };
    let mut raw = Vec::new();
    strict_parts(k, max_part, max_len, m, &mut Vec::new(), &mut raw);
    let mut out = Vec::new();
    for parts in raw {
        if parts.contains(&k) {
            out.push(KStrictPartition { parts: parts.clone(), k, type_tag: 1 });
            out.push(KStrictPartition { parts, k, type_tag: 2 });
        } else {
            out.push(KStrictPartition { parts, k, type_tag: 0 });
        }
    }
    out
}

/// Number of typed k-strict partitions of each size `0..=top`.
pub fn typed_counts(k: usize, n: Option<usize>, top: usize) -> Vec<usize> {
    (0..=top).map(|m| kstrict_enumerate(k, n, m).len()).collect()
}

/// Largest size of a partition in `P̃(k, n)`, the dimension of `OG(n-k, 2n)`.
pub fn top_degree(k: usize, n: usize) -> usize {
    let mut best = 0;
    let mut part = n + k - 1;
    for _ in 0..n - k {
        best += part;
        if part > k {
            part -= 1;
        }
    }
    best
}

/// `p'_1 < ... < p'_ℓ` by the displayed formula, reading `λ_0` as `+∞`.
pub fn index_set(lambda: &KStrictPartition, n: usize) -> Result<Vec<usize>> {
    if !lambda.fits(n) {
        return Err(Error::Invalid(format!("{} is outside the rectangle for n={n}", lambda.to_text())));
    }
    let k = lambda.k;
    let l = &lambda.parts;
    let mut out = Vec::with_capacity(l.len());
    for j in 1..=l.len() {
        let lj = l[j - 1];
        let count = (1..j).filter(|&i| l[i - 1] + lj <= 2 * k - 1 + j - i).count();
        let prev_bigger = j == 1 || l[j - 2] > lj;
        let one = lj > k || (lj == k && prev_bigger && (n - 1 + j + lambda.type_tag as usize) % 2 == 0);
        let p = (n + k - 1 + count + if one { 1 } else { 2 })
            .checked_sub(lj)
            .ok_or_else(|| Error::Invalid("negative index".into()))?;
        out.push(p);
    }
    Ok(out)
}

/// Flag index of the single Schubert condition defining the special class
/// `X_p`, `p != k`.
pub fn epsilon(p: usize, k: usize, n: usize) -> usize {
    n + k - p + if p <= k { 2 } else { 1 }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialClass {
    pub name: String,
    pub degree: usize,
    /// The flag member met nontrivially: `F_i` or the alternate `F~_n`.
    pub condition: String,
}

/// `X_1, .., X_k, X'_k, X_{k+1}, .., X_{n+k-1}` with their defining conditions.
pub fn special_classes(k: usize, n: usize) -> Vec<SpecialClass> {
    let mut out = Vec::new();
    for p in 1..n + k {
        let condition = if p == k { format!("F_{n}") } else { format!("F_{}", epsilon(p, k, n)) };
        out.push(SpecialClass { name: format!("t{p}"), degree: p, condition });
        if p == k {
            out.push(SpecialClass { name: format!("t{k}'"), degree: k, condition: format!("F~_{n}") });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        assert_eq!(kstrict_enumerate(2, None, 0), vec![KStrictPartition::empty(2)]);
        let two: Vec<String> = kstrict_enumerate(2, None, 2).iter().map(|p| p.to_text()).collect();
        assert_eq!(two, vec!["(2)_1", "(2)_2", "(1,1)"]);
        assert!(kstrict_enumerate(2, None, 6).iter().all(|p| p.parts != vec![3, 3]));
        assert!(kstrict_enumerate(2, None, 4).iter().any(|p| p.parts == vec![2, 2]));
    }

    #[test]
    fn validation() {
        assert!(KStrictPartition::new(vec![3, 3], 2, 0).is_err());
        assert!(KStrictPartition::new(vec![2, 2], 2, 0).is_err());
        assert!(KStrictPartition::new(vec![2, 2], 2, 2).is_ok());
        assert!(KStrictPartition::new(vec![1], 2, 1).is_err());
    }

    #[test]
    fn index_sets() {
        let p = |parts: Vec<usize>, t| KStrictPartition::new(parts, 2, t).unwrap();
        assert_eq!(index_set(&KStrictPartition::empty(2), 4).unwrap(), Vec::<usize>::new());
        assert_eq!(index_set(&p(vec![1], 0), 4).unwrap(), vec![6]);
        assert_eq!(index_set(&p(vec![3], 0), 4).unwrap(), vec![3]);
        assert!(index_set(&p(vec![6], 0), 4).is_err());
        assert!(index_set(&p(vec![1, 1, 1], 0), 4).is_err());
    }

    #[test]
    fn index_sets_are_injective() {
        for (n, k) in [(4, 2), (5, 2), (5, 3), (6, 3)] {
            let mut seen = std::collections::HashSet::new();
            for m in 0..=top_degree(k, n) {
                for l in kstrict_enumerate(k, Some(n), m) {
                    let s = index_set(&l, n).unwrap();
                    assert!(s.windows(2).all(|w| w[0] < w[1]), "{}", l.to_text());
                    assert!(s.iter().all(|&p| (1..=2 * n).contains(&p)));
                    assert!(seen.insert(s), "n={n} k={k} {}", l.to_text());
                }
            }
        }
    }

    #[test]
    fn specials() {
        let s = special_classes(2, 4);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0].condition, "F_7");
        assert_eq!(s[2].condition, "F~_4");
        assert_eq!(s[3].condition, "F_4");
    }

    #[test]
    fn special_conditions_sit_one_above_index_sets() {
        // the single-row index set is the codimension-correct flag member
        for (n, k) in [(4, 2), (5, 2), (5, 3)] {
            for p in (1..n + k).filter(|&p| p != k) {
                let l = KStrictPartition::new(vec![p], k, 0).unwrap();
                assert_eq!(index_set(&l, n).unwrap(), vec![epsilon(p, k, n) - 1], "n={n} k={k} p={p}");
            }
        }
    }
}
