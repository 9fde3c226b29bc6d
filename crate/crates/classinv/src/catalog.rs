//! Closed-form Hilbert series shipped in `data/golden.json`.

use std::sync::OnceLock;

use classinv_core::rational::RationalForm;
use classinv_core::{GroupId, GroupKind};
use num_bigint::BigInt;
use serde::Deserialize;

const GOLDEN_JSON: &str = include_str!("../data/golden.json");

#[derive(Deserialize)]
struct RawCatalog {
    entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawEntry {
    key: String,
    example: String,
    group: String,
    n: usize,
    spec: String,
    printed: String,
    numerator: Vec<i64>,
    denominator: Vec<(usize, usize)>,
    maxdeg: usize,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct GoldenEntry {
    /// `example/group/n`, e.g. `5.4/sp/2`.
    pub key: String,
    pub example: String,
    pub group: GroupId,
    pub spec_text: String,
    /// The closed form as printed, before any normalization.
    pub printed: String,
    pub form: RationalForm,
    /// Degree to which the entry is checked against the engine.
    pub check_degree: usize,
    pub note: Option<String>,
}

/// All catalog entries, in file order.
pub fn golden_forms() -> &'static [GoldenEntry] {
    static CATALOG: OnceLock<Vec<GoldenEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let raw: RawCatalog = serde_json::from_str(GOLDEN_JSON).expect("bundled catalog parses");
        raw.entries.into_iter().map(|e| convert(e).expect("bundled catalog entry is valid")).collect()
    })
}

fn convert(e: RawEntry) -> Result<GoldenEntry, String> {
    let kind: GroupKind = e.group.parse().map_err(|err| format!("{}: {err}", e.key))?;
    let group = GroupId::new(kind, e.n).map_err(|err| format!("{}: {err}", e.key))?;
    if normalize_key(&e.key).as_deref() != Some(e.key.as_str()) {
        return Err(format!("catalog key {} is not normalized", e.key));
    }
    Ok(GoldenEntry {
        key: e.key,
        example: e.example,
        group,
        spec_text: e.spec,
        printed: e.printed,
        form: RationalForm::new(e.numerator.into_iter().map(BigInt::from).collect(), e.denominator),
        check_degree: e.maxdeg,
        note: e.note,
    })
}

/// Accepts `5.4/sp/2`, `5.4,SP,2` or `(5.4, SP, 2)` and returns the canonical
/// `5.4/sp/2`.
pub fn normalize_key(text: &str) -> Option<String> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let fields: Vec<&str> = trimmed.split(['/', ',']).map(str::trim).collect();
    let [example, group, n] = fields.as_slice() else { return None };
    let kind: GroupKind = group.parse().ok()?;
    let n: usize = n.parse().ok()?;
    Some(format!("{example}/{}/{n}", kind.name().to_ascii_lowercase()))
}

pub fn lookup(key: &str) -> Option<&'static GoldenEntry> {
    let key = normalize_key(key)?;
    golden_forms().iter().find(|e| e.key == key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use classinv_core::rational::expand_rational;
    use classinv_core::TruncatedSeries;

    #[test]
    fn catalog_loads() {
        let all = golden_forms();
        assert!(all.len() >= 30);
        let mut keys: Vec<&str> = all.iter().map(|e| e.key.as_str()).collect();
        keys.sort_unstable();
        keys.dedup();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn key_forms() {
        assert_eq!(normalize_key("(5.4, SP, 2)").as_deref(), Some("5.4/sp/2"));
        assert_eq!(normalize_key("5.5,so,2").as_deref(), Some("5.5/so/2"));
        assert_eq!(normalize_key("5.5/so"), None);
        assert!(lookup("5.3/SO/3").is_some());
        assert!(lookup("9.9/so/3").is_none());
    }

    #[test]
    fn documented_entries() {
        let e = lookup("5.4/o/2").unwrap();
        assert_eq!(e.form, RationalForm::from_i64(&[1], &[(2, 2), (4, 1)]));
        let e = lookup("5.4/sp/2").unwrap();
        assert_eq!(expand_rational(&e.form, 8), TruncatedSeries::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        // V + L2(V) under SO(3): 1/((1 - t^2) (1 - t^2)^2)
        assert_eq!(lookup("5.3/so/3").unwrap().form, RationalForm::from_i64(&[1], &[(2, 3)]));
        let e = lookup("5.5/so/2").unwrap();
        assert_eq!(expand_rational(&e.form, 3), TruncatedSeries::from_i64(&[1, 1, 3, 5]));
    }

    #[test]
    fn one_plus_t_normalization() {
        // N/(D (1+t)) stored as N (1-t) / (D (1-t^2))
        let e = lookup("5.6/so/3").unwrap();
        let mut n = vec![0i64; 16];
        for (d, c) in [(0, 1), (1, 1), (3, -2), (5, 1), (6, 5), (7, 5), (8, 5), (9, 1), (11, -2), (13, 1), (14, 1)] {
            n[d] += c;
            n[d + 1] -= c;
        }
        assert_eq!(e.form, RationalForm::from_i64(&n, &[(2, 3), (3, 2), (4, 2), (5, 1)]));
    }
}
