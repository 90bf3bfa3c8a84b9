//! The six colouring regimes: list size, sparsity hypothesis and the rule set
//! used to prove it.

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaProfile {
    pub lemma: u8,
    /// List size.
    pub k: usize,
    /// `(numerator, denominator)` of the strict mad bound.
    pub mad: Option<(i64, i64)>,
    /// Girth that implies the bound for plane graphs.
    pub girth: Option<usize>,
    pub planar_required: bool,
}

impl LemmaProfile {
    pub fn mad_threshold(&self) -> Option<Rational> {
        self.mad.map(|(p, q)| rat(p, q))
    }

    pub fn by_lemma(lemma: u8) -> Result<LemmaProfile> {
        TABLE
            .iter()
            .find(|p| p.lemma == lemma)
            .cloned()
            .ok_or(Error::UnknownLemma(lemma))
    }

    /// Reads an override file of `key value` / `key = value` lines with keys
    /// `lemma`, `k`, `mad_num`, `mad_den`, `girth`. Missing keys keep the
    /// built-in row of the given lemma.
    pub fn parse_override(text: &str) -> Result<LemmaProfile> {
        let mut fields: Vec<(String, String, usize)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let line = line.replace(['=', ':'], " ");
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(k), Some(v), None) => fields.push((k.to_string(), v.to_string(), i + 1)),
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: "expected `key value`".into(),
                    })
                }
            }
        }
        let get = |key: &str| fields.iter().find(|(k, _, _)| k == key);
        let num = |key: &str| -> Result<Option<i64>> {
            match get(key) {
                None => Ok(None),
                Some((_, v, line)) => v.parse().map(Some).map_err(|_| Error::Parse {
                    line: *line,
                    msg: format!("bad value for {key}"),
                }),
            }
        };
        let lemma = num("lemma")?.ok_or(Error::Parse {
            line: 1,
            msg: "missing `lemma`".into(),
        })?;
        let mut p = LemmaProfile::by_lemma(lemma as u8)?;
        if let Some(k) = num("k")? {
            p.k = k as usize;
        }
        match (num("mad_num")?, num("mad_den")?) {
            (Some(a), Some(b)) if b > 0 => p.mad = Some((a, b)),
            (None, None) => {}
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    msg: "mad_num and mad_den must be given together, mad_den > 0".into(),
                })
            }
        }
        if let Some(g) = num("girth")? {
            p.girth = Some(g as usize);
        }
        Ok(p)
    }
}

/// One row per regime: list sizes 5, 6, 7, 8, 12, 14.
pub static TABLE: [LemmaProfile; 6] = [
    LemmaProfile { lemma: 1, k: 5, mad: Some((16, 7)), girth: Some(16), planar_required: false },
    LemmaProfile { lemma: 2, k: 6, mad: Some((22, 9)), girth: Some(11), planar_required: false },
    LemmaProfile { lemma: 3, k: 7, mad: Some((18, 7)), girth: Some(9), planar_required: false },
    LemmaProfile { lemma: 4, k: 8, mad: Some((14, 5)), girth: Some(7), planar_required: false },
    LemmaProfile { lemma: 5, k: 12, mad: Some((10, 3)), girth: Some(5), planar_required: false },
    LemmaProfile { lemma: 6, k: 14, mad: None, girth: Some(3), planar_required: true },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_bounds() {
        let ks: Vec<usize> = TABLE.iter().map(|p| p.k).collect();
        assert_eq!(ks, [5, 6, 7, 8, 12, 14]);
        let g: Vec<usize> = TABLE.iter().map(|p| p.girth.unwrap()).collect();
        assert_eq!(g, [16, 11, 9, 7, 5, 3]);
        // the girth column is the Euler bound 2g/(g-2) at or below the mad column
        for p in &TABLE[..5] {
            let gi = p.girth.unwrap() as i64;
            assert!(rat(2 * gi, gi - 2) <= p.mad_threshold().unwrap());
        }
    }

    #[test]
    fn override_file() {
        let p = LemmaProfile::parse_override("lemma = 2\nk 7\nmad_num: 5\nmad_den 2\n").unwrap();
        assert_eq!((p.lemma, p.k, p.mad, p.girth), (2, 7, Some((5, 2)), Some(11)));
        assert!(LemmaProfile::parse_override("k 5\n").is_err());
        assert!(LemmaProfile::parse_override("lemma 9\n").is_err());
        assert!(LemmaProfile::parse_override("lemma 1\nmad_num 3\n").is_err());
    }
}
