use std::io::BufRead;

use anyhow::{bail, Context, Result};

/// Reads `s t` pairs, one per line; blank lines and `#` comments are skipped.
pub fn parse_pairs<R: BufRead>(reader: R) -> Result<Vec<(u64, u64)>> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            bail!("pairs line {}: expected two vertex ids, found `{line}`", idx + 1);
        }
        let id = |s: &str| -> Result<u64> {
            s.parse().with_context(|| format!("pairs line {}: bad vertex id `{s}`", idx + 1))
        };
        pairs.push((id(fields[0])?, id(fields[1])?));
    }
    Ok(pairs)
}

/// Parses an insertion spec `u: v1 w1, v2 w2, ...`. A missing weight
/// defaults to 1, as in edge lists.
pub fn parse_insert(spec: &str) -> Result<(u64, Vec<(u64, u32)>)> {
    let (head, tail) = spec
        .split_once(':')
        .with_context(|| format!("insert spec `{spec}` lacks `u:`"))?;
    let u = head.trim().parse().with_context(|| format!("bad vertex id `{}`", head.trim()))?;
    let mut edges = Vec::new();
    for item in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let fields: Vec<&str> = item.split_whitespace().collect();
        let (v, w) = match fields.as_slice() {
            [v] => (*v, "1"),
            [v, w] => (*v, *w),
            _ => bail!("bad neighbor `{item}`: expected `v [w]`"),
        };
        let v = v.parse().with_context(|| format!("bad vertex id `{v}`"))?;
        let w: u32 = w.parse().with_context(|| format!("bad weight `{w}`"))?;
        if w == 0 {
            bail!("edge weight must be positive in `{item}`");
        }
        edges.push((v, w));
    }
    Ok((u, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_with_comments() {
        let text = "# header\n1 2\n\n  3   4 \n";
        assert_eq!(parse_pairs(text.as_bytes()).unwrap(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn malformed_pairs() {
        assert!(parse_pairs("1 2 3\n".as_bytes()).is_err());
        assert!(parse_pairs("1 x\n".as_bytes()).is_err());
    }

    #[test]
    fn insert_specs() {
        assert_eq!(parse_insert("7: 1 2, 3 4").unwrap(), (7, vec![(1, 2), (3, 4)]));
        assert_eq!(parse_insert("7: 1").unwrap(), (7, vec![(1, 1)]));
        assert_eq!(parse_insert("7:").unwrap(), (7, vec![]));
        assert!(parse_insert("7 1 2").is_err());
        assert!(parse_insert("7: 1 0").is_err());
        assert!(parse_insert("7: 1 2 3").is_err());
    }
}
