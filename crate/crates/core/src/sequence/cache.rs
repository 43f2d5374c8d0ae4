//! Decimal text cache, one file per `(N, j)`:
//!
//! ```text
//! congruential-euler-cache v1 N=<N> j=<j>
//! 0 <numerator>/<denominator>
//! 1 <numerator>/<denominator>
//! ...
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Signed;

use super::{SeqParams, SeqTable};
use crate::error::{Error, Result};
use crate::exact::{format_rational, BigRational};

const MAGIC: &str = "congruential-euler-cache v1";

/// `<dir>/N<N>_j<j>.txt`
pub fn cache_path(dir: &Path, params: SeqParams) -> PathBuf {
    dir.join(format!("N{}_j{}.txt", params.step, params.j))
}

/// Inverse of [`cache_path`] on the file name alone.
pub fn cache_file_params(file_name: &str) -> Option<SeqParams> {
    let rest = file_name.strip_prefix('N')?.strip_suffix(".txt")?;
    let (n, j) = rest.split_once("_j")?;
    SeqParams::new(n.parse().ok()?, j.parse().ok()?).ok()
}

fn header(params: SeqParams) -> String {
    format!("{MAGIC} N={} j={}", params.step, params.j)
}

/// Write the table, replacing any existing file atomically.
pub fn cache_store(table: &SeqTable, path: &Path) -> Result<()> {
    let mut text = header(table.params);
    text.push('\n');
    for (n, v) in table.values.iter().enumerate() {
        text.push_str(&format!("{n} {}\n", format_rational(v)));
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Load the table for `params`. With `n_max`, a longer file yields only the
/// prefix `0..=n_max`; a shorter file yields everything it has.
pub fn cache_load(params: SeqParams, path: &Path, n_max: Option<usize>) -> Result<SeqTable> {
    let text = fs::read_to_string(path)?;
    let parse_err = |line: usize, message: String| Error::CacheParse {
        path: path.to_path_buf(),
        line,
        message,
    };

    let mut lines = text.split_inclusive('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, first) = lines.next().ok_or_else(|| parse_err(1, "empty file".into()))?;
    let first = first
        .strip_suffix('\n')
        .ok_or_else(|| parse_err(1, "truncated header".into()))?;
    let (found_n, found_j) = parse_header(first).ok_or_else(|| parse_err(1, format!("bad header {first:?}")))?;
    if (found_n, found_j) != (params.step, params.j) {
        return Err(Error::CacheMismatch {
            path: path.to_path_buf(),
            found_n,
            found_j,
            want_n: params.step,
            want_j: params.j,
        });
    }

    let limit = n_max.map_or(usize::MAX, |m| m + 1);
    let mut values = Vec::new();
    for (lineno, raw) in lines {
        if values.len() >= limit {
            break;
        }
        let line = raw
            .strip_suffix('\n')
            .ok_or_else(|| parse_err(lineno, "truncated entry (no newline)".into()))?;
        let (idx, value) = line
            .split_once(' ')
            .ok_or_else(|| parse_err(lineno, format!("expected `<n> <num>/<den>`, got {line:?}")))?;
        let idx: usize = idx
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad index {idx:?}")))?;
        if idx != values.len() {
            return Err(parse_err(
                lineno,
                format!("expected index {}, found {idx}", values.len()),
            ));
        }
        let (num, den) = value
            .split_once('/')
            .ok_or_else(|| parse_err(lineno, format!("missing denominator in {value:?}")))?;
        let num: BigInt = num
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad numerator {num:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad denominator {den:?}")))?;
        if !den.is_positive() {
            return Err(parse_err(lineno, "denominator must be positive".into()));
        }
        values.push(BigRational::new(num, den));
    }
    if values.is_empty() {
        return Err(parse_err(2, "no entries".into()));
    }
    Ok(SeqTable { params, values })
}

fn parse_header(line: &str) -> Option<(u64, u64)> {
    let rest = line.strip_prefix(MAGIC)?.strip_prefix(' ')?;
    let (n, j) = rest.split_once(' ')?;
    Some((n.strip_prefix("N=")?.parse().ok()?, j.strip_prefix("j=")?.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::compute_table;

    #[test]
    fn round_trip_and_prefix() {
        let dir = tempfile::tempdir().unwrap();
        let p = SeqParams::of(2, 0);
        let t = compute_table(p, 4);
        let path = cache_path(dir.path(), p);
        cache_store(&t, &path).unwrap();
        assert_eq!(cache_load(p, &path, None).unwrap(), t);
        assert_eq!(cache_load(p, &path, Some(2)).unwrap(), compute_table(p, 2));
        assert_eq!(cache_load(p, &path, Some(10)).unwrap(), t);

        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "congruential-euler-cache v1 N=2 j=0\n0 1/1\n1 -1/1\n2 5/1\n3 -61/1\n4 1385/1\n"
        );
    }

    #[test]
    fn rational_entries_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = SeqParams::of(4, 2);
        let t = compute_table(p, 6);
        let path = cache_path(dir.path(), p);
        cache_store(&t, &path).unwrap();
        assert_eq!(cache_load(p, &path, None).unwrap(), t);
    }

    #[test]
    fn mismatched_header() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.txt");
        cache_store(&compute_table(SeqParams::of(3, 0), 3), &path).unwrap();
        let err = cache_load(SeqParams::of(2, 0), &path, None).unwrap_err();
        assert!(matches!(
            err,
            Error::CacheMismatch {
                found_n: 3,
                want_n: 2,
                ..
            }
        ));
    }

    #[test]
    fn truncated_file_names_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.txt");
        fs::write(&path, "congruential-euler-cache v1 N=2 j=0\n0 1/1\n1 -1/1\n2 5/").unwrap();
        match cache_load(SeqParams::of(2, 0), &path, None).unwrap_err() {
            Error::CacheParse { line, .. } => assert_eq!(line, 4),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn malformed_entries() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.txt");
        let p = SeqParams::of(2, 0);
        let cases = [
            ("garbage\n", 1),
            ("congruential-euler-cache v1 N=2 j=0\n", 2),
            ("congruential-euler-cache v1 N=2 j=0\n0 1\n", 2),
            ("congruential-euler-cache v1 N=2 j=0\n0 1/1\n2 5/1\n", 3),
            ("congruential-euler-cache v1 N=2 j=0\n0 1/1\n1 -1/0\n", 3),
            ("congruential-euler-cache v1 N=2 j=0\n0 1/1\n1 -1/-1\n", 3),
            ("congruential-euler-cache v1 N=2 j=0\n0 1/1\n1 x/1\n", 3),
        ];
        for (text, want) in cases {
            fs::write(&path, text).unwrap();
            match cache_load(p, &path, None) {
                Err(Error::CacheParse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
