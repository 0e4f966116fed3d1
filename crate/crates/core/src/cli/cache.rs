//! On-disk coefficient cache: one `ν|λ|μ<TAB>value` line per entry, UTF-8,
//! keys in canonical partition text. A file that fails to parse in any way
//! is discarded as a whole.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigInt;

use crate::partition::Partition;

pub type Entry = ((Partition, Partition, Partition), BigInt);

pub fn key(nu: &Partition, lambda: &Partition, mu: &Partition) -> String {
    format!("{}|{}|{}", nu.to_text(), lambda.to_text(), mu.to_text())
}

fn parse_line(line: &str) -> Option<Entry> {
    let (key_text, value) = line.split_once('\t')?;
    let mut parts = key_text.split('|');
    let nu: Partition = parts.next()?.parse().ok()?;
    let lambda: Partition = parts.next()?.parse().ok()?;
    let mu: Partition = parts.next()?.parse().ok()?;
    if parts.next().is_some() || key(&nu, &lambda, &mu) != key_text {
        return None;
    }
    let value: BigInt = value.parse().ok()?;
    if value.sign() == num_bigint::Sign::Minus {
        return None;
    }
    Some(((nu, lambda, mu), value))
}

pub fn parse(text: &str) -> Result<Vec<Entry>, usize> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| parse_line(l).ok_or(i + 1))
        .collect()
}

/// Reads a cache file. Missing files are an empty cache; corrupt files are
/// reported and ignored.
pub fn load(path: &Path) -> Vec<Entry> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Vec::new(),
        Err(e) => {
            log::warn!("ignoring unreadable cache {}: {e}", path.display());
            return Vec::new();
        }
    };
    match parse(&text) {
        Ok(entries) => entries,
        Err(line) => {
            log::warn!("ignoring corrupt cache {} (bad line {line})", path.display());
            Vec::new()
        }
    }
}

pub fn render(entries: &[Entry]) -> String {
    let mut lines: Vec<String> = entries
        .iter()
        .map(|((nu, lambda, mu), v)| format!("{}\t{v}\n", key(nu, lambda, mu)))
        .collect();
    lines.sort();
    lines.concat()
}

/// Writes the cache through a temporary sibling file and a rename.
pub fn store(path: &Path, entries: &[Entry]) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(render(entries).as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn round_trip() {
        let entries = vec![
            ((p(&[4]), p(&[2]), p(&[2])), BigInt::from(1)),
            ((p(&[3, 3]), p(&[2]), p(&[3])), BigInt::from(0)),
        ];
        let text = render(&entries);
        assert_eq!(text, "3,3|2|3\t0\n4|2|2\t1\n");
        let mut back = parse(&text).unwrap();
        back.sort();
        let mut want = entries.clone();
        want.sort();
        assert_eq!(back, want);
    }

    #[test]
    fn corrupt_lines_reject_the_file() {
        assert_eq!(parse("4|2|2\t1\ngarbage\n"), Err(2));
        assert_eq!(parse("4|2|2\t-1\n"), Err(1));
        assert_eq!(parse("1,2|2|2\t1\n"), Err(1));
        // non-canonical spellings are not trusted either
        assert_eq!(parse("4,0|2|2\t1\n"), Err(1));
    }

    #[test]
    fn load_ignores_corrupt_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.tsv");
        fs::write(&path, "not a cache").unwrap();
        assert!(load(&path).is_empty());
        assert!(load(&dir.path().join("missing.tsv")).is_empty());
        store(&path, &[((p(&[2]), p(&[1]), p(&[2])), BigInt::from(1))]).unwrap();
        assert_eq!(load(&path).len(), 1);
    }
}
