//! Output file helpers.

use std::fs;
use std::path::Path;

use crate::Error;

/// Write via a temporary file in the same directory plus rename, so
/// readers never observe a half-written file.
pub fn atomic_write(path: &Path, contents: &str) -> Result<(), Error> {
    let tmp = path.with_extension(match path.extension() {
        Some(ext) => format!("{}.tmp", ext.to_string_lossy()),
        None => "tmp".to_string(),
    });
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    fs::write(&tmp, contents).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

/// Append a row to a CSV file, writing the header first when the file does
/// not exist yet.
pub fn append_csv_row(path: &Path, header: &str, row: &str) -> Result<(), Error> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut contents = match fs::read_to_string(path) {
        Ok(existing) => existing,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            let mut s = String::from(header);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        Err(e) => return Err(io_err(e)),
    };
    contents.push_str(row);
    if !row.ends_with('\n') {
        contents.push('\n');
    }
    atomic_write(path, &contents)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.txt");
        atomic_write(&path, "one\n").unwrap();
        atomic_write(&path, "two\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "two\n");
        assert!(!path.with_extension("txt.tmp").exists());
    }

    #[test]
    fn csv_append_writes_header_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        append_csv_row(&path, "a,b", "1,2").unwrap();
        append_csv_row(&path, "a,b", "3,4").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "a,b\n1,2\n3,4\n");
    }
}
