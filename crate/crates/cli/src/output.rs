use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Destination directory plus a file stem shared by one command's outputs.
pub struct Outputs {
    dir: PathBuf,
    stem: String,
}

impl Outputs {
    pub fn new(dir: &Path, stem: String) -> Result<Self> {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        Ok(Self { dir: dir.to_path_buf(), stem })
    }

    /// Writes `<dir>/<stem><suffix>` through a temporary file in the same
    /// directory and an atomic rename; prints the path.
    pub fn write(&self, suffix: &str, contents: &str) -> Result<PathBuf> {
        let path = self.dir.join(format!("{}{suffix}", self.stem));
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)
            .with_context(|| format!("creating a temporary file in {}", self.dir.display()))?;
        tmp.write_all(contents.as_bytes())?;
        tmp.flush()?;
        tmp.persist(&path).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
        Ok(path)
    }
}

/// File-name friendly list of parts: `(10^2,5/2)` becomes `10_10_5h2`.
pub fn partition_slug(lam: &hermite_wronskian::Partition) -> String {
    let parts: Vec<String> = lam
        .twice_parts()
        .iter()
        .map(|&t| if t % 2 == 0 { (t / 2).to_string() } else { format!("{t}h2") })
        .collect();
    if parts.is_empty() {
        "empty".into()
    } else {
        parts.join("_")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_slugs() {
        let p = |s: &str| s.parse::<hermite_wronskian::Partition>().unwrap();
        assert_eq!(partition_slug(&p("(1^2)")), "1_1");
        assert_eq!(partition_slug(&p("11/2,5/2,1")), "11h2_5h2_1");
        assert_eq!(partition_slug(&p("")), "empty");
    }

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let out = Outputs::new(dir.path(), "x".into()).unwrap();
        let p = out.write(".txt", "one").unwrap();
        out.write(".txt", "two").unwrap();
        assert_eq!(std::fs::read_to_string(p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
