//! Plain-text `key = value` configuration files and their merge with flags.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};

pub const KEYS: &[&str] = &[
    "lc",
    "ls",
    "snr_db",
    "scheme",
    "samples",
    "seed",
    "out",
    "window",
    "quad_rel",
    "quad_abs",
    "root_tol",
    "opt_tol",
    "tail_mass",
];

/// Parsed configuration file. Blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("cannot read config file {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config file {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected key = value, got '{line}'", no + 1);
            };
            let key = key.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                bail!("line {}: unknown key '{key}'", no + 1);
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Flag value if given, else the parsed file value, else `None`.
    pub fn pick<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s
                .parse::<T>()
                .map(Some)
                .map_err(|e| anyhow::anyhow!("config key {key}: cannot parse '{s}': {e}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_whitespace() {
        let c = ConfigFile::parse("# header\nlc = 0.5\n\n ls=1.5 # trailing\nsnr-db = 0:10:5\n").unwrap();
        assert_eq!(c.raw("lc"), Some("0.5"));
        assert_eq!(c.raw("ls"), Some("1.5"));
        assert_eq!(c.raw("snr_db"), Some("0:10:5"));
    }

    #[test]
    fn flags_override_file() {
        let c = ConfigFile::parse("lc = 0.5").unwrap();
        assert_eq!(c.pick(Some(2.0), "lc").unwrap(), Some(2.0));
        assert_eq!(c.pick::<f64>(None, "lc").unwrap(), Some(0.5));
        assert_eq!(c.pick::<f64>(None, "ls").unwrap(), None);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(ConfigFile::parse("lc 0.5").is_err());
        assert!(ConfigFile::parse("colour = red").is_err());
        let c = ConfigFile::parse("lc = abc").unwrap();
        assert!(c.pick::<f64>(None, "lc").is_err());
    }
}
