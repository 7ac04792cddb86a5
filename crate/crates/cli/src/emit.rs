use std::fs;
use std::path::Path;

use anyhow::{Context as _, Result};
use serde_json::{json, Value};

use crate::config::Format;

/// One emitted table: caption, pass/fail marker and its three renderings.
pub struct Section {
    pub key: String,
    pub caption: String,
    pub passed: bool,
    pub json: Value,
    pub csv: String,
    pub text: String,
}

fn marker(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

impl Section {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n",
            Format::Csv => {
                let mut s = format!("# {}\n", self.caption);
                s.push_str(&self.csv);
                s.push_str(&format!("# {}\n", marker(self.passed)));
                s
            }
            Format::Text => {
                let mut s = format!("== {} ==\n", self.caption);
                s.push_str(&self.text);
                s.push_str(&format!("[{}] {}\n", marker(self.passed), self.caption));
                s
            }
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "key": self.key,
            "caption": self.caption,
            "status": marker(self.passed),
            "data": self.json,
        })
    }
}

/// An extra file written only under --out (quadrics, point, equation).
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

pub fn render_all(sections: &[Section], format: Format) -> String {
    let passed = sections.iter().all(|s| s.passed);
    match format {
        Format::Json => {
            let doc = json!({
                "schema": "hurwitz17-cli/1",
                "status": marker(passed),
                "sections": sections.iter().map(Section::to_json).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        _ => {
            let mut s = String::new();
            for sec in sections {
                s.push_str(&sec.render(format));
                s.push('\n');
            }
            s.push_str(&format!("overall: {}\n", marker(passed)));
            s
        }
    }
}

pub fn write_outputs(dir: &Path, sections: &[Section], artifacts: &[Artifact], format: Format) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for s in sections {
        let path = dir.join(format!("{}.{}", s.key, format.extension()));
        fs::write(&path, s.render(format)).with_context(|| format!("writing {}", path.display()))?;
    }
    for a in artifacts {
        let path = dir.join(&a.name);
        fs::write(&path, &a.contents).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

/// Rows of cells as CSV, quoting fields that need it.
pub fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let field = |f: &str| {
        if f.contains([',', '"', '\n']) {
            format!("\"{}\"", f.replace('"', "\"\""))
        } else {
            f.to_string()
        }
    };
    let mut s = header.iter().map(|h| field(h)).collect::<Vec<_>>().join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.iter().map(|c| field(c)).collect::<Vec<_>>().join(","));
        s.push('\n');
    }
    s
}

/// Left-aligned columns padded to the widest cell.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut s = line(header.to_vec());
    for r in rows {
        s.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    s
}
