//! The plain-text group format:
//!
//! ```text
//! # comment
//! degree 3
//! gen 1 0 2
//! gen 1 2 0
//! ```
//!
//! Images are 0-based. A file with no `gen` lines describes the trivial group.

use std::fmt::Write as _;

use gassmann_core::group::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

pub fn parse_group_file(text: &str) -> Result<GroupFile, FormatError> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().expect("line is not blank");
        match (keyword, degree) {
            ("degree", None) => {
                let value = words.next().ok_or_else(|| err(line_no, "missing degree value"))?;
                let d: usize =
                    value.parse().map_err(|_| err(line_no, format!("malformed integer {value:?}")))?;
                if d == 0 {
                    return Err(err(line_no, "degree must be positive"));
                }
                if let Some(extra) = words.next() {
                    return Err(err(line_no, format!("unexpected {extra:?} after the degree")));
                }
                degree = Some(d);
            }
            ("degree", Some(_)) => return Err(err(line_no, "degree given twice")),
            ("gen", None) => return Err(err(line_no, "expected `degree <d>` before generators")),
            ("gen", Some(d)) => {
                let images = words
                    .map(|w| w.parse::<u32>().map_err(|_| err(line_no, format!("malformed integer {w:?}"))))
                    .collect::<Result<Vec<u32>, _>>()?;
                if images.len() != d {
                    return Err(err(
                        line_no,
                        format!("degree mismatch: {} images for degree {d}", images.len()),
                    ));
                }
                Permutation::new(images.clone())
                    .map_err(|e| err(line_no, format!("not a bijection ({e})")))?;
                generators.push(images);
            }
            (other, _) => return Err(err(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    let degree = degree.ok_or_else(|| err(text.lines().count().max(1), "missing `degree <d>` line"))?;
    Ok(GroupFile { degree, generators })
}

pub fn serialize_group_file(file: &GroupFile, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "degree {}", file.degree);
    for g in &file.generators {
        let images: Vec<String> = g.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "gen {}", images.join(" "));
    }
    out
}
