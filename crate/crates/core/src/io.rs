//! TGF and APX readers and canonical writers.
//!
//! TGF: one argument per line, a `#` separator line, then `source target`
//! pairs. APX: `arg(x).` and `att(x,y).` statements, `%` comment lines.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{is_valid_token, ArgumentId, ArgumentationGraph, Attack};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Tgf,
    Apx,
}

impl GraphFormat {
    /// `.apx` files are APX, everything else TGF.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("apx") => GraphFormat::Apx,
            _ => GraphFormat::Tgf,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "tgf" => Ok(GraphFormat::Tgf),
            "apx" => Ok(GraphFormat::Apx),
            other => Err(format!("unknown graph format {other:?}")),
        }
    }
}

pub fn parse_graph(input: &[u8], format: GraphFormat) -> Result<ArgumentationGraph> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let line = input[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::Syntax {
            line,
            message: "input is not valid UTF-8".into(),
        }
    })?;
    match format {
        GraphFormat::Tgf => parse_tgf(text),
        GraphFormat::Apx => parse_apx(text),
    }
}

pub fn serialize_graph(graph: &ArgumentationGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Tgf => to_tgf(graph),
        GraphFormat::Apx => to_apx(graph),
    }
}

pub fn to_tgf(graph: &ArgumentationGraph) -> String {
    let mut out = String::new();
    for arg in graph.arguments() {
        out.push_str(arg.as_str());
        out.push('\n');
    }
    out.push_str("#\n");
    for Attack { source, target } in graph.attacks() {
        let _ = writeln!(out, "{source} {target}");
    }
    out
}

pub fn to_apx(graph: &ArgumentationGraph) -> String {
    let mut out = String::new();
    for arg in graph.arguments() {
        let _ = writeln!(out, "arg({arg}).");
    }
    for Attack { source, target } in graph.attacks() {
        let _ = writeln!(out, "att({source},{target}).");
    }
    out
}

struct Collected {
    arguments: Vec<ArgumentId>,
    declared: BTreeSet<ArgumentId>,
    attacks: Vec<(usize, Attack)>,
}

impl Collected {
    fn new() -> Self {
        Collected {
            arguments: Vec::new(),
            declared: BTreeSet::new(),
            attacks: Vec::new(),
        }
    }

    fn declare(&mut self, line: usize, name: &str) -> Result<()> {
        let id = token(line, name)?;
        if !self.declared.insert(id.clone()) {
            return Err(Error::DuplicateArgument {
                line,
                name: name.to_string(),
            });
        }
        self.arguments.push(id);
        Ok(())
    }

    fn attack(&mut self, line: usize, source: &str, target: &str) -> Result<()> {
        let attack = Attack::new(token(line, source)?, token(line, target)?);
        self.attacks.push((line, attack));
        Ok(())
    }

    fn finish(self) -> Result<ArgumentationGraph> {
        for (line, attack) in &self.attacks {
            for end in [&attack.source, &attack.target] {
                if !self.declared.contains(end) {
                    return Err(Error::UndeclaredArgument {
                        line: *line,
                        from: attack.source.to_string(),
                        to: attack.target.to_string(),
                        missing: end.to_string(),
                    });
                }
            }
        }
        ArgumentationGraph::new(self.arguments, self.attacks.into_iter().map(|(_, a)| a))
    }
}

fn token(line: usize, s: &str) -> Result<ArgumentId> {
    if is_valid_token(s) {
        ArgumentId::new(s)
    } else {
        Err(Error::Syntax {
            line,
            message: format!("invalid argument identifier {s:?}"),
        })
    }
}

fn parse_tgf(text: &str) -> Result<ArgumentationGraph> {
    let mut collected = Collected::new();
    let mut in_attacks = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        if content == "#" {
            if in_attacks {
                return Err(Error::Syntax {
                    line,
                    message: "second `#` separator".into(),
                });
            }
            in_attacks = true;
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (in_attacks, fields.as_slice()) {
            (false, [name]) => collected.declare(line, name)?,
            (true, [source, target]) => collected.attack(line, source, target)?,
            (false, _) => {
                return Err(Error::Syntax {
                    line,
                    message: format!("expected a single argument identifier, found {content:?}"),
                })
            }
            (true, _) => {
                return Err(Error::Syntax {
                    line,
                    message: format!("expected `source target`, found {content:?}"),
                })
            }
        }
    }
    collected.finish()
}

fn parse_apx(text: &str) -> Result<ArgumentationGraph> {
    let mut collected = Collected::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.starts_with('%') {
            continue;
        }
        let mut cursor = Cursor::new(raw, line);
        loop {
            cursor.skip_ws();
            if cursor.at_end() {
                break;
            }
            let keyword = cursor.word()?;
            cursor.expect('(')?;
            match keyword {
                "arg" => {
                    let name = cursor.word()?;
                    cursor.expect(')')?;
                    cursor.expect('.')?;
                    collected.declare(line, name)?;
                }
                "att" => {
                    let source = cursor.word()?;
                    cursor.expect(',')?;
                    let target = cursor.word()?;
                    cursor.expect(')')?;
                    cursor.expect('.')?;
                    collected.attack(line, source, target)?;
                }
                other => {
                    return Err(Error::Syntax {
                        line,
                        message: format!("unknown statement {other:?}, expected arg or att"),
                    })
                }
            }
        }
    }
    collected.finish()
}

struct Cursor<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor { rest: text, line }
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn at_end(&self) -> bool {
        self.rest.is_empty()
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            line: self.line,
            message,
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let end = self
            .rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest.len());
        if end == 0 {
            return Err(self.error(format!("expected identifier at {:?}", self.rest)));
        }
        let (word, rest) = self.rest.split_at(end);
        self.rest = rest;
        Ok(word)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.rest.strip_prefix(c) {
            Some(rest) => {
                self.rest = rest;
                Ok(())
            }
            None => Err(self.error(format!("expected `{c}` at {:?}", self.rest))),
        }
    }
}
