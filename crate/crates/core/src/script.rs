//! Line-oriented mutation scripts.
//!
//! ```text
//! # comment
//! algebra b_power:2,2
//! collection 00 01 10 11      # projectives, by vertex name
//! block L 1..2                # mutate the object after the block to its left
//! shift 1 -1
//! mutate R 2                  # same as block R 2..2
//! expect-strong
//! expect-end quiver=D4 dim=9
//! expect-hom 0 3 = 0:2
//! ```
//!
//! Positions are 0-based.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::catalog;
use crate::collection::{
    block_mutate_left, block_mutate_right, end_algebra, format_graded, parse_graded, CollectionError, ExcCollection, GradedDims,
};
use crate::field::Field;
use crate::quiver::DynkinType;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Algebra(String),
    Collection(Vec<String>),
    Block(Side, usize, usize),
    Shift(usize, i32),
    ExpectStrong,
    ExpectEnd { quiver: Option<DynkinType>, dim: Option<usize> },
    ExpectHom(usize, usize, GradedDims),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("line {0}: {1}")]
    Step(usize, CollectionError),
    #[error("line {0}: {1}")]
    Algebra(usize, String),
    #[error("line {0}: no collection declared")]
    NoCollection(usize),
    #[error("no algebra given")]
    NoAlgebra,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    /// `(line number, command)`
    pub commands: Vec<(usize, Command)>,
}

fn parse_side(s: &str, line: usize) -> Result<Side, ScriptError> {
    match s {
        "L" | "l" => Ok(Side::Left),
        "R" | "r" => Ok(Side::Right),
        _ => Err(ScriptError::Parse(line, format!("expected L or R, got {s}"))),
    }
}

fn parse_num<T: core::str::FromStr>(s: &str, line: usize) -> Result<T, ScriptError> {
    s.parse().map_err(|_| ScriptError::Parse(line, format!("bad number {s}")))
}

impl Script {
    pub fn parse(text: &str) -> Result<Script, ScriptError> {
        let mut commands = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let words: Vec<&str> = body.split_whitespace().collect();
            let cmd = match words.as_slice() {
                ["algebra", spec] => Command::Algebra(spec.to_string()),
                ["collection", names @ ..] if !names.is_empty() => Command::Collection(names.iter().map(|s| s.to_string()).collect()),
                ["mutate", side, i] => {
                    let i = parse_num(i, line)?;
                    Command::Block(parse_side(side, line)?, i, i)
                }
                ["block", side, range] => {
                    let (p, q) = range.split_once("..").ok_or_else(|| ScriptError::Parse(line, format!("bad range {range}")))?;
                    Command::Block(parse_side(side, line)?, parse_num(p, line)?, parse_num(q, line)?)
                }
                ["shift", i, k] => Command::Shift(parse_num(i, line)?, parse_num(k, line)?),
                ["expect-strong"] => Command::ExpectStrong,
                ["expect-end", rest @ ..] => {
                    let (mut quiver, mut dim) = (None, None);
                    for w in rest {
                        match w.split_once('=') {
                            Some(("quiver", t)) => {
                                quiver = Some(DynkinType::parse(t).ok_or_else(|| ScriptError::Parse(line, format!("unknown type {t}")))?)
                            }
                            Some(("dim", n)) => dim = Some(parse_num(n, line)?),
                            _ => return Err(ScriptError::Parse(line, format!("bad expect-end field {w}"))),
                        }
                    }
                    Command::ExpectEnd { quiver, dim }
                }
                ["expect-hom", i, j, "=", table] => {
                    let t = parse_graded(table).ok_or_else(|| ScriptError::Parse(line, format!("bad table {table}")))?;
                    Command::ExpectHom(parse_num(i, line)?, parse_num(j, line)?, t)
                }
                _ => return Err(ScriptError::Parse(line, format!("unrecognized command: {body}"))),
            };
            commands.push((line, cmd));
        }
        Ok(Script { commands })
    }

    /// The algebra named by the script, if any.
    pub fn algebra_spec(&self) -> Option<&str> {
        self.commands.iter().find_map(|(_, c)| match c {
            Command::Algebra(s) => Some(s.as_str()),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub line: usize,
    pub what: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct ScriptReport<F> {
    pub checks: Vec<CheckResult>,
    pub collection: ExcCollection<F>,
    pub labels: Vec<String>,
}

impl<F> ScriptReport<F> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Run against the script's own `algebra` line.
pub fn run_script<F: Field>(script: &Script) -> Result<(Algebra<F>, ScriptReport<F>), ScriptError> {
    let (line, spec) = script
        .commands
        .iter()
        .find_map(|(l, c)| match c {
            Command::Algebra(s) => Some((*l, s.clone())),
            _ => None,
        })
        .ok_or(ScriptError::NoAlgebra)?;
    let a = catalog::by_name::<F>(&spec).map_err(|e| ScriptError::Algebra(line, e.to_string()))?;
    let report = run_script_on(&a, script)?;
    Ok((a, report))
}

/// Run against a given algebra; `algebra` lines are ignored.
pub fn run_script_on<F: Field>(a: &Algebra<F>, script: &Script) -> Result<ScriptReport<F>, ScriptError> {
    let mut coll: Option<ExcCollection<F>> = None;
    let mut checks = Vec::new();
    for (line, cmd) in &script.commands {
        let line = *line;
        let cur = || coll.as_ref().ok_or(ScriptError::NoCollection(line));
        match cmd {
            Command::Algebra(_) => {}
            Command::Collection(names) => {
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                coll = Some(ExcCollection::from_vertex_names(a, &refs).map_err(|e| ScriptError::Step(line, e))?);
            }
            Command::Block(side, p, q) => {
                let c = cur()?;
                let next = match side {
                    Side::Left => block_mutate_left(a, c, *p, *q),
                    Side::Right => block_mutate_right(a, c, *p, *q),
                };
                coll = Some(next.map_err(|e| ScriptError::Step(line, e))?);
            }
            Command::Shift(i, k) => {
                coll = Some(cur()?.shift(a, *i, *k).map_err(|e| ScriptError::Step(line, e))?);
            }
            Command::ExpectStrong => {
                let v = cur()?.strong_violations();
                let computed = if v.is_empty() {
                    String::from("strong")
                } else {
                    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    format!("violations {}", parts.join(" "))
                };
                checks.push(CheckResult { line, what: String::from("strong"), expected: String::from("strong"), pass: v.is_empty(), computed });
            }
            Command::ExpectEnd { quiver, dim } => {
                let c = cur()?;
                let expected = format!(
                    "quiver={} dim={}",
                    quiver.map_or(String::from("*"), |t| t.to_string()),
                    dim.map_or(String::from("*"), |d| d.to_string())
                );
                match end_algebra(a, c) {
                    Ok(e) => {
                        let pass = quiver.is_none_or(|t| e.shape.kind == t) && dim.is_none_or(|d| e.total_dim == d);
                        let computed = format!("quiver={} dim={}{}", e.shape.kind, e.total_dim, if e.hereditary { "" } else { " (not hereditary)" });
                        checks.push(CheckResult { line, what: String::from("end"), expected, computed, pass });
                    }
                    Err(err) => checks.push(CheckResult { line, what: String::from("end"), expected, computed: err.to_string(), pass: false }),
                }
            }
            Command::ExpectHom(i, j, t) => {
                let c = cur()?;
                if *i >= c.len() || *j >= c.len() {
                    return Err(ScriptError::Step(line, CollectionError::OutOfRange((*i).max(*j))));
                }
                let got = c.hom(*i, *j);
                checks.push(CheckResult {
                    line,
                    what: format!("hom {i} {j}"),
                    expected: format_graded(t),
                    computed: format_graded(got),
                    pass: got == t,
                });
            }
        }
    }
    let collection = coll.ok_or(ScriptError::NoCollection(0))?;
    let labels = collection.objects().iter().map(|o| o.label.clone()).collect();
    Ok(ScriptReport { checks, collection, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn parse_errors_carry_line() {
        let e = Script::parse("algebra linear_a:2\n\nfoo bar\n").unwrap_err();
        assert_eq!(e, ScriptError::Parse(3, String::from("unrecognized command: foo bar")));
        assert!(Script::parse("block L 1-2").is_err());
    }

    #[test]
    fn d4_script() {
        let s = Script::parse("algebra b_power:2,2\ncollection 00 01 10 11\nblock L 1..2\nshift 1 -1\nexpect-strong\nexpect-end quiver=D4 dim=9\n")
            .unwrap();
        let (_, r) = run_script::<Q>(&s).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
    }

    #[test]
    fn step_errors_pinpoint_line() {
        let s = Script::parse("algebra linear_a:3\ncollection 0 1 2\nmutate L 2\n").unwrap();
        assert!(matches!(run_script::<Q>(&s), Err(ScriptError::Step(3, CollectionError::OutOfRange(3)))));
    }
}
