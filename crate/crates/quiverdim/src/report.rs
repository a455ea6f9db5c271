//! Checked report tables, rendered as CSV or markdown.

use std::fmt::Write as _;

use anyhow::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// Matches an expectation that is itself only an interval.
    Interval,
    Fail,
    /// No expectation attached.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Interval => "interval",
            Status::Fail => "FAIL",
            Status::Info => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub algebra: String,
    pub quantity: String,
    pub expected: String,
    pub citation: String,
    pub computed: String,
    pub status: Status,
}

impl Row {
    /// Passes iff `computed == expected`.
    pub fn exact(
        algebra: impl Into<String>,
        quantity: impl Into<String>,
        expected: impl Into<String>,
        citation: &str,
        computed: impl Into<String>,
    ) -> Row {
        let (expected, computed) = (expected.into(), computed.into());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Row { algebra: algebra.into(), quantity: quantity.into(), expected, citation: citation.into(), computed, status }
    }

    /// The known answer is an interval; a matching interval is reported as such.
    pub fn open(
        algebra: impl Into<String>,
        quantity: impl Into<String>,
        expected: impl Into<String>,
        citation: &str,
        computed: impl Into<String>,
    ) -> Row {
        let mut r = Row::exact(algebra, quantity, expected, citation, computed);
        if r.status == Status::Pass {
            r.status = Status::Interval;
        }
        r
    }

    /// A predicate check; `expected` describes what should hold.
    pub fn holds(
        algebra: impl Into<String>,
        quantity: impl Into<String>,
        expected: impl Into<String>,
        citation: &str,
        computed: impl Into<String>,
        ok: bool,
    ) -> Row {
        let status = if ok { Status::Pass } else { Status::Fail };
        Row {
            algebra: algebra.into(),
            quantity: quantity.into(),
            expected: expected.into(),
            citation: citation.into(),
            computed: computed.into(),
            status,
        }
    }

    pub fn info(algebra: impl Into<String>, quantity: impl Into<String>, computed: impl Into<String>) -> Row {
        Row {
            algebra: algebra.into(),
            quantity: quantity.into(),
            expected: String::new(),
            citation: String::new(),
            computed: computed.into(),
            status: Status::Info,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Md,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub table: String,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(table: impl Into<String>) -> Report {
        Report { table: table.into(), ..Default::default() }
    }

    pub fn push(&mut self, r: Row) {
        self.rows.push(r);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    /// 0 all pass, 2 some rows only match as intervals, 1 any mismatch.
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().any(|r| r.status == Status::Fail) {
            1
        } else if self.rows.iter().any(|r| r.status == Status::Interval) {
            2
        } else {
            0
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["table", "algebra", "quantity", "expected", "citation", "computed", "status"])?;
        for r in &self.rows {
            w.write_record([&self.table, &r.algebra, &r.quantity, &r.expected, &r.citation, &r.computed, r.status.as_str()])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = format!("## {}\n\n", self.table);
        out.push_str("| algebra | quantity | expected | computed | status | source |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                esc(&r.algebra),
                esc(&r.quantity),
                esc(&r.expected),
                esc(&r.computed),
                r.status.as_str(),
                esc(&r.citation)
            );
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }

    pub fn render(&self, f: Format) -> Result<String> {
        match f {
            Format::Csv => self.to_csv(),
            Format::Md => Ok(self.to_markdown()),
        }
    }
}
