//! Framing of terms and census rows. Values are always decimal; csv and
//! json-lines carry them as strings so consumers never round big integers.

use std::fmt::Display;
use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// One raw decimal value per line.
    #[default]
    Plain,
    /// `index,value` with a header row.
    Csv,
    /// One JSON object per line.
    Json,
}

/// Writes `F_i` rows for `compute`.
pub struct TermWriter<'a> {
    out: &'a mut dyn Write,
    format: OutputFormat,
}

impl<'a> TermWriter<'a> {
    pub fn new(out: &'a mut dyn Write, format: OutputFormat) -> io::Result<Self> {
        if format == OutputFormat::Csv {
            out.write_all(b"index,value\n")?;
        }
        Ok(Self { out, format })
    }

    pub fn term(&mut self, index: u64, value: &dyn Display) -> io::Result<()> {
        match self.format {
            OutputFormat::Plain => writeln!(self.out, "{value}"),
            OutputFormat::Csv => writeln!(self.out, "{index},{value}"),
            OutputFormat::Json => {
                let row = json!({ "n": index, "value": value.to_string() });
                writeln!(self.out, "{row}")
            }
        }
    }
}

/// Writes one census row per generation for `table`.
pub struct TableWriter<'a> {
    out: &'a mut dyn Write,
    format: OutputFormat,
    columns: usize,
}

impl<'a> TableWriter<'a> {
    /// `columns` is the widest census that will be written; csv pads
    /// shorter rows with zeros (those ages are empty).
    pub fn new(out: &'a mut dyn Write, format: OutputFormat, columns: usize) -> io::Result<Self> {
        if format == OutputFormat::Csv {
            write!(out, "generation")?;
            for age in 1..=columns {
                write!(out, ",age_{age}")?;
            }
            writeln!(out, ",total")?;
        }
        Ok(Self {
            out,
            format,
            columns,
        })
    }

    pub fn row<T: Display>(
        &mut self,
        generation: usize,
        counts: &[T],
        total: &T,
    ) -> io::Result<()> {
        match self.format {
            OutputFormat::Plain => {
                for (i, c) in counts.iter().enumerate() {
                    if i > 0 {
                        self.out.write_all(b" ")?;
                    }
                    write!(self.out, "{c}")?;
                }
                writeln!(self.out, " total {total}")
            }
            OutputFormat::Csv => {
                write!(self.out, "{generation}")?;
                for c in counts {
                    write!(self.out, ",{c}")?;
                }
                for _ in counts.len()..self.columns {
                    self.out.write_all(b",0")?;
                }
                writeln!(self.out, ",{total}")
            }
            OutputFormat::Json => {
                let ages: Vec<String> = counts.iter().map(ToString::to_string).collect();
                let row = json!({
                    "generation": generation,
                    "ages": ages,
                    "total": total.to_string(),
                });
                writeln!(self.out, "{row}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(format: OutputFormat) -> String {
        let mut buf = Vec::new();
        let mut w = TermWriter::new(&mut buf, format).unwrap();
        w.term(1, &1).unwrap();
        w.term(100, &"354224848179261915075").unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn term_framing() {
        assert_eq!(terms(OutputFormat::Plain), "1\n354224848179261915075\n");
        assert_eq!(
            terms(OutputFormat::Csv),
            "index,value\n1,1\n100,354224848179261915075\n"
        );
        assert_eq!(
            terms(OutputFormat::Json),
            "{\"n\":1,\"value\":\"1\"}\n{\"n\":100,\"value\":\"354224848179261915075\"}\n"
        );
    }

    #[test]
    fn table_framing() {
        let mut buf = Vec::new();
        let mut w = TableWriter::new(&mut buf, OutputFormat::Csv, 3).unwrap();
        w.row(1, &[1u32], &1).unwrap();
        w.row(3, &[1u32, 0, 1], &2).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "generation,age_1,age_2,age_3,total\n1,1,0,0,1\n3,1,0,1,2\n"
        );

        let mut buf = Vec::new();
        let mut w = TableWriter::new(&mut buf, OutputFormat::Plain, 3).unwrap();
        w.row(2, &[0u32, 1], &1).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0 1 total 1\n");

        let mut buf = Vec::new();
        let mut w = TableWriter::new(&mut buf, OutputFormat::Json, 2).unwrap();
        w.row(2, &[0u32, 1], &1).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"generation\":2,\"ages\":[\"0\",\"1\"],\"total\":\"1\"}\n"
        );
    }
}
