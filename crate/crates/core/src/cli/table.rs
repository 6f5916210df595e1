//! Column-oriented CSV tables with a header row.
//!
//! Values are written in scientific notation with 17 significant digits,
//! which round-trips every `f64` exactly.

use std::collections::HashSet;
use std::io::{Read, Write};

use crate::error::SignalError;
use crate::series::Series;

use super::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    header: Vec<String>,
    columns: Vec<Vec<f64>>,
}

impl CsvTable {
    pub fn new(header: Vec<String>, columns: Vec<Vec<f64>>) -> Result<Self, CliError> {
        if header.len() != columns.len() {
            return Err(CliError::Input(format!(
                "{} column names for {} columns",
                header.len(),
                columns.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = header.iter().find(|h| !seen.insert(h.as_str())) {
            return Err(CliError::Input(format!("duplicate column name '{dup}'")));
        }
        let rows = columns.first().map_or(0, Vec::len);
        if rows < 2 {
            return Err(CliError::Input(format!("need at least 2 rows, got {rows}")));
        }
        if columns.iter().any(|c| c.len() != rows) {
            return Err(CliError::Input("columns have different lengths".into()));
        }
        for (name, col) in header.iter().zip(&columns) {
            if let Some(i) = col.iter().position(|v| !v.is_finite()) {
                return Err(CliError::Input(format!("column '{name}' row {} is not finite", i + 1)));
            }
        }
        Ok(Self { header, columns })
    }

    pub fn from_series(named: Vec<(&str, &Series)>) -> Result<Self, CliError> {
        let (header, columns) = named
            .into_iter()
            .map(|(n, s)| (n.to_string(), s.as_slice().to_vec()))
            .unzip();
        Self::new(header, columns)
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> usize {
        self.columns[0].len()
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.header.iter().position(|h| h == name).map(|i| self.columns[i].as_slice())
    }

    pub fn series(&self, name: &str) -> Result<Series, CliError> {
        let col = self
            .column(name)
            .ok_or_else(|| CliError::Input(format!("no column named '{name}'")))?;
        Series::new(col.to_vec()).map_err(CliError::Signal)
    }

    /// Appends a column, replacing any existing column of the same name.
    pub fn set_column(&mut self, name: &str, values: Vec<f64>) -> Result<(), CliError> {
        if values.len() != self.rows() {
            return Err(CliError::Signal(SignalError::LengthMismatch(self.rows(), values.len())));
        }
        match self.header.iter().position(|h| h == name) {
            Some(i) => self.columns[i] = values,
            None => {
                self.header.push(name.to_string());
                self.columns.push(values);
            }
        }
        Ok(())
    }

    pub fn read_from<R: Read>(reader: R) -> Result<Self, CliError> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
        let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
        let mut columns = vec![Vec::new(); header.len()];
        for (row, record) in rdr.records().enumerate() {
            let record = record?;
            for (col, field) in columns.iter_mut().zip(record.iter()) {
                let v: f64 = field.parse().map_err(|_| {
                    CliError::Input(format!("row {}: '{field}' is not a number", row + 1))
                })?;
                col.push(v);
            }
        }
        Self::new(header, columns)
    }

    pub fn read_path(path: &std::path::Path) -> Result<Self, CliError> {
        let file = std::fs::File::open(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::read_from(std::io::BufReader::new(file))
    }

    pub fn write_to<W: Write>(&self, writer: W) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(&self.header)?;
        let mut record = Vec::with_capacity(self.header.len());
        for i in 0..self.rows() {
            record.clear();
            record.extend(self.columns.iter().map(|c| format!("{:.16e}", c[i])));
            w.write_record(&record)?;
        }
        w.flush().map_err(|e| CliError::Io(e.to_string()))?;
        Ok(())
    }

    pub fn write_path(&self, path: &std::path::Path) -> Result<(), CliError> {
        let file = std::fs::File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        self.write_to(std::io::BufWriter::new(file))
    }
}
