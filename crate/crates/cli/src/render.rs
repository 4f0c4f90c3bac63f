use std::io::{self, Write};

use num::BigUint;
use serde::Serialize;
use serde_json::Value;

use parabolic_catalan::shapes::Tableau;

/// Text or JSON-lines writer.
pub struct Out<W: Write> {
    sink: W,
    json: bool,
}

impl<W: Write> Out<W> {
    pub fn new(sink: W, json: bool) -> Self {
        Out { sink, json }
    }

    pub fn json(&self) -> bool {
        self.json
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.sink, "{text}")
    }

    pub fn value(&mut self, v: Value) -> io::Result<()> {
        writeln!(self.sink, "{v}")
    }

    /// `text` in text mode, `v` in JSON mode.
    pub fn record(&mut self, text: &str, v: Value) -> io::Result<()> {
        if self.json {
            self.value(v)
        } else {
            self.line(text)
        }
    }

    /// One item per line, via `Display` or `Serialize`.
    pub fn items<T: std::fmt::Display + Serialize>(&mut self, items: &[T]) -> io::Result<()> {
        for item in items {
            if self.json {
                self.value(serde_json::to_value(item).expect("serializable"))?;
            } else {
                self.line(&item.to_string())?;
            }
        }
        Ok(())
    }

    pub fn tableau(&mut self, t: &Tableau) -> io::Result<()> {
        if self.json {
            self.value(serde_json::to_value(t).expect("serializable"))
        } else {
            self.line(&t.to_string())
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.sink.flush()
    }
}

/// A JSON number when it fits in `u64`, otherwise a decimal string.
pub fn big(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::from(v.to_string()),
    }
}
