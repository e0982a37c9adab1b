use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::Result;
use serde_json::{json, Map, Value};

use crate::args::Global;

/// JSON-lines sink: a header line, one line per item, a summary line.
pub struct Report {
    sink: Box<dyn Write>,
    deterministic: bool,
    started: Instant,
}

impl Report {
    pub fn open(global: &Global, append: bool) -> Result<Self> {
        let sink: Box<dyn Write> = match &global.out {
            Some(p) => Box::new(BufWriter::new(open_file(p, append)?)),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Report {
            sink,
            deterministic: global.deterministic,
            started: Instant::now(),
        })
    }

    pub fn header(&mut self, command: &str, input: Value, seed: Option<u64>, global: &Global) -> Result<()> {
        self.line(&json!({
            "command": command,
            "input": input,
            "version": env!("CARGO_PKG_VERSION"),
            "seed": seed,
            "limits": global.limits(),
        }))
    }

    pub fn line(&mut self, v: &Value) -> Result<()> {
        serde_json::to_writer(&mut self.sink, v)?;
        self.sink.write_all(b"\n")?;
        self.sink.flush()?;
        Ok(())
    }

    /// The summary line; its `timestamp` is the only field that varies between runs.
    pub fn summary(&mut self, mut fields: Map<String, Value>) -> Result<()> {
        if !self.deterministic {
            let unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            fields.insert(
                "timestamp".into(),
                json!({ "unix": unix, "elapsed_ms": self.started.elapsed().as_millis() as u64 }),
            );
        }
        let mut v = Map::new();
        v.insert("summary".into(), Value::Object(fields));
        self.line(&Value::Object(v))
    }
}

pub fn open_file(p: &Path, append: bool) -> io::Result<File> {
    if append {
        OpenOptions::new().create(true).append(true).open(p)
    } else {
        File::create(p)
    }
}

/// Reproducer path: `--repro`, else `<out>.repro`, else `balgraph.repro`.
pub fn repro_path(explicit: Option<&Path>, global: &Global) -> std::path::PathBuf {
    match (explicit, &global.out) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(out)) => {
            let mut s = out.clone().into_os_string();
            s.push(".repro");
            s.into()
        }
        (None, None) => "balgraph.repro".into(),
    }
}
