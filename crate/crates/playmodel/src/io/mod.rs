//! Serialization: trace files and report documents, both byte-stable.

pub mod report;
pub mod trace_file;

pub use report::{write_report, ReportValue};
pub use trace_file::{
    fnv1a64, parse_trace_text, read_trace_text, render_trace, replay_records, write_trace,
    StateMode, TickRecord, TraceFileError, TraceHeader, TRACE_FORMAT_VERSION,
};

use std::io::Write;
use std::path::Path;

/// Write-temp-then-rename, so a crash never leaves a half-written file
/// behind under the target name.
pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp_name);
    {
        let mut file = std::fs::File::create(&tmp)?;
        file.write_all(bytes)?;
        file.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}
