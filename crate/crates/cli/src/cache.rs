//! Character tables persisted as JSON, one file per (m, n, params, route, strategy, version).

use std::path::{Path, PathBuf};

use superfrob::characters::CharacterTable;
use superfrob::rsk::Strategy;
use superfrob::HookParams;

use crate::Route;

pub fn path(dir: &Path, n: usize, params: &HookParams, route: Route, strategy: Strategy) -> PathBuf {
    let params = params.to_string().replace('|', "-").replace(',', "_");
    let route = match route {
        Route::Rsk => format!("rsk-{strategy}"),
        Route::Oracle => "oracle".to_string(),
    };
    let m = params.split('_').count();
    dir.join(format!("chartable-m{m}-n{n}-p{params}-{route}-v{}.json", superfrob::VERSION))
}

/// A cached table, or `None` when absent or unreadable.
pub fn load(path: &Path) -> Option<CharacterTable> {
    let text = std::fs::read_to_string(path).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    match CharacterTable::from_json(&value) {
        Ok(t) => Some(t),
        Err(e) => {
            eprintln!("warning: ignoring cache file {}: {e}", path.display());
            None
        }
    }
}

pub fn store(path: &Path, table: &CharacterTable) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_string_pretty(&table.to_json())?)?;
    std::fs::rename(tmp, path)
}
