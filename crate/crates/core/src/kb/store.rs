use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use super::{parse_kb, serialize_kb, KbError, KnowledgeBase};

/// Shared, file-backed knowledge base.
///
/// Readers take an `Arc` snapshot and never observe a half-applied update.
/// Writers are serialized; each accepted update rewrites the whole file
/// through a temporary sibling and an atomic rename.
#[derive(Debug)]
pub struct KbStore {
    path: Option<PathBuf>,
    current: RwLock<Arc<KnowledgeBase>>,
    writer: Mutex<()>,
}

impl KbStore {
    /// In-memory store; updates are not persisted.
    pub fn in_memory(kb: KnowledgeBase) -> Self {
        KbStore {
            path: None,
            current: RwLock::new(Arc::new(kb)),
            writer: Mutex::new(()),
        }
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self, KbError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| KbError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let kb = parse_kb(&text)?;
        Ok(KbStore {
            path: Some(path.to_path_buf()),
            current: RwLock::new(Arc::new(kb)),
            writer: Mutex::new(()),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn snapshot(&self) -> Arc<KnowledgeBase> {
        self.current
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .clone()
    }

    /// Applies `f` to the current KB and, on success, persists and publishes
    /// the result. Returns the new snapshot.
    pub fn update<F>(&self, f: F) -> Result<Arc<KnowledgeBase>, KbError>
    where
        F: FnOnce(&KnowledgeBase) -> Result<KnowledgeBase, KbError>,
    {
        let _guard = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        let next = Arc::new(f(&self.snapshot())?);
        if let Some(path) = &self.path {
            write_atomic(path, &serialize_kb(&next))?;
        }
        *self.current.write().unwrap_or_else(|e| e.into_inner()) = next.clone();
        Ok(next)
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), KbError> {
    let io_err = |source| KbError::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}
