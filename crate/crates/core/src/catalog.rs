//! External graph catalogs: one graph6 record per line, optionally prefixed
//! by an identifier (`G6-19 EhEC`). Records without an id are named
//! `G<n>-<line>`. Blank lines and lines starting with `#` are skipped.

use std::collections::HashMap;
use std::path::Path;

use thiserror::Error;

use crate::canon::{canonical_cert, CanonicalCert};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub g6: String,
    pub cert: CanonicalCert,
}

/// Two entries describing the same isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicateCert {
    pub line: usize,
    pub id: String,
    pub first_id: String,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub warnings: Vec<DuplicateCert>,
    by_cert: HashMap<CanonicalCert, usize>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("line {line}: malformed record {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: duplicate id {id}")]
    DuplicateId { line: usize, id: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut catalog = Catalog::default();
        let mut ids: HashMap<String, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let record = raw.trim();
            if record.is_empty() || record.starts_with('#') || record == ">>graph6<<" {
                continue;
            }
            let fields: Vec<&str> = record.split_whitespace().collect();
            let (id, g6) = match fields[..] {
                [g6] => (None, g6),
                [id, g6] => (Some(id.to_string()), g6),
                _ => {
                    return Err(CatalogError::Malformed {
                        line,
                        text: record.to_string(),
                    })
                }
            };
            let graph = parse_graph6(g6).map_err(|source| CatalogError::Parse { line, source })?;
            let id = id.unwrap_or_else(|| format!("G{}-{}", graph.order(), line));
            if ids.insert(id.clone(), line).is_some() {
                return Err(CatalogError::DuplicateId { line, id });
            }
            let cert = canonical_cert(&graph);
            let index = catalog.entries.len();
            if let Some(&first) = catalog.by_cert.get(&cert) {
                catalog.warnings.push(DuplicateCert {
                    line,
                    id: id.clone(),
                    first_id: catalog.entries[first].id.clone(),
                });
            } else {
                catalog.by_cert.insert(cert, index);
            }
            catalog.entries.push(CatalogEntry {
                id,
                g6: g6.to_string(),
                cert,
            });
        }
        Ok(catalog)
    }

    /// Id of the first entry isomorphic to `g`.
    pub fn identify(&self, g: &Graph) -> Option<&str> {
        self.by_cert
            .get(&canonical_cert(g))
            .map(|&i| self.entries[i].id.as_str())
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    Catalog::parse(&std::fs::read_to_string(path)?)
}

pub fn identify<'a>(g: &Graph, catalog: &'a Catalog) -> Option<&'a str> {
    catalog.identify(g)
}
