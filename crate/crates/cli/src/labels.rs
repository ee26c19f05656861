use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use mldom_core::io;
use mldom_core::VertexSet;

/// Vertex names from a `.labels.json` sidecar, if one sits next to the input.
#[derive(Default)]
pub struct Labels {
    by_name: BTreeMap<String, usize>,
    by_vertex: BTreeMap<usize, String>,
}

impl Labels {
    pub fn for_input(input: &Path) -> Result<Self> {
        let path = io::sidecar_path(input);
        if !path.exists() {
            return Ok(Labels::default());
        }
        let by_name = io::read_labels(&path)?;
        let by_vertex = by_name.iter().map(|(k, &v)| (v, k.clone())).collect();
        Ok(Labels { by_name, by_vertex })
    }

    pub fn vertex(&self, v: usize) -> String {
        self.by_vertex
            .get(&v)
            .cloned()
            .unwrap_or_else(|| v.to_string())
    }

    pub fn set(&self, s: &VertexSet) -> String {
        let names: Vec<String> = s.iter().map(|v| self.vertex(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Comma-separated vertex indices or label names.
    pub fn parse_set(&self, n: usize, text: &str) -> Result<VertexSet> {
        let mut members = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v = match tok.parse::<usize>() {
                Ok(v) => v,
                Err(_) => *self
                    .by_name
                    .get(tok)
                    .with_context(|| format!("unknown vertex `{tok}`"))?,
            };
            members.push(v);
        }
        if members.is_empty() {
            bail!("empty vertex set `{text}`");
        }
        Ok(VertexSet::from_vertices(n, &members)?)
    }
}
