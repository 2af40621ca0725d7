use serde::Serialize;

use super::{CensusRow, PROVED_COMPLETE_TO};
use crate::spec::ComplementSpec;

pub trait CensusRenderer: Send + Sync {
    fn name(&self) -> &'static str;
    fn render(&self, rows: &[CensusRow]) -> String;
}

/// One tab-separated line per row, no header.
pub struct TsvRenderer;

impl CensusRenderer for TsvRenderer {
    fn name(&self) -> &'static str {
        "tsv"
    }

    fn render(&self, rows: &[CensusRow]) -> String {
        let mut out = String::new();
        for r in rows {
            let [o, k, c, f, s] = columns(r);
            out.push_str(&format!("{o}\t{k}\t{c}\t{f}\t{s}\n"));
        }
        out
    }
}

#[derive(Serialize)]
struct JsonRow {
    order: u64,
    kernel: String,
    complement: String,
    family: &'static str,
    structure: String,
}

/// A JSON array of row objects.
pub struct JsonRenderer;

impl CensusRenderer for JsonRenderer {
    fn name(&self) -> &'static str {
        "json"
    }

    fn render(&self, rows: &[CensusRow]) -> String {
        let items: Vec<JsonRow> = rows
            .iter()
            .map(|r| JsonRow {
                order: r.order,
                kernel: r.kernel.display_structure(),
                complement: r.complement.to_string(),
                family: r.family.tag(),
                structure: r.structure_string.clone(),
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&items).expect("rows serialize");
        s.push('\n');
        s
    }
}

/// Three tables: cyclic 2-group complements, other cyclic complements, and
/// non-abelian complements.
pub struct MarkdownRenderer;

const SECTIONS: [&str; 3] = [
    "Complement a cyclic 2-group",
    "Cyclic complement of order divisible by 3",
    "Non-abelian complement",
];

fn section(c: &ComplementSpec) -> usize {
    match c {
        _ if !c.is_cyclic() => 2,
        _ if c.order().is_power_of_two() => 0,
        _ => 1,
    }
}

impl CensusRenderer for MarkdownRenderer {
    fn name(&self) -> &'static str {
        "markdown"
    }

    fn render(&self, rows: &[CensusRow]) -> String {
        let mut out = String::from("# Frobenius groups with perfect order classes\n\n");
        let max = rows.iter().map(|r| r.order).max().unwrap_or(0);
        out.push_str(&format!(
            "Rows come from the classified families. The list is complete up to order {PROVED_COMPLETE_TO}; \
             beyond that, complements that are soluble with prime divisors outside {{2,3,5}} \
             are not classified and rows of such groups would be missing.{}\n",
            if max > PROVED_COMPLETE_TO { " This table goes past that bound." } else { "" }
        ));
        for (i, title) in SECTIONS.iter().enumerate() {
            out.push_str(&format!("\n## {title}\n\n"));
            out.push_str("| order | kernel | complement | family | structure |\n");
            out.push_str("|---|---|---|---|---|\n");
            for r in rows.iter().filter(|r| section(&r.complement) == i) {
                let [o, k, c, f, s] = columns(r);
                out.push_str(&format!("| {o} | {k} | {c} | {f} | {s} |\n"));
            }
        }
        out
    }
}

fn columns(r: &CensusRow) -> [String; 5] {
    [
        r.order.to_string(),
        r.kernel.display_structure(),
        r.complement.to_string(),
        r.family.tag().to_string(),
        r.structure_string.clone(),
    ]
}

/// Renderers by name.
pub struct RendererRegistry {
    renderers: Vec<Box<dyn CensusRenderer>>,
}

impl RendererRegistry {
    pub fn empty() -> Self {
        RendererRegistry {
            renderers: Vec::new(),
        }
    }

    /// `tsv`, `json` and `markdown`.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(TsvRenderer));
        reg.register(Box::new(JsonRenderer));
        reg.register(Box::new(MarkdownRenderer));
        reg
    }

    /// Replaces any renderer of the same name.
    pub fn register(&mut self, r: Box<dyn CensusRenderer>) {
        self.renderers.retain(|x| x.name() != r.name());
        self.renderers.push(r);
    }

    pub fn get(&self, name: &str) -> Option<&dyn CensusRenderer> {
        self.renderers
            .iter()
            .find(|r| r.name().eq_ignore_ascii_case(name))
            .map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.renderers.iter().map(|r| r.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::enumerate;

    #[test]
    fn tsv_row() {
        let rows = enumerate(6);
        assert_eq!(TsvRenderer.render(&rows), "6\tC3\tC2\tThmC\tC3:C2\n");
    }

    #[test]
    fn json_rows() {
        let rows = enumerate(15_000);
        let v: serde_json::Value = serde_json::from_str(&JsonRenderer.render(&rows)).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 39);
        assert_eq!(arr[0]["structure"], "C3:C2");
        assert_eq!(arr[0]["order"], 6);
    }

    #[test]
    fn markdown_sections() {
        let md = MarkdownRenderer.render(&enumerate(15_000));
        let parts: Vec<&str> = md.split("\n## ").collect();
        assert_eq!(parts.len(), 4);
        let count = |s: &str| {
            s.lines()
                .filter(|l| l.starts_with("| ") && !l.starts_with("| order"))
                .count()
        };
        assert_eq!(count(parts[1]), 18);
        assert_eq!(count(parts[2]), 15);
        assert_eq!(count(parts[3]), 6);
    }

    #[test]
    fn registry_lookup() {
        let reg = RendererRegistry::standard();
        assert_eq!(reg.names(), vec!["tsv", "json", "markdown"]);
        assert!(reg.get("JSON").is_some());
        assert!(reg.get("csv").is_none());
    }
}
