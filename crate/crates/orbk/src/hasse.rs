//! DOT and JSON export of the Duflo-certified cover graph of a closure.

use orbk_core::oracle::DufloHasse;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct HasseNodeDoc {
    pub rows: Vec<Vec<u32>>,
    pub shape: Vec<u32>,
    pub root: bool,
    pub descendant: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HasseDoc {
    pub n: usize,
    #[serde(rename = "I")]
    pub indices: Vec<u32>,
    pub nodes: Vec<HasseNodeDoc>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&DufloHasse> for HasseDoc {
    fn from(h: &DufloHasse) -> HasseDoc {
        HasseDoc {
            n: h.subset.n(),
            indices: h.subset.indices().iter().copied().collect(),
            nodes: h
                .members
                .iter()
                .enumerate()
                .map(|(k, t)| HasseNodeDoc {
                    rows: t.rows().to_vec(),
                    shape: t.shape().parts().to_vec(),
                    root: k == h.root,
                    descendant: h.descendants.contains(&k),
                })
                .collect(),
            edges: h.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Graphviz rendering: the root tableau is drawn bold, descendants filled,
/// and each edge points from a variety to one contained in its closure.
pub fn render_dot(h: &DufloHasse) -> String {
    let mut out = String::from("digraph closure {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (k, t) in h.members.iter().enumerate() {
        let mut attrs = format!("label=\"{t}\"");
        if k == h.root {
            attrs.push_str(", penwidth=2");
        }
        if h.descendants.contains(&k) {
            attrs.push_str(", style=filled, fillcolor=lightgrey");
        }
        out.push_str(&format!("  t{k} [{attrs}];\n"));
    }
    for &(a, b) in &h.covers {
        out.push_str(&format!("  t{a} -> t{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use orbk_core::oracle::{duflo_hasse, CellIndex};
    use orbk_core::SimpleRootSubset;

    #[test]
    fn rank_two_point() {
        let subset = SimpleRootSubset::new(2, [1]).unwrap();
        let cells = CellIndex::build(2, 7).unwrap();
        let h = duflo_hasse(&subset, &cells).unwrap();
        assert_eq!(h.members.len(), 1);
        assert!(h.covers.is_empty());
        let dot = render_dot(&h);
        assert!(dot.starts_with("digraph closure {"));
        assert!(dot.contains("penwidth=2"));
    }

    #[test]
    fn rank_four_chain() {
        let subset = SimpleRootSubset::new(4, [1]).unwrap();
        let cells = CellIndex::build(4, 7).unwrap();
        let h = duflo_hasse(&subset, &cells).unwrap();
        assert_eq!(h.members.len(), 5);
        assert_eq!(h.descendants.len(), 2);
        // the two descendants are exactly the covers of the root
        let from_root: Vec<usize> = h
            .covers
            .iter()
            .filter(|(a, _)| *a == h.root)
            .map(|&(_, b)| b)
            .collect();
        assert_eq!(from_root.len(), 2);
        for b in from_root {
            assert!(h.descendants.contains(&b));
        }
        let doc = HasseDoc::from(&h);
        assert_eq!(doc.nodes.len(), 5);
        assert_eq!(doc.nodes.iter().filter(|d| d.descendant).count(), 2);
        assert_eq!(doc.nodes.iter().filter(|d| d.root).count(), 1);
    }
}
