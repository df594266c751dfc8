//! Reading multi-graph files: graph6 (one graph per line) or MGF blocks
//! separated by blank lines.

use cubic_covers::{parse_edge_list, parse_graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Auto,
    Mgf,
    Graph6,
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub index: usize,
    pub source: String,
    pub graph: Result<Graph, String>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// MGF when the first content line is an `n m` header.
pub fn detect(text: &str) -> Format {
    match content_lines(text).next() {
        Some((_, line)) => {
            let before_comment = line.split('#').next().unwrap_or("");
            let fields: Vec<&str> = before_comment.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                Format::Mgf
            } else {
                Format::Graph6
            }
        }
        None => Format::Graph6,
    }
}

pub fn read_corpus(text: &str, format: Format) -> Vec<Entry> {
    let format = match format {
        Format::Auto => detect(text),
        f => f,
    };
    match format {
        Format::Graph6 => content_lines(text)
            .enumerate()
            .map(|(index, (_, line))| {
                let line = line.trim();
                Entry {
                    index,
                    source: line.to_string(),
                    graph: parse_graph6(line).map_err(|e| e.to_string()),
                }
            })
            .collect(),
        _ => mgf_blocks(text)
            .into_iter()
            .enumerate()
            .map(|(index, (first_line, block))| Entry {
                index,
                source: format!("line {first_line}"),
                graph: parse_edge_list(&block).map_err(|e| e.to_string()),
            })
            .collect(),
    }
}

/// Blocks of consecutive non-blank lines holding at least one non-comment
/// line, with the line number where each starts.
fn mgf_blocks(text: &str) -> Vec<(usize, String)> {
    let mut blocks = Vec::new();
    let mut current: Option<(usize, String, bool)> = None;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if let Some((start, block, true)) = current.take() {
                blocks.push((start, block));
            }
            current = None;
            continue;
        }
        let entry = current.get_or_insert_with(|| (i + 1, String::new(), false));
        entry.1.push_str(line);
        entry.1.push('\n');
        if !line.trim_start().starts_with('#') {
            if !entry.2 {
                entry.0 = i + 1;
            }
            entry.2 = true;
        }
    }
    if let Some((start, block, true)) = current {
        blocks.push((start, block));
    }
    blocks
}
