//! Markdown, CSV and JSON renderings of tables and refinement traces.
//!
//! Markdown follows the layout of the worked examples: a `Row (ID)` column,
//! bold value letters, and validator cells shown as `×` (nothing to check),
//! `∅` (unsupported) or a list of witness ids.

use serde_json::{json, Value as Json};

use crate::formula::Style;
use crate::refinement::{Cell, CycleRecord, RowRecord, ValidatorsTrace};
use crate::tabulation::Table;

fn header(table: &Table, style: Style) -> Vec<String> {
    table.columns().iter().map(|f| f.print(style)).collect()
}

fn markdown_grid(head: &[String], body: impl Iterator<Item = Vec<String>>) -> String {
    let mut out = String::new();
    out.push_str("| Row (ID) | ");
    out.push_str(&head.join(" | "));
    out.push_str(" |\n|");
    out.push_str(&"---|".repeat(head.len() + 1));
    out.push('\n');
    for cells in body {
        out.push_str("| ");
        out.push_str(&cells.join(" | "));
        out.push_str(" |\n");
    }
    out
}

/// The rows of `table` as a markdown table.
pub fn table_markdown(table: &Table, style: Style) -> String {
    markdown_grid(
        &header(table, style),
        table.rows().iter().map(|r| {
            std::iter::once(format!("({})", r.id))
                .chain(r.values.iter().map(|&v| format!("**{}**", table.label(v))))
                .collect()
        }),
    )
}

fn cell_text(cell: &Cell) -> String {
    match cell {
        Cell::Skip => "×".to_owned(),
        Cell::Unsupported => "∅".to_owned(),
        Cell::Supported(ids) => ids
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn record_row(r: &RowRecord) -> Vec<String> {
    std::iter::once(format!("({})", r.id))
        .chain(r.cells.iter().map(cell_text))
        .collect()
}

/// One cycle's validators as a markdown table over `table`'s columns.
pub fn cycle_markdown(table: &Table, record: &CycleRecord, style: Style) -> String {
    markdown_grid(&header(table, style), record.rows.iter().map(record_row))
}

const ORDINALS: [&str; 10] = [
    "First", "Second", "Third", "Fourth", "Fifth", "Sixth", "Seventh", "Eighth", "Ninth", "Tenth",
];

fn cycle_caption(n: usize) -> String {
    match ORDINALS.get(n) {
        Some(word) => format!("{word} cycle."),
        None => format!("Cycle {}.", n + 1),
    }
}

/// Every stage of a refinement, captioned: the initial table, then for each
/// cycle that removed rows its validators and the table it left behind, and
/// finally the validators of the fixpoint.
pub fn trace_stages(initial: &Table, trace: &ValidatorsTrace) -> Vec<Stage> {
    let mut stages = vec![Stage::Rows("Initial table.".into(), initial.clone())];
    let mut current = initial.clone();
    let removing = trace
        .cycles
        .iter()
        .filter(|c| !c.removed.is_empty())
        .count();
    for (i, cycle) in trace.cycles.iter().enumerate() {
        if cycle.removed.is_empty() {
            if removing == 0 {
                stages.push(Stage::Rows("Final table.".into(), current.clone()));
            }
            stages.push(Stage::Validators("Validators.".into(), cycle.clone()));
            continue;
        }
        stages.push(Stage::Validators(cycle_caption(i), cycle.clone()));
        current = current.retain(|r| !cycle.removed.contains(&r.id));
        let caption = if i + 1 == removing {
            "Final table."
        } else {
            "Intermediate table."
        };
        stages.push(Stage::Rows(caption.into(), current.clone()));
    }
    stages
}

#[derive(Clone, Debug)]
pub enum Stage {
    Rows(String, Table),
    Validators(String, CycleRecord),
}

impl Stage {
    pub fn caption(&self) -> &str {
        match self {
            Stage::Rows(c, _) | Stage::Validators(c, _) => c,
        }
    }
}

fn stages_markdown(initial: &Table, stages: &[Stage], style: Style) -> String {
    stages
        .iter()
        .map(|s| {
            let body = match s {
                Stage::Rows(_, t) => table_markdown(t, style),
                Stage::Validators(_, c) => cycle_markdown(initial, c, style),
            };
            format!("{body}\n{}\n", s.caption())
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn trace_markdown(initial: &Table, trace: &ValidatorsTrace, style: Style) -> String {
    stages_markdown(initial, &trace_stages(initial, trace), style)
}

/// Initial and final tables only.
pub fn summary_markdown(initial: &Table, refined: &Table, style: Style) -> String {
    let stages = [
        Stage::Rows("Initial table.".into(), initial.clone()),
        Stage::Rows("Final table.".into(), refined.clone()),
    ];
    stages_markdown(initial, &stages, style)
}

fn csv_rows(initial: &Table, stages: &[Stage], style: Style) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut head = vec!["table".to_owned(), "id".to_owned()];
    head.extend(header(initial, style));
    w.write_record(&head)?;
    for s in stages {
        let caption = s.caption().trim_end_matches('.');
        match s {
            Stage::Rows(_, t) => {
                for r in t.rows() {
                    let mut rec = vec![caption.to_owned(), r.id.to_string()];
                    rec.extend(r.values.iter().map(|&v| t.label(v).to_owned()));
                    w.write_record(&rec)?;
                }
            }
            Stage::Validators(_, c) => {
                for r in &c.rows {
                    let mut rec = vec![caption.to_owned(), r.id.to_string()];
                    rec.extend(r.cells.iter().map(cell_text));
                    w.write_record(&rec)?;
                }
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// `id` plus one column per formula.
pub fn table_csv(table: &Table, style: Style) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut head = vec!["id".to_owned()];
    head.extend(header(table, style));
    w.write_record(&head)?;
    for r in table.rows() {
        let mut rec = vec![r.id.to_string()];
        rec.extend(r.values.iter().map(|&v| table.label(v).to_owned()));
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// All stages in one CSV, the first column naming the stage.
pub fn trace_csv(
    initial: &Table,
    trace: &ValidatorsTrace,
    style: Style,
) -> Result<String, csv::Error> {
    csv_rows(initial, &trace_stages(initial, trace), style)
}

pub fn summary_csv(initial: &Table, refined: &Table, style: Style) -> Result<String, csv::Error> {
    let stages = [
        Stage::Rows("Initial table.".into(), initial.clone()),
        Stage::Rows("Final table.".into(), refined.clone()),
    ];
    csv_rows(initial, &stages, style)
}

pub fn table_json(table: &Table, style: Style) -> Json {
    json!({
        "matrix": table.kind().nmatrix().name(),
        "columns": header(table, style),
        "rows": table.rows().iter().map(|r| json!({
            "id": r.id,
            "values": r.values.iter().map(|&v| table.label(v)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn trace_json(
    initial: &Table,
    refined: &Table,
    trace: Option<&ValidatorsTrace>,
    style: Style,
) -> Json {
    let mut out = json!({
        "initial": table_json(initial, style),
        "final": table_json(refined, style),
    });
    if let Some(trace) = trace {
        out["cycles"] = serde_json::to_value(&trace.cycles).expect("trace serializes");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Signature, SubformulaClosure};
    use crate::nmatrix::MatrixKind;
    use crate::refinement::refine_fixpoint;
    use crate::tabulation::generate_table;

    fn initial(s: &str) -> Table {
        let f = parse(s, Signature::Ipl).unwrap();
        generate_table(&SubformulaClosure::of(&f), MatrixKind::Ipl).unwrap()
    }

    #[test]
    fn captions_of_worked_example() {
        let t = initial("~~(p | ~p)");
        let (_, trace) = refine_fixpoint(&t);
        let captions: Vec<_> = trace_stages(&t, &trace)
            .iter()
            .map(|s| s.caption().to_owned())
            .collect();
        assert_eq!(
            captions,
            [
                "Initial table.",
                "First cycle.",
                "Intermediate table.",
                "Second cycle.",
                "Final table.",
                "Validators."
            ]
        );
    }

    #[test]
    fn captions_without_removals() {
        let t = initial("p");
        let (_, trace) = refine_fixpoint(&t);
        let captions: Vec<_> = trace_stages(&t, &trace)
            .iter()
            .map(|s| s.caption().to_owned())
            .collect();
        assert_eq!(captions, ["Initial table.", "Final table.", "Validators."]);
    }

    #[test]
    fn markdown_rows_and_cells() {
        let t = initial("~~(p | ~p)");
        let md = table_markdown(&t, Style::Unicode);
        assert!(md.starts_with("| Row (ID) | p | ¬p | p ∨ ¬p | ¬(p ∨ ¬p) | ¬¬(p ∨ ¬p) |\n"));
        assert!(md.contains("| (1) | **F** | **U** | **F** | **U** | **U** |"));
        let (_, trace) = refine_fixpoint(&t);
        let first = cycle_markdown(&t, &trace.cycles[0], Style::Unicode);
        assert!(first.contains("| (1) | × | 6, 7 | × | 4, 5, 6, 7 | 3 |"));
        assert!(first.contains("| (3) | × | ∅ | × | × | × |"));
    }

    #[test]
    fn csv_layout() {
        let t = initial("~p");
        assert_eq!(
            table_csv(&t, Style::Ascii).unwrap(),
            "id,p,~p\n1,F,U\n2,F,T\n3,T,F\n"
        );
    }

    #[test]
    fn json_layout() {
        let t = initial("~p");
        let j = table_json(&t, Style::Ascii);
        assert_eq!(j["columns"], json!(["p", "~p"]));
        assert_eq!(j["rows"][0], json!({"id": 1, "values": ["F", "U"]}));
        let (refined, trace) = refine_fixpoint(&t);
        let j = trace_json(&t, &refined, Some(&trace), Style::Ascii);
        assert_eq!(
            j["cycles"][0]["rows"][0]["cells"],
            json!(["skip", {"supported": [3]}])
        );
    }
}
