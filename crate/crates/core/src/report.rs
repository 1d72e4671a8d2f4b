//! Table emitters and rendering. Every emitted row is computed from an
//! `index_report` call; no table values are hard-coded here.

use clap::ValueEnum;
use serde::Serialize;

use crate::cascade::{cardinality_of_full_cascade, Cascade};
use crate::error::Error;
use crate::index::{minimal_parabolic_classification, IndexContext, IndexReport, MinimalBranch};
use crate::rootsys::{RootSystem, SimpleType, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

/// A rendered table: header plus rows of strings.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(self).expect("table serializes") + "\n"
            }
            OutputFormat::Csv => {
                let mut out = String::new();
                out.push_str(&self.header.join(","));
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
            OutputFormat::Markdown => {
                let mut out = format!("### {}\n\n", self.title);
                out.push_str(&format!("| {} |\n", self.header.join(" | ")));
                out.push_str(&format!(
                    "|{}|\n",
                    self.header.iter().map(|_| " --- ").collect::<Vec<_>>().join("|")
                ));
                for row in &self.rows {
                    out.push_str(&format!("| {} |\n", row.join(" | ")));
                }
                out
            }
        }
    }
}

/// ♯K(Π) across types (the cascade cardinality table).
pub fn cardinality_table(types: &[SimpleType]) -> Result<Table, Error> {
    let mut rows = Vec::new();
    for &t in types {
        rows.push(vec![t.to_string(), cardinality_of_full_cascade(t)?.to_string()]);
    }
    Ok(Table {
        title: "Cardinality of the full cascade K(Pi) (Bourbaki numbering)".into(),
        header: vec!["type".into(), "#K(Pi)".into()],
        rows,
    })
}

/// Per-simple-root classification of minimal parabolics.
pub fn minimal_table(types: &[SimpleType]) -> Result<Table, Error> {
    let mut rows = Vec::new();
    for &t in types {
        let class = minimal_parabolic_classification(t)?;
        let equal: Vec<String> =
            class.iter().filter(|r| r.equality).map(|r| r.i.to_string()).collect();
        let in_cascade: Vec<String> = class
            .iter()
            .filter(|r| r.branch == MinimalBranch::InFullCascade)
            .map(|r| r.i.to_string())
            .collect();
        rows.push(vec![
            t.to_string(),
            equal.join(" "),
            in_cascade.join(" "),
        ]);
    }
    Ok(Table {
        title: "Minimal parabolics with chi(p)+chi(u) = rk g (Bourbaki numbering)".into(),
        header: vec!["type".into(), "equality at i".into(), "{a_i} in K(Pi)".into()],
        rows,
    })
}

/// Maximal parabolics of A_ℓ with equality (the extremity phenomenon).
pub fn maximal_a_table(max_rank: usize) -> Result<Table, Error> {
    let mut rows = Vec::new();
    for l in 2..=max_rank {
        let t = SimpleType::parse(&format!("A{l}"))?;
        let rs = RootSystem::build(t)?;
        let ctx = IndexContext::new(&rs);
        let mut equal = Vec::new();
        for drop in 0..l {
            let s = rs.pi().difference(Subset::singleton(drop));
            if ctx.index_report(s)?.equality {
                equal.push((drop + 1).to_string());
            }
        }
        rows.push(vec![t.to_string(), equal.join(" ")]);
    }
    Ok(Table {
        title: "Maximal parabolics of A_l with chi(p)+chi(u) = rk g \
                (dropped root i, Bourbaki numbering)"
            .into(),
        header: vec!["type".into(), "equality dropping i".into()],
        rows,
    })
}

/// Renders a cascade for the CLI.
pub fn cascade_table(rs: &RootSystem, c: &Cascade) -> Table {
    let mut rows = Vec::new();
    for e in &c.elements {
        rows.push(vec![
            format!(
                "{{{}}}",
                e.support
                    .indices_1based()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            format!("{:?}", e.eps.coeffs),
            e.gamma.len().to_string(),
        ]);
    }
    Table {
        title: format!(
            "Cascade K(S) for {} with S = {{{}}} (Bourbaki numbering)",
            rs.type_label(),
            c.base.indices_1based().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        ),
        header: vec!["support".into(), "eps (root coords)".into(), "#Gamma".into()],
        rows,
    }
}

pub fn render_index_report(report: &IndexReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serializes") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from(
                "type,rank,subset,chi_p,chi_u,sum,equality,cond_i,cond_ii\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                report.type_label,
                report.rank,
                report
                    .subset
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                report.chi_p,
                report.chi_u,
                report.sum,
                report.equality,
                report.cond_i,
                report.cond_ii
            ));
            out
        }
        OutputFormat::Markdown => {
            format!(
                "**{} S={{{}}}**: chi(p) = {}, chi(u) = {}, sum = {} (rk = {}), \
                 equality: {}, (i): {}, (ii): {}\n",
                report.type_label,
                report.subset.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
                report.chi_p,
                report.chi_u,
                report.sum,
                report.rank,
                report.equality,
                report.cond_i,
                report.cond_ii
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::parse_type_ranges;

    #[test]
    fn cardinality_rows_match_known_values() {
        let types = parse_type_ranges("A1..A5,B2,D4,E7,G2").unwrap();
        let table = cardinality_table(&types).unwrap();
        let find = |label: &str| -> usize {
            table.rows.iter().find(|r| r[0] == label).unwrap()[1].parse().unwrap()
        };
        assert_eq!(find("A5"), 3);
        assert_eq!(find("D4"), 4);
        assert_eq!(find("E7"), 7);
        assert_eq!(find("G2"), 2);
    }

    #[test]
    fn minimal_table_c_family() {
        let types = parse_type_ranges("C2..C5").unwrap();
        let table = minimal_table(&types).unwrap();
        for (row, l) in table.rows.iter().zip(2..=5usize) {
            assert_eq!(row[1], l.to_string(), "C{l}: equality only at i = l");
        }
    }

    #[test]
    fn maximal_a_extremities() {
        let table = maximal_a_table(6).unwrap();
        for row in &table.rows {
            let l: usize = row[0][1..].parse().unwrap();
            assert_eq!(row[1], format!("1 {l}"));
        }
    }

    #[test]
    fn formats_render() {
        let types = parse_type_ranges("A2,G2").unwrap();
        let table = cardinality_table(&types).unwrap();
        assert!(table.render(OutputFormat::Csv).contains("A2,1"));
        assert!(table.render(OutputFormat::Markdown).contains("| A2 | 1 |"));
        let json = table.render(OutputFormat::Json);
        assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
    }
}
