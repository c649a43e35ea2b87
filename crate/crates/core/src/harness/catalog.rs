//! Flat catalog rows for listing and export.

use serde::Serialize;

use crate::operators::identities::{operator_catalog, OpKind, OperatorIdentity};
use crate::registry::catalog::{list_formulas, Formula, LhsKind, RhsKind};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaRow {
    pub id: String,
    pub family: String,
    pub arity: String,
    pub outer_sum_arity: usize,
    pub lhs_kind: LhsKind,
    pub rhs_kind: RhsKind,
    pub slots: Vec<String>,
    /// Parameter combinations that must avoid gamma poles.
    pub constraints: Vec<String>,
    pub status: &'static str,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorRow {
    pub id: String,
    pub family: String,
    pub arity: String,
    pub slots: Vec<String>,
    pub chain: String,
    pub constraints: Vec<String>,
    pub check: &'static str,
}

fn arity_label(general: bool, r: usize) -> String {
    if general {
        "r".into()
    } else {
        r.to_string()
    }
}

fn constraints(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v.dedup();
    v
}

pub fn formula_row(f: &Formula) -> FormulaRow {
    let mut exprs = f.lhs.pole_constrained();
    exprs.extend(f.rhs.pole_constrained());
    FormulaRow {
        id: f.id.clone(),
        family: f.family.to_string(),
        arity: arity_label(f.general_arity, f.arity),
        outer_sum_arity: f.outer_sum_arity(),
        lhs_kind: f.lhs_kind,
        rhs_kind: f.rhs_kind,
        slots: f.slots.clone(),
        constraints: constraints(exprs.iter().map(|a| a.to_string()).collect()),
        status: if f.corrected.is_some() { "suspected-misprint" } else { "as-printed" },
        note: f.note.clone(),
    }
}

pub fn chain_string(d: &OperatorIdentity) -> String {
    d.chain
        .iter()
        .map(|s| {
            let name = match s.kind {
                OpKind::H => "H",
                OpKind::Hbar => "Hbar",
            };
            let vars: Vec<String> = s.vars.iter().map(|j| (j + 1).to_string()).collect();
            format!("{name}[{}]({}, {})", vars.join(","), s.alpha, s.beta)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn operator_row(d: &OperatorIdentity) -> OperatorRow {
    OperatorRow {
        id: d.id.clone(),
        family: d.family.to_string(),
        arity: arity_label(d.general_arity, d.arity),
        slots: d.slots.clone(),
        chain: chain_string(d),
        constraints: constraints(d.pole_constrained().iter().map(|a| a.to_string()).collect()),
        check: if d.delegated { "numeric" } else { "coefficients" },
    }
}

/// General-arity entries are listed once, at `r` variables.
pub fn formula_rows(r: usize) -> Vec<FormulaRow> {
    list_formulas(r).iter().map(formula_row).collect()
}

pub fn operator_rows(r: usize) -> Vec<OperatorRow> {
    operator_catalog(r).iter().map(operator_row).collect()
}

pub fn formula_csv(rows: &[FormulaRow]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "family", "arity", "outer_sum_arity", "lhs_kind", "rhs_kind", "slots", "constraints", "status", "note"])?;
    for r in rows {
        w.write_record([
            r.id.clone(),
            r.family.clone(),
            r.arity.clone(),
            r.outer_sum_arity.to_string(),
            format!("{:?}", r.lhs_kind).to_lowercase(),
            format!("{:?}", r.rhs_kind).to_lowercase(),
            r.slots.join(";"),
            r.constraints.join(";"),
            r.status.to_string(),
            r.note.clone(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf8"))
}

pub fn operator_csv(rows: &[OperatorRow]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "family", "arity", "slots", "chain", "constraints", "check"])?;
    for r in rows {
        w.write_record([
            r.id.clone(),
            r.family.clone(),
            r.arity.clone(),
            r.slots.join(";"),
            r.chain.clone(),
            r.constraints.join(";"),
            r.check.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        assert_eq!(formula_rows(3).len(), 39);
        assert_eq!(operator_rows(3).len(), 39);
        assert_eq!(formula_csv(&formula_rows(3)).unwrap().lines().count(), 40);
        assert_eq!(operator_csv(&operator_rows(3)).unwrap().lines().count(), 40);
    }

    #[test]
    fn misprint_status() {
        let rows = formula_rows(3);
        let flagged: Vec<_> = rows.iter().filter(|r| r.status == "suspected-misprint").map(|r| r.id.as_str()).collect();
        assert_eq!(flagged, ["2.21", "3.44", "3.46"]);
    }
}
