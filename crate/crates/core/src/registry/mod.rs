pub mod catalog;
pub mod dsl;
pub mod verify;

pub use catalog::{delegated_checks, list_formulas, lookup, Formula, LhsKind, RhsKind};
pub use dsl::{Arg, Expression, ExprOptions, ExprValue};
pub use verify::{quarantine_list, verify_formula, FormulaReport, Verdict, VerifyConfig};
