//! Text formats: operation-table files and descriptor expressions.

mod expr;
mod table_format;

pub use expr::{parse_descriptor, parse_expr, DescriptorExpr, SemilatticeExpr};
pub use table_format::{format_table, parse_table, parse_table_unchecked, read_table_file};
