//! Sequence tables, exact β/γ series, certified limit enclosures, and the
//! recursion, generating-function and growth checks over them.

mod antiatom;
mod decimal;
mod ratios;
mod report;
mod series;
mod table;
mod verify;

pub use antiatom::anti_atom_bound_check;
pub use decimal::{compact_decimal, fixed_decimal, rational_string};
pub use ratios::{
    beta, beta_sigma, enclose_beta_inf, enclose_beta_sigma_inf, enclose_gamma_inf,
    enclose_gamma_sigma_inf, gamma, gamma_sigma, sqrt3_over_2_pow_upper, Enclosure,
};
pub use report::{
    growth_report, r_value, table1, table2, GrowthReport, GrowthRow, RValue, Table1Row, Table2Row,
    TABLE1_HEADER, TABLE2_HEADER,
};
pub use series::TruncatedSeries;
pub use table::{Entry, Provenance, SequenceTable, TableSet};
pub use verify::{verify_genfunc_coeffs, verify_recursions, Check, CheckReport};
