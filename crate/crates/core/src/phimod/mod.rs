//! The `l = p` side: (φ, N)-modules with Galois descent data, their
//! comparison with Weil–Deligne points, Hodge types and dimension counts.

mod hodge;
mod ledger;
mod module;

pub use hodge::{filtered_cohomology, hodge_dim, is_regular, local_dim, FilteredDims, HodgeType};
pub use ledger::{global_ledger, GlobalLedger, GlobalLedgerInput};
pub use module::{
    collapse, fontaine_to_wd, inflated_point, normalize, wd_to_phi_module, wl_frobenius_centralizes, Collapse,
    PhiModule,
};
