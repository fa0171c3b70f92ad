//! Global bookkeeping: the presentation of the global ring over the local
//! ones and the resulting lower bound on its Krull dimension.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalLedgerInput {
    /// `|Σ|` for `Σ = S^∞`, the finite places in the deformation problem.
    pub sinf_size: usize,
    /// `dim H⁰(G_v, ad)` at each archimedean place.
    pub archimedean_h0s: Vec<usize>,
    /// `dim 𝔤⁰`.
    pub g0_dim: usize,
    /// `[F_v:ℚ_p]` for each place above `p`.
    pub places_over_p: Vec<usize>,
    /// `dim G/B`.
    pub flag_dim: usize,
    /// `dim G − dim B`, the archimedean `h0` of an odd representation.
    pub odd_h0: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalLedger {
    pub s: usize,
    pub r_min: usize,
    pub krull_lower_bound: i64,
    pub odd: bool,
}

/// `s = (|Σ|−1)·dim 𝔤⁰ + Σ_{v|∞} h0_v`, at least `dim 𝔤⁰` relations, and
/// `1 + Σ_{v|p} [F_v:ℚ_p]·dim G/B − Σ_{v|∞} h0_v`.
pub fn global_ledger(inp: &GlobalLedgerInput) -> GlobalLedger {
    let arch: usize = inp.archimedean_h0s.iter().sum();
    let s = inp.sinf_size.saturating_sub(1) * inp.g0_dim + arch;
    let p_part: usize = inp.places_over_p.iter().map(|f| f * inp.flag_dim).sum();
    let odd = inp.archimedean_h0s.iter().all(|&h| h == inp.odd_h0);
    GlobalLedger {
        s,
        r_min: inp.g0_dim,
        krull_lower_bound: 1 + p_part as i64 - arch as i64,
        odd,
    }
}
