//! Command-line surface over the [`madhava`] library.
//!
//! Three subcommands:
//!
//! - `compute` — one π approximation by any supported method, printed at a
//!   chosen decimal scale together with an enclosure-certified absolute
//!   error bound;
//! - `table` — the convergence table of the three accelerated series
//!   (orders n⁻³, n⁻⁵, n⁻⁷) at any row set, as markdown, CSV, or JSON;
//! - `verify` — certified check suites (`madhava`, `identities`, `table`,
//!   `all`) with one PASS/WARN/FAIL line per check.
//!
//! Everything is computed in exact rational arithmetic; decimals appear
//! only at the output boundary, and every stated error bound comes from
//! the library's self-contained π enclosure — no external constant is
//! consulted anywhere. Identical invocations produce byte-identical
//! output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 undefined transform (a vanishing second difference in Δ²).

pub mod fixtures;
pub mod methods;
pub mod render;
pub mod report;
pub mod verify;

mod cli;

pub use cli::run;
