//! Library side of the `fibcube` command: table rendering and the verification run.

pub mod render;
pub mod verify;

/// Environment variable overriding the brute-force search limit.
pub const ORACLE_CAP_ENV: &str = "FIBCUBE_ORACLE_CAP";

/// Largest order accepted by `poly` and by the formula side of `verify`.
pub const MAX_FORMULA_N: usize = 40;

/// Largest order accepted by `enumerate`.
pub const MAX_ENUMERATE_N: usize = 40;

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RESOURCE: u8 = 3;
}
