pub mod gf;
pub mod semigroup;
pub mod curves;
pub mod codes;
pub mod construct;
pub mod cli;
