pub mod extremal;
pub mod identities;
pub mod minimize;
pub mod spectrum;
pub mod table;
