pub mod error;
pub mod error_lab;
pub mod exact;
pub mod oracle;
pub mod power_sums;
pub mod real;
pub mod roots;
pub mod formula;
