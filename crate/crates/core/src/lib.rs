pub mod clifford;
pub mod collineation;
pub mod field;
pub mod harness;
pub mod linalg;
pub mod polarity;
pub mod projective;
pub mod report;
pub mod scalar;
pub mod tensor;
