pub mod binary_form;
pub mod cli;
pub mod correspondence;
pub mod descent;
pub mod error;
pub mod etale;
pub mod factor;
pub mod field;
pub mod gl2;
pub mod json;
pub mod matrix;
pub mod pencil;
pub mod poly;
pub mod quasisplit;
pub mod random;
