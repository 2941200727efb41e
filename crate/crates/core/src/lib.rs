pub mod characters;
pub mod class_numbers;
pub mod cli;
pub mod cyclotomic;
pub mod deviation;
pub mod digits;
pub mod error;
pub mod modular;
pub mod render;
pub mod scanner;
