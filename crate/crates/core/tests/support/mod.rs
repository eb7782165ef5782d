pub mod conic_oracle;
