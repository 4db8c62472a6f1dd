//! Home of the `acceptance` test target, which checks the numerical
//! identities of every model and the reproducibility of the generated
//! figure files. Run it with `cargo test -p conformal-validation --test
//! acceptance`.
