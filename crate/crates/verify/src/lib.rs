//! Holds the `acceptance` test target; the criteria live in `bergex_cli::criteria`.
