//! Library surface of the CLI crate: the instance-file schema, shared with
//! the integration tests.

pub mod instance_file;
