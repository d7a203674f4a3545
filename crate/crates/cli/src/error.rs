use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config file line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid experiment grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Circuit(#[from] lsc_circuit::CircuitError),
    #[error(transparent)]
    Graph(#[from] lsc_graph::GraphError),
    #[error(transparent)]
    Route(#[from] lsc_router::RouteError),
    #[error(transparent)]
    Mapper(#[from] lsc_mapper::MapperError),
    #[error(transparent)]
    Codegen(#[from] lsc_codegen::CodegenError),
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    /// 1 usage, 2 routing or configuration, 3 verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::VerificationFailed => 3,
            _ => 2,
        }
    }

    pub(crate) fn io(path: &str, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_string(), source }
    }
}
