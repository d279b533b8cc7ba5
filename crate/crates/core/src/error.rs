use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("character set is empty")]
    EmptyCharSet,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("operation requires at least 2 nodes, graph has {n_nodes}")]
    GraphTooSmall { n_nodes: usize },

    #[error("graph is disconnected: no path between node {a}{} and node {b}{}",
            fmt_label(.a_label), fmt_label(.b_label))]
    Disconnected {
        a: u32,
        b: u32,
        a_label: Option<char>,
        b_label: Option<char>,
    },

    #[error("graph carries no node labels")]
    MissingLabels,

    #[error("unknown component id {id} (partition has {n_components} components)")]
    UnknownComponent { id: u32, n_components: usize },

    #[error("invalid graph data: {0}")]
    InvalidGraph(String),

    #[error("edge count {m} infeasible for {n} nodes (max {max})")]
    InfeasibleEdgeCount { n: usize, m: u64, max: u64 },

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    #[error("node labeling is invalid: {0}")]
    InvalidLabeling(String),

    #[error("fit window [{k_min}, {k_max}] contains only zero counts")]
    EmptyFitWindow { k_min: u32, k_max: u32 },

    #[error("fit window [{k_min}, {k_max}] has {found} nonempty bins, need at least 3")]
    TooFewBins { k_min: u32, k_max: u32, found: usize },

    #[error("invalid fit window: {0}")]
    InvalidFitWindow(String),

    #[error("target size {target} out of range 1..={n_nodes}")]
    TargetSizeOutOfRange { target: usize, n_nodes: usize },

    #[error("invalid invasion parameter: {0}")]
    InvalidInvasion(String),

    #[error(
        "target average degree {target_k} not bracketed: \
         mean degree is {k_lo} at alpha={alpha_lo} and {k_hi} at alpha={alpha_hi}"
    )]
    CalibrationBracket {
        alpha_lo: f64,
        alpha_hi: f64,
        k_lo: f64,
        k_hi: f64,
        target_k: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

fn fmt_label(label: &Option<char>) -> String {
    match label {
        Some(c) => format!(" ('{c}')"),
        None => String::new(),
    }
}
