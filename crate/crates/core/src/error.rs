use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown quantale builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("lukasiewicz requires at least 2 levels, got {0}")]
    BadLevels(u32),

    #[error("value {value} does not belong to the {quantale} quantale")]
    ForeignValue { quantale: String, value: String },

    #[error("quantale mismatch: {0} vs {1}")]
    QuantaleMismatch(String, String),

    #[error("carrier mismatch: relation targets {left} but continues from {right}")]
    CarrierMismatch { left: String, right: String },

    #[error("matrix has {rows}x{cols} entries, expected {want_rows}x{want_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("duplicate carrier label `{0}`")]
    DuplicateLabel(String),

    #[error("element `{0}` not in carrier")]
    UnknownElement(String),

    #[error("reflexivity violated at `{element}`: a(x,x) = {found} does not dominate the unit")]
    Reflexivity { element: String, found: String },

    #[error("transitivity violated on ({x},{y},{z}): {lhs} is not below {rhs}")]
    Transitivity {
        x: String,
        y: String,
        z: String,
        lhs: String,
        rhs: String,
    },

    #[error("not a V-functor: a({x},{y}) = {lhs} exceeds b(f({x}),f({y})) = {rhs}")]
    NotAFunctor {
        x: String,
        y: String,
        lhs: String,
        rhs: String,
    },

    #[error("module left action violated on ({xp},{x},{y}): {lhs} is not below {rhs}")]
    LeftAction {
        xp: String,
        x: String,
        y: String,
        lhs: String,
        rhs: String,
    },

    #[error("module right action violated on ({x},{y},{yp}): {lhs} is not below {rhs}")]
    RightAction {
        x: String,
        y: String,
        yp: String,
        lhs: String,
        rhs: String,
    },

    #[error("pair bound violated on ({x},{y}): composite {lhs} is not below {rhs}")]
    PairBound {
        x: String,
        y: String,
        lhs: String,
        rhs: String,
    },

    #[error("{what} exceeds the enumeration cap: needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: u128,
        cap: u128,
    },

    #[error("{0} requires a finite quantale")]
    InfiniteQuantale(String),

    #[error("{0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
