use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced by the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty geometry")]
    EmptyGeometry,

    #[error("vertex index {index} out of bounds (mesh has {count} vertices)")]
    IndexOutOfBounds { index: usize, count: usize },

    #[error("voxel index {index:?} outside grid dims {dims:?}")]
    VoxelOutOfBounds {
        index: (u32, u32, u32),
        dims: (u32, u32, u32),
    },

    #[error("pixel ({u}, {v}) outside {width}x{height} image")]
    PixelOutOfBounds { u: u32, v: u32, width: u32, height: u32 },

    #[error("unknown mesh id `{0}`")]
    UnknownMeshId(String),

    #[error("duplicate instance id {0}")]
    DuplicateInstanceId(u16),

    #[error("grid specs differ: {0}")]
    SpecMismatch(String),

    #[error("raster dimensions differ: {left} vs {right}")]
    DimMismatch { left: String, right: String },

    #[error("{0}")]
    InvalidValue(String),

    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },

    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),

    #[error("truncated input: needed {needed} more bytes at offset {offset}")]
    Truncated { offset: usize, needed: usize },

    #[error("trailing garbage: {0} unexpected bytes after payload")]
    TrailingBytes(usize),

    #[error("invalid label record: semantic 0 with instance {0}")]
    InvalidLabel(u16),

    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },

    #[error("schema violation at {field}: {msg}")]
    Schema { field: String, msg: String },

    #[error("i/o error on {path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidValue(msg.into())
    }

    pub fn file(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::File { path: path.into(), source }
    }
}
