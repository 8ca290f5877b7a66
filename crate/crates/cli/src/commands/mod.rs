pub mod bench;
pub mod compute;
pub mod table;
pub mod verify;

use crate::error::CliError;

pub(crate) fn to_index(n: u64) -> Result<usize, CliError> {
    usize::try_from(n)
        .map_err(|_| CliError::Usage(format!("--n {n} is too large for this platform")))
}
