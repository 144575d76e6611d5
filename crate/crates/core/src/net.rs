//! The net `N_n`: every chain with `|i| <= n`.

use serde::{Deserialize, Serialize};

use crate::chain::Chain;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Net {
    pub order: u64,
    pub chains: Vec<Chain>,
}

/// `n(n + 1) + 2`: `|i|` chains for each `0 < |i| <= n` plus the two horizontal ones.
pub fn net_size(n: u64) -> u64 {
    n * (n + 1) + 2
}

/// All chains of order at most `n`, sorted by `i` and then `j`.
pub fn net(n: u64) -> Result<Net> {
    if n == 0 {
        return Err(Error::Domain("net order must be at least 1".into()));
    }
    let top = i64::try_from(n).map_err(|_| Error::Overflow(n.to_string()))?;
    let mut chains = Vec::with_capacity(net_size(n) as usize);
    for i in -top..=top {
        let js = match i {
            0 => -1..=0,
            i if i > 0 => 0..=i - 1,
            i => i..=-1,
        };
        for j in js {
            chains.push(Chain::new(i, j)?);
        }
    }
    Ok(Net { order: n, chains })
}
