//! Constructors for standard rack families.
//!
//! Modular families label the residue `r` as element `r + 1`.

use crate::error::{Error, Result};
use crate::perm::{gcd, Permutation};
use crate::props;
use crate::rack::RackTable;

/// The constant action (permutation) rack `x ▷ y = σ(x)`.
pub fn constant_action(sigma: &Permutation) -> RackTable {
    RackTable::from_fn(sigma.len(), |x, _| sigma.apply0(x))
}

fn unit_check(n: u64, t: i64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let t_mod = t.rem_euclid(n as i64) as u64;
    if gcd(t_mod, n) != 1 {
        return Err(Error::NotAUnit { t, n });
    }
    Ok(t_mod)
}

fn linear_table(n: u64, t: u64, s: u64) -> RackTable {
    RackTable::from_fn(n as usize, |x, y| {
        ((t * x as u64 + s * y as u64) % n) as usize
    })
}

/// The Alexander quandle on `Z_n`: `x ▷ y = t·x + (1−t)·y`, with `t` a unit.
pub fn alexander(n: u64, t: i64) -> Result<RackTable> {
    let t_mod = unit_check(n, t)?;
    let s = (1 + n - t_mod) % n;
    Ok(linear_table(n, t_mod, s))
}

/// The `(t,s)`-rack on `Z_n`: `x ▷ y = t·x + s·y`, requiring `t` a unit and
/// `s(1−t−s) ≡ 0 (mod n)`.
pub fn ts_rack(n: u64, t: i64, s: i64) -> Result<RackTable> {
    let t_mod = unit_check(n, t)?;
    let ni = n as i64;
    let s_mod = s.rem_euclid(ni);
    let relation = (s_mod * (1 - t_mod as i64 - s_mod)).rem_euclid(ni);
    if relation != 0 {
        return Err(Error::TsRelation {
            n,
            t,
            s,
            value: relation,
        });
    }
    let table = linear_table(n, t_mod, s_mod as u64);
    props::ensure_rack(&table)?;
    Ok(table)
}
