//! Closed-form counts of spanning trees and rooted spanning forests of
//! complete tripartite graphs, together with the pre-collapse sum-form
//! evaluators that count the same objects by root profile.
//!
//! The sum forms are deliberately independent implementations: they share
//! only the bipartite base count and the exact-arithmetic layer with the
//! closed forms, so the two serve as mutual oracles in tests.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, product_to_count, signed_power, BigCount, BigFraction};
use crate::graph::PartSizes;

fn frac(c: &BigCount) -> BigFraction {
    BigFraction::from_integer(BigInt::from(c.clone()))
}

fn frac_u64(v: u64) -> BigFraction {
    BigFraction::from_integer(BigInt::from(v))
}

/// Number of rooted spanning forests of the complete bipartite graph
/// K_{m,n} having exactly `l` roots among the m-side vertices and `k`
/// among the n-side:
///
/// `C(m,l) C(n,k) n^(m-l-1) m^(n-k-1) (km + ln - lk)`.
///
/// When the weight `km + ln - lk` vanishes the count is 0 and the power
/// factors are never evaluated, so no negative exponent can meet a zero
/// base.
pub fn bipartite_forest_count(m: u32, l: u32, n: u32, k: u32) -> Result<BigCount> {
    if m + n == 0 {
        return Err(Error::InvalidInput(
            "bipartite graph needs at least one vertex".into(),
        ));
    }
    if l > m || k > n {
        return Err(Error::InvalidInput(format!(
            "root counts ({l},{k}) exceed part sizes ({m},{n})"
        )));
    }
    let (m, l, n, k) = (m as u64, l as u64, n as u64, k as u64);
    let weight = k * m + l * n - l * k;
    if weight == 0 {
        return Ok(BigCount::zero());
    }
    let factors = [
        frac(&binomial(m, l as i64)),
        frac(&binomial(n, k as i64)),
        signed_power(n, m as i64 - l as i64 - 1)?,
        signed_power(m, n as i64 - k as i64 - 1)?,
        frac_u64(weight),
    ];
    product_to_count(&factors)
}

/// Number of labeled spanning trees of K_{m,n,p}:
///
/// `(m+n)^(p-1) (m+p)^(n-1) (n+p)^(m-1) (m+n+p)`.
pub fn tripartite_tree_count(parts: PartSizes) -> Result<BigCount> {
    let (m, n, p) = (parts.m as u64, parts.n as u64, parts.p as u64);
    if m + n + p == 0 {
        return Err(Error::InvalidInput(
            "graph needs at least one vertex".into(),
        ));
    }
    let factors = [
        signed_power(m + n, p as i64 - 1)?,
        signed_power(m + p, n as i64 - 1)?,
        signed_power(n + p, m as i64 - 1)?,
        frac_u64(m + n + p),
    ];
    product_to_count(&factors)
}

/// Number of spanning trees rooted at a vertex of the third part:
/// `p` root choices per tree.
pub fn rooted_tree_count_root_in_part(parts: PartSizes) -> Result<BigCount> {
    if parts.p == 0 {
        return Err(Error::InvalidInput(
            "third part is empty, no root available".into(),
        ));
    }
    Ok(tripartite_tree_count(parts)? * BigCount::from(parts.p))
}

/// Number of rooted spanning forests of K_{m,n,p} with exactly `r` roots,
/// all in the third part:
///
/// `C(p,r) r (m+n)^(p-r) (m+p)^(n-1) (n+p)^(m-1) (m+n+p)`.
pub fn forest_count_r_roots_in_part(parts: PartSizes, r: u32) -> Result<BigCount> {
    if r == 0 {
        return Err(Error::InvalidInput(
            "a rooted spanning forest has at least one root".into(),
        ));
    }
    if r > parts.p {
        return Err(Error::InvalidInput(format!(
            "cannot place {r} roots in a part of size {}",
            parts.p
        )));
    }
    let (m, n, p) = (parts.m as u64, parts.n as u64, parts.p as u64);
    let r = r as u64;
    let factors = [
        frac(&binomial(p, r as i64)),
        frac_u64(r),
        signed_power(m + n, (p - r) as i64)?,
        signed_power(m + p, n as i64 - 1)?,
        signed_power(n + p, m as i64 - 1)?,
        frac_u64(m + n + p),
    ];
    product_to_count(&factors)
}

/// Total number of rooted spanning forests of K_{m,n,p} over all root
/// placements:
///
/// `(m+n+1)^(p-1) (m+p+1)^(n-1) (n+p+1)^(m-1) (m+n+p+1)^2`.
pub fn total_rooted_forest_count(parts: PartSizes) -> Result<BigCount> {
    let (m, n, p) = (parts.m as u64, parts.n as u64, parts.p as u64);
    if m + n + p == 0 {
        return Err(Error::InvalidInput(
            "graph needs at least one vertex".into(),
        ));
    }
    let factors = [
        signed_power(m + n + 1, p as i64 - 1)?,
        signed_power(m + p + 1, n as i64 - 1)?,
        signed_power(n + p + 1, m as i64 - 1)?,
        signed_power(m + n + p + 1, 2)?,
    ];
    product_to_count(&factors)
}

/// Spanning-tree count evaluated as the double sum over base root
/// profiles:
///
/// `sum_{l,k} f(m,l;n,k) (m+n)^(p-1) p^(l+k-1)`.
///
/// Terms with a vanishing bipartite factor are skipped before any
/// exponent is touched, which keeps `p^(l+k-1)` away from `l = k = 0`.
pub fn tree_count_via_sum(parts: PartSizes) -> Result<BigCount> {
    let (m, n, p) = (parts.m, parts.n, parts.p);
    if p == 0 {
        return Err(Error::InvalidInput(
            "sum form needs a nonempty third part".into(),
        ));
    }
    if m + n == 0 {
        return Err(Error::InvalidInput(
            "sum form needs a nonempty bipartite base".into(),
        ));
    }
    let mut acc = BigFraction::zero();
    for l in 0..=m {
        for k in 0..=n {
            let f = bipartite_forest_count(m, l, n, k)?;
            if f.is_zero() {
                continue;
            }
            let term = [
                frac(&f),
                signed_power((m + n) as u64, p as i64 - 1)?,
                signed_power(p as u64, l as i64 + k as i64 - 1)?,
            ];
            acc += term.iter().product::<BigFraction>();
        }
    }
    crate::exact::fraction_to_count(&acc)
}

/// r-rooted forest count evaluated as the double sum over base root
/// profiles:
///
/// `C(p,r) sum_{l,k} f(m,l;n,k) (m+n)^(p-r) p^(l+k-1) r`.
pub fn forest_count_via_sum(parts: PartSizes, r: u32) -> Result<BigCount> {
    let (m, n, p) = (parts.m, parts.n, parts.p);
    if r == 0 {
        return Err(Error::InvalidInput(
            "a rooted spanning forest has at least one root".into(),
        ));
    }
    if r > p {
        return Err(Error::InvalidInput(format!(
            "cannot place {r} roots in a part of size {p}"
        )));
    }
    if m + n == 0 {
        return Err(Error::Unsupported(
            "sum form is undefined without a bipartite base".into(),
        ));
    }
    let mut acc = BigFraction::zero();
    for l in 0..=m {
        for k in 0..=n {
            let f = bipartite_forest_count(m, l, n, k)?;
            if f.is_zero() {
                continue;
            }
            let term = [
                frac(&f),
                signed_power((m + n) as u64, (p - r) as i64)?,
                signed_power(p as u64, l as i64 + k as i64 - 1)?,
                frac_u64(r as u64),
            ];
            acc += term.iter().product::<BigFraction>();
        }
    }
    let acc = acc * frac(&binomial(p as u64, r as i64));
    crate::exact::fraction_to_count(&acc)
}

/// Total rooted-forest count evaluated as the triple sum over base root
/// profiles and third-part root counts:
///
/// `sum_{l,k,r} C(p,r) f(m,l;n,k) (m+n)^(p-r) (r+1) (p+1)^(l+k-1)`.
pub fn total_via_sum(parts: PartSizes) -> Result<BigCount> {
    let (m, n, p) = (parts.m, parts.n, parts.p);
    if m + n == 0 {
        return Err(Error::Unsupported(
            "sum form is undefined without a bipartite base".into(),
        ));
    }
    let mut acc = BigFraction::zero();
    for l in 0..=m {
        for k in 0..=n {
            let f = bipartite_forest_count(m, l, n, k)?;
            if f.is_zero() {
                continue;
            }
            for r in 0..=p {
                let term = [
                    frac(&binomial(p as u64, r as i64)),
                    frac(&f),
                    signed_power((m + n) as u64, (p - r) as i64)?,
                    frac_u64(r as u64 + 1),
                    signed_power(p as u64 + 1, l as i64 + k as i64 - 1)?,
                ];
                acc += term.iter().product::<BigFraction>();
            }
        }
    }
    crate::exact::fraction_to_count(&acc)
}

/// Both sides of the binomial collapse used by the total-count sum form:
///
/// `sum_{t=0}^{s} C(s,t) (p-r)^t (r+1)^(s+1-t)  =  (r+1)(p+1)^s`.
///
/// Returns the pair (expanded sum, collapsed product); callers assert
/// equality. Requires `r <= p`.
pub fn collapse_identity_check(s: u32, p: u32, r: u32) -> (BigCount, BigCount) {
    assert!(r <= p, "r must not exceed p");
    let mut lhs = BigCount::zero();
    for t in 0..=s {
        lhs += binomial(s as u64, t as i64)
            * BigCount::from(p - r).pow(t)
            * BigCount::from(r + 1).pow(s + 1 - t);
    }
    let rhs = BigCount::from(r + 1) * BigCount::from(p + 1).pow(s);
    (lhs, rhs)
}
