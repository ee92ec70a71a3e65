//! Irreducible characters `χ^λ_ρ` of `S(n)` by the classical
//! Murnaghan–Nakayama recursion.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::Partition;

static CHI_CACHE: LazyLock<RwLock<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `χ^λ_ρ`, the value of the irreducible character `λ` on cycle type `ρ`.
///
/// Peels the largest part of `ρ` as a border strip of `λ`; memoised on
/// `(λ, ρ)`. Concurrent callers may race on an insert, which is harmless
/// since both compute the same value.
pub fn chi(lam: &Partition, rho: &Partition) -> Result<i64> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |ρ| = {}",
            lam.size(),
            rho.size()
        )));
    }
    Ok(chi_unchecked(lam, rho))
}

fn chi_unchecked(lam: &Partition, rho: &Partition) -> i64 {
    let Some(&k) = rho.parts().first() else {
        return 1;
    };
    let key = (lam.clone(), rho.clone());
    if let Some(&v) = CHI_CACHE.read().expect("chi cache poisoned").get(&key) {
        return v;
    }
    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
    let value = remove_rim_hooks(lam, k)
        .into_iter()
        .map(|(nu, height)| {
            let s = if height % 2 == 0 { 1 } else { -1 };
            s * chi_unchecked(&nu, &rest)
        })
        .sum();
    CHI_CACHE.write().expect("chi cache poisoned").insert(key, value);
    value
}

/// Every `ν` such that `λ/ν` is a border strip with `k` boxes, with its height.
///
/// Works on the beta-set `{λ_i + L − i}`: removing a `k`-strip slides one bead
/// down by `k` onto an empty position, and the height is the number of beads
/// jumped over.
pub fn remove_rim_hooks(lam: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = lam.len();
    let beta: Vec<usize> = lam.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(r, &x)| x - (len - 1 - r)).collect();
        out.push((Partition::new(parts).expect("beta-set of a partition"), height));
    }
    out
}
