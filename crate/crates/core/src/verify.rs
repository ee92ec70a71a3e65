//! Invariant suites over the whole library, shared by the command line and the
//! test targets. Each check reports pass/fail with a short detail line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::chi;
use crate::classes::{class_of_permutation, class_size, classes_of, ClassIndex};
use crate::error::{Error, Result};
use crate::gamma::{char_pairs_of, gamma_def_oracle, gamma_mn, gamma_ncycle, gamma_syt_oracle, CharPair};
use crate::greene::{
    at_regular_point, delta_pair, delta_skew, x_pair_closed, x_pair_def, x_skew_closed, x_skew_def, EvaluationPoint,
    MarkedSkewTriple,
};
use crate::partition::{dim, factorial, partitions_of, remove_box_positions, Partition};
use crate::perm::{all_permutations, Permutation};
use crate::rational::{int, zero, Rational};
use crate::skew::{skew_shapes_up_to, SkewShape};
use crate::symfunc::{
    cauchy_check, ch, ch_prime, class_pairing, frobenius_holds, frobenius_sum, gamma_values, gen_schur, gen_schur_from_characters,
    gen_schur_jt, lt_scalar_product, star_product, LtBasis, LtPoly, SymBasis, SymPoly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracles,
    Orthogonality,
    Greene,
    Frobenius,
    Cauchy,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["oracles", "orthogonality", "greene", "frobenius", "cauchy", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracles => "oracles",
            Suite::Orthogonality => "orthogonality",
            Suite::Greene => "greene",
            Suite::Frobenius => "frobenius",
            Suite::Cauchy => "cauchy",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracles" => Ok(Suite::Oracles),
            "orthogonality" => Ok(Suite::Orthogonality),
            "greene" => Ok(Suite::Greene),
            "frobenius" => Ok(Suite::Frobenius),
            "cauchy" => Ok(Suite::Cauchy),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse {
                what: "suite",
                input: s.to_string(),
                position: 0,
                message: format!("expected one of {}", Suite::NAMES.join(", ")),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub n_max: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}: {} ({})\n", c.suite, c.name, c.detail));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{} checks, {} failed (suite {}, n-max {}, seed {})\n",
            self.checks.len(),
            failed,
            self.suite,
            self.n_max,
            self.seed
        ));
        out
    }
}

/// Counts cases and keeps the first failure.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        if self.failure.is_none() {
            self.failure = Some(what);
        }
    }

    fn finish(self, suite: &'static str, name: impl Into<String>) -> Check {
        let detail = match &self.failure {
            Some(f) => format!("{} cases, first failure: {f}", self.cases),
            None => format!("{} cases", self.cases),
        };
        Check {
            suite,
            name: name.into(),
            passed: self.failure.is_none(),
            detail,
        }
    }
}

/// Largest degree at which the `S(n−1)`-sum oracle is run.
pub const DEF_ORACLE_MAX: usize = 5;

pub fn run(suite: Suite, n_max: usize, seed: u64) -> Result<Report> {
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Oracles {
        checks.extend(oracle_checks(n_max)?);
    }
    if all || suite == Suite::Orthogonality {
        checks.extend(orthogonality_checks(n_max)?);
    }
    if all || suite == Suite::Greene {
        checks.extend(greene_checks(n_max, seed, 20)?);
    }
    if all || suite == Suite::Frobenius {
        checks.extend(frobenius_checks(n_max, seed)?);
    }
    if all || suite == Suite::Cauchy {
        checks.extend(cauchy_checks(n_max));
    }
    Ok(Report {
        suite,
        n_max,
        seed,
        checks,
    })
}

fn each_cell(n: usize) -> Vec<(CharPair, ClassIndex)> {
    let classes = classes_of(n);
    char_pairs_of(n)
        .into_iter()
        .flat_map(|p| classes.iter().map(move |c| (p.clone(), c.clone())))
        .collect()
}

pub fn oracle_checks(n_max: usize) -> Result<Vec<Check>> {
    const S: &str = "oracles";
    let mut out = Vec::new();

    let mut t = Tally::new();
    for n in 1..=n_max {
        for (p, c) in each_cell(n) {
            let a = gamma_mn(&p, &c)?;
            let b = gamma_syt_oracle(&p, &c)?;
            t.record(a == b, || format!("{p} at {c}: rule {a}, tableau sum {b}"));
        }
    }
    out.push(t.finish(S, format!("MN-type rule = tableau-sum oracle, n ≤ {n_max}")));

    let def_max = n_max.min(DEF_ORACLE_MAX);
    let mut t = Tally::new();
    for n in 1..=def_max {
        for (p, c) in each_cell(n) {
            let a = gamma_mn(&p, &c)?;
            let b = gamma_def_oracle(&p, &c.representative())?;
            t.record(a == b, || format!("{p} at {c}: rule {a}, group sum {b}"));
        }
    }
    out.push(t.finish(S, format!("MN-type rule = group-sum oracle, n ≤ {def_max}")));

    let mut t = Tally::new();
    for n in 2..=def_max {
        let ks: Vec<Permutation> = all_permutations(n - 1).into_iter().map(|k| k.extend(1)).collect();
        for p in char_pairs_of(n) {
            for c in classes_of(n) {
                let x = c.representative();
                let base = gamma_def_oracle(&p, &x)?;
                for k in &ks {
                    let y = x.conjugate_by(k);
                    let v = gamma_def_oracle(&p, &y)?;
                    t.record(v == base, || format!("{p}: {x} gives {base}, conjugate {y} gives {v}"));
                }
                let inv = gamma_def_oracle(&p, &x.inverse())?;
                t.record(inv == base, || format!("{p}: value at {x} differs from its inverse"));
            }
        }
    }
    out.push(t.finish(S, format!("invariance under S(n−1)-conjugation and inversion, n ≤ {def_max}")));

    let mut t = Tally::new();
    for n in 1..=n_max {
        for p in char_pairs_of(n) {
            for rho in partitions_of(n - 1) {
                let c = ClassIndex::new(1, rho.clone())?;
                let a = gamma_mn(&p, &c)?;
                let b = int(chi(p.mu(), &rho)?);
                t.record(a == b, || format!("{p} at {c}: {a} vs χ^μ = {b}"));
            }
        }
    }
    out.push(t.finish(S, format!("j = 1 gives χ^μ_ρ, n ≤ {n_max}")));

    let mut t = Tally::new();
    for n in 1..=n_max {
        let c = ClassIndex::new(n, Partition::empty())?;
        for p in char_pairs_of(n) {
            let a = gamma_mn(&p, &c)?;
            let b = gamma_ncycle(&p);
            t.record(a == b, || format!("{p}: rule {a}, closed form {b}"));
        }
    }
    out.push(t.finish(S, format!("n-cycle closed form, n ≤ {n_max}")));

    out.push(class_bookkeeping(n_max)?);
    Ok(out)
}

pub fn class_bookkeeping(n_max: usize) -> Result<Check> {
    let mut t = Tally::new();
    for n in 1..=n_max {
        let total: u64 = classes_of(n).iter().map(class_size).sum();
        t.record(total == factorial(n), || format!("n = {n}: sizes sum to {total}"));
        for c in classes_of(n) {
            let (full, sigma) = c.marked_partition();
            let back = ClassIndex::from_marked(&full, &sigma)?;
            t.record(back == c, || format!("{c} → ({full}; {sigma}) → {back}"));
            let text = c.marked_text();
            let parsed: ClassIndex = text.parse()?;
            t.record(parsed == c, || format!("{c} printed as {text} parses to {parsed}"));
            let rep = class_of_permutation(&c.representative());
            t.record(rep == c, || format!("representative of {c} lies in {rep}"));
        }
    }
    Ok(t.finish("oracles", format!("class sizes sum to n! and marked partitions round-trip, n ≤ {n_max}")))
}

pub fn orthogonality_checks(n_max: usize) -> Result<Vec<Check>> {
    const S: &str = "orthogonality";
    let mut out = Vec::new();

    let mut t = Tally::new();
    for n in 1..=n_max {
        let classes = classes_of(n);
        let pairs = char_pairs_of(n);
        let rows: Vec<Vec<Rational>> = pairs
            .iter()
            .map(|p| classes.iter().map(|c| gamma_mn(p, c)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let nf = int(factorial(n) as i64);
        for (i, p) in pairs.iter().enumerate() {
            for (k, q) in pairs.iter().enumerate() {
                let mut s = zero();
                for (c, class) in classes.iter().enumerate() {
                    s += &rows[i][c] * &rows[k][c] * int(class.size() as i64);
                }
                s /= &nf;
                let expect = if i == k {
                    int(dim(p.mu()) as i64) / int(dim(p.lam()) as i64)
                } else {
                    zero()
                };
                t.record(s == expect, || format!("⟨{p}, {q}⟩ = {s}, expected {expect}"));
            }
        }
    }
    out.push(t.finish(S, format!("(1/n!) Σ |class| Γ Γ′ = δ dim μ/dim λ, n ≤ {n_max}")));

    let mut t = Tally::new();
    for n in 1..=n_max {
        let pairs = char_pairs_of(n);
        let schur: Vec<LtPoly> = pairs.iter().map(|p| gen_schur(p).to_powersum()).collect();
        for (i, p) in pairs.iter().enumerate() {
            for (k, q) in pairs.iter().enumerate() {
                let v = lt_scalar_product(&schur[i], &schur[k]);
                let expect = if i == k {
                    int((n as u64 * dim(p.mu())) as i64) / int(dim(p.lam()) as i64)
                } else {
                    zero()
                };
                t.record(v == expect, || format!("⟨S{p}, S{q}⟩ = {v}, expected {expect}"));
            }
        }
    }
    out.push(t.finish(S, format!("⟨S, S′⟩ = δ n dim μ/dim λ, n ≤ {n_max}")));

    let conv_max = n_max.min(DEF_ORACLE_MAX);
    let mut t = Tally::new();
    for n in 1..=conv_max {
        let group = all_permutations(n);
        let pairs = char_pairs_of(n);
        let table: Vec<BTreeMap<ClassIndex, Rational>> = pairs.iter().map(gamma_values).collect::<Result<_>>()?;
        let value = |row: &BTreeMap<ClassIndex, Rational>, x: &Permutation| row[&class_of_permutation(x)].clone();
        for (i, p) in pairs.iter().enumerate() {
            for (k, q) in pairs.iter().enumerate() {
                for c in classes_of(n) {
                    let x = c.representative();
                    let mut s = zero();
                    for y in &group {
                        s += value(&table[i], &x.compose(&y.inverse())) * value(&table[k], y);
                    }
                    let expect = if i == k {
                        int(factorial(n) as i64) / int(dim(p.lam()) as i64) * &table[i][&c]
                    } else {
                        zero()
                    };
                    t.record(s == expect, || format!("Γ{p} ⋆ Γ{q} at {c} = {s}, expected {expect}"));
                }
            }
        }
    }
    out.push(t.finish(S, format!("Σ_y Γ(xy⁻¹) Γ′(y) = δ (n!/dim λ) Γ(x), n ≤ {conv_max}")));
    Ok(out)
}

/// Every marked triple over `shape`: `μ ↗ λ` with `ν ⊆ μ`.
fn triples_over(shape: &SkewShape) -> Vec<MarkedSkewTriple> {
    remove_box_positions(shape.outer())
        .into_iter()
        .filter(|(mu, _)| mu.contains(shape.inner()))
        .map(|(mu, _)| MarkedSkewTriple::new(shape.outer().clone(), mu, shape.inner().clone()).expect("ν ⊆ μ ↗ λ"))
        .collect()
}

/// The right-hand side of the one-step recurrence for `X_{λ/ν,μ/ν}`.
fn x_pair_recurrence(t: &MarkedSkewTriple, pt: &EvaluationPoint) -> Result<Rational> {
    let labels = t.skew().standard_labelling();
    let marked = labels[&t.marked_cell()];
    let reduced_pt = pt.without(marked);
    let mut total = zero();
    for (gamma, cell) in remove_box_positions(t.middle()) {
        if !gamma.contains(t.inner()) {
            continue;
        }
        let step = pt.x(marked) - pt.x(labels[&cell]);
        if step == zero() {
            return Err(Error::Pole(format!("x_{marked} = x_{}", labels[&cell])));
        }
        let inner = MarkedSkewTriple::new(t.middle().clone(), gamma, t.inner().clone())?;
        total += x_pair_def(&inner, &reduced_pt)? / step;
    }
    Ok(total)
}

/// Outer shapes are bounded by `max_boxes + 3` boxes.
pub fn greene_checks(max_boxes: usize, seed: u64, points: usize) -> Result<Vec<Check>> {
    const S: &str = "greene";
    const RETRIES: usize = 50;
    let shapes = skew_shapes_up_to(max_boxes, max_boxes + 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut skew = Tally::new();
    let mut pair = Tally::new();
    let mut decomposition = Tally::new();
    let mut recurrence = Tally::new();
    let mut vanishing = Tally::new();
    let mut content = Tally::new();
    let mut content_poles = 0;
    let mut pair_shapes = 0;

    for shape in &shapes {
        let m = shape.size();
        let triples = triples_over(shape);
        let broken = shape.classify().is_broken_border_strip;
        if broken {
            pair_shapes += triples.len();
        }
        for _ in 0..points {
            let outcome = at_regular_point(m, &mut rng, RETRIES, |pt| {
                let def = x_skew_def(shape, pt)?;
                let closed = x_skew_closed(shape, pt)?;
                let mut parts = Vec::with_capacity(triples.len());
                for t in &triples {
                    let d = x_pair_def(t, pt)?;
                    let c = if broken { Some(x_pair_closed(t, pt)?) } else { None };
                    let r = if t.middle() != t.inner() { Some(x_pair_recurrence(t, pt)?) } else { None };
                    parts.push((d, c, r));
                }
                Ok((def, closed, parts))
            });
            let (pt, (def, closed, parts)) = match outcome {
                Ok(v) => v,
                Err(e) => {
                    skew.fail(format!("{shape}: {e}"));
                    continue;
                }
            };
            skew.record(def == closed, || format!("{shape} at {:?}: {def} vs {closed}", pt.values()));
            let mut sum = zero();
            for (t, (d, c, r)) in triples.iter().zip(&parts) {
                sum += d;
                if let Some(c) = c {
                    pair.record(d == c, || format!("{} in {shape}: {d} vs {c}", t.middle()));
                }
                if let Some(r) = r {
                    recurrence.record(d == r, || format!("{} in {shape}: {d} vs {r}", t.middle()));
                }
            }
            decomposition.record(sum == def, || format!("{shape}: Σ pairs {sum} vs {def}"));
        }

        let total: Rational = triples.iter().map(delta_pair).sum();
        let expect = delta_skew(shape);
        vanishing.record(total == expect, || format!("{shape}: Σ Δ(μ/ν; λ/ν) = {total}, Δ(λ/ν) = {expect}"));

        if m <= 6 {
            let contents = EvaluationPoint::contents(shape);
            match x_skew_def(shape, &contents) {
                Ok(v) => content.record(v == expect, || format!("{shape}: X at contents {v}, Δ {expect}")),
                Err(Error::Pole(_)) => content_poles += 1,
                Err(e) => return Err(e),
            }
            for t in &triples {
                match x_pair_def(t, &contents) {
                    Ok(v) => {
                        let e = delta_pair(t);
                        content.record(v == e, || format!("{} in {shape}: X at contents {v}, Δ {e}", t.middle()))
                    }
                    Err(Error::Pole(_)) => content_poles += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }

    let scope = format!("{} shapes with ≤ {max_boxes} boxes, {points} points each", shapes.len());
    Ok(vec![
        skew.finish(S, format!("X_skew definition = product form; {scope}")),
        pair.finish(S, format!("X_pair definition = product form; {pair_shapes} broken-strip triples")),
        decomposition.finish(S, "X_skew = Σ_μ X_pair at the same points"),
        recurrence.finish(S, "X_pair one-step recurrence at the same points"),
        vanishing.finish(S, "Σ_μ Δ(μ/ν; λ/ν) = Δ(λ/ν)"),
        content.finish(
            S,
            format!("content substitution gives Δ (≤ 6 boxes; {content_poles} substitutions hit a pole and were skipped)"),
        ),
    ])
}

fn random_class_function<R: Rng>(n: usize, rng: &mut R) -> BTreeMap<ClassIndex, Rational> {
    classes_of(n)
        .into_iter()
        .map(|c| (c, int(rng.random_range(-10..=10))))
        .collect()
}

pub fn frobenius_checks(n_max: usize, seed: u64) -> Result<Vec<Check>> {
    const S: &str = "frobenius";
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut via_chars = Tally::new();
    let mut via_det = Tally::new();
    for n in 1..=n_max {
        for p in char_pairs_of(n) {
            let s = gen_schur(&p).to_powersum();
            let c = gen_schur_from_characters(&p)?;
            via_chars.record(s == c, || format!("{p}: {s} vs {c}"));
            let d = gen_schur_jt(&p);
            via_det.record(s == d, || format!("{p}: {s} vs {d}"));
        }
    }
    out.push(via_chars.finish(S, format!("Σ_ν φ t^k s_ν = Ch′(Γ), n ≤ {n_max}")));
    out.push(via_det.finish(S, format!("determinantal formula = Σ_ν φ t^k s_ν, n ≤ {n_max}")));

    let mut t = Tally::new();
    for n in 1..=n_max {
        for _ in 0..5 {
            let f = random_class_function(n, &mut rng);
            let g = random_class_function(n, &mut rng);
            let lhs = lt_scalar_product(&ch_prime(&f, n)?, &ch_prime(&g, n)?);
            let rhs = class_pairing(&f, &g, n)?;
            t.record(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"));
        }
    }
    out.push(t.finish(S, format!("Ch′ is an isometry, n ≤ {n_max}")));

    let mut weighted = Tally::new();
    let mut pairing = Tally::new();
    for n in 1..=n_max {
        let schur: Vec<(CharPair, LtPoly)> = char_pairs_of(n).into_iter().map(|p| {
            let s = gen_schur(&p);
            (p, s)
        }).collect();
        for c in classes_of(n) {
            weighted.record(frobenius_holds(&c, true)?, || format!("class {c}"));
            let basis = LtPoly::term(LtBasis::PowerSum, c.j() - 1, c.rho().clone(), int(1));
            for (p, s) in &schur {
                let v = lt_scalar_product(s, &basis);
                let g = gamma_mn(p, &c)?;
                pairing.record(v == g, || format!("⟨S{p}, t^k p⟩ at {c}: {v} vs Γ = {g}"));
            }
        }
    }
    out.push(weighted.finish(S, format!("t^(j−1) p_ρ = Σ (dim λ/(n dim μ)) Γ S, n ≤ {n_max}")));
    out.push(pairing.finish(S, format!("⟨S, t^(j−1) p_ρ⟩ = Γ, n ≤ {n_max}")));

    if n_max >= 2 {
        let c = ClassIndex::new(2, Partition::empty())?;
        let unweighted = frobenius_sum(&c, false)?;
        let target = LtPoly::t_power(1);
        out.push(Check {
            suite: S,
            name: "unweighted expansion t^(j−1) p_ρ = Σ Γ S is rejected at n = 2".to_string(),
            passed: unweighted != target,
            detail: format!("Σ Γ S at class (2*) is {unweighted}, target t·p[]"),
        });
    }

    let hom_max = n_max.min(6);
    let mut t = Tally::new();
    for total in 1..=hom_max {
        for m in 0..total {
            let k = total - m;
            for rho in partitions_of(m) {
                let f: BTreeMap<Partition, Rational> = partitions_of(m)
                    .into_iter()
                    .map(|r| {
                        let v = if r == rho { int(1) } else { zero() };
                        (r, v)
                    })
                    .collect();
                for class in classes_of(k) {
                    let g: BTreeMap<ClassIndex, Rational> = classes_of(k)
                        .into_iter()
                        .map(|c| {
                            let v = if c == class { int(1) } else { zero() };
                            (c, v)
                        })
                        .collect();
                    let lhs = ch_prime(&star_product(&f, m, &g, k)?, total)?;
                    let rhs = LtPoly::from_sym(&ch(&f, m)?, 0).times(&ch_prime(&g, k)?);
                    t.record(lhs == rhs, || format!("ρ = ({rho}), class {class}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    out.push(t.finish(S, format!("Ch′(f ∗ g) = Ch(f) Ch′(g), m + k ≤ {hom_max}")));

    let mut t = Tally::new();
    for n in 0..=n_max.max(1) + 2 {
        for lam in partitions_of(n) {
            let p = SymPoly::basis_element(SymBasis::PowerSum, lam.clone());
            t.record(p.to_basis(SymBasis::Schur).to_basis(SymBasis::PowerSum) == p, || format!("p[{lam}]"));
            let s = SymPoly::basis_element(SymBasis::Schur, lam.clone());
            t.record(s.to_basis(SymBasis::PowerSum).to_basis(SymBasis::Schur) == s, || format!("s[{lam}]"));
        }
    }
    out.push(t.finish(S, format!("power-sum/Schur round trips, |λ| ≤ {}", n_max.max(1) + 2)));
    Ok(out)
}

pub fn cauchy_checks(max_degree: usize) -> Vec<Check> {
    cauchy_check(max_degree)
        .into_iter()
        .map(|(n, ok)| Check {
            suite: "cauchy",
            name: format!("Σ n⁻¹ (dim λ/dim μ) S ⊗ S = Σ t^(2k) z⁻¹ p ⊗ p in degree {n}"),
            passed: ok,
            detail: if ok { "exact".to_string() } else { "graded pieces differ".to_string() },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let report = run(Suite::All, 3, 1).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert!(report.checks.len() > 10);
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
