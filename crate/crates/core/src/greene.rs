//! Greene-type rational functions attached to skew shapes, evaluated at exact
//! points, and the combinatorial coefficients `Δ` and `φ`.
//!
//! Identities between rational functions are certified by evaluating both
//! sides at seeded random integer points; no symbolic multivariate arithmetic
//! is done. The content-substituted values `Δ(λ/ν)` and `Δ(μ/ν; λ/ν)` are
//! computed from their closed forms, which are total.

use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::rational::{int, one, sign, zero, Rational};
use crate::skew::SkewShape;
use crate::tableau::{for_each_syt_labels, for_each_syt_path};

/// Values `x_1..x_m` assigned to the standard labels of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationPoint(Vec<Rational>);

impl EvaluationPoint {
    pub fn new(values: Vec<Rational>) -> Self {
        EvaluationPoint(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        EvaluationPoint(values.iter().map(|&v| int(v)).collect())
    }

    /// The content of each box, in standard-label order.
    pub fn contents(shape: &SkewShape) -> Self {
        EvaluationPoint(shape.cells().iter().map(|c| int(c.content())).collect())
    }

    /// Integers drawn uniformly from `[-1000, 1000]`.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        EvaluationPoint((0..len).map(|_| int(rng.random_range(-1000..=1000))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_label`, 1-based.
    pub fn x(&self, label: usize) -> &Rational {
        &self.0[label - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// Drops `x_label`, renumbering the later values down by one.
    pub fn without(&self, label: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(label - 1);
        EvaluationPoint(v)
    }

    fn check(&self, expected: usize) -> Result<()> {
        if self.0.len() == expected {
            Ok(())
        } else {
            Err(Error::PointLength {
                expected,
                got: self.0.len(),
            })
        }
    }

    /// `x_j − x_i`.
    fn diff(&self, j: usize, i: usize) -> Rational {
        self.x(j) - self.x(i)
    }
}

/// `ν ⊆ μ ↗ λ`: the skew shape `λ/ν` with its box `λ/μ` distinguished.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedSkewTriple {
    outer: Partition,
    middle: Partition,
    inner: Partition,
}

impl MarkedSkewTriple {
    pub fn new(outer: Partition, middle: Partition, inner: Partition) -> Result<Self> {
        if outer.added_cell(&middle).is_none() {
            return Err(Error::NotAddable {
                lam: outer.to_string(),
                mu: middle.to_string(),
            });
        }
        if !middle.contains(&inner) {
            return Err(Error::NotContained {
                outer: middle.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(MarkedSkewTriple { outer, middle, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn middle(&self) -> &Partition {
        &self.middle
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// `λ/ν`.
    pub fn skew(&self) -> SkewShape {
        SkewShape::new(self.outer.clone(), self.inner.clone()).expect("ν ⊆ μ ⊆ λ")
    }

    /// `μ/ν`.
    pub fn reduced(&self) -> SkewShape {
        SkewShape::new(self.middle.clone(), self.inner.clone()).expect("ν ⊆ μ")
    }

    /// The box `λ/μ`.
    pub fn marked_cell(&self) -> Cell {
        self.outer.added_cell(&self.middle).expect("checked on construction")
    }

    /// Standard label of `λ/μ` inside `λ/ν`.
    pub fn marked_label(&self) -> usize {
        self.skew().standard_labelling()[&self.marked_cell()]
    }
}

fn pole(what: String) -> Error {
    Error::Pole(what)
}

/// `X_{λ/ν}` from its definition: the sum over standard tableaux `T` of
/// `Π_{k<m} 1/(x_{T⁻¹(k+1)} − x_{T⁻¹(k)})`. The empty shape gives 1.
pub fn x_skew_def(shape: &SkewShape, pt: &EvaluationPoint) -> Result<Rational> {
    pt.check(shape.size())?;
    let mut total = zero();
    let mut failure = None;
    for_each_syt_labels(shape, |order| {
        if failure.is_some() {
            return;
        }
        match chain_denominator(pt, order) {
            Ok(d) => total += d.recip(),
            Err(k) => {
                failure = Some(pole(format!(
                    "tableau with label order {order:?} has x_{} = x_{} at entries {}, {}",
                    order[k + 1],
                    order[k],
                    k + 1,
                    k + 2
                )))
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// `Π_k (x_{order[k+1]} − x_{order[k]})`, or the first index with a zero factor.
fn chain_denominator(pt: &EvaluationPoint, order: &[usize]) -> std::result::Result<Rational, usize> {
    let mut d = one();
    for (k, w) in order.windows(2).enumerate() {
        let f = pt.diff(w[1], w[0]);
        if f == zero() {
            return Err(k);
        }
        d *= f;
    }
    Ok(d)
}

/// `X_{λ/ν}` in product form: `Π_D (x_j − x_i) / (Π_R (x_j − x_i) Π_C (x_j − x_i))`
/// over diagonal-, row- and column-adjacent label pairs for a connected shape,
/// and 0 for a disconnected one.
pub fn x_skew_closed(shape: &SkewShape, pt: &EvaluationPoint) -> Result<Rational> {
    pt.check(shape.size())?;
    if shape.is_empty() {
        return Ok(one());
    }
    if shape.components().len() > 1 {
        return Ok(zero());
    }
    let pairs = shape.adjacent_label_pairs();
    let numer = pairs
        .diagonal
        .iter()
        .fold(one(), |acc, &(i, j)| acc * pt.diff(j, i));
    let denom = row_column_product(shape, pt, &pairs.row, &pairs.column)?;
    Ok(numer / denom)
}

fn row_column_product(
    shape: &SkewShape,
    pt: &EvaluationPoint,
    row: &[(usize, usize)],
    column: &[(usize, usize)],
) -> Result<Rational> {
    let mut denom = one();
    for &(i, j) in row.iter().chain(column) {
        let f = pt.diff(j, i);
        if f == zero() {
            return Err(pole(format!("x_{j} = x_{i} for adjacent boxes of {shape}")));
        }
        denom *= f;
    }
    Ok(denom)
}

/// `X_{λ/ν, μ/ν}` from its definition: the sum over standard tableaux of
/// `μ/ν`, read through the labels of `λ/ν`, of the chain product closed by the
/// factor `1/(x_{l(λ/μ)} − x_{T⁻¹(m−1)})`. A single-box `λ/ν` gives 1.
pub fn x_pair_def(t: &MarkedSkewTriple, pt: &EvaluationPoint) -> Result<Rational> {
    let skew = t.skew();
    pt.check(skew.size())?;
    let reduced = t.reduced();
    if reduced.is_empty() {
        return Ok(one());
    }
    let labels = skew.standard_labelling();
    let marked = labels[&t.marked_cell()];
    let mut order = Vec::with_capacity(skew.size());
    let mut total = zero();
    let mut failure = None;
    for_each_syt_path(&reduced, |path| {
        if failure.is_some() {
            return;
        }
        order.clear();
        order.extend(path.iter().map(|c| labels[c]));
        order.push(marked);
        match chain_denominator(pt, &order) {
            Ok(d) => total += d.recip(),
            Err(k) => {
                failure = Some(pole(format!(
                    "label chain {order:?} has x_{} = x_{} at step {}",
                    order[k + 1],
                    order[k],
                    k + 1
                )))
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// `X_{λ/ν, μ/ν}` in product form, valid when `λ/ν` is a broken border strip:
///
/// `Π_s (x_d − x_s) / Π_{d' ≠ d} (x_d − x_{d'}) · 1/(Π_R Π_C)`
///
/// where `d` is the label of `λ/μ`, `s` runs over sharp corners and `d'` over
/// the other dull boxes.
pub fn x_pair_closed(t: &MarkedSkewTriple, pt: &EvaluationPoint) -> Result<Rational> {
    let skew = t.skew();
    pt.check(skew.size())?;
    let labels = skew.standard_labelling();
    let sharp = skew.sharp_corners()?;
    let dull = skew.dull_boxes()?;
    let d = labels[&t.marked_cell()];
    let numer = sharp
        .iter()
        .fold(one(), |acc, s| acc * pt.diff(d, labels[s]));
    let mut denom = one();
    for other in dull.iter().map(|c| labels[c]).filter(|&l| l != d) {
        let f = pt.diff(d, other);
        if f == zero() {
            return Err(pole(format!("x_{d} = x_{other} for dull boxes of {skew}")));
        }
        denom *= f;
    }
    let pairs = skew.adjacent_label_pairs();
    denom *= row_column_product(&skew, pt, &pairs.row, &pairs.column)?;
    Ok(numer / denom)
}

/// `Δ(λ/ν)`: `(−1)^height` for a border strip, 1 for the empty shape, else 0.
pub fn delta_skew(shape: &SkewShape) -> Rational {
    if shape.is_empty() {
        return one();
    }
    let c = shape.classify();
    match (c.is_border_strip, c.height) {
        (true, Some(h)) => sign(h),
        _ => zero(),
    }
}

/// `Δ(μ/ν; λ/ν)`: zero unless `λ/ν` is a broken border strip, otherwise
///
/// `(−1)^{⟨λ/ν⟩} Π_{s ∈ SC} [c(λ/μ) − c(s)] Π_{d ∈ DB, d ≠ λ/μ} [c(λ/μ) − c(d)]⁻¹`
///
/// with `c` the content. Dull boxes are corners of `λ`, so their contents are
/// distinct and the product never divides by zero.
pub fn delta_pair(t: &MarkedSkewTriple) -> Rational {
    let skew = t.skew();
    let c = skew.classify();
    let Some(height) = c.height else {
        return zero();
    };
    let marked = t.marked_cell();
    let cm = marked.content();
    let sharp = skew.sharp_corners().expect("broken border strip");
    let dull = skew.dull_boxes().expect("broken border strip");
    let mut value = sign(height);
    for s in sharp {
        value *= int(cm - s.content());
    }
    for d in dull.into_iter().filter(|&d| d != marked) {
        value /= int(cm - d.content());
    }
    value
}

/// The coefficient `φ_{μ/ν, λ/ν}` of the Murnaghan–Nakayama type rule; it
/// coincides with [`delta_pair`].
pub fn phi(t: &MarkedSkewTriple) -> Rational {
    delta_pair(t)
}

/// Draws random points of length `len` until `eval` succeeds without hitting a
/// pole, giving up after `max_attempts`.
pub fn at_regular_point<R, T, F>(len: usize, rng: &mut R, max_attempts: usize, mut eval: F) -> Result<(EvaluationPoint, T)>
where
    R: Rng + ?Sized,
    F: FnMut(&EvaluationPoint) -> Result<T>,
{
    for _ in 0..max_attempts {
        let pt = EvaluationPoint::random(len, rng);
        match eval(&pt) {
            Ok(v) => return Ok((pt, v)),
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted(max_attempts))
}

/// Every marked triple `ν ⊆ μ ↗ λ` over the given outer shapes and inner
/// partitions, with `|λ/ν| ≤ max_boxes`.
pub fn triples_within(lams: &[Partition], max_boxes: usize) -> Vec<MarkedSkewTriple> {
    let mut out = Vec::new();
    for lam in lams {
        for (mu, _) in crate::partition::remove_box_positions(lam) {
            for nu in crate::partition::subpartitions(&mu) {
                if lam.size() - nu.size() <= max_boxes {
                    out.push(MarkedSkewTriple::new(lam.clone(), mu.clone(), nu).expect("valid triple"));
                }
            }
        }
    }
    out
}
