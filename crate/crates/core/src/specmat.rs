//! Pedestal matrices over Z[q], their characteristic polynomials, and
//! certified extraction of eigenvalues that are themselves polynomials in q.
//!
//! Extraction works at an integer base point `q0`: the integer roots of
//! `det(λ - M(q0))` are lifted to power series in `t = q - q0`, recentred,
//! and then certified by exact division of the characteristic polynomial.
//! A root of multiplicity `μ` at `q0` is lifted on the `(μ-1)`-th
//! λ-derivative, where it is simple. Nothing heuristic survives certification.

use std::cmp::Reverse;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pedestal::pedestal;
use crate::polyq::{encode_coeffs, IntPoly};
use crate::poset::{linear_extensions, LinearExtension, Poset};

/// Default cap on the number of linear extensions for eigenvalue work.
pub const DEFAULT_MAX_EXTENSIONS: usize = 24;

/// Base points tried for root lifting, in order. `0` and `1` are skipped:
/// `M(0)` is the identity and `M(1)` is the all-ones matrix.
const BASE_POINTS: [i64; 10] = [2, -1, -2, 3, -3, 4, -4, 5, -5, 6];

/// Integer root scans wider than this are skipped.
const MAX_ROOT_BOUND: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PedestalMatrix {
    /// `exponents[P][Q] = |d_P(Q)|`.
    exponents: Vec<Vec<usize>>,
    extensions: Vec<LinearExtension>,
    labels: Vec<String>,
}

impl PedestalMatrix {
    pub fn new(x: &Poset) -> Self {
        let extensions = linear_extensions(x);
        let exponents = extensions
            .par_iter()
            .map(|p| {
                extensions
                    .iter()
                    .map(|q| pedestal(p, q).expect("extensions of one poset").volume() as usize)
                    .collect()
            })
            .collect();
        PedestalMatrix {
            exponents,
            extensions,
            labels: x.labels().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.extensions.len()
    }

    pub fn extensions(&self) -> &[LinearExtension] {
        &self.extensions
    }

    pub fn exponents(&self) -> &[Vec<usize>] {
        &self.exponents
    }

    pub fn entry(&self, p: usize, q: usize) -> IntPoly {
        IntPoly::monomial(self.exponents[p][q])
    }

    pub fn entries(&self) -> Vec<Vec<IntPoly>> {
        self.exponents
            .iter()
            .map(|row| row.iter().map(|&e| IntPoly::monomial(e)).collect())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<IntPoly> {
        self.exponents
            .iter()
            .map(|row| row.iter().map(|&e| IntPoly::monomial(e)).sum())
            .collect()
    }

    /// `M(q0)` as an integer matrix.
    pub fn evaluate(&self, q0: &BigInt) -> Vec<Vec<BigInt>> {
        let max = self.exponents.iter().flatten().copied().max().unwrap_or(0);
        let mut powers = vec![BigInt::one()];
        for k in 1..=max {
            let next = &powers[k - 1] * q0;
            powers.push(next);
        }
        self.exponents
            .iter()
            .map(|row| row.iter().map(|&e| powers[e].clone()).collect())
            .collect()
    }
}

impl Serialize for PedestalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PedestalMatrix", 4)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("entries", &self.entries())?;
        st.serialize_field("extensions", &self.extensions)?;
        st.serialize_field("elements", &self.labels)?;
        st.end()
    }
}

/// `Σ_j c_j(q) λ^j`, stored by increasing power of λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<IntPoly>,
}

impl CharPoly {
    pub fn from_coeffs(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().is_some_and(IntPoly::is_zero) {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    /// `∏ (λ - e)`.
    pub fn from_roots(roots: &[IntPoly]) -> Self {
        let mut coeffs = vec![IntPoly::one()];
        for e in roots {
            let mut next = vec![IntPoly::zero(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] = &next[j + 1] + c;
                next[j] = &next[j] - &(c * e);
            }
            coeffs = next;
        }
        CharPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// Degree in λ.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Largest degree in q over all coefficients.
    pub fn q_degree(&self) -> usize {
        self.coeffs.iter().filter_map(IntPoly::degree).max().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, lambda: &BigInt, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * lambda + c.eval(q))
    }

    /// The integer polynomial in λ obtained at `q = q0`.
    pub fn at_q(&self, q0: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(q0)).collect()
    }

    /// Derivative with respect to λ.
    pub fn derivative(&self) -> CharPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(&BigInt::from(j)))
            .collect();
        CharPoly::from_coeffs(coeffs)
    }

    /// Exact quotient by `λ - e`, or `None` if `e` is not a root.
    pub fn divide_by_root(&self, e: &IntPoly) -> Option<CharPoly> {
        let d = self.degree();
        if self.coeffs.is_empty() || d == 0 {
            return None;
        }
        let mut quot = vec![IntPoly::zero(); d];
        let mut carry = IntPoly::zero();
        for j in (1..=d).rev() {
            carry = &self.coeffs[j] + &(&carry * e);
            quot[j - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + &(&carry * e);
        remainder.is_zero().then(|| CharPoly::from_coeffs(quot))
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CharPoly", 1)?;
        st.serialize_field("coeffs_in_lambda", &self.coeffs)?;
        st.end()
    }
}

/// Adds `p · q^shift` into a dense accumulator.
fn add_shifted(acc: &mut Vec<BigInt>, p: &IntPoly, shift: usize) {
    let need = shift + p.coeffs().len();
    if acc.len() < need {
        acc.resize(need, BigInt::zero());
    }
    for (k, c) in p.coeffs().iter().enumerate() {
        acc[shift + k] += c;
    }
}

/// `det(λI - M)` by the Faddeev–LeVerrier trace recursion. The divisions by
/// `k` are exact because all traces live in Z[q]. The result is checked
/// against fraction-free determinants at three integer points.
pub fn char_poly(m: &PedestalMatrix) -> Result<CharPoly> {
    let n = m.dim();
    let exps = &m.exponents;
    let mut c = vec![IntPoly::zero(); n + 1];
    c[n] = IntPoly::one();
    let mut mk: Vec<Vec<IntPoly>> = vec![vec![IntPoly::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next: Vec<Vec<IntPoly>> = (0..n)
            .into_par_iter()
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut acc = Vec::new();
                        for (mid, row) in mk.iter().enumerate() {
                            add_shifted(&mut acc, &row[b], exps[a][mid]);
                        }
                        IntPoly::from_coeffs(acc)
                    })
                    .collect()
            })
            .collect();
        for (a, row) in next.iter_mut().enumerate() {
            row[a] = &row[a] + &c[n - k + 1];
        }
        // c_{n-k} = -tr(A M_k) / k
        let mut trace = Vec::new();
        for (a, erow) in exps.iter().enumerate() {
            for (b, &e) in erow.iter().enumerate() {
                add_shifted(&mut trace, &next[b][a], e);
            }
        }
        let trace = IntPoly::from_coeffs(trace);
        c[n - k] = -trace
            .div_scalar_exact(&BigInt::from(k))
            .map_err(|_| Error::InternalInvariantViolation(format!("trace at step {k} is not divisible by {k}")))?;
        mk = next;
    }
    let chi = CharPoly::from_coeffs(c);
    for (l0, q0) in [(3i64, 2i64), (-2, 3), (5, -1)] {
        let (l0, q0) = (BigInt::from(l0), BigInt::from(q0));
        let mut shifted = m.evaluate(&q0);
        for (a, row) in shifted.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v = -&*v;
                if a == b {
                    *v += &l0;
                }
            }
        }
        if bareiss_det(shifted) != chi.eval(&l0, &q0) {
            return Err(Error::InternalInvariantViolation(format!(
                "characteristic polynomial disagrees with the determinant at λ={l0}, q={q0}"
            )));
        }
    }
    Ok(chi)
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenResult {
    /// With multiplicity; the eigenvalue of largest value at `q = 1` first.
    pub eigenvalues: Vec<IntPoly>,
    pub certified: bool,
    /// Base point the roots were lifted from.
    pub base_point: i64,
    pub char_poly: CharPoly,
}

/// Root of `g(λ, q0 + t)` near `r0`, as a polynomial in `t` up to `t^order`.
fn lift_root(shifted: &[IntPoly], r0: &BigInt, order: usize) -> Option<Vec<BigInt>> {
    let zero = BigInt::zero();
    let slope = shifted
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(BigInt::zero(), |acc, (j, c)| acc * r0 + c.coeff(0) * BigInt::from(j));
    if slope.is_zero() {
        return None;
    }
    let mut series = vec![r0.clone()];
    for deg in 1..=order {
        // Horner in λ over series truncated at t^deg; only the t^deg term is needed
        // but lower terms feed the products.
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); deg + 1];
        for c in shifted.iter().rev() {
            let mut next = vec![BigInt::zero(); deg + 1];
            for (i, a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, s) in series.iter().enumerate().take(deg + 1 - i) {
                    next[i + j] += a * s;
                }
            }
            for (k, slot) in next.iter_mut().enumerate() {
                *slot += c.coeffs().get(k).unwrap_or(&zero);
            }
            acc = next;
        }
        if acc[..deg].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let (quo, rem) = (-&acc[deg]).div_rem(&slope);
        if !rem.is_zero() {
            return None;
        }
        series.push(quo);
    }
    Some(series)
}

/// Integer roots of an integer polynomial with multiplicities, searched in `[-bound, bound]`.
fn integer_roots(poly: &[BigInt], bound: u64) -> Vec<(BigInt, usize)> {
    let mut f: Vec<BigInt> = poly.to_vec();
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    let mut out = Vec::new();
    // Cheap modular screen before exact evaluation.
    const PRIME: u64 = (1 << 61) - 1;
    let reduce = |c: &BigInt| c.mod_floor(&BigInt::from(PRIME)).to_u64().unwrap_or(0);
    let fmod: Vec<u64> = f.iter().map(reduce).collect();
    let eval_mod = |r: i64| -> u64 {
        let x = r.rem_euclid(PRIME as i64) as u128;
        fmod.iter()
            .rev()
            .fold(0u128, |acc, &c| (acc * x + c as u128) % PRIME as u128) as u64
    };
    let bound = bound as i64;
    for r in -bound..=bound {
        if f.len() <= 1 {
            break;
        }
        if eval_mod(r) != 0 {
            continue;
        }
        let root = BigInt::from(r);
        let mut mult = 0;
        loop {
            // synthetic division by (λ - r)
            let d = f.len() - 1;
            let mut quot = vec![BigInt::zero(); d];
            let mut carry = BigInt::zero();
            for j in (1..=d).rev() {
                carry = &f[j] + &carry * &root;
                quot[j - 1] = carry.clone();
            }
            if !(&f[0] + &carry * &root).is_zero() {
                break;
            }
            f = quot;
            mult += 1;
            if f.len() <= 1 {
                break;
            }
        }
        if mult > 0 {
            out.push((root, mult));
        }
    }
    out
}

/// Upper bound on the q-degree of any root in Z[q] of a monic `chi`: the
/// root growth at infinity is governed by `max_j deg c_{n-j} / j`.
fn root_degree_bound(chi: &CharPoly) -> usize {
    let n = chi.degree();
    (1..=n)
        .filter_map(|j| chi.coeffs()[n - j].degree().map(|d| d.div_ceil(j)))
        .max()
        .unwrap_or(0)
}

fn try_base_point(m: &PedestalMatrix, chi: &CharPoly, q0: i64, degree_bound: usize) -> Option<Vec<IntPoly>> {
    let q0b = BigInt::from(q0);
    let n = chi.degree();
    // Spectral radius is at most the largest absolute row sum.
    let bound = m
        .evaluate(&q0b)
        .iter()
        .map(|row| row.iter().map(|v| v.abs()).sum::<BigInt>())
        .max()
        .unwrap_or_else(BigInt::one);
    let bound = bound.to_u64().filter(|&b| b <= MAX_ROOT_BOUND)?;
    let roots = integer_roots(&chi.at_q(&q0b), bound);
    if roots.iter().map(|r| r.1).sum::<usize>() != n {
        return None;
    }
    let mut derivatives = vec![chi.clone()];
    let mut found = Vec::with_capacity(n);
    for (r0, mult) in roots {
        while derivatives.len() < mult {
            let next = derivatives.last().unwrap().derivative();
            derivatives.push(next);
        }
        let g = &derivatives[mult - 1];
        let shifted: Vec<IntPoly> = g.coeffs().iter().map(|c| c.taylor_shift(&q0b)).collect();
        let series = lift_root(&shifted, &r0, degree_bound)?;
        let e = IntPoly::from_coeffs(series).taylor_shift(&-&q0b);
        found.extend(std::iter::repeat_n(e, mult));
    }
    // Certification by exact trial division.
    let mut rest = chi.clone();
    for e in &found {
        rest = rest.divide_by_root(e)?;
    }
    rest.is_one().then_some(found)
}

/// Eigenvalues of `M` in Z[q], certified by exact trial division of the
/// characteristic polynomial.
pub fn eigen_polynomials(m: &PedestalMatrix) -> Result<EigenResult> {
    let chi = char_poly(m)?;
    let degree_bound = root_degree_bound(&chi);
    for q0 in BASE_POINTS {
        if let Some(mut eigenvalues) = try_base_point(m, &chi, q0, degree_bound) {
            let dim = BigInt::from(m.dim());
            eigenvalues.sort_by_key(|e| (Reverse(e.eval(&BigInt::one()) == dim), Reverse(e.clone())));
            return Ok(EigenResult {
                eigenvalues,
                certified: true,
                base_point: q0,
                char_poly: chi,
            });
        }
    }
    Err(Error::EigenExtractionFailed(format!(
        "no base point in {BASE_POINTS:?} produced a certified root set for a {}x{} matrix",
        m.dim(),
        m.dim()
    )))
}

/// Structural properties every certified spectrum must have; returns the violations.
pub fn structural_checks(m: &PedestalMatrix, eig: &EigenResult) -> Vec<String> {
    let mut problems = Vec::new();
    let dim = m.dim();
    let zero = BigInt::zero();
    let one = BigInt::one();
    if eig.eigenvalues.len() != dim {
        problems.push(format!("{} eigenvalues for dimension {dim}", eig.eigenvalues.len()));
    }
    for e in &eig.eigenvalues {
        if e.eval(&zero) != one {
            problems.push(format!("eigenvalue {e} is not 1 at q=0"));
        }
    }
    let total: IntPoly = eig.eigenvalues.iter().cloned().sum();
    if total != IntPoly::constant(dim as i64) {
        problems.push(format!("eigenvalues sum to {total}, not {dim}"));
    }
    let dim_b = BigInt::from(dim);
    let top: Vec<&IntPoly> = eig.eigenvalues.iter().filter(|e| e.eval(&one) == dim_b).collect();
    if top.len() != 1 {
        problems.push(format!("{} eigenvalues equal {dim} at q=1", top.len()));
    }
    if dim > 1 {
        for e in &eig.eigenvalues {
            let at_one = e.eval(&one);
            if at_one != dim_b && !at_one.is_zero() {
                problems.push(format!("eigenvalue {e} is {at_one} at q=1"));
            }
        }
    }
    let sums = m.row_sums();
    if sums.windows(2).any(|w| w[0] != w[1]) {
        problems.push("row sums differ".to_string());
    }
    if let (Some(row), Some(&top)) = (sums.first(), top.first()) {
        if row != top {
            problems.push(format!("top eigenvalue {top} differs from the row sum {row}"));
        }
    }
    if CharPoly::from_roots(&eig.eigenvalues) != eig.char_poly {
        problems.push("product of (λ - e) differs from the characteristic polynomial".to_string());
    }
    problems
}

/// Outcome of checking one poset.
#[derive(Clone, Debug)]
pub struct EigenCheck {
    pub dim: usize,
    pub result: Option<EigenResult>,
    pub problems: Vec<String>,
}

impl EigenCheck {
    pub fn passed(&self) -> bool {
        self.result.as_ref().is_some_and(|r| r.certified) && self.problems.is_empty()
    }
}

/// Builds the pedestal matrix of `x`, extracts its spectrum and runs the
/// structural checks. Posets with more than `max_extensions` linear
/// extensions are rejected.
pub fn verify_integer_eigenvalues(x: &Poset, max_extensions: usize) -> Result<EigenCheck> {
    let count = linear_extensions(x).len();
    if count > max_extensions {
        return Err(Error::InvalidInput(format!(
            "{count} linear extensions exceed the cap of {max_extensions}"
        )));
    }
    let m = PedestalMatrix::new(x);
    match eigen_polynomials(&m) {
        Ok(eig) => {
            let problems = structural_checks(&m, &eig);
            Ok(EigenCheck {
                dim: m.dim(),
                result: Some(eig),
                problems,
            })
        }
        Err(Error::EigenExtractionFailed(why)) => Ok(EigenCheck {
            dim: m.dim(),
            result: None,
            problems: vec![why],
        }),
        Err(e) => Err(e),
    }
}

/// Product of cyclotomic factors times a cofactor, e.g. `(1 - q)^2*(1 + q + q^2)`.
/// The first cyclotomic factor is written as `1 - q`.
pub fn factored_display(e: &IntPoly) -> String {
    let Some(deg) = e.degree() else {
        return "0".to_string();
    };
    if deg == 0 {
        return e.to_string();
    }
    let mut rest = e.clone();
    let mut factors = Vec::new();
    let mut n = 1;
    while rest.degree().unwrap_or(0) > 0 && n <= 4 * deg + 2 {
        let phi = if n == 1 {
            IntPoly::one() - IntPoly::monomial(1)
        } else {
            IntPoly::cyclotomic(n)
        };
        let mut power = 0;
        while let Ok(q) = rest.exact_div(&phi) {
            rest = q;
            power += 1;
        }
        if power > 0 {
            factors.push(if power == 1 {
                format!("({phi})")
            } else {
                format!("({phi})^{power}")
            });
        }
        n += 1;
    }
    if factors.is_empty() {
        return e.to_string();
    }
    let body = factors.join("*");
    if rest.is_one() {
        body
    } else if rest == IntPoly::constant(-1) {
        format!("-{body}")
    } else {
        format!("({rest})*{body}")
    }
}

/// A permutation `σ` with `m[σ(a)][σ(b)] == reference[a][b]` for all `a, b`.
pub fn find_simultaneous_permutation(m: &PedestalMatrix, reference: &[Vec<IntPoly>]) -> Option<Vec<usize>> {
    let n = m.dim();
    if reference.len() != n || reference.iter().any(|r| r.len() != n) {
        return None;
    }
    let entries = m.entries();
    let mut sigma = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn go(entries: &[Vec<IntPoly>], reference: &[Vec<IntPoly>], sigma: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let a = sigma.len();
        if a == entries.len() {
            return true;
        }
        for cand in 0..entries.len() {
            if used[cand] {
                continue;
            }
            let fits = entries[cand][cand] == reference[a][a]
                && sigma
                    .iter()
                    .enumerate()
                    .all(|(b, &sb)| entries[cand][sb] == reference[a][b] && entries[sb][cand] == reference[b][a]);
            if !fits {
                continue;
            }
            sigma.push(cand);
            used[cand] = true;
            if go(entries, reference, sigma, used) {
                return true;
            }
            used[cand] = false;
            sigma.pop();
        }
        false
    }

    go(&entries, reference, &mut sigma, &mut used).then_some(sigma)
}

/// Coefficient JSON for a bare vector of integers.
pub fn integer_coeffs_json(coeffs: &[BigInt]) -> serde_json::Value {
    serde_json::to_value(encode_coeffs(coeffs)).expect("integers serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::SkewShape;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn shape_poset(t: &str) -> Poset {
        Poset::from_skew_shape(&t.parse::<SkewShape>().unwrap())
    }

    /// Oracle: Leibniz expansion of det(λI - M) over Z[q][λ].
    fn leibniz_char_poly(m: &PedestalMatrix) -> CharPoly {
        let n = m.dim();
        let mut total = vec![IntPoly::zero(); n + 1];
        let perms = crate::rsk::Permutation::all(n);
        for perm in perms {
            let w = perm.word();
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i] > w[j])
                .count();
            // product of (λδ - M) entries as polynomial in λ
            let mut prod = vec![IntPoly::one()];
            for (a, &b1) in w.iter().enumerate() {
                let b = b1 - 1;
                let entry = -m.entry(a, b);
                let mut next = vec![IntPoly::zero(); prod.len() + 1];
                for (j, c) in prod.iter().enumerate() {
                    next[j] = &next[j] + &(c * &entry);
                    if a == b {
                        next[j + 1] = &next[j + 1] + c;
                    }
                }
                prod = next;
            }
            for (j, c) in prod.into_iter().enumerate() {
                total[j] = if inversions % 2 == 0 {
                    &total[j] + &c
                } else {
                    &total[j] - &c
                };
            }
        }
        CharPoly::from_coeffs(total)
    }

    #[test]
    fn matrix_examples() {
        let m = PedestalMatrix::new(&Poset::chain(3));
        assert_eq!(m.entries(), vec![vec![IntPoly::one()]]);
        let m = PedestalMatrix::new(&Poset::antichain(2));
        assert_eq!(m.exponents(), &[vec![0, 1], vec![1, 0]]);
        let m = PedestalMatrix::new(&shape_poset("3,2"));
        assert_eq!(m.dim(), 5);
        for row in m.exponents() {
            let mut r = row.clone();
            r.sort_unstable();
            assert_eq!(r, vec![0, 1, 2, 3, 4]);
        }
        assert!((0..5).all(|a| m.exponents()[a][a] == 0));
    }

    #[test]
    fn char_poly_examples() {
        let chi = char_poly(&PedestalMatrix::new(&Poset::chain(1))).unwrap();
        assert_eq!(chi.coeffs(), &[p(&[-1]), p(&[1])]);
        let chi = char_poly(&PedestalMatrix::new(&Poset::antichain(2))).unwrap();
        assert_eq!(chi.coeffs(), &[p(&[1, 0, -1]), p(&[-2]), p(&[1])]);
    }

    #[test]
    fn char_poly_matches_leibniz() {
        let mut posets: Vec<Poset> = ["3,2", "2,1", "2,2", "3,1", "2,1,1", "3,2/1", "2,2,1/1"]
            .iter()
            .map(|t| shape_poset(t))
            .collect();
        posets.push(Poset::antichain(3));
        for x in posets {
            let m = PedestalMatrix::new(&x);
            assert_eq!(char_poly(&m).unwrap(), leibniz_char_poly(&m));
        }
    }

    #[test]
    fn bareiss_small() {
        let a = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect()
        };
        assert_eq!(bareiss_det(a(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(bareiss_det(a(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_det(a(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(bareiss_det(a(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]])), BigInt::from(-4));
        assert_eq!(bareiss_det(Vec::new()), BigInt::one());
    }

    #[test]
    fn eigen_examples() {
        let eig = eigen_polynomials(&PedestalMatrix::new(&Poset::antichain(2))).unwrap();
        assert_eq!(eig.eigenvalues, vec![p(&[1, 1]), p(&[1, -1])]);
        let eig = eigen_polynomials(&PedestalMatrix::new(&Poset::chain(2))).unwrap();
        assert_eq!(eig.eigenvalues, vec![IntPoly::one()]);
        assert!(eig.certified);
    }

    #[test]
    fn eigenvalues_of_the_3_2_shape() {
        let m = PedestalMatrix::new(&shape_poset("3,2"));
        let eig = eigen_polynomials(&m).unwrap();
        let one_minus = p(&[1, -1]);
        let one_plus = p(&[1, 1]);
        let tri = p(&[1, 1, 1]);
        let hex = p(&[1, -1, 1]);
        let mut expected = vec![
            p(&[1, 1, 1, 1, 1]),
            &one_minus * &one_plus,
            &(&one_minus * &one_minus) * &tri,
            &(&one_minus * &one_plus) * &tri,
            &(&one_minus * &one_plus) * &hex,
        ];
        let mut got = eig.eigenvalues.clone();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
        assert!(structural_checks(&m, &eig).is_empty());
    }

    #[test]
    fn divide_by_root_rejects_non_roots() {
        let chi = CharPoly::from_roots(&[p(&[1, 1]), p(&[1, -1])]);
        assert!(chi.divide_by_root(&p(&[2])).is_none());
        let rest = chi.divide_by_root(&p(&[1, 1])).unwrap();
        assert_eq!(rest, CharPoly::from_roots(&[p(&[1, -1])]));
    }

    #[test]
    fn repeated_eigenvalues_are_lifted() {
        // The 3-antichain has 6 extensions and a symmetric spectrum with repeats.
        let check = verify_integer_eigenvalues(&Poset::antichain(3), 24).unwrap();
        assert!(check.passed(), "{:?}", check.problems);
        let eig = check.result.unwrap();
        let mut distinct = eig.eigenvalues.clone();
        distinct.dedup();
        assert!(distinct.len() < eig.eigenvalues.len());
    }

    #[test]
    fn extension_cap() {
        assert!(verify_integer_eigenvalues(&Poset::antichain(4), 23).is_err());
    }

    #[test]
    fn factored_forms() {
        assert_eq!(factored_display(&p(&[1, 0, -1])), "(1 - q)*(1 + q)");
        let e = &(&p(&[1, -1]) * &p(&[1, -1])) * &p(&[1, 1, 1]);
        assert_eq!(factored_display(&e), "(1 - q)^2*(1 + q + q^2)");
        assert_eq!(factored_display(&p(&[1, 1, 1, 1, 1])), "(1 + q + q^2 + q^3 + q^4)");
        assert_eq!(factored_display(&IntPoly::one()), "1");
        assert_eq!(factored_display(&p(&[-1, 1])), "-(1 - q)");
        assert_eq!(factored_display(&p(&[2, 2])), "(2)*(1 + q)");
    }

    #[test]
    fn permutation_search() {
        let m = PedestalMatrix::new(&Poset::antichain(2));
        let swapped = vec![vec![IntPoly::one(), p(&[0, 1])], vec![p(&[0, 1]), IntPoly::one()]];
        assert_eq!(find_simultaneous_permutation(&m, &swapped), Some(vec![0, 1]));
        let wrong = vec![vec![IntPoly::one(), p(&[0, 0, 1])], vec![p(&[0, 1]), IntPoly::one()]];
        assert_eq!(find_simultaneous_permutation(&m, &wrong), None);
    }
}
