//! P-ascents, pedestals, pedestal polynomials and the volume-preserving
//! bijection between X-partitions and (pedestal, partition) pairs.

use crate::error::{Error, Result};
use crate::polyq::{series_rational, IntPoly, TruncatedSeries};
use crate::poset::{linear_extensions, minimal_semistandard, Filter, LinearExtension, Poset, XPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscentData {
    /// Elements `Q⁻¹(k)` that are P-ascents, by increasing `k`.
    pub ascent_cells: Vec<usize>,
    pub ascent_contents: Vec<usize>,
}

/// A pedestal remembers the pair it came from; equality looks at the values only.
#[derive(Clone, Debug)]
pub struct Pedestal {
    pub base: XPartition,
    pub source: (LinearExtension, LinearExtension),
}

impl PartialEq for Pedestal {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl Eq for Pedestal {}

impl Pedestal {
    pub fn volume(&self) -> u64 {
        self.base.volume()
    }
}

fn same_poset(p: &LinearExtension, q: &LinearExtension) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::MismatchedPoset);
    }
    Ok(())
}

/// `k` is a P-ascent of `Q` when `P` ranks `Q⁻¹(k+1)` below `Q⁻¹(k)`.
pub fn ascent_data(p: &LinearExtension, q: &LinearExtension) -> Result<AscentData> {
    same_poset(p, q)?;
    let order = q.order();
    let mut ascent_cells = Vec::new();
    let mut ascent_contents = Vec::new();
    for (k, pair) in order.windows(2).enumerate() {
        if p.rank(pair[1]) < p.rank(pair[0]) {
            ascent_cells.push(pair[0]);
            ascent_contents.push(k + 1);
        }
    }
    Ok(AscentData {
        ascent_cells,
        ascent_contents,
    })
}

/// Value at `Q⁻¹(k)` counts the P-ascents of `Q` below `k`.
pub fn pedestal(p: &LinearExtension, q: &LinearExtension) -> Result<Pedestal> {
    let asc = ascent_data(p, q)?.ascent_contents;
    let values = q
        .ranks()
        .iter()
        .map(|&k| asc.iter().filter(|&&a| a < k).count() as u64)
        .collect();
    Ok(Pedestal {
        base: XPartition::new(values),
        source: (p.clone(), q.clone()),
    })
}

/// `Σ_Q q^{|d_P(Q)|}` over all linear extensions `Q`.
pub fn pedestal_polynomial(x: &Poset, p: &LinearExtension) -> Result<IntPoly> {
    if !x.is_linear_extension(p) {
        return Err(Error::MismatchedPoset);
    }
    linear_extensions(x)
        .iter()
        .map(|q| pedestal(p, q).map(|d| IntPoly::monomial(d.volume() as usize)))
        .sum()
}

/// `T(α) = d_P(Q)(α) + y_{Q(α)}`.
pub fn bst_forward(p: &LinearExtension, q: &LinearExtension, y: &[u64]) -> Result<XPartition> {
    let d = pedestal(p, q)?;
    if y.len() != q.len() {
        return Err(Error::InvalidInput(format!(
            "sequence of length {} for {} elements",
            y.len(),
            q.len()
        )));
    }
    if y.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(format!("sequence {y:?} is not weakly increasing")));
    }
    let values = d
        .base
        .values()
        .iter()
        .zip(q.ranks())
        .map(|(&v, &k)| v + y[k - 1])
        .collect();
    Ok(XPartition::new(values))
}

/// Inverse of [`bst_forward`]. `Q` lists the elements by increasing
/// `(T(α), P(α))`.
pub fn bst_inverse(p: &LinearExtension, t: &XPartition) -> Result<(LinearExtension, Vec<u64>)> {
    if t.len() != p.len() {
        return Err(Error::MismatchedPoset);
    }
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by_key(|&a| (t.value(a), p.rank(a)));
    let q = LinearExtension::from_order(&order)?;
    let d = pedestal(p, &q)?;
    let mut y = Vec::with_capacity(order.len());
    for &a in &order {
        let v = t.value(a).checked_sub(d.base.value(a)).ok_or_else(|| {
            Error::InternalInvariantViolation(format!("pedestal exceeds the X-partition at element #{a}"))
        })?;
        y.push(v);
    }
    if y.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InternalInvariantViolation(format!(
            "reconstructed sequence {y:?} is not weakly increasing"
        )));
    }
    Ok((q, y))
}

/// `G_{X,F}` up to degree `n` from the pedestal polynomial of `P` shifted by
/// the minimal semistandard element.
pub fn semistandard_series_via_pedestals(
    x: &Poset,
    f: &Filter,
    p: &LinearExtension,
    n: usize,
) -> Result<TruncatedSeries> {
    let shift = minimal_semistandard(x, f).volume() as usize;
    let numer = pedestal_polynomial(x, p)?.shift_up(shift);
    let exps: Vec<usize> = (1..=x.len()).collect();
    series_rational(&numer, &exps, n)
}
