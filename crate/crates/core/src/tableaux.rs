//! Standard and semistandard tableaux on skew shapes, descents, the major
//! index, plinths, and the volume-respecting bijection between semistandard
//! tableaux and (plinth, partition) pairs.
//!
//! Entries are stored in the reading order of [`SkewShape::cells`].
//! Semistandard entries start at 0.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyq::IntPoly;
use crate::poset::{linear_extensions, LinearExtension, Poset};
use crate::shapes::{Cell, SkewShape};

/// Rows of a skew filling, with cells of the inner shape as `None`.
fn padded_rows<T: Copy>(shape: &SkewShape, entries: &[T]) -> Vec<Vec<Option<T>>> {
    let mut rows: Vec<Vec<Option<T>>> = (1..=shape.num_rows())
        .map(|j| vec![None; shape.inner().row(j)])
        .collect();
    for (c, &e) in shape.cells().iter().zip(entries) {
        rows[c.j - 1].push(Some(e));
    }
    rows
}

fn row_lengths_match<T>(shape: &SkewShape, rows: &[Vec<T>]) -> bool {
    rows.len() == shape.num_rows()
        && rows
            .iter()
            .enumerate()
            .all(|(k, r)| r.len() == shape.outer().row(k + 1) - shape.inner().row(k + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: SkewShape,
    entries: Vec<usize>,
}

impl StandardTableau {
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        let cells = shape.cells();
        let n = cells.len();
        if entries.len() != n {
            return Err(Error::InvalidTableau(format!(
                "{} entries for {} cells",
                entries.len(),
                n
            )));
        }
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidTableau(format!("entries {entries:?} are not 1..={n}")));
            }
        }
        let t = StandardTableau { shape, entries };
        for (k, &c) in cells.iter().enumerate() {
            for nb in [Cell::new(c.i + 1, c.j), Cell::new(c.i, c.j + 1)] {
                if let Some(e) = t.entry(nb) {
                    if e <= t.entries[k] {
                        return Err(Error::InvalidTableau(format!("entries decrease after cell {c}")));
                    }
                }
            }
        }
        Ok(t)
    }

    /// `rows[j - 1]` lists the entries of row `j`, left to right, skipping inner cells.
    pub fn from_rows(shape: SkewShape, rows: &[Vec<usize>]) -> Result<Self> {
        if !row_lengths_match(&shape, rows) {
            return Err(Error::InvalidTableau(format!("rows {rows:?} do not fit shape {shape}")));
        }
        let entries = rows.iter().flatten().copied().collect();
        StandardTableau::new(shape, entries)
    }

    pub fn from_linear_extension(shape: &SkewShape, ext: &LinearExtension) -> Result<Self> {
        StandardTableau::new(shape.clone(), ext.ranks().to_vec())
    }

    pub fn to_linear_extension(&self) -> LinearExtension {
        LinearExtension::from_ranks(self.entries.clone()).expect("entries are a bijection")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, c: Cell) -> Option<usize> {
        if !self.shape.contains(c) {
            return None;
        }
        self.shape.cells().iter().position(|&d| d == c).map(|k| self.entries[k])
    }

    /// `cells_by_content()[k - 1]` is the cell `Q(k)`.
    pub fn cells_by_content(&self) -> Vec<Cell> {
        let cells = self.shape.cells();
        let mut out = vec![Cell::new(0, 0); cells.len()];
        for (c, &e) in cells.iter().zip(&self.entries) {
            out[e - 1] = *c;
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        padded_rows(&self.shape, &self.entries)
            .into_iter()
            .map(|r| r.into_iter().flatten().collect())
            .collect()
    }

    /// Mirror in the main diagonal; the result lives on the conjugate shape.
    pub fn transpose(&self) -> StandardTableau {
        let shape = self.shape.conjugate();
        let entries = shape
            .cells()
            .iter()
            .map(|c| self.entry(c.transpose()).expect("transposed cell is in the shape"))
            .collect();
        StandardTableau { shape, entries }
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("StandardTableau", 2)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("rows", &padded_rows(&self.shape, &self.entries))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemistandardTableau {
    shape: SkewShape,
    entries: Vec<u64>,
}

impl SemistandardTableau {
    pub fn new(shape: SkewShape, entries: Vec<u64>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for {} cells",
                entries.len(),
                cells.len()
            )));
        }
        let t = SemistandardTableau { shape, entries };
        for (k, &c) in cells.iter().enumerate() {
            let v = t.entries[k];
            if t.entry(Cell::new(c.i + 1, c.j)).is_some_and(|r| r < v) {
                return Err(Error::InvalidTableau(format!("row decreases after cell {c}")));
            }
            if t.entry(Cell::new(c.i, c.j + 1)).is_some_and(|d| d <= v) {
                return Err(Error::InvalidTableau(format!("column not strict below cell {c}")));
            }
        }
        Ok(t)
    }

    pub fn from_rows(shape: SkewShape, rows: &[Vec<u64>]) -> Result<Self> {
        if !row_lengths_match(&shape, rows) {
            return Err(Error::InvalidTableau(format!("rows {rows:?} do not fit shape {shape}")));
        }
        let entries = rows.iter().flatten().copied().collect();
        SemistandardTableau::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn entry(&self, c: Cell) -> Option<u64> {
        if !self.shape.contains(c) {
            return None;
        }
        self.shape.cells().iter().position(|&d| d == c).map(|k| self.entries[k])
    }

    pub fn volume(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        padded_rows(&self.shape, &self.entries)
            .into_iter()
            .map(|r| r.into_iter().flatten().collect())
            .collect()
    }
}

impl Serialize for SemistandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SemistandardTableau", 2)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("rows", &padded_rows(&self.shape, &self.entries))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentData {
    pub descent_cells: Vec<Cell>,
    pub descent_contents: Vec<usize>,
    pub maj: usize,
}

/// All standard tableaux of `s`, lexicographic in the reading-order entry word.
pub fn enumerate_syt(s: &SkewShape) -> Vec<StandardTableau> {
    linear_extensions(&Poset::from_skew_shape(s))
        .iter()
        .map(|e| StandardTableau::from_linear_extension(s, e).expect("extensions of the cell order are tableaux"))
        .collect()
}

/// `k` is a descent when `k + 1` sits in a strictly lower row.
pub fn descent_data(q: &StandardTableau) -> DescentData {
    let by_content = q.cells_by_content();
    let mut descent_cells = Vec::new();
    let mut descent_contents = Vec::new();
    for (k, pair) in by_content.windows(2).enumerate() {
        if pair[1].j > pair[0].j {
            descent_cells.push(pair[0]);
            descent_contents.push(k + 1);
        }
    }
    let maj = descent_contents.iter().sum();
    DescentData {
        descent_cells,
        descent_contents,
        maj,
    }
}

pub fn maj(q: &StandardTableau) -> usize {
    descent_data(q).maj
}

/// Value at `Q(k)` is the number of descents of `Q` smaller than `k`.
pub fn plinth(q: &StandardTableau) -> SemistandardTableau {
    let des = descent_data(q).descent_contents;
    let entries = q
        .entries()
        .iter()
        .map(|&k| des.iter().filter(|&&d| d < k).count() as u64)
        .collect();
    SemistandardTableau::new(q.shape().clone(), entries).expect("plinths are semistandard")
}

/// `Σ_Q q^{|plinth(Q)|}` over the standard tableaux of `s`.
pub fn plinth_polynomial(s: &SkewShape) -> IntPoly {
    enumerate_syt(s)
        .iter()
        .map(|q| IntPoly::monomial(plinth(q).volume() as usize))
        .sum()
}

/// `Σ_Q q^{maj(Q)}` over the standard tableaux of `s`.
pub fn maj_polynomial(s: &SkewShape) -> IntPoly {
    enumerate_syt(s).iter().map(|q| IntPoly::monomial(maj(q))).sum()
}

/// Numbers the cells by increasing value, equal values left to right.
pub fn standardize(t: &SemistandardTableau) -> StandardTableau {
    let cells = t.shape().cells();
    let mut idx: Vec<usize> = (0..cells.len()).collect();
    idx.sort_by_key(|&k| (t.entries()[k], cells[k].i));
    let mut entries = vec![0; cells.len()];
    for (rank, &k) in idx.iter().enumerate() {
        entries[k] = rank + 1;
    }
    StandardTableau::new(t.shape().clone(), entries).expect("standardization of a semistandard tableau is standard")
}

fn check_partition_sequence(y: &[u64], n: usize) -> Result<()> {
    if y.len() != n {
        return Err(Error::InvalidInput(format!(
            "sequence of length {} for {} cells",
            y.len(),
            n
        )));
    }
    if y.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(format!("sequence {y:?} is not weakly increasing")));
    }
    Ok(())
}

/// `T(Q(k)) = plinth(Q)(Q(k)) + y_k`.
pub fn bss_forward(q: &StandardTableau, y: &[u64]) -> Result<SemistandardTableau> {
    check_partition_sequence(y, q.size())?;
    let p = plinth(q);
    let entries = p
        .entries()
        .iter()
        .zip(q.entries())
        .map(|(&v, &k)| v + y[k - 1])
        .collect();
    SemistandardTableau::new(q.shape().clone(), entries)
        .map_err(|e| Error::InternalInvariantViolation(format!("forward map left the semistandard set: {e}")))
}

/// Inverse of [`bss_forward`]: `Q` is the standardization of `T`.
pub fn bss_inverse(t: &SemistandardTableau) -> Result<(StandardTableau, Vec<u64>)> {
    let q = standardize(t);
    let p = plinth(&q);
    let mut y = vec![0u64; q.size()];
    for ((&tv, &pv), &k) in t.entries().iter().zip(p.entries()).zip(q.entries()) {
        y[k - 1] = tv
            .checked_sub(pv)
            .ok_or_else(|| Error::InternalInvariantViolation(format!("plinth exceeds tableau at content {k}")))?;
    }
    if y.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InternalInvariantViolation(format!(
            "reconstructed sequence {y:?} is not weakly increasing"
        )));
    }
    Ok((q, y))
}

/// Calls `visit` on every semistandard tableau of `s` with volume at most
/// `max_volume`, filling cells in reading order.
pub fn for_each_ssyt<F: FnMut(&SemistandardTableau)>(s: &SkewShape, max_volume: u64, mut visit: F) {
    let cells = s.cells();
    // Index of the left neighbour and the upper neighbour, when in the shape.
    let links: Vec<(Option<usize>, Option<usize>)> = cells
        .iter()
        .map(|c| {
            let left = cells.iter().position(|d| d.j == c.j && d.i + 1 == c.i);
            let up = cells.iter().position(|d| d.i == c.i && d.j + 1 == c.j);
            (left, up)
        })
        .collect();
    let mut entries = vec![0u64; cells.len()];

    fn go<F: FnMut(&SemistandardTableau)>(
        k: usize,
        volume: u64,
        max_volume: u64,
        s: &SkewShape,
        links: &[(Option<usize>, Option<usize>)],
        entries: &mut Vec<u64>,
        visit: &mut F,
    ) {
        if k == entries.len() {
            visit(&SemistandardTableau {
                shape: s.clone(),
                entries: entries.clone(),
            });
            return;
        }
        let (left, up) = links[k];
        let lo = left.map_or(0, |l| entries[l]).max(up.map_or(0, |u| entries[u] + 1));
        let mut v = lo;
        while volume + v <= max_volume {
            entries[k] = v;
            go(k + 1, volume + v, max_volume, s, links, entries, visit);
            v += 1;
        }
    }

    go(0, 0, max_volume, s, &links, &mut entries, &mut visit);
}

/// Number of semistandard tableaux of `s` of each volume `0..=max_volume`.
pub fn ssyt_counts(s: &SkewShape, max_volume: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_volume as usize + 1];
    for_each_ssyt(s, max_volume, |t| counts[t.volume() as usize] += 1);
    counts
}

/// Weakly increasing sequences of `n` non-negative integers with sum at most
/// `max_sum`, in lexicographic order.
pub fn partition_sequences(n: usize, max_sum: u64) -> Vec<Vec<u64>> {
    fn go(n: usize, rem: u64, lo: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let left = (n - cur.len()) as u64;
        let mut v = lo;
        // every later entry is at least v
        while v * left <= rem {
            cur.push(v);
            go(n, rem - v, v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    go(n, max_sum, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::series_rational;

    fn shape(t: &str) -> SkewShape {
        t.parse().unwrap()
    }

    fn syt(s: &str, rows: &[&[usize]]) -> StandardTableau {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        StandardTableau::from_rows(shape(s), &rows).unwrap()
    }

    fn ssyt(s: &str, rows: &[&[u64]]) -> SemistandardTableau {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        SemistandardTableau::from_rows(shape(s), &rows).unwrap()
    }

    /// Oracle: filter all n! fillings by the row/column conditions.
    fn brute_force_syt_count(s: &SkewShape) -> usize {
        let n = s.size();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut count = 0;
        loop {
            if StandardTableau::new(s.clone(), perm.clone()).is_ok() {
                count += 1;
            }
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        count
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&shape("3,2")).len(), 5);
        assert_eq!(enumerate_syt(&shape("4")).len(), 1);
        assert_eq!(enumerate_syt(&shape("2,1")).len(), brute_force_syt_count(&shape("2,1")));
        assert_eq!(enumerate_syt(&shape("2,1")).len(), 2);
        for s in SkewShape::corpus(5) {
            assert_eq!(enumerate_syt(&s).len(), brute_force_syt_count(&s), "{s}");
        }
        let first = &enumerate_syt(&shape("2,1"))[0];
        assert_eq!(first.rows(), vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn invalid_tableaux() {
        assert!(StandardTableau::from_rows(shape("2,1"), &[vec![2, 1], vec![3]]).is_err());
        assert!(StandardTableau::from_rows(shape("2,1"), &[vec![1, 3], vec![1]]).is_err());
        assert!(StandardTableau::from_rows(shape("2,1"), &[vec![1, 3]]).is_err());
        assert!(SemistandardTableau::from_rows(shape("2,1"), &[vec![0, 0], vec![0]]).is_err());
        assert!(SemistandardTableau::from_rows(shape("2,1"), &[vec![1, 0], vec![2]]).is_err());
        assert!(SemistandardTableau::from_rows(shape("2,1"), &[vec![0, 0], vec![1]]).is_ok());
    }

    #[test]
    fn descent_examples() {
        let d = descent_data(&syt("3,2", &[&[1, 2, 3], &[4, 5]]));
        assert_eq!(d.descent_contents, vec![3]);
        assert_eq!(d.descent_cells, vec![Cell::new(3, 1)]);
        assert_eq!(d.maj, 3);
        let d = descent_data(&syt("4", &[&[1, 2, 3, 4]]));
        assert!(d.descent_contents.is_empty());
        assert_eq!(d.maj, 0);
        let d = descent_data(&syt("1,1,1", &[&[1], &[2], &[3]]));
        assert_eq!(d.descent_contents, vec![1, 2]);
        assert_eq!(d.maj, 3);
    }

    #[test]
    fn plinth_examples() {
        let p = plinth(&syt("3,2", &[&[1, 2, 3], &[4, 5]]));
        assert_eq!(p.rows(), vec![vec![0, 0, 0], vec![1, 1]]);
        assert_eq!(p.volume(), 2);
        let p = plinth(&syt("2,1", &[&[1, 3], &[2]]));
        assert_eq!(p.rows(), vec![vec![0, 1], vec![1]]);
        assert_eq!(p.volume(), 2);
        assert!(plinth(&syt("3", &[&[1, 2, 3]])).entries().iter().all(|&v| v == 0));
    }

    #[test]
    fn plinth_polynomial_examples() {
        assert_eq!(
            plinth_polynomial(&shape("3,2")),
            IntPoly::from_i64s(&[0, 0, 1, 1, 1, 1, 1])
        );
        assert_eq!(maj_polynomial(&shape("3,2")), plinth_polynomial(&shape("3,2")));
        assert_eq!(plinth_polynomial(&shape("2,1")), IntPoly::from_i64s(&[0, 1, 1]));
        assert_eq!(plinth_polynomial(&SkewShape::empty()), IntPoly::one());
    }

    #[test]
    fn standardize_examples() {
        let q = standardize(&ssyt("2,1", &[&[0, 2], &[1]]));
        assert_eq!(q, syt("2,1", &[&[1, 3], &[2]]));
        let q = standardize(&ssyt("3,2", &[&[0, 3, 7], &[1, 5]]));
        assert_eq!(q, syt("3,2", &[&[1, 3, 5], &[2, 4]]));
        for s in SkewShape::corpus(5) {
            for q in enumerate_syt(&s) {
                let back = standardize(&plinth(&q));
                assert_eq!(descent_data(&back).descent_contents, descent_data(&q).descent_contents);
            }
        }
    }

    #[test]
    fn bss_examples() {
        let q = syt("2,1", &[&[1, 3], &[2]]);
        let t = bss_forward(&q, &[0, 0, 1]).unwrap();
        assert_eq!(t, ssyt("2,1", &[&[0, 2], &[1]]));
        assert_eq!(bss_forward(&q, &[0, 0, 0]).unwrap(), plinth(&q));
        let q5 = syt("3,2", &[&[1, 2, 3], &[4, 5]]);
        assert_eq!(bss_forward(&q5, &[0; 5]).unwrap(), ssyt("3,2", &[&[0, 0, 0], &[1, 1]]));
        assert!(bss_forward(&q, &[1, 0, 0]).is_err());
        assert!(bss_forward(&q, &[0, 0]).is_err());

        let (q_back, y) = bss_inverse(&t).unwrap();
        assert_eq!(q_back, q);
        assert_eq!(y, vec![0, 0, 1]);
        let (_, y) = bss_inverse(&ssyt("3,2", &[&[0, 0, 0], &[1, 1]])).unwrap();
        assert_eq!(y, vec![0; 5]);
        for s in SkewShape::corpus(4) {
            for q in enumerate_syt(&s) {
                let (back, y) = bss_inverse(&plinth(&q)).unwrap();
                assert_eq!(back, standardize(&plinth(&q)));
                assert!(y.iter().all(|&v| v == 0));
            }
        }
    }

    #[test]
    fn ssyt_count_examples() {
        assert_eq!(ssyt_counts(&shape("2,1"), 2), vec![0, 1, 2]);
        assert_eq!(ssyt_counts(&shape("1"), 3), vec![1, 1, 1, 1]);
        assert_eq!(ssyt_counts(&SkewShape::empty(), 3), vec![1, 0, 0, 0]);
        assert_eq!(ssyt_counts(&shape("2,1"), 1), vec![0, 1]);
    }

    #[test]
    fn plinths_are_distinct_and_equidistributed() {
        for s in SkewShape::corpus(6) {
            let qs = enumerate_syt(&s);
            let mut ps: Vec<_> = qs.iter().map(plinth).collect();
            ps.sort();
            ps.dedup();
            assert_eq!(ps.len(), qs.len(), "plinths of {s} collide");
            assert_eq!(maj_polynomial(&s), plinth_polynomial(&s), "{s}");
        }
    }

    #[test]
    fn stanley_identity_small() {
        for s in SkewShape::corpus(4) {
            let n = s.size();
            let exps: Vec<usize> = (1..=n).collect();
            let series = series_rational(&maj_polynomial(&s), &exps, 8).unwrap();
            assert_eq!(series.to_u64s().unwrap(), ssyt_counts(&s, 8), "{s}");
        }
    }

    #[test]
    fn partition_sequence_counts() {
        // sequences of length 2 with sum <= 3: 00 01 02 03 11 12
        assert_eq!(partition_sequences(2, 3).len(), 6);
        assert_eq!(partition_sequences(0, 3), vec![Vec::<u64>::new()]);
        assert!(partition_sequences(3, 5)
            .iter()
            .all(|y| y.windows(2).all(|w| w[0] <= w[1])));
    }

    #[test]
    fn tableau_json() {
        let q = syt("3,2/1", &[&[1, 3], &[2, 4]]);
        assert_eq!(
            serde_json::to_string(&q).unwrap(),
            r#"{"shape":{"outer":[3,2],"inner":[1]},"rows":[[null,1,3],[2,4]]}"#
        );
    }

    #[test]
    fn transpose_round_trip() {
        for s in SkewShape::corpus(5) {
            for q in enumerate_syt(&s) {
                let t = q.transpose();
                assert!(StandardTableau::new(t.shape().clone(), t.entries().to_vec()).is_ok());
                assert_eq!(t.transpose(), q);
            }
        }
    }
}
