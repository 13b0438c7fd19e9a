//! Partitions, skew shapes and cells.
//!
//! A cell `(i, j)` sits at column `i` of row `j`, both 1-based, with `i`
//! growing to the right and `j` growing downward.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts. Trailing zeros are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part inside {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `j` (1-based); zero past the last row.
    pub fn row(&self, j: usize) -> usize {
        j.checked_sub(1).and_then(|k| self.0.get(k)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition contained in `self`, including the empty one and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], j: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if j == outer.len() {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition(parts));
                return;
            }
            for v in 0..=outer[j].min(cap) {
                cur.push(v);
                go(outer, j + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&text.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    /// Column, 1-based.
    pub i: usize,
    /// Row, 1-based.
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }

    pub fn transpose(self) -> Cell {
        Cell { i: self.j, j: self.i }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkewShape {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawSkewShape) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// Straight shape from parts; panics on invalid parts. For literals in code and tests.
    pub fn from_parts(parts: &[usize]) -> Self {
        SkewShape::straight(Partition::new(parts.to_vec()).expect("valid partition"))
    }

    pub fn empty() -> Self {
        SkewShape::straight(Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells, `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Rows of the outer partition, including rows emptied by the inner one.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.j >= 1 && self.inner.row(c.j) < c.i && c.i <= self.outer.row(c.j)
    }

    /// Cells in reading order: row 1 left to right, then row 2, and so on.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|j| (self.inner.row(j) + 1..=self.outer.row(j)).map(move |i| Cell { i, j }))
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Every `outer/inner` with `|outer| <= max_outer`, inner ranging over all
    /// subpartitions. Ordered by outer size, then outer, then inner.
    pub fn corpus(max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=max_outer {
            for outer in Partition::all_of_size(n) {
                for inner in outer.subpartitions() {
                    out.push(SkewShape {
                        outer: outer.clone(),
                        inner,
                    });
                }
            }
        }
        out
    }

    /// Every straight shape with at most `max_cells` cells.
    pub fn straight_corpus(max_cells: usize) -> Vec<SkewShape> {
        (0..=max_cells)
            .flat_map(Partition::all_of_size)
            .map(SkewShape::straight)
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {t:?} in {text:?}")))
        })
        .collect()
}

/// Grammar: `3,2` or `3,2/1`. A lone `0` is the empty partition.
impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut halves = text.split('/');
        let outer_text = halves.next().unwrap_or("");
        let inner_text = halves.next();
        if halves.next().is_some() {
            return Err(Error::Parse(format!("more than one '/' in {text:?}")));
        }
        if outer_text.trim().is_empty() {
            return Err(Error::Parse("missing outer partition".into()));
        }
        let outer = Partition::new(parse_parts(outer_text)?)?;
        let inner = Partition::new(parse_parts(inner_text.unwrap_or(""))?)?;
        SkewShape::new(outer, inner)
    }
}
