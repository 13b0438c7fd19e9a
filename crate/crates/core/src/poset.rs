//! Finite posets, filters, linear extensions and X-partitions.
//!
//! Elements are indexed `0..n` in declaration order, which is the canonical
//! order for every enumeration. For posets built from skew shapes this is
//! the reading order of the cells.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::SkewShape;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// Reflexive-transitive closure, `leq[a][b]` iff `a ≼ b`.
    leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (k, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), k).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            pairs.push((lookup(a)?, lookup(b)?));
        }
        Poset::from_index_covers(labels, &pairs)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn from_index_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::UnknownLabel(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::CycleDetected(labels[a].clone()));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if leq[a][k] {
                    for b in 0..n {
                        if leq[k][b] {
                            leq[a][b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    return Err(Error::CycleDetected(labels[a].clone()));
                }
            }
        }
        Ok(Poset { labels, leq })
    }

    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
        Poset::from_index_covers(default_labels(n), &covers).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_index_covers(default_labels(n), &[]).expect("an antichain is acyclic")
    }

    /// Cells of `s` under the componentwise order.
    pub fn from_skew_shape(s: &SkewShape) -> Self {
        let cells = s.cells();
        let labels = cells.iter().map(ToString::to_string).collect();
        let leq = cells
            .iter()
            .map(|a| cells.iter().map(|b| a.i <= b.i && a.j <= b.j).collect())
            .collect();
        Poset { labels, leq }
    }

    /// Random DAG on `n` elements: each pair `a < b` becomes a cover with
    /// probability `density`.
    pub fn random<R: Rng>(n: usize, density: f64, rng: &mut R) -> Self {
        let mut covers = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(density) {
                    covers.push((a, b));
                }
            }
        }
        Poset::from_index_covers(default_labels(n), &covers).expect("index-increasing covers are acyclic")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Cover relations recovered from the closure.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Topological order that always takes the smallest available index.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .find(|&b| !placed[b] && (0..n).all(|a| placed[a] || !self.lt(a, b)))
                .expect("closure is acyclic");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    pub fn is_linear_extension(&self, ext: &LinearExtension) -> bool {
        ext.len() == self.len()
            && (0..self.len()).all(|a| (0..self.len()).all(|b| !self.lt(a, b) || ext.rank(a) < ext.rank(b)))
    }

    pub fn is_x_partition(&self, t: &XPartition) -> bool {
        t.len() == self.len()
            && (0..self.len()).all(|a| (0..self.len()).all(|b| !self.leq(a, b) || t.value(a) <= t.value(b)))
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|k| format!("x{}", k + 1)).collect()
}

/// Surjective, order-respecting map onto floors `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    floor: Vec<usize>,
    floors: usize,
}

impl Filter {
    pub fn new(p: &Poset, floor: Vec<usize>) -> Result<Self> {
        if floor.len() != p.len() {
            return Err(Error::InvalidFilter(format!(
                "{} floors given for {} elements",
                floor.len(),
                p.len()
            )));
        }
        let floors = floor.iter().copied().max().unwrap_or(0);
        let mut hit = vec![false; floors + 1];
        for &f in &floor {
            if f == 0 {
                return Err(Error::InvalidFilter("floors are numbered from 1".into()));
            }
            hit[f] = true;
        }
        if let Some(missing) = (1..=floors).find(|&f| !hit[f]) {
            return Err(Error::InvalidFilter(format!("floor {missing} is empty")));
        }
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.leq(a, b) && floor[a] > floor[b] {
                    return Err(Error::InvalidFilter(format!(
                        "{} ≼ {} but floors {} > {}",
                        p.label(a),
                        p.label(b),
                        floor[a],
                        floor[b]
                    )));
                }
            }
        }
        Ok(Filter { floor, floors })
    }

    pub fn trivial(p: &Poset) -> Self {
        Filter {
            floor: vec![1; p.len()],
            floors: usize::from(!p.is_empty()),
        }
    }

    /// `F(i, j) = j`, renumbered over the nonempty rows.
    pub fn row(s: &SkewShape) -> Self {
        let cells = s.cells();
        let mut rows: Vec<usize> = cells.iter().map(|c| c.j).collect();
        rows.dedup();
        let floor = cells
            .iter()
            .map(|c| rows.iter().position(|&r| r == c.j).unwrap() + 1)
            .collect();
        Filter {
            floor,
            floors: rows.len(),
        }
    }

    /// A random valid filter: floors grow by 0 or 1 along covers, then get compacted.
    pub fn random<R: Rng>(p: &Poset, rng: &mut R) -> Self {
        let mut raw = vec![0usize; p.len()];
        for b in p.topological_order() {
            let base = (0..p.len()).filter(|&a| p.lt(a, b)).map(|a| raw[a]).max();
            raw[b] = match base {
                Some(v) => v + usize::from(rng.gen_bool(0.5)),
                None => usize::from(rng.gen_bool(0.3)),
            };
        }
        let mut levels = raw.clone();
        levels.sort_unstable();
        levels.dedup();
        let floor = raw.iter().map(|v| levels.binary_search(v).unwrap() + 1).collect();
        Filter::new(p, floor).expect("compacted monotone floors form a filter")
    }

    pub fn floor(&self, a: usize) -> usize {
        self.floor[a]
    }

    pub fn floors(&self) -> usize {
        self.floors
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.floor
    }

    pub fn is_trivial(&self) -> bool {
        self.floors <= 1
    }
}

/// Ranks `1..=n`, one per element, increasing along the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearExtension {
    rank: Vec<usize>,
}

impl LinearExtension {
    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        let n = rank.len();
        let mut seen = vec![false; n + 1];
        for &r in &rank {
            if r == 0 || r > n || std::mem::replace(&mut seen[r], true) {
                return Err(Error::InvalidInput(format!("{rank:?} is not a bijection onto 1..={n}")));
            }
        }
        Ok(LinearExtension { rank })
    }

    /// From the element sequence `order[k - 1] = Q⁻¹(k)`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let mut rank = vec![0; order.len()];
        for (k, &a) in order.iter().enumerate() {
            if a >= order.len() || rank[a] != 0 {
                return Err(Error::InvalidInput(format!("{order:?} is not a permutation")));
            }
            rank[a] = k + 1;
        }
        Ok(LinearExtension { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, a: usize) -> usize {
        self.rank[a]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Elements listed by increasing rank.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.rank.len()];
        for (a, &r) in self.rank.iter().enumerate() {
            order[r - 1] = a;
        }
        order
    }
}

/// Order-preserving map to non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XPartition {
    values: Vec<u64>,
}

impl XPartition {
    pub fn new(values: Vec<u64>) -> Self {
        XPartition { values }
    }

    pub fn zero(n: usize) -> Self {
        XPartition { values: vec![0; n] }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, a: usize) -> u64 {
        self.values[a]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn volume(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Pointwise `self <= other`.
    pub fn below(&self, other: &XPartition) -> bool {
        self.values.len() == other.values.len() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// `{"values": {"a": 0, ...}}` keyed by the poset's labels.
    pub fn to_json(&self, p: &Poset) -> serde_json::Value {
        let values: BTreeMap<&str, u64> = p
            .labels()
            .iter()
            .map(String::as_str)
            .zip(self.values.iter().copied())
            .collect();
        serde_json::json!({ "values": values })
    }
}

/// Every linear extension, sorted lexicographically by rank word.
#[allow(clippy::needless_range_loop)]
pub fn linear_extensions(p: &Poset) -> Vec<LinearExtension> {
    let n = p.len();
    let preds: Vec<Vec<usize>> = (0..n).map(|b| (0..n).filter(|&a| p.lt(a, b)).collect()).collect();
    let mut missing: Vec<usize> = preds.iter().map(Vec::len).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut out = Vec::new();

    fn go(
        p: &Poset,
        missing: &mut Vec<usize>,
        placed: &mut Vec<bool>,
        order: &mut Vec<usize>,
        out: &mut Vec<LinearExtension>,
    ) {
        let n = p.len();
        if order.len() == n {
            out.push(LinearExtension::from_order(order).expect("order is a permutation"));
            return;
        }
        for a in 0..n {
            if placed[a] || missing[a] != 0 {
                continue;
            }
            placed[a] = true;
            order.push(a);
            for b in 0..n {
                if p.lt(a, b) {
                    missing[b] -= 1;
                }
            }
            go(p, missing, placed, order, out);
            for b in 0..n {
                if p.lt(a, b) {
                    missing[b] += 1;
                }
            }
            order.pop();
            placed[a] = false;
        }
    }

    go(p, &mut missing, &mut placed, &mut order, &mut out);
    out.sort();
    out
}

/// Calls `visit` on every X-partition of volume at most `max_volume`
/// (semistandard with respect to `filter` when one is given).
pub fn for_each_x_partition<F: FnMut(&XPartition)>(p: &Poset, filter: Option<&Filter>, max_volume: u64, mut visit: F) {
    let order = p.topological_order();
    let n = p.len();
    // For each position in `order`: (earlier element, strictness) constraints.
    let constraints: Vec<Vec<(usize, u64)>> = order
        .iter()
        .map(|&b| {
            (0..n)
                .filter(|&a| p.lt(a, b))
                .map(|a| {
                    let strict = filter.is_some_and(|f| f.floor(a) < f.floor(b));
                    (a, u64::from(strict))
                })
                .collect()
        })
        .collect();
    let mut values = XPartition::zero(n);

    fn go<F: FnMut(&XPartition)>(
        pos: usize,
        volume: u64,
        max_volume: u64,
        order: &[usize],
        constraints: &[Vec<(usize, u64)>],
        values: &mut XPartition,
        visit: &mut F,
    ) {
        if pos == order.len() {
            visit(values);
            return;
        }
        let lo = constraints[pos]
            .iter()
            .map(|&(a, s)| values.values[a] + s)
            .max()
            .unwrap_or(0);
        let b = order[pos];
        let mut v = lo;
        while volume + v <= max_volume {
            values.values[b] = v;
            go(pos + 1, volume + v, max_volume, order, constraints, values, visit);
            v += 1;
        }
        values.values[b] = 0;
    }

    go(0, 0, max_volume, &order, &constraints, &mut values, &mut visit);
}

fn counts_by_volume(p: &Poset, filter: Option<&Filter>, max_volume: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_volume as usize + 1];
    for_each_x_partition(p, filter, max_volume, |t| counts[t.volume() as usize] += 1);
    counts
}

/// Number of X-partitions of each volume `0..=max_volume`.
pub fn x_partition_counts(p: &Poset, max_volume: u64) -> Vec<u64> {
    counts_by_volume(p, None, max_volume)
}

/// Number of semistandard X-partitions of each volume `0..=max_volume`.
pub fn semistandard_counts(p: &Poset, f: &Filter, max_volume: u64) -> Vec<u64> {
    counts_by_volume(p, Some(f), max_volume)
}

/// The pointwise-least semistandard X-partition.
pub fn minimal_semistandard(p: &Poset, f: &Filter) -> XPartition {
    let n = p.len();
    let mut t = XPartition::zero(n);
    for b in p.topological_order() {
        t.values[b] = (0..n)
            .filter(|&a| p.lt(a, b))
            .map(|a| t.values[a] + u64::from(f.floor(a) < f.floor(b)))
            .max()
            .unwrap_or(0);
    }
    t
}

pub fn is_semistandard(p: &Poset, f: &Filter, t: &XPartition) -> bool {
    if !p.is_x_partition(t) {
        return false;
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| !(p.leq(a, b) && f.floor(a) < f.floor(b)) || t.value(a) < t.value(b)))
}

/// File form: `{"elements": [...], "covers": [[a, b], ...], "filter": {"a": 1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter: Option<BTreeMap<String, usize>>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset, f: Option<&Filter>) -> Self {
        PosetFile {
            elements: p.labels().to_vec(),
            covers: p
                .covers()
                .into_iter()
                .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
            filter: f
                .filter(|f| !f.is_trivial())
                .map(|f| p.labels().iter().cloned().zip(f.as_slice().iter().copied()).collect()),
        }
    }

    /// Builds the poset; an absent filter means the trivial one.
    pub fn build(&self) -> Result<(Poset, Filter)> {
        let p = Poset::from_covers(&self.elements, &self.covers)?;
        let f = match &self.filter {
            None => Filter::trivial(&p),
            Some(map) => {
                if let Some(unknown) = map.keys().find(|k| !self.elements.contains(k)) {
                    return Err(Error::UnknownLabel(unknown.clone()));
                }
                let floors = p
                    .labels()
                    .iter()
                    .map(|l| {
                        map.get(l)
                            .copied()
                            .ok_or_else(|| Error::InvalidFilter(format!("no floor for {l:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Filter::new(&p, floors)?
            }
        };
        Ok((p, f))
    }
}
