//! Row-insertion Robinson–Schensted correspondence on permutations and the
//! Schützenberger involution on straight-shape standard tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{enumerate_syt, maj, plinth, StandardTableau};

/// One-line notation, values `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidInput(format!("{word:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(perm.clone())];
        while let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) {
            let j = (i..n)
                .rev()
                .find(|&j| perm[j] > perm[i - 1])
                .expect("a larger suffix entry exists");
            perm.swap(i - 1, j);
            perm[i..].reverse();
            out.push(Permutation(perm.clone()));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn tableau_from_rows(rows: &[Vec<usize>]) -> StandardTableau {
    let shape = SkewShape::straight(
        Partition::new(rows.iter().map(Vec::len).collect()).expect("insertion rows have decreasing lengths"),
    );
    StandardTableau::from_rows(shape, rows).expect("insertion produces standard tableaux")
}

/// Insertion tableau `P` and recording tableau `Q` of `sigma`.
pub fn rsk(sigma: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in sigma.word().iter().enumerate() {
        let mut bumped = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![bumped]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > bumped) {
                Some(k) => {
                    bumped = std::mem::replace(&mut p[row][k], bumped);
                    row += 1;
                }
                None => {
                    p[row].push(bumped);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (tableau_from_rows(&p), tableau_from_rows(&q))
}

/// The permutation whose insertion and recording tableaux are `p` and `q`.
pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !p.shape().is_straight() {
        return Err(Error::SkewNotSupported);
    }
    let mut rows = p.rows();
    let q_rows = q.rows();
    let n = p.size();
    // Row index holding each recording entry.
    let mut row_of = vec![0; n + 1];
    for (j, r) in q_rows.iter().enumerate() {
        for &k in r {
            row_of[k] = j;
        }
    }
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        let mut row = row_of[step];
        let mut x = rows[row].pop().expect("recording tableau marks a row end");
        while row > 0 {
            row -= 1;
            let k = rows[row]
                .iter()
                .rposition(|&y| y < x)
                .expect("a smaller entry exists in the row above");
            x = std::mem::replace(&mut rows[row][k], x);
        }
        word[step - 1] = x;
    }
    Permutation::new(word)
}

/// Schützenberger involution using an explicit auxiliary insertion tableau `aux`.
pub fn schuetzenberger_with(q: &StandardTableau, aux: &StandardTableau) -> Result<StandardTableau> {
    if !q.shape().is_straight() {
        return Err(Error::SkewNotSupported);
    }
    let sigma = rsk_inverse(aux, q)?;
    let (_, q_rev) = rsk(&sigma.reversed());
    // Reversal sends the recording tableau to the conjugate shape.
    Ok(q_rev.transpose())
}

/// Schützenberger involution via RSK of the reversed word, transposed back to `Q`'s shape.
pub fn schuetzenberger(q: &StandardTableau) -> Result<StandardTableau> {
    if !q.shape().is_straight() {
        return Err(Error::SkewNotSupported);
    }
    let aux = enumerate_syt(q.shape())
        .into_iter()
        .next()
        .expect("every shape has a standard tableau");
    schuetzenberger_with(q, &aux)
}

/// `maj(Q) = |plinth(Sch(Q))|` for every standard tableau of the straight shape `s`.
pub fn verify_mahonian_schuetzenberger(s: &SkewShape) -> Result<bool> {
    if !s.is_straight() {
        return Err(Error::SkewNotSupported);
    }
    for q in enumerate_syt(s) {
        if maj(&q) as u64 != plinth(&schuetzenberger(&q)?).volume() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn syt(s: &str, rows: &[&[usize]]) -> StandardTableau {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        StandardTableau::from_rows(s.parse().unwrap(), &rows).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let (p, q) = rsk(&Permutation::identity(4));
        assert_eq!(p.rows(), vec![vec![1, 2, 3, 4]]);
        assert_eq!(q, p);
        let (p, q) = rsk(&perm(&[2, 3, 1]));
        assert_eq!(p, syt("2,1", &[&[1, 3], &[2]]));
        assert_eq!(q, syt("2,1", &[&[1, 2], &[3]]));
        let (p, q) = rsk(&perm(&[2, 1]));
        assert_eq!(p, syt("1,1", &[&[1], &[2]]));
        assert_eq!(q, p);
    }

    #[test]
    fn inverse_examples() {
        let row = syt("3", &[&[1, 2, 3]]);
        assert_eq!(rsk_inverse(&row, &row).unwrap(), Permutation::identity(3));
        let p = syt("2,1", &[&[1, 3], &[2]]);
        let q = syt("2,1", &[&[1, 2], &[3]]);
        assert_eq!(rsk_inverse(&p, &q).unwrap(), perm(&[2, 3, 1]));
        assert_eq!(rsk_inverse(&row, &p), Err(Error::ShapeMismatch));
    }

    #[test]
    fn rsk_round_trips() {
        for n in 0..=6 {
            for sigma in Permutation::all(n) {
                let (p, q) = rsk(&sigma);
                assert_eq!(rsk_inverse(&p, &q).unwrap(), sigma);
            }
        }
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn schuetzenberger_examples() {
        let q = syt("2,1", &[&[1, 2], &[3]]);
        assert_eq!(schuetzenberger(&q).unwrap(), syt("2,1", &[&[1, 3], &[2]]));
        let row = syt("4", &[&[1, 2, 3, 4]]);
        assert_eq!(schuetzenberger(&row).unwrap(), row);
        let skew = syt("2,1/1", &[&[1], &[2]]);
        assert_eq!(schuetzenberger(&skew), Err(Error::SkewNotSupported));
        assert_eq!(
            verify_mahonian_schuetzenberger(&"2,1/1".parse().unwrap()),
            Err(Error::SkewNotSupported)
        );
    }

    #[test]
    fn involution_independent_of_auxiliary() {
        for s in SkewShape::straight_corpus(6) {
            let all = enumerate_syt(&s);
            for q in &all {
                let sch = schuetzenberger(q).unwrap();
                assert_eq!(sch.shape(), q.shape());
                assert_eq!(&schuetzenberger(&sch).unwrap(), q);
                for aux in &all {
                    assert_eq!(schuetzenberger_with(q, aux).unwrap(), sch);
                }
            }
        }
    }

    #[test]
    fn mahonian_identity() {
        assert!(verify_mahonian_schuetzenberger(&"2,1".parse().unwrap()).unwrap());
        assert!(verify_mahonian_schuetzenberger(&"5".parse().unwrap()).unwrap());
        assert!(verify_mahonian_schuetzenberger(&"3,2".parse().unwrap()).unwrap());
        // maj values 2, 1 pair with plinth volumes 1, 2 on shape (2,1).
        let qs = enumerate_syt(&"2,1".parse().unwrap());
        let majs: Vec<usize> = qs.iter().map(maj).collect();
        let vols: Vec<u64> = qs.iter().map(|q| plinth(q).volume()).collect();
        assert_eq!(majs, vec![2, 1]);
        assert_eq!(vols, vec![1, 2]);
    }

    #[test]
    fn permutation_json() {
        let p: Permutation = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(p, perm(&[2, 3, 1]));
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,3,1]");
    }
}
