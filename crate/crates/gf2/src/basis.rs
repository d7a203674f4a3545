use crate::Bits;

/// Echelon basis keyed by leading bit. Each stored row remembers which
/// inserted vectors it is a combination of, so membership queries can also
/// return an explicit solution.
#[derive(Clone, Debug)]
pub struct Basis {
    len: usize,
    rows: Vec<Option<(Bits, Vec<usize>)>>,
    inserted: usize,
    rank: usize,
}

impl Basis {
    pub fn new(len: usize) -> Self {
        Basis { len, rows: vec![None; len], inserted: 0, rank: 0 }
    }

    pub fn from_rows<'a>(len: usize, rows: impl IntoIterator<Item = &'a Bits>) -> Self {
        let mut b = Basis::new(len);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduce `v` against the basis; returns the residue and the set of
    /// inserted-vector indices whose sum was subtracted.
    pub fn reduce_tracked(&self, v: &Bits) -> (Bits, Vec<usize>) {
        let mut v = v.clone();
        let mut combo: Vec<usize> = Vec::new();
        while let Some(h) = v.leading() {
            match &self.rows[h] {
                Some((r, c)) => {
                    v.xor_assign(r);
                    sym_diff(&mut combo, c);
                }
                None => break,
            }
        }
        (v, combo)
    }

    pub fn reduce(&self, v: &Bits) -> Bits {
        let mut v = v.clone();
        while let Some(h) = v.leading() {
            match &self.rows[h] {
                Some((r, _)) => v.xor_assign(r),
                None => break,
            }
        }
        v
    }

    /// Fully reduce `v` (clear every pivot position, not just the leading one).
    pub fn reduce_full(&self, v: &Bits) -> Bits {
        let mut v = v.clone();
        for h in (0..self.len).rev() {
            if v.get(h) {
                if let Some((r, _)) = &self.rows[h] {
                    v.xor_assign(r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &Bits) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert a vector; returns true when it increased the rank.
    pub fn insert(&mut self, v: &Bits) -> bool {
        assert_eq!(v.len(), self.len, "dimension mismatch");
        let id = self.inserted;
        self.inserted += 1;
        let (r, mut combo) = self.reduce_tracked(v);
        sym_diff(&mut combo, &[id]);
        if let Some(h) = r.leading() {
            self.rows[h] = Some((r, combo));
            self.rank += 1;
            true
        } else {
            false
        }
    }

    /// Express `v` as a sum of inserted vectors (indices in insertion order).
    pub fn solve(&self, v: &Bits) -> Option<Vec<usize>> {
        let (r, mut combo) = self.reduce_tracked(v);
        if r.is_zero() {
            combo.sort_unstable();
            Some(combo)
        } else {
            None
        }
    }

    /// Stored echelon rows, highest pivot first.
    pub fn rows(&self) -> Vec<Bits> {
        self.rows.iter().rev().filter_map(|r| r.as_ref().map(|(b, _)| b.clone())).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.rows[i].is_some()).collect()
    }
}

fn sym_diff(acc: &mut Vec<usize>, other: &[usize]) {
    for &o in other {
        if let Some(p) = acc.iter().position(|&a| a == o) {
            acc.swap_remove(p);
        } else {
            acc.push(o);
        }
    }
}

pub fn rank(len: usize, rows: &[Bits]) -> usize {
    Basis::from_rows(len, rows).rank()
}

/// Basis of the intersection of two row spaces (Zassenhaus).
pub fn intersect(len: usize, a: &[Bits], b: &[Bits]) -> Vec<Bits> {
    // rows (x | x) and (y | 0) with the first block in the high half so it
    // is eliminated first
    let zero = Bits::zeros(len);
    let mut basis = Basis::new(2 * len);
    for x in a {
        basis.insert(&x.concat(x));
    }
    for y in b {
        basis.insert(&zero.concat(y));
    }
    let mut out: Vec<Bits> = basis
        .rows()
        .into_iter()
        .filter(|r| r.leading().is_some_and(|h| h < len))
        .map(|r| r.slice(0, len))
        .collect();
    out.sort();
    out
}

/// Basis of `{v : r·v = 0 for every row r}`.
pub fn nullspace(len: usize, rows: &[Bits]) -> Vec<Bits> {
    // reduced row echelon form with pivot columns chosen low to high
    let mut m: Vec<Bits> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..len {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(col)) else { continue };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for free in (0..len).filter(|c| !pivot_cols.contains(c)) {
        let mut v = Bits::zeros(len);
        v.set(free, true);
        for &(row, col) in &pivots {
            if m[row].get(free) {
                v.set(col, true);
            }
        }
        out.push(v);
    }
    out
}
