//! Graded Betti numbers of quotients by monomial ideals, and the derived
//! regularity / projective dimension / depth invariants.
//!
//! For each multidegree in the lcm lattice of the minimal generators we build
//! the Koszul upper complex (faces F with x^a / x_F still in the ideal) and
//! take exact reduced simplicial homology; the i-th homology at multidegree a
//! contributes to the Betti number of the ideal in homological degree i+1 and
//! internal degree |a|. All ranks are computed exactly, over the rationals
//! (fraction-free integer elimination) or a prime field.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::monomial::{Monomial, MonomialIdeal};
use crate::par;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("lcm lattice has {got} elements, exceeding the cap of {cap}")]
    TooLarge { got: usize, cap: usize },
    #[error("Betti numbers of the zero or unit ideal are not defined here")]
    DegenerateIdeal,
}

/// Field characteristic for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChar {
    Zero,
    Prime(u64),
}

/// Graded Betti numbers of S/I: entries map (homological index i, internal
/// degree d) to beta_{i,d}(S/I). The (0,0) entry is always 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, u32), u64>,
    pub num_vars: usize,
}

impl BettiTable {
    /// reg(S/I) = max(d - i) over nonzero entries.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, d)| d as i64 - i as i64)
            .max()
            .unwrap_or(0)
    }

    /// pd(S/I) = max i over nonzero entries.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// depth(S/I) = (number of variables) - pd(S/I).
    pub fn depth(&self) -> i64 {
        self.num_vars as i64 - self.proj_dim() as i64
    }

    /// Macaulay-style CSV: rows are i, columns are d - i.
    pub fn to_csv(&self) -> String {
        let pd = self.proj_dim();
        let max_shift = self
            .entries
            .keys()
            .map(|&(i, d)| d as i64 - i as i64)
            .max()
            .unwrap_or(0);
        let mut out = String::from("i\\d-i");
        for s in 0..=max_shift {
            out.push_str(&format!(",{s}"));
        }
        out.push('\n');
        for i in 0..=pd {
            out.push_str(&i.to_string());
            for s in 0..=max_shift {
                let d = (i as i64 + s) as u32;
                let v = self.entries.get(&(i, d)).copied().unwrap_or(0);
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, d), &b)| serde_json::json!({"i": i, "degree": d, "beta": b}))
            .collect();
        serde_json::json!({
            "num_vars": self.num_vars,
            "entries": entries,
            "regularity": self.regularity(),
            "proj_dim": self.proj_dim(),
            "depth": self.depth(),
        })
    }
}

/// All joins (lcms) of nonempty subsets of the minimal generators.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>, ResolutionError> {
    let mut lattice: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in ideal.gens() {
                let join = f.lcm(g);
                if lattice.insert(join.clone()) {
                    next.push(join);
                }
            }
            if lattice.len() > cap {
                return Err(ResolutionError::TooLarge {
                    got: lattice.len(),
                    cap,
                });
            }
        }
        frontier = next;
    }
    Ok(lattice.into_iter().collect())
}

/// Rank of an integer matrix over the rationals, by fraction-free Bareiss
/// elimination in exact big-integer arithmetic.
pub fn rank_rational(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        // Find a pivot in this column.
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let val = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev_pivot;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = m[row][col].clone();
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Rank of an integer matrix over GF(p).
pub fn rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let p = p as i128;
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| ((x as i128) % p + p) % p).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = mod_inverse(a[row][col], p);
        for c in col..cols {
            a[row][c] = a[row][c] * inv % p;
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in col..cols {
                    a[r][c] = ((a[r][c] - f * a[row][c]) % p + p) % p;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    // Fermat: p is prime.
    let mut result = 1i128;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Rank over the rationals of a sparse integer matrix given as rows of
/// (column, value) pairs sorted by column. Integer-preserving elimination
/// with small-pivot selection; rows are divided by their content after each
/// step, so entries stay small in practice. Falls back to dense big-integer
/// elimination if an i128 operation would overflow.
fn sparse_rank(mut rows: Vec<Vec<(usize, i128)>>, field: FieldChar) -> usize {
    if let FieldChar::Prime(p) = field {
        return sparse_rank_mod_p(rows, p);
    }
    match try_sparse_rank_exact(&mut rows) {
        Some(r) => r,
        None => {
            // Overflow: redo densely in big integers (rare).
            let ncols = rows
                .iter()
                .flat_map(|r| r.iter().map(|&(c, _)| c + 1))
                .max()
                .unwrap_or(0);
            let dense: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    let mut row = vec![BigInt::zero(); ncols];
                    for &(c, v) in r {
                        row[c] = BigInt::from(v);
                    }
                    row
                })
                .collect();
            rank_rational(dense)
        }
    }
}

fn row_divide_content(row: &mut [(usize, i128)]) {
    let mut g: i128 = 0;
    for &(_, v) in row.iter() {
        g = num_integer::gcd(g, v.abs());
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for e in row.iter_mut() {
            e.1 /= g;
        }
    }
}

/// Merge rows: result = pv * target - f * pivot_row (matching columns).
/// Returns None on overflow.
fn row_combine(
    target: &[(usize, i128)],
    pivot_row: &[(usize, i128)],
    pv: i128,
    f: i128,
) -> Option<Vec<(usize, i128)>> {
    let mut out = Vec::with_capacity(target.len() + pivot_row.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < pivot_row.len() {
        let ca = target.get(a).map(|&(c, _)| c).unwrap_or(usize::MAX);
        let cb = pivot_row.get(b).map(|&(c, _)| c).unwrap_or(usize::MAX);
        let (col, val) = if ca < cb {
            let v = pv.checked_mul(target[a].1)?;
            a += 1;
            (ca, v)
        } else if cb < ca {
            let v = f.checked_mul(pivot_row[b].1)?.checked_neg()?;
            b += 1;
            (cb, v)
        } else {
            let v = pv
                .checked_mul(target[a].1)?
                .checked_sub(f.checked_mul(pivot_row[b].1)?)?;
            a += 1;
            b += 1;
            (ca, v)
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    Some(out)
}

fn try_sparse_rank_exact(rows: &mut Vec<Vec<(usize, i128)>>) -> Option<usize> {
    let mut rank = 0;
    loop {
        rows.retain(|r| !r.is_empty());
        if rows.is_empty() {
            return Some(rank);
        }
        // Pivot row: fewest entries, then smallest leading value.
        let (pi, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| {
                let min_abs = r.iter().map(|&(_, v)| v.abs()).min().unwrap();
                (min_abs, r.len())
            })
            .unwrap();
        let pivot_row = rows.swap_remove(pi);
        let &(pc, pv) = pivot_row
            .iter()
            .min_by_key(|&&(_, v)| v.abs())
            .unwrap();
        rank += 1;
        for r in rows.iter_mut() {
            if let Ok(idx) = r.binary_search_by_key(&pc, |&(c, _)| c) {
                let f = r[idx].1;
                let mut combined = row_combine(r, &pivot_row, pv, f)?;
                row_divide_content(&mut combined);
                *r = combined;
            }
        }
    }
}

fn sparse_rank_mod_p(rows: Vec<Vec<(usize, i128)>>, p: u64) -> usize {
    let p = p as i128;
    let mut rows: Vec<Vec<(usize, i128)>> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .filter_map(|(c, v)| {
                    let v = (v % p + p) % p;
                    (v != 0).then_some((c, v))
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    loop {
        rows.retain(|r: &Vec<(usize, i128)>| !r.is_empty());
        if rows.is_empty() {
            return rank;
        }
        let (pi, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .unwrap();
        let pivot_row = rows.swap_remove(pi);
        let (pc, pv) = pivot_row[0];
        let inv = mod_inverse(pv, p);
        rank += 1;
        for r in rows.iter_mut() {
            if let Ok(idx) = r.binary_search_by_key(&pc, |&(c, _)| c) {
                let f = r[idx].1 * inv % p;
                let mut out = Vec::with_capacity(r.len() + pivot_row.len());
                let (mut a, mut b) = (0, 0);
                while a < r.len() || b < pivot_row.len() {
                    let ca = r.get(a).map(|&(c, _)| c).unwrap_or(usize::MAX);
                    let cb = pivot_row.get(b).map(|&(c, _)| c).unwrap_or(usize::MAX);
                    let (col, val) = if ca < cb {
                        let v = r[a].1;
                        a += 1;
                        (ca, v)
                    } else if cb < ca {
                        let v = (p - f * pivot_row[b].1 % p) % p;
                        b += 1;
                        (cb, v)
                    } else {
                        let v = ((r[a].1 - f * pivot_row[b].1) % p + p) % p;
                        a += 1;
                        b += 1;
                        (ca, v)
                    };
                    if val != 0 {
                        out.push((col, val));
                    }
                }
                *r = out;
            }
        }
    }
}

/// The Koszul upper complex of `ideal` at multidegree `a`: all subsets F of
/// the support of `a` such that x^a / x_F lies in the ideal. Returned as the
/// list of faces (variable index sets), grouped by dimension |F| - 1,
/// including the empty face. The complex is closed under subsets, so it is
/// built by breadth-first extension starting from the empty face.
fn koszul_upper_complex(ideal: &MonomialIdeal, a: &Monomial) -> Vec<Vec<Vec<usize>>> {
    let support = a.support();
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]]; // the empty face
    let mut frontier: Vec<(Vec<usize>, Monomial)> = vec![(vec![], a.clone())];
    while !frontier.is_empty() {
        let mut next: Vec<(Vec<usize>, Monomial)> = Vec::new();
        for (face, quotient) in &frontier {
            let start = face.last().map_or(0, |&v| v + 1);
            for &v in support.iter().filter(|&&v| v >= start) {
                let mut q = quotient.clone();
                q.exps[v] -= 1;
                if ideal.contains(&q) {
                    let mut f = face.clone();
                    f.push(v);
                    next.push((f, q));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        by_dim.push(next.iter().map(|(f, _)| f.clone()).collect());
        frontier = next;
    }
    by_dim
}

/// Reduced homology dimensions of a simplicial complex given by faces grouped
/// by dimension (index k holds the (k-1)-dimensional faces; index 0 is the
/// empty face). Returns dims of H~_{k-1} at each k >= 0.
fn reduced_homology_dims(by_dim: &[Vec<Vec<usize>>], field: FieldChar) -> Vec<usize> {
    let levels = by_dim.len();
    // Boundary matrix from level k+1 to level k (faces of size k+1 to size k).
    let mut boundary_ranks = vec![0usize; levels + 1];
    for k in 1..levels {
        let target_index: BTreeMap<&Vec<usize>, usize> = by_dim[k - 1]
            .iter()
            .enumerate()
            .map(|(idx, f)| (f, idx))
            .collect();
        let rows = by_dim[k - 1].len();
        // Columns are enumerated in increasing order, so each sparse row
        // stays sorted by column as it is appended to.
        let mut matrix: Vec<Vec<(usize, i128)>> = vec![Vec::new(); rows];
        for (col, face) in by_dim[k].iter().enumerate() {
            for (drop, _) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(drop);
                let row = target_index[&sub];
                matrix[row].push((col, if drop % 2 == 0 { 1 } else { -1 }));
            }
        }
        boundary_ranks[k] = sparse_rank(matrix, field);
    }
    (0..levels)
        .map(|k| by_dim[k].len() - boundary_ranks[k] - boundary_ranks[k + 1])
        .collect()
}

/// Graded Betti table of S/I.
pub fn betti_table(
    ideal: &MonomialIdeal,
    field: FieldChar,
    lattice_cap: usize,
) -> Result<BettiTable, ResolutionError> {
    let num_vars = ideal.vars.len();
    if ideal.is_zero() || ideal.contains(&Monomial::one(num_vars)) {
        return Err(ResolutionError::DegenerateIdeal);
    }
    let lattice = lcm_lattice(ideal, lattice_cap)?;
    let per_degree: Vec<Vec<(usize, u32)>> = par::map_collect(lattice, |a| {
        let complex = koszul_upper_complex(ideal, &a);
        let dims = reduced_homology_dims(&complex, field);
        // dims[k] = dim H~_{k-1} at multidegree a contributes to
        // beta_{k, |a|}(I) = beta_{k+1, |a|}(S/I).
        dims.iter()
            .enumerate()
            .filter(|&(_, &h)| h > 0)
            .flat_map(|(k, &h)| std::iter::repeat_n((k + 1, a.degree()), h))
            .collect()
    });
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for contribs in per_degree {
        for (i, d) in contribs {
            *entries.entry((i, d)).or_insert(0) += 1;
        }
    }
    Ok(BettiTable { entries, num_vars })
}

/// Regularity of S/I (char 0, default cap).
pub fn regularity(ideal: &MonomialIdeal) -> Result<i64, ResolutionError> {
    Ok(betti_table(ideal, FieldChar::Zero, DEFAULT_LATTICE_CAP)?.regularity())
}

/// Projective dimension of S/I.
pub fn proj_dim(ideal: &MonomialIdeal) -> Result<usize, ResolutionError> {
    Ok(betti_table(ideal, FieldChar::Zero, DEFAULT_LATTICE_CAP)?.proj_dim())
}

/// Depth of S/I via the Auslander-Buchsbaum formula.
pub fn depth_quotient(ideal: &MonomialIdeal) -> Result<i64, ResolutionError> {
    Ok(betti_table(ideal, FieldChar::Zero, DEFAULT_LATTICE_CAP)?.depth())
}

/// Depths of S/I^t for t = 1..=t_max.
pub fn depth_sequence(ideal: &MonomialIdeal, t_max: u32) -> Result<Vec<i64>, ResolutionError> {
    (1..=t_max).map(|t| depth_quotient(&ideal.power(t))).collect()
}

pub const DEFAULT_LATTICE_CAP: usize = 5000;

/// Coefficients of the numerator of the Hilbert series of S/I, computed by
/// inclusion-exclusion over generator subsets. Index = degree. Independent
/// oracle for the Betti table via the alternating-sum identity; only for
/// small generator counts.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    let g = ideal.gens().len();
    assert!(g <= 20, "inclusion-exclusion oracle capped at 20 generators");
    let mut coeffs: BTreeMap<u32, i64> = BTreeMap::new();
    for mask in 0u32..(1 << g) {
        let mut join = Monomial::one(ideal.vars.len());
        let mut bits = 0;
        for (k, gen) in ideal.gens().iter().enumerate() {
            if mask & (1 << k) != 0 {
                join = join.lcm(gen);
                bits += 1;
            }
        }
        *coeffs.entry(join.degree()).or_insert(0) += if bits % 2 == 0 { 1 } else { -1 };
    }
    let max_deg = *coeffs.keys().max().unwrap_or(&0);
    (0..=max_deg).map(|d| coeffs.get(&d).copied().unwrap_or(0)).collect()
}
