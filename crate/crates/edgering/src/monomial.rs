//! Exact monomial and monomial-ideal arithmetic: powers, intersections,
//! colons, minimal primes, symbolic powers, persistence checks, and the
//! comparability/primary-component ideals living on the variable grid.

use std::collections::BTreeSet;

use serde_json::{json, Value};
use thiserror::Error;

use crate::family::{vlabel, GridParams};
use crate::graph::Graph;
use crate::par;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonomialError {
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("need at least two rows and two columns")]
    TooSmall,
    #[error("minimal-prime enumeration exceeded the cap of {0}")]
    PrimeCapExceeded(usize),
}

/// A monomial as an exponent vector over a fixed, ordered variable list.
/// Variable 0 is the largest variable of the ambient order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(k: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[k] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient self / other, assuming divisibility.
    pub fn div(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&k| self.exps[k] > 0).collect()
    }
}

/// A monomial ideal stored by its unique minimal generating set, sorted
/// descending in the ambient lex order so ideal equality is syntactic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub vars: Vec<String>,
    gens: Vec<Monomial>,
}

/// A monomial prime, i.e. a set of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeSupport {
    pub variables: Vec<usize>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    // Sorting ascending by exponent vector is not degree-sorted, so check
    // divisibility in both directions.
    for g in gens {
        if minimal.iter().any(|m| m.divides(&g)) {
            continue;
        }
        minimal.retain(|m| !g.divides(m));
        minimal.push(g);
    }
    // Canonical order: lex-descending exponent vectors.
    minimal.sort_by(|a, b| b.cmp(a));
    minimal
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.exps.len(), vars.len(), "exponent length mismatch");
        }
        MonomialIdeal {
            vars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { vars, gens: vec![] }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// The t-th ordinary power.
    pub fn power(&self, t: u32) -> MonomialIdeal {
        assert!(t >= 1);
        let mut current = self.gens.clone();
        for _ in 1..t {
            let mut next: BTreeSet<Monomial> = BTreeSet::new();
            for a in &current {
                for b in &self.gens {
                    next.insert(a.mul(b));
                }
            }
            current = minimalize(next.into_iter().collect());
        }
        MonomialIdeal::new(self.vars.clone(), current)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.vars, other.vars);
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Colon by a single monomial: (I : m) generatorwise.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(m)))
            .collect();
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Colon by an ideal: (I : J) = intersection of (I : g) over generators g.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.vars, other.vars);
        let mut result: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let q = self.colon_monomial(g);
            result = Some(match result {
                None => q,
                Some(r) => r.intersect(&q),
            });
        }
        result.unwrap_or_else(|| MonomialIdeal::zero(self.vars.clone()))
    }

    /// Minimal primes of a squarefree monomial ideal: the minimal variable
    /// sets meeting the support of every generator (minimal vertex covers
    /// for edge ideals). Branch-and-bound over generators, capped.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSupport>, MonomialError> {
        const CAP: usize = 100_000;
        if !self.is_squarefree() {
            return Err(MonomialError::NotSquarefree);
        }
        let mut covers: Vec<BTreeSet<usize>> = Vec::new();
        let mut chosen = BTreeSet::new();
        self.branch_covers(&mut chosen, &mut covers, CAP)?;
        // Keep the inclusion-minimal covers only.
        let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
        covers.sort_by_key(|c| c.len());
        for c in covers {
            if !minimal.iter().any(|m| m.is_subset(&c)) {
                minimal.push(c);
            }
        }
        let mut primes: Vec<PrimeSupport> = minimal
            .into_iter()
            .map(|c| PrimeSupport {
                variables: c.into_iter().collect(),
            })
            .collect();
        primes.sort();
        Ok(primes)
    }

    fn branch_covers(
        &self,
        chosen: &mut BTreeSet<usize>,
        covers: &mut Vec<BTreeSet<usize>>,
        cap: usize,
    ) -> Result<(), MonomialError> {
        if covers.len() > cap {
            return Err(MonomialError::PrimeCapExceeded(cap));
        }
        let uncovered = self
            .gens
            .iter()
            .find(|g| !g.support().iter().any(|v| chosen.contains(v)));
        match uncovered {
            None => covers.push(chosen.clone()),
            Some(g) => {
                for v in g.support() {
                    if chosen.insert(v) {
                        self.branch_covers(chosen, covers, cap)?;
                        chosen.remove(&v);
                    }
                }
            }
        }
        Ok(())
    }

    /// The t-th symbolic power of a squarefree ideal: the intersection of the
    /// t-th powers of its minimal primes.
    pub fn symbolic_power(&self, t: u32) -> Result<MonomialIdeal, MonomialError> {
        assert!(t >= 1);
        let primes = self.minimal_primes()?;
        let nvars = self.vars.len();
        let powered: Vec<MonomialIdeal> = par::map_collect(primes, |p| {
            let gens = p
                .variables
                .iter()
                .map(|&v| Monomial::var(v, nvars))
                .collect();
            MonomialIdeal::new(self.vars.clone(), gens).power(t)
        });
        let mut result = MonomialIdeal::new(self.vars.clone(), vec![Monomial::one(nvars)]);
        for p in powered {
            result = result.intersect(&p);
        }
        Ok(result)
    }

    /// For each t in 1..=t_max, whether (I^{t+1} : I) = I^t.
    pub fn strong_persistence_check(&self, t_max: u32) -> Vec<bool> {
        (1..=t_max)
            .map(|t| self.power(t + 1).colon(self) == self.power(t))
            .collect()
    }

    /// JSON: the variable list plus one exponent map per minimal generator.
    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .gens
            .iter()
            .map(|g| {
                let map: serde_json::Map<String, Value> = g
                    .support()
                    .into_iter()
                    .map(|k| (self.vars[k].clone(), json!(g.exps[k])))
                    .collect();
                Value::Object(map)
            })
            .collect();
        json!({ "vars": self.vars, "generators": gens })
    }
}

/// The edge ideal of a graph: one squarefree quadric per edge, in the
/// variable order given by the graph's vertex order.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let vars: Vec<String> = g.labels().to_vec();
    let n = vars.len();
    let gens = g
        .edge_ids()
        .map(|(u, v)| Monomial::var(u, n).mul(&Monomial::var(v, n)))
        .collect();
    MonomialIdeal::new(vars, gens)
}

/// Row-major grid variable list x(1,1), x(1,2), ..., x(m,n); earlier index
/// means larger variable in the ambient lex order.
pub fn grid_vars(p: GridParams) -> Vec<String> {
    let mut vars = Vec::with_capacity(p.m * p.n);
    for i in 1..=p.m {
        for j in 1..=p.n {
            vars.push(vlabel(i, j));
        }
    }
    vars
}

pub fn grid_var_index(p: GridParams, i: usize, j: usize) -> usize {
    (i - 1) * p.n + (j - 1)
}

/// The lead-term ideal of the 2-minors of the row/column submatrix:
/// generators x(i,j) x(i',j') for i < i' in `rows` and j < j' in `cols`.
pub fn comparability_initial_ideal(
    p: GridParams,
    rows: &[usize],
    cols: &[usize],
) -> Result<MonomialIdeal, MonomialError> {
    if rows.len() < 2 || cols.len() < 2 {
        return Err(MonomialError::TooSmall);
    }
    let vars = grid_vars(p);
    let nvars = vars.len();
    let mut gens = Vec::new();
    for (a, &i) in rows.iter().enumerate() {
        for &i2 in &rows[a + 1..] {
            for (b, &j) in cols.iter().enumerate() {
                for &j2 in &cols[b + 1..] {
                    let (ilo, ihi) = (i.min(i2), i.max(i2));
                    let (jlo, jhi) = (j.min(j2), j.max(j2));
                    gens.push(
                        Monomial::var(grid_var_index(p, ilo, jlo), nvars)
                            .mul(&Monomial::var(grid_var_index(p, ihi, jhi), nvars)),
                    );
                }
            }
        }
    }
    Ok(MonomialIdeal::new(vars, gens))
}

/// The lead-term ideal of the primary component indexed by a column subset A:
/// all variables over columns in A, plus the comparability ideal of each
/// connected run of the remaining columns (full row set).
pub fn initial_primary_component(p: GridParams, a: &[usize]) -> MonomialIdeal {
    let vars = grid_vars(p);
    let nvars = vars.len();
    let aset: BTreeSet<usize> = a.iter().copied().collect();
    let mut gens: Vec<Monomial> = Vec::new();
    for &j in &aset {
        for i in 1..=p.m {
            gens.push(Monomial::var(grid_var_index(p, i, j), nvars));
        }
    }
    // Components of the column path with A removed are maximal runs of
    // consecutive remaining columns.
    let mut run: Vec<usize> = Vec::new();
    let rows: Vec<usize> = (1..=p.m).collect();
    let flush = |run: &mut Vec<usize>, gens: &mut Vec<Monomial>| {
        if run.len() >= 2 {
            let comp = comparability_initial_ideal(p, &rows, run).unwrap();
            gens.extend(comp.gens().iter().cloned());
        }
        run.clear();
    };
    for j in 1..=p.n {
        if aset.contains(&j) {
            flush(&mut run, &mut gens);
        } else {
            run.push(j);
        }
    }
    flush(&mut run, &mut gens);
    MonomialIdeal::new(vars, gens)
}

/// The edge ideal of the grid shift graph, over the full grid variable list
/// (including isolated-vertex variables, so it is comparable with the
/// primary-component ideals above).
pub fn grid_edge_ideal(p: GridParams) -> MonomialIdeal {
    let vars = grid_vars(p);
    let nvars = vars.len();
    let gens = crate::family::h_edges(p)
        .into_iter()
        .map(|((i, j), (i2, j2))| {
            Monomial::var(grid_var_index(p, i, j), nvars)
                .mul(&Monomial::var(grid_var_index(p, i2, j2), nvars))
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}
