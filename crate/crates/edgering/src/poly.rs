//! Sparse exact-integer multivariate polynomial arithmetic under the lex
//! order with the grid variables ranked row-major (x_{1,1} largest), the
//! binomial edge ideal of a pair of graphs, a desk-scale Buchberger engine,
//! the five rewriting identities behind the initial-algebra argument, and the
//! check that taking initial ideals commutes with taking powers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use itertools::Itertools;
use serde_json::{json, Value};
use thiserror::Error;

use crate::family::GridParams;
use crate::graph::{Graph, GraphError};
use crate::monomial::{grid_var_index, grid_vars, Monomial, MonomialIdeal};
use crate::par;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("S-pair budget of {budget} exhausted after {processed} pairs")]
    BudgetExceeded { budget: usize, processed: usize },
    #[error("identity {identity} fails at index tuple {tuple:?}")]
    IdentityFailure { identity: &'static str, tuple: Vec<usize> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Lexicographic term order: variable 0 is the largest, so for the row-major
/// grid indexing this is exactly x_{1,1} > x_{1,2} > ... > x_{m,n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermOrder {
    pub num_vars: usize,
}

impl TermOrder {
    pub fn new(num_vars: usize) -> Self {
        TermOrder { num_vars }
    }

    /// Compare two monomials lexicographically.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for k in 0..self.num_vars {
            match a.exps[k].cmp(&b.exps[k]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// The extension to the Rees variable: terms u*T^i and v*T^j are compared
    /// by T-degree first, then by the base order. (Used by the rewriting
    /// identities, where each product carries a T-degree equal to its number
    /// of quadric factors.)
    pub fn cmp_with_tdeg(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        a.1.cmp(&b.1).then_with(|| self.cmp(a.0, b.0))
    }
}

/// A multivariate polynomial with exact integer coefficients. Terms are kept
/// sorted strictly descending under the lex order; no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    pub num_vars: usize,
    terms: Vec<(Monomial, i64)>,
}

impl SparsePolynomial {
    pub fn zero(num_vars: usize) -> Self {
        SparsePolynomial { num_vars, terms: Vec::new() }
    }

    pub fn from_terms(num_vars: usize, raw: Vec<(Monomial, i64)>) -> Self {
        let ord = TermOrder::new(num_vars);
        let mut combined: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (m, c) in raw {
            assert_eq!(m.exps.len(), num_vars);
            let e = combined.entry(m).or_insert(0);
            *e = e.checked_add(c).expect("coefficient overflow");
        }
        let mut terms: Vec<(Monomial, i64)> =
            combined.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        SparsePolynomial { num_vars, terms }
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let num_vars = m.exps.len();
        SparsePolynomial::from_terms(num_vars, vec![(m, c)])
    }

    pub fn terms(&self) -> &[(Monomial, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lead term under the lex order.
    pub fn lead(&self) -> Option<(&Monomial, i64)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let ord = TermOrder::new(self.num_vars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (0, 0);
        while a < self.terms.len() || b < other.terms.len() {
            let pick = if a == self.terms.len() {
                Ordering::Less
            } else if b == other.terms.len() {
                Ordering::Greater
            } else {
                ord.cmp(&self.terms[a].0, &other.terms[b].0)
            };
            match pick {
                Ordering::Greater => {
                    out.push(self.terms[a].clone());
                    a += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[b].clone());
                    b += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[a]
                        .1
                        .checked_add(other.terms[b].1)
                        .expect("coefficient overflow");
                    if c != 0 {
                        out.push((self.terms[a].0.clone(), c));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        SparsePolynomial { num_vars: self.num_vars, terms: out }
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply by a single term c * x^m.
    pub fn mul_term(&self, m: &Monomial, c: i64) -> Self {
        if c == 0 {
            return SparsePolynomial::zero(self.num_vars);
        }
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), k.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (m2, c2) in &other.terms {
                raw.push((m.mul(m2), c.checked_mul(*c2).expect("coefficient overflow")));
            }
        }
        SparsePolynomial::from_terms(self.num_vars, raw)
    }

    /// Divide out the integer content and make the lead coefficient positive.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g: i64 = 0;
        for &(_, c) in &self.terms {
            g = num_integer::gcd(g, c.abs());
            if g == 1 {
                break;
            }
        }
        let sign = if self.terms[0].1 < 0 { -1 } else { 1 };
        let d = g * sign;
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / d)).collect(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .terms
            .iter()
            .map(|(m, c)| json!({ "exps": m.exps, "coeff": c }))
            .collect::<Vec<_>>())
    }

    /// Render with the given variable names, terms in lex order.
    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (k, &e) in m.exps.iter().enumerate() {
                if e == 1 {
                    factors.push(vars[k].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", vars[k], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// An ideal given by a finite list of nonzero generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialIdeal {
    pub num_vars: usize,
    pub gens: Vec<SparsePolynomial>,
}

impl PolynomialIdeal {
    pub fn new(num_vars: usize, gens: Vec<SparsePolynomial>) -> Self {
        assert!(gens.iter().all(|g| !g.is_zero()), "generators must be nonzero");
        PolynomialIdeal { num_vars, gens }
    }

    /// All products of `t` generators (with repetition), deduplicated; the
    /// natural generating set of the t-th power.
    pub fn power_generators(&self, t: u32) -> PolynomialIdeal {
        assert!(t >= 1);
        let mut gens: Vec<SparsePolynomial> = self
            .gens
            .iter()
            .combinations_with_replacement(t as usize)
            .map(|combo| {
                let mut prod = combo[0].clone();
                for g in &combo[1..] {
                    prod = prod.mul(g);
                }
                prod.normalize()
            })
            .collect();
        gens.dedup();
        PolynomialIdeal::new(self.num_vars, gens)
    }
}

pub fn complete_graph(k: usize) -> Graph {
    let mut g = Graph::new((1..=k).map(|v| v.to_string()).collect());
    for (a, b) in (1..=k).tuple_combinations() {
        g.add_edge(&a.to_string(), &b.to_string()).unwrap();
    }
    g
}

pub fn path_graph(k: usize) -> Graph {
    let mut g = Graph::new((1..=k).map(|v| v.to_string()).collect());
    for v in 1..k {
        g.add_edge(&v.to_string(), &(v + 1).to_string()).unwrap();
    }
    g
}

/// The 2-minor [i,j | k,l] = x_{i,k} x_{j,l} - x_{i,l} x_{j,k} on the m-by-n
/// grid of variables (all indices 1-based).
pub fn minor(p: GridParams, i: usize, j: usize, k: usize, l: usize) -> SparsePolynomial {
    let nv = p.m * p.n;
    let v = |r, c| Monomial::var(grid_var_index(p, r, c), nv);
    SparsePolynomial::from_terms(
        nv,
        vec![
            (v(i, k).mul(&v(j, l)), 1),
            (v(i, l).mul(&v(j, k)), -1),
        ],
    )
}

/// Binomial edge ideal of the pair (G1, G2): one binomial per edge pair,
/// with variables x_{i,k} for i a vertex of G1 and k a vertex of G2, laid out
/// row-major. The sign convention takes i < j and k < l.
pub fn pair_generators(g1: &Graph, g2: &Graph) -> PolynomialIdeal {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let p = GridParams::new(n1, n2);
    let mut gens = Vec::new();
    for (i, j) in g1.edge_ids() {
        for (k, l) in g2.edge_ids() {
            gens.push(minor(p, i + 1, j + 1, k + 1, l + 1));
        }
    }
    PolynomialIdeal::new(n1 * n2, gens)
}

/// The binomial edge ideal of (K_m, P_n) on the m-by-n grid.
pub fn path_pair_ideal(p: GridParams) -> PolynomialIdeal {
    pair_generators(&complete_graph(p.m), &path_graph(p.n))
}

/// The algebra retraction onto a sub-grid: substitutes 0 for every variable
/// x_{i,j} with i not in `keep_rows` or j not in `keep_cols` (1-based).
pub fn retraction_map(
    g: &SparsePolynomial,
    p: GridParams,
    keep_rows: &[usize],
    keep_cols: &[usize],
) -> SparsePolynomial {
    let kept = |idx: usize| {
        let (i, j) = (idx / p.n + 1, idx % p.n + 1);
        keep_rows.contains(&i) && keep_cols.contains(&j)
    };
    SparsePolynomial {
        num_vars: g.num_vars,
        terms: g
            .terms
            .iter()
            .filter(|(m, _)| m.support().iter().all(|&v| kept(v)))
            .cloned()
            .collect(),
    }
}

/// One step of lead-term reduction: if the lead monomial of `f` is divisible
/// by the lead monomial of some basis element, combine to cancel it.
/// Coefficients stay integral: with d = gcd of the two lead coefficients, the
/// step is f := (lc(g)/d) f - (lc(f)/d) x^(lm(f)-lm(g)) g, then content out.
fn reduce_lead(f: &SparsePolynomial, basis: &[SparsePolynomial]) -> SparsePolynomial {
    let mut f = f.clone();
    'outer: loop {
        let Some((lm, lc)) = f.lead().map(|(m, c)| (m.clone(), c)) else {
            return f;
        };
        for g in basis {
            let (gm, gc) = g.lead().expect("nonzero basis");
            if gm.divides(&lm) {
                let d = num_integer::gcd(lc, gc);
                let shifted = g.mul_term(&lm.div(gm), lc / d);
                f = f.mul_term(&Monomial::one(f.num_vars), gc / d).sub(&shifted);
                f = f.normalize();
                continue 'outer;
            }
        }
        return f;
    }
}

/// Full normal form: every term is reduced, not just the lead.
fn reduce_full(f: &SparsePolynomial, basis: &[SparsePolynomial]) -> SparsePolynomial {
    let nv = f.num_vars;
    let mut rest = f.clone();
    let mut done = SparsePolynomial::zero(nv);
    loop {
        rest = reduce_lead(&rest, basis);
        let Some((lm, lc)) = rest.lead().map(|(m, c)| (m.clone(), c)) else {
            break;
        };
        // Lead term now irreducible; move it to the result.
        done = done.add(&SparsePolynomial::monomial(lm.clone(), lc));
        rest = rest.sub(&SparsePolynomial::monomial(lm, lc));
    }
    done.normalize()
}

fn s_polynomial(f: &SparsePolynomial, g: &SparsePolynomial) -> SparsePolynomial {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let lcm = fm.lcm(gm);
    let d = num_integer::gcd(fc, gc);
    f.mul_term(&lcm.div(fm), gc / d)
        .sub(&g.mul_term(&lcm.div(gm), fc / d))
        .normalize()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerResult {
    /// Reduced Groebner basis: primitive, positive lead coefficients, no lead
    /// term dividing another, tails fully reduced, sorted by lead term.
    pub basis: Vec<SparsePolynomial>,
    pub pairs_processed: usize,
    pub pairs_skipped_coprime: usize,
    pub reductions_to_zero: usize,
}

pub const DEFAULT_SPAIR_BUDGET: usize = 100_000;

/// Buchberger's algorithm with the normal (degree-of-lcm) selection strategy
/// and a hard S-pair budget. Pending pairs of each round are reduced
/// concurrently against a snapshot of the basis; the final interreduction
/// makes the output independent of the schedule.
pub fn buchberger(
    ideal: &PolynomialIdeal,
    budget: usize,
) -> Result<GroebnerResult, PolyError> {
    let nv = ideal.num_vars;
    let ord = TermOrder::new(nv);
    let mut basis: Vec<SparsePolynomial> = Vec::new();
    for g in &ideal.gens {
        let g = g.normalize();
        if !g.is_zero() && !basis.contains(&g) {
            basis.push(g);
        }
    }

    // Min-heap on (lcm degree, i, j) via negated ordering.
    #[derive(PartialEq, Eq)]
    struct Pair(u32, usize, usize);
    impl Ord for Pair {
        fn cmp(&self, other: &Self) -> Ordering {
            (other.0, other.1, other.2).cmp(&(self.0, self.1, self.2))
        }
    }
    impl PartialOrd for Pair {
        fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
            Some(self.cmp(other))
        }
    }

    let lcm_deg = |basis: &[SparsePolynomial], i: usize, j: usize| {
        basis[i].lead().unwrap().0.lcm(basis[j].lead().unwrap().0).degree()
    };

    let mut queue: BinaryHeap<Pair> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in 0..i {
            queue.push(Pair(lcm_deg(&basis, i, j), j, i));
        }
    }

    let mut pairs_processed = 0usize;
    let mut pairs_skipped_coprime = 0usize;
    let mut reductions_to_zero = 0usize;

    while !queue.is_empty() {
        // Drain the current minimal lcm degree as one concurrent batch.
        let min_deg = queue.peek().unwrap().0;
        let mut batch: Vec<(usize, usize)> = Vec::new();
        while queue.peek().is_some_and(|p| p.0 == min_deg) {
            let Pair(_, i, j) = queue.pop().unwrap();
            let (fm, _) = basis[i].lead().unwrap();
            let (gm, _) = basis[j].lead().unwrap();
            if fm.gcd(gm).degree() == 0 {
                pairs_skipped_coprime += 1;
            } else {
                batch.push((i, j));
            }
        }
        pairs_processed += batch.len();
        if pairs_processed > budget {
            return Err(PolyError::BudgetExceeded { budget, processed: pairs_processed });
        }
        let snapshot = basis.clone();
        let remainders = par::map_collect(batch, |(i, j)| {
            reduce_lead(&s_polynomial(&snapshot[i], &snapshot[j]), &snapshot)
        });
        let batch_len = remainders.len();
        let mut fresh: Vec<SparsePolynomial> =
            remainders.into_iter().filter(|r| !r.is_zero()).collect();
        reductions_to_zero += batch_len - fresh.len();
        // Deterministic insertion order regardless of the parallel schedule.
        fresh.sort_by(|a, b| ord.cmp(a.lead().unwrap().0, b.lead().unwrap().0));
        for r in fresh {
            // Re-reduce against additions made earlier in this round.
            let r = reduce_lead(&r, &basis);
            if r.is_zero() || basis.contains(&r) {
                continue;
            }
            basis.push(r);
            let k = basis.len() - 1;
            for i in 0..k {
                queue.push(Pair(lcm_deg(&basis, i, k), i, k));
            }
        }
    }

    // Interreduce: minimalize lead terms, then fully reduce tails.
    let mut minimal: Vec<SparsePolynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.lead().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.lead().unwrap().0;
            j != k && hm.divides(lm) && (hm != lm || j < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let reduced: Vec<SparsePolynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<SparsePolynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, h)| h.clone())
                .collect();
            reduce_full(&minimal[k], &others)
        })
        .collect();
    let mut reduced: Vec<SparsePolynomial> =
        reduced.into_iter().filter(|g| !g.is_zero()).collect();
    reduced.sort_by(|a, b| ord.cmp(b.lead().unwrap().0, a.lead().unwrap().0));

    // Post-hoc audit: every S-pair of the reduced basis reduces to zero.
    let audit: Vec<bool> = {
        let pairs: Vec<(usize, usize)> =
            (0..reduced.len()).flat_map(|i| (0..i).map(move |j| (j, i))).collect();
        par::map_collect(pairs, |(i, j)| {
            reduce_lead(&s_polynomial(&reduced[i], &reduced[j]), &reduced).is_zero()
        })
    };
    assert!(audit.iter().all(|&ok| ok), "reduced basis failed the S-pair audit");

    Ok(GroebnerResult {
        basis: reduced,
        pairs_processed,
        pairs_skipped_coprime,
        reductions_to_zero,
    })
}

/// The initial ideal of a Groebner basis, as a monomial ideal over the given
/// variable names.
pub fn initial_ideal(gb: &[SparsePolynomial], vars: Vec<String>) -> MonomialIdeal {
    MonomialIdeal::new(
        vars,
        gb.iter().map(|g| g.lead().expect("nonzero").0.clone()).collect(),
    )
}

/// Does ini(J^t) equal (ini J)^t for the grid family? Expands the natural
/// generators of J^t, runs Buchberger, extracts and minimalizes the lead
/// terms, and compares with the t-th power of the edge ideal of H.
pub fn ini_power_commutes(p: GridParams, t: u32, budget: usize) -> Result<bool, PolyError> {
    let j = path_pair_ideal(p);
    let jt = j.power_generators(t);
    let gb = buchberger(&jt, budget)?;
    let ini = initial_ideal(&gb.basis, grid_vars(p));
    let expected = crate::monomial::grid_edge_ideal(p).power(t);
    Ok(ini == expected)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SagbiReport {
    /// (identity label, number of admissible index tuples verified).
    pub per_identity: Vec<(&'static str, usize)>,
}

impl SagbiReport {
    pub fn total_tuples(&self) -> usize {
        self.per_identity.iter().map(|&(_, k)| k).sum()
    }
}

/// Verify the five rewriting identities used to show the natural generators
/// stay a generating set after taking initial terms degree by degree. Each
/// identity is checked as an exact polynomial identity (left minus right is
/// zero) for every admissible index tuple, together with the lead-term side
/// condition: the two left-hand products share a common lead monomial (which
/// cancels), and the right-hand products have pairwise distinct lead terms
/// strictly below it under the T-degree-then-lex order.
pub fn verify_sagbi_identities(p: GridParams) -> Result<SagbiReport, PolyError> {
    let (m, n) = (p.m, p.n);
    let nv = m * n;
    let ord = TermOrder::new(nv);
    let v = |r: usize, c: usize| Monomial::var(grid_var_index(p, r, c), nv);
    let mono2 = |a: Monomial, b: Monomial| SparsePolynomial::monomial(a.mul(&b), 1);
    let mono1 = |a: Monomial| SparsePolynomial::monomial(a, 1);

    // Side-condition checker. `lhs` / `rhs` list the products of each side
    // with signs and T-degrees; the identity asserts sum(lhs) == sum(rhs).
    let check = |identity: &'static str,
                 tuple: Vec<usize>,
                 lhs: Vec<(SparsePolynomial, i64, usize)>,
                 rhs: Vec<(SparsePolynomial, i64, usize)>|
     -> Result<(), PolyError> {
        let fail = || PolyError::IdentityFailure { identity, tuple: tuple.clone() };
        let sum = |side: &[(SparsePolynomial, i64, usize)]| {
            side.iter().fold(SparsePolynomial::zero(nv), |acc, (g, c, _)| {
                acc.add(&g.mul_term(&Monomial::one(nv), *c))
            })
        };
        if !sum(&lhs).sub(&sum(&rhs)).is_zero() {
            return Err(fail());
        }
        // The uncancelled lead of the left side: all left products must share
        // one lead monomial and one T-degree.
        let (l0, _, t0) = &lhs[0];
        let naive_lead = l0.lead().ok_or_else(fail)?.0.clone();
        for (g, _, td) in &lhs {
            if g.lead().ok_or_else(fail)?.0 != &naive_lead || td != t0 {
                return Err(fail());
            }
        }
        // Right products: lead terms pairwise distinct, strictly below.
        let leads: Vec<(Monomial, usize)> = rhs
            .iter()
            .map(|(g, _, td)| g.lead().map(|(mm, _)| (mm.clone(), *td)).ok_or_else(fail))
            .collect::<Result<_, _>>()?;
        for (a, b) in leads.iter().tuple_combinations() {
            if a == b {
                return Err(fail());
            }
        }
        for (mm, td) in &leads {
            if ord.cmp_with_tdeg((mm, *td), (&naive_lead, *t0)) != Ordering::Less {
                return Err(fail());
            }
        }
        Ok(())
    };

    let mut per_identity = Vec::new();

    // Identity 1: two disjoint quadric generators exchanged against each
    // other's monomial factors.
    let mut count = 0;
    let edges: Vec<(usize, usize, usize)> = (1..=m)
        .tuple_combinations()
        .flat_map(|(i, j)| (1..n).map(move |k| (i, j, k)))
        .collect();
    for &(i, j, k) in &edges {
        for &(i2, j2, k2) in &edges {
            let e1 = [(i, k), (j, k + 1)];
            let e2 = [(i2, k2), (j2, k2 + 1)];
            if e1.iter().any(|x| e2.contains(x)) {
                continue;
            }
            check(
                "exchange of disjoint quadrics",
                vec![i, j, k, i2, j2, k2],
                vec![
                    (mono2(v(i, k), v(j, k + 1)).mul(&minor(p, i2, j2, k2, k2 + 1)), 1, 1),
                    (mono2(v(i2, k2), v(j2, k2 + 1)).mul(&minor(p, i, j, k, k + 1)), -1, 1),
                ],
                vec![
                    (mono2(v(i, k + 1), v(j, k)).mul(&minor(p, i2, j2, k2, k2 + 1)), 1, 1),
                    (mono2(v(i2, k2 + 1), v(j2, k2)).mul(&minor(p, i, j, k, k + 1)), -1, 1),
                ],
            )?;
            count += 1;
        }
    }
    per_identity.push(("exchange of disjoint quadrics", count));

    // Identity 2: three rows sharing the left column vertex.
    let mut count = 0;
    for (i1, i2, i3) in (1..=m).tuple_combinations() {
        for k in 1..n {
            check(
                "three rows, shared left vertex",
                vec![i1, i2, i3, k],
                vec![
                    (mono1(v(i2, k)).mul(&minor(p, i1, i3, k, k + 1)), 1, 1),
                    (mono1(v(i1, k)).mul(&minor(p, i2, i3, k, k + 1)), -1, 1),
                ],
                vec![(mono1(v(i3, k)).mul(&minor(p, i1, i2, k, k + 1)), 1, 1)],
            )?;
            count += 1;
        }
    }
    per_identity.push(("three rows, shared left vertex", count));

    // Identity 3: a path across three consecutive columns.
    let mut count = 0;
    for (i1, i2, i3) in (1..=m).tuple_combinations() {
        for k in 1..n.saturating_sub(1) {
            check(
                "three rows across three columns",
                vec![i1, i2, i3, k],
                vec![
                    (mono1(v(i3, k + 2)).mul(&minor(p, i1, i2, k, k + 1)), 1, 1),
                    (mono1(v(i1, k)).mul(&minor(p, i2, i3, k + 1, k + 2)), -1, 1),
                ],
                vec![
                    (mono1(v(i3, k)).mul(&minor(p, i1, i2, k + 1, k + 2)), 1, 1),
                    (mono1(v(i2, k + 2)).mul(&minor(p, i1, i3, k, k + 1)), 1, 1),
                    (mono1(v(i2, k)).mul(&minor(p, i1, i3, k + 1, k + 2)), -1, 1),
                    (mono1(v(i1, k + 2)).mul(&minor(p, i2, i3, k, k + 1)), -1, 1),
                ],
            )?;
            count += 1;
        }
    }
    per_identity.push(("three rows across three columns", count));

    // Identity 4: a four-cycle spanning two column strips.
    let mut count = 0;
    for combo in (1..=m).combinations(4) {
        let (i1, i2, i4, i3) = (combo[0], combo[1], combo[2], combo[3]);
        for k in 1..n.saturating_sub(1) {
            check(
                "four-cycle across two strips",
                vec![i1, i2, i4, i3, k],
                vec![
                    (minor(p, i1, i2, k, k + 1).mul(&minor(p, i4, i3, k + 1, k + 2)), 1, 2),
                    (minor(p, i1, i4, k, k + 1).mul(&minor(p, i2, i3, k + 1, k + 2)), -1, 2),
                ],
                vec![
                    (minor(p, i1, i2, k + 1, k + 2).mul(&minor(p, i4, i3, k, k + 1)), -1, 2),
                    (minor(p, i1, i4, k + 1, k + 2).mul(&minor(p, i2, i3, k, k + 1)), 1, 2),
                    (minor(p, i2, i4, k, k + 1).mul(&minor(p, i1, i3, k + 1, k + 2)), -1, 2),
                    (minor(p, i2, i4, k + 1, k + 2).mul(&minor(p, i1, i3, k, k + 1)), -1, 2),
                ],
            )?;
            count += 1;
        }
    }
    per_identity.push(("four-cycle across two strips", count));

    // Identity 5: the Pluecker relation for a four-cycle inside one strip.
    let mut count = 0;
    for combo in (1..=m).combinations(4) {
        let (i1, i3, i2, i4) = (combo[0], combo[1], combo[2], combo[3]);
        for k in 1..n {
            check(
                "one-strip Pluecker relation",
                vec![i1, i3, i2, i4, k],
                vec![
                    (minor(p, i1, i2, k, k + 1).mul(&minor(p, i3, i4, k, k + 1)), 1, 2),
                    (minor(p, i1, i4, k, k + 1).mul(&minor(p, i3, i2, k, k + 1)), -1, 2),
                ],
                vec![(minor(p, i1, i3, k, k + 1).mul(&minor(p, i2, i4, k, k + 1)), 1, 2)],
            )?;
            count += 1;
        }
    }
    per_identity.push(("one-strip Pluecker relation", count));

    Ok(SagbiReport { per_identity })
}

/// The cycle binomials of the fiber-ring presentation of a bipartite graph:
/// one variable T_e per edge (ranked in sorted edge order), and for each
/// chordless 4-cycle (c1,c2,c3,c4) the binomial T_{c1c2} T_{c3c4} -
/// T_{c2c3} T_{c4c1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBinomials {
    /// Name per T-variable: "T{u|v}" in sorted edge order.
    pub t_vars: Vec<String>,
    pub binomials: Vec<SparsePolynomial>,
}

pub fn presentation_cycle_binomials(g: &Graph) -> Result<CycleBinomials, GraphError> {
    if g.bipartition().is_none() {
        return Err(GraphError::NonBipartite);
    }
    let edges: Vec<(usize, usize)> = g.edge_ids().collect();
    let edge_index: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let t_vars: Vec<String> = edges
        .iter()
        .map(|&(a, b)| format!("T{{{}|{}}}", g.label(a), g.label(b)))
        .collect();
    let nv = edges.len();
    let eidx = |a: usize, b: usize| edge_index[&(a.min(b), a.max(b))];
    let binomials = g
        .chordless_cycles(4)
        .into_iter()
        .filter(|c| c.len() == 4)
        .map(|c| {
            let ids: Vec<usize> = c.iter().map(|l| g.vertex_id(l).unwrap()).collect();
            let t = |a: usize, b: usize| Monomial::var(eidx(ids[a], ids[b]), nv);
            SparsePolynomial::from_terms(
                nv,
                vec![
                    (t(0, 1).mul(&t(2, 3)), 1),
                    (t(1, 2).mul(&t(3, 0)), -1),
                ],
            )
        })
        .collect();
    Ok(CycleBinomials { t_vars, binomials })
}
