//! Permutations of `{1..n}`, their cycle structure, and exact counting on
//! the symmetric group.
//!
//! Points are 1-based throughout. A [`Permutation`] stores the image of
//! every point; [`CycleDecomposition`] is its canonical disjoint-cycle form
//! and [`SwapPlan`] an ordered list of transpositions.
//!
//! Composition convention: a [`SwapPlan`] `[t1, t2, ..]` denotes the point
//! map "apply `t1`, then `t2`, ...". Applying the same swaps one after the
//! other to a board moves the content of square `s` to `g(s)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::PermError;

/// Largest `n` accepted by [`bfs_swap_distance_oracle`].
pub const BFS_ORACLE_MAX_N: usize = 8;

/// A bijection of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // image[i] is the image of point i + 1
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line image `g(1), .., g(n)`.
    pub fn from_image(image: Vec<usize>) -> Result<Self, PermError> {
        let n = image.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n];
        for &p in &image {
            if p == 0 || p > n {
                return Err(PermError::PointOutOfRange { point: p, n });
            }
            if seen[p - 1] {
                return Err(PermError::RepeatedPoint(p));
            }
            seen[p - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation on `n` points from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut image: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(PermError::PointOutOfRange { point: p, n });
                }
                if seen[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                seen[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                image[p - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    /// The transposition exchanging `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, PermError> {
        if a == b {
            return Err(PermError::DegenerateSwap(a));
        }
        Permutation::from_cycles(n, &[vec![a, b]])
    }

    /// Parses cycle notation such as `(1,2)(3)(4,5,6)` or `()`.
    ///
    /// With `n = None` the size is the largest point mentioned.
    pub fn parse_cycles(text: &str, n: Option<usize>) -> Result<Self, PermError> {
        let cycles = parse_cycle_list(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = match n {
            Some(n) => n,
            None if max == 0 => return Err(PermError::Empty),
            None => max,
        };
        Permutation::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Image of a 1-based point.
    ///
    /// Panics when `point` is outside `1..=n`.
    pub fn apply(&self, point: usize) -> usize {
        self.image[point - 1]
    }

    /// One-line notation `g(1), .., g(n)`.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.len()];
        for (i, &p) in self.image.iter().enumerate() {
            image[p - 1] = i + 1;
        }
        Permutation { image }
    }

    /// `self` first, then `other`: `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Result<Self, PermError> {
        self.check_same_size(other)?;
        Ok(Permutation {
            image: self.image.iter().map(|&p| other.apply(p)).collect(),
        })
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.apply(p) == p).collect()
    }

    /// Number of disjoint cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image[p] - 1;
            }
        }
        count
    }

    fn check_same_size(&self, other: &Permutation) -> Result<(), PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        decompose(self).fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse_cycles(s, None)
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Syntax(text.to_string()))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Syntax(text.to_string()))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let cycle = inner
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| PermError::Syntax(text.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

/// Disjoint cycles of a permutation in canonical order: each cycle starts
/// at its smallest point and cycles are sorted by that point. Fixed points
/// appear as 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `c(g)`.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cycle lengths, in canonical cycle order.
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Cycle lengths sorted in decreasing order (the cycle type).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths = self.lengths();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn to_permutation(&self) -> Permutation {
        // Valid by construction.
        Permutation::from_cycles(self.n, &self.cycles).expect("canonical cycles are disjoint")
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles.iter().filter(|c| c.len() > 1) {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub fn decompose(g: &Permutation) -> CycleDecomposition {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // Scanning starts in increasing order, so every cycle is discovered at
    // its smallest point and cycles come out sorted by leading point.
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p - 1] {
            seen[p - 1] = true;
            cycle.push(p);
            p = g.apply(p);
        }
        cycles.push(cycle);
    }
    CycleDecomposition { n, cycles }
}

/// Fewest swaps turning `g` into `h`: `n - c(g^-1 h)`.
pub fn swap_distance(g: &Permutation, h: &Permutation) -> Result<usize, PermError> {
    g.check_same_size(h)?;
    // g^-1 h as a point map is x -> g^-1(h(x)); h first, then g^-1.
    let quotient = h.then(&g.inverse())?;
    Ok(g.len() - quotient.cycle_count())
}

/// Minimal number of swaps forming `g`, `n - c(g)`.
pub fn swap_count(g: &Permutation) -> usize {
    g.len() - g.cycle_count()
}

/// An ordered sequence of transpositions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SwapPlan {
    swaps: Vec<(usize, usize)>,
}

impl SwapPlan {
    pub fn new(swaps: Vec<(usize, usize)>) -> Result<Self, PermError> {
        if let Some(&(a, _)) = swaps.iter().find(|(a, b)| a == b) {
            return Err(PermError::DegenerateSwap(a));
        }
        Ok(SwapPlan { swaps })
    }

    pub fn swaps(&self) -> &[(usize, usize)] {
        &self.swaps
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    /// The point map obtained by applying the swaps in order.
    pub fn compose(&self, n: usize) -> Result<Permutation, PermError> {
        let mut g = Permutation::identity(n);
        for &(a, b) in &self.swaps {
            g = g.then(&Permutation::transposition(n, a, b)?)?;
        }
        Ok(g)
    }

    /// The plan with the swap at `index` removed.
    pub fn without(&self, index: usize) -> SwapPlan {
        let mut swaps = self.swaps.clone();
        swaps.remove(index);
        SwapPlan { swaps }
    }
}

/// A plan of exactly `n - c(g)` swaps whose composition is `g`.
///
/// Each cycle `(x1, .., xk)` contributes `(xk, xk-1), .., (x3, x2), (x2, x1)`;
/// cycles are emitted in canonical order.
pub fn transposition_plan(g: &Permutation) -> SwapPlan {
    let mut swaps = Vec::with_capacity(swap_count(g));
    for cycle in decompose(g).cycles() {
        for w in cycle.windows(2).rev() {
            swaps.push((w[1], w[0]));
        }
    }
    SwapPlan { swaps }
}

/// Breadth-first distance from the identity to `g` in the Cayley graph of
/// `S_n` generated by all transpositions. Test oracle; `n <= 8`.
pub fn bfs_swap_distance_oracle(g: &Permutation) -> Result<usize, PermError> {
    let n = g.len();
    if n > BFS_ORACLE_MAX_N {
        return Err(PermError::OracleTooLarge {
            n,
            max: BFS_ORACLE_MAX_N,
        });
    }
    let target: Vec<u8> = g.image().iter().map(|&p| p as u8).collect();
    let start: Vec<u8> = (1..=n as u8).collect();
    if start == target {
        return Ok(0);
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((node, dist)) = queue.pop_front() {
        for a in 0..n {
            for b in a + 1..n {
                // node * (a b): swap the images at positions a and b.
                let mut next = node.clone();
                next.swap(a, b);
                if next == target {
                    return Ok(dist + 1);
                }
                if seen.insert(next.clone()) {
                    queue.push_back((next, dist + 1));
                }
            }
        }
    }
    unreachable!("transpositions generate S_n")
}

/// `H_n = 1 + 1/2 + .. + 1/n`, the mean of `c(g)` over `S_n`.
pub fn average_cycle_count(n: usize) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 1..=n {
        sum += BigRational::new(BigUint::one().into(), BigUint::from(k).into());
    }
    sum
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `H_n - ln(n)`.
pub fn harmonic_excess(n: usize) -> f64 {
    rational_to_f64(&average_cycle_count(n)) - (n as f64).ln()
}

/// Renders a rational as a decimal with `places` digits after the point,
/// rounded half up.
pub fn format_decimal(r: &BigRational, places: usize) -> String {
    let scale = num_bigint::BigInt::from(10u32).pow(places as u32);
    let scaled = r * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(1.into(), 2.into())).floor().to_integer();
    let negative = rounded < num_bigint::BigInt::zero();
    let digits = rounded.magnitude().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Entry `k - 1` is the number of permutations of `S_n` with exactly `k`
/// cycles (unsigned Stirling numbers of the first kind).
pub fn cycle_count_distribution(n: usize) -> Vec<BigUint> {
    // row[k] = c(m, k); c(m + 1, k) = m c(m, k) + c(m, k - 1)
    let mut row = vec![BigUint::one()];
    for m in 0..n {
        let mut next = vec![BigUint::zero(); row.len() + 1];
        for (k, value) in row.iter().enumerate() {
            next[k] += value * BigUint::from(m);
            next[k + 1] += value;
        }
        row = next;
    }
    row.remove(0);
    row
}

/// Number of integer partitions of `n`, i.e. conjugacy classes of `S_n`.
pub fn partition_count(n: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in 1..=n {
        for total in part..=n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of permutations of `S_n` that are a product of exactly `k`
/// disjoint 2-cycles: `n! / (2^k k! (n - 2k)!)`.
pub fn k_disjoint_2cycle_count(n: usize, k: usize) -> Result<BigUint, PermError> {
    if 2 * k > n {
        return Err(PermError::TooManyTwoCycles { n, k });
    }
    let denom = (BigUint::one() << k) * factorial(k) * factorial(n - 2 * k);
    Ok(factorial(n) / denom)
}

/// Multinomial coefficient `n! / (k1! k2! ..)`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint, PermError> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(PermError::MultinomialParts { n, sum });
    }
    let denom = parts
        .iter()
        .fold(BigUint::one(), |acc, &k| acc * factorial(k));
    Ok(factorial(n) / denom)
}

/// Approximate base-10 logarithm of a big integer.
pub fn log10(value: &BigUint) -> f64 {
    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    let digits = value.to_string();
    let lead_len = digits.len().min(15);
    let lead: f64 = digits[..lead_len].parse().unwrap_or(1.0);
    lead.log10() + (digits.len() - lead_len) as f64
}
