//! Brute-force reference computations shared by the integration tests.
//! Nothing here calls into the library's pipeline.

#![allow(dead_code)]

use num_rational::Ratio;

pub type Q = Ratio<i64>;

pub const LEVELS: usize = 5;

/// The five interval tests written out one by one.
pub fn literal_grade(count: u64, n: u64) -> Q {
    let c = 5 * count;
    if 4 * n < c {
        Q::new(1, 1)
    } else if 3 * n < c {
        Q::new(3, 4)
    } else if 2 * n < c {
        Q::new(1, 2)
    } else if n < c {
        Q::new(1, 4)
    } else {
        Q::new(0, 1)
    }
}

pub struct BruteForce {
    pub membership: Vec<Q>,
    pub probability: Vec<Q>,
    pub possibility: Vec<Q>,
}

/// Triple loop over all 125 profiles of a three-stage, five-label process.
/// Returns `None` when every membership degree is zero.
pub fn brute_force(n: u64, counts: &[[u64; LEVELS]; 3]) -> Option<BruteForce> {
    let grade = |stage: usize, label: usize| literal_grade(counts[stage][label], n);
    let mut membership = Vec::with_capacity(125);
    for x in 0..LEVELS {
        for y in 0..LEVELS {
            for z in 0..LEVELS {
                let m = if x >= y && y >= z {
                    grade(0, x) * grade(1, y) * grade(2, z)
                } else {
                    Q::new(0, 1)
                };
                membership.push(m);
            }
        }
    }
    let mut total = Q::new(0, 1);
    let mut max = Q::new(0, 1);
    for m in &membership {
        total += m;
        if *m > max {
            max = *m;
        }
    }
    if max == Q::new(0, 1) {
        return None;
    }
    let probability = membership.iter().map(|m| m / total).collect();
    let possibility = membership.iter().map(|m| m / max).collect();
    Some(BruteForce {
        membership,
        probability,
        possibility,
    })
}

/// Uniformly random partition of `n` into five counts.
pub fn random_partition<R: rand::Rng>(rng: &mut R, n: u64) -> [u64; LEVELS] {
    let mut cuts: Vec<u64> = (0..LEVELS - 1).map(|_| rng.gen_range(0..=n)).collect();
    cuts.sort_unstable();
    let mut out = [0; LEVELS];
    let mut prev = 0;
    for (slot, cut) in out.iter_mut().zip(cuts.iter().copied().chain([n])) {
        *slot = cut - prev;
        prev = cut;
    }
    out
}

struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn new() -> Self {
        Self { sum: 0.0, carry: 0.0 }
    }

    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Strife and non-specificity summed from the tail with compensation.
/// `values` must already be non-increasing.
pub fn compensated_measures(values: &[f64]) -> (f64, f64) {
    let m = values.len();
    let mut prefix = Vec::with_capacity(m);
    let mut acc = Kahan::new();
    for &v in values {
        acc.add(v);
        prefix.push(acc.sum);
    }
    let mut strife = Kahan::new();
    let mut nonspec = Kahan::new();
    for i in (2..=m).rev() {
        let next = if i < m { values[i] } else { 0.0 };
        let jump = values[i - 1] - next;
        if jump == 0.0 {
            continue;
        }
        let fi = i as f64;
        strife.add(jump * (fi.ln() - prefix[i - 1].ln()) / std::f64::consts::LN_2);
        nonspec.add(jump * fi.ln() / std::f64::consts::LN_2);
    }
    (strife.sum, nonspec.sum)
}

/// Entropy summed in descending weight order with compensation.
pub fn compensated_entropy(weights: &[f64], normalizer: u64) -> f64 {
    let mut sorted: Vec<f64> = weights.iter().copied().filter(|&w| w > 0.0).collect();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut acc = Kahan::new();
    for w in sorted {
        acc.add(-w * w.ln());
    }
    acc.sum / (normalizer as f64).ln()
}

/// Parses a fuzzy set written as `{(a,0),(b,0),(c, 0,5),...}` where the
/// decimal separator may be a comma. Returns exact values in label order.
pub fn parse_printed_set(text: &str) -> Vec<(String, Q)> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(open) = rest.find('(') {
        let close = rest[open..].find(')').unwrap() + open;
        let inner = &rest[open + 1..close];
        let (label, value) = inner.split_once(',').unwrap();
        out.push((label.trim().to_string(), parse_decimal(&value.trim().replace(',', "."))));
        rest = &rest[close + 1..];
    }
    out
}

pub fn parse_decimal(text: &str) -> Q {
    match text.split_once('.') {
        None => Q::from_integer(text.parse().unwrap()),
        Some((int, frac)) => {
            let den = 10i64.pow(frac.len() as u32);
            let int: i64 = if int.is_empty() { 0 } else { int.parse().unwrap() };
            Q::new(int * den + frac.parse::<i64>().unwrap(), den)
        }
    }
}

pub struct TableRow {
    pub profile: [usize; 3],
    pub columns: [f64; 6],
}

/// Reads `fixtures/table1.csv`. Columns: m1, r1, m2, r2, f, r (indices 0..6).
pub fn table1() -> Vec<TableRow> {
    let text = include_str!("../fixtures/table1.csv");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            let label = |s: &str| (s.as_bytes()[0] - b'a') as usize;
            let mut columns = [0.0; 6];
            for (slot, f) in columns.iter_mut().zip(&fields[3..]) {
                *slot = f.parse().unwrap();
            }
            TableRow {
                profile: [label(fields[0]), label(fields[1]), label(fields[2])],
                columns,
            }
        })
        .collect()
}

pub fn profile_index(p: [usize; 3]) -> usize {
    p[0] * 25 + p[1] * 5 + p[2]
}
