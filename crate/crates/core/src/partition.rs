//! Partitions with integer or half-integer parts, their diagrams, and the
//! dictionary between partitions and Hermite degree sequences.
//!
//! Parts are stored as twice their value so half-integers stay exact.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers or half-integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    twice: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an integer partition; parts are sorted into decreasing order.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::from_twice(parts.into_iter().map(|p| 2 * p))
    }

    /// Builds a partition from twice-values (so `5` means `5/2`).
    pub fn from_twice(twice: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut twice: Vec<u32> = twice.into_iter().collect();
        if twice.contains(&0) {
            return Err(Error::NonPositivePart("0".into()));
        }
        twice.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { twice })
    }

    pub fn twice_parts(&self) -> &[u32] {
        &self.twice
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|t| t % 2 == 0)
    }

    /// Integer parts, or `None` when some part is a half-integer.
    pub fn integer_parts(&self) -> Option<Vec<u32>> {
        self.is_integral()
            .then(|| self.twice.iter().map(|t| t / 2).collect())
    }

    fn require_integral(&self) -> Result<Vec<u32>> {
        self.integer_parts()
            .ok_or_else(|| Error::HalfIntegerPartition(self.to_string()))
    }

    /// Twice the weight `|λ|`.
    pub fn weight_twice(&self) -> u64 {
        self.twice.iter().map(|&t| t as u64).sum()
    }

    /// The weight `|λ|` when it is an integer.
    pub fn weight(&self) -> Option<u64> {
        let w = self.weight_twice();
        w.is_multiple_of(2).then_some(w / 2)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.twice.windows(2).all(|w| w[0] > w[1])
    }

    /// Doubles every part and repeats it twice: `(5,3,2) -> (10,10,6,6,4,4)`.
    pub fn doubled(&self) -> Partition {
        let twice = self
            .twice
            .iter()
            .flat_map(|&t| [2 * t, 2 * t])
            .collect();
        Partition { twice }
    }

    /// Repeats every part twice without scaling: `(5,3) -> (5,5,3,3)`.
    pub fn repeated_twice(&self) -> Partition {
        let twice = self.twice.iter().flat_map(|&t| [t, t]).collect();
        Partition { twice }
    }

    /// Transposed Young diagram. Integer partitions only.
    pub fn conjugate(&self) -> Result<Partition> {
        let parts = self.require_integral()?;
        let first = parts.first().copied().unwrap_or(0);
        let conj = (1..=first).map(|j| parts.iter().filter(|&&p| p >= j).count() as u32);
        Partition::new(conj)
    }

    /// `k_i = λ_i + n - i` for `i = 1..n`.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let n = self.twice.len() as u32;
        let twice = self
            .twice
            .iter()
            .enumerate()
            .map(|(i, &t)| t + 2 * (n - 1 - i as u32))
            .collect();
        DegreeSequence { twice }
    }

    /// Multiplicity of `z = 0` as a zero of the Wronskian, `d(d+1)/2` with
    /// `d` the excess of odd over even degrees.
    pub fn origin_multiplicity(&self) -> Result<u64> {
        self.require_integral()?;
        let ks = self.degree_sequence().integer_indices()?;
        Ok(origin_multiplicity_of_degrees(&ks))
    }

    pub fn diagram_points(&self, convention: Convention) -> DiagramPoints {
        let mut points = Vec::with_capacity(4 * self.weight_twice() as usize);
        for (row, &t) in self.twice.iter().enumerate() {
            // quarter units: box centres sit on odd multiples of 2
            let y = 4 * row as i64 + 2;
            let full = (t / 2) as i64;
            let half = t % 2 == 1;
            match convention {
                Convention::Standard | Convention::French => {
                    let ys = if convention == Convention::Standard { -y } else { y };
                    for j in 0..full {
                        points.push(Point4 { x: 4 * j + 2, y: ys });
                    }
                    if half {
                        points.push(Point4 { x: 4 * full + 1, y: ys });
                    }
                }
                Convention::FourQuadrant => {
                    let xs: Vec<i64> = if half {
                        (-full..=full).map(|j| 4 * j).collect()
                    } else {
                        (0..full).flat_map(|j| [4 * j + 2, -(4 * j + 2)]).collect()
                    };
                    for &ys in &[y, -y] {
                        points.extend(xs.iter().map(|&x| Point4 { x, y: ys }));
                    }
                }
            }
        }
        points.sort_unstable();
        DiagramPoints { convention, points }
    }
}

/// `d(d+1)/2` where `d = #odd - #even` over the given degrees.
pub fn origin_multiplicity_of_degrees(ks: &[u32]) -> u64 {
    let odd = ks.iter().filter(|k| *k % 2 == 1).count() as i64;
    let d = odd - (ks.len() as i64 - odd);
    (d * (d + 1) / 2) as u64
}

/// All integer partitions of `weight`, in reverse lexicographic order.
pub fn partitions_of(weight: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { twice: cur.iter().map(|p| 2 * p).collect() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, weight, &mut Vec::new(), &mut out);
    out
}

/// Partitions with distinct parts, largest part at most `max_part` and at
/// most `max_len` parts, excluding the empty partition.
pub fn distinct_partitions(max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(max: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if !cur.is_empty() {
            out.push(Partition { twice: cur.iter().map(|p| 2 * p).collect() });
        }
        if left == 0 {
            return;
        }
        for p in (1..=max).rev() {
            cur.push(p);
            rec(p - 1, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_part, max_len, &mut Vec::new(), &mut out);
    out
}

fn fmt_twice(t: u32) -> String {
    if t.is_multiple_of(2) {
        (t / 2).to_string()
    } else {
        format!("{t}/2")
    }
}

impl fmt::Display for Partition {
    /// Descending parts in parentheses, repeated parts in power notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &t in &self.twice {
            match groups.last_mut() {
                Some((v, r)) if *v == t => *r += 1,
                _ => groups.push((t, 1)),
            }
        }
        let body: Vec<String> = groups
            .into_iter()
            .map(|(t, r)| {
                if r == 1 {
                    fmt_twice(t)
                } else {
                    format!("{}^{r}", fmt_twice(t))
                }
            })
            .collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; each part is `a`, `a/2` or either followed by
    /// `^r` for `r` repetitions. Surrounding parentheses are optional.
    fn from_str(text: &str) -> Result<Self> {
        let s = text.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut twice = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (value, reps) = match token.split_once('^') {
                Some((v, r)) => {
                    let r: u32 = r
                        .trim()
                        .parse()
                        .map_err(|_| Error::Syntax(format!("bad repetition count in {token:?}")))?;
                    if r == 0 {
                        return Err(Error::Syntax(format!("zero repetition count in {token:?}")));
                    }
                    (v.trim(), r)
                }
                None => (token, 1),
            };
            let (num, den) = match value.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (value, "1"),
            };
            let num: i64 = num
                .parse()
                .map_err(|_| Error::Syntax(format!("bad part {token:?}")))?;
            let den: i64 = den
                .parse()
                .map_err(|_| Error::Syntax(format!("bad denominator in {token:?}")))?;
            if num <= 0 || den <= 0 {
                return Err(Error::NonPositivePart(token.to_string()));
            }
            let t = match den {
                1 => 2 * num,
                2 => num,
                _ => return Err(Error::BadDenominator(token.to_string())),
            };
            let t = u32::try_from(t).map_err(|_| Error::Syntax(format!("part too large: {token:?}")))?;
            twice.extend(std::iter::repeat_n(t, reps as usize));
        }
        Partition::from_twice(twice)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Strictly decreasing Hermite indices `k_1 > ... > k_n`, stored as
/// twice-values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    twice: Vec<u32>,
}

impl DegreeSequence {
    pub fn from_indices(ks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let twice: Vec<u32> = ks.into_iter().map(|k| 2 * k).collect();
        if twice.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(
                "degree sequence must be strictly decreasing".into(),
            ));
        }
        Ok(Self { twice })
    }

    pub fn twice_values(&self) -> &[u32] {
        &self.twice
    }

    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }

    pub fn integer_indices(&self) -> Result<Vec<u32>> {
        if self.twice.iter().any(|t| t % 2 == 1) {
            return Err(Error::HalfIntegerPartition(format!("{self:?}")));
        }
        Ok(self.twice.iter().map(|t| t / 2).collect())
    }

    /// Inverse of [`Partition::degree_sequence`]. Trailing zero degrees
    /// would produce zero parts and are rejected.
    pub fn to_partition(&self) -> Result<Partition> {
        let n = self.twice.len() as u32;
        let twice = self
            .twice
            .iter()
            .enumerate()
            .map(|(i, &k)| k.saturating_sub(2 * (n - 1 - i as u32)));
        Partition::from_twice(twice)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// Rows grow downwards.
    Standard,
    /// Rows grow upwards.
    French,
    /// The diagram reflected into all four quadrants.
    FourQuadrant,
}

/// A point with coordinates in quarter box units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point4 {
    pub x: i64,
    pub y: i64,
}

impl Point4 {
    pub fn to_f64(self) -> (f64, f64) {
        (self.x as f64 / 4.0, self.y as f64 / 4.0)
    }
}

/// Bullet positions at the centre of every box of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramPoints {
    pub convention: Convention,
    pub points: Vec<Point4>,
}

impl DiagramPoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_f64(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(|p| p.to_f64()).collect()
    }

    /// One `x,y` row per point, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for p in &self.points {
            let (x, y) = p.to_f64();
            out.push_str(&format!("{x},{y}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("5,3,2").integer_parts().unwrap(), vec![5, 3, 2]);
        assert_eq!(
            p("10^2,6^2,4^2").integer_parts().unwrap(),
            vec![10, 10, 6, 6, 4, 4]
        );
        assert_eq!(p("11/2,5/2,1").twice_parts(), &[11, 5, 2]);
        assert_eq!(p("1,5/2,11/2"), p("11/2,5/2,1"));
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("()"), Partition::empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("0,1".parse::<Partition>(), Err(Error::NonPositivePart(_))));
        assert!(matches!("-3".parse::<Partition>(), Err(Error::NonPositivePart(_))));
        assert!(matches!("5/3".parse::<Partition>(), Err(Error::BadDenominator(_))));
        assert!(matches!("a,2".parse::<Partition>(), Err(Error::Syntax(_))));
        assert!(matches!("2^x".parse::<Partition>(), Err(Error::Syntax(_))));
        assert!(matches!("3,,2".parse::<Partition>(), Err(Error::Syntax(_))));
    }

    #[test]
    fn display_uses_power_notation() {
        assert_eq!(p("10,10,6,6,4,4").to_string(), "(10^2,6^2,4^2)");
        assert_eq!(p("11/2,5/2,1").to_string(), "(11/2,5/2,1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p("5,3,2").to_string().parse::<Partition>().unwrap(), p("5,3,2"));
    }

    #[test]
    fn doubling() {
        assert_eq!(p("5,3,2").doubled(), p("10,10,6,6,4,4"));
        assert_eq!(Partition::empty().doubled(), Partition::empty());
        assert_eq!(p("11/2,5/2,1").doubled(), p("11,11,5,5,2,2"));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3").conjugate().unwrap(), p("1,1,1"));
        assert_eq!(p("5,3,3,1").conjugate().unwrap(), p("4,3,3,1,1"));
        assert_eq!(p("1").conjugate().unwrap(), p("1"));
        assert!(p("3/2").conjugate().is_err());
    }

    #[test]
    fn degree_sequences() {
        let ks = |s: &str| p(s).degree_sequence().integer_indices().unwrap();
        assert_eq!(ks("104,100"), vec![105, 100]);
        assert_eq!(ks("1,1"), vec![2, 1]);
        assert_eq!(ks("5,3,2"), vec![7, 4, 2]);
        assert!(p("5/2").degree_sequence().integer_indices().is_err());
    }

    #[test]
    fn origin_multiplicities() {
        assert_eq!(p("2,1").origin_multiplicity().unwrap(), 3);
        assert_eq!(p("1,1").origin_multiplicity().unwrap(), 0);
        assert_eq!(p("1").origin_multiplicity().unwrap(), 1);
        assert_eq!(p("3,2,1").origin_multiplicity().unwrap(), 6);
    }

    #[test]
    fn zero_padding_is_rejected_and_harmless() {
        assert!(Partition::new([2, 1, 0]).is_err());
        // appending a zero part shifts every degree by one and adds k = 0
        for lam in partitions_of(7) {
            let ks = lam.degree_sequence().integer_indices().unwrap();
            let mut padded: Vec<u32> = ks.iter().map(|k| k + 1).collect();
            padded.push(0);
            assert_eq!(
                origin_multiplicity_of_degrees(&padded),
                origin_multiplicity_of_degrees(&ks)
            );
        }
    }

    #[test]
    fn four_quadrant_points() {
        let pts = |s: &str| p(s).diagram_points(Convention::FourQuadrant).to_f64();
        let one = pts("1");
        assert_eq!(one.len(), 4);
        for (x, y) in one {
            assert_eq!((x.abs(), y.abs()), (0.5, 0.5));
        }
        let mut two = pts("2");
        two.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(
            two,
            vec![
                (-1.5, -0.5),
                (-1.5, 0.5),
                (-0.5, -0.5),
                (-0.5, 0.5),
                (0.5, -0.5),
                (0.5, 0.5),
                (1.5, -0.5),
                (1.5, 0.5)
            ]
        );
        assert_eq!(pts("5,3,2").len(), 40);
    }

    #[test]
    fn half_integer_rows_put_bullets_on_axis() {
        let d = p("11/2,5/2,1").diagram_points(Convention::FourQuadrant);
        // every box of the doubled partition gets exactly one bullet
        assert_eq!(d.len() as u64, p("11/2,5/2,1").doubled().weight().unwrap());
        assert_eq!(d.points.iter().filter(|q| q.x == 0).count(), 4);
    }

    #[test]
    fn standard_and_french_layouts() {
        let s = p("5,3,3,1").diagram_points(Convention::Standard);
        let f = p("5,3,3,1").diagram_points(Convention::French);
        assert_eq!(s.len(), 12);
        assert!(s.points.iter().all(|q| q.y < 0));
        assert!(f.points.iter().all(|q| q.y > 0));
        assert!(d_contains(&f, (4.5, 0.5)));
        assert!(d_contains(&f, (0.5, 3.5)));
    }

    fn d_contains(d: &DiagramPoints, pt: (f64, f64)) -> bool {
        d.to_f64().contains(&pt)
    }

    #[test]
    fn csv_rows() {
        let csv = p("1").diagram_points(Convention::FourQuadrant).to_csv();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("x,y\n"));
        assert!(csv.contains("-0.5,0.5"));
    }

    #[test]
    fn enumerations() {
        let counts: Vec<usize> = (0..=8).map(|w| partitions_of(w).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let d = distinct_partitions(5, 2);
        // 5 singletons plus C(5,2) pairs
        assert_eq!(d.len(), 15);
        assert!(d.iter().all(|q| q.has_distinct_parts()));
        assert!(distinct_partitions(0, 3).is_empty());
    }
}
