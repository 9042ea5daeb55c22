//! Intervals `[u, v]` of the divisibility poset and partitions into them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};
use crate::poset::Poset;

/// `[bottom, top] = { w : bottom | w, w | top }`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    bottom: Monomial,
    top: Monomial,
}

impl Interval {
    pub fn new(bottom: Monomial, top: Monomial) -> Result<Interval> {
        if !bottom.divides(top) {
            return Err(Error::Argument(format!("interval bottom {bottom} does not divide top {top}")));
        }
        Ok(Interval { bottom, top })
    }

    pub fn singleton(m: Monomial) -> Interval {
        Interval { bottom: m, top: m }
    }

    pub fn bottom(&self) -> Monomial {
        self.bottom
    }

    pub fn top(&self) -> Monomial {
        self.top
    }

    pub fn contains(&self, w: Monomial) -> bool {
        self.bottom.divides(w) && w.divides(self.top)
    }

    /// `2^(deg top - deg bottom)`.
    pub fn len(&self) -> usize {
        1 << (self.top.degree() - self.bottom.degree())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> impl Iterator<Item = Monomial> {
        let b = self.bottom;
        monomial::submasks(self.top.without(b).mask()).map(move |s| b.lcm(Monomial::from_mask(s)))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.bottom, self.top)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.bottom, self.top)
    }
}

impl FromStr for Interval {
    type Err = Error;

    /// Parses `[{i,..},{j,..}]`, whitespace allowed around the pieces.
    fn from_str(s: &str) -> Result<Interval> {
        parse_interval(s, 0)
    }
}

fn parse_interval(line: &str, offset: usize) -> Result<Interval> {
    let err = |at: usize, msg: &str| Error::Parse { pos: offset + at, msg: msg.to_string() };
    let lead = line.len() - line.trim_start().len();
    let s = line.trim_end();
    let mut pos = lead;
    if !s[pos..].starts_with('[') {
        return Err(err(pos, "expected '['"));
    }
    pos += 1;
    pos += s[pos..].len() - s[pos..].trim_start().len();
    let (bottom, used) = monomial::parse_monomial(&s[pos..], offset + pos)?;
    pos += used;
    pos += s[pos..].len() - s[pos..].trim_start().len();
    if !s[pos..].starts_with(',') {
        return Err(err(pos, "expected ',' between bottom and top"));
    }
    pos += 1;
    pos += s[pos..].len() - s[pos..].trim_start().len();
    let (top, used) = monomial::parse_monomial(&s[pos..], offset + pos)?;
    pos += used;
    pos += s[pos..].len() - s[pos..].trim_start().len();
    if s[pos..] != *"]" {
        return Err(err(pos, "expected closing ']' at end of interval"));
    }
    Interval::new(bottom, top).map_err(|e| err(lead, &e.to_string()))
}

/// A family of intervals meant to partition some poset `P_I`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalPartition {
    intervals: Vec<Interval>,
}

impl IntervalPartition {
    pub fn new(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by_key(|iv| (iv.bottom.degree(), iv.bottom.mask(), iv.top.degree(), iv.top.mask()));
        IntervalPartition { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// `min_i deg v_i` over the interval tops; `None` for an empty family.
    pub fn sdepth(&self) -> Option<usize> {
        self.intervals.iter().map(|iv| iv.top.degree()).min()
    }

    /// One interval per line, `[{..},{..}]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for iv in &self.intervals {
            out.push_str(&iv.to_string());
            out.push('\n');
        }
        out
    }

    /// Reads the line format back. Blank lines and lines starting with `#` are skipped.
    pub fn parse_text(text: &str) -> Result<IntervalPartition> {
        let mut intervals = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.trim_end_matches(['\n', '\r']);
            let t = body.trim();
            if !t.is_empty() && !t.starts_with('#') {
                intervals.push(parse_interval(body, offset)?);
            }
            offset += line.len();
        }
        Ok(IntervalPartition::new(intervals))
    }
}

impl FromIterator<Interval> for IntervalPartition {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        IntervalPartition::new(iter.into_iter().collect())
    }
}

/// Checks that `part` is a disjoint cover of `poset` by intervals inside it.
/// Returns the partition's Stanley depth `min_i deg v_i`.
pub fn validate_partition(poset: &Poset, part: &IntervalPartition) -> Result<usize> {
    let n = poset.n();
    for iv in part.intervals() {
        for end in [iv.bottom, iv.top] {
            if end.max_var() > n || !poset.contains(end) {
                return Err(Error::Partition {
                    reason: format!("interval {iv} has an endpoint outside the poset"),
                    witness: end,
                });
            }
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; 1 << n];
    for (k, iv) in part.intervals().iter().enumerate() {
        for w in iv.members() {
            let slot = &mut owner[w.mask() as usize];
            if let Some(prev) = *slot {
                return Err(Error::Partition {
                    reason: format!("intervals {} and {iv} overlap", part.intervals()[prev]),
                    witness: w,
                });
            }
            *slot = Some(k);
        }
    }
    if let Some(&w) = poset.elements().iter().find(|w| owner[w.mask() as usize].is_none()) {
        return Err(Error::Partition { reason: "element not covered by any interval".into(), witness: w });
    }
    Ok(part.sdepth().expect("a nonempty poset needs at least one interval"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn iv(s: &str) -> Interval {
        s.parse().unwrap()
    }

    #[test]
    fn interval_basics() {
        let i = iv("[{1,2},{1,2,3}]");
        assert_eq!(i.len(), 2);
        assert_eq!(i.members().collect::<Vec<_>>().len(), 2);
        assert!(i.contains(Monomial::full(3)));
        assert_eq!(i.to_string(), "[{1,2},{1,2,3}]");
        assert_eq!(iv(" [ {1} , {1,4} ] "), iv("[{1},{1,4}]"));
        assert!("[{1,2},{1,3}]".parse::<Interval>().is_err());
        assert!("[{1,2}{1,3}]".parse::<Interval>().is_err());
        assert!("[{1},{1}] x".parse::<Interval>().is_err());
    }

    #[test]
    fn example1_partition_is_valid() {
        let p = Poset::of(&family::example1()).unwrap();
        let part = IntervalPartition::new(vec![iv("[{1,2},{1,2,3}]"), iv("[{2,3},{2,3}]")]);
        assert_eq!(validate_partition(&p, &part).unwrap(), 2);
    }

    #[test]
    fn overlap_is_reported_with_witness() {
        let p = Poset::of(&family::example1()).unwrap();
        let part = IntervalPartition::new(vec![iv("[{1,2},{1,2,3}]"), iv("[{2,3},{1,2,3}]")]);
        match validate_partition(&p, &part) {
            Err(Error::Partition { witness, .. }) => assert_eq!(witness, Monomial::full(3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_element_and_foreign_endpoint() {
        let p = Poset::of(&family::example1()).unwrap();
        let part = IntervalPartition::new(vec![iv("[{1,2},{1,2,3}]")]);
        match validate_partition(&p, &part) {
            Err(Error::Partition { witness, .. }) => assert_eq!(witness.to_string(), "{2,3}"),
            other => panic!("{other:?}"),
        }
        let part = IntervalPartition::new(vec![iv("[{1},{1,2}]"), iv("[{2,3},{1,2,3}]")]);
        match validate_partition(&p, &part) {
            Err(Error::Partition { witness, .. }) => assert_eq!(witness.to_string(), "{1}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        let text = "# example 1\n[{1,2},{1,2,3}]\n\n[{2,3},{2,3}]\n";
        let part = IntervalPartition::parse_text(text).unwrap();
        assert_eq!(part.len(), 2);
        assert_eq!(IntervalPartition::parse_text(&part.to_text()).unwrap(), part);
        match IntervalPartition::parse_text("[{1},{1}]\n[{2},{3}]\n") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
    }
}
