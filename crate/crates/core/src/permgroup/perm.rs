use std::fmt;

use super::GroupError;

/// A permutation of `{0, …, degree-1}` stored as its image array.
///
/// Products follow function composition: `a.compose(&b)` applies `b` first,
/// then `a`. Group multiplication `g·h` is `g.compose(&h)` throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotABijection(images.clone()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(GroupError::PointOutOfRange { point: p, degree });
                }
                if touched[p] {
                    return Err(GroupError::RepeatedPoint(p));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] == point
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &j)| i != j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend_to(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Permutation { images }
    }

    /// Shifts every point by `offset` and embeds into `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = offset + j;
        }
        Permutation { images }
    }

    /// Non-trivial cycles, each starting at its smallest point, in increasing order.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
        s
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parses one permutation token such as `(0 1 2)(3 4)` or `()` into its cycles.
pub fn parse_cycles(token: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut cycles = Vec::new();
    let mut rest = token.trim();
    if rest.is_empty() {
        return Err(GroupError::MalformedCycles(token.to_string()));
    }
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(GroupError::MalformedCycles(token.to_string()));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| GroupError::UnbalancedCycle(token.to_string()))?;
        let inner = &rest[1..close];
        if inner.contains('(') {
            return Err(GroupError::UnbalancedCycle(token.to_string()));
        }
        let mut cycle = Vec::new();
        for part in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if part.is_empty() {
                continue;
            }
            let p: usize = part
                .parse()
                .map_err(|_| GroupError::MalformedCycles(token.to_string()))?;
            if cycle.contains(&p) {
                return Err(GroupError::RepeatedPoint(p));
            }
            cycle.push(p);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(&[vec![0, 1]], 3).unwrap();
        let b = Permutation::from_cycles(&[vec![1, 2]], 3).unwrap();
        // 0 -b-> 0 -a-> 1
        assert_eq!(a.compose(&b).apply(0), 1);
        // 1 -b-> 2 -a-> 2
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn cycle_string_round_trip() {
        let p = Permutation::from_cycles(&[vec![0, 1, 2], vec![3, 4]], 5).unwrap();
        assert_eq!(p.to_cycle_string(), "(0 1 2)(3 4)");
        let cycles = parse_cycles("(0 1 2)(3 4)").unwrap();
        assert_eq!(Permutation::from_cycles(&cycles, 5).unwrap(), p);
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(3).to_cycle_string(), "()");
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        assert!(matches!(
            parse_cycles("(0 1"),
            Err(GroupError::UnbalancedCycle(_))
        ));
        assert!(parse_cycles("0 1)").is_err());
        assert!(matches!(
            parse_cycles("(0 1 0)"),
            Err(GroupError::RepeatedPoint(0))
        ));
        assert!(Permutation::from_cycles(&[vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn inverse_undoes() {
        let p = Permutation::from_cycles(&[vec![0, 3, 1], vec![2, 4]], 5).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }
}
