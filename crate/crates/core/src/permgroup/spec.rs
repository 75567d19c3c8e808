use std::fmt;

use super::{parse_cycles, GroupError, Permutation, PermutationGroup};

/// A named group family or an explicit generator list.
///
/// Products are kept flat: a factor is never itself a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Klein4,
    Quaternion8,
    Product(Vec<GroupSpec>),
    Generators {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

impl GroupSpec {
    /// Direct product, flattening nested products.
    pub fn product(factors: Vec<GroupSpec>) -> GroupSpec {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            GroupSpec::Product(flat)
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(k) => write!(f, "cyclic {k}"),
            GroupSpec::Dihedral(k) => write!(f, "dihedral {k}"),
            GroupSpec::Symmetric(k) => write!(f, "symmetric {k}"),
            GroupSpec::Klein4 => f.write_str("klein4"),
            GroupSpec::Quaternion8 => f.write_str("quaternion8"),
            GroupSpec::Product(factors) => {
                f.write_str("product ")?;
                let parts: Vec<String> = factors.iter().map(|s| s.to_string()).collect();
                f.write_str(&parts.join(" ; "))
            }
            GroupSpec::Generators { generators, .. } => {
                f.write_str("gens")?;
                for g in generators {
                    write!(f, " {}", g.to_cycle_string())?;
                }
                Ok(())
            }
        }
    }
}

fn spec_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses exactly one group spec; blank lines and `#` comments are ignored.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupError> {
    let lines: Vec<&str> = spec_lines(text).collect();
    match lines.len() {
        0 => Err(GroupError::Empty),
        1 => parse_item(lines[0]),
        n => Err(GroupError::ExpectedOne(n)),
    }
}

/// Parses a file holding one group spec per line.
pub fn parse_group_spec_list(text: &str) -> Result<Vec<GroupSpec>, GroupError> {
    spec_lines(text).map(parse_item).collect()
}

fn parse_item(item: &str) -> Result<GroupSpec, GroupError> {
    let item = item.trim();
    let (head, rest) = match item.split_once(char::is_whitespace) {
        Some((h, r)) => (h, r.trim()),
        None => (item, ""),
    };
    let param = || -> Result<usize, GroupError> {
        match rest.parse::<usize>() {
            Ok(k) if k > 0 => Ok(k),
            _ => Err(GroupError::BadParameter(item.to_string())),
        }
    };
    match head {
        "cyclic" => Ok(GroupSpec::Cyclic(param()?)),
        "dihedral" => Ok(GroupSpec::Dihedral(param()?)),
        "symmetric" => Ok(GroupSpec::Symmetric(param()?)),
        "klein4" if rest.is_empty() => Ok(GroupSpec::Klein4),
        "quaternion8" if rest.is_empty() => Ok(GroupSpec::Quaternion8),
        "product" => {
            let factors = rest
                .split(';')
                .map(parse_item)
                .collect::<Result<Vec<_>, _>>()?;
            if factors.len() < 2 {
                return Err(GroupError::BadParameter(item.to_string()));
            }
            Ok(GroupSpec::product(factors))
        }
        "gens" => parse_generators(rest),
        "" => Err(GroupError::Empty),
        _ => Err(GroupError::UnknownFamily(item.to_string())),
    }
}

fn parse_generators(text: &str) -> Result<GroupSpec, GroupError> {
    // Tokens are separated by whitespace outside parentheses.
    let mut tokens = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                if depth != 0 {
                    return Err(GroupError::UnbalancedCycle(text.to_string()));
                }
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(GroupError::UnbalancedCycle(text.to_string()));
                }
                current.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if depth != 0 {
        return Err(GroupError::UnbalancedCycle(text.to_string()));
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    let parsed = tokens
        .iter()
        .map(|t| parse_cycles(t))
        .collect::<Result<Vec<_>, _>>()?;
    let degree = parsed
        .iter()
        .flatten()
        .flatten()
        .map(|&p| p + 1)
        .max()
        .unwrap_or(1);
    let generators = parsed
        .iter()
        .map(|cycles| Permutation::from_cycles(cycles, degree))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSpec::Generators { degree, generators })
}

/// Faithful permutation representation of a spec.
pub fn realize_group(spec: &GroupSpec) -> PermutationGroup {
    let (degree, generators) = realize_parts(spec);
    PermutationGroup::new(degree, generators).expect("realized generators share a degree")
}

fn cycle_perm(points: &[usize], degree: usize) -> Permutation {
    Permutation::from_cycles(&[points.to_vec()], degree).expect("valid cycle")
}

fn realize_parts(spec: &GroupSpec) -> (usize, Vec<Permutation>) {
    match spec {
        GroupSpec::Cyclic(1) | GroupSpec::Symmetric(1) => (1, Vec::new()),
        GroupSpec::Cyclic(k) => {
            let pts: Vec<usize> = (0..*k).collect();
            (*k, vec![cycle_perm(&pts, *k)])
        }
        // D_1 and D_2 have no faithful action on a 1- or 2-gon.
        GroupSpec::Dihedral(1) => realize_parts(&GroupSpec::Cyclic(2)),
        GroupSpec::Dihedral(2) => realize_parts(&GroupSpec::Klein4),
        GroupSpec::Dihedral(k) => {
            let k = *k;
            let pts: Vec<usize> = (0..k).collect();
            let reflection =
                Permutation::from_images((0..k).map(|i| (k - i) % k).collect()).expect("bijection");
            (k, vec![cycle_perm(&pts, k), reflection])
        }
        GroupSpec::Symmetric(2) => (2, vec![cycle_perm(&[0, 1], 2)]),
        GroupSpec::Symmetric(k) => {
            let pts: Vec<usize> = (0..*k).collect();
            (*k, vec![cycle_perm(&pts, *k), cycle_perm(&[0, 1], *k)])
        }
        GroupSpec::Klein4 => (
            4,
            vec![
                Permutation::from_cycles(&[vec![0, 1], vec![2, 3]], 4).unwrap(),
                Permutation::from_cycles(&[vec![0, 2], vec![1, 3]], 4).unwrap(),
            ],
        ),
        GroupSpec::Quaternion8 => (8, quaternion_regular()),
        GroupSpec::Product(factors) => {
            let parts: Vec<(usize, Vec<Permutation>)> = factors.iter().map(realize_parts).collect();
            let degree: usize = parts.iter().map(|(d, _)| d).sum();
            let mut offset = 0;
            let mut gens = Vec::new();
            for (d, fg) in parts {
                gens.extend(fg.iter().map(|g| g.shifted(offset, degree)));
                offset += d;
            }
            (degree, gens)
        }
        GroupSpec::Generators { degree, generators } => (*degree, generators.clone()),
    }
}

/// Left-regular action of `i` and `j` on the eight unit quaternions.
fn quaternion_regular() -> Vec<Permutation> {
    // element index = 2*unit + sign, unit in {1, i, j, k}, sign 0 = +, 1 = -
    // unit products: table[a][b] = (unit, negated)
    const TABLE: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mul = |x: usize, y: usize| -> usize {
        let (u, neg) = TABLE[x / 2][y / 2];
        let sign = (x % 2) ^ (y % 2) ^ (neg as usize);
        2 * u + sign
    };
    [2usize, 4]
        .iter()
        .map(|&g| Permutation::from_images((0..8).map(|x| mul(g, x)).collect()).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_named_families() {
        assert_eq!(parse_group_spec("cyclic 3"), Ok(GroupSpec::Cyclic(3)));
        assert_eq!(parse_group_spec("# comment\n\n  klein4 \n"), Ok(GroupSpec::Klein4));
        assert_eq!(
            parse_group_spec("product cyclic 2 ; cyclic 4"),
            Ok(GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)]))
        );
    }

    #[test]
    fn parses_explicit_generators() {
        let spec = parse_group_spec("gens (0 1 2)(3 4)").unwrap();
        match &spec {
            GroupSpec::Generators { degree, generators } => {
                assert_eq!(*degree, 5);
                assert_eq!(generators.len(), 1);
                assert_eq!(generators[0].to_cycle_string(), "(0 1 2)(3 4)");
            }
            other => panic!("unexpected {other:?}"),
        }
        let two = parse_group_spec("gens (0 1) (1 2 3)").unwrap();
        assert_eq!(realize_group(&two).order(), &num_bigint::BigUint::from(24u32));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_group_spec("gens (0 1"),
            Err(GroupError::UnbalancedCycle(_))
        ));
        assert!(matches!(
            parse_group_spec("gens (0 1)(1 2)"),
            Err(GroupError::RepeatedPoint(1))
        ));
        assert!(matches!(
            parse_group_spec("frobenius 20"),
            Err(GroupError::UnknownFamily(_))
        ));
        assert!(matches!(
            parse_group_spec("cyclic 0"),
            Err(GroupError::BadParameter(_))
        ));
        assert!(matches!(parse_group_spec(""), Err(GroupError::Empty)));
        assert!(matches!(
            parse_group_spec("cyclic 2\ncyclic 3"),
            Err(GroupError::ExpectedOne(2))
        ));
    }

    #[test]
    fn list_format() {
        let specs = parse_group_spec_list("cyclic 3\n# x\nquaternion8\n").unwrap();
        assert_eq!(specs, vec![GroupSpec::Cyclic(3), GroupSpec::Quaternion8]);
    }

    fn leaf_spec() -> impl Strategy<Value = GroupSpec> {
        prop_oneof![
            (1usize..20).prop_map(GroupSpec::Cyclic),
            (1usize..20).prop_map(GroupSpec::Dihedral),
            (1usize..8).prop_map(GroupSpec::Symmetric),
            Just(GroupSpec::Klein4),
            Just(GroupSpec::Quaternion8),
            proptest::collection::vec(
                proptest::sample::subsequence((0..7usize).collect::<Vec<_>>(), 0..7),
                0..4
            )
            .prop_map(|cycles| {
                let generators = cycles
                    .into_iter()
                    .map(|c| {
                        if c.len() < 2 {
                            Permutation::identity(7)
                        } else {
                            Permutation::from_cycles(&[c], 7).unwrap()
                        }
                    })
                    .collect::<Vec<_>>();
                let degree = generators
                    .iter()
                    .flat_map(|g| g.cycles().into_iter().flatten())
                    .map(|p| p + 1)
                    .max()
                    .unwrap_or(1);
                GroupSpec::Generators {
                    degree,
                    generators: generators
                        .iter()
                        .map(|g| Permutation::from_cycles(&g.cycles(), degree).unwrap())
                        .collect(),
                }
            }),
        ]
    }

    proptest! {
        #[test]
        fn serializer_round_trips(factors in proptest::collection::vec(leaf_spec(), 1..4)) {
            let spec = GroupSpec::product(factors);
            let text = spec.to_string();
            prop_assert_eq!(parse_group_spec(&text).unwrap(), spec);
        }
    }
}
