use super::{FiniteGroup, GroupSource};
use crate::error::{Error, Result};
use serde::Deserialize;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// A group named in the mini-language `Z:n`, `Z2^k`, `D:n`, `S:n`,
/// `prod:Z:a,Z:b,...` or `table:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    ElementaryAbelian2(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Vec<usize>),
    Table(PathBuf),
}

fn number(text: &str, what: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::input(format!("expected a number for {what}, got {text:?}")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix("Z2^") {
            return Ok(GroupSpec::ElementaryAbelian2(number(k, "Z2^k")?));
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            let moduli = rest
                .split(',')
                .map(|f| {
                    f.trim()
                        .strip_prefix("Z:")
                        .ok_or_else(|| Error::input(format!("product factor {f:?} is not Z:n")))
                        .and_then(|m| number(m, "a product factor"))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::Product(moduli));
        }
        if let Some(path) = s.strip_prefix("table:") {
            return Ok(GroupSpec::Table(PathBuf::from(path)));
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("unknown group spec {s:?}")))?;
        match kind {
            "Z" => Ok(GroupSpec::Cyclic(number(arg, "Z:n")?)),
            "D" => Ok(GroupSpec::Dihedral(number(arg, "D:n")?)),
            "S" => Ok(GroupSpec::Symmetric(number(arg, "S:n")?)),
            _ => Err(Error::input(format!("unknown group spec {s:?}"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z:{n}"),
            GroupSpec::ElementaryAbelian2(k) => write!(f, "Z2^{k}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Product(m) => {
                let parts: Vec<String> = m.iter().map(|x| format!("Z:{x}")).collect();
                write!(f, "prod:{}", parts.join(","))
            }
            GroupSpec::Table(p) => write!(f, "table:{}", p.display()),
        }
    }
}

#[derive(Deserialize)]
struct TableFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::ElementaryAbelian2(k) => FiniteGroup::elementary_abelian_2(*k),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Product(m) => FiniteGroup::product(m),
            GroupSpec::Table(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::input(format!("cannot read {}: {e}", path.display()))
                })?;
                let file: TableFile = serde_json::from_str(&text)
                    .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
                if file.order != file.table.len() {
                    return Err(Error::Validation(format!(
                        "order is {} but the table has {} rows",
                        file.order,
                        file.table.len()
                    )));
                }
                FiniteGroup::from_table(&file.table)
            }
        }
    }
}

/// Splits on commas outside parentheses and brackets.
pub(crate) fn split_list(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

impl FiniteGroup {
    /// Parses an element name. Accepted everywhere: `e` and `#k` (raw index).
    /// Cyclic and table groups take integers, products take `(a,b,...)`,
    /// dihedral groups `r^a`, `s`, `r^a s`, and symmetric groups 1-based
    /// cycle notation `(1 2)(3 4)` or one-line `[2,3,1]`.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        let bad = || Error::input(format!("cannot parse {t:?} as an element of {:?}", self.source));
        if t == "e" {
            return Ok(self.identity);
        }
        if let Some(k) = t.strip_prefix('#') {
            let g = number(k, "an element index")?;
            self.check_element(g)?;
            return Ok(g);
        }
        match &self.source {
            GroupSource::Cyclic { n } => {
                let v: i64 = t.parse().map_err(|_| bad())?;
                Ok(v.rem_euclid(*n as i64) as usize)
            }
            GroupSource::Table => {
                let g = number(t, "an element index")?;
                self.check_element(g)?;
                Ok(g)
            }
            GroupSource::Product { moduli } => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let coords: Vec<i64> = inner
                    .split(',')
                    .map(|c| c.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                if coords.len() != moduli.len() {
                    return Err(Error::input(format!(
                        "{t:?} has {} coordinates, the group has {} factors",
                        coords.len(),
                        moduli.len()
                    )));
                }
                let mut index = 0;
                let mut place = 1;
                for (&c, &m) in coords.iter().zip(moduli) {
                    index += c.rem_euclid(m as i64) as usize * place;
                    place *= m;
                }
                Ok(index)
            }
            GroupSource::Dihedral { n } => {
                let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
                let (rot, refl) = match compact.strip_suffix('s') {
                    Some(r) => (r, 1),
                    None => (compact.as_str(), 0),
                };
                let a = match rot {
                    "" => 0,
                    "r" => 1,
                    _ => {
                        let k: i64 = rot
                            .strip_prefix("r^")
                            .and_then(|k| k.parse().ok())
                            .ok_or_else(bad)?;
                        k.rem_euclid(*n as i64) as usize
                    }
                };
                Ok(a + n * refl)
            }
            GroupSource::Symmetric { n } => {
                if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                    let one_line: Vec<usize> = inner
                        .split(',')
                        .map(|x| number(x, "a permutation image").and_then(|v| v.checked_sub(1).ok_or_else(bad)))
                        .collect::<Result<_>>()?;
                    return self.perm_index(&one_line);
                }
                // Cycles compose right to left, like the group product.
                let mut image: Vec<usize> = (0..*n).collect();
                let mut rest = t;
                let mut cycles = Vec::new();
                while !rest.is_empty() {
                    let body = rest.strip_prefix('(').ok_or_else(bad)?;
                    let close = body.find(')').ok_or_else(bad)?;
                    cycles.push(&body[..close]);
                    rest = body[close + 1..].trim_start();
                }
                if cycles.is_empty() {
                    return Err(bad());
                }
                for cyc in cycles.iter().rev() {
                    let pts: Vec<usize> = cyc
                        .split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|x| !x.is_empty())
                        .map(|x| {
                            number(x, "a cycle point")
                                .and_then(|v| v.checked_sub(1).filter(|&v| v < *n).ok_or_else(bad))
                        })
                        .collect::<Result<_>>()?;
                    let mut sorted = pts.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    if sorted.len() != pts.len() {
                        return Err(bad());
                    }
                    let mut step: Vec<usize> = (0..*n).collect();
                    for k in 0..pts.len() {
                        step[pts[k]] = pts[(k + 1) % pts.len()];
                    }
                    image = image.iter().map(|&x| step[x]).collect();
                }
                self.perm_index(&image)
            }
        }
    }

    /// Parses a comma-separated element list.
    pub fn parse_elements(&self, text: &str) -> Result<Vec<usize>> {
        split_list(text).into_iter().map(|t| self.parse_element(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_round_trip() {
        for s in ["Z:4", "Z2^3", "D:5", "S:4", "prod:Z:2,Z:3"] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("Q:8".parse::<GroupSpec>().is_err());
        assert!("prod:Z:2,D:3".parse::<GroupSpec>().is_err());
        assert_eq!("D:4".parse::<GroupSpec>().unwrap().build().unwrap().order(), 8);
    }

    #[test]
    fn element_syntax() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        for g in 0..s4.order() {
            assert_eq!(s4.parse_element(&s4.element_name(g)).unwrap(), g);
        }
        assert_eq!(
            s4.parse_element("[2,3,1,4]").unwrap(),
            s4.parse_element("(1 2 3)").unwrap()
        );
        // (1 2)(2 3): apply (2 3) first.
        let composite = s4.parse_element("(1 2)(2 3)").unwrap();
        let expect = s4.mul(s4.parse_element("(1 2)").unwrap(), s4.parse_element("(2 3)").unwrap());
        assert_eq!(composite, expect);
        assert!(s4.parse_element("(1 5)").is_err());

        let d4 = FiniteGroup::dihedral(4).unwrap();
        for g in 0..d4.order() {
            assert_eq!(d4.parse_element(&d4.element_name(g)).unwrap(), g);
        }
        assert_eq!(d4.parse_element("r^-1").unwrap(), 3);
        let z = FiniteGroup::product(&[2, 3]).unwrap();
        assert_eq!(z.parse_element("(1,2)").unwrap(), 5);
        assert_eq!(
            z.parse_elements("(1,0), (0,1)").unwrap(),
            vec![1, 2]
        );
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(z8.parse_elements("1,5,-1").unwrap(), vec![1, 5, 7]);
        assert_eq!(z8.parse_element("#3").unwrap(), 3);
        assert!(z8.parse_element("#9").is_err());
    }
}
