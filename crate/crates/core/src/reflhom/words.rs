//! Words and relations in named generators: `r^2s^2`, `(rstuv)^2`, `1`,
//! and relation chains `rstr=strs=trst`.

use crate::error::{Error, Result};

/// A word as a flat list of `(generator index, exponent)`.
pub type GenWord = Vec<(usize, i32)>;

/// Relations `lhs = rhs`, with the source text of each side.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub lhs: GenWord,
    pub rhs: GenWord,
    pub text: String,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<char>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// `relations` is a comma-separated list of chains `w1=w2=...=wk`, each
    /// contributing the equations `w1=w2`, `w2=w3`, ...
    pub fn parse(name: &str, generators: &str, relations: &str) -> Result<Self> {
        let generators: Vec<char> = generators.chars().collect();
        let mut out = Vec::new();
        for chain in relations.split(',') {
            let sides: Vec<&str> = chain.split('=').map(str::trim).collect();
            if sides.len() < 2 {
                return Err(Error::Parse(format!("relation without '=': {chain:?}")));
            }
            for pair in sides.windows(2) {
                out.push(Relation {
                    lhs: parse_word(pair[0], &generators)?,
                    rhs: parse_word(pair[1], &generators)?,
                    text: format!("{} = {}", pair[0], pair[1]),
                });
            }
        }
        Ok(Presentation {
            name: name.to_string(),
            generators,
            relations: out,
        })
    }

    pub fn word(&self, s: &str) -> Result<GenWord> {
        parse_word(s, &self.generators)
    }
}

/// Parse a word over single-letter generators; parenthesised groups may
/// carry a non-negative exponent, and `1` is the empty word.
pub fn parse_word(s: &str, generators: &[char]) -> Result<GenWord> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let w = parse_seq(&chars, &mut pos, generators)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("unexpected {:?} in word {s:?}", chars[pos])));
    }
    Ok(w)
}

fn parse_seq(chars: &[char], pos: &mut usize, gens: &[char]) -> Result<GenWord> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let atom: GenWord = match c {
            ')' => break,
            '1' => {
                *pos += 1;
                Vec::new()
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos, gens)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                *pos += 1;
                inner
            }
            _ => {
                let g = gens
                    .iter()
                    .position(|&x| x == c)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {c:?}")))?;
                *pos += 1;
                vec![(g, 1)]
            }
        };
        let e = parse_exponent(chars, pos)?;
        for _ in 0..e {
            out.extend_from_slice(&atom);
        }
    }
    Ok(out)
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<usize> {
    if chars.get(*pos) != Some(&'^') {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    while chars.get(*pos).is_some_and(char::is_ascii_digit) {
        *pos += 1;
    }
    chars[start..*pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse("missing exponent".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let g = ['r', 's', 't'];
        assert_eq!(parse_word("1", &g).unwrap(), vec![]);
        assert_eq!(
            parse_word("r^2s", &g).unwrap(),
            vec![(0, 1), (0, 1), (1, 1)]
        );
        assert_eq!(parse_word("(rs)^2", &g).unwrap().len(), 4);
        assert_eq!(parse_word("((rs)^2t)^3", &g).unwrap().len(), 15);
        assert!(parse_word("rx", &g).is_err());
        assert!(parse_word("(rs", &g).is_err());
    }

    #[test]
    fn relation_chains() {
        let p = Presentation::parse("G12", "rst", "r^2=s^2=t^2=1, rstr=strs=trst").unwrap();
        assert_eq!(p.relations.len(), 5);
        assert_eq!(p.relations[4].text, "strs = trst");
    }
}
