use std::collections::HashSet;
use std::fmt;

use crate::seifert::{Element, Generator, GroupKind, GroupSpec};

/// A generator letter or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator.as_char())
        } else {
            write!(f, "{}", self.generator.as_char())
        }
    }
}

/// Letters of the presentation in enumeration order: `a, a⁻¹, b, b⁻¹(, c, c⁻¹)`.
pub fn alphabet(spec: GroupSpec) -> Vec<Letter> {
    let gens: &[Generator] = match spec.kind() {
        GroupKind::TorusKnot => &[Generator::A, Generator::B],
        GroupKind::Cable => &[Generator::A, Generator::B, Generator::C],
    };
    gens.iter()
        .flat_map(|&g| {
            [false, true].map(|inverse| Letter {
                generator: g,
                inverse,
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BallEntry {
    pub spelling: Vec<Letter>,
    pub element: Element,
}

impl BallEntry {
    pub fn spelling_text(&self) -> String {
        if self.spelling.is_empty() {
            return "1".to_string();
        }
        self.spelling
            .iter()
            .map(Letter::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All distinct elements spelled by freely reduced generator words of length
/// at most `radius`, each with its first spelling in length-lex order.
pub fn ball(spec: GroupSpec, radius: usize) -> Vec<BallEntry> {
    let letters: Vec<(Letter, Element)> = alphabet(spec)
        .into_iter()
        .map(|l| {
            let exp = if l.inverse { -1 } else { 1 };
            let e = Element::generator_power(spec, l.generator, exp).expect("letter of the presentation");
            (l, e)
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let identity = BallEntry {
        spelling: Vec::new(),
        element: Element::identity(spec),
    };
    seen.insert(identity.element.clone());
    out.push(identity);
    // every freely reduced word of the current length, in length-lex order
    let mut layer: Vec<BallEntry> = vec![out[0].clone()];
    for _ in 0..radius {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for entry in &layer {
            for (letter, value) in &letters {
                if let Some(last) = entry.spelling.last() {
                    if last.generator == letter.generator && last.inverse != letter.inverse {
                        continue;
                    }
                }
                let mut spelling = entry.spelling.clone();
                spelling.push(*letter);
                let element = entry.element.mul_unchecked(value);
                if seen.insert(element.clone()) {
                    out.push(BallEntry {
                        spelling: spelling.clone(),
                        element: element.clone(),
                    });
                }
                next.push(BallEntry { spelling, element });
            }
        }
        layer = next;
    }
    out
}
