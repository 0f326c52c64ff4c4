use std::fmt;

use crate::extalg::{DiffForm, PointQ};
use crate::foliation::Ambient;
use crate::poly::PolyRing;
use crate::rational::format_rational;

/// One named declaration of an input document, in source order.
#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Form(String, DiffForm),
    Point(String, PointQ),
    Frame(String, Vec<String>),
}

/// Parsed input: a ring declaration followed by named forms, points and
/// frames, all well-formed over the declared ring.
#[derive(Debug, Clone)]
pub struct InputDocument {
    ring: PolyRing,
    ambient: Ambient,
    items: Vec<Item>,
}

impl InputDocument {
    pub(crate) fn from_parts(ring: PolyRing, ambient: Ambient, items: Vec<Item>) -> Self {
        InputDocument { ring, ambient, items }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn forms(&self) -> impl Iterator<Item = (&str, &DiffForm)> {
        self.items.iter().filter_map(|i| match i {
            Item::Form(name, f) => Some((name.as_str(), f)),
            _ => None,
        })
    }

    pub fn points(&self) -> impl Iterator<Item = (&str, &PointQ)> {
        self.items.iter().filter_map(|i| match i {
            Item::Point(name, p) => Some((name.as_str(), p)),
            _ => None,
        })
    }

    pub fn frames(&self) -> impl Iterator<Item = (&str, &[String])> {
        self.items.iter().filter_map(|i| match i {
            Item::Frame(name, fs) => Some((name.as_str(), fs.as_slice())),
            _ => None,
        })
    }

    pub fn form(&self, name: &str) -> Option<&DiffForm> {
        self.forms().find(|(n, _)| *n == name).map(|(_, f)| f)
    }
}

impl PartialEq for InputDocument {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.ambient == other.ambient && self.items == other.items
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.ambient {
            Ambient::Affine(_) => "affine",
            Ambient::Projective(_) => "projective",
        };
        write!(f, "ring {}", kind)?;
        for v in self.ring.var_names() {
            write!(f, " {}", v)?;
        }
        writeln!(f, ";")?;
        for item in &self.items {
            match item {
                Item::Form(name, form) => writeln!(f, "form {} = {};", name, form)?,
                Item::Point(name, p) => {
                    let coords = p
                        .coords()
                        .iter()
                        .map(format_rational)
                        .collect::<Vec<_>>()
                        .join(", ");
                    writeln!(f, "point {} = ({});", name, coords)?;
                }
                Item::Frame(name, forms) => {
                    writeln!(f, "frame {} = ({});", name, forms.join(", "))?;
                }
            }
        }
        Ok(())
    }
}
