//! Polytope expressions: `simplex:n`, `cube:n`, `polygon:m`, `point`,
//! `product(a,b)`, `double(a)`, `file:PATH` and `hrep:PATH`.

use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use polydouble::catalog;
use polydouble::{DualPolytope, PolytopeSystem};

use crate::files;

pub const MAX_DEPTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Point,
    Simplex(usize),
    Cube(usize),
    Polygon(usize),
    Product(Box<Spec>, Box<Spec>),
    Double(Box<Spec>),
    File(PathBuf),
    Hrep(PathBuf),
}

impl Spec {
    pub fn parse(text: &str) -> Result<Spec> {
        let mut parser = Parser { src: text, pos: 0 };
        let spec = parser.spec(0)?;
        parser.skip_ws();
        if parser.pos != text.len() {
            bail!(
                "unexpected input at byte {}: {:?}",
                parser.pos,
                &text[parser.pos..]
            );
        }
        Ok(spec)
    }

    /// The two factors when the expression is a product at the top level.
    pub fn factors(&self) -> Option<(&Spec, &Spec)> {
        match self {
            Spec::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// The dual complex, with every intermediate result validated.
    pub fn dual(&self) -> Result<DualPolytope> {
        Ok(match self {
            Spec::Point => DualPolytope::point(),
            Spec::Simplex(n) => catalog::simplex(*n)?,
            Spec::Cube(n) => catalog::cube(*n)?,
            Spec::Polygon(m) => catalog::polygon(*m)?,
            Spec::Product(a, b) => a.dual()?.product(&b.dual()?)?,
            Spec::Double(a) => a.dual()?.double()?,
            Spec::File(path) => files::read_complex(path)?,
            Spec::Hrep(path) => files::read_hrep(path)?.dual_complex()?,
        })
    }

    /// An H-representation with facets in the order of [`Spec::dual`], or
    /// `None` when the expression involves a complex file.
    pub fn system(&self) -> Result<Option<PolytopeSystem>> {
        Ok(Some(match self {
            Spec::Point => PolytopeSystem::point(),
            Spec::Simplex(1) => catalog::cube_system(1)?,
            Spec::Simplex(n) => catalog::simplex_system(*n)?,
            Spec::Cube(n) => catalog::cube_system(*n)?,
            Spec::Polygon(m) => catalog::polygon_system(*m)?,
            Spec::Product(a, b) => {
                let (Some(a), Some(b)) = (a.system()?, b.system()?) else {
                    return Ok(None);
                };
                a.product(&b)?
            }
            Spec::Double(a) => {
                let Some(a) = a.system()? else {
                    return Ok(None);
                };
                a.linear_slice()?.double()?.to_system()?
            }
            Spec::File(_) => return Ok(None),
            Spec::Hrep(path) => files::read_hrep(path)?,
        }))
    }
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spec::Point => write!(f, "point"),
            Spec::Simplex(n) => write!(f, "simplex:{n}"),
            Spec::Cube(n) => write!(f, "cube:{n}"),
            Spec::Polygon(m) => write!(f, "polygon:{m}"),
            Spec::Product(a, b) => write!(f, "product({a},{b})"),
            Spec::Double(a) => write!(f, "double({a})"),
            Spec::File(p) => write!(f, "file:{}", p.display()),
            Spec::Hrep(p) => write!(f, "hrep:{}", p.display()),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if !self.src[self.pos..].starts_with(c) {
            bail!("expected '{c}' at byte {}", self.pos);
        }
        self.pos += c.len_utf8();
        Ok(())
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn number(&mut self) -> Result<usize> {
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        self.pos += len;
        rest[..len]
            .parse()
            .with_context(|| format!("expected a number at byte {}", self.pos - len))
    }

    /// Everything up to the closing parenthesis or comma of the enclosing
    /// expression; paths may contain neither.
    fn path(&mut self) -> Result<PathBuf> {
        let rest = &self.src[self.pos..];
        let len = rest.find([',', ')']).unwrap_or(rest.len());
        self.pos += len;
        let path = rest[..len].trim();
        if path.is_empty() {
            bail!("empty path at byte {}", self.pos - len);
        }
        Ok(Path::new(path).to_path_buf())
    }

    fn spec(&mut self, depth: usize) -> Result<Spec> {
        if depth > MAX_DEPTH {
            bail!("expression nested deeper than {MAX_DEPTH}");
        }
        let start = self.pos;
        let spec = match self.word() {
            "point" => Spec::Point,
            "simplex" => {
                self.eat(':')?;
                Spec::Simplex(self.number()?)
            }
            "cube" => {
                self.eat(':')?;
                Spec::Cube(self.number()?)
            }
            "polygon" => {
                self.eat(':')?;
                let m = self.number()?;
                if m < 3 {
                    bail!("polygon:{m} needs at least 3 sides");
                }
                Spec::Polygon(m)
            }
            "product" => {
                self.eat('(')?;
                let a = self.spec(depth + 1)?;
                self.eat(',')?;
                let b = self.spec(depth + 1)?;
                self.eat(')')?;
                Spec::Product(Box::new(a), Box::new(b))
            }
            "double" => {
                self.eat('(')?;
                let a = self.spec(depth + 1)?;
                self.eat(')')?;
                Spec::Double(Box::new(a))
            }
            "file" => {
                self.eat(':')?;
                Spec::File(self.path()?)
            }
            "hrep" => {
                self.eat(':')?;
                Spec::Hrep(self.path()?)
            }
            "" => bail!("expected a polytope at byte {start}"),
            other => bail!("unknown polytope {other:?}"),
        };
        Ok(spec)
    }
}

/// The fixed list behind `poly verify all catalog` and the acceptance run.
pub fn catalog() -> Vec<Spec> {
    let mut out: Vec<Spec> = (1..=5).map(Spec::Simplex).collect();
    out.extend((4..=8).map(Spec::Polygon));
    out.extend((1..=4).map(Spec::Cube));
    out.push(Spec::parse("product(polygon:5,simplex:1)").expect("catalog entry"));
    out.push(Spec::parse("product(simplex:2,simplex:1)").expect("catalog entry"));
    out
}
