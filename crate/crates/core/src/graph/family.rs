use std::fmt;
use std::str::FromStr;

use super::Pseudograph;
use crate::error::{Error, Result};

/// Named graph families with their size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_p`.
    Complete(usize),
    /// `K_{m,n}`: left part `0..m`, right part `m..m+n`.
    CompleteBipartite(usize, usize),
    /// `C_n` on `0..n`; `C_1` is a loop and `C_2` a double edge.
    Cycle(usize),
    /// Path with `n` vertices.
    Path(usize),
    /// `F_n`: hub `0` joined to every vertex of the path `1..=n`.
    Fan(usize),
    /// `L_n`: the `2 x n` grid, rails `0..n` and `n..2n`, rungs `i -- n+i`.
    Ladder(usize),
    /// `Z_n`: vertices `0..=n`, edges `i -- i+1` and `i -- i+2`.
    Zigzag(usize),
    /// `W_n`: hub `0` joined to every vertex of the cycle `1..=n`.
    Wheel(usize),
    /// `Q_n`: bit strings of length `n`, adjacent when they differ in one bit.
    Cube(usize),
    /// `N_p`: `p` isolated vertices.
    Null(usize),
    /// `K_{1,k}` with center `0`.
    Star(usize),
}

impl Family {
    /// Parses a family name and its parameters, e.g. `("complete_bipartite", &[3, 4])`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let one = |f: fn(usize) -> Family| match params {
            [n] => Ok(f(*n)),
            _ => Err(Error::InvalidParameter(format!(
                "family {name} takes one parameter"
            ))),
        };
        match name {
            "complete" | "K" => one(Family::Complete),
            "complete_bipartite" | "bipartite" => match params {
                [m, n] => Ok(Family::CompleteBipartite(*m, *n)),
                _ => Err(Error::InvalidParameter(
                    "complete_bipartite takes two parameters".into(),
                )),
            },
            "cycle" => one(Family::Cycle),
            "path" => one(Family::Path),
            "fan" => one(Family::Fan),
            "ladder" => one(Family::Ladder),
            "zigzag" => one(Family::Zigzag),
            "wheel" => one(Family::Wheel),
            "cube" => one(Family::Cube),
            "null" => one(Family::Null),
            "star" => one(Family::Star),
            other => Err(Error::InvalidParameter(format!("unknown family {other}"))),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `name n` or `name m n` with whitespace separators.
    fn from_str(s: &str) -> Result<Family> {
        let mut parts = s.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty family".into()))?;
        let params = parts
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter {t}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::parse(name, &params)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::CompleteBipartite(m, n) => write!(f, "complete_bipartite {m} {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::Fan(n) => write!(f, "fan {n}"),
            Family::Ladder(n) => write!(f, "ladder {n}"),
            Family::Zigzag(n) => write!(f, "zigzag {n}"),
            Family::Wheel(n) => write!(f, "wheel {n}"),
            Family::Cube(n) => write!(f, "cube {n}"),
            Family::Null(n) => write!(f, "null {n}"),
            Family::Star(n) => write!(f, "star {n}"),
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} needs a positive size")))
    } else {
        Ok(())
    }
}

/// Canonical labeled instance of a family.
pub fn make_family(family: Family) -> Result<Pseudograph> {
    let mut edges = Vec::new();
    let order = match family {
        Family::Complete(p) => {
            positive(p, "complete")?;
            for i in 0..p {
                for j in i + 1..p {
                    edges.push((i, j));
                }
            }
            p
        }
        Family::CompleteBipartite(m, n) => {
            positive(m, "complete_bipartite")?;
            positive(n, "complete_bipartite")?;
            for i in 0..m {
                for j in 0..n {
                    edges.push((i, m + j));
                }
            }
            m + n
        }
        Family::Cycle(n) => {
            positive(n, "cycle")?;
            for i in 0..n {
                edges.push((i, (i + 1) % n));
            }
            n
        }
        Family::Path(n) => {
            positive(n, "path")?;
            for i in 1..n {
                edges.push((i - 1, i));
            }
            n
        }
        Family::Fan(n) => {
            positive(n, "fan")?;
            for i in 1..=n {
                edges.push((0, i));
            }
            for i in 1..n {
                edges.push((i, i + 1));
            }
            n + 1
        }
        Family::Ladder(n) => {
            positive(n, "ladder")?;
            for i in 0..n {
                edges.push((i, n + i));
            }
            for i in 1..n {
                edges.push((i - 1, i));
                edges.push((n + i - 1, n + i));
            }
            2 * n
        }
        Family::Zigzag(n) => {
            positive(n, "zigzag")?;
            for i in 0..n {
                edges.push((i, i + 1));
                if i + 2 <= n {
                    edges.push((i, i + 2));
                }
            }
            n + 1
        }
        Family::Wheel(n) => {
            positive(n, "wheel")?;
            for i in 1..=n {
                edges.push((0, i));
            }
            for i in 1..=n {
                edges.push((i, i % n + 1));
            }
            n + 1
        }
        Family::Cube(n) => {
            positive(n, "cube")?;
            if n > 20 {
                return Err(Error::GuardExceeded {
                    guard: "cube dimension",
                    actual: n,
                    limit: 20,
                });
            }
            let p = 1usize << n;
            for v in 0..p {
                for bit in 0..n {
                    let u = v ^ (1 << bit);
                    if v < u {
                        edges.push((v, u));
                    }
                }
            }
            p
        }
        Family::Null(p) => {
            positive(p, "null")?;
            p
        }
        Family::Star(k) => {
            positive(k, "star")?;
            for i in 1..=k {
                edges.push((0, i));
            }
            k + 1
        }
    };
    Pseudograph::new(order, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_one_is_single_edge() {
        let g = make_family(Family::Fan(1)).unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn cube_three() {
        let g = make_family(Family::Cube(3)).unwrap();
        assert_eq!((g.order(), g.size()), (8, 12));
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn wheel_three_is_k4() {
        let g = make_family(Family::Wheel(3)).unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
        assert!(g.is_simple());
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn edge_counts() {
        for p in 1..9 {
            assert_eq!(make_family(Family::Complete(p)).unwrap().size(), p * (p - 1) / 2);
            for n in 1..5 {
                assert_eq!(
                    make_family(Family::CompleteBipartite(p, n)).unwrap().size(),
                    p * n
                );
            }
        }
        assert_eq!(make_family(Family::Ladder(3)).unwrap().size(), 7);
        assert_eq!(make_family(Family::Zigzag(4)).unwrap().size(), 7);
    }

    #[test]
    fn small_cycles_are_pseudographs() {
        assert_eq!(make_family(Family::Cycle(1)).unwrap().edges(), &[(0, 0)]);
        assert_eq!(make_family(Family::Cycle(2)).unwrap().multiplicity(0, 1), 2);
    }

    #[test]
    fn parse_errors() {
        assert!("tesseract 4".parse::<Family>().is_err());
        assert!("complete 0".parse::<Family>().map(make_family).unwrap().is_err());
        assert_eq!(
            "complete_bipartite 2 3".parse::<Family>().unwrap(),
            Family::CompleteBipartite(2, 3)
        );
    }
}
