use std::fmt;

use crate::genword::MatM;

/// Generators of the matrix monoid: `L = (1 1; 0 1)`, `S = (0 1; 1 0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MatLetter {
    L,
    S,
}

impl MatLetter {
    pub fn matrix(self) -> MatM {
        match self {
            MatLetter::L => MatM::L,
            MatLetter::S => MatM::SWAP,
        }
    }
}

impl fmt::Display for MatLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatLetter::L => "L",
            MatLetter::S => "S",
        })
    }
}

/// Euclidean row reduction: a word over `{L, S}` whose product is `m`.
pub fn matm_factor(m: &MatM) -> Vec<MatLetter> {
    let mut out = Vec::new();
    let (mut r1, mut r2) = ((m.i, m.j), (m.k, m.l));
    loop {
        let cur = MatM {
            i: r1.0,
            j: r1.1,
            k: r2.0,
            l: r2.1,
        };
        if cur == MatM::IDENTITY {
            break;
        }
        if cur == MatM::SWAP {
            out.push(MatLetter::S);
            break;
        }
        if r1.0 >= r2.0 && r1.1 >= r2.1 {
            out.push(MatLetter::L);
            r1 = (r1.0 - r2.0, r1.1 - r2.1);
        } else if r2.0 >= r1.0 && r2.1 >= r1.1 {
            out.push(MatLetter::S);
            std::mem::swap(&mut r1, &mut r2);
        } else {
            unreachable!("rows of a determinant ±1 matrix over ℕ are comparable");
        }
    }
    out
}

pub fn matm_product(w: &[MatLetter]) -> MatM {
    w.iter()
        .fold(MatM::IDENTITY, |acc, l| acc.mul(&l.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use MatLetter::{L, S};

    #[test]
    fn examples() {
        let m = MatM::new(1, 2, 1, 3).unwrap();
        let w = matm_factor(&m);
        assert_eq!(w, vec![S, L, S, L, L]);
        assert_eq!(matm_product(&w), m);
        assert!(matm_factor(&MatM::IDENTITY).is_empty());
        assert_eq!(matm_factor(&MatM::SWAP), vec![S]);
    }
}
