use std::fmt;
use std::str::FromStr;

use super::SuperAlgebra;
use crate::error::{Error, Result};
use crate::linear::{Field, SparseVec};
use crate::parity::Parity;

/// The built-in test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// The ground field.
    Field,
    /// `K[x]/x^2`, `x` even.
    Dual,
    /// `K[x]/x^n`.
    Trunc(usize),
    /// Exterior algebra on `k` odd generators.
    Grassmann(usize),
    /// `r x r` matrices, purely even.
    Mat(usize),
    /// `(p+q) x (p+q)` matrices, `E_ij` of parity `|i| + |j|`.
    MatSuper(usize, usize),
    /// Group algebra of `Z/n`, purely even.
    GroupZ(usize),
}

const MAX_GRASSMANN: usize = 4;
const MAX_MATRIX: usize = 4;
const MAX_CYCLIC: usize = 16;

impl Builtin {
    /// The acceptance corpus.
    pub fn corpus() -> Vec<Builtin> {
        vec![
            Builtin::Field,
            Builtin::Dual,
            Builtin::Trunc(3),
            Builtin::Grassmann(1),
            Builtin::Grassmann(2),
            Builtin::Mat(2),
            Builtin::MatSuper(1, 1),
            Builtin::GroupZ(3),
        ]
    }

    /// Identifier used as the algebra name.
    pub fn ident(&self) -> String {
        match self {
            Builtin::Field => "field".into(),
            Builtin::Dual => "dual".into(),
            Builtin::Trunc(n) => format!("trunc{n}"),
            Builtin::Grassmann(k) => format!("grassmann{k}"),
            Builtin::Mat(r) => format!("mat{r}"),
            Builtin::MatSuper(p, q) => format!("mat{p}_{q}"),
            Builtin::GroupZ(n) => format!("group_z{n}"),
        }
    }

    pub fn build<F: Field>(&self, field: F) -> Result<SuperAlgebra<F>> {
        let algebra = match *self {
            Builtin::Field => truncated(field, 1),
            Builtin::Dual => truncated(field, 2),
            Builtin::Trunc(n) => {
                if n == 0 || n > MAX_CYCLIC {
                    return Err(Error::Input(format!("trunc({n}) needs 1 <= n <= {MAX_CYCLIC}")));
                }
                truncated(field, n)
            }
            Builtin::Grassmann(k) => {
                if k > MAX_GRASSMANN {
                    return Err(Error::Input(format!("grassmann({k}) exceeds the size guard k <= {MAX_GRASSMANN}")));
                }
                grassmann(field, k)
            }
            Builtin::Mat(r) => {
                if r == 0 || r > MAX_MATRIX {
                    return Err(Error::Input(format!("mat({r}) needs 1 <= r <= {MAX_MATRIX}")));
                }
                matrices(field, r, 0)
            }
            Builtin::MatSuper(p, q) => {
                if p + q == 0 || p + q > MAX_MATRIX {
                    return Err(Error::Input(format!("mat({p}|{q}) needs 1 <= p+q <= {MAX_MATRIX}")));
                }
                matrices(field, p, q)
            }
            Builtin::GroupZ(n) => {
                if n == 0 || n > MAX_CYCLIC {
                    return Err(Error::Input(format!("group_z({n}) needs 1 <= n <= {MAX_CYCLIC}")));
                }
                cyclic_group(field, n)
            }
        }?;
        Ok(algebra.with_name(self.ident()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ident())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `grassmann1`, `grassmann(1)`, `mat1_1`, `mat(1|1)` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Input(format!("unknown builtin algebra `{s}`"));
        let cleaned: String = s.chars().filter(|c| !matches!(c, '(' | ')')).collect();
        let split = cleaned.find(|c: char| c.is_ascii_digit()).unwrap_or(cleaned.len());
        let (head, args) = cleaned.split_at(split);
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        match (head, args) {
            ("field", "") => Ok(Builtin::Field),
            ("dual", "") => Ok(Builtin::Dual),
            ("trunc", n) => Ok(Builtin::Trunc(num(n)?)),
            ("grassmann", k) => Ok(Builtin::Grassmann(num(k)?)),
            ("group_z", n) => Ok(Builtin::GroupZ(num(n)?)),
            ("mat", rest) => match rest.split_once(['|', '_']) {
                Some((p, q)) => Ok(Builtin::MatSuper(num(p)?, num(q)?)),
                None => Ok(Builtin::Mat(num(rest)?)),
            },
            _ => Err(unknown()),
        }
    }
}

fn truncated<F: Field>(field: F, n: usize) -> Result<SuperAlgebra<F>> {
    let names = (0..n)
        .map(|i| match i {
            0 => "one".to_string(),
            1 => "x".to_string(),
            _ => format!("x{i}"),
        })
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(if i + j < n { SparseVec::unit(&field, i + j) } else { SparseVec::zero() });
        }
    }
    SuperAlgebra::new("trunc", field, names, vec![Parity::Even; n], 0, table)
}

fn grassmann<F: Field>(field: F, k: usize) -> Result<SuperAlgebra<F>> {
    let dim = 1usize << k;
    let names = (0..dim)
        .map(|mask| {
            if mask == 0 {
                "one".to_string()
            } else {
                let digits: String = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| char::from(b'1' + b as u8)).collect();
                format!("t{digits}")
            }
        })
        .collect();
    let parity = (0..dim).map(|mask: usize| Parity::from_bit(mask.count_ones() as usize)).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            if a & b != 0 {
                table.push(SparseVec::zero());
                continue;
            }
            // Sign of moving the generators of b past the larger generators of a.
            let swaps: u32 = (0..k).filter(|i| b >> i & 1 == 1).map(|i| (a >> (i + 1)).count_ones()).sum();
            let value = if swaps.is_multiple_of(2) { field.one() } else { field.neg(&field.one()) };
            table.push(SparseVec::single(&field, a | b, value));
        }
    }
    SuperAlgebra::new("grassmann", field, names, parity, 0, table)
}

fn matrices<F: Field>(field: F, p: usize, q: usize) -> Result<SuperAlgebra<F>> {
    let r = p + q;
    let index_parity = |i: usize| Parity::from_bit(usize::from(i >= p));
    let mut names = Vec::with_capacity(r * r);
    let mut parity = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            names.push(format!("e{}_{}", i + 1, j + 1));
            parity.push(index_parity(i) + index_parity(j));
        }
    }
    let mut table = Vec::with_capacity(r.pow(4));
    for a in 0..r * r {
        let (i, j) = (a / r, a % r);
        for b in 0..r * r {
            let (k, l) = (b / r, b % r);
            table.push(if j == k { SparseVec::unit(&field, i * r + l) } else { SparseVec::zero() });
        }
    }
    // With p+q = 1 the only unit is E_11; otherwise the identity is not a
    // basis element, so change basis to put it there.
    if r == 1 {
        return SuperAlgebra::new("mat", field, names, parity, 0, table);
    }
    identity_as_basis(field, names, parity, table, r)
}

/// Replaces `E_11` by the identity matrix `Σ E_ii` in the basis.
fn identity_as_basis<F: Field>(
    field: F,
    mut names: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<SparseVec<F::Elem>>,
    r: usize,
) -> Result<SuperAlgebra<F>> {
    let dim = r * r;
    let diag: Vec<usize> = (0..r).map(|i| i * r + i).collect();
    // old E_11 = new one - Σ_{i>1} E_ii
    let to_new = |v: &SparseVec<F::Elem>| -> SparseVec<F::Elem> {
        let mut pairs: Vec<(usize, F::Elem)> = v.iter().map(|(i, x)| (i, x.clone())).collect();
        if let Some(c) = v.get(0) {
            for &d in &diag[1..] {
                pairs.push((d, field.neg(c)));
            }
        }
        SparseVec::from_pairs(&field, pairs)
    };
    let from_new = |i: usize| -> SparseVec<F::Elem> {
        if i == 0 {
            SparseVec::from_pairs(&field, diag.iter().map(|&d| (d, field.one())).collect())
        } else {
            SparseVec::unit(&field, i)
        }
    };
    let mul_old = |a: &SparseVec<F::Elem>, b: &SparseVec<F::Elem>| {
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                for (k, z) in table[i * dim + j].iter() {
                    pairs.push((k, field.mul(&field.mul(x, y), z)));
                }
            }
        }
        SparseVec::from_pairs(&field, pairs)
    };
    let mut new_table = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            new_table.push(to_new(&mul_old(&from_new(a), &from_new(b))));
        }
    }
    names[0] = "one".into();
    SuperAlgebra::new("mat", field, names, parity, 0, new_table)
}

fn cyclic_group<F: Field>(field: F, n: usize) -> Result<SuperAlgebra<F>> {
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(SparseVec::unit(&field, (i + j) % n));
        }
    }
    SuperAlgebra::new("group_z", field, names, vec![Parity::Even; n], 0, table)
}
