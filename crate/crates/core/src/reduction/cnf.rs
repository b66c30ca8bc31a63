use super::ReductionError;
use serde::Serialize;
use std::fmt;

/// A literal: variable index (1-based) and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// DIMACS form: `var` or `-var`.
    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn from_dimacs(x: i64) -> Self {
        Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    fn holds(self, assignment: u32) -> bool {
        ((assignment >> (self.var - 1)) & 1 == 1) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "¬x{}", self.var)
        }
    }
}

/// A 3CNF formula; literals may repeat inside a clause.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, ReductionError> {
        for c in &clauses {
            for l in c {
                if l.var == 0 || l.var > num_vars {
                    return Err(ReductionError::BadLiteral(l.to_dimacs(), num_vars));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Builds a formula from DIMACS-style integers.
    pub fn from_ints(num_vars: usize, clauses: &[[i64; 3]]) -> Result<Self, ReductionError> {
        let cl = clauses
            .iter()
            .map(|c| c.map(Literal::from_dimacs))
            .collect();
        CnfFormula::new(num_vars, cl)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Parses DIMACS CNF with exactly three literals per clause.
    pub fn parse_dimacs(text: &str) -> Result<Self, ReductionError> {
        let mut header: Option<(usize, usize)> = None;
        let mut nums: Vec<i64> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(ReductionError::Dimacs(format!("line {}: bad header", ln + 1)));
                }
                let n = parts[2].parse().map_err(|_| ReductionError::Dimacs("bad variable count".into()))?;
                let m = parts[3].parse().map_err(|_| ReductionError::Dimacs("bad clause count".into()))?;
                header = Some((n, m));
                continue;
            }
            for tok in line.split_whitespace() {
                let x: i64 = tok
                    .parse()
                    .map_err(|_| ReductionError::Dimacs(format!("line {}: bad token {tok:?}", ln + 1)))?;
                nums.push(x);
            }
        }
        let (n, m) = header.ok_or_else(|| ReductionError::Dimacs("missing p cnf header".into()))?;
        let mut clauses = Vec::new();
        let mut cur = Vec::new();
        for x in nums {
            if x == 0 {
                if cur.len() != 3 {
                    return Err(ReductionError::Dimacs(format!(
                        "clause {} has {} literals, expected 3",
                        clauses.len() + 1,
                        cur.len()
                    )));
                }
                clauses.push([cur[0], cur[1], cur[2]]);
                cur.clear();
            } else {
                cur.push(Literal::from_dimacs(x));
            }
        }
        if !cur.is_empty() {
            return Err(ReductionError::Dimacs("last clause is not terminated by 0".into()));
        }
        if clauses.len() != m {
            return Err(ReductionError::Dimacs(format!(
                "header announces {m} clauses, found {}",
                clauses.len()
            )));
        }
        CnfFormula::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!(
                "{} {} {} 0\n",
                c[0].to_dimacs(),
                c[1].to_dimacs(),
                c[2].to_dimacs()
            ));
        }
        s
    }
}

/// Clause types after preprocessing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClauseType {
    /// (pos, pos, FALSE)
    I,
    /// (neg, pos, pos)
    II,
    /// (pos, neg, neg)
    III,
    /// (neg, neg, FALSE)
    IV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Lit(Literal),
    False,
}

impl Slot {
    fn holds(self, assignment: u32) -> bool {
        match self {
            Slot::Lit(l) => l.holds(assignment),
            Slot::False => false,
        }
    }
}

/// A clause in one of the four normalized shapes, slots in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TransformedClause {
    pub kind: ClauseType,
    pub slots: [Slot; 3],
}

/// Normalizes one clause. `next_var` is the next unused variable index and
/// is advanced for every fresh variable introduced.
pub fn transform_clause(c: &[Literal; 3], next_var: &mut usize) -> Vec<TransformedClause> {
    let npos = c.iter().filter(|l| l.positive).count();
    match npos {
        3 => {
            let y = *next_var;
            *next_var += 1;
            vec![
                TransformedClause {
                    kind: ClauseType::I,
                    slots: [Slot::Lit(c[2]), Slot::Lit(Literal::pos(y)), Slot::False],
                },
                TransformedClause {
                    kind: ClauseType::II,
                    slots: [Slot::Lit(Literal::neg(y)), Slot::Lit(c[0]), Slot::Lit(c[1])],
                },
            ]
        }
        0 => {
            let y = *next_var;
            *next_var += 1;
            vec![
                TransformedClause {
                    kind: ClauseType::III,
                    slots: [Slot::Lit(Literal::pos(y)), Slot::Lit(c[0]), Slot::Lit(c[1])],
                },
                TransformedClause {
                    kind: ClauseType::IV,
                    slots: [Slot::Lit(c[2]), Slot::Lit(Literal::neg(y)), Slot::False],
                },
            ]
        }
        _ => {
            let negs: Vec<Literal> = c.iter().copied().filter(|l| !l.positive).collect();
            let poss: Vec<Literal> = c.iter().copied().filter(|l| l.positive).collect();
            if npos == 2 {
                vec![TransformedClause {
                    kind: ClauseType::II,
                    slots: [Slot::Lit(negs[0]), Slot::Lit(poss[0]), Slot::Lit(poss[1])],
                }]
            } else {
                vec![TransformedClause {
                    kind: ClauseType::III,
                    slots: [Slot::Lit(poss[0]), Slot::Lit(negs[0]), Slot::Lit(negs[1])],
                }]
            }
        }
    }
}

/// Normalized formula: clauses and the new variable count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformedFormula {
    pub num_vars: usize,
    pub clauses: Vec<TransformedClause>,
}

/// Normalizes every clause; fresh variables are numbered `n+1, n+2, ...`
/// in clause order.
pub fn transform_formula(f: &CnfFormula) -> TransformedFormula {
    let mut next = f.num_vars() + 1;
    let clauses = f
        .clauses()
        .iter()
        .flat_map(|c| transform_clause(c, &mut next))
        .collect();
    TransformedFormula {
        num_vars: next - 1,
        clauses,
    }
}

/// Largest variable count accepted by [`brute_force_sat`].
pub const MAX_BRUTE_FORCE_VARS: usize = 24;

fn brute(n: usize, sat: impl Fn(u32) -> bool) -> Result<bool, ReductionError> {
    if n > MAX_BRUTE_FORCE_VARS {
        return Err(ReductionError::TooManyVariables(n));
    }
    Ok((0u32..(1u32 << n)).any(sat))
}

/// Truth-table satisfiability.
pub fn brute_force_sat(f: &CnfFormula) -> Result<bool, ReductionError> {
    brute(f.num_vars(), |a| {
        f.clauses().iter().all(|c| c.iter().any(|l| l.holds(a)))
    })
}

/// Truth-table satisfiability of a normalized formula; FALSE slots never hold.
pub fn brute_force_sat_transformed(f: &TransformedFormula) -> Result<bool, ReductionError> {
    brute(f.num_vars, |a| {
        f.clauses.iter().all(|c| c.slots.iter().any(|s| s.holds(a)))
    })
}
