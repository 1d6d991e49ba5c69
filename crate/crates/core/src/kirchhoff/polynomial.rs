use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// Multilinear polynomial in edge variables with integer coefficients.
///
/// Monomials are bitsets over `variables`: bit `i` stands for the variable
/// of edge `variables[i]`. At most 64 variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPolynomial {
    variables: Vec<EdgeId>,
    monomials: BTreeMap<u64, i64>,
}

impl GraphPolynomial {
    pub const MAX_VARIABLES: usize = 64;

    /// `variables` must be sorted and distinct.
    pub fn new(variables: Vec<EdgeId>, monomials: BTreeMap<u64, i64>) -> Result<Self> {
        if variables.len() > Self::MAX_VARIABLES {
            return Err(Error::TooManyEdges {
                edges: variables.len(),
                limit: Self::MAX_VARIABLES,
            });
        }
        if variables.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "polynomial variables must be sorted and distinct".into(),
            ));
        }
        let unused = !full_mask(variables.len());
        if monomials.keys().any(|&m| m & unused != 0) {
            return Err(Error::InvalidParameter(
                "monomial refers to a variable outside the variable list".into(),
            ));
        }
        let monomials = monomials.into_iter().filter(|&(_, c)| c != 0).collect();
        Ok(GraphPolynomial {
            variables,
            monomials,
        })
    }

    pub fn variables(&self) -> &[EdgeId] {
        &self.variables
    }

    /// Raw bitset monomials with their coefficients.
    pub fn raw_monomials(&self) -> &BTreeMap<u64, i64> {
        &self.monomials
    }

    /// Monomials as sorted edge-id lists, in canonical order.
    pub fn monomials(&self) -> Vec<(Vec<EdgeId>, i64)> {
        let mut out: Vec<(Vec<EdgeId>, i64)> = self
            .monomials
            .iter()
            .map(|(&bits, &c)| (self.edges_of(bits), c))
            .collect();
        out.sort();
        out
    }

    pub fn edges_of(&self, bits: u64) -> Vec<EdgeId> {
        (0..self.variables.len())
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| self.variables[i])
            .collect()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Common degree of all monomials, or `None` if not homogeneous (or zero).
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.monomials.keys().map(|m| m.count_ones());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `(prod_e x_e) * P(1/x)`: every monomial replaced by its complement.
    pub fn complement(&self) -> GraphPolynomial {
        let full = full_mask(self.variables.len());
        GraphPolynomial {
            variables: self.variables.clone(),
            monomials: self.monomials.iter().map(|(&m, &c)| (full & !m, c)).collect(),
        }
    }

    /// Evaluates with `value(edge_id)` for each variable.
    pub fn evaluate(&self, value: impl Fn(EdgeId) -> f64) -> f64 {
        let values: Vec<f64> = self.variables.iter().map(|&e| value(e)).collect();
        self.monomials
            .iter()
            .map(|(&bits, &c)| {
                let mut term = c as f64;
                for (i, x) in values.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        term *= x;
                    }
                }
                term
            })
            .sum()
    }
}

pub(crate) fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Canonical text form: monomials `a<id>*a<id>` in lexicographic order of
/// their sorted edge-id lists, joined by ` + `. Coefficients other than 1 are
/// written as a leading factor; the zero polynomial prints as `0` and the
/// empty monomial as `1`.
impl fmt::Display for GraphPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, (edges, coefficient)) in self.monomials().iter().enumerate() {
            let factors: Vec<String> = edges.iter().map(|e| format!("a{e}")).collect();
            let mut term = match (*coefficient, factors.is_empty()) {
                (1, false) => String::new(),
                (-1, false) => "-".to_string(),
                (c, true) => c.to_string(),
                (c, false) => format!("{c}*"),
            };
            term.push_str(&factors.join("*"));
            match (i, term.strip_prefix('-')) {
                (0, _) => f.write_str(&term)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_complement() {
        let p = GraphPolynomial::new(
            vec![0, 1, 2],
            BTreeMap::from([(0b001, 1), (0b010, 1), (0b100, 1)]),
        )
        .unwrap();
        assert_eq!(p.to_string(), "a0 + a1 + a2");
        assert_eq!(p.degree(), Some(1));
        let c = p.complement();
        assert_eq!(c.to_string(), "a0*a1 + a0*a2 + a1*a2");
        assert_eq!(c.complement(), p);
    }

    #[test]
    fn constants_and_signs() {
        let one = GraphPolynomial::new(vec![4], BTreeMap::from([(0, 1)])).unwrap();
        assert_eq!(one.to_string(), "1");
        let mixed = GraphPolynomial::new(vec![3, 7], BTreeMap::from([(0b01, 2), (0b10, -1)])).unwrap();
        assert_eq!(mixed.to_string(), "2*a3 - a7");
        assert_eq!(mixed.evaluate(|e| e as f64), 2.0 * 3.0 - 7.0);
        let zero = GraphPolynomial::new(vec![], BTreeMap::new()).unwrap();
        assert_eq!(zero.to_string(), "0");
        assert_eq!(zero.degree(), None);
    }

    #[test]
    fn rejects_bad_variable_lists() {
        assert!(GraphPolynomial::new(vec![2, 1], BTreeMap::new()).is_err());
        assert!(GraphPolynomial::new(vec![0], BTreeMap::from([(0b10, 1)])).is_err());
    }
}
