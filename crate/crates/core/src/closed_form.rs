//! Closed-form conversion numbers for cycles, coronas and double coronas,
//! and the block-peeling recurrences they are derived from.
//!
//! The recurrences are evaluated step by step and bottom out in base facts
//! (threshold 1 on a connected graph, the cycle numbers, and the three
//! threshold-2 double-corona results), so they form an independent route to
//! the same values as the `conv_*` functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C_k(G)`: either a finite minimum, or `Inconvertible` when only the full
/// vertex set converts. The inconvertible variant carries `|V(G)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ConversionNumber {
    Finite(usize),
    Inconvertible(usize),
}

impl ConversionNumber {
    /// Normalises a raw minimum: a minimum equal to `|V|` is inconvertible.
    pub fn from_minimum(minimum: usize, num_vertices: usize) -> Self {
        if minimum == num_vertices {
            ConversionNumber::Inconvertible(num_vertices)
        } else {
            ConversionNumber::Finite(minimum)
        }
    }

    /// The seed count, `|V|` for inconvertible graphs.
    pub fn value(self) -> usize {
        match self {
            ConversionNumber::Finite(m) | ConversionNumber::Inconvertible(m) => m,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            ConversionNumber::Finite(m) => Some(m),
            ConversionNumber::Inconvertible(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ConversionNumber::Finite(_))
    }
}

impl fmt::Display for ConversionNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConversionNumber::Finite(m) => write!(f, "{m}"),
            ConversionNumber::Inconvertible(v) => write!(f, "inconvertible({v})"),
        }
    }
}

fn check(n: usize, k: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    if k < 1 {
        return Err(Error::InvalidThreshold { k, min: 1 });
    }
    Ok(())
}

/// `C_k(C_n)`: 1 for `k = 1`, `⌈n/2⌉` for `k = 2`, inconvertible above.
pub fn conv_cycle(n: usize, k: usize) -> Result<ConversionNumber> {
    check(n, k)?;
    Ok(match k {
        1 => ConversionNumber::Finite(1),
        2 => ConversionNumber::Finite(n.div_ceil(2)),
        _ => ConversionNumber::Inconvertible(n),
    })
}

/// `C_k(C_n ⊙ K_p)`.
pub fn conv_corona(n: usize, p: usize, k: usize) -> Result<ConversionNumber> {
    check(n, k)?;
    if p == 0 {
        return conv_cycle(n, k);
    }
    Ok(if k <= p + 1 {
        ConversionNumber::Finite((k - 1) * n + 1)
    } else if k == p + 2 {
        ConversionNumber::Finite(p * n + n.div_ceil(2))
    } else {
        ConversionNumber::Inconvertible(n * (p + 1))
    })
}

/// `C_2(C_n ⊙⊙ K_p)` for `p ≥ 2`, in the `⌊(3n+3)/4⌋` form.
#[allow(clippy::manual_div_ceil)]
fn double_corona_base(n: usize) -> usize {
    (3 * n + 3) / 4
}

/// `C_k(C_n ⊙⊙ K_p)`.
pub fn conv_double_corona(n: usize, p: usize, k: usize) -> Result<ConversionNumber> {
    check(n, k)?;
    let order = n * (p + 2);
    if k == 1 {
        // p = 0 leaves two disjoint cycles, one seed each.
        return Ok(ConversionNumber::Finite(if p == 0 { 2 } else { 1 }));
    }
    if p == 0 {
        return Ok(match conv_cycle(n, k)? {
            ConversionNumber::Finite(c) => ConversionNumber::Finite(2 * c),
            ConversionNumber::Inconvertible(_) => ConversionNumber::Inconvertible(order),
        });
    }
    Ok(if k <= p {
        // residual block size p - (k - 2) is at least 2 exactly when k <= p
        debug_assert!(p - (k - 2) >= 2);
        ConversionNumber::Finite((k - 2) * n + double_corona_base(n))
    } else if k == p + 1 {
        ConversionNumber::Finite(p * n)
    } else if k == p + 2 {
        ConversionNumber::Finite(p * n + 2 * n.div_ceil(2))
    } else {
        ConversionNumber::Inconvertible(order)
    })
}

/// Evaluates `C_k(C_n ⊙ K_p) = r·n + C_{k-r}(C_n ⊙ K_{p-r})` with
/// `r = min(k-1, p)` until the threshold is 1 or the blocks are gone.
pub fn reduce_corona(n: usize, p: usize, k: usize) -> Result<ConversionNumber> {
    check(n, k)?;
    let (mut p_left, mut k_left, mut peeled) = (p, k, 0);
    loop {
        if k_left == 1 {
            // any single vertex of a connected graph
            return Ok(ConversionNumber::Finite(peeled + 1));
        }
        if p_left == 0 {
            return Ok(match conv_cycle(n, k_left)? {
                ConversionNumber::Finite(c) => ConversionNumber::Finite(peeled + c),
                ConversionNumber::Inconvertible(residual) => {
                    ConversionNumber::Inconvertible(peeled + residual)
                }
            });
        }
        let r = (k_left - 1).min(p_left);
        peeled += r * n;
        k_left -= r;
        p_left -= r;
    }
}

/// Evaluates `C_k(C_n ⊙⊙ K_p) = τ·n + C_{k-τ}(C_n ⊙⊙ K_{p-τ})` with
/// `τ = min(k-2, p)` down to the threshold-2 cases or the bare two cycles.
/// Requires `k ≥ 2`.
pub fn reduce_double_corona(n: usize, p: usize, k: usize) -> Result<ConversionNumber> {
    check(n, k)?;
    if k < 2 {
        return Err(Error::InvalidThreshold { k, min: 2 });
    }
    let (mut p_left, mut k_left, mut peeled) = (p, k, 0);
    loop {
        if p_left == 0 {
            // two disjoint copies of C_n
            return Ok(match conv_cycle(n, k_left)? {
                ConversionNumber::Finite(c) => ConversionNumber::Finite(peeled + 2 * c),
                ConversionNumber::Inconvertible(residual) => {
                    ConversionNumber::Inconvertible(peeled + 2 * residual)
                }
            });
        }
        if k_left == 2 {
            let base = if p_left == 1 { n } else { n - n / 4 };
            return Ok(ConversionNumber::Finite(peeled + base));
        }
        let tau = (k_left - 2).min(p_left);
        peeled += tau * n;
        k_left -= tau;
        p_left -= tau;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConversionNumber::*;

    #[test]
    fn cycle_values() {
        assert_eq!(conv_cycle(9, 2), Ok(Finite(5)));
        assert_eq!(conv_cycle(4, 1), Ok(Finite(1)));
        assert_eq!(conv_cycle(5, 3), Ok(Inconvertible(5)));
        assert_eq!(conv_cycle(5, 3).unwrap().value(), 5);
        assert_eq!(conv_cycle(2, 2), Err(Error::CycleTooShort(2)));
        assert!(conv_cycle(5, 0).is_err());
    }

    #[test]
    fn corona_values() {
        assert_eq!(conv_corona(5, 3, 3), Ok(Finite(11)));
        assert_eq!(conv_corona(9, 4, 6), Ok(Finite(41)));
        assert_eq!(conv_corona(3, 1, 1), Ok(Finite(1)));
        assert_eq!(conv_corona(3, 1, 4), Ok(Inconvertible(6)));
        assert!(conv_corona(2, 1, 1).is_err());
    }

    #[test]
    fn double_corona_values() {
        assert_eq!(conv_double_corona(3, 5, 2), Ok(Finite(3)));
        assert_eq!(conv_double_corona(4, 3, 4), Ok(Finite(12)));
        assert_eq!(conv_double_corona(7, 1, 3), Ok(Finite(15)));
        assert_eq!(conv_double_corona(4, 0, 1), Ok(Finite(2)));
        assert_eq!(conv_double_corona(4, 0, 2), Ok(Finite(4)));
        assert_eq!(conv_double_corona(5, 0, 2), Ok(Finite(6)));
        assert_eq!(conv_double_corona(4, 0, 3), Ok(Inconvertible(8)));
        assert_eq!(conv_double_corona(3, 1, 5), Ok(Inconvertible(9)));
    }

    #[test]
    fn corona_reduction_examples() {
        assert_eq!(reduce_corona(8, 3, 3), Ok(Finite(17)));
        assert_eq!(reduce_corona(5, 2, 4), Ok(Finite(13)));
        assert_eq!(reduce_corona(3, 0, 2), Ok(Finite(2)));
    }

    #[test]
    fn double_corona_reduction_examples() {
        assert_eq!(reduce_double_corona(5, 3, 4), Ok(Finite(15)));
        assert_eq!(reduce_double_corona(4, 2, 2), Ok(Finite(3)));
        assert_eq!(reduce_double_corona(3, 1, 5), Ok(Inconvertible(9)));
        assert!(reduce_double_corona(4, 2, 1).is_err());
    }

    #[test]
    fn floor_identity() {
        for n in 3..=10_000 {
            assert_eq!((3 * n + 3) / 4, n - n / 4, "n = {n}");
        }
    }

    #[test]
    fn formula_matches_reduction_on_grid() {
        for n in 3..=12 {
            for p in 0..=6 {
                for k in 1..=p + 4 {
                    assert_eq!(
                        conv_corona(n, p, k),
                        reduce_corona(n, p, k),
                        "({n},{p},{k})"
                    );
                    if k >= 2 {
                        assert_eq!(
                            conv_double_corona(n, p, k),
                            reduce_double_corona(n, p, k),
                            "({n},{p},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_cases_agree() {
        for n in 3..60 {
            assert_eq!(conv_double_corona(n, 1, 2), Ok(Finite(n)));
            for k in 1..6 {
                assert_eq!(conv_corona(n, 0, k), conv_cycle(n, k));
            }
        }
    }

    #[test]
    fn finite_values_bounded_by_order() {
        for n in 3..=12 {
            for p in 0..=6 {
                for k in 1..=p + 4 {
                    if let Finite(m) = conv_corona(n, p, k).unwrap() {
                        assert!(1 <= m && m < n * (p + 1));
                    }
                    if let Finite(m) = conv_double_corona(n, p, k).unwrap() {
                        assert!(1 <= m && m < n * (p + 2));
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_json() {
        assert_eq!(Finite(41).to_string(), "41");
        assert_eq!(Inconvertible(9).to_string(), "inconvertible(9)");
        let json = serde_json::to_string(&Inconvertible(9)).unwrap();
        assert_eq!(json, r#"{"kind":"inconvertible","value":9}"#);
        assert_eq!(
            serde_json::from_str::<ConversionNumber>(&json).unwrap(),
            Inconvertible(9)
        );
    }
}
