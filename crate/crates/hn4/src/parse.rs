//! Line-oriented input format for algebras and its parser.
//!
//! ```text
//! # aff(C), signature (2,0) variant
//! dim = 4
//! bracket 1 3 = 1 e_1
//! bracket 2 4 = -1 e_1
//! bracket 1 4 = 1 e_2
//! bracket 2 3 = 1 e_2
//! metric = diag(1,1,-1,-1)
//! structure = standard
//! ```
//!
//! Only `i < j` bracket lines are accepted, so antisymmetry is never
//! ambiguous; unspecified brackets are zero. Coefficients are exact
//! rationals written `p` or `p/q`. The `metric` line is optional and
//! defaults to the neutral `diag(1,1,-1,-1)`; `structure` is optional and
//! must be the token `standard`. A `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::exact::Rational;
use crate::hnstruct::{HNStructure, Metric, MetricError};
use crate::liealg::LieAlgebra;

const DIM: usize = 4;

/// Parsed form of an input file. Indices are 0-based in memory and 1-based
/// in the file format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub brackets: Vec<BracketLine>,
    /// Diagonal metric entries, if a `metric` line was present.
    pub metric_diagonal: Option<[Rational; 4]>,
}

/// One `bracket i j = ...` line, 0-based, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketLine {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(Rational, usize)>,
}

/// Syntax or structural error, with the 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parses the grammar above. Duplicate `(i, j)` bracket lines, `i >= j`,
/// indices outside 1..4, and `dim != 4` are rejected.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut dim: Option<usize> = None;
    let mut brackets: Vec<BracketLine> = Vec::new();
    let mut seen_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut metric_diagonal: Option<[Rational; 4]> = None;
    let mut structure_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| err(lineno, "expected `key = value`"))?;
        let lhs_tokens: Vec<&str> = lhs.split_whitespace().collect();
        let rhs = rhs.trim();
        match lhs_tokens.as_slice() {
            ["dim"] => {
                if dim.is_some() {
                    return Err(err(lineno, "duplicate `dim` line"));
                }
                let value: usize = rhs
                    .parse()
                    .map_err(|_| err(lineno, format!("invalid dimension `{rhs}`")))?;
                if value != DIM {
                    return Err(err(lineno, format!("dim must be 4, got {value}")));
                }
                dim = Some(value);
            }
            ["bracket", i_str, j_str] => {
                let i = parse_index(i_str, lineno)?;
                let j = parse_index(j_str, lineno)?;
                if i >= j {
                    return Err(err(
                        lineno,
                        format!(
                            "bracket indices must satisfy i < j (the antisymmetric \
                             counterpart is implied); got {} {}",
                            i + 1,
                            j + 1
                        ),
                    ));
                }
                if !seen_pairs.insert((i, j)) {
                    return Err(err(
                        lineno,
                        format!("duplicate bracket line for ({}, {})", i + 1, j + 1),
                    ));
                }
                let terms = parse_terms(rhs, lineno)?;
                brackets.push(BracketLine { i, j, terms });
            }
            ["metric"] => {
                if metric_diagonal.is_some() {
                    return Err(err(lineno, "duplicate `metric` line"));
                }
                metric_diagonal = Some(parse_diag(rhs, lineno)?);
            }
            ["structure"] => {
                if structure_seen {
                    return Err(err(lineno, "duplicate `structure` line"));
                }
                if rhs != "standard" {
                    return Err(err(
                        lineno,
                        format!("unsupported structure `{rhs}`; only `standard` exists"),
                    ));
                }
                structure_seen = true;
            }
            _ => {
                return Err(err(lineno, format!("unknown directive `{}`", lhs.trim())));
            }
        }
    }

    let Some(dim) = dim else {
        return Err(err(text.lines().count() + 1, "missing `dim = 4` line"));
    };
    Ok(AlgebraFile {
        dim,
        brackets,
        metric_diagonal,
    })
}

fn parse_index(token: &str, lineno: usize) -> Result<usize, ParseError> {
    let value: usize = token
        .parse()
        .map_err(|_| err(lineno, format!("invalid basis index `{token}`")))?;
    if !(1..=DIM).contains(&value) {
        return Err(err(lineno, format!("basis index {value} out of range 1..4")));
    }
    Ok(value - 1)
}

fn parse_terms(rhs: &str, lineno: usize) -> Result<Vec<(Rational, usize)>, ParseError> {
    let mut terms = Vec::new();
    for piece in rhs.split('+') {
        let tokens: Vec<&str> = piece.split_whitespace().collect();
        let [coeff_str, basis_str] = tokens.as_slice() else {
            return Err(err(
                lineno,
                format!("expected `coefficient e_k` terms joined by `+`, got `{}`", piece.trim()),
            ));
        };
        let coeff: Rational = coeff_str
            .parse()
            .map_err(|_| err(lineno, format!("invalid rational `{coeff_str}`")))?;
        let k_str = basis_str
            .strip_prefix("e_")
            .ok_or_else(|| err(lineno, format!("expected basis symbol `e_k`, got `{basis_str}`")))?;
        let k = parse_index(k_str, lineno)?;
        terms.push((coeff, k));
    }
    Ok(terms)
}

fn parse_diag(rhs: &str, lineno: usize) -> Result<[Rational; 4], ParseError> {
    let inner = rhs
        .strip_prefix("diag(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(lineno, format!("expected `diag(a,b,c,d)`, got `{rhs}`")))?;
    let entries: Vec<&str> = inner.split(',').collect();
    if entries.len() != DIM {
        return Err(err(lineno, format!("metric needs 4 entries, got {}", entries.len())));
    }
    let mut out = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    for (slot, entry) in out.iter_mut().zip(&entries) {
        *slot = entry
            .trim()
            .parse()
            .map_err(|_| err(lineno, format!("invalid rational `{}`", entry.trim())))?;
    }
    Ok(out)
}

impl AlgebraFile {
    /// The algebra described by the bracket lines.
    pub fn to_lie_algebra(&self) -> LieAlgebra {
        let specs: Vec<_> = self
            .brackets
            .iter()
            .map(|b| ((b.i, b.j), b.terms.clone()))
            .collect();
        LieAlgebra::from_brackets(&specs)
    }

    /// The metric: the declared diagonal, or the neutral default.
    pub fn metric(&self) -> Result<Metric, MetricError> {
        match &self.metric_diagonal {
            Some(diag) => Metric::diagonal(diag),
            None => Ok(Metric::standard()),
        }
    }

    /// The standard structure over [`AlgebraFile::metric`].
    pub fn structure(&self) -> Result<HNStructure, MetricError> {
        Ok(HNStructure::with_metric(self.metric()?))
    }

    /// Canonical export of an algebra in the file format.
    pub fn from_algebra(alg: &LieAlgebra, metric_diagonal: Option<[Rational; 4]>) -> Self {
        let brackets = crate::catalog::bracket_lines(alg)
            .into_iter()
            .map(|((i, j), terms)| BracketLine { i, j, terms })
            .collect();
        AlgebraFile {
            dim: DIM,
            brackets,
            metric_diagonal,
        }
    }

    /// Renders the file format, with an optional leading comment.
    pub fn to_text(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(comment) = comment {
            let _ = writeln!(out, "# {comment}");
        }
        let _ = writeln!(out, "dim = {}", self.dim);
        for bracket in &self.brackets {
            let terms: Vec<String> = bracket
                .terms
                .iter()
                .map(|(c, k)| format!("{} e_{}", c, k + 1))
                .collect();
            let _ = writeln!(
                out,
                "bracket {} {} = {}",
                bracket.i + 1,
                bracket.j + 1,
                terms.join(" + ")
            );
        }
        let diag = self.metric_diagonal.clone().unwrap_or_else(|| {
            [
                Rational::one(),
                Rational::one(),
                Rational::from_integer(-1),
                Rational::from_integer(-1),
            ]
        });
        let _ = writeln!(
            out,
            "metric = diag({},{},{},{})",
            diag[0], diag[1], diag[2], diag[3]
        );
        let _ = writeln!(out, "structure = standard");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::Vector4;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn minimal_file_is_the_abelian_algebra() {
        let file = parse_algebra_file("dim = 4").unwrap();
        assert!(file.brackets.is_empty());
        assert!(file.to_lie_algebra().structure_constants().is_zero());
        assert_eq!(file.metric().unwrap(), Metric::standard());
    }

    #[test]
    fn single_bracket_line() {
        let file = parse_algebra_file("dim = 4\nbracket 1 2 = 1 e_2\n").unwrap();
        let alg = file.to_lie_algebra();
        assert_eq!(alg.bracket_basis(0, 1), Vector4::basis(1));
    }

    #[test]
    fn rational_coefficients_and_sums() {
        let file =
            parse_algebra_file("dim = 4\nbracket 3 4 = 1/2 e_2\nbracket 1 2 = -1/2 e_3 + 2 e_4\n")
                .unwrap();
        let alg = file.to_lie_algebra();
        assert_eq!(alg.bracket_basis(2, 3), Vector4::basis(1).scale(&r(1, 2)));
        let v = alg.bracket_basis(0, 1);
        assert_eq!(v[2], r(-1, 2));
        assert_eq!(v[3], r(2, 1));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a comment\n\ndim = 4  # trailing\n# bracket 1 2 = 1 e_2\n";
        let file = parse_algebra_file(text).unwrap();
        assert!(file.brackets.is_empty());
    }

    #[test]
    fn metric_line_is_parsed() {
        let file = parse_algebra_file("dim = 4\nmetric = diag(1,1,-1,-1)\n").unwrap();
        assert_eq!(file.metric().unwrap(), Metric::standard());
        let degenerate = parse_algebra_file("dim = 4\nmetric = diag(1,0,-1,-1)\n").unwrap();
        assert!(degenerate.metric().is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_algebra_file("dim = 4\nbracket 2 1 = 1 e_3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_algebra_file("dim = 3\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_algebra_file("dim = 4\nbracket 1 2 = 1 e_5\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_algebra_file("dim = 4\nbracket 1 2 = 1 e_2\nbracket 1 2 = 1 e_3\n")
            .unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));
        let e = parse_algebra_file("dim = 4\nnonsense here\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_algebra_file("bracket 1 2 = 1 e_2\n").unwrap_err();
        assert!(e.message.contains("missing `dim = 4`"));
        let e = parse_algebra_file("dim = 4\nstructure = fancy\n").unwrap_err();
        assert!(e.message.contains("standard"));
        let e = parse_algebra_file("dim = 4\nbracket 1 2 = e_2\n").unwrap_err();
        assert!(e.message.contains("coefficient"));
    }

    #[test]
    fn catalog_cases_round_trip_through_the_format() {
        for (name, _) in catalog::list_cases() {
            let case = catalog::get_case(name).unwrap();
            let file = AlgebraFile::from_algebra(&case.algebra, None);
            let text = file.to_text(Some(name));
            let parsed = parse_algebra_file(&text).unwrap();
            assert_eq!(parsed.to_lie_algebra(), case.algebra, "{name}");
        }
    }
}
