//! JSON form of elements: `{basis, degree, terms: [{index, coeff}]}` with
//! coefficients written as exact strings (`"3/2"`, `"1/2+1/2*i"`).

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, AlgebraElement, GaussianRational, Rational};
use crate::combinatorics::{Composition, IndexSet};
use crate::error::{Error, Result};
use crate::hecke_clifford::CliffordElement;
use crate::sym::{NsfBasis, NsfElement, QsymBasis, QsymElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: Vec<usize>,
    pub coeff: String,
}

/// `degree` is the largest degree present (0 for the zero element). Terms
/// are listed in increasing order of their keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element JSON is always serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("element JSON is always serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("malformed element JSON: {e}")))
    }
}

fn composition_terms(terms: &AlgebraElement<Composition>) -> (usize, Vec<TermJson>) {
    let degree = terms.support().map(Composition::size).max().unwrap_or(0);
    let list = terms
        .iter()
        .map(|(i, c)| TermJson { index: i.parts().to_vec(), coeff: c.to_string() })
        .collect();
    (degree, list)
}

fn parse_composition_terms(json: &ElementJson) -> Result<AlgebraElement<Composition>> {
    let mut out = AlgebraElement::zero();
    for t in &json.terms {
        let c = parse_rational(&t.coeff)?;
        if c == Rational::from_integer(0.into()) {
            return Err(Error::invalid("element JSON contains a zero term"));
        }
        out.add_term(Composition::new(t.index.clone())?, c);
    }
    Ok(out)
}

impl From<&NsfElement> for ElementJson {
    fn from(x: &NsfElement) -> Self {
        let (degree, terms) = composition_terms(x.terms());
        ElementJson { basis: x.basis().symbol().to_string(), degree, terms }
    }
}

impl From<&QsymElement> for ElementJson {
    fn from(x: &QsymElement) -> Self {
        let (degree, terms) = composition_terms(x.terms());
        ElementJson { basis: x.basis().symbol().to_string(), degree, terms }
    }
}

impl ElementJson {
    /// Clifford elements use basis `"C"`, `degree = n` and the sorted set
    /// `D` as index.
    pub fn from_clifford(x: &CliffordElement, n: usize) -> Self {
        let terms = x
            .iter()
            .map(|(d, c)| TermJson { index: d.to_vec(), coeff: c.to_string() })
            .collect();
        ElementJson { basis: "C".into(), degree: n, terms }
    }

    pub fn to_nsf(&self) -> Result<NsfElement> {
        let basis = match self.basis.as_str() {
            "S" => NsfBasis::S,
            "R" => NsfBasis::R,
            other => return Err(Error::invalid(format!("{other:?} is not a basis of NCSF"))),
        };
        Ok(NsfElement::from_terms(basis, parse_composition_terms(self)?))
    }

    pub fn to_qsym(&self) -> Result<QsymElement> {
        let basis = match self.basis.as_str() {
            "M" => QsymBasis::M,
            "F" => QsymBasis::F,
            other => return Err(Error::invalid(format!("{other:?} is not a basis of QSym"))),
        };
        Ok(QsymElement::from_terms(basis, parse_composition_terms(self)?))
    }

    pub fn to_clifford(&self) -> Result<CliffordElement> {
        if self.basis != "C" {
            return Err(Error::invalid(format!("{:?} is not the Clifford basis", self.basis)));
        }
        let mut out = CliffordElement::zero();
        for t in &self.terms {
            let c: GaussianRational = t.coeff.parse()?;
            if c == GaussianRational::default() {
                return Err(Error::invalid("element JSON contains a zero term"));
            }
            if t.index.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!("Clifford index {:?} is not increasing", t.index)));
            }
            out.add_term(IndexSet::new(self.degree, t.index.iter().copied())?, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn round_trips() {
        let x = NsfElement::ribbon("2,1".parse().unwrap())
            .scale(&ratio(-3, 2))
            .add(&NsfElement::ribbon("3".parse().unwrap()));
        let json = ElementJson::from(&x).to_json();
        assert_eq!(json, r#"{"basis":"R","degree":3,"terms":[{"index":[2,1],"coeff":"-3/2"},{"index":[3],"coeff":"1"}]}"#);
        assert_eq!(ElementJson::from_json(&json).unwrap().to_nsf().unwrap(), x);
        let g = QsymElement::fundamental("1,1".parse().unwrap());
        assert_eq!(ElementJson::from(&g).to_qsym().unwrap(), g);
        assert!(ElementJson::from(&g).to_nsf().is_err());
    }

    #[test]
    fn clifford_round_trip() {
        let e = crate::hecke_clifford::minimal_idempotent(&"2,1,1".parse().unwrap()).unwrap();
        let json = ElementJson::from_clifford(&e, 4);
        assert_eq!(json.terms[1].coeff, "1/2*i");
        assert_eq!(ElementJson::from_json(&json.to_json()).unwrap().to_clifford().unwrap(), e);
    }
}
