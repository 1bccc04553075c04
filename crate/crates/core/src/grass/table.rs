//! A full local description of an equivariant class: one polynomial per
//! fixed point.

use super::{fixed_points, GrassPoint};
use crate::error::GrassError;
use crate::poly::{MultiPoly, PolyJson};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Association from the fixed points of `Grass_m(C^n)` to polynomials in
/// the `n` characters. Points outside the variety carry the zero
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalClassTable {
    m: usize,
    n: usize,
    classes: BTreeMap<GrassPoint, MultiPoly>,
}

impl LocalClassTable {
    pub fn new(m: usize, n: usize) -> Result<Self, GrassError> {
        if m == 0 || m >= n {
            return Err(GrassError::BadSizes { m, n });
        }
        Ok(LocalClassTable {
            m,
            n,
            classes: BTreeMap::new(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Complex dimension of the ambient Grassmannian, `m(n-m)`.
    pub fn dim(&self) -> usize {
        self.m * (self.n - self.m)
    }

    pub fn set(&mut self, point: GrassPoint, class: MultiPoly) -> Result<(), GrassError> {
        if point.m() != self.m || point.n() != self.n {
            return Err(GrassError::BadPoint(point.to_string()));
        }
        if class.nvars() != self.n {
            return Err(GrassError::Invalid(format!(
                "class in {} variables for Grass over {} characters",
                class.nvars(),
                self.n
            )));
        }
        self.classes.insert(point, class);
        Ok(())
    }

    pub fn get(&self, point: &GrassPoint) -> Option<&MultiPoly> {
        self.classes.get(point)
    }

    pub fn remove(&mut self, point: &GrassPoint) -> Option<MultiPoly> {
        self.classes.remove(point)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GrassPoint, &MultiPoly)> {
        self.classes.iter()
    }

    /// Fixed points without an assigned class.
    pub fn missing_points(&self) -> Vec<GrassPoint> {
        fixed_points(self.m, self.n)
            .expect("sizes validated at construction")
            .into_iter()
            .filter(|p| !self.classes.contains_key(p))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_points().is_empty()
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            grass: [self.m, self.n],
            classes: self
                .classes
                .iter()
                .map(|(p, c)| ClassJson {
                    point: p.subset().to_vec(),
                    poly: c.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TableJson) -> Result<Self, GrassError> {
        let mut table = LocalClassTable::new(json.grass[0], json.grass[1])?;
        for entry in &json.classes {
            let point = GrassPoint::new(entry.point.clone(), json.grass[0], json.grass[1])?;
            let poly = MultiPoly::from_json(&entry.poly)?;
            table.set(point, poly)?;
        }
        Ok(table)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self, GrassError> {
        let json: TableJson = serde_json::from_str(s)
            .map_err(|e| GrassError::Invalid(format!("bad table JSON: {e}")))?;
        Self::from_json(&json)
    }
}

/// JSON form:
/// `{"grass": [m,n], "classes": [{"point": [1,2], "poly": {...}}]}`.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TableJson {
    pub grass: [usize; 2],
    pub classes: Vec<ClassJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ClassJson {
    pub point: Vec<usize>,
    pub poly: PolyJson,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grass::euler_class;

    #[test]
    fn json_roundtrip() {
        let mut table = LocalClassTable::new(2, 4).unwrap();
        for p in fixed_points(2, 4).unwrap() {
            let e = euler_class(&p);
            table.set(p, e).unwrap();
        }
        let s = table.to_json_string();
        assert_eq!(LocalClassTable::from_json_str(&s).unwrap(), table);
        assert!(s.starts_with("{\"grass\":[2,4]"));
    }

    #[test]
    fn completeness_check() {
        let mut table = LocalClassTable::new(1, 2).unwrap();
        assert!(!table.is_complete());
        table
            .set(
                GrassPoint::new(vec![1], 1, 2).unwrap(),
                MultiPoly::zero(2),
            )
            .unwrap();
        assert_eq!(table.missing_points().len(), 1);
    }
}
