use std::collections::HashMap;

use super::{closure_le, enumerate_classes, ClassLabel, GroupDatum};
use crate::error::Result;

/// All classes of a datum together with the closure order, evaluated once.
#[derive(Debug, Clone)]
pub struct ClassPoset {
    pub datum: GroupDatum,
    classes: Vec<ClassLabel>,
    index: HashMap<ClassLabel, usize>,
    le: Vec<Vec<bool>>,
}

impl ClassPoset {
    pub fn new(d: &GroupDatum) -> Result<Self> {
        let classes = enumerate_classes(d);
        let mut le = vec![vec![false; classes.len()]; classes.len()];
        for (i, a) in classes.iter().enumerate() {
            for (j, b) in classes.iter().enumerate() {
                le[i][j] = closure_le(d, a, b)?;
            }
        }
        let index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(ClassPoset { datum: *d, classes, index, le })
    }

    /// The classes, in enumeration order.
    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, c: &ClassLabel) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// `classes[i] ≤ classes[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    /// `classes[i] < classes[j]`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le[i][j]
    }

    /// Pairs `(i, j)` with `classes[i] < classes[j]` and nothing strictly
    /// in between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The set `{c′ ≤ top : c′ ≰ c″ for every c″ < top in bounds}` as
    /// indices, where `bounds` selects the excluded lower classes.
    pub fn block_below<F: Fn(usize) -> bool>(&self, top: usize, bounds: F) -> Vec<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&k| self.lt(k, top) && bounds(k)).collect();
        (0..self.len()).filter(|&c| self.le(c, top) && lower.iter().all(|&k| !self.le(c, k))).collect()
    }
}
