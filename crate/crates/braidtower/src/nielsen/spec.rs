use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup, Group};

/// A multiset of r "slots"; each slot is a set of conjugacy-class ids (usually
/// a single class; unions arise when a class of a quotient splits upstairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    slots: Vec<Vec<u32>>,
}

impl ClassSpec {
    pub fn from_reps(g: &Group, reps: &[Elt]) -> Result<ClassSpec> {
        let slots = reps
            .iter()
            .map(|&x| if (x as usize) < g.order() { Ok(vec![g.class_of(x)]) } else { Err(Error::Invalid(format!("element {x} not in group"))) })
            .collect::<Result<Vec<_>>>()?;
        ClassSpec::from_slots(slots)
    }

    pub fn from_slots(mut slots: Vec<Vec<u32>>) -> Result<ClassSpec> {
        if slots.len() < 3 {
            return Err(Error::Invalid(format!("need r >= 3 classes, got {}", slots.len())));
        }
        for s in &mut slots {
            if s.is_empty() {
                return Err(Error::Invalid("empty class slot".into()));
            }
            s.sort_unstable();
            s.dedup();
        }
        slots.sort();
        Ok(ClassSpec { slots })
    }

    pub fn r(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Vec<u32>] {
        &self.slots
    }

    /// Distinct orderings of the slot multiset.
    pub fn arrangements(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut used = vec![false; self.r()];
        let mut cur = Vec::new();
        self.arrange(&mut used, &mut cur, &mut out);
        out
    }

    fn arrange(&self, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == self.r() {
            out.push(cur.clone());
            return;
        }
        for i in 0..self.r() {
            // among equal slots only the first unused may be placed
            if used[i] || (i > 0 && self.slots[i] == self.slots[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            cur.push(i);
            self.arrange(used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }

    /// Whether the entry classes of `classes` can be matched to the slots.
    pub fn admits(&self, classes: &[u32]) -> bool {
        if classes.len() != self.r() {
            return false;
        }
        let mut used = vec![false; self.r()];
        self.matches(classes, 0, &mut used)
    }

    fn matches(&self, classes: &[u32], k: usize, used: &mut [bool]) -> bool {
        if k == classes.len() {
            return true;
        }
        for i in 0..self.r() {
            if !used[i] && self.slots[i].binary_search(&classes[k]).is_ok() {
                used[i] = true;
                if self.matches(classes, k + 1, used) {
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }

    /// Image of the spec under a class permutation (e.g. induced by an automorphism).
    pub fn map_classes(&self, f: impl Fn(u32) -> u32) -> ClassSpec {
        let slots = self.slots.iter().map(|s| s.iter().map(|&c| f(c)).collect()).collect();
        ClassSpec::from_slots(slots).expect("shape preserved")
    }
}
