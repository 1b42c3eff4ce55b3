use serde::Serialize;

/// A partition of `{0..n}`. Classes are numbered by the order of their
/// minimal member, so the numbering is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    count: usize,
}

impl Partition {
    /// Normalizes arbitrary labels: points with equal labels share a class.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Partition {
        let mut seen = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l.clone()).or_insert(next)
            })
            .collect();
        Partition {
            class_of,
            count: seen.len(),
        }
    }

    pub fn discrete(n: usize) -> Partition {
        Partition {
            class_of: (0..n).collect(),
            count: n,
        }
    }

    pub fn single(n: usize) -> Partition {
        Partition {
            class_of: vec![0; n],
            count: usize::from(n > 0),
        }
    }

    /// Builds a partition from explicit classes; `None` unless they are
    /// non-empty, disjoint and cover `{0..n}`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Option<Partition> {
        let mut label = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return None;
            }
            for &x in class {
                if x >= n || label[x] != usize::MAX {
                    return None;
                }
                label[x] = c;
            }
        }
        if label.contains(&usize::MAX) {
            return None;
        }
        Some(Partition::from_labels(&label))
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Members of each class in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Minimal member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.count];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    /// Common refinement: points share a class iff they do in both.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let pairs: Vec<(usize, usize)> = self
            .class_of
            .iter()
            .zip(&other.class_of)
            .map(|(&a, &b)| (a, b))
            .collect();
        Partition::from_labels(&pairs)
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.len() == coarser.len()
            && self
                .classes()
                .iter()
                .all(|c| c.iter().all(|&x| coarser.same_class(x, c[0])))
    }

    pub fn max_class_size(&self) -> usize {
        self.classes().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// 1-based classes, for JSON output.
    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect()
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}
