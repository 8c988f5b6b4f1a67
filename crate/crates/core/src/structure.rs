//! Finite relational structures over a named signature.

use std::collections::HashSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("relation `{0}` has arity 0")]
    ZeroArity(String),
    #[error("relation `{0}` is declared twice")]
    DuplicateRelation(String),
    #[error("relation `{name}` has arity {arity} but tuple {index} has length {found}")]
    TupleLength {
        name: String,
        arity: usize,
        index: usize,
        found: usize,
    },
    #[error(
        "relation `{name}` tuple {index} names element {element} outside a universe of {universe}"
    )]
    ElementOutOfRange {
        name: String,
        index: usize,
        element: usize,
        universe: usize,
    },
    #[error("relation `{name}` contains tuple {index} twice")]
    DuplicateTuple { name: String, index: usize },
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    name: String,
    arity: usize,
    tuples: Vec<Vec<usize>>,
}

impl Relation {
    pub fn new(name: impl Into<String>, arity: usize, tuples: Vec<Vec<usize>>) -> Self {
        Self {
            name: name.into(),
            arity,
            tuples,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// A universe `0..universe_size` with an ordered list of relations.
///
/// The list order of relations and of tuples within a relation is kept as
/// given; constructions that need "some fixed ordering" use it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalStructure {
    universe_size: usize,
    relations: Vec<Relation>,
}

impl RelationalStructure {
    pub fn new(universe_size: usize, relations: Vec<Relation>) -> Result<Self, StructureError> {
        let mut names = HashSet::new();
        for rel in &relations {
            if rel.arity == 0 {
                return Err(StructureError::ZeroArity(rel.name.clone()));
            }
            if !names.insert(rel.name.as_str()) {
                return Err(StructureError::DuplicateRelation(rel.name.clone()));
            }
            let mut seen = HashSet::new();
            for (index, tuple) in rel.tuples.iter().enumerate() {
                if tuple.len() != rel.arity {
                    return Err(StructureError::TupleLength {
                        name: rel.name.clone(),
                        arity: rel.arity,
                        index,
                        found: tuple.len(),
                    });
                }
                if let Some(&element) = tuple.iter().find(|&&x| x >= universe_size) {
                    return Err(StructureError::ElementOutOfRange {
                        name: rel.name.clone(),
                        index,
                        element,
                        universe: universe_size,
                    });
                }
                if !seen.insert(tuple.as_slice()) {
                    return Err(StructureError::DuplicateTuple {
                        name: rel.name.clone(),
                        index,
                    });
                }
            }
        }
        Ok(Self {
            universe_size,
            relations,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// Total number of tuples over all relations.
    pub fn tuple_count(&self) -> usize {
        self.relations.iter().map(Relation::len).sum()
    }

    /// Elements that occur in at least one tuple.
    pub fn used_elements(&self) -> Vec<bool> {
        let mut used = vec![false; self.universe_size];
        for rel in &self.relations {
            for tuple in &rel.tuples {
                for &x in tuple {
                    used[x] = true;
                }
            }
        }
        used
    }

    /// Checks that `other` declares the same relation names with the same
    /// arities. Relation order may differ.
    pub fn check_same_signature(&self, other: &RelationalStructure) -> Result<(), StructureError> {
        if self.relations.len() != other.relations.len() {
            return Err(StructureError::SignatureMismatch(format!(
                "{} relations versus {}",
                self.relations.len(),
                other.relations.len()
            )));
        }
        for rel in &self.relations {
            match other.relation(&rel.name) {
                None => {
                    return Err(StructureError::SignatureMismatch(format!(
                        "relation `{}` missing from target",
                        rel.name
                    )))
                }
                Some(o) if o.arity != rel.arity => {
                    return Err(StructureError::SignatureMismatch(format!(
                        "relation `{}` has arity {} versus {}",
                        rel.name, rel.arity, o.arity
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

/// A map from the universe of one structure into the universe of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMapping {
    pub targets: Vec<usize>,
}

impl StructureMapping {
    /// True iff every tuple of every relation of `source` is sent to a tuple
    /// of the same relation in `target`.
    pub fn respects(&self, source: &RelationalStructure, target: &RelationalStructure) -> bool {
        if self.targets.len() != source.universe_size()
            || self.targets.iter().any(|&t| t >= target.universe_size())
        {
            return false;
        }
        source.relations().iter().all(|rel| {
            let Some(image_rel) = target.relation(rel.name()) else {
                return false;
            };
            let image: HashSet<&[usize]> = image_rel.tuples().iter().map(Vec::as_slice).collect();
            rel.tuples().iter().all(|tuple| {
                let mapped: Vec<usize> = tuple.iter().map(|&x| self.targets[x]).collect();
                image.contains(mapped.as_slice())
            })
        })
    }
}
