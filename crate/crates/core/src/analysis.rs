//! A group together with its elements, classes and character table.

use crate::chartable::{dixon_schneider, CharTableError, CharacterTable, DixonOptions};
use crate::permgroup::{class_fusion, ConjClasses, Enumerated, PermGroup, PermGroupError};

#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    pub group: PermGroup,
    pub elements: Enumerated,
    pub classes: ConjClasses,
    pub table: CharacterTable,
}

impl GroupAnalysis {
    pub fn new(group: PermGroup, cap: usize) -> Result<Self, CharTableError> {
        GroupAnalysis::with_options(group, cap, &DixonOptions::default())
    }

    pub fn with_options(
        group: PermGroup,
        cap: usize,
        opts: &DixonOptions,
    ) -> Result<Self, CharTableError> {
        let elements = group.enumerate(cap)?;
        let classes = ConjClasses::compute(&elements);
        let table = dixon_schneider(&elements, &classes, opts)?;
        Ok(GroupAnalysis {
            group,
            elements,
            classes,
            table,
        })
    }

    pub fn order(&self) -> u64 {
        self.elements.order()
    }

    /// Fusion of this group's classes into those of `over`.
    pub fn fusion_into(&self, over: &GroupAnalysis) -> Result<Vec<usize>, PermGroupError> {
        class_fusion(&self.elements, &self.classes, &over.elements, &over.classes)
    }
}
