/// Outcome of a subdirect-product check for a family of congruences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdirect<S> {
    /// Whether the family meets to the identity congruence.
    pub holds: bool,
    /// Quotient by each member of the family, in order.
    pub factors: Vec<S>,
    /// Row `x` lists the class of `x` in every factor.
    pub embedding: Vec<Vec<usize>>,
}

impl<S> Subdirect<S> {
    /// Whether the coordinate map is injective.
    pub fn is_injective(&self) -> bool {
        let mut rows: Vec<&Vec<usize>> = self.embedding.iter().collect();
        rows.sort();
        rows.windows(2).all(|w| w[0] != w[1])
    }
}
