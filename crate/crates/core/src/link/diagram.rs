use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::pd::PdCode;
use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use crate::presentation::{Mod2Character, Presentation, Word};

/// `(crossing index, position 0..4)`
type Endpoint = (usize, usize);

/// One link component: the PD arcs it runs through, in orientation order
/// starting from its smallest label. Crossingless components have no arcs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub arcs: Vec<u32>,
}

impl Component {
    pub fn is_free_loop(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// An oriented link diagram traced from a PD code.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    pd: PdCode,
    components: Vec<Component>,
    // indexed by label - 1
    arc_component: Vec<usize>,
    arc_head: Vec<Endpoint>,
    signs: Vec<i8>,
    // PD arc label - 1 -> Wirtinger generator
    arc_generator: Vec<usize>,
    generator_component: Vec<usize>,
}

impl LinkDiagram {
    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    /// Components with crossings first, ordered by smallest arc label, then
    /// one entry per free loop.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    /// Crossing signs under the right-hand rule.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn component_of_arc(&self, label: u32) -> usize {
        self.arc_component[label as usize - 1]
    }

    /// True when arc `label` enters crossing `x` at `position`.
    pub fn arc_enters(&self, label: u32, x: usize, position: usize) -> bool {
        self.arc_head[label as usize - 1] == (x, position)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_component.len()
    }

    /// Wirtinger generator carrying PD arc `label`.
    pub fn generator_of_arc(&self, label: u32) -> usize {
        self.arc_generator[label as usize - 1]
    }

    pub fn component_of_generator(&self, generator: usize) -> usize {
        self.generator_component[generator]
    }

    /// Component of the under-strand and of the over-strand at crossing `x`.
    pub fn crossing_components(&self, x: usize) -> (usize, usize) {
        let [a, b, _, _] = self.pd.crossings()[x];
        (self.component_of_arc(a), self.component_of_arc(b))
    }

    /// Entry `(i, j)` is the linking number of components `i` and `j`.
    pub fn linking_matrix(&self) -> IntMatrix {
        let n = self.n_components();
        let mut doubled = vec![0i64; n * n];
        for (x, &s) in self.signs.iter().enumerate() {
            let (under, over) = self.crossing_components(x);
            if under != over {
                doubled[under * n + over] += i64::from(s);
                doubled[over * n + under] += i64::from(s);
            }
        }
        let halved: Vec<i64> = doubled
            .iter()
            .map(|&d| {
                debug_assert!(d % 2 == 0, "odd signed crossing count between components");
                d / 2
            })
            .collect();
        IntMatrix::from_i64(n, n, &halved)
    }

    /// One generator per over-arc (and per free loop), one relator per
    /// crossing; also returns one meridian generator per component.
    pub fn wirtinger(&self) -> (Presentation, Vec<usize>) {
        let names: Vec<String> = (0..self.generator_count())
            .map(|g| format!("x{}", g + 1))
            .collect();
        let mut relators = Vec::with_capacity(self.pd.crossings().len());
        for (x, &[a, b, c, _]) in self.pd.crossings().iter().enumerate() {
            let u = Word::generator(self.generator_of_arc(a));
            let v = Word::generator(self.generator_of_arc(c));
            let o = Word::generator(self.generator_of_arc(b)).pow(i64::from(self.signs[x]));
            // v = o^e u o^-e
            relators.push(v.inverse().mul(&u.conjugate_by(&o)));
        }
        let p = Presentation::new(names, relators).expect("generator indices are in range");
        (p, self.meridians())
    }

    pub fn meridians(&self) -> Vec<usize> {
        (0..self.n_components())
            .map(|c| {
                self.generator_component
                    .iter()
                    .position(|&gc| gc == c)
                    .expect("every component carries a generator")
            })
            .collect()
    }

    /// The class sending each meridian of a component in `subset` to 1.
    pub fn meridian_character(&self, subset: &[usize]) -> Result<Mod2Character> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&c) = subset.iter().find(|&&c| c >= self.n_components()) {
            return Err(Error::NotACharacter(format!(
                "component {c} out of range (diagram has {})",
                self.n_components()
            )));
        }
        let values = self
            .generator_component
            .iter()
            .map(|c| subset.contains(c))
            .collect();
        Mod2Character::new(&self.wirtinger().0, values)
    }

    /// Value of the class with component indicator `alpha` on the longitude
    /// of `component`, counted from the crossings where it passes under
    /// another component. Self-crossings cancel against the framing
    /// correction modulo 2.
    pub fn longitude_parity(&self, component: usize, alpha: &[bool]) -> bool {
        (0..self.pd.crossings().len())
            .map(|x| self.crossing_components(x))
            .filter(|&(under, over)| under == component && over != component)
            .fold(false, |acc, (_, over)| acc ^ alpha[over])
    }
}

/// Traces components and orientations and assigns crossing signs.
///
/// Under-strands run `a -> c`. A component that never passes under is
/// oriented so that consecutive labels increase. The over-strand at
/// `X(a,b,c,d)` runs `d -> b` at a positive crossing and `b -> d` at a
/// negative one.
pub fn build_diagram(pd: &PdCode) -> Result<LinkDiagram> {
    let crossings = pd.crossings();
    let n_arcs = pd.arc_count();

    let mut occurrences: Vec<Vec<Endpoint>> = vec![Vec::with_capacity(2); n_arcs];
    for (x, tuple) in crossings.iter().enumerate() {
        for (p, &label) in tuple.iter().enumerate() {
            occurrences[label as usize - 1].push((x, p));
        }
    }
    let label_at = |(x, p): Endpoint| crossings[x][p];
    let other_end = |label: u32, e: Endpoint| {
        let occ = &occurrences[label as usize - 1];
        if occ[0] == e {
            occ[1]
        } else {
            occ[0]
        }
    };

    let mut components = Vec::new();
    let mut arc_component = vec![usize::MAX; n_arcs];
    let mut arc_head = vec![(0, 0); n_arcs];

    for start in 1..=n_arcs as u32 {
        if arc_component[start as usize - 1] != usize::MAX {
            continue;
        }
        // (arc, head endpoint) along one of the two orientations
        let mut cycle: Vec<(u32, Endpoint)> = Vec::new();
        let mut label = start;
        let mut head = occurrences[start as usize - 1][1];
        loop {
            cycle.push((label, head));
            let exit = (head.0, (head.1 + 2) % 4);
            label = label_at(exit);
            head = other_end(label, exit);
            if label == start && head == cycle[0].1 {
                break;
            }
            if cycle.len() > n_arcs {
                return Err(Error::InconsistentOrientation(start));
            }
        }

        let mut forward = false;
        let mut backward = false;
        for &(label, head) in &cycle {
            let tail = other_end(label, head);
            forward |= head.1 == 0 || tail.1 == 2;
            backward |= head.1 == 2 || tail.1 == 0;
        }
        let reverse = match (forward, backward) {
            (true, true) => return Err(Error::InconsistentOrientation(start)),
            (true, false) => false,
            (false, true) => true,
            (false, false) => {
                let len = cycle.len();
                let ascending = (0..len)
                    .filter(|&i| cycle[(i + 1) % len].0 == cycle[i].0 + 1)
                    .count();
                let descending = (0..len)
                    .filter(|&i| cycle[i].0 == cycle[(i + 1) % len].0 + 1)
                    .count();
                descending > ascending
            }
        };
        if reverse {
            cycle = cycle
                .iter()
                .rev()
                .map(|&(label, head)| (label, other_end(label, head)))
                .collect();
        }

        let index = components.len();
        for &(label, head) in &cycle {
            if arc_component[label as usize - 1] != usize::MAX {
                return Err(Error::InconsistentOrientation(label));
            }
            arc_component[label as usize - 1] = index;
            arc_head[label as usize - 1] = head;
        }
        let min_at = (0..cycle.len())
            .min_by_key(|&i| cycle[i].0)
            .expect("cycle is non-empty");
        let mut arcs: Vec<u32> = cycle.iter().map(|&(l, _)| l).collect();
        arcs.rotate_left(min_at);
        components.push(Component { arcs });
    }

    let mut signs = Vec::with_capacity(crossings.len());
    for (x, &[a, _, c, d]) in crossings.iter().enumerate() {
        if arc_head[a as usize - 1] != (x, 0) || arc_head[c as usize - 1] == (x, 2) {
            return Err(Error::InconsistentOrientation(a));
        }
        signs.push(if arc_head[d as usize - 1] == (x, 3) { 1 } else { -1 });
    }

    // Wirtinger arcs: PD arcs glued across over-passes.
    let mut parent: Vec<usize> = (0..n_arcs).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for &[_, b, _, d] in crossings {
        let (rb, rd) = (find(&mut parent, b as usize - 1), find(&mut parent, d as usize - 1));
        if rb != rd {
            parent[rb.max(rd)] = rb.min(rd);
        }
    }
    let mut arc_generator = vec![usize::MAX; n_arcs];
    let mut generator_component = Vec::new();
    let mut root_generator = vec![usize::MAX; n_arcs];
    for i in 0..n_arcs {
        let r = find(&mut parent, i);
        if root_generator[r] == usize::MAX {
            root_generator[r] = generator_component.len();
            generator_component.push(arc_component[i]);
        }
        arc_generator[i] = root_generator[r];
    }
    for _ in 0..pd.free_loops() {
        generator_component.push(components.len());
        components.push(Component { arcs: Vec::new() });
    }

    let diagram = LinkDiagram {
        pd: pd.clone(),
        components,
        arc_component,
        arc_head,
        signs,
        arc_generator,
        generator_component,
    };
    let doubled_odd = {
        let n = diagram.n_components();
        let mut doubled = vec![BigInt::zero(); n * n];
        for x in 0..crossings.len() {
            let (u, o) = diagram.crossing_components(x);
            if u != o {
                doubled[u.min(o) * n + u.max(o)] += diagram.signs[x];
            }
        }
        doubled.iter().any(|d| d.is_odd())
    };
    if doubled_odd {
        return Err(Error::InvalidPd(
            "odd number of crossings between two components".into(),
        ));
    }
    Ok(diagram)
}
