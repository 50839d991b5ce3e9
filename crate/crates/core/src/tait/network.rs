use super::sets::ColouringSet;
use super::Colour;
use crate::error::{Error, Result};

/// A constraint: the colours of `vars`, read in order, must form a tuple of `set`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub vars: Vec<usize>,
    pub set: ColouringSet,
}

/// Finite constraint network over K. Variables are edges; relations stand for
/// vertices or for whole multipoles given by their colouring sets.
#[derive(Clone, Debug, Default)]
pub struct Network {
    nvars: usize,
    relations: Vec<Relation>,
}

fn vertex_set() -> ColouringSet {
    ColouringSet::from_predicate(3, vec![3], |t| t[0] != t[1] && t[1] != t[2] && t[0] != t[2]).unwrap()
}

impl Network {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(&mut self) -> usize {
        self.nvars += 1;
        self.nvars - 1
    }

    pub fn vars(&mut self, n: usize) -> Vec<usize> {
        (0..n).map(|_| self.var()).collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn constrain(&mut self, name: &str, vars: Vec<usize>, set: ColouringSet) -> Result<()> {
        if vars.len() != set.k() {
            return Err(Error::ArityMismatch(vars.len(), set.k()));
        }
        if let Some(&v) = vars.iter().find(|&&v| v >= self.nvars) {
            return Err(Error::UnknownEdge(v));
        }
        self.relations.push(Relation { name: name.to_string(), vars, set });
        Ok(())
    }

    pub fn vertex(&mut self, a: usize, b: usize, c: usize) -> Result<()> {
        self.constrain("vertex", vec![a, b, c], vertex_set())
    }

    /// Visit satisfying assignments until the callback returns false.
    pub fn solve<F: FnMut(&[Colour]) -> bool>(&self, mut f: F) {
        let mut by_var = vec![Vec::new(); self.nvars];
        for (i, r) in self.relations.iter().enumerate() {
            for &v in &r.vars {
                if !by_var[v].contains(&i) {
                    by_var[v].push(i);
                }
            }
        }
        let tuples: Vec<Vec<Vec<Colour>>> = self.relations.iter().map(|r| r.set.tuples()).collect();
        let order = self.var_order(&by_var);
        let mut asg: Vec<Option<Colour>> = vec![None; self.nvars];
        self.rec(0, &order, &by_var, &tuples, &mut asg, &mut f);
    }

    fn var_order(&self, by_var: &[Vec<usize>]) -> Vec<usize> {
        let mut placed = vec![false; self.nvars];
        let mut score = vec![0usize; self.nvars];
        let mut order = Vec::with_capacity(self.nvars);
        while order.len() < self.nvars {
            let v = (0..self.nvars)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (score[v], std::cmp::Reverse(v)))
                .unwrap();
            placed[v] = true;
            order.push(v);
            for &r in &by_var[v] {
                for &w in &self.relations[r].vars {
                    score[w] += 1;
                }
            }
        }
        order
    }

    fn consistent(&self, r: usize, tuples: &[Vec<Colour>], asg: &[Option<Colour>]) -> bool {
        let vars = &self.relations[r].vars;
        tuples.iter().any(|t| vars.iter().zip(t).all(|(&v, &c)| asg[v].is_none_or(|a| a == c)))
    }

    fn rec<F: FnMut(&[Colour]) -> bool>(
        &self,
        i: usize,
        order: &[usize],
        by_var: &[Vec<usize>],
        tuples: &[Vec<Vec<Colour>>],
        asg: &mut Vec<Option<Colour>>,
        f: &mut F,
    ) -> bool {
        if i == order.len() {
            let full: Vec<Colour> = asg.iter().map(|c| c.unwrap()).collect();
            return f(&full);
        }
        let v = order[i];
        for c in Colour::ALL {
            asg[v] = Some(c);
            if by_var[v].iter().all(|&r| self.consistent(r, &tuples[r], asg)) && !self.rec(i + 1, order, by_var, tuples, asg, f) {
                asg[v] = None;
                return false;
            }
        }
        asg[v] = None;
        true
    }

    pub fn satisfiable(&self) -> bool {
        let mut found = false;
        self.solve(|_| {
            found = true;
            false
        });
        found
    }

    pub fn count(&self) -> u64 {
        let mut n = 0;
        self.solve(|_| {
            n += 1;
            true
        });
        n
    }

    /// Distinct restrictions of the solutions to `vars`.
    pub fn projection(&self, vars: &[usize]) -> Result<ColouringSet> {
        let mut out = Vec::new();
        self.solve(|s| {
            out.push(vars.iter().map(|&v| s[v]).collect());
            true
        });
        ColouringSet::from_tuples(vars.len(), vec![vars.len()], out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_graph_is_colourable() {
        // two vertices joined by three edges
        let mut n = Network::new();
        let e = n.vars(3);
        n.vertex(e[0], e[1], e[2]).unwrap();
        n.vertex(e[0], e[1], e[2]).unwrap();
        assert_eq!(n.count(), 6);
    }

    #[test]
    fn odd_parity_contradiction() {
        let mut n = Network::new();
        let e = n.vars(3);
        n.vertex(e[0], e[1], e[2]).unwrap();
        n.constrain("eq", vec![e[0], e[1]], ColouringSet::from_predicate(2, vec![2], |t| t[0] == t[1]).unwrap()).unwrap();
        assert!(!n.satisfiable());
    }
}
