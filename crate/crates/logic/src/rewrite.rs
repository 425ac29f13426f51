//! Equational rewriting under the Boolean-algebra axioms and the multiway
//! graph it generates.

use std::collections::{BTreeSet, HashMap};

use crate::expr::BoolExpr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Var(u8),
    Not(Box<Pattern>),
    And(Box<Pattern>, Box<Pattern>),
    Or(Box<Pattern>, Box<Pattern>),
}

fn v(i: u8) -> Pattern {
    Pattern::Var(i)
}
fn not(p: Pattern) -> Pattern {
    Pattern::Not(Box::new(p))
}
fn and(a: Pattern, b: Pattern) -> Pattern {
    Pattern::And(Box::new(a), Box::new(b))
}
fn or(a: Pattern, b: Pattern) -> Pattern {
    Pattern::Or(Box::new(a), Box::new(b))
}

impl Pattern {
    fn vars(&self, out: &mut BTreeSet<u8>) {
        match self {
            Pattern::Var(i) => {
                out.insert(*i);
            }
            Pattern::Not(a) => a.vars(out),
            Pattern::And(a, b) | Pattern::Or(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }

    fn bind(&self, e: &BoolExpr, env: &mut HashMap<u8, BoolExpr>) -> bool {
        match (self, e) {
            (Pattern::Var(i), _) => match env.get(i) {
                Some(bound) => bound == e,
                None => {
                    env.insert(*i, e.clone());
                    true
                }
            },
            (Pattern::Not(p), BoolExpr::Not(a)) => p.bind(a, env),
            (Pattern::And(p, q), BoolExpr::And(a, b)) | (Pattern::Or(p, q), BoolExpr::Or(a, b)) => {
                p.bind(a, env) && q.bind(b, env)
            }
            _ => false,
        }
    }

    fn build(&self, env: &HashMap<u8, BoolExpr>) -> BoolExpr {
        match self {
            Pattern::Var(i) => env[i].clone(),
            Pattern::Not(a) => BoolExpr::not(a.build(env)),
            Pattern::And(a, b) => BoolExpr::and(a.build(env), b.build(env)),
            Pattern::Or(a, b) => BoolExpr::or(a.build(env), b.build(env)),
        }
    }
}

/// An equation between patterns, usable in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: &'static str,
    pub lhs: Pattern,
    pub rhs: Pattern,
}

impl RewriteRule {
    /// Reversing gives the same rule up to renaming (commutativity).
    fn self_inverse(&self) -> bool {
        let (mut l, mut r) = (BTreeSet::new(), BTreeSet::new());
        self.lhs.vars(&mut l);
        self.rhs.vars(&mut r);
        l == r && std::mem::discriminant(&self.lhs) == std::mem::discriminant(&self.rhs) && {
            // Same shape with operands swapped.
            matches!((&self.lhs, &self.rhs),
                (Pattern::And(a, b), Pattern::And(c, d)) | (Pattern::Or(a, b), Pattern::Or(c, d))
                    if a == d && b == c)
        }
    }
}

/// Commutativity, complement absorption and distributivity for ∧ and ∨.
pub fn boolean_axioms() -> Vec<RewriteRule> {
    vec![
        RewriteRule { name: "and-comm", lhs: and(v(0), v(1)), rhs: and(v(1), v(0)) },
        RewriteRule { name: "or-comm", lhs: or(v(0), v(1)), rhs: or(v(1), v(0)) },
        RewriteRule { name: "and-complement", lhs: and(v(0), or(v(1), not(v(1)))), rhs: v(0) },
        RewriteRule { name: "or-complement", lhs: or(v(0), and(v(1), not(v(1)))), rhs: v(0) },
        RewriteRule {
            name: "and-distrib",
            lhs: and(v(0), or(v(1), v(2))),
            rhs: or(and(v(0), v(1)), and(v(0), v(2))),
        },
        RewriteRule {
            name: "or-distrib",
            lhs: or(v(0), and(v(1), v(2))),
            rhs: and(or(v(0), v(1)), or(v(0), v(2))),
        },
    ]
}

/// Which rule fired, and in which direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleApp {
    pub rule: usize,
    pub backward: bool,
}

/// Bindings for pattern variables left unbound by a match: every choice of
/// a variable from `pool`.
fn instantiations(free: &[u8], pool: &[char], env: &HashMap<u8, BoolExpr>) -> Vec<HashMap<u8, BoolExpr>> {
    let mut envs = vec![env.clone()];
    for &f in free {
        envs = envs
            .into_iter()
            .flat_map(|e| {
                pool.iter().map(move |&c| {
                    let mut e = e.clone();
                    e.insert(f, BoolExpr::var(c));
                    e
                })
            })
            .collect();
    }
    envs
}

fn at_root(e: &BoolExpr, rules: &[RewriteRule], pool: &[char], out: &mut Vec<(BoolExpr, RuleApp)>) {
    for (i, rule) in rules.iter().enumerate() {
        let dirs: &[bool] = if rule.self_inverse() { &[false] } else { &[false, true] };
        for &backward in dirs {
            let (from, to) = if backward { (&rule.rhs, &rule.lhs) } else { (&rule.lhs, &rule.rhs) };
            let mut env = HashMap::new();
            if !from.bind(e, &mut env) {
                continue;
            }
            let mut needed = BTreeSet::new();
            to.vars(&mut needed);
            let free: Vec<u8> = needed.into_iter().filter(|x| !env.contains_key(x)).collect();
            for env in instantiations(&free, pool, &env) {
                out.push((to.build(&env), RuleApp { rule: i, backward }));
            }
        }
    }
}

fn everywhere(e: &BoolExpr, rules: &[RewriteRule], pool: &[char], out: &mut Vec<(BoolExpr, RuleApp)>) {
    at_root(e, rules, pool, out);
    let mut inner = Vec::new();
    match e {
        BoolExpr::Var(_) => {}
        BoolExpr::Not(a) => {
            everywhere(a, rules, pool, &mut inner);
            out.extend(inner.into_iter().map(|(x, r)| (BoolExpr::not(x), r)));
        }
        BoolExpr::And(a, b) | BoolExpr::Or(a, b) => {
            let rebuild = |x: BoolExpr, y: BoolExpr| match e {
                BoolExpr::And(..) => BoolExpr::and(x, y),
                _ => BoolExpr::or(x, y),
            };
            everywhere(a, rules, pool, &mut inner);
            for (x, r) in inner.drain(..) {
                out.push((rebuild(x, (**b).clone()), r));
            }
            everywhere(b, rules, pool, &mut inner);
            for (y, r) in inner.drain(..) {
                out.push((rebuild((**a).clone(), y), r));
            }
        }
    }
}

/// Every single-rule, single-position rewrite of `e`. Variables introduced
/// by a backward rule range over the variables of `e`. Sorted, no repeats.
pub fn rewrite_step(e: &BoolExpr, rules: &[RewriteRule]) -> Vec<(BoolExpr, RuleApp)> {
    let mut pool = e.variables();
    pool.sort_unstable();
    let mut out = Vec::new();
    everywhere(e, rules, &pool, &mut out);
    out.sort_by(|x, y| x.0.key().cmp(&y.0.key()).then(x.1.cmp(&y.1)));
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiwayGraph {
    /// Discovery order; the seed is vertex 0.
    pub vertices: Vec<BoolExpr>,
    /// Step at which each vertex was first reached.
    pub level: Vec<usize>,
    /// `(from, to, rule)`, one per distinct rewrite.
    pub edges: Vec<(usize, usize, RuleApp)>,
    /// Steps fully expanded.
    pub depth: usize,
    /// Set when the vertex cap stopped the expansion early.
    pub truncated: bool,
}

/// Breadth-first expansion for `depth` steps, stopping at `max_vertices`.
pub fn multiway_graph(
    seed: &BoolExpr,
    rules: &[RewriteRule],
    depth: usize,
    max_vertices: usize,
) -> MultiwayGraph {
    let mut g = MultiwayGraph {
        vertices: vec![seed.clone()],
        level: vec![0],
        edges: Vec::new(),
        depth: 0,
        truncated: false,
    };
    let mut index: HashMap<BoolExpr, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut frontier = vec![0usize];
    for step in 1..=depth {
        let mut next = Vec::new();
        for &u in &frontier {
            let src = g.vertices[u].clone();
            for (e, app) in rewrite_step(&src, rules) {
                let to = match index.get(&e) {
                    Some(&t) => t,
                    None if g.vertices.len() >= max_vertices => {
                        g.truncated = true;
                        continue;
                    }
                    None => {
                        let t = g.vertices.len();
                        index.insert(e.clone(), t);
                        g.vertices.push(e);
                        g.level.push(step);
                        next.push(t);
                        t
                    }
                };
                g.edges.push((u, to, app));
            }
        }
        if g.truncated {
            break;
        }
        g.depth = step;
        frontier = next;
    }
    g
}
