#![allow(dead_code)]

use std::collections::HashMap;

use theoremnet_metamath::{parse_mm, MmDatabase, StatementKind};

pub const FIXTURE: &str = include_str!("../fixtures/mini.mm");

pub fn fixture() -> MmDatabase {
    parse_mm(FIXTURE).unwrap()
}

/// Replaces the proof of `label` in `src` with `proof`.
pub fn with_proof(src: &str, label: &str, proof: &str) -> String {
    let head = format!("{label} $p");
    let at = src.find(&head).unwrap();
    let eq = at + src[at..].find("$=").unwrap() + 2;
    let end = eq + src[eq..].find("$.").unwrap();
    format!("{} {proof} {}", &src[..eq], &src[end..])
}

fn encode(mut n: usize) -> String {
    let mut s = vec![b'A' + ((n - 1) % 20) as u8];
    n = (n - 1) / 20;
    while n > 0 {
        s.push(b'U' + ((n - 1) % 5) as u8);
        n = (n - 1) / 5;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

struct Tree {
    label: String,
    kids: Vec<Tree>,
}

impl Tree {
    fn key(&self) -> String {
        let kids: Vec<String> = self.kids.iter().map(Tree::key).collect();
        format!("{}({})", self.label, kids.join(","))
    }
}

fn arity(db: &MmDatabase, label: &str) -> usize {
    db.lookup(label).and_then(|ix| db.statement(ix).frame.as_ref()).map_or(0, |f| f.hyps.len())
}

/// Compresses a normal proof of `label`. Every repeated subtree of more
/// than one step is saved at its first occurrence and referenced after.
pub fn compress(db: &MmDatabase, label: &str, normal: &[String]) -> (Vec<String>, String) {
    let mut stack: Vec<Tree> = Vec::new();
    for l in normal {
        let k = arity(db, l);
        let kids = stack.split_off(stack.len() - k);
        stack.push(Tree { label: l.clone(), kids });
    }
    assert_eq!(stack.len(), 1);
    let root = stack.pop().unwrap();

    fn count(t: &Tree, counts: &mut HashMap<String, usize>) {
        *counts.entry(t.key()).or_default() += 1;
        t.kids.iter().for_each(|k| count(k, counts));
    }
    let mut counts = HashMap::new();
    count(&root, &mut counts);

    let hyps = db.frame_labels(label).unwrap();
    let mut header: Vec<String> = Vec::new();
    for l in normal {
        if !hyps.contains(&l.as_str()) && !header.contains(l) {
            header.push(l.clone());
        }
    }
    let mut num: HashMap<&str, usize> = HashMap::new();
    for (i, h) in hyps.iter().enumerate() {
        num.insert(h, i + 1);
    }
    for (i, h) in header.iter().enumerate() {
        num.insert(h, hyps.len() + i + 1);
    }
    let fixed = hyps.len() + header.len();

    fn emit(
        t: &Tree,
        num: &HashMap<&str, usize>,
        counts: &HashMap<String, usize>,
        saved: &mut HashMap<String, usize>,
        fixed: usize,
        out: &mut String,
    ) {
        let key = t.key();
        if let Some(&n) = saved.get(&key) {
            out.push_str(&encode(n));
            return;
        }
        for k in &t.kids {
            emit(k, num, counts, saved, fixed, out);
        }
        out.push_str(&encode(num[t.label.as_str()]));
        if counts[&key] > 1 && !t.kids.is_empty() {
            out.push('Z');
            let n = fixed + saved.len() + 1;
            saved.insert(key, n);
        }
    }
    let mut out = String::new();
    emit(&root, &num, &counts, &mut HashMap::new(), fixed, &mut out);
    (header, out)
}

/// Stack replay with substitution, ignoring disjointness. Returns the
/// single expression left on the stack.
pub fn replay(db: &MmDatabase, steps: &[String]) -> Option<Vec<u32>> {
    let mut stack: Vec<Vec<u32>> = Vec::new();
    for l in steps {
        let st = db.statement(db.lookup(l)?);
        match st.kind {
            StatementKind::Floating | StatementKind::Essential => stack.push(st.math.clone()),
            _ => {
                let hyps = &st.frame.as_ref()?.hyps;
                let args = stack.split_off(stack.len().checked_sub(hyps.len())?);
                let mut sub: HashMap<u32, Vec<u32>> = HashMap::new();
                for (&h, arg) in hyps.iter().zip(&args) {
                    let hyp = db.statement(h);
                    if hyp.kind == StatementKind::Floating {
                        if arg.first() != Some(&hyp.math[0]) {
                            return None;
                        }
                        sub.insert(hyp.math[1], arg[1..].to_vec());
                    }
                }
                let apply = |m: &[u32]| -> Vec<u32> {
                    let mut out = vec![m[0]];
                    for s in &m[1..] {
                        match sub.get(s) {
                            Some(e) => out.extend(e),
                            None => out.push(*s),
                        }
                    }
                    out
                };
                for (&h, arg) in hyps.iter().zip(&args) {
                    let hyp = db.statement(h);
                    if hyp.kind == StatementKind::Essential && apply(&hyp.math) != *arg {
                        return None;
                    }
                }
                stack.push(apply(&st.math));
            }
        }
    }
    (stack.len() == 1).then(|| stack.pop().unwrap())
}

/// A synthetic database of roughly `theorems * 900` bytes. Proofs are
/// well-formed compressed streams citing earlier theorems; they are not
/// valid derivations, which extraction never checks.
pub fn synthetic_db(theorems: usize, seed: u64) -> String {
    let mut state = seed | 1;
    let mut next = move |n: usize| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % n as u64) as usize
    };
    let mut s = String::with_capacity(theorems * 950);
    s.push_str(FIXTURE);
    for i in 0..theorems {
        if i % 1000 == 0 {
            s.push_str(&format!("\n$(\n####\n  Section {}\n####\n$)\n", i / 1000));
        }
        let mut header = vec!["wi".to_string(), "ax-1".into(), "ax-mp".into()];
        for _ in 0..next(12) {
            let j = next(i.max(1));
            let l = if i == 0 { "a1i".to_string() } else { format!("t{j}") };
            if !header.contains(&l) {
                header.push(l);
            }
        }
        let fixed = 1 + header.len();
        let mut letters = String::new();
        let mut saved = 0;
        for k in 0..640 {
            let n = 1 + next(fixed + saved);
            letters.push_str(&encode(n));
            if k % 17 == 16 {
                letters.push('Z');
                saved += 1;
            }
        }
        s.push_str(&format!(
            "\n  $( Synthetic statement number {i}, padded with a sentence of commentary so the\n     \
             file size per theorem resembles a real library. $)\n  t{i} $p |- ( ph -> ph ) $=\n    ( {} )\n",
            header.join(" ")
        ));
        for chunk in letters.as_bytes().chunks(76) {
            s.push_str("    ");
            s.push_str(std::str::from_utf8(chunk).unwrap());
            s.push('\n');
        }
        s.push_str("    $.\n");
    }
    s
}
