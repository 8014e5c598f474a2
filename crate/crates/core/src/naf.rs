//! Width-W non-adjacent forms.
//!
//! [`wnaf`] extracts the W-NAF of an element directly. [`Transducer`] is the
//! finite-state machine that rewrites an arbitrary representation into its
//! W-NAF while reading it least significant digit first; it is built
//! independently so the two routes can be checked against each other.

use std::collections::HashMap;
use std::fmt;

use crate::error::{consistency, Result};
use crate::repr::DigitString;
use crate::ring::{Digit, RingElem, System};

/// The unique normalized W-NAF of `x`.
pub fn wnaf(x: &RingElem) -> DigitString {
    let sys = x.ring();
    let w = sys.window();
    let mut lsb_first = Vec::new();
    let mut x = x.clone();
    while !x.is_zero() {
        if x.divisible_by_beta() {
            lsb_first.push(Digit::ZERO);
            x = x.div_beta().expect("divisibility checked");
        } else {
            let d = sys.digit_for(&x).expect("digit set covers every indivisible residue");
            lsb_first.push(d);
            lsb_first.extend(std::iter::repeat(Digit::ZERO).take(w - 1));
            x = (&x - &sys.digit_value(d)).div_beta_pow(w).expect("x - d divisible by β^W");
        }
    }
    lsb_first.reverse();
    DigitString::from_digits_unchecked(sys, lsb_first).normalize()
}

/// A labelled edge of the transducer (and of the graphs derived from it).
///
/// `from`/`to` index the owning graph's vertex list. Labels are stored most
/// significant digit first, as they are printed: a W-digit edge reading
/// `a`, then `b`, then `c` has `input = [c, b, a]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransducerEdge {
    pub from: usize,
    pub to: usize,
    pub input: Vec<Digit>,
    pub output: Vec<Digit>,
    pub weight: i32,
}

impl TransducerEdge {
    fn new(from: usize, to: usize, input: Vec<Digit>, output: Vec<Digit>) -> Self {
        let nz = |v: &[Digit]| v.iter().filter(|d| !d.is_zero()).count() as i32;
        let weight = nz(&input) - nz(&output);
        TransducerEdge { from, to, input, output, weight }
    }

    /// Last letter of the output block (zero for one-digit edges).
    pub fn output_digit(&self) -> Digit {
        *self.output.last().expect("labels are never empty")
    }

    pub fn is_window_edge(&self) -> bool {
        self.input.len() > 1
    }
}

#[derive(Debug, Clone)]
enum Rule {
    Single(usize),
    /// Edge per completion, indexed by the mixed-radix value of the extra
    /// digits read (first extra digit least significant).
    Window(Vec<usize>),
}

/// Deterministic transducer rewriting `(β, D)`-representations into W-NAF.
#[derive(Debug, Clone)]
pub struct Transducer {
    sys: System,
    states: Vec<RingElem>,
    index: HashMap<RingElem, usize>,
    edges: Vec<TransducerEdge>,
    rules: Vec<Vec<Rule>>,
}

/// Transducer states in `(norm, a, b)` order: the 21 elements of norm at
/// most 5 for Gauss, the digit set for Eisenstein.
pub fn transducer_states(sys: System) -> Vec<RingElem> {
    let mut states: Vec<RingElem> = match sys {
        System::Gauss => (-2i64..=2)
            .flat_map(|a| (-2i64..=2).map(move |b| RingElem::new(sys, a, b)))
            .filter(|x| x.norm() <= 5.into())
            .collect(),
        System::Eisenstein => sys.digits().map(|d| sys.digit_value(d)).collect(),
    };
    states.sort_by_key(|x| x.sort_key());
    states
}

impl Transducer {
    /// Builds the complete transducer, asserting the uniqueness and closure
    /// properties its construction relies on.
    pub fn build(sys: System) -> Result<Transducer> {
        let states = transducer_states(sys);
        let index: HashMap<RingElem, usize> =
            states.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
        let w = sys.window();
        let n_digits = sys.digit_count();
        let beta = sys.beta();
        let mut edges = Vec::new();
        let mut rules = Vec::with_capacity(states.len());

        for (qi, q) in states.iter().enumerate() {
            let mut row = Vec::with_capacity(n_digits);
            for a in sys.digits() {
                let sum = q + &sys.digit_value(a);
                let single = if sum.divisible_by_beta() {
                    let next = sum.div_beta()?;
                    match index.get(&next) {
                        Some(&ni) => Some(ni),
                        None => {
                            return Err(consistency(format!(
                                "{q} + {} divisible by the base but quotient {next} is not a state",
                                sys.digit_value(a)
                            )))
                        }
                    }
                } else {
                    None
                };
                if let Some(ni) = single {
                    edges.push(TransducerEdge::new(qi, ni, vec![a], vec![Digit::ZERO]));
                    row.push(Rule::Single(edges.len() - 1));
                    continue;
                }
                let completions = n_digits.pow((w - 1) as u32);
                let mut by_completion = Vec::with_capacity(completions);
                for code in 0..completions {
                    // extra digits, least significant first
                    let extra: Vec<Digit> = (0..w - 1)
                        .map(|j| Digit(((code / n_digits.pow(j as u32)) % n_digits) as u8))
                        .collect();
                    let mut value = sum.clone();
                    let mut power = beta.clone();
                    for &e in &extra {
                        value = &value + &(&sys.digit_value(e) * &power);
                        power = &power * &beta;
                    }
                    let d = sys.digit_for(&value)?;
                    let next = (&value - &sys.digit_value(d)).div_beta_pow(w)?;
                    let ni = *index.get(&next).ok_or_else(|| {
                        consistency(format!("window rule from {q} leads outside the states: {next}"))
                    })?;
                    let mut input: Vec<Digit> = extra.iter().rev().copied().collect();
                    input.push(a);
                    let mut output = vec![Digit::ZERO; w - 1];
                    output.push(d);
                    edges.push(TransducerEdge::new(qi, ni, input, output));
                    by_completion.push(edges.len() - 1);
                }
                row.push(Rule::Window(by_completion));
            }
            rules.push(row);
        }
        Ok(Transducer { sys, states, index, edges, rules })
    }

    pub fn system(&self) -> System {
        self.sys
    }

    pub fn states(&self) -> &[RingElem] {
        &self.states
    }

    pub fn state_index(&self, q: &RingElem) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn edges(&self) -> &[TransducerEdge] {
        &self.edges
    }

    /// The edge taken from state `q` reading `a` and then, if the rule needs
    /// them, the digits `extra` (least significant first).
    pub fn step(&self, q: usize, a: Digit, extra: &[Digit]) -> &TransducerEdge {
        match &self.rules[q][a.index()] {
            Rule::Single(e) => &self.edges[*e],
            Rule::Window(v) => {
                let n = self.sys.digit_count();
                let code = extra.iter().rev().fold(0, |acc, d| acc * n + d.index());
                &self.edges[v[code]]
            }
        }
    }

    fn needs_window(&self, q: usize, a: Digit) -> bool {
        matches!(self.rules[q][a.index()], Rule::Window(_))
    }

    /// Runs the transducer from state 0 over `s` (least significant digit
    /// first), padding with zeros until state 0 recurs, and returns the
    /// normalized output.
    pub fn transduce(&self, s: &DigitString) -> Result<DigitString> {
        if s.system() != self.sys {
            return Err(crate::Error::RingMismatch { left: self.sys, right: s.system() });
        }
        let w = self.sys.window();
        let input: Vec<Digit> = s.digits().iter().rev().copied().collect();
        let at = |i: usize| input.get(i).copied().unwrap_or(Digit::ZERO);
        let cap = input.len() + 16;
        let mut out_lsb = Vec::new();
        let mut state = 0usize;
        let mut pos = 0usize;
        while pos < input.len() || state != 0 {
            if pos >= cap {
                return Err(consistency(format!("transducer did not return to state 0 on {s}")));
            }
            let a = at(pos);
            let edge = if self.needs_window(state, a) {
                let extra: Vec<Digit> = (1..w).map(|j| at(pos + j)).collect();
                self.step(state, a, &extra)
            } else {
                self.step(state, a, &[])
            };
            out_lsb.extend(edge.output.iter().rev());
            pos += edge.input.len();
            state = edge.to;
        }
        out_lsb.reverse();
        Ok(DigitString::from_digits_unchecked(self.sys, out_lsb).normalize())
    }

    /// One line per edge: `state -> state : input|output : weight`.
    pub fn dump(&self) -> String {
        dump_edges(self.sys, &self.states, &self.edges)
    }
}

pub(crate) fn label(sys: System, digits: &[Digit]) -> String {
    digits.iter().map(|&d| sys.digit_char(d)).collect()
}

pub(crate) fn dump_edges(sys: System, vertices: &[RingElem], edges: &[TransducerEdge]) -> String {
    let mut out = String::new();
    for e in edges {
        out.push_str(&format!(
            "{} -> {} : {}|{} : {}\n",
            vertices[e.from],
            vertices[e.to],
            label(sys, &e.input),
            label(sys, &e.output),
            e.weight
        ));
    }
    out
}

impl fmt::Display for Transducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> RingElem {
        RingElem::new(System::Gauss, a, b)
    }

    fn gs(s: &str) -> DigitString {
        DigitString::parse(s, System::Gauss).unwrap()
    }

    #[test]
    fn wnaf_examples() {
        assert_eq!(wnaf(&g(2, 1)).to_string(), "100j");
        assert!(wnaf(&g(0, 0)).is_empty());
        assert_eq!(wnaf(&g(-2, 5)).to_string(), "100m00j");
        assert_eq!(wnaf(&g(1, 0)).to_string(), "1");
        let x = RingElem::new(System::Eisenstein, -2, 5);
        let s = wnaf(&x);
        assert_eq!(s.eval(), x);
        assert!(s.is_wnaf());
    }

    #[test]
    fn wnaf_round_trip_up_to_norm_400() {
        for sys in System::ALL {
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    let x = RingElem::new(sys, a, b);
                    if x.norm() > 400.into() {
                        continue;
                    }
                    let s = wnaf(&x);
                    assert_eq!(s.eval(), x);
                    assert!(s.is_wnaf() && s.is_normalized(), "{x}: {s}");
                }
            }
        }
    }

    #[test]
    fn state_sets() {
        let t = Transducer::build(System::Gauss).unwrap();
        assert_eq!(t.states().len(), 21);
        assert_eq!(t.states()[0], g(0, 0));
        let e = Transducer::build(System::Eisenstein).unwrap();
        assert_eq!(e.states().len(), 7);
    }

    #[test]
    fn deterministic_and_complete() {
        for sys in System::ALL {
            let t = Transducer::build(sys).unwrap();
            let n = sys.digit_count();
            let per_window = n.pow(sys.window() as u32 - 1);
            for (qi, _) in t.states().iter().enumerate() {
                for a in sys.digits() {
                    let from_here: Vec<_> = t
                        .edges()
                        .iter()
                        .filter(|e| e.from == qi && *e.input.last().unwrap() == a)
                        .collect();
                    let single = from_here.iter().filter(|e| !e.is_window_edge()).count();
                    let window = from_here.len() - single;
                    assert!(
                        (single == 1 && window == 0) || (single == 0 && window == per_window),
                        "state {qi} digit {a:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn edge_equations_and_weights() {
        for sys in System::ALL {
            let t = Transducer::build(sys).unwrap();
            let beta = sys.beta();
            for e in t.edges() {
                let q = &t.states()[e.from];
                let q2 = &t.states()[e.to];
                let input = DigitString::new(sys, e.input.clone()).unwrap().eval();
                let output = DigitString::new(sys, e.output.clone()).unwrap().eval();
                let mut shift = RingElem::one(sys);
                for _ in 0..e.input.len() {
                    shift = &shift * &beta;
                }
                assert_eq!(q + &input, &(q2 * &shift) + &output);
                let allowed: &[i32] = match (e.is_window_edge(), sys) {
                    (false, _) => &[0, 1],
                    (true, System::Gauss) => &[-1, 0, 1, 2],
                    (true, System::Eisenstein) => &[-1, 0, 1],
                };
                assert!(allowed.contains(&e.weight));
            }
        }
    }

    #[test]
    fn figure_edges() {
        let t = Transducer::build(System::Gauss).unwrap();
        let from = t.state_index(&g(-1, 1)).unwrap();
        let e = t.step(from, Digit::ZERO, &[]);
        assert_eq!(t.states()[e.to], g(1, 0));
        assert_eq!(label(System::Gauss, &e.output), "0");
        let i = System::Gauss.digit_of(&g(0, 1)).unwrap();
        // reading i first (a = i, then b = 0, c = 0): label 00i|001
        let e = t.step(from, i, &[Digit::ZERO, Digit::ZERO]);
        assert_eq!(t.states()[e.to], g(0, 1));
        assert_eq!(label(System::Gauss, &e.input), "00i");
        assert_eq!(label(System::Gauss, &e.output), "001");
        let t = Transducer::build(System::Eisenstein).unwrap();
        let e = t.step(0, Digit::ZERO, &[]);
        assert_eq!((e.to, e.weight), (0, 0));
    }

    #[test]
    fn transduce_examples() {
        let t = Transducer::build(System::Gauss).unwrap();
        assert_eq!(t.transduce(&gs("jj")).unwrap().to_string(), "1");
        assert_eq!(t.transduce(&gs("i0m")).unwrap().to_string(), "1");
        assert_eq!(t.transduce(&gs("i0i")).unwrap().to_string(), "100j");
        assert_eq!(t.transduce(&gs("j1")).unwrap().to_string(), "100j");
        assert!(t.transduce(&gs("")).unwrap().is_empty());
    }

    /// Symmetries: rotation by the unit (both systems) and the
    /// conjugation maps for Gauss.
    #[test]
    fn edge_symmetries() {
        for sys in System::ALL {
            let t = Transducer::build(sys).unwrap();
            let key = |from: &RingElem, to: &RingElem, input: &[Digit], output: &[Digit]| {
                (from.clone(), to.clone(), input.to_vec(), output.to_vec())
            };
            let all: std::collections::HashSet<_> = t
                .edges()
                .iter()
                .map(|e| key(&t.states()[e.from], &t.states()[e.to], &e.input, &e.output))
                .collect();
            for e in t.edges() {
                let (q, q2) = (&t.states()[e.from], &t.states()[e.to]);
                let rot = |v: &[Digit]| v.iter().map(|&d| sys.digit_unit_mul(d, 1)).collect::<Vec<_>>();
                assert!(all.contains(&key(&q.unit_mul(1), &q2.unit_mul(1), &rot(&e.input), &rot(&e.output))));
                if sys == System::Gauss {
                    let conj = |d: Digit| sys.digit_conj(d);
                    if e.is_window_edge() {
                        let (c, b, a) = (e.input[0], e.input[1], e.input[2]);
                        let input = vec![sys.digit_neg(conj(c)), sys.digit_unit_mul(conj(b), 1), conj(a)];
                        let output = vec![Digit::ZERO, Digit::ZERO, conj(e.output[2])];
                        assert!(all.contains(&key(&q.conj(), &q2.unit_mul(1).conj(), &input, &output)));
                    } else {
                        let input = vec![conj(e.input[0])];
                        assert!(all.contains(&key(&q.conj(), &q2.conj().unit_mul(1), &input, &e.output)));
                    }
                }
            }
        }
    }

    #[test]
    fn zero_input_contracts_states() {
        let t = Transducer::build(System::Gauss).unwrap();
        for (qi, q) in t.states().iter().enumerate().skip(1) {
            let e = t.step(qi, Digit::ZERO, &[Digit::ZERO, Digit::ZERO]);
            assert!(t.states()[e.to].norm() < q.norm(), "{q}");
        }
    }

    fn arb_string(sys: System) -> impl Strategy<Value = DigitString> {
        prop::collection::vec(0..sys.digit_count() as u8, 0..20)
            .prop_map(move |v| DigitString::new(sys, v.into_iter().map(Digit).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn transducer_matches_wnaf_gauss(s in arb_string(System::Gauss)) {
            let t = Transducer::build(System::Gauss).unwrap();
            let out = t.transduce(&s).unwrap();
            prop_assert_eq!(&out, &wnaf(&s.eval()));
            prop_assert!(out.hamming_weight() <= s.hamming_weight());
        }

        #[test]
        fn transducer_matches_wnaf_eisenstein(s in arb_string(System::Eisenstein)) {
            let t = Transducer::build(System::Eisenstein).unwrap();
            let out = t.transduce(&s).unwrap();
            prop_assert_eq!(&out, &wnaf(&s.eval()));
            prop_assert!(out.hamming_weight() <= s.hamming_weight());
        }
    }
}
