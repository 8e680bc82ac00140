//! Weyl groups realised as permutation groups, enumerated from their own
//! simple generators. Lengths are Coxeter lengths (BFS depth), canonical
//! words are the lexicographically least reduced words, and cosets follow
//! the left convention w W_P with minimal-length representatives.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Permutation of 1..=n stored as images: apply(i) = images[i-1].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((1..=n as u8).collect())
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, j - 1);
        p
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(Perm(images.into_iter().map(|v| v as u8).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    /// (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn matrix(&self) -> crate::mat::IntMat {
        crate::mat::IntMat::permutation(&self.images())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Ambient symmetric-group Bruhat order via the rank criterion
/// r_w(i, j) = #{a <= i : w(a) <= j}: u <= v iff r_u >= r_v entrywise.
/// Agrees with the intrinsic order of the hyperoctahedral subgroups used
/// here (checked against a subword oracle in the tests).
pub fn bruhat_leq(u: &Perm, v: &Perm) -> bool {
    assert_eq!(u.degree(), v.degree());
    let n = u.degree();
    for i in 1..=n {
        let mut ru = 0usize;
        let mut rv = 0usize;
        let mut cu = vec![0u8; n + 1];
        let mut cv = vec![0u8; n + 1];
        for a in 1..=i {
            cu[u.apply(a)] = 1;
            cv[v.apply(a)] = 1;
        }
        for j in 1..=n {
            ru += cu[j] as usize;
            rv += cv[j] as usize;
            if ru < rv {
                return false;
            }
        }
    }
    true
}

/// The four families of Weyl groups realised as permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeylFamily {
    /// S_n with adjacent transpositions.
    Symmetric,
    /// Signed permutations of rank r inside S_{2r}.
    TypeC,
    /// Signed permutations of rank r inside S_{2r+1}, centre point fixed.
    TypeB,
    /// Evenly signed permutations of rank r inside S_{2r}.
    TypeD,
}

pub struct WeylGroup {
    family: WeylFamily,
    coxeter_rank: usize,
    ambient: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    lengths: Vec<u16>,
    words: Vec<Vec<u8>>,
}

impl WeylGroup {
    pub fn symmetric(n: usize) -> WeylGroup {
        assert!(n >= 1);
        let gens = (1..n).map(|i| Perm::transposition(n, i, i + 1)).collect();
        WeylGroup::from_generators(WeylFamily::Symmetric, n - 1, n, gens)
    }

    /// Weyl group of type C_r acting on 1..=2r: mirror pairs (i, 2r+1-i).
    pub fn type_c(r: usize) -> WeylGroup {
        assert!(r >= 1);
        let n = 2 * r;
        let s = |i: usize| Perm::transposition(n, i, i + 1);
        let mut gens: Vec<Perm> = (1..r).map(|i| s(i).compose(&s(n - i))).collect();
        gens.push(s(r));
        WeylGroup::from_generators(WeylFamily::TypeC, r, n, gens)
    }

    /// Weyl group of type B_r acting on 1..=2r+1 fixing the centre r+1.
    pub fn type_b(r: usize) -> WeylGroup {
        assert!(r >= 1);
        let n = 2 * r + 1;
        let s = |i: usize| Perm::transposition(n, i, i + 1);
        let mut gens: Vec<Perm> = (1..r).map(|i| s(i).compose(&s(n - i))).collect();
        gens.push(Perm::transposition(n, r, r + 2));
        WeylGroup::from_generators(WeylFamily::TypeB, r, n, gens)
    }

    /// Weyl group of type D_r acting on 1..=2r.
    pub fn type_d(r: usize) -> WeylGroup {
        assert!(r >= 2);
        let n = 2 * r;
        let s = |i: usize| Perm::transposition(n, i, i + 1);
        let mut gens: Vec<Perm> = (1..r).map(|i| s(i).compose(&s(n - i))).collect();
        let last = Perm::transposition(n, r - 1, r + 1).compose(&Perm::transposition(n, r, r + 2));
        gens.push(last);
        WeylGroup::from_generators(WeylFamily::TypeD, r, n, gens)
    }

    fn from_generators(
        family: WeylFamily,
        coxeter_rank: usize,
        ambient: usize,
        gens: Vec<Perm>,
    ) -> WeylGroup {
        // BFS over right multiplication, expanding generators in ascending
        // order, so the first word found for an element is its lex-least
        // reduced word and the BFS depth is the Coxeter length.
        let id = Perm::identity(ambient);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut lengths = vec![0u16];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for (gi, g) in gens.iter().enumerate() {
                let next = cur.compose(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    lengths.push(lengths[head] + 1);
                    let mut w = words[head].clone();
                    w.push(gi as u8 + 1);
                    words.push(w);
                }
            }
            head += 1;
        }
        WeylGroup { family, coxeter_rank, ambient, gens, elements, index, lengths, words }
    }

    pub fn family(&self) -> WeylFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.coxeter_rank
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// 1-based simple generator.
    pub fn generator(&self, i: usize) -> &Perm {
        &self.gens[i - 1]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_index(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn length(&self, p: &Perm) -> usize {
        self.lengths[self.index[p]] as usize
    }

    /// Lex-least reduced word, 1-based letters.
    pub fn word(&self, p: &Perm) -> Vec<usize> {
        self.words[self.index[p]].iter().map(|&l| l as usize).collect()
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<Perm> {
        let mut p = Perm::identity(self.ambient);
        for &l in word {
            if l < 1 || l > self.gens.len() {
                return Err(Error::InvalidInput(format!("letter {l} out of range")));
            }
            p = p.compose(&self.gens[l - 1]);
        }
        Ok(p)
    }

    /// Elements in enumeration order: by length, then lex-least word.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    fn has_right_ascent(&self, p: &Perm, gen: usize) -> bool {
        self.length(&p.compose(&self.gens[gen - 1])) > self.length(p)
    }

    /// Minimal-length representatives of the left cosets w W_P, where P is
    /// generated by the 1-based generator indices in sub_gens. Ordered by
    /// length, then lex-least word.
    pub fn min_coset_reps(&self, sub_gens: &[usize]) -> Vec<Perm> {
        self.elements
            .iter()
            .filter(|p| sub_gens.iter().all(|&g| self.has_right_ascent(p, g)))
            .cloned()
            .collect()
    }

    pub fn is_min_coset_rep(&self, p: &Perm, sub_gens: &[usize]) -> bool {
        sub_gens.iter().all(|&g| self.has_right_ascent(p, g))
    }

    /// Minimal-length element of the coset p W_P for a standard parabolic.
    pub fn coset_min(&self, p: &Perm, sub_gens: &[usize]) -> Perm {
        let mut cur = p.clone();
        loop {
            let down = sub_gens
                .iter()
                .copied()
                .find(|&g| !self.has_right_ascent(&cur, g));
            match down {
                Some(g) => cur = cur.compose(&self.gens[g - 1]),
                None => return cur,
            }
        }
    }

    /// Minimal element of p H for an arbitrary subgroup given by its
    /// elements, ordered by length then lex-least word.
    pub fn coset_minimum(&self, p: &Perm, subgroup: &[Perm]) -> Perm {
        subgroup
            .iter()
            .map(|h| p.compose(h))
            .min_by_key(|q| (self.length(q), self.words[self.index[q]].clone()))
            .expect("nonempty subgroup")
    }
}

/// Outcome of multiplying a minimal coset representative by a simple
/// generator on the left: the coset moves up, moves down, or is fixed,
/// and in the fixed case g sigma = sigma t for a simple t in W_P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CosetMove {
    Up(Perm),
    Down(Perm),
    /// 1-based index of the P-generator t with g sigma = sigma t.
    Fixed(usize),
}

impl WeylGroup {
    pub fn coset_move(&self, sub_gens: &[usize], sigma: &Perm, g: usize) -> CosetMove {
        debug_assert!(self.is_min_coset_rep(sigma, sub_gens));
        let gs = self.gens[g - 1].compose(sigma);
        if self.length(&gs) < self.length(sigma) {
            return CosetMove::Down(gs);
        }
        if self.is_min_coset_rep(&gs, sub_gens) {
            return CosetMove::Up(gs);
        }
        let t = sigma.inverse().compose(&gs);
        let j = sub_gens
            .iter()
            .copied()
            .find(|&j| self.gens[j - 1] == t)
            .expect("g sigma = sigma t with t a simple generator of P");
        CosetMove::Fixed(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subword-property oracle for Bruhat order, from the lifting
    /// recursion on a reduced word of v.
    fn bruhat_oracle(w: &WeylGroup, u: &Perm, v: &Perm) -> bool {
        if u.is_identity() {
            return true;
        }
        if w.length(u) > w.length(v) {
            return false;
        }
        let word = w.word(v);
        let s = w.generator(word[0]).clone();
        let v_rest = s.compose(v);
        let su = s.compose(u);
        if w.length(&su) < w.length(u) {
            bruhat_oracle(w, &su, &v_rest)
        } else {
            bruhat_oracle(w, u, &v_rest) || bruhat_oracle(w, &su, &v_rest)
        }
    }

    #[test]
    fn composition_applies_rightmost_first() {
        let a = Perm::transposition(3, 1, 2);
        let b = Perm::transposition(3, 2, 3);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 3);
        assert_eq!(ab.apply(3), 1);
        assert!(ab.compose(&ab.inverse()).is_identity());
    }

    #[test]
    fn group_orders() {
        assert_eq!(WeylGroup::symmetric(4).order(), 24);
        assert_eq!(WeylGroup::type_c(2).order(), 8);
        assert_eq!(WeylGroup::type_c(3).order(), 48);
        assert_eq!(WeylGroup::type_b(2).order(), 8);
        assert_eq!(WeylGroup::type_b(3).order(), 48);
        assert_eq!(WeylGroup::type_d(2).order(), 4);
        assert_eq!(WeylGroup::type_d(3).order(), 24);
        assert_eq!(WeylGroup::type_d(4).order(), 192);
    }

    #[test]
    fn longest_element_length_is_number_of_positive_roots() {
        let cases: Vec<(WeylGroup, usize)> = vec![
            (WeylGroup::symmetric(4), 6),
            (WeylGroup::type_c(2), 4),
            (WeylGroup::type_c(3), 9),
            (WeylGroup::type_b(3), 9),
            (WeylGroup::type_d(4), 12),
        ];
        for (w, expect) in cases {
            let max = w.elements().iter().map(|p| w.length(p)).max().unwrap();
            assert_eq!(max, expect);
        }
    }

    #[test]
    fn elements_preserve_mirror_sums() {
        let w = WeylGroup::type_c(3);
        for p in w.elements() {
            for i in 1..=6 {
                assert_eq!(p.apply(i) + p.apply(7 - i), 7);
            }
        }
        let w = WeylGroup::type_b(2);
        for p in w.elements() {
            assert_eq!(p.apply(3), 3);
            for i in 1..=5 {
                assert_eq!(p.apply(i) + p.apply(6 - i), 6);
            }
        }
        let w = WeylGroup::type_d(3);
        for p in w.elements() {
            let negs = (1..=3).filter(|&i| p.apply(i) > 3).count();
            assert_eq!(negs % 2, 0);
            for i in 1..=6 {
                assert_eq!(p.apply(i) + p.apply(7 - i), 7);
            }
        }
    }

    #[test]
    fn words_round_trip_and_longest_word_is_lex_least() {
        let w = WeylGroup::type_c(2);
        for p in w.elements() {
            let word = w.word(p);
            assert_eq!(&w.element_from_word(&word).unwrap(), p);
            assert_eq!(word.len(), w.length(p));
        }
        let longest = w
            .elements()
            .iter()
            .max_by_key(|p| w.length(p))
            .unwrap();
        assert_eq!(w.word(longest), vec![1, 2, 1, 2]);
    }

    #[test]
    fn coset_representatives_have_block_increasing_images() {
        // Dropping generator r from type C_n yields representatives that
        // increase on 1..=r and on r+1..=2n-r.
        let n = 3;
        let w = WeylGroup::type_c(n);
        for r in 1..=n {
            let sub: Vec<usize> = (1..=n).filter(|&i| i != r).collect();
            let reps = w.min_coset_reps(&sub);
            let expected = w.order()
                / reps
                    .first()
                    .map(|_| {
                        // |W_P| by direct count.
                        w.elements()
                            .iter()
                            .filter(|p| {
                                w.word(p).iter().all(|l| sub.contains(l))
                            })
                            .count()
                    })
                    .unwrap();
            assert_eq!(reps.len(), expected);
            for p in &reps {
                for i in 1..r {
                    assert!(p.apply(i) < p.apply(i + 1));
                }
                for i in r + 1..2 * n - r {
                    assert!(p.apply(i) < p.apply(i + 1));
                }
            }
        }
    }

    #[test]
    fn coset_min_agrees_with_exhaustive_minimum() {
        let w = WeylGroup::type_c(3);
        let sub = vec![1usize, 2];
        let subgroup: Vec<Perm> = w
            .elements()
            .iter()
            .filter(|p| w.word(p).iter().all(|l| sub.contains(l)))
            .cloned()
            .collect();
        for p in w.elements() {
            let quick = w.coset_min(p, &sub);
            let slow = w.coset_minimum(p, &subgroup);
            assert_eq!(w.length(&quick), w.length(&slow));
            assert_eq!(quick, slow);
        }
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for w in [WeylGroup::symmetric(4), WeylGroup::type_c(2), WeylGroup::type_b(2)] {
            for u in w.elements() {
                for v in w.elements() {
                    assert_eq!(
                        bruhat_leq(u, v),
                        bruhat_oracle(&w, u, v),
                        "disagreement at u={u:?} v={v:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn coset_move_trichotomy_is_exhaustive() {
        for (w, skip) in [(WeylGroup::type_c(3), 3usize), (WeylGroup::type_b(3), 1)] {
            let sub: Vec<usize> = (1..=3).filter(|&i| i != skip).collect();
            for sigma in w.min_coset_reps(&sub) {
                for g in 1..=3 {
                    match w.coset_move(&sub, &sigma, g) {
                        CosetMove::Up(t) => {
                            assert_eq!(w.length(&t), w.length(&sigma) + 1);
                            assert!(w.is_min_coset_rep(&t, &sub));
                        }
                        CosetMove::Down(t) => {
                            assert_eq!(w.length(&t), w.length(&sigma) - 1);
                            assert!(w.is_min_coset_rep(&t, &sub));
                        }
                        CosetMove::Fixed(j) => {
                            let g_perm = w.generator(g).clone();
                            let t = w.generator(j).clone();
                            assert_eq!(g_perm.compose(&sigma), sigma.compose(&t));
                        }
                    }
                }
            }
        }
    }
}
