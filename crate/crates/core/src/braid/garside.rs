//! Left normal form `Δ^p · A_1 ⋯ A_k` with positive permutation braids as factors.

use std::fmt;

use super::{delta, BraidWord, Permutation};

/// Canonical Garside left normal form of a braid.
///
/// Factors are encoded by their permutations; none is `e` or `Δ`, and each
/// adjacent pair is left-weighted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GarsideForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

/// Lexicographically least reduced word of a permutation, as positive letters.
pub(crate) fn positive_word(p: &Permutation) -> Vec<i32> {
    let mut p = p.clone();
    let mut word = Vec::with_capacity(p.length());
    loop {
        let Some(i) = left_descents(&p).next() else {
            break;
        };
        word.push(i as i32);
        p = Permutation::transposition(p.size(), i).compose(&p);
    }
    word
}

/// `s_i` with `p = s_i · p'` as permutation braids (1-based `i`).
fn left_descents(p: &Permutation) -> impl Iterator<Item = usize> + '_ {
    let inv = p.inverse();
    (1..p.size()).filter(move |&i| inv.images()[i - 1] > inv.images()[i])
}

/// `s_i` with `p = p' · s_i`.
fn is_right_descent(p: &Permutation, i: usize) -> bool {
    p.images()[i - 1] > p.images()[i]
}

/// `Δ⁻¹ A Δ`, which equals `Δ A Δ⁻¹` on permutation braids.
fn flip(p: &Permutation) -> Permutation {
    let w0 = Permutation::longest(p.size());
    w0.compose(p).compose(&w0)
}

/// Makes `(a, b)` left-weighted by sliding starting letters of `b` into `a`.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.size();
    let mut changed = false;
    loop {
        let slide = left_descents(b).find(|&i| !is_right_descent(a, i));
        match slide {
            Some(i) => {
                let t = Permutation::transposition(n, i);
                *a = a.compose(&t);
                *b = t.compose(b);
                changed = true;
            }
            None => return changed,
        }
    }
}

pub fn garside_normal_form(b: &BraidWord) -> GarsideForm {
    let n = b.strands();
    let w0 = Permutation::longest(n);
    let mut infimum = 0i64;
    let mut factors: Vec<Permutation> = Vec::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let t = Permutation::transposition(n, i);
        if l > 0 {
            factors.push(t);
        } else {
            // s_i⁻¹ = Δ⁻¹ · (Δ s_i⁻¹); push Δ⁻¹ to the front
            infimum -= 1;
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            factors.push(w0.compose(&t));
        }
    }
    loop {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (head, tail) = factors.split_at_mut(j + 1);
            changed |= left_weight(&mut head[j], &mut tail[0]);
        }
        if !changed {
            break;
        }
    }
    let leading = factors.iter().take_while(|f| **f == w0).count();
    infimum += leading as i64;
    factors.drain(..leading);
    factors.retain(|f| !f.is_identity());
    GarsideForm {
        strands: n,
        infimum,
        factors,
    }
}

impl GarsideForm {
    /// The braid `Δ^p A_1 ⋯ A_k` spelled out as a word.
    pub fn to_braid(&self) -> BraidWord {
        let d = delta(self.strands).expect("strands >= 1");
        let mut out = d.pow(self.infimum);
        for f in &self.factors {
            let w = BraidWord::new(self.strands, &positive_word(f)).expect("valid letters");
            out = out.multiply(&w).expect("same strands");
        }
        out
    }

    /// Number of non-`Δ` factors (canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for GarsideForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for p in &self.factors {
            let w = BraidWord::new(self.strands, &positive_word(p)).expect("valid letters");
            write!(f, "*({w})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, s: &str) -> GarsideForm {
        garside_normal_form(&BraidWord::parse(n, s).unwrap())
    }

    #[test]
    fn identity_and_delta() {
        let f = nf(3, "s1*s1^-1");
        assert_eq!((f.infimum, f.factors.len()), (0, 0));
        assert_eq!(f.to_string(), "D^0");
        let f = nf(3, "s1*s2*s1");
        assert_eq!((f.infimum, f.factors.len()), (1, 0));
        assert_eq!(f.to_string(), "D^1");
    }

    #[test]
    fn inverse_letter() {
        let f = nf(3, "s1^-1");
        assert_eq!(f.infimum, -1);
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.to_string(), "D^-1*(s1*s2)");
        assert!(f
            .to_braid()
            .equal(&BraidWord::parse(3, "s1^-1").unwrap())
            .unwrap());
    }

    #[test]
    fn braid_relation_gives_same_form() {
        assert_eq!(nf(4, "s1*s2*s1*s3"), nf(4, "s2*s1*s2*s3"));
        assert_eq!(nf(4, "s1*s3^-1"), nf(4, "s3^-1*s1"));
        assert_ne!(nf(3, "s1"), nf(3, "s2"));
    }

    #[test]
    fn center_is_delta_squared() {
        let f = nf(4, "s1*s2*s3*s1*s2*s3*s1*s2*s3*s1*s2*s3");
        assert_eq!((f.infimum, f.factors.len()), (2, 0));
    }

    #[test]
    fn positive_words_are_lex_least() {
        assert_eq!(positive_word(&Permutation::longest(3)), vec![1, 2, 1]);
        assert_eq!(positive_word(&Permutation::identity(3)), Vec::<i32>::new());
    }
}
