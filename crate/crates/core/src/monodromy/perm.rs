use std::fmt;

use serde::{Deserialize, Serialize};

use crate::belyi0::Passport;
use crate::error::{Error, Result};

/// A permutation of `{0, …, D−1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`.
    pub fn from_cycles(d: usize, s: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        for cycle in s.split(')').map(|c| c.trim().trim_start_matches('(')).filter(|c| !c.is_empty()) {
            let pts: Vec<usize> = cycle
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if (1..=d).contains(&v) => Ok(v - 1),
                    _ => Err(Error::InvalidInput(format!("bad cycle entry {t:?}"))),
                })
                .collect::<Result<_>>()?;
            for (i, &p) in pts.iter().enumerate() {
                images[p] = pts[(i + 1) % pts.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `π⁻¹ · self · π`, i.e. the relabelling `i ↦ π(i)`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Permutation {
        pi.inverse().then(self).then(pi)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.0[i];
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    fn cycle_len_of(&self) -> Vec<usize> {
        let mut len = vec![0; self.0.len()];
        for c in self.cycles() {
            for &i in &c {
                len[i] = c.len();
            }
        }
        len
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Monodromy of a Belyi map: `σ₀`, `σ₁`, `σ∞` with `σ₀ · σ₁ · σ∞ = 1`,
/// products read left to right (apply `σ₀` first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationTriple {
    pub sigma0: Permutation,
    pub sigma1: Permutation,
    pub sigma_inf: Permutation,
}

impl PermutationTriple {
    pub fn new(sigma0: Permutation, sigma1: Permutation, sigma_inf: Permutation) -> Result<Self> {
        let d = sigma0.degree();
        if sigma1.degree() != d || sigma_inf.degree() != d {
            return Err(Error::InvalidInput("permutations of different degrees".into()));
        }
        if !sigma0.then(&sigma1).then(&sigma_inf).is_identity() {
            return Err(Error::InvalidInput("σ0·σ1·σ∞ is not the identity".into()));
        }
        let t = PermutationTriple { sigma0, sigma1, sigma_inf };
        if !t.is_transitive() {
            return Err(Error::InvalidInput("monodromy group is not transitive".into()));
        }
        Ok(t)
    }

    /// Completes `σ₀, σ₁` with `σ∞ = (σ₀ · σ₁)⁻¹`.
    pub fn from_pair(sigma0: Permutation, sigma1: Permutation) -> Result<Self> {
        if sigma0.degree() != sigma1.degree() {
            return Err(Error::InvalidInput("permutations of different degrees".into()));
        }
        let sigma_inf = sigma0.then(&sigma1).inverse();
        PermutationTriple::new(sigma0, sigma1, sigma_inf)
    }

    pub fn degree(&self) -> usize {
        self.sigma0.degree()
    }

    pub fn is_transitive(&self) -> bool {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut stack = vec![0];
        seen[0] = d > 0;
        while let Some(i) = stack.pop() {
            for s in [&self.sigma0, &self.sigma1] {
                let j = s.apply(i);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Cycle types over `∞`, `0`, `1`.
    pub fn passport(&self) -> Passport {
        Passport::new(self.sigma_inf.cycle_type(), self.sigma0.cycle_type(), self.sigma1.cycle_type())
    }

    pub fn conjugate_by(&self, pi: &Permutation) -> PermutationTriple {
        PermutationTriple {
            sigma0: self.sigma0.conjugate_by(pi),
            sigma1: self.sigma1.conjugate_by(pi),
            sigma_inf: self.sigma_inf.conjugate_by(pi),
        }
    }
}

impl fmt::Display for PermutationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ0 = {}\nσ1 = {}\nσ∞ = {}", self.sigma0, self.sigma1, self.sigma_inf)
    }
}

/// Genus of the dessin: `2 − 2g = c(σ₀) + c(σ₁) + c(σ∞) − D`.
pub fn genus_from_triple(t: &PermutationTriple) -> i64 {
    let c = |p: &Permutation| p.cycles().len() as i64;
    let chi = c(&t.sigma0) + c(&t.sigma1) + c(&t.sigma_inf) - t.degree() as i64;
    (2 - chi) / 2
}

/// Whether some relabelling `π` carries `a` to `b` simultaneously in all three slots.
pub fn triples_equivalent(a: &PermutationTriple, b: &PermutationTriple) -> bool {
    if a.degree() != b.degree() || a.passport() != b.passport() {
        return false;
    }
    let d = a.degree();
    let gens_a = [&a.sigma0, &a.sigma1];
    let gens_b = [&b.sigma0, &b.sigma1];
    let lens_a: Vec<Vec<usize>> = gens_a.iter().map(|p| p.cycle_len_of()).collect();
    let lens_b: Vec<Vec<usize>> = gens_b.iter().map(|p| p.cycle_len_of()).collect();
    let mut map = vec![usize::MAX; d];
    let mut used = vec![false; d];
    extend_map(&gens_a, &gens_b, &lens_a, &lens_b, &mut map, &mut used)
}

fn extend_map(
    ga: &[&Permutation; 2],
    gb: &[&Permutation; 2],
    la: &[Vec<usize>],
    lb: &[Vec<usize>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(a0) = map.iter().position(|&m| m == usize::MAX) else {
        return true;
    };
    for b0 in 0..map.len() {
        if used[b0] || (0..2).any(|g| la[g][a0] != lb[g][b0]) {
            continue;
        }
        let (saved_map, saved_used) = (map.clone(), used.clone());
        if propagate(ga, gb, a0, b0, map, used) && extend_map(ga, gb, la, lb, map, used) {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Forces `π(σ(a)) = τ(π(a))` along the orbit of `a0`; false on a clash.
fn propagate(ga: &[&Permutation; 2], gb: &[&Permutation; 2], a0: usize, b0: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    map[a0] = b0;
    used[b0] = true;
    let mut stack = vec![a0];
    while let Some(a) = stack.pop() {
        for g in 0..2 {
            for (sa, sb) in [(ga[g].apply(a), gb[g].apply(map[a])), (ga[g].inverse().apply(a), gb[g].inverse().apply(map[a]))] {
                if map[sa] == usize::MAX {
                    if used[sb] {
                        return false;
                    }
                    map[sa] = sb;
                    used[sb] = true;
                    stack.push(sa);
                } else if map[sa] != sb {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::from_cycles(d, s).unwrap()
    }

    #[test]
    fn cycle_notation_round_trip() {
        let s = p(6, "(1 4)(2 5 3)");
        assert_eq!(s.to_string(), "(1 4)(2 5 3)");
        assert_eq!(s.cycle_type(), vec![3, 2, 1]);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn tetrahedral_triple() {
        // degree 6 with cycle types 2^3 / 2^3 / 3^2
        let t = PermutationTriple::from_pair(p(6, "(1 2)(3 4)(5 6)"), p(6, "(2 3)(4 5)(6 1)")).unwrap();
        assert_eq!(t.passport().to_string(), "3^2/2^3/2^3");
        assert_eq!(genus_from_triple(&t), 0);
    }

    #[test]
    fn identity_triple_is_genus_zero() {
        let id = Permutation::identity(1);
        let t = PermutationTriple::new(id.clone(), id.clone(), id).unwrap();
        assert_eq!(genus_from_triple(&t), 0);
        assert!(triples_equivalent(&t, &t));
    }

    #[test]
    fn genus_one_triple() {
        // the torus dessin with one vertex of each colour and three edges
        let t = PermutationTriple::from_pair(p(3, "(1 2 3)"), p(3, "(1 2 3)")).unwrap();
        assert_eq!(t.sigma_inf.cycle_type(), vec![3]);
        assert_eq!(genus_from_triple(&t), 1);
    }

    #[test]
    fn rejects_bad_triples() {
        let s = p(3, "(1 2)");
        assert!(PermutationTriple::new(s.clone(), s.clone(), s.clone()).is_err());
        assert!(PermutationTriple::from_pair(p(4, "(1 2)"), p(4, "(3 4)")).is_err());
    }

    fn all_perms(d: usize) -> Vec<Permutation> {
        fn rec(d: usize, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if cur.len() == d {
                out.push(Permutation::new(cur.clone()).unwrap());
                return;
            }
            for i in 0..d {
                if !cur.contains(&i) {
                    cur.push(i);
                    rec(d, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(d, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn equivalence_matches_brute_force_in_degree_five() {
        let perms = all_perms(5);
        let s0 = p(5, "(1 2 3 4 5)");
        let triples: Vec<_> = perms.iter().filter_map(|s1| PermutationTriple::from_pair(s0.clone(), s1.clone()).ok()).collect();
        let mut inequivalent_same_passport = 0;
        for a in &triples {
            for b in &triples {
                let brute = a.passport() == b.passport() && perms.iter().any(|pi| &a.conjugate_by(pi) == b);
                assert_eq!(triples_equivalent(a, b), brute, "{a} vs {b}");
                if !brute && a.passport() == b.passport() {
                    inequivalent_same_passport += 1;
                }
            }
        }
        assert!(inequivalent_same_passport > 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn conjugates_are_equivalent(seed in any::<u64>(), d in 2usize..9) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let perm = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut v: Vec<usize> = (0..d).collect();
                v.shuffle(rng);
                Permutation::new(v).unwrap()
            };
            let (s0, s1) = (perm(&mut rng), perm(&mut rng));
            let Ok(t) = PermutationTriple::from_pair(s0, s1) else { return Ok(()); };
            let pi = perm(&mut rng);
            let u = t.conjugate_by(&pi);
            prop_assert!(u.sigma0.then(&u.sigma1).then(&u.sigma_inf).is_identity());
            prop_assert!(triples_equivalent(&t, &u));
            prop_assert_eq!(genus_from_triple(&t), genus_from_triple(&u));
        }
    }
}
