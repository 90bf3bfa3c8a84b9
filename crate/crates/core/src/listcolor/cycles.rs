use super::Color;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleColoring {
    /// One colour per cycle position.
    Colored(Vec<Color>),
    /// Odd cycle whose lists are all this pair.
    OddIdentical([Color; 2]),
}

/// Colours the cycle `0, 1, ..., n-1` (consecutive positions adjacent, and
/// `n-1` adjacent to `0`) from lists of size at least two.
///
/// Fails exactly when the cycle is odd and every list is the same pair.
pub fn color_cycle_2lists(lists: &[Vec<Color>]) -> CycleColoring {
    let n = lists.len();
    debug_assert!(lists.iter().all(|l| l.len() >= 2));
    let pick = |l: &[Color], avoid: &[Color]| l.iter().copied().find(|c| !avoid.contains(c));
    match n {
        0 => return CycleColoring::Colored(vec![]),
        1 => return CycleColoring::Colored(vec![lists[0][0]]),
        2 => {
            let a = lists[0][0];
            return CycleColoring::Colored(vec![a, pick(&lists[1], &[a]).unwrap()]);
        }
        _ => {}
    }
    let mut out: Vec<Option<Color>> = vec![None; n];
    let at = |i: isize| i.rem_euclid(n as isize) as usize;
    if let Some(w) = lists.iter().position(|l| l.len() >= 3) {
        // walk once around starting after w; w is coloured last with two
        // coloured neighbours and at least three colours
        for step in 1..n as isize {
            let i = at(w as isize + step);
            let prev: Vec<Color> = out[at(i as isize - 1)].into_iter().collect();
            out[i] = pick(&lists[i], &prev);
        }
        let nb = [out[at(w as isize - 1)].unwrap(), out[at(w as isize + 1)].unwrap()];
        out[w] = pick(&lists[w], &nb);
    } else if let Some(i) = (0..n).find(|&i| lists[i] != lists[(i + 1) % n]) {
        // a colour at i missing from i+1 frees i+1 at the end
        let j = (i + 1) % n;
        let a = *lists[i].iter().find(|c| !lists[j].contains(c)).unwrap();
        out[i] = Some(a);
        for step in 1..n as isize - 1 {
            let x = at(i as isize - step);
            let next = out[at(x as isize + 1)].unwrap();
            out[x] = pick(&lists[x], &[next]);
        }
        let nb = [out[at(j as isize + 1)].unwrap(), a];
        out[j] = pick(&lists[j], &nb);
    } else if n.is_multiple_of(2) {
        let (a, b) = (lists[0][0], lists[0][1]);
        return CycleColoring::Colored((0..n).map(|i| if i % 2 == 0 { a } else { b }).collect());
    } else {
        return CycleColoring::OddIdentical([lists[0][0], lists[0][1]]);
    }
    CycleColoring::Colored(out.into_iter().map(|c| c.expect("list of size two suffices")).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarColoring {
    pub cycle: Vec<Color>,
    pub ear: Color,
}

/// Colours a cycle (as in [`color_cycle_2lists`]) plus an ear vertex
/// adjacent to positions 0 and 1. Needs at least two colours at the ear,
/// three at positions 0 and 1 and two elsewhere.
pub fn color_cycle_plus_ear(cycle_lists: &[Vec<Color>], ear_list: &[Color]) -> Result<EarColoring> {
    let need = |pos: usize| if pos < 2 { 3 } else { 2 };
    if ear_list.len() < 2 {
        return Err(Error::ShortList {
            vertex: cycle_lists.len(),
            len: ear_list.len(),
            need: 2,
        });
    }
    if let Some(p) = (0..cycle_lists.len()).find(|&p| cycle_lists[p].len() < need(p)) {
        return Err(Error::ShortList {
            vertex: p,
            len: cycle_lists[p].len(),
            need: need(p),
        });
    }
    for &c in ear_list {
        let mut lists = cycle_lists.to_vec();
        for l in lists.iter_mut().take(2) {
            l.retain(|&x| x != c);
        }
        if let CycleColoring::Colored(colors) = color_cycle_2lists(&lists) {
            return Ok(EarColoring {
                cycle: colors,
                ear: c,
            });
        }
    }
    Err(Error::ExtensionFailed {
        vertex: cycle_lists.len(),
        context: "cycle with ear".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn proper_on_cycle(lists: &[Vec<Color>], colors: &[Color]) -> bool {
        let n = lists.len();
        (0..n).all(|i| lists[i].contains(&colors[i]))
            && (n < 2 || (0..n).all(|i| colors[i] != colors[(i + 1) % n]))
    }

    /// Tries every colour choice.
    fn brute_force_colorable(lists: &[Vec<Color>]) -> bool {
        fn go(lists: &[Vec<Color>], acc: &mut Vec<Color>) -> bool {
            let n = lists.len();
            if acc.len() == n {
                return acc[0] != acc[n - 1] || n == 1;
            }
            for &c in &lists[acc.len()] {
                if acc.last() != Some(&c) {
                    acc.push(c);
                    if go(lists, acc) {
                        return true;
                    }
                    acc.pop();
                }
            }
            false
        }
        go(lists, &mut Vec::new())
    }

    #[test]
    fn small_cases() {
        let l = vec![vec![1, 2]; 4];
        assert_eq!(color_cycle_2lists(&l), CycleColoring::Colored(vec![1, 2, 1, 2]));
        assert_eq!(color_cycle_2lists(&vec![vec![1, 2]; 3]), CycleColoring::OddIdentical([1, 2]));
        let mut l5 = vec![vec![1, 2]; 4];
        l5.push(vec![2, 3]);
        let CycleColoring::Colored(c) = color_cycle_2lists(&l5) else { panic!() };
        assert!(proper_on_cycle(&l5, &c));
    }

    #[test]
    fn ear_on_triangle() {
        let cyc = vec![vec![1, 2, 3], vec![1, 2, 3], vec![2, 3]];
        let r = color_cycle_plus_ear(&cyc, &[1, 2]).unwrap();
        assert_eq!(r.ear, 2);
        assert!(proper_on_cycle(&cyc, &r.cycle));
        assert!(!r.cycle[..2].contains(&2));
    }

    #[test]
    fn ear_with_disjoint_colours() {
        let cyc = vec![vec![1, 2, 3], vec![1, 2, 3], vec![1, 2], vec![1, 2]];
        let r = color_cycle_plus_ear(&cyc, &[4, 5]).unwrap();
        assert_eq!(r.ear, 4);
        assert!(proper_on_cycle(&cyc, &r.cycle));
    }

    #[test]
    fn ear_preconditions() {
        assert!(matches!(
            color_cycle_plus_ear(&[vec![1, 2], vec![1, 2, 3], vec![1, 2]], &[1, 2]),
            Err(Error::ShortList { vertex: 0, .. })
        ));
    }

    #[test]
    fn exhaustive_even_cycles_over_four_colours() {
        let pairs: Vec<Vec<Color>> = (1..=4)
            .flat_map(|a| ((a + 1)..=4).map(move |b| vec![a, b]))
            .collect();
        for n in [4usize, 6] {
            let total = pairs.len().pow(n as u32);
            for code in 0..total {
                let mut x = code;
                let lists: Vec<Vec<Color>> = (0..n)
                    .map(|_| {
                        let p = pairs[x % pairs.len()].clone();
                        x /= pairs.len();
                        p
                    })
                    .collect();
                let CycleColoring::Colored(c) = color_cycle_2lists(&lists) else {
                    panic!("even cycle failed: {lists:?}")
                };
                assert!(proper_on_cycle(&lists, &c));
            }
        }
    }

    fn arb_lists(max_len: usize, universe: Color) -> impl Strategy<Value = Vec<Vec<Color>>> {
        proptest::collection::vec(
            proptest::collection::btree_set(1..=universe, 2..=3).prop_map(|s| s.into_iter().collect()),
            3..max_len,
        )
    }

    proptest! {
        #[test]
        fn cycle_outcome_matches_brute_force(lists in arb_lists(10, 4)) {
            match color_cycle_2lists(&lists) {
                CycleColoring::Colored(c) => prop_assert!(proper_on_cycle(&lists, &c)),
                CycleColoring::OddIdentical(_) => {
                    prop_assert!(lists.len() % 2 == 1);
                    prop_assert!(!brute_force_colorable(&lists));
                }
            }
            if lists.len() % 2 == 0 {
                prop_assert!(matches!(color_cycle_2lists(&lists), CycleColoring::Colored(_)));
            }
        }

        #[test]
        fn ear_always_succeeds_on_minimum_lists(
            n in 3usize..9,
            seed in proptest::collection::vec(proptest::collection::btree_set(1u32..=6, 3), 12),
            ear in proptest::collection::btree_set(1u32..=6, 2),
        ) {
            let cyc: Vec<Vec<Color>> = (0..n)
                .map(|i| {
                    let full: Vec<Color> = seed[i].iter().copied().collect();
                    if i < 2 { full } else { full[..2].to_vec() }
                })
                .collect();
            let ear: Vec<Color> = ear.into_iter().collect();
            let r = color_cycle_plus_ear(&cyc, &ear).unwrap();
            prop_assert!(proper_on_cycle(&cyc, &r.cycle));
            prop_assert!(ear.contains(&r.ear) && r.cycle[0] != r.ear && r.cycle[1] != r.ear);
        }
    }
}
