use super::Color;

/// Exhaustive list colouring of a small graph given by adjacency lists,
/// branching on the vertex with the fewest remaining colours.
pub fn backtrack(adj: &[Vec<usize>], lists: &[Vec<Color>]) -> Option<Vec<Color>> {
    fn go(adj: &[Vec<usize>], lists: &[Vec<Color>], out: &mut Vec<Option<Color>>) -> bool {
        let mut best: Option<(usize, Vec<Color>)> = None;
        for v in 0..adj.len() {
            if out[v].is_some() {
                continue;
            }
            let free: Vec<Color> = lists[v]
                .iter()
                .copied()
                .filter(|c| !adj[v].iter().any(|&w| out[w] == Some(*c)))
                .collect();
            if best.as_ref().is_none_or(|(_, b)| free.len() < b.len()) {
                let empty = free.is_empty();
                best = Some((v, free));
                if empty {
                    return false;
                }
            }
        }
        let Some((v, free)) = best else {
            return true;
        };
        for c in free {
            out[v] = Some(c);
            if go(adj, lists, out) {
                return true;
            }
        }
        out[v] = None;
        false
    }
    let mut out = vec![None; adj.len()];
    go(adj, lists, &mut out).then(|| out.into_iter().map(Option::unwrap).collect())
}

/// Degree-choosability ordering: if every vertex has at least as many
/// colours as neighbours and each component has a vertex with more, colour
/// in reverse breadth-first order from such a vertex.
pub fn color_by_slack(adj: &[Vec<usize>], lists: &[Vec<Color>]) -> Option<Vec<Color>> {
    let n = adj.len();
    if (0..n).any(|v| lists[v].len() < adj[v].len()) {
        return None;
    }
    let mut out: Vec<Option<Color>> = vec![None; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let root = *comp.iter().find(|&&v| lists[v].len() > adj[v].len())?;
        let mut order = vec![root];
        let mut mark: Vec<bool> = vec![false; n];
        mark[root] = true;
        let mut i = 0;
        while i < order.len() {
            for &w in &adj[order[i]] {
                if !mark[w] {
                    mark[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
        for &v in order.iter().rev() {
            let c = lists[v]
                .iter()
                .copied()
                .find(|c| !adj[v].iter().any(|&w| out[w] == Some(*c)))?;
            out[v] = Some(c);
        }
    }
    Some(out.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Vec<Vec<usize>> {
        vec![vec![1, 2], vec![0, 2], vec![0, 1]]
    }

    #[test]
    fn backtrack_finds_or_refutes() {
        assert!(backtrack(&triangle(), &vec![vec![1, 2]; 3]).is_none());
        let c = backtrack(&triangle(), &[vec![1, 2], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(c[0] != c[1] && c[1] != c[2] && c[0] != c[2]);
    }

    #[test]
    fn slack_needs_a_slack_vertex() {
        assert!(color_by_slack(&triangle(), &vec![vec![1, 2]; 3]).is_none());
        let c = color_by_slack(&triangle(), &[vec![1, 2], vec![1, 2], vec![1, 2, 3]]).unwrap();
        assert!(c[0] != c[1] && c[1] != c[2] && c[0] != c[2]);
    }
}
