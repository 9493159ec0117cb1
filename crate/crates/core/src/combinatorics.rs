//! Small enumeration helpers shared by the search routines.

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Assignments of `m` labeled items to at most `cells` interchangeable cells,
/// one representative per cell permutation (restricted growth strings), in
/// lexicographic order.
pub fn canonical_partitions(m: usize, cells: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, cells: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in 0..cells.min(used + 1) {
            cur.push(c);
            rec(m, cells, cur, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if cells == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, cells, &mut Vec::with_capacity(m), 0, &mut out);
    out
}

/// Depth-first walk over the same canonical assignments as
/// [`canonical_partitions`]. `keep` sees every prefix and may prune it;
/// `visit` sees complete assignments and returns `true` to stop the walk.
/// Returns whether the walk was stopped.
pub fn search_partitions<F, G>(m: usize, cells: usize, mut keep: F, mut visit: G) -> bool
where
    F: FnMut(&[usize]) -> bool,
    G: FnMut(&[usize]) -> bool,
{
    fn rec<F, G>(m: usize, cells: usize, cur: &mut Vec<usize>, used: usize, keep: &mut F, visit: &mut G) -> bool
    where
        F: FnMut(&[usize]) -> bool,
        G: FnMut(&[usize]) -> bool,
    {
        if !keep(cur) {
            return false;
        }
        if cur.len() == m {
            return visit(cur);
        }
        for c in 0..cells.min(used + 1) {
            cur.push(c);
            let stop = rec(m, cells, cur, used.max(c + 1), keep, visit);
            cur.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if cells == 0 {
        return m == 0 && keep(&[]) && visit(&[]);
    }
    rec(m, cells, &mut Vec::with_capacity(m), 0, &mut keep, &mut visit)
}

/// All words of length `len` over `0..base`, lexicographic.
pub fn words(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..base).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}
