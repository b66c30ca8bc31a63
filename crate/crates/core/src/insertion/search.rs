use crate::drawing::{ColoredDual, FaceId, Step, Witness};
use fixedbitset::FixedBitSet;
use std::collections::{HashSet, VecDeque};

/// Node budget exhausted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfBudget;

/// Depth-first search for heterochromatic face-simple dual paths.
///
/// Arcs are tried in ascending (color, arc) order. Before descending into a
/// face the search checks that some v-face is still reachable through
/// unvisited faces and unused colors, which never discards a solution.
pub struct PathSearch<'a> {
    d: &'a ColoredDual,
    budget: u64,
    pub nodes: u64,
    used: Vec<bool>,
    visited: Vec<bool>,
    is_target: Vec<bool>,
    path: Vec<(Step, FaceId)>,
    mark: Vec<u32>,
    stamp: u32,
}

impl<'a> PathSearch<'a> {
    pub fn new(d: &'a ColoredDual, budget: u64) -> Self {
        let mut is_target = vec![false; d.num_faces];
        for &f in &d.v_faces {
            is_target[f] = true;
        }
        PathSearch {
            d,
            budget,
            nodes: 0,
            used: vec![false; d.num_colors],
            visited: vec![false; d.num_faces],
            is_target,
            path: Vec::new(),
            mark: vec![0; d.num_faces],
            stamp: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    /// Whether a target is reachable from `f` avoiding visited faces and
    /// used colors.
    fn can_reach(&mut self, f: FaceId) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        let s = self.stamp;
        let mut queue = VecDeque::from([f]);
        self.mark[f] = s;
        while let Some(g) = queue.pop_front() {
            if self.is_target[g] {
                return true;
            }
            for &(c, _, h) in self.d.neighbors(g) {
                if !self.used[c] && !self.visited[h] && self.mark[h] != s {
                    self.mark[h] = s;
                    queue.push_back(h);
                }
            }
        }
        false
    }

    fn witness(&self, start: FaceId) -> Witness {
        Witness {
            start_face: start,
            steps: self.path.iter().map(|(s, _)| *s).collect(),
            end_face: self.path.last().map(|&(_, f)| f).unwrap_or(start),
        }
    }

    /// First witness in search order.
    pub fn first(&mut self) -> Result<Option<Witness>, OutOfBudget> {
        let mut out = Vec::new();
        self.run(1, &mut out)?;
        Ok(out.pop())
    }

    /// Up to `limit` witnesses in search order. A path ends at the first
    /// v-face it reaches.
    pub fn all(&mut self, limit: usize) -> Result<Vec<Witness>, OutOfBudget> {
        let mut out = Vec::new();
        self.run(limit, &mut out)?;
        Ok(out)
    }

    fn run(&mut self, limit: usize, out: &mut Vec<Witness>) -> Result<(), OutOfBudget> {
        let mut starts = self.d.u_faces.clone();
        starts.sort();
        for s in starts {
            if out.len() >= limit {
                break;
            }
            self.tick()?;
            if self.is_target[s] {
                out.push(self.witness(s));
                continue;
            }
            if !self.can_reach(s) {
                continue;
            }
            self.visited[s] = true;
            let r = self.dfs(s, s, limit, out);
            self.visited[s] = false;
            r?;
        }
        Ok(())
    }

    fn dfs(
        &mut self,
        start: FaceId,
        f: FaceId,
        limit: usize,
        out: &mut Vec<Witness>,
    ) -> Result<(), OutOfBudget> {
        let d = self.d;
        for &(c, arc, g) in d.neighbors(f) {
            if out.len() >= limit {
                return Ok(());
            }
            if self.used[c] || self.visited[g] {
                continue;
            }
            self.tick()?;
            self.path.push((Step { arc, color: c }, g));
            if self.is_target[g] {
                out.push(self.witness(start));
            } else {
                self.used[c] = true;
                self.visited[g] = true;
                let r = if self.can_reach(g) {
                    self.dfs(start, g, limit, out)
                } else {
                    Ok(())
                };
                self.used[c] = false;
                self.visited[g] = false;
                if let Err(e) = r {
                    self.path.pop();
                    return Err(e);
                }
            }
            self.path.pop();
        }
        Ok(())
    }
}

/// Walk search memoized on (face, used colors); needs at most 32 colors.
///
/// Colors stay distinct along a walk, and cutting out the loop at a repeated
/// face keeps them distinct, so a walk exists exactly when a face-simple
/// path does. Failed states are never revisited.
pub fn memo_search(d: &ColoredDual, budget: u64) -> Result<(Option<Witness>, u64), OutOfBudget> {
    assert!(d.num_colors <= 32);
    let mut is_target = vec![false; d.num_faces];
    for &f in &d.v_faces {
        is_target[f] = true;
    }
    let mut failed: HashSet<(FaceId, u32)> = HashSet::new();
    let mut nodes = 0u64;
    let mut starts = d.u_faces.clone();
    starts.sort();
    for s in starts {
        nodes += 1;
        if nodes > budget {
            return Err(OutOfBudget);
        }
        if is_target[s] {
            return Ok((Some(Witness { start_face: s, steps: vec![], end_face: s }), nodes));
        }
        let mut walk: Vec<(Step, FaceId)> = Vec::new();
        if walk_dfs(d, &is_target, s, 0, &mut walk, &mut failed, &mut nodes, budget)? {
            return Ok((Some(shortcut(s, &walk)), nodes));
        }
    }
    Ok((None, nodes))
}

#[allow(clippy::too_many_arguments)]
fn walk_dfs(
    d: &ColoredDual,
    is_target: &[bool],
    f: FaceId,
    used: u32,
    walk: &mut Vec<(Step, FaceId)>,
    failed: &mut HashSet<(FaceId, u32)>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, OutOfBudget> {
    if failed.contains(&(f, used)) {
        return Ok(false);
    }
    for &(c, arc, g) in d.neighbors(f) {
        let bit = 1u32 << c;
        if used & bit != 0 {
            continue;
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(OutOfBudget);
        }
        walk.push((Step { arc, color: c }, g));
        if is_target[g] || walk_dfs(d, is_target, g, used | bit, walk, failed, nodes, budget)? {
            return Ok(true);
        }
        walk.pop();
    }
    failed.insert((f, used));
    Ok(false)
}

/// Removes loops from a walk so that every face appears once.
pub fn shortcut(start: FaceId, walk: &[(Step, FaceId)]) -> Witness {
    let mut faces = vec![start];
    let mut steps: Vec<Step> = Vec::new();
    for &(s, g) in walk {
        if let Some(i) = faces.iter().position(|&f| f == g) {
            faces.truncate(i + 1);
            steps.truncate(i);
        } else {
            faces.push(g);
            steps.push(s);
        }
    }
    Witness {
        start_face: start,
        steps,
        end_face: *faces.last().unwrap(),
    }
}

enum Outcome {
    Found,
    /// Exhausted; the search fails again from the same face whenever all
    /// of these colors are used.
    Failed(FixedBitSet),
}

/// Depth-first search over heterochromatic walks with nogood recording.
///
/// When every continuation from a face is exhausted, the colors whose use
/// actually blocked an arc somewhere below are stored as a nogood for that
/// face. A later visit whose used colors include a stored nogood fails at
/// once. Freeing a color that never blocked anything cannot open a new
/// continuation, so pruning is exact; the found walk is shortcut to a
/// face-simple witness.
pub struct NogoodSearch<'a> {
    d: &'a ColoredDual,
    budget: u64,
    pub nodes: u64,
    used: FixedBitSet,
    is_target: Vec<bool>,
    nogoods: Vec<Vec<FixedBitSet>>,
    walk: Vec<(Step, FaceId)>,
    mark: Vec<u32>,
    stamp: u32,
}

impl<'a> NogoodSearch<'a> {
    pub fn new(d: &'a ColoredDual, budget: u64) -> Self {
        let mut is_target = vec![false; d.num_faces];
        for &f in &d.v_faces {
            is_target[f] = true;
        }
        NogoodSearch {
            d,
            budget,
            nodes: 0,
            used: FixedBitSet::with_capacity(d.num_colors),
            is_target,
            nogoods: vec![Vec::new(); d.num_faces],
            walk: Vec::new(),
            mark: vec![0; d.num_faces],
            stamp: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    /// If no target is reachable from `f` through unused colors, the used
    /// colors met on the way.
    fn unreachable_reason(&mut self, f: FaceId) -> Option<FixedBitSet> {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        let s = self.stamp;
        let mut reason = FixedBitSet::with_capacity(self.d.num_colors);
        let mut queue = VecDeque::from([f]);
        self.mark[f] = s;
        while let Some(g) = queue.pop_front() {
            if self.is_target[g] {
                return None;
            }
            for &(c, _, h) in self.d.neighbors(g) {
                if self.used.contains(c) {
                    reason.insert(c);
                } else if self.mark[h] != s {
                    self.mark[h] = s;
                    queue.push_back(h);
                }
            }
        }
        Some(reason)
    }

    /// First witness, trying u-faces in ascending order.
    pub fn first(&mut self) -> Result<Option<Witness>, OutOfBudget> {
        let mut starts = self.d.u_faces.clone();
        starts.sort();
        for s in starts {
            self.tick()?;
            if self.is_target[s] {
                return Ok(Some(Witness {
                    start_face: s,
                    steps: vec![],
                    end_face: s,
                }));
            }
            self.walk.clear();
            if let Outcome::Found = self.dfs(s)? {
                return Ok(Some(shortcut(s, &self.walk)));
            }
        }
        Ok(None)
    }

    fn dfs(&mut self, f: FaceId) -> Result<Outcome, OutOfBudget> {
        if let Some(ng) = self.nogoods[f].iter().find(|ng| ng.is_subset(&self.used)) {
            return Ok(Outcome::Failed(ng.clone()));
        }
        if let Some(reason) = self.unreachable_reason(f) {
            self.nogoods[f].push(reason.clone());
            return Ok(Outcome::Failed(reason));
        }
        let d = self.d;
        let mut reason = FixedBitSet::with_capacity(d.num_colors);
        for &(c, arc, g) in d.neighbors(f) {
            if self.used.contains(c) {
                reason.insert(c);
                continue;
            }
            self.tick()?;
            self.walk.push((Step { arc, color: c }, g));
            if self.is_target[g] {
                return Ok(Outcome::Found);
            }
            self.used.insert(c);
            let r = self.dfs(g)?;
            self.used.set(c, false);
            match r {
                Outcome::Found => return Ok(Outcome::Found),
                Outcome::Failed(mut child) => {
                    child.set(c, false);
                    reason.union_with(&child);
                }
            }
            self.walk.pop();
        }
        self.nogoods[f].push(reason.clone());
        Ok(Outcome::Failed(reason))
    }
}
