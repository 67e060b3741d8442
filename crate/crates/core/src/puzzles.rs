//! River-crossing state graphs.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Pseudograph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Puzzle {
    /// Farmer, wolf, goat and cabbage; the boat takes the farmer and one item.
    Wgc,
    Missionaries { missionaries: u32, cannibals: u32, capacity: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum State {
    /// Items on the left bank as bits `w = 1, g = 2, c = 4`.
    Wgc { left: u8, farmer_left: bool },
    Mc { cannibals_left: u32, missionaries_left: u32, boat_left: bool },
}

const ITEMS: [(u8, char); 3] = [(1, 'w'), (2, 'g'), (4, 'c')];

fn items(mask: u8) -> String {
    ITEMS.iter().filter(|(b, _)| mask & b != 0).map(|&(_, c)| c).collect()
}

impl Puzzle {
    fn start(&self) -> State {
        match *self {
            Puzzle::Wgc => State::Wgc { left: 7, farmer_left: true },
            Puzzle::Missionaries { missionaries, cannibals, .. } => State::Mc {
                cannibals_left: cannibals,
                missionaries_left: missionaries,
                boat_left: true,
            },
        }
    }

    fn goal(&self) -> State {
        match self {
            Puzzle::Wgc => State::Wgc { left: 0, farmer_left: false },
            Puzzle::Missionaries { .. } => State::Mc {
                cannibals_left: 0,
                missionaries_left: 0,
                boat_left: false,
            },
        }
    }

    fn legal(&self, s: State) -> bool {
        match (*self, s) {
            (Puzzle::Wgc, State::Wgc { left, farmer_left }) => {
                let alone = if farmer_left { 7 & !left } else { left };
                alone & 3 != 3 && alone & 6 != 6
            }
            (
                Puzzle::Missionaries { missionaries, cannibals, .. },
                State::Mc { cannibals_left: cl, missionaries_left: ml, .. },
            ) => {
                let (cr, mr) = (cannibals - cl, missionaries - ml);
                (ml == 0 || ml >= cl) && (mr == 0 || mr >= cr)
            }
            _ => unreachable!("state kind matches puzzle"),
        }
    }

    /// Every crossing from `s`, legal or not, with its cargo label.
    fn moves(&self, s: State) -> Vec<(State, String)> {
        let mut out = Vec::new();
        match (*self, s) {
            (Puzzle::Wgc, State::Wgc { left, farmer_left }) => {
                let here = if farmer_left { left } else { 7 & !left };
                out.push((State::Wgc { left, farmer_left: !farmer_left }, "*".to_string()));
                for &(bit, name) in &ITEMS {
                    if here & bit != 0 {
                        out.push((State::Wgc { left: left ^ bit, farmer_left: !farmer_left }, name.to_string()));
                    }
                }
            }
            (
                Puzzle::Missionaries { missionaries, cannibals, capacity },
                State::Mc { cannibals_left: cl, missionaries_left: ml, boat_left },
            ) => {
                let (ch, mh) = if boat_left { (cl, ml) } else { (cannibals - cl, missionaries - ml) };
                for c in 0..=ch.min(capacity) {
                    for m in 0..=mh.min(capacity - c) {
                        if c + m == 0 {
                            continue;
                        }
                        let (ncl, nml) = if boat_left { (cl - c, ml - m) } else { (cl + c, ml + m) };
                        out.push((
                            State::Mc { cannibals_left: ncl, missionaries_left: nml, boat_left: !boat_left },
                            format!("{c}c{m}m"),
                        ));
                    }
                }
            }
            _ => unreachable!("state kind matches puzzle"),
        }
        out
    }

    fn label(&self, s: State) -> String {
        match (*self, s) {
            (Puzzle::Wgc, State::Wgc { left, farmer_left }) => {
                if farmer_left {
                    format!("{}*||{}", items(left), items(7 & !left))
                } else {
                    format!("{}||*{}", items(left), items(7 & !left))
                }
            }
            (
                Puzzle::Missionaries { missionaries, cannibals, .. },
                State::Mc { cannibals_left: cl, missionaries_left: ml, boat_left },
            ) => {
                let (l, r) = (format!("{cl}_{ml}"), format!("{}_{}", cannibals - cl, missionaries - ml));
                if boat_left {
                    format!("{l}*||{r}")
                } else {
                    format!("{l}||*{r}")
                }
            }
            _ => unreachable!("state kind matches puzzle"),
        }
    }
}

/// Legal states reachable from the start, numbered in breadth-first order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateGraph {
    pub graph: Pseudograph,
    pub labels: Vec<String>,
    /// Cargo of each crossing; `*` is the farmer alone.
    pub edge_labels: Vec<String>,
    pub start: usize,
    pub goal: Option<usize>,
}

pub fn build_state_graph(puzzle: Puzzle) -> Result<StateGraph> {
    if let Puzzle::Missionaries { missionaries, cannibals, capacity } = puzzle {
        if missionaries == 0 || cannibals == 0 || capacity == 0 {
            return Err(Error::InvalidParameter("puzzle parameters must be positive".into()));
        }
    }
    let start = puzzle.start();
    if !puzzle.legal(start) {
        return Err(Error::Precondition("the starting position is not legal".into()));
    }
    let mut index: HashMap<State, usize> = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut edges = Vec::new();
    let mut edge_labels = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let i = index[&s];
        for (t, cargo) in puzzle.moves(s) {
            if !puzzle.legal(t) {
                continue;
            }
            let j = *index.entry(t).or_insert_with(|| {
                states.push(t);
                queue.push_back(t);
                states.len() - 1
            });
            // each crossing is seen from both ends; keep the first sighting
            if i < j {
                edges.push((i, j));
                edge_labels.push(cargo);
            }
        }
    }
    Ok(StateGraph {
        graph: Pseudograph::new(states.len(), edges)?,
        labels: states.iter().map(|&s| puzzle.label(s)).collect(),
        edge_labels,
        start: 0,
        goal: index.get(&puzzle.goal()).copied(),
    })
}

/// Largest state graph for which simple paths are counted.
pub const SIMPLE_PATH_STATE_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solutions {
    /// Crossings on a shortest solution; `None` when the goal is unreachable.
    pub shortest: Option<usize>,
    pub shortest_path: Option<Vec<usize>>,
    /// Start-to-goal paths repeating no position; `None` past the size limit.
    pub simple_paths: Option<u64>,
}

pub fn solutions(sg: &StateGraph) -> Solutions {
    let Some(goal) = sg.goal else {
        return Solutions { shortest: None, shortest_path: None, simple_paths: Some(0) };
    };
    let dist = sg.graph.distances_from(sg.start);
    let adj: Vec<Vec<usize>> = (0..sg.graph.order()).map(|v| sg.graph.neighbors(v)).collect();
    let mut path = vec![goal];
    while let Some(&v) = path.last().filter(|&&v| v != sg.start) {
        let prev = adj[v]
            .iter()
            .copied()
            .find(|&u| dist[u].is_some_and(|d| Some(d + 1) == dist[v]))
            .expect("a predecessor on a shortest path");
        path.push(prev);
    }
    path.reverse();
    let simple_paths = (sg.graph.order() <= SIMPLE_PATH_STATE_LIMIT).then(|| {
        fn count(adj: &[Vec<usize>], v: usize, goal: usize, on_path: &mut [bool]) -> u64 {
            if v == goal {
                return 1;
            }
            on_path[v] = true;
            let mut total = 0;
            for &u in &adj[v] {
                if !on_path[u] {
                    total += count(adj, u, goal, on_path);
                }
            }
            on_path[v] = false;
            total
        }
        count(&adj, sg.start, goal, &mut vec![false; sg.graph.order()])
    });
    Solutions {
        shortest: dist[goal],
        shortest_path: Some(path),
        simple_paths,
    }
}
