//! Vertex-sums and the antimagic check, plus the structural invariants the
//! construction is expected to satisfy.
//!
//! Everything here is recomputed from raw arcs and labels; layout metadata is
//! only used to locate which slots are real.

use std::collections::HashMap;

use serde::Serialize;

use crate::label::CircuitLabels;
use crate::layout::PathName;
use crate::orient::{OrientedGraph, Status};
use crate::pipeline::{ComponentConstruction, Construction};

/// Sum per vertex: entering labels minus leaving labels.
pub type VertexSums = Vec<i64>;

/// Vertex sums of an oriented graph, accumulated vertex by vertex.
pub fn vertex_sums(og: &OrientedGraph, labels: &[usize]) -> VertexSums {
    let mut incident: Vec<Vec<(usize, bool)>> = vec![Vec::new(); og.vertex_count];
    for (arc, &(tail, head)) in og.arcs.iter().enumerate() {
        incident[tail].push((arc, false));
        incident[head].push((arc, true));
    }
    incident
        .iter()
        .map(|arcs| {
            arcs.iter()
                .map(|&(arc, entering)| {
                    let label = labels[arc] as i64;
                    if entering {
                        label
                    } else {
                        -label
                    }
                })
                .sum()
        })
        .collect()
}

/// Per-slot sums on a labeled circuit. Slot `s` is met by arc `s - 1` and
/// arc `s`.
pub fn circuit_sums(cl: &CircuitLabels) -> VertexSums {
    let len = cl.labels.len();
    (0..len)
        .map(|s| {
            let prev = (s + len - 1) % len;
            let incoming = cl.labels[prev] as i64;
            let outgoing = cl.labels[s] as i64;
            let from_prev = if cl.forward[prev] {
                incoming
            } else {
                -incoming
            };
            let from_next = if cl.forward[s] { -outgoing } else { outgoing };
            from_prev + from_next
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub u: usize,
    pub v: usize,
    pub sum: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantOutcome {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl InvariantOutcome {
    fn new(name: &str, failures: Vec<String>) -> Self {
        Self {
            name: name.to_string(),
            ok: failures.is_empty(),
            detail: failures.join("; "),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub bijection_ok: bool,
    pub antimagic_ok: bool,
    pub collisions: Vec<Collision>,
    pub sums: VertexSums,
    pub invariant_results: Vec<InvariantOutcome>,
}

impl VerificationReport {
    pub fn invariants_ok(&self) -> bool {
        self.invariant_results.iter().all(|o| o.ok)
    }

    pub fn invariant(&self, name: &str) -> Option<&InvariantOutcome> {
        self.invariant_results.iter().find(|o| o.name == name)
    }
}

/// Labels form a bijection onto `[1, m]` for `m` arcs.
pub fn is_bijection(labels: &[usize], arc_count: usize) -> bool {
    if labels.len() != arc_count {
        return false;
    }
    let mut seen = vec![false; arc_count + 1];
    labels
        .iter()
        .all(|&l| (1..=arc_count).contains(&l) && !std::mem::replace(&mut seen[l], true))
}

/// Computes sums and lists every pair of vertices sharing one.
pub fn check_antimagic(og: &OrientedGraph, labels: &[usize]) -> VerificationReport {
    let bijection_ok = is_bijection(labels, og.arc_count());
    let sums = if labels.len() == og.arc_count() {
        vertex_sums(og, labels)
    } else {
        vec![0; og.vertex_count]
    };

    let mut by_sum: HashMap<i64, Vec<usize>> = HashMap::new();
    for (v, &s) in sums.iter().enumerate() {
        by_sum.entry(s).or_default().push(v);
    }
    let mut collisions: Vec<Collision> = by_sum
        .into_iter()
        .filter(|(_, vs)| vs.len() > 1)
        .flat_map(|(sum, vs)| {
            let mut pairs = Vec::new();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    pairs.push(Collision { u, v, sum });
                }
            }
            pairs
        })
        .collect();
    collisions.sort_by_key(|c| (c.u, c.v));

    VerificationReport {
        bijection_ok,
        antimagic_ok: bijection_ok && collisions.is_empty(),
        collisions,
        sums,
        invariant_results: Vec::new(),
    }
}

/// `s_{D*}(v) = s_D(real slot of v) - (d - 1)` for every vertex.
///
/// `real_sums` pairs each vertex with the circuit-level sum at its real slot
/// and must cover every vertex of `d_star`.
pub fn check_projection_identity(real_sums: &[(usize, i64)], d_star: &[i64], d: usize) -> bool {
    let mut covered = vec![false; d_star.len()];
    for &(v, s) in real_sums {
        if v >= d_star.len() || covered[v] || d_star[v] != s - (d as i64 - 1) {
            return false;
        }
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

/// Checks the prescribed sums of the `v_{i,1}` vertices of odd circuits:
/// `1` for `i = 1`, `-(i - 1)` for `i` in `2..=8`,
/// `-(|P_{2,4}| + |P_{3,5}| + 1)` for `i = 9`, and `i - 8` beyond.
pub fn check_x_formulas(
    components: &[ComponentConstruction],
    sums: &[VertexSums],
    k: usize,
) -> Vec<InvariantOutcome> {
    (1..=k.min(components.len()))
        .map(|i| {
            let comp = &components[i - 1];
            let layout = &comp.layout;
            let expected: Option<i64> = match i {
                1 => Some(1),
                2..=8 => Some(-(i as i64 - 1)),
                9 => layout
                    .gap_of(PathName::new(2, 4))
                    .zip(layout.gap_of(PathName::new(3, 5)))
                    .map(|(a, b)| -((a + b + 1) as i64)),
                _ => Some(i as i64 - 8),
            };
            let actual = layout.slot_of_name(1).map(|s| sums[i - 1][s]);
            let name = format!("s(v_{{{i},1}})");
            let failures = match (expected, actual) {
                (Some(e), Some(a)) if e == a => vec![],
                (e, a) => vec![format!("expected {e:?}, got {a:?}")],
            };
            InvariantOutcome::new(&name, failures)
        })
        .collect()
}

/// Full check of a construction: antimagic verdict on the projected graph plus
/// every structural invariant.
pub fn verify_construction(c: &Construction) -> VerificationReport {
    let mut report = check_antimagic(&c.labeled.graph, &c.labeled.labels);
    let sums: Vec<VertexSums> = c.labeled.circuits.iter().map(circuit_sums).collect();

    let mut imaginary = Vec::new();
    let mut zero_total = Vec::new();
    let mut signs = Vec::new();
    let mut gaps = Vec::new();
    let mut real_sums = Vec::new();
    for (comp, circuit_sums) in c.components.iter().zip(&sums) {
        let i = comp.info.index;
        let layout = &comp.layout;
        let mask = layout.real_mask();
        for (s, &sum) in circuit_sums.iter().enumerate() {
            if !mask[s] && sum != -1 {
                imaginary.push(format!("C{i} slot {s} has sum {sum}"));
            }
        }
        if circuit_sums.iter().sum::<i64>() != 0 {
            zero_total.push(format!("C{i}"));
        }
        for (rank, &slot) in layout.real_slots.iter().enumerate() {
            let name = layout.names[rank];
            let sum = circuit_sums[slot];
            real_sums.push((layout.circuit.vertex(slot), sum));
            let ok = match comp.oriented.status(name) {
                Status::Sink => sum > 0,
                Status::Source => sum < 0,
                Status::Flow => true,
            };
            if !ok {
                signs.push(format!("C{i} v{name} has sum {sum}"));
            }
        }

        let len = layout.circuit.len();
        let t = layout.order();
        for rank in 0..t {
            let measured =
                (layout.real_slots[(rank + 1) % t] + len - layout.real_slots[rank]) % len;
            let measured = if measured == 0 { len } else { measured };
            let name = PathName::new(layout.names[rank], layout.names[(rank + 1) % t]);
            let ok = match (comp.spec.exact.get(&name), comp.spec.minimum.get(&name)) {
                (Some(&n), _) => measured == n,
                (None, Some(&n)) => measured >= n,
                (None, None) => true,
            };
            if !ok {
                gaps.push(format!("C{i} {name} has length {measured}"));
            }
        }
    }

    let n = &c.labeled.offsets;
    let n_k = n[c.k.min(n.len() - 1)];
    let mut ranges = Vec::new();
    for (idx, cl) in c.labeled.circuits.iter().enumerate() {
        let (lo, hi) = (n[idx] + 1, n[idx + 1]);
        let in_block = cl.labels.iter().all(|&l| (lo..=hi).contains(&l));
        let in_half = if idx < c.k {
            cl.labels.iter().all(|&l| l <= n_k)
        } else {
            cl.labels.iter().all(|&l| l > n_k)
        };
        if !in_block || !in_half {
            ranges.push(format!("C{} labels escape [{lo}, {hi}]", idx + 1));
        }
    }

    let projection = check_projection_identity(&real_sums, &report.sums, c.d);
    let x_failures: Vec<String> = check_x_formulas(&c.components, &sums, c.k)
        .into_iter()
        .filter(|o| !o.ok)
        .map(|o| format!("{}: {}", o.name, o.detail))
        .collect();

    report.invariant_results = vec![
        InvariantOutcome::new("imaginary_sums", imaginary),
        InvariantOutcome::new(
            "projection_identity",
            if projection {
                vec![]
            } else {
                vec!["s_D* != s_D - (d - 1)".into()]
            },
        ),
        InvariantOutcome::new("x_formulas", x_failures),
        InvariantOutcome::new("label_ranges", ranges),
        InvariantOutcome::new("gap_spec", gaps),
        InvariantOutcome::new("status_signs", signs),
        InvariantOutcome::new("circuit_sum_zero", zero_total),
    ];
    report
}
