//! The normalizer decomposition: a pushout diagram `• ← • → •` of groups
//! read off the skeletal subdivision of the transporter category.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::category::{CatObject, GroupArrow};
use super::grothendieck::{grothendieck, witness_functor, PosetDiagram, WitnessReport};
use super::hypotheses::{verify_hypotheses, HypothesisCheck};
use super::model::{build_transporter, octahedral_closure, same_set, Carrier, TransporterModel, BIG, SMALL};
use super::subdivision::{subdivide, Subdivision};
use super::DecompError;
use crate::fingroup::library::{check_quaternion_presentation, find_quaternion_presentation, identify};
use crate::fingroup::FiniteGroup;
use crate::fusion::{classify_centric_radical, FusionContext};
use crate::quat::{CycQuaternion, ProjQuaternion};
use crate::storal::{Ambient, SSubgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Dot,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "dot" => Ok(OutputFormat::Dot),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationCheck {
    pub expected: String,
    pub found: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeGroup {
    pub name: String,
    pub order: usize,
    /// `true` when the group is the truncation of an infinite group.
    pub truncated: bool,
    pub iso_type: String,
    pub presentation_check: PresentationCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: String,
    pub label: String,
    pub chain: String,
    pub height: u32,
    pub group: NodeGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionWitness {
    /// Generators of the source group, in the common carrier.
    pub generators: Vec<String>,
    /// Every generator lies in the target group.
    pub contained: bool,
    /// Every element of the source lies in the target group.
    pub injective_inclusion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub src: String,
    pub dst: String,
    pub kind: String,
    pub witness: InclusionWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionDiagram {
    pub ambient: Ambient,
    pub level: u32,
    pub modulus: u32,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub verifications: Vec<Verification>,
    pub warnings: Vec<String>,
    pub hypotheses: Vec<HypothesisCheck>,
    pub grothendieck: WitnessReport,
}

impl DecompositionDiagram {
    pub fn failures(&self) -> Vec<&Verification> {
        self.verifications.iter().filter(|v| !v.pass).collect()
    }

    pub fn node_orders(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.group.order).collect()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("diagram serializes");
                s.push('\n');
                s
            }
            OutputFormat::Dot => self.to_dot(),
            OutputFormat::Text => self.to_text(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph decomposition_{} {{\n", self.ambient);
        s.push_str("  rankdir=LR;\n");
        for n in &self.nodes {
            let _ = writeln!(
                s,
                "  {} [label=\"{}\\n|G| = {}\\n{}\"];",
                n.id, n.label, n.group.order, n.group.iso_type
            );
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -> {} [label=\"{}\"];", e.src, e.dst, e.kind);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("decomposition of {} at level {}\n", self.ambient, self.level);
        s.push_str("nodes:\n");
        for n in &self.nodes {
            let _ = writeln!(
                s,
                "  {} {:<8} chain {:<10} height {} order {:>4} type {:<6} expected {:<6} {}",
                n.id,
                n.label,
                n.chain,
                n.height,
                n.group.order,
                n.group.iso_type,
                n.group.presentation_check.expected,
                if n.group.presentation_check.matches { "ok" } else { "MISMATCH" }
            );
        }
        s.push_str("edges:\n");
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  {} -> {} {} ({} generators, contained: {})",
                e.src,
                e.dst,
                e.kind,
                e.witness.generators.len(),
                e.witness.contained
            );
        }
        s.push_str("verifications:\n");
        for v in &self.verifications {
            let _ = writeln!(s, "  [{}] {}", if v.pass { "PASS" } else { "FAIL" }, v.name);
        }
        for w in &self.warnings {
            let _ = writeln!(s, "WARN {w}");
        }
        s
    }
}

struct Checks(Vec<Verification>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, pass: bool) {
        self.0.push(Verification {
            name: name.into(),
            pass,
            detail: None,
        });
    }

    fn add_detail(&mut self, name: impl Into<String>, pass: bool, detail: String) {
        self.0.push(Verification {
            name: name.into(),
            pass,
            detail: Some(detail),
        });
    }
}

/// Everything computed on the way to the diagram.
pub struct Decomposition<E> {
    pub transporter: TransporterModel<E>,
    pub subdivision: Subdivision<GroupArrow<E>>,
    pub diagram: DecompositionDiagram,
}

/// Names used for the three nodes.
struct Naming {
    bar: &'static str,
    small_normalizer_label: &'static str,
    small_normalizer_type: &'static str,
    chain_expected: &'static str,
    big_expected: fn(usize) -> String,
}

fn naming(ambient: Ambient) -> Naming {
    match ambient {
        Ambient::Su2 => Naming {
            bar: "",
            small_normalizer_label: "BO48",
            small_normalizer_type: "2O",
            chain_expected: "Q16",
            big_expected: |n| format!("Q{n}"),
        },
        Ambient::So3 => Naming {
            bar: "bar",
            small_normalizer_label: "BO24",
            small_normalizer_type: "Sym(4)",
            chain_expected: "Q8",
            big_expected: |n| format!("D{n}"),
        },
    }
}

fn group_of<E: Carrier>(elements: &[E]) -> Result<FiniteGroup<E>, DecompError> {
    Ok(FiniteGroup::from_elements(elements.to_vec())?)
}

fn inclusion_witness<E: Carrier>(source: &FiniteGroup<E>, target: &[E]) -> InclusionWitness {
    let set: HashSet<&E> = target.iter().collect();
    let generators: Vec<&E> = source.generators().iter().map(|&i| source.element(i)).collect();
    InclusionWitness {
        contained: generators.iter().all(|g| set.contains(g)),
        injective_inclusion: source.elements().iter().all(|g| set.contains(g)),
        generators: generators.iter().map(ToString::to_string).collect(),
    }
}

/// Build the full decomposition for one carrier.
pub fn decompose_with<E: Carrier>(ctx: &FusionContext) -> Result<Decomposition<E>, DecompError> {
    let mut checks = Checks(Vec::new());
    let mut warnings = Vec::new();
    let names = naming(ctx.ambient);

    let reports = classify_centric_radical(ctx)?;
    let mut classes: Vec<SSubgroup> = reports
        .iter()
        .filter(|r| r.is_centric_radical())
        .map(|r| r.subgroup)
        .collect();
    classes.sort_by_key(|p| p.is_infinite());
    checks.add_detail(
        "classification: two centric-radical classes",
        classes.len() == 2,
        classes.iter().map(|p| p.name()).collect::<Vec<_>>().join(", "),
    );

    let hypotheses = verify_hypotheses(ctx, &classes);
    for h in &hypotheses {
        checks.add(format!("hypotheses: C({0}) = Z({0}) is a finite 2-group", h.subgroup), h.pass());
    }
    if hypotheses.iter().any(|h| !h.pass()) {
        return Err(DecompError::Hypothesis(
            hypotheses
                .iter()
                .filter(|h| !h.pass())
                .map(|h| h.subgroup.clone())
                .collect::<Vec<_>>()
                .join(", "),
        ));
    }

    let t = build_transporter::<E>(ctx, &classes)?;
    let small_name = t.small_subgroup.name();
    checks.add("transporter: composition and identities", t.category.check_composition().is_ok());
    checks.add("transporter: EI", t.category.is_ei());
    checks.add("transporter: heights", t.category.respects_heights());
    checks.add(
        format!("transporter: Aut({small_name}) has order {}", t.small_normalizer.len()),
        t.aut(SMALL).len() == t.small_normalizer.len(),
    );
    checks.add(
        format!("transporter: Aut({}) is the truncation", t.big_subgroup.name()),
        same_set(&t.aut(BIG), &t.big),
    );

    let octahedral = octahedral_closure::<E>()?;
    checks.add(
        format!("normalizer: N({small_name}) equals the octahedral closure elementwise"),
        same_set(octahedral.elements(), &t.small_normalizer),
    );
    let small_set: HashSet<&E> = t.small.iter().collect();
    checks.add(
        format!("normalizer: the octahedral closure normalizes {small_name}"),
        octahedral.elements().iter().all(|g| {
            t.small.iter().all(|x| small_set.contains(&g.op(x).op(&g.inv())))
        }),
    );

    let sub = subdivide(&t.category)?;
    let chain = sub
        .find_chain(&[SMALL, BIG])
        .ok_or_else(|| DecompError::Category("no chain through both objects".into()))?;
    let face_small = sub.find_chain(&[SMALL]).expect("singleton chain");
    let face_big = sub.find_chain(&[BIG]).expect("singleton chain");
    checks.add("subdivision: three chain classes", sub.chains.len() == 3);
    checks.add("subdivision: composition and identities", sub.category.check_composition().is_ok());
    checks.add("subdivision: EI", sub.category.is_ei());
    checks.add("subdivision: heights", sub.category.respects_heights());
    let chain_normalizer = t.chain_normalizer();
    let chain_aut = sub.restriction(chain, 0);
    checks.add(
        "subdivision: chain automorphisms restrict injectively",
        sub.restrictions_injective(chain),
    );
    checks.add(
        format!("subdivision: Aut({small_name}<S) = N({small_name}) ∩ S_n"),
        same_set(&chain_aut.iter().map(|a| a.0.clone()).collect::<Vec<_>>(), &chain_normalizer)
            && same_set(
                &sub.restriction(chain, 1).iter().map(|a| a.0.clone()).collect::<Vec<_>>(),
                &chain_normalizer,
            ),
    );
    for face in [face_small, face_big] {
        let torsor = sub.category.torsor(chain, face);
        checks.add_detail(
            format!("subdivision: Hom({}, {}) is an Aut-torsor", sub.classes[chain].name, sub.classes[face].name),
            torsor.is_torsor() && torsor.count == torsor.acting_order,
            format!("{} morphisms, acting group of order {}", torsor.count, torsor.acting_order),
        );
    }

    // Grothendieck construction on the pushout poset
    let node = |x: usize| CatObject {
        name: sub.classes[x].name.clone(),
        height: sub.category.objects()[x].height,
    };
    let poset = PosetDiagram {
        nodes: vec![node(chain), node(face_small), node(face_big)],
        groups: vec![chain_normalizer.clone(), t.small_normalizer.clone(), t.big.clone()],
        less: vec![(0, 1), (0, 2)],
        identity: E::from_lift(CycQuaternion::identity()),
    };
    let gr = grothendieck(&poset)?;
    let witness = witness_functor(&gr, &sub, &[chain, face_small, face_big])?;
    checks.add("grothendieck: witness functor is an isomorphism", witness.pass());

    // node groups
    let chain_group = group_of(&chain_normalizer)?;
    let small_normalizer_group = group_of(&t.small_normalizer)?;
    let big_group = group_of(&t.big)?;
    let intersection: Vec<E> = {
        let big: HashSet<&E> = t.big.iter().collect();
        octahedral.elements().iter().filter(|g| big.contains(g)).cloned().collect()
    };
    checks.add(
        "intersection: octahedral closure ∩ S_n equals the chain group",
        same_set(&intersection, &chain_normalizer),
    );

    let chain_type = identify(&chain_group);
    let chain_found = match find_quaternion_presentation(&chain_group) {
        Some((a, b)) if check_quaternion_presentation(&chain_group, a, b).is_ok() => {
            format!("Q{}", chain_group.order())
        }
        _ => chain_type.clone(),
    };
    if ctx.ambient == Ambient::Su2 {
        checks.add("presentation: chain group satisfies the Q16 presentation", chain_found == "Q16");
    } else {
        checks.add("presentation: chain group has order 8", chain_group.order() == 8);
    }
    if chain_found != names.chain_expected {
        warnings.push(format!(
            "chain group N({small_name}) ∩ S{bar} of order {} is {chain_found}, not {}",
            chain_group.order(),
            names.chain_expected,
            bar = names.bar,
        ));
    }

    let big_type = identify(&big_group);
    let big_expected = (names.big_expected)(big_group.order());
    let small_type = identify(&small_normalizer_group);
    let mut nodes = [
        Node {
            id: String::new(),
            label: format!("B{chain_found}"),
            chain: sub.classes[chain].name.clone(),
            height: sub.category.objects()[chain].height,
            group: NodeGroup {
                name: format!("N({small_name}) ∩ S{}", names.bar),
                order: chain_group.order(),
                truncated: false,
                iso_type: chain_found.clone(),
                presentation_check: PresentationCheck {
                    expected: names.chain_expected.into(),
                    matches: chain_found == names.chain_expected,
                    found: chain_found.clone(),
                },
            },
        },
        Node {
            id: String::new(),
            label: names.small_normalizer_label.into(),
            chain: sub.classes[face_small].name.clone(),
            height: sub.category.objects()[face_small].height,
            group: NodeGroup {
                name: format!("N({small_name})"),
                order: small_normalizer_group.order(),
                truncated: false,
                iso_type: small_type.clone(),
                presentation_check: PresentationCheck {
                    expected: names.small_normalizer_type.into(),
                    matches: small_type == names.small_normalizer_type,
                    found: small_type,
                },
            },
        },
        Node {
            id: String::new(),
            label: format!("BS{}", names.bar),
            chain: sub.classes[face_big].name.clone(),
            height: sub.category.objects()[face_big].height,
            group: NodeGroup {
                name: format!("S{}", names.bar),
                order: big_group.order(),
                truncated: true,
                iso_type: big_type.clone(),
                presentation_check: PresentationCheck {
                    expected: big_expected.clone(),
                    matches: big_type == big_expected,
                    found: big_type,
                },
            },
        },
    ];
    for n in &nodes[1..] {
        checks.add(
            format!("presentation: {} is {}", n.label, n.group.presentation_check.expected),
            n.group.presentation_check.matches,
        );
    }
    let edges_raw = [
        (1usize, inclusion_witness(&chain_group, &t.small_normalizer)),
        (2usize, inclusion_witness(&chain_group, &t.big)),
    ];

    // deterministic order: height, then group order
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&i| (nodes[i].height, nodes[i].group.order));
    let mut id_of = vec![String::new(); nodes.len()];
    for (pos, &i) in order.iter().enumerate() {
        id_of[i] = format!("n{pos}");
    }
    for (i, n) in nodes.iter_mut().enumerate() {
        n.id = id_of[i].clone();
    }
    let mut edges: Vec<Edge> = edges_raw
        .into_iter()
        .map(|(dst, witness)| Edge {
            src: id_of[0].clone(),
            dst: id_of[dst].clone(),
            kind: "inclusion".into(),
            witness,
        })
        .collect();
    for e in &edges {
        checks.add(
            format!("edge {} -> {}: inclusion", e.src, e.dst),
            e.witness.contained && e.witness.injective_inclusion,
        );
    }
    edges.sort_by(|a, b| a.dst.cmp(&b.dst));
    let nodes: Vec<Node> = order.iter().map(|&i| nodes[i].clone()).collect();

    let diagram = DecompositionDiagram {
        ambient: ctx.ambient,
        level: ctx.level,
        modulus: ctx.effective_modulus(),
        nodes,
        edges,
        verifications: checks.0,
        warnings,
        hypotheses,
        grothendieck: witness,
    };
    Ok(Decomposition {
        transporter: t,
        subdivision: sub,
        diagram,
    })
}

/// The decomposition diagram for the ambient group of `ctx`.
pub fn decompose(ctx: &FusionContext) -> Result<DecompositionDiagram, DecompError> {
    if ctx.level < 3 {
        return Err(DecompError::Config(format!("level {} is below 3", ctx.level)));
    }
    Ok(match ctx.ambient {
        Ambient::Su2 => decompose_with::<CycQuaternion>(ctx)?.diagram,
        Ambient::So3 => decompose_with::<ProjQuaternion>(ctx)?.diagram,
    })
}
