//! Group spec in, polytope and verification report out.

use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::autengine::{are_isomorphic, automorphism_group, AutGroup};
use crate::frucht::{frucht_graph, FruchtError, FruchtResult};
use crate::graph::{graph6_encode, AugmentVariant, Graph, GraphError, StarStatus};
use crate::permgroup::{realize_group, GroupSpec, Permutation, PermutationGroup, StabilizerChain};
use crate::polytope::{
    build_polytope, diameter, empty_neighborhood, face_certificate, neighborhood_complement_iso,
    skeleton, special_case_polytope, verify_combinatorial, BinaryPolytope, FaceCertificate, FaceKind,
    PolytopeError, SkeletonGraph, VertexTag,
};
use crate::report::{
    AutOrders, CheckRecord, Construction, GraphSummary, GroupSummary, Mode, PolytopeSummary,
    TheoremChecks, VerificationReport,
};

/// Random products used for the homomorphism check on the lift.
pub const LIFT_SAMPLE_PAIRS: usize = 50;

/// Per-kind cap on emitted edge certificates; square faces are always
/// emitted for every link.
pub const EDGE_CERTIFICATE_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub mode: Mode,
    pub augment_variant: AugmentVariant,
    pub seed: u64,
    pub emit_certificates: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            mode: Mode::Basic,
            augment_variant: AugmentVariant::TwoNode,
            seed: 0,
            emit_certificates: false,
        }
    }
}

impl PipelineOptions {
    pub fn full() -> Self {
        PipelineOptions {
            mode: Mode::Full,
            ..Self::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Frucht(#[from] FruchtError),
    #[error("neither the graph nor its complement satisfies the star condition")]
    NoStarGraph,
    #[error("augmented graph is not usable: {0}")]
    Augmented(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// Everything a run produces besides the report.
#[derive(Clone, Debug)]
pub struct Artifacts {
    pub frucht: Option<FruchtResult>,
    /// Graph whose polytope was built.
    pub graph: Graph,
    pub polytope: BinaryPolytope,
    pub skeleton: SkeletonGraph,
    pub graph_automorphisms: Option<AutGroup>,
    pub skeleton_automorphisms: AutGroup,
    /// Lifts of the graph automorphism generators.
    pub f_generators: Vec<Permutation>,
    pub certificates: Vec<FaceCertificate>,
}

#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub report: VerificationReport,
    pub artifacts: Artifacts,
}

pub fn run_pipeline(spec: &GroupSpec, opts: &PipelineOptions) -> Result<PipelineRun, PipelineError> {
    if opts.mode == Mode::Basic && opts.augment_variant == AugmentVariant::OneNode {
        return Err(PipelineError::Input("the one-node augmentation only applies in full mode".into()));
    }
    let group = realize_group(spec);
    let group_summary = GroupSummary {
        spec: spec.to_string(),
        order: group.order().clone(),
        generator_count: group.generators().len(),
        minimum_generator_count: group.minimum_generator_count(),
    };
    match group.order_usize() {
        Some(k) if k <= 2 => special_case(&group, group_summary, opts),
        _ => general_case(&group, group_summary, opts),
    }
}

fn special_case(
    group: &PermutationGroup,
    group_summary: GroupSummary,
    opts: &PipelineOptions,
) -> Result<PipelineRun, PipelineError> {
    let p = special_case_polytope(group)?;
    let s = skeleton(&p);
    let aut_skel = automorphism_group(s.graph());
    let order = group.order().clone();
    let k = p.vertex_count();

    // a point or a segment is a simplex: every vertex subset spans a face,
    // so every vertex permutation is combinatorial
    let is_simplex = k <= 2;
    let p1 = CheckRecord::new(
        "property_i",
        aut_skel.order == order && is_simplex,
        format!("{k}-vertex simplex; all {} vertex permutations are combinatorial", aut_skel.order),
    );
    // the swap of the segment is x ↦ 1 − x
    let reflection_ok = aut_skel.generators.iter().all(|g| {
        (0..k).all(|i| {
            let image: Vec<u8> = p.vertices()[i].coords.iter().map(|&x| 1 - x).collect();
            p.vertices()[g.apply(i)].coords == image
        })
    });
    let p2 = CheckRecord::new(
        "property_ii",
        reflection_ok,
        "each skeleton automorphism is induced by the reflection x -> 1 - x or the identity",
    );
    let comb = verify_combinatorial(&p, &s);
    let p3 = CheckRecord::new("property_iii", comb.passed(), "binary; no nonadjacent vertex pairs");
    let diam = diameter(&s);
    let p4 = CheckRecord::new(
        "property_iv",
        diam.is_some_and(|d| d <= 2),
        format!("diameter {}", fmt_opt(diam)),
    );
    let p5 = CheckRecord::new(
        "property_v",
        aut_skel.order == order && is_simplex,
        "every skeleton automorphism of a simplex is combinatorial",
    );
    let checks = TheoremChecks {
        property_i: p1,
        property_ii: p2,
        property_iii: p3,
        property_iv: p4,
        property_v: p5,
    };
    let supporting = vec![CheckRecord::new(
        "vertex_count",
        k == order_small(group),
        format!("{k} vertices for a group of order {}", group.order()),
    )];
    let report = VerificationReport {
        mode: opts.mode,
        seed: opts.seed,
        group: group_summary,
        graph: GraphSummary {
            construction: Construction::SpecialCase,
            augment_variant: None,
            frucht_nodes: None,
            frucht_links: None,
            nodes: p.source_graph().node_count(),
            links: 0,
            condition_star: StarStatus::NoLinks,
            exceptional_pairs: 0,
        },
        polytope: PolytopeSummary {
            vertex_count: k,
            ambient_dimension: p.ambient_dimension(),
            affine_dimension: p.affine_dimension(),
            diameter: diam,
        },
        aut_orders: AutOrders {
            group: order,
            graph: None,
            skeleton: aut_skel.order.clone(),
            image_f: None,
        },
        passed: false,
        checks,
        supporting,
    };
    Ok(finish(
        report,
        Artifacts {
            frucht: None,
            graph: p.source_graph().clone(),
            polytope: p.clone(),
            skeleton: s,
            graph_automorphisms: None,
            skeleton_automorphisms: aut_skel,
            f_generators: Vec::new(),
            certificates: Vec::new(),
        },
    ))
}

fn order_small(group: &PermutationGroup) -> usize {
    group.order_usize().unwrap_or(usize::MAX)
}

fn fmt_opt(x: Option<usize>) -> String {
    x.map_or_else(|| "undefined (disconnected)".to_string(), |d| d.to_string())
}

fn finish(mut report: VerificationReport, artifacts: Artifacts) -> PipelineRun {
    report.passed = report.failures().is_empty();
    PipelineRun { report, artifacts }
}

fn general_case(
    group: &PermutationGroup,
    group_summary: GroupSummary,
    opts: &PipelineOptions,
) -> Result<PipelineRun, PipelineError> {
    let order = group.order().clone();
    let frucht = frucht_graph(group)?;
    let mut supporting = vec![CheckRecord::new(
        "frucht_verification",
        true,
        format!(
            "gadget graph on {} nodes has exactly {} automorphisms; left multiplication embeds the group",
            frucht.graph.node_count(),
            order
        ),
    )];

    let (g, construction) = match opts.mode {
        Mode::Basic => match basic_mode_graph(&frucht.graph)? {
            (g, false) => (g, Construction::Frucht),
            (g, true) => (g, Construction::FruchtComplement),
        },
        Mode::Full => {
            let aug = frucht.graph.augment(opts.augment_variant)?;
            let star = aug.check_condition_star();
            if !star.holds() {
                return Err(PipelineError::Augmented(format!("star condition {:?}", star.status)));
            }
            let pairs = aug.exceptional_link_pairs();
            if !pairs.is_empty() {
                return Err(PipelineError::Augmented(format!("{} exceptional link pairs", pairs.len())));
            }
            (aug, Construction::FruchtAugmented)
        }
    };
    let star = g.check_condition_star();
    let exceptional = g.exceptional_link_pairs();
    supporting.push(CheckRecord::new(
        "condition_star",
        star.holds(),
        format!("star condition status {:?}", star.status),
    ));

    let p = build_polytope(&g)?;
    let s = skeleton(&p);
    let n = g.node_count();
    let k = p.vertex_count();

    let aut_graph = automorphism_group(&g);
    let aut_skel = automorphism_group(s.graph());
    supporting.push(CheckRecord::new(
        "graph_automorphism_order",
        aut_graph.order == order,
        format!("|Aut| of the polytope's graph is {}", aut_graph.order),
    ));

    // structure of P(Γ)
    let binary = p.vertices().iter().all(|v| v.coords.iter().all(|&x| x <= 1));
    let count_ok = k == 1 + n + g.link_count();
    let affine = p.affine_dimension();
    supporting.push(CheckRecord::new(
        "vertex_count",
        count_ok,
        format!("{k} vertices = 1 + {n} nodes + {} links", g.link_count()),
    ));
    supporting.push(CheckRecord::new(
        "affine_dimension",
        affine == n,
        format!("affine dimension {affine} in ambient dimension {n}"),
    ));
    let comb = verify_combinatorial(&p, &s);
    let diam = diameter(&s);
    let nbhd_direct = neighborhood_complement_iso(&p, &s);
    let nbhd_search = are_isomorphic(&g.complement(), &empty_neighborhood(&s, &p)).is_some();
    supporting.push(CheckRecord::new(
        "neighborhood_complement_iso",
        nbhd_direct && nbhd_search,
        "neighbours of Empty induce the complement graph via u -> S(u)",
    ));

    // the lift F
    let lift = check_lift(&p, &s, &aut_graph, opts.seed)?;
    supporting.extend(lift.records.iter().cloned());

    // skeleton automorphisms against the lift
    let mut not_fixing = Vec::new();
    let mut not_lifts = Vec::new();
    for beta in &aut_skel.generators {
        if !beta.fixes(p.empty_index()) {
            not_fixing.push(beta.to_cycle_string());
            continue;
        }
        let is_lift = p
            .induced_node_permutation(beta)
            .and_then(|alpha| p.lift_automorphism(&alpha).ok())
            .is_some_and(|f| &f == beta);
        if !is_lift {
            not_lifts.push(beta.to_cycle_string());
        }
    }
    let skel_gens_ok = not_fixing.is_empty() && not_lifts.is_empty();
    let mut rec = CheckRecord::new(
        "skeleton_generators_are_lifts",
        skel_gens_ok || (opts.mode == Mode::Basic && !exceptional.is_empty()),
        format!(
            "{} skeleton generators; {} move Empty; {} fix Empty but are not lifts",
            aut_skel.generators.len(),
            not_fixing.len(),
            not_lifts.len()
        ),
    );
    if !skel_gens_ok {
        rec = rec.with_witness(json!({ "moving_empty": not_fixing, "not_lifts": not_lifts }));
    }
    supporting.push(rec);

    let certificates = build_certificates(&p, opts.emit_certificates);
    let cert_record = match &certificates {
        Ok(c) => CheckRecord::new("face_certificates", true, format!("{} certificates validated exactly", c.len())),
        Err(e) => CheckRecord::new("face_certificates", false, e.to_string()),
    };
    let squares_ok = certificates.is_ok();
    supporting.push(cert_record);

    // the five properties
    let skel_matches = aut_skel.order == order && lift.image_order == order && aut_graph.order == order;
    let regime_basic_exceptional = opts.mode == Mode::Basic && !exceptional.is_empty();
    let p1 = if skel_matches && skel_gens_ok && star.holds() && squares_ok {
        CheckRecord::new(
            "property_i",
            true,
            format!("|Aut(skeleton)| = |image F| = |G| = {order}; every skeleton generator is a lift"),
        )
    } else if regime_basic_exceptional && !skel_matches {
        CheckRecord::not_applicable(
            "property_i",
            format!(
                "skeleton has {} automorphisms against |G| = {order}; with exceptional link pairs the skeleton does not determine the combinatorial automorphisms",
                aut_skel.order
            ),
        )
    } else {
        CheckRecord::new("property_i", false, "combinatorial automorphism group not certified equal to G")
            .with_witness(json!({
                "skeleton_order": aut_skel.order.to_string(),
                "image_f_order": lift.image_order.to_string(),
                "graph_order": aut_graph.order.to_string(),
                "condition_star": star.status,
            }))
    };
    let p2 = match p1.status {
        crate::report::CheckStatus::NotApplicable => CheckRecord::not_applicable(
            "property_ii",
            "lifts are coordinate permutations, but the full combinatorial group is not certified here",
        ),
        _ => CheckRecord::new(
            "property_ii",
            !p1.failed() && lift.coordinate_ok,
            "each combinatorial automorphism is a lift, and each lift is a coordinate permutation (an isometry)",
        ),
    };
    let mut p3 = CheckRecord::new(
        "property_iii",
        binary && comb.passed() && count_ok,
        format!(
            "binary; {} nonadjacent pairs, all with a midpoint witness",
            comb.nonadjacent_pairs
        ),
    );
    if !comb.passed() {
        p3 = p3.with_witness(json!({
            "missing_witness": comb.missing_witness,
            "adjacent_with_witness": comb.adjacent_with_witness,
        }));
    }
    let p4 = CheckRecord::new(
        "property_iv",
        diam.is_some_and(|d| d <= 2),
        format!("diameter {}", fmt_opt(diam)),
    );
    let p5 = if regime_basic_exceptional {
        CheckRecord::not_applicable(
            "property_v",
            format!("{} exceptional link pairs; use full mode", exceptional.len()),
        )
    } else if aut_skel.order == order && skel_gens_ok {
        CheckRecord::new(
            "property_v",
            true,
            format!("|Aut(skeleton)| = {order} and every skeleton generator is a combinatorial lift"),
        )
    } else {
        CheckRecord::new("property_v", false, "skeleton has automorphisms beyond the lifts").with_witness(json!({
            "skeleton_order": aut_skel.order.to_string(),
            "generators": aut_skel.generators,
        }))
    };

    let report = VerificationReport {
        mode: opts.mode,
        seed: opts.seed,
        group: group_summary,
        graph: GraphSummary {
            construction,
            augment_variant: (opts.mode == Mode::Full).then_some(opts.augment_variant),
            frucht_nodes: Some(frucht.graph.node_count()),
            frucht_links: Some(frucht.graph.link_count()),
            nodes: n,
            links: g.link_count(),
            condition_star: star.status,
            exceptional_pairs: exceptional.len(),
        },
        polytope: PolytopeSummary {
            vertex_count: k,
            ambient_dimension: n,
            affine_dimension: affine,
            diameter: diam,
        },
        aut_orders: AutOrders {
            group: order,
            graph: Some(aut_graph.order.clone()),
            skeleton: aut_skel.order.clone(),
            image_f: Some(lift.image_order.clone()),
        },
        checks: TheoremChecks {
            property_i: p1,
            property_ii: p2,
            property_iii: p3,
            property_iv: p4,
            property_v: p5,
        },
        supporting,
        passed: false,
    };
    Ok(finish(
        report,
        Artifacts {
            frucht: Some(frucht),
            graph: g,
            polytope: p,
            skeleton: s,
            graph_automorphisms: Some(aut_graph),
            skeleton_automorphisms: aut_skel,
            f_generators: lift.generators,
            certificates: certificates.unwrap_or_default(),
        },
    ))
}

/// The graph itself when it satisfies the star condition, else its
/// complement (flagged `true`); an error when both fail.
pub fn basic_mode_graph(g: &Graph) -> Result<(Graph, bool), PipelineError> {
    if g.check_condition_star().holds() {
        return Ok((g.clone(), false));
    }
    let c = g.complement();
    if c.check_condition_star().holds() {
        Ok((c, true))
    } else {
        Err(PipelineError::NoStarGraph)
    }
}

/// Outcome of checking the lift of graph automorphisms to the polytope.
#[derive(Clone, Debug)]
pub struct LiftCheck {
    pub generators: Vec<Permutation>,
    pub image_order: BigUint,
    pub injective: bool,
    pub homomorphic: bool,
    /// Every lifted generator fixes Empty, preserves tags, is a skeleton
    /// automorphism and acts as the coordinate permutation of its node map.
    pub coordinate_ok: bool,
    pub records: Vec<CheckRecord>,
}

pub fn check_lift(
    p: &BinaryPolytope,
    s: &SkeletonGraph,
    aut: &AutGroup,
    seed: u64,
) -> Result<LiftCheck, PolytopeError> {
    let n = p.ambient_dimension();
    let k = p.vertex_count();
    let generators = aut
        .generators
        .iter()
        .map(|a| p.lift_automorphism(a))
        .collect::<Result<Vec<_>, _>>()?;
    let image_order = StabilizerChain::new(k, &generators, &[]).order();
    let injective = image_order == aut.order;

    let chain = aut.stabilizer_chain(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut homomorphic = true;
    for _ in 0..LIFT_SAMPLE_PAIRS {
        let a = chain.random_element(&mut rng);
        let b = chain.random_element(&mut rng);
        let lhs = p.lift_automorphism(&a.compose(&b))?;
        let rhs = p.lift_automorphism(&a)?.compose(&p.lift_automorphism(&b)?);
        homomorphic &= lhs == rhs;
    }

    let coordinate_ok = aut.generators.iter().zip(&generators).all(|(alpha, f)| {
        f.fixes(p.empty_index())
            && s.graph().is_automorphism(f)
            && (0..k).all(|i| {
                let same_kind = std::mem::discriminant(&p.tag(i)) == std::mem::discriminant(&p.tag(f.apply(i)));
                let mut moved = vec![0u8; n];
                for (u, &x) in p.vertices()[i].coords.iter().enumerate() {
                    moved[alpha.apply(u)] = x;
                }
                same_kind && moved == p.vertices()[f.apply(i)].coords
            })
    });
    let records = vec![
        CheckRecord::new(
            "lift_injective",
            injective,
            format!("|image F| = {image_order}, |Aut(graph)| = {}", aut.order),
        ),
        CheckRecord::new(
            "lift_homomorphism",
            homomorphic,
            format!("F(ab) = F(a)F(b) on {LIFT_SAMPLE_PAIRS} random pairs"),
        ),
        CheckRecord::new(
            "lift_coordinate_permutation",
            coordinate_ok,
            "lifted generators fix Empty, preserve tags, preserve the skeleton and permute coordinates",
        ),
    ];
    Ok(LiftCheck {
        generators,
        image_order,
        injective,
        homomorphic,
        coordinate_ok,
        records,
    })
}

/// Square faces for every link and the edge-polytope face are always
/// validated; edge certificates are added up to the cap when emitting.
fn build_certificates(p: &BinaryPolytope, emit: bool) -> Result<Vec<FaceCertificate>, PolytopeError> {
    let g = p.source_graph();
    let n = g.node_count();
    let mut kinds: Vec<FaceKind> = g.links().into_iter().map(|(v, w)| FaceKind::TwoFace { v, w }).collect();
    kinds.push(FaceKind::EdgePolytope);
    if emit {
        let singles = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_link(u, v))
            .take(EDGE_CERTIFICATE_CAP)
            .map(|(u, v)| FaceKind::SingletonEdge { u, v });
        kinds.extend(singles);
        let mixed = g
            .links()
            .into_iter()
            .flat_map(|(u, w)| (0..n).map(move |v| (v, u, w)))
            .filter(|&(v, u, w)| v != u && v != w && !g.has_link(v, u) && !g.has_link(v, w))
            .take(EDGE_CERTIFICATE_CAP)
            .map(|(v, u, w)| FaceKind::MixedEdge { v, u, w });
        kinds.extend(mixed);
    }
    kinds.into_iter().map(|kind| face_certificate(p, kind)).collect()
}

/// Writes graph6 files, the vertex and tag files, generator files, the
/// report and (optionally) certificates into `dir`.
pub fn write_artifacts(run: &PipelineRun, dir: &Path, emit_certificates: bool) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let g6 = |g: &Graph| graph6_encode(g).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e));
    let a = &run.artifacts;
    if let Some(fr) = &a.frucht {
        fs::write(dir.join("gamma.g6"), g6(&fr.graph)? + "\n")?;
        let mut phi = String::from("# element-index node-index\n");
        for (i, node) in fr.node_map.iter().enumerate() {
            phi.push_str(&format!("{i} {node}\n"));
        }
        phi.push_str("# images of the group generators\n");
        for s in &fr.digraph.generators {
            let i = fr.element_index(s).expect("generators are elements");
            phi.push_str(&format!("{}\n", fr.phi[i]));
        }
        fs::write(dir.join("phi.txt"), phi)?;
    }
    fs::write(dir.join("gamma_prime.g6"), g6(&a.graph)? + "\n")?;
    fs::write(dir.join("skeleton.g6"), g6(a.skeleton.graph())? + "\n")?;
    fs::write(dir.join("polytope.txt"), a.polytope.to_vertex_file())?;
    fs::write(dir.join("polytope_tags.txt"), a.polytope.to_tag_file())?;
    let gens: String = a.f_generators.iter().map(|f| format!("{f}\n")).collect();
    fs::write(dir.join("f_generators.txt"), gens)?;
    fs::write(dir.join("report.json"), run.report.to_json())?;
    if emit_certificates {
        let text: String = a.certificates.iter().map(|c| c.to_text() + "\n").collect();
        fs::write(dir.join("certificates.txt"), text)?;
    }
    Ok(())
}

/// Result of embedding a graph as the Empty-neighbourhood of a skeleton.
#[derive(Clone, Debug, serde::Serialize)]
pub struct InducedSubgraphDemo {
    pub nodes: usize,
    pub links: usize,
    pub dimension: usize,
    pub polytope_vertices: usize,
    pub combinatorial: bool,
    /// Node `u` sits at vertex `embedding[u]`, the Singleton of `u`.
    pub embedding: Vec<usize>,
    /// Isomorphism found independently by search, node → neighbourhood position.
    pub search_map: Vec<usize>,
}

/// Builds the polytope of the complement of `g` and checks that `g` is the
/// subgraph induced by the skeleton on the neighbours of Empty.
pub fn demo_induced_subgraph(g: &Graph) -> Result<InducedSubgraphDemo, PipelineError> {
    let p = build_polytope(&g.complement())?;
    let s = skeleton(&p);
    if !neighborhood_complement_iso(&p, &s) {
        return Err(PipelineError::Input("neighbourhood map failed; this is a bug".into()));
    }
    let h = empty_neighborhood(&s, &p);
    let search = are_isomorphic(g, &h).ok_or_else(|| PipelineError::Input("no isomorphism found; this is a bug".into()))?;
    let embedding = (0..g.node_count())
        .map(|u| p.index_of(VertexTag::Singleton(u)).expect("singleton vertex"))
        .collect();
    Ok(InducedSubgraphDemo {
        nodes: g.node_count(),
        links: g.link_count(),
        dimension: p.ambient_dimension(),
        polytope_vertices: p.vertex_count(),
        combinatorial: verify_combinatorial(&p, &s).passed(),
        embedding,
        search_map: search.images().to_vec(),
    })
}
