//! Valid inequalities that cut out the faces behind the adjacency rules,
//! checked against every vertex in exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{BinaryPolytope, PolytopeError, VertexTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceKind {
    /// Edge between S(u) and S(v) for unlinked `u`, `v`.
    SingletonEdge { u: usize, v: usize },
    /// Edge between S(v) and L{u,w} when `v` is linked to neither endpoint.
    MixedEdge { v: usize, u: usize, w: usize },
    /// Square face on Empty, S(v), S(w), L{v,w} for a link `{v, w}`.
    TwoFace { v: usize, w: usize },
    /// Face spanned by all link vertices.
    EdgePolytope,
}

fn fractions<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

fn fraction<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `⟨coefficients, x⟩ ≤ rhs`, tight exactly at `tight_vertex_indices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCertificate {
    pub kind: FaceKind,
    #[serde(serialize_with = "fractions")]
    pub coefficients: Vec<BigRational>,
    #[serde(serialize_with = "fraction")]
    pub rhs: BigRational,
    pub tight_vertex_indices: Vec<usize>,
}

impl FaceCertificate {
    /// Plain-text form with exact fractions.
    pub fn to_text(&self) -> String {
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        let tight: Vec<String> = self.tight_vertex_indices.iter().map(|i| i.to_string()).collect();
        format!(
            "kind {:?}\ncoefficients {}\nrhs {}\ntight {}\n",
            self.kind,
            coeffs.join(" "),
            self.rhs,
            tight.join(" ")
        )
    }
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Builds the certificate for `kind` and checks it against every vertex.
pub fn face_certificate(p: &BinaryPolytope, kind: FaceKind) -> Result<FaceCertificate, PolytopeError> {
    let g = p.source_graph();
    let n = g.node_count();
    let bad = |why: &str| Err(PolytopeError::BadFaceParameters(why.to_string()));
    let in_range = |xs: &[usize]| xs.iter().all(|&x| x < n);
    let idx = |tag| p.index_of(tag).expect("tag of an existing vertex");
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    let (coefficients, rhs, expected) = match kind {
        FaceKind::SingletonEdge { u, v } => {
            if !in_range(&[u, v]) || u == v || g.has_link(u, v) {
                return bad("need two distinct unlinked nodes");
            }
            let mut a = vec![int(-2); n];
            a[u] = int(1);
            a[v] = int(1);
            let tight = vec![idx(VertexTag::Singleton(u)), idx(VertexTag::Singleton(v))];
            (a, int(1), tight)
        }
        FaceKind::MixedEdge { v, u, w } => {
            if !in_range(&[u, v, w]) || !g.has_link(u, w) || v == u || v == w || g.has_link(v, u) || g.has_link(v, w) {
                return bad("need a link {u, w} and a node v linked to neither endpoint");
            }
            let mut a = vec![int(-2); n];
            a[v] = int(1);
            a[u] = half.clone();
            a[w] = half.clone();
            let tight = vec![idx(VertexTag::Singleton(v)), idx(VertexTag::Link(u, w))];
            (a, int(1), tight)
        }
        FaceKind::TwoFace { v, w } => {
            if !in_range(&[v, w]) || !g.has_link(v, w) {
                return bad("need a link {v, w}");
            }
            let mut a = vec![int(-1); n];
            a[v] = BigRational::zero();
            a[w] = BigRational::zero();
            let tight = vec![
                idx(VertexTag::Empty),
                idx(VertexTag::Singleton(v)),
                idx(VertexTag::Singleton(w)),
                idx(VertexTag::Link(v, w)),
            ];
            (a, BigRational::zero(), tight)
        }
        FaceKind::EdgePolytope => {
            let tight = (0..p.vertex_count())
                .filter(|&i| matches!(p.tag(i), VertexTag::Link(..)))
                .collect();
            (vec![int(1); n], int(2), tight)
        }
    };

    let mut found = Vec::new();
    for (i, vertex) in p.vertices().iter().enumerate() {
        let value: BigRational = vertex
            .coords
            .iter()
            .zip(&coefficients)
            .filter(|(&x, _)| x == 1)
            .map(|(_, a)| a.clone())
            .sum();
        if value > rhs {
            return Err(PolytopeError::CertificateViolated(i));
        }
        if value == rhs {
            found.push(i);
        }
    }
    let mut expected = expected;
    expected.sort_unstable();
    if found != expected {
        return Err(PolytopeError::TightSetMismatch { expected, found });
    }
    Ok(FaceCertificate {
        kind,
        coefficients,
        rhs,
        tight_vertex_indices: found,
    })
}
