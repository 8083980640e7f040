use bergex_core::constructions::*;
use bergex_core::hypergraph::fano_incidence_graph;
use bergex_core::{count_cliques, is_berge_free, Multigraph};
use num_rational::Rational64;

fn k2(t: usize) -> Multigraph {
    Multigraph::complete_bipartite(2, t)
}

const PARAMS: &[(u32, u32)] = &[(5, 2), (7, 2), (9, 2), (5, 3), (7, 3), (9, 3), (9, 5)];

#[test]
fn furedi_graphs_are_k2t_free_and_nearly_regular() {
    for &(q, t) in PARAMS {
        let p = FurediParams::new(q, t).unwrap();
        let g = furedi_k2t(&p);
        assert_eq!(g.n(), ((q * q - 1) / (t - 1)) as usize);
        assert!(g.is_simple());
        let host = g.as_hypergraph().unwrap();
        assert!(is_berge_free(&host, &[k2(t as usize)]), "q={} t={}", q, t);
        let degrees = g.degrees();
        assert!(degrees.iter().all(|&d| d == q as usize || d + 1 == q as usize));
        let short = degrees.iter().filter(|&&d| d + 1 == q as usize).count();
        assert_eq!(g.n() * q as usize - short, 2 * g.edge_count());
    }
}

#[test]
fn furedi_c4_case_edge_counts() {
    // q(q^2-1)/2 minus half the number of self-adjacent classes
    let g5 = furedi_k2t(&FurediParams::new(5, 2).unwrap());
    let g7 = furedi_k2t(&FurediParams::new(7, 2).unwrap());
    assert_eq!(g5.edge_count(), 60 - 2);
    assert_eq!(g7.edge_count(), 168 - 4);
}

#[test]
fn triangle_replacement_preserves_freeness() {
    for &(q, t) in &[(5u32, 3u32), (7, 3), (9, 3)] {
        let g = furedi_k2t(&FurediParams::new(q, t).unwrap());
        let h = triangles_to_hyperedges(&g).unwrap();
        assert_eq!(h.edge_count() as u64, count_cliques(&g, 3).unwrap().count);
        assert!(is_berge_free(&h, &[k2(t as usize)]), "q={}", q);
    }
    let k4 = Multigraph::complete(4);
    assert_eq!(triangles_to_hyperedges(&k4).unwrap().edge_count(), 4);
    assert!(triangles_to_hyperedges(&Multigraph::cycle(2).unwrap()).is_err());
}

#[test]
fn bipartite_blowups() {
    let g = fano_incidence_graph();
    for r in 3..=5 {
        let h = blowup_bipartite(&g, r, 2).unwrap();
        assert_eq!(h.edge_count(), g.edge_count());
        assert_eq!(h.r(), r);
        assert_eq!(h.n(), 7 * (r / 2) + 7 * r.div_ceil(2));
        assert!(is_berge_free(&h, &[k2(2)]), "r={}", r);
    }
    assert!(blowup_bipartite(&Multigraph::complete(3), 3, 2).is_err());
    assert!(blowup_bipartite(&Multigraph::complete_bipartite(2, 2), 3, 2).is_err());
}

#[test]
fn cycle_blowups() {
    let c8 = Multigraph::cycle(8).unwrap();
    for r in 3..=4 {
        let h = cycle_blowup(&c8, r, 3).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert!(is_berge_free(&h, &cycle_family(3)));
    }
    let h = cycle_blowup(&fano_incidence_graph(), 3, 2).unwrap();
    assert_eq!(h.edge_count(), 21);
    assert!(is_berge_free(&h, &cycle_family(2)));
    assert!(cycle_blowup(&Multigraph::cycle(6).unwrap(), 3, 3).is_err());
    assert!(cycle_blowup(&Multigraph::complete(3), 3, 1).is_err());
}

#[test]
fn linear_constructions() {
    for &(q, t) in &[(5u32, 3u32), (7, 3)] {
        let g = furedi_k2t(&FurediParams::new(q, t).unwrap());
        let t = t as usize;
        let is = linear_via_independent_set(&g, t).unwrap();
        assert!(is.hypergraph.is_linear());
        assert!(is_berge_free(&is.hypergraph, &[k2(t)]));
        let rep = &is.report;
        assert_eq!(rep.selected, is.hypergraph.edge_count());
        assert!(Rational64::from_integer(rep.selected as i64) >= rep.greedy_guarantee);

        let mm = linear_via_matching(&g, t, 1.0).unwrap();
        assert!(mm.hypergraph.is_linear());
        assert!(is_berge_free(&mm.hypergraph, &[k2(t)]));
        assert_eq!(mm.report.kept, mm.hypergraph.edge_count());
    }
    // an edge of K4 lies in two triangles, more than t - 1 = 1
    assert!(linear_via_matching(&Multigraph::complete(4), 2, 1.0).is_err());
}

#[test]
fn certificates_record_freeness() {
    let g = furedi_k2t(&FurediParams::new(5, 3).unwrap());
    let mut cert = ConstructionCertificate::new("furedi", g.n(), g.edge_count()).param("q", 5);
    assert!(!cert.freeness_checked);
    cert.certify_graph(&g, &[("K2,3".into(), k2(3))]).unwrap();
    assert_eq!(cert.free, Some(true));
    let mut bad = ConstructionCertificate::new("k4", 4, 6);
    bad.certify_graph(&Multigraph::complete(4), &[("C4".into(), k2(2))]).unwrap();
    assert_eq!(bad.free, Some(false));
}
