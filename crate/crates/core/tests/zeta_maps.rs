use stardom_core::chains::{source_sequence, verify_segmental, Level};
use stardom_core::digraph::{classify_vertex_map, MapKind};
use stardom_core::families::{embedded_copy, star_digraph, MapOrientation};
use stardom_core::perm::{zeta_embed, PermWord};

fn w(s: &str) -> PermWord {
    s.parse().unwrap()
}

/// `(j, i, lead, body)` for every row of the partition table of `ST_4^0`.
const TABLE: [(usize, usize, &str, &str); 12] = [
    (4, 1, "<=", "(20341 < 03241 > 40231 < 02431 > 30421 < 04321 >)"),
    (4, 2, ">=", "(01342 > 30142 < 04132 > 10432 < 03412 > 40312 <)"),
    (4, 3, "<=", "(10243 < 02143 > 40123 < 01423 > 20413 < 04213 >)"),
    (4, 4, ">=", "(01234 > 20134 < 03124 > 10324 < 02314 > 30214 <)"),
    (3, 1, ">=", "(02314 > 30214 < 04213 > 20413 < 03412 > 40312 <)"),
    (3, 2, "<=", "(10324 < 03124 > 40123 < 01423 > 30421 < 04321 >)"),
    (3, 3, ">=", "(01234 > 20134 < 04132 > 10432 < 02431 > 40231 <)"),
    (3, 4, "<=", "(10243 < 02143 > 30142 < 01342 > 20341 < 03241 >)"),
    (2, 1, "<=", "(20134 < 03124 > 40123 < 02143 > 30142 < 04132 >)"),
    (2, 2, ">=", "(01234 > 30214 < 04213 > 10243 < 03241 > 40231 <)"),
    (2, 3, "<=", "(10324 < 02314 > 40312 < 01342 > 20341 < 04321 >)"),
    (2, 4, ">=", "(01423 > 20413 < 03412 > 10432 < 02431 > 30421 <)"),
];

#[test]
fn partition_table_reproduces_row_for_row() {
    let seg = verify_segmental(&Level::new(4).unwrap()).unwrap();
    assert!(seg.holds);
    let rows: Vec<String> = seg.partitions.iter().flat_map(|p| p.rows.iter().map(|r| r.display(4))).collect();
    let expected: Vec<String> = TABLE
        .iter()
        .map(|(j, i, lead, body)| format!("zeta_4^{{{i},{j}}}(ST_3^0) {lead} {body}"))
        .collect();
    assert_eq!(rows, expected);
    let words: usize = seg.partitions.iter().flat_map(|p| &p.rows).map(|r| r.words.len()).sum();
    assert_eq!(words, 72);
}

#[test]
fn table_leads_match_map_classification() {
    let small = star_digraph(4).unwrap();
    let host = star_digraph(5).unwrap();
    for (j, i, lead, _) in TABLE {
        let copy = embedded_copy(4, i, j).unwrap();
        let kind = classify_vertex_map(&small, &host, &copy.map).kind;
        let expected = if lead == ">=" { MapKind::PlusMap } else { MapKind::MinusMap };
        assert_eq!(kind, expected, "zeta_4^{{{i},{j}}}");
    }
}

#[test]
fn source_six_cycle_dag() {
    let s = source_sequence(&star_digraph(4).unwrap()).unwrap();
    assert_eq!(s.display(), "(0123 > 2013 < 0312 > 1032 < 0231 > 3021 <)");
}

#[test]
fn worked_examples() {
    let all3 = PermWord::all(3).unwrap();
    for x in all3.iter().filter(|x| x.is_even()) {
        let [a, b, c] = [x.as_slice()[0], x.as_slice()[1], x.as_slice()[2]];
        assert_eq!(zeta_embed(x, 3, 3).unwrap().as_slice(), &[a, b, c, 3]);
        assert_eq!(zeta_embed(x, 3, 2).unwrap().as_slice(), &[b, a, 3, c]);
    }
    for x in PermWord::all(4).unwrap().iter().filter(|x| x.is_even()) {
        let s = x.as_slice();
        assert_eq!(zeta_embed(x, 4, 4).unwrap().as_slice(), &[s[0], s[1], s[2], s[3], 4]);
        assert_eq!(zeta_embed(x, 4, 3).unwrap().as_slice(), &[s[1], s[0], s[2], 4, s[3]]);
        assert_eq!(zeta_embed(x, 4, 2).unwrap().as_slice(), &[s[0], s[1], 4, s[2], s[3]]);
    }
    let cases = [(3, 3, MapOrientation::Plus), (3, 2, MapOrientation::Minus)];
    for (i, j, o) in cases {
        assert_eq!(embedded_copy(3, i, j).unwrap().orientation_class, o);
    }
    let cases = [(4, 4, MapOrientation::Plus), (4, 3, MapOrientation::Minus), (4, 2, MapOrientation::Plus)];
    for (i, j, o) in cases {
        assert_eq!(embedded_copy(4, i, j).unwrap().orientation_class, o);
    }
    assert_eq!(zeta_embed(&w("0123"), 1, 4).unwrap(), w("20341"));
}

#[test]
fn degree_two_maps() {
    assert_eq!(zeta_embed(&w("01"), 0, 2).unwrap(), w("120"));
    assert_eq!(zeta_embed(&w("01"), 1, 2).unwrap(), w("201"));
    assert_eq!(zeta_embed(&w("01"), 2, 2).unwrap(), w("012"));
    // ST_2 has no arcs, so only the parity class distinguishes these maps
    assert_eq!(embedded_copy(2, 1, 2).unwrap().orientation_class, MapOrientation::Minus);
    assert_eq!(embedded_copy(2, 2, 2).unwrap().orientation_class, MapOrientation::Plus);
    assert_eq!(embedded_copy(2, 0, 2).unwrap().orientation_class, MapOrientation::Plus);
}

#[test]
fn identity_map_is_inclusive_plus() {
    let g = star_digraph(5).unwrap();
    let id: Vec<usize> = (0..g.vertex_count()).collect();
    let c = classify_vertex_map(&g, &g, &id);
    assert_eq!(c.kind, MapKind::PlusMap);
    assert!(c.injective && c.inclusive);
}

#[test]
fn zeta_parity_and_injectivity_exhaustive() {
    for n in 2..=5 {
        let evens: Vec<PermWord> = PermWord::all(n).unwrap().into_iter().filter(PermWord::is_even).collect();
        let mut images = std::collections::BTreeSet::new();
        for i in 0..=n {
            for j in 2..=n {
                let mut img: Vec<PermWord> = evens.iter().map(|x| zeta_embed(x, i, j).unwrap()).collect();
                assert!(img.iter().all(PermWord::is_even));
                img.sort();
                img.dedup();
                assert_eq!(img.len(), evens.len());
                assert!(images.insert(img), "n={n} i={i} j={j} repeats an image");
            }
        }
        assert_eq!(images.len(), n * n - 1);
    }
}
