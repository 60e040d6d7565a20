use planar_rank_wasm::{count_embeddings, sample_embeddings, unrank_embedding};

const K4: &str = r#"{"vertices":[1,2,3,4],"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;

#[test]
fn count_k4() {
    assert_eq!(count_embeddings(K4).unwrap(), "8");
}

#[test]
fn unrank_every_rank() {
    let all: Vec<String> = (0..8).map(|r| unrank_embedding(K4, &r.to_string()).unwrap()).collect();
    let mut distinct = all.clone();
    distinct.sort();
    distinct.dedup();
    assert_eq!(distinct.len(), 8);
    assert!(unrank_embedding(K4, "8").unwrap_err().contains("out of range"));
    assert!(unrank_embedding(K4, "abc").is_err());
}

#[test]
fn samples_are_seeded() {
    let a = sample_embeddings(K4, "7", 20).unwrap();
    assert_eq!(a, sample_embeddings(K4, "7", 20).unwrap());
    assert_eq!(a.lines().count(), 20);
    assert!(sample_embeddings(K4, "-1", 1).is_err());
}

#[test]
fn bad_graphs_are_reported() {
    let k5 = r#"{"vertices":[1,2,3,4,5],"edges":[[1,2],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5],[3,4],[3,5],[4,5]]}"#;
    assert!(count_embeddings(k5).unwrap_err().contains("not planar"));
    assert!(count_embeddings("{").is_err());
}
