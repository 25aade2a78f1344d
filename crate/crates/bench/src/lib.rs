//! Fixtures shared by the benches.

use webworld::enumeration::RepresentMatrix;
use webworld::WebDiagram;

/// The four-diagram path world seed.
pub fn falkirk() -> WebDiagram {
    WebDiagram::from_tuples(&[(1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 2, 1)], None).expect("valid")
}

/// The largest world with five edges on at most five pegs (216 diagrams).
pub fn widest_small_world() -> WebDiagram {
    RepresentMatrix::new(vec![vec![0, 2, 2], vec![0, 0, 1], vec![0, 0, 0]])
        .expect("strictly upper triangular")
        .seed_diagram()
}

/// `n` edges into one shared peg.
pub fn star(n: u32) -> WebDiagram {
    let tuples: Vec<_> = (1..=n).map(|i| (i, n + 1, 1, i)).collect();
    WebDiagram::from_tuples(&tuples, None).expect("valid")
}
