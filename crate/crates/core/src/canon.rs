//! Isomorphism-canonical codes for free trees.
//!
//! The tree is rooted at its center and every vertex is encoded as `(`,
//! followed by the sorted codes of its children, followed by `)`. For
//! bicentral trees the smaller of the two center-rooted codes wins.

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedView};

/// Equal codes iff the trees are isomorphic.
pub fn canonical_code(tree: &Graph) -> Result<Vec<u8>> {
    encode(tree, None)
}

/// Like [`canonical_code`], but each vertex also carries a colour byte, so
/// equal codes mean a colour-preserving isomorphism exists.
pub fn canonical_code_colored(tree: &Graph, colors: &[u8]) -> Result<Vec<u8>> {
    assert_eq!(colors.len(), tree.order());
    encode(tree, Some(colors))
}

fn encode(tree: &Graph, colors: Option<&[u8]>) -> Result<Vec<u8>> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c, colors))
        .min()
        .ok_or(Error::NotATree)
}

/// The one or two vertices of minimum eccentricity.
pub fn centers(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(tree: &Graph, root: usize, colors: Option<&[u8]>) -> Vec<u8> {
    let view = RootedView::new(tree, root).expect("caller checked tree");
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); tree.order()];
    for &v in view.top_down().iter().rev() {
        let mut kids: Vec<Vec<u8>> = view
            .children(v)
            .iter()
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        if let Some(colors) = colors {
            code.push(colors[v]);
        }
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_path_has_same_code() {
        let a = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edge_list(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&p4).unwrap(), canonical_code(&k13).unwrap());
    }

    #[test]
    fn centers_of_paths() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(centers(&p4), vec![1, 2]);
        let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(centers(&p5), vec![2]);
    }

    #[test]
    fn colours_distinguish() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let end = canonical_code_colored(&p3, &[1, 0, 0]).unwrap();
        let other_end = canonical_code_colored(&p3, &[0, 0, 1]).unwrap();
        let mid = canonical_code_colored(&p3, &[0, 1, 0]).unwrap();
        assert_eq!(end, other_end);
        assert_ne!(end, mid);
    }

    #[test]
    fn rejects_non_trees() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(canonical_code(&k3), Err(Error::NotATree)));
    }
}
