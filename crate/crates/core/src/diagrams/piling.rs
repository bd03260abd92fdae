use super::{DiagramGroupoid, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Tile {
    Letter(bool),
    Blank,
}

/// Heap-of-pieces normal form of a word in a right-angled Artin group.
///
/// Each generator owns a column. Appending `x` stacks `x` on its own column
/// and a blank on every column of a generator not commuting with `x`; when the
/// top of column `x` already holds `x⁻¹` the two cancel and the blanks are
/// lifted instead. Two words are equal in the group iff their pilings match.
/// This is an independent check on [`DiagramGroupoid::reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Piling {
    columns: Vec<Vec<Tile>>,
}

impl Piling {
    pub fn new(dg: &DiagramGroupoid<'_>, letters: &[Letter]) -> Self {
        let m = dg.graph().edge_count();
        let blockers: Vec<Vec<usize>> = (0..m)
            .map(|e| (0..m).filter(|&f| f != e && !dg.commute(Letter::forward(e), Letter::forward(f))).collect())
            .collect();
        let mut columns = vec![Vec::new(); m];
        for &l in letters {
            let cancels = columns[l.edge].last() == Some(&Tile::Letter(!l.inverse));
            if cancels {
                columns[l.edge].pop();
                for &f in &blockers[l.edge] {
                    let top = columns[f].pop();
                    debug_assert_eq!(top, Some(Tile::Blank));
                }
            } else {
                columns[l.edge].push(Tile::Letter(l.inverse));
                for &f in &blockers[l.edge] {
                    columns[f].push(Tile::Blank);
                }
            }
        }
        Piling { columns }
    }

    /// Number of letter tiles, i.e. the length of a reduced word.
    pub fn len(&self) -> usize {
        self.columns.iter().flatten().filter(|t| matches!(t, Tile::Letter(_))).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
