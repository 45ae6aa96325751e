use super::IntPartition;

/// Littlewood–Richardson coefficient `c_{λ,μ}^ν`.
///
/// Counts semistandard fillings of the skew shape `ν/λ` with content `μ`
/// whose reverse reading word (rows top to bottom, each read right to left)
/// is a lattice word.
pub fn lr_coefficient(lambda: &IntPartition, mu: &IntPartition, nu: &IntPartition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    // Cells of ν/λ in reading order.
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; nu.len()];
    let mut counts = vec![0u32; mu.len() + 1];
    let mut total = 0;
    fill(0, &cells, lambda, mu, &mut grid, &mut counts, &mut total);
    total
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &IntPartition,
    mu: &IntPartition,
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    // Weakly increasing along rows: bounded by the already placed right neighbour.
    let right_in_skew = (c + 1) < grid[r].len() && (c + 1) as u32 >= lambda.part(r) && grid[r][c + 1] > 0;
    let upper = if right_in_skew { grid[r][c + 1] } else { mu.len() as u32 };
    // Strictly increasing down columns.
    let lower = if r > 0 && c as u32 >= lambda.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    for v in lower..=upper {
        let vi = v as usize;
        if counts[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        grid[r][c] = v;
        fill(idx + 1, cells, lambda, mu, grid, counts, total);
        grid[r][c] = 0;
        counts[vi] -= 1;
    }
}
