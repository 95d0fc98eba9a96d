pub type Cell = (i32, i32);

/// Unit cells inside the polygon by a vertical-edge crossing count.
pub fn cells_inside(pts: &[(i32, i32)]) -> Vec<Cell> {
    let min_x = pts.iter().map(|p| p.0).min().unwrap();
    let max_x = pts.iter().map(|p| p.0).max().unwrap();
    let min_y = pts.iter().map(|p| p.1).min().unwrap();
    let max_y = pts.iter().map(|p| p.1).max().unwrap();
    let mut cells = Vec::new();
    for cx in min_x..max_x {
        for cy in min_y..max_y {
            let mut crossings = 0;
            for i in 0..pts.len() {
                let (a, b) = (pts[i], pts[(i + 1) % pts.len()]);
                if a.0 == b.0 && a.0 > cx && a.1.min(b.1) <= cy && cy < a.1.max(b.1) {
                    crossings += 1;
                }
            }
            if crossings % 2 == 1 {
                cells.push((cx, cy));
            }
        }
    }
    cells
}
