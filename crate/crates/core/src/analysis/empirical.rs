/// Plug-in estimate (bits) of the mutual information between two bit strings
/// given as aligned pairs. Returns 0 for an empty sample.
pub fn empirical_mutual_information(pairs: &[(u8, u8)]) -> f64 {
    if pairs.is_empty() {
        return 0.0;
    }
    let mut joint = [[0u64; 2]; 2];
    for &(a, b) in pairs {
        joint[(a & 1) as usize][(b & 1) as usize] += 1;
    }
    let n = pairs.len() as f64;
    let row = [joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]];
    let col = [joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]];
    let mut mi = 0.0;
    for a in 0..2 {
        for b in 0..2 {
            let c = joint[a][b];
            if c == 0 {
                continue;
            }
            let pab = c as f64 / n;
            let indep = (row[a] as f64 / n) * (col[b] as f64 / n);
            mi += pab * libm::log2(pab / indep);
        }
    }
    mi.max(0.0)
}
