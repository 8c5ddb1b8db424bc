use std::time::Instant;
use treemaw::generators::gen_random_rooted;
use treemaw::determinize::determinize;
use treemaw::suffix_tree::{augment, build_suffix_tree_stats};

fn main() {
    for &n in &[1u32 << 17, 1 << 18, 1 << 19, 1 << 20] {
        let t = gen_random_rooted(n, 4, 42);
        let det = if t.is_deterministic() { t.clone() } else { determinize(&t) };
        let aug = augment(&det).unwrap();
        let t0 = Instant::now();
        let (st, stats) = build_suffix_tree_stats(aug);
        let dt = t0.elapsed();
        println!("n={n}: st={dt:?} nodes={} climb/ins={:.2} rematch/ins={:.2} inline_hit={:.2} overflow_hit={:.2} nolink={:.2}",
            st.node_count(),
            stats.climb_steps as f64 / n as f64,
            stats.rematched as f64 / n as f64,
            stats.inline_hits as f64 / n as f64,
            stats.overflow_hits as f64 / n as f64,
            stats.no_link as f64 / n as f64);
    }
}
