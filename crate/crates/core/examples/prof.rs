use std::time::Instant;
use treemaw::generators::gen_random_rooted;
use treemaw::determinize::determinize;
use treemaw::suffix_tree::{augment, build_suffix_tree, preprocess_lca};
use treemaw::maw_rooted::{build_letter_lists, build_induced, emit_for_letter};

fn main() {
    for &n in &[1u32 << 18, 1 << 19, 1 << 20] {
        let t = gen_random_rooted(n, 4, 42);
        let t0 = Instant::now();
        let det = if t.is_deterministic() { t.clone() } else { determinize(&t) };
        let t1 = Instant::now();
        let aug = augment(&det).unwrap();
        let t2 = Instant::now();
        let st = build_suffix_tree(aug);
        let t3 = Instant::now();
        let lca = preprocess_lca(&st);
        let t4 = Instant::now();
        let lists = build_letter_lists(&det, &st);
        let t5 = Instant::now();
        let mut total = 0u64;
        for a in det.alphabet().letters() {
            let l = lists.list(a);
            if l.is_empty() { continue; }
            let ind = build_induced(&st, &lca, l);
            total += emit_for_letter(&st, &ind, a, &mut |_| {});
        }
        let t6 = Instant::now();
        println!("n={n}: det={:?} aug={:?} st={:?} lca={:?} lists={:?} emit={:?}  maws={total} st_nodes={}",
            t1-t0, t2-t1, t3-t2, t4-t3, t5-t4, t6-t5, st.node_count());
    }
}
