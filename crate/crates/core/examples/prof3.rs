use std::time::Instant;
use treemaw::generators::gen_random_rooted;
use treemaw::{RootedMaws};
use treemaw::maw_rooted::{build_induced, emit_for_letter};

fn main() {
    for &n in &[1u32 << 19, 1 << 20] {
        let t = gen_random_rooted(n, 4, 42);
        let maws = RootedMaws::build(&t);
        let (st, lca, lists) = (maws.suffix_tree(), treemaw::preprocess_lca(maws.suffix_tree()), maws.letter_lists());
        let mut t_ind = std::time::Duration::ZERO;
        let mut t_emit = std::time::Duration::ZERO;
        let mut total = 0u64;
        for a in maws.determinized().alphabet().letters() {
            let l = lists.list(a);
            if l.is_empty() { continue; }
            let t0 = Instant::now();
            let ind = build_induced(st, &lca, l);
            let t1 = Instant::now();
            total += emit_for_letter(st, &ind, a, &mut |_| {});
            t_emit += t1.elapsed();
            t_ind += t1 - t0;
        }
        println!("n={n}: induced={t_ind:?} emit={t_emit:?} maws={total}");
    }
}
