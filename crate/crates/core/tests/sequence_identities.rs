use superfrob::combinatorics::Symbol;
use superfrob::exactalg::MPoly;
use superfrob::sequences::{row_weight, z_monomial, ParitySequence};
use superfrob::superfunctions::q_t_a;
use superfrob::HookParams;

#[test]
fn single_row_expansion_gives_deformed_power_sums() {
    for ps in ["1|1", "2|1", "1|2", "0|2", "1|1,1|1", "1|0,0|1"] {
        let p: HookParams = ps.parse().unwrap();
        for t in 1..=4 {
            if (p.n_symbols() as u32).pow(t as u32) > 5000 {
                continue;
            }
            for a in 1..=p.m() {
                let mut lhs = MPoly::zero(&p);
                for w in ParitySequence::all(&p, t) {
                    let wt = row_weight(&p, w.symbols());
                    if wt.is_zero() {
                        continue;
                    }
                    let top = *w.symbols().iter().max().unwrap();
                    let qa = MPoly::big_q_pow(&p, p.color(top), a as u32);
                    lhs.add_assign_ref(&(&(&wt * &qa) * &z_monomial(&w)));
                }
                assert_eq!(lhs, q_t_a(t as u32, a, &p).unwrap(), "{ps}, t = {t}, a = {a}");
                assert_eq!(lhs.z_degree(), Some(t as i32));
            }
        }
    }
}

#[test]
fn row_weight_ignores_order_preserving_relabeling() {
    // 1|1 embeds into 3|2 by x1 -> x2, y1 -> y2 and into 1|1,2|2 by moving to colour 2
    let small: HookParams = "1|1".parse().unwrap();
    let targets: [(&str, [u16; 2]); 3] = [("3|2", [2, 5]), ("2|3", [1, 4]), ("1|1,2|2", [4, 6])];
    for (ps, map) in targets {
        let big: HookParams = ps.parse().unwrap();
        for t in 1..=4 {
            for w in ParitySequence::all(&small, t) {
                let image: Vec<Symbol> = w.symbols().iter().map(|s| Symbol(map[s.index()])).collect();
                let a = row_weight(&small, w.symbols()).to_string();
                let b = row_weight(&big, &image).to_string();
                assert_eq!(a, b, "{w} into {ps}");
            }
        }
    }
}
