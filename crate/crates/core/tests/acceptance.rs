//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::HashSet;
use std::time::Instant;

use serde_json::Value;

use twolocal::cli::{self, EXIT_OK};
use twolocal::decomp::diagram::decompose_with;
use twolocal::decomp::model::{ambient_normalizer, Carrier};
use twolocal::decomp::verify_hypotheses;
use twolocal::fingroup::library::{check_quaternion_presentation, find_quaternion_presentation, symmetric};
use twolocal::fingroup::{is_isomorphic, FiniteGroup, GroupElement};
use twolocal::fusion::{aut_f, bullet, expected_centric_radicals, FusionContext};
use twolocal::oracle::{run_oracles, Status};
use twolocal::quat::{
    binary_octahedral_generators, finite_closure, s_to_quaternion, CycQuaternion, ProjQuaternion, SElement,
};
use twolocal::storal::{enumerate_subgroup_classes, s_normalizer, Ambient, SSubgroup, TorusLevel};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_json(args: &[&str]) -> Result<Value, String> {
    let mut full = vec!["twolocal"];
    full.extend_from_slice(args);
    let out = cli::run(full);
    ensure(out.code == EXIT_OK, || format!("{args:?} exited {}: {}", out.code, out.stderr.trim()))?;
    serde_json::from_str(&out.stdout).map_err(|e| format!("{args:?}: bad json: {e}"))
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
        .unwrap_or_default()
}

fn classify_rows(ambient: &str, level: u32) -> Result<Value, String> {
    run_json(&["classify", "--ambient", ambient, "--level", &level.to_string(), "--format", "json"])
}

fn c1_su2_classification() -> Outcome {
    for level in 3..=6 {
        let r = classify_rows("su2", level)?;
        let found = strings(&r["centric_radical"]);
        ensure(found == ["Q8", "S"], || format!("level {level}: centric-radical {found:?}"))?;
    }
    Ok("{Q8, S} at levels 3-6".into())
}

fn c2_so3_classification() -> Outcome {
    for level in 3..=6 {
        let r = classify_rows("so3", level)?;
        let found = strings(&r["centric_radical"]);
        ensure(found == ["V", "Sbar"], || format!("level {level}: centric-radical {found:?}"))?;
        let rows = r["classes"].as_array().ok_or("no rows")?;
        let d8 = rows
            .iter()
            .find(|row| row["name"] == "D8")
            .ok_or_else(|| format!("level {level}: dihedral group of order 8 missing"))?;
        ensure(d8["is_radical"] == false && d8["out_f_order"] == 2, || {
            format!("level {level}: D8 row {d8}")
        })?;
    }
    Ok("{V, Sbar} at levels 3-6; D8 non-radical with |OutF| = 2".into())
}

fn c3_automorphisms() -> Outcome {
    let q8 = SSubgroup::finite_ext(Ambient::Su2, 2);
    let aut = aut_f(&FusionContext::new(Ambient::Su2, 3), &q8).map_err(|e| e.to_string())?;
    ensure(aut.aut_order == Some(24), || format!("|AutF(Q8)| = {:?}", aut.aut_order))?;
    let s3 = symmetric(3);
    let witness = is_isomorphic(&aut.out, &s3).ok_or("OutF(Q8) is not Sym(3)")?;
    ensure(witness.is_homomorphism(&aut.out, &s3) && witness.is_injective(), || {
        "witness is not an isomorphism".into()
    })?;
    let v = SSubgroup::finite_ext(Ambient::So3, 1);
    let aut_v = aut_f(&FusionContext::new(Ambient::So3, 3), &v).map_err(|e| e.to_string())?;
    ensure(aut_v.aut_order == Some(6), || format!("|AutF(V)| = {:?}", aut_v.aut_order))?;
    Ok(format!("|AutF(Q8)| = 24, OutF(Q8) = Sym(3) via {:?}, |AutF(V)| = 6", witness.images))
}

fn c4_normalizers() -> Outcome {
    let q8 = SSubgroup::finite_ext(Ambient::Su2, 2);
    let n = s_normalizer(&q8).materialize::<SElement>().map_err(|e| e.to_string())?;
    ensure(n.order() == 16, || format!("|N_S(Q8)| = {}", n.order()))?;
    let (a, b) = find_quaternion_presentation(&n).ok_or("no Q16 presentation")?;
    check_quaternion_presentation(&n, a, b)?;
    let id = n.identity();
    ensure(
        n.pow(a, 8) == id && n.pow(a, 4) == n.pow(b, 2) && n.mul(n.inv(b), n.mul(a, b)) == n.inv(a),
        || "relations fail".into(),
    )?;

    let closure = finite_closure(&binary_octahedral_generators(), 1000).map_err(|e| e.to_string())?;
    ensure(closure.order() == 48, || format!("closure has order {}", closure.order()))?;
    let q_elems: Vec<CycQuaternion> = q8
        .materialize::<SElement>()
        .map_err(|e| e.to_string())?
        .elements()
        .iter()
        .map(|&x| s_to_quaternion(x, 4))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let q_set: HashSet<_> = q_elems.iter().cloned().collect();
    let normalizes = closure
        .elements()
        .iter()
        .all(|c| q_elems.iter().all(|x| q_set.contains(&c.op(x).op(&c.inv()))));
    ensure(normalizes, || "closure does not normalize Q8".into())?;
    let q_group = FiniteGroup::from_elements(q_elems).map_err(|e| e.to_string())?;
    let computed = ambient_normalizer(&q_group).map_err(|e| e.to_string())?;
    let computed: HashSet<_> = computed.into_iter().collect();
    let closure_set: HashSet<_> = closure.elements().iter().cloned().collect();
    ensure(computed == closure_set, || {
        format!("computed N(Q8) has {} elements, closure {}", computed.len(), closure_set.len())
    })?;
    Ok("N_S(Q8) = Q16 with witness; closure of {Q, omega, tau} = N(Q8), order 48".into())
}

fn c5_bullet() -> Outcome {
    let mut checked = 0;
    for ambient in [Ambient::Su2, Ambient::So3] {
        let classes = enumerate_subgroup_classes(ambient, 6);
        for p in &classes {
            ensure(bullet(&bullet(p)) == bullet(p), || format!("bullet not idempotent on {p}"))?;
            for q in &classes {
                if p.is_subgroup_of(q) {
                    ensure(bullet(p).is_subgroup_of(&bullet(q)), || format!("bullet not monotone on {p} <= {q}"))?;
                }
                checked += 1;
            }
        }
    }
    let t = SSubgroup::torus(Ambient::Su2, TorusLevel::Infinite);
    let z8 = SSubgroup::finite_torus(Ambient::Su2, 3);
    for p in enumerate_subgroup_classes(Ambient::Su2, 6) {
        if z8.is_subgroup_of(&p.torus_part()) {
            ensure(t.is_subgroup_of(&bullet(&p)), || format!("T not in bullet of {p}"))?;
        }
    }
    for p in [SSubgroup::finite_ext(Ambient::Su2, 2), SSubgroup::finite_ext(Ambient::Su2, 1)] {
        ensure(bullet(&p) == p, || format!("{p} is not a bullet fixed point"))?;
    }
    Ok(format!("{checked} pairs; Q8 and <i> fixed"))
}

fn c6_hypotheses() -> Outcome {
    let mut n = 0;
    for ambient in [Ambient::Su2, Ambient::So3] {
        for level in 3..=5 {
            let ctx = FusionContext::new(ambient, level);
            for c in verify_hypotheses(&ctx, &expected_centric_radicals(ambient)) {
                ensure(c.pass(), || format!("{ambient} level {level}: {c:?}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("C(P) = Z(P) finite 2-group in {n} checks"))
}

fn chain_data<E: Carrier>(ambient: Ambient, small: usize) -> Outcome {
    for level in 3..=5 {
        let d = decompose_with::<E>(&FusionContext::new(ambient, level)).map_err(|e| e.to_string())?;
        let mut orders: Vec<usize> = d.subdivision.classes.iter().map(|c| c.aut_order).collect();
        orders.sort_unstable();
        let mut want = vec![small, small / 3, 1 << (level + 1)];
        want.sort_unstable();
        ensure(orders == want, || format!("{ambient} level {level}: chain orders {orders:?}"))?;
        if level <= 4 {
            let cat = &d.subdivision.category;
            for x in 0..cat.object_count() {
                for y in 0..cat.object_count() {
                    if cat.hom(x, y).is_empty() {
                        continue;
                    }
                    let t = cat.torsor(x, y);
                    let aut = cat.hom(y, y).len();
                    ensure(t.is_torsor() && t.count == aut, || {
                        format!("{ambient} level {level}: Hom({x}, {y}) {t:?} vs |Aut| {aut}")
                    })?;
                }
            }
        }
    }
    Ok(String::new())
}

fn c7_subdivision() -> Outcome {
    chain_data::<CycQuaternion>(Ambient::Su2, 48)?;
    chain_data::<ProjQuaternion>(Ambient::So3, 24)?;
    Ok("chain classes (48, 16, 2^(n+1)) and (24, 8, 2^(n+1)) at levels 3-5; torsors at 3-4".into())
}

fn c8_grothendieck() -> Outcome {
    let mut homs = 0;
    for ambient in [Ambient::Su2, Ambient::So3] {
        for level in [3, 4] {
            let ctx = FusionContext::new(ambient, level);
            let w = match ambient {
                Ambient::Su2 => decompose_with::<CycQuaternion>(&ctx).map(|d| d.diagram.grothendieck),
                Ambient::So3 => decompose_with::<ProjQuaternion>(&ctx).map(|d| d.diagram.grothendieck),
            }
            .map_err(|e| e.to_string())?;
            ensure(w.pass(), || format!("{ambient} level {level}: {w:?}"))?;
            homs += w.hom_counts.len();
        }
    }
    Ok(format!("bijective on objects and {homs} hom-sets"))
}

fn c9_diagrams() -> Outcome {
    for (ambient, small, chain) in [("su2", 48, 16), ("so3", 24, 8)] {
        for level in 3..=5u32 {
            let args = ["decompose", "--ambient", ambient, "--level", &level.to_string(), "--format", "json"];
            let d = run_json(&args)?;
            let mut orders: Vec<u64> = d["nodes"]
                .as_array()
                .ok_or("no nodes")?
                .iter()
                .filter_map(|n| n["group"]["order"].as_u64())
                .collect();
            orders.sort_unstable();
            let mut want = vec![chain, small, 1 << (level + 1)];
            want.sort_unstable();
            ensure(orders == want, || format!("{ambient} level {level}: orders {orders:?}"))?;
            let edges = d["edges"].as_array().ok_or("no edges")?;
            ensure(
                edges.len() == 2
                    && edges.iter().all(|e| {
                        e["witness"]["contained"] == true && e["witness"]["injective_inclusion"] == true
                    }),
                || format!("{ambient} level {level}: edges {edges:?}"),
            )?;
            if level == 4 {
                let again = run_json(&args)?;
                ensure(d == again, || "output differs between runs".into())?;
                let a = cli::run(["twolocal", "decompose", "--ambient", ambient, "--level", "4", "--format", "dot"]);
                let b = cli::run(["twolocal", "decompose", "--ambient", ambient, "--level", "4", "--format", "dot"]);
                ensure(a.stdout == b.stdout, || "dot output differs between runs".into())?;
            }
        }
    }
    Ok("node orders {16, 2^(n+1), 48} and {8, 2^(n+1), 24}; byte-stable".into())
}

fn c10_oracles() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for ambient in [Ambient::Su2, Ambient::So3] {
        for level in 1..=4 {
            let r = run_oracles(&FusionContext::new(ambient, level));
            ensure(r.all_pass(), || r.to_text())?;
            if level >= 3 {
                ensure(r.suites.iter().all(|s| s.status == Status::Pass), || r.to_text())?;
            }
            checks += r.suites.iter().map(|s| s.checked).sum::<usize>();
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{checks} comparisons for n <= 4 in {secs:.2}s"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("SU(2) centric-radical classification", c1_su2_classification),
        ("SO(3) centric-radical classification", c2_so3_classification),
        ("automorphism data", c3_automorphisms),
        ("normalizers", c4_normalizers),
        ("bullet functor", c5_bullet),
        ("transporter hypotheses", c6_hypotheses),
        ("subdivision skeleton", c7_subdivision),
        ("Grothendieck witness", c8_grothendieck),
        ("final diagrams", c9_diagrams),
        ("oracle equivalence", c10_oracles),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.2}s): {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
