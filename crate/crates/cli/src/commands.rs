//! The four subcommands, each producing a [`ReportDocument`].

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use cosetlab_core::cosetposet::DEFAULT_POSET_CAP;
use cosetlab_core::typea::{self, bessel_dims, descent_pair_count, Basis};
use cosetlab_core::typea::counting::{bessel_log_relation_holds, MAX_PAIR_COUNT_SIZE};
use cosetlab_core::typea::symfunc::MAX_DEGREE;
use cosetlab_core::{
    choose_rho, BurnsideRing, CosetPoset, Error, Group, GroupSymbol, IntersectionLattice, PositiveComplex, Rays, RhoMode,
    Side,
};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::{burnside_value, int_value, rational_value, symfunc_value, ReportDocument};

/// Largest chain enumeration attempted by the Betti-number check.
pub const VERIFY_CHAIN_CAP: u128 = 300_000;
/// Largest `n` for which `series` reports `xi_n` itself.
pub const SERIES_SYMFUNC_MAX: usize = 8;
/// Largest `n` for which `series` rebuilds `xi_n` from the group.
pub const SERIES_GROUP_MAX: usize = 6;
pub const SERIES_MAX_ORDER: usize = 12;

pub fn load_group(cfg: &RunConfig) -> CliResult<Group> {
    let symbol: GroupSymbol = cfg.require_group()?.parse()?;
    Ok(Group::with_cap(symbol, cfg.cap)?)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn mode_name(mode: &RhoMode) -> String {
    match mode {
        RhoMode::SeededRandom(s) => format!("seed {s}"),
        RhoMode::Spread => "prop75".into(),
        RhoMode::User(_) => "user".into(),
    }
}

pub fn cmd_xi(cfg: &RunConfig) -> CliResult<ReportDocument> {
    let g = load_group(cfg)?;
    let l = IntersectionLattice::new(&g);
    let ring = BurnsideRing::new(&g, &l);
    let xi = ring.xi();
    let twisted = ring.tensor_sign(&xi);
    let mu = l.mobius_to_top(l.bottom());
    let mut doc = ReportDocument::new(cfg.to_json());
    doc.push("group", "text", json!(g.symbol().to_string()));
    doc.push("order", "scalar", json!(g.order()));
    doc.push("lattice_mobius", "scalar", json!(mu));
    doc.push("xi", "burnside", burnside_value(&g, &xi));
    doc.push("xi_tensor_sign", "burnside", burnside_value(&g, &twisted));
    doc.push("dimension", "scalar", int_value(&ring.dimension(&xi)));
    let sum: BigInt = twisted.terms().map(|(_, c)| c.clone()).sum();
    doc.push("tensor_sign_coefficient_sum", "scalar", int_value(&sum));
    doc.push("trivial_multiplicity", "scalar", int_value(&ring.trivial_multiplicity(&xi)));
    doc.push("sign_multiplicity", "scalar", int_value(&ring.sign_multiplicity(&xi)));
    if g.symbol().is_type_a() && g.rank() < MAX_DEGREE {
        let h = typea::frobenius(&ring, &xi)?;
        for (name, basis) in [("frobenius_h", Basis::H), ("frobenius_e", Basis::E), ("frobenius_s", Basis::S)] {
            doc.push(name, "symfunc", symfunc_value(&h.to_basis(basis)?));
        }
    }
    Ok(doc)
}

/// A verification outcome: `Ok(detail)` passes, `Err(detail)` fails.
type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn record(doc: &mut ReportDocument, cfg: &RunConfig, name: &str, run: impl FnOnce() -> CliResult<Check>) -> CliResult<()> {
    if !cfg.check_enabled(name) {
        return Ok(());
    }
    let payload = match run() {
        Ok(Ok(detail)) => json!({"status": "pass", "detail": detail}),
        Ok(Err(detail)) => json!({"status": "fail", "detail": detail}),
        Err(CliError::Cap(reason)) => json!({"status": "skipped", "detail": reason}),
        Err(e) => return Err(e),
    };
    doc.push(name, "check", payload);
    Ok(())
}

pub const CHECKS: [&str; 13] = [
    "multiplicities",
    "tensor_sign",
    "lefschetz",
    "betti",
    "rank_selected",
    "h_vector",
    "facet_count",
    "colored_f",
    "shelling_certificate",
    "shelling_types",
    "ascents",
    "descents",
    "pseudomanifold",
];

pub fn cmd_verify(cfg: &RunConfig) -> CliResult<ReportDocument> {
    if let Some(unknown) = cfg.checks.iter().flatten().find(|c| !CHECKS.contains(&c.as_str())) {
        return Err(CliError::Usage(format!("unknown check `{unknown}` (known: {})", CHECKS.join(", "))));
    }
    let g = load_group(cfg)?;
    let n = g.rank();
    let l = IntersectionLattice::new(&g);
    let ring = BurnsideRing::new(&g, &l);
    let xi = ring.xi();
    let twisted = ring.tensor_sign(&xi);
    let mu = l.mobius_to_top(l.bottom());
    let classes = &g.conjugacy_classes().representatives;
    let mut doc = ReportDocument::new(cfg.to_json());
    doc.push("group", "text", json!(g.symbol().to_string()));
    doc.push("dimension", "scalar", int_value(&ring.dimension(&xi)));

    record(&mut doc, cfg, "multiplicities", || {
        let triv = ring.trivial_multiplicity(&xi);
        let sgn = ring.sign_multiplicity(&xi);
        let want = BigInt::from(sign(n) * mu);
        let cf = ring.class_function(&xi);
        let by_chars = cf.inner_product(&ring.sign_class_function(), &g);
        Ok(ensure(triv.is_zero() && sgn == want && by_chars == Some(want.clone()), || {
            format!("<xi,1> = {triv}, <xi,sign> = {sgn}, expected 0 and {want}")
        })
        .map(|_| format!("<xi,1> = 0, <xi,sign> = {want}")))
    })?;

    record(&mut doc, cfg, "tensor_sign", || {
        let sum: BigInt = twisted.terms().map(|(_, c)| c.clone()).sum();
        Ok((|| {
            ensure(twisted.is_nonnegative(), || "negative coefficient".into())?;
            ensure(sum == BigInt::from(mu.abs()), || format!("coefficient sum {sum}, |mu| = {}", mu.abs()))?;
            for &w in classes {
                let (a, b) = (ring.char_value(&twisted, w), ring.char_value(&xi, w) * g.sign(w));
                ensure(a == b, || format!("pointwise sign fails at {:?}", g.word(w)))?;
            }
            Ok(format!("nonnegative, coefficient sum {sum}"))
        })())
    })?;

    let poset_cap = cfg.cap.min(DEFAULT_POSET_CAP);
    let poset = CosetPoset::with_cap(&g, &l, poset_cap);
    let poset = || -> CliResult<&CosetPoset> { poset.as_ref().map_err(|e| CliError::Cap(e.to_string())) };

    record(&mut doc, cfg, "lefschetz", || {
        let p = poset()?;
        Ok((|| {
            for &w in classes {
                let lhs = ring.char_value(&xi, w);
                let rhs = BigInt::from(sign(n - 1) * p.lefschetz_character(w, None));
                ensure(lhs == rhs, || format!("class of {:?}: {lhs} vs {rhs}", g.word(w)))?;
            }
            Ok(format!("{} classes", classes.len()))
        })())
    })?;

    record(&mut doc, cfg, "betti", || {
        let p = poset()?;
        let betti = p.betti_numbers(VERIFY_CHAIN_CAP)?;
        let (top, lower) = betti.split_last().expect("rank is positive");
        let dim = ring.dimension(&xi);
        Ok(ensure(lower.iter().all(|&b| b == 0) && BigInt::from(*top) == dim, || format!("Betti numbers {betti:?}"))
            .map(|_| format!("{betti:?}")))
    })?;

    record(&mut doc, cfg, "rank_selected", || {
        let p = poset()?;
        Ok((|| {
            for mask in 1u32..1 << n {
                let ranks: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
                let b = ring.rank_selected_character(&ranks);
                let s = sign(ranks.len() - 1);
                for &w in classes {
                    let lhs = ring.char_value(&b, w);
                    let rhs = BigInt::from(s * p.lefschetz_character(w, Some(&ranks)));
                    ensure(lhs == rhs, || format!("R = {ranks:?}: {lhs} vs {rhs}"))?;
                }
                ensure(ring.dimension(&b) == BigInt::from(p.flag_h(&ranks)), || format!("R = {ranks:?}: flag h"))?;
            }
            Ok(format!("{} rank sets", (1u32 << n) - 1))
        })())
    })?;

    if cfg.check_enabled("h_vector") {
        if let Ok(p) = poset() {
            let h: Vec<Value> = p.h_vector().iter().map(|x| json!(x.to_string())).collect();
            doc.push("h", "vector", Value::Array(h));
            doc.push("maximal_chains", "scalar", json!(p.count_maximal_chains().to_string()));
        }
    }
    record(&mut doc, cfg, "h_vector", || {
        let p = poset()?;
        let h = p.h_vector();
        Ok((|| {
            ensure(h[0] == 1, || "h_0 != 1".into())?;
            ensure(BigInt::from(h[n]) == ring.dimension(&xi), || format!("h_n = {}", h[n]))?;
            let total: i128 = h.iter().sum();
            ensure(total as u128 == p.count_maximal_chains(), || "sum of h differs from maximal chains".into())?;
            for (i, &hi) in h.iter().enumerate() {
                ensure(ring.dimension(&ring.equivariant_h(i)) == BigInt::from(hi), || format!("h_{i}"))?;
            }
            Ok(format!("{h:?}"))
        })())
    })?;

    let rays = Rays::new(&g);
    let mut complexes = Vec::new();
    for mode in cfg.rho_modes() {
        let rho = choose_rho(&g, &rays, &mode)?;
        doc.push(
            &format!("rho[{}]", mode_name(&mode)),
            "vector",
            Value::Array(rho.coefficients.iter().map(rational_value).collect()),
        );
        complexes.push((mode_name(&mode), PositiveComplex::new(&g, &l, &rays, rho)));
    }
    let each = |f: &dyn Fn(&PositiveComplex) -> Result<(), String>| -> CliResult<Check> {
        for (name, c) in &complexes {
            if let Err(e) = f(c) {
                return Ok(Err(format!("{name}: {e}")));
            }
        }
        Ok(Ok(format!("{} vector(s)", complexes.len())))
    };
    record(&mut doc, cfg, "facet_count", || {
        each(&|c| ensure(c.facets().len() as i64 == mu.abs(), || format!("{} facets, |mu| = {}", c.facets().len(), mu.abs())))
    })?;
    record(&mut doc, cfg, "colored_f", || each(&|c| ensure(c.colored_f_character() == xi, || "differs from xi".into())))?;
    record(&mut doc, cfg, "shelling_certificate", || {
        each(&|c| c.shelling_order().map(|_| ()).map_err(|e| e.to_string()))
    })?;
    record(&mut doc, cfg, "shelling_types", || {
        each(&|c| {
            let sh = c.shelling_order().map_err(|e| e.to_string())?;
            ensure(c.shelling_character(&sh) == twisted, || "differs from xi ⊗ sign".into())
        })
    })?;
    record(&mut doc, cfg, "ascents", || {
        each(&|c| ensure(c.theorem4_character(&ring, Side::Positive) == twisted, || "differs from xi ⊗ sign".into()))
    })?;
    record(&mut doc, cfg, "descents", || {
        each(&|c| ensure(c.theorem4_character(&ring, Side::Negative) == twisted, || "differs from xi ⊗ sign".into()))
    })?;
    record(&mut doc, cfg, "pseudomanifold", || {
        each(&|c| ensure(c.is_pseudomanifold() && c.is_gallery_connected(), || "not a connected pseudomanifold".into()))
    })?;
    for (name, c) in &complexes {
        doc.push(&format!("facets[{name}]"), "scalar", json!(c.facets().len()));
    }
    Ok(doc)
}

pub fn cmd_series(cfg: &RunConfig) -> CliResult<ReportDocument> {
    let order = cfg.order;
    if order == 0 {
        return Err(CliError::Usage("series order must be at least 1".into()));
    }
    if order > SERIES_MAX_ORDER {
        return Err(CliError::Cap(format!("series order {order} exceeds the cap {SERIES_MAX_ORDER}")));
    }
    let (d, dp) = bessel_dims(order)?;
    let mut doc = ReportDocument::new(cfg.to_json());
    doc.push("D", "vector", Value::Array(d.iter().map(int_value).collect()));
    doc.push("D_prime", "vector", Value::Array(dp.iter().map(int_value).collect()));
    let sym_order = order.min(SERIES_SYMFUNC_MAX);
    let xis = typea::xi_series(sym_order)?;
    for (k, f) in xis.iter().enumerate() {
        doc.push(&format!("xi_{}", k + 1), "symfunc", symfunc_value(f));
    }
    record(&mut doc, cfg, "bessel_log", || {
        Ok(ensure(bessel_log_relation_holds(&d, &dp), || "log relation fails".into()).map(|_| format!("order {order}")))
    })?;
    record(&mut doc, cfg, "descent_pairs", || {
        let top = order.min(MAX_PAIR_COUNT_SIZE);
        Ok((|| {
            for n in 1..=top {
                let r = descent_pair_count(n, true).map_err(|e| e.to_string())?;
                let u = descent_pair_count(n, false).map_err(|e| e.to_string())?;
                ensure(r == d[n - 1] && u == dp[n], || format!("n = {n}: {r}, {u}"))?;
            }
            Ok(format!("n <= {top}"))
        })())
    })?;
    record(&mut doc, cfg, "xi_dimensions", || {
        Ok((|| {
            for (k, f) in xis.iter().enumerate() {
                let dim = f.dimension().map_err(|e| e.to_string())?;
                ensure(dim.is_integer() && dim.to_integer() == d[k], || format!("n = {}: dim {dim}", k + 1))?;
            }
            Ok(format!("n <= {sym_order}"))
        })())
    })?;
    record(&mut doc, cfg, "group_xi", || {
        let top = order.min(SERIES_GROUP_MAX);
        Ok((|| {
            for n in 2..=top {
                let g = Group::new(GroupSymbol::new(cosetlab_core::Family::A, n - 1).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let l = IntersectionLattice::new(&g);
                let ring = BurnsideRing::new(&g, &l);
                let f = typea::frobenius(&ring, &ring.xi()).map_err(|e: Error| e.to_string())?;
                ensure(f == xis[n - 1], || format!("n = {n}"))?;
            }
            Ok(format!("2 <= n <= {top}"))
        })())
    })?;
    Ok(doc)
}
