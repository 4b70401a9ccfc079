use crate::input::InputDocument;
use gsft_core::certificate::Certificate;
use gsft_core::constructions as cons;
use gsft_core::equivalence as eq;
use gsft_core::groups::{make_group, trivial_group, GroupRef, GroupSpec};
use gsft_core::intlinalg::{smith_normal_form, Primitivity};
use gsft_core::invariants as inv;
use gsft_core::oracle::{periodic_weights, skew_fixed_count, LabeledGraph};
use gsft_core::parse::{parse_matrix, parse_poly, render_matrix, to_const};
use gsft_core::polymat::{bar, bar_poly, tilde};
use gsft_core::ring::Ring;
use gsft_core::{Error, GRPoly, IntMatrix, MatGR, MatGRPoly, Matrix};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt::Display;

pub const COMMANDS: &[&str] = &[
    "traces",
    "kappa",
    "det",
    "zeta",
    "gprimitive",
    "weightgroup",
    "upower",
    "perronlimit",
    "nzc",
    "box",
    "diamond",
    "core",
    "verify-chain",
    "verify-sse",
    "verify-se",
    "forced-se",
    "amalg",
    "vf",
    "family-ckfk",
    "embed",
    "nk1-c4",
    "higman",
    "kl-pair",
    "oracle-periodic",
    "oracle-skew",
    "snf",
    "tilde",
    "bar",
];

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub budget: u64,
    pub tol: f64,
}

/// Invalid command, malformed input or a failed precondition; exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

/// The canonical part of a report. `checks` are self-verifications; any
/// `false` there makes the run a verification failure.
#[derive(Default)]
pub struct Outcome {
    pub result: Map<String, Value>,
    pub checks: BTreeMap<String, bool>,
}

impl Outcome {
    fn set(&mut self, k: &str, v: impl Into<Value>) -> &mut Self {
        self.result.insert(k.to_string(), v.into());
        self
    }

    fn check(&mut self, k: &str, ok: bool) -> &mut Self {
        self.checks.insert(k.to_string(), ok);
        self
    }

    fn cert(&mut self, c: &Certificate) -> Result<&mut Self, InputError> {
        let replay = c.verify()?;
        self.check("certificate_replays", replay.valid);
        self.result
            .insert("certificate".into(), serde_json::to_value(c)?);
        Ok(self)
    }

    pub fn verified(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn canonical(&self) -> Value {
        let mut m = self.result.clone();
        m.insert("checks".into(), json!(self.checks));
        Value::Object(m)
    }
}

fn mat<R: Ring + Display>(m: &Matrix<R>) -> Value {
    Value::String(render_matrix(m))
}

fn strs<T: Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn names(g: &GroupRef, elems: &[usize]) -> Value {
    Value::Array(elems.iter().map(|&x| json!(g.name(x))).collect())
}

fn primitivity(p: &Primitivity) -> Value {
    match p {
        Primitivity::Primitive => json!("primitive"),
        Primitivity::Periodic(k) => json!(format!("period {k}")),
        Primitivity::Reducible => json!("reducible"),
    }
}

struct Ctx<'a> {
    doc: &'a InputDocument,
    group: GroupRef,
    opts: &'a Options,
}

impl Ctx<'_> {
    fn raw(&self, name: &str) -> Result<&str, InputError> {
        self.doc
            .values
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| InputError(format!("missing value `{name}`")))
    }

    fn has(&self, name: &str) -> bool {
        self.doc.values.contains_key(name)
    }

    fn poly_mat(&self, name: &str) -> Result<MatGRPoly, InputError> {
        parse_matrix(&self.group, self.raw(name)?).map_err(|e| InputError(format!("{name}: {e}")))
    }

    fn const_mat(&self, name: &str) -> Result<MatGR, InputError> {
        let m = self.poly_mat(name)?;
        to_const(&m).ok_or_else(|| InputError(format!("{name}: matrix must not involve t")))
    }

    /// A constant matrix over the positive cone.
    fn nonneg_mat(&self, name: &str) -> Result<MatGR, InputError> {
        let m = self.const_mat(name)?;
        if let Some((i, j)) = m.first_negative() {
            return Err(InputError(format!(
                "{name}: entry ({i},{j}) = {} has a negative coefficient",
                m.get(i, j)
            )));
        }
        Ok(m)
    }

    fn poly(&self, name: &str) -> Result<GRPoly, InputError> {
        parse_poly(&self.group, self.raw(name)?).map_err(|e| InputError(format!("{name}: {e}")))
    }

    fn num<T: std::str::FromStr>(&self, name: &str, default: Option<T>) -> Result<T, InputError> {
        match (self.doc.values.get(name), default) {
            (Some(v), _) => v
                .trim()
                .parse()
                .map_err(|_| InputError(format!("{name}: expected a number, found {v:?}"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(InputError(format!("missing value `{name}`"))),
        }
    }

    fn int_mat(&self, name: &str) -> Result<MatGRPoly, InputError> {
        parse_matrix(&trivial_group(), self.raw(name)?)
            .map_err(|e| InputError(format!("{name}: {e}")))
    }
}

pub fn run_command(cmd: &str, doc: &InputDocument, opts: &Options) -> CmdResult {
    if !COMMANDS.contains(&cmd) {
        return Err(InputError(format!(
            "unknown command {cmd:?}; expected one of {}",
            COMMANDS.join(", ")
        )));
    }
    let group = doc.group_ref()?;
    let ctx = Ctx { doc, group, opts };
    match cmd {
        "traces" => traces(&ctx),
        "kappa" => kappa(&ctx),
        "det" => det(&ctx),
        "zeta" => zeta(&ctx),
        "gprimitive" => gprimitive(&ctx),
        "weightgroup" => weightgroup(&ctx),
        "upower" => upower(&ctx),
        "perronlimit" => perronlimit(&ctx),
        "nzc" => nzc(&ctx),
        "box" => box_cmd(&ctx),
        "diamond" => diamond(&ctx),
        "core" => core_cmd(&ctx),
        "verify-chain" => verify_cert(doc, "chain"),
        "verify-sse" => verify_cert(doc, "sse"),
        "verify-se" => verify_cert(doc, "se"),
        "forced-se" => forced_se(&ctx),
        "amalg" => amalg(&ctx),
        "vf" => vf(&ctx),
        "family-ckfk" => family(&ctx),
        "embed" => embed(&ctx),
        "nk1-c4" => nk1(),
        "higman" => higman(&ctx),
        "kl-pair" => kl_pair(&ctx),
        "oracle-periodic" => oracle_periodic(&ctx),
        "oracle-skew" => oracle_skew(&ctx),
        "snf" => snf(&ctx),
        "tilde" => tilde_cmd(&ctx),
        "bar" => bar_cmd(&ctx),
        _ => unreachable!(),
    }
}

fn traces(ctx: &Ctx) -> CmdResult {
    let a = ctx.const_mat("A")?;
    let count = ctx.num("count", Some(ctx.group.order() * a.rows()))?;
    let tr = inv::trace_series(&a, count)?;
    let kappa: Vec<_> = tr.iter().map(|x| x.kappa()).collect();
    let mut o = Outcome::default();
    o.set("traces", strs(&tr)).set("kappa", strs(&kappa));
    Ok(o)
}

fn kappa(ctx: &Ctx) -> CmdResult {
    let c = inv::kappa_series_equal(&ctx.const_mat("A")?, &ctx.const_mat("B")?)?;
    let mut o = Outcome::default();
    o.set("equal", c.equal)
        .set("checked_up_to", c.checked_up_to)
        .set("first_disagreement", json!(c.first_disagreement))
        .set("left", json!(c.left.map(|x| x.to_string())))
        .set("right", json!(c.right.map(|x| x.to_string())));
    Ok(o)
}

fn det(ctx: &Ctx) -> CmdResult {
    let a = ctx.poly_mat("A")?;
    let mut o = Outcome::default();
    match to_const(&a) {
        Some(c) => o
            .set("form", "det(I - tA)")
            .set("det", inv::det_poly(&c)?.to_string()),
        None => o
            .set("form", "det(I - A)")
            .set("det", inv::det_i_minus(&a)?.to_string()),
    };
    Ok(o)
}

fn zeta(ctx: &Ctx) -> CmdResult {
    let a = ctx.const_mat("A")?;
    let order = ctx.num("order", Some(10usize))?;
    let mut o = Outcome::default();
    o.set("det", inv::det_poly(&a)?.to_string())
        .set("zeta_coefficients", strs(&inv::zeta_series(&a, order)?));
    Ok(o)
}

fn gprimitive(ctx: &Ctx) -> CmdResult {
    let a = ctx.nonneg_mat("A")?;
    let p = inv::g_primitive_test(&a)?;
    let by_traces = inv::g_primitive_by_traces(&a)?;
    let mut o = Outcome::default();
    o.set("g_primitive", p.g_primitive)
        .set("reason", p.reason.clone())
        .set("bar_primitive", p.bar_primitive)
        .set("lift", primitivity(&p.lift))
        .check("trace_criterion_agrees", by_traces == p.g_primitive);
    Ok(o)
}

fn weightgroup(ctx: &Ctx) -> CmdResult {
    let a = ctx.nonneg_mat("A")?;
    let hs = inv::weight_subgroups(&a)?;
    let mut o = Outcome::default();
    o.set(
        "weight_subgroups",
        Value::Array(hs.iter().map(|h| names(&ctx.group, h)).collect()),
    );
    Ok(o)
}

fn upower(ctx: &Ctx) -> CmdResult {
    let a = ctx.const_mat("A")?;
    let max_p = ctx.num("max_p", Some(16usize))?;
    let mut o = Outcome::default();
    o.set("u_power_test", inv::u_power_test(&a)?)
        .set("exponent", json!(inv::u_power_exponent(&a, max_p)));
    Ok(o)
}

fn perronlimit(ctx: &Ctx) -> CmdResult {
    let a = ctx.nonneg_mat("A")?;
    let k = ctx.num("k", Some(60usize))?;
    let r = inv::perron_limit_check(&a, k, ctx.opts.tol)?;
    let mut o = Outcome::default();
    o.set("lambda", r.lambda)
        .set("k", r.k)
        .set("deviation", r.deviation)
        .set("tol", r.tol)
        .check("within_tolerance", r.pass);
    Ok(o)
}

fn nzc(ctx: &Ctx) -> CmdResult {
    let a = ctx.poly_mat("A")?;
    let fast = eq::nzc_check(&a)?;
    let slow = eq::nzc_by_powers(&a)?;
    let mut o = Outcome::default();
    o.set("nzc", fast)
        .set("violation", json!(eq::nzc_violation(&a)))
        .check("power_definition_agrees", fast == slow);
    Ok(o)
}

fn box_cmd(ctx: &Ctx) -> CmdResult {
    let a = ctx.poly_mat("A")?;
    let (sq, chain) = eq::box_construct(&a)?;
    let mut o = Outcome::default();
    o.set("box", mat(&sq)).set("size", sq.rows());
    if ctx.group.is_abelian() {
        o.check(
            "det_preserved",
            inv::det_i_minus(&a)? == inv::det_poly(&sq)?,
        );
    }
    o.cert(&Certificate::from_chain(&chain))?;
    Ok(o)
}

fn diamond(ctx: &Ctx) -> CmdResult {
    let a = ctx.poly_mat("A")?;
    let want_core = ctx.num("core", Some(true))?;
    let d = eq::diamond_normalize(&a, want_core)?;
    let mut o = Outcome::default();
    o.set("diamond", mat(&d.diamond))
        .set("size", d.diamond.rows())
        .set("cleared", mat(&d.cleared))
        .set("used_core", d.used_core)
        .set("measures", json!(d.measures));
    if let Some((c, keep)) = &d.core {
        o.set("core", mat(c)).set("kept", json!(keep));
    }
    let n = a.rows();
    let d_deg = a.degree().unwrap_or(1).max(1);
    o.check("size_bound", d.diamond.rows() <= n * d_deg);
    if ctx.group.is_abelian() {
        o.check(
            "det_preserved",
            inv::det_i_minus(&a)? == inv::det_poly(&d.diamond)?,
        );
    }
    o.cert(&Certificate::from_chain(&d.chain))?;
    Ok(o)
}

fn core_cmd(ctx: &Ctx) -> CmdResult {
    let (c, keep) = eq::core(&ctx.nonneg_mat("A")?)?;
    let mut o = Outcome::default();
    o.set("core", mat(&c)).set("kept", json!(keep));
    Ok(o)
}

/// Accepts a bare certificate or a report with a `canonical.certificate`.
fn verify_cert(doc: &InputDocument, kind: &str) -> CmdResult {
    let text = doc
        .values
        .get("certificate")
        .ok_or_else(|| InputError("input must be a certificate in JSON".into()))?;
    let v: Value = serde_json::from_str(text)?;
    let v = match v.get("canonical").and_then(|c| c.get("certificate")) {
        Some(c) => c.clone(),
        None => v,
    };
    let cert: Certificate = serde_json::from_value(v)?;
    let actual = match &cert {
        Certificate::Chain { .. } => "chain",
        Certificate::Sse { .. } => "sse",
        Certificate::Se { .. } => "se",
    };
    if actual != kind {
        return Err(InputError(format!(
            "expected a {kind} certificate, found {actual}"
        )));
    }
    let r = cert.verify()?;
    let mut o = Outcome::default();
    o.set("valid", r.valid)
        .set("failed_step", json!(r.failed_step))
        .set("message", r.message.clone())
        .check("valid", r.valid);
    Ok(o)
}

fn forced_se(ctx: &Ctx) -> CmdResult {
    let a = ctx.const_mat("A")?;
    let b = ctx.const_mat("B")?;
    let p = ctx.num("p", Some(1usize))?;
    let r = ctx.int_mat("R")?;
    let s = ctx.int_mat("S")?;
    let lag = ctx.num("lag", Some(1usize))?;
    let semiring = if r.is_nonnegative() && s.is_nonnegative() {
        eq::Semiring::NonnegGroupRing
    } else {
        eq::Semiring::GroupRing
    };
    let zw = eq::SEWitness {
        semiring,
        lag,
        r,
        s,
    };
    let w = eq::forced_se_lift(&a, &b, p, &zw)?;
    let mut o = Outcome::default();
    o.set("lag", w.lag)
        .set("r", mat(&w.r))
        .set("s", mat(&w.s))
        .set("semiring", serde_json::to_value(w.semiring)?);
    o.cert(&Certificate::from_se(&a.to_poly(), &b.to_poly(), &w))?;
    Ok(o)
}

fn amalg(ctx: &Ctx) -> CmdResult {
    let n = ctx.const_mat("N")?;
    let r = ctx.num("r", Some(1usize))?;
    let am = eq::amalg_nilpotent(&n, r)?;
    let mut o = Outcome::default();
    o.set("m", mat(&am.m))
        .set("u", mat(&am.u))
        .set("max_coefficient", am.m.max_abs_coeff().to_string())
        .check("bar_vanishes", bar_poly(&am.m).is_zero());
    o.cert(&Certificate::from_chain(&am.chain))?;
    Ok(o)
}

fn vf(ctx: &Ctx) -> CmdResult {
    let n = ctx.const_mat("N")?;
    let r = ctx.num("r", Some(2usize))?;
    let v = eq::vf_reps(&n, r)?;
    let mut o = Outcome::default();
    o.set("verschiebung", mat(&v.verschiebung))
        .set("frobenius", mat(&v.frobenius))
        .set("verschiebung_inverse", mat(&v.verschiebung_inverse))
        .set("frobenius_inverse", mat(&v.frobenius_inverse));
    Ok(o)
}

fn family(ctx: &Ctx) -> CmdResult {
    let g = &ctx.group;
    let gname = ctx.doc.values.get("g").map(String::as_str).unwrap_or("g");
    let gi = g
        .lookup(gname.trim())
        .ok_or_else(|| InputError(format!("unknown group element {gname:?}")))?;
    let k = ctx.num("k", Some(1usize))?;
    let params = if ctx.has("exponents") {
        let exps = ctx
            .raw("exponents")?
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| InputError("exponents: expected a comma separated list".into()))?;
        cons::FamilyParams::new(g, gi, exps)?
    } else {
        let max_exp = ctx.num("max_exp", Some(2 * k + 2))?;
        cons::scan_exponents(g, gi, k, max_exp)?
            .ok_or_else(|| InputError(format!("no exponents up to {max_exp} repair positivity")))?
    };
    let k = params.k();
    let fam = cons::family_ck_fk(&params)?;
    let f0 = cons::family_ck_fk(&cons::FamilyParams::new(g, gi, vec![])?)?;
    let rep = cons::repair_family(&fam.f, k)?;
    let mut o = Outcome::default();
    o.set("exponents", json!(params.exponents))
        .set("p", fam.p.to_string())
        .set("c", mat(&fam.c))
        .set("d", mat(&fam.d))
        .set("f", mat(&fam.f))
        .set("u", mat(&fam.u))
        .set("v", mat(&fam.v))
        .set("b", mat(&rep.b))
        .set("b_positive", rep.positive)
        .set("bar_positive_throughout", rep.bar_positive)
        .set(
            "cokernel_at_one",
            cons::cokernel_at_one(&fam.c)?.to_string(),
        )
        .check("d_identity", fam.d_identity)
        .check("f_identity", fam.f_identity)
        .check("bar_f_matches_k0", bar_poly(&fam.f) == bar_poly(&f0.f));
    if g.is_abelian() {
        let dk = inv::det_i_minus(&fam.c)?;
        o.set("det", dk.to_string())
            .check("det_matches_k0", dk == inv::det_i_minus(&f0.c)?);
    }
    o.cert(&Certificate::from_chain(&rep.chain))?;
    Ok(o)
}

fn embed(ctx: &Ctx) -> CmdResult {
    // Q directly, or as the amalgamation of a nilpotent N
    let q = if ctx.has("Q") {
        ctx.poly_mat("Q")?
    } else {
        eq::amalg_nilpotent(&ctx.const_mat("N")?, ctx.num("r", Some(1usize))?)?.m
    };
    let mut c = ctx.poly_mat("C")?;
    if ctx.has("grow") {
        let parts: Vec<usize> = ctx
            .raw("grow")?
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| InputError("grow: expected `last, first`".into()))?;
        let [last, first] = parts[..] else {
            return Err(InputError("grow: expected `last, first`".into()));
        };
        c = cons::grow_corner(&c, last, first)?.0;
    }
    let alpha = if ctx.has("alpha") {
        ctx.poly("alpha")?
    } else {
        let max_c = ctx.num("max_alpha", Some(50u64))?;
        cons::scan_alpha(&q, &c, max_c)?
            .ok_or_else(|| InputError(format!("no alpha up to {max_c}u makes B positive")))?
    };
    let e = cons::embed_assemble(&q, &c, &alpha)?;
    let mut o = Outcome::default();
    o.set("alpha", alpha.to_string())
        .set("q", mat(&q))
        .set("c", mat(&c))
        .set("h", mat(&e.h))
        .set("v", mat(&e.v))
        .set("b", mat(&e.b))
        .set("positive", e.positive)
        .set("negative_entries", json!(e.negative_entries))
        .check("similarity", e.similarity)
        .check("closed_form", e.closed_form);
    if e.positive {
        let sq = eq::essential_box(&e.b)?.0;
        o.set(
            "box_core_g_primitive",
            inv::g_primitive_test(&sq)?.g_primitive,
        );
    }
    if let Some((bb, bc, w, ok)) = &e.bar_sse {
        o.check("bar_sse", *ok);
        o.cert(&Certificate::from_sse(bb, bc, w))?;
    }
    Ok(o)
}

fn nk1() -> CmdResult {
    let ex = cons::nk1_example_c4()?;
    let mut o = Outcome::default();
    o.set("group", serde_json::to_value(ex.group.spec())?)
        .set("entries", strs(&ex.entries))
        .set("m", mat(&ex.m))
        .set("det", ex.det.to_string())
        .set("adj", mat(&ex.adj))
        .check("det_is_one", ex.det_is_one)
        .check("adjugate_inverse", ex.inverse_ok)
        .check("constant_term_inverse", ex.constant_inverse_ok);
    Ok(o)
}

fn higman(ctx: &Ctx) -> CmdResult {
    let m = if ctx.has("M") {
        ctx.poly_mat("M")?
    } else {
        cons::nk1_example_c4()?.m
    };
    let h = cons::higman_linearize(&m)?;
    let mut o = Outcome::default();
    o.set("size", h.n.rows())
        .set("n", mat(&h.n))
        .set("normalizer", mat(&h.normalizer))
        .set("normalized", mat(&h.normalized))
        .set("nilpotency_index", json!(h.nilpotency_index))
        .check("nilpotent", h.nilpotent);
    o.cert(&Certificate::from_chain(&h.chain))?;
    Ok(o)
}

fn kl_pair(ctx: &Ctx) -> CmdResult {
    let c4 = make_group(&GroupSpec::cyclic(4))?;
    let variant = ctx
        .doc
        .values
        .get("variant")
        .map(|s| s.trim().to_string())
        .unwrap_or_else(|| "literal".into());
    let x = match variant.as_str() {
        "literal" => cons::nk1_entries(&c4)?,
        "normalized" => cons::nk1_normalized_entries()?,
        v => {
            return Err(InputError(format!(
                "variant must be literal or normalized, not {v:?}"
            )))
        }
    };
    let parse = |name: &str| -> Result<GRPoly, InputError> {
        parse_poly(&c4, ctx.raw(name)?).map_err(|e| InputError(format!("{name}: {e}")))
    };
    let mut o = Outcome::default();
    let obstruction = cons::constant_obstruction(&x);
    o.set("variant", variant.clone()).set(
        "constant_obstruction",
        Value::Array(
            obstruction
                .iter()
                .map(
                    |(idx, c)| json!({"entry": [idx / 4, idx % 4], "constant_term": c.to_string()}),
                )
                .collect(),
        ),
    );
    let (e, f) = if ctx.has("e") || ctx.has("f") {
        (parse("e")?, parse("f")?)
    } else {
        let max_cf = ctx.num("max_cf", Some(100u64))?;
        let max_ce = ctx.num("max_ce", Some(400u64))?;
        match cons::scan_kl(&x, max_cf, max_ce)? {
            Some(ef) => ef,
            None => {
                o.set("scan", "no positive e, f found");
                let z = GRPoly::zero(&c4);
                (z.clone(), z)
            }
        }
    };
    let r = cons::kl_pair_with(&e, &f, &x)?;
    o.set("e", e.to_string())
        .set("f", f.to_string())
        .set("k", mat(&r.k))
        .set("l", mat(&r.l))
        .set("displayed", mat(&r.displayed))
        .set("displayed_mismatch_rows", json!(r.displayed_mismatch_rows))
        .set(
            "generic_displayed_mismatch_rows",
            json!(cons::kl_generic_mismatch(&c4)),
        )
        .set("k_zero_rows", json!(r.k_zero_rows))
        .set("l_zero_rows", json!(r.l_zero_rows))
        .set("l_negative_entries", json!(r.l_negative_entries))
        .set("positive", r.positive)
        .set("k_box_g_primitive", json!(r.k_box_primitive))
        .set("l_box_g_primitive", json!(r.l_box_primitive))
        .check("det_factorizes", r.det_factorizes)
        .check("det_equal", r.det_equal);
    Ok(o)
}

fn oracle_periodic(ctx: &Ctx) -> CmdResult {
    let a = ctx.nonneg_mat("A")?;
    let n = ctx.num("n", Some(4usize))?;
    let graph = LabeledGraph::from_matrix(&a)?;
    let w = periodic_weights(&graph, n, ctx.opts.budget)?;
    let tr = inv::trace_series(&a, n)?.pop().expect("n >= 1");
    let mut o = Outcome::default();
    o.set("periodic_weights", w.to_string())
        .set("trace", tr.to_string())
        .check("oracle_matches_trace", w == tr);
    Ok(o)
}

fn oracle_skew(ctx: &Ctx) -> CmdResult {
    let a = ctx.nonneg_mat("A")?;
    let n = ctx.num("n", Some(4usize))?;
    let graph = LabeledGraph::from_matrix(&a)?;
    let count = skew_fixed_count(&graph, n, ctx.opts.budget)?;
    let lift_trace = tilde(&a).pow(n).trace();
    let tau_e = inv::trace_series(&a, n)?
        .pop()
        .expect("n >= 1")
        .coeff(ctx.group.identity())
        .clone();
    let m_tau = BigInt::from(ctx.group.order()) * tau_e;
    let mut o = Outcome::default();
    o.set("skew_fixed_count", count.to_string())
        .set("lift_trace", lift_trace.to_string())
        .set("m_tau_e", m_tau.to_string())
        .check("oracle_matches_lift", count == lift_trace)
        .check("lift_matches_identity_trace", lift_trace == m_tau);
    Ok(o)
}

fn int_matrix(ctx: &Ctx) -> Result<IntMatrix, InputError> {
    if ctx.group.order() != 1 {
        return Err(InputError(
            "snf expects an integer matrix (group trivial)".into(),
        ));
    }
    Ok(bar(&ctx.const_mat("A")?))
}

fn snf(ctx: &Ctx) -> CmdResult {
    let a = int_matrix(ctx)?;
    let r = smith_normal_form(&a);
    let mut o = Outcome::default();
    o.set("diagonal", strs(&r.diagonal))
        .set("cokernel", r.cokernel().to_string())
        .check(
            "factorization",
            r.left.mul(&a).mul(&r.right) == r.diagonal_matrix(),
        );
    Ok(o)
}

fn tilde_cmd(ctx: &Ctx) -> CmdResult {
    let a = ctx.const_mat("A")?;
    let mut o = Outcome::default();
    o.set("tilde", mat(&tilde(&a))).set(
        "order",
        json!(names(
            &ctx.group,
            &(0..ctx.group.order()).collect::<Vec<_>>()
        )),
    );
    Ok(o)
}

fn bar_cmd(ctx: &Ctx) -> CmdResult {
    let a = ctx.poly_mat("A")?;
    let mut o = Outcome::default();
    o.set("bar", mat(&bar_poly(&a)));
    Ok(o)
}
