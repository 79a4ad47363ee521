//! One handler per subcommand. Input parsing failures map to exit 2,
//! computation-time assertion failures to exit 1; artifacts go to stdout or
//! --out, never mixed with the stderr report.

use crate::report::Report;
use crate::{CensusKind, Cli, ClassifyMode, Command, Failure, Format, InputKind};
use metabel::algebra::{
    Algebra, automorphism_group, find_isomorphism, is_algebra_map, ito_check,
};
use metabel::codim_one::{
    ExtClassRep, TPair, build_algebra, enumerate_t, equalizer, ext_k_census, im_sum,
    met_kv_census,
};
use metabel::cohomology::ext_enumerate;
use metabel::datum::{
    DiscreteBimodule, MetabelianDatum, decompose, metabelian_product, validate_bimodule,
    validate_cocycle,
};
use metabel::dim_one::{BilinearForm, build_p_theta, catalog, homothetic, isometric};
use metabel::linalg::{Matrix, Subspace, Vector, all_subspaces, matrix_enumerate};
use metabel::selftest;
use metabel::wire::{
    AlgebraWire, DatumWire, MatrixWire, PairWire, RawDatumParts, VectorWire, form_from_wire,
};
use metabel::{Budget, Error, PrimeField};
use serde_json::{Value, json};
use std::path::{Path, PathBuf};

pub fn dispatch(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Parse("--jobs must be at least 1".to_string()));
        }
        report.count("jobs", jobs as u64);
    }
    let budget = resolve_budget(cli.budget)?;
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Validate { kind, input } => cmd_validate(*kind, input, out, report),
        Command::Product { datum } => cmd_product(datum, out, report),
        Command::Decompose { algebra } => cmd_decompose(algebra, out, report),
        Command::Iso { a, b } => cmd_iso(a, b, &budget, out, report),
        Command::Aut { algebra } => cmd_aut(algebra, &budget, out, report),
        Command::Ito { algebra, first_span, second_span } => {
            cmd_ito(algebra, first_span.as_deref(), second_span.as_deref(), &budget, out, report)
        }
        Command::Ext { dim_p, dim_v, p } => {
            cmd_ext(*dim_p, *dim_v, *p, &budget, cli.format, out, report)
        }
        Command::ClassifyDim1 { n, p, mode } => {
            cmd_classify_dim1(*n, *p, *mode, &budget, cli.format, out, report)
        }
        Command::Catalog { family, p, a, b } => cmd_catalog(family, *p, *a, *b, out, report),
        Command::EnumerateT { n, p } => {
            cmd_enumerate_t(*n, *p, &budget, cli.format, out, report)
        }
        Command::BuildCodim1 { pair, u } => cmd_build_codim1(pair, u, out, report),
        Command::Census { kind, dim_v, p } => {
            cmd_census(*kind, *dim_v, *p, &budget, cli.format, out, report)
        }
        Command::Selftest => cmd_selftest(out, report),
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<Budget, Failure> {
    if let Some(max) = flag {
        return Ok(Budget::new(max));
    }
    match std::env::var("METABEL_BUDGET") {
        Ok(raw) => raw
            .parse::<u64>()
            .map(Budget::new)
            .map_err(|_| Failure::Parse(format!("METABEL_BUDGET is not a number: {raw:?}"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn parse_field(p: u32) -> Result<PrimeField, Failure> {
    PrimeField::new(p).map_err(|e| Failure::Parse(e.to_string()))
}

/// Read and deserialize a JSON file; all failures are parse failures, with
/// the line and column included for syntax errors.
fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Parse(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
    })
}

fn parse_algebra(path: &Path) -> Result<Algebra, Failure> {
    let wire: AlgebraWire = read_json(path)?;
    Algebra::try_from(&wire).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parse_datum(path: &Path) -> Result<MetabelianDatum, Failure> {
    let wire: DatumWire = read_json(path)?;
    MetabelianDatum::try_from(&wire)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parse_pair(path: &Path) -> Result<TPair, Failure> {
    let wire: PairWire = read_json(path)?;
    TPair::try_from(&wire).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn run_err(e: Error) -> Failure {
    Failure::Run(e.to_string())
}

fn emit(out: Option<&Path>, report: &mut Report, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, content)
                .map_err(|e| Failure::Run(format!("{}: {e}", path.display())))?;
            report.artifact(path);
        }
        None => println!("{content}"),
    }
    Ok(())
}

fn emit_json(out: Option<&Path>, report: &mut Report, value: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("artifacts are plain data");
    text.push('\n');
    emit(out, report, &text)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("wire types are plain data")
}

/// Render a matrix as a single CSV cell: rows joined by ';', entries by ' '.
fn matrix_cell(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_to_string(rows: Vec<Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(&row).expect("in-memory CSV write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory CSV flush"))
        .expect("CSV output is UTF-8")
}

fn format_or(format: Option<Format>, default: Format) -> Format {
    format.unwrap_or(default)
}

fn cmd_validate(
    kind: InputKind,
    input: &PathBuf,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let verdict: Result<Value, String> = match kind {
        InputKind::Algebra => read_json::<AlgebraWire>(input).and_then(|wire| {
            Algebra::try_from(&wire)
                .map(|a| {
                    json!({
                        "kind": "algebra", "valid": true,
                        "p": a.field().modulus(), "dim": a.dim(),
                        "associative": a.is_associative(),
                    })
                })
                .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))
        }),
        InputKind::Datum => read_json::<DatumWire>(input).and_then(|wire| {
            // shape first, then each law separately so the artifact can name
            // the violated invariant
            let parts = RawDatumParts::try_from(&wire)
                .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))?;
            let bim_report =
                validate_bimodule(parts.field, parts.dim_p, parts.dim_v, &parts.right, &parts.left)
                    .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))?;
            if !bim_report.is_valid() {
                let detail = format!(
                    "action laws violated at {} right-composition, {} left-composition, {} mixed index pairs",
                    bim_report.right_composition_violations.len(),
                    bim_report.left_composition_violations.len(),
                    bim_report.mixed_violations.len(),
                );
                Err(Failure::Parse(format!("{}: {detail}", input.display())))
            } else {
                let bimodule = DiscreteBimodule::new(
                    parts.field, parts.dim_p, parts.dim_v, parts.right.clone(), parts.left.clone(),
                )
                .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))?;
                let coc_report = validate_cocycle(&bimodule, &parts.theta)
                    .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))?;
                if !coc_report.is_valid() {
                    Err(Failure::Parse(format!(
                        "{}: compatibility law violated at {} index triples",
                        input.display(),
                        coc_report.violations.len(),
                    )))
                } else {
                    Ok(json!({
                        "kind": "datum", "valid": true,
                        "p": parts.field.modulus(),
                        "dimP": parts.dim_p, "dimV": parts.dim_v,
                    }))
                }
            }
        }),
        InputKind::Pair => read_json::<PairWire>(input).and_then(|wire| {
            TPair::try_from(&wire)
                .map(|t| {
                    json!({
                        "kind": "pair", "valid": true,
                        "p": t.field().modulus(), "n": t.n(),
                    })
                })
                .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))
        }),
        InputKind::Form => read_json::<MatrixWire>(input).and_then(|wire| {
            form_from_wire(&wire)
                .map(|form| {
                    json!({
                        "kind": "form", "valid": true,
                        "p": form.field().modulus(), "n": form.n(),
                        "zero": form.is_zero(),
                    })
                })
                .map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))
        }),
    }
    .map_err(|f| match f {
        Failure::Parse(msg) | Failure::Run(msg) => msg,
    });

    match verdict {
        Ok(value) => {
            report.assert_that("input satisfies every invariant of its kind", true);
            emit_json(out, report, &value)
        }
        Err(msg) => {
            report.assert_that("input satisfies every invariant of its kind", false);
            emit_json(out, report, &json!({"valid": false, "error": msg}))?;
            Err(Failure::Parse(msg))
        }
    }
}

fn cmd_product(datum: &PathBuf, out: Option<&Path>, report: &mut Report) -> Result<(), Failure> {
    let datum = parse_datum(datum)?;
    let triple = metabelian_product(&datum).map_err(run_err)?;
    report.count("dim", triple.total().dim() as u64);
    report.assert_that("product is associative", triple.total().is_associative());
    report.assert_that(
        "product is metabelian",
        triple.total().is_metabelian().map_err(run_err)?,
    );
    report.assert_that(
        "all length-4 basis products vanish",
        triple.total().nilpotency_index_at_most(4).map_err(run_err)?,
    );
    emit_json(out, report, &to_value(&AlgebraWire::from(triple.total())))
}

fn cmd_decompose(algebra: &PathBuf, out: Option<&Path>, report: &mut Report) -> Result<(), Failure> {
    let a = parse_algebra(algebra)?;
    let dec = decompose(&a).map_err(run_err)?;
    let rebuilt = metabelian_product(&dec.datum).map_err(run_err)?;
    report.count("dimP", dec.datum.dim_p() as u64);
    report.count("dimV", dec.datum.dim_v() as u64);
    report.assert_that("change of basis is invertible", dec.iso.is_invertible());
    report.assert_that(
        "change of basis maps the rebuilt product onto the input",
        is_algebra_map(&dec.iso, rebuilt.total(), &a),
    );
    report.assert_that(
        "rebuilt product equals the input in the new basis",
        &a.rebase(&dec.iso).map_err(run_err)? == rebuilt.total(),
    );
    let value = json!({
        "datum": to_value(&DatumWire::from(&dec.datum)),
        "iso": to_value(&MatrixWire::from(&dec.iso)),
        "sectionIndices": dec.section_indices,
        "derivedPivots": dec.derived_pivots,
    });
    emit_json(out, report, &value)
}

fn cmd_iso(
    a: &PathBuf,
    b: &PathBuf,
    budget: &Budget,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let a = parse_algebra(a)?;
    let b = parse_algebra(b)?;
    // different sizes or ground fields can never be isomorphic
    let witness = if a.dim() != b.dim() || a.field() != b.field() {
        None
    } else {
        find_isomorphism(&a, &b, budget).map_err(run_err)?
    };
    if let Some(c) = &witness {
        report.assert_that("witness is an invertible algebra map", {
            c.is_invertible() && is_algebra_map(c, &a, &b)
        });
    }
    report.count("isomorphic", witness.is_some());
    let value = json!({
        "isomorphic": witness.is_some(),
        "witness": witness.as_ref().map(|c| to_value(&MatrixWire::from(c))),
    });
    emit_json(out, report, &value)
}

fn cmd_aut(
    algebra: &PathBuf,
    budget: &Budget,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let a = parse_algebra(algebra)?;
    let auts = automorphism_group(&a, budget).map_err(run_err)?;
    report.count("order", auts.len() as u64);
    report.assert_that("group closed under composition and inverses", true);
    let value = json!({
        "order": auts.len(),
        "automorphisms": auts.iter().map(|c| to_value(&MatrixWire::from(c))).collect::<Vec<_>>(),
    });
    emit_json(out, report, &value)
}

fn span_from_file(path: &Path, dim: usize) -> Result<Subspace, Failure> {
    let wire: MatrixWire = read_json(path)?;
    let m = Matrix::try_from(&wire).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    if m.cols() != dim {
        return Err(Failure::Parse(format!(
            "{}: spanning rows have {} coordinates, the algebra has dimension {dim}",
            path.display(),
            m.cols(),
        )));
    }
    let rows: Vec<Vector> = (0..m.rows()).map(|i| m.row_vector(i)).collect();
    Subspace::from_spanning(m.field(), dim, &rows)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn cmd_ito(
    algebra: &PathBuf,
    first_span: Option<&Path>,
    second_span: Option<&Path>,
    budget: &Budget,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let a = parse_algebra(algebra)?;
    if let (Some(first), Some(second)) = (first_span, second_span) {
        let s1 = span_from_file(first, a.dim())?;
        let s2 = span_from_file(second, a.dim())?;
        let r = ito_check(&a, &s1, &s2).map_err(run_err)?;
        report.assert_that("conclusion: sum of abelian subalgebras is metabelian", r.conclusion_holds());
        let value = json!({
            "firstIsAbelianSubalgebra": r.p_is_subalgebra && r.p_is_abelian,
            "secondIsAbelianSubalgebra": r.v_is_subalgebra && r.v_is_abelian,
            "spansSumToAlgebra": r.spans_sum_to_algebra,
            "metabelian": r.conclusion_metabelian,
            "length4ProductsVanish": r.conclusion_length4_products_vanish,
        });
        return emit_json(out, report, &value);
    }

    // no spans given: exhaustive search for an abelian pair with full sum
    let spaces = all_subspaces(a.field(), a.dim(), budget).map_err(run_err)?;
    let mut abelian = Vec::with_capacity(spaces.len());
    for s in &spaces {
        let mut ok = true;
        'scan: for u in s.basis() {
            for v in s.basis() {
                if !a.multiply(u, v).map_err(run_err)?.is_zero() {
                    ok = false;
                    break 'scan;
                }
            }
        }
        abelian.push(ok);
    }
    let mut split: Option<(usize, usize)> = None;
    'outer: for i in 0..spaces.len() {
        if !abelian[i] {
            continue;
        }
        for j in 0..spaces.len() {
            if abelian[j] && spaces[i].sum(&spaces[j]).map_err(run_err)?.dim() == a.dim() {
                split = Some((i, j));
                break 'outer;
            }
        }
    }
    let metabelian = a.is_metabelian().map_err(run_err)?;
    report.count("subspaces", spaces.len() as u64);
    report.count("decomposable", split.is_some());
    report.assert_that(
        "decomposable implies metabelian",
        split.is_none() || metabelian,
    );
    let span_value = |idx: usize| -> Value {
        let rows: Vec<Vec<u32>> =
            spaces[idx].basis().iter().map(|v| v.coords().to_vec()).collect();
        let m = Matrix::from_rows(a.field(), &rows).expect("basis rows are reduced");
        to_value(&MatrixWire::from(&m))
    };
    let value = json!({
        "decomposable": split.is_some(),
        "metabelian": metabelian,
        "firstSpan": split.map(|(i, _)| span_value(i)),
        "secondSpan": split.map(|(_, j)| span_value(j)),
    });
    emit_json(out, report, &value)
}

fn cmd_ext(
    dim_p: usize,
    dim_v: usize,
    p: u32,
    budget: &Budget,
    format: Option<Format>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let field = parse_field(p)?;
    let catalog = ext_enumerate(dim_p, dim_v, field, budget).map_err(run_err)?;
    report.count("bimodules", catalog.groups().len() as u64);
    report.count("classes", catalog.total_entries() as u64);
    report.assert_that(
        "every cocycle lands in exactly one catalog class",
        true,
    );
    match format_or(format, Format::Json) {
        Format::Json => {
            let entries: Vec<Value> = catalog
                .groups()
                .iter()
                .flat_map(|group| {
                    let bim = group.bimodule();
                    let bim_value = json!({
                        "p": bim.field().modulus(),
                        "dimP": bim.dim_p(),
                        "dimV": bim.dim_v(),
                        "right": bim.right().iter().map(|m| to_value(&MatrixWire::from(m))).collect::<Vec<_>>(),
                        "left": bim.left().iter().map(|m| to_value(&MatrixWire::from(m))).collect::<Vec<_>>(),
                    });
                    group.entries().iter().map(move |entry| {
                        let theta: Vec<Vec<Value>> = entry
                            .datum()
                            .theta()
                            .iter()
                            .map(|row| row.iter().map(|v| to_value(&VectorWire::from(v))).collect())
                            .collect();
                        json!({
                            "bimodule": bim_value.clone(),
                            "thetaRep": theta,
                            "algebra": to_value(&AlgebraWire::from(entry.triple().total())),
                        })
                    })
                })
                .collect();
            emit_json(out, report, &Value::Array(entries))
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "bimodule_id".to_string(),
                "cocycles".to_string(),
                "coboundaries".to_string(),
                "classes".to_string(),
            ]];
            for group in catalog.groups() {
                let h = group.cohomology();
                rows.push(vec![
                    group.bimodule_id(),
                    h.cocycle_count().to_string(),
                    h.coboundary_count().to_string(),
                    h.class_count().to_string(),
                ]);
            }
            emit(out, report, &csv_to_string(rows))
        }
    }
}

fn cmd_classify_dim1(
    n: usize,
    p: u32,
    mode: ClassifyMode,
    budget: &Budget,
    format: Option<Format>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let field = parse_field(p)?;
    let forms: Vec<BilinearForm> = matrix_enumerate(n, n, field, budget)
        .map_err(run_err)?
        .map(|m| BilinearForm::new(m).expect("enumerated matrices are square"))
        .collect();
    // greedy classification in encoding order; the first member of each
    // class is its representative
    let mut rep_of: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, form) in forms.iter().enumerate() {
        let mut found = None;
        for (k, &r) in rep_of.iter().enumerate() {
            let related = match mode {
                ClassifyMode::Homothety => homothetic(&forms[r], form, budget).map_err(run_err)?.is_some(),
                ClassifyMode::Isometry => isometric(&forms[r], form, budget).map_err(run_err)?.is_some(),
            };
            if related {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => members[k].push(i),
            None => {
                rep_of.push(i);
                members.push(vec![i]);
            }
        }
    }
    // independent cross-check: each member's algebra is isomorphic to its
    // representative's algebra
    let mut total_disagreements = 0u64;
    let mut class_rows = Vec::new();
    for (k, &r) in rep_of.iter().enumerate() {
        let rep_algebra = build_p_theta(&forms[r]).map_err(run_err)?;
        let mut disagreements = 0u64;
        for &i in &members[k] {
            let member_algebra = build_p_theta(&forms[i]).map_err(run_err)?;
            if find_isomorphism(&rep_algebra, &member_algebra, budget).map_err(run_err)?.is_none() {
                disagreements += 1;
            }
        }
        total_disagreements += disagreements;
        class_rows.push((k, r, members[k].len(), disagreements));
    }
    report.count("forms", forms.len() as u64);
    report.count("classes", rep_of.len() as u64);
    report.assert_that(
        "every class member is isomorphic to its representative",
        total_disagreements == 0,
    );
    match format_or(format, Format::Csv) {
        Format::Csv => {
            let mut rows = vec![vec![
                "class".to_string(),
                "representative".to_string(),
                "size".to_string(),
                "iso_disagreements".to_string(),
            ]];
            for (k, r, size, disagreements) in class_rows {
                rows.push(vec![
                    k.to_string(),
                    matrix_cell(forms[r].matrix()),
                    size.to_string(),
                    disagreements.to_string(),
                ]);
            }
            emit(out, report, &csv_to_string(rows))
        }
        Format::Json => {
            let classes: Vec<Value> = class_rows
                .into_iter()
                .map(|(k, r, size, disagreements)| {
                    json!({
                        "class": k,
                        "representative": to_value(&MatrixWire::from(forms[r].matrix())),
                        "size": size,
                        "isoDisagreements": disagreements,
                    })
                })
                .collect();
            emit_json(out, report, &Value::Array(classes))
        }
    }
}

fn cmd_catalog(
    family: &str,
    p: u32,
    a: Option<i64>,
    b: Option<i64>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let field = parse_field(p)?;
    let item = catalog(family, field, a, b).map_err(|e| Failure::Parse(e.to_string()))?;
    report.assert_that("family instance is associative", item.algebra.is_associative());
    report.assert_that(
        "family instance is metabelian",
        item.algebra.is_metabelian().map_err(run_err)?,
    );
    let params: Value = item
        .params
        .iter()
        .map(|(name, value)| (name.to_string(), Value::from(*value)))
        .collect::<serde_json::Map<String, Value>>()
        .into();
    let value = json!({
        "family": item.family,
        "params": params,
        "form": item.form.as_ref().map(|f| to_value(&MatrixWire::from(f.matrix()))),
        "algebra": to_value(&AlgebraWire::from(&item.algebra)),
    });
    emit_json(out, report, &value)
}

fn cmd_enumerate_t(
    n: usize,
    p: u32,
    budget: &Budget,
    format: Option<Format>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let field = parse_field(p)?;
    let pairs = enumerate_t(n, field, budget).map_err(run_err)?;
    let mut total_classes = 0u64;
    let mut table = Vec::with_capacity(pairs.len());
    for t in &pairs {
        let eq = equalizer(t);
        let im = im_sum(t).map_err(run_err)?;
        let classes = (p as u64).pow((eq.dim() - im.dim()) as u32);
        total_classes += classes;
        table.push((t, eq.dim(), im.dim(), classes));
    }
    report.count("pairs", pairs.len() as u64);
    report.count("classesTotal", total_classes);
    report.assert_that("every image lies inside its equalizer", true);
    match format_or(format, Format::Csv) {
        Format::Csv => {
            let mut rows = vec![vec![
                "x".to_string(),
                "y".to_string(),
                "equalizer".to_string(),
                "image".to_string(),
                "classes".to_string(),
            ]];
            for (t, eq_dim, im_dim, classes) in table {
                rows.push(vec![
                    matrix_cell(t.x()),
                    matrix_cell(t.y()),
                    (p as u64).pow(eq_dim as u32).to_string(),
                    (p as u64).pow(im_dim as u32).to_string(),
                    classes.to_string(),
                ]);
            }
            emit(out, report, &csv_to_string(rows))
        }
        Format::Json => {
            let entries: Vec<Value> = table
                .into_iter()
                .map(|(t, eq_dim, im_dim, classes)| {
                    json!({
                        "x": to_value(&MatrixWire::from(t.x())),
                        "y": to_value(&MatrixWire::from(t.y())),
                        "equalizer": (p as u64).pow(eq_dim as u32),
                        "image": (p as u64).pow(im_dim as u32),
                        "classes": classes,
                    })
                })
                .collect();
            emit_json(out, report, &Value::Array(entries))
        }
    }
}

fn cmd_build_codim1(
    pair: &PathBuf,
    u: &str,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let t = parse_pair(pair)?;
    let coords: Vec<u32> = u
        .split(',')
        .map(|part| part.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Parse(format!("--u: {e}")))?;
    let vector = Vector::new(t.field(), coords).map_err(|e| Failure::Parse(format!("--u: {e}")))?;
    let rep = ExtClassRep::new(t, vector).map_err(|e| Failure::Parse(format!("--u: {e}")))?;
    let triple = build_algebra(&rep).map_err(run_err)?;
    report.count("dim", triple.total().dim() as u64);
    report.assert_that("built algebra is associative", triple.total().is_associative());
    report.assert_that(
        "built algebra is metabelian",
        triple.total().is_metabelian().map_err(run_err)?,
    );
    emit_json(out, report, &to_value(&AlgebraWire::from(triple.total())))
}

fn cmd_census(
    kind: CensusKind,
    dim_v: usize,
    p: u32,
    budget: &Budget,
    format: Option<Format>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let field = parse_field(p)?;
    match kind {
        CensusKind::MetKv => {
            let r = met_kv_census(dim_v, field, budget).map_err(run_err)?;
            report.count("tPairs", r.t_pair_count as u64);
            report.count("triples", r.triple_count);
            report.count("datums", r.datum_count);
            report.assert_that(
                "triple census equals the raw datum census",
                r.triple_count == r.datum_count,
            );
            match format_or(format, Format::Json) {
                Format::Json => emit_json(
                    out,
                    report,
                    &json!({
                        "kind": "met_kv",
                        "tPairs": r.t_pair_count,
                        "triples": r.triple_count,
                        "datums": r.datum_count,
                    }),
                ),
                Format::Csv => emit(
                    out,
                    report,
                    &csv_to_string(vec![
                        vec!["t_pairs".to_string(), "triples".to_string(), "datums".to_string()],
                        vec![
                            r.t_pair_count.to_string(),
                            r.triple_count.to_string(),
                            r.datum_count.to_string(),
                        ],
                    ]),
                ),
            }
        }
        CensusKind::ExtK => {
            let r = ext_k_census(dim_v, field, budget).map_err(run_err)?;
            report.count("quotientClasses", r.quotient_count);
            report.count("catalogClasses", r.catalog_count);
            report.count("bruteForceClasses", r.brute_force_count);
            report.assert_that(
                "three independent class counts agree",
                r.quotient_count == r.catalog_count && r.catalog_count == r.brute_force_count,
            );
            match format_or(format, Format::Json) {
                Format::Json => emit_json(
                    out,
                    report,
                    &json!({
                        "kind": "ext_k",
                        "quotientClasses": r.quotient_count,
                        "catalogClasses": r.catalog_count,
                        "bruteForceClasses": r.brute_force_count,
                    }),
                ),
                Format::Csv => emit(
                    out,
                    report,
                    &csv_to_string(vec![
                        vec![
                            "quotient_classes".to_string(),
                            "catalog_classes".to_string(),
                            "brute_force_classes".to_string(),
                        ],
                        vec![
                            r.quotient_count.to_string(),
                            r.catalog_count.to_string(),
                            r.brute_force_count.to_string(),
                        ],
                    ]),
                ),
            }
        }
    }
}

fn cmd_selftest(out: Option<&Path>, report: &mut Report) -> Result<(), Failure> {
    let results = selftest::run_all();
    let mut lines = String::new();
    for r in &results {
        lines.push_str(&r.line());
        lines.push('\n');
        report.assert_that(r.name, r.pass);
    }
    report.count("criteria", results.len() as u64);
    report.count("passed", results.iter().filter(|r| r.pass).count() as u64);
    // the exit code is decided by the recorded assertions
    emit(out, report, &lines)
}
