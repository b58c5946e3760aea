use clap::ValueEnum;
use serde_json::{json, Value};
use toric_weights::catalogue::{builtin_example, names, Example};
use toric_weights::deligne::{e1_table, euler_consistency, sum_rule};
use toric_weights::ip::{ip_cld, ip_equivariant_series};
use toric_weights::koszul::{e2_table, e3_table, twisted_dims, weight_table, PageCell};
use toric_weights::poly::QPolynomial;
use toric_weights::{Error, Fan};

use crate::input::{load, CliError, FanFile, Input};
use crate::render::{aligned, csv, grid, page, twisted_cell};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a command produced. `failure` is reported after `stdout` is printed.
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output {
            stdout,
            warnings: Vec::new(),
            failure: None,
        }
    }
}

type Run = Result<Output, CliError>;

/// Prepends the versioned `schema` field to an object payload.
fn envelope(command: &str, payload: Value) -> String {
    let Value::Object(fields) = payload else {
        unreachable!("payloads are objects")
    };
    let mut object = serde_json::Map::new();
    object.insert("schema".into(), json!(format!("toric-weights/{command}/v1")));
    object.extend(fields);
    let payload = Value::Object(object);
    let mut s = serde_json::to_string_pretty(&payload).expect("json values serialize");
    s.push('\n');
    s
}

fn to_strings<T: ToString>(row: &[T]) -> Vec<String> {
    row.iter().map(ToString::to_string).collect()
}

fn load_fan(source: &str) -> Result<Fan, CliError> {
    Ok(load(source)?.into_fan())
}

pub fn info(source: &str, format: Format) -> Run {
    let fan = load_fan(source)?;
    let c = fan.classify();
    let f = &c.f_vector;
    Ok(match format {
        Format::Text => {
            let attrs = [(c.is_smooth, "smooth"), (c.is_complete, "complete"), (c.is_simplicial, "simplicial")];
            // positive attributes run together, each negative one is its own clause
            let mut clauses: Vec<String> = Vec::new();
            let mut run: Vec<&str> = Vec::new();
            for (holds, name) in attrs {
                if holds {
                    run.push(name);
                } else {
                    if !run.is_empty() {
                        clauses.push(run.join(" "));
                        run.clear();
                    }
                    clauses.push(format!("not {name}"));
                }
            }
            if !run.is_empty() {
                clauses.push(run.join(" "));
            }
            let f: Vec<String> = to_strings(f);
            format!("{}, f=({})\n", clauses.join(", "), f.join(","))
        }
        Format::Json => envelope(
            "info",
            json!({
                "rank": fan.rank(),
                "smooth": c.is_smooth,
                "complete": c.is_complete,
                "simplicial": c.is_simplicial,
                "f_vector": f,
            }),
        ),
        Format::Csv => csv(
            &["rank", "smooth", "complete", "simplicial", "f_vector"],
            &[vec![
                fan.rank().to_string(),
                c.is_smooth.to_string(),
                c.is_complete.to_string(),
                c.is_simplicial.to_string(),
                to_strings(f).join(";"),
            ]],
        ),
    }
    .into())
}

fn not_simplicial_hint(e: Error) -> CliError {
    match e {
        Error::NotSimplicial => CliError::Hinted(e, "`toric-weights ip` works for any fan"),
        e => e.into(),
    }
}

pub fn weights(source: &str, prime: Option<u64>, format: Format) -> Run {
    let fan = load_fan(source)?;
    let table = weight_table(&fan).map_err(not_simplicial_hint)?;
    let rows = match prime {
        Some(p) => twisted_dims(&table, p)?
            .into_iter()
            .map(|e| (e.k, e.l, e.dim, e.weight, Some(e.eigenvalue)))
            .collect::<Vec<_>>(),
        None => table.entries().iter().map(|(&(k, l), &dim)| (k, l, dim, 2 * l, None)).collect(),
    };
    let mut header = vec!["k", "l", "dim", "weight"];
    if prime.is_some() {
        header.push("eigenvalue");
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(k, l, dim, w, e)| {
            let mut r = to_strings(&[k, l, dim, w]);
            r.extend(e.as_ref().map(ToString::to_string));
            r
        })
        .collect();
    Ok(match format {
        Format::Text => aligned(&header, &cells),
        Format::Csv => csv(&header, &cells),
        Format::Json => {
            let mut json_rows = Vec::new();
            for (k, l, dim, weight, e) in &rows {
                let mut row = json!({"k": k, "l": l, "dim": dim, "weight": weight});
                if let Some(e) = e {
                    let e = u64::try_from(e).map_err(|_| {
                        CliError::Unsupported(format!("eigenvalue {e} exceeds 64 bits; use text or csv output"))
                    })?;
                    row["eigenvalue"] = json!(e);
                }
                json_rows.push(row);
            }
            envelope(
                "weights",
                json!({"rank": fan.rank(), "prime": prime, "rows": json_rows}),
            )
        }
    }
    .into())
}

pub fn betti(source: &str, format: Format) -> Run {
    let fan = load_fan(source)?;
    let (betti, method) = if fan.is_simplicial() {
        (weight_table(&fan)?.betti(), "koszul")
    } else if fan.is_complete() {
        // complete fans have pure IH, so the recursion polynomial is the even Betti numbers
        let ip = ip_cld(&fan)?;
        let b = (0..=2 * fan.rank())
            .map(|k| {
                if k % 2 == 1 {
                    return Ok(0);
                }
                let c = ip.coefficient(k / 2);
                usize::try_from(c).map_err(|_| Error::PurityViolation { degree: k, value: c })
            })
            .collect::<Result<Vec<usize>, Error>>()?;
        (b, "recursion")
    } else {
        return Err(CliError::Unsupported(
            "Betti numbers of a fan that is neither simplicial nor complete are not computable here; \
             `toric-weights ip` gives the virtual Poincare polynomial"
                .into(),
        ));
    };
    let rows: Vec<Vec<String>> = betti.iter().enumerate().map(|(k, b)| to_strings(&[k, *b])).collect();
    Ok(match format {
        Format::Text => aligned(&["k", "betti"], &rows),
        Format::Csv => csv(&["k", "betti"], &rows),
        Format::Json => envelope("betti", json!({"rank": fan.rank(), "method": method, "betti": betti})),
    }
    .into())
}

fn coefficient_rows(c: &[i64]) -> Vec<Vec<String>> {
    c.iter().enumerate().map(|(d, c)| vec![d.to_string(), c.to_string()]).collect()
}

pub fn ip(source: &str, format: Format) -> Run {
    let fan = load_fan(source)?;
    let p: QPolynomial = ip_cld(&fan)?;
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Csv => csv(&["degree", "coefficient"], &coefficient_rows(p.coefficients())),
        Format::Json => envelope(
            "ip",
            json!({"rank": fan.rank(), "polynomial": p.to_string(), "coefficients": p.coefficients()}),
        ),
    }
    .into())
}

pub fn eqseries(source: &str, cutoff: usize, format: Format) -> Run {
    let fan = load_fan(source)?;
    let s = ip_equivariant_series(&fan, cutoff)?;
    Ok(match format {
        Format::Text => format!("{s}\n"),
        Format::Csv => csv(&["degree", "coefficient"], &coefficient_rows(s.coefficients())),
        Format::Json => envelope(
            "eqseries",
            json!({"rank": fan.rank(), "cutoff": cutoff, "coefficients": s.coefficients()}),
        ),
    }
    .into())
}

fn cells_json(cells: &[PageCell]) -> Value {
    cells
        .iter()
        .map(|c| json!({"column": c.column, "row": c.row, "dim": c.dim, "twist": c.twist}))
        .collect()
}

fn cells_csv(page_name: &str, cells: &[PageCell]) -> Vec<Vec<String>> {
    cells
        .iter()
        .map(|c| {
            let mut r = vec![page_name.to_string()];
            r.extend(to_strings(&[c.column, c.row, c.dim, c.twist]));
            r
        })
        .collect()
}

pub fn koszul_tables(source: &str, cutoff: Option<usize>, format: Format) -> Run {
    let fan = load_fan(source)?;
    let n = fan.rank();
    let max_a = cutoff.unwrap_or(2 * n);
    let e2 = e2_table(&fan, max_a).map_err(not_simplicial_hint)?;
    let table = weight_table(&fan)?;
    let e3 = e3_table(&table, max_a);
    Ok(match format {
        Format::Text => format!(
            "E2 (column 2a, row b: PP^a tensor exterior^b)\n{}\nE3 (column 2a, row b: weight 2(a+b) part of IH^(2a+b))\n{}",
            page(&e2, n, max_a),
            page(&e3, n, max_a)
        ),
        Format::Csv => {
            let mut rows = cells_csv("E2", &e2);
            rows.extend(cells_csv("E3", &e3));
            csv(&["page", "column", "row", "dim", "twist"], &rows)
        }
        Format::Json => envelope(
            "koszul-tables",
            json!({"rank": n, "max_a": max_a, "e2": cells_json(&e2), "e3": cells_json(&e3)}),
        ),
    }
    .into())
}

pub fn deligne(source: &str, format: Format) -> Run {
    let pair = load(source)?.into_pair()?;
    let t = e1_table(&pair)?;
    let w = weight_table(pair.open())?;
    let euler = euler_consistency(&t, &w)?;
    let (sum_e1, sum_koszul) = sum_rule(&t, &w);
    let n = t.rank();
    let columns: Vec<i64> = (0..t.columns() as i64).rev().map(|k| -k).collect();
    let stdout = match format {
        Format::Text => {
            // odd rows vanish identically, so only even weights are drawn
            let rows: Vec<usize> = (0..=n).map(|i| 2 * i).collect();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|&l| {
                    columns
                        .iter()
                        .map(|&c| {
                            let dim = t.get(c, l).map_or(0, |e| e.dim);
                            twisted_cell(dim, l / 2)
                        })
                        .collect()
                })
                .collect();
            let mut s = String::from("E1 (column -k, row l: H^(l-2k) of the k-fold boundary intersections)\n");
            s.push_str(&grid(&to_strings(&rows), &to_strings(&columns), &body));
            for e in &euler {
                let mark = if e.holds() { "ok" } else { "MISMATCH" };
                s.push_str(&format!("weight {}: deligne {} koszul {} {mark}\n", e.weight, e.deligne, e.koszul));
            }
            s.push_str(&format!("euler characteristic: deligne {sum_e1} koszul {sum_koszul}\n"));
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = t
                .entries()
                .iter()
                .map(|e| {
                    vec![e.column.to_string(), e.row.to_string(), e.dim.to_string(), e.tate_twist.to_string(), e.weight.to_string()]
                })
                .collect();
            csv(&["column", "row", "dim", "tate_twist", "weight"], &rows)
        }
        Format::Json => {
            let entries: Vec<Value> = t
                .entries()
                .iter()
                .map(|e| {
                    json!({"column": e.column, "row": e.row, "dim": e.dim, "tate_twist": e.tate_twist, "weight": e.weight})
                })
                .collect();
            let checks: Vec<Value> = euler
                .iter()
                .map(|e| json!({"weight": e.weight, "deligne": e.deligne, "koszul": e.koszul, "holds": e.holds()}))
                .collect();
            envelope(
                "deligne",
                json!({
                    "rank": n,
                    "boundary_rays": pair.boundary_rays(),
                    "entries": entries,
                    "euler": checks,
                    "euler_characteristic": {"deligne": sum_e1, "koszul": sum_koszul},
                }),
            )
        }
    };
    let mut warnings = Vec::new();
    if pair.boundary_empty() {
        warnings.push("the boundary is empty; the table is the cohomology of the ambient variety".to_string());
    }
    let failure = (!euler.iter().all(|e| e.holds()) || sum_e1 != sum_koszul)
        .then(|| CliError::Inconsistent("E1 Euler characteristics disagree with the weight table".into()));
    Ok(Output {
        stdout,
        warnings,
        failure,
    })
}

pub fn example(name: Option<&str>, format: Format) -> Run {
    let Some(name) = name else {
        let list = names();
        return Ok(match format {
            Format::Json => envelope("example", json!({"names": list})),
            Format::Text | Format::Csv => list.iter().map(|n| format!("{n}\n")).collect(),
        }
        .into());
    };
    // the file formats are the payload, so they round-trip through `load`
    Ok(match builtin_example(name)? {
        Example::Fan(f) => format!("{}\n", fan_file_json(&f.description().into(), "")),
        Example::Completion(p) => format!(
            "{{\n  \"ambient\": {},\n  \"open_rays\": {}\n}}\n",
            fan_file_json(&p.ambient().description().into(), "  "),
            compact(&p.open_rays())
        ),
    }
    .into())
}

fn compact<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("json values serialize").replace(',', ", ")
}

/// One ray or cone per line, fields in file order.
fn fan_file_json(f: &FanFile, indent: &str) -> String {
    let list = |items: Vec<String>| -> String {
        if items.is_empty() {
            return "[]".into();
        }
        let inner: Vec<String> = items.iter().map(|i| format!("{indent}    {i}")).collect();
        format!("[\n{}\n{indent}  ]", inner.join(",\n"))
    };
    let rays = list(f.rays.iter().map(|r| compact(r.as_slice())).collect());
    let cones = list(f.maximal_cones.iter().map(|c| compact(c.as_slice())).collect());
    format!(
        "{{\n{indent}  \"rank\": {},\n{indent}  \"rays\": {rays},\n{indent}  \"maximal_cones\": {cones}\n{indent}}}",
        f.rank
    )
}

pub fn validate(source: &str, format: Format) -> Run {
    let input = load(source)?;
    let (kind, fan, open) = match &input {
        Input::Fan(f) => ("fan", f, None),
        Input::Pair(p) => ("completion", p.ambient(), Some(p.open_rays().len())),
    };
    let maximal = fan.maximal_cones().count();
    Ok(match format {
        Format::Text => {
            let mut s = format!("valid {kind}: rank {}, {} rays, {maximal} maximal cones", fan.rank(), fan.rays().len());
            if let Some(open) = open {
                s.push_str(&format!(", {open} open rays"));
            }
            s.push('\n');
            s
        }
        Format::Csv => csv(
            &["kind", "rank", "rays", "maximal_cones", "open_rays"],
            &[vec![
                kind.to_string(),
                fan.rank().to_string(),
                fan.rays().len().to_string(),
                maximal.to_string(),
                open.map_or_else(String::new, |o| o.to_string()),
            ]],
        ),
        Format::Json => envelope(
            "validate",
            json!({
                "kind": kind,
                "rank": fan.rank(),
                "rays": fan.rays().len(),
                "maximal_cones": maximal,
                "open_rays": open,
            }),
        ),
    }
    .into())
}
