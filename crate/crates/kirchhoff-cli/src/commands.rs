use std::fs;
use std::io::{self, Write};

use anyhow::{bail, Context, Result};
use kirchhoff::spectral::rational::to_f64;
use kirchhoff::spectral::{
    kf_exact, kf_spectral, laplacian_spectrum, render_exact, render_real, resistance_matrix, tree_count, wiener,
};
use kirchhoff::verify::{extremal_search, verify_theorem, EnumerationSpec, Objective, TheoremParams};
use kirchhoff::{edgelist, graph6, FamilySpec, FamilyTemplate, Graph};

use crate::{ComputeArgs, SearchArgs, TableArgs, VerifyArgs};

/// Above this order Kf is reported from the spectrum only.
const EXACT_LIMIT: usize = 64;

pub fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{text}`"))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("`{s}`: {e}"));
    Ok((num(a)?, num(b)?))
}

pub fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("`{s}`: {e}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(text)?, num(text)?),
    };
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok((lo, hi))
}

fn load(args: &ComputeArgs) -> Result<(Graph, Option<FamilySpec>)> {
    let src = &args.source;
    if let Some(text) = &src.graph6 {
        return Ok((graph6::decode(text.trim())?, None));
    }
    if let Some(path) = &src.edgelist {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok((edgelist::parse(&text)?, None));
    }
    if let Some(text) = &src.family {
        let spec: FamilySpec = text.parse()?;
        return Ok((spec.build()?, Some(spec)));
    }
    bail!("no input graph")
}

pub fn compute(args: ComputeArgs) -> Result<u8> {
    let (g, family) = load(&args)?;
    let kf = args.kf || !(args.wiener || args.spectrum || args.trees || args.resistance);
    let mut out = String::new();
    out.push_str(&format!("order = {}\nsize = {}\n", g.order(), g.size()));
    if kf {
        if g.order() <= EXACT_LIMIT {
            let exact = kf_exact(&g)?;
            if exact.is_integer() {
                out.push_str(&format!("kf = {}\n", render_exact(&exact)));
            } else {
                out.push_str(&format!("kf = {}\nkf_exact = {}\n", render_real(to_f64(&exact)), render_exact(&exact)));
            }
        } else {
            out.push_str(&format!("kf = {}\n", render_real(kf_spectral(&g)?)));
        }
        if let Some(closed) = family.as_ref().map(FamilySpec::closed_form_kf).transpose()?.flatten() {
            out.push_str(&format!("kf_closed_form = {}\n", render_exact(&closed)));
        }
    }
    if args.wiener {
        out.push_str(&format!("wiener = {}\n", wiener(&g)?));
    }
    if args.spectrum {
        let s = laplacian_spectrum(&g)?;
        let values: Vec<String> =
            s.values().iter().map(|&mu| render_real(if s.is_zero(mu) { 0.0 } else { mu })).collect();
        out.push_str(&format!("spectrum = {}\n", values.join(" ")));
    }
    if args.trees {
        out.push_str(&format!("trees = {}\n", tree_count(&g)));
    }
    if args.resistance {
        let r = resistance_matrix(&g)?;
        for i in 0..r.order() {
            let row: Vec<String> = r.row(i).iter().map(|&x| render_real(x)).collect();
            out.push_str(&format!("resistance[{i}] = {}\n", row.join(" ")));
        }
    }
    io::stdout().write_all(out.as_bytes())?;
    Ok(0)
}

pub fn verify(args: VerifyArgs) -> Result<u8> {
    let params = TheoremParams {
        n: args.n,
        p: args.p,
        girth: args.girth,
        seed: args.seed,
        samples: args.samples,
        budget: args.budget,
    };
    let report = verify_theorem(&args.theorem, &params)?;
    let text = report.to_text();
    if let Some(path) = &args.out {
        fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    io::stdout().write_all(text.as_bytes())?;
    Ok(report.status.exit_code() as u8)
}

pub fn search(args: SearchArgs) -> Result<u8> {
    let space = &args.space;
    let spec = match (space.deleted_edges, space.trees, space.connected) {
        (Some((n, p)), _, _) => EnumerationSpec::deleted_edges(n, p),
        (_, Some(n), _) => EnumerationSpec::labeled_trees(n),
        (_, _, Some((n, m))) => EnumerationSpec::connected_with_edges(n, m),
        _ => bail!("no enumeration space given"),
    };
    let objective = if args.max { Objective::Max } else { Objective::Min };
    let hits = extremal_search(&spec, objective, args.top, args.budget)?;
    let mut out = String::from("rank\tgraph6\tkf\tcount\n");
    for hit in hits {
        let kf = hit.wiener.map_or_else(|| render_real(hit.kf), |w| w.to_string());
        out.push_str(&format!("{}\t{}\t{}\t{}\n", hit.rank, hit.graph6, kf, hit.count));
    }
    io::stdout().write_all(out.as_bytes())?;
    Ok(0)
}

pub fn table(args: TableArgs) -> Result<u8> {
    let templates = args
        .families
        .iter()
        .map(|t| t.parse::<FamilyTemplate>().with_context(|| format!("family `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    let d = args.delimiter.as_str();
    let mut out = ["family", "n", "closed_form", "numeric_kf", "abs_diff"].join(d);
    out.push('\n');
    let (lo, hi) = args.n;
    for template in &templates {
        let orders: Vec<usize> = if template.depends_on_n() { (lo..=hi).collect() } else { vec![lo] };
        for n in orders {
            match table_row(template, n, d) {
                Ok(row) => out.push_str(&row),
                Err(e) => eprintln!("warning: skipping {template} at n = {n}: {e}"),
            }
        }
    }
    io::stdout().write_all(out.as_bytes())?;
    Ok(0)
}

fn table_row(template: &FamilyTemplate, n: usize, d: &str) -> kirchhoff::Result<String> {
    let spec = template.instantiate(n)?;
    let g = spec.build()?;
    let numeric = kf_spectral(&g)?;
    let (closed, diff) = match spec.closed_form_kf()? {
        Some(q) => (render_exact(&q), format!("{:.3e}", (numeric - to_f64(&q)).abs())),
        None => ("-".to_string(), "-".to_string()),
    };
    Ok(format!("{spec}{d}{}{d}{closed}{d}{}{d}{diff}\n", g.order(), render_real(numeric)))
}
