use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use spatial_claims::claims::{builtin_claims, load_claims, merge_claims, run_claims, Claim};
use spatial_claims::game::{
    detect_period, grundy_board, grundy_sequence, mirror_strategy, nim_heap_equivalent,
    optimal_move, verify_strategy, winner, GrundyMethod, MAX_BOARD_LEN,
};
use spatial_claims::poly::{canonical, enumerate_census, validate, Polygon, TurnWord};
use spatial_claims::render::{self, Canvas};
use spatial_claims::tiling::{
    bn_factorize, tile_any, torus_search, OrientationMode, TilingCertificate,
};
use spatial_claims::{BoardPosition, Seat};

use crate::{style, Failure, Method, TileArgs};

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)
            .map_err(|e| Failure::failed(format!("{}: {e}", parent.display())))?;
    }
    std::fs::write(path, contents).map_err(|e| Failure::failed(format!("{}: {e}", path.display())))
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn check_row(n: u32) -> Result<(), Failure> {
    if n > MAX_BOARD_LEN {
        return Err(Failure::usage(format!(
            "row length {n} exceeds the supported maximum {MAX_BOARD_LEN}"
        )));
    }
    Ok(())
}

pub fn game_winner(spaces: u32) -> Result<(), Failure> {
    check_row(spaces)?;
    println!(
        "{} (grundy={})",
        winner(spaces as usize),
        nim_heap_equivalent(spaces as usize)
    );
    Ok(())
}

pub fn game_grundy(max: usize, detect: bool, json_path: Option<&Path>) -> Result<(), Failure> {
    let values = grundy_sequence(max);
    let line: Vec<String> = values.iter().map(u32::to_string).collect();
    println!("{}", line.join(" "));
    let period = detect.then(|| detect_period(&values)).flatten();
    if detect {
        match &period {
            Some(c) => println!(
                "period {} after preperiod {} (checked k = {}..={})",
                c.period, c.preperiod, c.verified_window.0, c.verified_window.1
            ),
            None => println!("none found"),
        }
    }
    if let Some(path) = json_path {
        let doc = json!({ "max": max, "values": values, "period": period });
        write_file(path, &pretty(&doc))?;
    }
    Ok(())
}

pub fn verify_mirror(max_odd: u32) -> Result<(), Failure> {
    if max_odd == 0 {
        return Err(Failure::usage("--max-odd must be at least 1"));
    }
    check_row(max_odd)?;
    let mut failed = Vec::new();
    let mut checked = 0;
    for n in (1..=max_odd).step_by(2) {
        let strategy = mirror_strategy(n).map_err(|e| Failure::usage(e.to_string()))?;
        let pass = verify_strategy(&strategy, n, Seat::First)
            .map_err(|e| Failure::failed(e.to_string()))?;
        println!("n={n:<3} {}", style::ok(pass));
        checked += 1;
        if !pass {
            failed.push(n);
        }
    }
    println!(
        "{}/{checked} odd rows won by the mirror strategy",
        checked - failed.len()
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::failed(format!(
            "mirror strategy beaten at n = {failed:?}"
        )))
    }
}

pub fn game_board(length: u32, counters: &[u32], svg: Option<&Path>) -> Result<(), Failure> {
    let board = BoardPosition::with_counters(length, counters)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let g = grundy_board(&board, GrundyMethod::SegmentXor);
    println!("board     {board}");
    println!("grundy    {g}");
    println!("to move   {}", if g == 0 { "loses" } else { "wins" });
    match optimal_move(&board) {
        Some(cell) => println!("best move {cell}"),
        None => println!("best move none"),
    }
    if let Some(path) = svg {
        write_file(path, &render::board_figure(&board, &Canvas::default()))?;
    }
    Ok(())
}

pub fn poly_enumerate(
    sides: usize,
    json_path: Option<&Path>,
    svg_dir: Option<&Path>,
) -> Result<(), Failure> {
    let census = enumerate_census(sides).map_err(|e| Failure::usage(e.to_string()))?;
    let polygons: Vec<Polygon> = census
        .classes
        .iter()
        .map(|c| validate(c.word()))
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::failed(e.to_string()))?;
    println!("count {}", polygons.len());
    println!("orientation-preserving {}", census.orientation_preserving);
    for p in &polygons {
        println!("{}", p.turns());
    }
    if let Some(path) = json_path {
        let doc = json!({
            "sides": sides,
            "count": polygons.len(),
            "orientation_preserving": census.orientation_preserving,
            "polygons": polygons.iter().map(Polygon::export).collect::<Vec<_>>(),
        });
        write_file(path, &pretty(&doc))?;
    }
    if let Some(dir) = svg_dir {
        let canvas = Canvas::default();
        for p in &polygons {
            write_file(
                &dir.join(render::polygon_file_name(p)),
                &render::polygon_figure(p, &canvas),
            )?;
        }
    }
    Ok(())
}

fn parse_polygon(word: &str) -> Result<Polygon, Failure> {
    let turns: TurnWord = word
        .parse()
        .map_err(|e: spatial_claims::PolyError| Failure::usage(e.to_string()))?;
    validate(&turns).map_err(|e| Failure::usage(e.to_string()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn poly_props(word: &str, as_json: bool) -> Result<(), Failure> {
    let p = parse_polygon(word)?;
    let export = p.export();
    let canonical = canonical(p.turns()).word().to_string();
    if as_json {
        let doc = json!({
            "valid": true,
            "sides": p.sides(),
            "canonical": canonical,
            "convex": p.is_convex(),
            "alternating": p.is_alternating(),
            "polygon": export,
        });
        print!("{}", pretty(&doc));
        return Ok(());
    }
    let mut out = String::new();
    let _ = writeln!(out, "turns          {}", export.turns);
    let _ = writeln!(out, "valid          yes");
    let _ = writeln!(out, "sides          {}", p.sides());
    let _ = writeln!(out, "area           {}", export.area);
    let _ = writeln!(out, "convex corners {}", export.convex_corners);
    let _ = writeln!(out, "reflex corners {}", export.reflex_corners);
    let _ = writeln!(out, "convex         {}", yes(p.is_convex()));
    let _ = writeln!(out, "alternating    {}", yes(p.is_alternating()));
    let _ = writeln!(out, "symmetry       {}", export.symmetry);
    let _ = writeln!(out, "canonical      {canonical}");
    print!("{out}");
    Ok(())
}

pub fn tile(args: &TileArgs) -> Result<(), Failure> {
    let p = parse_polygon(&args.turns)?;
    let torus = |p: &Polygon| match torus_search(p, args.max_torus, OrientationMode::All8) {
        Ok(found) => Ok(found.map(TilingCertificate::Periodic)),
        Err(e) => Err(e.to_string()),
    };
    let found = match args.method {
        Method::Bn => Ok(bn_factorize(p.steps()).map(TilingCertificate::Translation)),
        Method::Torus => torus(&p),
        Method::Auto => Ok(tile_any(&p, args.max_torus)),
    };
    let cert = match found {
        Ok(Some(cert)) => cert,
        Ok(None) => {
            println!("unknown");
            return Err(Failure::failed("no certificate within the search bounds"));
        }
        Err(reason) => {
            println!("unknown");
            return Err(Failure::failed(reason));
        }
    };
    if !cert.verify(&p) {
        return Err(Failure::failed("certificate failed verification"));
    }
    println!("{}", cert.describe());
    if let Some(path) = &args.cert {
        write_file(path, &pretty(&cert))?;
    }
    if let Some(path) = &args.svg {
        let figure = render::tiling_figure(&cert, &p, args.repeats, &Canvas::default())
            .map_err(|e| Failure::failed(e.to_string()))?;
        write_file(path, &figure)?;
    }
    Ok(())
}

fn read_claims(path: &Path) -> Result<Vec<Claim>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    load_claims(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn claims_run(
    file: Option<&Path>,
    no_builtin: bool,
    out: Option<&Path>,
    md: Option<&Path>,
    timings: bool,
) -> Result<(), Failure> {
    let loaded = file.map(read_claims).transpose()?.unwrap_or_default();
    let base = if no_builtin {
        Vec::new()
    } else {
        builtin_claims()
    };
    let claims = merge_claims(base, loaded).map_err(|e| Failure::usage(e.to_string()))?;
    let report = run_claims(&claims, timings);
    for r in &report.results {
        let evidence = r.evidence.as_ref().map(|e| e.summary()).unwrap_or_default();
        let note = r
            .diagnostics
            .as_deref()
            .map(|d| format!(" [{d}]"))
            .unwrap_or_default();
        println!("{} {:<8} {evidence}{note}", style::status(r.status), r.id);
    }
    let s = report.summary;
    println!(
        "{} claims: {} pass, {} fail, {} unknown",
        s.total, s.pass, s.fail, s.unknown
    );
    if let Some(path) = out {
        write_file(path, &report.to_json())?;
    }
    if let Some(path) = md {
        write_file(path, &report.to_markdown())?;
    }
    if s.all_pass() {
        Ok(())
    } else {
        Err(Failure::failed(format!(
            "{} mismatched and {} undecided claims",
            s.fail, s.unknown
        )))
    }
}

pub fn claims_list() -> Result<(), Failure> {
    print!("{}", pretty(&builtin_claims()));
    Ok(())
}
