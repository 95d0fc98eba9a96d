use std::io::IsTerminal;

use spatial_claims::claims::Status;

/// Colour is used only on a terminal and never when `NO_COLOR` is set.
fn enabled() -> bool {
    std::env::var_os("NO_COLOR").map_or(true, |v| v.is_empty()) && std::io::stdout().is_terminal()
}

fn paint(text: &str, code: &str) -> String {
    if enabled() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn status(s: Status) -> String {
    let text = format!("{:<7}", s.to_string());
    match s {
        Status::Pass => paint(&text, "32"),
        Status::Fail => paint(&text, "1;31"),
        Status::Unknown => paint(&text, "33"),
    }
}

pub fn ok(pass: bool) -> String {
    if pass {
        paint("pass", "32")
    } else {
        paint("FAIL", "1;31")
    }
}
