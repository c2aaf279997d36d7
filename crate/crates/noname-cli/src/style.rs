//! Minimal ANSI styling; `NONAME_COLOR=0` or a non-terminal stdout
//! disables it.

use std::io::IsTerminal;

pub struct Style {
    enabled: bool,
}

impl Style {
    pub fn detect() -> Style {
        let disabled = std::env::var("NONAME_COLOR").is_ok_and(|v| v == "0");
        Style { enabled: !disabled && std::io::stdout().is_terminal() }
    }

    fn wrap(&self, code: &str, s: &str) -> String {
        if self.enabled {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn bold(&self, s: &str) -> String {
        self.wrap("1", s)
    }

    pub fn ok(&self, s: &str) -> String {
        self.wrap("32", s)
    }
}
