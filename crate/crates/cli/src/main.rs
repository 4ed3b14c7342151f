use std::process::ExitCode;

use clap::{Parser, Subcommand};
use knot_tunnels::oracle;
use knot_tunnels::two_bridge::normalize_input;
use knot_tunnels::{
    convert_range, st_convert, two_bridge_slopes, BigInt, Error, Rational, TunnelKind, TunnelParams, TwoBridgeForm,
};

/// Exact slope invariants of knot and link tunnels.
#[derive(Parser, Debug)]
#[command(name = "tunnels", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between the Scharlemann-Thompson invariant and the principal slope.
    Convert {
        /// `q/p` with `q` odd, optionally parenthesized
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Convert every odd q/p with q_lo <= q <= q_hi and gcd(q, p) = 1.
    ConvertRange {
        p: String,
        #[arg(allow_hyphen_values = true)]
        q_lo: String,
        #[arg(allow_hyphen_values = true)]
        q_hi: String,
    },
    /// Cabling slopes of the semisimple tunnel of the 2-bridge knot b/a.
    Slopes {
        /// `b/a` with `b` odd and |b/a| > 1, optionally parenthesized
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Normalize `a` mod `b` and print the slopes of both normal forms
        #[arg(long)]
        both: bool,
    },
    /// Validate and classify a tuple such as "[ 1/3 ], 3, 5/3 ; 0".
    Classify {
        tuple: String,
        #[arg(long)]
        json: bool,
    },
    /// The tuple of the mirror-image tunnel.
    Mirror {
        tuple: String,
        #[arg(long)]
        json: bool,
    },
    /// Linking number of a link tunnel.
    Link {
        tuple: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the brute-force checks and print a summary.
    Selfcheck,
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t).trim()
}

fn rational_arg(s: &str) -> Result<Rational, Error> {
    strip_parens(s).parse()
}

fn integer_arg(s: &str) -> Result<BigInt, Error> {
    let t = strip_parens(s);
    t.parse().map_err(|_| Error::Parse { position: 0, message: format!("expected an integer, found {t:?}") })
}

fn describe(t: &TunnelParams) -> Result<String, Error> {
    let class = t.validate()?;
    let mut out = match class.kind {
        TunnelKind::Semisimple | TunnelKind::Regular => format!("{} {}", class.kind, class.target),
        kind => kind.to_string(),
    };
    if t.is_hopf_link() {
        out.push_str(" (Hopf link)");
    }
    if let Ok(l) = t.linking_number() {
        out.push_str(&format!(", linking number {l}"));
    }
    if class.zero_final_slope {
        out.push_str("; final slope 0 (realizability unsettled)");
    }
    Ok(out)
}

fn json(t: &TunnelParams) -> Result<String, Error> {
    Ok(serde_json::to_string(&t.export()?).expect("export serializes"))
}

fn selfcheck() -> (Vec<String>, bool) {
    let mut lines = Vec::new();
    let mut ok = true;
    let mut line = |name: String, passed: bool, detail: String| {
        ok &= passed;
        lines.push(format!("{} {name}: {detail}", if passed { "PASS" } else { "FAIL" }));
    };

    let u = oracle::check_uniqueness(&oracle::enumerate_even_cfs(4, 6));
    line(
        "even expansion uniqueness (length <= 4, |entry| <= 6)".into(),
        u.passed(),
        format!("{} values, {} expansions, {} violations", u.values, u.expansions, u.violations.len()),
    );
    let r = oracle::random_round_trip_check(10_000, 1_000_000, 1);
    line(
        "even expansion round trip".into(),
        r.failures.is_empty(),
        format!("{} samples, {} failures", r.samples, r.failures.len()),
    );
    let d = oracle::random_word_dictionary_check(200, 1);
    line(
        "continued fraction / matrix dictionary".into(),
        d.passed(),
        format!("{} words, {} violations", d.samples, d.violations.len() + d.determinant_failures),
    );
    let c = oracle::random_conversion_check(1_000, 1_000_000, 1);
    line(
        "invariant conversion involution and modular law".into(),
        c.failures.is_empty(),
        format!("{} samples, {} failures", c.samples, c.failures.len()),
    );
    (lines, ok)
}

fn run(command: Command) -> Result<Vec<String>, Error> {
    Ok(match command {
        Command::Convert { value } => vec![st_convert(&rational_arg(&value)?)?.to_string()],
        Command::ConvertRange { p, q_lo, q_hi } => {
            convert_range(&integer_arg(&p)?, &integer_arg(&q_lo)?, &integer_arg(&q_hi)?)?
                .into_iter()
                .map(|(x, y)| format!("{x}, {y}"))
                .collect()
        }
        Command::Slopes { value, both } => {
            let x = rational_arg(&value)?;
            if both {
                normalize_input(x.numer(), x.denom())?
                    .iter()
                    .map(|f| Ok(format!("{}: {}", f.invariant(), two_bridge_slopes(f)?.slope_line())))
                    .collect::<Result<_, Error>>()?
            } else {
                let form = TwoBridgeForm::new(x)?;
                vec![two_bridge_slopes(&form)?.slope_line()]
            }
        }
        Command::Classify { tuple, json: as_json } => {
            let t: TunnelParams = tuple.parse()?;
            vec![if as_json { json(&t)? } else { describe(&t)? }]
        }
        Command::Mirror { tuple, json: as_json } => {
            let m = tuple.parse::<TunnelParams>()?.mirror();
            vec![if as_json { json(&m)? } else { m.to_string() }]
        }
        Command::Link { tuple, json: as_json } => {
            let t: TunnelParams = tuple.parse()?;
            let l = t.linking_number()?;
            vec![if as_json { json(&t)? } else { l.to_string() }]
        }
        Command::Selfcheck => unreachable!("handled in main"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Selfcheck = cli.command {
        let (lines, ok) = selfcheck();
        for l in lines {
            println!("{l}");
        }
        return if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE };
    }
    match run(cli.command) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::NotNormalized(_) = e {
                eprintln!("hint: pass --both to compute the slopes of both normal forms");
            }
            ExitCode::FAILURE
        }
    }
}
