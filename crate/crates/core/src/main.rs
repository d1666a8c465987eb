use clap::{Parser, Subcommand};
use serde::Serialize;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use topogame::game::{solve, Caps, GameKind, Player, Stats, Strategy};
use topogame::lab::{run_suite, translate_b1, Direction, Suite};
use topogame::session::{play_session, SessionEnd};
use topogame::topology::enumerate_topologies;
use topogame::{Error, FiniteSpace, PointSet, Result};

/// Selection games on finite topological spaces.
///
/// A <SPACE> is a JSON file `{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}` or an
/// enumerator spec `enum:n=3` (every labeled topology on 3 points) or
/// `enum:n=3#5` (the sixth one).
#[derive(Parser)]
#[command(name = "topogame", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print opens, clopens, components and quasi-components.
    Analyze { space: String },
    /// Solve a game and print the winner with a witness strategy.
    Solve {
        space: String,
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_parser = parse_caps, default_value = "")]
        caps: Caps,
    },
    /// Run a check suite over all spaces up to a size; exits 1 on failure.
    Check {
        /// duality, zerodim, b1, b3, extraction, th314 or all
        suite: Suite,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_parser = parse_caps, default_value = "")]
        caps: Caps,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play one side against the solver.
    Play {
        space: String,
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        role: Player,
        #[arg(long)]
        horizon: usize,
        /// Save the finished play as JSON.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Translate a strategy between the point-clopen and the
    /// quasi-component-clopen game.
    Translate {
        strategy: PathBuf,
        #[arg(long)]
        direction: Direction,
        #[arg(long)]
        space: String,
        /// Defaults to one past the last round the strategy mentions.
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, value_parser = parse_caps, default_value = "")]
        caps: Caps,
    },
}

/// `covers=N,states=N,depth=N`, any subset; unnamed caps keep defaults.
fn parse_caps(text: &str) -> std::result::Result<Caps, String> {
    let mut caps = Caps::default();
    for part in text.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        let value: usize = value
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| format!("cap {key} must be a positive integer"))?;
        match key {
            "covers" => caps.covers = value,
            "states" => caps.states = value,
            "depth" => caps.depth = value,
            _ => return Err(format!("unknown cap {key:?}")),
        }
    }
    Ok(caps)
}

fn load_spaces(source: &str) -> Result<Vec<(String, FiniteSpace)>> {
    let Some(spec) = source.strip_prefix("enum:") else {
        let text = std::fs::read_to_string(source)?;
        return Ok(vec![(source.to_string(), FiniteSpace::from_json(&text)?)]);
    };
    let bad = || {
        Error::Format(format!(
            "bad enumerator spec {source:?}; expected enum:n=N[#I]"
        ))
    };
    let spec = spec.strip_prefix("n=").ok_or_else(bad)?;
    let (n, index) = match spec.split_once('#') {
        Some((n, i)) => (n, Some(i.parse::<usize>().map_err(|_| bad())?)),
        None => (spec, None),
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    let spaces = enumerate_topologies(n)?;
    let tagged = spaces
        .into_iter()
        .enumerate()
        .map(|(i, s)| (format!("n{n}#{i}"), s));
    match index {
        None => Ok(tagged.collect()),
        Some(i) => tagged
            .into_iter()
            .nth(i)
            .map(|t| vec![t])
            .ok_or_else(|| Error::Format(format!("{source}: no space with that index"))),
    }
}

fn load_one_space(source: &str) -> Result<FiniteSpace> {
    let mut spaces = load_spaces(source)?;
    if spaces.len() != 1 {
        return Err(Error::Format(format!(
            "{source} names {} spaces; pick one with #index",
            spaces.len()
        )));
    }
    Ok(spaces.remove(0).1)
}

#[derive(Serialize)]
struct Analysis {
    space_id: String,
    n: usize,
    opens: Vec<PointSet>,
    clopens: usize,
    clopen_sets: Vec<PointSet>,
    components: Vec<PointSet>,
    quasi_components: usize,
    quasi_component_blocks: Vec<PointSet>,
    zero_dimensional: bool,
}

fn analyze(id: String, space: &FiniteSpace) -> Result<Analysis> {
    let clopen_sets = space.clopen_algebra().sets;
    let (components, quasi) = if space.n() == 0 {
        (Vec::new(), Vec::new())
    } else {
        (space.components()?.blocks, space.quasi_components()?.blocks)
    };
    Ok(Analysis {
        space_id: id,
        n: space.n(),
        opens: space.opens().to_vec(),
        clopens: clopen_sets.len(),
        clopen_sets,
        components,
        quasi_components: quasi.len(),
        quasi_component_blocks: quasi,
        zero_dimensional: space.is_zero_dimensional(),
    })
}

#[derive(Serialize)]
struct SolveLine<'a> {
    space_id: String,
    game: &'a str,
    horizon: usize,
    winner: Player,
    stats: Stats,
    witness: Strategy,
}

fn write_line<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn threads() -> Result<usize> {
    match std::env::var("TOPOGAME_THREADS") {
        Err(_) => Ok(0),
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Format(format!("TOPOGAME_THREADS must be a count, got {v:?}"))),
    }
}

const MAX_HORIZON: usize = 64;

fn check_horizon(k: usize) -> Result<()> {
    if k > MAX_HORIZON {
        return Err(Error::Format(format!("horizon {k} exceeds {MAX_HORIZON}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Analyze { space } => {
            for (id, s) in load_spaces(&space)? {
                write_line(&mut out, &analyze(id, &s)?)?;
            }
        }
        Command::Solve {
            space,
            game,
            horizon,
            caps,
        } => {
            check_horizon(horizon)?;
            for (id, s) in load_spaces(&space)? {
                let verdict = solve(&game.build(&s, horizon, &caps)?)?;
                let line = SolveLine {
                    space_id: id,
                    game: game.name(),
                    horizon,
                    winner: verdict.winner,
                    stats: verdict.stats,
                    witness: verdict.witness,
                };
                write_line(&mut out, &line)?;
            }
        }
        Command::Check {
            suite,
            nmax,
            caps,
            out: path,
        } => {
            let lines = run_suite(suite, nmax, &caps, threads()?)?;
            let mut sink: Box<dyn Write> = match path {
                Some(p) => Box::new(BufWriter::new(std::fs::File::create(p)?)),
                None => Box::new(&mut out),
            };
            for line in &lines {
                write_line(&mut sink, line)?;
            }
            sink.flush()?;
            if lines.iter().any(|l| !l.pass) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Play {
            space,
            game,
            role,
            horizon,
            transcript,
        } => {
            check_horizon(horizon)?;
            let s = load_one_space(&space)?;
            let g = game.build(&s, horizon, &Caps::default())?;
            let stdin = io::stdin();
            match play_session(&g, role, stdin.lock(), &mut out)? {
                SessionEnd::Aborted => {
                    out.flush()?;
                    return Ok(ExitCode::from(130));
                }
                SessionEnd::Finished(t) => {
                    if let Some(p) = transcript {
                        std::fs::write(p, serde_json::to_string_pretty(&t)?)?;
                    }
                }
            }
        }
        Command::Translate {
            strategy,
            direction,
            space,
            horizon,
            caps,
        } => {
            let s = load_one_space(&space)?;
            let input = Strategy::from_json(&std::fs::read_to_string(strategy)?)?;
            let k = horizon
                .or_else(|| input.table.keys().map(|c| c.round + 1).max())
                .unwrap_or(s.n());
            check_horizon(k)?;
            let report = translate_b1(direction, &input, &s, k, &caps)?;
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
    }
}
