//! `ctextile` command line. Exit codes: 0 success, 1 domain error (one
//! `error:` line on stderr), 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ctextile::abelian::{k_groups_textile, FgAbelianGroup, IntMatrix, Split};
use ctextile::symbolic_matrix::{
    find_specifications, from_integer_matrix, parse_int_matrix, validate, SymbolicMatrix,
};
use ctextile::textile::{
    propagate_from_diagonal, render_ascii, render_svg, DiagonalWord, Patch, SpecChoice,
    TextileError, TextileSystem,
};

#[derive(Parser, Debug)]
#[command(
    name = "ctextile",
    version,
    about = "Textile systems from commuting matrices: tiles, tilings, K-groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a symbolic (.smx) or integer (.int) matrix for essentiality and left-resolving
    Validate { matrix: PathBuf },
    /// Search specifications for a pair of commuting integer matrices
    Kappa {
        a: PathBuf,
        b: PathBuf,
        /// List every specification
        #[arg(long, conflicts_with = "limit")]
        all: bool,
        /// Stop after this many specifications
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
    /// List the tiles of the textile system
    Tiles {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        which: Which,
    },
    /// Fill in the band around a diagonal of tiles
    Propagate {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        which: Which,
        #[command(flatten)]
        diag: Diagonal,
        /// Also write the patch as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// K-groups of the textile system
    Ktheory {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        which: Which,
    },
    /// K-groups of the one-vertex system with N and M loops
    Onm {
        #[arg(value_parser = clap::value_parser!(u32).range(2..=64))]
        n: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(2..=64))]
        m: u32,
    },
    /// Draw a propagated patch
    Render {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        which: Which,
        #[command(flatten)]
        diag: Diagonal,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(clap::Args, Debug)]
struct Which {
    /// Index of the specification in search order
    #[arg(long, default_value_t = 0)]
    which: usize,
}

#[derive(clap::Args, Debug)]
struct Diagonal {
    /// Comma-separated tile indices, as numbered by `tiles`
    #[arg(long, value_delimiter = ',', required = true)]
    diagonal: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    radius: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

type Failure = String;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(msg) => {
            let msg = msg.lines().collect::<Vec<_>>().join("; ");
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let mut text = String::new();
    match cmd {
        Command::Validate { matrix } => text = validate_cmd(&matrix)?,
        Command::Kappa { a, b, all, limit } => {
            let (a, b) = (read_int(&a)?, read_int(&b)?);
            check_commuting(&a, &b)?;
            let ma = from_integer_matrix(&a, "e").map_err(s)?;
            let mb = from_integer_matrix(&b, "f").map_err(s)?;
            let found =
                find_specifications(&ma, &mb, if all { usize::MAX } else { limit }).map_err(s)?;
            for (i, k) in found.iter().enumerate() {
                text += &format!("specification {i}\n");
                for line in k.to_string().lines() {
                    text += &format!("  {line}\n");
                }
            }
            text += &format!("{} specification(s) found\n", found.len());
        }
        Command::Tiles { a, b, which } => {
            let sys = system(&a, &b, which.which)?;
            for (i, t) in sys.tiles().iter().enumerate() {
                text += &format!(
                    "{i}: top={} right={} left={} bottom={}\n",
                    t.top, t.right, t.left, t.bottom
                );
            }
            text += &format!("{} tile(s)\n", sys.tiles().len());
        }
        Command::Propagate {
            a,
            b,
            which,
            diag,
            svg,
        } => {
            let p = patch(&system(&a, &b, which.which)?, &diag)?;
            text += &render_ascii(&p);
            text.push('\n');
            text += &format!("{} tile(s), {}x{}\n", p.tile_count(), p.width(), p.height());
            if let Some(path) = svg {
                fs::write(&path, render_svg(&p)).map_err(|e| format!("{}: {e}", path.display()))?;
                text += &format!("wrote {}\n", path.display());
            }
        }
        Command::Ktheory { a, b, which } => {
            let sys = system(&a, &b, which.which)?;
            let k = k_groups_textile(&sys).map_err(s)?;
            text += &format!("K0 = {}\n", k.k0);
            text += &format!("K1 sub = {}\n", k.k1.sub);
            text += &format!("K1 quot = {}\n", k.k1.quot);
            text += &format!("K1 split = {}\n", k.k1.split);
            match &k.k1.total {
                Some(g) => text += &format!("K1 = {g}\n"),
                None => text += "K1 = extension of quot by sub, not determined\n",
            }
        }
        Command::Onm { n, m } => {
            let sys = TextileSystem::onm(n as usize, m as usize).map_err(s)?;
            let k = k_groups_textile(&sys).map_err(s)?;
            let k1 = k.k1.total.clone().filter(|_| k.k1.split == Split::Yes);
            let d = gcd(n - 1, m - 1);
            let expected = FgAbelianGroup::cyclic(d);
            text += &format!("K0 = {}\n", k.k0);
            text += &format!(
                "K1 = {}\n",
                k1.as_ref()
                    .map_or("undetermined".to_string(), |g| g.to_string())
            );
            let ok = k.k0 == expected && k1.as_ref() == Some(&expected);
            text += &format!(
                "expected Z/d, d = gcd({},{}) = {d}: {}\n",
                n - 1,
                m - 1,
                if ok { "OK" } else { "MISMATCH" }
            );
            if !ok {
                out.write_all(text.as_bytes()).map_err(s)?;
                return Err(format!("K-groups of O_{{{n},{m}}} differ from Z/{d}"));
            }
        }
        Command::Render {
            a,
            b,
            which,
            diag,
            format,
        } => {
            let p = patch(&system(&a, &b, which.which)?, &diag)?;
            match format {
                Format::Ascii => {
                    text += &render_ascii(&p);
                    text.push('\n');
                }
                Format::Svg => text += &render_svg(&p),
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(s)
}

fn s(e: impl std::fmt::Display) -> Failure {
    e.to_string()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_int(path: &Path) -> Result<IntMatrix, Failure> {
    parse_int_matrix(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn validate_cmd(path: &Path) -> Result<String, Failure> {
    let m = match path.extension().and_then(|e| e.to_str()) {
        Some("smx") => {
            SymbolicMatrix::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?
        }
        Some("int") => from_integer_matrix(&read_int(path)?, "e")
            .map_err(|e| format!("{}: {e}", path.display()))?,
        _ => return Err(format!("{}: expected a .smx or .int file", path.display())),
    };
    let r = validate(&m);
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!(
        "size: {}\nsymbols: {}\nessential: {}\nleft-resolving: {}\n",
        m.size(),
        m.alphabet().len(),
        yn(r.essential),
        yn(r.left_resolving)
    );
    for v in &r.violations {
        text += &format!("violation: {v}\n");
    }
    text += if r.is_valid() { "valid\n" } else { "invalid\n" };
    Ok(text)
}

fn check_commuting(a: &IntMatrix, b: &IntMatrix) -> Result<(), Failure> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(format!("matrices have sizes {} and {}", a.rows(), b.rows()));
    }
    let (ab, ba) = (a.mul(b), b.mul(a));
    for i in 0..a.rows() {
        for j in 0..a.rows() {
            if ab[(i, j)] != ba[(i, j)] {
                return Err(format!(
                    "NOT COMMUTING at ({}, {}): AB = {}, BA = {}",
                    i + 1,
                    j + 1,
                    ab[(i, j)],
                    ba[(i, j)]
                ));
            }
        }
    }
    Ok(())
}

fn system(a: &Path, b: &Path, which: usize) -> Result<TextileSystem, Failure> {
    let (a, b) = (read_int(a)?, read_int(b)?);
    check_commuting(&a, &b)?;
    TextileSystem::from_commuting_matrices(&a, &b, SpecChoice::Index(which)).map_err(s)
}

fn patch(sys: &TextileSystem, diag: &Diagonal) -> Result<Patch, Failure> {
    let tiles = diag
        .diagonal
        .iter()
        .map(|&i| {
            sys.tiles().get(i).cloned().ok_or_else(|| {
                format!(
                    "tile index {i} out of range (system has {})",
                    sys.tiles().len()
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    propagate_from_diagonal(sys, &DiagonalWord::new(tiles), diag.radius).map_err(|e| match e {
        TextileError::Incompatible((x, y)) => format!("no tile fits at ({x}, {y})"),
        other => other.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("ctextile").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn onm_output() {
        let (code, out, err) = call(&["onm", "4", "7"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "K0 = Z/3\nK1 = Z/3\nexpected Z/d, d = gcd(3,6) = 3: OK\n"
        );
        assert!(err.is_empty());
    }

    #[test]
    fn errors_are_one_line() {
        let (code, out, err) = call(&["tiles", "/missing/a.int", "/missing/b.int"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("error: /missing/a.int"));
    }

    #[test]
    fn usage_and_help() {
        assert_eq!(call(&["onm", "x", "2"]).0, 2);
        assert_eq!(
            call(&["kappa", "a.int", "b.int", "--all", "--limit", "3"]).0,
            2
        );
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage: ctextile"));
    }

    #[test]
    fn gcd_small() {
        assert_eq!(gcd(2, 4), 2);
        assert_eq!(gcd(9, 6), 3);
        assert_eq!(gcd(5, 0), 5);
    }
}
