use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::analytic::{BernoulliIdentityId, Family, ZetaFormulaId};
use crate::conjecture::Format;

#[derive(Debug, Parser)]
#[command(
    name = "ceuler",
    version,
    about = "Congruential Euler numbers: tables, congruence checks, period scans"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached tables.
    #[arg(long, global = true, env = "CEULER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print E_{Nn} for n = 0..=n_max.
    Compute(ComputeArgs),
    /// Check a proved congruence over a finite range.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Look for eventual periods of E_{mpn} mod p^r.
    Scan(ScanArgs),
    /// Zeta and Bernoulli identities, zeros of H, special values, radius.
    #[command(subcommand)]
    Identities(IdentitiesCommand),
    /// Manage the table cache.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long = "N")]
    pub step: u64,
    #[arg(long)]
    pub j: u64,
    #[arg(long)]
    pub n_max: Option<usize>,
}

/// Inclusive index range: `a..b`, `a..=b` or a single `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("pair {s:?} must look like n:m"))?;
    Ok((
        a.trim().parse().map_err(|_| format!("bad pair {s:?}"))?,
        b.trim().parse().map_err(|_| format!("bad pair {s:?}"))?,
    ))
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// v_p(E_{pn} + E_{pn+p^r}) >= r + δ(j).
    Main {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = parse_range, default_value = "0..20")]
        n: RangeInclusive<usize>,
    },
    /// W_{3n} ≡ W_{3m} mod 3^{k+1} when 3n ≡ 3m mod 2·3^k.
    KomatsuLiu {
        #[arg(long)]
        k: u32,
        /// Explicit pairs `n:m`, comma separated.
        #[arg(long, value_parser = parse_pair, value_delimiter = ',')]
        pairs: Vec<(usize, usize)>,
        /// Pair every n in the range with n + 2·3^{k-1}.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
    },
    /// E^{(p^k m,0)} ≡ E^{(p^{k-1} m,0)} mod p^{3k-ε}.
    Gessel {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = parse_range, default_value = "0..10")]
        n: RangeInclusive<usize>,
    },
    /// Anti-periodicity of E^{(p^k,0)} for r <= 5 - ε.
    PrimePower {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = parse_range, default_value = "0..10")]
        n: RangeInclusive<usize>,
    },
    /// Period 2^{r+1} of E^{(4,0)} mod 2^r.
    #[command(name = "special-40")]
    Special40 {
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = parse_range, default_value = "0..10")]
        n: RangeInclusive<usize>,
    },
    /// Eventual period 2·3^r of E^{(6,0)} mod 3^r.
    #[command(name = "special-60")]
    Special60 {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Closed forms of X_m in T = H^{(p)}/H.
    LemmaXm {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// Valuations of the series built from H_{6,0}.
    LemmaSeries {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, required_unless_present_any = ["appendix_b", "grid"])]
    pub p: Option<u64>,
    #[arg(long, required_unless_present_any = ["appendix_b", "grid"])]
    pub m: Option<u64>,
    #[arg(long, required_unless_present_any = ["appendix_b", "grid"])]
    pub j: Option<u64>,
    #[arg(long, required_unless_present_any = ["appendix_b", "grid"])]
    pub r: Option<u32>,
    /// Window length in table indices (default max(3·q·p^r/(mp), 30)).
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Rerun the published table, including the ambiguous rows.
    #[arg(long, conflicts_with_all = ["p", "m", "j", "r", "grid"])]
    pub appendix_b: bool,
    /// File of `p m j r` lines (`#` starts a comment).
    #[arg(long, conflicts_with_all = ["p", "m", "j", "r"])]
    pub grid: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum IdentitiesCommand {
    /// The eight zeta/lambda displays as exact π-coefficients.
    Zeta {
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        /// Restrict to one display.
        #[arg(long, value_parser = |s: &str| s.parse::<ZetaFormulaId>().map_err(|e| e.to_string()))]
        id: Option<ZetaFormulaId>,
    },
    /// The six Bernoulli displays.
    Bernoulli {
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        #[arg(long, value_parser = |s: &str| s.parse::<BernoulliIdentityId>().map_err(|e| e.to_string()))]
        id: Option<BernoulliIdentityId>,
    },
    /// Newton-polish the closed-form zeros of H.
    Zeros {
        /// `4,0`, `4,2` or `6,3`; all three when omitted.
        #[arg(long, value_parser = |s: &str| s.parse::<Family>().map_err(|e| e.to_string()))]
        family: Option<Family>,
        /// Zeros per family, in order of (k, l).
        #[arg(long, default_value_t = 3)]
        count: usize,
        /// Also grid-search the disk |z| <= radius·π and count zeros by winding number.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 5.0)]
        radius: f64,
    },
    /// Relations between neighbouring H_{N,j'} at the zeros.
    SpecialValues {
        #[arg(long, value_parser = |s: &str| s.parse::<Family>().map_err(|e| e.to_string()))]
        family: Option<Family>,
        #[arg(long, default_value_t = 3)]
        k_max: u64,
    },
    /// Ratio-test estimate of the nearest zero of H_{N,j}, in units of π.
    Radius {
        #[arg(long = "N")]
        step: u64,
        #[arg(long)]
        j: u64,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Expected value; fail when off by more than --tolerance (relative).
        #[arg(long)]
        expect: Option<f64>,
        #[arg(long, default_value_t = 0.01)]
        tolerance: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheCommand {
    /// List cached tables.
    Inspect,
    /// Delete cached tables.
    Clear,
}
