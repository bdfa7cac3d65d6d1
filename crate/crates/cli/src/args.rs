use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use typegraph_core::{Card, Position, Triple};
use typegraph_hexcharts::lattice::Site;
use typegraph_hexcharts::Variant;

#[derive(Parser, Debug)]
#[command(name = "typegraph", version, about = "Graphs of multicolored K4-types and their planar charts")]
pub struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads (capped by TYPEGRAPH_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// File of `key=value` lines mirroring long flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Txt,
    Dot,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Single cards: validity, canonical form, ν sets.
    #[command(subcommand)]
    Card(CardCmd),
    /// K3-type graphs G_{n,3} and integer windows.
    #[command(subcommand)]
    K3(K3Cmd),
    /// K4-type graphs, neighbors, CTs and reduction mod n.
    #[command(subcommand)]
    K4(K4Cmd),
    /// Canonical hexagons through a card.
    #[command(subcommand)]
    Hex(HexCmd),
    /// Charts t(a|d): generation, folds, duals, partners.
    #[command(subcommand)]
    Chart(ChartCmd),
    /// The i-atlas mod n with its hexagonal representation.
    Atlas(AtlasArgs),
    /// SVG pictures of charts and atlases.
    #[command(subcommand)]
    Render(RenderCmd),
    /// Metrics, scans, census and bounds over ranges of n.
    #[command(subcommand)]
    Analyze(AnalyzeCmd),
    /// Circulant graphs with generators round(n^(i/m)).
    #[command(subcommand)]
    Lambda(LambdaCmd),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Ring {
    /// Work modulo n; integers when absent.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum CardCmd {
    /// Validity, canonical form, orbit and realization of a card.
    Show {
        card: Card,
        #[command(flatten)]
        ring: Ring,
    },
    /// Is the triple a K3-type, and how it compares with another.
    K3 {
        triple: Triple,
        #[arg(long)]
        than: Option<Triple>,
        #[command(flatten)]
        ring: Ring,
    },
    /// Color of the CT side joining corners f and g, centered at a, with
    /// third corner h.
    Edge {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        h: u32,
        #[command(flatten)]
        ring: Ring,
    },
    /// Colors z with {x, y, z} a K3-type.
    Nu {
        #[arg(long)]
        x: u32,
        #[arg(long)]
        y: u32,
        #[command(flatten)]
        ring: Ring,
    },
}

#[derive(Subcommand, Debug)]
pub enum K3Cmd {
    /// K3-types of Z_n and their graphs.
    Build {
        #[arg(long)]
        n: u32,
    },
    /// Integer K3-types up to a color cap, optionally reduced mod n.
    Window {
        #[arg(long)]
        cap: u32,
        #[arg(long)]
        reduce: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum K4Cmd {
    /// G_{n,4}, or the integer window up to a color cap.
    Build {
        #[arg(long, conflicts_with = "cap", required_unless_present = "cap")]
        n: Option<u32>,
        #[arg(long)]
        cap: Option<u32>,
        /// Keep only TMC types.
        #[arg(long)]
        tmc: bool,
    },
    /// The six neighbors of a card, with the new color h.
    Neighbors {
        card: Card,
        #[command(flatten)]
        ring: Ring,
        /// Swap in the second face instead of the first.
        #[arg(long)]
        second: bool,
    },
    /// The canonical triangles through a card.
    Cts {
        card: Card,
        #[command(flatten)]
        ring: Ring,
    },
    /// Entrywise reduction mod n.
    Reduce {
        card: Card,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum HexCmd {
    /// Trace the hexagon of a card from an anchor.
    Trace {
        card: Card,
        #[arg(long, default_value = "a")]
        anchor: Position,
        #[arg(long, default_value = "bdf")]
        variant: Variant,
        #[command(flatten)]
        ring: Ring,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ChartArgs {
    #[arg(long)]
    pub t: Card,
    /// Central color.
    #[arg(long)]
    pub a: u32,
    /// Color opposite the center.
    #[arg(long)]
    pub d: u32,
    #[arg(long, default_value_t = 6)]
    pub radius: i64,
    #[command(flatten)]
    pub ring: Ring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SiteArg(pub Site);

impl FromStr for SiteArg {
    type Err = String;

    /// `dir,q,r`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| format!("bad site {s:?}, expected dir,q,r")))
            .collect::<Result<_, _>>()?;
        match parts[..] {
            [d, q, r] if (0..3).contains(&d) => Ok(SiteArg(Site::new(d as usize, q, r))),
            _ => Err(format!("bad site {s:?}, expected dir,q,r with dir in 0..3")),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum ChartCmd {
    /// The chart through t with central color a.
    Build(ChartArgs),
    /// The chart folded along its symmetry axes.
    Fold(ChartArgs),
    /// Compare with the chart centered at d.
    Dual(ChartArgs),
    /// The partner vertex of a site.
    Partner {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, default_value = "0,0,0")]
        site: SiteArg,
    },
    /// The chart seeded with exactly this card.
    FromCard {
        card: Card,
        #[arg(long, default_value_t = 6)]
        radius: i64,
        #[command(flatten)]
        ring: Ring,
    },
    /// Colors along a kagome line with alternating colors f, g.
    Line {
        #[arg(long)]
        f: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        a: u32,
        #[arg(long, default_value_t = 8)]
        len: usize,
    },
}

#[derive(Args, Debug)]
pub struct AtlasArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub i: u32,
    #[arg(long)]
    pub radius: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum RenderCmd {
    /// SVG of a chart, optionally with its axes and loops.
    Chart {
        #[command(flatten)]
        chart: ChartArgs,
        /// Draw axes and loops.
        #[arg(long)]
        fold: bool,
    },
    /// SVG of the hexagonal representation of T(n,1).
    Tau(AtlasArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Bounds,
    Auto,
}

#[derive(Subcommand, Debug)]
pub enum AnalyzeCmd {
    /// Vertex counts, diameters and ratios per n.
    Metrics {
        #[arg(long)]
        range: Orders,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Components of the TMC subgraph per n.
    Conjecture {
        #[arg(long)]
        range: Orders,
    },
    /// Isolated TMC vertices against their closed forms.
    Isolated {
        #[arg(long)]
        n: u32,
    },
    /// Number of components of G_{n,4} per n.
    Connectivity {
        #[arg(long)]
        range: Orders,
    },
    /// Canonical triangles and hexagons at degree-6 vertices.
    Theorem1 {
        #[arg(long)]
        n: u32,
    },
    /// Diameter scaling with the witness and base eccentricity.
    Scaling {
        #[arg(long)]
        range: Orders,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Vertex ceiling and diameter bands over a range.
    Bounds {
        #[arg(long)]
        range: Orders,
    },
    /// Size and diameter constants of G_{n,3}.
    G3 {
        #[arg(long)]
        range: Orders,
    },
    /// Atlas counts and scaling over primes.
    Shadow {
        #[arg(long)]
        range: Orders,
    },
}

#[derive(Subcommand, Debug)]
pub enum LambdaCmd {
    /// Exact diameter.
    Diam {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        n: u64,
    },
    /// Diameters over several orders with the log-log slope.
    Sweep {
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// Orders as a list or `a..b`.
        #[arg(long, conflicts_with = "powers", required_unless_present = "powers")]
        ns: Option<Numbers>,
        /// Bases k of the orders k^m, as a list or `a..b`.
        #[arg(long)]
        powers: Option<Numbers>,
    },
    /// Greedy path between two residues.
    Greedy {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
    },
    /// Greedy lengths against BFS distances on random pairs.
    Check {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Integers given as `a,b,c` or an inclusive `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numbers(pub Vec<u64>);

impl FromStr for Numbers {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad list {s:?}, expected a,b,c or a..b");
        let values: Vec<u64> = match s.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi): (u64, u64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
                (lo..=hi).collect()
            }
            None => s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?,
        };
        if values.is_empty() {
            return Err(format!("empty list {s:?}"));
        }
        Ok(Numbers(values))
    }
}

/// Orders `n`: a list, or the odd values of an inclusive `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orders(pub Vec<u32>);

impl FromStr for Orders {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Numbers(values) = s.parse()?;
        let values: Vec<u32> = if s.contains("..") {
            values.into_iter().filter(|v| v % 2 == 1).map(|v| v as u32).collect()
        } else {
            values.into_iter().map(|v| v as u32).collect()
        };
        if values.is_empty() {
            return Err(format!("no odd orders in {s:?}"));
        }
        Ok(Orders(values))
    }
}
