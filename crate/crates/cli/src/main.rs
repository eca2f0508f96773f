//! `qnd`: validation, invariants, factorisations and verification sweeps for
//! finite quandles.
//!
//! Exit codes: 0 = success / claim holds, 1 = claim fails or a
//! counterexample was found, 2 = usage or input error.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use qnd::fixtures::{builtin_hom, builtin_quandle};
use qnd::formats::{parse_hom_file, parse_quandle, resolve_hom, serialize_quandle};
use qnd::{CliError, Result};
use qnd_core::enumerate::for_each_quandle_sharded;
use qnd_core::sweep::{inline_map, inline_table};
use qnd_core::{
    classify, enumerate_quandles, factor_em, factor_rigid, inner_group, is_connected, pi0,
    pi0_map, pi0_preserves_kernel_pair, pullback, pushout_of_surjections, run_sweep, ClaimId,
    ClassReport, EnumConfig, Hom, Quandle,
};

#[derive(Parser)]
#[command(name = "qnd", version, about = "Finite quandle algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorSystem {
    /// Quotient by the meet of the kernel with the inner orbit congruence.
    Em,
    /// Quotient by the orbit congruence of the inner-map kernel.
    Rigid,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a quandle file against the three axiom families
    Validate { file: String },
    /// Order, involutivity, connectivity, inner group order, components
    Info { file: String },
    /// Component reflection: partition, quotient and unit map
    Pi0 { file: String },
    /// Class membership (E, E1, M, M1) of a surjective homomorphism
    Classify {
        #[arg(long)]
        dom: String,
        #[arg(long)]
        cod: String,
        #[arg(long)]
        hom: String,
    },
    /// Factor a surjective homomorphism through one of the two systems
    Factor {
        #[arg(long, value_enum)]
        system: FactorSystem,
        #[arg(long)]
        dom: String,
        #[arg(long)]
        cod: String,
        #[arg(long)]
        hom: String,
    },
    /// Pullback of two homomorphisms with a common codomain
    Pullback {
        /// Left leg as three files: DOM COD HOM
        #[arg(long, num_args = 3, value_names = ["DOM", "COD", "HOM"])]
        left: Vec<String>,
        /// Right leg as three files: DOM COD HOM
        #[arg(long, num_args = 3, value_names = ["DOM", "COD", "HOM"])]
        right: Vec<String>,
    },
    /// Pushout of two surjections with a common domain
    Pushout {
        /// First surjection as three files: DOM COD HOM
        #[arg(short, num_args = 3, value_names = ["DOM", "COD", "HOM"])]
        f: Vec<String>,
        /// Second surjection as three files: DOM COD HOM
        #[arg(short, num_args = 3, value_names = ["DOM", "COD", "HOM"])]
        g: Vec<String>,
    },
    /// Enumerate quandles of a given order
    Enumerate {
        #[arg(short = 'n', long = "order")]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count_only: bool,
        /// Lift the order bound (streams raw tables; no isomorphism reduction)
        #[arg(long)]
        allow_large: bool,
        /// Restrict the first column to one residue class, as INDEX/COUNT
        #[arg(long, requires = "allow_large")]
        shard: Option<String>,
    },
    /// Run a verification sweep for a named claim
    ///
    /// Claims: permutability, factor-em, factor-rigid, inclusions,
    /// cancellation-e, cancellation-e1, admissibility, special-pushout,
    /// induced-image, characterizations, orthogonality, kernel-pair-preservation.
    Verify {
        claim: String,
        #[arg(short = 'n', long = "max-order")]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per order above the exhaustive cutoff
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Sweep all labeled tables instead of one per isomorphism class
        #[arg(long)]
        raw: bool,
    },
    /// Reproduce the built-in worked examples and counterexamples
    PaperExamples,
}

fn main() {
    // die quietly when the consumer closes the pipe
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    };
    std::process::exit(code);
}

fn load_quandle(arg: &str) -> Result<Quandle> {
    let path = Path::new(arg);
    if path.exists() {
        return parse_quandle(&std::fs::read_to_string(path)?);
    }
    let stem = arg.strip_suffix(".qnd").unwrap_or(arg);
    builtin_quandle(stem).ok_or_else(|| {
        CliError::Usage(format!(
            "`{arg}` is neither a readable file nor a built-in quandle"
        ))
    })
}

fn load_hom(arg: &str, dom: &Quandle, cod: &Quandle) -> Result<Hom> {
    let path = Path::new(arg);
    if path.exists() {
        let file = parse_hom_file(&std::fs::read_to_string(path)?)?;
        return resolve_hom(&file, dom, cod);
    }
    let stem = arg.strip_suffix(".qhom").unwrap_or(arg);
    let hom = builtin_hom(stem).ok_or_else(|| {
        CliError::Usage(format!(
            "`{arg}` is neither a readable file nor a built-in homomorphism"
        ))
    })?;
    if hom.dom() != dom || hom.cod() != cod {
        return Err(CliError::Usage(format!(
            "built-in `{stem}` does not match the given domain/codomain"
        )));
    }
    Ok(hom)
}

fn load_leg(args: &[String]) -> Result<Hom> {
    let [dom, cod, hom] = args else {
        return Err(CliError::Usage("expected DOM COD HOM".into()));
    };
    let dom = load_quandle(dom)?;
    let cod = load_quandle(cod)?;
    load_hom(hom, &dom, &cod)
}

fn yn(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn class_line(report: &ClassReport) -> String {
    format!(
        "E:{} E1:{} M:{} M1:{}",
        yn(report.in_e),
        yn(report.in_e1),
        yn(report.in_m),
        yn(report.in_m1)
    )
}

fn witness_lines(report: &ClassReport) -> String {
    let mut out = String::new();
    if let Some((a, b)) = report.e_witness {
        let _ = writeln!(out, "E witness: pair ({a},{b}) identified across components");
    }
    if let Some(w) = &report.e1_witness {
        let (a, b) = w.pair;
        match (&w.link, &w.link_image) {
            (Some(link), Some(image)) => {
                let _ = writeln!(
                    out,
                    "E1 witness: pair ({a},{b}) linked by {link}, image {image} != id"
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "E1 witness: pair ({a},{b}) not linked by any kernel element"
                );
            }
        }
    }
    if let Some((a, b)) = report.m_witness {
        let _ = writeln!(
            out,
            "M witness: pair ({a},{b}) identified inside a component"
        );
    }
    if let Some(p) = &report.m1_witness {
        let _ = writeln!(out, "M1 witness: kernel element {p}");
    }
    out
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(Path::new(&file))?;
            match parse_quandle(&text) {
                Ok(q) => {
                    println!("valid quandle of order {}", q.order());
                    Ok(0)
                }
                Err(CliError::Core(err)) => {
                    println!("invalid: {err}");
                    Ok(1)
                }
                Err(err) => Err(err),
            }
        }
        Command::Info { file } => {
            let q = load_quandle(&file)?;
            let inn = inner_group(&q)?;
            let components = pi0(&q)?.components;
            println!("order: {}", q.order());
            println!("involutive: {}", yn(q.is_involutive()));
            println!("connected: {}", yn(is_connected(&q)?));
            println!("inner group order: {}", inn.order());
            println!("components: {components}");
            Ok(0)
        }
        Command::Pi0 { file } => {
            let q = load_quandle(&file)?;
            let result = pi0(&q)?;
            println!("components: {}", result.components);
            print!("quotient:\n{}", serialize_quandle(&result.quotient));
            println!("unit: {}", inline_map(result.unit.map()));
            Ok(0)
        }
        Command::Classify { dom, cod, hom } => {
            let dom = load_quandle(&dom)?;
            let cod = load_quandle(&cod)?;
            let hom = load_hom(&hom, &dom, &cod)?;
            let report = classify(&hom)?;
            println!("{}", class_line(&report));
            print!("{}", witness_lines(&report));
            Ok(0)
        }
        Command::Factor {
            system,
            dom,
            cod,
            hom,
        } => {
            let dom = load_quandle(&dom)?;
            let cod = load_quandle(&cod)?;
            let hom = load_hom(&hom, &dom, &cod)?;
            let fac = match system {
                FactorSystem::Em => factor_em(&hom)?,
                FactorSystem::Rigid => factor_rigid(&hom)?,
            };
            print!("middle:\n{}", serialize_quandle(&fac.middle));
            println!("first: {}", inline_map(fac.first.map()));
            println!("second: {}", inline_map(fac.second.map()));
            println!("first classes: {}", class_line(&classify(&fac.first)?));
            println!("second classes: {}", class_line(&classify(&fac.second)?));
            Ok(0)
        }
        Command::Pullback { left, right } => {
            let fbar = load_leg(&left)?;
            let gbar = load_leg(&right)?;
            let pb = pullback(&fbar, &gbar)?;
            print!("apex:\n{}", serialize_quandle(&pb.apex));
            let pairs: Vec<String> = pb
                .pairs
                .iter()
                .map(|&(a, b)| format!("({a},{b})"))
                .collect();
            println!("pairs: {}", pairs.join(" "));
            println!("p1: {}", inline_map(pb.p1.map()));
            println!("p2: {}", inline_map(pb.p2.map()));
            Ok(0)
        }
        Command::Pushout { f, g } => {
            let f = load_leg(&f)?;
            let g = load_leg(&g)?;
            let (apex, fbar, gbar) = pushout_of_surjections(&f, &g)?;
            print!("apex:\n{}", serialize_quandle(&apex));
            println!("fbar: {}", inline_map(fbar.map()));
            println!("gbar: {}", inline_map(gbar.map()));
            Ok(0)
        }
        Command::Enumerate {
            order,
            up_to_iso,
            count_only,
            allow_large,
            shard,
        } => {
            if allow_large {
                if up_to_iso {
                    return Err(CliError::Usage(
                        "--allow-large streams raw tables; drop --up-to-iso".into(),
                    ));
                }
                let (index, count) = match shard.as_deref() {
                    None => (0, 1),
                    Some(spec) => parse_shard(spec)?,
                };
                let mut n = 0u64;
                for_each_quandle_sharded(order, index, count, &mut |q| {
                    n += 1;
                    if !count_only {
                        println!("{}", inline_table(q));
                    }
                });
                if count_only {
                    println!("{n}");
                }
                return Ok(0);
            }
            let quandles = enumerate_quandles(order, up_to_iso)?;
            if count_only {
                println!("{}", quandles.len());
            } else {
                for q in &quandles {
                    println!("{}", inline_table(q));
                }
            }
            Ok(0)
        }
        Command::Verify {
            claim,
            max_order,
            seed,
            samples,
            raw,
        } => {
            let claim = ClaimId::from_str(&claim)?;
            let cfg = EnumConfig {
                max_order,
                up_to_iso: !raw,
                sample_budget: samples,
                seed,
            };
            let report = run_sweep(claim, &cfg)?;
            print!("{report}");
            Ok(if report.holds { 0 } else { 1 })
        }
        Command::PaperExamples => paper_examples(),
    }
}

fn parse_shard(spec: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = spec.split('/').collect();
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad shard spec `{spec}`, expected INDEX/COUNT")))
    };
    match parts[..] {
        [i, c] => {
            let (i, c) = (parse(i)?, parse(c)?);
            if c == 0 || i >= c {
                return Err(CliError::Usage(format!(
                    "shard index {i} out of range for count {c}"
                )));
            }
            Ok((i, c))
        }
        _ => Err(CliError::Usage(format!(
            "bad shard spec `{spec}`, expected INDEX/COUNT"
        ))),
    }
}

struct Checker {
    failed: bool,
}

impl Checker {
    fn check(&mut self, label: &str, ok: bool) {
        if ok {
            println!("  {label}: ok");
        } else {
            println!("  {label}: FAILED");
            self.failed = true;
        }
    }
}

/// Reruns the two built-in counterexamples end to end.
fn paper_examples() -> Result<i32> {
    use qnd_core::fixtures::{a4, a5, b2, f4, f5, g5, s4, x4};
    let mut c = Checker { failed: false };

    println!("split kernel-pair example (A4 -> B2)");
    let f4 = f4();
    c.check("f4 is surjective", f4.is_surjective());
    c.check(
        "f4 is split by s4",
        f4.compose(&s4())? == Hom::identity(&b2()),
    );
    c.check("inner group of A4 has order 2", inner_group(&a4())?.order() == 2);
    let components = pi0(&a4())?.components;
    c.check(
        "A4 has components {0 1 | 2 | 3}",
        components.to_string() == "{0 1 | 2 | 3}",
    );
    let kp = pullback(&f4, &f4)?;
    let upstairs = pi0(&kp.apex)?;
    c.check(
        "kernel pair of f4 has 6 components",
        upstairs.components.num_classes() == 6,
    );
    let p0f4 = pi0_map(&f4)?;
    let downstairs = pullback(&p0f4, &p0f4)?;
    c.check(
        "kernel pair of the component map has 5 elements",
        downstairs.apex.order() == 5,
    );
    c.check(
        "the component reflection does not preserve this kernel pair",
        !pi0_preserves_kernel_pair(&f4)?,
    );
    let idx_aa = kp.pairs.iter().position(|&p| p == (0, 0)).unwrap();
    let idx_ab = kp.pairs.iter().position(|&p| p == (0, 1)).unwrap();
    let split_upstairs = !upstairs.components.same_class(idx_aa, idx_ab);
    let p1_img = pi0_map(&kp.p1)?;
    let p2_img = pi0_map(&kp.p2)?;
    let up_aa = (
        p1_img.apply(upstairs.unit.apply(idx_aa)),
        p2_img.apply(upstairs.unit.apply(idx_aa)),
    );
    let up_ab = (
        p1_img.apply(upstairs.unit.apply(idx_ab)),
        p2_img.apply(upstairs.unit.apply(idx_ab)),
    );
    c.check(
        "[(a,b)] and [(a,a)] differ upstairs but agree downstairs",
        split_upstairs && up_aa == up_ab,
    );

    println!("rigid left-cancellation example (A5 -> X4 -> M3)");
    let g5 = g5();
    let f5 = f5();
    let composite = f5.compose(&g5)?;
    c.check("f5 o g5 is the unit of A5", composite == pi0(&a5())?.unit);
    c.check("f5 is the unit of X4", f5 == pi0(&x4())?.unit);
    let rg = classify(&g5)?;
    c.check(
        "classify(g5) = E:yes E1:no M:no M1:yes",
        class_line(&rg) == "E:yes E1:no M:no M1:yes",
    );
    let witness_ok = match &rg.e1_witness {
        Some(w) => {
            w.pair == (0, 1)
                && w.link.as_ref() == Some(&a5().right_translation(2))
                && w.link_image.as_ref() == Some(&x4().right_translation(1))
        }
        None => false,
    };
    c.check(
        "E1 witness: (a,b) linked only by the translation by c, image the translation by y",
        witness_ok,
    );
    if let Some(w) = &rg.e1_witness {
        if let (Some(link), Some(image)) = (&w.link, &w.link_image) {
            println!("  witness detail: pair (0,1), link {link}, image {image}");
        }
    }
    c.check("f5 is in E1", classify(&f5)?.in_e1);
    c.check("f5 o g5 is in E1", classify(&composite)?.in_e1);
    c.check(
        "conclusion: E1 is not closed under left cancellation",
        !rg.in_e1 && classify(&f5)?.in_e1 && classify(&composite)?.in_e1,
    );

    Ok(if c.failed { 1 } else { 0 })
}
