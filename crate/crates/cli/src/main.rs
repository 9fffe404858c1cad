//! `mpcs`: encrypt, decrypt and analyse RGB images.
//!
//! Exit codes: 0 success, 2 usage or I/O error, 3 chaotic divergence.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mpcs_core::metrics::{MetricsReport, PairReport};
use mpcs_core::ppm::{read_ppm, write_ppm};
use mpcs_core::randomness::BatteryReport;
use mpcs_core::{decrypt, encrypt, keystream_bits, CipherContainer, KeyConfig, RgbImage};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: mpcs_core::Error,
    },
    #[error(transparent)]
    Core(#[from] mpcs_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(mpcs_core::Error::Divergence { .. }) => 3,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "mpcs", version, about = "Multi-chaotic bit-shuffle image cipher")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encrypt a PPM image into a ciphertext container.
    Encrypt {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the cipher as a viewable PPM.
        #[arg(long)]
        cipher_image: Option<PathBuf>,
    },
    /// Decrypt a ciphertext container back into a PPM image.
    Decrypt {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print histogram, mean, chi-square, correlation and entropy metrics.
    /// Accepts a PPM or a ciphertext container.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// Reference image for NPCR/UACI.
        #[arg(long = "ref")]
        reference: Option<PathBuf>,
    },
    /// Zero one pixel and compare the two ciphertexts.
    Avalanche {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        key: PathBuf,
        /// Pixel as `x,y`; defaults to the image centre.
        #[arg(long, value_parser = parse_pixel)]
        pixel: Option<(u32, u32)>,
    },
    /// Run the randomness battery on the twelve keystream sequences.
    Nist {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        key: PathBuf,
    },
    /// Write a fresh key file.
    Keygen {
        #[arg(long)]
        out: PathBuf,
        /// Derive the key deterministically from this seed instead of OS entropy.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_pixel(s: &str) -> std::result::Result<(u32, u32), String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let num = |v: &str| v.trim().parse::<u32>().map_err(|e| format!("{v:?}: {e}"));
    Ok((num(x)?, num(y)?))
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn in_file<T>(path: &Path, r: mpcs_core::Result<T>) -> Result<T> {
    r.map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

fn load_image(path: &Path) -> Result<RgbImage> {
    let bytes = read(path)?;
    if bytes.starts_with(&mpcs_core::pipeline::MAGIC) {
        return in_file(path, CipherContainer::from_bytes(&bytes).and_then(|c| c.to_image()));
    }
    in_file(path, read_ppm(&bytes))
}

fn load_key(path: &Path) -> Result<KeyConfig> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Usage(format!("{}: key file is not UTF-8", path.display())))?;
    in_file(path, KeyConfig::parse(&text))
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Encrypt {
            input,
            key,
            out,
            cipher_image,
        } => {
            let img = in_file(&input, read_ppm(&read(&input)?))?;
            let key = load_key(&key)?;
            let ct = encrypt(&img, &key)?;
            let t = mpcs_core::bitplane::transient_counts(ct.delta);
            eprintln!("delta {}", ct.delta);
            eprintln!(
                "transients henon={} lorenz={} chua={} rossler={}",
                t.henon, t.lorenz, t.chua, t.rossler
            );
            write(&out, &ct.to_bytes())?;
            if let Some(path) = cipher_image {
                write(&path, &write_ppm(&ct.to_image()?))?;
            }
        }
        Command::Decrypt { input, key, out } => {
            let ct = in_file(&input, CipherContainer::from_bytes(&read(&input)?))?;
            let img = decrypt(&ct, &load_key(&key)?)?;
            write(&out, &write_ppm(&img))?;
        }
        Command::Analyze { input, reference } => {
            let img = load_image(&input)?;
            let reference = reference.as_deref().map(load_image).transpose()?;
            print!("{}", MetricsReport::compute(&img, reference.as_ref())?.to_text());
        }
        Command::Avalanche { input, key, pixel } => {
            let p1 = in_file(&input, read_ppm(&read(&input)?))?;
            let key = load_key(&key)?;
            let (x, y) = pixel.unwrap_or((p1.width() / 2, p1.height() / 2));
            if x >= p1.width() || y >= p1.height() {
                return Err(CliError::Usage(format!(
                    "pixel {x},{y} outside {}x{} image",
                    p1.width(),
                    p1.height()
                )));
            }
            let mut p2 = p1.clone();
            p2.set_pixel(x, y, [0, 0, 0]);
            let c1 = encrypt(&p1, &key)?.to_image()?;
            let c2 = encrypt(&p2, &key)?.to_image()?;
            let cipher_pair = PairReport::compute(&c1, &c2)?;
            let plain_cipher = PairReport::compute(&p1, &c1)?;
            let triple = |v: [f64; 3]| format!("{:.3} {:.3} {:.3}", v[0], v[1], v[2]);
            println!("pixel {x},{y}");
            println!("npcr.c1_c2 {}", triple(cipher_pair.npcr));
            println!("uaci.c1_c2 {}", triple(cipher_pair.uaci));
            println!("npcr.p1_c1 {}", triple(plain_cipher.npcr));
            println!("uaci.p1_c1 {}", triple(plain_cipher.uaci));
        }
        Command::Nist { input, key } => {
            let img = in_file(&input, read_ppm(&read(&input)?))?;
            let seqs = keystream_bits(&img, &load_key(&key)?)?;
            print!("{}", BatteryReport::run(&seqs).to_text());
        }
        Command::Keygen { out, seed } => {
            let key = match seed {
                Some(s) => KeyConfig::random(&mut ChaCha8Rng::seed_from_u64(s)),
                None => KeyConfig::random(&mut rand::thread_rng()),
            };
            write(&out, key.to_text().as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mpcs: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
