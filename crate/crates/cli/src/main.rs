use std::io::Write;
use std::time::Instant;

fn main() {
    let start = Instant::now();
    let out = kgt_cli::app::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    if !out.stdout.is_empty() {
        eprintln!("kgt: finished in {:.3}s", start.elapsed().as_secs_f64());
    }
    std::process::exit(out.code);
}
