use clap::Parser;

fn main() -> std::process::ExitCode {
    flaghull::cli::run(flaghull::cli::Cli::parse())
}
