use clap::Parser;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("BDFKALC_LOG")).format_timestamp(None).init();
    let args = bdfkalc::cli::Args::parse();
    std::process::exit(bdfkalc::cli::main_with(&args));
}
