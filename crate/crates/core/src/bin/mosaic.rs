fn main() -> std::process::ExitCode {
    mosaic::cli::run(std::env::args_os())
}
