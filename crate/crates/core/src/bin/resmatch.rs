fn main() -> std::process::ExitCode {
    resmatch::cli::main()
}
