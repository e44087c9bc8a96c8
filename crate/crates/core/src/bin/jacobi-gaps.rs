fn main() -> std::process::ExitCode {
    jacobi_gaps::cli::main()
}
