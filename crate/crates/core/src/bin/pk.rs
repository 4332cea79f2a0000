fn main() -> std::process::ExitCode {
    planar_kinematics::cli::main()
}
