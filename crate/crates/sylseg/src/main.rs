use std::process::ExitCode;

fn main() -> ExitCode {
    sylseg::cli::main(std::env::args())
}
