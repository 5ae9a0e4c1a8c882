fn main() { std::process::exit(formcount::cli::main()) }
