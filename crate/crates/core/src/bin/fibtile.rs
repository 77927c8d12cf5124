fn main() {
    std::process::exit(fibtile::cli::main_with_env());
}
