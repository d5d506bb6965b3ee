fn main() {
    std::process::exit(paratoric::cli::run(std::env::args()));
}
