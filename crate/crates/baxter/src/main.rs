fn main() {
    std::process::exit(baxter::run(std::env::args_os()));
}
