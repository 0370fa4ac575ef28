fn main() {
    zeta_gaps::cli::main_entry()
}
