//! Drive the command-line front end in-process.

fn main() {
    let runs: [&[&str]; 4] = [
        &[
            "homothety",
            "--format",
            "json",
            "bound",
            "--d",
            "1",
            "--p",
            "29",
        ],
        &["homothety", "combine", "0", "8", "--p", "11"],
        &["homothety", "orbit", "--p", "97"],
        &["homothety", "build", "nonsplit-cartan", "--p", "7"],
    ];
    for args in runs {
        println!("$ {}", args.join(" "));
        let code = homothety::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
        println!("(exit {code})\n");
    }
}
