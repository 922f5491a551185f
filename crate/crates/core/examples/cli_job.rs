//! Drives the command-line interface in-process with a job document, the
//! same way `abds code --input job.txt --over-u --format structured` does.
//!
//! Run with `cargo run --example cli_job`.

use abds::cli::report::{Report, ReportBody};

fn main() {
    let job = std::env::temp_dir().join("abds_example_job.txt");
    std::fs::write(
        &job,
        "q = 2\nr = 5, 15\nbounds = bch, ht\n0,0\n0,3\n0,5\n0,7\n1,0\n1,2\n1,4\n",
    )
    .expect("write job file");
    let path = job.to_string_lossy().into_owned();

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = abds::cli::run(["abds", "mad", "--input", &path], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}\n");

    out.clear();
    let args = [
        "abds",
        "code",
        "--input",
        &path,
        "--over-u",
        "--format",
        "structured",
    ];
    let code = abds::cli::run(args, &mut out, &mut err);
    let report = Report::parse(&String::from_utf8_lossy(&out)).expect("valid report");
    if let ReportBody::Code(c) = &report.result {
        println!(
            "structured: n = {}, dim = {}, Δ = {}, input sha256 {}",
            c.length,
            c.dimension,
            c.bound_value,
            report.input_sha256.as_deref().unwrap_or("-")
        );
    }
    println!("exit code {code}");
    let _ = std::fs::remove_file(job);
}
