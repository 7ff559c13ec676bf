// Run the named checks and print a report, as `abelcount verify` does.

use abelcount::verify::{emit_table, reports_to_json, run_checks, Orders, TableFormat, TableKind, TableParams};

fn main() {
    let reports = run_checks(&[], &Orders::default()).unwrap();
    for r in &reports {
        println!("{}", r.to_line());
    }
    let json = reports_to_json(&reports[..2]);
    println!("{json}");
    print!("{}", emit_table(TableKind::Nu, TableParams { g_max: 0, d_max: 8 }, TableFormat::Csv).unwrap());
    print!("{}", emit_table(TableKind::Genus3, TableParams { g_max: 0, d_max: 3 }, TableFormat::Plain).unwrap());
}
