use std::process::ExitCode;

use nsga_lotz::experiment::run_batch;
use nsga_lotz_cli::{parse_config, CliError};

fn main() -> ExitCode {
    match try_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ CliError::Args(_)) => {
            if let CliError::Args(inner) = &e {
                let _ = inner.print();
            }
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn try_main() -> Result<(), CliError> {
    let batch = parse_config(std::env::args_os())?;
    let report = run_batch(&batch)?;
    print!("{report}");
    println!(
        "wrote {} replicate files and {} to {}",
        batch.replicates,
        batch
            .aggregate_file()
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default(),
        batch.out_dir.display()
    );
    Ok(())
}
