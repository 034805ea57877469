use std::net::SocketAddr;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::Parser;
use linepush_cli::api::{router, AppState};
use linepush_cli::cli::{emit, run, Cli, Command, Report, ERROR};
use linepush_cli::store::PuzzleStore;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ERROR } else { 0 });
        }
    };
    let code = match &cli.command {
        Command::Serve {
            port,
            puzzles,
            host,
            timeout_ms,
        } => match serve(host, *port, puzzles, Duration::from_millis(*timeout_ms)) {
            Ok(()) => 0,
            Err(message) => emit(&Report::error(message)),
        },
        command => emit(&run(command, &mut std::io::stdin().lock())),
    };
    ExitCode::from(code)
}

fn serve(host: &str, port: u16, dir: &std::path::Path, timeout: Duration) -> Result<(), String> {
    let store = PuzzleStore::load(dir).map_err(|e| format!("cannot read puzzle directory {}: {e}", dir.display()))?;
    for (path, reason) in &store.rejected {
        eprintln!("skipping {}: {reason}", path.display());
    }
    let addr: SocketAddr = format!("{host}:{port}").parse().map_err(|e| format!("bad address {host}:{port}: {e}"))?;
    let app = router(Arc::new(AppState { store, timeout }));
    let runtime = tokio::runtime::Runtime::new().map_err(|e| e.to_string())?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(addr).await.map_err(|e| format!("cannot bind {addr}: {e}"))?;
        eprintln!("listening on http://{addr}");
        axum::serve(listener, app)
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
            })
            .await
            .map_err(|e| e.to_string())
    })
}
