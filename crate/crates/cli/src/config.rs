use std::fs;

use clap::CommandFactory;

use crate::{Cli, CliError};

/// Long flags accepted after the subcommand path in `argv`.
fn accepted_flags(argv: &[String]) -> Vec<String> {
    let mut cmd = Cli::command();
    cmd.build();
    let mut flags: Vec<String> = cmd.get_arguments().filter_map(|a| a.get_long().map(String::from)).collect();
    let mut node = &cmd;
    for word in argv.iter().skip(1).filter(|w| !w.starts_with('-')) {
        if let Some(sub) = node.find_subcommand(word) {
            node = sub;
            flags.extend(node.get_arguments().filter_map(|a| a.get_long().map(String::from)));
        }
    }
    flags
}

fn config_path(argv: &[String]) -> Option<String> {
    argv.iter().enumerate().find_map(|(i, w)| {
        w.strip_prefix("--config=").map(String::from).or_else(|| (w == "--config").then(|| argv.get(i + 1).cloned()).flatten())
    })
}

/// Appends flags from the `--config` file that the command line does not
/// already give. Keys the chosen subcommand lacks are ignored.
pub fn merge_config(argv: Vec<String>) -> Result<Vec<String>, CliError> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = fs::read_to_string(&path).map_err(|e| CliError::Usage(format!("config {path}: {e}")))?;
    let accepted = accepted_flags(&argv);
    let given = |key: &str| {
        argv.iter().any(|w| w == &format!("--{key}") || w.starts_with(&format!("--{key}=")))
    };
    let mut out = argv.clone();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config {path}:{}: expected key=value", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "config" || given(key) || !accepted.iter().any(|a| a == key) {
            continue;
        }
        match value {
            "true" => out.push(format!("--{key}")),
            "false" => {}
            _ => out.push(format!("--{key}={value}")),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(words: &[&str]) -> Vec<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn flags_win_and_foreign_keys_are_skipped() {
        let dir = std::env::temp_dir().join(format!("typegraph-config-{}", std::process::id()));
        fs::write(&dir, "n = 13\nradius=4\ni=2\n# comment\nformat=json\n").unwrap();
        let path = dir.to_string_lossy().to_string();
        let merged = merge_config(argv(&["typegraph", "atlas", "--n", "17", "--config", &path])).unwrap();
        assert_eq!(
            merged,
            argv(&["typegraph", "atlas", "--n", "17", "--config", &path, "--radius=4", "--i=2", "--format=json"])
        );
        let merged = merge_config(argv(&["typegraph", "k3", "build", "--config", &path])).unwrap();
        assert!(merged.contains(&"--n=13".to_string()));
        assert!(!merged.iter().any(|w| w.starts_with("--radius")));
        fs::remove_file(dir).unwrap();
    }
}
