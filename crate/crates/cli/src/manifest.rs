//! Run manifest emitted with every command: the command line, input
//! digests, effective configuration, versions, and wall time.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::time::Instant;

pub struct ManifestBuilder {
    command: String,
    inputs: Map<String, Value>,
    config: Map<String, Value>,
    started: Instant,
}

impl ManifestBuilder {
    pub fn new() -> Self {
        let command = std::env::args().collect::<Vec<_>>().join(" ");
        ManifestBuilder {
            command,
            inputs: Map::new(),
            config: Map::new(),
            started: Instant::now(),
        }
    }

    pub fn input_bytes(&mut self, name: &str, bytes: &[u8]) {
        let mut h = Sha256::new();
        h.update(bytes);
        self.inputs
            .insert(name.to_string(), json!(format!("sha256:{:x}", h.finalize())));
    }

    pub fn input_desc(&mut self, name: &str, desc: &str) {
        self.input_bytes(name, desc.as_bytes());
    }

    pub fn config(&mut self, key: &str, value: Value) {
        self.config.insert(key.to_string(), value);
    }

    pub fn finish(self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs),
            "config": Value::Object(self.config),
            "versions": {
                "torsor-core": torsor_core_version(),
                "torsor-cli": env!("CARGO_PKG_VERSION"),
            },
            "wall_time_ms": self.started.elapsed().as_millis() as u64,
        })
    }
}

fn torsor_core_version() -> &'static str {
    // Workspace crates share one version.
    env!("CARGO_PKG_VERSION")
}
