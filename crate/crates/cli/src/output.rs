use serde::Serialize;

/// Writes one record per result, as JSON or as plain text.
pub struct Printer {
    json: bool,
}

impl Printer {
    pub fn new(json: bool) -> Self {
        Printer { json }
    }

    pub fn emit<T: Serialize>(&self, record: &T, plain: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string(record).expect("records serialize"));
        } else {
            println!("{}", plain());
        }
    }
}
