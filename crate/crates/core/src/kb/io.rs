use super::{validate_kb, KbError, KnowledgeBase};
use crate::canonical;

/// Parses and validates a KB document.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase, KbError> {
    let kb = parse_kb_unvalidated(text)?;
    let violations = validate_kb(&kb);
    if violations.is_empty() {
        Ok(kb)
    } else {
        Err(KbError::Invalid(violations))
    }
}

/// Parses the document shape only; referential integrity is not checked.
pub fn parse_kb_unvalidated(text: &str) -> Result<KnowledgeBase, KbError> {
    serde_json::from_str(text).map_err(json_error)
}

pub(crate) fn json_error(e: serde_json::Error) -> KbError {
    let (line, column, message) = (e.line(), e.column(), e.to_string());
    match e.classify() {
        serde_json::error::Category::Data => KbError::Schema {
            line,
            column,
            message,
        },
        _ => KbError::Syntax {
            line,
            column,
            message,
        },
    }
}

/// Canonical form: sorted keys, two-space indent, trailing newline.
pub fn serialize_kb(kb: &KnowledgeBase) -> String {
    canonical::to_string(kb).expect("knowledge base serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::{default_kb, DEFAULT_KB_JSON};

    const MINIMAL: &str = r#"{
  "meta": {"name": "tiny", "version": "1"},
  "scales": [{"id": "s", "levels": [{"label": "no", "score": 0}, {"label": "yes", "score": 4}]}],
  "criteria": [{"id": "f11", "family": "f1", "label": "generic model", "scale": "s"}],
  "instances": []
}"#;

    #[test]
    fn minimal_kb() {
        let kb = parse_kb(MINIMAL).unwrap();
        assert!(kb.instances.is_empty());
        assert_eq!(kb.criteria.len(), 1);
    }

    #[test]
    fn unknown_criterion_is_named() {
        let text = MINIMAL.replace(
            r#""instances": []"#,
            r#""instances": [{"id": "X", "label": "X", "values": {"f99": "yes"}}]"#,
        );
        let err = parse_kb(&text).unwrap_err();
        assert_eq!(err.code(), "UNKNOWN_CRITERION");
        assert!(err.to_string().contains("f99"));
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_kb("{\n  \"meta\": ,\n}").unwrap_err();
        match err {
            KbError::Syntax { line, column, .. } => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_are_schema_errors() {
        let text = MINIMAL.replace(r#""name": "tiny""#, r#""name": "tiny", "colour": "red""#);
        assert_eq!(parse_kb(&text).unwrap_err().code(), "SCHEMA_ERROR");
    }

    #[test]
    fn shipped_file_is_canonical() {
        let kb = default_kb();
        assert_eq!(kb.criteria.len(), 14);
        assert_eq!(kb.instances.len(), 6);
        assert_eq!(serialize_kb(&kb), DEFAULT_KB_JSON);
        assert_eq!(parse_kb(&serialize_kb(&kb)).unwrap(), kb);
    }
}
