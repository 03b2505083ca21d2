use jpk::suites::SuiteResult;

use crate::{EXIT_FAIL, EXIT_SINGULAR};

/// 1 if anything failed, else 3 if a case hit a specialization pole, else 0.
pub fn exit_code(results: &[SuiteResult]) -> u8 {
    let mut skipped = false;
    for r in results {
        let c = r.counts();
        if c.fail > 0 || c.error > 0 {
            return EXIT_FAIL;
        }
        skipped |= c.skip > 0;
    }
    if skipped {
        EXIT_SINGULAR
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jpk::suites::{CaseOutcome, SuiteId};
    use jpk::verdict::VerdictBuilder;

    fn result(outcomes: Vec<CaseOutcome>) -> SuiteResult {
        SuiteResult {
            suite: SuiteId::PsiPieri,
            outcomes,
        }
    }

    fn report(pass: bool) -> CaseOutcome {
        let mut b = VerdictBuilder::new("x", "y");
        if !pass {
            b.fail_with(None, None, "1".into());
        }
        CaseOutcome::Report(b.finish())
    }

    fn skip() -> CaseOutcome {
        CaseOutcome::Skipped {
            case: "c".into(),
            reason: "pole".into(),
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&[result(vec![report(true)])]), 0);
        assert_eq!(
            exit_code(&[result(vec![report(true), report(false)])]),
            EXIT_FAIL
        );
        assert_eq!(
            exit_code(&[result(vec![skip()]), result(vec![report(true)])]),
            EXIT_SINGULAR
        );
        assert_eq!(
            exit_code(&[result(vec![skip()]), result(vec![report(false)])]),
            EXIT_FAIL
        );
    }
}
