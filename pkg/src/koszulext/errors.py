"""Shared exception types with the CLI exit-code contract.

Exit codes: 2 usage error (argparse), 3 size-budget overflow, 1 any
invariant failure (with a witness in the message).
"""


class SizeBudgetError(RuntimeError):
    """A computation would exceed its configured size budget."""

    exit_code = 3


class RewriteCycleError(RuntimeError):
    """Term rewriting failed to terminate within the step guard."""

    exit_code = 1


class CompletionTruncationError(RuntimeError):
    """Completion tower did not stabilize at the given truncation; increase N."""

    exit_code = 1


class InvariantError(RuntimeError):
    """A checked structural invariant failed; the message carries a witness."""

    exit_code = 1
