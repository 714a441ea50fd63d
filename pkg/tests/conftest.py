import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

import pytest

from filedrawer.cli import main


@dataclass
class CliResult:
    code: int
    stdout: str
    stderr: str


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process, capturing exit code and streams.

    argparse usage errors raise SystemExit(2); those are converted into a
    normal result so tests can assert on the code uniformly.
    """

    def run(*argv: str) -> CliResult:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            try:
                code = main(list(argv))
            except SystemExit as exc:  # argparse's own error path
                code = int(exc.code or 0)
        return CliResult(code=code, stdout=out.getvalue(), stderr=err.getvalue())

    return run
