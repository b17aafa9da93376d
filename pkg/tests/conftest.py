from __future__ import annotations

import contextlib
import io

import pytest

from zrel import cli


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process, returning (exit_code, stdout, stderr)."""

    def run(*argv) -> tuple[int, str, str]:
        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli.main([str(a) for a in argv])
        return code, out.getvalue(), err.getvalue()

    return run
