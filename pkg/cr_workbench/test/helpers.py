"""
Test helpers
"""
import contextlib
import io
import json
import os

from cr_workbench import cli
from cr_workbench.utils.config import get_config

TEST_DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def capture_stdout(function, *args, **kwargs):
    """capture and return the standard output from a function"""
    io_stdout = io.StringIO()
    with contextlib.redirect_stdout(io_stdout):
        function(*args, **kwargs)
    return io_stdout.getvalue()


def run_cli(argv):
    """Run the command line entry point; returns (exit code, stdout, stderr)."""
    io_stdout, io_stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(io_stdout), contextlib.redirect_stderr(io_stderr):
        code = cli.main(argv)
    return code, io_stdout.getvalue(), io_stderr.getvalue()


def run_cli_json(argv):
    """Run the command line with --format json; returns (exit code, parsed certificate)."""
    code, out, _ = run_cli(list(argv) + ["--format", "json"])
    return code, (json.loads(out) if out else None)


@contextlib.contextmanager
def modified_environ(*remove, **update):
    """
    Temporarily updates the ``os.environ`` dictionary in-place, clearing the cached
    configuration on the way in and out.

    :param remove: Environment variables to remove.
    :param update: Dictionary of environment variables and values to add/update.
    """
    env = os.environ
    update = update or {}
    remove = remove or []

    # List of environment variables being updated or removed.
    stomped = (set(update.keys()) | set(remove)) & set(env.keys())
    # Environment variables and values to restore on exit.
    update_after = {k: env[k] for k in stomped}
    # Environment variables and values to remove on exit.
    remove_after = frozenset(k for k in update if k not in env)

    try:
        env.update(update)
        [env.pop(k, None) for k in remove]
        get_config.cache_clear()
        yield
    finally:
        env.update(update_after)
        [env.pop(k) for k in remove_after]
        get_config.cache_clear()
