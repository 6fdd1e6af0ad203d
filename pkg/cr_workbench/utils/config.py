"""
Load configuration data from environment variables.
"""
import os
import functools

_PACKAGE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _positive_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be a positive integer, got '{raw}'")
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got '{raw}'")
    return value


@functools.lru_cache(maxsize=1)
def get_config():
    """Load environment configuration data."""
    # cap on the number of Freeman steps computed before giving up
    max_steps = _positive_int("CRWB_MAX_STEPS", 64)
    # degree guard for fields handed to the verification suites
    max_field_degree = _positive_int("CRWB_MAX_FIELD_DEGREE", 8)

    data_path = os.environ.get("CRWB_DATA_PATH", os.path.join(_PACKAGE_DIR, "data"))
    schema_path = os.environ.get(
        "CRWB_SCHEMA_PATH", os.path.join(_PACKAGE_DIR, "schema")
    )
    return {
        "max_steps": max_steps,
        "max_field_degree": max_field_degree,
        "data_path": data_path,
        "schema_path": schema_path,
        "document_schema": os.path.join(schema_path, "cr_algebra_document.yaml"),
    }
