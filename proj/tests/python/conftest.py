import os
import sys

# ctest points HAMDEC_PYTHON_DIR at the build-tree package; an editable
# install's import hook would otherwise take precedence over PYTHONPATH.
_build = os.environ.get("HAMDEC_PYTHON_DIR")
if _build:
    sys.meta_path[:] = [f for f in sys.meta_path if not type(f).__name__.startswith("ScikitBuild")]
    sys.path.insert(0, _build)

import hamdec  # noqa: E402


def pytest_report_header(config):
    return f"hamdec module: {hamdec._core.__file__}"
