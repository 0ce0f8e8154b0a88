import os
import sys

# Under ctest, import the module from the build tree even if an editable install exists.
_pkg = os.environ.get("EISCOH_PYTHON_PKG")
if _pkg:
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.path.insert(0, _pkg)
