#!/usr/bin/env python3
#
# dissolve documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

from datetime import date
from warnings import filterwarnings

import os
import sys

import sphinx_rtd_theme

filterwarnings(
    "ignore", message="Matplotlib is currently using agg", category=UserWarning
)

# If your extensions are in another directory, add it here.
sys.path.insert(0, os.path.abspath('..'))


# General configuration
# ---------------------

extensions = [
    "sphinx.ext.autosummary",
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]

# generate autosummary pages
autosummary_generate = True

# numpy style docstrings
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = False
napoleon_use_param = True
napoleon_use_rtype = True

suppress_warnings = ["ref.citation", "ref.footnote"]

source_suffix = ".rst"
source_encoding = "utf-8"
master_doc = "index"
exclude_patterns = ['_build', 'README.md']

# General substitutions.
project = "dissolve"
copyright = f"{date.today().year}, dissolve Developers"

# The short X.Y version and the full version.
version = '0.1'
release = "0.1"

add_module_names = False
pygments_style = "sphinx"
modindex_common_prefix = ["dissolve."]


# Options for HTML output
# -----------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_theme_options = {
    "navigation_depth": 3,
}
html_last_updated_fmt = "%b %d, %Y"
html_copy_source = False
htmlhelp_basename = "dissolve"


# Options for LaTeX output
# ------------------------

latex_documents = [
    (
        "reference/index",
        "dissolve_reference.tex",
        "dissolve Reference",
        "dissolve Developers",
        "manual",
        1,
    )
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

default_role = "obj"
