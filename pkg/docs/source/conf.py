"""
Sphinx configuration of the socialbandits documentation. Build with ``sphinx-build docs/source docs/build``.
"""

import os
import sys

# import the package from the source tree
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

project = 'socialbandits'
author = 'socialbandits developers'
copyright = '2026, ' + author
version = '0.1'
release = version

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
]

master_doc = 'index'
source_suffix = '.rst'
exclude_patterns = []
pygments_style = 'sphinx'

# docstrings are Google style with backtick types
napoleon_google_docstring = True
napoleon_numpy_docstring = False
autosummary_generate = True
autoclass_content = 'both'
default_role = 'py:obj'

html_theme = 'sphinx_rtd_theme'

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'scipy': ('https://docs.scipy.org/doc/scipy/', None),
                       'pandas': ('https://pandas.pydata.org/docs/', None),
                       'networkx': ('https://networkx.org/documentation/stable/', None),
                       'joblib': ('https://joblib.readthedocs.io/en/latest/', None)}
