#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# ramsey-census documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

# The modules live flat in src/.
sys.path.insert(0, os.path.abspath('../../src'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'ramsey-census'
copyright = '2026, The ramsey-census authors'
author = 'The ramsey-census authors'

version = '1.0'
release = '1.0'

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
html_domain_indices = True
html_use_index = True
html_split_index = False
htmlhelp_basename = 'ramseycensusdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'ramsey', 'ramsey-census Documentation',
     [author], 1)
]
