#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# chiclass documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
import sphinx_rtd_theme
sys.path.insert(0, os.path.abspath('../..'))

import chiclass


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'chiclass'
copyright = '2026, chiclass developers'
author = 'chiclass developers'

version = 'v{}'.format(chiclass.__version__)
release = version

language = None

exclude_patterns = []

pygments_style = 'sphinx'

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_static_path = ['_static']

# job_schema.json is linked from jobs.rst
html_extra_path = ['job_schema.json']

html_sidebars = {
    '**': ['globaltoc.html',
        'relations.html',  # needs 'show_related': True theme option to display
        'searchbox.html',
    ]
}

htmlhelp_basename = 'chiclassdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'chiclass.tex', 'chiclass Documentation',
     'chiclass developers', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'chiclass', 'chiclass Documentation',
     [author], 1)
]


# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'chiclass', 'chiclass Documentation',
     author, 'chiclass', 'Exact Hirzebruch classes of complete intersections.',
     'Miscellaneous'),
]
