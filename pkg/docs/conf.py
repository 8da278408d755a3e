# -*- coding: utf-8 -*-
#
# tlentangle documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import os.path as osp
import sys
import re
import sphinx_rtd_theme

# make sure, tlentangle from parent directory is used
sys.path.insert(0, os.path.abspath('..'))
import tlentangle

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.autosummary',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinxarg.ext',
    'autodocsumm',
]

templates_path = ['_templates']

# on_rtd is whether we are on readthedocs.org
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

autosummary_generate = True

source_suffix = '.rst'

master_doc = 'index'

autodoc_default_options = {'show-inheritance': True, 'autosummary': True}
autoclass_content = 'both'

# General information about the project.
project = u'tlentangle'
copyright = u'2026, the tlentangle developers'
author = u'the tlentangle developers'

# The short X.Y.Z version.
version = re.match(r'\d+\.\d+\.\d+', tlentangle.__version__).group()
# The full version, including alpha/beta/rc tags.
release = tlentangle.__version__

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

if osp.exists(osp.join(osp.dirname(__file__), '_static')):
    html_static_path = ['_static']

htmlhelp_basename = 'tlentangledoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
    'preamble': r'\setcounter{tocdepth}{10}'
}

latex_documents = [
  (master_doc, 'tlentangle.tex', u'tlentangle Documentation',
   author, 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'tlentangle', u'tlentangle Documentation',
     [author], 1)
]


# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
  (master_doc, 'tlentangle', u'tlentangle Documentation',
   author, 'tlentangle',
   'Entanglement of Temperley-Lieb representations', 'Miscellaneous'),
]


# -- Options for Epub output ----------------------------------------------

epub_title = project
epub_author = author
epub_publisher = author
epub_copyright = copyright

epub_exclude_files = ['search.html']

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'funcargparse': ('https://funcargparse.readthedocs.io/en/latest/', None),
}
