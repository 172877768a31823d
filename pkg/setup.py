"""Setup script for gammaflow"""

import os.path
import setuptools
from setuptools import setup

# The directory containing this file
HERE = os.path.abspath(os.path.dirname(__file__))

# The text of the README file
with open(os.path.join(HERE, "README.md")) as fid:
    README = fid.read()

__version__ = None  # set __version__ in this exec() call
exec(open('gammaflow/version.py').read())
# This call to setup() does all the work
setup(
    name = "gammaflow",
    version = __version__,
    description = "Certified computation of the generalized Euler-Mascheroni constants and their polynomial relations",
    long_description = README,
    long_description_content_type = "text/markdown",
    license = "MIT",
    packages = setuptools.find_packages(exclude = ['tests', 'tests.*']),
    include_package_data = True,
    package_data = {
        'gammaflow.polys': ['goldens/*.txt']
    },
    python_requires = '>=3.6',
    install_requires = [
        'numpy>=1.9.1',
        'mpmath>=1.1.0'
    ],
    extras_require = {
        'tests': ['pytest>=4.0']
    },
    entry_points = {
        'console_scripts': [
            'gammaflow = gammaflow.cli:main'
        ]
    },
    classifiers = [
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.6',
        'Topic :: Scientific/Engineering :: Mathematics'
    ]
)
