from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import os

from setuptools import setup, find_packages

install_requires = ['numpy>=1.17.2', 'scipy>=1.6.0', 'sympy>=1.7', 'pandas>=1.0.5', 'tqdm>=4.48.2',
                    'colorlog==4.7.2', 'colorama==0.4.4', 'pyyaml>=5.1.0']

setup_requires = []

extras_require = {
    'test': ['pytest>=6.0']
}

classifiers = ["License :: OSI Approved :: MIT License"]

long_description = 'ccnvkit builds and checks Kundt spacetimes with a covariantly constant null vector ' \
                   'that admit an additional Killing vector. It assembles the metric families and ' \
                   'closed-form examples from free functions, verifies the Killing equations both in ' \
                   'coordinates and in the null frame, classifies the vector by case and causal ' \
                   'character, and probes the curvature invariants, all driven by YAML scene files.'

# Readthedocs requires Sphinx extensions to be specified as part of
# install_requires in order to build properly.
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if on_rtd:
    install_requires.extend(setup_requires)

setup(
    name='ccnvkit',
    version=
    '0.1.0',  # please remember to edit ccnvkit/__init__.py in response, once updating the version
    description='Killing vectors of CCNV Kundt spacetimes, built and verified numerically',
    long_description=long_description,
    long_description_content_type="text/markdown",
    author='ccnvkit developers',
    packages=[
        package for package in find_packages()
        if package.startswith('ccnvkit')
    ],
    include_package_data=True,
    package_data={'ccnvkit': ['properties/*.yaml']},
    install_requires=install_requires,
    setup_requires=setup_requires,
    extras_require=extras_require,
    entry_points={'console_scripts': ['ccnvkit = ccnvkit.quick_start:main']},
    zip_safe=False,
    classifiers=classifiers,
)
