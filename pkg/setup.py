from setuptools import setup, find_packages

from prozero import __version__

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read().replace('.. :changelog:', '')

with open("requirements.txt") as req_file:
    requirements = list(filter(None, req_file.read().split("\n")))

setup(
    name='prozero',
    version=__version__,
    description='Exact decision procedures and replayable certificates for '
                'pro-zero towers, Koszul homology and pro-regular sequences.',
    long_description=readme + "\n\n" + history,
    license="LICENSE.txt",
    packages=find_packages(include=["prozero", "prozero.*"]),
    package_data={'prozero': ['bin/defaults/*.yaml',
                              'bin/defaults/problems/*.json']},
    entry_points={
       'console_scripts': [
           'pz=prozero.bin.pz:entry_func',
       ],
    },
    install_requires=requirements,
    extras_require={'test': ['pytest>=6.0']},
    classifiers=['Environment :: Console',
                 'Operating System :: POSIX',
                 'Programming Language :: Python :: 3.8',
                 'Programming Language :: Python :: 3.9',
                 'License :: OSI Approved :: MIT License']
)
