import os.path as osp
from setuptools import setup, find_packages


def readme():
    with open('README.rst') as f:
        return f.read()


# read the version from version.py
with open(osp.join('tlentangle', 'version.py')) as f:
    exec(f.read())


dependencies = [
    'numpy',
    'scipy',
    'pandas',
    'docrep',
    'funcargparse',
]


setup(name='tlentangle',
      version=__version__,
      description=('Entanglement and the loop parameter of Temperley-Lieb '
                   'algebra representations'),
      long_description=readme(),
      classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Scientific/Engineering',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Operating System :: OS Independent',
      ],
      keywords=('quantum entanglement temperley-lieb yang-baxter braid '
                'concurrence thermal sudden-death'),
      license="GPLv3",
      packages=find_packages(exclude=['docs', 'tests*', 'examples']),
      install_requires=dependencies,
      python_requires='>=3.8',
      tests_require=['pytest'],
      entry_points={
          'console_scripts': ['tlentangle=tlentangle.__main__:main'],
          },
      zip_safe=False)
