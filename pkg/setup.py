# Always prefer setuptools over distutils
from setuptools import setup, find_packages


setup(name="tin_pyramids",
      description="Separators, pyramids and tree-independence number of {P6, K2,t}-free graphs",
      version="0.1.0",
      license="GPLv3",
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Mathematics',
          'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10'],
      keywords="graph tree-decomposition tree-independence separator pyramid",
      packages=find_packages(exclude=["tests", "examples", "examples.*"]),
      package_data={
          'tin_common': ['resources/*']
      },
      install_requires=[
          'networkx>=2.6',
          'numpy>=1.17',
          'pandas>=1.1',
          'pendulum>=2.1',
          'PyYAML>=5.4'
      ],
      entry_points={
          'console_scripts': ['tin-pyramids=tin_cli.main:main']
      },
      python_requires='>=3.9',
      setup_requires=['wheel'],
      zip_safe=False
      )
