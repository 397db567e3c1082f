from setuptools import setup, find_packages

setup(name='chiclass',
      version='1.0.0',
      description='Exact Hirzebruch characteristic classes of complete intersections',
      author='chiclass developers',
      license='BSD',
      packages=find_packages(),
      install_requires=['sympy'],
      entry_points={"console_scripts": ["chiclass=chiclass.cli.main:main"]},
      zip_safe=False)
