# Copyright (c) 2024 The phigraph developers


from setuptools import setup


def readme():
    with open('README.md') as f:
        return f.read()


packages = [
        'phigraph',
        'phigraph.cli',
        'phigraph.families',
        'phigraph.lib',
        'phigraph.lib.primes',
        'phigraph.lib.trees',
        'phigraph.recognizer',
        'phigraph.totient',
        'phigraph.verify'
        ]

package_dir = {
        'phigraph': 'src',
        'phigraph.cli': 'src/cli',
        'phigraph.families': 'src/families',
        'phigraph.lib': 'src/lib',
        'phigraph.lib.primes': 'src/lib/primes',
        'phigraph.lib.trees': 'src/lib/trees',
        'phigraph.recognizer': 'src/recognizer',
        'phigraph.totient': 'src/totient',
        'phigraph.verify': 'src/verify'
        }

setup(name='phigraph',
      version='0.1',
      description='Graphs of the iterated Euler totient: build, invert, recognize',
      long_description=readme(),
      long_description_content_type='text/markdown',
      packages=packages,
      package_dir=package_dir,
      package_data={'phigraph.lib': ['readme.md']},
      license='MIT',
      python_requires='>=3.10',
      install_requires=['numpy>=1.20', 'networkx>=3.0', 'pydot>=2.0'],
      extras_require={'test': ['pytest>=7']},
      entry_points={'console_scripts': ['phigraph=phigraph.cli:main']},
      zip_safe=False
      )
