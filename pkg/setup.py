##
# \file setup.py
#
# Instructions:
#   `pip install -e .`
#   All python packages and command line tools are then installed.
#


import os
from setuptools import setup, find_packages


about = {}
with open(os.path.join("wmbench", "__about__.py")) as fp:
    exec(fp.read(), about)


with open("README.md", "r") as fh:
    long_description = fh.read()


def install_requires(fname="requirements.txt"):
    with open(fname) as f:
        content = f.readlines()
    content = [x.strip() for x in content]
    return content


setup(name='WMBench',
      version=about["__version__"],
      description=about["__summary__"],
      long_description=long_description,
      long_description_content_type="text/markdown",
      author=about["__author__"],
      author_email=about["__email__"],
      license=about["__license__"],
      packages=find_packages(exclude=["tests"]),
      install_requires=install_requires(),
      extras_require={
          "test": ["nose>=1.3.7"],
      },
      zip_safe=False,
      keywords='watermarking language-models evaluation',
      classifiers=[
          'Intended Audience :: Developers',
          'Intended Audience :: Science/Research',

          'License :: OSI Approved :: BSD License',

          'Topic :: Scientific/Engineering :: Artificial Intelligence',

          'Programming Language :: Python',
          'Programming Language :: Python :: 3',
      ],
      entry_points={
          'console_scripts': [
              'wmbench_train = wmbench.application.train_model:main',
              'wmbench_generate = wmbench.application.generate_texts:main',
              'wmbench_detect = wmbench.application.detect_watermark:main',
              'wmbench_attack = wmbench.application.run_attack:main',
              'wmbench_evaluate = wmbench.application.evaluate_watermarks:main',
              'wmbench_report = wmbench.application.show_report:main',
          ],
      },
      )
