import os

from setuptools import find_namespace_packages, setup

cwd = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(cwd, "README.md"), encoding="utf-8") as fd:
    long_description = fd.read()

setup(
    # published project name
    name="q2lab",
    # from dev to release
    #   bumpversion release
    # to next version
    #   bump patch/minor/major
    version="0.1.0.dev0",
    # one-line description for the summary field
    description="Simulation lab of the Q_2-free process on the hypercube.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: MacOS",
        "Operating System :: Microsoft :: Windows",
        "Operating System :: POSIX :: Linux",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
    ],
    keywords="random graph process, hypercube, saturation, monte carlo",
    package_dir={"": "src"},
    packages=find_namespace_packages(where="src"),
    # math.comb
    python_requires=">=3.8",
    # other packages the project depends on to run
    #   install_requires -> necessity
    #   requirements.txt
    install_requires=[
        "click",
        "coloredlogs",
        "dask[distributed]",
        "distributed",
        "humanfriendly",
        "numpy>=1.17",
        "pandas",
        "scipy",
        "xxhash",
    ],
    # additional groups of dependencies here for the "extras" syntax
    extras_require={"test": ["pytest"]},
    # data files included in packages
    package_data={},
    # data files outside of packages, installed into '<sys.prefix>/my_data'
    data_files=[],
    # executable scripts
    entry_points={"console_scripts": ["q2lab=q2lab.cli.main:main"]},
    zip_safe=True,
)
