import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="dapoly",
    version="0.1.0",
    author="dapoly contributors",
    description="Möbius and f-polynomials of dehyperplane arrangements, with exact face enumeration",
    license="MIT",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=setuptools.find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=["networkx==3.1", "docopt-ng==0.9.0"],
    extras_require={
        "test": [
            "pytest==7.4.4",
            "pytest-socket==0.7.0",
            "Faker==19.13.0",
            "hypothesis==6.88.1",
        ]
    },
    entry_points={"console_scripts": ["dapoly = dapoly.cli:main"]},
)
