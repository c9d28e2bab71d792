import setuptools

setuptools.setup(
    name='canonical_bases',
    version='0.1',
    include_package_data=True,
    packages=setuptools.find_packages(exclude=["tests", "examples*"]),
    install_requires=["numpy", "pandas", "tqdm", "joblib", "sympy"],
    extras_require={"test": ["pytest"]}
)
