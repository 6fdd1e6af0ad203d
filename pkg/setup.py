from setuptools import setup


setup(
    name="cr-workbench",
    version="0.1.0",
    description="Exact computations with CR algebras and the su(2) model hypersurfaces",
    packages=["cr_workbench", "cr_workbench.utils"],
    package_data={"cr_workbench": ["schema/*.yaml", "data/*.json", "data/*.yaml"]},
    python_requires=">=3.8",
    install_requires=["sympy>=1.12", "jsonpointer>=2.0", "jsonschema>=3.2.0", "pyyaml>=5.1.1"],
    entry_points={"console_scripts": ["crwb = cr_workbench.cli:main"]},
)
