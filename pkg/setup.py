import setuptools

with open("README.md", "r", encoding='utf-8') as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding='utf-8') as fh:
    requirements = [line.strip() for line in fh if line.strip()]

setuptools.setup(
    name='quancontext',
    version="1",
    description="Simulation of a contextuality test with one clean qubit",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    package_data={'quancontext.nmr': ['data/*.txt']},
    install_requires=requirements,
    entry_points={'console_scripts': ['quancontext=quancontext.cli:run']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
)
