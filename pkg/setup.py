from setuptools import setup, find_packages


classifiers = [
    'Development Status :: 3 - Alpha',
    'Intended Audience :: Education',
    'Intended Audience :: Science/Research',
    'Operating System :: OS Independent',
    'License :: OSI Approved :: Apache Software License',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
]

setup(
    name='kaccrystal',
    version='0.1.0',
    description='Crystal bases of Kac modules over the quantum superalgebra U_q(gl(m|n)), with an RSK bridge and '
                'an embedding of hook tableaux.',
    long_description=open('README.md').read() + '\n\n' +
    open('CHANGELOG.txt').read(),
    long_description_content_type="text/markdown",
    url='',
    license='Apache-2.0',
    classifiers=classifiers,
    keywords='crystal base kac module quantum superalgebra gl(m|n) rsk tableaux',
    packages=find_packages(),
    install_requires=['networkx'],
    include_package_data=True,
    python_requires='>=3.8',
    entry_points={
        'console_scripts': ['kaccrystal=kaccrystal.cli:main'],
    },
    extras_require={
        "igraph": ["igraph>=0.11.0"],
        "all": ["igraph>=0.11.0"]
    }
)
