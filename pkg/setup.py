from setuptools import setup, find_packages

setup(
    name='dephasing',
    version='1.0.0',
    description='Exact pure dephasing of two qubits in independent thermal baths and their concurrence',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    keywords='qubit decoherence dephasing spin-boson concurrence entanglement',
    packages=find_packages(exclude=['tests']),
    scripts=[
        'dephasing/scripts/dephasing_run.py',
        ],
    package_data={'dephasing': ['default_parameters.json']},
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'scipy',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    include_package_data=True,
    zip_safe=False)
