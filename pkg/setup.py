# Copyright 2021 AlQuraishi Laboratory
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from setuptools import setup, find_packages


setup(
    name='orienthull',
    version='1.0.0',
    description='Hull and geodetic sets of oriented graphs',
    license='Apache License, Version 2.0',
    packages=find_packages(exclude=["tests", "scripts"]),
    install_requires=[
        'ml-collections',
        'networkx',
        'numpy',
        'scipy',
        'tqdm',
        'typing-extensions',
    ],
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
